//! Root systems, weight lattices and Weyl groups for the three complexified
//! Lie algebras `sl(3)`, `sl(4)`, `sp(4)` together with the compact /
//! noncompact labeling induced by the real forms `su(2,1)`, `su(3,1)`,
//! `sp(4,R)` (maximal compacts `U(2)`, `U(3)`, `U(2)`).
//!
//! Weights are stored in the fundamental-weight basis, indexed the way the
//! representation-theory literature for these groups labels them: for the
//! special unitary groups `lambda_1` is the highest weight of the standard
//! representation and `lambda_k` of its k-th exterior power; for `sp(4)`
//! `lambda_1` is the standard 4-dimensional representation and `lambda_2`
//! the 5-dimensional one. The epsilon-coordinate realization (expressions
//! like `e2 - e1`) is kept alongside for construction and display.
//!
//! The pairing is the Killing form rescaled so short roots have squared
//! length 2.

use crate::linalg::{self, Mat};
use crate::scalar::{Rat, Scalar};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// The three real groups of interest.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum GroupTag {
    Su21,
    Su31,
    Sp4,
}

impl GroupTag {
    pub const ALL: [GroupTag; 3] = [GroupTag::Su21, GroupTag::Su31, GroupTag::Sp4];

    pub fn rank(self) -> usize {
        match self {
            GroupTag::Su21 | GroupTag::Sp4 => 2,
            GroupTag::Su31 => 3,
        }
    }

    /// Complex dimension of the associated Hermitian symmetric domain.
    pub fn domain_dim(self) -> usize {
        match self {
            GroupTag::Su21 => 2,
            GroupTag::Su31 | GroupTag::Sp4 => 3,
        }
    }

    pub fn parse(s: &str) -> Option<GroupTag> {
        match s.to_ascii_uppercase().as_str() {
            "SU21" | "SU(2,1)" => Some(GroupTag::Su21),
            "SU31" | "SU(3,1)" => Some(GroupTag::Su31),
            "SP4" | "SP(4)" | "SP4R" => Some(GroupTag::Sp4),
            _ => None,
        }
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupTag::Su21 => write!(f, "SU(2,1)"),
            GroupTag::Su31 => write!(f, "SU(3,1)"),
            GroupTag::Sp4 => write!(f, "Sp(4)"),
        }
    }
}

/// A weight in fundamental-weight coordinates (length = rank).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight<S: Scalar = Rat> {
    pub coords: Vec<S>,
}

impl<S: Scalar> Weight<S> {
    pub fn new(coords: Vec<S>) -> Self {
        Weight { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![S::zero(); rank],
        }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight {
            coords: coords.iter().map(|&c| S::from_int(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Weight {
            coords: self.coords.iter().map(|a| S::zero() - a.clone()).collect(),
        }
    }

    pub fn scale(&self, k: &S) -> Self {
        Weight {
            coords: self.coords.iter().map(|a| a.clone() * k.clone()).collect(),
        }
    }

    /// All coordinates nonnegative integers.
    pub fn is_dominant_integral(&self) -> bool {
        self.coords
            .iter()
            .all(|c| matches!(c.to_int(), Some(n) if n >= 0))
    }
}

impl<S: Scalar> fmt::Display for Weight<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A root, with both coordinate expressions and its compactness flag.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Root<S: Scalar = Rat> {
    pub weight: Weight<S>,
    pub eps: Vec<S>,
    pub compact: bool,
}

impl<S: Scalar> Root<S> {
    pub fn negate(&self) -> Self {
        Root {
            weight: self.weight.neg(),
            eps: self.eps.iter().map(|a| S::zero() - a.clone()).collect(),
            compact: self.compact,
        }
    }
}

impl<S: Scalar> fmt::Display for Root<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.eps.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let n = c.to_int().unwrap_or(0);
            if n < 0 {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            if n.abs() != 1 {
                write!(f, "{}", n.abs())?;
            }
            write!(f, "e{}", i + 1)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The full exact root-system data of one group.
#[derive(Clone, Debug)]
pub struct RootSystem<S: Scalar = Rat> {
    pub group: GroupTag,
    pub rank: usize,
    pub simple_roots: Vec<Root<S>>,
    pub positive_roots: Vec<Root<S>>,
    /// Positive roots followed by their negatives.
    pub all_roots: Vec<Root<S>>,
    /// Fundamental weights in their own basis (unit vectors), kept for the
    /// record; `fw_eps` carries the epsilon realization.
    pub fundamental_weights: Vec<Weight<S>>,
    pub fw_eps: Vec<Vec<S>>,
    pub rho: Weight<S>,
    /// Gram matrix of the fundamental weights: the pairing on coordinates.
    pub cartan_pairing: Mat<S>,
    pub pplus_roots: Vec<Root<S>>,
    pub pminus_roots: Vec<Root<S>>,
    /// Values `lambda_i(E)` of the canonical grading element.
    pub e_fund: Vec<S>,
    /// The grading element as a Cartan vector in epsilon coordinates.
    pub e_eps: Vec<S>,
    /// Inverse of the matrix whose column j is `alpha_j` in fundamental
    /// coordinates; converts fundamental coordinates of a root-lattice
    /// element to simple-root coordinates.
    fund_to_simple: Mat<S>,
    /// Converts pairings against simple coroots into fundamental coords.
    pair_to_fund: Mat<S>,
}

fn eps_dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    linalg::dot(a, b)
}

fn coroot_pair_eps<S: Scalar>(v: &[S], alpha: &[S]) -> S {
    let two = S::from_int(2);
    two * eps_dot(v, alpha) / eps_dot(alpha, alpha)
}

impl<S: Scalar> RootSystem<S> {
    /// Pairing of two weights via the Gram matrix.
    pub fn ip(&self, a: &Weight<S>, b: &Weight<S>) -> S {
        let gb = linalg::mat_vec(&self.cartan_pairing, &b.coords);
        linalg::dot(&a.coords, &gb)
    }

    /// `<mu, alpha_vee>` for a root given by its weight coordinates.
    pub fn pair_coroot(&self, mu: &Weight<S>, alpha: &Weight<S>) -> S {
        let two = S::from_int(2);
        two * self.ip(mu, alpha) / self.ip(alpha, alpha)
    }

    /// Reflection of `mu` in the hyperplane of `alpha`.
    pub fn reflect(&self, mu: &Weight<S>, alpha: &Weight<S>) -> Weight<S> {
        let c = self.pair_coroot(mu, alpha);
        mu.sub(&alpha.scale(&c))
    }

    /// Fundamental coordinates of an epsilon-space vector (for the unitary
    /// groups the vector is first projected to trace zero).
    pub fn fund_coords_of_eps(&self, v: &[S]) -> Weight<S> {
        let pairs: Vec<S> = self
            .simple_roots
            .iter()
            .map(|a| coroot_pair_eps(v, &a.eps))
            .collect();
        Weight::new(linalg::mat_vec(&self.pair_to_fund, &pairs))
    }

    /// Epsilon realization (trace-zero representative for the unitary
    /// groups) of a weight.
    pub fn eps_of_weight(&self, mu: &Weight<S>) -> Vec<S> {
        let m = self.fw_eps[0].len();
        let mut out = vec![S::zero(); m];
        for (c, fw) in mu.coords.iter().zip(&self.fw_eps) {
            for (o, f) in out.iter_mut().zip(fw) {
                *o = o.clone() + c.clone() * f.clone();
            }
        }
        out
    }

    /// Simple-root coordinates of a root-lattice element.
    pub fn simple_coords(&self, mu: &Weight<S>) -> Vec<S> {
        linalg::mat_vec(&self.fund_to_simple, &mu.coords)
    }

    /// Height of `hw - mu` when it lies in the nonnegative root cone.
    pub fn height_below(&self, hw: &Weight<S>, mu: &Weight<S>) -> Option<i64> {
        let d = self.simple_coords(&hw.sub(mu));
        let mut h = 0;
        for c in d {
            let n = c.to_int()?;
            if n < 0 {
                return None;
            }
            h += n;
        }
        Some(h)
    }

    /// Evaluation of the canonical grading element on a weight.
    pub fn grade(&self, mu: &Weight<S>) -> S {
        linalg::dot(&mu.coords, &self.e_fund)
    }

    /// Evaluation of the grading element on a root.
    pub fn grade_root(&self, alpha: &Root<S>) -> S {
        eps_dot(&alpha.eps, &self.e_eps)
    }
}

struct RawData {
    simple: Vec<Vec<i64>>,
    positive: Vec<Vec<i64>>,
    fw: Vec<Vec<(i64, i64)>>,
    e: Vec<(i64, i64)>,
    /// Compactness predicate on an integer epsilon root vector.
    compact: fn(&[i64]) -> bool,
}

fn raw(group: GroupTag) -> RawData {
    // Unitary conventions follow the epsilon realization with simple roots
    // e_{i+1} - e_i; the compact block sits in the leading coordinates.
    match group {
        GroupTag::Su21 => RawData {
            simple: vec![vec![-1, 1, 0], vec![0, -1, 1]],
            positive: vec![vec![-1, 1, 0], vec![0, -1, 1], vec![-1, 0, 1]],
            fw: vec![
                vec![(-1, 3), (-1, 3), (2, 3)],
                vec![(-2, 3), (1, 3), (1, 3)],
            ],
            e: vec![(-1, 3), (-1, 3), (2, 3)],
            compact: |r| r[2] == 0,
        },
        GroupTag::Su31 => RawData {
            simple: vec![vec![-1, 1, 0, 0], vec![0, -1, 1, 0], vec![0, 0, -1, 1]],
            positive: vec![
                vec![-1, 1, 0, 0],
                vec![0, -1, 1, 0],
                vec![0, 0, -1, 1],
                vec![-1, 0, 1, 0],
                vec![0, -1, 0, 1],
                vec![-1, 0, 0, 1],
            ],
            fw: vec![
                vec![(-1, 4), (-1, 4), (-1, 4), (3, 4)],
                vec![(-1, 2), (-1, 2), (1, 2), (1, 2)],
                vec![(-3, 4), (1, 4), (1, 4), (1, 4)],
            ],
            e: vec![(-1, 4), (-1, 4), (-1, 4), (3, 4)],
            compact: |r| r[3] == 0,
        },
        GroupTag::Sp4 => RawData {
            simple: vec![vec![1, -1], vec![0, 2]],
            positive: vec![vec![1, -1], vec![0, 2], vec![1, 1], vec![2, 0]],
            fw: vec![vec![(1, 1), (0, 1)], vec![(1, 1), (1, 1)]],
            e: vec![(1, 2), (1, 2)],
            compact: |r| (r[0] == 1 && r[1] == -1) || (r[0] == -1 && r[1] == 1),
        },
    }
}

/// Builds the full root system of a group, with the compact/noncompact and
/// `p^+/p^-` labeling fixed by its maximal compact subgroup.
pub fn build_root_system<S: Scalar>(group: GroupTag) -> RootSystem<S> {
    let data = raw(group);
    let rank = group.rank();
    let to_s = |v: &[i64]| -> Vec<S> { v.iter().map(|&x| S::from_int(x)).collect() };
    let fw_eps: Vec<Vec<S>> = data
        .fw
        .iter()
        .map(|row| row.iter().map(|&(n, d)| S::from_ratio(n, d)).collect())
        .collect();
    let e_eps: Vec<S> = data.e.iter().map(|&(n, d)| S::from_ratio(n, d)).collect();

    let simple_eps: Vec<Vec<S>> = data.simple.iter().map(|v| to_s(v)).collect();
    // Matrix of coroot pairings of the fundamental weights against the simple
    // roots; its inverse converts pairings into fundamental coordinates.
    let mut pair_mat: Mat<S> = vec![vec![S::zero(); rank]; rank];
    for (j, a) in simple_eps.iter().enumerate() {
        for (i, fw) in fw_eps.iter().enumerate() {
            pair_mat[j][i] = coroot_pair_eps(fw, a);
        }
    }
    let pair_to_fund = linalg::invert(&pair_mat).expect("fundamental weights form a basis");

    let fund_of = |v: &[S]| -> Weight<S> {
        let pairs: Vec<S> = simple_eps.iter().map(|a| coroot_pair_eps(v, a)).collect();
        Weight::new(linalg::mat_vec(&pair_to_fund, &pairs))
    };

    let mk_root = |v: &[i64]| -> Root<S> {
        let eps = to_s(v);
        Root {
            weight: fund_of(&eps),
            compact: (data.compact)(v),
            eps,
        }
    };

    let simple_roots: Vec<Root<S>> = data.simple.iter().map(|v| mk_root(v)).collect();
    let positive_roots: Vec<Root<S>> = data.positive.iter().map(|v| mk_root(v)).collect();
    let mut all_roots = positive_roots.clone();
    all_roots.extend(positive_roots.iter().map(Root::negate));

    let mut gram: Mat<S> = vec![vec![S::zero(); rank]; rank];
    for i in 0..rank {
        for j in 0..rank {
            gram[i][j] = eps_dot(&fw_eps[i], &fw_eps[j]);
        }
    }

    let mut simple_in_fund: Mat<S> = vec![vec![S::zero(); rank]; rank];
    for (j, a) in simple_roots.iter().enumerate() {
        for i in 0..rank {
            simple_in_fund[i][j] = a.weight.coords[i].clone();
        }
    }
    let fund_to_simple = linalg::invert(&simple_in_fund).expect("simple roots form a basis");

    let rho = {
        let mut acc = Weight::zero(rank);
        for fw in 0..rank {
            let mut unit = Weight::zero(rank);
            unit.coords[fw] = S::one();
            acc = acc.add(&unit);
        }
        acc
    };

    let e_fund: Vec<S> = fw_eps.iter().map(|fw| eps_dot(fw, &e_eps)).collect();

    let one = S::one();
    let pplus_roots: Vec<Root<S>> = all_roots
        .iter()
        .filter(|r| !r.compact && eps_dot(&r.eps, &e_eps) == one)
        .cloned()
        .collect();
    let pminus_roots: Vec<Root<S>> = pplus_roots.iter().map(Root::negate).collect();

    RootSystem {
        group,
        rank,
        simple_roots,
        positive_roots,
        all_roots,
        fundamental_weights: (0..rank)
            .map(|i| {
                let mut w = Weight::zero(rank);
                w.coords[i] = S::one();
                w
            })
            .collect(),
        fw_eps,
        rho,
        cartan_pairing: gram,
        pplus_roots,
        pminus_roots,
        e_fund,
        e_eps,
        fund_to_simple,
        pair_to_fund,
    }
}

/// The Weyl group as explicit orthogonal transformations of the
/// fundamental-coordinate space.
#[derive(Clone, Debug)]
pub struct WeylGroup<S: Scalar = Rat> {
    pub elements: Vec<Mat<S>>,
    /// `(-1)^length` per element, aligned with `elements`.
    pub signs: Vec<i8>,
}

impl<S: Scalar> WeylGroup<S> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn apply(&self, idx: usize, mu: &Weight<S>) -> Weight<S> {
        Weight::new(linalg::mat_vec(&self.elements[idx], &mu.coords))
    }

    /// Orbit of a weight, deduplicated.
    pub fn orbit(&self, mu: &Weight<S>) -> Vec<Weight<S>> {
        let set: BTreeSet<Weight<S>> = (0..self.order()).map(|i| self.apply(i, mu)).collect();
        set.into_iter().collect()
    }
}

fn closure<S: Scalar>(generators: Vec<Mat<S>>, rank: usize) -> (Vec<Mat<S>>, Vec<i8>) {
    let id = linalg::identity::<S>(rank);
    let mut elems = vec![id.clone()];
    let mut signs = vec![1i8];
    let mut frontier = vec![0usize];
    while let Some(idx) = frontier.pop() {
        let m = elems[idx].clone();
        let sign = signs[idx];
        for g in &generators {
            let next = linalg::mat_mul(g, &m);
            if !elems.contains(&next) {
                elems.push(next);
                signs.push(-sign);
                frontier.push(elems.len() - 1);
            }
        }
    }
    (elems, signs)
}

/// Generates the Weyl group from the simple reflections; `signs[i]` is the
/// determinant `(-1)^length` of `elements[i]`.
pub fn weyl_group<S: Scalar>(rs: &RootSystem<S>) -> WeylGroup<S> {
    let gens: Vec<Mat<S>> = rs
        .simple_roots
        .iter()
        .map(|a| reflection_matrix(rs, &a.weight))
        .collect();
    let (elements, signs) = closure(gens, rs.rank);
    WeylGroup { elements, signs }
}

/// Subgroup of the Weyl group generated by an arbitrary set of roots
/// (used for compact Weyl groups of Levi factors).
pub fn reflection_subgroup<S: Scalar>(rs: &RootSystem<S>, roots: &[Weight<S>]) -> WeylGroup<S> {
    let gens: Vec<Mat<S>> = roots.iter().map(|a| reflection_matrix(rs, a)).collect();
    let (elements, signs) = closure(gens, rs.rank);
    WeylGroup { elements, signs }
}

fn reflection_matrix<S: Scalar>(rs: &RootSystem<S>, alpha: &Weight<S>) -> Mat<S> {
    let rank = rs.rank;
    let mut m = vec![vec![S::zero(); rank]; rank];
    for i in 0..rank {
        let mut unit = Weight::zero(rank);
        unit.coords[i] = S::one();
        let img = rs.reflect(&unit, alpha);
        for r in 0..rank {
            m[r][i] = img.coords[r].clone();
        }
    }
    m
}

/// True iff the weight pairs nonnegatively with every simple root.
pub fn dominant_chamber_test<S: Scalar>(rs: &RootSystem<S>, w: &Weight<S>) -> bool {
    rs.simple_roots
        .iter()
        .all(|a| rs.pair_coroot(w, &a.weight) >= S::zero())
}

/// The dominant representative of the Weyl orbit of a weight.
pub fn dominant_representative<S: Scalar>(rs: &RootSystem<S>, mu: &Weight<S>) -> Weight<S> {
    let mut cur = mu.clone();
    loop {
        let mut moved = false;
        for a in &rs.simple_roots {
            if rs.pair_coroot(&cur, &a.weight) < S::zero() {
                cur = rs.reflect(&cur, &a.weight);
                moved = true;
            }
        }
        if !moved {
            return cur;
        }
    }
}
