//! Theta-stable parabolic subalgebras `q = l (+) u` attached to rational
//! points `X` of the compact Cartan, enumerated per chamber of the root
//! hyperplane arrangement up to the Weyl group of the maximal compact.

use crate::lie::{GroupTag, Root, RootSystem, Weight};
use crate::linalg;
use crate::scalar::Scalar;
use std::collections::BTreeMap;

/// A theta-stable parabolic, with every split the cohomology machinery
/// needs precomputed.
#[derive(Clone, Debug)]
pub struct ThetaParabolic<S: Scalar> {
    pub group: GroupTag,
    /// The defining element, as epsilon-coordinate values on the Cartan.
    pub defining_x: Vec<S>,
    /// Roots with positive eigenvalue under `ad(X)`.
    pub u_roots: Vec<Root<S>>,
    /// Roots annihilated by `X` (both signs).
    pub l_roots: Vec<Root<S>>,
    pub u_cap_pplus: Vec<Root<S>>,
    pub u_cap_pminus: Vec<Root<S>>,
    pub l_cap_pplus: Vec<Root<S>>,
    pub l_cap_pminus: Vec<Root<S>>,
    /// Compact roots of the Levi factor (both signs).
    pub l_compact: Vec<Root<S>>,
    /// `dim(u cap p)`.
    pub r: usize,
    /// Sum of the roots in `u cap p`.
    pub two_rho_u_p: Weight<S>,
    /// Half sum of the adapted positive system `Delta(u) u Delta+(l)`.
    pub rho_x: Weight<S>,
}

impl<S: Scalar> ThetaParabolic<S> {
    pub fn is_all_of_g(&self) -> bool {
        self.u_roots.is_empty()
    }

    /// Levi factor contained in the maximal compact.
    pub fn levi_is_compact(&self) -> bool {
        self.l_cap_pplus.is_empty() && self.l_cap_pminus.is_empty()
    }

    /// Sign vector over the full root list; the face fingerprint.
    fn signature(rs: &RootSystem<S>, x: &[S]) -> Vec<i8> {
        rs.all_roots
            .iter()
            .map(|a| {
                let v = linalg::dot(&a.eps, x);
                if v > S::zero() {
                    1
                } else if v < S::zero() {
                    -1
                } else {
                    0
                }
            })
            .collect()
    }
}

fn build_face<S: Scalar>(rs: &RootSystem<S>, x: &[S]) -> ThetaParabolic<S> {
    let mut u_roots = Vec::new();
    let mut l_roots = Vec::new();
    for a in &rs.all_roots {
        let v = linalg::dot(&a.eps, x);
        if v > S::zero() {
            u_roots.push(a.clone());
        } else if v.is_zero() {
            l_roots.push(a.clone());
        }
    }
    let one = S::one();
    let grade = |a: &Root<S>| linalg::dot(&a.eps, &rs.e_eps);
    let u_cap_pplus: Vec<_> = u_roots
        .iter()
        .filter(|a| !a.compact && grade(a) == one)
        .cloned()
        .collect();
    let u_cap_pminus: Vec<_> = u_roots
        .iter()
        .filter(|a| !a.compact && grade(a) == S::zero() - S::one())
        .cloned()
        .collect();
    let l_cap_pplus: Vec<_> = l_roots
        .iter()
        .filter(|a| !a.compact && grade(a) == one)
        .cloned()
        .collect();
    let l_cap_pminus: Vec<_> = l_roots
        .iter()
        .filter(|a| !a.compact && grade(a) == S::zero() - S::one())
        .cloned()
        .collect();
    let l_compact: Vec<_> = l_roots.iter().filter(|a| a.compact).cloned().collect();

    let mut two_rho_u_p = Weight::zero(rs.rank);
    for a in u_cap_pplus.iter().chain(&u_cap_pminus) {
        two_rho_u_p = two_rho_u_p.add(&a.weight);
    }

    // Adapted positive system: Delta(u) together with the standard-positive
    // roots of the Levi.
    let positive_set: Vec<&Weight<S>> = rs.positive_roots.iter().map(|a| &a.weight).collect();
    let mut rho_sum = Weight::zero(rs.rank);
    for a in &u_roots {
        rho_sum = rho_sum.add(&a.weight);
    }
    for a in &l_roots {
        if positive_set.contains(&&a.weight) {
            rho_sum = rho_sum.add(&a.weight);
        }
    }
    let rho_x = rho_sum.scale(&S::from_ratio(1, 2));

    let r = u_cap_pplus.len() + u_cap_pminus.len();
    ThetaParabolic {
        group: rs.group,
        defining_x: x.to_vec(),
        u_roots,
        l_roots,
        u_cap_pplus,
        u_cap_pminus,
        l_cap_pplus,
        l_cap_pminus,
        l_compact,
        r,
        two_rho_u_p,
        rho_x,
    }
}

/// Epsilon-space matrices of the compact Weyl group (generated by the
/// reflections in the compact simple roots).
fn compact_weyl_eps<S: Scalar>(rs: &RootSystem<S>) -> Vec<linalg::Mat<S>> {
    let dim = rs.e_eps.len();
    let reflect = |alpha: &Root<S>| -> linalg::Mat<S> {
        let mut m = linalg::identity::<S>(dim);
        let norm = linalg::dot(&alpha.eps, &alpha.eps);
        for col in 0..dim {
            // image of unit vector e_col
            let coeff = S::from_int(2) * alpha.eps[col].clone() / norm.clone();
            for row in 0..dim {
                m[row][col] = m[row][col].clone() - coeff.clone() * alpha.eps[row].clone();
            }
        }
        m
    };
    let gens: Vec<linalg::Mat<S>> = rs
        .simple_roots
        .iter()
        .filter(|a| a.compact)
        .map(reflect)
        .collect();
    let mut elems = vec![linalg::identity::<S>(dim)];
    let mut frontier = vec![0usize];
    while let Some(i) = frontier.pop() {
        let m = elems[i].clone();
        for g in &gens {
            let next = linalg::mat_mul(g, &m);
            if !elems.contains(&next) {
                elems.push(next);
                frontier.push(elems.len() - 1);
            }
        }
    }
    elems
}

/// One representative per chamber of the arrangement `{alpha(X) = 0}` in the
/// compact Cartan, up to the compact Weyl group. Includes `q = g` (from
/// `X = 0`). Faces are found by exhaustive integer sampling of the Cartan;
/// the grid is wide enough that every face of these rank <= 3 arrangements
/// contains a sample point.
pub fn enumerate_parabolics<S: Scalar>(rs: &RootSystem<S>) -> Vec<ThetaParabolic<S>> {
    enumerate_parabolics_with_bound(rs, 3)
}

pub fn enumerate_parabolics_with_bound<S: Scalar>(
    rs: &RootSystem<S>,
    bound: i64,
) -> Vec<ThetaParabolic<S>> {
    let dim = rs.e_eps.len();
    let wk = compact_weyl_eps(rs);
    let mut canonical: BTreeMap<Vec<i8>, Vec<S>> = BTreeMap::new();

    let mut idx = vec![-bound; dim];
    loop {
        let x: Vec<S> = idx.iter().map(|&c| S::from_int(c)).collect();
        // canonical representative: lexicographically largest signature over
        // the compact Weyl orbit (puts compact-positive evaluations first)
        let mut best_sig: Option<Vec<i8>> = None;
        let mut best_x: Option<Vec<S>> = None;
        for w in &wk {
            let wx = linalg::mat_vec(w, &x);
            let sig = ThetaParabolic::signature(rs, &wx);
            if best_sig.as_ref().is_none_or(|b| sig > *b) {
                best_sig = Some(sig);
                best_x = Some(wx);
            }
        }
        let (sig, wx) = (best_sig.unwrap(), best_x.unwrap());
        canonical.entry(sig).or_insert(wx);

        let mut j = 0;
        loop {
            if j == dim {
                break;
            }
            idx[j] += 1;
            if idx[j] <= bound {
                break;
            }
            idx[j] = -bound;
            j += 1;
        }
        if j == dim {
            break;
        }
    }

    canonical
        .into_values()
        .map(|x| build_face(rs, &x))
        .collect()
}
