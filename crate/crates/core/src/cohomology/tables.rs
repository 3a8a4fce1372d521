//! Relative Lie algebra cohomology of the cohomological modules and its
//! Hodge bigrading.
//!
//! For `U = A_q(lambda)` the cohomology is carried by the
//! `(l cap k)`-invariants of the exterior algebra of `l cap p`, shifted by
//! `R = dim(u cap p)`. The bigrading starts from the base point
//! `(|u cap p+|, |u cap p-|)`, walks the exterior algebra split, and adds
//! the Hodge type of the coefficient vector. That vector type is anchored
//! at the top of the twisted Hodge filtration: the pairing vector `nu` sits
//! `nu(E) - min(spec E)` conjugate steps below it. The anchoring convention
//! is the unique one reproducing the classical Hodge types of both the
//! weight-one Eichler-Shimura picture and the Siegel threefold discrete
//! series, and it makes each half-twist of the coefficient system shift the
//! plus-component tables by exactly (1,0).

use crate::cohomology::aq::CohomRep;
use crate::cohomology::parabolic::ThetaParabolic;
use crate::hodge::{twist_spectrum, TwistConstant};
use crate::lie::{reflection_subgroup, Root, RootSystem, Weight};
use crate::reps::{grade_range, Irrep};
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableError {
    #[error("twisted spectrum of the coefficients is not half-integral (eigenvalue {0})")]
    NotHalfIntegral(String),
    #[error("weight {weight} has the wrong parity for twist {twist}")]
    WeightParity { weight: i64, twist: String },
    #[error("top Hodge index ({p_top},{q_top}) leaves the first quadrant")]
    TopIndexNegative { p_top: i64, q_top: i64 },
    #[error("vector depth {depth} exceeds the available range in weight {weight}")]
    DepthOutOfRange { depth: i64, weight: i64 },
}

/// Bigraded dimension table: `(degree, p, q) -> dim`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct HodgeTable {
    pub entries: BTreeMap<(usize, i64, i64), u64>,
}

impl HodgeTable {
    pub fn degree_total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|((d, _, _), _)| *d == i)
            .map(|(_, &m)| m)
            .sum()
    }

    pub fn types_at(&self, i: usize) -> Vec<(i64, i64, u64)> {
        self.entries
            .iter()
            .filter(|((d, _, _), _)| *d == i)
            .map(|(&(_, p, q), &m)| (p, q, m))
            .collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.entries.keys().map(|&(d, _, _)| d).collect();
        ds.dedup();
        ds
    }
}

/// Dimension of the `(l cap k)`-invariants in
/// `Lambda^a(l cap p+) (x) Lambda^b(l cap p-)`, by the alternating Weyl
/// formula over the compact Levi Weyl group.
fn invariant_dim<S: Scalar>(rs: &RootSystem<S>, q: &ThetaParabolic<S>, a: usize, b: usize) -> u64 {
    let wedge = |roots: &[Root<S>], k: usize| -> Vec<Weight<S>> {
        // all k-subsets summed
        let n = roots.len();
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..k).collect();
        if k > n {
            return out;
        }
        loop {
            let mut w = Weight::zero(rs.rank);
            for &i in &idx {
                w = w.add(&roots[i].weight);
            }
            out.push(w);
            // next combination
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if idx[i] != i + n - k {
                    idx[i] += 1;
                    for j in i + 1..k {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    };
    let plus = wedge(&q.l_cap_pplus, a);
    let minus = wedge(&q.l_cap_pminus, b);
    if plus.is_empty() || minus.is_empty() {
        return 0;
    }
    let mut multiset: BTreeMap<Weight<S>, i64> = BTreeMap::new();
    for x in &plus {
        for y in &minus {
            *multiset.entry(x.add(y)).or_insert(0) += 1;
        }
    }
    // alternating sum over the Weyl group of the compact Levi roots
    let lk_roots: Vec<Weight<S>> = q.l_compact.iter().map(|r| r.weight.clone()).collect();
    let wlk = reflection_subgroup(rs, &lk_roots);
    let rho_lk = {
        let positive: Vec<&Weight<S>> = rs.positive_roots.iter().map(|r| &r.weight).collect();
        let mut acc = Weight::zero(rs.rank);
        for r in &q.l_compact {
            if positive.contains(&&r.weight) {
                acc = acc.add(&r.weight);
            }
        }
        acc.scale(&S::from_ratio(1, 2))
    };
    let mut total = 0i64;
    for i in 0..wlk.order() {
        let arg = wlk.apply(i, &rho_lk).sub(&rho_lk);
        total += wlk.signs[i] as i64 * multiset.get(&arg).copied().unwrap_or(0);
    }
    assert!(total >= 0, "invariant dimension must be nonnegative");
    total as u64
}

/// Dimensions of `H^i(g,K; U (x) V)` per degree: `H^{R+j}` carries the
/// invariants of `Lambda^j(l cap p)`.
pub fn gk_cohomology<S: Scalar>(rs: &RootSystem<S>, rep: &CohomRep<S>) -> BTreeMap<usize, u64> {
    let q = &rep.parabolic;
    let np = q.l_cap_pplus.len();
    let nm = q.l_cap_pminus.len();
    let mut out = BTreeMap::new();
    for a in 0..=np {
        for b in 0..=nm {
            let d = invariant_dim(rs, q, a, b);
            if d > 0 {
                *out.entry(q.r + a + b).or_insert(0) += d;
            }
        }
    }
    out
}

/// Hodge type of the coefficient vector of `rep` inside `V{c}` placed in
/// weight `w`: the top of the twisted filtration receives the straight type
/// and the vector sits `nu(E) - min spec` conjugate steps below it.
fn vector_type<S: Scalar>(
    rs: &RootSystem<S>,
    rep: &CohomRep<S>,
    v: &Irrep<S>,
    c: &TwistConstant<S>,
    w: i64,
) -> Result<(i64, i64), TableError> {
    let (e_min, e_max) = grade_range(rs, v);
    let kappa_max = e_max.clone() - c.0.clone();
    let p_top_s = S::from_ratio(w, 2) + kappa_max;
    let Some(p_top) = p_top_s.to_int() else {
        return Err(TableError::WeightParity {
            weight: w,
            twist: c.0.to_string(),
        });
    };
    let q_top = w - p_top;
    if p_top < 0 || q_top < 0 {
        return Err(TableError::TopIndexNegative { p_top, q_top });
    }
    let depth = (rs.grade(&rep.nu) - e_min)
        .to_int()
        .expect("eigenvalues within one representation differ by integers");
    debug_assert!(depth >= 0);
    let p = p_top - depth;
    let q = q_top + depth;
    if p < 0 {
        return Err(TableError::DepthOutOfRange { depth, weight: w });
    }
    Ok((p, q))
}

/// The bigraded cohomology table of `U (x) V{c}` in weight `w`.
pub fn hodge_bigrading<S: Scalar>(
    rs: &RootSystem<S>,
    rep: &CohomRep<S>,
    v: &Irrep<S>,
    c: &TwistConstant<S>,
    w: i64,
) -> Result<HodgeTable, TableError> {
    // reject inconsistent (c, w) pairs up front
    let spec = crate::hodge::e_spectrum(rs, v);
    let tw = twist_spectrum(&spec, c);
    if !tw.half_integral {
        let bad = tw
            .keys
            .keys()
            .find(|k| !k.is_half_int())
            .expect("some key is not half-integral");
        return Err(TableError::NotHalfIntegral(bad.to_string()));
    }
    let (vp, vq) = vector_type(rs, rep, v, c, w)?;
    let q = &rep.parabolic;
    let base_p = q.u_cap_pplus.len() as i64;
    let base_q = q.u_cap_pminus.len() as i64;
    let mut table = HodgeTable::default();
    for a in 0..=q.l_cap_pplus.len() {
        for b in 0..=q.l_cap_pminus.len() {
            let d = invariant_dim(rs, q, a, b);
            if d > 0 {
                let i = q.r + a + b;
                let p = base_p + a as i64 + vp;
                let qq = base_q + b as i64 + vq;
                *table.entries.entry((i, p, qq)).or_insert(0) += d;
            }
        }
    }
    Ok(table)
}

/// A pure-type table entry: the representation carrying it, the degree,
/// the common index `p = q`, and the dimension.
pub type HodgeClassHit<S> = (CohomRep<S>, usize, i64, u64);

/// Scans every cohomological representation for `V{c}` in weight `w` and
/// returns the table entries of pure type `(p, p)`.
pub fn hodge_class_locator<S: Scalar>(
    rs: &RootSystem<S>,
    v: &Irrep<S>,
    c: &TwistConstant<S>,
    w: i64,
) -> Result<Vec<HodgeClassHit<S>>, TableError> {
    let mut out = Vec::new();
    for rep in crate::cohomology::aq::cohomological_reps(rs, v) {
        let table = hodge_bigrading(rs, &rep, v, c, w)?;
        for (&(i, p, q), &m) in &table.entries {
            if p == q && m > 0 {
                out.push((rep.clone(), i, p, m));
            }
        }
    }
    Ok(out)
}
