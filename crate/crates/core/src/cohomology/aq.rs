//! Cohomological modules `A_q(lambda)`: admissibility, minimal K-types,
//! infinitesimal characters, and the classification of which modules pair
//! with a given finite-dimensional representation.

use crate::cohomology::parabolic::{enumerate_parabolics, ThetaParabolic};
use crate::lie::{dominant_representative, GroupTag, RootSystem, Weight};
use crate::reps::{extremal_weights, Irrep};
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AqError {
    #[error("lambda {lambda} is not orthogonal to the Levi root {root}")]
    NotLeviCentral { lambda: String, root: String },
    #[error("lambda {lambda} pairs negatively with the nilradical root {root}")]
    NotAdmissible { lambda: String, root: String },
    #[error("lambda {0} is not in the weight lattice")]
    NotIntegral(String),
}

/// Structured name of a cohomological representation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Label {
    /// Discrete series, identified by the splitting of `u cap p`.
    DiscreteSeries {
        p_plus: usize,
        p_minus: usize,
    },
    /// Non-tempered module of the unitary groups; `(r, s)` is the splitting
    /// of `u cap p`, `twist` the coefficient-twist level.
    J {
        r: usize,
        s: usize,
        twist: i64,
    },
    /// Saito-Kurokawa type module of `Sp(4,R)`.
    Sigma {
        k: i64,
    },
    /// The other non-tempered family of `Sp(4,R)`.
    Omega {
        ell: i64,
        plus: bool,
    },
    Trivial,
}

impl Label {
    /// Deterministic presentation order: discrete series by splitting,
    /// then the non-tempered families, the trivial representation last.
    pub fn sort_key(&self) -> (u8, i64, i64, i64) {
        match self {
            Label::DiscreteSeries { p_plus, p_minus } => (0, *p_plus as i64, *p_minus as i64, 0),
            Label::J { r, s, twist } => (1, *r as i64, *s as i64, *twist),
            Label::Sigma { k } => (2, *k, 0, 0),
            Label::Omega { ell, plus } => (3, *ell, i64::from(!plus), 0),
            Label::Trivial => (4, 0, 0, 0),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::DiscreteSeries { p_plus, p_minus } => write!(f, "DS({p_plus},{p_minus})"),
            Label::J { r, s, twist } => {
                if *twist == 0 {
                    write!(f, "J({r},{s})")
                } else {
                    write!(f, "J({r},{s})^{twist}")
                }
            }
            Label::Sigma { k } => write!(f, "sigma_{k}"),
            Label::Omega { ell, plus } => {
                write!(f, "omega_{ell}{}", if *plus { "+" } else { "-" })
            }
            Label::Trivial => write!(f, "trivial"),
        }
    }
}

/// Minimal K-type in the group-specific coordinates of the classical
/// tables. The central parameters are stored exactly; for twisted modules
/// they can be non-integral rationals, which is why they are kept as
/// scalars rather than integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum KType<S: Scalar> {
    /// `U(2)`-type of `SU(2,1)`: symmetric power `k` and central parameter
    /// `l`, normalized so the tangent-space type is `(1,1)`.
    Su21 { k: u64, l: S },
    /// `U(3)`-type of `SU(3,1)`: an `SU(3)` Dynkin label and a central
    /// parameter `n`, normalized so `(st, 1)` is a tangent-space type.
    Su31 { dynkin: (u64, u64), n: S },
    /// `U(2)`-type of `Sp(4,R)`: `det^a (x) Sym^b`.
    Sp4 { det_power: i64, sym_degree: u64 },
}

impl<S: Scalar> fmt::Display for KType<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KType::Su21 { k, l } => write!(f, "({k},{l})"),
            KType::Su31 { dynkin, n } => write!(f, "(({},{}),{n})", dynkin.0, dynkin.1),
            KType::Sp4 {
                det_power,
                sym_degree,
            } => write!(f, "det^{det_power} Sym^{sym_degree}"),
        }
    }
}

/// A cohomological representation.
#[derive(Clone, Debug)]
pub struct CohomRep<S: Scalar> {
    pub group: GroupTag,
    pub label: Label,
    pub parabolic: ThetaParabolic<S>,
    pub lambda: Weight<S>,
    /// Weight of the coefficient vector the cohomology pairs with; equals
    /// `-lambda`.
    pub nu: Weight<S>,
    /// `lambda + 2 rho(u cap p)` as a torus weight.
    pub min_k_weight: Weight<S>,
    pub min_k_type: KType<S>,
    /// Dominant representative of `lambda + rho_X`.
    pub inf_char: Weight<S>,
}

impl<S: Scalar> CohomRep<S> {
    pub fn is_trivial_rep(&self) -> bool {
        self.label == Label::Trivial
    }
}

fn restrict_k_type<S: Scalar>(rs: &RootSystem<S>, mu: &Weight<S>) -> KType<S> {
    let eps = rs.eps_of_weight(mu);
    match rs.group {
        GroupTag::Su21 => {
            let mut a = eps[0].clone() - eps[2].clone();
            let mut b = eps[1].clone() - eps[2].clone();
            if a < b {
                std::mem::swap(&mut a, &mut b);
            }
            let k = (a.clone() - b.clone()).to_int().expect("integral K-weight") as u64;
            let l = (S::zero() - (a + b)) / S::from_int(3);
            KType::Su21 { k, l }
        }
        GroupTag::Su31 => {
            let mut d: Vec<S> = (0..3).map(|i| eps[i].clone() - eps[3].clone()).collect();
            let n = (d[0].clone() + d[1].clone() + d[2].clone()) / S::from_int(4);
            d.sort();
            d.reverse();
            let a1 = (d[0].clone() - d[1].clone()).to_int().expect("integral") as u64;
            let a2 = (d[1].clone() - d[2].clone()).to_int().expect("integral") as u64;
            KType::Su31 {
                dynkin: (a1, a2),
                n,
            }
        }
        GroupTag::Sp4 => {
            let mut m1 = eps[0].to_int().expect("integral K-weight");
            let mut m2 = eps[1].to_int().expect("integral K-weight");
            if m1 < m2 {
                std::mem::swap(&mut m1, &mut m2);
            }
            KType::Sp4 {
                det_power: m2,
                sym_degree: (m1 - m2) as u64,
            }
        }
    }
}

fn resolve_label<S: Scalar>(
    rs: &RootSystem<S>,
    q: &ThetaParabolic<S>,
    lambda: &Weight<S>,
    inf_char: &Weight<S>,
) -> Label {
    if q.is_all_of_g() {
        return Label::Trivial;
    }
    if q.levi_is_compact() {
        return Label::DiscreteSeries {
            p_plus: q.u_cap_pplus.len(),
            p_minus: q.u_cap_pminus.len(),
        };
    }
    match rs.group {
        GroupTag::Su21 | GroupTag::Su31 => {
            // twist level of the family: the coefficient system pairing
            // with this module has dual highest weight inf_char - rho
            let coeff = inf_char.sub(&rs.rho);
            let twist: i64 = coeff
                .coords
                .iter()
                .map(|c| c.to_int().unwrap_or(0).max(0))
                .sum();
            Label::J {
                r: q.u_cap_pplus.len(),
                s: q.u_cap_pminus.len(),
                twist,
            }
        }
        GroupTag::Sp4 => {
            let eps = rs.eps_of_weight(lambda);
            // Levi with the short noncompact pair: Saito-Kurokawa family;
            // with a long pair: the omega family.
            let short_levi = q
                .l_cap_pplus
                .iter()
                .any(|a| rs.ip(&a.weight, &a.weight) == S::from_int(2));
            if short_levi {
                let a = eps[0].to_int().expect("sigma parameter");
                Label::Sigma { k: a + 3 }
            } else {
                let a = eps[0]
                    .to_int()
                    .expect("omega parameter")
                    .abs()
                    .max(eps[1].to_int().expect("omega parameter").abs());
                Label::Omega {
                    ell: a + 2,
                    plus: q.u_cap_pplus.len() > q.u_cap_pminus.len(),
                }
            }
        }
    }
}

/// Builds `A_q(lambda)`, validating that `lambda` extends to a character of
/// the Levi and satisfies the nilradical positivity condition.
pub fn aq_module<S: Scalar>(
    rs: &RootSystem<S>,
    q: &ThetaParabolic<S>,
    lambda: &Weight<S>,
) -> Result<CohomRep<S>, AqError> {
    if !lambda.coords.iter().all(|c| c.is_int()) {
        return Err(AqError::NotIntegral(lambda.to_string()));
    }
    for beta in &q.l_roots {
        if !rs.ip(lambda, &beta.weight).is_zero() {
            return Err(AqError::NotLeviCentral {
                lambda: lambda.to_string(),
                root: beta.to_string(),
            });
        }
    }
    for alpha in &q.u_roots {
        if rs.pair_coroot(lambda, &alpha.weight) < S::zero() {
            return Err(AqError::NotAdmissible {
                lambda: lambda.to_string(),
                root: alpha.to_string(),
            });
        }
    }
    let min_k_weight = lambda.add(&q.two_rho_u_p);
    let inf_char = dominant_representative(rs, &lambda.add(&q.rho_x));
    Ok(CohomRep {
        group: rs.group,
        label: resolve_label(rs, q, lambda, &inf_char),
        parabolic: q.clone(),
        lambda: lambda.clone(),
        nu: lambda.neg(),
        min_k_weight: min_k_weight.clone(),
        min_k_type: restrict_k_type(rs, &min_k_weight),
        inf_char,
    })
}

/// The coefficient vector a face pairs with: the extremal weight of `V`
/// that is antidominant for the nilradical and central for the Levi, if
/// one exists.
fn pairing_vector<S: Scalar>(
    rs: &RootSystem<S>,
    q: &ThetaParabolic<S>,
    v: &Irrep<S>,
) -> Option<Weight<S>> {
    let mut found: Option<Weight<S>> = None;
    for nu in extremal_weights(rs, v) {
        let anti = q
            .u_roots
            .iter()
            .all(|a| rs.pair_coroot(&nu, &a.weight) <= S::zero());
        if !anti {
            continue;
        }
        let central = q.l_roots.iter().all(|b| rs.ip(&nu, &b.weight).is_zero());
        if !central {
            continue;
        }
        match &found {
            None => found = Some(nu),
            Some(prev) => assert_eq!(prev, &nu, "pairing vector must be unique"),
        }
    }
    found
}

/// All cohomological representations pairing with `V`: per theta-stable
/// face, the coinvariants `V/uV` must be a one-dimensional Levi character,
/// which singles out an extremal weight `nu`; the module is `A_q(-nu)`.
/// Distinct faces realizing the same module (same minimal K-type and
/// infinitesimal character) are merged.
pub fn cohomological_reps<S: Scalar>(rs: &RootSystem<S>, v: &Irrep<S>) -> Vec<CohomRep<S>> {
    assert_eq!(rs.group, v.group);
    // the canonical form of a K-type highest weight under the compact Weyl
    // group, so that conjugate faces merge into one module
    let compact_roots: Vec<Weight<S>> = rs
        .all_roots
        .iter()
        .filter(|a| a.compact)
        .map(|a| a.weight.clone())
        .collect();
    let wk = crate::lie::reflection_subgroup(rs, &compact_roots);
    let canonical_k = |mu: &Weight<S>| -> Weight<S> { wk.orbit(mu).into_iter().max().unwrap() };
    let mut seen: BTreeMap<(Weight<S>, Weight<S>), CohomRep<S>> = BTreeMap::new();
    for q in enumerate_parabolics(rs) {
        let Some(nu) = pairing_vector(rs, &q, v) else {
            continue;
        };
        let lambda = nu.neg();
        let rep = aq_module(rs, &q, &lambda).expect("antidominant extremal weight is admissible");
        debug_assert_eq!(rep.nu, nu);
        seen.entry((canonical_k(&rep.min_k_weight), rep.inf_char.clone()))
            .or_insert(rep);
    }
    let mut out: Vec<CohomRep<S>> = seen.into_values().collect();
    out.sort_by_key(|r| r.label.sort_key());
    out
}
