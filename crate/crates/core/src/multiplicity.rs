//! Multiplicities of cohomological representations in the discrete
//! spectrum: exact values for the Saito-Kurokawa modules `sigma_k` at
//! paramodular prime level, symbolic unknowns everywhere else.
//!
//! The `sigma_k` count comes from lifting elliptic cusp forms: at prime
//! level the lifts with paramodular vectors are the level-one forms plus
//! the Atkin-Lehner plus-eigenforms when `k` is odd, and the minus
//! eigenforms when `k` is even.

use crate::cohomology::Label;
use crate::lie::GroupTag;
use crate::modforms::{dim_cusp, is_prime, CuspSpaceSpec, Sign};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MultError {
    #[error("sigma_k is only defined for k >= 3 (k = {0}); the k = 2 boundary sits outside the lifting description")]
    SigmaRange(i64),
    #[error("gamma {0} is not a symplectic arithmetic subgroup")]
    NotSymplectic(String),
}

/// An arithmetic subgroup, named by family.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum GammaSpec {
    /// Paramodular group of prime level.
    ParamodularPrime(u64),
    /// The full Siegel modular group (paramodular level one).
    FullSp4Z,
    /// Any other arithmetic subgroup, identified only by a label.
    Generic(String),
}

impl GammaSpec {
    pub fn group(&self) -> GroupTag {
        match self {
            GammaSpec::ParamodularPrime(_) | GammaSpec::FullSp4Z => GroupTag::Sp4,
            GammaSpec::Generic(_) => GroupTag::Su21, // family-dependent; callers override
        }
    }
}

impl fmt::Display for GammaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GammaSpec::ParamodularPrime(p) => write!(f, "K({p})"),
            GammaSpec::FullSp4Z => write!(f, "Sp(4,Z)"),
            GammaSpec::Generic(s) => write!(f, "{s}"),
        }
    }
}

/// Either an exactly known multiplicity with its provenance, or an opaque
/// unknown tied to the group and representation.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum MultSymbol {
    Known { value: u64, provenance: String },
    Unknown { gamma: String, rep: String },
}

impl MultSymbol {
    pub fn known(value: u64, provenance: impl Into<String>) -> Self {
        MultSymbol::Known {
            value,
            provenance: provenance.into(),
        }
    }

    pub fn value(&self) -> Option<u64> {
        match self {
            MultSymbol::Known { value, .. } => Some(*value),
            MultSymbol::Unknown { .. } => None,
        }
    }

    pub fn is_known_zero(&self) -> bool {
        self.value() == Some(0)
    }

    /// Symbolic addition: known values fold, anything involving an unknown
    /// stays unknown.
    pub fn add(&self, other: &MultSymbol) -> MultSymbol {
        match (self, other) {
            (
                MultSymbol::Known {
                    value: a,
                    provenance: pa,
                },
                MultSymbol::Known {
                    value: b,
                    provenance: pb,
                },
            ) => {
                let provenance = if pa.is_empty() {
                    pb.clone()
                } else if pb.is_empty() || pa == pb {
                    pa.clone()
                } else {
                    format!("{pa}; {pb}")
                };
                MultSymbol::Known {
                    value: a + b,
                    provenance,
                }
            }
            (MultSymbol::Unknown { gamma, rep }, _) | (_, MultSymbol::Unknown { gamma, rep }) => {
                MultSymbol::Unknown {
                    gamma: gamma.clone(),
                    rep: rep.clone(),
                }
            }
        }
    }
}

impl fmt::Display for MultSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MultSymbol::Known { value, .. } => write!(f, "{value}"),
            MultSymbol::Unknown { gamma, rep } => write!(f, "m({gamma},{rep})"),
        }
    }
}

/// Multiplicity of `sigma_k` in the square-integrable spectrum of the named
/// symplectic group: for prime paramodular level `p`,
/// `dim S_{2k-2}(SL(2,Z)) + dim S_{2k-2}(Gamma_0(p))^{new,+}` when `k` is
/// odd and `dim S_{2k-2}(Gamma_0(p))^{new,-}` when `k` is even; at level
/// one only the level-one branch of the lift survives.
pub fn mult_sigma(k: i64, gamma: &GammaSpec) -> Result<MultSymbol, MultError> {
    if k < 3 {
        return Err(MultError::SigmaRange(k));
    }
    let weight = 2 * k - 2;
    match gamma {
        GammaSpec::FullSp4Z => {
            if k % 2 == 1 {
                let d = dim_cusp(&CuspSpaceSpec::full(weight, 1)).expect("valid weight");
                Ok(MultSymbol::known(
                    d,
                    format!("dim S_{weight}(SL(2,Z)) = {d}"),
                ))
            } else {
                Ok(MultSymbol::known(
                    0,
                    "level-one lifts require odd k".to_string(),
                ))
            }
        }
        GammaSpec::ParamodularPrime(p) => {
            if !is_prime(*p) {
                return Ok(MultSymbol::Unknown {
                    gamma: gamma.to_string(),
                    rep: format!("sigma_{k}"),
                });
            }
            if k % 2 == 1 {
                let d1 = dim_cusp(&CuspSpaceSpec::full(weight, 1)).expect("valid weight");
                let dp =
                    dim_cusp(&CuspSpaceSpec::new_signed(weight, *p, Sign::Plus)).expect("valid");
                Ok(MultSymbol::known(
                    d1 + dp,
                    format!(
                        "dim S_{weight}(SL(2,Z)) + dim S_{weight}(Gamma_0({p}))^(new,+) = {d1} + {dp}"
                    ),
                ))
            } else {
                let dm =
                    dim_cusp(&CuspSpaceSpec::new_signed(weight, *p, Sign::Minus)).expect("valid");
                Ok(MultSymbol::known(
                    dm,
                    format!("dim S_{weight}(Gamma_0({p}))^(new,-) = {dm}"),
                ))
            }
        }
        GammaSpec::Generic(_) => Ok(MultSymbol::Unknown {
            gamma: gamma.to_string(),
            rep: format!("sigma_{k}"),
        }),
    }
}

/// Multiplicity of an arbitrary cohomological representation: the trivial
/// representation always appears once, the Saito-Kurokawa family is exact
/// over the symplectic groups, and everything else stays symbolic.
pub fn mult_lookup(label: &Label, gamma: &GammaSpec) -> MultSymbol {
    match label {
        Label::Trivial => MultSymbol::known(1, "constants"),
        Label::Sigma { k } => match gamma {
            GammaSpec::ParamodularPrime(_) | GammaSpec::FullSp4Z => mult_sigma(*k, gamma)
                .unwrap_or(MultSymbol::Unknown {
                    gamma: gamma.to_string(),
                    rep: label.to_string(),
                }),
            GammaSpec::Generic(_) => MultSymbol::Unknown {
                gamma: gamma.to_string(),
                rep: label.to_string(),
            },
        },
        _ => MultSymbol::Unknown {
            gamma: gamma.to_string(),
            rep: label.to_string(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn para(p: u64) -> GammaSpec {
        GammaSpec::ParamodularPrime(p)
    }

    #[test]
    fn sigma_values_even_k() {
        // k = 4 reads the weight-6 minus eigenspaces
        assert_eq!(mult_sigma(4, &para(2)).unwrap().value(), Some(0));
        assert_eq!(mult_sigma(4, &para(3)).unwrap().value(), Some(1));
        assert_eq!(mult_sigma(4, &para(5)).unwrap().value(), Some(1));
        assert_eq!(mult_sigma(4, &para(7)).unwrap().value(), Some(2));
        assert_eq!(
            mult_sigma(4, &GammaSpec::FullSp4Z).unwrap().value(),
            Some(0)
        );
    }

    #[test]
    fn sigma_values_odd_k() {
        // k = 3 reads weight 4: no level-one forms, plus eigenspaces tiny
        assert_eq!(mult_sigma(3, &para(2)).unwrap().value(), Some(0));
        assert_eq!(mult_sigma(3, &para(5)).unwrap().value(), Some(1));
        // k = 7 reads weight 12: the discriminant form contributes at level 1
        assert_eq!(
            mult_sigma(7, &GammaSpec::FullSp4Z).unwrap().value(),
            Some(1)
        );
        let m = mult_sigma(7, &para(2)).unwrap();
        assert!(m.value().unwrap() >= 1, "level-one form always lifts: {m}");
    }

    #[test]
    fn parity_gate() {
        // even k never sees the level-one term; odd k never the minus term
        for p in [2u64, 3, 5, 7, 11, 13] {
            for k in [4i64, 6, 8] {
                let m = mult_sigma(k, &para(p)).unwrap();
                let minus =
                    dim_cusp(&CuspSpaceSpec::new_signed(2 * k - 2, p, Sign::Minus)).unwrap();
                assert_eq!(m.value(), Some(minus), "k={k} p={p}");
            }
            for k in [3i64, 5, 7] {
                let m = mult_sigma(k, &para(p)).unwrap();
                let plus = dim_cusp(&CuspSpaceSpec::new_signed(2 * k - 2, p, Sign::Plus)).unwrap();
                let one = dim_cusp(&CuspSpaceSpec::full(2 * k - 2, 1)).unwrap();
                assert_eq!(m.value(), Some(plus + one), "k={k} p={p}");
            }
        }
    }

    #[test]
    fn k_boundary_rejected() {
        assert!(matches!(
            mult_sigma(2, &para(3)),
            Err(MultError::SigmaRange(2))
        ));
    }

    #[test]
    fn composite_level_is_unknown() {
        let m = mult_sigma(4, &para(6)).unwrap();
        assert!(matches!(m, MultSymbol::Unknown { .. }));
    }

    #[test]
    fn lookup_dispatch() {
        assert_eq!(mult_lookup(&Label::Trivial, &para(3)).value(), Some(1));
        assert_eq!(
            mult_lookup(&Label::Sigma { k: 4 }, &para(3)).value(),
            Some(1)
        );
        let ds = Label::DiscreteSeries {
            p_plus: 2,
            p_minus: 1,
        };
        assert!(mult_lookup(&ds, &para(3)).value().is_none());
        let j = Label::J {
            r: 1,
            s: 0,
            twist: 2,
        };
        assert!(mult_lookup(&j, &GammaSpec::Generic("G".into()))
            .value()
            .is_none());
    }

    #[test]
    fn symbol_arithmetic() {
        let a = MultSymbol::known(2, "a");
        let b = MultSymbol::known(3, "b");
        assert_eq!(a.add(&b).value(), Some(5));
        let u = MultSymbol::Unknown {
            gamma: "G".into(),
            rep: "r".into(),
        };
        assert!(a.add(&u).value().is_none());
        assert_eq!(u.to_string(), "m(G,r)");
    }
}
