//! Grading elements, eigenvalue spectra, rational twists and the induced
//! Hodge decompositions on representations.
//!
//! The grading element `E` of a Hermitian real form annihilates the compact
//! roots and takes the value +1 on `p^+`. It acts on any irreducible
//! representation with rational eigenvalues differing by integers; a
//! rational twist `{c}` shifts the spectrum so the eigenvalues become
//! half-integral, after which a weight `w` of matching parity turns the
//! spectrum into honest Hodge numbers via `p - q = 2k`, `p + q = w`.

use crate::lie::{GroupTag, RootSystem};
use crate::reps::{weight_multiplicities, Irrep};
use crate::scalar::{Rat, Scalar};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HodgeError {
    #[error("spectrum is not half-integral: eigenvalue {0} after twist")]
    NotHalfIntegral(String),
    #[error("weight parity mismatch: eigenvalue {eigenvalue} cannot sit in weight {weight}")]
    ParityMismatch { eigenvalue: String, weight: i64 },
    #[error("negative Hodge index: eigenvalue {eigenvalue} in weight {weight}")]
    NegativeIndex { eigenvalue: String, weight: i64 },
}

/// The canonical grading element, stored as the covector of its values on
/// the fundamental weights.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradingElement<S: Scalar = Rat> {
    pub group: GroupTag,
    pub on_fundamental: Vec<S>,
}

impl<S: Scalar> GradingElement<S> {
    pub fn eval(&self, mu: &crate::lie::Weight<S>) -> S {
        crate::linalg::dot(&mu.coords, &self.on_fundamental)
    }
}

/// The unique covector vanishing on compact simple roots with eigenvalue +1
/// on `p^+`.
pub fn grading_element<S: Scalar>(rs: &RootSystem<S>) -> GradingElement<S> {
    GradingElement {
        group: rs.group,
        on_fundamental: rs.e_fund.clone(),
    }
}

/// Eigenvalue spectrum: eigenvalue -> dimension of the eigenspace.
pub type Spectrum<S> = BTreeMap<S, u64>;

/// Pushforward of the weight multiset along evaluation at the grading
/// element.
pub fn e_spectrum<S: Scalar>(rs: &RootSystem<S>, irrep: &Irrep<S>) -> Spectrum<S> {
    let mut out: Spectrum<S> = BTreeMap::new();
    for (mu, m) in weight_multiplicities(rs, irrep) {
        *out.entry(rs.grade(&mu)).or_insert(0) += m;
    }
    out
}

/// A rational twist constant `{c}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct TwistConstant<S: Scalar = Rat>(pub S);

/// Twisted spectrum together with its half-integrality flag. The twist
/// `{c}` is defined by `(V{c})_k := V_{k+c}`, so keys shift by `-c`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwistedSpectrum<S: Scalar = Rat> {
    pub keys: Spectrum<S>,
    pub half_integral: bool,
}

pub fn twist_spectrum<S: Scalar>(spec: &Spectrum<S>, c: &TwistConstant<S>) -> TwistedSpectrum<S> {
    let keys: Spectrum<S> = spec
        .iter()
        .map(|(k, &m)| (k.clone() - c.0.clone(), m))
        .collect();
    let half_integral = keys.keys().all(|k| k.is_half_int());
    TwistedSpectrum {
        keys,
        half_integral,
    }
}

/// A finished Hodge decomposition in a fixed weight.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HodgeNumbers {
    pub weight: i64,
    pub h: BTreeMap<(i64, i64), u64>,
}

impl HodgeNumbers {
    pub fn total(&self) -> u64 {
        self.h.values().sum()
    }
}

/// Places a half-integral spectrum in weight `w`: `p - q = 2k`, `p + q = w`.
/// The parity of `w` must match the keys (integers need even `w`,
/// half-integers need odd `w`) and no index may go negative.
pub fn hodge_numbers<S: Scalar>(
    spec: &TwistedSpectrum<S>,
    w: i64,
) -> Result<HodgeNumbers, HodgeError> {
    let mut h = BTreeMap::new();
    for (k, &m) in &spec.keys {
        let two_k = k.clone() + k.clone();
        let Some(two_k) = two_k.to_int() else {
            return Err(HodgeError::NotHalfIntegral(k.to_string()));
        };
        if (w - two_k) % 2 != 0 {
            return Err(HodgeError::ParityMismatch {
                eigenvalue: k.to_string(),
                weight: w,
            });
        }
        let p = (w + two_k) / 2;
        let q = w - p;
        if p < 0 || q < 0 {
            return Err(HodgeError::NegativeIndex {
                eigenvalue: k.to_string(),
                weight: w,
            });
        }
        *h.entry((p, q)).or_insert(0) += m;
    }
    Ok(HodgeNumbers { weight: w, h })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{build_root_system, Weight};

    fn spec_of(g: GroupTag, coords: &[i64]) -> Spectrum<Rat> {
        let rs = build_root_system::<Rat>(g);
        e_spectrum(&rs, &Irrep::from_ints(g, coords).unwrap())
    }

    #[test]
    fn grading_element_on_simple_roots() {
        for g in GroupTag::ALL {
            let rs = build_root_system::<Rat>(g);
            let e = grading_element(&rs);
            for a in &rs.simple_roots {
                let v = e.eval(&a.weight);
                if a.compact {
                    assert_eq!(v, Rat::from_int(0), "{g} {a}");
                } else {
                    assert_eq!(v, Rat::from_int(1), "{g} {a}");
                }
            }
        }
    }

    #[test]
    fn su21_standard_spectrum() {
        let spec = spec_of(GroupTag::Su21, &[1, 0]);
        let mut expect = BTreeMap::new();
        expect.insert(Rat::from_ratio(2, 3), 1);
        expect.insert(Rat::from_ratio(-1, 3), 2);
        assert_eq!(spec, expect);
    }

    #[test]
    fn su21_dual_spectrum() {
        let spec = spec_of(GroupTag::Su21, &[0, 1]);
        let mut expect = BTreeMap::new();
        expect.insert(Rat::from_ratio(1, 3), 2);
        expect.insert(Rat::from_ratio(-2, 3), 1);
        assert_eq!(spec, expect);
    }

    #[test]
    fn sp4_standard_spectrum() {
        let spec = spec_of(GroupTag::Sp4, &[1, 0]);
        let mut expect = BTreeMap::new();
        expect.insert(Rat::from_ratio(1, 2), 2);
        expect.insert(Rat::from_ratio(-1, 2), 2);
        assert_eq!(spec, expect);
    }

    #[test]
    fn real_type_spectra_are_symmetric() {
        for (g, coords) in [
            (GroupTag::Sp4, vec![2i64, 1]),
            (GroupTag::Su21, vec![2, 2]),
            (GroupTag::Su31, vec![1, 2, 1]),
        ] {
            let spec = spec_of(g, &coords);
            for (k, &m) in &spec {
                let neg = Rat::from_int(0) - *k;
                assert_eq!(spec.get(&neg), Some(&m), "{g} at {k}");
            }
        }
    }

    #[test]
    fn spectrum_mass_is_dimension() {
        let rs = build_root_system::<Rat>(GroupTag::Su31);
        let ir = Irrep::from_ints(GroupTag::Su31, &[1, 0, 1]).unwrap();
        let spec = e_spectrum(&rs, &ir);
        assert_eq!(
            spec.values().sum::<u64>(),
            crate::reps::weyl_dimension(&rs, &ir)
        );
    }

    #[test]
    fn twist_by_zero_is_identity() {
        let spec = spec_of(GroupTag::Su21, &[1, 0]);
        let tw = twist_spectrum(&spec, &TwistConstant(Rat::from_int(0)));
        assert_eq!(tw.keys, spec);
        assert!(!tw.half_integral);
    }

    #[test]
    fn sixth_twist_makes_standard_half_integral() {
        let spec = spec_of(GroupTag::Su21, &[1, 0]);
        let tw = twist_spectrum(&spec, &TwistConstant(Rat::from_ratio(1, 6)));
        assert!(tw.half_integral);
        let keys: Vec<Rat> = tw.keys.keys().cloned().collect();
        assert_eq!(keys, vec![Rat::from_ratio(-1, 2), Rat::from_ratio(1, 2)]);
    }

    /// The three geometric cases built on the twisted standard
    /// representation: weight-1 curve numbers, then each half-twist `{-1/2}`
    /// raises the weight by one and shifts the `+`-component by (1,0).
    #[test]
    fn curve_k3_and_threefold_hodge_numbers() {
        let plus = spec_of(GroupTag::Su21, &[1, 0]);
        let minus = spec_of(GroupTag::Su21, &[0, 1]);
        let c = Rat::from_ratio(1, 6);
        let half = Rat::from_ratio(1, 2);

        // weight one: h^{1,0}+ = 1, h^{0,1}+ = 2 and conjugate, total (3,3)
        let hp = hodge_numbers(&twist_spectrum(&plus, &TwistConstant(c)), 1).unwrap();
        let hm = hodge_numbers(&twist_spectrum(&minus, &TwistConstant(-c)), 1).unwrap();
        assert_eq!(hp.h[&(1, 0)], 1);
        assert_eq!(hp.h[&(0, 1)], 2);
        assert_eq!(hm.h[&(1, 0)], 2);
        assert_eq!(hm.h[&(0, 1)], 1);

        // one half-twist: weight two with numbers (1,4,1)
        let hp2 = hodge_numbers(&twist_spectrum(&plus, &TwistConstant(c - half)), 2).unwrap();
        let hm2 = hodge_numbers(&twist_spectrum(&minus, &TwistConstant(-c + half)), 2).unwrap();
        let mut total: BTreeMap<(i64, i64), u64> = hp2.h.clone();
        for (k, v) in hm2.h {
            *total.entry(k).or_insert(0) += v;
        }
        assert_eq!(total[&(2, 0)], 1);
        assert_eq!(total[&(1, 1)], 4);
        assert_eq!(total[&(0, 2)], 1);

        // two half-twists: weight three with numbers (1,2,2,1)
        let hp3 =
            hodge_numbers(&twist_spectrum(&plus, &TwistConstant(c - half - half)), 3).unwrap();
        let hm3 =
            hodge_numbers(&twist_spectrum(&minus, &TwistConstant(-c + half + half)), 3).unwrap();
        let mut total: BTreeMap<(i64, i64), u64> = hp3.h.clone();
        for (k, v) in hm3.h {
            *total.entry(k).or_insert(0) += v;
        }
        assert_eq!(total[&(3, 0)], 1);
        assert_eq!(total[&(2, 1)], 2);
        assert_eq!(total[&(1, 2)], 2);
        assert_eq!(total[&(0, 3)], 1);
    }

    #[test]
    fn parity_mismatch_names_the_eigenvalue() {
        let spec = spec_of(GroupTag::Su21, &[1, 0]);
        let tw = twist_spectrum(&spec, &TwistConstant(Rat::from_ratio(1, 6)));
        let err = hodge_numbers(&tw, 2).unwrap_err();
        assert!(matches!(err, HodgeError::ParityMismatch { .. }));
        assert!(err.to_string().contains("1/2"));
    }

    #[test]
    fn non_half_integral_rejected() {
        let spec = spec_of(GroupTag::Su21, &[1, 0]);
        let tw = twist_spectrum(&spec, &TwistConstant(Rat::from_int(0)));
        assert!(!tw.half_integral);
        let err = hodge_numbers(&tw, 1).unwrap_err();
        assert!(matches!(err, HodgeError::NotHalfIntegral(_)));
        assert!(err.to_string().contains("/3"));
    }

    #[test]
    fn conjugate_components_transpose() {
        // V+{c} and V-{-c} give mutually conjugate tables for every valid c.
        let plus = spec_of(GroupTag::Su31, &[1, 0, 0]);
        let minus = spec_of(GroupTag::Su31, &[0, 0, 1]);
        let c = Rat::from_ratio(1, 4);
        let hp = hodge_numbers(&twist_spectrum(&plus, &TwistConstant(c)), 1).unwrap();
        let hm = hodge_numbers(&twist_spectrum(&minus, &TwistConstant(-c)), 1).unwrap();
        for (&(p, q), &m) in &hp.h {
            assert_eq!(hm.h.get(&(q, p)), Some(&m));
        }
        assert_eq!(hp.h[&(1, 0)], 1);
        assert_eq!(hp.h[&(0, 1)], 3);
    }

    #[test]
    fn grading_element_values_su31() {
        let rs = build_root_system::<Rat>(GroupTag::Su31);
        let e = grading_element(&rs);
        assert_eq!(
            e.on_fundamental,
            vec![
                Rat::from_ratio(3, 4),
                Rat::from_ratio(1, 2),
                Rat::from_ratio(1, 4)
            ]
        );
        assert_eq!(
            e.eval(&Weight::from_ints(&[0, 1, 0])),
            Rat::from_ratio(1, 2)
        );
    }
}
