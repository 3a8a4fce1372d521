//! Finite-dimensional irreducible representations: dimension, weight
//! multiplicities (Freudenthal), tensor product decomposition (Klimyk) and
//! duality type.

use crate::lie::{
    dominant_chamber_test, dominant_representative, weyl_group, GroupTag, RootSystem, Weight,
};
use crate::scalar::{Rat, Scalar};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RepError {
    #[error("highest weight {0} is not dominant integral")]
    NotDominantIntegral(String),
    #[error("operands live on different groups: {0} vs {1}")]
    GroupMismatch(GroupTag, GroupTag),
}

/// An irreducible representation, identified by its dominant integral
/// highest weight.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Irrep<S: Scalar = Rat> {
    pub group: GroupTag,
    pub highest_weight: Weight<S>,
}

impl<S: Scalar> Irrep<S> {
    pub fn new(group: GroupTag, highest_weight: Weight<S>) -> Result<Self, RepError> {
        if !highest_weight.is_dominant_integral() {
            return Err(RepError::NotDominantIntegral(highest_weight.to_string()));
        }
        Ok(Irrep {
            group,
            highest_weight,
        })
    }

    pub fn from_ints(group: GroupTag, coords: &[i64]) -> Result<Self, RepError> {
        Self::new(group, Weight::from_ints(coords))
    }

    pub fn trivial(group: GroupTag) -> Self {
        Irrep {
            group,
            highest_weight: Weight::zero(group.rank()),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.highest_weight.is_zero()
    }
}

/// Weight multiset of a representation: weight -> multiplicity.
pub type WeightMultiset<S> = BTreeMap<Weight<S>, u64>;

/// `dim V = prod <hw + rho, alpha> / <rho, alpha>` over the positive roots.
pub fn weyl_dimension<S: Scalar>(rs: &RootSystem<S>, irrep: &Irrep<S>) -> u64 {
    assert_eq!(rs.group, irrep.group);
    let shifted = irrep.highest_weight.add(&rs.rho);
    let mut num = S::one();
    let mut den = S::one();
    for a in &rs.positive_roots {
        num = num * rs.ip(&shifted, &a.weight);
        den = den * rs.ip(&rs.rho, &a.weight);
    }
    let d = num / den;
    d.to_int().expect("Weyl dimension is an integer") as u64
}

/// Full weight multiset by the Freudenthal recursion, walking the weight
/// polytope downward from the highest weight.
pub fn weight_multiplicities<S: Scalar>(rs: &RootSystem<S>, irrep: &Irrep<S>) -> WeightMultiset<S> {
    assert_eq!(rs.group, irrep.group);
    let hw = &irrep.highest_weight;
    let w = weyl_group(rs);
    // The lowest weight bounds the support box in simple-root coordinates.
    let lowest = w
        .orbit(hw)
        .into_iter()
        .max_by_key(|m| rs.height_below(hw, m).unwrap_or(i64::MIN))
        .unwrap();
    let span = rs.simple_coords(&hw.sub(&lowest));
    let bounds: Vec<i64> = span
        .iter()
        .map(|c| c.to_int().expect("root-lattice difference"))
        .collect();

    let shifted_norm = {
        let s = hw.add(&rs.rho);
        rs.ip(&s, &s)
    };

    // Enumerate candidates hw - sum c_i alpha_i in increasing height order.
    let mut by_height: BTreeMap<i64, Vec<Weight<S>>> = BTreeMap::new();
    let mut idx = vec![0i64; rs.rank];
    loop {
        let h: i64 = idx.iter().sum();
        let mut mu = hw.clone();
        for (j, &c) in idx.iter().enumerate() {
            mu = mu.sub(&rs.simple_roots[j].weight.scale(&S::from_int(c)));
        }
        by_height.entry(h).or_default().push(mu);
        // odometer over the box
        let mut j = 0;
        loop {
            if j == rs.rank {
                break;
            }
            idx[j] += 1;
            if idx[j] <= bounds[j] {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
        if j == rs.rank {
            break;
        }
    }

    let mut mults: WeightMultiset<S> = BTreeMap::new();
    mults.insert(hw.clone(), 1);
    let two = S::from_int(2);
    for (h, candidates) in by_height {
        if h == 0 {
            continue;
        }
        for mu in candidates {
            let mu_shift = mu.add(&rs.rho);
            let denom = shifted_norm.clone() - rs.ip(&mu_shift, &mu_shift);
            if denom.is_zero() {
                continue; // outside the orbit of the highest weight
            }
            let mut acc = S::zero();
            for a in &rs.positive_roots {
                let mut k = 1i64;
                loop {
                    let nu = mu.add(&a.weight.scale(&S::from_int(k)));
                    match mults.get(&nu) {
                        Some(&m) if m > 0 => {
                            acc = acc + S::from_int(m as i64) * rs.ip(&nu, &a.weight);
                        }
                        _ => {
                            if rs.height_below(hw, &nu).is_none() {
                                break;
                            }
                        }
                    }
                    k += 1;
                    if k > h {
                        break;
                    }
                }
            }
            let m = two.clone() * acc / denom;
            let m = m.to_int().expect("Freudenthal multiplicity is an integer");
            debug_assert!(m >= 0);
            if m > 0 {
                mults.insert(mu, m as u64);
            }
        }
    }
    debug_assert_eq!(
        mults.values().sum::<u64>(),
        weyl_dimension(rs, irrep),
        "Freudenthal total must equal the Weyl dimension"
    );
    mults
}

/// Decomposes `a (x) b` into irreducibles by the Brauer-Klimyk rule: the
/// weight multiset of the smaller factor is added to `hw(a) + rho` and
/// reflected into the dominant chamber with signs.
pub fn tensor_decompose<S: Scalar>(
    rs: &RootSystem<S>,
    a: &Irrep<S>,
    b: &Irrep<S>,
) -> Result<BTreeMap<Weight<S>, u64>, RepError> {
    if a.group != b.group {
        return Err(RepError::GroupMismatch(a.group, b.group));
    }
    let (big, small) = if weyl_dimension(rs, a) >= weyl_dimension(rs, b) {
        (a, b)
    } else {
        (b, a)
    };
    let small_wts = weight_multiplicities(rs, small);
    let mut out: BTreeMap<Weight<S>, i64> = BTreeMap::new();
    'outer: for (mu, mult) in &small_wts {
        let mut xi = big.highest_weight.add(mu).add(&rs.rho);
        let mut sign = 1i64;
        // straighten xi into the open dominant chamber
        loop {
            let mut moved = false;
            for alpha in &rs.simple_roots {
                let c = rs.pair_coroot(&xi, &alpha.weight);
                if c.is_zero() {
                    continue 'outer; // on a wall: contributes nothing
                }
                if c < S::zero() {
                    xi = rs.reflect(&xi, &alpha.weight);
                    sign = -sign;
                    moved = true;
                }
            }
            if !moved {
                break;
            }
        }
        let hw = xi.sub(&rs.rho);
        *out.entry(hw).or_insert(0) += sign * (*mult as i64);
    }
    let mut result = BTreeMap::new();
    for (hw, m) in out {
        if m != 0 {
            assert!(m > 0, "Klimyk cancellation left a negative multiplicity");
            result.insert(hw, m as u64);
        }
    }
    debug_assert_eq!(
        result
            .iter()
            .map(|(hw, m)| {
                let ir = Irrep {
                    group: a.group,
                    highest_weight: hw.clone(),
                };
                m * weyl_dimension(rs, &ir)
            })
            .sum::<u64>(),
        weyl_dimension(rs, a) * weyl_dimension(rs, b)
    );
    Ok(result)
}

/// Weight multiset of the exterior square, from the weight multiset of `V`:
/// pairwise sums of distinct weight vectors.
pub fn wedge_square_multiset<S: Scalar>(wts: &WeightMultiset<S>) -> WeightMultiset<S> {
    let items: Vec<(&Weight<S>, u64)> = wts.iter().map(|(w, &m)| (w, m)).collect();
    let mut out: WeightMultiset<S> = BTreeMap::new();
    for i in 0..items.len() {
        let (wi, mi) = items[i];
        if mi >= 2 {
            *out.entry(wi.add(wi)).or_insert(0) += mi * (mi - 1) / 2;
        }
        for (wj, mj) in items.iter().skip(i + 1) {
            *out.entry(wi.add(wj)).or_insert(0) += mi * mj;
        }
    }
    out
}

/// Weight multiset of the symmetric square.
pub fn sym_square_multiset<S: Scalar>(wts: &WeightMultiset<S>) -> WeightMultiset<S> {
    let items: Vec<(&Weight<S>, u64)> = wts.iter().map(|(w, &m)| (w, m)).collect();
    let mut out: WeightMultiset<S> = BTreeMap::new();
    for i in 0..items.len() {
        let (wi, mi) = items[i];
        *out.entry(wi.add(wi)).or_insert(0) += mi * (mi + 1) / 2;
        for (wj, mj) in items.iter().skip(i + 1) {
            *out.entry(wi.add(wj)).or_insert(0) += mi * mj;
        }
    }
    out
}

/// Peels a weight multiset into irreducible constituents by repeatedly
/// removing the full multiset of a maximal dominant weight.
pub fn decompose_multiset<S: Scalar>(
    rs: &RootSystem<S>,
    multiset: &WeightMultiset<S>,
) -> BTreeMap<Weight<S>, u64> {
    let mut rem: BTreeMap<Weight<S>, i64> = multiset
        .iter()
        .map(|(w, &m)| (w.clone(), m as i64))
        .collect();
    let mut out = BTreeMap::new();
    loop {
        rem.retain(|_, m| *m != 0);
        if rem.is_empty() {
            return out;
        }
        // take a dominant weight of maximal height among the remainder
        let top = rem
            .keys()
            .filter(|w| dominant_chamber_test(rs, w))
            .max_by_key(|w| rs.ip(&rs.rho, w))
            .cloned()
            .expect("non-dominant residue in decomposition");
        let mult = rem[&top];
        assert!(mult > 0, "negative multiplicity while peeling {top}");
        let ir = Irrep {
            group: rs.group,
            highest_weight: top.clone(),
        };
        for (w, m) in weight_multiplicities(rs, &ir) {
            *rem.entry(w).or_insert(0) -= mult * m as i64;
        }
        *out.entry(top).or_insert(0) += mult as u64;
    }
}

/// Reality / duality type of an irreducible representation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RealityType<S: Scalar = Rat> {
    pub kind: RealityKind,
    pub dual_weight: Weight<S>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RealityKind {
    Real,
    Complex,
    Quaternionic,
}

/// Duality data. Quaternionic type never occurs for integral weights of
/// these three groups.
pub fn reality_type<S: Scalar>(irrep: &Irrep<S>) -> RealityType<S> {
    let c = &irrep.highest_weight.coords;
    match irrep.group {
        GroupTag::Su21 => {
            let dual = Weight::new(vec![c[1].clone(), c[0].clone()]);
            let kind = if c[0] == c[1] {
                RealityKind::Real
            } else {
                RealityKind::Complex
            };
            RealityType {
                kind,
                dual_weight: dual,
            }
        }
        GroupTag::Su31 => {
            let dual = Weight::new(vec![c[2].clone(), c[1].clone(), c[0].clone()]);
            let kind = if c[0] == c[2] {
                RealityKind::Real
            } else {
                RealityKind::Complex
            };
            RealityType {
                kind,
                dual_weight: dual,
            }
        }
        GroupTag::Sp4 => RealityType {
            kind: RealityKind::Real,
            dual_weight: irrep.highest_weight.clone(),
        },
    }
}

/// The contragredient representation.
pub fn dual<S: Scalar>(irrep: &Irrep<S>) -> Irrep<S> {
    Irrep {
        group: irrep.group,
        highest_weight: reality_type(irrep).dual_weight,
    }
}

/// The Weyl orbit of the highest weight.
pub fn extremal_weights<S: Scalar>(rs: &RootSystem<S>, irrep: &Irrep<S>) -> Vec<Weight<S>> {
    weyl_group(rs).orbit(&irrep.highest_weight)
}

/// Smallest and largest grading-element eigenvalues on the representation
/// (attained on extremal weights).
pub fn grade_range<S: Scalar>(rs: &RootSystem<S>, irrep: &Irrep<S>) -> (S, S) {
    let orbit = extremal_weights(rs, irrep);
    let mut lo = rs.grade(&orbit[0]);
    let mut hi = lo.clone();
    for w in &orbit[1..] {
        let g = rs.grade(w);
        if g < lo {
            lo = g.clone();
        }
        if g > hi {
            hi = g;
        }
    }
    (lo, hi)
}

/// Dominant representative of a weight (convenience re-export).
pub fn dominantize<S: Scalar>(rs: &RootSystem<S>, mu: &Weight<S>) -> Weight<S> {
    dominant_representative(rs, mu)
}
