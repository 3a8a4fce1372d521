//! Families over locally symmetric bases: decomposition of fiber cohomology
//! into irreducible local systems, multiplicity-weighted Hodge tables, the
//! parallelogram scan, and Hodge-class verdicts.

use crate::cohomology::{cohomological_reps, hodge_bigrading};
use crate::hodge::TwistConstant;
use crate::lie::{GroupTag, Weight};
use crate::multiplicity::{mult_lookup, GammaSpec, MultSymbol};
use crate::reps::{tensor_decompose, Irrep};
use crate::scalar::{Rat, Scalar};
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("fiber {fiber:?} does not live over base {base:?}")]
    Incompatible { base: Base, fiber: Fiber },
    #[error("fiber power must be positive")]
    ZeroPower,
}

/// The locally symmetric base of a family.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub enum Base {
    Ball2,
    Ball3,
    Siegel3,
}

impl Base {
    pub fn group(self) -> GroupTag {
        match self {
            Base::Ball2 => GroupTag::Su21,
            Base::Ball3 => GroupTag::Su31,
            Base::Siegel3 => GroupTag::Sp4,
        }
    }

    pub fn dim(self) -> usize {
        self.group().domain_dim()
    }

    pub fn parse(s: &str) -> Option<Base> {
        match s.to_ascii_lowercase().as_str() {
            "ball2" | "b2" => Some(Base::Ball2),
            "ball3" | "b3" => Some(Base::Ball3),
            "siegel3" | "siegel" => Some(Base::Siegel3),
            _ => None,
        }
    }
}

/// The fiber of a universal family.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub enum Fiber {
    PicardCurve,
    Genus2Curve,
    AbelianSurface,
    K3Rho16,
    RohdeCy3,
}

impl Fiber {
    pub fn complex_dim(self) -> usize {
        match self {
            Fiber::PicardCurve | Fiber::Genus2Curve => 1,
            Fiber::AbelianSurface | Fiber::K3Rho16 => 2,
            Fiber::RohdeCy3 => 3,
        }
    }

    pub fn compatible_bases(self) -> &'static [Base] {
        match self {
            Fiber::PicardCurve => &[Base::Ball2, Base::Ball3],
            Fiber::Genus2Curve | Fiber::AbelianSurface => &[Base::Siegel3],
            Fiber::K3Rho16 | Fiber::RohdeCy3 => &[Base::Ball2],
        }
    }

    pub fn parse(s: &str) -> Option<Fiber> {
        match s.to_ascii_lowercase().as_str() {
            "picard_curve" | "picard" => Some(Fiber::PicardCurve),
            "genus2_curve" | "genus2" => Some(Fiber::Genus2Curve),
            "abelian_surface" | "abelian" => Some(Fiber::AbelianSurface),
            "k3_rho16" | "k3" => Some(Fiber::K3Rho16),
            "rohde_cy3" | "cy3" => Some(Fiber::RohdeCy3),
            _ => None,
        }
    }
}

/// A universal family: fiber, base, fiber power, arithmetic group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FamilySpec {
    pub base: Base,
    pub fiber: Fiber,
    pub power: u32,
    pub gamma: GammaSpec,
}

impl FamilySpec {
    pub fn new(
        base: Base,
        fiber: Fiber,
        power: u32,
        gamma: GammaSpec,
    ) -> Result<FamilySpec, FamilyError> {
        if power == 0 {
            return Err(FamilyError::ZeroPower);
        }
        if !fiber.compatible_bases().contains(&base) {
            return Err(FamilyError::Incompatible { base, fiber });
        }
        Ok(FamilySpec {
            base,
            fiber,
            power,
            gamma,
        })
    }

    /// Complex dimension of the total space.
    pub fn total_dim(&self) -> usize {
        self.base.dim() + self.fiber.complex_dim() * self.power as usize
    }
}

/// One irreducible local system inside a fiber cohomology degree: the
/// highest weight, the eigenvalue twist of its plus-structure, and its
/// multiplicity. The Hodge weight is the ambient cohomological degree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Constituent {
    pub highest_weight: Weight<Rat>,
    pub twist: Rat,
    pub mult: u64,
}

/// Fiber cohomology, degree by degree.
pub type FiberDecomposition = BTreeMap<usize, Vec<Constituent>>;

fn constituent(hw: &[i64], num: i64, den: i64, mult: u64) -> Constituent {
    Constituent {
        highest_weight: Weight::from_ints(hw),
        twist: Rat::from_ratio(num, den),
        mult,
    }
}

/// Cohomology of a single fiber as local systems on the base.
fn single_fiber(base: Base, fiber: Fiber) -> FiberDecomposition {
    let rank = base.group().rank();
    let triv = |mult: u64| Constituent {
        highest_weight: Weight::zero(rank),
        twist: Rat::from_int(0),
        mult,
    };
    let mut out: FiberDecomposition = BTreeMap::new();
    match (base, fiber) {
        (Base::Ball2, Fiber::PicardCurve) => {
            out.insert(0, vec![triv(1)]);
            out.insert(
                1,
                vec![
                    constituent(&[1, 0], 1, 6, 1),
                    constituent(&[0, 1], -1, 6, 1),
                ],
            );
            out.insert(2, vec![triv(1)]);
        }
        (Base::Ball3, Fiber::PicardCurve) => {
            out.insert(0, vec![triv(1)]);
            out.insert(
                1,
                vec![
                    constituent(&[1, 0, 0], 1, 4, 1),
                    constituent(&[0, 0, 1], -1, 4, 1),
                ],
            );
            out.insert(2, vec![triv(1)]);
        }
        (Base::Siegel3, Fiber::Genus2Curve) => {
            out.insert(0, vec![triv(1)]);
            out.insert(1, vec![constituent(&[1, 0], 0, 1, 1)]);
            out.insert(2, vec![triv(1)]);
        }
        (Base::Siegel3, Fiber::AbelianSurface) => {
            out.insert(0, vec![triv(1)]);
            out.insert(1, vec![constituent(&[1, 0], 0, 1, 1)]);
            // wedge square of the standard system: V_{1,1} plus the
            // symplectic form
            out.insert(2, vec![constituent(&[0, 1], 0, 1, 1), triv(1)]);
            // wedge cube is the standard system again (self-dual)
            out.insert(3, vec![constituent(&[1, 0], 0, 1, 1)]);
            out.insert(4, vec![triv(1)]);
        }
        (Base::Ball2, Fiber::K3Rho16) => {
            out.insert(0, vec![triv(1)]);
            // rank-16 algebraic part plus the transcendental lattice,
            // which is the half-twisted curve structure
            out.insert(
                2,
                vec![
                    triv(16),
                    constituent(&[1, 0], -1, 3, 1),
                    constituent(&[0, 1], 1, 3, 1),
                ],
            );
            out.insert(4, vec![triv(1)]);
        }
        (Base::Ball2, Fiber::RohdeCy3) => {
            out.insert(0, vec![triv(1)]);
            // even-degree pieces are copies of the trivial system; the
            // algebraic ranks of the fibers are not tracked, only presence
            // matters for the verdicts
            out.insert(2, vec![triv(1)]);
            out.insert(
                3,
                vec![
                    constituent(&[1, 0], -5, 6, 1),
                    constituent(&[0, 1], 5, 6, 1),
                ],
            );
            out.insert(4, vec![triv(1)]);
            out.insert(6, vec![triv(1)]);
        }
        _ => unreachable!("validated by FamilySpec::new"),
    }
    out
}

fn tensor_constituents(
    rs: &crate::lie::RootSystem<Rat>,
    a: &[Constituent],
    b: &[Constituent],
) -> Vec<Constituent> {
    let mut acc: BTreeMap<(Weight<Rat>, Rat), u64> = BTreeMap::new();
    for x in a {
        for y in b {
            let vx = Irrep::new(rs.group, x.highest_weight.clone()).unwrap();
            let vy = Irrep::new(rs.group, y.highest_weight.clone()).unwrap();
            let dec = tensor_decompose(rs, &vx, &vy).unwrap();
            let c = x.twist + y.twist;
            for (hw, m) in dec {
                *acc.entry((hw, c)).or_insert(0) += m * x.mult * y.mult;
            }
        }
    }
    acc.into_iter()
        .map(|((hw, c), mult)| Constituent {
            highest_weight: hw,
            twist: c,
            mult,
        })
        .collect()
}

/// Decomposes the cohomology of the n-th fiber power into irreducible
/// twisted local systems, degree by degree (Kunneth followed by exact
/// tensor decomposition).
pub fn fiber_decomposition(family: &FamilySpec) -> FiberDecomposition {
    let rs = crate::lie::build_root_system::<Rat>(family.base.group());
    let one = single_fiber(family.base, family.fiber);
    let mut acc = one.clone();
    for _ in 1..family.power {
        let mut next: FiberDecomposition = BTreeMap::new();
        for (r1, c1) in &acc {
            for (r2, c2) in &one {
                let merged = tensor_constituents(&rs, c1, c2);
                let slot = next.entry(r1 + r2).or_default();
                for m in merged {
                    if let Some(existing) = slot
                        .iter_mut()
                        .find(|x| x.highest_weight == m.highest_weight && x.twist == m.twist)
                    {
                        existing.mult += m.mult;
                    } else {
                        slot.push(m);
                    }
                }
            }
        }
        for v in next.values_mut() {
            v.sort();
        }
        acc = next;
    }
    acc
}

/// Named twist presets for the geometric families: the weight-one curve
/// normalization, and its half-twists realizing K3 and Calabi-Yau
/// structures.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TwistPreset {
    /// No twist; the weight is the natural fiber-power degree.
    None,
    /// Weight-one curve structure on the standard system (and its powers).
    Curve,
    /// One half-twist on top of the curve structure.
    K3,
    /// Two half-twists: the Calabi-Yau threefold structure.
    Cy3,
}

impl TwistPreset {
    pub fn parse(s: &str) -> Option<TwistPreset> {
        match s.to_ascii_lowercase().as_str() {
            "none" => Some(TwistPreset::None),
            "curve" | "picard" => Some(TwistPreset::Curve),
            "k3" => Some(TwistPreset::K3),
            "cy3" | "cy" => Some(TwistPreset::Cy3),
            _ => None,
        }
    }
}

/// The twist constant and Hodge weight a preset attaches to a highest
/// weight: per-group curve constants on the fundamental weights, extended
/// additively, with half-twist shifts on top.
pub fn preset_twist(group: GroupTag, hw: &Weight<Rat>, preset: TwistPreset) -> (Rat, i64) {
    let (c0, w0): (Vec<Rat>, Vec<i64>) = match group {
        GroupTag::Su21 => (
            vec![Rat::from_ratio(1, 6), Rat::from_ratio(-1, 6)],
            vec![1, 1],
        ),
        GroupTag::Su31 => (
            vec![
                Rat::from_ratio(1, 4),
                Rat::from_ratio(1, 2),
                Rat::from_ratio(-1, 4),
            ],
            vec![1, 2, 1],
        ),
        GroupTag::Sp4 => (vec![Rat::from_int(0); 2], vec![1, 2]),
    };
    let mut c = Rat::from_int(0);
    let mut w = 0i64;
    for ((coef, c0i), w0i) in hw.coords.iter().zip(&c0).zip(&w0) {
        let n = coef.to_int().expect("integral highest weight");
        c += Rat::from_int(n) * *c0i;
        w += n * w0i;
    }
    match preset {
        TwistPreset::None => (Rat::from_int(0), w),
        TwistPreset::Curve => (c, w),
        TwistPreset::K3 => (c - Rat::from_ratio(1, 2), w + 1),
        TwistPreset::Cy3 => (c - Rat::from_int(1), w + 2),
    }
}

/// The index parallelogram: all `(p, i)` with `0 <= i <= d_Y` and
/// `i/2 <= p <= (i + (d_X - d_Y))/2`.
pub fn parallelogram_q(d_x: usize, d_y: usize) -> Vec<(usize, usize)> {
    assert!(d_x >= d_y);
    let delta = (d_x - d_y) as i64;
    let mut out = Vec::new();
    for i in 0..=(d_y as i64) {
        let lo = (i + 1) / 2; // ceil(i/2)
        let hi = (i + delta) / 2; // floor
        for p in lo..=hi {
            out.push((p as usize, i as usize));
        }
    }
    out
}

/// Closed-form cell count of the parallelogram.
pub fn parallelogram_count(d_x: usize, d_y: usize) -> usize {
    let delta = (d_x - d_y) as i64;
    (0..=(d_y as i64))
        .map(|i| ((i + delta) / 2 - (i + 1) / 2 + 1).max(0) as usize)
        .sum()
}

/// One row of an assembled, multiplicity-weighted Hodge table.
#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub fiber_degree: usize,
    pub constituent: String,
    pub twist: String,
    pub constituent_mult: u64,
    pub rep: String,
    pub degree: usize,
    pub p: i64,
    pub q: i64,
    pub dim: u64,
    pub mult: MultSymbol,
}

/// All bigraded cohomology rows of every constituent of every fiber degree,
/// weighted by the spectral multiplicities over `gamma`.
pub fn assemble_hodge_tables(family: &FamilySpec) -> Vec<TableRow> {
    let rs = crate::lie::build_root_system::<Rat>(family.base.group());
    let mut rows = Vec::new();
    for (r, constituents) in fiber_decomposition(family) {
        for cst in constituents {
            let v = Irrep::new(rs.group, cst.highest_weight.clone()).unwrap();
            for rep in cohomological_reps(&rs, &v) {
                let table = hodge_bigrading(&rs, &rep, &v, &TwistConstant(cst.twist), r as i64)
                    .expect("fiber constituents carry consistent twists");
                let mult = mult_lookup(&rep.label, &family.gamma);
                for (&(i, p, q), &dim) in &table.entries {
                    rows.push(TableRow {
                        fiber_degree: r,
                        constituent: cst.highest_weight.to_string(),
                        twist: cst.twist.to_string(),
                        constituent_mult: cst.mult,
                        rep: rep.label.to_string(),
                        degree: i,
                        p,
                        q,
                        dim,
                        mult: mult.clone(),
                    });
                }
            }
        }
    }
    rows
}

/// Status of one cell `(p, i)` of the parallelogram.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum CellStatus {
    /// No (p,p)-classes at all from nontrivial local systems.
    NoHodgeClasses,
    /// Exactly computed (p,p)-mass from nontrivial systems.
    HodgeClasses {
        dim: u64,
        provenance: String,
        /// Set when the (p,p)-mass exhausts the full degree-i cohomology of
        /// its constituent, so the classes descend to rational ones.
        rational: bool,
    },
    /// Some contributing multiplicity is not known.
    Unknown { reason: String },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Cell {
    pub p: usize,
    pub i: usize,
    pub fiber_degree: usize,
    pub status: CellStatus,
    /// Classes from the trivial local system; pulled back from the base
    /// (dimension <= 3), hence algebraic.
    pub algebraic_base_classes: u64,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum Summary {
    /// Every nontrivial cell is empty, so there is nothing to represent by
    /// cycles beyond the algebraic base classes.
    HcHoldsVacuously,
    /// Exact nonzero classes found; the conjecture predicts cycles.
    HcOpenWithClasses { cells: Vec<(usize, usize)> },
    /// Some cell could not be decided because a multiplicity is unknown.
    Inconclusive { cells: Vec<(usize, usize)> },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Verdict {
    pub schema_version: u32,
    pub base: Base,
    pub fiber: Fiber,
    pub power: u32,
    pub gamma: String,
    pub total_dim: usize,
    pub base_dim: usize,
    pub cells: Vec<Cell>,
    pub summary: Summary,
}

/// Scans the parallelogram and aggregates the (p,p)-mass per cell.
pub fn hc_verdict(family: &FamilySpec) -> Verdict {
    let rs = crate::lie::build_root_system::<Rat>(family.base.group());
    let d_x = family.total_dim();
    let d_y = family.base.dim();
    let decomp = fiber_decomposition(family);
    let mut cells = Vec::new();

    for (p, i) in parallelogram_q(d_x, d_y) {
        let r = 2 * p as i64 - i as i64;
        assert!(r >= 0, "parallelogram keeps fiber degrees nonnegative");
        let r = r as usize;
        let mut algebraic = 0u64;
        let mut known_mass = 0u64;
        let mut provenance: Vec<String> = Vec::new();
        let mut unknowns: Vec<String> = Vec::new();
        let mut rational = true;

        for cst in decomp.get(&r).map(Vec::as_slice).unwrap_or(&[]) {
            let v = Irrep::new(rs.group, cst.highest_weight.clone()).unwrap();
            if v.is_trivial() {
                // classes pulled back from the base: present in each even
                // degree up to twice the base dimension
                if i % 2 == 0 && i <= 2 * d_y {
                    algebraic += cst.mult;
                }
                continue;
            }
            let reps = cohomological_reps(&rs, &v);
            for rep in &reps {
                let table = hodge_bigrading(&rs, rep, &v, &TwistConstant(cst.twist), r as i64)
                    .expect("consistent fiber twist");
                let pp = table
                    .entries
                    .get(&(i, p as i64, p as i64))
                    .copied()
                    .unwrap_or(0);
                // purity: any non-(p,p) entry in this degree blocks the
                // rationality upgrade for the cell
                let impure = table.entries.iter().any(|(&(d, tp, tq), &m)| {
                    d == i && m > 0 && (tp != p as i64 || tq != p as i64)
                });
                if pp == 0 {
                    continue;
                }
                if impure {
                    rational = false;
                }
                match mult_lookup(&rep.label, &family.gamma) {
                    MultSymbol::Known {
                        value,
                        provenance: why,
                    } => {
                        if value > 0 {
                            known_mass += pp * cst.mult * value;
                            provenance.push(format!(
                                "{} in H^{i}(V^{}{{{}}}): mult {} ({})",
                                rep.label, cst.highest_weight, cst.twist, value, why
                            ));
                        }
                    }
                    MultSymbol::Unknown { gamma, rep: rname } => {
                        unknowns.push(format!(
                            "multiplicity m({gamma},{rname}) of a ({p},{p})-entry in H^{i}(V^{}{{{}}}) not computed",
                            cst.highest_weight, cst.twist
                        ));
                    }
                }
            }
        }

        let status = if !unknowns.is_empty() {
            CellStatus::Unknown {
                reason: unknowns.join("; "),
            }
        } else if known_mass > 0 {
            CellStatus::HodgeClasses {
                dim: known_mass,
                provenance: provenance.join("; "),
                rational,
            }
        } else {
            CellStatus::NoHodgeClasses
        };
        cells.push(Cell {
            p,
            i,
            fiber_degree: r,
            status,
            algebraic_base_classes: algebraic,
        });
    }

    let with_classes: Vec<(usize, usize)> = cells
        .iter()
        .filter(|c| matches!(c.status, CellStatus::HodgeClasses { .. }))
        .map(|c| (c.p, c.i))
        .collect();
    let undecided: Vec<(usize, usize)> = cells
        .iter()
        .filter(|c| matches!(c.status, CellStatus::Unknown { .. }))
        .map(|c| (c.p, c.i))
        .collect();
    let summary = if !with_classes.is_empty() {
        Summary::HcOpenWithClasses {
            cells: with_classes,
        }
    } else if !undecided.is_empty() {
        Summary::Inconclusive { cells: undecided }
    } else {
        Summary::HcHoldsVacuously
    };

    Verdict {
        schema_version: 1,
        base: family.base,
        fiber: family.fiber,
        power: family.power,
        gamma: family.gamma.to_string(),
        total_dim: d_x,
        base_dim: d_y,
        cells,
        summary,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::build_root_system;
    use crate::reps::weyl_dimension;

    fn siegel(fiber: Fiber, power: u32, gamma: GammaSpec) -> FamilySpec {
        FamilySpec::new(Base::Siegel3, fiber, power, gamma).unwrap()
    }

    #[test]
    fn compatibility_enforced() {
        assert!(FamilySpec::new(
            Base::Ball3,
            Fiber::K3Rho16,
            1,
            GammaSpec::Generic("G".into())
        )
        .is_err());
        assert!(
            FamilySpec::new(Base::Siegel3, Fiber::Genus2Curve, 0, GammaSpec::FullSp4Z).is_err()
        );
    }

    #[test]
    fn parallelogram_examples() {
        // zero thickness: only even i with p = i/2
        assert_eq!(parallelogram_q(3, 3), vec![(0, 0), (1, 2)]);
        // one extra dimension
        assert_eq!(parallelogram_q(4, 3), vec![(0, 0), (1, 1), (1, 2), (2, 3)]);
        // two extra dimensions: two cells on even lines, one on odd
        assert_eq!(
            parallelogram_q(5, 3),
            vec![(0, 0), (1, 0), (1, 1), (1, 2), (2, 2), (2, 3)]
        );
        for (dx, dy) in [(3, 3), (4, 3), (5, 3), (7, 2), (8, 3), (5, 2)] {
            assert_eq!(
                parallelogram_q(dx, dy).len(),
                parallelogram_count(dx, dy),
                "({dx},{dy})"
            );
        }
    }

    #[test]
    fn genus2_square_h2_components() {
        let fam = siegel(Fiber::Genus2Curve, 2, GammaSpec::ParamodularPrime(3));
        let dec = fiber_decomposition(&fam);
        let h2 = &dec[&2];
        // trivial (x3), adjoint V_{2,0} = fund (2,0), and V_{1,1} = fund (0,1)
        let find = |hw: &[i64]| {
            h2.iter()
                .find(|c| c.highest_weight == Weight::from_ints(hw))
        };
        assert_eq!(find(&[0, 0]).unwrap().mult, 3);
        assert_eq!(find(&[2, 0]).unwrap().mult, 1);
        assert_eq!(find(&[0, 1]).unwrap().mult, 1);
    }

    #[test]
    fn abelian_surface_h2_contains_v11() {
        let fam = siegel(Fiber::AbelianSurface, 1, GammaSpec::ParamodularPrime(3));
        let dec = fiber_decomposition(&fam);
        let h2 = &dec[&2];
        assert!(h2
            .iter()
            .any(|c| c.highest_weight == Weight::from_ints(&[0, 1]) && c.mult == 1));
    }

    #[test]
    fn kunneth_dimension_bookkeeping() {
        // total dimension per degree must match the binomial Kunneth count
        let rs4 = build_root_system::<Rat>(GroupTag::Sp4);
        let rs21 = build_root_system::<Rat>(GroupTag::Su21);
        let rs31 = build_root_system::<Rat>(GroupTag::Su31);
        let cases: Vec<(FamilySpec, Vec<u64>, &crate::lie::RootSystem<Rat>)> = vec![
            (
                siegel(Fiber::Genus2Curve, 1, GammaSpec::FullSp4Z),
                vec![1, 4, 1],
                &rs4,
            ),
            (
                siegel(Fiber::Genus2Curve, 2, GammaSpec::FullSp4Z),
                vec![1, 4, 1],
                &rs4,
            ),
            (
                siegel(Fiber::Genus2Curve, 3, GammaSpec::FullSp4Z),
                vec![1, 4, 1],
                &rs4,
            ),
            (
                siegel(Fiber::AbelianSurface, 2, GammaSpec::FullSp4Z),
                vec![1, 4, 6, 4, 1],
                &rs4,
            ),
            (
                FamilySpec::new(
                    Base::Ball2,
                    Fiber::PicardCurve,
                    3,
                    GammaSpec::Generic("G".into()),
                )
                .unwrap(),
                vec![1, 6, 1],
                &rs21,
            ),
            (
                FamilySpec::new(
                    Base::Ball3,
                    Fiber::PicardCurve,
                    2,
                    GammaSpec::Generic("G".into()),
                )
                .unwrap(),
                vec![1, 8, 1],
                &rs31,
            ),
            (
                FamilySpec::new(
                    Base::Ball2,
                    Fiber::K3Rho16,
                    1,
                    GammaSpec::Generic("G".into()),
                )
                .unwrap(),
                vec![1, 0, 22, 0, 1],
                &rs21,
            ),
        ];
        for (fam, betti, rs) in cases {
            let n = fam.power as usize;
            let dec = fiber_decomposition(&fam);
            let top = betti.len() - 1;
            for r in 0..=(top * n) {
                // Kunneth: sum over compositions of r into n parts
                let mut expect = 0u64;
                let mut parts = vec![0usize; n];
                loop {
                    let total: usize = parts.iter().sum();
                    if total == r {
                        expect += parts
                            .iter()
                            .map(|&x| betti.get(x).copied().unwrap_or(0))
                            .product::<u64>();
                    }
                    let mut j = 0;
                    loop {
                        if j == n {
                            break;
                        }
                        parts[j] += 1;
                        if parts[j] <= top {
                            break;
                        }
                        parts[j] = 0;
                        j += 1;
                    }
                    if j == n {
                        break;
                    }
                }
                let got: u64 = dec
                    .get(&r)
                    .map(|cs| {
                        cs.iter()
                            .map(|c| {
                                let v = Irrep::new(rs.group, c.highest_weight.clone()).unwrap();
                                c.mult * weyl_dimension(rs, &v)
                            })
                            .sum()
                    })
                    .unwrap_or(0);
                assert_eq!(got, expect, "{:?}^{} degree {r}", fam.fiber, fam.power);
            }
        }
    }

    #[test]
    fn assembled_tables_are_hodge_symmetric_for_real_constituents() {
        // summed over the cohomological reps, tables of self-dual
        // constituents are symmetric under (p,q) -> (q,p)
        let fam = siegel(Fiber::Genus2Curve, 2, GammaSpec::ParamodularPrime(3));
        let rows = assemble_hodge_tables(&fam);
        let mut mass: BTreeMap<(String, usize, i64, i64), u64> = BTreeMap::new();
        for row in &rows {
            *mass
                .entry((row.constituent.clone(), row.degree, row.p, row.q))
                .or_insert(0) += row.dim;
        }
        for ((cst, d, p, q), m) in &mass {
            if cst == "(0,1)" || cst == "(2,0)" || cst == "(0,0)" {
                assert_eq!(
                    mass.get(&(cst.clone(), *d, *q, *p)),
                    Some(m),
                    "{cst} degree {d} ({p},{q})"
                );
            }
        }
    }

    #[test]
    fn verdict_universal_genus2_curve() {
        for gamma in [
            GammaSpec::FullSp4Z,
            GammaSpec::ParamodularPrime(3),
            GammaSpec::ParamodularPrime(7),
        ] {
            let fam = siegel(Fiber::Genus2Curve, 1, gamma);
            let v = hc_verdict(&fam);
            assert_eq!(v.summary, Summary::HcHoldsVacuously, "{:?}", fam.gamma);
        }
    }

    #[test]
    fn verdict_genus2_square_depends_on_level() {
        for (p, expect_classes) in [(2u64, false), (3, true), (5, true), (7, true)] {
            let fam = siegel(Fiber::Genus2Curve, 2, GammaSpec::ParamodularPrime(p));
            let v = hc_verdict(&fam);
            match (&v.summary, expect_classes) {
                (Summary::HcHoldsVacuously, false) => {}
                (Summary::HcOpenWithClasses { cells }, true) => {
                    assert_eq!(cells, &vec![(2, 2)], "p = {p}");
                    let cell = v.cells.iter().find(|c| (c.p, c.i) == (2, 2)).unwrap();
                    match &cell.status {
                        CellStatus::HodgeClasses { dim, rational, .. } => {
                            let expect_dim = match p {
                                3 | 5 => 1,
                                7 => 2,
                                _ => unreachable!(),
                            };
                            assert_eq!(*dim, expect_dim, "p = {p}");
                            assert!(rational, "purity upgrade at p = {p}");
                        }
                        other => panic!("unexpected status {other:?}"),
                    }
                }
                other => panic!("p = {p}: unexpected {other:?}"),
            }
        }
        // level one is vacuous
        let fam = siegel(Fiber::Genus2Curve, 2, GammaSpec::FullSp4Z);
        assert_eq!(hc_verdict(&fam).summary, Summary::HcHoldsVacuously);
    }

    #[test]
    fn verdict_abelian_surface_matches_square() {
        for (p, expect) in [(1u64, false), (2, false), (3, true), (5, true)] {
            let gamma = if p == 1 {
                GammaSpec::FullSp4Z
            } else {
                GammaSpec::ParamodularPrime(p)
            };
            let fam = siegel(Fiber::AbelianSurface, 1, gamma);
            let v = hc_verdict(&fam);
            assert_eq!(
                matches!(v.summary, Summary::HcOpenWithClasses { .. }),
                expect,
                "p = {p}"
            );
        }
    }

    #[test]
    fn verdict_k3_family_vacuous() {
        let fam = FamilySpec::new(
            Base::Ball2,
            Fiber::K3Rho16,
            1,
            GammaSpec::Generic("Gamma".into()),
        )
        .unwrap();
        let v = hc_verdict(&fam);
        assert_eq!(v.summary, Summary::HcHoldsVacuously);
        // the algebraic fiber classes are recorded
        let h0_cell = v.cells.iter().find(|c| (c.p, c.i) == (1, 0)).unwrap();
        assert_eq!(h0_cell.algebraic_base_classes, 16);
    }

    #[test]
    fn verdict_cy3_family_vacuous() {
        let fam = FamilySpec::new(
            Base::Ball2,
            Fiber::RohdeCy3,
            1,
            GammaSpec::Generic("Gamma".into()),
        )
        .unwrap();
        assert_eq!(hc_verdict(&fam).summary, Summary::HcHoldsVacuously);
    }

    #[test]
    fn verdict_picard_over_ball3() {
        let fam = FamilySpec::new(
            Base::Ball3,
            Fiber::PicardCurve,
            1,
            GammaSpec::Generic("Gamma".into()),
        )
        .unwrap();
        let v = hc_verdict(&fam);
        // the large discrete series carry a (2,2)-entry in H^3 of the
        // weight-one system whose multiplicity is not computed, so the scan
        // cannot conclude
        match &v.summary {
            Summary::Inconclusive { cells } => assert_eq!(cells, &vec![(2, 3)]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn verdict_monotone_under_adding_constituents() {
        // aggregation is additive over nonnegative symbols: scanning the
        // square after the first power can only add classes
        let v1 = hc_verdict(&siegel(
            Fiber::Genus2Curve,
            1,
            GammaSpec::ParamodularPrime(3),
        ));
        let v2 = hc_verdict(&siegel(
            Fiber::Genus2Curve,
            2,
            GammaSpec::ParamodularPrime(3),
        ));
        let count = |v: &Verdict| {
            v.cells
                .iter()
                .filter(|c| matches!(c.status, CellStatus::HodgeClasses { .. }))
                .count()
        };
        assert!(count(&v2) >= count(&v1));
    }
}
