//! Exact-arithmetic machinery for computing cohomological representations of
//! `SU(2,1)`, `SU(3,1)` and `Sp(4,R)`, the Hodge bigrading of their relative
//! Lie algebra cohomology with finite-dimensional coefficients, cusp-form
//! dimension formulas with Atkin-Lehner refinement, Saito-Kurokawa
//! multiplicities at paramodular level, and Hodge-class scans for universal
//! families over the corresponding locally symmetric spaces.
//!
//! All weight-lattice arithmetic is exact. The core is generic over the
//! rational scalar type through the [`scalar::Scalar`] trait; the concrete
//! aliases [`Rat`] (machine-word rationals) and [`BigRat`] (arbitrary
//! precision) are what most callers want.

// index loops and explicit `% == 0` read better in small linear algebra
#![allow(clippy::needless_range_loop, clippy::manual_is_multiple_of)]

pub mod cohomology;
pub mod geometry;
pub mod hodge;
pub mod lie;
pub mod linalg;
pub mod modforms;
pub mod multiplicity;
pub mod reps;
pub mod scalar;

pub use scalar::{BigRat, Rat, Scalar};

pub use lie::{build_root_system, dominant_chamber_test, weyl_group};
pub use lie::{GroupTag, Root, RootSystem, Weight, WeylGroup};

pub use reps::{Irrep, RealityType, WeightMultiset};

pub use hodge::{GradingElement, HodgeNumbers, TwistConstant};

pub use cohomology::{
    aq_module, cohomological_reps, enumerate_parabolics, gk_cohomology, hodge_bigrading,
    hodge_class_locator, CohomRep, HodgeTable, KType, Label, ThetaParabolic,
};

pub use modforms::{dim_cusp, CuspSpaceSpec, Restriction, Sign};

pub use multiplicity::{mult_lookup, mult_sigma, GammaSpec, MultSymbol};

pub use geometry::{
    assemble_hodge_tables, fiber_decomposition, hc_verdict, parallelogram_q, Base, FamilySpec,
    Fiber, Verdict,
};
