//! Theta-stable parabolics, cohomological modules and their bigraded
//! cohomology tables.

mod aq;
mod parabolic;
mod tables;

pub use aq::{aq_module, cohomological_reps, AqError, CohomRep, KType, Label};
pub use parabolic::{enumerate_parabolics, enumerate_parabolics_with_bound, ThetaParabolic};
pub use tables::{gk_cohomology, hodge_bigrading, hodge_class_locator, HodgeTable, TableError};
