//! The transformation group built on counter-rapidity translations: velocity
//! and four-vector maps, the Γ-group of differential generators verified in
//! exact rational arithmetic, and its realization by Dirac gamma matrices.

mod boost;
mod matrices;
mod operators;
pub mod poly;

pub use boost::{
    complementary_velocity_add, counter_boost_velocity, fourvector_transform,
    printed_v0_mismatch, CounterBoostParam, FourVector, SHELL_MATCH_TOL,
};
pub use matrices::{
    casimir_check, gamma_realization_check, CasimirReport, GammaBasis, GammaRealizationReport,
    MatrixCheck,
};
pub use operators::{
    commutator_suite, generator, generator_apply, lorentz, lowered, rho2, CommutatorSuiteReport,
    OperatorCheck, ETA, TEST_SPACE_DEGREE,
};
