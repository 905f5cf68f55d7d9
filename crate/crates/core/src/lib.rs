//! Dual hyperbolic representations of relativistic energy-momentum.
//!
//! The mass shell `p0² − p² = m²` admits two parametrizations by a hyperbolic
//! angle: the familiar rapidity form `p0 = m·cosh ψ, p = m·sinh ψ`, and a dual
//! counter-rapidity form `p0 = m·coth χ, p = m/sinh χ` that stays regular at
//! the zero-mass / light-speed point (where `p0 = p = 1/φ = π₀`). This crate
//! implements both, together with everything built on top of them:
//!
//! * [`kinematics`] — conversions among momenta, velocities, rapidity and
//!   counter-rapidity, the reciprocity map between the two angles, and the
//!   `q1/q2` energy split.
//! * [`dynamics`] — proper-time integration of the Lorentz-force equations,
//!   the rapidity-projected evolution, and hyperbolic-solution fitting.
//! * [`spinor`] — chiral Dirac machinery: boost formulas, the coupled
//!   two-spinor equations, the counter-rapidity split into eigenvalue
//!   problems, and the regular massless limit.
//! * [`qdeform`] — the transcendental mass equation, q-bracket identities,
//!   the κ/α parametrization, quantized velocity ladder and de Broglie map.
//! * [`gamma_algebra`] — counter-boost transformations, the Γ-group of
//!   generators `G_ν = ρ²∂_ν − x_ν D` verified in exact rational arithmetic,
//!   and its gamma-matrix realization.
//! * [`halfplane`] — upper half-plane geometry: cross-ratio, geodesic
//!   distance, the g-function evolution and Riccati equation, and the
//!   equivalence of the momentum-space integral with hyperbolic distance.
//! * [`verify`] — seeded identity suites producing machine-readable reports,
//!   including an errata list of formula misprints detected numerically.
//!
//! Natural units (`c = 1`) are used throughout; unit conversions belong to
//! front ends.

pub mod dynamics;
mod error;
pub mod gamma_algebra;
pub mod halfplane;
pub mod kinematics;
pub mod numeric;
pub mod qdeform;
pub mod spinor;
pub mod verify;

pub use error::{Error, Result};
