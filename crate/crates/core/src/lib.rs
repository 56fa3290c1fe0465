//! Simulation library for interference oscillations of a driven two-level
//! system annealed from a transverse to a longitudinal field.
//!
//! The library is organized in layers:
//!
//! - [`numerics`]: complex 2x2 algebra over the Pauli basis, special
//!   functions, adaptive quadrature (including Cauchy principal values) and
//!   an embedded Runge-Kutta integrator.
//! - [`schedule`]: annealing schedules in Cartesian `(A, B)`, angular
//!   `(Omega, theta)` and angular-progression (`dtheta/dtau`) form, plus
//!   synthesis of schedules from a gap profile and a progression.
//! - [`closed`]: closed-system solvers (exact propagation, Magnus order 1
//!   and 2, the beam-splitter interferometer model) and coherence
//!   extraction in the computational basis.
//! - [`bath`]: Ohmic environment model with spectral functions, correlation
//!   function, timescales and weak-coupling validity diagnostics.
//! - [`open`]: open-system solvers in the adiabatic frame (Redfield/TCL2,
//!   Lindblad with the rotating-wave approximation, its closed-form
//!   solution, and the damped-oscillation model) plus effective-temperature
//!   fitting.
//! - [`bounds`]: analytic error bounds exposed as callable diagnostics.

pub mod bath;
pub mod bounds;
pub mod closed;
pub mod numerics;
pub mod open;
pub mod schedule;

pub use numerics::ToleranceConfig;
