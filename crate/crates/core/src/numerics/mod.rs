//! Numeric substrate: 2x2 complex algebra over the Pauli basis, special
//! functions, adaptive quadrature and an adaptive Runge-Kutta integrator.

pub mod ode;
pub mod pauli;
pub mod quad;
pub mod special;
pub mod table;

pub use ode::{integrate_ode, OdeError, OdeOptions, OdeTrajectory};
pub use pauli::{su2_exp, Density2, Mat2, PauliVector, Unitary2, C64};
pub use quad::{quad, quad_pv, quad_semi_infinite, QuadError};
pub use special::{dawson, erf, erfc, normal_cdf};
pub use table::HermiteTable;

use serde::{Deserialize, Serialize};

/// Central tolerance knobs shared by the solvers.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct ToleranceConfig {
    pub ode_rel_tol: f64,
    pub ode_abs_tol: f64,
    pub quad_tol: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            ode_rel_tol: 1e-10,
            ode_abs_tol: 1e-12,
            quad_tol: 1e-10,
        }
    }
}

impl ToleranceConfig {
    pub fn validate(&self) -> Result<(), NumericsError> {
        if self.ode_rel_tol > 0.0 && self.ode_abs_tol > 0.0 && self.quad_tol > 0.0 {
            Ok(())
        } else {
            Err(NumericsError::BadTolerance)
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum NumericsError {
    #[error("tolerances must be strictly positive")]
    BadTolerance,
    #[error("operator is not Hermitian (imaginary coefficient norm {0:.3e})")]
    NotHermitian(f64),
    #[error("matrix is not unitary (deviation {0:.3e})")]
    NotUnitary(f64),
    #[error(transparent)]
    Ode(#[from] OdeError),
    #[error(transparent)]
    Quad(#[from] QuadError),
}
