//! Complex 2x2 matrices and their decomposition over the Pauli basis.

use super::NumericsError;
use num_complex::Complex64;

pub type C64 = Complex64;

const I_UNIT: C64 = C64::new(0.0, 1.0);

/// Plain complex 2x2 matrix with the handful of operations the solvers need.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2 {
    pub m: [[C64; 2]; 2],
}

impl Mat2 {
    pub const fn new(m00: C64, m01: C64, m10: C64, m11: C64) -> Self {
        Self {
            m: [[m00, m01], [m10, m11]],
        }
    }

    pub fn zero() -> Self {
        Self::new(C64::ZERO, C64::ZERO, C64::ZERO, C64::ZERO)
    }

    pub fn identity() -> Self {
        Self::new(C64::ONE, C64::ZERO, C64::ZERO, C64::ONE)
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let a = &self.m;
        let b = &o.m;
        Mat2::new(
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        )
    }

    pub fn adjoint(&self) -> Mat2 {
        Mat2::new(
            self.m[0][0].conj(),
            self.m[1][0].conj(),
            self.m[0][1].conj(),
            self.m[1][1].conj(),
        )
    }

    pub fn add(&self, o: &Mat2) -> Mat2 {
        let mut r = *self;
        for i in 0..2 {
            for j in 0..2 {
                r.m[i][j] += o.m[i][j];
            }
        }
        r
    }

    pub fn sub(&self, o: &Mat2) -> Mat2 {
        let mut r = *self;
        for i in 0..2 {
            for j in 0..2 {
                r.m[i][j] -= o.m[i][j];
            }
        }
        r
    }

    pub fn scale(&self, c: C64) -> Mat2 {
        let mut r = *self;
        for i in 0..2 {
            for j in 0..2 {
                r.m[i][j] *= c;
            }
        }
        r
    }

    pub fn commutator(&self, o: &Mat2) -> Mat2 {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn trace(&self) -> C64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn det(&self) -> C64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.m
            .iter()
            .flatten()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn max_abs_diff(&self, o: &Mat2) -> f64 {
        let mut d = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                d = d.max((self.m[i][j] - o.m[i][j]).norm());
            }
        }
        d
    }

    /// Largest elementwise deviation from the identity of `self^dagger * self`.
    pub fn unitarity_error(&self) -> f64 {
        self.adjoint().mul(self).max_abs_diff(&Mat2::identity())
    }

    pub fn hermiticity_error(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    /// Eigenvalues of a (nearly) Hermitian matrix, ascending.
    pub fn hermitian_eigenvalues(&self) -> (f64, f64) {
        let a = self.m[0][0].re;
        let b = self.m[1][1].re;
        let c = 0.5 * (self.m[0][1] + self.m[1][0].conj());
        let mid = 0.5 * (a + b);
        let rad = (0.25 * (a - b) * (a - b) + c.norm_sqr()).sqrt();
        (mid - rad, mid + rad)
    }

    pub fn apply(&self, v: [C64; 2]) -> [C64; 2] {
        [
            self.m[0][0] * v[0] + self.m[0][1] * v[1],
            self.m[1][0] * v[0] + self.m[1][1] * v[1],
        ]
    }
}

pub fn pauli_x() -> Mat2 {
    Mat2::new(C64::ZERO, C64::ONE, C64::ONE, C64::ZERO)
}

pub fn pauli_y() -> Mat2 {
    Mat2::new(C64::ZERO, -I_UNIT, I_UNIT, C64::ZERO)
}

pub fn pauli_z() -> Mat2 {
    Mat2::new(C64::ONE, C64::ZERO, C64::ZERO, -C64::ONE)
}

/// Decomposition of a 2x2 complex matrix as `c0 I + cx X + cy Y + cz Z`.
#[derive(Clone, Copy, Debug)]
pub struct PauliVector {
    pub c0: C64,
    pub cx: C64,
    pub cy: C64,
    pub cz: C64,
}

impl PauliVector {
    pub fn new(c0: C64, cx: C64, cy: C64, cz: C64) -> Self {
        Self { c0, cx, cy, cz }
    }

    /// Hermitian element from real coefficients.
    pub fn hermitian(c0: f64, cx: f64, cy: f64, cz: f64) -> Self {
        Self::new(c0.into(), cx.into(), cy.into(), cz.into())
    }

    pub fn to_matrix(&self) -> Mat2 {
        Mat2::new(
            self.c0 + self.cz,
            self.cx - I_UNIT * self.cy,
            self.cx + I_UNIT * self.cy,
            self.c0 - self.cz,
        )
    }

    pub fn from_matrix(m: &Mat2) -> Self {
        let a = &m.m;
        Self {
            c0: 0.5 * (a[0][0] + a[1][1]),
            cx: 0.5 * (a[0][1] + a[1][0]),
            cy: 0.5 * I_UNIT * (a[0][1] - a[1][0]),
            cz: 0.5 * (a[0][0] - a[1][1]),
        }
    }

    /// Norm of the imaginary parts of the coefficients; zero iff the
    /// represented operator is Hermitian.
    pub fn hermiticity_defect(&self) -> f64 {
        (self.c0.im.powi(2) + self.cx.im.powi(2) + self.cy.im.powi(2) + self.cz.im.powi(2)).sqrt()
    }
}

/// 2x2 unitary with invariant checks (`U^dagger U = I`, `|det U| = 1`).
#[derive(Clone, Copy, Debug)]
pub struct Unitary2(Mat2);

impl Unitary2 {
    pub const TOL: f64 = 1e-12;

    pub fn new(m: Mat2) -> Result<Self, NumericsError> {
        let u = Self(m);
        if u.unitarity_error() <= 1e-9 {
            Ok(u)
        } else {
            Err(NumericsError::NotUnitary(u.unitarity_error()))
        }
    }

    /// Wraps without checking; for matrices produced by exact constructions.
    pub fn new_unchecked(m: Mat2) -> Self {
        Self(m)
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.0
    }

    pub fn unitarity_error(&self) -> f64 {
        self.0.unitarity_error()
    }

    pub fn det_modulus_error(&self) -> f64 {
        (self.0.det().norm() - 1.0).abs()
    }
}

/// 2x2 density matrix (Hermitian, unit trace).
#[derive(Clone, Copy, Debug)]
pub struct Density2(Mat2);

impl Density2 {
    pub fn new(m: Mat2) -> Self {
        Self(m)
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.0
    }

    pub fn trace_error(&self) -> f64 {
        (self.0.trace() - C64::ONE).norm()
    }

    pub fn hermiticity_error(&self) -> f64 {
        self.0.hermiticity_error()
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.0.hermitian_eigenvalues().0
    }
}

/// `exp(-i h)` for Hermitian `h`, via the closed form
/// `exp(-i eta n.sigma) = cos(eta) I - i sin(eta) n.sigma`.
///
/// The identity coefficient contributes the global phase `exp(-i c0)`.
pub fn su2_exp(h: &PauliVector) -> Result<Unitary2, NumericsError> {
    let scale = (h.c0.norm() + h.cx.norm() + h.cy.norm() + h.cz.norm()).max(1.0);
    let defect = h.hermiticity_defect();
    if defect > 1e-12 * scale {
        return Err(NumericsError::NotHermitian(defect));
    }
    let (x, y, z) = (h.cx.re, h.cy.re, h.cz.re);
    let eta = (x * x + y * y + z * z).sqrt();
    let phase = (-I_UNIT * h.c0.re).exp();
    let mat = if eta == 0.0 {
        Mat2::identity()
    } else {
        let (s, c) = eta.sin_cos();
        let f = -I_UNIT * (s / eta);
        Mat2::new(
            C64::from(c) + f * z,
            f * (x - I_UNIT * y) * C64::ONE,
            f * (x + I_UNIT * y) * C64::ONE,
            C64::from(c) - f * z,
        )
    };
    Ok(Unitary2::new_unchecked(mat.scale(phase)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent oracle: 30-term scaled-and-squared power series for
    /// `exp(-i h)`.
    fn exp_series(h: &Mat2) -> Mat2 {
        let mut k = 0u32;
        let mut norm = h.norm();
        while norm > 0.5 {
            norm *= 0.5;
            k += 1;
        }
        let a = h.scale(C64::from(0.5f64.powi(k as i32)) * -I_UNIT);
        let mut term = Mat2::identity();
        let mut sum = Mat2::identity();
        for n in 1..=30 {
            term = term.mul(&a).scale(C64::from(1.0 / n as f64));
            sum = sum.add(&term);
        }
        for _ in 0..k {
            sum = sum.mul(&sum);
        }
        sum
    }

    #[test]
    fn su2_exp_identity_case() {
        let u = su2_exp(&PauliVector::hermitian(0.0, 0.0, 0.0, 0.0)).unwrap();
        assert!(u.matrix().max_abs_diff(&Mat2::identity()) == 0.0);
    }

    #[test]
    fn su2_exp_quarter_turn_x() {
        // h = (pi/2) X  ->  -i X
        let u = su2_exp(&PauliVector::hermitian(
            0.0,
            std::f64::consts::FRAC_PI_2,
            0.0,
            0.0,
        ))
        .unwrap();
        let expected = pauli_x().scale(-I_UNIT);
        assert!(u.matrix().max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn su2_exp_rejects_non_hermitian() {
        let h = PauliVector::new(
            C64::ZERO,
            C64::new(0.3, 0.2),
            C64::new(0.1, 0.0),
            C64::ZERO,
        );
        assert!(su2_exp(&h).is_err());
    }

    #[test]
    fn pauli_roundtrip_exact() {
        let m = Mat2::new(
            C64::new(1.0, 2.0),
            C64::new(-0.5, 0.25),
            C64::new(0.125, -4.0),
            C64::new(0.0, 1.5),
        );
        let p = PauliVector::from_matrix(&m);
        assert!(p.to_matrix().max_abs_diff(&m) < 1e-15);
    }

    proptest! {
        #[test]
        fn su2_exp_matches_series_oracle(
            c0 in -3.0f64..3.0, x in -3.0f64..3.0, y in -3.0f64..3.0, z in -3.0f64..3.0
        ) {
            let h = PauliVector::hermitian(c0, x, y, z);
            let u = su2_exp(&h).unwrap();
            let oracle = exp_series(&h.to_matrix());
            prop_assert!(u.matrix().max_abs_diff(&oracle) < 1e-12);
        }

        #[test]
        fn su2_exp_output_is_unitary(
            c0 in -10.0f64..10.0, x in -10.0f64..10.0, y in -10.0f64..10.0, z in -10.0f64..10.0
        ) {
            let u = su2_exp(&PauliVector::hermitian(c0, x, y, z)).unwrap();
            prop_assert!(u.unitarity_error() < 1e-12);
            prop_assert!(u.det_modulus_error() < 1e-12);
        }
    }
}
