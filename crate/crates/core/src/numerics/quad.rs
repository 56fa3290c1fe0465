//! Adaptive quadrature on finite and semi-infinite intervals, plus Cauchy
//! principal values.
//!
//! Panels are integrated with a 15-point Gauss-Legendre rule whose nodes are
//! generated at startup by Newton iteration on the Legendre polynomial; the
//! error estimate on a panel compares the one-panel result against the sum of
//! the two half-panel results.

use num_complex::Complex64;
use std::sync::OnceLock;

#[derive(Debug, thiserror::Error)]
pub enum QuadError {
    #[error("quadrature failed to converge near x = {at:.6e} (residual {residual:.3e})")]
    NoConvergence { at: f64, residual: f64 },
    #[error("principal-value pole {pole:.6e} outside open interval ({a:.6e}, {b:.6e})")]
    PoleOutsideInterval { pole: f64, a: f64, b: f64 },
}

/// Scalar types a quadrature can accumulate.
pub trait Quadrand: Copy {
    fn q_zero() -> Self;
    fn q_add(self, o: Self) -> Self;
    fn q_scale(self, f: f64) -> Self;
    fn q_abs(self) -> f64;
}

impl Quadrand for f64 {
    fn q_zero() -> Self {
        0.0
    }
    fn q_add(self, o: Self) -> Self {
        self + o
    }
    fn q_scale(self, f: f64) -> Self {
        self * f
    }
    fn q_abs(self) -> f64 {
        self.abs()
    }
}

impl Quadrand for Complex64 {
    fn q_zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn q_add(self, o: Self) -> Self {
        self + o
    }
    fn q_scale(self, f: f64) -> Self {
        self * f
    }
    fn q_abs(self) -> f64 {
        self.norm()
    }
}

const GL_N: usize = 15;

fn legendre_and_deriv(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

fn gl_rule() -> &'static ([f64; GL_N], [f64; GL_N]) {
    static RULE: OnceLock<([f64; GL_N], [f64; GL_N])> = OnceLock::new();
    RULE.get_or_init(|| {
        let mut xs = [0.0; GL_N];
        let mut ws = [0.0; GL_N];
        for i in 0..GL_N {
            let mut x =
                (std::f64::consts::PI * (i as f64 + 0.75) / (GL_N as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre_and_deriv(GL_N, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre_and_deriv(GL_N, x);
            xs[i] = -x; // ascending order
            ws[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        xs.reverse();
        ws.reverse();
        (xs, ws)
    })
}

fn gl_panel<T: Quadrand>(f: &mut impl FnMut(f64) -> T, a: f64, b: f64) -> T {
    let (xs, ws) = gl_rule();
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = T::q_zero();
    for i in 0..GL_N {
        acc = acc.q_add(f(mid + half * xs[i]).q_scale(ws[i]));
    }
    acc.q_scale(half)
}

const MAX_DEPTH: usize = 44;

fn adaptive<T: Quadrand>(
    f: &mut impl FnMut(f64) -> T,
    a: f64,
    b: f64,
    tol: f64,
    depth: usize,
    coarse: T,
) -> Result<T, QuadError> {
    let mid = 0.5 * (a + b);
    let left = gl_panel(f, a, mid);
    let right = gl_panel(f, mid, b);
    let fine = left.q_add(right);
    let residual = fine.q_add(coarse.q_scale(-1.0)).q_abs();
    if residual <= tol || b - a < 1e-15 * (b.abs() + a.abs() + 1.0) {
        return Ok(fine);
    }
    if depth >= MAX_DEPTH {
        return Err(QuadError::NoConvergence { at: mid, residual });
    }
    let l = adaptive(f, a, mid, 0.5 * tol, depth + 1, left)?;
    let r = adaptive(f, mid, b, 0.5 * tol, depth + 1, right)?;
    Ok(l.q_add(r))
}

/// Adaptive quadrature of `f` over `[a, b]` to absolute tolerance `tol`.
pub fn quad<T: Quadrand>(
    f: &mut impl FnMut(f64) -> T,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<T, QuadError> {
    if a == b {
        return Ok(T::q_zero());
    }
    let (lo, hi, sign) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };
    let coarse = gl_panel(f, lo, hi);
    let v = adaptive(f, lo, hi, tol, 0, coarse)?;
    Ok(v.q_scale(sign))
}

/// Semi-infinite quadrature `int_0^inf f` via the map `x = scale u/(1-u)`.
///
/// `scale` should match the decay scale of the integrand.
pub fn quad_semi_infinite<T: Quadrand>(
    f: &mut impl FnMut(f64) -> T,
    scale: f64,
    tol: f64,
) -> Result<T, QuadError> {
    quad(
        &mut |u: f64| {
            let om = 1.0 - u;
            let x = scale * u / om;
            f(x).q_scale(scale / (om * om))
        },
        0.0,
        1.0,
        tol,
    )
}

/// Cauchy principal value of `int_a^b f(x) dx` where `f` has a simple pole
/// at `pole` inside `(a, b)`.
///
/// The interval is split into a symmetric window `[pole-h, pole+h]` and the
/// regular remainder. On the window the pole cancels pairwise:
/// `int_0^h [f(pole+u) + f(pole-u)] du`, which subtracts the singular part
/// exactly for every quadrature node.
pub fn quad_pv(
    f: &mut impl FnMut(f64) -> f64,
    pole: f64,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<f64, QuadError> {
    if !(a < pole && pole < b) {
        return Err(QuadError::PoleOutsideInterval { pole, a, b });
    }
    let h = (pole - a).min(b - pole);
    let mut total = quad(&mut |u: f64| f(pole + u) + f(pole - u), 0.0, h, tol)?;
    if pole - h > a {
        total += quad(f, a, pole - h, tol)?;
    }
    if pole + h < b {
        total += quad(f, pole + h, b, tol)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn polynomial_is_exact() {
        let v = quad(&mut |x: f64| 3.0 * x * x, 0.0, 2.0, 1e-12).unwrap();
        assert!((v - 8.0).abs() < 1e-13);
    }

    #[test]
    fn oscillatory_integral() {
        // int_0^10 cos(40 x) dx = sin(400)/40
        let v = quad(&mut |x: f64| (40.0 * x).cos(), 0.0, 10.0, 1e-12).unwrap();
        assert!((v - (400.0f64).sin() / 40.0).abs() < 1e-11);
    }

    #[test]
    fn complex_integrand() {
        // int_0^1 e^{i pi x} dx = 2i/pi
        let v = quad(
            &mut |x: f64| Complex64::new(0.0, std::f64::consts::PI * x).exp(),
            0.0,
            1.0,
            1e-12,
        )
        .unwrap();
        let expect = Complex64::new(0.0, 2.0 / std::f64::consts::PI);
        assert!((v - expect).norm() < 1e-12);
    }

    #[test]
    fn semi_infinite_gamma_two() {
        // int_0^inf w e^{-w} dw = 1
        let v = quad_semi_infinite(&mut |w: f64| w * (-w).exp(), 1.0, 1e-12).unwrap();
        assert!((v - 1.0).abs() < 1e-11);
    }

    #[test]
    fn pv_odd_integrand_vanishes() {
        let v = quad_pv(&mut |x: f64| 1.0 / x, 0.0, -1.0, 1.0, 1e-12).unwrap();
        assert!(v.abs() < 1e-13);
    }

    #[test]
    fn pv_analytic_antiderivative_oracle() {
        // PV int_0^2 dx/(x-1) = 0, PV int_0^3 dx/(x-1) = ln 2
        let v1 = quad_pv(&mut |x: f64| 1.0 / (x - 1.0), 1.0, 0.0, 2.0, 1e-12).unwrap();
        assert!(v1.abs() < 1e-12);
        let v2 = quad_pv(&mut |x: f64| 1.0 / (x - 1.0), 1.0, 0.0, 3.0, 1e-12).unwrap();
        assert!((v2 - std::f64::consts::LN_2).abs() < 1e-12);
    }

    #[test]
    fn pv_antisymmetric_under_reflection() {
        // reflecting the regular factor about the pole flips the sign of the
        // principal value on a symmetric interval
        let v1 = quad_pv(&mut |x: f64| (x * x).exp() / (x - 0.5), 0.5, 0.0, 1.0, 1e-12).unwrap();
        let v2 = quad_pv(
            &mut |x: f64| ((1.0 - x) * (1.0 - x)).exp() / (x - 0.5),
            0.5,
            0.0,
            1.0,
            1e-12,
        )
        .unwrap();
        assert!((v1 + v2).abs() < 1e-11, "v1={v1} v2={v2}");
    }

    #[test]
    fn pole_outside_interval_rejected() {
        assert!(quad_pv(&mut |x: f64| 1.0 / x, 2.0, 0.0, 1.0, 1e-10).is_err());
    }
}
