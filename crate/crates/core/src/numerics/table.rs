//! Cubic Hermite interpolation on a uniform grid.
//!
//! Node derivatives are either supplied exactly (synthesized curves know
//! their own ODE right-hand sides) or reconstructed with 4th-order finite
//! differences. Evaluation outside the grid extrapolates the edge cubic.

#[derive(Clone, Debug)]
pub struct HermiteTable {
    x0: f64,
    dx: f64,
    y: Vec<f64>,
    dy: Vec<f64>,
}

impl HermiteTable {
    /// Table from values and exact node derivatives.
    pub fn new(x0: f64, x1: f64, y: Vec<f64>, dy: Vec<f64>) -> Self {
        assert!(y.len() >= 2 && y.len() == dy.len(), "need >= 2 nodes");
        assert!(x1 > x0);
        let dx = (x1 - x0) / (y.len() - 1) as f64;
        Self { x0, dx, y, dy }
    }

    /// Table from values only; node derivatives from 4th-order differences
    /// (one-sided stencils at the edges).
    pub fn from_values(x0: f64, x1: f64, y: Vec<f64>) -> Self {
        let n = y.len();
        assert!(n >= 5, "need >= 5 nodes for the difference stencil");
        let dx = (x1 - x0) / (n - 1) as f64;
        let mut dy = vec![0.0; n];
        for i in 0..n {
            dy[i] = if i >= 2 && i + 2 < n {
                (y[i - 2] - 8.0 * y[i - 1] + 8.0 * y[i + 1] - y[i + 2]) / (12.0 * dx)
            } else if i < 2 {
                (-25.0 * y[i] + 48.0 * y[i + 1] - 36.0 * y[i + 2] + 16.0 * y[i + 3]
                    - 3.0 * y[i + 4])
                    / (12.0 * dx)
            } else {
                (25.0 * y[i] - 48.0 * y[i - 1] + 36.0 * y[i - 2] - 16.0 * y[i - 3]
                    + 3.0 * y[i - 4])
                    / (12.0 * dx)
            };
        }
        Self { x0, dx, y, dy }
    }

    pub fn len(&self) -> usize {
        self.y.len()
    }

    pub fn is_empty(&self) -> bool {
        self.y.is_empty()
    }

    pub fn x_min(&self) -> f64 {
        self.x0
    }

    pub fn x_max(&self) -> f64 {
        self.x0 + self.dx * (self.y.len() - 1) as f64
    }

    pub fn values(&self) -> &[f64] {
        &self.y
    }

    fn cell(&self, x: f64) -> (usize, f64) {
        let t = (x - self.x0) / self.dx;
        let i = (t.floor() as isize).clamp(0, self.y.len() as isize - 2) as usize;
        (i, t - i as f64)
    }

    pub fn eval(&self, x: f64) -> f64 {
        let (i, u) = self.cell(x);
        let (y0, y1) = (self.y[i], self.y[i + 1]);
        let (m0, m1) = (self.dy[i] * self.dx, self.dy[i + 1] * self.dx);
        let u2 = u * u;
        let u3 = u2 * u;
        (2.0 * u3 - 3.0 * u2 + 1.0) * y0
            + (u3 - 2.0 * u2 + u) * m0
            + (-2.0 * u3 + 3.0 * u2) * y1
            + (u3 - u2) * m1
    }

    pub fn deriv(&self, x: f64) -> f64 {
        let (i, u) = self.cell(x);
        let (y0, y1) = (self.y[i], self.y[i + 1]);
        let (m0, m1) = (self.dy[i] * self.dx, self.dy[i + 1] * self.dx);
        let u2 = u * u;
        ((6.0 * u2 - 6.0 * u) * y0
            + (3.0 * u2 - 4.0 * u + 1.0) * m0
            + (-6.0 * u2 + 6.0 * u) * y1
            + (3.0 * u2 - 2.0 * u) * m1)
            / self.dx
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproduces_cubic_exactly() {
        let f = |x: f64| 2.0 * x * x * x - x * x + 0.5 * x - 3.0;
        let df = |x: f64| 6.0 * x * x - 2.0 * x + 0.5;
        let n = 9;
        let xs: Vec<f64> = (0..n).map(|i| i as f64 / (n - 1) as f64).collect();
        let t = HermiteTable::new(
            0.0,
            1.0,
            xs.iter().map(|&x| f(x)).collect(),
            xs.iter().map(|&x| df(x)).collect(),
        );
        for k in 0..100 {
            let x = k as f64 / 99.0;
            assert!((t.eval(x) - f(x)).abs() < 1e-14);
            assert!((t.deriv(x) - df(x)).abs() < 1e-12);
        }
    }

    #[test]
    fn interpolates_smooth_function_to_h4() {
        let n = 257;
        let y: Vec<f64> = (0..n)
            .map(|i| (2.0 * std::f64::consts::PI * i as f64 / (n - 1) as f64).sin())
            .collect();
        let t = HermiteTable::from_values(0.0, 1.0, y);
        let mut worst = 0.0f64;
        for k in 0..1000 {
            let x = k as f64 / 999.0;
            let exact = (2.0 * std::f64::consts::PI * x).sin();
            worst = worst.max((t.eval(x) - exact).abs());
        }
        // h = 1/256, expect ~ h^4 * (2 pi)^4 / 384 ~ 1e-8
        assert!(worst < 5e-8, "worst={worst}");
    }
}
