//! Embedded Dormand-Prince 5(4) integrator with step-size control.
//!
//! State vectors are flat `f64` slices (complex components packed as
//! re/im pairs by the callers). Every accepted step is recorded, so
//! trajectories can be sampled at interior points with cubic Hermite
//! interpolation; callers that need interpolation-free values at specific
//! abscissae pass them as `checkpoints`, which the stepper lands on exactly.

#[derive(Debug, thiserror::Error)]
pub enum OdeError {
    #[error("step size underflow at t = {t:.9e}: the problem is too stiff at this point")]
    StepUnderflow { t: f64 },
    #[error("exceeded {max} steps at t = {t:.9e}")]
    MaxSteps { t: f64, max: usize },
}

#[derive(Clone, Copy, Debug)]
pub struct OdeOptions {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub h_init: Option<f64>,
    pub h_max: Option<f64>,
    pub max_steps: usize,
}

impl Default for OdeOptions {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-12,
            h_init: None,
            h_max: None,
            max_steps: 50_000_000,
        }
    }
}

impl OdeOptions {
    pub fn with_tol(rel: f64, abs: f64) -> Self {
        Self {
            rel_tol: rel,
            abs_tol: abs,
            ..Self::default()
        }
    }
}

/// Accepted integration steps: states and derivatives at each step endpoint.
#[derive(Clone, Debug)]
pub struct OdeTrajectory {
    pub ts: Vec<f64>,
    pub ys: Vec<Vec<f64>>,
    pub fs: Vec<Vec<f64>>,
}

impl OdeTrajectory {
    pub fn end_state(&self) -> &[f64] {
        self.ys.last().expect("trajectory has at least one point")
    }

    pub fn end_time(&self) -> f64 {
        *self.ts.last().unwrap()
    }

    /// Sample at an interior time by cubic Hermite interpolation on the
    /// bracketing accepted step.
    pub fn sample(&self, t: f64) -> Vec<f64> {
        let n = self.ts.len();
        if t <= self.ts[0] {
            return self.ys[0].clone();
        }
        if t >= self.ts[n - 1] {
            return self.ys[n - 1].clone();
        }
        let i = match self
            .ts
            .binary_search_by(|probe| probe.partial_cmp(&t).unwrap())
        {
            Ok(k) => return self.ys[k].clone(),
            Err(k) => k - 1,
        };
        let h = self.ts[i + 1] - self.ts[i];
        let u = (t - self.ts[i]) / h;
        let u2 = u * u;
        let u3 = u2 * u;
        let (a, b, c, d) = (
            2.0 * u3 - 3.0 * u2 + 1.0,
            u3 - 2.0 * u2 + u,
            -2.0 * u3 + 3.0 * u2,
            u3 - u2,
        );
        (0..self.ys[i].len())
            .map(|j| {
                a * self.ys[i][j]
                    + b * h * self.fs[i][j]
                    + c * self.ys[i + 1][j]
                    + d * h * self.fs[i + 1][j]
            })
            .collect()
    }
}

// Dormand-Prince 5(4) tableau.
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
// embedded 4th-order weights
const E1: f64 = B1 - 5179.0 / 57600.0;
const E3: f64 = B3 - 7571.0 / 16695.0;
const E4: f64 = B4 - 393.0 / 640.0;
const E5: f64 = B5 + 92097.0 / 339200.0;
const E6: f64 = B6 - 187.0 / 2100.0;
const E7: f64 = -1.0 / 40.0;

/// Integrate `dy/dt = rhs(t, y)` from `t0` to `t1` (forward).
///
/// `checkpoints` (strictly inside `(t0, t1)`, ascending) are hit exactly by
/// shortening steps.
pub fn integrate_ode<F>(
    mut rhs: F,
    y0: &[f64],
    t0: f64,
    t1: f64,
    checkpoints: Option<&[f64]>,
    opts: &OdeOptions,
) -> Result<OdeTrajectory, OdeError>
where
    F: FnMut(f64, &[f64], &mut [f64]),
{
    assert!(t1 >= t0, "integration must run forward");
    let dim = y0.len();
    let span = t1 - t0;
    let mut traj = OdeTrajectory {
        ts: vec![t0],
        ys: vec![y0.to_vec()],
        fs: Vec::new(),
    };
    let mut f0 = vec![0.0; dim];
    rhs(t0, y0, &mut f0);
    traj.fs.push(f0.clone());
    if span == 0.0 {
        return Ok(traj);
    }

    let h_max = opts.h_max.unwrap_or(span).min(span);
    let mut h = match opts.h_init {
        Some(h) => h.min(h_max),
        None => initial_step(&mut rhs, t0, y0, &f0, opts).min(h_max),
    };

    let mut cps = checkpoints.unwrap_or(&[]).iter().copied().peekable();
    let mut t = t0;
    let mut y = y0.to_vec();
    let mut k1 = f0;
    let mut k2 = vec![0.0; dim];
    let mut k3 = vec![0.0; dim];
    let mut k4 = vec![0.0; dim];
    let mut k5 = vec![0.0; dim];
    let mut k6 = vec![0.0; dim];
    let mut k7 = vec![0.0; dim];
    let mut ytmp = vec![0.0; dim];
    let mut ynew = vec![0.0; dim];
    let mut steps = 0usize;

    while t < t1 {
        if steps >= opts.max_steps {
            return Err(OdeError::MaxSteps {
                t,
                max: opts.max_steps,
            });
        }
        steps += 1;

        // do not step over the next checkpoint or the end point
        while let Some(&cp) = cps.peek() {
            if cp <= t + 1e-14 * span {
                cps.next();
            } else {
                break;
            }
        }
        let target = cps.peek().copied().unwrap_or(t1).min(t1);
        let mut hs = h.min(h_max);
        let mut landed = false;
        if t + hs >= target - 1e-14 * span {
            hs = target - t;
            landed = true;
        }
        if hs <= span * 1e-15 {
            if landed {
                // degenerate sliver next to a checkpoint; advance exactly
                t = target;
                continue;
            }
            return Err(OdeError::StepUnderflow { t });
        }

        for i in 0..dim {
            ytmp[i] = y[i] + hs * A21 * k1[i];
        }
        rhs(t + hs / 5.0, &ytmp, &mut k2);
        for i in 0..dim {
            ytmp[i] = y[i] + hs * (A31 * k1[i] + A32 * k2[i]);
        }
        rhs(t + 3.0 / 10.0 * hs, &ytmp, &mut k3);
        for i in 0..dim {
            ytmp[i] = y[i] + hs * (A41 * k1[i] + A42 * k2[i] + A43 * k3[i]);
        }
        rhs(t + 4.0 / 5.0 * hs, &ytmp, &mut k4);
        for i in 0..dim {
            ytmp[i] = y[i] + hs * (A51 * k1[i] + A52 * k2[i] + A53 * k3[i] + A54 * k4[i]);
        }
        rhs(t + 8.0 / 9.0 * hs, &ytmp, &mut k5);
        for i in 0..dim {
            ytmp[i] = y[i]
                + hs * (A61 * k1[i] + A62 * k2[i] + A63 * k3[i] + A64 * k4[i] + A65 * k5[i]);
        }
        rhs(t + hs, &ytmp, &mut k6);
        for i in 0..dim {
            ynew[i] = y[i]
                + hs * (B1 * k1[i] + B3 * k3[i] + B4 * k4[i] + B5 * k5[i] + B6 * k6[i]);
        }
        rhs(t + hs, &ynew, &mut k7);

        // weighted RMS error of the embedded difference
        let mut err_sq = 0.0;
        for i in 0..dim {
            let e = hs
                * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i]
                    + E7 * k7[i]);
            let sc = opts.abs_tol + opts.rel_tol * y[i].abs().max(ynew[i].abs());
            err_sq += (e / sc) * (e / sc);
        }
        let err = (err_sq / dim as f64).sqrt();

        if err <= 1.0 {
            t += hs;
            std::mem::swap(&mut y, &mut ynew);
            std::mem::swap(&mut k1, &mut k7); // FSAL
            traj.ts.push(t);
            traj.ys.push(y.clone());
            traj.fs.push(k1.clone());
            let fac = if err == 0.0 {
                5.0
            } else {
                (0.9 * err.powf(-0.2)).clamp(0.2, 5.0)
            };
            h = hs * fac;
        } else {
            let fac = (0.9 * err.powf(-0.2)).clamp(0.2, 1.0);
            h = hs * fac;
            if h < span * 1e-15 {
                return Err(OdeError::StepUnderflow { t });
            }
        }
    }
    Ok(traj)
}

/// Hairer-style starting step estimate.
fn initial_step<F>(rhs: &mut F, t0: f64, y0: &[f64], f0: &[f64], opts: &OdeOptions) -> f64
where
    F: FnMut(f64, &[f64], &mut [f64]),
{
    let dim = y0.len();
    let sc: Vec<f64> = y0
        .iter()
        .map(|&yi| opts.abs_tol + opts.rel_tol * yi.abs())
        .collect();
    let d0 = rms(y0, &sc);
    let d1 = rms(f0, &sc);
    let h0 = if d0 < 1e-5 || d1 < 1e-5 {
        1e-6
    } else {
        0.01 * d0 / d1
    };
    let y1: Vec<f64> = (0..dim).map(|i| y0[i] + h0 * f0[i]).collect();
    let mut f1 = vec![0.0; dim];
    rhs(t0 + h0, &y1, &mut f1);
    let diff: Vec<f64> = (0..dim).map(|i| f1[i] - f0[i]).collect();
    let d2 = rms(&diff, &sc) / h0;
    let h1 = if d1.max(d2) <= 1e-15 {
        (h0 * 1e-3).max(1e-6)
    } else {
        (0.01 / d1.max(d2)).powf(0.2)
    };
    (100.0 * h0).min(h1)
}

fn rms(v: &[f64], sc: &[f64]) -> f64 {
    let s: f64 = v
        .iter()
        .zip(sc)
        .map(|(&x, &s)| (x / s) * (x / s))
        .sum::<f64>()
        / v.len() as f64;
    s.sqrt()
}
