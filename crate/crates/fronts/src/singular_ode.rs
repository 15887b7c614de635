//! Shooting for the reduced first-order problem.
//!
//! With z(φ) = D(φ)φ′ the profile equation collapses to
//!
//! ```text
//!   ż = h(φ) − c − q(φ)/z,   z < 0 on (0,1),
//! ```
//!
//! which is singular wherever z → 0, in particular at both corners of the
//! phase box. Shots therefore start a distance `eps0` inside the box on the
//! tangent line z ≈ s·(φ − corner) given by the exact endpoint slope, and an
//! event terminates integration when z returns to 0 in the interior.

use alloc::vec;
use alloc::vec::Vec;

use crate::math;
use crate::model::Model;
use crate::{Error, Result};

/// Integrator configuration. Defaults favor accuracy over speed: the critical
/// speed is later resolved by bisecting on qualitative outcomes of these runs.
#[derive(Debug, Clone, Copy)]
pub struct IntegratorOptions {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub min_step: f64,
    pub max_step: f64,
    /// Offset of the desingularized start from the corner.
    pub eps0: f64,
}

impl Default for IntegratorOptions {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-12,
            min_step: 1e-13,
            max_step: 1e-2,
            eps0: 1e-6,
        }
    }
}

impl IntegratorOptions {
    /// Threshold below which |z| counts as having reached the singular axis.
    pub fn event_tol(&self) -> f64 {
        10.0 * self.abs_tol
    }
}

/// How a shot ended.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Terminal {
    /// Integrated all the way to the requested end of the φ range.
    ReachedEnd,
    /// z reached 0 in the interior at the recorded φ.
    ZHitZero { phi: f64 },
    /// Step size collapsed below `min_step` at the recorded φ.
    StepUnderflow { phi: f64 },
}

/// One completed shot: accepted nodes in ascending φ together with the RHS
/// values there, so evaluation between nodes is cubic Hermite.
#[derive(Debug, Clone)]
pub struct Shot {
    pub phi: Vec<f64>,
    pub z: Vec<f64>,
    pub dz: Vec<f64>,
    pub terminal: Terminal,
    pub c: f64,
    /// |z| below this is indistinguishable from integration noise (a
    /// multiple of abs_tol); consumers should not trust smaller samples.
    pub z_trust_floor: f64,
}

impl Shot {
    /// Covered φ range.
    pub fn coverage(&self) -> (f64, f64) {
        (self.phi[0], self.phi[self.phi.len() - 1])
    }

    /// Sub-range of the coverage on which |z| clears the trust floor,
    /// trimmed from both ends.
    pub fn trusted_range(&self) -> (f64, f64) {
        let ok = |i: usize| -self.z[i] >= self.z_trust_floor;
        let n = self.phi.len();
        let mut lo = 0usize;
        while lo + 1 < n && !ok(lo) {
            lo += 1;
        }
        let mut hi = n - 1;
        while hi > lo && !ok(hi) {
            hi -= 1;
        }
        (self.phi[lo], self.phi[hi])
    }

    /// Value at the last accepted node in the direction of integration: for a
    /// backward shot this is the node with smallest φ.
    pub fn z_first(&self) -> f64 {
        self.z[0]
    }

    pub fn z_last(&self) -> f64 {
        self.z[self.z.len() - 1]
    }

    /// Cubic Hermite evaluation inside the covered range.
    pub fn z_at(&self, phi: f64) -> Option<f64> {
        let (lo, hi) = self.coverage();
        if phi < lo || phi > hi {
            return None;
        }
        let mut a = 0usize;
        let mut b = self.phi.len() - 1;
        while b - a > 1 {
            let m = (a + b) / 2;
            if self.phi[m] <= phi {
                a = m;
            } else {
                b = m;
            }
        }
        let h = self.phi[b] - self.phi[a];
        if h == 0.0 {
            return Some(self.z[a]);
        }
        let t = (phi - self.phi[a]) / h;
        let (z0, z1) = (self.z[a], self.z[b]);
        let (m0, m1) = (self.dz[a] * h, self.dz[b] * h);
        let t2 = t * t;
        let t3 = t2 * t;
        Some(
            (2.0 * t3 - 3.0 * t2 + 1.0) * z0
                + (t3 - 2.0 * t2 + t) * m0
                + (-2.0 * t3 + 3.0 * t2) * z1
                + (t3 - t2) * m1,
        )
    }
}

/// Slope of the unique admissible solution leaving z(1) = 0, from the
/// quadratic indicial equation at φ = 1. Refuses when q̇(1) does not exist.
pub fn r_plus(model: &Model, c: f64) -> Result<f64> {
    let qd1 = match model.qdot_at_one() {
        d if d.exists => d.value.unwrap_or(0.0),
        _ => return Err(Error::QdotAtOneNonexistent),
    };
    let a = model.h(1.0) - c;
    if qd1 < 0.0 {
        Ok(0.5 * (a + math::sqrt(a * a - 4.0 * qd1)))
    } else if qd1 == 0.0 {
        Ok(if a > 0.0 { a } else { 0.0 })
    } else {
        Err(Error::InvalidSpec(alloc::format!(
            "qdot(1) = {qd1} > 0 contradicts q > 0 with q(1) = 0"
        )))
    }
}

/// Roots s₋(c) ≤ s₊(c) of the indicial equation s² − (h(0) − c)s + q̇(0) = 0
/// at φ = 0. Refuses when q̇(0) does not exist; a negative discriminant means
/// c lies strictly below the admissible range.
pub fn s_pm(model: &Model, c: f64) -> Result<(f64, f64)> {
    let qd0 = match model.qdot_at_zero() {
        d if d.exists => d.value.unwrap_or(0.0),
        _ => return Err(Error::QdotAtZeroNonexistent),
    };
    let a = model.h(0.0) - c;
    let disc = a * a - 4.0 * qd0;
    if disc < 0.0 {
        return Err(Error::SpeedBelowAdmissible { c });
    }
    let root = math::sqrt(disc);
    Ok((0.5 * (a - root), 0.5 * (a + root)))
}

/// Shot from φ = 1 down toward φ = eps0 with z(1) = b ≤ 0. For b = 0 the
/// start is desingularized to (1 − eps0, −r₊·eps0) and r₊ = 0 is refused:
/// the tangent line would lie on the singular axis.
pub fn integrate_backward_from_one(
    model: &Model,
    c: f64,
    b: f64,
    opts: &IntegratorOptions,
) -> Result<Shot> {
    let (x0, z0) = if b == 0.0 {
        let r = r_plus(model, c)?;
        if r == 0.0 {
            return Err(Error::ZeroSlopeStart);
        }
        (1.0 - opts.eps0, -r * opts.eps0)
    } else if b < 0.0 {
        // q(1) = 0, so the RHS is regular at (1, b)
        (1.0, b)
    } else {
        return Err(Error::InvalidSpec(alloc::format!(
            "z(1) = {b} must be nonpositive"
        )));
    };
    integrate(model, c, x0, opts.eps0, z0, opts)
}

/// Shot from φ = eps0 up toward 1 − eps0 on the tangent line z = s·φ with
/// s < 0 required.
pub fn integrate_forward_from_zero(
    model: &Model,
    c: f64,
    s: f64,
    opts: &IntegratorOptions,
) -> Result<Shot> {
    if s == 0.0 {
        return Err(Error::ZeroSlopeStart);
    }
    if s > 0.0 {
        return Err(Error::InvalidSpec(alloc::format!(
            "start slope {s} must be negative"
        )));
    }
    integrate(model, c, opts.eps0, 1.0 - opts.eps0, s * opts.eps0, opts)
}

/// Shot between two interior abscissae from an explicit start value; used
/// when neither corner admits a closed-form tangent (the oracle seeds these
/// from an exact solution).
pub fn integrate_from(
    model: &Model,
    c: f64,
    phi_start: f64,
    phi_end: f64,
    z_start: f64,
    opts: &IntegratorOptions,
) -> Result<Shot> {
    if z_start >= 0.0 {
        return Err(Error::InvalidSpec(alloc::format!(
            "start value {z_start} must be negative"
        )));
    }
    integrate(model, c, phi_start, phi_end, z_start, opts)
}

/// Largest and smallest ODE residual of a candidate z over midpoints of a
/// uniform grid on [lo, hi], computed by central difference quotients. A
/// nonnegative minimum certifies an upper solution, a nonpositive maximum a
/// lower solution (for the backward problem the inequalities transfer to
/// comparison with shots).
pub fn residual_range(
    z: impl Fn(f64) -> f64,
    model: &Model,
    c: f64,
    lo: f64,
    hi: f64,
    n: usize,
) -> (f64, f64) {
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    let dx = (hi - lo) / n as f64;
    for i in 0..n {
        let mid = lo + (i as f64 + 0.5) * dx;
        let step = dx * 1e-3;
        let dzdx = (z(mid + step) - z(mid - step)) / (2.0 * step);
        let zv = z(mid);
        if zv == 0.0 {
            continue;
        }
        let res = dzdx - (model.h(mid) - c - model.q(mid) / zv);
        if res < min {
            min = res;
        }
        if res > max {
            max = res;
        }
    }
    (min, max)
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
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;
const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;

/// Implicit trapezoid step for ż = h̃(φ) − c − q(φ)/z: the update is the
/// negative root of a quadratic in z, so no Newton iteration is needed.
/// Returns None when the quadratic has no negative root for this step.
fn trapezoid_step(model: &Model, c: f64, x: f64, z: f64, k: f64, h: f64) -> Option<f64> {
    let xn = x + h;
    let b = z + 0.5 * h * (k + model.h(xn) - c);
    let disc = b * b - 2.0 * h * model.q(xn);
    if disc < 0.0 {
        return None;
    }
    let root = 0.5 * (b - math::sqrt(disc));
    if root < 0.0 {
        Some(root)
    } else {
        None
    }
}

/// Backward Euler step, same closed form; used only as the error reference
/// for the trapezoid step.
fn euler_step(model: &Model, c: f64, x: f64, z: f64, h: f64) -> Option<f64> {
    let xn = x + h;
    let b = z + h * (model.h(xn) - c);
    let disc = b * b - 4.0 * h * model.q(xn);
    if disc < 0.0 {
        return None;
    }
    let root = 0.5 * (b - math::sqrt(disc));
    if root < 0.0 {
        Some(root)
    } else {
        None
    }
}

fn integrate(
    model: &Model,
    c: f64,
    x0: f64,
    x1: f64,
    z0: f64,
    opts: &IntegratorOptions,
) -> Result<Shot> {
    let rhs = |x: f64, z: f64| model.h(x) - c - model.q(x) / z;
    let dir = if x1 > x0 { 1.0 } else { -1.0 };
    let span = math::abs(x1 - x0);
    let event = opts.event_tol();

    let mut x = x0;
    let mut z = z0;
    let mut k1 = rhs(x, z);
    let mut xs = vec![x];
    let mut zs = vec![z];
    let mut ds = vec![k1];
    let mut h = dir * (span * 1e-3).min(opts.max_step).max(opts.min_step);
    let mut err_prev = 1.0_f64;
    let terminal;
    // Trajectories hugging the singular axis make the RHS stiff: the
    // one-sided Lipschitz rate is q/z². The explicit pair is used while
    // λ·|h| stays moderate; sustained stiffness switches to the implicit
    // trapezoid stepper, which is exact to solve here (scalar quadratic).
    let mut stiff_streak = 0u32;
    let mut implicit = false;
    let max_nodes = 2_000_000usize;

    loop {
        // Within one minimal step of the target counts as arrival.
        if dir * (x1 - x) <= opts.min_step {
            terminal = Terminal::ReachedEnd;
            break;
        }
        if math::abs(h) > dir * (x1 - x) {
            h = x1 - x;
        }
        if math::abs(h) < opts.min_step {
            terminal = Terminal::StepUnderflow { phi: x };
            break;
        }

        let (z_new, err, order_exp) = if implicit {
            match (
                trapezoid_step(model, c, x, z, k1, h),
                euler_step(model, c, x, z, h),
            ) {
                (Some(zt), Some(ze)) => {
                    let scale =
                        opts.abs_tol + opts.rel_tol * math::abs(z).max(math::abs(zt));
                    (zt, math::abs(zt - ze) / scale, 0.5)
                }
                _ => (f64::NAN, f64::NAN, 0.5),
            }
        } else {
            let k2 = rhs(x + C2 * h, z + h * A21 * k1);
            let k3 = rhs(x + C3 * h, z + h * (A31 * k1 + A32 * k2));
            let k4 = rhs(x + C4 * h, z + h * (A41 * k1 + A42 * k2 + A43 * k3));
            let k5 = rhs(
                x + C5 * h,
                z + h * (A51 * k1 + A52 * k2 + A53 * k3 + A54 * k4),
            );
            let k6 = rhs(
                x + h,
                z + h * (A61 * k1 + A62 * k2 + A63 * k3 + A64 * k4 + A65 * k5),
            );
            let z5 = z + h * (B1 * k1 + B3 * k3 + B4 * k4 + B5 * k5 + B6 * k6);
            let k7 = rhs(x + h, z5);
            let err_raw =
                h * (E1 * k1 + E3 * k3 + E4 * k4 + E5 * k5 + E6 * k6 + E7 * k7);
            let scale = opts.abs_tol + opts.rel_tol * math::abs(z).max(math::abs(z5));
            (z5, math::abs(err_raw) / scale, 0.2)
        };

        let bad = !z_new.is_finite() || !err.is_finite();
        if bad || err > 1.0 {
            let fac = if bad {
                0.1
            } else {
                (0.9 * math::powf(err, -order_exp)).max(0.1)
            };
            h *= fac;
            if math::abs(h) < opts.min_step {
                terminal = Terminal::StepUnderflow { phi: x };
                break;
            }
            continue;
        }

        if z_new >= 0.0 {
            // Overshot the singular axis: shrink toward the crossing instead
            // of accepting a sign change.
            h *= 0.5;
            if math::abs(h) < opts.min_step {
                terminal = Terminal::ZHitZero { phi: x };
                break;
            }
            continue;
        }

        x += h;
        z = z_new;
        k1 = rhs(x, z);
        xs.push(x);
        zs.push(z);
        ds.push(k1);
        if xs.len() > max_nodes {
            return Err(Error::NonConvergence {
                what: "shot node budget exhausted",
                iters: max_nodes,
            });
        }

        if -z < event {
            terminal = Terminal::ZHitZero { phi: x };
            break;
        }

        let lambda_h = model.q(x) / (z * z) * math::abs(h);
        if implicit {
            if lambda_h < 1.0 {
                implicit = false;
                stiff_streak = 0;
            }
        } else if lambda_h > 2.5 {
            stiff_streak += 1;
            if stiff_streak >= 25 {
                implicit = true;
            }
        } else {
            stiff_streak = 0;
        }

        // PI controller
        let e = err.max(1e-10);
        let fac = if implicit {
            0.9 * math::powf(e, -0.5)
        } else {
            0.9 * math::powf(e, -0.7 / 5.0) * math::powf(err_prev, 0.4 / 5.0)
        };
        err_prev = e;
        h *= fac.clamp(0.2, 5.0);
        if math::abs(h) > opts.max_step {
            h = dir * opts.max_step;
        }
    }

    if dir < 0.0 {
        xs.reverse();
        zs.reverse();
        ds.reverse();
    }
    Ok(Shot {
        phi: xs,
        z: zs,
        dz: ds,
        terminal,
        c,
        z_trust_floor: 1e3 * opts.abs_tol,
    })
}
