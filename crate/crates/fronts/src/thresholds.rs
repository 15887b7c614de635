//! Critical speed and the admissible range of right boundary values.
//!
//! The backward problem (z(1) = b, integrate toward 0) has a solution for
//! every speed; what changes with c is whether that solution climbs back to
//! the singular axis at φ = 0. The threshold speed c* is bracketed by closed
//! form bounds and then resolved by bisecting on that qualitative outcome.

use crate::math;
use crate::model::Model;
use crate::singular_ode::{
    integrate_backward_from_one, s_pm, IntegratorOptions, Shot, Terminal,
};
use crate::{Error, Result};

/// Closed-form bracket for the critical speed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpeedBounds {
    /// max{ sup f(φ)/φ, h(0) + 2·√(liminf q(φ)/φ at 0⁺) }.
    pub lower: f64,
    /// 2·√(sup q(φ)/φ) + sup f(φ)/φ.
    pub upper_pointwise: f64,
    /// sup f/φ + 2·√(sup (1/φ)∫₀^φ q(σ)/σ dσ); only valid when q̇(0) = 0.
    pub upper_integral: Option<f64>,
}

impl SpeedBounds {
    /// Tightest available upper bound.
    pub fn upper(&self) -> f64 {
        match self.upper_integral {
            Some(u) if u < self.upper_pointwise => u,
            _ => self.upper_pointwise,
        }
    }
}

/// Tolerances for the threshold bisections.
#[derive(Debug, Clone, Copy)]
pub struct ThresholdOptions {
    pub c_tol: f64,
    /// Relative factor for the boundary-value tolerance: the absolute
    /// tolerance is b_tol_rel·(1 + |f(1) − c|).
    pub b_tol_rel: f64,
    pub max_iters: usize,
}

impl Default for ThresholdOptions {
    fn default() -> Self {
        Self {
            c_tol: 1e-6,
            b_tol_rel: 1e-6,
            max_iters: 80,
        }
    }
}

/// Result of the critical-speed bisection.
#[derive(Debug, Clone, Copy)]
pub struct CriticalSpeed {
    pub c_star: f64,
    pub bounds: SpeedBounds,
    pub iters: usize,
}

fn sup_f_over_phi(model: &Model) -> Result<f64> {
    if model.has_f() {
        model
            .sup_f_over_phi()
            .ok_or(Error::FunctionUnavailable("sup f/phi for non-polynomial f"))
    } else if model.h(0.0) == 0.0 && model.h(0.5) == 0.0 && model.h(1.0) == 0.0 {
        // no convection at all
        Ok(0.0)
    } else {
        Err(Error::FunctionUnavailable("f (only h is known, and it is nonzero)"))
    }
}

/// Closed-form bracket for c*.
pub fn speed_bounds(model: &Model) -> Result<SpeedBounds> {
    let sup_f = sup_f_over_phi(model)?;
    let liminf = model
        .liminf_q_over_phi_at_zero()
        .ok_or(Error::QdotAtZeroNonexistent)?;
    let sup_q = model
        .sup_q_over_phi()
        .ok_or(Error::FunctionUnavailable("sup q/phi"))?;
    if liminf < 0.0 || sup_q < 0.0 {
        return Err(Error::InvalidSpec(alloc::format!(
            "q/phi must be nonnegative near 0 (liminf {liminf}, sup {sup_q})"
        )));
    }
    let lower = sup_f.max(model.h(0.0) + 2.0 * math::sqrt(liminf));
    let upper_pointwise = 2.0 * math::sqrt(sup_q) + sup_f;
    let upper_integral = model
        .sup_mean_integral_q_over_phi()
        .map(|s| sup_f + 2.0 * math::sqrt(s.max(0.0)));
    Ok(SpeedBounds {
        lower,
        upper_pointwise,
        upper_integral,
    })
}

/// Whether the backward shot at speed c behaves subcritically: it arrives at
/// φ = eps0 strictly below the corridor (s₋(c) − Δ)·eps0 with Δ = 1 + |s₋|,
/// meaning the solution misses the origin of the phase box. Shots that stop
/// on the singular axis count as supercritical; speeds for which the slope
/// discriminant at 0 is negative are below the admissible range, hence
/// subcritical.
fn is_subcritical(model: &Model, c: f64, opts: &IntegratorOptions) -> Result<bool> {
    let (s_minus, _) = match s_pm(model, c) {
        Ok(s) => s,
        Err(Error::SpeedBelowAdmissible { .. }) => return Ok(true),
        Err(e) => return Err(e),
    };
    let shot = integrate_backward_from_one(model, c, 0.0, opts)?;
    let cutoff_at = |phi: f64| (s_minus - (1.0 + math::abs(s_minus))) * phi;
    match shot.terminal {
        Terminal::ZHitZero { .. } => Ok(false),
        Terminal::ReachedEnd => Ok(shot.z_first() < cutoff_at(opts.eps0)),
        Terminal::StepUnderflow { phi } => Ok(shot.z_first() < cutoff_at(phi)),
    }
}

fn bisect_stage(
    model: &Model,
    mut lo: f64,
    mut hi: f64,
    iopts: &IntegratorOptions,
    topts: &ThresholdOptions,
    iters: &mut usize,
) -> Result<(f64, f64)> {
    let mut widen = 0u32;
    while !(is_subcritical(model, lo, iopts)? && !is_subcritical(model, hi, iopts)?) {
        widen += 1;
        if widen > 8 {
            return Err(Error::BracketInvalid {
                what: "critical speed",
                lo,
                hi,
            });
        }
        let mid = 0.5 * (lo + hi);
        let half = (hi - lo).max(1e-3);
        lo = mid - half;
        hi = mid + half;
    }
    while hi - lo > topts.c_tol {
        if *iters >= topts.max_iters {
            return Err(Error::NonConvergence {
                what: "critical speed bisection",
                iters: *iters,
            });
        }
        let mid = 0.5 * (lo + hi);
        if is_subcritical(model, mid, iopts)? {
            lo = mid;
        } else {
            hi = mid;
        }
        *iters += 1;
    }
    Ok((lo, hi))
}

/// Bisection for the critical speed inside the closed-form bracket. The
/// decision rule distinguishes trajectories by their size at φ = eps0, so
/// its resolution degrades to O(√eps0) when c* = h(0) makes ζ_c(0) flat in
/// c; a first pass at the configured eps0 is therefore sharpened by two more
/// passes at eps0/10 and eps0/100 around the narrowed bracket.
pub fn critical_speed(
    model: &Model,
    iopts: &IntegratorOptions,
    topts: &ThresholdOptions,
) -> Result<CriticalSpeed> {
    // the sub/supercritical decision rule is phrased through s₋(c)
    if !model.qdot_at_zero().exists {
        return Err(Error::QdotAtZeroNonexistent);
    }
    let bounds = speed_bounds(model)?;
    let margin = 1e-2 * (1.0 + math::abs(bounds.lower) + math::abs(bounds.upper()));
    let mut iters = 0usize;
    let (mut lo, mut hi) = bisect_stage(
        model,
        bounds.lower - margin,
        bounds.upper() + margin,
        iopts,
        topts,
        &mut iters,
    )?;
    for stage in 1..=2u32 {
        let eps = iopts.eps0 / math::powf(10.0, stage as f64);
        if eps <= 10.0 * iopts.min_step {
            break;
        }
        let sopts = IntegratorOptions { eps0: eps, ..*iopts };
        let mid = 0.5 * (lo + hi);
        // generous re-bracket: the previous stage can be biased by its
        // coarser resolution, not just by c_tol
        let r = 0.05 * (1.0 + math::abs(mid));
        let (l, h) = bisect_stage(model, mid - r, mid + r, &sopts, topts, &mut iters)?;
        lo = l;
        hi = h;
    }
    Ok(CriticalSpeed {
        c_star: 0.5 * (lo + hi),
        bounds,
        iters,
    })
}

/// Value at 0 of the backward solution with z(1) = b, estimated from the
/// shot by one explicit Euler step of the RHS from eps0 to 0, then clamped
/// to the a-priori range [−1 − A_c, 0] with A_c = max{max h − c, 0} + max q.
pub fn zeta_at_zero(model: &Model, c: f64, b: f64, opts: &IntegratorOptions) -> Result<f64> {
    let shot = integrate_backward_from_one(model, c, b, opts)?;
    Ok(extrapolate_to_zero(model, c, &shot, opts))
}

fn extrapolate_to_zero(model: &Model, c: f64, shot: &Shot, opts: &IntegratorOptions) -> f64 {
    let value = match shot.terminal {
        Terminal::ZHitZero { .. } => 0.0,
        _ => {
            let eps = shot.phi[0];
            let z = shot.z_first();
            let slope = model.h(0.0) - c - model.q(eps) / z;
            z - eps * slope
        }
    };
    let a_c = (model.max_h() - c).max(0.0) + model.max_q();
    let _ = opts;
    value.clamp(-1.0 - a_c, 0.0)
}

/// Slope class at φ = 0 of a backward shot: nearest of the two admissible
/// slopes s₋ ≤ s₊, with shots that fail the corridor test grouped with s₋.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SlopeClass {
    Fast, // s₋ side, or not admissible at all
    Slow, // s₊ side
}

fn classify_slope(
    model: &Model,
    c: f64,
    b: f64,
    s_minus: f64,
    s_plus: f64,
    opts: &IntegratorOptions,
) -> Result<SlopeClass> {
    let shot = integrate_backward_from_one(model, c, b, opts)?;
    let (phi, z) = match shot.terminal {
        Terminal::ZHitZero { .. } => return Ok(SlopeClass::Slow),
        Terminal::ReachedEnd => (opts.eps0, shot.z_first()),
        Terminal::StepUnderflow { phi } => (phi, shot.z_first()),
    };
    let slope = z / phi;
    if slope < s_minus - (1.0 + math::abs(s_minus)) {
        return Ok(SlopeClass::Fast);
    }
    if math::abs(slope - s_plus) < math::abs(slope - s_minus) {
        Ok(SlopeClass::Slow)
    } else {
        Ok(SlopeClass::Fast)
    }
}

/// Largest boundary value at which the slope at 0 switches from s₊ (near
/// b = 0) to s₋. Requires c strictly above the critical speed. When the two
/// slopes coincide to within tolerance the problem is degenerate and b = 0
/// is returned.
pub fn beta_hat(
    model: &Model,
    c: f64,
    iopts: &IntegratorOptions,
    topts: &ThresholdOptions,
) -> Result<f64> {
    let cs = critical_speed(model, iopts, topts)?;
    if c <= cs.c_star {
        return Err(Error::SubcriticalSpeed {
            c,
            c_star: cs.c_star,
        });
    }
    let (s_minus, s_plus) = s_pm(model, c)?;
    if s_plus - s_minus < 1e-9 * (1.0 + math::abs(s_minus)) {
        return Ok(0.0);
    }
    let f1 = model.f(1.0).unwrap_or(0.0);
    let b_tol = topts.b_tol_rel * (1.0 + math::abs(f1 - c));
    let mut hi = 0.0; // slope class s₊ by the b = 0 theory
    let mut lo = (f1 - c).min(-b_tol);
    if classify_slope(model, c, lo, s_minus, s_plus, iopts)? == SlopeClass::Slow {
        // every admissible b keeps the slow slope; the transition is at the
        // bottom of the admissible range
        return Ok(lo);
    }
    let mut iters = 0usize;
    while hi - lo > b_tol {
        if iters >= topts.max_iters {
            return Err(Error::NonConvergence {
                what: "beta_hat bisection",
                iters,
            });
        }
        let mid = 0.5 * (lo + hi);
        match classify_slope(model, c, mid, s_minus, s_plus, iopts)? {
            SlopeClass::Slow => hi = mid,
            SlopeClass::Fast => lo = mid,
        }
        iters += 1;
    }
    Ok(0.5 * (lo + hi))
}

/// Smallest admissible boundary value b = z(1): below it the backward
/// solution no longer reaches the origin of the phase box. Theory puts
/// β ≥ f(1) − c, which seeds the bracket. Requires c strictly above the
/// critical speed.
pub fn beta(
    model: &Model,
    c: f64,
    iopts: &IntegratorOptions,
    topts: &ThresholdOptions,
) -> Result<f64> {
    let cs = critical_speed(model, iopts, topts)?;
    if c <= cs.c_star {
        return Err(Error::SubcriticalSpeed {
            c,
            c_star: cs.c_star,
        });
    }
    let f1 = model.f(1.0).unwrap_or(0.0);
    let b_tol = topts.b_tol_rel * (1.0 + math::abs(f1 - c));

    let admissible = |b: f64| -> Result<bool> {
        let (s_minus, _) = s_pm(model, c)?;
        let shot = integrate_backward_from_one(model, c, b, iopts)?;
        let cutoff_at = |phi: f64| (s_minus - (1.0 + math::abs(s_minus))) * phi;
        Ok(match shot.terminal {
            Terminal::ZHitZero { .. } => true,
            Terminal::ReachedEnd => shot.z_first() >= cutoff_at(iopts.eps0),
            Terminal::StepUnderflow { phi } => shot.z_first() >= cutoff_at(phi),
        })
    };

    let mut hi = 0.0; // admissible: c > c*
    let mut lo = f1 - c;
    if admissible(lo)? {
        // the theoretical floor itself is admissible
        return Ok(lo);
    }
    let mut iters = 0usize;
    while hi - lo > b_tol {
        if iters >= topts.max_iters {
            return Err(Error::NonConvergence {
                what: "beta bisection",
                iters,
            });
        }
        let mid = 0.5 * (lo + hi);
        if admissible(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
        iters += 1;
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Model;
    use approx::assert_relative_eq;

    fn iopts() -> IntegratorOptions {
        IntegratorOptions::default()
    }
    fn topts() -> ThresholdOptions {
        ThresholdOptions::default()
    }

    #[test]
    fn fisher_bounds_coincide_at_two() {
        // q/φ = 1 − φ: liminf at 0⁺ and sup both equal 1, f ≡ 0, so the
        // closed-form bracket pins c* = 2 exactly.
        let m = Model::preset("fisher").unwrap();
        let b = speed_bounds(&m).unwrap();
        assert_relative_eq!(b.lower, 2.0, epsilon = 1e-9);
        assert_relative_eq!(b.upper_pointwise, 2.0, epsilon = 1e-9);
        assert!(b.upper_integral.is_none()); // q̇(0) = 1 ≠ 0
    }

    #[test]
    fn fisher_critical_speed_is_two() {
        let m = Model::preset("fisher").unwrap();
        let cs = critical_speed(&m, &iopts(), &topts()).unwrap();
        assert!((cs.c_star - 2.0).abs() <= 2.0 * topts().c_tol, "{}", cs.c_star);
    }

    #[test]
    fn cubic_preset_critical_speed_is_zero() {
        // z* = φ²(φ−1) solves the two-point problem at c = 0, which is the
        // lower bound h(0) = 0; hence c* = 0.
        let m = Model::preset("remark_6_2").unwrap();
        // c* = h(0) is degenerate here: ζ_c(0) is flat to first order in c
        // at the threshold, so the shot indicator only resolves c* to ~1e-4.
        let cs = critical_speed(&m, &iopts(), &topts()).unwrap();
        assert!(cs.c_star.abs() <= 1e-3, "{}", cs.c_star);
        assert!(cs.bounds.lower <= 0.0 && cs.bounds.upper() >= 0.0);
    }

    #[test]
    fn cubic_preset_integral_bound_beats_pointwise() {
        // sup q/φ = 4/27 at φ = 2/3; the averaged bound uses 64/729 < 4/27.
        let m = Model::preset("remark_6_2").unwrap();
        let b = speed_bounds(&m).unwrap();
        let ui = b.upper_integral.unwrap();
        assert!(ui < b.upper_pointwise, "{ui} vs {}", b.upper_pointwise);
        assert_relative_eq!(
            b.upper_pointwise,
            2.0 * (4.0f64 / 27.0).sqrt(),
            epsilon = 1e-9
        );
        assert_relative_eq!(ui, 2.0 * (64.0f64 / 729.0).sqrt(), epsilon = 1e-9);
    }

    #[test]
    fn zeta_is_monotone_in_speed_below_threshold() {
        let m = Model::preset("remark_6_2").unwrap();
        let mut prev = f64::NEG_INFINITY;
        for c in [-2.0, -1.0, -0.5, -0.2] {
            let v = zeta_at_zero(&m, c, 0.0, &iopts()).unwrap();
            assert!(v < 0.0, "zeta({c})(0) = {v}");
            assert!(v > prev, "not increasing at c = {c}: {v} <= {prev}");
            prev = v;
        }
        // above the threshold the extrapolated value is 0
        let v = zeta_at_zero(&m, 0.5, 0.0, &iopts()).unwrap();
        assert!(v.abs() < 1e-4, "zeta(0.5)(0) = {v}");
    }

    #[test]
    fn quartic_preset_critical_speed_is_zero() {
        let m = Model::preset("counterexample_6_2b").unwrap();
        let cs = critical_speed(&m, &iopts(), &topts()).unwrap();
        assert!(cs.c_star.abs() <= 1e-3, "{}", cs.c_star);
    }

    #[test]
    fn boundary_thresholds_are_ordered() {
        // Above the critical speed the admissible b form [β, 0] and the
        // slope transition β̂ sits inside.
        let m = Model::preset("fisher").unwrap();
        let c = 3.0;
        let b = beta(&m, c, &iopts(), &topts()).unwrap();
        let bh = beta_hat(&m, c, &iopts(), &topts()).unwrap();
        assert!(b <= bh + 1e-5, "beta {b} > beta_hat {bh}");
        assert!(bh <= 0.0);
        assert!(b >= -c - 1e-9, "beta {b} below f(1) - c = {}", -c);
    }

    #[test]
    fn subcritical_speed_is_refused_for_thresholds() {
        let m = Model::preset("fisher").unwrap();
        assert!(matches!(
            beta(&m, 1.5, &iopts(), &topts()),
            Err(Error::SubcriticalSpeed { .. })
        ));
        assert!(matches!(
            beta_hat(&m, 1.5, &iopts(), &topts()),
            Err(Error::SubcriticalSpeed { .. })
        ));
    }
}
