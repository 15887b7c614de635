//! Ground truth and cross-checks.
//!
//! Everything here is independent of the main solver path: analytic facts
//! are closed forms whose defining residuals are checked directly, the
//! reference bisection reruns thresholds at tightened tolerances with three
//! different boundary offsets and refuses to answer unless they agree, and
//! the property suite tests order relations on a seeded random corpus.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::math;
use crate::model::Model;
use crate::poly::Poly;
use crate::profile::{build_profile, ProfileConfig};
use crate::singular_ode::{
    integrate_backward_from_one, integrate_forward_from_zero, r_plus, s_pm, IntegratorOptions,
    Terminal,
};
use crate::thresholds::{beta, beta_hat, critical_speed, ThresholdOptions};
use crate::{Error, Result};

/// One closed-form ground truth about a preset.
#[derive(Debug, Clone)]
pub enum Fact {
    /// z(φ) solving the reduced equation at speed `c` with z(1) = 0,
    /// comparable against a backward shot.
    ExactZ {
        preset: &'static str,
        c: f64,
        z: fn(f64) -> f64,
        citation: &'static str,
    },
    /// A solution of the left-boundary problem only (z(1) ≠ 0): residual
    /// checked, never compared against shots.
    SpuriousZ {
        preset: &'static str,
        c: f64,
        z: fn(f64) -> f64,
        citation: &'static str,
    },
    ExactCStar {
        preset: &'static str,
        value: f64,
        citation: &'static str,
    },
    /// Profile φ(ξ) normalized to φ(0) = 1/2, with the finite reaching time
    /// of 0 when there is one.
    ExactProfile {
        preset: &'static str,
        c: f64,
        phi: fn(f64) -> f64,
        xi0: Option<f64>,
        citation: &'static str,
    },
    /// The slope formula at φ = 1 must refuse: q̇(1) does not exist.
    RefusalAtOne {
        preset: &'static str,
        citation: &'static str,
    },
    /// The slope formula at φ = 0 must refuse: q̇(0) does not exist.
    RefusalAtZero {
        preset: &'static str,
        citation: &'static str,
    },
}

impl Fact {
    pub fn preset(&self) -> &'static str {
        match self {
            Fact::ExactZ { preset, .. }
            | Fact::SpuriousZ { preset, .. }
            | Fact::ExactCStar { preset, .. }
            | Fact::ExactProfile { preset, .. }
            | Fact::RefusalAtOne { preset, .. }
            | Fact::RefusalAtZero { preset, .. } => preset,
        }
    }

    pub fn citation(&self) -> &'static str {
        match self {
            Fact::ExactZ { citation, .. }
            | Fact::SpuriousZ { citation, .. }
            | Fact::ExactCStar { citation, .. }
            | Fact::ExactProfile { citation, .. }
            | Fact::RefusalAtOne { citation, .. }
            | Fact::RefusalAtZero { citation, .. } => citation,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Fact::ExactZ { .. } => "exact_z",
            Fact::SpuriousZ { .. } => "spurious_z",
            Fact::ExactCStar { .. } => "exact_c_star",
            Fact::ExactProfile { .. } => "exact_profile",
            Fact::RefusalAtOne { .. } => "refusal_at_one",
            Fact::RefusalAtZero { .. } => "refusal_at_zero",
        }
    }
}

fn cubic_exact_z(phi: f64) -> f64 {
    phi * phi * (phi - 1.0)
}

fn quartic_spurious_z(phi: f64) -> f64 {
    -phi * phi
}

fn sharp_profile(xi: f64) -> f64 {
    let v = 1.0 - 0.5 * math::exp(xi);
    if v < 0.0 {
        0.0
    } else {
        v
    }
}

fn logistic_profile(xi: f64) -> f64 {
    1.0 / (1.0 + math::exp(xi))
}

/// The registry of closed-form ground truths.
pub fn facts() -> Vec<Fact> {
    alloc::vec![
        Fact::ExactZ {
            preset: "remark_6_2",
            c: 0.0,
            z: cubic_exact_z,
            citation: "z = phi^2(phi-1) solves the reduced equation for q = phi^3(1-phi), h = 3phi(phi-1) at c = 0 with z(0) = z(1) = 0",
        },
        Fact::ExactZ {
            preset: "oscillatory_7_2",
            c: 0.0,
            z: crate::model::osc72_exact_z,
            citation: "z = -(2+sin log(1-phi))(1-phi)phi^2 solves the reduced equation at c = 0; its derivative at 1 does not exist",
        },
        Fact::ExactZ {
            preset: "oscillatory_8_3",
            c: 0.0,
            z: crate::model::osc83_exact_z,
            citation: "z = -(2+sin log phi)(1-phi)^2 phi solves the reduced equation at c = 0; its derivative at 0 does not exist",
        },
        Fact::SpuriousZ {
            preset: "counterexample_6_2b",
            c: 0.0,
            z: quartic_spurious_z,
            citation: "y = -phi^2 also solves the left-boundary problem at c = 0 for q = phi^4(1-phi): the problem with only z(0) = 0 prescribed is not unique",
        },
        Fact::ExactCStar {
            preset: "remark_6_2",
            value: 0.0,
            citation: "the two-point solution exists at c = h(0) = 0, which matches the lower bound, so the threshold speed is 0",
        },
        Fact::ExactCStar {
            preset: "counterexample_6_2b",
            value: 0.0,
            citation: "same threshold mechanism: the lower bound h(0) = 0 is attained",
        },
        Fact::ExactCStar {
            preset: "fisher",
            value: 2.0,
            citation: "for q/phi = 1-phi the lower and upper closed-form bounds both equal 2",
        },
        Fact::ExactProfile {
            preset: "remark_9_3_model1",
            c: 0.0,
            phi: sharp_profile,
            xi0: Some(core::f64::consts::LN_2),
            citation: "with D = phi^2 the wave is phi = 1 - e^xi/2, reaching 0 sharply at xi = ln 2 with slope -1",
        },
        Fact::ExactProfile {
            preset: "remark_9_3_model2",
            c: 0.0,
            phi: logistic_profile,
            xi0: None,
            citation: "with D = phi the same z gives the logistic wave phi = 1/(1+e^xi), classical at both ends",
        },
        Fact::RefusalAtOne {
            preset: "oscillatory_7_2",
            citation: "q oscillates in log(1-phi), so the one-sided derivative of q at 1 does not exist and no slope at 1 can be quoted",
        },
        Fact::RefusalAtZero {
            preset: "oscillatory_8_3",
            citation: "q oscillates in log phi, so the one-sided derivative of q at 0 does not exist and no slope at 0 can be quoted",
        },
    ]
}

/// Outcome of checking one fact against freshly computed artifacts.
#[derive(Debug, Clone)]
pub struct FactReport {
    pub preset: &'static str,
    pub kind: &'static str,
    pub pass: bool,
    pub deviation: f64,
    pub detail: String,
}

/// Residual of a closed-form z in the reduced equation at 1000 interior
/// samples, by central differences. Independent of the solver.
pub fn fact_residual(model: &Model, c: f64, z: fn(f64) -> f64) -> f64 {
    let mut worst = 0.0f64;
    for i in 1..1000 {
        let phi = 0.01 + 0.98 * i as f64 / 1000.0;
        let step = 1e-6;
        let dz = (z(phi + step) - z(phi - step)) / (2.0 * step);
        let res = dz - (model.h(phi) - c - model.q(phi) / z(phi));
        // central differences limit attainable accuracy to ~step^2
        if math::abs(res) > worst {
            worst = math::abs(res);
        }
    }
    worst
}

/// Runs the computation a fact speaks about and compares.
pub fn verify_fact(fact: &Fact, iopts: &IntegratorOptions) -> Result<FactReport> {
    let model = Model::preset(fact.preset())?;
    let (pass, deviation, detail) = match fact {
        Fact::ExactZ { c, z, .. } => {
            // b = 0 launch when the corner tangent exists; otherwise seed
            // the run from the exact solution's own value near 1
            let shot = match integrate_backward_from_one(&model, *c, 0.0, iopts) {
                Ok(s) => s,
                Err(Error::QdotAtOneNonexistent) | Err(Error::ZeroSlopeStart) => {
                    let start = 1.0 - iopts.eps0;
                    crate::singular_ode::integrate_from(
                        &model,
                        *c,
                        start,
                        iopts.eps0,
                        z(start),
                        iopts,
                    )?
                }
                Err(e) => return Err(e),
            };
            let (lo, hi) = shot.trusted_range();
            let a = lo.max(1e-4);
            let b = hi.min(1.0 - 1e-4);
            let mut dev = 0.0f64;
            for i in 0..=2000 {
                let phi = a + (b - a) * i as f64 / 2000.0;
                if let Some(got) = shot.z_at(phi) {
                    dev = dev.max(math::abs(got - z(phi)));
                }
            }
            (dev <= 1e-6, dev, format!("sup|z - exact| on [{a:.0e}, {b}]"))
        }
        Fact::SpuriousZ { c, z, .. } => {
            let dev = fact_residual(&model, *c, *z);
            (dev <= 1e-8, dev, String::from("defining residual"))
        }
        Fact::ExactCStar { value, .. } => {
            let cs = critical_speed(&model, iopts, &ThresholdOptions::default())?;
            let dev = math::abs(cs.c_star - value);
            (dev <= 1e-3, dev, format!("|c* - {value}|"))
        }
        Fact::ExactProfile { c, phi, xi0, .. } => {
            let shot = integrate_backward_from_one(&model, *c, 0.0, iopts)?;
            let prof =
                build_profile(&model, &shot, 0.0, None, None, &ProfileConfig::default())?;
            let top = match prof.xi0.is_finite() {
                true => prof.xi0.min(5.0),
                false => 5.0,
            };
            let mut dev = 0.0f64;
            for i in 0..=500 {
                let xi = -5.0 + (top + 5.0) * i as f64 / 500.0;
                dev = dev.max(math::abs(prof.phi_at(xi) - phi(xi)));
            }
            let xi0_ok = match xi0 {
                Some(v) => prof.xi0.is_finite() && math::abs(prof.xi0 - v) <= 1e-6,
                None => prof.xi0.is_infinite(),
            };
            (dev <= 1e-4 && xi0_ok, dev, format!("sup|phi - exact|, xi0 = {}", prof.xi0))
        }
        Fact::RefusalAtOne { .. } => {
            let refused = matches!(r_plus(&model, 0.0), Err(Error::QdotAtOneNonexistent));
            (refused, 0.0, String::from("slope formula at 1 must refuse"))
        }
        Fact::RefusalAtZero { .. } => {
            let refused = matches!(s_pm(&model, 0.0), Err(Error::QdotAtZeroNonexistent));
            (refused, 0.0, String::from("slope formula at 0 must refuse"))
        }
    };
    Ok(FactReport {
        preset: fact.preset(),
        kind: fact.kind_name(),
        pass,
        deviation,
        detail,
    })
}

/// Quantity a reference run can produce.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RefQuantity {
    CStar,
    Beta { c: f64 },
    BetaHat { c: f64 },
}

/// Tightened re-run of a threshold computation at three boundary offsets;
/// answers only when all three agree to 10× the bisection tolerance.
pub fn reference_bisection(model: &Model, quantity: RefQuantity) -> Result<f64> {
    let topts = ThresholdOptions::default();
    let mut vals = [0.0f64; 3];
    for (i, eps0) in [1e-6, 1e-7, 1e-8].into_iter().enumerate() {
        let iopts = IntegratorOptions {
            rel_tol: 1e-13,
            eps0,
            ..IntegratorOptions::default()
        };
        vals[i] = match quantity {
            RefQuantity::CStar => critical_speed(model, &iopts, &topts)?.c_star,
            RefQuantity::Beta { c } => beta(model, c, &iopts, &topts)?,
            RefQuantity::BetaHat { c } => beta_hat(model, c, &iopts, &topts)?,
        };
    }
    let lo = vals[0].min(vals[1]).min(vals[2]);
    let hi = vals[0].max(vals[1]).max(vals[2]);
    let allowed = match quantity {
        RefQuantity::CStar => 10.0 * topts.c_tol,
        RefQuantity::Beta { c } | RefQuantity::BetaHat { c } => {
            let f1 = model.f(1.0).unwrap_or(0.0);
            10.0 * topts.b_tol_rel * (1.0 + math::abs(f1 - c))
        }
    };
    if hi - lo > allowed {
        return Err(Error::UnstableReference {
            what: match quantity {
                RefQuantity::CStar => "critical speed",
                RefQuantity::Beta { .. } => "beta",
                RefQuantity::BetaHat { .. } => "beta_hat",
            },
            spread: hi - lo,
        });
    }
    Ok(0.5 * (lo + hi))
}

/// Seeded random polynomial corpus. Diffusivity and reaction are degree ≤ 4
/// with the zero pattern q(0) = q(1) = 0 built in; candidates violating the
/// positivity assumption are rejected and resampled.
pub fn corpus(n: usize, seed: u64) -> Vec<Model> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let coef = |rng: &mut ChaCha8Rng| rng.gen_range(-2.0..2.0);
        // D = φ^kd · (quadratic), g = φ^kg · (1−φ) · (quadratic)
        let kd = rng.gen_range(1..=2usize);
        let kg = rng.gen_range(0..=1usize);
        let pd = Poly::new([coef(&mut rng), coef(&mut rng), coef(&mut rng)]);
        let pg = Poly::new([coef(&mut rng), coef(&mut rng), coef(&mut rng)]);
        let mut dpoly = pd;
        for _ in 0..kd {
            dpoly = dpoly.mul(&Poly::new([0.0, 1.0]));
        }
        let mut gpoly = pg.mul(&Poly::new([1.0, -1.0]));
        for _ in 0..kg {
            gpoly = gpoly.mul(&Poly::new([0.0, 1.0]));
        }
        // f with f(0) = 0, degree ≤ 4
        let fpoly = Poly::new([
            0.0,
            coef(&mut rng),
            coef(&mut rng),
            coef(&mut rng),
            coef(&mut rng),
        ]);
        let model = match Model::from_polys(Some(fpoly), dpoly, gpoly) {
            Ok(m) => m,
            Err(_) => continue,
        };
        let rep = model.validate_assumptions();
        if !rep.q.holds() || !rep.d0.holds() {
            continue;
        }
        out.push(model);
    }
    out
}

/// Aggregated result of the order/bound checks over a corpus.
#[derive(Debug, Clone, Default)]
pub struct PropertyReport {
    pub models: usize,
    pub checks: usize,
    pub violations: Vec<String>,
    /// |β − β̂| comparisons performed on members certified for the
    /// equal-thresholds condition.
    pub threshold_agreements: usize,
    pub max_threshold_gap: f64,
}

impl PropertyReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn record(report: &mut PropertyReport, cond: bool, msg: impl FnOnce() -> String) {
    report.checks += 1;
    if !cond {
        report.violations.push(msg());
    }
}

/// Runs the cross-cutting invariants over the given models.
pub fn property_suite(models: &[Model], iopts: &IntegratorOptions) -> PropertyReport {
    let topts = ThresholdOptions::default();
    let mut rep = PropertyReport {
        models: models.len(),
        ..Default::default()
    };
    for (idx, m) in models.iter().enumerate() {
        let tag = |s: &str| format!("model {idx}: {s}");
        let cs = match critical_speed(m, iopts, &topts) {
            Ok(cs) => cs,
            Err(e) => {
                rep.checks += 1;
                rep.violations.push(tag(&format!("critical speed failed: {e}")));
                continue;
            }
        };
        // (a) sandwich
        record(&mut rep, cs.c_star >= cs.bounds.lower - 1e-4, || {
            tag(&format!("c* = {} below lower bound {}", cs.c_star, cs.bounds.lower))
        });
        record(&mut rep, cs.c_star <= cs.bounds.upper() + 1e-4, || {
            tag(&format!("c* = {} above upper bound {}", cs.c_star, cs.bounds.upper()))
        });
        // the reaction-side lower bound in isolation
        if let Some(qd0) = m.qdot_at_zero().value {
            if qd0 > 0.0 {
                let lr = m.h(0.0) + 2.0 * math::sqrt(qd0);
                record(&mut rep, cs.c_star >= lr - 1e-4, || {
                    tag(&format!("c* = {} below reaction bound {lr}", cs.c_star))
                });
            }
        }

        let c = cs.c_star + 1.0;
        // (b) beta floor
        let f1 = m.f(1.0).unwrap_or(0.0);
        match beta(m, c, iopts, &topts) {
            Ok(b) => {
                record(&mut rep, b >= f1 - c - 1e-5, || {
                    tag(&format!("beta = {b} below floor {}", f1 - c))
                });
                // (6.3)-certified members: thresholds agree
                if m.integrable_q_over_phi2() && cs.c_star > m.h(0.0) + 1e-3 {
                    if let Ok(bh) = beta_hat(m, c, iopts, &topts) {
                        let gap = math::abs(b - bh);
                        rep.threshold_agreements += 1;
                        if gap > rep.max_threshold_gap {
                            rep.max_threshold_gap = gap;
                        }
                        let tol = 10.0 * topts.b_tol_rel * (1.0 + math::abs(f1 - c));
                        record(&mut rep, gap <= tol, || {
                            tag(&format!("|beta - beta_hat| = {gap} exceeds {tol}"))
                        });
                    }
                }
            }
            Err(e) => {
                rep.checks += 1;
                rep.violations.push(tag(&format!("beta failed: {e}")));
            }
        }

        // (c) pointwise ordering in b and in c
        let run = |cc: f64, bb: f64| integrate_backward_from_one(m, cc, bb, iopts);
        if let (Ok(z1), Ok(z2)) = (run(c, -0.2), run(c, -0.1)) {
            let mut ordered = true;
            for i in 1..50 {
                let phi = i as f64 / 50.0;
                if let (Some(a), Some(b)) = (z1.z_at(phi), z2.z_at(phi)) {
                    if a > b + 1e-7 {
                        ordered = false;
                    }
                }
            }
            record(&mut rep, ordered, || tag("ordering in b violated"));
        }
        if let (Ok(z1), Ok(z2)) = (run(c, 0.0), run(c + 1.0, 0.0)) {
            let mut ordered = true;
            for i in 1..50 {
                let phi = i as f64 / 50.0;
                if let (Some(a), Some(b)) = (z1.z_at(phi), z2.z_at(phi)) {
                    if a > b + 1e-7 {
                        ordered = false;
                    }
                }
            }
            record(&mut rep, ordered, || tag("ordering in c violated"));
        }

        // (d) lower barrier z ≥ f − cφ − tol along the b = 0 run
        if let Ok(shot) = run(c, 0.0) {
            if shot.terminal == Terminal::ReachedEnd
                || matches!(shot.terminal, Terminal::ZHitZero { .. })
            {
                let mut above = true;
                for i in 1..100 {
                    let phi = i as f64 / 100.0;
                    if let (Some(z), Some(f)) = (shot.z_at(phi), m.f(phi)) {
                        if z < f - c * phi - 1e-6 {
                            above = false;
                        }
                    }
                }
                record(&mut rep, above, || tag("lower barrier f - c*phi violated"));
            }
        }
    }
    rep
}

/// Endpoint-slope consistency data: closed-form prediction next to an
/// estimate fitted from the shot itself away from the seeded start.
#[derive(Debug, Clone, Copy)]
pub struct SlopeCheck {
    pub predicted_at_one: f64,
    pub estimated_at_one: f64,
    pub predicted_at_zero: f64,
    pub estimated_at_zero: f64,
}

impl SlopeCheck {
    /// Relative with an absolute floor: several pinned slopes are exactly 0.
    pub fn agrees(&self, tol: f64) -> bool {
        let close = |a: f64, b: f64| {
            math::abs(a - b) <= tol * math::abs(a).max(math::abs(b)).max(1.0)
        };
        close(self.predicted_at_one, self.estimated_at_one)
            && close(self.predicted_at_zero, self.estimated_at_zero)
    }
}

fn fit_intercept(samples: &[(f64, f64)]) -> f64 {
    let n = samples.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &(x, y) in samples {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    let denom = n * sxx - sx * sx;
    if denom == 0.0 {
        return sy / n;
    }
    let slope = (n * sxy - sx * sy) / denom;
    (sy - slope * sx) / n
}

/// Compares the endpoint-slope formulas against difference-quotient fits of
/// a b = 0 backward shot over [10⁻⁴, 10⁻³] from each corner, extrapolated to
/// the corner; the seeded tangent start sits two decades further in, so the
/// fit reflects the equation, not the seed.
pub fn slope_consistency(model: &Model, c: f64, iopts: &IntegratorOptions) -> Result<SlopeCheck> {
    let shot = integrate_backward_from_one(model, c, 0.0, iopts)?;
    let pred1 = r_plus(model, c)?;
    let (s_minus, s_plus) = s_pm(model, c)?;
    let topts = ThresholdOptions::default();
    let cs = critical_speed(model, iopts, &topts)?;
    // the b = 0 solution leaves 0 with s₋ at the threshold and s₊ above it
    let pred0 = if c <= cs.c_star + 1e-4 { s_minus } else { s_plus };

    // samples below the trust floor are integration noise, not asymptotics:
    // fit each corner over the smallest trusted decade instead of a fixed one
    let (trust_lo, trust_hi) = shot.trusted_range();
    let window_at = |shot: &crate::singular_ode::Shot,
                     lo: f64,
                     map: &dyn Fn(f64) -> (f64, f64)|
     -> Vec<(f64, f64)> {
        let lo = lo.max(1e-9);
        let hi = (10.0 * lo).min(0.05);
        let mut out = Vec::new();
        for i in 0..=40 {
            let t = lo * math::powf(hi / lo, i as f64 / 40.0);
            let (phi, scale) = map(t);
            if let Some(z) = shot.z_at(phi) {
                out.push((t, z / scale));
            }
        }
        out
    };
    let near_one = window_at(&shot, (1.0 - trust_hi).max(1e-4), &|t| (1.0 - t, -t));
    // z carries a terminal offset at the 0-end (the subcritical limit, or
    // residual speed error at a flat threshold); the slope asymptotic only
    // shows where |z| dominates it, so push the window out until it does
    let offset = math::abs(shot.z_first());
    let mut lo0 = trust_lo.max(iopts.eps0);
    while lo0 < 5e-3 {
        match shot.z_at(lo0) {
            Some(z) if math::abs(z) >= 50.0 * offset => break,
            Some(_) => lo0 *= 1.3,
            None => break,
        }
    }
    let near_zero = window_at(&shot, lo0, &|t| (t, t));
    if near_one.len() < 10 || near_zero.len() < 10 {
        return Err(Error::DomainMismatch(String::from(
            "shot does not cover the corner windows for slope fitting",
        )));
    }

    // When s₋ ≈ s₊ the approach of z/φ to the double root is only O(1/ln φ)
    // and no backward-shot window can extrapolate it. The double slope is
    // marginal in the forward direction, so a shot seeded on that tangent
    // keeps z/φ within O(φ) of it, while a wrong slope is repelled along
    // the separated branches: measure residence on a forward shot instead.
    let scale0 = math::abs(s_minus).max(math::abs(s_plus)).max(1.0);
    let double_root = math::abs(s_plus - s_minus) <= 1e-2 * scale0 && s_minus < 0.0;
    let (pred0, estimated_at_zero) = if double_root {
        let seed = 0.5 * (s_minus + s_plus);
        let fwd = integrate_forward_from_zero(model, c, seed, iopts)?;
        let window = window_at(&fwd, fwd.trusted_range().0.max(iopts.eps0), &|t| (t, t));
        if window.len() < 10 {
            return Err(Error::DomainMismatch(String::from(
                "forward shot does not cover the corner window for slope fitting",
            )));
        }
        (seed, fit_intercept(&window))
    } else {
        (pred0, fit_intercept(&near_zero))
    };

    Ok(SlopeCheck {
        predicted_at_one: pred1,
        estimated_at_one: fit_intercept(&near_one),
        predicted_at_zero: pred0,
        estimated_at_zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fact_residual_is_tiny() {
        for fact in facts() {
            let (preset, c, z) = match &fact {
                Fact::ExactZ { preset, c, z, .. } => (*preset, *c, *z),
                Fact::SpuriousZ { preset, c, z, .. } => (*preset, *c, *z),
                _ => continue,
            };
            let m = Model::preset(preset).unwrap();
            let res = fact_residual(&m, c, z);
            // central differences with step 1e-6 cap the check near 1e-9
            assert!(res < 1e-8, "{preset}: residual {res}");
        }
    }

    #[test]
    fn verify_all_facts_with_defaults() {
        let iopts = IntegratorOptions::default();
        for fact in facts() {
            let rep = verify_fact(&fact, &iopts).unwrap();
            assert!(
                rep.pass,
                "{} {} failed: deviation {} ({})",
                rep.preset, rep.kind, rep.deviation, rep.detail
            );
        }
    }

    #[test]
    fn reference_bisection_is_stable_on_fisher() {
        let m = Model::preset("fisher").unwrap();
        let v = reference_bisection(&m, RefQuantity::CStar).unwrap();
        assert!((v - 2.0).abs() < 1e-4, "{v}");
    }

    #[test]
    fn corpus_is_deterministic_and_valid() {
        let a = corpus(8, 20240601);
        let b = corpus(8, 20240601);
        for (x, y) in a.iter().zip(&b) {
            for i in 0..=10 {
                let phi = i as f64 / 10.0;
                assert_eq!(x.q(phi), y.q(phi));
            }
            let rep = x.validate_assumptions();
            assert!(rep.q.holds());
        }
    }

    #[test]
    fn slope_consistency_on_known_speeds() {
        let iopts = IntegratorOptions::default();
        let m = Model::preset("fisher").unwrap();
        let chk = slope_consistency(&m, 3.0, &iopts).unwrap();
        assert!(chk.agrees(1e-4), "{chk:?}");
        let m2 = Model::preset("remark_6_2").unwrap();
        let chk2 = slope_consistency(&m2, 0.0, &iopts).unwrap();
        assert!(chk2.agrees(1e-4), "{chk2:?}");
    }
}
