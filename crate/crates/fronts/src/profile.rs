//! Profile reconstruction in the traveling coordinate.
//!
//! A z-solution determines the wave profile through φ′ = z(φ)/D(φ), or
//! equivalently the quadrature ξ(φ) = ∫_φ^{φ₀} D(σ)/(−z(σ)) dσ with the
//! normalization φ(0) = φ₀. Whether the wave reaches the equilibria 0 and 1
//! at finite ξ is exactly the convergence of the improper endpoint integrals,
//! decided here by a power-law fit of the integrand on the last resolved
//! decade.

use alloc::vec::Vec;

use crate::math;
use crate::model::Model;
use crate::singular_ode::Shot;
use crate::{Error, Result};

/// Profile behavior at an equilibrium.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Classical,
    Sharp,
    Indeterminate,
}

/// Reconstructed front. Infinite endpoints and slopes use IEEE infinities.
#[derive(Debug, Clone)]
pub struct FrontProfile {
    /// Ascending ξ samples.
    pub xi_grid: Vec<f64>,
    /// Profile values, strictly decreasing on the open range.
    pub phi_vals: Vec<f64>,
    /// φ′·D(φ) = z at samples; reported as dφ/dξ.
    pub dphi_vals: Vec<f64>,
    /// Left endpoint where φ → 1 (−∞ when never reached).
    pub a: f64,
    /// Right endpoint where φ → 0 (+∞ when never reached).
    pub xi0: f64,
    pub slope_at_a: f64,
    pub slope_at_xi0: f64,
    pub kind_at_zero: Kind,
    pub kind_at_one: Kind,
    /// φ(0), the chosen anchor value.
    pub normalization: f64,
    /// True when the 0-endpoint verdict came from the numeric tail test
    /// rather than the classification tree.
    pub resolved_numerically: bool,
    pub c: f64,
}

impl FrontProfile {
    /// Piecewise-linear evaluation with constant extension past finite
    /// endpoints: 1 left of a, 0 right of ξ₀.
    pub fn phi_at(&self, xi: f64) -> f64 {
        if xi <= self.a {
            return 1.0;
        }
        if xi >= self.xi0 {
            return 0.0;
        }
        let n = self.xi_grid.len();
        if xi <= self.xi_grid[0] {
            return self.phi_vals[0];
        }
        if xi >= self.xi_grid[n - 1] {
            return self.phi_vals[n - 1];
        }
        let mut a = 0usize;
        let mut b = n - 1;
        while b - a > 1 {
            let m = (a + b) / 2;
            if self.xi_grid[m] <= xi {
                a = m;
            } else {
                b = m;
            }
        }
        let t = (xi - self.xi_grid[a]) / (self.xi_grid[b] - self.xi_grid[a]);
        self.phi_vals[a] + t * (self.phi_vals[b] - self.phi_vals[a])
    }
}

/// Profile construction parameters.
#[derive(Debug, Clone, Copy)]
pub struct ProfileConfig {
    /// Anchor value φ(0).
    pub normalization: f64,
    /// Nodes per decade in the endpoint meshes.
    pub nodes_per_decade: usize,
    /// Uniform interior nodes.
    pub interior_nodes: usize,
    /// Smallest endpoint distance the mesh refines to.
    pub mesh_floor: f64,
}

impl Default for ProfileConfig {
    fn default() -> Self {
        Self {
            normalization: 0.5,
            nodes_per_decade: 512,
            interior_nodes: 512,
            mesh_floor: 1e-8,
        }
    }
}

// 7-point Gauss-Legendre rule on [-1, 1].
const GL_X: [f64; 7] = [
    -0.949_107_912_342_758_5,
    -0.741_531_185_599_394_5,
    -0.405_845_151_377_397_2,
    0.0,
    0.405_845_151_377_397_2,
    0.741_531_185_599_394_5,
    0.949_107_912_342_758_5,
];
const GL_W: [f64; 7] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
    0.381_830_050_505_118_9,
    0.279_705_391_489_276_7,
    0.129_484_966_168_869_7,
];

fn gl7(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = 0.0;
    for i in 0..7 {
        acc += GL_W[i] * f(mid + half * GL_X[i]);
    }
    acc * half
}

fn integrand<'a>(model: &'a Model, shot: &'a Shot) -> Result<impl Fn(f64) -> f64 + 'a> {
    if !model.has_diffusivity() {
        return Err(Error::FunctionUnavailable(
            "profile reconstruction needs the diffusivity factor",
        ));
    }
    Ok(move |phi: f64| {
        let z = shot.z_at(phi).unwrap_or(f64::NAN);
        model.d(phi).unwrap_or(f64::NAN) / (-z)
    })
}

/// ξ(target) = ∫_target^anchor D/(−z), with ξ(anchor) = 0. Both points must
/// lie inside the shot's coverage.
pub fn xi_of_phi(model: &Model, shot: &Shot, target: f64, anchor: f64) -> Result<f64> {
    let f = integrand(model, shot)?;
    let (lo, hi) = shot.trusted_range();
    for p in [target, anchor] {
        if p < lo || p > hi {
            return Err(Error::DomainMismatch(alloc::format!(
                "phi = {p} outside shot coverage [{lo}, {hi}]"
            )));
        }
    }
    // log-graded panels toward both box corners, uniform in between
    let (a, b) = if target < anchor {
        (target, anchor)
    } else {
        (anchor, target)
    };
    let mut acc = 0.0;
    for (pa, pb) in panels(a, b, 64) {
        acc += gl7(&f, pa, pb);
    }
    Ok(if target < anchor { acc } else { -acc })
}

/// Panel subdivision of [a, b] ⊂ (0,1): per-decade splitting against both
/// endpoints of the unit interval, `per_decade` panels in each decade.
fn panels(a: f64, b: f64, per_decade: usize) -> Vec<(f64, f64)> {
    let mut cuts = alloc::vec![a, b];
    let mut push = |x: f64| {
        if x > a && x < b {
            cuts.push(x);
        }
    };
    // decade boundaries and intra-decade geometric cuts near φ = 0
    let mut d = 0.1;
    while d > 1e-12 {
        for k in 0..per_decade {
            let t = k as f64 / per_decade as f64;
            push(d * math::powf(10.0, t));
            push(1.0 - d * math::powf(10.0, t));
        }
        if d < a && 1.0 - d > b {
            break;
        }
        d *= 0.1;
    }
    // uniform interior refinement
    for k in 1..per_decade {
        push(0.1 + 0.8 * k as f64 / per_decade as f64);
    }
    cuts.sort_by(|x, y| x.partial_cmp(y).unwrap());
    cuts.dedup();
    cuts.windows(2).map(|w| (w[0], w[1])).collect()
}

/// Intercept at σ = 0 of a least-squares line through (σ, y) samples.
fn intercept_at_zero(samples: &[(f64, f64)]) -> f64 {
    let n = samples.len() as f64;
    if samples.is_empty() {
        return f64::NAN;
    }
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

/// Least-squares fit of log g against log σ over samples; returns (A, p) of
/// the model g ≈ A·σ^p, or None when any sample is nonpositive.
fn power_fit(samples: &[(f64, f64)]) -> Option<(f64, f64)> {
    let n = samples.len() as f64;
    if samples.len() < 2 {
        return None;
    }
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &(s, g) in samples {
        if s <= 0.0 || g <= 0.0 || !g.is_finite() {
            return None;
        }
        let x = math::ln(s);
        let y = math::ln(g);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    let denom = n * sxx - sx * sx;
    if denom == 0.0 {
        return None;
    }
    let p = (n * sxy - sx * sy) / denom;
    let lna = (sy - p * sx) / n;
    Some((math::exp(lna), p))
}

/// Convergent tail contribution ∫₀^edge A·σ^p dσ, or None when the fitted
/// exponent signals divergence (p ≤ −1 up to fitting slack).
fn tail_integral(samples: &[(f64, f64)], edge: f64) -> Option<f64> {
    let (a, p) = power_fit(samples)?;
    if p <= -1.0 + 1e-3 {
        return None;
    }
    Some(a * math::powf(edge, p + 1.0) / (p + 1.0))
}

/// Limit of φ′ as the profile approaches φ = 1. Exposed as a kernel over the
/// scalar data so the individual formula branches are directly testable.
pub fn slope_limit_at_one(ddot1: f64, g1: f64, h1: f64, c: f64, b: f64) -> Result<f64> {
    if b < 0.0 {
        return Ok(f64::NEG_INFINITY);
    }
    if ddot1 < 0.0 {
        let disc = (h1 - c) * (h1 - c) - 4.0 * ddot1 * g1;
        return Ok(2.0 * g1 / (h1 - c - math::sqrt(disc)));
    }
    if ddot1 == 0.0 {
        if g1 == 0.0 {
            return Err(Error::DomainMismatch(alloc::string::String::from(
                "slope at 1 is 0/0-indeterminate",
            )));
        }
        if c > h1 {
            return Ok(g1 / (h1 - c));
        }
        return Ok(f64::NEG_INFINITY);
    }
    Err(Error::InvalidSpec(alloc::format!(
        "ddot(1) = {ddot1} > 0 contradicts D > 0 on (0,1) with D(1) = 0"
    )))
}

/// Model-level wrapper for the slope limit at φ = 1. A positive D(1) means 1
/// is not a degenerate corner: the slope is z(1)/D(1).
pub fn slope_at_one(model: &Model, c: f64, b: f64) -> Result<f64> {
    let d1 = model
        .d(1.0)
        .ok_or(Error::FunctionUnavailable("diffusivity"))?;
    if d1 > 0.0 {
        return Ok(b / d1);
    }
    let g1 = model.g(1.0).ok_or(Error::FunctionUnavailable("reaction"))?;
    let ddot1 = model
        .ddot(1.0)
        .ok_or(Error::FunctionUnavailable("ddot(1)"))?;
    slope_limit_at_one(ddot1, g1, model.h(1.0), c, b)
}

/// Classification of the profile at φ = 0 by the decision tree. Exposed as a
/// kernel over scalar data; `limsup_g_over_phi` feeds the finite-ξ₀ check of
/// the classical branch. Returns (kind, slope).
pub fn classify_kernel(
    d0: f64,
    ddot0: f64,
    h0: f64,
    c: f64,
    c_star: f64,
    b: f64,
    beta_hat: Option<f64>,
) -> Result<(Kind, f64)> {
    if d0 > 0.0 {
        return Ok((Kind::Classical, 0.0));
    }
    let eq_tol = 1e-5 * (1.0 + math::abs(c_star));
    let at_threshold = math::abs(c - c_star) <= eq_tol;
    if c < c_star - eq_tol {
        return Err(Error::SubcriticalSpeed { c, c_star });
    }
    if at_threshold && math::abs(c_star - h0) <= eq_tol {
        return Ok((Kind::Indeterminate, f64::NAN));
    }
    let sharp_slope = if ddot0 > 0.0 {
        (h0 - c) / ddot0
    } else {
        f64::NEG_INFINITY
    };
    if at_threshold {
        // c = c* > h(0)
        return Ok((Kind::Sharp, sharp_slope));
    }
    // c > c*: the boundary value decides the branch
    let bh = beta_hat.ok_or(Error::FunctionUnavailable(
        "beta_hat is required to classify a supercritical profile at 0",
    ))?;
    if b > bh {
        Ok((Kind::Classical, 0.0))
    } else if c_star > h0 + eq_tol {
        Ok((Kind::Sharp, sharp_slope))
    } else {
        Ok((Kind::Indeterminate, f64::NAN))
    }
}

/// Model-level wrapper for the 0-endpoint classification tree.
pub fn classify_at_zero(
    model: &Model,
    c: f64,
    c_star: f64,
    b: f64,
    beta_hat: Option<f64>,
) -> Result<(Kind, f64)> {
    if !model.qdot_at_zero().exists {
        return Err(Error::QdotAtZeroNonexistent);
    }
    let d0 = model
        .d(0.0)
        .ok_or(Error::FunctionUnavailable("diffusivity"))?;
    let ddot0 = model
        .ddot(0.0)
        .ok_or(Error::FunctionUnavailable("ddot(0)"))?;
    classify_kernel(d0, ddot0, model.h(0.0), c, c_star, b, beta_hat)
}

/// Builds the front from a shot. `b` is the boundary value z(1) the shot was
/// launched with; `c_star` and `beta_hat`, when available, let the endpoint
/// classification use the decision tree, otherwise (and in the indeterminate
/// threshold case) the numeric tail test decides and the profile is tagged
/// `resolved_numerically`.
pub fn build_profile(
    model: &Model,
    shot: &Shot,
    b: f64,
    c_star: Option<f64>,
    beta_hat: Option<f64>,
    cfg: &ProfileConfig,
) -> Result<FrontProfile> {
    let f = integrand(model, shot)?;
    let (cov_lo, cov_hi) = shot.trusted_range();
    let anchor = cfg.normalization;
    if anchor <= cov_lo || anchor >= cov_hi {
        return Err(Error::DomainMismatch(alloc::format!(
            "normalization {anchor} outside shot coverage"
        )));
    }

    // φ-mesh: log-graded toward both corners plus uniform interior,
    // clipped to the shot's coverage, descending so that ξ ascends.
    let mut mesh: Vec<f64> = Vec::new();
    let mut push = |x: f64| {
        if x >= cov_lo && x <= cov_hi {
            mesh.push(x);
        }
    };
    let mut d = 0.1;
    while d >= cfg.mesh_floor * 0.999 {
        for k in 0..cfg.nodes_per_decade {
            let t = k as f64 / cfg.nodes_per_decade as f64;
            push(d * math::powf(10.0, t));
            push(1.0 - d * math::powf(10.0, t));
        }
        d *= 0.1;
    }
    for k in 0..=cfg.interior_nodes {
        push(0.1 + 0.8 * k as f64 / cfg.interior_nodes as f64);
    }
    push(cov_lo);
    push(cov_hi);
    push(anchor);
    mesh.sort_by(|x, y| y.partial_cmp(x).unwrap());
    mesh.dedup();

    // cumulative quadrature along the descending mesh
    let n = mesh.len();
    let mut xi = alloc::vec![0.0f64; n];
    let anchor_idx = mesh
        .iter()
        .position(|&x| x == anchor)
        .expect("anchor is in the mesh");
    for i in (0..anchor_idx).rev() {
        // mesh[i] > mesh[i+1] ≥ anchor: ξ decreases toward 1
        xi[i] = xi[i + 1] - gl7(&f, mesh[i + 1], mesh[i]);
    }
    for i in anchor_idx + 1..n {
        xi[i] = xi[i - 1] + gl7(&f, mesh[i], mesh[i - 1]);
    }

    // endpoint tails from the last resolved decade of integrand samples
    let lo_edge = mesh[n - 1];
    let hi_edge = mesh[0];
    let tail_at_zero = {
        let samples: Vec<(f64, f64)> = mesh
            .iter()
            .rev()
            .take_while(|&&p| p <= lo_edge * 10.0)
            .map(|&p| (p, f(p)))
            .collect();
        tail_integral(&samples, lo_edge)
    };
    let tail_at_one = {
        let samples: Vec<(f64, f64)> = mesh
            .iter()
            .take_while(|&&p| 1.0 - p <= (1.0 - hi_edge) * 10.0)
            .map(|&p| (1.0 - p, f(p)))
            .collect();
        tail_integral(&samples, 1.0 - hi_edge)
    };

    let xi0 = match tail_at_zero {
        Some(t) => xi[n - 1] + t,
        None => f64::INFINITY,
    };
    let a = match tail_at_one {
        Some(t) => xi[0] - t,
        None => f64::NEG_INFINITY,
    };

    // classification at 0: tree first, numeric tail as fallback
    let tree = match c_star {
        Some(cs) => match classify_at_zero(model, shot.c, cs, b, beta_hat) {
            Ok((Kind::Indeterminate, _)) | Err(_) => None,
            Ok(ok) => Some(ok),
        },
        None => None,
    };
    let (kind_at_zero, slope_at_xi0, resolved_numerically) = match tree {
        Some((k, s)) => (k, s, false),
        None => {
            if xi0.is_finite() {
                // sharp: the corner slope is the limit of z/D, extrapolated
                // to φ = 0 by a linear fit over the last two trusted decades
                // (the lowest samples sit near the noise floor, so the wider
                // window keeps the intercept stable)
                let pts: Vec<(f64, f64)> = mesh
                    .iter()
                    .rev()
                    .take_while(|&&p| p <= lo_edge * 100.0)
                    .filter_map(|&p| {
                        let z = shot.z_at(p)?;
                        Some((p, z / model.d(p)?))
                    })
                    .collect();
                (Kind::Sharp, intercept_at_zero(&pts), true)
            } else {
                (Kind::Classical, 0.0, true)
            }
        }
    };
    let slope_at_a = slope_at_one(model, shot.c, b)?;
    let kind_at_one = if a.is_finite() {
        Kind::Sharp
    } else {
        Kind::Classical
    };

    let dphi: Vec<f64> = mesh
        .iter()
        .map(|&p| {
            let z = shot.z_at(p).unwrap_or(f64::NAN);
            z / model.d(p).unwrap_or(f64::NAN)
        })
        .collect();

    Ok(FrontProfile {
        xi_grid: xi,
        phi_vals: mesh,
        dphi_vals: dphi,
        a,
        xi0,
        slope_at_a,
        slope_at_xi0,
        kind_at_zero,
        kind_at_one,
        normalization: anchor,
        resolved_numerically,
        c: shot.c,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Model;
    use crate::singular_ode::{integrate_backward_from_one, IntegratorOptions};
    use approx::assert_relative_eq;

    fn shot_for(name: &str) -> (Model, Shot) {
        let m = Model::preset(name).unwrap();
        let s = integrate_backward_from_one(&m, 0.0, 0.0, &IntegratorOptions::default())
            .unwrap();
        (m, s)
    }

    #[test]
    fn quadrature_examples() {
        // D = φ with z = φ²(φ−1): integrand 1/(σ(1−σ)), ξ(1/4) = ln 3
        let (m, s) = shot_for("remark_9_3_model2");
        let xi = xi_of_phi(&m, &s, 0.25, 0.5).unwrap();
        assert_relative_eq!(xi, 3.0f64.ln(), epsilon = 1e-8);
        // empty integral
        assert_eq!(xi_of_phi(&m, &s, 0.5, 0.5).unwrap(), 0.0);
        // antisymmetry in the anchor
        let back = xi_of_phi(&m, &s, 0.5, 0.25).unwrap();
        assert_relative_eq!(back, -xi, epsilon = 1e-12);
    }

    #[test]
    fn sharp_profile_reaches_zero_at_ln2() {
        // D = φ² with the same z: integrand 1/(1−σ), φ(ξ) = 1 − e^ξ/2
        let (m, s) = shot_for("remark_9_3_model1");
        let p = build_profile(&m, &s, 0.0, None, None, &ProfileConfig::default()).unwrap();
        assert_relative_eq!(p.xi0, 2.0f64.ln(), epsilon = 1e-6);
        assert_eq!(p.kind_at_zero, Kind::Sharp);
        assert!(p.resolved_numerically);
        assert_relative_eq!(p.slope_at_xi0, -1.0, epsilon = 1e-4);
        assert_eq!(p.a, f64::NEG_INFINITY);
        assert_eq!(p.kind_at_one, Kind::Classical);
        for i in 0..40 {
            let xi = -5.0 + i as f64 * (2.0f64.ln() + 5.0) / 40.0;
            let exact = 1.0 - 0.5 * xi.exp();
            assert_relative_eq!(p.phi_at(xi), exact, epsilon = 1e-4);
        }
        // constant extension past the corner
        assert_eq!(p.phi_at(1.0), 0.0);
    }

    #[test]
    fn classical_profile_is_logistic() {
        let (m, s) = shot_for("remark_9_3_model2");
        let p = build_profile(&m, &s, 0.0, None, None, &ProfileConfig::default()).unwrap();
        assert_eq!(p.xi0, f64::INFINITY);
        assert_eq!(p.a, f64::NEG_INFINITY);
        assert_eq!(p.kind_at_zero, Kind::Classical);
        assert_eq!(p.kind_at_one, Kind::Classical);
        for i in 0..=40 {
            let xi = -5.0 + 10.0 * i as f64 / 40.0;
            let exact = 1.0 / (1.0 + xi.exp());
            assert_relative_eq!(p.phi_at(xi), exact, epsilon = 1e-4);
        }
    }

    #[test]
    fn profile_values_strictly_decrease() {
        let (m, s) = shot_for("remark_9_3_model1");
        let p = build_profile(&m, &s, 0.0, None, None, &ProfileConfig::default()).unwrap();
        for w in p.phi_vals.windows(2) {
            assert!(w[1] < w[0]);
        }
        for w in p.xi_grid.windows(2) {
            assert!(w[1] > w[0]);
        }
    }

    #[test]
    fn shift_covariance_between_normalizations() {
        let (m, s) = shot_for("remark_9_3_model2");
        let p5 = build_profile(&m, &s, 0.0, None, None, &ProfileConfig::default()).unwrap();
        let cfg7 = ProfileConfig {
            normalization: 0.7,
            ..ProfileConfig::default()
        };
        let p7 = build_profile(&m, &s, 0.0, None, None, &cfg7).unwrap();
        // translate: 0.7 = 1/(1+e^t) at t = ln(3/7)
        let t = (3.0f64 / 7.0).ln();
        for i in 0..=40 {
            let xi = -3.0 + 6.0 * i as f64 / 40.0;
            assert_relative_eq!(p7.phi_at(xi), p5.phi_at(xi + t), epsilon = 1e-6);
        }
    }

    #[test]
    fn slope_formula_branches() {
        // middle branch: Ḋ(1)=0, g(1)=1, h(1)=0, c=2, b=0
        assert_relative_eq!(
            slope_limit_at_one(0.0, 1.0, 0.0, 2.0, 0.0).unwrap(),
            -0.5,
            max_relative = 1e-15
        );
        // first branch: Ḋ(1)=−1, g(1)=1, h(1)=c → 2/(0−√4) = −1
        assert_relative_eq!(
            slope_limit_at_one(-1.0, 1.0, 1.3, 1.3, 0.0).unwrap(),
            -1.0,
            max_relative = 1e-15
        );
        // z(1) < 0 forces a vertical approach
        assert_eq!(
            slope_limit_at_one(0.0, 1.0, 0.0, 2.0, -0.3).unwrap(),
            f64::NEG_INFINITY
        );
        // Ḋ(1)=0, c ≤ h(1): vertical
        assert_eq!(
            slope_limit_at_one(0.0, 1.0, 3.0, 2.0, 0.0).unwrap(),
            f64::NEG_INFINITY
        );
        // 0/0 refusal
        assert!(slope_limit_at_one(0.0, 0.0, 0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn classification_tree_branches() {
        // D(0)>0: classical regardless
        assert_eq!(
            classify_kernel(1.0, 0.0, 0.0, 2.0, 2.0, 0.0, None).unwrap(),
            (Kind::Classical, 0.0)
        );
        // c = c* > h(0), Ḋ(0)=1: sharp with slope (h(0)−c)/Ḋ(0)
        assert_eq!(
            classify_kernel(0.0, 1.0, 0.0, 2.0, 2.0, 0.0, None).unwrap(),
            (Kind::Sharp, -2.0)
        );
        // c = c* = h(0): indeterminate
        let (k, _) = classify_kernel(0.0, 1.0, 0.0, 0.0, 0.0, 0.0, None).unwrap();
        assert_eq!(k, Kind::Indeterminate);
        // c > c* with b above the transition: classical
        assert_eq!(
            classify_kernel(0.0, 1.0, 0.0, 3.0, 2.0, -0.01, Some(-0.5)).unwrap(),
            (Kind::Classical, 0.0)
        );
        // c > c* > h(0) with b at or below the transition: sharp
        assert_eq!(
            classify_kernel(0.0, 1.0, 0.0, 3.0, 2.0, -0.9, Some(-0.5)).unwrap(),
            (Kind::Sharp, -3.0)
        );
        // c below c*: refused
        assert!(classify_kernel(0.0, 1.0, 0.0, 1.0, 2.0, 0.0, None).is_err());
        // missing beta_hat in the supercritical branch: refused
        assert!(classify_kernel(0.0, 1.0, 0.0, 3.0, 2.0, -0.9, None).is_err());
    }
}
