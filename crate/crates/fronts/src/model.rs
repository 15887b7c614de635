//! Model functions `f`, `D`, `g` on `[0,1]`, validation of the standing
//! assumptions, and the derived quantities `q = D·g`, `h = ḟ`.
//!
//! Models are either polynomial (exact derivatives by coefficient
//! differentiation) or members of a closed registry of named presets with
//! closed-form evaluators. There is deliberately no expression parser.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::math;
use crate::poly::Poly;
use crate::{Error, Result};

/// Scalar function pointer used by non-polynomial presets.
pub type ScalarFn = fn(f64) -> f64;

/// A model function: exact polynomial or closed-form evaluator.
#[derive(Debug, Clone)]
pub enum Func {
    Poly(Poly),
    Exact(ScalarFn),
}

impl Func {
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            Func::Poly(p) => p.eval(x),
            Func::Exact(f) => f(x),
        }
    }

    fn as_poly(&self) -> Option<&Poly> {
        match self {
            Func::Poly(p) => Some(p),
            Func::Exact(_) => None,
        }
    }
}

/// Raw model specification: polynomial coefficient vectors (constant term
/// first) or a named preset that overrides them.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ModelSpec {
    pub f_poly: Option<Vec<f64>>,
    pub d_poly: Option<Vec<f64>>,
    pub g_poly: Option<Vec<f64>>,
    pub special: Option<String>,
}

/// Per-assumption verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
}

impl Verdict {
    pub fn holds(self) -> bool {
        self == Verdict::Holds
    }
}

/// Existence and value of a one-sided derivative of `q` at an endpoint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EndpointDerivative {
    pub exists: bool,
    pub value: Option<f64>,
}

impl EndpointDerivative {
    fn known(v: f64) -> Self {
        Self { exists: true, value: Some(v) }
    }
    fn nonexistent() -> Self {
        Self { exists: false, value: None }
    }
}

/// Which pair of structural assumptions the model satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scenario {
    /// (D1) + (g0): semi-wavefronts to 0.
    SemiWavefront,
    /// (D0) + (g01): wavefronts connecting 1 to 0.
    Wavefront,
    /// Only the product-level assumption (q) holds (or the model is given
    /// directly at the (h, q) level).
    QOnly,
}

/// Verdicts for every standing assumption plus the derived endpoint data.
#[derive(Debug, Clone, PartialEq)]
pub struct AssumptionReport {
    /// (f): f ∈ C¹[0,1] with f(0) = 0.
    pub f_ok: Verdict,
    /// (D0): D > 0 on (0,1), D(0) = 0.
    pub d0: Verdict,
    /// (D1): D > 0 on (0,1), D(1) = 0.
    pub d1: Verdict,
    /// (g0): g > 0 on (0,1], g(0) = 0.
    pub g0: Verdict,
    /// (g01): g > 0 on (0,1), g(0) = g(1) = 0.
    pub g01: Verdict,
    /// (q): q > 0 on (0,1), q(0) = q(1) = 0, limsup q(φ)/φ < ∞ at 0⁺.
    pub q: Verdict,
    /// limsup D(φ)g(φ)/φ < ∞ at 0⁺ (the standing product bound).
    pub product_bound: Verdict,
    pub qdot_at_zero: EndpointDerivative,
    pub qdot_at_one: EndpointDerivative,
    /// ∫₀ q(σ)/σ² dσ < ∞.
    pub integrable_q_over_phi2: Verdict,
    pub scenario: Scenario,
}

/// Validated model handle: immutable after construction, safe for concurrent
/// reads.
#[derive(Debug, Clone)]
pub struct Model {
    name: Option<String>,
    f: Option<Func>,
    d: Option<Func>,
    g: Option<Func>,
    h: Func,
    q: Func,
    qdot0: EndpointDerivative,
    qdot1: EndpointDerivative,
    /// liminf of q(φ)/φ at 0⁺ (equals q̇(0) when that derivative exists).
    liminf_q_over_phi: Option<f64>,
    /// Stored verdict for limsup q(φ)/φ < ∞ at 0⁺.
    q_growth_bounded: bool,
    /// Stored verdict for ∫₀ q/σ² < ∞.
    integrable: bool,
}

impl Model {
    /// Build a validated handle from a specification.
    pub fn build(spec: &ModelSpec) -> Result<Model> {
        if let Some(name) = &spec.special {
            return Model::preset(name);
        }
        let f = spec.f_poly.as_deref().map(Poly::new);
        let d = spec.d_poly.as_deref().map(Poly::new);
        let g = spec.g_poly.as_deref().map(Poly::new);
        let (d, g) = match (d, g) {
            (Some(d), Some(g)) => (d, g),
            _ => {
                return Err(Error::InvalidSpec(
                    "polynomial models require both D and g (or a preset tag)".to_string(),
                ))
            }
        };
        Model::from_polys(f, d, g)
    }

    /// Polynomial model with both `D` and `g` given; `q = D·g` and `h = ḟ`
    /// are computed exactly.
    pub fn from_polys(f: Option<Poly>, d: Poly, g: Poly) -> Result<Model> {
        if let Some(f) = &f {
            if f.eval(0.0) != 0.0 {
                return Err(Error::InvalidSpec(format!(
                    "f(0) = {} must vanish",
                    f.eval(0.0)
                )));
            }
        }
        let q = d.mul(&g);
        let dq = q.deriv();
        let qdot0 = EndpointDerivative::known(dq.eval(0.0));
        let qdot1 = EndpointDerivative::known(dq.eval(1.0));
        let liminf = qdot0.value;
        let growth_ok = q.is_zero() || q.lowest_degree().is_some_and(|k| k >= 1);
        let integrable = q.is_zero() || q.lowest_degree().is_some_and(|k| k >= 2);
        Ok(Model {
            name: None,
            h: Func::Poly(f.as_ref().map(Poly::deriv).unwrap_or_else(Poly::zero)),
            f: f.map(Func::Poly),
            d: Some(Func::Poly(d)),
            g: Some(Func::Poly(g)),
            q: Func::Poly(q),
            qdot0,
            qdot1,
            liminf_q_over_phi: liminf,
            q_growth_bounded: growth_ok,
            integrable,
        })
    }

    /// Model given at the `(h, q)` level only, with an optional flux `f`
    /// consistent with `h = ḟ`. Used by presets whose `D`, `g` factorization
    /// is not printed.
    pub fn from_q_level(f: Option<Poly>, q: Poly) -> Result<Model> {
        let h = f.as_ref().map(Poly::deriv).unwrap_or_else(Poly::zero);
        let dq = q.deriv();
        let qdot0 = EndpointDerivative::known(dq.eval(0.0));
        let qdot1 = EndpointDerivative::known(dq.eval(1.0));
        let liminf = qdot0.value;
        let growth_ok = q.lowest_degree().is_some_and(|k| k >= 1);
        let integrable = q.lowest_degree().is_some_and(|k| k >= 2);
        Ok(Model {
            name: None,
            f: f.map(Func::Poly),
            d: None,
            g: None,
            h: Func::Poly(h),
            q: Func::Poly(q),
            qdot0,
            qdot1,
            liminf_q_over_phi: liminf,
            q_growth_bounded: growth_ok,
            integrable,
        })
    }

    /// Registry lookup by preset name.
    pub fn preset(name: &str) -> Result<Model> {
        let mut model = match name {
            // q = φ³(1−φ), h = 3φ(φ−1), f = φ³ − (3/2)φ², with the
            // factorization D = φ², g = φ(1−φ) of the same q. The unique
            // z(0)=z(1)=0 solution at c = h(0) = 0 is z*(φ) = φ²(φ−1).
            "remark_6_2" | "remark_9_3_model1" => Model::from_polys(
                Some(Poly::new(vec![0.0, 0.0, -1.5, 1.0])),
                Poly::new(vec![0.0, 0.0, 1.0]),
                Poly::new(vec![0.0, 1.0, -1.0]),
            )?,
            // Same q and f through D = φ, g = φ²(1−φ); the profile is
            // classical instead of sharp.
            "remark_9_3_model2" => Model::from_polys(
                Some(Poly::new(vec![0.0, 0.0, -1.5, 1.0])),
                Poly::new(vec![0.0, 1.0]),
                Poly::new(vec![0.0, 0.0, 1.0, -1.0]),
            )?,
            // Classic monostable reaction with constant diffusivity.
            "fisher" => Model::from_polys(
                None,
                Poly::new(vec![1.0]),
                Poly::new(vec![0.0, 1.0, -1.0]),
            )?,
            // q = φ⁴(1−φ), h = −2φ − φ²(1−φ); the line z = −φ² solves the
            // left-boundary problem at c = h(0) = 0 even though z* differs.
            "counterexample_6_2b" => Model::from_q_level(
                // f = ∫h = −φ² − φ³/3 + φ⁴/4
                Some(Poly::new(vec![0.0, 0.0, -1.0, -1.0 / 3.0, 0.25])),
                Poly::new(vec![0.0, 0.0, 0.0, 0.0, 1.0, -1.0]),
            )?,
            // q with an oscillating factor in log(1−φ): q̇(1) does not exist.
            "oscillatory_7_2" => {
                let mut m = Model::from_closures(osc72_h, osc72_q);
                m.qdot0 = EndpointDerivative::known(0.0);
                m.qdot1 = EndpointDerivative::nonexistent();
                m.liminf_q_over_phi = Some(0.0);
                m.q_growth_bounded = true;
                m.integrable = true; // q = O(φ³) at 0
                m
            }
            // q with an oscillating factor in log φ: q̇(0) does not exist.
            "oscillatory_8_3" => {
                let mut m = Model::from_closures(osc83_h, osc83_q);
                m.qdot0 = EndpointDerivative::nonexistent();
                m.qdot1 = EndpointDerivative::known(0.0);
                // (2+sin)(3−cos−sin) at the liminf of the oscillation
                m.liminf_q_over_phi = None;
                m.q_growth_bounded = true;
                m.integrable = false; // q/σ² ~ bounded/σ
                m
            }
            other => {
                return Err(Error::InvalidSpec(format!("unknown preset \"{other}\"")));
            }
        };
        model.name = Some(name.to_string());
        Ok(model)
    }

    fn from_closures(h: ScalarFn, q: ScalarFn) -> Model {
        Model {
            name: None,
            f: None,
            d: None,
            g: None,
            h: Func::Exact(h),
            q: Func::Exact(q),
            qdot0: EndpointDerivative::nonexistent(),
            qdot1: EndpointDerivative::nonexistent(),
            liminf_q_over_phi: None,
            q_growth_bounded: true,
            integrable: false,
        }
    }

    /// Names in the preset registry.
    pub fn preset_names() -> &'static [&'static str] {
        &[
            "remark_6_2",
            "remark_9_3_model1",
            "remark_9_3_model2",
            "fisher",
            "counterexample_6_2b",
            "oscillatory_7_2",
            "oscillatory_8_3",
        ]
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn q(&self, phi: f64) -> f64 {
        self.q.eval(phi)
    }

    pub fn h(&self, phi: f64) -> f64 {
        self.h.eval(phi)
    }

    pub fn f(&self, phi: f64) -> Option<f64> {
        self.f.as_ref().map(|f| f.eval(phi))
    }

    pub fn d(&self, phi: f64) -> Option<f64> {
        self.d.as_ref().map(|d| d.eval(phi))
    }

    pub fn g(&self, phi: f64) -> Option<f64> {
        self.g.as_ref().map(|g| g.eval(phi))
    }

    pub fn has_f(&self) -> bool {
        self.f.is_some()
    }

    /// Coefficients (constant first) when the component is polynomial.
    pub fn f_coeffs(&self) -> Option<&[f64]> {
        self.f.as_ref()?.as_poly().map(Poly::coeffs)
    }

    pub fn d_coeffs(&self) -> Option<&[f64]> {
        self.d.as_ref()?.as_poly().map(Poly::coeffs)
    }

    pub fn g_coeffs(&self) -> Option<&[f64]> {
        self.g.as_ref()?.as_poly().map(Poly::coeffs)
    }

    pub fn has_diffusivity(&self) -> bool {
        self.d.is_some()
    }

    /// One-sided derivative of `q` at 0 when it exists.
    pub fn qdot_at_zero(&self) -> EndpointDerivative {
        self.qdot0
    }

    /// One-sided derivative of `q` at 1 when it exists.
    pub fn qdot_at_one(&self) -> EndpointDerivative {
        self.qdot1
    }

    /// Interior derivative of `q`; exact for polynomials, central difference
    /// for closed-form presets.
    pub fn qdot(&self, phi: f64) -> f64 {
        match &self.q {
            Func::Poly(p) => p.deriv().eval(phi),
            Func::Exact(f) => {
                let step = 1e-7 * (1.0 + math::abs(phi));
                (f(phi + step) - f(phi - step)) / (2.0 * step)
            }
        }
    }

    /// `Ḋ` at an endpoint, exact for polynomials.
    pub fn ddot(&self, phi: f64) -> Option<f64> {
        match self.d.as_ref()? {
            Func::Poly(p) => Some(p.deriv().eval(phi)),
            Func::Exact(_) => None,
        }
    }

    /// limsup of g(φ)/φ at 0⁺; for polynomial g with g(0)=0 this is ġ(0).
    pub fn limsup_g_over_phi_at_zero(&self) -> Option<f64> {
        let g = self.g.as_ref()?.as_poly()?;
        if g.eval(0.0) != 0.0 {
            return None; // g/φ blows up
        }
        g.div_xk(1).map(|p| p.eval(0.0))
    }

    /// liminf of q(φ)/φ at 0⁺, when a single limit value is known.
    pub fn liminf_q_over_phi_at_zero(&self) -> Option<f64> {
        self.liminf_q_over_phi
    }

    /// sup of f(φ)/φ over (0,1], computed by grid scan plus golden-section
    /// refinement; the φ→0⁺ limit is ḟ(0).
    pub fn sup_f_over_phi(&self) -> Option<f64> {
        let f = self.f.as_ref()?.as_poly()?;
        let ratio = f.div_xk(1)?;
        Some(sup_on_unit_interval(|x| ratio.eval(x)))
    }

    /// sup of q(φ)/φ over (0,1].
    pub fn sup_q_over_phi(&self) -> Option<f64> {
        match &self.q {
            Func::Poly(p) => {
                let ratio = p.div_xk(1)?;
                Some(sup_on_unit_interval(|x| ratio.eval(x)))
            }
            Func::Exact(q) => {
                // Interior scan; the limit at 0⁺ only exists when q̇(0) does.
                let limit0 = self.qdot0.value?;
                let interior = sup_on_range(|x| q(x) / x, 1e-3, 1.0);
                Some(if limit0 > interior { limit0 } else { interior })
            }
        }
    }

    /// sup over (0,1] of (1/φ)·∫₀^φ q(σ)/σ dσ. Defined only when q̇(0) = 0
    /// and q is polynomial.
    pub fn sup_mean_integral_q_over_phi(&self) -> Option<f64> {
        if self.qdot0.value != Some(0.0) {
            return None;
        }
        let q = self.q.as_poly()?;
        let integrand = q.div_xk(1)?;
        let primitive = integrand.antideriv(); // vanishes at 0
        let ratio = primitive.div_xk(1)?;
        Some(sup_on_unit_interval(|x| ratio.eval(x)))
    }

    /// max of h over [0,1].
    pub fn max_h(&self) -> f64 {
        let h = &self.h;
        let m = sup_on_range(|x| h.eval(x), 0.0, 1.0);
        m.max(h.eval(0.0)).max(h.eval(1.0))
    }

    /// max of q over [0,1].
    pub fn max_q(&self) -> f64 {
        let q = &self.q;
        sup_on_range(|x| q.eval(x), 0.0, 1.0).max(0.0)
    }

    /// Whether ∫₀ q(σ)/σ² dσ < ∞ (condition used at c = c* and for β = β̂).
    pub fn integrable_q_over_phi2(&self) -> bool {
        self.integrable
    }

    /// Verdicts for all standing assumptions. Always produces a report.
    pub fn validate_assumptions(&self) -> AssumptionReport {
        let f_ok = match &self.f {
            Some(f) => {
                if f.eval(0.0) == 0.0 {
                    Verdict::Holds
                } else {
                    Verdict::Fails
                }
            }
            None => Verdict::NotApplicable,
        };

        let (d0, d1) = match &self.d {
            Some(d) => {
                let pos = positive_on_open(|x| d.eval(x));
                let at0 = d.eval(0.0);
                let at1 = d.eval(1.0);
                (
                    verdict(pos && at0 == 0.0),
                    verdict(pos && at1 == 0.0),
                )
            }
            None => (Verdict::NotApplicable, Verdict::NotApplicable),
        };

        let (g0, g01) = match &self.g {
            Some(g) => {
                let pos = positive_on_open(|x| g.eval(x));
                let at0 = g.eval(0.0);
                let at1 = g.eval(1.0);
                (
                    verdict(pos && at0 == 0.0 && at1 > 0.0),
                    verdict(pos && at0 == 0.0 && at1 == 0.0),
                )
            }
            None => (Verdict::NotApplicable, Verdict::NotApplicable),
        };

        let q_pos = positive_on_open(|x| self.q.eval(x));
        let q_ends = self.q.eval(0.0) == 0.0 && boundary_zero(|x| self.q.eval(x), 1.0);
        let q_ok = verdict(q_pos && q_ends && self.q_growth_bounded);

        let scenario = if d1.holds() && g0.holds() {
            Scenario::SemiWavefront
        } else if d0.holds() && g01.holds() {
            Scenario::Wavefront
        } else {
            Scenario::QOnly
        };

        AssumptionReport {
            f_ok,
            d0,
            d1,
            g0,
            g01,
            q: q_ok,
            product_bound: verdict(self.q_growth_bounded),
            qdot_at_zero: self.qdot0,
            qdot_at_one: self.qdot1,
            integrable_q_over_phi2: verdict(self.integrable),
            scenario,
        }
    }
}

fn verdict(b: bool) -> Verdict {
    if b {
        Verdict::Holds
    } else {
        Verdict::Fails
    }
}

/// Exact zero at an endpoint for polynomials; closed-form presets may return
/// NaN exactly at the endpoint (oscillating logs), so fall back to the limit
/// along a short approach.
fn boundary_zero(f: impl Fn(f64) -> f64, x: f64) -> bool {
    let v = f(x);
    if v == 0.0 {
        return true;
    }
    if v.is_nan() {
        let near = f(x - 1e-9 * if x > 0.5 { 1.0 } else { -1.0 });
        return math::abs(near) < 1e-7;
    }
    false
}

/// Sign check on the open interval via a 10⁻³-spaced grid with exact endpoint
/// evaluation and dyadic refinement near any small values.
fn positive_on_open(f: impl Fn(f64) -> f64) -> bool {
    let n = 1000usize;
    for i in 1..n {
        let x = i as f64 / n as f64;
        let v = f(x);
        if v <= 0.0 {
            return false;
        }
        if v < 1e-6 {
            // refine the two neighboring cells
            let lo = (i - 1) as f64 / n as f64;
            let hi = (i + 1) as f64 / n as f64;
            for j in 1..200 {
                let y = lo + (hi - lo) * j as f64 / 200.0;
                if y > 0.0 && y < 1.0 && f(y) <= 0.0 {
                    return false;
                }
            }
        }
    }
    true
}

/// Maximum of `f` on `[a,b]`: 10⁻³-grid scan seeding a golden-section refine.
pub(crate) fn sup_on_range(f: impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    let n = 1000usize;
    let mut best_i = 0usize;
    let mut best = f64::NEG_INFINITY;
    for i in 0..=n {
        let x = a + (b - a) * i as f64 / n as f64;
        let v = f(x);
        if v > best {
            best = v;
            best_i = i;
        }
    }
    let lo = a + (b - a) * best_i.saturating_sub(1) as f64 / n as f64;
    let hi = a + (b - a) * (best_i + 1).min(n) as f64 / n as f64;
    best.max(golden_max(&f, lo, hi))
}

/// Maximum over [0,1] (continuous extension at both ends).
fn sup_on_unit_interval(f: impl Fn(f64) -> f64) -> f64 {
    sup_on_range(f, 0.0, 1.0)
}

fn golden_max(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..80 {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    fc.max(fd)
}

// Closed-form oscillatory presets. Both push an oscillation in log-scale
// against one endpoint so that the one-sided derivative of q fails to exist
// there while (q) still holds.

fn osc72_q(phi: f64) -> f64 {
    if phi <= 0.0 || phi >= 1.0 {
        return 0.0;
    }
    let l = math::ln(1.0 - phi);
    let s = math::sin(l);
    phi * phi * phi
        * (1.0 - phi)
        * ((s + 2.0) * (s + 2.0) + 2.0 * math::cos(l) + 0.5 * math::sin(2.0 * l))
}

fn osc72_h(phi: f64) -> f64 {
    if phi >= 1.0 {
        return 0.0;
    }
    if phi <= 0.0 {
        return 0.0;
    }
    let l = math::ln(1.0 - phi);
    phi * (phi - 1.0) * (math::cos(l) + 3.0 * math::sin(l) + 6.0)
}

/// z solving the c = 0 problem for the `oscillatory_7_2` preset.
pub fn osc72_exact_z(phi: f64) -> f64 {
    if phi <= 0.0 || phi >= 1.0 {
        return 0.0;
    }
    let l = math::ln(1.0 - phi);
    -(2.0 + math::sin(l)) * (1.0 - phi) * phi * phi
}

fn osc83_q(phi: f64) -> f64 {
    if phi <= 0.0 || phi >= 1.0 {
        return 0.0;
    }
    let l = math::ln(phi);
    let one = 1.0 - phi;
    let one4 = one * one * one * one;
    phi * one4 * (2.0 + math::sin(l)) * (3.0 - math::cos(l) - math::sin(l))
}

fn osc83_h(phi: f64) -> f64 {
    if phi <= 0.0 {
        return -5.0;
    }
    if phi >= 1.0 {
        return 0.0;
    }
    let l = math::ln(phi);
    2.0 * (2.0 + math::sin(l)) * (1.0 - phi) * phi - 5.0 * (1.0 - phi) * (1.0 - phi)
}

/// z solving the c = 0 problem for the `oscillatory_8_3` preset.
pub fn osc83_exact_z(phi: f64) -> f64 {
    if phi <= 0.0 || phi >= 1.0 {
        return 0.0;
    }
    let l = math::ln(phi);
    -(2.0 + math::sin(l)) * (1.0 - phi) * (1.0 - phi) * phi
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn cubic_preset_assumptions() {
        let m = Model::preset("remark_6_2").unwrap();
        let rep = m.validate_assumptions();
        assert_eq!(rep.scenario, Scenario::Wavefront);
        assert!(rep.q.holds());
        assert!(rep.d0.holds());
        assert!(rep.g01.holds());
        assert_eq!(rep.qdot_at_zero.value, Some(0.0));
        assert_eq!(rep.qdot_at_one.value, Some(-1.0));
        assert!(rep.integrable_q_over_phi2.holds());
        // q = φ³(1−φ)
        assert_relative_eq!(m.q(0.5), 0.5f64.powi(3) * 0.5, max_relative = 1e-15);
        // h = ḟ = 3φ² − 3φ
        assert_relative_eq!(m.h(0.25), 3.0 * 0.0625 - 0.75, max_relative = 1e-15);
    }

    #[test]
    fn fisher_sups() {
        let m = Model::preset("fisher").unwrap();
        // q/φ = 1 − φ: sup 1, attained in the limit at 0⁺
        assert_relative_eq!(m.sup_q_over_phi().unwrap(), 1.0, epsilon = 1e-9);
        assert_eq!(m.liminf_q_over_phi_at_zero(), Some(1.0));
        assert!(m.sup_f_over_phi().is_none());
        assert!(!m.integrable_q_over_phi2());
        let rep = m.validate_assumptions();
        assert_eq!(rep.scenario, Scenario::QOnly); // D(0) = 1 > 0, D(1) = 1 > 0
    }

    #[test]
    fn mean_integral_bound_matches_hand_value() {
        // q = φ³(1−φ): ∫₀^φ q/σ dσ = φ³/3 − φ⁴/4, divided by φ and maximized
        // on (0,1]: the ratio φ²/3 − φ³/4 increases up to φ = 8/9.
        let m = Model::preset("remark_6_2").unwrap();
        let x: f64 = 8.0 / 9.0;
        let expect = x * x / 3.0 - x * x * x / 4.0;
        assert_relative_eq!(
            m.sup_mean_integral_q_over_phi().unwrap(),
            expect,
            epsilon = 1e-10
        );
    }

    #[test]
    fn oscillatory_endpoint_derivatives() {
        let a = Model::preset("oscillatory_7_2").unwrap();
        assert!(!a.qdot_at_one().exists);
        assert_eq!(a.qdot_at_zero().value, Some(0.0));
        let b = Model::preset("oscillatory_8_3").unwrap();
        assert!(!b.qdot_at_zero().exists);
        assert_eq!(b.qdot_at_one().value, Some(0.0));
        // both satisfy (q)
        assert!(a.validate_assumptions().q.holds());
        assert!(b.validate_assumptions().q.holds());
    }

    #[test]
    fn oscillatory_exact_solutions_satisfy_reduced_equation() {
        // ż = h − c − q/z at c = 0, checked by central differences.
        for (q, h, z) in [
            (osc72_q as ScalarFn, osc72_h as ScalarFn, osc72_exact_z as ScalarFn),
            (osc83_q, osc83_h, osc83_exact_z),
        ] {
            for i in 1..40 {
                let phi = 0.02 + 0.96 * i as f64 / 40.0;
                let step = 1e-6;
                let dz = (z(phi + step) - z(phi - step)) / (2.0 * step);
                let rhs = h(phi) - q(phi) / z(phi);
                assert_relative_eq!(dz, rhs, epsilon = 1e-5, max_relative = 1e-5);
            }
        }
    }

    #[test]
    fn quartic_preset_is_q_level() {
        let m = Model::preset("counterexample_6_2b").unwrap();
        assert!(!m.has_diffusivity());
        assert_eq!(m.qdot_at_zero().value, Some(0.0));
        // h(φ) = −2φ − φ² + φ³
        assert_relative_eq!(m.h(0.5), -1.0 - 0.25 + 0.125, max_relative = 1e-15);
        // y = −φ² solves ẏ = h − q/y at c = 0
        for i in 1..20 {
            let phi = i as f64 / 20.0 * 0.95;
            let y = -phi * phi;
            assert_relative_eq!(-2.0 * phi, m.h(phi) - m.q(phi) / y, epsilon = 1e-12);
        }
    }

    #[test]
    fn unknown_preset_is_rejected() {
        assert!(Model::preset("nope").is_err());
    }

    #[test]
    fn build_requires_both_d_and_g() {
        let spec = ModelSpec {
            g_poly: Some(vec![0.0, 1.0, -1.0]),
            ..Default::default()
        };
        assert!(Model::build(&spec).is_err());
    }
}
