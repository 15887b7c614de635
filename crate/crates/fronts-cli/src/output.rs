//! Report printers (plain text and JSON) and CSV writers.
//!
//! CSV values use 17 significant digits so artifacts round-trip through f64.

use std::io;
use std::path::{Path, PathBuf};

use serde_json::json;

use fronts::model::{AssumptionReport, Model, Scenario, Verdict};
use fronts::oracle::{FactReport, PropertyReport};
use fronts::profile::{FrontProfile, Kind};
use fronts::singular_ode::{Shot, Terminal};
use fronts::thresholds::{CriticalSpeed, SpeedBounds};

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "holds",
        Verdict::Fails => "fails",
        Verdict::NotApplicable => "n/a",
    }
}

fn scenario_str(s: Scenario) -> &'static str {
    match s {
        Scenario::SemiWavefront => "semi-wavefront",
        Scenario::Wavefront => "wavefront",
        Scenario::QOnly => "product-level-only",
    }
}

fn kind_str(k: Kind) -> &'static str {
    match k {
        Kind::Classical => "classical",
        Kind::Sharp => "sharp",
        Kind::Indeterminate => "indeterminate",
    }
}

fn terminal_json(t: &Terminal) -> serde_json::Value {
    match t {
        Terminal::ReachedEnd => json!({"kind": "reached_end"}),
        Terminal::ZHitZero { phi } => json!({"kind": "z_hit_zero", "phi": phi}),
        Terminal::StepUnderflow { phi } => json!({"kind": "step_underflow", "phi": phi}),
    }
}

pub fn print_validate(model: &Model, rep: &AssumptionReport, as_json: bool) {
    if as_json {
        let v = json!({
            "model": model.name(),
            "assumptions": {
                "f_regular_with_zero_at_origin": verdict_str(rep.f_ok),
                "diffusivity_positive_degenerate_at_zero": verdict_str(rep.d0),
                "diffusivity_positive_degenerate_at_one": verdict_str(rep.d1),
                "reaction_positive_vanishing_at_zero": verdict_str(rep.g0),
                "reaction_positive_vanishing_at_both_ends": verdict_str(rep.g01),
                "product_positive_vanishing_at_ends": verdict_str(rep.q),
                "product_over_phi_bounded_at_zero": verdict_str(rep.product_bound),
                "product_integrable_against_phi2": verdict_str(rep.integrable_q_over_phi2),
            },
            "qdot_at_zero": {"exists": rep.qdot_at_zero.exists, "value": rep.qdot_at_zero.value},
            "qdot_at_one": {"exists": rep.qdot_at_one.exists, "value": rep.qdot_at_one.value},
            "scenario": scenario_str(rep.scenario),
        });
        println!("{}", serde_json::to_string_pretty(&v).unwrap());
        return;
    }
    if let Some(name) = model.name() {
        println!("model: {name}");
    }
    println!("f regular, f(0) = 0:            {}", verdict_str(rep.f_ok));
    println!("D > 0 on (0,1), D(0) = 0:       {}", verdict_str(rep.d0));
    println!("D > 0 on (0,1), D(1) = 0:       {}", verdict_str(rep.d1));
    println!("g > 0 on (0,1], g(0) = 0:       {}", verdict_str(rep.g0));
    println!("g > 0 on (0,1), g(0)=g(1)=0:    {}", verdict_str(rep.g01));
    println!("q > 0 inside, q/phi bounded:    {}", verdict_str(rep.q));
    println!("integral of q/phi^2 finite:     {}", verdict_str(rep.integrable_q_over_phi2));
    match rep.qdot_at_zero.value {
        Some(v) => println!("dq/dphi at 0:                   {v:.6e}"),
        None => println!("dq/dphi at 0:                   does not exist"),
    }
    match rep.qdot_at_one.value {
        Some(v) => println!("dq/dphi at 1:                   {v:.6e}"),
        None => println!("dq/dphi at 1:                   does not exist"),
    }
    println!("scenario:                       {}", scenario_str(rep.scenario));
}

pub fn print_bounds(b: &SpeedBounds, as_json: bool) {
    if as_json {
        let v = json!({
            "lower": b.lower,
            "upper_pointwise": b.upper_pointwise,
            "upper_integral": b.upper_integral,
            "upper": b.upper(),
            "citation": "the critical speed lies between max{sup f/phi, h(0) + 2*sqrt(liminf q/phi)} and 2*sqrt(sup q/phi) + sup f/phi; when dq/dphi vanishes at 0 the averaged-integral variant may tighten the upper bound",
        });
        println!("{}", serde_json::to_string_pretty(&v).unwrap());
        return;
    }
    println!("lower bound:            {:.16e}", b.lower);
    println!("upper bound (pointwise): {:.16e}", b.upper_pointwise);
    match b.upper_integral {
        Some(u) => println!("upper bound (integral):  {u:.16e}"),
        None => println!("upper bound (integral):  n/a (needs dq/dphi = 0 at 0)"),
    }
    println!("upper bound (best):      {:.16e}", b.upper());
}

pub fn print_cstar(cs: &CriticalSpeed, witness: Option<&Path>, as_json: bool) {
    if as_json {
        let v = json!({
            "c_star": cs.c_star,
            "bounds": {
                "lower": cs.bounds.lower,
                "upper_pointwise": cs.bounds.upper_pointwise,
                "upper_integral": cs.bounds.upper_integral,
            },
            "iterations": cs.iters,
            "witness_csv": witness.map(|p| p.display().to_string()),
            "citation": "below the critical speed the backward solution from 1 stays negative up to 0 with a negative limit there; at and above it the limit is 0, and the threshold is monotone in the speed",
        });
        println!("{}", serde_json::to_string_pretty(&v).unwrap());
        return;
    }
    println!("c* = {:.16e}", cs.c_star);
    println!("bracket: [{:.6e}, {:.6e}]", cs.bounds.lower, cs.bounds.upper());
    println!("bisection iterations: {}", cs.iters);
    if let Some(p) = witness {
        println!("supercritical witness shot: {}", p.display());
    }
}

pub fn print_beta(rows: &[(f64, f64, f64, f64)], as_json: bool) {
    if as_json {
        let items: Vec<_> = rows
            .iter()
            .map(|(c, b, bh, floor)| {
                json!({"c": c, "beta": b, "beta_hat": bh, "floor_f1_minus_c": floor})
            })
            .collect();
        let v = json!({
            "rows": items,
            "citation": "for each supercritical speed there are thresholds beta_hat <= beta in [f(1)-c, 0): boundary values at or below beta give solutions reaching 0, values above beta_hat give strictly negative ones, and beta >= f(1) - c always",
        });
        println!("{}", serde_json::to_string_pretty(&v).unwrap());
        return;
    }
    println!("{:>24} {:>24} {:>24} {:>24}", "c", "beta", "beta_hat", "f(1)-c");
    for (c, b, bh, floor) in rows {
        println!("{c:>24.16e} {b:>24.16e} {bh:>24.16e} {floor:>24.16e}");
    }
}

pub fn print_shot(shot: &Shot, path: Option<&Path>, as_json: bool) {
    let (lo, hi) = shot.coverage();
    if as_json {
        let v = json!({
            "c": shot.c,
            "coverage": [lo, hi],
            "nodes": shot.phi.len(),
            "terminal": terminal_json(&shot.terminal),
            "z_first": shot.z[0],
            "z_last": *shot.z.last().unwrap(),
            "z_trust_floor": shot.z_trust_floor,
            "csv": path.map(|p| p.display().to_string()),
        });
        println!("{}", serde_json::to_string_pretty(&v).unwrap());
        return;
    }
    println!("c = {:.16e}", shot.c);
    println!("coverage: [{lo:.6e}, {hi:.6e}] ({} nodes)", shot.phi.len());
    match shot.terminal {
        Terminal::ReachedEnd => println!("terminal: reached end of range"),
        Terminal::ZHitZero { phi } => println!("terminal: z hit 0 at phi = {phi:.6e}"),
        Terminal::StepUnderflow { phi } => println!("terminal: step underflow at phi = {phi:.6e}"),
    }
    println!("z at range ends: {:.16e}, {:.16e}", shot.z[0], *shot.z.last().unwrap());
    if let Some(p) = path {
        println!("csv: {}", p.display());
    }
}

pub fn print_profile(p: &FrontProfile, path: Option<&Path>, as_json: bool) {
    if as_json {
        let v = json!({
            "c": p.c,
            "normalization": p.normalization,
            "a": p.a,
            "xi0": p.xi0,
            "slope_at_a": p.slope_at_a,
            "slope_at_xi0": p.slope_at_xi0,
            "kind_at_one": kind_str(p.kind_at_one),
            "kind_at_zero": kind_str(p.kind_at_zero),
            "resolved_numerically": p.resolved_numerically,
            "samples": p.xi_grid.len(),
            "csv": path.map(|q| q.display().to_string()),
            "citation": "a front is sharp at an endpoint when the wave variable reaches it at a finite position with a nonzero or infinite one-sided slope, and classical when the approach takes infinite distance with slope tending to 0",
        });
        println!("{}", serde_json::to_string_pretty(&v).unwrap());
        return;
    }
    println!("c = {:.16e}, phi(0) = {}", p.c, p.normalization);
    println!("reaches 1 at xi = {:.16e} ({})", p.a, kind_str(p.kind_at_one));
    println!("reaches 0 at xi = {:.16e} ({})", p.xi0, kind_str(p.kind_at_zero));
    println!("slope entering 1: {:.16e}", p.slope_at_a);
    println!("slope entering 0: {:.16e}", p.slope_at_xi0);
    if p.resolved_numerically {
        println!("note: 0-endpoint class resolved by numeric tail test");
    }
    if let Some(q) = path {
        println!("csv: {}", q.display());
    }
}

pub fn print_fact_reports(reports: &[(FactReport, &'static str)], as_json: bool) {
    if as_json {
        let items: Vec<_> = reports
            .iter()
            .map(|(r, citation)| {
                json!({
                    "preset": r.preset,
                    "kind": r.kind,
                    "pass": r.pass,
                    "deviation": r.deviation,
                    "detail": r.detail,
                    "citation": citation,
                })
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&json!({"facts": items})).unwrap());
        return;
    }
    for (r, _) in reports {
        let tag = if r.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] {:<22} {:<16} dev {:.3e}  {}", r.preset, r.kind, r.deviation, r.detail);
    }
}

pub fn print_property_report(rep: &PropertyReport, as_json: bool) {
    if as_json {
        let v = json!({
            "models": rep.models,
            "checks": rep.checks,
            "violations": rep.violations,
            "threshold_agreements": rep.threshold_agreements,
            "max_threshold_gap": rep.max_threshold_gap,
        });
        println!("{}", serde_json::to_string_pretty(&v).unwrap());
        return;
    }
    println!("models: {}  checks: {}  violations: {}", rep.models, rep.checks, rep.violations.len());
    println!(
        "threshold agreements on certified members: {} (max gap {:.3e})",
        rep.threshold_agreements, rep.max_threshold_gap
    );
    for v in &rep.violations {
        println!("VIOLATION: {v}");
    }
}

pub fn print_regression(rows: &[(String, String, f64, f64, bool, String)], as_json: bool) {
    if as_json {
        let items: Vec<_> = rows
            .iter()
            .map(|(id, quantity, expected, got, pass, provenance)| {
                json!({
                    "id": id,
                    "quantity": quantity,
                    "expected": expected,
                    "got": got,
                    "pass": pass,
                    "provenance": provenance,
                })
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&json!({"baselines": items})).unwrap());
        return;
    }
    for (id, quantity, expected, got, pass, _) in rows {
        let tag = if *pass { "PASS" } else { "FAIL" };
        println!("[{tag}] {id} {quantity}: expected {expected:.16e}, got {got:.16e}");
    }
}

fn ensure_dir(dir: &Path) -> io::Result<()> {
    std::fs::create_dir_all(dir)
}

pub fn write_shot_csv(dir: &Path, name: &str, shot: &Shot) -> io::Result<PathBuf> {
    ensure_dir(dir)?;
    let path = dir.join(name);
    let mut w = csv::Writer::from_path(&path)?;
    w.write_record(["phi", "z", "dz"])?;
    for i in 0..shot.phi.len() {
        w.write_record([
            format!("{:.16e}", shot.phi[i]),
            format!("{:.16e}", shot.z[i]),
            format!("{:.16e}", shot.dz[i]),
        ])?;
    }
    w.flush()?;
    Ok(path)
}

pub fn write_profile_csv(dir: &Path, name: &str, p: &FrontProfile) -> io::Result<PathBuf> {
    ensure_dir(dir)?;
    let path = dir.join(name);
    let mut w = csv::Writer::from_path(&path)?;
    w.write_record(["xi", "phi", "dphi"])?;
    for i in 0..p.xi_grid.len() {
        w.write_record([
            format!("{:.16e}", p.xi_grid[i]),
            format!("{:.16e}", p.phi_vals[i]),
            format!("{:.16e}", p.dphi_vals[i]),
        ])?;
    }
    w.flush()?;
    Ok(path)
}
