//! Command-line front end: model validation, speed bounds and the critical
//! speed, boundary-value thresholds, shots, profile reconstruction, and the
//! oracle suites, with CSV/JSON artifacts for plotting.
//!
//! Exit codes: 0 success, 2 model or assumption failure, 3 refusal because a
//! prerequisite does not exist (or the speed is inadmissible), 4 numerical
//! non-convergence.

mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fronts::model::{Model, Scenario};
use fronts::oracle::{self, RefQuantity};
use fronts::profile::{build_profile, ProfileConfig};
use fronts::singular_ode::{
    integrate_backward_from_one, integrate_forward_from_zero, s_pm, IntegratorOptions,
};
use fronts::thresholds::{beta, beta_hat, critical_speed, speed_bounds, ThresholdOptions};
use fronts::Error;

#[derive(Parser)]
#[command(name = "fronts", version, about = "traveling-wave fronts for degenerate diffusion-convection-reaction models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ModelArgs {
    /// Named preset from the registry.
    #[arg(long, conflicts_with = "model")]
    preset: Option<String>,
    /// Path to a model JSON file.
    #[arg(long)]
    model: Option<PathBuf>,
}

#[derive(Args)]
struct CommonArgs {
    /// Output directory for CSV artifacts.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Emit a JSON report to stdout.
    #[arg(long)]
    json: bool,
    /// Desingularized start offset from the corners.
    #[arg(long)]
    eps0: Option<f64>,
    /// Relative integration tolerance.
    #[arg(long)]
    rtol: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the standing assumptions and report the scenario.
    Validate {
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Closed-form lower/upper bounds for the critical speed.
    Bounds {
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Critical speed by bisection inside the closed-form bracket.
    Cstar {
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Admissible right-boundary-value thresholds at a supercritical speed.
    Beta {
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        common: CommonArgs,
        /// Wave speed.
        #[arg(long, conflicts_with = "sweep")]
        c: Option<f64>,
        /// Speed sweep lo:hi:n.
        #[arg(long)]
        sweep: Option<String>,
    },
    /// One shot of the reduced equation; CSV columns phi, z, dz.
    Zsolve {
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        c: f64,
        /// Boundary value z(1) for the backward run.
        #[arg(long, default_value_t = 0.0)]
        b: f64,
        /// Integrate forward from 0 on the slow/fast slope instead.
        #[arg(long)]
        forward: bool,
        /// Slope branch for the forward run: "minus" or "plus".
        #[arg(long, default_value = "minus")]
        branch: String,
    },
    /// Reconstruct and classify the wave profile; CSV columns xi, phi, dphi.
    Profile {
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        c: f64,
        #[arg(long, default_value_t = 0.0)]
        b: f64,
        /// Anchor value phi(0).
        #[arg(long, default_value_t = 0.5)]
        normalization: f64,
    },
    /// Ground-truth suites: analytic, properties, regression.
    Oracle {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, default_value = "analytic")]
        suite: String,
        /// Number of random corpus models for the properties suite.
        #[arg(long, default_value_t = 50)]
        corpus: usize,
        #[arg(long, default_value_t = 20240601)]
        seed: u64,
        /// Baseline file for the regression suite.
        #[arg(long)]
        baselines: Option<PathBuf>,
    },
    /// List the preset registry.
    Presets,
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::InvalidSpec(_) | Error::DomainMismatch(_) => 2,
        Error::QdotAtZeroNonexistent
        | Error::QdotAtOneNonexistent
        | Error::SpeedBelowAdmissible { .. }
        | Error::SubcriticalSpeed { .. }
        | Error::ZeroSlopeStart
        | Error::FunctionUnavailable(_) => 3,
        Error::NonConvergence { .. }
        | Error::BracketInvalid { .. }
        | Error::UnstableReference { .. } => 4,
    }
}

fn fail(err: Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(exit_code_for(&err))
}

fn fail_str(msg: String) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn resolve_model(args: &ModelArgs) -> Result<Model, ExitCode> {
    match (&args.preset, &args.model) {
        (Some(name), None) => Model::preset(name).map_err(fail),
        (None, Some(path)) => config::load_model_file(path).map_err(fail_str),
        _ => Err(fail_str("give exactly one of --preset or --model".into())),
    }
}

fn integrator_options(common: &CommonArgs) -> IntegratorOptions {
    let mut o = IntegratorOptions::default();
    if let Some(e) = common.eps0 {
        o.eps0 = e;
    }
    if let Some(r) = common.rtol {
        o.rel_tol = r;
    }
    o
}

fn parse_sweep(s: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("sweep must be lo:hi:n, got {s}"));
    }
    let lo: f64 = parts[0].parse().map_err(|_| "bad sweep lo".to_string())?;
    let hi: f64 = parts[1].parse().map_err(|_| "bad sweep hi".to_string())?;
    let n: usize = parts[2].parse().map_err(|_| "bad sweep n".to_string())?;
    if n == 0 || hi < lo {
        return Err("sweep range must be nonempty and ordered".into());
    }
    Ok((0..n)
        .map(|i| {
            if n == 1 {
                lo
            } else {
                lo + (hi - lo) * i as f64 / (n - 1) as f64
            }
        })
        .collect())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Validate { model, common } => {
            let m = match resolve_model(&model) {
                Ok(m) => m,
                Err(e) => return e,
            };
            let rep = m.validate_assumptions();
            output::print_validate(&m, &rep, common.json);
            if !rep.qdot_at_zero.exists || !rep.qdot_at_one.exists {
                return ExitCode::from(3);
            }
            match rep.scenario {
                Scenario::SemiWavefront | Scenario::Wavefront => ExitCode::SUCCESS,
                Scenario::QOnly => ExitCode::from(2),
            }
        }
        Command::Bounds { model, common } => {
            let m = match resolve_model(&model) {
                Ok(m) => m,
                Err(e) => return e,
            };
            match speed_bounds(&m) {
                Ok(b) => {
                    output::print_bounds(&b, common.json);
                    ExitCode::SUCCESS
                }
                Err(e) => fail(e),
            }
        }
        Command::Cstar { model, common } => {
            let m = match resolve_model(&model) {
                Ok(m) => m,
                Err(e) => return e,
            };
            let iopts = integrator_options(&common);
            let topts = ThresholdOptions::default();
            match critical_speed(&m, &iopts, &topts) {
                Ok(cs) => {
                    let witness = common.out.as_deref().and_then(|dir| {
                        let shot =
                            integrate_backward_from_one(&m, cs.c_star + 1.0, 0.0, &iopts)
                                .ok()?;
                        output::write_shot_csv(dir, "cstar_witness.csv", &shot).ok()
                    });
                    output::print_cstar(&cs, witness.as_deref(), common.json);
                    ExitCode::SUCCESS
                }
                Err(e) => fail(e),
            }
        }
        Command::Beta {
            model,
            common,
            c,
            sweep,
        } => {
            let m = match resolve_model(&model) {
                Ok(m) => m,
                Err(e) => return e,
            };
            let iopts = integrator_options(&common);
            let topts = ThresholdOptions::default();
            let speeds = match (c, sweep) {
                (Some(c), None) => vec![c],
                (None, Some(s)) => match parse_sweep(&s) {
                    Ok(v) => v,
                    Err(msg) => return fail_str(msg),
                },
                _ => return fail_str("give exactly one of --c or --sweep".into()),
            };
            let mut rows = Vec::new();
            for c in speeds {
                let b = match beta(&m, c, &iopts, &topts) {
                    Ok(b) => b,
                    Err(e) => return fail(e),
                };
                let bh = match beta_hat(&m, c, &iopts, &topts) {
                    Ok(b) => b,
                    Err(e) => return fail(e),
                };
                let floor = m.f(1.0).unwrap_or(0.0) - c;
                rows.push((c, b, bh, floor));
            }
            output::print_beta(&rows, common.json);
            ExitCode::SUCCESS
        }
        Command::Zsolve {
            model,
            common,
            c,
            b,
            forward,
            branch,
        } => {
            let m = match resolve_model(&model) {
                Ok(m) => m,
                Err(e) => return e,
            };
            let iopts = integrator_options(&common);
            let shot = if forward {
                let slope = match s_pm(&m, c) {
                    Ok((sm, sp)) => match branch.as_str() {
                        "minus" => sm,
                        "plus" => sp,
                        other => return fail_str(format!("unknown branch {other}")),
                    },
                    Err(e) => return fail(e),
                };
                integrate_forward_from_zero(&m, c, slope, &iopts)
            } else {
                integrate_backward_from_one(&m, c, b, &iopts)
            };
            match shot {
                Ok(shot) => {
                    let path = common.out.as_deref().and_then(|dir| {
                        output::write_shot_csv(dir, "zsolve.csv", &shot).ok()
                    });
                    output::print_shot(&shot, path.as_deref(), common.json);
                    ExitCode::SUCCESS
                }
                Err(e) => fail(e),
            }
        }
        Command::Profile {
            model,
            common,
            c,
            b,
            normalization,
        } => {
            let m = match resolve_model(&model) {
                Ok(m) => m,
                Err(e) => return e,
            };
            let iopts = integrator_options(&common);
            let topts = ThresholdOptions::default();
            let shot = match integrate_backward_from_one(&m, c, b, &iopts) {
                Ok(s) => s,
                Err(e) => return fail(e),
            };
            // thresholds feeding the classification tree; unavailable ones
            // fall back to the numeric tail test inside build_profile
            let cs = critical_speed(&m, &iopts, &topts).ok().map(|r| r.c_star);
            let bh = cs.and_then(|cs| {
                if c > cs {
                    beta_hat(&m, c, &iopts, &topts).ok()
                } else {
                    None
                }
            });
            let cfg = ProfileConfig {
                normalization,
                ..ProfileConfig::default()
            };
            match build_profile(&m, &shot, b, cs, bh, &cfg) {
                Ok(p) => {
                    let path = common.out.as_deref().and_then(|dir| {
                        output::write_profile_csv(dir, "profile.csv", &p).ok()
                    });
                    output::print_profile(&p, path.as_deref(), common.json);
                    ExitCode::SUCCESS
                }
                Err(e) => fail(e),
            }
        }
        Command::Oracle {
            common,
            suite,
            corpus,
            seed,
            baselines,
        } => {
            let iopts = integrator_options(&common);
            match suite.as_str() {
                "analytic" => {
                    let mut all_pass = true;
                    let mut reports = Vec::new();
                    for fact in oracle::facts() {
                        match oracle::verify_fact(&fact, &iopts) {
                            Ok(rep) => {
                                all_pass &= rep.pass;
                                reports.push((rep, fact.citation()));
                            }
                            Err(e) => return fail(e),
                        }
                    }
                    output::print_fact_reports(&reports, common.json);
                    if all_pass {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                "properties" => {
                    let models = oracle::corpus(corpus, seed);
                    let rep = oracle::property_suite(&models, &iopts);
                    output::print_property_report(&rep, common.json);
                    if rep.ok() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                "regression" => {
                    let path = baselines.unwrap_or_else(|| {
                        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("baselines.json")
                    });
                    match run_regression(&path, common.json) {
                        Ok(true) => ExitCode::SUCCESS,
                        Ok(false) => ExitCode::from(1),
                        Err(e) => e,
                    }
                }
                other => fail_str(format!("unknown suite {other}")),
            }
        }
        Command::Presets => {
            for name in Model::preset_names() {
                println!("{name}");
            }
            ExitCode::SUCCESS
        }
    }
}

#[derive(serde::Deserialize)]
struct Baseline {
    id: String,
    quantity: String,
    #[serde(default)]
    c: Option<f64>,
    value: f64,
    tolerance: f64,
    provenance: String,
}

fn run_regression(path: &std::path::Path, json: bool) -> Result<bool, ExitCode> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| fail_str(format!("{}: {e}", path.display())))?;
    let baselines: Vec<Baseline> =
        serde_json::from_str(&text).map_err(|e| fail_str(format!("{e}")))?;
    let mut rows = Vec::new();
    let mut ok = true;
    for b in &baselines {
        let model = Model::preset(&b.id).map_err(fail)?;
        let quantity = match (b.quantity.as_str(), b.c) {
            ("c_star", _) => RefQuantity::CStar,
            ("beta", Some(c)) => RefQuantity::Beta { c },
            ("beta_hat", Some(c)) => RefQuantity::BetaHat { c },
            _ => return Err(fail_str(format!("bad baseline entry {}", b.id))),
        };
        let got = oracle::reference_bisection(&model, quantity).map_err(fail)?;
        let pass = (got - b.value).abs() <= b.tolerance;
        ok &= pass;
        rows.push((b.id.clone(), b.quantity.clone(), b.value, got, pass, b.provenance.clone()));
    }
    output::print_regression(&rows, json);
    Ok(ok)
}
