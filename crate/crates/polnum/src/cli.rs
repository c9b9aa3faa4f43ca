//! Command-line driver. Every verb is a thin wrapper over the library;
//! no computation happens here.
//!
//! Exit codes: 0 success, 1 invalid input or domain error, 2 internal
//! invariant violation (always a bug). With `--json` the output is a
//! single object `{"command", "input", "result", "checks"}` whose key
//! order is stable, and rationals cross the boundary as "p/q" strings.

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bounds;
use crate::checks::{self, Suite};
use crate::crf::{
    ev_complex_relation, fm_transform, ideal_duality, model_structure_sheaf, tensor_semihom,
    EvDirection, FmBranch, RankFunction, Side,
};
use crate::error::{Error, Result};
use crate::numeric::{format_rat, parse_extended, parse_rat, Rat};
use crate::polarization::PolarizationType;
use crate::semihom::SemihomClass;
use crate::thresholds::{cross_nu, dual_beta, s_from_beta};

#[derive(Parser)]
#[command(name = "polnum", version, about = "Exact invariants of polarized abelian varieties")]
struct Cli {
    /// Machine-readable output
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dual polarization type and the chi product identity
    Dual {
        /// Polarization type, e.g. "1,2,4"
        #[arg(long = "type")]
        ty: String,
    },
    /// Invariants of the semihomogeneous class of a given slope
    Invariants {
        #[arg(long = "type")]
        ty: String,
        /// Slope a/b of the class
        #[arg(long)]
        slope: String,
    },
    /// Maximize the base-point-freeness lower bound over bounded-denominator slopes
    Bound {
        #[arg(long = "type")]
        ty: String,
        /// Largest slope denominator to consider
        #[arg(long = "max-den")]
        max_den: u64,
        /// Known beta^0 of the dual side: widens the admissible domain
        #[arg(long = "beta0-dual")]
        beta0_dual: Option<String>,
    },
    /// Threshold conversions: beta to s, dual exchange, cross-scale
    Convert {
        /// Threshold value "p/q" or "+inf"
        #[arg(long)]
        beta: String,
        /// Scale the thresholds refer to
        #[arg(long)]
        nu: String,
        #[arg(long = "type")]
        ty: String,
        #[arg(long, value_enum, default_value_t = ConvertTarget::S)]
        to: ConvertTarget,
        /// Target scale for --to cross
        #[arg(long)]
        mu: Option<String>,
        /// Which threshold the input is: 0 or 1
        #[arg(long, default_value_t = 0)]
        index: u8,
    },
    /// Evaluate a rank-function model, optionally through a transform
    Eval {
        #[arg(long, value_enum)]
        model: Model,
        #[arg(long = "type")]
        ty: String,
        /// Slope of the semihomogeneous twist (and the scale for ev-rel)
        #[arg(long)]
        slope: Option<String>,
        /// Evaluation point
        #[arg(long)]
        at: String,
        /// Cohomological degree of the model being built
        #[arg(long, default_value_t = 0)]
        degree: u32,
        #[arg(long, value_enum)]
        transform: Option<Transform>,
    },
    /// Run the randomized property suites
    Check {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConvertTarget {
    /// s = beta / (nu - beta)
    S,
    /// beta of the dual polarization, with the index flipped
    Dual,
    /// the same beta expressed as an s-threshold at scale mu
    Cross,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Model {
    /// Rank functions of the structure sheaf
    Structure,
    /// Structure sheaf twisted by the semihomogeneous class of --slope
    Semihom,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Transform {
    /// Fourier-Mukai branch on negative arguments
    FmNeg,
    /// Fourier-Mukai branch on positive arguments
    FmPos,
    /// Ideal-sheaf duality (input degree 1-i gives output degree i)
    IdealDual,
    /// Evaluation-complex change of variable at scale --slope
    EvRel,
}

/// Parses and runs one invocation; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // help/version are successes, usage mistakes are input errors
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let json = cli.json;
    match dispatch(cli.command) {
        Ok(output) => {
            if json {
                println!("{}", output.json);
            } else {
                for line in &output.text {
                    println!("{line}");
                }
            }
            if output.failed {
                1
            } else {
                0
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Internal(_) => 2,
                _ => 1,
            }
        }
    }
}

struct Output {
    text: Vec<String>,
    json: Value,
    failed: bool,
}

impl Output {
    fn ok(command: &str, input: Value, result: Value, checks: Value, text: Vec<String>) -> Output {
        Output {
            text,
            json: json!({
                "command": command,
                "input": input,
                "result": result,
                "checks": checks,
            }),
            failed: false,
        }
    }
}

fn dispatch(command: Command) -> Result<Output> {
    match command {
        Command::Dual { ty } => cmd_dual(&ty),
        Command::Invariants { ty, slope } => cmd_invariants(&ty, &slope),
        Command::Bound {
            ty,
            max_den,
            beta0_dual,
        } => cmd_bound(&ty, max_den, beta0_dual.as_deref()),
        Command::Convert {
            beta,
            nu,
            ty,
            to,
            mu,
            index,
        } => cmd_convert(&beta, &nu, &ty, to, mu.as_deref(), index),
        Command::Eval {
            model,
            ty,
            slope,
            at,
            degree,
            transform,
        } => cmd_eval(model, &ty, slope.as_deref(), &at, degree, transform),
        Command::Check { suite, seed, cases } => cmd_check(&suite, seed, cases),
    }
}

fn positive_rat(s: &str, what: &str) -> Result<Rat> {
    let r = parse_rat(s)?;
    if !num::Signed::is_positive(&r) {
        return Err(Error::Invalid(format!("{what} must be positive, got {s}")));
    }
    Ok(r)
}

fn cmd_dual(ty: &str) -> Result<Output> {
    let t = PolarizationType::parse(ty)?;
    let d = t.dual();
    let chi = t.chi();
    let chi_dual = d.chi();
    let expected = t.d1dg().pow(t.g());
    let product_ok = &chi * &chi_dual == expected;
    if !product_ok {
        return Err(Error::Internal(format!(
            "chi product identity failed for type {t}"
        )));
    }
    let text = vec![
        format!("type: {t}"),
        format!("dual: {d}"),
        format!("chi: {chi}"),
        format!("chi-dual: {chi_dual}"),
        format!("chi-product: {} = (d1 d_g)^g", &chi * &chi_dual),
    ];
    Ok(Output::ok(
        "dual",
        json!({ "type": t.to_string() }),
        json!({
            "dual": d.to_string(),
            "chi": chi.to_string(),
            "chi_dual": chi_dual.to_string(),
            "chi_product": (&chi * &chi_dual).to_string(),
        }),
        json!([{ "name": "chi-product", "passed": product_ok }]),
        text,
    ))
}

fn class_json(c: &SemihomClass) -> Value {
    json!({
        "type": c.base().to_string(),
        "slope": format_rat(c.slope()),
        "u": c.u().to_string(),
        "rank": c.rank().to_string(),
        "euler": c.euler().to_string(),
        "det_multiple": format_rat(&c.det_multiple()),
        "det_integral": c.det_integral(),
    })
}

fn cmd_invariants(ty: &str, slope: &str) -> Result<Output> {
    let t = PolarizationType::parse(ty)?;
    let slope = parse_rat(slope)?;
    let c = SemihomClass::new(&t, &slope)?;
    let image = c.fm_image()?;
    let text = vec![
        format!("type: {t}"),
        format!("slope: {}", format_rat(c.slope())),
        format!("u: {}", c.u()),
        format!("rank: {}", c.rank()),
        format!("euler: {}", c.euler()),
        format!("det-multiple: {}", format_rat(&c.det_multiple())),
        format!("det-integral: {}", c.det_integral()),
        format!(
            "fm-image: type {}, slope {}, rank {}, euler {}",
            image.base(),
            format_rat(image.slope()),
            image.rank(),
            image.euler()
        ),
    ];
    Ok(Output::ok(
        "invariants",
        json!({ "type": t.to_string(), "slope": format_rat(&slope) }),
        json!({
            "class": class_json(&c),
            "fm_image": class_json(&image),
        }),
        json!([{ "name": "fm-exchange", "passed": true }]),
        text,
    ))
}

fn cmd_bound(ty: &str, max_den: u64, beta0_dual: Option<&str>) -> Result<Output> {
    let t = PolarizationType::parse(ty)?;
    let beta0 = beta0_dual
        .map(|s| positive_rat(s, "beta0-dual"))
        .transpose()?;
    let input = json!({
        "type": t.to_string(),
        "max_den": max_den,
        "beta0_dual": beta0.as_ref().map(format_rat),
    });
    match bounds::maximize(&t, max_den, beta0.as_ref())? {
        Some(r) => {
            let text = vec![
                format!("type: {t}"),
                format!("best-nu: {}", format_rat(&r.best_nu)),
                format!("bound: {}", format_rat(&r.bound)),
                format!("candidates-tested: {}", r.candidates_tested),
                format!(
                    "pruned-at: {}",
                    r.pruned_at
                        .as_ref()
                        .map(format_rat)
                        .unwrap_or_else(|| "none".into())
                ),
                format!(
                    "milestones: ge_half={} ge_one={}",
                    r.milestones.ge_half, r.milestones.ge_one
                ),
            ];
            Ok(Output::ok(
                "bound",
                input,
                json!({
                    "best_nu": format_rat(&r.best_nu),
                    "bound": format_rat(&r.bound),
                    "candidates_tested": r.candidates_tested,
                    "pruned_at": r.pruned_at.as_ref().map(format_rat),
                    "milestones": { "ge_half": r.milestones.ge_half, "ge_one": r.milestones.ge_one },
                }),
                json!([]),
                text,
            ))
        }
        None => Ok(Output::ok(
            "bound",
            input,
            json!({ "no_candidate": true }),
            json!([]),
            vec![format!(
                "no admissible candidate with denominator <= {max_den}"
            )],
        )),
    }
}

fn cmd_convert(
    beta: &str,
    nu: &str,
    ty: &str,
    to: ConvertTarget,
    mu: Option<&str>,
    index: u8,
) -> Result<Output> {
    if index > 1 {
        return Err(Error::Invalid("threshold index must be 0 or 1".into()));
    }
    let t = PolarizationType::parse(ty)?;
    let beta = parse_extended(beta)?;
    let nu = positive_rat(nu, "nu")?;
    let input = json!({
        "beta": beta.to_string(),
        "nu": format_rat(&nu),
        "type": t.to_string(),
        "index": index,
    });
    match to {
        ConvertTarget::S => {
            let s = s_from_beta(&beta, &nu)?;
            let exact = !s.is_infinite();
            let key = format!("s{index}");
            let text = vec![format!("{key}: {s}"), format!("exact: {exact}")];
            Ok(Output::ok(
                "convert",
                input,
                json!({ key: s.to_string(), "nu": format_rat(&nu), "exact": exact }),
                json!([]),
                text,
            ))
        }
        ConvertTarget::Dual => {
            let b = beta.finite().ok_or_else(|| {
                Error::Invalid("dual exchange needs a finite beta".into())
            })?;
            let (value, new_index) = dual_beta(b, index, &t)?;
            let key = format!("beta{new_index}");
            let text = vec![
                format!("dual-type: {}", t.dual()),
                format!("{key}: {}", format_rat(&value)),
            ];
            Ok(Output::ok(
                "convert",
                input,
                json!({ key: format_rat(&value), "nu": format_rat(&nu), "exact": true }),
                json!([]),
                text,
            ))
        }
        ConvertTarget::Cross => {
            let mu = positive_rat(
                mu.ok_or_else(|| Error::Invalid("--to cross needs --mu".into()))?,
                "mu",
            )?;
            let s = s_from_beta(&beta, &nu)?;
            let crossed = match s.finite() {
                Some(s) => cross_nu(s, &nu, &mu)?,
                None => s_from_beta(&beta, &mu)?,
            };
            let exact = !crossed.is_infinite();
            let key = format!("s{index}");
            let text = vec![
                format!("{key} at nu={}: {s}", format_rat(&nu)),
                format!("{key} at mu={}: {crossed}", format_rat(&mu)),
                format!("exact: {exact}"),
            ];
            Ok(Output::ok(
                "convert",
                input,
                json!({ key: crossed.to_string(), "nu": format_rat(&mu), "exact": exact }),
                json!([]),
                text,
            ))
        }
    }
}

fn model_family(t: &PolarizationType, side: Side, degree: u32) -> Result<RankFunction> {
    let g = t.g();
    if degree > g {
        return Err(Error::Invalid(format!(
            "degree {degree} exceeds g = {g} of type {t}"
        )));
    }
    let mut family = model_structure_sheaf(t, side);
    Ok(family.swap_remove(degree as usize))
}

fn cmd_eval(
    model: Model,
    ty: &str,
    slope: Option<&str>,
    at: &str,
    degree: u32,
    transform: Option<Transform>,
) -> Result<Output> {
    let t = PolarizationType::parse(ty)?;
    let at = parse_rat(at)?;
    let slope = slope.map(parse_rat).transpose()?;
    let need_slope = || {
        slope
            .clone()
            .ok_or_else(|| Error::Invalid("this model/transform needs --slope".into()))
    };

    // dual-side transforms consume a model on the dual type
    let (build_t, side) = match transform {
        Some(Transform::FmNeg) | Some(Transform::FmPos) | Some(Transform::IdealDual) => {
            (t.dual(), Side::Dual)
        }
        _ => (t.clone(), Side::Primal),
    };
    let mut f = model_family(&build_t, side, degree)?;
    if model == Model::Semihom {
        let class = SemihomClass::new(&build_t, &need_slope()?)?;
        f = tensor_semihom(&f, &class)?;
    }
    let f = match transform {
        None => f,
        Some(Transform::FmNeg) => fm_transform(&f, &t, FmBranch::Neg)?,
        Some(Transform::FmPos) => fm_transform(&f, &t, FmBranch::Pos)?,
        Some(Transform::IdealDual) => {
            if degree > 1 {
                return Err(Error::Invalid(
                    "ideal-sheaf duality needs an input degree of 0 or 1".into(),
                ));
            }
            ideal_duality(&f, &t, 1 - degree)?
        }
        Some(Transform::EvRel) => {
            let nu = need_slope()?;
            ev_complex_relation(&f, &nu, &t, EvDirection::Forward)?
        }
    };
    let value = f.eval(&at)?;
    let side_name = match f.side() {
        Side::Primal => "primal",
        Side::Dual => "dual",
    };
    let text = vec![
        format!("value: {}", format_rat(&value)),
        format!("degree: {}", f.degree()),
        format!("side: {side_name}"),
    ];
    Ok(Output::ok(
        "eval",
        json!({
            "type": t.to_string(),
            "slope": slope.as_ref().map(format_rat),
            "at": format_rat(&at),
            "degree": degree,
        }),
        json!({
            "value": format_rat(&value),
            "degree": f.degree(),
            "side": side_name,
        }),
        json!([]),
        text,
    ))
}

fn cmd_check(suite: &str, seed: u64, cases: u64) -> Result<Output> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![Suite::parse(suite)
            .ok_or_else(|| Error::Invalid(format!("unknown suite {suite:?}")))?]
    };
    let mut text = Vec::new();
    let mut entries = Vec::new();
    let mut failed = false;
    for s in suites {
        let report = checks::run_suite(s, seed, cases);
        let passed = report.passed();
        failed |= !passed;
        text.push(format!(
            "suite {}: {} cases, {} checks, {}",
            report.name,
            report.cases,
            report.checks,
            if passed { "pass" } else { "FAIL" }
        ));
        for failure in report.failures.iter().take(5) {
            text.push(format!("  {failure}"));
        }
        entries.push(json!({
            "suite": report.name,
            "cases": report.cases,
            "checks": report.checks,
            "failures": report.failures.len(),
            "passed": passed,
        }));
    }
    let mut output = Output::ok(
        "check",
        json!({ "suite": suite, "seed": seed, "cases": cases }),
        json!({ "passed": !failed }),
        Value::Array(entries),
        text,
    );
    output.failed = failed;
    Ok(output)
}
