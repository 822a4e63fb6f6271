use clap::{Args, Parser, Subcommand, ValueEnum};
use satopo::circle;
use satopo::euler;
use satopo::exact::parse::{parse_poly, parse_rat};
use satopo::exact::AlgNumber;
use satopo::harness::{self, IdentityId, Input, Ledger, Params};
use satopo::infinity;
use satopo::stratified::{gauss_bonnet, Direction, GbMode, PlaneSet};
use satopo::{BPoly, Error, Flavor, Rat};
use serde_json::{json, Value};
use num_traits::Signed;
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "satopo", version, about = "Certified topology of plane polynomial functions and semi-algebraic sets")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FlavorArg {
    Le,
    Eq,
    Ge,
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Flavor {
        match f {
            FlavorArg::Le => Flavor::Le,
            FlavorArg::Eq => Flavor::Eq,
            FlavorArg::Ge => Flavor::Ge,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Sampled,
}

/// A polynomial, or a region `{g <= 0}`, or a curve `{g = 0}`.
#[derive(Args)]
struct InputArgs {
    /// Polynomial in x and y.
    poly: Option<String>,
    #[arg(long, conflicts_with_all = ["poly", "curve"])]
    region: Option<String>,
    #[arg(long, conflicts_with_all = ["poly", "region"])]
    curve: Option<String>,
}

#[derive(Args)]
struct GbArgs {
    #[arg(long, value_enum, default_value = "exact")]
    mode: ModeArg,
    /// Number of sampled directions.
    #[arg(long, default_value_t = 64)]
    n: usize,
    /// Declared bound for sampled comparisons.
    #[arg(long, default_value = "1/100")]
    tol: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// Critical points, local degrees, indices and values.
    Critical { poly: String },
    /// Degree of the gradient at infinity.
    DegInf { poly: String },
    /// Asymptotic critical values and the three jump sets.
    Lambda {
        poly: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Euler characteristic of {f σ α}, or with compact supports.
    Chi {
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, value_enum)]
        flavor: FlavorArg,
        #[arg(long)]
        compact: bool,
    },
    /// Euler characteristic of the link at infinity of {f σ α}.
    Link {
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, value_enum)]
        flavor: FlavorArg,
    },
    /// Half-branches at infinity of {f = 0} and r_∞.
    Branches { poly: String },
    /// One identity report.
    Verify {
        #[arg(long)]
        identity: String,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        /// Direction `a/b,c/d` on the unit circle.
        #[arg(long = "v", allow_hyphen_values = true)]
        direction: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        gb: GbArgs,
    },
    /// Verify every applicable identity on every line of a corpus file.
    Corpus {
        file: String,
        /// Print one status line per report instead of the JSON ledger.
        #[arg(long)]
        brief: bool,
    },
    /// The Gauss–Bonnet measure of a region or curve.
    GaussBonnet {
        #[arg(long, conflicts_with = "curve")]
        region: Option<String>,
        #[arg(long)]
        curve: Option<String>,
        #[command(flatten)]
        gb: GbArgs,
    },
    /// SVG plot of a polynomial, region or curve.
    Plot {
        #[command(flatten)]
        input: InputArgs,
        #[arg(short = 'o', long)]
        output: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn poly(s: &str) -> Result<BPoly, Error> {
    parse_poly(s)
}

fn rat_arg(s: &str) -> Result<Rat, Error> {
    parse_rat(s)
}

fn input(a: &InputArgs) -> Result<Input, Error> {
    match (&a.poly, &a.region, &a.curve) {
        (Some(p), None, None) => Ok(Input::Poly(poly(p)?)),
        (None, Some(g), None) => Ok(Input::Set(PlaneSet::region(poly(g)?)?)),
        (None, None, Some(g)) => Ok(Input::Set(PlaneSet::curve(poly(g)?)?)),
        _ => Err(Error::Parse { col: 0, msg: "give exactly one of <poly>, --region, --curve".into() }),
    }
}

fn gb_mode(g: &GbArgs) -> Result<(GbMode, Rat), Error> {
    let mode = match g.mode {
        ModeArg::Exact => GbMode::Exact,
        ModeArg::Sampled => GbMode::Sampled(g.n),
    };
    Ok((mode, rat_arg(&g.tol)?))
}

fn direction(s: &str) -> Result<Direction, Error> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| Error::Parse { col: 0, msg: format!("direction {s:?} is not of the form a/b,c/d") })?;
    Direction::new(rat_arg(a)?, rat_arg(b)?)
}

/// Writes one line to stdout; a closed pipe is not an error.
fn emit(s: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{s}");
}

fn print(v: &Value) {
    emit(&serde_json::to_string_pretty(v).expect("json"));
}

fn run(cmd: Cmd) -> Result<u8, Error> {
    match cmd {
        Cmd::Critical { poly: p } => {
            let f = poly(&p)?;
            let pts = satopo::critical::critical_points_by_arcs(&f)?;
            let rows: Vec<Value> = pts
                .into_iter()
                .map(|mut c| {
                    let (x, y) = c.point.to_f64();
                    json!({
                        "box": c.describe(),
                        "approx": [x, y],
                        "value": c.value,
                        "deg": c.local_degree,
                        "ind": c.ind_f,
                        "ind_neg": c.ind_neg_f,
                    })
                })
                .collect();
            print(&json!({"poly": f.to_string(), "critical_points": rows}));
        }
        Cmd::DegInf { poly: p } => {
            let f = poly(&p)?;
            let d = circle::degree_at_infinity(&f)?;
            let local: i64 = satopo::critical::find_critical_points(&f)?.iter().map(|c| c.local_degree).sum();
            print(&json!({"poly": f.to_string(), "deg_inf": d, "sum_local_degrees": local}));
        }
        Cmd::Lambda { poly: p, seed } => {
            let f = poly(&p)?;
            let inf = infinity::infinity_for(&f, seed)?;
            let js = inf.jump_sets()?;
            let cands: Vec<Value> =
                js.candidates.iter().map(|(a, l)| json!({"value": a, "links": l})).collect();
            let samples: Vec<Value> = js
                .samples
                .iter()
                .map(|(a, l)| json!({"level": satopo::exact::rat::to_pq(a), "links": l}))
                .collect();
            let indep = harness::basepoint_independence(&f, &[seed, seed + 1, seed + 2])?;
            print(&json!({
                "poly": f.to_string(),
                "basepoint": [satopo::exact::rat::to_pq(&inf.a.0), satopo::exact::rat::to_pq(&inf.a.1)],
                "lambda": js.lambda,
                "lambda_le": js.le,
                "lambda_eq": js.eq,
                "lambda_ge": js.ge,
                "candidates": cands,
                "samples": samples,
                "basepoint_independent": indep,
            }));
        }
        Cmd::Chi { poly: p, alpha, flavor, compact } => {
            let f = poly(&p)?;
            let a = rat_arg(&alpha)?;
            let fl: Flavor = flavor.into();
            let v = if compact { euler::chi_c(&f, &a, fl)? } else { euler::chi(&f, &a, fl)? };
            print(&json!({
                "poly": f.to_string(),
                "alpha": satopo::exact::rat::to_pq(&a),
                "flavor": fl.symbol(),
                "compact_supports": compact,
                "chi": v,
            }));
        }
        Cmd::Link { poly: p, alpha, flavor } => {
            let f = poly(&p)?;
            let a = rat_arg(&alpha)?;
            let fl: Flavor = flavor.into();
            let v = infinity::link_chi(&f, &AlgNumber::from_rat(&a), fl)?;
            print(&json!({
                "poly": f.to_string(),
                "alpha": satopo::exact::rat::to_pq(&a),
                "flavor": fl.symbol(),
                "link_chi": v,
            }));
        }
        Cmd::Branches { poly: p } => {
            let f = poly(&p)?;
            let h = infinity::half_branches(&f)?;
            print(&json!({"poly": f.to_string(), "half_branches": h, "r_inf": h / 2}));
        }
        Cmd::Verify { identity, input: ia, alpha, direction: d, seed, gb } => {
            let id: IdentityId = identity.parse()?;
            let inp = input(&ia)?;
            let (gb_mode, tol) = gb_mode(&gb)?;
            let params = Params {
                alpha: alpha.as_deref().map(rat_arg).transpose()?,
                seed,
                direction: d.as_deref().map(direction).transpose()?,
                gb_mode,
                tol,
            };
            let r = harness::verify(id, &inp, &params);
            emit(&serde_json::to_string_pretty(&r).expect("json"));
            return Ok(Ledger::from_reports(vec![r]).exit_code() as u8);
        }
        Cmd::Corpus { file, brief } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Error::Parse { col: 0, msg: format!("{file}: {e}") })?;
            let entries = harness::parse_corpus(&text)?;
            let ledger = harness::run_corpus(&entries);
            if brief {
                for r in &ledger.reports {
                    let alpha = r.witnesses.get("alpha").and_then(Value::as_str).unwrap_or("-");
                    emit(&format!("{:<10} {:<12} alpha={:<8} {}", r.status(), r.identity, alpha, r.input));
                }
                let s = &ledger.summary;
                emit(&format!(
                    "total {} pass {} fail {} skipped {} degenerate {}",
                    s.total, s.pass, s.fail, s.skipped, s.degenerate
                ));
            } else {
                emit(&serde_json::to_string_pretty(&ledger).expect("json"));
            }
            return Ok(ledger.exit_code() as u8);
        }
        Cmd::GaussBonnet { region, curve, gb } => {
            let x = match (region, curve) {
                (Some(g), None) => PlaneSet::region(poly(&g)?)?,
                (None, Some(g)) => PlaneSet::curve(poly(&g)?)?,
                _ => return Err(Error::Parse { col: 0, msg: "give exactly one of --region, --curve".into() }),
            };
            let (mode, tol) = gb_mode(&gb)?;
            let r = gauss_bonnet(&x, mode)?;
            let diff = (&r.value - &r.rhs).abs();
            let bound = match mode {
                GbMode::Sampled(_) => tol,
                GbMode::Exact => &r.error + &r.rhs_error,
            };
            let pass = diff <= bound;
            print(&json!({
                "set": x.to_string(),
                "result": r,
                "agrees_with_rhs": pass,
            }));
            return Ok(if pass { 0 } else { 1 });
        }
        Cmd::Plot { input: ia, output, seed } => {
            let inp = input(&ia)?;
            let svg = harness::render_svg(&inp, seed);
            std::fs::write(&output, svg).map_err(|e| Error::Parse { col: 0, msg: format!("{output}: {e}") })?;
            print(&json!({"written": output}));
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(c) => ExitCode::from(c),
        Err(e) => {
            eprintln!("satopo: {e}");
            ExitCode::from(match e {
                Error::Degenerate(_) | Error::InfiniteCriticalSet(_) | Error::Parse { .. } | Error::Precondition(_) => 2,
                _ => 1,
            })
        }
    }
}
