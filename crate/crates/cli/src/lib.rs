//! Command-line front end: parses grids and weight sets, dispatches to the
//! library and prints text or JSON. Big integers are emitted as decimal
//! strings in JSON.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use gridhilbert::verify::{run_suite, suite_names, Limits, SuiteReport};
use gridhilbert::{
    be_enumeration, closure_report, hilbert_closed, hilbert_profile, hilbert_rank_oracle, linalg, ord_str,
    parse_points, standard_monomials, Error, GridPoint, IntMatrix, MonomialDownset, UniformGrid, WeightSet,
};

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// Exit status for bad arguments and library errors.
pub const EXIT_USAGE: i32 = 1;
/// Exit status when a verification suite finds a counterexample.
pub const EXIT_COUNTEREXAMPLE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "gridhilbert", version, about = "Affine Hilbert functions and closures of weight-determined sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Arities, comma separated, e.g. `3,3`.
    #[arg(long)]
    grid: String,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct Query {
    #[command(flatten)]
    common: Common,
    /// Degree bound `d`.
    #[arg(long)]
    degree: usize,
    /// Weight set, e.g. `0,2-4,7`; empty string for the empty set.
    #[arg(long)]
    set: String,
}

#[derive(Debug, Args)]
struct PointsArg {
    #[command(flatten)]
    common: Common,
    /// Points separated by `;`, e.g. `0,0;1,1`.
    #[arg(long, conflicts_with = "set")]
    points: Option<String>,
    /// Use every point of these layers instead of `--points`.
    #[arg(long)]
    set: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closed-form and rank values of `H_d(E)`.
    Hilbert {
        #[command(flatten)]
        query: Query,
        /// Also print the evaluation matrix `Ev_{[0,d],E}`.
        #[arg(long)]
        dump_matrix: bool,
    },
    /// Layer sizes of a grid.
    LayerSizes {
        #[command(flatten)]
        common: Common,
    },
    /// BE enumeration of a weight set.
    BeEnum {
        #[command(flatten)]
        query: Query,
    },
    /// The pairing sequence of the `d+1` smallest weights with `[0,d]`.
    Profile {
        #[command(flatten)]
        query: Query,
    },
    /// L-bar and Z*-closure of a weight set.
    Closure {
        #[command(flatten)]
        query: Query,
    },
    /// Lex standard monomials of a point set.
    Sm {
        #[command(flatten)]
        points: PointsArg,
    },
    /// Order-shattered set of a point set.
    Ordstr {
        #[command(flatten)]
        points: PointsArg,
    },
    /// Run a verification suite (`all` runs every suite).
    Verify {
        suite: String,
        #[arg(long, default_value_t = Limits::default().max_points)]
        max_points: usize,
        #[arg(long, default_value_t = Limits::default().seed)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

/// `--grid` and `--set` after parsing; parsed here rather than by clap so
/// that failures carry the library error name.
struct Parsed {
    grid: UniformGrid,
    degree: usize,
    set: WeightSet,
}

impl Query {
    fn parse(&self) -> Result<Parsed, Error> {
        Ok(Parsed { grid: self.common.grid()?, degree: self.degree, set: self.set.parse()? })
    }
}

impl Common {
    fn grid(&self) -> Result<UniformGrid, Error> {
        self.grid.parse()
    }
}

struct Output {
    text: String,
    json: Value,
    code: i32,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, code: EXIT_OK }
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn hilbert(q: &Query, dump: bool) -> Result<Output, Error> {
    let q = &q.parse()?;
    let g = &q.grid;
    let closed = hilbert_closed(g, q.degree, &q.set)?;
    let oracle = hilbert_rank_oracle(g, q.degree, &q.set)?;
    let profile = hilbert_profile(q.degree, &q.set).ok();
    let mut text = format!(
        "grid {g}\ndegree {}\nset {{{}}}\nclosed {closed}\noracle {oracle}\n",
        q.degree, q.set
    );
    let pairs: Option<Vec<[usize; 2]>> = profile.map(|p| p.pairs.iter().map(|&(u, v)| [u, v]).collect());
    match &pairs {
        Some(p) => {
            let cells: Vec<String> = p.iter().map(|[u, v]| format!("({u},{v})")).collect();
            text.push_str(&format!("profile {}\n", cells.join(" ")));
        }
        None => text.push_str("profile -\n"),
    }
    let mut json = json!({
        "grid": g.to_string(),
        "degree": q.degree,
        "set": q.set.members(),
        "closed": closed.to_string(),
        "oracle": oracle.to_string(),
        "profile": pairs,
    });
    if dump {
        let m: IntMatrix = linalg::eval_matrix(g, &WeightSet::interval(0, q.degree), &q.set)?;
        let dumped = m.dump();
        text.push_str("matrix\n");
        text.push_str(&dumped);
        json["matrix"] = Value::String(dumped);
    }
    Ok(Output::ok(text, json))
}

fn layer_sizes(c: &Common) -> Result<Output, Error> {
    let grid = c.grid()?;
    let sizes = grid.layer_sizes();
    let s: Vec<String> = sizes.sizes().iter().map(ToString::to_string).collect();
    Ok(Output::ok(
        format!("{}\n", s.join(",")),
        json!({ "grid": grid.to_string(), "sizes": s, "su2": grid.is_su2() }),
    ))
}

fn be_enum(q: &Query) -> Result<Output, Error> {
    let q = &q.parse()?;
    let be = be_enumeration(q.grid.max_weight(), q.degree, &q.set)?;
    let text = format!(
        "t_desc {}\nw_asc {}\nkept {{{}}}\n",
        join(&be.t_desc),
        join(&be.w_asc),
        be.kept
    );
    let json = json!({
        "grid": q.grid.to_string(),
        "degree": q.degree,
        "set": q.set.members(),
        "t_desc": be.t_desc,
        "w_asc": be.w_asc,
        "kept": be.kept.members(),
    });
    Ok(Output::ok(text, json))
}

fn profile(q: &Query) -> Result<Output, Error> {
    let q = &q.parse()?;
    q.set.check_within(q.grid.max_weight())?;
    q.grid.check_degree(q.degree)?;
    let p = hilbert_profile(q.degree, &q.set)?;
    let value = p.value(&q.grid.layer_sizes())?;
    let cells: Vec<String> = p.pairs.iter().map(|(u, v)| format!("({u},{v})")).collect();
    let pairs: Vec<[usize; 2]> = p.pairs.iter().map(|&(u, v)| [u, v]).collect();
    Ok(Output::ok(
        format!("{}\nvalue {value}\n", cells.join(" ")),
        json!({
            "grid": q.grid.to_string(),
            "degree": q.degree,
            "set": q.set.members(),
            "profile": pairs,
            "value": value.to_string(),
        }),
    ))
}

fn closure(q: &Query) -> Result<Output, Error> {
    let q = &q.parse()?;
    let g = &q.grid;
    let r = closure_report(g, q.degree, &q.set)?;
    let text = format!(
        "input {{{}}}\nlbar {{{}}}\nzstar {{{}}}\niterations {}\nsu2 {}\n",
        r.input,
        r.lbar,
        r.zstar,
        r.iterations,
        g.is_su2()
    );
    let json = json!({
        "grid": g.to_string(),
        "degree": q.degree,
        "input": r.input.members(),
        "lbar": r.lbar.members(),
        "zstar": r.zstar.members(),
        "iterations": r.iterations,
        "su2": g.is_su2(),
        "agree": r.agree(),
    });
    Ok(Output::ok(text, json))
}

fn point_set(grid: &UniformGrid, p: &PointsArg) -> Result<Vec<GridPoint>, Error> {
    match (&p.points, &p.set) {
        (_, Some(e)) => grid.unfold(&e.parse()?),
        (Some(s), None) => {
            let pts = parse_points(s)?;
            pts.iter().try_for_each(|x| grid.check_point(x))?;
            let mut sorted = pts.clone();
            sorted.sort();
            sorted.dedup();
            Ok(sorted)
        }
        (None, None) => Ok(Vec::new()),
    }
}

fn downset_output(d: MonomialDownset) -> Output {
    let pts = d.into_vec();
    let text = pts.iter().map(|p| format!("{p}\n")).collect();
    let json = Value::Array(pts.iter().map(|p| json!(p.coords())).collect());
    Output::ok(text, json)
}

fn summary(r: &SuiteReport) -> String {
    match &r.counterexample {
        None => format!("{}: passed, {} instances on {} grids\n", r.name, r.instances, r.grids),
        Some(c) => format!("{}: counterexample after {} instances: {c}\n", r.name, r.instances),
    }
}

fn report_json(r: &SuiteReport) -> Value {
    let cx = r.counterexample.as_ref().map(|c| {
        json!({
            "grid": c.grid.to_string(),
            "degree": c.degree,
            "set": c.set.as_ref().map(|e| e.members().to_vec()),
            "detail": c.detail,
        })
    });
    json!({
        "suite": r.name,
        "passed": r.passed(),
        "grids": r.grids,
        "instances": r.instances,
        "counterexample": cx,
    })
}

fn verify(suite: &str, max_points: usize, seed: u64) -> Result<Output, Error> {
    let limits = Limits { max_points, seed, ..Limits::default() };
    let names: Vec<&str> = if suite == "all" { suite_names().collect() } else { vec![suite] };
    let mut reports = Vec::new();
    for name in names {
        reports.push(run_suite(name, &limits)?);
    }
    let failed = reports.iter().any(|r| !r.passed());
    let mut text: String = reports.iter().map(summary).collect();
    for c in reports.iter().filter(|r| !r.passed()) {
        text.push_str(&serde_json::to_string(&report_json(c)["counterexample"]).expect("serializable"));
        text.push('\n');
    }
    let json = if reports.len() == 1 {
        report_json(&reports[0])
    } else {
        Value::Array(reports.iter().map(report_json).collect())
    };
    let code = if failed { EXIT_COUNTEREXAMPLE } else { EXIT_OK };
    Ok(Output { text, json, code })
}

fn dispatch(cmd: &Command) -> Result<(Output, bool), Error> {
    Ok(match cmd {
        Command::Hilbert { query, dump_matrix } => (hilbert(query, *dump_matrix)?, query.common.json),
        Command::LayerSizes { common } => (layer_sizes(common)?, common.json),
        Command::BeEnum { query } => (be_enum(query)?, query.common.json),
        Command::Profile { query } => (profile(query)?, query.common.json),
        Command::Closure { query } => (closure(query)?, query.common.json),
        Command::Sm { points } => {
            let grid = points.common.grid()?;
            let a = point_set(&grid, points)?;
            (downset_output(standard_monomials(&grid, &a)?), points.common.json)
        }
        Command::Ordstr { points } => {
            let grid = points.common.grid()?;
            let a = point_set(&grid, points)?;
            (downset_output(ord_str(&grid, &a)?), points.common.json)
        }
        Command::Verify { suite, max_points, seed, json } => (verify(suite, *max_points, *seed)?, *json),
    })
}

/// Runs the command line `args` (program name first) and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(&cli.command) {
        Ok((output, as_json)) => {
            let written = if as_json {
                writeln!(out, "{}", serde_json::to_string(&output.json).expect("serializable"))
            } else {
                write!(out, "{}", output.text)
            };
            if written.is_err() {
                return EXIT_USAGE;
            }
            output.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", e.name());
            EXIT_USAGE
        }
    }
}
