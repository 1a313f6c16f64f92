//! Command-line front end: `algconn <subcommand> ...`.
//!
//! [`run`] does all the work against caller-supplied streams so it can be
//! driven from tests; `main` only wires it to the process.

mod input;
mod output;

use std::io::{Read, Write};

use algconn::enumeration::{all_connected_graphs, all_trees, GraphStream};
use algconn::families::{
    balanced_broom, complete, cycle, double_broom, extremal_tree, path, star, BroomParams,
};
use algconn::spectral::{classify_tree, fiedler_vector};
use algconn::verification::{
    bound_cover, bound_matching, kirkland_bound, verify, Target, VerificationReport, VerifyParams,
};
use algconn::{encode_graph6, invariant_summary, Graph};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub use input::{read_graphs, InputFormat};
pub use output::round_floats;

/// Exit status for a verification target that did not pass.
pub const EXIT_FAILED: i32 = 1;
/// Exit status for usage, parse and parameter errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "algconn", version, about = "Algebraic connectivity, matchings and extremal trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Algebraic connectivity and a Fiedler vector.
    Alpha {
        #[command(flatten)]
        input: InputArgs,
        #[arg(short, long, value_enum, default_value_t = OutputFormat::Json)]
        output: OutputFormat,
    },
    /// n, m, alpha, beta, gamma and diameter.
    Invariants {
        #[command(flatten)]
        input: InputArgs,
        #[arg(short, long, value_enum, default_value_t = OutputFormat::Json)]
        output: OutputFormat,
    },
    /// Type I / Type II classification of a tree.
    Classify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(short, long, value_enum, default_value_t = OutputFormat::Json)]
        output: OutputFormat,
    },
    /// Build a named graph.
    Construct {
        #[command(subcommand)]
        family: Family,
        #[arg(short, long, value_enum, default_value_t = OutputFormat::Graph6, global = true)]
        output: OutputFormat,
    },
    /// List non-isomorphic trees or connected graphs of order n.
    Enumerate {
        #[arg(value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "gamma")]
        beta: Option<usize>,
        #[arg(long)]
        gamma: Option<usize>,
        #[arg(short, long, value_enum, default_value_t = OutputFormat::Graph6)]
        output: OutputFormat,
    },
    /// Run a verification target and print its report.
    Verify {
        #[arg(value_parser = parse_target)]
        target: Target,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        /// Worker threads; falls back to SPECTRAL_JOBS, then to all cores.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(short, long, value_enum, default_value_t = OutputFormat::Json)]
        output: OutputFormat,
    },
    /// Closed-form lower bounds for order n and matching number beta.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        beta: usize,
    },
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Input file, or `-` for standard input.
    #[arg(value_name = "INPUT", conflicts_with = "input")]
    path: Option<String>,
    #[arg(short, long, value_name = "PATH")]
    input: Option<String>,
    /// Input format; guessed from the first line when omitted.
    #[arg(long, value_enum)]
    format: Option<InputFormat>,
}

impl InputArgs {
    fn source(&self) -> &str {
        self.input.as_deref().or(self.path.as_deref()).unwrap_or("-")
    }
}

#[derive(Subcommand, Debug)]
enum Family {
    /// Double broom T(k,l,d): path on d vertices, k and l pendant leaves at its ends.
    Broom {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        d: usize,
    },
    /// T_{2beta-1} of order n.
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        beta: usize,
    },
    /// Balanced broom T_d of order n.
    Balanced {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    Path {
        #[arg(long)]
        n: usize,
    },
    /// Star S_{1,m}.
    Star {
        #[arg(long)]
        m: usize,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
    Complete {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Trees,
    Graphs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Graph6,
    Dot,
    Edgelist,
}

fn parse_target(s: &str) -> std::result::Result<Target, String> {
    s.parse::<Target>().map_err(|e| {
        let names: Vec<_> = Target::ALL.iter().map(|t| t.name()).collect();
        format!("{e}; expected one of {}", names.join(", "))
    })
}

/// Command failure: message for stderr plus exit status.
struct Failure {
    code: i32,
    message: String,
}

impl From<algconn::Error> for Failure {
    fn from(e: algconn::Error) -> Self {
        Failure { code: EXIT_USAGE, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: EXIT_USAGE, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `argv` (including the program name), executes the command and
/// returns the exit status. Structured output goes to `out`, diagnostics to
/// `err`.
pub fn run<I, S>(argv: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(cli.command, stdin, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Alpha { input, output } => alpha(&input, output, stdin, out),
        Command::Invariants { input, output } => invariants(&input, output, stdin, out),
        Command::Classify { input, output } => classify(&input, output, stdin, out),
        Command::Construct { family, output } => construct(family, output, out),
        Command::Enumerate { kind, n, beta, gamma, output } => enumerate(kind, n, beta, gamma, output, out),
        Command::Verify { target, n, d, seed, count, jobs, output } => {
            let params = VerifyParams { n, d, seed, count };
            verify_cmd(target, &params, jobs, output, out)
        }
        Command::Bounds { n, beta } => bounds(n, beta, out),
    }
}

fn load(input: &InputArgs, stdin: &mut dyn Read) -> std::result::Result<Vec<Graph>, Failure> {
    let text = match input.source() {
        "-" => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            s
        }
        path => std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))?,
    };
    let graphs = read_graphs(&text, input.format)?;
    if graphs.is_empty() {
        return Err(usage("no graph in input"));
    }
    Ok(graphs)
}

fn unsupported(cmd: &str, output: OutputFormat) -> Failure {
    let name = output.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    usage(format!("`{cmd}` does not support --output {name}"))
}

fn write_json(out: &mut dyn Write, value: Value) -> std::io::Result<()> {
    writeln!(out, "{}", round_floats(value))
}

fn alpha(input: &InputArgs, output: OutputFormat, stdin: &mut dyn Read, out: &mut dyn Write) -> CmdResult {
    if !matches!(output, OutputFormat::Json | OutputFormat::Csv) {
        return Err(unsupported("alpha", output));
    }
    let graphs = load(input, stdin)?;
    if output == OutputFormat::Csv {
        writeln!(out, "n,alpha,multiplicity,vector")?;
    }
    for g in &graphs {
        let f = fiedler_vector(g)?;
        match output {
            OutputFormat::Csv => {
                let vector: Vec<_> = f.vector.iter().map(|&x| output::fmt_float(x)).collect();
                writeln!(out, "{},{},{},{}", g.order(), output::fmt_float(f.alpha), f.multiplicity, vector.join(";"))?;
            }
            _ => write_json(out, json!(f))?,
        }
    }
    Ok(0)
}

fn invariants(input: &InputArgs, output: OutputFormat, stdin: &mut dyn Read, out: &mut dyn Write) -> CmdResult {
    if !matches!(output, OutputFormat::Json | OutputFormat::Csv) {
        return Err(unsupported("invariants", output));
    }
    let graphs = load(input, stdin)?;
    if output == OutputFormat::Csv {
        writeln!(out, "n,m,alpha,beta,gamma,diameter,connected")?;
    }
    for g in &graphs {
        let s = invariant_summary(g)?;
        match output {
            OutputFormat::Csv => {
                let opt = |v: Option<usize>| v.map(|v| v.to_string()).unwrap_or_default();
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    s.n,
                    s.m,
                    output::fmt_float(s.alpha),
                    s.beta,
                    opt(s.gamma),
                    opt(s.diameter),
                    s.connected
                )?;
            }
            _ => write_json(out, json!(s))?,
        }
    }
    Ok(0)
}

fn classify(input: &InputArgs, output: OutputFormat, stdin: &mut dyn Read, out: &mut dyn Write) -> CmdResult {
    if !matches!(output, OutputFormat::Json | OutputFormat::Dot) {
        return Err(unsupported("classify", output));
    }
    for g in &load(input, stdin)? {
        let class = classify_tree(g)?;
        match output {
            OutputFormat::Dot => {
                let f = fiedler_vector(g)?;
                out.write_all(output::dot(g, Some(&f.vector), Some(&class)).as_bytes())?;
            }
            _ => write_json(out, json!(class))?,
        }
    }
    Ok(0)
}

fn build(family: Family) -> algconn::Result<Graph> {
    match family {
        Family::Broom { k, l, d } => double_broom(BroomParams::new(k, l, d)),
        Family::Extremal { n, beta } => extremal_tree(n, beta),
        Family::Balanced { n, d } => balanced_broom(n, d),
        Family::Path { n } => Ok(path(n)),
        Family::Star { m } => Ok(star(m)),
        Family::Cycle { n } => cycle(n),
        Family::Complete { n } => Ok(complete(n)),
    }
}

fn construct(family: Family, output: OutputFormat, out: &mut dyn Write) -> CmdResult {
    let g = build(family)?;
    match output {
        OutputFormat::Graph6 => writeln!(out, "{}", encode_graph6(&g)?)?,
        OutputFormat::Edgelist => out.write_all(g.to_edge_list().as_bytes())?,
        OutputFormat::Json => write_json(
            out,
            json!({ "graph6": encode_graph6(&g)?, "n": g.order(), "edges": g.edges() }),
        )?,
        OutputFormat::Dot => {
            let vector = if g.order() >= 2 && g.is_connected() { Some(fiedler_vector(&g)?.vector) } else { None };
            let class = if g.is_tree() && g.order() >= 2 { Some(classify_tree(&g)?) } else { None };
            out.write_all(output::dot(&g, vector.as_deref(), class.as_ref()).as_bytes())?;
        }
        OutputFormat::Csv => return Err(unsupported("construct", output)),
    }
    Ok(0)
}

fn enumerate(
    kind: KindArg,
    n: usize,
    beta: Option<usize>,
    gamma: Option<usize>,
    output: OutputFormat,
    out: &mut dyn Write,
) -> CmdResult {
    if !matches!(output, OutputFormat::Graph6 | OutputFormat::Json) {
        return Err(unsupported("enumerate", output));
    }
    let mut stream: GraphStream = match kind {
        KindArg::Trees => all_trees(n)?,
        KindArg::Graphs => all_connected_graphs(n)?,
    };
    if let Some(beta) = beta {
        stream = stream.with_matching(beta);
    }
    if let Some(gamma) = gamma {
        stream = stream.with_cover(gamma);
    }
    let codes = stream.map(|g| encode_graph6(&g)).collect::<algconn::Result<Vec<_>>>()?;
    match output {
        OutputFormat::Json => write_json(out, json!(codes))?,
        _ => {
            for code in codes {
                writeln!(out, "{code}")?;
            }
        }
    }
    Ok(0)
}

/// `--jobs`, else `SPECTRAL_JOBS`, else all cores.
fn resolve_jobs(jobs: Option<usize>) -> std::result::Result<usize, Failure> {
    let jobs = match jobs {
        Some(j) => j,
        None => match std::env::var("SPECTRAL_JOBS") {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| usage(format!("SPECTRAL_JOBS must be a positive integer, got `{v}`")))?,
            Err(_) => std::thread::available_parallelism().map_or(1, |n| n.get()),
        },
    };
    if jobs == 0 {
        return Err(usage("--jobs must be at least 1"));
    }
    Ok(jobs)
}

fn verify_cmd(
    target: Target,
    params: &VerifyParams,
    jobs: Option<usize>,
    output: OutputFormat,
    out: &mut dyn Write,
) -> CmdResult {
    if !matches!(output, OutputFormat::Json | OutputFormat::Csv) {
        return Err(unsupported("verify", output));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(resolve_jobs(jobs)?)
        .build()
        .map_err(|e| usage(e.to_string()))?;
    let report = pool.install(|| verify(target, params))?;
    match output {
        OutputFormat::Csv => {
            writeln!(out, "{}", VerificationReport::CSV_HEADER)?;
            writeln!(out, "{}", report.csv_row())?;
        }
        _ => write_json(out, json!(report))?,
    }
    Ok(if report.passed { 0 } else { EXIT_FAILED })
}

fn bounds(n: usize, beta: usize, out: &mut dyn Write) -> CmdResult {
    let bm = bound_matching(n, beta)?;
    let gamma = n - beta;
    let bc = bound_cover(n, gamma)?;
    let p = BroomParams::balanced(n, 2 * beta - 1)?;
    let kirkland = kirkland_bound(p.k, p.l, p.d)
        .ok()
        .map(|b| json!({ "k": p.k, "l": p.l, "d": p.d, "bound": b }));
    let extremal = extremal_tree(n, beta)?;
    let alpha = algconn::spectral::algebraic_connectivity(&extremal)?;
    write_json(
        out,
        json!({
            "n": n,
            "beta": beta,
            "gamma": gamma,
            "bound_matching": bm,
            "bound_cover": bc,
            "kirkland": kirkland,
            "extremal": { "graph6": encode_graph6(&extremal)?, "alpha": alpha },
        }),
    )?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("algconn").chain(args.iter().copied());
        let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn unknown_flag_is_usage_error() {
        let (code, out, err) = run_str(&["alpha", "--bogus"], "");
        assert_eq!(code, EXIT_USAGE);
        assert!(out.is_empty());
        assert!(err.contains("--bogus"));
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_str(&["--help"], "");
        assert_eq!(code, 0);
        assert!(out.contains("verify"));
    }

    #[test]
    fn unknown_target_lists_choices() {
        let (code, _, err) = run_str(&["verify", "thm99"], "");
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("thm31"));
    }

    #[test]
    fn infeasible_construction_is_reported() {
        let (code, out, err) = run_str(&["construct", "extremal", "--n", "5", "--beta", "3"], "");
        assert_eq!(code, EXIT_USAGE);
        assert!(out.is_empty());
        assert!(err.starts_with("error:"));
    }

    #[test]
    fn zero_jobs_rejected() {
        let (code, _, _) = run_str(&["verify", "thm32", "--n", "3", "--jobs", "0"], "");
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn bounds_star_case_has_no_kirkland_value() {
        let (code, out, _) = run_str(&["bounds", "--n", "6", "--beta", "1"], "");
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["kirkland"], Value::Null);
        assert_eq!(v["gamma"], 5);
    }
}
