//! The `disting` command line: exact D and D', constructive labelings,
//! closed-form values, graph generation and bound surveys.
//!
//! Exit codes: 0 on success, 1 when a survey finds a violation or no
//! labeling is found, 2 on invalid input or arguments.

use std::fs::File;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use disting::constructive::{
    label_min_degree_two_with, label_two_minimally_with, label_windmill_with, Constructed, Method,
};
use disting::distinguishing::{default_index_cap, EdgeSearch, VertexSearch};
use disting::families::{enumerate_connected_with, generate, Blades, EnumerateOptions, FamilySpec};
use disting::formulas::{known_dprime, kpq_dprime_with, windmill_d, windmill_dprime};
use disting::survey::{
    certify_bound, conjecture_scan, population, write_jsonl, SurveyBound, SurveyOptions,
    SurveyOutcome,
};
use disting::{
    automorphisms, is_distinguishing_edge, parse_graph6, to_graph6, Budget, Error, Graph,
};

#[derive(Parser, Debug)]
#[command(
    name = "disting",
    version,
    about = "Distinguishing numbers and indices of graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact distinguishing index D' of each input graph.
    Index(SearchArgs),
    /// Exact distinguishing number D of each input graph.
    Number(SearchArgs),
    /// A distinguishing edge labeling, printed as JSON.
    Label(LabelArgs),
    /// Closed-form values.
    Formula(FormulaArgs),
    /// Generate graphs.
    Gen(GenArgs),
    /// Certify an upper bound on D' over a graph population.
    Survey(SurveyArgs),
}

#[derive(Args, Debug)]
struct Input {
    /// Read graph6 lines from this file instead of stdin.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SearchArgs {
    /// Largest label count to try (default Δ + 1 for D', n for D).
    #[arg(long)]
    max_labels: Option<u32>,
    /// Print one JSON object per graph.
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    input: Input,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum LabelMethod {
    Exact,
    Layered,
    Windmill,
    TwoMinimally,
}

#[derive(Args, Debug)]
struct LabelArgs {
    #[arg(long, value_enum, default_value = "exact")]
    method: LabelMethod,
    /// Blade count, for `--method windmill`.
    #[arg(long)]
    n: Option<usize>,
    /// Blade length, for `--method windmill`.
    #[arg(long)]
    k: Option<usize>,
    #[command(flatten)]
    input: Input,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FormulaFamily {
    WindmillD,
    WindmillDprime,
    Kpq,
    Known,
}

#[derive(Args, Debug)]
struct FormulaArgs {
    #[arg(long, value_enum)]
    family: FormulaFamily,
    /// The generated family to look up, for `--family known`.
    #[arg(long = "of", value_enum)]
    of: Option<GenFamily>,
    #[command(flatten)]
    params: FamilyParams,
    #[arg(long)]
    json: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum GenFamily {
    Path,
    Cycle,
    Complete,
    Kpq,
    Windmill,
    Wind,
    /// Every connected graph on `--n` vertices.
    Connected,
}

#[derive(Args, Debug, Default)]
struct FamilyParams {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    /// Blade groups for `wind`, e.g. `2x3,1x4`.
    #[arg(long, value_delimiter = ',')]
    blades: Vec<String>,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: GenFamily,
    #[command(flatten)]
    params: FamilyParams,
    /// Minimum degree filter for `connected`.
    #[arg(long, default_value_t = 0)]
    min_degree: usize,
    /// One graph per isomorphism class for `connected`.
    #[arg(long)]
    dedup: bool,
    /// Print graph6 instead of edge lists.
    #[arg(long)]
    graph6: bool,
}

#[derive(Args, Debug)]
struct SurveyArgs {
    /// Survey every connected graph up to this order.
    #[arg(long)]
    order_max: Option<usize>,
    #[arg(long, default_value_t = 0)]
    min_degree: usize,
    /// Bound to certify: delta-minus-one, sqrt-plus-one, sqrt,
    /// hamiltonian-two, kpq-corollary, conjecture-plus-one,
    /// conjecture-minimally, or conjecture for both conjecture parts.
    #[arg(long)]
    bound: String,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Write JSON lines to PATH, or to stdout when PATH is omitted or `-`.
    #[arg(long, num_args = 0..=1, default_missing_value = "-")]
    json: Option<String>,
    /// Stop after the first violation.
    #[arg(long)]
    fail_fast: bool,
    /// Enumerate one graph per isomorphism class.
    #[arg(long)]
    dedup: bool,
    #[command(flatten)]
    input: Input,
}

/// A failed invocation: exit code and message for stderr.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn not_found(message: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Exhausted { .. } | Error::BoundWitnessNotFound { .. } | Error::Defect(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::usage(format!("i/o error: {e}"))
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = Budget::from_env()
        .map_err(Failure::from)
        .and_then(|budget| dispatch(cli.command, &budget, stdin, stdout));
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(
    command: Command,
    budget: &Budget,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
) -> Outcome {
    match command {
        Command::Index(a) => index(&a, budget, stdin, out),
        Command::Number(a) => number(&a, budget, stdin, out),
        Command::Label(a) => label(&a, budget, stdin, out),
        Command::Formula(a) => formula(&a, budget, out),
        Command::Gen(a) => gen(&a, budget, out),
        Command::Survey(a) => survey(&a, budget, stdin, out),
    }
}

/// Graphs from graph6 lines, skipping blank lines and `#` comments.
pub fn read_graphs(reader: impl BufRead) -> std::result::Result<Vec<Graph>, String> {
    let mut graphs = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| format!("line {}: {e}", i + 1))?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        graphs.push(parse_graph6(text).map_err(|e| format!("line {}: {e}", i + 1))?);
    }
    Ok(graphs)
}

fn load(input: &Input, stdin: &mut dyn Read) -> std::result::Result<Vec<Graph>, Failure> {
    let graphs = match &input.file {
        Some(path) => {
            let file =
                File::open(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            read_graphs(BufReader::new(file))
        }
        None => read_graphs(BufReader::new(stdin)),
    };
    graphs.map_err(Failure::usage)
}

fn undefined(g: &Graph) -> Failure {
    let name = if g.order() == 2 && g.size() == 1 {
        "K_2".to_string()
    } else {
        to_graph6(g)
    };
    Failure::usage(format!(
        "D' undefined for {name}: its edges do not determine its automorphisms"
    ))
}

fn index(a: &SearchArgs, budget: &Budget, stdin: &mut dyn Read, out: &mut dyn Write) -> Outcome {
    for g in load(&a.input, stdin)? {
        let search = EdgeSearch::new(&g, budget)?;
        let cap = a.max_labels.unwrap_or_else(|| default_index_cap(&g));
        let found = match search.index(cap) {
            Err(Error::NotFaithful) => return Err(undefined(&g)),
            other => other?,
        };
        if a.json {
            let record = found.witness.to_record(&g, Method::Exact.tag());
            writeln!(
                out,
                "{}",
                json!({"graph": to_graph6(&g), "d_prime": found.value, "witness": record})
            )?;
        } else {
            writeln!(out, "{}\t{}", to_graph6(&g), found.value)?;
        }
    }
    Ok(0)
}

fn number(a: &SearchArgs, budget: &Budget, stdin: &mut dyn Read, out: &mut dyn Write) -> Outcome {
    for g in load(&a.input, stdin)? {
        let search = VertexSearch::new(&g, budget)?;
        let cap = a.max_labels.unwrap_or(g.order().max(1) as u32);
        let found = search.number(cap)?;
        if a.json {
            writeln!(
                out,
                "{}",
                json!({"graph": to_graph6(&g), "d": found.value, "labels": found.witness.labels()})
            )?;
        } else {
            writeln!(out, "{}\t{}", to_graph6(&g), found.value)?;
        }
    }
    Ok(0)
}

fn label(a: &LabelArgs, budget: &Budget, stdin: &mut dyn Read, out: &mut dyn Write) -> Outcome {
    if a.method == LabelMethod::Windmill {
        let (Some(n), Some(k)) = (a.n, a.k) else {
            return Err(Failure::usage("--method windmill needs --n and --k"));
        };
        let g = generate(&FamilySpec::Windmill { n, k })?;
        let built = label_windmill_with(n, k, budget)?;
        return print_labeling(&g, &built, out);
    }
    for g in load(&a.input, stdin)? {
        let built = match a.method {
            LabelMethod::Exact => {
                let search = EdgeSearch::new(&g, budget)?;
                let found = match search.index(default_index_cap(&g)) {
                    Err(Error::NotFaithful) => return Err(undefined(&g)),
                    other => other?,
                };
                Constructed {
                    labeling: found.witness,
                    method: Method::Exact,
                }
            }
            LabelMethod::Layered => label_min_degree_two_with(&g, budget)?,
            LabelMethod::TwoMinimally => label_two_minimally_with(&g, budget)?,
            LabelMethod::Windmill => unreachable!(),
        };
        // Constructions verify internally; check once more against a freshly
        // enumerated group before anything is printed.
        let group = automorphisms(&g)?;
        if !is_distinguishing_edge(&g, &built.labeling, &group) {
            return Err(Failure::not_found(format!(
                "defect: {} labeling of {} failed verification",
                built.method,
                to_graph6(&g)
            )));
        }
        print_labeling(&g, &built, out)?;
    }
    Ok(0)
}

fn print_labeling(g: &Graph, built: &Constructed, out: &mut dyn Write) -> Outcome {
    let record = built.to_record(g);
    writeln!(
        out,
        "{}",
        json!({"graph": to_graph6(g), "labeling": record})
    )?;
    Ok(0)
}

fn need(value: Option<usize>, flag: &str) -> std::result::Result<usize, Failure> {
    value.ok_or_else(|| Failure::usage(format!("missing --{flag}")))
}

fn family_spec(family: GenFamily, p: &FamilyParams) -> std::result::Result<FamilySpec, Failure> {
    let spec = match family {
        GenFamily::Path => FamilySpec::Path { n: need(p.n, "n")? },
        GenFamily::Cycle => FamilySpec::Cycle { n: need(p.n, "n")? },
        GenFamily::Complete => FamilySpec::Complete { n: need(p.n, "n")? },
        GenFamily::Kpq => FamilySpec::CompleteBipartite {
            p: need(p.p, "p")?,
            q: need(p.q, "q")?,
        },
        GenFamily::Windmill => FamilySpec::Windmill {
            n: need(p.n, "n")?,
            k: need(p.k, "k")?,
        },
        GenFamily::Wind => {
            if p.blades.is_empty() {
                return Err(Failure::usage("missing --blades"));
            }
            let blades = p
                .blades
                .iter()
                .map(|b| b.parse::<Blades>())
                .collect::<disting::Result<Vec<_>>>()?;
            FamilySpec::Wind { blades }
        }
        GenFamily::Connected => {
            return Err(Failure::usage("connected is an enumeration, not a family"))
        }
    };
    spec.validate()?;
    Ok(spec)
}

fn formula(a: &FormulaArgs, budget: &Budget, out: &mut dyn Write) -> Outcome {
    let p = &a.params;
    let (value, detail) = match a.family {
        FormulaFamily::WindmillD | FormulaFamily::WindmillDprime => {
            let (n, k) = (need(p.n, "n")? as u64, need(p.k, "k")? as u64);
            let v = if a.family == FormulaFamily::WindmillD {
                windmill_d(n, k)?
            } else {
                windmill_dprime(n, k)?
            };
            (Some(v), json!({"n": n, "k": k}))
        }
        FormulaFamily::Kpq => {
            let (x, y) = (need(p.p, "p")? as u64, need(p.q, "q")? as u64);
            let v = kpq_dprime_with(x.min(y), x.max(y), budget)?;
            (v.value, serde_json::to_value(v).expect("serializable"))
        }
        FormulaFamily::Known => {
            let family =
                a.of.ok_or_else(|| Failure::usage("--family known needs --of FAMILY"))?;
            let spec = family_spec(family, p)?;
            (known_dprime(&spec), json!({"family": spec.to_string()}))
        }
    };
    if a.json {
        writeln!(out, "{}", json!({"value": value, "detail": detail}))?;
    } else {
        match value {
            Some(v) => writeln!(out, "{v}")?,
            None => writeln!(out, "unknown")?,
        }
    }
    Ok(0)
}

fn write_graph(g: &Graph, graph6: bool, out: &mut dyn Write) -> std::io::Result<()> {
    if graph6 {
        return writeln!(out, "{}", to_graph6(g));
    }
    writeln!(out, "n={} m={}", g.order(), g.size())?;
    for e in g.edges() {
        writeln!(out, "{e}")?;
    }
    Ok(())
}

fn gen(a: &GenArgs, budget: &Budget, out: &mut dyn Write) -> Outcome {
    if a.family == GenFamily::Connected {
        let n = need(a.params.n, "n")?;
        let options = EnumerateOptions { dedup: a.dedup };
        for g in enumerate_connected_with(n, a.min_degree, options, budget)? {
            write_graph(&g, a.graph6, out)?;
        }
        return Ok(0);
    }
    let g = generate(&family_spec(a.family, &a.params)?)?;
    write_graph(&g, a.graph6, out)?;
    Ok(0)
}

fn survey(a: &SurveyArgs, budget: &Budget, stdin: &mut dyn Read, out: &mut dyn Write) -> Outcome {
    let bounds: Vec<SurveyBound> = if a.bound == "conjecture" {
        vec![
            SurveyBound::ConjecturePlusOne,
            SurveyBound::ConjectureMinimally,
        ]
    } else {
        vec![a.bound.parse::<SurveyBound>()?]
    };
    let options = SurveyOptions {
        jobs: a.jobs,
        fail_fast: a.fail_fast,
        budget: *budget,
    };
    let outcomes: Vec<SurveyOutcome> = match (a.order_max, &a.input.file) {
        (Some(_), Some(_)) => return Err(Failure::usage("use either --order-max or --file")),
        (Some(n_max), None) if a.bound == "conjecture" => {
            conjecture_scan(n_max, a.min_degree, &options)?.into()
        }
        (Some(n_max), None) => {
            let graphs = population(n_max, a.min_degree, a.dedup, budget)?;
            vec![certify_bound(&graphs, bounds[0], &options)?]
        }
        (None, _) => {
            let graphs: Vec<Graph> = load(&a.input, stdin)?
                .into_iter()
                .filter(|g| g.min_degree() >= a.min_degree)
                .collect();
            bounds
                .iter()
                .map(|&b| certify_bound(&graphs, b, &options))
                .collect::<disting::Result<_>>()?
        }
    };
    let mut sink: Option<Box<dyn Write>> = match a.json.as_deref() {
        Some("-") | None => None,
        Some(path) => Some(Box::new(
            File::create(path).map_err(|e| Failure::usage(format!("{path}: {e}")))?,
        )),
    };
    for o in &outcomes {
        let summary = json!({"summary": o.summary, "bound_kind": o.bound.tag(), "stopped_early": o.stopped_early});
        match (&a.json, sink.as_mut()) {
            (Some(_), Some(file)) => {
                write_jsonl(&o.reports, file)?;
                writeln!(file, "{summary}")?;
                writeln!(out, "{summary}")?;
            }
            (Some(_), None) => {
                write_jsonl(&o.reports, out)?;
                writeln!(out, "{summary}")?;
            }
            (None, _) => {
                let s = o.summary;
                writeln!(
                    out,
                    "{}: total {} held {} violated {} filtered {} budget errors {}",
                    o.bound.tag(),
                    s.total,
                    s.held,
                    s.violated,
                    s.filtered,
                    s.budget_errors
                )?;
                for r in o.violations() {
                    writeln!(
                        out,
                        "violation: {} D'={} bound={}",
                        r.graph,
                        r.d_prime.unwrap(),
                        r.bound
                    )?;
                }
            }
        }
    }
    let violated = outcomes.iter().any(|o| o.summary.violated > 0);
    Ok(if violated { 1 } else { 0 })
}
