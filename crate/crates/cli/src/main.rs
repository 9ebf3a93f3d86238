use std::io::{self, Read, Write};
use std::path::Path;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use oddind::bounds::{bound_report, Values};
use oddind::generators::FamilySpec;
use oddind::io::Format;
use oddind::oddind::{alpha, alpha_od, alpha_square, is_independent, is_odd_independent, odd_profile, Budget, SolveResult};
use oddind::soc::{chi_so_exact, is_proper, is_strong_odd_coloring, Coloring, ColoringResult};
use oddind::suite::{self, CriterionReport, SuiteOptions};
use oddind::Graph;

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_TIMEOUT: u8 = 3;

#[derive(Parser)]
#[command(name = "oddind", version, about = "Odd independent sets and strong odd colourings")]
struct Cli {
    /// Per-solve time budget in seconds.
    #[arg(long, global = true, env = "ODDIND_BUDGET_SECS", default_value_t = 60, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    /// Graph format for `gen` output and for reading files without a known extension.
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Single worker and no timings, so output is byte-identical across runs.
    #[arg(long, global = true)]
    deterministic: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Graph6,
    Dimacs,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Graph6 => Format::Graph6,
            FormatArg::Dimacs => Format::Dimacs,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Quantity {
    AlphaOd,
    ChiSo,
    Alpha,
    AlphaSq,
}

#[derive(Subcommand)]
enum Command {
    /// Print a named graph, e.g. `gen kneser 5 2`.
    Gen {
        #[arg(required = true, num_args = 1..)]
        family: Vec<String>,
    },
    /// Compute a parameter of every input graph.
    Compute {
        quantity: Quantity,
        /// `-` for stdin, a file, or a quoted family such as "hypercube 4".
        graph: String,
    },
    /// Check a vertex set.
    VerifySet {
        graph: String,
        #[arg(num_args = 0..)]
        ids: Vec<usize>,
    },
    /// Check a colouring given as one colour per vertex.
    VerifyColoring {
        graph: String,
        #[arg(required = true, num_args = 1..)]
        colors: Vec<usize>,
    },
    /// Evaluate every applicable bound.
    Bounds { graph: String },
    /// Run the reproduction suite.
    PaperSuite {
        /// Run a single criterion (1-12).
        #[arg(long)]
        section: Option<usize>,
        /// Also run the stretch items; they never affect the exit code.
        #[arg(long)]
        stretch: bool,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Out = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.deterministic {
        oddind::par::set_sequential(true);
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: &Cli) -> Out {
    let budget = Budget(Some(Duration::from_secs(cli.budget)));
    match &cli.command {
        Command::Gen { family } => {
            let tokens: Vec<&str> = family.iter().flat_map(|s| s.split_whitespace()).collect();
            let g = FamilySpec::parse(&tokens)?.build()?;
            let format = cli.format.map_or(Format::Graph6, Format::from);
            print!("{}", format.write(&g));
            Ok(0)
        }
        Command::Compute { quantity, graph } => {
            let mut code = 0;
            for g in read_graphs(graph, cli.format)? {
                let exact = match quantity {
                    Quantity::ChiSo => {
                        let mut r = chi_so_exact(&g, budget);
                        if cli.deterministic {
                            r.millis = 0;
                        }
                        emit_coloring(cli, &r)?;
                        r.exact
                    }
                    q => {
                        let mut r = match q {
                            Quantity::AlphaOd => alpha_od(&g, budget),
                            Quantity::Alpha => alpha(&g, budget),
                            _ => alpha_square(&g, budget),
                        };
                        if cli.deterministic {
                            r.millis = 0;
                        }
                        emit_solve(cli, &r)?;
                        r.exact
                    }
                };
                if !exact {
                    code = EXIT_TIMEOUT;
                }
            }
            Ok(code)
        }
        Command::VerifySet { graph, ids } => {
            let g = single_graph(graph, cli.format)?;
            let s = g.set_of(ids.iter().copied())?;
            let verdict = SetVerdict {
                size: s.len(),
                independent: is_independent(&g, &s),
                odd_independent: is_odd_independent(&g, &s),
                profile: odd_profile(&g, &s),
            };
            if cli.json {
                println!("{}", serde_json::to_string(&verdict)?);
            } else {
                println!("size: {}", verdict.size);
                println!("independent: {}", verdict.independent);
                println!("odd-independent: {}", verdict.odd_independent);
                let profile: Vec<String> = verdict.profile.iter().map(ToString::to_string).collect();
                println!("profile: {}", profile.join(" "));
            }
            Ok(if verdict.odd_independent { 0 } else { EXIT_VERIFY })
        }
        Command::VerifyColoring { graph, colors } => {
            let g = single_graph(graph, cli.format)?;
            if colors.len() != g.n() {
                return Err(Failure::Usage(format!("expected {} colours, got {}", g.n(), colors.len())));
            }
            let c = Coloring::normalized(colors);
            let verdict = ColoringVerdict { colors: c.k(), proper: is_proper(&g, &c), strong_odd: is_strong_odd_coloring(&g, &c) };
            if cli.json {
                println!("{}", serde_json::to_string(&verdict)?);
            } else {
                println!("colours: {}", verdict.colors);
                println!("proper: {}", verdict.proper);
                println!("strong-odd: {}", verdict.strong_odd);
            }
            Ok(if verdict.strong_odd { 0 } else { EXIT_VERIFY })
        }
        Command::Bounds { graph } => {
            let mut code = 0;
            for (i, g) in read_graphs(graph, cli.format)?.iter().enumerate() {
                let values = Values::compute(g, budget);
                let id = if cli.json { format!("{graph}#{i}") } else { graph.clone() };
                let report = bound_report(g, &values, &id);
                if cli.json {
                    println!("{}", serde_json::to_string(&report.entries)?);
                } else {
                    println!("{id} #{i}: alpha_od {} chi_so {} alpha {} alpha(G^2) {} chi(G^2) {}", values.alpha_od, values.chi_so, values.alpha, values.alpha_sq, values.chi_sq);
                    let rows: Vec<[String; 5]> = report
                        .entries
                        .iter()
                        .map(|e| [e.name.clone(), e.lhs.to_string(), e.relation.to_string(), e.rhs.to_string(), mark(e.satisfied).into()])
                        .collect();
                    print_table(&["bound", "lhs", "rel", "rhs", "ok"], &rows);
                    for (name, why) in &report.omitted {
                        println!("  omitted {name}: {why}");
                    }
                }
                if !report.all_satisfied() {
                    code = EXIT_VERIFY;
                }
            }
            Ok(code)
        }
        Command::PaperSuite { section, stretch } => {
            let opts = SuiteOptions { budget, deterministic: cli.deterministic };
            let mut reports = match section {
                Some(id) => vec![suite::run_criterion(*id, &opts)
                    .ok_or_else(|| Failure::Usage(format!("no criterion {id}; choose 1-{}", suite::CRITERIA.len())))?],
                None => suite::run_all(&opts),
            };
            if *stretch {
                reports.extend((1..=suite::STRETCH.len()).filter_map(|i| suite::run_stretch(i, &opts)));
            }
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&reports)?);
            } else {
                for r in &reports {
                    print_criterion(r);
                }
            }
            let failed = reports.iter().any(|r| !r.stretch && !r.passed);
            Ok(if failed { EXIT_VERIFY } else { 0 })
        }
    }
}

#[derive(Serialize)]
struct SetVerdict {
    size: usize,
    independent: bool,
    odd_independent: bool,
    profile: Vec<usize>,
}

#[derive(Serialize)]
struct ColoringVerdict {
    colors: usize,
    proper: bool,
    strong_odd: bool,
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "yes"
    } else {
        "NO"
    }
}

fn read_graphs(source: &str, format: Option<FormatArg>) -> Result<Vec<Graph>, Failure> {
    let text = if source == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else if Path::new(source).is_file() {
        let path = Path::new(source);
        let text = std::fs::read_to_string(path)?;
        let format = format.map(Format::from).or_else(|| Format::from_path(path)).unwrap_or_else(|| Format::sniff(&text));
        return Ok(format.parse(&text)?);
    } else {
        let tokens: Vec<&str> = source.split_whitespace().collect();
        return Ok(vec![FamilySpec::parse(&tokens)?.build()?]);
    };
    let format = format.map_or_else(|| Format::sniff(&text), Format::from);
    let graphs = format.parse(&text)?;
    if graphs.is_empty() {
        return Err(Failure::Usage("no graph on stdin".into()));
    }
    Ok(graphs)
}

fn single_graph(source: &str, format: Option<FormatArg>) -> Result<Graph, Failure> {
    let mut graphs = read_graphs(source, format)?;
    match graphs.len() {
        1 => Ok(graphs.remove(0)),
        0 => Err(Failure::Usage("no graph given".into())),
        k => Err(Failure::Usage(format!("expected one graph, got {k}"))),
    }
}

fn emit_solve(cli: &Cli, r: &SolveResult) -> Result<(), Failure> {
    if cli.json {
        println!("{}", serde_json::to_string(r)?);
    } else {
        let state = if r.exact { "exact".to_string() } else { format!("interval [{}, {}]", r.lower, r.upper) };
        println!("value: {} ({state}, {})", r.value, r.method);
        println!("witness: {:?}", r.witness.to_vec());
        if !cli.deterministic {
            println!("nodes: {} time: {} ms", r.nodes, r.millis);
        }
    }
    io::stdout().flush()?;
    Ok(())
}

fn emit_coloring(cli: &Cli, r: &ColoringResult) -> Result<(), Failure> {
    if cli.json {
        println!("{}", serde_json::to_string(r)?);
    } else {
        let state = if r.exact { "exact".to_string() } else { format!("interval [{}, {}]", r.lower, r.upper) };
        println!("value: {} ({state})", r.chi);
        println!("coloring: {:?}", r.coloring.colors());
        if !cli.deterministic {
            println!("nodes: {} time: {} ms", r.nodes, r.millis);
        }
    }
    io::stdout().flush()?;
    Ok(())
}

fn print_table<const N: usize>(header: &[&str; N], rows: &[[String; N]]) {
    let mut width = header.map(str::len);
    for row in rows {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&width).map(|(c, w)| format!("{c:<w$}")).collect();
        println!("  {}", padded.join("  ").trim_end());
    };
    line(header.to_vec());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
}

fn print_criterion(r: &CriterionReport) {
    let status = match (r.passed, r.stretch) {
        (true, _) => "PASS",
        (false, false) => "FAIL",
        (false, true) => "OPEN",
    };
    let time = r.millis.map_or(String::new(), |m| format!(" ({m} ms)"));
    println!("[{status}] {} {}{time}", r.id, r.title);
    let rows: Vec<[String; 4]> = r
        .checks
        .iter()
        .map(|c| [c.label.clone(), c.expected.clone(), c.computed.clone(), mark(c.ok).into()])
        .collect();
    print_table(&["check", "expected", "computed", "ok"], &rows);
    for n in &r.notes {
        println!("  note: {n}");
    }
}
