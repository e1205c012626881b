use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use semideco::abstract_elements;
use semideco::adapters::digraph;
use semideco::dot;
use semideco::io::{DigraphJson, MeshJson, SemiDecompositionJson, SimplicialJson};
use semideco::morse;
use semideco::reeb::weak;
use semideco::report::{AnalyzeReport, DigraphReport, ReebReport, SimplicialReport};
use semideco::suite::{self, SuiteConfig};

#[derive(Parser)]
#[command(name = "semideco", version, about = "Semi-decompositions of finite spaces and their Morse hyper-graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a semi-decomposition of a finite space.
    Analyze(InputArgs),
    /// Compare the weak element space of a simplicial complex with its face poset.
    Simplicial(InputArgs),
    /// Orbit space of a directed graph against the cycle-collapse oracle.
    Digraph(InputArgs),
    /// Sublevel weak elements of a PL function on a surface against its Reeb graph.
    Reeb(InputArgs),
    /// Run the randomized property suite.
    Suite(SuiteArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Args)]
struct InputArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 500)]
    count: u64,
    #[arg(long, default_value_t = 8)]
    max_points: usize,
    /// Write the summary here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Directory for replayable counterexample files.
    #[arg(long)]
    counterexamples: Option<PathBuf>,
}

/// Exit 2: the input could not be read or is not a valid instance.
struct InputError(String);

impl From<semideco::Error> for InputError {
    fn from(e: semideco::Error) -> Self {
        InputError(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), InputError> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| InputError(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

/// Returns whether every asserted property held.
fn run(command: Command) -> Result<bool, InputError> {
    match command {
        Command::Analyze(a) => {
            let parsed = SemiDecompositionJson::parse(&read(&a.input)?)?;
            let f = parsed.build()?;
            let report = AnalyzeReport::new(&f, parsed.counterexample.as_ref());
            let text = match a.format {
                Format::Json => json(&report),
                Format::Dot => match morse::morse_hypergraph(&f) {
                    Ok(m) => dot::morse_dot(f.space(), &m),
                    Err(_) => dot::quotient_dot("abstract_elements", &abstract_elements::abstract_element_space(&f)),
                },
            };
            emit(a.out.as_deref(), &text)?;
            Ok(report.asserted_failures.is_empty())
        }
        Command::Simplicial(a) => {
            let k = SimplicialJson::parse(&read(&a.input)?)?.build()?;
            let report = SimplicialReport::new(&k);
            let text = match a.format {
                Format::Json => json(&report),
                Format::Dot => {
                    let weak = semideco::adapters::simplicial::to_instance(&k).weak_elements();
                    dot::quotient_dot("weak_elements", &weak.space)
                }
            };
            emit(a.out.as_deref(), &text)?;
            Ok(report.holds)
        }
        Command::Digraph(a) => {
            let g = DigraphJson::parse(&read(&a.input)?)?.build()?;
            let text = match a.format {
                Format::Json => json(&DigraphReport::new(&g)),
                Format::Dot => dot::orbit_dot(&g, &digraph::orbit_space(&g)),
            };
            emit(a.out.as_deref(), &text)?;
            Ok(true)
        }
        Command::Reeb(a) => {
            let s = MeshJson::parse(&read(&a.input)?)?.build()?;
            let report = ReebReport::new(&s)?;
            let text = match a.format {
                Format::Json => json(&report),
                Format::Dot => {
                    let w = weak::weak_element_space(&s)?;
                    let reeb = &report.comparison.reeb;
                    let reeb_labels: Vec<String> =
                        reeb.nodes.iter().map(|&v| format!("{} (f={})", s.id(v), s.value(v))).collect();
                    let mut text = String::from("graph reeb {\n");
                    text += &dot::multigraph_cluster("r", "Reeb graph", &reeb.graph, &reeb_labels);
                    if let Some(g) = w.as_multigraph() {
                        let space = w.model.instance.semidec.space();
                        let labels: Vec<String> = w
                            .partition
                            .classes
                            .iter()
                            .filter(|c| !c.iter().any(|i| w.model.strata[i].is_interval()))
                            .map(|c| space.names(c).join(","))
                            .collect();
                        text += &dot::multigraph_cluster("w", "weak element space", &g, &labels);
                    }
                    text + "}\n"
                }
            };
            emit(a.out.as_deref(), &text)?;
            Ok(true)
        }
        Command::Suite(a) => {
            let config = SuiteConfig { seed: a.seed, count: a.count, max_points: a.max_points };
            let (summary, outcomes) = suite::run_suite(&config);
            if let Some(dir) = &a.counterexamples {
                suite::persist_counterexamples(dir, config.seed, &outcomes)
                    .map_err(|e| InputError(format!("{}: {e}", dir.display())))?;
            }
            emit(a.out.as_deref(), &json(&summary))?;
            Ok(summary.passed())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
