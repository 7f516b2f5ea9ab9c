//! Command-line front end.
//!
//! Exit codes: 0 when every checked property holds, 1 when one of the
//! structural relations fails (never expected), 2 for input errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::{dimension_report, AlgebraError};
use crate::bits::BitSet;
use crate::covers::DEFAULT_MAX_VERTICES;
use crate::exec::Exec;
use crate::graph::parse_graph_document;
use crate::lattice::{
    graph_from_lattice, hasse, is_full, parse_lattice, random_sublattice, rank, CoverLattice,
    LatticeError,
};
use crate::pipeline::{analyze, GraphAnalysis};
use crate::sweep::{verify_exhaustive, verify_random, SweepConfig, SweepResult};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "coverlat",
    version,
    about = "Cover lattices of unmixed bipartite graphs"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Vertex cap for minimal cover enumeration.
    #[arg(long, default_value_t = DEFAULT_MAX_VERTICES, global = true)]
    pub max_vertices: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report bipartiteness, unmixedness, cover count and Cohen-Macaulayness.
    Check { graph: PathBuf },
    /// List the minimal vertex covers.
    Covers { graph: PathBuf },
    /// Print the cover lattice of an unmixed bipartite graph.
    Lattice {
        graph: PathBuf,
        /// Write the Hasse diagram as Graphviz DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Dimension report for an unmixed bipartite graph.
    Dim {
        graph: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Build the unique unmixed bipartite graph of a lattice file.
    FromLattice {
        lattice: PathBuf,
        /// Write the graph here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Verify all relations over all lattices on [n] or over random ones.
    Verify {
        /// Lattice size; exhaustive unless --random is given (then defaults to 5).
        #[arg(long)]
        n: Option<usize>,
        /// Random sweep: COUNT instances from SEED.
        #[arg(long, num_args = 2, value_names = ["COUNT", "SEED"])]
        random: Option<Vec<u64>>,
        /// Largest degree used by the growth oracle.
        #[arg(long, default_value_t = 10)]
        max_degree: usize,
        /// Disable the worker pool.
        #[arg(long)]
        sequential: bool,
    },
    /// Generate a random lattice (or its graph with --graph).
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        generators: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit the labelled graph instead of the lattice.
        #[arg(long)]
        graph: bool,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Failure {
        Failure {
            code: EXIT_INPUT,
            message: message.to_string(),
        }
    }

    fn violation(message: impl ToString) -> Failure {
        Failure {
            code: EXIT_VIOLATION,
            message: message.to_string(),
        }
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::input(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, s: &str) -> Result<(), Failure> {
    out.write_all(s.as_bytes())
        .map_err(|e| Failure::input(format!("write: {e}")))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn one_based(s: BitSet) -> Vec<usize> {
    s.iter().map(|i| i + 1).collect()
}

fn load_analysis(path: &Path, cap: usize) -> Result<GraphAnalysis, Failure> {
    let g = parse_graph_document(&read_input(path)?).map_err(Failure::input)?;
    analyze(&g, cap).map_err(Failure::input)
}

fn require_unmixed(a: &GraphAnalysis) -> Result<(), Failure> {
    if a.bipartition.is_none() {
        return Err(Failure::input("graph is not bipartite"));
    }
    if !a.unmixed {
        return Err(Failure::input("graph is not unmixed"));
    }
    Ok(())
}

fn write_dot(path: &Option<PathBuf>, lat: &CoverLattice) -> Result<(), Failure> {
    match path {
        Some(p) => write_file(p, &hasse(lat).to_dot()),
        None => Ok(()),
    }
}

fn lattice_json(lat: &CoverLattice) -> serde_json::Value {
    json!({
        "n": lat.n(),
        "elements": lat.elements().iter().map(|&e| one_based(e)).collect::<Vec<_>>(),
        "rank": rank(lat),
        "full": is_full(lat),
    })
}

fn execute(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    let format = cli.format;
    match &cli.command {
        Command::Check { graph } => {
            let a = load_analysis(graph, cli.max_vertices)?;
            let cm = a.form.as_ref().map(|f| is_full(&f.lattice));
            let line = match format {
                Format::Text => {
                    let mut s = format!(
                        "bipartite={} unmixed={} covers={}",
                        yes_no(a.bipartition.is_some()),
                        yes_no(a.unmixed),
                        a.covers.len()
                    );
                    if let Some(cm) = cm {
                        s.push_str(&format!(" cm={}", yes_no(cm)));
                    }
                    s
                }
                Format::Json => json!({
                    "bipartite": a.bipartition.is_some(),
                    "unmixed": a.unmixed,
                    "covers": a.covers.len(),
                    "cm": cm,
                })
                .to_string(),
            };
            emit(out, &format!("{line}\n"))?;
            Ok(EXIT_OK)
        }
        Command::Covers { graph } => {
            let a = load_analysis(graph, cli.max_vertices)?;
            match format {
                Format::Text => emit(out, &a.covers.to_text())?,
                Format::Json => {
                    let covers: Vec<_> = a.covers.covers().iter().map(|&c| one_based(c)).collect();
                    emit(
                        out,
                        &format!("{}\n", json!({"covers": covers, "unmixed": a.unmixed})),
                    )?
                }
            }
            Ok(EXIT_OK)
        }
        Command::Lattice { graph, dot } => {
            let a = load_analysis(graph, cli.max_vertices)?;
            require_unmixed(&a)?;
            let form = a.form.expect("unmixed bipartite graphs are normalised");
            write_dot(dot, &form.lattice)?;
            match format {
                Format::Text => {
                    emit(out, &form.lattice.to_text())?;
                }
                Format::Json => emit(out, &format!("{}\n", lattice_json(&form.lattice)))?,
            }
            Ok(EXIT_OK)
        }
        Command::Dim { graph, dot } => {
            let a = load_analysis(graph, cli.max_vertices)?;
            require_unmixed(&a)?;
            let form = a.form.expect("unmixed bipartite graphs are normalised");
            write_dot(dot, &form.lattice)?;
            let report = match dimension_report(&form.labeled, &form.covers, &form.lattice) {
                Ok(r) => r,
                Err(AlgebraError::Inconsistent(inc)) => {
                    if format == Format::Json {
                        let record = serde_json::to_string(&inc).unwrap_or_default();
                        emit(out, &format!("{record}\n"))?;
                    }
                    return Err(Failure::violation(inc));
                }
                Err(e) => return Err(Failure::input(e)),
            };
            match format {
                Format::Text => emit(out, &report.to_key_values())?,
                Format::Json => emit(
                    out,
                    &format!("{}\n", serde_json::to_string(&report).unwrap()),
                )?,
            }
            Ok(if report.theorem_holds {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            })
        }
        Command::FromLattice {
            lattice,
            out: out_path,
            dot,
        } => {
            let file = parse_lattice(&read_input(lattice)?).map_err(Failure::input)?;
            let lat = file.into_lattice().map_err(Failure::input)?;
            let g = match graph_from_lattice(&lat) {
                Ok(g) => g,
                Err(e @ LatticeError::RoundTrip { .. }) => return Err(Failure::violation(e)),
                Err(e) => return Err(Failure::input(e)),
            };
            write_dot(dot, &lat)?;
            let body = match format {
                Format::Text => format!(
                    "# round trip ok: covers reproduce all {} lattice elements\n{}",
                    lat.len(),
                    g.to_text()
                ),
                Format::Json => {
                    let edges: Vec<[usize; 2]> =
                        g.edges().iter().map(|&(i, j)| [i + 1, j + 1]).collect();
                    format!(
                        "{}\n",
                        json!({"n": g.n(), "edges": edges, "round_trip": true, "lattice_size": lat.len()})
                    )
                }
            };
            match out_path {
                Some(p) => write_file(p, &body)?,
                None => emit(out, &body)?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            n,
            random,
            max_degree,
            sequential,
        } => {
            let exec = if *sequential {
                Exec::Sequential
            } else {
                Exec::default()
            };
            let cfg = SweepConfig {
                growth_max_degree: *max_degree,
                ..SweepConfig::default()
            };
            let (label, result) = match random {
                Some(v) => {
                    let (count, seed) = (v[0] as usize, v[1]);
                    let n = n.unwrap_or(5);
                    let r = verify_random(n, count, seed, &cfg, exec).map_err(Failure::input)?;
                    (format!("n={n} random={count} seed={seed}"), r)
                }
                None => {
                    let n = n.ok_or_else(|| Failure::input("verify needs --n or --random"))?;
                    let r = verify_exhaustive(n, &cfg, exec).map_err(Failure::input)?;
                    (format!("n={n} exhaustive"), r)
                }
            };
            report_sweep(out, format, &label, &result)?;
            Ok(if result.all_passed() {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            })
        }
        Command::Gen {
            n,
            generators,
            seed,
            graph,
        } => {
            let lat = random_sublattice(*n, *generators, *seed).map_err(Failure::input)?;
            if *graph {
                let g = graph_from_lattice(&lat).map_err(Failure::violation)?;
                emit(out, &g.to_text())?;
            } else {
                match format {
                    Format::Text => emit(out, &lat.to_text())?,
                    Format::Json => emit(out, &format!("{}\n", lattice_json(&lat)))?,
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn report_sweep(
    out: &mut dyn Write,
    format: Format,
    label: &str,
    result: &SweepResult,
) -> Result<(), Failure> {
    let s = &result.summary;
    match format {
        Format::Text => {
            let mut text = format!(
                "{label}: instances={} passed={} failed={} full={} growth_matched={} growth_skipped={} hall_checked={}\n",
                s.instances, s.passed, s.failed, s.full, s.growth_matched, s.growth_skipped, s.hall_checked
            );
            for f in &s.failures {
                text.push_str(&format!("FAIL [{}] {}\n{}", f.stage, f.message, f.lattice));
            }
            emit(out, &text)
        }
        Format::Json => {
            let mut text = String::new();
            for o in &result.outcomes {
                let record = match o {
                    Ok(ok) => json!({"ok": true, "instance": ok}),
                    Err(f) => json!({"ok": false, "failure": f}),
                };
                text.push_str(&format!("{record}\n"));
            }
            text.push_str(&format!("{}\n", json!({"summary": s, "label": label})));
            emit(out, &text)
        }
    }
}
