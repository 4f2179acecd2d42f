//! Command-line surface: `check` (value-set property report), `bfs`
//! (one-step traversal of a hypergraph file), and `verify` (theorem
//! harnesses). All output goes through the supplied writer so runs are
//! reproducible byte for byte.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::format::{parse_hypergraph, parse_value_set, render_profile, render_report};
use crate::hypergraph::{build_incidence, IncidenceWeights};
use crate::traversal::{bfs_edge_step, bfs_vertex_step, linalg_bfs_sparse, FrontierVector};
use crate::valueset::{check_identities, profile, AnnihilatorCertificate, TableValueSet};
use crate::verify::{convention_harness, theorem_2_1_harness, Bounds, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT_ERROR: i32 = 1;
pub const EXIT_PROPERTY_FAILURE: i32 = 2;
pub const EXIT_CERTIFICATION_REFUSED: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "hyperbfs",
    about = "Value-set checking, linear-algebraic hypergraph BFS, and theorem verification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Report the seven algebraic properties of a value set, with
    /// witnesses for each failure
    Check {
        /// Built-in value set name
        #[arg(long, conflicts_with = "table")]
        builtin: Option<String>,
        /// Path to a .vs operation-table file
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Compute a one-step BFS frontier over a hypergraph file
    Bfs {
        /// Path to a .dhg hypergraph file
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated source vertices (may be empty)
        #[arg(long, default_value = "")]
        source: String,
        #[arg(long, conflicts_with = "table")]
        builtin: Option<String>,
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Mode::Strict)]
        mode: Mode,
    },
    /// Run a verification harness over all enumerated value sets
    Verify {
        #[arg(long, value_enum)]
        theorem: Theorem,
        /// Carrier size to enumerate (2 or 3)
        #[arg(long, default_value_t = 3)]
        carrier: usize,
        #[arg(long, default_value_t = 3)]
        max_vertices: usize,
        #[arg(long, default_value_t = 2)]
        max_edges: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the report stream here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Evaluate every product term, including zero operands
    Strict,
    /// Skip zero operands; requires a certified annihilating zero
    Sparse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    /// Property profile vs empirical BFS validity
    #[value(name = "2.1")]
    T21,
    /// Ordering, transposition, and regrouping conventions
    Conventions,
}

/// A diagnostic plus the exit code it maps to.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT_ERROR,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotCertified(_) => EXIT_CERTIFICATION_REFUSED,
            Error::NonFiniteCarrier(_) => EXIT_CERTIFICATION_REFUSED,
            _ => EXIT_INPUT_ERROR,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn load_value_set(
    builtin: &Option<String>,
    table: &Option<PathBuf>,
) -> Result<TableValueSet, Failure> {
    match (builtin, table) {
        (Some(name), None) => {
            if name == "integers" {
                return Err(Failure {
                    code: EXIT_CERTIFICATION_REFUSED,
                    message: "value set `integers` has an infinite carrier and is \
                              evaluation-only; exhaustive checks are unavailable"
                        .to_string(),
                });
            }
            TableValueSet::builtin(name).ok_or_else(|| {
                Failure::input(format!(
                    "unknown built-in `{name}`; available: {}",
                    TableValueSet::BUILTIN_NAMES.join(", ")
                ))
            })
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            let id = path
                .file_stem()
                .and_then(|s| s.to_str())
                .unwrap_or("table");
            Ok(parse_value_set(id, &text)?)
        }
        _ => Err(Failure::input("specify exactly one of --builtin or --table")),
    }
}

fn cmd_check<W: Write>(vs: &TableValueSet, out: &mut W) -> std::io::Result<i32> {
    if let Err(e) = check_identities(vs) {
        writeln!(out, "not a value set: {e}")?;
        return Ok(EXIT_PROPERTY_FAILURE);
    }
    let prof = match profile(vs) {
        Ok(p) => p,
        Err(e) => {
            writeln!(out, "error: {e}")?;
            return Ok(Failure::from(e).code);
        }
    };
    write!(out, "{}", render_profile(vs, &prof))?;
    Ok(if prof.bfs_valid() {
        EXIT_OK
    } else {
        EXIT_PROPERTY_FAILURE
    })
}

fn cmd_bfs<W: Write>(
    vs: &TableValueSet,
    graph_path: &Path,
    source: &str,
    mode: Mode,
    out: &mut W,
) -> std::io::Result<i32> {
    let run = || -> Result<(Vec<String>, Vec<String>), Failure> {
        let text = fs::read_to_string(graph_path)
            .map_err(|e| Failure::input(format!("{}: {e}", graph_path.display())))?;
        let graph = parse_hypergraph(&text)?;
        let sources: Vec<String> = if source.is_empty() {
            Vec::new()
        } else {
            source.split(',').map(|s| s.to_string()).collect()
        };
        let v = FrontierVector::indicator(vs, graph.vertices(), &sources)?;
        let pair = build_incidence(vs, &graph, &IncidenceWeights::new())?;
        let (e, w) = match mode {
            Mode::Strict => {
                let e = bfs_edge_step(vs, &v, &pair.e_out)?;
                let w = bfs_vertex_step(vs, &e, &pair.e_in)?;
                (e, w)
            }
            Mode::Sparse => {
                let cert = AnnihilatorCertificate::certify(vs)?;
                let e = bfs_edge_step(vs, &v, &pair.e_out)?;
                let w = linalg_bfs_sparse(vs, &cert, &v, &pair)?;
                (e, w)
            }
        };
        Ok((e.support(vs), w.support(vs)))
    };
    match run() {
        Ok((edges, vertices)) => {
            writeln!(out, "edges: {}", edges.join(","))?;
            writeln!(out, "vertices: {}", vertices.join(","))?;
            Ok(EXIT_OK)
        }
        Err(f) => {
            writeln!(out, "error: {}", f.message)?;
            Ok(f.code)
        }
    }
}

fn stream_reports<W: Write>(
    reports: impl Iterator<Item = crate::error::Result<VerificationReport>>,
    out: &mut W,
) -> std::io::Result<i32> {
    let mut sets = 0u64;
    let mut disagree = 0u64;
    for report in reports {
        let report = match report {
            Ok(r) => r,
            Err(e) => {
                writeln!(out, "error: {e}")?;
                return Ok(Failure::from(e).code);
            }
        };
        sets += 1;
        if !report.all_agree() {
            disagree += 1;
        }
        write!(out, "{}", render_report(&report))?;
    }
    writeln!(out, "summary sets={} agree={} disagree={}", sets, sets - disagree, disagree)?;
    Ok(if disagree == 0 {
        EXIT_OK
    } else {
        EXIT_PROPERTY_FAILURE
    })
}

fn cmd_verify<W: Write>(
    theorem: Theorem,
    carrier: usize,
    bounds: Bounds,
    seed: u64,
    out: &mut W,
) -> std::io::Result<i32> {
    match theorem {
        Theorem::T21 => match theorem_2_1_harness(carrier, bounds, seed) {
            Ok(harness) => stream_reports(harness, out),
            Err(e) => {
                writeln!(out, "error: {e}")?;
                Ok(EXIT_INPUT_ERROR)
            }
        },
        Theorem::Conventions => match convention_harness(carrier, bounds, seed) {
            Ok(harness) => stream_reports(harness, out),
            Err(e) => {
                writeln!(out, "error: {e}")?;
                Ok(EXIT_INPUT_ERROR)
            }
        },
    }
}

/// Execute a parsed command, writing all output to `out`. Returns the
/// process exit code.
pub fn run<W: Write>(cli: &Cli, out: &mut W) -> std::io::Result<i32> {
    match &cli.command {
        Command::Check { builtin, table } => match load_value_set(builtin, table) {
            Ok(vs) => cmd_check(&vs, out),
            Err(f) => {
                writeln!(out, "error: {}", f.message)?;
                Ok(f.code)
            }
        },
        Command::Bfs {
            graph,
            source,
            builtin,
            table,
            mode,
        } => match load_value_set(builtin, table) {
            Ok(vs) => cmd_bfs(&vs, graph, source, *mode, out),
            Err(f) => {
                writeln!(out, "error: {}", f.message)?;
                Ok(f.code)
            }
        },
        Command::Verify {
            theorem,
            carrier,
            max_vertices,
            max_edges,
            seed,
            out: out_path,
        } => {
            let bounds = Bounds {
                max_vertices: *max_vertices,
                max_edges: *max_edges,
            };
            match out_path {
                Some(path) => {
                    let mut file = std::io::BufWriter::new(fs::File::create(path)?);
                    let code = cmd_verify(*theorem, *carrier, bounds, *seed, &mut file)?;
                    file.flush()?;
                    Ok(code)
                }
                None => cmd_verify(*theorem, *carrier, bounds, *seed, out),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::{serialize_hypergraph, serialize_value_set};
    use crate::verify::figures;

    fn run_args(args: &[&str]) -> (i32, String) {
        let cli = Cli::try_parse_from(args).unwrap();
        let mut out = Vec::new();
        let code = run(&cli, &mut out).unwrap();
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn check_boolean_is_valid() {
        let (code, out) = run_args(&["hyperbfs", "check", "--builtin", "boolean"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("bfs_valid true"));
    }

    #[test]
    fn check_signed_fails_with_witness() {
        let (code, out) = run_args(&["hyperbfs", "check", "--builtin", "signed"]);
        assert_eq!(code, EXIT_PROPERTY_FAILURE);
        assert!(out.contains("zero_sum_free false (-1,1)"));
    }

    #[test]
    fn check_table_file_with_zero_sums() {
        // mod-5 addition and multiplication: 1 + 4 = 0
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("zmod5.vs");
        let names: Vec<String> = (0..5u32).map(|i| i.to_string()).collect();
        let mut text = format!("#carrier: {}\n#zero: 0\n#one: 1\n", names.join(","));
        for (label, op) in [
            ("plus:", (|a, b| (a + b) % 5) as fn(u32, u32) -> u32),
            ("times:", |a, b| (a * b) % 5),
        ] {
            text.push_str(label);
            text.push('\n');
            for a in 0..5 {
                let row: Vec<String> = (0..5).map(|b| op(a, b).to_string()).collect();
                text.push_str(&row.join(" "));
                text.push('\n');
            }
        }
        std::fs::write(&path, text).unwrap();
        let (code, out) = run_args(&["hyperbfs", "check", "--table", path.to_str().unwrap()]);
        assert_eq!(code, EXIT_PROPERTY_FAILURE);
        assert!(out.contains("zero_sum_free false (1,4)"), "{out}");
        assert!(out.contains("zero_divisor_free true"));
    }

    #[test]
    fn check_infinite_builtin_is_evaluation_only() {
        let (code, out) = run_args(&["hyperbfs", "check", "--builtin", "integers"]);
        assert_eq!(code, EXIT_CERTIFICATION_REFUSED);
        assert!(out.contains("evaluation-only"));
    }

    #[test]
    fn check_unknown_builtin_is_input_error() {
        let (code, _) = run_args(&["hyperbfs", "check", "--builtin", "nope"]);
        assert_eq!(code, EXIT_INPUT_ERROR);
    }

    fn write_graph(dir: &std::path::Path, g: &DirectedHypergraphAlias) -> PathBuf {
        let path = dir.join("g.dhg");
        std::fs::write(&path, serialize_hypergraph(g)).unwrap();
        path
    }

    type DirectedHypergraphAlias = crate::hypergraph::DirectedHypergraph;

    #[test]
    fn bfs_on_branching_edge() {
        let dir = tempfile::tempdir().unwrap();
        let path = write_graph(dir.path(), &figures::fig1_3());
        let (code, out) = run_args(&[
            "hyperbfs",
            "bfs",
            "--graph",
            path.to_str().unwrap(),
            "--source",
            "a",
            "--builtin",
            "boolean",
        ]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "edges: k\nvertices: b,c\n");
    }

    #[test]
    fn bfs_with_chained_self_loops() {
        let dir = tempfile::tempdir().unwrap();
        let path = write_graph(dir.path(), &figures::fig1_6());
        let (code, out) = run_args(&[
            "hyperbfs",
            "bfs",
            "--graph",
            path.to_str().unwrap(),
            "--source",
            "a",
            "--builtin",
            "boolean",
        ]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "edges: k1,k2\nvertices: a,b\n");
    }

    #[test]
    fn bfs_empty_source_gives_empty_frontier() {
        let dir = tempfile::tempdir().unwrap();
        let path = write_graph(dir.path(), &figures::fig1_3());
        let (code, out) = run_args(&[
            "hyperbfs",
            "bfs",
            "--graph",
            path.to_str().unwrap(),
            "--builtin",
            "boolean",
        ]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "edges: \nvertices: \n");
    }

    #[test]
    fn bfs_unknown_source_is_input_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = write_graph(dir.path(), &figures::fig1_3());
        let (code, _) = run_args(&[
            "hyperbfs",
            "bfs",
            "--graph",
            path.to_str().unwrap(),
            "--source",
            "z",
            "--builtin",
            "boolean",
        ]);
        assert_eq!(code, EXIT_INPUT_ERROR);
    }

    #[test]
    fn bfs_sparse_refused_without_annihilating_zero() {
        let dir = tempfile::tempdir().unwrap();
        let vs = crate::valueset::TableValueSet::non_annihilating3();
        let vs_path = dir.path().join("na.vs");
        std::fs::write(&vs_path, serialize_value_set(&vs).unwrap()).unwrap();
        let g_path = write_graph(dir.path(), &figures::fig1_3());
        let (code, out) = run_args(&[
            "hyperbfs",
            "bfs",
            "--graph",
            g_path.to_str().unwrap(),
            "--source",
            "a",
            "--table",
            vs_path.to_str().unwrap(),
            "--mode",
            "sparse",
        ]);
        assert_eq!(code, EXIT_CERTIFICATION_REFUSED, "{out}");
    }

    #[test]
    fn bfs_sparse_matches_strict_for_minplus() {
        let dir = tempfile::tempdir().unwrap();
        let path = write_graph(dir.path(), &figures::fig1_6());
        let strict = run_args(&[
            "hyperbfs", "bfs", "--graph", path.to_str().unwrap(),
            "--source", "a", "--builtin", "minplus", "--mode", "strict",
        ]);
        let sparse = run_args(&[
            "hyperbfs", "bfs", "--graph", path.to_str().unwrap(),
            "--source", "a", "--builtin", "minplus", "--mode", "sparse",
        ]);
        assert_eq!(strict, sparse);
        assert_eq!(strict.0, EXIT_OK);
    }

    #[test]
    fn verify_size_two_agrees() {
        let (code, out) = run_args(&[
            "hyperbfs", "verify", "--theorem", "2.1", "--carrier", "2",
        ]);
        assert_eq!(code, EXIT_OK);
        assert!(out.ends_with("summary sets=4 agree=4 disagree=0\n"), "{out}");
    }

    #[test]
    fn verify_runs_are_byte_identical() {
        let args = [
            "hyperbfs", "verify", "--theorem", "conventions", "--carrier", "2",
            "--seed", "7",
        ];
        assert_eq!(run_args(&args), run_args(&args));
    }

    #[test]
    fn verify_oversized_carrier_is_input_error() {
        let (code, _) = run_args(&[
            "hyperbfs", "verify", "--theorem", "2.1", "--carrier", "4",
        ]);
        assert_eq!(code, EXIT_INPUT_ERROR);
    }
}
