use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use bipminor_core::families::{h_tree_with, FamilyKind, FamilySpec, HTreeArms};
use bipminor_core::structure::{blocks, is_k_connected, ConnectivityMode};
use bipminor_core::{admissible_pairs, bipartite_minor_closure, compare_family, Graph, SearchOptions};
use clap::{Parser, Subcommand, ValueEnum};

use crate::dot::emit_dot;
use crate::graph6::{emit_graph6, parse_graph6};
use crate::harness::{verify_harness, Suite};
use crate::witness::{self, parse_relation, WitnessDocument};
use crate::CliError;

pub const SIZE_CAP_VAR: &str = "BIPMINOR_SIZE_CAP";

/// Bipartite minors, minors and subgraphs of small graphs.
///
/// Graph arguments are files holding one graph6 string on their first
/// non-empty line. Exit status: 0 when the relation holds or the command
/// succeeded, 1 when it does not hold or a check failed, 2 on bad input.
#[derive(Debug, Parser)]
#[command(name = "bipminor", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a family member: cycle K, path K, bull L H.., dog L E.., h-tree L
    Gen {
        family: Family,
        #[arg(required = true)]
        params: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::G6)]
        format: Format,
        /// H-trees with one leaf and one 2-vertex pendant path at each end
        #[arg(long)]
        four_vertex_arms: bool,
    },
    /// Decide H <= G; bipminor, minor or subgraph
    Check {
        relation: String,
        h: PathBuf,
        g: PathBuf,
        /// Write a JSON witness document here
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// List admissible pairs with one witness each
    Admissible { g: PathBuf },
    /// List the bipartite-minor closure, one canonical graph6 per line
    Closure {
        g: PathBuf,
        #[arg(long)]
        two_connected_only: bool,
        #[arg(long, value_enum, default_value_t = Mode::Paper)]
        mode: Mode,
    },
    /// Print blocks and cut vertices
    Blocks { g: PathBuf },
    /// Comparability matrix of the graphs in a file (one graph6 per line)
    Antichain {
        file: PathBuf,
        #[arg(long)]
        relation: String,
    },
    /// Run a verification suite and print its JSON report
    Verify { suite: String },
    /// Re-validate a witness document
    Replay { witness: PathBuf },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Cycle,
    Path,
    Bull,
    Dog,
    #[value(alias = "htree", alias = "h_tree")]
    HTree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    G6,
    Dot,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Paper,
    Standard,
}

impl From<Mode> for ConnectivityMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Paper => ConnectivityMode::PaperLiteral,
            Mode::Standard => ConnectivityMode::Standard,
        }
    }
}

/// Runs the command line `args` (program name first) and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn options() -> Result<SearchOptions, CliError> {
    match std::env::var(SIZE_CAP_VAR) {
        Ok(s) => s
            .trim()
            .parse()
            .map(SearchOptions::with_cap)
            .map_err(|_| CliError::Usage(format!("{SIZE_CAP_VAR} must be a non-negative integer, got {s:?}"))),
        Err(_) => Ok(SearchOptions::default()),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = read(path)?;
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| CliError::Usage(format!("{}: no graph6 line", path.display())))?;
    parse_graph6(line).map_err(|source| CliError::BadGraph { path: path.to_path_buf(), source })
}

fn io(e: std::io::Error) -> CliError {
    CliError::Io { path: PathBuf::from("<output>"), source: e }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let opts = options()?;
    match command {
        Command::Gen { family, params, format, four_vertex_arms } => {
            let (&length, rest) = params.split_first().expect("clap requires one parameter");
            let g = match family {
                Family::HTree => {
                    if !rest.is_empty() {
                        return Err(CliError::Usage("h-tree takes a single connector length".into()));
                    }
                    let arms = if four_vertex_arms { HTreeArms::FourVertex } else { HTreeArms::ThreeVertex };
                    h_tree_with(length, arms)?
                }
                _ => {
                    let kind = match family {
                        Family::Cycle => FamilyKind::Cycle,
                        Family::Path => FamilyKind::Path,
                        Family::Bull => FamilyKind::Bull,
                        Family::Dog => FamilyKind::Dog,
                        Family::HTree => unreachable!(),
                    };
                    FamilySpec::new(kind, length, rest).build()?
                }
            };
            match format {
                Format::G6 => writeln!(out, "{}", emit_graph6(&g)?).map_err(io)?,
                Format::Dot => out.write_all(emit_dot(&g, None).as_bytes()).map_err(io)?,
            }
            Ok(0)
        }
        Command::Check { relation, h, g, witness: path } => {
            let rel = parse_relation(&relation)
                .ok_or_else(|| CliError::Usage(format!("unknown relation {relation:?}; expected bipminor, minor or subgraph")))?;
            let (h, g) = (read_graph(&h)?, read_graph(&g)?);
            let doc = witness::check(rel, &h, &g, &opts)?;
            if let Some(path) = path {
                let text = serde_json::to_string_pretty(&doc)? + "\n";
                fs::write(&path, text).map_err(|source| CliError::Io { path, source })?;
            }
            writeln!(out, "{}", if doc.holds { "holds" } else { "does not hold" }).map_err(io)?;
            Ok(if doc.holds { 0 } else { 1 })
        }
        Command::Admissible { g } => {
            let g = read_graph(&g)?;
            for p in admissible_pairs(&g, &opts)? {
                let cycle: Vec<String> = p.cycle.vertices().iter().map(usize::to_string).collect();
                writeln!(out, "{} {} via {} on cycle {}", p.u, p.v, p.w, cycle.join(" ")).map_err(io)?;
            }
            Ok(0)
        }
        Command::Closure { g, two_connected_only, mode } => {
            let g = read_graph(&g)?;
            let mut count = 0;
            for f in bipartite_minor_closure(&g, &opts)? {
                let member = f.to_graph();
                if two_connected_only && !is_k_connected(&member, 2, mode.into())? {
                    continue;
                }
                count += 1;
                writeln!(out, "{}", emit_graph6(&member)?).map_err(io)?;
            }
            let _ = writeln!(err, "{count} members");
            Ok(0)
        }
        Command::Blocks { g } => {
            let g = read_graph(&g)?;
            let dec = blocks(&g);
            for b in &dec.blocks {
                let vs: Vec<String> = b.vertices.iter().map(usize::to_string).collect();
                let es: Vec<String> = b.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                let kind = if b.is_trivial() { " (trivial)" } else { "" };
                writeln!(out, "block {}: edges {}{kind}", vs.join(" "), es.join(" ")).map_err(io)?;
            }
            let cuts: Vec<String> = dec.cut_vertices.iter().map(usize::to_string).collect();
            writeln!(out, "cut vertices: {}", cuts.join(" ")).map_err(io)?;
            Ok(0)
        }
        Command::Antichain { file, relation } => {
            let rel = parse_relation(&relation)
                .ok_or_else(|| CliError::Usage(format!("unknown relation {relation:?}; expected bipminor, minor or subgraph")))?;
            let text = read(&file)?;
            let graphs = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(|l| parse_graph6(l).map_err(|source| CliError::BadGraph { path: file.clone(), source }))
                .collect::<Result<Vec<_>, _>>()?;
            let cmp = compare_family(&graphs, rel, &opts)?;
            for row in &cmp.matrix {
                let cells: Vec<&str> = row.iter().map(|&x| if x { "1" } else { "0" }).collect();
                writeln!(out, "{}", cells.join(" ")).map_err(io)?;
            }
            let anti = cmp.is_antichain();
            writeln!(out, "antichain: {}", if anti { "yes" } else { "no" }).map_err(io)?;
            Ok(if anti { 0 } else { 1 })
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse()?;
            let report = verify_harness(suite, &opts)?;
            for c in &report.claims {
                let _ = writeln!(
                    err,
                    "{} [{:>2}] {} ({:.1} ms)",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.criterion,
                    c.id,
                    c.runtime_ms
                );
            }
            writeln!(out, "{}", serde_json::to_string_pretty(&report)?).map_err(io)?;
            Ok(if report.passed { 0 } else { 1 })
        }
        Command::Replay { witness: path } => {
            let doc: WitnessDocument = serde_json::from_str(&read(&path)?)?;
            match witness::validate(&doc, &opts) {
                Ok(()) => {
                    writeln!(out, "valid").map_err(io)?;
                    Ok(0)
                }
                Err(e) => {
                    writeln!(out, "invalid: {e}").map_err(io)?;
                    Ok(1)
                }
            }
        }
    }
}
