//! The `dicolour` command line.
//!
//! Exit codes: 0 on success, 1 on a domain error, 2 on a usage error. Every
//! failure prints one line `error: <code>: <message>` to stderr.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use dicolour_core::certify::{brooks_certify_with_budget, CertifyOutcome};
use dicolour_core::dicolouring::{
    exact_chi_with_budget, is_frozen, monochromatic_cycle, DEFAULT_NODE_BUDGET,
};
use dicolour_core::gadget::build_gadget;
use dicolour_core::oracle::{
    build_dicolouring_graph_with_budget, shortest_in, shortest_sequence_with_budget,
    DEFAULT_ORACLE_BUDGET,
};
use dicolour_core::redicolouring::{
    list_redicolour, recolour_brooks, recolour_cycle, recolour_deltamin, recolour_mindeg1,
    verify_sequence,
};
use dicolour_core::{
    Dicolouring, Digraph, Error as CoreError, ListAssignment, Palette, RecolouringSequence,
};

use crate::generate::{self, Family, GenError, GeneratorSpec};
use crate::io::{self, FormatError};

#[derive(Debug, Parser)]
#[command(
    name = "dicolour",
    version,
    about = "Dicolourings of digraphs and their reconfiguration"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Cycle,
    Mindeg1,
    Deltamin,
    List,
    Brooks,
    Bfs,
}

impl Algo {
    fn name(self) -> &'static str {
        match self {
            Algo::Cycle => "cycle",
            Algo::Mindeg1 => "mindeg1",
            Algo::Deltamin => "deltamin",
            Algo::List => "list",
            Algo::Brooks => "brooks",
            Algo::Bfs => "bfs",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a digraph as an edge list.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Δ_min target, or k for gadget-of.
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Exact dichromatic number.
    Chi {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Validate a dicolouring or a recolouring sequence.
    Check {
        graph: PathBuf,
        #[arg(
            long,
            conflicts_with = "sequence",
            required_unless_present = "sequence"
        )]
        colouring: Option<PathBuf>,
        #[arg(long)]
        sequence: Option<PathBuf>,
        /// Colouring the sequence must end at.
        #[arg(long, requires = "sequence")]
        target: Option<PathBuf>,
        #[arg(long, short)]
        k: Option<usize>,
        #[arg(long)]
        lists: Option<PathBuf>,
    },
    /// A Δ_min-dicolouring or a witness that none exists.
    Certify {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Emit a verified recolouring sequence as JSON.
    Recolour {
        graph: PathBuf,
        #[arg(long, value_enum)]
        algo: Algo,
        #[arg(long)]
        alpha: PathBuf,
        #[arg(long)]
        beta: PathBuf,
        #[arg(long, short)]
        k: Option<usize>,
        /// Required by `--algo list`.
        #[arg(long)]
        lists: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
        budget: u64,
    },
    /// Build the Δ_min = k reduction of a digraph.
    Gadget {
        graph: PathBuf,
        #[arg(long, short)]
        k: usize,
        /// Write the block map here; otherwise it follows the edge list as
        /// a `# blocks` comment.
        #[arg(long)]
        blocks: Option<PathBuf>,
    },
    /// Summary of the k-dicolouring graph.
    Oracle {
        graph: PathBuf,
        #[arg(long, short)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
        budget: u64,
        /// Also write adjacent rank pairs, one per line.
        #[arg(long)]
        adjacency: Option<PathBuf>,
    },
    /// Run an algorithm on a seeded batch and emit CSV.
    Bench {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        count: u64,
        #[arg(long, value_enum)]
        algo: Algo,
        #[arg(long, short)]
        k: Option<usize>,
        /// Largest order for which the oracle distance is computed.
        #[arg(long, default_value_t = 8)]
        oracle_max_n: usize,
        #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
        budget: u64,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Write(#[from] std::io::Error),
    #[error("{}: {source}", path.display())]
    Format { path: PathBuf, source: FormatError },
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{message}")]
    Domain { code: &'static str, message: String },
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Read { .. } => "unreadable-input",
            CliError::Write(_) => "write-failed",
            CliError::Format { source, .. } => source.code(),
            CliError::Gen(e) => e.code(),
            CliError::Core(e) => e.code(),
            CliError::Domain { code, .. } => code,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Read { .. } => 2,
            _ => 1,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn domain(code: &'static str, message: impl Into<String>) -> CliError {
    CliError::Domain {
        code,
        message: message.into(),
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let first = e.to_string();
            let first = first
                .lines()
                .next()
                .unwrap_or("")
                .trim_start_matches("error: ");
            let _ = writeln!(err, "error: usage: {first}");
            return 2;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &text),
                None => out.write_all(text.as_bytes()),
            };
            match written {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(err, "error: write-failed: {e}");
                    1
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", e.code());
            e.exit_code()
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

fn at<T>(path: &Path, r: std::result::Result<T, FormatError>) -> Result<T> {
    r.map_err(|source| CliError::Format {
        path: path.to_path_buf(),
        source,
    })
}

fn load_graph(path: &Path) -> Result<Digraph> {
    at(path, io::parse_digraph(&read(path)?))
}

fn load_colouring(path: &Path, n: usize) -> Result<io::ColouringFile> {
    at(path, io::parse_colouring(&read(path)?, n))
}

fn load_lists(path: &Path, n: usize) -> Result<ListAssignment> {
    at(path, io::parse_lists(&read(path)?, n))
}

fn execute(cli: &Cli) -> Result<String> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Gen {
            family,
            n,
            delta,
            p,
            seed,
        } => {
            let spec = GeneratorSpec {
                family: *family,
                n: *n,
                delta: *delta,
                p: *p,
                seed: *seed,
            };
            Ok(io::serialize_digraph(&generate::generate(&spec)?))
        }
        Command::Chi { graph, budget } => {
            let g = load_graph(graph)?;
            let (chi, c) = exact_chi_with_budget(&g, *budget)?;
            Ok(if json {
                format!(
                    "{{\"chi\":{chi},\"colouring\":{}}}\n",
                    io::colouring_json(&c)
                )
            } else {
                format!("{chi}\n")
            })
        }
        Command::Check {
            graph,
            colouring,
            sequence,
            target,
            k,
            lists,
        } => {
            let g = load_graph(graph)?;
            let lists = lists
                .as_deref()
                .map(|p| load_lists(p, g.order()))
                .transpose()?;
            if let Some(path) = colouring {
                let c =
                    load_colouring(path, g.order())?
                        .with_k(*k)
                        .map_err(|e| CliError::Format {
                            path: path.clone(),
                            source: e,
                        })?;
                if let Some(l) = &lists {
                    Palette::Lists(l).check(g.order(), c.colours())?;
                }
                if let Some(cycle) = monochromatic_cycle(&g, c.colours()) {
                    return Err(domain(
                        "invalid-colouring",
                        format!("monochromatic cycle {cycle:?}"),
                    ));
                }
                return Ok(if json {
                    format!("{{\"valid\":true,\"frozen\":{}}}\n", is_frozen(&g, &c))
                } else {
                    "valid\n".into()
                });
            }
            let path = sequence
                .as_ref()
                .expect("clap requires a colouring or a sequence");
            let seq = at(
                path,
                io::parse_sequence(&read(path)?).and_then(|s| s.into_sequence(*k)),
            )?;
            let target = match target {
                Some(t) => load_colouring(t, g.order())?.colours,
                None => seq.final_colours(),
            };
            let palette = match &lists {
                Some(l) => Palette::Lists(l),
                None => Palette::Colours(seq.start.k()),
            };
            verify_sequence(&g, palette, &seq, &target)
                .map_err(|f| domain("invalid-sequence", f.to_string()))?;
            Ok(if json {
                format!(
                    "{{\"valid\":true,\"length\":{},\"bound\":{}}}\n",
                    seq.len(),
                    seq.bound
                )
            } else {
                format!("valid {} steps\n", seq.len())
            })
        }
        Command::Certify { graph, budget } => {
            let g = load_graph(graph)?;
            let outcome = brooks_certify_with_budget(&g, *budget)?;
            Ok(match (&outcome, json) {
                (CertifyOutcome::Colouring(c), true) => format!("{}\n", io::colouring_json(c)),
                (CertifyOutcome::Witness(w), true) => format!("{}\n", io::witness_json(w)),
                (CertifyOutcome::Colouring(c), false) => {
                    format!("colouring\n{}", io::colouring_text(c.colours()))
                }
                (CertifyOutcome::Witness(w), false) => {
                    format!("witness\n{}\n", io::witness_json(w))
                }
            })
        }
        Command::Recolour {
            graph,
            algo,
            alpha,
            beta,
            k,
            lists,
            budget,
        } => {
            let g = load_graph(graph)?;
            let a = load_colouring(alpha, g.order())?;
            let b = load_colouring(beta, g.order())?;
            let lists = lists
                .as_deref()
                .map(|p| load_lists(p, g.order()))
                .transpose()?;
            let seq = recolour(&g, *algo, &a, &b, *k, lists.as_ref(), *budget)?;
            Ok(format!("{}\n", io::sequence_json(&seq)))
        }
        Command::Gadget { graph, k, blocks } => {
            let g = load_graph(graph)?;
            let inst = build_gadget(&g, *k)?;
            let mut text = io::serialize_digraph(&inst.graph);
            let map = io::block_map_json(&inst);
            match blocks {
                Some(path) => std::fs::write(path, format!("{map}\n"))?,
                None => {
                    let _ = writeln!(text, "# blocks {map}");
                }
            }
            Ok(text)
        }
        Command::Oracle {
            graph,
            k,
            budget,
            adjacency,
        } => {
            let g = load_graph(graph)?;
            let d = build_dicolouring_graph_with_budget(&g, *k, *budget)?;
            if let Some(path) = adjacency {
                let pairs = d.edges().into_iter().fold(String::new(), |mut s, (i, j)| {
                    let _ = writeln!(s, "{i} {j}");
                    s
                });
                std::fs::write(path, pairs)?;
            }
            Ok(format!("{}\n", io::summary_json(&d.summary())))
        }
        Command::Bench {
            family,
            n,
            delta,
            p,
            seed,
            count,
            algo,
            k,
            oracle_max_n,
            budget,
        } => {
            let base = GeneratorSpec {
                family: *family,
                n: *n,
                delta: *delta,
                p: *p,
                seed: *seed,
            };
            bench(&base, *count, *algo, *k, *oracle_max_n, *budget)
        }
    }
}

fn recolour(
    g: &Digraph,
    algo: Algo,
    a: &io::ColouringFile,
    b: &io::ColouringFile,
    k: Option<usize>,
    lists: Option<&ListAssignment>,
    budget: u64,
) -> Result<RecolouringSequence> {
    let k = k.or(a.k).or(b.k);
    let (alpha, beta) = (&a.colours, &b.colours);
    let seq = match algo {
        Algo::Cycle => recolour_cycle(g, alpha, beta)?,
        Algo::Mindeg1 => recolour_mindeg1(g, alpha, beta)?,
        Algo::Deltamin => recolour_deltamin(g, alpha, beta, k.unwrap_or(g.delta_min() + 1))?,
        Algo::Brooks => recolour_brooks(g, alpha, beta, k.unwrap_or(g.delta_max() + 1))?.sequence,
        Algo::List => {
            let lists = lists.ok_or_else(|| CliError::Usage("--algo list needs --lists".into()))?;
            list_redicolour(g, lists, alpha, beta)?
        }
        Algo::Bfs => {
            let top = alpha.iter().chain(beta).copied().max().unwrap_or(1);
            shortest_sequence_with_budget(g, k.unwrap_or(top), alpha, beta, budget)?
        }
    };
    let palette = match (algo, lists) {
        (Algo::List, Some(l)) => Palette::Lists(l),
        _ => Palette::Colours(seq.start.k()),
    };
    verify_sequence(g, palette, &seq, beta)
        .map_err(|f| domain("internal", format!("refusing to emit: {f}")))?;
    Ok(seq)
}

/// Endpoint draws before a bench instance is declared unusable.
const ENDPOINT_ATTEMPTS: usize = 200;

fn bench(
    base: &GeneratorSpec,
    count: u64,
    algo: Algo,
    k: Option<usize>,
    oracle_max_n: usize,
    budget: u64,
) -> Result<String> {
    let mut csv = String::from("instance,n,dmin,dmax,k,algo,len,bound,oracle_dist\n");
    for i in 0..count {
        let spec = GeneratorSpec {
            seed: base.seed.wrapping_add(i),
            ..*base
        };
        let g = generate::generate(&spec)?;
        let mut rng = generate::rng(spec.seed ^ 0x9e37_79b9_7f4a_7c15);
        let (k, lists) = match algo {
            Algo::Cycle | Algo::Mindeg1 => (2, None),
            Algo::Deltamin | Algo::Bfs => (k.unwrap_or(g.delta_min() + 1), None),
            Algo::Brooks => (k.unwrap_or(g.delta_max() + 1), None),
            Algo::List => {
                let k = k.unwrap_or(g.delta_max() + 2);
                (k, Some(generate::random_lists(&g, k, 0, &mut rng)?))
            }
        };
        let lists = lists.unwrap_or_else(|| ListAssignment::uniform(g.order(), k));
        let mut endpoints = None;
        for _ in 0..ENDPOINT_ATTEMPTS {
            let a = generate::random_list_dicolouring(&g, &lists, &mut rng);
            let b = generate::random_list_dicolouring(&g, &lists, &mut rng);
            if let (Some(a), Some(b)) = (a, b) {
                let frozen = |c: &[usize]| {
                    Dicolouring::new(k, c.to_vec())
                        .map(|d| is_frozen(&g, &d))
                        .unwrap_or(true)
                };
                if algo != Algo::Brooks || (!frozen(&a) && !frozen(&b)) {
                    endpoints = Some((a, b));
                    break;
                }
            }
        }
        let (a, b) = endpoints
            .ok_or_else(|| domain("no-endpoints", format!("instance {i}: no usable endpoints")))?;
        let file = |c: &[usize]| io::ColouringFile {
            k: Some(k),
            colours: c.to_vec(),
        };
        let seq = recolour(
            &g,
            algo,
            &file(&a),
            &file(&b),
            Some(k),
            Some(&lists),
            budget,
        )?;
        if seq.len() > seq.bound {
            return Err(domain(
                "bound-violated",
                format!(
                    "instance {i}: length {} exceeds bound {}",
                    seq.len(),
                    seq.bound
                ),
            ));
        }
        let oracle = if g.order() <= oracle_max_n {
            match build_dicolouring_graph_with_budget(&g, k, budget)
                .and_then(|d| shortest_in(&d, &a, &b))
            {
                Ok(s) => Some(s.len()),
                Err(CoreError::BudgetExceeded(_) | CoreError::TooLarge { .. }) => None,
                Err(e) => return Err(e.into()),
            }
        } else {
            None
        };
        if let Some(d) = oracle {
            if d > seq.len() {
                return Err(domain(
                    "oracle-mismatch",
                    format!(
                        "instance {i}: oracle distance {d} exceeds constructed length {}",
                        seq.len()
                    ),
                ));
            }
        }
        let p = g.degree_profile();
        let _ = writeln!(
            csv,
            "{i},{},{},{},{k},{},{},{},{}",
            g.order(),
            p.delta_min,
            p.delta_max,
            algo.name(),
            seq.len(),
            seq.bound,
            oracle.map(|d| d.to_string()).unwrap_or_default()
        );
    }
    Ok(csv)
}
