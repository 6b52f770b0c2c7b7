//! `otg`: build, recognize, canonicalize and count oriented threshold graphs.
//!
//! Exit codes: 0 success / true, 1 false / non-member, 2 usage error,
//! 3 parse error.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use otg_core::{
    are_isomorphic_bruteforce, canonicalize, count_classes, count_transitive_orientations,
    displit_partition, dtg_build, eliminate, emit_edge_list, enumerate_canonical,
    enumerate_orientation_classes, export_dot, parse_edge_list, parse_sequence, realize_weights,
    selfcheck, Error, OrientedGraph, TernarySequence, VertexSet,
};

/// Largest non-member pair `iso` will compare by brute force.
const MAX_BRUTE_ISO_N: usize = 10;

#[derive(Parser, Debug)]
#[command(name = "otg", version, about = "Oriented threshold graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the graph of a creation sequence such as "+-0-*".
    Build {
        #[arg(allow_hyphen_values = true)]
        sequence: String,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        out: Format,
        /// Vertex labels for dot output.
        #[arg(long, value_enum, default_value_t = Labels::None)]
        labels: Labels,
    },
    /// Print integer weights and a threshold realizing a sequence.
    Weights {
        #[arg(allow_hyphen_values = true)]
        sequence: String,
    },
    /// Print the canonical form of a sequence.
    Canon {
        #[arg(allow_hyphen_values = true)]
        sequence: String,
    },
    /// Decide whether two edge-list files hold isomorphic graphs.
    Iso { a: PathBuf, b: PathBuf },
    /// Decide membership of an edge-list graph and print its certificates.
    Recognize { file: PathBuf },
    /// Number of isomorphism classes on n vertices.
    Count { n: usize },
    /// List the canonical sequence of every class on n vertices.
    Enumerate { n: usize },
    /// Count the non-isomorphic transitive orientations of a threshold graph
    /// given as a +/0 sequence.
    Orientations {
        #[arg(allow_hyphen_values = true)]
        sequence: String,
        /// Also list one canonical sequence per class.
        #[arg(long)]
        list: bool,
    },
    /// Cross-check every construction against the brute-force oracles.
    Selfcheck {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Edgelist,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Labels {
    None,
    Symbols,
    Weights,
}

enum Failure {
    Usage(String),
    Parse(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Parse(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Parse(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SequenceSyntax { .. } | Error::EdgeListSyntax { .. } => {
                Failure::Parse(e.to_string())
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

/// Output text plus whether the answer was "yes".
type Outcome = Result<(String, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, verdict)) => {
            print!("{out}");
            ExitCode::from(if verdict { 0 } else { 1 })
        }
        Err(f) => {
            eprintln!("otg: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Build {
            sequence,
            out,
            labels,
        } => build(&parse_sequence(&sequence)?, out, labels),
        Command::Weights { sequence } => {
            let w = realize_weights(&parse_sequence(&sequence)?);
            Ok((format_weights(w.weights(), w.threshold()), true))
        }
        Command::Canon { sequence } => Ok((
            format!("{}\n", canonicalize(&parse_sequence(&sequence)?)),
            true,
        )),
        Command::Iso { a, b } => iso(&read_graph(&a)?, &read_graph(&b)?),
        Command::Recognize { file } => recognize(&read_graph(&file)?),
        Command::Count { n } => Ok((format!("{}\n", count_classes(n)?.count), true)),
        Command::Enumerate { n } => {
            let mut out = String::new();
            for s in enumerate_canonical(n)? {
                let _ = writeln!(out, "{s}");
            }
            Ok((out, true))
        }
        Command::Orientations { sequence, list } => {
            let b = parse_sequence(&sequence)?;
            let mut out = format!("{}\n", count_transitive_orientations(&b)?);
            if list {
                for s in enumerate_orientation_classes(&b)? {
                    let _ = writeln!(out, "{s}");
                }
            }
            Ok((out, true))
        }
        Command::Selfcheck { max_n } => {
            let reports = selfcheck::run(max_n);
            let mut out = String::new();
            for r in &reports {
                let _ = writeln!(out, "{r}");
            }
            Ok((out, reports.iter().all(|r| r.passed)))
        }
    }
}

fn read_graph(path: &Path) -> Result<OrientedGraph, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_edge_list(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn build(s: &TernarySequence, out: Format, labels: Labels) -> Outcome {
    let g = dtg_build(s);
    let text = match out {
        Format::Edgelist => emit_edge_list(&g),
        Format::Dot => {
            let names: Option<Vec<String>> = match labels {
                Labels::None => None,
                Labels::Symbols => Some(
                    (0..g.n())
                        .map(|v| {
                            s.symbol_of_vertex(v)
                                .map_or('*', |x| x.as_char())
                                .to_string()
                        })
                        .collect(),
                ),
                Labels::Weights => Some(
                    realize_weights(s)
                        .weights()
                        .iter()
                        .map(|w| w.to_string())
                        .collect(),
                ),
            };
            export_dot(&g, names.as_deref())?
        }
    };
    Ok((text, true))
}

fn format_weights(weights: &[i64], threshold: i64) -> String {
    let mut out = String::from("weights");
    for w in weights {
        let _ = write!(out, " {w}");
    }
    let _ = writeln!(out, "\nthreshold {threshold}");
    out
}

fn format_set(name: &str, set: &VertexSet) -> String {
    let mut out = String::from(name);
    for v in set {
        let _ = write!(out, " {v}");
    }
    out.push('\n');
    out
}

fn recognize(g: &OrientedGraph) -> Outcome {
    let (Some(e), Some(p)) = (eliminate(g), displit_partition(g)) else {
        return Ok(("non-member\n".into(), false));
    };
    let mut out = String::from("member\n");
    let _ = writeln!(out, "sequence {}", e.sequence());
    let _ = writeln!(out, "canonical {}", canonicalize(e.sequence()));
    out += &format_set("top", &p.top);
    out += &format_set("independent", &p.independent);
    out += &format_set("bottom", &p.bottom);
    let w = e.weights();
    out += &format_weights(w.weights(), w.threshold());
    Ok((out, true))
}

fn iso(a: &OrientedGraph, b: &OrientedGraph) -> Outcome {
    let canon = |g: &OrientedGraph| eliminate(g).map(|e| canonicalize(e.sequence()));
    let (ca, cb) = (canon(a), canon(b));
    let describe = |c: &Option<TernarySequence>| {
        c.as_ref()
            .map_or_else(|| "non-member".to_string(), |s| s.to_string())
    };
    let mut out = format!("a {}\nb {}\n", describe(&ca), describe(&cb));
    let same = match (&ca, &cb) {
        (Some(x), Some(y)) => x == y,
        (None, None) => {
            let n = a.n().max(b.n());
            if n > MAX_BRUTE_ISO_N {
                return Err(Failure::Usage(format!(
                    "both graphs are non-members; brute-force comparison is limited to {MAX_BRUTE_ISO_N} vertices"
                )));
            }
            are_isomorphic_bruteforce(a, b)
        }
        _ => false,
    };
    out += if same {
        "isomorphic\n"
    } else {
        "not isomorphic\n"
    };
    Ok((out, same))
}
