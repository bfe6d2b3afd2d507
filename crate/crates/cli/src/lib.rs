//! The `konig` command line. [`run`] does everything `main` does but takes
//! its arguments and output streams as parameters.

use std::ffi::OsString;
use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use konig_core::experiments::{run_trials, seeded_maximal_matching, write_csv, TrialConfig};
use konig_core::format::{
    matching_labels, parse_graph, parse_matching, parse_vertex_sequence, parse_vertex_set,
    sorted_labels, GraphDocument,
};
use konig_core::oracle::{
    all_matchings, all_maximal_matchings, all_minimum_covers, hall_condition, OracleBudget,
};
use konig_core::structure::DEFAULT_PATH_LIMIT;
use konig_core::verify::corpus_verify;
use konig_core::{
    classify_matching, konig_cover, maximum_matching, reverse_konig, star_stud, z_set,
    BipartiteGraph, Error, Matching, Side,
};

#[derive(Parser, Debug)]
#[command(
    name = "konig",
    version,
    about = "Matchings and vertex covers of bipartite graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct GraphArgs {
    /// Graph file: JSON document or whitespace edge list.
    #[arg(long)]
    pub graph: PathBuf,
    /// Treat the declared RIGHT side as LEFT.
    #[arg(long)]
    pub swap_sides: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Maximum matching, or a random maximal one with --maximal.
    Match {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        maximal: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Konig's cover of a matching.
    Cover {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        matching: PathBuf,
    },
    /// Recover a matching whose Konig cover is the given minimum cover.
    Reverse {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        cover: PathBuf,
        /// Visit order for the upper part, as a JSON list of labels.
        #[arg(long)]
        order: Option<PathBuf>,
    },
    /// Decide whether a maximal matching maps to a minimum cover.
    Classify {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        matching: PathBuf,
        #[arg(long, default_value_t = DEFAULT_PATH_LIMIT)]
        path_limit: usize,
    },
    /// Attach a three-leaf star to every vertex.
    Starstud {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Brute-force enumeration of matchings, covers and Hall's condition.
    Enumerate {
        #[command(flatten)]
        graph: GraphArgs,
        /// Required; selects the subset-scan oracle.
        #[arg(long, required = true)]
        oracle: bool,
        #[arg(long, default_value_t = OracleBudget::default().max_vertices)]
        max_vertices: usize,
    },
    /// Random trials of Konig's procedure on random maximal matchings.
    Experiment {
        #[arg(long)]
        nl: usize,
        #[arg(long)]
        nr: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Per-trial CSV destination.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every property suite over the exhaustive small-graph corpus.
    CorpusVerify {
        #[arg(long, default_value_t = 6)]
        max_vertices: usize,
    },
}

/// Failure of one invocation with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_input_error() { 2 } else { 1 },
            message: e.to_string(),
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| io_failure(path, e))
}

fn with_path(path: &Path) -> impl Fn(Error) -> Failure + '_ {
    move |e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    }
}

fn load_graph(args: &GraphArgs) -> Result<BipartiteGraph, Failure> {
    let g = parse_graph(&read(&args.graph)?).map_err(with_path(&args.graph))?;
    if !args.swap_sides {
        return Ok(g);
    }
    let mut doc = GraphDocument::from_graph(&g);
    doc.swap_sides();
    Ok(doc.to_graph()?)
}

fn load_matching(g: &BipartiteGraph, path: &Path) -> Result<Matching, Failure> {
    parse_matching(g, &read(path)?).map_err(with_path(path))
}

#[derive(Serialize)]
struct StarRow {
    base: String,
    center: String,
    leaves: Vec<String>,
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let value = match command {
        Command::Match {
            graph,
            maximal,
            seed,
        } => {
            let g = load_graph(&graph)?;
            let m = if maximal {
                seeded_maximal_matching(&g, seed)
            } else {
                maximum_matching(&g, &Matching::empty(&g))?
            };
            json!({ "matching": matching_labels(&g, &m), "size": m.len() })
        }
        Command::Cover { graph, matching } => {
            let g = load_graph(&graph)?;
            let m = load_matching(&g, &matching)?;
            let k = konig_cover(&g, &m)?;
            let z = z_set(&g, &m)?;
            let v = k.verdict(&g);
            json!({
                "cover": sorted_labels(&g, k.vertices().iter().copied()),
                "size": k.len(),
                "z": sorted_labels(&g, z.vertices()),
                "is_cover": v.is_cover,
                "is_minimal": v.is_minimal,
                "is_minimum": v.is_minimum,
            })
        }
        Command::Reverse {
            graph,
            cover,
            order,
        } => {
            let g = load_graph(&graph)?;
            let c = parse_vertex_set(&g, &read(&cover)?).map_err(with_path(&cover))?;
            let order = match &order {
                Some(path) => {
                    Some(parse_vertex_sequence(&g, &read(path)?).map_err(with_path(path))?)
                }
                None => None,
            };
            let r = reverse_konig(&g, &c, order.as_deref())?;
            json!({
                "cover": sorted_labels(&g, c.iter().copied()),
                "up": sorted_labels(&g, r.split.up.vertices.iter().copied()),
                "down": sorted_labels(&g, r.split.down.vertices.iter().copied()),
                "m_up": matching_labels(&g, &r.m_up),
                "m_down": matching_labels(&g, &r.m_down),
                "combined": matching_labels(&g, &r.combined),
                "visit_order": r.visit_order.iter().map(|&v| g.label(v)).collect::<Vec<_>>(),
                "round_trip": true,
            })
        }
        Command::Classify {
            graph,
            matching,
            path_limit,
        } => {
            let g = load_graph(&graph)?;
            let m = load_matching(&g, &matching)?;
            let verdict = classify_matching(&g, &m, path_limit)?;
            let witness = verdict.witness.map(|w| {
                json!({
                    "path": w.path.vertices().iter().map(|&v| g.label(v)).collect::<Vec<_>>(),
                    "unsaturated": sorted_labels(&g, w.unsaturated.iter().copied()),
                })
            });
            json!({ "is_minimum": verdict.is_minimum, "witness": witness })
        }
        Command::Starstud { graph } => {
            let g = load_graph(&graph)?;
            let st = star_stud(&g)?;
            let attachment: Vec<StarRow> = st
                .attachment
                .iter()
                .map(|s| StarRow {
                    base: st.full.label(s.base_vertex).to_string(),
                    center: st.full.label(s.center).to_string(),
                    leaves: s
                        .leaves
                        .iter()
                        .map(|&l| st.full.label(l).to_string())
                        .collect(),
                })
                .collect();
            json!({ "graph": GraphDocument::from_graph(&st.full), "attachment": attachment })
        }
        Command::Enumerate {
            graph,
            oracle: _,
            max_vertices,
        } => {
            let g = load_graph(&graph)?;
            let budget = OracleBudget {
                max_vertices,
                ..OracleBudget::default()
            };
            let matchings = all_matchings(&g, &budget)?;
            let maximal = all_maximal_matchings(&g, &budget)?;
            let covers: Vec<Vec<String>> = all_minimum_covers(&g, &budget)?
                .iter()
                .map(|c| sorted_labels(&g, c.iter().copied()))
                .collect();
            json!({
                "matchings": matchings.iter().map(|m| matching_labels(&g, m)).collect::<Vec<_>>(),
                "maximal_matchings": maximal.iter().map(|m| matching_labels(&g, m)).collect::<Vec<_>>(),
                "minimum_covers": covers,
                "hall": {
                    "left": hall_condition(&g, Side::Left, &budget)?,
                    "right": hall_condition(&g, Side::Right, &budget)?,
                },
            })
        }
        Command::Experiment {
            nl,
            nr,
            p,
            trials,
            seed,
            out: csv_path,
        } => {
            let cfg = TrialConfig {
                n_left: nl,
                n_right: nr,
                edge_probability: p,
                trials,
                rng_seed: seed,
            };
            let report = run_trials(&cfg)?;
            if let Some(path) = &csv_path {
                let file = File::create(path).map_err(|e| io_failure(path, e))?;
                write_csv(&report, BufWriter::new(file)).map_err(with_path(path))?;
            }
            serde_json::to_value(&report).expect("report serializes")
        }
        Command::CorpusVerify { max_vertices } => {
            let summary = corpus_verify(max_vertices)?;
            for s in &summary.suites {
                writeln!(err, "{}", s.line()).ok();
            }
            let code = if summary.passed() { 0 } else { 1 };
            emit(
                out,
                &serde_json::to_value(&summary).expect("summary serializes"),
            )?;
            return Ok(code);
        }
    };
    emit(out, &value)?;
    Ok(0)
}

fn emit(out: &mut dyn Write, value: &serde_json::Value) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("JSON value serializes");
    writeln!(out, "{text}").map_err(|e| Failure {
        code: 2,
        message: e.to_string(),
    })
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code: 0 on success, 1 on domain errors, 2 on I/O, parse
/// and usage errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                write!(out, "{text}").ok();
            } else {
                write!(err, "{text}").ok();
            }
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            writeln!(err, "error: {}", f.message).ok();
            f.code
        }
    }
}
