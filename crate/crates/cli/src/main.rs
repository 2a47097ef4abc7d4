use clap::{error::ErrorKind, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use threeev_core::constructions::{
    affine_geometry_design, cone_over, graph_from_design, petersen, rook_graph, shrikhande, total_graph,
    triangular_graph, van_dam_fano, Design,
};
use threeev_core::error::CertifyError;
use threeev_core::feasibility::{
    enumerate, family_comp, family_switch, format_table, Candidate, Filters, TableRow,
};
use threeev_core::graph::{read_graph6_str, valency_partition, Graph};
use threeev_core::nonexistence::{annotate_existence, refute, Refutation, Source};
use threeev_core::spectral::{certification_report, PredictedEigenvalue};
use threeev_core::star::{problem_30, problem_30_smoke, problem_36, search_corpus, StarCheckpoint};

#[derive(Parser)]
#[command(name = "threeev", version, about = "Graphs with three distinct adjacency eigenvalues")]
struct Cli {
    /// Worker threads.
    #[arg(long, global = true, env = "THREEEV_JOBS", value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Certify each graph6 graph in a file ("-" for stdin) and print JSON reports.
    Certify { input: String },
    /// List feasible parameter sets.
    Feasible {
        #[arg(long)]
        max_n: i64,
        /// Keep complete bipartite and all θ₁ = 1 rows, skip the multiplicity bound.
        #[arg(long)]
        no_filters: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Feasibility table with the existence column, tab separated.
    Table {
        #[arg(long, default_value_t = 100)]
        max_n: i64,
    },
    /// Print a named graph as graph6.
    Construct {
        #[arg(value_enum)]
        name: Named,
        /// Prime for total-graph, size for rook and triangular.
        #[arg(long)]
        q: Option<u64>,
        /// Design file for `design` ("v b" header, then one block per line).
        #[arg(long)]
        design: Option<PathBuf>,
    },
    /// Cone over each input graph.
    Cone { input: String },
    /// Complement of each input graph.
    Complement { input: String },
    /// Switch each input graph with respect to a vertex set or a valency class.
    Switch {
        input: String,
        #[arg(long, value_delimiter = ',', conflicts_with = "class")]
        set: Vec<usize>,
        /// Valency class, 1 = largest valency.
        #[arg(long)]
        class: Option<usize>,
    },
    /// Star complement search.
    StarSearch {
        #[arg(long, required_unless_present = "bundled", conflicts_with = "bundled")]
        complement: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "complement")]
        theta: Option<i64>,
        #[arg(long, requires = "complement")]
        multiplicity: Option<usize>,
        /// Ones required on a vertex range, "start..end:count"; repeatable.
        #[arg(long = "count", value_parser = parse_count)]
        counts: Vec<(Vec<usize>, usize)>,
        #[arg(long, value_enum)]
        bundled: Option<Bundled>,
        /// Stop after this many cliques per complement.
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Write one graph6 file per graph and manifest.json here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Refutation transcripts for candidates (JSON list, or enumerated up to --max-n).
    Nonexist {
        #[arg(long, conflicts_with_all = ["max_n", "verify"])]
        candidates: Option<PathBuf>,
        #[arg(long)]
        max_n: Option<i64>,
        /// Re-verify transcripts from a JSON file written by this command.
        #[arg(long, conflicts_with = "max_n")]
        verify: Option<PathBuf>,
    },
    /// Parameters from the infinite families.
    Families {
        #[command(subcommand)]
        family: Family,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Graphs whose complements also have three eigenvalues.
    Comp {
        #[arg(long)]
        t: i64,
    },
    /// Graphs that switch to three-eigenvalue graphs.
    Switch {
        #[arg(long)]
        s: i64,
        #[arg(long)]
        t: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Named {
    Petersen,
    PetersenCone,
    Shrikhande,
    ShrikhandeCone,
    Rook,
    Triangular,
    VanDamFano,
    TotalGraph,
    Design,
}

#[derive(Clone, Copy, ValueEnum)]
enum Bundled {
    Star30,
    Star30Smoke,
    Star36,
}

macro_rules! emit {
    ($($t:tt)*) => {
        emit_raw(&format!("{}\n", format_args!($($t)*)))
    };
}

/// Writes to stdout; a closed pipe ends the process quietly.
fn emit_raw(s: &str) {
    use std::io::Write;
    if std::io::stdout().lock().write_all(s.as_bytes()).is_err() {
        std::process::exit(0);
    }
}

enum Failure {
    Negative(String),
    Input(String),
}

type Res = Result<(), Failure>;

fn input_err(e: impl std::fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

fn parse_count(s: &str) -> Result<(Vec<usize>, usize), String> {
    let bad = || format!("expected start..end:count, got {s:?}");
    let (range, count) = s.split_once(':').ok_or_else(bad)?;
    let (a, b) = range.split_once("..").ok_or_else(bad)?;
    let (a, b): (usize, usize) = (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
    Ok(((a..b).collect(), count.parse().map_err(|_| bad())?))
}

fn read_graphs(input: &str) -> Result<Vec<Graph>, Failure> {
    let text = if input == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(input_err)?;
        s
    } else {
        std::fs::read_to_string(input).map_err(|e| Failure::Input(format!("{input}: {e}")))?
    };
    let gs = read_graph6_str(&text).map_err(input_err)?;
    if gs.is_empty() {
        return Err(Failure::Input(format!("{input}: no graphs")));
    }
    Ok(gs)
}

fn print_graphs(gs: &[Graph]) {
    for g in gs {
        emit!("{}", g.to_graph6());
    }
}

fn certify_cmd(input: &str) -> Res {
    let mut failed = 0;
    for (i, g) in read_graphs(input)?.iter().enumerate() {
        let report = match certification_report(g) {
            Ok(mut r) => {
                r["three_eigenvalues"] = json!(true);
                r
            }
            Err(e) => {
                failed += 1;
                let mut r = json!({ "n": g.n(), "three_eigenvalues": false, "reason": e.to_string() });
                if let CertifyError::NotThreeEigenvalues(d) = e {
                    r["minimal_polynomial_degree"] = json!(d);
                }
                r
            }
        };
        let mut out = json!({ "index": i });
        out.as_object_mut().unwrap().extend(report.as_object().unwrap().clone());
        emit!("{out}");
    }
    match failed {
        0 => Ok(()),
        k => Err(Failure::Negative(format!("{k} graph(s) do not have three eigenvalues"))),
    }
}

fn filters(no_filters: bool) -> Filters {
    if no_filters {
        Filters::none()
    } else {
        Filters::default()
    }
}

fn feasible_cmd(max_n: i64, no_filters: bool, format: Format) -> Res {
    let cs = enumerate(max_n, filters(no_filters)).map_err(input_err)?;
    match format {
        Format::Json => emit!("{}", serde_json::to_string_pretty(&cs).expect("serializable")),
        Format::Text => cs.iter().for_each(|c| emit!("{c}")),
    }
    Ok(())
}

fn table_cmd(max_n: i64) -> Res {
    let cs = enumerate(max_n, Filters::default()).map_err(input_err)?;
    let rows: Vec<TableRow> = annotate_existence(&cs)
        .into_iter()
        .map(|a| {
            let comment = match (&a.comment[..], &a.source) {
                ("", Source::Refutation { method }) => format!("refuted ({})", json!(method).as_str().unwrap_or("")),
                ("", Source::Catalog { name }) => name.clone(),
                (c, _) => c.to_string(),
            };
            TableRow::from_candidate(&a.candidate, a.existence, comment)
        })
        .collect();
    emit_raw(&format_table(&rows));
    Ok(())
}

fn construct_cmd(name: Named, q: Option<u64>, design: Option<&Path>) -> Res {
    let need_q = || q.ok_or_else(|| Failure::Input("--q is required".into()));
    let g = match name {
        Named::Petersen => petersen(),
        Named::PetersenCone => cone_over(&petersen()),
        Named::Shrikhande => shrikhande(),
        Named::ShrikhandeCone => cone_over(&shrikhande()),
        Named::Rook => rook_graph(need_q()? as usize),
        Named::Triangular => triangular_graph(need_q()? as usize),
        Named::VanDamFano => van_dam_fano(),
        Named::TotalGraph => {
            let q = need_q()?;
            let d = affine_geometry_design(q).map_err(input_err)?;
            total_graph(&d, q as usize).map_err(input_err)?
        }
        Named::Design => {
            let path = design.ok_or_else(|| Failure::Input("--design is required".into()))?;
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            let d = Design::parse(&text).map_err(input_err)?;
            graph_from_design(&d).map_err(|e| Failure::Negative(e.to_string()))?
        }
    };
    print_graphs(&[g]);
    Ok(())
}

fn switch_cmd(input: &str, set: &[usize], class: Option<usize>) -> Res {
    let mut out = Vec::new();
    for g in read_graphs(input)? {
        let w: Vec<usize> = match class {
            Some(c) => {
                let p = valency_partition(&g);
                p.cells().get(c.wrapping_sub(1)).cloned().ok_or_else(|| Failure::Input(format!("no valency class {c}")))?
            }
            None if set.is_empty() => return Err(Failure::Input("give --set or --class".into())),
            None => set.to_vec(),
        };
        out.push(g.switch(&w).map_err(input_err)?);
    }
    print_graphs(&out);
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn star_cmd(
    complement: Option<&str>,
    theta: Option<i64>,
    m: Option<usize>,
    counts: &[(Vec<usize>, usize)],
    bundled: Option<Bundled>,
    limit: Option<usize>,
    checkpoint: Option<&Path>,
    out: Option<&Path>,
) -> Res {
    let (label, state): (Value, StarCheckpoint) = match (bundled, complement) {
        (Some(b), _) => {
            let p = match b {
                Bundled::Star30 => problem_30(),
                Bundled::Star30Smoke => problem_30_smoke(),
                Bundled::Star36 => problem_36(),
            };
            (json!(p.name), p.run(limit, checkpoint).map_err(input_err)?)
        }
        (None, Some(path)) => {
            let (Some(theta), Some(m)) = (theta, m) else {
                return Err(Failure::Input("--theta and --multiplicity are required".into()));
            };
            let cs = read_graphs(path)?;
            (json!(path), search_corpus(&cs, theta, m, counts, limit, checkpoint).map_err(input_err)?)
        }
        (None, None) => return Err(Failure::Input("give --complement or --bundled".into())),
    };
    let graphs = state.outcome.assembled();
    let mut files = Vec::new();
    if let Some(dir) = out {
        std::fs::create_dir_all(dir).map_err(input_err)?;
        for (i, g) in graphs.iter().enumerate() {
            let name = format!("graph_{i:03}.g6");
            std::fs::write(dir.join(&name), format!("{}\n", g.to_graph6())).map_err(input_err)?;
            files.push(name);
        }
    }
    let manifest = json!({
        "complement": label,
        "theta": state.theta,
        "m": state.m,
        "candidates": state.outcome.candidates,
        "cliques_tested": state.outcome.cliques_tested,
        "graphs_found": graphs.len(),
        "graphs": graphs.iter().map(Graph::to_graph6).collect::<Vec<_>>(),
        "files": files,
    });
    let text = serde_json::to_string_pretty(&manifest).expect("serializable");
    if let Some(dir) = out {
        std::fs::write(dir.join("manifest.json"), format!("{text}\n")).map_err(input_err)?;
    }
    emit!("{text}");
    if graphs.is_empty() {
        return Err(Failure::Negative("no graphs found".into()));
    }
    Ok(())
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn nonexist_cmd(candidates: Option<&Path>, max_n: Option<i64>, verify: Option<&Path>) -> Res {
    if let Some(path) = verify {
        let rs: Vec<Refutation> = read_json(path)?;
        let results: Vec<Value> =
            rs.iter().map(|r| json!({ "candidate": r.candidate.to_string(), "verified": r.verify() })).collect();
        emit!("{}", serde_json::to_string_pretty(&results).expect("serializable"));
        return match rs.iter().filter(|r| !r.verify()).count() {
            0 => Ok(()),
            k => Err(Failure::Negative(format!("{k} transcript(s) failed verification"))),
        };
    }
    let cs: Vec<Candidate> = match (candidates, max_n) {
        (Some(p), _) => read_json(p)?,
        (None, Some(n)) => enumerate(n, Filters::default()).map_err(input_err)?,
        (None, None) => return Err(Failure::Input("give --candidates, --max-n or --verify".into())),
    };
    let rs: Vec<Refutation> = cs.iter().filter_map(refute).collect();
    emit!("{}", serde_json::to_string_pretty(&rs).expect("serializable"));
    Ok(())
}

fn predicted(p: &[PredictedEigenvalue]) -> Value {
    json!(p.iter().map(|e| json!({ "value": e.value.to_string(), "multiplicity": e.at_least })).collect::<Vec<_>>())
}

fn families_cmd(f: &Family) -> Res {
    let out = match *f {
        Family::Comp { t } => {
            let c = family_comp(t).map_err(|e| Failure::Negative(format!("{e:?}")))?;
            let p = c.predicted_complement_spectrum().map_err(|e| Failure::Negative(e.to_string()))?;
            json!({ "candidate": c, "spectrum": c.spectrum().to_string(), "complement_spectrum": predicted(&p) })
        }
        Family::Switch { s, t } => {
            let c = family_switch(s, t).map_err(|e| Failure::Negative(format!("{e:?}")))?;
            let p = c.predicted_switch_spectrum().map_err(|e| Failure::Negative(e.to_string()))?;
            json!({ "candidate": c, "spectrum": c.spectrum().to_string(), "switched_spectrum": predicted(&p) })
        }
    };
    emit!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    Ok(())
}

fn run(cli: Cli) -> Res {
    match &cli.cmd {
        Cmd::Certify { input } => certify_cmd(input),
        Cmd::Feasible { max_n, no_filters, format } => feasible_cmd(*max_n, *no_filters, *format),
        Cmd::Table { max_n } => table_cmd(*max_n),
        Cmd::Construct { name, q, design } => construct_cmd(*name, *q, design.as_deref()),
        Cmd::Cone { input } => {
            print_graphs(&read_graphs(input)?.iter().map(cone_over).collect::<Vec<_>>());
            Ok(())
        }
        Cmd::Complement { input } => {
            print_graphs(&read_graphs(input)?.iter().map(Graph::complement).collect::<Vec<_>>());
            Ok(())
        }
        Cmd::Switch { input, set, class } => switch_cmd(input, set, *class),
        Cmd::StarSearch { complement, theta, multiplicity, counts, bundled, limit, checkpoint, out } => star_cmd(
            complement.as_deref(),
            *theta,
            *multiplicity,
            counts,
            *bundled,
            *limit,
            checkpoint.as_deref(),
            out.as_deref(),
        ),
        Cmd::Nonexist { candidates, max_n, verify } => nonexist_cmd(candidates.as_deref(), *max_n, verify.as_deref()),
        Cmd::Families { family } => families_cmd(family),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(64),
            };
        }
    };
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(j as usize).build_global().expect("thread pool");
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
