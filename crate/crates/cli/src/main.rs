use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cograph::oracle::{self, EXHAUSTIVE_MAX_VERTICES};
use cograph::random::{random_cotree, random_threshold};
use cograph::threshold::threshold_min_control_with;
use cograph::{
    count_min_control_sets, degree_partition, enumerate_min_control_sets, is_controllable,
    min_control_size, modal_matrix, parse_cotree, parse_expr, parse_threshold, pbh_check,
    read_edge_list, recognize, select_min_control_set, serialize_cotree, sibling_partition,
    spectrum, threshold_to_graph, CoTree, ControlError, ControlSet, Graph, IntegerMatrix,
    P4Witness, ThresholdSequence, TieRule,
};
use num_bigint::BigUint;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(
    name = "cograph",
    version,
    about = "Cotrees, exact Laplacian spectra and minimum leader sets for cographs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit a single JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical cotree, or an induced P4 if the graph is not a cograph.
    Recognize(Input),
    /// Laplacian eigenvalues with multiplicities.
    Spectrum {
        #[command(flatten)]
        input: Input,
        /// Also print the integer modal matrix (one column per nontrivial eigenvalue).
        #[arg(long)]
        modal: bool,
    },
    /// Sibling partition cells.
    Partition {
        #[command(flatten)]
        input: Input,
        /// Also print the degree sequence and degree partition.
        #[arg(long)]
        degree: bool,
    },
    /// Minimum number of leaders and a minimum leader set.
    Leaders {
        #[command(flatten)]
        input: Input,
        /// Which vertex of each sibling cell is left out.
        #[arg(long, value_enum, default_value_t = Tie::Lowest)]
        tie: Tie,
        /// Enumerate every minimum set.
        #[arg(long)]
        all: bool,
    },
    /// Decide whether a leader set makes the dynamics controllable.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Comma-separated 1-based vertex ids, e.g. 1,6,7.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        set: Vec<usize>,
        /// Also run the eigenvector and Kalman rank tests and require agreement.
        #[arg(long)]
        cross_check: bool,
    },
    /// Check every result against brute force (at most 10 vertices).
    Oracle(Input),
    /// Emit a random canonical cotree or threshold sequence.
    Random {
        #[arg(long)]
        nodes: usize,
        #[arg(long)]
        seed: u64,
        /// Emit a connected threshold sequence instead of a cotree.
        #[arg(long)]
        threshold: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Expression over vertex counts, e.g. "(.+.)*(.+.+.)" or "2*3".
    #[arg(long)]
    expr: Option<String>,
    /// Cotree text, e.g. "1(0(1,2),3)".
    #[arg(long)]
    cotree: Option<String>,
    /// Threshold construction bits, e.g. 0101001.
    #[arg(long)]
    threshold: Option<String>,
    /// Edge-list file: "n m" then m lines "u v", 1-based.
    #[arg(long)]
    edges: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Tie {
    Lowest,
    Highest,
}

impl From<Tie> for TieRule {
    fn from(t: Tie) -> TieRule {
        match t {
            Tie::Lowest => TieRule::LowestIds,
            Tie::Highest => TieRule::HighestIds,
        }
    }
}

enum Failure {
    /// Input is well formed but the request cannot be met.
    Domain(String),
    /// Input is malformed.
    Usage(String),
}

impl Failure {
    fn domain(e: impl Display) -> Self {
        Failure::Domain(e.to_string())
    }

    fn usage(e: impl Display) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<ControlError> for Failure {
    fn from(e: ControlError) -> Self {
        match e {
            ControlError::VertexOutOfRange { .. } | ControlError::DuplicateVertex(_) => {
                Failure::usage(e)
            }
            _ => Failure::domain(e),
        }
    }
}

struct Loaded {
    graph: Graph,
    tree: Result<CoTree, P4Witness>,
    threshold: Option<ThresholdSequence>,
}

impl Loaded {
    fn cotree(&self) -> Result<&CoTree, Failure> {
        self.tree
            .as_ref()
            .map_err(|w| Failure::Domain(format!("not a cograph: induced P4 {w}")))
    }
}

fn load(input: &Input) -> Result<Loaded, Failure> {
    let from_tree = |t: CoTree| Loaded {
        graph: t.to_graph(),
        tree: Ok(t),
        threshold: None,
    };
    if let Some(text) = &input.expr {
        return parse_expr(text)
            .map(from_tree)
            .map_err(|e| Failure::usage(format!("--expr: {e}")));
    }
    if let Some(text) = &input.cotree {
        let t = parse_cotree(text).map_err(|e| Failure::usage(format!("--cotree: {e}")))?;
        return Ok(from_tree(t.canonicalize()));
    }
    if let Some(text) = &input.threshold {
        let seq = parse_threshold(text).map_err(|e| Failure::usage(format!("--threshold: {e}")))?;
        let graph = threshold_to_graph(&seq);
        return Ok(Loaded {
            tree: Ok(recognize(&graph).expect("threshold graphs are cographs")),
            graph,
            threshold: Some(seq),
        });
    }
    let path = input.edges.as_ref().expect("clap enforces one input");
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let graph =
        read_edge_list(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    Ok(Loaded {
        tree: recognize(&graph),
        graph,
        threshold: None,
    })
}

fn one_based(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

fn join_ids(vs: &[usize]) -> String {
    vs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn biguint_json(x: &BigUint) -> Value {
    match u64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

fn matrix_json(m: &IntegerMatrix) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| i64::try_from(x).map_or_else(|_| json!(x.to_string()), |v| json!(v)))
                .collect()
        })
        .collect();
    Value::Array(rows)
}

/// Text lines and the JSON object built side by side.
#[derive(Default)]
struct Report {
    lines: Vec<String>,
    fields: Map<String, Value>,
}

impl Report {
    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn set(&mut self, key: &str, v: Value) {
        self.fields.insert(key.to_string(), v);
    }

    fn emit(self, json: bool) {
        let text = if json {
            Value::Object(self.fields).to_string()
        } else {
            self.lines.join("\n")
        };
        // A reader that closed the pipe early is not an error.
        if let Err(e) = writeln!(std::io::stdout().lock(), "{text}") {
            if e.kind() != std::io::ErrorKind::BrokenPipe {
                eprintln!("error: writing output: {e}");
            }
        }
    }
}

fn header(r: &mut Report, loaded: &Loaded) {
    r.set("n", json!(loaded.graph.vertex_count()));
    if let Ok(t) = &loaded.tree {
        r.set("cotree", json!(serialize_cotree(t)));
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let mut r = Report::default();
    match &cli.command {
        Command::Recognize(input) => {
            let loaded = load(input)?;
            header(&mut r, &loaded);
            match &loaded.tree {
                Ok(t) => r.line(serialize_cotree(t)),
                Err(w) => {
                    r.set("cotree", Value::Null);
                    r.set("witness", json!(one_based(&w.vertices())));
                    if cli.json {
                        r.emit(true);
                    }
                    return Err(Failure::Domain(format!("not a cograph: induced P4 {w}")));
                }
            }
        }
        Command::Spectrum { input, modal } => {
            let loaded = load(input)?;
            let t = loaded.cotree()?;
            header(&mut r, &loaded);
            let eig = spectrum(t);
            let grouped = eig.grouped();
            r.set("spectrum", json!(grouped));
            r.line("eigenvalue multiplicity");
            for (lambda, mult) in &grouped {
                r.line(format!("{lambda} {mult}"));
            }
            if *modal {
                let v = modal_matrix(t);
                r.set("modal", matrix_json(&v));
                r.set("modal_eigenvalues", json!(eig.nontrivial()));
                let labels: Vec<String> =
                    eig.nontrivial().iter().map(ToString::to_string).collect();
                r.line(format!(
                    "modal matrix, columns for eigenvalues {}:",
                    labels.join(" ")
                ));
                r.line(v.to_string().trim_end());
            }
        }
        Command::Partition { input, degree } => {
            let loaded = load(input)?;
            let t = loaded.cotree()?;
            header(&mut r, &loaded);
            let cells: Vec<Vec<usize>> = sibling_partition(t)
                .cells()
                .iter()
                .map(|c| one_based(c))
                .collect();
            r.set("cells", json!(cells));
            r.line(format!("{} sibling cells", cells.len()));
            for c in &cells {
                r.line(format!("{{{}}}", join_ids(c)));
            }
            if *degree {
                let degrees = loaded.graph.degree_sequence();
                let dp = degree_partition(&loaded.graph);
                let dcells: Vec<Vec<usize>> = dp.cells().iter().map(|c| one_based(c)).collect();
                r.set("degrees", json!(degrees));
                r.set("degree_cells", json!(dcells));
                r.set("degree_values", json!(dp.degrees()));
                r.line(format!("degree sequence ({})", join_ids(&degrees)));
                for (c, d) in dcells.iter().zip(dp.degrees()) {
                    r.line(format!("degree {d}: {{{}}}", join_ids(c)));
                }
                if loaded.threshold.is_none() {
                    r.line("note: degree cells match sibling cells only for threshold graphs");
                }
            }
        }
        Command::Leaders { input, tie, all } => {
            let loaded = load(input)?;
            let t = loaded.cotree()?;
            header(&mut r, &loaded);
            let tie = TieRule::from(*tie);
            let (size, set) = match &loaded.threshold {
                Some(seq) => threshold_min_control_with(seq, tie)?,
                None => (min_control_size(t)?, select_min_control_set(t, tie)?),
            };
            r.set("min_size", json!(size));
            r.line(format!("min_size {size}"));
            r.line(format!("set {set}"));
            if *all {
                let count = count_min_control_sets(t)?;
                let sets: Vec<Vec<usize>> = enumerate_min_control_sets(t)?
                    .map(|c| c.one_based_sorted())
                    .collect();
                r.set("count", biguint_json(&count));
                r.line(format!("count {count}"));
                for s in &sets {
                    r.line(format!("{{{}}}", join_ids(s)));
                }
                r.set("sets", json!(sets));
            } else {
                r.set("sets", json!([set.one_based_sorted()]));
            }
        }
        Command::Verify {
            input,
            set,
            cross_check,
        } => {
            let loaded = load(input)?;
            let t = loaded.cotree()?;
            header(&mut r, &loaded);
            let c = ControlSet::from_one_based(set)?;
            c.check_range(t.vertex_count())?;
            let verdict = is_controllable(t, &c)?;
            r.set("set", json!(c.one_based_sorted()));
            r.set("controllable", json!(verdict));
            r.line(format!("controllable {verdict}"));
            if *cross_check {
                let pbh = pbh_check(t, &c)?;
                let rank = oracle::kalman_rank(&loaded.graph, &c).map_err(Failure::usage)?;
                let n = t.vertex_count();
                r.set("pbh", json!(pbh));
                r.set("kalman_rank", json!(rank));
                r.line(format!("pbh {pbh}"));
                r.line(format!("kalman_rank {rank}/{n}"));
                if pbh != verdict || (rank == n) != verdict {
                    r.emit(cli.json);
                    return Err(Failure::Domain(format!(
                        "checks disagree: cell test {verdict}, pbh {pbh}, kalman rank {rank}/{n}"
                    )));
                }
                r.line("all checks agree");
            }
        }
        Command::Oracle(input) => {
            let loaded = load(input)?;
            return run_oracle(cli.json, &loaded);
        }
        Command::Random {
            nodes,
            seed,
            threshold,
        } => {
            if *nodes == 0 {
                return Err(Failure::usage("--nodes must be at least 1"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            r.set("n", json!(nodes));
            if *threshold {
                let s = random_threshold(*nodes, &mut rng);
                r.set("threshold", json!(s.to_string()));
                r.line(s.to_string());
            } else {
                let t = random_cotree(*nodes, &mut rng);
                r.set("cotree", json!(serialize_cotree(&t)));
                r.line(serialize_cotree(&t));
            }
        }
    }
    r.emit(cli.json);
    Ok(())
}

fn run_oracle(json: bool, loaded: &Loaded) -> Result<(), Failure> {
    let g = &loaded.graph;
    let n = g.vertex_count();
    if n > EXHAUSTIVE_MAX_VERTICES {
        return Err(Failure::Domain(format!(
            "{n} vertices exceeds the oracle cap of {EXHAUSTIVE_MAX_VERTICES}"
        )));
    }
    let mut r = Report::default();
    header(&mut r, loaded);
    let mut checks = Map::new();
    let mut failed = Vec::new();
    let mut check = |r: &mut Report, name: &str, ok: bool, detail: String| {
        checks.insert(name.to_string(), json!(ok));
        r.line(format!(
            "{} {name}: {detail}",
            if ok { "ok  " } else { "FAIL" }
        ));
        if !ok {
            failed.push(name.to_string());
        }
    };

    let witness = oracle::find_p4(g);
    let recognized = loaded.tree.is_ok();
    check(
        &mut r,
        "recognition",
        recognized == witness.is_none(),
        match &witness {
            Some(w) => format!("induced P4 {w}"),
            None => "P4-free".to_string(),
        },
    );
    if let Ok(t) = &loaded.tree {
        check(
            &mut r,
            "round_trip",
            t.to_graph() == *g,
            "cotree rebuilds the graph".to_string(),
        );

        let poly = oracle::char_poly(&g.laplacian()).map_err(Failure::domain)?;
        let fast = spectrum(t);
        r.set("spectrum", json!(fast.grouped()));
        let roots = oracle::integer_roots(&poly);
        let expected: Vec<String> = fast.eigenvalues().iter().map(ToString::to_string).collect();
        let (ok, detail) = match roots {
            Ok(roots) => {
                let got: Vec<String> = roots.iter().map(ToString::to_string).collect();
                (got == expected, format!("roots {{{}}}", got.join(",")))
            }
            Err(e) => (false, e.to_string()),
        };
        check(&mut r, "spectrum", ok, detail);

        let v = modal_matrix(t);
        let l = g.laplacian();
        let lv = &l * &v;
        let lambdas = fast.nontrivial();
        let diag = IntegerMatrix::from_fn(n - 1, n - 1, |i, j| if i == j { lambdas[i] } else { 0 });
        check(
            &mut r,
            "eigenvectors",
            lv == &v * &diag,
            "L V = V diag".to_string(),
        );

        if t.is_connected() && n > 1 {
            let (k, sets) = oracle::exhaustive_min_sets(g).map_err(Failure::domain)?;
            let size = min_control_size(t)?;
            let mut fast_sets: Vec<Vec<usize>> = enumerate_min_control_sets(t)?
                .map(|c| c.one_based_sorted())
                .collect();
            fast_sets.sort();
            let mut slow_sets: Vec<Vec<usize>> =
                sets.iter().map(ControlSet::one_based_sorted).collect();
            slow_sets.sort();
            r.set("min_size", json!(size));
            r.set("sets", json!(fast_sets));
            check(
                &mut r,
                "min_size",
                k == size,
                format!("exhaustive {k}, cotree {size}"),
            );
            check(
                &mut r,
                "min_sets",
                fast_sets == slow_sets,
                format!(
                    "{} sets by enumeration, {} by search",
                    fast_sets.len(),
                    slow_sets.len()
                ),
            );
            let chosen = select_min_control_set(t, TieRule::LowestIds)?;
            let rank = oracle::kalman_rank(g, &chosen).map_err(Failure::domain)?;
            r.set("controllable", json!(rank == n));
            check(
                &mut r,
                "selected_set",
                rank == n,
                format!("{chosen} has Kalman rank {rank}/{n}"),
            );
        } else {
            r.line("skip control checks: graph is disconnected or trivial");
        }
    }
    r.set("checks", Value::Object(checks));
    r.emit(json);
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Domain(format!(
            "oracle checks failed: {}",
            failed.join(", ")
        )))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
