//! `islide`: compute slide graphs, emit and verify theta seeds, run sweeps and seed searches.
//!
//! Exit codes: 0 pass, 1 domain verdict (exception, failed check, witness found), 2 usage or
//! parse error, 3 resource cap.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use islide_core::formats::{from_edge_list, from_graph6, to_dot, to_edge_list, to_graph6};
use islide_core::graph::{make_named_graph, set_to_vec, NamedGraph};
use islide_core::independence::minimum_maximal_independent_sets;
use islide_core::reconfig::slide_graphs;
use islide_core::search::{scan, SearchOptions};
use islide_core::seeds::{
    planar_seed, seed_for, seed_from_line_graph, verify_theta_seed_with, Dispatch, SeedError,
    SeedResult,
};
use islide_core::{
    contains_induced, i_graph, is_isomorphic, line_graph, theta, verify_table, Graph,
    ReconfigError, RotationSystem, ThetaSpec,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "islide",
    version,
    about = "i-graphs and α-graphs of small graphs, with theta-graph seeds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the i-graph (or α-graph) of a graph.
    Compute {
        #[command(flatten)]
        input: Input,
        /// Use maximum independent sets instead of minimum maximal ones.
        #[arg(long)]
        alpha: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Build the seed for θ(j,k,l).
    Seed {
        j: usize,
        k: usize,
        l: usize,
        /// Check the seed against the theta graph and its trace.
        #[arg(long)]
        verify: bool,
        /// Prefer the general construction where several apply.
        #[arg(long)]
        general: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Wheel, fan and line-graph sweeps plus random checks of the two-set bound.
    Lemmas {
        #[arg(long, default_value_t = 10)]
        wheel_max: usize,
        #[arg(long, default_value_t = 10)]
        fan_max: usize,
        #[arg(long, default_value_t = 6)]
        line_max: usize,
        /// Random graphs with i = 2 to test against the edge-count bound.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
    /// Exhaustive scan for graphs whose i-graph is the target.
    Search {
        /// Target in graph6.
        #[arg(long, conflicts_with = "theta", required_unless_present = "theta")]
        target: Option<String>,
        /// Target θ(j,k,l).
        #[arg(long, num_args = 3, value_names = ["J", "K", "L"])]
        theta: Option<Vec<usize>>,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long)]
        connected: bool,
        /// Report every witness, not just the first.
        #[arg(long)]
        all: bool,
        /// Exit 1 if any witness is found.
        #[arg(long)]
        expect_none: bool,
        /// Worker threads (default: all cores).
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        progress: bool,
    },
    /// Verify every theta spec up to a vertex bound.
    Table {
        #[arg(long, default_value_t = 14)]
        max_total: usize,
        /// Also scan for seeds of the exceptions up to this order (0 skips).
        #[arg(long, default_value_t = 0)]
        search_max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Seed for a diamond-free line graph, via its root.
    Lineseed {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Seed for a cubic bipartite plane graph, via its dual.
    Dualseed {
        #[command(flatten)]
        input: Input,
        /// Rotation file: one `v: a-b c-d ...` line per vertex.
        #[arg(long)]
        rotation: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Edge-list file (`n`, then one `u v` per line); `-` reads stdin.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Graph in graph6.
    #[arg(long)]
    g6: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Graph6,
    Text,
}

enum Failure {
    Verdict(String),
    Usage(String),
    Cap(String),
}

type Outcome = Result<(), Failure>;

impl From<ReconfigError> for Failure {
    fn from(e: ReconfigError) -> Self {
        match e {
            ReconfigError::Cap(c) => Failure::Cap(c.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn read_text(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(usage)
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
    }
}

fn load(input: &Input) -> Result<Graph, Failure> {
    match (&input.input, &input.g6) {
        (Some(path), None) => from_edge_list(&read_text(path)?).map_err(usage),
        (None, Some(s)) => from_graph6(s).map_err(usage),
        _ => Err(usage("give exactly one of --input and --g6")),
    }
}

fn g6(g: &Graph) -> String {
    to_graph6(g).unwrap_or_else(|_| "-".into())
}

fn print_json(v: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("json values serialize")
    );
}

fn compute(input: &Input, alpha: bool, format: Format) -> Outcome {
    let g = load(input)?;
    let (report, ig, ag) = slide_graphs(&g)?;
    let sg = if alpha { ag } else { ig };
    let kind = if alpha { "alpha_graph" } else { "i_graph" };
    match format {
        Format::Json => print_json(&json!({
            "i": report.i,
            "alpha": report.alpha,
            "i_set_count": report.i_sets.len(),
            "alpha_set_count": report.alpha_sets.len(),
            "mis_count": report.total_mis_count,
            "well_covered": report.is_well_covered(),
            "kind": kind,
            "slide_graph": sg.to_json(),
        })),
        Format::Dot => print!("{}", sg.to_dot(kind)),
        Format::Graph6 => match &sg.skeleton {
            Some(s) => println!("{}", g6(s)),
            None => {
                return Err(Failure::Cap(format!(
                    "{} nodes do not fit in graph6 output",
                    sg.order()
                )))
            }
        },
        Format::Text => {
            println!(
                "i = {}, alpha = {}, {} i-sets, {} alpha-sets",
                report.i,
                report.alpha,
                report.i_sets.len(),
                report.alpha_sets.len()
            );
            println!("{kind}: {} nodes, {} edges", sg.order(), sg.edges.len());
            for x in 0..sg.order() {
                println!("  {x}: {}", sg.node_label(x));
            }
            for e in &sg.edges {
                println!("  {} -- {}  (v{} > v{})", e.a, e.b, e.from, e.to);
            }
        }
    }
    Ok(())
}

fn seed(j: usize, k: usize, l: usize, verify: bool, general: bool, format: Format) -> Outcome {
    let spec = ThetaSpec::new(j, k, l).map_err(usage)?;
    let dispatch = if general {
        Dispatch::General
    } else {
        Dispatch::MostSpecific
    };
    let (gbar, trace) = match seed_for(spec, dispatch) {
        SeedResult::Realizable { gbar, trace } => (gbar, trace),
        SeedResult::NotRealizable(e) => {
            println!("{e}");
            return Err(Failure::Verdict(format!("{spec} is not an i-graph")));
        }
        SeedResult::InvalidSpec(msg) => return Err(Failure::Usage(msg)),
    };
    let verification = if verify {
        match verify_theta_seed_with(spec, dispatch) {
            Ok(v) => Some(v),
            Err(other) => return Err(Failure::Verdict(format!("{other:?}"))),
        }
    } else {
        None
    };
    let g = gbar.complement();
    match format {
        Format::Json => print_json(&json!({
            "spec": spec,
            "construction_id": trace.construction_id,
            "gbar": { "n": gbar.order(), "edges": gbar.edges(), "graph6": g6(&gbar) },
            "g": { "n": g.order(), "edges": g.edges(), "graph6": g6(&g) },
            "trace": trace.to_json(),
            "verification": verification,
        })),
        Format::Dot => print!(
            "{}",
            to_dot(&gbar, "gbar", Some(&trace.vertex_names(gbar.order())))
        ),
        Format::Graph6 => {
            println!("{}", g6(&gbar));
            println!("{}", g6(&g));
        }
        Format::Text => {
            println!(
                "{spec}: {} on {} vertices",
                trace.construction_id,
                gbar.order()
            );
            print!("{}", to_edge_list(&gbar));
        }
    }
    if let Some(v) = verification {
        let verdict = if v.passed { "pass" } else { "FAIL" };
        eprintln!(
            "verify {spec}: {verdict}, i = {}, {} i-sets",
            v.i, v.i_set_count
        );
        if !v.passed {
            return Err(Failure::Verdict(format!(
                "failed clauses: {:?}",
                v.failures()
            )));
        }
    }
    Ok(())
}

fn check(ok: bool, what: String, failures: &mut usize) {
    println!("{} {what}", if ok { "pass" } else { "FAIL" });
    if !ok {
        *failures += 1;
    }
}

fn lemmas(wheel_max: usize, fan_max: usize, line_max: usize, samples: usize, seed: u64) -> Outcome {
    if wheel_max > 63 || fan_max > 63 || line_max > 7 {
        return Err(usage("bounds: wheel and fan at most 63, line at most 7"));
    }
    let mut failures = 0;
    for k in 4..=wheel_max {
        let g = make_named_graph(NamedGraph::Wheel(k))
            .map_err(usage)?
            .complement();
        let (_, ig, ag) = slide_graphs(&g)?;
        let c = make_named_graph(NamedGraph::Cycle(k)).map_err(usage)?;
        let ok = [ig, ag]
            .iter()
            .all(|s| s.skeleton.as_ref().is_some_and(|s| is_isomorphic(s, &c)));
        check(
            ok,
            format!(
                "wheel: i-graph and α-graph of complement(W_{}) are C_{k}",
                k + 1
            ),
            &mut failures,
        );
    }
    for k in 2..=fan_max {
        let g = make_named_graph(NamedGraph::Fan(k))
            .map_err(usage)?
            .complement();
        let ig = i_graph(&g)?;
        let p = make_named_graph(NamedGraph::Path(k - 1)).map_err(usage)?;
        let ok = ig.skeleton.as_ref().is_some_and(|s| is_isomorphic(s, &p));
        check(
            ok,
            format!("fan: i-graph of complement(K_1 + P_{k}) is P_{}", k - 1),
            &mut failures,
        );
    }
    let mut line_count = 0;
    let mut line_bad = 0;
    for n in 2..=line_max {
        let mut seen = std::collections::HashSet::new();
        for f in islide_core::search::enumerate_labeled_graphs(n, true).map_err(usage)? {
            if f.has_triangle() || !seen.insert(islide_core::canonical_form(&f).graph) {
                continue;
            }
            line_count += 1;
            let ig = i_graph(&f.complement())?;
            let l = line_graph(&f).map_err(usage)?;
            if !ig.skeleton.as_ref().is_some_and(|s| is_isomorphic(s, &l)) {
                line_bad += 1;
                println!("  line-graph mismatch for F with edges {:?}", f.edges());
            }
        }
    }
    check(
        line_bad == 0,
        format!("line: {line_count} connected triangle-free F on <= {line_max} vertices"),
        &mut failures,
    );
    let mut rng = StdRng::seed_from_u64(seed);
    let (mut taken, mut violations) = (0, 0);
    while taken < samples {
        let n = rng.gen_range(2..=12);
        let p = rng.gen_range(0.2..0.9);
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        let (i, sets) = minimum_maximal_independent_sets(&g);
        if i != 2 {
            continue;
        }
        taken += 1;
        let deg: usize = (0..n).map(|v| g.degree(v)).sum();
        if 2 * sets.len() > n * (n - 1) - deg {
            violations += 1;
        }
    }
    check(
        violations == 0,
        format!("bound: {taken} random graphs with i = 2 (seed {seed})"),
        &mut failures,
    );
    if failures > 0 {
        return Err(Failure::Verdict(format!("{failures} checks failed")));
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn search(
    target: Option<&str>,
    theta_args: Option<&[usize]>,
    max_n: usize,
    connected: bool,
    all: bool,
    expect_none: bool,
    threads: Option<usize>,
    progress: bool,
) -> Outcome {
    let target = match (target, theta_args) {
        (Some(s), None) => from_graph6(s).map_err(usage)?,
        (None, Some(&[j, k, l])) => {
            theta(ThetaSpec::sorted(j, k, l).map_err(usage)?).map_err(usage)?
        }
        _ => return Err(usage("give --target or --theta J K L")),
    };
    let mut opts = SearchOptions::new(max_n);
    opts.connected_only = connected;
    opts.all_witnesses = all;
    opts.stop_at_first = !all && !expect_none;
    opts.progress = progress;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
        .map_err(usage)?;
    let report = pool
        .install(|| scan(std::slice::from_ref(&target), opts))
        .map_err(usage)?
        .remove(0);
    print_json(&report.to_json());
    if expect_none && !report.witnesses.is_empty() {
        return Err(Failure::Verdict(format!(
            "witness found on {} vertices",
            report.witnesses[0].order()
        )));
    }
    Ok(())
}

fn table(max_total: usize, search_max_n: usize, format: Format) -> Outcome {
    let report = verify_table(max_total, search_max_n, search_max_n > 0).map_err(usage)?;
    if format == Format::Json {
        print_json(&serde_json::to_value(&report).expect("json values serialize"));
    } else {
        for row in &report.rows {
            println!(
                "{:<12} {:<28} {:<10} {} {}",
                row.spec.to_string(),
                row.verdict,
                row.construction.as_deref().unwrap_or("-"),
                if row.passed { "ok" } else { "FAIL" },
                row.detail
            );
        }
        println!("{} specs, all passed: {}", report.rows.len(), report.passed);
    }
    if !report.passed {
        return Err(Failure::Verdict("table verification failed".into()));
    }
    Ok(())
}

fn seed_failure(e: SeedError) -> Failure {
    match e {
        SeedError::ContainsDiamond => {
            Failure::Verdict("diamond-found: the graph has an induced diamond".into())
        }
        SeedError::Cap(c) => Failure::Cap(c.to_string()),
        other => Failure::Verdict(other.to_string()),
    }
}

fn emit_seed(seed: &Graph, format: Format, summary: serde_json::Value) {
    match format {
        Format::Json => print_json(&json!({
            "seed": { "n": seed.order(), "edges": seed.edges(), "graph6": g6(seed) },
            "verification": summary,
        })),
        Format::Dot => print!("{}", to_dot(seed, "seed", None)),
        Format::Graph6 => println!("{}", g6(seed)),
        Format::Text => {
            print!("{}", to_edge_list(seed));
            eprintln!("{summary}");
        }
    }
}

fn lineseed(input: &Input, format: Format) -> Outcome {
    let h = load(input)?;
    let seed = seed_from_line_graph(&h).map_err(seed_failure)?;
    let (report, ig, _) = slide_graphs(&seed)?;
    let ok = ig.skeleton.as_ref().is_some_and(|s| is_isomorphic(s, &h));
    emit_seed(
        &seed,
        format,
        json!({ "i": report.i, "alpha": report.alpha, "i_set_count": ig.order(), "i_graph_matches": ok }),
    );
    if !ok {
        return Err(Failure::Verdict(
            "i-graph of the seed does not match the input".into(),
        ));
    }
    Ok(())
}

fn dualseed(input: &Input, rotation: &PathBuf, format: Format) -> Outcome {
    let g = load(input)?;
    let rot = RotationSystem::parse(&g, &read_text(rotation)?).map_err(usage)?;
    let ps = planar_seed(&g, &rot).map_err(seed_failure)?;
    let (report, ig, _) = slide_graphs(&ps.h)?;
    let sk = ig.skeleton.as_ref();
    let contains = sk.is_some_and(|s| contains_induced(s, &g));
    let equal = sk.is_some_and(|s| is_isomorphic(s, &g));
    let faces: Vec<Vec<usize>> = ig.nodes.iter().map(|&s| set_to_vec(s)).collect();
    emit_seed(
        &ps.h,
        format,
        json!({
            "i": report.i,
            "alpha": report.alpha,
            "i_set_count": ig.order(),
            "dual_faces_as_i_sets": faces,
            "contains_input_induced": contains,
            "isomorphic_to_input": equal,
        }),
    );
    if !contains || report.i != 3 {
        return Err(Failure::Verdict("planar seed check failed".into()));
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Compute {
            input,
            alpha,
            format,
        } => compute(&input, alpha, format),
        Command::Seed {
            j,
            k,
            l,
            verify,
            general,
            format,
        } => seed(j, k, l, verify, general, format),
        Command::Lemmas {
            wheel_max,
            fan_max,
            line_max,
            samples,
            seed,
        } => lemmas(wheel_max, fan_max, line_max, samples, seed),
        Command::Search {
            target,
            theta,
            max_n,
            connected,
            all,
            expect_none,
            threads,
            progress,
        } => search(
            target.as_deref(),
            theta.as_deref(),
            max_n,
            connected,
            all,
            expect_none,
            threads,
            progress,
        ),
        Command::Table {
            max_total,
            search_max_n,
            format,
        } => table(max_total, search_max_n, format),
        Command::Lineseed { input, format } => lineseed(&input, format),
        Command::Dualseed {
            input,
            rotation,
            format,
        } => dualseed(&input, &rotation, format),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verdict(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("resource cap: {msg}");
            ExitCode::from(3)
        }
    }
}
