//! One line per acceptance criterion. Exits nonzero if any criterion fails.

mod common;

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{brute_mis, random_graph};
use islide_core::graph::{make_named_graph, members, obstruction_t, theta, NamedGraph};
use islide_core::independence::{minimum_maximal_independent_sets, triangle_isets_of_complement};
use islide_core::planar::fixtures;
use islide_core::search::{enumerate_labeled_graphs, scan, SearchOptions};
use islide_core::seeds::{
    apply_deletion, has_general_arm, house_seed, planar_seed, seed_for, verify_theta_seed,
    ConstructionId, Dispatch, SeedResult, ThetaException,
};
use islide_core::{
    alpha_graph, canonical_form, contains_induced, i_graph, independence_report, is_isomorphic,
    line_graph, Graph, SlideGraph, ThetaSpec,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const SWEEP_MAX_ORDER: usize = 14;
const SWEEP_BUDGET: Duration = Duration::from_secs(60);
const WHEEL_FAN_BUDGET: Duration = Duration::from_secs(1);
const LINE_BUDGET: Duration = Duration::from_secs(30);
const SCAN_MAX_N: usize = 7;
const SCAN_BUDGET_PER_TARGET: Duration = Duration::from_secs(600);
const BOUND_SAMPLES: usize = 1000;
const BOUND_MAX_N: usize = 12;
const INVARIANT_MAX_NODES: usize = 200;
const PRODUCT_MAX_TOTAL: usize = 10;
const PLANAR_BUDGET: Duration = Duration::from_secs(1);
const DELETION_SAMPLES: usize = 100;
const RNG_SEED: u64 = 0x5eed_2024;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn realizable_specs() -> Vec<ThetaSpec> {
    ThetaSpec::all_up_to(SWEEP_MAX_ORDER)
        .into_iter()
        .filter(|s| ThetaException::of(*s).is_none())
        .collect()
}

fn seed_complement(spec: ThetaSpec, dispatch: Dispatch) -> (Graph, ConstructionId) {
    match seed_for(spec, dispatch) {
        SeedResult::Realizable { gbar, trace } => (gbar, trace.construction_id),
        other => panic!("{spec}: {other:?}"),
    }
}

fn theta_sweep() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    let specs = realizable_specs();
    for &spec in &specs {
        match verify_theta_seed(spec) {
            Ok(r) => {
                let expected_i = if r.construction_id == ConstructionId::LINE_ROOT {
                    2
                } else {
                    3
                };
                if !r.passed || r.i != expected_i || r.i_set_count != spec.order() {
                    bad.push(format!("{spec}: {:?}", r.failures()));
                }
            }
            Err(e) => bad.push(format!("{spec}: {e:?}")),
        }
    }
    for e in ThetaException::all() {
        if !matches!(verify_theta_seed(e.spec()), Err(SeedResult::NotRealizable(x)) if x == e) {
            bad.push(format!("{} not reported as an exception", e.spec()));
        }
    }
    let took = start.elapsed();
    outcome(
        bad.is_empty() && took < SWEEP_BUDGET,
        format!(
            "{} specs, {} failures {:?}, {:.2}s",
            specs.len(),
            bad.len(),
            bad.first(),
            took.as_secs_f64()
        ),
    )
}

fn alpha_equalities() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for spec in realizable_specs() {
        let r = verify_theta_seed(spec).unwrap();
        let (gbar, id) = seed_complement(spec, Dispatch::MostSpecific);
        let seed_says_equal = match seed_for(spec, Dispatch::MostSpecific) {
            SeedResult::Realizable { trace, .. } => trace.alpha_equal,
            _ => unreachable!(),
        };
        if seed_says_equal {
            checked += 1;
            let ag = alpha_graph(&gbar.complement()).unwrap();
            let target = theta(spec).unwrap();
            if !ag
                .skeleton
                .as_ref()
                .is_some_and(|s| is_isomorphic(s, &target))
            {
                bad.push(format!("{spec} α-graph"));
            }
        }
        if matches!(id, ConstructionId::C_22l_a | ConstructionId::C_22l_b) {
            checked += 1;
            if r.alpha_matches {
                bad.push(format!("{spec} α-graph unexpectedly equals the i-graph"));
            }
        }
    }
    let (gbar, _) = seed_complement(ThetaSpec::new(2, 3, 5).unwrap(), Dispatch::MostSpecific);
    let alpha = independence_report(&gbar.complement()).unwrap().alpha;
    if alpha != 4 {
        bad.push(format!("θ(2,3,5) α = {alpha}"));
    }
    outcome(
        bad.is_empty(),
        format!("{checked} α checks, θ(2,3,5) α = {alpha}, failures {bad:?}"),
    )
}

fn wheels_and_fans() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for k in 4..=10 {
        let g = make_named_graph(NamedGraph::Wheel(k)).unwrap().complement();
        let cycle = make_named_graph(NamedGraph::Cycle(k)).unwrap();
        let ig = i_graph(&g).unwrap();
        let ag = alpha_graph(&g).unwrap();
        if !is_isomorphic(ig.skeleton.as_ref().unwrap(), &cycle)
            || !is_isomorphic(ag.skeleton.as_ref().unwrap(), &cycle)
        {
            bad.push(format!("wheel {k}"));
        }
    }
    for k in 2..=10 {
        let g = make_named_graph(NamedGraph::Fan(k)).unwrap().complement();
        let path = make_named_graph(NamedGraph::Path(k - 1)).unwrap();
        if !is_isomorphic(i_graph(&g).unwrap().skeleton.as_ref().unwrap(), &path) {
            bad.push(format!("fan {k}"));
        }
    }
    let took = start.elapsed();
    outcome(
        bad.is_empty() && took < WHEEL_FAN_BUDGET,
        format!(
            "C_4..C_10 and P_1..P_9, failures {bad:?}, {:.3}s",
            took.as_secs_f64()
        ),
    )
}

fn line_graph_theorem() -> Outcome {
    let start = Instant::now();
    let mut classes = 0;
    let mut bad = Vec::new();
    for n in 2..=6 {
        let mut seen = HashSet::new();
        for f in enumerate_labeled_graphs(n, true).unwrap() {
            if f.has_triangle() || !seen.insert(canonical_form(&f).graph) {
                continue;
            }
            classes += 1;
            let ig = i_graph(&f.complement()).unwrap();
            if !is_isomorphic(ig.skeleton.as_ref().unwrap(), &line_graph(&f).unwrap()) {
                bad.push(f.edges());
            }
        }
    }
    let took = start.elapsed();
    outcome(
        bad.is_empty() && took < LINE_BUDGET,
        format!(
            "{classes} connected triangle-free F, failures {bad:?}, {:.2}s",
            took.as_secs_f64()
        ),
    )
}

fn non_realizability() -> Outcome {
    let mut names: Vec<String> = Vec::new();
    let mut targets: Vec<Graph> = Vec::new();
    for e in [
        ThetaException::Diamond,
        ThetaException::K23,
        ThetaException::Kappa,
        ThetaException::Theta224,
        ThetaException::Theta233,
        ThetaException::Theta234,
        ThetaException::Theta333,
    ] {
        names.push(e.spec().to_string());
        targets.push(theta(e.spec()).unwrap());
    }
    names.push("𝔗".into());
    targets.push(obstruction_t());
    let mut opts = SearchOptions::new(SCAN_MAX_N);
    opts.stop_at_first = false;
    let reports = scan(&targets, opts).unwrap();
    let elapsed = Duration::from_secs_f64(reports[0].elapsed);
    let hits: Vec<String> = names
        .iter()
        .zip(&reports)
        .filter(|(_, r)| !r.witnesses.is_empty())
        .map(|(n, _)| n.clone())
        .collect();
    let budget = SCAN_BUDGET_PER_TARGET * targets.len() as u32;
    let expected: u64 = (1..=SCAN_MAX_N).map(|n| 1u64 << (n * (n - 1) / 2)).sum();
    outcome(
        hits.is_empty() && elapsed < budget && reports[0].graphs_examined == expected,
        format!(
            "{} targets, {} graphs each, targets with seeds {hits:?}, {:.1}s (bounded corroboration only)",
            targets.len(),
            reports[0].graphs_examined,
            elapsed.as_secs_f64()
        ),
    )
}

fn house_fixture() -> Outcome {
    let (gbar, trace) = house_seed();
    let g = gbar.complement();
    let ig = i_graph(&g).unwrap();
    let mut expected: Vec<u64> = trace.expected_labels.values().copied().collect();
    expected.sort_unstable();
    let house = make_named_graph(NamedGraph::House).unwrap();
    let iso = is_isomorphic(ig.skeleton.as_ref().unwrap(), &house);
    outcome(
        ig.nodes == expected && iso,
        format!("{} i-sets, skeleton is the house: {iso}", ig.order()),
    )
}

fn two_set_bound() -> Outcome {
    let mut rng = StdRng::seed_from_u64(RNG_SEED);
    let (mut samples, mut tries, mut violations) = (0, 0, 0);
    while samples < BOUND_SAMPLES {
        tries += 1;
        let n = rng.gen_range(2..=BOUND_MAX_N);
        let p = rng.gen_range(0.2..0.9);
        let g = random_graph(&mut rng, n, p);
        let (i, sets) = minimum_maximal_independent_sets(&g);
        if i != 2 {
            continue;
        }
        samples += 1;
        let degree_sum: usize = (0..n).map(|v| g.degree(v)).sum();
        if 2 * sets.len() > n * (n - 1) - degree_sum {
            violations += 1;
        }
    }
    outcome(
        violations == 0,
        format!("{samples} graphs with i = 2 ({tries} drawn), {violations} violations"),
    )
}

fn check_slide(sg: &SlideGraph, label: &str, count: &mut usize, bad: &mut Vec<String>) {
    if sg.order() > INVARIANT_MAX_NODES {
        return;
    }
    *count += 1;
    if let Some(v) = sg.invariant_violations().into_iter().next() {
        bad.push(format!("{label}: {v}"));
    }
}

fn iso_classes(n: usize) -> Vec<Graph> {
    let mut seen = HashSet::new();
    enumerate_labeled_graphs(n, false)
        .unwrap()
        .filter(|g| seen.insert(canonical_form(g).graph))
        .collect()
}

fn structural_invariants() -> Outcome {
    let mut count = 0;
    let mut bad = Vec::new();
    for spec in ThetaSpec::all_up_to(SWEEP_MAX_ORDER) {
        if ThetaException::of(spec).is_some() {
            continue;
        }
        let mut arms = vec![Dispatch::MostSpecific];
        if has_general_arm(spec) {
            arms.push(Dispatch::General);
        }
        for arm in arms {
            let g = seed_complement(spec, arm).0.complement();
            check_slide(
                &i_graph(&g).unwrap(),
                &spec.to_string(),
                &mut count,
                &mut bad,
            );
            check_slide(
                &alpha_graph(&g).unwrap(),
                &spec.to_string(),
                &mut count,
                &mut bad,
            );
        }
    }
    let mut rng = StdRng::seed_from_u64(RNG_SEED ^ 8);
    for _ in 0..500 {
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        check_slide(&i_graph(&g).unwrap(), "random", &mut count, &mut bad);
        check_slide(&alpha_graph(&g).unwrap(), "random", &mut count, &mut bad);
    }

    // Disjoint unions against the Cartesian product, node by node.
    let small: Vec<Graph> = (1..=PRODUCT_MAX_TOTAL / 2).flat_map(iso_classes).collect();
    let mut pairs = 0;
    for a in &small {
        for b in &small {
            if a.order() + b.order() > PRODUCT_MAX_TOTAL {
                continue;
            }
            pairs += 1;
            let u = a.disjoint_union(b).unwrap();
            let (ia, ib, iu) = (
                i_graph(a).unwrap(),
                i_graph(b).unwrap(),
                i_graph(&u).unwrap(),
            );
            let shift = a.order();
            let low = (1u64 << shift) - 1;
            let expected_nodes = {
                let mut v: Vec<u64> = ia
                    .nodes
                    .iter()
                    .flat_map(|&x| ib.nodes.iter().map(move |&y| x | y << shift))
                    .collect();
                v.sort_unstable();
                v
            };
            let brute_i: Vec<u64> = {
                let all = brute_mis(&u);
                let i = all.iter().map(|s| s.count_ones()).min().unwrap();
                all.into_iter().filter(|s| s.count_ones() == i).collect()
            };
            if iu.nodes != expected_nodes || iu.nodes != brute_i {
                bad.push(format!(
                    "union {:?} + {:?}: node sets differ",
                    a.edges(),
                    b.edges()
                ));
                continue;
            }
            for x in 0..iu.order() {
                for y in x + 1..iu.order() {
                    let (sx, sy) = (iu.nodes[x], iu.nodes[y]);
                    let (ax, ay) = (
                        ia.index_of(sx & low).unwrap(),
                        ia.index_of(sy & low).unwrap(),
                    );
                    let (bx, by) = (
                        ib.index_of(sx >> shift).unwrap(),
                        ib.index_of(sy >> shift).unwrap(),
                    );
                    let product_edge = ax == ay && ib.neighbors(bx).contains(&by)
                        || bx == by && ia.neighbors(ax).contains(&ay);
                    if product_edge != iu.neighbors(x).contains(&y) {
                        bad.push(format!(
                            "union {:?} + {:?}: edge mismatch",
                            a.edges(),
                            b.edges()
                        ));
                    }
                }
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{count} slide graphs, {pairs} union pairs with total order <= {PRODUCT_MAX_TOTAL}, failures {:?}", bad.first()),
    )
}

fn planar_pipeline() -> Outcome {
    let start = Instant::now();
    let (cube, rot) = fixtures::cube();
    let seed = planar_seed(&cube, &rot).unwrap();
    let ig = i_graph(&seed.h).unwrap();
    let cube_ok = ig.order() == 8 && is_isomorphic(ig.skeleton.as_ref().unwrap(), &cube);
    let (prism, rot) = fixtures::prism(6);
    let hex = planar_seed(&prism, &rot).unwrap();
    let hg = i_graph(&hex.h).unwrap();
    let hex_ok = hex.h.order() == 8 && contains_induced(hg.skeleton.as_ref().unwrap(), &prism);
    let took = start.elapsed();
    outcome(
        cube_ok && hex_ok && took < PLANAR_BUDGET,
        format!(
            "cube: {} i-sets, iso {cube_ok}; hexagonal prism: {} i-sets, contains prism {hex_ok}; {:.3}s",
            ig.order(),
            hg.order(),
            took.as_secs_f64()
        ),
    )
}

fn deletion_surgery() -> Outcome {
    let mut corpus: Vec<(Graph, u64)> = Vec::new();
    for spec in realizable_specs() {
        let (gbar, id) = seed_complement(spec, Dispatch::MostSpecific);
        if id == ConstructionId::LINE_ROOT {
            continue;
        }
        for t in triangle_isets_of_complement(&gbar) {
            corpus.push((gbar.clone(), t));
        }
    }
    let mut rng = StdRng::seed_from_u64(RNG_SEED ^ 10);
    let mut bad = Vec::new();
    for _ in 0..DELETION_SAMPLES {
        let (gbar, t) = &corpus[rng.gen_range(0..corpus.len())];
        let (i0, before) = minimum_maximal_independent_sets(&gbar.complement());
        let after_gbar = apply_deletion(gbar, *t).unwrap();
        let (i1, after) = minimum_maximal_independent_sets(&after_gbar.complement());
        let expected: Vec<u64> = before.iter().copied().filter(|s| s != t).collect();
        if i0 != 3 || i1 != 3 || after != expected || after_gbar.order() != gbar.order() + 1 {
            bad.push(format!("{:?}", members(*t).collect::<Vec<_>>()));
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{DELETION_SAMPLES} deletions drawn from {} triangles, failures {bad:?}",
            corpus.len()
        ),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("theta sweep", theta_sweep),
        ("alpha-graph equalities", alpha_equalities),
        ("wheel and fan seeds", wheels_and_fans),
        ("line-graph seeds", line_graph_theorem),
        ("non-realizability scan", non_realizability),
        ("house fixture", house_fixture),
        ("i-set count bound", two_set_bound),
        ("slide-graph invariants", structural_invariants),
        ("planar pipeline", planar_pipeline),
        ("deletion surgery", deletion_surgery),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        if !o.passed {
            failed += 1;
        }
        println!(
            "criterion {:>2} {} {name}: {}",
            i + 1,
            if o.passed { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
