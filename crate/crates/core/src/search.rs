//! Bounded exhaustive search for seeds over labelled graphs on at most 8 vertices.

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::formats::to_graph6;
use crate::graph::{members, obstruction_t, theta, theta_params, Graph, ThetaSpec};
use crate::independence::minimum_maximal_independent_sets;
use crate::iso::{canonical_form, is_isomorphic};
use crate::seeds::{has_general_arm, verify_theta_seed_with, Dispatch, SeedResult, ThetaException};

/// Largest order the labelled enumeration accepts.
pub const MAX_SEARCH_ORDER: usize = 8;

const CHUNK: u64 = 1 << 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("order {0} outside 1..=8")]
    OrderOutOfRange(usize),
    #[error("target has {0} vertices, limit is 30")]
    TargetTooLarge(usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchReport {
    pub target: Graph,
    pub max_n: usize,
    pub connected_only: bool,
    pub graphs_examined: u64,
    pub witnesses: Vec<Graph>,
    pub elapsed: f64,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    target: String,
    target_edges: Vec<(usize, usize)>,
    max_n: usize,
    connected_only: bool,
    graphs_examined: u64,
    witnesses: Vec<String>,
    elapsed: f64,
    note: &'a str,
}

impl SearchReport {
    pub fn to_json(&self) -> serde_json::Value {
        let g6 = |g: &Graph| to_graph6(g).unwrap_or_default();
        serde_json::to_value(ReportJson {
            target: g6(&self.target),
            target_edges: self.target.edges(),
            max_n: self.max_n,
            connected_only: self.connected_only,
            graphs_examined: self.graphs_examined,
            witnesses: self.witnesses.iter().map(g6).collect(),
            elapsed: self.elapsed,
            note: "bounded scan; an empty witness list is corroboration up to max_n, not a proof",
        })
        .expect("plain data serializes")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub max_n: usize,
    pub connected_only: bool,
    /// Keep every witness instead of the one with the smallest `(n, mask)`.
    pub all_witnesses: bool,
    /// Stop after the first order that yields a witness.
    pub stop_at_first: bool,
    /// Apply the set-count and degree filters before the isomorphism test.
    pub filters: bool,
    pub progress: bool,
}

impl SearchOptions {
    pub fn new(max_n: usize) -> Self {
        SearchOptions {
            max_n,
            connected_only: false,
            all_witnesses: false,
            stop_at_first: true,
            filters: true,
            progress: false,
        }
    }
}

/// Upper-triangle pairs `(i, j)`, `i < j`, in column order; bit `b` of a mask is pair `b`.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    for b in members(mask) {
        let (i, j) = pairs[b];
        g.add_edge(i, j);
    }
    g
}

/// Every labelled graph on `n` vertices, in mask order.
pub fn enumerate_labeled_graphs(
    n: usize,
    connected_only: bool,
) -> Result<impl Iterator<Item = Graph>, SearchError> {
    if !(1..=MAX_SEARCH_ORDER).contains(&n) {
        return Err(SearchError::OrderOutOfRange(n));
    }
    let p = pairs(n);
    let total = 1u64 << p.len();
    Ok((0..total)
        .map(move |m| graph_from_mask(n, &p, m))
        .filter(move |g| !connected_only || g.is_connected()))
}

struct Target {
    order: usize,
    degrees: Vec<usize>,
    canon: Graph,
}

impl Target {
    fn new(g: &Graph) -> Self {
        Target {
            order: g.order(),
            degrees: g.degree_sequence(),
            canon: canonical_form(g).graph,
        }
    }
}

/// Degree sequence of the slide graph on `sets`.
fn slide_degrees(g: &Graph, sets: &[u64]) -> Vec<usize> {
    let mut deg = vec![0; sets.len()];
    for a in 0..sets.len() {
        for b in a + 1..sets.len() {
            if slides(g, sets[a], sets[b]) {
                deg[a] += 1;
                deg[b] += 1;
            }
        }
    }
    deg.sort_unstable_by(|a, b| b.cmp(a));
    deg
}

#[inline]
fn slides(g: &Graph, a: u64, b: u64) -> bool {
    let out = a & !b;
    out.count_ones() == 1 && g.neighbors(out.trailing_zeros() as usize) & (b & !a) != 0
}

fn skeleton(g: &Graph, sets: &[u64]) -> Option<Graph> {
    if sets.len() > 64 {
        return None;
    }
    let mut s = Graph::empty(sets.len());
    for a in 0..sets.len() {
        for b in a + 1..sets.len() {
            if slides(g, sets[a], sets[b]) {
                s.add_edge(a, b);
            }
        }
    }
    Some(s)
}

fn matches(g: &Graph, sets: &[u64], t: &Target, filters: bool) -> bool {
    if filters && (sets.len() != t.order || slide_degrees(g, sets) != t.degrees) {
        return false;
    }
    match skeleton(g, sets) {
        Some(s) => s.order() == t.order && canonical_form(&s).graph == t.canon,
        None => false,
    }
}

/// Scans once for several targets; reports come back in target order.
pub fn scan(targets: &[Graph], opts: SearchOptions) -> Result<Vec<SearchReport>, SearchError> {
    if !(1..=MAX_SEARCH_ORDER).contains(&opts.max_n) {
        return Err(SearchError::OrderOutOfRange(opts.max_n));
    }
    if let Some(t) = targets.iter().find(|t| t.order() > 30) {
        return Err(SearchError::TargetTooLarge(t.order()));
    }
    let start = Instant::now();
    let prepared: Vec<Target> = targets.iter().map(Target::new).collect();
    let mut found: Vec<Vec<(usize, u64)>> = vec![Vec::new(); targets.len()];
    let mut examined = 0u64;
    let mut scanned_to = 0;
    for n in 1..=opts.max_n {
        let p = pairs(n);
        let total = 1u64 << p.len();
        let chunks = total.div_ceil(CHUNK);
        let counter = AtomicU64::new(0);
        let per_chunk: Vec<(u64, Vec<Vec<u64>>)> = (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut hits: Vec<Vec<u64>> = vec![Vec::new(); prepared.len()];
                let mut seen = 0u64;
                for mask in c * CHUNK..((c + 1) * CHUNK).min(total) {
                    let g = graph_from_mask(n, &p, mask);
                    if opts.connected_only && !g.is_connected() {
                        continue;
                    }
                    seen += 1;
                    let (_, sets) = minimum_maximal_independent_sets(&g);
                    for (t, target) in prepared.iter().enumerate() {
                        if (opts.all_witnesses || hits[t].is_empty())
                            && matches(&g, &sets, target, opts.filters)
                        {
                            hits[t].push(mask);
                        }
                    }
                }
                counter.fetch_add(seen, Ordering::Relaxed);
                (seen, hits)
            })
            .collect();
        let mut new_hits = 0;
        for (seen, hits) in per_chunk {
            examined += seen;
            for (t, h) in hits.into_iter().enumerate() {
                for mask in h {
                    if opts.all_witnesses || found[t].is_empty() {
                        found[t].push((n, mask));
                        new_hits += 1;
                    }
                }
            }
        }
        scanned_to = n;
        if opts.progress {
            eprintln!(
                "n={n}: {} graphs, {new_hits} new witnesses, {:.2}s",
                counter.load(Ordering::Relaxed),
                start.elapsed().as_secs_f64()
            );
        }
        if opts.stop_at_first && found.iter().all(|f| !f.is_empty()) {
            break;
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    Ok(targets
        .iter()
        .zip(found)
        .map(|(t, mut f)| {
            f.sort_unstable();
            let witnesses = f
                .into_iter()
                .map(|(n, m)| graph_from_mask(n, &pairs(n), m))
                .collect();
            SearchReport {
                target: t.clone(),
                max_n: if opts.stop_at_first {
                    scanned_to
                } else {
                    opts.max_n
                },
                connected_only: opts.connected_only,
                graphs_examined: examined,
                witnesses,
                elapsed,
            }
        })
        .collect())
}

/// Smallest seed (by order, then mask) whose i-graph is isomorphic to `target`.
pub fn find_seed(
    target: &Graph,
    max_n: usize,
    connected_only: bool,
) -> Result<SearchReport, SearchError> {
    let mut opts = SearchOptions::new(max_n);
    opts.connected_only = connected_only;
    Ok(scan(std::slice::from_ref(target), opts)?.remove(0))
}

/// Full scan up to `max_n`; an empty witness list corroborates (does not prove) non-realizability.
pub fn confirm_non_realizable(target: &Graph, max_n: usize) -> Result<SearchReport, SearchError> {
    let mut opts = SearchOptions::new(max_n);
    opts.stop_at_first = false;
    Ok(scan(std::slice::from_ref(target), opts)?.remove(0))
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub spec: ThetaSpec,
    pub verdict: String,
    pub construction: Option<String>,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub max_total: usize,
    pub search_max_n: usize,
    pub rows: Vec<TableRow>,
    pub passed: bool,
}

/// Verifies every spec with at most `max_total` theta vertices. Exceptions are also scanned
/// for seeds up to `search_max_n` vertices (0 skips the scan).
pub fn verify_table(
    max_total: usize,
    search_max_n: usize,
    progress: bool,
) -> Result<TableReport, SearchError> {
    if max_total > 26 {
        return Err(SearchError::TargetTooLarge(max_total));
    }
    let specs = ThetaSpec::all_up_to(max_total);
    let mut rows: Vec<TableRow> = specs
        .par_iter()
        .map(|&spec| {
            let mut arms = vec![Dispatch::MostSpecific];
            if has_general_arm(spec) {
                arms.push(Dispatch::General);
            }
            let mut passed = true;
            let mut detail = Vec::new();
            let mut construction = None;
            let mut verdict = String::from("realizable");
            for arm in arms {
                match verify_theta_seed_with(spec, arm) {
                    Ok(r) => {
                        construction.get_or_insert_with(|| r.construction_id.to_string());
                        passed &= r.passed;
                        if !r.passed {
                            detail.push(format!("{arm:?}: {:?}", r.failures()));
                        }
                    }
                    Err(SeedResult::NotRealizable(e)) => verdict = e.to_string(),
                    Err(other) => {
                        passed = false;
                        detail.push(format!("{other:?}"));
                    }
                }
            }
            TableRow {
                spec,
                verdict,
                construction,
                passed,
                detail: detail.join("; "),
            }
        })
        .collect();
    if search_max_n > 0 {
        let exceptions: Vec<ThetaException> = ThetaException::all()
            .into_iter()
            .filter(|e| e.spec().order() <= max_total && e.spec().order() <= 8)
            .collect();
        let targets: Vec<Graph> = exceptions
            .iter()
            .map(|e| theta(e.spec()).unwrap())
            .collect();
        let mut opts = SearchOptions::new(search_max_n);
        opts.stop_at_first = false;
        opts.progress = progress;
        let reports = scan(&targets, opts)?;
        for (e, r) in exceptions.iter().zip(reports) {
            if let Some(row) = rows.iter_mut().find(|row| row.spec == e.spec()) {
                if !r.witnesses.is_empty() {
                    row.passed = false;
                    row.detail = format!("seed found at n = {}", r.witnesses[0].order());
                } else {
                    row.detail = format!(
                        "no seed on <= {search_max_n} vertices ({} graphs)",
                        r.graphs_examined
                    );
                }
            }
        }
    }
    let passed = rows.iter().all(|r| r.passed);
    Ok(TableReport {
        max_total,
        search_max_n,
        rows,
        passed,
    })
}

/// Induced subgraphs of 𝔗 on at least four vertices that are theta graphs, with their specs.
/// None of them is one of the seven exceptions; see the `obstruction_t_contains_no_exception` test.
pub fn obstruction_t_theta_subgraphs() -> Vec<(u64, ThetaSpec)> {
    let t = obstruction_t();
    let full = t.vertices();
    (1u64..full)
        .filter(|m| m.count_ones() >= 4)
        .filter_map(|m| theta_params(&t.induced(m)).map(|s| (m, s)))
        .collect()
}

/// True when `g` has an induced subgraph isomorphic to one of the seven exception thetas.
pub fn contains_exception_theta(g: &Graph) -> Option<ThetaException> {
    ThetaException::all()
        .into_iter()
        .find(|e| crate::graph::contains_induced(g, &theta(e.spec()).unwrap()))
}

/// Whether `a` and `b` have isomorphic i-graphs; helper for callers comparing seeds.
pub fn same_i_graph(a: &Graph, b: &Graph) -> bool {
    let (_, sa) = minimum_maximal_independent_sets(a);
    let (_, sb) = minimum_maximal_independent_sets(b);
    match (skeleton(a, &sa), skeleton(b, &sb)) {
        (Some(x), Some(y)) => is_isomorphic(&x, &y),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_named_graph, NamedGraph};

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_labeled_graphs(2, false).unwrap().count(), 2);
        assert_eq!(enumerate_labeled_graphs(4, false).unwrap().count(), 64);
        assert_eq!(enumerate_labeled_graphs(4, true).unwrap().count(), 38);
        assert!(enumerate_labeled_graphs(9, false).is_err());
        assert!(enumerate_labeled_graphs(0, false).is_err());
    }

    #[test]
    fn trivial_targets() {
        let k1 = Graph::empty(1);
        let r = find_seed(&k1, 3, false).unwrap();
        assert_eq!(r.witnesses, vec![Graph::empty(1)]);
        let k3 = make_named_graph(NamedGraph::Complete(3)).unwrap();
        let r = confirm_non_realizable(&k3, 3).unwrap();
        assert!(r.witnesses.iter().any(|w| w.order() == 3));
    }

    #[test]
    fn four_cycle_from_two_edges() {
        let c4 = make_named_graph(NamedGraph::Cycle(4)).unwrap();
        let r = find_seed(&c4, 5, false).unwrap();
        let w = &r.witnesses[0];
        assert_eq!(w.order(), 4);
        assert!(is_isomorphic(
            w,
            &Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()
        ));
        let r = find_seed(&c4, 5, true).unwrap();
        assert!(r.witnesses.iter().all(Graph::is_connected));
        let mut opts = SearchOptions::new(5);
        opts.all_witnesses = true;
        opts.stop_at_first = false;
        let r = scan(std::slice::from_ref(&c4), opts).unwrap().remove(0);
        let w5 = make_named_graph(NamedGraph::Wheel(4)).unwrap().complement();
        assert!(r.witnesses.iter().any(|w| is_isomorphic(w, &w5)));
    }

    #[test]
    fn house_found_by_five() {
        let house = make_named_graph(NamedGraph::House).unwrap();
        let r = find_seed(&house, 5, false).unwrap();
        assert_eq!(r.witnesses.len(), 1);
        assert!(r.witnesses[0].order() <= 5);
    }

    #[test]
    fn filters_do_not_change_results() {
        let targets = [
            make_named_graph(NamedGraph::Cycle(4)).unwrap(),
            make_named_graph(NamedGraph::Path(3)).unwrap(),
            make_named_graph(NamedGraph::Diamond).unwrap(),
        ];
        let mut opts = SearchOptions::new(5);
        opts.all_witnesses = true;
        opts.stop_at_first = false;
        let with = scan(&targets, opts).unwrap();
        opts.filters = false;
        let without = scan(&targets, opts).unwrap();
        for (a, b) in with.iter().zip(&without) {
            assert_eq!(a.witnesses, b.witnesses);
        }
    }

    #[test]
    fn thread_count_does_not_change_witnesses() {
        let targets = [
            make_named_graph(NamedGraph::Cycle(4)).unwrap(),
            make_named_graph(NamedGraph::House).unwrap(),
        ];
        let mut opts = SearchOptions::new(6);
        opts.all_witnesses = true;
        opts.stop_at_first = false;
        let run = |threads| {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap();
            pool.install(|| scan(&targets, opts).unwrap())
        };
        let (one, four) = (run(1), run(4));
        for (a, b) in one.iter().zip(&four) {
            assert_eq!(a.witnesses, b.witnesses);
            assert_eq!(a.graphs_examined, b.graphs_examined);
        }
    }

    #[test]
    fn obstruction_t_contains_no_exception() {
        let subs = obstruction_t_theta_subgraphs();
        assert!(!subs.is_empty());
        assert!(subs.iter().all(|(_, s)| ThetaException::of(*s).is_none()));
        assert_eq!(contains_exception_theta(&obstruction_t()), None);
    }
}
