//! Maximal independent sets, i(G), α(G) and their extremal set families.

use serde::Serialize;

use crate::error::CapExceeded;
use crate::graph::{members, Graph, VertexSet};

/// Default limit on the number of enumerated sets.
pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependenceReport {
    pub i: usize,
    pub alpha: usize,
    #[serde(serialize_with = "crate::graph::serialize_sets")]
    pub i_sets: Vec<VertexSet>,
    #[serde(serialize_with = "crate::graph::serialize_sets")]
    pub alpha_sets: Vec<VertexSet>,
    pub total_mis_count: usize,
}

impl IndependenceReport {
    pub fn is_well_covered(&self) -> bool {
        self.i == self.alpha
    }
}

/// Calls `visit` once per maximal independent set. Stops early when `visit` returns false.
///
/// Branches on the lowest undominated vertex `v` over the undominated members of `N[v]`;
/// members tried earlier at a node are excluded below it, so each set appears once.
pub fn for_each_maximal_independent_set(g: &Graph, mut visit: impl FnMut(VertexSet) -> bool) {
    fn go(
        g: &Graph,
        chosen: u64,
        dominated: u64,
        banned: u64,
        visit: &mut dyn FnMut(VertexSet) -> bool,
    ) -> bool {
        let open = g.vertices() & !dominated;
        if open == 0 {
            return visit(chosen);
        }
        let v = open.trailing_zeros() as usize;
        let mut banned = banned;
        for u in members(g.closed_neighbors(v) & open & !banned) {
            if !go(
                g,
                chosen | 1 << u,
                dominated | g.closed_neighbors(u),
                banned,
                visit,
            ) {
                return false;
            }
            banned |= 1 << u;
        }
        true
    }
    go(g, 0, 0, 0, &mut visit);
}

/// All maximal independent sets sorted by bitmask, or an error past `cap` sets.
pub fn maximal_independent_sets_capped(
    g: &Graph,
    cap: usize,
) -> Result<Vec<VertexSet>, CapExceeded> {
    let mut out = Vec::new();
    let mut over = false;
    for_each_maximal_independent_set(g, |s| {
        if out.len() == cap {
            over = true;
            return false;
        }
        out.push(s);
        true
    });
    if over {
        return Err(CapExceeded { cap });
    }
    out.sort_unstable();
    Ok(out)
}

pub fn maximal_independent_sets(g: &Graph) -> Result<Vec<VertexSet>, CapExceeded> {
    maximal_independent_sets_capped(g, DEFAULT_CAP)
}

/// i(G) and the i-sets, pruning branches that already exceed the best size seen.
pub fn minimum_maximal_independent_sets(g: &Graph) -> (usize, Vec<VertexSet>) {
    fn go(
        g: &Graph,
        chosen: u64,
        dominated: u64,
        banned: u64,
        best: &mut usize,
        out: &mut Vec<u64>,
    ) {
        let open = g.vertices() & !dominated;
        let size = chosen.count_ones() as usize;
        if open == 0 {
            if size < *best {
                *best = size;
                out.clear();
            }
            out.push(chosen);
            return;
        }
        if size + 1 > *best {
            return;
        }
        let v = open.trailing_zeros() as usize;
        let mut banned = banned;
        for u in members(g.closed_neighbors(v) & open & !banned) {
            go(
                g,
                chosen | 1 << u,
                dominated | g.closed_neighbors(u),
                banned,
                best,
                out,
            );
            banned |= 1 << u;
        }
    }
    let mut best = usize::MAX;
    let mut out = Vec::new();
    go(g, 0, 0, 0, &mut best, &mut out);
    out.sort_unstable();
    (best, out)
}

pub fn independence_report(g: &Graph) -> Result<IndependenceReport, CapExceeded> {
    independence_report_capped(g, DEFAULT_CAP)
}

pub fn independence_report_capped(
    g: &Graph,
    cap: usize,
) -> Result<IndependenceReport, CapExceeded> {
    let all = maximal_independent_sets_capped(g, cap)?;
    let size = |s: &u64| s.count_ones() as usize;
    let i = all.iter().map(size).min().unwrap_or(0);
    let alpha = all.iter().map(size).max().unwrap_or(0);
    Ok(IndependenceReport {
        i,
        alpha,
        i_sets: all.iter().copied().filter(|s| size(s) == i).collect(),
        alpha_sets: all.iter().copied().filter(|s| size(s) == alpha).collect(),
        total_mis_count: all.len(),
    })
}

/// Triangles of `gbar` that are maximal cliques, sorted by bitmask.
pub fn triangle_isets_of_complement(gbar: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for (u, v) in gbar.edges() {
        let common = gbar.neighbors(u) & gbar.neighbors(v);
        for w in members(common) {
            if w <= v {
                continue;
            }
            let extendable = gbar.neighbors(w) & common != 0;
            if !extendable {
                out.push(1u64 << u | 1 << v | 1 << w);
            }
        }
    }
    out.sort_unstable();
    out
}
