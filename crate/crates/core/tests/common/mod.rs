#![allow(dead_code)]

use islide_core::graph::members;
use islide_core::Graph;
use proptest::prelude::*;
use rand::Rng;

pub fn graph_strategy(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
            move |bits| {
                let mut g = Graph::empty(n);
                let mut it = bits.into_iter();
                for u in 0..n {
                    for v in u + 1..n {
                        if it.next().unwrap() {
                            g.add_edge(u, v);
                        }
                    }
                }
                g
            },
        )
    })
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Maximal independent sets by checking all `2^n` subsets.
pub fn brute_mis(g: &Graph) -> Vec<u64> {
    let n = g.order();
    let mut out: Vec<u64> = (0..1u64 << n)
        .filter(|&s| g.is_independent(s) && g.dominates(s))
        .collect();
    out.sort_unstable();
    out
}

/// Isomorphism by trying every permutation; only for small graphs.
pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    if n != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if a.edges().iter().all(|&(u, v)| b.has_edge(perm[u], perm[v])) {
            return true;
        }
        // Next lexicographic permutation.
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return false;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

pub fn has_bridge(g: &Graph) -> bool {
    g.edges().into_iter().any(|(u, v)| {
        let mut h = g.clone();
        h.remove_edge(u, v);
        h.component_of(u) >> v & 1 == 0
    })
}

/// Slide adjacency computed straight from the definition.
pub fn slide_adjacent(g: &Graph, a: u64, b: u64) -> bool {
    let (out, inn) = (a & !b, b & !a);
    out.count_ones() == 1
        && inn.count_ones() == 1
        && members(out).all(|x| members(inn).all(|y| g.has_edge(x, y)))
}
