//! Canonical labelling by equitable refinement and individualization, with orbit pruning.

use crate::graph::{members, Graph};

/// Canonically relabelled graph plus the labelling used (`labeling[v]` is the new index of `v`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub graph: Graph,
    pub labeling: Vec<usize>,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.order();
    let mut search = Search {
        g,
        best: None,
        first: None,
        auts: Vec::new(),
        path: Vec::new(),
    };
    let cells = if n == 0 {
        Vec::new()
    } else {
        vec![g.vertices()]
    };
    search.visit(cells);
    let (rows, order) = search.best.expect("search reaches at least one leaf");
    let mut labeling = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        labeling[v] = i;
    }
    CanonicalForm {
        graph: Graph::from_rows(rows).expect("relabelled rows stay valid"),
        labeling,
    }
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_form(g).graph == canonical_form(h).graph
}

/// Generators found while searching; every one is an automorphism of `g`.
pub fn automorphism_generators(g: &Graph) -> Vec<Vec<usize>> {
    let mut search = Search {
        g,
        best: None,
        first: None,
        auts: Vec::new(),
        path: Vec::new(),
    };
    if g.order() > 0 {
        search.visit(vec![g.vertices()]);
    }
    search.auts
}

/// Splits cells until every vertex of a cell sees each cell the same number of times.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    loop {
        let mut next = Vec::with_capacity(cells.len());
        let mut changed = false;
        for &cell in cells.iter() {
            if cell.count_ones() == 1 {
                next.push(cell);
                continue;
            }
            let mut sigs: Vec<(Vec<u8>, usize)> = members(cell)
                .map(|v| {
                    let row = g.neighbors(v);
                    (
                        cells
                            .iter()
                            .map(|&c| (row & c).count_ones() as u8)
                            .collect(),
                        v,
                    )
                })
                .collect();
            sigs.sort();
            let mut start = 0;
            for i in 1..=sigs.len() {
                if i == sigs.len() || sigs[i].0 != sigs[start].0 {
                    next.push(sigs[start..i].iter().fold(0, |acc, s| acc | 1u64 << s.1));
                    start = i;
                }
            }
            changed |= sigs.first().map(|s| &s.0) != sigs.last().map(|s| &s.0);
        }
        *cells = next;
        if !changed {
            return;
        }
    }
}

type Leaf = (Vec<u64>, Vec<usize>);

struct Search<'a> {
    g: &'a Graph,
    best: Option<Leaf>,
    first: Option<(Leaf, Vec<usize>)>,
    auts: Vec<Vec<usize>>,
    path: Vec<usize>,
}

impl Search<'_> {
    /// Returns the tree level to resume at when a leaf repeats the first leaf.
    fn visit(&mut self, mut cells: Vec<u64>) -> Option<usize> {
        refine(self.g, &mut cells);
        let depth = self.path.len();
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            return self.leaf(&cells);
        };
        let cell = cells[target];
        let mut tried: Vec<usize> = Vec::new();
        for v in members(cell) {
            if !tried.is_empty() && self.same_orbit(v, &tried) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1u64 << v);
            child.push(cell & !(1u64 << v));
            child.extend_from_slice(&cells[target + 1..]);
            self.path.push(v);
            let jump = self.visit(child);
            self.path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u64]) -> Option<usize> {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut pos = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let rows: Vec<u64> = order
            .iter()
            .map(|&v| members(self.g.neighbors(v)).fold(0, |acc, u| acc | 1u64 << pos[u]))
            .collect();
        let Some(((first_rows, first_order), first_path)) = &self.first else {
            self.first = Some(((rows.clone(), order.clone()), self.path.clone()));
            self.best = Some((rows, order));
            return None;
        };
        if rows == *first_rows {
            let aut = map_between(first_order, &order);
            self.auts.push(aut);
            let level = first_path
                .iter()
                .zip(&self.path)
                .position(|(a, b)| a != b)
                .unwrap_or(0);
            return Some(level);
        }
        let (best_rows, best_order) = self.best.as_ref().unwrap();
        match rows.cmp(best_rows) {
            std::cmp::Ordering::Greater => self.best = Some((rows, order)),
            std::cmp::Ordering::Equal => {
                let aut = map_between(best_order, &order);
                self.auts.push(aut);
            }
            std::cmp::Ordering::Less => {}
        }
        None
    }

    fn same_orbit(&self, v: usize, tried: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for aut in &self.auts {
            if self.path.iter().any(|&p| aut[p] != p) {
                continue;
            }
            any = true;
            for (x, &y) in aut.iter().enumerate().take(n) {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == root)
    }
}

/// Automorphism sending `from[i]` to `to[i]`.
fn map_between(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut aut = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        aut[a] = b;
    }
    aut
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_named_graph, theta, NamedGraph, ThetaSpec};

    /// Tries every bijection; only for tiny graphs.
    fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
        fn go(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: u64) -> bool {
            let i = map.len();
            if i == g.order() {
                return true;
            }
            for c in 0..h.order() {
                if used >> c & 1 == 1 {
                    continue;
                }
                if (0..i).all(|p| g.has_edge(i, p) == h.has_edge(c, map[p])) {
                    map.push(c);
                    if go(g, h, map, used | 1 << c) {
                        return true;
                    }
                    map.pop();
                }
            }
            false
        }
        g.order() == h.order() && go(g, h, &mut Vec::new(), 0)
    }

    #[test]
    fn theta_234_is_not_theta_225() {
        let a = theta(ThetaSpec::new(2, 3, 4).unwrap()).unwrap();
        let b = theta(ThetaSpec::new(2, 2, 5).unwrap()).unwrap();
        assert_eq!(a.degree_sequence(), b.degree_sequence());
        assert!(!brute_isomorphic(&a, &b));
        assert!(!is_isomorphic(&a, &b));
    }

    #[test]
    fn complete_graphs_are_fast() {
        let k = make_named_graph(NamedGraph::Complete(40)).unwrap();
        let cf = canonical_form(&k);
        assert_eq!(cf.graph, k);
    }

    #[test]
    fn labeling_maps_graph_to_canonical() {
        let g = make_named_graph(NamedGraph::House).unwrap();
        let cf = canonical_form(&g);
        assert_eq!(g.permute(&cf.labeling), cf.graph);
    }

    #[test]
    fn automorphisms_are_valid() {
        for g in [
            make_named_graph(NamedGraph::Cycle(7)).unwrap(),
            theta(ThetaSpec::new(3, 3, 3).unwrap()).unwrap(),
            crate::graph::obstruction_t(),
        ] {
            for aut in automorphism_generators(&g) {
                assert_eq!(g.permute(&aut), g);
            }
        }
    }

    #[test]
    fn agrees_with_brute_force_on_all_five_vertex_graphs() {
        let n = 5;
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let graphs: Vec<Graph> = (0u32..1 << pairs.len())
            .step_by(7)
            .map(|m| {
                let e: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| m >> i & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect();
                Graph::from_edges(n, &e).unwrap()
            })
            .collect();
        for a in graphs.iter().step_by(3) {
            for b in graphs.iter().step_by(5) {
                assert_eq!(is_isomorphic(a, b), brute_isomorphic(a, b), "{a:?} {b:?}");
            }
        }
    }
}
