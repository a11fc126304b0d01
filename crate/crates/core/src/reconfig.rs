//! Token-slide reconfiguration graphs: the i-graph and the α-graph.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::ReconfigError;
use crate::formats::dot_id;
use crate::graph::{members, set_of, set_to_vec, Graph, VertexSet};
use crate::independence::{independence_report, IndependenceReport};

/// Edge between `nodes[a]` and `nodes[b]` (`a < b`) with `nodes[b] = nodes[a] - from + to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlideEdge {
    pub a: usize,
    pub b: usize,
    pub from: usize,
    pub to: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlideGraph {
    pub base: Graph,
    pub nodes: Vec<VertexSet>,
    pub edges: Vec<SlideEdge>,
    /// The reconfiguration graph as a [`Graph`]; `None` past 64 nodes.
    pub skeleton: Option<Graph>,
    adjacency: Vec<Vec<usize>>,
}

pub fn build_slide_graph(g: &Graph, family: &[VertexSet]) -> Result<SlideGraph, ReconfigError> {
    let mut nodes = family.to_vec();
    nodes.sort_unstable();
    nodes.dedup();
    if let Some(&bad) = nodes.iter().find(|&&s| s & !g.vertices() != 0) {
        return Err(ReconfigError::OutOfRange(bad));
    }
    if let Some(first) = nodes.first() {
        let size = first.count_ones();
        if let Some(other) = nodes.iter().find(|s| s.count_ones() != size) {
            return Err(ReconfigError::MixedCardinality(size, other.count_ones()));
        }
    }
    let mut edges = Vec::new();
    let mut adjacency = vec![Vec::new(); nodes.len()];
    for (a, &sa) in nodes.iter().enumerate() {
        for (b, &sb) in nodes.iter().enumerate().skip(a + 1) {
            let out = sa & !sb;
            if out.count_ones() != 1 {
                continue;
            }
            let from = out.trailing_zeros() as usize;
            let to = (sb & !sa).trailing_zeros() as usize;
            if g.has_edge(from, to) {
                edges.push(SlideEdge { a, b, from, to });
                adjacency[a].push(b);
                adjacency[b].push(a);
            }
        }
    }
    let skeleton = (nodes.len() <= 64).then(|| {
        let mut s = Graph::empty(nodes.len());
        for e in &edges {
            s.add_edge(e.a, e.b);
        }
        s
    });
    Ok(SlideGraph {
        base: g.clone(),
        nodes,
        edges,
        skeleton,
        adjacency,
    })
}

/// ℐ(G) over the i-sets of `g`.
pub fn i_graph(g: &Graph) -> Result<SlideGraph, ReconfigError> {
    let r = independence_report(g)?;
    build_slide_graph(g, &r.i_sets)
}

/// 𝒜(G) over the α-sets of `g`.
pub fn alpha_graph(g: &Graph) -> Result<SlideGraph, ReconfigError> {
    let r = independence_report(g)?;
    build_slide_graph(g, &r.alpha_sets)
}

/// Both slide graphs from one enumeration.
pub fn slide_graphs(
    g: &Graph,
) -> Result<(IndependenceReport, SlideGraph, SlideGraph), ReconfigError> {
    let r = independence_report(g)?;
    let ig = build_slide_graph(g, &r.i_sets)?;
    let ag = build_slide_graph(g, &r.alpha_sets)?;
    Ok((r, ig, ag))
}

#[derive(Serialize, Deserialize)]
struct BaseJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct SlideJson {
    base: BaseJson,
    nodes: Vec<Vec<usize>>,
    edges: Vec<SlideEdge>,
}

impl SlideGraph {
    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adjacency[node].len()
    }

    /// Node degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn index_of(&self, set: VertexSet) -> Option<usize> {
        self.nodes.binary_search(&set).ok()
    }

    /// Skeleton label of a node, e.g. `{v3,v7}`.
    pub fn node_label(&self, node: usize) -> String {
        let names: Vec<String> = members(self.nodes[node]).map(|v| format!("v{v}")).collect();
        format!("{{{}}}", names.join(","))
    }

    /// BFS distances from `src`; unreachable nodes get `usize::MAX`.
    pub fn distances_from(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.order()];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adjacency[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn to_json(&self) -> serde_json::Value {
        let j = SlideJson {
            base: BaseJson {
                n: self.base.order(),
                edges: self.base.edges(),
            },
            nodes: self.nodes.iter().map(|&s| set_to_vec(s)).collect(),
            edges: self.edges.clone(),
        };
        serde_json::to_value(j).expect("plain data serializes")
    }

    /// Rebuilds from [`SlideGraph::to_json`] output and checks the stored edges.
    pub fn from_json(value: &serde_json::Value) -> Result<SlideGraph, String> {
        let j: SlideJson = serde_json::from_value(value.clone()).map_err(|e| e.to_string())?;
        let base = Graph::from_edges(j.base.n, &j.base.edges).map_err(|e| e.to_string())?;
        let family: Vec<u64> = j.nodes.iter().map(|s| set_of(s)).collect();
        let sg = build_slide_graph(&base, &family).map_err(|e| e.to_string())?;
        if sg.edges != j.edges {
            return Err("edge list does not match the recomputed slide graph".into());
        }
        Ok(sg)
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("graph {} {{\n", dot_id(name));
        for i in 0..self.order() {
            let _ = writeln!(s, "  {i} [label={}];", dot_id(&self.node_label(i)));
        }
        for e in &self.edges {
            let _ = writeln!(s, "  {} -- {} [label=\"v{}>v{}\"];", e.a, e.b, e.from, e.to);
        }
        s.push_str("}\n");
        s
    }

    /// Largest `m` such that some node is the centre of an induced `K_{1,m}`.
    pub fn max_induced_star(&self) -> usize {
        (0..self.order())
            .map(|x| self.induced_star_at(x))
            .max()
            .unwrap_or(0)
    }

    /// Size of a largest independent set inside the neighbourhood of `node`.
    pub fn induced_star_at(&self, node: usize) -> usize {
        let nb = &self.adjacency[node];
        if nb.len() > 128 {
            // Upper bound only; degrees this large never arise at desk scale.
            return nb.len();
        }
        let local: Vec<u128> = nb
            .iter()
            .map(|&y| {
                nb.iter()
                    .enumerate()
                    .filter(|(_, &z)| self.adjacency[y].contains(&z))
                    .fold(0u128, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        fn best(local: &[u128], cand: u128) -> usize {
            if cand == 0 {
                return 0;
            }
            let v = cand.trailing_zeros() as usize;
            let with = 1 + best(local, cand & !(1 << v) & !local[v]);
            if local[v] & cand == 0 {
                return with;
            }
            with.max(best(local, cand & !(1 << v)))
        }
        let all = if local.len() == 128 {
            u128::MAX
        } else {
            (1u128 << local.len()) - 1
        };
        best(&local, all)
    }

    /// Checks the distance bound, the distance-2 rule and the shared-token triangle rule.
    /// These hold for i-graphs and α-graphs; each failure is described in the result.
    pub fn invariant_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let m = self.order();
        for x in 0..m {
            let dist = self.distances_from(x);
            for (y, &d) in dist.iter().enumerate().take(m) {
                let diff = (self.nodes[x] & !self.nodes[y]).count_ones() as usize;
                if d < diff {
                    out.push(format!(
                        "distance {} < |X-Y| = {diff} for {} {}",
                        d,
                        self.node_label(x),
                        self.node_label(y)
                    ));
                }
                if d == 2 && diff != 2 {
                    out.push(format!(
                        "distance 2 with |X-Y| = {diff} for {} {}",
                        self.node_label(x),
                        self.node_label(y)
                    ));
                }
            }
        }
        for y in 0..m {
            let sy = self.nodes[y];
            for (i, &x) in self.adjacency[y].iter().enumerate() {
                for &z in &self.adjacency[y][i + 1..] {
                    // y1 is the token of Y absent from X, y2 the one absent from Z.
                    let y1 = sy & !self.nodes[x];
                    let y2 = sy & !self.nodes[z];
                    let adjacent = self.adjacency[x].contains(&z);
                    if adjacent != (y1 == y2) {
                        out.push(format!(
                            "triangle rule fails at {} with {} and {}",
                            self.node_label(y),
                            self.node_label(x),
                            self.node_label(z)
                        ));
                    }
                }
            }
        }
        for e in &self.edges {
            if self.nodes[e.b] != self.nodes[e.a] & !(1 << e.from) | 1 << e.to
                || !self.base.has_edge(e.from, e.to)
            {
                out.push(format!(
                    "edge {}-{} has an inconsistent move label",
                    e.a, e.b
                ));
            }
        }
        out
    }
}
