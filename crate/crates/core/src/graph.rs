//! Simple undirected graphs on at most 64 vertices with one-word bitset rows.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// Bitmask over the vertices of one [`Graph`]; bit `v` set means `v` is in the set.
pub type VertexSet = u64;

/// Iterates the members of a vertex set in increasing order.
pub fn members(set: VertexSet) -> impl Iterator<Item = usize> {
    let mut rest = set;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        }
    })
}

/// Builds a vertex set from a list of vertices.
pub fn set_of(vertices: &[usize]) -> VertexSet {
    vertices.iter().fold(0, |acc, &v| acc | (1u64 << v))
}

/// Sorted vertex list of a set.
pub fn set_to_vec(set: VertexSet) -> Vec<usize> {
    members(set).collect()
}

/// Serializes a list of vertex sets as sorted vertex lists.
pub fn serialize_sets<S: serde::Serializer>(sets: &[VertexSet], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(sets.len()))?;
    for &set in sets {
        seq.serialize_element(&set_to_vec(set))?;
    }
    seq.end()
}

/// Mask with the lowest `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> VertexSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A simple undirected graph. Row `v` of `adj` is the open neighbourhood of `v`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// # Panics
    /// If `n > 64`. Use [`Graph::try_empty`] for checked construction.
    pub fn empty(n: usize) -> Self {
        Self::try_empty(n).expect("vertex count exceeds capacity")
    }

    pub fn try_empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::Capacity(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Graph from an edge list. Rejects loops, duplicates and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::try_empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Graph from adjacency rows. The rows must be symmetric, loop-free and in range.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(GraphError::Capacity(n));
        }
        let full = full_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                return Err(GraphError::VertexOutOfRange {
                    vertex: 63 - row.leading_zeros() as usize,
                    n,
                });
            }
            if row >> v & 1 == 1 {
                return Err(GraphError::Loop(v));
            }
            for u in members(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(GraphError::Asymmetric(v, u));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        full_mask(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v] | (1u64 << v)
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
    }

    /// Appends a vertex adjacent to `nbrs` and returns its index.
    pub fn add_vertex(&mut self, nbrs: VertexSet) -> Result<usize, GraphError> {
        if self.n == MAX_VERTICES {
            return Err(GraphError::Capacity(self.n + 1));
        }
        if nbrs & !self.vertices() != 0 {
            return Err(GraphError::VertexOutOfRange {
                vertex: 63 - nbrs.leading_zeros() as usize,
                n: self.n,
            });
        }
        let v = self.n;
        self.n += 1;
        self.adj.push(nbrs);
        for u in members(nbrs) {
            self.adj[u] |= 1u64 << v;
        }
        Ok(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in members(self.adj[u] & !full_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        members(set).all(|v| self.adj[v] & set == 0)
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        members(set).all(|v| self.closed_neighbors(v) & set == set)
    }

    /// True when every vertex is in `set` or adjacent to it.
    pub fn dominates(&self, set: VertexSet) -> bool {
        let mut covered = set;
        for v in members(set) {
            covered |= self.adj[v];
        }
        covered == self.vertices()
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn components(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut rest = self.vertices();
        while rest != 0 {
            let c = self.component_of(rest.trailing_zeros() as usize);
            out.push(c);
            rest &= !c;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0) == self.vertices()
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = [0u64; 2];
        let mut rest = self.vertices();
        while rest != 0 {
            let s = rest.trailing_zeros() as usize;
            side[0] |= 1 << s;
            let mut frontier = 1u64 << s;
            let mut parity = 0;
            while frontier != 0 {
                let mut next = 0;
                for v in members(frontier) {
                    next |= self.adj[v];
                }
                if next & side[parity] != 0 {
                    return false;
                }
                parity ^= 1;
                next &= !side[parity];
                side[parity] |= next;
                frontier = next;
            }
            rest &= !(side[0] | side[1]);
        }
        true
    }

    pub fn has_triangle(&self) -> bool {
        self.edges()
            .iter()
            .any(|&(u, v)| self.adj[u] & self.adj[v] != 0)
    }

    /// Subgraph induced by `set`, relabelled in increasing vertex order.
    pub fn induced(&self, set: VertexSet) -> Graph {
        let verts: Vec<usize> = members(set & self.vertices()).collect();
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::Capacity(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph { n, adj })
    }

    /// Cartesian product; vertex `(a, b)` is `a * other.order() + b`.
    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph, GraphError> {
        let m = other.n;
        let n = self.n * m;
        if n > MAX_VERTICES {
            return Err(GraphError::Capacity(n));
        }
        let mut g = Graph::empty(n);
        for a in 0..self.n {
            for (b, c) in other.edges() {
                g.add_edge(a * m + b, a * m + c);
            }
        }
        for (a, c) in self.edges() {
            for b in 0..m {
                g.add_edge(a * m + b, c * m + b);
            }
        }
        Ok(g)
    }

    /// Joins a new vertex to every existing vertex (the `∨ K_1` operation).
    pub fn join_vertex(&self) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.add_vertex(self.vertices())?;
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Validated theta-graph parameters with `j <= k <= l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "(usize, usize, usize)", into = "(usize, usize, usize)")]
pub struct ThetaSpec {
    j: usize,
    k: usize,
    l: usize,
}

impl ThetaSpec {
    pub fn new(j: usize, k: usize, l: usize) -> Result<Self, GraphError> {
        if j == 0 || j > k || k > l || (j == 1 && k == 1) {
            return Err(GraphError::InvalidTheta(j, k, l));
        }
        Ok(ThetaSpec { j, k, l })
    }

    /// Sorts the three lengths before validating.
    pub fn sorted(a: usize, b: usize, c: usize) -> Result<Self, GraphError> {
        let mut v = [a, b, c];
        v.sort_unstable();
        Self::new(v[0], v[1], v[2])
    }

    pub fn j(&self) -> usize {
        self.j
    }
    pub fn k(&self) -> usize {
        self.k
    }
    pub fn l(&self) -> usize {
        self.l
    }

    pub fn triple(&self) -> (usize, usize, usize) {
        (self.j, self.k, self.l)
    }

    /// Vertex count `j + k + l - 1`.
    pub fn order(&self) -> usize {
        self.j + self.k + self.l - 1
    }

    /// Every valid spec with at most `max_order` vertices, in lexicographic order.
    pub fn all_up_to(max_order: usize) -> Vec<ThetaSpec> {
        let mut out = Vec::new();
        for j in 1..=max_order {
            for k in j..=max_order {
                for l in k..=max_order {
                    if j + k + l > max_order + 1 {
                        break;
                    }
                    if let Ok(s) = ThetaSpec::new(j, k, l) {
                        out.push(s);
                    }
                }
            }
        }
        out
    }
}

impl TryFrom<(usize, usize, usize)> for ThetaSpec {
    type Error = GraphError;
    fn try_from((j, k, l): (usize, usize, usize)) -> Result<Self, GraphError> {
        ThetaSpec::new(j, k, l)
    }
}

impl From<ThetaSpec> for (usize, usize, usize) {
    fn from(s: ThetaSpec) -> Self {
        s.triple()
    }
}

impl fmt::Display for ThetaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "θ({},{},{})", self.j, self.k, self.l)
    }
}

/// Theta graph: poles 0 and 1, then the internal vertices of the `j`-, `k`- and `l`-paths.
pub fn theta(spec: ThetaSpec) -> Result<Graph, GraphError> {
    let n = spec.order();
    let mut g = Graph::try_empty(n)?;
    let mut next = 2;
    for len in [spec.j, spec.k, spec.l] {
        let mut prev = 0;
        for _ in 1..len {
            g.add_edge(prev, next);
            prev = next;
            next += 1;
        }
        g.add_edge(prev, 1);
    }
    Ok(g)
}

/// Recognises a theta graph: the spec when `g` is isomorphic to some `θ(j,k,l)`.
pub fn theta_params(g: &Graph) -> Option<ThetaSpec> {
    let n = g.order();
    if n < 4 || !g.is_connected() {
        return None;
    }
    let mut poles = Vec::new();
    for v in 0..n {
        match g.degree(v) {
            2 => {}
            3 => poles.push(v),
            _ => return None,
        }
    }
    let [a, b] = poles[..] else { return None };
    let mut lens = Vec::with_capacity(3);
    for start in members(g.neighbors(a)) {
        let (mut prev, mut cur, mut len) = (a, start, 1);
        while cur != b {
            if cur == a {
                return None;
            }
            let next = members(g.neighbors(cur)).find(|&w| w != prev)?;
            prev = cur;
            cur = next;
            len += 1;
        }
        lens.push(len);
    }
    ThetaSpec::sorted(lens[0], lens[1], lens[2]).ok()
}

/// Kinds accepted by [`make_named_graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{1,k}` with the centre labelled 0.
    Star(usize),
    /// `C_k ∨ K_1`, hub labelled last.
    Wheel(usize),
    /// `P_k ∨ K_1`, hub labelled last.
    Fan(usize),
    Diamond,
    Kappa,
    House,
    Paw,
    ObstructionT,
}

pub fn make_named_graph(kind: NamedGraph) -> Result<Graph, GraphError> {
    use NamedGraph::*;
    let check = |p: usize, lo: usize, max: usize| {
        if p < lo || p > max {
            Err(GraphError::Parameter(format!(
                "{kind:?} needs a size in {lo}..={max}"
            )))
        } else {
            Ok(())
        }
    };
    match kind {
        Path(n) => {
            check(n, 1, 64)?;
            Graph::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
        }
        Cycle(n) => {
            check(n, 3, 64)?;
            let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            e.push((n - 1, 0));
            Graph::from_edges(n, &e)
        }
        Complete(n) => {
            check(n, 1, 64)?;
            Ok(Graph::empty(n).complement())
        }
        Star(k) => {
            check(k, 1, 63)?;
            Graph::from_edges(k + 1, &(1..=k).map(|i| (0, i)).collect::<Vec<_>>())
        }
        Wheel(k) => {
            check(k, 3, 63)?;
            make_named_graph(Cycle(k))?.join_vertex()
        }
        Fan(k) => {
            check(k, 1, 63)?;
            make_named_graph(Path(k))?.join_vertex()
        }
        Diamond => theta(ThetaSpec::new(1, 2, 2)?),
        Kappa => theta(ThetaSpec::new(2, 2, 3)?),
        House => theta(ThetaSpec::new(1, 2, 3)?),
        Paw => Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]),
        ObstructionT => Ok(obstruction_t()),
    }
}

/// Vertex names of [`obstruction_t`], in index order.
pub const OBSTRUCTION_T_NAMES: [&str; 9] = ["X", "A1", "A2", "Y", "B1", "B2", "D1", "D2", "D3"];

/// The 9-vertex graph 𝔗: three `X`–`Y` paths of lengths 3, 3 and 4 plus the chord `A1 B2`.
pub fn obstruction_t() -> Graph {
    // X=0 A1=1 A2=2 Y=3 B1=4 B2=5 D1=6 D2=7 D3=8
    let edges = [
        (0, 1),
        (1, 2),
        (2, 3),
        (0, 4),
        (4, 5),
        (5, 3),
        (0, 6),
        (6, 7),
        (7, 8),
        (8, 3),
        (1, 5),
    ];
    Graph::from_edges(9, &edges).expect("fixed edge list")
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::try_empty(a + b)?;
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

pub fn complement(g: &Graph) -> Graph {
    g.complement()
}

/// Line graph with vertices in lexicographic edge order.
pub fn line_graph(g: &Graph) -> Result<Graph, GraphError> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(GraphError::Edgeless);
    }
    let mut l = Graph::try_empty(edges.len())?;
    for (a, &(u, v)) in edges.iter().enumerate() {
        for (b, &(x, y)) in edges.iter().enumerate().skip(a + 1) {
            if u == x || u == y || v == x || v == y {
                l.add_edge(a, b);
            }
        }
    }
    Ok(l)
}

/// True when some vertex subset of `g` induces a copy of `h`.
pub fn contains_induced(g: &Graph, h: &Graph) -> bool {
    find_induced(g, h).is_some()
}

/// An injection `h -> g` whose image induces `h`, if one exists.
pub fn find_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let k = h.order();
    if k > g.order() {
        return None;
    }
    if k == 0 {
        return Some(Vec::new());
    }
    // Place pattern vertices in BFS-ish order so each new one is usually adjacent to a placed one.
    let mut order = Vec::with_capacity(k);
    let mut placed = 0u64;
    while order.len() < k {
        let start = (0..k)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| (h.neighbors(v) & placed).count_ones() * 64 + h.degree(v) as u32)
            .unwrap();
        order.push(start);
        placed |= 1 << start;
    }
    let mut map = vec![usize::MAX; k];
    let mut used = 0u64;
    if induced_step(g, h, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn induced_step(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let need = h.degree(p);
    let mut cand = g.vertices() & !*used;
    for &q in &order[..depth] {
        let img = map[q];
        if h.has_edge(p, q) {
            cand &= g.neighbors(img);
        } else {
            cand &= !g.neighbors(img);
        }
    }
    for c in members(cand) {
        if g.degree(c) < need {
            continue;
        }
        map[p] = c;
        *used |= 1 << c;
        if induced_step(g, h, order, depth + 1, map, used) {
            return true;
        }
        *used &= !(1 << c);
    }
    map[p] = usize::MAX;
    false
}

pub fn is_diamond_free(g: &Graph) -> bool {
    !contains_induced(g, &make_named_graph(NamedGraph::Diamond).unwrap())
}

pub fn is_claw_free(g: &Graph) -> bool {
    !contains_induced(g, &make_named_graph(NamedGraph::Star(3)).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(k: NamedGraph) -> Graph {
        make_named_graph(k).unwrap()
    }

    #[test]
    fn wheel_has_hub_last() {
        let w = named(NamedGraph::Wheel(4));
        assert_eq!(w.order(), 5);
        assert_eq!(w.degree(4), 4);
        assert!((0..4).all(|v| w.degree(v) == 3));
    }

    #[test]
    fn fan_shape() {
        let f = named(NamedGraph::Fan(4));
        assert_eq!(f.order(), 5);
        assert_eq!(f.degree(4), 4);
        assert_eq!(f.edge_count(), 7);
    }

    #[test]
    fn diamond_degrees() {
        assert_eq!(
            named(NamedGraph::Diamond).degree_sequence(),
            vec![3, 3, 2, 2]
        );
    }

    #[test]
    fn theta_orders_and_degrees() {
        for spec in ThetaSpec::all_up_to(12) {
            let g = theta(spec).unwrap();
            assert_eq!(g.order(), spec.order());
            assert_eq!(g.edge_count(), spec.j() + spec.k() + spec.l());
            assert_eq!(g.degree(0), 3);
            assert_eq!(g.degree(1), 3);
            assert!((2..g.order()).all(|v| g.degree(v) == 2));
            assert_eq!(g.has_edge(0, 1), spec.j() == 1);
        }
    }

    #[test]
    fn theta_rejects_bad_specs() {
        assert!(ThetaSpec::new(1, 1, 3).is_err());
        assert!(ThetaSpec::new(0, 2, 3).is_err());
        assert!(ThetaSpec::new(3, 2, 4).is_err());
        assert_eq!(ThetaSpec::sorted(4, 2, 3).unwrap().triple(), (2, 3, 4));
    }

    #[test]
    fn small_theta_names() {
        let k23 = complete_bipartite(2, 3).unwrap();
        assert!(crate::iso::is_isomorphic(
            &theta(ThetaSpec::new(2, 2, 2).unwrap()).unwrap(),
            &k23
        ));
        let kappa = named(NamedGraph::Kappa);
        assert_eq!(kappa.order(), 6);
    }

    #[test]
    fn complement_of_wheel() {
        let c = named(NamedGraph::Wheel(4)).complement();
        assert_eq!(c.degree(4), 0);
        assert_eq!(c.edges(), vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn line_graph_examples() {
        let iso = crate::iso::is_isomorphic;
        let paw = named(NamedGraph::Paw);
        assert!(iso(&line_graph(&paw).unwrap(), &named(NamedGraph::Diamond)));
        assert!(iso(
            &line_graph(&named(NamedGraph::Path(4))).unwrap(),
            &named(NamedGraph::Path(3))
        ));
        assert!(iso(
            &line_graph(&named(NamedGraph::Star(3))).unwrap(),
            &named(NamedGraph::Complete(3))
        ));
        assert!(line_graph(&Graph::empty(3)).is_err());
    }

    #[test]
    fn line_graph_vertex_order_is_lexicographic() {
        // P_3 with edges 01, 12 plus 02 would be K_3; use a star to pin the order.
        let g = Graph::from_edges(4, &[(2, 3), (0, 1), (1, 3)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 3), (2, 3)]);
        let l = line_graph(&g).unwrap();
        assert!(l.has_edge(0, 1) && l.has_edge(1, 2) && !l.has_edge(0, 2));
    }

    #[test]
    fn induced_containment_examples() {
        let diamond = named(NamedGraph::Diamond);
        assert!(!contains_induced(&named(NamedGraph::Complete(4)), &diamond));
        assert!(!contains_induced(
            &theta(ThetaSpec::new(1, 2, 4).unwrap()).unwrap(),
            &diamond
        ));
        assert!(contains_induced(&named(NamedGraph::Wheel(4)), &diamond));
        assert!(!is_claw_free(&named(NamedGraph::Star(3))));
        assert!(is_claw_free(&named(NamedGraph::Cycle(6))));
    }

    #[test]
    fn induced_brute_force_agreement() {
        // θ(1,2,4) against 𝔇 checked over every 4-subset directly.
        let g = theta(ThetaSpec::new(1, 2, 4).unwrap()).unwrap();
        let d = named(NamedGraph::Diamond);
        let mut found = false;
        for mask in 0u64..(1 << g.order()) {
            if mask.count_ones() == 4 && crate::iso::is_isomorphic(&g.induced(mask), &d) {
                found = true;
            }
        }
        assert!(!found);
    }

    #[test]
    fn obstruction_t_shape() {
        let t = obstruction_t();
        assert_eq!(t.order(), 9);
        assert_eq!(t.edge_count(), 11);
        assert!(!contains_induced(
            &t,
            &theta(ThetaSpec::new(2, 2, 4).unwrap()).unwrap()
        ));
    }

    #[test]
    fn bipartite_and_connectivity() {
        assert!(named(NamedGraph::Cycle(6)).is_bipartite());
        assert!(!named(NamedGraph::Cycle(5)).is_bipartite());
        assert!(!named(NamedGraph::Wheel(4)).complement().is_connected());
        assert_eq!(
            named(NamedGraph::Wheel(4)).complement().components().len(),
            3
        );
    }

    #[test]
    fn product_and_union() {
        let p2 = named(NamedGraph::Path(2));
        let c4 = p2.cartesian_product(&p2).unwrap();
        assert!(crate::iso::is_isomorphic(&c4, &named(NamedGraph::Cycle(4))));
        let u = p2.disjoint_union(&named(NamedGraph::Complete(3))).unwrap();
        assert_eq!(u.edges(), vec![(0, 1), (2, 3), (2, 4), (3, 4)]);
    }

    #[test]
    fn from_edges_errors() {
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(GraphError::Loop(1))
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        ));
        assert!(Graph::try_empty(65).is_err());
    }

    #[test]
    fn theta_recognition() {
        for spec in ThetaSpec::all_up_to(12) {
            let g = theta(spec).unwrap();
            let mut perm: Vec<usize> = (0..g.order()).rev().collect();
            perm.rotate_left(3);
            assert_eq!(theta_params(&g.permute(&perm)), Some(spec));
        }
        // Two triangles joined by an edge: degrees fit but it is not a theta.
        let handcuff =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
                .unwrap();
        assert_eq!(theta_params(&handcuff), None);
        assert_eq!(
            theta_params(&make_named_graph(NamedGraph::Cycle(5)).unwrap()),
            None
        );
    }
}
