//! Complement seeds whose i-graph is a prescribed graph: theta constructions,
//! line-graph roots, deletion surgery and planar duals.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::error::{CapExceeded, GraphError, PlanarError};
use crate::graph::{
    contains_induced, is_claw_free, make_named_graph, members, set_to_vec, theta, Graph,
    NamedGraph, ThetaSpec, VertexSet,
};
use crate::independence::triangle_isets_of_complement;
use crate::iso::is_isomorphic;
use crate::planar::{planar_dual, RotationSystem};
use crate::reconfig::slide_graphs;

#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ConstructionId {
    C_1kl,
    C_22l_a,
    C_22l_b,
    C_23l_a,
    C_23l_b,
    C_244,
    C_2k5,
    C_2kl,
    G_334,
    C_335,
    C_33l,
    C_344,
    C_34l,
    C_355,
    C_444,
    C_jk5,
    C_jkl,
    HOUSE,
    LINE_ROOT,
    PLANAR_DUAL,
}

impl fmt::Display for ConstructionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Provenance of a seed build.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionTrace {
    pub construction_id: ConstructionId,
    pub params: Vec<usize>,
    /// Vertex name to index in the complement seed.
    pub names: BTreeMap<String, usize>,
    /// Named i-sets, as vertex sets of the complement seed.
    #[serde(serialize_with = "serialize_labels")]
    pub expected_labels: BTreeMap<String, VertexSet>,
    pub expected_order: usize,
    pub alpha_equal: bool,
}

fn serialize_labels<S: Serializer>(
    labels: &BTreeMap<String, VertexSet>,
    s: S,
) -> Result<S::Ok, S::Error> {
    let mut m = s.serialize_map(Some(labels.len()))?;
    for (k, &v) in labels {
        m.serialize_entry(k, &set_to_vec(v))?;
    }
    m.end()
}

impl ConstructionTrace {
    /// Vertex names indexed by vertex; unnamed vertices get their index.
    pub fn vertex_names(&self, n: usize) -> Vec<String> {
        let mut out: Vec<String> = (0..n).map(|v| v.to_string()).collect();
        for (name, &v) in &self.names {
            if v < n {
                out[v] = name.clone();
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data serializes")
    }
}

/// The seven theta graphs that are not i-graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ThetaException {
    Diamond,
    K23,
    Kappa,
    Theta224,
    Theta233,
    Theta234,
    Theta333,
}

impl ThetaException {
    pub fn of(spec: ThetaSpec) -> Option<Self> {
        use ThetaException::*;
        Some(match spec.triple() {
            (1, 2, 2) => Diamond,
            (2, 2, 2) => K23,
            (2, 2, 3) => Kappa,
            (2, 2, 4) => Theta224,
            (2, 3, 3) => Theta233,
            (2, 3, 4) => Theta234,
            (3, 3, 3) => Theta333,
            _ => return None,
        })
    }

    pub fn spec(&self) -> ThetaSpec {
        use ThetaException::*;
        let (j, k, l) = match self {
            Diamond => (1, 2, 2),
            K23 => (2, 2, 2),
            Kappa => (2, 2, 3),
            Theta224 => (2, 2, 4),
            Theta233 => (2, 3, 3),
            Theta234 => (2, 3, 4),
            Theta333 => (3, 3, 3),
        };
        ThetaSpec::new(j, k, l).unwrap()
    }

    pub fn all() -> [ThetaException; 7] {
        use ThetaException::*;
        [Diamond, K23, Kappa, Theta224, Theta233, Theta234, Theta333]
    }
}

impl fmt::Display for ThetaException {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let spec = self.spec();
        match self {
            ThetaException::Diamond => write!(f, "exception 𝔇 = {spec}"),
            ThetaException::K23 => write!(f, "exception K_{{2,3}} = {spec}"),
            ThetaException::Kappa => write!(f, "exception κ = {spec}"),
            _ => write!(f, "exception {spec}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeedResult {
    Realizable {
        gbar: Graph,
        trace: ConstructionTrace,
    },
    NotRealizable(ThetaException),
    InvalidSpec(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeedError {
    #[error("graph contains an induced diamond")]
    ContainsDiamond,
    #[error("not a line graph (claw-free: {claw_free})")]
    NotALineGraph { claw_free: bool },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("set {0:?} is not a triangle that is a maximal clique")]
    NotMaximalTriangle(Vec<usize>),
    #[error("complement has fewer than two i-sets")]
    TooFewISets,
    #[error("graph is not cubic")]
    NotCubic,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error(transparent)]
    Planar(#[from] PlanarError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Cap(#[from] CapExceeded),
}

/// Which arm handles specs matched by more than one construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Dispatch {
    #[default]
    MostSpecific,
    General,
}

/// Complement seed for θ(j,k,l), picking the most specific construction.
pub fn build_theta_seed_complement(j: usize, k: usize, l: usize) -> SeedResult {
    match ThetaSpec::new(j, k, l) {
        Ok(spec) => seed_for(spec, Dispatch::MostSpecific),
        Err(e) => SeedResult::InvalidSpec(e.to_string()),
    }
}

pub fn seed_for(spec: ThetaSpec, dispatch: Dispatch) -> SeedResult {
    if let Some(e) = ThetaException::of(spec) {
        return SeedResult::NotRealizable(e);
    }
    if spec.order() > 64 {
        return SeedResult::InvalidSpec(format!("{spec} exceeds the 64-vertex capacity"));
    }
    let built = match (spec.triple(), dispatch) {
        ((1, 2, _), _) => line_seed_for_theta(spec),
        ((1, _, _), _) => Ok(cons_1kl(spec.k(), spec.l())),
        ((2, 2, l), _) => Ok(cons_22l(l)),
        ((2, 3, l), _) => Ok(cons_23l(l)),
        ((2, 4, 4), _) => Ok(cons_244()),
        ((2, k, 5), _) => Ok(cons_2k5(k)),
        ((2, k, l), _) => Ok(cons_2kl(k, l)),
        ((j, k, l), Dispatch::General) if l >= 6 => Ok(cons_jkl(j, k, l)),
        ((3, 3, 4), _) => Ok(explicit_334()),
        ((3, 3, 5), _) => Ok(cons_335()),
        ((3, 3, l), _) => Ok(cons_33l(l)),
        ((3, 4, 4), _) => Ok(cons_344()),
        ((3, 4, l), _) => Ok(cons_34l(l)),
        ((3, 5, 5), _) => Ok(cons_355()),
        ((4, 4, 4), _) => Ok(cons_444()),
        ((j, k, 5), _) => Ok(cons_jk5(j, k)),
        ((j, k, l), _) => Ok(cons_jkl(j, k, l)),
    };
    match built {
        Ok(b) => {
            let (gbar, mut trace) = b.finish();
            trace.params = vec![spec.j(), spec.k(), spec.l()];
            trace.expected_order = spec.order();
            SeedResult::Realizable { gbar, trace }
        }
        Err(e) => SeedResult::InvalidSpec(e.to_string()),
    }
}

/// True when another arm also covers `spec` under [`Dispatch::General`].
pub fn has_general_arm(spec: ThetaSpec) -> bool {
    spec.j() >= 3 && spec.l() >= 6 && (spec.j(), spec.k()) != (3, 3)
        || (spec.j(), spec.k()) == (3, 3) && spec.l() >= 6
}

/// Named-vertex graph under construction.
struct Builder {
    g: Graph,
    names: Vec<String>,
    alive: u64,
    labels: Vec<(String, Vec<String>)>,
    id: ConstructionId,
    alpha_equal: bool,
}

impl Builder {
    fn new(id: ConstructionId, alpha_equal: bool) -> Self {
        Builder {
            g: Graph::empty(0),
            names: Vec::new(),
            alive: 0,
            labels: Vec::new(),
            id,
            alpha_equal,
        }
    }

    fn add(&mut self, name: &str) -> usize {
        assert!(self.find(name).is_none(), "duplicate vertex {name}");
        let v = self
            .g
            .add_vertex(0)
            .expect("constructions stay within capacity");
        self.names.push(name.to_string());
        self.alive |= 1 << v;
        v
    }

    fn find(&self, name: &str) -> Option<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .filter(|&v| self.alive >> v & 1 == 1)
    }

    fn id(&self, name: &str) -> usize {
        self.find(name)
            .unwrap_or_else(|| panic!("no vertex {name}"))
    }

    fn edge(&mut self, a: &str, b: &str) {
        let (u, v) = (self.id(a), self.id(b));
        self.g.add_edge(u, v);
    }

    fn join(&mut self, a: &str, others: &[&str]) {
        for b in others {
            self.edge(a, b);
        }
    }

    fn delete(&mut self, name: &str) {
        let v = self.id(name);
        for u in members(self.g.neighbors(v)) {
            self.g.remove_edge(u, v);
        }
        self.alive &= !(1 << v);
    }

    /// Replaces edge `a b` by the path `a new b` and joins `new` to `hub`.
    fn subdivide(&mut self, a: &str, b: &str, new: &str, hub: &str) {
        let (u, v) = (self.id(a), self.id(b));
        assert!(self.g.has_edge(u, v), "no edge {a}-{b} to subdivide");
        self.g.remove_edge(u, v);
        self.add(new);
        self.join(new, &[a, b, hub]);
    }

    /// `w0` joined to the cycle `w1 .. w_rim`.
    fn wheel(&mut self, rim: usize) {
        self.add("w0");
        for i in 1..=rim {
            self.add(&format!("w{i}"));
            self.edge("w0", &format!("w{i}"));
        }
        for i in 1..=rim {
            self.edge(&format!("w{i}"), &format!("w{}", i % rim + 1));
        }
    }

    fn label(&mut self, name: &str, verts: &[&str]) {
        self.labels.push((
            name.to_string(),
            verts.iter().map(|s| s.to_string()).collect(),
        ));
    }

    fn clear_labels(&mut self) {
        self.labels.clear();
    }

    /// Relabels into canonical name order: hub, rim, u, v, apexes.
    fn finish(self) -> (Graph, ConstructionTrace) {
        fn key(name: &str) -> (u8, usize, String) {
            let (head, rest) = name.split_at(1);
            let cat = match head {
                "w" => 0,
                "u" => 1,
                "v" => 2,
                "z" => 3,
                _ => 4,
            };
            let num = rest.trim_end_matches('\'').parse().unwrap_or(0);
            (cat, num, name.to_string())
        }
        let mut order: Vec<usize> = members(self.alive).collect();
        order.sort_by_key(|&v| key(&self.names[v]));
        let mut perm = vec![usize::MAX; self.g.order()];
        for (i, &v) in order.iter().enumerate() {
            perm[v] = i;
        }
        let mut gbar = Graph::empty(order.len());
        for (u, v) in self.g.edges() {
            gbar.add_edge(perm[u], perm[v]);
        }
        let names = order
            .iter()
            .enumerate()
            .map(|(i, &v)| (self.names[v].clone(), i))
            .collect();
        let expected_labels = self
            .labels
            .iter()
            .map(|(name, verts)| {
                (
                    name.clone(),
                    verts
                        .iter()
                        .fold(0u64, |acc, n| acc | 1 << perm[self.id(n)]),
                )
            })
            .collect();
        let trace = ConstructionTrace {
            construction_id: self.id,
            params: Vec::new(),
            names,
            expected_labels,
            expected_order: 0,
            alpha_equal: self.alpha_equal,
        };
        (gbar, trace)
    }
}

fn w(i: usize) -> String {
    format!("w{i}")
}

fn v(i: usize) -> String {
    format!("v{i}")
}

/// θ(1,k,l), 3 <= k <= l: wheel on k+1 rim vertices plus a path of l-2 vertices fanned from w2.
fn cons_1kl(k: usize, l: usize) -> Builder {
    let mut b = Builder::new(ConstructionId::C_1kl, true);
    b.wheel(k + 1);
    for i in 1..=l - 2 {
        b.add(&v(i));
        b.edge(&v(i), "w2");
        if i > 1 {
            b.edge(&v(i - 1), &v(i));
        }
    }
    b.edge("v1", "w1");
    b.edge(&v(l - 2), "w3");
    b.label("X", &["w0", "w1", "w2"]);
    b.label("Y", &["w0", "w2", "w3"]);
    for i in 1..k {
        let a = if i == 1 { 1 } else { k + 3 - i };
        let (p, q) = (w(k + 2 - i), w(a));
        b.label(&format!("A{i}"), &["w0", &p, &q]);
    }
    b.label("B1", &["w1", "w2", "v1"]);
    for i in 2..l - 1 {
        b.label(&format!("B{i}"), &["w2", &v(i - 1), &v(i)]);
    }
    b.label(&format!("B{}", l - 1), &["w2", &v(l - 2), "w3"]);
    b
}

/// θ(2,2,l), l >= 5: W_5 with a path and apexes removing the stray triangles.
fn cons_22l(l: usize) -> Builder {
    let mut b;
    if l == 5 {
        b = Builder::new(ConstructionId::C_22l_b, false);
        b.wheel(4);
        b.add("v1");
        b.add("v2");
        b.edge("v1", "v2");
        b.join("w1", &["v1"]);
        b.join("w2", &["v1", "v2"]);
        b.join("w3", &["v2"]);
        b.join("w4", &["v1", "v2"]);
        b.add("z1");
        b.join("z1", &["v1", "w1", "w4"]);
        b.add("z2");
        b.join("z2", &["v2", "w2", "w3"]);
        b.label("D1", &["w1", "w2", "v1"]);
        b.label("D2", &["w2", "v1", "v2"]);
        b.label("D3", &["w4", "v1", "v2"]);
        b.label("D4", &["w3", "w4", "v2"]);
    } else {
        b = Builder::new(ConstructionId::C_22l_a, false);
        b.wheel(4);
        let p = l - 3;
        for i in 1..=p {
            b.add(&v(i));
            if i > 1 {
                b.edge(&v(i - 1), &v(i));
            }
        }
        for i in 1..=p - 1 {
            b.edge("w1", &v(i));
        }
        b.edge(&v(p - 2), &v(p));
        b.edge("w2", "v1");
        b.edge("w3", &v(p));
        b.join("w4", &[&v(p - 1), &v(p)]);
        b.add("z");
        b.join("z", &["w1", "w4", &v(p - 1)]);
        b.label("D1", &["w1", "w2", "v1"]);
        for i in 2..=l - 4 {
            b.label(&format!("D{i}"), &["w1", &v(i - 1), &v(i)]);
        }
        b.label(&format!("D{}", l - 3), &[&v(l - 5), &v(l - 4), &v(l - 3)]);
        b.label(&format!("D{}", l - 2), &["w4", &v(l - 4), &v(l - 3)]);
        b.label(&format!("D{}", l - 1), &["w3", "w4", &v(l - 3)]);
    }
    b.label("X", &["w0", "w1", "w2"]);
    b.label("Y", &["w0", "w3", "w4"]);
    b.label("A", &["w0", "w2", "w3"]);
    b.label("B", &["w0", "w1", "w4"]);
    b
}

/// θ(2,3,l): the θ(2,2,l) seed with w1 w4 subdivided into the wheel and the first apex dropped.
fn cons_23l(l: usize) -> Builder {
    let mut b = cons_22l(l);
    b.subdivide("w1", "w4", "w5", "w0");
    if l == 5 {
        b.delete("z1");
        b.id = ConstructionId::C_23l_b;
        b.alpha_equal = false;
    } else {
        b.delete("z");
        b.id = ConstructionId::C_23l_a;
        b.alpha_equal = true;
    }
    b.clear_labels();
    b.label("X", &["w0", "w1", "w2"]);
    b.label("Y", &["w0", "w3", "w4"]);
    b.label("A", &["w0", "w2", "w3"]);
    b
}

/// Subdivides the rim edge between `w1` and `w_last` `times` times, numbering from `first`.
fn grow_rim(b: &mut Builder, last: usize, first: usize, times: usize) {
    let mut prev = last;
    for i in 0..times {
        let new = first + i;
        b.subdivide("w1", &w(prev), &w(new), "w0");
        prev = new;
    }
}

/// Subdivides `w2 w3` into `u1 .. u_times`.
fn grow_u(b: &mut Builder, times: usize) {
    let mut prev = "w2".to_string();
    for i in 1..=times {
        let u = format!("u{i}");
        b.subdivide(&prev, "w3", &u, "w0");
        prev = u;
    }
}

fn cons_244() -> Builder {
    let mut b = Builder::new(ConstructionId::C_244, false);
    b.wheel(6);
    b.edge("w1", "w4");
    b.add("v");
    b.join("v", &["w1", "w2", "w3", "w4"]);
    b.add("z");
    b.join("z", &["v", "w2", "w3"]);
    b.add("z'");
    b.join("z'", &["w0", "w1", "w4"]);
    b.label("X", &["w0", "w1", "w2"]);
    b.label("Y", &["w0", "w3", "w4"]);
    b.label("A", &["w0", "w2", "w3"]);
    b.label("B1", &["w0", "w1", "w6"]);
    b.label("B2", &["w0", "w5", "w6"]);
    b.label("B3", &["w0", "w4", "w5"]);
    b.label("D1", &["w1", "w2", "v"]);
    b.label("D2", &["w1", "w4", "v"]);
    b.label("D3", &["w3", "w4", "v"]);
    b
}

fn cons_2k5(k: usize) -> Builder {
    let mut b = cons_23l(5);
    grow_rim(&mut b, 5, 6, k - 3);
    b.id = ConstructionId::C_2k5;
    b.alpha_equal = false;
    b
}

fn cons_2kl(k: usize, l: usize) -> Builder {
    let mut b = cons_23l(l);
    grow_rim(&mut b, 5, 6, k - 3);
    b.id = ConstructionId::C_2kl;
    b.alpha_equal = true;
    b
}

/// θ(3,3,4) from an explicit nine-vertex graph G; the seed is its complement.
fn explicit_334() -> Builder {
    let mut b = Builder::new(ConstructionId::G_334, false);
    for i in 0..9 {
        b.add(&v(i));
    }
    let g_edges = [
        (0, 1),
        (0, 2),
        (0, 3),
        (0, 4),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 1),
        (1, 5),
        (5, 2),
        (3, 6),
        (6, 4),
        (1, 7),
        (7, 4),
        (0, 7),
        (7, 8),
    ];
    let mut g = Graph::empty(9);
    for (x, y) in g_edges {
        g.add_edge(x, y);
    }
    for (x, y) in g.complement().edges() {
        b.edge(&v(x), &v(y));
    }
    b.label("X", &["v2", "v6", "v8"]);
    b.label("Y", &["v3", "v5", "v8"]);
    b
}

fn cons_335() -> Builder {
    let mut b = Builder::new(ConstructionId::C_335, true);
    b.wheel(6);
    b.add("v1");
    b.add("v2");
    b.edge("v1", "v2");
    b.join("v1", &["w1", "w2", "w5"]);
    b.join("v2", &["w2", "w4", "w5"]);
    b
}

fn cons_33l(l: usize) -> Builder {
    let mut b = Builder::new(ConstructionId::C_33l, true);
    b.wheel(6);
    let p = l - 3;
    for i in 1..=p {
        b.add(&v(i));
        if i > 1 {
            b.edge(&v(i - 1), &v(i));
        }
    }
    for i in 1..p {
        b.edge("w1", &v(i));
    }
    b.edge("w4", &v(p));
    b.join("w5", &[&v(p - 1), &v(p)]);
    b.edge(&v(p - 2), &v(p));
    b.edge("w2", "v1");
    b
}

fn cons_344() -> Builder {
    let mut b = cons_244();
    grow_u(&mut b, 1);
    b.delete("z");
    b.clear_labels();
    b.id = ConstructionId::C_344;
    b.alpha_equal = false;
    b
}

fn cons_34l(l: usize) -> Builder {
    let mut b = cons_344();
    grow_rim(&mut b, 6, 7, l - 4);
    b.id = ConstructionId::C_34l;
    b
}

fn cons_355() -> Builder {
    let mut b = cons_335();
    grow_rim(&mut b, 6, 7, 2);
    b.id = ConstructionId::C_355;
    b
}

fn cons_444() -> Builder {
    let mut b = cons_344();
    b.subdivide("u1", "w3", "u2", "w0");
    b.id = ConstructionId::C_444;
    b
}

fn cons_jk5(j: usize, k: usize) -> Builder {
    let mut b = cons_335();
    grow_rim(&mut b, 6, 7, k - 3);
    grow_u(&mut b, j - 3);
    b.id = ConstructionId::C_jk5;
    b
}

fn cons_jkl(j: usize, k: usize, l: usize) -> Builder {
    let mut b = cons_33l(l);
    grow_rim(&mut b, 6, 7, k - 3);
    grow_u(&mut b, j - 3);
    b.id = ConstructionId::C_jkl;
    b
}

fn line_seed_for_theta(spec: ThetaSpec) -> Result<Builder, SeedError> {
    let h = theta(spec)?;
    let f = line_graph_root(&h)?;
    let mut b = Builder::new(ConstructionId::LINE_ROOT, true);
    for i in 0..f.order() {
        b.add(&format!("f{i}"));
    }
    for (x, y) in f.edges() {
        b.edge(&format!("f{x}"), &format!("f{y}"));
    }
    Ok(b)
}

/// The house seed: path a-b-c and triangle c d e, returned as its complement.
pub fn house_seed() -> (Graph, ConstructionTrace) {
    let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
    let names: Vec<&str> = vec!["a", "b", "c", "d", "e"];
    let mut labels = BTreeMap::new();
    for pair in ["ac", "ad", "ae", "bd", "be"] {
        let set = pair
            .chars()
            .fold(0u64, |acc, c| acc | 1 << (c as u8 - b'a'));
        labels.insert(pair.to_string(), set);
    }
    let trace = ConstructionTrace {
        construction_id: ConstructionId::HOUSE,
        params: vec![1, 2, 3],
        names: names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.to_string(), i))
            .collect(),
        expected_labels: labels,
        expected_order: 5,
        alpha_equal: false,
    };
    (g.complement(), trace)
}

/// One checked clause of a seed verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeedVerification {
    pub construction_id: ConstructionId,
    pub i: usize,
    pub alpha: usize,
    pub i_set_count: usize,
    pub alpha_set_count: usize,
    /// Whether the α-graph is isomorphic to the i-graph.
    pub alpha_matches: bool,
    pub clauses: Vec<Clause>,
    pub passed: bool,
}

impl SeedVerification {
    pub fn failures(&self) -> Vec<&Clause> {
        self.clauses.iter().filter(|c| !c.passed).collect()
    }
}

/// Checks a complement seed against its target and trace.
pub fn verify_seed(
    gbar: &Graph,
    trace: &ConstructionTrace,
    target: &Graph,
    expected_i: usize,
) -> Result<SeedVerification, SeedError> {
    let g = gbar.complement();
    let (r, ig, ag) = slide_graphs(&g).map_err(|e| match e {
        crate::error::ReconfigError::Cap(c) => SeedError::Cap(c),
        other => SeedError::Graph(GraphError::Parameter(other.to_string())),
    })?;
    let mut clauses = Vec::new();
    let mut clause = |name, passed, detail: String| {
        clauses.push(Clause {
            name,
            passed,
            detail,
        })
    };
    clause(
        "i",
        r.i == expected_i,
        format!("i(G) = {}, expected {expected_i}", r.i),
    );
    let iso_i = ig
        .skeleton
        .as_ref()
        .is_some_and(|s| is_isomorphic(s, target));
    let degrees = ig.degree_sequence();
    clause(
        "isomorphism",
        iso_i,
        format!("i-graph degree sequence {degrees:?}"),
    );
    clause(
        "order",
        ig.order() == trace.expected_order,
        format!("{} i-sets, expected {}", ig.order(), trace.expected_order),
    );
    let missing: Vec<String> = trace
        .expected_labels
        .iter()
        .filter(|(_, &s)| ig.index_of(s).is_none())
        .map(|(name, &s)| format!("{name}={:?}", set_to_vec(s)))
        .collect();
    clause("labels", missing.is_empty(), format!("missing {missing:?}"));
    let alpha_matches = match (&ig.skeleton, &ag.skeleton) {
        (Some(a), Some(b)) => is_isomorphic(a, b),
        _ => false,
    };
    if trace.alpha_equal {
        let iso_a = ag
            .skeleton
            .as_ref()
            .is_some_and(|s| is_isomorphic(s, target));
        clause(
            "alpha",
            iso_a,
            format!("alpha(G) = {}, {} alpha-sets", r.alpha, ag.order()),
        );
    }
    if expected_i == 3 {
        let tri = triangle_isets_of_complement(gbar);
        let extra: Vec<Vec<usize>> = tri
            .iter()
            .filter(|s| !r.i_sets.contains(s))
            .map(|&s| set_to_vec(s))
            .collect();
        clause(
            "triangles",
            tri == r.i_sets,
            format!("triangles not among i-sets: {extra:?}"),
        );
    }
    let passed = clauses.iter().all(|c| c.passed);
    Ok(SeedVerification {
        construction_id: trace.construction_id,
        i: r.i,
        alpha: r.alpha,
        i_set_count: r.i_sets.len(),
        alpha_set_count: r.alpha_sets.len(),
        alpha_matches,
        clauses,
        passed,
    })
}

/// Builds and verifies the seed for θ(j,k,l) under the given dispatch.
pub fn verify_theta_seed_with(
    spec: ThetaSpec,
    dispatch: Dispatch,
) -> Result<SeedVerification, SeedResult> {
    match seed_for(spec, dispatch) {
        SeedResult::Realizable { gbar, trace } => {
            let target = theta(spec).expect("valid spec");
            let expected_i = if trace.construction_id == ConstructionId::LINE_ROOT {
                2
            } else {
                3
            };
            verify_seed(&gbar, &trace, &target, expected_i)
                .map_err(|e| SeedResult::InvalidSpec(e.to_string()))
        }
        other => Err(other),
    }
}

pub fn verify_theta_seed(spec: ThetaSpec) -> Result<SeedVerification, SeedResult> {
    verify_theta_seed_with(spec, Dispatch::MostSpecific)
}

/// Root `F` with `L(F) ≅ h`, via a Krausz partition. Prefers a triangle-free root.
pub fn line_graph_root(h: &Graph) -> Result<Graph, SeedError> {
    if !h.is_connected() {
        return Err(SeedError::Disconnected);
    }
    if h.order() == 1 {
        return Ok(make_named_graph(NamedGraph::Path(2))?);
    }
    let mut first: Option<Graph> = None;
    let mut chosen: Option<Graph> = None;
    let mut state = Krausz {
        h,
        cliques: Vec::new(),
        count: vec![0; h.order()],
        covered: vec![0; h.order()],
    };
    state.search(&mut |cliques| {
        let Ok(f) = root_from_cliques(h, cliques) else {
            return false;
        };
        if !f.has_triangle() {
            chosen = Some(f);
            return true;
        }
        first.get_or_insert(f);
        false
    });
    chosen.or(first).ok_or(SeedError::NotALineGraph {
        claw_free: is_claw_free(h),
    })
}

struct Krausz<'a> {
    h: &'a Graph,
    cliques: Vec<u64>,
    count: Vec<u8>,
    /// Covered edges, as rows.
    covered: Vec<u64>,
}

impl Krausz<'_> {
    /// Calls `done` on each complete partition; stops when it returns true.
    fn search(&mut self, done: &mut dyn FnMut(&[u64]) -> bool) -> bool {
        let h = self.h;
        let Some(u) = (0..h.order()).find(|&u| h.neighbors(u) & !self.covered[u] != 0) else {
            return done(&self.cliques);
        };
        let open = h.neighbors(u) & !self.covered[u];
        match self.count[u] {
            0 => {
                let v = open.trailing_zeros() as usize;
                let optional = open & h.neighbors(v);
                // Enumerate the part of `open` that joins v's clique.
                let bits: Vec<usize> = members(optional).collect();
                for pick in 0u64..1 << bits.len() {
                    let s = bits
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| pick >> i & 1 == 1)
                        .fold(0u64, |a, (_, &x)| a | 1 << x);
                    let first = 1u64 << u | 1 << v | s;
                    let rest = open & !first;
                    if !self.fits(first) {
                        continue;
                    }
                    let second = if rest == 0 { 0 } else { rest | 1 << u };
                    if second != 0 && (!h.is_clique(second) || !self.disjoint(first, second)) {
                        continue;
                    }
                    self.push(first);
                    if second != 0 && self.fits(second) {
                        self.push(second);
                        if self.search(done) {
                            return true;
                        }
                        self.pop();
                    } else if second == 0 && self.search(done) {
                        return true;
                    }
                    self.pop();
                }
                false
            }
            1 => {
                let c = open | 1 << u;
                if !self.fits(c) {
                    return false;
                }
                self.push(c);
                if self.search(done) {
                    return true;
                }
                self.pop();
                false
            }
            _ => false,
        }
    }

    /// Clique of `h`, no edge already covered, and no member already in two parts.
    fn fits(&self, c: u64) -> bool {
        self.h.is_clique(c) && members(c).all(|x| self.count[x] < 2 && self.covered[x] & c == 0)
    }

    fn disjoint(&self, a: u64, b: u64) -> bool {
        (a & b).count_ones() <= 1
    }

    fn push(&mut self, c: u64) {
        for x in members(c) {
            self.count[x] += 1;
            self.covered[x] |= c & !(1 << x);
        }
        self.cliques.push(c);
    }

    fn pop(&mut self) {
        let c = self.cliques.pop().unwrap();
        for x in members(c) {
            self.count[x] -= 1;
            self.covered[x] &= !(c & !(1 << x));
        }
    }
}

fn root_from_cliques(h: &Graph, cliques: &[u64]) -> Result<Graph, GraphError> {
    let mut ends: Vec<Vec<usize>> = vec![Vec::new(); h.order()];
    for (i, &c) in cliques.iter().enumerate() {
        for x in members(c) {
            ends[x].push(i);
        }
    }
    let mut n = cliques.len();
    let mut edges = Vec::new();
    for e in &ends {
        match e.as_slice() {
            [a, b] => edges.push((*a, *b)),
            [a] => {
                edges.push((*a, n));
                n += 1;
            }
            _ => {
                edges.push((n, n + 1));
                n += 2;
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Seed `G` with ℐ(G) ≅ h for a connected diamond-free line graph `h`.
/// Complete graphs are returned unchanged.
pub fn seed_from_line_graph(h: &Graph) -> Result<Graph, SeedError> {
    if !h.is_connected() {
        return Err(SeedError::Disconnected);
    }
    if h.edge_count() == h.order() * (h.order() - 1) / 2 {
        return Ok(h.clone());
    }
    if contains_induced(h, &make_named_graph(NamedGraph::Diamond)?) {
        return Err(SeedError::ContainsDiamond);
    }
    Ok(line_graph_root(h)?.complement())
}

/// Adds an apex over the maximal-clique triangle `t` of `gbar`, removing `t` from the complement's i-sets.
pub fn apply_deletion(gbar: &Graph, t: VertexSet) -> Result<Graph, SeedError> {
    let triangles = triangle_isets_of_complement(gbar);
    if !triangles.contains(&t) {
        return Err(SeedError::NotMaximalTriangle(set_to_vec(t)));
    }
    if triangles.len() < 2 {
        return Err(SeedError::TooFewISets);
    }
    let mut out = gbar.clone();
    out.add_vertex(t)?;
    Ok(out)
}

/// Seed from a cubic, connected, bipartite plane graph: the complement of its dual.
#[derive(Clone, Debug)]
pub struct PlanarSeed {
    pub h: Graph,
    pub dual: Graph,
    pub trace: ConstructionTrace,
}

pub fn planar_seed(g: &Graph, rot: &RotationSystem) -> Result<PlanarSeed, SeedError> {
    if (0..g.order()).any(|v| g.degree(v) != 3) {
        return Err(SeedError::NotCubic);
    }
    if !g.is_connected() {
        return Err(SeedError::Disconnected);
    }
    if !g.is_bipartite() {
        return Err(SeedError::NotBipartite);
    }
    let (dual, _) = planar_dual(g, rot)?;
    let trace = ConstructionTrace {
        construction_id: ConstructionId::PLANAR_DUAL,
        params: vec![g.order()],
        names: (0..dual.order()).map(|f| (format!("f{f}"), f)).collect(),
        expected_labels: BTreeMap::new(),
        expected_order: g.order(),
        alpha_equal: true,
    };
    Ok(PlanarSeed {
        h: dual.complement(),
        dual,
        trace,
    })
}
