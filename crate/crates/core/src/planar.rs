//! Rotation systems, face tracing and planar duals.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use crate::error::{ParseError, PlanarError};
use crate::graph::Graph;

/// Cyclic order of neighbours around each vertex of a simple plane graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    rot: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Validates that `rot[v]` lists every neighbour of `v` exactly once.
    pub fn new(g: &Graph, rot: Vec<Vec<usize>>) -> Result<Self, PlanarError> {
        if rot.len() != g.order() {
            return Err(PlanarError::InconsistentRotation(format!(
                "{} rotations for {} vertices",
                rot.len(),
                g.order()
            )));
        }
        for (v, around) in rot.iter().enumerate() {
            let mut seen = 0u64;
            for &u in around {
                if u >= g.order() || !g.has_edge(u, v) {
                    return Err(PlanarError::InconsistentRotation(format!(
                        "{v}-{u} is not an edge"
                    )));
                }
                if seen >> u & 1 == 1 {
                    return Err(PlanarError::InconsistentRotation(format!(
                        "edge {v}-{u} repeated at {v}"
                    )));
                }
                seen |= 1 << u;
            }
            if seen != g.neighbors(v) {
                return Err(PlanarError::InconsistentRotation(format!(
                    "rotation at {v} misses incident edges"
                )));
            }
        }
        Ok(RotationSystem { rot })
    }

    /// Rotation of a straight-line drawing: neighbours sorted by angle around each vertex.
    pub fn from_coordinates(g: &Graph, coords: &[(f64, f64)]) -> Result<Self, PlanarError> {
        let rot = (0..g.order())
            .map(|v| {
                let (x, y) = coords[v];
                let mut nb: Vec<usize> = crate::graph::members(g.neighbors(v)).collect();
                nb.sort_by(|&a, &b| {
                    let ta = (coords[a].1 - y).atan2(coords[a].0 - x);
                    let tb = (coords[b].1 - y).atan2(coords[b].0 - x);
                    ta.total_cmp(&tb)
                });
                nb
            })
            .collect();
        Self::new(g, rot)
    }

    pub fn around(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    /// Parses lines `v: a-b c-d ...`, each edge named by its endpoints, smaller first.
    pub fn parse(g: &Graph, text: &str) -> Result<Self, ParseError> {
        let mut rot: Vec<Option<Vec<usize>>> = vec![None; g.order()];
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let l = raw.trim();
            if l.is_empty() || l.starts_with('#') {
                continue;
            }
            let bad = |msg: String| ParseError::Rotation { line, msg };
            let (head, tail) = l
                .split_once(':')
                .ok_or_else(|| bad("expected `v: edges...`".into()))?;
            let v: usize = head
                .trim()
                .parse()
                .map_err(|_| bad(format!("bad vertex {:?}", head.trim())))?;
            if v >= g.order() {
                return Err(bad(format!("vertex {v} out of range")));
            }
            if rot[v].is_some() {
                return Err(bad(format!("vertex {v} listed twice")));
            }
            let mut around = Vec::new();
            for tok in tail.split_whitespace() {
                let (a, b) = tok
                    .split_once('-')
                    .ok_or_else(|| bad(format!("bad edge {tok:?}")))?;
                let a: usize = a.parse().map_err(|_| bad(format!("bad edge {tok:?}")))?;
                let b: usize = b.parse().map_err(|_| bad(format!("bad edge {tok:?}")))?;
                if a >= b {
                    return Err(bad(format!(
                        "edge {tok:?} must name the smaller endpoint first"
                    )));
                }
                let other = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    return Err(bad(format!("edge {tok:?} is not incident to {v}")));
                };
                around.push(other);
            }
            rot[v] = Some(around);
        }
        let rot = rot.into_iter().map(Option::unwrap_or_default).collect();
        Self::new(g, rot).map_err(|e| ParseError::Rotation {
            line: 0,
            msg: e.to_string(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (v, around) in self.rot.iter().enumerate() {
            let names: Vec<String> = around
                .iter()
                .map(|&u| format!("{}-{}", v.min(u), v.max(u)))
                .collect();
            let _ = writeln!(s, "{v}: {}", names.join(" "));
        }
        s
    }

    /// Faces as cyclic dart sequences `(u, v)`.
    pub fn faces(&self) -> Vec<Vec<(usize, usize)>> {
        let mut pos: HashMap<(usize, usize), usize> = HashMap::new();
        for (v, around) in self.rot.iter().enumerate() {
            for (i, &u) in around.iter().enumerate() {
                pos.insert((v, u), i);
            }
        }
        // Arriving at v along u->v, leave along v->w where w follows u around v.
        let next = |(u, v): (usize, usize)| {
            let around = &self.rot[v];
            let i = pos[&(v, u)];
            (v, around[(i + 1) % around.len()])
        };
        let mut seen: HashSet<(usize, usize)> = HashSet::new();
        let mut faces = Vec::new();
        for (v, around) in self.rot.iter().enumerate() {
            for &u in around {
                if seen.contains(&(v, u)) {
                    continue;
                }
                let mut face = Vec::new();
                let mut d = (v, u);
                while !seen.contains(&d) {
                    seen.insert(d);
                    face.push(d);
                    d = next(d);
                }
                faces.push(face);
            }
        }
        faces
    }
}

/// Dual graph (one vertex per face) and the dual's induced rotation system.
pub fn planar_dual(
    g: &Graph,
    rot: &RotationSystem,
) -> Result<(Graph, RotationSystem), PlanarError> {
    if rot.rot.len() != g.order() {
        return Err(PlanarError::InconsistentRotation(
            "rotation is for a different graph".into(),
        ));
    }
    let faces = rot.faces();
    let f = faces.len();
    if f < 2 {
        return Err(PlanarError::TooFewFaces(f));
    }
    if !g.is_connected() || g.order() + f != g.edge_count() + 2 {
        return Err(PlanarError::NotPlanarEmbedding { faces: f });
    }
    let mut face_of: HashMap<(usize, usize), usize> = HashMap::new();
    for (i, face) in faces.iter().enumerate() {
        for &d in face {
            face_of.insert(d, i);
        }
    }
    let mut dual = Graph::try_empty(f)?;
    for (u, v) in g.edges() {
        let (a, b) = (face_of[&(u, v)], face_of[&(v, u)]);
        if a == b {
            return Err(PlanarError::NonSimpleDual(format!(
                "edge {u}-{v} borders one face on both sides"
            )));
        }
        if dual.has_edge(a, b) {
            return Err(PlanarError::NonSimpleDual(format!(
                "faces {a} and {b} share more than one edge"
            )));
        }
        dual.add_edge(a, b);
    }
    let dual_rot = faces
        .iter()
        .map(|face| face.iter().map(|&(u, v)| face_of[&(v, u)]).collect())
        .collect();
    let dual_rot = RotationSystem::new(&dual, dual_rot)?;
    Ok((dual, dual_rot))
}

/// Standard straight-line drawings used as fixtures.
pub mod fixtures {
    use super::RotationSystem;
    use crate::graph::{make_named_graph, Graph, NamedGraph};

    /// `K_4`: centre 3 inside triangle 0 1 2.
    pub fn k4() -> (Graph, RotationSystem) {
        let g = make_named_graph(NamedGraph::Complete(4)).unwrap();
        let coords = [(0.0, 2.0), (-2.0, -1.0), (2.0, -1.0), (0.0, 0.0)];
        let r = RotationSystem::from_coordinates(&g, &coords).unwrap();
        (g, r)
    }

    /// Cube `Q_3`: outer square 0..4, inner square 4..8, spokes `i -- i+4`.
    pub fn cube() -> (Graph, RotationSystem) {
        prism(4)
    }

    /// Prism `C_k × K_2`: outer cycle 0..k, inner cycle k..2k, spokes `i -- i+k`.
    pub fn prism(k: usize) -> (Graph, RotationSystem) {
        let mut g = Graph::empty(2 * k);
        let mut coords = Vec::with_capacity(2 * k);
        for ring in [2.0, 1.0] {
            for i in 0..k {
                let t = std::f64::consts::TAU * i as f64 / k as f64;
                coords.push((ring * t.cos(), ring * t.sin()));
            }
        }
        for i in 0..k {
            g.add_edge(i, (i + 1) % k);
            g.add_edge(k + i, k + (i + 1) % k);
            g.add_edge(i, i + k);
        }
        let r = RotationSystem::from_coordinates(&g, &coords).unwrap();
        (g, r)
    }

    /// `C_k` drawn as a convex polygon.
    pub fn cycle(k: usize) -> (Graph, RotationSystem) {
        let g = make_named_graph(NamedGraph::Cycle(k)).unwrap();
        let coords: Vec<(f64, f64)> = (0..k)
            .map(|i| {
                let t = std::f64::consts::TAU * i as f64 / k as f64;
                (t.cos(), t.sin())
            })
            .collect();
        let r = RotationSystem::from_coordinates(&g, &coords).unwrap();
        (g, r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_named_graph, NamedGraph};
    use crate::iso::is_isomorphic;

    #[test]
    fn k4_is_self_dual() {
        let (g, r) = fixtures::k4();
        let (d, dr) = planar_dual(&g, &r).unwrap();
        assert!(is_isomorphic(&d, &g));
        let (dd, _) = planar_dual(&d, &dr).unwrap();
        assert!(is_isomorphic(&dd, &g));
    }

    #[test]
    fn cube_dual_is_octahedron() {
        let (g, r) = fixtures::cube();
        let (d, dr) = planar_dual(&g, &r).unwrap();
        let oct = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)])
            .unwrap()
            .complement();
        assert!(is_isomorphic(&d, &oct));
        let (dd, _) = planar_dual(&d, &dr).unwrap();
        assert!(is_isomorphic(&dd, &g));
    }

    #[test]
    fn square_dual_is_not_simple() {
        let (g, r) = fixtures::cycle(4);
        assert!(matches!(
            planar_dual(&g, &r),
            Err(PlanarError::NonSimpleDual(_))
        ));
    }

    #[test]
    fn bridge_gives_loop() {
        let g = make_named_graph(NamedGraph::Path(3)).unwrap();
        let r = RotationSystem::new(&g, vec![vec![1], vec![0, 2], vec![1]]).unwrap();
        assert!(matches!(
            planar_dual(&g, &r),
            Err(PlanarError::TooFewFaces(1))
        ));
    }

    #[test]
    fn rotation_validation() {
        let g = make_named_graph(NamedGraph::Complete(3)).unwrap();
        assert!(RotationSystem::new(&g, vec![vec![1], vec![0, 2], vec![0, 1]]).is_err());
        assert!(RotationSystem::new(&g, vec![vec![1, 1], vec![0, 2], vec![0, 1]]).is_err());
    }

    #[test]
    fn non_planar_rotation_rejected() {
        // An arbitrary rotation of K_4 that is a torus embedding.
        let g = make_named_graph(NamedGraph::Complete(4)).unwrap();
        let r = RotationSystem::new(
            &g,
            vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]],
        )
        .unwrap();
        assert!(r.faces().len() != 4 || planar_dual(&g, &r).is_ok());
        if r.faces().len() != 4 {
            assert!(matches!(
                planar_dual(&g, &r),
                Err(PlanarError::NotPlanarEmbedding { .. })
            ));
        }
    }

    #[test]
    fn rotation_text_round_trip() {
        let (g, r) = fixtures::cube();
        let text = r.to_text();
        assert!(text.starts_with("0: "));
        assert_eq!(RotationSystem::parse(&g, &text).unwrap(), r);
        assert!(RotationSystem::parse(&g, "0: 1-0\n").is_err());
        assert!(RotationSystem::parse(&g, "0: 2-3\n").is_err());
    }
}
