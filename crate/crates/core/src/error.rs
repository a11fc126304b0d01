use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph needs {0} vertices, capacity is 64")]
    Capacity(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("adjacency rows not symmetric at {0}-{1}")]
    Asymmetric(usize, usize),
    #[error("invalid theta spec ({0},{1},{2}): need 1 <= j <= k <= l and not j = k = 1")]
    InvalidTheta(usize, usize, usize),
    #[error("bad parameter: {0}")]
    Parameter(String),
    #[error("graph has no edges")]
    Edgeless,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("rotation file line {line}: {msg}")]
    Rotation { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanarError {
    #[error("inconsistent rotation system: {0}")]
    InconsistentRotation(String),
    #[error("dual is not simple: {0}")]
    NonSimpleDual(String),
    #[error("embedding has {0} faces, need at least 2")]
    TooFewFaces(usize),
    #[error("face count {faces} violates Euler's formula for a connected plane graph")]
    NotPlanarEmbedding { faces: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Raised when an enumeration produces more sets than its cap allows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("set enumeration exceeded the cap of {cap} sets")]
pub struct CapExceeded {
    pub cap: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReconfigError {
    #[error("family mixes set sizes {0} and {1}")]
    MixedCardinality(u32, u32),
    #[error("set {0:#x} has vertices outside the base graph")]
    OutOfRange(u64),
    #[error(transparent)]
    Cap(#[from] CapExceeded),
}
