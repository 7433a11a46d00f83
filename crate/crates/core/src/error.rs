use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("color {color} out of range for a pattern on {k} colors")]
    ColorOutOfRange { color: usize, k: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("pattern graph has a loop at color {0}")]
    PatternLoop(usize),
    #[error("pattern graphs are limited to {max} colors, got {k}")]
    PatternTooLarge { k: usize, max: usize },
    #[error("weight of vertex {0} is negative")]
    NegativeWeight(Vertex),
    #[error("operation needs a nonempty vertex set")]
    EmptySet,
    #[error("graph is not P5-free: induced path {0:?}")]
    NotP5Free([Vertex; 5]),
    #[error("color {0} has no dominator assigned to it")]
    EmptyColorClass(usize),
    #[error("instance has {n} vertices, above the brute-force cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("no P5-free graph found after {0} tries")]
    GeneratorExhausted(u32),
    #[error("family member {0:?} has no list homomorphism")]
    InfeasibleMember(Vec<Vertex>),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    InvalidArgument(String),
}
