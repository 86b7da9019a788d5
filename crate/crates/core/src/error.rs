use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid configuration space: {0}")]
    InvalidSpace(String),

    #[error("particle index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("pair flat needs two distinct particles, got ({0}, {0})")]
    RepeatedIndex(usize),

    #[error("malformed partition: {0}")]
    InvalidPartition(String),

    #[error("interaction order k={k} outside 2..={n}")]
    OrderOutOfRange { k: usize, n: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("map is not orthogonal")]
    NotOrthogonal,

    #[error("map does not come from a particle permutation")]
    NotPermutationMap,

    #[error("scale factor must be nonzero")]
    ZeroScale,

    #[error("flat has codimension {0}, expected 1")]
    NotCodimOne(usize),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("point lies on the coincidence structure: particles {} coincide", format_blocks(.coinciding))]
    Boundary { coinciding: Vec<Vec<usize>> },

    #[error("{what} exceeds the configured cap of {limit}")]
    CapExceeded { what: String, limit: usize },

    #[error("path needs at least two vertices")]
    PathTooShort,

    #[error("consecutive vertices {0} and {next} coincide", next = .0 + 1)]
    RepeatedVertex(usize),

    #[error("path is not closed")]
    OpenPath,

    #[error("segment {segment} meets {atom}")]
    Collision { segment: usize, atom: String },

    #[error("vertex {vertex} lies on the reference ray of {atom}; perturb the loop")]
    GeneralPosition { vertex: usize, atom: String },

    #[error("no collision-free path found after {attempts} attempts")]
    NoCertificate { attempts: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub fn format_blocks(blocks: &[Vec<usize>]) -> String {
    blocks
        .iter()
        .map(|b| {
            let inner: Vec<String> = b.iter().map(ToString::to_string).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect::<Vec<_>>()
        .join(", ")
}
