use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("expected {expected} images, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("point {point} out of range for degree {degree}")]
    OutOfRange { point: usize, degree: usize },
    #[error("point {repeated} occurs twice")]
    NotBijective { repeated: usize },
}

/// Failures while deriving or querying the dodecahedron model.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModelError {
    #[error("vertex id {0} out of range 0..20")]
    VertexOutOfRange(usize),
    #[error("icosahedron face id {0} out of range 0..20")]
    DualFaceOutOfRange(usize),
    #[error("inconsistent model: {0}")]
    Inconsistent(String),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SymmetryError {
    #[error("matrix does not permute the vertices: no vertex within tolerance of image of {0}")]
    NoMatchingVertex(usize),
    #[error("matrix sends two vertices onto vertex {0}")]
    NotBijective(usize),
    #[error("permutation does not stabilize the compound: tetrahedron {0} has no image")]
    DoesNotStabilize(usize),
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChromaError {
    #[error("colouring must have 20 entries, found {0}")]
    WrongLength(usize),
    #[error("colour {colour} at vertex {vertex} is outside 1..=5")]
    ColourOutOfRange { vertex: usize, colour: u8 },
    #[error("colouring is not face-rainbow: face {face} repeats a colour")]
    NotRainbow { face: usize },
    #[error("subgroup is not closed: product of two members lies outside it")]
    SubgroupNotClosed,
    #[error("subgroup does not contain the identity")]
    MissingIdentity,
    #[error("group image of a colouring lies outside the supplied colouring set")]
    ImageOutsideSet,
}

/// The constraint-propagation replay hit a dead end it should never reach.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReplayError {
    #[error("frame {frame:?}, branch {branch}: vertex {vertex} has no admissible colour")]
    Contradiction {
        frame: Vec<usize>,
        branch: usize,
        vertex: usize,
    },
    #[error("frame {frame:?}, branch {branch}: propagation stalled while colouring {stage}")]
    Stalled {
        frame: Vec<usize>,
        branch: usize,
        stage: &'static str,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CompoundError {
    #[error("expected exactly two compounds of five tetrahedra, found {0}")]
    PartitionFailure(usize),
    #[error("colour {colour} class is not an inscribed tetrahedron")]
    ClassNotTetrahedron { colour: u8 },
    #[error("colour classes mix tetrahedra from both compounds")]
    MixedCompounds,
    #[error(transparent)]
    Chroma(#[from] ChromaError),
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed OFF data at line {line}: {reason}")]
    Off { line: usize, reason: String },
    #[error("unsupported labelling {0:?}; expected \"canonical-v1\"")]
    Labelling(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Chroma(#[from] ChromaError),
}
