use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("image leaves the target subspace (first bad column {column})")]
    NotStable { column: usize },

    #[error("not a complex: boundary composite is nonzero{}", at_degree(.degree))]
    NotAComplex { degree: Option<usize> },

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("antipode is singular")]
    SingularAntipode,

    #[error("axioms fail: {0}")]
    Axiom(String),

    #[error("invalid structure: {0}")]
    InvalidStructure(String),

    #[error("coefficient does not meet the theory's requirements: {0}")]
    CoefficientMismatch(String),

    #[error("degree cap {0} is too small")]
    CapTooSmall(usize),

    #[error("boundary does not descend to the cyclic complex at degree {0}")]
    DescentFailure(usize),

    #[error("cyclic theory needs characteristic 0, got {0}")]
    CharNotZero(u64),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

fn at_degree(d: &Option<usize>) -> String {
    d.map(|d| format!(" at degree {d}")).unwrap_or_default()
}

pub type Result<T> = std::result::Result<T, Error>;
