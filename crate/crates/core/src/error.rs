use thiserror::Error;

use crate::intlin::Int;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("undefined gcd certificate")]
    UndefinedGcd,
    #[error("matrix must have positive dimensions")]
    EmptyMatrix,
    #[error("ragged or mismatched dimensions: {0}")]
    Dimension(String),
    #[error("determinant of a non-square {rows}x{cols} matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("not a sublattice element")]
    NotSublattice,
    #[error("ambient vectors are not linearly independent")]
    DependentBasis,
    #[error("no unimodular completion")]
    NoUnimodularCompletion,
    #[error("not a closed orientable manifold profile: {0}")]
    NotClosedProfile(String),
    #[error("resolve or propagate extension first")]
    UnresolvedExtension,
    #[error("{0} does not admit the extension")]
    BadExtension(String),
    #[error("circles coincide")]
    CirclesCoincide,
    #[error("slope ({p}, {q}) is not primitive")]
    NonPrimitiveSlope { p: i64, q: i64 },
    #[error("finite subgroup order must be positive")]
    BadFiniteOrder,
    #[error("h does not match generated finite subgroup (given {given}, generated {generated})")]
    HMismatch { given: Int, generated: Int },
    #[error("invalid diagram: {}", .0.join("; "))]
    InvalidDiagram(Vec<String>),
    #[error("product action, use catalog")]
    ProductAction,
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("dimension overflow: total dimension {0} exceeds 7")]
    DimensionOverflow(usize),
    #[error("not a cycle")]
    NotACycle,
    #[error("delta mismatch: {delta} is not gcd({m1}, {m2})")]
    DeltaMismatch { m1: Int, m2: Int, delta: Int },
    #[error("inconsistent computation: {0}")]
    Inconsistent(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}
