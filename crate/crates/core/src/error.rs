use num_complex::Complex64;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero polynomial has no well-defined roots")]
    ZeroPolynomial,

    #[error("denominator is identically zero")]
    ZeroDenominator,

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("pole of order {order} at {center} is not supported (max 2)")]
    UnsupportedSingularity { center: Complex64, order: usize },

    #[error("expansion order {0} is below the supported minimum of -2")]
    OrderOutOfRange(i32),

    #[error("rational function is unbounded at infinity (numerator degree {num} > denominator degree {den})")]
    UnboundedAtInfinity { num: usize, den: usize },

    #[error("unsupported problem structure: {0}")]
    UnsupportedStructure(String),

    #[error("order -2 Laurent coefficient at {0} depends on the energy")]
    EnergyDependentResidue(Complex64),

    #[error("{0} is not a fixed pole of the problem")]
    NotAFixedPole(Complex64),

    #[error("family/construction mismatch: {0}")]
    ConstructionMismatch(String),

    #[error("degenerate linear system: {0}")]
    DegenerateSystem(String),

    #[error("eigensolver failed to converge: {0}")]
    NoConvergence(String),

    #[error("degenerate Jacobi recurrence at degree {degree}")]
    DegenerateRecurrence { degree: usize },

    #[error("contour integral gave non-integer winding number {0}")]
    NonIntegerWinding(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no usable sample point near x = {0}")]
    NoSamplePoint(f64),
}
