use thiserror::Error;

use crate::family::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("coefficient of degree {degree} is not an integer: {value}")]
    NonIntegral { degree: usize, value: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("not divisible: nonzero coefficient at degree {degree}")]
    NotDivisible { degree: usize },
    #[error("{part} coefficient of degree {degree} is not a nonnegative integer: {value}")]
    NotCounting {
        part: &'static str,
        degree: usize,
        value: String,
    },
    #[error("crosscap part has nonzero constant term {0}")]
    CrosscapConstant(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Gf2Error {
    #[error("dimension {0} exceeds the 64-row limit")]
    TooLarge(usize),
    #[error("row count {rows} does not match dimension {dim}")]
    RowCount { rows: usize, dim: usize },
    #[error("entry ({0}, {1}) breaks symmetry")]
    NotSymmetric(usize, usize),
    #[error("row {0} has bits set beyond the dimension")]
    OutOfRange(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("Ringel ladder parameter n must be at least 2, got {0}")]
    RingelTooSmall(usize),
    #[error("closed-end ladder needs at least one rung, got {0}")]
    ClosedEndTooSmall(usize),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("{family} family needs n >= {min}, got {n}")]
    BelowRange { family: Family, n: usize, min: usize },
    #[error("{family} family at n = {n} has 2^{bits} assignments, above the 2^{max_bits} enumeration bound")]
    Infeasible {
        family: Family,
        n: usize,
        bits: u32,
        max_bits: u32,
    },
    #[error("assignment vector {name} has length {got}, expected {expected}")]
    BadLength {
        name: &'static str,
        got: usize,
        expected: usize,
    },
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("recurrence has a zero a2 coefficient")]
    DegenerateA2,
    #[error("need initial values at two consecutive indices >= 1")]
    MissingInitials,
    #[error("closed form requested at n = {n}, below the first initial index {min}")]
    BelowInitials { n: usize, min: usize },
    #[error("linear system for the closed-form constants is singular")]
    Singular,
    #[error("determinant {0} is not a monomial; only monomial denominators are supported")]
    NonMonomialDeterminant(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DistError {
    #[error("{family} family is defined for index >= {min}, got {k}")]
    BelowRange { family: Family, k: usize, min: usize },
    #[error("coefficient formula for {family} at (n={n}, m={m}) is not integral: {value}")]
    NonIntegral {
        family: Family,
        n: usize,
        m: usize,
        value: String,
    },
    #[error("total embedding polynomial needs n >= 2, got {0}")]
    TotalBelowRange(usize),
    #[error("inconsistent families: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Enum(#[from] EnumError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph is not cubic: vertex {0} has degree {1}")]
    NotCubic(String, usize),
    #[error("overlap matrices from vertex colors need a Ringel ladder")]
    NotRingel,
    #[error("tracing at n = {n} needs 2^{bits} systems, above the n <= {cap} budget")]
    OverBudget { n: usize, bits: u32, cap: usize },
    #[error("Euler characteristic {chi} is odd for an orientable system")]
    OddOrientable { chi: i64 },
    #[error("Euler characteristic {chi} leaves no valid nonorientable surface")]
    BadNonorientable { chi: i64 },
    #[error("face tracing produced an odd number of directed orbits ({0})")]
    OddOrbits(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReportError {
    #[error("infeasible request: {0}")]
    Infeasible(String),
    #[error(transparent)]
    Dist(#[from] DistError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Enum(#[from] EnumError),
}
