//! Embedding distributions of Ringel ladders and their companion ladder
//! families, computed four independent ways: brute-force rank enumeration
//! of GF(2) overlap matrices, linear recurrences, Chebyshev closed forms,
//! and face tracing of every rotation system.

pub mod chebyshev;
pub mod distributions;
pub mod error;
pub mod family;
pub mod gf2;
pub mod graph;
pub mod oracle;
pub mod overlap;
pub mod parallel;
pub mod poly;
pub mod report;

pub use error::{
    DistError, EnumError, Gf2Error, GraphError, OracleError, PolyError, ReportError, SolveError,
};
pub use family::{Family, Method};
pub use gf2::Gf2SymMatrix;
pub use graph::LadderGraph;
pub use overlap::{brute_rank_distribution, EnumConfig, RankDistribution};
pub use poly::{Poly, TotalPoly};
