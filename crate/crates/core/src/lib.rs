//! Exact combinatorics of finite linear systems.
//!
//! A linear system is a family of lines (point sets) in which two distinct
//! lines share at most one point. This crate constructs the classical
//! examples (projective planes and their truncations, seeded random
//! systems), computes transversal, matching and 2-packing numbers exactly
//! with machine-checkable certificates, and enumerates intersecting systems
//! exhaustively up to isomorphism through their edge-clique-partition
//! encoding. On top of the solvers sit audit harnesses that sweep catalogs
//! of instances against known inequalities and search for the minimum line
//! count at which an intersecting r-partite system reaches transversal
//! number r−1.

pub mod audit;
pub mod bits;
pub mod canon;
pub mod catalog;
pub mod cliquerep;
pub mod field;
pub mod gen;
pub mod invariants;
pub mod io;
pub mod plane;
pub mod system;
pub mod verify;

pub use system::{
    degree_profile, find_partition, DegreeProfile, LinearSystem, SidePartition, ValidationReport,
};

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("order {0} is not a prime power")]
    NotPrimePower(usize),

    #[error("order {0} is not in the supported set {{2,3,4,5,7,8,9,11,13,16}}")]
    UnsupportedOrder(usize),

    #[error("point index {0} out of range")]
    PointOutOfRange(usize),

    #[error("system is not {expected}-uniform (uniformity: {found:?})")]
    NotUniform {
        expected: usize,
        found: Option<usize>,
    },

    #[error(
        "random system infeasible: placed {placed} of {requested} lines after {attempts} attempts"
    )]
    RandomInfeasible {
        placed: usize,
        requested: usize,
        attempts: u64,
    },

    #[error("oracle cap exceeded: {0}")]
    OracleCap(String),

    #[error("system is not intersecting: lines {0} and {1} are disjoint")]
    NotIntersecting(usize, usize),

    #[error("invalid clique partition: {0}")]
    InvalidPartition(String),

    #[error("line {line} lies in {count} cliques, which exceeds r={r}")]
    RealizationInfeasible {
        line: usize,
        count: usize,
        r: usize,
    },

    #[error("unknown lemma id `{0}`")]
    UnknownLemma(String),

    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("solver/oracle mismatch: {0}")]
    SolverOracleMismatch(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
