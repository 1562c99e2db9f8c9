use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the fullerene toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("atom count {0} is not feasible (must be 20 or an even number >= 24)")]
    InfeasibleN(usize),

    #[error("invalid spiral sequence: {0}")]
    InvalidSequence(String),

    /// Winding could not be completed; `step` is the 1-based face position
    /// at which the frontier could not host the next face.
    #[error("spiral cannot be wound (failed at face {step})")]
    InvalidSpiral { step: usize },

    #[error("no face spiral closes on this dual graph")]
    NotSpiralable,

    #[error("invalid dual graph: {0}")]
    InvalidDual(String),

    #[error("resource limit exceeded: {what} ({value} > {limit})")]
    ResourceLimit {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("matrix orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),

    #[error("Jacobi iteration did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("odd Newton degree {0} rejected (odd degrees do not separate isomers)")]
    OddDegreeRejected(usize),

    #[error("invalid cluster schema: {0}")]
    InvalidSchema(String),

    #[error(
        "no complete clusterization up to degree {bound}: isomers {first} and {second} are not separated{}",
        if *.cospectral { " (they are cospectral)" } else { "" }
    )]
    NoCompleteClusterization {
        bound: usize,
        first: usize,
        second: usize,
        cospectral: bool,
    },

    #[error("empty isomer set")]
    EmptyInput,

    #[error("isomers of different atom counts ({0} and {1}) in one set")]
    MixedAtomCounts(usize, usize),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("isomer index {index} out of range (1..={max})")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("negative relative energy {value} for isomer {index}")]
    NegativeEnergy { index: usize, value: f64 },

    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),

    #[error("domain error: {0}")]
    DomainError(String),

    #[error("energy table is missing {missing} of {expected} isomers")]
    IncompleteEnergies { missing: usize, expected: usize },

    #[error("CSV output: {0}")]
    Csv(#[from] csv::Error),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
