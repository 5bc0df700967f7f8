//! Tools for exhibiting knots whose SL₂(ℂ) character variety has a component
//! of dimension greater than one.
//!
//! The crate builds parameterized families of SL₂(ℂ) representations of knot
//! groups along two diagrammatic routes — rational tangle replacement in a
//! split link diagram, and braids composed with an orientation-reversing
//! involution — verifies the defining identities exactly or to a certified
//! numeric tolerance, and emits machine-readable certificates of the
//! resulting dimension lower bounds.
//!
//! The main entry points:
//!
//! * [`exact`] — Gaussian-rational scalars, sparse Laurent polynomials,
//!   2×2 matrices over a commutative ring, free-group words.
//! * [`braid`] — braid words, the two involutions, permutation images, the
//!   Artin action on matrix tuples, Turk's head braids, strand holonomy.
//! * [`trace`] — the equal-trace slice of the rank-3 character variety, the
//!   B₃ action on (x, y, z, b, c), the quotient-ring claim, numeric location
//!   of the symmetric subvariety U, and lifting coordinates back to matrices.
//! * [`diagram`] — planar diagram codes, Wirtinger propagation, rational
//!   tangles, c-closures, Riley polynomials, and the two family builders.
//! * [`certify`] — irreducibility and intertwiner extraction, the Klein
//!   bottle classifier, hypothesis checks, Jacobian rank witnesses, and
//!   certificate serialization.
//! * [`cli`] — the `xlk` command line frontend.

pub mod braid;
pub mod certify;
pub mod cli;
pub mod data;
pub mod diagram;
pub mod exact;
pub mod numeric;
pub mod trace;

mod book;

pub use exact::{GaussRat, LaurentPoly, Mat2, Scalar, Vars};

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unbound generator index {0} in word evaluation")]
    UnboundGenerator(usize),
    #[error("strand count mismatch: expected {expected}, got {got}")]
    StrandMismatch { expected: usize, got: usize },
    #[error("braid generator index {index} out of range for {strands} strands")]
    GeneratorRange { index: usize, strands: usize },
    #[error("negative exponent on non-unit variable `{0}`")]
    NonUnitNegativeExponent(String),
    #[error("variable sets differ: {0} vs {1}")]
    VarMismatch(String, String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("traces are not equal: {0}")]
    UnequalTraces(String),
    #[error("turk's head parameters must be odd and at least 3: ({0}, {1})")]
    TurksHeadParity(usize, usize),
    #[error("closure of the given braid with the involution is not a knot")]
    ClosureNotAKnot,
    #[error("solver failed to converge: {0}")]
    SolverFailed(String),
    #[error("no points found: {0}")]
    NoPoints(String),
    #[error("characters disagree, no intertwiner exists (max trace gap {0:.3e})")]
    NoIntertwiner(f64),
    #[error("intertwiner solution space has dimension != 1 (singular values {0:?})")]
    DegenerateIntertwiner(Vec<f64>),
    #[error("degenerate lift: {0}")]
    DegenerateLift(String),
    #[error("coordinates lie on the reducible locus")]
    ReducibleCoords,
    #[error("c-closure is not a knot: {0}")]
    NotAKnot(String),
    #[error("tangle boundary labels incompatible with the crossing: {0}")]
    OrientationError(String),
    #[error("unassigned arc {0} after propagation")]
    UnassignedArc(usize),
    #[error("crossing `{0}` not found")]
    NoSuchCrossing(String),
    #[error("non-coprime two-bridge parameters ({0}, {1})")]
    NotCoprime(usize, usize),
    #[error("riley convention check failed: {0}")]
    RileyConvention(String),
    #[error("indeterminate rank: spectral gap {gap:.3e} below 1e2 (singular values {svals:?})")]
    IndeterminateRank { gap: f64, svals: Vec<f64> },
    #[error("stencil point residual {0:.3e} exceeds tolerance")]
    StencilResidual(f64),
    #[error("hypothesis check inconclusive: {0}")]
    Inconclusive(String),
    #[error("certificate verification failed: {0}")]
    VerifyFailed(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Numeric tolerances used across the crate. All thresholds that decide a
/// certificate verdict live here so they can be pinned in one place and
/// overridden per run.
#[derive(Debug, Clone, Copy, serde::Serialize, serde::Deserialize)]
pub struct Tolerances {
    /// Maximum absolute entry deviation accepted for matrix identities.
    pub residual: f64,
    /// Relative singular value cutoff for Jacobian rank decisions.
    pub rank_cutoff: f64,
    /// Spectral gap ratio required for a certificate-grade rank verdict.
    pub cert_gap: f64,
    /// Margin by which tr G₁⋯Gₙ must avoid ±2.
    pub trace_margin: f64,
    /// Pairwise distance below which two sample points count as equal.
    pub distinct: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            residual: 1e-10,
            rank_cutoff: 1e-3,
            cert_gap: 1e6,
            trace_margin: 1e-3,
            distinct: 1e-4,
        }
    }
}
