//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by construction, quadrature, transform and convolution
/// routines.  Numerical *findings* (an identity failing its tolerance) are
/// report entries, never errors.
#[derive(Debug, Error)]
pub enum CoreError {
    /// Matrix failed the unimodularity check.
    #[error("matrix is not unimodular: |det - 1| = {drift:.3e}")]
    NotUnimodular {
        /// `|det − 1|` observed.
        drift: f64,
    },

    /// A parameter that must be finite was NaN or infinite.
    #[error("non-finite parameter `{name}`")]
    NonFinite {
        /// Offending parameter.
        name: &'static str,
    },

    /// A multiplicative coordinate must be strictly positive.
    #[error("coordinate `{name}` must be strictly positive, got {value}")]
    NonPositive {
        /// Offending coordinate.
        name: &'static str,
        /// Offending value.
        value: f64,
    },

    /// Invalid axis construction (too few nodes, bad truncation, ...).
    #[error("invalid axis `{label}`: {reason}")]
    BadAxis {
        /// Axis label.
        label: String,
        /// What went wrong.
        reason: String,
    },

    /// Grid axes must carry pairwise distinct labels.
    #[error("duplicate axis label `{label}` in grid")]
    DuplicateAxis {
        /// Repeated label.
        label: String,
    },

    /// A grid is missing an axis required by the operation.
    #[error("grid is missing required axis `{label}`")]
    MissingAxis {
        /// Expected label.
        label: String,
    },

    /// Values buffer does not match the grid shape.
    #[error("value buffer has {got} entries but the grid has {want}")]
    ShapeMismatch {
        /// Provided length.
        got: usize,
        /// Expected length.
        want: usize,
    },

    /// Operation requires a closed-form evaluator.
    #[error("grid function has no closed-form evaluator (required: {oper})")]
    MissingEvaluator {
        /// Operation that needed it.
        oper: &'static str,
    },

    /// Test-function signature does not match the grid axes.
    #[error("test function does not cover grid axis `{label}`")]
    SignatureMismatch {
        /// Uncovered axis.
        label: String,
    },

    /// Requested frequency lies at or beyond the circle Nyquist index.
    #[error("frequency m = {m} at or beyond the Nyquist index for {nodes} nodes")]
    BeyondNyquist {
        /// Requested index.
        m: i64,
        /// Circle node count.
        nodes: usize,
    },

    /// Kernel-evaluation budget exceeded.
    #[error(
        "evaluation budget exceeded: {required} kernel evaluations needed, \
         budget is {budget} (dimensions: {dims})"
    )]
    BudgetExceeded {
        /// Work the call would need.
        required: u128,
        /// Configured ceiling.
        budget: u128,
        /// Human-readable offending dimensions.
        dims: String,
    },

    /// The group-context configuration does not satisfy the group axioms.
    #[error("group context rejected: {reason}")]
    BadContext {
        /// Which axiom combination fails.
        reason: String,
    },

    /// Family passed to the span-closure check is numerically dependent.
    #[error("family is ill-conditioned on the grid: estimated condition {cond:.3e}")]
    IllConditioned {
        /// Estimated Gram condition number.
        cond: f64,
    },
}
