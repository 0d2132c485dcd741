//! Numerical tolerances shared by the library, the verification suites and
//! the tests.

/// Row sums of a transition matrix.
pub const ROW_SUM: f64 = 1e-12;

/// Eigenvalue residual and range checks.
pub const EIGENVALUE: f64 = 1e-10;

/// Relative agreement between independent routes to Kemeny's constant.
pub const CROSS_ROUTE: f64 = 1e-8;

/// Spread allowed between rows of the hitting-time oracle.
pub const HITTING_SPREAD: f64 = 1e-8;

/// An eigenvalue closer than this to one is counted as a unit eigenvalue.
pub const UNIT_EIGENVALUE: f64 = 1e-8;

/// Slack for interlacing bounds on cut-edge centralities.
pub const BOUNDS: f64 = 1e-8;

/// Entrywise agreement of stochastic complements with loop-augmented walks.
pub const COMPLEMENT: f64 = 1e-12;

/// Relative difference `|a - b| / max(|b|, 1)`.
pub fn rel_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}
