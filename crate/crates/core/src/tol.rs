//! Default tolerances.
//!
//! Everything in this crate is a finite sum evaluated in f64, so "exact"
//! identities hold up to accumulated rounding. The defaults below leave
//! headroom above worst-case rounding at desk scale; operations that take a
//! tolerance parameter use these as defaults.

/// Identities that are exact finite sums (coefficient pairings, Parseval).
pub const EXACT_SUM: f64 = 1e-10;

/// Inequalities of the variance suite (moment bound, window bound); the slack
/// admits equality cases such as paired bases where LHS = RHS.
pub const INEQUALITY_SLACK: f64 = 1e-9;

/// Strict cancellation checks where the sum is empty by arithmetic and only
/// rounding of O(r²) products enters.
pub const CANCELLATION: f64 = 1e-12;

/// Unitarity of orthonormalized bases (‖U·U* − I‖_max).
pub const UNITARITY: f64 = 1e-10;

/// L² normalization of eigenfunction coefficient vectors.
pub const L2_NORM: f64 = 1e-12;

/// Default target tolerance for hypersurface quadrature.
pub const QUADRATURE: f64 = 1e-11;

/// Agreement between a closed-form coefficient and its quadrature oracle.
pub const CLOSED_FORM_VS_QUADRATURE: f64 = 1e-10;

/// Relative slack when snapping a real λ² or c² to the integer eigenvalue
/// grid.
pub const EIGENVALUE_SNAP: f64 = 1e-9;
