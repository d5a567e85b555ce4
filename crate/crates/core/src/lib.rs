//! Desk-scale laboratory for the spectral geometry of the flat torus
//! `T^d = R^d/(2πZ)^d`.
//!
//! Eigenfunctions of the Laplacian on the rational torus are trigonometric
//! polynomials supported on lattice shells `{k ∈ Z^d : ‖k‖² = E}`. Every
//! quantity of interest here — quantum variance sums, restriction and period
//! integrals over hypersurfaces, equidistribution deviations against Fourier-
//! decaying measures — is a finite sum in the shell coefficients, so it can be
//! evaluated exactly (up to f64 rounding) instead of by sampling.
//!
//! The crate is organized by subject:
//!
//! * [`lattice`] — exact integer arithmetic on shells: enumeration, pair
//!   counts, hyperplane/annulus counts, sums of two squares, separation
//!   statistics, Iwaniec-style semiprime searches.
//! * [`spectral`] — eigenfunctions and orthonormal eigenbases over a shell,
//!   including seeded Haar-random bases and the structured sequences used as
//!   adversarial examples.
//! * [`observables`] — sparse trigonometric polynomials and exact integrals of
//!   `a·|ψ|²` against the normalized volume measure.
//! * [`measures`] — torus measures through their Fourier coefficients:
//!   closed-form circle/sphere measures, quadrature-backed parameterized
//!   hypersurfaces, tabulated data, and decay-exponent fits.
//! * [`variance`] — quantum variance sums `S₂`/`V₂`, the moment and window
//!   inequalities, theorem right-hand sides, and density-one diagnostics.
//! * [`restriction`] — restriction and period integrals over hypersurfaces
//!   with Cauchy–Schwarz bounds and L² ratio diagnostics.

pub mod error;
pub mod lattice;
pub mod measures;
pub mod observables;
pub mod restriction;
pub mod spectral;
pub mod tol;
pub mod variance;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
