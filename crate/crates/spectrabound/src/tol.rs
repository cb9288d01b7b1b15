//! Centralized numerical tolerances.
//!
//! Constructors and criteria cite these instead of scattering magic numbers.

/// Maximum entrywise deviation from the conjugate transpose accepted by
/// [`crate::HermitianMatrix::new`].
pub const HERMITICITY_ABS: f64 = 1e-12;

/// Eigenvalues of a nominally PSD matrix above this (negative) floor are
/// treated as rounding noise and clamped to zero; anything below is a hard
/// input error.
pub const SPECTRUM_CLAMP: f64 = -1e-12;

/// Minimum eigenvalue accepted for a density matrix.
pub const DENSITY_PSD_FLOOR: f64 = -1e-10;

/// Absolute tolerance on unit trace and on probability/Schmidt normalization.
pub const NORMALIZATION_ABS: f64 = 1e-10;

/// Slack granted when evaluating certification inequalities, so that states
/// sitting exactly on a criterion boundary are accepted.
pub const CERT_BOUNDARY: f64 = 1e-12;

/// Agreement required between closed-form expressions and brute-force
/// matrix computations of the same quantity.
pub const ORACLE_ABS: f64 = 1e-9;

/// Bracket width at which secular-equation bisection stops.
pub const SECULAR_BRACKET: f64 = 1e-14;

/// Default relative tolerance for grouping nearly equal Schmidt coefficients.
pub const SCHMIDT_GROUPING_REL: f64 = 1e-9;

/// Violation threshold below which a rearrangement minimum counts as a
/// falsification rather than rounding noise.
pub const PREDFS_VIOLATION: f64 = -1e-10;
