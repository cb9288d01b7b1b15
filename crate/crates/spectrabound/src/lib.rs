//! Certification and bounds for the entanglement content of bipartite
//! quantum states using only their eigenvalue spectra.
//!
//! Global unitaries preserve the spectrum of a density matrix, so any
//! spectrum-only criterion bounds the entanglement a state can reach under
//! every unitary orbit. This crate implements the analytic criteria for the
//! negativity and the Schmidt number built on the invertible reduction-map
//! family, together with the brute-force matrix oracles that verify each of
//! them at desk scale:
//!
//! - [`linalg`]: Hermitian eigendecompositions, partial transpose, Haar
//!   sampling, Schmidt and pseudo-pure state constructions.
//! - [`maps`]: the reduction-map family, its inverse, and the one-sided
//!   kappa-reduction.
//! - [`criteria`]: the convex-hull inequality and the alpha catalog turning
//!   spectra into certificates.
//! - [`negativity`]: exact and closed-form negativities, partial-sum and
//!   concurrence bounds.
//! - [`pred_spectrum`]: the structured spectrum of one-sided-reduced pure
//!   projectors via secular-equation interlacing, the rearrangement minimum,
//!   and positive-reduction certification.
//! - [`experiments`]: Haar sweeps, figure-data regeneration, noise
//!   estimators.
//! - [`io`]: JSON file formats for matrices and spectra.

pub mod criteria;
pub mod error;
pub mod experiments;
pub mod io;
pub mod linalg;
pub mod maps;
pub mod negativity;
pub mod pred_spectrum;
pub mod tol;
pub mod types;

pub use error::{Error, Result};
pub use linalg::{DensityMatrix, HermitianMatrix, Subsystem, Unitary};
pub use types::{BipartiteDims, SchmidtVector, Spectrum};
