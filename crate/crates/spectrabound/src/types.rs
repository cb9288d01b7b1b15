//! Domain value types: bipartite dimensions, eigenvalue spectra, and Schmidt
//! coefficient vectors.

use crate::error::{Error, Result};
use crate::tol;

/// Dimensions of a bipartite system `C^n (x) C^m` with the convention `n <= m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct BipartiteDims {
    n: usize,
    m: usize,
}

impl BipartiteDims {
    /// `n >= 1` and `m >= n`; the total dimension is `n * m`.
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n < 1 || m < n {
            return Err(Error::InvalidDims { n, m });
        }
        Ok(Self { n, m })
    }

    /// Local dimension of subsystem A (the smaller one).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Local dimension of subsystem B.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Total dimension `n * m`.
    pub fn total(&self) -> usize {
        self.n * self.m
    }
}

/// Eigenvalue spectrum of a bipartite density matrix: `n * m` reals in
/// non-decreasing order summing to one.
///
/// Construction sorts ascending and clamps rounding noise at
/// [`tol::SPECTRUM_CLAMP`] to zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    dims: BipartiteDims,
}

impl Spectrum {
    pub fn new(mut values: Vec<f64>, dims: BipartiteDims) -> Result<Self> {
        if values.len() != dims.total() {
            return Err(Error::DimensionMismatch {
                expected: dims.total(),
                actual: values.len(),
            });
        }
        for v in &mut values {
            if !v.is_finite() {
                return Err(Error::InvalidSpectrum("non-finite eigenvalue".into()));
            }
            if *v < 0.0 {
                if *v < tol::SPECTRUM_CLAMP {
                    return Err(Error::InvalidSpectrum(format!(
                        "eigenvalue {v:.3e} below the clamping floor {:.1e}",
                        tol::SPECTRUM_CLAMP
                    )));
                }
                *v = 0.0;
            }
        }
        values.sort_by(|a, b| a.partial_cmp(b).expect("finite values"));
        let sum: f64 = values.iter().sum();
        if (sum - 1.0).abs() > tol::NORMALIZATION_ABS {
            return Err(Error::InvalidSpectrum(format!(
                "eigenvalues sum to {sum}, expected 1"
            )));
        }
        Ok(Self { values, dims })
    }

    /// Spectrum of the maximally mixed state `1/(nm)`.
    pub fn maximally_mixed(dims: BipartiteDims) -> Self {
        let d = dims.total();
        Self {
            values: vec![1.0 / d as f64; d],
            dims,
        }
    }

    /// Spectrum of a pseudo-pure state with noise parameter `p`:
    /// `p/d` with multiplicity `d - 1` and `(1 - p) + p/d` once.
    pub fn pseudo_pure(dims: BipartiteDims, p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::OutOfRange(format!("noise parameter p = {p}")));
        }
        let d = dims.total();
        let mut values = vec![p / d as f64; d];
        values[d - 1] = (1.0 - p) + p / d as f64;
        Ok(Self { values, dims })
    }

    /// Pure-state spectrum `(0, ..., 0, 1)`.
    pub fn pure(dims: BipartiteDims) -> Self {
        let d = dims.total();
        let mut values = vec![0.0; d];
        values[d - 1] = 1.0;
        Self { values, dims }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn dims(&self) -> BipartiteDims {
        self.dims
    }

    /// Smallest eigenvalue.
    pub fn min(&self) -> f64 {
        self.values[0]
    }

    /// True if any eigenvalue is exactly zero after clamping.
    pub fn is_rank_deficient(&self) -> bool {
        self.values[0] == 0.0
    }
}

/// Schmidt coefficients of a pure bipartite state: strictly positive reals in
/// non-increasing order with unit sum of squares. The rank is the length.
#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtVector {
    coeffs: Vec<f64>,
}

impl SchmidtVector {
    pub fn new(mut coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidSchmidtVector("empty coefficient list".into()));
        }
        for &c in &coeffs {
            if !c.is_finite() || c <= 0.0 {
                return Err(Error::InvalidSchmidtVector(format!(
                    "coefficient {c} is not strictly positive"
                )));
            }
        }
        coeffs.sort_by(|a, b| b.partial_cmp(a).expect("finite values"));
        let norm2: f64 = coeffs.iter().map(|c| c * c).sum();
        if (norm2 - 1.0).abs() > tol::NORMALIZATION_ABS {
            return Err(Error::InvalidSchmidtVector(format!(
                "squared coefficients sum to {norm2}, expected 1"
            )));
        }
        Ok(Self { coeffs })
    }

    /// Uniform vector `(1/sqrt(rank), ..., 1/sqrt(rank))`.
    pub fn uniform(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidSchmidtVector("rank must be positive".into()));
        }
        let c = 1.0 / (rank as f64).sqrt();
        Ok(Self {
            coeffs: vec![c; rank],
        })
    }

    /// Normalizes an arbitrary positive vector into a Schmidt vector.
    pub fn from_unnormalized(raw: &[f64]) -> Result<Self> {
        let norm2: f64 = raw.iter().map(|c| c * c).sum();
        if norm2 <= 0.0 || !norm2.is_finite() {
            return Err(Error::InvalidSchmidtVector(
                "cannot normalize a zero or non-finite vector".into(),
            ));
        }
        let scale = norm2.sqrt();
        Self::new(raw.iter().map(|c| c / scale).collect())
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Schmidt rank: the number of (strictly positive) coefficients.
    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    /// Squared coefficients, descending.
    pub fn squared(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c * c).collect()
    }

    /// Partial-sum entanglement monotone `m_k = 1 - sum_{i<=k} a_i^2`.
    pub fn partial_sum_mk(&self, k: usize) -> f64 {
        let head: f64 = self.coeffs.iter().take(k).map(|c| c * c).sum();
        (1.0 - head).max(0.0)
    }

    /// Sum of coefficients (enters the pure-state negativity).
    pub fn sum(&self) -> f64 {
        self.coeffs.iter().sum()
    }
}
