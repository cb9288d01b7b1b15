//! Complex Hermitian linear algebra and bipartite state constructions.
//!
//! Dense `Complex<f64>` matrices at desk scale (total dimension up to a few
//! hundred). Eigendecompositions go through nalgebra's self-adjoint solver.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::tol;
use crate::types::{BipartiteDims, SchmidtVector, Spectrum};

/// Which tensor factor an operation acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// A validated Hermitian matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    data: DMatrix<Complex64>,
}

impl HermitianMatrix {
    /// Accepts a square matrix equal to its conjugate transpose within
    /// [`tol::HERMITICITY_ABS`] entrywise.
    pub fn new(data: DMatrix<Complex64>) -> Result<Self> {
        if data.nrows() != data.ncols() {
            return Err(Error::DimensionMismatch {
                expected: data.nrows(),
                actual: data.ncols(),
            });
        }
        let mut dev: f64 = 0.0;
        for i in 0..data.nrows() {
            for j in i..data.ncols() {
                dev = dev.max((data[(i, j)] - data[(j, i)].conj()).norm());
            }
        }
        if dev > tol::HERMITICITY_ABS {
            return Err(Error::NotHermitian {
                deviation: dev,
                tol: tol::HERMITICITY_ABS,
            });
        }
        Ok(Self { data })
    }

    /// For internal constructions that are Hermitian by algebra.
    pub(crate) fn from_matrix_unchecked(data: DMatrix<Complex64>) -> Self {
        Self { data }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            data: DMatrix::identity(dim, dim),
        }
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let d = diag.len();
        let mut m = DMatrix::zeros(d, d);
        for (i, &v) in diag.iter().enumerate() {
            m[(i, i)] = Complex64::new(v, 0.0);
        }
        Self { data: m }
    }

    pub fn dim(&self) -> usize {
        self.data.nrows()
    }

    pub fn as_matrix(&self) -> &DMatrix<Complex64> {
        &self.data
    }

    /// Trace (real part; the imaginary part vanishes for Hermitian input).
    pub fn trace(&self) -> f64 {
        self.data.trace().re
    }

    /// Eigenvalues in non-decreasing order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut vals: Vec<f64> = self.data.symmetric_eigenvalues().iter().cloned().collect();
        vals.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
        vals
    }

    /// Full eigendecomposition: eigenvalues ascending with matching
    /// eigenvector columns.
    pub fn eigen(&self) -> (Vec<f64>, DMatrix<Complex64>) {
        let se = self.data.clone().symmetric_eigen();
        let mut idx: Vec<usize> = (0..self.dim()).collect();
        idx.sort_by(|&a, &b| {
            se.eigenvalues[a]
                .partial_cmp(&se.eigenvalues[b])
                .expect("finite eigenvalues")
        });
        let vals: Vec<f64> = idx.iter().map(|&i| se.eigenvalues[i]).collect();
        let mut vecs = DMatrix::zeros(self.dim(), self.dim());
        for (col, &i) in idx.iter().enumerate() {
            vecs.set_column(col, &se.eigenvectors.column(i));
        }
        (vals, vecs)
    }

    /// Trace norm `sum_i |lambda_i|`.
    pub fn trace_norm(&self) -> f64 {
        self.eigenvalues().iter().map(|v| v.abs()).sum()
    }

    /// Sum of the absolute values of the negative eigenvalues, together with
    /// their count. Eigenvalues above [`tol::SPECTRUM_CLAMP`] count as zero.
    pub fn negative_part(&self) -> (f64, usize) {
        let mut sum = 0.0;
        let mut count = 0;
        for v in self.eigenvalues() {
            if v < tol::SPECTRUM_CLAMP {
                sum -= v;
                count += 1;
            }
        }
        (sum, count)
    }

    /// Largest entrywise modulus difference to another matrix.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim(), other.dim());
        let mut dev: f64 = 0.0;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                dev = dev.max((self.data[(i, j)] - other.data[(i, j)]).norm());
            }
        }
        dev
    }
}

/// A unitary matrix (columns orthonormal by construction).
#[derive(Debug, Clone)]
pub struct Unitary {
    data: DMatrix<Complex64>,
}

impl Unitary {
    /// Validates `U^dag U = 1` within `tol`.
    pub fn new(data: DMatrix<Complex64>, tol: f64) -> Result<Self> {
        if data.nrows() != data.ncols() {
            return Err(Error::DimensionMismatch {
                expected: data.nrows(),
                actual: data.ncols(),
            });
        }
        let gram = data.adjoint() * &data;
        let mut dev: f64 = 0.0;
        for i in 0..data.nrows() {
            for j in 0..data.ncols() {
                let target = if i == j {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                };
                dev = dev.max((gram[(i, j)] - target).norm());
            }
        }
        if dev > tol {
            return Err(Error::OutOfRange(format!(
                "matrix is not unitary: gram deviation {dev:.3e}"
            )));
        }
        Ok(Self { data })
    }

    pub(crate) fn from_matrix_unchecked(data: DMatrix<Complex64>) -> Self {
        Self { data }
    }

    pub fn dim(&self) -> usize {
        self.data.nrows()
    }

    pub fn as_matrix(&self) -> &DMatrix<Complex64> {
        &self.data
    }

    /// `U h U^dag`.
    pub fn conjugate(&self, h: &HermitianMatrix) -> HermitianMatrix {
        let m = &self.data * h.as_matrix() * self.data.adjoint();
        // Hermitian up to rounding; symmetrize so downstream validation holds.
        let sym = (&m + m.adjoint()).scale(0.5);
        HermitianMatrix::from_matrix_unchecked(sym)
    }

    /// Operator `max |U - V|` entrywise, used to distinguish samples.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut dev: f64 = 0.0;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                dev = dev.max((self.data[(i, j)] - other.data[(i, j)]).norm());
            }
        }
        dev
    }
}

/// A density matrix with an attached bipartition.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    matrix: HermitianMatrix,
    dims: BipartiteDims,
}

impl DensityMatrix {
    /// Validates unit trace and positive semidefiniteness (eigenvalues at
    /// least [`tol::DENSITY_PSD_FLOOR`]).
    pub fn new(matrix: HermitianMatrix, dims: BipartiteDims) -> Result<Self> {
        if matrix.dim() != dims.total() {
            return Err(Error::DimensionMismatch {
                expected: dims.total(),
                actual: matrix.dim(),
            });
        }
        let tr = matrix.trace();
        if (tr - 1.0).abs() > tol::NORMALIZATION_ABS {
            return Err(Error::InvalidDensityMatrix(format!(
                "trace is {tr}, expected 1"
            )));
        }
        let min = matrix
            .eigenvalues()
            .into_iter()
            .next()
            .expect("non-empty spectrum");
        if min < tol::DENSITY_PSD_FLOOR {
            return Err(Error::InvalidDensityMatrix(format!(
                "minimum eigenvalue {min:.3e} below {:.1e}",
                tol::DENSITY_PSD_FLOOR
            )));
        }
        Ok(Self { matrix, dims })
    }

    pub(crate) fn new_unchecked(matrix: HermitianMatrix, dims: BipartiteDims) -> Self {
        Self { matrix, dims }
    }

    /// `U diag(spectrum) U^dag`.
    pub fn from_spectrum_and_unitary(spectrum: &Spectrum, u: &Unitary) -> Result<Self> {
        if u.dim() != spectrum.dims().total() {
            return Err(Error::DimensionMismatch {
                expected: spectrum.dims().total(),
                actual: u.dim(),
            });
        }
        let diag = HermitianMatrix::from_real_diagonal(spectrum.values());
        Ok(Self::new_unchecked(u.conjugate(&diag), spectrum.dims()))
    }

    pub fn matrix(&self) -> &HermitianMatrix {
        &self.matrix
    }

    pub fn dims(&self) -> BipartiteDims {
        self.dims
    }

    /// Sorted, clamped eigenvalue spectrum.
    pub fn spectrum(&self) -> Result<Spectrum> {
        let mut vals = self.matrix.eigenvalues();
        // Density-matrix validation admits noise down to DENSITY_PSD_FLOOR,
        // which is wider than the Spectrum clamp.
        for v in &mut vals {
            if *v < 0.0 {
                *v = 0.0;
            }
        }
        let sum: f64 = vals.iter().sum();
        for v in &mut vals {
            *v /= sum;
        }
        Spectrum::new(vals, self.dims)
    }

    /// Partial transpose over the chosen subsystem.
    pub fn partial_transpose(&self, subsystem: Subsystem) -> HermitianMatrix {
        partial_transpose(&self.matrix, self.dims, subsystem)
    }

    /// Partial trace over the complement: `Tr_B` yields the `n x n` state of
    /// A, `Tr_A` the `m x m` state of B.
    pub fn reduced_state(&self, keep: Subsystem) -> HermitianMatrix {
        let (n, m) = (self.dims.n(), self.dims.m());
        let rho = self.matrix.as_matrix();
        match keep {
            Subsystem::A => {
                let mut out = DMatrix::zeros(n, n);
                for i in 0..n {
                    for j in 0..n {
                        let mut s = Complex64::new(0.0, 0.0);
                        for mu in 0..m {
                            s += rho[(i * m + mu, j * m + mu)];
                        }
                        out[(i, j)] = s;
                    }
                }
                HermitianMatrix::from_matrix_unchecked(out)
            }
            Subsystem::B => {
                let mut out = DMatrix::zeros(m, m);
                for mu in 0..m {
                    for nu in 0..m {
                        let mut s = Complex64::new(0.0, 0.0);
                        for i in 0..n {
                            s += rho[(i * m + mu, i * m + nu)];
                        }
                        out[(mu, nu)] = s;
                    }
                }
                HermitianMatrix::from_matrix_unchecked(out)
            }
        }
    }
}

/// Partial transpose of a Hermitian matrix with bipartition `dims`.
///
/// Block-wise transpose over the chosen factor; Hermiticity and trace are
/// preserved exactly.
pub fn partial_transpose(
    h: &HermitianMatrix,
    dims: BipartiteDims,
    subsystem: Subsystem,
) -> HermitianMatrix {
    assert_eq!(h.dim(), dims.total(), "matrix does not match bipartition");
    let (n, m) = (dims.n(), dims.m());
    let src = h.as_matrix();
    let mut out = DMatrix::zeros(h.dim(), h.dim());
    for i in 0..n {
        for j in 0..n {
            for mu in 0..m {
                for nu in 0..m {
                    let (r, c) = (i * m + mu, j * m + nu);
                    let (sr, sc) = match subsystem {
                        Subsystem::B => (i * m + nu, j * m + mu),
                        Subsystem::A => (j * m + mu, i * m + nu),
                    };
                    out[(r, c)] = src[(sr, sc)];
                }
            }
        }
    }
    HermitianMatrix::from_matrix_unchecked(out)
}

/// Haar-distributed random unitary, deterministic in the seed.
///
/// Ginibre matrix orthonormalized column by column; the positive-diagonal QR
/// convention makes the distribution exactly Haar without a separate phase
/// correction.
pub fn haar_unitary(dim: usize, seed: u64) -> Unitary {
    assert!(dim >= 1);
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut g = DMatrix::<Complex64>::zeros(dim, dim);
    for j in 0..dim {
        for i in 0..dim {
            let re: f64 = StandardNormal.sample(&mut rng);
            let im: f64 = StandardNormal.sample(&mut rng);
            g[(i, j)] = Complex64::new(re, im);
        }
    }
    // Modified Gram-Schmidt with one re-orthogonalization pass.
    for j in 0..dim {
        for _pass in 0..2 {
            for k in 0..j {
                let mut proj = Complex64::new(0.0, 0.0);
                for i in 0..dim {
                    proj += g[(i, k)].conj() * g[(i, j)];
                }
                for i in 0..dim {
                    let corr = proj * g[(i, k)];
                    g[(i, j)] -= corr;
                }
            }
        }
        let norm = g.column(j).norm();
        for i in 0..dim {
            g[(i, j)] /= Complex64::new(norm, 0.0);
        }
    }
    Unitary::from_matrix_unchecked(g)
}

/// Rank-one projector onto `sum_i a_i |ii>`.
pub fn schmidt_pure_state(a: &SchmidtVector, dims: BipartiteDims) -> Result<DensityMatrix> {
    if a.rank() > dims.n() {
        return Err(Error::InvalidSchmidtVector(format!(
            "rank {} exceeds local dimension {}",
            a.rank(),
            dims.n()
        )));
    }
    let d = dims.total();
    let m = dims.m();
    let mut psi = vec![Complex64::new(0.0, 0.0); d];
    for (i, &ai) in a.coeffs().iter().enumerate() {
        psi[i * m + i] = Complex64::new(ai, 0.0);
    }
    let mut rho = DMatrix::zeros(d, d);
    for r in 0..d {
        for c in 0..d {
            rho[(r, c)] = psi[r] * psi[c].conj();
        }
    }
    Ok(DensityMatrix::new_unchecked(
        HermitianMatrix::from_matrix_unchecked(rho),
        dims,
    ))
}

/// Pseudo-pure state `(1 - p) |psi><psi| + p 1/(nm)`.
pub fn pps_state(a: &SchmidtVector, dims: BipartiteDims, p: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::OutOfRange(format!("noise parameter p = {p}")));
    }
    let pure = schmidt_pure_state(a, dims)?;
    let d = dims.total();
    let mut mat = pure.matrix().as_matrix().scale(1.0 - p);
    let noise = Complex64::new(p / d as f64, 0.0);
    for i in 0..d {
        mat[(i, i)] += noise;
    }
    Ok(DensityMatrix::new_unchecked(
        HermitianMatrix::from_matrix_unchecked(mat),
        dims,
    ))
}

/// Noise parameter equivalent to the mixing weight `alpha`:
/// `p = d / (d + alpha)`.
pub fn noise_from_alpha(alpha: f64, dims: BipartiteDims) -> f64 {
    let d = dims.total() as f64;
    if alpha.is_infinite() {
        0.0
    } else {
        d / (d + alpha)
    }
}

/// Mixing weight equivalent to noise `p`: `alpha = d (1 - p) / p`, infinite
/// at `p = 0`.
pub fn alpha_from_noise(p: f64, dims: BipartiteDims) -> f64 {
    let d = dims.total() as f64;
    if p == 0.0 {
        f64::INFINITY
    } else {
        d * (1.0 - p) / p
    }
}

/// Unitary sending each eigenvector of `rho` to a computational product basis
/// vector; the transformed state is diagonal in the product basis and hence
/// separable.
pub fn disentangling_unitary(rho: &DensityMatrix) -> Unitary {
    let (_, vecs) = rho.matrix().eigen();
    Unitary::from_matrix_unchecked(vecs.adjoint())
}
