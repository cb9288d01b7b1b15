//! The reduction-map family `L_a(s) = Tr(s) 1 + a s`, its inverse, the
//! kappa-reduction map `RED_k(x) = Tr(x) 1 - x/k`, and the one-sided map
//! `xi_k = 1 (x) RED_k`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{DensityMatrix, HermitianMatrix};

/// Parameters of the map family: the mixing weight `alpha` and the
/// positivity order `kappa`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MapParams {
    pub alpha: f64,
    pub kappa: usize,
}

impl MapParams {
    pub fn new(alpha: f64, kappa: usize) -> Result<Self> {
        if kappa < 1 {
            return Err(Error::OutOfRange("kappa must be at least 1".into()));
        }
        Ok(Self { alpha, kappa })
    }
}

/// `Tr(sigma) 1 + alpha sigma`. Unitarily covariant and linear.
pub fn reduction_apply(sigma: &HermitianMatrix, alpha: f64) -> HermitianMatrix {
    let d = sigma.dim();
    let tr = Complex64::new(sigma.trace(), 0.0);
    let mut out = sigma.as_matrix().scale(alpha);
    for i in 0..d {
        out[(i, i)] += tr;
    }
    HermitianMatrix::from_matrix_unchecked(out)
}

/// Inverse of [`reduction_apply`]:
/// `(1/alpha) (sigma - Tr(sigma) 1 / (d + alpha))`.
pub fn reduction_inverse(sigma: &HermitianMatrix, alpha: f64, d: usize) -> Result<HermitianMatrix> {
    if alpha == 0.0 {
        return Err(Error::SingularMap);
    }
    if sigma.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            actual: sigma.dim(),
        });
    }
    let shift = Complex64::new(sigma.trace() / (d as f64 + alpha), 0.0);
    let mut out = sigma.as_matrix().clone();
    for i in 0..d {
        out[(i, i)] -= shift;
    }
    Ok(HermitianMatrix::from_matrix_unchecked(
        out.scale(1.0 / alpha),
    ))
}

/// `Tr(x) 1 - x / kappa`, kappa-positive but (kappa+1)-negative.
pub fn red_kappa(x: &HermitianMatrix, kappa: usize) -> Result<HermitianMatrix> {
    if kappa < 1 {
        return Err(Error::OutOfRange("kappa must be at least 1".into()));
    }
    let d = x.dim();
    let tr = Complex64::new(x.trace(), 0.0);
    let mut out = x.as_matrix().scale(-1.0 / kappa as f64);
    for i in 0..d {
        out[(i, i)] += tr;
    }
    Ok(HermitianMatrix::from_matrix_unchecked(out))
}

/// One-sided reduction `[1 (x) RED_kappa](rho)`, computed block-wise: each
/// `m x m` block `rho_ij` maps to `Tr(rho_ij) 1 - rho_ij / kappa`.
pub fn xi_kappa(rho: &DensityMatrix, kappa: usize) -> Result<HermitianMatrix> {
    xi_kappa_raw(rho.matrix(), rho.dims().n(), rho.dims().m(), kappa)
}

pub(crate) fn xi_kappa_raw(
    h: &HermitianMatrix,
    n: usize,
    m: usize,
    kappa: usize,
) -> Result<HermitianMatrix> {
    if kappa < 1 {
        return Err(Error::OutOfRange("kappa must be at least 1".into()));
    }
    if h.dim() != n * m {
        return Err(Error::DimensionMismatch {
            expected: n * m,
            actual: h.dim(),
        });
    }
    let src = h.as_matrix();
    let inv_k = 1.0 / kappa as f64;
    let mut out = DMatrix::<Complex64>::zeros(n * m, n * m);
    for i in 0..n {
        for j in 0..n {
            let mut block_trace = Complex64::new(0.0, 0.0);
            for mu in 0..m {
                block_trace += src[(i * m + mu, j * m + mu)];
            }
            for mu in 0..m {
                for nu in 0..m {
                    let mut v = -src[(i * m + mu, j * m + nu)].scale(inv_k);
                    if mu == nu {
                        v += block_trace;
                    }
                    out[(i * m + mu, j * m + nu)] = v;
                }
            }
        }
    }
    Ok(HermitianMatrix::from_matrix_unchecked(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{haar_unitary, schmidt_pure_state, Subsystem};
    use crate::types::{BipartiteDims, SchmidtVector, Spectrum};
    use approx::assert_abs_diff_eq;

    fn random_hermitian(dim: usize, seed: u64) -> HermitianMatrix {
        let u = haar_unitary(dim, seed);
        let diag: Vec<f64> = (0..dim).map(|i| (i as f64) - 1.3).collect();
        u.conjugate(&HermitianMatrix::from_real_diagonal(&diag))
    }

    #[test]
    fn reduction_apply_basics() {
        // alpha = 0 collapses to Tr(sigma) 1.
        let s = random_hermitian(4, 1);
        let out = reduction_apply(&s, 0.0);
        let expect = HermitianMatrix::from_real_diagonal(&[s.trace(); 4]);
        assert!(out.max_abs_diff(&expect) < 1e-12);

        // Identity direction is fixed: sigma = 1/d maps to (1 + alpha/d) 1.
        let d = 4;
        let mms = HermitianMatrix::from_real_diagonal(&[0.25; 4]);
        let out = reduction_apply(&mms, 3.0);
        let expect = HermitianMatrix::from_real_diagonal(&[1.0 + 3.0 / d as f64; 4]);
        assert!(out.max_abs_diff(&expect) < 1e-12);

        // Pure projector, alpha = 2, d = 4: spectrum (1, 1, 1, 3).
        let dims = BipartiteDims::new(2, 2).unwrap();
        let psi = schmidt_pure_state(&SchmidtVector::uniform(2).unwrap(), dims).unwrap();
        let ev = reduction_apply(psi.matrix(), 2.0).eigenvalues();
        assert_abs_diff_eq!(ev[0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(ev[3], 3.0, epsilon = 1e-12);
    }

    #[test]
    fn reduction_inverse_round_trip_and_scalars() {
        for &alpha in &[-1.0, 0.5, 2.0, 10.0] {
            let s = random_hermitian(6, 9);
            let inv = reduction_inverse(&s, alpha, 6).unwrap();
            let back = reduction_apply(&inv, alpha);
            assert!(back.max_abs_diff(&s) < 1e-10, "alpha = {alpha}");
            let fwd = reduction_apply(&s, alpha);
            let there = reduction_inverse(&fwd, alpha, 6).unwrap();
            assert!(there.max_abs_diff(&s) < 1e-10, "alpha = {alpha}");
        }
        assert_eq!(
            reduction_inverse(&HermitianMatrix::identity(3), 0.0, 3),
            Err(Error::SingularMap)
        );

        // sigma = 1 (trace d): inverse is 1/(d + alpha) times identity.
        let id = HermitianMatrix::identity(5);
        let inv = reduction_inverse(&id, 2.0, 5).unwrap();
        let expect = HermitianMatrix::from_real_diagonal(&[1.0 / 7.0; 5]);
        assert!(inv.max_abs_diff(&expect) < 1e-12);

        // alpha = -1 on a pure projector stays finite.
        let dims = BipartiteDims::new(2, 2).unwrap();
        let psi = schmidt_pure_state(&SchmidtVector::uniform(2).unwrap(), dims).unwrap();
        let inv = reduction_inverse(psi.matrix(), -1.0, 4).unwrap();
        assert!(inv.trace().is_finite());
    }

    #[test]
    fn reduction_is_unitarily_covariant() {
        let s = random_hermitian(6, 21);
        let u = haar_unitary(6, 22);
        for &alpha in &[-1.0, 0.7, 4.0] {
            let lhs = reduction_apply(&u.conjugate(&s), alpha);
            let rhs = u.conjugate(&reduction_apply(&s, alpha));
            assert!(lhs.max_abs_diff(&rhs) < 1e-10);
        }
    }

    #[test]
    fn reduction_positive_on_psd_for_alpha_in_band() {
        // For alpha in [-1, 0] the map sends PSD to PSD.
        let u = haar_unitary(5, 33);
        let psd = u.conjugate(&HermitianMatrix::from_real_diagonal(&[
            0.0, 0.1, 0.2, 0.3, 0.4,
        ]));
        for &alpha in &[-1.0, -0.5, 0.0] {
            let ev = reduction_apply(&psd, alpha).eigenvalues();
            assert!(ev[0] >= -1e-12, "alpha = {alpha}, min = {}", ev[0]);
        }
    }

    #[test]
    fn red_kappa_identity_and_projector() {
        // x = 1/m with kappa = 1: Tr(x) 1 - x gives (1 - 1/m) on the diagonal.
        let m = 3;
        let mms = HermitianMatrix::from_real_diagonal(&[1.0 / m as f64; 3]);
        let out = red_kappa(&mms, 1).unwrap();
        let expect = HermitianMatrix::from_real_diagonal(&[1.0 - 1.0 / m as f64; 3]);
        assert!(out.max_abs_diff(&expect) < 1e-12);

        // Large kappa approaches Tr(x) 1.
        let x = random_hermitian(4, 5);
        let out = red_kappa(&x, 1_000_000).unwrap();
        let expect = HermitianMatrix::from_real_diagonal(&[x.trace(); 4]);
        assert!(out.max_abs_diff(&expect) < 1e-5);

        // Rank-1 projector, kappa = 1: spectrum (0, 1, ..., 1).
        let mut proj = DMatrix::<Complex64>::zeros(3, 3);
        proj[(0, 0)] = Complex64::new(1.0, 0.0);
        let p = HermitianMatrix::new(proj).unwrap();
        let ev = red_kappa(&p, 1).unwrap().eigenvalues();
        assert_abs_diff_eq!(ev[0], 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(ev[1], 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(ev[2], 1.0, epsilon = 1e-14);
    }

    #[test]
    fn xi_kappa_on_mms_separable_and_bell() {
        // [1 (x) RED_k](1) = (m - 1/k) 1, scaled by 1/(nm) for the MMS.
        let dims = BipartiteDims::new(2, 3).unwrap();
        let mms = DensityMatrix::new(
            HermitianMatrix::from_real_diagonal(&[1.0 / 6.0; 6]),
            dims,
        )
        .unwrap();
        for kappa in 1..=3usize {
            let out = xi_kappa(&mms, kappa).unwrap();
            let level = (3.0 - 1.0 / kappa as f64) / 6.0;
            let expect = HermitianMatrix::from_real_diagonal(&[level; 6]);
            assert!(out.max_abs_diff(&expect) < 1e-12);
        }

        // Separable product state: all eigenvalues stay nonnegative at kappa = 1.
        let a = nalgebra::DMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(0.8, 0.0),
                Complex64::new(0.1, 0.1),
                Complex64::new(0.1, -0.1),
                Complex64::new(0.2, 0.0),
            ],
        );
        let b = nalgebra::DMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(0.5, 0.0),
                Complex64::new(0.2, 0.0),
                Complex64::new(0.2, 0.0),
                Complex64::new(0.5, 0.0),
            ],
        );
        let dims22 = BipartiteDims::new(2, 2).unwrap();
        let rho = DensityMatrix::new(HermitianMatrix::new(a.kronecker(&b)).unwrap(), dims22)
            .unwrap();
        let ev = xi_kappa(&rho, 1).unwrap().eigenvalues();
        assert!(ev[0] >= -1e-12);

        // Bell state at kappa = 1: minimal eigenvalue -1/2.
        let bell = schmidt_pure_state(&SchmidtVector::uniform(2).unwrap(), dims22).unwrap();
        let ev = xi_kappa(&bell, 1).unwrap().eigenvalues();
        assert_abs_diff_eq!(ev[0], -0.5, epsilon = 1e-12);
    }

    #[test]
    fn xi_kappa_matches_kronecker_assembly() {
        // Block-wise computation equals rho_A-side identity (x) RED_k built
        // from the partial-trace form on simple tensors.
        let dims = BipartiteDims::new(2, 3).unwrap();
        let u = haar_unitary(6, 17);
        let s = Spectrum::new(vec![0.05, 0.1, 0.15, 0.2, 0.2, 0.3], dims).unwrap();
        let rho = crate::linalg::DensityMatrix::from_spectrum_and_unitary(&s, &u).unwrap();
        let xi = xi_kappa(&rho, 2).unwrap();
        // Identity-on-A route: Tr_B per block times identity equals
        // rho_A (x) 1_M assembled globally.
        let red_a = rho.reduced_state(Subsystem::A);
        let expect = red_a
            .as_matrix()
            .kronecker(&DMatrix::<Complex64>::identity(3, 3))
            - rho.matrix().as_matrix().scale(0.5);
        assert!(
            xi.max_abs_diff(&HermitianMatrix::from_matrix_unchecked(expect)) < 1e-12
        );
    }

    #[test]
    fn xi_kappa_is_self_adjoint_and_linear() {
        let x = random_hermitian(6, 41);
        let y = random_hermitian(6, 42);
        for kappa in [1usize, 3] {
            let xi_x = xi_kappa_raw(&x, 2, 3, kappa).unwrap();
            let xi_y = xi_kappa_raw(&y, 2, 3, kappa).unwrap();
            // Tr(X^dag xi(Y)) = Tr(xi(X)^dag Y)
            let lhs = (x.as_matrix().adjoint() * xi_y.as_matrix()).trace();
            let rhs = (xi_x.as_matrix().adjoint() * y.as_matrix()).trace();
            assert!((lhs - rhs).norm() < 1e-9);

            // Linearity: xi(2x - 0.3y) = 2 xi(x) - 0.3 xi(y)
            let combo = HermitianMatrix::from_matrix_unchecked(
                x.as_matrix().scale(2.0) - y.as_matrix().scale(0.3),
            );
            let xi_combo = xi_kappa_raw(&combo, 2, 3, kappa).unwrap();
            let expect = HermitianMatrix::from_matrix_unchecked(
                xi_x.as_matrix().scale(2.0) - xi_y.as_matrix().scale(0.3),
            );
            assert!(xi_combo.max_abs_diff(&expect) < 1e-10);
        }
    }
}
