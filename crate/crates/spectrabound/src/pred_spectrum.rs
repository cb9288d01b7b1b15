//! Structured spectrum of the one-sided reduction of a pure projector, via
//! secular-equation root finding with interlacing brackets; the
//! rearrangement inner-product minimum over unitaries; and certification or
//! falsification of positive reduction from spectrum.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::Serialize;

use crate::criteria::{
    lemma1_holds, snfs_alpha, CriterionVerdict, HullParams, PredfsStatus, SnfsTechnique,
    Technique,
};
use crate::error::{Error, Result};
use crate::tol;
use crate::types::{BipartiteDims, SchmidtVector, Spectrum};

use num_traits::ToPrimitive;

/// Schmidt coefficients grouped by equal value: `distinct` strictly
/// decreasing with multiplicities `mults`.
#[derive(Debug, Clone, PartialEq)]
pub struct CompressedSchmidt {
    distinct: Vec<f64>,
    mults: Vec<usize>,
    rank: usize,
}

impl CompressedSchmidt {
    /// Distinct coefficient values, descending.
    pub fn distinct(&self) -> &[f64] {
        &self.distinct
    }

    pub fn mults(&self) -> &[usize] {
        &self.mults
    }

    /// Total rank `sum m_i`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of distinct values.
    pub fn groups(&self) -> usize {
        self.distinct.len()
    }
}

/// Groups coefficients within `grouping_tol` (relative) into one value,
/// represented by the group mean.
pub fn compress_schmidt(a: &SchmidtVector, grouping_tol: f64) -> CompressedSchmidt {
    let coeffs = a.coeffs();
    let mut distinct = Vec::new();
    let mut mults: Vec<usize> = Vec::new();
    let mut group_sum = coeffs[0];
    let mut group_len = 1usize;
    let mut group_head = coeffs[0];
    for &c in &coeffs[1..] {
        if group_head - c <= grouping_tol * group_head {
            group_sum += c;
            group_len += 1;
        } else {
            distinct.push(group_sum / group_len as f64);
            mults.push(group_len);
            group_sum = c;
            group_len = 1;
            group_head = c;
        }
    }
    distinct.push(group_sum / group_len as f64);
    mults.push(group_len);
    CompressedSchmidt {
        distinct,
        mults,
        rank: a.rank(),
    }
}

/// The `q` real roots of `F(y) = 1 - (1/kappa) sum_i m_i b_i^2 / (b_i^2 - y)`,
/// returned in decreasing order.
///
/// Interlacing pins each root: `eta_i` lies in `(b_{i+1}^2, b_i^2)` and the
/// last one in `[-1/kappa, b_q^2)`, so bisection cannot miss. Brackets are
/// tightened toward the poles until the sign change appears.
pub fn secular_roots(cs: &CompressedSchmidt, kappa: usize) -> Result<Vec<f64>> {
    if kappa < 1 {
        return Err(Error::OutOfRange("kappa must be at least 1".into()));
    }
    let q = cs.groups();
    let b2: Vec<f64> = cs.distinct.iter().map(|b| b * b).collect();
    let mults = &cs.mults;
    let inv_k = 1.0 / kappa as f64;
    let f = |y: f64| -> f64 {
        let mut s = 0.0;
        for i in 0..q {
            s += mults[i] as f64 * b2[i] / (b2[i] - y);
        }
        1.0 - inv_k * s
    };
    let mut roots = Vec::with_capacity(q);
    for i in 0..q {
        let upper_pole = b2[i];
        let lower = if i + 1 < q { b2[i + 1] } else { -inv_k };
        let span = upper_pole - lower;
        // Walk the endpoints toward the poles until F changes sign.
        let mut offset = span * 1e-9;
        let (mut lo, mut hi) = (f64::NAN, f64::NAN);
        let mut found = false;
        for _ in 0..40 {
            let lo_try = if i + 1 < q { lower + offset } else { lower };
            let hi_try = upper_pole - offset;
            if hi_try > lo_try && f(lo_try) > 0.0 && f(hi_try) < 0.0 {
                lo = lo_try;
                hi = hi_try;
                found = true;
                break;
            }
            offset *= 0.1;
            if offset < f64::MIN_POSITIVE {
                break;
            }
        }
        if !found {
            return Err(Error::BracketFailure(format!(
                "no sign change in interlacing interval {i} (grouping tolerance too small?)"
            )));
        }
        let (mut flo, mut fhi) = (f(lo), f(hi));
        while hi - lo > tol::SECULAR_BRACKET {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            let fm = f(mid);
            if fm > 0.0 {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
                fhi = fm;
            }
        }
        // One secant polish inside the final bracket.
        let mut root = 0.5 * (lo + hi);
        if fhi != flo {
            let sec = hi - fhi * (hi - lo) / (fhi - flo);
            if sec > lo && sec < hi {
                root = sec;
            }
        }
        roots.push(root);
    }
    Ok(roots)
}

/// Full eigenvalue structure of `xi_kappa(|psi><psi|)` for a pure state with
/// Schmidt vector `a` on `dims`.
#[derive(Debug, Clone, Serialize)]
pub struct StructuredSpectrum {
    /// `(value, multiplicity)` pairs: each distinct `b_i^2` carries
    /// `m_i * m - 1` copies.
    pub blocks: Vec<(f64, usize)>,
    /// Simple secular roots, decreasing.
    pub etas: Vec<f64>,
    /// Zero eigenvalues: `(n - rank) * m`.
    pub null_mult: usize,
}

impl StructuredSpectrum {
    /// Total number of eigenvalues including multiplicity.
    pub fn total_multiplicity(&self) -> usize {
        self.blocks.iter().map(|(_, m)| m).sum::<usize>() + self.etas.len() + self.null_mult
    }

    /// Sum of all eigenvalues (the trace of the mapped projector).
    pub fn trace(&self) -> f64 {
        let block_sum: f64 = self.blocks.iter().map(|(v, m)| v * *m as f64).sum();
        block_sum + self.etas.iter().sum::<f64>()
    }

    /// Smallest structured eigenvalue.
    pub fn min_eigenvalue(&self) -> f64 {
        let mut min = *self.etas.last().expect("at least one root");
        if self.null_mult > 0 {
            min = min.min(0.0);
        }
        for &(v, _) in &self.blocks {
            min = min.min(v);
        }
        min
    }

    /// All eigenvalues expanded with multiplicity, descending.
    pub fn flatten_descending(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.total_multiplicity());
        for &(v, m) in &self.blocks {
            out.extend(std::iter::repeat(v).take(m));
        }
        out.extend_from_slice(&self.etas);
        out.extend(std::iter::repeat(0.0).take(self.null_mult));
        out.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
        out
    }
}

/// Assembles the structured spectrum: each `b_i^2` with multiplicity
/// `m_i * m - 1` (off-diagonal copies plus repeated roots inside the
/// rank-`r` block), the `q` simple secular roots, and a null block of
/// dimension `(n - r) m`.
pub fn xi_spectrum_structured(
    a: &SchmidtVector,
    kappa: usize,
    dims: BipartiteDims,
) -> Result<StructuredSpectrum> {
    if a.rank() > dims.n() {
        return Err(Error::InvalidSchmidtVector(format!(
            "rank {} exceeds local dimension {}",
            a.rank(),
            dims.n()
        )));
    }
    let cs = compress_schmidt(a, tol::SCHMIDT_GROUPING_REL);
    let etas = secular_roots(&cs, kappa)?;
    let m = dims.m();
    let r = cs.rank();
    let blocks: Vec<(f64, usize)> = cs
        .distinct
        .iter()
        .zip(&cs.mults)
        .map(|(b, &mi)| (b * b, mi * m - 1))
        .collect();
    let st = StructuredSpectrum {
        blocks,
        etas,
        null_mult: (dims.n() - r) * m,
    };

    // Trace bookkeeping: the sum of the block eigenvalues inside the rank-r
    // subspace plus the roots must reproduce 1 - 1/kappa exactly.
    let q = cs.groups();
    let eta_q = st.etas[q - 1];
    let repeated: f64 = cs
        .distinct
        .iter()
        .zip(&cs.mults)
        .map(|(b, &mi)| (mi as f64 - 1.0) * b * b)
        .sum();
    let head: f64 = st.etas[..q - 1].iter().sum();
    let residual = eta_q - (1.0 - 1.0 / kappa as f64 - head - repeated);
    if residual.abs() > tol::ORACLE_ABS {
        return Err(Error::BracketFailure(format!(
            "trace residual {residual:.3e} exceeds {:.1e}",
            tol::ORACLE_ABS
        )));
    }
    Ok(st)
}

/// Exact minimum of `Tr[U rho U^dag xi_kappa(psi)]` over all unitaries: the
/// dot product of the state spectrum ascending with the structured spectrum
/// descending.
pub fn rearrangement_min(
    state_spectrum: &Spectrum,
    structured: &StructuredSpectrum,
) -> Result<f64> {
    let lam = state_spectrum.values();
    let gam = structured.flatten_descending();
    if gam.len() != lam.len() {
        return Err(Error::DimensionMismatch {
            expected: lam.len(),
            actual: gam.len(),
        });
    }
    Ok(lam.iter().zip(&gam).map(|(l, g)| l * g).sum())
}

/// Budget for the falsification search over Schmidt vectors.
#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    /// Random simplex starts beyond the structured uniform candidates.
    pub starts: usize,
    /// Local refinement proposals per start.
    pub iterations: usize,
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            starts: 64,
            iterations: 200,
            seed: 0,
        }
    }
}

/// Certifies, falsifies, or numerically supports positive `kappa`-reduction
/// from spectrum.
///
/// Certification uses the closed-form fast path. Falsification searches for
/// a Schmidt vector whose rearrangement minimum is negative; success attaches
/// the witness. Exhausting the budget without a violation yields
/// `NumericallySupported`, which is explicitly not a certificate because the
/// underlying condition quantifies over every pure state.
pub fn certify_predfs(
    spectrum: &Spectrum,
    kappa: usize,
    budget: &SearchBudget,
) -> Result<CriterionVerdict> {
    if kappa < 1 {
        return Err(Error::OutOfRange("kappa must be at least 1".into()));
    }
    let dims = spectrum.dims();
    let n = dims.n();
    if kappa >= n {
        // The map is positive on every state of Schmidt number <= n.
        return Ok(CriterionVerdict {
            technique: Technique::Predfs,
            chi_or_gamma: kappa as f64,
            alpha: f64::INFINITY,
            satisfied: true,
            certificate_kind: Technique::Predfs.certificate_kind(),
            binding_condition: crate::criteria::BindingCondition::Neither,
            slack: 0.0,
            predfs: Some(PredfsStatus::Certified),
        });
    }

    let alpha = snfs_alpha(SnfsTechnique::Reduction, kappa, &dims)?
        .to_f64()
        .expect("small rational");
    let eval = lemma1_holds(spectrum, &HullParams::certification(alpha)?)?;
    if eval.satisfied {
        let mut v = CriterionVerdict::from_lemma(
            Technique::Predfs,
            kappa as f64,
            alpha,
            &eval,
        );
        v.predfs = Some(PredfsStatus::Certified);
        return Ok(v);
    }

    let objective = |a: &SchmidtVector| -> Result<f64> {
        let st = xi_spectrum_structured(a, kappa, dims)?;
        rearrangement_min(spectrum, &st)
    };

    let mut best_value = f64::INFINITY;
    let mut best_vector: Option<SchmidtVector> = None;

    // Uniform vectors of each nontrivial rank are the extremal candidates.
    for r in (kappa + 1)..=n {
        let a = SchmidtVector::uniform(r)?;
        let value = objective(&a)?;
        if value < best_value {
            best_value = value;
            best_vector = Some(a);
        }
    }

    // Multi-start local minimization over squared coefficients on the simplex.
    for start in 0..budget.starts {
        let mut rng = ChaCha20Rng::seed_from_u64(budget.seed.wrapping_add(start as u64));
        let mut sq: Vec<f64> = (0..n)
            .map(|_| -(1.0 - rng.gen::<f64>()).ln())
            .collect();
        let total: f64 = sq.iter().sum();
        for s in sq.iter_mut() {
            *s /= total;
        }
        let mut current = SchmidtVector::from_unnormalized(
            &sq.iter().map(|s| s.sqrt()).collect::<Vec<_>>(),
        )?;
        let mut value = objective(&current)?;
        let mut step = 0.5;
        let mut stale = 0;
        for _ in 0..budget.iterations {
            let proposal: Vec<f64> = current
                .coeffs()
                .iter()
                .map(|c| {
                    let jitter: f64 = rng.gen::<f64>() * 2.0 - 1.0;
                    (c * (step * jitter).exp()).max(1e-12)
                })
                .collect();
            let candidate = SchmidtVector::from_unnormalized(&proposal)?;
            let cand_value = objective(&candidate)?;
            if cand_value < value {
                current = candidate;
                value = cand_value;
                stale = 0;
            } else {
                stale += 1;
                if stale >= 10 {
                    step *= 0.7;
                    stale = 0;
                }
            }
            if value < tol::PREDFS_VIOLATION {
                break;
            }
        }
        if value < best_value {
            best_value = value;
            best_vector = Some(current);
        }
        if best_value < tol::PREDFS_VIOLATION {
            break;
        }
    }

    let status = if best_value < tol::PREDFS_VIOLATION {
        PredfsStatus::Falsified {
            witness_schmidt: best_vector
                .as_ref()
                .expect("violating vector recorded")
                .coeffs()
                .to_vec(),
            violation: best_value,
        }
    } else {
        PredfsStatus::NumericallySupported {
            starts: budget.starts,
            best_minimum: best_value,
        }
    };
    Ok(CriterionVerdict {
        technique: Technique::Predfs,
        chi_or_gamma: kappa as f64,
        alpha,
        satisfied: false,
        certificate_kind: Technique::Predfs.certificate_kind(),
        binding_condition: eval.binding,
        slack: eval.slack(),
        predfs: Some(status),
    })
}

/// Largest multiset deviation between the structured spectrum and a direct
/// eigendecomposition of the assembled mapped projector.
pub fn structured_direct_deviation(
    a: &SchmidtVector,
    kappa: usize,
    dims: BipartiteDims,
) -> Result<f64> {
    let st = xi_spectrum_structured(a, kappa, dims)?;
    let direct = crate::maps::xi_kappa(&crate::linalg::schmidt_pure_state(a, dims)?, kappa)?
        .eigenvalues();
    let mut flat = st.flatten_descending();
    flat.reverse();
    let dev = flat
        .iter()
        .zip(&direct)
        .map(|(s, d)| (s - d).abs())
        .fold(0.0f64, f64::max);
    Ok(dev)
}

/// The two readings of the rank-conditioned alpha interval endpoint.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Prop61Range {
    /// `r (kappa chi - 1) / (r - chi)`.
    pub product_reading: f64,
    /// `r (r kappa - 1) / (r - kappa)`: the reading that reproduces the
    /// closed-form certification threshold on square systems at `r = n = m`.
    pub isotropic_reading: f64,
}

/// Upper endpoint of the alpha interval for which the shifted pure state
/// stays positive under the one-sided reduction, under both symbol readings.
pub fn proposition61_range(r: usize, kappa: usize, chi: usize) -> Result<Prop61Range> {
    if chi >= r || kappa >= r {
        return Err(Error::OutOfRange(format!(
            "need chi < r and kappa < r, got r = {r}, kappa = {kappa}, chi = {chi}"
        )));
    }
    let (rf, kf, cf) = (r as f64, kappa as f64, chi as f64);
    Ok(Prop61Range {
        product_reading: rf * (kf * cf - 1.0) / (rf - cf),
        isotropic_reading: rf * (rf * kf - 1.0) / (rf - kf),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{haar_unitary, schmidt_pure_state, DensityMatrix};
    use crate::maps::xi_kappa;
    use approx::assert_abs_diff_eq;

    fn dims(n: usize, m: usize) -> BipartiteDims {
        BipartiteDims::new(n, m).unwrap()
    }

    #[test]
    fn compression_groups_and_tolerance() {
        let uniform = SchmidtVector::uniform(4).unwrap();
        let cs = compress_schmidt(&uniform, 1e-9);
        assert_eq!(cs.groups(), 1);
        assert_eq!(cs.mults(), &[4]);
        assert_eq!(cs.rank(), 4);

        let distinct = SchmidtVector::new(vec![0.8, 0.5, 0.1f64.sqrt(), 0.01f64.sqrt()]).unwrap();
        let cs = compress_schmidt(&distinct, 1e-9);
        assert_eq!(cs.groups(), 4);
        assert!(cs.mults().iter().all(|&m| m == 1));

        // A pair separated by less than the tolerance merges.
        let base: f64 = 0.5;
        let eps = base * 1e-12;
        let near = SchmidtVector::from_unnormalized(&[0.8, base, base - eps]).unwrap();
        let cs = compress_schmidt(&near, 1e-9);
        assert_eq!(cs.groups(), 2);
        assert_eq!(cs.mults(), &[1, 2]);
    }

    #[test]
    fn secular_roots_closed_forms() {
        // Uniform rank r: single root 1/r - 1/kappa.
        for (r, kappa) in [(2usize, 1usize), (4, 1), (4, 2), (6, 3)] {
            let cs = compress_schmidt(&SchmidtVector::uniform(r).unwrap(), 1e-9);
            let roots = secular_roots(&cs, kappa).unwrap();
            assert_eq!(roots.len(), 1);
            assert_abs_diff_eq!(
                roots[0],
                1.0 / r as f64 - 1.0 / kappa as f64,
                epsilon = 1e-12
            );
        }

        // kappa = r puts the threshold root exactly at zero.
        let cs = compress_schmidt(&SchmidtVector::uniform(3).unwrap(), 1e-9);
        let roots = secular_roots(&cs, 3).unwrap();
        assert_abs_diff_eq!(roots[0], 0.0, epsilon = 1e-12);

        // r = 2 distinct coefficients against the 2x2 block oracle
        // A = [[a1^2 - a1^2/k, -a1 a2/k], [-a1 a2/k, a2^2 - a2^2/k]].
        let a = SchmidtVector::new(vec![0.7f64.sqrt(), 0.3f64.sqrt()]).unwrap();
        let cs = compress_schmidt(&a, 1e-9);
        let roots = secular_roots(&cs, 1).unwrap();
        let (a1, a2) = (0.7f64.sqrt(), 0.3f64.sqrt());
        let m = nalgebra::DMatrix::from_row_slice(
            2,
            2,
            &[
                num_complex::Complex64::new(a1 * a1 - a1 * a1, 0.0),
                num_complex::Complex64::new(-a1 * a2, 0.0),
                num_complex::Complex64::new(-a1 * a2, 0.0),
                num_complex::Complex64::new(a2 * a2 - a2 * a2, 0.0),
            ],
        );
        let block = crate::linalg::HermitianMatrix::new(m).unwrap();
        let mut oracle = block.eigenvalues();
        oracle.reverse();
        for (root, want) in roots.iter().zip(&oracle) {
            assert_abs_diff_eq!(*root, *want, epsilon = 1e-11);
        }
        // F vanishes at the returned roots.
        let b2: Vec<f64> = cs.distinct().iter().map(|b| b * b).collect();
        for root in &roots {
            let f = 1.0
                - b2
                    .iter()
                    .zip(cs.mults())
                    .map(|(b, &mi)| mi as f64 * b / (b - root))
                    .sum::<f64>();
            assert!(f.abs() < 1e-10, "|F(eta)| = {}", f.abs());
        }
    }

    #[test]
    fn structured_spectrum_reference_cases() {
        // Bell state, kappa = 1 on 2x2: value 1/2 with multiplicity 3 and a
        // simple root at -1/2.
        let d22 = dims(2, 2);
        let bell = SchmidtVector::uniform(2).unwrap();
        let st = xi_spectrum_structured(&bell, 1, d22).unwrap();
        assert_eq!(st.blocks.len(), 1);
        assert_abs_diff_eq!(st.blocks[0].0, 0.5, epsilon = 1e-14);
        assert_eq!(st.blocks[0].1, 3);
        assert_eq!(st.etas.len(), 1);
        assert_abs_diff_eq!(st.etas[0], -0.5, epsilon = 1e-12);
        assert_eq!(st.null_mult, 0);
        assert_eq!(st.total_multiplicity(), 4);

        // Product state on 2x3: {1, 1, 0, 0, 0, 0}.
        let d23 = dims(2, 3);
        let prod = SchmidtVector::uniform(1).unwrap();
        let st = xi_spectrum_structured(&prod, 1, d23).unwrap();
        assert_eq!(st.blocks, vec![(1.0, 2)]);
        assert_abs_diff_eq!(st.etas[0], 0.0, epsilon = 1e-12);
        assert_eq!(st.null_mult, 3);
        let direct = xi_kappa(&schmidt_pure_state(&prod, d23).unwrap(), 1)
            .unwrap()
            .eigenvalues();
        let mut flat = st.flatten_descending();
        flat.reverse();
        for (got, want) in flat.iter().zip(&direct) {
            assert_abs_diff_eq!(*got, *want, epsilon = 1e-10);
        }

        // kappa = n on the uniform full-rank vector: positivity boundary.
        let d33 = dims(3, 3);
        let st = xi_spectrum_structured(&SchmidtVector::uniform(3).unwrap(), 3, d33).unwrap();
        assert_abs_diff_eq!(*st.etas.last().unwrap(), 0.0, epsilon = 1e-12);
        assert!(st.min_eigenvalue() >= -1e-12);
    }

    #[test]
    fn structured_matches_direct_eigendecomposition() {
        let cases = [
            (dims(3, 3), 1usize),
            (dims(4, 4), 2),
            (dims(2, 4), 1),
            (dims(3, 5), 3),
        ];
        let mut rng = ChaCha20Rng::seed_from_u64(5);
        for (d, kappa) in cases {
            for trial in 0..10 {
                let r = 1 + (trial % d.n());
                let raw: Vec<f64> = (0..r).map(|_| rng.gen::<f64>() + 0.05).collect();
                let a = SchmidtVector::from_unnormalized(&raw).unwrap();
                let st = xi_spectrum_structured(&a, kappa, d).unwrap();
                let direct = xi_kappa(&schmidt_pure_state(&a, d).unwrap(), kappa)
                    .unwrap()
                    .eigenvalues();
                let mut flat = st.flatten_descending();
                flat.reverse();
                assert_eq!(flat.len(), direct.len());
                for (got, want) in flat.iter().zip(&direct) {
                    assert_abs_diff_eq!(*got, *want, epsilon = 1e-9);
                }
                // Trace and sign rule.
                let m = d.m() as f64;
                assert_abs_diff_eq!(
                    st.trace(),
                    m - 1.0 / kappa as f64,
                    epsilon = 1e-9
                );
                let eta_q = *st.etas.last().unwrap();
                if r > kappa {
                    assert!(eta_q < 0.0);
                    assert!(-eta_q <= 1.0 / kappa as f64 - 1.0 / r as f64 + 1e-12);
                } else {
                    assert!(eta_q >= -1e-12);
                }
            }
        }
    }

    #[test]
    fn rearrangement_minimum_reference_cases() {
        // MMS against any structured spectrum: the trace over d.
        let d22 = dims(2, 2);
        let bell_xi = xi_spectrum_structured(&SchmidtVector::uniform(2).unwrap(), 1, d22).unwrap();
        let mms = Spectrum::maximally_mixed(d22);
        let v = rearrangement_min(&mms, &bell_xi).unwrap();
        assert_abs_diff_eq!(v, (2.0 - 1.0) / 4.0, epsilon = 1e-12);

        // Pure state paired against the Bell reduction: -1/2.
        let pure = Spectrum::pure(d22);
        let v = rearrangement_min(&pure, &bell_xi).unwrap();
        assert_abs_diff_eq!(v, -0.5, epsilon = 1e-12);
    }

    #[test]
    fn rearrangement_is_a_lower_bound_and_attained() {
        let d33 = dims(3, 3);
        let mut rng = ChaCha20Rng::seed_from_u64(9);
        for case in 0..5 {
            let raw: Vec<f64> = (0..9).map(|_| rng.gen::<f64>()).collect();
            let total: f64 = raw.iter().sum();
            let spectrum =
                Spectrum::new(raw.iter().map(|x| x / total).collect(), d33).unwrap();
            let r = 1 + case % 3;
            let coeffs: Vec<f64> = (0..r).map(|_| rng.gen::<f64>() + 0.1).collect();
            let a = SchmidtVector::from_unnormalized(&coeffs).unwrap();
            let kappa = 1 + case % 2;
            let st = xi_spectrum_structured(&a, kappa, d33).unwrap();
            let rmin = rearrangement_min(&spectrum, &st).unwrap();

            let xi = xi_kappa(&schmidt_pure_state(&a, d33).unwrap(), kappa).unwrap();
            for s in 0..100u64 {
                let u = haar_unitary(9, 1000 + s);
                let rho = DensityMatrix::from_spectrum_and_unitary(&spectrum, &u).unwrap();
                let t = (rho.matrix().as_matrix() * xi.as_matrix()).trace().re;
                assert!(t >= rmin - 1e-9, "sample {t} under minimum {rmin}");
            }

            // The eigenbasis-aligning unitary attains the minimum.
            let (_, xi_vecs) = xi.eigen();
            let mut aligned = nalgebra::DMatrix::zeros(9, 9);
            // xi eigenvectors ascending; pair the largest xi eigenvalue with
            // the smallest state eigenvalue.
            for j in 0..9 {
                aligned.set_column(j, &xi_vecs.column(8 - j));
            }
            let u = crate::linalg::Unitary::new(aligned, 1e-10).unwrap();
            let rho = DensityMatrix::from_spectrum_and_unitary(&spectrum, &u).unwrap();
            let t = (rho.matrix().as_matrix() * xi.as_matrix()).trace().re;
            assert_abs_diff_eq!(t, rmin, epsilon = 1e-9);
        }
    }

    #[test]
    fn predfs_three_way_verdicts() {
        let d33 = dims(3, 3);
        let budget = SearchBudget {
            starts: 16,
            iterations: 80,
            seed: 0,
        };

        // MMS is certified by the fast path.
        let v = certify_predfs(&Spectrum::maximally_mixed(d33), 1, &budget).unwrap();
        assert!(v.satisfied);
        assert!(matches!(v.predfs, Some(PredfsStatus::Certified)));

        // kappa >= n is trivially certified.
        let v = certify_predfs(&Spectrum::pure(d33), 3, &budget).unwrap();
        assert!(v.satisfied);

        // Pure spectra are falsified by the uniform full-rank vector.
        let v = certify_predfs(&Spectrum::pure(d33), 1, &budget).unwrap();
        assert!(!v.satisfied);
        match v.predfs {
            Some(PredfsStatus::Falsified { violation, .. }) => {
                assert!(violation < -1e-6);
            }
            other => panic!("expected falsification, got {other:?}"),
        }

        // Boundary spectrum certifies with zero slack through the fast path.
        let alpha = snfs_alpha(SnfsTechnique::Reduction, 1, &d33)
            .unwrap()
            .to_f64()
            .unwrap();
        let lam0 = 1.0 / (9.0 + alpha);
        let mut vals = vec![lam0; 9];
        vals[8] = 1.0 - 8.0 * lam0;
        let s = Spectrum::new(vals, d33).unwrap();
        let v = certify_predfs(&s, 1, &budget).unwrap();
        assert!(v.satisfied);
        assert!(v.slack.abs() < 1e-12);
    }

    #[test]
    fn proposition_range_readings() {
        // Isotropic reading reconciles with the closed-form threshold on
        // square systems.
        for r in 2..=6usize {
            for kappa in 1..r {
                let p = proposition61_range(r, kappa, kappa.min(r - 1)).unwrap();
                let d = dims(r, r);
                let corollary = snfs_alpha(SnfsTechnique::Reduction, kappa, &d)
                    .unwrap()
                    .to_f64()
                    .unwrap();
                assert_abs_diff_eq!(p.isotropic_reading, corollary, epsilon = 1e-12);
            }
        }
        // Product reading at kappa = chi = 1 collapses to zero.
        let p = proposition61_range(3, 1, 1).unwrap();
        assert_eq!(p.product_reading, 0.0);
        // chi = r - 1, kappa = 1, r = 3 under the product reading.
        let p = proposition61_range(3, 1, 2).unwrap();
        assert_abs_diff_eq!(p.product_reading, 3.0, epsilon = 1e-12);

        assert!(proposition61_range(3, 3, 1).is_err());
        assert!(proposition61_range(3, 1, 3).is_err());
    }
}
