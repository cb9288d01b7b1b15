//! Exact and analytic negativity computations: the trace-norm definition on
//! matrices, pseudo-pure closed forms, the partial-sum bound, Schmidt-number
//! and concurrence corollaries, and the reduction-map negativity.

use serde::Serialize;

use crate::criteria::{CriterionVerdict, HullParams, Technique};
use crate::error::{Error, Result};
use crate::linalg::{DensityMatrix, Subsystem};
use crate::maps::xi_kappa;
use crate::pred_spectrum::xi_spectrum_structured;
use crate::types::{BipartiteDims, SchmidtVector, Spectrum};

/// Which computation produced a negativity value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NegativityFormula {
    MatrixExact,
    PpsAnalytic,
    ReductionMap,
}

/// A negativity value with provenance.
#[derive(Debug, Clone, Serialize)]
pub struct NegativityReport {
    /// Absolute sum of the negative eigenvalues of the mapped matrix.
    pub value: f64,
    pub negative_eigenvalue_count: usize,
    pub formula_used: NegativityFormula,
    /// For the reduction map only: the trace-norm normalization
    /// `(|xi_k(rho)|_1 - (m - 1)) / 2`, which differs from `value` by a
    /// constant `(1 - 1/k)/2` when `k > 1`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace_norm_form: Option<f64>,
}

/// Negativity `(|rho^Gamma|_1 - 1)/2`, computed as the absolute sum of the
/// negative partial-transpose eigenvalues.
pub fn negativity(rho: &DensityMatrix) -> NegativityReport {
    let pt = rho.partial_transpose(Subsystem::B);
    let (sum, count) = pt.negative_part();
    NegativityReport {
        value: sum,
        negative_eigenvalue_count: count,
        formula_used: NegativityFormula::MatrixExact,
        trace_norm_form: None,
    }
}

/// Closed-form negativity of the pseudo-pure state built from `a` with
/// mixing weight `alpha` (`p = d/(d + alpha)`); `alpha = inf` is the pure
/// state.
///
/// Each coefficient pair with `a_i a_j > 1/alpha` contributes one negative
/// eigenvalue `(1 - alpha a_i a_j)/(d + alpha)`; pairs below the activation
/// threshold contribute nothing. An empty sum means the partial transpose is
/// positive and the state is PPT.
pub fn pps_negativity_analytic(
    a: &SchmidtVector,
    dims: BipartiteDims,
    alpha: f64,
) -> Result<f64> {
    if a.rank() > dims.n() {
        return Err(Error::InvalidSchmidtVector(format!(
            "rank {} exceeds local dimension {}",
            a.rank(),
            dims.n()
        )));
    }
    if alpha < 0.0 || alpha.is_nan() {
        return Err(Error::OutOfRange(format!("alpha = {alpha}")));
    }
    let c = a.coeffs();
    if alpha.is_infinite() {
        // Pure-state limit: sum over all pairs, equal to ((sum a_i)^2 - 1)/2.
        let s = a.sum();
        return Ok(((s * s) - 1.0) / 2.0);
    }
    if alpha == 0.0 {
        return Ok(0.0);
    }
    let d = dims.total() as f64;
    let threshold = 1.0 / alpha;
    let mut total = 0.0;
    for i in 0..c.len() {
        for j in 0..i {
            let prod = c[i] * c[j];
            if prod > threshold {
                total += (alpha * prod - 1.0) / (d + alpha);
            }
        }
    }
    Ok(total.max(0.0))
}

/// Largest pseudo-pure negativity over pure parts of Schmidt rank `chi`,
/// attained by the uniform coefficient vector.
pub fn max_pps_negativity_for_rank(
    chi: usize,
    dims: BipartiteDims,
    alpha: f64,
) -> Result<f64> {
    if chi < 1 || chi > dims.n() {
        return Err(Error::OutOfRange(format!(
            "chi must be in [1, {}], got {chi}",
            dims.n()
        )));
    }
    pps_negativity_analytic(&SchmidtVector::uniform(chi)?, dims, alpha)
}

/// Interval `(2 (chi - 1), 2 chi)` of mixing weights within which the
/// rank-`chi` uniform family dominates every other rank.
pub fn rank_crossing_alpha(chi: usize) -> (f64, f64) {
    (2.0 * (chi as f64 - 1.0), 2.0 * chi as f64)
}

/// Locates the crossing between the rank-`chi` and rank-`chi + 1` analytic
/// curves by bisection on their difference.
pub fn rank_crossing_alpha_numeric(chi: usize, dims: BipartiteDims) -> Result<f64> {
    if chi + 1 > dims.n() {
        return Err(Error::OutOfRange(format!(
            "need chi + 1 <= n, got chi = {chi}, n = {}",
            dims.n()
        )));
    }
    let diff = |alpha: f64| -> Result<f64> {
        Ok(max_pps_negativity_for_rank(chi + 1, dims, alpha)?
            - max_pps_negativity_for_rank(chi, dims, alpha)?)
    };
    let target = 2.0 * chi as f64;
    // Below the crossing the higher rank never dominates (for chi = 1 the
    // two curves coincide at zero), above it the difference is strictly
    // positive; bisect on that boundary.
    let (mut lo, mut hi) = (target - 0.5, target + 0.5);
    if diff(lo)? > 0.0 || diff(hi)? <= 0.0 {
        return Err(Error::BracketFailure(format!(
            "no dominance switch around alpha = {target}"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if diff(mid)? > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
        if hi - lo < 1e-12 {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Upper bound on the negativity given the partial sum `m_k`:
/// `(k x + (n - k) y)^2 / 2 - 1/2` with `x = sqrt((1 - m_k)/k)` and
/// `y = sqrt(m_k/(n - k))`. Monotone increasing on the valid range
/// `0 <= m_k <= (n - k)/n`.
pub fn negativity_bound_from_mk(m_k: f64, k: usize, n: usize) -> Result<f64> {
    if k < 1 || k >= n {
        return Err(Error::OutOfRange(format!("need 1 <= k < n, got k = {k}")));
    }
    let cap = (n - k) as f64 / n as f64;
    if !(0.0..=cap + 1e-12).contains(&m_k) {
        return Err(Error::OutOfRange(format!(
            "m_{k} = {m_k} outside [0, {cap}]"
        )));
    }
    let x = ((1.0 - m_k) / k as f64).sqrt();
    let y = (m_k.max(0.0) / (n - k) as f64).sqrt();
    let s = k as f64 * x + (n - k) as f64 * y;
    Ok(s * s / 2.0 - 0.5)
}

/// Smallest Schmidt number consistent with an observed negativity: the least
/// `chi` with `(chi - 1)/2 >= neg`, where an exact boundary value still
/// allows `chi`.
pub fn sn_floor_from_negativity(neg: f64) -> Result<usize> {
    if neg < 0.0 || !neg.is_finite() {
        return Err(Error::OutOfRange(format!("negativity = {neg}")));
    }
    let t = 2.0 * neg;
    let chi = if t == t.floor() { t + 1.0 } else { t.ceil() + 1.0 };
    Ok(chi as usize)
}

/// Concurrence window implied by a negativity and a Schmidt-number cap:
/// `2 sqrt(2/(chi (chi-1))) neg <= C <= min(2 neg, sqrt(2 (chi-1)/chi))`.
pub fn concurrence_bounds(neg: f64, chi: usize) -> Result<(f64, f64)> {
    if neg < 0.0 || !neg.is_finite() {
        return Err(Error::OutOfRange(format!("negativity = {neg}")));
    }
    if chi == 0 {
        return Err(Error::OutOfRange("chi must be positive".into()));
    }
    if chi == 1 {
        if neg > 0.0 {
            return Err(Error::OutOfRange(
                "chi = 1 is inconsistent with a positive negativity".into(),
            ));
        }
        return Ok((0.0, 0.0));
    }
    let chi_f = chi as f64;
    let lower = 2.0 * (2.0 / (chi_f * (chi_f - 1.0))).sqrt() * neg;
    let upper = (2.0 * neg).min((2.0 * (chi_f - 1.0) / chi_f).sqrt());
    Ok((lower, upper))
}

/// Reduction-map negativity: the absolute sum of the negative eigenvalues of
/// `xi_k(rho)`. The trace-norm normalization is reported alongside.
pub fn reduction_negativity(rho: &DensityMatrix, kappa: usize) -> Result<NegativityReport> {
    let xi = xi_kappa(rho, kappa)?;
    let (sum, count) = xi.negative_part();
    let m = rho.dims().m() as f64;
    Ok(NegativityReport {
        value: sum,
        negative_eigenvalue_count: count,
        formula_used: NegativityFormula::ReductionMap,
        trace_norm_form: Some((xi.trace_norm() - (m - 1.0)) / 2.0),
    })
}

/// Closed-form reduction-map negativity of a pseudo-pure state:
/// `-min[0, ((m - 1/k) + alpha eta_q) / (d + alpha)]` with `eta_q` the
/// smallest structured eigenvalue of `xi_k(|psi><psi|)`.
pub fn pps_reduction_negativity_analytic(
    a: &SchmidtVector,
    dims: BipartiteDims,
    kappa: usize,
    alpha: f64,
) -> Result<f64> {
    if alpha < 0.0 || alpha.is_nan() {
        return Err(Error::OutOfRange(format!("alpha = {alpha}")));
    }
    let st = xi_spectrum_structured(a, kappa, dims)?;
    let eta_q = *st.etas.last().expect("at least one secular root");
    let m = dims.m() as f64;
    let d = dims.total() as f64;
    if alpha.is_infinite() {
        return Ok((-eta_q).max(0.0));
    }
    let level = ((m - 1.0 / kappa as f64) + alpha * eta_q) / (d + alpha);
    Ok((-level.min(0.0)).max(0.0))
}

/// Certifies that no global unitary can raise the reduction-map negativity
/// above `gamma`, for map parameter `kappa` against pure parts of rank `chi`.
///
/// The backing alpha inverts the pseudo-pure closed form at the threshold:
/// `alpha = (gamma n m + m - 1/kappa) / ((1/kappa - 1/chi) - gamma)`,
/// requiring `kappa < chi` and `gamma < 1/kappa - 1/chi`.
pub fn certify_negredfs(
    spectrum: &Spectrum,
    kappa: usize,
    chi: usize,
    gamma: f64,
) -> Result<CriterionVerdict> {
    let dims = spectrum.dims();
    if kappa < 1 {
        return Err(Error::OutOfRange("kappa must be at least 1".into()));
    }
    if !(kappa < chi && chi <= dims.n()) {
        return Err(Error::OutOfRange(format!(
            "need kappa < chi <= n for a nontrivial criterion, got kappa = {kappa}, chi = {chi}"
        )));
    }
    if gamma < 0.0 || !gamma.is_finite() {
        return Err(Error::OutOfRange(format!("gamma = {gamma}")));
    }
    let gamma_sup = 1.0 / kappa as f64 - 1.0 / chi as f64;
    if gamma >= gamma_sup {
        return Err(Error::GammaOutOfRange {
            gamma,
            gamma_max: gamma_sup,
        });
    }
    let (n, m) = (dims.n() as f64, dims.m() as f64);
    let (kf, cf) = (kappa as f64, chi as f64);
    let denom = cf - kf - gamma * cf * kf;
    if denom <= 0.0 {
        return Err(Error::DegenerateCriterion(format!(
            "denominator chi - kappa - gamma chi kappa = {denom}"
        )));
    }
    let alpha = cf * (kf * (m + gamma * m * n) - 1.0) / denom;
    let eval = crate::criteria::lemma1_holds(spectrum, &HullParams::certification(alpha)?)?;
    Ok(CriterionVerdict::from_lemma(
        Technique::Negredfs,
        gamma,
        alpha,
        &eval,
    ))
}
