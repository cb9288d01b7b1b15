//! Spectrum-only certification: the convex-hull inequality, the alpha
//! catalog for the negativity and Schmidt-number families, membership
//! verdicts, the max-gamma inversion, and witness spectral bounds.
//!
//! Every criterion is an instantiation of the same two-pronged test: either
//! the smallest eigenvalue clears `1 / (d + alpha_plus)`, or the hull
//! inequality with coefficients derived from the generic lemma holds. The
//! per-criterion content is entirely in the choice of `alpha_plus`.

use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::HermitianMatrix;
use crate::tol;
use crate::types::{BipartiteDims, Spectrum};

/// Band `[alpha_minus, alpha_plus]` of map parameters backing a criterion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HullParams {
    pub alpha_minus: f64,
    pub alpha_plus: f64,
}

impl HullParams {
    pub fn new(alpha_minus: f64, alpha_plus: f64) -> Result<Self> {
        if !(alpha_minus <= 0.0 && 0.0 <= alpha_plus) {
            return Err(Error::OutOfRange(format!(
                "need alpha_minus <= 0 <= alpha_plus, got [{alpha_minus}, {alpha_plus}]"
            )));
        }
        Ok(Self {
            alpha_minus,
            alpha_plus,
        })
    }

    /// The certification band `[-1, alpha_plus]` used by every criterion.
    pub fn certification(alpha_plus: f64) -> Result<Self> {
        if alpha_plus < 0.0 || !alpha_plus.is_finite() {
            return Err(Error::OutOfRange(format!("alpha_plus = {alpha_plus}")));
        }
        Ok(Self {
            alpha_minus: -1.0,
            alpha_plus,
        })
    }
}

/// Coefficients `(K, c)` of the hull inequality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HullCoefficients {
    pub k_coeff: f64,
    pub c_index: usize,
}

/// Ceiling that forgives float noise around exact integers.
fn ceil_guarded(x: f64) -> f64 {
    let r = x.round();
    if (x - r).abs() < 1e-9 {
        r
    } else {
        x.ceil()
    }
}

/// `K = 1 - alpha_plus/alpha_minus` and
/// `c = ceil((alpha_plus + alpha_minus (d - 1 + alpha_plus)) / (alpha_minus - alpha_plus))`,
/// clamped into `[1, d - 1]`.
pub fn hull_coefficients(params: &HullParams, d: usize) -> Result<HullCoefficients> {
    let (am, ap) = (params.alpha_minus, params.alpha_plus);
    if am >= 0.0 {
        return Err(Error::OutOfRange(format!(
            "alpha_minus must be negative, got {am}"
        )));
    }
    if am == ap {
        return Err(Error::DegenerateCriterion(
            "alpha_minus = alpha_plus".into(),
        ));
    }
    let k_coeff = 1.0 - ap / am;
    let raw = (ap + am * (d as f64 - 1.0 + ap)) / (am - ap);
    let c = ceil_guarded(raw).max(1.0).min(d as f64 - 1.0);
    Ok(HullCoefficients {
        k_coeff,
        c_index: c as usize,
    })
}

/// Which prong of the two-pronged test decided the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BindingCondition {
    MinEigenvalue,
    HullInequality,
    Neither,
}

/// Outcome of evaluating the hull lemma on a spectrum.
#[derive(Debug, Clone, Copy)]
pub struct LemmaEvaluation {
    pub satisfied: bool,
    pub binding: BindingCondition,
    /// Left-hand side of the hull inequality (passes at >= 1).
    pub hull_lhs: f64,
    /// `lambda_0 - 1/(d + alpha_plus)` (passes at >= 0).
    pub min_eig_margin: f64,
    pub coefficients: HullCoefficients,
}

impl LemmaEvaluation {
    /// Signed distance to the decision boundary of the prong that fired (or
    /// the most favorable prong when neither did).
    pub fn slack(&self) -> f64 {
        match self.binding {
            BindingCondition::MinEigenvalue => self.min_eig_margin,
            BindingCondition::HullInequality => self.hull_lhs - 1.0,
            BindingCondition::Neither => self.min_eig_margin.max(self.hull_lhs - 1.0),
        }
    }
}

/// Two-pronged membership test: `lambda_0 >= 1/(d + alpha_plus)` or
/// `K sum_{i<c} lambda_i + (d - K c + alpha_plus) lambda_c >= 1`.
pub fn lemma1_holds(spectrum: &Spectrum, params: &HullParams) -> Result<LemmaEvaluation> {
    let d = spectrum.dims().total();
    let coeff = hull_coefficients(params, d)?;
    let lam = spectrum.values();
    let threshold = 1.0 / (d as f64 + params.alpha_plus);
    let min_eig_margin = lam[0] - threshold;
    let c = coeff.c_index;
    let head: f64 = lam[..c].iter().sum();
    let hull_lhs =
        coeff.k_coeff * head + (d as f64 - coeff.k_coeff * c as f64 + params.alpha_plus) * lam[c];
    // The boundary allowance scales with the threshold so that huge alpha
    // values cannot turn a vanishing eigenvalue into a pass.
    let (satisfied, binding) = if min_eig_margin >= -tol::CERT_BOUNDARY * threshold {
        (true, BindingCondition::MinEigenvalue)
    } else if hull_lhs >= 1.0 - tol::CERT_BOUNDARY {
        (true, BindingCondition::HullInequality)
    } else {
        (false, BindingCondition::Neither)
    };
    Ok(LemmaEvaluation {
        satisfied,
        binding,
        hull_lhs,
        min_eig_margin,
        coefficients: coeff,
    })
}

/// Criterion family behind a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Technique {
    Negfs,
    SnRobustness,
    SnGeneral,
    SnConjecture,
    SnNegativity,
    Predfs,
    Negredfs,
}

/// What a positive verdict proves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    /// Membership in the stated set is proven.
    Certified,
    /// Membership is proven only for a superset of the stated set.
    SupersetOnly,
    /// The backing alpha value is conjectured, not proven.
    Conjectural,
}

impl Technique {
    /// Certificate semantics are fixed by the technique.
    pub fn certificate_kind(self) -> CertificateKind {
        match self {
            Technique::Negfs
            | Technique::SnRobustness
            | Technique::SnGeneral
            | Technique::Negredfs => CertificateKind::Certified,
            Technique::SnNegativity | Technique::Predfs => CertificateKind::SupersetOnly,
            Technique::SnConjecture => CertificateKind::Conjectural,
        }
    }
}

/// Status detail attached to positive-reduction verdicts, whose quantifier
/// over pure states cannot be certified by sampling alone.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PredfsStatus {
    /// The closed-form fast path held.
    Certified,
    /// A Schmidt vector was found whose rearrangement minimum is negative.
    Falsified {
        witness_schmidt: Vec<f64>,
        violation: f64,
    },
    /// No violation found within the search budget; not a certificate.
    NumericallySupported { starts: usize, best_minimum: f64 },
}

/// Outcome of a spectral criterion.
#[derive(Debug, Clone, Serialize)]
pub struct CriterionVerdict {
    pub technique: Technique,
    pub chi_or_gamma: f64,
    pub alpha: f64,
    pub satisfied: bool,
    pub certificate_kind: CertificateKind,
    pub binding_condition: BindingCondition,
    pub slack: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predfs: Option<PredfsStatus>,
}

impl CriterionVerdict {
    pub(crate) fn from_lemma(
        technique: Technique,
        chi_or_gamma: f64,
        alpha: f64,
        eval: &LemmaEvaluation,
    ) -> Self {
        Self {
            technique,
            chi_or_gamma,
            alpha,
            satisfied: eval.satisfied,
            certificate_kind: technique.certificate_kind(),
            binding_condition: eval.binding,
            slack: eval.slack(),
            predfs: None,
        }
    }
}

/// `alpha_plus` for the negativity criterion at threshold `gamma`, together
/// with the rank `tau` of the dominating pseudo-pure family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NegfsAlpha {
    pub alpha_plus: f64,
    pub tau: usize,
}

/// Largest certifiable negativity threshold: `(n - 1)/2`, approached only in
/// the pure-state limit.
pub fn negfs_gamma_sup(dims: &BipartiteDims) -> f64 {
    (dims.n() as f64 - 1.0) / 2.0
}

/// Finds the unique rank bracket for `gamma` and evaluates
/// `alpha_plus = (tau^2 - tau + 2 d gamma) / (tau - 2 gamma - 1)`.
///
/// `gamma = 0` degenerates to the separability threshold `alpha_plus = 2`.
/// For the top rank `tau = n` the bracket extends to the pure-state supremum
/// `(n - 1)/2`: beyond the last crossing the rank-`n` family stays dominant,
/// so the inversion remains exact there.
pub fn negfs_alpha_plus(gamma: f64, dims: &BipartiteDims) -> Result<NegfsAlpha> {
    if !gamma.is_finite() || gamma < 0.0 {
        return Err(Error::OutOfRange(format!("gamma = {gamma}")));
    }
    let n = dims.n();
    let d = dims.total() as f64;
    let sup = negfs_gamma_sup(dims);
    if gamma >= sup {
        return Err(Error::GammaOutOfRange {
            gamma,
            gamma_max: sup,
        });
    }
    if gamma == 0.0 {
        return Ok(NegfsAlpha {
            alpha_plus: 2.0,
            tau: 1,
        });
    }
    for tau in 2..=n {
        let t = tau as f64;
        let lo = (t - 1.0) * (t - 2.0) / (2.0 * (2.0 * t + d - 2.0));
        let hi = if tau < n {
            t * (t - 1.0) / (2.0 * (2.0 * t + d))
        } else {
            sup
        };
        if gamma >= lo && gamma < hi {
            let alpha_plus = (t * t - t + 2.0 * d * gamma) / (t - 2.0 * gamma - 1.0);
            return Ok(NegfsAlpha { alpha_plus, tau });
        }
    }
    // Unreachable: the brackets tile [0, sup).
    Err(Error::GammaOutOfRange {
        gamma,
        gamma_max: sup,
    })
}

/// Certifies that no global unitary can raise the negativity above `gamma`.
pub fn certify_negfs(spectrum: &Spectrum, gamma: f64) -> Result<CriterionVerdict> {
    let NegfsAlpha { alpha_plus, .. } = negfs_alpha_plus(gamma, &spectrum.dims())?;
    let eval = lemma1_holds(spectrum, &HullParams::certification(alpha_plus)?)?;
    Ok(CriterionVerdict::from_lemma(
        Technique::Negfs,
        gamma,
        alpha_plus,
        &eval,
    ))
}

/// Result of inverting the negativity criterion on a spectrum.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct MaxGamma {
    /// Tightest certified threshold, or the trivial cap `(n - 1)/2`.
    pub gamma_max: f64,
    /// `alpha_plus` at the returned threshold (null when trivial).
    pub alpha: f64,
    pub tau: usize,
    /// True when no threshold below the cap is certifiable.
    pub trivial: bool,
}

/// Smallest `gamma` this spectrum can be certified for, by bisection; the
/// certified set of thresholds is upward closed, so the infimum is the
/// tightest sound bound on the unitarily achievable negativity.
pub fn max_gamma_negfs(spectrum: &Spectrum) -> Result<MaxGamma> {
    let dims = spectrum.dims();
    let sup = negfs_gamma_sup(&dims);
    let certified = |g: f64| -> Result<bool> { Ok(certify_negfs(spectrum, g)?.satisfied) };
    if sup == 0.0 {
        // n = 1: nothing is ever entangled.
        return Ok(MaxGamma {
            gamma_max: 0.0,
            alpha: 2.0,
            tau: 1,
            trivial: false,
        });
    }
    let hi_probe = sup * (1.0 - 1e-12);
    if !certified(hi_probe)? {
        return Ok(MaxGamma {
            gamma_max: sup,
            alpha: f64::INFINITY,
            tau: dims.n(),
            trivial: true,
        });
    }
    if certified(0.0)? {
        return Ok(MaxGamma {
            gamma_max: 0.0,
            alpha: 2.0,
            tau: 1,
            trivial: false,
        });
    }
    let (mut lo, mut hi) = (0.0f64, hi_probe);
    for _ in 0..200 {
        if hi - lo <= 1e-13 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if certified(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let at = negfs_alpha_plus(hi, &dims)?;
    Ok(MaxGamma {
        gamma_max: hi,
        alpha: at.alpha_plus,
        tau: at.tau,
        trivial: false,
    })
}

/// Rows of the alpha catalog for the Schmidt-number sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SnfsTechnique {
    /// `2 (n chi - 1) / (n - chi)`; square systems only. Proven lower bound.
    Robustness,
    /// `2 (2 chi^2 - 1)`; conjectured tight value.
    Conjecture,
    /// `(nm (chi - 1) + n (n - 1)) / (n - chi)`; delimits a superset.
    Negativity,
    /// `n (m chi - 1) / (n - chi)`; positive-reduction superset.
    Reduction,
    /// `chi + 1`; proven for all dimensions.
    General,
}

impl SnfsTechnique {
    pub fn verdict_technique(self) -> Technique {
        match self {
            SnfsTechnique::Robustness => Technique::SnRobustness,
            SnfsTechnique::Conjecture => Technique::SnConjecture,
            SnfsTechnique::Negativity => Technique::SnNegativity,
            SnfsTechnique::Reduction => Technique::Predfs,
            SnfsTechnique::General => Technique::SnGeneral,
        }
    }
}

/// Exact `alpha_plus` for the Schmidt-number criterion of rank `chi`.
pub fn snfs_alpha(
    technique: SnfsTechnique,
    chi: usize,
    dims: &BipartiteDims,
) -> Result<Ratio<i64>> {
    let (n, m) = (dims.n() as i64, dims.m() as i64);
    let chi = chi as i64;
    if chi < 1 || chi >= n {
        return Err(Error::OutOfRange(format!(
            "chi must satisfy 1 <= chi < n = {n}, got {chi}"
        )));
    }
    let r = match technique {
        SnfsTechnique::Robustness => {
            if n != m {
                return Err(Error::OutOfRange(
                    "the robustness bound is stated for square systems only".into(),
                ));
            }
            Ratio::new(2 * (n * chi - 1), n - chi)
        }
        SnfsTechnique::Conjecture => Ratio::from_integer(2 * (2 * chi * chi - 1)),
        SnfsTechnique::Negativity => Ratio::new(n * m * (chi - 1) + n * (n - 1), n - chi),
        SnfsTechnique::Reduction => Ratio::new(n * (m * chi - 1), n - chi),
        SnfsTechnique::General => Ratio::from_integer(chi + 1),
    };
    Ok(r)
}

/// Certifies (or delimits) membership in the rank-`chi` Schmidt-number set.
pub fn certify_snfs(
    spectrum: &Spectrum,
    chi: usize,
    technique: SnfsTechnique,
) -> Result<CriterionVerdict> {
    let dims = spectrum.dims();
    let alpha = snfs_alpha(technique, chi, &dims)?
        .to_f64()
        .expect("small rational");
    let eval = lemma1_holds(spectrum, &HullParams::certification(alpha)?)?;
    Ok(CriterionVerdict::from_lemma(
        technique.verdict_technique(),
        chi as f64,
        alpha,
        &eval,
    ))
}

/// Checks the catalog ordering `robustness <= conjecture <= negativity <=
/// reduction` in exact arithmetic (the robustness link only when `n = m`).
pub fn ordering_check(chi: usize, dims: &BipartiteDims) -> Result<bool> {
    let c = snfs_alpha(SnfsTechnique::Conjecture, chi, dims)?;
    let neg = snfs_alpha(SnfsTechnique::Negativity, chi, dims)?;
    let red = snfs_alpha(SnfsTechnique::Reduction, chi, dims)?;
    let chain = c <= neg && neg <= red;
    if dims.n() == dims.m() {
        let lb = snfs_alpha(SnfsTechnique::Robustness, chi, dims)?;
        Ok(lb <= c && chain)
    } else {
        Ok(chain)
    }
}

/// Spectral bounds every valid rank-`chi` Schmidt-number witness satisfies.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct WitnessBounds {
    /// `lambda_min >= -Tr(W) / alpha_plus`.
    pub min_ok: bool,
    /// `lambda_max <= Tr(W)`.
    pub max_ok: bool,
    pub slack_min: f64,
    pub slack_max: f64,
    pub alpha_used: f64,
}

/// Tests a witness candidate against both spectral bounds. A violation
/// disqualifies the operator as a rank-`chi` witness; the alpha is always a
/// proven one so that disqualification is sound.
pub fn witness_spectral_bounds(
    w: &HermitianMatrix,
    chi: usize,
    dims: &BipartiteDims,
) -> Result<WitnessBounds> {
    if w.dim() != dims.total() {
        return Err(Error::DimensionMismatch {
            expected: dims.total(),
            actual: w.dim(),
        });
    }
    let trace = w.trace();
    if trace <= 0.0 {
        return Err(Error::OutOfRange(format!(
            "witness candidate has non-positive trace {trace}"
        )));
    }
    let technique = if dims.n() == dims.m() {
        SnfsTechnique::Robustness
    } else {
        SnfsTechnique::General
    };
    let alpha = snfs_alpha(technique, chi, dims)?
        .to_f64()
        .expect("small rational");
    let ev = w.eigenvalues();
    let (lam_min, lam_max) = (ev[0], ev[ev.len() - 1]);
    let slack_min = lam_min + trace / alpha;
    let slack_max = trace - lam_max;
    Ok(WitnessBounds {
        min_ok: slack_min >= -tol::ORACLE_ABS,
        max_ok: slack_max >= -tol::ORACLE_ABS,
        slack_min,
        slack_max,
        alpha_used: alpha,
    })
}
