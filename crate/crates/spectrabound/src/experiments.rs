//! Haar-sampling sweeps, figure-data regeneration, and the noise-parameter
//! estimators for pseudo-pure states.
//!
//! Sweeps parallelize over samples with per-sample seeds, so results are
//! independent of worker count; CSV output is formatted with 17 significant
//! digits and is byte-stable across runs.

use std::io::Write as _;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{
    alpha_from_noise, haar_unitary, schmidt_pure_state, DensityMatrix, Subsystem,
};
use crate::maps::xi_kappa;
use crate::negativity::{
    max_pps_negativity_for_rank, negativity_bound_from_mk, pps_reduction_negativity_analytic,
    sn_floor_from_negativity,
};
use crate::types::{BipartiteDims, SchmidtVector, Spectrum};

/// Quantity evaluated on each Haar-rotated state.
#[derive(Debug, Clone)]
pub enum SweepMeasure {
    /// Partial-transpose negativity.
    Negativity,
    /// Reduction-map negativity at the given map parameter.
    ReductionNegativity { kappa: usize },
    /// Raw inner product `Tr[U rho U^dag xi_k(|psi><psi|)]`; minima matter.
    Rearrangement { kappa: usize, schmidt: SchmidtVector },
}

/// A sampling sweep: which states, how many unitaries, which measure.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub dims: BipartiteDims,
    /// Grid of noise parameters for figure sweeps; ignored by single-spectrum
    /// sampling.
    pub grid: Vec<f64>,
    pub n_unitaries: usize,
    pub base_seed: u64,
    pub measure: SweepMeasure,
}

/// Distribution summary of a sweep.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SweepSummary {
    pub max_value: f64,
    pub seed_of_argmax: u64,
    pub min: f64,
    pub median: f64,
    pub p90: f64,
}

/// Evaluates the configured measure over `U_s diag(lambda) U_s^dag` for
/// `s = 1..n_unitaries` with `seed = base_seed + s`.
pub fn empirical_max(spectrum: &Spectrum, cfg: &SweepConfig) -> Result<SweepSummary> {
    if cfg.n_unitaries < 1 {
        return Err(Error::OutOfRange("n_unitaries must be at least 1".into()));
    }
    if spectrum.dims() != cfg.dims {
        return Err(Error::DimensionMismatch {
            expected: cfg.dims.total(),
            actual: spectrum.dims().total(),
        });
    }
    let dims = spectrum.dims();
    let d = dims.total();
    // Precompute the fixed observable for the rearrangement measure.
    let fixed = match &cfg.measure {
        SweepMeasure::Rearrangement { kappa, schmidt } => Some(xi_kappa(
            &schmidt_pure_state(schmidt, dims)?,
            *kappa,
        )?),
        _ => None,
    };
    let values: Vec<f64> = (1..=cfg.n_unitaries as u64)
        .into_par_iter()
        .map(|s| {
            let u = haar_unitary(d, cfg.base_seed + s);
            let rho = DensityMatrix::from_spectrum_and_unitary(spectrum, &u)
                .expect("dimensions checked");
            match &cfg.measure {
                SweepMeasure::Negativity => {
                    rho.partial_transpose(Subsystem::B).negative_part().0
                }
                SweepMeasure::ReductionNegativity { kappa } => {
                    xi_kappa(&rho, *kappa).expect("kappa checked").negative_part().0
                }
                SweepMeasure::Rearrangement { .. } => {
                    let xi = fixed.as_ref().expect("precomputed");
                    (rho.matrix().as_matrix() * xi.as_matrix()).trace().re
                }
            }
        })
        .collect();
    let mut max_value = f64::NEG_INFINITY;
    let mut seed_of_argmax = 0;
    for (i, &v) in values.iter().enumerate() {
        if v > max_value {
            max_value = v;
            seed_of_argmax = cfg.base_seed + 1 + i as u64;
        }
    }
    let mut sorted = values;
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite measures"));
    let n = sorted.len();
    Ok(SweepSummary {
        max_value,
        seed_of_argmax,
        min: sorted[0],
        median: sorted[(n - 1) / 2],
        p90: sorted[(9 * (n - 1)) / 10],
    })
}

/// Figure identifiers for the regenerable data sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FigureId {
    /// Maximal pseudo-pure negativity per Schmidt rank vs noise (6x6).
    Fig3,
    /// Certified negativity bound vs sampled maxima for four qubit-pair
    /// spectra families.
    Fig4,
    /// Negativity bound as a function of the partial sum m_k (n = 6).
    Fig5,
    /// Reduction-map negativity per Schmidt rank at kappa = 1 (6x6).
    FigA1,
    /// Reduction-map negativity per map parameter at full rank (6x6).
    FigA2,
}

impl FigureId {
    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "fig3" => Some(Self::Fig3),
            "fig4" => Some(Self::Fig4),
            "fig5" => Some(Self::Fig5),
            "figa1" => Some(Self::FigA1),
            "figa2" => Some(Self::FigA2),
            _ => None,
        }
    }
}

/// Tunable knobs shared by the figure generators.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct FigureParams {
    /// Haar samples per grid point.
    pub samples: usize,
    pub seed: u64,
    /// Number of noise-grid points (m_k grids are fixed at 200).
    pub grid_points: usize,
}

impl Default for FigureParams {
    fn default() -> Self {
        Self {
            samples: 1000,
            seed: 0,
            grid_points: 41,
        }
    }
}

/// One CSV cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Real(f64),
    Text(String),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Real(v) => format!("{v:.16e}"),
            Cell::Text(s) => s.clone(),
        }
    }
}

/// A figure data set: header plus typed rows.
#[derive(Debug, Clone)]
pub struct FigureTable {
    pub figure: FigureId,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl FigureTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Cell::render).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}

fn noise_grid(points: usize) -> Vec<f64> {
    let n = points.max(2);
    (0..n).map(|i| i as f64 / (n - 1) as f64).collect()
}

/// Regenerates the data behind one figure.
pub fn figure_data(figure: FigureId, params: &FigureParams) -> Result<FigureTable> {
    match figure {
        FigureId::Fig3 => fig3(params),
        FigureId::Fig4 => fig4(params),
        FigureId::Fig5 => fig5(),
        FigureId::FigA1 => fig_a(params, FigureId::FigA1),
        FigureId::FigA2 => fig_a(params, FigureId::FigA2),
    }
}

fn fig3(params: &FigureParams) -> Result<FigureTable> {
    let dims = BipartiteDims::new(6, 6)?;
    let grid = noise_grid(params.grid_points);
    let mut rows = Vec::new();
    for (i, &p) in grid.iter().enumerate() {
        let spectrum = Spectrum::pseudo_pure(dims, p)?;
        let cfg = SweepConfig {
            dims,
            grid: grid.clone(),
            n_unitaries: params.samples,
            base_seed: params.seed + (i * params.samples) as u64,
            measure: SweepMeasure::Negativity,
        };
        let empirical = empirical_max(&spectrum, &cfg)?.max_value;
        let alpha = alpha_from_noise(p, dims);
        for chi in 2..=6usize {
            let analytic = max_pps_negativity_for_rank(chi, dims, alpha)?;
            rows.push(vec![
                Cell::Real(p),
                Cell::Int(chi as i64),
                Cell::Real(analytic),
                Cell::Real(empirical),
            ]);
        }
    }
    Ok(FigureTable {
        figure: FigureId::Fig3,
        columns: vec!["p", "chi", "analytic_negativity", "empirical_max"],
        rows,
    })
}

/// The four qubit-pair spectra families swept in the certification figure.
pub fn qubit_spectrum_families() -> Vec<(&'static str, fn(f64) -> [f64; 4])> {
    vec![
        ("blue", |p| [1.0 - p / 2.0, p / 6.0, p / 6.0, p / 6.0]),
        ("red", |p| {
            [(1.0 - p) / 2.0, (1.0 - p) / 2.0, p / 2.0, p / 2.0]
        }),
        ("green", |p| {
            [1.0 - 19.0 * p / 30.0, p / 3.0, p / 5.0, p / 10.0]
        }),
        ("yellow", |p| {
            [1.0 - 13.0 * p / 15.0, p / 3.0, p / 3.0, p / 5.0]
        }),
    ]
}

fn fig4(params: &FigureParams) -> Result<FigureTable> {
    let dims = BipartiteDims::new(2, 2)?;
    let grid = noise_grid(params.grid_points);
    let mut rows = Vec::new();
    for (fi, (name, family)) in qubit_spectrum_families().into_iter().enumerate() {
        for (i, &p) in grid.iter().enumerate() {
            let spectrum = Spectrum::new(family(p).to_vec(), dims)?;
            let bound = crate::criteria::max_gamma_negfs(&spectrum)?.gamma_max;
            let cfg = SweepConfig {
                dims,
                grid: grid.clone(),
                n_unitaries: params.samples,
                base_seed: params.seed
                    + ((fi * grid.len() + i) * params.samples) as u64,
                measure: SweepMeasure::Negativity,
            };
            let empirical = empirical_max(&spectrum, &cfg)?.max_value;
            rows.push(vec![
                Cell::Real(p),
                Cell::Text(name.to_string()),
                Cell::Real(bound),
                Cell::Real(empirical),
            ]);
        }
    }
    Ok(FigureTable {
        figure: FigureId::Fig4,
        columns: vec!["p", "family", "gamma_bound", "empirical_max"],
        rows,
    })
}

fn fig5() -> Result<FigureTable> {
    let n = 6usize;
    let mut rows = Vec::new();
    for k in 1..n {
        let cap = (n - k) as f64 / n as f64;
        for i in 0..200 {
            let mk = cap * i as f64 / 199.0;
            let bound = negativity_bound_from_mk(mk, k, n)?;
            let sn_floor = sn_floor_from_negativity(bound)?;
            rows.push(vec![
                Cell::Int(k as i64),
                Cell::Real(mk),
                Cell::Real(bound),
                Cell::Int(sn_floor as i64),
            ]);
        }
    }
    Ok(FigureTable {
        figure: FigureId::Fig5,
        columns: vec!["k", "m_k", "negativity_bound", "sn_floor"],
        rows,
    })
}

fn fig_a(params: &FigureParams, which: FigureId) -> Result<FigureTable> {
    let dims = BipartiteDims::new(6, 6)?;
    let grid = noise_grid(params.grid_points);
    // FigA1 varies the pure-part rank at kappa = 1; FigA2 varies kappa at
    // full rank.
    let branches: Vec<(usize, usize)> = match which {
        FigureId::FigA1 => (2..=6).map(|chi| (chi, 1)).collect(),
        FigureId::FigA2 => (1..=5).map(|kappa| (6, kappa)).collect(),
        _ => unreachable!("fig_a handles the appendix figures only"),
    };
    let mut rows = Vec::new();
    for (bi, &(chi, kappa)) in branches.iter().enumerate() {
        let a = SchmidtVector::uniform(chi)?;
        for (i, &p) in grid.iter().enumerate() {
            let spectrum = Spectrum::pseudo_pure(dims, p)?;
            let alpha = alpha_from_noise(p, dims);
            let analytic = pps_reduction_negativity_analytic(&a, dims, kappa, alpha)?;
            let cfg = SweepConfig {
                dims,
                grid: grid.clone(),
                n_unitaries: params.samples,
                base_seed: params.seed
                    + ((bi * grid.len() + i) * params.samples) as u64,
                measure: SweepMeasure::ReductionNegativity { kappa },
            };
            let empirical = empirical_max(&spectrum, &cfg)?.max_value;
            let branch = match which {
                FigureId::FigA1 => chi,
                _ => kappa,
            };
            rows.push(vec![
                Cell::Real(p),
                Cell::Int(branch as i64),
                Cell::Real(analytic),
                Cell::Real(empirical),
            ]);
        }
    }
    Ok(FigureTable {
        figure: which,
        columns: match which {
            FigureId::FigA1 => vec!["p", "chi", "analytic_reduction_negativity", "empirical_max"],
            _ => vec!["p", "kappa", "analytic_reduction_negativity", "empirical_max"],
        },
        rows,
    })
}

/// Manifest written next to each figure CSV.
#[derive(Debug, Clone, Serialize)]
pub struct FigureManifest {
    pub figure: FigureId,
    pub params: FigureParams,
    pub columns: Vec<String>,
    pub rows: usize,
    pub git_describe: String,
}

fn git_describe() -> String {
    std::process::Command::new("git")
        .args(["describe", "--always", "--dirty"])
        .output()
        .ok()
        .filter(|o| o.status.success())
        .map(|o| String::from_utf8_lossy(&o.stdout).trim().to_string())
        .unwrap_or_else(|| "unknown".to_string())
}

/// Writes the CSV and a JSON manifest (`<path>.manifest.json`).
pub fn write_figure(table: &FigureTable, params: &FigureParams, path: &Path) -> Result<FigureManifest> {
    let mut f = std::fs::File::create(path)?;
    f.write_all(table.to_csv().as_bytes())?;
    let manifest = FigureManifest {
        figure: table.figure,
        params: *params,
        columns: table.columns.iter().map(|c| c.to_string()).collect(),
        rows: table.rows.len(),
        git_describe: git_describe(),
    };
    let mpath = path.with_extension("manifest.json");
    let mut mf = std::fs::File::create(mpath)?;
    mf.write_all(serde_json::to_string_pretty(&manifest)?.as_bytes())?;
    mf.write_all(b"\n")?;
    Ok(manifest)
}

/// Where a noise estimate came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NoiseSource {
    Fidelity,
    Purity,
}

/// Estimated depolarizing parameter.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct NoiseEstimate {
    pub p_hat: f64,
    pub source: NoiseSource,
}

/// Fidelity of a pseudo-pure state against its pure part:
/// `F = (1 - p) + p/d`.
pub fn fidelity_from_noise(p: f64, dims: BipartiteDims) -> f64 {
    (1.0 - p) + p / dims.total() as f64
}

/// Inverts the fidelity relation: `p = d (1 - F) / (d - 1)`.
pub fn noise_from_fidelity(f: f64, dims: BipartiteDims) -> Result<NoiseEstimate> {
    let d = dims.total() as f64;
    if !(1.0 / d..=1.0 + 1e-12).contains(&f) {
        return Err(Error::OutOfRange(format!(
            "fidelity {f} outside [1/{d}, 1]"
        )));
    }
    Ok(NoiseEstimate {
        p_hat: (d * (1.0 - f) / (d - 1.0)).clamp(0.0, 1.0),
        source: NoiseSource::Fidelity,
    })
}

/// Purity of a pseudo-pure state: `1/d + (1 - 1/d)(1 - p)^2`, strictly
/// decreasing in `p` on `[0, 1]`.
pub fn purity_from_noise(p: f64, dims: BipartiteDims) -> f64 {
    let inv_d = 1.0 / dims.total() as f64;
    inv_d + (1.0 - inv_d) * (1.0 - p) * (1.0 - p)
}

/// Inverts the purity relation; the in-range root of the quadratic is
/// `p = 1 - sqrt((purity - 1/d) / (1 - 1/d))`.
pub fn noise_from_purity(purity: f64, dims: BipartiteDims) -> Result<NoiseEstimate> {
    let d = dims.total() as f64;
    if !(1.0 / d..=1.0 + 1e-12).contains(&purity) {
        return Err(Error::OutOfRange(format!(
            "purity {purity} outside [1/{d}, 1]"
        )));
    }
    let ratio = ((purity - 1.0 / d) / (1.0 - 1.0 / d)).max(0.0);
    Ok(NoiseEstimate {
        p_hat: (1.0 - ratio.sqrt()).clamp(0.0, 1.0),
        source: NoiseSource::Purity,
    })
}

/// Mean and standard error of `Tr(rho sigma)` over Haar-random pure-state
/// pairs sharing the depolarizing parameter `p`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct OverlapSummary {
    pub mean: f64,
    pub std_error: f64,
    pub n_pairs: usize,
}

/// The expectation is `1/d` independent of `p`, so this estimator carries no
/// information about the noise parameter.
pub fn pairwise_overlap_check(
    dims: BipartiteDims,
    p: f64,
    n_pairs: usize,
    seed: u64,
) -> Result<OverlapSummary> {
    if n_pairs < 100 {
        return Err(Error::OutOfRange(
            "need at least 100 pairs for a stable mean".into(),
        ));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::OutOfRange(format!("noise parameter p = {p}")));
    }
    let d = dims.total();
    let df = d as f64;
    let values: Vec<f64> = (0..n_pairs as u64)
        .into_par_iter()
        .map(|i| {
            // Two independent Haar states from columns of independent
            // Haar unitaries.
            let u = haar_unitary(d, seed + 2 * i);
            let v = haar_unitary(d, seed + 2 * i + 1);
            let mut inner = num_complex::Complex64::new(0.0, 0.0);
            for r in 0..d {
                inner += u.as_matrix()[(r, 0)].conj() * v.as_matrix()[(r, 0)];
            }
            let overlap = inner.norm_sqr();
            (1.0 - p) * (1.0 - p) * overlap
                + 2.0 * p * (1.0 - p) / df
                + p * p / df
        })
        .collect();
    let mean: f64 = values.iter().sum::<f64>() / n_pairs as f64;
    let var: f64 = values
        .iter()
        .map(|v| (v - mean) * (v - mean))
        .sum::<f64>()
        / (n_pairs as f64 - 1.0);
    Ok(OverlapSummary {
        mean,
        std_error: (var / n_pairs as f64).sqrt(),
        n_pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn dims(n: usize, m: usize) -> BipartiteDims {
        BipartiteDims::new(n, m).unwrap()
    }

    fn small_params() -> FigureParams {
        FigureParams {
            samples: 40,
            seed: 7,
            grid_points: 5,
        }
    }

    #[test]
    fn mms_sweep_is_exactly_zero() {
        let d = dims(2, 3);
        let mms = Spectrum::maximally_mixed(d);
        for measure in [
            SweepMeasure::Negativity,
            SweepMeasure::ReductionNegativity { kappa: 1 },
        ] {
            let cfg = SweepConfig {
                dims: d,
                grid: vec![],
                n_unitaries: 50,
                base_seed: 0,
                measure,
            };
            let s = empirical_max(&mms, &cfg).unwrap();
            assert_eq!(s.max_value, 0.0);
            assert_eq!(s.min, 0.0);
        }
        // The rearrangement trace is constant on the maximally mixed state.
        let a = SchmidtVector::uniform(2).unwrap();
        let cfg = SweepConfig {
            dims: d,
            grid: vec![],
            n_unitaries: 50,
            base_seed: 0,
            measure: SweepMeasure::Rearrangement { kappa: 1, schmidt: a },
        };
        let s = empirical_max(&mms, &cfg).unwrap();
        let expect = (3.0 - 1.0) / 6.0;
        assert_abs_diff_eq!(s.max_value, expect, epsilon = 1e-10);
        assert_abs_diff_eq!(s.min, expect, epsilon = 1e-10);
    }

    #[test]
    fn pure_qubit_spectrum_caps_at_half() {
        let d = dims(2, 2);
        let pure = Spectrum::pure(d);
        let cfg = SweepConfig {
            dims: d,
            grid: vec![],
            n_unitaries: 1000,
            base_seed: 3,
            measure: SweepMeasure::Negativity,
        };
        let s = empirical_max(&pure, &cfg).unwrap();
        assert!(s.max_value <= 0.5 + 1e-12);
        assert!(s.max_value > 0.4, "1000 samples should approach the cap");
    }

    #[test]
    fn figure_tables_deterministic_and_dominated() {
        let params = small_params();
        for fig in [FigureId::Fig3, FigureId::Fig4, FigureId::FigA2] {
            let t1 = figure_data(fig, &params).unwrap();
            let t2 = figure_data(fig, &params).unwrap();
            assert_eq!(t1.to_csv(), t2.to_csv(), "{fig:?} not reproducible");
        }

        // Fig4 bound dominance is row-wise (the bound is global for the
        // spectrum).
        let t = figure_data(FigureId::Fig4, &params).unwrap();
        for row in &t.rows {
            let (bound, emp) = match (&row[2], &row[3]) {
                (Cell::Real(b), Cell::Real(e)) => (*b, *e),
                _ => panic!("unexpected cell types"),
            };
            assert!(emp <= bound + 1e-9, "empirical {emp} above bound {bound}");
        }

        // Fig3: p = 1 rows are exactly zero analytically.
        let t3 = figure_data(FigureId::Fig3, &params).unwrap();
        for row in &t3.rows {
            if let (Cell::Real(p), Cell::Real(analytic)) = (&row[0], &row[2]) {
                if *p == 1.0 {
                    assert_eq!(*analytic, 0.0);
                }
            }
        }
        // Fig3: per-p dominance against the best rank branch.
        let mut by_p: std::collections::BTreeMap<u64, (f64, f64)> = Default::default();
        for row in &t3.rows {
            if let (Cell::Real(p), Cell::Real(analytic), Cell::Real(emp)) =
                (&row[0], &row[2], &row[3])
            {
                let key = p.to_bits();
                let entry = by_p.entry(key).or_insert((0.0, *emp));
                entry.0 = entry.0.max(*analytic);
            }
        }
        for (_, (envelope, emp)) in by_p {
            assert!(emp <= envelope + 1e-9);
        }
    }

    #[test]
    fn fig5_bounds_and_thresholds() {
        let t = figure_data(FigureId::Fig5, &FigureParams::default()).unwrap();
        assert_eq!(t.rows.len(), 5 * 200);
        for row in &t.rows {
            if let (Cell::Int(k), Cell::Real(bound)) = (&row[0], &row[2]) {
                assert!(*bound >= (*k as f64 - 1.0) / 2.0 - 1e-12);
                assert!(*bound <= 2.5 + 1e-12);
            }
        }
    }

    #[test]
    fn noise_round_trips() {
        for d in [dims(2, 2), dims(6, 6)] {
            for i in 0..=10 {
                let p = i as f64 / 10.0;
                let f = fidelity_from_noise(p, d);
                let est = noise_from_fidelity(f, d).unwrap();
                assert_abs_diff_eq!(est.p_hat, p, epsilon = 1e-12);
                let pu = purity_from_noise(p, d);
                let est = noise_from_purity(pu, d).unwrap();
                assert_abs_diff_eq!(est.p_hat, p, epsilon = 1e-10);
            }
        }
        let d = dims(2, 2);
        assert_eq!(noise_from_fidelity(1.0, d).unwrap().p_hat, 0.0);
        assert_eq!(noise_from_fidelity(0.25, d).unwrap().p_hat, 1.0);
        assert_abs_diff_eq!(
            noise_from_fidelity(0.7, d).unwrap().p_hat,
            0.4,
            epsilon = 1e-12
        );
        assert!(noise_from_fidelity(0.1, d).is_err());
        assert_eq!(noise_from_purity(1.0, d).unwrap().p_hat, 0.0);
        assert_eq!(noise_from_purity(0.25, d).unwrap().p_hat, 1.0);
        assert!(noise_from_purity(1.2, d).is_err());
    }

    #[test]
    fn overlap_mean_is_dimension_inverse() {
        let d = dims(2, 2);
        let s = pairwise_overlap_check(d, 0.3, 400, 11).unwrap();
        assert!((s.mean - 0.25).abs() <= 3.0 * s.std_error.max(1e-6));
        // p = 1 has zero variance: every pair is the MMS pair.
        let s = pairwise_overlap_check(d, 1.0, 100, 0).unwrap();
        assert_abs_diff_eq!(s.mean, 0.25, epsilon = 1e-15);
        assert_eq!(s.std_error, 0.0);
        assert!(pairwise_overlap_check(d, 0.5, 10, 0).is_err());
    }
}
