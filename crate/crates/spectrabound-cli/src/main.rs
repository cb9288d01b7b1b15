//! Command-line surface for spectrum-only entanglement certification.
//!
//! Exit codes: 0 when a criterion is satisfied (or the command only produces
//! data), 1 when a criterion evaluated cleanly but is not satisfied, 2 on
//! input errors. Stdout carries machine-readable JSON; diagnostics go to
//! stderr.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use spectrabound::criteria::{
    certify_negfs, certify_snfs, max_gamma_negfs, witness_spectral_bounds, SnfsTechnique,
};
use spectrabound::experiments::{figure_data, write_figure, FigureId, FigureParams};
use spectrabound::linalg::alpha_from_noise;
use spectrabound::negativity::{
    certify_negredfs, max_pps_negativity_for_rank, pps_reduction_negativity_analytic,
};
use spectrabound::pred_spectrum::{
    certify_predfs, structured_direct_deviation, xi_spectrum_structured, SearchBudget,
};
use spectrabound::{BipartiteDims, SchmidtVector, Spectrum};

#[derive(Parser)]
#[command(
    name = "spectrabound",
    about = "Certify and bound bipartite entanglement from eigenvalue spectra",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MeasureArg {
    /// Negativity threshold certification.
    Negativity,
    /// Schmidt-number certification.
    Sn,
    /// Positive reduction from spectrum.
    Predfs,
    /// Reduction-map negativity threshold certification.
    Negred,
}

#[derive(Clone, Copy, ValueEnum)]
enum TechniqueArg {
    Robustness,
    General,
    Conjecture,
    Negativity,
    Reduction,
}

impl From<TechniqueArg> for SnfsTechnique {
    fn from(t: TechniqueArg) -> Self {
        match t {
            TechniqueArg::Robustness => SnfsTechnique::Robustness,
            TechniqueArg::General => SnfsTechnique::General,
            TechniqueArg::Conjecture => SnfsTechnique::Conjecture,
            TechniqueArg::Negativity => SnfsTechnique::Negativity,
            TechniqueArg::Reduction => SnfsTechnique::Reduction,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a spectral criterion on a spectrum file.
    Certify {
        /// JSON spectrum file {"n": N, "m": M, "values": [...]}.
        #[arg(long)]
        spectrum: PathBuf,
        #[arg(long, value_enum)]
        measure: MeasureArg,
        /// Threshold for negativity-type measures.
        #[arg(long)]
        gamma: Option<f64>,
        /// Schmidt rank for sn/negred.
        #[arg(long)]
        chi: Option<usize>,
        /// Map parameter for predfs/negred.
        #[arg(long)]
        kappa: Option<usize>,
        /// Alpha catalog row for sn (defaults to the dimension-generic one).
        #[arg(long, value_enum)]
        technique: Option<TechniqueArg>,
        /// Search starts for predfs falsification.
        #[arg(long, default_value_t = 64)]
        starts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Tightest certifiable negativity threshold for a spectrum file.
    MaxGamma {
        #[arg(long)]
        spectrum: PathBuf,
    },
    /// Closed-form values for a uniform-rank pseudo-pure state.
    Pps {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        chi: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 1)]
        kappa: usize,
    },
    /// Regenerate a figure data set (CSV plus JSON manifest).
    Figure {
        /// One of fig3, fig4, fig5, figA1, figA2.
        #[arg(long)]
        figure: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 41)]
        grid_points: usize,
    },
    /// Spectral bounds a Schmidt-number witness candidate must satisfy.
    Witness {
        /// JSON matrix file {"dim": d, "entries": [[re, im], ...]}.
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        chi: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Structured spectrum of the one-sided reduction of a pure state.
    PredSpectrum {
        /// Comma-separated Schmidt coefficients (normalized internally).
        #[arg(long)]
        schmidt: String,
        #[arg(long)]
        kappa: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
}

enum Outcome {
    Satisfied(serde_json::Value),
    NotSatisfied(serde_json::Value),
}

fn init_thread_pool() {
    if let Ok(v) = std::env::var("SPECTRABOUND_THREADS") {
        if let Ok(k) = v.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build_global();
        }
    }
}

fn missing(flag: &str, measure: &str) -> anyhow::Error {
    anyhow::anyhow!("--{flag} is required for --measure {measure}")
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    match cli.command {
        Command::Certify {
            spectrum,
            measure,
            gamma,
            chi,
            kappa,
            technique,
            starts,
            seed,
        } => {
            let s = spectrabound::io::read_spectrum(&spectrum)?;
            let verdict = match measure {
                MeasureArg::Negativity => {
                    let g = gamma.ok_or_else(|| missing("gamma", "negativity"))?;
                    certify_negfs(&s, g)?
                }
                MeasureArg::Sn => {
                    let c = chi.ok_or_else(|| missing("chi", "sn"))?;
                    let t = technique.unwrap_or(TechniqueArg::General);
                    certify_snfs(&s, c, t.into())?
                }
                MeasureArg::Predfs => {
                    let k = kappa.ok_or_else(|| missing("kappa", "predfs"))?;
                    let budget = SearchBudget {
                        starts,
                        seed,
                        ..SearchBudget::default()
                    };
                    certify_predfs(&s, k, &budget)?
                }
                MeasureArg::Negred => {
                    let g = gamma.ok_or_else(|| missing("gamma", "negred"))?;
                    let c = chi.ok_or_else(|| missing("chi", "negred"))?;
                    let k = kappa.ok_or_else(|| missing("kappa", "negred"))?;
                    certify_negredfs(&s, k, c, g)?
                }
            };
            let satisfied = verdict.satisfied;
            let payload = serde_json::to_value(&verdict)?;
            Ok(if satisfied {
                Outcome::Satisfied(payload)
            } else {
                Outcome::NotSatisfied(payload)
            })
        }
        Command::MaxGamma { spectrum } => {
            let s = spectrabound::io::read_spectrum(&spectrum)?;
            let mg = max_gamma_negfs(&s)?;
            Ok(Outcome::Satisfied(serde_json::to_value(mg)?))
        }
        Command::Pps { n, m, chi, p, kappa } => {
            let dims = BipartiteDims::new(n, m)?;
            if chi < 1 || chi > n {
                anyhow::bail!("chi must be in [1, {n}]");
            }
            let alpha = alpha_from_noise(p, dims);
            let a = SchmidtVector::uniform(chi)?;
            let neg = max_pps_negativity_for_rank(chi, dims, alpha)?;
            let red = pps_reduction_negativity_analytic(&a, dims, kappa, alpha)?;
            let spectrum = Spectrum::pseudo_pure(dims, p)?;
            let mg = max_gamma_negfs(&spectrum)?;
            Ok(Outcome::Satisfied(json!({
                "n": n,
                "m": m,
                "chi": chi,
                "p": p,
                "kappa": kappa,
                "alpha": if alpha.is_finite() { Some(alpha) } else { None },
                "negativity": neg,
                "reduction_negativity": red,
                "max_gamma": mg,
            })))
        }
        Command::Figure {
            figure,
            out,
            samples,
            seed,
            grid_points,
        } => {
            let id = FigureId::parse(&figure)
                .ok_or_else(|| anyhow::anyhow!("unknown figure id '{figure}'"))?;
            let params = FigureParams {
                samples,
                seed,
                grid_points,
            };
            let table = figure_data(id, &params)?;
            let manifest = write_figure(&table, &params, &out)?;
            Ok(Outcome::Satisfied(json!({
                "figure": id,
                "rows": table.rows.len(),
                "csv": out,
                "manifest": out.with_extension("manifest.json"),
                "git_describe": manifest.git_describe,
            })))
        }
        Command::Witness { matrix, chi, n, m } => {
            let dims = BipartiteDims::new(n, m)?;
            let w = spectrabound::io::read_hermitian(&matrix)?;
            let bounds = witness_spectral_bounds(&w, chi, &dims)?;
            let ok = bounds.min_ok && bounds.max_ok;
            let payload = serde_json::to_value(bounds)?;
            Ok(if ok {
                Outcome::Satisfied(payload)
            } else {
                Outcome::NotSatisfied(payload)
            })
        }
        Command::PredSpectrum { schmidt, kappa, n, m } => {
            let dims = BipartiteDims::new(n, m)?;
            let raw: Vec<f64> = schmidt
                .split(',')
                .map(|t| t.trim().parse::<f64>())
                .collect::<Result<_, _>>()
                .map_err(|e| anyhow::anyhow!("bad Schmidt coefficient: {e}"))?;
            let a = SchmidtVector::from_unnormalized(&raw)?;
            let st = xi_spectrum_structured(&a, kappa, dims)?;
            let deviation = structured_direct_deviation(&a, kappa, dims)?;
            Ok(Outcome::Satisfied(json!({
                "structured": st,
                "max_deviation": deviation,
            })))
        }
    }
}

fn main() -> ExitCode {
    init_thread_pool();
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Satisfied(payload)) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&payload).expect("serializable")
            );
            ExitCode::SUCCESS
        }
        Ok(Outcome::NotSatisfied(payload)) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&payload).expect("serializable")
            );
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
