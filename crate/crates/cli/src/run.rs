//! Single-scenario reports and `(eps, beta_u)` sweeps.

use std::fmt::Write as _;

use rayon::prelude::*;

use lightframe_core::{
    rise_intervals, to_dimensionless, total_times, total_times_pre_emission, Beta,
    DimensionlessParams, Epsilon, PhysicalInputs, ScenarioResult,
};

use crate::config::{PhotonEnergy, ScenarioConfig, ScenarioInputs};
use crate::error::CliError;

const CSV_COLUMNS: [&str; 8] = [
    "eps_lab",
    "eps_pre",
    "beta_u",
    "dt_A",
    "dt_S",
    "dt_Sprime",
    "contraction_ratio",
    "correction_factor",
];

/// Header line of every CSV document, without the trailing newline.
pub fn csv_header() -> String {
    CSV_COLUMNS.join(",")
}

/// 17 significant digits in scientific notation, enough to recover any `f64`
/// exactly. Locale-independent.
pub fn format_number(v: f64) -> String {
    format!("{v:.16e}")
}

fn csv_row(r: &ScenarioResult) -> String {
    [
        r.eps_lab.value(),
        r.eps_pre.value(),
        r.beta_u.value(),
        r.dt_a,
        r.dt_s,
        r.dt_sprime,
        r.contraction_ratio,
        r.correction_factor,
    ]
    .map(format_number)
    .join(",")
}

/// A scenario reduced to dimensionless numbers, before domain validation.
#[derive(Debug, Clone, Copy)]
struct Resolved {
    photon: PhotonEnergy,
    beta_u: f64,
    tau_hat: f64,
}

impl Resolved {
    fn from_config(config: &ScenarioConfig) -> Result<Self, lightframe_core::Error> {
        match config.inputs {
            ScenarioInputs::Dimensionless { photon, tau_hat } => Ok(Resolved {
                photon,
                beta_u: config.beta_u,
                tau_hat,
            }),
            ScenarioInputs::Si {
                mass_amu,
                photon_energy_ev,
                lifetime_s,
                plate_separation_m,
            } => {
                let params = to_dimensionless(&PhysicalInputs {
                    plate_rest_mass: mass_amu,
                    photon_energy: photon_energy_ev,
                    plate_separation: plate_separation_m,
                    boost_speed_fraction: config.beta_u,
                    lifetime: lifetime_s,
                })?;
                Ok(Resolved {
                    photon: PhotonEnergy::Lab(params.eps_lab.value()),
                    beta_u: config.beta_u,
                    tau_hat: params.tau_hat,
                })
            }
        }
    }

    fn with_point(self, eps: f64, beta_u: f64) -> Self {
        let photon = match self.photon {
            PhotonEnergy::Lab(_) => PhotonEnergy::Lab(eps),
            PhotonEnergy::PreEmission(_) => PhotonEnergy::PreEmission(eps),
        };
        Resolved {
            photon,
            beta_u,
            tau_hat: self.tau_hat,
        }
    }

    fn evaluate(&self) -> Result<ScenarioResult, lightframe_core::Error> {
        match self.photon {
            PhotonEnergy::Lab(eps_lab) => total_times(&DimensionlessParams::new(
                eps_lab,
                self.beta_u,
                self.tau_hat,
            )?),
            PhotonEnergy::PreEmission(eps) => total_times_pre_emission(
                Epsilon::pre_emission(eps)?,
                Beta::new(self.beta_u)?,
                self.tau_hat,
            ),
        }
    }
}

/// Output of `run`: a human-readable report and the matching CSV row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingleRun {
    pub report: String,
    pub csv_row: String,
}

impl SingleRun {
    /// Header plus row, LF-terminated.
    pub fn csv_document(&self) -> String {
        format!("{}\n{}\n", csv_header(), self.csv_row)
    }
}

pub fn run_single(config: &ScenarioConfig) -> Result<SingleRun, CliError> {
    let result = Resolved::from_config(config)?.evaluate()?;
    let rise = rise_intervals(result.eps_pre, result.beta_u)?;
    let gamma_u = result.beta_u.gamma();

    let mut report = String::new();
    report.push_str("# lightweight-frame scenario\n");
    report.push_str("# configuration\n");
    report.push_str(&config.to_config_text());
    report.push_str("# results\n");
    let mut line = |name: &str, v: f64, note: &str| {
        let _ = writeln!(report, "{name:<28} {:>24}   {note}", format_number(v));
    };
    line(
        "eps_lab",
        result.eps_lab.value(),
        "photon energy / plate rest energy, plate frame",
    );
    line(
        "eps_pre",
        result.eps_pre.value(),
        "photon energy / plate rest energy, frame A",
    );
    line("beta_u", result.beta_u.value(), "plate speed relative to S");
    line("tau_hat", result.tau_hat, "mirror dwell time [L/c]");
    line("rise_dt_Sprime", rise.in_sprime.dt, "rise time in S' [L/c]");
    line("rise_dt_S", rise.in_s.dt, "rise time in S [L/c]");
    line(
        "rise_dilation_factor",
        rise.dilation_factor(),
        "gamma_u*sqrt(1-2*eps_pre)",
    );
    line("dt_A", result.dt_a, "emission to reabsorption in A [L/c]");
    line("dt_S", result.dt_s, "emission to reabsorption in S [L/c]");
    line(
        "dt_Sprime",
        result.dt_sprime,
        "emission to reabsorption in S' [L/c]",
    );
    line("rigid_baseline", result.rigid_baseline(), "dt_S/gamma_u");
    line(
        "measured_ratio",
        result.dt_sprime * gamma_u / result.dt_s,
        "dt_Sprime*gamma_u/dt_S",
    );
    line(
        "contraction_ratio",
        result.contraction_ratio,
        "sqrt(1-2*eps_pre)/(1-eps_pre)",
    );
    line(
        "correction_factor",
        result.correction_factor,
        "1/sqrt(1+eps_lab^2)",
    );
    line(
        "correction_factor_minus_one",
        result.correction_offset(),
        "resolved below f64 spacing near 1",
    );

    Ok(SingleRun {
        report,
        csv_row: csv_row(&result),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Linear,
    Log,
}

/// Grid over the base configuration's photon-energy parameter (`eps_lab`, or
/// `eps_pre` when the base uses it) crossed with a list of boost speeds.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub eps_min: f64,
    pub eps_max: f64,
    pub eps_steps: usize,
    pub beta_values: Vec<f64>,
    pub scale: Scale,
}

impl SweepSpec {
    fn validate(&self, photon: PhotonEnergy) -> Result<(), CliError> {
        let usage = |m: String| Err(CliError::Usage(m));
        if !(self.eps_min >= 0.0 && self.eps_max.is_finite()) {
            return usage(format!(
                "eps range [{}, {}] must be finite and non-negative",
                self.eps_min, self.eps_max
            ));
        }
        if self.eps_max < self.eps_min {
            return usage(format!(
                "eps_max {} is below eps_min {}",
                self.eps_max, self.eps_min
            ));
        }
        if matches!(photon, PhotonEnergy::PreEmission(_)) && self.eps_max >= 0.5 {
            return usage(format!(
                "eps_pre sweep must stay below 1/2, got eps_max {}",
                self.eps_max
            ));
        }
        if self.eps_min != self.eps_max && self.eps_steps < 2 {
            return usage(format!(
                "eps_steps must be at least 2, got {}",
                self.eps_steps
            ));
        }
        if self.scale == Scale::Log && self.eps_min <= 0.0 {
            return usage("log scale requires eps_min > 0".into());
        }
        if self.beta_values.is_empty() {
            return usage("at least one beta value is required".into());
        }
        Ok(())
    }

    /// Photon-energy grid, endpoints included exactly. A zero-width range
    /// collapses to a single point.
    pub fn eps_grid(&self) -> Vec<f64> {
        if self.eps_min == self.eps_max {
            return vec![self.eps_min];
        }
        let n = self.eps_steps;
        let last = (n - 1) as f64;
        (0..n)
            .map(|i| {
                if i == 0 {
                    self.eps_min
                } else if i == n - 1 {
                    self.eps_max
                } else {
                    let t = i as f64 / last;
                    match self.scale {
                        Scale::Linear => self.eps_min + (self.eps_max - self.eps_min) * t,
                        Scale::Log => {
                            let (lo, hi) = (self.eps_min.ln(), self.eps_max.ln());
                            (lo + (hi - lo) * t).exp()
                        }
                    }
                }
            })
            .collect()
    }
}

/// Runs every grid point and returns the CSV document, rows ordered by eps
/// then by position in `beta_values`. Points are evaluated in parallel; the
/// output does not depend on scheduling.
pub fn run_sweep(spec: &SweepSpec, base: &ScenarioConfig) -> Result<String, CliError> {
    let resolved = Resolved::from_config(base)?;
    spec.validate(resolved.photon)?;

    let points: Vec<(f64, f64)> = spec
        .eps_grid()
        .into_iter()
        .flat_map(|eps| spec.beta_values.iter().map(move |&b| (eps, b)))
        .collect();
    let rows: Vec<Result<String, CliError>> = points
        .par_iter()
        .map(|&(eps, beta_u)| {
            resolved
                .with_point(eps, beta_u)
                .evaluate()
                .map(|r| csv_row(&r))
                .map_err(|source| CliError::SweepRow {
                    eps,
                    beta_u,
                    source,
                })
        })
        .collect();

    let mut out = csv_header();
    out.push('\n');
    for row in rows {
        out.push_str(&row?);
        out.push('\n');
    }
    Ok(out)
}
