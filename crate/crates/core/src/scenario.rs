//! The two-plate experiment: emission at the lower plate, absorption and
//! re-emission at the mirror after a dwell `tau_hat`, and reabsorption at the
//! recoiling lower plate.
//!
//! Frame `A` is where the kinematics are solved. `S'` follows the lower plate
//! after emission (recoiling along `-y`), and `S` sees both plates moving along
//! `+x` at `beta_u`.

use crate::conservation::{
    absorption_recoil, emission_recoil, lab_from_pre_emission, pre_emission_from_lab,
};
use crate::error::Result;
use crate::frames::{
    check_boost, check_tau, Beta, DimensionlessParams, Epsilon, FrameLabel, LabDefined, PreEmission,
};
use crate::lorentz::{boost_interval, BoostAxis, IntervalTriple};

/// The rise `L -> U` seen from each frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiseIntervals {
    pub in_a: IntervalTriple,
    pub in_sprime: IntervalTriple,
    pub in_s: IntervalTriple,
}

impl RiseIntervals {
    /// `dt_S / dt_S'`, which reduces the usual `gamma_u` by `sqrt(1 - 2 eps)`.
    pub fn dilation_factor(&self) -> f64 {
        self.in_s.dt / self.in_sprime.dt
    }
}

/// Photon rise from the lower plate to the mirror.
///
/// `S'` is reached from `A` by a `y` boost at `-eps/(1 - eps)`, and `S` from
/// `A` by an `x` boost at `-beta_u`.
pub fn rise_intervals(eps: Epsilon<PreEmission>, beta_u: Beta) -> Result<RiseIntervals> {
    let in_a = IntervalTriple::new(0.0, 1.0, 1.0, FrameLabel::A);
    let recoil = emission_recoil(eps).beta_recoil;
    let in_sprime = boost_interval(in_a, -recoil, BoostAxis::Y, FrameLabel::SPrime)?;
    let in_s = boost_interval(in_a, -beta_u, BoostAxis::X, FrameLabel::S)?;
    Ok(RiseIntervals {
        in_a,
        in_sprime,
        in_s,
    })
}

/// Pre-emission energy at which the recoil exactly cancels the horizontal
/// dilation of the rise, `gamma_u sqrt(1 - 2 eps) = 1`, i.e. `eps = beta_u^2 / 2`.
pub fn no_dilation_condition(beta_u: Beta) -> Epsilon<PreEmission> {
    let b = beta_u.value();
    Epsilon::pre_emission(0.5 * b * b).expect("beta^2/2 < 1/2 for |beta| < 1")
}

/// Frame-`A` time from re-emission at the mirror to reabsorption at the lower plate.
pub fn descent_time(eps: Epsilon<PreEmission>, tau_hat: f64) -> Result<f64> {
    check_tau(tau_hat)?;
    let e = eps.value();
    let shrink = 1.0 - 2.0 * e;
    Ok(1.0 / shrink + 2.0 * e * tau_hat / ((1.0 + e) * shrink))
}

/// `(1 - eps)/(1 - 2 eps)`
pub fn f_eps(eps: Epsilon<PreEmission>) -> f64 {
    let e = eps.value();
    (1.0 - e) / (1.0 - 2.0 * e)
}

/// `(1 + eps - 2 eps^2)/(1 - eps - 2 eps^2)`
pub fn g_eps(eps: Epsilon<PreEmission>) -> f64 {
    let e = eps.value();
    // (1 + 2e)(1 - e) over (1 - 2e)(1 + e), factored to avoid cancellation.
    ((1.0 + 2.0 * e) * (1.0 - e)) / ((1.0 - 2.0 * e) * (1.0 + e))
}

/// Elapsed times from emission to reabsorption in every frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScenarioResult {
    pub eps_lab: Epsilon<LabDefined>,
    pub eps_pre: Epsilon<PreEmission>,
    pub beta_u: Beta,
    pub tau_hat: f64,
    /// In `L/c`.
    pub dt_a: f64,
    pub dt_s: f64,
    pub dt_sprime: f64,
    /// `sqrt(1 - 2 eps)/(1 - eps)`, the factor multiplying `dt_S/gamma_u`.
    pub contraction_ratio: f64,
    /// `1/sqrt(1 + eps_lab^2)`, the same factor written in terms of `eps_lab`.
    pub correction_factor: f64,
    pub f_eps: f64,
    pub g_eps: f64,
}

impl ScenarioResult {
    /// `dt_S / gamma_u`: what `S'` would measure if the plates were rigid.
    pub fn rigid_baseline(&self) -> f64 {
        self.dt_s / self.beta_u.gamma()
    }

    /// `correction_factor - 1`, computed without cancellation so that it stays
    /// meaningful when `eps_lab^2` is below `f64` resolution around 1.
    pub fn correction_offset(&self) -> f64 {
        correction_offset(self.eps_lab.value())
    }

    /// `gamma_u sqrt(1 - 2 eps)`, the rise-phase dilation factor.
    pub fn rise_dilation_factor(&self) -> f64 {
        self.beta_u.gamma() * (1.0 - 2.0 * self.eps_pre.value()).sqrt()
    }
}

/// Runs the scenario from the lab-defined photon energy.
pub fn total_times(params: &DimensionlessParams) -> Result<ScenarioResult> {
    let eps_pre = pre_emission_from_lab(params.eps_lab)?;
    evaluate(params.eps_lab, eps_pre, params.beta_u, params.tau_hat)
}

/// Runs the scenario from the pre-emission photon energy, skipping the
/// frequency inversion.
pub fn total_times_pre_emission(
    eps: Epsilon<PreEmission>,
    beta_u: Beta,
    tau_hat: f64,
) -> Result<ScenarioResult> {
    check_boost(beta_u)?;
    check_tau(tau_hat)?;
    evaluate(lab_from_pre_emission(eps), eps, beta_u, tau_hat)
}

fn evaluate(
    eps_lab: Epsilon<LabDefined>,
    eps_pre: Epsilon<PreEmission>,
    beta_u: Beta,
    tau_hat: f64,
) -> Result<ScenarioResult> {
    let e = eps_pre.value();
    let f = f_eps(eps_pre);
    let g = g_eps(eps_pre);
    let dt_a = 2.0 * f + tau_hat * g;
    let dt_s = beta_u.gamma() * dt_a;
    let dt_sprime = dt_a / emission_recoil(eps_pre).beta_recoil.gamma();
    Ok(ScenarioResult {
        eps_lab,
        eps_pre,
        beta_u,
        tau_hat,
        dt_a,
        dt_s,
        dt_sprime,
        contraction_ratio: (1.0 - 2.0 * e).sqrt() / (1.0 - e),
        correction_factor: correction_factor(eps_lab),
        f_eps: f,
        g_eps: g,
    })
}

/// `1/sqrt(1 + eps_lab^2)`, correctly rounded near 1 where `hypot` would lose
/// the last bit.
fn correction_factor(eps_lab: Epsilon<LabDefined>) -> f64 {
    let e = eps_lab.value();
    if e < 1.0 {
        1.0 + correction_offset(e)
    } else {
        1.0 / e.hypot(1.0)
    }
}

fn correction_offset(e: f64) -> f64 {
    let root = e.hypot(1.0);
    -(e * e) / (root * (1.0 + root))
}

/// Straight worldline `y(t) = y0 + speed (t - t0)` in frame `A`.
#[derive(Debug, Clone, Copy)]
struct Worldline {
    t0: f64,
    y0: f64,
    speed: f64,
}

impl Worldline {
    fn at(&self, t: f64) -> f64 {
        self.y0 + self.speed * (t - self.t0)
    }

    /// Time at which the two worldlines meet.
    fn meet(&self, other: &Worldline) -> f64 {
        // y0a + va (t - t0a) = y0b + vb (t - t0b)
        let num = (other.y0 - other.speed * other.t0) - (self.y0 - self.speed * self.t0);
        num / (self.speed - other.speed)
    }
}

/// Total frame-`A` time obtained by intersecting explicit worldlines: the
/// recoiling lower plate, the mirror drifting up after absorption, and the
/// photon going up and coming back down. Independent of the `f`/`g` closed
/// forms used by [`total_times`].
pub fn trace_experiment_oracle(eps: Epsilon<PreEmission>, tau_hat: f64) -> Result<f64> {
    check_tau(tau_hat)?;
    let lower = Worldline {
        t0: 0.0,
        y0: 0.0,
        speed: -emission_recoil(eps).beta_recoil.value(),
    };
    let mirror_at_rest = Worldline {
        t0: 0.0,
        y0: 1.0,
        speed: 0.0,
    };
    let photon_up = Worldline {
        t0: 0.0,
        y0: 0.0,
        speed: 1.0,
    };

    let absorbed_at = photon_up.meet(&mirror_at_rest);
    let mirror_drift = Worldline {
        t0: absorbed_at,
        y0: mirror_at_rest.at(absorbed_at),
        speed: absorption_recoil(eps).beta_recoil.value(),
    };
    let reemitted_at = absorbed_at + tau_hat;
    let photon_down = Worldline {
        t0: reemitted_at,
        y0: mirror_drift.at(reemitted_at),
        speed: -1.0,
    };
    Ok(photon_down.meet(&lower))
}
