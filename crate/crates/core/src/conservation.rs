//! Energy–momentum conservation for a photon exchanged with a finite-mass plate.
//!
//! All energies are in units of the plate's initial rest energy `Mc^2` and all
//! momenta in units of `Mc`. Every event is solved in the frame where the plate
//! is initially at rest (frame `A`), except mirror reflection, which is solved in
//! the frame where the mirror moves at `beta` along the photon's direction.

use crate::error::Result;
use crate::frames::{Beta, Epsilon, Incident, LabDefined, PreEmission};

/// State of a plate after emitting or absorbing a photon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecoilSolution {
    /// Recoil speed, always non-negative. For emission the plate moves away
    /// from the photon, for absorption along with it.
    pub beta_recoil: Beta,
    /// Final over initial rest mass.
    pub mass_ratio: f64,
}

/// Outcome of a head-on reflection from a mirror of rest mass `M`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MirrorReflection {
    /// `nu_r / nu_i`
    pub freq_ratio: f64,
    /// Finite-mass correction to the classical moving-mirror formula, in `(0, 1]`.
    pub gamma_factor_big: f64,
    /// Mirror velocity after reflection, along the incident photon's direction.
    pub beta_after: Beta,
}

/// Emission from a plate at rest: `beta = eps/(1 - eps)`, `M'/M = sqrt(1 - 2 eps)`.
///
/// Close to `eps = 1/2` the mass ratio becomes tiny but stays meaningful.
pub fn emission_recoil(eps: Epsilon<PreEmission>) -> RecoilSolution {
    let e = eps.value();
    RecoilSolution {
        beta_recoil: recoil_beta(e / (1.0 - e)),
        mass_ratio: (1.0 - 2.0 * e).sqrt(),
    }
}

/// Absorption by a plate at rest: `beta = eps/(1 + eps)`, `M'/M = sqrt(1 + 2 eps)`.
pub fn absorption_recoil(eps: Epsilon<PreEmission>) -> RecoilSolution {
    let e = eps.value();
    RecoilSolution {
        beta_recoil: recoil_beta(e / (1.0 + e)),
        mass_ratio: (1.0 + 2.0 * e).sqrt(),
    }
}

fn recoil_beta(v: f64) -> Beta {
    // eps < 1/2 bounds v below 1 for emission; absorption is below 1/2.
    Beta::new(v).expect("recoil speed below c for admissible eps")
}

/// `nu_A / nu_S'` given the photon energy measured in the emitting plate's frame.
///
/// This is the positive root of `x^2 + 2 eps_lab x - 1 = 0`, i.e.
/// `sqrt(1 + eps_lab^2) - eps_lab`, evaluated as `1/(sqrt(1 + eps_lab^2) + eps_lab)`
/// to avoid cancellation for large `eps_lab`.
pub fn invert_frequency(eps_lab: Epsilon<LabDefined>) -> f64 {
    let e = eps_lab.value();
    1.0 / (e.hypot(1.0) + e)
}

/// Pre-emission ratio `eps = eps_lab * nu_A/nu_S'`.
///
/// Below 1/2 for every finite `eps_lab` in exact arithmetic, but `1/2 - eps`
/// shrinks like `1/(8 eps_lab^2)` and rounds away once `eps_lab` exceeds about
/// `5e7`; that case is reported as [`Error::PhotonTooEnergetic`].
pub fn pre_emission_from_lab(eps_lab: Epsilon<LabDefined>) -> Result<Epsilon<PreEmission>> {
    Epsilon::pre_emission(eps_lab.value() * invert_frequency(eps_lab))
}

/// Inverse of [`pre_emission_from_lab`]: `eps_lab = eps / sqrt(1 - 2 eps)`.
pub fn lab_from_pre_emission(eps: Epsilon<PreEmission>) -> Epsilon<LabDefined> {
    let e = eps.value();
    Epsilon::lab_defined(e / (1.0 - 2.0 * e).sqrt())
        .expect("eps/sqrt(1 - 2 eps) is finite and non-negative for eps < 1/2")
}

/// Reflection of a photon travelling along `+y` from a mirror moving along `+y`
/// at `beta`. The photon leaves along `-y`.
///
/// The post-reflection mirror velocity is taken from momentum conservation, so
/// the three returned values satisfy both conservation laws together.
pub fn mirror_reflection(eps_i: Epsilon<Incident>, beta: Beta) -> MirrorReflection {
    let e = eps_i.value();
    let b = beta.value();
    let doppler = ((1.0 - b) / (1.0 + b)).sqrt();
    let gamma_factor_big = 1.0 / (1.0 + 2.0 * e * doppler);
    let freq_ratio = ((1.0 - b) / (1.0 + b)) * gamma_factor_big;

    // gamma' beta' = eps_i (1 + r) + gamma beta
    let momentum = e * (1.0 + freq_ratio) + beta.gamma() * b;
    let beta_after = momentum / momentum.hypot(1.0);
    MirrorReflection {
        freq_ratio,
        gamma_factor_big,
        beta_after: Beta::new(beta_after)
            .unwrap_or_else(|_| Beta::new(beta_after.signum() * (1.0 - f64::EPSILON)).unwrap()),
    }
}

/// One of the conservation systems, with a candidate solution to check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ConservationSystem {
    /// Plate at rest emits a photon of energy `eps`.
    Emission { eps: f64, solution: RecoilSolution },
    /// Plate at rest absorbs a photon of energy `eps`.
    Absorption { eps: f64, solution: RecoilSolution },
    /// Mirror moving at `beta` reflects a photon of energy `eps_i`.
    Reflection {
        eps_i: f64,
        beta: f64,
        reflection: MirrorReflection,
    },
}

/// Signed left-minus-right sides of a conservation pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residuals {
    /// In units of `Mc^2`.
    pub energy: f64,
    /// In units of `Mc`.
    pub momentum: f64,
}

impl Residuals {
    pub fn max_abs(&self) -> f64 {
        self.energy.abs().max(self.momentum.abs())
    }
}

/// Substitutes a candidate solution back into its conservation pair.
pub fn conservation_residuals(system: &ConservationSystem) -> Residuals {
    fn gamma_of(b: f64) -> f64 {
        1.0 / ((1.0 - b) * (1.0 + b)).sqrt()
    }
    match *system {
        ConservationSystem::Emission { eps, solution } => {
            let b = solution.beta_recoil.value();
            let moving = solution.mass_ratio * gamma_of(b);
            Residuals {
                energy: 1.0 - (moving + eps),
                momentum: eps - moving * b,
            }
        }
        ConservationSystem::Absorption { eps, solution } => {
            let b = solution.beta_recoil.value();
            let moving = solution.mass_ratio * gamma_of(b);
            Residuals {
                energy: (eps + 1.0) - moving,
                momentum: eps - moving * b,
            }
        }
        ConservationSystem::Reflection {
            eps_i,
            beta,
            reflection,
        } => {
            let r = reflection.freq_ratio;
            let after = reflection.beta_after.value();
            let (g0, g1) = (gamma_of(beta), gamma_of(after));
            Residuals {
                energy: (eps_i + g0) - (g1 + eps_i * r),
                momentum: (eps_i + g0 * beta) - (g1 * after - eps_i * r),
            }
        }
    }
}
