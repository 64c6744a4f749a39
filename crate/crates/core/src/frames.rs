//! Dimensionless value types, the Lorentz factor, and conversion from
//! physical (u, eV, m, s) inputs to the dimensionless scenario parameters.

use std::fmt;
use std::marker::PhantomData;

use crate::error::{Error, Result};

/// Rest energy of one unified atomic mass unit, in electron-volts.
pub const AMU_REST_ENERGY_EV: f64 = 931.494e6;

/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// The three frames of the two-plate model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FrameLabel {
    /// External inertial frame; the plates move along `+x` at `beta_u`.
    S,
    /// Frame of the lower (emitting) plate.
    SPrime,
    /// Auxiliary inertial frame co-moving horizontally with the plates.
    A,
}

impl fmt::Display for FrameLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FrameLabel::S => "S",
            FrameLabel::SPrime => "S'",
            FrameLabel::A => "A",
        })
    }
}

/// Velocity of a massive body as a fraction of `c`, strictly inside `(-1, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Beta(f64);

impl Beta {
    pub const ZERO: Beta = Beta(0.0);

    pub fn new(value: f64) -> Result<Self> {
        if value.is_nan() {
            return Err(Error::InvalidInput("speed fraction is NaN".into()));
        }
        if value.abs() >= 1.0 {
            return Err(Error::SuperluminalBoost(value));
        }
        Ok(Beta(value))
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    /// Lorentz factor of this speed.
    #[inline]
    pub fn gamma(self) -> f64 {
        gamma(self)
    }
}

impl std::ops::Neg for Beta {
    type Output = Beta;

    fn neg(self) -> Beta {
        Beta(-self.0)
    }
}

/// `(1 - beta^2)^(-1/2)`.
///
/// `1 - beta^2` is formed as `(1 - beta)(1 + beta)`, which keeps full relative
/// precision as `|beta| -> 1`.
pub fn gamma(beta: Beta) -> f64 {
    let b = beta.0;
    1.0 / ((1.0 - b) * (1.0 + b)).sqrt()
}

/// Which photon-energy ratio an [`Epsilon`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EpsilonKind {
    /// `h nu_A / M c^2`: energy seen from the auxiliary frame, before emission.
    PreEmission,
    /// `h nu_S' / M c^2`: energy seen from the emitting plate's own frame.
    LabDefined,
    /// `h nu_i / M c^2`: energy of a photon incident on a moving mirror.
    Incident,
}

mod sealed {
    pub trait Sealed {}
}

/// Type-level marker for an [`EpsilonKind`].
pub trait EpsilonDomain: sealed::Sealed + Copy + fmt::Debug {
    const KIND: EpsilonKind;

    fn check(value: f64) -> Result<()> {
        if value.is_nan() || value < 0.0 {
            return Err(Error::InvalidInput(format!(
                "photon energy ratio must be non-negative, got {value}"
            )));
        }
        if value.is_infinite() {
            return Err(Error::InvalidInput(
                "photon energy ratio is infinite".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PreEmission;
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabDefined;
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Incident;

impl sealed::Sealed for PreEmission {}
impl sealed::Sealed for LabDefined {}
impl sealed::Sealed for Incident {}

impl EpsilonDomain for PreEmission {
    const KIND: EpsilonKind = EpsilonKind::PreEmission;

    // eps = 0 is the infinite-mass limit and is admitted.
    fn check(value: f64) -> Result<()> {
        if value.is_nan() || value < 0.0 {
            return Err(Error::InvalidInput(format!(
                "photon energy ratio must be non-negative, got {value}"
            )));
        }
        if value >= 0.5 {
            return Err(Error::PhotonTooEnergetic(value));
        }
        Ok(())
    }
}

impl EpsilonDomain for LabDefined {
    const KIND: EpsilonKind = EpsilonKind::LabDefined;
}

impl EpsilonDomain for Incident {
    const KIND: EpsilonKind = EpsilonKind::Incident;
}

/// A photon energy expressed as a fraction of a plate's rest energy.
///
/// The marker `K` keeps the three physically distinct ratios apart at compile
/// time; mixing up `eps` and `eps_lab` is the easiest mistake in this model.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Epsilon<K: EpsilonDomain> {
    value: f64,
    _kind: PhantomData<K>,
}

impl<K: EpsilonDomain> Epsilon<K> {
    pub fn new(value: f64) -> Result<Self> {
        K::check(value)?;
        Ok(Epsilon {
            value,
            _kind: PhantomData,
        })
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.value
    }

    pub fn kind(self) -> EpsilonKind {
        K::KIND
    }
}

impl Epsilon<PreEmission> {
    pub fn pre_emission(value: f64) -> Result<Self> {
        Self::new(value)
    }

    pub const ZERO: Self = Epsilon {
        value: 0.0,
        _kind: PhantomData,
    };
}

impl Epsilon<LabDefined> {
    pub fn lab_defined(value: f64) -> Result<Self> {
        Self::new(value)
    }
}

impl Epsilon<Incident> {
    pub fn incident(value: f64) -> Result<Self> {
        Self::new(value)
    }
}

/// The scenario in pure numbers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionlessParams {
    pub eps_lab: Epsilon<LabDefined>,
    /// Horizontal speed of both plates relative to `S`, in `[0, 1)`.
    pub beta_u: Beta,
    /// Mirror dwell time in units of `L/c`, measured in frame `A`.
    pub tau_hat: f64,
}

impl DimensionlessParams {
    pub fn new(eps_lab: f64, beta_u: f64, tau_hat: f64) -> Result<Self> {
        let eps_lab = Epsilon::lab_defined(eps_lab)?;
        let beta_u = Beta::new(beta_u)?;
        check_boost(beta_u)?;
        check_tau(tau_hat)?;
        Ok(DimensionlessParams {
            eps_lab,
            beta_u,
            tau_hat,
        })
    }
}

pub(crate) fn check_boost(beta_u: Beta) -> Result<()> {
    if beta_u.value() < 0.0 {
        return Err(Error::InvalidInput(format!(
            "boost speed fraction must be non-negative, got {}",
            beta_u.value()
        )));
    }
    Ok(())
}

pub(crate) fn check_tau(tau_hat: f64) -> Result<()> {
    if !(tau_hat >= 0.0 && tau_hat.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "dwell time must be finite and non-negative, got {tau_hat}"
        )));
    }
    Ok(())
}

/// Scenario inputs in laboratory units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalInputs {
    /// Rest mass of each plate, in unified atomic mass units.
    pub plate_rest_mass: f64,
    /// Photon energy in the emitting plate's frame, in eV.
    pub photon_energy: f64,
    /// Plate separation `L`, in meters.
    pub plate_separation: f64,
    pub boost_speed_fraction: f64,
    /// Mirror dwell time, in seconds.
    pub lifetime: f64,
}

pub fn to_dimensionless(inputs: &PhysicalInputs) -> Result<DimensionlessParams> {
    let positive = |name: &str, v: f64| {
        if v > 0.0 && v.is_finite() {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!(
                "{name} must be positive, got {v}"
            )))
        }
    };
    positive("plate rest mass", inputs.plate_rest_mass)?;
    positive("photon energy", inputs.photon_energy)?;
    positive("plate separation", inputs.plate_separation)?;
    if !(inputs.lifetime >= 0.0 && inputs.lifetime.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "lifetime must be non-negative, got {}",
            inputs.lifetime
        )));
    }

    let eps_lab = inputs.photon_energy / (inputs.plate_rest_mass * AMU_REST_ENERGY_EV);
    let tau_hat = inputs.lifetime * SPEED_OF_LIGHT / inputs.plate_separation;
    DimensionlessParams::new(eps_lab, inputs.boost_speed_fraction, tau_hat)
}
