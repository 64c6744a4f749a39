//! Relativistic kinematics of a photon bouncing between two finite-mass plates.
//!
//! A photon is emitted by a lower plate, reflected by an upper mirror plate and
//! reabsorbed by the lower plate. Both plates recoil, so the "laboratory" is not
//! rigid and the usual time-contraction law between the plates' frame `S'` and
//! an external inertial frame `S` acquires a correction `1/sqrt(1 + eps_lab^2)`.
//!
//! Everything is dimensionless internally: velocities as fractions of `c`,
//! photon energies as ratios to the plate rest energy, lengths in units of the
//! plate separation `L` and times in units of `L/c`. [`frames::to_dimensionless`]
//! is the only place physical units appear.
//!
//! The crate is organised bottom-up:
//!
//! * [`frames`]: value types, Lorentz factor, unit conversion.
//! * [`lorentz`]: boosts of space-time intervals and the longitudinal Doppler map.
//! * [`conservation`]: closed-form recoil, frequency inversion and moving-mirror
//!   reflection, plus residual diagnostics.
//! * [`scenario`]: the full emission, reflection and reabsorption experiment.

pub mod conservation;
pub mod error;
pub mod frames;
pub mod lorentz;
pub mod scenario;

pub use conservation::{
    absorption_recoil, conservation_residuals, emission_recoil, invert_frequency,
    lab_from_pre_emission, mirror_reflection, pre_emission_from_lab, ConservationSystem,
    MirrorReflection, RecoilSolution, Residuals,
};
pub use error::{Error, Result};
pub use frames::{
    gamma, to_dimensionless, Beta, DimensionlessParams, Epsilon, EpsilonKind, FrameLabel, Incident,
    LabDefined, PhysicalInputs, PreEmission,
};
pub use lorentz::{
    boost_interval, compose_collinear, doppler_longitudinal, BoostAxis, IntervalTriple,
};
pub use scenario::{
    descent_time, f_eps, g_eps, no_dilation_condition, rise_intervals, total_times,
    total_times_pre_emission, trace_experiment_oracle, RiseIntervals, ScenarioResult,
};
