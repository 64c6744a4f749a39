use crate::frames::FrameLabel;

/// Failures raised by the kinematics engine.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A massive body (or a boost between frames) would reach or exceed `c`.
    #[error("speed fraction {0} is not below the speed of light")]
    SuperluminalBoost(f64),

    /// The emitting plate's rest mass would vanish or become imaginary (`eps >= 1/2`).
    #[error("photon energy ratio {0} leaves the emitting plate without rest mass (must be < 1/2)")]
    PhotonTooEnergetic(f64),

    #[error("interval expressed in frame {found}, expected frame {expected}")]
    FrameMismatch {
        expected: FrameLabel,
        found: FrameLabel,
    },
}

impl Error {
    /// Short variant name, used on the CLI's diagnostic stream.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "InvalidInput",
            Error::SuperluminalBoost(_) => "SuperluminalBoost",
            Error::PhotonTooEnergetic(_) => "PhotonTooEnergetic",
            Error::FrameMismatch { .. } => "FrameMismatch",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
