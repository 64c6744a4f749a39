//! Boosts of (x, y, t) intervals along a single axis, and the longitudinal
//! Doppler factor.
//!
//! Sign convention: `beta` is the velocity of the *target* frame along
//! `+axis`, as measured in the interval's current frame.

use crate::error::{Error, Result};
use crate::frames::{Beta, FrameLabel};

/// Separation `(dx, dy, dt)` between two events as seen from `frame`.
/// Lengths are in units of `L`, times in `L/c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalTriple {
    pub dx: f64,
    pub dy: f64,
    pub dt: f64,
    pub frame: FrameLabel,
}

impl IntervalTriple {
    pub fn new(dx: f64, dy: f64, dt: f64, frame: FrameLabel) -> Self {
        IntervalTriple { dx, dy, dt, frame }
    }

    /// `dt^2 - dx^2 - dy^2`
    pub fn minkowski_norm(&self) -> f64 {
        self.dt * self.dt - self.dx * self.dx - self.dy * self.dy
    }

    pub fn expect_frame(&self, expected: FrameLabel) -> Result<&Self> {
        if self.frame == expected {
            Ok(self)
        } else {
            Err(Error::FrameMismatch {
                expected,
                found: self.frame,
            })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoostAxis {
    X,
    Y,
}

/// Re-expresses `iv` in the frame `target`, which moves at `beta` along `axis`
/// relative to `iv.frame`.
///
/// The transverse component is untouched. A nonzero boost whose target is the
/// interval's own frame is a bookkeeping error and yields
/// [`Error::FrameMismatch`].
pub fn boost_interval(
    iv: IntervalTriple,
    beta: Beta,
    axis: BoostAxis,
    target: FrameLabel,
) -> Result<IntervalTriple> {
    if target == iv.frame && beta.value() != 0.0 {
        return Err(Error::FrameMismatch {
            expected: target,
            found: iv.frame,
        });
    }
    let g = beta.gamma();
    let b = beta.value();
    let along = match axis {
        BoostAxis::X => iv.dx,
        BoostAxis::Y => iv.dy,
    };
    let along_new = g * (along - b * iv.dt);
    let dt = g * (iv.dt - b * along);
    let (dx, dy) = match axis {
        BoostAxis::X => (along_new, iv.dy),
        BoostAxis::Y => (iv.dx, along_new),
    };
    Ok(IntervalTriple {
        dx,
        dy,
        dt,
        frame: target,
    })
}

/// Frequency seen by a detector separating from the source at `beta_sep`
/// (negative when approaching): `freq_ratio_in * sqrt((1 - beta)/(1 + beta))`.
pub fn doppler_longitudinal(freq_ratio_in: f64, beta_sep: Beta) -> f64 {
    let b = beta_sep.value();
    freq_ratio_in * ((1.0 - b) / (1.0 + b)).sqrt()
}

/// Relativistic velocity addition along one axis.
pub fn compose_collinear(first: Beta, second: Beta) -> Beta {
    let (a, b) = (first.value(), second.value());
    // |a|, |b| < 1 keeps the result strictly inside (-1, 1) in exact arithmetic;
    // clamp the rare rounding up to 1.
    let v = (a + b) / (1.0 + a * b);
    Beta::new(v).unwrap_or_else(|_| Beta::new(v.signum() * (1.0 - f64::EPSILON)).unwrap())
}
