//! Test-only numeric oracles, independent of the closed forms under test.

#![allow(dead_code)]

/// Lower edge of a velocity-fraction bracket.
pub const BRACKET_LO: f64 = 0.0;
/// Upper edge of a velocity-fraction bracket.
pub const BRACKET_HI: f64 = 1.0 - 1e-15;
/// Bisection stops once the bracket is this narrow.
pub const BRACKET_WIDTH: f64 = 1e-14;

/// Plain bisection for a continuous `f` that changes sign on `[lo, hi]`.
pub fn bisect(mut lo: f64, mut hi: f64, f: impl Fn(f64) -> f64) -> f64 {
    let mut f_lo = f(lo);
    assert!(
        f_lo * f(hi) <= 0.0,
        "no sign change on [{lo}, {hi}]: {f_lo} vs {}",
        f(hi)
    );
    while hi - lo > BRACKET_WIDTH {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn lorentz(b: f64) -> f64 {
    1.0 / (1.0 - b * b).sqrt()
}

/// Emission from a plate at rest, solved numerically.
///
/// Momentum gives `m gamma = eps/beta`; substituting into the energy balance
/// `1 = m gamma + eps` leaves a monotone equation in `beta`.
/// Returns `(beta, mass_ratio, energy_residual, momentum_residual)`.
pub fn emission_by_bisection(eps: f64) -> (f64, f64, f64, f64) {
    let beta = bisect(BRACKET_LO + 1e-300, BRACKET_HI, |b| 1.0 - eps - eps / b);
    let m = eps / (beta * lorentz(beta));
    let energy = 1.0 - m * lorentz(beta) - eps;
    let momentum = eps - m * lorentz(beta) * beta;
    (beta, m, energy, momentum)
}

/// Absorption by a plate at rest: `eps + 1 = m gamma`, `eps = m gamma beta`.
pub fn absorption_by_bisection(eps: f64) -> (f64, f64, f64, f64) {
    let beta = bisect(BRACKET_LO + 1e-300, BRACKET_HI, |b| 1.0 + eps - eps / b);
    let m = eps / (beta * lorentz(beta));
    let energy = eps + 1.0 - m * lorentz(beta);
    let momentum = eps - m * lorentz(beta) * beta;
    (beta, m, energy, momentum)
}

/// Head-on reflection off a mirror moving at `beta`, unknowns `(nu_r/nu_i, beta')`.
///
/// Energy conservation expresses `r` through `beta'`; what is left of momentum
/// conservation is monotone in `beta'` and is bisected on `(-1, 1)`.
/// Returns `(freq_ratio, beta_after, energy_residual, momentum_residual)`.
pub fn reflection_by_bisection(eps_i: f64, beta: f64) -> (f64, f64, f64, f64) {
    let g0 = lorentz(beta);
    let ratio_from = |after: f64| (eps_i + g0 - lorentz(after)) / eps_i;
    let momentum_gap =
        |after: f64| (eps_i + g0 * beta) - (lorentz(after) * after - eps_i * ratio_from(after));
    let after = bisect(-BRACKET_HI, BRACKET_HI, momentum_gap);
    let r = ratio_from(after);
    let energy = (eps_i + g0) - (lorentz(after) + eps_i * r);
    (r, after, energy, momentum_gap(after))
}

pub fn rel_err(actual: f64, expected: f64) -> f64 {
    if expected == 0.0 {
        actual.abs()
    } else {
        ((actual - expected) / expected).abs()
    }
}
