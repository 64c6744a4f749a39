//! Line-based scenario configuration files.
//!
//! ```text
//! # hydrogen molecule
//! mode = si
//! mass_amu = 1.0
//! photon_energy_ev = 14
//! beta_u = 0.6
//! lifetime_s = 1e-9
//! plate_separation_m = 1.0
//! ```
//!
//! One `key = value` pair per line; `#` starts a comment; blank lines are
//! ignored. A repeated key replaces the earlier value and produces a warning.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Dimensionless,
    Si,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Dimensionless => "dimensionless",
            Mode::Si => "si",
        }
    }
}

/// Photon energy of a dimensionless scenario, in one of its two parameterizations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PhotonEnergy {
    /// `eps_lab`: measured in the emitting plate's frame.
    Lab(f64),
    /// `eps_pre`: measured in the auxiliary frame before emission.
    PreEmission(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScenarioInputs {
    Dimensionless {
        photon: PhotonEnergy,
        tau_hat: f64,
    },
    Si {
        mass_amu: f64,
        photon_energy_ev: f64,
        lifetime_s: f64,
        plate_separation_m: f64,
    },
}

/// A parsed configuration. Values are not range-checked here; the kinematics
/// engine rejects out-of-domain numbers when the scenario runs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScenarioConfig {
    pub beta_u: f64,
    pub inputs: ScenarioInputs,
}

/// A duplicate-key notice produced while parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Warning {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for Warning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

const DIMENSIONLESS_KEYS: &[&str] = &["eps_lab", "eps_pre", "tau_hat"];
const SI_KEYS: &[&str] = &[
    "mass_amu",
    "photon_energy_ev",
    "lifetime_s",
    "plate_separation_m",
];

fn is_known_key(key: &str) -> bool {
    key == "mode" || key == "beta_u" || DIMENSIONLESS_KEYS.contains(&key) || SI_KEYS.contains(&key)
}

#[derive(Debug, Clone, Copy)]
enum Value {
    Mode(Mode),
    Number(f64),
}

/// Parses a configuration, printing duplicate-key warnings to standard error.
pub fn parse_config(text: &str) -> Result<ScenarioConfig, CliError> {
    let (config, warnings) = parse_config_with_warnings(text)?;
    for w in &warnings {
        eprintln!("warning: {w}");
    }
    Ok(config)
}

pub fn parse_config_with_warnings(text: &str) -> Result<(ScenarioConfig, Vec<Warning>), CliError> {
    let mut pairs: BTreeMap<String, (usize, Value)> = BTreeMap::new();
    let mut warnings = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content.split_once('=').ok_or_else(|| CliError::Parse {
            line,
            message: format!("expected `key = value`, found `{content}`"),
        })?;
        let key = key.trim();
        let value = value.trim();
        if key.is_empty() || !key.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(CliError::Parse {
                line,
                message: format!("malformed key `{key}`"),
            });
        }
        if !is_known_key(key) {
            return Err(CliError::Parse {
                line,
                message: format!("unknown key `{key}`"),
            });
        }
        let parsed = if key == "mode" {
            Value::Mode(match value {
                "dimensionless" => Mode::Dimensionless,
                "si" => Mode::Si,
                other => {
                    return Err(CliError::Parse {
                        line,
                        message: format!("mode must be `dimensionless` or `si`, found `{other}`"),
                    })
                }
            })
        } else {
            Value::Number(parse_number(value).ok_or_else(|| CliError::Parse {
                line,
                message: format!("malformed number `{value}` for key `{key}`"),
            })?)
        };
        if let Some((earlier, _)) = pairs.insert(key.to_string(), (line, parsed)) {
            warnings.push(Warning {
                line,
                message: format!("duplicate key `{key}` replaces the value from line {earlier}"),
            });
        }
    }

    assemble(&pairs).map(|config| (config, warnings))
}

fn assemble(pairs: &BTreeMap<String, (usize, Value)>) -> Result<ScenarioConfig, CliError> {
    let number = |key: &str| match pairs.get(key) {
        Some((_, Value::Number(v))) => Some(*v),
        _ => None,
    };
    let mut missing = Vec::new();
    let mut conflicting = Vec::new();

    let mode = match pairs.get("mode") {
        Some((_, Value::Mode(m))) => Some(*m),
        _ => {
            missing.push("mode".to_string());
            None
        }
    };
    let beta_u = number("beta_u");
    if beta_u.is_none() {
        missing.push("beta_u".to_string());
    }

    let inputs = match mode {
        None => None,
        Some(Mode::Dimensionless) => {
            conflicting.extend(
                SI_KEYS
                    .iter()
                    .filter(|k| pairs.contains_key(**k))
                    .map(|k| k.to_string()),
            );
            let photon = match (number("eps_lab"), number("eps_pre")) {
                (Some(lab), None) => Some(PhotonEnergy::Lab(lab)),
                (None, Some(pre)) => Some(PhotonEnergy::PreEmission(pre)),
                (None, None) => {
                    missing.push("eps_lab".to_string());
                    None
                }
                (Some(_), Some(_)) => {
                    conflicting.push("eps_lab".to_string());
                    conflicting.push("eps_pre".to_string());
                    None
                }
            };
            let tau_hat = number("tau_hat");
            if tau_hat.is_none() {
                missing.push("tau_hat".to_string());
            }
            photon
                .zip(tau_hat)
                .map(|(photon, tau_hat)| ScenarioInputs::Dimensionless { photon, tau_hat })
        }
        Some(Mode::Si) => {
            conflicting.extend(
                DIMENSIONLESS_KEYS
                    .iter()
                    .filter(|k| pairs.contains_key(**k))
                    .map(|k| k.to_string()),
            );
            let values: Vec<Option<f64>> = SI_KEYS.iter().map(|k| number(k)).collect();
            for (k, v) in SI_KEYS.iter().zip(&values) {
                if v.is_none() {
                    missing.push(k.to_string());
                }
            }
            match values[..] {
                [Some(mass_amu), Some(photon_energy_ev), Some(lifetime_s), Some(plate_separation_m)] => {
                    Some(ScenarioInputs::Si {
                        mass_amu,
                        photon_energy_ev,
                        lifetime_s,
                        plate_separation_m,
                    })
                }
                _ => None,
            }
        }
    };

    match (beta_u, inputs) {
        (Some(beta_u), Some(inputs)) if conflicting.is_empty() => {
            Ok(ScenarioConfig { beta_u, inputs })
        }
        _ => Err(CliError::Config {
            missing,
            conflicting,
        }),
    }
}

/// Decimal literal with optional sign, fraction and exponent. Rejects the
/// `inf`/`nan` spellings that `f64::from_str` would otherwise accept.
fn parse_number(text: &str) -> Option<f64> {
    let bytes = text.as_bytes();
    let mut i = 0;
    let digits = |i: &mut usize| {
        let start = *i;
        while *i < bytes.len() && bytes[*i].is_ascii_digit() {
            *i += 1;
        }
        *i - start
    };
    if i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
        i += 1;
    }
    let mut mantissa = digits(&mut i);
    if i < bytes.len() && bytes[i] == b'.' {
        i += 1;
        mantissa += digits(&mut i);
    }
    if mantissa == 0 {
        return None;
    }
    if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
        i += 1;
        if i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
            i += 1;
        }
        if digits(&mut i) == 0 {
            return None;
        }
    }
    if i != bytes.len() {
        return None;
    }
    text.parse().ok().filter(|v: &f64| v.is_finite())
}

impl ScenarioConfig {
    pub fn mode(&self) -> Mode {
        match self.inputs {
            ScenarioInputs::Dimensionless { .. } => Mode::Dimensionless,
            ScenarioInputs::Si { .. } => Mode::Si,
        }
    }

    /// Serializes back to the configuration grammar; [`parse_config`] reads
    /// the output back to an identical value.
    pub fn to_config_text(&self) -> String {
        let mut out = String::new();
        let mut put = |key: &str, v: f64| {
            let _ = writeln!(out, "{key} = {v:e}");
        };
        match self.inputs {
            ScenarioInputs::Dimensionless { photon, tau_hat } => {
                match photon {
                    PhotonEnergy::Lab(v) => put("eps_lab", v),
                    PhotonEnergy::PreEmission(v) => put("eps_pre", v),
                }
                put("beta_u", self.beta_u);
                put("tau_hat", tau_hat);
            }
            ScenarioInputs::Si {
                mass_amu,
                photon_energy_ev,
                lifetime_s,
                plate_separation_m,
            } => {
                put("mass_amu", mass_amu);
                put("photon_energy_ev", photon_energy_ev);
                put("beta_u", self.beta_u);
                put("lifetime_s", lifetime_s);
                put("plate_separation_m", plate_separation_m);
            }
        }
        format!("mode = {}\n{out}", self.mode().as_str())
    }
}
