use std::fmt;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{}", describe_config(missing, conflicting))]
    Config {
        missing: Vec<String>,
        conflicting: Vec<String>,
    },

    #[error("{0}")]
    Usage(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Domain(#[from] lightframe_core::Error),

    #[error("sweep row eps = {eps:e}, beta_u = {beta_u:e}: {source}")]
    SweepRow {
        eps: f64,
        beta_u: f64,
        #[source]
        source: lightframe_core::Error,
    },
}

fn describe_config(missing: &[String], conflicting: &[String]) -> String {
    let mut parts = Vec::new();
    if !missing.is_empty() {
        parts.push(format!("missing keys: {}", missing.join(", ")));
    }
    if !conflicting.is_empty() {
        parts.push(format!("conflicting keys: {}", conflicting.join(", ")));
    }
    parts.join("; ")
}

impl CliError {
    /// Process exit status: 1 for usage and parse problems, 2 for domain errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) | CliError::SweepRow { .. } => 2,
            _ => 1,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            CliError::Parse { .. } => "ParseError",
            CliError::Config { .. } => "ConfigError",
            CliError::Usage(_) => "UsageError",
            CliError::Io { .. } => "IoError",
            CliError::Domain(e) | CliError::SweepRow { source: e, .. } => e.name(),
        }
    }
}

/// `error[Name]: message`, as written to the diagnostic stream.
pub struct Diagnostic<'a>(pub &'a CliError);

impl fmt::Display for Diagnostic<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error[{}]: {}", self.0.name(), self.0)
    }
}
