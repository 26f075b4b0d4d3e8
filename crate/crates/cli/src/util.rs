use std::fmt;
use std::fs;
use std::path::Path;

use sha2::{Digest, Sha256};
use shotplan_core::Error as CoreError;

/// CLI-level error carrying its process exit code:
/// 2 = input error, 3 = numerical non-convergence, 4 = internal integrity
/// failure.
#[derive(Debug)]
pub struct CliError {
    pub message: String,
    pub code: i32,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl std::error::Error for CliError {}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        Self { message: message.into(), code: 2 }
    }

    pub fn internal(message: impl Into<String>) -> Self {
        Self { message: message.into(), code: 4 }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let code = match &e {
            CoreError::QubitMismatch(..)
            | CoreError::TooManyQubits(_)
            | CoreError::Parse(_)
            | CoreError::NonHermitian { .. }
            | CoreError::InvalidFidelity(_)
            | CoreError::InvalidEpsilon(_)
            | CoreError::EmptyOperator
            | CoreError::WidthOverCap(..)
            | CoreError::ModeOutOfRange(..) => 2,
            CoreError::NonConvergence { .. } => 3,
            CoreError::NotQubitWiseCommuting(..)
            | CoreError::NotCommuting(..)
            | CoreError::NotIsing(_)
            | CoreError::Integrity(_) => 4,
        };
        Self { message: e.to_string(), code }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::input(format!("io error: {e}"))
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Reads a file, tagging errors with the path.
pub fn read_input(path: &Path) -> CliResult<String> {
    fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))
}

/// Hex SHA-256 digest of a text blob (report provenance).
pub fn sha256_hex(text: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(text.as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

/// Writes to the given path, or to stdout when no path is given.
pub fn write_output(path: Option<&Path>, content: &str) -> CliResult<()> {
    match path {
        Some(p) => {
            fs::write(p, content)
                .map_err(|e| CliError::input(format!("cannot write {}: {e}", p.display())))?;
        }
        None => print!("{content}"),
    }
    Ok(())
}

/// Ordinary least squares fit `y = slope·x + intercept` with R².
pub fn ols_fit(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / n;
    let mean_y = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mean_x).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mean_x) * (y - mean_y)).sum();
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let ss_res: f64 = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| (y - (slope * x + intercept)).powi(2))
        .sum();
    let ss_tot: f64 = ys.iter().map(|y| (y - mean_y).powi(2)).sum();
    let r2 = if ss_tot > 0.0 { 1.0 - ss_res / ss_tot } else { 1.0 };
    (slope, intercept, r2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_by_error_class() {
        let input: CliError = CoreError::Parse("x".into()).into();
        assert_eq!(input.code, 2);
        let cap: CliError = CoreError::WidthOverCap(30, 20).into();
        assert_eq!(cap.code, 2);
        let conv: CliError =
            CoreError::NonConvergence { residual: 1e-3, iterations: 200 }.into();
        assert_eq!(conv.code, 3);
        let integrity: CliError = CoreError::Integrity("x".into()).into();
        assert_eq!(integrity.code, 4);
        let ising: CliError = CoreError::NotIsing("X0".into()).into();
        assert_eq!(ising.code, 4);
    }

    #[test]
    fn sha256_known_value() {
        // SHA-256 of the empty string
        assert_eq!(
            sha256_hex(""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }

    #[test]
    fn ols_fit_exact_line() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        let ys: Vec<f64> = xs.iter().map(|x| 2.5 * x - 1.0).collect();
        let (slope, intercept, r2) = ols_fit(&xs, &ys);
        assert!((slope - 2.5).abs() < 1e-12);
        assert!((intercept - -1.0).abs() < 1e-12);
        assert!((r2 - 1.0).abs() < 1e-12);
    }
}
