//! File formats and report rendering for the `compositum` command-line
//! tool. The binary in `main.rs` is a thin wrapper over this library so the
//! parsers and formatters are directly testable.

pub mod fieldspec;
pub mod groupspec;
pub mod report;

use compositum_core::{BoundsError, DiagonalError, FieldError, GaloisError, GoursatError, GroupError};

/// Stable process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_OTHER: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_FIELD_PRECONDITION: i32 = 4;

/// A CLI-level error carrying its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn parse(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_PARSE,
            message: message.into(),
        }
    }

    pub fn other(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_OTHER,
            message: message.into(),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl std::error::Error for CliError {}

fn code_for_group_error(e: &GroupError) -> i32 {
    match e {
        GroupError::CapExceeded { .. } => EXIT_CAP,
        GroupError::InvalidPermutation(_) | GroupError::DegreeMismatch { .. } => EXIT_PARSE,
        _ => EXIT_OTHER,
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        CliError {
            code: code_for_group_error(&e),
            message: e.to_string(),
        }
    }
}

impl From<GoursatError> for CliError {
    fn from(e: GoursatError) -> Self {
        let code = match &e {
            GoursatError::Group(g) => code_for_group_error(g),
            _ => EXIT_OTHER,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<DiagonalError> for CliError {
    fn from(e: DiagonalError) -> Self {
        let code = match &e {
            DiagonalError::Group(g) => code_for_group_error(g),
            DiagonalError::Goursat(GoursatError::Group(g)) => code_for_group_error(g),
            DiagonalError::NotProperPair => EXIT_PARSE,
            _ => EXIT_OTHER,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<GaloisError> for CliError {
    fn from(e: GaloisError) -> Self {
        let code = match &e {
            GaloisError::Group(g) => code_for_group_error(g),
            GaloisError::Diagonal(d) => CliError::from(d.clone()).code,
            GaloisError::UnfaithfulStabilizer => EXIT_PARSE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<FieldError> for CliError {
    fn from(e: FieldError) -> Self {
        let code = match &e {
            FieldError::FieldNotTotallyReal => EXIT_FIELD_PRECONDITION,
            FieldError::ConstantPolynomial
            | FieldError::NotMonic
            | FieldError::NotIntegerCoefficients
            | FieldError::ReduciblePolynomial(_)
            | FieldError::IrreducibilityUnknown => EXIT_PARSE,
            _ => EXIT_OTHER,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<BoundsError> for CliError {
    fn from(e: BoundsError) -> Self {
        let code = match &e {
            BoundsError::FieldNotTotallyReal | BoundsError::NotTotallyPositive(_) => {
                EXIT_FIELD_PRECONDITION
            }
            BoundsError::NeedTwoElements => EXIT_PARSE,
            BoundsError::Field(f) => CliError::from(f.clone()).code,
            _ => EXIT_OTHER,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::parse(format!("cannot read input: {e}"))
    }
}
