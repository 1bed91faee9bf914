//! The `dualq` command-line front end: document parsing, the commands, and
//! their text/JSON reports.

pub mod commands;
pub mod parse;
pub mod report;

pub use commands::{
    cmd_check_orthonormal, cmd_check_unit, cmd_magnitude, cmd_norms, cmd_selfcheck, snap_document, CommandError,
};
pub use parse::{parse_document, Document, ParseError, ParseErrorKind};
pub use report::{Report, Value};

/// Exit status when a check fails.
pub const EXIT_FAIL: i32 = 1;
/// Exit status for malformed input or bad arguments.
pub const EXIT_USAGE: i32 = 2;
