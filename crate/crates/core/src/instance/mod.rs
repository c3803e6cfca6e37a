//! Instance files, parameter binding, and the commands behind the CLI.

pub mod commands;
pub mod expr;
pub mod file;
pub mod report;

pub use commands::{build, classify2, verify, CommandError};
pub use expr::ParamExpr;
pub use file::{parse_binding, BoundInstance, InstanceError, InstanceFile};
pub use report::{Outcome, Report};
