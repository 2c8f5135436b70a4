//! The `.lk` script language: parsing, printing and execution.

mod ast;
mod builtins;
mod parser;
mod report;
mod runner;

pub use ast::{Expr, OptValue, PolyText, Pos, RingDecl, Script, Statement, Stmt};
pub use builtins::{Sig, Ty, SIGNATURES};
pub use parser::parse_script;
pub use report::{
    CommandResult, CommandStatus, EngineInfo, ErrorInfo, OptionsEcho, Report, Summary, Timing,
    SCHEMA_VERSION,
};
pub use runner::{run_script, RunOptions};

/// Parses and runs script text; parse errors are returned unchanged.
pub fn run_text(text: &str, opts: &RunOptions) -> crate::Result<Report> {
    Ok(run_script(&parse_script(text)?, opts))
}
