//! Script run reports. The JSON form is deterministic; timings are kept in
//! a separate section that can be left out.

use std::fmt;

use serde::Serialize;

use crate::linkage::LinkageReport;

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EngineInfo {
    pub name: &'static str,
    pub version: &'static str,
    pub schema: u32,
}

impl Default for EngineInfo {
    fn default() -> Self {
        EngineInfo {
            name: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            schema: SCHEMA_VERSION,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OptionsEcho {
    pub prime: u32,
    pub order: String,
    pub bound: usize,
    pub seed: u64,
    pub fail_fast: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CommandStatus {
    Pass,
    Fail,
    Error,
    Output,
}

impl fmt::Display for CommandStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CommandStatus::Pass => "pass",
            CommandStatus::Fail => "fail",
            CommandStatus::Error => "error",
            CommandStatus::Output => "output",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErrorInfo {
    /// Operation that raised the error.
    pub op: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommandResult {
    pub line: usize,
    pub command: String,
    pub status: CommandStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<LinkageReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
    /// Set when `fail_fast` stopped the run early.
    pub stopped_early: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Timing {
    pub line: usize,
    pub millis: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub engine: EngineInfo,
    pub options: OptionsEcho,
    pub results: Vec<CommandResult>,
    pub summary: Summary,
    pub timing: Vec<Timing>,
}

#[derive(Serialize)]
struct Body<'a> {
    engine: &'a EngineInfo,
    options: &'a OptionsEcho,
    results: &'a [CommandResult],
    summary: &'a Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing: Option<&'a [Timing]>,
}

impl Report {
    /// Pretty JSON; `timing` adds the (non-deterministic) timing section.
    pub fn to_json(&self, timing: bool) -> String {
        let body = Body {
            engine: &self.engine,
            options: &self.options,
            results: &self.results,
            summary: &self.summary,
            timing: timing.then_some(self.timing.as_slice()),
        };
        serde_json::to_string_pretty(&body).expect("report serializes")
    }

    /// 0 when every check passed, 1 when some check failed, 3 on an engine
    /// error.
    pub fn exit_code(&self) -> i32 {
        if self.summary.errors > 0 {
            3
        } else if self.summary.failed > 0 {
            1
        } else {
            0
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = &self.options;
        writeln!(
            f,
            "{} {} (p = {}, order {}, bound {}, seed {})",
            self.engine.name, self.engine.version, o.prime, o.order, o.bound, o.seed
        )?;
        for r in &self.results {
            writeln!(f, "\n[{}] line {}: {}", r.status, r.line, r.command)?;
            if let Some(rep) = &r.report {
                for line in rep.to_string().lines().skip(1) {
                    writeln!(f, "{line}")?;
                }
            }
            if let Some(out) = &r.output {
                for line in out.lines() {
                    writeln!(f, "  {line}")?;
                }
            }
            if let Some(e) = &r.error {
                writeln!(f, "  error in {}: {}", e.op, e.message)?;
            }
        }
        let s = &self.summary;
        write!(
            f,
            "\nsummary: {} checks, {} passed, {} failed, {} errors",
            s.checks, s.passed, s.failed, s.errors
        )?;
        if s.stopped_early {
            write!(f, " (stopped early)")?;
        }
        writeln!(f)
    }
}
