use std::fmt;

use serde::Serialize;

/// Outcome of one condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    True,
    False,
    NotComputed,
}

impl From<bool> for Status {
    fn from(b: bool) -> Self {
        if b {
            Status::True
        } else {
            Status::False
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::True => "true",
            Status::False => "false",
            Status::NotComputed => "not-computed",
        })
    }
}

/// Status of a hypothesis of a check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HypothesisStatus {
    Holds,
    Fails,
    /// Recorded as supplied by the caller, not verified.
    Asserted,
    /// Could not be certified by the computation.
    NotCertified,
}

impl fmt::Display for HypothesisStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HypothesisStatus::Holds => "holds",
            HypothesisStatus::Fails => "fails",
            HypothesisStatus::Asserted => "asserted",
            HypothesisStatus::NotCertified => "not-certified",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub status: HypothesisStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Structured result of a linkage or homological check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkageReport {
    pub subject: String,
    pub hypotheses: Vec<Hypothesis>,
    pub verdicts: Vec<Verdict>,
    /// `true` iff all computed conditions that should agree do agree.
    pub consistency: bool,
}

impl LinkageReport {
    pub fn new(subject: impl Into<String>) -> Self {
        LinkageReport {
            subject: subject.into(),
            hypotheses: Vec::new(),
            verdicts: Vec::new(),
            consistency: true,
        }
    }

    pub fn hypothesis(&mut self, name: &str, status: HypothesisStatus) -> &mut Self {
        self.hypotheses.push(Hypothesis {
            name: name.into(),
            status,
        });
        self
    }

    /// Records a verified hypothesis; returns whether it holds.
    pub fn require(&mut self, name: &str, holds: bool) -> bool {
        self.hypothesis(
            name,
            if holds {
                HypothesisStatus::Holds
            } else {
                HypothesisStatus::Fails
            },
        );
        holds
    }

    pub fn verdict(&mut self, name: &str, status: impl Into<Status>, witness: Option<String>) -> &mut Self {
        self.verdicts.push(Verdict {
            name: name.into(),
            status: status.into(),
            witness,
        });
        self
    }

    pub fn get(&self, name: &str) -> Option<Status> {
        self.verdicts.iter().find(|v| v.name == name).map(|v| v.status)
    }

    pub fn is_true(&self, name: &str) -> bool {
        self.get(name) == Some(Status::True)
    }

    pub fn witness(&self, name: &str) -> Option<&str> {
        self.verdicts
            .iter()
            .find(|v| v.name == name)
            .and_then(|v| v.witness.as_deref())
    }

    /// No hypothesis failed or went uncertified.
    pub fn hypotheses_hold(&self) -> bool {
        self.hypotheses
            .iter()
            .all(|h| matches!(h.status, HypothesisStatus::Holds | HypothesisStatus::Asserted))
    }

    pub fn failed_hypotheses(&self) -> Vec<&str> {
        self.hypotheses
            .iter()
            .filter(|h| !matches!(h.status, HypothesisStatus::Holds | HypothesisStatus::Asserted))
            .map(|h| h.name.as_str())
            .collect()
    }

    /// Hypotheses hold, the report is consistent, and every computed verdict
    /// is true.
    pub fn passed(&self) -> bool {
        self.hypotheses_hold()
            && self.consistency
            && self.verdicts.iter().all(|v| v.status != Status::False)
    }
}

impl fmt::Display for LinkageReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for h in &self.hypotheses {
            writeln!(f, "  hypothesis {}: {}", h.name, h.status)?;
        }
        for v in &self.verdicts {
            match &v.witness {
                Some(w) => writeln!(f, "  {}: {} [{}]", v.name, v.status, w)?,
                None => writeln!(f, "  {}: {}", v.name, v.status)?,
            }
        }
        write!(f, "  consistency: {}", self.consistency)
    }
}
