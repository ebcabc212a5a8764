use serde::{Deserialize, Serialize};

pub const REPORT_SCHEMA_VERSION: &str = "1.0.0";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    /// A documented discrepancy between a statement and a symbolic family.
    Flagged,
    /// The instance does not meet the statement's hypothesis.
    OutOfHypothesis,
}

/// Logical shape of a statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    Equivalence,
    Implication,
    /// A property asserted for every instance.
    Invariant,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremInfo {
    pub id: String,
    /// The result being checked and a short quote of it.
    pub anchor: String,
    pub statement: String,
    pub shape: Shape,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub instance: String,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Whether an independent checker reproduced the witness of a failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub confirmed: Option<bool>,
}

impl CaseRecord {
    pub fn new(instance: impl Into<String>, outcome: Outcome) -> Self {
        Self {
            instance: instance.into(),
            outcome,
            lhs: None,
            rhs: None,
            witness: None,
            note: None,
            confirmed: None,
        }
    }

    pub fn sides(mut self, lhs: bool, rhs: bool) -> Self {
        self.lhs = Some(lhs);
        self.rhs = Some(rhs);
        self
    }

    pub fn witness(mut self, w: impl Into<String>) -> Self {
        self.witness = Some(w.into());
        self
    }

    pub fn note(mut self, n: impl Into<String>) -> Self {
        self.note = Some(match self.note.take() {
            Some(old) => format!("{old}; {}", n.into()),
            None => n.into(),
        });
        self
    }

    pub fn confirmed(mut self, c: bool) -> Self {
        self.confirmed = Some(c);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub schema_version: String,
    pub theorem: TheoremInfo,
    pub family: String,
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
    pub flagged_count: usize,
    pub out_of_hypothesis_count: usize,
    pub failures: Vec<CaseRecord>,
    pub flagged: Vec<CaseRecord>,
    pub out_of_hypothesis: Vec<CaseRecord>,
    /// Passing cases that carry a note worth keeping, such as which branch
    /// of a criterion was exercised.
    pub notes: Vec<CaseRecord>,
    pub wall_time_ms: u128,
}

impl SweepReport {
    pub fn from_cases(theorem: TheoremInfo, family: String, cases: Vec<CaseRecord>, wall_time_ms: u128) -> Self {
        let mut r = SweepReport {
            schema_version: REPORT_SCHEMA_VERSION.into(),
            theorem,
            family,
            instances: cases.len(),
            passed: 0,
            failed: 0,
            flagged_count: 0,
            out_of_hypothesis_count: 0,
            failures: Vec::new(),
            flagged: Vec::new(),
            out_of_hypothesis: Vec::new(),
            notes: Vec::new(),
            wall_time_ms,
        };
        for c in cases {
            match c.outcome {
                Outcome::Pass => {
                    r.passed += 1;
                    if c.note.is_some() {
                        r.notes.push(c);
                    }
                }
                Outcome::Fail => {
                    r.failed += 1;
                    r.failures.push(c);
                }
                Outcome::Flagged => {
                    r.flagged_count += 1;
                    r.flagged.push(c);
                }
                Outcome::OutOfHypothesis => {
                    r.out_of_hypothesis_count += 1;
                    r.out_of_hypothesis.push(c);
                }
            }
        }
        r
    }

    pub fn status(&self) -> Outcome {
        if self.failed > 0 {
            Outcome::Fail
        } else if self.flagged_count > 0 {
            Outcome::Flagged
        } else {
            Outcome::Pass
        }
    }
}

/// Several sweeps plus the theorem registry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: String,
    pub registry: Vec<TheoremInfo>,
    pub reports: Vec<SweepReport>,
}

impl RunReport {
    pub fn new(reports: Vec<SweepReport>) -> Self {
        Self {
            schema_version: REPORT_SCHEMA_VERSION.into(),
            registry: super::registry(),
            reports,
        }
    }

    /// Worst status over all sweeps: any failure beats flagged, which beats pass.
    pub fn status(&self) -> Outcome {
        let statuses: Vec<Outcome> = self.reports.iter().map(SweepReport::status).collect();
        if statuses.contains(&Outcome::Fail) {
            Outcome::Fail
        } else if statuses.contains(&Outcome::Flagged) {
            Outcome::Flagged
        } else {
            Outcome::Pass
        }
    }
}
