//! Verdicts of axiom equations.

use std::fmt;
use std::time::{Duration, Instant};

use crate::error::Result;
use crate::lincat::{compare, TwoCell};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
}

/// Why an equation failed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Witness {
    /// First differing entry, lexicographic in (row, column) multi-indices.
    Entry {
        row: Vec<usize>,
        col: Vec<usize>,
        lhs: Scalar,
        rhs: Scalar,
    },
    /// The two sides do not even have the same type.
    Shape { lhs: String, rhs: String },
    /// A side could not be evaluated.
    Error(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Entry { row, col, lhs, rhs } => {
                write!(f, "row {row:?} col {col:?}: lhs {lhs} rhs {rhs}")
            }
            Witness::Shape { lhs, rhs } => write!(f, "ShapeMismatch: {lhs} vs {rhs}"),
            Witness::Error(e) => write!(f, "{e}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub axiom_id: String,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// Which member of a quantified family failed, if any.
    pub instance: Option<String>,
    pub elapsed: Duration,
}

impl PartialEq for CheckReport {
    fn eq(&self, other: &Self) -> bool {
        self.axiom_id == other.axiom_id
            && self.verdict == other.verdict
            && self.witness == other.witness
            && self.instance == other.instance
    }
}

impl CheckReport {
    pub fn from_witness(id: &str, witness: Option<Witness>) -> CheckReport {
        CheckReport {
            axiom_id: id.to_string(),
            verdict: if witness.is_some() {
                Verdict::Fail
            } else {
                Verdict::Pass
            },
            witness,
            instance: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn pass(id: &str) -> CheckReport {
        CheckReport::from_witness(id, None)
    }

    pub fn fail(id: &str, why: impl Into<String>) -> CheckReport {
        CheckReport::from_witness(id, Some(Witness::Error(why.into())))
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn with_instance(mut self, inst: impl Into<String>) -> CheckReport {
        if !self.passed() {
            self.instance = Some(inst.into());
        }
        self
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "PASS {}", self.axiom_id),
            Some(w) => {
                write!(f, "FAIL {}", self.axiom_id)?;
                if let Some(i) = &self.instance {
                    write!(f, " [{i}]")?;
                }
                write!(f, ": {w}")
            }
        }
    }
}

/// Evaluate both sides of an equation and compare them.
pub fn law<F>(id: &str, sides: F) -> CheckReport
where
    F: FnOnce() -> Result<(TwoCell, TwoCell)>,
{
    let start = Instant::now();
    let witness = match sides() {
        Ok((l, r)) => compare(&l, &r),
        Err(e) => Some(Witness::Error(e.to_string())),
    };
    let mut rep = CheckReport::from_witness(id, witness);
    rep.elapsed = start.elapsed();
    rep
}

/// Conjunction of one equation over a finite family of instances: the
/// first failing instance is recorded.
pub fn family_law<I, F>(id: &str, instances: I, mut sides: F) -> CheckReport
where
    I: IntoIterator<Item = String>,
    F: FnMut(&str) -> Result<(TwoCell, TwoCell)>,
{
    let start = Instant::now();
    let mut rep = CheckReport::pass(id);
    for inst in instances {
        let r = law(id, || sides(&inst));
        if !r.passed() {
            rep = r.with_instance(inst);
            break;
        }
    }
    rep.elapsed = start.elapsed();
    rep
}

/// Ordered list of reports of one suite.
#[derive(Clone, Debug, PartialEq)]
pub struct AxiomSuiteReport {
    pub suite: String,
    pub reports: Vec<CheckReport>,
    /// Quantification domain for family statements.
    pub domain: Option<String>,
}

impl AxiomSuiteReport {
    pub fn new(suite: &str) -> AxiomSuiteReport {
        AxiomSuiteReport {
            suite: suite.to_string(),
            reports: vec![],
            domain: None,
        }
    }

    pub fn push(&mut self, r: CheckReport) {
        self.reports.push(r);
    }

    pub fn extend(&mut self, other: AxiomSuiteReport) {
        self.reports.extend(other.reports);
    }

    /// Append another suite's reports with ids prefixed.
    pub fn extend_prefixed(&mut self, prefix: &str, other: AxiomSuiteReport) {
        for mut r in other.reports {
            r.axiom_id = format!("{prefix}/{}", r.axiom_id);
            self.reports.push(r);
        }
    }

    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed())
    }

    pub fn failures(&self) -> Vec<&CheckReport> {
        self.reports.iter().filter(|r| !r.passed()).collect()
    }

    pub fn get(&self, id: &str) -> Option<&CheckReport> {
        self.reports.iter().find(|r| r.axiom_id == id)
    }

    /// True when the report with this id exists and passed.
    pub fn passes(&self, id: &str) -> bool {
        self.get(id).map(|r| r.passed()).unwrap_or(false)
    }

    pub fn ids(&self) -> Vec<&str> {
        self.reports.iter().map(|r| r.axiom_id.as_str()).collect()
    }
}

impl fmt::Display for AxiomSuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        if let Some(d) = &self.domain {
            writeln!(f, "  domain {d}")?;
        }
        for r in &self.reports {
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}
