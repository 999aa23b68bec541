//! Suite selection and machine-readable reports.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use kcat::axioms::{
    check_bimonad, check_comonad, check_coquasi_bimonad, check_hn_datum, check_k_cocycle, check_monad,
    check_pentagon, check_quasi_bimonad, check_relative, check_structure, check_sweedler_datum, check_tambara,
    check_yd, KFamily,
};
use kcat::structures::{BimonadDesc, ComonadDesc, DistKind, MonadDesc, Side, Structure};
use kcat::{AxiomSuiteReport, CellType, Field, Witness};

use crate::error::{CliError, Result};
use crate::format::{Document, Item};

/// Suite ids accepted by `--suite`.
pub const SUITES: [&str; 17] = [
    "auto",
    "monad",
    "comonad",
    "bimonad",
    "bimonad-left",
    "bimonad-right",
    "quasi-bimonad",
    "coquasi-bimonad",
    "tambara",
    "sweedler-datum",
    "hn-datum",
    "yd",
    "yd-strong",
    "relative",
    "pentagon",
    "k-2-cocycle",
    "k-3-cocycle",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessOut {
    Entry {
        row: Vec<usize>,
        col: Vec<usize>,
        lhs: String,
        rhs: String,
    },
    Shape {
        lhs: String,
        rhs: String,
    },
    Error {
        message: String,
    },
}

impl From<&Witness> for WitnessOut {
    fn from(w: &Witness) -> WitnessOut {
        match w {
            Witness::Entry { row, col, lhs, rhs } => WitnessOut::Entry {
                row: row.clone(),
                col: col.clone(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            },
            Witness::Shape { lhs, rhs } => WitnessOut::Shape {
                lhs: lhs.clone(),
                rhs: rhs.clone(),
            },
            Witness::Error(e) => WitnessOut::Error { message: e.clone() },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomLine {
    pub id: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_us: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub input: String,
    pub kind: String,
    pub suite: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub domain: Option<String>,
    pub passed: bool,
    pub axioms: Vec<AxiomLine>,
}

impl EntryReport {
    pub fn from_suite(input: &str, kind: &str, suite: &str, r: &AxiomSuiteReport) -> EntryReport {
        EntryReport {
            input: input.to_string(),
            kind: kind.to_string(),
            suite: suite.to_string(),
            domain: r.domain.clone(),
            passed: r.passed(),
            axioms: r
                .reports
                .iter()
                .map(|c| AxiomLine {
                    id: c.axiom_id.clone(),
                    passed: c.passed(),
                    instance: c.instance.clone(),
                    witness: c.witness.as_ref().map(WitnessOut::from),
                    elapsed_us: Some(c.elapsed.as_micros() as u64),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub field: String,
    pub passed: bool,
    pub results: Vec<EntryReport>,
}

impl Report {
    pub fn new(field: Field, results: Vec<EntryReport>) -> Report {
        Report {
            field: field.to_string(),
            passed: results.iter().all(|r| r.passed),
            results,
        }
    }

    /// Drop elapsed times, the only nondeterministic part of a report.
    pub fn without_timings(mut self) -> Report {
        for r in &mut self.results {
            for a in &mut r.axioms {
                a.elapsed_us = None;
            }
        }
        self
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.results {
            let v = if r.passed { "PASS" } else { "FAIL" };
            writeln!(s, "{v} {} ({}) suite {}", r.input, r.kind, r.suite).unwrap();
            if let Some(d) = &r.domain {
                writeln!(s, "  domain {d}").unwrap();
            }
            for a in &r.axioms {
                let v = if a.passed { "PASS" } else { "FAIL" };
                write!(s, "  {v} {}", a.id).unwrap();
                if let Some(i) = &a.instance {
                    write!(s, " [{i}]").unwrap();
                }
                if let Some(w) = &a.witness {
                    write!(s, ": {}", show_witness(w)).unwrap();
                }
                if let Some(us) = a.elapsed_us {
                    write!(s, " ({}.{:03} ms)", us / 1000, us % 1000).unwrap();
                }
                s.push('\n');
            }
        }
        let failed = self.results.iter().filter(|r| !r.passed).count();
        writeln!(s, "{} passed, {failed} failed", self.results.len() - failed).unwrap();
        s
    }
}

fn show_witness(w: &WitnessOut) -> String {
    match w {
        WitnessOut::Entry { row, col, lhs, rhs } => format!("row {row:?} col {col:?}: lhs {lhs} rhs {rhs}"),
        WitnessOut::Shape { lhs, rhs } => format!("ShapeMismatch: {lhs} vs {rhs}"),
        WitnessOut::Error { message } => message.clone(),
    }
}

fn bimonad_side(b: &BimonadDesc) -> Side {
    let k = &b.lambda.kinds;
    if k.contains(&DistKind::RightMonadic) && !k.contains(&DistKind::LeftMonadic) {
        Side::Right
    } else {
        Side::Left
    }
}

fn monad_part(s: &Structure) -> Option<&MonadDesc> {
    Some(match s {
        Structure::Monad(m) => m,
        Structure::QuasiBimonad(q) => &q.monad,
        Structure::CoquasiBimonad(q) => &q.monad,
        Structure::Bimonad(b) => &b.monad,
        Structure::Tambara(t) => &t.base,
        Structure::Sweedler(d) => &d.b,
        Structure::HausserNill(h) => &h.b,
        Structure::YD(y) => &y.bimonad.monad,
        Structure::Relative(r) => &r.b,
        _ => return None,
    })
}

fn comonad_part(s: &Structure) -> Option<&ComonadDesc> {
    Some(match s {
        Structure::Comonad(c) => c,
        Structure::QuasiBimonad(q) => &q.comonad,
        Structure::CoquasiBimonad(q) => &q.comonad,
        Structure::Bimonad(b) => &b.comonad,
        Structure::YD(y) => &y.bimonad.comonad,
        Structure::Relative(r) => &r.f,
        _ => return None,
    })
}

fn bimonad_part(s: &Structure) -> Option<&BimonadDesc> {
    match s {
        Structure::Bimonad(b) => Some(b),
        Structure::YD(y) => Some(&y.bimonad),
        _ => None,
    }
}

/// The suite a structure is checked against when none is named.
pub fn auto_suite(item: &Item) -> Option<&'static str> {
    Some(match item {
        Item::Family(_) => "pentagon",
        Item::Structure(s) => match s {
            Structure::Monad(_) => "monad",
            Structure::Comonad(_) => "comonad",
            Structure::Tambara(_) => "tambara",
            Structure::QuasiBimonad(_) => "quasi-bimonad",
            Structure::CoquasiBimonad(_) => "coquasi-bimonad",
            Structure::Bimonad(_) => "bimonad",
            Structure::Sweedler(_) => "sweedler-datum",
            Structure::HausserNill(_) => "hn-datum",
            Structure::YD(_) => "yd-strong",
            Structure::Relative(_) => "relative",
            Structure::DistLaw(_) | Structure::Module(_) | Structure::Comodule(_) => return None,
        },
    })
}

/// Every suite that applies to an item, principal suite first. The
/// sided bimonad suites are left out; `bimonad` picks the declared side.
pub fn applicable_suites(item: &Item) -> Vec<&'static str> {
    let mut out: Vec<&'static str> = auto_suite(item).into_iter().collect();
    for id in SUITES.iter().skip(1) {
        let sided = matches!(*id, "bimonad-left" | "bimonad-right");
        if !sided && !out.contains(id) && suite_applies(item, id) {
            out.push(id);
        }
    }
    out
}

fn suite_applies(item: &Item, id: &str) -> bool {
    match item {
        Item::Family(_) => matches!(id, "pentagon" | "k-2-cocycle" | "k-3-cocycle"),
        Item::Structure(s) => match id {
            "monad" => monad_part(s).is_some(),
            "comonad" => comonad_part(s).is_some(),
            "bimonad" | "bimonad-left" | "bimonad-right" => bimonad_part(s).is_some(),
            "yd" | "yd-strong" => matches!(s, Structure::YD(_)),
            other => auto_suite(item) == Some(other),
        },
    }
}

fn restrict(f: &KFamily, objects: Option<&[CellType]>) -> KFamily {
    match objects {
        None => f.clone(),
        Some(o) => KFamily {
            objects: o.to_vec(),
            cells: f.cells.clone(),
        },
    }
}

/// Run one suite on one item. `objects` replaces the quantification
/// domain of family checks.
pub fn check_item(item: &Item, suite: &str, objects: Option<&[CellType]>) -> Result<AxiomSuiteReport> {
    let na = || CliError::Usage(format!("suite `{suite}` does not apply to a {}", item.kind()));
    if !SUITES.contains(&suite) {
        return Err(CliError::Usage(format!("unknown suite `{suite}`; known: {}", SUITES.join(", "))));
    }
    if suite == "auto" {
        let id = auto_suite(item).ok_or_else(|| {
            CliError::Usage(format!("a standalone {} has no suite; check the structure that carries it", item.kind()))
        })?;
        return check_item(item, id, objects);
    }
    if !suite_applies(item, suite) {
        return Err(na());
    }
    let r = match item {
        Item::Family(f) => {
            let f = restrict(f, objects);
            match suite {
                "pentagon" => check_pentagon(&f),
                "k-2-cocycle" => check_k_cocycle(&f, 2, false),
                _ => check_k_cocycle(&f, 3, false),
            }
        }
        Item::Structure(s) => match suite {
            "monad" => check_monad(monad_part(s).ok_or_else(na)?),
            "comonad" => check_comonad(comonad_part(s).ok_or_else(na)?),
            "bimonad" => {
                let b = bimonad_part(s).ok_or_else(na)?;
                check_bimonad(b, bimonad_side(b))
            }
            "bimonad-left" => check_bimonad(bimonad_part(s).ok_or_else(na)?, Side::Left),
            "bimonad-right" => check_bimonad(bimonad_part(s).ok_or_else(na)?, Side::Right),
            "yd" | "yd-strong" => match s {
                Structure::YD(y) => check_yd(y, suite == "yd-strong"),
                _ => return Err(na()),
            },
            "quasi-bimonad" => match s {
                Structure::QuasiBimonad(q) => check_quasi_bimonad(q),
                _ => return Err(na()),
            },
            "coquasi-bimonad" => match s {
                Structure::CoquasiBimonad(q) => check_coquasi_bimonad(q),
                _ => return Err(na()),
            },
            "tambara" => match s {
                Structure::Tambara(t) => check_tambara(t),
                _ => return Err(na()),
            },
            "sweedler-datum" => match s {
                Structure::Sweedler(d) => check_sweedler_datum(d),
                _ => return Err(na()),
            },
            "hn-datum" => match s {
                Structure::HausserNill(h) => check_hn_datum(h),
                _ => return Err(na()),
            },
            "relative" => match s {
                Structure::Relative(r) => check_relative(r),
                _ => return Err(na()),
            },
            _ => check_structure(s),
        },
    };
    Ok(r?)
}

/// Check every entry of a document against the selected suite (`auto`
/// or empty for auto-detection). Entries are checked in parallel; the
/// report keeps document order.
pub fn run_suite(doc: &Document, selector: &str, objects: Option<&[CellType]>) -> Result<Report> {
    let sel = if selector.is_empty() { "auto" } else { selector };
    let results = doc
        .entries
        .par_iter()
        .map(|e| {
            let suite = if sel == "auto" {
                auto_suite(&e.item).unwrap_or("auto")
            } else {
                sel
            };
            let r = check_item(&e.item, suite, objects)?;
            Ok(EntryReport::from_suite(&e.name, e.item.kind(), suite, &r))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::new(doc.field, results))
}

/// Every applicable suite on every entry.
pub fn run_all(doc: &Document, objects: Option<&[CellType]>) -> Result<Report> {
    let jobs: Vec<(usize, &'static str)> = doc
        .entries
        .iter()
        .enumerate()
        .flat_map(|(i, e)| applicable_suites(&e.item).into_iter().map(move |s| (i, s)))
        .collect();
    let results = jobs
        .par_iter()
        .map(|&(i, suite)| {
            let e = &doc.entries[i];
            let r = check_item(&e.item, suite, objects)?;
            Ok(EntryReport::from_suite(&e.name, e.item.kind(), suite, &r))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::new(doc.field, results))
}
