//! One checker per axiom system. Each returns an ordered list of reports
//! keyed by stable equation labels; every law of a suite is evaluated even
//! after a failure.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::structures::{DistKind, Side, Structure};
use crate::lincat::TwoCell;
use crate::report::{law, AxiomSuiteReport, CheckReport};

mod basic;
mod datum;
mod em;
mod quasi;
mod yd;

pub use basic::*;
pub use datum::*;
pub use em::*;
pub use quasi::*;
pub use yd::*;

type Job<'a> = Box<dyn FnOnce() -> Vec<CheckReport> + Send + 'a>;

/// Collects the laws of a suite and evaluates them in parallel; the
/// report order is the order of registration.
pub struct Suite<'a> {
    name: String,
    domain: Option<String>,
    jobs: Vec<Job<'a>>,
}

impl<'a> Suite<'a> {
    pub fn new(name: &str) -> Suite<'a> {
        Suite {
            name: name.to_string(),
            domain: None,
            jobs: vec![],
        }
    }

    pub fn domain(&mut self, d: impl Into<String>) {
        self.domain = Some(d.into());
    }

    /// An equation between two composites.
    pub fn law<F>(&mut self, id: &str, sides: F)
    where
        F: FnOnce() -> Result<(TwoCell, TwoCell)> + Send + 'a,
    {
        let id = id.to_string();
        self.jobs.push(Box::new(move || vec![law(&id, sides)]));
    }

    /// A report computed some other way.
    pub fn report<F>(&mut self, f: F)
    where
        F: FnOnce() -> CheckReport + Send + 'a,
    {
        self.jobs.push(Box::new(move || vec![f()]));
    }

    /// A nested suite whose ids get `prefix/`.
    pub fn sub<F>(&mut self, prefix: &str, f: F)
    where
        F: FnOnce() -> AxiomSuiteReport + Send + 'a,
    {
        let prefix = prefix.to_string();
        self.jobs.push(Box::new(move || {
            let mut out = AxiomSuiteReport::new("");
            out.extend_prefixed(&prefix, f());
            out.reports
        }));
    }

    pub fn finish(self) -> AxiomSuiteReport {
        let reports: Vec<Vec<CheckReport>> = self.jobs.into_par_iter().map(|j| j()).collect();
        AxiomSuiteReport {
            suite: self.name,
            reports: reports.into_iter().flatten().collect(),
            domain: self.domain,
        }
    }
}

/// Conjunction of several reports under one id; the first failure wins.
pub fn all_of(id: &str, parts: Vec<CheckReport>) -> CheckReport {
    let elapsed = parts.iter().map(|r| r.elapsed).sum();
    let mut out = match parts.into_iter().find(|r| !r.passed()) {
        None => CheckReport::pass(id),
        Some(r) => {
            let inst = r.instance.clone().unwrap_or_else(|| r.axiom_id.clone());
            CheckReport {
                axiom_id: id.to_string(),
                ..r
            }
            .with_instance(inst)
        }
    };
    out.elapsed = elapsed;
    out
}

/// The default suite of a structure. Distributive laws, modules and
/// comodules on their own do not carry the (co)monads they refer to.
pub fn check_structure(s: &Structure) -> Result<AxiomSuiteReport> {
    match s {
        Structure::Monad(m) => check_monad(m),
        Structure::Comonad(c) => check_comonad(c),
        Structure::Tambara(t) => check_tambara(t),
        Structure::QuasiBimonad(q) => check_quasi_bimonad(q),
        Structure::CoquasiBimonad(q) => check_coquasi_bimonad(q),
        Structure::Bimonad(b) => {
            let side = if b.lambda.kinds.contains(&DistKind::RightMonadic)
                && !b.lambda.kinds.contains(&DistKind::LeftMonadic)
            {
                Side::Right
            } else {
                Side::Left
            };
            check_bimonad(b, side)
        }
        Structure::Sweedler(d) => check_sweedler_datum(d),
        Structure::HausserNill(h) => check_hn_datum(h),
        Structure::YD(y) => check_yd(y, true),
        Structure::Relative(r) => check_relative(r),
        Structure::DistLaw(_) | Structure::Module(_) | Structure::Comodule(_) => {
            Err(Error::KindUnsupported(format!(
                "a standalone {} has no suite; check the structure that carries it",
                s.kind()
            )))
        }
    }
}
