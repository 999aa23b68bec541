//! Monads, comonads, distributive laws, (co)modules, Tambara modules,
//! the Yang-Baxter equation and bimonads.

use super::{all_of, Suite};
use crate::error::{Error, Result};
use crate::lincat::{comp, identity, scalar_cell, tensor, CellType, Chain, TwoCell};
use crate::report::{law, AxiomSuiteReport, CheckReport};
use crate::scalar::Scalar;
use crate::structures::{
    require_shapes, BimonadDesc, ComoduleDesc, ComonadDesc, DistKind, DistLaw, ModuleDesc,
    MonadDesc, Side, TambaraModuleDesc,
};

pub fn check_monad(m: &MonadDesc) -> Result<AxiomSuiteReport> {
    require_shapes(m.validate_shapes())?;
    let b = m.ty();
    let bbb = CellType::join(&[&b, &b, &b]);
    let f = m.field();
    let mut s = Suite::new("monad");
    s.law("assoc", || {
        let l = Chain::start(&bbb, f).at(0, &m.mu)?.at(0, &m.mu)?.done();
        let r = Chain::start(&bbb, f).at(1, &m.mu)?.at(0, &m.mu)?.done();
        Ok((l, r))
    });
    s.law("left unit", || {
        let l = Chain::start(&b, f).at(0, &m.eta)?.at(0, &m.mu)?.done();
        Ok((l, identity(&b, f)))
    });
    s.law("right unit", || {
        let l = Chain::start(&b, f).at(1, &m.eta)?.at(0, &m.mu)?.done();
        Ok((l, identity(&b, f)))
    });
    Ok(s.finish())
}

pub fn check_comonad(c: &ComonadDesc) -> Result<AxiomSuiteReport> {
    require_shapes(c.validate_shapes())?;
    let t = c.ty();
    let f = c.field();
    let mut s = Suite::new("comonad");
    s.law("coassoc", || {
        let l = Chain::start(&t, f).at(0, &c.delta)?.at(0, &c.delta)?.done();
        let r = Chain::start(&t, f).at(0, &c.delta)?.at(1, &c.delta)?.done();
        Ok((l, r))
    });
    s.law("left counit", || {
        let l = Chain::start(&t, f).at(0, &c.delta)?.at(0, &c.eps)?.done();
        Ok((l, identity(&t, f)))
    });
    s.law("right counit", || {
        let l = Chain::start(&t, f).at(0, &c.delta)?.at(1, &c.eps)?.done();
        Ok((l, identity(&t, f)))
    });
    Ok(s.finish())
}

/// The structure carried by one leg of a distributive law.
#[derive(Clone, Copy, Debug)]
pub enum Leg<'a> {
    Plain,
    Monad(&'a MonadDesc),
    Comonad(&'a ComonadDesc),
    Bi(&'a MonadDesc, &'a ComonadDesc),
}

impl<'a> Leg<'a> {
    fn monad(self) -> Option<&'a MonadDesc> {
        match self {
            Leg::Monad(m) | Leg::Bi(m, _) => Some(m),
            _ => None,
        }
    }

    fn comonad(self) -> Option<&'a ComonadDesc> {
        match self {
            Leg::Comonad(c) | Leg::Bi(_, c) => Some(c),
            _ => None,
        }
    }
}

fn leg_type(t: &CellType, carrier: &CellType, what: &str) -> Result<()> {
    if t != carrier {
        return Err(Error::KindUnsupported(format!(
            "{what} on {carrier} but the leg is {t}"
        )));
    }
    Ok(())
}

/// The two diagrams of one kind of distributive law `d: [a, b] -> [b, a]`
/// with `a = over`, `b = under`.
pub fn check_dist_law(
    d: &DistLaw,
    over: Leg<'_>,
    under: Leg<'_>,
    kind: DistKind,
) -> Result<AxiomSuiteReport> {
    require_shapes(d.validate_shapes())?;
    let (a, b) = (&d.over, &d.under);
    let (la, lb) = (a.len(), b.len());
    let f = d.field();
    let cell = &d.cell;
    let leg = if kind.on_over() { over } else { under };
    let name = kind.name();
    let mut s = Suite::new(&format!("dist law {}", kind.name()));
    let id = |what: &str| format!("{name} {what}");
    match kind {
        DistKind::LeftMonadic => {
            let m = leg
                .monad()
                .ok_or_else(|| Error::KindUnsupported(format!("{name}: no monad on over leg")))?;
            leg_type(a, &m.ty(), "monad")?;
            s.law(&id("mult"), move || {
                let dom = CellType::join(&[a, a, b]);
                let l = Chain::start(&dom, f).at(0, &m.mu)?.at(0, cell)?.done();
                let r = Chain::start(&dom, f)
                    .at(la, cell)?
                    .at(0, cell)?
                    .at(lb, &m.mu)?
                    .done();
                Ok((l, r))
            });
            s.law(&id("unit"), move || {
                let l = Chain::start(b, f).at(0, &m.eta)?.at(0, cell)?.done();
                let r = Chain::start(b, f).at(lb, &m.eta)?.done();
                Ok((l, r))
            });
        }
        DistKind::RightMonadic => {
            let m = leg
                .monad()
                .ok_or_else(|| Error::KindUnsupported(format!("{name}: no monad on under leg")))?;
            leg_type(b, &m.ty(), "monad")?;
            s.law(&id("mult"), move || {
                let dom = CellType::join(&[a, b, b]);
                let l = Chain::start(&dom, f).at(la, &m.mu)?.at(0, cell)?.done();
                let r = Chain::start(&dom, f)
                    .at(0, cell)?
                    .at(lb, cell)?
                    .at(0, &m.mu)?
                    .done();
                Ok((l, r))
            });
            s.law(&id("unit"), move || {
                let l = Chain::start(a, f).at(la, &m.eta)?.at(0, cell)?.done();
                let r = Chain::start(a, f).at(0, &m.eta)?.done();
                Ok((l, r))
            });
        }
        DistKind::LeftComonadic => {
            let c = leg.comonad().ok_or_else(|| {
                Error::KindUnsupported(format!("{name}: no comonad on over leg"))
            })?;
            leg_type(a, &c.ty(), "comonad")?;
            let ab = a.concat(b);
            s.law(&id("comult"), move || {
                let l = Chain::start(&ab, f).at(0, cell)?.at(lb, &c.delta)?.done();
                let r = Chain::start(&ab, f)
                    .at(0, &c.delta)?
                    .at(la, cell)?
                    .at(0, cell)?
                    .done();
                Ok((l, r))
            });
            let ab = a.concat(b);
            s.law(&id("counit"), move || {
                let l = Chain::start(&ab, f).at(0, cell)?.at(lb, &c.eps)?.done();
                let r = Chain::start(&ab, f).at(0, &c.eps)?.done();
                Ok((l, r))
            });
        }
        DistKind::RightComonadic => {
            let c = leg.comonad().ok_or_else(|| {
                Error::KindUnsupported(format!("{name}: no comonad on under leg"))
            })?;
            leg_type(b, &c.ty(), "comonad")?;
            let ab = a.concat(b);
            s.law(&id("comult"), move || {
                let l = Chain::start(&ab, f).at(0, cell)?.at(0, &c.delta)?.done();
                let r = Chain::start(&ab, f)
                    .at(la, &c.delta)?
                    .at(0, cell)?
                    .at(lb, cell)?
                    .done();
                Ok((l, r))
            });
            let ab = a.concat(b);
            s.law(&id("counit"), move || {
                let l = Chain::start(&ab, f).at(0, cell)?.at(0, &c.eps)?.done();
                let r = Chain::start(&ab, f).at(la, &c.eps)?.done();
                Ok((l, r))
            });
        }
    }
    Ok(s.finish())
}

/// All kinds declared on `d`, in the fixed kind order.
pub fn check_declared_kinds(
    d: &DistLaw,
    over: Leg<'_>,
    under: Leg<'_>,
) -> Result<AxiomSuiteReport> {
    let mut out = AxiomSuiteReport::new("dist law");
    for k in &d.kinds {
        out.extend(check_dist_law(d, over, under, *k)?);
    }
    Ok(out)
}

/// One kind folded into a single report.
pub fn dist_law_report(
    id: &str,
    d: &DistLaw,
    over: Leg<'_>,
    under: Leg<'_>,
    kind: DistKind,
) -> CheckReport {
    match check_dist_law(d, over, under, kind) {
        Ok(r) => all_of(id, r.reports),
        Err(e) => CheckReport::fail(id, e.to_string()),
    }
}

pub fn check_module(m: &ModuleDesc, monad: &MonadDesc) -> Result<AxiomSuiteReport> {
    require_shapes(m.validate_shapes())?;
    require_shapes(monad.validate_shapes())?;
    if m.acting != monad.carrier {
        return Err(Error::TypeMismatch {
            expected: monad.carrier.to_string(),
            found: m.acting.to_string(),
        });
    }
    let b = monad.ty();
    let x = &m.carrier;
    let f = monad.field();
    let nu = &m.action;
    let mut s = Suite::new("module");
    match m.side {
        Side::Left => {
            s.law("assoc", move || {
                let dom = CellType::join(&[&b, &b, x]);
                let l = Chain::start(&dom, f).at(0, &monad.mu)?.then(nu)?.done();
                let r = Chain::start(&dom, f).at(1, nu)?.then(nu)?.done();
                Ok((l, r))
            });
            s.law("unit", move || {
                let l = Chain::start(x, f).at(0, &monad.eta)?.then(nu)?.done();
                Ok((l, identity(x, f)))
            });
        }
        Side::Right => {
            let lx = x.len();
            s.law("assoc", move || {
                let dom = CellType::join(&[x, &b, &b]);
                let l = Chain::start(&dom, f).at(lx, &monad.mu)?.then(nu)?.done();
                let r = Chain::start(&dom, f).at(0, nu)?.then(nu)?.done();
                Ok((l, r))
            });
            s.law("unit", move || {
                let l = Chain::start(x, f).at(lx, &monad.eta)?.then(nu)?.done();
                Ok((l, identity(x, f)))
            });
        }
    }
    Ok(s.finish())
}

pub fn check_comodule(m: &ComoduleDesc, comonad: &ComonadDesc) -> Result<AxiomSuiteReport> {
    require_shapes(m.validate_shapes())?;
    require_shapes(comonad.validate_shapes())?;
    if m.acting != comonad.carrier {
        return Err(Error::TypeMismatch {
            expected: comonad.carrier.to_string(),
            found: m.acting.to_string(),
        });
    }
    let x = &m.carrier;
    let f = comonad.field();
    let rho = &m.coaction;
    let lx = x.len();
    let mut s = Suite::new("comodule");
    match m.side {
        Side::Left => {
            s.law("coassoc", move || {
                let l = Chain::from(rho.clone()).at(0, &comonad.delta)?.done();
                let r = Chain::from(rho.clone()).at(1, rho)?.done();
                Ok((l, r))
            });
            s.law("counit", move || {
                let l = Chain::from(rho.clone()).at(0, &comonad.eps)?.done();
                Ok((l, identity(x, f)))
            });
        }
        Side::Right => {
            s.law("coassoc", move || {
                let l = Chain::from(rho.clone()).at(lx, &comonad.delta)?.done();
                let r = Chain::from(rho.clone()).at(0, rho)?.done();
                Ok((l, r))
            });
            s.law("counit", move || {
                let l = Chain::from(rho.clone()).at(lx, &comonad.eps)?.done();
                Ok((l, identity(x, f)))
            });
        }
    }
    Ok(s.finish())
}

pub fn check_tambara(t: &TambaraModuleDesc) -> Result<AxiomSuiteReport> {
    require_shapes(t.validate_shapes())?;
    let b = t.base.ty();
    let f = t.base.field();
    let mut s = Suite::new("tambara");
    s.sub("tau", || {
        check_dist_law(&t.tau, Leg::Monad(&t.base), Leg::Plain, DistKind::LeftMonadic)
            .unwrap_or_else(|e| single_failure("tau", "left-monadic", e))
    });
    s.sub("nu", || {
        check_module(&t.nu, &t.base).unwrap_or_else(|e| single_failure("module", "assoc", e))
    });
    let x = &t.x;
    s.law("nat lm", move || {
        let dom = CellType::join(&[&b, &b, x]);
        let nu = &t.nu.action;
        let l = Chain::start(&dom, f).at(1, nu)?.at(0, &t.tau.cell)?.done();
        let r = Chain::start(&dom, f)
            .at(0, &t.tau_bb.cell)?
            .at(1, &t.tau.cell)?
            .at(0, nu)?
            .done();
        Ok((l, r))
    });
    Ok(s.finish())
}

pub(crate) fn single_failure(suite: &str, id: &str, e: Error) -> AxiomSuiteReport {
    let mut r = AxiomSuiteReport::new(suite);
    r.push(CheckReport::fail(id, e.to_string()));
    r
}

/// `(id_c⊗t12)(t13⊗id_b)(id_a⊗t23) = (t23⊗id_a)(id_b⊗t13)(t12⊗id_c)` on
/// the string `a b c`, where `tij` crosses legs `i` and `j`.
pub fn check_yang_baxter(
    id: &str,
    t12: &TwoCell,
    t13: &TwoCell,
    t23: &TwoCell,
    legs: (&CellType, &CellType, &CellType),
) -> CheckReport {
    let (a, b, c) = legs;
    law(id, || {
        let f = t12.field();
        let dom = CellType::join(&[a, b, c]);
        let l = Chain::start(&dom, f)
            .at(a.len(), t23)?
            .at(0, t13)?
            .at(c.len(), t12)?
            .done();
        let r = Chain::start(&dom, f)
            .at(0, t12)?
            .at(b.len(), t13)?
            .at(0, t23)?
            .done();
        Ok((l, r))
    })
}

/// `z ∘ src = dst ∘ (id_B ⊗ z)` for left actions `src: BX -> X`,
/// `dst: BY -> Y` and `z: X -> Y`.
pub fn check_left_linear(z: &TwoCell, src_action: &TwoCell, dst_action: &TwoCell) -> CheckReport {
    law("left linear", || {
        let nb = src_action.dom().len() - src_action.cod().len();
        let b = src_action.dom().slice(0, nb);
        let l = comp(&[z, src_action])?;
        let r = comp(&[dst_action, &tensor(&[&identity(&b, z.field()), z])?])?;
        Ok((l, r))
    })
}

/// Bimonad laws: the monad and comonad, the kinds of `λ` and the
/// compatibilities of `Δ`, `ε` with `μ`, `η`. On the left side
/// `Δμ = (id⊗μ)(λ⊗id)(id⊗Δ)`; the right side is the mirror.
pub fn check_bimonad(bm: &BimonadDesc, side: Side) -> Result<AxiomSuiteReport> {
    require_shapes(bm.validate_shapes())?;
    let (m, c) = (&bm.monad, &bm.comonad);
    let ff = m.ty().concat(&m.ty());
    let f = m.field();
    let mut s = Suite::new("bimonad");
    s.sub("monad", || check_monad(m).unwrap_or_else(|e| single_failure("monad", "assoc", e)));
    s.sub("comonad", || {
        check_comonad(c).unwrap_or_else(|e| single_failure("comonad", "coassoc", e))
    });
    let leg = Leg::Bi(m, c);
    let (k1, k2) = match side {
        Side::Left => (DistKind::LeftMonadic, DistKind::RightComonadic),
        Side::Right => (DistKind::RightMonadic, DistKind::LeftComonadic),
    };
    let l = &bm.lambda;
    s.report(move || dist_law_report(&format!("lambda {k1}"), l, leg, leg, k1));
    s.report(move || dist_law_report(&format!("lambda {k2}"), l, leg, leg, k2));
    let ff2 = ff.clone();
    s.law("Delta mult", move || {
        let lhs = comp(&[&c.delta, &m.mu])?;
        let rhs = match side {
            Side::Left => Chain::start(&ff2, f)
                .at(1, &c.delta)?
                .at(0, &l.cell)?
                .at(1, &m.mu)?
                .done(),
            Side::Right => Chain::start(&ff2, f)
                .at(0, &c.delta)?
                .at(1, &l.cell)?
                .at(0, &m.mu)?
                .done(),
        };
        Ok((lhs, rhs))
    });
    unit_compat(&mut s, m, c);
    Ok(s.finish())
}

/// `εμ = ε⊗ε`, `Δη = η⊗η`, `εη = 1`.
pub(crate) fn unit_compat<'a>(s: &mut Suite<'a>, m: &'a MonadDesc, c: &'a ComonadDesc) {
    s.law("Delta unit", move || {
        Ok((comp(&[&c.delta, &m.eta])?, tensor(&[&m.eta, &m.eta])?))
    });
    s.law("eps mult", move || {
        Ok((comp(&[&c.eps, &m.mu])?, tensor(&[&c.eps, &c.eps])?))
    });
    s.law("eps unit", move || {
        Ok((
            comp(&[&c.eps, &m.eta])?,
            scalar_cell(Scalar::one(m.field())),
        ))
    });
}
