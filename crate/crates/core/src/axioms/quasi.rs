//! Quasi-bimonads, coquasi-bimonads and 1-cells of the 2-category of
//! quasi-bimonads.

use super::basic::{check_comonad, check_monad, dist_law_report, single_failure, unit_compat, Leg};
use super::{all_of, Suite};
use crate::diagram::{counit_power, mul_elems, nabla_onto, rounds, single_tau, spread, unit_power};
use crate::error::{Error, Result};
use crate::lincat::{comp, hcomp, tensor, CellType, Chain, TwoCell};
use crate::report::{law, AxiomSuiteReport};
use crate::structures::{
    require_shapes, ComonadDesc, CoquasiBimonadDesc, DistKind, DistLaw, MonadDesc,
    QuasiBimonadDesc,
};

fn structure_laws<'a>(
    s: &mut Suite<'a>,
    m: &'a MonadDesc,
    c: &'a ComonadDesc,
    tau: &'a DistLaw,
) {
    s.sub("monad", || check_monad(m).unwrap_or_else(|e| single_failure("monad", "assoc", e)));
    s.sub("comonad", || {
        check_comonad(c).unwrap_or_else(|e| single_failure("comonad", "coassoc", e))
    });
    let leg = Leg::Bi(m, c);
    for k in tau.kinds.iter().copied() {
        s.report(move || dist_law_report(&format!("tau_FF {k}"), tau, leg, leg, k));
    }
    let f = m.field();
    s.law("Delta mult", move || {
        let ff = m.ty().concat(&m.ty());
        let lhs = comp(&[&c.delta, &m.mu])?;
        let rhs = Chain::start(&ff, f)
            .at(0, &c.delta)?
            .at(2, &c.delta)?
            .at(1, &tau.cell)?
            .at(0, &m.mu)?
            .at(1, &m.mu)?
            .done();
        Ok((lhs, rhs))
    });
    unit_compat(s, m, c);
}

/// `(Δ⊗id)Δ` and `(id⊗Δ)Δ`.
fn delta_left(c: &ComonadDesc) -> Result<TwoCell> {
    Chain::from(c.delta.clone()).at(0, &c.delta).map(Chain::done)
}

fn delta_right(c: &ComonadDesc) -> Result<TwoCell> {
    Chain::from(c.delta.clone()).at(1, &c.delta).map(Chain::done)
}

/// Full quasi-bimonad suite. The stored `phi_inv` is required.
pub fn check_quasi_bimonad(q: &QuasiBimonadDesc) -> Result<AxiomSuiteReport> {
    require_shapes(q.validate_shapes())?;
    let phi_inv = q
        .phi_inv
        .as_ref()
        .ok_or_else(|| Error::MissingInverse("quasi-bimonad without phi_inv".into()))?;
    let (m, c, tau, phi) = (&q.monad, &q.comonad, &q.tau_ff.cell, &q.phi);
    let f = m.field();
    let fty = m.ty();
    let mut s = Suite::new("quasi-bimonad");
    structure_laws(&mut s, m, c, &q.tau_ff);
    s.law("Phi normalized", move || {
        let l = Chain::from(phi.clone()).at(1, &c.eps)?.done();
        Ok((l, tensor(&[&m.eta, &m.eta])?))
    });
    s.law("quasi coass.", move || {
        let ms = [m, m, m];
        let prod = |x: TwoCell| nabla_onto(Chain::from(x), &ms, single_tau(tau)).map(Chain::done);
        let l = prod(hcomp(phi, &delta_left(c)?)?)?;
        let r = prod(hcomp(&delta_right(c)?, phi)?)?;
        Ok((l, r))
    });
    s.law("3-coc. cond.", move || {
        let a = hcomp(&m.eta, phi)?;
        let b = Chain::from(phi.clone()).at(1, &c.delta)?.done();
        let cc = hcomp(phi, &m.eta)?;
        let l = mul_elems(m, tau, &mul_elems(m, tau, &a, &b)?, &cc)?;
        let x = Chain::from(phi.clone()).at(2, &c.delta)?.done();
        let y = Chain::from(phi.clone()).at(0, &c.delta)?.done();
        let r = mul_elems(m, tau, &x, &y)?;
        Ok((l, r))
    });
    let fty2 = fty.clone();
    s.law("Phi nat new", move || {
        let l = Chain::start(&fty2, f).at(0, phi)?.done();
        let r = Chain::start(&fty2, f)
            .at(1, phi)?
            .at(0, tau)?
            .at(1, tau)?
            .at(2, tau)?
            .done();
        Ok((l, r))
    });
    s.report(move || {
        let unit = match unit_power(m, 3) {
            Ok(u) => u,
            Err(e) => return crate::report::CheckReport::fail("Phi invertible", e.to_string()),
        };
        let left = law("Phi^-1 * Phi", || Ok((mul_elems(m, tau, phi_inv, phi)?, unit.clone())));
        let right = law("Phi * Phi^-1", || Ok((mul_elems(m, tau, phi, phi_inv)?, unit.clone())));
        all_of("Phi invertible", vec![left, right])
    });
    Ok(s.finish())
}

/// Ordinary bialgebra laws with respect to `tau_FF`: the quasi-bimonad
/// suite without the associator.
pub fn check_bialgebra(
    m: &MonadDesc,
    c: &ComonadDesc,
    tau: &DistLaw,
) -> Result<AxiomSuiteReport> {
    let mut s = Suite::new("bialgebra");
    structure_laws(&mut s, m, c, tau);
    Ok(s.finish())
}

/// Product `f * g = (f ⊗ g) Δ_{F^3}` of functionals on `FFF`.
fn conv_fff(c: &ComonadDesc, tau: &TwoCell, a: &TwoCell, b: &TwoCell) -> Result<TwoCell> {
    let d = spread(c, tau, &[2, 2, 2], &rounds(3, 2))?;
    comp(&[&hcomp(a, b)?, &d])
}

pub fn check_coquasi_bimonad(q: &CoquasiBimonadDesc) -> Result<AxiomSuiteReport> {
    require_shapes(q.validate_shapes())?;
    let omega_inv = q
        .omega_inv
        .as_ref()
        .ok_or_else(|| Error::MissingInverse("coquasi-bimonad without omega_inv".into()))?;
    let (m, c, tau, omega) = (&q.monad, &q.comonad, &q.tau_ff.cell, &q.omega);
    let f = m.field();
    let fty = m.ty();
    let mut s = Suite::new("coquasi-bimonad");
    structure_laws(&mut s, m, c, &q.tau_ff);
    let fff = CellType::join(&[&fty, &fty, &fty]);
    let fff2 = fff.clone();
    s.law("omega normalized", move || {
        let ff = fty.concat(&fty);
        let l = Chain::start(&ff, f).at(1, &m.eta)?.then(omega)?.done();
        Ok((l, tensor(&[&c.eps, &c.eps])?))
    });
    s.law("quasi-assoc", move || {
        let d = spread(c, tau, &[2, 2, 2], &rounds(3, 2))?;
        let right_mu = Chain::start(&fff2, f).at(1, &m.mu)?.at(0, &m.mu)?.done();
        let left_mu = Chain::start(&fff2, f).at(0, &m.mu)?.at(0, &m.mu)?.done();
        let l = comp(&[&hcomp(&right_mu, omega)?, &d])?;
        let r = comp(&[&hcomp(omega, &left_mu)?, &d])?;
        Ok((l, r))
    });
    s.law("3-cocycle", move || {
        let order_l = [
            (1, 0),
            (2, 0),
            (3, 0),
            (0, 0),
            (1, 1),
            (2, 1),
            (3, 1),
            (0, 1),
            (1, 2),
            (2, 2),
        ];
        let l = Chain::from(spread(c, tau, &[2, 3, 3, 2], &order_l)?)
            .at(0, omega)?
            .at(1, &m.mu)?
            .at(0, omega)?
            .at(0, omega)?
            .done();
        let r = Chain::from(spread(c, tau, &[2, 2, 2, 2], &rounds(4, 2))?)
            .at(2, &m.mu)?
            .at(0, omega)?
            .at(0, &m.mu)?
            .at(0, omega)?
            .done();
        Ok((l, r))
    });
    let ffff = fff.concat(&m.ty());
    s.law("dual cond", move || {
        let l = Chain::start(&ffff, f).at(1, omega)?.done();
        let r = Chain::start(&ffff, f)
            .at(0, tau)?
            .at(1, tau)?
            .at(2, tau)?
            .at(0, omega)?
            .done();
        Ok((l, r))
    });
    s.report(move || {
        let unit = match counit_power(c, 3) {
            Ok(u) => u,
            Err(e) => return crate::report::CheckReport::fail("omega invertible", e.to_string()),
        };
        let left = law("omega^-1 * omega", || {
            Ok((conv_fff(c, tau, omega_inv, omega)?, unit.clone()))
        });
        let right = law("omega * omega^-1", || {
            Ok((conv_fff(c, tau, omega, omega_inv)?, unit.clone()))
        });
        all_of("omega invertible", vec![left, right])
    });
    Ok(s.finish())
}

/// A 1-cell `(X, τ_{F,X})` of the 2-category of quasi-bimonads.
pub fn check_qb_one_cell(
    x: &CellType,
    tau_fx: &DistLaw,
    q: &QuasiBimonadDesc,
) -> Result<AxiomSuiteReport> {
    require_shapes(q.validate_shapes())?;
    require_shapes(tau_fx.validate_shapes())?;
    let fty = q.monad.ty();
    if tau_fx.over != fty || &tau_fx.under != x {
        return Err(Error::TypeMismatch {
            expected: format!("{}{} -> {}{}", fty, x, x, fty),
            found: format!("{} -> {}", tau_fx.cell.dom(), tau_fx.cell.cod()),
        });
    }
    let (m, c) = (&q.monad, &q.comonad);
    let f = m.field();
    let leg = Leg::Bi(m, c);
    let mut s = Suite::new("qb 1-cell");
    s.report(move || {
        dist_law_report("monadic d.l.", tau_fx, leg, Leg::Plain, DistKind::LeftMonadic)
    });
    s.report(move || {
        dist_law_report("comonadic d.l.", tau_fx, leg, Leg::Plain, DistKind::LeftComonadic)
    });
    let t = &tau_fx.cell;
    let phi = &q.phi;
    s.law("Phi nat", move || {
        let l = Chain::start(x, f).at(x.len(), phi)?.done();
        let r = Chain::start(x, f)
            .at(0, phi)?
            .at(2, t)?
            .at(1, t)?
            .at(0, t)?
            .done();
        Ok((l, r))
    });
    let tff = &q.tau_ff.cell;
    s.report(move || {
        super::basic::check_yang_baxter("YBE BBX", tff, t, t, (&fty, &fty, x))
    });
    Ok(s.finish())
}
