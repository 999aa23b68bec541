//! Yetter-Drinfel'd modules over bimonads and relative modules.

use super::basic::{check_bimonad, check_comodule, check_module, dist_law_report, single_failure, Leg};
use super::Suite;
use crate::error::Result;
use crate::lincat::{CellType, Chain};
use crate::report::AxiomSuiteReport;
use crate::structures::{require_shapes, DistKind, RelativeModuleDesc, Side, YDModuleDesc};

/// Distributive laws, the YD condition and, when `strong`, the exchange
/// identity of `ψ`, `λ`, `φ`. Right-sided modules use the mirrored
/// equations.
pub fn check_yd(y: &YDModuleDesc, strong: bool) -> Result<AxiomSuiteReport> {
    require_shapes(y.validate_shapes())?;
    let bm = &y.bimonad;
    let (m, c) = (&bm.monad, &bm.comonad);
    let fl = y.field();
    let f = m.ty();
    let x = &y.x;
    let lx = x.len();
    let lam = &bm.lambda.cell;
    let (psi, phi) = (&y.psi.cell, &y.phi.cell);
    let act = y.action()?;
    let coact = y.coaction()?;
    let side = y.side;
    let mut s = Suite::new(match side {
        Side::Left => "yd",
        Side::Right => "yd right",
    });
    s.sub("bimonad", move || {
        check_bimonad(bm, side).unwrap_or_else(|e| single_failure("bimonad", "shapes", e))
    });
    let leg = Leg::Bi(m, c);
    match side {
        Side::Left => {
            s.report(move || dist_law_report("psi monadic", &y.psi, leg, Leg::Plain, DistKind::LeftMonadic));
            s.report(move || {
                dist_law_report("phi comonadic", &y.phi, Leg::Plain, leg, DistKind::RightComonadic)
            });
            let fx = f.concat(x);
            let fx2 = fx.clone();
            s.law("YD condition", move || {
                let l = Chain::start(&fx, fl)
                    .at(0, psi)?
                    .at(lx + 1, &m.eta)?
                    .at(lx, lam)?
                    .at(0, phi)?
                    .at(1 + lx, &c.eps)?
                    .done();
                let r = Chain::start(&fx, fl)
                    .at(1, &coact)?
                    .at(0, lam)?
                    .at(1, &act)?
                    .done();
                Ok((l, r))
            });
            if strong {
                let fxf = fx2.concat(&f);
                s.law("psi-lambda-phi", move || {
                    let l = Chain::start(&fxf, fl).at(0, psi)?.at(lx, lam)?.at(0, phi)?.done();
                    let r = Chain::start(&fxf, fl).at(1, phi)?.at(0, lam)?.at(1, psi)?.done();
                    Ok((l, r))
                });
            }
        }
        Side::Right => {
            s.report(move || dist_law_report("psi monadic", &y.psi, Leg::Plain, leg, DistKind::RightMonadic));
            s.report(move || {
                dist_law_report("phi comonadic", &y.phi, leg, Leg::Plain, DistKind::LeftComonadic)
            });
            let xf = x.concat(&f);
            let fxf = CellType::join(&[&f, x, &f]);
            s.law("YD condition", move || {
                let l = Chain::start(&xf, fl)
                    .at(0, psi)?
                    .at(0, &m.eta)?
                    .at(0, lam)?
                    .at(1, phi)?
                    .at(0, &c.eps)?
                    .done();
                let r = Chain::start(&xf, fl)
                    .at(0, &coact)?
                    .at(lx, lam)?
                    .at(0, &act)?
                    .done();
                Ok((l, r))
            });
            if strong {
                s.law("psi-lambda-phi", move || {
                    let l = Chain::start(&fxf, fl).at(1, psi)?.at(0, lam)?.at(1, phi)?.done();
                    let r = Chain::start(&fxf, fl).at(0, phi)?.at(lx, lam)?.at(0, psi)?.done();
                    Ok((l, r))
                });
            }
        }
    }
    Ok(s.finish())
}

/// Module laws, comodule laws and their compatibility through `ψ_{B,F}`.
pub fn check_relative(r: &RelativeModuleDesc) -> Result<AxiomSuiteReport> {
    require_shapes(r.validate_shapes())?;
    let fl = r.field();
    let md = r.module();
    let cd = r.comodule();
    let mut s = Suite::new("relative module");
    s.sub("module", move || {
        check_module(&md, &r.b).unwrap_or_else(|e| single_failure("module", "assoc", e))
    });
    s.sub("comodule", move || {
        check_comodule(&cd, &r.f).unwrap_or_else(|e| single_failure("comodule", "coassoc", e))
    });
    let (b, m) = (r.b.ty(), &r.m);
    let (nu, rho, psi) = (&r.action, &r.coaction, &r.psi_bf.cell);
    match r.side {
        Side::Left => {
            let bm = b.concat(m);
            s.law("compatibility", move || {
                let l = Chain::start(&bm, fl).then(nu)?.then(rho)?.done();
                let rr = Chain::start(&bm, fl).at(1, rho)?.at(0, psi)?.at(1, nu)?.done();
                Ok((l, rr))
            });
        }
        Side::Right => {
            let mb = m.concat(&b);
            let lm = m.len();
            s.law("compatibility", move || {
                let l = Chain::start(&mb, fl).then(nu)?.then(rho)?.done();
                let rr = Chain::start(&mb, fl).at(0, rho)?.at(lm, psi)?.at(0, nu)?.done();
                Ok((l, rr))
            });
        }
    }
    Ok(s.finish())
}
