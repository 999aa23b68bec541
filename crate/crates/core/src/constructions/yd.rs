//! Yetter-Drinfel'd modules from crossings, their tensor products, the
//! action on relative modules and mirror images.

use super::modules::{comodule_on_xm, module_on_xm, psi_from_action};
use crate::error::{Error, Result};
use crate::lincat::{Chain, TwoCell};
use crate::structures::{
    BimonadDesc, ComoduleDesc, ComonadDesc, CoquasiBimonadDesc, DistKind, DistLaw, ModuleDesc,
    MonadDesc, QuasiBimonadDesc, RelativeModuleDesc, Side, Structure, TambaraModuleDesc,
    YDModuleDesc,
};

/// `λ = (μ ⊗ id)(id ⊗ τ_{F,F})(Δ ⊗ id)` on the left,
/// `(id ⊗ μ)(τ_{F,F} ⊗ id)(id ⊗ Δ)` on the right.
pub fn bimonad_from_tau(m: &MonadDesc, c: &ComonadDesc, tau_ff: &TwoCell, side: Side) -> Result<BimonadDesc> {
    let f = m.ty();
    let ff = f.concat(&f);
    let ch = Chain::start(&ff, m.field());
    let (cell, kinds) = match side {
        Side::Left => (
            ch.at(0, &c.delta)?.at(1, tau_ff)?.at(0, &m.mu)?.done(),
            [DistKind::LeftMonadic, DistKind::RightComonadic],
        ),
        Side::Right => (
            ch.at(1, &c.delta)?.at(0, tau_ff)?.at(1, &m.mu)?.done(),
            [DistKind::RightMonadic, DistKind::LeftComonadic],
        ),
    };
    Ok(BimonadDesc {
        monad: m.clone(),
        comonad: c.clone(),
        lambda: DistLaw::new(f.clone(), f, cell, &kinds),
    })
}

/// `λ`, `ψ`, `φ` from crossings and a (co)action. Left side: `action:
/// FX -> X`, `coaction: X -> FX`, `ψ = (▷ ⊗ id)(id ⊗ τ_{F,X})(Δ ⊗ id)`,
/// `φ = (μ ⊗ id)(id ⊗ τ_{X,F})(coaction ⊗ id)`. Right side: `action: XF
/// -> X`, `coaction: X -> XF` and the mirrored formulas.
#[allow(clippy::too_many_arguments)]
pub fn yd_from_tau(
    m: &MonadDesc,
    c: &ComonadDesc,
    tau_ff: &TwoCell,
    tau_fx: &TwoCell,
    tau_xf: &TwoCell,
    action: &TwoCell,
    coaction: &TwoCell,
    side: Side,
) -> Result<YDModuleDesc> {
    let bimonad = bimonad_from_tau(m, c, tau_ff, side)?;
    let f = m.ty();
    let fl = m.field();
    let (psi, phi, x) = match side {
        Side::Left => {
            let x = action.cod().clone();
            let psi = Chain::start(&f.concat(&x), fl)
                .at(0, &c.delta)?
                .at(1, tau_fx)?
                .at(0, action)?
                .done();
            let phi = Chain::start(&x.concat(&f), fl)
                .at(0, coaction)?
                .at(1, tau_xf)?
                .at(0, &m.mu)?
                .done();
            (
                DistLaw::new(f.clone(), x.clone(), psi, &[DistKind::LeftMonadic]),
                DistLaw::new(x.clone(), f.clone(), phi, &[DistKind::RightComonadic]),
                x,
            )
        }
        Side::Right => {
            let x = action.cod().clone();
            let lx = x.len();
            let psi = Chain::start(&x.concat(&f), fl)
                .at(lx, &c.delta)?
                .at(0, tau_xf)?
                .at(1, action)?
                .done();
            let phi = Chain::start(&f.concat(&x), fl)
                .at(1, coaction)?
                .at(0, tau_fx)?
                .at(lx, &m.mu)?
                .done();
            (
                DistLaw::new(x.clone(), f.clone(), psi, &[DistKind::RightMonadic]),
                DistLaw::new(f.clone(), x.clone(), phi, &[DistKind::LeftComonadic]),
                x,
            )
        }
    };
    Ok(YDModuleDesc {
        bimonad,
        x,
        psi,
        phi,
        side,
    })
}

/// Monoidal product of two YD modules over the same bimonad.
pub fn tensor_yd(a: &YDModuleDesc, b: &YDModuleDesc) -> Result<YDModuleDesc> {
    if a.bimonad != b.bimonad || a.side != b.side {
        return Err(Error::ContextMismatch("YD modules over different bimonads".into()));
    }
    let fl = a.field();
    let f = a.bimonad.monad.ty();
    let (x, y) = (&a.x, &b.x);
    let lx = x.len();
    let xy = x.concat(y);
    let (psi, phi) = match a.side {
        Side::Left => {
            let psi = Chain::start(&f.concat(&xy), fl)
                .at(0, &a.psi.cell)?
                .at(lx, &b.psi.cell)?
                .done();
            let phi = Chain::start(&xy.concat(&f), fl)
                .at(lx, &b.phi.cell)?
                .at(0, &a.phi.cell)?
                .done();
            (
                DistLaw::new(f.clone(), xy.clone(), psi, &[DistKind::LeftMonadic]),
                DistLaw::new(xy.clone(), f.clone(), phi, &[DistKind::RightComonadic]),
            )
        }
        Side::Right => {
            let psi = Chain::start(&xy.concat(&f), fl)
                .at(lx, &b.psi.cell)?
                .at(0, &a.psi.cell)?
                .done();
            let phi = Chain::start(&f.concat(&xy), fl)
                .at(0, &a.phi.cell)?
                .at(lx, &b.phi.cell)?
                .done();
            (
                DistLaw::new(xy.clone(), f.clone(), psi, &[DistKind::RightMonadic]),
                DistLaw::new(f.clone(), xy.clone(), phi, &[DistKind::LeftComonadic]),
            )
        }
    };
    Ok(YDModuleDesc {
        bimonad: a.bimonad.clone(),
        x: xy,
        psi,
        phi,
        side: a.side,
    })
}

/// `XM` as a relative module: `B` acts through
/// `ψ_{B,X} = (▷ ⊗ id)(id ⊗ τ_{B,X})(λ_B ⊗ id)` with
/// `λ_B = ψ_{B,F}(id ⊗ η_F)`, and `F` coacts through `φ_{X,F}`.
pub fn act_yd(y: &YDModuleDesc, tau_bx: &DistLaw, m: &RelativeModuleDesc) -> Result<RelativeModuleDesc> {
    if y.side != Side::Left || m.side != Side::Left {
        return Err(Error::KindUnsupported("act_yd needs left data; use act_yd_right".into()));
    }
    let fl = y.field();
    let b = m.b.ty();
    let lambda_b = Chain::start(&b, fl)
        .at(1, &y.bimonad.monad.eta)?
        .then(&m.psi_bf.cell)?
        .done();
    let psi_bx = psi_from_action(tau_bx, &lambda_b, &y.action()?)?;
    Ok(RelativeModuleDesc {
        b: m.b.clone(),
        f: m.f.clone(),
        psi_bf: m.psi_bf.clone(),
        m: y.x.concat(&m.m),
        action: module_on_xm(&psi_bx, &m.action)?,
        coaction: comodule_on_xm(&y.phi, &m.coaction)?,
        side: Side::Left,
    })
}

/// Right-handed version on `MX`: action `(ν_M ⊗ id)(id_M ⊗ ψ_{X,B})` with
/// `ψ_{X,B} = (id ⊗ ◁)(τ_{X,B} ⊗ id)(id ⊗ λ_B)`, `λ_B = ψ_{F,B}(η_F ⊗ id)`,
/// coaction `(id_M ⊗ φ_{F,X})(ρ_M ⊗ id)`.
pub fn act_yd_right(y: &YDModuleDesc, tau_xb: &DistLaw, m: &RelativeModuleDesc) -> Result<RelativeModuleDesc> {
    if y.side != Side::Right || m.side != Side::Right {
        return Err(Error::KindUnsupported("act_yd_right needs right data".into()));
    }
    let fl = y.field();
    let b = m.b.ty();
    let (x, mm) = (&y.x, &m.m);
    let (lx, lm) = (x.len(), mm.len());
    let lambda_b = Chain::start(&b, fl)
        .at(0, &y.bimonad.monad.eta)?
        .then(&m.psi_bf.cell)?
        .done();
    let psi_xb = Chain::start(&x.concat(&b), fl)
        .at(lx, &lambda_b)?
        .at(0, &tau_xb.cell)?
        .at(b.len(), &y.action()?)?
        .done();
    let mx = mm.concat(x);
    let action = Chain::start(&mx.concat(&b), fl)
        .at(lm, &psi_xb)?
        .at(0, &m.action)?
        .done();
    let coaction = Chain::start(&mx, fl)
        .at(0, &m.coaction)?
        .at(lm, &y.phi.cell)?
        .done();
    Ok(RelativeModuleDesc {
        b: m.b.clone(),
        f: m.f.clone(),
        psi_bf: m.psi_bf.clone(),
        m: mx,
        action,
        coaction,
        side: Side::Right,
    })
}

fn mirror_law(d: &DistLaw) -> DistLaw {
    DistLaw {
        over: d.under.reversed(),
        under: d.over.reversed(),
        cell: d.cell.mirror(),
        kinds: d.kinds.iter().map(|k| k.mirror()).collect(),
    }
}

fn mirror_monad(m: &MonadDesc) -> MonadDesc {
    MonadDesc::new(m.carrier.clone(), m.mu.mirror(), m.eta.mirror())
}

fn mirror_comonad(c: &ComonadDesc) -> ComonadDesc {
    ComonadDesc::new(c.carrier.clone(), c.delta.mirror(), c.eps.mirror())
}

fn mirror_bimonad(b: &BimonadDesc) -> BimonadDesc {
    BimonadDesc {
        monad: mirror_monad(&b.monad),
        comonad: mirror_comonad(&b.comonad),
        lambda: mirror_law(&b.lambda),
    }
}

pub fn mirror_yd(y: &YDModuleDesc) -> YDModuleDesc {
    YDModuleDesc {
        bimonad: mirror_bimonad(&y.bimonad),
        x: y.x.reversed(),
        psi: mirror_law(&y.psi),
        phi: mirror_law(&y.phi),
        side: y.side.flip(),
    }
}

pub fn mirror_relative(r: &RelativeModuleDesc) -> RelativeModuleDesc {
    RelativeModuleDesc {
        b: mirror_monad(&r.b),
        f: mirror_comonad(&r.f),
        psi_bf: mirror_law(&r.psi_bf),
        m: r.m.reversed(),
        action: r.action.mirror(),
        coaction: r.coaction.mirror(),
        side: r.side.flip(),
    }
}

/// Reverse the order of tensor factors in every bundled cell and swap
/// left and right. Structures without a side flag (the Sweedler and
/// Hausser-Nill data, Tambara modules) have no mirrored form here.
pub fn mirror(s: &Structure) -> Result<Structure> {
    Ok(match s {
        Structure::Monad(m) => Structure::Monad(mirror_monad(m)),
        Structure::Comonad(c) => Structure::Comonad(mirror_comonad(c)),
        Structure::DistLaw(d) => Structure::DistLaw(mirror_law(d)),
        Structure::Module(m) => Structure::Module(ModuleDesc {
            acting: m.acting.clone(),
            carrier: m.carrier.reversed(),
            action: m.action.mirror(),
            side: m.side.flip(),
        }),
        Structure::Comodule(c) => Structure::Comodule(ComoduleDesc {
            acting: c.acting.clone(),
            carrier: c.carrier.reversed(),
            coaction: c.coaction.mirror(),
            side: c.side.flip(),
        }),
        Structure::QuasiBimonad(q) => Structure::QuasiBimonad(QuasiBimonadDesc {
            monad: mirror_monad(&q.monad),
            comonad: mirror_comonad(&q.comonad),
            tau_ff: mirror_law(&q.tau_ff),
            phi: q.phi.mirror(),
            phi_inv: q.phi_inv.as_ref().map(|c| c.mirror()),
        }),
        Structure::CoquasiBimonad(q) => Structure::CoquasiBimonad(CoquasiBimonadDesc {
            monad: mirror_monad(&q.monad),
            comonad: mirror_comonad(&q.comonad),
            tau_ff: mirror_law(&q.tau_ff),
            omega: q.omega.mirror(),
            omega_inv: q.omega_inv.as_ref().map(|c| c.mirror()),
        }),
        Structure::Bimonad(b) => Structure::Bimonad(mirror_bimonad(b)),
        Structure::YD(y) => Structure::YD(mirror_yd(y)),
        Structure::Relative(r) => Structure::Relative(mirror_relative(r)),
        Structure::Tambara(TambaraModuleDesc { .. }) | Structure::Sweedler(_) | Structure::HausserNill(_) => {
            return Err(Error::KindUnsupported(format!("no mirror of a {}", s.kind())))
        }
    })
}
