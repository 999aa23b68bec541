//! Structures induced on composite 1-cells: Tambara products, modules
//! and comodules on `XM`, and the distributive laws built from
//! (co)actions.

use crate::error::{Error, Result};
use crate::lincat::{CellType, Chain, TwoCell};
use crate::structures::{DistKind, DistLaw, ModuleDesc, TambaraModuleDesc};

/// `τ_{A,XY} = (id_X ⊗ τ_{A,Y})(τ_{A,X} ⊗ id_Y)`.
pub fn tau_on_pair(tx: &DistLaw, ty: &DistLaw) -> Result<DistLaw> {
    if tx.over != ty.over {
        return Err(Error::TypeMismatch {
            expected: tx.over.to_string(),
            found: ty.over.to_string(),
        });
    }
    let (a, x, y) = (&tx.over, &tx.under, &ty.under);
    let cell = Chain::start(&CellType::join(&[a, x, y]), tx.field())
        .at(0, &tx.cell)?
        .at(x.len(), &ty.cell)?
        .done();
    let kinds: Vec<DistKind> = tx.kinds.intersection(&ty.kinds).copied().collect();
    Ok(DistLaw::new(a.clone(), x.concat(y), cell, &kinds))
}

/// `(ν_X ⊗ ν_Y)(id ⊗ τ_{B,X} ⊗ id)(Δ_B ⊗ id)` on `XY`.
pub fn tensor_action(
    delta: &TwoCell,
    tau_x: &TwoCell,
    nu_x: &TwoCell,
    nu_y: &TwoCell,
    x: &CellType,
    y: &CellType,
) -> Result<TwoCell> {
    let b = delta.dom().clone();
    let lb = b.len();
    Chain::start(&CellType::join(&[&b, x, y]), delta.field())
        .at(0, delta)?
        .at(lb, tau_x)?
        .at(0, nu_x)?
        .at(x.len(), nu_y)
        .map(Chain::done)
}

pub fn tensor_tambara(
    x: &TambaraModuleDesc,
    y: &TambaraModuleDesc,
    delta_b: &TwoCell,
) -> Result<TambaraModuleDesc> {
    let xy = x.x.concat(&y.x);
    let action = tensor_action(delta_b, &x.tau.cell, &x.nu.action, &y.nu.action, &x.x, &y.x)?;
    let mut tau = tau_on_pair(&x.tau, &y.tau)?;
    tau.kinds = x.tau.kinds.clone();
    Ok(TambaraModuleDesc {
        base: x.base.clone(),
        tau_bb: x.tau_bb.clone(),
        x: xy.clone(),
        tau,
        nu: ModuleDesc::left(x.base.carrier.clone(), xy, action),
    })
}

/// `(id_X ⊗ ν_M)(ψ_{B,X} ⊗ id_M)` on `XM`.
pub fn module_on_xm(psi_bx: &DistLaw, m_action: &TwoCell) -> Result<TwoCell> {
    let (b, x) = (&psi_bx.over, &psi_bx.under);
    let m = m_action.cod().clone();
    Chain::start(&CellType::join(&[b, x, &m]), psi_bx.field())
        .at(0, &psi_bx.cell)?
        .at(x.len(), m_action)
        .map(Chain::done)
}

/// `(φ_{X,F} ⊗ id_M)(id_X ⊗ λ_M)` on `XM`.
pub fn comodule_on_xm(phi_xf: &DistLaw, m_coaction: &TwoCell) -> Result<TwoCell> {
    let x = &phi_xf.over;
    let m = m_coaction.dom().clone();
    Chain::start(&x.concat(&m), phi_xf.field())
        .at(x.len(), m_coaction)?
        .at(0, &phi_xf.cell)
        .map(Chain::done)
}

/// `ψ_{B,X} = (id_X ⊗ ◁)(τ_{B,X} ⊗ id_F)(id_B ⊗ ρ_X)` from a right
/// coaction `ρ_X: X -> XF` and a measuring `◁: BF -> B`.
pub fn psi_from_coaction(tau_bx: &DistLaw, coaction: &TwoCell, measuring: &TwoCell) -> Result<DistLaw> {
    let (b, x) = (&tau_bx.over, &tau_bx.under);
    let cell = Chain::start(&b.concat(x), tau_bx.field())
        .at(b.len(), coaction)?
        .at(0, &tau_bx.cell)?
        .at(x.len(), measuring)?
        .done();
    Ok(DistLaw::new(b.clone(), x.clone(), cell, &[DistKind::LeftMonadic]))
}

/// `ψ_{B,X} = (ν ⊗ id_B)(id_F ⊗ τ_{B,X})(λ_B ⊗ id_X)` from a comeasuring
/// `λ_B: B -> FB` and a left action `ν: FX -> X`.
pub fn psi_from_action(tau_bx: &DistLaw, comeasuring: &TwoCell, action: &TwoCell) -> Result<DistLaw> {
    let (b, x) = (&tau_bx.over, &tau_bx.under);
    let lf = comeasuring.cod().len() - b.len();
    let cell = Chain::start(&b.concat(x), tau_bx.field())
        .at(0, comeasuring)?
        .at(lf, &tau_bx.cell)?
        .at(0, action)?
        .done();
    Ok(DistLaw::new(b.clone(), x.clone(), cell, &[DistKind::LeftMonadic]))
}
