//! Composite monads on two-leg strings, returned on a fused carrier.

use crate::error::Result;
use crate::lincat::{tensor, CellType, Chain, Space, TwoCell};
use crate::structures::{require_shapes, DistLaw, MonadDesc, SweedlerDatum};

/// Fuse a string into one space of the product dimension.
pub fn fuse(t: &CellType) -> Space {
    let name: String = t.legs.iter().map(|s| s.name.as_str()).collect();
    Space::new(name, t.dim())
}

fn fused_monad(pair: &CellType, mu4: TwoCell, eta2: TwoCell) -> Result<MonadDesc> {
    let sp = fuse(pair);
    let s = sp.ty();
    Ok(MonadDesc::new(
        sp,
        mu4.retype(s.concat(&s), s.clone())?,
        eta2.retype(CellType::unit(), s)?,
    ))
}

/// `∇ = (μ ⊗ μ)(id ⊗ τ ⊗ id)`, `η ⊗ η` on `BB`.
pub fn monad_on_bb(b: &MonadDesc, tau_bb: &DistLaw) -> Result<MonadDesc> {
    require_shapes(b.validate_shapes())?;
    let bt = b.ty();
    let bb = bt.concat(&bt);
    let mu = Chain::start(&bb.concat(&bb), b.field())
        .at(1, &tau_bb.cell)?
        .at(0, &b.mu)?
        .at(1, &b.mu)?
        .done();
    fused_monad(&bb, mu, tensor(&[&b.eta, &b.eta])?)
}

/// Crossed product on `FB`: multiplication
/// `(id ⊗ μ_B)(μ_M ⊗ μ_B)(id ⊗ ψ ⊗ id)`, unit `η_M`.
pub fn wreath_product_monad(s: &SweedlerDatum) -> Result<MonadDesc> {
    require_shapes(s.validate_shapes())?;
    let fb = s.f.ty().concat(&s.b.ty());
    let mu = Chain::start(&fb.concat(&fb), s.field())
        .at(1, &s.psi.cell)?
        .at(0, &s.mu_m)?
        .at(1, &s.b.mu)?
        .at(1, &s.b.mu)?
        .done();
    fused_monad(&fb, mu, s.eta_m.clone())
}
