//! Objects of the module category of a quasi-bimonad and the comodule
//! category of a coquasi-bimonad, their tensor products and
//! associativity constraints.

use std::collections::BTreeMap;

use super::modules::{tau_on_pair, tensor_action};
use crate::axioms::KFamily;
use crate::error::{Error, Result};
use crate::lincat::{identity, CellType, Chain, TwoCell};
use crate::structures::{CoquasiBimonadDesc, DistKind, DistLaw, QuasiBimonadDesc};

/// A left `F`-module `ν: FX -> X` with `τ_{F,X}: FX -> XF`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QbObject {
    pub x: CellType,
    pub tau_fx: DistLaw,
    pub action: TwoCell,
}

impl QbObject {
    pub fn unit(q: &QuasiBimonadDesc) -> QbObject {
        let f = q.monad.ty();
        QbObject {
            x: CellType::unit(),
            tau_fx: DistLaw::new(
                f.clone(),
                CellType::unit(),
                identity(&f, q.field()),
                &[DistKind::LeftMonadic, DistKind::LeftComonadic],
            ),
            action: q.comonad.eps.clone(),
        }
    }

    /// `F` acting on itself by `μ`, crossing by `τ_{F,F}`.
    pub fn regular(q: &QuasiBimonadDesc) -> QbObject {
        QbObject {
            x: q.monad.ty(),
            tau_fx: q.tau_ff.clone(),
            action: q.monad.mu.clone(),
        }
    }

    /// Module structure on `XY` through `Δ`.
    pub fn tensor(&self, other: &QbObject, q: &QuasiBimonadDesc) -> Result<QbObject> {
        let action = tensor_action(
            &q.comonad.delta,
            &self.tau_fx.cell,
            &self.action,
            &other.action,
            &self.x,
            &other.x,
        )?;
        Ok(QbObject {
            x: self.x.concat(&other.x),
            tau_fx: tau_on_pair(&self.tau_fx, &other.tau_fx)?,
            action,
        })
    }
}

/// `FFF XYZ -> XYZ`: each `F` leg acts on its own object after crossing
/// the objects to its left.
pub fn triple_action(x: &QbObject, y: &QbObject, z: &QbObject) -> Result<TwoCell> {
    let (lx, ly) = (x.x.len(), y.x.len());
    let f = x.tau_fx.over.clone();
    let dom = CellType::join(&[&f, &f, &f, &x.x, &y.x, &z.x]);
    Chain::start(&dom, x.action.field())
        .at(2, &x.tau_fx.cell)?
        .at(1, &x.tau_fx.cell)?
        .at(lx + 2, &y.tau_fx.cell)?
        .at(0, &x.action)?
        .at(lx, &y.action)?
        .at(lx + ly, &z.action)
        .map(Chain::done)
}

/// `(XY)Z -> X(YZ)`: act by the three legs of `c` (Φ or Φ⁻¹).
fn act_by_triple(c: &TwoCell, x: &QbObject, y: &QbObject, z: &QbObject) -> Result<TwoCell> {
    Chain::start(&CellType::join(&[&x.x, &y.x, &z.x]), c.field())
        .at(0, c)?
        .then(&triple_action(x, y, z)?)
        .map(Chain::done)
}

pub fn alpha_quasi(q: &QuasiBimonadDesc, x: &QbObject, y: &QbObject, z: &QbObject) -> Result<TwoCell> {
    act_by_triple(&q.phi, x, y, z)
}

/// The inverse constraint, acting by `Φ⁻¹`.
pub fn alpha_quasi_inv(q: &QuasiBimonadDesc, x: &QbObject, y: &QbObject, z: &QbObject) -> Result<TwoCell> {
    let pi = q
        .phi_inv
        .as_ref()
        .ok_or_else(|| Error::MissingInverse("quasi-bimonad without phi_inv".into()))?;
    act_by_triple(pi, x, y, z)
}

/// A right `F`-comodule `ρ: X -> XF` with `τ_{F,X}: FX -> XF`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoqObject {
    pub x: CellType,
    pub tau_fx: DistLaw,
    pub coaction: TwoCell,
}

impl CoqObject {
    pub fn unit(q: &CoquasiBimonadDesc) -> CoqObject {
        let f = q.monad.ty();
        CoqObject {
            x: CellType::unit(),
            tau_fx: DistLaw::new(
                f.clone(),
                CellType::unit(),
                identity(&f, q.field()),
                &[DistKind::LeftMonadic, DistKind::LeftComonadic],
            ),
            coaction: q.monad.eta.clone(),
        }
    }

    pub fn regular(q: &CoquasiBimonadDesc) -> CoqObject {
        CoqObject {
            x: q.monad.ty(),
            tau_fx: q.tau_ff.clone(),
            coaction: q.comonad.delta.clone(),
        }
    }

    /// `(id ⊗ id ⊗ μ)(id ⊗ τ_{F,Y} ⊗ id)(ρ_X ⊗ ρ_Y)`.
    pub fn tensor(&self, other: &CoqObject, q: &CoquasiBimonadDesc) -> Result<CoqObject> {
        let coaction = tensor_coaction(&q.monad.mu, &self.coaction, &other.coaction, &other.tau_fx.cell, &self.x, &other.x)?;
        Ok(CoqObject {
            x: self.x.concat(&other.x),
            tau_fx: tau_on_pair(&self.tau_fx, &other.tau_fx)?,
            coaction,
        })
    }
}

pub(crate) fn tensor_coaction(
    mu: &TwoCell,
    rho_x: &TwoCell,
    rho_y: &TwoCell,
    tau_fy: &TwoCell,
    x: &CellType,
    y: &CellType,
) -> Result<TwoCell> {
    let (lx, ly) = (x.len(), y.len());
    Chain::start(&x.concat(y), mu.field())
        .at(0, rho_x)?
        .at(lx + 1, rho_y)?
        .at(lx, tau_fy)?
        .at(lx + ly, mu)
        .map(Chain::done)
}

/// Coact on each of `X, Y, Z`, gather the three `F` legs on the right and
/// evaluate `c` (ω or ω⁻¹) on them.
fn coact_triple(c: &TwoCell, x: &CoqObject, y: &CoqObject, z: &CoqObject) -> Result<TwoCell> {
    let (lx, ly, lz) = (x.x.len(), y.x.len(), z.x.len());
    Chain::start(&CellType::join(&[&x.x, &y.x, &z.x]), c.field())
        .at(0, &x.coaction)?
        .at(lx + 1, &y.coaction)?
        .at(lx + ly + 2, &z.coaction)?
        .at(lx, &y.tau_fx.cell)?
        .at(lx + ly + 1, &z.tau_fx.cell)?
        .at(lx + ly, &z.tau_fx.cell)?
        .at(lx + ly + lz, c)
        .map(Chain::done)
}

pub fn alpha_coquasi(q: &CoquasiBimonadDesc, x: &CoqObject, y: &CoqObject, z: &CoqObject) -> Result<TwoCell> {
    coact_triple(&q.omega, x, y, z)
}

pub fn alpha_coquasi_inv(q: &CoquasiBimonadDesc, x: &CoqObject, y: &CoqObject, z: &CoqObject) -> Result<TwoCell> {
    let oi = q
        .omega_inv
        .as_ref()
        .ok_or_else(|| Error::MissingInverse("coquasi-bimonad without omega_inv".into()))?;
    coact_triple(oi, x, y, z)
}

/// Every finite word in the given objects up to length `max`, keyed by
/// its carrier.
fn words<O: Clone>(gens: &[O], max: usize, unit: O, tensor: &dyn Fn(&O, &O) -> Result<O>, carrier: &dyn Fn(&O) -> CellType) -> Result<BTreeMap<CellType, O>> {
    let mut out = BTreeMap::new();
    out.insert(carrier(&unit), unit);
    let mut layer: Vec<O> = gens.to_vec();
    for g in gens {
        out.insert(carrier(g), g.clone());
    }
    for _ in 1..max {
        let mut next = vec![];
        for w in &layer {
            for g in gens {
                let t = tensor(w, g)?;
                out.entry(carrier(&t)).or_insert_with(|| t.clone());
                next.push(t);
            }
        }
        layer = next;
    }
    Ok(out)
}

/// Family `α_{X,Y,Z}` over all triples of words of total length at most
/// four, enough for the pentagon over the listed objects.
fn alpha_family<O: Clone>(
    gens: &[O],
    unit: O,
    tensor: &dyn Fn(&O, &O) -> Result<O>,
    carrier: &dyn Fn(&O) -> CellType,
    alpha: &dyn Fn(&O, &O, &O) -> Result<TwoCell>,
) -> Result<KFamily> {
    let ws = words(gens, 2, unit, tensor, carrier)?;
    let objects: Vec<CellType> = gens.iter().map(carrier).collect();
    let mut cells = BTreeMap::new();
    for a in ws.values() {
        for b in ws.values() {
            for c in ws.values() {
                let len = carrier(a).len() + carrier(b).len() + carrier(c).len();
                if len > 4 * objects.iter().map(|o| o.len()).max().unwrap_or(1) {
                    continue;
                }
                cells.insert(vec![carrier(a), carrier(b), carrier(c)], alpha(a, b, c)?);
            }
        }
    }
    Ok(KFamily { objects, cells })
}

/// Constraints of a quasi-bimonad's module category on words in `objs`.
pub fn alpha_quasi_family(q: &QuasiBimonadDesc, objs: &[QbObject]) -> Result<KFamily> {
    alpha_family(
        objs,
        QbObject::unit(q),
        &|a: &QbObject, b: &QbObject| a.tensor(b, q),
        &|o: &QbObject| o.x.clone(),
        &|a, b, c| alpha_quasi(q, a, b, c),
    )
}

pub fn alpha_coquasi_family(q: &CoquasiBimonadDesc, objs: &[CoqObject]) -> Result<KFamily> {
    alpha_family(
        objs,
        CoqObject::unit(q),
        &|a: &CoqObject, b: &CoqObject| a.tensor(b, q),
        &|o: &CoqObject| o.x.clone(),
        &|a, b, c| alpha_coquasi(q, a, b, c),
    )
}
