//! Eilenberg-Moore 2-cocycles from Sweedler cocycles and Hausser-Nill
//! 3-cocycles, the Hopf data they induce and the actions on `B`-modules.

use std::collections::BTreeMap;

use super::assoc::{alpha_coquasi, alpha_quasi, tensor_coaction, CoqObject, QbObject};
use super::convolution::{convolution_invert_diag, ConvContext, ConvolutionElement, Inverse};
use super::modules::{module_on_xm, psi_from_action, psi_from_coaction, tau_on_pair, tensor_action};
use crate::axioms::{EmFamily, Morphism};
use crate::diagram::{nabla, rounds, spread};
use crate::error::{Error, Result};
use crate::lincat::{identity, tensor, CellType, Chain, TwoCell};
use crate::structures::{
    CoquasiBimonadDesc, DistKind, DistLaw, HausserNillDatum, ModuleDesc, MonadDesc,
    QuasiBimonadDesc, SweedlerDatum,
};

/// A right `F`-comodule `ρ: X -> XF` with crossings `τ_{F,X}` and `τ_{B,X}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchObject {
    pub x: CellType,
    pub coaction: TwoCell,
    pub tau_fx: DistLaw,
    pub tau_bx: DistLaw,
}

impl SchObject {
    pub fn unit(q: &CoquasiBimonadDesc, b: &MonadDesc) -> SchObject {
        let u = CoqObject::unit(q);
        SchObject {
            x: u.x,
            coaction: u.coaction,
            tau_fx: u.tau_fx,
            tau_bx: unit_tau(b),
        }
    }

    /// `F` coacting on itself by `Δ`.
    pub fn regular(q: &CoquasiBimonadDesc, tau_bf: &DistLaw) -> SchObject {
        SchObject {
            x: q.monad.ty(),
            coaction: q.comonad.delta.clone(),
            tau_fx: q.tau_ff.clone(),
            tau_bx: tau_bf.clone(),
        }
    }

    pub fn tensor(&self, other: &SchObject, q: &CoquasiBimonadDesc) -> Result<SchObject> {
        Ok(SchObject {
            x: self.x.concat(&other.x),
            coaction: tensor_coaction(&q.monad.mu, &self.coaction, &other.coaction, &other.tau_fx.cell, &self.x, &other.x)?,
            tau_fx: tau_on_pair(&self.tau_fx, &other.tau_fx)?,
            tau_bx: tau_on_pair(&self.tau_bx, &other.tau_bx)?,
        })
    }

    pub fn coq(&self) -> CoqObject {
        CoqObject {
            x: self.x.clone(),
            tau_fx: self.tau_fx.clone(),
            coaction: self.coaction.clone(),
        }
    }
}

/// A left `F`-module `ν: FX -> X` with crossings `τ_{F,X}` and `τ_{B,X}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MartinObject {
    pub x: CellType,
    pub action: TwoCell,
    pub tau_fx: DistLaw,
    pub tau_bx: DistLaw,
}

impl MartinObject {
    pub fn unit(q: &QuasiBimonadDesc, b: &MonadDesc) -> MartinObject {
        let u = QbObject::unit(q);
        MartinObject {
            x: u.x,
            action: u.action,
            tau_fx: u.tau_fx,
            tau_bx: unit_tau(b),
        }
    }

    pub fn regular(q: &QuasiBimonadDesc, tau_bf: &DistLaw) -> MartinObject {
        MartinObject {
            x: q.monad.ty(),
            action: q.monad.mu.clone(),
            tau_fx: q.tau_ff.clone(),
            tau_bx: tau_bf.clone(),
        }
    }

    pub fn tensor(&self, other: &MartinObject, q: &QuasiBimonadDesc) -> Result<MartinObject> {
        Ok(MartinObject {
            x: self.x.concat(&other.x),
            action: tensor_action(&q.comonad.delta, &self.tau_fx.cell, &self.action, &other.action, &self.x, &other.x)?,
            tau_fx: tau_on_pair(&self.tau_fx, &other.tau_fx)?,
            tau_bx: tau_on_pair(&self.tau_bx, &other.tau_bx)?,
        })
    }

    pub fn qb(&self) -> QbObject {
        QbObject {
            x: self.x.clone(),
            tau_fx: self.tau_fx.clone(),
            action: self.action.clone(),
        }
    }
}

fn unit_tau(b: &MonadDesc) -> DistLaw {
    let bt = b.ty();
    DistLaw::new(
        bt.clone(),
        CellType::unit(),
        identity(&bt, b.field()),
        &[DistKind::LeftMonadic, DistKind::LeftComonadic],
    )
}

/// `ρ̄_{X,Y} = (id_{XY} ⊗ σ)(id_X ⊗ τ_{F,Y} ⊗ id_F)(ρ_X ⊗ ρ_Y)`.
pub fn rho_from_sigma(sigma: &TwoCell, x: &SchObject, y: &SchObject) -> Result<TwoCell> {
    let (lx, ly) = (x.x.len(), y.x.len());
    Chain::start(&x.x.concat(&y.x), sigma.field())
        .at(0, &x.coaction)?
        .at(lx + 1, &y.coaction)?
        .at(lx, &y.tau_fx.cell)?
        .at(lx + ly, sigma)
        .map(Chain::done)
}

/// Insert `Φ_λ`, cross its `B` leg past `X`, its second `F` leg past `X`
/// and the `B` leg past `Y`, then act on `X` and `Y`.
pub fn rho_from_philambda(phi_lambda: &TwoCell, x: &MartinObject, y: &MartinObject) -> Result<TwoCell> {
    let lx = x.x.len();
    Chain::start(&x.x.concat(&y.x), phi_lambda.field())
        .at(0, phi_lambda)?
        .at(2, &x.tau_bx.cell)?
        .at(1, &x.tau_fx.cell)?
        .at(lx + 2, &y.tau_bx.cell)?
        .at(0, &x.action)?
        .at(lx, &y.action)
        .map(Chain::done)
}

/// `r_{X,Y,M} = (id_{XY} ⊗ ν_M)(ρ̄_{X,Y} ⊗ id_M)`.
pub fn r_from_rho(rho_xy: &TwoCell, m_action: &TwoCell) -> Result<TwoCell> {
    let n = rho_xy.dom().len();
    let m = m_action.cod().clone();
    let b_len = rho_xy.cod().len() - n;
    if m_action.dom().len() != b_len + m.len() || rho_xy.cod().slice(n, rho_xy.cod().len()) != m_action.dom().slice(0, b_len) {
        return Err(Error::ShapeMismatch(format!(
            "rho {} -> {} against action {} -> {}",
            rho_xy.dom(),
            rho_xy.cod(),
            m_action.dom(),
            m_action.cod()
        )));
    }
    Chain::start(&rho_xy.dom().concat(&m), rho_xy.field())
        .at(0, rho_xy)?
        .at(n, m_action)
        .map(Chain::done)
}

/// `ρ̄_{X,Y} = r_{X,Y,B}(id_{XY} ⊗ η_B)`.
pub fn rho_from_r(r_xyb: &TwoCell, eta_b: &TwoCell) -> Result<TwoCell> {
    let b = eta_b.cod().clone();
    let dom = r_xyb.dom();
    if dom.len() < b.len() || dom.slice(dom.len() - b.len(), dom.len()) != b {
        return Err(Error::ShapeMismatch(format!("r on {dom} does not end in {b}")));
    }
    let xy = dom.slice(0, dom.len() - b.len());
    Chain::start(&xy, r_xyb.field())
        .at(xy.len(), eta_b)?
        .then(r_xyb)
        .map(Chain::done)
}

fn invert_in(ctx: ConvContext, cell: &TwoCell, what: &str) -> Result<TwoCell> {
    let el = ConvolutionElement::new(cell.clone(), ctx)?;
    match convolution_invert_diag(&el)? {
        Inverse::TwoSided(g) => Ok(g.cell),
        Inverse::OneSided(_) => Err(Error::MissingInverse(format!("{what} has only a one-sided inverse"))),
        Inverse::None => Err(Error::MissingInverse(format!("{what} is not convolution invertible"))),
    }
}

/// `σ⁻¹` in `K(FF, B)`.
pub fn sigma_inverse(q: &CoquasiBimonadDesc, b: &MonadDesc, sigma: &TwoCell) -> Result<TwoCell> {
    let ctx = ConvContext::new(
        vec![q.comonad.clone(), q.comonad.clone()],
        vec![q.tau_ff.cell.clone()],
        vec![b.clone()],
        vec![],
    );
    invert_in(ctx, sigma, "sigma")
}

/// `Φ_λ⁻¹` in `K(I, FFB)`.
pub fn philambda_inverse(q: &QuasiBimonadDesc, b: &MonadDesc, tau_bf: &DistLaw, phi_lambda: &TwoCell) -> Result<TwoCell> {
    let ctx = ConvContext::new(
        vec![],
        vec![],
        vec![q.monad.clone(), q.monad.clone(), b.clone()],
        vec![q.tau_ff.cell.clone(), tau_bf.cell.clone()],
    );
    invert_in(ctx, phi_lambda, "Phi_lambda")
}

/// `ψ_{B,F} = (id_F ⊗ ◁)(τ_{B,F} ⊗ id_F)(id_B ⊗ Δ)`,
/// `μ_M = (μ_F ⊗ σ)(id ⊗ τ_{F,F} ⊗ id)(Δ ⊗ Δ)`, `η_M = η_F ⊗ η_B` and
/// `β = (ω⁻¹ ⊗ id_{FFF})` after spreading two Sweedler rounds.
pub fn sweedler_datum_from_coquasi(
    q: &CoquasiBimonadDesc,
    b: &MonadDesc,
    tau_bf: &DistLaw,
    action: &TwoCell,
    sigma: &TwoCell,
) -> Result<SweedlerDatum> {
    let omega_inv = q
        .omega_inv
        .as_ref()
        .ok_or_else(|| Error::MissingInverse("coquasi-bimonad without omega_inv".into()))?;
    let fl = q.field();
    let f = q.monad.ty();
    let (delta, mu) = (&q.comonad.delta, &q.monad.mu);
    let psi = psi_from_coaction(tau_bf, delta, action)?;
    let mu_m = Chain::start(&f.concat(&f), fl)
        .at(0, delta)?
        .at(2, delta)?
        .at(1, &q.tau_ff.cell)?
        .at(0, mu)?
        .at(1, sigma)?
        .done();
    let beta = spread(&q.comonad, &q.tau_ff.cell, &[2, 2, 2], &rounds(3, 2))?;
    let beta = Chain::from(beta).at(0, omega_inv)?.done();
    Ok(SweedlerDatum {
        b: b.clone(),
        f: q.monad.carrier.clone(),
        psi,
        mu_m,
        eta_m: tensor(&[&q.monad.eta, &b.eta])?,
        eps_f: q.comonad.eps.clone(),
        beta: Some(beta),
    })
}

/// `ψ_{B,F} = (μ_F ⊗ id)(id ⊗ τ_{B,F})(λ_B ⊗ id)`, `Δ_M` pairing
/// `Φ_λ` with `Δ`, `β = (x ⊗ y ⊗ z) Φ⁻¹`, `ε_M = η_B ε_F`.
pub fn hn_datum_from_quasi(
    q: &QuasiBimonadDesc,
    b: &MonadDesc,
    tau_bf: &DistLaw,
    lambda_b: &TwoCell,
    phi_lambda: &TwoCell,
) -> Result<HausserNillDatum> {
    let phi_inv = q
        .phi_inv
        .as_ref()
        .ok_or_else(|| Error::MissingInverse("quasi-bimonad without phi_inv".into()))?;
    let fl = q.field();
    let f = q.monad.ty();
    let mu = &q.monad.mu;
    let psi = psi_from_action(tau_bf, lambda_b, mu)?;
    let delta_m = Chain::start(&f, fl)
        .at(0, phi_lambda)?
        .at(2, &tau_bf.cell)?
        .at(2, &q.comonad.delta)?
        .at(1, &q.tau_ff.cell)?
        .at(0, mu)?
        .at(1, mu)?
        .done();
    let fff = CellType::join(&[&f, &f, &f]);
    let beta = Chain::start(&fff, fl)
        .at(3, phi_inv)?
        .then(&nabla(&q.monad, &q.tau_ff.cell, 3)?)?
        .done();
    Ok(HausserNillDatum {
        b: b.clone(),
        f: q.monad.carrier.clone(),
        psi,
        delta_m,
        eps_m: Chain::from(q.comonad.eps.clone()).at(0, &b.eta)?.done(),
        eta_f: q.monad.eta.clone(),
        beta: Some(beta),
    })
}

/// `XM` as a `B`-module, with the crossing `ψ_{B,X}` it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionBundle {
    pub module: ModuleDesc,
    pub psi_bx: DistLaw,
}

fn bundle(psi_bx: DistLaw, m: &ModuleDesc) -> Result<ActionBundle> {
    let carrier = psi_bx.under.concat(&m.carrier);
    let action = module_on_xm(&psi_bx, &m.action)?;
    Ok(ActionBundle {
        module: ModuleDesc::left(m.acting.clone(), carrier, action),
        psi_bx,
    })
}

/// `B` acts on `XM` through `ψ_{B,X} = (id_X ⊗ ◁)(τ_{B,X} ⊗ id_F)(id_B ⊗ ρ_X)`.
pub fn act_sch(x: &SchObject, measuring: &TwoCell, m: &ModuleDesc) -> Result<ActionBundle> {
    bundle(psi_from_coaction(&x.tau_bx, &x.coaction, measuring)?, m)
}

/// `B` acts on `XM` through `ψ_{B,X} = (ν_X ⊗ id_B)(id_F ⊗ τ_{B,X})(λ_B ⊗ id_X)`.
pub fn act_martin(x: &MartinObject, lambda_b: &TwoCell, m: &ModuleDesc) -> Result<ActionBundle> {
    bundle(psi_from_action(&x.tau_bx, lambda_b, &x.action)?, m)
}

/// Unit, generators and their pairwise products, keyed by carrier.
fn short_words<O: Clone>(unit: O, gens: &[O], tensor: impl Fn(&O, &O) -> Result<O>, carrier: impl Fn(&O) -> CellType) -> Result<Vec<O>> {
    let mut out: Vec<O> = vec![unit];
    let push = |o: O, out: &mut Vec<O>| {
        if !out.iter().any(|w| carrier(w) == carrier(&o)) {
            out.push(o);
        }
    };
    for g in gens {
        push(g.clone(), &mut out);
    }
    for a in gens {
        for b in gens {
            let t = tensor(a, b)?;
            push(t, &mut out);
        }
    }
    Ok(out)
}

fn fill<O>(words: &[O], carrier: &dyn Fn(&O) -> CellType, max: usize, cell: &dyn Fn(&O, &O) -> Result<TwoCell>) -> Result<BTreeMap<(CellType, CellType), TwoCell>> {
    let mut out = BTreeMap::new();
    for a in words {
        for b in words {
            let (ca, cb) = (carrier(a), carrier(b));
            if ca.len() + cb.len() > max {
                continue;
            }
            out.insert((ca, cb), cell(a, b)?);
        }
    }
    Ok(out)
}

/// The family `ρ̄` defined by a Sweedler cocycle on the unit and the listed
/// comodules, with `ρ̄⁻¹` from `σ⁻¹` and `α` from `ω`.
#[allow(clippy::too_many_arguments)]
pub fn sch_family(
    q: &CoquasiBimonadDesc,
    b: &MonadDesc,
    measuring: &TwoCell,
    sigma: &TwoCell,
    sigma_inv: &TwoCell,
    gens: &[SchObject],
    morphisms: Vec<Morphism>,
) -> Result<EmFamily> {
    let words = short_words(SchObject::unit(q, b), gens, |a, c| a.tensor(c, q), |o| o.x.clone())?;
    let carrier = |o: &SchObject| o.x.clone();
    let max = 3 * gens.iter().map(|g| g.x.len()).max().unwrap_or(1);
    let rho = fill(&words, &carrier, max, &|a, c| rho_from_sigma(sigma, a, c))?;
    let rho_inv = fill(&words, &carrier, max, &|a, c| rho_from_sigma(sigma_inv, a, c))?;
    let mut psi = BTreeMap::new();
    let mut alpha = BTreeMap::new();
    let objects: Vec<&SchObject> = std::iter::once(&words[0]).chain(gens.iter()).collect();
    for x in &objects {
        if !x.x.is_empty() {
            psi.insert(x.x.clone(), psi_from_coaction(&x.tau_bx, &x.coaction, measuring)?.cell);
        }
        for y in &objects {
            for z in &objects {
                alpha.insert((x.x.clone(), y.x.clone(), z.x.clone()), alpha_coquasi(q, &x.coq(), &y.coq(), &z.coq())?);
            }
        }
    }
    Ok(EmFamily {
        b: b.clone(),
        objects: objects.iter().map(|o| o.x.clone()).collect(),
        psi,
        rho,
        rho_inv,
        alpha: Some(alpha),
        morphisms,
    })
}

/// The family `ρ̄` defined by a Hausser-Nill 3-cocycle on the unit and the
/// listed modules, with `ρ̄⁻¹` from `Φ_λ⁻¹` and `α` from `Φ`.
#[allow(clippy::too_many_arguments)]
pub fn martin_family(
    q: &QuasiBimonadDesc,
    b: &MonadDesc,
    lambda_b: &TwoCell,
    phi_lambda: &TwoCell,
    phi_lambda_inv: &TwoCell,
    gens: &[MartinObject],
    morphisms: Vec<Morphism>,
) -> Result<EmFamily> {
    let words = short_words(MartinObject::unit(q, b), gens, |a, c| a.tensor(c, q), |o| o.x.clone())?;
    let carrier = |o: &MartinObject| o.x.clone();
    let max = 3 * gens.iter().map(|g| g.x.len()).max().unwrap_or(1);
    let rho = fill(&words, &carrier, max, &|a, c| rho_from_philambda(phi_lambda, a, c))?;
    let rho_inv = fill(&words, &carrier, max, &|a, c| rho_from_philambda(phi_lambda_inv, a, c))?;
    let mut psi = BTreeMap::new();
    let mut alpha = BTreeMap::new();
    let objects: Vec<&MartinObject> = std::iter::once(&words[0]).chain(gens.iter()).collect();
    for x in &objects {
        if !x.x.is_empty() {
            psi.insert(x.x.clone(), psi_from_action(&x.tau_bx, lambda_b, &x.action)?.cell);
        }
        for y in &objects {
            for z in &objects {
                alpha.insert((x.x.clone(), y.x.clone(), z.x.clone()), alpha_quasi(q, &x.qb(), &y.qb(), &z.qb())?);
            }
        }
    }
    Ok(EmFamily {
        b: b.clone(),
        objects: objects.iter().map(|o| o.x.clone()).collect(),
        psi,
        rho,
        rho_inv,
        alpha: Some(alpha),
        morphisms,
    })
}

/// The cells `ρ_{F,F} = ρ̄_σ`, `ρ_{FF,F} = (Δ ⊗ id_{FB}) ρ̄_σ (μ ⊗ id_F)` and
/// `ρ_{F,FF} = (id_F ⊗ Δ ⊗ id_B) ρ̄_σ (id_F ⊗ μ)` on the regular comodule,
/// placed in the inverse slot of a family over `[F]`.
pub fn cocycle_cells_sigma(
    sigma: &TwoCell,
    q: &CoquasiBimonadDesc,
    b: &MonadDesc,
    tau_bf: &DistLaw,
    measuring: &TwoCell,
) -> Result<EmFamily> {
    let reg = SchObject::regular(q, tau_bf);
    let base = rho_from_sigma(sigma, &reg, &reg)?;
    let psi = psi_from_coaction(tau_bf, &q.comonad.delta, measuring)?.cell;
    let cells = lemma_cells(&base, &q.monad.mu, &q.comonad.delta)?;
    let f = q.monad.ty();
    Ok(EmFamily {
        b: b.clone(),
        objects: vec![f.clone()],
        psi: BTreeMap::from([(f, psi)]),
        rho: BTreeMap::new(),
        rho_inv: cells,
        alpha: None,
        morphisms: vec![],
    })
}

/// As [`cocycle_cells_sigma`] with `ρ̄` from `Φ_λ` on the regular module,
/// placed in the direct slot, with `α_{F,F,F}` from `Φ`.
pub fn cocycle_cells_philambda(
    phi_lambda: &TwoCell,
    q: &QuasiBimonadDesc,
    b: &MonadDesc,
    tau_bf: &DistLaw,
    lambda_b: &TwoCell,
) -> Result<EmFamily> {
    let reg = MartinObject::regular(q, tau_bf);
    let base = rho_from_philambda(phi_lambda, &reg, &reg)?;
    let psi = psi_from_action(tau_bf, lambda_b, &q.monad.mu)?.cell;
    let cells = lemma_cells(&base, &q.monad.mu, &q.comonad.delta)?;
    let f = q.monad.ty();
    let r = reg.qb();
    let alpha = BTreeMap::from([((f.clone(), f.clone(), f.clone()), alpha_quasi(q, &r, &r, &r)?)]);
    Ok(EmFamily {
        b: b.clone(),
        objects: vec![f.clone()],
        psi: BTreeMap::from([(f, psi)]),
        rho: cells,
        rho_inv: BTreeMap::new(),
        alpha: Some(alpha),
        morphisms: vec![],
    })
}

fn lemma_cells(base: &TwoCell, mu: &TwoCell, delta: &TwoCell) -> Result<BTreeMap<(CellType, CellType), TwoCell>> {
    let f = mu.cod().clone();
    let ff = f.concat(&f);
    let fff = ff.concat(&f);
    let fl = base.field();
    let left = Chain::start(&fff, fl).at(0, mu)?.then(base)?.at(0, delta)?.done();
    let right = Chain::start(&fff, fl).at(1, mu)?.then(base)?.at(1, delta)?.done();
    Ok(BTreeMap::from([
        ((f.clone(), f.clone()), base.clone()),
        ((ff.clone(), f.clone()), left),
        ((f, ff), right),
    ]))
}
