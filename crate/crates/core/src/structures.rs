//! Typed bundles of 2-cells with declared roles. Construction never checks
//! semantics; `validate_shapes` checks types only.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::lincat::{comp, identity, swap_types, tensor, CellType, Space, TwoCell};
pub use crate::report::{AxiomSuiteReport, CheckReport, Verdict, Witness};
use crate::scalar::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonadDesc {
    pub carrier: Space,
    pub mu: TwoCell,
    pub eta: TwoCell,
}

impl MonadDesc {
    pub fn new(carrier: Space, mu: TwoCell, eta: TwoCell) -> MonadDesc {
        MonadDesc { carrier, mu, eta }
    }

    pub fn ty(&self) -> CellType {
        self.carrier.ty()
    }

    pub fn field(&self) -> Field {
        self.mu.field()
    }

    pub fn relabel(&self, to: &str) -> MonadDesc {
        let from = self.carrier.name.clone();
        MonadDesc {
            carrier: Space::new(to, self.carrier.dim),
            mu: self.mu.relabel(&from, to),
            eta: self.eta.relabel(&from, to),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComonadDesc {
    pub carrier: Space,
    pub delta: TwoCell,
    pub eps: TwoCell,
}

impl ComonadDesc {
    pub fn new(carrier: Space, delta: TwoCell, eps: TwoCell) -> ComonadDesc {
        ComonadDesc {
            carrier,
            delta,
            eps,
        }
    }

    pub fn ty(&self) -> CellType {
        self.carrier.ty()
    }

    pub fn field(&self) -> Field {
        self.delta.field()
    }

    pub fn relabel(&self, to: &str) -> ComonadDesc {
        let from = self.carrier.name.clone();
        ComonadDesc {
            carrier: Space::new(to, self.carrier.dim),
            delta: self.delta.relabel(&from, to),
            eps: self.eps.relabel(&from, to),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DistKind {
    LeftMonadic,
    RightMonadic,
    LeftComonadic,
    RightComonadic,
}

impl DistKind {
    pub const ALL: [DistKind; 4] = [
        DistKind::LeftMonadic,
        DistKind::RightMonadic,
        DistKind::LeftComonadic,
        DistKind::RightComonadic,
    ];

    pub fn mirror(self) -> DistKind {
        match self {
            DistKind::LeftMonadic => DistKind::RightMonadic,
            DistKind::RightMonadic => DistKind::LeftMonadic,
            DistKind::LeftComonadic => DistKind::RightComonadic,
            DistKind::RightComonadic => DistKind::LeftComonadic,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DistKind::LeftMonadic => "left-monadic",
            DistKind::RightMonadic => "right-monadic",
            DistKind::LeftComonadic => "left-comonadic",
            DistKind::RightComonadic => "right-comonadic",
        }
    }

    pub fn parse(s: &str) -> Option<DistKind> {
        DistKind::ALL.into_iter().find(|k| k.name() == s)
    }

    /// Whether the (co)monad sits on the `over` leg.
    pub fn on_over(self) -> bool {
        matches!(self, DistKind::LeftMonadic | DistKind::LeftComonadic)
    }

    pub fn monadic(self) -> bool {
        matches!(self, DistKind::LeftMonadic | DistKind::RightMonadic)
    }
}

impl fmt::Display for DistKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A 2-cell `[over, under] -> [under, over]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DistLaw {
    pub over: CellType,
    pub under: CellType,
    pub cell: TwoCell,
    pub kinds: BTreeSet<DistKind>,
}

impl DistLaw {
    pub fn new(over: CellType, under: CellType, cell: TwoCell, kinds: &[DistKind]) -> DistLaw {
        DistLaw {
            over,
            under,
            cell,
            kinds: kinds.iter().copied().collect(),
        }
    }

    /// The symmetry of Vect as a distributive law.
    pub fn flip(over: &CellType, under: &CellType, field: Field, kinds: &[DistKind]) -> DistLaw {
        DistLaw::new(
            over.clone(),
            under.clone(),
            swap_types(over, under, field),
            kinds,
        )
    }

    pub fn field(&self) -> Field {
        self.cell.field()
    }

    pub fn validate_shapes(&self) -> CheckReport {
        let mut s = ShapeCheck::default();
        s.cell(
            "dist law",
            &self.cell,
            &self.over.concat(&self.under),
            &self.under.concat(&self.over),
        );
        s.finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleDesc {
    pub acting: Space,
    pub carrier: CellType,
    pub action: TwoCell,
    pub side: Side,
}

impl ModuleDesc {
    pub fn left(acting: Space, carrier: CellType, action: TwoCell) -> ModuleDesc {
        ModuleDesc {
            acting,
            carrier,
            action,
            side: Side::Left,
        }
    }

    pub fn right(acting: Space, carrier: CellType, action: TwoCell) -> ModuleDesc {
        ModuleDesc {
            acting,
            carrier,
            action,
            side: Side::Right,
        }
    }

    pub fn expected_dom(&self) -> CellType {
        match self.side {
            Side::Left => self.acting.ty().concat(&self.carrier),
            Side::Right => self.carrier.concat(&self.acting.ty()),
        }
    }

    pub fn validate_shapes(&self) -> CheckReport {
        let mut s = ShapeCheck::default();
        s.cell("action", &self.action, &self.expected_dom(), &self.carrier);
        s.finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComoduleDesc {
    pub acting: Space,
    pub carrier: CellType,
    pub coaction: TwoCell,
    pub side: Side,
}

impl ComoduleDesc {
    pub fn left(acting: Space, carrier: CellType, coaction: TwoCell) -> ComoduleDesc {
        ComoduleDesc {
            acting,
            carrier,
            coaction,
            side: Side::Left,
        }
    }

    pub fn right(acting: Space, carrier: CellType, coaction: TwoCell) -> ComoduleDesc {
        ComoduleDesc {
            acting,
            carrier,
            coaction,
            side: Side::Right,
        }
    }

    pub fn expected_cod(&self) -> CellType {
        match self.side {
            Side::Left => self.acting.ty().concat(&self.carrier),
            Side::Right => self.carrier.concat(&self.acting.ty()),
        }
    }

    pub fn validate_shapes(&self) -> CheckReport {
        let mut s = ShapeCheck::default();
        s.cell("coaction", &self.coaction, &self.carrier, &self.expected_cod());
        s.finish()
    }
}

/// A left Tambara module `(X, τ_{B,X}, ν)`; `tau_bb` is the law `τ_{B,B}`
/// entering naturality with respect to the action.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TambaraModuleDesc {
    pub base: MonadDesc,
    pub tau_bb: DistLaw,
    pub x: CellType,
    pub tau: DistLaw,
    pub nu: ModuleDesc,
}

impl TambaraModuleDesc {
    pub fn validate_shapes(&self) -> CheckReport {
        let mut s = ShapeCheck::default();
        s.monad(&self.base);
        let b = self.base.ty();
        s.cell("tau_bb", &self.tau_bb.cell, &b.concat(&b), &b.concat(&b));
        s.cell("tau", &self.tau.cell, &b.concat(&self.x), &self.x.concat(&b));
        s.cell("nu", &self.nu.action, &b.concat(&self.x), &self.x);
        s.finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuasiBimonadDesc {
    pub monad: MonadDesc,
    pub comonad: ComonadDesc,
    pub tau_ff: DistLaw,
    pub phi: TwoCell,
    pub phi_inv: Option<TwoCell>,
}

impl QuasiBimonadDesc {
    pub fn space(&self) -> &Space {
        &self.monad.carrier
    }

    pub fn field(&self) -> Field {
        self.monad.field()
    }

    pub fn validate_shapes(&self) -> CheckReport {
        let mut s = ShapeCheck::default();
        s.bimonad_parts(&self.monad, &self.comonad, &self.tau_ff);
        let f = self.monad.ty();
        let fff = CellType::join(&[&f, &f, &f]);
        s.cell("phi", &self.phi, &CellType::unit(), &fff);
        if let Some(pi) = &self.phi_inv {
            s.cell("phi_inv", pi, &CellType::unit(), &fff);
        }
        s.finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoquasiBimonadDesc {
    pub monad: MonadDesc,
    pub comonad: ComonadDesc,
    pub tau_ff: DistLaw,
    pub omega: TwoCell,
    pub omega_inv: Option<TwoCell>,
}

impl CoquasiBimonadDesc {
    pub fn space(&self) -> &Space {
        &self.monad.carrier
    }

    pub fn field(&self) -> Field {
        self.monad.field()
    }

    pub fn validate_shapes(&self) -> CheckReport {
        let mut s = ShapeCheck::default();
        s.bimonad_parts(&self.monad, &self.comonad, &self.tau_ff);
        let f = self.monad.ty();
        let fff = CellType::join(&[&f, &f, &f]);
        s.cell("omega", &self.omega, &fff, &CellType::unit());
        if let Some(oi) = &self.omega_inv {
            s.cell("omega_inv", oi, &fff, &CellType::unit());
        }
        s.finish()
    }
}

/// A bimonad `(F, μ, η, Δ, ε, λ)` with `λ: FF -> FF`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BimonadDesc {
    pub monad: MonadDesc,
    pub comonad: ComonadDesc,
    pub lambda: DistLaw,
}

impl BimonadDesc {
    pub fn space(&self) -> &Space {
        &self.monad.carrier
    }

    pub fn field(&self) -> Field {
        self.monad.field()
    }

    pub fn validate_shapes(&self) -> CheckReport {
        let mut s = ShapeCheck::default();
        s.bimonad_parts(&self.monad, &self.comonad, &self.lambda);
        s.finish()
    }
}

/// Sweedler's Hopf datum `(ψ, μ_M, η_M, ε_F, β)` over a monad `B`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SweedlerDatum {
    pub b: MonadDesc,
    pub f: Space,
    pub psi: DistLaw,
    pub mu_m: TwoCell,
    pub eta_m: TwoCell,
    pub eps_f: TwoCell,
    /// Defaults to the identity when absent.
    pub beta: Option<TwoCell>,
}

impl SweedlerDatum {
    pub fn field(&self) -> Field {
        self.b.field()
    }

    /// The measuring `b ◁ f = (ε_F ⊗ id_B) ψ`.
    pub fn action(&self) -> Result<TwoCell> {
        comp(&[&tensor(&[&self.eps_f, &identity(&self.b.ty(), self.field())])?, &self.psi.cell])
    }

    /// The cocycle `σ = (ε_F ⊗ id_B) μ_M`.
    pub fn sigma(&self) -> Result<TwoCell> {
        comp(&[&tensor(&[&self.eps_f, &identity(&self.b.ty(), self.field())])?, &self.mu_m])
    }

    pub fn beta_or_id(&self) -> TwoCell {
        let f = self.f.ty();
        self.beta
            .clone()
            .unwrap_or_else(|| identity(&CellType::join(&[&f, &f, &f]), self.field()))
    }

    pub fn validate_shapes(&self) -> CheckReport {
        let mut s = ShapeCheck::default();
        s.monad(&self.b);
        let (b, f) = (self.b.ty(), self.f.ty());
        let fb = f.concat(&b);
        s.cell("psi", &self.psi.cell, &b.concat(&f), &fb);
        s.cell("mu_M", &self.mu_m, &f.concat(&f), &fb);
        s.cell("eta_M", &self.eta_m, &CellType::unit(), &fb);
        s.cell("eps_F", &self.eps_f, &f, &CellType::unit());
        if let Some(beta) = &self.beta {
            let fff = CellType::join(&[&f, &f, &f]);
            s.cell("beta", beta, &fff, &fff);
        }
        s.finish()
    }
}

/// Hausser-Nill datum `(ψ, Δ_M, ε_M, η_F, β)` over a monad `B`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HausserNillDatum {
    pub b: MonadDesc,
    pub f: Space,
    pub psi: DistLaw,
    pub delta_m: TwoCell,
    pub eps_m: TwoCell,
    pub eta_f: TwoCell,
    pub beta: Option<TwoCell>,
}

impl HausserNillDatum {
    pub fn field(&self) -> Field {
        self.b.field()
    }

    /// The comeasuring `λ_B = ψ (id_B ⊗ η_F)`.
    pub fn coaction(&self) -> Result<TwoCell> {
        comp(&[&self.psi.cell, &tensor(&[&identity(&self.b.ty(), self.field()), &self.eta_f])?])
    }

    /// `Φ_λ = Δ_M η_F`.
    pub fn phi_lambda(&self) -> Result<TwoCell> {
        comp(&[&self.delta_m, &self.eta_f])
    }

    pub fn beta_or_id(&self) -> TwoCell {
        let f = self.f.ty();
        self.beta
            .clone()
            .unwrap_or_else(|| identity(&CellType::join(&[&f, &f, &f]), self.field()))
    }

    pub fn validate_shapes(&self) -> CheckReport {
        let mut s = ShapeCheck::default();
        s.monad(&self.b);
        let (b, f) = (self.b.ty(), self.f.ty());
        s.cell("psi", &self.psi.cell, &b.concat(&f), &f.concat(&b));
        s.cell("delta_M", &self.delta_m, &f, &CellType::join(&[&f, &f, &b]));
        s.cell("eps_M", &self.eps_m, &f, &b);
        s.cell("eta_F", &self.eta_f, &CellType::unit(), &f);
        if let Some(beta) = &self.beta {
            let fff = CellType::join(&[&f, &f, &f]);
            s.cell("beta", beta, &fff, &fff);
        }
        s.finish()
    }
}

/// A Yetter-Drinfel'd module `(X, ψ, φ)` over a bimonad. On the left side
/// `ψ: FX -> XF` and `φ: XF -> FX`; on the right side `ψ: XF -> FX` and
/// `φ: FX -> XF`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct YDModuleDesc {
    pub bimonad: BimonadDesc,
    pub x: CellType,
    pub psi: DistLaw,
    pub phi: DistLaw,
    pub side: Side,
}

impl YDModuleDesc {
    pub fn field(&self) -> Field {
        self.bimonad.field()
    }

    /// `(id_X ⊗ ε) ψ` on the left, `(ε ⊗ id_X) ψ` on the right.
    pub fn action(&self) -> Result<TwoCell> {
        let idx = identity(&self.x, self.field());
        let eps = &self.bimonad.comonad.eps;
        match self.side {
            Side::Left => comp(&[&tensor(&[&idx, eps])?, &self.psi.cell]),
            Side::Right => comp(&[&tensor(&[eps, &idx])?, &self.psi.cell]),
        }
    }

    /// `φ (id_X ⊗ η)` on the left, `φ (η ⊗ id_X)` on the right.
    pub fn coaction(&self) -> Result<TwoCell> {
        let idx = identity(&self.x, self.field());
        let eta = &self.bimonad.monad.eta;
        match self.side {
            Side::Left => comp(&[&self.phi.cell, &tensor(&[&idx, eta])?]),
            Side::Right => comp(&[&self.phi.cell, &tensor(&[eta, &idx])?]),
        }
    }

    pub fn validate_shapes(&self) -> CheckReport {
        let mut s = ShapeCheck::default();
        s.bimonad_parts(&self.bimonad.monad, &self.bimonad.comonad, &self.bimonad.lambda);
        let f = self.bimonad.monad.ty();
        let (fx, xf) = (f.concat(&self.x), self.x.concat(&f));
        match self.side {
            Side::Left => {
                s.cell("psi", &self.psi.cell, &fx, &xf);
                s.cell("phi", &self.phi.cell, &xf, &fx);
            }
            Side::Right => {
                s.cell("psi", &self.psi.cell, &xf, &fx);
                s.cell("phi", &self.phi.cell, &fx, &xf);
            }
        }
        s.finish()
    }
}

/// A relative `(F, B)`-module: a `B`-module and `F`-comodule `M` whose
/// structures are compatible through `ψ_{B,F}`. Left side: `BM -> M`,
/// `M -> FM`, `ψ: BF -> FB`; right side is the mirror.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelativeModuleDesc {
    pub b: MonadDesc,
    pub f: ComonadDesc,
    pub psi_bf: DistLaw,
    pub m: CellType,
    pub action: TwoCell,
    pub coaction: TwoCell,
    pub side: Side,
}

impl RelativeModuleDesc {
    pub fn field(&self) -> Field {
        self.b.field()
    }

    pub fn module(&self) -> ModuleDesc {
        ModuleDesc {
            acting: self.b.carrier.clone(),
            carrier: self.m.clone(),
            action: self.action.clone(),
            side: self.side,
        }
    }

    pub fn comodule(&self) -> ComoduleDesc {
        ComoduleDesc {
            acting: self.f.carrier.clone(),
            carrier: self.m.clone(),
            coaction: self.coaction.clone(),
            side: self.side,
        }
    }

    pub fn validate_shapes(&self) -> CheckReport {
        let mut s = ShapeCheck::default();
        s.monad(&self.b);
        s.comonad(&self.f);
        let (b, f) = (self.b.ty(), self.f.ty());
        match self.side {
            Side::Left => s.cell("psi_bf", &self.psi_bf.cell, &b.concat(&f), &f.concat(&b)),
            Side::Right => s.cell("psi_bf", &self.psi_bf.cell, &f.concat(&b), &b.concat(&f)),
        }
        let md = self.module();
        s.cell("action", &self.action, &md.expected_dom(), &self.m);
        let cd = self.comodule();
        s.cell("coaction", &self.coaction, &self.m, &cd.expected_cod());
        s.finish()
    }
}

/// Any descriptor, as read from a structure file.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Structure {
    Monad(MonadDesc),
    Comonad(ComonadDesc),
    DistLaw(DistLaw),
    Module(ModuleDesc),
    Comodule(ComoduleDesc),
    Tambara(TambaraModuleDesc),
    QuasiBimonad(QuasiBimonadDesc),
    CoquasiBimonad(CoquasiBimonadDesc),
    Bimonad(BimonadDesc),
    Sweedler(SweedlerDatum),
    HausserNill(HausserNillDatum),
    YD(YDModuleDesc),
    Relative(RelativeModuleDesc),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Monad(_) => "monad",
            Structure::Comonad(_) => "comonad",
            Structure::DistLaw(_) => "dist-law",
            Structure::Module(_) => "module",
            Structure::Comodule(_) => "comodule",
            Structure::Tambara(_) => "tambara",
            Structure::QuasiBimonad(_) => "quasi-bimonad",
            Structure::CoquasiBimonad(_) => "coquasi-bimonad",
            Structure::Bimonad(_) => "bimonad",
            Structure::Sweedler(_) => "sweedler-datum",
            Structure::HausserNill(_) => "hn-datum",
            Structure::YD(_) => "yd-module",
            Structure::Relative(_) => "relative-module",
        }
    }

    pub fn validate_shapes(&self) -> CheckReport {
        match self {
            Structure::Monad(m) => m.validate_shapes(),
            Structure::Comonad(c) => c.validate_shapes(),
            Structure::DistLaw(d) => d.validate_shapes(),
            Structure::Module(m) => m.validate_shapes(),
            Structure::Comodule(c) => c.validate_shapes(),
            Structure::Tambara(t) => t.validate_shapes(),
            Structure::QuasiBimonad(q) => q.validate_shapes(),
            Structure::CoquasiBimonad(q) => q.validate_shapes(),
            Structure::Bimonad(b) => b.validate_shapes(),
            Structure::Sweedler(s) => s.validate_shapes(),
            Structure::HausserNill(h) => h.validate_shapes(),
            Structure::YD(y) => y.validate_shapes(),
            Structure::Relative(r) => r.validate_shapes(),
        }
    }
}

impl Structure {
    /// Every 2-cell of the structure with its role, in a fixed order.
    pub fn cells_mut(&mut self) -> Vec<(String, &mut TwoCell)> {
        fn monad<'a>(p: &str, m: &'a mut MonadDesc, out: &mut Vec<(String, &'a mut TwoCell)>) {
            out.push((format!("{p}mu"), &mut m.mu));
            out.push((format!("{p}eta"), &mut m.eta));
        }
        fn comonad<'a>(p: &str, c: &'a mut ComonadDesc, out: &mut Vec<(String, &'a mut TwoCell)>) {
            out.push((format!("{p}delta"), &mut c.delta));
            out.push((format!("{p}eps"), &mut c.eps));
        }
        let mut out = vec![];
        match self {
            Structure::Monad(m) => monad("", m, &mut out),
            Structure::Comonad(c) => comonad("", c, &mut out),
            Structure::DistLaw(d) => out.push(("cell".into(), &mut d.cell)),
            Structure::Module(m) => out.push(("action".into(), &mut m.action)),
            Structure::Comodule(c) => out.push(("coaction".into(), &mut c.coaction)),
            Structure::Tambara(t) => {
                monad("base.", &mut t.base, &mut out);
                out.push(("tau_bb".into(), &mut t.tau_bb.cell));
                out.push(("tau".into(), &mut t.tau.cell));
                out.push(("nu".into(), &mut t.nu.action));
            }
            Structure::QuasiBimonad(q) => {
                monad("", &mut q.monad, &mut out);
                comonad("", &mut q.comonad, &mut out);
                out.push(("tau_ff".into(), &mut q.tau_ff.cell));
                out.push(("phi".into(), &mut q.phi));
                if let Some(c) = &mut q.phi_inv {
                    out.push(("phi_inv".into(), c));
                }
            }
            Structure::CoquasiBimonad(q) => {
                monad("", &mut q.monad, &mut out);
                comonad("", &mut q.comonad, &mut out);
                out.push(("tau_ff".into(), &mut q.tau_ff.cell));
                out.push(("omega".into(), &mut q.omega));
                if let Some(c) = &mut q.omega_inv {
                    out.push(("omega_inv".into(), c));
                }
            }
            Structure::Bimonad(b) => {
                monad("", &mut b.monad, &mut out);
                comonad("", &mut b.comonad, &mut out);
                out.push(("lambda".into(), &mut b.lambda.cell));
            }
            Structure::Sweedler(d) => {
                monad("b.", &mut d.b, &mut out);
                out.push(("psi".into(), &mut d.psi.cell));
                out.push(("mu_m".into(), &mut d.mu_m));
                out.push(("eta_m".into(), &mut d.eta_m));
                out.push(("eps_f".into(), &mut d.eps_f));
                if let Some(c) = &mut d.beta {
                    out.push(("beta".into(), c));
                }
            }
            Structure::HausserNill(h) => {
                monad("b.", &mut h.b, &mut out);
                out.push(("psi".into(), &mut h.psi.cell));
                out.push(("delta_m".into(), &mut h.delta_m));
                out.push(("eps_m".into(), &mut h.eps_m));
                out.push(("eta_f".into(), &mut h.eta_f));
                if let Some(c) = &mut h.beta {
                    out.push(("beta".into(), c));
                }
            }
            Structure::YD(y) => {
                monad("", &mut y.bimonad.monad, &mut out);
                comonad("", &mut y.bimonad.comonad, &mut out);
                out.push(("lambda".into(), &mut y.bimonad.lambda.cell));
                out.push(("psi".into(), &mut y.psi.cell));
                out.push(("phi".into(), &mut y.phi.cell));
            }
            Structure::Relative(r) => {
                monad("b.", &mut r.b, &mut out);
                comonad("f.", &mut r.f, &mut out);
                out.push(("psi_bf".into(), &mut r.psi_bf.cell));
                out.push(("action".into(), &mut r.action));
                out.push(("coaction".into(), &mut r.coaction));
            }
        }
        out
    }
}

impl MonadDesc {
    pub fn validate_shapes(&self) -> CheckReport {
        let mut s = ShapeCheck::default();
        s.monad(self);
        s.finish()
    }
}

impl ComonadDesc {
    pub fn validate_shapes(&self) -> CheckReport {
        let mut s = ShapeCheck::default();
        s.comonad(self);
        s.finish()
    }
}

/// Accumulates the first type error among several cells.
#[derive(Default)]
struct ShapeCheck {
    err: Option<Witness>,
    fields: BTreeSet<Field>,
}

impl ShapeCheck {
    fn cell(&mut self, role: &str, c: &TwoCell, dom: &CellType, cod: &CellType) {
        self.fields.insert(c.field());
        if self.err.is_none() && (c.dom() != dom || c.cod() != cod) {
            self.err = Some(Witness::Shape {
                lhs: format!("{role}: {} -> {}", c.dom(), c.cod()),
                rhs: format!("expected {dom} -> {cod}"),
            });
        }
    }

    fn monad(&mut self, m: &MonadDesc) {
        let b = m.ty();
        self.cell("mu", &m.mu, &b.concat(&b), &b);
        self.cell("eta", &m.eta, &CellType::unit(), &b);
    }

    fn comonad(&mut self, c: &ComonadDesc) {
        let f = c.ty();
        self.cell("delta", &c.delta, &f, &f.concat(&f));
        self.cell("eps", &c.eps, &f, &CellType::unit());
    }

    fn bimonad_parts(&mut self, m: &MonadDesc, c: &ComonadDesc, l: &DistLaw) {
        self.monad(m);
        self.comonad(c);
        if self.err.is_none() && m.carrier != c.carrier {
            self.err = Some(Witness::Shape {
                lhs: format!("monad on {}", m.carrier),
                rhs: format!("comonad on {}", c.carrier),
            });
        }
        let f = m.ty();
        self.cell("tau_ff", &l.cell, &f.concat(&f), &f.concat(&f));
    }

    fn finish(self) -> CheckReport {
        let mut w = self.err;
        if w.is_none() && self.fields.len() > 1 {
            w = Some(Witness::Error("mixed scalar fields".into()));
        }
        CheckReport::from_witness("shapes", w)
    }
}

/// Turn a failed shape report into an error.
pub fn require_shapes(r: CheckReport) -> Result<()> {
    match r.witness {
        None => Ok(()),
        Some(w) => Err(Error::ShapeMismatch(w.to_string())),
    }
}
