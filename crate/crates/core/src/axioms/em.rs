//! Eilenberg-Moore 2-cocycle families and 2-/3-cocycles in K.

use std::collections::{BTreeMap, BTreeSet};

use super::Suite;
use crate::error::{Error, Result};
use crate::lincat::{comp, identity, tensor, CellType, Chain, TwoCell};
use crate::report::{family_law, AxiomSuiteReport, CheckReport};
use crate::scalar::Field;
use crate::structures::{require_shapes, MonadDesc};

/// A generating morphism `src -> dst` between two listed objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub src: CellType,
    pub dst: CellType,
    pub cell: TwoCell,
}

pub type Pair = (CellType, CellType);
pub type Triple = (CellType, CellType, CellType);

/// Finite data of a candidate Eilenberg-Moore 2-cocycle `ρ̄_{X,Y}: XY -> XYB`
/// over a monad `B`. The unit object is the empty string.
#[derive(Clone, Debug)]
pub struct EmFamily {
    pub b: MonadDesc,
    pub objects: Vec<CellType>,
    /// `ψ_{B,X}: BX -> XB` per listed object; the unit object uses `id_B`.
    pub psi: BTreeMap<CellType, TwoCell>,
    pub rho: BTreeMap<Pair, TwoCell>,
    pub rho_inv: BTreeMap<Pair, TwoCell>,
    /// Associativity constraints `(XY)Z -> X(YZ)`; identities when `None`.
    pub alpha: Option<BTreeMap<Triple, TwoCell>>,
    pub morphisms: Vec<Morphism>,
}

/// Ids of the family suite, in report order.
pub const EM_LAWS: [&str; 6] = [
    "natur",
    "vert comp M",
    "2-cells EM^M",
    "monad law ro new",
    "monad law ro",
    "normalized in EM",
];

fn show(t: &CellType) -> String {
    if t.is_empty() {
        "I".into()
    } else {
        t.legs.iter().map(|s| s.name.as_str()).collect::<Vec<_>>().join("")
    }
}

fn show_all(ts: &[&CellType]) -> String {
    format!("({})", ts.iter().map(|t| show(t)).collect::<Vec<_>>().join(","))
}

impl EmFamily {
    pub fn field(&self) -> Field {
        self.b.field()
    }

    fn pairs(&self) -> Vec<Pair> {
        let mut out = vec![];
        for x in &self.objects {
            for y in &self.objects {
                out.push((x.clone(), y.clone()));
            }
        }
        out
    }

    fn triples(&self) -> Vec<Triple> {
        let mut out = vec![];
        for x in &self.objects {
            for y in &self.objects {
                for z in &self.objects {
                    out.push((x.clone(), y.clone(), z.clone()));
                }
            }
        }
        out
    }

    fn get<'a>(map: &'a BTreeMap<Pair, TwoCell>, what: &str, x: &CellType, y: &CellType) -> Result<&'a TwoCell> {
        map.get(&(x.clone(), y.clone()))
            .ok_or_else(|| Error::MissingEntry(format!("{what}{}", show_all(&[x, y]))))
    }

    pub fn rho_at(&self, x: &CellType, y: &CellType) -> Result<&TwoCell> {
        EmFamily::get(&self.rho, "rho", x, y)
    }

    pub fn rho_inv_at(&self, x: &CellType, y: &CellType) -> Result<&TwoCell> {
        EmFamily::get(&self.rho_inv, "rho_inv", x, y)
    }

    /// `ψ_{B,X}` for a listed object, `id_B` for the unit.
    pub fn psi_at(&self, x: &CellType) -> Result<TwoCell> {
        if x.is_empty() {
            return Ok(identity(&self.b.ty(), self.field()));
        }
        self.psi
            .get(x)
            .cloned()
            .ok_or_else(|| Error::MissingEntry(format!("psi{}", show_all(&[x]))))
    }

    pub fn alpha_at(&self, x: &CellType, y: &CellType, z: &CellType) -> Result<TwoCell> {
        match &self.alpha {
            None => Ok(identity(&CellType::join(&[x, y, z]), self.field())),
            Some(m) => m
                .get(&(x.clone(), y.clone(), z.clone()))
                .cloned()
                .ok_or_else(|| Error::MissingEntry(format!("alpha{}", show_all(&[x, y, z])))),
        }
    }

    /// Entries the selected laws read, reported as `MissingEntry` before
    /// any evaluation.
    pub fn precheck(&self, laws: &[&str]) -> Result<()> {
        let sel: BTreeSet<&str> = laws.iter().copied().collect();
        let uses = |id: &str| sel.contains(id);
        let needs_rho = ["natur", "vert comp M", "2-cells EM^M", "monad law ro new", "normalized in EM"];
        let needs_inv = ["vert comp M", "2-cells EM^M", "monad law ro", "normalized in EM"];
        if needs_rho.iter().any(|l| uses(l)) {
            for (x, y) in self.pairs() {
                self.rho_at(&x, &y)?;
            }
        }
        if needs_inv.iter().any(|l| uses(l)) {
            for (x, y) in self.pairs() {
                self.rho_inv_at(&x, &y)?;
            }
        }
        if uses("2-cells EM^M") || uses("monad law ro new") || uses("monad law ro") {
            for x in &self.objects {
                self.psi_at(x)?;
            }
        }
        let composites = |map: &BTreeMap<Pair, TwoCell>, what: &str| -> Result<()> {
            for (x, y, z) in self.triples() {
                EmFamily::get(map, what, &x, &y.concat(&z))?;
                EmFamily::get(map, what, &x.concat(&y), &z)?;
                self.alpha_at(&x, &y, &z)?;
            }
            Ok(())
        };
        if uses("monad law ro new") {
            composites(&self.rho, "rho")?;
        }
        if uses("monad law ro") {
            composites(&self.rho_inv, "rho_inv")?;
        }
        Ok(())
    }
}

/// `ψ_{B,XY} = (id_X ⊗ ψ_{B,Y})(ψ_{B,X} ⊗ id_Y)`.
fn psi_pair(fam: &EmFamily, x: &CellType, y: &CellType) -> Result<TwoCell> {
    let b = fam.b.ty();
    Chain::start(&CellType::join(&[&b, x, y]), fam.field())
        .at(0, &fam.psi_at(x)?)?
        .at(x.len(), &fam.psi_at(y)?)
        .map(Chain::done)
}

fn law_natur(fam: &EmFamily) -> CheckReport {
    let f = fam.field();
    let mut inst = vec![];
    for m in &fam.morphisms {
        for y in &fam.objects {
            inst.push((format!("{}⊗{}", m.name, show(y)), m, y.clone(), true));
            inst.push((format!("{}⊗{}", show(y), m.name), m, y.clone(), false));
        }
    }
    let names: Vec<String> = inst.iter().map(|i| i.0.clone()).collect();
    let b = fam.b.ty();
    family_law("natur", names, |name| {
        let (_, m, y, on_left) = inst.iter().find(|i| i.0 == name).unwrap();
        let idy = identity(y, f);
        if *on_left {
            let l = comp(&[fam.rho_at(&m.dst, y)?, &tensor(&[&m.cell, &idy])?])?;
            let r = comp(&[&tensor(&[&m.cell, &idy, &identity(&b, f)])?, fam.rho_at(&m.src, y)?])?;
            Ok((l, r))
        } else {
            let l = comp(&[fam.rho_at(y, &m.dst)?, &tensor(&[&idy, &m.cell])?])?;
            let r = comp(&[&tensor(&[&idy, &m.cell, &identity(&b, f)])?, fam.rho_at(y, &m.src)?])?;
            Ok((l, r))
        }
    })
}

fn law_vert_comp(fam: &EmFamily) -> CheckReport {
    let f = fam.field();
    let mut named = vec![];
    for (x, y) in fam.pairs() {
        named.push((format!("inv after rho {}", show_all(&[&x, &y])), x.clone(), y.clone(), true));
        named.push((format!("rho after inv {}", show_all(&[&x, &y])), x, y, false));
    }
    family_law("vert comp M", named.iter().map(|n| n.0.clone()), |name| {
        let (_, x, y, inv_after) = named.iter().find(|n| n.0 == name).unwrap();
        let (first, second) = if *inv_after {
            (fam.rho_at(x, y)?, fam.rho_inv_at(x, y)?)
        } else {
            (fam.rho_inv_at(x, y)?, fam.rho_at(x, y)?)
        };
        let n = x.len() + y.len();
        let l = Chain::from(first.clone()).at(0, second)?.at(n, &fam.b.mu)?.done();
        let r = Chain::start(&x.concat(y), f).at(n, &fam.b.eta)?.done();
        Ok((l, r))
    })
}

fn law_two_cells(fam: &EmFamily) -> CheckReport {
    let f = fam.field();
    let b = fam.b.ty();
    let mut named = vec![];
    for (x, y) in fam.pairs() {
        named.push((format!("rho {}", show_all(&[&x, &y])), x.clone(), y.clone(), false));
        named.push((format!("rho_inv {}", show_all(&[&x, &y])), x, y, true));
    }
    family_law("2-cells EM^M", named.iter().map(|n| n.0.clone()), |name| {
        let (_, x, y, inv) = named.iter().find(|n| n.0 == name).unwrap();
        let r = if *inv {
            fam.rho_inv_at(x, y)?
        } else {
            fam.rho_at(x, y)?
        };
        let (lx, ly) = (x.len(), y.len());
        let dom = CellType::join(&[&b, x, y]);
        let (px, py) = (fam.psi_at(x)?, fam.psi_at(y)?);
        let lhs = Chain::start(&dom, f)
            .at(0, &px)?
            .at(lx, &py)?
            .at(0, r)?
            .at(lx + ly, &fam.b.mu)?
            .done();
        let rhs = Chain::start(&dom, f)
            .at(1, r)?
            .at(0, &px)?
            .at(lx, &py)?
            .at(lx + ly, &fam.b.mu)?
            .done();
        Ok((lhs, rhs))
    })
}

fn triple_names(fam: &EmFamily) -> Vec<(String, Triple)> {
    fam.triples()
        .into_iter()
        .map(|t| (show_all(&[&t.0, &t.1, &t.2]), t))
        .collect()
}

fn law_ro_new(fam: &EmFamily) -> CheckReport {
    let f = fam.field();
    let named = triple_names(fam);
    family_law("monad law ro new", named.iter().map(|n| n.0.clone()), |name| {
        let (_, (x, y, z)) = named.iter().find(|n| n.0 == name).unwrap();
        let n = x.len() + y.len() + z.len();
        let xyz = CellType::join(&[x, y, z]);
        let l = Chain::start(&xyz, f)
            .then(&fam.alpha_at(x, y, z)?)?
            .then(fam.rho_at(x, &y.concat(z))?)?
            .at(x.len(), fam.rho_at(y, z)?)?
            .at(n, &fam.b.mu)?
            .done();
        let r = Chain::start(&xyz, f)
            .then(fam.rho_at(&x.concat(y), z)?)?
            .at(0, fam.rho_at(x, y)?)?
            .at(x.len() + y.len(), &fam.psi_at(z)?)?
            .at(n, &fam.b.mu)?
            .done();
        Ok((l, r))
    })
}

fn law_ro(fam: &EmFamily) -> CheckReport {
    let f = fam.field();
    let named = triple_names(fam);
    family_law("monad law ro", named.iter().map(|n| n.0.clone()), |name| {
        let (_, (x, y, z)) = named.iter().find(|n| n.0 == name).unwrap();
        let n = x.len() + y.len() + z.len();
        let xyz = CellType::join(&[x, y, z]);
        let l = Chain::start(&xyz, f)
            .at(0, fam.rho_inv_at(x, y)?)?
            .at(x.len() + y.len(), &fam.psi_at(z)?)?
            .at(0, fam.rho_inv_at(&x.concat(y), z)?)?
            .at(n, &fam.b.mu)?
            .at(0, &fam.alpha_at(x, y, z)?)?
            .done();
        let r = Chain::start(&xyz, f)
            .at(x.len(), fam.rho_inv_at(y, z)?)?
            .at(0, fam.rho_inv_at(x, &y.concat(z))?)?
            .at(n, &fam.b.mu)?
            .done();
        Ok((l, r))
    })
}

fn law_normalized(fam: &EmFamily) -> CheckReport {
    let f = fam.field();
    let unit = CellType::unit();
    let mut names = vec![];
    for x in &fam.objects {
        for which in ["rho", "rho_inv"] {
            names.push((format!("{which} ({},I)", show(x)), x.clone(), which, true));
            names.push((format!("{which} (I,{})", show(x)), x.clone(), which, false));
        }
    }
    family_law("normalized in EM", names.iter().map(|n| n.0.clone()), |name| {
        let (_, x, which, right) = names.iter().find(|n| n.0 == name).unwrap();
        let (a, b) = if *right { (x, &unit) } else { (&unit, x) };
        let c = if *which == "rho" {
            fam.rho_at(a, b)?
        } else {
            fam.rho_inv_at(a, b)?
        };
        let r = Chain::start(x, f).at(x.len(), &fam.b.eta)?.done();
        Ok((c.clone(), r))
    })
}

/// The full family suite.
pub fn check_em_cocycle_family(fam: &EmFamily) -> Result<AxiomSuiteReport> {
    check_em_laws(fam, &EM_LAWS)
}

/// Only the selected laws of the family suite, in the fixed order.
pub fn check_em_laws(fam: &EmFamily, laws: &[&str]) -> Result<AxiomSuiteReport> {
    require_shapes(fam.b.validate_shapes())?;
    for l in laws {
        if !EM_LAWS.contains(l) {
            return Err(Error::Other(format!("unknown family law `{l}`")));
        }
    }
    fam.precheck(laws)?;
    let mut s = Suite::new("em cocycle family");
    s.domain(format!(
        "objects {}; morphisms [{}]",
        show_all(&fam.objects.iter().collect::<Vec<_>>()),
        fam.morphisms.iter().map(|m| m.name.as_str()).collect::<Vec<_>>().join(",")
    ));
    for id in EM_LAWS {
        if !laws.contains(&id) {
            continue;
        }
        match id {
            "natur" => s.report(move || law_natur(fam)),
            "vert comp M" => s.report(move || law_vert_comp(fam)),
            "2-cells EM^M" => s.report(move || law_two_cells(fam)),
            "monad law ro new" => s.report(move || law_ro_new(fam)),
            "monad law ro" => s.report(move || law_ro(fam)),
            _ => s.report(move || law_normalized(fam)),
        }
    }
    Ok(s.finish())
}

/// `ψ_{B,XY}` of two listed objects.
pub fn em_psi_pair(fam: &EmFamily, x: &CellType, y: &CellType) -> Result<TwoCell> {
    psi_pair(fam, x, y)
}

/// A family of endo-2-cells `ρ_{X_1,...,X_k}: X_1...X_k -> X_1...X_k`,
/// keyed by the tuple of objects.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct KFamily {
    pub objects: Vec<CellType>,
    pub cells: BTreeMap<Vec<CellType>, TwoCell>,
}

impl KFamily {
    pub fn at(&self, key: &[&CellType]) -> Result<&TwoCell> {
        let k: Vec<CellType> = key.iter().map(|t| (*t).clone()).collect();
        self.cells
            .get(&k)
            .ok_or_else(|| Error::MissingEntry(format!("rho{}", show_all(key))))
    }
}

/// Law "inv 2-coc" (`order = 2`) or "3-coc" (`order = 3`) over all
/// tuples of listed objects, plus normalization when asked.
pub fn check_k_cocycle(fam: &KFamily, order: usize, normalized: bool) -> Result<AxiomSuiteReport> {
    match order {
        2 => k_suite(fam, "inv 2-coc", 2, normalized),
        3 => k_suite(fam, "3-coc", 3, normalized),
        _ => Err(Error::Other(format!("cocycle order {order} unsupported"))),
    }
}

/// The pentagon for an associativity constraint `α` is the 3-cocycle
/// condition of the family `α`.
pub fn check_pentagon(alpha: &KFamily) -> Result<AxiomSuiteReport> {
    k_suite(alpha, "pentagon alfa", 3, false)
}

fn tuples(objs: &[CellType], k: usize) -> Vec<Vec<CellType>> {
    let mut out: Vec<Vec<CellType>> = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                objs.iter().map(move |o| {
                    let mut t2 = t.clone();
                    t2.push(o.clone());
                    t2
                })
            })
            .collect();
    }
    out
}

fn k_suite(fam: &KFamily, id: &str, order: usize, normalized: bool) -> Result<AxiomSuiteReport> {
    let field = fam
        .cells
        .values()
        .next()
        .map(|c| c.field())
        .ok_or_else(|| Error::MissingEntry("empty family".into()))?;
    let ts = tuples(&fam.objects, order + 1);
    for t in &ts {
        k_sides(fam, order, t, field)?;
    }
    let mut s = Suite::new(id);
    s.domain(format!(
        "objects {}",
        show_all(&fam.objects.iter().collect::<Vec<_>>())
    ));
    let names: Vec<String> = ts.iter().map(|t| show_all(&t.iter().collect::<Vec<_>>())).collect();
    let id_owned = id.to_string();
    let ts2 = ts.clone();
    s.report(move || {
        family_law(&id_owned, names.clone(), |name| {
            let i = names.iter().position(|n| n == name).unwrap();
            k_sides(fam, order, &ts2[i], field)
        })
    });
    if normalized {
        let unit = CellType::unit();
        let mut inst: Vec<Vec<CellType>> = vec![];
        for t in tuples(&fam.objects, order - 1) {
            for pos in 0..order {
                let mut k = t.clone();
                k.insert(pos, unit.clone());
                if !inst.contains(&k) {
                    inst.push(k);
                }
            }
        }
        for k in &inst {
            fam.at(&k.iter().collect::<Vec<_>>())?;
        }
        let names: Vec<String> = inst.iter().map(|t| show_all(&t.iter().collect::<Vec<_>>())).collect();
        s.report(move || {
            family_law("normalized", names.clone(), |name| {
                let i = names.iter().position(|n| n == name).unwrap();
                let key: Vec<&CellType> = inst[i].iter().collect();
                let c = fam.at(&key)?;
                Ok((c.clone(), identity(c.dom(), field)))
            })
        });
    }
    Ok(s.finish())
}

fn k_sides(fam: &KFamily, order: usize, t: &[CellType], f: Field) -> Result<(TwoCell, TwoCell)> {
    if order == 2 {
        let (x, y, z) = (&t[0], &t[1], &t[2]);
        let yz = y.concat(z);
        let xy = x.concat(y);
        let dom = CellType::join(&[x, y, z]);
        let l = Chain::start(&dom, f)
            .then(fam.at(&[x, &yz])?)?
            .at(x.len(), fam.at(&[y, z])?)?
            .done();
        let r = Chain::start(&dom, f)
            .then(fam.at(&[&xy, z])?)?
            .at(0, fam.at(&[x, y])?)?
            .done();
        Ok((l, r))
    } else {
        let (x, y, z, w) = (&t[0], &t[1], &t[2], &t[3]);
        let dom = CellType::join(&[x, y, z, w]);
        let l = Chain::start(&dom, f)
            .at(0, fam.at(&[x, y, z])?)?
            .then(fam.at(&[x, &y.concat(z), w])?)?
            .at(x.len(), fam.at(&[y, z, w])?)?
            .done();
        let r = Chain::start(&dom, f)
            .then(fam.at(&[&x.concat(y), z, w])?)?
            .then(fam.at(&[x, y, &z.concat(w)])?)?
            .done();
        Ok((l, r))
    }
}

/// `ρ_{X,Y} = (id_{XY} ⊗ ε_B) ρ̄_{X,Y}` for a counit `ε_B: B -> I`.
pub fn k_family_from_em(fam: &EmFamily, eps_b: &TwoCell) -> Result<KFamily> {
    let mut cells = BTreeMap::new();
    for ((x, y), r) in &fam.rho {
        let n = x.len() + y.len();
        let c = Chain::from(r.clone()).at(n, eps_b)?.done();
        cells.insert(vec![x.clone(), y.clone()], c);
    }
    Ok(KFamily {
        objects: fam.objects.clone(),
        cells,
    })
}
