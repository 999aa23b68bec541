//! Named example instances: group algebras of small groups, the
//! (co)quasi-bialgebra structures on `kZ/2` from its 3-cocycle, Sweedler's
//! four dimensional Hopf algebra and the standard YD and relative modules.

use std::collections::BTreeMap;

use crate::constructions::{
    bimonad_from_tau, hn_datum_from_quasi, sweedler_datum_from_coquasi, wreath_product_monad,
    yd_from_tau,
};
use crate::error::{Error, Result};
use crate::lincat::{swap, tensor, CellType, Chain, Space, TwoCell};
use crate::scalar::{Field, Scalar};
use crate::structures::{
    BimonadDesc, ComonadDesc, CoquasiBimonadDesc, DistKind, DistLaw, HausserNillDatum, MonadDesc,
    QuasiBimonadDesc, RelativeModuleDesc, Side, Structure, SweedlerDatum, YDModuleDesc,
};

/// A finite group as a multiplication table, `mul[a][b] = ab`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    pub name: String,
    pub mul: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
    pub id: usize,
}

impl GroupTable {
    /// Validates closure, associativity, identity and inverses.
    pub fn new(name: impl Into<String>, mul: Vec<Vec<usize>>) -> Result<GroupTable> {
        let n = mul.len();
        let bad = |why: String| Err(Error::InvalidGroup(why));
        if n == 0 {
            return bad("empty table".into());
        }
        if mul.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return bad("table is not closed".into());
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return bad(format!("({a}{b}){c} != {a}({b}{c})"));
                    }
                }
            }
        }
        let Some(id) = (0..n).find(|&e| (0..n).all(|a| mul[e][a] == a && mul[a][e] == a)) else {
            return bad("no identity".into());
        };
        let mut inv = Vec::with_capacity(n);
        for a in 0..n {
            match (0..n).find(|&b| mul[a][b] == id && mul[b][a] == id) {
                Some(b) => inv.push(b),
                None => return bad(format!("{a} has no inverse")),
            }
        }
        Ok(GroupTable {
            name: name.into(),
            mul,
            inv,
            id,
        })
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    pub fn trivial() -> GroupTable {
        GroupTable::new("1", vec![vec![0]]).unwrap()
    }

    pub fn cyclic(n: usize) -> GroupTable {
        let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        GroupTable::new(format!("Z{n}"), mul).unwrap()
    }

    pub fn product(a: &GroupTable, b: &GroupTable) -> GroupTable {
        let (na, nb) = (a.order(), b.order());
        let mul = (0..na * nb)
            .map(|x| {
                (0..na * nb)
                    .map(|y| a.mul[x / nb][y / nb] * nb + b.mul[x % nb][y % nb])
                    .collect()
            })
            .collect();
        GroupTable::new(format!("{}x{}", a.name, b.name), mul).unwrap()
    }

    pub fn klein() -> GroupTable {
        GroupTable::product(&GroupTable::cyclic(2), &GroupTable::cyclic(2))
    }

    /// The group generated by permutations, element 0 the identity,
    /// elements in order of discovery.
    pub fn from_perms(name: &str, gens: &[Vec<usize>]) -> GroupTable {
        let deg = gens[0].len();
        let mut elems: Vec<Vec<usize>> = vec![(0..deg).collect()];
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let p: Vec<usize> = (0..deg).map(|k| elems[i][g[k]]).collect();
                if !elems.contains(&p) {
                    elems.push(p);
                }
            }
            i += 1;
        }
        let idx = |p: &Vec<usize>| elems.iter().position(|e| e == p).unwrap();
        let mul = elems
            .iter()
            .map(|a| {
                elems
                    .iter()
                    .map(|b| idx(&(0..deg).map(|k| a[b[k]]).collect()))
                    .collect()
            })
            .collect();
        GroupTable::new(name, mul).unwrap()
    }

    pub fn s3() -> GroupTable {
        GroupTable::from_perms("S3", &[vec![1, 0, 2], vec![1, 2, 0]])
    }

    pub fn d4() -> GroupTable {
        GroupTable::from_perms("D4", &[vec![1, 2, 3, 0], vec![3, 2, 1, 0]])
    }

    /// `±1, ±i, ±j, ±k`, index `2u + s` for unit `u ∈ {1,i,j,k}` and sign `s`.
    pub fn q8() -> GroupTable {
        // unit products: (result unit, sign flip)
        let t = [
            [(0, 0), (1, 0), (2, 0), (3, 0)],
            [(1, 0), (0, 1), (3, 0), (2, 1)],
            [(2, 0), (3, 1), (0, 1), (1, 0)],
            [(3, 0), (2, 0), (1, 1), (0, 1)],
        ];
        let mul = (0..8)
            .map(|a: usize| {
                (0..8)
                    .map(|b: usize| {
                        let (u, s) = t[a / 2][b / 2];
                        2 * u + ((a % 2 + b % 2 + s) % 2)
                    })
                    .collect()
            })
            .collect();
        GroupTable::new("Q8", mul).unwrap()
    }

    /// The shipped tables by name.
    pub fn named(name: &str) -> Option<GroupTable> {
        Some(match name {
            "1" => GroupTable::trivial(),
            "Z2" => GroupTable::cyclic(2),
            "Z3" => GroupTable::cyclic(3),
            "Z4" => GroupTable::cyclic(4),
            "Z2xZ2" => GroupTable::klein(),
            "S3" => GroupTable::s3(),
            "D4" => GroupTable::d4(),
            "Q8" => GroupTable::q8(),
            _ => return None,
        })
    }
}

pub const GROUPS: [&str; 8] = ["1", "Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8"];

fn one(f: Field) -> Scalar {
    Scalar::one(f)
}

fn f_space(n: usize) -> Space {
    Space::new("F", n)
}

/// Crossing on a pair of spaces by the symmetry of `Vect`, declared with
/// every kind.
pub fn swap_law(a: &Space, b: &Space, field: Field) -> DistLaw {
    DistLaw::new(a.ty(), b.ty(), swap(a, b, field), &DistKind::ALL)
}

/// `kG` with `Δg = g ⊗ g`, `ε(g) = 1`, on a space named `F`.
pub fn group_algebra(g: &GroupTable, field: Field) -> (MonadDesc, ComonadDesc) {
    let n = g.order();
    let sp = f_space(n);
    let t = sp.ty();
    let tt = t.concat(&t);
    let mu = TwoCell::from_linear(tt.clone(), t.clone(), field, (0..n * n).map(|c| (g.mul[c / n][c % n], c, one(field)))).unwrap();
    let eta = TwoCell::from_linear(CellType::unit(), t.clone(), field, [(g.id, 0, one(field))]).unwrap();
    let delta = TwoCell::from_linear(t.clone(), tt, field, (0..n).map(|a| (a * n + a, a, one(field)))).unwrap();
    let eps = TwoCell::from_linear(t, CellType::unit(), field, (0..n).map(|a| (0, a, one(field)))).unwrap();
    (MonadDesc::new(sp.clone(), mu, eta), ComonadDesc::new(sp, delta, eps))
}

pub fn group_bimonad(g: &GroupTable, field: Field) -> BimonadDesc {
    let (m, c) = group_algebra(g, field);
    let tau = swap(&m.carrier, &m.carrier, field);
    bimonad_from_tau(&m, &c, &tau, Side::Left).unwrap()
}

/// `ω(a, b, c) = phase^{abc}` on `Z/2`.
pub fn z2_cocycle(phase: i64, a: usize, b: usize, c: usize) -> i64 {
    if a * b * c == 1 {
        phase
    } else {
        1
    }
}

fn check_phase(phase: i64) -> Result<()> {
    if phase != 1 && phase != -1 {
        return Err(Error::Other(format!("phase must be 1 or -1, got {phase}")));
    }
    Ok(())
}

/// Three-leg element `Σ ω(a,b,c) p_a ⊗ p_b ⊗ p_c` over the idempotents
/// `p_a = (1 + (-1)^a g)/2`, written in the group basis.
fn z2_phi(phase: i64, field: Field) -> Result<TwoCell> {
    if field == Field::Fp(2) {
        return Err(Error::Field("the idempotents of kZ/2 need 2 invertible".into()));
    }
    let half = Scalar::ratio(field, 1, 2)?;
    let p = |a: usize, i: usize| {
        if a * i == 1 {
            -&half
        } else {
            half.clone()
        }
    };
    let t = f_space(2).ty();
    let fff = CellType::join(&[&t, &t, &t]);
    let mut entries = vec![];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                let mut acc = Scalar::zero(field);
                for a in 0..2 {
                    for b in 0..2 {
                        for c in 0..2 {
                            let w = Scalar::int(field, z2_cocycle(phase, a, b, c));
                            let term = &(&(&w * &p(a, i)) * &p(b, j)) * &p(c, k);
                            acc.add_assign_ref(&term);
                        }
                    }
                }
                entries.push((vec![i, j, k], vec![], acc));
            }
        }
    }
    TwoCell::from_entries(CellType::unit(), fff, field, entries)
}

/// `kZ/2` with the associator of the 3-cocycle `phase^{abc}`; its own
/// convolution inverse.
pub fn z2_quasi(phase: i64, field: Field) -> Result<QuasiBimonadDesc> {
    check_phase(phase)?;
    let (m, c) = group_algebra(&GroupTable::cyclic(2), field);
    let phi = z2_phi(phase, field)?;
    Ok(QuasiBimonadDesc {
        tau_ff: swap_law(&m.carrier, &m.carrier, field),
        monad: m,
        comonad: c,
        phi_inv: Some(phi.clone()),
        phi,
    })
}

/// `kZ/2` with the reassociator `ω(g^a, g^b, g^c) = phase^{abc}`.
pub fn z2_coquasi(phase: i64, field: Field) -> Result<CoquasiBimonadDesc> {
    check_phase(phase)?;
    let (m, c) = group_algebra(&GroupTable::cyclic(2), field);
    let t = m.ty();
    let fff = CellType::join(&[&t, &t, &t]);
    let omega = TwoCell::from_entries(
        fff,
        CellType::unit(),
        field,
        (0..8).map(|i| (vec![], vec![i >> 2, (i >> 1) & 1, i & 1], Scalar::int(field, z2_cocycle(phase, i >> 2, (i >> 1) & 1, i & 1)))),
    )?;
    Ok(CoquasiBimonadDesc {
        tau_ff: swap_law(&m.carrier, &m.carrier, field),
        monad: m,
        comonad: c,
        omega_inv: Some(omega.clone()),
        omega,
    })
}

fn h4_mul(a: usize, b: usize) -> Option<(usize, i64)> {
    let (ga, xa) = (a & 1, a >> 1);
    let (gb, xb) = (b & 1, b >> 1);
    if xa == 1 && xb == 1 {
        return None;
    }
    let sign = if xa == 1 && gb == 1 { -1 } else { 1 };
    Some((((ga + gb) % 2) + 2 * (xa + xb), sign))
}

/// Sweedler's Hopf algebra on the basis `1, g, x, gx` (index `a + 2b` for
/// `g^a x^b`) and its antipode.
pub fn sweedler_h4(field: Field) -> (MonadDesc, ComonadDesc, TwoCell) {
    let sp = f_space(4);
    let t = sp.ty();
    let tt = t.concat(&t);
    let int = |n: i64| Scalar::int(field, n);
    let mut mu = vec![];
    for a in 0..4 {
        for b in 0..4 {
            if let Some((r, s)) = h4_mul(a, b) {
                mu.push((r, a * 4 + b, int(s)));
            }
        }
    }
    let mu = TwoCell::from_linear(tt.clone(), t.clone(), field, mu).unwrap();
    let eta = TwoCell::from_linear(CellType::unit(), t.clone(), field, [(0, 0, one(field))]).unwrap();
    // Δ1 = 1⊗1, Δg = g⊗g, Δx = x⊗1 + g⊗x, Δ(gx) = gx⊗g + 1⊗gx
    let delta = TwoCell::from_linear(
        t.clone(),
        tt,
        field,
        [
            (0, 0, int(1)),
            (5, 1, int(1)),
            (8, 2, int(1)),
            (6, 2, int(1)),
            (13, 3, int(1)),
            (3, 3, int(1)),
        ],
    )
    .unwrap();
    let eps = TwoCell::from_linear(t.clone(), CellType::unit(), field, [(0, 0, int(1)), (0, 1, int(1))]).unwrap();
    let antipode = TwoCell::from_linear(t.clone(), t, field, [(0, 0, int(1)), (1, 1, int(1)), (3, 2, int(-1)), (2, 3, int(1))]).unwrap();
    (MonadDesc::new(sp.clone(), mu, eta), ComonadDesc::new(sp, delta, eps), antipode)
}

pub fn h4_bimonad(field: Field) -> BimonadDesc {
    let (m, c, _) = sweedler_h4(field);
    let tau = swap(&m.carrier, &m.carrier, field);
    bimonad_from_tau(&m, &c, &tau, Side::Left).unwrap()
}

/// H4 as a coquasi-bimonad with `ω = ε ⊗ ε ⊗ ε`.
pub fn h4_coquasi(field: Field) -> CoquasiBimonadDesc {
    let (m, c, _) = sweedler_h4(field);
    let omega = tensor(&[&c.eps, &c.eps, &c.eps]).unwrap();
    CoquasiBimonadDesc {
        tau_ff: swap_law(&m.carrier, &m.carrier, field),
        monad: m,
        comonad: c,
        omega_inv: Some(omega.clone()),
        omega,
    }
}

/// Inputs of the Sweedler-datum construction: a coquasi-bimonad `F`, a
/// monad `B`, `τ_{B,F}`, the measuring `◁: BF -> B` and `σ: FF -> B`.
#[derive(Clone, Debug)]
pub struct SchInstance {
    pub q: CoquasiBimonadDesc,
    pub b: MonadDesc,
    pub tau_bf: DistLaw,
    pub action: TwoCell,
    pub sigma: TwoCell,
}

/// H4 acting on `B = H4` by `b ◁ h = S(h_1) b h_2`, trivial `σ`.
pub fn h4_sch(field: Field) -> SchInstance {
    let q = h4_coquasi(field);
    let (_, _, s) = sweedler_h4(field);
    let b = q.monad.relabel("B");
    let f = q.monad.ty();
    let bt = b.ty();
    let tau_bf = swap_law(&b.carrier, &q.monad.carrier, field);
    // b ⊗ h -> b ⊗ h1 ⊗ h2 -> h1 ⊗ b ⊗ h2 -> S(h1) ⊗ b ⊗ h2 -> S(h1) b h2
    let bbb = CellType::join(&[&bt, &bt, &bt]);
    let mul3 = Chain::start(&bbb, field).at(0, &b.mu).unwrap().at(0, &b.mu).unwrap().done();
    let mul3 = mul3.retype(CellType::join(&[&f, &bt, &f]), bt.clone()).unwrap();
    let action = Chain::start(&bt.concat(&f), field)
        .at(1, &q.comonad.delta)
        .unwrap()
        .at(0, &swap(&b.carrier, &q.monad.carrier, field))
        .unwrap()
        .at(0, &s)
        .unwrap()
        .then(&mul3)
        .unwrap()
        .done();
    let sigma = comp_unit_counit(&b, &q.comonad);
    SchInstance {
        tau_bf,
        action,
        sigma,
        q,
        b,
    }
}

/// `η_B (ε ⊗ ε)`.
fn comp_unit_counit(b: &MonadDesc, c: &ComonadDesc) -> TwoCell {
    Chain::from(tensor(&[&c.eps, &c.eps]).unwrap()).then(&b.eta).unwrap().done()
}

/// Inputs of the Hausser-Nill construction.
#[derive(Clone, Debug)]
pub struct MartinInstance {
    pub q: QuasiBimonadDesc,
    pub b: MonadDesc,
    pub tau_bf: DistLaw,
    pub lambda_b: TwoCell,
    pub phi_lambda: TwoCell,
}

/// `B = kZ/2` coacting on itself by `Δ`, `Φ_λ = Φ` with its last leg in `B`.
pub fn z2_martin(phase: i64, field: Field) -> Result<MartinInstance> {
    let q = z2_quasi(phase, field)?;
    let b = q.monad.relabel("B");
    let f = q.monad.ty();
    let bt = b.ty();
    let lambda_b = q.comonad.delta.retype(bt.clone(), f.concat(&bt))?;
    let phi_lambda = q.phi.retype(CellType::unit(), CellType::join(&[&f, &f, &bt]))?;
    Ok(MartinInstance {
        tau_bf: swap_law(&b.carrier, &q.monad.carrier, field),
        q,
        b,
        lambda_b,
        phi_lambda,
    })
}

/// `X = kG` with `h ▷ k = hkh⁻¹` and `k ↦ k ⊗ k`.
pub fn conjugation_yd(g: &GroupTable, field: Field) -> Result<YDModuleDesc> {
    let n = g.order();
    let (m, c) = group_algebra(g, field);
    let xs = Space::new("X", n);
    let (f, x) = (m.ty(), xs.ty());
    let action = TwoCell::from_linear(
        f.concat(&x),
        x.clone(),
        field,
        (0..n * n).map(|col| {
            let (h, k) = (col / n, col % n);
            (g.mul[g.mul[h][k]][g.inv[h]], col, one(field))
        }),
    )?;
    let coaction = TwoCell::from_linear(x.clone(), f.concat(&x), field, (0..n).map(|k| (k * n + k, k, one(field))))?;
    yd_from_tau(
        &m,
        &c,
        &swap(&m.carrier, &m.carrier, field),
        &swap(&m.carrier, &xs, field),
        &swap(&xs, &m.carrier, field),
        &action,
        &coaction,
        Side::Left,
    )
}

/// A bimonad `F` regarded as a left `F`-comodule monad `B = F` over
/// itself: `ψ(b ⊗ f) = b_1 f ⊗ b_2`, `M = B` acted on by `μ` and coacted
/// on by `Δ`.
pub fn self_relative(bm: &BimonadDesc) -> Result<RelativeModuleDesc> {
    let field = bm.field();
    let b = bm.monad.relabel("B");
    let fsp = bm.monad.carrier.clone();
    let (bt, f) = (b.ty(), fsp.ty());
    let delta_fb = bm.comonad.delta.retype(bt.clone(), f.concat(&bt))?;
    let psi = Chain::start(&bt.concat(&f), field)
        .at(0, &delta_fb)?
        .at(1, &swap(&b.carrier, &fsp, field))?
        .at(0, &bm.monad.mu)?
        .done();
    Ok(RelativeModuleDesc {
        psi_bf: DistLaw::new(bt.clone(), f.clone(), psi, &[DistKind::LeftMonadic]),
        f: bm.comonad.clone(),
        m: bt.clone(),
        action: b.mu.clone(),
        coaction: delta_fb,
        b,
        side: Side::Left,
    })
}

pub fn h4_sweedler(field: Field) -> Result<SweedlerDatum> {
    let s = h4_sch(field);
    sweedler_datum_from_coquasi(&s.q, &s.b, &s.tau_bf, &s.action, &s.sigma)
}

pub fn z2_hn(phase: i64, field: Field) -> Result<HausserNillDatum> {
    let m = z2_martin(phase, field)?;
    hn_datum_from_quasi(&m.q, &m.b, &m.tau_bf, &m.lambda_b, &m.phi_lambda)
}

/// Names understood by [`get`], in listing order.
pub fn names() -> Vec<String> {
    let mut out: Vec<String> = GROUPS.iter().map(|g| format!("k{g}")).collect();
    out.extend(
        [
            "z2_quasi(1)",
            "z2_quasi(-1)",
            "z2_coquasi(1)",
            "z2_coquasi(-1)",
            "h4",
            "h4-coquasi",
            "h4-sweedler",
            "h4-smash",
            "z2-hn",
        ]
        .map(String::from),
    );
    out.extend(GROUPS.iter().map(|g| format!("conj_yd({g})")));
    out.extend(GROUPS.iter().map(|g| format!("self_relative(k{g})")));
    out.push("self_relative(h4)".into());
    out
}

fn inner<'a>(name: &'a str, head: &str) -> Option<&'a str> {
    name.strip_prefix(head)?.strip_prefix('(')?.strip_suffix(')')
}

fn group(name: &str) -> Result<GroupTable> {
    GroupTable::named(name).ok_or_else(|| Error::Other(format!("unknown group `{name}`")))
}

fn phase(s: &str) -> Result<i64> {
    s.parse().map_err(|_| Error::Other(format!("bad phase `{s}`")))
}

/// The named instance as a structure.
pub fn get(name: &str, field: Field) -> Result<Structure> {
    if let Some(g) = name.strip_prefix('k') {
        if let Some(t) = GroupTable::named(g) {
            return Ok(Structure::Bimonad(group_bimonad(&t, field)));
        }
    }
    if let Some(p) = inner(name, "z2_quasi") {
        return Ok(Structure::QuasiBimonad(z2_quasi(phase(p)?, field)?));
    }
    if let Some(p) = inner(name, "z2_coquasi") {
        return Ok(Structure::CoquasiBimonad(z2_coquasi(phase(p)?, field)?));
    }
    if let Some(g) = inner(name, "conj_yd") {
        return Ok(Structure::YD(conjugation_yd(&group(g)?, field)?));
    }
    if let Some(inst) = inner(name, "self_relative") {
        let bm = if inst == "h4" {
            h4_bimonad(field)
        } else {
            let g = inst
                .strip_prefix('k')
                .ok_or_else(|| Error::Other(format!("unknown instance `{inst}`")))?;
            group_bimonad(&group(g)?, field)
        };
        return Ok(Structure::Relative(self_relative(&bm)?));
    }
    Ok(match name {
        "h4" => Structure::Bimonad(h4_bimonad(field)),
        "h4-coquasi" => Structure::CoquasiBimonad(h4_coquasi(field)),
        "h4-sweedler" => Structure::Sweedler(h4_sweedler(field)?),
        "h4-smash" => Structure::Monad(wreath_product_monad(&h4_sweedler(field)?)?),
        "z2-hn" => Structure::HausserNill(z2_hn(-1, field)?),
        _ => return Err(Error::Other(format!("unknown zoo instance `{name}`"))),
    })
}

/// Every named instance.
pub fn all(field: Field) -> BTreeMap<String, Result<Structure>> {
    names()
        .into_iter()
        .map(|n| {
            let s = get(&n, field);
            (n, s)
        })
        .collect()
}
