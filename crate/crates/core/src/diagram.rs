//! Recurring diagram fragments: braids of crossings, iterated
//! comultiplications in Sweedler order, and componentwise products.

use crate::error::{Error, Result};
use crate::lincat::{identity, CellType, Chain, Space, TwoCell};
use crate::scalar::Field;
use crate::structures::{ComonadDesc, MonadDesc};

/// Realize a leg permutation by adjacent crossings `tau_of(a, b): [a,b] -> [b,a]`.
/// Output leg `k` is input leg `perm[k]`; the word used is a reduced one.
pub fn braid<T>(t: &CellType, field: Field, perm: &[usize], tau_of: T) -> Result<TwoCell>
where
    T: Fn(&Space, &Space) -> Result<TwoCell>,
{
    braid_onto(Chain::start(t, field), perm, tau_of).map(Chain::done)
}

/// Continue a chain by the braid permuting its codomain legs.
pub fn braid_onto<T>(mut ch: Chain, perm: &[usize], tau_of: T) -> Result<Chain>
where
    T: Fn(&Space, &Space) -> Result<TwoCell>,
{
    let t = ch.cod().clone();
    let n = t.len();
    if perm.len() != n {
        return Err(Error::ShapeMismatch(format!("{perm:?} on {t}")));
    }
    let mut target = vec![usize::MAX; n];
    for (k, &p) in perm.iter().enumerate() {
        if p >= n || target[p] != usize::MAX {
            return Err(Error::ShapeMismatch(format!("{perm:?} is not a permutation")));
        }
        target[p] = k;
    }
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        let mut moved = false;
        for i in 0..n.saturating_sub(1) {
            if target[cur[i]] > target[cur[i + 1]] {
                let tau = tau_of(&t.legs[cur[i]], &t.legs[cur[i + 1]])?;
                ch = ch.at(i, &tau)?;
                cur.swap(i, i + 1);
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    Ok(ch)
}

/// Crossing lookup for strings of a single space.
pub fn single_tau(tau: &TwoCell) -> impl Fn(&Space, &Space) -> Result<TwoCell> + '_ {
    move |a: &Space, b: &Space| {
        let want = CellType::of(&[a, b]);
        if tau.dom() == &want {
            Ok(tau.clone())
        } else {
            Err(Error::TypeMismatch {
                expected: tau.dom().to_string(),
                found: want.to_string(),
            })
        }
    }
}

/// Crossing lookup from a list of crossings keyed by their domain.
pub fn tau_table(taus: &[TwoCell]) -> impl Fn(&Space, &Space) -> Result<TwoCell> + '_ {
    move |a: &Space, b: &Space| {
        let want = CellType::of(&[a, b]);
        taus.iter()
            .find(|t| t.dom() == &want)
            .cloned()
            .ok_or_else(|| Error::MissingEntry(format!("crossing {want}")))
    }
}

/// `F^m -> F^k`: variable `i` is copied `copies[i]` times by the left
/// nested iterated comultiplication (copy 0 is the leftmost Sweedler
/// component), then the copies are braided into `order`.
pub fn spread(
    c: &ComonadDesc,
    tau_ff: &TwoCell,
    copies: &[usize],
    order: &[(usize, usize)],
) -> Result<TwoCell> {
    let field = c.field();
    let m = copies.len();
    let dom = CellType::new(vec![c.carrier.clone(); m]);
    let mut ch = Chain::start(&dom, field);
    let mut pos = 0;
    for &k in copies {
        if k == 0 {
            ch = ch.at(pos, &c.eps)?;
            continue;
        }
        for _ in 1..k {
            ch = ch.at(pos, &c.delta)?;
        }
        pos += k;
    }
    let total: usize = copies.iter().sum();
    if order.len() != total {
        return Err(Error::ShapeMismatch(format!(
            "order lists {} copies, {} produced",
            order.len(),
            total
        )));
    }
    let mut offset = vec![0; m];
    for i in 1..m {
        offset[i] = offset[i - 1] + copies[i - 1];
    }
    let mut perm = Vec::with_capacity(total);
    for &(v, k) in order {
        if v >= m || k >= copies[v] {
            return Err(Error::ShapeMismatch(format!("copy ({v},{k}) out of range")));
        }
        perm.push(offset[v] + k);
    }
    braid_onto(ch, &perm, single_tau(tau_ff)).map(Chain::done)
}

/// The usual Sweedler order for `m` variables in `k` rounds:
/// `x_0 y_0 z_0 x_1 y_1 z_1 ...`.
pub fn rounds(m: usize, k: usize) -> Vec<(usize, usize)> {
    (0..k).flat_map(|r| (0..m).map(move |v| (v, r))).collect()
}

/// Componentwise product on `S S -> S` for a string of monads `S`,
/// interleaving by `tau_of` crossings.
pub fn nabla_string<T>(monads: &[&MonadDesc], field: Field, tau_of: T) -> Result<TwoCell>
where
    T: Fn(&Space, &Space) -> Result<TwoCell>,
{
    let s = CellType::new(monads.iter().map(|m| m.carrier.clone()).collect());
    nabla_onto(Chain::start(&s.concat(&s), field), monads, tau_of).map(Chain::done)
}

/// [`nabla_string`] applied to a chain ending in `S S`.
pub fn nabla_onto<T>(ch: Chain, monads: &[&MonadDesc], tau_of: T) -> Result<Chain>
where
    T: Fn(&Space, &Space) -> Result<TwoCell>,
{
    let n = monads.len();
    let perm: Vec<usize> = (0..n).flat_map(|i| [i, n + i]).collect();
    let mut ch = braid_onto(ch, &perm, tau_of)?;
    for (i, m) in monads.iter().enumerate() {
        ch = ch.at(i, &m.mu)?;
    }
    Ok(ch)
}

/// Componentwise comultiplication `S -> S S` for a string of comonads.
pub fn delta_string<T>(comonads: &[&ComonadDesc], field: Field, tau_of: T) -> Result<TwoCell>
where
    T: Fn(&Space, &Space) -> Result<TwoCell>,
{
    let n = comonads.len();
    let s = CellType::new(comonads.iter().map(|c| c.carrier.clone()).collect());
    if n == 0 {
        return Ok(identity(&CellType::unit(), field));
    }
    let mut ch = Chain::start(&s, field);
    for (i, c) in comonads.iter().enumerate() {
        ch = ch.at(2 * i, &c.delta)?;
    }
    let perm: Vec<usize> = (0..n).map(|i| 2 * i).chain((0..n).map(|i| 2 * i + 1)).collect();
    braid_onto(ch, &perm, tau_of).map(Chain::done)
}

/// `F^n F^n -> F^n` for one monad.
pub fn nabla(m: &MonadDesc, tau_ff: &TwoCell, n: usize) -> Result<TwoCell> {
    let ms = vec![m; n];
    nabla_string(&ms, m.field(), single_tau(tau_ff))
}

/// Product of two elements `I -> F^n`.
pub fn mul_elems(m: &MonadDesc, tau_ff: &TwoCell, a: &TwoCell, b: &TwoCell) -> Result<TwoCell> {
    let n = a.cod().len();
    let ab = crate::lincat::hcomp(a, b)?;
    let ms = vec![m; n];
    nabla_onto(Chain::from(ab), &ms, single_tau(tau_ff)).map(Chain::done)
}

/// Tensor power of the unit `η^{⊗n}: I -> F^n`.
pub fn unit_power(m: &MonadDesc, n: usize) -> Result<TwoCell> {
    let mut acc = identity(&CellType::unit(), m.field());
    for _ in 0..n {
        acc = crate::lincat::hcomp(&acc, &m.eta)?;
    }
    Ok(acc)
}

/// Tensor power of the counit `ε^{⊗n}: F^n -> I`.
pub fn counit_power(c: &ComonadDesc, n: usize) -> Result<TwoCell> {
    let mut acc = identity(&CellType::unit(), c.field());
    for _ in 0..n {
        acc = crate::lincat::hcomp(&acc, &c.eps)?;
    }
    Ok(acc)
}
