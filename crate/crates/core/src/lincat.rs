//! The one-object 2-category of finite dimensional spaces: 1-cells are
//! ordered strings of named spaces, 2-cells are exact sparse matrices.
//!
//! Basis vectors of a string `[A, B, C]` are indexed row-major, so the
//! linear index order agrees with the lexicographic order of multi-indices.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::report::{CheckReport, Witness};
use crate::scalar::{Field, Scalar};

/// Reserved name of the unit space.
pub const UNIT: &str = "I";

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Space {
    pub name: String,
    pub dim: usize,
}

impl Space {
    pub fn new(name: impl Into<String>, dim: usize) -> Space {
        Space {
            name: name.into(),
            dim,
        }
    }

    pub fn unit() -> Space {
        Space::new(UNIT, 1)
    }

    pub fn is_unit(&self) -> bool {
        self.name == UNIT && self.dim == 1
    }

    /// One-leg string.
    pub fn ty(&self) -> CellType {
        CellType::new(vec![self.clone()])
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// An ordered string of spaces; the empty string is the unit 1-cell.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CellType {
    pub legs: Vec<Space>,
}

impl CellType {
    pub fn new(legs: Vec<Space>) -> CellType {
        CellType { legs }
    }

    pub fn unit() -> CellType {
        CellType { legs: vec![] }
    }

    pub fn of(legs: &[&Space]) -> CellType {
        CellType::new(legs.iter().map(|s| (*s).clone()).collect())
    }

    pub fn len(&self) -> usize {
        self.legs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.legs.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.legs.iter().map(|s| s.dim).product()
    }

    pub fn concat(&self, other: &CellType) -> CellType {
        let mut legs = self.legs.clone();
        legs.extend(other.legs.iter().cloned());
        CellType { legs }
    }

    pub fn join(parts: &[&CellType]) -> CellType {
        CellType::new(parts.iter().flat_map(|p| p.legs.iter().cloned()).collect())
    }

    pub fn reversed(&self) -> CellType {
        let mut legs = self.legs.clone();
        legs.reverse();
        CellType { legs }
    }

    pub fn slice(&self, from: usize, to: usize) -> CellType {
        CellType::new(self.legs[from..to].to_vec())
    }

    pub fn dims(&self) -> Vec<usize> {
        self.legs.iter().map(|s| s.dim).collect()
    }

    pub fn encode(&self, idx: &[usize]) -> Result<usize> {
        if idx.len() != self.legs.len() {
            return Err(Error::OutOfBounds(format!(
                "multi-index of length {} for {}",
                idx.len(),
                self
            )));
        }
        let mut lin = 0usize;
        for (i, (&k, s)) in idx.iter().zip(&self.legs).enumerate() {
            if k >= s.dim {
                return Err(Error::OutOfBounds(format!(
                    "index {k} on leg {i} ({}) of dim {}",
                    s.name, s.dim
                )));
            }
            lin = lin * s.dim + k;
        }
        Ok(lin)
    }

    pub fn decode(&self, mut lin: usize) -> Vec<usize> {
        let mut out = vec![0; self.legs.len()];
        for (i, s) in self.legs.iter().enumerate().rev() {
            out[i] = lin % s.dim;
            lin /= s.dim;
        }
        out
    }

    /// Rename every leg called `from`.
    pub fn relabel(&self, from: &str, to: &str) -> CellType {
        CellType::new(
            self.legs
                .iter()
                .map(|s| {
                    if s.name == from {
                        Space::new(to, s.dim)
                    } else {
                        s.clone()
                    }
                })
                .collect(),
        )
    }

    /// Drop reserved unit legs.
    pub fn strip_units(&self) -> CellType {
        CellType::new(self.legs.iter().filter(|s| !s.is_unit()).cloned().collect())
    }
}

impl fmt::Display for CellType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, s) in self.legs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}:{}", s.name, s.dim)?;
        }
        write!(f, "]")
    }
}

/// A linear map `dom -> cod`, stored sparsely as `(row, col) -> value`
/// where rows index `cod` and columns index `dom`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoCell {
    dom: CellType,
    cod: CellType,
    field: Field,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl TwoCell {
    pub fn zero(dom: CellType, cod: CellType, field: Field) -> TwoCell {
        TwoCell {
            dom,
            cod,
            field,
            entries: BTreeMap::new(),
        }
    }

    /// Build from linear indices; repeated positions are summed.
    pub fn from_linear<I>(dom: CellType, cod: CellType, field: Field, it: I) -> Result<TwoCell>
    where
        I: IntoIterator<Item = (usize, usize, Scalar)>,
    {
        let (nr, nc) = (cod.dim(), dom.dim());
        let mut acc: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for (r, c, v) in it {
            if r >= nr || c >= nc {
                return Err(Error::OutOfBounds(format!(
                    "entry ({r},{c}) in {cod} <- {dom}"
                )));
            }
            if v.field() != field {
                return Err(Error::FieldMismatch(field.to_string(), v.field().to_string()));
            }
            acc.entry((r, c))
                .and_modify(|a| a.add_assign_ref(&v))
                .or_insert(v);
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(TwoCell {
            dom,
            cod,
            field,
            entries: acc,
        })
    }

    /// Build from `(row multi-index, col multi-index, value)` triples.
    pub fn from_entries<I>(dom: CellType, cod: CellType, field: Field, it: I) -> Result<TwoCell>
    where
        I: IntoIterator<Item = (Vec<usize>, Vec<usize>, Scalar)>,
    {
        let mut lin = Vec::new();
        for (r, c, v) in it {
            lin.push((cod.encode(&r)?, dom.encode(&c)?, v));
        }
        TwoCell::from_linear(dom, cod, field, lin)
    }

    /// Build from a function of the column returning its nonzero rows.
    pub fn from_columns<F>(dom: CellType, cod: CellType, field: Field, mut f: F) -> Result<TwoCell>
    where
        F: FnMut(&[usize]) -> Vec<(Vec<usize>, Scalar)>,
    {
        let mut lin = Vec::new();
        for c in 0..dom.dim() {
            let ci = dom.decode(c);
            for (r, v) in f(&ci) {
                lin.push((cod.encode(&r)?, c, v));
            }
        }
        TwoCell::from_linear(dom, cod, field, lin)
    }

    pub fn dom(&self) -> &CellType {
        &self.dom
    }

    pub fn cod(&self) -> &CellType {
        &self.cod
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn get(&self, row: usize, col: usize) -> Scalar {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.field))
    }

    pub fn get_multi(&self, row: &[usize], col: &[usize]) -> Result<Scalar> {
        Ok(self.get(self.cod.encode(row)?, self.dom.encode(col)?))
    }

    /// Copy with one entry replaced.
    pub fn with_entry(&self, row: usize, col: usize, v: Scalar) -> TwoCell {
        let mut out = self.clone();
        if v.is_zero() {
            out.entries.remove(&(row, col));
        } else {
            out.entries.insert((row, col), v);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn scale(&self, s: &Scalar) -> TwoCell {
        let mut out = TwoCell::zero(self.dom.clone(), self.cod.clone(), self.field);
        if s.is_zero() {
            return out;
        }
        for (k, v) in &self.entries {
            out.entries.insert(*k, v * s);
        }
        out
    }

    fn same_type(&self, other: &TwoCell) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        if self.dom != other.dom || self.cod != other.cod {
            return Err(Error::TypeMismatch {
                expected: format!("{} -> {}", self.dom, self.cod),
                found: format!("{} -> {}", other.dom, other.cod),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &TwoCell) -> Result<TwoCell> {
        self.same_type(other)?;
        let mut out = self.clone();
        for (k, v) in &other.entries {
            out.entries
                .entry(*k)
                .and_modify(|a| a.add_assign_ref(v))
                .or_insert_with(|| v.clone());
        }
        out.entries.retain(|_, v| !v.is_zero());
        Ok(out)
    }

    pub fn sub(&self, other: &TwoCell) -> Result<TwoCell> {
        self.add(&other.scale(&Scalar::int(self.field, -1)))
    }

    /// Columns of the matrix: col -> [(row, value)].
    fn columns(&self) -> HashMap<usize, Vec<(usize, &Scalar)>> {
        let mut cols: HashMap<usize, Vec<(usize, &Scalar)>> = HashMap::new();
        for (&(r, c), v) in &self.entries {
            cols.entry(c).or_default().push((r, v));
        }
        cols
    }

    /// Rename legs called `from` on both sides.
    pub fn relabel(&self, from: &str, to: &str) -> TwoCell {
        TwoCell {
            dom: self.dom.relabel(from, to),
            cod: self.cod.relabel(from, to),
            field: self.field,
            entries: self.entries.clone(),
        }
    }

    /// Replace the types by others of equal total dimension, keeping the
    /// matrix. Used for deliberate coercions only.
    pub fn retype(&self, dom: CellType, cod: CellType) -> Result<TwoCell> {
        if dom.dim() != self.dom.dim() || cod.dim() != self.cod.dim() {
            return Err(Error::ShapeMismatch(format!(
                "cannot retype {} -> {} as {} -> {}",
                self.dom, self.cod, dom, cod
            )));
        }
        Ok(TwoCell {
            dom,
            cod,
            field: self.field,
            entries: self.entries.clone(),
        })
    }

    /// Conjugate by the permutation reversing the order of tensor factors
    /// on both sides.
    pub fn mirror(&self) -> TwoCell {
        let dom = self.dom.reversed();
        let cod = self.cod.reversed();
        let mut entries = BTreeMap::new();
        for (&(r, c), v) in &self.entries {
            let mut ri = self.cod.decode(r);
            let mut ci = self.dom.decode(c);
            ri.reverse();
            ci.reverse();
            let r2 = cod.encode(&ri).expect("mirror row");
            let c2 = dom.encode(&ci).expect("mirror col");
            entries.insert((r2, c2), v.clone());
        }
        TwoCell {
            dom,
            cod,
            field: self.field,
            entries,
        }
    }

    /// Tensor with identities on the left and right.
    pub fn pad(&self, left: &CellType, right: &CellType) -> Result<TwoCell> {
        hcomp(
            &hcomp(&identity(left, self.field), self)?,
            &identity(right, self.field),
        )
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &TwoCell) -> Result<TwoCell> {
        vcomp(next, self)
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod
            && self.entries.len() == self.dom.dim()
            && self.entries.iter().all(|(&(r, c), v)| r == c && v.is_one())
    }

    /// Convert the scalars to another field.
    pub fn to_field(&self, field: Field) -> Result<TwoCell> {
        let mut lin = Vec::with_capacity(self.entries.len());
        for (&(r, c), v) in &self.entries {
            let s = match v {
                Scalar::Q(q) => Scalar::from_bigs(field, q.numer().clone(), q.denom().clone())?,
                Scalar::Fp { v, .. } => match field {
                    Field::Fp(_) if field == self.field => Scalar::Fp {
                        v: *v,
                        p: field.characteristic(),
                    },
                    _ => {
                        return Err(Error::FieldMismatch(self.field.to_string(), field.to_string()))
                    }
                },
            };
            lin.push((r, c, s));
        }
        TwoCell::from_linear(self.dom.clone(), self.cod.clone(), field, lin)
    }
}

/// Identity 2-cell on a string.
pub fn identity(t: &CellType, field: Field) -> TwoCell {
    let one = Scalar::one(field);
    let entries = (0..t.dim()).map(|i| ((i, i), one.clone())).collect();
    TwoCell {
        dom: t.clone(),
        cod: t.clone(),
        field,
        entries,
    }
}

/// Horizontal composition: the Kronecker product, legs concatenated.
pub fn hcomp(f: &TwoCell, g: &TwoCell) -> Result<TwoCell> {
    if f.field != g.field {
        return Err(Error::FieldMismatch(f.field.to_string(), g.field.to_string()));
    }
    let (gr, gc) = (g.cod.dim(), g.dom.dim());
    let mut entries = BTreeMap::new();
    for (&(r1, c1), v1) in &f.entries {
        for (&(r2, c2), v2) in &g.entries {
            entries.insert((r1 * gr + r2, c1 * gc + c2), v1 * v2);
        }
    }
    Ok(TwoCell {
        dom: f.dom.concat(&g.dom),
        cod: f.cod.concat(&g.cod),
        field: f.field,
        entries,
    })
}

/// Vertical composition `f ∘ g` (g first). Types must agree legwise.
pub fn vcomp(f: &TwoCell, g: &TwoCell) -> Result<TwoCell> {
    if f.field != g.field {
        return Err(Error::FieldMismatch(f.field.to_string(), g.field.to_string()));
    }
    if g.cod != f.dom {
        return Err(Error::TypeMismatch {
            expected: f.dom.to_string(),
            found: g.cod.to_string(),
        });
    }
    let fcols = f.columns();
    let mut acc: HashMap<(usize, usize), Scalar> = HashMap::new();
    for (&(m, c), gv) in &g.entries {
        if let Some(col) = fcols.get(&m) {
            for &(r, fv) in col {
                let p = fv * gv;
                match acc.get_mut(&(r, c)) {
                    Some(a) => a.add_assign_ref(&p),
                    None => {
                        acc.insert((r, c), p);
                    }
                }
            }
        }
    }
    let entries = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    Ok(TwoCell {
        dom: g.dom.clone(),
        cod: f.cod.clone(),
        field: f.field,
        entries,
    })
}

/// The symmetry `x ⊗ y -> y ⊗ x`.
pub fn swap(x: &Space, y: &Space, field: Field) -> TwoCell {
    swap_types(&x.ty(), &y.ty(), field)
}

/// Block symmetry `X ⊗ Y -> Y ⊗ X` for strings.
pub fn swap_types(x: &CellType, y: &CellType, field: Field) -> TwoCell {
    let (dx, dy) = (x.dim(), y.dim());
    let one = Scalar::one(field);
    let entries = (0..dx)
        .flat_map(|i| (0..dy).map(move |j| (i, j)))
        .map(|(i, j)| ((j * dx + i, i * dy + j), one.clone()))
        .collect();
    TwoCell {
        dom: x.concat(y),
        cod: y.concat(x),
        field,
        entries,
    }
}

/// Leg permutation: output leg `k` is input leg `perm[k]`.
pub fn permutation(t: &CellType, perm: &[usize], field: Field) -> Result<TwoCell> {
    let n = t.len();
    let mut seen = vec![false; n];
    if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
        return Err(Error::ShapeMismatch(format!("{perm:?} is not a permutation of {t}")));
    }
    let cod = CellType::new(perm.iter().map(|&p| t.legs[p].clone()).collect());
    let one = Scalar::one(field);
    TwoCell::from_columns(t.clone(), cod, field, |ci| {
        vec![(perm.iter().map(|&p| ci[p]).collect(), one.clone())]
    })
}

/// Compare two cells entrywise.
pub fn equal(f: &TwoCell, g: &TwoCell) -> CheckReport {
    CheckReport::from_witness("equal", compare(f, g))
}

/// The first difference between two cells, if any.
pub fn compare(f: &TwoCell, g: &TwoCell) -> Option<Witness> {
    if f.dom != g.dom || f.cod != g.cod {
        return Some(Witness::Shape {
            lhs: format!("{} -> {}", f.dom, f.cod),
            rhs: format!("{} -> {}", g.dom, g.cod),
        });
    }
    if f.field != g.field {
        return Some(Witness::Error(format!(
            "field mismatch {} vs {}",
            f.field, g.field
        )));
    }
    let mut a = f.entries.iter().peekable();
    let mut b = g.entries.iter().peekable();
    let zero = Scalar::zero(f.field);
    let entry = |k: (usize, usize), l: &Scalar, r: &Scalar| Witness::Entry {
        row: f.cod.decode(k.0),
        col: f.dom.decode(k.1),
        lhs: l.clone(),
        rhs: r.clone(),
    };
    loop {
        match (a.peek(), b.peek()) {
            (None, None) => return None,
            (Some((ka, va)), None) => return Some(entry(**ka, va, &zero)),
            (None, Some((kb, vb))) => return Some(entry(**kb, &zero, vb)),
            (Some((ka, va)), Some((kb, vb))) => {
                if ka < kb {
                    return Some(entry(**ka, va, &zero));
                } else if kb < ka {
                    return Some(entry(**kb, &zero, vb));
                } else if va != vb {
                    return Some(entry(**ka, va, vb));
                }
                a.next();
                b.next();
            }
        }
    }
}

/// `cells[0] ∘ cells[1] ∘ ...`; the last cell is applied first.
pub fn comp(cells: &[&TwoCell]) -> Result<TwoCell> {
    let (last, rest) = cells
        .split_last()
        .ok_or_else(|| Error::Other("empty composite".into()))?;
    let mut acc = (*last).clone();
    for c in rest.iter().rev() {
        acc = vcomp(c, &acc)?;
    }
    Ok(acc)
}

/// `cells[0] ⊗ cells[1] ⊗ ...`.
pub fn tensor(cells: &[&TwoCell]) -> Result<TwoCell> {
    let (first, rest) = cells
        .split_first()
        .ok_or_else(|| Error::Other("empty tensor".into()))?;
    let mut acc = (*first).clone();
    for c in rest {
        acc = hcomp(&acc, c)?;
    }
    Ok(acc)
}

/// A 2-cell `I -> I` holding one scalar.
pub fn scalar_cell(s: Scalar) -> TwoCell {
    let field = s.field();
    let mut entries = BTreeMap::new();
    if !s.is_zero() {
        entries.insert((0, 0), s);
    }
    TwoCell {
        dom: CellType::unit(),
        cod: CellType::unit(),
        field,
        entries,
    }
}

/// Apply `c` to the legs of `t` starting at `pos`, padding with identities.
pub fn lay(t: &CellType, pos: usize, c: &TwoCell) -> Result<TwoCell> {
    let k = c.dom().len();
    if pos + k > t.len() {
        return Err(Error::TypeMismatch {
            expected: format!("{} legs from position {pos}", k),
            found: t.to_string(),
        });
    }
    let found = t.slice(pos, pos + k);
    if &found != c.dom() {
        return Err(Error::TypeMismatch {
            expected: c.dom().to_string(),
            found: found.to_string(),
        });
    }
    c.pad(&t.slice(0, pos), &t.slice(pos + k, t.len()))
}

/// `lay(cur.cod(), pos, c) ∘ cur`, computed on the nonzero entries of
/// `cur` without forming the padded cell.
pub fn apply_at(cur: &TwoCell, pos: usize, c: &TwoCell) -> Result<TwoCell> {
    if cur.field != c.field {
        return Err(Error::FieldMismatch(cur.field.to_string(), c.field.to_string()));
    }
    let t = &cur.cod;
    let k = c.dom.len();
    if pos + k > t.len() {
        return Err(Error::TypeMismatch {
            expected: format!("{} legs from position {pos}", k),
            found: t.to_string(),
        });
    }
    let found = t.slice(pos, pos + k);
    if found != c.dom {
        return Err(Error::TypeMismatch {
            expected: c.dom.to_string(),
            found: found.to_string(),
        });
    }
    let right_t = t.slice(pos + k, t.len());
    let right = right_t.dim();
    let (mid_in, mid_out) = (c.dom.dim(), c.cod.dim());
    let ccols = c.columns();
    let mut acc: HashMap<(usize, usize), Scalar> = HashMap::new();
    for (&(r, col), v) in &cur.entries {
        let (l, m, rr) = (r / (mid_in * right), (r / right) % mid_in, r % right);
        if let Some(cc) = ccols.get(&m) {
            for &(r2, v2) in cc {
                let p = v2 * v;
                let key = ((l * mid_out + r2) * right + rr, col);
                match acc.get_mut(&key) {
                    Some(a) => a.add_assign_ref(&p),
                    None => {
                        acc.insert(key, p);
                    }
                }
            }
        }
    }
    let cod = CellType::join(&[&t.slice(0, pos), &c.cod, &right_t]);
    Ok(TwoCell {
        dom: cur.dom.clone(),
        cod,
        field: cur.field,
        entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
    })
}

/// Builder for composites read top to bottom: each step acts on the
/// current codomain.
#[derive(Clone, Debug)]
pub struct Chain {
    cell: TwoCell,
}

impl Chain {
    pub fn start(t: &CellType, field: Field) -> Chain {
        Chain {
            cell: identity(t, field),
        }
    }

    pub fn from(cell: TwoCell) -> Chain {
        Chain { cell }
    }

    pub fn at(self, pos: usize, c: &TwoCell) -> Result<Chain> {
        Ok(Chain {
            cell: apply_at(&self.cell, pos, c)?,
        })
    }

    pub fn then(self, c: &TwoCell) -> Result<Chain> {
        Ok(Chain {
            cell: vcomp(c, &self.cell)?,
        })
    }

    pub fn cod(&self) -> &CellType {
        self.cell.cod()
    }

    pub fn done(self) -> TwoCell {
        self.cell
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(n: &str, d: usize) -> Space {
        Space::new(n, d)
    }

    #[test]
    fn identity_shapes() {
        let f = Field::Q;
        assert_eq!(identity(&CellType::unit(), f).nnz(), 1);
        let t = CellType::of(&[&sp("F", 2), &sp("B", 3)]);
        assert_eq!(identity(&t, f).nnz(), 6);
        assert_eq!(
            hcomp(&identity(&sp("F", 2).ty(), f), &identity(&sp("B", 3).ty(), f)).unwrap(),
            identity(&t, f)
        );
    }

    #[test]
    fn swap_is_involution() {
        let (x, y) = (sp("X", 2), sp("Y", 3));
        let s = swap(&x, &y, Field::Q);
        assert_eq!(s.nnz(), 6);
        let back = vcomp(&swap(&y, &x, Field::Q), &s).unwrap();
        assert!(back.is_identity());
    }

    #[test]
    fn vcomp_type_mismatch() {
        let a = identity(&sp("A", 2).ty(), Field::Q);
        let b = identity(&sp("B", 2).ty(), Field::Q);
        assert!(matches!(vcomp(&a, &b), Err(Error::TypeMismatch { .. })));
    }

    #[test]
    fn equal_shape_mismatch() {
        let a = identity(&sp("F", 2).ty(), Field::Q);
        let b = identity(&sp("F", 3).ty(), Field::Q);
        assert!(matches!(equal(&a, &b).witness, Some(Witness::Shape { .. })));
        assert!(equal(&a, &a).passed());
    }

    #[test]
    fn mirror_involution() {
        let t = CellType::of(&[&sp("A", 2), &sp("B", 3)]);
        let c = permutation(&t, &[1, 0], Field::Q).unwrap();
        assert_eq!(c.mirror().mirror(), c);
    }

    #[test]
    fn scalar_hcomp() {
        let a = scalar_cell(Scalar::int(Field::Q, 3));
        let b = scalar_cell(Scalar::int(Field::Q, 5));
        assert_eq!(hcomp(&a, &b).unwrap(), scalar_cell(Scalar::int(Field::Q, 15)));
    }
}
