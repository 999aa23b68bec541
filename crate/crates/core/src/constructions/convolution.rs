//! Convolution algebras `K(S, T)` of 2-cells from a string of comonads to
//! a string of monads.

use crate::diagram::{delta_string, nabla_onto, nabla_string, tau_table};
use crate::error::{Error, Result};
use crate::lincat::{comp, identity, tensor, CellType, Chain, TwoCell};
use crate::scalar::{Field, Scalar};
use crate::structures::{ComonadDesc, MonadDesc};

/// The comonads on the domain string and the monads on the codomain
/// string, with the crossings used to interleave copies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvContext {
    pub dom: Vec<ComonadDesc>,
    pub dom_taus: Vec<TwoCell>,
    pub cod: Vec<MonadDesc>,
    pub cod_taus: Vec<TwoCell>,
}

impl ConvContext {
    pub fn new(
        dom: Vec<ComonadDesc>,
        dom_taus: Vec<TwoCell>,
        cod: Vec<MonadDesc>,
        cod_taus: Vec<TwoCell>,
    ) -> ConvContext {
        ConvContext {
            dom,
            dom_taus,
            cod,
            cod_taus,
        }
    }

    pub fn dom_type(&self) -> CellType {
        CellType::new(self.dom.iter().map(|c| c.carrier.clone()).collect())
    }

    pub fn cod_type(&self) -> CellType {
        CellType::new(self.cod.iter().map(|m| m.carrier.clone()).collect())
    }

    pub fn field(&self) -> Option<Field> {
        self.cod
            .first()
            .map(|m| m.field())
            .or_else(|| self.dom.first().map(|c| c.field()))
    }

    fn delta(&self, field: Field) -> Result<TwoCell> {
        let cs: Vec<&ComonadDesc> = self.dom.iter().collect();
        delta_string(&cs, field, tau_table(&self.dom_taus))
    }

    fn nabla(&self, field: Field) -> Result<TwoCell> {
        let ms: Vec<&MonadDesc> = self.cod.iter().collect();
        nabla_string(&ms, field, tau_table(&self.cod_taus))
    }

    fn unit_cell(&self, field: Field) -> Result<TwoCell> {
        let mut etas: Vec<&TwoCell> = self.cod.iter().map(|m| &m.eta).collect();
        let mut epss: Vec<&TwoCell> = self.dom.iter().map(|c| &c.eps).collect();
        let one = identity(&CellType::unit(), field);
        if etas.is_empty() {
            etas.push(&one);
        }
        if epss.is_empty() {
            epss.push(&one);
        }
        comp(&[&tensor(&etas)?, &tensor(&epss)?])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvolutionElement {
    pub cell: TwoCell,
    pub context: ConvContext,
}

impl ConvolutionElement {
    pub fn new(cell: TwoCell, context: ConvContext) -> Result<ConvolutionElement> {
        let (d, c) = (context.dom_type(), context.cod_type());
        if cell.dom() != &d || cell.cod() != &c {
            return Err(Error::ContextMismatch(format!(
                "cell {} -> {} in context {} -> {}",
                cell.dom(),
                cell.cod(),
                d,
                c
            )));
        }
        if let Some(f) = context.field() {
            if f != cell.field() {
                return Err(Error::FieldMismatch(f.to_string(), cell.field().to_string()));
            }
        }
        Ok(ConvolutionElement { cell, context })
    }

    pub fn field(&self) -> Field {
        self.cell.field()
    }
}

fn same_context(f: &ConvolutionElement, g: &ConvolutionElement) -> Result<()> {
    if f.context != g.context {
        return Err(Error::ContextMismatch("operands live in different contexts".into()));
    }
    Ok(())
}

/// `f * g = ∇ (f ⊗ g) Δ`.
pub fn convolution_product(f: &ConvolutionElement, g: &ConvolutionElement) -> Result<ConvolutionElement> {
    same_context(f, g)?;
    let fl = f.field();
    let ctx = &f.context;
    let ms: Vec<&MonadDesc> = ctx.cod.iter().collect();
    let ch = Chain::from(ctx.delta(fl)?).then(&tensor(&[&f.cell, &g.cell])?)?;
    let cell = nabla_onto(ch, &ms, tau_table(&ctx.cod_taus))?.done();
    Ok(ConvolutionElement {
        cell,
        context: f.context.clone(),
    })
}

/// `η ε`, the unit of the convolution algebra.
pub fn convolution_unit(ctx: &ConvContext, field: Field) -> Result<ConvolutionElement> {
    Ok(ConvolutionElement {
        cell: ctx.unit_cell(field)?,
        context: ctx.clone(),
    })
}

/// Outcome of an inversion attempt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Inverse {
    TwoSided(ConvolutionElement),
    /// `g * f` is the unit but `f * g` is not.
    OneSided(ConvolutionElement),
    None,
}

/// Solve `g * f = 1` exactly, then test `f * g = 1`.
pub fn convolution_invert_diag(f: &ConvolutionElement) -> Result<Inverse> {
    let fl = f.field();
    let ctx = &f.context;
    let (dom, cod) = (ctx.dom_type(), ctx.cod_type());
    let (nr, nc) = (cod.dim(), dom.dim());
    let n = nr * nc;
    let delta = ctx.delta(fl)?;
    let nabla = ctx.nabla(fl)?;
    let unit = ctx.unit_cell(fl)?;
    let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(n);
    for k in 0..n {
        let e = TwoCell::from_linear(dom.clone(), cod.clone(), fl, [(k / nc, k % nc, Scalar::one(fl))])?;
        let img = comp(&[&nabla, &tensor(&[&e, &f.cell])?, &delta])?;
        cols.push(flatten(&img, nc));
    }
    let rhs = flatten(&unit, nc);
    let sol = match solve(&cols, &rhs, fl) {
        Some(s) => s,
        None => return Ok(Inverse::None),
    };
    let g = TwoCell::from_linear(
        dom,
        cod,
        fl,
        sol.into_iter().enumerate().map(|(k, v)| (k / nc, k % nc, v)),
    )?;
    let g = ConvolutionElement {
        cell: g,
        context: ctx.clone(),
    };
    let right = convolution_product(f, &g)?;
    if right.cell == unit {
        Ok(Inverse::TwoSided(g))
    } else {
        Ok(Inverse::OneSided(g))
    }
}

/// The two-sided inverse, if there is one.
pub fn convolution_invert(f: &ConvolutionElement) -> Option<ConvolutionElement> {
    match convolution_invert_diag(f) {
        Ok(Inverse::TwoSided(g)) => Some(g),
        _ => None,
    }
}

fn flatten(c: &TwoCell, nc: usize) -> Vec<Scalar> {
    let n = c.cod().dim() * nc;
    let mut v = vec![Scalar::zero(c.field()); n];
    for (r, col, x) in c.entries() {
        v[r * nc + col] = x.clone();
    }
    v
}

/// Solve `Σ_k x_k cols[k] = rhs` by exact Gaussian elimination; free
/// variables are set to zero.
pub fn solve(cols: &[Vec<Scalar>], rhs: &[Scalar], field: Field) -> Option<Vec<Scalar>> {
    let n = cols.len();
    let m = rhs.len();
    let mut a: Vec<Vec<Scalar>> = (0..m)
        .map(|i| {
            let mut row: Vec<Scalar> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let mut pivots = vec![];
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().unwrap();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m {
            if i != r && !a[i][c].is_zero() {
                let factor = a[i][c].clone();
                for j in c..=n {
                    let d = &factor * &a[r][j];
                    a[i][j] = &a[i][j] - &d;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m {
            break;
        }
    }
    if a[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut x = vec![Scalar::zero(field); n];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = a[i][n].clone();
    }
    Some(x)
}
