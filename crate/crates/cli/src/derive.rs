//! Constructions driven from structure files.

use kcat::constructions::{
    act_yd, act_yd_right, alpha_coquasi_family, alpha_quasi_family, mirror, tensor_yd, wreath_product_monad, CoqObject,
    QbObject,
};
use kcat::structures::{DistLaw, Side, Structure};
use kcat::Error;

use crate::error::{CliError, Result};
use crate::format::{Document, Entry, Item};
use crate::run::check_item;

pub const CONSTRUCTIONS: [&str; 5] = ["crossed-product", "alpha", "mirror", "tensor-yd", "act"];

#[derive(Clone, Debug)]
pub struct DeriveOpts {
    /// Associativity constraint of the module category of a quasi-bimonad.
    pub quasi: bool,
    /// Associativity constraint of the comodule category of a coquasi-bimonad.
    pub coquasi: bool,
    /// Generating objects of `alpha`: the carrier name for the regular
    /// object, `I` for the unit, `*` for tensor products.
    pub objects: Option<Vec<String>>,
    /// Run each input's own suite before constructing.
    pub verify_pre: bool,
}

impl Default for DeriveOpts {
    fn default() -> DeriveOpts {
        DeriveOpts {
            quasi: false,
            coquasi: false,
            objects: None,
            verify_pre: true,
        }
    }
}

fn pre(e: &Entry, suite: &str, opts: &DeriveOpts) -> Result<()> {
    if !opts.verify_pre {
        return Ok(());
    }
    let r = check_item(&e.item, suite, None)?;
    if r.passed() {
        Ok(())
    } else {
        Err(CliError::Precondition {
            input: e.name.clone(),
            suite: suite.to_string(),
            report: Box::new(r),
        })
    }
}

fn structure<'a>(e: &'a Entry, want: &str) -> Result<&'a Structure> {
    match &e.item {
        Item::Structure(s) => Ok(s),
        Item::Family(_) => Err(CliError::Usage(format!("`{}` is a k-family, expected a {want}", e.name))),
    }
}

fn wrong(e: &Entry, want: &str) -> CliError {
    CliError::Usage(format!("`{}` is a {}, expected a {want}", e.name, e.item.kind()))
}

/// Resolve `--objects` words against the carrier name.
fn words<O: Clone>(
    names: &[String],
    carrier: &str,
    unit: &O,
    regular: &O,
    tensor: &dyn Fn(&O, &O) -> kcat::Result<O>,
) -> Result<Vec<O>> {
    names
        .iter()
        .map(|w| {
            let mut acc: Option<O> = None;
            for part in w.split('*') {
                let o = if part == carrier {
                    regular.clone()
                } else if part == kcat::lincat::UNIT {
                    unit.clone()
                } else {
                    return Err(CliError::Usage(format!(
                        "unknown object `{part}`; use `{carrier}`, `I` or products with `*`"
                    )));
                };
                acc = Some(match acc {
                    None => o,
                    Some(a) => tensor(&a, &o)?,
                });
            }
            acc.ok_or_else(|| CliError::Usage("empty object".into()))
        })
        .collect()
}

fn alpha(e: &Entry, opts: &DeriveOpts) -> Result<(Item, String)> {
    let s = structure(e, "(co)quasi-bimonad")?;
    match s {
        Structure::QuasiBimonad(q) if !opts.coquasi => {
            if q.phi_inv.is_none() {
                return Err(Error::MissingInverse(format!("`{}` declares no phi_inv", e.name)).into());
            }
            pre(e, "quasi-bimonad", opts)?;
            let carrier = q.space().name.clone();
            let names = opts.objects.clone().unwrap_or_else(|| vec![carrier.clone()]);
            let objs = words(&names, &carrier, &QbObject::unit(q), &QbObject::regular(q), &|a: &QbObject, b: &QbObject| a.tensor(b, q))?;
            let fam = alpha_quasi_family(q, &objs)?;
            Ok((
                Item::Family(fam),
                format!("alpha({}): associativity constraint of the module category, acting by phi", e.name),
            ))
        }
        Structure::CoquasiBimonad(q) if !opts.quasi => {
            if q.omega_inv.is_none() {
                return Err(Error::MissingInverse(format!("`{}` declares no omega_inv", e.name)).into());
            }
            pre(e, "coquasi-bimonad", opts)?;
            let carrier = q.space().name.clone();
            let names = opts.objects.clone().unwrap_or_else(|| vec![carrier.clone()]);
            let objs = words(&names, &carrier, &CoqObject::unit(q), &CoqObject::regular(q), &|a: &CoqObject, b: &CoqObject| a.tensor(b, q))?;
            let fam = alpha_coquasi_family(q, &objs)?;
            Ok((
                Item::Family(fam),
                format!("alpha({}): associativity constraint of the comodule category, evaluating omega", e.name),
            ))
        }
        _ if opts.quasi => Err(wrong(e, "quasi-bimonad")),
        _ if opts.coquasi => Err(wrong(e, "coquasi-bimonad")),
        _ => Err(wrong(e, "quasi-bimonad or coquasi-bimonad")),
    }
}

fn pair<'a>(doc: &'a Document, construction: &str) -> Result<(&'a Entry, &'a Entry)> {
    match doc.entries.as_slice() {
        [a, b] => Ok((a, b)),
        es => Err(CliError::Usage(format!("{construction} takes two structures, got {}", es.len()))),
    }
}

/// `y` acting on the relative module `m`, crossing `B` past `X` by the
/// symmetry.
fn act(y: &Entry, m: &Entry, opts: &DeriveOpts) -> Result<(Item, String)> {
    let (Structure::YD(yd), Structure::Relative(rel)) = (structure(y, "yd-module")?, structure(m, "relative-module")?)
    else {
        return Err(CliError::Usage(format!(
            "act takes a yd-module and a relative-module, got {} and {}",
            y.item.kind(),
            m.item.kind()
        )));
    };
    pre(y, "yd-strong", opts)?;
    pre(m, "relative", opts)?;
    let b = rel.b.ty();
    let out = match yd.side {
        Side::Left => act_yd(yd, &DistLaw::flip(&b, &yd.x, yd.field(), &[]), rel)?,
        Side::Right => act_yd_right(yd, &DistLaw::flip(&yd.x, &b, yd.field(), &[]), rel)?,
    };
    Ok((
        Item::Structure(Structure::Relative(out)),
        format!("act({},{}): relative module X M of the Yetter-Drinfel'd action", y.name, m.name),
    ))
}

/// Apply a construction to the entries of `doc`. The result carries one
/// note per derived entry naming the construction.
pub fn derive(doc: &Document, construction: &str, opts: &DeriveOpts) -> Result<Document> {
    let mut out = Document::new(doc.field);
    let mut add = |name: String, (item, note): (Item, String)| {
        out.notes.push(note);
        out.push(&name, item);
    };
    match construction {
        "crossed-product" | "wreath" | "smash" => {
            for e in &doc.entries {
                let Structure::Sweedler(d) = structure(e, "sweedler-datum")? else {
                    return Err(wrong(e, "sweedler-datum"));
                };
                pre(e, "sweedler-datum", opts)?;
                let m = wreath_product_monad(d)?;
                add(
                    format!("crossed-product({})", e.name),
                    (
                        Item::Structure(Structure::Monad(m)),
                        format!("crossed-product({}): monad on F*B with multiplication through psi and mu_M", e.name),
                    ),
                );
            }
        }
        "alpha" => {
            for e in &doc.entries {
                add(format!("alpha({})", e.name), alpha(e, opts)?);
            }
        }
        "mirror" => {
            for e in &doc.entries {
                let s = structure(e, "structure")?;
                if let Some(suite) = crate::run::auto_suite(&e.item) {
                    pre(e, suite, opts)?;
                }
                add(
                    format!("mirror({})", e.name),
                    (
                        Item::Structure(mirror(s)?),
                        format!("mirror({}): tensor factors reversed, sides swapped", e.name),
                    ),
                );
            }
        }
        "tensor-yd" => {
            let (a, b) = pair(doc, construction)?;
            let (Structure::YD(ya), Structure::YD(yb)) = (structure(a, "yd-module")?, structure(b, "yd-module")?) else {
                return Err(CliError::Usage("tensor-yd takes two yd-modules".into()));
            };
            pre(a, "yd-strong", opts)?;
            pre(b, "yd-strong", opts)?;
            add(
                format!("tensor({},{})", a.name, b.name),
                (
                    Item::Structure(Structure::YD(tensor_yd(ya, yb)?)),
                    format!("tensor({},{}): monoidal product of Yetter-Drinfel'd modules", a.name, b.name),
                ),
            );
        }
        "act" => {
            let (y, m) = pair(doc, construction)?;
            add(format!("act({},{})", y.name, m.name), act(y, m, opts)?);
        }
        c => {
            return Err(CliError::Usage(format!(
                "unknown construction `{c}`; known: {}",
                CONSTRUCTIONS.join(", ")
            )))
        }
    }
    Ok(out)
}
