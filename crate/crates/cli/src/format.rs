//! Structure files: a scalar field, named spaces, named sparse cells and
//! structure declarations binding cells to roles. The grammar is in
//! `docs/structure-file.md`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::Path;

use kcat::axioms::KFamily;
use kcat::structures::{
    BimonadDesc, ComoduleDesc, ComonadDesc, CoquasiBimonadDesc, DistKind, DistLaw, HausserNillDatum,
    ModuleDesc, MonadDesc, QuasiBimonadDesc, RelativeModuleDesc, Side, Structure, SweedlerDatum,
    TambaraModuleDesc, YDModuleDesc,
};
use kcat::{CellType, Field, Scalar, Space, TwoCell};

use crate::error::{CliError, Result};

/// One named declaration of a file.
#[derive(Clone, Debug, PartialEq)]
pub enum Item {
    Structure(Structure),
    /// Endo-cells keyed by tuples of objects, e.g. an associativity
    /// constraint.
    Family(KFamily),
}

impl Item {
    pub fn kind(&self) -> &'static str {
        match self {
            Item::Structure(s) => s.kind(),
            Item::Family(_) => "k-family",
        }
    }

    pub fn to_field(&self, field: Field) -> Result<Item> {
        Ok(match self {
            Item::Structure(s) => {
                let mut s = s.clone();
                for (_, c) in s.cells_mut() {
                    *c = c.to_field(field)?;
                }
                Item::Structure(s)
            }
            Item::Family(f) => {
                let mut f = f.clone();
                for c in f.cells.values_mut() {
                    *c = c.to_field(field)?;
                }
                Item::Family(f)
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Entry {
    pub name: String,
    pub item: Item,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Document {
    pub field: Field,
    pub notes: Vec<String>,
    pub entries: Vec<Entry>,
}

impl Document {
    pub fn new(field: Field) -> Document {
        Document {
            field,
            notes: vec![],
            entries: vec![],
        }
    }

    pub fn single(name: &str, item: Item, field: Field) -> Document {
        let mut d = Document::new(field);
        d.push(name, item);
        d
    }

    pub fn push(&mut self, name: &str, item: Item) {
        self.entries.push(Entry {
            name: name.to_string(),
            item,
        });
    }

    pub fn to_field(&self, field: Field) -> Result<Document> {
        if field == self.field {
            return Ok(self.clone());
        }
        let entries = self
            .entries
            .iter()
            .map(|e| {
                Ok(Entry {
                    name: e.name.clone(),
                    item: e.item.to_field(field)?,
                })
            })
            .collect::<Result<_>>()?;
        Ok(Document {
            field,
            notes: self.notes.clone(),
            entries,
        })
    }

    /// Entries of other documents appended to this one; fields must agree.
    pub fn merge(&mut self, other: Document) -> Result<()> {
        if other.field != self.field {
            return Err(CliError::Usage(format!(
                "inputs in different fields: {} and {}",
                self.field, other.field
            )));
        }
        self.notes.extend(other.notes);
        self.entries.extend(other.entries);
        Ok(())
    }
}

const RESERVED: &[char] = &['*', '(', ')', '|', '=', ',', '#'];

fn valid_name(s: &str) -> bool {
    !s.is_empty() && s != kcat::lincat::UNIT && !s.contains(RESERVED) && !s.contains(char::is_whitespace)
}

#[derive(Clone, Debug)]
struct Tok {
    text: String,
    col: usize,
}

#[derive(Clone, Debug)]
struct Line {
    no: usize,
    toks: Vec<Tok>,
}

impl Line {
    fn end_col(&self) -> usize {
        self.toks.last().map(|t| t.col + t.text.chars().count()).unwrap_or(1)
    }
}

struct Block {
    head: Line,
    body: Vec<Line>,
}

enum Raw {
    Note(String),
    Block(Block),
}

fn tokens(s: &str) -> Vec<Tok> {
    let mut out = vec![];
    let mut cur: Option<Tok> = None;
    for (i, ch) in s.chars().enumerate() {
        if ch.is_whitespace() {
            if let Some(t) = cur.take() {
                out.push(t);
            }
        } else {
            cur.get_or_insert_with(|| Tok {
                text: String::new(),
                col: i + 1,
            })
            .text
            .push(ch);
        }
    }
    out.extend(cur);
    out
}

fn lex(src: &str) -> Result<Vec<Raw>> {
    let mut out: Vec<Raw> = vec![];
    for (i, raw) in src.lines().enumerate() {
        let no = i + 1;
        let indented = raw.starts_with(char::is_whitespace);
        if !indented {
            if let Some(rest) = raw.strip_prefix("note") {
                if rest.is_empty() || rest.starts_with(char::is_whitespace) {
                    out.push(Raw::Note(rest.trim().to_string()));
                    continue;
                }
            }
        }
        let text = raw.split('#').next().unwrap_or("");
        let toks = tokens(text);
        if toks.is_empty() {
            continue;
        }
        let line = Line { no, toks };
        if indented {
            match out.last_mut() {
                Some(Raw::Block(b)) => b.body.push(line),
                _ => return Err(CliError::parse(no, line.toks[0].col, "indented line outside a block")),
            }
        } else {
            out.push(Raw::Block(Block { head: line, body: vec![] }));
        }
    }
    Ok(out)
}

struct Ctx {
    field: Field,
    spaces: BTreeMap<String, Space>,
    cells: BTreeMap<String, TwoCell>,
}

impl Ctx {
    fn space(&self, name: &str, line: usize, col: usize) -> Result<Space> {
        self.spaces
            .get(name)
            .cloned()
            .ok_or_else(|| CliError::role(line, col, format!("undeclared space `{name}`")))
    }

    fn ty(&self, tok: &Tok, line: usize) -> Result<CellType> {
        if tok.text == kcat::lincat::UNIT {
            return Ok(CellType::unit());
        }
        let mut legs = vec![];
        let mut col = tok.col;
        for part in tok.text.split('*') {
            if part.is_empty() {
                return Err(CliError::parse(line, col, format!("empty leg in type `{}`", tok.text)));
            }
            legs.push(self.space(part, line, col)?);
            col += part.chars().count() + 1;
        }
        Ok(CellType::new(legs))
    }

    fn cell(&self, tok: &Tok, line: usize) -> Result<TwoCell> {
        self.cells
            .get(&tok.text)
            .cloned()
            .ok_or_else(|| CliError::role(line, tok.col, format!("undeclared cell `{}`", tok.text)))
    }
}

fn expect_len(l: &Line, n: usize, what: &str) -> Result<()> {
    if l.toks.len() != n {
        let col = l.toks.get(n).map(|t| t.col).unwrap_or_else(|| l.end_col());
        return Err(CliError::parse(l.no, col, format!("expected {what}")));
    }
    Ok(())
}

fn tuple(tok: &Tok, line: usize) -> Result<Vec<usize>> {
    let bad = || CliError::parse(line, tok.col, format!("bad multi-index `{}`", tok.text));
    let inner = tok
        .text
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(bad)?;
    if inner.is_empty() {
        return Ok(vec![]);
    }
    inner.split(',').map(|p| p.parse().map_err(|_| bad())).collect()
}

fn check_index(idx: &[usize], t: &CellType, tok: &Tok, line: usize) -> Result<()> {
    if idx.len() != t.len() {
        return Err(CliError::shape(
            line,
            tok.col,
            format!("multi-index of length {} for a {}-leg type", idx.len(), t.len()),
        ));
    }
    for (k, s) in idx.iter().zip(&t.legs) {
        if *k >= s.dim {
            return Err(CliError::shape(
                line,
                tok.col,
                format!("index {k} out of range for space {} of dim {}", s.name, s.dim),
            ));
        }
    }
    Ok(())
}

fn parse_cell(ctx: &Ctx, b: &Block) -> Result<(String, TwoCell)> {
    let h = &b.head;
    expect_len(h, 5, "`cell <name> <dom> -> <cod>`")?;
    if h.toks[2].text == "->" || h.toks[3].text != "->" {
        return Err(CliError::parse(h.no, h.toks[3].col, "expected `->` between domain and codomain"));
    }
    let name = h.toks[1].text.clone();
    let dom = ctx.ty(&h.toks[2], h.no)?;
    let cod = ctx.ty(&h.toks[4], h.no)?;
    let mut seen = BTreeSet::new();
    let mut entries = vec![];
    for l in &b.body {
        expect_len(l, 3, "`<row> <col> <value>`")?;
        let (rt, ct, vt) = (&l.toks[0], &l.toks[1], &l.toks[2]);
        let r = tuple(rt, l.no)?;
        let c = tuple(ct, l.no)?;
        check_index(&r, &cod, rt, l.no)?;
        check_index(&c, &dom, ct, l.no)?;
        let v = Scalar::parse(ctx.field, &vt.text).map_err(|e| CliError::parse(l.no, vt.col, e.to_string()))?;
        if !seen.insert((r.clone(), c.clone())) {
            return Err(CliError::parse(l.no, rt.col, "duplicate entry"));
        }
        entries.push((r, c, v));
    }
    let cell = TwoCell::from_entries(dom, cod, ctx.field, entries)?;
    Ok((name, cell))
}

struct Body<'a> {
    ctx: &'a Ctx,
    head: &'a Line,
    keys: BTreeMap<&'a str, &'a Line>,
    at: Vec<&'a Line>,
    used: BTreeSet<&'a str>,
}

impl<'a> Body<'a> {
    fn new(ctx: &'a Ctx, b: &'a Block) -> Result<Body<'a>> {
        let mut keys = BTreeMap::new();
        let mut at = vec![];
        for l in &b.body {
            let k = l.toks[0].text.as_str();
            if k == "at" {
                at.push(l);
            } else if keys.insert(k, l).is_some() {
                return Err(CliError::parse(l.no, l.toks[0].col, format!("duplicate role `{k}`")));
            }
        }
        Ok(Body {
            ctx,
            head: &b.head,
            keys,
            at,
            used: BTreeSet::new(),
        })
    }

    fn opt_line(&mut self, key: &str) -> Option<&'a Line> {
        let (k, l) = self.keys.get_key_value(key)?;
        self.used.insert(k);
        Some(l)
    }

    fn line(&mut self, key: &str) -> Result<&'a Line> {
        self.opt_line(key).ok_or_else(|| {
            CliError::parse(
                self.head.no,
                self.head.toks[0].col,
                format!("{} `{}` lacks role `{key}`", self.head.toks[2].text, self.head.toks[1].text),
            )
        })
    }

    fn one(l: &'a Line) -> Result<&'a Tok> {
        expect_len(l, 2, &format!("one value for `{}`", l.toks[0].text))?;
        Ok(&l.toks[1])
    }

    fn space(&mut self, key: &str) -> Result<Space> {
        let l = self.line(key)?;
        let t = Body::one(l)?;
        self.ctx.space(&t.text, l.no, t.col)
    }

    fn ty(&mut self, key: &str) -> Result<CellType> {
        let l = self.line(key)?;
        self.ctx.ty(Body::one(l)?, l.no)
    }

    fn cell(&mut self, key: &str) -> Result<TwoCell> {
        let l = self.line(key)?;
        self.ctx.cell(Body::one(l)?, l.no)
    }

    fn opt_cell(&mut self, key: &str) -> Result<Option<TwoCell>> {
        match self.opt_line(key) {
            None => Ok(None),
            Some(l) => Ok(Some(self.ctx.cell(Body::one(l)?, l.no)?)),
        }
    }

    fn side(&mut self, key: &str) -> Result<Side> {
        let l = self.line(key)?;
        let t = Body::one(l)?;
        match t.text.as_str() {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            s => Err(CliError::parse(l.no, t.col, format!("side must be left or right, not `{s}`"))),
        }
    }

    /// `<key> <cell> over=<type> under=<type> kinds=<k>,...`
    fn law(&mut self, key: &str) -> Result<DistLaw> {
        let l = self.line(key)?;
        expect_len(l, 5, &format!("`{key} <cell> over=<type> under=<type> kinds=<list>`"))?;
        let cell = self.ctx.cell(&l.toks[1], l.no)?;
        let mut fields = BTreeMap::new();
        for t in &l.toks[2..] {
            let Some((k, v)) = t.text.split_once('=') else {
                return Err(CliError::parse(l.no, t.col, format!("expected `name=value`, found `{}`", t.text)));
            };
            let vt = Tok {
                text: v.to_string(),
                col: t.col + k.chars().count() + 1,
            };
            if fields.insert(k.to_string(), vt).is_some() {
                return Err(CliError::parse(l.no, t.col, format!("`{k}` given twice")));
            }
        }
        let mut get = |k: &str| {
            fields
                .remove(k)
                .ok_or_else(|| CliError::parse(l.no, l.toks[2].col, format!("`{key}` lacks `{k}=`")))
        };
        let over = self.ctx.ty(&get("over")?, l.no)?;
        let under = self.ctx.ty(&get("under")?, l.no)?;
        let kt = get("kinds")?;
        let mut kinds = vec![];
        if !kt.text.is_empty() {
            for k in kt.text.split(',') {
                kinds.push(
                    DistKind::parse(k).ok_or_else(|| CliError::parse(l.no, kt.col, format!("unknown kind `{k}`")))?,
                );
            }
        }
        Ok(DistLaw::new(over, under, cell, &kinds))
    }

    fn monad(&mut self, p: &str) -> Result<MonadDesc> {
        Ok(MonadDesc::new(
            self.space(&format!("{p}carrier"))?,
            self.cell(&format!("{p}mu"))?,
            self.cell(&format!("{p}eta"))?,
        ))
    }

    /// A comonad whose carrier key is `{p}carrier`, or the given space.
    fn comonad(&mut self, p: &str, carrier: Option<&Space>) -> Result<ComonadDesc> {
        let carrier = match carrier {
            Some(s) => s.clone(),
            None => self.space(&format!("{p}carrier"))?,
        };
        Ok(ComonadDesc::new(
            carrier,
            self.cell(&format!("{p}delta"))?,
            self.cell(&format!("{p}eps"))?,
        ))
    }

    fn family(&mut self) -> Result<KFamily> {
        let l = self.line("objects")?;
        let objects = l.toks[1..].iter().map(|t| self.ctx.ty(t, l.no)).collect::<Result<Vec<_>>>()?;
        let mut cells = BTreeMap::new();
        for l in std::mem::take(&mut self.at) {
            expect_len(l, 3, "`at <type>|<type>|... <cell>`")?;
            let kt = &l.toks[1];
            let mut key = vec![];
            let mut col = kt.col;
            for part in kt.text.split('|') {
                key.push(self.ctx.ty(&Tok { text: part.into(), col }, l.no)?);
                col += part.chars().count() + 1;
            }
            let cell = self.ctx.cell(&l.toks[2], l.no)?;
            let t = CellType::join(&key.iter().collect::<Vec<_>>());
            if cell.dom() != &t || cell.cod() != &t {
                return Err(CliError::shape(
                    l.no,
                    l.toks[2].col,
                    format!("entry at {} must be an endo-cell of {t}, found {} -> {}", kt.text, cell.dom(), cell.cod()),
                ));
            }
            if cells.insert(key, cell).is_some() {
                return Err(CliError::parse(l.no, kt.col, format!("duplicate family key `{}`", kt.text)));
            }
        }
        Ok(KFamily { objects, cells })
    }

    fn finish(self) -> Result<()> {
        if let Some(l) = self.at.first() {
            return Err(CliError::role(l.no, l.toks[0].col, "`at` outside a k-family"));
        }
        for (k, l) in &self.keys {
            if !self.used.contains(k) {
                return Err(CliError::role(
                    l.no,
                    l.toks[0].col,
                    format!("`{k}` is not a role of {}", self.head.toks[2].text),
                ));
            }
        }
        Ok(())
    }
}

fn parse_item(ctx: &Ctx, b: &Block) -> Result<(String, Item)> {
    let h = &b.head;
    expect_len(h, 3, "`structure <name> <kind>`")?;
    let name = h.toks[1].text.clone();
    let kind = h.toks[2].text.as_str();
    let mut r = Body::new(ctx, b)?;
    let s = match kind {
        "k-family" => {
            let f = r.family()?;
            r.finish()?;
            return Ok((name, Item::Family(f)));
        }
        "monad" => Structure::Monad(r.monad("")?),
        "comonad" => Structure::Comonad(r.comonad("", None)?),
        "dist-law" => Structure::DistLaw(r.law("law")?),
        "module" => Structure::Module(ModuleDesc {
            acting: r.space("acting")?,
            carrier: r.ty("carrier")?,
            action: r.cell("action")?,
            side: r.side("side")?,
        }),
        "comodule" => Structure::Comodule(ComoduleDesc {
            acting: r.space("acting")?,
            carrier: r.ty("carrier")?,
            coaction: r.cell("coaction")?,
            side: r.side("side")?,
        }),
        "tambara" => Structure::Tambara(TambaraModuleDesc {
            base: r.monad("base.")?,
            tau_bb: r.law("tau_bb")?,
            x: r.ty("x")?,
            tau: r.law("tau")?,
            nu: ModuleDesc {
                acting: r.space("nu.acting")?,
                carrier: r.ty("nu.carrier")?,
                action: r.cell("nu.action")?,
                side: r.side("nu.side")?,
            },
        }),
        "quasi-bimonad" => {
            let monad = r.monad("")?;
            Structure::QuasiBimonad(QuasiBimonadDesc {
                comonad: r.comonad("", Some(&monad.carrier))?,
                monad,
                tau_ff: r.law("tau_ff")?,
                phi: r.cell("phi")?,
                phi_inv: r.opt_cell("phi_inv")?,
            })
        }
        "coquasi-bimonad" => {
            let monad = r.monad("")?;
            Structure::CoquasiBimonad(CoquasiBimonadDesc {
                comonad: r.comonad("", Some(&monad.carrier))?,
                monad,
                tau_ff: r.law("tau_ff")?,
                omega: r.cell("omega")?,
                omega_inv: r.opt_cell("omega_inv")?,
            })
        }
        "bimonad" => Structure::Bimonad(bimonad(&mut r)?),
        "sweedler-datum" => Structure::Sweedler(SweedlerDatum {
            b: r.monad("b.")?,
            f: r.space("f")?,
            psi: r.law("psi")?,
            mu_m: r.cell("mu_m")?,
            eta_m: r.cell("eta_m")?,
            eps_f: r.cell("eps_f")?,
            beta: r.opt_cell("beta")?,
        }),
        "hn-datum" => Structure::HausserNill(HausserNillDatum {
            b: r.monad("b.")?,
            f: r.space("f")?,
            psi: r.law("psi")?,
            delta_m: r.cell("delta_m")?,
            eps_m: r.cell("eps_m")?,
            eta_f: r.cell("eta_f")?,
            beta: r.opt_cell("beta")?,
        }),
        "yd-module" => Structure::YD(YDModuleDesc {
            bimonad: bimonad(&mut r)?,
            x: r.ty("x")?,
            psi: r.law("psi")?,
            phi: r.law("phi")?,
            side: r.side("side")?,
        }),
        "relative-module" => Structure::Relative(RelativeModuleDesc {
            b: r.monad("b.")?,
            f: r.comonad("f.", None)?,
            psi_bf: r.law("psi_bf")?,
            m: r.ty("m")?,
            action: r.cell("action")?,
            coaction: r.cell("coaction")?,
            side: r.side("side")?,
        }),
        k => return Err(CliError::parse(h.no, h.toks[2].col, format!("unknown structure kind `{k}`"))),
    };
    r.finish()?;
    if let Some(w) = s.validate_shapes().witness {
        return Err(CliError::shape(h.no, h.toks[1].col, w.to_string()));
    }
    Ok((name, Item::Structure(s)))
}

fn bimonad(r: &mut Body) -> Result<BimonadDesc> {
    let monad = r.monad("")?;
    Ok(BimonadDesc {
        comonad: r.comonad("", Some(&monad.carrier))?,
        monad,
        lambda: r.law("lambda")?,
    })
}

/// Parse a structure file from text.
pub fn parse_str(src: &str) -> Result<Document> {
    let raws = lex(src)?;
    let mut notes = vec![];
    let mut blocks = vec![];
    for r in raws {
        match r {
            Raw::Note(n) => notes.push(n),
            Raw::Block(b) => blocks.push(b),
        }
    }
    let mut field = None;
    let mut ctx = Ctx {
        field: Field::Q,
        spaces: BTreeMap::new(),
        cells: BTreeMap::new(),
    };
    for b in &blocks {
        let h = &b.head;
        let no_body = || match b.body.first() {
            Some(l) => Err(CliError::parse(l.no, l.toks[0].col, "unexpected indented line")),
            None => Ok(()),
        };
        match h.toks[0].text.as_str() {
            "field" => {
                expect_len(h, 2, "`field q` or `field fp:<prime>`")?;
                no_body()?;
                if field.is_some() {
                    return Err(CliError::parse(h.no, 1, "field declared twice"));
                }
                let f: Field = h.toks[1]
                    .text
                    .parse()
                    .map_err(|e: kcat::Error| CliError::parse(h.no, h.toks[1].col, e.to_string()))?;
                field = Some(f);
            }
            "space" => {
                expect_len(h, 3, "`space <name> <dim>`")?;
                no_body()?;
                let (nt, dt) = (&h.toks[1], &h.toks[2]);
                if !valid_name(&nt.text) {
                    return Err(CliError::parse(h.no, nt.col, format!("invalid space name `{}`", nt.text)));
                }
                let dim: usize = dt
                    .text
                    .parse()
                    .ok()
                    .filter(|&d| d > 0)
                    .ok_or_else(|| CliError::parse(h.no, dt.col, format!("bad dimension `{}`", dt.text)))?;
                if ctx.spaces.insert(nt.text.clone(), Space::new(&nt.text, dim)).is_some() {
                    return Err(CliError::parse(h.no, nt.col, format!("space `{}` declared twice", nt.text)));
                }
            }
            "cell" | "structure" => {}
            w => return Err(CliError::parse(h.no, h.toks[0].col, format!("unknown directive `{w}`"))),
        }
    }
    ctx.field = field.unwrap_or(Field::Q);
    for b in blocks.iter().filter(|b| b.head.toks[0].text == "cell") {
        let (name, cell) = parse_cell(&ctx, b)?;
        if ctx.cells.insert(name.clone(), cell).is_some() {
            return Err(CliError::parse(b.head.no, b.head.toks[1].col, format!("cell `{name}` declared twice")));
        }
    }
    let mut doc = Document {
        field: ctx.field,
        notes,
        entries: vec![],
    };
    let mut names = BTreeSet::new();
    for b in blocks.iter().filter(|b| b.head.toks[0].text == "structure") {
        let (name, item) = parse_item(&ctx, b)?;
        if !names.insert(name.clone()) {
            return Err(CliError::parse(b.head.no, b.head.toks[1].col, format!("structure `{name}` declared twice")));
        }
        doc.push(&name, item);
    }
    Ok(doc)
}

/// Read and parse a structure file.
pub fn parse(path: &Path) -> Result<Document> {
    let src = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })?;
    parse_str(&src)
}

#[derive(Default)]
struct Sink {
    spaces: BTreeMap<String, usize>,
    cells: BTreeMap<String, TwoCell>,
    err: Option<String>,
}

impl Sink {
    fn fail(&mut self, msg: String) {
        self.err.get_or_insert(msg);
    }

    fn space(&mut self, s: &Space) -> String {
        if !valid_name(&s.name) {
            self.fail(format!("space name `{}` cannot be written", s.name));
        }
        match self.spaces.get(&s.name) {
            Some(&d) if d != s.dim => self.fail(format!("space `{}` used with dims {d} and {}", s.name, s.dim)),
            _ => {
                self.spaces.insert(s.name.clone(), s.dim);
            }
        }
        s.name.clone()
    }

    fn ty(&mut self, t: &CellType) -> String {
        if t.is_empty() {
            return kcat::lincat::UNIT.to_string();
        }
        t.legs.iter().map(|s| self.space(s)).collect::<Vec<_>>().join("*")
    }

    fn cell(&mut self, name: String, c: &TwoCell) -> String {
        self.ty(c.dom());
        self.ty(c.cod());
        if name.contains(char::is_whitespace) || name.contains('#') {
            self.fail(format!("cell name `{name}` cannot be written"));
        }
        if let Some(old) = self.cells.insert(name.clone(), c.clone()) {
            if &old != c {
                self.fail(format!("two different cells named `{name}`"));
            }
        }
        name
    }
}

struct Out<'a> {
    entry: &'a str,
    sink: &'a mut Sink,
    lines: Vec<String>,
}

impl Out<'_> {
    fn kv(&mut self, key: &str, v: String) {
        self.lines.push(format!("  {key} {v}"));
    }

    fn space(&mut self, key: &str, s: &Space) {
        let v = self.sink.space(s);
        self.kv(key, v);
    }

    fn ty(&mut self, key: &str, t: &CellType) {
        let v = self.sink.ty(t);
        self.kv(key, v);
    }

    fn cell(&mut self, key: &str, c: &TwoCell) {
        let v = self.sink.cell(format!("{}.{key}", self.entry), c);
        self.kv(key, v);
    }

    fn opt_cell(&mut self, key: &str, c: &Option<TwoCell>) {
        if let Some(c) = c {
            self.cell(key, c);
        }
    }

    fn side(&mut self, key: &str, s: Side) {
        let v = match s {
            Side::Left => "left",
            Side::Right => "right",
        };
        self.kv(key, v.into());
    }

    fn law(&mut self, key: &str, d: &DistLaw) {
        let c = self.sink.cell(format!("{}.{key}", self.entry), &d.cell);
        let over = self.sink.ty(&d.over);
        let under = self.sink.ty(&d.under);
        let kinds: Vec<&str> = d.kinds.iter().map(|k| k.name()).collect();
        self.kv(key, format!("{c} over={over} under={under} kinds={}", kinds.join(",")));
    }

    fn monad(&mut self, p: &str, m: &MonadDesc) {
        self.space(&format!("{p}carrier"), &m.carrier);
        self.cell(&format!("{p}mu"), &m.mu);
        self.cell(&format!("{p}eta"), &m.eta);
    }

    fn comonad(&mut self, p: &str, c: &ComonadDesc, shared: Option<&Space>) {
        match shared {
            Some(s) if s != &c.carrier => self.sink.fail(format!(
                "`{}`: monad on {} but comonad on {}",
                self.entry, s.name, c.carrier.name
            )),
            Some(_) => {}
            None => self.space(&format!("{p}carrier"), &c.carrier),
        }
        self.cell(&format!("{p}delta"), &c.delta);
        self.cell(&format!("{p}eps"), &c.eps);
    }

    fn bimonad(&mut self, b: &BimonadDesc) {
        self.monad("", &b.monad);
        self.comonad("", &b.comonad, Some(&b.monad.carrier));
        self.law("lambda", &b.lambda);
    }

    fn module(&mut self, p: &str, m: &ModuleDesc) {
        self.space(&format!("{p}acting"), &m.acting);
        self.ty(&format!("{p}carrier"), &m.carrier);
        self.cell(&format!("{p}action"), &m.action);
        self.side(&format!("{p}side"), m.side);
    }

    fn structure(&mut self, s: &Structure) {
        match s {
            Structure::Monad(m) => self.monad("", m),
            Structure::Comonad(c) => self.comonad("", c, None),
            Structure::DistLaw(d) => self.law("law", d),
            Structure::Module(m) => self.module("", m),
            Structure::Comodule(c) => {
                self.space("acting", &c.acting);
                self.ty("carrier", &c.carrier);
                self.cell("coaction", &c.coaction);
                self.side("side", c.side);
            }
            Structure::Tambara(t) => {
                self.monad("base.", &t.base);
                self.law("tau_bb", &t.tau_bb);
                self.ty("x", &t.x);
                self.law("tau", &t.tau);
                self.module("nu.", &t.nu);
            }
            Structure::QuasiBimonad(q) => {
                self.monad("", &q.monad);
                self.comonad("", &q.comonad, Some(&q.monad.carrier));
                self.law("tau_ff", &q.tau_ff);
                self.cell("phi", &q.phi);
                self.opt_cell("phi_inv", &q.phi_inv);
            }
            Structure::CoquasiBimonad(q) => {
                self.monad("", &q.monad);
                self.comonad("", &q.comonad, Some(&q.monad.carrier));
                self.law("tau_ff", &q.tau_ff);
                self.cell("omega", &q.omega);
                self.opt_cell("omega_inv", &q.omega_inv);
            }
            Structure::Bimonad(b) => self.bimonad(b),
            Structure::Sweedler(d) => {
                self.monad("b.", &d.b);
                self.space("f", &d.f);
                self.law("psi", &d.psi);
                self.cell("mu_m", &d.mu_m);
                self.cell("eta_m", &d.eta_m);
                self.cell("eps_f", &d.eps_f);
                self.opt_cell("beta", &d.beta);
            }
            Structure::HausserNill(h) => {
                self.monad("b.", &h.b);
                self.space("f", &h.f);
                self.law("psi", &h.psi);
                self.cell("delta_m", &h.delta_m);
                self.cell("eps_m", &h.eps_m);
                self.cell("eta_f", &h.eta_f);
                self.opt_cell("beta", &h.beta);
            }
            Structure::YD(y) => {
                self.bimonad(&y.bimonad);
                self.ty("x", &y.x);
                self.law("psi", &y.psi);
                self.law("phi", &y.phi);
                self.side("side", y.side);
            }
            Structure::Relative(r) => {
                self.monad("b.", &r.b);
                self.comonad("f.", &r.f, None);
                self.law("psi_bf", &r.psi_bf);
                self.ty("m", &r.m);
                self.cell("action", &r.action);
                self.cell("coaction", &r.coaction);
                self.side("side", r.side);
            }
        }
    }

    fn family(&mut self, f: &KFamily) {
        let objs: Vec<String> = f.objects.iter().map(|o| self.sink.ty(o)).collect();
        let mut line = "  objects".to_string();
        for o in objs {
            line.push(' ');
            line.push_str(&o);
        }
        self.lines.push(line);
        for (key, c) in &f.cells {
            let k = key.iter().map(|t| self.sink.ty(t)).collect::<Vec<_>>().join("|");
            let name = self.sink.cell(format!("{}.{k}", self.entry), c);
            self.kv("at", format!("{k} {name}"));
        }
    }
}

/// Canonical text of a document: field, notes, spaces and cells sorted by
/// name with entries in lexicographic order, then the structures in
/// document order.
pub fn emit(doc: &Document) -> Result<String> {
    let mut sink = Sink::default();
    let mut blocks = vec![];
    let mut names = BTreeSet::new();
    for e in &doc.entries {
        if e.name.is_empty() || e.name.contains(char::is_whitespace) || e.name.contains('#') {
            return Err(CliError::Emit(format!("structure name `{}` cannot be written", e.name)));
        }
        if !names.insert(e.name.clone()) {
            return Err(CliError::Emit(format!("structure `{}` appears twice", e.name)));
        }
        let mut out = Out {
            entry: &e.name,
            sink: &mut sink,
            lines: vec![format!("structure {} {}", e.name, e.item.kind())],
        };
        match &e.item {
            Item::Structure(s) => out.structure(s),
            Item::Family(f) => out.family(f),
        }
        blocks.push(out.lines);
    }
    if let Some(e) = sink.err {
        return Err(CliError::Emit(e));
    }
    for n in &doc.notes {
        if n.contains('\n') || n.trim() != n {
            return Err(CliError::Emit("notes must be single trimmed lines".into()));
        }
    }
    let mut s = String::new();
    writeln!(s, "field {}", doc.field).unwrap();
    for n in &doc.notes {
        writeln!(s, "note {n}").unwrap();
    }
    if !sink.spaces.is_empty() {
        s.push('\n');
        for (name, dim) in &sink.spaces {
            writeln!(s, "space {name} {dim}").unwrap();
        }
    }
    let ty = |t: &CellType| {
        if t.is_empty() {
            kcat::lincat::UNIT.to_string()
        } else {
            t.legs.iter().map(|l| l.name.as_str()).collect::<Vec<_>>().join("*")
        }
    };
    let idx = |v: Vec<usize>| format!("({})", v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","));
    for (name, c) in &sink.cells {
        if c.field() != doc.field {
            return Err(CliError::Emit(format!("cell `{name}` is over {}, document over {}", c.field(), doc.field)));
        }
        writeln!(s, "\ncell {name} {} -> {}", ty(c.dom()), ty(c.cod())).unwrap();
        for (r, col, v) in c.entries() {
            writeln!(s, "  {} {} {v}", idx(c.cod().decode(r)), idx(c.dom().decode(col))).unwrap();
        }
    }
    for b in blocks {
        s.push('\n');
        for l in b {
            s.push_str(&l);
            s.push('\n');
        }
    }
    Ok(s)
}
