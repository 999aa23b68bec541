use kcat::structures::{MonadDesc, Structure};
use kcat::{CellType, Field, Scalar, Space, TwoCell};
use kcat_cli::{emit, parse_str, CliError, Document, Item};
use proptest::prelude::*;

fn zoo_doc(name: &str, field: Field) -> Document {
    Document::single(name, Item::Structure(kcat::zoo::get(name, field).unwrap()), field)
}

#[test]
fn every_zoo_instance_round_trips() {
    for field in [Field::Q, Field::Fp(1000003)] {
        for name in kcat::zoo::names() {
            let doc = zoo_doc(&name, field);
            let text = emit(&doc).unwrap();
            let back = parse_str(&text).unwrap();
            assert_eq!(back, doc, "{name} over {field}");
            assert_eq!(emit(&back).unwrap(), text, "{name} over {field}");
        }
    }
}

#[test]
fn several_structures_share_one_document() {
    let mut doc = Document::new(Field::Q);
    for name in ["h4", "h4-coquasi", "h4-sweedler", "h4-smash", "self_relative(h4)"] {
        doc.push(name, Item::Structure(kcat::zoo::get(name, Field::Q).unwrap()));
    }
    let text = emit(&doc).unwrap();
    assert_eq!(parse_str(&text).unwrap(), doc);
    let mut clash = Document::new(Field::Q);
    for name in ["kZ2", "kS3"] {
        clash.push(name, Item::Structure(kcat::zoo::get(name, Field::Q).unwrap()));
    }
    assert!(matches!(emit(&clash), Err(CliError::Emit(_))));
    clash.entries.truncate(1);
    clash.push("kZ2", clash.entries[0].item.clone());
    assert!(matches!(emit(&clash), Err(CliError::Emit(_))));
}

#[test]
fn emitted_h4_is_sorted() {
    let text = emit(&zoo_doc("h4", Field::Q)).unwrap();
    let cells: Vec<&str> = text.lines().filter(|l| l.starts_with("cell ")).collect();
    let mut sorted = cells.clone();
    sorted.sort();
    assert_eq!(cells, sorted);
    let first_cell = text.find("\ncell ").unwrap();
    assert!(text.find("\nspace ").unwrap() < first_cell);
    assert!(text.rfind("\nspace ").unwrap() < first_cell);
    assert!(text.find("\nstructure ").unwrap() > text.rfind("\ncell ").unwrap());
    let block: Vec<&str> = text
        .split("\n\n")
        .find(|b| b.starts_with("cell h4.mu "))
        .unwrap()
        .lines()
        .skip(1)
        .collect();
    let keys: Vec<(Vec<usize>, Vec<usize>)> = block
        .iter()
        .map(|l| {
            let t: Vec<&str> = l.split_whitespace().collect();
            let ix = |s: &str| -> Vec<usize> {
                s.trim_matches(|c| c == '(' || c == ')')
                    .split(',')
                    .filter(|p| !p.is_empty())
                    .map(|p| p.parse().unwrap())
                    .collect()
            };
            (ix(t[0]), ix(t[1]))
        })
        .collect();
    let mut sk = keys.clone();
    sk.sort();
    assert_eq!(keys, sk);
    assert_eq!(keys.len(), 12);
}

const MONAD: &str = "\
field q

space A 2

cell m.eta I -> A
  (0) () 1

cell m.mu A*A -> A
  (0) (0,0) 1
  (1) (0,1) 1
  (1) (1,0) 1

structure m monad
  carrier A
  mu m.mu
  eta m.eta
";

#[test]
fn canonical_text_is_a_fixed_point() {
    let doc = parse_str(MONAD).unwrap();
    assert_eq!(emit(&doc).unwrap(), MONAD);
    let Item::Structure(Structure::Monad(m)) = &doc.entries[0].item else {
        panic!("expected a monad")
    };
    assert_eq!(m.mu.nnz(), 3);
    assert!(kcat::axioms::check_monad(m).unwrap().passed());
}

#[test]
fn layout_and_comments_do_not_matter() {
    let messy = "\
# dual numbers
structure m monad
    eta m.eta   # unit
    mu m.mu
    carrier A
cell m.mu A*A -> A
        (1) (1,0) 2/2
  (0) (0,0) 1
  (1) (0,1) 1
field q
space A 2
cell m.eta I -> A
  (0) () 1
";
    let doc = parse_str(messy).unwrap();
    assert_eq!(emit(&doc).unwrap(), MONAD);
}

fn located(src: &str) -> CliError {
    parse_str(src).unwrap_err()
}

#[test]
fn zero_denominator_is_a_located_parse_error() {
    let src = MONAD.replace("(1) (1,0) 1", "(1) (1,0) 1/0");
    match located(&src) {
        CliError::Parse { line, col, .. } => assert_eq!((line, col), (11, 13)),
        e => panic!("unexpected {e:?}"),
    }
}

#[test]
fn undeclared_space_is_an_unknown_role() {
    let src = MONAD.replace("cell m.mu A*A -> A", "cell m.mu A*Z -> A");
    match located(&src) {
        CliError::UnknownRole { line, col, msg } => {
            assert_eq!((line, col), (8, 13));
            assert!(msg.contains("`Z`"));
        }
        e => panic!("unexpected {e:?}"),
    }
}

#[test]
fn undeclared_cell_and_foreign_role_are_unknown_roles() {
    let src = MONAD.replace("  mu m.mu", "  mu m.nu");
    assert!(matches!(located(&src), CliError::UnknownRole { line: 15, col: 6, .. }));
    let src = MONAD.replace("  mu m.mu", "  mu m.mu\n  delta m.mu");
    assert!(matches!(located(&src), CliError::UnknownRole { line: 16, col: 3, .. }));
}

#[test]
fn wrongly_typed_role_is_a_shape_mismatch() {
    let src = MONAD.replace("  mu m.mu", "  mu m.eta");
    assert!(matches!(located(&src), CliError::ShapeMismatch { line: 13, .. }));
}

#[test]
fn bad_multi_indices_are_reported() {
    let src = MONAD.replace("(1) (1,0) 1", "(2) (1,0) 1");
    assert!(matches!(located(&src), CliError::ShapeMismatch { line: 11, col: 3, .. }));
    let src = MONAD.replace("(1) (1,0) 1", "(1) (1) 1");
    assert!(matches!(located(&src), CliError::ShapeMismatch { line: 11, col: 7, .. }));
    let src = MONAD.replace("(1) (1,0) 1", "(1) (1,x) 1");
    assert!(matches!(located(&src), CliError::Parse { line: 11, col: 7, .. }));
    let src = MONAD.replace("(1) (1,0) 1", "(1) (0,1) 1");
    assert!(matches!(located(&src), CliError::Parse { line: 11, .. }));
}

#[test]
fn missing_role_and_unknown_kind_are_parse_errors() {
    let src = MONAD.replace("  eta m.eta\n", "");
    assert!(matches!(located(&src), CliError::Parse { line: 13, .. }));
    let src = MONAD.replace("structure m monad", "structure m monoid");
    assert!(matches!(located(&src), CliError::Parse { line: 13, col: 13, .. }));
}

#[test]
fn fp_literals_reduce_and_vanishing_denominators_fail() {
    let src = MONAD.replace("field q", "field fp:7").replace("(1) (1,0) 1", "(1) (1,0) 8");
    let doc = parse_str(&src).unwrap();
    assert_eq!(emit(&doc).unwrap(), MONAD.replace("field q", "field fp:7"));
    let src = MONAD.replace("field q", "field fp:7").replace("(1) (1,0) 1", "(1) (1,0) 1/7");
    assert!(matches!(located(&src), CliError::Parse { line: 11, col: 13, .. }));
}

#[test]
fn derived_families_round_trip() {
    let q = kcat::zoo::z2_quasi(-1, Field::Q).unwrap();
    let objs = [kcat::constructions::QbObject::regular(&q)];
    let fam = kcat::constructions::alpha_quasi_family(&q, &objs).unwrap();
    let doc = Document::single("alpha", Item::Family(fam), Field::Q);
    let text = emit(&doc).unwrap();
    assert_eq!(parse_str(&text).unwrap(), doc);
    assert_eq!(emit(&parse_str(&text).unwrap()).unwrap(), text);
}

fn arb_cell(dom: CellType, cod: CellType, field: Field) -> impl Strategy<Value = TwoCell> {
    let (nr, nc) = (cod.dim(), dom.dim());
    prop::collection::vec((0..nr, 0..nc, -5i64..5, 1i64..4), 0..8).prop_map(move |es| {
        let v = es
            .into_iter()
            .map(|(r, c, n, d)| (r, c, Scalar::ratio(field, n, d).unwrap()))
            .collect::<Vec<_>>();
        TwoCell::from_linear(dom.clone(), cod.clone(), field, v).unwrap()
    })
}

fn arb_doc() -> impl Strategy<Value = Document> {
    (prop_oneof![Just(Field::Q), Just(Field::Fp(7)), Just(Field::Fp(101))], 1usize..4).prop_flat_map(|(field, n)| {
        let a = Space::new("A", n);
        let at = a.ty();
        let aa = at.concat(&at);
        (
            arb_cell(aa, at.clone(), field),
            arb_cell(CellType::unit(), at.clone(), field),
            prop::collection::vec("[a-z ]{0,12}", 0..3),
        )
            .prop_map(move |(mu, eta, notes)| {
                let mut d = Document::new(field);
                d.notes = notes.into_iter().map(|n| n.trim().to_string()).filter(|n| !n.is_empty()).collect();
                d.push("m", Item::Structure(Structure::Monad(MonadDesc::new(a.clone(), mu, eta))));
                d
            })
    })
}

proptest! {
    #[test]
    fn parse_inverts_emit(doc in arb_doc()) {
        let text = emit(&doc).unwrap();
        let back = parse_str(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(emit(&back).unwrap(), text);
    }
}
