use proptest::prelude::*;

use kcat::constructions::*;
use kcat::diagram::mul_elems;
use kcat::lincat::{apply_at, compare, hcomp, identity, lay, swap, vcomp, CellType, Chain, Space, TwoCell};
use kcat::{zoo, Field, Scalar, Witness};

fn sp(name: &str) -> Space {
    Space::new(name, if name == "B" { 3 } else { 2 })
}

fn ty(names: &str) -> CellType {
    CellType::new(names.chars().map(|c| sp(&c.to_string())).collect())
}

fn cell_from(dom: &CellType, cod: &CellType, vals: &[i64], field: Field) -> TwoCell {
    let nc = dom.dim();
    let it = vals
        .iter()
        .enumerate()
        .filter(|(_, v)| **v != 0)
        .map(|(k, v)| (k / nc, k % nc, Scalar::int(field, *v)));
    TwoCell::from_linear(dom.clone(), cod.clone(), field, it).unwrap()
}

/// Random cells of the given types over one field, Q or F_7.
fn cells<const N: usize>(types: [(&'static str, &'static str); N]) -> impl Strategy<Value = [TwoCell; N]> {
    let vs: Vec<_> = types
        .iter()
        .map(|(d, c)| prop::collection::vec(-2i64..=2, ty(d).dim() * ty(c).dim()))
        .collect();
    (vs, prop::bool::ANY).prop_map(move |(vs, fp)| {
        let field = if fp { Field::prime(7).unwrap() } else { Field::Q };
        let out: Vec<TwoCell> = types.iter().zip(&vs).map(|((d, c), v)| cell_from(&ty(d), &ty(c), v, field)).collect();
        out.try_into().unwrap()
    })
}

fn vals(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn interchange_law([f, g, h, k] in cells([("A", "B"), ("C", "B"), ("C", "A"), ("A", "C")])) {
        let l = vcomp(&hcomp(&f, &g).unwrap(), &hcomp(&h, &k).unwrap()).unwrap();
        let r = hcomp(&vcomp(&f, &h).unwrap(), &vcomp(&g, &k).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn composition_is_associative_and_unital([f, g, h] in cells([("B", "C"), ("A", "B"), ("C", "A")])) {
        let fl = f.field();
        let l = vcomp(&vcomp(&f, &g).unwrap(), &h).unwrap();
        let r = vcomp(&f, &vcomp(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(l, r);
        prop_assert_eq!(vcomp(&identity(f.cod(), fl), &f).unwrap(), f.clone());
        prop_assert_eq!(vcomp(&f, &identity(f.dom(), fl)).unwrap(), f.clone());
        let hh = hcomp(&hcomp(&f, &g).unwrap(), &h).unwrap();
        prop_assert_eq!(hh, hcomp(&f, &hcomp(&g, &h).unwrap()).unwrap());
        prop_assert_eq!(hcomp(&identity(&CellType::unit(), fl), &f).unwrap(), f);
    }

    #[test]
    fn swap_is_natural([f, g] in cells([("A", "B"), ("C", "A")])) {
        let fl = f.field();
        let l = vcomp(&swap(&sp("B"), &sp("A"), fl), &hcomp(&f, &g).unwrap()).unwrap();
        let r = vcomp(&hcomp(&g, &f).unwrap(), &swap(&sp("A"), &sp("C"), fl)).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn sparse_application_matches_padding([cur, c] in cells([("C", "ABC"), ("B", "AC")]), pos in 0usize..3) {
        let t = cur.cod().clone();
        match lay(&t, pos, &c) {
            Ok(p) => prop_assert_eq!(apply_at(&cur, pos, &c).unwrap(), vcomp(&p, &cur).unwrap()),
            Err(_) => prop_assert!(apply_at(&cur, pos, &c).is_err()),
        }
    }

    #[test]
    fn mirror_is_an_involutive_antihomomorphism([f, g, h] in cells([("AB", "CA"), ("BC", "A"), ("B", "AB")])) {
        prop_assert_eq!(f.mirror().mirror(), f.clone());
        prop_assert_eq!(hcomp(&f, &g).unwrap().mirror(), hcomp(&g.mirror(), &f.mirror()).unwrap());
        let fh = vcomp(&f, &h).unwrap();
        prop_assert_eq!(fh.mirror(), vcomp(&f.mirror(), &h.mirror()).unwrap());
    }

    #[test]
    fn comparison_is_sound_and_complete([f, g] in cells([("AB", "C"), ("AB", "C")])) {
        match compare(&f, &g) {
            None => prop_assert_eq!(&f, &g),
            Some(Witness::Entry { row, col, lhs, rhs }) => {
                prop_assert!(f != g);
                prop_assert_ne!(&lhs, &rhs);
                prop_assert_eq!(f.get_multi(&row, &col).unwrap(), lhs);
                prop_assert_eq!(g.get_multi(&row, &col).unwrap(), rhs);
            }
            Some(w) => prop_assert!(false, "unexpected witness {}", w),
        }
        prop_assert!(compare(&f, &f).is_none());
    }

    #[test]
    fn convolution_is_associative_and_unital(a in vals(16), b in vals(16), c in vals(16)) {
        let (m, co, _) = zoo::sweedler_h4(Field::Q);
        let ctx = ConvContext::new(vec![co], vec![], vec![m.clone()], vec![]);
        let t = m.ty();
        let el = |v: &[i64]| ConvolutionElement::new(cell_from(&t, &t, v, Field::Q), ctx.clone()).unwrap();
        let (a, b, c) = (el(&a), el(&b), el(&c));
        let l = convolution_product(&convolution_product(&a, &b).unwrap(), &c).unwrap();
        let r = convolution_product(&a, &convolution_product(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
        let u = convolution_unit(&ctx, Field::Q).unwrap();
        prop_assert_eq!(convolution_product(&u, &a).unwrap(), a.clone());
        prop_assert_eq!(convolution_product(&a, &u).unwrap(), a);
    }

    #[test]
    fn triple_action_is_a_module_action(a in vals(8), b in vals(8), v in vals(8)) {
        let q = zoo::z2_quasi(-1, Field::Q).unwrap();
        let r = QbObject::regular(&q);
        let f = q.monad.ty();
        let fff = CellType::join(&[&f, &f, &f]);
        let elem = |v: &[i64]| cell_from(&CellType::unit(), &fff, v, Field::Q);
        let (a, b, v) = (elem(&a), elem(&b), elem(&v));
        let act = triple_action(&r, &r, &r).unwrap();
        let by = |x: &TwoCell, w: &TwoCell| Chain::from(w.clone()).at(0, x).unwrap().then(&act).unwrap().done();
        let ab = mul_elems(&q.monad, &q.tau_ff.cell, &a, &b).unwrap();
        prop_assert_eq!(by(&a, &by(&b, &v)), by(&ab, &v));
        let one = kcat::tensor(&[&q.monad.eta, &q.monad.eta, &q.monad.eta]).unwrap();
        prop_assert_eq!(by(&one, &v), v);
    }

    #[test]
    fn triple_action_commutes_with_crossing(a in vals(8), v in vals(8)) {
        let q = zoo::z2_quasi(-1, Field::Q).unwrap();
        let r = QbObject::regular(&q);
        let f = q.monad.ty();
        let fff = CellType::join(&[&f, &f, &f]);
        let a = cell_from(&CellType::unit(), &fff, &a, Field::Q);
        let v = cell_from(&CellType::unit(), &fff, &v, Field::Q);
        let act = triple_action(&r, &r, &r).unwrap();
        let tau = tau_on_pair(&tau_on_pair(&r.tau_fx, &r.tau_fx).unwrap(), &r.tau_fx).unwrap();
        let fv = hcomp(&q.monad.eta, &v).unwrap();
        let l = Chain::from(fv.clone()).at(1, &a).unwrap().at(1, &act).unwrap().then(&tau.cell).unwrap().done();
        let r2 = Chain::from(fv).then(&tau.cell).unwrap().at(0, &a).unwrap().at(0, &act).unwrap().done();
        prop_assert_eq!(l, r2);
    }

    #[test]
    fn prime_field_arithmetic(a in 0i64..50, b in 0i64..50, c in 0i64..50, pi in 0usize..4) {
        let p = [2u64, 3, 7, 1_000_003][pi];
        let fl = Field::prime(p).unwrap();
        let (x, y, z) = (Scalar::int(fl, a), Scalar::int(fl, b), Scalar::int(fl, c));
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&x - &y) + &y, x.clone());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        } else {
            prop_assert!(x.inv().is_none());
        }
    }

    #[test]
    fn rationals_print_and_parse(n in -1000i64..1000, d in 1i64..1000) {
        let s = Scalar::ratio(Field::Q, n, d).unwrap();
        prop_assert_eq!(Scalar::parse(Field::Q, &s.to_string()).unwrap(), s);
    }
}
