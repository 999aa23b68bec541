use kcat::axioms::*;
use kcat::constructions::*;
use kcat::lincat::{identity, swap, tensor, TwoCell};
use kcat::structures::*;
use kcat::zoo::{self, GroupTable};
use kcat::{Field, Scalar};

const Q: Field = Field::Q;

fn fp() -> Field {
    Field::prime(1_000_003).unwrap()
}

fn nudge(c: &TwoCell) -> TwoCell {
    let (r, col, v) = c.entries().next().map(|(r, col, v)| (r, col, v.clone())).unwrap();
    c.with_entry(r, col, &v + &Scalar::one(c.field()))
}

#[test]
fn pentagon_bridge_on_z2() {
    let qb = zoo::z2_quasi(-1, Q).unwrap();
    let fam = alpha_quasi_family(&qb, &[QbObject::regular(&qb)]).unwrap();
    let p = check_pentagon(&fam).unwrap();
    assert!(p.passed(), "{p}");
    assert!(check_quasi_bimonad(&qb).unwrap().passes("3-coc. cond."));
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                let mut bad = qb.clone();
                let v = bad.phi.get_multi(&[i, j, k], &[]).unwrap();
                let row = i * 4 + j * 2 + k;
                bad.phi = bad.phi.with_entry(row, 0, -&v);
                let pent = check_pentagon(&alpha_quasi_family(&bad, &[QbObject::regular(&bad)]).unwrap()).unwrap().passed();
                let coc = check_quasi_bimonad(&bad).unwrap().passes("3-coc. cond.");
                assert_eq!(pent, coc, "entry {i}{j}{k}");
                assert!(!pent, "entry {i}{j}{k}");
            }
        }
    }
}

#[test]
fn pentagon_of_trivial_phi_and_comodule_categories() {
    let qb = zoo::z2_quasi(1, Q).unwrap();
    assert!(check_pentagon(&alpha_quasi_family(&qb, &[QbObject::regular(&qb)]).unwrap()).unwrap().passed());
    for cq in [zoo::z2_coquasi(-1, Q).unwrap(), zoo::h4_coquasi(Q)] {
        let fam = alpha_coquasi_family(&cq, &[CoqObject::regular(&cq)]).unwrap();
        assert!(check_pentagon(&fam).unwrap().passed());
    }
    let mut bad = zoo::z2_coquasi(-1, Q).unwrap();
    // ω(1,1,g) = -1 alone is not a cocycle
    bad.omega = bad.omega.with_entry(0, 1, -&Scalar::one(Q));
    bad.omega = bad.omega.with_entry(0, 7, Scalar::one(Q));
    let r = check_coquasi_bimonad(&bad).unwrap();
    assert!(r.get("3-cocycle").is_some() && !r.passes("3-cocycle"));
    assert!(!check_pentagon(&alpha_coquasi_family(&bad, &[CoqObject::regular(&bad)]).unwrap()).unwrap().passed());
}

#[test]
fn inverse_constraints_undo_the_associator() {
    let qb = zoo::z2_quasi(-1, Q).unwrap();
    let r = QbObject::regular(&qb);
    let a = alpha_quasi(&qb, &r, &r, &r).unwrap();
    let ai = alpha_quasi_inv(&qb, &r, &r, &r).unwrap();
    let id = identity(a.dom(), Q);
    assert_eq!(kcat::comp(&[&a, &ai]).unwrap(), id);
    let mut no_inv = qb.clone();
    no_inv.phi_inv = None;
    assert!(matches!(alpha_quasi_inv(&no_inv, &r, &r, &r), Err(kcat::Error::MissingInverse(_))));
    assert!(matches!(check_quasi_bimonad(&no_inv), Err(kcat::Error::MissingInverse(_))));
}

#[test]
fn trivial_phi_is_the_bialgebra_suite() {
    let mut cases: Vec<BimonadDesc> = zoo::GROUPS.iter().map(|g| zoo::group_bimonad(&GroupTable::named(g).unwrap(), Q)).collect();
    cases.push(zoo::h4_bimonad(Q));
    for bm in cases {
        let e = &bm.monad.eta;
        let phi = tensor(&[e, e, e]).unwrap();
        let tau = zoo::swap_law(bm.space(), bm.space(), Q);
        let qb = QuasiBimonadDesc {
            monad: bm.monad.clone(),
            comonad: bm.comonad.clone(),
            tau_ff: tau.clone(),
            phi: phi.clone(),
            phi_inv: Some(phi),
        };
        for broken in [false, true] {
            let mut q = qb.clone();
            if broken {
                q.monad.mu = nudge(&q.monad.mu);
            }
            let a = check_quasi_bimonad(&q).unwrap().passed();
            let b = check_bialgebra(&q.monad, &q.comonad, &q.tau_ff).unwrap().passed();
            assert_eq!(a, b);
            assert_eq!(a, !broken);
        }
    }
}

#[test]
fn swaps_over_commutative_cocommutative_algebras() {
    for g in zoo::GROUPS {
        let t = GroupTable::named(g).unwrap();
        if !t.is_abelian() {
            continue;
        }
        let (m, c) = zoo::group_algebra(&t, Q);
        let d = zoo::swap_law(&m.carrier, &m.carrier, Q);
        let leg = Leg::Bi(&m, &c);
        assert!(check_declared_kinds(&d, leg, leg).unwrap().passed(), "{g}");
        let s = &d.cell;
        let ty = m.ty();
        assert!(check_yang_baxter("YBE", s, s, s, (&ty, &ty, &ty)).passed());
    }
}

#[test]
fn qb_one_cells_and_tambara_modules() {
    let qb = zoo::z2_quasi(-1, Q).unwrap();
    let r = QbObject::regular(&qb);
    assert!(check_qb_one_cell(&r.x, &r.tau_fx, &qb).unwrap().passed());
    let rr = r.tensor(&r, &qb).unwrap();
    assert!(check_qb_one_cell(&rr.x, &rr.tau_fx, &qb).unwrap().passed());

    let (m, c) = zoo::group_algebra(&GroupTable::s3(), Q);
    let tau = zoo::swap_law(&m.carrier, &m.carrier, Q);
    let t = TambaraModuleDesc {
        base: m.clone(),
        tau_bb: tau.clone(),
        x: m.ty(),
        tau: DistLaw::new(m.ty(), m.ty(), tau.cell.clone(), &[DistKind::LeftMonadic]),
        nu: ModuleDesc::left(m.carrier.clone(), m.ty(), m.mu.clone()),
    };
    assert!(check_tambara(&t).unwrap().passed());
    let tt = tensor_tambara(&t, &t, &c.delta).unwrap();
    assert!(check_tambara(&tt).unwrap().passed());
    let mut bad = t.clone();
    bad.nu.action = nudge(&bad.nu.action);
    assert!(!check_tambara(&bad).unwrap().passed());
}

#[test]
fn left_linearity() {
    let (m, _) = zoo::group_algebra(&GroupTable::cyclic(2), Q);
    let id = identity(&m.ty(), Q);
    assert!(check_left_linear(&id, &m.mu, &m.mu).passed());
    // x ↦ x + g·x... replaced by the non-equivariant projection onto 1
    let proj = TwoCell::from_linear(m.ty(), m.ty(), Q, [(0, 0, Scalar::one(Q))]).unwrap();
    assert!(!check_left_linear(&proj, &m.mu, &m.mu).passed());
    // right multiplication by g commutes with left multiplication
    let rg = TwoCell::from_linear(m.ty(), m.ty(), Q, [(1, 0, Scalar::one(Q)), (0, 1, Scalar::one(Q))]).unwrap();
    assert!(check_left_linear(&rg, &m.mu, &m.mu).passed());
}

#[test]
fn sweedler_pipeline_on_h4() {
    for field in [Q, fp()] {
        let s = zoo::h4_sch(field);
        let d = sweedler_datum_from_coquasi(&s.q, &s.b, &s.tau_bf, &s.action, &s.sigma).unwrap();
        let r = check_sweedler_datum_with(&d, Some((&s.q.comonad, &s.q.tau_ff.cell))).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.passes("sigma invertible"));
        let sm = wreath_product_monad(&d).unwrap();
        assert_eq!(sm.carrier.dim, 16);
        if field != Q {
            assert!(check_monad(&sm).unwrap().passed());
        }
    }
}

#[test]
fn broken_weak_action_breaks_the_crossed_product() {
    let fl = fp();
    let mut d = zoo::h4_sweedler(fl).unwrap();
    d.mu_m = nudge(&d.mu_m);
    let r = check_sweedler_datum(&d).unwrap();
    assert!(!r.passed());
    assert!(!check_monad(&wreath_product_monad(&d).unwrap()).unwrap().passed());
}

#[test]
fn hn_pipeline_on_z2() {
    let m = zoo::z2_martin(-1, Q).unwrap();
    let h = hn_datum_from_quasi(&m.q, &m.b, &m.tau_bf, &m.lambda_b, &m.phi_lambda).unwrap();
    let r = check_hn_datum_with(&h, Some((&m.q.monad, &m.q.tau_ff.cell, &m.tau_bf.cell))).unwrap();
    assert!(r.passed(), "{r}");
    assert!(r.passes("Phi_lambda invertible"));
    let mut bad = h.clone();
    bad.delta_m = nudge(&bad.delta_m);
    assert!(!check_hn_datum(&bad).unwrap().passes("quasi coaction"));
}

#[test]
fn sch_family_passes_every_em_law() {
    for field in [Q, fp()] {
        let s = zoo::h4_sch(field);
        let sinv = sigma_inverse(&s.q, &s.b, &s.sigma).unwrap();
        let reg = SchObject::regular(&s.q, &s.tau_bf);
        let fam = sch_family(&s.q, &s.b, &s.action, &s.sigma, &sinv, &[reg], vec![]).unwrap();
        assert_eq!(fam.objects.len(), 2);
        let r = check_em_cocycle_family(&fam).unwrap();
        assert_eq!(r.ids(), EM_LAWS.to_vec());
        assert!(r.passed(), "{r}");
        assert!(r.domain.is_some());
    }
}

#[test]
fn wrong_sigma_inverse_breaks_vertical_composition() {
    let s = zoo::h4_sch(Q);
    let reg = SchObject::regular(&s.q, &s.tau_bf);
    let zero = TwoCell::zero(s.sigma.dom().clone(), s.sigma.cod().clone(), Q);
    let fam = sch_family(&s.q, &s.b, &s.action, &s.sigma, &zero, &[reg], vec![]).unwrap();
    let r = check_em_cocycle_family(&fam).unwrap();
    assert!(!r.passes("vert comp M"));
    assert!(r.passes("natur"));
}

#[test]
fn martin_family_passes_every_em_law() {
    let m = zoo::z2_martin(-1, Q).unwrap();
    let inv = philambda_inverse(&m.q, &m.b, &m.tau_bf, &m.phi_lambda).unwrap();
    let reg = MartinObject::regular(&m.q, &m.tau_bf);
    let fam = martin_family(&m.q, &m.b, &m.lambda_b, &m.phi_lambda, &inv, std::slice::from_ref(&reg), vec![]).unwrap();
    let r = check_em_cocycle_family(&fam).unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(inv, m.phi_lambda);
    let self_inv = martin_family(&m.q, &m.b, &m.lambda_b, &m.phi_lambda, &m.phi_lambda, &[reg], vec![]).unwrap();
    assert!(check_em_cocycle_family(&self_inv).unwrap().passed());
    let zero = TwoCell::zero(m.phi_lambda.dom().clone(), m.phi_lambda.cod().clone(), Q);
    assert!(matches!(philambda_inverse(&m.q, &m.b, &m.tau_bf, &zero), Err(kcat::Error::MissingInverse(_))));
    let reg = MartinObject::regular(&m.q, &m.tau_bf);
    let wrong = martin_family(&m.q, &m.b, &m.lambda_b, &m.phi_lambda, &zero, &[reg], vec![]).unwrap();
    assert!(!check_em_cocycle_family(&wrong).unwrap().passes("vert comp M"));
}

#[test]
fn em_family_precheck_reports_missing_entries() {
    let s = zoo::h4_sch(Q);
    let sinv = sigma_inverse(&s.q, &s.b, &s.sigma).unwrap();
    let reg = SchObject::regular(&s.q, &s.tau_bf);
    let mut fam = sch_family(&s.q, &s.b, &s.action, &s.sigma, &sinv, &[reg], vec![]).unwrap();
    let key = fam.rho.keys().last().unwrap().clone();
    fam.rho.remove(&key);
    assert!(matches!(check_em_cocycle_family(&fam), Err(kcat::Error::MissingEntry(_))));
    assert!(check_em_laws(&fam, &["monad law ro"]).is_ok());
    assert!(check_em_laws(&fam, &["no such law"]).is_err());
}

/// Family hypothesis ⇒ cocycle condition, on valid and corrupted σ.
#[test]
fn sigma_lemma_bridge() {
    let s = zoo::h4_sch(Q);
    let mut sigmas = vec![s.sigma.clone()];
    for (r, c, _) in s.sigma.entries() {
        sigmas.push(s.sigma.with_entry(r, c, Scalar::int(Q, 2)));
    }
    sigmas.push(s.sigma.with_entry(2, 5, Scalar::one(Q)));
    let mut broken = 0;
    for (i, sigma) in sigmas.iter().enumerate() {
        let fam = cocycle_cells_sigma(sigma, &s.q, &s.b, &s.tau_bf, &s.action).unwrap();
        let hyp = check_em_laws(&fam, &["monad law ro"]).unwrap().passed();
        let d = sweedler_datum_from_coquasi(&s.q, &s.b, &s.tau_bf, &s.action, sigma).unwrap();
        let concl = check_sweedler_datum(&d).unwrap().passes("2-cocycle condition");
        assert!(!hyp || concl, "sigma #{i}");
        if i == 0 {
            assert!(concl);
        } else if !concl {
            broken += 1;
        }
    }
    assert!(broken > 0);
}

#[test]
fn philambda_lemma_bridge() {
    let m = zoo::z2_martin(-1, Q).unwrap();
    let mut phis = vec![m.phi_lambda.clone()];
    for (r, c, v) in m.phi_lambda.entries() {
        phis.push(m.phi_lambda.with_entry(r, c, -v));
    }
    let mut broken = 0;
    for (i, phil) in phis.iter().enumerate() {
        let fam = cocycle_cells_philambda(phil, &m.q, &m.b, &m.tau_bf, &m.lambda_b).unwrap();
        let hyp = check_em_laws(&fam, &["monad law ro new"]).unwrap().passed();
        let h = hn_datum_from_quasi(&m.q, &m.b, &m.tau_bf, &m.lambda_b, phil).unwrap();
        let concl = check_hn_datum(&h).unwrap().passes("3-cocycle cond fi-lambda");
        assert!(!hyp || concl, "phi #{i}");
        if i == 0 {
            assert!(concl);
        } else {
            broken += usize::from(!concl);
        }
    }
    assert!(broken > 0);
}

fn yd_s3() -> YDModuleDesc {
    zoo::conjugation_yd(&GroupTable::s3(), Q).unwrap()
}

#[test]
fn yd_pipeline_on_s3() {
    let y = yd_s3();
    assert!(check_yd(&y, true).unwrap().passed());
    let yy = tensor_yd(&y, &y).unwrap();
    assert_eq!(yy.x.len(), 2);
    assert!(check_yd(&yy, true).unwrap().passed());
    let rel = zoo::self_relative(&zoo::group_bimonad(&GroupTable::s3(), Q)).unwrap();
    assert!(check_relative(&rel).unwrap().passed());
    let tau_bx = zoo::swap_law(&rel.b.carrier, &y.x.legs[0], Q);
    let a = act_yd(&y, &tau_bx, &rel).unwrap();
    assert_eq!(a.m.len(), 2);
    assert!(check_relative(&a).unwrap().passed());
}

#[test]
fn broken_yd_data_fail() {
    let y = yd_s3();
    let mut bad = y.clone();
    bad.phi.cell = nudge(&bad.phi.cell);
    assert!(!check_yd(&bad, true).unwrap().passed());
    let rel = zoo::self_relative(&zoo::group_bimonad(&GroupTable::s3(), Q)).unwrap();
    let mut bad = rel.clone();
    bad.coaction = nudge(&bad.coaction);
    assert!(!check_relative(&bad).unwrap().passed());
}

#[test]
fn mirror_yd_pipeline_on_s3() {
    let y = yd_s3();
    let my = mirror_yd(&y);
    assert_eq!(my.side, Side::Right);
    assert!(check_yd(&my, true).unwrap().passed());
    assert_eq!(mirror_yd(&my), y);
    let rel = zoo::self_relative(&zoo::group_bimonad(&GroupTable::s3(), Q)).unwrap();
    let mr = mirror_relative(&rel);
    assert!(check_relative(&mr).unwrap().passed());
    assert_eq!(mirror_relative(&mr), rel);
    let tau_xb = zoo::swap_law(&y.x.legs[0], &rel.b.carrier, Q);
    assert!(check_relative(&act_yd_right(&my, &tau_xb, &mr).unwrap()).unwrap().passed());
    let s = Structure::YD(y.clone());
    assert_eq!(mirror(&mirror(&s).unwrap()).unwrap(), s);
    assert!(mirror(&Structure::Sweedler(zoo::h4_sweedler(Q).unwrap())).is_err());
}

#[test]
fn h4_relative_and_bimonad_from_tau_sides() {
    let bm = zoo::h4_bimonad(Q);
    assert!(check_bimonad(&bm, Side::Left).unwrap().passed());
    assert!(check_relative(&zoo::self_relative(&bm).unwrap()).unwrap().passed());
    let (m, c) = zoo::group_algebra(&GroupTable::s3(), Q);
    let right = bimonad_from_tau(&m, &c, &swap(&m.carrier, &m.carrier, Q), Side::Right).unwrap();
    assert!(check_bimonad(&right, Side::Right).unwrap().passed());
    assert!(check_structure(&Structure::Bimonad(right)).unwrap().passed());
}

#[test]
fn act_sch_gives_a_module_of_the_measured_monad() {
    let s = zoo::h4_sch(Q);
    let reg = SchObject::regular(&s.q, &s.tau_bf);
    let mb = ModuleDesc::left(s.b.carrier.clone(), s.b.ty(), s.b.mu.clone());
    let out = act_sch(&reg, &s.action, &mb).unwrap();
    assert!(check_module(&out.module, &s.b).unwrap().passed());
    let mut bad = mb.clone();
    bad.action = nudge(&bad.action);
    let out = act_sch(&reg, &s.action, &bad).unwrap();
    assert!(!check_module(&out.module, &s.b).unwrap().passed());
}

#[test]
fn act_martin_gives_a_module_of_the_comeasured_monad() {
    let m = zoo::z2_martin(-1, Q).unwrap();
    let reg = MartinObject::regular(&m.q, &m.tau_bf);
    let mb = ModuleDesc::left(m.b.carrier.clone(), m.b.ty(), m.b.mu.clone());
    let out = act_martin(&reg, &m.lambda_b, &mb).unwrap();
    assert!(check_module(&out.module, &m.b).unwrap().passed());
}

#[test]
fn standalone_parts_have_no_suite() {
    let (m, _) = zoo::group_algebra(&GroupTable::cyclic(2), Q);
    let d = zoo::swap_law(&m.carrier, &m.carrier, Q);
    assert!(matches!(check_structure(&Structure::DistLaw(d)), Err(kcat::Error::KindUnsupported(_))));
}
