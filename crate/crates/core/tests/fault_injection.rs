use std::collections::BTreeSet;

use rayon::prelude::*;
use std::time::{Duration, Instant};

use kcat::axioms::{check_monad, check_structure};
use kcat::structures::{MonadDesc, Structure};
use kcat::{zoo, Field, Scalar};

/// Instances whose suites leave some entries unconstrained.
const UNDERDETERMINED: [&str; 2] = ["h4-sweedler", "z2-hn"];

fn max_leg_dim(s: &mut Structure) -> usize {
    s.cells_mut()
        .iter()
        .flat_map(|(_, c)| c.dom().dims().into_iter().chain(c.cod().dims()))
        .max()
        .unwrap_or(0)
}

/// Perturb every nonzero entry by +1; returns the number tried and the
/// perturbations the suite does not notice.
fn sweep(s: &mut Structure) -> (usize, Vec<(String, usize, usize)>) {
    let one = Scalar::one(Field::Q);
    let mut sites = vec![];
    for (i, (_, cell)) in s.cells_mut().into_iter().enumerate() {
        sites.extend(cell.entries().map(|(r, c, v)| (i, r, c, v.clone())));
    }
    let s = &*s;
    let missed = sites
        .par_iter()
        .filter_map(|(i, r, c, v)| {
            let mut bad = s.clone();
            let role = {
                let mut cells = bad.cells_mut();
                let (role, cell) = &mut cells[*i];
                **cell = cell.with_entry(*r, *c, v + &one);
                role.clone()
            };
            check_structure(&bad)
                .map(|rep| rep.passed())
                .unwrap_or(false)
                .then_some((role, *r, *c))
        })
        .collect();
    (sites.len(), missed)
}

fn small_passing() -> Vec<(String, Structure)> {
    zoo::all(Field::Q)
        .into_iter()
        .filter_map(|(n, s)| {
            let mut s = s.unwrap();
            let ok = max_leg_dim(&mut s) <= 4 && check_structure(&s).map(|r| r.passed()).unwrap_or(false);
            ok.then_some((n, s))
        })
        .collect()
}

#[test]
fn every_perturbation_is_detected() {
    let t0 = Instant::now();
    let mut tried = 0;
    let mut names = vec![];
    for (name, mut s) in small_passing() {
        if UNDERDETERMINED.contains(&name.as_str()) {
            continue;
        }
        let (n, missed) = sweep(&mut s);
        assert!(missed.is_empty(), "{name}: undetected {missed:?}");
        tried += n;
        names.push(name);
    }
    assert!(names.len() >= 20, "{names:?}");
    assert!(tried > 500);
    assert!(t0.elapsed() < Duration::from_secs(120));
}

#[test]
fn sweedler_datum_over_h4_hides_beta_psi_and_eps() {
    let mut s = Structure::Sweedler(zoo::h4_sweedler(Field::Q).unwrap());
    let (_, missed) = sweep(&mut s);
    let roles: BTreeSet<&str> = missed.iter().map(|(r, _, _)| r.as_str()).collect();
    assert_eq!(roles, BTreeSet::from(["beta", "eps_f", "psi"]));
}

#[test]
fn hn_datum_over_z2_admits_rescaled_square() {
    let mut s = Structure::HausserNill(zoo::z2_hn(-1, Field::Q).unwrap());
    let (_, missed) = sweep(&mut s);
    let roles: BTreeSet<&str> = missed.iter().map(|(r, _, _)| r.as_str()).collect();
    assert_eq!(roles, BTreeSet::from(["b.mu", "eta_f"]));
    let Structure::HausserNill(h) = s else { unreachable!() };
    let (_, r, c) = missed.iter().find(|(role, _, _)| role == "b.mu").unwrap();
    let two = Scalar::int(Field::Q, 2);
    let mu = h.b.mu.with_entry(*r, *c, two.clone());
    let b = MonadDesc::new(h.b.carrier.clone(), mu, h.b.eta.clone());
    assert!(check_monad(&b).unwrap().passed());
    // k[g]/(g² - 2): (gg)g = g(gg) = 2g by hand
    let gg = |x: usize, y: usize| -> Vec<(usize, Scalar)> {
        match (x, y) {
            (0, y) => vec![(y, Scalar::one(Field::Q))],
            (x, 0) => vec![(x, Scalar::one(Field::Q))],
            _ => vec![(0, two.clone())],
        }
    };
    for x in 0..2 {
        for y in 0..2 {
            let col = x * 2 + y;
            for (row, v) in gg(x, y) {
                assert_eq!(b.mu.get(row, col), v);
            }
        }
    }
}
