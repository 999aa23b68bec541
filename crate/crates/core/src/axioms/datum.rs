//! Sweedler and Hausser-Nill Hopf data.

use super::Suite;
use crate::constructions::{convolution_invert_diag, ConvContext, ConvolutionElement, Inverse};
use crate::error::Result;
use crate::lincat::{comp, tensor, CellType, Chain, TwoCell};
use crate::report::{AxiomSuiteReport, CheckReport};
use crate::structures::{require_shapes, ComonadDesc, HausserNillDatum, MonadDesc, SweedlerDatum};

/// Six displayed laws of a Sweedler datum.
pub fn check_sweedler_datum(s: &SweedlerDatum) -> Result<AxiomSuiteReport> {
    check_sweedler_datum_with(s, None)
}

/// As [`check_sweedler_datum`]; with a comonad on `F` and its `τ_{F,F}`
/// also checks that `σ` is convolution invertible in `K(FF, B)`.
pub fn check_sweedler_datum_with(
    s: &SweedlerDatum,
    sigma_ctx: Option<(&ComonadDesc, &TwoCell)>,
) -> Result<AxiomSuiteReport> {
    require_shapes(s.validate_shapes())?;
    let fl = s.field();
    let (b, f) = (s.b.ty(), s.f.ty());
    let act = s.action()?;
    let sigma = s.sigma()?;
    let beta = s.beta_or_id();
    let (mu, eta) = (&s.b.mu, &s.b.eta);
    let psi = &s.psi.cell;
    let (mu_m, eta_m, eps) = (&s.mu_m, &s.eta_m, &s.eps_f);
    let eta_eps = comp(&[eta, eps])?;
    let mut suite = Suite::new("sweedler datum");
    let bm = &s.b;
    suite.sub("B monad", move || {
        super::check_monad(bm).unwrap_or_else(|e| super::single_failure("B monad", "assoc", e))
    });
    let bbf = CellType::join(&[&b, &b, &f]);
    {
        let act = act.clone();
        suite.law("F mod alg", move || {
            let l = Chain::start(&bbf, fl).at(1, psi)?.at(0, &act)?.at(0, mu)?.done();
            let r = Chain::start(&bbf, fl).at(0, mu)?.at(0, &act)?.done();
            Ok((l, r))
        });
    }
    {
        let (act, f, ee) = (act.clone(), f.clone(), eta_eps.clone());
        suite.law("F mod alg unit", move || {
            let l = Chain::start(&f, fl).at(0, eta)?.then(&act)?.done();
            Ok((l, ee))
        });
    }
    {
        let (act, sigma) = (act.clone(), sigma.clone());
        let bff = CellType::join(&[&b, &f, &f]);
        suite.law("weak action", move || {
            let l = Chain::start(&bff, fl)
                .at(0, psi)?
                .at(1, psi)?
                .at(0, &sigma)?
                .at(0, mu)?
                .done();
            let r = Chain::start(&bff, fl)
                .at(1, mu_m)?
                .at(0, &act)?
                .at(0, mu)?
                .done();
            Ok((l, r))
        });
    }
    {
        let (act, b) = (act.clone(), b.clone());
        suite.law("weak action unity", move || {
            let l = Chain::start(&b, fl).at(0, eta_m)?.at(1, mu)?.at(0, eps)?.done();
            let r = Chain::start(&b, fl).at(1, eta_m)?.at(0, &act)?.at(0, mu)?.done();
            Ok((l, r))
        });
    }
    {
        let sigma = sigma.clone();
        let fff = CellType::join(&[&f, &f, &f]);
        suite.law("2-cocycle condition", move || {
            let l = Chain::start(&fff, fl)
                .then(&beta)?
                .at(1, mu_m)?
                .at(0, &sigma)?
                .at(0, mu)?
                .done();
            let r = Chain::start(&fff, fl)
                .at(0, mu_m)?
                .at(1, psi)?
                .at(0, &sigma)?
                .at(0, mu)?
                .done();
            Ok((l, r))
        });
    }
    {
        let (sigma, f, ee) = (sigma.clone(), f.clone(), eta_eps.clone());
        suite.report(move || {
            crate::report::family_law(
                "normalized 2-cocycle",
                ["eta_M F".to_string(), "F eta_M".to_string()],
                |inst| {
                    let c = Chain::start(&f, fl);
                    let l = if inst == "eta_M F" {
                        c.at(0, eta_m)?.at(1, psi)?.at(0, &sigma)?.at(0, mu)?.done()
                    } else {
                        c.at(1, eta_m)?.at(0, &sigma)?.at(0, mu)?.done()
                    };
                    Ok((l, ee.clone()))
                },
            )
        });
    }
    if let Some((fc, tau_ff)) = sigma_ctx {
        let ctx = ConvContext::new(
            vec![fc.clone(), fc.clone()],
            vec![tau_ff.clone()],
            vec![s.b.clone()],
            vec![],
        );
        suite.report(move || invertible_report("sigma invertible", ctx, sigma));
    }
    Ok(suite.finish())
}

fn invertible_report(id: &str, ctx: ConvContext, cell: TwoCell) -> CheckReport {
    let el = match ConvolutionElement::new(cell, ctx) {
        Ok(e) => e,
        Err(e) => return CheckReport::fail(id, e.to_string()),
    };
    match convolution_invert_diag(&el) {
        Ok(Inverse::TwoSided(_)) => CheckReport::pass(id),
        Ok(Inverse::OneSided(_)) => CheckReport::fail(id, "only a one-sided convolution inverse"),
        Ok(Inverse::None) => CheckReport::fail(id, "no convolution inverse"),
        Err(e) => CheckReport::fail(id, e.to_string()),
    }
}

pub fn check_hn_datum(h: &HausserNillDatum) -> Result<AxiomSuiteReport> {
    check_hn_datum_with(h, None)
}

/// As [`check_hn_datum`]; with a monad on `F`, `τ_{F,F}` and `τ_{B,F}`
/// also checks that `Φ_λ` is convolution invertible in `K(I, FFB)`.
pub fn check_hn_datum_with(
    h: &HausserNillDatum,
    phi_ctx: Option<(&MonadDesc, &TwoCell, &TwoCell)>,
) -> Result<AxiomSuiteReport> {
    require_shapes(h.validate_shapes())?;
    let fl = h.field();
    let b = h.b.ty();
    let lam = h.coaction()?;
    let phil = h.phi_lambda()?;
    let beta = h.beta_or_id();
    let (mu, eta) = (&h.b.mu, &h.b.eta);
    let psi = &h.psi.cell;
    let (dm, em, ef) = (&h.delta_m, &h.eps_m, &h.eta_f);
    let ef_eb = tensor(&[ef, eta])?;
    let mut s = Suite::new("hn datum");
    let bm = &h.b;
    s.sub("B monad", move || {
        super::check_monad(bm).unwrap_or_else(|e| super::single_failure("B monad", "assoc", e))
    });
    {
        let (lam, bb) = (lam.clone(), b.concat(&b));
        s.law("F comod alg", move || {
            let l = Chain::start(&bb, fl).at(1, &lam)?.at(0, psi)?.at(1, mu)?.done();
            let r = comp(&[&lam, mu])?;
            Ok((l, r))
        });
    }
    {
        let (lam, u) = (lam.clone(), ef_eb.clone());
        s.law("F comod alg unit", move || Ok((comp(&[&lam, eta])?, u)));
    }
    {
        let (lam, phil, b) = (lam.clone(), phil.clone(), b.clone());
        s.law("quasi coaction", move || {
            let l = Chain::from(lam).at(0, dm)?.at(2, mu)?.done();
            let r = Chain::start(&b, fl)
                .at(1, &phil)?
                .at(0, psi)?
                .at(1, psi)?
                .at(2, mu)?
                .done();
            Ok((l, r))
        });
    }
    {
        let (lam, b) = (lam.clone(), b.clone());
        s.law("quasi coaction counity", move || {
            let l = Chain::from(lam).at(0, em)?.at(0, mu)?.done();
            let r = Chain::start(&b, fl).at(1, ef)?.at(1, em)?.at(0, mu)?.done();
            Ok((l, r))
        });
    }
    {
        let phil = phil.clone();
        s.law("3-cocycle cond fi-lambda", move || {
            let l = Chain::from(phil.clone())
                .at(0, dm)?
                .at(2, psi)?
                .at(3, mu)?
                .at(0, &beta)?
                .done();
            let r = Chain::from(phil).at(1, dm)?.at(3, mu)?.done();
            Ok((l, r))
        });
    }
    {
        let (phil, u) = (phil.clone(), ef_eb.clone());
        s.report(move || {
            crate::report::family_law(
                "normalized 3-cocycle fi-lambda",
                ["eps_M F B".to_string(), "F eps_M B".to_string()],
                |inst| {
                    let c = Chain::from(phil.clone());
                    let l = if inst == "eps_M F B" {
                        c.at(0, em)?.at(0, psi)?.at(1, mu)?.done()
                    } else {
                        c.at(1, em)?.at(1, mu)?.done()
                    };
                    Ok((l, u.clone()))
                },
            )
        });
    }
    if let Some((fm, tau_ff, tau_bf)) = phi_ctx {
        let ctx = ConvContext::new(
            vec![],
            vec![],
            vec![fm.clone(), fm.clone(), h.b.clone()],
            vec![tau_ff.clone(), tau_bf.clone()],
        );
        s.report(move || invertible_report("Phi_lambda invertible", ctx, phil));
    }
    Ok(s.finish())
}
