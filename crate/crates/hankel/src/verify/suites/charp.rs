//! Characteristic-p suites: F-purity, nu_e counts, F-pure thresholds,
//! heights of the minor ideals.

use super::{guarded, Env};
use crate::algebra::FieldTag;
use crate::frobenius::{
    fedder_check, fpt_determinantal, fpt_determinantal_closed_form, fpt_maximal_closed_form,
    fpt_maximal_ideal, height_chain_check,
};
use crate::rings::HankelContext;
use crate::verify::config::SuiteConfig;
use crate::verify::report::{params, Report, Status};
use rayon::prelude::*;
use serde_json::json;

fn prime_contexts(cfg: &SuiteConfig) -> Vec<(usize, usize, u64)> {
    let mut out = Vec::new();
    for (t, n) in cfg.pairs() {
        for &p in &cfg.primes {
            out.push((t, n, p));
        }
    }
    out
}

pub fn fpure(cfg: &SuiteConfig, env: &Env) -> Vec<Report> {
    let suite = "fpure";
    prime_contexts(cfg)
        .into_par_iter()
        .map(|(t, n, p)| {
            let ps = params(&[("t", json!(t)), ("n", json!(n)), ("p", json!(p))]);
            guarded(
                env,
                suite,
                "fedder",
                "R is F-pure: (I^[p] : I) is not inside m^[p]; the witness f \
                 has squarefree lex leading term x1...x_{n+t-1}, f^{p-1} \
                 stays outside m^[p], and f^{p-1} I <= I^[p]",
                ps,
                None,
                || {
                    let ctx = HankelContext::new(t, n, FieldTag::prime(p as u32)?)?;
                    let o = fedder_check(&ctx, &env.gb)?;
                    let ok = o.f_pure
                        && o.witness_leading_term_ok
                        && o.witness_outside_bracket
                        && o.witness_multiplies_in;
                    Ok((
                        Status::passing(ok),
                        json!({
                            "f_pure": o.f_pure,
                            "witness_lt_ok": o.witness_leading_term_ok,
                            "witness_outside_bracket": o.witness_outside_bracket,
                            "witness_multiplies_in": o.witness_multiplies_in,
                            "colon_basis": o.colon_basis_size
                        }),
                        json!({
                            "f_pure": true,
                            "witness_lt_ok": true,
                            "witness_outside_bracket": true,
                            "witness_multiplies_in": true
                        }),
                    ))
                },
            )
        })
        .collect()
}

pub fn fpt_maximal(cfg: &SuiteConfig, env: &Env) -> Vec<Report> {
    let suite = "fpt-maximal";
    let e_max = cfg.e_max;
    prime_contexts(cfg)
        .into_par_iter()
        .map(|(t, n, p)| {
            let ps = params(&[
                ("t", json!(t)),
                ("n", json!(n)),
                ("p", json!(p)),
                ("e_max", json!(e_max)),
            ]);
            guarded(
                env,
                suite,
                "nu-and-threshold",
                "nu_e(m_R) = (t-1) floor(2(q-1)/(n-t+2)) exactly, and nu_e/q \
                 approaches fpt(m_R) = 2(t-1)/(n-t+2) monotonically within \
                 2(t-1)/q",
                ps,
                None,
                || {
                    let ctx = HankelContext::new(t, n, FieldTag::prime(p as u32)?)?;
                    let o = fpt_maximal_ideal(&ctx, e_max, &env.gb)?;
                    let ok = o.all_match && o.convergence_ok;
                    let obs: Vec<_> = o
                        .observations
                        .iter()
                        .map(|ob| {
                            json!({"e": ob.e, "q": ob.q, "nu": ob.nu, "closed_form": ob.closed_form})
                        })
                        .collect();
                    Ok((
                        Status::passing(ok),
                        json!({"fpt": o.fpt.to_string(), "observations": obs}),
                        json!({
                            "fpt": fpt_maximal_closed_form(t, n).to_string(),
                            "nu_matches_closed_form": true
                        }),
                    ))
                },
            )
        })
        .collect()
}

pub fn fpt_determinantal_suite(cfg: &SuiteConfig, env: &Env) -> Vec<Report> {
    let suite = "fpt-determinantal";
    let e_max = cfg.e_max;
    prime_contexts(cfg)
        .into_par_iter()
        .map(|(t, n, p)| {
            let ps = params(&[
                ("t", json!(t)),
                ("n", json!(n)),
                ("p", json!(p)),
                ("e_max", json!(e_max)),
            ]);
            guarded(
                env,
                suite,
                "ambient-threshold",
                "fpt(I_t(H)) = min over i of (n+t-2i+1)/(t-i+1); observed \
                 nu_e(I_t)/q is nondecreasing and within (n+t-1)/q of it",
                ps,
                None,
                || {
                    let ctx = HankelContext::new(t, n, FieldTag::prime(p as u32)?)?;
                    let o = fpt_determinantal(&ctx, e_max, &env.gb)?;
                    let complete = o.budget_exhausted_at.is_none()
                        && o.observations.len() == e_max as usize;
                    let obs: Vec<_> = o
                        .observations
                        .iter()
                        .map(|ob| json!({"e": ob.e, "q": ob.q, "nu": ob.nu}))
                        .collect();
                    let status = if !o.convergence_ok {
                        Status::Fail
                    } else if !complete {
                        Status::BudgetExhausted
                    } else {
                        Status::Pass
                    };
                    Ok((
                        status,
                        json!({
                            "fpt": o.fpt.to_string(),
                            "observations": obs,
                            "budget_exhausted_at": o.budget_exhausted_at
                        }),
                        json!({
                            "fpt": fpt_determinantal_closed_form(t, n).to_string(),
                            "convergence": true,
                            "observations_expected": e_max
                        }),
                    ))
                },
            )
        })
        .collect()
}

pub fn heights(cfg: &SuiteConfig, env: &Env) -> Vec<Report> {
    let suite = "heights";
    let mut jobs = Vec::new();
    for (t, n) in cfg.pairs_extended() {
        for i in 1..=t {
            jobs.push((t, n, i));
        }
    }
    jobs.into_par_iter()
        .map(|(t, n, i)| {
            let ps = params(&[("t", json!(t)), ("n", json!(n)), ("i", json!(i))]);
            guarded(
                env,
                suite,
                "minor-ideal-height",
                "height I_i(H) = n+t-2i+1; the Fedder witness lies in \
                 ordinary powers of I_i up to the certifiable level",
                ps,
                None,
                || {
                    let ctx = HankelContext::new(t, n, FieldTag::Rational)?;
                    let o = height_chain_check(&ctx, i, &env.gb)?;
                    Ok((
                        Status::passing(o.height == o.expected_height),
                        json!({"height": o.height, "witness_power": o.witness_power}),
                        json!({"height": o.expected_height}),
                    ))
                },
            )
        })
        .collect()
}
