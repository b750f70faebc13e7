//! Valuation, symbolic-power, and class-group suites.

use super::{guarded, Env};
use crate::algebra::FieldTag;
use crate::divisor::{
    canonical_module, class_equal, class_order, cm_initial_containment, is_principal,
    symbolic_power_verify, valuation_proxy,
};
use crate::rings::HankelContext;
use crate::verify::config::SuiteConfig;
use crate::verify::report::{params, Report, Status};
use itertools::Itertools;
use rayon::prelude::*;
use serde_json::json;

pub fn valuation(cfg: &SuiteConfig, env: &Env) -> Vec<Report> {
    let suite = "valuation";
    cfg.pairs_extended()
        .into_par_iter()
        .flat_map(|(t, n)| {
            let mut out = Vec::new();
            let ctx = match HankelContext::new(t, n, FieldTag::Rational) {
                Ok(c) => c,
                Err(_) => return out,
            };
            // the product identity for every admissible column tuple
            for cols in (1..=n).combinations(t - 1) {
                let ps = params(&[("t", json!(t)), ("n", json!(n)), ("cols", json!(cols))]);
                let cols_cl = cols.clone();
                let ctx_ref = &ctx;
                out.push(guarded(
                    env,
                    suite,
                    "product-identity",
                    "[1..t-1|i][2..t|n-t+2..n] = [1..t-1|n-t+2..n][2..t|i] in R",
                    ps,
                    None,
                    || {
                        let ok =
                            crate::rings::val2_identity_check(ctx_ref, &cols_cl, &env.gb)?;
                        Ok((Status::passing(ok), json!(ok), json!(true)))
                    },
                ));
            }
            // capped valuation of the generating minors
            for cols in (1..=n).combinations(t - 1) {
                let ps = params(&[("t", json!(t)), ("n", json!(n)), ("cols", json!(cols))]);
                let last = *cols.last().expect("t >= 2");
                let expected = (n + 1 - last).min(n - t + 2);
                let cols_cl = cols.clone();
                let ctx_ref = &ctx;
                out.push(guarded(
                    env,
                    suite,
                    "minor-valuation",
                    "v([1..t-1 | i1..i_{t-1}]) = n+1-i_{t-1}, capped at n-t+2",
                    ps,
                    None,
                    || {
                        let rows: Vec<usize> = (1..=t - 1).collect();
                        let minor = ctx_ref.matrix.minor(&rows, &cols_cl)?;
                        let v = valuation_proxy(ctx_ref, &minor, &env.gb)?;
                        Ok((Status::passing(v == expected), json!(v), json!(expected)))
                    },
                ));
            }
            // the last variable lies outside p
            let ps = params(&[("t", json!(t)), ("n", json!(n))]);
            let ctx_ref = &ctx;
            out.push(guarded(
                env,
                suite,
                "unit-outside-p",
                "x_{n+t-1} has valuation zero: p involves only x1..x_{n+t-2}",
                ps,
                None,
                || {
                    let v = valuation_proxy(ctx_ref, &ctx_ref.x(n + t - 1), &env.gb)?;
                    Ok((Status::passing(v == 0), json!(v), json!(0)))
                },
            ));
            out
        })
        .collect()
}

pub fn symbolic(cfg: &SuiteConfig, env: &Env) -> Vec<Report> {
    let suite = "symbolic";
    let mut jobs = Vec::new();
    for (t, n) in cfg.pairs_extended() {
        for k in cfg.k_range(t, n) {
            jobs.push((t, n, k));
        }
    }
    jobs.into_par_iter()
        .flat_map(|(t, n, k)| {
            let mut out = Vec::new();
            let ps = params(&[("t", json!(t)), ("n", json!(n)), ("k", json!(k))]);
            out.push(guarded(
                env,
                suite,
                "five-part-certificate",
                "p^(k) = p<k>: ordinary containment, radical agreement, exact \
                 length k binom(n, t-2), colon stability, class-power hull",
                ps.clone(),
                None,
                || {
                    let ctx = HankelContext::new(t, n, FieldTag::Rational)?;
                    let o = symbolic_power_verify(&ctx, k, &env.gb)?;
                    Ok((
                        Status::passing(o.passed()),
                        json!({
                            "ordinary_contained": o.ordinary_power_contained,
                            "radical_ok": o.radical_ok,
                            "length": o.length_computed,
                            "quotient_stable": o.quotient_stable,
                            "class_power_matches": o.class_power_matches
                        }),
                        json!({
                            "ordinary_contained": true,
                            "radical_ok": true,
                            "length": o.length_expected,
                            "quotient_stable": true,
                            "class_power_matches": true
                        }),
                    ))
                },
            ));
            out.push(guarded(
                env,
                suite,
                "initial-ideal-containment",
                "in_degrevlex(P_k + prefix) contains the prefix variables, \
                 (x_{t-1}..x_{n-k+1})^{t-1}, and (x_t..x_n)^t",
                ps,
                None,
                || {
                    let ctx = HankelContext::new(t, n, FieldTag::Rational)?;
                    let ok = cm_initial_containment(&ctx, k, &env.gb)?;
                    Ok((Status::passing(ok), json!(ok), json!(true)))
                },
            ));
            out
        })
        .collect()
}

pub fn classgroup(cfg: &SuiteConfig, env: &Env) -> Vec<Report> {
    let suite = "classgroup";
    cfg.pairs_extended()
        .into_par_iter()
        .flat_map(|(t, n)| {
            let mut out = Vec::new();
            let ps = params(&[("t", json!(t)), ("n", json!(n))]);
            let ctx = match HankelContext::new(t, n, FieldTag::Rational) {
                Ok(c) => c,
                Err(_) => return out,
            };
            let order_expected = n - t + 2;

            out.push(guarded(
                env,
                suite,
                "class-order",
                "Cl(R) is cyclic of order n-t+2, generated by [p]",
                ps.clone(),
                None,
                || {
                    let p1 = ctx.p_prime()?;
                    let order = class_order(&ctx, &p1, order_expected + 1, &env.gb)?;
                    Ok((
                        Status::passing(order == Some(order_expected)),
                        json!(order),
                        json!(order_expected),
                    ))
                },
            ));

            out.push(guarded(
                env,
                suite,
                "top-bracket-principal",
                "p<n-t+2> is principal (it is generated by Delta)",
                ps.clone(),
                None,
                || {
                    let top = ctx.p_bracket(order_expected)?;
                    let ok = is_principal(&ctx, &top, &env.gb)?;
                    Ok((Status::passing(ok), json!(ok), json!(true)))
                },
            ));

            out.push(guarded(
                env,
                suite,
                "canonical-module",
                "omega_R = p<2>: binom(n-1, t-1) generators in degree t-1; \
                 ord[omega_R] = n-t+2 if odd, else (n-t+2)/2",
                ps.clone(),
                None,
                || {
                    let o = canonical_module(&ctx, &env.gb)?;
                    let ok = o.generator_count as u64 == o.expected_generator_count
                        && o.min_generator_degree == Some(t as u32 - 1)
                        && o.class_order == Some(o.expected_class_order);
                    Ok((
                        Status::passing(ok),
                        json!({
                            "generators": o.generator_count,
                            "generator_degree": o.min_generator_degree,
                            "class_order": o.class_order
                        }),
                        json!({
                            "generators": o.expected_generator_count,
                            "generator_degree": t - 1,
                            "class_order": o.expected_class_order
                        }),
                    ))
                },
            ));

            out.push(guarded(
                env,
                suite,
                "hankel-symmetry",
                "q (minors of the first t-1 columns) equals p<n-t+1>",
                ps.clone(),
                None,
                || {
                    let q = ctx.q_ideal()?;
                    let pb = ctx.p_bracket(n - t + 1)?;
                    let ok = q.equals(&pb, &env.gb)?;
                    Ok((Status::passing(ok), json!(ok), json!(true)))
                },
            ));

            for i in 1..=n - t + 1 {
                let psi = params(&[("t", json!(t)), ("n", json!(n)), ("i", json!(i))]);
                let ctx_ref = &ctx;
                out.push(guarded(
                    env,
                    suite,
                    "q-power-class",
                    "the class of q^i equals the class of p^(n-t+2-i)",
                    psi,
                    None,
                    || {
                        let q = ctx_ref.q_ideal()?;
                        let q_pow = q.power(i)?.plus(&ctx_ref.ideal)?;
                        let target = ctx_ref.p_bracket(n - t + 2 - i)?;
                        let ok = class_equal(ctx_ref, &q_pow, &target, &env.gb)?;
                        Ok((Status::passing(ok), json!(ok), json!(true)))
                    },
                ));
            }

            out
        })
        .collect()
}
