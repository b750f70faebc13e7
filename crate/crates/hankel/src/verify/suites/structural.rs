//! Characteristic-free structural suites.

use super::{guarded, Env};
use crate::algebra::FieldTag;
use crate::groebner::{dimension_and_length, krull_dimension, socle, Ideal};
use crate::rings::{
    self, binomial, parametrization_kernel, GeneralHankelContext, HankelContext,
    MembershipOutcome, SecantContext,
};
use crate::verify::config::SuiteConfig;
use crate::verify::report::{params, Report, Status};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

pub fn invariants(cfg: &SuiteConfig, env: &Env) -> Vec<Report> {
    let suite = "invariants";
    cfg.pairs_extended()
        .into_par_iter()
        .flat_map(|(t, n)| {
            let mut out = Vec::new();
            let ps = params(&[("t", json!(t)), ("n", json!(n))]);
            let ctx = match HankelContext::new(t, n, FieldTag::Rational) {
                Ok(c) => c,
                Err(e) => {
                    out.push(guarded(env, suite, "build", "context assembly", ps, None, || {
                        Err(e)
                    }));
                    return out;
                }
            };

            out.push(guarded(
                env,
                suite,
                "dim",
                "dim R = 2t-2",
                ps.clone(),
                None,
                || {
                    let dim = krull_dimension(&ctx.ideal, &env.gb)?;
                    Ok((Status::passing(dim == 2 * t - 2), json!(dim), json!(2 * t - 2)))
                },
            ));

            out.push(guarded(
                env,
                suite,
                "height",
                "height I_t(H) = n-t+1",
                ps.clone(),
                None,
                || {
                    let dim = krull_dimension(&ctx.ideal, &env.gb)?;
                    let height = ctx.num_vars() - dim;
                    Ok((Status::passing(height == n - t + 1), json!(height), json!(n - t + 1)))
                },
            ));

            let artin = ctx.ideal.plus_polys(&ctx.hsop()).expect("same ring");
            out.push(guarded(
                env,
                suite,
                "multiplicity",
                "l(R/hsop R) = e(R) = binom(n, t-1)",
                ps.clone(),
                None,
                || {
                    let rep = dimension_and_length(&artin, &env.gb)?;
                    let expected = binomial(n, t - 1);
                    Ok((
                        Status::passing(rep.krull_dim == 0 && rep.length == Some(expected)),
                        json!({"dim": rep.krull_dim, "length": rep.length}),
                        json!({"dim": 0, "length": expected}),
                    ))
                },
            ));

            out.push(guarded(
                env,
                suite,
                "a-invariant",
                "a(R) = 1-t, read as top socle degree of R/hsop minus the hsop count",
                ps.clone(),
                None,
                || {
                    let soc = socle(&artin, &env.gb)?;
                    let a = soc.top_degree as i64 - (2 * t as i64 - 2);
                    Ok((Status::passing(a == 1 - t as i64), json!(a), json!(1 - t as i64)))
                },
            ));

            out.push(guarded(
                env,
                suite,
                "socle-dim",
                "socle of R/hsop is spanned by the degree t-1 monomials in x_t..x_n",
                ps.clone(),
                None,
                || {
                    let soc = socle(&artin, &env.gb)?;
                    let candidates = ctx.socle_candidate_count();
                    // the spanning statement makes the candidate count an
                    // upper bound attained exactly when the span is a basis;
                    // report both values and flag any discrepancy
                    Ok((
                        Status::passing(
                            soc.dim as u64 == candidates
                                && soc.by_degree == vec![(t as u32 - 1, soc.dim)],
                        ),
                        json!({"socle_dim": soc.dim, "by_degree": soc.by_degree}),
                        json!({"socle_dim": candidates, "degree": t - 1}),
                    ))
                },
            ));
            out
        })
        .collect()
}

pub fn canonicalize_suite(_cfg: &SuiteConfig, env: &Env) -> Vec<Report> {
    let suite = "canonicalize";
    let shapes = [(3usize, 3usize, 2usize), (2, 4, 2), (3, 4, 2)];
    shapes
        .into_par_iter()
        .map(|(r, s, u)| {
            let ps = params(&[("r", json!(r)), ("s", json!(s)), ("u", json!(u))]);
            guarded(
                env,
                suite,
                "maximal-minor-reduction",
                "I_u(r x s Hankel) = I_u(u x (r+s-u) Hankel) in the same variables",
                ps,
                None,
                || {
                    let g = GeneralHankelContext::new(r, s, u, FieldTag::Rational)?;
                    let out = rings::canonicalize(&g, &env.gb)?;
                    Ok((
                        Status::passing(out.ideals_equal),
                        json!({
                            "t": out.t, "n": out.n, "equal": out.ideals_equal,
                            "left_basis": out.left_basis_size,
                            "right_basis": out.right_basis_size
                        }),
                        json!({"t": u, "n": r + s - u, "equal": true}),
                    ))
                },
            )
        })
        .collect()
}

pub fn parametrization(_cfg: &SuiteConfig, env: &Env) -> Vec<Report> {
    let suite = "parametrization";
    let cases = [(2usize, 2usize), (2, 3), (3, 3)];
    let mut reports: Vec<Report> = cases
        .into_par_iter()
        .flat_map(|(t, n)| {
            let ps = params(&[("t", json!(t)), ("n", json!(n))]);
            let mut out = Vec::new();
            out.push(guarded(
                env,
                suite,
                "kernel",
                "eliminating u, v from (x_{i+1} - h_i) yields exactly I_t(H)",
                ps.clone(),
                None,
                || {
                    let sctx = SecantContext::new(t, n, FieldTag::Rational)?;
                    let (kernel, kring) = parametrization_kernel(&sctx, &env.gb)?;
                    let hctx = HankelContext::new(t, n, FieldTag::Rational)?;
                    let gens = hctx
                        .ideal
                        .gens()
                        .iter()
                        .map(|g| g.map_to_ring(&kring))
                        .collect::<crate::error::Result<Vec<_>>>()?;
                    let expected = Ideal::new(&kring, gens)?;
                    let equal = kernel.equals(&expected, &env.gb)?;
                    Ok((
                        Status::passing(equal),
                        json!({"equal": equal, "kernel_gens": kernel.gens().len()}),
                        json!({"equal": true}),
                    ))
                },
            ));
            out.push(guarded(
                env,
                suite,
                "rank-bound",
                "every t-minor of the matrix Hankel in the h_i is the zero polynomial",
                ps,
                None,
                || {
                    let sctx = SecantContext::new(t, n, FieldTag::Rational)?;
                    let ok = sctx.minors_vanish()?;
                    Ok((Status::passing(ok), json!(ok), json!(true)))
                },
            ));
            out
        })
        .collect();
    reports.extend(generic_specialization_reports(env));
    reports
}

pub fn minor_identity_suite(_cfg: &SuiteConfig, env: &Env) -> Vec<Report> {
    let suite = "minor-identity";
    let shapes = [
        (2usize, 2usize, 2usize),
        (2, 3, 2),
        (3, 3, 2),
        (3, 4, 2),
        (3, 3, 3),
        (3, 4, 3),
    ];
    shapes
        .into_par_iter()
        .map(|(m, s, t)| {
            let label = format!("minor-identity/{m}x{s}/t{t}");
            let seed = env.derive_seed(&label);
            let ps = params(&[("rows", json!(m)), ("cols", json!(s)), ("t", json!(t))]);
            guarded(
                env,
                suite,
                "exterior-rank-one",
                "[a|b][c|d] = [a|d][c|b] for (t-1)-minors of a rank-deficient matrix",
                ps,
                Some(seed),
                || {
                    let out = rings::minor_identity_check(m, s, t, 101, 100, seed, &env.gb)?;
                    Ok((
                        Status::passing(out.symbolic_failures == 0 && out.numeric_failures == 0),
                        json!({
                            "symbolic_checked": out.symbolic_checked,
                            "symbolic_failures": out.symbolic_failures,
                            "numeric_samples": out.numeric_samples,
                            "numeric_failures": out.numeric_failures
                        }),
                        json!({"symbolic_failures": 0, "numeric_failures": 0}),
                    ))
                },
            )
        })
        .collect()
}

pub fn length_lemma(_cfg: &SuiteConfig, env: &Env) -> Vec<Report> {
    let suite = "length-lemma";
    let mut cases = Vec::new();
    for t in 2..=4usize {
        for s in 1..=4usize {
            for r in 1..=s {
                cases.push((t, r, s));
            }
        }
    }
    cases
        .into_par_iter()
        .map(|(t, r, s)| {
            let ps = params(&[("t", json!(t)), ("r", json!(r)), ("s", json!(s))]);
            guarded(
                env,
                suite,
                "length",
                "l(F[y]/((y1..yr)^{t-1} + (y2..ys)^t)) = (s-r+1) binom(s+t-2, t-2)",
                ps,
                None,
                || {
                    let out = rings::length_lemma_check(t, r, s, FieldTag::Rational, &env.gb)?;
                    let ok = out.brute_force == out.formula && out.engine == out.formula;
                    Ok((
                        Status::passing(ok),
                        json!({"brute_force": out.brute_force, "engine": out.engine}),
                        json!({"formula": out.formula}),
                    ))
                },
            )
        })
        .collect()
}

pub fn tight_closure(cfg: &SuiteConfig, env: &Env) -> Vec<Report> {
    let suite = "tight-closure";
    // the named socle-independence instances, plus t=2 rows over QQ and a
    // small prime
    let mut cases: Vec<(usize, usize, FieldTag)> = vec![
        (3, 3, FieldTag::Prime(3)),
        (3, 4, FieldTag::Prime(5)),
    ];
    for &(t, n) in cfg.pairs().iter() {
        if t == 2 {
            cases.push((2, n, FieldTag::Rational));
            cases.push((2, n, FieldTag::Prime(2)));
        }
    }
    cases
        .into_par_iter()
        .map(|(t, n, field)| {
            let ps = params(&[
                ("t", json!(t)),
                ("n", json!(n)),
                ("field", json!(field.to_string())),
            ]);
            guarded(
                env,
                suite,
                "socle-independence",
                "the map from lambda coefficients to socle products modulo \
                 (u_j^n, v_j^n) is injective, with multiplicity-factorial \
                 diagonal weights below t!",
                ps,
                None,
                || {
                    let out = rings::socle_independence_check(t, n, field, &env.gb)?;
                    match out {
                        None => Ok((
                            Status::NotApplicable,
                            json!("field characteristic below t"),
                            json!("p >= t required"),
                        )),
                        Some(o) => {
                            let factorial_t: u64 = (1..=t as u64).product();
                            let ok = o.injective
                                && o.coefficient_pattern_ok
                                && o.max_weight < factorial_t;
                            Ok((
                                Status::passing(ok),
                                json!({
                                    "indices": o.index_count,
                                    "injective": o.injective,
                                    "pattern_ok": o.coefficient_pattern_ok,
                                    "max_weight": o.max_weight
                                }),
                                json!({
                                    "injective": true,
                                    "pattern_ok": true,
                                    "max_weight_below": factorial_t
                                }),
                            ))
                        }
                    }
                },
            )
        })
        .collect()
}

pub fn not_pure(_cfg: &SuiteConfig, env: &Env) -> Vec<Report> {
    let suite = "not-pure";
    [(3usize, 2usize), (3, 3)]
        .into_par_iter()
        .map(|(t, n)| {
            let ps = params(&[("t", json!(t)), ("n", json!(n))]);
            guarded(
                env,
                suite,
                "height-t-trap",
                "each h_i lies in (u_j - v_j, sum v_j^{n+t-2}); the quotient \
                 of S by that ideal has dimension t-2",
                ps,
                None,
                || {
                    let out = rings::not_pure_ingredient_check(t, n, FieldTag::Rational, &env.gb)?;
                    let ok = out.symmetry_collapses
                        && out.membership_holds
                        && out.quotient_dim == out.expected_dim;
                    Ok((
                        Status::passing(ok),
                        json!({
                            "symmetry": out.symmetry_collapses,
                            "membership": out.membership_holds,
                            "dim": out.quotient_dim
                        }),
                        json!({"symmetry": true, "membership": true, "dim": out.expected_dim}),
                    ))
                },
            )
        })
        .collect()
}

pub fn minor_products(_cfg: &SuiteConfig, env: &Env) -> Vec<Report> {
    let suite = "minor-products";
    let contexts = [(3usize, 3usize, 2usize), (3, 4, 2), (4, 4, 3)];
    contexts
        .into_par_iter()
        .map(|(r, s, u)| {
            let label = format!("minor-products/{r}x{s}/u{u}");
            let seed = env.derive_seed(&label);
            let ps = params(&[("r", json!(r)), ("s", json!(s)), ("u", json!(u))]);
            guarded(
                env,
                suite,
                "product-membership",
                "products of minors with m <= d and total size >= t*d lie in I_t^d",
                ps,
                Some(seed),
                || {
                    let g = GeneralHankelContext::new(r, s, u, FieldTag::Rational)?;
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    let mut holds = 0usize;
                    let mut fails = 0usize;
                    let mut attempts = 0usize;
                    while holds + fails < 20 && attempts < 4000 {
                        attempts += 1;
                        let d = if u == 2 && rng.gen_bool(0.3) { 3 } else { 2 };
                        let m = rng.gen_range(1..=d);
                        let mut pair_list = Vec::with_capacity(m);
                        let mut total = 0usize;
                        for _ in 0..m {
                            let w = rng.gen_range(1..=r.min(s));
                            let rows = sample_subset(&mut rng, r, w);
                            let cols = sample_subset(&mut rng, s, w);
                            total += w;
                            pair_list.push((rows, cols));
                        }
                        if total < u * d {
                            continue; // inadmissible sample, not a test case
                        }
                        match rings::minor_product_membership(&g, &pair_list, d, &env.gb)? {
                            MembershipOutcome::Holds => holds += 1,
                            MembershipOutcome::Fails => fails += 1,
                            MembershipOutcome::NotApplicable(_) => {}
                        }
                    }
                    Ok((
                        Status::passing(fails == 0 && holds == 20),
                        json!({"holds": holds, "fails": fails}),
                        json!({"holds": 20, "fails": 0}),
                    ))
                },
            )
        })
        .collect()
}

fn sample_subset(rng: &mut ChaCha8Rng, upper: usize, size: usize) -> Vec<usize> {
    let mut all: Vec<usize> = (1..=upper).collect();
    let mut out = Vec::with_capacity(size);
    for _ in 0..size {
        let idx = rng.gen_range(0..all.len());
        out.push(all.remove(idx));
    }
    out.sort_unstable();
    out
}

/// Generic-determinantal specialization checks, reported under the
/// parametrization suite.
fn generic_specialization_reports(env: &Env) -> Vec<Report> {
    let suite = "parametrization";
    [(2usize, 2usize), (2, 3), (3, 3)]
        .into_par_iter()
        .map(|(t, n)| {
            let ps = params(&[("t", json!(t)), ("n", json!(n))]);
            guarded(
                env,
                suite,
                "generic-specialization",
                "substituting Y_{ij} -> x_{i+j-1} carries the generic minors \
                 onto the Hankel ones, and the consecutive differences are \
                 part of a system of parameters: the dimension drops to 2t-2",
                ps,
                None,
                || {
                    let out =
                        rings::generic_specialization_check(t, n, FieldTag::Rational, &env.gb)?;
                    let ok = out.substitution_matches && out.specialized_dim == out.expected_dim;
                    Ok((
                        Status::passing(ok),
                        json!({
                            "substitution": out.substitution_matches,
                            "generic_dim": out.generic_dim,
                            "specialized_dim": out.specialized_dim
                        }),
                        json!({"substitution": true, "specialized_dim": out.expected_dim}),
                    ))
                },
            )
        })
        .collect()
}
