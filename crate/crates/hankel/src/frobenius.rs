//! Characteristic-p verifications: Fedder's criterion, nu_e test exponents,
//! and F-pure thresholds for the maximal ideal of `R` and for the
//! determinantal ideals in the ambient ring.

use crate::algebra::{FieldTag, MonomialOrder, Polynomial};
use crate::error::{Error, Result};
use crate::groebner::{
    frobenius_power_seeded, krull_dimension, poly_in_m_bracket, quotient, quotient_truncated,
    GbConfig,
};
use crate::rings::{minor_ideal, HankelContext};
use num::rational::Ratio;
use std::collections::HashSet;

fn char_of(ctx: &HankelContext) -> Result<u64> {
    match ctx.ring.field() {
        FieldTag::Prime(p) => Ok(p as u64),
        FieldTag::Rational => Err(Error::InvalidParameter(
            "characteristic-p check on a rational context".into(),
        )),
    }
}

/// Outcome of Fedder's criterion together with the explicit witness route.
#[derive(Clone, Debug)]
pub struct FedderOutcome {
    pub p: u64,
    /// `(I^[p] : I)` is not inside `m^[p]`, i.e. R is F-pure.
    pub f_pure: bool,
    /// Size of the reduced basis of the colon ideal.
    pub colon_basis_size: usize,
    /// `f^{p-1} I <= I^[p]` for the constructed witness.
    pub witness_multiplies_in: bool,
    /// `f^{p-1}` stays outside `m^[p]`.
    pub witness_outside_bracket: bool,
    /// lex leading term of `f` is the squarefree product of all variables.
    pub witness_leading_term_ok: bool,
}

/// Fedder's criterion for `R = A/I`: F-pure iff `(I^[p] : I)` is not
/// contained in `m^[p]`. Also replays the constructive route through the
/// witness polynomial.
pub fn fedder_check(ctx: &HankelContext, cfg: &GbConfig) -> Result<FedderOutcome> {
    let p = char_of(ctx)?;
    let bracket = frobenius_power_seeded(&ctx.ideal, p, cfg)?;
    let colon = quotient(&bracket, &ctx.ideal, cfg)?;
    let gb = colon.gb(MonomialOrder::DegRevLex, cfg)?;
    let contained = gb.iter().all(|g| poly_in_m_bracket(g, p));

    // the witness constructor aborts if its leading term is not the
    // squarefree product of all variables
    let f = ctx.fedder_witness()?;
    let f_pow = f.pow((p - 1) as i64)?;
    let mut witness_multiplies_in = true;
    for g in ctx.ideal.gens() {
        if !bracket.contains(&f_pow.mul(g)?, cfg)? {
            witness_multiplies_in = false;
            break;
        }
    }
    let witness_outside_bracket = !poly_in_m_bracket(&f_pow, p);

    Ok(FedderOutcome {
        p,
        f_pure: !contained,
        colon_basis_size: gb.len(),
        witness_multiplies_in,
        witness_outside_bracket,
        witness_leading_term_ok: true,
    })
}

/// `nu_e(m_R)`: the largest r with `(I^[q] : I) m^r` not inside `m^[q]`,
/// found by ascending r. Containment of a product against the monomial
/// ideal `m^[q]` is a termwise test on any generating set of the colon: a
/// term `x^a` with all `a_i <= q-1` admits a degree-r monomial multiplier
/// staying outside `m^[q]` iff the slack `sum_i (q-1-a_i)` reaches r.
///
/// Everything here is homogeneous, so a degree-d generator contributes slack
/// exactly `(q-1) vars - d` through its inside-the-box terms, and generators
/// above a degree cap D can never beat slack found at or below D. The colon
/// is therefore computed degree-truncated, raising the cap until a boxed
/// term appears; the first hit is automatically certified.
pub fn nu_e_maximal_ideal(ctx: &HankelContext, e: u32, cfg: &GbConfig) -> Result<u64> {
    let p = char_of(ctx)?;
    let q = p.pow(e);
    let vars = ctx.ring.arity() as u64;
    let bracket = frobenius_power_seeded(&ctx.ideal, q, cfg)?;

    let slack_total = (q - 1) * vars;

    // principal defining ideal (t = n): the colon is exactly (f^{q-1}) by
    // cancellation in a domain, and every boxed term of the homogeneous
    // generator carries the same slack (q-1)(vars - deg f). A squarefree
    // extremal term of f certifies that a boxed term exists: leading terms
    // of powers never cancel.
    if ctx.ideal.gens().len() == 1 {
        let f = &ctx.ideal.gens()[0];
        let nu = (q - 1) * (vars - f.degree() as u64);
        let lex_lt = f.leading_term(MonomialOrder::Lex)?.0;
        let boxed_exists = if lex_lt.is_squarefree() {
            true
        } else {
            let expanded = f.pow((q - 1) as i64)?;
            expanded
                .terms()
                .iter()
                .any(|(m, _)| m.exps().iter().all(|&a| (a as u64) < q))
        };
        if !boxed_exists {
            return Err(Error::Internal(
                "colon ideal contained in m^[q]: ring is not F-pure".into(),
            ));
        }
        return Ok(nu);
    }

    // start from the degree the closed form predicts, with a small margin;
    // the loop is self-correcting if the prediction is off
    let hint = nu_e_maximal_closed_form(ctx.t, ctx.n, p, e);
    let mut cap = (slack_total.saturating_sub(hint) as u32).saturating_add(2);
    loop {
        let gens = quotient_truncated(&bracket, &ctx.ideal, cap, cfg)?;
        let mut best: Option<u64> = None;
        for g in &gens {
            for (m, _) in g.terms() {
                if m.exps().iter().any(|&a| a as u64 >= q) {
                    continue;
                }
                let slack: u64 = m.exps().iter().map(|&a| q - 1 - a as u64).sum();
                best = Some(best.map_or(slack, |b| b.max(slack)));
            }
        }
        if let Some(slack) = best {
            // any element above the cap has strictly smaller slack
            debug_assert!(slack >= slack_total.saturating_sub(cap as u64));
            let nu = slack;
            // replay the specified scan: ascend r, stop at first containment
            let contained_at = |r: u64| -> bool {
                gens.iter().all(|g| {
                    g.terms().iter().all(|(m, _)| {
                        m.exps().iter().any(|&a| a as u64 >= q)
                            || m.exps().iter().map(|&a| q - 1 - a as u64).sum::<u64>() < r
                    })
                })
            };
            let mut r = 0u64;
            while !contained_at(r + 1) {
                r += 1;
            }
            debug_assert_eq!(r, nu);
            return Ok(r);
        }
        if cap as u64 >= slack_total {
            // no element of the colon meets the box at any degree
            return Err(Error::Internal(
                "colon ideal contained in m^[q]: ring is not F-pure".into(),
            ));
        }
        cap = ((cap as u64 + 2 * vars).min(slack_total)) as u32;
    }
}

/// Closed form `nu_e(m_R) = (t-1) * floor(2(q-1) / (n-t+2))`.
pub fn nu_e_maximal_closed_form(t: usize, n: usize, p: u64, e: u32) -> u64 {
    let q = p.pow(e);
    (t as u64 - 1) * (2 * (q - 1) / (n as u64 - t as u64 + 2))
}

/// Exact F-pure threshold of the maximal ideal: `2(t-1) / (n-t+2)`.
pub fn fpt_maximal_closed_form(t: usize, n: usize) -> Ratio<i64> {
    Ratio::new(2 * (t as i64 - 1), n as i64 - t as i64 + 2)
}

#[derive(Clone, Debug)]
pub struct FptObservation {
    pub e: u32,
    pub q: u64,
    pub nu: u64,
    /// Closed-form prediction where one exists (the maximal-ideal case).
    pub closed_form: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct FptMaximalOutcome {
    pub p: u64,
    pub fpt: Ratio<i64>,
    pub observations: Vec<FptObservation>,
    /// every observed nu matched the closed form exactly
    pub all_match: bool,
    /// `nu_e/q` nondecreasing and within `2(t-1)/q` of the threshold
    pub convergence_ok: bool,
}

/// Observe `nu_e(m_R)` for `e = 1..=e_max` and compare with the closed form.
pub fn fpt_maximal_ideal(
    ctx: &HankelContext,
    e_max: u32,
    cfg: &GbConfig,
) -> Result<FptMaximalOutcome> {
    let p = char_of(ctx)?;
    let fpt = fpt_maximal_closed_form(ctx.t, ctx.n);
    let mut observations = Vec::new();
    let mut all_match = true;
    let mut convergence_ok = true;
    let mut last_ratio: Option<Ratio<i64>> = None;
    for e in 1..=e_max {
        let nu = nu_e_maximal_ideal(ctx, e, cfg)?;
        let closed = nu_e_maximal_closed_form(ctx.t, ctx.n, p, e);
        if nu != closed {
            all_match = false;
        }
        let q = p.pow(e);
        let ratio = Ratio::new(nu as i64, q as i64);
        if let Some(prev) = last_ratio {
            if ratio < prev {
                convergence_ok = false;
            }
        }
        let gap = fpt - ratio;
        let tolerance = Ratio::new(2 * (ctx.t as i64 - 1), q as i64);
        if gap < Ratio::new(0, 1) || gap > tolerance {
            convergence_ok = false;
        }
        last_ratio = Some(ratio);
        observations.push(FptObservation { e, q, nu, closed_form: Some(closed) });
    }
    Ok(FptMaximalOutcome { p, fpt, observations, all_match, convergence_ok })
}

/// `nu_e` of `I_i(H)` in the ambient polynomial ring: the largest r with
/// `I_i^r` not inside `m^[q]`. Powers are built incrementally with pruning
/// modulo the monomial ideal `m^[q]`: a product whose residue vanishes never
/// resurrects, and residues are deduplicated up to scalar.
pub fn nu_e_ambient(ctx: &HankelContext, i: usize, e: u32, cfg: &GbConfig) -> Result<u64> {
    let p = char_of(ctx)?;
    let q = p.pow(e);
    let minors = minor_ideal(&ctx.matrix, i)?;
    let reduce = |f: &Polynomial| -> Polynomial {
        Polynomial::from_terms(
            &ctx.ring,
            f.terms()
                .iter()
                .filter(|(m, _)| m.exps().iter().all(|&a| (a as u64) < q))
                .cloned()
                .collect(),
        )
    };
    // deduplicate generators up to scalar after reduction
    let mut gens: Vec<Polynomial> = Vec::new();
    {
        let mut seen = HashSet::new();
        for g in minors.gens() {
            let r = reduce(g);
            if r.is_zero() {
                continue;
            }
            let r = r.monic(MonomialOrder::DegRevLex)?;
            if seen.insert(r.to_string()) {
                gens.push(r);
            }
        }
    }
    if gens.is_empty() {
        return Ok(0);
    }
    let state_cap = (cfg.budget / 100).max(10_000) as usize;
    let mut level: Vec<Polynomial> = gens.clone();
    let mut nu = 1u64;
    loop {
        let mut next: Vec<Polynomial> = Vec::new();
        let mut seen: HashSet<String> = HashSet::new();
        for s in &level {
            for g in &gens {
                let prod = reduce(&s.mul(g)?);
                if prod.is_zero() {
                    continue;
                }
                let prod = prod.monic(MonomialOrder::DegRevLex)?;
                let key = prod.to_string();
                if seen.insert(key) {
                    next.push(prod);
                }
            }
            if next.len() > state_cap {
                return Err(Error::BudgetExhausted {
                    steps: next.len() as u64,
                    budget: state_cap as u64,
                });
            }
        }
        if next.is_empty() {
            return Ok(nu);
        }
        nu += 1;
        level = next;
    }
}

/// Closed form `fpt(I_t(H)) = min over i of (n+t-2i+1)/(t-i+1)`.
pub fn fpt_determinantal_closed_form(t: usize, n: usize) -> Ratio<i64> {
    (1..=t)
        .map(|i| Ratio::new((n + t + 1) as i64 - 2 * i as i64, (t - i + 1) as i64))
        .min()
        .expect("t >= 1")
}

#[derive(Clone, Debug)]
pub struct FptDeterminantalOutcome {
    pub p: u64,
    pub fpt: Ratio<i64>,
    pub observations: Vec<FptObservation>,
    /// `nu_e/q` nondecreasing in e and within `(n+t-1)/q` of the threshold.
    pub convergence_ok: bool,
    /// set when the power construction ran out of budget at some e
    pub budget_exhausted_at: Option<u32>,
}

/// Observe `nu_e(I_t)` in the ambient ring for `e = 1..=e_max`; partial
/// observations are kept when the budget runs out.
pub fn fpt_determinantal(
    ctx: &HankelContext,
    e_max: u32,
    cfg: &GbConfig,
) -> Result<FptDeterminantalOutcome> {
    let p = char_of(ctx)?;
    let fpt = fpt_determinantal_closed_form(ctx.t, ctx.n);
    let mut observations = Vec::new();
    let mut convergence_ok = true;
    let mut budget_exhausted_at = None;
    let mut last_ratio: Option<Ratio<i64>> = None;
    for e in 1..=e_max {
        let nu = match nu_e_ambient(ctx, ctx.t, e, cfg) {
            Ok(v) => v,
            Err(Error::BudgetExhausted { .. }) => {
                budget_exhausted_at = Some(e);
                break;
            }
            Err(other) => return Err(other),
        };
        let q = p.pow(e);
        let ratio = Ratio::new(nu as i64, q as i64);
        if let Some(prev) = last_ratio {
            if ratio < prev {
                convergence_ok = false;
            }
        }
        let gap = fpt - ratio;
        let tolerance = Ratio::new((ctx.n + ctx.t - 1) as i64, q as i64);
        if gap < Ratio::new(0, 1) || gap > tolerance {
            convergence_ok = false;
        }
        last_ratio = Some(ratio);
        observations.push(FptObservation { e, q, nu, closed_form: None });
    }
    Ok(FptDeterminantalOutcome { p, fpt, observations, convergence_ok, budget_exhausted_at })
}

#[derive(Clone, Debug)]
pub struct HeightChainOutcome {
    pub i: usize,
    pub height: usize,
    pub expected_height: usize,
    /// Largest m <= n-t+1 with the Fedder witness in the ordinary power
    /// `I_i^m` (the full symbolic membership is deliberately not certified).
    pub witness_power: usize,
}

/// Heights of the smaller-minor ideals `I_i(H)` and the ordinary-power
/// membership level of the Fedder witness in each.
pub fn height_chain_check(
    ctx: &HankelContext,
    i: usize,
    cfg: &GbConfig,
) -> Result<HeightChainOutcome> {
    if i < 1 || i > ctx.t {
        return Err(Error::InvalidParameter(format!("need 1 <= i <= t, got {i}")));
    }
    let minors = minor_ideal(&ctx.matrix, i)?;
    let dim = krull_dimension(&minors, cfg)?;
    let height = ctx.num_vars() - dim;
    let expected_height = ctx.n + ctx.t + 1 - 2 * i;

    let witness = ctx.fedder_witness()?;
    let mut witness_power = 0usize;
    let cap = ctx.n - ctx.t + 1;
    for m in 1..=cap {
        // a homogeneous ideal generated in degree i*m cannot contain the
        // witness once i*m exceeds its degree
        if (i * m) as u32 > witness.degree() {
            break;
        }
        let power = minors.power(m)?;
        if power.contains(&witness, cfg)? {
            witness_power = m;
        } else {
            break;
        }
    }
    Ok(HeightChainOutcome { i, height, expected_height, witness_power })
}
