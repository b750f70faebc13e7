//! The ideal-theoretic calculus: intersections, quotients, saturation,
//! elimination, and Frobenius powers.
//!
//! Intersections use the single auxiliary-variable trick
//! `I cap J = (w*I + (1-w)*J) cap A` with a two-block elimination order, `w`
//! alone in the front block. A quotient by one element `g` divides the
//! generators of `I cap (g)` by `g`; a quotient by an ideal intersects the
//! single-generator quotients. Saturation iterates quotients to a fixpoint.

use super::ideal::{dedupe, GbConfig, Ideal};
use crate::algebra::{Monomial, MonomialOrder, Polynomial, Ring};
use crate::error::{Error, Result};

/// A variable name not used by `ring`.
fn fresh_var(ring: &Ring, stem: &str) -> String {
    if ring.var_index(stem).is_none() {
        return stem.to_string();
    }
    let mut i = 0usize;
    loop {
        let name = format!("{stem}_{i}");
        if ring.var_index(&name).is_none() {
            return name;
        }
        i += 1;
    }
}

pub fn intersect(a: &Ideal, b: &Ideal, cfg: &GbConfig) -> Result<Ideal> {
    let ring = a.ring();
    if !ring.same(b.ring()) {
        return Err(ring.mismatch_error(b.ring()));
    }
    if a.is_zero_ideal() || b.is_zero_ideal() {
        return Ideal::new(ring, Vec::new());
    }
    let w_name = fresh_var(ring, "w");
    let ext = ring.extend_front(&[&w_name])?;
    let w = Polynomial::var(&ext, 0);
    let one_minus_w = Polynomial::one(&ext).sub(&w)?;
    let mut gens = Vec::new();
    for f in a.gens() {
        gens.push(w.mul(&f.map_to_ring(&ext)?)?);
    }
    for g in b.gens() {
        gens.push(one_minus_w.mul(&g.map_to_ring(&ext)?)?);
    }
    let j = Ideal::new(&ext, gens)?;
    let gb = j.gb(MonomialOrder::Block { first_block: 1 }, cfg)?;
    let mut out = Vec::new();
    for p in gb.iter() {
        if p.terms().iter().all(|(m, _)| m.exp(0) == 0) {
            out.push(p.map_to_ring(ring)?);
        }
    }
    Ideal::new(ring, out)
}

pub fn intersect_many(ideals: &[Ideal], cfg: &GbConfig) -> Result<Ideal> {
    let mut iter = ideals.iter();
    let first = iter
        .next()
        .ok_or_else(|| Error::InvalidParameter("intersection of no ideals".into()))?;
    let mut acc = first.clone();
    for next in iter {
        acc = intersect(&acc, next, cfg)?;
    }
    Ok(acc)
}

/// Exact division `h / g`; errors if `g` does not divide `h`.
pub fn div_exact(h: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if g.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let ring = h.ring().clone();
    let order = MonomialOrder::DegRevLex;
    let (gm, gc) = g.leading_term(order)?;
    let mut work = h.clone();
    let mut quot = Polynomial::zero(&ring);
    while !work.is_zero() {
        let (wm, wc) = work.leading_term(order)?;
        if !gm.divides(&wm) {
            return Err(Error::Internal(format!("`{g}` does not divide `{h}`")));
        }
        let qm = gm.div_into(&wm);
        let qc = wc.div(&gc);
        let t = Polynomial::monomial(&ring, qm, qc);
        quot = quot.add(&t)?;
        work = work.sub(&t.mul(g)?)?;
    }
    Ok(quot)
}

/// Colon by a single polynomial: `(I : g)`.
pub fn quotient_single(i: &Ideal, g: &Polynomial, cfg: &GbConfig) -> Result<Ideal> {
    if g.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let ring = i.ring();
    // principal by principal with exact division: ((h) : g) = (h / g) when
    // g divides h (the ambient ring is a domain)
    if i.gens().len() == 1 {
        if let Ok(quot) = div_exact(&i.gens()[0], g) {
            return Ideal::new(ring, vec![quot]);
        }
    }
    let principal = Ideal::new(ring, vec![g.clone()])?;
    let meet = intersect(i, &principal, cfg)?;
    let mut gens = Vec::new();
    for h in meet.gens() {
        gens.push(div_exact(h, g)?);
    }
    Ideal::new(ring, dedupe(gens))
}

/// Colon by an ideal: `(I : J) = {f : f*J <= I}`. Divisor generators already
/// inside `I` contribute the unit ideal and are skipped.
pub fn quotient(i: &Ideal, j: &Ideal, cfg: &GbConfig) -> Result<Ideal> {
    if j.is_zero_ideal() {
        return Err(Error::ZeroIdeal);
    }
    let mut parts: Vec<Ideal> = Vec::new();
    for g in j.gens() {
        if i.contains(g, cfg)? {
            continue;
        }
        parts.push(quotient_single(i, g, cfg)?);
    }
    if parts.is_empty() {
        return Ideal::new(i.ring(), vec![Polynomial::one(i.ring())]);
    }
    intersect_many(&parts, cfg)
}

/// Saturation `(I : f^infinity)` by iterated quotients until stabilization;
/// Noetherianity guarantees the chain stops.
pub fn saturate(i: &Ideal, f: &Polynomial, cfg: &GbConfig) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let mut current = i.clone();
    loop {
        let next = quotient_single(&current, f, cfg)?;
        if next.equals(&current, cfg)? {
            return Ok(current);
        }
        current = next;
    }
}

/// `I cap F[kept]` where `kept` is the complement of `drop`: reorders the
/// ring with the dropped variables in a front elimination block and keeps the
/// basis elements free of them. The result lives in the subring on the kept
/// variables.
pub fn eliminate(i: &Ideal, drop: &[usize], cfg: &GbConfig) -> Result<Ideal> {
    let ring = i.ring();
    for &d in drop {
        if d >= ring.arity() {
            return Err(Error::InvalidParameter(format!("no variable index {d}")));
        }
    }
    let kept: Vec<usize> = (0..ring.arity()).filter(|k| !drop.contains(k)).collect();
    let sub = ring.subring(&kept)?;
    if drop.is_empty() {
        let gens = i.gens().iter().map(|g| g.map_to_ring(&sub)).collect::<Result<_>>()?;
        return Ideal::new(&sub, gens);
    }
    let mut perm_names: Vec<&str> = drop.iter().map(|&d| ring.var_name(d)).collect();
    perm_names.extend(kept.iter().map(|&k| ring.var_name(k)));
    let perm = Ring::new(ring.field(), perm_names.iter().map(|s| s.to_string()).collect())?;
    let gens: Vec<Polynomial> =
        i.gens().iter().map(|g| g.map_to_ring(&perm)).collect::<Result<_>>()?;
    let j = Ideal::new(&perm, gens)?;
    let gb = j.gb(MonomialOrder::Block { first_block: drop.len() }, cfg)?;
    let mut out = Vec::new();
    for p in gb.iter() {
        let free = p.terms().iter().all(|(m, _)| m.exps()[..drop.len()].iter().all(|&e| e == 0));
        if free {
            out.push(p.map_to_ring(&sub)?);
        }
    }
    Ideal::new(&sub, out)
}

/// Bracket power `I^[q]`: generators raised to the q-th power. Requires the
/// ring characteristic p to divide q as a prime power; `allow_formal` permits
/// the formal bracket over characteristic zero.
pub fn frobenius_power(i: &Ideal, q: u64, allow_formal: bool, _cfg: &GbConfig) -> Result<Ideal> {
    let p = i.ring().field().characteristic();
    if p > 0 {
        let gens = i
            .gens()
            .iter()
            .map(|g| g.frobenius_pow(q))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(i.ring(), gens)
    } else if allow_formal {
        let gens = i
            .gens()
            .iter()
            .map(|g| g.pow(q as i64))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(i.ring(), gens)
    } else {
        Err(Error::BadFrobeniusPower { char_p: 0, q })
    }
}

/// Basis of the ideal generated by `gens`, complete for every element whose
/// grading degree (ignoring the first `skip_vars` variables) is at most
/// `cap`. Sound only for generators homogeneous in that grading.
pub(crate) fn truncated_basis(
    ring: &Ring,
    gens: &[Polynomial],
    order: MonomialOrder,
    skip_vars: usize,
    cap: u32,
    cfg: &GbConfig,
) -> Result<Vec<Polynomial>> {
    let mut steps = super::engine::Steps::new(cfg.budget);
    let basis = super::engine::buchberger_mode(
        gens,
        ring,
        order,
        Some(super::engine::Truncation { skip_vars, cap }),
        false,
        &mut steps,
    )?;
    Ok(basis.into_iter().map(|e| e.into_poly(ring)).collect())
}

/// Generators of `I cap (g)`, complete up to total degree `cap`; the input
/// must be homogeneous.
pub fn intersect_principal_truncated(
    i: &Ideal,
    g: &Polynomial,
    cap: u32,
    cfg: &GbConfig,
) -> Result<Vec<Polynomial>> {
    let ring = i.ring();
    let w_name = fresh_var(ring, "w");
    let ext = ring.extend_front(&[&w_name])?;
    let w = Polynomial::var(&ext, 0);
    let one_minus_w = Polynomial::one(&ext).sub(&w)?;
    let mut gens = Vec::new();
    for f in i.gens() {
        gens.push(w.mul(&f.map_to_ring(&ext)?)?);
    }
    gens.push(one_minus_w.mul(&g.map_to_ring(&ext)?)?);
    let basis = truncated_basis(
        &ext,
        &gens,
        MonomialOrder::Block { first_block: 1 },
        1,
        cap,
        cfg,
    )?;
    let mut out = Vec::new();
    for p in basis {
        if p.terms().iter().all(|(m, _)| m.exp(0) == 0) && p.degree() <= cap {
            out.push(p.map_to_ring(ring)?);
        }
    }
    Ok(out)
}

/// Generators of `(I : g)`, complete up to total degree `cap`.
pub fn quotient_single_truncated(
    i: &Ideal,
    g: &Polynomial,
    cap: u32,
    cfg: &GbConfig,
) -> Result<Vec<Polynomial>> {
    if g.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if i.gens().len() == 1 {
        if let Ok(quot) = div_exact(&i.gens()[0], g) {
            return Ok(vec![quot]);
        }
    }
    let meet = intersect_principal_truncated(i, g, cap + g.degree(), cfg)?;
    let mut gens = Vec::new();
    for h in &meet {
        gens.push(div_exact(h, g)?);
    }
    Ok(dedupe(gens))
}

/// Generators of the intersection of two truncated generating sets, complete
/// up to total degree `cap`.
fn intersect_truncated(
    ring: &Ring,
    a: &[Polynomial],
    b: &[Polynomial],
    cap: u32,
    cfg: &GbConfig,
) -> Result<Vec<Polynomial>> {
    let w_name = fresh_var(ring, "w");
    let ext = ring.extend_front(&[&w_name])?;
    let w = Polynomial::var(&ext, 0);
    let one_minus_w = Polynomial::one(&ext).sub(&w)?;
    let mut gens = Vec::new();
    for f in a {
        gens.push(w.mul(&f.map_to_ring(&ext)?)?);
    }
    for g in b {
        gens.push(one_minus_w.mul(&g.map_to_ring(&ext)?)?);
    }
    let basis = truncated_basis(
        &ext,
        &gens,
        MonomialOrder::Block { first_block: 1 },
        1,
        cap,
        cfg,
    )?;
    let mut out = Vec::new();
    for p in basis {
        if p.terms().iter().all(|(m, _)| m.exp(0) == 0) && p.degree() <= cap {
            out.push(p.map_to_ring(ring)?);
        }
    }
    Ok(out)
}

/// Generators of `(I : J)` complete up to total degree `cap`, for
/// homogeneous input; divisor generators already inside `I` are skipped.
pub fn quotient_truncated(
    i: &Ideal,
    j: &Ideal,
    cap: u32,
    cfg: &GbConfig,
) -> Result<Vec<Polynomial>> {
    if j.is_zero_ideal() {
        return Err(Error::ZeroIdeal);
    }
    let mut parts: Vec<Vec<Polynomial>> = Vec::new();
    for g in j.gens() {
        if i.contains(g, cfg)? {
            continue;
        }
        parts.push(quotient_single_truncated(i, g, cap, cfg)?);
    }
    let Some(mut acc) = parts.first().cloned() else {
        return Ok(vec![Polynomial::one(i.ring())]);
    };
    for next in &parts[1..] {
        acc = intersect_truncated(i.ring(), &acc, next, cap, cfg)?;
    }
    Ok(acc)
}

/// Bracket power with the reduced degrevlex basis carried along: the
/// Frobenius twist of a reduced basis of `I` is the reduced basis of
/// `I^[q]`, so no fresh computation is needed.
pub fn frobenius_power_seeded(i: &Ideal, q: u64, cfg: &GbConfig) -> Result<Ideal> {
    let p = i.ring().field().characteristic();
    if p == 0 {
        return Err(Error::BadFrobeniusPower { char_p: 0, q });
    }
    let order = MonomialOrder::DegRevLex;
    let gb = i.gb(order, cfg)?;
    let twisted: Vec<Polynomial> =
        gb.iter().map(|g| g.frobenius_pow(q)).collect::<Result<_>>()?;
    let out = Ideal::new(i.ring(), twisted.clone())?;
    out.seed_gb(order, twisted);
    Ok(out)
}

/// Membership of a monomial in the bracket power of the maximal ideal:
/// `m in (x1^q, ..., xk^q)` iff some exponent reaches q.
pub fn monomial_in_m_bracket(m: &Monomial, q: u64) -> bool {
    m.exps().iter().any(|&e| e as u64 >= q)
}

/// Membership of a polynomial in `m^[q]` (a monomial ideal): every term must
/// have some exponent at least q.
pub fn poly_in_m_bracket(f: &Polynomial, q: u64) -> bool {
    f.terms().iter().all(|(m, _)| monomial_in_m_bracket(m, q))
}
