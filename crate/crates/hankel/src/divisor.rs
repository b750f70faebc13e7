//! Divisor-class arithmetic in a Hankel determinantal ring: reflexive hulls,
//! class products and orders, the symbolic-power certificate, the canonical
//! module, and the capped valuation proxy.
//!
//! Every ideal of `R = A/I` is handled through its preimage in `A`, which
//! contains `I`. The reflexive hull of `J` is computed as `(a : (a : J))` in
//! `R` for a fixed nonzero `a` in `J` (the first stored generator outside
//! `I`); divisorial-class equality is decided by multiplying with a class
//! inverse `(a : J)` and testing principality, never by module isomorphism
//! search.

use crate::algebra::{MonomialOrder, Polynomial};
use crate::error::{Error, Result};
use crate::groebner::{
    dimension_and_length, min_generator_count, min_generators, quotient, quotient_single,
    radical_membership, GbConfig, Ideal,
};
use crate::rings::{binomial, HankelContext};

/// A divisorial (rank-one reflexive) ideal of `R`, stored as its preimage.
#[derive(Clone, Debug)]
pub struct DivisorialIdeal {
    /// Preimage in `A`; contains the defining ideal.
    pub preimage: Ideal,
}

impl DivisorialIdeal {
    pub fn new(preimage: Ideal) -> DivisorialIdeal {
        DivisorialIdeal { preimage }
    }
}

/// First stored generator that is nonzero in `R`; errors when the image
/// ideal is zero.
fn anchor_element(ctx: &HankelContext, j: &Ideal, cfg: &GbConfig) -> Result<Polynomial> {
    for g in j.gens() {
        if !ctx.ideal.contains(g, cfg)? {
            return Ok(g.clone());
        }
    }
    Err(Error::ZeroIdeal)
}

/// Colon of preimages `(P1 : P2)`, which is the preimage of the colon in `R`
/// whenever `I <= P1`.
pub fn colon_in_r(p1: &Ideal, p2: &Ideal, cfg: &GbConfig) -> Result<Ideal> {
    quotient(p1, p2, cfg)
}

/// Reflexive hull `(a : (a : J))` with respect to the given anchor.
pub fn reflexive_hull_with(
    ctx: &HankelContext,
    j: &Ideal,
    anchor: &Polynomial,
    cfg: &GbConfig,
) -> Result<Ideal> {
    let principal = ctx.r_ideal(vec![anchor.clone()])?;
    let inner = quotient(&principal, j, cfg)?;
    quotient(&principal, &inner, cfg)
}

/// Reflexive hull with the canonical anchor (first generator outside `I`).
pub fn reflexive_hull(ctx: &HankelContext, j: &Ideal, cfg: &GbConfig) -> Result<Ideal> {
    let a = anchor_element(ctx, j, cfg)?;
    reflexive_hull_with(ctx, j, &a, cfg)
}

/// Hull of the product: the divisorial class product `[J1] + [J2]`.
pub fn class_product(
    ctx: &HankelContext,
    j1: &Ideal,
    j2: &Ideal,
    cfg: &GbConfig,
) -> Result<Ideal> {
    let prod = j1.product(j2)?.plus(&ctx.ideal)?;
    reflexive_hull(ctx, &prod, cfg)
}

/// `(a : J)`, a divisorial ideal in the inverse class of `[J]`.
pub fn class_inverse(ctx: &HankelContext, j: &Ideal, cfg: &GbConfig) -> Result<Ideal> {
    let a = anchor_element(ctx, j, cfg)?;
    let principal = ctx.r_ideal(vec![a])?;
    quotient(&principal, j, cfg)
}

/// Number of minimal generators of the image of `j` in `R`.
pub fn minimal_generator_count(
    ctx: &HankelContext,
    j: &Ideal,
    cfg: &GbConfig,
) -> Result<usize> {
    min_generator_count(j, Some(&ctx.ideal), cfg)
}

/// An ideal of `R` is principal iff it has one minimal generator.
pub fn is_principal(ctx: &HankelContext, j: &Ideal, cfg: &GbConfig) -> Result<bool> {
    Ok(minimal_generator_count(ctx, j, cfg)? == 1)
}

/// Class equality `[J1] = [J2]`, decided by multiplying `J1` with a class
/// inverse of `J2` and testing principality of the hull.
pub fn class_equal(
    ctx: &HankelContext,
    j1: &Ideal,
    j2: &Ideal,
    cfg: &GbConfig,
) -> Result<bool> {
    let inv = class_inverse(ctx, j2, cfg)?;
    let combined = class_product(ctx, j1, &inv, cfg)?;
    is_principal(ctx, &combined, cfg)
}

/// Least k <= bound with the k-fold class power of `[J]` principal.
pub fn class_order(
    ctx: &HankelContext,
    j: &Ideal,
    bound: usize,
    cfg: &GbConfig,
) -> Result<Option<usize>> {
    let mut power = reflexive_hull(ctx, j, cfg)?;
    for k in 1..=bound {
        if is_principal(ctx, &power, cfg)? {
            return Ok(Some(k));
        }
        power = class_product(ctx, &power, j, cfg)?;
    }
    Ok(None)
}

/// Hull of the k-th class power of `J`.
pub fn class_power(
    ctx: &HankelContext,
    j: &Ideal,
    k: usize,
    cfg: &GbConfig,
) -> Result<Ideal> {
    let mut power = reflexive_hull(ctx, j, cfg)?;
    for _ in 1..k {
        power = class_product(ctx, &power, j, cfg)?;
    }
    Ok(power)
}

/// The capped valuation proxy: the largest `k <= n-t+2` with `g` in `p<k>`,
/// zero when `g` is outside `p`.
pub fn valuation_proxy(ctx: &HankelContext, g: &Polynomial, cfg: &GbConfig) -> Result<usize> {
    if ctx.ideal.contains(g, cfg)? {
        return Err(Error::InvalidParameter(
            "valuation proxy of the zero element of R".into(),
        ));
    }
    let mut best = 0;
    for k in 1..=ctx.n - ctx.t + 2 {
        if ctx.p_bracket(k)?.contains(g, cfg)? {
            best = k;
        } else {
            break;
        }
    }
    Ok(best)
}

/// The five-part symbolic-power certificate for `p^(k) = p<k>`.
#[derive(Clone, Debug)]
pub struct SymbolicPowerOutcome {
    pub k: usize,
    /// (i) `p^k <= p<k>`.
    pub ordinary_power_contained: bool,
    /// (ii) radical agreement: generators of `p` lie in the radical of
    /// `p<k>`, and `p<k> <= p`.
    pub radical_ok: bool,
    /// (iii) the exact length `l(A / (P_k + prefix)) = k * binom(n, t-2)`.
    pub length_computed: u64,
    pub length_expected: u64,
    /// (iv) `(p<k> : w) = p<k>` for the two witnesses outside `p`.
    pub quotient_stable: bool,
    /// (v) hull of the k-th class power of `p` equals `p<k>`.
    pub class_power_matches: bool,
}

impl SymbolicPowerOutcome {
    pub fn passed(&self) -> bool {
        self.ordinary_power_contained
            && self.radical_ok
            && self.length_computed == self.length_expected
            && self.quotient_stable
            && self.class_power_matches
    }
}

pub fn symbolic_power_verify(
    ctx: &HankelContext,
    k: usize,
    cfg: &GbConfig,
) -> Result<SymbolicPowerOutcome> {
    if ctx.t < 2 {
        return Err(Error::InvalidParameter("symbolic powers need t >= 2".into()));
    }
    let p_k = ctx.p_bracket(k)?;
    let p_1 = ctx.p_prime()?;

    // (i) ordinary power containment: products of k generators of p
    let p_gens: Vec<Polynomial> = p_minors(ctx)?;
    let mut ordinary_ok = true;
    for combo in multisets(p_gens.len(), k) {
        let mut prod = Polynomial::one(&ctx.ring);
        for &idx in &combo {
            prod = prod.mul(&p_gens[idx])?;
        }
        if !p_k.contains(&prod, cfg)? {
            ordinary_ok = false;
            break;
        }
    }

    // (ii) radical both ways
    let mut radical_ok = true;
    for g in &p_gens {
        if !radical_membership(g, &p_k, cfg)? {
            radical_ok = false;
        }
    }
    if !p_1.contains_ideal(&p_k, cfg)? {
        radical_ok = false;
    }

    // (iii) length of A / (P_k + hsop prefix)
    let j = p_k.plus_polys(&ctx.hsop_prefix())?;
    let rep = dimension_and_length(&j, cfg)?;
    let length_computed = rep.length.unwrap_or(u64::MAX);
    let length_expected = k as u64 * binomial(ctx.n, ctx.t - 2);

    // (iv) colon stability against elements outside p
    let mut quotient_stable = true;
    let w1 = ctx.x(ctx.n + ctx.t - 1);
    let rows: Vec<usize> = (2..=ctx.t).collect();
    let cols: Vec<usize> = (ctx.n - ctx.t + 2..=ctx.n).collect();
    let w2 = ctx.matrix.minor(&rows, &cols)?;
    for w in [w1, w2] {
        let colon = quotient_single(&p_k, &w, cfg)?;
        if !colon.equals(&p_k, cfg)? {
            quotient_stable = false;
        }
    }

    // (v) class power consistency
    let hull_k = class_power(ctx, &p_1, k, cfg)?;
    let class_power_matches = hull_k.equals(&p_k, cfg)?;

    Ok(SymbolicPowerOutcome {
        k,
        ordinary_power_contained: ordinary_ok,
        radical_ok,
        length_computed,
        length_expected,
        quotient_stable,
        class_power_matches,
    })
}

/// Generators of `p` itself (the maximal minors of the first t-1 rows),
/// without the defining ideal.
fn p_minors(ctx: &HankelContext) -> Result<Vec<Polynomial>> {
    use itertools::Itertools;
    let rows: Vec<usize> = (1..=ctx.t - 1).collect();
    let mut out = Vec::new();
    for cols in (1..=ctx.n).combinations(ctx.t - 1) {
        out.push(ctx.matrix.minor(&rows, &cols)?);
    }
    Ok(out)
}

fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..n).combinations_with_replacement(k).collect()
}

#[derive(Clone, Debug)]
pub struct CanonicalModuleOutcome {
    /// Minimal generator count of `omega_R = p<2>`; expected binom(n-1, t-1).
    pub generator_count: usize,
    pub expected_generator_count: u64,
    /// Degree of the minimal generators (expected t-1).
    pub min_generator_degree: Option<u32>,
    /// Order of `[omega_R]` in the class group.
    pub class_order: Option<usize>,
    pub expected_class_order: usize,
}

/// The graded canonical module `omega_R = p<2>` and its class data.
pub fn canonical_module(ctx: &HankelContext, cfg: &GbConfig) -> Result<CanonicalModuleOutcome> {
    if ctx.t < 2 {
        return Err(Error::InvalidParameter("canonical module route needs t >= 2".into()));
    }
    let omega = ctx.p_bracket(2)?;
    let by_degree = min_generators(&omega, Some(&ctx.ideal), cfg)?;
    let generator_count = by_degree.iter().map(|(_, c)| c).sum();
    let min_generator_degree = by_degree.first().map(|(d, _)| *d);
    let m = ctx.n - ctx.t + 2;
    let expected_class_order = if m % 2 == 1 { m } else { m / 2 };
    let order = class_order(ctx, &omega, m + 1, cfg)?;
    Ok(CanonicalModuleOutcome {
        generator_count,
        expected_generator_count: binomial(ctx.n - 1, ctx.t - 1),
        min_generator_degree,
        class_order: order,
        expected_class_order,
    })
}

/// Initial-ideal containment from the Cohen-Macaulay length argument: the
/// degrevlex initial ideal of `P_k + (prefix)` contains the prefix
/// variables, the (t-1)-st power of `(x_{t-1}..x_{n-k+1})`, and the t-th
/// power of `(x_t..x_n)`.
pub fn cm_initial_containment(ctx: &HankelContext, k: usize, cfg: &GbConfig) -> Result<bool> {
    use itertools::Itertools;
    let p_k = ctx.p_bracket(k)?;
    let j = p_k.plus_polys(&ctx.hsop_prefix())?;
    let gb = j.gb(MonomialOrder::DegRevLex, cfg)?;
    let lts: Vec<crate::algebra::Monomial> = gb
        .iter()
        .map(|g| g.leading_monomial(MonomialOrder::DegRevLex))
        .collect::<Result<_>>()?;
    let in_initial = |m: &crate::algebra::Monomial| lts.iter().any(|l| l.divides(m));

    let arity = ctx.ring.arity();
    let mut expected: Vec<crate::algebra::Monomial> = Vec::new();
    for i in 1..ctx.t.saturating_sub(1) {
        expected.push(crate::algebra::Monomial::var(arity, i - 1));
    }
    for i in ctx.n + 1..=ctx.n + ctx.t - 1 {
        expected.push(crate::algebra::Monomial::var(arity, i - 1));
    }
    let mid: Vec<usize> = (ctx.t - 1..=ctx.n - k + 1).collect();
    for combo in mid.iter().combinations_with_replacement(ctx.t - 1) {
        let mut exps = vec![0u16; arity];
        for &&v in &combo {
            exps[v - 1] += 1;
        }
        expected.push(crate::algebra::Monomial::new(exps));
    }
    let hi: Vec<usize> = (ctx.t..=ctx.n).collect();
    for combo in hi.iter().combinations_with_replacement(ctx.t) {
        let mut exps = vec![0u16; arity];
        for &&v in &combo {
            exps[v - 1] += 1;
        }
        expected.push(crate::algebra::Monomial::new(exps));
    }
    Ok(expected.iter().all(in_initial))
}
