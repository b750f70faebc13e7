//! Structural identity checks: the exterior-power minor identity, the
//! valuation product identity, generic specialization, minor-product
//! membership, the non-purity ingredient, and the socle-independence core.

use super::context::{minor_ideal, GeneralHankelContext, HankelContext};
use super::secant::SecantContext;
use crate::algebra::{Coeff, FieldTag, Monomial, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::groebner::{dimension_and_length, krull_dimension, rank, GbConfig, Ideal};
use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

/// Outcome of the exterior-power identity check
/// `[a|b][c|d] = [a|d][c|b]` modulo `I_t` of a generic matrix.
#[derive(Clone, Debug)]
pub struct MinorIdentityOutcome {
    pub symbolic_checked: usize,
    pub symbolic_failures: usize,
    pub numeric_samples: usize,
    pub numeric_failures: usize,
    pub seed: u64,
}

/// Generic `m x s` matrix of indeterminates `y_i_j` over `field`.
pub fn generic_matrix(field: FieldTag, m: usize, s: usize) -> Result<(Ring, PolyMatrixAlias)> {
    let mut names = Vec::with_capacity(m * s);
    for i in 1..=m {
        for j in 1..=s {
            names.push(format!("y{i}_{j}"));
        }
    }
    let ring = Ring::new(field, names)?;
    let entries = (0..m * s).map(|k| Polynomial::var(&ring, k)).collect();
    let matrix = crate::algebra::PolyMatrix::new(&ring, m, s, entries)?;
    Ok((ring, matrix))
}

type PolyMatrixAlias = crate::algebra::PolyMatrix;

/// Check the identity on every choice of `(t-1)`-subsets of rows and columns
/// of a generic `m x s` matrix modulo `I_t`, then replay it numerically on
/// seeded random rank-`(t-1)` matrices over GF(p).
pub fn minor_identity_check(
    m: usize,
    s: usize,
    t: usize,
    numeric_prime: u32,
    numeric_samples: usize,
    seed: u64,
    cfg: &GbConfig,
) -> Result<MinorIdentityOutcome> {
    if m > 5 || s > 5 || t > 4 {
        return Err(Error::InvalidParameter(
            "minor identity check budget: m, s <= 5 and t <= 4".into(),
        ));
    }
    if t < 2 || t > m.min(s) + 1 {
        return Err(Error::InvalidParameter(format!(
            "need 2 <= t <= min(m,s)+1 for (t-1)-minors, got t={t}, m={m}, s={s}"
        )));
    }
    let (_ring, matrix) = generic_matrix(FieldTag::Rational, m, s)?;
    let ideal = if t <= m.min(s) {
        minor_ideal(&matrix, t)?
    } else {
        // rank < t is automatic when t exceeds both dimensions
        Ideal::zero(matrix.ring())
    };

    let row_subsets: Vec<Vec<usize>> = (1..=m).combinations(t - 1).collect();
    let col_subsets: Vec<Vec<usize>> = (1..=s).combinations(t - 1).collect();
    let mut checked = 0usize;
    let mut failures = 0usize;
    for a in &row_subsets {
        for c in &row_subsets {
            for b in &col_subsets {
                for d in &col_subsets {
                    let lhs = matrix.minor(a, b)?.mul(&matrix.minor(c, d)?)?;
                    let rhs = matrix.minor(a, d)?.mul(&matrix.minor(c, b)?)?;
                    let diff = lhs.sub(&rhs)?;
                    checked += 1;
                    if !ideal.contains(&diff, cfg)? {
                        failures += 1;
                    }
                }
            }
        }
    }

    // numeric oracle: rank-(t-1) matrices as sums of outer products
    let field = FieldTag::prime(numeric_prime)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut numeric_failures = 0usize;
    for _ in 0..numeric_samples {
        let mut entries = vec![field.zero(); m * s];
        for _ in 0..t - 1 {
            let u: Vec<Coeff> =
                (0..m).map(|_| field.from_int(rng.gen_range(0..numeric_prime) as i64)).collect();
            let v: Vec<Coeff> =
                (0..s).map(|_| field.from_int(rng.gen_range(0..numeric_prime) as i64)).collect();
            for i in 0..m {
                for j in 0..s {
                    entries[i * s + j] = entries[i * s + j].add(&u[i].mul(&v[j]));
                }
            }
        }
        let det = |rows: &[usize], cols: &[usize]| -> Coeff {
            numeric_det(&entries, s, rows, cols, &field)
        };
        let mut ok = true;
        'outer: for a in &row_subsets {
            for c in &row_subsets {
                for b in &col_subsets {
                    for d in &col_subsets {
                        let lhs = det(a, b).mul(&det(c, d));
                        let rhs = det(a, d).mul(&det(c, b));
                        if lhs != rhs {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
            }
        }
        if !ok {
            numeric_failures += 1;
        }
    }

    Ok(MinorIdentityOutcome {
        symbolic_checked: checked,
        symbolic_failures: failures,
        numeric_samples,
        numeric_failures,
        seed,
    })
}

fn numeric_det(
    entries: &[Coeff],
    stride: usize,
    rows: &[usize],
    cols: &[usize],
    field: &FieldTag,
) -> Coeff {
    let k = rows.len();
    debug_assert_eq!(k, cols.len());
    // Laplace expansion over permutations; k <= 3 here
    let mut acc = field.zero();
    for perm in (0..k).permutations(k) {
        let mut prod = field.one();
        for (i, &pi) in perm.iter().enumerate() {
            prod = prod.mul(&entries[(rows[i] - 1) * stride + (cols[pi] - 1)]);
        }
        if permutation_sign(&perm) < 0 {
            prod = prod.neg();
        }
        acc = acc.add(&prod);
    }
    acc
}

fn permutation_sign(perm: &[usize]) -> i32 {
    let mut sign = 1;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// The valuation product identity
/// `[1..t-1 | i] * [2..t | n-t+2..n] = [1..t-1 | n-t+2..n] * [2..t | i]`
/// modulo `I` for a strictly increasing column tuple `i`.
pub fn val2_identity_check(
    ctx: &HankelContext,
    cols: &[usize],
    cfg: &GbConfig,
) -> Result<bool> {
    let t = ctx.t;
    let n = ctx.n;
    if cols.len() != t - 1
        || cols.windows(2).any(|w| w[0] >= w[1])
        || cols.iter().any(|&c| c < 1 || c > n)
    {
        return Err(Error::InvalidParameter(format!(
            "need {} strictly increasing columns within 1..={n}",
            t - 1
        )));
    }
    let rows_top: Vec<usize> = (1..=t - 1).collect();
    let rows_bot: Vec<usize> = (2..=t).collect();
    let tail_cols: Vec<usize> = (n - t + 2..=n).collect();
    let lhs = ctx
        .matrix
        .minor(&rows_top, cols)?
        .mul(&ctx.matrix.minor(&rows_bot, &tail_cols)?)?;
    let rhs = ctx
        .matrix
        .minor(&rows_top, &tail_cols)?
        .mul(&ctx.matrix.minor(&rows_bot, cols)?)?;
    ctx.ideal.contains(&lhs.sub(&rhs)?, cfg)
}

#[derive(Clone, Debug)]
pub struct GenericSpecializationOutcome {
    /// Substitution images of the generic maximal minors equal the Hankel
    /// generators as a set.
    pub substitution_matches: bool,
    /// Dimension of the generic determinantal ring `F[Y]/I_t(Y)`.
    pub generic_dim: usize,
    /// Dimension after adding the `(t-1)(n-1)` Hankel specialization forms.
    pub specialized_dim: usize,
    pub expected_dim: usize,
}

/// Specialize the generic `t x n` determinantal ring to the Hankel one:
/// substitute `Y_{ij} -> x_{i+j-1}` generator-wise and cut by the
/// differences `Y_{i,j+1} - Y_{i+1,j}`.
pub fn generic_specialization_check(
    t: usize,
    n: usize,
    field: FieldTag,
    cfg: &GbConfig,
) -> Result<GenericSpecializationOutcome> {
    let (yring, ymat) = generic_matrix(field, t, n)?;
    let ygens = minor_ideal(&ymat, t)?;

    // (a) generator-wise substitution onto the Hankel minors
    let hctx = HankelContext::new(t, n, field)?;
    let images: Vec<Polynomial> = {
        let mut imgs = Vec::with_capacity(t * n);
        for i in 1..=t {
            for j in 1..=n {
                imgs.push(hctx.x(i + j - 1));
            }
        }
        imgs
    };
    let mut mapped: Vec<String> = Vec::new();
    for g in ygens.gens() {
        mapped.push(g.substitute(&hctx.ring, &images)?.to_string());
    }
    mapped.sort();
    mapped.dedup();
    let mut hankel_gens: Vec<String> =
        hctx.ideal.gens().iter().map(|g| g.to_string()).collect();
    hankel_gens.sort();
    hankel_gens.dedup();
    let substitution_matches = mapped == hankel_gens;

    // (b) dimension drop under the specialization forms
    let generic_dim = krull_dimension(&ygens, cfg)?;
    let mut cut = ygens.gens().to_vec();
    for i in 1..t {
        for j in 1..n {
            // Y_{i, j+1} - Y_{i+1, j}
            let a = Polynomial::var(&yring, (i - 1) * n + j);
            let b = Polynomial::var(&yring, i * n + (j - 1));
            cut.push(a.sub(&b)?);
        }
    }
    let cut_ideal = Ideal::new(&yring, cut)?;
    let specialized_dim = krull_dimension(&cut_ideal, cfg)?;

    Ok(GenericSpecializationOutcome {
        substitution_matches,
        generic_dim,
        specialized_dim,
        expected_dim: 2 * t - 2,
    })
}

/// Result of one minor-product membership test `d1...dm in I^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MembershipOutcome {
    Holds,
    Fails,
    /// The degree hypothesis `m <= d`, `sum deg >= u*d` is not met.
    NotApplicable(String),
}

/// Test `delta_1 ... delta_m in I_u^d` for minors given by (rows, cols)
/// index pairs on a general Hankel context.
pub fn minor_product_membership(
    gctx: &GeneralHankelContext,
    minors: &[(Vec<usize>, Vec<usize>)],
    d: usize,
    cfg: &GbConfig,
) -> Result<MembershipOutcome> {
    let m = minors.len();
    if m > d {
        return Ok(MembershipOutcome::NotApplicable(format!("m={m} > d={d}")));
    }
    let mut product = Polynomial::one(&gctx.ring);
    let mut total_deg = 0usize;
    for (rows, cols) in minors {
        total_deg += rows.len();
        product = product.mul(&gctx.minor(rows, cols)?)?;
    }
    if total_deg < gctx.u * d {
        return Ok(MembershipOutcome::NotApplicable(format!(
            "sum of minor sizes {total_deg} < u*d = {}",
            gctx.u * d
        )));
    }
    let power = gctx.ideal.power(d)?;
    if power.contains(&product, cfg)? {
        Ok(MembershipOutcome::Holds)
    } else {
        Ok(MembershipOutcome::Fails)
    }
}

#[derive(Clone, Debug)]
pub struct NotPureOutcome {
    /// Substituting u_j -> v_j sends every h_i to the same power sum.
    pub symmetry_collapses: bool,
    /// Every h_i lies in the height-t ideal
    /// `(u1-v1, ..., u_{t-1}-v_{t-1}, v1^{n+t-2}+...+v_{t-1}^{n+t-2})`.
    pub membership_holds: bool,
    pub quotient_dim: usize,
    pub expected_dim: usize,
}

/// The ideal-theoretic ingredient of the non-purity argument for t >= 3.
pub fn not_pure_ingredient_check(
    t: usize,
    n: usize,
    field: FieldTag,
    cfg: &GbConfig,
) -> Result<NotPureOutcome> {
    if t < 3 {
        return Err(Error::InvalidParameter("non-purity ingredient needs t >= 3".into()));
    }
    let sctx = SecantContext::new(t, n, field)?;
    let m = t - 1;
    let ring = &sctx.ring;
    let mut gens: Vec<Polynomial> = Vec::new();
    for j in 0..m {
        gens.push(Polynomial::var(ring, j).sub(&Polynomial::var(ring, m + j))?);
    }
    let deg = (n + t - 2) as i64;
    let mut power_sum = Polynomial::zero(ring);
    for j in 0..m {
        power_sum = power_sum.add(&Polynomial::var(ring, m + j).pow(deg)?)?;
    }
    gens.push(power_sum.clone());
    let z = Ideal::new(ring, gens)?;

    let mut membership_holds = true;
    let mut symmetry_collapses = true;
    for h in &sctx.generators {
        if !z.contains(h, cfg)? {
            membership_holds = false;
        }
        if sctx.collapse_u_to_v(h)? != power_sum {
            symmetry_collapses = false;
        }
    }
    let quotient_dim = krull_dimension(&z, cfg)?;
    Ok(NotPureOutcome {
        symmetry_collapses,
        membership_holds,
        quotient_dim,
        expected_dim: t - 2,
    })
}

#[derive(Clone, Debug)]
pub struct SocleIndependenceOutcome {
    /// Number of coefficient indices (weakly increasing tuples).
    pub index_count: usize,
    pub injective: bool,
    /// Every diagonal weight matched `prod (multiplicity!)` and was nonzero
    /// in the field; off-multiset coefficients vanished.
    pub coefficient_pattern_ok: bool,
    /// Largest diagonal weight observed (must stay below t!).
    pub max_weight: u64,
}

/// The linear-algebra core of the tight-closure argument: products
/// `h_{i1} ... h_{i_{t-1}}`, reduced modulo `(u_j^n, v_j^n)`, stay linearly
/// independent, and the coefficient of the distinguished monomial for a
/// target tuple is the multiplicity-weighted lambda of that tuple.
pub fn socle_independence_check(
    t: usize,
    n: usize,
    field: FieldTag,
    _cfg: &GbConfig,
) -> Result<Option<SocleIndependenceOutcome>> {
    if t < 2 {
        return Err(Error::InvalidParameter("socle independence needs t >= 2".into()));
    }
    if let FieldTag::Prime(p) = field {
        if (p as usize) < t {
            // the argument needs every positive integer below t invertible
            return Ok(None);
        }
    }
    let sctx = SecantContext::new(t, n, field)?;
    let m = t - 1;
    let ring = &sctx.ring;
    if t - 1 > n - 1 {
        return Err(Error::InvalidParameter(format!(
            "no admissible socle indices for t={t}, n={n}"
        )));
    }
    let tuples: Vec<Vec<usize>> =
        (t - 1..=n - 1).combinations_with_replacement(t - 1).collect();

    // reduce a polynomial modulo the monomial ideal (u_j^n, v_j^n)
    let reduce = |f: &Polynomial| -> Polynomial {
        let kept: Vec<(Monomial, Coeff)> = f
            .terms()
            .iter()
            .filter(|(mon, _)| mon.exps().iter().all(|&e| (e as usize) < n))
            .cloned()
            .collect();
        Polynomial::from_terms(ring, kept)
    };

    let mut residues = Vec::with_capacity(tuples.len());
    for tuple in &tuples {
        let mut prod = Polynomial::one(ring);
        for &i in tuple {
            prod = prod.mul(&sctx.generators[i])?;
        }
        residues.push(reduce(&prod));
    }

    // injectivity of lambda -> sum lambda * residue: rank over the union of
    // surviving monomials
    let mut monomials: Vec<Monomial> = Vec::new();
    {
        let mut seen: HashMap<Monomial, ()> = HashMap::new();
        for r in &residues {
            for (mon, _) in r.terms() {
                if seen.insert(mon.clone(), ()).is_none() {
                    monomials.push(mon.clone());
                }
            }
        }
    }
    let width = monomials.len().max(1);
    let index: HashMap<Monomial, usize> =
        monomials.iter().cloned().enumerate().map(|(i, mo)| (mo, i)).collect();
    let mut rows = Vec::with_capacity(residues.len());
    for r in &residues {
        let mut row = vec![ring.field().zero(); width];
        for (mon, c) in r.terms() {
            row[index[mon]] = c.clone();
        }
        rows.push(row);
    }
    let injective = rank(rows) == tuples.len();

    // coefficient pattern: target monomial for tuple K is
    // prod_j u_j^{n+t-2-k_j} v_j^{k_j}
    let mut pattern_ok = true;
    let mut max_weight = 0u64;
    for (ti, target) in tuples.iter().enumerate() {
        let mut exps = vec![0u16; 2 * m];
        for (j, &k) in target.iter().enumerate() {
            exps[j] = (n + t - 2 - k) as u16;
            exps[m + j] = k as u16;
        }
        let mu = Monomial::new(exps);
        // expected weight: product of factorials of multiplicities
        let mut weight = 1u64;
        for (_, group) in &target.iter().chunk_by(|&&k| k) {
            let c = group.count() as u64;
            weight *= (1..=c).product::<u64>();
        }
        max_weight = max_weight.max(weight);
        for (si, r) in residues.iter().enumerate() {
            let coeff = r.coeff_of(&mu);
            let expected = if si == ti {
                ring.field().from_int(weight as i64)
            } else {
                ring.field().zero()
            };
            if coeff != expected {
                pattern_ok = false;
            }
        }
        if ring.field().from_int(weight as i64).is_zero() {
            pattern_ok = false;
        }
    }

    Ok(Some(SocleIndependenceOutcome {
        index_count: tuples.len(),
        injective,
        coefficient_pattern_ok: pattern_ok,
        max_weight,
    }))
}

/// Lengths of `F[y1..ys] / ((y1..yr)^{t-1} + (y2..ys)^t)` computed two ways:
/// from the staircase enumerator and from the Groebner length engine; both
/// must match `(s - r + 1) * binom(s + t - 2, t - 2)`.
#[derive(Clone, Debug)]
pub struct LengthLemmaOutcome {
    pub brute_force: u64,
    pub engine: u64,
    pub formula: u64,
}

pub fn length_lemma_check(
    t: usize,
    r: usize,
    s: usize,
    field: FieldTag,
    cfg: &GbConfig,
) -> Result<LengthLemmaOutcome> {
    if t < 2 || r < 1 || r > s {
        return Err(Error::InvalidParameter(format!(
            "length lemma needs t >= 2 and 1 <= r <= s, got t={t}, r={r}, s={s}"
        )));
    }
    let ring = Ring::numbered(field, "y", s);
    let mut gens: Vec<Polynomial> = Vec::new();
    let mut monomial_gens: Vec<Monomial> = Vec::new();
    let first: Vec<usize> = (0..r).collect();
    for combo in first.iter().combinations_with_replacement(t - 1) {
        let mut exps = vec![0u16; s];
        for &&v in &combo {
            exps[v] += 1;
        }
        monomial_gens.push(Monomial::new(exps));
    }
    if s > 1 {
        let rest: Vec<usize> = (1..s).collect();
        for combo in rest.iter().combinations_with_replacement(t) {
            let mut exps = vec![0u16; s];
            for &&v in &combo {
                exps[v] += 1;
            }
            monomial_gens.push(Monomial::new(exps));
        }
    }
    for mo in &monomial_gens {
        gens.push(Polynomial::monomial(&ring, mo.clone(), ring.field().one()));
    }
    let ideal = Ideal::new(&ring, gens)?;
    let rep = dimension_and_length(&ideal, cfg)?;
    let engine = rep
        .length
        .ok_or_else(|| Error::Internal("length lemma quotient is Artinian".into()))?;
    let brute = crate::groebner::brute_force_length(s, &monomial_gens)
        .ok_or_else(|| Error::Internal("length lemma box is finite".into()))?;
    let formula = (s - r + 1) as u64 * binomial_u(s + t - 2, t - 2);
    Ok(LengthLemmaOutcome { brute_force: brute, engine, formula })
}

fn binomial_u(n: usize, k: usize) -> u64 {
    super::binomial(n, k)
}
