//! Buchberger's algorithm with the Gebauer-Moeller pair update.
//!
//! The engine works on term lists sorted ascending in the active order (the
//! leading term is the last entry, so popping it is O(1)); public
//! `Polynomial` values are converted at the boundary. Pair selection is the
//! normal strategy: smallest lcm in the active order, ties broken by index,
//! which makes every run deterministic for a fixed generator sequence. The
//! reduced basis is unique regardless of generator order.
//!
//! For *homogeneous* input (in a possibly weighted grading that ignores
//! auxiliary variables), an optional degree cap discards every pair whose
//! lcm sits above the cap. Degrees never drop inside the homogeneous
//! Buchberger loop, so the survivors form a basis that is complete for all
//! ideal elements up to the cap.

use crate::algebra::{Coeff, Monomial, MonomialOrder, Polynomial, Ring};
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::collections::BTreeSet;

/// Mutable reduction-step counter with a hard limit.
#[derive(Debug)]
pub struct Steps {
    used: u64,
    limit: u64,
}

impl Steps {
    pub fn new(limit: u64) -> Steps {
        Steps { used: 0, limit }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExhausted { steps: self.used, budget: self.limit })
        } else {
            Ok(())
        }
    }
}

/// Degree cap for truncated runs: pairs whose lcm has grading degree above
/// `cap` are dropped. The grading ignores the first `skip_vars` variables,
/// matching the weight-zero auxiliary variable of the intersection trick.
/// Sound only for input homogeneous in that grading.
#[derive(Clone, Copy, Debug)]
pub struct Truncation {
    pub skip_vars: usize,
    pub cap: u32,
}

/// Engine-internal polynomial: nonzero terms sorted ascending by `order`.
#[derive(Clone, Debug)]
pub(crate) struct EPoly {
    pub terms: Vec<(Monomial, Coeff)>,
}

impl EPoly {
    pub fn from_poly(p: &Polynomial, order: MonomialOrder) -> EPoly {
        let mut terms: Vec<(Monomial, Coeff)> = p.terms().to_vec();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        EPoly { terms }
    }

    pub fn into_poly(self, ring: &Ring) -> Polynomial {
        Polynomial::from_terms(ring, self.terms)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lt(&self) -> &(Monomial, Coeff) {
        self.terms.last().expect("leading term of zero polynomial")
    }

    fn scale(&self, c: &Coeff) -> EPoly {
        EPoly { terms: self.terms.iter().map(|(m, k)| (*m, k.mul(c))).collect() }
    }

    fn mul_term(&self, m: &Monomial, c: &Coeff) -> Result<EPoly> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (t, k) in &self.terms {
            terms.push((t.mul(m)?, k.mul(c)));
        }
        Ok(EPoly { terms })
    }

    /// `self - other`, both sorted ascending in `order`.
    fn sub(&self, other: &EPoly, order: MonomialOrder) -> EPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (a, b) = (&self.terms, &other.terms);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0, b[j].1.neg()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a[i].1.sub(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for (m, c) in &b[j..] {
            out.push((*m, c.neg()));
        }
        EPoly { terms: out }
    }
}

#[inline]
fn find_reducer<'a>(basis: &'a [EPoly], lm: &Monomial) -> Option<&'a EPoly> {
    basis.iter().find(|g| g.lt().0.divides(lm))
}

/// Geobucket accumulator: term vectors in geometric size classes, so that
/// subtracting a short multiple costs amortized proportional to its length
/// rather than to the whole work polynomial.
struct Geobucket {
    order: MonomialOrder,
    buckets: Vec<Vec<(Monomial, Coeff)>>,
}

const BUCKET_BASE: usize = 4;

impl Geobucket {
    fn new(order: MonomialOrder, init: Vec<(Monomial, Coeff)>) -> Geobucket {
        let mut b = Geobucket { order, buckets: Vec::new() };
        b.push_vec(init);
        b
    }

    fn class_of(len: usize) -> usize {
        let mut cls = 0;
        let mut cap = BUCKET_BASE;
        while cap < len {
            cap *= BUCKET_BASE;
            cls += 1;
        }
        cls
    }

    /// Merge a sorted-ascending term vector into the structure, carrying
    /// upward while size classes overflow.
    fn push_vec(&mut self, v: Vec<(Monomial, Coeff)>) {
        if v.is_empty() {
            return;
        }
        let mut v = v;
        let mut cls = Self::class_of(v.len());
        loop {
            while self.buckets.len() <= cls {
                self.buckets.push(Vec::new());
            }
            if self.buckets[cls].is_empty() {
                self.buckets[cls] = v;
                return;
            }
            let old = std::mem::take(&mut self.buckets[cls]);
            v = merge_add(old, v, self.order);
            if v.is_empty() {
                return;
            }
            let new_cls = Self::class_of(v.len());
            cls = if new_cls <= cls { cls + 1 } else { new_cls };
        }
    }

    /// Remove and return the leading (monomial, coefficient), summing
    /// duplicates across buckets and skipping cancellations.
    fn pop_leading(&mut self) -> Option<(Monomial, Coeff)> {
        loop {
            let mut best: Option<Monomial> = None;
            for b in &self.buckets {
                if let Some((m, _)) = b.last() {
                    match &best {
                        None => best = Some(*m),
                        Some(bm) => {
                            if self.order.cmp(m, bm) == Ordering::Greater {
                                best = Some(*m);
                            }
                        }
                    }
                }
            }
            let target = best?;
            let mut coeff: Option<Coeff> = None;
            for b in &mut self.buckets {
                if let Some((m, _)) = b.last() {
                    if *m == target {
                        let (_, c) = b.pop().expect("nonempty");
                        coeff = Some(match coeff {
                            None => c,
                            Some(acc) => acc.add(&c),
                        });
                    }
                }
            }
            let c = coeff.expect("target came from a bucket tail");
            if !c.is_zero() {
                return Some((target, c));
            }
        }
    }

    /// Collapse into a single ascending term vector.
    fn assemble(mut self) -> Vec<(Monomial, Coeff)> {
        let mut acc: Vec<(Monomial, Coeff)> = Vec::new();
        for b in std::mem::take(&mut self.buckets) {
            if !b.is_empty() {
                acc = merge_add(acc, b, self.order);
            }
        }
        acc
    }
}

/// Merge two ascending term vectors, summing equal monomials and dropping
/// zeros.
fn merge_add(
    a: Vec<(Monomial, Coeff)>,
    b: Vec<(Monomial, Coeff)>,
    order: MonomialOrder,
) -> Vec<(Monomial, Coeff)> {
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match order.cmp(&a[i].0, &b[j].0) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                let c = a[i].1.add(&b[j].1);
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Subtract `c * m * g` from the bucket, with the understanding that the
/// leading term of the multiple has already been cancelled (popped).
fn subtract_tail_multiple(
    bucket: &mut Geobucket,
    g: &EPoly,
    m: &Monomial,
    c: &Coeff,
) -> Result<()> {
    let tail = &g.terms[..g.terms.len() - 1];
    if tail.is_empty() {
        return Ok(());
    }
    let mut v = Vec::with_capacity(tail.len());
    let neg = c.neg();
    for (t, k) in tail {
        v.push((t.mul(m)?, k.mul(&neg)));
    }
    bucket.push_vec(v);
    Ok(())
}

/// Reduce until the leading term is irreducible (or the polynomial dies);
/// tails are left alone.
pub(crate) fn reduce_top(
    f: EPoly,
    basis: &[EPoly],
    order: MonomialOrder,
    steps: &mut Steps,
) -> Result<EPoly> {
    let mut bucket = Geobucket::new(order, f.terms);
    while let Some((lm, lc)) = bucket.pop_leading() {
        match find_reducer(basis, &lm) {
            Some(g) => {
                steps.tick()?;
                let q = g.lt().0.div_into(&lm);
                let scale = lc.div(&g.lt().1);
                subtract_tail_multiple(&mut bucket, g, &q, &scale)?;
            }
            None => {
                let mut terms = bucket.assemble();
                terms.push((lm, lc));
                return Ok(EPoly { terms });
            }
        }
    }
    Ok(EPoly { terms: Vec::new() })
}

/// Full normal form of `f` against `basis` (all monic): every term of the
/// result is reducible by no basis leading term.
pub(crate) fn reduce_full(
    f: EPoly,
    basis: &[EPoly],
    order: MonomialOrder,
    steps: &mut Steps,
) -> Result<EPoly> {
    let mut bucket = Geobucket::new(order, f.terms);
    let mut out: Vec<(Monomial, Coeff)> = Vec::new();
    while let Some((lm, lc)) = bucket.pop_leading() {
        match find_reducer(basis, &lm) {
            Some(g) => {
                steps.tick()?;
                let q = g.lt().0.div_into(&lm);
                let scale = lc.div(&g.lt().1);
                subtract_tail_multiple(&mut bucket, g, &q, &scale)?;
            }
            None => {
                out.push((lm, lc));
            }
        }
    }
    out.reverse();
    Ok(EPoly { terms: out })
}

fn s_poly(f: &EPoly, g: &EPoly, order: MonomialOrder) -> Result<EPoly> {
    let (fm, fc) = f.lt();
    let (gm, gc) = g.lt();
    let lcm = fm.lcm(gm);
    let uf = fm.div_into(&lcm);
    let ug = gm.div_into(&lcm);
    let a = f.mul_term(&uf, &fc.inv())?;
    let b = g.mul_term(&ug, &gc.inv())?;
    Ok(a.sub(&b, order))
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct Pair {
    key: Vec<u32>, // sort key of the lcm: smallest first = normal strategy
    i: usize,
    j: usize,
}

/// Reduced Groebner basis of the given generators. Output polynomials are
/// monic, mutually reduced, and sorted ascending by leading term.
pub(crate) fn buchberger(
    gens: &[Polynomial],
    ring: &Ring,
    order: MonomialOrder,
    truncation: Option<Truncation>,
    steps: &mut Steps,
) -> Result<Vec<EPoly>> {
    buchberger_mode(gens, ring, order, truncation, true, steps)
}

/// Like `buchberger`, but with a switch between the fully reduced output and
/// a cheap top-reduced one. Tail reduction densifies high-degree elements,
/// so the truncated generating-set paths ask for `reduced = false`: leading
/// terms (hence completeness up to the cap) are identical either way, only
/// the tails differ.
pub(crate) fn buchberger_mode(
    gens: &[Polynomial],
    ring: &Ring,
    order: MonomialOrder,
    truncation: Option<Truncation>,
    reduced: bool,
    steps: &mut Steps,
) -> Result<Vec<EPoly>> {
    let mut basis: Vec<EPoly> = Vec::new();
    let mut pairs: BTreeSet<Pair> = BTreeSet::new();

    let install = |basis: &mut Vec<EPoly>,
                   pairs: &mut BTreeSet<Pair>,
                   red: EPoly,
                   steps: &mut Steps|
     -> Result<()> {
        let red = if reduced {
            reduce_full(red, basis, order, steps)?
        } else {
            reduce_top(red, basis, order, steps)?
        };
        if !red.is_zero() {
            let monic = red.scale(&red.lt().1.inv());
            update(basis, pairs, monic, order, truncation);
        }
        Ok(())
    };

    for g in gens {
        if g.is_zero() {
            continue;
        }
        install(&mut basis, &mut pairs, EPoly::from_poly(g, order), steps)?;
    }

    let trace = std::env::var_os("HANKEL_GB_TRACE").is_some();
    let mut popped = 0u64;
    while let Some(pair) = pairs.pop_first() {
        popped += 1;
        let s = s_poly(&basis[pair.i], &basis[pair.j], order)?;
        if trace {
            let max_terms = basis.iter().map(|b| b.terms.len()).max().unwrap_or(0);
            eprintln!(
                "gb: pairs={} popped={} basis={} max_terms={} s_terms={} lcm_key={:?}",
                pairs.len(),
                popped,
                basis.len(),
                max_terms,
                s.terms.len(),
                &pair.key[..pair.key.len().min(3)]
            );
        }
        let red = reduce_top(s, &basis, order, steps)?;
        install(&mut basis, &mut pairs, red, steps)?;
    }

    // minimalize: drop elements whose LT is divisible by another LT
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (mi, _) = basis[i].lt();
            let (mj, _) = basis[j].lt();
            if mj.divides(mi) && (mi != mj || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<EPoly> =
        basis.into_iter().zip(keep).filter(|(_, k)| *k).map(|(g, _)| g).collect();
    minimal.sort_by(|a, b| order.cmp(&a.lt().0, &b.lt().0));

    if reduced {
        // interreduce tails to a fixpoint; heads stay fixed: LTs are minimal
        loop {
            let mut changed = false;
            for i in 0..minimal.len() {
                let others: Vec<EPoly> = minimal
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, g)| g.clone())
                    .collect();
                let red = reduce_full(minimal[i].clone(), &others, order, steps)?;
                debug_assert!(!red.is_zero());
                if red.terms != minimal[i].terms {
                    minimal[i] = red.scale(&red.lt().1.inv());
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
    }
    let _ = ring;
    Ok(minimal)
}

/// Gebauer-Moeller installation of a new basis element.
fn update(
    basis: &mut Vec<EPoly>,
    pairs: &mut BTreeSet<Pair>,
    h: EPoly,
    order: MonomialOrder,
    truncation: Option<Truncation>,
) {
    let t = basis.len();
    let lt_h = h.lt().0;

    let lcms: Vec<Monomial> = basis.iter().map(|g| g.lt().0.lcm(&lt_h)).collect();

    // M criterion: drop (i,t) when some lcm(j,t) properly divides lcm(i,t)
    let mut alive: Vec<bool> = vec![true; t];
    for i in 0..t {
        for j in 0..t {
            if i != j && lcms[j].divides(&lcms[i]) && lcms[j] != lcms[i] {
                alive[i] = false;
                break;
            }
        }
    }

    // F criterion: among equal lcms keep the lowest index; if any member of a
    // group is a coprime pair, the whole group goes
    for i in 0..t {
        if !alive[i] {
            continue;
        }
        for j in 0..t {
            if j == i || !alive[j] || lcms[i] != lcms[j] {
                continue;
            }
            if basis[j].lt().0.coprime(&lt_h) {
                alive[i] = false;
                break;
            }
            if j < i {
                alive[i] = false;
                break;
            }
        }
    }

    // Buchberger's first criterion on the survivors
    for i in 0..t {
        if alive[i] && basis[i].lt().0.coprime(&lt_h) {
            alive[i] = false;
        }
    }

    // degree cap for truncated homogeneous runs
    if let Some(tr) = truncation {
        for i in 0..t {
            if alive[i] && lcms[i].degree_skipping(tr.skip_vars) > tr.cap {
                alive[i] = false;
            }
        }
    }

    // B criterion on the old queue
    pairs.retain(|p| {
        let lcm_ij = basis[p.i].lt().0.lcm(&basis[p.j].lt().0);
        !(lt_h.divides(&lcm_ij) && lcms[p.i] != lcm_ij && lcms[p.j] != lcm_ij)
    });

    for (i, ok) in alive.iter().enumerate() {
        if *ok {
            pairs.insert(Pair { key: order.sort_key(&lcms[i]), i, j: t });
        }
    }
    basis.push(h);
}

/// Test-support: verify the defining property of a Groebner basis by reducing
/// every S-polynomial to zero.
#[cfg(test)]
pub(crate) fn all_s_pairs_reduce(
    basis: &[EPoly],
    order: MonomialOrder,
    steps: &mut Steps,
) -> Result<bool> {
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let s = s_poly(&basis[i], &basis[j], order)?;
            if !reduce_full(s, basis, order, steps)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
