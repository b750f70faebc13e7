//! Exact multivariate polynomials with canonical term storage.
//!
//! Terms are kept sorted in descending lex order of the ring's variables, so
//! two polynomials are equal iff their term vectors are equal, and the text
//! form is canonical: `c*x1^a1*...*xk^ak` chunks joined by ` + ` / ` - `,
//! exponent suffix omitted when 1, unit coefficients omitted. Parsing accepts
//! everything `Display` produces and round-trips exactly.

use super::coeff::Coeff;
use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::ring::Ring;
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

#[derive(Clone, Debug, Eq)]
pub struct Polynomial {
    ring: Ring,
    /// Nonzero terms, sorted descending by lex on the ring's variable order.
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Polynomial {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Ring) -> Polynomial {
        Polynomial::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(Monomial::one(ring.arity()), c)] }
    }

    pub fn from_int(ring: &Ring, n: i64) -> Polynomial {
        Polynomial::constant(ring, ring.field().from_int(n))
    }

    pub fn var(ring: &Ring, index: usize) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.arity(), index), ring.field().one())],
        }
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        debug_assert_eq!(m.arity(), ring.arity());
        Polynomial { ring: ring.clone(), terms: vec![(m, c)] }
    }

    /// Build from arbitrary (monomial, coeff) pairs: merges duplicates, drops
    /// zeros, sorts canonically.
    pub fn from_terms(ring: &Ring, terms: Vec<(Monomial, Coeff)>) -> Polynomial {
        let mut map: HashMap<Monomial, Coeff> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.arity(), ring.arity());
            match map.entry(m) {
                std::collections::hash_map::Entry::Occupied(mut e) => {
                    let s = e.get().add(&c);
                    if s.is_zero() {
                        e.remove();
                    } else {
                        e.insert(s);
                    }
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    if !c.is_zero() {
                        e.insert(c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, Coeff)> = map.into_iter().collect();
        terms.sort_by(|a, b| MonomialOrder::Lex.cmp(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    pub fn coeff_of(&self, m: &Monomial) -> Coeff {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.ring.field().zero())
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if !self.ring.same(&other.ring) {
            return Err(self.ring.mismatch_error(&other.ring));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        // merge two lex-sorted term lists
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match MonomialOrder::Lex.cmp(&self.terms[i].0, &other.terms[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = self.terms[i].1.add(&other.terms[j].1);
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Polynomial { ring: self.ring.clone(), terms: out })
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut acc: HashMap<Monomial, Coeff> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2)?;
                let c = c1.mul(c2);
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = e.get().add(&c);
                        if s.is_zero() {
                            e.remove();
                        } else {
                            e.insert(s);
                        }
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        if !c.is_zero() {
                            e.insert(c);
                        }
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, Coeff)> = acc.into_iter().collect();
        terms.sort_by(|a, b| MonomialOrder::Lex.cmp(&b.0, &a.0));
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k.mul(c))).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Result<Polynomial> {
        if c.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (t, k) in &self.terms {
            terms.push((t.mul(m)?, k.mul(c)));
        }
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn pow(&self, k: i64) -> Result<Polynomial> {
        if k < 0 {
            return Err(Error::NegativePower(k));
        }
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// q-th power over GF(p) with q a power of p: the Frobenius twist acts
    /// termwise, so no expansion is needed.
    pub fn frobenius_pow(&self, q: u64) -> Result<Polynomial> {
        let p = self.ring.field().characteristic();
        if p == 0 || !is_p_power(q, p) {
            return Err(Error::BadFrobeniusPower { char_p: p, q });
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.pow(q as u32)?, c.pow(q)));
        }
        // exponent maps are injective and order preserving: still sorted
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    /// The leading (monomial, coefficient) with respect to `order`.
    pub fn leading_term(&self, order: MonomialOrder) -> Result<(Monomial, Coeff)> {
        if self.terms.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        let mut best = &self.terms[0];
        for t in &self.terms[1..] {
            if order.cmp(&t.0, &best.0) == std::cmp::Ordering::Greater {
                best = t;
            }
        }
        Ok(best.clone())
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Result<Monomial> {
        Ok(self.leading_term(order)?.0)
    }

    /// Divide by the leading coefficient in `order`.
    pub fn monic(&self, order: MonomialOrder) -> Result<Polynomial> {
        let (_, c) = self.leading_term(order)?;
        Ok(self.scale(&c.inv()))
    }

    /// Substitute `images[i]` for variable `i`; images live in `target`.
    pub fn substitute(&self, target: &Ring, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.arity() {
            return Err(Error::InvalidParameter(format!(
                "substitution needs {} images, got {}",
                self.ring.arity(),
                images.len()
            )));
        }
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[i].pow(e as i64)?)?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Reinterpret in `target` via variable-name matching; fails if a present
    /// variable is missing from `target`.
    pub fn map_to_ring(&self, target: &Ring) -> Result<Polynomial> {
        let index: Vec<Option<usize>> = self
            .ring
            .var_names()
            .iter()
            .map(|v| target.var_index(v))
            .collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps = vec![0u16; target.arity()];
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    match index[i] {
                        Some(j) => exps[j] = e,
                        None => {
                            return Err(Error::InvalidParameter(format!(
                                "variable {} not present in {}",
                                self.ring.var_name(i),
                                target
                            )))
                        }
                    }
                }
            }
            let c = match (&self.ring.field(), &target.field()) {
                (a, b) if a == b => c.clone(),
                _ => {
                    return Err(Error::InvalidParameter(
                        "map_to_ring cannot change the coefficient field".into(),
                    ))
                }
            };
            terms.push((Monomial::new(exps), c));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Evaluate at a point given by field elements, one per variable.
    pub fn eval(&self, point: &[Coeff]) -> Coeff {
        let mut acc = self.ring.field().zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    v = v.mul(&point[i].pow(e as u64));
                }
            }
            acc = acc.add(&v);
        }
        acc
    }
}

fn is_p_power(q: u64, p: u64) -> bool {
    if q == 0 {
        return false;
    }
    let mut q = q;
    while q % p == 0 {
        q /= p;
    }
    q == 1
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same(&other.ring) && self.terms == other.terms
    }
}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

// ---------------------------------------------------------------------------
// canonical text form
// ---------------------------------------------------------------------------

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (sign_neg, mag) = if c.is_negative() { (true, c.abs()) } else { (false, c.clone()) };
            if i == 0 {
                if sign_neg {
                    write!(f, "-")?;
                }
            } else if sign_neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                let mut lead = true;
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                    lead = false;
                }
                for (idx, &e) in m.exps().iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if !lead {
                        write!(f, "*")?;
                    }
                    lead = false;
                    write!(f, "{}", self.ring.var_name(idx))?;
                    if e > 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Parse the canonical text form (and modest variations: optional spaces
/// around `+`/`-`, `1*x` style unit coefficients).
pub fn parse_polynomial(ring: &Ring, input: &str) -> Result<Polynomial> {
    let s = input.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial text".into()));
    }
    if s == "0" {
        return Ok(Polynomial::zero(ring));
    }
    let mut terms: Vec<(Monomial, Coeff)> = Vec::new();
    let mut rest = s;
    let mut sign_neg = false;
    if let Some(r) = rest.strip_prefix('-') {
        sign_neg = true;
        rest = r.trim_start();
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r.trim_start();
    }
    loop {
        let (chunk, tail, next_neg) = split_term(rest);
        let (m, c) = parse_term(ring, chunk.trim())?;
        let c = if sign_neg { c.neg() } else { c };
        terms.push((m, c));
        match tail {
            None => break,
            Some(t) => {
                rest = t.trim_start();
                sign_neg = next_neg;
            }
        }
    }
    Ok(Polynomial::from_terms(ring, terms))
}

/// Split off the first term chunk at a top-level `+` or `-` separator.
fn split_term(s: &str) -> (&str, Option<&str>, bool) {
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        if (b == b'+' || b == b'-') && i > 0 {
            // `^` or `/` cannot precede a separator in canonical text; any
            // + or - after the first byte separates terms
            let prev = bytes[i - 1];
            if prev != b'^' && prev != b'*' && prev != b'/' {
                return (&s[..i], Some(&s[i + 1..]), b == b'-');
            }
        }
        i += 1;
    }
    (s, None, false)
}

fn parse_term(ring: &Ring, chunk: &str) -> Result<(Monomial, Coeff)> {
    if chunk.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let mut coeff = ring.field().one();
    let mut exps = vec![0u16; ring.arity()];
    for factor in chunk.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in `{chunk}`")));
        }
        let first = factor.chars().next().unwrap();
        if first.is_ascii_digit() {
            coeff = coeff.mul(&ring.field().parse(factor)?);
            continue;
        }
        let (name, exp) = match factor.find('^') {
            Some(pos) => {
                let e: u32 = factor[pos + 1..]
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?;
                (factor[..pos].trim(), e)
            }
            None => (factor, 1),
        };
        let idx = ring
            .var_index(name)
            .ok_or_else(|| Error::Parse(format!("unknown variable `{name}` in {ring}")))?;
        let e = exps[idx] as u32 + exp;
        if e > u16::MAX as u32 {
            return Err(Error::ExponentOverflow);
        }
        exps[idx] = e as u16;
    }
    Ok((Monomial::new(exps), coeff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coeff::FieldTag;

    fn ring() -> Ring {
        Ring::numbered(FieldTag::Rational, "x", 4)
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        parse_polynomial(r, s).unwrap()
    }

    #[test]
    fn identity_multiplication() {
        let r = ring();
        let f = p(&r, "x1*x3 - x2^2");
        assert_eq!(f.mul(&Polynomial::one(&r)).unwrap(), f);
    }

    #[test]
    fn frobenius_in_char_two() {
        let r = Ring::numbered(FieldTag::prime(2).unwrap(), "x", 2);
        let f = p(&r, "x1 + x2");
        let sq = f.pow(2).unwrap();
        assert_eq!(sq, p(&r, "x1^2 + x2^2"));
        assert_eq!(sq, f.frobenius_pow(2).unwrap());
    }

    #[test]
    fn square_of_hankel_minor() {
        // direct expansion: (x1x3 - x2^2)^2 = x1^2x3^2 - 2x1x2^2x3 + x2^4
        let r = ring();
        let f = p(&r, "x1*x3 - x2^2");
        assert_eq!(f.pow(2).unwrap(), p(&r, "x1^2*x3^2 - 2*x1*x2^2*x3 + x2^4"));
    }

    #[test]
    fn leading_terms_per_order() {
        let r = ring();
        let f = p(&r, "x1*x3 - x2^2");
        let (m, _) = f.leading_term(MonomialOrder::Lex).unwrap();
        assert_eq!(m, Monomial::new(vec![1, 0, 1, 0]));
        let (m, _) = f.leading_term(MonomialOrder::DegRevLex).unwrap();
        assert_eq!(m, Monomial::new(vec![0, 2, 0, 0]));
        // product of the two Hankel minors: lex leading term x1*x2*x3*x4
        let g = p(&r, "x2*x4 - x3^2");
        let fg = f.mul(&g).unwrap();
        let (m, _) = fg.leading_term(MonomialOrder::Lex).unwrap();
        assert_eq!(m, Monomial::new(vec![1, 1, 1, 1]));
        assert!(Polynomial::zero(&r).leading_term(MonomialOrder::Lex).is_err());
    }

    #[test]
    fn display_round_trip() {
        let r = ring();
        for s in [
            "x1*x3 - x2^2",
            "-x1 + 1/2*x2 - 3",
            "x1^2*x3^2 - 2*x1*x2^2*x3 + x2^4",
            "0",
            "7",
        ] {
            let f = p(&r, s);
            assert_eq!(p(&r, &f.to_string()), f, "round trip of `{s}`");
        }
        assert_eq!(p(&r, "x1*x3 - x2^2").to_string(), "x1*x3 - x2^2");
    }

    #[test]
    fn substitution_veronese() {
        let r3 = Ring::numbered(FieldTag::Rational, "x", 3);
        let uv = Ring::rational(&["u", "v"]);
        let f = p(&r3, "x1*x3 - x2^2");
        let images = vec![p(&uv, "u^2"), p(&uv, "u*v"), p(&uv, "v^2")];
        assert!(f.substitute(&uv, &images).unwrap().is_zero());
    }
}
