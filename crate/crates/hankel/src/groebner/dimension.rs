//! Krull dimension, lengths, Hilbert functions, and radical membership,
//! all through the degrevlex initial ideal.

use super::ideal::{GbConfig, Ideal};
use crate::algebra::{Monomial, MonomialOrder, Polynomial};
use crate::error::{Error, Result};

/// Hard cap for the independent-set search (2^arity subsets).
const DIMENSION_ARITY_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionReport {
    pub krull_dim: usize,
    /// Vector-space length of the quotient; `None` when infinite.
    pub length: Option<u64>,
    /// Degree, count of standard monomials (complete for finite length,
    /// a prefix up to max generator degree + 2 otherwise).
    pub hilbert: Vec<(u32, u64)>,
}

/// Minimal monomial generators of the initial ideal in `order`: the leading
/// terms of the reduced basis.
pub fn initial_ideal(i: &Ideal, order: MonomialOrder, cfg: &GbConfig) -> Result<Vec<Monomial>> {
    let gb = i.gb(order, cfg)?;
    gb.iter().map(|p| p.leading_monomial(order)).collect()
}

/// Krull dimension of `A/I` for homogeneous `I`: the maximum size of a set S
/// of variables such that no initial-ideal generator is supported inside S.
pub fn krull_dimension(i: &Ideal, cfg: &GbConfig) -> Result<usize> {
    i.check_homogeneous()?;
    let lts = initial_ideal(i, MonomialOrder::DegRevLex, cfg)?;
    dimension_of_monomials(i.ring().arity(), &lts)
}

pub(crate) fn dimension_of_monomials(arity: usize, lts: &[Monomial]) -> Result<usize> {
    if lts.iter().any(|m| m.is_one()) {
        // unit ideal: the quotient is the zero ring
        return Ok(0);
    }
    if arity > DIMENSION_ARITY_CAP {
        return Err(Error::InvalidParameter(format!(
            "dimension search capped at {DIMENSION_ARITY_CAP} variables, ring has {arity}"
        )));
    }
    let supports: Vec<u32> = lts
        .iter()
        .map(|m| m.support().fold(0u32, |acc, v| acc | (1 << v)))
        .collect();
    let mut best = 0usize;
    for set in 0u32..(1u32 << arity) {
        let size = set.count_ones() as usize;
        if size <= best {
            continue;
        }
        if supports.iter().all(|s| s & !set != 0) {
            best = size;
        }
    }
    Ok(best)
}

/// Standard monomials (those outside the initial ideal) of an Artinian
/// quotient, enumerated over the finite exponent box cut out by the pure
/// powers in the initial ideal.
fn standard_monomials(arity: usize, lts: &[Monomial]) -> Option<Vec<Monomial>> {
    if lts.iter().any(|m| m.is_one()) {
        return Some(Vec::new());
    }
    let mut bound = vec![None::<u16>; arity];
    for m in lts {
        let support: Vec<usize> = m.support().collect();
        if support.len() == 1 {
            let v = support[0];
            let e = m.exp(v);
            bound[v] = Some(bound[v].map_or(e, |b: u16| b.min(e)));
        }
    }
    let bounds: Option<Vec<u16>> = bound.into_iter().collect();
    let bounds = bounds?; // a variable with no pure power: not Artinian
    let mut out = Vec::new();
    let mut exps = vec![0u16; arity];
    enumerate_box(0, &mut exps, &bounds, lts, &mut out);
    Some(out)
}

fn enumerate_box(
    i: usize,
    exps: &mut Vec<u16>,
    bounds: &[u16],
    lts: &[Monomial],
    out: &mut Vec<Monomial>,
) {
    if i == bounds.len() {
        let m = Monomial::new(exps.clone());
        if !lts.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
        return;
    }
    for e in 0..bounds[i] {
        exps[i] = e;
        enumerate_box(i + 1, exps, bounds, lts, out);
    }
    exps[i] = 0;
}

/// Count standard monomials of exact degree `d` (works in any dimension).
fn count_standard_of_degree(arity: usize, lts: &[Monomial], d: u32) -> u64 {
    let mut exps = vec![0u16; arity];
    count_degree_rec(0, d, &mut exps, lts)
}

fn count_degree_rec(i: usize, remaining: u32, exps: &mut Vec<u16>, lts: &[Monomial]) -> u64 {
    if i + 1 == exps.len() {
        if remaining > u16::MAX as u32 {
            return 0;
        }
        exps[i] = remaining as u16;
        let m = Monomial::new(exps.clone());
        exps[i] = 0;
        return if lts.iter().any(|g| g.divides(&m)) { 0 } else { 1 };
    }
    let mut total = 0;
    for e in 0..=remaining.min(u16::MAX as u32) {
        exps[i] = e as u16;
        total += count_degree_rec(i + 1, remaining - e, exps, lts);
    }
    exps[i] = 0;
    total
}

/// Dimension, length, and Hilbert data of `A/I` for homogeneous `I`.
pub fn dimension_and_length(i: &Ideal, cfg: &GbConfig) -> Result<DimensionReport> {
    i.check_homogeneous()?;
    let arity = i.ring().arity();
    let lts = initial_ideal(i, MonomialOrder::DegRevLex, cfg)?;
    let krull_dim = dimension_of_monomials(arity, &lts)?;
    if krull_dim == 0 {
        let std = standard_monomials(arity, &lts).ok_or_else(|| {
            Error::Internal("dimension zero but some variable has no pure power".into())
        })?;
        let mut hilbert: Vec<(u32, u64)> = Vec::new();
        for m in &std {
            let d = m.degree();
            match hilbert.iter_mut().find(|(deg, _)| *deg == d) {
                Some((_, c)) => *c += 1,
                None => hilbert.push((d, 1)),
            }
        }
        hilbert.sort_by_key(|(d, _)| *d);
        Ok(DimensionReport { krull_dim, length: Some(std.len() as u64), hilbert })
    } else {
        let dmax = i.gens().iter().map(|g| g.degree()).max().unwrap_or(0) + 2;
        let hilbert = (0..=dmax)
            .map(|d| (d, count_standard_of_degree(arity, &lts, d)))
            .collect();
        Ok(DimensionReport { krull_dim, length: None, hilbert })
    }
}

/// Standard monomials of an Artinian quotient, exposed for socle and length
/// work. Errors when the quotient is not finite dimensional.
pub fn artinian_basis(i: &Ideal, cfg: &GbConfig) -> Result<Vec<Monomial>> {
    i.check_homogeneous()?;
    let lts = initial_ideal(i, MonomialOrder::DegRevLex, cfg)?;
    standard_monomials(i.ring().arity(), &lts)
        .ok_or_else(|| Error::InvalidParameter("quotient is not Artinian".into()))
}

/// Radical membership via the Rabinowitsch trick: `f` lies in the radical of
/// `I` iff `1` belongs to `I + (1 - z f)` in one extra variable.
pub fn radical_membership(f: &Polynomial, i: &Ideal, cfg: &GbConfig) -> Result<bool> {
    let ring = i.ring();
    if !f.ring().same(ring) {
        return Err(ring.mismatch_error(f.ring()));
    }
    if f.is_zero() {
        // 0 is in every radical
        return Ok(true);
    }
    let mut z = "z".to_string();
    if ring.var_index(&z).is_some() {
        let mut k = 0;
        loop {
            z = format!("z_{k}");
            if ring.var_index(&z).is_none() {
                break;
            }
            k += 1;
        }
    }
    let ext = ring.extend_front(&[&z])?;
    let zf = Polynomial::var(&ext, 0).mul(&f.map_to_ring(&ext)?)?;
    let mut gens: Vec<Polynomial> = i
        .gens()
        .iter()
        .map(|g| g.map_to_ring(&ext))
        .collect::<Result<_>>()?;
    gens.push(Polynomial::one(&ext).sub(&zf)?);
    let j = Ideal::new(&ext, gens)?;
    let gb = j.gb(MonomialOrder::DegRevLex, cfg)?;
    Ok(gb.len() == 1 && gb[0] == Polynomial::one(&ext))
}

/// Brute-force standard-monomial count for a *monomial* ideal inside the box
/// bounded by its pure powers; an independent oracle for length computations.
pub fn brute_force_length(arity: usize, monomial_gens: &[Monomial]) -> Option<u64> {
    standard_monomials(arity, monomial_gens).map(|v| v.len() as u64)
}
