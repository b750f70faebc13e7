//! Degree-by-degree exact linear algebra over the coefficient field:
//! graded pieces of ideals, minimal generator counts, socles.

use super::dimension::artinian_basis;
use super::ideal::{GbConfig, Ideal};
use crate::algebra::{Coeff, Monomial, MonomialOrder, Polynomial, Ring};
use crate::error::{Error, Result};
use std::collections::HashMap;

/// All monomials of exact degree `d` in `arity` variables, lex-descending.
pub fn monomials_of_degree(arity: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u16; arity];
    fn rec(i: usize, left: u32, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i + 1 == exps.len() {
            exps[i] = left as u16;
            out.push(Monomial::new(exps.clone()));
            exps[i] = 0;
            return;
        }
        for e in (0..=left.min(u16::MAX as u32)).rev() {
            exps[i] = e as u16;
            rec(i + 1, left - e, exps, out);
        }
        exps[i] = 0;
    }
    if arity == 0 {
        if d == 0 {
            out.push(Monomial::new(vec![]));
        }
        return out;
    }
    rec(0, d, &mut exps, &mut out);
    out
}

/// Exact row echelon over the field; returns the rank. Rows are dense
/// coefficient vectors.
pub fn rank(mut rows: Vec<Vec<Coeff>>) -> usize {
    let width = match rows.first() {
        Some(r) => r.len(),
        None => return 0,
    };
    let mut rank = 0;
    for col in 0..width {
        let mut pivot = None;
        for (r, row) in rows.iter().enumerate().skip(rank) {
            if !row[col].is_zero() {
                pivot = Some(r);
                break;
            }
        }
        let Some(p) = pivot else { continue };
        rows.swap(rank, p);
        let inv = rows[rank][col].inv();
        for c in col..width {
            rows[rank][c] = rows[rank][c].mul(&inv);
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..width {
                    let s = rows[rank][c].mul(&factor);
                    rows[r][c] = rows[r][c].sub(&s);
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn poly_to_row(f: &Polynomial, index: &HashMap<Monomial, usize>, width: usize) -> Vec<Coeff> {
    let zero = f.ring().field().zero();
    let mut row = vec![zero; width];
    for (m, c) in f.terms() {
        let i = *index.get(m).expect("monomial outside the degree basis");
        row[i] = c.clone();
    }
    row
}

/// Dimension of the degree-`d` graded piece of the ideal spanned by `gens`.
pub fn ideal_degree_piece_dim(ring: &Ring, gens: &[Polynomial], d: u32) -> Result<usize> {
    let basis = monomials_of_degree(ring.arity(), d);
    let index: HashMap<Monomial, usize> =
        basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        if !g.is_homogeneous() {
            return Err(Error::NonHomogeneous(g.to_string()));
        }
        let gd = g.degree();
        if gd > d {
            continue;
        }
        for m in monomials_of_degree(ring.arity(), d - gd) {
            let prod = g.mul_term(&m, &ring.field().one())?;
            rows.push(poly_to_row(&prod, &index, basis.len()));
        }
    }
    Ok(rank(rows))
}

/// Graded minimal generator counts of the image of `p` in `A/modulus`
/// (`modulus` empty for the ambient ring): for each generator degree `d`,
/// `dim (P+I)_d - dim (mP+I)_d`.
pub fn min_generators(
    p: &Ideal,
    modulus: Option<&Ideal>,
    _cfg: &GbConfig,
) -> Result<Vec<(u32, usize)>> {
    p.check_homogeneous()?;
    if let Some(i) = modulus {
        i.check_homogeneous()?;
    }
    let ring = p.ring();
    let mut degrees: Vec<u32> = p.gens().iter().map(|g| g.degree()).collect();
    degrees.sort_unstable();
    degrees.dedup();

    let mod_gens: Vec<Polynomial> = match modulus {
        Some(i) => i.gens().to_vec(),
        None => Vec::new(),
    };
    let mut upper = mod_gens.clone();
    upper.extend(p.gens().iter().cloned());

    let mut out = Vec::new();
    for d in degrees {
        let dim_with = ideal_degree_piece_dim(ring, &upper, d)?;
        // m*P + I in degree d
        let mut lower = mod_gens.clone();
        for g in p.gens() {
            for v in 0..ring.arity() {
                lower.push(g.mul(&Polynomial::var(ring, v))?);
            }
        }
        let dim_without = ideal_degree_piece_dim(ring, &lower, d)?;
        let count = dim_with - dim_without;
        if count > 0 {
            out.push((d, count));
        }
    }
    Ok(out)
}

/// Total number of minimal generators of `P` in `A/modulus`.
pub fn min_generator_count(p: &Ideal, modulus: Option<&Ideal>, cfg: &GbConfig) -> Result<usize> {
    Ok(min_generators(p, modulus, cfg)?.iter().map(|(_, c)| c).sum())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocleReport {
    /// (degree, socle dimension) for each degree with a nonzero socle piece.
    pub by_degree: Vec<(u32, usize)>,
    pub dim: usize,
    pub top_degree: u32,
}

/// Socle `(0 : m)` of the Artinian quotient `A/I`, degree by degree: a
/// standard-monomial vector lies in the socle iff every variable multiple
/// reduces to zero.
pub fn socle(i: &Ideal, cfg: &GbConfig) -> Result<SocleReport> {
    let ring = i.ring();
    let basis = artinian_basis(i, cfg)?;
    let mut degrees: Vec<u32> = basis.iter().map(|m| m.degree()).collect();
    degrees.sort_unstable();
    degrees.dedup();

    let mut by_degree = Vec::new();
    let mut total = 0usize;
    let mut top = 0u32;
    for &d in &degrees {
        let b_d: Vec<&Monomial> = basis.iter().filter(|m| m.degree() == d).collect();
        let b_next: Vec<Monomial> =
            basis.iter().filter(|m| m.degree() == d + 1).cloned().collect();
        let index: HashMap<Monomial, usize> =
            b_next.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
        // stack the multiplication maps by each variable
        let width = b_next.len().max(1);
        let mut rows: Vec<Vec<Coeff>> = Vec::new();
        let mut images: Vec<Vec<Polynomial>> = Vec::new();
        for &m in &b_d {
            let mut per_var = Vec::new();
            for v in 0..ring.arity() {
                let xm = Polynomial::monomial(ring, m.mul(&Monomial::var(ring.arity(), v))?, ring.field().one());
                per_var.push(i.normal_form(&xm, MonomialOrder::DegRevLex, cfg)?);
            }
            images.push(per_var);
        }
        // columns: basis elements; rows of the stacked matrix live in
        // (vars) x b_next space. kernel dim = |B_d| - rank(transpose).
        for v in 0..ring.arity() {
            for slot in 0..width {
                let mut row = Vec::with_capacity(b_d.len());
                for img in &images {
                    let f = &img[v];
                    let c = if b_next.is_empty() {
                        ring.field().zero()
                    } else {
                        let target = &b_next[slot];
                        f.terms()
                            .iter()
                            .find(|(m, _)| m == target)
                            .map(|(_, c)| c.clone())
                            .unwrap_or_else(|| ring.field().zero())
                    };
                    row.push(c);
                }
                rows.push(row);
            }
        }
        let _ = &index;
        let r = rank(rows);
        let kernel = b_d.len() - r;
        if kernel > 0 {
            by_degree.push((d, kernel));
            total += kernel;
            top = top.max(d);
        }
    }
    Ok(SocleReport { by_degree, dim: total, top_degree: top })
}
