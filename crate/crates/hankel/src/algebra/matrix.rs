//! Matrices of polynomials and exact determinants.

use super::poly::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};
use std::collections::HashMap;

/// Default cap on determinant size; entries here are symbolic and Laplace
/// over column subsets is exponential in the size.
pub const DET_SIZE_CAP: usize = 8;

/// A rows x cols matrix of polynomials over one ring.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(ring: &Ring, rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<PolyMatrix> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidParameter(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        for e in &entries {
            if !e.ring().same(ring) {
                return Err(ring.mismatch_error(e.ring()));
            }
        }
        Ok(PolyMatrix { ring: ring.clone(), rows, cols, entries })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// 1-based entry access, matching the classical minor notation.
    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        assert!(i >= 1 && i <= self.rows && j >= 1 && j <= self.cols);
        &self.entries[(i - 1) * self.cols + (j - 1)]
    }

    /// Submatrix with the given 1-based row and column indices.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<PolyMatrix> {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                if i < 1 || i > self.rows || j < 1 || j > self.cols {
                    return Err(Error::InvalidParameter(format!(
                        "index ({i},{j}) outside {}x{} matrix",
                        self.rows, self.cols
                    )));
                }
                entries.push(self.entry(i, j).clone());
            }
        }
        PolyMatrix::new(&self.ring, rows.len(), cols.len(), entries)
    }

    /// Determinant of the submatrix with rows `a` and columns `b` (1-based),
    /// the bracket `[a1 .. ar | b1 .. br]`.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<Polynomial> {
        if rows.len() != cols.len() {
            return Err(Error::NonSquareMatrix { rows: rows.len(), cols: cols.len() });
        }
        self.submatrix(rows, cols)?.det()
    }

    /// Exact determinant by Laplace expansion memoized over column subsets:
    /// `D[S]` is the determinant of the first `|S|` rows on columns `S`, and
    /// each level expands along the next row.
    pub fn det(&self) -> Result<Polynomial> {
        self.det_capped(DET_SIZE_CAP)
    }

    pub fn det_capped(&self, cap: usize) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::NonSquareMatrix { rows: self.rows, cols: self.cols });
        }
        let k = self.rows;
        if k > cap {
            return Err(Error::MatrixTooLarge { size: k, cap });
        }
        if k == 0 {
            return Ok(Polynomial::one(&self.ring));
        }
        let mut level: HashMap<u32, Polynomial> = HashMap::new();
        level.insert(0, Polynomial::one(&self.ring));
        for row in 0..k {
            let mut next: HashMap<u32, Polynomial> = HashMap::new();
            for (mask, sub) in &level {
                // expand along `row`, adding one column to the subset
                for col in 0..k {
                    let bit = 1u32 << col;
                    if mask & bit != 0 {
                        continue;
                    }
                    let entry = self.entry(row + 1, col + 1);
                    if entry.is_zero() {
                        continue;
                    }
                    // sign: (-1)^(row + position of col within the new set)
                    let below = (mask & (bit - 1)).count_ones() as usize;
                    let term = if (row + below) % 2 == 0 {
                        sub.mul(entry)?
                    } else {
                        sub.mul(entry)?.neg()
                    };
                    let new_mask = mask | bit;
                    match next.remove(&new_mask) {
                        Some(acc) => {
                            next.insert(new_mask, acc.add(&term)?);
                        }
                        None => {
                            next.insert(new_mask, term);
                        }
                    }
                }
            }
            if next.is_empty() {
                return Ok(Polynomial::zero(&self.ring));
            }
            level = next;
        }
        let full = (1u64 << k) - 1;
        Ok(level
            .remove(&(full as u32))
            .unwrap_or_else(|| Polynomial::zero(&self.ring)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coeff::FieldTag;
    use crate::algebra::poly::parse_polynomial;

    fn hankel_matrix(ring: &Ring, rows: usize, cols: usize) -> PolyMatrix {
        let mut entries = Vec::new();
        for i in 1..=rows {
            for j in 1..=cols {
                entries.push(Polynomial::var(ring, i + j - 2));
            }
        }
        PolyMatrix::new(ring, rows, cols, entries).unwrap()
    }

    /// Independent oracle: cofactor expansion along the first row.
    fn cofactor_det(m: &PolyMatrix) -> Polynomial {
        let k = m.rows();
        if k == 0 {
            return Polynomial::one(m.ring());
        }
        if k == 1 {
            return m.entry(1, 1).clone();
        }
        let mut acc = Polynomial::zero(m.ring());
        for j in 1..=k {
            let rows: Vec<usize> = (2..=k).collect();
            let cols: Vec<usize> = (1..=k).filter(|&c| c != j).collect();
            let sub = cofactor_det(&m.submatrix(&rows, &cols).unwrap());
            let term = m.entry(1, j).mul(&sub).unwrap();
            acc = if j % 2 == 1 { acc.add(&term).unwrap() } else { acc.sub(&term).unwrap() };
        }
        acc
    }

    #[test]
    fn two_by_two_formula() {
        let r = Ring::numbered(FieldTag::Rational, "x", 3);
        let h = hankel_matrix(&r, 2, 2);
        assert_eq!(h.det().unwrap(), parse_polynomial(&r, "x1*x3 - x2^2").unwrap());
    }

    #[test]
    fn one_by_one() {
        let r = Ring::numbered(FieldTag::Rational, "x", 5);
        let m = PolyMatrix::new(&r, 1, 1, vec![Polynomial::var(&r, 4)]).unwrap();
        assert_eq!(m.det().unwrap(), Polynomial::var(&r, 4));
    }

    #[test]
    fn hankel_three_matches_cofactor_oracle() {
        let r = Ring::numbered(FieldTag::Rational, "x", 5);
        let h = hankel_matrix(&r, 3, 3);
        let expected =
            parse_polynomial(&r, "x1*x3*x5 - x1*x4^2 - x2^2*x5 + 2*x2*x3*x4 - x3^3").unwrap();
        assert_eq!(h.det().unwrap(), expected);
        assert_eq!(cofactor_det(&h), expected);
    }

    #[test]
    fn rejects_nonsquare_and_oversize() {
        let r = Ring::numbered(FieldTag::Rational, "x", 6);
        let h = hankel_matrix(&r, 2, 3);
        assert!(matches!(h.det(), Err(Error::NonSquareMatrix { .. })));
        let r9 = Ring::numbered(FieldTag::Rational, "x", 9);
        assert!(matches!(
            hankel_matrix(&r9, 5, 5).det_capped(4),
            Err(Error::MatrixTooLarge { .. })
        ));
    }

    #[test]
    fn minor_bracket_notation() {
        let r = Ring::numbered(FieldTag::Rational, "x", 6);
        let h = hankel_matrix(&r, 2, 4);
        // [1 2 | 2 4] on the 2x4 Hankel: det [[x2,x4],[x3,x5]]
        assert_eq!(
            h.minor(&[1, 2], &[2, 4]).unwrap(),
            parse_polynomial(&r, "x2*x5 - x3*x4").unwrap()
        );
    }
}
