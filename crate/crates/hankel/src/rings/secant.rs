//! The secant-variety presentation: power-sum generators `h_i` inside
//! `S = F[u1..u_{t-1}, v1..v_{t-1}]` and the parametrization kernel.

use crate::algebra::{FieldTag, Monomial, PolyMatrix, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::groebner::{eliminate, GbConfig, Ideal};

/// The subring generators `h_i = sum_j u_j^{n+t-2-i} v_j^i`,
/// `0 <= i <= n+t-2`, presenting the Hankel determinantal ring as the
/// coordinate ring of a secant variety of a rational normal curve.
#[derive(Clone, Debug)]
pub struct SecantContext {
    pub t: usize,
    pub n: usize,
    /// `S = F[u1..u_{t-1}, v1..v_{t-1}]`.
    pub ring: Ring,
    /// `h_0, ..., h_{n+t-2}`, each homogeneous of degree `n+t-2`.
    pub generators: Vec<Polynomial>,
}

impl SecantContext {
    pub fn new(t: usize, n: usize, field: FieldTag) -> Result<SecantContext> {
        if t < 2 || n < 1 {
            return Err(Error::InvalidParameter(format!(
                "secant presentation needs t >= 2 and n >= 1, got t={t}, n={n}"
            )));
        }
        let m = t - 1;
        let mut names: Vec<String> = (1..=m).map(|j| format!("u{j}")).collect();
        names.extend((1..=m).map(|j| format!("v{j}")));
        let ring = Ring::new(field, names)?;
        let deg = n + t - 2;
        let mut generators = Vec::with_capacity(deg + 1);
        for i in 0..=deg {
            let mut terms = Vec::with_capacity(m);
            for j in 0..m {
                let mut exps = vec![0u16; 2 * m];
                exps[j] = (deg - i) as u16;
                exps[m + j] = i as u16;
                terms.push((Monomial::new(exps), ring.field().one()));
            }
            generators.push(Polynomial::from_terms(&ring, terms));
        }
        Ok(SecantContext { t, n, ring, generators })
    }

    /// The `t x n` matrix Hankel in the `h_i`: entry `(a, b) = h_{a+b-2}`.
    pub fn hankel_in_h(&self) -> Result<PolyMatrix> {
        let mut entries = Vec::with_capacity(self.t * self.n);
        for a in 1..=self.t {
            for b in 1..=self.n {
                entries.push(self.generators[a + b - 2].clone());
            }
        }
        PolyMatrix::new(&self.ring, self.t, self.n, entries)
    }

    /// Every size-t minor of the Hankel-in-h matrix must vanish identically:
    /// the matrix is a sum of t-1 rank-one matrices.
    pub fn minors_vanish(&self) -> Result<bool> {
        let m = self.hankel_in_h()?;
        use itertools::Itertools;
        for rows in (1..=self.t).combinations(self.t) {
            for cols in (1..=self.n).combinations(self.t) {
                if !m.minor(&rows, &cols)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Substitute `u_j -> v_j` in a polynomial of S (the symmetry collapsing
    /// every `h_i` to the same power sum).
    pub fn collapse_u_to_v(&self, f: &Polynomial) -> Result<Polynomial> {
        let m = self.t - 1;
        let mut images: Vec<Polynomial> =
            (0..m).map(|j| Polynomial::var(&self.ring, m + j)).collect();
        images.extend((0..m).map(|j| Polynomial::var(&self.ring, m + j)));
        f.substitute(&self.ring, &images)
    }
}

/// Kernel of `x_{i+1} -> h_i`: eliminate the u, v variables from the graph
/// ideal. The result lives in `A = F[x1..x_{n+t-1}]` and must equal `I_t(H)`.
pub fn parametrization_kernel(
    sctx: &SecantContext,
    cfg: &GbConfig,
) -> Result<(Ideal, Ring)> {
    let m = sctx.t - 1;
    let num_x = sctx.n + sctx.t - 1;
    let mut names: Vec<String> = sctx.ring.var_names().to_vec();
    names.extend((1..=num_x).map(|i| format!("x{i}")));
    let big = Ring::new(sctx.ring.field(), names)?;
    let mut gens = Vec::with_capacity(num_x);
    for i in 0..num_x {
        let x = Polynomial::var(&big, 2 * m + i);
        let h = sctx.generators[i].map_to_ring(&big)?;
        gens.push(x.sub(&h)?);
    }
    let graph = Ideal::new(&big, gens)?;
    let drop: Vec<usize> = (0..2 * m).collect();
    let kernel = eliminate(&graph, &drop, cfg)?;
    let target = kernel.ring().clone();
    Ok((kernel, target))
}
