//! Hankel determinantal contexts: the matrix, its minor ideals, and the
//! distinguished objects attached to them.

use super::binomial;
use crate::algebra::{FieldTag, Monomial, MonomialOrder, PolyMatrix, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::groebner::{GbConfig, Ideal};
use itertools::Itertools;

/// The Hankel matrix with entry `(i, j) = x_{i+j-1}` (1-based) of the given
/// shape, inside `ring` (which must have at least `rows + cols - 1`
/// variables).
pub fn hankel_matrix(ring: &Ring, rows: usize, cols: usize) -> Result<PolyMatrix> {
    if ring.arity() < rows + cols - 1 {
        return Err(Error::InvalidParameter(format!(
            "{rows}x{cols} Hankel matrix needs {} variables, ring has {}",
            rows + cols - 1,
            ring.arity()
        )));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for i in 1..=rows {
        for j in 1..=cols {
            entries.push(Polynomial::var(ring, i + j - 2));
        }
    }
    PolyMatrix::new(ring, rows, cols, entries)
}

/// All size-u minors of a matrix, rows and columns in lexicographic subset
/// order; a deterministic generating set for `I_u`.
pub fn minor_ideal(matrix: &PolyMatrix, u: usize) -> Result<Ideal> {
    if u == 0 || u > matrix.rows().min(matrix.cols()) {
        return Err(Error::InvalidParameter(format!(
            "minor size {u} out of range for a {}x{} matrix",
            matrix.rows(),
            matrix.cols()
        )));
    }
    let mut gens = Vec::new();
    for rows in (1..=matrix.rows()).combinations(u) {
        for cols in (1..=matrix.cols()).combinations(u) {
            gens.push(matrix.minor(&rows, &cols)?);
        }
    }
    Ideal::new(matrix.ring(), gens)
}

/// The ring `R = F[x1..x_{n+t-1}] / I_t(H)` for a `t x n` Hankel matrix `H`
/// with `t <= n`, together with the objects the structure theory names.
#[derive(Clone, Debug)]
pub struct HankelContext {
    pub t: usize,
    pub n: usize,
    /// Ambient polynomial ring `A`.
    pub ring: Ring,
    pub matrix: PolyMatrix,
    /// Defining ideal `I = I_t(H)`.
    pub ideal: Ideal,
}

impl HankelContext {
    pub fn new(t: usize, n: usize, field: FieldTag) -> Result<HankelContext> {
        if t < 1 || t > n {
            return Err(Error::InvalidParameter(format!(
                "need 1 <= t <= n, got t={t}, n={n} (canonicalize first)"
            )));
        }
        let ring = Ring::numbered(field, "x", n + t - 1);
        let matrix = hankel_matrix(&ring, t, n)?;
        let ideal = minor_ideal(&matrix, t)?;
        Ok(HankelContext { t, n, ring, matrix, ideal })
    }

    /// 1-based variable accessor `x_i`.
    pub fn x(&self, i: usize) -> Polynomial {
        Polynomial::var(&self.ring, i - 1)
    }

    /// Number of ambient variables `n + t - 1`.
    pub fn num_vars(&self) -> usize {
        self.n + self.t - 1
    }

    /// Preimage in `A` of an ideal of `R`: the given generators plus `I`.
    pub fn r_ideal(&self, gens: Vec<Polynomial>) -> Result<Ideal> {
        self.ideal.plus_polys(&gens)
    }

    /// The maximal ideal of `A` (and of `R`, as a preimage).
    pub fn maximal_ideal(&self) -> Ideal {
        let gens = (0..self.ring.arity())
            .map(|v| Polynomial::var(&self.ring, v))
            .collect();
        Ideal::new(&self.ring, gens).expect("variables are nonzero")
    }

    /// `p<k>`: the ideal of `R` generated by the maximal minors of the first
    /// `t-1` rows and first `n-k+1` columns of `H`. Stored as its preimage,
    /// which contains `I`. Requires `t >= 2` and `1 <= k <= n-t+2`.
    pub fn p_bracket(&self, k: usize) -> Result<Ideal> {
        if self.t < 2 {
            return Err(Error::InvalidParameter("p<k> needs t >= 2".into()));
        }
        if k < 1 || k > self.n - self.t + 2 {
            return Err(Error::InvalidParameter(format!(
                "k={k} outside 1..={}",
                self.n - self.t + 2
            )));
        }
        let rows: Vec<usize> = (1..=self.t - 1).collect();
        let col_count = self.n - k + 1;
        let mut gens = Vec::new();
        for cols in (1..=col_count).combinations(self.t - 1) {
            gens.push(self.matrix.minor(&rows, &cols)?);
        }
        self.r_ideal(gens)
    }

    /// `p = p<1>`, the height-one prime generating the class group.
    pub fn p_prime(&self) -> Result<Ideal> {
        self.p_bracket(1)
    }

    /// `q`: the ideal generated by the `t-1` minors of the first `t-1`
    /// columns; by Hankel symmetry it equals `p<n-t+1>`.
    pub fn q_ideal(&self) -> Result<Ideal> {
        if self.t < 2 {
            return Err(Error::InvalidParameter("q needs t >= 2".into()));
        }
        let cols: Vec<usize> = (1..=self.t - 1).collect();
        let mut gens = Vec::new();
        for rows in (1..=self.t).combinations(self.t - 1) {
            gens.push(self.matrix.minor(&rows, &cols)?);
        }
        self.r_ideal(gens)
    }

    /// The leading principal `(t-1)`-minor `Delta = [1..t-1 | 1..t-1]`.
    pub fn delta(&self) -> Result<Polynomial> {
        if self.t < 2 {
            return Err(Error::InvalidParameter("Delta needs t >= 2".into()));
        }
        let idx: Vec<usize> = (1..=self.t - 1).collect();
        self.matrix.minor(&idx, &idx)
    }

    /// The homogeneous system of parameters
    /// `x1, ..., x_{t-1}, x_{n+1}, ..., x_{n+t-1}` (2t-2 variables).
    pub fn hsop(&self) -> Vec<Polynomial> {
        let mut out = Vec::new();
        for i in 1..self.t {
            out.push(self.x(i));
        }
        for i in self.n + 1..=self.n + self.t - 1 {
            out.push(self.x(i));
        }
        out
    }

    /// The hsop prefix `x1..x_{t-2}, x_{n+1}..x_{n+t-1}` used for the
    /// Cohen-Macaulay length computation on `R/p<k>` (2t-3 variables).
    pub fn hsop_prefix(&self) -> Vec<Polynomial> {
        let mut out = Vec::new();
        for i in 1..self.t.saturating_sub(1) {
            out.push(self.x(i));
        }
        for i in self.n + 1..=self.n + self.t - 1 {
            out.push(self.x(i));
        }
        out
    }

    /// Degree `t-1` monomials in `x_t, ..., x_n`: the candidate socle span of
    /// `R` modulo the hsop. There are `binom(n-1, t-1)` of them.
    pub fn socle_candidates(&self) -> Vec<Polynomial> {
        let vars: Vec<usize> = (self.t..=self.n).map(|i| i - 1).collect();
        let d = self.t - 1;
        let mut out = Vec::new();
        for combo in vars.iter().combinations_with_replacement(d) {
            let mut exps = vec![0u16; self.ring.arity()];
            for &&v in &combo {
                exps[v] += 1;
            }
            out.push(Polynomial::monomial(
                &self.ring,
                Monomial::new(exps),
                self.ring.field().one(),
            ));
        }
        out
    }

    /// Expected count of socle candidates.
    pub fn socle_candidate_count(&self) -> u64 {
        binomial(self.n - 1, self.t - 1)
    }

    /// The Fedder witness `f`, a product of two complementary-parity minors
    /// of a square (or nearly square) Hankel presentation of `I`, with
    /// squarefree lex leading term `x1 x2 ... x_{n+t-1}`. The leading-term
    /// property is rechecked on every construction and a failure aborts.
    pub fn fedder_witness(&self) -> Result<Polynomial> {
        let v = self.num_vars();
        let f = if v % 2 == 1 {
            let k = (self.n + self.t) / 2;
            let hp = hankel_matrix(&self.ring, k, k)?;
            let all: Vec<usize> = (1..=k).collect();
            let d1 = hp.minor(&all, &all)?;
            let rows: Vec<usize> = (1..k).collect();
            let cols: Vec<usize> = (2..=k).collect();
            let d2 = if k > 1 {
                hp.minor(&rows, &cols)?
            } else {
                Polynomial::one(&self.ring)
            };
            d1.mul(&d2)?
        } else {
            let k = (self.n + self.t - 1) / 2;
            let hpp = hankel_matrix(&self.ring, k, k + 1)?;
            let rows: Vec<usize> = (1..=k).collect();
            let cols1: Vec<usize> = (1..=k).collect();
            let cols2: Vec<usize> = (2..=k + 1).collect();
            hpp.minor(&rows, &cols1)?.mul(&hpp.minor(&rows, &cols2)?)?
        };
        let (lm, _) = f.leading_term(MonomialOrder::Lex)?;
        let expected = Monomial::new(vec![1u16; v]);
        if lm != expected {
            return Err(Error::Internal(format!(
                "Fedder witness leading term {:?} is not the squarefree product of all variables",
                lm.exps()
            )));
        }
        Ok(f)
    }
}

/// An `r x s` Hankel matrix with a chosen minor size `u`; the shape the
/// Gruson-Peskine reduction starts from.
#[derive(Clone, Debug)]
pub struct GeneralHankelContext {
    pub r: usize,
    pub s: usize,
    pub u: usize,
    pub ring: Ring,
    pub matrix: PolyMatrix,
    /// `I_u` of the matrix.
    pub ideal: Ideal,
}

impl GeneralHankelContext {
    pub fn new(r: usize, s: usize, u: usize, field: FieldTag) -> Result<GeneralHankelContext> {
        if u < 1 || u > r.min(s) {
            return Err(Error::InvalidParameter(format!(
                "need 1 <= u <= min(r,s), got u={u}, r={r}, s={s}"
            )));
        }
        let ring = Ring::numbered(field, "x", r + s - 1);
        let matrix = hankel_matrix(&ring, r, s)?;
        let ideal = minor_ideal(&matrix, u)?;
        Ok(GeneralHankelContext { r, s, u, ring, matrix, ideal })
    }

    /// A size-`w` minor by 1-based row and column indices.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<Polynomial> {
        self.matrix.minor(rows, cols)
    }
}

/// Outcome of the Gruson-Peskine canonicalization `I_u(r x s) = I_t(t x n)`
/// with `t = u`, `n = r + s - u`, both ideals living in the same ambient
/// ring.
#[derive(Clone, Debug)]
pub struct CanonicalizeOutcome {
    pub t: usize,
    pub n: usize,
    pub ideals_equal: bool,
    pub left_basis_size: usize,
    pub right_basis_size: usize,
}

/// Verify the reduction to maximal minors by reduced-basis equality.
pub fn canonicalize(
    gctx: &GeneralHankelContext,
    cfg: &GbConfig,
) -> Result<CanonicalizeOutcome> {
    let t = gctx.u;
    let n = gctx.r + gctx.s - gctx.u;
    let canon_matrix = hankel_matrix(&gctx.ring, t, n)?;
    let canon = minor_ideal(&canon_matrix, t)?;
    let equal = gctx.ideal.equals(&canon, cfg)?;
    let left = gctx.ideal.gb(MonomialOrder::DegRevLex, cfg)?.len();
    let right = canon.gb(MonomialOrder::DegRevLex, cfg)?.len();
    Ok(CanonicalizeOutcome {
        t,
        n,
        ideals_equal: equal,
        left_basis_size: left,
        right_basis_size: right,
    })
}
