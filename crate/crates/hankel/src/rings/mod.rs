//! Constructions on Hankel matrices of indeterminates: determinantal
//! contexts, the `p<k>` family, secant parametrizations, Fedder witnesses,
//! and the structural identity checks that exercise them.

pub mod checks;
pub mod context;
pub mod secant;

pub use checks::{
    generic_specialization_check, length_lemma_check, minor_identity_check,
    minor_product_membership, not_pure_ingredient_check, socle_independence_check,
    val2_identity_check, GenericSpecializationOutcome, LengthLemmaOutcome, MembershipOutcome,
    MinorIdentityOutcome, NotPureOutcome, SocleIndependenceOutcome,
};
pub use context::{
    canonicalize, hankel_matrix, minor_ideal, CanonicalizeOutcome, GeneralHankelContext,
    HankelContext,
};
pub use secant::{parametrization_kernel, SecantContext};

/// Binomial coefficient as u64; sizes here stay tiny.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

#[cfg(test)]
mod tests;
