//! Groebner bases and the ideal calculus built on them: quotients,
//! saturations, eliminations, intersections, Frobenius powers, initial
//! ideals, dimension and length counting.

pub mod cache;
pub mod dimension;
mod engine;
pub mod ideal;
pub mod linalg;
pub mod ops;

pub use cache::DiskCache;
pub use dimension::{
    artinian_basis, brute_force_length, dimension_and_length, initial_ideal, krull_dimension,
    radical_membership, DimensionReport,
};
pub use ideal::{GbConfig, Ideal, DEFAULT_GB_BUDGET};
pub use linalg::{
    ideal_degree_piece_dim, min_generator_count, min_generators, monomials_of_degree, rank, socle,
    SocleReport,
};
pub use ops::{
    div_exact, eliminate, frobenius_power, frobenius_power_seeded, intersect, intersect_many,
    monomial_in_m_bracket, poly_in_m_bracket, quotient, quotient_single,
    quotient_single_truncated, quotient_truncated, saturate,
};

#[cfg(test)]
pub(crate) use engine::{all_s_pairs_reduce, EPoly, Steps};

#[cfg(test)]
mod tests;
