use super::*;
use crate::algebra::{parse_polynomial, FieldTag, MonomialOrder, Polynomial};
use crate::groebner::{krull_dimension, GbConfig, Ideal};

fn cfg() -> GbConfig {
    GbConfig::default()
}

fn q() -> FieldTag {
    FieldTag::Rational
}

fn p(ring: &crate::algebra::Ring, s: &str) -> Polynomial {
    parse_polynomial(ring, s).unwrap()
}

#[test]
fn build_small_contexts() {
    let c22 = HankelContext::new(2, 2, q()).unwrap();
    assert_eq!(c22.ideal.gens().len(), 1);
    assert_eq!(c22.ideal.gens()[0], p(&c22.ring, "x1*x3 - x2^2"));

    let c23 = HankelContext::new(2, 3, q()).unwrap();
    let want: Vec<Polynomial> = ["x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"]
        .iter()
        .map(|s| p(&c23.ring, s))
        .collect();
    assert_eq!(c23.ideal.gens().len(), 3);
    for w in &want {
        assert!(c23.ideal.gens().contains(w));
    }

    // t = n: a single maximal minor, the Gorenstein case
    let c33 = HankelContext::new(3, 3, q()).unwrap();
    assert_eq!(c33.ideal.gens().len(), 1);
    assert_eq!(
        c33.ideal.gens()[0],
        p(&c33.ring, "x1*x3*x5 - x1*x4^2 - x2^2*x5 + 2*x2*x3*x4 - x3^3")
    );

    assert!(HankelContext::new(3, 2, q()).is_err());

    // generator count is binom(n, t)
    let c24 = HankelContext::new(2, 4, q()).unwrap();
    assert_eq!(c24.ideal.gens().len() as u64, binomial(4, 2));
}

#[test]
fn canonicalize_examples() {
    // (3,3,2) -> (2,4)
    let g = GeneralHankelContext::new(3, 3, 2, q()).unwrap();
    let out = canonicalize(&g, &cfg()).unwrap();
    assert_eq!((out.t, out.n), (2, 4));
    assert!(out.ideals_equal);

    // r = u: identity reduction
    let g = GeneralHankelContext::new(2, 3, 2, q()).unwrap();
    let out = canonicalize(&g, &cfg()).unwrap();
    assert_eq!((out.t, out.n), (2, 3));
    assert!(out.ideals_equal);

    // (2,2,1) -> (1,3): all variables both ways
    let g = GeneralHankelContext::new(2, 2, 1, q()).unwrap();
    let out = canonicalize(&g, &cfg()).unwrap();
    assert_eq!((out.t, out.n), (1, 3));
    assert!(out.ideals_equal);
}

#[test]
fn p_bracket_family() {
    let c = HankelContext::new(2, 3, q()).unwrap();
    // k=1: the full first row
    let p1 = c.p_bracket(1).unwrap();
    let expect = c.r_ideal(vec![c.x(1), c.x(2), c.x(3)]).unwrap();
    assert!(p1.equals(&expect, &cfg()).unwrap());
    // k=3 = n-t+2: principal (x1)
    let p3 = c.p_bracket(3).unwrap();
    let expect = c.r_ideal(vec![c.x(1)]).unwrap();
    assert!(p3.equals(&expect, &cfg()).unwrap());
    assert!(c.p_bracket(4).is_err());

    // t=3, n=3, k=1: three 2x2 minors of the first two rows
    let c33 = HankelContext::new(3, 3, q()).unwrap();
    let p1 = c33.p_bracket(1).unwrap();
    let expect = c33
        .r_ideal(vec![
            p(&c33.ring, "x1*x3 - x2^2"),
            p(&c33.ring, "x1*x4 - x2*x3"),
            p(&c33.ring, "x2*x4 - x3^2"),
        ])
        .unwrap();
    assert!(p1.equals(&expect, &cfg()).unwrap());
}

#[test]
fn delta_hsop_socle() {
    let c = HankelContext::new(2, 3, q()).unwrap();
    assert_eq!(c.delta().unwrap(), p(&c.ring, "x1"));
    assert_eq!(c.hsop(), vec![c.x(1), c.x(4)]);
    let socle = c.socle_candidates();
    assert_eq!(socle, vec![c.x(2), c.x(3)]);
    assert_eq!(c.socle_candidate_count(), 2);

    let c33 = HankelContext::new(3, 3, q()).unwrap();
    assert_eq!(c33.delta().unwrap(), p(&c33.ring, "x1*x3 - x2^2"));
    assert_eq!(c33.hsop(), vec![c33.x(1), c33.x(2), c33.x(4), c33.x(5)]);

    let c22 = HankelContext::new(2, 2, q()).unwrap();
    assert_eq!(c22.socle_candidates().len(), 1);
    assert_eq!(c22.socle_candidate_count(), 1);
}

#[test]
fn q_ideal_is_high_p_bracket() {
    // by Hankel symmetry q = p<n-t+1>
    for (t, n) in [(2usize, 3usize), (2, 4), (3, 3)] {
        let c = HankelContext::new(t, n, q()).unwrap();
        let qi = c.q_ideal().unwrap();
        let pb = c.p_bracket(n - t + 1).unwrap();
        assert!(qi.equals(&pb, &cfg()).unwrap(), "t={t} n={n}");
    }
}

#[test]
fn secant_generators_and_kernel() {
    // t=2, n=3: Veronese powers u^{3-i} v^i
    let s = SecantContext::new(2, 3, q()).unwrap();
    assert_eq!(s.generators.len(), 4);
    assert_eq!(s.generators[0], p(&s.ring, "u1^3"));
    assert_eq!(s.generators[1], p(&s.ring, "u1^2*v1"));
    assert!(s.minors_vanish().unwrap());

    let (kernel, kring) = parametrization_kernel(&s, &cfg()).unwrap();
    let c = HankelContext::new(2, 3, q()).unwrap();
    let expected: Vec<Polynomial> = c
        .ideal
        .gens()
        .iter()
        .map(|g| g.map_to_ring(&kring).unwrap())
        .collect();
    let expected = Ideal::new(&kring, expected).unwrap();
    assert!(kernel.equals(&expected, &cfg()).unwrap());

    // t=3, n=3: kernel is the principal determinant
    let s33 = SecantContext::new(3, 3, q()).unwrap();
    assert!(s33.minors_vanish().unwrap());
    let (kernel, kring) = parametrization_kernel(&s33, &cfg()).unwrap();
    let det = p(&kring, "x1*x3*x5 - x1*x4^2 - x2^2*x5 + 2*x2*x3*x4 - x3^3");
    let expected = Ideal::new(&kring, vec![det]).unwrap();
    assert!(kernel.equals(&expected, &cfg()).unwrap());

    // substitution vanishing at random prime-field points
    let fp = FieldTag::prime(101).unwrap();
    let sfp = SecantContext::new(3, 3, fp).unwrap();
    let kfp = kernel
        .gens()
        .iter()
        .map(|g| parse_polynomial(&Ring5::numbered(fp, "x", 5), &g.to_string()).unwrap())
        .collect::<Vec<_>>();
    use crate::algebra::Ring as Ring5;
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let point: Vec<crate::algebra::Coeff> =
            (0..4).map(|_| fp.from_int(rng.gen_range(0..101))).collect();
        let images: Vec<crate::algebra::Coeff> =
            sfp.generators.iter().map(|h| h.eval(&point)).collect();
        for g in &kfp {
            assert!(g.eval(&images).is_zero());
        }
    }
}

#[test]
fn fedder_witness_construction() {
    // (2,2): odd case, f = (x1x3 - x2^2) * x2
    let c = HankelContext::new(2, 2, q()).unwrap();
    let f = c.fedder_witness().unwrap();
    assert_eq!(f, p(&c.ring, "x1*x3 - x2^2").mul(&c.x(2)).unwrap());

    // (2,3): even case, f = (x1x3 - x2^2)(x2x4 - x3^2)
    let c = HankelContext::new(2, 3, q()).unwrap();
    let f = c.fedder_witness().unwrap();
    let want = p(&c.ring, "x1*x3 - x2^2").mul(&p(&c.ring, "x2*x4 - x3^2")).unwrap();
    assert_eq!(f, want);

    // (3,3): odd case, det times the [1 2 | 2 3] minor
    let c = HankelContext::new(3, 3, q()).unwrap();
    let f = c.fedder_witness().unwrap();
    let det = p(&c.ring, "x1*x3*x5 - x1*x4^2 - x2^2*x5 + 2*x2*x3*x4 - x3^3");
    let minor = p(&c.ring, "x2*x4 - x3^2");
    assert_eq!(f, det.mul(&minor).unwrap());
    // lex leading term is the product of all variables, built into the
    // constructor as an abort check
    let (lm, _) = f.leading_term(MonomialOrder::Lex).unwrap();
    assert!(lm.is_squarefree());
    assert_eq!(lm.degree() as usize, c.num_vars());
}

#[test]
fn minor_identity_small() {
    // t=2: the identity says entries satisfy Y_ab Y_cd = Y_ad Y_cb mod I_2,
    // i.e. the differences are 2-minors
    let out = minor_identity_check(2, 3, 2, 101, 25, 42, &cfg()).unwrap();
    assert_eq!(out.symbolic_failures, 0);
    assert_eq!(out.numeric_failures, 0);

    // t=3 on a 3x4 generic matrix
    let out = minor_identity_check(3, 4, 3, 101, 10, 42, &cfg()).unwrap();
    assert_eq!(out.symbolic_failures, 0);
    assert_eq!(out.numeric_failures, 0);
    assert!(out.symbolic_checked >= 9 * 36);
}

#[test]
fn val2_instances() {
    let c = HankelContext::new(2, 3, q()).unwrap();
    assert!(val2_identity_check(&c, &[2], &cfg()).unwrap());
    assert!(val2_identity_check(&c, &[1], &cfg()).unwrap());
    let c34 = HankelContext::new(3, 4, q()).unwrap();
    assert!(val2_identity_check(&c34, &[1, 2], &cfg()).unwrap());
    assert!(val2_identity_check(&c34, &[2, 4], &cfg()).unwrap());
    assert!(val2_identity_check(&c34, &[2, 2], &cfg()).is_err());
}

#[test]
fn generic_specialization_small() {
    let out = generic_specialization_check(2, 2, q(), &cfg()).unwrap();
    assert!(out.substitution_matches);
    assert_eq!(out.generic_dim, 3);
    assert_eq!(out.specialized_dim, 2);

    let out = generic_specialization_check(2, 3, q(), &cfg()).unwrap();
    assert!(out.substitution_matches);
    assert_eq!(out.generic_dim, 4);
    assert_eq!(out.specialized_dim, 2);
}

#[test]
fn minor_products() {
    // two 2-minors with d=2 on a 3x3, u=2 context
    let g = GeneralHankelContext::new(3, 3, 2, q()).unwrap();
    let out = minor_product_membership(
        &g,
        &[(vec![1, 2], vec![1, 2]), (vec![2, 3], vec![2, 3])],
        2,
        &cfg(),
    )
    .unwrap();
    assert_eq!(out, MembershipOutcome::Holds);

    // x1 (a 1-minor) times the full 3x3 determinant lies in I_2^2
    let out = minor_product_membership(
        &g,
        &[(vec![1], vec![1]), (vec![1, 2, 3], vec![1, 2, 3])],
        2,
        &cfg(),
    )
    .unwrap();
    assert_eq!(out, MembershipOutcome::Holds);

    // hypothesis violation: a single 1-minor cannot reach I^1 * degree t
    let out =
        minor_product_membership(&g, &[(vec![1], vec![1])], 1, &cfg()).unwrap();
    assert!(matches!(out, MembershipOutcome::NotApplicable(_)));
}

#[test]
fn not_pure_ingredient() {
    for n in [2usize, 3usize] {
        let out = not_pure_ingredient_check(3, n, q(), &cfg()).unwrap();
        assert!(out.symmetry_collapses, "n={n}");
        assert!(out.membership_holds, "n={n}");
        assert_eq!(out.quotient_dim, 1, "n={n}");
        assert_eq!(out.expected_dim, 1);
    }
    assert!(not_pure_ingredient_check(2, 3, q(), &cfg()).is_err());
}

#[test]
fn socle_independence() {
    // t=3, n=4 over GF(5): three products, pattern lambda / 2 lambda
    let out = socle_independence_check(3, 4, FieldTag::prime(5).unwrap(), &cfg())
        .unwrap()
        .unwrap();
    assert_eq!(out.index_count, 3);
    assert!(out.injective);
    assert!(out.coefficient_pattern_ok);
    assert_eq!(out.max_weight, 2);

    // t=2: diagonal map
    let out = socle_independence_check(2, 4, q(), &cfg()).unwrap().unwrap();
    assert_eq!(out.index_count, 3);
    assert!(out.injective);
    assert!(out.coefficient_pattern_ok);

    // (3,3,3): a single product, the doubled middle coefficient survives
    let out = socle_independence_check(3, 3, FieldTag::prime(3).unwrap(), &cfg())
        .unwrap()
        .unwrap();
    assert_eq!(out.index_count, 1);
    assert!(out.injective);

    // p < t is out of hypothesis
    assert!(socle_independence_check(3, 3, FieldTag::prime(2).unwrap(), &cfg())
        .unwrap()
        .is_none());
}

#[test]
fn length_lemma_instances() {
    // r=1 tensor case: (t-1) * binom(s+t-2, t-1) = s * binom(s+t-2, t-2)
    let out = length_lemma_check(3, 1, 3, q(), &cfg()).unwrap();
    assert_eq!(out.formula, 3 * binomial(4, 1));
    assert_eq!(out.brute_force, out.formula);
    assert_eq!(out.engine, out.formula);

    for (t, r, s) in [(2usize, 2usize, 3usize), (3, 2, 2), (4, 3, 4), (4, 1, 1)] {
        let out = length_lemma_check(t, r, s, q(), &cfg()).unwrap();
        assert_eq!(out.brute_force, out.formula, "t={t} r={r} s={s}");
        assert_eq!(out.engine, out.formula, "t={t} r={r} s={s}");
    }
}

#[test]
fn hankel_heights_match_dimension_engine() {
    // height I_t(H) = n-t+1 via dim R = 2t-2
    for (t, n) in [(2usize, 2usize), (2, 3), (3, 3), (2, 4)] {
        let c = HankelContext::new(t, n, q()).unwrap();
        let dim = krull_dimension(&c.ideal, &cfg()).unwrap();
        assert_eq!(dim, 2 * t - 2, "dim R for t={t}, n={n}");
        assert_eq!(c.num_vars() - dim, n - t + 1, "height for t={t}, n={n}");
    }
}
