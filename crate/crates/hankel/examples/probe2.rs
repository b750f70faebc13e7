use hankel::algebra::{FieldTag, MonomialOrder, Polynomial};
use hankel::groebner::GbConfig;
use hankel::rings::HankelContext;
use hankel::groebner::frobenius_power_seeded;

fn main() {
    let ctx = HankelContext::new(3, 4, FieldTag::prime(5).unwrap()).unwrap();
    let cfg = GbConfig { budget: 2_000_000_000, disk_cache: None };
    let bracket = frobenius_power_seeded(&ctx.ideal, 25, &cfg).unwrap();
    eprintln!("bracket ok");
    let ring = bracket.ring();
    let ext = ring.extend_front(&["w"]).unwrap();
    eprintln!("ext ok");
    let w = Polynomial::var(&ext, 0);
    let one_minus_w = Polynomial::one(&ext).sub(&w).unwrap();
    let mut gens = Vec::new();
    for f in bracket.gens() {
        gens.push(w.mul(&f.map_to_ring(&ext).unwrap()).unwrap());
    }
    let g0 = ctx.ideal.gens()[0].map_to_ring(&ext).unwrap();
    gens.push(one_minus_w.mul(&g0).unwrap());
    eprintln!("gens built: {}", gens.len());
    for g in &gens {
        let lt = g.leading_term(MonomialOrder::Block { first_block: 1 }).unwrap();
        eprintln!("  deg {} terms {} lt_exps {:?}", g.degree(), g.num_terms(), lt.0.exps());
    }
}
