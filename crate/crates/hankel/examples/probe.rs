use hankel::algebra::FieldTag;
use hankel::groebner::{quotient_single_truncated, GbConfig};
use hankel::rings::HankelContext;
use hankel::groebner::frobenius_power_seeded;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let q: u64 = args.get(1).map(|s| s.parse().unwrap()).unwrap_or(25);
    let cap: u32 = args.get(2).map(|s| s.parse().unwrap()).unwrap_or(114);
    let ctx = HankelContext::new(3, 4, FieldTag::prime(5).unwrap()).unwrap();
    let cfg = GbConfig { budget: 2_000_000_000, disk_cache: None };
    let bracket = frobenius_power_seeded(&ctx.ideal, q, &cfg).unwrap();
    eprintln!("bracket gens: {} (degrees {:?})", bracket.gens().len(),
        bracket.gens().iter().map(|g| g.degree()).collect::<Vec<_>>());
    let g0 = ctx.ideal.gens()[0].clone();
    let t0 = std::time::Instant::now();
    let part = quotient_single_truncated(&bracket, &g0, cap, &cfg).unwrap();
    eprintln!("single colon ({} gens) in {:?}", part.len(), t0.elapsed());
    for p in part.iter().take(8) {
        eprintln!("  deg {} terms {}", p.degree(), p.num_terms());
    }
}
