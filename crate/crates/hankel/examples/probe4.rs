use hankel::algebra::FieldTag;
use hankel::groebner::GbConfig;
use hankel::rings::HankelContext;
use hankel::frobenius::nu_e_maximal_ideal;

fn main() {
    let cfg = GbConfig { budget: 2_000_000_000, disk_cache: None };
    let ctx = HankelContext::new(3, 4, FieldTag::prime(3).unwrap()).unwrap();
    let t0 = std::time::Instant::now();
    let nu = nu_e_maximal_ideal(&ctx, 2, &cfg);
    println!("nu={nu:?} in {:?}", t0.elapsed());
}
