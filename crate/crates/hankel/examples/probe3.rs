use hankel::algebra::FieldTag;
use hankel::groebner::GbConfig;
use hankel::rings::HankelContext;
use hankel::frobenius::{nu_e_maximal_ideal, nu_e_maximal_closed_form};

fn main() {
    let cfg = GbConfig { budget: 2_000_000_000, disk_cache: None };
    for (t, n, p, e) in [(2usize,2usize,5u32,2u32),(2,3,5,2),(2,4,5,2),(3,3,5,2),(4,4,5,2),(3,4,5,1),(3,4,3,2),(3,4,2,2)] {
        let ctx = HankelContext::new(t, n, FieldTag::prime(p).unwrap()).unwrap();
        let t0 = std::time::Instant::now();
        let nu = nu_e_maximal_ideal(&ctx, e, &cfg);
        let cf = nu_e_maximal_closed_form(t, n, p as u64, e);
        println!("t={t} n={n} p={p} e={e}: nu={nu:?} closed={cf} in {:?}", t0.elapsed());
    }
}
