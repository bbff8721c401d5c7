use galois_census::census::{census_full, trinomial_label, CensusConfig};
use std::time::Instant;

fn main() {
    let cfg = CensusConfig::default();
    // cubic census timing at H=20 (68921 polys)
    let t = Instant::now();
    let r = census_full(3, &[20], &cfg).unwrap();
    let dt = t.elapsed().as_secs_f64();
    let total: u64 = r.iter().map(|x| x.count).sum();
    println!("cubic H=20: {} polys in {:.2}s ({:.1} us/poly)", total, dt, dt * 1e6 / total as f64);
    for rec in &r { println!("  {} {} ({})", rec.label, rec.count, rec.certainty_floor); }

    // quartic census timing at H=8 (83521 polys)
    let t = Instant::now();
    let r = census_full(4, &[8], &cfg).unwrap();
    let dt = t.elapsed().as_secs_f64();
    let total: u64 = r.iter().map(|x| x.count).sum();
    println!("quartic H=8: {} polys in {:.2}s ({:.1} us/poly)", total, dt, dt * 1e6 / total as f64);
    for rec in &r { println!("  {} {} ({})", rec.label, rec.count, rec.certainty_floor); }

    // trinomial n=10 r=3 at H=25 (2601 polys)
    let t = Instant::now();
    let mut counts = std::collections::BTreeMap::new();
    for a in -25i64..=25 {
        for b in -25i64..=25 {
            let (l, _) = trinomial_label(10, 3, a, b, 200);
            *counts.entry(l).or_insert(0u64) += 1;
        }
    }
    let dt = t.elapsed().as_secs_f64();
    println!("trinomial H=25: 2601 polys in {:.2}s ({:.0} us/poly)", dt, dt * 1e6 / 2601.0);
    println!("  {:?}", counts);
}
