// Exact circle packing numbers P(p, c) by maximum clique search.
//
//     cargo run --release --example packing_numbers -- 5 7 13

use std::time::Instant;

use fftile::ffvec::PrimeModulus;
use fftile::packing::{pack_circles, packing_number, PackingMode, DEFAULT_NODE_BUDGET};

fn packing_table(primes: &[u64]) -> fftile::Result<()> {
    for &p in primes {
        let m = PrimeModulus::new(p)?;
        for c in 1..p.min(3) {
            for mode in [PackingMode::NonzeroDistanceOnly, PackingMode::Full] {
                let start = Instant::now();
                let best = packing_number(m.scalar(c), mode, DEFAULT_NODE_BUDGET)?;
                println!(
                    "P({p}, {c}) {mode:?}: {} centres {:?} ({:.2?})",
                    best.size(),
                    best.centers,
                    start.elapsed()
                );
            }
        }
    }
    Ok(())
}

pub fn run_example() -> fftile::Result<()> {
    packing_table(&[3, 5, 7])?;
    let two = pack_circles(PrimeModulus::new(5)?.scalar(1), 2, false, DEFAULT_NODE_BUDGET)?;
    println!("two unit circles in F_5^2: {:?}", two.map(|r| r.centers));
    Ok(())
}

fn main() {
    let primes: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("prime"))
        .collect();
    if primes.is_empty() {
        run_example().expect("packing example");
    } else {
        packing_table(&primes).expect("packing table");
    }
}
