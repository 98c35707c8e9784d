// Every 1-tiling of F_3^3 found by exhaustive search is graphical.
//
//     cargo run --example graphical_tilings

use fftile::ffvec::{PrimeModulus, Space};
use fftile::tiling::{enumerate_tilings, graphical_check, Graphical};

pub fn run_example() -> fftile::Result<()> {
    let s = Space::new(PrimeModulus::new(3)?, 3)?;
    for size in [3, 9] {
        let pairs = enumerate_tilings(s, size, 25)?;
        let (mut on_e, mut on_a) = (0, 0);
        for pair in &pairs {
            match graphical_check(&pair.e, &pair.a)? {
                Graphical::EIsGraph { .. } => on_e += 1,
                Graphical::AIsGraph { .. } => on_a += 1,
                other => panic!("not graphical: {other:?}"),
            }
        }
        println!(
            "|E| = {size}: {} tilings, E is a graph in {on_e}, only A in {on_a}",
            pairs.len()
        );
    }
    Ok(())
}

fn main() {
    run_example().expect("graphical tilings example");
}
