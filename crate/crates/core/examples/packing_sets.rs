// Largest families of disjoint translates of an arbitrary set, and their
// density |E||A|/p^d.
//
//     cargo run --example packing_sets

use fftile::ffvec::{PointSet, PrimeModulus, Space};
use fftile::packing::{optimal_packing_set, DEFAULT_NODE_BUDGET};

pub fn run_example() -> fftile::Result<()> {
    let z5 = Space::new(PrimeModulus::new(5)?, 1)?;
    let pair = PointSet::from_coords(z5, &[&[0], &[1]])?;
    let (a, density) = optimal_packing_set(&pair, DEFAULT_NODE_BUDGET)?;
    println!("{{0,1}} in Z_5: shifts {:?}, density {density}", a.indices());

    let s = Space::new(PrimeModulus::new(3)?, 2)?;
    let corner = PointSet::from_coords(s, &[&[0, 0], &[1, 0], &[0, 1]])?;
    let (a, density) = optimal_packing_set(&corner, DEFAULT_NODE_BUDGET)?;
    println!("corner in F_3^2: shifts {:?}, density {density}", a.indices());
    Ok(())
}

fn main() {
    run_example().expect("packing set example");
}
