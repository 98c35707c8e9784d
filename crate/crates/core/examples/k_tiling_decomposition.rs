// A k-tiling tile of the plane splits into s disjoint graphs with s | k.
//
//     cargo run --example k_tiling_decomposition

use fftile::ffvec::{PointSet, PrimeModulus, Space};
use fftile::tiling::{decompose_k_tiling, KTilingStructure};

pub fn run_example() -> fftile::Result<()> {
    let s = Space::new(PrimeModulus::new(5)?, 2)?;
    // two parabolas shifted apart, tiling at level 2 by a vertical line
    let e = PointSet::from_points(
        s,
        (0..5).flat_map(|t| [s.vector(&[t, t * t]).unwrap(), s.vector(&[t, t * t + 2]).unwrap()]),
    )?;
    let a = PointSet::span(s, &[s.vector(&[0, 1])?]);
    match decompose_k_tiling(&e, &a, 2)? {
        KTilingStructure::Graphs(dec) => {
            println!("direction {:?}, s = {}", dec.direction, dec.s);
            for (j, part) in dec.parts.iter().enumerate() {
                println!("  part {j}: f = {:?}", part.polynomial);
            }
        }
        other => println!("{other:?}"),
    }
    Ok(())
}

fn main() {
    run_example().expect("decomposition example");
}
