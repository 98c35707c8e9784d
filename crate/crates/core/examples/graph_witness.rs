// Graph detection and the classification of 1-tilings of the plane.
//
//     cargo run --example graph_witness

use fftile::ffvec::{PointSet, PrimeModulus, Space};
use fftile::tiling::{
    classify_1_tiling, graph_tiling_partner, is_graph, tiling_direct_check, PlaneClassification,
};

pub fn run_example() -> fftile::Result<()> {
    let s = Space::new(PrimeModulus::new(5)?, 2)?;

    let parabola = PointSet::from_points(s, (0..5).map(|t| s.vector(&[t, t * t]).unwrap()))?;
    let w = is_graph(&parabola)?.expect("a parabola is a graph");
    println!("parabola: {:?} basis {:?}, f = {:?}", w.kind, w.basis, w.polynomial);
    let partner = graph_tiling_partner(&w)?;
    println!("  tiles by {:?}", partner.indices());
    assert!(tiling_direct_check(&parabola, &partner, 1)?.holds);

    let scattered = PointSet::from_coords(s, &[&[0, 0], &[1, 1], &[2, 3], &[3, 1], &[2, 4]])?;
    println!("five scattered points are a graph: {}", is_graph(&scattered)?.is_some());

    // two isotropic lines of F_5^2 are complementary
    let e = PointSet::span(s, &[s.vector(&[1, 2])?]);
    let a = PointSet::span(s, &[s.vector(&[1, 3])?]);
    if let PlaneClassification::Graph { witness } = classify_1_tiling(&e, &a)? {
        println!("isotropic line: {:?} basis {:?}", witness.kind, witness.basis);
    }
    Ok(())
}

fn main() {
    run_example().expect("graph witness example");
}
