// Three independent tests of a k-tiling: coverage counting, vanishing of
// Fourier coefficients, and the identity in the quotient polynomial ring.
//
//     cargo run --example tiling_check

use fftile::ffvec::{PointSet, PrimeModulus, Space};
use fftile::fourier::tiling_fourier_check;
use fftile::polyring::tiling_poly_check;
use fftile::tiling::tiling_direct_check;

pub fn run_example() -> fftile::Result<()> {
    let z5 = Space::new(PrimeModulus::new(5)?, 1)?;
    let e = PointSet::from_coords(z5, &[&[0], &[1], &[2]])?;
    let a = PointSet::full(z5);
    for k in 1..=4 {
        let direct = tiling_direct_check(&e, &a, k)?;
        let fourier = tiling_fourier_check(&e, &a, k)?;
        let poly = tiling_poly_check(&e, &a, k)?;
        println!(
            "E = {{0,1,2}}, A = Z_5, k = {k}: direct {} fourier {fourier} poly {poly}  coverage {:?}",
            direct.holds, direct.histogram
        );
        assert!(direct.holds == fourier && fourier == poly);
    }

    let plane = Space::new(PrimeModulus::new(3)?, 2)?;
    let h = PointSet::from_coords(plane, &[&[0, 0], &[1, 0], &[2, 0]])?;
    let h_perp = PointSet::from_coords(plane, &[&[0, 0], &[0, 1], &[0, 2]])?;
    println!(
        "line and its orthogonal complement in F_3^2 tile: {}",
        tiling_direct_check(&h, &h_perp, 1)?.holds
    );
    Ok(())
}

fn main() {
    run_example().expect("tiling check example");
}
