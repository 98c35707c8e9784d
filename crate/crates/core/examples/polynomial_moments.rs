// The tiling identity in (Z/pZ)[z]/(z_i^p - 1) and its first two moments.
//
//     cargo run --example polynomial_moments

use fftile::ffvec::{PointSet, PrimeModulus, Space};
use fftile::polyring::{
    encode_set, moment_identity_first, moment_identity_second, ring_mul, tiling_poly_check,
};

pub fn run_example() -> fftile::Result<()> {
    let s = Space::new(PrimeModulus::new(5)?, 2)?;
    let e = PointSet::from_points(s, (0..5).map(|t| s.vector(&[t, t * t]).unwrap()))?;
    let a = PointSet::span(s, &[s.vector(&[0, 1])?]);
    let product = ring_mul(&encode_set(&e), &encode_set(&a))?;
    println!("E(z) A(z) has coefficients {:?}", product.coeffs());
    println!("identity holds: {}", tiling_poly_check(&e, &a, 1)?);
    println!("first moment: {}", moment_identity_first(&e, &a)?);
    for axis in 0..2 {
        println!("second moment, axis {axis}: {}", moment_identity_second(&e, &a, axis)?.value());
    }

    let z5 = Space::new(PrimeModulus::new(5)?, 1)?;
    let gap = PointSet::from_coords(z5, &[&[0], &[2]])?;
    let pair = PointSet::from_coords(z5, &[&[0], &[1]])?;
    println!("non-tiling {{0,2}}, {{0,1}}: first moment {}", moment_identity_first(&gap, &pair)?);
    Ok(())
}

fn main() {
    run_example().expect("polynomial example");
}
