// Exact Fourier coefficients in Q(xi_p), their zeros, and Galois symmetry.
//
//     cargo run --example fourier_spectrum

use fftile::ffvec::{PointSet, PrimeModulus, Space};
use fftile::fourier::{dft, inverse_dft, phi_forward, phi_inverse, zero_set, RationalFunction};

pub fn run_example() -> fftile::Result<()> {
    let s = Space::new(PrimeModulus::new(5)?, 2)?;
    let parabola = PointSet::from_points(s, (0..5).map(|t| s.vector(&[t, t * t]).unwrap()))?;
    let f = RationalFunction::indicator(&parabola);
    let spectrum = dft(&f);
    println!("E^(0) = {}", spectrum.get(&s.zero()));
    println!("E^(0,1) = {}", spectrum.get(&s.vector(&[0, 1])?));
    println!("zeros: {:?}", zero_set(&spectrum).iter().map(|m| m.to_string()).collect::<Vec<_>>());
    println!("Galois symmetric: {}", spectrum.is_galois_symmetric());
    assert_eq!(inverse_dft(&spectrum)?, f);

    let image = phi_forward(&f);
    println!(
        "Phi keeps {} coefficients plus the average {}",
        image.coefficients.len(),
        image.average
    );
    assert_eq!(phi_inverse(s, &image)?, f);
    Ok(())
}

fn main() {
    run_example().expect("fourier example");
}
