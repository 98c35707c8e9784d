// Exact arithmetic in the cyclotomic field Q(xi_p).
//
//     cargo run --example cyclotomic_arithmetic

use fftile::cyclotomic::{rational, CycNum};
use fftile::ffvec::PrimeModulus;

pub fn run_example() -> fftile::Result<()> {
    let p = PrimeModulus::new(5)?;
    let xi = CycNum::from_power(p, 1);
    let x = &xi + &CycNum::from_rational(p, rational(1, 2));
    println!("x = {x}");
    println!("x * conj(x) = {}", x.abs_sq());
    println!("Tr(x) = {}", x.trace());
    println!("g_2(x) = {}", x.galois_apply(p.scalar(2))?);
    let sum = (0..5).fold(CycNum::zero(p), |acc, k| &acc + &CycNum::from_power(p, k));
    println!("1 + xi + ... + xi^4 = {sum}");
    Ok(())
}

fn main() {
    run_example().expect("cyclotomic example");
}
