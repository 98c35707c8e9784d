// In F_p^d, d >= 4, every translate of a sphere meets it, so the sphere
// packs only once.
//
//     cargo run --example sphere_packing

use fftile::ffvec::PrimeModulus;
use fftile::packing::{sphere_pack_check, SphereCheck};

pub fn run_example() -> fftile::Result<()> {
    for (p, d, t) in [(3u64, 4usize, 1u64), (3, 4, 2), (5, 4, 1)] {
        match sphere_pack_check(PrimeModulus::new(p)?.scalar(t), d, false)? {
            SphereCheck::SizeOne { sphere_size, shifts, .. } => println!(
                "p = {p}, d = {d}, t = {t}: |S_t| = {sphere_size}, all {} shifts meet it",
                shifts.len()
            ),
            SphereCheck::Counterexample { shift } => println!("shift {shift:?} misses S_t"),
        }
    }
    // the plane behaves differently
    let plane = sphere_pack_check(PrimeModulus::new(5)?.scalar(1), 2, true)?;
    println!("p = 5, d = 2: {:?}", plane.max_packing());
    Ok(())
}

fn main() {
    run_example().expect("sphere example");
}
