// For p = 1 mod 4, circles centred on an isotropic line pack, and what they
// leave uncovered is that line.
//
//     cargo run --example isotropic_packing

use fftile::ffvec::PrimeModulus;
use fftile::packing::isotropic_pack;

pub fn run_example() -> fftile::Result<()> {
    for p in [5u64, 13, 17] {
        let m = PrimeModulus::new(p)?;
        for c in [1, 2] {
            let iso = isotropic_pack(m.scalar(c))?;
            println!(
                "p = {p}, c = {c}: i = {}, {} circles, disjoint {}, complement is the line {}",
                iso.i,
                iso.packing.size(),
                iso.packing.certified,
                iso.complement_is_line
            );
        }
    }
    Ok(())
}

fn main() {
    run_example().expect("isotropic example");
}
