// Circles in F_p^2, the intersection count mu, and admissible distances.
//
//     cargo run --example circle_intersections

use fftile::ffvec::{norm, PrimeModulus, Space};
use fftile::packing::{admissible_set, circle_intersection_mu, circle_points, Circle};

pub fn run_example() -> fftile::Result<()> {
    for p in [3u64, 5, 7] {
        let m = PrimeModulus::new(p)?;
        let s = Space::new(m, 2)?;
        let c = m.scalar(1);
        let unit = circle_points(&Circle::new(s.zero(), c)?)?;
        println!("p = {p}: unit circle has {} points, S = {:?}", unit.len(), admissible_set(c)?.members);
        for x in s.points().filter(|x| !norm(x).is_zero()).take(6) {
            let direct = unit.intersection(&unit.translate(&x)).len();
            let mu = circle_intersection_mu(c, norm(&x))?;
            println!("  centre {x}: |C cap C'| = {direct}, mu = {mu}");
            assert_eq!(direct, mu as usize);
        }
    }
    Ok(())
}

fn main() {
    run_example().expect("circle example");
}
