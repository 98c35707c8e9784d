// Hyperplane averages mu_m, their variance Tr(|f^(m)|^2), and the
// decomposition of the mean square over all directions.
//
//     cargo run --example hyperplane_variance

use fftile::cyclotomic::rational;
use fftile::ffvec::{directions, PrimeModulus, Space};
use fftile::fourier::{hyperplane_stats, trace_identity, variance_decomposition, RationalFunction};

pub fn run_example() -> fftile::Result<()> {
    let s = Space::new(PrimeModulus::new(3)?, 2)?;
    let values = [(1, 2), (0, 1), (-3, 1), (2, 3), (1, 1), (0, 1), (0, 1), (5, 7), (1, 1)]
        .iter()
        .map(|&(n, d)| rational(n, d))
        .collect();
    let f = RationalFunction::new(s, values)?;
    for m in directions(s.modulus(), 2) {
        let st = hyperplane_stats(&f, &m)?;
        let tr = trace_identity(&f, &m)?;
        println!(
            "m = {m}: averages {:?}, Var = {} = Tr|f^|^2 = {}, orbit sum {}",
            st.averages.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
            st.variance,
            st.trace_abs_sq,
            tr.orbit_sum
        );
    }
    let (lhs, rhs) = variance_decomposition(&f)?;
    println!("mean square {lhs} = mu^2 + sum Var {rhs}");
    Ok(())
}

fn main() {
    run_example().expect("hyperplane variance example");
}
