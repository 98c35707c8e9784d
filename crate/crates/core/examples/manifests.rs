// Reading and writing point-set and function manifests, and driving the
// command line from code.
//
//     cargo run --example manifests

use fftile::cli::run_captured;
use fftile::ffvec::{PointSet, PrimeModulus, Space};
use fftile::manifest::Manifest;

pub fn run_example() -> fftile::Result<()> {
    let s = Space::new(PrimeModulus::new(5)?, 2)?;
    let parabola = PointSet::from_points(s, (0..5).map(|t| s.vector(&[t, t * t]).unwrap()))?;
    let m = Manifest::from_set(&parabola);
    println!("{}", m.to_json());

    let dir = std::env::temp_dir().join(format!("fftile-manifests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| fftile::Error::Manifest(e.to_string()))?;
    let e_path = dir.join("parabola.json");
    let a_path = dir.join("axis.json");
    m.save(&e_path)?;
    Manifest::from_set(&PointSet::span(s, &[s.vector(&[0, 1])?])).save(&a_path)?;
    assert_eq!(Manifest::load(&e_path)?.to_set()?, parabola);

    let out = run_captured([
        "fftile", "tile", "verify", "--e", e_path.to_str().unwrap(), "--a",
        a_path.to_str().unwrap(), "--k", "1",
    ]);
    println!("fftile tile verify -> exit {}\n{}", out.code, out.stdout);
    std::fs::remove_dir_all(&dir).ok();
    Ok(())
}

fn main() {
    run_example().expect("manifest example");
}
