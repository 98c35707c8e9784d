mod circle_intersections {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/circle_intersections.rs"));
}

#[test]
fn circle_intersections_runs() {
    circle_intersections::run_example().expect("circle_intersections should run");
}

mod cyclotomic_arithmetic {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cyclotomic_arithmetic.rs"));
}

#[test]
fn cyclotomic_arithmetic_runs() {
    cyclotomic_arithmetic::run_example().expect("cyclotomic_arithmetic should run");
}

mod fourier_spectrum {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/fourier_spectrum.rs"));
}

#[test]
fn fourier_spectrum_runs() {
    fourier_spectrum::run_example().expect("fourier_spectrum should run");
}

mod graph_witness {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/graph_witness.rs"));
}

#[test]
fn graph_witness_runs() {
    graph_witness::run_example().expect("graph_witness should run");
}

mod graphical_tilings {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/graphical_tilings.rs"));
}

#[test]
fn graphical_tilings_runs() {
    graphical_tilings::run_example().expect("graphical_tilings should run");
}

mod hyperplane_variance {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/hyperplane_variance.rs"));
}

#[test]
fn hyperplane_variance_runs() {
    hyperplane_variance::run_example().expect("hyperplane_variance should run");
}

mod isotropic_packing {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/isotropic_packing.rs"));
}

#[test]
fn isotropic_packing_runs() {
    isotropic_packing::run_example().expect("isotropic_packing should run");
}

mod k_tiling_decomposition {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/k_tiling_decomposition.rs"));
}

#[test]
fn k_tiling_decomposition_runs() {
    k_tiling_decomposition::run_example().expect("k_tiling_decomposition should run");
}

mod manifests {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/manifests.rs"));
}

#[test]
fn manifests_runs() {
    manifests::run_example().expect("manifests should run");
}

mod packing_numbers {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/packing_numbers.rs"));
}

#[test]
fn packing_numbers_runs() {
    packing_numbers::run_example().expect("packing_numbers should run");
}

mod packing_sets {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/packing_sets.rs"));
}

#[test]
fn packing_sets_runs() {
    packing_sets::run_example().expect("packing_sets should run");
}

mod polynomial_moments {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/polynomial_moments.rs"));
}

#[test]
fn polynomial_moments_runs() {
    polynomial_moments::run_example().expect("polynomial_moments should run");
}

mod sphere_packing {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/sphere_packing.rs"));
}

#[test]
fn sphere_packing_runs() {
    sphere_packing::run_example().expect("sphere_packing should run");
}

mod tiling_check {
    #![allow(dead_code)]
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/tiling_check.rs"));
}

#[test]
fn tiling_check_runs() {
    tiling_check::run_example().expect("tiling_check should run");
}
