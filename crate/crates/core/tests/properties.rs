use fftile::ffvec::{directions, FpVector, PointSet, PrimeModulus, Space};
use fftile::fourier::{dft, inverse_dft, set_coefficient, tiling_fourier_check, RationalFunction};
use fftile::polyring::tiling_poly_check;
use fftile::tiling::{
    decompose_k_tiling, find_tiling_partner, graph_along, tiling_direct_check, KTilingStructure,
};
use proptest::prelude::*;

fn space(p: u64, d: usize) -> Space {
    Space::new(PrimeModulus::new(p).unwrap(), d).unwrap()
}

fn arb_case() -> impl Strategy<Value = (Space, Vec<usize>, Vec<usize>)> {
    (prop::sample::select(vec![(3u64, 1usize), (3, 2), (5, 1), (5, 2), (7, 1)])).prop_flat_map(|(p, d)| {
        let s = space(p, d);
        let n = s.size();
        (
            Just(s),
            prop::collection::vec(0..n, 1..=n),
            prop::collection::vec(0..n, 1..=n),
        )
    })
}

/// A graph over a random direction of `F_5^2`, plus a vertical shift list.
fn arb_graph() -> impl Strategy<Value = (usize, Vec<u64>)> {
    (0usize..6, prop::collection::vec(0u64..5, 5))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn oracles_agree((s, ei, ai) in arb_case(), k in 1u64..4) {
        let e = PointSet::from_indices(s, ei);
        let a = PointSet::from_indices(s, ai);
        let direct = tiling_direct_check(&e, &a, k).unwrap().holds;
        prop_assert_eq!(tiling_fourier_check(&e, &a, k).unwrap(), direct);
        prop_assert_eq!(tiling_poly_check(&e, &a, k).unwrap(), direct);
        // roles of E and A are symmetric
        prop_assert_eq!(tiling_direct_check(&a, &e, k).unwrap().holds, direct);
    }

    #[test]
    fn translation_invariance((s, ei, ai) in arb_case(), shift in 0usize..49) {
        let e = PointSet::from_indices(s, ei);
        let a = PointSet::from_indices(s, ai);
        let v = s.point(shift % s.size());
        let moved = e.translate(&v);
        for m in s.points() {
            prop_assert_eq!(set_coefficient(&e, &m).abs_sq(), set_coefficient(&moved, &m).abs_sq());
        }
        let k = (e.len() * a.len() / s.size()).max(1) as u64;
        prop_assert_eq!(
            tiling_direct_check(&moved, &a, k).unwrap().holds,
            tiling_direct_check(&e, &a, k).unwrap().holds
        );
    }

    #[test]
    fn dft_inverts((s, ei, _) in arb_case()) {
        let f = RationalFunction::indicator(&PointSet::from_indices(s, ei));
        prop_assert_eq!(inverse_dft(&dft(&f)).unwrap(), f);
    }

    #[test]
    fn graphs_tile_and_decompose((dir, f) in arb_graph(), extra in 0usize..5) {
        let s = space(5, 2);
        let pm = s.modulus();
        let m = directions(pm, 2)[dir].clone();
        let v = s.points().find(|v| v.dot(&m).value() == 1).unwrap();
        let w = FpVector::from_residues(pm, vec![pm.neg(m.coords()[1]), m.coords()[0]]).unwrap();
        let e = PointSet::from_points(s, (0..5).map(|t| &v.scale(t) + &w.scale(f[t as usize]))).unwrap();
        let witness = graph_along(&e, &m).unwrap().unwrap();
        prop_assert_eq!(witness.reconstruct().unwrap(), e.clone());
        let a = find_tiling_partner(&e).unwrap().unwrap();
        prop_assert!(tiling_direct_check(&e, &a, 1).unwrap().holds);

        // two disjoint translates form a 2-tile made of graphs, s | k
        let shifts: Vec<&FpVector> = a.iter().collect();
        let doubled = e.translate(shifts[0]).union(&e.translate(shifts[1 + extra % 4]));
        prop_assert_eq!(doubled.len(), 10);
        match decompose_k_tiling(&doubled, &a, 2).unwrap() {
            KTilingStructure::Graphs(dec) => {
                prop_assert_eq!(dec.s, 2);
                let mut union = PointSet::empty(s);
                for part in &dec.parts {
                    union = union.union(&part.reconstruct().unwrap());
                }
                prop_assert_eq!(union, doubled);
            }
            other => prop_assert!(false, "unexpected {:?}", other),
        }
    }
}
