//! Circles in `F_p^2`, their intersection counts, and packings of circles,
//! spheres and arbitrary sets by translates.
//!
//! Radii and distances are squared: `C_R(u) = { x : ||x - u|| = R }`.

pub mod clique;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffvec::{
    difference_set, is_nonzero_square, norm, sqrt, sqrt_minus_one, FpScalar, FpVector, PointSet,
    PrimeModulus, Space,
};
use clique::{first_clique_through, max_clique_through, Graph};

pub use clique::DEFAULT_NODE_BUDGET;

fn odd(p: PrimeModulus) -> Result<()> {
    if p.is_odd() {
        Ok(())
    } else {
        Err(Error::EvenCharacteristic(p.get()))
    }
}

fn plane(p: PrimeModulus) -> Result<Space> {
    Space::new(p, 2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circle {
    pub center: FpVector,
    pub radius: FpScalar,
}

impl Circle {
    pub fn new(center: FpVector, radius: FpScalar) -> Result<Self> {
        if center.modulus() != radius.modulus() {
            return Err(Error::ModulusMismatch {
                left: center.modulus().get(),
                right: radius.modulus().get(),
            });
        }
        if center.dim() != 2 {
            return Err(Error::UnsupportedDim { d: center.dim() });
        }
        Ok(Circle { center, radius })
    }
}

/// Solves `(y - v)^2 = R - (x - u)^2` for every `x`.
pub fn circle_points(circle: &Circle) -> Result<PointSet> {
    let p = circle.center.modulus();
    odd(p)?;
    let space = plane(p)?;
    let (u, v) = (circle.center.coords()[0], circle.center.coords()[1]);
    let mut pts = Vec::new();
    for x in 0..p.get() {
        let dx = p.sub(x, u);
        let rhs = p.scalar(p.sub(circle.radius.value(), p.mul(dx, dx)));
        if let Some(r) = sqrt(rhs) {
            for y in [p.add(v, r.value()), p.sub(v, r.value())] {
                pts.push(FpVector::from_residues(p, vec![x, y])?);
            }
        }
    }
    PointSet::from_points(space, pts)
}

fn trichotomy(f: FpScalar) -> u8 {
    if f.is_zero() {
        1
    } else if is_nonzero_square(f) {
        2
    } else {
        0
    }
}

/// Number of triangles with base `l1` and the other sides `l2`, `l3`, read
/// off from `4 s2 - s1^2`.
pub fn triangle_count(l1: FpScalar, l2: FpScalar, l3: FpScalar) -> Result<u8> {
    let p = l1.modulus();
    odd(p)?;
    if l1.is_zero() {
        return Err(Error::ZeroBase);
    }
    let s1 = l1 + l2 + l3;
    let s2 = l1 * l2 + l2 * l3 + l3 * l1;
    let four = p.scalar(4 % p.get());
    Ok(trichotomy(four * s2 - s1 * s1))
}

/// Intersection size of two radius-`c` circles whose centres are at
/// distance `r != 0`, by the trichotomy on `r (4c - r)`.
pub fn circle_intersection_mu(c: FpScalar, r: FpScalar) -> Result<u8> {
    let p = c.modulus();
    odd(p)?;
    if c.is_zero() {
        return Err(Error::ZeroRadius);
    }
    if r.is_zero() {
        return Err(Error::ZeroDistance);
    }
    let four = p.scalar(4 % p.get());
    Ok(trichotomy(r * (four * c - r)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibleSet {
    pub p: u64,
    pub c: u64,
    pub members: Vec<u64>,
}

impl AdmissibleSet {
    pub fn contains(&self, r: u64) -> bool {
        self.members.binary_search(&r).is_ok()
    }
}

/// Distances `R != 0` at which radius-`c` circles are disjoint.
pub fn admissible_set(c: FpScalar) -> Result<AdmissibleSet> {
    let p = c.modulus();
    let mut members = Vec::new();
    for r in 1..p.get() {
        if circle_intersection_mu(c, p.scalar(r))? == 0 {
            members.push(r);
        }
    }
    Ok(AdmissibleSet {
        p: p.get(),
        c: c.value(),
        members,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PackingKind {
    SimplexSearch,
    Isotropic,
    CliqueOptimal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PackingMode {
    NonzeroDistanceOnly,
    Full,
}

/// Why two packed circles miss each other.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairWitness {
    pub i: usize,
    pub j: usize,
    pub distance: u64,
    /// `None` when the distance is zero and disjointness was checked on the
    /// point sets.
    pub mu: Option<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingResult {
    pub p: u64,
    pub radius: u64,
    pub kind: PackingKind,
    pub centers: Vec<Vec<u64>>,
    /// Realised circles were re-checked pairwise disjoint point by point.
    pub certified: bool,
    pub witnesses: Vec<PairWitness>,
}

impl PackingResult {
    pub fn size(&self) -> usize {
        self.centers.len()
    }

    /// Independent re-check on the realised point sets.
    pub fn verify(&self) -> Result<bool> {
        let p = PrimeModulus::new(self.p)?;
        let c = p.scalar(self.radius % self.p);
        if c.is_zero() {
            return Err(Error::ZeroRadius);
        }
        let mut circles = Vec::with_capacity(self.centers.len());
        for ctr in &self.centers {
            let center = FpVector::from_residues(p, ctr.clone())?;
            circles.push(circle_points(&Circle::new(center, c)?)?);
        }
        Ok(pairwise_disjoint(&circles))
    }
}

fn pairwise_disjoint(sets: &[PointSet]) -> bool {
    sets.iter()
        .enumerate()
        .all(|(i, a)| sets[i + 1..].iter().all(|b| a.is_disjoint(b)))
}

fn build_result(
    c: FpScalar,
    kind: PackingKind,
    centers: Vec<FpVector>,
) -> Result<PackingResult> {
    let p = c.modulus();
    let mut witnesses = Vec::new();
    for i in 0..centers.len() {
        for j in i + 1..centers.len() {
            let r = norm(&(&centers[i] - &centers[j]));
            let mu = if r.is_zero() {
                None
            } else {
                Some(circle_intersection_mu(c, r)?)
            };
            witnesses.push(PairWitness {
                i,
                j,
                distance: r.value(),
                mu,
            });
        }
    }
    let mut result = PackingResult {
        p: p.get(),
        radius: c.value(),
        kind,
        centers: centers.iter().map(|x| x.coords().to_vec()).collect(),
        certified: false,
        witnesses,
    };
    result.certified = result.verify()?;
    if !result.certified {
        return Err(Error::InternalContradiction(
            "packing search returned intersecting circles".into(),
        ));
    }
    Ok(result)
}

/// Disjointness graph on all `p^2` centres.
fn circle_graph(c: FpScalar, mode: PackingMode) -> Result<(Space, Graph)> {
    let p = c.modulus();
    odd(p)?;
    if c.is_zero() {
        return Err(Error::ZeroRadius);
    }
    let space = plane(p)?;
    let admissible = admissible_set(c)?;
    let origin_circle = circle_points(&Circle::new(space.zero(), c)?)?;
    let n = space.size();
    let g = Graph::from_predicate(n, |i, j| {
        let diff = space.point(space.sub_index(j, i));
        let r = norm(&diff).value();
        if r != 0 {
            admissible.contains(r)
        } else {
            mode == PackingMode::Full && origin_circle.is_disjoint(&origin_circle.translate(&diff))
        }
    });
    Ok((space, g))
}

/// The lexicographically least `k` pairwise disjoint radius-`c` circles
/// with the first centred at the origin, if they exist. With `allow_zero_distance`, centres at distance 0
/// are allowed when their circles are disjoint as point sets.
pub fn pack_circles(
    c: FpScalar,
    k: usize,
    allow_zero_distance: bool,
    budget: u64,
) -> Result<Option<PackingResult>> {
    let mode = if allow_zero_distance {
        PackingMode::Full
    } else {
        PackingMode::NonzeroDistanceOnly
    };
    let (space, g) = circle_graph(c, mode)?;
    match first_clique_through(&g, 0, k, budget)? {
        Some(clique) => {
            let centers = clique.iter().map(|&i| space.point(i)).collect();
            Ok(Some(build_result(c, PackingKind::SimplexSearch, centers)?))
        }
        None => Ok(None),
    }
}

/// Exact `P(p, c)`: the maximum clique of the disjointness graph, with one
/// centre pinned at the origin by translation symmetry.
pub fn packing_number(c: FpScalar, mode: PackingMode, budget: u64) -> Result<PackingResult> {
    let (space, g) = circle_graph(c, mode)?;
    let best = max_clique_through(&g, 0, budget, None)?;
    let centers = best.clique.iter().map(|&i| space.point(i)).collect();
    build_result(c, PackingKind::CliqueOptimal, centers)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsotropicPacking {
    pub packing: PackingResult,
    /// The `i` with `i^2 = -1` spanning the line of centres `(t, i t)`.
    pub i: u64,
    pub complement: Vec<Vec<u64>>,
    pub complement_is_line: bool,
}

/// `p` circles centred on the isotropic line `{(t, i t)}`, for `p = 1 mod 4`.
pub fn isotropic_pack(c: FpScalar) -> Result<IsotropicPacking> {
    let p = c.modulus();
    odd(p)?;
    if c.is_zero() {
        return Err(Error::ZeroRadius);
    }
    let i = sqrt_minus_one(p).ok_or(Error::BadResidue { p: p.get() })?;
    let space = plane(p)?;
    let centers: Vec<FpVector> = (0..p.get())
        .map(|t| FpVector::from_residues(p, vec![t, p.mul(i, t)]))
        .collect::<Result<_>>()?;
    let line = PointSet::from_points(space, centers.clone())?;
    let packing = build_result(c, PackingKind::Isotropic, centers.clone())?;
    let mut union = PointSet::empty(space);
    for ctr in centers {
        union = union.union(&circle_points(&Circle::new(ctr, c)?)?);
    }
    let complement = union.complement();
    Ok(IsotropicPacking {
        packing,
        i,
        complement_is_line: complement == line,
        complement: complement.iter().map(|x| x.coords().to_vec()).collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum SphereCheck {
    /// Every nonzero shift meets the sphere; `witnesses[k]` is a point `y`
    /// of the sphere with `y + shifts[k]` also on it.
    SizeOne {
        sphere_size: usize,
        shifts: Vec<Vec<u64>>,
        witnesses: Vec<Vec<u64>>,
    },
    Counterexample { shift: Vec<u64> },
}

impl SphereCheck {
    pub fn max_packing(&self) -> Option<usize> {
        match self {
            SphereCheck::SizeOne { .. } => Some(1),
            SphereCheck::Counterexample { .. } => None,
        }
    }
}

/// Brute-force check that no translate of `S_t = { x : x.x = t }` in
/// `F_p^d` misses `S_t`. Dimensions below 4 need `exploratory`.
pub fn sphere_pack_check(t: FpScalar, d: usize, exploratory: bool) -> Result<SphereCheck> {
    let p = t.modulus();
    if d < 4 && !exploratory {
        return Err(Error::UnsupportedDim { d });
    }
    if t.is_zero() {
        return Err(Error::ZeroRadius);
    }
    let space = Space::new(p, d)?;
    let sphere: Vec<usize> = space
        .points()
        .enumerate()
        .filter(|(_, x)| norm(x) == t)
        .map(|(i, _)| i)
        .collect();
    let mut witness: Vec<Option<usize>> = vec![None; space.size()];
    for &x in &sphere {
        for &y in &sphere {
            let shift = space.sub_index(x, y);
            witness[shift].get_or_insert(y);
        }
    }
    let mut shifts = Vec::new();
    let mut witnesses = Vec::new();
    for (v, w) in witness.iter().enumerate().skip(1) {
        match w {
            Some(y) => {
                shifts.push(space.point(v).coords().to_vec());
                witnesses.push(space.point(*y).coords().to_vec());
            }
            None => {
                return Ok(SphereCheck::Counterexample {
                    shift: space.point(v).coords().to_vec(),
                })
            }
        }
    }
    Ok(SphereCheck::SizeOne {
        sphere_size: sphere.len(),
        shifts,
        witnesses,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetPacking {
    pub shifts: Vec<Vec<u64>>,
    /// `|E| |A| / p^d` as `num/den`.
    pub density: String,
}

/// Largest `A` with the translates `E + a` pairwise disjoint: a maximum
/// clique in the graph joining `a, a'` when `a - a'` avoids `E - E`.
pub fn optimal_packing_set(e: &PointSet, budget: u64) -> Result<(PointSet, BigRational)> {
    if e.is_empty() {
        return Err(Error::EmptySet);
    }
    let space = e.space();
    let diffs = difference_set(e);
    let forbidden: Vec<bool> = space.points().map(|x| diffs.contains(&x)).collect();
    let g = Graph::from_predicate(space.size(), |i, j| !forbidden[space.sub_index(j, i)]);
    let best = max_clique_through(&g, 0, budget, None)?;
    let a = PointSet::from_indices(space, best.clique);
    let translates: Vec<PointSet> = a.iter().map(|x| e.translate(x)).collect();
    if !pairwise_disjoint(&translates) {
        return Err(Error::InternalContradiction(
            "packing set has overlapping translates".into(),
        ));
    }
    let density = BigRational::new(
        BigInt::from(e.len() * a.len()),
        BigInt::from(space.size()),
    );
    Ok((a, density))
}

impl SetPacking {
    pub fn new(a: &PointSet, density: &BigRational) -> Self {
        SetPacking {
            shifts: a.iter().map(|x| x.coords().to_vec()).collect(),
            density: density.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffvec::square_class;
    use crate::tiling::tiling_direct_check;
    use proptest::prelude::*;

    fn pm(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn circle(p: u64, center: &[i64], r: u64) -> PointSet {
        let p = pm(p);
        circle_points(&Circle::new(FpVector::new(p, center), p.scalar(r)).unwrap()).unwrap()
    }

    #[test]
    fn circle_examples() {
        let s3 = plane(pm(3)).unwrap();
        assert_eq!(
            circle(3, &[0, 0], 1),
            PointSet::from_coords(s3, &[&[0, 1], &[0, 2], &[1, 0], &[2, 0]]).unwrap()
        );
        assert_eq!(circle(5, &[0, 0], 1).len(), 4);
        assert_eq!(circle(5, &[0, 0], 0).len(), 9);
        assert_eq!(circle(3, &[1, 2], 0).len(), 1);
    }

    #[test]
    fn circle_sizes() {
        for p in [3u64, 5, 7, 11, 13] {
            let expected = if p % 4 == 1 { p - 1 } else { p + 1 };
            for r in 1..p {
                assert_eq!(circle(p, &[2, 1], r).len() as u64, expected, "p={p} r={r}");
            }
        }
    }

    fn brute_triangles(l1: FpScalar, l2: FpScalar, l3: FpScalar) -> u8 {
        // apex positions over a fixed base of squared length l1
        let p = l1.modulus();
        let s = plane(p).unwrap();
        let b = s
            .points()
            .find(|x| norm(x) == l1)
            .expect("nonzero lengths are represented in the plane");
        s.points()
            .filter(|x| norm(x) == l3 && norm(&(x - &b)) == l2)
            .count() as u8
    }

    #[test]
    fn triangle_examples() {
        let p = pm(5);
        let s = |v| p.scalar(v);
        assert_eq!(triangle_count(s(1), s(1), s(1)).unwrap(), 0);
        assert_eq!(triangle_count(s(1), s(1), s(4)).unwrap(), 1);
        assert_eq!(triangle_count(s(0), s(1), s(1)), Err(Error::ZeroBase));
        for c in 1..5 {
            for r in 1..5 {
                assert_eq!(
                    triangle_count(s(c), s(c), s(r)).unwrap(),
                    circle_intersection_mu(s(c), s(r)).unwrap()
                );
            }
        }
    }

    #[test]
    fn triangle_count_matches_enumeration() {
        for pv in [3u64, 5, 7] {
            let p = pm(pv);
            for l1 in 1..pv {
                for l2 in 0..pv {
                    for l3 in 0..pv {
                        let (a, b, c) = (p.scalar(l1), p.scalar(l2), p.scalar(l3));
                        assert_eq!(triangle_count(a, b, c).unwrap(), brute_triangles(a, b, c));
                    }
                }
            }
        }
    }

    #[test]
    fn mu_examples() {
        let s3 = |v| pm(3).scalar(v);
        let s5 = |v| pm(5).scalar(v);
        assert_eq!(circle_intersection_mu(s3(1), s3(2)).unwrap(), 2);
        assert_eq!(circle_intersection_mu(s5(1), s5(4)).unwrap(), 1);
        assert_eq!(circle_intersection_mu(s5(1), s5(1)).unwrap(), 0);
        assert_eq!(circle_intersection_mu(s5(1), s5(0)), Err(Error::ZeroDistance));
        assert_eq!(circle_intersection_mu(s5(0), s5(1)), Err(Error::ZeroRadius));
    }

    #[test]
    fn mu_matches_geometry() {
        for pv in [3u64, 5, 7] {
            let p = pm(pv);
            let s = plane(p).unwrap();
            for c in 1..pv {
                let base = circle(pv, &[0, 0], c);
                for x in s.points().filter(|x| !norm(x).is_zero()) {
                    let other = base.translate(&x);
                    let mu = circle_intersection_mu(p.scalar(c), norm(&x)).unwrap();
                    assert_eq!(base.intersection(&other).len(), mu as usize);
                }
            }
        }
    }

    #[test]
    fn admissible_examples() {
        let members = |p, c| admissible_set(pm(p).scalar(c)).unwrap().members;
        assert!(members(3, 1).is_empty());
        assert!(members(3, 2).is_empty());
        assert_eq!(members(5, 1), vec![1, 3]);
        for r in members(7, 3) {
            let p = pm(7);
            let f = p.scalar(r) * (p.scalar(12) - p.scalar(r));
            assert_eq!(square_class(f), crate::ffvec::SquareClass::Nonsquare);
        }
    }

    #[test]
    fn admissible_scaling() {
        for pv in [5u64, 7, 11, 13] {
            let p = pm(pv);
            for c in 1..pv {
                let base = admissible_set(p.scalar(c)).unwrap();
                for m in 1..pv {
                    let m2 = p.mul(m, m);
                    let scaled = admissible_set(p.scalar(p.mul(m2, c))).unwrap();
                    let mut expect: Vec<u64> = base.members.iter().map(|&r| p.mul(m2, r)).collect();
                    expect.sort_unstable();
                    assert_eq!(scaled.members, expect);
                }
            }
        }
    }

    #[test]
    fn pack_examples() {
        let b = DEFAULT_NODE_BUDGET;
        assert_eq!(pack_circles(pm(3).scalar(1), 2, false, b).unwrap(), None);
        let two = pack_circles(pm(5).scalar(1), 2, false, b).unwrap().unwrap();
        assert_eq!(two.centers, vec![vec![0, 0], vec![0, 1]]);
        assert_eq!(two.witnesses[0].distance, 1);
        let five = pack_circles(pm(5).scalar(1), 5, true, b).unwrap().unwrap();
        assert!(five.certified);
        assert_eq!(five.size(), 5);
    }

    #[test]
    fn packing_numbers_small() {
        let b = DEFAULT_NODE_BUDGET;
        assert_eq!(packing_number(pm(3).scalar(1), PackingMode::Full, b).unwrap().size(), 1);
        assert_eq!(packing_number(pm(3).scalar(2), PackingMode::Full, b).unwrap().size(), 1);
        let p5 = packing_number(pm(5).scalar(1), PackingMode::Full, b).unwrap();
        assert!((5..=6).contains(&p5.size()));
    }

    #[test]
    fn packing_number_scaling() {
        let b = DEFAULT_NODE_BUDGET;
        for pv in [5u64, 7] {
            let p = pm(pv);
            for mode in [PackingMode::Full, PackingMode::NonzeroDistanceOnly] {
                let base = packing_number(p.scalar(1), mode, b).unwrap().size();
                for m in 2..pv {
                    let c = p.mul(m, m);
                    assert_eq!(packing_number(p.scalar(c), mode, b).unwrap().size(), base);
                }
            }
        }
    }

    #[test]
    fn isotropic_examples() {
        let iso = isotropic_pack(pm(5).scalar(1)).unwrap();
        assert_eq!(iso.i, 2);
        assert_eq!(iso.packing.size(), 5);
        assert!(iso.packing.certified && iso.complement_is_line);
        assert_eq!(iso.complement, vec![vec![0, 0], vec![1, 2], vec![2, 4], vec![3, 1], vec![4, 3]]);
        let iso = isotropic_pack(pm(13).scalar(1)).unwrap();
        assert_eq!(iso.i, 5);
        assert_eq!(iso.complement.len(), 13);
        assert!(iso.complement_is_line);
        assert!(isotropic_pack(pm(5).scalar(3)).unwrap().complement_is_line);
        assert_eq!(isotropic_pack(pm(7).scalar(1)), Err(Error::BadResidue { p: 7 }));
    }

    #[test]
    fn sphere_examples() {
        for (p, d, t) in [(3u64, 4usize, 1u64), (3, 4, 2), (5, 4, 1)] {
            let r = sphere_pack_check(pm(p).scalar(t), d, false).unwrap();
            assert_eq!(r.max_packing(), Some(1), "{p} {d} {t}");
        }
        assert_eq!(
            sphere_pack_check(pm(3).scalar(1), 2, false),
            Err(Error::UnsupportedDim { d: 2 })
        );
        // unit circles over F_3 always meet, over F_5 they need not
        let r = sphere_pack_check(pm(3).scalar(1), 2, true).unwrap();
        assert_eq!(r.max_packing(), Some(1));
        let r = sphere_pack_check(pm(5).scalar(1), 2, true).unwrap();
        assert_eq!(r, SphereCheck::Counterexample { shift: vec![0, 1] });
    }

    #[test]
    fn packing_set_examples() {
        let b = DEFAULT_NODE_BUDGET;
        let s3 = plane(pm(3)).unwrap();
        let (a, density) = optimal_packing_set(&PointSet::full(s3), b).unwrap();
        assert_eq!(a.len(), 1);
        assert_eq!(density, BigRational::from_integer(1.into()));

        let h = PointSet::from_coords(s3, &[&[0, 0], &[1, 0], &[2, 0]]).unwrap();
        let (a, density) = optimal_packing_set(&h, b).unwrap();
        assert_eq!(a.len(), 3);
        assert!(tiling_direct_check(&h, &a, 1).unwrap().holds);
        assert_eq!(density, BigRational::from_integer(1.into()));

        let z5 = Space::new(pm(5), 1).unwrap();
        let e = PointSet::from_coords(z5, &[&[0], &[1]]).unwrap();
        let (a, density) = optimal_packing_set(&e, b).unwrap();
        assert_eq!(a.len(), 2);
        assert_eq!(density, BigRational::new(4.into(), 5.into()));
    }

    proptest! {
        #[test]
        fn packing_sets_are_disjoint(bits in 1u32..(1 << 9)) {
            let s3 = plane(pm(3)).unwrap();
            let e = PointSet::from_indices(s3, (0..9).filter(|i| bits >> i & 1 == 1));
            let (a, density) = optimal_packing_set(&e, DEFAULT_NODE_BUDGET).unwrap();
            let tiles = crate::tiling::find_tiling_partner(&e).unwrap().is_some();
            prop_assert_eq!(density == BigRational::from_integer(1.into()), tiles);
            for x in a.iter() {
                for y in a.iter().filter(|y| *y != x) {
                    prop_assert!(e.translate(x).is_disjoint(&e.translate(y)));
                }
            }
        }
    }
}
