//! Translational tilings of `F_p^d`: direct coverage counting, graph
//! witnesses, and the structure theorems for the plane and 3-space.

mod graph;
mod search;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use graph::{
    eval_poly, graph_along, graph_by_projection, graph_tiling_partner, interpolate_poly,
    is_graph, BasisKind, GraphWitness,
};
pub use search::{enumerate_tilings, find_tiling_partner, TilingSearch};

use crate::error::{Error, Result};
use crate::ffvec::{directions, FpVector, PointSet};
use crate::fourier::hyperplane_counts;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingReport {
    pub holds: bool,
    pub level: u64,
    /// multiplicity -> number of points covered that many times
    pub histogram: BTreeMap<u64, u64>,
}

/// Counts `|{a in A : x - a in E}|` for every `x`.
pub fn coverage(e: &PointSet, a: &PointSet) -> Result<Vec<u64>> {
    e.check_same_space(a)?;
    let space = e.space();
    let mut counts = vec![0u64; space.size()];
    let ai = a.indices();
    for ei in e.indices() {
        for &aj in &ai {
            counts[space.add_index(ei, aj)] += 1;
        }
    }
    Ok(counts)
}

pub fn tiling_direct_check(e: &PointSet, a: &PointSet, k: u64) -> Result<TilingReport> {
    let counts = coverage(e, a)?;
    let mut histogram = BTreeMap::new();
    for c in counts {
        *histogram.entry(c).or_insert(0) += 1;
    }
    let holds = histogram.len() == 1 && histogram.contains_key(&k);
    Ok(TilingReport {
        holds,
        level: k,
        histogram,
    })
}

fn require_tiling(e: &PointSet, a: &PointSet, k: u64) -> Result<()> {
    if k == 0 || !tiling_direct_check(e, a, k)?.holds {
        return Err(Error::NotATiling);
    }
    Ok(())
}

fn require_plane(e: &PointSet) -> Result<()> {
    if e.dim() != 2 {
        return Err(Error::UnsupportedDim { d: e.dim() });
    }
    Ok(())
}

/// `1_E^(m) = 0` exactly when `E` meets every hyperplane `x.m = t` equally.
fn vanishes(set: &PointSet, m: &FpVector) -> bool {
    let counts = hyperplane_counts(set, m);
    counts.windows(2).all(|w| w[0] == w[1])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "kebab-case")]
pub enum PlaneClassification {
    Singleton,
    Full,
    Graph { witness: GraphWitness },
}

/// Trichotomy for a 1-tiling `(E, A)` of `F_p^2`.
///
/// In the graph case the direction is the first canonical `m` with
/// `A^(m) != 0`, which forces `E^(m) = 0`.
pub fn classify_1_tiling(e: &PointSet, a: &PointSet) -> Result<PlaneClassification> {
    require_plane(e)?;
    require_tiling(e, a, 1)?;
    if e.len() == 1 {
        return Ok(PlaneClassification::Singleton);
    }
    if e.is_full() {
        return Ok(PlaneClassification::Full);
    }
    let dirs = directions(e.modulus(), 2);
    let mut order: Vec<FpVector> = dirs.iter().filter(|m| !vanishes(a, m)).cloned().collect();
    order.extend(dirs.into_iter().filter(|m| vanishes(a, m)));
    match graph::is_graph_with_order(e, &order)? {
        Some(witness) => Ok(PlaneClassification::Graph { witness }),
        None => Err(Error::InternalContradiction(
            "a 1-tiling of the plane whose tile is not a graph".into(),
        )),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDecomposition {
    pub direction: Vec<u64>,
    pub s: usize,
    pub parts: Vec<GraphWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "kebab-case")]
pub enum KTilingStructure {
    KPoints { k: u64 },
    FullPlane { k: u64 },
    Graphs(GraphDecomposition),
}

/// Splits a `k`-tiling tile of the plane into `s` graphs along the first
/// canonical direction on which it equidistributes. On each line the `s`
/// points are taken in lexicographic order and the `j`-th goes to part `j`.
pub fn decompose_k_tiling(e: &PointSet, a: &PointSet, k: u64) -> Result<KTilingStructure> {
    require_plane(e)?;
    require_tiling(e, a, k)?;
    if e.len() as u64 == k && a.is_full() {
        return Ok(KTilingStructure::KPoints { k });
    }
    if e.is_full() {
        return Ok(KTilingStructure::FullPlane { k });
    }
    let space = e.space();
    let p = space.p() as usize;
    let Some(m) = directions(space.modulus(), 2)
        .into_iter()
        .find(|m| vanishes(e, m))
    else {
        return Err(Error::InternalContradiction(format!(
            "k-tiling with |E| = {} has no vanishing direction",
            e.len()
        )));
    };
    let s = e.len() / p;
    if s == 0 || s >= p || s * p != e.len() || k % s as u64 != 0 {
        return Err(Error::InternalContradiction(format!(
            "k-tiling with |E| = {} violates |E| = sp with s | {k}",
            e.len()
        )));
    }
    let mut parts = vec![Vec::with_capacity(p); s];
    let mut lines: Vec<Vec<&FpVector>> = vec![Vec::new(); p];
    for x in e.iter() {
        lines[x.dot(&m).value() as usize].push(x);
    }
    for line in lines {
        // BTreeSet iteration is already lexicographic
        for (j, x) in line.into_iter().enumerate() {
            parts[j].push(x.clone());
        }
    }
    let mut witnesses = Vec::with_capacity(s);
    for pts in parts {
        let part = PointSet::from_points(space, pts)?;
        let w = graph_along(&part, &m)?.ok_or_else(|| {
            Error::InternalContradiction("decomposition part is not a graph".into())
        })?;
        witnesses.push(w);
    }
    Ok(KTilingStructure::Graphs(GraphDecomposition {
        direction: m.coords().to_vec(),
        s,
        parts: witnesses,
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum Graphical {
    EIsGraph { witness: GraphWitness },
    AIsGraph { witness: GraphWitness },
    Neither,
    /// Neither set has a size graph detection can decide.
    Undetermined,
}

impl Graphical {
    pub fn is_graphical(&self) -> bool {
        matches!(self, Graphical::EIsGraph { .. } | Graphical::AIsGraph { .. })
    }
}

fn try_graph(set: &PointSet) -> Result<Option<Option<GraphWitness>>> {
    match is_graph(set) {
        Ok(w) => Ok(Some(w)),
        Err(Error::UnsupportedSize { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Tests `E`, then `A`, for being a graph. When `d <= 3` or `|E|` is one of
/// `1, p, p^(d-1), p^d`, a negative answer is an internal contradiction.
pub fn graphical_check(e: &PointSet, a: &PointSet) -> Result<Graphical> {
    require_tiling(e, a, 1)?;
    let space = e.space();
    let d = space.dim();
    let p = space.p() as usize;
    let guaranteed = d <= 3 || [1, p, space.size() / p, space.size()].contains(&e.len());
    let on_e = try_graph(e)?;
    if let Some(Some(witness)) = on_e {
        return Ok(Graphical::EIsGraph { witness });
    }
    let on_a = try_graph(a)?;
    if let Some(Some(witness)) = on_a {
        return Ok(Graphical::AIsGraph { witness });
    }
    if guaranteed {
        return Err(Error::InternalContradiction(
            "a tiling pair covered by the graphical theorem is not graphical".into(),
        ));
    }
    if on_e.is_none() && on_a.is_none() {
        Ok(Graphical::Undetermined)
    } else {
        Ok(Graphical::Neither)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffvec::{PrimeModulus, Space};

    fn space(p: u64, d: usize) -> Space {
        Space::new(PrimeModulus::new(p).unwrap(), d).unwrap()
    }

    fn parabola(s: Space) -> PointSet {
        PointSet::from_points(s, (0..s.p() as i64).map(|t| s.vector(&[t, t * t]).unwrap())).unwrap()
    }

    fn axis(s: Space, v: &[i64]) -> PointSet {
        PointSet::span(s, &[s.vector(v).unwrap()])
    }

    #[test]
    fn direct_check_examples() {
        let z5 = space(5, 1);
        let e = PointSet::from_coords(z5, &[&[0], &[1], &[2]]).unwrap();
        let full = PointSet::full(z5);
        let r = tiling_direct_check(&e, &full, 3).unwrap();
        assert!(r.holds);
        let r = tiling_direct_check(&e, &full, 2).unwrap();
        assert!(!r.holds);
        assert_eq!(r.histogram, BTreeMap::from([(3, 5)]));
        let s3 = space(3, 2);
        let origin = PointSet::from_coords(s3, &[&[0, 0]]).unwrap();
        assert!(tiling_direct_check(&PointSet::full(s3), &origin, 1).unwrap().holds);
    }

    #[test]
    fn direct_check_is_symmetric() {
        let s = space(3, 2);
        for code in 0..512usize {
            let e = PointSet::from_indices(s, (0..9).filter(|i| code >> i & 1 == 1));
            let a = PointSet::from_indices(s, [0, 4]);
            for k in 0..3 {
                assert_eq!(
                    tiling_direct_check(&e, &a, k).unwrap().holds,
                    tiling_direct_check(&a, &e, k).unwrap().holds
                );
            }
        }
    }

    #[test]
    fn classify_examples() {
        let s5 = space(5, 2);
        let c = classify_1_tiling(&parabola(s5), &axis(s5, &[0, 1])).unwrap();
        let PlaneClassification::Graph { witness } = c else { panic!("{c:?}") };
        assert_eq!(witness.direction, Some(vec![1, 0]));
        assert_eq!(witness.polynomial, Some(vec![0, 0, 1, 0, 0]));

        let s3 = space(3, 2);
        let pt = PointSet::from_coords(s3, &[&[2, 0]]).unwrap();
        assert_eq!(
            classify_1_tiling(&pt, &PointSet::full(s3)).unwrap(),
            PlaneClassification::Singleton
        );
        assert_eq!(
            classify_1_tiling(&PointSet::full(s3), &pt).unwrap(),
            PlaneClassification::Full
        );

        let e = axis(s5, &[1, 2]);
        let a = axis(s5, &[1, 3]);
        assert!(tiling_direct_check(&e, &a, 1).unwrap().holds);
        let PlaneClassification::Graph { witness } = classify_1_tiling(&e, &a).unwrap() else {
            panic!()
        };
        assert_eq!(witness.kind, BasisKind::IsotropicBasis);
        assert_eq!(witness.basis, vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(graph_tiling_partner(&witness).unwrap(), a);
    }

    #[test]
    fn classify_rejects_non_tilings() {
        let s5 = space(5, 2);
        let e = PointSet::from_coords(s5, &[&[0, 0], &[1, 1], &[2, 3], &[3, 1], &[2, 4]]).unwrap();
        assert_eq!(classify_1_tiling(&e, &axis(s5, &[0, 1])), Err(Error::NotATiling));
        let z5 = space(5, 1);
        let full = PointSet::full(z5);
        assert_eq!(
            classify_1_tiling(&full, &full),
            Err(Error::UnsupportedDim { d: 1 })
        );
    }

    #[test]
    fn decompose_strip() {
        let s5 = space(5, 2);
        let e = PointSet::from_points(
            s5,
            (0..5).flat_map(|x| [0, 1].map(|y| s5.vector(&[x, y]).unwrap())),
        )
        .unwrap();
        let a = axis(s5, &[0, 1]);
        assert!(tiling_direct_check(&e, &a, 2).unwrap().holds);
        let KTilingStructure::Graphs(dec) = decompose_k_tiling(&e, &a, 2).unwrap() else {
            panic!()
        };
        assert_eq!(dec.s, 2);
        assert_eq!(dec.direction, vec![1, 0]);
        assert_eq!(dec.parts[0].values, vec![vec![0]; 5]);
        assert_eq!(dec.parts[1].values, vec![vec![1]; 5]);
        let mut union = PointSet::empty(s5);
        for part in &dec.parts {
            let r = part.reconstruct().unwrap();
            assert!(union.is_disjoint(&r));
            union = union.union(&r);
        }
        assert_eq!(union, e);
    }

    #[test]
    fn decompose_trivial_cases() {
        let s3 = space(3, 2);
        let a = PointSet::from_coords(s3, &[&[0, 0], &[1, 1]]).unwrap();
        assert_eq!(
            decompose_k_tiling(&PointSet::full(s3), &a, 2).unwrap(),
            KTilingStructure::FullPlane { k: 2 }
        );
        assert_eq!(
            decompose_k_tiling(&a, &PointSet::full(s3), 2).unwrap(),
            KTilingStructure::KPoints { k: 2 }
        );
        let z5 = space(5, 1);
        let full = PointSet::full(z5);
        assert_eq!(
            decompose_k_tiling(&full, &full, 5),
            Err(Error::UnsupportedDim { d: 1 })
        );
    }

    #[test]
    fn graphical_examples() {
        let s = space(3, 3);
        let line = axis(s, &[1, 0, 0]);
        let plane = PointSet::span(s, &[s.vector(&[0, 1, 0]).unwrap(), s.vector(&[0, 0, 1]).unwrap()]);
        assert!(matches!(graphical_check(&line, &plane).unwrap(), Graphical::EIsGraph { .. }));

        let curve = PointSet::from_points(
            s,
            (0..3).map(|t| s.vector(&[t, t * t, t * t * t + 1]).unwrap()),
        )
        .unwrap();
        assert!(tiling_direct_check(&curve, &plane, 1).unwrap().holds);
        let Graphical::EIsGraph { witness } = graphical_check(&curve, &plane).unwrap() else {
            panic!()
        };
        assert_eq!(witness.domain_dim, 1);
        assert_eq!(witness.reconstruct().unwrap(), curve);
    }
}
