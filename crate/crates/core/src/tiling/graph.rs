//! Graph witnesses: a linear change of basis under which a set is
//! `{ (x, f(x)) : x in F_p^s }`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffvec::{directions, rank, BasisChange, FpVector, PointSet, PrimeModulus, Space};
use crate::fourier::hyperplane_counts;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BasisKind {
    AxisAligned,
    OrthogonalBasis,
    IsotropicBasis,
    GeneralBasis,
}

/// A set presented as the graph of `f : F_p^s -> F_p^(d-s)`.
///
/// `basis` lists the `s` domain vectors first and the `d - s` codomain
/// vectors after them. `values[i]` is `f` at the `i`-th domain point in
/// lexicographic order, expressed in codomain coordinates. For plane graphs
/// over a line, `polynomial` holds the interpolating coefficients of `f`
/// (constant term first).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphWitness {
    pub p: u64,
    pub dim: usize,
    pub kind: BasisKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub direction: Option<Vec<u64>>,
    pub basis: Vec<Vec<u64>>,
    pub domain_dim: usize,
    pub values: Vec<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<Vec<u64>>,
}

impl GraphWitness {
    pub fn space(&self) -> Result<Space> {
        Space::new(PrimeModulus::new(self.p)?, self.dim)
    }

    pub fn basis_vectors(&self) -> Result<Vec<FpVector>> {
        let p = PrimeModulus::new(self.p)?;
        self.basis
            .iter()
            .map(|c| FpVector::from_residues(p, c.clone()))
            .collect()
    }

    /// Structural checks independent of any particular set.
    pub fn validate(&self) -> Result<()> {
        let space = self.space()?;
        let basis = self.basis_vectors()?;
        if basis.len() != self.dim || basis.iter().any(|b| b.dim() != self.dim) {
            return Err(Error::InternalContradiction("basis has the wrong shape".into()));
        }
        if rank(&basis) != self.dim {
            return Err(Error::InternalContradiction("basis vectors are dependent".into()));
        }
        if self.domain_dim > self.dim {
            return Err(Error::InternalContradiction("domain larger than the space".into()));
        }
        let domain_size = (self.p as usize).pow(self.domain_dim as u32);
        if self.values.len() != domain_size {
            return Err(Error::InternalContradiction(format!(
                "expected {domain_size} function values, found {}",
                self.values.len()
            )));
        }
        let codim = self.dim - self.domain_dim;
        if self
            .values
            .iter()
            .any(|v| v.len() != codim || v.iter().any(|&c| c >= self.p))
        {
            return Err(Error::InternalContradiction("malformed function value".into()));
        }
        if let Some(poly) = &self.polynomial {
            if self.domain_dim != 1 || codim != 1 {
                return Err(Error::InternalContradiction(
                    "polynomial form only applies to plane graphs".into(),
                ));
            }
            let p = space.modulus();
            for (t, v) in self.values.iter().enumerate() {
                if eval_poly(p, poly, t as u64) != v[0] {
                    return Err(Error::InternalContradiction(format!(
                        "polynomial disagrees with f at {t}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The point set `{ sum_i x_i b_i + sum_j f_j(x) b_(s+j) }`.
    pub fn reconstruct(&self) -> Result<PointSet> {
        self.validate()?;
        let space = self.space()?;
        let basis = self.basis_vectors()?;
        let domain_space_points = domain_points(space.modulus(), self.domain_dim);
        let mut pts = Vec::with_capacity(self.values.len());
        for (x, fx) in domain_space_points.iter().zip(&self.values) {
            let mut v = space.zero();
            for (c, b) in x.iter().chain(fx.iter()).zip(&basis) {
                v = &v + &b.scale(*c);
            }
            pts.push(v);
        }
        PointSet::from_points(space, pts)
    }
}

fn domain_points(p: PrimeModulus, s: usize) -> Vec<Vec<u64>> {
    if s == 0 {
        return vec![vec![]];
    }
    let space = Space::new(p, s).expect("domain fits");
    space.points().map(|x| x.coords().to_vec()).collect()
}

fn classify_basis(basis: &[FpVector], isotropic: bool) -> BasisKind {
    if isotropic {
        return BasisKind::IsotropicBasis;
    }
    if basis
        .iter()
        .all(|b| b.coords().iter().filter(|&&c| c != 0).count() == 1)
    {
        return BasisKind::AxisAligned;
    }
    let orthogonal = basis.iter().enumerate().all(|(i, a)| {
        basis[i + 1..].iter().all(|b| a.dot(b).is_zero())
    });
    if orthogonal {
        BasisKind::OrthogonalBasis
    } else {
        BasisKind::GeneralBasis
    }
}

/// Basis of the hyperplane `{ x : x.m = 0 }` for canonical `m`.
fn perp_basis(m: &FpVector) -> Vec<FpVector> {
    let p = m.modulus();
    let d = m.dim();
    let lead = m
        .coords()
        .iter()
        .position(|&c| c != 0)
        .expect("nonzero direction");
    (0..d)
        .filter(|&j| j != lead)
        .map(|j| {
            let unit = FpVector::unit(p, d, j);
            let shift = FpVector::unit(p, d, lead).scale(m.coords()[j]);
            &unit - &shift
        })
        .collect()
}

/// Expresses every point of `set` in `basis` and reads off the function
/// over the first `s` coordinates. `None` if some domain point is hit twice
/// or missed.
fn tabulate(
    set: &PointSet,
    basis: Vec<FpVector>,
    s: usize,
    kind: BasisKind,
    direction: Option<&FpVector>,
) -> Result<Option<GraphWitness>> {
    let space = set.space();
    let change = BasisChange::new(&basis)?;
    let domain_size = (space.p() as usize).pow(s as u32);
    let mut values: Vec<Option<Vec<u64>>> = vec![None; domain_size];
    for x in set.iter() {
        let coords = change.coordinates(x);
        let slot = coords[..s]
            .iter()
            .fold(0usize, |acc, &c| acc * space.p() as usize + c as usize);
        if values[slot].is_some() {
            return Ok(None);
        }
        values[slot] = Some(coords[s..].to_vec());
    }
    let Some(values) = values.into_iter().collect::<Option<Vec<_>>>() else {
        return Ok(None);
    };
    let polynomial = if s == 1 && space.dim() == 2 {
        let map: BTreeMap<u64, u64> = values
            .iter()
            .enumerate()
            .map(|(t, v)| (t as u64, v[0]))
            .collect();
        Some(interpolate_poly(space.modulus(), &map)?)
    } else {
        None
    };
    Ok(Some(GraphWitness {
        p: space.p(),
        dim: space.dim(),
        kind,
        direction: direction.map(|m| m.coords().to_vec()),
        basis: basis.iter().map(|b| b.coords().to_vec()).collect(),
        domain_dim: s,
        values,
        polynomial,
    }))
}

/// Tries to present a `p`-point set as a graph over the line dual to `m`:
/// requires one point on each hyperplane `x.m = t`.
///
/// If `m.m != 0` the domain vector is `m` and the codomain spans `m^perp`.
/// Otherwise `m` is isotropic: the domain vector is the smallest `v` with
/// `v.m = 1`, shifted along `m` to make it isotropic as well, scaled to
/// canonical form, and `m` is rescaled so the pair stays hyperbolic.
pub fn graph_along(set: &PointSet, m: &FpVector) -> Result<Option<GraphWitness>> {
    let m = m.canonical_direction().ok_or(Error::ZeroDirection)?;
    let space = set.space();
    let p = space.modulus();
    if set.len() != space.p() as usize {
        return Ok(None);
    }
    if hyperplane_counts(set, &m).iter().any(|&c| c != 1) {
        return Ok(None);
    }
    let isotropic = m.dot(&m).is_zero();
    let basis = if !isotropic {
        let mut b = vec![m.clone()];
        b.extend(perp_basis(&m));
        b
    } else {
        let mut v = space
            .points()
            .find(|v| m.dot(v).value() == 1)
            .expect("m is nonzero, so some v has v.m = 1");
        if p.is_odd() {
            let lambda = p.mul(v.dot(&v).value(), p.inv(2)?);
            v = &v - &m.scale(lambda);
        }
        let dom = v.canonical_direction().expect("v.m = 1 so v != 0");
        let pairing = dom.dot(&m).value();
        let first_cod = m.scale(p.inv(pairing)?);
        let mut b = vec![dom, first_cod];
        for w in perp_basis(&m) {
            let mut trial = b.clone();
            trial.push(w);
            if rank(&trial) == trial.len() {
                b = trial;
            }
        }
        b
    };
    let kind = classify_basis(&basis, isotropic);
    tabulate(set, basis, 1, kind, Some(&m))
}

/// Tries to present a `p^(d-1)`-point set as a graph over a coordinate
/// hyperplane, projecting along `v`: requires no two points to differ by a
/// nonzero multiple of `v`.
pub fn graph_by_projection(set: &PointSet, v: &FpVector) -> Result<Option<GraphWitness>> {
    let v = v.canonical_direction().ok_or(Error::ZeroDirection)?;
    let space = set.space();
    let d = space.dim();
    if d < 2 || set.len() != space.size() / space.p() as usize {
        return Ok(None);
    }
    let lead = v.coords().iter().position(|&c| c != 0).expect("nonzero");
    let mut basis: Vec<FpVector> = (0..d)
        .filter(|&j| j != lead)
        .map(|j| FpVector::unit(space.modulus(), d, j))
        .collect();
    basis.push(v.clone());
    let kind = classify_basis(&basis, false);
    tabulate(set, basis, d - 1, kind, Some(&v))
}

fn log_p(size: usize, p: u64) -> Option<usize> {
    let mut s = 0;
    let mut acc = 1usize;
    while acc < size {
        acc *= p as usize;
        s += 1;
    }
    (acc == size).then_some(s)
}

fn standard_basis(space: Space) -> Vec<FpVector> {
    (0..space.dim())
        .map(|j| FpVector::unit(space.modulus(), space.dim(), j))
        .collect()
}

/// Searches canonical directions in order and returns the first witness.
///
/// Supported sizes are `p^s` with `s` in `{0, 1, d-1, d}`.
pub fn is_graph(set: &PointSet) -> Result<Option<GraphWitness>> {
    is_graph_with_order(set, &directions(set.modulus(), set.dim()))
}

/// Same as [`is_graph`], but `s = 1` searches follow `order`.
pub(crate) fn is_graph_with_order(
    set: &PointSet,
    order: &[FpVector],
) -> Result<Option<GraphWitness>> {
    let space = set.space();
    let d = space.dim();
    let unsupported = Error::UnsupportedSize {
        size: set.len(),
        p: space.p(),
        d,
    };
    let s = log_p(set.len(), space.p()).ok_or(unsupported.clone())?;
    if set.is_empty() {
        return Err(unsupported);
    }
    if s == 0 || s == d {
        let basis = standard_basis(space);
        return tabulate(set, basis, s, BasisKind::AxisAligned, None);
    }
    if s == 1 {
        for m in order {
            if let Some(w) = graph_along(set, m)? {
                return Ok(Some(w));
            }
        }
        return Ok(None);
    }
    if s == d - 1 {
        let diffs: std::collections::BTreeSet<FpVector> = crate::ffvec::difference_set(set)
            .iter()
            .filter_map(|x| x.canonical_direction())
            .collect();
        for v in directions(space.modulus(), d) {
            if diffs.contains(&v) {
                continue;
            }
            if let Some(w) = graph_by_projection(set, &v)? {
                return Ok(Some(w));
            }
        }
        return Ok(None);
    }
    Err(unsupported)
}

pub fn eval_poly(p: PrimeModulus, coeffs: &[u64], x: u64) -> u64 {
    coeffs
        .iter()
        .rev()
        .fold(0, |acc, &c| p.add(p.mul(acc, x), c))
}

/// Lagrange interpolation over all of `F_p`; returns `p` coefficients,
/// constant term first.
pub fn interpolate_poly(p: PrimeModulus, values: &BTreeMap<u64, u64>) -> Result<Vec<u64>> {
    let n = p.get();
    if let Some(missing) = (0..n).find(|x| !values.contains_key(x)) {
        return Err(Error::IncompleteDomain { missing });
    }
    let mut out = vec![0u64; n as usize];
    for k in 0..n {
        let fk = values[&k] % n;
        if fk == 0 {
            continue;
        }
        // numerator prod_{j != k} (x - j), built up one factor at a time
        let mut basis = vec![1 % n];
        let mut denom = 1 % n;
        for j in (0..n).filter(|&j| j != k) {
            let mut next = vec![0u64; basis.len() + 1];
            for (i, &c) in basis.iter().enumerate() {
                next[i + 1] = p.add(next[i + 1], c);
                next[i] = p.sub(next[i], p.mul(c, j));
            }
            basis = next;
            denom = p.mul(denom, p.sub(k, j));
        }
        let scale = p.mul(fk, p.inv(denom)?);
        for (o, c) in out.iter_mut().zip(basis) {
            *o = p.add(*o, p.mul(c, scale));
        }
    }
    Ok(out)
}

/// The complementary subspace spanned by the codomain vectors; the graph
/// tiles the space by it at level 1.
pub fn graph_tiling_partner(witness: &GraphWitness) -> Result<PointSet> {
    witness.validate()?;
    let space = witness.space()?;
    let basis = witness.basis_vectors()?;
    Ok(PointSet::span(space, &basis[witness.domain_dim..]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(p: u64, d: usize) -> Space {
        Space::new(PrimeModulus::new(p).unwrap(), d).unwrap()
    }

    fn map(vals: &[u64]) -> BTreeMap<u64, u64> {
        vals.iter().enumerate().map(|(i, &v)| (i as u64, v)).collect()
    }

    #[test]
    fn interpolation() {
        let p = PrimeModulus::new(5).unwrap();
        assert_eq!(interpolate_poly(p, &map(&[0, 1, 2, 3, 4])).unwrap(), vec![0, 1, 0, 0, 0]);
        assert_eq!(interpolate_poly(p, &map(&[3; 5])).unwrap(), vec![3, 0, 0, 0, 0]);
        assert_eq!(interpolate_poly(p, &map(&[0, 1, 4, 4, 1])).unwrap(), vec![0, 0, 1, 0, 0]);
        let mut partial = map(&[0, 1, 4, 4, 1]);
        partial.remove(&2);
        assert_eq!(
            interpolate_poly(p, &partial),
            Err(Error::IncompleteDomain { missing: 2 })
        );
    }

    #[test]
    fn interpolation_reproduces_every_function_on_f3() {
        let p = PrimeModulus::new(3).unwrap();
        for code in 0..27u64 {
            let vals = [code % 3, code / 3 % 3, code / 9];
            let poly = interpolate_poly(p, &map(&vals)).unwrap();
            for (x, &v) in vals.iter().enumerate() {
                assert_eq!(eval_poly(p, &poly, x as u64), v);
            }
        }
    }

    #[test]
    fn parabola_is_an_axis_graph() {
        let s = space(5, 2);
        let e = PointSet::from_points(s, (0..5).map(|t| s.vector(&[t, t * t]).unwrap())).unwrap();
        let w = is_graph(&e).unwrap().unwrap();
        assert_eq!(w.kind, BasisKind::AxisAligned);
        assert_eq!(w.direction, Some(vec![1, 0]));
        assert_eq!(w.polynomial, Some(vec![0, 0, 1, 0, 0]));
        assert_eq!(w.reconstruct().unwrap(), e);
        let partner = graph_tiling_partner(&w).unwrap();
        assert_eq!(
            partner,
            PointSet::from_points(s, (0..5).map(|c| s.vector(&[0, c]).unwrap())).unwrap()
        );
    }

    #[test]
    fn nongraph_points() {
        let s = space(5, 2);
        let e = PointSet::from_coords(s, &[&[0, 0], &[1, 1], &[2, 3], &[3, 1], &[2, 4]]).unwrap();
        assert_eq!(is_graph(&e).unwrap(), None);
    }

    #[test]
    fn lines_are_linear_graphs() {
        let s = space(5, 2);
        let p = s.modulus();
        for m in directions(p, 2) {
            let line = PointSet::span(s, &[m.clone()]);
            let w = is_graph(&line).unwrap().unwrap();
            assert_eq!(w.reconstruct().unwrap(), line);
            let poly = w.polynomial.clone().unwrap();
            assert!(poly[0] == 0 && poly[2..].iter().all(|&c| c == 0), "{w:?}");
            // some direction presents the line as the graph of f = 0
            let flat = directions(p, 2).into_iter().any(|n| {
                graph_along(&line, &n)
                    .unwrap()
                    .is_some_and(|w| w.values.iter().all(|v| v == &vec![0]))
            });
            assert!(flat, "{m}");
        }
    }

    #[test]
    fn isotropic_witness() {
        let s = space(5, 2);
        let e = PointSet::span(s, &[s.vector(&[1, 2]).unwrap()]);
        let w = graph_along(&e, &s.vector(&[1, 3]).unwrap()).unwrap().unwrap();
        assert_eq!(w.kind, BasisKind::IsotropicBasis);
        assert_eq!(w.basis, vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(
            graph_tiling_partner(&w).unwrap(),
            PointSet::span(s, &[s.vector(&[1, 3]).unwrap()])
        );
        assert_eq!(w.reconstruct().unwrap(), e);
    }

    #[test]
    fn trivial_sizes() {
        let s = space(3, 3);
        let pt = PointSet::from_coords(s, &[&[1, 2, 0]]).unwrap();
        let w = is_graph(&pt).unwrap().unwrap();
        assert_eq!(w.domain_dim, 0);
        assert!(graph_tiling_partner(&w).unwrap().is_full());
        let full = PointSet::full(s);
        let w = is_graph(&full).unwrap().unwrap();
        assert_eq!(graph_tiling_partner(&w).unwrap().len(), 1);
        assert_eq!(w.reconstruct().unwrap(), full);
    }

    #[test]
    fn unsupported_sizes() {
        let s = space(3, 4);
        let nine = PointSet::from_indices(s, 0..9);
        assert!(matches!(is_graph(&nine), Err(Error::UnsupportedSize { .. })));
        let four = PointSet::from_indices(space(3, 2), 0..4);
        assert!(matches!(is_graph(&four), Err(Error::UnsupportedSize { .. })));
    }

    #[test]
    fn hyperplane_graph_in_three_space() {
        let s = space(3, 3);
        // z = x*y + 1 over the (x, y) plane
        let e = PointSet::from_points(
            s,
            (0..3).flat_map(|x| (0..3).map(move |y| (x, y))).map(|(x, y)| {
                s.vector(&[x, y, x * y + 1]).unwrap()
            }),
        )
        .unwrap();
        let w = is_graph(&e).unwrap().unwrap();
        assert_eq!(w.domain_dim, 2);
        assert_eq!(w.reconstruct().unwrap(), e);
    }
}
