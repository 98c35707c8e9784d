//! Prime-field scalars and vectors.
//!
//! Scalars are canonical residues in `[0, p)` stored in `u64`; the modulus is
//! capped below `2^32` so products never overflow. Points of `F_p^d` are
//! ordered lexicographically, which is also the row-major order used to index
//! dense arrays over the space (see [`Space`]).

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 32 {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeModulus(p))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    pub fn is_odd(self) -> bool {
        self.0 != 2
    }

    /// Canonical residue of an arbitrary signed integer.
    #[inline]
    pub fn reduce(self, v: i64) -> u64 {
        v.rem_euclid(self.0 as i64) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.0
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.0;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(self, a: u64) -> Result<u64> {
        if a % self.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        // Fermat: a^(p-2)
        Ok(self.pow(a, self.0 - 2))
    }

    pub fn scalar(self, v: u64) -> FpScalar {
        FpScalar {
            value: v % self.0,
            modulus: self,
        }
    }
}

impl TryFrom<u64> for PrimeModulus {
    type Error = Error;
    fn try_from(p: u64) -> Result<Self> {
        PrimeModulus::new(p)
    }
}

impl From<PrimeModulus> for u64 {
    fn from(p: PrimeModulus) -> u64 {
        p.0
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Deterministic trial division; moduli are below 2^32.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpScalar {
    value: u64,
    modulus: PrimeModulus,
}

impl FpScalar {
    pub fn new(value: i64, modulus: PrimeModulus) -> Self {
        FpScalar {
            value: modulus.reduce(value),
            modulus,
        }
    }

    pub fn zero(modulus: PrimeModulus) -> Self {
        FpScalar { value: 0, modulus }
    }

    pub fn one(modulus: PrimeModulus) -> Self {
        FpScalar {
            value: 1 % modulus.get(),
            modulus,
        }
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn pow(self, exp: u64) -> Self {
        FpScalar {
            value: self.modulus.pow(self.value, exp),
            modulus: self.modulus,
        }
    }

    pub fn inv(self) -> Result<Self> {
        field_inv(self)
    }

    fn check(self, other: FpScalar) {
        assert_eq!(
            self.modulus, other.modulus,
            "scalar arithmetic across different moduli"
        );
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FpScalar {
    type Output = FpScalar;
    fn add(self, rhs: FpScalar) -> FpScalar {
        self.check(rhs);
        FpScalar {
            value: self.modulus.add(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl Sub for FpScalar {
    type Output = FpScalar;
    fn sub(self, rhs: FpScalar) -> FpScalar {
        self.check(rhs);
        FpScalar {
            value: self.modulus.sub(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl Mul for FpScalar {
    type Output = FpScalar;
    fn mul(self, rhs: FpScalar) -> FpScalar {
        self.check(rhs);
        FpScalar {
            value: self.modulus.mul(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl Neg for FpScalar {
    type Output = FpScalar;
    fn neg(self) -> FpScalar {
        FpScalar {
            value: self.modulus.neg(self.value),
            modulus: self.modulus,
        }
    }
}

pub fn field_inv(a: FpScalar) -> Result<FpScalar> {
    Ok(FpScalar {
        value: a.modulus.inv(a.value)?,
        modulus: a.modulus,
    })
}

/// Three-way classification of a residue, as needed by the circle criteria.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SquareClass {
    Zero,
    NonzeroSquare,
    Nonsquare,
}

/// Euler's criterion. Zero counts as a square.
pub fn is_square(a: FpScalar) -> bool {
    let p = a.modulus.get();
    if a.value == 0 || p == 2 {
        return true;
    }
    a.modulus.pow(a.value, (p - 1) / 2) == 1
}

pub fn is_nonzero_square(a: FpScalar) -> bool {
    !a.is_zero() && is_square(a)
}

pub fn square_class(a: FpScalar) -> SquareClass {
    if a.is_zero() {
        SquareClass::Zero
    } else if is_square(a) {
        SquareClass::NonzeroSquare
    } else {
        SquareClass::Nonsquare
    }
}

/// Smallest `i` in `[1, p)` with `i^2 = -1`, if one exists.
pub fn sqrt_minus_one(p: PrimeModulus) -> Option<u64> {
    let target = p.neg(1 % p.get());
    (1..p.get()).find(|&i| p.mul(i, i) == target)
}

/// Smallest square root of `a`, if any.
pub fn sqrt(a: FpScalar) -> Option<FpScalar> {
    let p = a.modulus;
    (0..p.get())
        .find(|&r| p.mul(r, r) == a.value)
        .map(|r| p.scalar(r))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpVector {
    modulus: PrimeModulus,
    coords: Vec<u64>,
}

impl FpVector {
    /// Builds a vector from arbitrary integers, reducing them mod `p`.
    pub fn new(modulus: PrimeModulus, coords: &[i64]) -> Self {
        FpVector {
            modulus,
            coords: coords.iter().map(|&c| modulus.reduce(c)).collect(),
        }
    }

    /// Builds a vector from residues that must already be canonical.
    pub fn from_residues(modulus: PrimeModulus, coords: Vec<u64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidPoint("empty coordinate list".into()));
        }
        if let Some(c) = coords.iter().find(|&&c| c >= modulus.get()) {
            return Err(Error::InvalidPoint(format!(
                "coordinate {c} is not a residue mod {modulus}"
            )));
        }
        Ok(FpVector { modulus, coords })
    }

    pub fn zero(modulus: PrimeModulus, dim: usize) -> Self {
        FpVector {
            modulus,
            coords: vec![0; dim],
        }
    }

    pub fn unit(modulus: PrimeModulus, dim: usize, axis: usize) -> Self {
        let mut v = Self::zero(modulus, dim);
        v.coords[axis] = 1 % modulus.get();
        v
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> FpScalar {
        FpScalar {
            value: self.coords[i],
            modulus: self.modulus,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn dot(&self, other: &FpVector) -> FpScalar {
        self.check(other);
        let p = self.modulus;
        let v = self
            .coords
            .iter()
            .zip(&other.coords)
            .fold(0, |acc, (&a, &b)| p.add(acc, p.mul(a, b)));
        FpScalar {
            value: v,
            modulus: p,
        }
    }

    pub fn scale(&self, s: u64) -> FpVector {
        let p = self.modulus;
        FpVector {
            modulus: p,
            coords: self.coords.iter().map(|&c| p.mul(c, s % p.get())).collect(),
        }
    }

    /// Representative of the line through this vector whose first nonzero
    /// coordinate is 1; `None` for the zero vector.
    pub fn canonical_direction(&self) -> Option<FpVector> {
        let lead = *self.coords.iter().find(|&&c| c != 0)?;
        let inv = self.modulus.inv(lead).ok()?;
        Some(self.scale(inv))
    }

    fn check(&self, other: &FpVector) {
        assert_eq!(self.modulus, other.modulus, "vectors over different fields");
        assert_eq!(self.dim(), other.dim(), "vectors of different dimension");
    }
}

impl fmt::Display for FpVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &FpVector {
    type Output = FpVector;
    fn add(self, rhs: &FpVector) -> FpVector {
        self.check(rhs);
        let p = self.modulus;
        FpVector {
            modulus: p,
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(&a, &b)| p.add(a, b))
                .collect(),
        }
    }
}

impl Sub for &FpVector {
    type Output = FpVector;
    fn sub(self, rhs: &FpVector) -> FpVector {
        self.check(rhs);
        let p = self.modulus;
        FpVector {
            modulus: p,
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(&a, &b)| p.sub(a, b))
                .collect(),
        }
    }
}

impl Neg for &FpVector {
    type Output = FpVector;
    fn neg(self) -> FpVector {
        let p = self.modulus;
        FpVector {
            modulus: p,
            coords: self.coords.iter().map(|&c| p.neg(c)).collect(),
        }
    }
}

/// `x_1^2 + ... + x_d^2`.
pub fn norm(x: &FpVector) -> FpScalar {
    x.dot(x)
}

/// The ambient space `F_p^d`, with the row-major lexicographic indexing
/// shared by every dense array in the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Space {
    modulus: PrimeModulus,
    dim: usize,
}

impl Space {
    pub fn new(modulus: PrimeModulus, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::UnsupportedDim { d: 0 });
        }
        let mut size: u64 = 1;
        for _ in 0..dim {
            size = size
                .checked_mul(modulus.get())
                .filter(|&s| s <= 1 << 28)
                .ok_or(Error::UnsupportedDim { d: dim })?;
        }
        Ok(Space { modulus, dim })
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn p(&self) -> u64 {
        self.modulus.get()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn size(&self) -> usize {
        (self.p() as usize).pow(self.dim as u32)
    }

    pub fn index_of(&self, x: &FpVector) -> usize {
        debug_assert_eq!(x.dim(), self.dim);
        let p = self.p() as usize;
        x.coords.iter().fold(0, |acc, &c| acc * p + c as usize)
    }

    pub fn point(&self, mut index: usize) -> FpVector {
        let p = self.p() as usize;
        let mut coords = vec![0u64; self.dim];
        for c in coords.iter_mut().rev() {
            *c = (index % p) as u64;
            index /= p;
        }
        FpVector {
            modulus: self.modulus,
            coords,
        }
    }

    pub fn points(&self) -> impl Iterator<Item = FpVector> + '_ {
        (0..self.size()).map(move |i| self.point(i))
    }

    pub fn zero(&self) -> FpVector {
        FpVector::zero(self.modulus, self.dim)
    }

    pub fn vector(&self, coords: &[i64]) -> Result<FpVector> {
        if coords.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: coords.len(),
            });
        }
        Ok(FpVector::new(self.modulus, coords))
    }

    /// Index of `x + y` given the indices of `x` and `y`.
    pub fn add_index(&self, a: usize, b: usize) -> usize {
        let p = self.p() as usize;
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.dim {
            let s = (a % p + b % p) % p;
            out += s * place;
            place *= p;
            a /= p;
            b /= p;
        }
        out
    }

    pub fn sub_index(&self, a: usize, b: usize) -> usize {
        let p = self.p() as usize;
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.dim {
            let s = (a % p + p - b % p) % p;
            out += s * place;
            place *= p;
            a /= p;
            b /= p;
        }
        out
    }
}

/// A finite subset of `F_p^d`, kept sorted and deduplicated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointSet {
    space: Space,
    points: BTreeSet<FpVector>,
}

impl PointSet {
    pub fn empty(space: Space) -> Self {
        PointSet {
            space,
            points: BTreeSet::new(),
        }
    }

    pub fn full(space: Space) -> Self {
        PointSet {
            space,
            points: space.points().collect(),
        }
    }

    pub fn from_points<I>(space: Space, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = FpVector>,
    {
        let mut set = BTreeSet::new();
        for x in points {
            if x.modulus != space.modulus {
                return Err(Error::ModulusMismatch {
                    left: space.p(),
                    right: x.modulus.get(),
                });
            }
            if x.dim() != space.dim {
                return Err(Error::DimensionMismatch {
                    left: space.dim,
                    right: x.dim(),
                });
            }
            set.insert(x);
        }
        Ok(PointSet { space, points: set })
    }

    /// Convenience constructor from integer coordinates (reduced mod `p`).
    pub fn from_coords(space: Space, coords: &[&[i64]]) -> Result<Self> {
        let pts = coords
            .iter()
            .map(|c| space.vector(c))
            .collect::<Result<Vec<_>>>()?;
        Self::from_points(space, pts)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(space: Space, indices: I) -> Self {
        PointSet {
            space,
            points: indices.into_iter().map(|i| space.point(i)).collect(),
        }
    }

    /// Linear span of `vectors`.
    pub fn span(space: Space, vectors: &[FpVector]) -> Self {
        let mut points = BTreeSet::new();
        points.insert(space.zero());
        for v in vectors {
            let current: Vec<FpVector> = points.iter().cloned().collect();
            for base in current {
                for t in 1..space.p() {
                    points.insert(&base + &v.scale(t));
                }
            }
        }
        PointSet { space, points }
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.space.modulus
    }

    pub fn dim(&self) -> usize {
        self.space.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, x: &FpVector) -> bool {
        self.points.contains(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = &FpVector> {
        self.points.iter()
    }

    pub fn indices(&self) -> Vec<usize> {
        self.points.iter().map(|x| self.space.index_of(x)).collect()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.space.size()
    }

    pub fn translate(&self, v: &FpVector) -> PointSet {
        PointSet {
            space: self.space,
            points: self.points.iter().map(|x| x + v).collect(),
        }
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        PointSet {
            space: self.space,
            points: self.points.union(&other.points).cloned().collect(),
        }
    }

    pub fn intersection(&self, other: &PointSet) -> PointSet {
        PointSet {
            space: self.space,
            points: self.points.intersection(&other.points).cloned().collect(),
        }
    }

    pub fn complement(&self) -> PointSet {
        PointSet {
            space: self.space,
            points: self
                .space
                .points()
                .filter(|x| !self.points.contains(x))
                .collect(),
        }
    }

    pub fn is_disjoint(&self, other: &PointSet) -> bool {
        self.points.is_disjoint(&other.points)
    }

    pub fn insert(&mut self, x: FpVector) -> Result<bool> {
        if x.modulus != self.space.modulus || x.dim() != self.space.dim {
            return Err(Error::InvalidPoint(format!("{x} is not in F_{}^{}", self.space.p(), self.space.dim)));
        }
        Ok(self.points.insert(x))
    }

    /// Coordinate-wise sum of all points.
    pub fn sum(&self) -> FpVector {
        self.points
            .iter()
            .fold(self.space.zero(), |acc, x| &acc + x)
    }

    pub fn check_same_space(&self, other: &PointSet) -> Result<()> {
        if self.space.modulus != other.space.modulus {
            return Err(Error::ModulusMismatch {
                left: self.space.p(),
                right: other.space.p(),
            });
        }
        if self.space.dim != other.space.dim {
            return Err(Error::DimensionMismatch {
                left: self.space.dim,
                right: other.space.dim,
            });
        }
        Ok(())
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a FpVector;
    type IntoIter = std::collections::btree_set::Iter<'a, FpVector>;
    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// One representative per line through the origin, first nonzero coordinate
/// equal to 1, sorted lexicographically.
pub fn directions(p: PrimeModulus, d: usize) -> Vec<FpVector> {
    let mut out = Vec::new();
    for lead in 0..d {
        // vectors (0,...,0,1,*,...,*) with the 1 at position `lead`
        let free = d - lead - 1;
        let count = (p.get() as usize).pow(free as u32);
        for idx in 0..count {
            let mut coords = vec![0u64; d];
            coords[lead] = 1 % p.get();
            let mut rest = idx;
            for c in coords[lead + 1..].iter_mut().rev() {
                *c = (rest % p.get() as usize) as u64;
                rest /= p.get() as usize;
            }
            out.push(FpVector { modulus: p, coords });
        }
    }
    out.sort();
    out
}

/// `{e - e' : e, e' in E, e != e'}`.
pub fn difference_set(e: &PointSet) -> PointSet {
    let mut diffs = BTreeSet::new();
    for a in e.iter() {
        for b in e.iter() {
            if a != b {
                diffs.insert(a - b);
            }
        }
    }
    PointSet {
        space: e.space,
        points: diffs,
    }
}

/// Coordinates of vectors with respect to a fixed basis, via a precomputed
/// inverse matrix.
#[derive(Clone, Debug)]
pub struct BasisChange {
    modulus: PrimeModulus,
    // row-major inverse of the matrix whose columns are the basis vectors
    inverse: Vec<Vec<u64>>,
}

impl BasisChange {
    /// Fails with `InternalContradiction` when the vectors are not a basis.
    pub fn new(basis: &[FpVector]) -> Result<Self> {
        let d = basis.len();
        let p = basis
            .first()
            .map(|v| v.modulus)
            .ok_or_else(|| Error::InternalContradiction("empty basis".into()))?;
        if basis.iter().any(|v| v.dim() != d) {
            return Err(Error::InternalContradiction("basis is not square".into()));
        }
        // augmented [M | I], M has basis vectors as columns
        let mut rows: Vec<Vec<u64>> = (0..d)
            .map(|i| {
                let mut row: Vec<u64> = basis.iter().map(|v| v.coords[i]).collect();
                row.extend((0..d).map(|j| u64::from(i == j)));
                row
            })
            .collect();
        for col in 0..d {
            let pivot = (col..d)
                .find(|&r| rows[r][col] != 0)
                .ok_or_else(|| Error::InternalContradiction("basis vectors are dependent".into()))?;
            rows.swap(col, pivot);
            let inv = p.inv(rows[col][col])?;
            for x in rows[col].iter_mut() {
                *x = p.mul(*x, inv);
            }
            for r in 0..d {
                if r != col && rows[r][col] != 0 {
                    let factor = rows[r][col];
                    for c in 0..2 * d {
                        let sub = p.mul(factor, rows[col][c]);
                        rows[r][c] = p.sub(rows[r][c], sub);
                    }
                }
            }
        }
        let inverse = rows.into_iter().map(|r| r[d..].to_vec()).collect();
        Ok(BasisChange { modulus: p, inverse })
    }

    pub fn coordinates(&self, x: &FpVector) -> Vec<u64> {
        let p = self.modulus;
        self.inverse
            .iter()
            .map(|row| {
                row.iter()
                    .zip(x.coords())
                    .fold(0, |acc, (&a, &b)| p.add(acc, p.mul(a, b)))
            })
            .collect()
    }
}

/// Rank of a list of vectors over `F_p`.
pub fn rank(vectors: &[FpVector]) -> usize {
    let Some(first) = vectors.first() else {
        return 0;
    };
    let p = first.modulus;
    let mut rows: Vec<Vec<u64>> = vectors.iter().map(|v| v.coords.clone()).collect();
    let cols = first.dim();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = p.inv(rows[rank][col]).expect("pivot is nonzero");
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = p.mul(rows[r][col], inv);
                for c in 0..cols {
                    let sub = p.mul(factor, rows[rank][c]);
                    rows[r][c] = p.sub(rows[r][c], sub);
                }
            }
        }
        rank += 1;
    }
    rank
}
