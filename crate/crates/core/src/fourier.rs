//! Exact Fourier analysis of rational-valued functions on `F_p^d`.
//!
//! With `chi(-t) = xi^t`, the transform is
//! `f^(m) = p^-d * sum_x f(x) xi^(x.m)` and lives in `Q(xi)`. Every
//! coefficient is computed by first summing `f` over the hyperplanes
//! `x.m = t` (rational arithmetic only) and then forming
//! `sum_t w_t xi^t`, so no cyclotomic products are needed for the forward
//! transform. Zero tests are coefficient-wise and exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::ffvec::{directions, FpVector, PointSet, Space};

/// A map `F_p^d -> Q`, stored densely in lexicographic point order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    space: Space,
    values: Vec<BigRational>,
}

impl RationalFunction {
    pub fn new(space: Space, values: Vec<BigRational>) -> Result<Self> {
        if values.len() != space.size() {
            return Err(Error::DimensionMismatch {
                left: space.size(),
                right: values.len(),
            });
        }
        Ok(RationalFunction { space, values })
    }

    pub fn indicator(set: &PointSet) -> Self {
        let space = set.space();
        let mut values = vec![BigRational::zero(); space.size()];
        for i in set.indices() {
            values[i] = BigRational::one();
        }
        RationalFunction { space, values }
    }

    pub fn constant(space: Space, c: BigRational) -> Self {
        RationalFunction {
            space,
            values: vec![c; space.size()],
        }
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn value(&self, x: &FpVector) -> &BigRational {
        &self.values[self.space.index_of(x)]
    }

    /// `p^-d * sum_x f(x)`.
    pub fn average(&self) -> BigRational {
        let total: BigRational = self.values.iter().sum();
        total / size_rational(self.space)
    }

    /// `p^-d * sum_x f(x)^2`.
    pub fn mean_square(&self) -> BigRational {
        let total: BigRational = self.values.iter().map(|v| v * v).sum();
        total / size_rational(self.space)
    }
}

/// The transform of a function: one cyclotomic coefficient per frequency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    space: Space,
    coeffs: Vec<CycNum>,
}

impl Spectrum {
    pub fn new(space: Space, coeffs: Vec<CycNum>) -> Result<Self> {
        if coeffs.len() != space.size() {
            return Err(Error::DimensionMismatch {
                left: space.size(),
                right: coeffs.len(),
            });
        }
        if let Some(c) = coeffs.iter().find(|c| c.modulus() != space.modulus()) {
            return Err(Error::ModulusMismatch {
                left: space.p(),
                right: c.modulus().get(),
            });
        }
        Ok(Spectrum { space, coeffs })
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.coeffs
    }

    pub fn get(&self, m: &FpVector) -> &CycNum {
        &self.coeffs[self.space.index_of(m)]
    }

    /// Checks `F(rm) = g_r(F(m))` for every nonzero `m` and `r`.
    pub fn is_galois_symmetric(&self) -> bool {
        let p = self.space.modulus();
        for m in directions(p, self.space.dim()) {
            let base = self.get(&m);
            for r in 2..p.get() {
                let image = base.galois_apply(p.scalar(r)).expect("r is nonzero");
                if &image != self.get(&m.scale(r)) {
                    return false;
                }
            }
        }
        true
    }
}

fn size_rational(space: Space) -> BigRational {
    BigRational::from_integer(BigInt::from(space.size()))
}

fn dot_index(space: Space, a: usize, b: usize) -> usize {
    let p = space.p() as usize;
    let (mut a, mut b) = (a, b);
    let mut acc = 0;
    for _ in 0..space.dim() {
        acc += (a % p) * (b % p);
        a /= p;
        b /= p;
    }
    acc % p
}

fn coefficient_from_weights(space: Space, weights: Vec<BigRational>) -> CycNum {
    let scale = size_rational(space).recip();
    CycNum::from_group_ring(space.modulus(), weights).scale(&scale)
}

/// `f^(m)` for a single frequency.
pub fn fourier_coefficient(f: &RationalFunction, m: &FpVector) -> CycNum {
    let space = f.space;
    let mi = space.index_of(m);
    let mut weights = vec![BigRational::zero(); space.p() as usize];
    for (xi, v) in f.values.iter().enumerate() {
        if !v.is_zero() {
            weights[dot_index(space, xi, mi)] += v;
        }
    }
    coefficient_from_weights(space, weights)
}

/// Number of points of `set` on each hyperplane `x.m = t`, `t = 0..p-1`.
pub fn hyperplane_counts(set: &PointSet, m: &FpVector) -> Vec<usize> {
    let mut counts = vec![0usize; set.modulus().get() as usize];
    for x in set.iter() {
        counts[x.dot(m).value() as usize] += 1;
    }
    counts
}

/// `1_E^(m)` computed from hyperplane counts.
pub fn set_coefficient(set: &PointSet, m: &FpVector) -> CycNum {
    let weights = hyperplane_counts(set, m)
        .into_iter()
        .map(|c| BigRational::from_integer(BigInt::from(c)))
        .collect();
    coefficient_from_weights(set.space(), weights)
}

pub fn dft(f: &RationalFunction) -> Spectrum {
    let space = f.space;
    let coeffs = (0..space.size())
        .into_par_iter()
        .map(|mi| fourier_coefficient(f, &space.point(mi)))
        .collect();
    Spectrum { space, coeffs }
}

/// `f(x) = sum_m xi^(-x.m) F(m)`; fails if any value is irrational.
pub fn inverse_dft(spectrum: &Spectrum) -> Result<RationalFunction> {
    let space = spectrum.space;
    let n = space.p() as usize;
    let values = (0..space.size())
        .into_par_iter()
        .map(|xi| {
            let mut acc = vec![BigRational::zero(); n];
            for (mi, c) in spectrum.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let t = dot_index(space, xi, mi);
                for (j, a) in c.coeffs().iter().enumerate() {
                    if !a.is_zero() {
                        acc[(j + n - t) % n] += a;
                    }
                }
            }
            CycNum::from_group_ring(space.modulus(), acc)
                .to_rational()
                .ok_or(Error::NonRationalResult)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RationalFunction { space, values })
}

/// Nonzero frequencies where the spectrum vanishes.
pub fn zero_set(spectrum: &Spectrum) -> PointSet {
    let space = spectrum.space;
    PointSet::from_indices(
        space,
        spectrum
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| c.is_zero())
            .map(|(i, _)| i),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equidistribution {
    pub direction: FpVector,
    pub counts: Vec<usize>,
    pub equidistributed: bool,
}

/// Counts of `E` on the hyperplanes `x.m = t`, cross-checked against the
/// vanishing of `1_E^(m)`.
pub fn equidistribution_check(set: &PointSet, m: &FpVector) -> Result<Equidistribution> {
    if m.is_zero() {
        return Err(Error::ZeroDirection);
    }
    let counts = hyperplane_counts(set, m);
    let equidistributed = counts.windows(2).all(|w| w[0] == w[1]);
    if equidistributed != set_coefficient(set, m).is_zero() {
        return Err(Error::InternalContradiction(format!(
            "equidistribution along {m} disagrees with the Fourier coefficient"
        )));
    }
    Ok(Equidistribution {
        direction: m.clone(),
        counts,
        equidistributed,
    })
}

/// `|A||E| = k p^d` and `E^(m) A^(m) = 0` for all `m != 0`.
///
/// Only canonical direction representatives are tested: for rational-valued
/// functions `F(rm) = g_r(F(m))`, so vanishing is constant along each
/// punctured line.
pub fn tiling_fourier_check(e: &PointSet, a: &PointSet, k: u64) -> Result<bool> {
    e.check_same_space(a)?;
    let space = e.space();
    if (e.len() as u128) * (a.len() as u128) != (k as u128) * (space.size() as u128) {
        return Ok(false);
    }
    for m in directions(space.modulus(), space.dim()) {
        let ec = set_coefficient(e, &m);
        if ec.is_zero() {
            continue;
        }
        let ac = set_coefficient(a, &m);
        if !(&ec * &ac).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn galois_symmetry_check(f: &RationalFunction) -> bool {
    dft(f).is_galois_symmetric()
}

/// `(f^(0), (f^(m))_{m in M})` with `M` the canonical direction list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiImage {
    pub average: BigRational,
    pub coefficients: Vec<(FpVector, CycNum)>,
}

pub fn phi_forward(f: &RationalFunction) -> PhiImage {
    let space = f.space;
    let coefficients = directions(space.modulus(), space.dim())
        .into_par_iter()
        .map(|m| {
            let c = fourier_coefficient(f, &m);
            (m, c)
        })
        .collect();
    PhiImage {
        average: f.average(),
        coefficients,
    }
}

/// Rebuilds the full spectrum by Galois conjugation, then inverts.
pub fn phi_inverse(space: Space, image: &PhiImage) -> Result<RationalFunction> {
    let p = space.modulus();
    let mut coeffs = vec![CycNum::zero(p); space.size()];
    coeffs[0] = CycNum::from_rational(p, image.average.clone());
    for (m, c) in &image.coefficients {
        if m.is_zero() {
            return Err(Error::ZeroDirection);
        }
        for r in 1..p.get() {
            coeffs[space.index_of(&m.scale(r))] = c.galois_apply(p.scalar(r))?;
        }
    }
    inverse_dft(&Spectrum::new(space, coeffs)?)
}

/// Both sides of the plain and squared Galois trace identities at `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceIdentity {
    pub orbit_sum: BigRational,
    pub trace: BigRational,
    pub orbit_abs_sq_sum: BigRational,
    pub trace_abs_sq: BigRational,
}

pub fn trace_identity(f: &RationalFunction, m: &FpVector) -> Result<TraceIdentity> {
    if m.is_zero() {
        return Err(Error::ZeroDirection);
    }
    let p = f.space.modulus();
    let base = fourier_coefficient(f, m);
    let mut sum = CycNum::zero(p);
    let mut sq_sum = CycNum::zero(p);
    for r in 1..p.get() {
        let c = fourier_coefficient(f, &m.scale(r));
        sq_sum.add_assign_ref(&c.abs_sq());
        sum.add_assign_ref(&c);
    }
    let orbit_sum = sum.to_rational().ok_or(Error::NonRationalResult)?;
    let orbit_abs_sq_sum = sq_sum.to_rational().ok_or(Error::NonRationalResult)?;
    let out = TraceIdentity {
        orbit_sum,
        trace: base.trace(),
        orbit_abs_sq_sum,
        trace_abs_sq: base.abs_sq().trace(),
    };
    if out.orbit_sum != out.trace || out.orbit_abs_sq_sum != out.trace_abs_sq {
        return Err(Error::InternalContradiction(format!(
            "trace identity fails at {m}"
        )));
    }
    Ok(out)
}

/// Averages of `f` over the parallel hyperplanes `x.m = t` and their
/// variance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperplaneStats {
    pub direction: FpVector,
    pub averages: Vec<BigRational>,
    pub mean: BigRational,
    pub variance: BigRational,
    pub trace_abs_sq: BigRational,
}

pub fn hyperplane_stats(f: &RationalFunction, m: &FpVector) -> Result<HyperplaneStats> {
    if m.is_zero() {
        return Err(Error::ZeroDirection);
    }
    let space = f.space;
    let p = space.p();
    let plane_size = BigRational::from_integer(BigInt::from(space.size() / p as usize));
    let mut sums = vec![BigRational::zero(); p as usize];
    for (i, v) in f.values.iter().enumerate() {
        sums[space.point(i).dot(m).value() as usize] += v;
    }
    let averages: Vec<BigRational> = sums.into_iter().map(|s| s / &plane_size).collect();
    let p_rat = BigRational::from_integer(BigInt::from(p));
    let mean = averages.iter().sum::<BigRational>() / &p_rat;
    let variance = averages
        .iter()
        .map(|a| {
            let dev = a - &mean;
            &dev * &dev
        })
        .sum::<BigRational>()
        / &p_rat;

    let coefficient = fourier_coefficient(f, m);
    let from_averages =
        CycNum::from_group_ring(space.modulus(), averages.clone()).scale(&p_rat.recip());
    if coefficient != from_averages {
        return Err(Error::InternalContradiction(format!(
            "coefficient at {m} disagrees with hyperplane averages"
        )));
    }
    let trace_abs_sq = coefficient.abs_sq().trace();
    if trace_abs_sq != variance {
        return Err(Error::InternalContradiction(format!(
            "variance along {m} disagrees with Tr(|f^(m)|^2)"
        )));
    }
    if mean != f.average() {
        return Err(Error::InternalContradiction(
            "mean of hyperplane averages differs from the global average".into(),
        ));
    }
    Ok(HyperplaneStats {
        direction: m.clone(),
        averages,
        mean,
        variance,
        trace_abs_sq,
    })
}

/// `sum_m |F(m)|^2`, which must be rational.
pub fn spectral_energy(spectrum: &Spectrum) -> Result<BigRational> {
    let mut acc = CycNum::zero(spectrum.space.modulus());
    for c in &spectrum.coeffs {
        acc.add_assign_ref(&c.abs_sq());
    }
    acc.to_rational().ok_or(Error::NonRationalResult)
}

/// Both sides of `p^-d sum f^2 = mu^2 + sum_{m in M} Var[mu_m]`.
pub fn variance_decomposition(f: &RationalFunction) -> Result<(BigRational, BigRational)> {
    let mu = f.average();
    let mut rhs = &mu * &mu;
    for m in directions(f.space.modulus(), f.space.dim()) {
        rhs += hyperplane_stats(f, &m)?.variance;
    }
    Ok((f.mean_square(), rhs))
}
