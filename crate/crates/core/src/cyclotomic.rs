//! Exact arithmetic in the cyclotomic field `Q(xi)`, `xi` a primitive `p`-th
//! root of unity.
//!
//! Elements are dense vectors of `p - 1` rationals in the basis
//! `1, xi, ..., xi^(p-2)`. Internally, products and Galois actions are formed
//! in the group ring `Q[Z/p]` (length `p`) and then reduced with
//! `xi^(p-1) = -(1 + xi + ... + xi^(p-2))`. For `p = 2` the field is `Q` and
//! `xi = -1`, which the same reduction handles.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ffvec::{FpScalar, PrimeModulus};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycNum {
    p: PrimeModulus,
    coeffs: Vec<BigRational>,
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl CycNum {
    pub fn zero(p: PrimeModulus) -> Self {
        CycNum {
            p,
            coeffs: vec![BigRational::zero(); p.get() as usize - 1],
        }
    }

    pub fn one(p: PrimeModulus) -> Self {
        Self::from_rational(p, BigRational::one())
    }

    pub fn from_rational(p: PrimeModulus, r: BigRational) -> Self {
        let mut x = Self::zero(p);
        x.coeffs[0] = r;
        x
    }

    /// `xi^k`, with `k` reduced mod `p`.
    pub fn from_power(p: PrimeModulus, k: i64) -> Self {
        let mut weights = vec![BigRational::zero(); p.get() as usize];
        weights[p.reduce(k) as usize] = BigRational::one();
        Self::from_group_ring(p, weights)
    }

    /// `sum_t weights[t] xi^t` for a weight vector of length `p`.
    pub fn from_group_ring(p: PrimeModulus, mut weights: Vec<BigRational>) -> Self {
        let n = p.get() as usize;
        assert_eq!(weights.len(), n, "group ring vector must have length p");
        let top = weights.pop().expect("p >= 2");
        if !top.is_zero() {
            for w in weights.iter_mut() {
                *w -= &top;
            }
        }
        CycNum { p, coeffs: weights }
    }

    /// Builds an element from its `p - 1` basis coefficients.
    pub fn from_coeffs(p: PrimeModulus, coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.len() != p.get() as usize - 1 {
            return Err(Error::DimensionMismatch {
                left: p.get() as usize - 1,
                right: coeffs.len(),
            });
        }
        Ok(CycNum { p, coeffs })
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value if every coefficient of `xi^1 .. xi^(p-2)` vanishes.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn to_group_ring(&self) -> Vec<BigRational> {
        let mut v = self.coeffs.clone();
        v.push(BigRational::zero());
        v
    }

    fn same_field(&self, other: &CycNum) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch {
                left: self.p.get(),
                right: other.p.get(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &CycNum) -> Result<CycNum> {
        self.same_field(other)?;
        Ok(CycNum {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &CycNum) -> Result<CycNum> {
        self.same_field(other)?;
        Ok(CycNum {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Convolution of exponent vectors followed by reduction.
    pub fn checked_mul(&self, other: &CycNum) -> Result<CycNum> {
        self.same_field(other)?;
        let n = self.p.get() as usize;
        let mut acc = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                acc[(i + j) % n] += a * b;
            }
        }
        Ok(Self::from_group_ring(self.p, acc))
    }

    pub fn add_assign_ref(&mut self, other: &CycNum) {
        assert_eq!(self.p, other.p, "cyclotomic elements of different fields");
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub fn scale(&self, r: &BigRational) -> CycNum {
        CycNum {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplication by `xi^k`; a rotation in the group ring.
    pub fn mul_power(&self, k: i64) -> CycNum {
        let n = self.p.get() as usize;
        let shift = self.p.reduce(k) as usize;
        let src = self.to_group_ring();
        let mut out = vec![BigRational::zero(); n];
        for (j, c) in src.into_iter().enumerate() {
            out[(j + shift) % n] = c;
        }
        Self::from_group_ring(self.p, out)
    }

    /// The automorphism `g_r : xi -> xi^r`.
    pub fn galois_apply(&self, r: FpScalar) -> Result<CycNum> {
        if r.modulus() != self.p {
            return Err(Error::ModulusMismatch {
                left: self.p.get(),
                right: r.modulus().get(),
            });
        }
        if r.is_zero() {
            return Err(Error::ZeroGaloisIndex);
        }
        let n = self.p.get() as usize;
        let r = r.value() as usize;
        let mut out = vec![BigRational::zero(); n];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out[(r * j) % n] += c;
            }
        }
        Ok(Self::from_group_ring(self.p, out))
    }

    /// Galois trace via `Tr(1) = p - 1`, `Tr(xi^j) = -1` for `1 <= j <= p - 1`.
    pub fn trace(&self) -> BigRational {
        let pm1 = BigRational::from_integer(BigInt::from(self.p.get() - 1));
        let rest: BigRational = self.coeffs[1..].iter().sum();
        &self.coeffs[0] * pm1 - rest
    }

    /// Complex conjugation, which is `g_{-1}`; the identity for `p = 2`.
    pub fn conj(&self) -> CycNum {
        let minus_one = FpScalar::new(-1, self.p);
        self.galois_apply(minus_one)
            .expect("-1 is a nonzero residue")
    }

    /// `x * conj(x)`.
    pub fn abs_sq(&self) -> CycNum {
        self * &self.conj()
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*xi")?,
                _ => write!(f, "({c})*xi^{j}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        self.checked_add(rhs).expect("same cyclotomic field")
    }
}

impl Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        self.checked_sub(rhs).expect("same cyclotomic field")
    }
}

impl Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        self.checked_mul(rhs).expect("same cyclotomic field")
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
