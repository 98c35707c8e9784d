//! The ring `(Z/pZ)[z_1..z_d] / (z_1^p - 1, ..., z_d^p - 1)`.
//!
//! A polynomial is a dense coefficient array indexed by its exponent vector,
//! which is a point of `F_p^d` in the lexicographic order of [`Space`].
//! Multiplying by `z^a` translates the exponent set by `a`, so the product of
//! two set encodings counts how often each point is covered.
//!
//! The moment identities are evaluated from their closed forms. The second
//! one vanishes for every tiling when `d >= 2` or `p >= 5`; for `d = 1` and
//! `p = 3` the constant `k (1 + 4)` is nonzero mod 3.

use crate::error::{Error, Result};
use crate::ffvec::{FpScalar, FpVector, PointSet, Space};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotientPoly {
    space: Space,
    coeffs: Vec<u64>,
}

impl QuotientPoly {
    pub fn zero(space: Space) -> Self {
        QuotientPoly {
            space,
            coeffs: vec![0; space.size()],
        }
    }

    /// `c * prod_i (1 + z_i + ... + z_i^(p-1))`, i.e. `c` times every monomial.
    pub fn all_ones(space: Space, c: u64) -> Self {
        QuotientPoly {
            space,
            coeffs: vec![c % space.p(); space.size()],
        }
    }

    pub fn monomial(space: Space, exponent: &FpVector) -> Self {
        let mut q = Self::zero(space);
        q.coeffs[space.index_of(exponent)] = 1 % space.p();
        q
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, exponent: &FpVector) -> FpScalar {
        self.space
            .modulus()
            .scalar(self.coeffs[self.space.index_of(exponent)])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &QuotientPoly) -> Result<QuotientPoly> {
        check(self.space, other.space)?;
        let p = self.space.modulus();
        Ok(QuotientPoly {
            space: self.space,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| p.add(a, b))
                .collect(),
        })
    }
}

fn check(a: Space, b: Space) -> Result<()> {
    if a.modulus() != b.modulus() {
        return Err(Error::ModulusMismatch {
            left: a.p(),
            right: b.p(),
        });
    }
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    Ok(())
}

/// `sum_{e in E} z^e`.
pub fn encode_set(set: &PointSet) -> QuotientPoly {
    let space = set.space();
    let mut q = QuotientPoly::zero(space);
    for i in set.indices() {
        q.coeffs[i] = 1 % space.p();
    }
    q
}

/// Exponents add in `F_p^d`, coefficients in `Z/pZ`.
pub fn ring_mul(a: &QuotientPoly, b: &QuotientPoly) -> Result<QuotientPoly> {
    check(a.space, b.space)?;
    let space = a.space;
    let p = space.modulus();
    let mut out = QuotientPoly::zero(space);
    let bs: Vec<(usize, u64)> = b
        .coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (i, c))
        .collect();
    for (i, &ca) in a.coeffs.iter().enumerate() {
        if ca == 0 {
            continue;
        }
        for &(j, cb) in &bs {
            let k = space.add_index(i, j);
            out.coeffs[k] = p.add(out.coeffs[k], p.mul(ca, cb));
        }
    }
    Ok(out)
}

/// The polynomial tiling identity, plus `|E||A| = k p^d` over the integers
/// (the mod-`p` identity alone cannot tell `k` from `k + p`).
pub fn tiling_poly_check(e: &PointSet, a: &PointSet, k: u64) -> Result<bool> {
    e.check_same_space(a)?;
    let space = e.space();
    if (e.len() as u128) * (a.len() as u128) != (k as u128) * (space.size() as u128) {
        return Ok(false);
    }
    let product = ring_mul(&encode_set(e), &encode_set(a))?;
    Ok(product == QuotientPoly::all_ones(space, k))
}

/// `|A| sum_e e + |E| sum_a a` in `(Z/pZ)^d`.
pub fn moment_identity_first(e: &PointSet, a: &PointSet) -> Result<FpVector> {
    e.check_same_space(a)?;
    let p = e.modulus();
    let se = e.sum().scale(a.len() as u64 % p.get());
    let sa = a.sum().scale(e.len() as u64 % p.get());
    Ok(&se + &sa)
}

/// `(sum e_j^2)|A| + (sum a_j^2)|E| + 2 (sum e_j)(sum a_j)` mod `p`, with a
/// zero-based coordinate index `axis`.
pub fn moment_identity_second(e: &PointSet, a: &PointSet, axis: usize) -> Result<FpScalar> {
    e.check_same_space(a)?;
    if axis >= e.dim() {
        return Err(Error::BadIndex {
            index: axis,
            dim: e.dim(),
        });
    }
    let p = e.modulus();
    let power_sums = |set: &PointSet| {
        set.iter().fold((0u64, 0u64), |(s1, s2), x| {
            let c = x.coords()[axis];
            (p.add(s1, c), p.add(s2, p.mul(c, c)))
        })
    };
    let (e1, e2) = power_sums(e);
    let (a1, a2) = power_sums(a);
    let size_a = a.len() as u64 % p.get();
    let size_e = e.len() as u64 % p.get();
    let v = p.add(
        p.add(p.mul(e2, size_a), p.mul(a2, size_e)),
        p.mul(2 % p.get(), p.mul(e1, a1)),
    );
    Ok(p.scalar(v))
}
