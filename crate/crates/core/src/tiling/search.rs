//! Exhaustive search for 1-tiling partners, by exact cover of the space
//! with translates of `E`.

use crate::error::{Error, Result};
use crate::ffvec::{PointSet, Space};

struct Cover<'a> {
    space: Space,
    tile: &'a [usize],
    covered: Vec<bool>,
    shifts: Vec<usize>,
}

impl Cover<'_> {
    fn place(&mut self, shift: usize) -> bool {
        let cells: Vec<usize> = self
            .tile
            .iter()
            .map(|&e| self.space.add_index(e, shift))
            .collect();
        if cells.iter().any(|&c| self.covered[c]) {
            return false;
        }
        for c in cells {
            self.covered[c] = true;
        }
        self.shifts.push(shift);
        true
    }

    fn unplace(&mut self) {
        let shift = self.shifts.pop().expect("placed");
        for &e in self.tile {
            self.covered[self.space.add_index(e, shift)] = false;
        }
    }

    fn solve(&mut self) -> bool {
        let Some(x) = self.covered.iter().position(|&c| !c) else {
            return true;
        };
        for i in 0..self.tile.len() {
            let shift = self.space.sub_index(x, self.tile[i]);
            if self.place(shift) {
                if self.solve() {
                    return true;
                }
                self.unplace();
            }
        }
        false
    }
}

/// First `A` (in search order) with `E + A = F_p^d` at level 1, if any.
pub fn find_tiling_partner(e: &PointSet) -> Result<Option<PointSet>> {
    let space = e.space();
    if e.is_empty() {
        return Err(Error::EmptySet);
    }
    if space.size() % e.len() != 0 {
        return Ok(None);
    }
    let tile = e.indices();
    let mut cover = Cover {
        space,
        tile: &tile,
        covered: vec![false; space.size()],
        shifts: Vec::new(),
    };
    if cover.solve() {
        Ok(Some(PointSet::from_indices(space, cover.shifts)))
    } else {
        Ok(None)
    }
}

/// A tiling pair found by [`enumerate_tilings`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TilingSearch {
    pub e: PointSet,
    pub a: PointSet,
}

/// Walks the `size`-subsets of the space that contain the origin, in
/// lexicographic order of their indices, and keeps the first `limit` that
/// 1-tile.
pub fn enumerate_tilings(space: Space, size: usize, limit: usize) -> Result<Vec<TilingSearch>> {
    if size == 0 {
        return Err(Error::EmptySet);
    }
    let n = space.size();
    let mut found = Vec::new();
    if n % size != 0 || size > n {
        return Ok(found);
    }
    // combination of size - 1 indices drawn from 1..n
    let r = size - 1;
    let mut combo: Vec<usize> = (1..=r).collect();
    loop {
        let e = PointSet::from_indices(space, std::iter::once(0).chain(combo.iter().copied()));
        if let Some(a) = find_tiling_partner(&e)? {
            found.push(TilingSearch { e, a });
            if found.len() >= limit {
                break;
            }
        }
        // next combination
        let mut i = r;
        loop {
            if i == 0 {
                return Ok(found);
            }
            i -= 1;
            if combo[i] < n - r + i {
                combo[i] += 1;
                for j in i + 1..r {
                    combo[j] = combo[j - 1] + 1;
                }
                break;
            }
        }
        if r == 0 {
            break;
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffvec::PrimeModulus;
    use crate::tiling::tiling_direct_check;

    fn space(p: u64, d: usize) -> Space {
        Space::new(PrimeModulus::new(p).unwrap(), d).unwrap()
    }

    #[test]
    fn partners_are_tilings() {
        let s = space(5, 2);
        let e = PointSet::from_points(s, (0..5).map(|t| s.vector(&[t, t * t]).unwrap())).unwrap();
        let a = find_tiling_partner(&e).unwrap().unwrap();
        assert!(tiling_direct_check(&e, &a, 1).unwrap().holds);
        let bad = PointSet::from_coords(s, &[&[0, 0], &[1, 1], &[2, 3], &[3, 1], &[2, 4]]).unwrap();
        assert_eq!(find_tiling_partner(&bad).unwrap(), None);
    }

    #[test]
    fn enumeration_counts_in_z5() {
        // only {0} and Z_5 itself tile Z_5 among sets containing 0
        let z5 = space(5, 1);
        assert_eq!(enumerate_tilings(z5, 1, 10).unwrap().len(), 1);
        assert!(enumerate_tilings(z5, 2, 10).unwrap().is_empty());
        assert_eq!(enumerate_tilings(z5, 5, 10).unwrap().len(), 1);
    }

    #[test]
    fn enumeration_in_f3_squared() {
        // cross-checked against brute force over every candidate partner
        let s = space(3, 2);
        let found = enumerate_tilings(s, 3, usize::MAX).unwrap();
        for t in &found {
            assert!(tiling_direct_check(&t.e, &t.a, 1).unwrap().holds);
        }
        let brute = (1..9usize)
            .flat_map(|i| (i + 1..9).map(move |j| (i, j)))
            .filter(|&(i, j)| {
                let e = PointSet::from_indices(s, [0, i, j]);
                (0..512usize).any(|code| {
                    let a = PointSet::from_indices(s, (0..9).filter(|b| code >> b & 1 == 1));
                    tiling_direct_check(&e, &a, 1).unwrap().holds
                })
            })
            .count();
        assert_eq!(found.len(), brute);
    }
}
