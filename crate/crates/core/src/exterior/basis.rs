use std::cmp::Ordering;

/// Strictly increasing set of coordinate indices (0-based), stored as a bit mask.
///
/// Stands for `dx_{i1}^...^dx_{ik}` or `@_{i1}^...^@_{ik}` depending on the
/// owning container.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Basis(u32);

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 24;

impl Basis {
    pub const EMPTY: Basis = Basis(0);

    pub fn single(i: usize) -> Basis {
        debug_assert!(i < MAX_DIM);
        Basis(1 << i)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn max_index(self) -> Option<usize> {
        (self.0 != 0).then(|| 31 - self.0.leading_zeros() as usize)
    }

    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|&i| self.contains(i)).collect()
    }

    /// Sorts an index sequence, returning the permutation sign, or `None`
    /// when an index repeats.
    pub fn from_indices(idx: &[usize]) -> Option<(bool, Basis)> {
        let mut bits = 0u32;
        let mut negative = false;
        for &i in idx {
            let b = 1u32 << i;
            if bits & b != 0 {
                return None;
            }
            // every earlier index larger than i is an inversion
            negative ^= (bits >> i).count_ones() % 2 == 1;
            bits |= b;
        }
        Some((negative, Basis(bits)))
    }

    /// `self ^ other`: `None` when they share an index, otherwise the
    /// reordering sign (`true` = negative) and the merged basis.
    pub fn wedge(self, other: Basis) -> Option<(bool, Basis)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut inversions = 0u32;
        let mut rest = other.0;
        while rest != 0 {
            let j = rest.trailing_zeros();
            inversions += (self.0 >> j).count_ones();
            rest &= rest - 1;
        }
        Some((inversions % 2 == 1, Basis(self.0 | other.0)))
    }

    /// Removes index `i`; the sign is `(-1)^(number of indices below i)`,
    /// i.e. the sign of moving `i` to the front first.
    pub fn remove(self, i: usize) -> Option<(bool, Basis)> {
        if !self.contains(i) {
            return None;
        }
        let below = (self.0 & ((1u32 << i) - 1)).count_ones();
        Some((below % 2 == 1, Basis(self.0 & !(1 << i))))
    }
}

impl Ord for Basis {
    /// Grade first, then lexicographic on the sorted index lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade().cmp(&other.grade()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Basis {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorting_sign() {
        assert_eq!(Basis::from_indices(&[1, 0]), Some((true, Basis(0b11))));
        assert_eq!(Basis::from_indices(&[0, 1, 2]), Some((false, Basis(0b111))));
        assert_eq!(Basis::from_indices(&[2, 0, 1]), Some((false, Basis(0b111))));
        assert_eq!(Basis::from_indices(&[0, 0]), None);
    }

    #[test]
    fn wedge_sign_matches_sorting() {
        for a in 0u32..16 {
            for b in 0u32..16 {
                let (ba, bb) = (Basis(a), Basis(b));
                let mut seq = ba.indices();
                seq.extend(bb.indices());
                assert_eq!(ba.wedge(bb), Basis::from_indices(&seq));
            }
        }
    }

    #[test]
    fn lexicographic_within_grade() {
        let b = |v: &[usize]| Basis::from_indices(v).unwrap().1;
        assert!(b(&[0, 1]) < b(&[0, 2]));
        assert!(b(&[0, 2]) < b(&[1, 2]));
        assert!(b(&[0, 3]) < b(&[1, 2]));
        assert!(b(&[2]) < b(&[0, 1]));
    }

    #[test]
    fn remove_sign() {
        let b = Basis::from_indices(&[0, 1, 2]).unwrap().1;
        assert_eq!(b.remove(0), Some((false, Basis(0b110))));
        assert_eq!(b.remove(1), Some((true, Basis(0b101))));
        assert_eq!(b.remove(2), Some((false, Basis(0b011))));
        assert_eq!(b.remove(3), None);
    }
}
