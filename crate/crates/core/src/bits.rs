//! Word-level helpers for vertex sets stored as `u64` masks.

use std::cmp::Ordering;

#[inline(always)]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline(always)]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Mask of all vertices with index strictly greater than `v`.
#[inline(always)]
pub(crate) const fn above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        u64::MAX << (v + 1)
    }
}

#[inline(always)]
pub(crate) fn popcount(x: u64) -> usize {
    x.count_ones() as usize
}

/// Iterates the set bits of `x` in ascending order.
#[inline]
pub(crate) fn iter_bits(x: u64) -> BitIter {
    BitIter(x)
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = popcount(self.0);
        (k, Some(k))
    }
}

impl ExactSizeIterator for BitIter {}

#[inline]
pub(crate) fn open_nbhd(adj: &[u64], x: u64) -> u64 {
    iter_bits(x).fold(0, |acc, v| acc | adj[v])
}

#[inline]
pub(crate) fn closed_nbhd(adj: &[u64], x: u64) -> u64 {
    x | open_nbhd(adj, x)
}

#[inline]
pub(crate) fn is_independent(adj: &[u64], x: u64) -> bool {
    iter_bits(x).all(|v| adj[v] & x == 0)
}

/// Canonical order on sets: by cardinality, then lexicographically on the
/// ascending lists of members.
#[inline]
pub(crate) fn canonical_cmp(a: u64, b: u64) -> Ordering {
    match popcount(a).cmp(&popcount(b)) {
        Ordering::Equal if a == b => Ordering::Equal,
        Ordering::Equal => {
            let diff = a ^ b;
            let lowest = diff & diff.wrapping_neg();
            if a & lowest != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        }
        ord => ord,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn members(x: u64) -> Vec<usize> {
        iter_bits(x).collect()
    }

    #[test]
    fn above_handles_top_bit() {
        assert_eq!(above(63), 0);
        assert_eq!(above(62), 1u64 << 63);
        assert_eq!(above(0), u64::MAX - 1);
    }

    #[test]
    fn canonical_order_matches_vector_comparison() {
        for a in 0u64..64 {
            for b in 0u64..64 {
                let expected = popcount(a)
                    .cmp(&popcount(b))
                    .then_with(|| members(a).cmp(&members(b)));
                assert_eq!(canonical_cmp(a, b), expected, "{a:b} vs {b:b}");
            }
        }
    }
}
