//! Vertex sets as `u64` bitmasks. Vertices are dense indices `0..order`,
//! so the whole crate is capped at 64 vertices per digraph.

/// Largest supported digraph order.
pub const MAX_ORDER: usize = 64;

/// Mask with the lowest `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> u64 {
    debug_assert!(n <= MAX_ORDER);
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub fn contains(mask: u64, v: usize) -> bool {
    mask & bit(v) != 0
}

/// Iterate the set bits of `mask` in ascending order.
#[inline]
pub fn iter(mask: u64) -> BitIter {
    BitIter(mask)
}

pub struct BitIter(u64);

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
}

/// Collect the set bits into a sorted `Vec`.
pub fn to_vec(mask: u64) -> Vec<usize> {
    iter(mask).collect()
}

pub fn from_slice(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | bit(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iter_ascending() {
        assert_eq!(to_vec(0b1011), vec![0, 1, 3]);
        assert_eq!(to_vec(0), Vec::<usize>::new());
        assert_eq!(full_mask(64), u64::MAX);
        assert_eq!(full_mask(0), 0);
    }
}
