//! Fixed-width packet bitsets. Bit `j` is packet `j + 1`.

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct PacketSet {
    words: Box<[u64]>,
}

impl PacketSet {
    pub fn empty(theta: usize) -> Self {
        PacketSet { words: vec![0u64; theta.div_ceil(64).max(1)].into_boxed_slice() }
    }

    pub fn insert(&mut self, bit: usize) {
        self.words[bit / 64] |= 1u64 << (bit % 64);
    }

    pub fn contains(&self, bit: usize) -> bool {
        self.words[bit / 64] & (1u64 << (bit % 64)) != 0
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union_with(&mut self, other: &PacketSet) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= *b;
        }
    }

    /// `self = a | b`.
    pub fn assign_union(&mut self, a: &PacketSet, b: &PacketSet) {
        for ((out, x), y) in self.words.iter_mut().zip(a.words.iter()).zip(b.words.iter()) {
            *out = x | y;
        }
    }

    pub fn intersection_count(&self, other: &PacketSet) -> usize {
        self.words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &PacketSet) -> bool {
        self.words.iter().zip(other.words.iter()).all(|(a, b)| a & !b == 0)
    }
}

/// Node subsets for enumeration; bit `i` is node `i + 1`.
pub(crate) type NodeMask = u64;

pub(crate) fn mask_to_nodes(mask: NodeMask) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut rest = mask;
    while rest != 0 {
        out.push(rest.trailing_zeros() as usize + 1);
        rest &= rest - 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crosses_word_boundaries() {
        let mut a = PacketSet::empty(130);
        a.insert(0);
        a.insert(63);
        a.insert(64);
        a.insert(129);
        assert_eq!(a.count(), 4);
        assert!(a.contains(129) && !a.contains(128));

        let mut b = PacketSet::empty(130);
        b.insert(64);
        b.insert(100);
        assert_eq!(a.intersection_count(&b), 1);
        let mut u = PacketSet::empty(130);
        u.assign_union(&a, &b);
        assert_eq!(u.count(), 5);
        assert!(a.is_subset(&u) && b.is_subset(&u));
        assert!(!u.is_subset(&a));
    }

    #[test]
    fn node_masks() {
        assert_eq!(mask_to_nodes(0b1011), vec![1, 2, 4]);
    }
}
