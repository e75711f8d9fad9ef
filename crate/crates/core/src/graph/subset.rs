use std::fmt;

use crate::combinat::{rank_triple, unrank_unchecked};
use crate::error::{Error, Result};
use crate::graph::{graph_stats, TripleVertex};

/// A set of vertices of G(n,3,1), stored as a bitset over colex ranks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSubset {
    n: usize,
    universe: usize,
    bits: Vec<u64>,
}

impl VertexSubset {
    pub fn empty(n: usize) -> Result<Self> {
        let universe = graph_stats(n)?.vertices as usize;
        Ok(VertexSubset { n, universe, bits: vec![0; universe.div_ceil(64)] })
    }

    pub fn full(n: usize) -> Result<Self> {
        let mut s = Self::empty(n)?;
        for i in 0..s.universe {
            s.insert(i);
        }
        Ok(s)
    }

    pub fn from_indices(n: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut s = Self::empty(n)?;
        for i in indices {
            if i >= s.universe {
                return Err(Error::IndexOutOfRange { index: i as u64, count: s.universe as u64 });
            }
            s.insert(i);
        }
        Ok(s)
    }

    pub fn from_triples(n: usize, triples: &[[u16; 3]]) -> Result<Self> {
        let mut s = Self::empty(n)?;
        for &t in triples {
            let v = TripleVertex::new(t, n)?;
            s.insert(rank_triple(&v, n)? as usize);
        }
        Ok(s)
    }

    pub(crate) fn from_words(n: usize, bits: Vec<u64>) -> Result<Self> {
        let mut s = Self::empty(n)?;
        if bits.len() != s.bits.len() {
            return Err(Error::Format(format!("expected {} words, got {}", s.bits.len(), bits.len())));
        }
        s.bits = bits;
        if let Some(i) = s.iter().find(|&i| i >= s.universe) {
            return Err(Error::IndexOutOfRange { index: i as u64, count: s.universe as u64 });
        }
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of vertices of the ambient graph, `C(n,3)`.
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn words(&self) -> &[u64] {
        &self.bits
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        assert!(i < self.universe, "vertex index {i} out of range");
        self.bits[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        if i < self.universe {
            self.bits[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Member indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn triples(&self) -> impl Iterator<Item = TripleVertex> + '_ {
        self.iter().map(|i| unrank_unchecked(i as u64))
    }

    pub fn complement(&self) -> VertexSubset {
        let mut bits: Vec<u64> = self.bits.iter().map(|w| !w).collect();
        let tail = self.universe % 64;
        if tail != 0 {
            *bits.last_mut().unwrap() &= (1u64 << tail) - 1;
        }
        VertexSubset { n: self.n, universe: self.universe, bits }
    }

    /// Sorted index list, used for lexicographic tie-breaks between witnesses.
    pub fn to_indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Relabels the ground set by `perm`, where `perm[i - 1]` is the image of `i`.
    pub fn permute(&self, perm: &[u16]) -> Result<VertexSubset> {
        assert_eq!(perm.len(), self.n);
        let mut out = VertexSubset::empty(self.n)?;
        for t in self.triples() {
            let [a, b, c] = t.elements();
            let img = TripleVertex::new([perm[a as usize - 1], perm[b as usize - 1], perm[c as usize - 1]], self.n)?;
            out.insert(img.rank() as usize);
        }
        Ok(out)
    }
}

impl fmt::Debug for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.triples().map(|t| t.elements())).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::choose3;

    #[test]
    fn complement_masks_tail_bits() {
        let s = VertexSubset::from_indices(6, [0, 5, 19]).unwrap();
        let c = s.complement();
        assert_eq!(c.len(), 17);
        assert_eq!(c.universe(), choose3(6) as usize);
        assert!(!c.contains(19) && c.contains(18));
        assert_eq!(c.complement(), s);
    }

    #[test]
    fn out_of_range_indices_rejected() {
        assert!(VertexSubset::from_indices(6, [20]).is_err());
        assert!(VertexSubset::from_triples(6, &[[1, 2, 7]]).is_err());
    }

    #[test]
    fn iter_is_sorted() {
        let s = VertexSubset::from_indices(8, [55, 3, 64 % 56, 17]).unwrap();
        assert_eq!(s.to_indices(), vec![3, 8, 17, 55]);
    }
}
