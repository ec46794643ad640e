use std::fmt;

const WORD: usize = 64;

/// A packed, growable bit vector. Bit `i` lives in word `i / 64` at position
/// `i % 64`. Bits past `len` are always zero so derived equality is exact.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BitRow {
    words: Vec<u64>,
    len: usize,
}

impl BitRow {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn zeros(len: usize) -> Self {
        BitRow {
            words: vec![0; len.div_ceil(WORD)],
            len,
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut row = BitRow {
            words: vec![u64::MAX; len.div_ceil(WORD)],
            len,
        };
        row.clear_tail();
        row
    }

    pub fn with_capacity(bits: usize) -> Self {
        BitRow {
            words: Vec::with_capacity(bits.div_ceil(WORD)),
            len: 0,
        }
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut row = BitRow::new();
        for b in bits {
            row.push(b);
        }
        row
    }

    /// Builds a row directly from packed words; bits past `len` are cleared.
    pub fn from_words(mut words: Vec<u64>, len: usize) -> Self {
        words.resize(len.div_ceil(WORD), 0);
        let mut row = BitRow { words, len };
        row.clear_tail();
        row
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, bit: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD);
        if bit {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn push(&mut self, bit: bool) {
        if self.len.is_multiple_of(WORD) {
            self.words.push(0);
        }
        if bit {
            self.words[self.len / WORD] |= 1u64 << (self.len % WORD);
        }
        self.len += 1;
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of set bits in `start..end`.
    pub fn count_ones_in(&self, start: usize, end: usize) -> usize {
        assert!(start <= end && end <= self.len);
        if start == end {
            return 0;
        }
        let (sw, ew) = (start / WORD, (end - 1) / WORD);
        let lo_mask = u64::MAX << (start % WORD);
        let hi_mask = u64::MAX >> (WORD - 1 - (end - 1) % WORD);
        if sw == ew {
            return (self.words[sw] & lo_mask & hi_mask).count_ones() as usize;
        }
        let mut n = (self.words[sw] & lo_mask).count_ones() as usize;
        n += self.words[sw + 1..ew]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>();
        n + (self.words[ew] & hi_mask).count_ones() as usize
    }

    /// Index of the first bit equal to `bit`, if any.
    pub fn first_index_of(&self, bit: bool) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            let w = if bit { w } else { !w };
            if w != 0 {
                let i = wi * WORD + w.trailing_zeros() as usize;
                return (i < self.len).then_some(i);
            }
        }
        None
    }

    /// Index of the last bit equal to `bit`, if any.
    pub fn last_index_of(&self, bit: bool) -> Option<usize> {
        for wi in (0..self.words.len()).rev() {
            let mut w = if bit { self.words[wi] } else { !self.words[wi] };
            if wi == self.words.len() - 1 && !self.len.is_multiple_of(WORD) {
                w &= (1u64 << (self.len % WORD)) - 1;
            }
            if w != 0 {
                return Some(wi * WORD + (WORD - 1 - w.leading_zeros() as usize));
            }
        }
        None
    }

    /// Copies bits `start..end` into a fresh row.
    pub fn slice(&self, start: usize, end: usize) -> BitRow {
        assert!(start <= end && end <= self.len);
        let len = end - start;
        let shift = start % WORD;
        let first = start / WORD;
        let mut words = Vec::with_capacity(len.div_ceil(WORD));
        for k in 0..len.div_ceil(WORD) {
            let lo = self.words[first + k] >> shift;
            let hi = if shift == 0 {
                0
            } else {
                self.words
                    .get(first + k + 1)
                    .map_or(0, |w| w << (WORD - shift))
            };
            words.push(lo | hi);
        }
        BitRow::from_words(words, len)
    }

    fn clear_tail(&mut self) {
        if !self.len.is_multiple_of(WORD) {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << (self.len % WORD)) - 1;
            }
        }
    }
}

impl fmt::Debug for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitRow(")?;
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn push_get_set() {
        let mut r = BitRow::new();
        for i in 0..130 {
            r.push(i % 3 == 0);
        }
        assert_eq!(r.len(), 130);
        assert!(r.get(129));
        assert!(!r.get(128));
        r.set(128, true);
        assert!(r.get(128));
        assert_eq!(r.count_ones(), 45);
    }

    #[test]
    fn first_and_last() {
        let r = BitRow::from_bools([false, false, true, false, true, false]);
        assert_eq!(r.first_index_of(true), Some(2));
        assert_eq!(r.last_index_of(true), Some(4));
        assert_eq!(r.first_index_of(false), Some(0));
        assert_eq!(r.last_index_of(false), Some(5));
        let ones = BitRow::ones(70);
        assert_eq!(ones.first_index_of(false), None);
        assert_eq!(ones.last_index_of(false), None);
        assert_eq!(BitRow::zeros(64).last_index_of(true), None);
    }

    proptest! {
        #[test]
        fn range_count_and_slice_match_naive(bits in prop::collection::vec(any::<bool>(), 0..300), a in 0usize..300, b in 0usize..300) {
            let r = BitRow::from_bools(bits.iter().copied());
            let (lo, hi) = (a.min(b).min(bits.len()), a.max(b).min(bits.len()));
            let naive = bits[lo..hi].iter().filter(|&&x| x).count();
            prop_assert_eq!(r.count_ones_in(lo, hi), naive);
            let s = r.slice(lo, hi);
            prop_assert_eq!(s, BitRow::from_bools(bits[lo..hi].iter().copied()));
        }
    }
}
