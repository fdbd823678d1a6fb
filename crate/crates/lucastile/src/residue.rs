//! Words over Z_4 and their bit-packed fast path.
//!
//! A [`ResidueVector`] is a length-n word with entries in {0,1,2,3}; it names
//! a cube translate representative. The unpacked `Vec<u8>` form is the
//! reference representation. For the exhaustive checks, words of dimension at
//! most 31 are packed two bits per coordinate into a `u64`; the packed
//! helpers live in this module and are cross-checked against the unpacked
//! path by the unit tests.

use std::fmt;

use crate::error::{Error, Result};

/// Largest dimension representable in a single packed `u64`.
pub(crate) const MAX_PACKED_DIM: usize = 31;

/// A word of residues mod 4. Entries are always in {0,1,2,3}.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ResidueVector {
    entries: Vec<u8>,
}

impl ResidueVector {
    /// Build a word, rejecting entries outside {0,1,2,3}.
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        for (position, &entry) in entries.iter().enumerate() {
            if entry > 3 {
                return Err(Error::EntryOutOfRange { entry, position });
            }
        }
        Ok(Self { entries })
    }

    /// The all-zero word of dimension `n`.
    pub fn zero(n: usize) -> Self {
        Self {
            entries: vec![0; n],
        }
    }

    /// The word with every entry equal to `value` (must be < 4).
    pub fn constant(n: usize, value: u8) -> Result<Self> {
        Self::new(vec![value; n])
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    /// Entry at 1-based coordinate `i`.
    pub fn entry(&self, i: usize) -> Result<u8> {
        if i == 0 || i > self.dim() {
            return Err(Error::CoordinateOutOfRange {
                coordinate: i,
                dim: self.dim(),
            });
        }
        Ok(self.entries[i - 1])
    }

    /// Entrywise sum mod 4.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: other.dim(),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a + b) & 3)
            .collect();
        Ok(Self { entries })
    }

    /// Add `delta` to every entry, mod 4.
    pub fn shift_all(&self, delta: u8) -> Self {
        let entries = self.entries.iter().map(|&e| (e + delta) & 3).collect();
        Self { entries }
    }

    /// Cyclic rotation moving every entry `k` positions to the right.
    pub fn rotate_right(&self, k: usize) -> Self {
        let n = self.dim();
        if n == 0 {
            return self.clone();
        }
        let k = k % n;
        let mut entries = Vec::with_capacity(n);
        for i in 0..n {
            entries.push(self.entries[(i + n - k) % n]);
        }
        Self { entries }
    }

    /// How many entries equal `value`.
    pub fn count_entry(&self, value: u8) -> usize {
        self.entries.iter().filter(|&&e| e == value).count()
    }

    pub fn contains_three(&self) -> bool {
        self.entries.contains(&3)
    }

    /// Number of entries equal to 1 (the weight of the generating subset).
    pub fn weight_of_ones(&self) -> usize {
        self.count_entry(1)
    }

    /// The {0,1}-image of a word over {0,1,2} under the substitution 2 -> 0,
    /// as a bitmask (bit i-1 set iff entry i equals 1). Requires dim <= 31
    /// and no entry 3.
    pub fn ones_mask(&self) -> Result<u32> {
        if self.dim() > MAX_PACKED_DIM {
            return Err(Error::EnumerationTooLarge {
                n: self.dim(),
                max: MAX_PACKED_DIM,
            });
        }
        let mut mask = 0u32;
        for (position, &entry) in self.entries.iter().enumerate() {
            if entry == 3 {
                return Err(Error::UnexpectedThree { position });
            }
            if entry == 1 {
                mask |= 1 << position;
            }
        }
        Ok(mask)
    }
}

impl fmt::Display for ResidueVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &e in &self.entries {
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Mask with a 1 in each lane's low bit, for the first `n` lanes.
pub(crate) fn low_bits_mask(n: usize) -> u64 {
    debug_assert!(n <= MAX_PACKED_DIM);
    let mut mask = 0u64;
    for i in 0..n {
        mask |= 1 << (2 * i);
    }
    mask
}

/// Pack a word into 2-bit lanes, entry i in bits 2i..2i+2.
pub(crate) fn pack(v: &ResidueVector) -> u64 {
    debug_assert!(v.dim() <= MAX_PACKED_DIM);
    let mut bits = 0u64;
    for (i, &e) in v.entries().iter().enumerate() {
        bits |= (e as u64) << (2 * i);
    }
    bits
}

pub(crate) fn unpack(bits: u64, n: usize) -> ResidueVector {
    let entries = (0..n).map(|i| ((bits >> (2 * i)) & 3) as u8).collect();
    ResidueVector { entries }
}

/// Lanewise sum mod 4 of two packed words; carries never cross lanes.
pub(crate) fn packed_add(a: u64, b: u64, low_mask: u64) -> u64 {
    (a ^ b) ^ ((a & b & low_mask) << 1)
}

/// True iff some lane of `a - b` equals 2 mod 4, i.e. the low bits agree
/// and the high bits differ.
pub(crate) fn packed_halfway_apart(a: u64, b: u64, low_mask: u64) -> bool {
    let x = a ^ b;
    (x >> 1) & !x & low_mask != 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rv(entries: &[u8]) -> ResidueVector {
        ResidueVector::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn rejects_non_residue_entries() {
        assert!(matches!(
            ResidueVector::new(vec![0, 4]),
            Err(Error::EntryOutOfRange {
                entry: 4,
                position: 1
            })
        ));
    }

    #[test]
    fn rotate_right_shifts_cyclically() {
        assert_eq!(rv(&[1, 2, 0]).rotate_right(1), rv(&[0, 1, 2]));
        assert_eq!(rv(&[1, 2, 0]).rotate_right(3), rv(&[1, 2, 0]));
    }

    #[test]
    fn add_wraps_mod_4() {
        assert_eq!(rv(&[3, 2, 1]).add(&rv(&[1, 2, 3])).unwrap(), rv(&[0, 0, 0]));
        assert!(rv(&[1]).add(&rv(&[1, 2])).is_err());
    }

    #[test]
    fn shift_all_adds_the_same_delta_everywhere() {
        assert_eq!(rv(&[0, 1, 2, 3]).shift_all(2), rv(&[2, 3, 0, 1]));
    }

    #[test]
    fn ones_mask_applies_the_two_to_zero_substitution() {
        assert_eq!(rv(&[1, 2, 0, 1]).ones_mask().unwrap(), 0b1001);
        assert!(rv(&[1, 3, 0]).ones_mask().is_err());
    }

    #[test]
    fn display_concatenates_digits() {
        assert_eq!(rv(&[1, 2, 0]).to_string(), "120");
    }

    proptest! {
        #[test]
        fn pack_round_trips(entries in proptest::collection::vec(0u8..4, 0..=31)) {
            let v = rv(&entries);
            prop_assert_eq!(unpack(pack(&v), v.dim()), v);
        }

        #[test]
        fn packed_add_matches_unpacked(
            a in proptest::collection::vec(0u8..4, 1..=31),
            b in proptest::collection::vec(0u8..4, 1..=31),
        ) {
            let n = a.len().min(b.len());
            let (a, b) = (rv(&a[..n]), rv(&b[..n]));
            let low = low_bits_mask(n);
            let sum = unpack(packed_add(pack(&a), pack(&b), low), n);
            prop_assert_eq!(sum, a.add(&b).unwrap());
        }

        #[test]
        fn packed_halfway_matches_entrywise_difference(
            a in proptest::collection::vec(0u8..4, 1..=31),
            b in proptest::collection::vec(0u8..4, 1..=31),
        ) {
            let n = a.len().min(b.len());
            let (a, b) = (rv(&a[..n]), rv(&b[..n]));
            let expect = a
                .entries()
                .iter()
                .zip(b.entries())
                .any(|(x, y)| (x + 4 - y) & 3 == 2);
            let low = low_bits_mask(n);
            prop_assert_eq!(packed_halfway_apart(pack(&a), pack(&b), low), expect);
        }
    }
}
