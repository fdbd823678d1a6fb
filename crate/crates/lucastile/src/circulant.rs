//! The circulant matrix A(n) = circ(1,2,0,...,0) and the code sets built
//! from it.
//!
//! For odd n >= 3 the Lagarias-Shor code is
//!
//! ```text
//! V = Ve(A) ∪ (Vo(A^T) + (2,...,2))  mod 4
//! ```
//!
//! where V(A) collects all subset sums of the rows of A together with the
//! zero vector, Ve keeps the words with an even number of 3s, and Vo(A^T)
//! keeps the words of V(A^T) with an odd number of 0s. The related code U(n)
//! collects the sums over nonempty independent sets of the cycle graph on
//! the row indices; it is exactly the part of V whose cube translates touch
//! the base cube.
//!
//! Subset sums run over all 2^n subsets in Gray-code order so each step
//! updates the running sum by a single row. Words are kept in canonical
//! lexicographic order and distinctness is verified, never assumed.

use std::fmt;

use crate::error::{Error, Result};
use crate::residue::{low_bits_mask, pack, packed_add, unpack, ResidueVector, MAX_PACKED_DIM};

/// Subset-sum enumeration refuses dimensions past this bound (2^n words).
pub const MAX_SUBSET_SUM_DIM: usize = 26;

/// An n x n circulant matrix over Z_4: row i+1 is row i rotated right once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantMatrix {
    rows: Vec<ResidueVector>,
}

impl CirculantMatrix {
    /// Build the circulant with the given first row.
    pub fn new(first_row: ResidueVector) -> Self {
        let n = first_row.dim();
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            rows.push(first_row.rotate_right(i));
        }
        Self { rows }
    }

    /// The matrix A(n) = circ(1,2,0,...,0). For n = 1 the first row is (1).
    pub fn standard(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::CoordinateOutOfRange {
                coordinate: 0,
                dim: 0,
            });
        }
        let mut first = vec![0u8; n];
        first[0] = 1;
        if n >= 2 {
            first[1] = 2;
        }
        Ok(Self::new(ResidueVector::new(first)?))
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[ResidueVector] {
        &self.rows
    }

    /// Row at 1-based index `i`.
    pub fn row(&self, i: usize) -> Result<&ResidueVector> {
        if i == 0 || i > self.dim() {
            return Err(Error::CoordinateOutOfRange {
                coordinate: i,
                dim: self.dim(),
            });
        }
        Ok(&self.rows[i - 1])
    }

    /// The transpose, again circulant: its first row is the first column.
    pub fn transpose(&self) -> Self {
        let n = self.dim();
        let first_col =
            ResidueVector::new((0..n).map(|i| self.rows[i].entries()[0]).collect()).unwrap();
        let t = Self::new(first_col);
        // Columns of self must coincide with the rotation structure.
        for (i, row) in t.rows.iter().enumerate() {
            for (j, &e) in row.entries().iter().enumerate() {
                debug_assert_eq!(e, self.rows[j].entries()[i]);
            }
        }
        t
    }
}

/// Which construction a [`CodeSet`] came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeLabel {
    /// All subset sums of the rows of A, zero vector included.
    RowSums,
    /// All subset sums of the rows of A^T, zero vector included.
    RowSumsTranspose,
    /// Words of V(A) with an even number of 3s.
    EvenThrees,
    /// Words of V(A^T) with an odd number of 0s.
    OddZeros,
    /// The Lagarias-Shor cube tiling code.
    LagariasShor,
    /// Sums over nonempty independent sets of the cycle graph (the code U).
    NonAdjacentSums,
    /// Interior non-adjacent row sums (the even-case set R).
    InteriorSums,
    /// Anything else, e.g. a mutated code under test.
    Custom,
}

impl fmt::Display for CodeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CodeLabel::RowSums => "V(A)",
            CodeLabel::RowSumsTranspose => "V(A^T)",
            CodeLabel::EvenThrees => "Ve(A)",
            CodeLabel::OddZeros => "Vo(A^T)",
            CodeLabel::LagariasShor => "V",
            CodeLabel::NonAdjacentSums => "U",
            CodeLabel::InteriorSums => "R",
            CodeLabel::Custom => "custom",
        };
        f.write_str(s)
    }
}

/// A finite set of distinct words of common dimension, kept sorted
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSet {
    dim: usize,
    label: CodeLabel,
    words: Vec<ResidueVector>,
}

impl CodeSet {
    /// Build a code set from arbitrary words: sorts, deduplicates, and
    /// checks that all words share one dimension.
    pub fn new(dim: usize, label: CodeLabel, mut words: Vec<ResidueVector>) -> Result<Self> {
        for w in &words {
            if w.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    actual: w.dim(),
                });
            }
        }
        words.sort();
        words.dedup();
        Ok(Self { dim, label, words })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> CodeLabel {
        self.label
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[ResidueVector] {
        &self.words
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ResidueVector> {
        self.words.iter()
    }

    pub fn contains(&self, word: &ResidueVector) -> bool {
        self.words.binary_search(word).is_ok()
    }

    /// Entrywise shift of the whole set by `delta` mod 4.
    pub fn shift_all(&self, delta: u8) -> Self {
        let words = self.words.iter().map(|w| w.shift_all(delta)).collect();
        Self::new(self.dim, self.label, words).unwrap()
    }

    /// Set union; both operands must share the dimension.
    pub fn union(&self, other: &Self, label: CodeLabel) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                actual: other.dim,
            });
        }
        let mut words = self.words.clone();
        words.extend(other.words.iter().cloned());
        Self::new(self.dim, label, words)
    }

    /// A copy with the word at `index` (in sorted order) replaced. Handy for
    /// building deliberately broken codes in tests.
    pub fn replace_word(&self, index: usize, word: ResidueVector) -> Result<Self> {
        if word.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                actual: word.dim(),
            });
        }
        let mut words = self.words.clone();
        words[index] = word;
        Self::new(self.dim, CodeLabel::Custom, words)
    }
}

impl<'a> IntoIterator for &'a CodeSet {
    type Item = &'a ResidueVector;
    type IntoIter = std::slice::Iter<'a, ResidueVector>;

    fn into_iter(self) -> Self::IntoIter {
        self.words.iter()
    }
}

/// The circulant with the given first row, checked against the stated
/// dimension.
pub fn circulant_rows(n: usize, first_row: &ResidueVector) -> Result<CirculantMatrix> {
    if first_row.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: first_row.dim(),
        });
    }
    Ok(CirculantMatrix::new(first_row.clone()))
}

/// All 2^n subset sums of the rows of `m`, the empty sum (zero vector)
/// included. Duplicates collapse; for A(n) and its transpose all sums are
/// distinct because the determinant is odd.
pub fn subset_row_sums(m: &CirculantMatrix) -> Result<CodeSet> {
    let n = m.dim();
    if n > MAX_SUBSET_SUM_DIM {
        return Err(Error::EnumerationTooLarge {
            n,
            max: MAX_SUBSET_SUM_DIM,
        });
    }
    let words = if n <= MAX_PACKED_DIM {
        subset_row_sums_packed(m)
    } else {
        subset_row_sums_unpacked(m)
    };
    CodeSet::new(n, CodeLabel::RowSums, words)
}

/// Gray-code walk over all subsets: step g flips the membership of row
/// `trailing_zeros(g)`, so each step adds either the row or its negation.
fn subset_row_sums_packed(m: &CirculantMatrix) -> Vec<ResidueVector> {
    let n = m.dim();
    let low = low_bits_mask(n);
    let rows: Vec<u64> = m.rows().iter().map(pack).collect();
    let neg_rows: Vec<u64> = m
        .rows()
        .iter()
        .map(|r| {
            let negated: Vec<u8> = r.entries().iter().map(|&e| (4 - e) & 3).collect();
            pack(&ResidueVector::new(negated).unwrap())
        })
        .collect();

    let total = 1u64 << n;
    let mut words = Vec::with_capacity(total as usize);
    let mut acc = 0u64;
    let mut gray_prev = 0u64;
    words.push(unpack(acc, n));
    for g in 1..total {
        let gray = g ^ (g >> 1);
        let flipped = (gray ^ gray_prev).trailing_zeros() as usize;
        let delta = if gray >> flipped & 1 == 1 {
            rows[flipped]
        } else {
            neg_rows[flipped]
        };
        acc = packed_add(acc, delta, low);
        words.push(unpack(acc, n));
        gray_prev = gray;
    }
    words
}

fn subset_row_sums_unpacked(m: &CirculantMatrix) -> Vec<ResidueVector> {
    let n = m.dim();
    let total = 1u64 << n;
    let mut words = Vec::with_capacity(total as usize);
    for mask in 0..total {
        let mut acc = ResidueVector::zero(n);
        for i in 0..n {
            if mask >> i & 1 == 1 {
                acc = acc.add(&m.rows()[i]).unwrap();
            }
        }
        words.push(acc);
    }
    words
}

/// Words of `c` with an even number of 3s (zero counts as even).
pub fn filter_even_threes(c: &CodeSet) -> CodeSet {
    let words = c
        .iter()
        .filter(|w| w.count_entry(3).is_multiple_of(2))
        .cloned()
        .collect();
    CodeSet::new(c.dim(), CodeLabel::EvenThrees, words).unwrap()
}

/// Words of `c` with an odd number of 0s.
pub fn filter_odd_zeros(c: &CodeSet) -> CodeSet {
    let words = c
        .iter()
        .filter(|w| !w.count_entry(0).is_multiple_of(2))
        .cloned()
        .collect();
    CodeSet::new(c.dim(), CodeLabel::OddZeros, words).unwrap()
}

/// The Lagarias-Shor cube tiling code for odd n >= 3. Always has exactly
/// 2^n words.
pub fn lagarias_shor_code(n: usize) -> Result<CodeSet> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::OddDimensionRequired {
            op: "lagarias_shor_code",
            min: 3,
            n,
        });
    }
    let a = CirculantMatrix::standard(n)?;
    let even = filter_even_threes(&subset_row_sums(&a)?);
    let odd = filter_odd_zeros(&subset_row_sums(&a.transpose())?);
    let code = even.union(&odd.shift_all(2), CodeLabel::LagariasShor)?;
    assert_eq!(
        code.len(),
        1usize << n,
        "the Lagarias-Shor construction must produce 2^n distinct words"
    );
    Ok(code)
}

/// All subsets of [n] (as bitmasks, bit i-1 for element i) with no two
/// adjacent elements; `cyclic` additionally treats 1 and n as adjacent.
/// Includes the empty set. Sorted ascending.
pub fn independent_sets(n: usize, cyclic: bool) -> Vec<u32> {
    assert!((1..=MAX_PACKED_DIM).contains(&n), "n must be in 1..=31");
    let mut out = Vec::new();
    // A single vertex carries no self-loop even in the cyclic case.
    fn rec(pos: usize, n: usize, cyclic: bool, took_first: bool, prev: bool, mask: u32, out: &mut Vec<u32>) {
        if pos == n {
            out.push(mask);
            return;
        }
        rec(pos + 1, n, cyclic, took_first, false, mask, out);
        let wraps = cyclic && n > 1 && pos == n - 1 && took_first;
        if !prev && !wraps {
            rec(
                pos + 1,
                n,
                cyclic,
                took_first || pos == 0,
                true,
                mask | (1 << pos),
                out,
            );
        }
    }
    rec(0, n, cyclic, false, false, 0, &mut out);
    out.sort_unstable();
    out
}

/// Sum of the rows of `m` indexed by the set bits of `mask` (bit i-1 picks
/// row i).
pub(crate) fn mask_row_sum(m: &CirculantMatrix, mask: u32) -> ResidueVector {
    let mut acc = ResidueVector::zero(m.dim());
    let mut bits = mask;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        acc = acc.add(&m.rows()[i]).unwrap();
        bits &= bits - 1;
    }
    acc
}

/// The code U(n): sums of the rows of A(n) over nonempty independent sets
/// of the cycle graph on [n]. The zero vector is not included.
pub fn non_adjacent_row_sums(n: usize) -> Result<CodeSet> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::OddDimensionRequired {
            op: "non_adjacent_row_sums",
            min: 3,
            n,
        });
    }
    let a = CirculantMatrix::standard(n)?;
    let words: Vec<ResidueVector> = independent_sets(n, true)
        .into_iter()
        .filter(|&mask| mask != 0)
        .map(|mask| mask_row_sum(&a, mask))
        .collect();
    let expected = words.len();
    let code = CodeSet::new(n, CodeLabel::NonAdjacentSums, words)?;
    assert_eq!(code.len(), expected, "independent-set sums must be distinct");
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rv(entries: &[u8]) -> ResidueVector {
        ResidueVector::new(entries.to_vec()).unwrap()
    }

    fn set_of(words: &[&[u8]]) -> Vec<ResidueVector> {
        words.iter().map(|w| rv(w)).collect()
    }

    #[test]
    fn circulant_rows_n3() {
        let m = circulant_rows(3, &rv(&[1, 2, 0])).unwrap();
        assert_eq!(m.rows(), &[rv(&[1, 2, 0]), rv(&[0, 1, 2]), rv(&[2, 0, 1])]);
    }

    #[test]
    fn circulant_rows_n5_matches_a5() {
        let m = CirculantMatrix::standard(5).unwrap();
        assert_eq!(
            m.rows(),
            &[
                rv(&[1, 2, 0, 0, 0]),
                rv(&[0, 1, 2, 0, 0]),
                rv(&[0, 0, 1, 2, 0]),
                rv(&[0, 0, 0, 1, 2]),
                rv(&[2, 0, 0, 0, 1]),
            ]
        );
    }

    #[test]
    fn circulant_rows_n1() {
        let m = circulant_rows(1, &rv(&[1])).unwrap();
        assert_eq!(m.rows(), &[rv(&[1])]);
        assert!(circulant_rows(2, &rv(&[1])).is_err());
    }

    #[test]
    fn transpose_n3() {
        let t = CirculantMatrix::standard(3).unwrap().transpose();
        assert_eq!(t.rows(), &[rv(&[1, 0, 2]), rv(&[2, 1, 0]), rv(&[0, 2, 1])]);
    }

    #[test]
    fn transpose_is_an_involution() {
        let a1 = CirculantMatrix::standard(1).unwrap();
        assert_eq!(a1.transpose(), a1);
        let a5 = CirculantMatrix::standard(5).unwrap();
        assert_eq!(a5.transpose().transpose(), a5);
    }

    #[test]
    fn subset_sums_n3() {
        let sums = subset_row_sums(&CirculantMatrix::standard(3).unwrap()).unwrap();
        let expect = CodeSet::new(
            3,
            CodeLabel::RowSums,
            set_of(&[
                &[0, 0, 0],
                &[1, 2, 0],
                &[0, 1, 2],
                &[2, 0, 1],
                &[1, 3, 2],
                &[3, 2, 1],
                &[2, 1, 3],
                &[3, 3, 3],
            ]),
        )
        .unwrap();
        assert_eq!(sums.words(), expect.words());
    }

    #[test]
    fn subset_sums_n1() {
        let sums = subset_row_sums(&circulant_rows(1, &rv(&[1])).unwrap()).unwrap();
        assert_eq!(sums.words(), &[rv(&[0]), rv(&[1])]);
    }

    #[test]
    fn subset_sums_n5_are_distinct() {
        let sums = subset_row_sums(&CirculantMatrix::standard(5).unwrap()).unwrap();
        assert_eq!(sums.len(), 32);
        assert!(sums.contains(&ResidueVector::zero(5)));
    }

    #[test]
    fn even_threes_filter_n3() {
        let v = subset_row_sums(&CirculantMatrix::standard(3).unwrap()).unwrap();
        let ve = filter_even_threes(&v);
        let expect = set_of(&[&[0, 0, 0], &[1, 2, 0], &[0, 1, 2], &[2, 0, 1]]);
        assert_eq!(
            ve.words(),
            CodeSet::new(3, CodeLabel::EvenThrees, expect).unwrap().words()
        );
    }

    #[test]
    fn even_threes_edge_cases() {
        let empty = CodeSet::new(2, CodeLabel::Custom, vec![]).unwrap();
        assert!(filter_even_threes(&empty).is_empty());
        let two_threes = CodeSet::new(2, CodeLabel::Custom, vec![rv(&[3, 3])]).unwrap();
        assert_eq!(filter_even_threes(&two_threes).len(), 1);
    }

    #[test]
    fn odd_zeros_filter_n3() {
        let vt = subset_row_sums(&CirculantMatrix::standard(3).unwrap().transpose()).unwrap();
        let vo = filter_odd_zeros(&vt);
        let expect = set_of(&[&[0, 0, 0], &[1, 0, 2], &[2, 1, 0], &[0, 2, 1]]);
        assert_eq!(
            vo.words(),
            CodeSet::new(3, CodeLabel::OddZeros, expect).unwrap().words()
        );
    }

    #[test]
    fn odd_zeros_edge_cases() {
        let no_zero = CodeSet::new(2, CodeLabel::Custom, vec![rv(&[1, 1])]).unwrap();
        assert!(filter_odd_zeros(&no_zero).is_empty());
        let one_zero = CodeSet::new(2, CodeLabel::Custom, vec![rv(&[0, 1])]).unwrap();
        assert_eq!(filter_odd_zeros(&one_zero).len(), 1);
    }

    #[test]
    fn lagarias_shor_n3() {
        let code = lagarias_shor_code(3).unwrap();
        let expect = CodeSet::new(
            3,
            CodeLabel::LagariasShor,
            set_of(&[
                &[0, 0, 0],
                &[1, 2, 0],
                &[0, 1, 2],
                &[2, 0, 1],
                &[2, 2, 2],
                &[3, 2, 0],
                &[0, 3, 2],
                &[2, 0, 3],
            ]),
        )
        .unwrap();
        assert_eq!(code.words(), expect.words());
    }

    #[test]
    fn lagarias_shor_sizes_and_preconditions() {
        assert_eq!(lagarias_shor_code(5).unwrap().len(), 32);
        assert!(lagarias_shor_code(4).is_err());
        assert!(lagarias_shor_code(1).is_err());
    }

    #[test]
    fn u_code_n3_matches_the_three_displayed_vectors() {
        let u = non_adjacent_row_sums(3).unwrap();
        let expect = set_of(&[&[1, 2, 0], &[0, 1, 2], &[2, 0, 1]]);
        assert_eq!(
            u.words(),
            CodeSet::new(3, CodeLabel::NonAdjacentSums, expect).unwrap().words()
        );
    }

    #[test]
    fn u_code_n5_matches_the_displayed_ten_rows() {
        let u = non_adjacent_row_sums(5).unwrap();
        let expect = set_of(&[
            &[1, 2, 0, 0, 0],
            &[0, 1, 2, 0, 0],
            &[0, 0, 1, 2, 0],
            &[0, 0, 0, 1, 2],
            &[2, 0, 0, 0, 1],
            &[1, 2, 1, 2, 0],
            &[1, 2, 0, 1, 2],
            &[0, 1, 2, 1, 2],
            &[2, 1, 2, 0, 1],
            &[2, 0, 1, 2, 1],
        ]);
        assert_eq!(
            u.words(),
            CodeSet::new(5, CodeLabel::NonAdjacentSums, expect).unwrap().words()
        );
    }

    #[test]
    fn u_code_n7_has_lucas_minus_one_words() {
        assert_eq!(non_adjacent_row_sums(7).unwrap().len(), 28);
        assert!(non_adjacent_row_sums(6).is_err());
    }

    #[test]
    fn independent_sets_examples() {
        assert_eq!(independent_sets(3, true), vec![0b000, 0b001, 0b010, 0b100]);
        assert_eq!(
            independent_sets(4, true),
            vec![0b0000, 0b0001, 0b0010, 0b0100, 0b0101, 0b1000, 0b1010]
        );
        assert_eq!(independent_sets(2, false), vec![0b00, 0b01, 0b10]);
    }

    /// Path and cycle independent-set counts follow the Fibonacci / Lucas
    /// recurrences; this DP is the counting oracle.
    fn fib(n: usize) -> u64 {
        let (mut a, mut b) = (0u64, 1u64); // F_0, F_1
        for _ in 0..n {
            let c = a + b;
            a = b;
            b = c;
        }
        a
    }

    #[test]
    fn independent_set_counts_match_the_recurrences() {
        for n in 1..=20 {
            assert_eq!(independent_sets(n, false).len() as u64, fib(n + 2));
        }
        for n in 2..=20 {
            // L_n = F_{n-1} + F_{n+1}
            assert_eq!(independent_sets(n, true).len() as u64, fib(n - 1) + fib(n + 1));
        }
        // Single vertex, no self-loop.
        assert_eq!(independent_sets(1, true).len(), 2);
    }

    proptest! {
        #[test]
        fn independent_sets_have_no_adjacent_pair(n in 1usize..=12, cyclic: bool) {
            for mask in independent_sets(n, cyclic) {
                prop_assert_eq!(mask & (mask << 1), 0);
                if cyclic && n > 1 {
                    prop_assert!(!(mask & 1 == 1 && mask >> (n - 1) & 1 == 1));
                }
                prop_assert_eq!(mask >> n, 0);
            }
        }

        #[test]
        fn subset_sums_reproduce_each_word_from_its_subset(
            first in proptest::collection::vec(0u8..4, 1..=8),
        ) {
            let n = first.len();
            let m = CirculantMatrix::new(rv(&first));
            let sums = subset_row_sums(&m).unwrap();
            // Recompute every subset sum naively and compare as sets.
            let mut naive = Vec::new();
            for mask in 0u32..1 << n {
                naive.push(mask_row_sum(&m, mask));
            }
            let naive = CodeSet::new(n, CodeLabel::Custom, naive).unwrap();
            prop_assert_eq!(sums.words(), naive.words());
        }
    }
}
