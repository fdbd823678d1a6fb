//! Lucas cube vertices and the three exact weight counts.
//!
//! A vertex of the Lucas cube Λ_n is a binary word of length n with no two
//! cyclically adjacent 1s (positions 1 and n count as adjacent). Three
//! closed forms are implemented next to the brute-force enumerator that
//! serves as their oracle:
//!
//! * total number of weight-k vertices:            C(n-k,k) · n/(n-k)
//! * weight-k vertices with 1 at a fixed position: C(n-k,k) · k/(n-k)
//! * weight-k vertices with 0 at a fixed position: C(n-k,k)
//!
//! All divisions are exact and asserted. Counts are big integers so the
//! identity sweeps can run far past machine width.
//!
//! Edge convention: a single position has no self-loop, so both words of
//! length 1 are vertices. The identity cross-checks start at n = 2 where
//! enumeration and closed forms agree; n = 1 is enumerator-only.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::circulant::non_adjacent_row_sums;
use crate::error::{Error, Result};
use crate::residue::MAX_PACKED_DIM;

/// A Lucas cube vertex: a cyclically 1-sparse binary word, stored packed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LucasVertex {
    mask: u32,
    dim: usize,
}

impl LucasVertex {
    /// Build a vertex from its bitmask, rejecting cyclically adjacent 1s.
    pub fn from_mask(mask: u32, n: usize) -> Result<Self> {
        if n == 0 || n > MAX_PACKED_DIM {
            return Err(Error::CoordinateOutOfRange {
                coordinate: n,
                dim: MAX_PACKED_DIM,
            });
        }
        if mask >> n != 0 || !is_lucas_mask(mask, n) {
            return Err(Error::MalformedIndexSet {
                reason: format!("{mask:b} is not a Lucas word of length {n}"),
            });
        }
        Ok(Self { mask, dim: n })
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Bit at 1-based position `i`.
    pub fn bit(&self, i: usize) -> Result<bool> {
        if i == 0 || i > self.dim {
            return Err(Error::CoordinateOutOfRange {
                coordinate: i,
                dim: self.dim,
            });
        }
        Ok(self.mask >> (i - 1) & 1 == 1)
    }

    /// Number of 1s.
    pub fn weight(&self) -> u32 {
        self.mask.count_ones()
    }
}

impl fmt::Display for LucasVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            write!(f, "{}", self.mask >> i & 1)?;
        }
        Ok(())
    }
}

/// Does `mask` avoid two cyclically adjacent 1s among the low `n` bits?
pub fn is_lucas_mask(mask: u32, n: usize) -> bool {
    debug_assert!((1..=MAX_PACKED_DIM).contains(&n));
    if n == 1 {
        return true; // no self-loop
    }
    let wrap = (mask << 1 | mask >> (n - 1)) & ((1 << n) - 1);
    mask & wrap == 0
}

/// All Lucas cube vertices of dimension `n`, in ascending mask order.
pub fn lucas_vertices(n: usize) -> Vec<LucasVertex> {
    assert!((1..=MAX_PACKED_DIM).contains(&n), "n must be in 1..=31");
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        if is_lucas_mask(mask, n) {
            out.push(LucasVertex { mask, dim: n });
        }
    }
    out
}

/// The Lucas number L_n = F_{n-1} + F_{n+1}, the vertex count of Λ_n for
/// n >= 2.
pub fn lucas_number(n: u64) -> u64 {
    let fib = |m: u64| -> u64 {
        let (mut a, mut b) = (0u64, 1u64);
        for _ in 0..m {
            let c = a + b;
            a = b;
            b = c;
        }
        a
    };
    if n == 0 {
        return 2;
    }
    fib(n - 1) + fib(n + 1)
}

/// Exact binomial coefficient; zero outside 0 <= k <= n.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut result = BigUint::one();
    for j in 1..=k {
        result = result * BigUint::from(n - k + j) / BigUint::from(j);
    }
    result
}

/// Multiply `base` by `num/den`, asserting the division is exact.
fn exact_scaled(base: BigUint, num: u64, den: u64) -> BigUint {
    let scaled = base * BigUint::from(num);
    let den = BigUint::from(den);
    assert!(
        (&scaled % &den).is_zero(),
        "closed-form count must be an integer"
    );
    scaled / den
}

/// Number of weight-k vertices of Λ_n: C(n-k,k) · n/(n-k). Zero outside
/// 0 <= k <= n/2.
pub fn weight_count(n: u64, k: u64) -> BigUint {
    if n == 0 || 2 * k > n {
        return if n == 0 && k == 0 {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    if k == 0 {
        return BigUint::one();
    }
    exact_scaled(binomial(n - k, k), n, n - k)
}

/// Number of weight-k vertices of Λ_n with 1 at 1-based position `i`:
/// C(n-k,k) · k/(n-k), the same for every position.
pub fn weight_count_one_at(n: u64, k: u64, i: u64) -> Result<BigUint> {
    check_position(n, i)?;
    Ok(weight_count_one(n, k))
}

/// Number of weight-k vertices of Λ_n with 0 at 1-based position `i`:
/// C(n-k,k), the same for every position.
pub fn weight_count_zero_at(n: u64, k: u64, i: u64) -> Result<BigUint> {
    check_position(n, i)?;
    Ok(weight_count_zero(n, k))
}

/// Position-free form of [`weight_count_one_at`].
pub(crate) fn weight_count_one(n: u64, k: u64) -> BigUint {
    if k == 0 || 2 * k > n {
        return BigUint::zero();
    }
    exact_scaled(binomial(n - k, k), k, n - k)
}

/// Position-free form of [`weight_count_zero_at`].
pub(crate) fn weight_count_zero(n: u64, k: u64) -> BigUint {
    if 2 * k > n {
        return BigUint::zero();
    }
    binomial(n - k, k)
}

fn check_position(n: u64, i: u64) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::CoordinateOutOfRange {
            coordinate: i as usize,
            dim: n as usize,
        });
    }
    Ok(())
}

/// Compare all three closed forms against the brute-force enumeration of
/// Λ_n, for every weight and every position. Defined for n >= 2; at n = 1
/// the no-self-loop edge convention makes the enumerator intentionally
/// richer than the formulas.
pub fn closed_forms_match_enumeration(n: usize) -> bool {
    assert!((2..=MAX_PACKED_DIM).contains(&n));
    let half = n / 2;
    let mut by_k = vec![0u64; half + 1];
    let mut ones = vec![vec![0u64; n]; half + 1];
    for v in lucas_vertices(n) {
        let k = v.weight() as usize;
        by_k[k] += 1;
        let mut bits = v.mask();
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            ones[k][i] += 1;
            bits &= bits - 1;
        }
    }
    if by_k.iter().sum::<u64>() != lucas_number(n as u64) {
        return false;
    }
    for k in 0..=half {
        if weight_count(n as u64, k as u64) != BigUint::from(by_k[k]) {
            return false;
        }
        for i in 1..=n {
            let one = weight_count_one(n as u64, k as u64);
            let zero = weight_count_zero(n as u64, k as u64);
            if one != BigUint::from(ones[k][i - 1]) {
                return false;
            }
            if zero != BigUint::from(by_k[k] - ones[k][i - 1]) {
                return false;
            }
        }
    }
    true
}

/// Does the substitution 2 -> 0 on U(n) ∪ {0} yield exactly the vertex set
/// of Λ_n?
pub fn substitution_matches_vertices(n: usize) -> Result<bool> {
    let mut masks = vec![0u32];
    for word in non_adjacent_row_sums(n)?.iter() {
        masks.push(word.ones_mask()?);
    }
    masks.sort_unstable();
    masks.dedup();
    let vertex_masks: Vec<u32> = lucas_vertices(n).iter().map(LucasVertex::mask).collect();
    Ok(masks == vertex_masks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn vertices_n3() {
        let words: Vec<String> = lucas_vertices(3).iter().map(|v| v.to_string()).collect();
        assert_eq!(words, ["000", "100", "010", "001"]);
    }

    #[test]
    fn vertex_count_n5_is_the_lucas_number() {
        assert_eq!(lucas_vertices(5).len(), 11);
        assert_eq!(lucas_number(5), 11);
    }

    #[test]
    fn first_and_last_position_are_adjacent() {
        assert!(!is_lucas_mask(0b10001, 5));
        assert!(lucas_vertices(5).iter().all(|v| v.mask() != 0b10001));
    }

    #[test]
    fn single_position_has_no_self_loop() {
        let words: Vec<u32> = lucas_vertices(1).iter().map(|v| v.mask()).collect();
        assert_eq!(words, [0, 1]);
    }

    #[test]
    fn known_lucas_numbers() {
        assert_eq!(lucas_number(3), 4);
        assert_eq!(lucas_number(7), 29);
        assert_eq!(lucas_number(2), 3);
    }

    #[test]
    fn weight_count_examples() {
        assert_eq!(weight_count(5, 2), BigUint::from(5u32));
        assert_eq!(weight_count(9, 0), BigUint::from(1u32));
        assert_eq!(weight_count(3, 1), BigUint::from(3u32));
        assert_eq!(weight_count(5, 3), BigUint::from(0u32));
    }

    #[test]
    fn weight_count_one_at_examples() {
        assert_eq!(weight_count_one_at(5, 2, 1).unwrap(), BigUint::from(2u32));
        assert_eq!(weight_count_one_at(9, 0, 4).unwrap(), BigUint::from(0u32));
        assert_eq!(weight_count_one_at(3, 1, 2).unwrap(), BigUint::from(1u32));
        assert!(weight_count_one_at(3, 1, 4).is_err());
    }

    #[test]
    fn weight_count_zero_at_examples() {
        assert_eq!(weight_count_zero_at(5, 2, 1).unwrap(), BigUint::from(3u32));
        assert_eq!(weight_count_zero_at(9, 0, 2).unwrap(), BigUint::from(1u32));
        assert_eq!(weight_count_zero_at(3, 1, 3).unwrap(), BigUint::from(2u32));
        assert!(weight_count_zero_at(3, 1, 0).is_err());
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(0, 0), BigUint::from(1u32));
        assert_eq!(binomial(4, 7), BigUint::from(0u32));
    }

    /// Pascal-triangle oracle for the multiplicative binomial.
    #[test]
    fn binomial_matches_pascal_recurrence() {
        let rows = 64usize;
        let mut prev: Vec<BigUint> = vec![BigUint::one()];
        for n in 1..=rows {
            let mut row = vec![BigUint::one()];
            for k in 1..n {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigUint::one());
            prev = row;
        }
        assert_eq!(binomial(64, 32), prev[32]);
        assert_eq!(binomial(64, 1), prev[1]);
    }

    /// Brute-force per-weight and per-position counts for one n.
    fn brute_counts(n: usize) -> (Vec<u64>, Vec<Vec<u64>>) {
        let half = n / 2;
        let mut by_k = vec![0u64; half + 1];
        let mut ones = vec![vec![0u64; n]; half + 1];
        for v in lucas_vertices(n) {
            let k = v.weight() as usize;
            by_k[k] += 1;
            let mut bits = v.mask();
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                ones[k][i] += 1;
                bits &= bits - 1;
            }
        }
        (by_k, ones)
    }

    #[test]
    fn closed_forms_match_brute_force_small() {
        for n in 2..=12usize {
            let (by_k, ones) = brute_counts(n);
            for k in 0..=n / 2 {
                assert_eq!(weight_count(n as u64, k as u64), BigUint::from(by_k[k]));
                for i in 1..=n {
                    let one = weight_count_one_at(n as u64, k as u64, i as u64).unwrap();
                    let zero = weight_count_zero_at(n as u64, k as u64, i as u64).unwrap();
                    assert_eq!(one, BigUint::from(ones[k][i - 1]));
                    assert_eq!(zero, BigUint::from(by_k[k] - ones[k][i - 1]));
                }
            }
        }
    }

    #[test]
    fn bridge_helpers_agree_with_the_test_oracle() {
        for n in 2..=14usize {
            assert!(closed_forms_match_enumeration(n), "n = {n}");
        }
        for n in (3..=15usize).step_by(2) {
            assert!(substitution_matches_vertices(n).unwrap(), "n = {n}");
        }
        assert!(substitution_matches_vertices(4).is_err());
    }

    proptest! {
        #[test]
        fn count_decomposes_by_any_fixed_position(n in 1u64..=40, k in 0u64..=20, i in 1u64..=40) {
            prop_assume!(i <= n);
            let total = weight_count(n, k);
            let split = weight_count_one_at(n, k, i).unwrap()
                + weight_count_zero_at(n, k, i).unwrap();
            prop_assert_eq!(total, split);
        }

        #[test]
        fn weights_sum_to_the_lucas_number(n in 2u64..=30) {
            let mut total = BigUint::zero();
            for k in 0..=n / 2 {
                total += weight_count(n, k);
            }
            prop_assert_eq!(total, BigUint::from(lucas_number(n)));
        }
    }
}
