//! Exact verification of the three binomial identities
//!
//! ```text
//! (1)  Σ_k C(n-k,k) · n/(n-k) · 2^k = 2^n + (-1)^n
//! (2)  Σ_k C(n-k,k)           · 2^k = (2^{n+1} + (-1)^n) / 3
//! (3)  Σ_k C(n-k,k) · k/(n-k) · 2^k = (2^n + 2·(-1)^n) / 3
//! ```
//!
//! through three independent paths: the closed-form sums (the per-k
//! summands are exactly the three Lucas-cube weight counts), the odd-case
//! partition census of F(n), and the even-case sub-family G. Everything is
//! big-integer arithmetic; the divisions by 3 and by n-k are exact and
//! asserted, never rounded.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::de;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lucas::{weight_count, weight_count_one, weight_count_zero};
use crate::partition::{base_cube_partition, even_case_family, FactorSelect};

/// Which of the three identities is being evaluated. The summands are the
/// three Lucas-cube weight counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    /// (1): summand counts all weight-k vertices.
    TotalCount,
    /// (2): summand counts weight-k vertices with 0 at a fixed position.
    ZeroCount,
    /// (3): summand counts weight-k vertices with 1 at a fixed position.
    OneCount,
}

impl Identity {
    pub const ALL: [Identity; 3] = [Identity::TotalCount, Identity::ZeroCount, Identity::OneCount];

    pub fn id(self) -> u8 {
        match self {
            Identity::TotalCount => 1,
            Identity::ZeroCount => 2,
            Identity::OneCount => 3,
        }
    }

    pub fn from_id(id: u8) -> Result<Self> {
        match id {
            1 => Ok(Identity::TotalCount),
            2 => Ok(Identity::ZeroCount),
            3 => Ok(Identity::OneCount),
            _ => Err(Error::UnsupportedFormat(format!("identity id {id}"))),
        }
    }

    /// The per-k summand before the 2^k factor.
    fn summand(self, n: u64, k: u64) -> BigUint {
        match self {
            Identity::TotalCount => weight_count(n, k),
            Identity::ZeroCount => weight_count_zero(n, k),
            Identity::OneCount => weight_count_one(n, k),
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.id())
    }
}

impl Serialize for Identity {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.id())
    }
}

impl<'de> Deserialize<'de> for Identity {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let id = u8::deserialize(deserializer)?;
        Identity::from_id(id).map_err(de::Error::custom)
    }
}

/// How an identity's left-hand side was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EvalPath {
    ClosedForm,
    TilingOdd,
    TilingEven,
}

impl fmt::Display for EvalPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EvalPath::ClosedForm => "closed_form",
            EvalPath::TilingOdd => "tiling_odd",
            EvalPath::TilingEven => "tiling_even",
        })
    }
}

fn serialize_big<S: Serializer>(
    value: &BigUint,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.serialize_str(&value.to_string())
}

fn deserialize_big<'de, D: Deserializer<'de>>(
    deserializer: D,
) -> std::result::Result<BigUint, D::Error> {
    let s = String::deserialize(deserializer)?;
    s.parse::<BigUint>().map_err(de::Error::custom)
}

/// One exact evaluation of one identity at one index. Big integers are
/// serialized as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: Identity,
    pub n: u64,
    #[serde(serialize_with = "serialize_big", deserialize_with = "deserialize_big")]
    pub lhs: BigUint,
    #[serde(serialize_with = "serialize_big", deserialize_with = "deserialize_big")]
    pub rhs: BigUint,
    pub path: EvalPath,
    /// The odd auxiliary dimension used by the even-case path.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub aux_odd_n: Option<u64>,
    pub ok: bool,
}

impl IdentityReport {
    fn new(id: Identity, n: u64, lhs: BigUint, rhs: BigUint, path: EvalPath) -> Self {
        let ok = lhs == rhs;
        Self {
            id,
            n,
            lhs,
            rhs,
            path,
            aux_odd_n: None,
            ok,
        }
    }
}

/// The closed-form left-hand side: Σ_{k=0}^{⌊n/2⌋} summand(k) · 2^k.
pub fn identity_lhs(id: Identity, n: u64) -> BigUint {
    let mut total = BigUint::zero();
    for k in 0..=n / 2 {
        total += id.summand(n, k) << k;
    }
    total
}

/// The right-hand side, exact; panics if a division by 3 is not exact,
/// which would signal an implementation fault.
pub fn identity_rhs(id: Identity, n: u64) -> BigUint {
    let two_n = BigUint::from(1u8) << n;
    let even = n.is_multiple_of(2);
    match id {
        Identity::TotalCount => {
            if even {
                two_n + 1u8
            } else {
                two_n - 1u8
            }
        }
        Identity::ZeroCount => {
            let two_n1 = BigUint::from(1u8) << (n + 1);
            exact_third(if even { two_n1 + 1u8 } else { two_n1 - 1u8 })
        }
        Identity::OneCount => exact_third(if even { two_n + 2u8 } else { two_n - 2u8 }),
    }
}

fn exact_third(num: BigUint) -> BigUint {
    let three = BigUint::from(3u8);
    assert!(
        (&num % &three).is_zero(),
        "right-hand side must be divisible by 3"
    );
    num / three
}

/// Closed-form sweep over 1..=n_max.
pub fn verify_closed_form(id: Identity, n_max: u64) -> Vec<IdentityReport> {
    (1..=n_max)
        .map(|n| {
            IdentityReport::new(
                id,
                n,
                identity_lhs(id, n),
                identity_rhs(id, n),
                EvalPath::ClosedForm,
            )
        })
        .collect()
}

/// Odd-case path through the partition F(n):
///
/// * (1) from the census: 1 + Σ_{k>=1} M_k·2^k (the two unit cubes are
///   replaced by the single k = 0 summand),
/// * (3) as the volume of F^1_1,
/// * (2) as the volume of F^1_{02} minus 1.
pub fn verify_by_odd_partition(id: Identity, n: usize) -> Result<IdentityReport> {
    let f = base_cube_partition(n)?;

    let lhs = match id {
        Identity::TotalCount => {
            let mut total = BigUint::from(1u8);
            for (k, count) in f.weight_census() {
                if k >= 1 {
                    total += BigUint::from(count) << k;
                }
            }
            total
        }
        Identity::OneCount => {
            BigUint::from(f.subfamily(1, FactorSelect::Full)?.volume_sum())
        }
        Identity::ZeroCount => {
            BigUint::from(f.subfamily(1, FactorSelect::LoOrHi)?.volume_sum()) - 1u8
        }
    };
    Ok(IdentityReport::new(
        id,
        n as u64,
        lhs,
        identity_rhs(id, n as u64),
        EvalPath::TilingOdd,
    ))
}

/// Even-case path at even index m through the sub-family G of F(m+1):
///
/// * (1) as 1 + m(G),
/// * (3) as the volume of G^1_1,
/// * (2) by termwise subtraction of (3) from (1).
pub fn verify_by_even_family(id: Identity, m: usize) -> Result<IdentityReport> {
    if m < 2 || !m.is_multiple_of(2) {
        return Err(Error::EvenIndexRequired {
            op: "verify_by_even_family",
            min: 2,
            m,
        });
    }
    let n = m + 1;
    let g = even_case_family(n)?;
    let one_count_lhs = BigUint::from(g.subfamily(1, FactorSelect::Full)?.volume_sum());
    let total_lhs = BigUint::from(g.volume_sum()) + 1u8;
    let lhs = match id {
        Identity::TotalCount => total_lhs,
        Identity::OneCount => one_count_lhs,
        Identity::ZeroCount => total_lhs - one_count_lhs,
    };
    let mut report = IdentityReport::new(
        id,
        m as u64,
        lhs,
        identity_rhs(id, m as u64),
        EvalPath::TilingEven,
    );
    report.aux_odd_n = Some(n as u64);
    Ok(report)
}

/// Per-k check that the identity-(1) summand splits into the (2) and (3)
/// summands: n/(n-k) = 1 + k/(n-k), exactly.
pub fn termwise_decomposition_check(n: u64) -> bool {
    (0..=n / 2).all(|k| {
        Identity::TotalCount.summand(n, k)
            == Identity::ZeroCount.summand(n, k) + Identity::OneCount.summand(n, k)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn lhs_examples() {
        assert_eq!(identity_lhs(Identity::TotalCount, 3), big(7));
        assert_eq!(identity_lhs(Identity::ZeroCount, 3), big(5));
        assert_eq!(identity_lhs(Identity::OneCount, 4), big(6));
    }

    #[test]
    fn rhs_examples() {
        assert_eq!(identity_rhs(Identity::TotalCount, 3), big(7));
        assert_eq!(identity_rhs(Identity::ZeroCount, 4), big(11));
        assert_eq!(identity_rhs(Identity::OneCount, 3), big(2));
    }

    #[test]
    fn closed_form_sweep_to_200() {
        for id in Identity::ALL {
            let reports = verify_closed_form(id, 200);
            assert_eq!(reports.len(), 200);
            assert!(reports.iter().all(|r| r.ok), "identity {id} failed");
        }
    }

    #[test]
    fn odd_path_examples_n5() {
        let r1 = verify_by_odd_partition(Identity::TotalCount, 5).unwrap();
        assert_eq!(r1.lhs, big(31));
        assert!(r1.ok);

        let r3 = verify_by_odd_partition(Identity::OneCount, 5).unwrap();
        assert_eq!(r3.lhs, big(10));
        assert!(r3.ok);

        let r2 = verify_by_odd_partition(Identity::ZeroCount, 5).unwrap();
        assert_eq!(r2.lhs, big(21));
        assert!(r2.ok);

        assert!(verify_by_odd_partition(Identity::TotalCount, 4).is_err());
    }

    #[test]
    fn even_path_examples_m4() {
        let r1 = verify_by_even_family(Identity::TotalCount, 4).unwrap();
        assert_eq!(r1.lhs, big(17));
        assert_eq!(r1.aux_odd_n, Some(5));
        assert!(r1.ok);

        let r3 = verify_by_even_family(Identity::OneCount, 4).unwrap();
        assert_eq!(r3.lhs, big(6));
        assert!(r3.ok);

        let r2 = verify_by_even_family(Identity::ZeroCount, 4).unwrap();
        assert_eq!(r2.lhs, big(11));
        assert!(r2.ok);

        assert!(verify_by_even_family(Identity::TotalCount, 5).is_err());
        assert!(verify_by_even_family(Identity::TotalCount, 0).is_err());
    }

    #[test]
    fn even_path_degenerate_m2() {
        let r1 = verify_by_even_family(Identity::TotalCount, 2).unwrap();
        assert_eq!(r1.lhs, big(5));
        assert!(r1.ok);
        let r3 = verify_by_even_family(Identity::OneCount, 2).unwrap();
        assert_eq!(r3.lhs, big(2));
        assert!(r3.ok);
    }

    #[test]
    fn termwise_examples() {
        // n = 5, k = 2: summands 5 = 3 + 2, i.e. 5·4 = 3·4 + 2·4.
        assert_eq!(Identity::TotalCount.summand(5, 2), big(5));
        assert_eq!(Identity::ZeroCount.summand(5, 2), big(3));
        assert_eq!(Identity::OneCount.summand(5, 2), big(2));
        // n = 3, k = 0: 1 = 1 + 0.
        assert_eq!(Identity::TotalCount.summand(3, 0), big(1));
        assert_eq!(Identity::OneCount.summand(3, 0), big(0));
        for n in 1..=200 {
            assert!(termwise_decomposition_check(n), "n = {n}");
        }
    }

    #[test]
    fn paths_agree_with_closed_form() {
        for id in Identity::ALL {
            for n in (3..=13usize).step_by(2) {
                let odd = verify_by_odd_partition(id, n).unwrap();
                assert_eq!(odd.lhs, identity_lhs(id, n as u64), "odd path {id} n={n}");
            }
            for m in (2..=12usize).step_by(2) {
                let even = verify_by_even_family(id, m).unwrap();
                assert_eq!(even.lhs, identity_lhs(id, m as u64), "even path {id} m={m}");
            }
        }
    }

    #[test]
    fn report_json_shape_matches_the_documented_schema() {
        let report = verify_by_odd_partition(Identity::TotalCount, 5).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(
            json,
            r#"{"id":1,"n":5,"lhs":"31","rhs":"31","path":"tiling_odd","ok":true}"#
        );
        let back: IdentityReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }
}
