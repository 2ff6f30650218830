//! Positive integer solutions `(p, n)`, `p <= n`, of
//! `p² − 2np + n(2n−1)/3 = 0`: the pairs where `a_{1,p}` vanishes
//! identically and carries no information.
//!
//! Two independent routes produce them. [`enumerate_recursive`] runs the
//! linear recursion
//!
//! ```text
//! (p₁, n₁) = (1, 3),  p_{k+1} = 8n_k − 5p_k + 1,  n_{k+1} = 19n_k − 12p_k + 3
//! ```
//!
//! and [`enumerate_bruteforce`] scans `n` directly: the roots of the
//! quadratic in `p` are `n ± √(n(n+1)/3)`, so a solution with `p <= n` exists
//! exactly when `n(n+1)/3` is a perfect square `s²`, and then `p = n − s`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_arith::Rational;

/// One solution of the degenerate quadratic, with its position `k >= 1` in
/// increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExceptionalPair {
    pub k: usize,
    #[serde(with = "decimal_string")]
    pub p: BigInt,
    #[serde(with = "decimal_string")]
    pub n: BigInt,
}

mod decimal_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `3p² − 6np + 2n² − n`, three times the quadratic.
pub fn quadratic_times_three(p: &BigInt, n: &BigInt) -> BigInt {
    let three_p = p * 3;
    &three_p * p - &three_p * n * 2 + n * n * 2 - n
}

/// `p² − 2np + n(2n−1)/3` as an exact rational.
pub fn quadratic_value(p: impl Into<BigInt>, n: impl Into<BigInt>) -> Rational {
    let (p, n) = (p.into(), n.into());
    Rational::new(quadratic_times_three(&p, &n), 3).expect("nonzero denominator")
}

/// True when the quadratic vanishes at `(p, n)`.
pub fn is_degenerate(p: impl Into<BigInt>, n: impl Into<BigInt>) -> bool {
    quadratic_times_three(&p.into(), &n.into()).is_zero()
}

/// One step of the recursion.
pub fn next_pair(p: &BigInt, n: &BigInt) -> (BigInt, BigInt) {
    (n * 8 - p * 5 + 1, n * 19 - p * 12 + 3)
}

struct Recursion {
    k: usize,
    p: BigInt,
    n: BigInt,
}

impl Iterator for Recursion {
    type Item = Result<ExceptionalPair>;

    fn next(&mut self) -> Option<Self::Item> {
        let pair = ExceptionalPair {
            k: self.k,
            p: self.p.clone(),
            n: self.n.clone(),
        };
        if !quadratic_times_three(&pair.p, &pair.n).is_zero() || pair.p > pair.n {
            return Some(Err(Error::RecursionCheck {
                k: pair.k,
                p: pair.p.to_string(),
                n: pair.n.to_string(),
            }));
        }
        let (p, n) = next_pair(&self.p, &self.n);
        self.p = p;
        self.n = n;
        self.k += 1;
        Some(Ok(pair))
    }
}

fn recursion() -> Recursion {
    Recursion {
        k: 1,
        p: BigInt::one(),
        n: BigInt::from(3),
    }
}

/// The first `count` pairs from the recursion, each checked against the
/// quadratic as it is generated.
pub fn enumerate_recursive(count: usize) -> Result<Vec<ExceptionalPair>> {
    if count == 0 {
        return Err(Error::OutOfRange {
            what: "pair count",
            detail: "count must be at least 1".into(),
        });
    }
    recursion().take(count).collect()
}

/// Every recursion pair with `n <= max_n`.
pub fn enumerate_recursive_up_to(max_n: &BigInt) -> Result<Vec<ExceptionalPair>> {
    let mut out = Vec::new();
    for pair in recursion() {
        let pair = pair?;
        if &pair.n > max_n {
            break;
        }
        out.push(pair);
    }
    Ok(out)
}

/// The exceptional pair `(p, n)` is the `k`-th one; `None` when it is not a
/// solution with `1 <= p <= n`.
pub fn pair_index(p: &BigInt, n: &BigInt) -> Option<usize> {
    if !quadratic_times_three(p, n).is_zero() || p > n || !(p > &BigInt::zero()) {
        return None;
    }
    for pair in recursion() {
        let pair = pair.ok()?;
        if &pair.n >= n {
            return (&pair.n == n && &pair.p == p).then_some(pair.k);
        }
    }
    None
}

const CHUNK: u64 = 1 << 18;

fn scan(lo: u64, hi: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for n in lo..=hi {
        let prod = n as u128 * (n as u128 + 1);
        if !prod.is_multiple_of(3) {
            continue;
        }
        let q = prod / 3;
        let s = q.isqrt();
        if s * s == q {
            out.push((n - s as u64, n));
        }
    }
    out
}

/// Direct scan of `1 <= n <= max_n` with exact integer square roots.
pub fn enumerate_bruteforce(max_n: u64) -> Vec<ExceptionalPair> {
    if max_n == 0 {
        return Vec::new();
    }
    let chunks = max_n.div_ceil(CHUNK);
    let found: Vec<Vec<(u64, u64)>> = (0..chunks)
        .into_par_iter()
        .map(|i| scan(i * CHUNK + 1, ((i + 1) * CHUNK).min(max_n)))
        .collect();
    found
        .into_iter()
        .flatten()
        .enumerate()
        .map(|(i, (p, n))| ExceptionalPair {
            k: i + 1,
            p: p.into(),
            n: n.into(),
        })
        .collect()
}

/// Recursion and brute force side by side over `n <= max_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairsComparison {
    pub max_n: u64,
    pub recursion: Vec<ExceptionalPair>,
    pub bruteforce: Vec<ExceptionalPair>,
    pub agree: bool,
}

pub fn compare_methods(max_n: u64) -> Result<PairsComparison> {
    let recursion = enumerate_recursive_up_to(&BigInt::from(max_n))?;
    let bruteforce = enumerate_bruteforce(max_n);
    Ok(PairsComparison {
        max_n,
        agree: recursion == bruteforce,
        recursion,
        bruteforce,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(v: &[ExceptionalPair]) -> Vec<(u64, u64)> {
        v.iter()
            .map(|e| (e.p.to_string().parse().unwrap(), e.n.to_string().parse().unwrap()))
            .collect()
    }

    #[test]
    fn quadratic_examples() {
        assert_eq!(quadratic_value(1, 3), Rational::zero());
        assert_eq!(quadratic_value(0, 1), Rational::frac(1, 3));
        assert_eq!(quadratic_value(20, 48), Rational::zero());
    }

    #[test]
    fn degeneracy_examples() {
        assert!(is_degenerate(3976, 9408));
        assert!(!is_degenerate(2, 8));
        assert_eq!(quadratic_value(2, 8), Rational::from(12));
        assert!(is_degenerate(0, 0));
    }

    #[test]
    fn recursion_examples() {
        assert_eq!(pairs(&enumerate_recursive(1).unwrap()), vec![(1, 3)]);
        assert_eq!(pairs(&enumerate_recursive(2).unwrap()), vec![(1, 3), (20, 48)]);
        let five = enumerate_recursive(5).unwrap();
        assert_eq!(five[4].k, 5);
        assert_eq!(pairs(&five[4..]), vec![(55385, 131043)]);
        assert!(enumerate_recursive(0).is_err());
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(pairs(&enumerate_bruteforce(48)), vec![(1, 3), (20, 48)]);
        assert!(enumerate_bruteforce(2).is_empty());
        assert!(enumerate_bruteforce(0).is_empty());
        let third = &enumerate_bruteforce(675)[2];
        assert_eq!((third.k, pairs(std::slice::from_ref(third))[0]), (3, (285, 675)));
    }

    #[test]
    fn bruteforce_across_chunk_boundaries() {
        let max = 3 * CHUNK + 17;
        assert!(compare_methods(max).unwrap().agree);
    }

    #[test]
    fn index_lookup() {
        assert_eq!(pair_index(&20.into(), &48.into()), Some(2));
        assert_eq!(pair_index(&3976.into(), &9408.into()), Some(4));
        assert_eq!(pair_index(&2.into(), &8.into()), None);
        assert_eq!(pair_index(&0.into(), &0.into()), None);
        // mirror root n + √(n(n+1)/3) is not an exceptional pair
        assert_eq!(pair_index(&5.into(), &3.into()), None);
    }

    #[test]
    fn json_shape() {
        let pair = &enumerate_recursive(4).unwrap()[3];
        let s = serde_json::to_string(pair).unwrap();
        assert_eq!(s, r#"{"k":4,"p":"3976","n":"9408"}"#);
        let back: ExceptionalPair = serde_json::from_str(&s).unwrap();
        assert_eq!(&back, pair);
    }
}
