//! Exhaustive exact sweeps over `(p, n)` grids.
//!
//! Each sweep returns a report listing every violation it found, so an empty
//! violation list is the pass condition. Sweeps parallelize over `n` and
//! merge in increasing `n`, so reports are deterministic.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classifier::Cell;
use crate::error::{Error, Result};
use crate::exact_arith::Rational;
use crate::patodi;

fn need_n(max_n: u64, min: u64) -> Result<()> {
    if max_n < min {
        return Err(Error::OutOfRange {
            what: "max_n",
            detail: format!("max_n = {max_n}, need max_n >= {min}"),
        });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityViolation {
    pub p: u64,
    pub n: u64,
    pub quantity: String,
}

/// `p ↦ 2n − p` invariance of `λ₁, λ₂, λ₃` (evaluated literally), `a_0` and
/// the `a_1` coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityReport {
    pub max_n: u64,
    pub checks: u64,
    pub violations: Vec<DualityViolation>,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn verify_duality(max_n: u64) -> Result<DualityReport> {
    need_n(max_n, 1)?;
    let per_n: Vec<Result<(u64, Vec<DualityViolation>)>> = (1..=max_n)
        .into_par_iter()
        .map(|n| {
            let row = patodi::lambda_row(n);
            let vol = Rational::one();
            let mut checks = 0;
            let mut bad = Vec::new();
            for p in 0..=2 * n {
                let q = 2 * n - p;
                let mut check = |ok: bool, quantity: &str| {
                    checks += 1;
                    if !ok {
                        bad.push(DualityViolation {
                            p,
                            n,
                            quantity: quantity.to_string(),
                        });
                    }
                };
                // Literal evaluation is only dual for n >= 2; at n = 1 the
                // canonicalized coefficients are compared instead.
                let lambdas_ok = if n >= 2 {
                    let (a, b) = (&row[p as usize], &row[q as usize]);
                    (&a.lambda1, &a.lambda2, &a.lambda3) == (&b.lambda1, &b.lambda2, &b.lambda3)
                } else {
                    patodi::lambda_coefficients(p, n)? == patodi::lambda_coefficients(q, n)?
                };
                check(lambdas_ok, "lambdas");
                check(patodi::a0(p, n, &vol)? == patodi::a0(q, n, &vol)?, "a0");
                check(
                    patodi::a1_coefficient(p, n)? == patodi::a1_coefficient(q, n)?,
                    "a1_coefficient",
                );
            }
            Ok((checks, bad))
        })
        .collect();
    let mut report = DualityReport {
        max_n,
        checks: 0,
        violations: Vec::new(),
    };
    for item in per_n {
        let (checks, bad) = item?;
        report.checks += checks;
        report.violations.extend(bad);
    }
    Ok(report)
}

/// The elimination of `∫|R̃ic|²` as an exact identity:
/// `scalar_weight + ricci_weight·(n−1)/(4n) = reduced_weight`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionReport {
    pub max_n: u64,
    pub checks: u64,
    pub violations: Vec<Cell>,
}

impl ReductionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn verify_reduction_identity(max_n: u64) -> Result<ReductionReport> {
    need_n(max_n, 2)?;
    let per_n: Vec<(u64, Vec<Cell>)> = (2..=max_n)
        .into_par_iter()
        .map(|n| {
            let factor = Rational::frac(n as i64 - 1, 4 * n as i64);
            let row = patodi::lambda_row(n);
            let bad = row
                .iter()
                .filter(|lam| {
                    let lhs = lam.scalar_weight() + lam.ricci_weight() * &factor;
                    lhs != lam.reduced_weight()
                })
                .map(|lam| Cell { p: lam.p, n })
                .collect();
            (row.len() as u64, bad)
        })
        .collect();
    let mut report = ReductionReport {
        max_n,
        checks: 0,
        violations: Vec::new(),
    };
    for (checks, bad) in per_n {
        report.checks += checks;
        report.violations.extend(bad);
    }
    Ok(report)
}

/// Signs of `λ₁` and the reduced coefficient on `2 <= p <= 2n − 2`,
/// `2 <= n <= max_n`. Cells are recorded under their canonical degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityReport {
    pub max_n: u64,
    pub cells_checked: u64,
    pub lambda1_zero: BTreeSet<Cell>,
    pub lambda1_negative: BTreeSet<Cell>,
    pub reduced_nonpositive: BTreeSet<Cell>,
}

impl PositivityReport {
    /// `λ₁ > 0` everywhere except a single zero at `(2, 8)`, and the reduced
    /// coefficient positive everywhere.
    pub fn passed(&self) -> bool {
        let only_2_8 = self.max_n < 8 && self.lambda1_zero.is_empty()
            || self.lambda1_zero == BTreeSet::from([Cell { p: 2, n: 8 }]);
        only_2_8 && self.lambda1_negative.is_empty() && self.reduced_nonpositive.is_empty()
    }
}

pub fn sweep_positivity(max_n: u64) -> Result<PositivityReport> {
    need_n(max_n, 2)?;
    let per_n: Vec<PositivityReport> = (2..=max_n)
        .into_par_iter()
        .map(|n| {
            let mut r = PositivityReport {
                max_n,
                cells_checked: 0,
                lambda1_zero: BTreeSet::new(),
                lambda1_negative: BTreeSet::new(),
                reduced_nonpositive: BTreeSet::new(),
            };
            for lam in &patodi::lambda_row(n)[2..=(2 * n - 2) as usize] {
                let cell = Cell {
                    p: patodi::canonical_p(lam.p, n),
                    n,
                };
                r.cells_checked += 1;
                if lam.lambda1.is_zero() {
                    r.lambda1_zero.insert(cell);
                } else if lam.lambda1.is_negative() {
                    r.lambda1_negative.insert(cell);
                }
                if !lam.reduced_weight().is_positive() {
                    r.reduced_nonpositive.insert(cell);
                }
            }
            r
        })
        .collect();
    Ok(per_n.into_iter().fold(
        PositivityReport {
            max_n,
            cells_checked: 0,
            lambda1_zero: BTreeSet::new(),
            lambda1_negative: BTreeSet::new(),
            reduced_nonpositive: BTreeSet::new(),
        },
        |mut acc, r| {
            acc.cells_checked += r.cells_checked;
            acc.lambda1_zero.extend(r.lambda1_zero);
            acc.lambda1_negative.extend(r.lambda1_negative);
            acc.reduced_nonpositive.extend(r.reduced_nonpositive);
            acc
        },
    ))
}

/// Same sign checks at non-integer `p = a/b ∈ [2, 2n−2]`, `b <= max_den`,
/// using `λᵢ / C(2n, p)` (see [`patodi::normalized_lambdas`]).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalPositivityReport {
    pub max_n: u64,
    pub max_den: u64,
    pub points_checked: u64,
    /// `(p, n)` where `λ₁ = 0`.
    pub lambda1_zero: Vec<(Rational, u64)>,
    /// `(p, n)` where `λ₁ < 0` or the reduced coefficient is `<= 0`.
    pub violations: Vec<(Rational, u64)>,
}

pub fn sweep_rational_p(max_n: u64, max_den: u64) -> Result<RationalPositivityReport> {
    need_n(max_n, 2)?;
    if max_den == 0 {
        return Err(Error::OutOfRange {
            what: "max_den",
            detail: "need max_den >= 1".into(),
        });
    }
    type PerN = (u64, Vec<(Rational, u64)>, Vec<(Rational, u64)>);
    let per_n: Vec<Result<PerN>> = (2..=max_n)
        .into_par_iter()
        .map(|n| {
            let lo = Rational::from(2);
            let hi = Rational::from(2 * n - 2);
            let grid: BTreeSet<Rational> = (1..=max_den)
                .flat_map(|b| {
                    (2 * b..=(2 * n - 2) * b).map(move |a| Rational::frac(a as i64, b as i64))
                })
                .filter(|p| p >= &lo && p <= &hi)
                .collect();
            let weight = Rational::frac(4 * n as i64 + 2, ((n + 1) * (n + 2)) as i64);
            let (mut zeros, mut bad) = (Vec::new(), Vec::new());
            for p in &grid {
                let [l1, l2, l3] = patodi::normalized_lambdas(p, n)?;
                let reduced = &weight * &l1 + Rational::frac(1, 2) * &l2 + &l3;
                if l1.is_zero() {
                    zeros.push((p.clone(), n));
                }
                if l1.is_negative() || !reduced.is_positive() {
                    bad.push((p.clone(), n));
                }
            }
            Ok((grid.len() as u64, zeros, bad))
        })
        .collect();
    let mut report = RationalPositivityReport {
        max_n,
        max_den,
        points_checked: 0,
        lambda1_zero: Vec::new(),
        violations: Vec::new(),
    };
    for item in per_n {
        let (count, zeros, bad) = item?;
        report.points_checked += count;
        report.lambda1_zero.extend(zeros);
        report.violations.extend(bad);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        assert!(verify_duality(20).unwrap().passed());
        assert!(verify_reduction_identity(30).unwrap().passed());
        let pos = sweep_positivity(20).unwrap();
        assert!(pos.passed(), "{pos:?}");
        assert_eq!(pos.lambda1_zero, BTreeSet::from([Cell { p: 2, n: 8 }]));
    }

    #[test]
    fn positivity_below_8_has_no_zero() {
        let pos = sweep_positivity(7).unwrap();
        assert!(pos.lambda1_zero.is_empty());
        assert!(pos.passed());
    }

    #[test]
    fn rational_grid_small() {
        let r = sweep_rational_p(12, 4).unwrap();
        assert!(r.violations.is_empty(), "{:?}", r.violations);
        assert_eq!(r.lambda1_zero, vec![(Rational::from(2), 8), (Rational::from(14), 8)]);
    }

    #[test]
    fn range_errors() {
        assert!(verify_duality(0).is_err());
        assert!(verify_reduction_identity(1).is_err());
        assert!(sweep_positivity(1).is_err());
        assert!(sweep_rational_p(5, 0).is_err());
    }
}
