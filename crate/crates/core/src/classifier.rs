//! Rigidity verdicts for a single `(p, n)`.
//!
//! Two questions are decided. Q1: if a cohomologically Einstein Kähler
//! manifold shares `a_0, a_1, a_2` (for the `p`-Laplacian) with one of
//! constant holomorphic sectional curvature `c`, must it have constant HSC
//! `c` as well? Q2: the same with the model fixed to `CP^n(c)`, `c > 0`.
//!
//! The computed verdict comes from three exact facts: whether `(p, n)` is an
//! exceptional pair, the sign of `λ₁`, and the sign of the reduced `a_2`
//! coefficient. The published case list is reported next to it, and every
//! pair the list claims but the computation rejects produces a warning
//! instead of being resolved silently.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diophantine;
use crate::error::{Error, Result};
use crate::exact_arith::Rational;
use crate::patodi::{self, PatodiCoefficients};

/// Verdict for Q1 (target of constant HSC `c`, any sign).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Q1Verdict {
    /// Non-exceptional pair with `λ₁ > 0` and positive reduced coefficient.
    RigidByLemma,
    /// `(p, n)` is the `k`-th exceptional pair; `a_1` carries no information.
    DegeneratePair(usize),
    /// `(p, n) = (2, 8)`: `λ₁ = 0`, so `∫|B|²` drops out of `a_2`.
    Lambda1Zero,
    /// The positivity condition fails.
    ConditionFails,
}

/// Verdict for Q2 (target `CP^n(c)`, `c > 0`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Q2Verdict {
    Rigid,
    /// Only the Einstein property follows from the heat invariants; the
    /// remaining step is an external theorem, recorded here as a tag.
    RigidViaFujita,
    Open,
}

impl Q2Verdict {
    /// Short statement of what the verdict rests on.
    pub fn basis(&self) -> &'static str {
        match self {
            Q2Verdict::Rigid => "positivity condition on the Patodi coefficients",
            Q2Verdict::RigidViaFujita => {
                "Fujita: a Fano Kaehler-Einstein manifold with the volume of CP^n \
                 (same normalized scalar curvature) is CP^n"
            }
            Q2Verdict::Open => "no argument available",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationResult {
    pub p: u64,
    pub n: u64,
    pub degenerate: bool,
    pub lambdas: PatodiCoefficients,
    pub reduced_coeff: Rational,
    pub numerical_ok: bool,
    pub q1_verdict: Q1Verdict,
    pub q2_verdict: Q2Verdict,
    /// Which published rigidity case (1..=4) lists this pair, if any.
    pub theorem1_case: Option<u8>,
    pub requires_cohomological_einstein: bool,
    pub warnings: Vec<String>,
}

/// Published case list for Q1, `p <= n`:
/// 1. `p = 0`; 2. `p = 1, n >= 6`; 3. `p = 2, n != 8`;
/// 4. `p >= 3` and `(p, n)` not exceptional.
pub fn claimed_case(p: u64, n: u64) -> Option<u8> {
    match p {
        0 => Some(1),
        1 if n >= 6 => Some(2),
        2 if n != 8 => Some(3),
        p if p >= 3 && !diophantine::is_degenerate(p, n) => Some(4),
        _ => None,
    }
}

/// Claimed membership in the positivity set, for `0 <= p <= n`, `n >= 2`:
/// `(0, n)`, `(1, n >= 6)`, `(2, n != 8)` and every `p >= 3`.
pub fn claimed_positive(p: u64, n: u64) -> bool {
    match p {
        0 => true,
        1 => n >= 6,
        2 => n != 8,
        _ => true,
    }
}

/// Classify `(p, n)` for `n >= 1`, `0 <= p <= 2n`; `p > n` is replaced by
/// its dual degree `2n − p`.
pub fn classify(p: u64, n: u64) -> Result<ClassificationResult> {
    if n < 1 {
        return Err(Error::OutOfRange {
            what: "complex dimension n",
            detail: format!("n = {n}, need n >= 1"),
        });
    }
    if p > 2 * n {
        return Err(Error::OutOfRange {
            what: "form degree p",
            detail: format!("p = {p}, need 0 <= p <= 2n = {}", 2 * n),
        });
    }
    let p = patodi::canonical_p(p, n);
    let lambdas = patodi::lambda_coefficients(p, n)?;
    let cond = patodi::condition_of(&lambdas);
    let degenerate = diophantine::is_degenerate(p, n);

    let q1_verdict = if degenerate {
        let k = diophantine::pair_index(&BigInt::from(p), &BigInt::from(n))
            .expect("degenerate pair with n >= 1 is an exceptional pair");
        Q1Verdict::DegeneratePair(k)
    } else if (p, n) == (2, 8) {
        Q1Verdict::Lambda1Zero
    } else if cond.holds {
        Q1Verdict::RigidByLemma
    } else {
        Q1Verdict::ConditionFails
    };

    let q2_verdict = match q1_verdict {
        Q1Verdict::RigidByLemma => Q2Verdict::Rigid,
        Q1Verdict::Lambda1Zero => Q2Verdict::RigidViaFujita,
        _ => Q2Verdict::Open,
    };

    let theorem1_case = claimed_case(p, n);
    let mut warnings = Vec::new();
    if n == 1 && p != 0 {
        warnings.push(
            "the positivity lemma assumes n >= 2; n = 1 is only covered for p = 0".to_string(),
        );
    }
    if let Some(case) = theorem1_case {
        if q1_verdict != Q1Verdict::RigidByLemma {
            warnings.push(format!(
                "published case {case} lists (p={p}, n={n}) as rigid, but the computed \
                 condition fails: lambda1 = {}, reduced coefficient = {}",
                cond.lambda1, cond.reduced_coeff
            ));
        }
    }

    Ok(ClassificationResult {
        p,
        n,
        degenerate,
        reduced_coeff: cond.reduced_coeff,
        numerical_ok: cond.holds,
        q1_verdict,
        q2_verdict,
        theorem1_case,
        requires_cohomological_einstein: !(p > 0 && p.is_multiple_of(2)),
        warnings,
        lambdas,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub p: u64,
    pub n: u64,
}

impl std::fmt::Display for Cell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.p, self.n)
    }
}

/// One `(p, n)` cell with its computed and claimed membership.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryRow {
    pub p: u64,
    pub n: u64,
    pub computed: bool,
    pub claimed: bool,
    pub lambda1: Rational,
    pub reduced_coeff: Rational,
}

/// Exact positivity set over `0 <= p <= n`, `2 <= n <= max_n`, diffed
/// against the claimed set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LastLemmaReport {
    pub max_n: u64,
    pub cells_checked: u64,
    pub satisfying_count: u64,
    /// In the computed set but not claimed.
    pub only_computed: Vec<Cell>,
    /// Claimed but not in the computed set.
    pub only_claimed: Vec<Cell>,
    /// Every cell with `p <= 2` (where the claimed set has its boundaries),
    /// plus every cell where the two sets disagree.
    pub boundary_rows: Vec<BoundaryRow>,
    /// The computed set itself, in `(n, p)` order.
    #[serde(skip)]
    pub satisfying: BTreeSet<Cell>,
}

impl LastLemmaReport {
    pub fn matches_claim(&self) -> bool {
        self.only_computed.is_empty() && self.only_claimed.is_empty()
    }

    /// Symmetric difference of the computed and claimed sets.
    pub fn diff(&self) -> BTreeSet<Cell> {
        self.only_computed
            .iter()
            .chain(&self.only_claimed)
            .copied()
            .collect()
    }
}

pub fn verify_lastlemma(max_n: u64) -> Result<LastLemmaReport> {
    if max_n < 2 {
        return Err(Error::OutOfRange {
            what: "max_n",
            detail: format!("max_n = {max_n}, need max_n >= 2"),
        });
    }
    let per_n: Vec<Vec<BoundaryRow>> = (2..=max_n)
        .into_par_iter()
        .map(|n| {
            patodi::lambda_row(n)
                .into_iter()
                .take(n as usize + 1)
                .map(|lam| {
                    let cond = patodi::condition_of(&lam);
                    BoundaryRow {
                        p: lam.p,
                        n,
                        computed: cond.holds,
                        claimed: claimed_positive(lam.p, n),
                        lambda1: cond.lambda1,
                        reduced_coeff: cond.reduced_coeff,
                    }
                })
                .collect()
        })
        .collect();

    let mut report = LastLemmaReport {
        max_n,
        cells_checked: 0,
        satisfying_count: 0,
        only_computed: Vec::new(),
        only_claimed: Vec::new(),
        boundary_rows: Vec::new(),
        satisfying: BTreeSet::new(),
    };
    for row in per_n.into_iter().flatten() {
        let cell = Cell { p: row.p, n: row.n };
        report.cells_checked += 1;
        if row.computed {
            report.satisfying_count += 1;
            report.satisfying.insert(cell);
        }
        match (row.computed, row.claimed) {
            (true, false) => report.only_computed.push(cell),
            (false, true) => report.only_claimed.push(cell),
            _ => {}
        }
        if row.p <= 2 || row.computed != row.claimed {
            report.boundary_rows.push(row);
        }
    }
    Ok(report)
}
