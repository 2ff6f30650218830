//! Heat invariants `a_0`, `a_1`, `a_2` of the `p`-form Laplacian on a compact
//! Kähler manifold of complex dimension `n`, as exact rationals.
//!
//! The curvature enters only through three integrals (`∫ s²`, `∫ |R̃ic|²`,
//! `∫ |B|²`) supplied by the caller; `a_2` is a linear functional of them with
//! weights built from the Patodi coefficients `λ₁, λ₂, λ₃`:
//!
//! ```text
//! λ₁ =  C(2n,p)/180 − C(2n−2,p−1)/12 +   C(2n−4,p−2)/2
//! λ₂ = −C(2n,p)/180 + C(2n−2,p−1)/2  − 2·C(2n−4,p−2)
//! λ₃ =  C(2n,p)/72  − C(2n−2,p−1)/6  +   C(2n−4,p−2)/2
//! ```
//!
//! Binomials use the extended convention of [`binom_ext`]. Because
//! `Spec^p = Spec^{2n−p}`, the public entry points evaluate at
//! `min(p, 2n − p)`; [`lambda_coefficients_literal`] skips that step.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_arith::{binom_ext, Rational};

/// `λ₁, λ₂, λ₃` at a (canonical) degree `p` and complex dimension `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatodiCoefficients {
    pub lambda1: Rational,
    pub lambda2: Rational,
    pub lambda3: Rational,
    pub p: u64,
    pub n: u64,
}

impl PatodiCoefficients {
    /// Weight of `∫ s²` in `a_2`: `2/(n(n+1))·λ₁ + 1/(2n)·λ₂ + λ₃`.
    pub fn scalar_weight(&self) -> Rational {
        let n = self.n as i64;
        Rational::frac(2, n * (n + 1)) * &self.lambda1
            + Rational::frac(1, 2 * n) * &self.lambda2
            + &self.lambda3
    }

    /// Weight of `∫ |R̃ic(ω)|²` in `a_2`: `16/(n+2)·λ₁ + 2λ₂`.
    pub fn ricci_weight(&self) -> Rational {
        let n = self.n as i64;
        Rational::frac(16, n + 2) * &self.lambda1 + Rational::from(2) * &self.lambda2
    }

    /// Weight of `∫ |B|²` in `a_2`: `4λ₁`.
    pub fn bochner_weight(&self) -> Rational {
        Rational::from(4) * &self.lambda1
    }

    /// `(4n+2)/((n+1)(n+2))·λ₁ + λ₂/2 + λ₃`, the coefficient left in front of
    /// `∫ (s² − s₀²)` once `∫ |R̃ic|²` is eliminated for a cohomologically
    /// Einstein metric.
    pub fn reduced_weight(&self) -> Rational {
        let n = self.n as i64;
        Rational::frac(4 * n + 2, (n + 1) * (n + 2)) * &self.lambda1
            + Rational::frac(1, 2) * &self.lambda2
            + &self.lambda3
    }
}

/// The three curvature integrals `a_2` depends on. All are integrals of
/// squared norms and therefore non-negative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurvatureIntegrals {
    /// `∫ s_g² dvol`
    pub int_s2: Rational,
    /// `∫ |R̃ic(ω)|² dvol`
    pub int_ric2: Rational,
    /// `∫ |B|² dvol`
    pub int_b2: Rational,
}

impl CurvatureIntegrals {
    pub fn new(int_s2: Rational, int_ric2: Rational, int_b2: Rational) -> Result<Self> {
        let v = CurvatureIntegrals {
            int_s2,
            int_ric2,
            int_b2,
        };
        v.validate()?;
        Ok(v)
    }

    fn validate(&self) -> Result<()> {
        for (what, x) in [
            ("integral of s^2", &self.int_s2),
            ("integral of |Ric~|^2", &self.int_ric2),
            ("integral of |B|^2", &self.int_b2),
        ] {
            if x.is_negative() {
                return Err(Error::Negative {
                    what,
                    value: x.to_string(),
                });
            }
        }
        Ok(())
    }
}

/// `a_0, a_1, a_2` for one `(p, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeatInvariants {
    pub a0: Rational,
    pub a1: Rational,
    pub a2: Rational,
    pub p: u64,
    pub n: u64,
}

/// Result of the positivity test that drives the rigidity argument.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericalCondition {
    pub holds: bool,
    pub reduced_coeff: Rational,
    pub lambda1: Rational,
}

fn check_range(p: u64, n: u64, min_n: u64) -> Result<()> {
    if n < min_n {
        return Err(Error::OutOfRange {
            what: "complex dimension n",
            detail: format!("n = {n}, need n >= {min_n}"),
        });
    }
    if p > 2 * n {
        return Err(Error::OutOfRange {
            what: "form degree p",
            detail: format!("p = {p}, need 0 <= p <= 2n = {}", 2 * n),
        });
    }
    Ok(())
}

fn check_volume(vol: &Rational) -> Result<()> {
    if !vol.is_positive() {
        return Err(Error::NotPositive {
            what: "volume",
            value: vol.to_string(),
        });
    }
    Ok(())
}

/// `min(p, 2n − p)`.
pub fn canonical_p(p: u64, n: u64) -> u64 {
    p.min((2 * n).saturating_sub(p))
}

fn lambdas_from_binomials(c0: &BigInt, c1: &BigInt, c2: &BigInt) -> [Rational; 3] {
    let l1 = c0 - c1 * 15 + c2 * 90;
    let l2 = -c0 + c1 * 90 - c2 * 360;
    let l3 = c0 - c1 * 12 + c2 * 36;
    [
        Rational::new(l1, 180).unwrap(),
        Rational::new(l2, 180).unwrap(),
        Rational::new(l3, 72).unwrap(),
    ]
}

fn evaluate(p: u64, n: u64) -> PatodiCoefficients {
    let (pi, ni) = (p as i64, n as i64);
    let [lambda1, lambda2, lambda3] = lambdas_from_binomials(
        &binom_ext(2 * ni, pi),
        &binom_ext(2 * ni - 2, pi - 1),
        &binom_ext(2 * ni - 4, pi - 2),
    );
    PatodiCoefficients {
        lambda1,
        lambda2,
        lambda3,
        p,
        n,
    }
}

/// `λ₁, λ₂, λ₃` at `(min(p, 2n−p), n)`. Requires `n >= 1` and `p <= 2n`.
pub fn lambda_coefficients(p: u64, n: u64) -> Result<PatodiCoefficients> {
    check_range(p, n, 1)?;
    Ok(evaluate(canonical_p(p, n), n))
}

/// `λ₁, λ₂, λ₃` evaluated at `p` exactly as written, without duality
/// canonicalization. Only differs from [`lambda_coefficients`] at `n = 1`.
pub fn lambda_coefficients_literal(p: u64, n: u64) -> Result<PatodiCoefficients> {
    check_range(p, n, 1)?;
    Ok(evaluate(p, n))
}

/// Literal coefficients for every `p` in `0..=2n`, sharing the binomial rows.
/// Used by the exhaustive sweeps; agrees with [`lambda_coefficients_literal`].
pub fn lambda_row(n: u64) -> Vec<PatodiCoefficients> {
    fn row(u: i64) -> Vec<BigInt> {
        if u < 0 {
            return Vec::new();
        }
        let mut out = Vec::with_capacity(u as usize + 1);
        let mut c = BigInt::from(1);
        out.push(c.clone());
        for v in 0..u {
            c = c * (u - v) / (v + 1);
            out.push(c.clone());
        }
        out
    }
    fn at(row: &[BigInt], v: i64) -> BigInt {
        match v {
            v if v < 0 => BigInt::from(0),
            0 => BigInt::from(1),
            v => row.get(v as usize).cloned().unwrap_or_default(),
        }
    }
    let ni = n as i64;
    let (r0, r1, r2) = (row(2 * ni), row(2 * ni - 2), row(2 * ni - 4));
    (0..=2 * ni)
        .map(|p| {
            let [lambda1, lambda2, lambda3] =
                lambdas_from_binomials(&at(&r0, p), &at(&r1, p - 1), &at(&r2, p - 2));
            PatodiCoefficients {
                lambda1,
                lambda2,
                lambda3,
                p: p as u64,
                n,
            }
        })
        .collect()
}

/// `λᵢ / C(2n, p)` for a rational `p ∈ [0, 2n]`, `n >= 2`.
///
/// Dividing out `C(2n, p)` leaves rational functions of `p`:
/// `C(2n−2, p−1)/C(2n, p) = p(2n−p) / (2n(2n−1))` and
/// `C(2n−4, p−2)/C(2n, p) = p(p−1)(2n−p)(2n−p−1) / (2n(2n−1)(2n−2)(2n−3))`,
/// which continue to real `p` through the Gamma function. Since
/// `C(2n, p) > 0` on that interval, the signs of the `λᵢ` (and of any
/// positive combination of them) are the signs of these ratios.
pub fn normalized_lambdas(p: &Rational, n: u64) -> Result<[Rational; 3]> {
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "complex dimension n",
            detail: format!("n = {n}, need n >= 2"),
        });
    }
    let m = Rational::from(2 * n);
    if p.is_negative() || p > &m {
        return Err(Error::OutOfRange {
            what: "form degree p",
            detail: format!("p = {p}, need 0 <= p <= {m}"),
        });
    }
    let one = Rational::one();
    let q = &m - p;
    let ratio1 = (p * &q)
        .checked_div(&(&m * (&m - &one)))
        .expect("n >= 2");
    let ratio2 = (p * (p - &one) * &q * (&q - &one))
        .checked_div(&(&m * (&m - &one) * (&m - Rational::from(2)) * (&m - Rational::from(3))))
        .expect("n >= 2");
    let half = Rational::frac(1, 2);
    Ok([
        Rational::frac(1, 180) - Rational::frac(1, 12) * &ratio1 + &half * &ratio2,
        Rational::frac(-1, 180) + &half * &ratio1 - Rational::from(2) * &ratio2,
        Rational::frac(1, 72) - Rational::frac(1, 6) * &ratio1 + &half * &ratio2,
    ])
}

/// `a_{0,p} = C(2n, p)·Vol`.
pub fn a0(p: u64, n: u64, vol: &Rational) -> Result<Rational> {
    check_range(p, n, 1)?;
    check_volume(vol)?;
    Ok(Rational::from(binom_ext(2 * n as i64, p as i64)) * vol)
}

/// Coefficient of `∫ s_g dvol` in `a_{1,p}`:
/// `(2n−2)!/(p!(2n−p)!)·[p² − 2np + n(2n−1)/3]`.
pub fn a1_coefficient(p: u64, n: u64) -> Result<Rational> {
    check_range(p, n, 1)?;
    let (pi, ni) = (p as i64, n as i64);
    let bracket = Rational::from(pi * pi - 2 * ni * pi) + Rational::frac(ni * (2 * ni - 1), 3);
    // (2n−2)!/(p!(2n−p)!) = C(2n, p) / (2n(2n−1))
    let prefactor = Rational::new(binom_ext(2 * ni, pi), 2 * ni * (2 * ni - 1))?;
    Ok(prefactor * bracket)
}

/// `a_{2,p}` as the linear functional of the three curvature integrals.
pub fn a2_general(p: u64, n: u64, integrals: &CurvatureIntegrals) -> Result<Rational> {
    integrals.validate()?;
    let lam = lambda_coefficients(p, n)?;
    Ok(lam.scalar_weight() * &integrals.int_s2
        + lam.ricci_weight() * &integrals.int_ric2
        + lam.bochner_weight() * &integrals.int_b2)
}

/// `a_{2,p}` for a metric of constant holomorphic sectional curvature `c`,
/// where `s_g = n(n+1)c` and both `R̃ic` and `B` vanish.
pub fn a2_const_hsc(p: u64, n: u64, c: &Rational, vol: &Rational) -> Result<Rational> {
    check_volume(vol)?;
    let s = Rational::from(n * (n + 1)) * c;
    let integrals = CurvatureIntegrals::new(&s * &s * vol, Rational::zero(), Rational::zero())?;
    a2_general(p, n, &integrals)
}

/// All three invariants from the volume, `∫ s_g dvol` and the `a_2` integrals.
pub fn heat_invariants(
    p: u64,
    n: u64,
    vol: &Rational,
    int_s: &Rational,
    integrals: &CurvatureIntegrals,
) -> Result<HeatInvariants> {
    Ok(HeatInvariants {
        a0: a0(p, n, vol)?,
        a1: a1_coefficient(p, n)? * int_s,
        a2: a2_general(p, n, integrals)?,
        p: canonical_p(p, n),
        n,
    })
}

/// `(4n+2)/((n+1)(n+2))·λ₁ + λ₂/2 + λ₃`. Requires `n >= 2`.
pub fn reduced_a2_coefficient(p: u64, n: u64) -> Result<Rational> {
    check_range(p, n, 2)?;
    Ok(evaluate(canonical_p(p, n), n).reduced_weight())
}

/// Holds when both the reduced coefficient and `λ₁` are strictly positive.
/// Requires `n >= 2`.
pub fn numerical_condition(p: u64, n: u64) -> Result<NumericalCondition> {
    check_range(p, n, 2)?;
    Ok(condition_of(&evaluate(canonical_p(p, n), n)))
}

pub(crate) fn condition_of(lam: &PatodiCoefficients) -> NumericalCondition {
    let reduced_coeff = lam.reduced_weight();
    NumericalCondition {
        holds: reduced_coeff.is_positive() && lam.lambda1.is_positive(),
        reduced_coeff,
        lambda1: lam.lambda1.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> Rational {
        Rational::frac(a, b)
    }

    #[test]
    fn lambdas_at_2_8() {
        let l = lambda_coefficients(2, 8).unwrap();
        assert_eq!(l.lambda1, Rational::zero());
        assert_eq!(l.lambda2, r(13, 3));
        assert_eq!(l.lambda3, r(-1, 6));
        // p = 14 is the dual degree.
        assert_eq!(lambda_coefficients(14, 8).unwrap(), l);
    }

    #[test]
    fn lambdas_at_p0_are_dimension_free() {
        for n in 1..20 {
            let l = lambda_coefficients(0, n).unwrap();
            assert_eq!((l.lambda1, l.lambda2, l.lambda3), (r(1, 180), r(-1, 180), r(1, 72)));
        }
    }

    #[test]
    fn lambda1_at_3_3() {
        assert_eq!(lambda_coefficients(3, 3).unwrap().lambda1, r(11, 18));
    }

    #[test]
    fn literal_differs_only_at_n1_p2() {
        let lit = lambda_coefficients_literal(2, 1).unwrap();
        assert_eq!(lit.lambda1, r(1, 180) + r(1, 2));
        assert_eq!(lambda_coefficients(2, 1).unwrap().p, 0);
    }

    #[test]
    fn range_errors() {
        assert!(matches!(lambda_coefficients(5, 2), Err(Error::OutOfRange { .. })));
        assert!(matches!(lambda_coefficients(0, 0), Err(Error::OutOfRange { .. })));
        assert!(reduced_a2_coefficient(0, 1).is_err());
        assert!(numerical_condition(0, 1).is_err());
        assert!(numerical_condition(9, 4).is_err());
    }

    #[test]
    fn a0_examples() {
        let one = Rational::one();
        assert_eq!(a0(0, 1, &one).unwrap(), Rational::from(1));
        assert_eq!(a0(1, 3, &one).unwrap(), Rational::from(6));
        assert_eq!(a0(2, 8, &one).unwrap(), Rational::from(120));
        assert!(a0(0, 2, &Rational::zero()).is_err());
        assert!(a0(0, 2, &r(-1, 2)).is_err());
    }

    #[test]
    fn a1_examples() {
        for n in 1..30 {
            assert_eq!(a1_coefficient(0, n).unwrap(), r(1, 6));
        }
        assert_eq!(a1_coefficient(1, 3).unwrap(), Rational::zero());
        assert_eq!(a1_coefficient(20, 48).unwrap(), Rational::zero());
    }

    #[test]
    fn a2_general_examples() {
        let sphere = CurvatureIntegrals::new(Rational::from(64), Rational::zero(), Rational::zero())
            .unwrap();
        assert_eq!(a2_general(0, 1, &sphere).unwrap(), r(16, 15));

        let zero = CurvatureIntegrals::new(Rational::zero(), Rational::zero(), Rational::zero())
            .unwrap();
        for (p, n) in [(0, 2), (3, 5), (7, 4), (2, 8)] {
            assert_eq!(a2_general(p, n, &zero).unwrap(), Rational::zero());
        }

        let bochner_only =
            CurvatureIntegrals::new(Rational::zero(), Rational::zero(), Rational::one()).unwrap();
        assert_eq!(a2_general(2, 8, &bochner_only).unwrap(), Rational::zero());
    }

    #[test]
    fn negative_integrals_rejected() {
        assert!(CurvatureIntegrals::new(r(-1, 2), Rational::zero(), Rational::zero()).is_err());
        let sneaky = CurvatureIntegrals {
            int_s2: Rational::zero(),
            int_ric2: Rational::zero(),
            int_b2: r(-1, 3),
        };
        assert!(matches!(a2_general(0, 2, &sneaky), Err(Error::Negative { .. })));
    }

    #[test]
    fn a2_const_hsc_examples() {
        let one = Rational::one();
        assert_eq!(a2_const_hsc(0, 1, &Rational::from(4), &one).unwrap(), r(16, 15));
        for (p, n) in [(0, 2), (1, 6), (2, 8), (5, 9)] {
            assert_eq!(a2_const_hsc(p, n, &Rational::zero(), &r(7, 3)).unwrap(), Rational::zero());
        }
        // (2/6·1/180 − 1/4·1/180 + 1/72)·36 = 31/2160·36
        let expect = (r(2, 6) * r(1, 180) - r(1, 4) * r(1, 180) + r(1, 72)) * Rational::from(36);
        assert_eq!(expect, r(31, 60));
        assert_eq!(a2_const_hsc(0, 2, &Rational::one(), &one).unwrap(), expect);
    }

    #[test]
    fn reduced_examples() {
        assert_eq!(reduced_a2_coefficient(2, 8).unwrap(), Rational::from(2));
        assert_eq!(reduced_a2_coefficient(1, 6).unwrap(), r(351, 1680));
        assert!(reduced_a2_coefficient(0, 2).unwrap().is_positive());
    }

    #[test]
    fn numerical_condition_examples() {
        let c = numerical_condition(2, 8).unwrap();
        assert_eq!((c.holds, c.reduced_coeff, c.lambda1), (false, Rational::from(2), Rational::zero()));

        let c = numerical_condition(0, 5).unwrap();
        assert!(c.holds);
        assert_eq!(c.lambda1, r(1, 180));

        let c = numerical_condition(1, 6).unwrap();
        assert_eq!((c.holds, c.reduced_coeff, c.lambda1), (false, r(351, 1680), r(-1, 60)));

        assert_eq!(numerical_condition(1, 7).unwrap().lambda1, r(-1, 180));
        assert!(numerical_condition(1, 8).unwrap().holds);
    }

    #[test]
    fn row_matches_pointwise() {
        for n in 1..25 {
            let row = lambda_row(n);
            assert_eq!(row.len() as u64, 2 * n + 1);
            for (p, lam) in row.iter().enumerate() {
                assert_eq!(lam, &lambda_coefficients_literal(p as u64, n).unwrap());
            }
        }
    }

    #[test]
    fn normalized_matches_integer_points() {
        for n in 2..30u64 {
            for p in 0..=2 * n {
                let lam = lambda_coefficients_literal(p, n).unwrap();
                let c = Rational::from(binom_ext(2 * n as i64, p as i64));
                let [q1, q2, q3] = normalized_lambdas(&Rational::from(p), n).unwrap();
                assert_eq!(q1 * &c, lam.lambda1, "({p},{n})");
                assert_eq!(q2 * &c, lam.lambda2);
                assert_eq!(q3 * &c, lam.lambda3);
            }
        }
        assert!(normalized_lambdas(&r(-1, 2), 3).is_err());
        assert!(normalized_lambdas(&r(13, 2), 3).is_err());
        assert!(normalized_lambdas(&Rational::one(), 1).is_err());
    }
}
