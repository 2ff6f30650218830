//! Spectrum of the function Laplacian on `CP^n(c)` (Fubini–Study metric with
//! constant holomorphic sectional curvature `c > 0`), its heat trace with a
//! rigorous truncation bound, and a least-squares extraction of the small-`t`
//! coefficients
//!
//! ```text
//! (4πt)^n · Σ_k m_k e^{−λ_k t}  ≈  a₀ + a₁ t + a₂ t² + …
//! ```
//!
//! The levels are `λ_k = k(k+n)c` with multiplicity
//! `m_k = C(n+k, k)² − C(n+k−1, k−1)²`. At `n = 1` these reduce to the round
//! sphere of radius `1/√c`.
//!
//! Extended-precision reals are [`DBig`] (decimal, precision counted in
//! significant digits).

use std::str::FromStr;

use dashu_float::DBig;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_arith::{binom_ext, factorial, Rational};
use crate::patodi;

/// Extra digits carried through the summation and the fit.
const GUARD_DIGITS: usize = 12;

/// Stop searching for a cutoff beyond this many levels.
const MAX_CUTOFF: u64 = 2_000_000;

/// Attach `prec` significant digits to an exact value.
pub fn lift(x: impl Into<DBig>, prec: usize) -> DBig {
    x.into().with_precision(prec).value()
}

pub fn bigint_to_dbig(x: &BigInt, prec: usize) -> DBig {
    lift(DBig::from_str(&x.to_string()).expect("integer literal"), prec)
}

pub fn rational_to_dbig(x: &Rational, prec: usize) -> DBig {
    bigint_to_dbig(x.numer(), prec) / bigint_to_dbig(x.denom(), prec)
}

fn abs(x: &DBig) -> DBig {
    if x < &DBig::ZERO {
        -x.clone()
    } else {
        x.clone()
    }
}

fn check_spectrum_args(n: u64, c: &Rational) -> Result<()> {
    if n < 1 {
        return Err(Error::OutOfRange {
            what: "complex dimension n",
            detail: format!("n = {n}, need n >= 1"),
        });
    }
    if !c.is_positive() {
        return Err(Error::NotPositive {
            what: "holomorphic sectional curvature c",
            value: c.to_string(),
        });
    }
    Ok(())
}

/// One eigenvalue level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumLevel {
    pub k: u64,
    pub eigenvalue: Rational,
    #[serde(with = "decimal_string")]
    pub multiplicity: BigInt,
}

mod decimal_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// `k(k+n)c`.
pub fn eigenvalue(k: u64, n: u64, c: &Rational) -> Result<Rational> {
    check_spectrum_args(n, c)?;
    Ok(Rational::from(BigInt::from(k) * (k + n)) * c)
}

/// `C(n+k, k)² − C(n+k−1, k−1)²`; the second term vanishes at `k = 0`.
pub fn multiplicity(k: u64, n: u64) -> BigInt {
    let (k, n) = (k as i64, n as i64);
    let a = binom_ext(n + k, k);
    let b = binom_ext(n + k - 1, k - 1);
    &a * &a - &b * &b
}

/// The first `count` levels.
pub fn levels(n: u64, c: &Rational, count: u64) -> Result<Vec<SpectrumLevel>> {
    (0..count)
        .map(|k| {
            Ok(SpectrumLevel {
                k,
                eigenvalue: eigenvalue(k, n, c)?,
                multiplicity: multiplicity(k, n),
            })
        })
        .collect()
}

/// `Vol(CP^n(c)) = (4π/c)^n / n!`, with `Vol(CP¹(4)) = π` (sphere of radius 1/2).
pub fn volume(n: u64, c: &Rational, digits: usize) -> Result<DBig> {
    check_spectrum_args(n, c)?;
    let prec = digits + GUARD_DIGITS;
    let coeff = Rational::from(4)
        .checked_div(c)?
        .pow(n as u32)
        .checked_div(&Rational::from(factorial(n)))?;
    let pi: DBig = DBig::pi(prec);
    Ok(rational_to_dbig(&coeff, prec) * pi.powi((n as i64).into()))
}

/// Truncated heat trace and an upper bound on the omitted tail.
#[derive(Debug, Clone, PartialEq)]
pub struct HeatTrace {
    pub value: DBig,
    /// Bound on `Σ_{k > cutoff} m_k e^{−λ_k t}`; `None` when the geometric
    /// comparison does not yet apply at this cutoff.
    pub truncation_bound: Option<DBig>,
    pub cutoff: u64,
}

/// Walks the levels with `e^{−λ_k t}` updated multiplicatively, so only two
/// exponentials are evaluated per `t`.
struct LevelWalk {
    n: u64,
    k: u64,
    /// `e^{−ct·k(k+n)}`
    weight: DBig,
    /// `e^{−ct(2k+1+n)}`, the ratio to the next weight
    step: DBig,
    /// `e^{−2ct}`
    step_ratio: DBig,
    sum: DBig,
    prec: usize,
}

impl LevelWalk {
    fn new(t: &DBig, n: u64, c: &Rational, prec: usize) -> Self {
        let x = rational_to_dbig(c, prec) * lift(t.clone(), prec);
        let one = lift(1, prec);
        LevelWalk {
            n,
            k: 0,
            weight: one.clone(),
            step: (-(x.clone() * lift(n + 1, prec))).exp(),
            step_ratio: (-(x * lift(2, prec))).exp(),
            sum: lift(0, prec),
            prec,
        }
    }

    /// Add level `k` and advance to `k + 1`.
    fn add_level(&mut self) {
        let m = bigint_to_dbig(&multiplicity(self.k, self.n), self.prec);
        self.sum += m * &self.weight;
        self.weight *= &self.step;
        self.step *= &self.step_ratio;
        self.k += 1;
    }

    /// Tail bound for levels `>= self.k`, from
    /// `m_j <= 2n (j+n)^{2n−1} / n!²` and a geometric comparison of
    /// successive terms.
    fn tail_bound(&self) -> Option<DBig> {
        let prec = self.prec;
        let n = self.n;
        let j = self.k;
        let deg = (2 * n - 1) as i64;
        let growth = (lift(j + 1 + n, prec) / lift(j + n, prec)).powi(deg.into());
        // self.step is e^{−ct(2j+1+n)} = weight(j+1)/weight(j)
        let ratio = growth * &self.step;
        let one = lift(1, prec);
        if ratio >= one {
            return None;
        }
        let nf = bigint_to_dbig(&factorial(n), prec);
        let lead = lift(2 * n, prec) * lift(j + n, prec).powi(deg.into()) / (nf.clone() * nf);
        Some(lead * &self.weight / (one - ratio))
    }
}

fn check_t(t: &DBig) -> Result<()> {
    if t <= &DBig::ZERO {
        return Err(Error::NotPositive {
            what: "time t",
            value: t.to_string(),
        });
    }
    Ok(())
}

/// `Σ_{k <= cutoff} m_k e^{−k(k+n)ct}` at `digits` working precision.
pub fn heat_trace_with_cutoff(
    t: &DBig,
    n: u64,
    c: &Rational,
    cutoff: u64,
    digits: usize,
) -> Result<HeatTrace> {
    check_spectrum_args(n, c)?;
    check_t(t)?;
    let mut walk = LevelWalk::new(t, n, c, digits + GUARD_DIGITS);
    for _ in 0..=cutoff {
        walk.add_level();
    }
    Ok(HeatTrace {
        truncation_bound: walk.tail_bound(),
        value: walk.sum,
        cutoff,
    })
}

/// Heat trace with the smallest cutoff whose tail bound is below `eps`.
pub fn heat_trace(t: &DBig, n: u64, c: &Rational, eps: &DBig, digits: usize) -> Result<HeatTrace> {
    check_spectrum_args(n, c)?;
    check_t(t)?;
    if eps <= &DBig::ZERO {
        return Err(Error::NotPositive {
            what: "tail tolerance",
            value: eps.to_string(),
        });
    }
    let mut walk = LevelWalk::new(t, n, c, digits + GUARD_DIGITS);
    let half = lift(1, walk.prec) / lift(2, walk.prec);
    let mut last_bound = None;
    loop {
        walk.add_level();
        // the comparison can only succeed once successive weights shrink
        if walk.step < half {
            if let Some(bound) = walk.tail_bound() {
                if &bound < eps {
                    return Ok(HeatTrace {
                        value: walk.sum,
                        truncation_bound: Some(bound),
                        cutoff: walk.k - 1,
                    });
                }
                last_bound = Some(bound);
            }
        }
        if walk.k > MAX_CUTOFF {
            return Err(Error::TailBound {
                achieved: last_bound.map_or("unbounded".into(), |b| format!("{:.5e}", b)),
                target: format!("{:.5e}", eps),
                cutoff: walk.k - 1,
            });
        }
    }
}

/// Settings for [`fit_asymptotics`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FitConfig {
    /// Polynomial degree `D`; `a₀..a_D` are fitted.
    pub degree: usize,
    pub t_min: Rational,
    pub t_max: Rational,
    /// Number of geometric grid points.
    pub points: usize,
    /// Working precision in significant decimal digits.
    pub digits: usize,
    /// Largest acceptable `max |y − fit| / |y|` over the grid.
    pub max_relative_residual: Rational,
}

impl Default for FitConfig {
    fn default() -> Self {
        FitConfig {
            degree: 4,
            t_min: Rational::frac(1, 1000),
            t_max: Rational::frac(1, 100),
            points: 24,
            digits: 60,
            max_relative_residual: Rational::frac(1, 1_000_000),
        }
    }
}

impl FitConfig {
    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::FitConfig(m));
        if !self.t_min.is_positive() || self.t_min >= self.t_max {
            return bad(format!(
                "need 0 < t_min < t_max, got t_min = {}, t_max = {}",
                self.t_min, self.t_max
            ));
        }
        if self.points < self.degree + 1 {
            return bad(format!(
                "need at least degree + 1 = {} points, got {}",
                self.degree + 1,
                self.points
            ));
        }
        if self.points < 2 {
            return bad("need at least 2 points".into());
        }
        if self.digits < 20 {
            return bad(format!("need at least 20 digits, got {}", self.digits));
        }
        if !self.max_relative_residual.is_positive() {
            return bad("residual threshold must be positive".into());
        }
        Ok(())
    }

    /// Tail tolerance used for every grid point: `10^−max(40, digits)`.
    pub fn tail_tolerance(&self) -> DBig {
        let e = self.digits.max(40) as i64;
        lift(1, self.digits + GUARD_DIGITS) / lift(10, self.digits + GUARD_DIGITS).powi(e.into())
    }
}

/// Fitted small-`t` coefficients of `(4πt)^n Z(t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HeatTraceFit {
    pub n: u64,
    pub c: Rational,
    pub digits: usize,
    /// `a₀, …, a_D`
    pub fitted_a: Vec<DBig>,
    /// `max |y − fit| / |y|` over the grid.
    pub fit_residual: DBig,
    /// Largest tail bound used on the grid.
    pub truncation_bound: DBig,
    pub t_grid: Vec<DBig>,
    pub cutoffs: Vec<u64>,
}

impl HeatTraceFit {
    /// `a_i / a₀`.
    pub fn ratio(&self, i: usize) -> Option<DBig> {
        let a = self.fitted_a.get(i)?;
        Some(a.clone() / &self.fitted_a[0])
    }

    /// Exact prediction for `a_i / a₀` (`i <= 2`) from the heat invariant
    /// formulas at `p = 0`: `1`, `s/6` and `a₂(0, n, c, 1) / a₀(0, n, 1)`,
    /// with `s = n(n+1)c`.
    pub fn predicted_ratio(&self, i: usize) -> Option<Rational> {
        predicted_ratio(self.n, &self.c, i)
    }

    /// `|fitted/predicted − 1|` for `a_i / a₀`.
    pub fn ratio_relative_error(&self, i: usize) -> Option<DBig> {
        let predicted = rational_to_dbig(&self.predicted_ratio(i)?, self.prec());
        let fitted = self.ratio(i)?;
        Some(abs(&(fitted / predicted - lift(1, self.prec()))))
    }

    /// `|a₀ / Vol − 1|` using `Vol = (4π/c)^n / n!`.
    pub fn a0_relative_error(&self) -> Result<DBig> {
        let vol = volume(self.n, &self.c, self.digits)?;
        Ok(abs(&(self.fitted_a[0].clone() / vol - lift(1, self.prec()))))
    }

    fn prec(&self) -> usize {
        self.digits + GUARD_DIGITS
    }
}

/// See [`HeatTraceFit::predicted_ratio`].
pub fn predicted_ratio(n: u64, c: &Rational, i: usize) -> Option<Rational> {
    let one = Rational::one();
    match i {
        0 => Some(one),
        1 => {
            let s = Rational::from(n * (n + 1)) * c;
            Some(patodi::a1_coefficient(0, n).ok()? * s)
        }
        2 => {
            let a2 = patodi::a2_const_hsc(0, n, c, &one).ok()?;
            a2.checked_div(&patodi::a0(0, n, &one).ok()?).ok()
        }
        _ => None,
    }
}

fn geometric_grid(t_min: &DBig, t_max: &DBig, points: usize, prec: usize) -> Vec<DBig> {
    let steps = lift(points as u64 - 1, prec);
    let ratio = ((t_max.clone() / t_min).ln() / steps).exp();
    let mut grid = Vec::with_capacity(points);
    let mut t = t_min.clone();
    for _ in 0..points - 1 {
        grid.push(t.clone());
        t *= &ratio;
    }
    grid.push(t_max.clone());
    grid
}

/// Solve `A x = b` by Gaussian elimination with partial pivoting.
fn solve(mut a: Vec<Vec<DBig>>, mut b: Vec<DBig>) -> Result<Vec<DBig>> {
    let dim = b.len();
    for col in 0..dim {
        let pivot = (col..dim)
            .max_by(|&i, &j| abs(&a[i][col]).cmp(&abs(&a[j][col])))
            .expect("non-empty range");
        if a[pivot][col] == DBig::ZERO {
            return Err(Error::Singular);
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        let (upper, lower) = a.split_at_mut(col + 1);
        let pivot_row = &upper[col];
        for (offset, target) in lower.iter_mut().enumerate() {
            let row = col + 1 + offset;
            let factor = target[col].clone() / &pivot_row[col];
            for (entry, p) in target[col..].iter_mut().zip(&pivot_row[col..]) {
                *entry -= factor.clone() * p;
            }
            let delta = factor * &b[col];
            b[row] -= delta;
        }
    }
    let mut x = vec![DBig::ZERO; dim];
    for row in (0..dim).rev() {
        let mut acc = b[row].clone();
        for k in row + 1..dim {
            acc -= a[row][k].clone() * &x[k];
        }
        x[row] = acc / &a[row][row];
    }
    Ok(x)
}

/// Evaluate the heat trace on a geometric grid in `[t_min, t_max]`, multiply
/// by `(4πt)^n`, and least-squares fit a polynomial of degree `D` in `t`.
///
/// The fit is done in the scaled variable `t / t_max` and mapped back. A
/// relative residual above the configured threshold is an error.
pub fn fit_asymptotics(n: u64, c: &Rational, config: &FitConfig) -> Result<HeatTraceFit> {
    check_spectrum_args(n, c)?;
    config.validate()?;
    let prec = config.digits + GUARD_DIGITS;
    let t_min = rational_to_dbig(&config.t_min, prec);
    let t_max = rational_to_dbig(&config.t_max, prec);
    let grid = geometric_grid(&t_min, &t_max, config.points, prec);
    let eps = config.tail_tolerance();
    let four_pi = lift(4, prec) * DBig::pi(prec);

    let mut ys = Vec::with_capacity(grid.len());
    let mut cutoffs = Vec::with_capacity(grid.len());
    let mut worst_bound = lift(0, prec);
    for t in &grid {
        let trace = heat_trace(t, n, c, &eps, config.digits)?;
        let bound = trace.truncation_bound.expect("heat_trace returns a bound");
        if bound > worst_bound {
            worst_bound = bound;
        }
        cutoffs.push(trace.cutoff);
        let scale = (four_pi.clone() * t).powi((n as i64).into());
        ys.push(trace.value * scale);
    }

    let dim = config.degree + 1;
    let xs: Vec<DBig> = grid.iter().map(|t| t.clone() / &t_max).collect();
    let powers: Vec<Vec<DBig>> = xs
        .iter()
        .map(|x| {
            let mut row = Vec::with_capacity(2 * dim);
            let mut acc = lift(1, prec);
            for _ in 0..2 * dim {
                row.push(acc.clone());
                acc *= x;
            }
            row
        })
        .collect();
    let mut normal = vec![vec![lift(0, prec); dim]; dim];
    let mut rhs = vec![lift(0, prec); dim];
    for (pw, y) in powers.iter().zip(&ys) {
        for j in 0..dim {
            for k in 0..dim {
                normal[j][k] += &pw[j + k];
            }
            rhs[j] += pw[j].clone() * y;
        }
    }
    let scaled = solve(normal, rhs)?;
    let mut fitted_a = Vec::with_capacity(dim);
    let mut t_pow = lift(1, prec);
    for b in scaled.iter() {
        fitted_a.push(b.clone() / &t_pow);
        t_pow *= &t_max;
    }

    let mut residual = lift(0, prec);
    for (pw, y) in powers.iter().zip(&ys) {
        let model = scaled
            .iter()
            .zip(pw)
            .fold(lift(0, prec), |acc, (b, x)| acc + b.clone() * x);
        let rel = abs(&((y.clone() - model) / y));
        if rel > residual {
            residual = rel;
        }
    }
    let threshold = rational_to_dbig(&config.max_relative_residual, prec);
    if residual > threshold {
        return Err(Error::IllConditioned {
            residual: format!("{:.5e}", residual),
            threshold: config.max_relative_residual.to_string(),
        });
    }

    Ok(HeatTraceFit {
        n,
        c: c.clone(),
        digits: config.digits,
        fitted_a,
        fit_residual: residual,
        truncation_bound: worst_bound,
        t_grid: grid,
        cutoffs,
    })
}

/// Round to `digits` significant digits for display.
pub fn to_decimal_string(x: &DBig, digits: usize) -> String {
    x.clone().with_precision(digits).value().to_string()
}

/// `x` rounded to `digits` significant digits in `d.ddde-k` form.
pub fn to_scientific_string(x: &DBig, digits: usize) -> String {
    format!("{:e}", x.clone().with_precision(digits).value())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dec(s: &str, prec: usize) -> DBig {
        lift(DBig::from_str(s).unwrap(), prec)
    }

    #[test]
    fn eigenvalue_examples() {
        for n in 1..10 {
            let c = Rational::frac(7, 3);
            assert_eq!(eigenvalue(1, n, &c).unwrap(), Rational::from(n + 1) * &c);
            assert_eq!(eigenvalue(0, n, &c).unwrap(), Rational::zero());
        }
        assert_eq!(eigenvalue(2, 1, &Rational::from(4)).unwrap(), Rational::from(24));
        assert!(eigenvalue(1, 1, &Rational::zero()).is_err());
        assert!(eigenvalue(1, 1, &Rational::frac(-1, 2)).is_err());
    }

    #[test]
    fn multiplicity_examples() {
        for n in 1..20u64 {
            assert_eq!(multiplicity(1, n), BigInt::from(n * n + 2 * n));
            assert_eq!(multiplicity(0, n), BigInt::from(1));
        }
        for k in 0..50u64 {
            assert_eq!(multiplicity(k, 1), BigInt::from(2 * k + 1));
        }
    }

    #[test]
    fn multiplicity_closed_form() {
        // (2k+n)/n · C(k+n−1, k)²
        for n in 1..8i64 {
            for k in 0..40i64 {
                let b = binom_ext(k + n - 1, k);
                let expect = BigInt::from(2 * k + n) * &b * &b / n;
                assert_eq!(multiplicity(k as u64, n as u64), expect);
            }
        }
    }

    #[test]
    fn multiplicity_bound_used_in_tail() {
        for n in 1..7u64 {
            let nf = factorial(n);
            for k in 0..200u64 {
                let bound = BigInt::from(2 * n) * BigInt::from(k + n).pow(2 * n as u32 - 1);
                assert!(multiplicity(k, n) * &nf * &nf <= bound, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn levels_increase() {
        let lv = levels(3, &Rational::from(2), 30).unwrap();
        assert!(lv.windows(2).all(|w| w[0].eigenvalue < w[1].eigenvalue));
        assert_eq!(lv[1].multiplicity, BigInt::from(15));
    }

    #[test]
    fn sphere_trace_at_t1() {
        // 1 + 3e^−8 + 5e^−24 + 7e^−48 + …, re-summed term by term.
        let prec = 50;
        let t = lift(1, prec);
        let eps = dec("1e-45", prec);
        let got = heat_trace(&t, 1, &Rational::from(4), &eps, 40).unwrap();
        let mut oracle = lift(0, prec + 20);
        for l in 0..40i64 {
            let e = lift(-4 * l * (l + 1), prec + 20).exp();
            oracle += lift(2 * l + 1, prec + 20) * e;
        }
        let diff = abs(&(got.value.clone() - oracle));
        assert!(diff < eps, "diff {diff}");
        assert!(got.truncation_bound.unwrap() < eps);
    }

    #[test]
    fn large_t_two_levels() {
        let prec = 40;
        let t = lift(10, prec);
        let eps = dec("1e-60", prec);
        let got = heat_trace(&t, 2, &Rational::one(), &eps, 40).unwrap();
        let two_levels = lift(1, prec) + lift(8, prec) * lift(-30, prec).exp();
        let rest = abs(&(got.value - two_levels));
        // next level: m_2 = 27 at λ = 8
        assert!(rest <= lift(28, prec) * lift(-80, prec).exp());
    }

    #[test]
    fn trace_at_least_one_and_decreasing() {
        let prec = 40;
        let eps = dec("1e-40", prec);
        let c = Rational::frac(3, 2);
        let mut prev: Option<DBig> = None;
        for s in ["0.01", "0.05", "0.2", "1", "3"] {
            let v = heat_trace(&dec(s, prec), 2, &c, &eps, 40).unwrap().value;
            assert!(v > lift(1, prec));
            if let Some(p) = prev {
                assert!(v < p);
            }
            prev = Some(v);
        }
    }

    #[test]
    fn doubling_cutoff_stays_within_bound() {
        let prec = 40;
        let t = dec("0.01", prec);
        let c = Rational::from(4);
        for n in 1..=3 {
            let base = heat_trace(&t, n, &c, &dec("1e-40", prec), 40).unwrap();
            let doubled = heat_trace_with_cutoff(&t, n, &c, 2 * base.cutoff, 40).unwrap();
            let change = abs(&(doubled.value - &base.value));
            assert!(change <= base.truncation_bound.unwrap());
        }
    }

    #[test]
    fn bad_inputs() {
        let prec = 30;
        let eps = dec("1e-30", prec);
        let c = Rational::one();
        assert!(heat_trace(&lift(0, prec), 1, &c, &eps, 30).is_err());
        assert!(heat_trace(&lift(-1, prec), 1, &c, &eps, 30).is_err());
        assert!(heat_trace(&lift(1, prec), 1, &c, &lift(0, prec), 30).is_err());
        assert!(heat_trace(&lift(1, prec), 0, &c, &eps, 30).is_err());
        // tiny t with a tiny cap on levels cannot reach the tolerance
        assert!(heat_trace_with_cutoff(&dec("1e-6", prec), 1, &c, 3, 30)
            .unwrap()
            .truncation_bound
            .is_none());
    }

    #[test]
    fn fit_config_validation() {
        let c = Rational::from(4);
        let mut cfg = FitConfig {
            points: 3,
            ..FitConfig::default()
        };
        assert!(matches!(fit_asymptotics(1, &c, &cfg), Err(Error::FitConfig(_))));
        cfg = FitConfig {
            t_min: Rational::frac(1, 10),
            ..FitConfig::default()
        };
        assert!(fit_asymptotics(1, &c, &cfg).is_err());
        cfg = FitConfig {
            digits: 10,
            ..FitConfig::default()
        };
        assert!(fit_asymptotics(1, &c, &cfg).is_err());
        assert!(fit_asymptotics(1, &Rational::zero(), &FitConfig::default()).is_err());
    }

    #[test]
    fn coarse_fit_is_reported_as_ill_conditioned() {
        // degree 1 over a wide window cannot follow the curvature terms
        let cfg = FitConfig {
            degree: 1,
            t_min: Rational::frac(1, 100),
            t_max: Rational::frac(1, 5),
            points: 8,
            digits: 30,
            ..FitConfig::default()
        };
        assert!(matches!(
            fit_asymptotics(1, &Rational::from(4), &cfg),
            Err(Error::IllConditioned { .. })
        ));
    }

    #[test]
    fn predicted_ratios() {
        let c = Rational::from(4);
        assert_eq!(predicted_ratio(1, &c, 1), Some(Rational::frac(4, 3)));
        assert_eq!(predicted_ratio(1, &c, 2), Some(Rational::frac(16, 15)));
        assert_eq!(predicted_ratio(2, &c, 1), Some(Rational::from(4)));
        assert_eq!(predicted_ratio(2, &c, 3), None);
    }

    #[test]
    fn sphere_volume_is_pi() {
        let v = volume(1, &Rational::from(4), 40).unwrap();
        let pi: DBig = DBig::pi(52);
        assert!(abs(&(v - pi)) < dec("1e-38", 52));
    }
}
