//! The functions under study and their certified polynomial bounds.
//!
//! * [`PairMN`] — a candidate pair `(m, n)` with its exact slope and the
//!   hypothesis checks for the main theorem.
//! * [`SineBoundPoly`] — a polynomial lower/upper bound for sine on a stated
//!   interval. Certification evaluates the *difference series* `sin - poly`
//!   (exact rational tail coefficients plus a Lagrange remainder), factoring
//!   out the leading power so that high-order tangencies at the interval end
//!   do not defeat interval subdivision.
//! * `eval_f` / `eval_g` / `eval_g_tilde` — rigorous enclosures, switching to
//!   certified series quotients near the removable singularities at `0` and
//!   `pi`.

use crate::interval::trig::{sin_enclosure, sin_point};
use crate::interval::{pi, Interval};
use crate::poly::{IntervalPoly, PolyCoeffs};
use crate::rational::{factorial, ratio};
use crate::sign::{prove_sign_on_interval, SignClaim, SignOutcome};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PairError {
    #[error("require m > n, got m={m}, n={n}")]
    OrderViolated { m: u32, n: u32 },
    #[error("require n >= 2, got n={0}")]
    NTooSmall(u32),
}

/// Why a pair falls outside the theorem hypotheses.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScopeError {
    #[error("m = {0} must be odd")]
    MEven(u32),
    #[error("n = {0} must be even")]
    NOdd(u32),
    #[error("slope n/m = {n}/{m} is below 1/2")]
    SlopeBelowHalf { m: u32, n: u32 },
    #[error("slope n/m = {n}/{m} exceeds 0.8194")]
    SlopeAboveBound { m: u32, n: u32 },
    #[error("m = {0} is below 81")]
    MTooSmall(u32),
}

/// A candidate pair `(m, n)` with `m > n >= 2`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct PairMN {
    m: u32,
    n: u32,
}

impl PairMN {
    pub fn new(m: u32, n: u32) -> Result<PairMN, PairError> {
        if n < 2 {
            return Err(PairError::NTooSmall(n));
        }
        if m <= n {
            return Err(PairError::OrderViolated { m, n });
        }
        Ok(PairMN { m, n })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Exact slope `lambda = n/m`.
    pub fn lambda(&self) -> BigRational {
        ratio(self.n as i64, self.m as i64)
    }

    /// `nu = lambda^2`.
    pub fn nu(&self) -> BigRational {
        let l = self.lambda();
        &l * &l
    }

    /// `f(0) = (n^3 - n) / (m^3 - m)`, exactly.
    pub fn f_at_zero(&self) -> BigRational {
        let (m, n) = (self.m as i64, self.n as i64);
        ratio(n * n * n - n, m * m * m - m)
    }

    /// `g(0) = -n (m^2 - n^2) / (m^2 - 1)`, exactly.
    pub fn g_at_zero(&self) -> BigRational {
        let (m, n) = (self.m as i64, self.n as i64);
        ratio(-n * (m * m - n * n), m * m - 1)
    }

    /// Check the hypotheses: m odd, n even, 1/2 <= n/m <= 0.8194, m >= 81.
    pub fn theorem_scope(&self) -> Result<(), ScopeError> {
        if self.m % 2 == 0 {
            return Err(ScopeError::MEven(self.m));
        }
        if self.n % 2 == 1 {
            return Err(ScopeError::NOdd(self.n));
        }
        // n/m >= 1/2  <=>  2n >= m ; n/m <= 8194/10000 <=> 10000 n <= 8194 m
        if 2 * self.n < self.m {
            return Err(ScopeError::SlopeBelowHalf {
                m: self.m,
                n: self.n,
            });
        }
        if 10000u64 * self.n as u64 > 8194u64 * self.m as u64 {
            return Err(ScopeError::SlopeAboveBound {
                m: self.m,
                n: self.n,
            });
        }
        if self.m < 81 {
            return Err(ScopeError::MTooSmall(self.m));
        }
        Ok(())
    }
}

/// Which side of sine the polynomial bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Lower,
    Upper,
}

/// A polynomial bound for sine in the shifted variable `w = x - shift`,
/// where the shift is an exact rational multiple of pi (0 or 3/2 here).
#[derive(Clone, Debug)]
pub struct SineBoundPoly {
    /// Polynomial in `w`.
    pub poly: PolyCoeffs,
    /// Shift as a multiple of pi: `0` or `3/2`.
    pub shift_pi: BigRational,
    pub side: Side,
    /// Validity interval in `x`, exact rational endpoints.
    pub validity: (BigRational, BigRational),
}

fn sine_series_poly(coeffs: &[(i64, i64, usize)]) -> PolyCoeffs {
    let mut v = vec![BigRational::zero(); coeffs.iter().map(|c| c.2).max().unwrap() + 1];
    for (num, den, deg) in coeffs {
        v[*deg] = ratio(*num, *den);
    }
    PolyCoeffs::new(v)
}

/// Degree-9 lower bound with the sharpened `x^9/482800` term, on `[0, 5.78]`.
pub fn s3_lower() -> SineBoundPoly {
    SineBoundPoly {
        poly: sine_series_poly(&[
            (1, 1, 1),
            (-1, 6, 3),
            (1, 120, 5),
            (-1, 5040, 7),
            (1, 482800, 9),
        ]),
        shift_pi: BigRational::zero(),
        side: Side::Lower,
        validity: (BigRational::zero(), crate::rational::dec("5.78")),
    }
}

/// Degree-9 Taylor upper bound (`x^9/9!`), valid for all `x >= 0`.
pub fn s3_upper() -> SineBoundPoly {
    SineBoundPoly {
        poly: sine_series_poly(&[
            (1, 1, 1),
            (-1, 6, 3),
            (1, 120, 5),
            (-1, 5040, 7),
            (1, 362880, 9),
        ]),
        shift_pi: BigRational::zero(),
        side: Side::Upper,
        validity: (BigRational::zero(), crate::rational::dec("5.78")),
    }
}

/// Cubic lower bound `x - x^3/3!`.
pub fn cubic_lower() -> SineBoundPoly {
    SineBoundPoly {
        poly: sine_series_poly(&[(1, 1, 1), (-1, 6, 3)]),
        shift_pi: BigRational::zero(),
        side: Side::Lower,
        validity: (BigRational::zero(), crate::rational::dec("5.78")),
    }
}

/// Quintic upper bound `x - x^3/3! + x^5/5!`.
pub fn quintic_upper() -> SineBoundPoly {
    SineBoundPoly {
        poly: sine_series_poly(&[(1, 1, 1), (-1, 6, 3), (1, 120, 5)]),
        shift_pi: BigRational::zero(),
        side: Side::Upper,
        validity: (BigRational::zero(), crate::rational::dec("5.78")),
    }
}

/// Quartic lower bound `-1 + w^2/2 - w^4/4!` in `w = x - 3pi/2`.
pub fn quartic_lower_3pi2() -> SineBoundPoly {
    SineBoundPoly {
        poly: sine_series_poly(&[(-1, 1, 0), (1, 2, 2), (-1, 24, 4)]),
        shift_pi: ratio(3, 2),
        side: Side::Lower,
        validity: (BigRational::zero(), crate::rational::dec("5.78")),
    }
}

/// Quadratic upper bound `-1 + w^2/2` in `w = x - 3pi/2`.
pub fn quadratic_upper_3pi2() -> SineBoundPoly {
    SineBoundPoly {
        poly: sine_series_poly(&[(-1, 1, 0), (1, 2, 2)]),
        shift_pi: ratio(3, 2),
        side: Side::Upper,
        validity: (BigRational::zero(), crate::rational::dec("5.78")),
    }
}

/// Coefficient of degree `j` in the series of `sin(shift + w)` around `w = 0`,
/// for shift = 0 (`sin w`) or shift = 3pi/2 (`-cos w`).
fn reference_coeff(shift_is_three_half: bool, j: usize) -> BigRational {
    if shift_is_three_half {
        if j % 2 != 0 {
            return BigRational::zero();
        }
        let sign = if (j / 2) % 2 == 0 { -1 } else { 1 };
        ratio(sign, 1) / factorial(j as u32)
    } else {
        if j % 2 != 1 {
            return BigRational::zero();
        }
        let sign = if ((j - 1) / 2) % 2 == 0 { 1 } else { -1 };
        ratio(sign, 1) / factorial(j as u32)
    }
}

/// The difference `sin x - poly(w)` as a factored tail series
/// `w^factor_pow * (reduced(w) ± remainder)`.
pub(crate) struct DiffSeries {
    pub reduced: PolyCoeffs,
    pub factor_pow: usize,
    /// `|tail| <= rem_coeff * |w|^rem_degree` (already divided by `w^factor_pow`).
    pub rem_coeff: BigRational,
    pub rem_degree: u32,
}

pub(crate) fn sine_diff_series(b: &SineBoundPoly) -> DiffSeries {
    let three_half = b.shift_pi == ratio(3, 2);
    assert!(
        three_half || b.shift_pi.is_zero(),
        "only shifts 0 and 3pi/2 are supported"
    );
    let poly_deg = b.poly.degree().expect("nonzero bound polynomial");
    // Truncation: include reference terms well past the polynomial degree.
    let trunc = poly_deg + 24;
    let mut diff = vec![BigRational::zero(); trunc + 1];
    for (j, d) in diff.iter_mut().enumerate() {
        *d = reference_coeff(three_half, j) - b.poly.coeff(j);
    }
    let factor_pow = diff
        .iter()
        .position(|c| !c.is_zero())
        .expect("poly differs from sine");
    let reduced = PolyCoeffs::new(diff[factor_pow..].to_vec());
    // First omitted reference degree: next index past `trunc` with the series
    // parity. Factor 2 absorbs the alternating tail beyond the first term.
    let parity = if three_half { 0 } else { 1 };
    let mut rem_deg = trunc + 1;
    while rem_deg % 2 != parity {
        rem_deg += 1;
    }
    let rem_coeff = ratio(2, 1) / factorial(rem_deg as u32);
    DiffSeries {
        reduced,
        factor_pow,
        rem_coeff,
        rem_degree: (rem_deg - factor_pow) as u32,
    }
}

impl DiffSeries {
    /// Enclosure of `(sin x - poly(w)) / w^factor_pow` over the w-interval.
    pub fn eval_reduced(&self, ip: &IntervalPoly, rem_coeff: &Interval, w: Interval) -> Interval {
        let base = ip.eval(w);
        let rem = rem_coeff.mul(&w.abs().pow_int(self.rem_degree)).hi();
        base.add(&Interval::new(-rem, rem))
    }
}

/// Certify a sine sandwich polynomial on its validity interval by an adaptive
/// sign proof of the reduced difference series.
pub fn certify_sine_bound(b: &SineBoundPoly, max_depth: u32) -> SignOutcome {
    let series = sine_diff_series(b);
    let w_domain = if b.shift_pi.is_zero() {
        Interval::from_rational_bounds(&b.validity.0, &b.validity.1)
    } else {
        let x = Interval::from_rational_bounds(&b.validity.0, &b.validity.1);
        let shift = pi().mul(&Interval::from_rational(&b.shift_pi));
        x.sub(&shift)
    };
    if series.factor_pow % 2 == 1 {
        assert!(
            w_domain.lo() >= 0.0,
            "odd leading power requires a nonnegative domain"
        );
    }
    let ip = series.reduced.to_interval_poly();
    let rem_coeff = Interval::from_rational(&series.rem_coeff);
    // side = Lower:  sin - poly >= 0  <=>  reduced >= 0  (w^pow >= 0)
    // side = Upper:  poly - sin >= 0  <=>  reduced <= 0
    let claim = match b.side {
        Side::Lower => SignClaim::GeZero,
        Side::Upper => SignClaim::LeZero,
    };
    prove_sign_on_interval(
        &|w| series.eval_reduced(&ip, &rem_coeff, w),
        w_domain,
        claim,
        max_depth,
    )
}

/// Enclosure of `sin x - poly` at a point interval of `x` (for spot values).
pub fn sine_bound_gap(b: &SineBoundPoly, x: Interval) -> Interval {
    let series = sine_diff_series(b);
    let w = if b.shift_pi.is_zero() {
        x
    } else {
        x.sub(&pi().mul(&Interval::from_rational(&b.shift_pi)))
    };
    let ip = series.reduced.to_interval_poly();
    let rem_coeff = Interval::from_rational(&series.rem_coeff);
    let reduced = series.eval_reduced(&ip, &rem_coeff, w);
    let gap = w.pow_int(series.factor_pow as u32).mul(&reduced);
    match b.side {
        Side::Lower => gap,
        Side::Upper => gap.neg(),
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error("denominator enclosure may vanish; subdivide or use the series form")]
    DenominatorMayVanish,
}

fn big_pow(k: u32, e: u32) -> BigRational {
    BigRational::from(BigInt::from(k).pow(e))
}

/// Series terms for `k sin x - sin(kx)`, divided by `x^3`:
/// coefficients `(-1)^{j+1} (k^{2j+1} - k)/(2j+1)!` at reduced degree `2j-2`.
fn series_k_sin_minus(k: u32, terms: usize) -> (PolyCoeffs, BigRational, u32) {
    let mut coeffs = vec![BigRational::zero(); 2 * terms - 1];
    for j in 1..=terms {
        let sign = if (j + 1) % 2 == 0 { 1 } else { -1 };
        let c = ratio(sign, 1) * (big_pow(k, 2 * j as u32 + 1) - ratio(k as i64, 1))
            / factorial(2 * j as u32 + 1);
        coeffs[2 * (j - 1)] = c;
    }
    let jn = terms as u32 + 1;
    let rem = ratio(2, 1) * (big_pow(k, 2 * jn + 1) + ratio(k as i64, 1)) / factorial(2 * jn + 1);
    (PolyCoeffs::new(coeffs), rem, 2 * jn + 1 - 3)
}

/// Series terms for `k sin w + sin(kw)`, divided by `w`:
/// coefficients `(-1)^j (k + k^{2j+1})/(2j+1)!` at reduced degree `2j`.
fn series_k_sin_plus(k: u32, terms: usize) -> (PolyCoeffs, BigRational, u32) {
    let mut coeffs = vec![BigRational::zero(); 2 * terms - 1];
    for j in 0..terms {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let c = ratio(sign, 1) * (ratio(k as i64, 1) + big_pow(k, 2 * j as u32 + 1))
            / factorial(2 * j as u32 + 1);
        coeffs[2 * j] = c;
    }
    let jn = terms as u32;
    let rem = ratio(2, 1) * (big_pow(k, 2 * jn + 1) + ratio(k as i64, 1)) / factorial(2 * jn + 1);
    (PolyCoeffs::new(coeffs), rem, 2 * jn + 1 - 1)
}

/// Series terms for `n sin(mx) - m sin(nx)`, divided by `x^3`.
fn series_g_numerator(m: u32, n: u32, terms: usize) -> (PolyCoeffs, BigRational, u32) {
    let mut coeffs = vec![BigRational::zero(); 2 * terms - 1];
    for j in 1..=terms {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let c = ratio(sign, 1)
            * (ratio(n as i64, 1) * big_pow(m, 2 * j as u32 + 1)
                - ratio(m as i64, 1) * big_pow(n, 2 * j as u32 + 1))
            / factorial(2 * j as u32 + 1);
        coeffs[2 * (j - 1)] = c;
    }
    let jn = terms as u32 + 1;
    let rem = ratio(2, 1)
        * (ratio(n as i64, 1) * big_pow(m, 2 * jn + 1)
            + ratio(m as i64, 1) * big_pow(n, 2 * jn + 1))
        / factorial(2 * jn + 1);
    (PolyCoeffs::new(coeffs), rem, 2 * jn + 1 - 3)
}

const SERIES_TERMS: usize = 14;

fn eval_series(p: &PolyCoeffs, rem: &BigRational, rem_deg: u32, x: Interval) -> Interval {
    let base = crate::poly::horner_eval(p, x);
    let r = Interval::from_rational(rem)
        .mul(&x.abs().pow_int(rem_deg))
        .hi();
    base.add(&Interval::new(-r, r))
}

enum Region {
    NearZero,
    NearPi,
    Generic,
}

fn classify(m: u32, x: &Interval) -> Region {
    let cut = 3.0 / m as f64;
    if x.lo() >= -cut && x.hi() <= cut {
        Region::NearZero
    } else if x.lo() >= pi().lo() - cut && x.hi() <= pi().hi() + cut {
        Region::NearPi
    } else {
        Region::Generic
    }
}

/// Enclosure of `f(x) = (n sin x - sin nx)/(m sin x - sin mx)` over `x`.
///
/// Near the removable singularities (`x` within `3/m` of `0` or `pi`) both
/// numerator and denominator are replaced by their certified series forms
/// with the leading power cancelled, so the quotient stays finite.
pub fn eval_f(pair: &PairMN, x: Interval) -> Result<Interval, EvalError> {
    let (m, n) = (pair.m, pair.n);
    match classify(m, &x) {
        Region::NearZero => {
            let (np, nr, nd) = series_k_sin_minus(n, SERIES_TERMS);
            let (dp, dr, dd) = series_k_sin_minus(m, SERIES_TERMS);
            let num = eval_series(&np, &nr, nd, x);
            let den = eval_series(&dp, &dr, dd, x);
            num.div(&den).map_err(|_| EvalError::DenominatorMayVanish)
        }
        Region::NearPi => {
            let w = x.sub(&pi());
            // Leading powers in w depend on parities; see module docs.
            let (num, pn) = if n % 2 == 0 {
                let (p, r, d) = series_k_sin_plus(n, SERIES_TERMS);
                (eval_series(&p, &r, d, w).neg(), 1u32)
            } else {
                let (p, r, d) = series_k_sin_minus(n, SERIES_TERMS);
                (eval_series(&p, &r, d, w).neg(), 3u32)
            };
            let (den, pd) = if m % 2 == 1 {
                let (p, r, d) = series_k_sin_minus(m, SERIES_TERMS);
                (eval_series(&p, &r, d, w).neg(), 3u32)
            } else {
                let (p, r, d) = series_k_sin_plus(m, SERIES_TERMS);
                (eval_series(&p, &r, d, w).neg(), 1u32)
            };
            if pn < pd {
                return Err(EvalError::DenominatorMayVanish);
            }
            let ratio = num.div(&den).map_err(|_| EvalError::DenominatorMayVanish)?;
            Ok(ratio.mul(&w.pow_int(pn - pd)))
        }
        Region::Generic => {
            let num = sin_enclosure(x)
                .scale(n as f64)
                .sub(&sin_enclosure(x.scale(n as f64)));
            let den = sin_enclosure(x)
                .scale(m as f64)
                .sub(&sin_enclosure(x.scale(m as f64)));
            num.div(&den).map_err(|_| EvalError::DenominatorMayVanish)
        }
    }
}

/// Enclosure of `g(x) = (n sin mx - m sin nx)/(m sin x - sin mx) = m f(x) - n`.
pub fn eval_g(pair: &PairMN, x: Interval) -> Result<Interval, EvalError> {
    let (m, n) = (pair.m, pair.n);
    match classify(m, &x) {
        Region::NearZero => {
            let (np, nr, nd) = series_g_numerator(m, n, SERIES_TERMS);
            let (dp, dr, dd) = series_k_sin_minus(m, SERIES_TERMS);
            let num = eval_series(&np, &nr, nd, x);
            let den = eval_series(&dp, &dr, dd, x);
            num.div(&den).map_err(|_| EvalError::DenominatorMayVanish)
        }
        _ => {
            let num = sin_enclosure(x.scale(m as f64))
                .scale(n as f64)
                .sub(&sin_enclosure(x.scale(n as f64)).scale(m as f64));
            let den = sin_enclosure(x)
                .scale(m as f64)
                .sub(&sin_enclosure(x.scale(m as f64)));
            num.div(&den).map_err(|_| EvalError::DenominatorMayVanish)
        }
    }
}

/// Enclosure of `g~(x) = g(x + pi) = (n sin mx + m sin nx)/(m sin x - sin mx)`.
pub fn eval_g_tilde(pair: &PairMN, x: Interval) -> Result<Interval, EvalError> {
    let (m, n) = (pair.m, pair.n);
    let num = sin_enclosure(x.scale(m as f64))
        .scale(n as f64)
        .add(&sin_enclosure(x.scale(n as f64)).scale(m as f64));
    let den = sin_enclosure(x)
        .scale(m as f64)
        .sub(&sin_enclosure(x.scale(m as f64)));
    num.div(&den).map_err(|_| EvalError::DenominatorMayVanish)
}

/// What is already known about `B_mn = min_x f(x)` for this pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KnownBmn {
    /// `m` even, `n` odd: the minimum is 0, approached at `x -> pi`.
    ZeroByParity,
    /// If the minimum sits at 0 then `B_mn = f(0) = (n^3-n)/(m^3-m)`.
    FZeroIfConditionTwo,
}

/// Task descriptor binding the numeric minimizer to a pair.
#[derive(Clone, Debug, Serialize)]
pub struct BmnReference {
    pub pair: PairMN,
    /// `f(0)` as an exact rational string.
    pub f_at_zero: String,
    pub known: KnownBmn,
}

pub fn b_mn_reference(pair: &PairMN) -> BmnReference {
    let known = if pair.m % 2 == 0 && pair.n % 2 == 1 {
        KnownBmn::ZeroByParity
    } else {
        KnownBmn::FZeroIfConditionTwo
    };
    BmnReference {
        pair: *pair,
        f_at_zero: crate::rational::rat_string(&pair.f_at_zero()),
        known,
    }
}

/// Spot enclosure of `sin(q)` for an exact rational `q` (test helper).
pub fn sin_rational(q: &BigRational) -> Interval {
    let iv = Interval::from_rational(q);
    sin_point(iv.lo()).hull(&sin_point(iv.hi()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{dec, f64_to_rational};
    use num_traits::{One, Signed};

    #[test]
    fn pair_invariants() {
        assert!(PairMN::new(3, 2).is_ok());
        assert_eq!(
            PairMN::new(2, 3).unwrap_err(),
            PairError::OrderViolated { m: 2, n: 3 }
        );
        assert_eq!(PairMN::new(3, 1).unwrap_err(), PairError::NTooSmall(1));
    }

    #[test]
    fn exact_values_at_zero() {
        assert_eq!(PairMN::new(3, 2).unwrap().f_at_zero(), ratio(1, 4));
        assert_eq!(PairMN::new(5, 4).unwrap().f_at_zero(), ratio(1, 2));
        // 74046/531360 reduces to 301/2160
        assert_eq!(
            PairMN::new(81, 42).unwrap().f_at_zero(),
            ratio(74046, 531360)
        );
        assert_eq!(PairMN::new(3, 2).unwrap().g_at_zero(), ratio(-5, 4));
        assert_eq!(
            PairMN::new(81, 42).unwrap().g_at_zero(),
            ratio(-201474, 6560)
        );
    }

    #[test]
    fn g_at_zero_asymptotics() {
        // |g(0) + lambda(1-lambda^2) m| / m < 0.01 for (81, 42)
        let p = PairMN::new(81, 42).unwrap();
        let l = p.lambda();
        let asym = &l * (BigRational::one() - &l * &l) * ratio(81, 1);
        let dev = (p.g_at_zero() + asym).abs() / ratio(81, 1);
        assert!(dev < ratio(1, 100));
    }

    #[test]
    fn scope_checks() {
        assert!(PairMN::new(81, 42).unwrap().theorem_scope().is_ok());
        assert!(PairMN::new(81, 66).unwrap().theorem_scope().is_ok());
        assert_eq!(
            PairMN::new(82, 42).unwrap().theorem_scope().unwrap_err(),
            ScopeError::MEven(82)
        );
        assert_eq!(
            PairMN::new(81, 68).unwrap().theorem_scope().unwrap_err(),
            ScopeError::SlopeAboveBound { m: 81, n: 68 }
        );
        assert_eq!(
            PairMN::new(79, 40).unwrap().theorem_scope().unwrap_err(),
            ScopeError::MTooSmall(79)
        );
        assert_eq!(
            PairMN::new(81, 39).unwrap().theorem_scope().unwrap_err(),
            ScopeError::NOdd(39)
        );
        assert_eq!(
            PairMN::new(81, 40).unwrap().theorem_scope().unwrap_err(),
            ScopeError::SlopeBelowHalf { m: 81, n: 40 }
        );
    }

    #[test]
    fn certify_all_standard_sandwiches() {
        for (name, b) in [
            ("s3_lower", s3_lower()),
            ("s3_upper", s3_upper()),
            ("cubic_lower", cubic_lower()),
            ("quintic_upper", quintic_upper()),
            ("quartic_lower_3pi2", quartic_lower_3pi2()),
            ("quadratic_upper_3pi2", quadratic_upper_3pi2()),
        ] {
            let out = certify_sine_bound(&b, 40);
            assert!(out.is_proved(), "{name}: {out:?}");
        }
    }

    #[test]
    fn s3_lower_gap_at_578() {
        // paper: phi(5.78) = sin 5.78 - s1(5.78) ≈ 0.0104 (±1e-3)
        let b = s3_lower();
        let gap = sine_bound_gap(&b, Interval::from_rational(&dec("5.78")));
        assert!(gap.lo() > 0.0);
        assert!((gap.lo() - 0.0104).abs() < 1e-3 && (gap.hi() - 0.0104).abs() < 1e-3);
        // independently computed: 0.010364877999879
        assert!(gap.contains_rational(&dec("0.010364877999879014")));
    }

    #[test]
    fn f_at_removable_singularity_converges_to_f0() {
        let p = PairMN::new(3, 2).unwrap();
        let f0 = p.f_at_zero();
        for h in [1e-2, 1e-4, 1e-6, 1e-8] {
            let enc = eval_f(&p, Interval::new(-h, h)).unwrap();
            assert!(enc.contains_rational(&f0), "h={h}: {enc:?}");
        }
        let tiny = eval_f(&p, Interval::new(-1e-8, 1e-8)).unwrap();
        assert!(tiny.width() < 1e-8);
    }

    #[test]
    fn f_at_half_pi_for_3_2() {
        // f(pi/2) = (2 - 0)/(3 + 1) = 1/2 for (3, 2)
        let p = PairMN::new(3, 2).unwrap();
        let half_pi = pi().scale(0.5);
        let enc = eval_f(&p, half_pi).unwrap();
        assert!(enc.contains_rational(&ratio(1, 2)));
        assert!(enc.width() < 1e-13);
    }

    #[test]
    fn f_pointwise_high_precision_81_42() {
        // independently computed f(0.05) for (81,42) at 60-digit precision;
        // 0.05 here denotes the exact f64 nearest 0.05, so compare loosely
        // to the rational-0.05 value: the derivative of f is O(30), ulp-scale
        // input difference is ~1e-16, well below 1e-9.
        let p = PairMN::new(81, 42).unwrap();
        let enc = eval_f(&p, Interval::point(0.05)).unwrap();
        let reference = dec("0.2555214277536568893878484");
        let mid = f64_to_rational(enc.midpoint());
        assert!((mid - reference).abs() < dec("1e-9"));
        assert!(enc.width() < 1e-12);
    }

    #[test]
    fn f_even_and_periodic() {
        let p = PairMN::new(7, 4).unwrap();
        for x in [0.3, 1.1, 2.0] {
            let a = eval_f(&p, Interval::point(x)).unwrap();
            let b = eval_f(&p, Interval::point(-x)).unwrap();
            assert!(a.overlaps(&b), "evenness at {x}");
            let shifted = Interval::point(x).add(&crate::interval::two_pi());
            let c = eval_f(&p, shifted).unwrap();
            assert!(a.overlaps(&c), "periodicity at {x}");
        }
    }

    #[test]
    fn g_is_m_f_minus_n() {
        let p = PairMN::new(81, 42).unwrap();
        for x in [0.05f64, 0.4, 1.0, 2.2] {
            let f = eval_f(&p, Interval::point(x)).unwrap();
            let g = eval_g(&p, Interval::point(x)).unwrap();
            let mf_minus_n = f.scale(81.0).sub(&Interval::point(42.0));
            assert!(g.overlaps(&mf_minus_n), "x={x}: {g:?} vs {mf_minus_n:?}");
        }
    }

    #[test]
    fn g_tilde_matches_shifted_g() {
        let p = PairMN::new(81, 42).unwrap();
        for x in [0.3f64, 0.8, 1.9] {
            let gt = eval_g_tilde(&p, Interval::point(x)).unwrap();
            let g = eval_g(&p, Interval::point(x).add(&pi())).unwrap();
            assert!(gt.overlaps(&g), "x={x}: {gt:?} vs {g:?}");
        }
    }

    #[test]
    fn g_oscillates_on_0_pi() {
        let p = PairMN::new(81, 42).unwrap();
        let mut saw_pos = false;
        let mut saw_neg = false;
        for i in 1..200 {
            let x = 3.1 * i as f64 / 200.0;
            if let Ok(enc) = eval_g(&p, Interval::point(x)) {
                if enc.lo() > 0.0 {
                    saw_pos = true;
                }
                if enc.hi() < 0.0 {
                    saw_neg = true;
                }
            }
        }
        assert!(saw_pos && saw_neg);
    }

    #[test]
    fn eval_f_near_pi_parities() {
        // (m odd, n even): f -> +inf at pi, enclosure must refuse
        let p = PairMN::new(81, 42).unwrap();
        let at_pi = pi();
        assert_eq!(
            eval_f(&p, at_pi).unwrap_err(),
            EvalError::DenominatorMayVanish
        );

        // (m even, n odd): removable with value 0 at pi
        let q = PairMN::new(4, 3).unwrap();
        let enc = eval_f(&q, pi()).unwrap();
        assert!(enc.contains(0.0));
        assert!(enc.width() < 1e-10);
    }

    #[test]
    fn bmn_reference_descriptors() {
        let z = b_mn_reference(&PairMN::new(4, 3).unwrap());
        assert_eq!(z.known, KnownBmn::ZeroByParity);
        let w = b_mn_reference(&PairMN::new(81, 42).unwrap());
        assert_eq!(w.known, KnownBmn::FZeroIfConditionTwo);
        assert_eq!(w.f_at_zero, "301/2160");
    }
}
