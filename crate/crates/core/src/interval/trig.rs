//! Self-contained sine/cosine/arccosine enclosures.
//!
//! Point evaluations run in double-double precision: the argument is reduced
//! against a two-word representation of pi, the alternating Taylor series is
//! evaluated by Horner's rule in ~106-bit arithmetic, and an explicit error
//! budget (Lagrange remainder + reduction tail + rounding slop) converts the
//! result into a rigorous enclosure one or two ulps wide. No library
//! transcendental is consulted anywhere on this path.

use super::round::{add_down, add_up, mul_up, sub_down, sub_up, two_prod, DD};
use super::{pi, Interval, IntervalError};
use crate::rational::{factorial, rat_to_f64_dir, ratio, Dir};
use num_rational::BigRational;
use num_traits::{One, Signed};
use std::sync::LazyLock;

/// High word of pi (the nearest f64 below pi).
const PI_HI: f64 = std::f64::consts::PI;
/// Low word: nearest f64 to pi - PI_HI.
const PI_LO: f64 = 1.2246467991473532e-16;
/// |pi - (PI_HI + PI_LO)| is below this bound (checked in tests against
/// 40 decimal digits of pi).
const PI_TAIL: f64 = 3.1e-33;

/// Beyond this magnitude we give up and return [-1, 1]; the proofs never
/// evaluate sine at arguments past ~700.
const ARG_MAX: f64 = 1.0e6;

/// Overestimate of all double-double rounding in one kernel evaluation
/// (~30 operations on values below 3, each within 2^-104 relative).
const DD_SLOP: f64 = 1e-28;

/// sin(r) = r * S(r^2), S alternating with 13 terms; remainder <= |r|^27/27!.
static SIN_COEFFS: LazyLock<Vec<DD>> = LazyLock::new(|| {
    (0..=12)
        .map(|k| {
            let c = ratio(if k % 2 == 0 { 1 } else { -1 }, 1) / factorial(2 * k + 1);
            rat_to_dd(&c)
        })
        .collect()
});

/// cos(r) = C(r^2), 14 terms; remainder <= |r|^28/28!.
static COS_COEFFS: LazyLock<Vec<DD>> = LazyLock::new(|| {
    (0..=13)
        .map(|k| {
            let c = ratio(if k % 2 == 0 { 1 } else { -1 }, 1) / factorial(2 * k);
            rat_to_dd(&c)
        })
        .collect()
});

static SIN_REM_FACT: LazyLock<f64> =
    LazyLock::new(|| rat_to_f64_dir(&(BigRational::one() / factorial(27)), Dir::Ceil));
static COS_REM_FACT: LazyLock<f64> =
    LazyLock::new(|| rat_to_f64_dir(&(BigRational::one() / factorial(28)), Dir::Ceil));

fn rat_to_dd(r: &BigRational) -> DD {
    let hi = rat_to_f64_dir(r, Dir::Floor);
    let rest = r - crate::rational::f64_to_rational(hi);
    let lo = if rest.is_negative() {
        rat_to_f64_dir(&rest, Dir::Ceil)
    } else {
        rat_to_f64_dir(&rest, Dir::Floor)
    };
    DD::new(hi, lo)
}

/// Argument reduction `a = k*pi + r`. Returns the reduced double-double
/// residue and an absolute bound on the neglected pi tail.
fn reduce_pi(a: f64) -> Option<(i64, DD, f64)> {
    if a.abs() > ARG_MAX {
        return None;
    }
    let kf = (a / PI_HI).round();
    // Reduction error: the pi tail |pi - PI_HI - PI_LO| scaled by k, plus the
    // double-double subtraction slop, which grows with the magnitude of `a`
    // (the low-order sums round at scale ulp(ulp(a))).
    let slop = |k: f64| k.abs() * PI_TAIL + a.abs() * 2.5e-31 + DD_SLOP;
    let (p1, e1) = two_prod(kf, PI_HI);
    let (p2, e2) = two_prod(kf, PI_LO);
    let r = DD::from_f64(a).sub(DD::new(p1, e1)).sub(DD::new(p2, e2));
    if r.hi.abs() > 1.5709 {
        // Rounding of kf put us just outside the half-period; one retry with
        // the neighbouring multiple always lands inside.
        let kf2 = kf + r.hi.signum();
        let (p1, e1) = two_prod(kf2, PI_HI);
        let (p2, e2) = two_prod(kf2, PI_LO);
        let r2 = DD::from_f64(a).sub(DD::new(p1, e1)).sub(DD::new(p2, e2));
        if r2.hi.abs() > 1.5709 {
            return None;
        }
        return Some((kf2 as i64, r2, slop(kf2)));
    }
    Some((kf as i64, r, slop(kf)))
}

fn horner_dd(coeffs: &[DD], u: DD) -> DD {
    let mut acc = DD::ZERO;
    for c in coeffs.iter().rev() {
        acc = acc.mul(u).add(*c);
    }
    acc
}

/// Upper bound on `x^n` for `x >= 0` using directed multiplication.
fn pow_up(x: f64, n: u32) -> f64 {
    let mut acc = 1.0f64;
    for _ in 0..n {
        acc = mul_up(acc, x);
    }
    acc
}

fn enclose_dd(v: DD, err: f64) -> Interval {
    let lo = add_down(v.hi, sub_down(v.lo, err));
    let hi = add_up(v.hi, add_up(v.lo, err));
    Interval::new(lo, hi)
}

fn clamp_unit(x: Interval) -> Interval {
    x.intersect(&Interval::new(-1.0, 1.0))
        .expect("sin/cos enclosure overlaps [-1,1]")
}

/// Rigorous enclosure of `sin(a)` for the exact real denoted by the f64 `a`.
pub fn sin_point(a: f64) -> Interval {
    assert!(a.is_finite());
    if a == 0.0 {
        return Interval::ZERO;
    }
    let Some((k, r, red_err)) = reduce_pi(a) else {
        return Interval::new(-1.0, 1.0);
    };
    let u = r.mul(r);
    let v = horner_dd(&SIN_COEFFS, u).mul(r);
    let rmax = r.abs_max() + red_err;
    let rem = mul_up(pow_up(rmax, 27), *SIN_REM_FACT);
    let err = rem + red_err + DD_SLOP;
    let enc = enclose_dd(v, err);
    clamp_unit(if k % 2 != 0 { enc.neg() } else { enc })
}

/// Rigorous enclosure of `cos(a)`.
pub fn cos_point(a: f64) -> Interval {
    assert!(a.is_finite());
    let Some((k, r, red_err)) = reduce_pi(a) else {
        return Interval::new(-1.0, 1.0);
    };
    let u = r.mul(r);
    let v = horner_dd(&COS_COEFFS, u);
    let rmax = r.abs_max() + red_err;
    let rem = mul_up(pow_up(rmax, 28), *COS_REM_FACT);
    let err = rem + red_err + DD_SLOP;
    let enc = enclose_dd(v, err);
    clamp_unit(if k % 2 != 0 { enc.neg() } else { enc })
}

/// Does the interval possibly contain `q * pi/2` for the given integer `q`?
fn may_contain_half_pi_multiple(x: &Interval, q: i64) -> bool {
    // q/2 is exactly representable (half-integers are), pi() is an interval.
    let c = pi().scale(q as f64 / 2.0);
    x.overlaps(&c)
}

fn extrema_range(x: &Interval) -> std::ops::RangeInclusive<i64> {
    let q_lo = (2.0 * x.lo() / PI_HI).floor() as i64 - 1;
    let q_hi = (2.0 * x.hi() / PI_HI).ceil() as i64 + 1;
    q_lo..=q_hi
}

/// Enclosure of `{sin t : t in x}`. Interior extrema are detected against the
/// pi enclosure, so monotone pieces stay within a few ulps of exact while any
/// piece that may touch `(2k+1) pi/2` snaps to the corresponding unit bound.
pub fn sin_enclosure(x: Interval) -> Interval {
    if x.width() >= 2.0 * PI_HI {
        return Interval::new(-1.0, 1.0);
    }
    let ea = sin_point(x.lo());
    let eb = sin_point(x.hi());
    let mut lo = ea.lo().min(eb.lo());
    let mut hi = ea.hi().max(eb.hi());
    for q in extrema_range(&x) {
        if q.rem_euclid(2) != 1 {
            continue;
        }
        if may_contain_half_pi_multiple(&x, q) {
            if q.rem_euclid(4) == 1 {
                hi = 1.0;
            } else {
                lo = -1.0;
            }
        }
    }
    clamp_unit(Interval::new(lo, hi))
}

/// Enclosure of `{cos t : t in x}`.
pub fn cos_enclosure(x: Interval) -> Interval {
    if x.width() >= 2.0 * PI_HI {
        return Interval::new(-1.0, 1.0);
    }
    let ea = cos_point(x.lo());
    let eb = cos_point(x.hi());
    let mut lo = ea.lo().min(eb.lo());
    let mut hi = ea.hi().max(eb.hi());
    for q in extrema_range(&x) {
        if q.rem_euclid(2) != 0 {
            continue;
        }
        if may_contain_half_pi_multiple(&x, q) {
            if q.rem_euclid(4) == 0 {
                hi = 1.0;
            } else {
                lo = -1.0;
            }
        }
    }
    clamp_unit(Interval::new(lo, hi))
}

/// Enclosure of `arccos(a)` for an exact rational `a in [-1, 1]`, obtained by
/// bisection against `cos_point`. For inputs bounded away from the endpoints
/// the result is narrower than `tol` (default use: 1e-12); the exact
/// endpoints are special-cased.
pub fn arccos_enclosure(a: &BigRational, tol: f64) -> Result<Interval, IntervalError> {
    let one = BigRational::one();
    if a.abs() > one {
        return Err(IntervalError::Domain(format!(
            "arccos argument {a} outside [-1,1]"
        )));
    }
    if *a == one {
        return Ok(Interval::ZERO);
    }
    if *a == -one.clone() {
        return Ok(pi());
    }
    let mut lo = 0.0f64;
    let mut hi = pi().hi();
    // cos is decreasing on [0, pi]: cos(lo) >= a >= cos(hi).
    for _ in 0..200 {
        if sub_up(hi, lo) <= tol {
            break;
        }
        let mut decided = false;
        for frac in [0.5, 0.625, 0.375] {
            let mid = lo + (hi - lo) * frac;
            if mid <= lo || mid >= hi {
                continue;
            }
            let c = cos_point(mid);
            if crate::rational::f64_to_rational(c.lo()) > *a {
                lo = mid; // cos(mid) certainly above a ⇒ root is right of mid
                decided = true;
                break;
            } else if crate::rational::f64_to_rational(c.hi()) < *a {
                hi = mid;
                decided = true;
                break;
            }
        }
        if !decided {
            break; // enclosure of cos straddles `a` at every probe: done refining
        }
    }
    Ok(Interval::new(lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{dec, f64_to_rational, ratio};

    fn assert_contains_dec(enc: Interval, value: &str) {
        let v = dec(value);
        assert!(
            enc.contains_rational(&v),
            "{enc:?} does not contain {value}"
        );
    }

    #[test]
    fn sin_point_matches_reference_values() {
        // Reference digits computed independently at 60-digit precision.
        assert_contains_dec(
            sin_point(0.5),
            "0.47942553860420300027328793521557138808180336794060067518862",
        );
        let x578 = Interval::from_rational(&dec("5.78"));
        // 5.78 is not an f64; use both endpoint evaluations around it.
        let enc = sin_point(x578.lo()).hull(&sin_point(x578.hi()));
        // sin(5.78 exact) = -0.48221847174493177894, nearby within 1e-15
        let v = dec("-0.4822184717449317789415983");
        let widened = Interval::new(enc.lo() - 1e-14, enc.hi() + 1e-14);
        assert!(widened.contains_rational(&v));
        assert!(sin_point(0.5).width() <= 4.0 * f64::EPSILON);
    }

    #[test]
    fn cos_point_matches_reference_values() {
        assert_contains_dec(
            cos_point(0.5),
            "0.87758256189037271611628158260382965199164519710974405299300",
        );
        assert!(cos_point(0.0) == Interval::ONE || cos_point(0.0).contains(1.0));
        assert!(cos_point(0.5).width() <= 4.0 * f64::EPSILON);
    }

    #[test]
    fn sin_against_std_library() {
        // Not a soundness oracle, just a cross-check: libm sine is faithful
        // to ~1 ulp, so it must land inside a slightly widened enclosure.
        let mut x = -20.0f64;
        while x < 20.0 {
            let enc = sin_point(x);
            let s = x.sin();
            assert!(
                enc.lo() - 4.0 * f64::EPSILON <= s && s <= enc.hi() + 4.0 * f64::EPSILON,
                "std sin {s} vs {enc:?} at {x}"
            );
            x += 0.137;
        }
    }

    #[test]
    fn sin_quarter_period_monotone() {
        // [0, pi/2 lower bound]: enclosure of [0, 1]
        let x = Interval::new(0.0, pi().lo() / 2.0);
        let enc = sin_enclosure(x);
        assert!(enc.lo() <= 0.0 && enc.lo() > -1e-15);
        assert!(enc.hi() >= 0.999999 && enc.hi() <= 1.0);
    }

    #[test]
    fn sin_pi_sixth_contains_half() {
        let sixth = pi().div(&Interval::point(6.0)).unwrap();
        let enc = sin_enclosure(sixth);
        assert!(enc.contains_rational(&ratio(1, 2)));
        assert!(enc.width() < 1e-14);
    }

    #[test]
    fn sin_full_period_hits_both_extrema() {
        let enc = sin_enclosure(Interval::new(0.0, 6.3));
        assert_eq!(enc, Interval::new(-1.0, 1.0));
    }

    #[test]
    fn cos_half_period() {
        let enc = cos_enclosure(Interval::new(0.0, pi().lo()));
        assert!(enc.lo() <= -0.999999999 && enc.hi() >= 0.999999999);
    }

    #[test]
    fn monotone_width_growth_is_tiny() {
        // width(sin(x)) <= width(x) + 4 ulp on a monotone piece
        for (a, b) in [(0.2, 0.9), (-1.2, -0.4), (3.5, 4.0), (0.1, 0.1000001)] {
            let x = Interval::new(a, b);
            let enc = sin_enclosure(x);
            assert!(
                enc.width() <= x.width() + 4.0 * f64::EPSILON,
                "{x:?} -> {enc:?}: {} vs {}",
                enc.width(),
                x.width()
            );
        }
    }

    #[test]
    fn arccos_reference_points() {
        use num_traits::One;
        let one = num_rational::BigRational::one();
        assert_eq!(arccos_enclosure(&one, 1e-12).unwrap(), Interval::ZERO);

        let zero = ratio(0, 1);
        let enc = arccos_enclosure(&zero, 1e-12).unwrap();
        assert!(enc.width() <= 1e-12);
        // pi/2 = 1.5707963267948966192313216916397514...
        assert_contains_dec(enc, "1.570796326794896619231321691639751442");

        let a = ratio(362880, 482800);
        let enc = arccos_enclosure(&a, 1e-12).unwrap();
        assert!(enc.width() <= 1e-12);
        assert_contains_dec(enc, "0.720288332581698918859325");
        // paper: x1 ≈ 0.7203 (±1e-4)
        assert!((enc.lo() - 0.7203).abs() < 1e-4);

        let err = arccos_enclosure(&ratio(3, 2), 1e-12);
        assert!(err.is_err());
    }

    #[test]
    fn cos_of_arccos_round_trip() {
        let a = ratio(362880, 482800);
        let x = arccos_enclosure(&a, 1e-12).unwrap();
        let c = cos_point(x.lo()).hull(&cos_point(x.hi()));
        assert!(c.contains_rational(&a));
    }

    #[test]
    fn pi_tail_constant_is_correct() {
        // PI_HI + PI_LO must agree with pi to within PI_TAIL.
        let pi_lo_digits = dec("3.141592653589793238462643383279502884197");
        let pi_hi_digits = dec("3.141592653589793238462643383279502884198");
        let two_word = f64_to_rational(PI_HI) + f64_to_rational(PI_LO);
        let tail = f64_to_rational(PI_TAIL);
        assert!(&two_word - &tail < pi_lo_digits);
        assert!(pi_hi_digits < &two_word + &tail);
    }
}
