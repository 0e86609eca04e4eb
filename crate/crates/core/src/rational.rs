//! Exact rational arithmetic helpers.
//!
//! Decimal literals from the problem statement (`5.78`, `0.8194`, `1.74e-6`, ...)
//! are decimal-exact and must never pass through binary floating point. They are
//! parsed here into `BigRational` and only converted to `f64` with a stated
//! rounding direction.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Parse a decimal literal (optionally signed, optional fraction, optional
/// `e`/`E` exponent) into the exact rational it denotes.
///
/// Panics on malformed input; literals are compile-time constants of the crate.
pub fn dec(s: &str) -> BigRational {
    let (mantissa, exp10) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i64>().expect("bad exponent")),
        None => (s, 0),
    };
    let (sign, digits) = match mantissa.strip_prefix('-') {
        Some(d) => (-1, d),
        None => (1, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.find('.') {
        Some(i) => (&digits[..i], &digits[i + 1..]),
        None => (digits, ""),
    };
    let all: String = format!("{int_part}{frac_part}");
    assert!(
        !all.is_empty() && all.bytes().all(|b| b.is_ascii_digit()),
        "bad decimal {s:?}"
    );
    let numer: BigInt = all.parse().unwrap();
    let scale = frac_part.len() as i64;
    let ten = BigInt::from(10);
    let mut r = BigRational::from(numer * BigInt::from(sign));
    let e = exp10 - scale;
    if e >= 0 {
        r *= BigRational::from(ten.pow(e as u32));
    } else {
        r /= BigRational::from(ten.pow((-e) as u32));
    }
    r
}

/// Shorthand for an integer ratio.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// n! as a rational.
pub fn factorial(n: u32) -> BigRational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    BigRational::from(acc)
}

/// The exact rational value of a finite `f64`.
pub fn f64_to_rational(x: f64) -> BigRational {
    assert!(x.is_finite(), "non-finite float has no rational value");
    BigRational::from_float(x).expect("finite float")
}

/// Rounding direction for rational-to-float conversion.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Dir {
    /// Largest `f64` that is `<= r`.
    Floor,
    /// Smallest `f64` that is `>= r`.
    Ceil,
}

/// Correctly-rounded directed conversion, via binary search on the IEEE-754
/// bit pattern (monotone for non-negative floats). Exact comparisons only;
/// no intermediate rounding can make the result cross the true value.
pub fn rat_to_f64_dir(r: &BigRational, dir: Dir) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    if r.is_negative() {
        let flipped = match dir {
            Dir::Floor => Dir::Ceil,
            Dir::Ceil => Dir::Floor,
        };
        return -rat_to_f64_dir(&-r.clone(), flipped);
    }
    // Positive r: find the largest finite x with x <= r (floor).
    let max_bits = f64::MAX.to_bits();
    if f64_to_rational(f64::MAX) <= *r {
        return match dir {
            Dir::Floor => f64::MAX,
            Dir::Ceil => f64::INFINITY,
        };
    }
    // Invariant: value(lo) <= r < value(hi), bit patterns of non-negative
    // floats are ordered. lo starts at 0.0 (bits 0).
    let (mut lo, mut hi) = (0u64, max_bits);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if f64_to_rational(f64::from_bits(mid)) <= *r {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let floor = f64::from_bits(lo);
    match dir {
        Dir::Floor => floor,
        Dir::Ceil => {
            if f64_to_rational(floor) == *r {
                floor
            } else {
                f64::from_bits(hi)
            }
        }
    }
}

/// Nearest-`f64` conversion (ties resolved toward the floor; the half-ulp
/// distinction never matters for our uses, both candidates are within 1 ulp).
pub fn rat_to_f64_near(r: &BigRational) -> f64 {
    let lo = rat_to_f64_dir(r, Dir::Floor);
    let hi = rat_to_f64_dir(r, Dir::Ceil);
    if lo == hi || !hi.is_finite() {
        return lo;
    }
    let dlo = (r - f64_to_rational(lo)).abs();
    let dhi = (f64_to_rational(hi) - r).abs();
    if dhi < dlo {
        hi
    } else {
        lo
    }
}

/// Format a rational as `numer/denom`.
pub fn rat_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Approximate value for display; falls back to directed conversion.
pub fn rat_approx(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| rat_to_f64_near(r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dec_parses_exactly() {
        assert_eq!(dec("5.78"), ratio(578, 100));
        assert_eq!(dec("0.8194"), ratio(8194, 10000));
        assert_eq!(dec("-1.74e-6"), ratio(-174, 100_000_000));
        assert_eq!(dec("2.8"), ratio(28, 10));
        assert_eq!(dec("1e3"), ratio(1000, 1));
        assert_eq!(dec("482800"), ratio(482800, 1));
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(9), ratio(362880, 1));
        assert_eq!(factorial(5), ratio(120, 1));
    }

    #[test]
    fn directed_conversion_brackets_the_value() {
        for r in [
            ratio(1, 3),
            ratio(-1, 3),
            dec("5.78"),
            ratio(362880, 482800),
            ratio(1, 10),
            ratio(123456789, 987654321),
        ] {
            let lo = rat_to_f64_dir(&r, Dir::Floor);
            let hi = rat_to_f64_dir(&r, Dir::Ceil);
            assert!(f64_to_rational(lo) <= r && r <= f64_to_rational(hi));
            assert!(hi == lo || hi == lo.next_up(), "tight: {lo} {hi}");
        }
    }

    #[test]
    fn exact_values_convert_exactly() {
        let half = ratio(1, 2);
        assert_eq!(rat_to_f64_dir(&half, Dir::Floor), 0.5);
        assert_eq!(rat_to_f64_dir(&half, Dir::Ceil), 0.5);
        let big = ratio(3 << 40, 1);
        assert_eq!(rat_to_f64_dir(&big, Dir::Floor), (3u64 << 40) as f64);
    }
}
