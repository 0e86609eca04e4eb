//! Closed intervals with outward-rounded `f64` endpoints.
//!
//! Every operation returns an interval that contains the exact real result of
//! applying the operation to any points of the inputs. Endpoints are finite;
//! division by a zero-containing interval is an error rather than an
//! unbounded result.

pub mod round;
pub mod trig;

use crate::rational::{f64_to_rational, rat_to_f64_dir, Dir};
use num_rational::BigRational;
use round::{add_down, add_up, div_down, div_up, mul_down, mul_up, sub_down, sub_up};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IntervalError {
    #[error("divisor interval contains zero")]
    DivisorContainsZero,
    #[error("domain error: {0}")]
    Domain(String),
}

/// A closed interval `[lo, hi]`, `lo <= hi`, both finite, neither NaN.
#[derive(Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl std::fmt::Debug for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{:e}, {:e}]", self.lo, self.hi)
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{:.17e}, {:.17e}]", self.lo, self.hi)
    }
}

impl Interval {
    pub const ZERO: Interval = Interval { lo: 0.0, hi: 0.0 };
    pub const ONE: Interval = Interval { lo: 1.0, hi: 1.0 };

    /// `[lo, hi]`; panics on NaN, non-finite or inverted endpoints.
    pub fn new(lo: f64, hi: f64) -> Interval {
        assert!(lo.is_finite() && hi.is_finite(), "endpoints must be finite");
        assert!(lo <= hi, "inverted interval [{lo}, {hi}]");
        Interval { lo, hi }
    }

    pub fn point(x: f64) -> Interval {
        Interval::new(x, x)
    }

    /// Tight enclosure of an exact rational.
    pub fn from_rational(r: &BigRational) -> Interval {
        Interval::new(rat_to_f64_dir(r, Dir::Floor), rat_to_f64_dir(r, Dir::Ceil))
    }

    /// Enclosure of the rational interval `[a, b]`.
    pub fn from_rational_bounds(a: &BigRational, b: &BigRational) -> Interval {
        assert!(a <= b);
        Interval::new(rat_to_f64_dir(a, Dir::Floor), rat_to_f64_dir(b, Dir::Ceil))
    }

    #[inline]
    pub fn lo(&self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        sub_up(self.hi, self.lo)
    }

    pub fn midpoint(&self) -> f64 {
        let m = 0.5 * (self.lo + self.hi);
        if m.is_finite() && self.lo <= m && m <= self.hi {
            m
        } else {
            self.lo + 0.5 * (self.hi - self.lo)
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_rational(&self, r: &BigRational) -> bool {
        f64_to_rational(self.lo) <= *r && *r <= f64_to_rational(self.hi)
    }

    pub fn contains_zero(&self) -> bool {
        self.lo <= 0.0 && 0.0 <= self.hi
    }

    pub fn is_subset_of(&self, o: &Interval) -> bool {
        o.lo <= self.lo && self.hi <= o.hi
    }

    pub fn overlaps(&self, o: &Interval) -> bool {
        self.lo <= o.hi && o.lo <= self.hi
    }

    pub fn hull(&self, o: &Interval) -> Interval {
        Interval::new(self.lo.min(o.lo), self.hi.max(o.hi))
    }

    pub fn intersect(&self, o: &Interval) -> Option<Interval> {
        let lo = self.lo.max(o.lo);
        let hi = self.hi.min(o.hi);
        if lo <= hi {
            Some(Interval { lo, hi })
        } else {
            None
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval::new(add_down(self.lo, o.lo), add_up(self.hi, o.hi))
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        Interval::new(sub_down(self.lo, o.hi), sub_up(self.hi, o.lo))
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let candidates_lo = [
            mul_down(self.lo, o.lo),
            mul_down(self.lo, o.hi),
            mul_down(self.hi, o.lo),
            mul_down(self.hi, o.hi),
        ];
        let candidates_hi = [
            mul_up(self.lo, o.lo),
            mul_up(self.lo, o.hi),
            mul_up(self.hi, o.lo),
            mul_up(self.hi, o.hi),
        ];
        Interval::new(
            candidates_lo.into_iter().fold(f64::INFINITY, f64::min),
            candidates_hi.into_iter().fold(f64::NEG_INFINITY, f64::max),
        )
    }

    pub fn div(&self, o: &Interval) -> Result<Interval, IntervalError> {
        if o.contains_zero() {
            return Err(IntervalError::DivisorContainsZero);
        }
        let candidates_lo = [
            div_down(self.lo, o.lo),
            div_down(self.lo, o.hi),
            div_down(self.hi, o.lo),
            div_down(self.hi, o.hi),
        ];
        let candidates_hi = [
            div_up(self.lo, o.lo),
            div_up(self.lo, o.hi),
            div_up(self.hi, o.lo),
            div_up(self.hi, o.hi),
        ];
        Ok(Interval::new(
            candidates_lo.into_iter().fold(f64::INFINITY, f64::min),
            candidates_hi.into_iter().fold(f64::NEG_INFINITY, f64::max),
        ))
    }

    /// Multiplication by an exact `f64` scalar.
    pub fn scale(&self, c: f64) -> Interval {
        self.mul(&Interval::point(c))
    }

    pub fn abs(&self) -> Interval {
        if self.lo >= 0.0 {
            *self
        } else if self.hi <= 0.0 {
            self.neg()
        } else {
            Interval::new(0.0, self.hi.max(-self.lo))
        }
    }

    /// `self^k` with the even-power sharpening (`x^2 >= 0` even when `0 ∈ x`).
    pub fn pow_int(&self, k: u32) -> Interval {
        match k {
            0 => Interval::ONE,
            1 => *self,
            _ => {
                if k % 2 == 0 {
                    let a = self.abs();
                    let mut acc = a;
                    for _ in 1..k {
                        acc = acc.mul(&a);
                    }
                    acc
                } else {
                    let mut acc = *self;
                    for _ in 1..k {
                        acc = acc.mul(self);
                    }
                    acc
                }
            }
        }
    }

    /// Lower half `[lo, mid]` and upper half `[mid, hi]`.
    pub fn bisect(&self) -> (Interval, Interval) {
        let m = self.midpoint();
        (Interval::new(self.lo, m), Interval::new(m, self.hi))
    }
}

/// Enclosure of pi, one ulp wide. `f64::consts::PI` is the nearest double
/// below pi; the sandwich against 30 decimal digits is checked in tests.
pub fn pi() -> Interval {
    Interval::new(std::f64::consts::PI, std::f64::consts::PI.next_up())
}

/// Enclosure of 2*pi.
pub fn two_pi() -> Interval {
    pi().scale(2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{dec, ratio};

    #[test]
    fn exact_integer_endpoints() {
        let a = Interval::new(1.0, 2.0);
        let b = Interval::new(3.0, 4.0);
        assert_eq!(a.add(&b), Interval::new(4.0, 6.0));
        assert_eq!(Interval::ZERO.add(&a), a);
        assert_eq!(Interval::new(-1.0, 2.0).mul(&b), Interval::new(-4.0, 8.0));
    }

    #[test]
    fn point_one_plus_point_two_contains_three_tenths() {
        let s = Interval::point(0.1).add(&Interval::point(0.2));
        assert!(s.contains_rational(&ratio(3, 10)));
        assert!(s.lo() < s.hi(), "0.1+0.2 is inexact, enclosure must widen");
        assert!(s.width() <= 4.0 * f64::EPSILON);
    }

    #[test]
    fn division_identity_and_tightness() {
        let one = Interval::point(2.0).div(&Interval::point(2.0)).unwrap();
        assert!(one.contains(1.0));
        assert_eq!(one, Interval::ONE);

        let third = Interval::point(1.0).div(&Interval::point(3.0)).unwrap();
        assert!(third.contains_rational(&ratio(1, 3)));
        assert!(third.width() <= 2.0 * (1.0f64 / 3.0).next_up().next_up() * f64::EPSILON);
    }

    #[test]
    fn division_by_zero_interval_errors() {
        let e = Interval::ONE.div(&Interval::new(-1.0, 1.0));
        assert_eq!(e.unwrap_err(), IntervalError::DivisorContainsZero);
    }

    #[test]
    fn pi_enclosure_brackets_pi() {
        // 3.141592653589793238462643383279502884 < pi < ...885
        let lo = dec("3.141592653589793238462643383279502884");
        let hi = dec("3.141592653589793238462643383279502885");
        let p = pi();
        assert!(f64_to_rational(p.lo()) < lo);
        assert!(hi < f64_to_rational(p.hi()));
        assert!(p.width() <= 4.0 * f64::EPSILON);
    }

    #[test]
    fn from_rational_tight() {
        let r = dec("5.78");
        let iv = Interval::from_rational(&r);
        assert!(iv.contains_rational(&r));
        assert!(iv.hi() == iv.lo() || iv.hi() == iv.lo().next_up());
    }

    #[test]
    fn pow_int_even_sharpening() {
        let x = Interval::new(-2.0, 1.0);
        let sq = x.pow_int(2);
        assert_eq!(sq, Interval::new(0.0, 4.0));
        let cube = x.pow_int(3);
        assert!(cube.contains(-8.0) && cube.contains(1.0));
    }
}
