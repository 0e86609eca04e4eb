//! Directed rounding built from error-free transformations.
//!
//! Instead of switching the hardware rounding mode, each basic operation is
//! performed in round-to-nearest and its exact error term is recovered
//! (two-sum for addition, FMA for multiplication and division residuals).
//! The result is nudged by one ulp only when the error term shows the rounded
//! value landed on the wrong side. Exact results stay exact.

/// Knuth two-sum: `a + b = s + e` exactly, `s = fl(a + b)`.
#[inline]
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// `a * b = p + e` exactly, `p = fl(a * b)` (FMA-based).
#[inline]
pub fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

#[inline]
pub fn add_down(a: f64, b: f64) -> f64 {
    let (s, e) = two_sum(a, b);
    if !s.is_finite() {
        return if s == f64::INFINITY { f64::MAX } else { s };
    }
    if e < 0.0 {
        s.next_down()
    } else {
        s
    }
}

#[inline]
pub fn add_up(a: f64, b: f64) -> f64 {
    let (s, e) = two_sum(a, b);
    if !s.is_finite() {
        return if s == f64::NEG_INFINITY { f64::MIN } else { s };
    }
    if e > 0.0 {
        s.next_up()
    } else {
        s
    }
}

#[inline]
pub fn sub_down(a: f64, b: f64) -> f64 {
    add_down(a, -b)
}

#[inline]
pub fn sub_up(a: f64, b: f64) -> f64 {
    add_up(a, -b)
}

#[inline]
pub fn mul_down(a: f64, b: f64) -> f64 {
    let (p, e) = two_prod(a, b);
    if !p.is_finite() || !e.is_finite() {
        return if p == f64::INFINITY {
            f64::MAX
        } else {
            f64::NEG_INFINITY
        };
    }
    if e < 0.0 {
        p.next_down()
    } else {
        p
    }
}

#[inline]
pub fn mul_up(a: f64, b: f64) -> f64 {
    let (p, e) = two_prod(a, b);
    if !p.is_finite() || !e.is_finite() {
        return if p == f64::NEG_INFINITY {
            f64::MIN
        } else {
            f64::INFINITY
        };
    }
    if e > 0.0 {
        p.next_up()
    } else {
        p
    }
}

/// Directed division; `b != 0`. The residual `r = fl(q*b - a)` is exact by
/// FMA, and `a/b - q = -r/b`, so the sign test below detects which side the
/// rounded quotient fell on.
#[inline]
pub fn div_down(a: f64, b: f64) -> f64 {
    let q = a / b;
    if !q.is_finite() {
        return if q == f64::INFINITY { f64::MAX } else { q };
    }
    let r = q.mul_add(b, -a);
    // true quotient < q  <=>  -r/b < 0  <=>  r, b same sign
    if r != 0.0 && (r > 0.0) == (b > 0.0) {
        q.next_down()
    } else {
        q
    }
}

#[inline]
pub fn div_up(a: f64, b: f64) -> f64 {
    let q = a / b;
    if !q.is_finite() {
        return if q == f64::NEG_INFINITY { f64::MIN } else { q };
    }
    let r = q.mul_add(b, -a);
    if r != 0.0 && (r > 0.0) != (b > 0.0) {
        q.next_up()
    } else {
        q
    }
}

/// Double-double value `hi + lo` with `|lo| <= ulp(hi)/2`.
///
/// Used only inside the sine/cosine kernels, where roughly 100 bits of working
/// precision keep the final enclosures within a couple of ulps.
#[derive(Clone, Copy, Debug)]
pub struct DD {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

impl DD {
    pub const ZERO: DD = DD { hi: 0.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> DD {
        DD { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn new(hi: f64, lo: f64) -> DD {
        let (h, l) = quick_two_sum(hi, lo);
        DD { hi: h, lo: l }
    }

    #[inline]
    pub fn add(self, o: DD) -> DD {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let (s, e2) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e2 + f);
        DD { hi, lo }
    }

    #[inline]
    pub fn sub(self, o: DD) -> DD {
        self.add(DD {
            hi: -o.hi,
            lo: -o.lo,
        })
    }

    #[inline]
    pub fn mul(self, o: DD) -> DD {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + (self.hi * o.lo + self.lo * o.hi);
        let (hi, lo) = quick_two_sum(p, e);
        DD { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, x: f64) -> DD {
        let (p, e) = two_prod(self.hi, x);
        let e = e + self.lo * x;
        let (hi, lo) = quick_two_sum(p, e);
        DD { hi, lo }
    }

    #[inline]
    pub fn abs_max(self) -> f64 {
        self.hi.abs() + self.lo.abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::f64_to_rational;
    use num_rational::BigRational;

    fn check_dir(op: &str, a: f64, b: f64, lo: f64, hi: f64, exact: BigRational) {
        assert!(
            f64_to_rational(lo) <= exact && exact <= f64_to_rational(hi),
            "{op}({a},{b}): [{lo},{hi}] !> exact"
        );
        assert!(hi == lo || hi <= lo.next_up().next_up(), "{op} too wide");
    }

    #[test]
    fn directed_ops_bracket_exact_results() {
        let cases = [
            (0.1, 0.2),
            (1.0, 3.0),
            (-2.5, 7.1),
            (1e-9, 1e9),
            (3.0, -7.0),
        ];
        for (a, b) in cases {
            let (ra, rb) = (f64_to_rational(a), f64_to_rational(b));
            check_dir("add", a, b, add_down(a, b), add_up(a, b), &ra + &rb);
            check_dir("sub", a, b, sub_down(a, b), sub_up(a, b), &ra - &rb);
            check_dir("mul", a, b, mul_down(a, b), mul_up(a, b), &ra * &rb);
            check_dir("div", a, b, div_down(a, b), div_up(a, b), &ra / &rb);
        }
    }

    #[test]
    fn exact_results_stay_exact() {
        assert_eq!(add_down(1.0, 3.0), 4.0);
        assert_eq!(add_up(1.0, 3.0), 4.0);
        assert_eq!(mul_down(2.0, 8.0), 16.0);
        assert_eq!(mul_up(2.0, 8.0), 16.0);
        assert_eq!(div_down(2.0, 2.0), 1.0);
        assert_eq!(div_up(2.0, 2.0), 1.0);
        assert_eq!(div_up(1.0, 4.0), 0.25);
    }

    #[test]
    fn one_third_is_one_ulp_wide() {
        let lo = div_down(1.0, 3.0);
        let hi = div_up(1.0, 3.0);
        assert!(hi == lo.next_up() || hi == lo);
        let third = BigRational::new(1.into(), 3.into());
        assert!(f64_to_rational(lo) <= third && third <= f64_to_rational(hi));
    }

    #[test]
    fn dd_roundtrip() {
        let x = DD::from_f64(0.1).add(DD::from_f64(0.2));
        // hi+lo is a much better 0.3 than 0.1+0.2 in f64
        let exact = f64_to_rational(0.1) + f64_to_rational(0.2);
        let got = f64_to_rational(x.hi) + f64_to_rational(x.lo);
        assert_eq!(got, exact);
    }
}
