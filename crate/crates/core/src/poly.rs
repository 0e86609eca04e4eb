//! Exact rational polynomials and their interval evaluation.
//!
//! `PolyCoeffs` is the workhorse: coefficients are arbitrary-precision
//! rationals (constant term first), arithmetic is exact, and `horner_eval`
//! produces rigorous enclosures by converting each coefficient to a tight
//! interval before evaluation.
//!
//! `PiPoly` extends the coefficient ring to Q[pi] (treating pi as an
//! indeterminate) so that the shifted-polynomial identities of the proof can
//! be checked exactly, without any floating point.

use crate::interval::Interval;
use crate::rational::{rat_string, ratio};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A polynomial with exact rational coefficients, constant term first.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyCoeffs {
    coeffs: Vec<BigRational>,
}

impl std::fmt::Debug for PolyCoeffs {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({})x^{k}", rat_string(c)))
            .collect();
        write!(
            f,
            "{}",
            if terms.is_empty() {
                "0".into()
            } else {
                terms.join(" + ")
            }
        )
    }
}

impl PolyCoeffs {
    /// Build from coefficients (constant first); trailing zeros are stripped.
    pub fn new(mut coeffs: Vec<BigRational>) -> PolyCoeffs {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        PolyCoeffs { coeffs }
    }

    pub fn zero() -> PolyCoeffs {
        PolyCoeffs { coeffs: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `c * x^k`
    pub fn monomial(c: BigRational, k: usize) -> PolyCoeffs {
        let mut v = vec![BigRational::zero(); k + 1];
        v[k] = c;
        PolyCoeffs::new(v)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn add(&self, o: &PolyCoeffs) -> PolyCoeffs {
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyCoeffs::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &PolyCoeffs) -> PolyCoeffs {
        let n = self.coeffs.len().max(o.coeffs.len());
        PolyCoeffs::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }

    pub fn neg(&self) -> PolyCoeffs {
        PolyCoeffs::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, o: &PolyCoeffs) -> PolyCoeffs {
        if self.is_zero() || o.is_zero() {
            return PolyCoeffs::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyCoeffs::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> PolyCoeffs {
        PolyCoeffs::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `p(c * x^k)` — substitute a scaled monomial for the variable.
    pub fn compose_monomial(&self, c: &BigRational, k: usize) -> PolyCoeffs {
        assert!(k >= 1);
        let mut out = PolyCoeffs::zero();
        let mut cpow = BigRational::one();
        for (j, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                out = out.add(&PolyCoeffs::monomial(a * &cpow, j * k));
            }
            cpow *= c;
        }
        out
    }

    /// `p(c * x)`
    pub fn scale_arg(&self, c: &BigRational) -> PolyCoeffs {
        self.compose_monomial(c, 1)
    }

    pub fn derivative(&self) -> PolyCoeffs {
        if self.coeffs.len() <= 1 {
            return PolyCoeffs::zero();
        }
        PolyCoeffs::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigRational::from_integer((i as i64 + 1).into()))
                .collect(),
        )
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Pre-convert coefficients to tight interval enclosures.
    pub fn to_interval_poly(&self) -> IntervalPoly {
        IntervalPoly {
            coeffs: self.coeffs.iter().map(Interval::from_rational).collect(),
        }
    }
}

/// A polynomial whose coefficients are already interval enclosures.
#[derive(Clone, Debug)]
pub struct IntervalPoly {
    coeffs: Vec<Interval>,
}

impl IntervalPoly {
    pub fn new(coeffs: Vec<Interval>) -> IntervalPoly {
        IntervalPoly { coeffs }
    }

    /// Horner evaluation; encloses `{p(t) : t in x}`.
    pub fn eval(&self, x: Interval) -> Interval {
        let mut acc = Interval::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&x).add(c);
        }
        acc
    }
}

/// Enclosure of `{p(t) : t in x}` — converts coefficients then runs Horner.
pub fn horner_eval(p: &PolyCoeffs, x: Interval) -> Interval {
    p.to_interval_poly().eval(x)
}

/// An element of Q[pi]: `c0 + c1*pi + c2*pi^2 + ...`.
#[derive(Clone, PartialEq, Eq)]
pub struct PiElem {
    coeffs: Vec<BigRational>,
}

impl std::fmt::Debug for PiElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({})pi^{k}", rat_string(c)))
            .collect();
        write!(
            f,
            "{}",
            if terms.is_empty() {
                "0".into()
            } else {
                terms.join(" + ")
            }
        )
    }
}

impl PiElem {
    pub fn zero() -> PiElem {
        PiElem { coeffs: vec![] }
    }

    pub fn rational(c: BigRational) -> PiElem {
        PiElem::new(vec![c])
    }

    /// `c * pi^k`
    pub fn pi_power(c: BigRational, k: usize) -> PiElem {
        let mut v = vec![BigRational::zero(); k + 1];
        v[k] = c;
        PiElem::new(v)
    }

    fn new(mut coeffs: Vec<BigRational>) -> PiElem {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        PiElem { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, o: &PiElem) -> PiElem {
        let n = self.coeffs.len().max(o.coeffs.len());
        PiElem::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &PiElem) -> PiElem {
        let n = self.coeffs.len().max(o.coeffs.len());
        PiElem::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }

    pub fn mul(&self, o: &PiElem) -> PiElem {
        if self.is_zero() || o.is_zero() {
            return PiElem::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PiElem::new(out)
    }

    /// Interval enclosure using the pi enclosure.
    pub fn enclosure(&self) -> Interval {
        let pi = crate::interval::pi();
        let mut acc = Interval::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&pi).add(&Interval::from_rational(c));
        }
        acc
    }
}

/// A polynomial in one variable over Q[pi].
#[derive(Clone, PartialEq, Eq)]
pub struct PiPoly {
    coeffs: Vec<PiElem>,
}

impl std::fmt::Debug for PiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("[{c:?}]x^{k}"))
            .collect();
        write!(
            f,
            "{}",
            if terms.is_empty() {
                "0".into()
            } else {
                terms.join(" + ")
            }
        )
    }
}

impl PiPoly {
    fn new(mut coeffs: Vec<PiElem>) -> PiPoly {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        PiPoly { coeffs }
    }

    pub fn zero() -> PiPoly {
        PiPoly { coeffs: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn constant(c: PiElem) -> PiPoly {
        PiPoly::new(vec![c])
    }

    /// The variable `x`.
    pub fn x() -> PiPoly {
        PiPoly::new(vec![PiElem::zero(), PiElem::rational(BigRational::one())])
    }

    pub fn from_poly(p: &PolyCoeffs) -> PiPoly {
        PiPoly::new(
            p.coeffs()
                .iter()
                .map(|c| PiElem::rational(c.clone()))
                .collect(),
        )
    }

    pub fn coeff(&self, k: usize) -> PiElem {
        self.coeffs.get(k).cloned().unwrap_or_else(PiElem::zero)
    }

    pub fn add(&self, o: &PiPoly) -> PiPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        PiPoly::new((0..n).map(|k| self.coeff(k).add(&o.coeff(k))).collect())
    }

    pub fn sub(&self, o: &PiPoly) -> PiPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        PiPoly::new((0..n).map(|k| self.coeff(k).sub(&o.coeff(k))).collect())
    }

    pub fn mul(&self, o: &PiPoly) -> PiPoly {
        if self.is_zero() || o.is_zero() {
            return PiPoly::zero();
        }
        let mut out = vec![PiElem::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        PiPoly::new(out)
    }

    pub fn scale(&self, c: &PiElem) -> PiPoly {
        PiPoly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, k: u32) -> PiPoly {
        let mut acc = PiPoly::constant(PiElem::rational(BigRational::one()));
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> PiPoly {
        if self.coeffs.len() <= 1 {
            return PiPoly::zero();
        }
        PiPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.mul(&PiElem::rational(ratio(i as i64 + 1, 1))))
                .collect(),
        )
    }

    /// Interval enclosure of the polynomial over `x`, with pi enclosed.
    pub fn enclosure(&self, x: Interval) -> Interval {
        let mut acc = Interval::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&x).add(&c.enclosure());
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{dec, ratio};
    use num_traits::Signed;

    #[test]
    fn identity_polynomial() {
        let p = PolyCoeffs::new(vec![ratio(0, 1), ratio(1, 1)]);
        let x = Interval::new(2.0, 3.0);
        assert_eq!(horner_eval(&p, x), x);
    }

    #[test]
    fn one_minus_half_square_at_zero() {
        let p = PolyCoeffs::new(vec![ratio(1, 1), ratio(0, 1), ratio(-1, 2)]);
        let enc = horner_eval(&p, Interval::ZERO);
        assert!(enc.contains(1.0));
        assert_eq!(enc, Interval::ONE);
    }

    #[test]
    fn cubic_p_at_578_squared() {
        // p(y) = 1/3! - y/5! + y^2/7! - y^3/9!, evaluated at 5.78^2;
        // reference value 6.9607e-3 within 1e-6.
        let p = PolyCoeffs::new(vec![
            ratio(1, 6),
            ratio(-1, 120),
            ratio(1, 5040),
            ratio(-1, 362880),
        ]);
        let y = dec("5.78") * dec("5.78");
        let enc = horner_eval(&p, Interval::from_rational(&y));
        assert!(enc.contains_rational(&p.eval_rat(&y)));
        let target = dec("0.0069607");
        let lo = crate::rational::f64_to_rational(enc.lo());
        let hi = crate::rational::f64_to_rational(enc.hi());
        assert!((&lo - &target).abs() < dec("1e-6") && (&hi - &target).abs() < dec("1e-6"));
    }

    #[test]
    fn exact_eval_matches_interval_eval() {
        let p = PolyCoeffs::new(vec![ratio(3, 7), ratio(-2, 3), ratio(5, 11), ratio(-1, 13)]);
        for x in [ratio(1, 3), ratio(-7, 5), dec("5.78")] {
            let exact = p.eval_rat(&x);
            let enc = horner_eval(&p, Interval::from_rational(&x));
            assert!(enc.contains_rational(&exact));
        }
    }

    #[test]
    fn derivative_and_compose() {
        // d/dy (1/6 - y/120 + y^2/5040 - y^3/362880)
        let p = PolyCoeffs::new(vec![
            ratio(1, 6),
            ratio(-1, 120),
            ratio(1, 5040),
            ratio(-1, 362880),
        ]);
        // paper prints p'(y) = -(1/7!)(y^2/24 - 2y + 42)
        let paper =
            PolyCoeffs::new(vec![ratio(42, 1), ratio(-2, 1), ratio(1, 24)]).scale(&ratio(-1, 5040));
        assert_eq!(p.derivative(), paper);

        // compose_monomial: p(m^2 x^2) degree check
        let m2 = ratio(81 * 81, 1);
        let q = p.compose_monomial(&m2, 2);
        assert_eq!(q.degree(), Some(6));
        assert_eq!(q.eval_rat(&ratio(1, 7)), p.eval_rat(&(m2 * ratio(1, 49))));
    }

    #[test]
    fn pi_poly_exact_identity() {
        // (x - 3/2 pi)^2 expanded == x^2 - 3 pi x + 9/4 pi^2
        let shift = PiPoly::x().sub(&PiPoly::constant(PiElem::pi_power(ratio(3, 2), 1)));
        let sq = shift.pow(2);
        let expect = PiPoly::x()
            .pow(2)
            .sub(&PiPoly::x().scale(&PiElem::pi_power(ratio(3, 1), 1)))
            .add(&PiPoly::constant(PiElem::pi_power(ratio(9, 4), 2)));
        assert_eq!(sq, expect);
        assert!(sq.sub(&expect).is_zero());
    }
}
