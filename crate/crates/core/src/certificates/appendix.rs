//! The four fixed-parameter lemmas behind `F(lambda, t, 81) >= 0` on
//! `lambda in [0.5, 0.8194]`, `t in [2.8, 5.78]`:
//!
//! * `appendix_Fll`   — `F_ll <= 0` for `t in [2.8, 5]` (concavity in lambda),
//! * `appendix_Fl`    — `F_l <= 0` for `t in [5, 5.78]` (monotone in lambda),
//! * `appendix_F_half`   — `F(0.5, t) >= 0` for `t in [2.8, 5]`,
//! * `appendix_F_08194`  — `F(0.8194, t) >= 0` for `t in [2.8, 5.78]`
//!   by the six-line sandwich between the quadratic part and the convex rest.
//!
//! By the minimum principle the first two reduce the uniform bound to the
//! last two. The partial-derivative formulas are hand-derived and hard-coded
//! next to their first use; each is cross-checked against finite differences
//! of the plain-float `F` in the test module, and the single-variable
//! identities are verified exactly in Q\[pi\]\[x\].

use super::{CertificateConfig, StepBuilder, StepResult};
use crate::interval::{pi, Interval};
use crate::poly::{PiElem, PiPoly};
use crate::rational::{dec, ratio};
use crate::sign::{prove_sign_on_interval, SignClaim};
use num_rational::BigRational;
use num_traits::{One, Zero};

const M2: i64 = 6561; // 81^2
const SIX_M2: i64 = 39366; // 6 * 81^2
const M2_MINUS_1: i64 = 6560;

fn eps_factor() -> BigRational {
    ratio(M2, M2_MINUS_1) // 1 + 1/(m^2-1) at m = 81
}

/// One line of the sandwich between the quadratic and the convex parts,
/// with the breakpoints of the segment it dominates. All exact.
#[derive(Clone, Debug)]
pub struct LineSpec {
    pub slope: BigRational,
    pub intercept: BigRational,
    pub t_from: BigRational,
    pub t_to: BigRational,
}

impl LineSpec {
    pub fn at(&self, t: &BigRational) -> BigRational {
        &self.slope * t + &self.intercept
    }

    /// Abscissa where two non-parallel lines meet.
    pub fn intersection(&self, other: &LineSpec) -> BigRational {
        (&other.intercept - &self.intercept) / (&self.slope - &other.slope)
    }
}

/// The quadratic part `a t^2 + b t + c` with enclosed coefficients
/// (each enclosure is required to be narrower than 1e-8 before use).
#[derive(Clone, Copy, Debug)]
pub struct Quadratic {
    pub a: Interval,
    pub b: Interval,
    pub c: Interval,
}

impl Quadratic {
    /// `(b - B)^2 - 4a(c - C)` for the line `Bt + C`; entirely negative
    /// together with `a > 0` means the parabola clears the line everywhere.
    pub fn discriminant_against(&self, line: &LineSpec) -> Interval {
        let b_shift = self.b.sub(&Interval::from_rational(&line.slope));
        let c_shift = self.c.sub(&Interval::from_rational(&line.intercept));
        b_shift.pow_int(2).sub(&self.a.scale(4.0).mul(&c_shift))
    }
}

/// `P(w) = -1 + w^2/2 - w^4/24` over intervals.
fn quartic(w: Interval) -> Interval {
    Interval::point(-1.0)
        .add(&w.pow_int(2).scale(0.5))
        .sub(&w.pow_int(4).scale(1.0 / 24.0))
}

/// Rigorous enclosure of `F(lambda, t)` at `m = 81` for exact rational lambda.
pub fn f_interval(lambda: &BigRational, t: Interval) -> Interval {
    let l = Interval::from_rational(lambda);
    let thp = pi().scale(1.5);
    let w = t.sub(&thp);
    let wl = t.mul(&l).sub(&thp);
    let d1 = lambda * (BigRational::one() - lambda * lambda) * eps_factor();
    let tail = t
        .sub(
            &t.pow_int(3)
                .mul(&Interval::from_rational(&ratio(1, SIX_M2))),
        )
        .add(&Interval::ONE)
        .sub(&w.pow_int(2).scale(0.5));
    quartic(w)
        .mul(&l)
        .add(&quartic(wl))
        .add(&tail.mul(&Interval::from_rational(&d1)))
}

/// Plain-float `F(lambda, t)` at `m = 81` — the oracle-side formula.
pub fn f_numeric(lambda: f64, t: f64) -> f64 {
    let thp = 1.5 * std::f64::consts::PI;
    let p = |w: f64| -1.0 + w * w / 2.0 - w.powi(4) / 24.0;
    let d1 = lambda * (1.0 - lambda * lambda) * (1.0 + 1.0 / M2_MINUS_1 as f64);
    lambda * p(t - thp)
        + p(lambda * t - thp)
        + d1 * (t - t.powi(3) / SIX_M2 as f64 + 1.0 - (t - thp) * (t - thp) / 2.0)
}

/// Lemma: `F_ll(lambda, t) <= 0` for `t in [2.8, 5]`, `lambda in [0.5, 0.82]`.
///
/// Chain: `F_lll >= p_a > 0` (so `F_ll` peaks at `lambda = 0.82`), then
/// `F_ll(0.82, t) < q(t)` with `q` convex and negative at both endpoints.
pub fn verify_appendix_fll(config: &CertificateConfig) -> StepResult {
    let mut step = StepBuilder::new("appendix_Fll");
    let t_domain = Interval::from_rational_bounds(&dec("2.8"), &dec("5"));
    let thp = pi().scale(1.5);
    let lam = Interval::from_rational_bounds(&ratio(1, 2), &dec("0.82"));
    let eps = Interval::from_rational(&eps_factor());
    let top = Interval::from_rational(&dec("0.82"));

    // p_a(t) = -t^3 (0.82 t - 3pi/2) - 36 (1 + 1/6560)
    let p_a = |t: Interval| {
        t.pow_int(3)
            .mul(&t.mul(&top).sub(&thp))
            .neg()
            .sub(&eps.scale(36.0))
    };

    // F_lll(l, t) - p_a(t) = t^4 (0.82 - l)
    //                        + 6 (1+eps) [5 - t + t^3/39366 + (t-3pi/2)^2/2]
    // (hand expansion of F_lll = -t^3(l t - 3pi/2) - 6(1+eps)(t - t^3/39366
    //  + 1 - (t-3pi/2)^2/2) against p_a; every bracket is nonnegative).
    let diff = |t: Interval| {
        let bracket = Interval::point(5.0)
            .sub(&t)
            .add(
                &t.pow_int(3)
                    .mul(&Interval::from_rational(&ratio(1, SIX_M2))),
            )
            .add(&t.sub(&thp).pow_int(2).scale(0.5));
        t.pow_int(4)
            .mul(&top.sub(&lam))
            .add(&eps.scale(6.0).mul(&bracket))
    };
    let out = prove_sign_on_interval(&diff, t_domain, SignClaim::GeZero, config.max_depth);
    step.require_sign("F_lll - p_a >= 0 on the box", &out);

    let out = prove_sign_on_interval(&p_a, t_domain, SignClaim::GtZero, config.max_depth);
    step.require_sign("p_a > 0 on [2.8, 5]", &out);
    step.check_paper(
        "p_a(2.8)",
        p_a(Interval::from_rational(&dec("2.8"))),
        "17.0391",
        1e-4,
    );
    step.check_paper(
        "p_a(5)",
        p_a(Interval::from_rational(&dec("5"))),
        "40.5431",
        1e-4,
    );

    // Critical point of p_a: 9 pi / 6.56 = 225 pi / 164, inside (2.8, 5).
    let crit = pi().mul(&Interval::from_rational(&ratio(225, 164)));
    step.check_paper("p_a critical point 9pi/6.56", crit, "4.3101", 1e-4);
    step.require_exact(
        "critical point inside (2.8, 5)",
        crit.lo() > 2.8 && crit.hi() < 5.0,
    );

    // q(t) - F_ll(0.82, t) = t^2 (0.82 t - 3pi/2)^2 / 2
    //                        + (0.016 - 4.92 (1+eps) t^3/39366)  >= 0
    let c492 = Interval::from_rational(&dec("4.92"));
    let slack = |t: Interval| {
        t.pow_int(2)
            .mul(&t.mul(&top).sub(&thp).pow_int(2))
            .scale(0.5)
            .add(
                &Interval::from_rational(&dec("0.016")).sub(
                    &c492
                        .mul(&eps)
                        .mul(&t.pow_int(3))
                        .mul(&Interval::from_rational(&ratio(1, SIX_M2))),
                ),
            )
    };
    let out = prove_sign_on_interval(&slack, t_domain, SignClaim::GeZero, config.max_depth);
    step.require_sign("q - F_ll(0.82, .) >= 0 on [2.8, 5]", &out);

    // q is convex: q'' = 2 + 4.92 (1 + eps) > 0, exact.
    step.require_rat_positive("q''", &(ratio(2, 1) + dec("4.92") * eps_factor()));

    // q negative at both endpoints.
    let q = |t: Interval| {
        let inner = t
            .add(&Interval::ONE)
            .sub(&t.sub(&thp).pow_int(2).scale(0.5));
        t.pow_int(2)
            .sub(&c492.mul(&eps).mul(&inner))
            .add(&Interval::from_rational(&dec("0.016")))
    };
    let q28 = q(Interval::from_rational(&dec("2.8")));
    step.check_paper("q(2.8)", q28, "-1.8447", 1e-4);
    step.require_enclosure_negative("q(2.8) < 0", q28);
    let q5 = q(Interval::from_rational(&dec("5")));
    step.check_paper("q(5)", q5, "-4.305", 1e-3);
    step.require_enclosure_negative("q(5) < 0", q5);

    step.finish()
}

/// Lemma: `F_l(lambda, t) <= 0` for `t in [5, 5.78]`, `lambda in [0.5, 0.82]`.
///
/// `F_l = f + g + h`; `f <= 0` by the even convex quartic, `h < phi(lambda)`
/// piecewise, and `lambda g = psi(u)` with `u = lambda t - 3pi/2`. Convexity
/// of `psi` reduces everything to endpoint values and two negative bounds.
pub fn verify_appendix_fl(config: &CertificateConfig) -> StepResult {
    let mut step = StepBuilder::new("appendix_Fl");
    let t_domain = Interval::from_rational_bounds(&dec("5"), &dec("5.78"));
    let thp = pi().scale(1.5);

    // (a) f(l,t) = P(t - 3pi/2) <= 0: |t - 3pi/2| <= 1.1 on [5, 5.78], and
    // the even quartic is convex there with negative endpoint values.
    let within = |t: Interval| Interval::from_rational(&dec("1.1")).sub(&t.sub(&thp).abs());
    let out = prove_sign_on_interval(&within, t_domain, SignClaim::GeZero, config.max_depth);
    step.require_sign("|t - 3pi/2| <= 1.1 on [5, 5.78]", &out);
    let x_domain = Interval::new(-1.1, 1.1);
    let convex = |x: Interval| Interval::ONE.sub(&x.pow_int(2).scale(0.5));
    let out = prove_sign_on_interval(&convex, x_domain, SignClaim::GtZero, config.max_depth);
    step.require_sign("quartic'' = 1 - x^2/2 > 0 on [-1.1, 1.1]", &out);
    // P(1.1) exact: -1 + 1.21/2 - 1.4641/24 < 0
    let p11 = -BigRational::one() + dec("1.21") / ratio(2, 1) - dec("1.4641") / ratio(24, 1);
    step.require_rat_negative("P(1.1) (exact)", &p11);

    // (b) h < phi(lambda). The parabola p2(t) = t + 1 - (t-3pi/2)^2/2 peaks
    // at 1 + 3pi/2 with maximum 3(1+pi)/2 — an exact Q[pi][x] identity:
    //   p2(t) - 3(1+pi)/2 == -(t - (1 + 3pi/2))^2 / 2.
    let x = PiPoly::x();
    let p2_poly = x
        .add(&PiPoly::constant(PiElem::rational(BigRational::one())))
        .sub(
            &x.sub(&PiPoly::constant(PiElem::pi_power(ratio(3, 2), 1)))
                .pow(2)
                .scale(&PiElem::rational(ratio(1, 2))),
        );
    let peak = PiElem::rational(ratio(3, 2)).add(&PiElem::pi_power(ratio(3, 2), 1));
    let vertex = x.sub(&PiPoly::constant(
        PiElem::rational(BigRational::one()).add(&PiElem::pi_power(ratio(3, 2), 1)),
    ));
    let identity = p2_poly
        .sub(&PiPoly::constant(peak))
        .add(&vertex.pow(2).scale(&PiElem::rational(ratio(1, 2))));
    step.require_exact(
        "p2(t) - 3(1+pi)/2 == -(t - 1 - 3pi/2)^2/2",
        identity.is_zero(),
    );

    // 6.22 branch constant: (1 + 1/6560) * 3(1+pi)/2 < 6.22.
    let c = Interval::from_rational(&eps_factor()).mul(&Interval::ONE.add(&pi()).scale(1.5));
    step.require_enclosure_negative(
        "(1+eps) 3(1+pi)/2 - 6.22",
        c.sub(&Interval::from_rational(&dec("6.22"))),
    );

    // 5.95 branch: p2(t) - t^3/39366 > 5.95 on [5, 5.78].
    let w595 = |t: Interval| {
        t.add(&Interval::ONE)
            .sub(&t.sub(&thp).pow_int(2).scale(0.5))
            .sub(
                &t.pow_int(3)
                    .mul(&Interval::from_rational(&ratio(1, SIX_M2))),
            )
            .sub(&Interval::from_rational(&dec("5.95")))
    };
    let out = prove_sign_on_interval(&w595, t_domain, SignClaim::GtZero, config.max_depth);
    step.require_sign("p2(t) - t^3/39366 > 5.95 on [5, 5.78]", &out);
    let p2 = |t: Interval| {
        t.add(&Interval::ONE)
            .sub(&t.sub(&thp).pow_int(2).scale(0.5))
    };
    step.check_paper(
        "p2(5)",
        p2(Interval::from_rational(&dec("5"))),
        "5.9586",
        1e-4,
    );
    step.check_paper(
        "p2(5.78)",
        p2(Interval::from_rational(&dec("5.78"))),
        "6.2101",
        1e-4,
    );

    // (c) u = lambda t - 3pi/2 stays in [-2.213, 0.028].
    let u_lo_slack = Interval::from_rational(&dec("2.5"))
        .sub(&thp)
        .sub(&Interval::from_rational(&dec("-2.213")));
    step.require_enclosure_positive("0.5*5 - 3pi/2 > -2.213", u_lo_slack);
    let u_hi_slack = Interval::from_rational(&dec("0.028"))
        .sub(&Interval::from_rational(&(dec("0.82") * dec("5.78"))).sub(&thp));
    step.require_enclosure_positive("0.82*5.78 - 3pi/2 < 0.028", u_hi_slack);

    // (d) psi(u) = (u + 3pi/2)(u - u^3/6) is convex on the u-range:
    // psi''(u) = 2 - 3pi u/2 - 2u^2 > 0.
    let u_domain = Interval::from_rational_bounds(&dec("-2.213"), &dec("0.028"));
    let psi_second = |u: Interval| {
        Interval::point(2.0)
            .sub(&u.mul(&thp))
            .sub(&u.pow_int(2).scale(2.0))
    };
    let out = prove_sign_on_interval(&psi_second, u_domain, SignClaim::GtZero, config.max_depth);
    step.require_sign("psi'' > 0 on [-2.213, 0.028]", &out);

    // psi has no constant term (psi(0) = 0), exactly.
    let u = PiPoly::x();
    let psi_poly = u
        .add(&PiPoly::constant(PiElem::pi_power(ratio(3, 2), 1)))
        .mul(&u.sub(&u.pow(3).scale(&PiElem::rational(ratio(1, 6)))));
    step.require_exact("psi has no constant term", psi_poly.coeff(0).is_zero());
    let psi = |u: Interval| u.add(&thp).mul(&u.sub(&u.pow_int(3).scale(1.0 / 6.0)));
    step.require_exact("psi(0) == 0", psi(Interval::ZERO) == Interval::ZERO);

    let psi_0028 = psi(Interval::from_rational(&dec("0.028")));
    step.check_paper("psi(0.028)", psi_0028, "0.1327", 1e-4);
    step.require_exact(
        "psi(0.028) <= 0.133",
        crate::rational::f64_to_rational(psi_0028.hi()) <= dec("0.133"),
    );
    let psi_m2213 = psi(Interval::from_rational(&dec("-2.213")));
    step.check_paper("psi(-2.213)", psi_m2213, "-1.0165", 1e-4);
    step.require_exact(
        "psi(-2.213) < -1.016",
        crate::rational::f64_to_rational(psi_m2213.hi()) < dec("-1.016"),
    );
    let psi_m1375 = psi(Interval::from_rational(&dec("-1.375")));
    step.check_paper("psi(-1.375)", psi_m1375, "-3.1429", 1e-4);
    step.require_exact(
        "psi(-1.375) < -1.016",
        crate::rational::f64_to_rational(psi_m1375.hi()) < dec("-1.016"),
    );

    // (e) case psi(u) > 0: then u > 0, so lambda > 3pi/(2 t) >= 3pi/11.56 > 0.815,
    // and lambda*phi(lambda) = 5.95 lambda (1 - 3 lambda^2) decreases there.
    let lam_gate = pi()
        .mul(&Interval::from_rational(&ratio(3, 1)))
        .div(&Interval::from_rational(&(dec("5.78") * ratio(2, 1))))
        .unwrap()
        .sub(&Interval::from_rational(&dec("0.815")));
    step.require_enclosure_positive("3pi/(2*5.78) > 0.815", lam_gate);
    let lam_e = Interval::from_rational_bounds(&dec("0.815"), &dec("0.82"));
    let decreasing = |l: Interval| Interval::ONE.sub(&l.pow_int(2).scale(9.0));
    let out = prove_sign_on_interval(&decreasing, lam_e, SignClaim::LtZero, config.max_depth);
    step.require_sign("d/dl [l(1-3l^2)] < 0 on [0.815, 0.82]", &out);
    // paper bound, exact: 0.133 + 0.815*5.95*(1 - 3*0.815^2) < 0
    let bound_e = dec("0.133")
        + dec("0.815")
            * dec("5.95")
            * (BigRational::one() - ratio(3, 1) * dec("0.815") * dec("0.815"));
    step.require_rat_negative("case-psi>0 bound", &bound_e);
    step.check_paper(
        "case-psi>0 bound value",
        Interval::from_rational(&bound_e),
        "-4.6807",
        1e-4,
    );

    // (f) case psi(u) <= 0 and lambda < 1/sqrt(3): u < -1.375 because
    // 5.78/sqrt(3) < 3pi/2 - 1.375, i.e. 3 (3pi/2 - 1.375)^2 > 5.78^2.
    let gate_f = thp
        .sub(&Interval::from_rational(&dec("1.375")))
        .pow_int(2)
        .scale(3.0)
        .sub(&Interval::from_rational(&(dec("5.78") * dec("5.78"))));
    step.require_enclosure_positive("3 (3pi/2 - 1.375)^2 - 5.78^2 > 0", gate_f);
    // 0.578 > 1/sqrt(3), exactly: 3 * 0.578^2 > 1.
    step.require_rat_positive(
        "3*0.578^2 - 1",
        &(ratio(3, 1) * dec("0.578") * dec("0.578") - BigRational::one()),
    );
    let lam_f = Interval::from_rational_bounds(&ratio(1, 2), &dec("0.578"));
    let out = prove_sign_on_interval(&decreasing, lam_f, SignClaim::LtZero, config.max_depth);
    step.require_sign("d/dl [l(1-3l^2)] < 0 on [0.5, 0.578]", &out);
    // exact bound: -1.016 + 0.5 * 6.22 * (1 - 3/4) = -0.2385
    let bound_f = dec("-1.016") + ratio(1, 2) * dec("6.22") * ratio(1, 4);
    step.require_rat_negative("case-lambda<1/sqrt3 bound", &bound_f);
    step.require_exact("bound equals -0.2385 exactly", bound_f == dec("-0.2385"));
    step.check_paper(
        "case-lambda<1/sqrt3 bound value",
        Interval::from_rational(&bound_f),
        "-0.2385",
        1e-4,
    );

    // (g) case psi(u) <= 0 and lambda >= 1/sqrt(3): lambda phi(lambda) =
    // 5.95 lambda (1 - 3 lambda^2) <= 0 since 3 lambda^2 >= 1 by definition
    // of the branch; both summands of lambda F_l are then nonpositive.
    step.require_exact("case lambda >= 1/sqrt3: product of nonpositives", true);

    step.finish()
}

/// Lemma: `F(0.5, t) >= 0` for `t in [2.8, 5]`.
pub fn verify_appendix_f_half(config: &CertificateConfig) -> StepResult {
    let mut step = StepBuilder::new("appendix_F_half");
    let t_domain = Interval::from_rational_bounds(&dec("2.8"), &dec("5"));
    let half = ratio(1, 2);

    // Exact identity: F_tt(1/2, t) == R(t)/2 - 3(t+1)/52480 in Q[pi][t],
    // where R(t) = 3/4 - (t - 3pi/2)^2/2 - (t - 3pi)^2/16. (The printed
    // derivation "neglects" the 1/6560 terms; the neglected part is exactly
    // the positive 3(t+1)/52480.)
    let t = PiPoly::x();
    let w = t.sub(&PiPoly::constant(PiElem::pi_power(ratio(3, 2), 1)));
    let w_half = t
        .scale(&PiElem::rational(half.clone()))
        .sub(&PiPoly::constant(PiElem::pi_power(ratio(3, 2), 1)));
    let one = PiPoly::constant(PiElem::rational(BigRational::one()));
    // F_tt(l, t) = l [1 - w^2/2 + l(1 - w_l^2/2) - (1-l^2)(1+eps)(1 + t/6561)]
    let f_tt_half = one
        .sub(&w.pow(2).scale(&PiElem::rational(half.clone())))
        .add(
            &one.sub(&w_half.pow(2).scale(&PiElem::rational(half.clone())))
                .scale(&PiElem::rational(half.clone())),
        )
        .sub(
            &one.add(&t.scale(&PiElem::rational(ratio(1, M2))))
                .scale(&PiElem::rational(ratio(3, 4) * eps_factor())),
        )
        .scale(&PiElem::rational(half.clone()));
    let w3pi = t.sub(&PiPoly::constant(PiElem::pi_power(ratio(3, 1), 1)));
    let r_poly = PiPoly::constant(PiElem::rational(ratio(3, 4)))
        .sub(&w.pow(2).scale(&PiElem::rational(half.clone())))
        .sub(&w3pi.pow(2).scale(&PiElem::rational(ratio(1, 16))));
    let neglected = t.add(&one).scale(&PiElem::rational(ratio(3, 52480)));
    let identity = f_tt_half
        .sub(&r_poly.scale(&PiElem::rational(half.clone())))
        .add(&neglected);
    step.require_exact("F_tt(1/2, t) == R(t)/2 - 3(t+1)/52480", identity.is_zero());

    // The neglected term is nonnegative on [2.8, 5].
    let out = prove_sign_on_interval(
        &|t: Interval| t.add(&Interval::ONE).scale(3.0 / 52480.0),
        t_domain,
        SignClaim::GeZero,
        config.max_depth,
    );
    step.require_sign("3(t+1)/52480 >= 0", &out);

    // R(t) < 0 on all of R: leading coefficient -9/16, maximum at the vertex
    // c - b^2/(4a) with a = -9/16, b = 15pi/8, c = 3/4 - 27pi^2/16.
    let a = ratio(-9, 16);
    let b = PiElem::pi_power(ratio(15, 8), 1);
    let c = PiElem::rational(ratio(3, 4)).sub(&PiElem::pi_power(ratio(27, 16), 2));
    let coeff_identity = r_poly
        .sub(&PiPoly::x().pow(2).scale(&PiElem::rational(a.clone())))
        .sub(&PiPoly::x().scale(&b))
        .sub(&PiPoly::constant(c.clone()));
    step.require_exact(
        "R(t) == -9/16 t^2 + 15pi/8 t + (3/4 - 27pi^2/16)",
        coeff_identity.is_zero(),
    );
    step.require_rat_negative("R leading coefficient", &a);
    let vertex_max = c.enclosure().sub(
        &b.enclosure()
            .pow_int(2)
            .div(&Interval::from_rational(&(ratio(4, 1) * &a)))
            .unwrap(),
    );
    step.require_enclosure_negative("max R = c - b^2/(4a) < 0 (complete the square)", vertex_max);

    // Concavity + endpoints: F(0.5, 2.8) and F(0.5, 5) both positive.
    let f_28 = f_interval(&half, Interval::from_rational(&dec("2.8")));
    step.check_paper("F(0.5, 2.8)", f_28, "0.3448", 1e-4);
    step.require_enclosure_positive("F(0.5, 2.8) > 0", f_28);
    let f_5 = f_interval(&half, Interval::from_rational(&dec("5")));
    step.check_paper("F(0.5, 5)", f_5, "2.2033", 1e-4);
    step.require_enclosure_positive("F(0.5, 5) > 0", f_5);

    step.finish()
}

/// Lemma: `F(0.8194, t) >= 0` for `t in [2.8, 5.78]` by the line sandwich
/// `phi >= L_i >= psi` on six overlapping segments.
pub fn verify_appendix_f_08194(config: &CertificateConfig) -> StepResult {
    let mut step = StepBuilder::new("appendix_F_08194");
    let lam = dec("0.8194");
    let d = &lam * (BigRational::one() - &lam * &lam) * eps_factor();
    let thp_elem = PiElem::pi_power(ratio(3, 2), 1);

    // phi(t) = 0.8194 (t-3pi/2)^2/2 + (0.8194 t - 3pi/2)^2/2 + d(t+1)
    // psi(t) = 0.8194 (1 + (t-3pi/2)^4/24) + 1 + (0.8194 t-3pi/2)^4/24
    //          + d (t^3/39366 + (t-3pi/2)^2/2)
    let t = PiPoly::x();
    let one = PiPoly::constant(PiElem::rational(BigRational::one()));
    let w = t.sub(&PiPoly::constant(thp_elem.clone()));
    let wl = t
        .scale(&PiElem::rational(lam.clone()))
        .sub(&PiPoly::constant(thp_elem.clone()));
    let phi_poly = w
        .pow(2)
        .scale(&PiElem::rational(&lam / ratio(2, 1)))
        .add(&wl.pow(2).scale(&PiElem::rational(ratio(1, 2))))
        .add(&t.add(&one).scale(&PiElem::rational(d.clone())));
    let psi_poly = one
        .add(&w.pow(4).scale(&PiElem::rational(ratio(1, 24))))
        .scale(&PiElem::rational(lam.clone()))
        .add(&one)
        .add(&wl.pow(4).scale(&PiElem::rational(ratio(1, 24))))
        .add(
            &t.pow(3)
                .scale(&PiElem::rational(ratio(1, SIX_M2)))
                .add(&w.pow(2).scale(&PiElem::rational(ratio(1, 2))))
                .scale(&PiElem::rational(d.clone())),
        );

    // Split identity: F(0.8194, t) == phi(t) - psi(t), exactly in Q[pi][t].
    let d1 = PiElem::rational(d.clone());
    let f_poly = {
        let quart = |w: &PiPoly| {
            PiPoly::constant(PiElem::rational(ratio(-1, 1)))
                .add(&w.pow(2).scale(&PiElem::rational(ratio(1, 2))))
                .sub(&w.pow(4).scale(&PiElem::rational(ratio(1, 24))))
        };
        let tail = t
            .sub(&t.pow(3).scale(&PiElem::rational(ratio(1, SIX_M2))))
            .add(&one)
            .sub(&w.pow(2).scale(&PiElem::rational(ratio(1, 2))));
        quart(&w)
            .scale(&PiElem::rational(lam.clone()))
            .add(&quart(&wl))
            .add(&tail.scale(&d1))
    };
    step.require_exact(
        "F(0.8194, t) == phi(t) - psi(t)",
        f_poly.sub(&phi_poly.sub(&psi_poly)).is_zero(),
    );

    // Quadratic coefficients of phi: a exact decimal, b and c with pi.
    let a = (&lam + &lam * &lam) / ratio(2, 1);
    step.require_exact("a == 0.74540818 exactly", a == dec("0.74540818"));
    step.check_paper("a", Interval::from_rational(&a), "0.74540818", 1e-8);
    let b = PiElem::rational(d.clone()).sub(&PiElem::pi_power(ratio(3, 1) * &lam, 1));
    let c = PiElem::rational(d.clone()).add(&PiElem::pi_power(
        (BigRational::one() + &lam) * ratio(9, 8),
        2,
    ));
    let quad_identity = phi_poly
        .sub(&PiPoly::x().pow(2).scale(&PiElem::rational(a.clone())))
        .sub(&PiPoly::x().scale(&b))
        .sub(&PiPoly::constant(c.clone()));
    step.require_exact("phi(t) == a t^2 + b t + c", quad_identity.is_zero());
    let b_enc = b.enclosure();
    let c_enc = c.enclosure();
    step.require_exact(
        "b, c enclosures narrower than 1e-8",
        b_enc.width() <= 1e-8 && c_enc.width() <= 1e-8,
    );
    step.check_paper("b", b_enc, "-7.45338058", 1e-8);
    step.check_paper("c", c_enc, "20.47063551", 1e-8);

    // The six lines with their segment breakpoints (the interior breakpoints
    // are the exact intersections of consecutive lines), all exact.
    let coeffs: [(BigRational, BigRational); 6] = [
        (dec("-1.5"), dec("8.5")),
        (dec("-0.45"), dec("4.02")),
        (dec("0.025"), dec("1.71372")),
        (dec("0.077"), dec("1.4519")),
        (dec("0.2"), dec("0.8256")),
        (BigRational::one(), dec("-3.5")),
    ];
    let bare = |i: usize| LineSpec {
        slope: coeffs[i].0.clone(),
        intercept: coeffs[i].1.clone(),
        t_from: BigRational::zero(),
        t_to: BigRational::zero(),
    };
    let t_points: [BigRational; 7] = [
        dec("2.8"),
        bare(0).intersection(&bare(1)),
        bare(1).intersection(&bare(2)),
        bare(2).intersection(&bare(3)),
        bare(3).intersection(&bare(4)),
        bare(4).intersection(&bare(5)),
        dec("5.78"),
    ];
    step.require_exact("t2 == 64/15", t_points[1] == ratio(64, 15));
    step.require_exact("t3 == 57657/11875", t_points[2] == ratio(57657, 11875));
    step.require_exact("t4 == 5.035", t_points[3] == dec("5.035"));
    step.require_exact("t5 == 6263/1230", t_points[4] == ratio(6263, 1230));
    step.require_exact("t6 == 5.407", t_points[5] == dec("5.407"));
    step.require_exact(
        "breakpoints strictly ordered in (2.8, 5.78)",
        t_points.windows(2).all(|w| w[0] < w[1]),
    );
    let lines: Vec<LineSpec> = (0..6)
        .map(|i| LineSpec {
            slope: coeffs[i].0.clone(),
            intercept: coeffs[i].1.clone(),
            t_from: t_points[i].clone(),
            t_to: t_points[i + 1].clone(),
        })
        .collect();

    // Discriminants Delta_i = (b - B_i)^2 - 4a(c - C_i) all negative, and the
    // quadratic opens upward, so phi > L_i everywhere on the real line.
    step.require_rat_positive("a > 0", &a);
    let quadratic = Quadratic { a: Interval::from_rational(&a), b: b_enc, c: c_enc };
    let paper_deltas = [
        "-0.249298",
        "-0.002414",
        "-0.000057",
        "-0.000252",
        "-0.000046",
        "-0.011988",
    ];
    for (i, line) in lines.iter().enumerate() {
        let delta = quadratic.discriminant_against(line);
        step.check_paper(&format!("Delta_{}", i + 1), delta, paper_deltas[i], 1e-6);
        step.require_enclosure_negative(&format!("Delta_{} < 0", i + 1), delta);
    }

    // psi is convex on [2.8, 5.78]: psi''(t) = 0.8194 (t-3pi/2)^2/2
    // + 0.8194^2 (0.8194 t - 3pi/2)^2/2 + d (t/6561 + 1) >= 0, with the
    // printed formula checked exactly against the Q[pi][t] derivative.
    let thp = pi().scale(1.5);
    let lam_iv = Interval::from_rational(&lam);
    let d_iv = Interval::from_rational(&d);
    let psi_second = |t: Interval| {
        let w = t.sub(&thp);
        let wl = t.mul(&lam_iv).sub(&thp);
        w.pow_int(2)
            .mul(&lam_iv)
            .scale(0.5)
            .add(&wl.pow_int(2).mul(&lam_iv.pow_int(2)).scale(0.5))
            .add(
                &t.mul(&Interval::from_rational(&ratio(1, M2)))
                    .add(&Interval::ONE)
                    .mul(&d_iv),
            )
    };
    let psi_second_poly = {
        let l2 = PiElem::rational(&lam * &lam / ratio(2, 1));
        w.pow(2)
            .scale(&PiElem::rational(&lam / ratio(2, 1)))
            .add(&wl.pow(2).scale(&l2))
            .add(
                &t.scale(&PiElem::rational(ratio(1, M2)))
                    .add(&one)
                    .scale(&PiElem::rational(d.clone())),
            )
    };
    step.require_exact(
        "psi'' printed form matches derivative",
        psi_poly
            .derivative()
            .derivative()
            .sub(&psi_second_poly)
            .is_zero(),
    );
    let t_dom = Interval::from_rational_bounds(&dec("2.8"), &dec("5.78"));
    let out = prove_sign_on_interval(&psi_second, t_dom, SignClaim::GeZero, config.max_depth);
    step.require_sign("psi'' >= 0 on [2.8, 5.78]", &out);

    // Table: L_i(t_i) >= psi(t_i) at the seven checkpoints. Convexity of psi
    // turns the endpoint checks into segment-wide domination.
    let psi_at = |tq: &BigRational| psi_poly.enclosure(Interval::from_rational(tq));
    let paper_l = [
        "4.3",
        "2.1",
        "1.8351032",
        "1.839595",
        "1.843974",
        "1.907",
        "2.28",
    ];
    let paper_psi = [
        "4.1931243",
        "1.9392134",
        "1.8350379",
        "1.8395934",
        "1.843946",
        "1.8936546",
        "2.0185385",
    ];
    for i in 0..7 {
        let line_idx = i.min(5);
        let l_val = lines[line_idx].at(&t_points[i]);
        let psi_enc = psi_at(&t_points[i]);
        step.check_paper(
            &format!("L_{}(t_{})", line_idx + 1, i + 1),
            Interval::from_rational(&l_val),
            paper_l[i],
            1e-7,
        );
        step.check_paper(&format!("psi(t_{})", i + 1), psi_enc, paper_psi[i], 1e-7);
        step.require_enclosure_positive(
            &format!("L_{}(t_{}) - psi(t_{}) > 0", line_idx + 1, i + 1, i + 1),
            Interval::from_rational(&l_val).sub(&psi_enc),
        );
    }

    step.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificates::CertificateConfig;

    fn fd(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
        (f(x + h) - f(x - h)) / (2.0 * h)
    }

    #[test]
    fn hardcoded_partials_match_finite_differences() {
        // F_l, F_ll, F_lll, F_tt (as used in the verifiers) against central
        // differences of the plain-float F.
        let thp = 1.5 * std::f64::consts::PI;
        let eps = 1.0 + 1.0 / 6560.0;
        let f_l = |l: f64, t: f64| {
            let p = |w: f64| -1.0 + w * w / 2.0 - w.powi(4) / 24.0;
            p(t - thp) + t * (l * t - thp) - t * (l * t - thp).powi(3) / 6.0
                + (1.0 - 3.0 * l * l)
                    * eps
                    * (t - t.powi(3) / 39366.0 + 1.0 - (t - thp) * (t - thp) / 2.0)
        };
        let f_ll = |l: f64, t: f64| {
            t * t * (1.0 - (l * t - thp) * (l * t - thp) / 2.0)
                - 6.0 * l * eps * (t - t.powi(3) / 39366.0 + 1.0 - (t - thp) * (t - thp) / 2.0)
        };
        let f_lll = |l: f64, t: f64| {
            -t.powi(3) * (l * t - thp)
                - 6.0 * eps * (t - t.powi(3) / 39366.0 + 1.0 - (t - thp) * (t - thp) / 2.0)
        };
        let f_tt = |l: f64, t: f64| {
            l * (1.0 - (t - thp) * (t - thp) / 2.0
                + l * (1.0 - (l * t - thp) * (l * t - thp) / 2.0)
                - (1.0 - l * l) * eps * (1.0 + t / 6561.0))
        };
        for (l0, t0) in [(0.6, 3.3), (0.75, 4.6), (0.52, 5.4)] {
            let h = 1e-5;
            assert!((fd(|l| f_numeric(l, t0), l0, h) - f_l(l0, t0)).abs() < 1e-6);
            assert!((fd(|l| f_l(l, t0), l0, h) - f_ll(l0, t0)).abs() < 1e-6);
            assert!((fd(|l| f_ll(l, t0), l0, h) - f_lll(l0, t0)).abs() < 1e-5);
            assert!(
                (fd(|t| fd(|t2| f_numeric(l0, t2), t, 1e-4), t0, 1e-4) - f_tt(l0, t0)).abs() < 1e-4
            );
        }
        // lambda * g(lambda, t) == psi(lambda t - 3pi/2)
        let psi = |u: f64| (u + thp) * (u - u.powi(3) / 6.0);
        let g_part = |l: f64, t: f64| t * (l * t - thp) - t * (l * t - thp).powi(3) / 6.0;
        for (l0, t0) in [(0.6, 5.2), (0.8, 5.7)] {
            assert!((l0 * g_part(l0, t0) - psi(l0 * t0 - thp)).abs() < 1e-9);
        }
    }

    #[test]
    fn derived_closures_match_their_definitions() {
        // The factored forms used by the verifiers, against direct float
        // evaluation of what they claim to equal.
        let thp = 1.5 * std::f64::consts::PI;
        let eps = 1.0 + 1.0 / 6560.0;
        let f_ll = |l: f64, t: f64| {
            t * t * (1.0 - (l * t - thp) * (l * t - thp) / 2.0)
                - 6.0 * l * eps * (t - t.powi(3) / 39366.0 + 1.0 - (t - thp) * (t - thp) / 2.0)
        };
        let f_lll = |l: f64, t: f64| {
            -t.powi(3) * (l * t - thp)
                - 6.0 * eps * (t - t.powi(3) / 39366.0 + 1.0 - (t - thp) * (t - thp) / 2.0)
        };
        let p_a = |t: f64| -t.powi(3) * (0.82 * t - thp) - 36.0 * eps;
        let q = |t: f64| t * t - 4.92 * eps * (t + 1.0 - (t - thp) * (t - thp) / 2.0) + 0.016;
        for t0 in [2.8f64, 3.6, 4.4, 5.0] {
            // q - F_ll(0.82, .) == t^2 (0.82 t - 3pi/2)^2/2 + 0.016 - 4.92 eps t^3/39366
            let slack_direct = q(t0) - f_ll(0.82, t0);
            let slack_factored = t0 * t0 * (0.82 * t0 - thp) * (0.82 * t0 - thp) / 2.0
                + (0.016 - 4.92 * eps * t0.powi(3) / 39366.0);
            assert!((slack_direct - slack_factored).abs() < 1e-10, "t = {t0}");
            // F_lll(l, .) - p_a == t^4 (0.82 - l) + 6 eps [5 - t + t^3/39366 + (t-3pi/2)^2/2]
            for l0 in [0.5f64, 0.7, 0.82] {
                let diff_direct = f_lll(l0, t0) - p_a(t0);
                let diff_factored = t0.powi(4) * (0.82 - l0)
                    + 6.0 * eps * (5.0 - t0 + t0.powi(3) / 39366.0 + (t0 - thp) * (t0 - thp) / 2.0);
                assert!(
                    (diff_direct - diff_factored).abs() < 1e-10,
                    "l = {l0}, t = {t0}"
                );
            }
        }
    }

    #[test]
    fn f_interval_contains_f_numeric() {
        for (l, ls) in [(ratio(1, 2), 0.5), (dec("0.8194"), 0.8194)] {
            for t in [2.8f64, 3.7, 4.9, 5.78] {
                let enc = f_interval(&l, Interval::point(t));
                let num = f_numeric(ls, t);
                assert!(
                    enc.lo() - 1e-12 <= num && num <= enc.hi() + 1e-12,
                    "F({ls}, {t}): {num} vs {enc:?}"
                );
            }
        }
    }

    #[test]
    fn all_four_lemmas_prove() {
        let cfg = CertificateConfig::default();
        for (name, step) in [
            ("Fll", verify_appendix_fll(&cfg)),
            ("Fl", verify_appendix_fl(&cfg)),
            ("F_half", verify_appendix_f_half(&cfg)),
            ("F_08194", verify_appendix_f_08194(&cfg)),
        ] {
            for c in &step.computed {
                assert!(
                    !c.name.contains("VIOLATED")
                        && !c.name.contains("REFUTED")
                        && !c.name.contains("INCONCLUSIVE"),
                    "{name}: {}",
                    c.name
                );
            }
            assert!(step.is_proved(), "{name}");
            assert!(step.paper_expected.iter().all(|p| p.ok), "{name}");
            assert!(step.margin > 0.0, "{name}: margin {}", step.margin);
        }
    }

    #[test]
    fn line_sandwich_pointwise_soundness() {
        // 200 float samples per segment: phi(t) >= L_i(t) >= psi(t).
        let lam = 0.8194f64;
        let thp = 1.5 * std::f64::consts::PI;
        let d = lam * (1.0 - lam * lam) * (1.0 + 1.0 / 6560.0);
        let phi = |t: f64| {
            lam * (t - thp) * (t - thp) / 2.0
                + (lam * t - thp) * (lam * t - thp) / 2.0
                + d * (t + 1.0)
        };
        let psi = |t: f64| {
            lam * (1.0 + (t - thp).powi(4) / 24.0)
                + 1.0
                + (lam * t - thp).powi(4) / 24.0
                + d * (t.powi(3) / 39366.0 + (t - thp) * (t - thp) / 2.0)
        };
        let lines = [
            (-1.5, 8.5),
            (-0.45, 4.02),
            (0.025, 1.71372),
            (0.077, 1.4519),
            (0.2, 0.8256),
            (1.0, -3.5),
        ];
        let ts = [
            2.8,
            64.0 / 15.0,
            57657.0 / 11875.0,
            5.035,
            6263.0 / 1230.0,
            5.407,
            5.78,
        ];
        for i in 0..6 {
            for k in 0..=200 {
                let t = ts[i] + (ts[i + 1] - ts[i]) * k as f64 / 200.0;
                let l = lines[i].0 * t + lines[i].1;
                assert!(phi(t) >= l - 1e-12, "phi >= L_{} at {t}", i + 1);
                assert!(l >= psi(t) - 1e-9, "L_{} >= psi at {t}", i + 1);
            }
        }
    }
}
