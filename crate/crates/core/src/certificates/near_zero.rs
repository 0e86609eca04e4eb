//! Neighborhood of 0: `g(x) >= g(0)` on `[0, 5.78/m]`.
//!
//! The degree-9 sine sandwich reduces the claim to two polynomial
//! inequalities. Both reductions are checked as exact polynomial identities
//! in Q\[x\] before their right-hand sides are proved:
//!
//!   denominator:  m s1(x) - s2(mx)  ==  m^3 x^3 (p - q)(m^2 x^2)
//!   quotient:     n s1(mx) - m s2(nx) - g(0) (m s1(x) - s2(mx))
//!                                   ==  m^3 n (m^2-n^2) x^5 (phi + psi)(m^2 x^2)
//!
//! `p - q > 0` follows from both being decreasing (their derivatives are
//! negative-definite quadratics) and an exact endpoint comparison;
//! `phi + psi >= 0` follows from the interval bound `phi >= -1.74e-6`, the
//! exact linear bound `psi' < 0`, and positivity of the quartic `V`, which
//! equals `(1 - nu)(psi(5.78^2) - 1.74e-6)` identically.

use super::{sandwich_set, CertificateConfig, StepBuilder, StepResult};
use crate::interval::trig::arccos_enclosure;
use crate::interval::{two_pi, Interval};
use crate::model::{s3_lower, s3_upper, sine_bound_gap, PairMN};
use crate::poly::{horner_eval, PolyCoeffs};
use crate::rational::{dec, factorial, ratio};
use crate::sign::{prove_sign_on_interval, SignClaim};
use num_rational::BigRational;
use num_traits::{One, Zero};

fn big(m: u32, e: u32) -> BigRational {
    BigRational::from(num_bigint::BigInt::from(m).pow(e))
}

/// `p(y) = 1/3! - y/5! + y^2/7! - y^3/9!`
fn poly_p() -> PolyCoeffs {
    PolyCoeffs::new(vec![
        BigRational::one() / factorial(3),
        -BigRational::one() / factorial(5),
        BigRational::one() / factorial(7),
        -BigRational::one() / factorial(9),
    ])
}

/// `q(y) = 1/(3! m^2) - y/(5! m^4) + y^2/(7! m^6) - y^3/(482800 m^8)`
fn poly_q(m: u32) -> PolyCoeffs {
    PolyCoeffs::new(vec![
        BigRational::one() / (factorial(3) * big(m, 2)),
        -BigRational::one() / (factorial(5) * big(m, 4)),
        BigRational::one() / (factorial(7) * big(m, 6)),
        -BigRational::one() / (dec("482800") * big(m, 8)),
    ])
}

/// `phi(y)` — the m-dependent group of the quotient-bound rewrite.
fn poly_phi(m: u32) -> PolyCoeffs {
    let m2 = big(m, 2);
    let c2 = (BigRational::one() / (dec("482800") * big(m, 6)) - BigRational::one() / factorial(9))
        / (&m2 - BigRational::one());
    let c1 = (&m2 + BigRational::one()) / (factorial(7) * big(m, 4));
    let c0 = -BigRational::one() / (factorial(5) * &m2);
    PolyCoeffs::new(vec![c0, c1, c2])
}

/// `psi(y)` — the lambda-dependent group.
fn poly_psi(lambda: &BigRational) -> PolyCoeffs {
    let l2 = lambda * lambda;
    let l4 = &l2 * &l2;
    let l8 = &l4 * &l4;
    let c2 = (BigRational::one() / dec("482800") - (&l8 - &l2 + BigRational::one()) / factorial(9))
        / (BigRational::one() - &l2);
    let c1 = -&l2 * (BigRational::one() + &l2) / factorial(7);
    let c0 = &l2 / factorial(5);
    PolyCoeffs::new(vec![c0, c1, c2])
}

/// Printed derivative `psi'(y) = (2/(9!(1-l^2))) [(a-1+l^2-l^8) y - 36 l^2 (1-l^4)]`.
fn poly_psi_prime_printed(lambda: &BigRational) -> PolyCoeffs {
    let a = factorial(9) / dec("482800");
    let l2 = lambda * lambda;
    let l4 = &l2 * &l2;
    let l8 = &l4 * &l4;
    let scale = ratio(2, 1) / (factorial(9) * (BigRational::one() - &l2));
    PolyCoeffs::new(vec![
        -ratio(36, 1) * &l2 * (BigRational::one() - &l4),
        a - BigRational::one() + &l2 - &l8,
    ])
    .scale(&scale)
}

/// `V(nu)` — the endpoint quartic of the psi bound.
pub(crate) fn poly_v() -> PolyCoeffs {
    let a = factorial(9) / dec("482800");
    let t2 = dec("5.78") * dec("5.78");
    let t4 = &t2 * &t2;
    let eps = dec("1.74e-6");
    // (a-1+nu-nu^4) t4/9! - nu(1-nu^2) t2/7! + nu(1-nu)/5! - eps(1-nu)
    let term1 = PolyCoeffs::new(vec![
        a - BigRational::one(),
        BigRational::one(),
        BigRational::zero(),
        BigRational::zero(),
        -BigRational::one(),
    ])
    .scale(&(&t4 / factorial(9)));
    let term2 = PolyCoeffs::new(vec![
        BigRational::zero(),
        BigRational::one(),
        BigRational::zero(),
        -BigRational::one(),
    ])
    .scale(&(-&t2 / factorial(7)));
    let term3 = PolyCoeffs::new(vec![
        BigRational::zero(),
        BigRational::one(),
        -BigRational::one(),
    ])
    .scale(&(BigRational::one() / factorial(5)));
    let term4 = PolyCoeffs::new(vec![BigRational::one(), -BigRational::one()]).scale(&-eps);
    term1.add(&term2).add(&term3).add(&term4)
}

pub fn verify_near_zero(pair: &PairMN, config: &CertificateConfig) -> StepResult {
    let mut step = StepBuilder::new("near_zero");
    let (m, n) = (pair.m(), pair.n());
    let (mr, nr) = (ratio(m as i64, 1), ratio(n as i64, 1));
    let lambda = pair.lambda();
    let nu = pair.nu();
    let y_max = dec("5.78") * dec("5.78");
    let y_domain = Interval::from_rational_bounds(&BigRational::zero(), &y_max);

    // The sandwich itself: both degree-9 certifications (cached).
    let sandwiches = sandwich_set(config);
    step.require_sign("sin x >= s1(x) on [0, 5.78]", &sandwiches.s3_lower);
    step.require_sign("sin x <= s2(x) on [0, 5.78]", &sandwiches.s3_upper);
    let gap = sine_bound_gap(&s3_lower(), Interval::from_rational(&dec("5.78")));
    step.check_paper("phi(5.78) = sin(5.78) - s1(5.78)", gap, "0.0104", 1e-3);

    // Condition (6): exact reduction identity, then p - q > 0 on [0, 5.78^2].
    let s1 = s3_lower().poly;
    let s2 = s3_upper().poly;
    let lhs6 = s1.scale(&mr).sub(&s2.scale_arg(&mr));
    let p = poly_p();
    let q = poly_q(m);
    let rhs6 = p
        .sub(&q)
        .compose_monomial(&big(m, 2), 2)
        .mul(&PolyCoeffs::monomial(big(m, 3), 3));
    step.require_exact(
        "denominator rewrite: m s1(x) - s2(mx) == m^3 x^3 (p-q)(m^2 x^2)",
        lhs6 == rhs6,
    );

    // p decreases: p' is the printed negative-definite quadratic.
    let p_prime_printed = PolyCoeffs::new(vec![ratio(42, 1), ratio(-2, 1), ratio(1, 24)])
        .scale(&(-BigRational::one() / factorial(7)));
    step.require_exact("p' matches printed form", p.derivative() == p_prime_printed);
    // inner quadratic discriminant 4 - 4*42/24 = -3 < 0, exact
    step.require_rat_negative("p' inner discriminant", &(ratio(4, 1) - ratio(4 * 42, 24)));
    let out = prove_sign_on_interval(
        &|y| horner_eval(&p_prime_printed, y),
        y_domain,
        SignClaim::LtZero,
        config.max_depth,
    );
    step.require_sign("p' < 0 on [0, 5.78^2]", &out);

    // q decreases likewise (printed form with the m-dependent quadratic).
    let q_prime_printed = PolyCoeffs::new(vec![
        ratio(42, 1) * big(m, 2),
        ratio(-2, 1),
        ratio(3, 1) * factorial(7) / (dec("482800") * big(m, 2)),
    ])
    .scale(&(-BigRational::one() / (factorial(7) * big(m, 6))));
    step.require_exact("q' matches printed form", q.derivative() == q_prime_printed);
    let out = prove_sign_on_interval(
        &|y| horner_eval(&q_prime_printed, y),
        y_domain,
        SignClaim::LtZero,
        config.max_depth,
    );
    step.require_sign("q' < 0 on [0, 5.78^2]", &out);

    // Monotone + endpoint comparison: p(y) - q(y) >= p(5.78^2) - q(0) > 0.
    let p_at_end = p.eval_rat(&y_max);
    step.check_paper(
        "p(5.78^2)",
        Interval::from_rational(&p_at_end),
        "0.0069607",
        1e-6,
    );
    let margin6 = &p_at_end - q.eval_rat(&BigRational::zero());
    step.require_rat_positive("p(5.78^2) - q(0)", &margin6);

    // Condition (7): exact reduction identity with constant m^3 n (m^2 - n^2).
    let g0 = pair.g_at_zero();
    let phi = poly_phi(m);
    let psi = poly_psi(&lambda);
    let lhs7 = s1
        .scale_arg(&mr)
        .scale(&nr)
        .sub(&s2.scale_arg(&nr).scale(&mr))
        .sub(&s1.scale(&mr).sub(&s2.scale_arg(&mr)).scale(&g0));
    let c7 = big(m, 3) * &nr * (&mr * &mr - &nr * &nr);
    let rhs7 = phi
        .add(&psi)
        .compose_monomial(&big(m, 2), 2)
        .mul(&PolyCoeffs::monomial(c7, 5));
    step.require_exact(
        "quotient rewrite: numerator - g(0)*denominator == C x^5 (phi+psi)(m^2 x^2)",
        lhs7 == rhs7,
    );

    // phi(y) >= -1.74e-6 on [0, 5.78^2] by interval proof.
    let eps = dec("1.74e-6");
    let phi_shifted = phi.add(&PolyCoeffs::new(vec![eps.clone()]));
    let out = prove_sign_on_interval(
        &|y| horner_eval(&phi_shifted, y),
        y_domain,
        SignClaim::GeZero,
        config.max_depth,
    );
    step.require_sign("phi(y) + 1.74e-6 >= 0 on [0, 5.78^2]", &out);

    // psi' < 0 on [0, 5.78^2]: psi' is linear, so two exact endpoint signs.
    let psi_prime = psi.derivative();
    step.require_exact(
        "psi' matches printed form",
        psi_prime == poly_psi_prime_printed(&lambda),
    );
    step.require_exact("psi' is linear", psi_prime.degree() <= Some(1));
    step.require_rat_negative("psi'(0)", &psi_prime.eval_rat(&BigRational::zero()));
    step.require_rat_negative("psi'(5.78^2)", &psi_prime.eval_rat(&y_max));

    // Replay of the u(nu) argument behind psi'(5.78^2) < 0:
    // u(nu) = (a-1) 5.78^2 + 36 nu^3 - 5.78^2 nu^4 has u' = nu^2 (108 - 4*5.78^2 nu),
    // so its global maximum is at nu* = 27/5.78^2; all checks exact.
    let a = factorial(9) / dec("482800");
    let u_poly = PolyCoeffs::new(vec![
        (&a - BigRational::one()) * &y_max,
        BigRational::zero(),
        BigRational::zero(),
        ratio(36, 1),
        -y_max.clone(),
    ]);
    let nu_star = ratio(27, 1) / &y_max;
    step.require_exact(
        "u' factors as nu^2 (108 - 4*5.78^2 nu)",
        u_poly.derivative()
            == PolyCoeffs::new(vec![
                BigRational::zero(),
                BigRational::zero(),
                ratio(108, 1),
                ratio(-4, 1) * &y_max,
            ]),
    );
    step.require_rat_negative("u leading coefficient", &-&y_max);
    step.require_rat_negative("u(0)", &u_poly.eval_rat(&BigRational::zero()));
    step.require_rat_negative("u(nu*) (global max)", &u_poly.eval_rat(&nu_star));
    step.require_rat_negative("5.78^2 - 36", &(&y_max - ratio(36, 1)));

    // V(nu) > 0: concavity by exact negative leading coefficient and negative
    // discriminant of V'', positivity at both range endpoints and at the
    // pair's own nu. V == (1-nu)(psi(5.78^2) - 1.74e-6) is checked exactly.
    let v = poly_v();
    let psi_at_end = psi.eval_rat(&y_max);
    let v_identity = (BigRational::one() - &nu) * (&psi_at_end - &eps);
    step.require_exact(
        "V(nu_pair) == (1-nu)(psi(5.78^2) - 1.74e-6)",
        v.eval_rat(&nu) == v_identity,
    );

    let v2 = v.derivative().derivative();
    let printed_v2 = PolyCoeffs::new(vec![
        -ratio(2, 1) / factorial(5),
        ratio(6, 1) * &y_max / factorial(7),
        -ratio(12, 1) * &y_max * &y_max / factorial(9),
    ]);
    step.require_exact("V'' matches printed form", v2 == printed_v2);
    let (va, vb, vc) = (v2.coeff(2), v2.coeff(1), v2.coeff(0));
    step.require_rat_negative("V'' leading coefficient", &va);
    step.require_rat_negative("V'' discriminant", &(&vb * &vb - ratio(4, 1) * &va * &vc));

    let v_at = |x: &BigRational| v.eval_rat(x);
    step.require_rat_positive("V(nu_pair)", &v_at(&nu));
    let v_quarter = v_at(&ratio(1, 4));
    let v_top = v_at(&(dec("0.82") * dec("0.82")));
    step.check_paper(
        "V(0.25)",
        Interval::from_rational(&v_quarter),
        "5.5947e-7",
        1e-10,
    );
    step.check_paper(
        "V(0.82^2)",
        Interval::from_rational(&v_top),
        "6.857e-5",
        1e-8,
    );
    step.require_rat_positive("V(0.25)", &v_quarter);
    step.require_rat_positive("V(0.82^2)", &v_top);

    // psi(5.78^2) - 1.74e-6 = V(nu)/(1-nu) is the overall condition-(7) slack.
    step.require_rat_positive("psi(5.78^2) - 1.74e-6", &(&psi_at_end - &eps));

    // Constants of the backward-induction discussion: a, x1, x2.
    step.check_paper("a = 9!/482800", Interval::from_rational(&a), "0.7516", 1e-4);
    match arccos_enclosure(&a, 1e-12) {
        Ok(x1) => {
            step.check_paper("x1 = arccos(a)", x1, "0.7203", 1e-4);
            step.check_paper("x2 = 2pi - arccos(a)", two_pi().sub(&x1), "5.5629", 1e-4);
        }
        Err(_) => {
            step.require_exact("arccos(a) evaluable", false);
        }
    }

    step.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn near_zero_proves_for_81_42() {
        let pair = PairMN::new(81, 42).unwrap();
        let step = verify_near_zero(&pair, &CertificateConfig::default());
        for c in &step.computed {
            assert!(
                !c.name.contains("VIOLATED") && !c.name.contains("REFUTED"),
                "{}",
                c.name
            );
        }
        assert!(step.is_proved(), "{step:?}");
        assert!(step.margin > 0.0);
    }

    #[test]
    fn near_zero_proves_for_all_acceptance_pairs() {
        for (m, n) in [(81, 66), (101, 52), (121, 98)] {
            let pair = PairMN::new(m, n).unwrap();
            let step = verify_near_zero(&pair, &CertificateConfig::default());
            assert!(step.is_proved(), "({m},{n}): {step:?}");
        }
    }

    #[test]
    fn v_second_derivative_negative_by_subdivision() {
        use crate::sign::{prove_sign_on_interval, SignClaim, SignOutcome};
        let v2 = poly_v().derivative().derivative();
        let out = prove_sign_on_interval(
            &|nu| crate::poly::horner_eval(&v2, nu),
            Interval::from_rational_bounds(&ratio(1, 4), &(dec("0.82") * dec("0.82"))),
            SignClaim::LtZero,
            40,
        );
        assert!(matches!(out, SignOutcome::Proved(_)), "{out:?}");
    }

    #[test]
    fn v_reference_values() {
        use num_traits::Signed;
        let v = poly_v();
        // independently computed: V(0.25) = 5.5947308587733965e-7
        let got = v.eval_rat(&ratio(1, 4));
        let want = dec("5.594730858773396552152421e-7");
        assert!((got - want).abs() < dec("1e-20"));
    }
}
