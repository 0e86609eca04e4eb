//! Neighborhood of pi, via `g~(x) = g(x + pi)`: the small piece
//! `[0, 2.8/m]` with the cubic/quintic sandwich, and the large piece
//! `[2.8/m, 5.78/m]` with the quartic sandwich around `3 pi/2`.
//!
//! Every polynomial reduction is verified as an exact identity (in Q\[x\] for
//! the small piece, in Q\[pi\]\[x\] for the large one, where `3 pi/2` enters
//! the coefficients). The final two-variable bound `F(lambda, t, 81) >= 0` is
//! delegated to the four appendix verifiers; this step certifies the
//! monotonicity in `m` that transports it to the pair's own `m`.

use super::{sandwich_set, CertificateConfig, StepBuilder, StepResult};
use crate::interval::{pi, Interval};
use crate::model::{cubic_lower, quintic_upper, s3_lower, PairMN};
use crate::poly::{horner_eval, PiElem, PiPoly, PolyCoeffs};
use crate::rational::{dec, ratio};
use crate::sign::{prove_sign_on_interval, SignClaim};
use num_rational::BigRational;
use num_traits::{One, Zero};

fn big(m: u32, e: u32) -> BigRational {
    BigRational::from(num_bigint::BigInt::from(m).pow(e))
}

/// The quadratic-in-y reduction of the small piece:
/// `E(y) = 2 - (l^2/3) y - ((1-l^2) m^2 / (5! (m^2-1))) y^2`.
fn poly_e(lambda: &BigRational, m: u32) -> PolyCoeffs {
    let l2 = lambda * lambda;
    let m2 = big(m, 2);
    PolyCoeffs::new(vec![
        ratio(2, 1),
        -&l2 / ratio(3, 1),
        -(BigRational::one() - &l2) * &m2 / (ratio(120, 1) * (&m2 - BigRational::one())),
    ])
}

pub fn verify_near_pi_small(pair: &PairMN, config: &CertificateConfig) -> StepResult {
    let mut step = StepBuilder::new("near_pi_small");
    let (m, n) = (pair.m(), pair.n());
    let (mr, nr) = (ratio(m as i64, 1), ratio(n as i64, 1));
    let lambda = pair.lambda();
    let y_max = dec("2.8") * dec("2.8");
    let y_domain = Interval::from_rational_bounds(&BigRational::zero(), &y_max);

    // Sandwich certifications (cached).
    let sandwiches = sandwich_set(config);
    step.require_sign("sin x >= x - x^3/6 on [0, 5.78]", &sandwiches.cubic_lower);
    step.require_sign(
        "sin x <= x - x^3/6 + x^5/120 on [0, 5.78]",
        &sandwiches.quintic_upper,
    );

    // Denominator reduction: m s1(x) - s2(mx) == m^3 x^3 (1/3! - 1/(3! m^2) - y/5!).
    let s1 = cubic_lower().poly;
    let s2 = quintic_upper().poly;
    let lhs = s1.scale(&mr).sub(&s2.scale_arg(&mr));
    let inner = PolyCoeffs::new(vec![
        ratio(1, 6) - BigRational::one() / (ratio(6, 1) * big(m, 2)),
        ratio(-1, 120),
    ]);
    let rhs = inner
        .compose_monomial(&big(m, 2), 2)
        .mul(&PolyCoeffs::monomial(big(m, 3), 3));
    step.require_exact("denominator rewrite == m^3 x^3 linear(y)", lhs == rhs);

    // The linear form decreases in y, so its minimum sits at y = 2.8^2.
    step.require_rat_negative("linear y-coefficient", &inner.coeff(1));
    step.require_rat_positive("denominator slack at y = 2.8^2", &inner.eval_rat(&y_max));

    // Numerator reduction: n s1(mx) + m s1(nx) - g(0)(m s1(x) - s2(mx)) == m n x E(m^2 x^2).
    let g0 = pair.g_at_zero();
    let e_pair = poly_e(&lambda, m);
    let lhs3 = s1
        .scale_arg(&mr)
        .scale(&nr)
        .add(&s1.scale_arg(&nr).scale(&mr))
        .sub(&s1.scale(&mr).sub(&s2.scale_arg(&mr)).scale(&g0));
    let rhs3 = e_pair
        .compose_monomial(&big(m, 2), 2)
        .mul(&PolyCoeffs::monomial(&mr * &nr, 1));
    step.require_exact("numerator rewrite == m n x E(m^2 x^2)", lhs3 == rhs3);

    // The paper's reduced worst case, exact: E(m=3, y=2.8^2, l=0.82) > 0.
    let worst = poly_e(&dec("0.82"), 3).eval_rat(&y_max);
    step.require_rat_positive("E at worst case (m=3, y=2.8^2, l=0.82)", &worst);

    // Certified monotonicity reductions (ranges as interval constants;
    // partials hand-derived from E written in u = 1/m^2):
    //   dE/dy  = -l^2/3 - (1-l^2) y / (60 (1-u))        <= 0
    //   dE/dl  = 2 l y (-1/3 + y / (120 (1-u)))         <= 0
    //   dE/du  = -(1-l^2) y^2 / (120 (1-u)^2)           <= 0
    let lam_iv = Interval::from_rational_bounds(&ratio(1, 2), &dec("0.82"));
    let u_iv = Interval::from_rational_bounds(&BigRational::zero(), &ratio(1, 9));
    let one_minus_u = Interval::ONE.sub(&u_iv);
    let one_minus_l2 = Interval::ONE.sub(&lam_iv.pow_int(2));
    let de_dy = |y: Interval| {
        lam_iv
            .pow_int(2)
            .scale(-1.0 / 3.0)
            .sub(&one_minus_l2.mul(&y).div(&one_minus_u.scale(60.0)).unwrap())
    };
    let out = prove_sign_on_interval(&de_dy, y_domain, SignClaim::LeZero, config.max_depth);
    step.require_sign_aux("dE/dy <= 0 on ranges", &out);
    let de_dl = |y: Interval| {
        let bracket = y
            .div(&one_minus_u.scale(120.0))
            .unwrap()
            .sub(&Interval::from_rational(&ratio(1, 3)));
        lam_iv.scale(2.0).mul(&y).mul(&bracket)
    };
    let out = prove_sign_on_interval(&de_dl, y_domain, SignClaim::LeZero, config.max_depth);
    step.require_sign_aux("dE/dlambda <= 0 on ranges", &out);
    let de_du = |y: Interval| {
        one_minus_l2
            .mul(&y.pow_int(2))
            .div(&one_minus_u.pow_int(2).scale(120.0))
            .unwrap()
            .neg()
    };
    let out = prove_sign_on_interval(&de_du, y_domain, SignClaim::LeZero, config.max_depth);
    step.require_sign_aux("dE/du <= 0 on ranges", &out);

    // Direct pair-specific inequality: E(y) >= 0 on [0, 2.8^2].
    let out = prove_sign_on_interval(
        &|y| horner_eval(&e_pair, y),
        y_domain,
        SignClaim::GeZero,
        config.max_depth,
    );
    step.require_sign("E_pair(y) >= 0 on [0, 2.8^2]", &out);

    step.finish()
}

/// PiPoly for `-1 + w^2/2 - w^4/24`.
fn pipoly_quartic(w: &PiPoly) -> PiPoly {
    PiPoly::constant(PiElem::rational(ratio(-1, 1)))
        .add(&w.pow(2).scale(&PiElem::rational(ratio(1, 2))))
        .sub(&w.pow(4).scale(&PiElem::rational(ratio(1, 24))))
}

/// PiPoly for `-1 + w^2/2`.
fn pipoly_quadratic(w: &PiPoly) -> PiPoly {
    PiPoly::constant(PiElem::rational(ratio(-1, 1)))
        .add(&w.pow(2).scale(&PiElem::rational(ratio(1, 2))))
}

pub fn verify_near_pi_large(pair: &PairMN, config: &CertificateConfig) -> StepResult {
    let mut step = StepBuilder::new("near_pi_large");
    let (m, n) = (pair.m(), pair.n());
    let t_domain = Interval::from_rational_bounds(&dec("2.8"), &dec("5.78"));
    let three_half_pi = pi().scale(1.5);

    // Sandwich certifications around 3 pi/2 (cached), plus the cubic reuse.
    let sandwiches = sandwich_set(config);
    step.require_sign(
        "sin x >= quartic around 3pi/2",
        &sandwiches.quartic_lower_3pi2,
    );
    step.require_sign(
        "sin x <= -1 + (x-3pi/2)^2/2",
        &sandwiches.quadratic_upper_3pi2,
    );
    step.require_sign("sin x >= x - x^3/6 (reused)", &sandwiches.cubic_lower);

    // v(t) = 1 + t - (t-3pi/2)^2/2 - t^3/(6 m^2) > 0 on [2.8, 5.78]:
    // concavity plus endpoint enclosures, for the pair's own m.
    let inv_6m2 = Interval::from_rational(&(BigRational::one() / (ratio(6, 1) * big(m, 2))));
    let v = |t: Interval| {
        t.add(&Interval::ONE)
            .sub(&t.sub(&three_half_pi).pow_int(2).scale(0.5))
            .sub(&t.pow_int(3).mul(&inv_6m2))
    };
    let v_second = |t: Interval| Interval::point(-1.0).sub(&t.mul(&inv_6m2).scale(6.0));
    let out = prove_sign_on_interval(&v_second, t_domain, SignClaim::LtZero, config.max_depth);
    step.require_sign("v'' < 0 on [2.8, 5.78]", &out);
    step.require_enclosure_positive("v(2.8) (pair m)", v(Interval::from_rational(&dec("2.8"))));
    step.require_enclosure_positive("v(5.78) (pair m)", v(Interval::from_rational(&dec("5.78"))));

    // v increases in m (d v / d(1/m^2) = -t^3/6 <= 0), so the printed m = 5
    // endpoint values are the worst case; record them as reference rows.
    let inv_150 = Interval::from_rational(&ratio(1, 150));
    let v5 = |t: Interval| {
        t.add(&Interval::ONE)
            .sub(&t.sub(&three_half_pi).pow_int(2).scale(0.5))
            .sub(&t.pow_int(3).mul(&inv_150))
    };
    step.check_paper(
        "v(2.8) at m=5",
        v5(Interval::from_rational(&dec("2.8"))),
        "1.825",
        5e-4,
    );
    step.check_paper(
        "v(5.78) at m=5",
        v5(Interval::from_rational(&dec("5.78"))),
        "4.9228",
        5e-5,
    );
    let out = prove_sign_on_interval(
        &|t: Interval| t.pow_int(3),
        t_domain,
        SignClaim::GeZero,
        config.max_depth,
    );
    step.require_sign("t^3 >= 0 (v increasing in m)", &out);

    // p(t) = t - t^3/6 + 1 - (t-3pi/2)^2/2 < 0 on [2.8, 5.78], proved
    // directly; the printed facts p'' < 0, p'(2.8), p(2.8) are replayed.
    let p = |t: Interval| {
        t.sub(&t.pow_int(3).scale(1.0 / 6.0))
            .add(&Interval::ONE)
            .sub(&t.sub(&three_half_pi).pow_int(2).scale(0.5))
    };
    let out = prove_sign_on_interval(&p, t_domain, SignClaim::LtZero, config.max_depth);
    step.require_sign("p(t) < 0 on [2.8, 5.78]", &out);
    let p_second = |t: Interval| Interval::point(-1.0).sub(&t);
    let out = prove_sign_on_interval(&p_second, t_domain, SignClaim::LtZero, config.max_depth);
    step.require_sign("p'' < 0 (p' decreasing)", &out);
    // p'(t) = 1 + 3pi/2 - t - t^2/2
    let p_prime = |t: Interval| {
        Interval::ONE
            .add(&three_half_pi)
            .sub(&t)
            .sub(&t.pow_int(2).scale(0.5))
    };
    let p_prime_28 = p_prime(Interval::from_rational(&dec("2.8")));
    step.check_paper("p'(2.8)", p_prime_28, "-1.0076", 1e-4);
    step.require_enclosure_negative("p'(2.8) < 0", p_prime_28);
    let p_28 = p(Interval::from_rational(&dec("2.8")));
    step.check_paper("p(2.8)", p_28, "-1.6873", 1e-4);
    step.require_enclosure_negative("p(2.8) < 0", p_28);

    // F_u(l,t,m) = l(1-l^2)/(1-u)^2 * p(t) with u = 1/m^2: since p < 0 and
    // the prefactor is positive, F increases in m; with m >= 81 the appendix
    // bound F(l, t, 81) >= 0 transports to the pair.
    let lambda = pair.lambda();
    let prefactor = &lambda * (BigRational::one() - &lambda * &lambda);
    step.require_rat_positive("lambda (1 - lambda^2)", &prefactor);
    step.require_exact("m >= 81 (scope)", m >= 81);

    // Exact reduction identity in Q[pi][x]:
    //   n s1(mx) + m s1(nx) - g(0) (m(x - x^3/6) - s2(mx)) == m F(n/m, mx, m).
    let x = PiPoly::x();
    let shift = PiPoly::constant(PiElem::pi_power(ratio(3, 2), 1));
    let w_m = x.scale(&PiElem::rational(ratio(m as i64, 1))).sub(&shift);
    let w_n = x.scale(&PiElem::rational(ratio(n as i64, 1))).sub(&shift);
    let den_part = x
        .scale(&PiElem::rational(ratio(m as i64, 1)))
        .sub(&x.pow(3).scale(&PiElem::rational(ratio(m as i64, 6))))
        .add(&PiPoly::constant(PiElem::rational(ratio(1, 1))))
        .sub(&w_m.pow(2).scale(&PiElem::rational(ratio(1, 2))));
    let lhs = pipoly_quartic(&w_m)
        .scale(&PiElem::rational(ratio(n as i64, 1)))
        .add(&pipoly_quartic(&w_n).scale(&PiElem::rational(ratio(m as i64, 1))))
        .sub(
            &x.scale(&PiElem::rational(ratio(m as i64, 1)))
                .sub(&x.pow(3).scale(&PiElem::rational(ratio(m as i64, 6))))
                .sub(&pipoly_quadratic(&w_m))
                .scale(&PiElem::rational(pair.g_at_zero())),
        );
    let lam = pair.lambda();
    let d1 = &lam
        * (BigRational::one() - &lam * &lam)
        * (BigRational::one() + BigRational::one() / (big(m, 2) - BigRational::one()));
    let f_at_mx = pipoly_quartic(&w_m)
        .scale(&PiElem::rational(lam.clone()))
        .add(&pipoly_quartic(&w_n))
        .add(&den_part.scale(&PiElem::rational(d1)));
    let rhs = f_at_mx.scale(&PiElem::rational(ratio(m as i64, 1)));
    step.require_exact(
        "numerator - g(0)*denominator == m F(lambda, mx, m)",
        lhs.sub(&rhs).is_zero(),
    );

    // The uniform bound F(lambda, t, 81) >= 0 for lambda in [0.5, 0.8194],
    // t in [2.8, 5.78] is certified by the four appendix steps included in
    // every certificate; nothing further to prove here.
    step.require_exact("delegates F(lambda, t, 81) >= 0 to appendix steps", true);

    // Consistency spot check: the s3 sandwich lower bound used in (6) of the
    // near-zero step shares the cubic prefix reused by the simplified denominator.
    step.require_exact("cubic prefix of s1 matches", {
        let c = s3_lower().poly;
        c.coeff(1) == ratio(1, 1) && c.coeff(3) == ratio(-1, 6)
    });

    step.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn near_pi_small_proves_for_81_42() {
        let pair = PairMN::new(81, 42).unwrap();
        let step = verify_near_pi_small(&pair, &CertificateConfig::default());
        assert!(step.is_proved(), "{step:?}");
        assert!(step.margin > 0.0);
    }

    #[test]
    fn near_pi_large_proves_for_81_42() {
        let pair = PairMN::new(81, 42).unwrap();
        let step = verify_near_pi_large(&pair, &CertificateConfig::default());
        for c in &step.computed {
            assert!(
                !c.name.contains("VIOLATED") && !c.name.contains("REFUTED"),
                "{}",
                c.name
            );
        }
        assert!(step.is_proved(), "{step:?}");
    }

    #[test]
    fn lambda_zero_degenerate_case_holds() {
        // With l = 0 the quadratic reduces to 2 - y^2 m^2/(120 (m^2-1)),
        // positive on [0, 2.8^2] since 2.8^4/120 < 2.
        let e0 = poly_e(&BigRational::zero(), 3);
        let y = dec("2.8") * dec("2.8");
        assert!(e0.eval_rat(&y) > BigRational::zero());
        assert!(e0.eval_rat(&BigRational::zero()) == ratio(2, 1));
    }

    #[test]
    fn worst_case_value_matches_reference() {
        // E(3, 2.8^2, 0.82) = 0.05401844266..., independently computed.
        let worst = poly_e(&dec("0.82"), 3).eval_rat(&(dec("2.8") * dec("2.8")));
        let want = dec("0.0540184426666666");
        use num_traits::Signed;
        assert!((worst - want).abs() < dec("1e-15"));
    }
}
