//! Property tests for the interval layer and the model functions.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use trigmin_core::certificates::{verify_far_region, verify_near_zero, CertificateConfig};
use trigmin_core::interval::trig::{cos_enclosure, sin_enclosure, sin_point};
use trigmin_core::interval::Interval;
use trigmin_core::model::eval_f;
use trigmin_core::poly::{horner_eval, PolyCoeffs};
use trigmin_core::rational::{f64_to_rational, ratio};
use trigmin_core::sign::{prove_sign_on_interval, SignClaim, SignOutcome};
use trigmin_core::PairMN;

fn reasonable_f64() -> impl Strategy<Value = f64> {
    prop_oneof![-1.0e6..1.0e6f64, -1.0..1.0f64, -1.0e-6..1.0e-6f64,]
}

proptest! {
    #[test]
    fn interval_add_sub_mul_sound(a in reasonable_f64(), b in reasonable_f64()) {
        let (ia, ib) = (Interval::point(a), Interval::point(b));
        let (ra, rb) = (f64_to_rational(a), f64_to_rational(b));
        prop_assert!(ia.add(&ib).contains_rational(&(&ra + &rb)));
        prop_assert!(ia.sub(&ib).contains_rational(&(&ra - &rb)));
        prop_assert!(ia.mul(&ib).contains_rational(&(&ra * &rb)));
    }

    #[test]
    fn interval_div_sound(a in reasonable_f64(), b in reasonable_f64()) {
        prop_assume!(b.abs() > 1e-12);
        let enc = Interval::point(a).div(&Interval::point(b)).unwrap();
        prop_assert!(enc.contains_rational(&(f64_to_rational(a) / f64_to_rational(b))));
    }

    #[test]
    fn inclusion_monotonicity(
        lo in -100.0..100.0f64, w in 0.0..10.0f64, s in 0.0..0.4f64,
        lo2 in -100.0..100.0f64, w2 in 0.0..10.0f64, s2 in 0.0..0.4f64,
    ) {
        let outer_a = Interval::new(lo, lo + w);
        let inner_a = Interval::new(lo + s * w, lo + w - s * w);
        let outer_b = Interval::new(lo2, lo2 + w2);
        let inner_b = Interval::new(lo2 + s2 * w2, lo2 + w2 - s2 * w2);
        prop_assert!(inner_a.add(&inner_b).is_subset_of(&outer_a.add(&outer_b)));
        prop_assert!(inner_a.sub(&inner_b).is_subset_of(&outer_a.sub(&outer_b)));
        prop_assert!(inner_a.mul(&inner_b).is_subset_of(&outer_a.mul(&outer_b)));
    }

    #[test]
    fn sin_cos_enclosures_stay_in_unit_range(lo in -20.0..20.0f64, w in 0.0..8.0f64) {
        let x = Interval::new(lo, lo + w);
        let s = sin_enclosure(x);
        let c = cos_enclosure(x);
        prop_assert!(s.lo() >= -1.0 && s.hi() <= 1.0);
        prop_assert!(c.lo() >= -1.0 && c.hi() <= 1.0);
        // libm values land inside (within its ~1 ulp faithfulness)
        for t in [lo, lo + 0.5 * w, lo + w] {
            prop_assert!(s.lo() - 4.0 * f64::EPSILON <= t.sin() && t.sin() <= s.hi() + 4.0 * f64::EPSILON);
            prop_assert!(c.lo() - 4.0 * f64::EPSILON <= t.cos() && t.cos() <= c.hi() + 4.0 * f64::EPSILON);
        }
    }

    #[test]
    fn sin_width_tight_on_monotone_pieces(base in 0.05..1.45f64, w in 0.0..0.1f64) {
        // [base, base + w] ⊂ (0, pi/2): strictly inside one monotone piece
        let x = Interval::new(base, base + w);
        let s = sin_enclosure(x);
        prop_assert!(s.width() <= x.width() + 4.0 * f64::EPSILON);
    }

    #[test]
    fn horner_contains_exact_value(
        c0 in -5i64..5, c1 in -5i64..5, c2 in -5i64..5, c3 in -5i64..5,
        num in -1000i64..1000, den in 1i64..1000,
    ) {
        let p = PolyCoeffs::new(vec![ratio(c0, 3), ratio(c1, 7), ratio(c2, 11), ratio(c3, 13)]);
        let x = ratio(num, den);
        let enc = horner_eval(&p, Interval::from_rational(&x));
        prop_assert!(enc.contains_rational(&p.eval_rat(&x)));
    }

    #[test]
    fn f_is_even_and_periodic(x in 0.1..1.4f64) {
        let pair = PairMN::new(7, 4).unwrap();
        let a = eval_f(&pair, Interval::point(x)).unwrap();
        let b = eval_f(&pair, Interval::point(-x)).unwrap();
        prop_assert!(a.overlaps(&b));
        let c = eval_f(&pair, Interval::point(x).add(&trigmin_core::interval::two_pi())).unwrap();
        prop_assert!(a.overlaps(&c));
    }
}

/// A proved sign claim is never falsified by dense pointwise sampling
/// (1e4 samples per proved claim).
#[test]
fn proved_claims_survive_pointwise_sampling() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let mut proved_claims = 0;
    while proved_claims < 20 {
        let coeffs: Vec<_> = (0..4).map(|_| ratio(rng.gen_range(-20..20), 7)).collect();
        let p = PolyCoeffs::new(coeffs);
        let lo = rng.gen_range(-3.0..2.0);
        let hi = lo + rng.gen_range(0.1..3.0);
        let domain = Interval::new(lo, hi);
        let outcome =
            prove_sign_on_interval(&|x| horner_eval(&p, x), domain, SignClaim::GeZero, 24);
        if let SignOutcome::Proved(_) = outcome {
            proved_claims += 1;
            for _ in 0..10_000 {
                let x = rng.gen_range(lo..hi);
                let v = p.coeffs().iter().rev().fold(0.0, |acc, c| {
                    acc * x + trigmin_core::rational::rat_approx(c)
                });
                assert!(v >= -1e-9, "proved claim falsified at {x}: {v} ({p:?})");
            }
        }
    }
}

/// Re-running with doubled subdivision depth never flips proved to refuted.
#[test]
fn doubled_depth_is_stable() {
    let pair = PairMN::new(81, 42).unwrap();
    let base = CertificateConfig::default();
    let deep = CertificateConfig {
        max_depth: base.max_depth * 2,
        ..base
    };
    assert!(verify_far_region(&pair, &base).is_proved());
    assert!(verify_far_region(&pair, &deep).is_proved());
    assert!(verify_near_zero(&pair, &base).is_proved());
    assert!(verify_near_zero(&pair, &deep).is_proved());
}

/// The removable singularity at 0: enclosures over shrinking symmetric
/// intervals converge to the exact f(0).
#[test]
fn removable_singularity_converges() {
    let pair = PairMN::new(81, 42).unwrap();
    let f0 = pair.f_at_zero();
    let mut width = f64::INFINITY;
    for h in [1e-2, 1e-4, 1e-6, 1e-8] {
        let enc = eval_f(&pair, Interval::new(-h, h)).unwrap();
        assert!(enc.contains_rational(&f0));
        assert!(enc.width() < width);
        width = enc.width();
    }
    assert!(width < 1e-8);
}

/// Spot check that sin_point enclosures contain correctly-rounded values
/// frozen from 60-digit computation.
#[test]
fn sin_reference_spot_values() {
    use trigmin_core::rational::dec;
    let cases = [
        (2.8f64, "0.33498815015590491954385375271242"),
        (0.5f64, "0.47942553860420300027328793521557"),
    ];
    for (x, digits) in cases {
        // x here is the f64 nearest the decimal; evaluate at that exact f64
        // and compare against sin of the decimal within 1e-15 slack.
        let enc = sin_point(x);
        let v = dec(digits);
        let lo = f64_to_rational(enc.lo()) - dec("1e-15");
        let hi = f64_to_rational(enc.hi()) + dec("1e-15");
        assert!(lo <= v && v <= hi);
    }
}
