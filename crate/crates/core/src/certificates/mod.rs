//! Machine-checked proof steps and per-pair certificates.
//!
//! Each verifier replays one proposition of the underlying argument as a
//! combination of three ingredient kinds:
//!
//! * exact rational (or Q\[pi\]) identities and comparisons — zero-error;
//! * interval enclosures of named quantities, cross-checked against the
//!   values printed in the source material at their stated precision;
//! * adaptive-bisection sign proofs over intervals.
//!
//! A [`StepResult`] is `proved` only if every ingredient succeeded, and then
//! its `margin` is the smallest slack observed anywhere in the step. The
//! pair-independent steps (the four fixed-parameter lemmas and the sine
//! sandwich certifications) are computed once and cached.

mod appendix;
mod far_region;
mod near_pi;
mod near_zero;

pub use appendix::{
    f_interval, f_numeric, verify_appendix_f_08194, verify_appendix_f_half, verify_appendix_fl,
    verify_appendix_fll, LineSpec, Quadratic,
};
pub use far_region::{corollary_endpoint_margin, verify_far_region};
pub use near_pi::{verify_near_pi_large, verify_near_pi_small};
pub use near_zero::verify_near_zero;

/// The quartic `V(nu)` used by the near-zero step (exposed for the table).
pub fn v_quartic_poly() -> crate::poly::PolyCoeffs {
    near_zero::poly_v()
}

use crate::interval::Interval;
use crate::model::{PairMN, ScopeError};
use crate::rational::{rat_to_f64_dir, Dir};
use crate::sign::{SignOutcome, DEFAULT_MAX_DEPTH};
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

/// Knobs shared by every verifier.
#[derive(Clone, Copy, Debug)]
pub struct CertificateConfig {
    /// Subdivision depth for sign proofs.
    pub max_depth: u32,
    /// Seed for the non-rigorous identity-sanity samples.
    pub seed: u64,
}

impl Default for CertificateConfig {
    fn default() -> Self {
        CertificateConfig {
            max_depth: DEFAULT_MAX_DEPTH,
            seed: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StepStatus {
    Proved,
    Refuted,
    Inconclusive,
}

/// One named interval computed during a step.
#[derive(Clone, Debug)]
pub struct ComputedValue {
    pub name: String,
    pub enclosure: Interval,
}

/// One comparison against a printed reference value.
#[derive(Clone, Debug)]
pub struct PaperExpected {
    pub name: String,
    pub value: f64,
    pub tol: f64,
    pub ok: bool,
}

/// Outcome of one verified proposition.
#[derive(Clone, Debug)]
pub struct StepResult {
    pub step_id: String,
    pub status: StepStatus,
    pub computed: Vec<ComputedValue>,
    pub paper_expected: Vec<PaperExpected>,
    /// Smallest slack to violation over every certified inequality
    /// (+inf when the step contains only exact identity checks).
    pub margin: f64,
}

impl StepResult {
    pub fn is_proved(&self) -> bool {
        self.status == StepStatus::Proved
    }
}

/// Incremental construction of a [`StepResult`]. The first failed requirement
/// decides the final status; later requirements are still evaluated so the
/// report stays complete.
pub(crate) struct StepBuilder {
    id: &'static str,
    computed: Vec<ComputedValue>,
    paper_expected: Vec<PaperExpected>,
    margin: f64,
    failure: Option<StepStatus>,
}

impl StepBuilder {
    pub fn new(id: &'static str) -> StepBuilder {
        StepBuilder {
            id,
            computed: Vec::new(),
            paper_expected: Vec::new(),
            margin: f64::INFINITY,
            failure: None,
        }
    }

    fn fail(&mut self, status: StepStatus) {
        if self.failure.is_none() {
            self.failure = Some(status);
        }
    }

    pub fn record(&mut self, name: &str, enclosure: Interval) -> &mut Self {
        self.computed.push(ComputedValue {
            name: name.to_string(),
            enclosure,
        });
        self
    }

    pub fn record_rat(&mut self, name: &str, value: &BigRational) -> &mut Self {
        self.record(name, Interval::from_rational(value))
    }

    /// An adaptive sign proof that must succeed.
    pub fn require_sign(&mut self, name: &str, outcome: &SignOutcome) -> &mut Self {
        match outcome {
            SignOutcome::Proved(p) => {
                self.margin = self.margin.min(p.min_margin);
                self.record(
                    &format!("{name} [{} on {} leaves]", p.claim, p.leaves),
                    Interval::new(p.min_margin.min(0.0), p.min_margin.max(0.0)),
                );
            }
            SignOutcome::Refuted { witness, enclosure } => {
                self.record(&format!("{name} REFUTED on {witness:?}"), *enclosure);
                self.fail(StepStatus::Refuted);
            }
            SignOutcome::DepthExceeded {
                subinterval,
                enclosure,
            } => {
                self.record(
                    &format!("{name} INCONCLUSIVE on {subinterval:?}"),
                    *enclosure,
                );
                self.fail(StepStatus::Inconclusive);
            }
        }
        self
    }

    /// An auxiliary sign proof (monotonicity reductions and similar facts
    /// that legitimately touch zero at a boundary point): the proof must
    /// succeed but its slack does not enter the step margin.
    pub fn require_sign_aux(&mut self, name: &str, outcome: &SignOutcome) -> &mut Self {
        match outcome {
            SignOutcome::Proved(p) => {
                self.record(
                    &format!("{name} [{} on {} leaves, aux]", p.claim, p.leaves),
                    Interval::new(p.min_margin.min(0.0), p.min_margin.max(0.0)),
                );
            }
            _ => {
                self.require_sign(name, outcome);
            }
        }
        self
    }

    /// An exact rational quantity that must be strictly positive.
    pub fn require_rat_positive(&mut self, name: &str, value: &BigRational) -> &mut Self {
        self.record_rat(name, value);
        if value.is_positive() {
            self.margin = self.margin.min(rat_to_f64_dir(value, Dir::Floor));
        } else {
            self.fail(StepStatus::Refuted);
        }
        self
    }

    /// An exact rational quantity that must be strictly negative.
    pub fn require_rat_negative(&mut self, name: &str, value: &BigRational) -> &mut Self {
        self.record_rat(name, value);
        if value.is_negative() {
            self.margin = self.margin.min(rat_to_f64_dir(&-value.clone(), Dir::Floor));
        } else {
            self.fail(StepStatus::Refuted);
        }
        self
    }

    /// An enclosure that must lie strictly on the positive side.
    pub fn require_enclosure_positive(&mut self, name: &str, e: Interval) -> &mut Self {
        self.record(name, e);
        if e.lo() > 0.0 {
            self.margin = self.margin.min(e.lo());
        } else {
            self.fail(if e.hi() <= 0.0 {
                StepStatus::Refuted
            } else {
                StepStatus::Inconclusive
            });
        }
        self
    }

    /// An enclosure that must lie strictly on the negative side.
    pub fn require_enclosure_negative(&mut self, name: &str, e: Interval) -> &mut Self {
        self.record(name, e);
        if e.hi() < 0.0 {
            self.margin = self.margin.min(-e.hi());
        } else {
            self.fail(if e.lo() >= 0.0 {
                StepStatus::Refuted
            } else {
                StepStatus::Inconclusive
            });
        }
        self
    }

    /// An exact structural fact (polynomial identity, parity, ordering).
    pub fn require_exact(&mut self, name: &str, holds: bool) -> &mut Self {
        self.record(
            &format!("{name} [{}]", if holds { "exact" } else { "VIOLATED" }),
            if holds {
                Interval::ZERO
            } else {
                Interval::new(-1.0, -1.0)
            },
        );
        if !holds {
            self.fail(StepStatus::Refuted);
        }
        self
    }

    /// Compare an enclosure against a printed value at a stated tolerance.
    /// Passing means the enclosure fits entirely inside `value ± tol`.
    pub fn check_paper(&mut self, name: &str, e: Interval, value: &str, tol: f64) -> &mut Self {
        let v = crate::rational::dec(value);
        let band = Interval::new(
            rat_to_f64_dir(&(&v - crate::rational::f64_to_rational(tol)), Dir::Floor),
            rat_to_f64_dir(&(&v + crate::rational::f64_to_rational(tol)), Dir::Ceil),
        );
        let ok = e.is_subset_of(&band);
        self.computed.push(ComputedValue {
            name: name.to_string(),
            enclosure: e,
        });
        self.paper_expected.push(PaperExpected {
            name: name.to_string(),
            value: rat_to_f64_dir(&v, Dir::Floor),
            tol,
            ok,
        });
        if !ok {
            self.fail(if e.overlaps(&band) {
                StepStatus::Inconclusive
            } else {
                StepStatus::Refuted
            });
        }
        self
    }

    pub fn finish(self) -> StepResult {
        let status = self.failure.unwrap_or(StepStatus::Proved);
        StepResult {
            step_id: self.id.to_string(),
            status,
            computed: self.computed,
            paper_expected: self.paper_expected,
            margin: if status == StepStatus::Proved {
                self.margin
            } else {
                f64::NEG_INFINITY
            },
        }
    }
}

/// Fixed order of the proof steps in every certificate.
pub const STEP_ORDER: [&str; 8] = [
    "far_region",
    "near_zero",
    "near_pi_small",
    "near_pi_large",
    "appendix_Fll",
    "appendix_Fl",
    "appendix_F_half",
    "appendix_F_08194",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Condition2Holds,
    Failed { step_id: String },
}

/// The assembled per-pair verdict.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub pair: PairMN,
    pub steps: Vec<StepResult>,
    pub verdict: Verdict,
}

/// The certified standard sandwiches, shared by the near-0 and near-pi steps.
#[derive(Clone)]
pub(crate) struct SandwichSet {
    pub s3_lower: SignOutcome,
    pub s3_upper: SignOutcome,
    pub cubic_lower: SignOutcome,
    pub quintic_upper: SignOutcome,
    pub quartic_lower_3pi2: SignOutcome,
    pub quadratic_upper_3pi2: SignOutcome,
}

fn certify_all(max_depth: u32) -> SandwichSet {
    use crate::model::{
        certify_sine_bound, cubic_lower, quadratic_upper_3pi2, quartic_lower_3pi2, quintic_upper,
        s3_lower, s3_upper,
    };
    SandwichSet {
        s3_lower: certify_sine_bound(&s3_lower(), max_depth),
        s3_upper: certify_sine_bound(&s3_upper(), max_depth),
        cubic_lower: certify_sine_bound(&cubic_lower(), max_depth),
        quintic_upper: certify_sine_bound(&quintic_upper(), max_depth),
        quartic_lower_3pi2: certify_sine_bound(&quartic_lower_3pi2(), max_depth),
        quadratic_upper_3pi2: certify_sine_bound(&quadratic_upper_3pi2(), max_depth),
    }
}

static SANDWICH_CACHE: std::sync::LazyLock<SandwichSet> =
    std::sync::LazyLock::new(|| certify_all(DEFAULT_MAX_DEPTH));

/// Certified sandwich outcomes, cached at the default depth.
pub(crate) fn sandwich_set(config: &CertificateConfig) -> SandwichSet {
    if config.max_depth == DEFAULT_MAX_DEPTH {
        SANDWICH_CACHE.clone()
    } else {
        certify_all(config.max_depth)
    }
}

/// Cache of the pair-independent appendix steps at default depth.
static APPENDIX_CACHE: std::sync::LazyLock<[StepResult; 4]> = std::sync::LazyLock::new(|| {
    let cfg = CertificateConfig::default();
    [
        verify_appendix_fll(&cfg),
        verify_appendix_fl(&cfg),
        verify_appendix_f_half(&cfg),
        verify_appendix_f_08194(&cfg),
    ]
});

fn appendix_steps(config: &CertificateConfig) -> [StepResult; 4] {
    if config.max_depth == DEFAULT_MAX_DEPTH {
        APPENDIX_CACHE.clone()
    } else {
        [
            verify_appendix_fll(config),
            verify_appendix_fl(config),
            verify_appendix_f_half(config),
            verify_appendix_f_08194(config),
        ]
    }
}

/// Run every step for a theorem-scope pair and assemble the verdict.
///
/// The per-pair steps execute in parallel; results are merged in the fixed
/// [`STEP_ORDER`], so reports are deterministic.
pub fn assemble_certificate(
    pair: &PairMN,
    config: &CertificateConfig,
) -> Result<Certificate, ScopeError> {
    pair.theorem_scope()?;
    let ((far, near0), ((pi_small, pi_large), appendix)) = rayon::join(
        || {
            rayon::join(
                || verify_far_region(pair, config),
                || verify_near_zero(pair, config),
            )
        },
        || {
            rayon::join(
                || {
                    rayon::join(
                        || verify_near_pi_small(pair, config),
                        || verify_near_pi_large(pair, config),
                    )
                },
                || appendix_steps(config),
            )
        },
    );
    let mut steps = vec![far, near0, pi_small, pi_large];
    steps.extend(appendix);
    debug_assert_eq!(steps.len(), STEP_ORDER.len());
    for (s, want) in steps.iter().zip(STEP_ORDER) {
        debug_assert_eq!(s.step_id, want);
    }
    let verdict = match steps.iter().find(|s| !s.is_proved()) {
        None => Verdict::Condition2Holds,
        Some(s) => Verdict::Failed {
            step_id: s.step_id.clone(),
        },
    };
    Ok(Certificate {
        pair: *pair,
        steps,
        verdict,
    })
}
