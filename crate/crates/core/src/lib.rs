//! Rigorous verification that the global minimum of
//! `f(x) = (n sin x - sin nx) / (m sin x - sin mx)` is attained at `x = 0`
//! for integer pairs with `m` odd, `n` even, `0.5 <= n/m <= 0.8194` and `m >= 81`.
//!
//! The crate is organized in independent layers:
//!
//! * [`interval`] — directed-rounding interval arithmetic with self-contained
//!   sine/cosine enclosures (Taylor series plus explicit remainder bounds).
//! * [`poly`] — exact rational polynomials and interval Horner evaluation.
//! * [`sign`] — adaptive-bisection sign proofs over intervals.
//! * [`model`] — the functions under study (`f`, `g`, `g~`), their exact
//!   values at zero, and certified polynomial sine sandwiches.
//! * [`certificates`] — one machine-checked verifier per proof step, and the
//!   per-pair certificate assembly.
//! * [`oracle`] — an independent, non-rigorous `f64` grid minimizer used to
//!   cross-check every certificate.
//!
//! The two computation paths (interval certificates vs. plain-float oracle)
//! share no evaluation code, so a bug in one cannot silently confirm itself
//! in the other.

pub mod certificates;
pub mod constants;
pub mod interval;
pub mod model;
pub mod oracle;
pub mod poly;
pub mod rational;
pub mod report;
pub mod sign;

pub use interval::Interval;
pub use model::PairMN;
