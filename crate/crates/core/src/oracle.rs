//! Independent, non-rigorous ground truth: dense-grid global minimization of
//! `f` over one period in plain `f64` (library sine, no intervals), with
//! derivative-bisection refinement of the best grid minima.
//!
//! The oracle deliberately shares no evaluation code with the certificate
//! path; agreement between the two is one of the acceptance criteria.

use crate::model::PairMN;
use crate::rational::rat_approx;
use rayon::prelude::*;
use serde::Serialize;

/// Result of one global-minimization run.
#[derive(Clone, Debug, Serialize)]
pub struct OracleEstimate {
    pub pair: PairMN,
    /// Location of the least refined value in `[0, pi]` (radians).
    pub argmin_x: f64,
    pub min_value: f64,
    /// `f(0)` as an exact rational string.
    pub f_at_zero: String,
    /// `min_value >= f(0) - 1e-9` and the argmin is at 0 (within 1e-4).
    pub works: bool,
    /// `min_value - f(0)`.
    pub slack: f64,
    pub grid_points: u64,
    pub refinement_iterations: u64,
    /// Grid points skipped because the denominator vanished beyond series
    /// range (poles; they cannot host a minimum).
    pub skipped_points: u64,
}

/// Tolerances and grid density.
#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    /// Grid points per unit length; the default corresponds to 40m points
    /// over `[0, pi]` (ten per oscillation of `sin(mx)`, times safety 4/pi).
    pub density_per_unit: f64,
    /// Refinement tolerance on the argmin bracket width.
    pub tol: f64,
}

impl OracleConfig {
    pub fn for_pair(pair: &PairMN, density_mult: f64) -> OracleConfig {
        let m = pair.m() as f64;
        OracleConfig {
            density_per_unit: 40.0 * m / std::f64::consts::PI * density_mult,
            tol: 1e-12,
        }
    }
}

/// Plain-float `f`, with an 11th-degree Taylor-quotient fallback where the
/// denominator underflows (near `x = 0` and `x = pi`). Returns `None` at
/// genuine poles (denominator vanishing to higher order than the numerator).
pub fn f_value(pair: &PairMN, x: f64) -> Option<f64> {
    let (m, n) = (pair.m() as f64, pair.n() as f64);
    let den = m * x.sin() - (m * x).sin();
    if den.abs() >= 1e-12 {
        return Some((n * x.sin() - (n * x).sin()) / den);
    }
    // Nearest denominator zero is 0 or pi; expand both parts there.
    let near_zero = x.abs() < std::f64::consts::FRAC_PI_2;
    let w = if near_zero {
        x
    } else {
        x - std::f64::consts::PI
    };
    series_ratio(pair, w, near_zero)
}

/// Degree-11 Taylor quotient about 0 or pi.
fn series_ratio(pair: &PairMN, w: f64, about_zero: bool) -> Option<f64> {
    let (m, n) = (pair.m() as f64, pair.n() as f64);
    // k sin w - sin(kw) = sum_{j>=1} (-1)^{j+1} (k^{2j+1} - k) w^{2j+1}/(2j+1)!
    let a_series = |k: f64| -> f64 {
        let mut acc = 0.0;
        let mut fact = 6.0; // 3!
        let mut sign = 1.0;
        for j in 1..=5u32 {
            let p = 2 * j + 1;
            acc += sign * (k.powi(p as i32) - k) * w.powi(p as i32) / fact;
            sign = -sign;
            fact *= ((p + 1) * (p + 2)) as f64;
        }
        acc
    };
    // k sin w + sin(kw) = sum_{j>=0} (-1)^j (k + k^{2j+1}) w^{2j+1}/(2j+1)!
    let b_series = |k: f64| -> f64 {
        let mut acc = 0.0;
        let mut fact = 1.0;
        let mut sign = 1.0;
        for j in 0..=5u32 {
            let p = 2 * j + 1;
            acc += sign * (k + k.powi(p as i32)) * w.powi(p as i32) / fact;
            sign = -sign;
            fact *= ((p + 1) * (p + 2)) as f64;
        }
        acc
    };
    let (num, num_pow) = if about_zero {
        (a_series(n), 3)
    } else if pair.n() % 2 == 0 {
        (-b_series(n), 1)
    } else {
        (-a_series(n), 3)
    };
    let (den, den_pow) = if about_zero {
        (a_series(m), 3)
    } else if pair.m() % 2 == 1 {
        (-a_series(m), 3)
    } else {
        (-b_series(m), 1)
    };
    if num_pow < den_pow {
        return None; // pole: f blows up, not a minimum candidate
    }
    if w == 0.0 {
        // limit value: ratio of leading coefficients, zero if num_pow > den_pow
        let (mi, ni) = (m, n);
        return Some(if num_pow > den_pow {
            0.0
        } else if about_zero {
            (ni * ni * ni - ni) / (mi * mi * mi - mi)
        } else {
            // both odd: same cubic leading terms
            (ni * ni * ni - ni) / (mi * mi * mi - mi)
        });
    }
    Some(num / den)
}

fn centered_derivative(pair: &PairMN, x: f64) -> Option<f64> {
    let h = 1e-7;
    Some((f_value(pair, x + h)? - f_value(pair, x - h)?) / (2.0 * h))
}

/// Dense-grid scan of `[0, pi]` plus derivative-bisection refinement of the
/// best `K = 20` grid minima. Deterministic: ties reduce to the smaller `x`.
pub fn global_min_f(pair: &PairMN, config: &OracleConfig) -> OracleEstimate {
    let m = pair.m() as f64;
    assert!(
        config.density_per_unit >= 10.0 * m / std::f64::consts::PI,
        "grid too coarse to resolve sin(mx)"
    );
    assert!(config.tol > 0.0 && config.tol <= 1e-6);
    let n_points = (config.density_per_unit * std::f64::consts::PI).ceil() as u64;
    let step = std::f64::consts::PI / n_points as f64;

    // Evaluate the grid in parallel; the reduction is associative (min by
    // value, ties by smaller x), so the result does not depend on chunking.
    let evals: Vec<(f64, Option<f64>)> = (0..=n_points)
        .into_par_iter()
        .map(|i| {
            let x = i as f64 * step;
            (x, f_value(pair, x))
        })
        .collect();
    let skipped = evals.iter().filter(|(_, v)| v.is_none()).count() as u64;

    // Best K grid candidates.
    const K: usize = 20;
    let mut candidates: Vec<(f64, f64)> = evals
        .iter()
        .filter_map(|(x, v)| v.map(|v| (v, *x)))
        .collect();
    candidates.sort_by(|a, b| a.partial_cmp(b).unwrap());
    candidates.truncate(K);

    let mut best_val = f64::INFINITY;
    let mut best_x = 0.0f64;
    let mut iterations = 0u64;
    for &(grid_val, x0) in &candidates {
        let (val, x, iters) = refine(pair, x0, step, config.tol);
        iterations += iters;
        let (val, x) = if grid_val < val {
            (grid_val, x0)
        } else {
            (val, x)
        };
        if val < best_val || (val == best_val && x < best_x) {
            best_val = val;
            best_x = x;
        }
    }

    let f0 = pair.f_at_zero();
    let f0_approx = rat_approx(&f0);
    let slack = best_val - f0_approx;
    let works = slack >= -1e-9 && best_x.abs() <= 1e-4;
    OracleEstimate {
        pair: *pair,
        argmin_x: best_x,
        min_value: best_val,
        f_at_zero: crate::rational::rat_string(&f0),
        works,
        slack,
        grid_points: n_points + 1,
        refinement_iterations: iterations,
        skipped_points: skipped,
    }
}

/// Bisection on the centered finite-difference derivative inside the bracket
/// around a grid minimum; slides to the boundary when the derivative does not
/// change sign (minimum at the edge of the bracket).
fn refine(pair: &PairMN, x0: f64, step: f64, tol: f64) -> (f64, f64, u64) {
    let mut lo = (x0 - step).max(0.0);
    let mut hi = (x0 + step).min(std::f64::consts::PI);
    let mut iters = 0u64;
    let d_lo = centered_derivative(pair, lo.max(1e-9));
    let d_hi = centered_derivative(pair, hi.min(std::f64::consts::PI - 1e-9));
    match (d_lo, d_hi) {
        (Some(dl), Some(dh)) if dl < 0.0 && dh > 0.0 => {
            // Interior minimum: shrink the bracket on the derivative sign.
            for _ in 0..80 {
                iters += 1;
                if hi - lo <= tol {
                    break;
                }
                let mid = 0.5 * (lo + hi);
                match centered_derivative(pair, mid) {
                    Some(d) if d < 0.0 => lo = mid,
                    Some(_) => hi = mid,
                    None => break,
                }
            }
        }
        _ => {
            // Monotone bracket: the minimum sits at an edge; pin it there.
            let edge = match (d_lo, d_hi) {
                (Some(dl), _) if dl >= 0.0 => lo,
                (_, Some(dh)) if dh <= 0.0 => hi,
                _ => x0,
            };
            iters += 1;
            lo = edge;
            hi = edge;
        }
    }
    let x = 0.5 * (lo + hi);
    let x = x.clamp(0.0, std::f64::consts::PI);
    let val = f_value(pair, x).unwrap_or(f64::INFINITY);
    (val, x, iters)
}

/// Condition-(2) check: minimum at 0 within tolerance.
pub fn check_works(pair: &PairMN, density_mult: f64) -> (bool, f64) {
    let est = global_min_f(pair, &OracleConfig::for_pair(pair, density_mult));
    (est.works, est.slack)
}

/// `B_mn`: the global minimum value over one period.
pub fn compute_b_mn(pair: &PairMN, density_mult: f64) -> f64 {
    global_min_f(pair, &OracleConfig::for_pair(pair, density_mult)).min_value
}

/// One row of the slope scan.
#[derive(Clone, Debug, Serialize)]
pub struct SlopeScanRow {
    pub m: u32,
    /// Largest even n with `works = true`.
    pub n_max_works: u32,
    /// `n_max_works / m`.
    pub slope: f64,
    /// Smallest even n >= 2 with `works = false`, if any.
    pub first_failure_n: Option<u32>,
}

/// For each odd `m` in the range, binary-search the even-`n` boundary of
/// `works`. The boundary is empirically monotone; the scan is exploratory
/// data, not a certificate.
pub fn scan_slope(m_from: u32, m_to: u32, density_mult: f64) -> Vec<SlopeScanRow> {
    assert!(m_from % 2 == 1 && m_to % 2 == 1 && m_from >= 3 && m_from <= m_to);
    let ms: Vec<u32> = (m_from..=m_to).step_by(2).collect();
    ms.par_iter()
        .map(|&m| {
            let works = |n: u32| -> bool {
                let pair = PairMN::new(m, n).unwrap();
                check_works(&pair, density_mult).0
            };
            let max_even = if (m - 1) % 2 == 0 { m - 1 } else { m - 2 };
            let (n_max_works, first_failure_n) = if !works(2) {
                (0, Some(2)) // degenerate; not observed for odd m >= 3
            } else if works(max_even) {
                (max_even, None)
            } else {
                // invariant: works(lo), !works(hi); mid stays even
                let (mut lo, mut hi) = (2u32, max_even);
                while hi - lo > 2 {
                    let mid = lo + (hi - lo) / 4 * 2;
                    if works(mid) {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                (lo, Some(hi))
            };
            SlopeScanRow {
                m,
                n_max_works,
                slope: n_max_works as f64 / m as f64,
                first_failure_n,
            }
        })
        .collect()
}

/// Numeric minimum of `F(0.8194, t, 81)` over `t in [2.8, 5.78]` — the
/// grid cross-check of the line-sandwich lemma (never a certificate).
pub fn min_f_08194_probe() -> (f64, f64) {
    let f = |t: f64| crate::certificates::f_numeric(0.8194, t);
    let mut best = (f(2.8), 2.8);
    let n = 29800;
    for i in 0..=n {
        let t = 2.8 + (5.78 - 2.8) * i as f64 / n as f64;
        let v = f(t);
        if v < best.0 {
            best = (v, t);
        }
    }
    // golden-section polish
    let (mut a, mut b) = (best.1 - 1e-3, best.1 + 1e-3);
    let phi = 0.5 * (3.0 - 5.0f64.sqrt());
    for _ in 0..200 {
        let c = a + phi * (b - a);
        let d = b - phi * (b - a);
        if f(c) < f(d) {
            b = d;
        } else {
            a = c;
        }
    }
    let t = 0.5 * (a + b);
    (t, f(t))
}
