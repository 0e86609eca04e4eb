//! Machine-readable reports: JSON with numbers as 17-significant-digit
//! decimal strings (bit-exact diffing across runs), fixed-column CSV, and a
//! human text rendering. Field order is struct order and never changes.

use crate::certificates::{Certificate, StepStatus, Verdict};
use crate::constants::ConstantRow;
use crate::model::PairMN;
use crate::oracle::{OracleEstimate, SlopeScanRow};
use crate::rational::{rat_approx, rat_string};
use serde::Serialize;

/// 17 significant digits — enough to round-trip any f64 exactly.
pub fn dec17(x: f64) -> String {
    if x == f64::INFINITY {
        return "inf".to_string();
    }
    if x == f64::NEG_INFINITY {
        return "-inf".to_string();
    }
    format!("{x:.16e}")
}

#[derive(Serialize)]
pub struct PairReport {
    pub m: u32,
    pub n: u32,
    pub lambda: String,
    pub f_at_zero: String,
    pub g_at_zero: String,
}

impl From<&PairMN> for PairReport {
    fn from(p: &PairMN) -> Self {
        PairReport {
            m: p.m(),
            n: p.n(),
            lambda: dec17(rat_approx(&p.lambda())),
            f_at_zero: rat_string(&p.f_at_zero()),
            g_at_zero: rat_string(&p.g_at_zero()),
        }
    }
}

#[derive(Serialize)]
pub struct ComputedReport {
    pub name: String,
    pub lo: String,
    pub hi: String,
}

#[derive(Serialize)]
pub struct PaperExpectedReport {
    pub name: String,
    pub value: String,
    pub tol: String,
    pub ok: bool,
}

#[derive(Serialize)]
pub struct StepReport {
    pub step_id: String,
    pub status: StepStatus,
    pub computed: Vec<ComputedReport>,
    pub paper_expected: Vec<PaperExpectedReport>,
    pub margin: String,
}

#[derive(Serialize)]
pub struct CertificateReport {
    pub pair: PairReport,
    pub steps: Vec<StepReport>,
    pub verdict: String,
}

pub fn verdict_string(v: &Verdict) -> String {
    match v {
        Verdict::Condition2Holds => "condition_2_holds".to_string(),
        Verdict::Failed { step_id } => format!("failed({step_id})"),
    }
}

impl From<&Certificate> for CertificateReport {
    fn from(c: &Certificate) -> Self {
        CertificateReport {
            pair: PairReport::from(&c.pair),
            steps: c
                .steps
                .iter()
                .map(|s| StepReport {
                    step_id: s.step_id.clone(),
                    status: s.status,
                    computed: s
                        .computed
                        .iter()
                        .map(|v| ComputedReport {
                            name: v.name.clone(),
                            lo: dec17(v.enclosure.lo()),
                            hi: dec17(v.enclosure.hi()),
                        })
                        .collect(),
                    paper_expected: s
                        .paper_expected
                        .iter()
                        .map(|p| PaperExpectedReport {
                            name: p.name.clone(),
                            value: dec17(p.value),
                            tol: dec17(p.tol),
                            ok: p.ok,
                        })
                        .collect(),
                    margin: dec17(s.margin),
                })
                .collect(),
            verdict: verdict_string(&c.verdict),
        }
    }
}

#[derive(Serialize)]
pub struct OracleReport {
    pub m: u32,
    pub n: u32,
    pub argmin_x: String,
    pub min_value: String,
    pub f_at_zero: String,
    pub works: bool,
    pub slack: String,
    pub grid_points: u64,
    pub refinement_iterations: u64,
    pub skipped_points: u64,
}

impl From<&OracleEstimate> for OracleReport {
    fn from(e: &OracleEstimate) -> Self {
        OracleReport {
            m: e.pair.m(),
            n: e.pair.n(),
            argmin_x: dec17(e.argmin_x),
            min_value: dec17(e.min_value),
            f_at_zero: e.f_at_zero.clone(),
            works: e.works,
            slack: dec17(e.slack),
            grid_points: e.grid_points,
            refinement_iterations: e.refinement_iterations,
            skipped_points: e.skipped_points,
        }
    }
}

/// CSV columns: m,n,argmin,min,f0,works,slack (fixed order).
pub fn oracle_csv(estimates: &[OracleEstimate]) -> String {
    let mut out = String::from("m,n,argmin,min,f0,works,slack\n");
    for e in estimates {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            e.pair.m(),
            e.pair.n(),
            dec17(e.argmin_x),
            dec17(e.min_value),
            e.f_at_zero,
            e.works,
            dec17(e.slack)
        ));
    }
    out
}

#[derive(Serialize)]
pub struct ScanRowReport {
    pub m: u32,
    pub n_max_works: u32,
    pub slope: String,
    pub first_failure_n: Option<u32>,
}

impl From<&SlopeScanRow> for ScanRowReport {
    fn from(r: &SlopeScanRow) -> Self {
        ScanRowReport {
            m: r.m,
            n_max_works: r.n_max_works,
            slope: dec17(r.slope),
            first_failure_n: r.first_failure_n,
        }
    }
}

/// CSV columns: m,n_max_works,slope,first_failure_n (fixed order).
pub fn scan_csv(rows: &[SlopeScanRow]) -> String {
    let mut out = String::from("m,n_max_works,slope,first_failure_n\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.m,
            r.n_max_works,
            dec17(r.slope),
            r.first_failure_n.map_or(String::new(), |n| n.to_string())
        ));
    }
    out
}

#[derive(Serialize)]
pub struct ConstantRowReport {
    pub name: String,
    pub lo: String,
    pub hi: String,
    pub paper_value: String,
    pub tol: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
}

impl From<&ConstantRow> for ConstantRowReport {
    fn from(r: &ConstantRow) -> Self {
        ConstantRowReport {
            name: r.name.clone(),
            lo: dec17(r.enclosure.lo()),
            hi: dec17(r.enclosure.hi()),
            paper_value: dec17(r.paper_value),
            tol: dec17(r.tol),
            pass: r.pass,
            exact: r.exact.clone(),
        }
    }
}

/// CSV columns: name,lo,hi,paper_value,tol,pass.
pub fn constants_csv(rows: &[ConstantRow]) -> String {
    let mut out = String::from("name,lo,hi,paper_value,tol,pass\n");
    for r in rows {
        out.push_str(&format!(
            "\"{}\",{},{},{},{},{}\n",
            r.name,
            dec17(r.enclosure.lo()),
            dec17(r.enclosure.hi()),
            dec17(r.paper_value),
            dec17(r.tol),
            r.pass
        ));
    }
    out
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serialization");
    s.push('\n');
    s
}

/// Text rendering of the constants table.
pub fn constants_text(rows: &[ConstantRow]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<44} {:>24} {:>14} {:>9} {}\n",
        "name", "computed (midpoint)", "paper", "tol", "pass"
    ));
    for r in rows {
        let mid = 0.5 * (r.enclosure.lo() + r.enclosure.hi());
        out.push_str(&format!(
            "{:<44} {:>24.16e} {:>14} {:>9.1e} {}\n",
            truncate(&r.name, 44),
            mid,
            r.paper_value,
            r.tol,
            if r.pass { "PASS" } else { "FAIL" }
        ));
    }
    out
}

/// Text rendering of a certificate: one line per step.
pub fn certificate_text(c: &Certificate) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "pair (m, n) = ({}, {}); f(0) = {}, g(0) = {}\n",
        c.pair.m(),
        c.pair.n(),
        rat_string(&c.pair.f_at_zero()),
        rat_string(&c.pair.g_at_zero())
    ));
    for s in &c.steps {
        out.push_str(&format!(
            "  {:<18} {:?}  margin {:.3e}  ({} checks, {} reference values)\n",
            s.step_id,
            s.status,
            s.margin,
            s.computed.len(),
            s.paper_expected.len()
        ));
    }
    out.push_str(&format!("verdict: {}\n", verdict_string(&c.verdict)));
    out
}

fn truncate(s: &str, n: usize) -> String {
    if s.len() <= n {
        s.to_string()
    } else {
        format!("{}...", &s[..n - 3])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dec17_round_trips() {
        for x in [0.1, -1.0076, 2.1900540752468981e-4, 1.0, 0.0] {
            let s = dec17(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back, x, "{s}");
        }
    }

    #[test]
    fn csv_headers_are_stable() {
        assert!(oracle_csv(&[]).starts_with("m,n,argmin,min,f0,works,slack\n"));
        assert!(scan_csv(&[]).starts_with("m,n_max_works,slope,first_failure_n\n"));
        assert!(constants_csv(&[]).starts_with("name,lo,hi,paper_value,tol,pass\n"));
    }
}
