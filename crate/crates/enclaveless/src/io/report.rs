//! Sweep record emission: a human table and machine-readable JSON lines.
//!
//! Record field names are part of the external interface and fixed:
//! `graph6, n, gamma, Gamma, psi, Psi, alpha, IR, psg_plus, psg_minus, gg,
//! ggp, checks`.

use serde::Serialize;

use crate::invariants::InvariantReport;

/// Outcome of one named check on one graph. Failed checks carry the
/// witnessing numbers in `detail`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Everything recorded about one swept graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRecord {
    pub graph6: String,
    pub n: usize,
    pub gamma: usize,
    #[serde(rename = "Gamma")]
    pub upper_gamma: usize,
    pub psi: usize,
    #[serde(rename = "Psi")]
    pub upper_psi: usize,
    pub alpha: usize,
    #[serde(rename = "IR")]
    pub ir: Option<usize>,
    pub psg_plus: usize,
    pub psg_minus: usize,
    pub gg: Option<usize>,
    pub ggp: Option<usize>,
    pub checks: Vec<CheckResult>,
}

impl SweepRecord {
    pub fn new(
        graph6: String,
        report: &InvariantReport,
        psg_plus: usize,
        psg_minus: usize,
        gg: Option<usize>,
        ggp: Option<usize>,
        checks: Vec<CheckResult>,
    ) -> SweepRecord {
        SweepRecord {
            graph6,
            n: report.n,
            gamma: report.gamma,
            upper_gamma: report.upper_gamma,
            psi: report.psi,
            upper_psi: report.upper_psi,
            alpha: report.alpha,
            ir: report.ir,
            psg_plus,
            psg_minus,
            gg,
            ggp,
            checks,
        }
    }

    pub fn violations(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}

/// Renders records as an aligned human-readable table.
pub fn emit_table(records: &[SweepRecord]) -> String {
    let header = [
        "graph6", "n", "gamma", "Gamma", "psi", "Psi", "alpha", "IR", "psg+", "psg-", "gg", "ggp",
        "checks",
    ];
    let mut rows: Vec<Vec<String>> = vec![header.iter().map(|s| s.to_string()).collect()];
    for r in records {
        let checks = if r.checks.is_empty() {
            "-".to_string()
        } else {
            let failed: Vec<_> = r.violations().map(|c| c.name.as_str()).collect();
            if failed.is_empty() {
                format!("ok({})", r.checks.len())
            } else {
                format!("FAIL:{}", failed.join(","))
            }
        };
        rows.push(vec![
            r.graph6.clone(),
            r.n.to_string(),
            r.gamma.to_string(),
            r.upper_gamma.to_string(),
            r.psi.to_string(),
            r.upper_psi.to_string(),
            r.alpha.to_string(),
            opt(r.ir),
            r.psg_plus.to_string(),
            r.psg_minus.to_string(),
            opt(r.gg),
            opt(r.ggp),
            checks,
        ]);
    }
    let widths: Vec<usize> = (0..header.len())
        .map(|c| rows.iter().map(|row| row[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &rows {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// Renders records as JSON lines with the fixed field names.
pub fn emit_records(records: &[SweepRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("record serializes"));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> SweepRecord {
        SweepRecord {
            graph6: "Bw".into(),
            n: 3,
            gamma: 1,
            upper_gamma: 1,
            psi: 2,
            upper_psi: 2,
            alpha: 1,
            ir: Some(1),
            psg_plus: 2,
            psg_minus: 2,
            gg: None,
            ggp: None,
            checks: vec![CheckResult {
                name: "gamma-psi-identity".into(),
                pass: true,
                detail: String::new(),
            }],
        }
    }

    #[test]
    fn records_use_fixed_field_names() {
        let json = emit_records(&[sample()]);
        let value: serde_json::Value = serde_json::from_str(json.trim()).unwrap();
        for field in [
            "graph6",
            "n",
            "gamma",
            "Gamma",
            "psi",
            "Psi",
            "alpha",
            "IR",
            "psg_plus",
            "psg_minus",
            "gg",
            "ggp",
            "checks",
        ] {
            assert!(value.get(field).is_some(), "missing field {field}");
        }
        assert_eq!(value["Gamma"], 1);
        assert_eq!(value["gg"], serde_json::Value::Null);
    }

    #[test]
    fn table_is_deterministic_and_aligned() {
        let a = emit_table(&[sample(), sample()]);
        let b = emit_table(&[sample(), sample()]);
        assert_eq!(a, b);
        assert!(a.lines().next().unwrap().starts_with("graph6"));
        assert_eq!(a.lines().count(), 3);
    }
}
