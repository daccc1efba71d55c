//! Versioned JSON verification reports and their stdout summary.

use std::fmt::Write as _;

use preproj_core::field::Field;
use preproj_core::module::ModuleRep;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::instance::InstanceDescriptor;

pub const REPORT_SCHEMA: &str = "preproj-verification-report";
pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub suite: String,
    /// The statement being checked, in plain notation.
    pub statement: String,
    pub status: Status,
    /// How many instances of the statement were examined.
    pub items: usize,
    pub details: Map<String, Value>,
    /// Present exactly when the status is `fail`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    /// Present exactly when the status is `skipped`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub wall_time_ms: f64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleInfo {
    pub seed: u64,
    pub size: usize,
    /// Labels of the sampled group elements, in canonical order.
    pub elements: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: String,
    pub schema_version: u32,
    pub instance: InstanceDescriptor,
    pub instance_hash: String,
    pub suite: String,
    pub algebra_dim: usize,
    pub weyl_order: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sample: Option<SampleInfo>,
    pub checks: Vec<CheckEntry>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(
        instance: InstanceDescriptor,
        suite: &str,
        algebra_dim: usize,
        weyl_order: usize,
        sample: Option<SampleInfo>,
        checks: Vec<CheckEntry>,
    ) -> Self {
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        VerificationReport {
            schema: REPORT_SCHEMA.to_string(),
            schema_version: REPORT_SCHEMA_VERSION,
            instance_hash: instance.hash(),
            instance,
            suite: suite.to_string(),
            algebra_dim,
            weyl_order,
            sample,
            checks,
            summary,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn check(&self, name: &str) -> Option<&CheckEntry> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The JSON with timing zeroed, which is byte-identical across runs.
    pub fn to_json_without_timing(&self) -> String {
        let mut copy = self.clone();
        for c in &mut copy.checks {
            c.wall_time_ms = 0.0;
        }
        copy.to_json()
    }

    pub fn summary_table(&self) -> String {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(5).max(5);
        let mut out = String::new();
        let _ = writeln!(out, "{:<14} {:<width$} {:<8} {:>6} {:>10}", "suite", "check", "status", "items", "time(ms)");
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{:<14} {:<width$} {:<8} {:>6} {:>10.1}",
                c.suite,
                c.name,
                c.status.as_str(),
                c.items,
                c.wall_time_ms
            );
        }
        let s = self.summary;
        let _ = writeln!(out, "{} pass, {} fail, {} skipped", s.pass, s.fail, s.skipped);
        out
    }
}

/// A module as dimension vector plus the matrices of the generator actions,
/// with coefficients in canonical text form.
pub fn module_json<K: Field>(m: &ModuleRep<K>) -> Value {
    let alg = m.algebra();
    let k = m.field();
    let generators: Vec<Value> = alg
        .generators()
        .iter()
        .enumerate()
        .map(|(g, &b)| {
            let mat = m.generator_action(g);
            let rows: Vec<Vec<String>> =
                (0..mat.rows()).map(|r| (0..mat.cols()).map(|c| k.format(mat.get(r, c))).collect()).collect();
            json!({ "generator": alg.label(b), "matrix": rows })
        })
        .collect();
    json!({
        "side": format!("{:?}", m.side()).to_lowercase(),
        "dims": m.dims(),
        "generators": generators,
    })
}
