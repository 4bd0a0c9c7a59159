use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use super::instance::{build_catalog, Instance, InstanceError};
use super::theorems::{check_theorem_on, ranges_text, TheoremResult, THEOREMS};
use super::VerifyError;

/// A finished sweep, one JSON record per line.
#[derive(Debug, Clone)]
pub struct SweepOutput {
    pub max_order: u64,
    /// Instance and error records in catalog order.
    pub instance_lines: Vec<String>,
    pub results: Vec<TheoremResult>,
    pub errors: Vec<InstanceError>,
    /// SHA-256 of the instance records, newline terminated.
    pub digest: String,
}

impl SweepOutput {
    pub fn any_failed(&self) -> bool {
        self.results.iter().any(|r| !r.passed())
    }

    pub fn resource_capped(&self) -> bool {
        self.errors.iter().any(|e| e.resource_cap)
    }

    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for line in &self.instance_lines {
            out.push_str(line);
            out.push('\n');
        }
        for r in &self.results {
            let mut v = serde_json::to_value(r).expect("serializable");
            v["type"] = json!("theorem");
            out.push_str(&v.to_string());
            out.push('\n');
        }
        let digest = json!({
            "type": "digest",
            "sha256": self.digest,
            "instances": self.instance_lines.len(),
            "ranges": ranges_text(self.max_order),
        });
        out.push_str(&digest.to_string());
        out.push('\n');
        out
    }
}

fn instance_record(inst: &Instance) -> Value {
    let (expected, mismatches, verdict) = match &inst.profile {
        Ok(p) => {
            let m: Vec<Value> = p
                .mismatches(&inst.report)
                .iter()
                .map(|m| json!({"theorem": m.theorem, "expected": m.expected, "observed": m.observed}))
                .collect();
            let verdict = if p.predictions.is_empty() {
                "unconstrained"
            } else if m.is_empty() {
                "pass"
            } else {
                "fail"
            };
            (p.to_json(), m, verdict)
        }
        Err(e) => (json!({"error": e.to_string()}), Vec::new(), "unconstrained"),
    };
    json!({
        "type": "instance",
        "spec": inst.spec.to_string(),
        "order": inst.order(),
        "class": format!("{:?}", inst.class),
        "report": inst.report.to_json(),
        "expected": expected,
        "mismatches": mismatches,
        "verdict": verdict,
    })
}

fn error_record(e: &InstanceError) -> Value {
    json!({
        "type": "error",
        "spec": e.spec.to_string(),
        "order": e.spec.order(),
        "resource_cap": e.resource_cap,
        "message": e.message,
    })
}

fn selected(ids: &[String]) -> Result<Vec<&'static str>, VerifyError> {
    if ids.is_empty() {
        return Ok(THEOREMS.iter().map(|(id, _)| *id).collect());
    }
    ids.iter()
        .map(|id| {
            THEOREMS
                .iter()
                .find(|(t, _)| t == id)
                .map(|(t, _)| *t)
                .ok_or_else(|| VerifyError::UnknownTheorem(id.clone()))
        })
        .collect()
}

/// Runs the selected theorems (all when `ids` is empty) over the catalog up
/// to `max_order`.
pub fn sweep(max_order: u64, ids: &[String], order_cap: usize) -> Result<SweepOutput, VerifyError> {
    let ids = selected(ids)?;
    let (instances, errors) = build_catalog(max_order, order_cap);
    sweep_on(&instances, errors, max_order, &ids)
}

pub fn sweep_on(
    instances: &[Instance],
    errors: Vec<InstanceError>,
    max_order: u64,
    ids: &[&str],
) -> Result<SweepOutput, VerifyError> {
    let mut keyed: Vec<(u64, String, String)> = instances
        .iter()
        .map(|i| (i.order() as u64, i.spec.to_string(), instance_record(i).to_string()))
        .chain(errors.iter().map(|e| {
            (e.spec.order().unwrap_or(u64::MAX), e.spec.to_string(), error_record(e).to_string())
        }))
        .collect();
    keyed.sort();
    let instance_lines: Vec<String> = keyed.into_iter().map(|(_, _, line)| line).collect();

    let mut hasher = Sha256::new();
    for line in &instance_lines {
        hasher.update(line.as_bytes());
        hasher.update(b"\n");
    }
    let digest = format!("{:x}", hasher.finalize());

    let mut results = Vec::new();
    for id in ids {
        let mut r = check_theorem_on(id, instances, max_order)?;
        if !errors.is_empty() {
            r.notes.push(format!("{} catalog groups could not be built", errors.len()));
        }
        results.push(r);
    }
    Ok(SweepOutput {
        max_order,
        instance_lines,
        results,
        errors,
        digest,
    })
}
