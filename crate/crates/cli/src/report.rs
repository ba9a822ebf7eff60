//! Rendering condition reports and statistics as text or JSON.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use frankl_core::{ConditionId, ConditionReport, Status, Verdict};
use serde_json::{json, Map, Value};

fn verdict_json(v: &Verdict) -> Value {
    let mut m = Map::new();
    m.insert("status".into(), json!(v.status.as_str()));
    m.insert("witnesses".into(), json!(v.witnesses));
    if let Some(cap) = v.cap {
        m.insert("cap".into(), json!(cap));
    }
    Value::Object(m)
}

/// `{cert, n, caps, extremal, remark_level, conditions: {key: verdict}}`.
pub fn report_json(r: &ConditionReport) -> Value {
    let conditions: Map<String, Value> = r
        .verdicts
        .iter()
        .map(|(id, v)| (id.key().to_string(), verdict_json(v)))
        .collect();
    let remark: Vec<&str> = ConditionId::ALL
        .iter()
        .filter(|id| id.is_remark_level())
        .map(|id| id.key())
        .collect();
    json!({
        "cert": r.cert.to_string(),
        "n": r.n,
        "caps": {
            "meet_subset": r.caps.meet_subset,
            "sublattice_subset": r.caps.sublattice_subset,
            "sublattice_lattice": r.caps.sublattice_lattice,
        },
        "extremal": {
            "bottom": r.extremal.bottom,
            "top": r.extremal.top,
            "bottom_meet_irreducible": r.extremal.bottom_meet_irreducible,
            "top_join_irreducible": r.extremal.top_join_irreducible,
        },
        "remark_level": remark,
        "conditions": conditions,
    })
}

fn witness_text(w: &[usize]) -> String {
    let ids: Vec<String> = w.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", ids.join(","))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn report_text(r: &ConditionReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "lattice: {} elements, cert {}", r.n, r.cert);
    let _ = writeln!(
        s,
        "bottom {} (meet-irreducible: {}), top {} (join-irreducible: {})",
        r.extremal.bottom,
        yes_no(r.extremal.bottom_meet_irreducible),
        r.extremal.top,
        yes_no(r.extremal.top_join_irreducible)
    );
    let _ = writeln!(
        s,
        "caps: meet subsets <= {}, sublattice subsets <= {} on lattices <= {}",
        r.caps.meet_subset, r.caps.sublattice_subset, r.caps.sublattice_lattice
    );
    for (id, v) in &r.verdicts {
        let mut line = format!("{:<12} {:<7}", id.key(), v.status.as_str());
        if !v.witnesses.is_empty() {
            let ws: Vec<String> = v.witnesses.iter().map(|w| witness_text(w)).collect();
            line.push(' ');
            line.push_str(&ws.join(" "));
        }
        if let Some(cap) = v.cap {
            let _ = write!(line, " (cap {cap})");
        }
        if id.is_remark_level() {
            line.push_str(" (remark)");
        }
        let _ = writeln!(s, "{}", line.trim_end());
    }
    let failing = r.failing().len();
    let _ = writeln!(s, "failing: {failing} of {}", r.verdicts.len());
    s
}

/// Per-condition outcome tallies over a set of lattices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub holds: usize,
    pub fails: usize,
    pub skipped: usize,
}

impl Tally {
    pub fn add(&mut self, status: Status) {
        match status {
            Status::Holds => self.holds += 1,
            Status::Fails => self.fails += 1,
            Status::Skipped => self.skipped += 1,
        }
    }
}

pub fn stats_json(n: usize, lattices: usize, tallies: &BTreeMap<ConditionId, Tally>) -> Value {
    let conditions: Map<String, Value> = tallies
        .iter()
        .map(|(id, t)| {
            (
                id.key().to_string(),
                json!({ "holds": t.holds, "fails": t.fails, "skipped": t.skipped }),
            )
        })
        .collect();
    json!({ "n": n, "lattices": lattices, "conditions": conditions })
}

pub fn stats_text(n: usize, lattices: usize, tallies: &BTreeMap<ConditionId, Tally>) -> String {
    let mut s = format!("size {n}: {lattices} lattices\n");
    for (id, t) in tallies {
        let _ = write!(s, "{:<12} fails {:>5}", id.key(), t.fails);
        if t.skipped > 0 {
            let _ = write!(s, "  skipped {}", t.skipped);
        }
        s.push('\n');
    }
    s
}
