//! Machine-readable command reports.
//!
//! Classes serialize as lists of `[x-exponent, y-exponent, monomial,
//! integer]` tuples; integers that do not fit in `i64` become decimal
//! strings. Output depends only on the config, the seed and the case count.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};

use crate::classes::{OrientedRealBundle, VirtualBundle};
use crate::poly::{EquivClass, LaurentClass, Quadruple};
use crate::ring::{BaseClass, Ring};
use crate::sw::SWFunctional;

pub fn int_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

fn quads_json(q: Vec<Quadruple>) -> Value {
    Value::Array(
        q.into_iter()
            .map(|(i, j, m, c)| json!([i, j, m, int_json(&c)]))
            .collect(),
    )
}

pub fn base_json(b: &BaseClass) -> Value {
    let ring = b.ring();
    Value::Array(
        b.terms()
            .iter()
            .map(|(k, c)| json!([0, 0, ring.name_of(*k), int_json(c)]))
            .collect(),
    )
}

pub fn equiv_json(c: &EquivClass) -> Value {
    quads_json(c.to_quadruples())
}

pub fn laurent_json(c: &LaurentClass) -> Value {
    quads_json(c.to_quadruples())
}

pub fn bundle_json(v: &VirtualBundle) -> Value {
    json!({"rank": v.rank(), "chern": base_json(v.total_chern())})
}

pub fn real_bundle_json(h: &OrientedRealBundle) -> Value {
    json!({"rank": h.rank(), "euler": base_json(h.euler())})
}

pub fn sw_json(f: &SWFunctional) -> Value {
    json!({
        "shift": f.shift(),
        "values": f.values().iter().map(base_json).collect::<Vec<_>>(),
    })
}

pub fn ring_json(label: &str, ring: &Ring) -> Value {
    json!({
        "label": label,
        "generators": ring.generators().iter().map(|g| json!([g.name, g.degree])).collect::<Vec<_>>(),
        "basis": ring.basis().iter().map(|b| b.name.clone()).collect::<Vec<_>>(),
        "truncation": ring.truncation(),
    })
}

/// One named output with its exact value and a human-readable rendering.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Entry {
    pub key: String,
    pub value: Value,
    pub display: String,
}

/// Outcome of one property check.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Verdict {
    pub name: String,
    pub title: String,
    pub passed: bool,
    pub cases: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

impl Verdict {
    pub fn single(name: &str, title: &str, passed: bool, counterexample: Option<Value>) -> Self {
        Self {
            name: name.into(),
            title: title.into(),
            passed,
            cases: 1,
            failures: usize::from(!passed),
            counterexample: if passed { None } else { counterexample },
        }
    }

    pub fn line(&self) -> String {
        format!(
            "{} {} {} ({} cases, {} failures)",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.title,
            self.cases,
            self.failures
        )
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cases: Option<usize>,
    pub results: Vec<Entry>,
    pub verdicts: Vec<Verdict>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.into(),
            seed: None,
            cases: None,
            results: Vec::new(),
            verdicts: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, key: impl Into<String>, value: Value, display: impl Into<String>) {
        self.results.push(Entry {
            key: key.into(),
            value,
            display: display.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        if let Some(s) = self.seed {
            out += &format!("seed: {s}\n");
        }
        if let Some(c) = self.cases {
            out += &format!("cases: {c}\n");
        }
        for e in &self.results {
            out += &format!("{} = {}\n", e.key, e.display);
        }
        for v in &self.verdicts {
            out += &v.line();
            out.push('\n');
            if let Some(c) = &v.counterexample {
                out += &format!("  counterexample: {c}\n");
            }
        }
        for n in &self.notes {
            out += &format!("note: {n}\n");
        }
        out += &format!("status: {}\n", if self.passed() { "ok" } else { "FAILED" });
        out
    }
}
