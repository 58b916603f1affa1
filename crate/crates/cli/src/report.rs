//! Experiment reports and their JSON form.

use std::fmt::Write;

use chowlab_core::coeff::FieldElement;
use chowlab_core::poly::Polynomial;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Tag {
    /// a value printed in the source computation
    Paper,
    /// forced by definitions
    Trivial,
    /// an independent cross-check
    Derived,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub tag: Tag,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub id: String,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

/// Canonical string of a field element, e.g. `-5/3*a-5/3`.
pub fn fe(x: &FieldElement) -> String {
    x.to_string()
}

pub fn fes<'a>(xs: impl IntoIterator<Item = &'a FieldElement>) -> Vec<String> {
    xs.into_iter().map(fe).collect()
}

/// Polynomial with unit exponents kept, e.g. `w^1*x^4*z^1`.
pub fn poly(p: &Polynomial) -> String {
    p.render_with(true)
}

pub fn polys<'a>(ps: impl IntoIterator<Item = &'a Polynomial>) -> Vec<String> {
    ps.into_iter().map(poly).collect()
}

fn json(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("serializable value")
}

impl Report {
    pub fn new(id: &str) -> Self {
        Report {
            id: id.to_string(),
            inputs: Map::new(),
            results: Map::new(),
            checks: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn input(&mut self, key: &str, v: impl Serialize) {
        self.inputs.insert(key.to_string(), json(v));
    }

    pub fn result(&mut self, key: &str, v: impl Serialize) {
        self.results.insert(key.to_string(), json(v));
    }

    /// A check with an explicit verdict.
    pub fn check(
        &mut self,
        name: &str,
        tag: Tag,
        expected: impl Serialize,
        computed: impl Serialize,
        pass: bool,
    ) {
        self.checks.push(Check {
            name: name.to_string(),
            tag,
            expected: json(expected),
            computed: json(computed),
            pass,
        });
    }

    /// A check that passes iff both sides serialize identically.
    pub fn check_eq(
        &mut self,
        name: &str,
        tag: Tag,
        expected: impl Serialize,
        computed: impl Serialize,
    ) {
        let (e, c) = (json(expected), json(computed));
        let pass = e == c;
        self.check(name, tag, e, c, pass);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable report") + "\n"
    }

    /// The JSON form with the wall time zeroed, as stored in golden files.
    pub fn canonical_json(&self) -> String {
        Report {
            elapsed_ms: 0,
            ..self.clone()
        }
        .to_json()
    }

    /// Human-readable summary, one line per check.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        let passed = self.checks.iter().filter(|c| c.pass).count();
        writeln!(
            s,
            "{}: {passed}/{} checks passed ({} ms)",
            self.id,
            self.checks.len(),
            self.elapsed_ms
        )
        .unwrap();
        for c in &self.checks {
            let verdict = if c.pass { "PASS" } else { "FAIL" };
            writeln!(s, "  [{verdict}] {} ({:?})", c.name, c.tag).unwrap();
            if !c.pass {
                writeln!(s, "    expected: {}", c.expected).unwrap();
                writeln!(s, "    computed: {}", c.computed).unwrap();
            }
        }
        s
    }
}
