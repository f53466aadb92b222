//! Check records, battery reports and their JSON/CSV/human renderings.

use std::fmt::Write as _;

use serde::Serialize;

pub const SCHEMA_VERSION: &str = "1";

/// Keys every check record may cite as its reference, with a short description.
pub const REFERENCES: &[(&str, &str)] = &[
    ("algebra.compose", "SL(2,C) composition rule and B(k) homomorphism"),
    ("algebra.lorentz-map", "spinor to Lorentz map L(k, k*)"),
    ("algebra.dirac-basis", "Weyl and Majorana Dirac bases, Clifford relations"),
    ("algebra.bispinor-expansion", "basis-independent expansion of S"),
    ("lorentz.mult-table", "multiplication table of M, M', N, 'N"),
    ("lorentz.group-relations", "squares and (anti)commutation of the six covering groups"),
    ("lorentz.swap", "F S(k, k-bar*) = S(k-bar*, k) F"),
    ("lorentz.sign-closure", "negated generators generate the same discrete set"),
    ("lorentz.similarity", "similarity witness A between covering groups"),
    ("lorentz.rep-table", "representation sign functions f(g)"),
    ("lorentz.rep-equivalence", "F-conjugation and trace inequivalence of T1..T4"),
    ("lorentz.vector-rep", "four vector representations f1..f4 of the full Lorentz group"),
    ("lorentz.partly-extended", "one-generator extensions and their single representation"),
    ("lorentz.majorana-scan", "reality of the covering groups in a Majorana basis"),
    ("spatial.xi-map", "pseudo-vector spinor xi and its reconstruction"),
    ("spatial.eta-map", "proper-vector spinor eta and its reconstruction"),
    ("spatial.dir-deriv", "directional-derivative equations for xi and eta"),
    ("spatial.cauchy-riemann", "modified Cauchy-Riemann relations"),
    ("spatial.transmutation", "xi <-> eta transmutation"),
    ("spatial.charts", "curvilinear charts and doubled domains"),
    ("spatial.curvilinear-ode", "chart-coordinate derivative equations"),
    ("kfg.chart", "parabolic cylindrical coordinates"),
    ("kfg.separation", "separation of variables and rescaling"),
    ("kfg.series", "even/odd series recurrences"),
    ("kfg.ode", "canonical parabolic-cylinder equation residual"),
    ("kfg.parity", "point-inversion eigenvalues of the four classes"),
    ("kfg.boundary", "sign relations on the coordinate axes"),
    ("kfg.a-operator", "diagonalized separation operator A"),
    ("kfg.orthogonality", "orthogonality integrals I0..I6"),
    ("kfg.selection", "selection-rule tables for x, y, u, v"),
    ("kfg.schrodinger", "Schrodinger variant of the separation"),
    ("plumbing", "artifact plumbing"),
];

pub fn is_known_reference(key: &str) -> bool {
    REFERENCES.iter().any(|(k, _)| *k == key)
}

/// One verified relation.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct CheckRecord {
    pub name: String,
    pub reference: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relation: Option<String>,
    pub expected: String,
    pub got: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckRecord {
    /// Numeric check: passes when `residual <= tolerance`.
    pub fn residual(name: impl Into<String>, reference: &'static str, residual: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            reference,
            group: None,
            relation: None,
            expected: format!("<= {tolerance:e}"),
            got: format!("{residual:e}"),
            residual,
            tolerance,
            pass: residual <= tolerance,
        }
    }

    /// Exact equality of rendered values.
    pub fn equal(name: impl Into<String>, reference: &'static str, expected: impl ToString, got: impl ToString) -> Self {
        let (expected, got) = (expected.to_string(), got.to_string());
        let pass = expected == got;
        Self {
            name: name.into(),
            reference,
            group: None,
            relation: None,
            expected,
            got,
            residual: if pass { 0.0 } else { 1.0 },
            tolerance: 0.0,
            pass,
        }
    }

    pub fn flag(name: impl Into<String>, reference: &'static str, pass: bool, expected: impl ToString, got: impl ToString) -> Self {
        let mut r = Self::equal(name, reference, expected, got);
        r.pass = pass;
        r.residual = if pass { 0.0 } else { 1.0 };
        r
    }

    pub fn with_group(mut self, group: impl Into<String>) -> Self {
        self.group = Some(group.into());
        self
    }

    pub fn with_relation(mut self, relation: impl Into<String>) -> Self {
        self.relation = Some(relation.into());
        self
    }

    /// Re-judge a numeric record against a new tolerance.
    pub fn retolerate(&mut self, tolerance: f64) {
        self.tolerance = tolerance;
        self.expected = format!("<= {tolerance:e}");
        self.pass = self.residual <= tolerance;
    }
}

#[derive(Clone, Debug, Default, Serialize, PartialEq)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

/// Known discrepancy in the source material surfaced alongside the checks.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Flag {
    pub name: String,
    pub reference: &'static str,
    pub note: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub battery: String,
    pub config: serde_json::Value,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
    pub flags: Vec<Flag>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub tables: Vec<serde_json::Value>,
}

impl Report {
    pub fn new(battery: impl Into<String>, config: serde_json::Value) -> Self {
        Self {
            schema: SCHEMA_VERSION,
            battery: battery.into(),
            config,
            checks: Vec::new(),
            summary: Summary::default(),
            flags: Vec::new(),
            tables: Vec::new(),
        }
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.checks.push(record);
    }

    pub fn extend(&mut self, records: impl IntoIterator<Item = CheckRecord>) {
        self.checks.extend(records);
    }

    pub fn flag(&mut self, name: impl Into<String>, reference: &'static str, note: impl Into<String>) {
        self.flags.push(Flag { name: name.into(), reference, note: note.into() });
    }

    pub fn skip(&mut self, n: usize) {
        self.summary.skipped += n;
    }

    pub fn finish(&mut self) {
        self.summary.total = self.checks.len();
        self.summary.passed = self.checks.iter().filter(|c| c.pass).count();
        self.summary.failed = self.summary.total - self.summary.passed;
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["name", "reference", "group", "relation", "expected", "got", "residual", "tolerance", "pass"])
            .expect("in-memory write");
        for c in &self.checks {
            w.write_record([
                c.name.as_str(),
                c.reference,
                c.group.as_deref().unwrap_or(""),
                c.relation.as_deref().unwrap_or(""),
                &c.expected,
                &c.got,
                &format!("{:e}", c.residual),
                &format!("{:e}", c.tolerance),
                if c.pass { "true" } else { "false" },
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }

    pub fn to_human(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "battery: {}", self.battery);
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            let scope = c.group.as_deref().map(|g| format!(" [{g}]")).unwrap_or_default();
            let _ = writeln!(s, "{tag} {}{scope}: expected {}, got {}", c.name, c.expected, c.got);
        }
        for f in &self.flags {
            let _ = writeln!(s, "NOTE {}: {}", f.name, f.note);
        }
        let _ = writeln!(
            s,
            "{} checks, {} passed, {} failed, {} skipped",
            self.summary.total, self.summary.passed, self.summary.failed, self.summary.skipped
        );
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residual_record_judges_tolerance() {
        let mut r = CheckRecord::residual("x", "plumbing", 1e-13, 1e-12);
        assert!(r.pass);
        r.retolerate(1e-20);
        assert!(!r.pass);
    }

    #[test]
    fn report_summary_and_json() {
        let mut rep = Report::new("demo", serde_json::json!({"seed": 1}));
        rep.push(CheckRecord::equal("a", "plumbing", 1, 1));
        rep.push(CheckRecord::equal("b", "plumbing", 1, 2));
        rep.skip(3);
        rep.finish();
        assert_eq!(rep.summary, Summary { total: 2, passed: 1, failed: 1, skipped: 3 });
        let v: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
        assert_eq!(v["schema"], "1");
        assert_eq!(v["checks"][1]["pass"], false);
        assert_eq!(rep.to_csv().lines().count(), 3);
    }

    #[test]
    fn registry_keys_are_unique() {
        for (i, (k, _)) in REFERENCES.iter().enumerate() {
            assert!(REFERENCES[i + 1..].iter().all(|(j, _)| j != k), "{k}");
        }
    }
}
