//! Report types printed by the CLI, as JSON or as plain text tables.

use crate::groups::FiniteGroup;
use crate::numtheory::{euler_phi, Factorization};
use crate::powergraph::ClassPartition;
use crate::theorems::{Check, CheckStatus, KappaCase, VerificationReport};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;

#[derive(Debug, Clone, Serialize)]
pub struct ClosedForm {
    pub case: KappaCase,
    pub value: Option<u64>,
}

/// Field order here is the JSON key order.
#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub n: u64,
    pub factorization: Vec<(u64, u32)>,
    pub phi: u64,
    pub class_count: usize,
    /// Divisor `d` of `n` mapped to `|[d]| = phi(n/d)`.
    pub class_sizes: BTreeMap<u64, u64>,
    /// Vertex count of the reduced graph, null when it is the null graph.
    pub reduced_graph_vertices: Option<usize>,
    pub kappa_closed_form: ClosedForm,
    pub xi1: Option<u64>,
    pub xi2: Option<u64>,
    pub kappa_exact: Option<usize>,
    pub witness: Vec<String>,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassSummary {
    pub representative: String,
    pub element_order: usize,
    pub size: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupReport {
    pub name: String,
    pub order: usize,
    pub abelian: bool,
    pub cyclic: bool,
    pub class_count: usize,
    pub classes: Vec<ClassSummary>,
    pub kappa_exact: Option<usize>,
    pub witness: Vec<String>,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PGroupReport {
    pub group: String,
    pub p: u64,
    pub exponents: Vec<u32>,
    pub order: usize,
    pub components: usize,
    pub formula: u64,
    /// Elements of order `p` in each component of the proper power graph,
    /// components ordered by least element.
    pub order_p_per_component: Vec<usize>,
    pub order_p_universal: bool,
    pub kappa_exact: Option<usize>,
    pub checks: Vec<Check>,
}

/// One line of `verify` output.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyRecord {
    pub n: u64,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub kappa: Option<usize>,
    pub checks: Vec<Check>,
}

impl VerifyRecord {
    pub fn new(n: u64, report: VerificationReport) -> Self {
        VerifyRecord {
            n,
            passed: report.count(CheckStatus::Pass),
            failed: report.count(CheckStatus::Fail),
            skipped: report.count(CheckStatus::Skipped),
            kappa: report.kappa,
            checks: report.checks,
        }
    }
}

pub fn class_sizes(n: u64, divisors: &[u64]) -> BTreeMap<u64, u64> {
    divisors
        .iter()
        .map(|&d| (d, euler_phi(n / d).expect("d divides n")))
        .collect()
}

pub fn class_summaries(g: &FiniteGroup, classes: &ClassPartition) -> Vec<ClassSummary> {
    classes
        .blocks()
        .iter()
        .map(|b| ClassSummary {
            representative: g.label(b[0]),
            element_order: g.element_order(b[0]),
            size: b.len(),
        })
        .collect()
}

pub fn labels(g: &FiniteGroup, elements: &[usize]) -> Vec<String> {
    let mut sorted = elements.to_vec();
    sorted.sort_unstable();
    sorted.iter().map(|&x| g.label(x)).collect()
}

pub fn format_factorization(f: &Factorization) -> String {
    f.factors()
        .iter()
        .map(|&(p, a)| if a == 1 { p.to_string() } else { format!("{p}^{a}") })
        .collect::<Vec<_>>()
        .join(" * ")
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn status_word(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "PASS",
        CheckStatus::Fail => "FAIL",
        CheckStatus::Skipped => "SKIP",
    }
}

fn render_checks(out: &mut String, checks: &[Check]) {
    if checks.is_empty() {
        return;
    }
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    out.push_str("checks:\n");
    for c in checks {
        let _ = writeln!(out, "  {} {:width$}  {}", status_word(c.status), c.name, c.detail);
    }
}

fn row(out: &mut String, key: &str, value: impl std::fmt::Display) {
    let _ = writeln!(out, "{key:<18}{value}");
}

impl AnalysisReport {
    pub fn render(&self, factorization: &str) -> String {
        let mut out = String::new();
        row(&mut out, "n", self.n);
        row(&mut out, "factorization", factorization);
        row(&mut out, "phi", self.phi);
        row(&mut out, "classes", self.class_count);
        let sizes: Vec<String> = self.class_sizes.iter().map(|(d, s)| format!("{d}:{s}")).collect();
        row(&mut out, "class sizes", sizes.join(" "));
        row(
            &mut out,
            "reduced graph",
            self.reduced_graph_vertices
                .map_or_else(|| "null".to_string(), |v| format!("{v} vertices")),
        );
        row(
            &mut out,
            "closed form",
            format!("{:?} {}", self.kappa_closed_form.case, opt(self.kappa_closed_form.value)),
        );
        row(&mut out, "xi1", opt(self.xi1));
        row(&mut out, "xi2", opt(self.xi2));
        row(&mut out, "kappa", self.kappa_exact.map_or("skipped".to_string(), |k| k.to_string()));
        if self.kappa_exact.is_some() {
            row(&mut out, "witness", format!("{{{}}}", self.witness.join(",")));
        }
        render_checks(&mut out, &self.checks);
        out
    }
}

impl GroupReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        row(&mut out, "group", &self.name);
        row(&mut out, "order", self.order);
        row(&mut out, "abelian", self.abelian);
        row(&mut out, "cyclic", self.cyclic);
        row(&mut out, "classes", self.class_count);
        for c in &self.classes {
            let _ = writeln!(out, "  [{}] order {} size {}", c.representative, c.element_order, c.size);
        }
        row(&mut out, "kappa", self.kappa_exact.map_or("skipped".to_string(), |k| k.to_string()));
        if self.kappa_exact.is_some() {
            row(&mut out, "witness", format!("{{{}}}", self.witness.join(",")));
        }
        render_checks(&mut out, &self.checks);
        out
    }
}

impl PGroupReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        row(&mut out, "group", &self.group);
        row(&mut out, "order", self.order);
        row(&mut out, "components", self.components);
        row(&mut out, "formula", self.formula);
        let counts: Vec<String> = self.order_p_per_component.iter().map(|c| c.to_string()).collect();
        row(&mut out, "order-p counts", counts.join(" "));
        row(&mut out, "order-p universal", self.order_p_universal);
        row(&mut out, "kappa", self.kappa_exact.map_or("skipped".to_string(), |k| k.to_string()));
        render_checks(&mut out, &self.checks);
        out
    }
}

impl VerifyRecord {
    pub fn render(&self) -> String {
        let mut out = format!(
            "n={:<6} pass={:<3} fail={:<3} skip={:<3} kappa={}\n",
            self.n,
            self.passed,
            self.failed,
            self.skipped,
            opt(self.kappa)
        );
        for c in self.checks.iter().filter(|c| c.status == CheckStatus::Fail) {
            let _ = writeln!(out, "  FAIL {}  {}", c.name, c.detail);
        }
        out
    }
}
