//! Ring catalogs, invariant rows and the checks run over them.

mod catalog;
mod checks;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::domination::{domination_number, total_domination_number};
use crate::dsl::{self, DslError};
use crate::ext::ExtNat;
use crate::graph::{build_zdg, GraphError, ZeroDivisorGraph};
use crate::ring::FiniteRing;

pub use catalog::{catalog_default, Catalog, CatalogBounds, SPECIAL_RINGS};
pub use checks::{
    check_clique_lemma, check_consistency, check_girth_consequences, check_girth_inf_cases,
    check_gamma_one, check_main_theorem, check_metric_bounds, check_total_one, CheckResult,
    Verdict, CHECK_NAMES, CLIQUE_LEMMA, CONSISTENCY, GAMMA_ONE, GIRTH_CONSEQUENCES,
    GIRTH_INF_CASES, MAIN_THEOREM, METRIC_BOUNDS, TOTAL_ONE,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarnessOptions {
    /// Largest `|Z(R)*|` for which minimum total dominating sets are enumerated.
    pub clique_cap: usize,
    pub enumeration_cap: usize,
}

impl Default for HarnessOptions {
    fn default() -> Self {
        HarnessOptions {
            clique_cap: 30,
            enumeration_cap: crate::domination::DEFAULT_ENUMERATION_CAP,
        }
    }
}

/// Everything computed about one ring. Element-valued fields hold labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantRow {
    pub spec: String,
    pub order: usize,
    pub z_star: usize,
    pub gamma: usize,
    pub gamma_witness: Vec<String>,
    pub gamma_t: ExtNat,
    pub gamma_t_witness: Option<Vec<String>>,
    pub girth: ExtNat,
    pub diameter: ExtNat,
    pub connected: bool,
    /// Idempotent `e` with `eR = Z_2` and `(1-e)R` a domain.
    pub z2xd: Option<String>,
    /// Idempotent `e` with `eR = Z_2` and `(1-e)R` local of order 4 but not a field.
    pub z2_local4: Option<String>,
    /// Least `a` with `ann(a) = Z(R)`.
    pub ann_witness: Option<String>,
    pub universal: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RowError {
    #[error(transparent)]
    Spec(#[from] DslError),
    #[error("empty zero-divisor graph: {0} is a domain")]
    Domain(String),
}

impl From<GraphError> for RowError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::EmptyGraph(label) => RowError::Domain(label),
            other => RowError::Domain(other.to_string()),
        }
    }
}

fn labels(g: &ZeroDivisorGraph, set: &[usize]) -> Vec<String> {
    set.iter().map(|&v| g.label(v)).collect()
}

/// Computes the row of an already built ring and its graph.
pub fn row_for(spec: &str, ring: &FiniteRing, g: &ZeroDivisorGraph) -> InvariantRow {
    let gamma = domination_number(g);
    let gamma_t = total_domination_number(g);
    let label = |e| ring.element_label(e);
    InvariantRow {
        spec: String::from(spec),
        order: ring.order(),
        z_star: g.vertex_count(),
        gamma: gamma.value.finite().expect("domination number is finite"),
        gamma_witness: labels(g, gamma.witness.as_deref().unwrap_or_default()),
        gamma_t: gamma_t.value,
        gamma_t_witness: gamma_t.witness.as_deref().map(|w| labels(g, w)),
        girth: g.girth(),
        diameter: g.diameter(),
        connected: g.is_connected(),
        z2xd: ring.z2_times_domain().map(label),
        z2_local4: ring.z2_times_local_order_four().map(label),
        ann_witness: ring.annihilator_ideal_witness().map(label),
        universal: g.universal_vertex().map(|v| g.label(v)),
    }
}

/// Parses, compiles and analyses a spec. The row's spec is canonical.
pub fn invariant_row(spec: &str) -> Result<InvariantRow, RowError> {
    let parsed = dsl::parse(spec)?;
    let canonical = dsl::format(&parsed);
    let ring = dsl::compile(&parsed)?;
    let g = build_zdg(&ring)?;
    Ok(row_for(&canonical, &ring, &g))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingReport {
    pub spec: String,
    pub order: Option<usize>,
    pub row: Option<InvariantRow>,
    pub skip_reason: Option<String>,
    pub checks: Vec<CheckResult>,
}

impl RingReport {
    pub fn failed_checks(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.failed())
    }

    pub fn is_skipped(&self) -> bool {
        self.row.is_none()
    }
}

fn run_checks(ring: &FiniteRing, g: &ZeroDivisorGraph, row: &InvariantRow, opts: &HarnessOptions) -> Vec<CheckResult> {
    alloc::vec![
        check_main_theorem(row),
        check_gamma_one(row),
        check_total_one(row),
        check_clique_lemma(ring, g, opts.clique_cap, opts.enumeration_cap),
        check_girth_consequences(row),
        check_girth_inf_cases(row),
        check_metric_bounds(row),
        check_consistency(row),
    ]
}

fn skipped(spec: String, order: Option<usize>, reason: String) -> RingReport {
    let checks = CHECK_NAMES
        .iter()
        .map(|name| CheckResult {
            name: String::from(*name),
            verdict: Verdict::Skip(reason.clone()),
        })
        .collect();
    RingReport {
        spec,
        order,
        row: None,
        skip_reason: Some(reason),
        checks,
    }
}

/// Row plus every check for one spec. Unparseable specs and domains give
/// skip reports instead of errors.
pub fn analyze(spec: &str, opts: &HarnessOptions) -> RingReport {
    let parsed = match dsl::parse(spec) {
        Ok(p) => p,
        Err(e) => return skipped(String::from(spec.trim()), None, format!("{e}")),
    };
    let canonical = dsl::format(&parsed);
    let ring = match dsl::compile(&parsed) {
        Ok(r) => r,
        Err(e) => return skipped(canonical, None, format!("{e}")),
    };
    let g = match build_zdg(&ring) {
        Ok(g) => g,
        Err(_) => return skipped(canonical, Some(ring.order()), String::from("domain")),
    };
    let row = row_for(&canonical, &ring, &g);
    let checks = run_checks(&ring, &g, &row, opts);
    RingReport {
        spec: canonical,
        order: Some(row.order),
        row: Some(row),
        skip_reason: None,
        checks,
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub rings: usize,
    pub analyzed: usize,
    pub skipped: usize,
    pub checks_passed: usize,
    pub checks_failed: usize,
    pub checks_skipped: usize,
    /// `(spec, check)` for every failure, in report order.
    pub failures: Vec<(String, String)>,
}

impl Summary {
    pub fn of(reports: &[RingReport]) -> Summary {
        let mut s = Summary {
            rings: reports.len(),
            ..Summary::default()
        };
        for r in reports {
            if r.is_skipped() {
                s.skipped += 1;
            } else {
                s.analyzed += 1;
            }
            for c in &r.checks {
                match c.verdict {
                    Verdict::Pass => s.checks_passed += 1,
                    Verdict::Skip(_) => s.checks_skipped += 1,
                    Verdict::Fail(_) => {
                        s.checks_failed += 1;
                        s.failures.push((r.spec.clone(), c.name.clone()));
                    }
                }
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub rings: Vec<RingReport>,
    pub summary: Summary,
}

impl VerificationReport {
    /// Reports must already be in catalog order.
    pub fn from_reports(rings: Vec<RingReport>) -> VerificationReport {
        let summary = Summary::of(&rings);
        VerificationReport { rings, summary }
    }

    pub fn is_success(&self) -> bool {
        self.summary.checks_failed == 0
    }
}

/// Analyses a catalog on the current thread.
pub fn run_all(catalog: &Catalog, opts: &HarnessOptions) -> VerificationReport {
    VerificationReport::from_reports(catalog.specs.iter().map(|s| analyze(s, opts)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn row(spec: &str) -> InvariantRow {
        invariant_row(spec).unwrap()
    }

    #[test]
    fn z6_row() {
        let r = row("Z6");
        assert_eq!((r.order, r.z_star, r.gamma), (6, 3, 1));
        assert_eq!(r.gamma_t, 2);
        assert_eq!(r.girth, ExtNat::Infinite);
        assert_eq!(r.diameter, 2);
        assert_eq!(r.z2xd.as_deref(), Some("3"));
        assert_eq!(r.gamma_witness, ["3"]);
        assert_eq!(r.gamma_t_witness, Some(vec!["2".into(), "3".into()]));
        assert_eq!(r.universal.as_deref(), Some("3"));
    }

    #[test]
    fn z8_and_z3_squared_rows() {
        let r = row("Z8");
        assert_eq!((r.gamma, r.gamma_t, r.girth), (1, ExtNat::Finite(1), ExtNat::Infinite));
        assert_eq!(r.ann_witness.as_deref(), Some("4"));
        let r = row("z3 x z3");
        assert_eq!(r.spec, "Z3 x Z3");
        assert_eq!((r.gamma, r.gamma_t, r.girth, r.diameter), (2, 2.into(), 4.into(), 2.into()));
    }

    #[test]
    fn named_examples_pass_every_check() {
        for spec in ["Z6", "Z8", "Z9", "Z3 x Z3", "Z2 x Z2 x Z2", "Z2 x Z2 x Z2 x Z2", "Z4", "Z2 x Z4", "Z2 x Z7", "Z2[x]/(x^2)"] {
            let rep = analyze(spec, &HarnessOptions::default());
            assert!(rep.row.is_some(), "{spec}");
            let failed: Vec<_> = rep.failed_checks().collect();
            assert!(failed.is_empty(), "{spec}: {failed:?}");
        }
    }

    #[test]
    fn verdict_details() {
        let opts = HarnessOptions::default();
        let z2x4 = analyze("Z2 x Z4", &opts);
        let inf = z2x4.checks.iter().find(|c| c.name == GIRTH_INF_CASES).unwrap();
        assert_eq!(inf.verdict, Verdict::Pass);
        let z33 = analyze("Z3 x Z3", &opts);
        let inf = z33.checks.iter().find(|c| c.name == GIRTH_INF_CASES).unwrap();
        assert!(inf.skipped());
    }

    #[test]
    fn broken_rows_fail() {
        let mut r = row("Z6");
        r.gamma_t = ExtNat::Finite(1);
        assert!(check_main_theorem(&r).failed());
        assert!(check_total_one(&r).failed());
        let mut r = row("Z3 x Z3");
        r.gamma = 1;
        assert!(check_girth_consequences(&r).failed());
        assert!(check_consistency(&r).failed());
        r.diameter = ExtNat::Finite(4);
        assert!(check_metric_bounds(&r).failed());
    }

    #[test]
    fn fields_and_garbage_become_skip_rows() {
        let report = run_all(&Catalog::from_specs(["Z7", "Z6", "bogus"]), &HarnessOptions::default());
        assert_eq!(report.rings.len(), 3);
        assert!(report.rings[0].is_skipped());
        assert_eq!(report.rings[0].order, Some(7));
        assert!(report.rings[2].is_skipped());
        assert_eq!(report.summary.analyzed, 1);
        assert_eq!(report.summary.skipped, 2);
        assert!(report.is_success());
        assert!(matches!(invariant_row("Z5"), Err(RowError::Domain(_))));
    }
}
