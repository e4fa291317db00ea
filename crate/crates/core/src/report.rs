//! Verification of a catalog: every ω method, the structure checks and the
//! cover count for each listed group, collected into one report.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{CatalogEntry, ExpectedKind};
use crate::constructors::Builder;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::ncgraph::{self, clique::NAIVE_LIMIT, NonCommutingGraph};
use crate::structure::{self, GroupKind, PqStructureChecks, SylowFacts};

/// Largest order for which the subset-enumeration oracle is run.
pub const ORACLE_ORDER_LIMIT: usize = 30;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupRecord {
    pub name: String,
    pub spec: String,
    pub order: Option<usize>,
    pub center_order: Option<usize>,
    pub kind: Option<GroupKind>,
    pub expected_kind: ExpectedKind,
    pub p: Option<u64>,
    pub alpha: Option<u32>,
    pub q: Option<u64>,
    pub beta: Option<u32>,
    pub m: Option<usize>,
    pub expected_omega: Option<usize>,
    pub omega_clique: Option<usize>,
    pub omega_naive: Option<usize>,
    pub omega_centralizers: Option<usize>,
    pub omega_formula: Option<usize>,
    pub methods_agree: bool,
    pub lemma_2_4: Option<SylowFacts>,
    pub theorem_2_3: Option<PqStructureChecks>,
    /// `ln |G:Z| / ω`.
    pub pyber_ratio: Option<f64>,
    pub checks: Vec<Check>,
    pub error: Option<String>,
    pub passed: bool,
    /// Wall time per step in milliseconds.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, f64>>,
}

impl GroupRecord {
    fn new(entry: &CatalogEntry) -> Self {
        GroupRecord {
            name: entry.name.clone(),
            spec: entry.spec.to_string(),
            order: None,
            center_order: None,
            kind: None,
            expected_kind: entry.expected_kind,
            p: None,
            alpha: None,
            q: None,
            beta: None,
            m: None,
            expected_omega: entry.expected_omega,
            omega_clique: None,
            omega_naive: None,
            omega_centralizers: None,
            omega_formula: None,
            methods_agree: false,
            lemma_2_4: None,
            theorem_2_3: None,
            pyber_ratio: None,
            checks: Vec::new(),
            error: None,
            passed: false,
            timings_ms: Some(BTreeMap::new()),
        }
    }

    fn check(&mut self, name: &str, passed: bool) {
        self.checks.push(Check { name: name.to_string(), passed });
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect()
    }

    /// The ω value reported for this group (exact search).
    pub fn omega(&self) -> Option<usize> {
        self.omega_clique
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub groups: Vec<GroupRecord>,
    pub passed: bool,
}

impl RunReport {
    pub fn failures(&self) -> impl Iterator<Item = &GroupRecord> {
        self.groups.iter().filter(|r| !r.passed)
    }

    pub fn without_timings(mut self) -> Self {
        for r in &mut self.groups {
            r.timings_ms = None;
        }
        self
    }
}

fn timed<T>(rec: &mut GroupRecord, step: &str, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    if let Some(t) = &mut rec.timings_ms {
        *t.entry(step.to_string()).or_default() += start.elapsed().as_secs_f64() * 1e3;
    }
    out
}

fn kind_matches(expected: ExpectedKind, kind: GroupKind) -> bool {
    matches!(
        (expected, kind),
        (ExpectedKind::PGroup, GroupKind::PGroup)
            | (ExpectedKind::PqGroup, GroupKind::PqGroup)
            | (ExpectedKind::NegativeControl, GroupKind::NotApplicable)
    )
}

fn verify_group(g: &GroupTable, rec: &mut GroupRecord) -> Result<()> {
    rec.order = Some(g.order());
    let center = g.center();
    rec.center_order = Some(center.len());

    let report = timed(rec, "structure", || structure::analyze(g))?;
    rec.kind = Some(report.kind);
    (rec.p, rec.alpha, rec.q, rec.beta, rec.m) = (report.p, report.alpha, report.q, report.beta, report.m);
    rec.lemma_2_4 = report.lemma_2_4;
    rec.theorem_2_3 = report.theorem_2_3;
    rec.check("kind", kind_matches(rec.expected_kind, report.kind));

    if g.is_commutative() {
        rec.methods_agree = true;
        rec.check("expected_omega", rec.expected_omega.is_none());
        return Ok(());
    }

    let graph = timed(rec, "graph", || NonCommutingGraph::build(g))?;
    let clique = timed(rec, "clique", || graph.max_clique())?;
    rec.omega_clique = Some(clique.value);
    let witness = clique.witness.clone().unwrap_or_default();
    rec.check("clique_witness_valid", clique.witness_is_valid(g));
    rec.check("clique_witness_maximal", !ncgraph::witness_is_extendable(g, &witness));
    if let Some(expected) = rec.expected_omega {
        rec.check("expected_omega", expected == clique.value);
    }
    let index = (g.order() / center.len()) as f64;
    rec.pyber_ratio = Some(index.ln() / clique.value as f64);

    if g.order() <= ORACLE_ORDER_LIMIT && graph.vertex_count() <= NAIVE_LIMIT {
        let naive = timed(rec, "naive", || graph.naive_max_clique())?;
        rec.omega_naive = Some(naive.value);
        rec.check("clique_matches_naive", naive.value == clique.value);
    }

    let ac = timed(rec, "ac", || ncgraph::ac_equivalence(g))?;
    rec.check("ac_equivalence", ac.holds());
    match timed(rec, "centralizers", || ncgraph::omega_via_centralizers(g)) {
        Ok(r) => {
            rec.omega_centralizers = Some(r.value);
            rec.check("centralizer_witness_valid", r.witness_is_valid(g));
            let family = ncgraph::centralizer_family(g)?;
            rec.check("centralizer_intersections_are_center", family.pairwise_intersections_are_center);
        }
        Err(Error::NotACGroup { .. } | Error::NoCover) => {
            rec.check("ac_group_expected", rec.expected_kind == ExpectedKind::NegativeControl)
        }
        Err(e) => return Err(e),
    }

    if report.minimal_non_abelian {
        rec.omega_formula = Some(timed(rec, "formula", || structure::omega_formula(g))?.value);
        rec.check("ac_group", ac.is_ac);
    }
    if report.kind == GroupKind::PqGroup {
        rec.check("structure", report.consistent());
        let (p, alpha) = (report.p.unwrap_or(0), report.alpha.unwrap_or(0));
        rec.check("center_order", center.len() as u64 == p.pow(alpha.saturating_sub(1)));
        let cover = timed(rec, "cover_count", || ncgraph::verify_cover_count(g))?;
        rec.check("cover_count", cover.all());
    }

    let values: Vec<usize> = [rec.omega_clique, rec.omega_naive, rec.omega_centralizers, rec.omega_formula]
        .into_iter()
        .flatten()
        .collect();
    rec.methods_agree = values.windows(2).all(|w| w[0] == w[1]);
    rec.check("methods_agree", rec.methods_agree);
    Ok(())
}

/// Builds and checks one catalog entry; errors are recorded, not returned.
pub fn verify_entry(entry: &CatalogEntry, builder: &Builder) -> GroupRecord {
    let mut rec = GroupRecord::new(entry);
    let outcome = timed(&mut rec, "build", || entry.spec.build(builder))
        .and_then(|g| verify_group(&g, &mut rec));
    if let Err(e) = outcome {
        rec.error = Some(e.to_string());
    }
    rec.passed = rec.error.is_none() && rec.checks.iter().all(|c| c.passed);
    rec
}

/// Verifies every entry, keeping catalog order in the report.
pub fn verify_catalog(entries: &[CatalogEntry], builder: &Builder, parallel: bool) -> RunReport {
    let groups: Vec<GroupRecord> = if parallel {
        entries.par_iter().map(|e| verify_entry(e, builder)).collect()
    } else {
        entries.iter().map(|e| verify_entry(e, builder)).collect()
    };
    let passed = groups.iter().all(|r| r.passed);
    RunReport { groups, passed }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{builtin_catalog, parse_catalog};

    #[test]
    fn builtin_catalog_passes() {
        let report = verify_catalog(&builtin_catalog(), &Builder::default(), true);
        for r in &report.groups {
            assert!(r.passed, "{}: {:?} {:?}", r.name, r.failed_checks(), r.error);
        }
        let omegas: Vec<Option<usize>> = report.groups.iter().map(GroupRecord::omega).collect();
        assert_eq!(
            omegas,
            [4, 5, 4, 8, 17, 3, 3, 4, 3, 4, 10].map(Some).to_vec(),
        );
        let g80 = &report.groups[4];
        assert_eq!((g80.p, g80.alpha, g80.q, g80.beta, g80.m), (Some(5), Some(1), Some(2), Some(4), Some(16)));
        assert_eq!(g80.omega_centralizers, Some(17));
        assert_eq!(g80.omega_formula, Some(17));
    }

    #[test]
    fn wrong_expectations_fail() {
        let entries = parse_catalog("D12; dihedral:6; -; pq-group\nS3; mna:2,1,3; 5; pq-group\nC6; cyclic:6; -; negative-control\n").unwrap();
        let report = verify_catalog(&entries, &Builder::default(), false);
        assert!(!report.passed);
        assert_eq!(report.groups[0].failed_checks(), ["kind"]);
        assert_eq!(report.groups[1].failed_checks(), ["expected_omega"]);
        assert!(report.groups[2].passed);
        let e = parse_catalog("X; mna:4,1,3; 4; pq-group\n").unwrap();
        let r = verify_entry(&e[0], &Builder::default());
        assert!(!r.passed && r.error.is_some());
    }

    #[test]
    fn serialized_report_is_stable_without_timings() {
        let entries = parse_catalog("S3; mna:2,1,3; 4; pq-group\nQ8; q8; 3; p-group\n").unwrap();
        let run = || serde_json::to_string(&verify_catalog(&entries, &Builder::default(), true).without_timings()).unwrap();
        let a = run();
        assert_eq!(a, run());
        assert!(!a.contains("timings_ms"));
        assert!(a.contains("\"lemma_2_4\"") && a.contains("\"theorem_2_3\""));
    }
}
