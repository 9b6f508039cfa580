//! Exhaustive check that `Θ_{e,(0,e/2)}` keeps `λ²₁` of symmetric bipartitions.
//!
//! The grid is every symmetric bipartition of every even `n ≤ max_n`, each
//! with every even `e` satisfying `e/2 ≤ n`. Past that bound the first
//! crossing is already the identity. A *case* is one bipartition; it passes
//! when every `e` in its grid passes. Each (bipartition, e) pair is a
//! *check*, evaluated independently and possibly in parallel. Results are
//! collected in enumeration order, so the report does not depend on
//! scheduling.
//!
//! Every crossing is checked for structural conservation. With statement
//! auditing enabled, every step must also satisfy A–E, F (all `k`), G
//! (`k ≥ 1`), the implication chain, and keep the last top entry a hole.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{enumerate_symmetric_bipartitions, Bipartition};
use crate::proofstate::{audited_trajectory, last_top_is_hole, ProofChain, Statement};
use crate::tableau::Charge;
use crate::wallcross::{check_conservation, theta};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_n: u32,
    pub audit_statements: bool,
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
    /// Extend each e-grid by the first value past the bound.
    pub full_e: bool,
    /// Checks not started within this budget are skipped and the report is
    /// marked incomplete.
    pub time_limit: Option<Duration>,
}

impl VerifyConfig {
    pub fn new(max_n: u32) -> Self {
        Self { max_n, audit_statements: false, jobs: 1, full_e: false, time_limit: None }
    }

    pub fn with_audit(mut self, audit: bool) -> Self {
        self.audit_statements = audit;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }
}

/// Even `e` with `e/2 ≤ n`, plus `2n + 2` when `full_e` is set.
pub fn e_grid(n: u32, full_e: bool) -> Vec<i64> {
    let top = if full_e { n + 1 } else { n };
    (1..=i64::from(top)).map(|h| 2 * h).collect()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Count {
    pub performed: u64,
    pub passed: u64,
}

impl Count {
    fn record(&mut self, ok: bool) {
        self.performed += 1;
        self.passed += u64::from(ok);
    }

    fn merge(&mut self, other: Count) {
        self.performed += other.performed;
        self.passed += other.passed;
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AuditSummary {
    pub statements: BTreeMap<String, Count>,
    pub implications: Count,
    pub last_top_hole: Count,
}

impl AuditSummary {
    fn merge(&mut self, other: &AuditSummary) {
        for (k, v) in &other.statements {
            self.statements.entry(k.clone()).or_default().merge(*v);
        }
        self.implications.merge(other.implications);
        self.last_top_hole.merge(other.last_top_hole);
    }

    pub fn violations(&self) -> u64 {
        self.statements.values().chain([&self.implications, &self.last_top_hole]).map(|c| c.performed - c.passed).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub bipartition: Bipartition,
    pub e: i64,
    pub problems: Vec<String>,
    pub trajectory: serde_json::Value,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Grid {
    pub max_n: u32,
    pub e_grid: String,
    pub charge_family: String,
    pub full_e: bool,
    pub audit_statements: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub grid: Grid,
    pub complete: bool,
    pub case_count: usize,
    pub pass_count: usize,
    pub failure_count: usize,
    pub check_count: usize,
    pub skipped_checks: usize,
    /// Crossings checked for conservation of entries, row lengths, leftmost
    /// column and hole count.
    pub conservation: Count,
    pub audit: Option<AuditSummary>,
    pub failures: Vec<Failure>,
    pub duration_ms: u128,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.complete && self.failure_count == 0
    }

    /// JSON without the duration, for comparing runs.
    pub fn stable_json(&self) -> String {
        let mut value = serde_json::to_value(self).expect("report serializes");
        value.as_object_mut().expect("report is an object").remove("duration_ms");
        serde_json::to_string_pretty(&value).expect("value serializes")
    }

    pub fn summary(&self) -> String {
        let mut out = format!(
            "verified symmetric bipartitions of even n <= {} ({}, charge {})\n",
            self.grid.max_n, self.grid.e_grid, self.grid.charge_family
        );
        out += &format!(
            "cases: {} passed, {} failed, {} total ({} checks",
            self.pass_count, self.failure_count, self.case_count, self.check_count
        );
        if self.skipped_checks > 0 {
            out += &format!(", {} skipped", self.skipped_checks);
        }
        out += ")\n";
        out += &format!("conservation: {}/{} crossings\n", self.conservation.passed, self.conservation.performed);
        if let Some(audit) = &self.audit {
            for (name, c) in &audit.statements {
                out += &format!("statement {name}: {}/{}\n", c.passed, c.performed);
            }
            out += &format!("implications: {}/{}\n", audit.implications.passed, audit.implications.performed);
            out += &format!(
                "last top entry is a hole: {}/{}\n",
                audit.last_top_hole.passed, audit.last_top_hole.performed
            );
        }
        for f in &self.failures {
            out += &format!("FAIL {} e={}: {}\n", f.bipartition, f.e, f.problems.join("; "));
        }
        if !self.complete {
            out += "INCOMPLETE: time limit reached\n";
        }
        out += if self.all_passed() { "result: PASS\n" } else { "result: FAIL\n" };
        out
    }
}

struct CheckOutcome {
    problems: Vec<String>,
    conservation: Count,
    audit: AuditSummary,
}

fn run_check(b: &Bipartition, e: i64, audit: bool) -> Result<CheckOutcome> {
    let s = Charge::new(0, e / 2);
    let mut problems = Vec::new();

    let image = theta(b, e, s)?;
    if image.second.part(1) != b.second.part(1) {
        problems.push(format!(
            "first part of second component changed from {} to {} (image {image})",
            b.second.part(1),
            image.second.part(1)
        ));
    }

    let chain = ProofChain::build(b, e, s)?;
    if chain.final_bipartition()? != image {
        problems.push("padded chain disagrees with Θ".to_string());
    }

    let mut conservation = Count::default();
    let mut summary = AuditSummary::default();
    for step in &chain.steps {
        let conserved = check_conservation(&step.before, &step.trace, &step.after);
        conservation.record(conserved.is_ok());
        if let Err(v) = conserved {
            problems.push(format!("k={}: conservation violated: {v:?}", step.k));
        }
        if !audit {
            continue;
        }
        let statements = chain.statements(step.k)?;
        for statement in Statement::ALL {
            let required = !(statement == Statement::G && step.k == 0);
            if !required {
                continue;
            }
            let value = statements.get(statement);
            let ok = value == Some(true);
            summary.statements.entry(statement.to_string()).or_default().record(ok);
            if !ok {
                let what = if value.is_none() { "undefined" } else { "fails" };
                problems.push(format!("k={}: statement {statement} {what}", step.k));
            }
        }
        let broken = statements.implication_violations();
        summary.implications.record(broken.is_empty());
        if !broken.is_empty() {
            problems.push(format!("k={}: implications fail: {}", step.k, broken.join(", ")));
        }
        let hole = last_top_is_hole(&step.trace);
        summary.last_top_hole.record(hole);
        if !hole {
            problems.push(format!("k={}: last top entry is not a hole", step.k));
        }
    }
    Ok(CheckOutcome { problems, conservation, audit: summary })
}

pub fn run_verification(config: &VerifyConfig) -> Result<VerificationReport> {
    let started = Instant::now();
    let cases: Vec<(u32, Bipartition)> = (2..=config.max_n)
        .step_by(2)
        .flat_map(|n| enumerate_symmetric_bipartitions(n).into_iter().map(move |b| (n, b)))
        .collect();
    let work: Vec<(usize, &Bipartition, i64)> = cases
        .iter()
        .enumerate()
        .flat_map(|(idx, (n, b))| e_grid(*n, config.full_e).into_iter().map(move |e| (idx, b, e)))
        .collect();

    let evaluate = |&(_, b, e): &(usize, &Bipartition, i64)| -> Option<Result<CheckOutcome>> {
        if config.time_limit.is_some_and(|limit| started.elapsed() > limit) {
            return None;
        }
        Some(run_check(b, e, config.audit_statements))
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot start worker pool: {e}")))?;
    let outcomes: Vec<Option<Result<CheckOutcome>>> = pool.install(|| work.par_iter().map(evaluate).collect());

    let mut case_failed = vec![false; cases.len()];
    let mut case_skipped = vec![false; cases.len()];
    let mut failures = Vec::new();
    let mut conservation = Count::default();
    let mut audit = AuditSummary::default();
    let mut skipped_checks = 0;
    for (&(idx, b, e), outcome) in work.iter().zip(outcomes) {
        let Some(outcome) = outcome else {
            skipped_checks += 1;
            case_skipped[idx] = true;
            continue;
        };
        let outcome = outcome?;
        conservation.merge(outcome.conservation);
        audit.merge(&outcome.audit);
        if !outcome.problems.is_empty() {
            case_failed[idx] = true;
            let trajectory =
                serde_json::to_value(audited_trajectory(b, e, Charge::new(0, e / 2))?).expect("trajectory serializes");
            failures.push(Failure { bipartition: b.clone(), e, problems: outcome.problems, trajectory });
        }
    }

    let evaluated = || (0..cases.len()).filter(|&i| !case_skipped[i]);
    let case_count = evaluated().count();
    let failure_count = evaluated().filter(|&i| case_failed[i]).count();
    let e_grid_desc = if config.full_e { "even e with e/2 <= n + 1" } else { "even e with e/2 <= n" };
    Ok(VerificationReport {
        grid: Grid {
            max_n: config.max_n,
            e_grid: e_grid_desc.to_string(),
            charge_family: "(0, e/2)".to_string(),
            full_e: config.full_e,
            audit_statements: config.audit_statements,
        },
        complete: skipped_checks == 0,
        case_count,
        pass_count: case_count - failure_count,
        failure_count,
        check_count: work.len() - skipped_checks,
        skipped_checks,
        conservation,
        audit: config.audit_statements.then_some(audit),
        failures,
        duration_ms: started.elapsed().as_millis(),
    })
}
