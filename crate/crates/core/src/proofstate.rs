//! Checkers for the invariants that drive the λ²₁-invariance argument.
//!
//! The chain starts from the canonical tableau `a₀` of `|λ, s⟩`. Each step
//! crosses `a_k` into `α_k` and then shifts it by `Δ_e` in padded form to get
//! `a_{k+1}`. Padding keeps the bottom row length fixed, so indices can be
//! compared across steps. The statements, for the tableau `a_k`:
//!
//! | id | holds when |
//! |----|------------|
//! | A  | `b^j ≥ a^j` for every bottom index `j` |
//! | B  | the swap produced no cycles |
//! | C  | every pair `(b^j, M(b^j))` has `b^j ≥ M(b^j)` |
//! | D  | holes keep their value and position through the crossing |
//! | E  | no cycles, and exchanging along `M` in place already gives the sorted result |
//! | F  | E up to step `k`, and `b^i_{k+1} ≥ a^{i+D(i,k)}_{k+1}` for every `i` |
//! | G  | E up to step `k`, and `D(j,k−1) ≤ D(j,k)` for every `j` (`k ≥ 1`) |
//!
//! Witness indices are 0-based.

use std::fmt;
use std::ops::Range;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::Bipartition;
use crate::tableau::{build_tableau, to_charged_bipartition, Charge, ChargedBipartition, TwoRowTableau};
use crate::wallcross::{
    delta_e_padded, serialize_trace_fields, swap_select, theta_steps, theta_trajectory, wall_cross, SwapTrace,
    TrajectoryStep,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Statement {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Statement {
    pub const ALL: [Statement; 7] =
        [Statement::A, Statement::B, Statement::C, Statement::D, Statement::E, Statement::F, Statement::G];
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Outcome of one statement at one step. `witness` is present iff the
/// statement fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatementReport {
    pub statement: Statement,
    pub step: usize,
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

impl StatementReport {
    fn new(statement: Statement, witness: Option<Vec<usize>>) -> Self {
        Self { statement, step: 0, holds: witness.is_none(), witness }
    }

    pub fn at_step(mut self, step: usize) -> Self {
        self.step = step;
        self
    }
}

pub fn check_a(t: &TwoRowTableau) -> StatementReport {
    let witness = t.bottom().iter().zip(t.top()).position(|(b, a)| b < a).map(|j| vec![j]);
    StatementReport::new(Statement::A, witness)
}

pub fn check_b(trace: &SwapTrace) -> StatementReport {
    let witness = trace.cycle_indices().first().map(|&i| vec![i]);
    StatementReport::new(Statement::B, witness)
}

pub fn check_c(trace: &SwapTrace) -> StatementReport {
    let t = trace.source();
    let witness = trace
        .ordered_pairing()
        .iter()
        .enumerate()
        .find(|&(j, &i)| t.bottom()[j] < t.top()[i])
        .map(|(j, &i)| vec![j, i]);
    StatementReport::new(Statement::C, witness)
}

/// `after` must be the crossing of `trace.source()`.
pub fn check_d(trace: &SwapTrace, after: &TwoRowTableau) -> StatementReport {
    let before = trace.source();
    let witness =
        trace.hole_indices().iter().find(|&&i| after.top().get(i) != Some(&before.top()[i])).map(|&i| vec![i]);
    StatementReport::new(Statement::D, witness)
}

/// The top row after exchanging every bottom entry with its partner in `M`
/// in place, without sorting.
fn exchanged_top(trace: &SwapTrace) -> Vec<i64> {
    let t = trace.source();
    let mut top = t.top().to_vec();
    for (j, &i) in trace.ordered_pairing().iter().enumerate() {
        top[i] = t.bottom()[j];
    }
    top
}

/// `after` must be the crossing of `trace.source()`.
pub fn check_e(trace: &SwapTrace, after: &TwoRowTableau) -> StatementReport {
    if let Some(&i) = trace.cycle_indices().first() {
        return StatementReport::new(Statement::E, Some(vec![i]));
    }
    // the bottom row after an in-place exchange along M is already sorted
    let top = exchanged_top(trace);
    let witness = top.iter().zip(after.top()).position(|(x, y)| x != y).map(|i| vec![i]);
    StatementReport::new(Statement::E, witness)
}

/// The displacements `D(j)`, defined only when E holds.
pub fn displacements_of(trace: &SwapTrace) -> Result<Vec<usize>> {
    let (_, after) = wall_cross(trace.source())?;
    if !check_e(trace, &after).holds {
        return Err(Error::UndefinedDisplacement { step: 0 });
    }
    Ok(trace.displacements())
}

/// Whether the last entry of the top row is a hole.
pub fn last_top_is_hole(trace: &SwapTrace) -> bool {
    trace.is_hole(trace.source().top().len() - 1)
}

/// The leftmost `ke + e/2` top indices, 0-based.
pub fn filler_indices(t: &TwoRowTableau, k: usize, e: usize) -> Result<Range<usize>> {
    let len = k * e + e / 2;
    if len > t.top().len() {
        return Err(Error::FillerOutOfRange { len, top_len: t.top().len() });
    }
    Ok(0..len)
}

/// The two conditions on the starting tableau the inductive argument uses:
///
/// 1. `λ¹_i ≥ λ²_{i+s₂−s₁}` for all `i` (equivalently, A on the start);
/// 2. `a^{i+D(i)} ≥ b^{i+D(i)−e} + e` for all `i` where the bottom index
///    exists, with `D` the displacements of the starting crossing.
pub fn base_conditions(cb: &ChargedBipartition, e: i64) -> Result<bool> {
    cb.charge.ensure_supported()?;
    let gap = cb.charge.gap() as usize;
    let b = &cb.bipartition;
    let reach = b.first.len().max(b.second.len());
    let first = (1..=reach).all(|i| b.first.part(i) >= b.second.part(i + gap));
    if !first {
        return Ok(false);
    }
    let t = build_tableau(cb)?;
    let trace = swap_select(&t);
    let second = trace.displacements().iter().enumerate().all(|(i, &d)| {
        let top_index = i + d;
        let Ok(bottom_index) = usize::try_from(top_index as i64 - e) else {
            return true;
        };
        match t.bottom().get(bottom_index) {
            Some(&b) => t.top()[top_index] >= b + e,
            None => true,
        }
    });
    Ok(second)
}

/// One crossing in the padded chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofStep {
    pub k: usize,
    pub charge: Charge,
    /// `a_k`
    pub before: TwoRowTableau,
    pub trace: SwapTrace,
    /// `α_k`
    pub after: TwoRowTableau,
    /// `a_{k+1}`, the padded `Δ_e` of `after`
    pub next: TwoRowTableau,
}

/// The padded chain `a₀ → α₀ → a₁ → α₁ → …` over every crossing of `Θ_{e,s}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofChain {
    pub e: i64,
    pub start: ChargedBipartition,
    pub steps: Vec<ProofStep>,
}

impl ProofChain {
    pub fn build(b: &Bipartition, e: i64, s: Charge) -> Result<Self> {
        if e < 1 {
            return Err(Error::InvalidE(e));
        }
        let start = ChargedBipartition::new(b.clone(), s);
        let mut before = build_tableau(&start)?;
        let count = theta_steps(b.size(), e, s);
        let mut steps = Vec::with_capacity(count);
        for k in 0..count {
            let (trace, after) = wall_cross(&before)?;
            let next = delta_e_padded(&after, e)?;
            steps.push(ProofStep {
                k,
                charge: s.shifted(k as i64 * e),
                before: std::mem::replace(&mut before, next.clone()),
                trace,
                after,
                next,
            });
        }
        Ok(Self { e, start, steps })
    }

    /// The bipartition left after the last crossing, i.e. `Θ_{e,s}(λ)`.
    pub fn final_bipartition(&self) -> Result<Bipartition> {
        let last = self.steps.last().expect("a chain has at least one step");
        Ok(to_charged_bipartition(&last.after)?.bipartition)
    }

    fn step(&self, k: usize) -> Result<&ProofStep> {
        self.steps.get(k).ok_or(Error::StepOutOfRange { step: k, len: self.steps.len() })
    }

    fn require_e_through(&self, k: usize) -> Result<()> {
        for step in &self.steps[..=k] {
            if !check_e(&step.trace, &step.after).holds {
                return Err(Error::UndefinedDisplacement { step: step.k });
            }
        }
        Ok(())
    }

    /// `D(·, k)`, requiring E at every step up to `k`.
    pub fn displacements(&self, k: usize) -> Result<Vec<usize>> {
        let step = self.step(k)?;
        self.require_e_through(k)?;
        Ok(step.trace.displacements())
    }

    pub fn check_f(&self, k: usize) -> Result<StatementReport> {
        let step = self.step(k)?;
        let displacements = self.displacements(k)?;
        let next = &step.next;
        let witness = displacements
            .iter()
            .enumerate()
            .find(|&(i, &d)| next.top().get(i + d).is_some_and(|&a| next.bottom()[i] < a))
            .map(|(i, &d)| vec![i, i + d]);
        Ok(StatementReport::new(Statement::F, witness).at_step(k))
    }

    pub fn check_g(&self, k: usize) -> Result<StatementReport> {
        if k == 0 {
            return Err(Error::StepOutOfRange { step: 0, len: self.steps.len() });
        }
        let current = self.displacements(k)?;
        let previous = self.displacements(k - 1)?;
        let witness = previous.iter().zip(&current).position(|(p, c)| p > c).map(|j| vec![j]);
        Ok(StatementReport::new(Statement::G, witness).at_step(k))
    }

    /// Every statement at step `k`. F and G are `None` where E fails on the
    /// prefix, and G is `None` at `k = 0`.
    pub fn statements(&self, k: usize) -> Result<StepStatements> {
        let step = self.step(k)?;
        let optional = |r: Result<StatementReport>| match r {
            Ok(report) => Ok(Some(report.holds)),
            Err(Error::UndefinedDisplacement { .. }) => Ok(None),
            Err(e) => Err(e),
        };
        Ok(StepStatements {
            a: check_a(&step.before).holds,
            b: check_b(&step.trace).holds,
            c: check_c(&step.trace).holds,
            d: check_d(&step.trace, &step.after).holds,
            e: check_e(&step.trace, &step.after).holds,
            f: optional(self.check_f(k))?,
            g: if k == 0 { None } else { optional(self.check_g(k))? },
        })
    }
}

/// Truth values of A–G at one step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub struct StepStatements {
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub d: bool,
    pub e: bool,
    pub f: Option<bool>,
    pub g: Option<bool>,
}

impl StepStatements {
    pub fn get(&self, statement: Statement) -> Option<bool> {
        match statement {
            Statement::A => Some(self.a),
            Statement::B => Some(self.b),
            Statement::C => Some(self.c),
            Statement::D => Some(self.d),
            Statement::E => Some(self.e),
            Statement::F => self.f,
            Statement::G => self.g,
        }
    }

    /// Names of the implications `A ⇒ B`, `B ⇒ C`, `C ⇒ D`, `A ⇒ E`, `E ⇒ A`
    /// that fail here.
    pub fn implication_violations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.a && !self.b {
            out.push("A=>B");
        }
        if self.b && !self.c {
            out.push("B=>C");
        }
        if self.c && !self.d {
            out.push("C=>D");
        }
        if self.a && !self.e {
            out.push("A=>E");
        }
        if self.e && !self.a {
            out.push("E=>A");
        }
        out
    }
}

/// A `Θ` trajectory step with the statements of the matching chain step,
/// rendered in the trace schema under `"statements"`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditedStep {
    pub step: TrajectoryStep,
    pub statements: StepStatements,
}

impl Serialize for AuditedStep {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let step = &self.step;
        let mut st = serializer.serialize_struct("AuditedStep", 9)?;
        st.serialize_field("k", &step.k)?;
        st.serialize_field("charge", &step.charge)?;
        st.serialize_field("before", &step.before)?;
        serialize_trace_fields::<S>(&mut st, &step.trace)?;
        st.serialize_field("after", &step.after)?;
        st.serialize_field("statements", &self.statements)?;
        st.end()
    }
}

/// The trajectory of `Θ_{e,s}(b)` with A–G evaluated at every step.
pub fn audited_trajectory(b: &Bipartition, e: i64, s: Charge) -> Result<Vec<AuditedStep>> {
    let chain = ProofChain::build(b, e, s)?;
    theta_trajectory(b, e, s)?
        .into_iter()
        .map(|step| {
            let statements = chain.statements(step.k)?;
            Ok(AuditedStep { step, statements })
        })
        .collect()
}
