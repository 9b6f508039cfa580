//! Wall crossing on two-row tableaux.
//!
//! One crossing (`wc`) is a swap followed by a sort:
//!
//! 1. Walk the bottom row in increasing order. Each bottom entry `x` takes
//!    the largest unused top entry `≤ x`. If every unused top entry exceeds
//!    `x`, it takes the largest unused top entry instead; that entry is
//!    recorded as a *cycle*.
//! 2. The selected top entries, sorted, become the new bottom row. The
//!    unselected top entries together with the old bottom row, sorted,
//!    become the new top row.
//!
//! Top entries that are never selected are *holes*. Matching the bottom row,
//! in order, against the selected top entries, in order, gives the ordered
//! pairing `M`. The displacement of bottom index `j` is how far to the right
//! its partner in `M` sits.
//!
//! `Φ` at charge `s` decodes the crossed tableau of `|λ, s⟩`. `Θ_{e,s}` applies
//! `Φ` at the charges `(s₁, s₂ + ke)` for `k = 0, 1, …` until `ke + s₂ − s₁`
//! exceeds `|λ|`, after which every further crossing is the identity.
//!
//! All indices in this module are 0-based. JSON output is 1-based.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::Bipartition;
use crate::tableau::{build_tableau, to_charged_bipartition, Charge, ChargedBipartition, TwoRowTableau};

/// Everything the swap procedure decided for one tableau.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwapTrace {
    source: TwoRowTableau,
    selected: Vec<usize>,
    cycles: Vec<usize>,
    holes: Vec<usize>,
    pairing: Vec<usize>,
}

impl SwapTrace {
    /// The tableau the swap ran on.
    pub fn source(&self) -> &TwoRowTableau {
        &self.source
    }

    /// `(bottom index, selected top index)` in bottom order.
    pub fn pairs(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.selected.iter().copied().enumerate()
    }

    /// Top index selected by each bottom index.
    pub fn selected(&self) -> &[usize] {
        &self.selected
    }

    /// Top indices taken by the fallback branch, increasing.
    pub fn cycle_indices(&self) -> &[usize] {
        &self.cycles
    }

    /// Top indices never selected, increasing.
    pub fn hole_indices(&self) -> &[usize] {
        &self.holes
    }

    /// The ordered pairing `M`: entry `j` is the top index matched with bottom
    /// index `j`. Strictly increasing.
    pub fn ordered_pairing(&self) -> &[usize] {
        &self.pairing
    }

    /// `D(j) = M(j) − j`.
    pub fn displacements(&self) -> Vec<usize> {
        self.pairing.iter().enumerate().map(|(j, &i)| i - j).collect()
    }

    pub fn is_hole(&self, top_index: usize) -> bool {
        self.holes.binary_search(&top_index).is_ok()
    }
}

/// Runs the swap procedure.
pub fn swap_select(t: &TwoRowTableau) -> SwapTrace {
    let top = t.top();
    let mut used = vec![false; top.len()];
    let mut selected = Vec::with_capacity(t.bottom().len());
    let mut cycles = Vec::new();

    for &x in t.bottom() {
        // top is increasing: candidates ≤ x are a prefix
        let below = top.partition_point(|&z| z <= x);
        let pick = match (0..below).rev().find(|&i| !used[i]) {
            Some(i) => i,
            None => {
                let i = (0..top.len()).rev().find(|&i| !used[i]).expect("top row is at least as long as bottom row");
                cycles.push(i);
                i
            }
        };
        used[pick] = true;
        selected.push(pick);
    }

    cycles.sort_unstable();
    let holes = (0..top.len()).filter(|&i| !used[i]).collect();
    let mut pairing = selected.clone();
    pairing.sort_unstable();
    SwapTrace { source: t.clone(), selected, cycles, holes, pairing }
}

/// Sorts the rows after the swap recorded in `trace`.
fn sort_after_swap(trace: &SwapTrace) -> Result<TwoRowTableau> {
    let t = &trace.source;
    let mut bottom: Vec<i64> = trace.pairing.iter().map(|&i| t.top()[i]).collect();
    bottom.sort_unstable();
    let mut top: Vec<i64> = trace.holes.iter().map(|&i| t.top()[i]).chain(t.bottom().iter().copied()).collect();
    top.sort_unstable();
    TwoRowTableau::new(top, bottom).map_err(|e| Error::MalformedResult(e.to_string()))
}

/// One wall crossing, returning the trace alongside the crossed tableau.
pub fn wall_cross(t: &TwoRowTableau) -> Result<(SwapTrace, TwoRowTableau)> {
    let trace = swap_select(t);
    let after = sort_after_swap(&trace)?;
    Ok((trace, after))
}

/// Swap then sort. Row lengths are preserved; the output is not canonicalized.
pub fn apply_swap_sort(t: &TwoRowTableau) -> Result<TwoRowTableau> {
    wall_cross(t).map(|(_, after)| after)
}

/// `Φ^∞_s(λ)`.
pub fn phi(cb: &ChargedBipartition) -> Result<Bipartition> {
    let after = apply_swap_sort(&build_tableau(cb)?)?;
    Ok(to_charged_bipartition(&after)?.bipartition)
}

fn check_e(e: i64) -> Result<()> {
    if e < 1 {
        return Err(Error::InvalidE(e));
    }
    Ok(())
}

/// The canonical tableau of the same bipartition at charge `(s₁, s₂ + e)`.
pub fn delta_e(t: &TwoRowTableau, e: i64) -> Result<TwoRowTableau> {
    check_e(e)?;
    let cb = to_charged_bipartition(t)?;
    build_tableau(&ChargedBipartition::new(cb.bipartition, cb.charge.shifted(e)))
}

/// `Δ_e` without re-canonicalizing: the bottom row is kept, and the top row
/// becomes `e` consecutive integers from the first bottom entry followed by
/// the old top row shifted by `e`.
pub fn delta_e_padded(t: &TwoRowTableau, e: i64) -> Result<TwoRowTableau> {
    check_e(e)?;
    let start = t.bottom()[0];
    let top = (start..start + e).chain(t.top().iter().map(|&v| v + e)).collect();
    TwoRowTableau::new(top, t.bottom().to_vec())
}

/// Number of crossings `Θ_{e,s}` performs on a bipartition of size `n`,
/// including the final identity step at the first `k` with `ke + s₂ − s₁ > n`.
pub fn theta_steps(n: u32, e: i64, s: Charge) -> usize {
    let n = i64::from(n);
    let gap = s.gap();
    if gap > n {
        return 1;
    }
    // first k with ke > n − gap
    ((n - gap) / e + 1) as usize + 1
}

/// One step of `Θ`: the crossing at charge `(s₁, s₂ + ke)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrajectoryStep {
    pub k: usize,
    pub charge: Charge,
    pub before: TwoRowTableau,
    pub trace: SwapTrace,
    pub after: TwoRowTableau,
    pub input: Bipartition,
    pub output: Bipartition,
}

/// Every crossing `Θ_{e,s}` performs on `b`.
pub fn theta_trajectory(b: &Bipartition, e: i64, s: Charge) -> Result<Vec<TrajectoryStep>> {
    check_e(e)?;
    s.ensure_supported()?;
    let steps = theta_steps(b.size(), e, s);
    let mut current = b.clone();
    let mut out = Vec::with_capacity(steps);
    for k in 0..steps {
        let charge = s.shifted(k as i64 * e);
        let before = build_tableau(&ChargedBipartition::new(current.clone(), charge))?;
        let (trace, after) = wall_cross(&before)?;
        let output = to_charged_bipartition(&after)?.bipartition;
        out.push(TrajectoryStep {
            k,
            charge,
            before,
            trace,
            after,
            input: std::mem::replace(&mut current, output.clone()),
            output,
        });
    }
    Ok(out)
}

/// `Θ_{e,s}(b)`.
pub fn theta(b: &Bipartition, e: i64, s: Charge) -> Result<Bipartition> {
    check_e(e)?;
    s.ensure_supported()?;
    let mut current = b.clone();
    for k in 0..theta_steps(b.size(), e, s) {
        current = phi(&ChargedBipartition::new(current, s.shifted(k as i64 * e)))?;
    }
    Ok(current)
}

/// A structural property a crossing failed to preserve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConservationViolation {
    EntryMultiset,
    RowLengths,
    LeftmostColumn,
    HoleCount { holes: usize, expected: usize },
}

/// Checks that a crossing kept the entry multiset, both row lengths, the
/// leftmost column, and produced exactly `len(top) − len(bottom)` holes.
pub fn check_conservation(
    before: &TwoRowTableau,
    trace: &SwapTrace,
    after: &TwoRowTableau,
) -> std::result::Result<(), ConservationViolation> {
    if before.entry_multiset() != after.entry_multiset() {
        return Err(ConservationViolation::EntryMultiset);
    }
    if before.top().len() != after.top().len() || before.bottom().len() != after.bottom().len() {
        return Err(ConservationViolation::RowLengths);
    }
    if before.has_equal_leftmost_column() && (!after.has_equal_leftmost_column() || after.top()[0] != before.top()[0]) {
        return Err(ConservationViolation::LeftmostColumn);
    }
    let expected = before.top().len() - before.bottom().len();
    if trace.hole_indices().len() != expected {
        return Err(ConservationViolation::HoleCount { holes: trace.hole_indices().len(), expected });
    }
    Ok(())
}

impl Serialize for TrajectoryStep {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("TrajectoryStep", 8)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("charge", &self.charge)?;
        st.serialize_field("before", &self.before)?;
        serialize_trace_fields::<S>(&mut st, &self.trace)?;
        st.serialize_field("after", &self.after)?;
        st.end()
    }
}

/// Writes `pairs`, `cycles`, `holes` and `displacements`, indices 1-based.
pub(crate) fn serialize_trace_fields<S: Serializer>(
    st: &mut S::SerializeStruct,
    trace: &SwapTrace,
) -> std::result::Result<(), S::Error> {
    let pairs: Vec<[usize; 2]> = trace.pairs().map(|(j, i)| [j + 1, i + 1]).collect();
    let one_based = |v: &[usize]| v.iter().map(|i| i + 1).collect::<Vec<_>>();
    st.serialize_field("pairs", &pairs)?;
    st.serialize_field("cycles", &one_based(trace.cycle_indices()))?;
    st.serialize_field("holes", &one_based(trace.hole_indices()))?;
    st.serialize_field("displacements", &trace.displacements())?;
    Ok(())
}
