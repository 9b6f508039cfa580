//! Charged bipartitions and their two-row tableaux.
//!
//! For a charge `(s₁, s₂)` with `s₁ ≤ s₂` and depth `d`, the top row has
//! `d + 1` entries and carries `λ²`, the bottom row has `d + 1 + s₁ − s₂`
//! entries and carries `λ¹`:
//!
//! ```text
//! top    j = 1..=d+1          : s₂ − d + (j − 1) + λ²_{d+2−j}
//! bottom j = 1..=d+1+s₁−s₂    : s₂ − d + (j − 1) + λ¹_{d+2+s₁−s₂−j}
//! ```
//!
//! Both rows then start at `s₂ − d`. The canonical tableau uses the minimal
//! depth. Any larger depth gives a padded tableau: both rows are prefixed by
//! the same run of consecutive integers. Padded tableaux decode to the same
//! charged bipartition.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{Bipartition, Partition};

/// A charge `s = (s₁, s₂)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Charge {
    pub s1: i64,
    pub s2: i64,
}

impl Charge {
    pub const fn new(s1: i64, s2: i64) -> Self {
        Self { s1, s2 }
    }

    /// `s₂ − s₁`.
    pub const fn gap(self) -> i64 {
        self.s2 - self.s1
    }

    /// The charge with `s₂` shifted by `by`.
    pub const fn shifted(self, by: i64) -> Self {
        Self { s1: self.s1, s2: self.s2 + by }
    }

    pub(crate) fn ensure_supported(self) -> Result<()> {
        if self.s1 > self.s2 {
            return Err(Error::UnsupportedCharge { s1: self.s1, s2: self.s2 });
        }
        Ok(())
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.s1, self.s2)
    }
}

impl Serialize for Charge {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.s1, self.s2].serialize(serializer)
    }
}

/// `|λ, s⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChargedBipartition {
    pub bipartition: Bipartition,
    pub charge: Charge,
}

impl ChargedBipartition {
    pub fn new(bipartition: Bipartition, charge: Charge) -> Self {
        Self { bipartition, charge }
    }
}

impl fmt::Display for ChargedBipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{}, {}⟩", self.bipartition, self.charge)
    }
}

/// Two strictly increasing integer rows, the top row at least as long as the
/// bottom row.
///
/// Tableaux that encode a charged bipartition additionally share their
/// leftmost entry; that is checked when decoding, not here, so the
/// wall-crossing procedures can run on arbitrary rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoRowTableau {
    top: Vec<i64>,
    bottom: Vec<i64>,
}

fn strictly_increasing(row: &[i64]) -> bool {
    row.windows(2).all(|w| w[0] < w[1])
}

impl TwoRowTableau {
    pub fn new(top: Vec<i64>, bottom: Vec<i64>) -> Result<Self> {
        if bottom.is_empty() {
            return Err(Error::MalformedTableau("bottom row is empty".into()));
        }
        if top.len() < bottom.len() {
            return Err(Error::MalformedTableau(format!(
                "top row ({} entries) is shorter than bottom row ({} entries)",
                top.len(),
                bottom.len()
            )));
        }
        if !strictly_increasing(&top) {
            return Err(Error::MalformedTableau(format!("top row {top:?} is not strictly increasing")));
        }
        if !strictly_increasing(&bottom) {
            return Err(Error::MalformedTableau(format!("bottom row {bottom:?} is not strictly increasing")));
        }
        Ok(Self { top, bottom })
    }

    /// Top row `L₂`.
    pub fn top(&self) -> &[i64] {
        &self.top
    }

    /// Bottom row `L₁`.
    pub fn bottom(&self) -> &[i64] {
        &self.bottom
    }

    pub fn depth(&self) -> usize {
        self.top.len() - 1
    }

    /// The charge read off the row lengths and the leftmost top entry.
    pub fn charge(&self) -> Charge {
        let base = self.top[0];
        Charge::new(base + self.bottom.len() as i64 - 1, base + self.top.len() as i64 - 1)
    }

    /// Whether both rows start with the same entry.
    pub fn has_equal_leftmost_column(&self) -> bool {
        self.top[0] == self.bottom[0]
    }

    /// Sorted copy of every entry of both rows.
    pub fn entry_multiset(&self) -> Vec<i64> {
        let mut all: Vec<i64> = self.top.iter().chain(&self.bottom).copied().collect();
        all.sort_unstable();
        all
    }

    /// Compact one-line form, `(top)/(bottom)`.
    pub fn compact(&self) -> String {
        let row = |r: &[i64]| r.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        format!("({})/({})", row(&self.top), row(&self.bottom))
    }
}

/// Two rows sharing their leftmost column, every cell right-aligned to a
/// common width.
impl fmt::Display for TwoRowTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.top.iter().chain(&self.bottom).map(|v| v.to_string().len()).max().unwrap_or(1);
        let line = |row: &[i64]| row.iter().map(|v| format!("{v:>width$}")).collect::<Vec<_>>().join(" ");
        writeln!(f, "{}", line(&self.top))?;
        write!(f, "{}", line(&self.bottom))
    }
}

impl Serialize for TwoRowTableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("TwoRowTableau", 3)?;
        st.serialize_field("top", &self.top)?;
        st.serialize_field("bottom", &self.bottom)?;
        st.serialize_field("charge", &self.charge())?;
        st.end()
    }
}

/// Smallest `d ≥ s₂ − s₁` with `λ¹_{d+1+s₁−s₂} = λ²_{d+1} = 0`.
pub fn minimal_depth(cb: &ChargedBipartition) -> Result<usize> {
    cb.charge.ensure_supported()?;
    let gap = cb.charge.gap() as usize;
    let b = &cb.bipartition;
    // λ¹_{d+1−gap} = 0 iff d ≥ gap + len(λ¹); λ²_{d+1} = 0 iff d ≥ len(λ²)
    Ok(gap.max(gap + b.first.len()).max(b.second.len()))
}

fn rows_at_depth(cb: &ChargedBipartition, depth: usize) -> (Vec<i64>, Vec<i64>) {
    let Charge { s1, s2 } = cb.charge;
    let d = depth as i64;
    let base = s2 - d;
    let b = &cb.bipartition;
    let top = (1..=depth + 1).map(|j| base + (j as i64 - 1) + i64::from(b.second.part(depth + 2 - j))).collect();
    let bottom_len = (d + 1 + s1 - s2) as usize;
    let bottom =
        (1..=bottom_len).map(|j| base + (j as i64 - 1) + i64::from(b.first.part(bottom_len + 1 - j))).collect();
    (top, bottom)
}

/// The canonical (minimal-depth) tableau of `|λ, s⟩`.
pub fn build_tableau(cb: &ChargedBipartition) -> Result<TwoRowTableau> {
    let depth = minimal_depth(cb)?;
    let (top, bottom) = rows_at_depth(cb, depth);
    TwoRowTableau::new(top, bottom)
}

/// Decodes a tableau, canonical or padded, back into `|λ, s⟩`.
pub fn to_charged_bipartition(t: &TwoRowTableau) -> Result<ChargedBipartition> {
    if !t.has_equal_leftmost_column() {
        return Err(Error::MalformedTableau(format!(
            "leftmost entries differ: top starts at {}, bottom at {}",
            t.top[0], t.bottom[0]
        )));
    }
    let base = t.top[0];
    // column j holds base + j plus the part it encodes, read right to left
    let decode = |row: &[i64]| -> Result<Partition> {
        let parts = row
            .iter()
            .enumerate()
            .rev()
            .map(|(j, &v)| {
                let part = v - base - j as i64;
                u32::try_from(part).map_err(|_| {
                    Error::MalformedTableau(format!("entry {v} in column {} decodes to part {part}", j + 1))
                })
            })
            .collect::<Result<Vec<u32>>>()?;
        Partition::from_padded(parts).map_err(|e| Error::MalformedTableau(e.to_string()))
    };
    let bipartition = Bipartition::new(decode(&t.bottom)?, decode(&t.top)?);
    Ok(ChargedBipartition::new(bipartition, t.charge()))
}

/// Prepends the `m` integers `top[1] − m, …, top[1] − 1` to both rows.
pub fn pad(t: &TwoRowTableau, m: usize) -> TwoRowTableau {
    let start = t.top[0] - m as i64;
    let prefix = start..t.top[0];
    let top = prefix.clone().chain(t.top.iter().copied()).collect();
    let bottom = prefix.chain(t.bottom.iter().copied()).collect();
    TwoRowTableau { top, bottom }
}

/// Strips padding down to minimal depth.
///
/// Tableaux that do not encode a charged bipartition are returned unchanged.
pub fn canonicalize(t: &TwoRowTableau) -> TwoRowTableau {
    match to_charged_bipartition(t).and_then(|cb| build_tableau(&cb)) {
        Ok(canonical) => canonical,
        Err(_) => t.clone(),
    }
}
