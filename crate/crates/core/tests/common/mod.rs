//! Independent re-implementation used as a test oracle.
//!
//! Tableaux are built from charged beta-sets `{s + λ_i − i + 1}` instead of
//! the column formulas, and the swap works on plain value lists with
//! removal instead of index bookkeeping.

#![allow(dead_code)]

/// Parts padded with zeros up to `len`.
fn padded(parts: &[u32], len: usize) -> Vec<i64> {
    (0..len).map(|i| parts.get(i).map_or(0, |&p| i64::from(p))).collect()
}

/// Sorted beta-set of `parts` with charge `s` and `count` beads.
fn beta_set(parts: &[u32], s: i64, count: usize) -> Vec<i64> {
    let mut out: Vec<i64> = padded(parts, count).into_iter().enumerate().map(|(i, p)| s + p - i as i64).collect();
    out.sort_unstable();
    out
}

/// `(top, bottom)` of `|λ, (s1, s2)⟩`, `s1 ≤ s2`.
pub fn build(l1: &[u32], l2: &[u32], s1: i64, s2: i64) -> (Vec<i64>, Vec<i64>) {
    assert!(s1 <= s2);
    let gap = (s2 - s1) as usize;
    let mut d = gap;
    let part = |l: &[u32], i: usize| if i == 0 { 0 } else { l.get(i - 1).copied().unwrap_or(0) };
    while part(l1, d + 1 - gap) != 0 || part(l2, d + 1) != 0 {
        d += 1;
    }
    (beta_set(l2, s2, d + 1), beta_set(l1, s1, d + 1 - gap))
}

fn unbeta(row: &[i64], s: i64) -> Vec<u32> {
    let mut parts: Vec<u32> = row
        .iter()
        .rev()
        .enumerate()
        .map(|(i, &v)| u32::try_from(v - s + i as i64).expect("nonnegative part"))
        .collect();
    while parts.last() == Some(&0) {
        parts.pop();
    }
    parts
}

/// `(λ¹, λ², (s1, s2))` of a tableau.
pub fn decode(top: &[i64], bottom: &[i64]) -> (Vec<u32>, Vec<u32>, (i64, i64)) {
    let s2 = top[0] + top.len() as i64 - 1;
    let s1 = top[0] + bottom.len() as i64 - 1;
    (unbeta(bottom, s1), unbeta(top, s2), (s1, s2))
}

pub struct Crossing {
    pub top: Vec<i64>,
    pub bottom: Vec<i64>,
    /// 1-based top positions never taken
    pub holes: Vec<usize>,
    /// values taken through the fallback branch
    pub cycle_values: Vec<i64>,
    /// M-ordered displacements
    pub displacements: Vec<usize>,
}

/// Swap then sort, phrased as "swap with the maximal unused top entry not
/// exceeding the bottom entry if one exists, otherwise with the largest
/// unused top entry".
pub fn cross(top: &[i64], bottom: &[i64]) -> Crossing {
    let mut unused: Vec<(usize, i64)> = top.iter().copied().enumerate().map(|(i, v)| (i + 1, v)).collect();
    let mut taken: Vec<(usize, i64)> = Vec::new();
    let mut cycle_values = Vec::new();
    for &x in bottom {
        let below = unused.iter().filter(|p| p.1 <= x).max_by_key(|p| p.1).copied();
        let pick = match below {
            Some(p) => p,
            None => {
                let p = *unused.iter().max_by_key(|p| p.1).unwrap();
                cycle_values.push(p.1);
                p
            }
        };
        unused.retain(|&p| p != pick);
        taken.push(pick);
    }
    let mut new_bottom: Vec<i64> = taken.iter().map(|p| p.1).collect();
    new_bottom.sort_unstable();
    let mut new_top: Vec<i64> = unused.iter().map(|p| p.1).chain(bottom.iter().copied()).collect();
    new_top.sort_unstable();
    let mut positions: Vec<usize> = taken.iter().map(|p| p.0).collect();
    positions.sort_unstable();
    Crossing {
        top: new_top,
        bottom: new_bottom,
        holes: unused.iter().map(|p| p.0).collect(),
        cycle_values,
        displacements: positions.iter().enumerate().map(|(j, &i)| i - (j + 1)).collect(),
    }
}

pub fn phi(l1: &[u32], l2: &[u32], s1: i64, s2: i64) -> (Vec<u32>, Vec<u32>) {
    let (top, bottom) = build(l1, l2, s1, s2);
    let c = cross(&top, &bottom);
    let (a, b, _) = decode(&c.top, &c.bottom);
    (a, b)
}

/// Θ by applying Φ at growing charges until a full pass changes nothing
/// past the fixing bound.
pub fn theta(l1: &[u32], l2: &[u32], e: i64, s1: i64, s2: i64) -> (Vec<u32>, Vec<u32>) {
    let n: i64 = l1.iter().chain(l2).map(|&p| i64::from(p)).sum();
    let (mut a, mut b) = (l1.to_vec(), l2.to_vec());
    let mut k = 0;
    while k * e + s2 - s1 <= n + 2 * e {
        (a, b) = phi(&a, &b, s1, s2 + k * e);
        k += 1;
    }
    (a, b)
}

/// All partitions of `n` as part lists.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            rec(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn bipartitions(n: u32) -> Vec<(Vec<u32>, Vec<u32>)> {
    (0..=n)
        .flat_map(|k| {
            let seconds = partitions(n - k);
            partitions(k).into_iter().flat_map(move |a| seconds.clone().into_iter().map(move |b| (a.clone(), b)))
        })
        .collect()
}
