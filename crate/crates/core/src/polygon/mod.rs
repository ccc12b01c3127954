//! Tagged triangulations of the once-punctured n-gon.

mod diagonal;
pub(crate) mod regions;
mod triangulation;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rayon::prelude::*;

use crate::canon::CanonicalKey;
use crate::error::{Error, Result};

pub use diagonal::{ChordLift, Diagonal, Tag};
pub use triangulation::{TagStructure, Triangulation};

pub const DEFAULT_TRIANGULATION_BOUND: usize = 7;

/// All `n(n-2)` arcs and `2n` radii, sorted.
pub fn all_diagonals(n: usize) -> Result<Vec<Diagonal>> {
    if n < 3 {
        return Err(Error::PolygonTooSmall { n, min: 3 });
    }
    let mut out = Vec::with_capacity(n * n);
    for from in 0..n {
        for k in 2..n {
            out.push(Diagonal::arc(from, (from + k) % n));
        }
    }
    for base in 0..n {
        out.push(Diagonal::plain(base));
        out.push(Diagonal::notched(base));
    }
    out.sort();
    Ok(out)
}

pub fn is_triangulation(n: usize, diagonals: &[Diagonal]) -> bool {
    Triangulation::new(n, diagonals.to_vec()).is_ok()
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::PolygonTooSmall { n, min: 3 });
    }
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    Ok(())
}

/// Every triangulation of the punctured n-gon, sorted, found as the
/// n-cliques of the compatibility graph on all diagonals.
pub fn enumerate_triangulations(n: usize, bound: usize) -> Result<Vec<Triangulation>> {
    check_bound(n, bound)?;
    let all = all_diagonals(n)?;
    let m = all.len();
    let mut compatible = vec![false; m * m];
    for i in 0..m {
        for j in 0..m {
            compatible[i * m + j] = i != j && all[i].crossing_number(&all[j], n)? == 0;
        }
    }
    // branch on the first diagonal, each branch is an independent search
    let mut found: Vec<Triangulation> = (0..m)
        .into_par_iter()
        .flat_map_iter(|first| {
            let candidates: Vec<usize> = (first + 1..m)
                .filter(|&j| compatible[first * m + j])
                .collect();
            let mut out = Vec::new();
            let mut chosen = vec![first];
            extend_clique(n, &all, &compatible, &mut chosen, &candidates, &mut out);
            out
        })
        .collect();
    found.sort();
    Ok(found)
}

fn extend_clique(
    n: usize,
    all: &[Diagonal],
    compatible: &[bool],
    chosen: &mut Vec<usize>,
    candidates: &[usize],
    out: &mut Vec<Triangulation>,
) {
    if chosen.len() == n {
        let diagonals = chosen.iter().map(|&i| all[i]).collect();
        out.push(Triangulation::from_sorted_unchecked(n, diagonals));
        return;
    }
    if chosen.len() + candidates.len() < n {
        return;
    }
    let m = all.len();
    for (pos, &c) in candidates.iter().enumerate() {
        let rest: Vec<usize> = candidates[pos + 1..]
            .iter()
            .copied()
            .filter(|&j| compatible[c * m + j])
            .collect();
        chosen.push(c);
        extend_clique(n, all, compatible, chosen, &rest, out);
        chosen.pop();
    }
}

/// Triangulations reachable from the plain fan by flips, sorted.
pub fn flip_closure(n: usize, bound: usize) -> Result<Vec<Triangulation>> {
    check_bound(n, bound)?;
    let start = Triangulation::fan(n, Tag::Plain)?;
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(t) = queue.pop_front() {
        for d in t.diagonals() {
            let (next, _) = t.flip(d)?;
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// One representative per class under rotation and tag inversion.
pub fn triangulation_classes(
    n: usize,
    bound: usize,
) -> Result<BTreeMap<CanonicalKey, Triangulation>> {
    let mut classes = BTreeMap::new();
    for t in enumerate_triangulations(n, bound)? {
        classes
            .entry(t.class_key())
            .or_insert_with(|| t.class_representative());
    }
    Ok(classes)
}
