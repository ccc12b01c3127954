//! Canonical forms for quivers up to relabeling of vertices.
//!
//! Vertices start in cells keyed by (in-degree, out-degree). Cells are then
//! refined until every vertex in a cell sees the same multiset of
//! (neighbor cell, matrix entry) pairs. When the refined partition is not
//! discrete, the search individualizes each vertex of the first non-trivial
//! cell in turn and recurses. Every leaf of the search tree is a vertex order;
//! the key is the smallest matrix serialization over all leaves. The set of
//! leaves only depends on the isomorphism type, so the minimum does too.

use std::fmt;

use crate::quiver::Quiver;

/// Byte string identifying an isomorphism or equivalence class.
///
/// Keys from different kinds of objects (quivers, triangulations, trees) use
/// different encodings and are never compared with each other.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn from_bytes(bytes: Vec<u8>) -> Self {
        CanonicalKey(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

type Cells = Vec<Vec<usize>>;

/// Canonical key of `q`.
pub fn canonical_key(q: &Quiver) -> CanonicalKey {
    canonical_labeling(q).1
}

/// `q` relabeled into its canonical vertex order.
pub fn canonical_form(q: &Quiver) -> Quiver {
    q.relabel(&canonical_labeling(q).0)
}

/// Canonical vertex order (position -> original vertex) together with the key.
pub fn canonical_labeling(q: &Quiver) -> (Vec<usize>, CanonicalKey) {
    let n = q.rank();
    let mut degree_classes: Vec<((i32, i32), usize)> = (0..n)
        .map(|v| ((q.in_degree(v), q.out_degree(v)), v))
        .collect();
    degree_classes.sort();
    let mut cells: Cells = Vec::new();
    let mut last = None;
    for (deg, v) in degree_classes {
        if last != Some(deg) {
            cells.push(Vec::new());
            last = Some(deg);
        }
        cells.last_mut().unwrap().push(v);
    }

    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    search(q, cells, &mut best);
    let (bytes, order) = best.unwrap_or_else(|| (serialize(q, &[]), Vec::new()));
    (order, CanonicalKey(bytes))
}

fn search(q: &Quiver, cells: Cells, best: &mut Option<(Vec<u8>, Vec<usize>)>) {
    let cells = refine(q, cells);
    let Some(split) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.into_iter().flatten().collect();
        let bytes = serialize(q, &order);
        if best.as_ref().is_none_or(|(b, _)| bytes < *b) {
            *best = Some((bytes, order));
        }
        return;
    };
    for &v in &cells[split] {
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..split]);
        next.push(vec![v]);
        next.push(cells[split].iter().copied().filter(|&u| u != v).collect());
        next.extend_from_slice(&cells[split + 1..]);
        search(q, next, best);
    }
}

/// Splits cells until the partition is equitable. Sub-cells are ordered by
/// their signature, which only refers to cell positions, so the result does
/// not depend on vertex labels.
fn refine(q: &Quiver, mut cells: Cells) -> Cells {
    let n = q.rank();
    let mut cell_of = vec![0usize; n];
    loop {
        for (c, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = c;
            }
        }
        let mut next: Cells = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut signed: Vec<(Vec<(usize, i32)>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig: Vec<(usize, i32)> = (0..n)
                        .filter(|&u| q.entry(v, u) != 0)
                        .map(|u| (cell_of[u], q.entry(v, u)))
                        .collect();
                    sig.sort_unstable();
                    (sig, v)
                })
                .collect();
            signed.sort();
            let mut start = 0;
            for i in 1..=signed.len() {
                if i == signed.len() || signed[i].0 != signed[start].0 {
                    next.push(signed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn serialize(q: &Quiver, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut out = Vec::with_capacity(4 + 4 * n * n);
    out.extend_from_slice(&(n as u32).to_be_bytes());
    for &u in order {
        for &v in order {
            // flip the sign bit so byte order matches integer order
            let e = (q.entry(u, v) as u32) ^ 0x8000_0000;
            out.extend_from_slice(&e.to_be_bytes());
        }
    }
    out
}
