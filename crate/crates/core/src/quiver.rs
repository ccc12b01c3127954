//! Quivers encoded by their skew-symmetric exchange matrix.
//!
//! Entry `b[i][j]` counts arrows `i -> j` minus arrows `j -> i`, so loops and
//! oriented 2-cycles have no representation at all. Mutation is the usual
//! exchange-matrix rule, which on single-arrow quivers without 2-cycles
//! performs the four-step procedure: compose paths through `k`, cancel the
//! resulting 2-cycles, and reverse the arrows at `k`.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    rank: usize,
    b: Vec<i32>,
}

impl Quiver {
    /// The quiver with `rank` vertices and no arrows.
    pub fn empty(rank: usize) -> Self {
        Quiver {
            rank,
            b: vec![0; rank * rank],
        }
    }

    /// Builds a quiver from a row-major exchange matrix.
    pub fn from_matrix(rank: usize, b: Vec<i32>) -> Result<Self> {
        if b.len() != rank * rank {
            return Err(Error::MatrixShape {
                rank,
                expected: rank * rank,
                found: b.len(),
            });
        }
        for i in 0..rank {
            for j in i..rank {
                if b[i * rank + j] != -b[j * rank + i] {
                    return Err(Error::NotSkewSymmetric { i, j });
                }
            }
        }
        Ok(Quiver { rank, b })
    }

    /// Builds a quiver from a list of arrows `(from, to)`. Repeated arrows add
    /// up; arrows in both directions between the same pair are rejected.
    pub fn from_arrows(rank: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        let mut q = Quiver::empty(rank);
        for &(from, to) in arrows {
            for index in [from, to] {
                if index >= rank {
                    return Err(Error::VertexOutOfRange { index, rank });
                }
            }
            if from == to {
                return Err(Error::Loop { from, to });
            }
            if q.entry(from, to) < 0 {
                return Err(Error::TwoCycle { a: from, b: to });
            }
            q.b[from * rank + to] += 1;
            q.b[to * rank + from] -= 1;
        }
        Ok(q)
    }

    /// Dynkin diagram of type D_n: a path `0 - 1 - ... - (n-3)` with the fork
    /// `n-2`, `n-1` attached to `n-3`. Bit `e` of `orientation` reverses edge
    /// `e` (path edges first, then the two fork edges).
    pub fn dynkin_d(n: usize, orientation: u64) -> Result<Self> {
        if n < 3 {
            return Err(Error::RankTooSmall { rank: n, min: 3 });
        }
        let mut edges: Vec<(usize, usize)> = (0..n - 3).map(|i| (i, i + 1)).collect();
        edges.push((n - 3, n - 2));
        edges.push((n - 3, n - 1));
        Self::orient(n, &edges, orientation)
    }

    /// Dynkin diagram of type A_n, the path `0 - 1 - ... - (n-1)`.
    pub fn dynkin_a(n: usize, orientation: u64) -> Result<Self> {
        if n < 1 {
            return Err(Error::RankTooSmall { rank: n, min: 1 });
        }
        let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Self::orient(n, &edges, orientation)
    }

    fn orient(n: usize, edges: &[(usize, usize)], orientation: u64) -> Result<Self> {
        let arrows: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .map(|(e, &(u, v))| {
                if e < 64 && orientation >> e & 1 == 1 {
                    (v, u)
                } else {
                    (u, v)
                }
            })
            .collect();
        Self::from_arrows(n, &arrows)
    }

    /// The oriented cycle `0 -> 1 -> ... -> n-1 -> 0`.
    pub fn oriented_cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::RankTooSmall { rank: n, min: 3 });
        }
        let arrows: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_arrows(n, &arrows)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i32 {
        self.b[i * self.rank + j]
    }

    pub fn matrix(&self) -> &[i32] {
        &self.b
    }

    /// Arrows `i -> j`, one pair per arrow, in row-major order.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.rank {
            for j in 0..self.rank {
                for _ in 0..self.entry(i, j).max(0) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn in_degree(&self, v: usize) -> i32 {
        (0..self.rank).map(|u| self.entry(u, v).max(0)).sum()
    }

    pub fn out_degree(&self, v: usize) -> i32 {
        (0..self.rank).map(|u| self.entry(v, u).max(0)).sum()
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.in_degree(v) == 0
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.out_degree(v) == 0
    }

    /// True if `v` lies on an oriented cycle `v -> x -> y -> v`.
    pub fn on_oriented_triangle(&self, v: usize) -> bool {
        (0..self.rank).any(|x| {
            self.entry(v, x) > 0
                && (0..self.rank).any(|y| self.entry(x, y) > 0 && self.entry(y, v) > 0)
        })
    }

    fn check_vertex(&self, k: usize) -> Result<()> {
        if k >= self.rank {
            Err(Error::VertexOutOfRange {
                index: k,
                rank: self.rank,
            })
        } else {
            Ok(())
        }
    }

    /// Mutation at vertex `k`.
    pub fn mutate(&self, k: usize) -> Result<Quiver> {
        self.check_vertex(k)?;
        let n = self.rank;
        let mut b = self.b.clone();
        for i in 0..n {
            for j in 0..n {
                let idx = i * n + j;
                if i == k || j == k {
                    b[idx] = -self.b[idx];
                    continue;
                }
                let bik = self.entry(i, k);
                let bkj = self.entry(k, j);
                // (|b_ik| b_kj + b_ik |b_kj|) / 2 is nonzero only when both
                // factors share a sign, i.e. on a path i -> k -> j or its reverse.
                let delta = if bik > 0 && bkj > 0 {
                    bik.checked_mul(bkj)
                } else if bik < 0 && bkj < 0 {
                    bik.checked_mul(bkj).map(|p| -p)
                } else {
                    Some(0)
                };
                b[idx] = delta
                    .and_then(|d| self.b[idx].checked_add(d))
                    .ok_or(Error::EntryOverflow)?;
            }
        }
        Ok(Quiver { rank: n, b })
    }

    /// Full subquiver on every vertex except `k`; higher labels shift down.
    pub fn delete_vertex(&self, k: usize) -> Result<Quiver> {
        self.check_vertex(k)?;
        if self.rank < 2 {
            return Err(Error::RankTooSmall {
                rank: self.rank,
                min: 2,
            });
        }
        let keep: Vec<usize> = (0..self.rank).filter(|&v| v != k).collect();
        Ok(self.relabel(&keep))
    }

    /// The quiver whose vertex `p` is vertex `order[p]` of `self`.
    ///
    /// `order` may omit vertices, in which case the result is the full
    /// subquiver on the listed ones.
    pub fn relabel(&self, order: &[usize]) -> Quiver {
        let m = order.len();
        let mut b = Vec::with_capacity(m * m);
        for &u in order {
            for &v in order {
                b.push(self.entry(u, v));
            }
        }
        Quiver { rank: m, b }
    }

    /// Connectivity of the underlying undirected graph. The empty quiver
    /// counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.rank == 0 {
            return true;
        }
        let mut seen = vec![false; self.rank];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for (v, s) in seen.iter_mut().enumerate() {
                if !*s && self.entry(u, v) != 0 {
                    *s = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.rank
    }

    /// Graphviz rendering: one node per vertex, one edge per arrow.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph quiver {\n");
        for v in 0..self.rank {
            let _ = writeln!(out, "  {v} [label=\"{v}\"];");
        }
        for (i, j) in self.arrows() {
            let _ = writeln!(out, "  {i} -> {j};");
        }
        out.push_str("}\n");
        out
    }
}

/// On-disk form: `{"rank": n, "arrows": [[i, j], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverJson {
    pub rank: usize,
    pub arrows: Vec<[usize; 2]>,
}

impl From<&Quiver> for QuiverJson {
    fn from(q: &Quiver) -> Self {
        QuiverJson {
            rank: q.rank(),
            arrows: q.arrows().into_iter().map(|(i, j)| [i, j]).collect(),
        }
    }
}

impl TryFrom<QuiverJson> for Quiver {
    type Error = Error;

    fn try_from(value: QuiverJson) -> Result<Self> {
        let arrows: Vec<(usize, usize)> = value.arrows.iter().map(|a| (a[0], a[1])).collect();
        Quiver::from_arrows(value.rank, &arrows)
    }
}

impl Serialize for Quiver {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        QuiverJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Quiver {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let raw = QuiverJson::deserialize(deserializer)?;
        Quiver::try_from(raw).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arrows(q: &Quiver) -> Vec<(usize, usize)> {
        let mut a = q.arrows();
        a.sort();
        a
    }

    #[test]
    fn d4_sink_mutation_reverses_its_arrow() {
        // 1->2, 2->3, 4->2 in 0-based labels.
        let q = Quiver::from_arrows(4, &[(0, 1), (1, 2), (3, 1)]).unwrap();
        let m = q.mutate(2).unwrap();
        assert_eq!(arrows(&m), vec![(0, 1), (2, 1), (3, 1)]);
    }

    #[test]
    fn a3_middle_mutation_gives_oriented_triangle() {
        let q = Quiver::from_arrows(3, &[(0, 1), (1, 2)]).unwrap();
        let m = q.mutate(1).unwrap();
        assert_eq!(arrows(&m), vec![(0, 2), (1, 0), (2, 1)]);
        assert!(m.on_oriented_triangle(0));
    }

    #[test]
    fn mutation_cancels_two_cycles() {
        // 0->1->2 with 2->0: mutating at 1 adds 0->2, cancelling 2->0.
        let q = Quiver::from_arrows(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let m = q.mutate(1).unwrap();
        assert_eq!(m.entry(0, 2), 0);
        assert_eq!(arrows(&m), vec![(1, 0), (2, 1)]);
    }

    #[test]
    fn mutate_out_of_range() {
        let q = Quiver::dynkin_d(4, 0).unwrap();
        assert_eq!(
            q.mutate(4),
            Err(Error::VertexOutOfRange { index: 4, rank: 4 })
        );
        assert!(q.delete_vertex(9).is_err());
    }

    #[test]
    fn delete_vertex_examples() {
        let cyc = Quiver::oriented_cycle(3).unwrap();
        for k in 0..3 {
            let d = cyc.delete_vertex(k).unwrap();
            assert_eq!(d.rank(), 2);
            assert_eq!(d.arrows().len(), 1);
        }
        let path = Quiver::from_arrows(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(arrows(&path.delete_vertex(2).unwrap()), vec![(0, 1)]);

        let d4 = Quiver::from_arrows(4, &[(0, 1), (1, 2), (3, 1)]).unwrap();
        // remaining vertices 2,3,4 (1-based) become 0,1,2: 2->3 and 4->2
        assert_eq!(arrows(&d4.delete_vertex(0).unwrap()), vec![(0, 1), (2, 0)]);
    }

    #[test]
    fn connectivity() {
        assert!(Quiver::oriented_cycle(3).unwrap().is_connected());
        let two = Quiver::from_arrows(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two.is_connected());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            Quiver::from_arrows(2, &[(0, 1), (1, 0)]),
            Err(Error::TwoCycle { .. })
        ));
        assert!(matches!(
            Quiver::from_arrows(2, &[(1, 1)]),
            Err(Error::Loop { .. })
        ));
        assert!(matches!(
            Quiver::from_matrix(2, vec![0, 1, 1, 0]),
            Err(Error::NotSkewSymmetric { .. })
        ));
        assert!(matches!(
            Quiver::from_matrix(2, vec![0, 1, -1]),
            Err(Error::MatrixShape { .. })
        ));
    }

    #[test]
    fn json_round_trip_and_dot() {
        let q = Quiver::oriented_cycle(3).unwrap();
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, r#"{"rank":3,"arrows":[[0,1],[1,2],[2,0]]}"#);
        let back: Quiver = serde_json::from_str(&s).unwrap();
        assert_eq!(back, q);
        let dot = q.to_dot();
        assert!(dot.starts_with("digraph quiver {"));
        assert!(dot.contains("  2 -> 0;"));
        assert_eq!(dot.matches("->").count(), 3);
    }

    #[test]
    fn dynkin_seeds() {
        let d5 = Quiver::dynkin_d(5, 0).unwrap();
        assert_eq!(arrows(&d5), vec![(0, 1), (1, 2), (2, 3), (2, 4)]);
        let d5r = Quiver::dynkin_d(5, 0b1000).unwrap();
        assert_eq!(arrows(&d5r), vec![(0, 1), (1, 2), (2, 3), (4, 2)]);
        assert!(Quiver::dynkin_d(2, 0).is_err());
        assert_eq!(Quiver::dynkin_a(1, 0).unwrap().rank(), 1);
    }
}
