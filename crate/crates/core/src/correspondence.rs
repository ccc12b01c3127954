//! The bijection between triangulations up to rotation and tag inversion and
//! star trees up to rotation at the root.
//!
//! `sigma` takes the dual tree of the triangulation: triangles are nodes,
//! adjacent triangles are joined unless they share a radius, every border
//! edge gets a leaf, and all triangles at the puncture merge into the root.
//! `lambda` rebuilds a triangulation from the beads.

use crate::error::{Error, Result};
use crate::polygon::regions::Region;
use crate::polygon::{Diagonal, TagStructure, Triangulation};
use crate::trees::{BinaryTree, StarTree, TreeMutation};

/// Star tree of a triangulation.
pub fn sigma(t: &Triangulation) -> Result<StarTree> {
    Ok(sigma_with_mutations(t)?.0)
}

/// Star tree of `t` together with, for each diagonal of `t` (in order), the
/// tree mutation matching the flip at that diagonal.
pub fn sigma_with_mutations(t: &Triangulation) -> Result<(StarTree, Vec<TreeMutation>)> {
    let n = t.n();
    let mut moves: Vec<Option<TreeMutation>> = vec![None; n];
    let mut beads = Vec::new();
    match t.tag_structure()? {
        TagStructure::Fan { bases, tag } => {
            let m = bases.len();
            for (i, &start) in bases.iter().enumerate() {
                let end = bases[(i + 1) % m];
                let len = (end + n - start) % n;
                let walk = Region { t, start, len }.walk()?;
                for (idx, path) in walk.arcs {
                    moves[idx] = Some(TreeMutation::RotateEdge { bead: i, path });
                }
                if len > 1 {
                    let base = t.index_of(&Diagonal::arc(start, end)).unwrap();
                    moves[base] = Some(TreeMutation::SplitBead(i));
                }
                // the radius at `end` separates bead i from bead i + 1
                let r = t.index_of(&Diagonal::radius(end, tag)).unwrap();
                moves[r] = Some(TreeMutation::MergeBeads(i));
                beads.push(walk.tree);
            }
        }
        TagStructure::Pair { base } => {
            let walk = Region {
                t,
                start: base,
                len: n,
            }
            .walk()?;
            for (idx, path) in walk.arcs {
                moves[idx] = Some(TreeMutation::RotateEdge { bead: 0, path });
            }
            for r in [Diagonal::plain(base), Diagonal::notched(base)] {
                moves[t.index_of(&r).unwrap()] = Some(TreeMutation::SplitBead(0));
            }
            beads.push(walk.tree);
        }
    }
    let moves = moves
        .into_iter()
        .map(|m| m.expect("every diagonal is a radius, a base arc or an inner arc"))
        .collect();
    Ok((StarTree::new(beads)?, moves))
}

/// Triangulation of the punctured `n`-gon built from a star tree: plain radii
/// at the segment boundaries starting from vertex 0, each segment cut up
/// along its bead. A single bead gives the tagged pair at vertex 0.
pub fn lambda(tree: &StarTree, n: usize) -> Result<Triangulation> {
    let found = tree.leaves();
    if found != n {
        return Err(Error::LeafCountMismatch { expected: n, found });
    }
    if n < 3 {
        return Err(Error::PolygonTooSmall { n, min: 3 });
    }
    let mut diagonals = Vec::with_capacity(n);
    if let [bead] = tree.beads() {
        diagonals.push(Diagonal::plain(0));
        diagonals.push(Diagonal::notched(0));
        split_segment(bead, 0, n, n, &mut diagonals);
    } else {
        let mut start = 0;
        for bead in tree.beads() {
            let len = bead.leaves();
            diagonals.push(Diagonal::plain(start));
            if len >= 2 {
                diagonals.push(Diagonal::arc(start, (start + len) % n));
            }
            split_segment(bead, start, start + len, n, &mut diagonals);
            start += len;
        }
    }
    Triangulation::new(n, diagonals)
}

/// Arcs inside the segment `from..to` below its base: a left subtree with
/// `r` leaves cuts off the first `r` border edges.
fn split_segment(bead: &BinaryTree, from: usize, to: usize, n: usize, out: &mut Vec<Diagonal>) {
    if let BinaryTree::Node(left, right) = bead {
        let mid = from + left.leaves();
        if mid - from >= 2 {
            out.push(Diagonal::arc(from % n, mid % n));
        }
        if to - mid >= 2 {
            out.push(Diagonal::arc(mid % n, to % n));
        }
        split_segment(left, from, mid, n, out);
        split_segment(right, mid, to, n, out);
    }
}
