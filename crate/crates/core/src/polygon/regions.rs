//! Decomposition of a triangulation into puncture-free polygons.
//!
//! In a fan (config A) the radii cut the punctured polygon into segments; each
//! segment is bounded by two consecutive radii and the border between their
//! bases. The triangle at the puncture has the segment's base as third side
//! and the rest of the segment is an ordinary triangulated polygon. With a
//! tagged pair (config B) one radius is drawn as a loop, and the region
//! outside the loop is a triangulated (n+1)-gon closed off by the loop.
//!
//! A region is addressed by positions `0..=len` along the border starting at
//! `start`; position `p` is border vertex `(start + p) % n`.

use crate::error::{Error, Result};
use crate::polygon::{Diagonal, Triangulation};
use crate::trees::{BinaryTree, Step};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Side {
    Border,
    /// Index into the triangulation's sorted diagonal list.
    Diagonal(usize),
    /// The side `(0, len)` closing the region: a base arc or the loop.
    Closing,
}

#[derive(Debug, Clone)]
pub(crate) struct RegionWalk {
    pub tree: BinaryTree,
    /// Triangles as position triples `p < z < q`.
    pub triangles: Vec<(usize, usize, usize)>,
    /// Every non-closing arc of the region with the path to its tree node.
    pub arcs: Vec<(usize, Vec<Step>)>,
}

pub(crate) struct Region<'a> {
    pub t: &'a Triangulation,
    pub start: usize,
    pub len: usize,
}

impl Region<'_> {
    fn vertex(&self, p: usize) -> usize {
        (self.start + p) % self.t.n()
    }

    fn arc_index(&self, p: usize, q: usize) -> Option<usize> {
        self.t
            .index_of(&Diagonal::arc(self.vertex(p), self.vertex(q)))
    }

    pub fn side(&self, p: usize, q: usize) -> Side {
        if q == p + 1 {
            Side::Border
        } else if p == 0 && q == self.len {
            Side::Closing
        } else {
            Side::Diagonal(
                self.arc_index(p, q)
                    .expect("side of a triangle is in the triangulation"),
            )
        }
    }

    fn is_side(&self, p: usize, q: usize) -> bool {
        q == p + 1 || self.arc_index(p, q).is_some()
    }

    pub fn walk(&self) -> Result<RegionWalk> {
        let mut out = RegionWalk {
            tree: BinaryTree::Leaf,
            triangles: Vec::new(),
            arcs: Vec::new(),
        };
        let mut path = Vec::new();
        out.tree = self.walk_interval(0, self.len, &mut path, &mut out.triangles, &mut out.arcs)?;
        Ok(out)
    }

    fn walk_interval(
        &self,
        p: usize,
        q: usize,
        path: &mut Vec<Step>,
        triangles: &mut Vec<(usize, usize, usize)>,
        arcs: &mut Vec<(usize, Vec<Step>)>,
    ) -> Result<BinaryTree> {
        if q == p + 1 {
            return Ok(BinaryTree::Leaf);
        }
        if !(p == 0 && q == self.len) {
            arcs.push((self.arc_index(p, q).unwrap(), path.clone()));
        }
        let apex = (p + 1..q)
            .find(|&z| self.is_side(p, z) && self.is_side(z, q))
            .ok_or_else(|| {
                Error::NotATriangulation(format!(
                    "no triangle on side ({}, {})",
                    self.vertex(p),
                    self.vertex(q)
                ))
            })?;
        triangles.push((p, apex, q));
        path.push(Step::Left);
        let left = self.walk_interval(p, apex, path, triangles, arcs)?;
        path.pop();
        path.push(Step::Right);
        let right = self.walk_interval(apex, q, path, triangles, arcs)?;
        path.pop();
        Ok(BinaryTree::node(left, right))
    }
}
