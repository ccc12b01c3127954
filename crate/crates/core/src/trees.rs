//! Star trees: a root carrying a cyclic sequence of full binary trees
//! ("beads"), taken up to rotation at the root.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeTuple, Serializer};
use serde::{Deserialize, Serialize};

use crate::canon::CanonicalKey;
use crate::error::{Error, Result};

pub const DEFAULT_TREE_BOUND: usize = 12;

/// A full binary tree: every internal node has exactly two children.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

/// Direction from a node to one of its children.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Left,
    Right,
}

impl BinaryTree {
    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    pub fn leaves(&self) -> usize {
        match self {
            BinaryTree::Leaf => 1,
            BinaryTree::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, BinaryTree::Leaf)
    }

    /// Preorder, 1 for an internal node and 0 for a leaf. A prefix code, so
    /// concatenated encodings of bead sequences stay unambiguous.
    fn encode_into(&self, out: &mut Vec<u8>) {
        match self {
            BinaryTree::Leaf => out.push(0),
            BinaryTree::Node(l, r) => {
                out.push(1);
                l.encode_into(out);
                r.encode_into(out);
            }
        }
    }

    /// All full binary trees with `leaves` leaves.
    pub fn all_with_leaves(leaves: usize) -> Vec<BinaryTree> {
        let mut memo: Vec<Vec<BinaryTree>> = vec![Vec::new(), vec![BinaryTree::Leaf]];
        for size in 2..=leaves {
            let mut shapes = Vec::new();
            for left in 1..size {
                for l in &memo[left] {
                    for r in &memo[size - left] {
                        shapes.push(BinaryTree::node(l.clone(), r.clone()));
                    }
                }
            }
            memo.push(shapes);
        }
        memo.get(leaves).cloned().unwrap_or_default()
    }

    pub fn subtree(&self, path: &[Step]) -> Option<&BinaryTree> {
        match (path.split_first(), self) {
            (None, t) => Some(t),
            (Some((Step::Left, rest)), BinaryTree::Node(l, _)) => l.subtree(rest),
            (Some((Step::Right, rest)), BinaryTree::Node(_, r)) => r.subtree(rest),
            (Some(_), BinaryTree::Leaf) => None,
        }
    }

    /// Rotation at the edge from the node at `path[..len-1]` to its child at
    /// `path`: `(x, (y, z))` becomes `((x, y), z)` when the child is on the
    /// right, and `((y, z), x)` becomes `(y, (z, x))` when it is on the left.
    /// The rotated edge ends up at the same path with its last step flipped.
    fn rotate_at(&self, path: &[Step]) -> Result<BinaryTree> {
        let BinaryTree::Node(l, r) = self else {
            return Err(Error::TreeMutation("path runs past a leaf".into()));
        };
        match path {
            [] => Err(Error::TreeMutation("rotation needs a non-root edge".into())),
            [last] => match (last, l.as_ref(), r.as_ref()) {
                (Step::Right, x, BinaryTree::Node(y, z)) => Ok(BinaryTree::node(
                    BinaryTree::node(x.clone(), (**y).clone()),
                    (**z).clone(),
                )),
                (Step::Left, BinaryTree::Node(y, z), x) => Ok(BinaryTree::node(
                    (**y).clone(),
                    BinaryTree::node((**z).clone(), x.clone()),
                )),
                _ => Err(Error::TreeMutation("edge ends in a leaf".into())),
            },
            [Step::Left, rest @ ..] => Ok(BinaryTree::node(l.rotate_at(rest)?, (**r).clone())),
            [Step::Right, rest @ ..] => Ok(BinaryTree::node((**l).clone(), r.rotate_at(rest)?)),
        }
    }
}

impl Serialize for BinaryTree {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            BinaryTree::Leaf => serializer.serialize_str("L"),
            BinaryTree::Node(l, r) => {
                let mut tup = serializer.serialize_tuple(2)?;
                tup.serialize_element(l.as_ref())?;
                tup.serialize_element(r.as_ref())?;
                tup.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for BinaryTree {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct TreeVisitor;

        impl<'de> Visitor<'de> for TreeVisitor {
            type Value = BinaryTree;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("\"L\" or a [left, right] pair")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<BinaryTree, E> {
                if v == "L" {
                    Ok(BinaryTree::Leaf)
                } else {
                    Err(E::invalid_value(de::Unexpected::Str(v), &self))
                }
            }

            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<BinaryTree, A::Error> {
                let l = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(0, &self))?;
                let r = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(1, &self))?;
                if seq.next_element::<de::IgnoredAny>()?.is_some() {
                    return Err(de::Error::invalid_length(3, &self));
                }
                Ok(BinaryTree::node(l, r))
            }
        }

        deserializer.deserialize_any(TreeVisitor)
    }
}

/// A tree in `B_n`: beads hang from the root in counterclockwise order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct StarTree {
    beads: Vec<BinaryTree>,
}

/// A position in a star tree where a mutation applies.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TreeMutation {
    /// Drop the root edge of bead `i`, its two subtrees becoming beads.
    SplitBead(usize),
    /// Hang beads `i` and `i + 1` (cyclically) below a new root edge.
    MergeBeads(usize),
    /// Rotate at an inner edge of bead `bead`, given by its path.
    RotateEdge { bead: usize, path: Vec<Step> },
}

impl StarTree {
    pub fn new(beads: Vec<BinaryTree>) -> Result<Self> {
        if beads.is_empty() {
            return Err(Error::InvalidArgument(
                "a star tree needs at least one bead".into(),
            ));
        }
        Ok(StarTree { beads })
    }

    /// `n` leaves directly at the root.
    pub fn star(n: usize) -> Result<Self> {
        StarTree::new(vec![BinaryTree::Leaf; n])
    }

    pub fn beads(&self) -> &[BinaryTree] {
        &self.beads
    }

    pub fn leaves(&self) -> usize {
        self.beads.iter().map(BinaryTree::leaves).sum()
    }

    /// Smallest rotation of the bead sequence.
    pub fn canonical(&self) -> StarTree {
        let k = self.beads.len();
        let best = (0..k).min_by_key(|&i| self.rotation_bytes(i)).unwrap_or(0);
        let mut beads = self.beads.clone();
        beads.rotate_left(best);
        StarTree { beads }
    }

    fn rotation_bytes(&self, start: usize) -> Vec<u8> {
        let k = self.beads.len();
        let mut out = Vec::new();
        for i in 0..k {
            self.beads[(start + i) % k].encode_into(&mut out);
        }
        out
    }

    /// Equal iff the bead sequences agree up to cyclic rotation.
    pub fn key(&self) -> CanonicalKey {
        let k = self.beads.len();
        let bytes = (0..k)
            .map(|i| self.rotation_bytes(i))
            .min()
            .unwrap_or_default();
        CanonicalKey::from_bytes(bytes)
    }

    pub fn split_bead(&self, i: usize) -> Result<StarTree> {
        match self.beads.get(i) {
            Some(BinaryTree::Node(l, r)) => {
                let mut beads = self.beads.clone();
                beads.splice(i..=i, [(**l).clone(), (**r).clone()]);
                Ok(StarTree { beads })
            }
            Some(BinaryTree::Leaf) => Err(Error::TreeMutation(format!("bead {i} is a leaf"))),
            None => Err(Error::TreeMutation(format!("no bead {i}"))),
        }
    }

    pub fn merge_beads(&self, i: usize) -> Result<StarTree> {
        let k = self.beads.len();
        if k < 2 {
            return Err(Error::TreeMutation("merging needs two beads".into()));
        }
        if i >= k {
            return Err(Error::TreeMutation(format!("no bead {i}")));
        }
        let j = (i + 1) % k;
        let merged = BinaryTree::node(self.beads[i].clone(), self.beads[j].clone());
        let mut beads = self.beads.clone();
        if j == 0 {
            beads.pop();
            beads[0] = merged;
        } else {
            beads[i] = merged;
            beads.remove(j);
        }
        Ok(StarTree { beads })
    }

    pub fn rotate_edge(&self, bead: usize, path: &[Step]) -> Result<StarTree> {
        let b = self
            .beads
            .get(bead)
            .ok_or_else(|| Error::TreeMutation(format!("no bead {bead}")))?;
        let mut beads = self.beads.clone();
        beads[bead] = b.rotate_at(path)?;
        Ok(StarTree { beads })
    }

    pub fn mutate(&self, m: &TreeMutation) -> Result<StarTree> {
        match m {
            TreeMutation::SplitBead(i) => self.split_bead(*i),
            TreeMutation::MergeBeads(i) => self.merge_beads(*i),
            TreeMutation::RotateEdge { bead, path } => self.rotate_edge(*bead, path),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StarTreeJson {
    beads: Vec<BinaryTree>,
}

impl<'de> Deserialize<'de> for StarTree {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = StarTreeJson::deserialize(deserializer)?;
        StarTree::new(raw.beads).map_err(de::Error::custom)
    }
}

/// Rotation classes of star trees with `n` leaves, keyed, each with its
/// canonical rotation.
pub fn enumerate_star_trees(n: usize, bound: usize) -> Result<BTreeMap<CanonicalKey, StarTree>> {
    if n == 0 {
        return Err(Error::InvalidArgument("star trees need n >= 1".into()));
    }
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    let shapes: Vec<Vec<BinaryTree>> = (0..=n).map(BinaryTree::all_with_leaves).collect();
    let mut out = BTreeMap::new();
    let mut beads = Vec::new();
    compositions(n, &shapes, &mut beads, &mut out);
    Ok(out)
}

fn compositions(
    remaining: usize,
    shapes: &[Vec<BinaryTree>],
    beads: &mut Vec<BinaryTree>,
    out: &mut BTreeMap<CanonicalKey, StarTree>,
) {
    if remaining == 0 {
        let t = StarTree {
            beads: beads.clone(),
        };
        out.entry(t.key()).or_insert_with(|| t.canonical());
        return;
    }
    for part in 1..=remaining {
        for shape in &shapes[part] {
            beads.push(shape.clone());
            compositions(remaining - part, shapes, beads, out);
            beads.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const L: BinaryTree = BinaryTree::Leaf;

    fn n(l: BinaryTree, r: BinaryTree) -> BinaryTree {
        BinaryTree::node(l, r)
    }

    #[test]
    fn shapes_are_catalan() {
        let counts: Vec<usize> = (1..9)
            .map(|k| BinaryTree::all_with_leaves(k).len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn key_is_rotation_invariant() {
        let t1 = n(L, n(L, L));
        let a = StarTree::new(vec![t1.clone(), L]).unwrap();
        let b = StarTree::new(vec![L, t1]).unwrap();
        assert_eq!(a.key(), b.key());
        // reflection is not quotiented
        let c = StarTree::new(vec![n(L, L), L, n(n(L, L), L)]).unwrap();
        let d = StarTree::new(vec![n(n(L, L), L), L, n(L, L)]).unwrap();
        assert_ne!(c.key(), d.key());
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_star_trees(1, 12).unwrap().len(), 1);
        assert_eq!(enumerate_star_trees(4, 12).unwrap().len(), 10);
        assert_eq!(enumerate_star_trees(5, 12).unwrap().len(), 26);
        assert!(matches!(
            enumerate_star_trees(13, 12),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn split_and_merge() {
        let t = StarTree::new(vec![n(L, L), L]).unwrap();
        let s = t.split_bead(0).unwrap();
        assert_eq!(s, StarTree::star(3).unwrap());
        assert_eq!(s.merge_beads(0).unwrap(), t);
        assert!(matches!(t.split_bead(1), Err(Error::TreeMutation(_))));

        let r3 = StarTree::star(3).unwrap();
        assert_eq!(r3.merge_beads(0).unwrap().beads(), &[n(L, L), L]);
        // the wrap-around pair puts the merged bead first
        let u = StarTree::new(vec![n(L, L), L, n(L, n(L, L))]).unwrap();
        let m = u.merge_beads(2).unwrap();
        assert_eq!(m.beads(), &[n(n(L, n(L, L)), n(L, L)), L]);
        assert_eq!(m.split_bead(0).unwrap().key(), u.key());

        let single = StarTree::new(vec![n(L, L)]).unwrap();
        assert!(single.merge_beads(0).is_err());
        assert_eq!(single.split_bead(0).unwrap().beads().len(), 2);
    }

    #[test]
    fn rotation_examples() {
        let t = StarTree::new(vec![n(L, n(L, L))]).unwrap();
        let r = t.rotate_edge(0, &[Step::Right]).unwrap();
        assert_eq!(r.beads(), &[n(n(L, L), L)]);
        assert_eq!(r.rotate_edge(0, &[Step::Left]).unwrap(), t);
        assert!(t.rotate_edge(0, &[]).is_err());
        assert!(t.rotate_edge(0, &[Step::Left]).is_err());
        assert_eq!(r.leaves(), t.leaves());
    }

    #[test]
    fn json_shape() {
        let t = StarTree::new(vec![n(L, n(L, L)), L]).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"beads":[["L",["L","L"]],"L"]}"#);
        assert_eq!(serde_json::from_str::<StarTree>(&s).unwrap(), t);
        assert!(serde_json::from_str::<StarTree>(r#"{"beads":[]}"#).is_err());
        assert!(serde_json::from_str::<StarTree>(r#"{"beads":[["L"]]}"#).is_err());
        assert!(serde_json::from_str::<StarTree>(r#"{"beads":["X"]}"#).is_err());
    }
}
