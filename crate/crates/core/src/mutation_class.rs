//! Breadth-first enumeration of a mutation class up to isomorphism.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::canon::{canonical_labeling, CanonicalKey};
use crate::error::{Error, Result};
use crate::quiver::Quiver;

pub const DEFAULT_CLASS_CAP: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BfsOptions {
    /// Abort once more than this many classes have been found.
    pub cap: usize,
    /// Canonicalize each BFS level on the rayon pool. Insertion order, and
    /// therefore the result, is the same as the sequential run.
    pub parallel: bool,
}

impl Default for BfsOptions {
    fn default() -> Self {
        BfsOptions {
            cap: DEFAULT_CLASS_CAP,
            parallel: false,
        }
    }
}

/// Isomorphism classes of a mutation class, each with its canonical form.
#[derive(Debug, Clone, Default)]
pub struct MutationClass {
    classes: BTreeMap<CanonicalKey, Quiver>,
}

impl MutationClass {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn contains(&self, key: &CanonicalKey) -> bool {
        self.classes.contains_key(key)
    }

    pub fn keys(&self) -> impl Iterator<Item = &CanonicalKey> {
        self.classes.keys()
    }

    /// Canonical representatives in key order.
    pub fn representatives(&self) -> impl Iterator<Item = &Quiver> {
        self.classes.values()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CanonicalKey, &Quiver)> {
        self.classes.iter()
    }
}

pub fn mutation_class(seed: &Quiver) -> Result<MutationClass> {
    mutation_class_with(seed, &BfsOptions::default())
}

pub fn mutation_class_with(seed: &Quiver, opts: &BfsOptions) -> Result<MutationClass> {
    if !seed.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut classes = BTreeMap::new();
    let (order, key) = canonical_labeling(seed);
    let start = seed.relabel(&order);
    classes.insert(key, start.clone());
    let mut frontier = vec![start];

    while !frontier.is_empty() {
        let expand = |q: &Quiver| -> Result<Vec<(CanonicalKey, Quiver)>> {
            (0..q.rank())
                .map(|k| {
                    let m = q.mutate(k)?;
                    let (order, key) = canonical_labeling(&m);
                    Ok((key, m.relabel(&order)))
                })
                .collect()
        };
        let neighbours: Vec<Vec<(CanonicalKey, Quiver)>> = if opts.parallel {
            frontier.par_iter().map(expand).collect::<Result<_>>()?
        } else {
            frontier.iter().map(expand).collect::<Result<_>>()?
        };
        let mut next = Vec::new();
        for (key, q) in neighbours.into_iter().flatten() {
            if let Entry::Vacant(slot) = classes.entry(key) {
                slot.insert(q.clone());
                next.push(q);
                if classes.len() > opts.cap {
                    return Err(Error::ClassCapExceeded { cap: opts.cap });
                }
            }
        }
        frontier = next;
    }
    Ok(MutationClass { classes })
}

/// Mutation class of the D_n diagram with the given orientation bits.
pub fn d_mutation_class(n: usize, orientation: u64, opts: &BfsOptions) -> Result<MutationClass> {
    mutation_class_with(&Quiver::dynkin_d(n, orientation)?, opts)
}
