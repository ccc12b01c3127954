use std::fmt;

use serde::{Deserialize, Serialize};

use crate::canon::CanonicalKey;
use crate::error::{Error, Result};
use crate::polygon::regions::{Region, Side};
use crate::polygon::{all_diagonals, Diagonal, Tag};
use crate::quiver::Quiver;

/// A maximal set of pairwise compatible diagonals of the punctured n-gon.
/// Diagonals are kept sorted; quiver vertex `i` is diagonal `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangulation {
    n: usize,
    diagonals: Vec<Diagonal>,
}

/// How the radii of a triangulation sit at the puncture.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TagStructure {
    /// At least two radii, all with the same tag, at distinct bases (sorted).
    Fan { bases: Vec<usize>, tag: Tag },
    /// Exactly two radii at one base, with opposite tags.
    Pair { base: usize },
}

impl Triangulation {
    pub fn new(n: usize, mut diagonals: Vec<Diagonal>) -> Result<Self> {
        if n < 3 {
            return Err(Error::PolygonTooSmall { n, min: 3 });
        }
        for d in &diagonals {
            d.check(n)?;
        }
        diagonals.sort();
        diagonals.dedup();
        if diagonals.len() != n {
            return Err(Error::NotATriangulation(format!(
                "{} distinct diagonals, need {n}",
                diagonals.len()
            )));
        }
        for (i, a) in diagonals.iter().enumerate() {
            for b in &diagonals[i + 1..] {
                if a.crossing_number(b, n)? != 0 {
                    return Err(Error::NotATriangulation(format!("{a} crosses {b}")));
                }
            }
        }
        let t = Triangulation { n, diagonals };
        t.tag_structure()?;
        Ok(t)
    }

    /// Caller guarantees a sorted, valid triangulation.
    pub(crate) fn from_sorted_unchecked(n: usize, diagonals: Vec<Diagonal>) -> Self {
        debug_assert!(diagonals.windows(2).all(|w| w[0] < w[1]));
        Triangulation { n, diagonals }
    }

    /// The fan of `n` radii with the given tag.
    pub fn fan(n: usize, tag: Tag) -> Result<Self> {
        Triangulation::new(n, (0..n).map(|b| Diagonal::radius(b, tag)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    pub fn index_of(&self, d: &Diagonal) -> Option<usize> {
        self.diagonals.binary_search(d).ok()
    }

    pub fn contains(&self, d: &Diagonal) -> bool {
        self.index_of(d).is_some()
    }

    pub fn is_fan(&self) -> bool {
        self.diagonals.iter().all(Diagonal::is_radius)
    }

    pub fn tag_structure(&self) -> Result<TagStructure> {
        let radii: Vec<(usize, Tag)> = self
            .diagonals
            .iter()
            .filter_map(|d| match *d {
                Diagonal::Radius { base, tag } => Some((base, tag)),
                Diagonal::Arc { .. } => None,
            })
            .collect();
        match radii.as_slice() {
            [(a, Tag::Plain), (b, Tag::Notched)] if a == b => Ok(TagStructure::Pair { base: *a }),
            [(_, tag), rest @ ..] if !rest.is_empty() && rest.iter().all(|(_, t)| t == tag) => {
                Ok(TagStructure::Fan {
                    bases: radii.iter().map(|(b, _)| *b).collect(),
                    tag: *tag,
                })
            }
            _ => Err(Error::NotATriangulation(format!(
                "malformed radii {radii:?}"
            ))),
        }
    }

    /// Replaces `d` by the unique other diagonal completing `self ∖ {d}`.
    pub fn flip(&self, d: &Diagonal) -> Result<(Triangulation, Diagonal)> {
        let pos = self
            .index_of(d)
            .ok_or_else(|| Error::DiagonalNotFound(d.to_string()))?;
        let mut rest = self.diagonals.clone();
        rest.remove(pos);
        let mut candidates = Vec::new();
        for c in all_diagonals(self.n)? {
            if rest.binary_search(&c).is_ok() {
                continue;
            }
            let mut ok = true;
            for r in &rest {
                if c.crossing_number(r, self.n)? != 0 {
                    ok = false;
                    break;
                }
            }
            if ok {
                candidates.push(c);
            }
        }
        if candidates.len() != 2 || !candidates.contains(d) {
            return Err(Error::FlipDefect {
                candidates: candidates.len(),
            });
        }
        let other = *candidates.iter().find(|c| *c != d).unwrap();
        let pos = rest.binary_search(&other).unwrap_err();
        rest.insert(pos, other);
        Ok((Triangulation::from_sorted_unchecked(self.n, rest), other))
    }

    fn map(&self, f: impl Fn(&Diagonal) -> Diagonal) -> Triangulation {
        let mut diagonals: Vec<Diagonal> = self.diagonals.iter().map(f).collect();
        diagonals.sort();
        Triangulation::from_sorted_unchecked(self.n, diagonals)
    }

    /// Rotation by `steps` clockwise.
    pub fn rotate(&self, steps: i64) -> Triangulation {
        let n = self.n;
        self.map(|d| d.rotate(n, steps))
    }

    pub fn invert_tags(&self) -> Triangulation {
        self.map(Diagonal::mu)
    }

    pub fn tau(&self) -> Triangulation {
        let n = self.n;
        self.map(|d| d.tau(n))
    }

    fn serialize_into(&self, out: &mut Vec<u8>) {
        out.push(self.n as u8);
        for d in &self.diagonals {
            match *d {
                Diagonal::Arc { from, to } => out.extend_from_slice(&[0, from as u8, to as u8]),
                Diagonal::Radius { base, tag } => {
                    out.extend_from_slice(&[1, base as u8, (tag == Tag::Notched) as u8])
                }
            }
        }
    }

    /// Smallest member of the class under rotation and tag inversion.
    pub fn class_representative(&self) -> Triangulation {
        let mut best: Option<(Vec<u8>, Triangulation)> = None;
        for base in [self.clone(), self.invert_tags()] {
            for i in 0..self.n as i64 {
                let t = base.rotate(i);
                let mut bytes = Vec::new();
                t.serialize_into(&mut bytes);
                if best.as_ref().is_none_or(|(b, _)| bytes < *b) {
                    best = Some((bytes, t));
                }
            }
        }
        best.unwrap().1
    }

    /// Key of the class under rotation and tag inversion.
    pub fn class_key(&self) -> CanonicalKey {
        let mut bytes = Vec::new();
        self.class_representative().serialize_into(&mut bytes);
        CanonicalKey::from_bytes(bytes)
    }

    /// Turns the close-to-border arc `d = Arc(a, a+2)` into a border edge:
    /// vertex `a+1` disappears and higher labels shift down by one.
    pub fn factor_out(&self, d: &Diagonal) -> Result<Triangulation> {
        if !self.contains(d) {
            return Err(Error::DiagonalNotFound(d.to_string()));
        }
        if !d.close_to_border(self.n) {
            return Err(Error::NotCloseToBorder(d.to_string()));
        }
        if self.n < 4 {
            return Err(Error::PolygonTooSmall { n: self.n, min: 4 });
        }
        let Diagonal::Arc { from, .. } = *d else {
            unreachable!()
        };
        let gone = (from + 1) % self.n;
        let relabel = |v: usize| {
            debug_assert_ne!(v, gone);
            if v > gone {
                v - 1
            } else {
                v
            }
        };
        let kept = self
            .diagonals
            .iter()
            .filter(|x| *x != d)
            .map(|x| match *x {
                Diagonal::Arc { from, to } => Diagonal::arc(relabel(from), relabel(to)),
                Diagonal::Radius { base, tag } => Diagonal::radius(relabel(base), tag),
            })
            .collect();
        Triangulation::new(self.n - 1, kept)
    }

    /// Triangles of the triangulation, sides listed counterclockwise. For a
    /// tagged pair the loop shows up as [`TriangleSide::Loop`].
    pub(crate) fn triangles(&self) -> Result<Vec<[TriangleSide; 3]>> {
        let n = self.n;
        let mut out = Vec::new();
        let lift = |s: Side, closing: TriangleSide| match s {
            Side::Border => TriangleSide::Border,
            Side::Diagonal(i) => TriangleSide::Diagonal(i),
            Side::Closing => closing,
        };
        match self.tag_structure()? {
            TagStructure::Fan { bases, tag } => {
                let m = bases.len();
                for i in 0..m {
                    let (start, end) = (bases[i], bases[(i + 1) % m]);
                    let len = (end + n - start) % n;
                    let region = Region {
                        t: self,
                        start,
                        len,
                    };
                    let base_side = if len == 1 {
                        TriangleSide::Border
                    } else {
                        TriangleSide::Diagonal(
                            self.index_of(&Diagonal::arc(start, end)).ok_or_else(|| {
                                Error::NotATriangulation(format!(
                                    "segment {start}..{end} has no base arc"
                                ))
                            })?,
                        )
                    };
                    let radius = |b: usize| {
                        self.index_of(&Diagonal::radius(b, tag))
                            .map(TriangleSide::Diagonal)
                            .expect("fan radius")
                    };
                    out.push([radius(start), base_side, radius(end)]);
                    for (p, z, q) in region.walk()?.triangles {
                        out.push([
                            lift(region.side(p, z), base_side),
                            lift(region.side(z, q), base_side),
                            lift(region.side(p, q), base_side),
                        ]);
                    }
                }
            }
            TagStructure::Pair { base } => {
                let region = Region {
                    t: self,
                    start: base,
                    len: n,
                };
                for (p, z, q) in region.walk()?.triangles {
                    out.push([
                        lift(region.side(p, z), TriangleSide::Loop),
                        lift(region.side(z, q), TriangleSide::Loop),
                        lift(region.side(p, q), TriangleSide::Loop),
                    ]);
                }
            }
        }
        Ok(out)
    }

    /// The quiver of the triangulation: one vertex per diagonal, an arrow for
    /// each pair of diagonals sharing a triangle, pointing from a side to the
    /// side reached by turning counterclockwise about their common corner;
    /// opposite arrows cancel. Both radii of a tagged pair take the place of
    /// the loop, each in its own copy of the loop triangle.
    pub fn quiver(&self) -> Result<Quiver> {
        let n = self.n;
        let loop_radii: Vec<usize> = match self.tag_structure()? {
            TagStructure::Pair { base } => [Diagonal::plain(base), Diagonal::notched(base)]
                .iter()
                .filter_map(|d| self.index_of(d))
                .collect(),
            TagStructure::Fan { .. } => Vec::new(),
        };
        let vertices = |s: TriangleSide| -> Vec<usize> {
            match s {
                TriangleSide::Border => Vec::new(),
                TriangleSide::Diagonal(i) => vec![i],
                TriangleSide::Loop => loop_radii.clone(),
            }
        };
        let mut b = vec![0i32; n * n];
        for sides in self.triangles()? {
            for i in 0..3 {
                for from in vertices(sides[i]) {
                    for to in vertices(sides[(i + 2) % 3]) {
                        b[from * n + to] += 1;
                        b[to * n + from] -= 1;
                    }
                }
            }
        }
        Quiver::from_matrix(n, b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum TriangleSide {
    Border,
    Diagonal(usize),
    Loop,
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}[", self.n)?;
        for (i, d) in self.diagonals.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TriangulationJson {
    n: usize,
    diagonals: Vec<Diagonal>,
}

impl Serialize for Triangulation {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        TriangulationJson {
            n: self.n,
            diagonals: self.diagonals.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Triangulation {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let raw = TriangulationJson::deserialize(deserializer)?;
        Triangulation::new(raw.n, raw.diagonals).map_err(serde::de::Error::custom)
    }
}
