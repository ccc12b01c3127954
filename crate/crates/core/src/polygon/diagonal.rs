use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    Plain,
    Notched,
}

impl Tag {
    pub fn opposite(self) -> Tag {
        match self {
            Tag::Plain => Tag::Notched,
            Tag::Notched => Tag::Plain,
        }
    }
}

/// A tagged edge of the once-punctured n-gon. Border vertices are numbered
/// counterclockwise in `Z_n`.
///
/// `Arc { from, to }` is the edge from `from` to `to` homotopic to the
/// counterclockwise border path between them, so `Arc(a, b)` and `Arc(b, a)`
/// are different diagonals. It needs at least one border vertex strictly
/// between its ends. `Radius` joins a border vertex to the puncture.
///
/// The derived order (arcs first, then by indices, then plain before
/// notched) is the serialization order used everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Diagonal {
    Arc { from: usize, to: usize },
    Radius { base: usize, tag: Tag },
}

impl Diagonal {
    pub fn arc(from: usize, to: usize) -> Self {
        Diagonal::Arc { from, to }
    }

    pub fn radius(base: usize, tag: Tag) -> Self {
        Diagonal::Radius { base, tag }
    }

    pub fn plain(base: usize) -> Self {
        Diagonal::Radius {
            base,
            tag: Tag::Plain,
        }
    }

    pub fn notched(base: usize) -> Self {
        Diagonal::Radius {
            base,
            tag: Tag::Notched,
        }
    }

    pub fn is_radius(&self) -> bool {
        matches!(self, Diagonal::Radius { .. })
    }

    /// Counterclockwise distance from `from` to `to`; `None` for radii.
    pub fn span(&self, n: usize) -> Option<usize> {
        match *self {
            Diagonal::Arc { from, to } => Some((to + n - from % n) % n),
            Diagonal::Radius { .. } => None,
        }
    }

    pub fn is_valid(&self, n: usize) -> bool {
        match *self {
            Diagonal::Arc { from, to } => from < n && to < n && self.span(n).unwrap() >= 2,
            Diagonal::Radius { base, .. } => base < n,
        }
    }

    pub(crate) fn check(&self, n: usize) -> Result<()> {
        if self.is_valid(n) {
            Ok(())
        } else {
            Err(Error::InvalidDiagonal {
                diagonal: self.to_string(),
                n,
            })
        }
    }

    /// An arc cutting off a single border vertex.
    pub fn close_to_border(&self, n: usize) -> bool {
        self.span(n) == Some(2)
    }

    /// Shifts every border index by `-steps` (clockwise rotation).
    pub fn rotate(&self, n: usize, steps: i64) -> Diagonal {
        let shift = |v: usize| (v as i64 - steps).rem_euclid(n as i64) as usize;
        match *self {
            Diagonal::Arc { from, to } => Diagonal::Arc {
                from: shift(from),
                to: shift(to),
            },
            Diagonal::Radius { base, tag } => Diagonal::Radius {
                base: shift(base),
                tag,
            },
        }
    }

    /// Tag inversion: flips radii, fixes arcs.
    pub fn mu(&self) -> Diagonal {
        match *self {
            Diagonal::Radius { base, tag } => Diagonal::Radius {
                base,
                tag: tag.opposite(),
            },
            arc => arc,
        }
    }

    /// One clockwise step, inverting the tag of a radius.
    pub fn tau(&self, n: usize) -> Diagonal {
        self.rotate(n, 1).mu()
    }

    /// Realization of this diagonal in the double cover of the punctured
    /// n-gon, the 2n-gon branched at its center.
    pub fn lift(&self, n: usize) -> ChordLift {
        match *self {
            Diagonal::Arc { from, .. } => {
                let k = self.span(n).unwrap();
                let m = 2 * n;
                ChordLift {
                    chords: vec![(from, (from + k) % m), (from + n, (from + k + n) % m)],
                    color: None,
                }
            }
            Diagonal::Radius { base, tag } => ChordLift {
                chords: vec![(base, base + n)],
                color: Some(tag),
            },
        }
    }

    /// Minimal number of crossings with `other`, in `{0, 1, 2}`.
    ///
    /// Two radii cross once when both their bases and their tags differ. A
    /// radius crosses an arc once when its base lies strictly inside the
    /// arc's counterclockwise interval. Two arcs cross half as often as their
    /// centrally symmetric lifts do.
    pub fn crossing_number(&self, other: &Diagonal, n: usize) -> Result<u8> {
        self.check(n)?;
        other.check(n)?;
        Ok(match (*self, *other) {
            (Diagonal::Radius { base: a, tag: s }, Diagonal::Radius { base: c, tag: t }) => {
                u8::from(a != c && s != t)
            }
            (Diagonal::Radius { base, .. }, Diagonal::Arc { from, to })
            | (Diagonal::Arc { from, to }, Diagonal::Radius { base, .. }) => {
                u8::from(strictly_inside(base, from, to, n))
            }
            (Diagonal::Arc { .. }, Diagonal::Arc { .. }) => {
                (self.lift(n).crossings(&other.lift(n), 2 * n) / 2) as u8
            }
        })
    }

    pub fn compatible(&self, other: &Diagonal, n: usize) -> Result<bool> {
        Ok(self.crossing_number(other, n)? == 0)
    }
}

/// Is `x` in the open counterclockwise interval from `a` to `b` in `Z_m`?
pub(crate) fn strictly_inside(x: usize, a: usize, b: usize, m: usize) -> bool {
    let off = |v: usize| (v + m - a % m) % m;
    let (x, b) = (off(x), off(b));
    x > 0 && x < b
}

/// Chords of the 2n-gon covering a diagonal: an arc lifts to a centrally
/// symmetric pair, a radius to a diameter carrying its tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordLift {
    pub chords: Vec<(usize, usize)>,
    pub color: Option<Tag>,
}

impl ChordLift {
    /// Number of pairs of chords, one from each lift, whose endpoints
    /// strictly interleave on `Z_m`.
    pub fn crossings(&self, other: &ChordLift, m: usize) -> usize {
        let mut count = 0;
        for &(a, b) in &self.chords {
            for &(c, d) in &other.chords {
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                if strictly_inside(c, a, b, m) != strictly_inside(d, a, b, m) {
                    count += 1;
                }
            }
        }
        count
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagonal::Arc { from, to } => write!(f, "Arc({from},{to})"),
            Diagonal::Radius { base, tag } => {
                let t = match tag {
                    Tag::Plain => "plain",
                    Tag::Notched => "notched",
                };
                write!(f, "Radius({base},{t})")
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum DiagonalJson {
    Arc(ArcJson),
    Radius(RadiusJson),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArcJson {
    arc: [usize; 2],
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RadiusJson {
    radius: usize,
    tag: Tag,
}

impl Serialize for Diagonal {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let repr = match *self {
            Diagonal::Arc { from, to } => DiagonalJson::Arc(ArcJson { arc: [from, to] }),
            Diagonal::Radius { base, tag } => {
                DiagonalJson::Radius(RadiusJson { radius: base, tag })
            }
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Diagonal {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        Ok(match DiagonalJson::deserialize(deserializer)? {
            DiagonalJson::Arc(a) => Diagonal::arc(a.arc[0], a.arc[1]),
            DiagonalJson::Radius(r) => Diagonal::radius(r.radius, r.tag),
        })
    }
}
