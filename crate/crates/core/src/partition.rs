//! Two-row partition diagrams and the category operations on them.
//!
//! A [`Partition`] in `P(k, l)` has `k` upper and `l` lower points. Points are
//! indexed upper row first (left to right), then lower row (left to right),
//! and every point carries the id of its block. Block ids are always kept in
//! first-occurrence order, so structural equality is equality of partitions.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A partition of `k` upper and `l` lower points into blocks.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    upper: usize,
    lower: usize,
    blocks: Vec<u32>,
}

/// Which corner point a rotation moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Corner {
    /// Leftmost upper point moves to the left end of the lower row.
    TopLeft,
    /// Rightmost upper point moves to the right end of the lower row.
    TopRight,
    /// Leftmost lower point moves to the left end of the upper row.
    BottomLeft,
    /// Rightmost lower point moves to the right end of the upper row.
    BottomRight,
}

impl Corner {
    pub const ALL: [Corner; 4] = [
        Corner::TopLeft,
        Corner::TopRight,
        Corner::BottomLeft,
        Corner::BottomRight,
    ];

    /// The rotation that undoes this one.
    pub fn inverse(self) -> Corner {
        match self {
            Corner::TopLeft => Corner::BottomLeft,
            Corner::BottomLeft => Corner::TopLeft,
            Corner::TopRight => Corner::BottomRight,
            Corner::BottomRight => Corner::TopRight,
        }
    }
}

impl FromStr for Corner {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "top-left" | "tl" => Ok(Corner::TopLeft),
            "top-right" | "tr" => Ok(Corner::TopRight),
            "bottom-left" | "bl" => Ok(Corner::BottomLeft),
            "bottom-right" | "br" => Ok(Corner::BottomRight),
            other => Err(Error::UnknownTag(other.to_string())),
        }
    }
}

/// Relabels a sequence of arbitrary block labels into first-occurrence order.
pub(crate) fn canonical_labels<L, I>(labels: I) -> Vec<u32>
where
    L: Eq + Hash,
    I: IntoIterator<Item = L>,
{
    let mut seen: HashMap<L, u32> = HashMap::new();
    labels
        .into_iter()
        .map(|l| {
            let next = seen.len() as u32;
            *seen.entry(l).or_insert(next)
        })
        .collect()
}

/// Minimal union-find over block ids, used by composition.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller root so results do not depend on call order
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

impl Partition {
    /// Builds a partition from arbitrary labels; equal labels share a block
    /// across both rows.
    pub fn from_rows<L: Eq + Hash + Clone>(upper: &[L], lower: &[L]) -> Partition {
        Partition {
            upper: upper.len(),
            lower: lower.len(),
            blocks: canonical_labels(upper.iter().chain(lower.iter()).cloned()),
        }
    }

    /// Builds a partition from a flat label vector (upper row first).
    pub fn from_labels<L: Eq + Hash>(upper: usize, labels: Vec<L>) -> Result<Partition> {
        if upper > labels.len() {
            return Err(Error::ParameterOutOfRange(format!(
                "{upper} upper points requested from {} labels",
                labels.len()
            )));
        }
        let lower = labels.len() - upper;
        Ok(Partition {
            upper,
            lower,
            blocks: canonical_labels(labels),
        })
    }

    /// A partition in `P(0, n)` from a word.
    pub fn one_row<L: Eq + Hash + Clone>(word: &[L]) -> Partition {
        Partition::from_rows::<L>(&[], word)
    }

    /// The empty partition in `P(0, 0)`.
    pub fn empty() -> Partition {
        Partition {
            upper: 0,
            lower: 0,
            blocks: Vec::new(),
        }
    }

    pub fn upper_arity(&self) -> usize {
        self.upper
    }

    pub fn lower_arity(&self) -> usize {
        self.lower
    }

    /// Total number of points.
    pub fn size(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Block ids of all points, upper row first.
    pub fn labels(&self) -> &[u32] {
        &self.blocks
    }

    pub fn upper_row(&self) -> &[u32] {
        &self.blocks[..self.upper]
    }

    pub fn lower_row(&self) -> &[u32] {
        &self.blocks[self.upper..]
    }

    pub fn block_of(&self, point: usize) -> u32 {
        self.blocks[point]
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.iter().max().map_or(0, |&m| m as usize + 1)
    }

    /// Point indices grouped by block, in block-id order.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (i, &b) in self.blocks.iter().enumerate() {
            out[b as usize].push(i);
        }
        out
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.num_blocks()];
        for &b in &self.blocks {
            sizes[b as usize] += 1;
        }
        sizes
    }

    /// Horizontal concatenation.
    pub fn tensor(&self, other: &Partition) -> Partition {
        let shift = self.num_blocks() as u32;
        let shifted = |row: &[u32]| row.iter().map(|&b| b + shift).collect::<Vec<_>>();
        let mut upper: Vec<u32> = self.upper_row().to_vec();
        upper.extend(shifted(other.upper_row()));
        let mut lower: Vec<u32> = self.lower_row().to_vec();
        lower.extend(shifted(other.lower_row()));
        Partition::from_rows(&upper, &lower)
    }

    /// Vertical concatenation `self ∘ p`: `p` is put on top and its lower row
    /// is glued to the upper row of `self`. Returns the composite together
    /// with the number of removed loops.
    pub fn compose(&self, p: &Partition) -> Result<(Partition, usize)> {
        let q = self;
        if p.lower != q.upper {
            return Err(Error::ArityMismatch {
                lower: p.lower,
                upper: q.upper,
            });
        }
        let pb = p.num_blocks();
        let qb = q.num_blocks();
        let mut uf = UnionFind::new(pb + qb);
        for (i, &b) in p.lower_row().iter().enumerate() {
            uf.union(b as usize, pb + q.upper_row()[i] as usize);
        }
        let mut touches_outer = vec![false; pb + qb];
        for &b in p.upper_row() {
            let r = uf.find(b as usize);
            touches_outer[r] = true;
        }
        for &b in q.lower_row() {
            let r = uf.find(pb + b as usize);
            touches_outer[r] = true;
        }
        let mut loops = 0;
        for node in 0..pb + qb {
            if uf.find(node) == node && !touches_outer[node] {
                loops += 1;
            }
        }
        let upper: Vec<usize> = p.upper_row().iter().map(|&b| uf.find(b as usize)).collect();
        let lower: Vec<usize> = q
            .lower_row()
            .iter()
            .map(|&b| uf.find(pb + b as usize))
            .collect();
        Ok((Partition::from_rows(&upper, &lower), loops))
    }

    /// Turns the diagram upside down.
    pub fn involute(&self) -> Partition {
        Partition::from_rows(self.lower_row(), self.upper_row())
    }

    /// Moves one corner point to the other row, keeping its block.
    pub fn rotate(&self, corner: Corner) -> Result<Partition> {
        let mut upper = self.upper_row().to_vec();
        let mut lower = self.lower_row().to_vec();
        match corner {
            Corner::TopLeft => {
                if upper.is_empty() {
                    return Err(Error::EmptyRow("upper"));
                }
                let x = upper.remove(0);
                lower.insert(0, x);
            }
            Corner::TopRight => {
                let x = upper.pop().ok_or(Error::EmptyRow("upper"))?;
                lower.push(x);
            }
            Corner::BottomLeft => {
                if lower.is_empty() {
                    return Err(Error::EmptyRow("lower"));
                }
                let x = lower.remove(0);
                upper.insert(0, x);
            }
            Corner::BottomRight => {
                let x = lower.pop().ok_or(Error::EmptyRow("lower"))?;
                upper.push(x);
            }
        }
        Ok(Partition::from_rows(&upper, &lower))
    }

    /// Reverses both rows.
    pub fn vertical_reflect(&self) -> Partition {
        let upper: Vec<u32> = self.upper_row().iter().rev().copied().collect();
        let lower: Vec<u32> = self.lower_row().iter().rev().copied().collect();
        Partition::from_rows(&upper, &lower)
    }

    /// Rotates every upper point down through the top-left corner. The result
    /// lies in `P(0, k + l)` and reads the upper row reversed, then the lower
    /// row: the boundary of the diagram in cyclic order.
    pub fn to_one_row(&self) -> Partition {
        let word: Vec<u32> = self
            .upper_row()
            .iter()
            .rev()
            .chain(self.lower_row())
            .copied()
            .collect();
        Partition::one_row(&word)
    }

    /// Inverse of [`Partition::to_one_row`]: lifts the first `upper` points of a
    /// one-row partition back to the upper row.
    pub fn from_one_row(word: &Partition, upper: usize) -> Result<Partition> {
        if word.upper != 0 {
            return Err(Error::UpperPointsPresent(word.upper));
        }
        if upper > word.size() {
            return Err(Error::ParameterOutOfRange(format!(
                "cannot lift {upper} points from a word of length {}",
                word.size()
            )));
        }
        let up: Vec<u32> = word.blocks[..upper].iter().rev().copied().collect();
        Ok(Partition::from_rows(&up, &word.blocks[upper..]))
    }

    /// Noncrossing test on the cyclic boundary word, using a stack of open
    /// blocks.
    pub fn is_noncrossing(&self) -> bool {
        let word = self.to_one_row();
        let sizes = word.block_sizes();
        let mut seen = vec![0usize; sizes.len()];
        let mut stack: Vec<u32> = Vec::new();
        for &b in word.labels() {
            let bi = b as usize;
            if seen[bi] > 0 && stack.last() != Some(&b) {
                return false;
            }
            seen[bi] += 1;
            if seen[bi] == 1 && sizes[bi] > 1 {
                stack.push(b);
            } else if seen[bi] == sizes[bi] && sizes[bi] > 1 {
                stack.pop();
            }
        }
        true
    }

    /// True when every block has an even number of points.
    pub fn all_blocks_even(&self) -> bool {
        self.block_sizes().iter().all(|s| s % 2 == 0)
    }

    /// Parses a literal such as `"ab;ba"`.
    pub fn parse(text: &str) -> Result<Partition> {
        let text = text.trim();
        let semis: Vec<usize> = text.match_indices(';').map(|(i, _)| i).collect();
        match semis.len() {
            0 => Err(Error::Syntax {
                pos: text.len(),
                msg: "expected `;` separating upper and lower rows".into(),
            }),
            1 => {
                let cut = semis[0];
                let upper = tokenize(&text[..cut], 0)?;
                let lower = tokenize(&text[cut + 1..], cut + 1)?;
                Ok(Partition::from_rows(&upper, &lower))
            }
            _ => Err(Error::Syntax {
                pos: semis[1],
                msg: "more than one `;`".into(),
            }),
        }
    }

    /// Canonical literal of this partition.
    pub fn literal(&self) -> String {
        let mut s = String::with_capacity(self.size() + 1);
        for &b in self.upper_row() {
            push_label(&mut s, b);
        }
        s.push(';');
        for &b in self.lower_row() {
            push_label(&mut s, b);
        }
        s
    }
}

/// Splits one row of a literal into labels. `offset` is the byte position of
/// the row inside the full literal, used for error reporting.
pub(crate) fn tokenize(row: &str, offset: usize) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut chars = row.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        match c {
            'a'..='z' | '0'..='9' => out.push(c.to_string()),
            '{' => {
                let mut ident = String::new();
                let mut closed = false;
                for (_, d) in chars.by_ref() {
                    if d == '}' {
                        closed = true;
                        break;
                    }
                    if !(d.is_ascii_alphanumeric() || d == '_') {
                        return Err(Error::Syntax {
                            pos: offset + i,
                            msg: format!("invalid character `{d}` in braced label"),
                        });
                    }
                    ident.push(d);
                }
                if !closed {
                    return Err(Error::Syntax {
                        pos: offset + i,
                        msg: "unterminated `{`".into(),
                    });
                }
                if ident.is_empty() {
                    return Err(Error::EmptyLabel { pos: offset + i });
                }
                // keep braced and bare labels apart: `{a}` is not `a`
                out.push(format!("{{{ident}}}"));
            }
            other => {
                return Err(Error::Syntax {
                    pos: offset + i,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(out)
}

fn push_label(s: &mut String, b: u32) {
    if b < 26 {
        s.push((b'a' + b as u8) as char);
    } else {
        s.push_str(&format!("{{b{}}}", b + 1));
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({})", self.literal())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::parse(s)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.literal())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Partition::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Free-function form of composition, `q ∘ p`.
pub fn compose(q: &Partition, p: &Partition) -> Result<(Partition, usize)> {
    q.compose(p)
}

/// `k`-fold tensor power of the identity partition.
pub fn identity_power(k: usize) -> Partition {
    let labels: Vec<usize> = (0..k).chain(0..k).collect();
    Partition::from_labels(k, labels).expect("valid arity")
}
