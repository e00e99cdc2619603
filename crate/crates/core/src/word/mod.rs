//! One-row partitions read as words, and the analytics defined on them.

mod doubling;
mod wdepth;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use doubling::{doubling_check, DoublingRule, DoublingViolation};
pub use wdepth::{contains_w, wdepth, wdepth_capped, Leg, WWitness, DEFAULT_LENGTH_CAP};

use crate::error::{Error, Result};
use crate::partition::{canonical_labels, tokenize, Partition};

/// A partition in `P(0, n)` written as a letter sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u32>,
}

impl Word {
    /// Builds a word from arbitrary labels, relabeling canonically.
    pub fn new<L: Eq + std::hash::Hash + Clone>(letters: &[L]) -> Word {
        Word {
            letters: canonical_labels(letters.iter().cloned()),
        }
    }

    pub fn from_partition(p: &Partition) -> Result<Word> {
        if p.upper_arity() != 0 {
            return Err(Error::UpperPointsPresent(p.upper_arity()));
        }
        Ok(Word {
            letters: p.labels().to_vec(),
        })
    }

    pub fn to_partition(&self) -> Partition {
        Partition::one_row(&self.letters)
    }

    /// Parses a word such as `abba`; a leading `;` is accepted.
    pub fn parse(text: &str) -> Result<Word> {
        let text = text.trim();
        if let Some(rest) = text.strip_prefix(';') {
            return Ok(Word::new(&tokenize(rest, 1)?));
        }
        if let Some(pos) = text.find(';') {
            return Err(Error::UpperPointsPresent(pos));
        }
        Ok(Word::new(&tokenize(text, 0)?))
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn num_blocks(&self) -> usize {
        self.letters.iter().max().map_or(0, |&m| m as usize + 1)
    }

    pub fn counts(&self) -> Vec<usize> {
        let mut c = vec![0; self.num_blocks()];
        for &l in &self.letters {
            c[l as usize] += 1;
        }
        c
    }

    /// The word read from position `offset` onwards, cyclically.
    pub fn rotated(&self, offset: usize) -> Word {
        let n = self.len();
        if n == 0 {
            return self.clone();
        }
        let v: Vec<u32> = (0..n).map(|i| self.letters[(i + offset) % n]).collect();
        Word::new(&v)
    }

    pub fn reversed(&self) -> Word {
        let v: Vec<u32> = self.letters.iter().rev().copied().collect();
        Word::new(&v)
    }

    pub fn is_noncrossing(&self) -> bool {
        self.to_partition().is_noncrossing()
    }

    pub fn all_blocks_even(&self) -> bool {
        self.counts().iter().all(|c| c % 2 == 0)
    }

    /// Shrinks every maximal run to length 1 (odd) or 2 (even).
    pub fn single_double_form(&self) -> Word {
        let mut out = Vec::with_capacity(self.len());
        let mut i = 0;
        while i < self.len() {
            let l = self.letters[i];
            let mut j = i;
            while j < self.len() && self.letters[j] == l {
                j += 1;
            }
            let keep = if (j - i) % 2 == 1 { 1 } else { 2 };
            out.extend(std::iter::repeat_n(l, keep));
            i = j;
        }
        Word::new(&out)
    }

    pub fn is_single_double(&self) -> bool {
        self.single_double_form().len() == self.len()
    }

    /// Step `k` goes down iff the letter at `k` has been seen an odd number
    /// of times up to and including `k`.
    pub fn dyck_path(&self) -> DyckPath {
        let mut seen = vec![0usize; self.num_blocks()];
        let steps = self
            .letters
            .iter()
            .map(|&l| {
                seen[l as usize] += 1;
                if seen[l as usize] % 2 == 1 {
                    -1
                } else {
                    1
                }
            })
            .collect();
        DyckPath { steps }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lit = self.to_partition().literal();
        f.write_str(&lit[1..])
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Word::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// A lattice path with steps `-1` (down) and `+1` (up).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyckPath {
    pub steps: Vec<i8>,
}

impl DyckPath {
    /// Levels after each step, starting from 0 (the starting level is included).
    pub fn levels(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut h = 0i64;
        out.push(h);
        for &s in &self.steps {
            h += s as i64;
            out.push(h);
        }
        out
    }

    pub fn final_level(&self) -> i64 {
        self.steps.iter().map(|&s| s as i64).sum()
    }

    /// `D` for a down step, `U` for an up step.
    pub fn as_string(&self) -> String {
        self.steps
            .iter()
            .map(|&s| if s < 0 { 'D' } else { 'U' })
            .collect()
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.as_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn partition_round_trip() {
        let p = Partition::parse(";abba").unwrap();
        let word = Word::from_partition(&p).unwrap();
        assert_eq!(word.to_string(), "abba");
        assert_eq!(word.to_partition(), p);
        assert_eq!(w("xyzzyxxyzzyx").to_string(), "abccbaabccba");
        assert!(Word::from_partition(&Partition::parse("a;a").unwrap()).is_err());
        assert_eq!(w(";abab"), w("abab"));
    }

    #[test]
    fn single_double_examples() {
        assert_eq!(w("aaabbbba").single_double_form(), w("abba"));
        assert_eq!(w("abbba").single_double_form(), w("aba"));
        assert_eq!(w("abbaabba").single_double_form(), w("abbaabba"));
        assert!(w("abbaabba").is_single_double());
    }

    #[test]
    fn dyck_examples() {
        assert_eq!(w("aa").dyck_path().as_string(), "DU");
        let p = w("abccddbaeffghhgeabba").dyck_path();
        let q = w("abccddbaaeebccbaijji").dyck_path();
        assert_eq!(p, q);
        assert_eq!(p.steps.len(), 20);
        assert_eq!(&p.levels()[..4], &[0, -1, -2, -3]);
        assert_eq!(p.final_level(), 0);
        assert_eq!(w("ab").dyck_path().final_level(), -2);
    }
}
