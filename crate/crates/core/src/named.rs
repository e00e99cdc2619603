//! The special partitions that keep turning up in the classification.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Tags for the named partitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Named {
    Singleton,
    DoubleSingleton,
    Pair,
    Identity,
    FourBlock,
    /// Two blocks alternating over `2s` points, `s >= 2`.
    H(usize),
    Crossing,
    FatCrossing,
    HalfLiberator,
    PairPositioner,
    /// `a1..ak ak..a1 a1..ak ak..a1`, `k >= 1`.
    Pi(usize),
    Empty,
}

impl Named {
    pub fn partition(self) -> Result<Partition> {
        let lit = |s: &str| Partition::parse(s).expect("catalog literal");
        Ok(match self {
            Named::Singleton => lit(";a"),
            Named::DoubleSingleton => lit(";ab"),
            Named::Pair => lit(";aa"),
            Named::Identity => lit("a;a"),
            Named::FourBlock => lit(";aaaa"),
            Named::H(s) => {
                if s < 2 {
                    return Err(Error::ParameterOutOfRange(format!("h(s) needs s >= 2, got {s}")));
                }
                let word: Vec<u32> = (0..2 * s).map(|i| (i % 2) as u32).collect();
                Partition::one_row(&word)
            }
            Named::Crossing => lit("ab;ba"),
            Named::FatCrossing => lit("aabb;bbaa"),
            Named::HalfLiberator => lit("abc;cba"),
            Named::PairPositioner => lit("aab;baa"),
            Named::Pi(k) => pi(k)?,
            Named::Empty => Partition::empty(),
        })
    }

    /// Short tag used on the command line.
    pub fn tag(self) -> String {
        match self {
            Named::Singleton => "singleton".into(),
            Named::DoubleSingleton => "double-singleton".into(),
            Named::Pair => "pair".into(),
            Named::Identity => "identity".into(),
            Named::FourBlock => "four-block".into(),
            Named::H(s) => format!("h{s}"),
            Named::Crossing => "crossing".into(),
            Named::FatCrossing => "fatcross".into(),
            Named::HalfLiberator => "halflib".into(),
            Named::PairPositioner => "pairpositioner".into(),
            Named::Pi(k) => format!("pi{k}"),
            Named::Empty => "empty".into(),
        }
    }
}

/// `π_k` as a one-row partition on `4k` points.
pub fn pi(k: usize) -> Result<Partition> {
    if k == 0 {
        return Err(Error::ParameterOutOfRange("pi(k) needs k >= 1".into()));
    }
    let up: Vec<usize> = (0..k).collect();
    let down: Vec<usize> = (0..k).rev().collect();
    let word: Vec<usize> = [&up[..], &down[..], &up[..], &down[..]].concat();
    Ok(Partition::one_row(&word))
}

impl fmt::Display for Named {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

fn suffix_number(s: &str, prefix: &str) -> Option<usize> {
    let rest = s.strip_prefix(prefix)?;
    let rest = rest.trim_start_matches('(').trim_end_matches(')');
    rest.parse().ok()
}

impl FromStr for Named {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace(['_', '-'], "");
        Ok(match key.as_str() {
            "singleton" => Named::Singleton,
            "doublesingleton" => Named::DoubleSingleton,
            "pair" => Named::Pair,
            "identity" | "id" => Named::Identity,
            "fourblock" | "four" => Named::FourBlock,
            "crossing" | "cross" => Named::Crossing,
            "fatcrossing" | "fatcross" => Named::FatCrossing,
            "halfliberator" | "halflib" => Named::HalfLiberator,
            "pairpositioner" => Named::PairPositioner,
            "empty" => Named::Empty,
            _ => {
                if let Some(n) = suffix_number(&key, "pi") {
                    Named::Pi(n)
                } else if let Some(n) = suffix_number(&key, "h") {
                    Named::H(n)
                } else {
                    return Err(Error::UnknownTag(s.to_string()));
                }
            }
        })
    }
}

/// Resolves a command-line generator: a catalog tag or a partition literal.
pub fn resolve(text: &str) -> Result<Partition> {
    if text.contains(';') {
        Partition::parse(text)
    } else {
        text.parse::<Named>()?.partition()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals() {
        assert_eq!(Named::Pi(2).partition().unwrap().literal(), ";abbaabba");
        assert_eq!(Named::Pi(3).partition().unwrap().literal(), ";abccbaabccba");
        assert_eq!(Named::H(3).partition().unwrap().literal(), ";ababab");
        assert_eq!(Named::Pi(1).partition().unwrap(), Named::FourBlock.partition().unwrap());
        assert!(Named::H(1).partition().is_err());
        assert!(Named::Pi(0).partition().is_err());
    }

    #[test]
    fn pi2_is_a_rotated_fat_crossing() {
        let w = Named::FatCrossing.partition().unwrap().to_one_row();
        assert_eq!(w.literal(), ";aabbaabb");
        let target = pi(2).unwrap();
        let n = w.size();
        let found = (0..n).any(|r| {
            let rotated: Vec<u32> = (0..n).map(|i| w.labels()[(i + r) % n]).collect();
            Partition::one_row(&rotated) == target
        });
        assert!(found);
    }

    #[test]
    fn tags_round_trip() {
        for n in [
            Named::Singleton,
            Named::DoubleSingleton,
            Named::Pair,
            Named::Identity,
            Named::FourBlock,
            Named::H(4),
            Named::Crossing,
            Named::FatCrossing,
            Named::HalfLiberator,
            Named::PairPositioner,
            Named::Pi(5),
            Named::Empty,
        ] {
            assert_eq!(n.tag().parse::<Named>().unwrap(), n);
        }
        assert_eq!(resolve("h3").unwrap().literal(), ";ababab");
        assert_eq!(resolve("ab;ba").unwrap(), Named::Crossing.partition().unwrap());
        assert!(resolve("nonsense").is_err());
    }
}
