use serde::{Deserialize, Serialize};

use super::Word;

/// Which part of the doubling constraint a gap breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DoublingRule {
    /// Another letter occurs an odd number of times in the gap.
    OddLetter,
    /// The gap has odd length.
    OddGap,
    /// The gap has even length at least two but no two equal neighbours.
    NoAdjacentPair,
}

/// One offending gap `a X a` between consecutive occurrences of a letter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoublingViolation {
    pub rule: DoublingRule,
    pub letter: u32,
    /// Position of the opening occurrence.
    pub start: usize,
    /// Position of the closing occurrence; smaller than `start` when the
    /// gap wraps around the end of the word.
    pub end: usize,
    /// For [`DoublingRule::OddLetter`], the letter with odd count.
    pub other: Option<u32>,
}

/// Checks every gap between cyclically consecutive occurrences of a letter.
pub fn doubling_check(word: &Word) -> Vec<DoublingViolation> {
    let n = word.len();
    let letters = word.letters();
    let mut positions = vec![Vec::new(); word.num_blocks()];
    for (i, &l) in letters.iter().enumerate() {
        positions[l as usize].push(i);
    }
    let mut out = Vec::new();
    for (a, pos) in positions.iter().enumerate() {
        if pos.len() < 2 {
            continue;
        }
        for (idx, &start) in pos.iter().enumerate() {
            let end = pos[(idx + 1) % pos.len()];
            let gap_len = (end + n - start - 1) % n;
            let gap: Vec<u32> = (1..=gap_len).map(|d| letters[(start + d) % n]).collect();
            let mut odd = vec![false; word.num_blocks()];
            for &b in &gap {
                odd[b as usize] ^= true;
            }
            let base = |rule, other| DoublingViolation {
                rule,
                letter: a as u32,
                start,
                end,
                other,
            };
            for (b, &o) in odd.iter().enumerate() {
                if o {
                    out.push(base(DoublingRule::OddLetter, Some(b as u32)));
                }
            }
            if gap_len % 2 == 1 {
                out.push(base(DoublingRule::OddGap, None));
            } else if gap_len >= 2 && !gap.windows(2).any(|w| w[0] == w[1]) {
                out.push(base(DoublingRule::NoAdjacentPair, None));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(s: &str) -> Vec<DoublingViolation> {
        doubling_check(&Word::parse(s).unwrap())
    }

    #[test]
    fn examples() {
        let v = check("abab");
        assert!(v
            .iter()
            .any(|x| x.rule == DoublingRule::OddLetter && x.letter == 0 && x.other == Some(1)));
        assert!(check("abba").is_empty());
        assert!(check("abbaabba").is_empty());
        assert!(check("aaaa").is_empty());
    }

    #[test]
    fn no_adjacent_pair() {
        assert!(check("abccbadd").is_empty());
        let v = check("abcbcadd");
        assert!(v
            .iter()
            .any(|x| x.rule == DoublingRule::NoAdjacentPair && x.letter == 0 && x.end == 5));
    }

    #[test]
    fn wrap_around_gap() {
        // the gap between the last a and the first a is "b"
        let v = check("aab");
        assert!(v.iter().any(|x| x.rule == DoublingRule::OddGap && x.start == 1 && x.end == 0));
    }
}
