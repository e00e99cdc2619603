//! W-depth: how deeply a word nests the shape of `π_k`.
//!
//! A rotation of the word contains a W of depth `k` on distinct letters
//! `a_1..a_k` when it splits as
//! `S_α X S_β Y S_γ X' S_δ Y'` with `S_α = a_1 .. a_k` and
//! `S_β = a_k .. a_1` (and the same for `S_γ`, `S_δ`), every `a_i` occurring an
//! odd number of times inside each of the four legs.
//!
//! The search fixes the rotation so that `S_α` starts at position 0, picks the
//! outer letters `a_1`, `a_k` and their eight leg endpoints, and then finds the
//! longest run of middle letters as a common subsequence of the four leg
//! interiors. Dropping middle letters never breaks a witness (the legs keep
//! their endpoints), so the depths realised by a rotation form an interval
//! starting at 1 and `contains_w(w, k)` holds exactly for `k <= wdepth(w)`.

use std::ops::Range;

use serde::{Deserialize, Serialize};

use super::Word;
use crate::error::{Error, Result};

/// Longest word accepted by [`wdepth`] without an explicit override.
pub const DEFAULT_LENGTH_CAP: usize = 24;

/// One leg of a W: positions (in the rotated word) of `a_1, .., a_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Leg {
    pub positions: Vec<usize>,
}

impl Leg {
    /// Inclusive span covered by the leg.
    pub fn span(&self) -> (usize, usize) {
        let lo = *self.positions.iter().min().expect("nonempty leg");
        let hi = *self.positions.iter().max().expect("nonempty leg");
        (lo, hi)
    }
}

/// A checkable certificate that a rotation of a word contains a W.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WWitness {
    /// The rotated word starts at this position of the original word.
    pub offset: usize,
    /// `a_1, .., a_k`, as letters of the original word.
    pub letters: Vec<u32>,
    /// Legs α, β, γ, δ in reading order.
    pub legs: [Leg; 4],
}

const SEGMENT_NAMES: [&str; 8] = [
    "S_alpha", "X_alpha", "S_beta", "Y_1", "S_gamma", "X_gamma", "S_delta", "Y_2",
];

impl WWitness {
    pub fn depth(&self) -> usize {
        self.letters.len()
    }

    /// The rotated word together with its cyclic segmentation. Segments are
    /// index ranges into the rotated word; `Y_2` wraps around to the start.
    pub fn segments(&self, n: usize) -> Vec<(&'static str, Range<usize>)> {
        let spans: Vec<(usize, usize)> = self.legs.iter().map(Leg::span).collect();
        let mut out = Vec::with_capacity(8);
        for i in 0..4 {
            let (lo, hi) = spans[i];
            out.push((SEGMENT_NAMES[2 * i], lo..hi + 1));
            let next = if i < 3 { spans[i + 1].0 } else { spans[0].0 + n };
            out.push((SEGMENT_NAMES[2 * i + 1], hi + 1..next));
        }
        out
    }

    /// Checks every defining condition against `word`, independently of how
    /// the witness was found.
    pub fn validate(&self, word: &Word) -> std::result::Result<(), String> {
        let n = word.len();
        let k = self.letters.len();
        if k == 0 {
            return Err("no letters".into());
        }
        if n == 0 || self.offset >= n {
            return Err(format!("offset {} out of range", self.offset));
        }
        for i in 0..k {
            if self.letters[..i].contains(&self.letters[i]) {
                return Err(format!("letter {} repeated", self.letters[i]));
            }
        }
        let rot: Vec<u32> = (0..n).map(|i| word.letters()[(i + self.offset) % n]).collect();
        let mut last_end: Option<usize> = None;
        for (li, leg) in self.legs.iter().enumerate() {
            if leg.positions.len() != k {
                return Err(format!("leg {li} has {} positions", leg.positions.len()));
            }
            for (i, &pos) in leg.positions.iter().enumerate() {
                if pos >= n || rot[pos] != self.letters[i] {
                    return Err(format!("leg {li}: position {pos} does not hold a_{}", i + 1));
                }
            }
            // legs α and γ read a_1..a_k left to right, β and δ right to left
            let ascending = li % 2 == 0;
            for i in 1..k {
                let (a, b) = (leg.positions[i - 1], leg.positions[i]);
                if ascending && a >= b || !ascending && a <= b {
                    return Err(format!("leg {li}: letters out of order"));
                }
            }
            let (lo, hi) = leg.span();
            if let Some(e) = last_end {
                if lo <= e {
                    return Err(format!("leg {li} overlaps its predecessor"));
                }
            }
            last_end = Some(hi);
            for &a in &self.letters {
                let c = rot[lo..=hi].iter().filter(|&&x| x == a).count();
                if c % 2 == 0 {
                    return Err(format!("leg {li}: letter {a} occurs {c} times"));
                }
            }
        }
        Ok(())
    }

    /// Restricts to depth `k` by keeping `a_1`, the first `k - 2` middle
    /// letters and `a_k` (or just `a_1` when `k = 1`).
    fn truncate(&self, k: usize) -> WWitness {
        let depth = self.depth();
        let keep: Vec<usize> = if k == 1 {
            vec![0]
        } else {
            (0..k - 1).chain(std::iter::once(depth - 1)).collect()
        };
        fn pick<T: Copy>(keep: &[usize], v: &[T]) -> Vec<T> {
            keep.iter().map(|&i| v[i]).collect()
        }
        WWitness {
            offset: self.offset,
            letters: pick(&keep, &self.letters),
            legs: [0, 1, 2, 3].map(|i| Leg {
                positions: pick(&keep, &self.legs[i].positions),
            }),
        }
    }
}

/// W-depth with the default length cap.
pub fn wdepth(word: &Word) -> Result<(usize, Option<WWitness>)> {
    wdepth_capped(word, DEFAULT_LENGTH_CAP)
}

/// W-depth of `word`, refusing words longer than `cap`.
pub fn wdepth_capped(word: &Word, cap: usize) -> Result<(usize, Option<WWitness>)> {
    if word.len() > cap {
        return Err(Error::LengthCap {
            len: word.len(),
            cap,
        });
    }
    Ok(search(word, usize::MAX))
}

/// A witness that some rotation of `word` contains a W of depth `k`.
pub fn contains_w(word: &Word, k: usize) -> Option<WWitness> {
    if k == 0 {
        return None;
    }
    let (depth, witness) = search(word, k);
    if depth >= k {
        witness.map(|w| w.truncate(k))
    } else {
        None
    }
}

struct Prefix {
    /// `table[l][i]` = occurrences of `l` in `rot[..i]`.
    table: Vec<Vec<u16>>,
}

impl Prefix {
    fn new(rot: &[u32], letters: usize) -> Prefix {
        let mut table = vec![vec![0u16; rot.len() + 1]; letters];
        for (i, &x) in rot.iter().enumerate() {
            for (l, row) in table.iter_mut().enumerate() {
                row[i + 1] = row[i] + u16::from(x as usize == l);
            }
        }
        Prefix { table }
    }

    /// Occurrences of `l` in the inclusive range `lo..=hi`.
    fn odd(&self, l: u32, lo: usize, hi: usize) -> bool {
        let row = &self.table[l as usize];
        (row[hi + 1] - row[lo]) % 2 == 1
    }
}

/// A middle-letter match: the letter and its index in each leg interior.
type Chain = Vec<(u32, [usize; 4])>;

/// Longest common subsequence of distinct letters. Each sequence holds
/// `(letter, position)` pairs; matching greedily to the earliest occurrence
/// is optimal for a fixed next letter.
fn longest_chain(seqs: &[Vec<(u32, usize)>; 4], start: [usize; 4], used: &[u32], limit: usize) -> Chain {
    let mut best: Chain = Vec::new();
    if limit == 0 {
        return best;
    }
    let mut tried: Vec<u32> = Vec::new();
    for i in start[0]..seqs[0].len() {
        let c = seqs[0][i].0;
        if used.contains(&c) || tried.contains(&c) {
            continue;
        }
        tried.push(c);
        let mut next = [i + 1, 0, 0, 0];
        let mut hit = [seqs[0][i].1, 0, 0, 0];
        let mut ok = true;
        for s in 1..4 {
            match (start[s]..seqs[s].len()).find(|&j| seqs[s][j].0 == c) {
                Some(j) => {
                    next[s] = j + 1;
                    hit[s] = seqs[s][j].1;
                }
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let mut chain = vec![(c, hit)];
        let mut now_used = used.to_vec();
        now_used.push(c);
        chain.extend(longest_chain(seqs, next, &now_used, limit - 1));
        if chain.len() > best.len() {
            best = chain;
            if best.len() == limit {
                break;
            }
        }
    }
    best
}

/// Finds the deepest W, stopping early once depth `target` is reached.
fn search(word: &Word, target: usize) -> (usize, Option<WWitness>) {
    let n = word.len();
    let counts = word.counts();
    let big: Vec<u32> = (0..counts.len() as u32)
        .filter(|&l| counts[l as usize] >= 4)
        .collect();
    if big.is_empty() {
        return (0, None);
    }
    // depth 1: any letter with four occurrences
    let x = big[0];
    let occ: Vec<usize> = (0..n).filter(|&i| word.letters()[i] == x).collect();
    let mut best = 1;
    let mut witness = WWitness {
        offset: occ[0],
        letters: vec![x],
        legs: [0, 1, 2, 3].map(|j| Leg {
            positions: vec![occ[j] - occ[0]],
        }),
    };
    let ceiling = big.len().min(target);
    if best >= ceiling {
        return (best, Some(witness));
    }

    for offset in 0..n {
        let rot: Vec<u32> = (0..n).map(|i| word.letters()[(i + offset) % n]).collect();
        let x = rot[0];
        if counts[x as usize] < 4 {
            continue;
        }
        let pre = Prefix::new(&rot, counts.len());
        let ox: Vec<usize> = (0..n).filter(|&i| rot[i] == x).collect();
        for &y in &big {
            if y == x {
                continue;
            }
            let oy: Vec<usize> = (0..n).filter(|&i| rot[i] == y).collect();
            let both_odd = |lo: usize, hi: usize| pre.odd(x, lo, hi) && pre.odd(y, lo, hi);
            for &pk in &oy {
                if !both_odd(0, pk) {
                    continue;
                }
                for &qk in oy.iter().filter(|&&q| q > pk) {
                    for &q1 in ox.iter().filter(|&&q| q > qk) {
                        if !both_odd(qk, q1) {
                            continue;
                        }
                        for &r1 in ox.iter().filter(|&&r| r > q1) {
                            for &rk in oy.iter().filter(|&&r| r > r1) {
                                if !both_odd(r1, rk) {
                                    continue;
                                }
                                for &sk in oy.iter().filter(|&&s| s > rk) {
                                    for &s1 in ox.iter().filter(|&&s| s > sk) {
                                        if !both_odd(sk, s1) {
                                            continue;
                                        }
                                        let spans = [(0, pk), (qk, q1), (r1, rk), (sk, s1)];
                                        let middle: Vec<u32> = big
                                            .iter()
                                            .copied()
                                            .filter(|&m| {
                                                m != x
                                                    && m != y
                                                    && spans.iter().all(|&(lo, hi)| pre.odd(m, lo, hi))
                                            })
                                            .collect();
                                        if 2 + middle.len() <= best {
                                            continue;
                                        }
                                        let interior = |lo: usize, hi: usize, rev: bool| {
                                            let mut v: Vec<(u32, usize)> = (lo + 1..hi)
                                                .filter(|&i| middle.contains(&rot[i]))
                                                .map(|i| (rot[i], i))
                                                .collect();
                                            if rev {
                                                v.reverse();
                                            }
                                            v
                                        };
                                        let seqs = [
                                            interior(0, pk, false),
                                            interior(qk, q1, true),
                                            interior(r1, rk, false),
                                            interior(sk, s1, true),
                                        ];
                                        let limit = ceiling.saturating_sub(2).min(middle.len());
                                        let chain = longest_chain(&seqs, [0; 4], &[], limit);
                                        let depth = 2 + chain.len();
                                        if depth > best {
                                            best = depth;
                                            let ends = [[0, pk], [q1, qk], [r1, rk], [s1, sk]];
                                            let mut letters = vec![x];
                                            letters.extend(chain.iter().map(|c| c.0));
                                            letters.push(y);
                                            witness = WWitness {
                                                offset,
                                                letters,
                                                legs: [0, 1, 2, 3].map(|leg| {
                                                    let mut positions = vec![ends[leg][0]];
                                                    positions.extend(chain.iter().map(|c| c.1[leg]));
                                                    positions.push(ends[leg][1]);
                                                    Leg { positions }
                                                }),
                                            };
                                            if best >= ceiling {
                                                return (best, Some(witness));
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    (best, Some(witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::pi;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(wdepth(&w("")).unwrap().0, 0);
        assert_eq!(wdepth(&w("abba")).unwrap().0, 0);
        assert_eq!(wdepth(&w("aaaa")).unwrap().0, 1);
        assert_eq!(wdepth(&w("abbaabba")).unwrap().0, 2);
        assert!(contains_w(&w("abba"), 2).is_none());
    }

    #[test]
    fn pi_series() {
        for k in 1..=5 {
            let word = Word::from_partition(&pi(k).unwrap()).unwrap();
            let (d, wit) = wdepth(&word).unwrap();
            assert_eq!(d, k);
            let wit = wit.unwrap();
            assert_eq!(wit.validate(&word), Ok(()));
            // every noise segment is empty for π_k itself
            for (name, range) in wit.segments(word.len()) {
                if !name.starts_with("S_") {
                    assert!(range.is_empty(), "{name} = {range:?}");
                }
            }
        }
    }

    #[test]
    fn worked_examples() {
        let p = w("abccddbaeffghhgeabba");
        let (d, wit) = wdepth(&p).unwrap();
        assert_eq!(d, 2);
        let wit = wit.unwrap();
        assert_eq!(wit.validate(&p), Ok(()));
        let q = w("abccddbaaeebccbaijji");
        let (d, wit) = wdepth(&q).unwrap();
        assert_eq!(d, 3);
        assert_eq!(wit.unwrap().validate(&q), Ok(()));
        let two = contains_w(&p, 2).unwrap();
        let mut letters = two.letters.clone();
        letters.sort();
        assert_eq!(letters, vec![0, 1]);
    }

    #[test]
    fn truncation_keeps_validity() {
        let word = Word::from_partition(&pi(4).unwrap()).unwrap();
        for k in 1..=4 {
            let wit = contains_w(&word, k).unwrap();
            assert_eq!(wit.depth(), k);
            assert_eq!(wit.validate(&word), Ok(()));
        }
        assert!(contains_w(&word, 5).is_none());
    }

    #[test]
    fn validator_rejects_broken_witnesses() {
        let word = w("abbaabba");
        let (_, wit) = wdepth(&word).unwrap();
        let mut bad = wit.unwrap();
        bad.legs[1].positions.swap(0, 1);
        assert!(bad.validate(&word).is_err());
    }

    #[test]
    fn cap() {
        let long = Word::from_partition(&pi(7).unwrap()).unwrap();
        assert!(matches!(wdepth(&long), Err(Error::LengthCap { len: 28, cap: 24 })));
        assert_eq!(wdepth_capped(&long, 28).unwrap().0, 7);
    }
}
