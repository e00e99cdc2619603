//! Truncated closure of a generator set under the category operations.
//!
//! Members are stored as dihedral orbits of one-row words: a category is
//! closed under rotation and reflection, so one canonical representative per
//! orbit is enough, and two-row members are recovered by lifting points of a
//! representative back to the upper row.

mod catalog;
mod derivation;
mod document;
pub(crate) mod moves;
mod ops;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use rustc_hash::{FxHashMap, FxHashSet};
use serde::{Deserialize, Serialize};

pub use catalog::{leg_partition, named_category, CategoryTag, NON_HYPEROCTAHEDRAL};
pub use derivation::{Derivation, DerivationLine};
pub use document::{ClosureDocument, DOCUMENT_VERSION};
pub use ops::{connect_neighbouring_blocks, erase_pair, normalize_generators};

use crate::classify::certificate::{find_certificate, Certificate};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Default truncation bound (total number of points).
pub const DEFAULT_BOUND: usize = 12;

/// Largest bound the byte-string encoding supports.
pub const MAX_BOUND: usize = 200;

/// Which moves the closure may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Tensor products, compositions, involution and rotation.
    #[default]
    Full,
    /// Only rotations, pair erasures and (once the four block is present)
    /// connections of neighbouring blocks, starting from the generators.
    ErasureOnly,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Full => "full",
            Mode::ErasureOnly => "erasure-only",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Mode::Full),
            "erasure-only" | "erasure" => Ok(Mode::ErasureOnly),
            other => Err(Error::UnknownTag(other.to_string())),
        }
    }
}

/// How a member orbit was first reached. Operands are member indices and the
/// moves act on their canonical representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "op")]
pub enum Step {
    /// The `i`-th generator.
    Generator { index: usize },
    /// The pair partition, present in every category.
    Unit,
    /// Erase points `at`, `at + 1` (cyclically) with the pair partition.
    Erase { of: usize, at: usize },
    /// Connect the blocks through points `at`, `at + 1` using the four block.
    Connect { of: usize, at: usize },
    /// Glue rotation `s` of `left` to rotation `t` of `right` (reversed when
    /// `reflect`), capping `l` nested pairs across the seam.
    Glue {
        left: usize,
        right: usize,
        s: usize,
        t: usize,
        reflect: bool,
        l: usize,
    },
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Step::Generator { index } => write!(f, "generator {index}"),
            Step::Unit => f.write_str("pair partition"),
            Step::Erase { of, at } => write!(f, "erase #{of} at {at}"),
            Step::Connect { of, at } => write!(f, "connect #{of} at {at}"),
            Step::Glue {
                left,
                right,
                s,
                t,
                reflect,
                l,
            } => {
                let r = if reflect { ", reflected" } else { "" };
                write!(f, "glue #{left} from {s} to #{right} from {t}{r}, {l} caps")
            }
        }
    }
}

#[derive(Debug, Clone)]
struct Orbit {
    word: Vec<u8>,
    starts: Vec<usize>,
    chiral: bool,
    step: Step,
    round: usize,
}

/// Counters describing a closure run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureStats {
    pub rounds: usize,
    /// Move results produced, before deduplication.
    pub candidates: u64,
    /// Member orbits by number of points.
    pub orbits_by_size: BTreeMap<usize, usize>,
    /// Member partitions in `P(0, n)` by `n`.
    pub one_row_by_size: BTreeMap<usize, usize>,
    /// Orbits too large to be tensored with the pair partition. Compositions
    /// through them whose intermediate step would exceed the bound were not
    /// explored, so non-membership at the bound is not conclusive.
    pub frontier_at_bound: usize,
}

/// Three-valued membership verdict.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "verdict")]
pub enum MembershipAnswer {
    InClosure { derivation: Derivation },
    ExcludedByCertificate { certificate: Certificate },
    NotFoundUpToBound { bound: usize },
}

impl MembershipAnswer {
    pub fn is_member(&self) -> bool {
        matches!(self, MembershipAnswer::InClosure { .. })
    }

    pub fn is_excluded(&self) -> bool {
        matches!(self, MembershipAnswer::ExcludedByCertificate { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            MembershipAnswer::InClosure { .. } => "InClosure",
            MembershipAnswer::ExcludedByCertificate { .. } => "ExcludedByCertificate",
            MembershipAnswer::NotFoundUpToBound { .. } => "NotFoundUpToBound",
        }
    }
}

/// Options for a closure run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureOptions {
    pub bound: usize,
    pub mode: Mode,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
}

impl Default for ClosureOptions {
    fn default() -> Self {
        ClosureOptions {
            bound: DEFAULT_BOUND,
            mode: Mode::Full,
            workers: None,
        }
    }
}

impl ClosureOptions {
    pub fn new(bound: usize) -> Self {
        ClosureOptions {
            bound,
            ..Default::default()
        }
    }

    pub fn mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn workers(mut self, workers: Option<usize>) -> Self {
        self.workers = workers;
        self
    }
}

/// The truncated closure of a generator set.
#[derive(Debug, Clone)]
pub struct CategoryClosure {
    generators: Vec<Partition>,
    bound: usize,
    mode: Mode,
    orbits: Vec<Orbit>,
    index: FxHashMap<Vec<u8>, usize>,
    stats: ClosureStats,
}

fn word_of(p: &Partition) -> Vec<u8> {
    p.to_one_row().labels().iter().map(|&b| b as u8).collect()
}

fn four_block_word() -> Vec<u8> {
    vec![0, 0, 0, 0]
}

impl CategoryClosure {
    /// Builds the closure of `generators` inside partitions with at most
    /// `options.bound` points.
    pub fn build(generators: &[Partition], options: ClosureOptions) -> Result<CategoryClosure> {
        Self::build_until(generators, options, None)
    }

    /// Like [`CategoryClosure::build`], but stops after the round in which
    /// `target` first appears. The result is then a subset of the full
    /// closure, and only positive answers are meaningful.
    pub fn build_until(
        generators: &[Partition],
        options: ClosureOptions,
        target: Option<&Partition>,
    ) -> Result<CategoryClosure> {
        let bound = options.bound;
        if bound < 2 {
            return Err(Error::BoundTooSmall { bound, size: 2 });
        }
        if bound > MAX_BOUND {
            return Err(Error::ParameterOutOfRange(format!(
                "bound {bound} exceeds the supported maximum {MAX_BOUND}"
            )));
        }
        for g in generators {
            if g.size() > bound {
                return Err(Error::BoundTooSmall {
                    bound,
                    size: g.size(),
                });
            }
        }
        let target = target.map(|t| moves::canonical(&word_of(t)));
        let run = || {
            let mut c = CategoryClosure {
                generators: generators.to_vec(),
                bound,
                mode: options.mode,
                orbits: Vec::new(),
                index: FxHashMap::default(),
                stats: ClosureStats {
                    rounds: 0,
                    candidates: 0,
                    orbits_by_size: BTreeMap::new(),
                    one_row_by_size: BTreeMap::new(),
                    frontier_at_bound: 0,
                },
            };
            c.saturate(target.as_deref());
            c
        };
        let closure = match options.workers {
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Error::ParameterOutOfRange(format!("worker pool: {e}")))?
                .install(run),
            None => run(),
        };
        Ok(closure)
    }

    fn insert(&mut self, seen_raw: &mut FxHashSet<Vec<u8>>, word: &[u8], step: Step, round: usize) -> bool {
        let canon = moves::canonical(word);
        if self.index.contains_key(&canon) {
            return false;
        }
        for v in moves::variants(&canon) {
            seen_raw.insert(v);
        }
        self.index.insert(canon.clone(), self.orbits.len());
        let (starts, chiral) = moves::symmetry(&canon);
        self.orbits.push(Orbit {
            word: canon,
            starts,
            chiral,
            step,
            round,
        });
        true
    }

    fn saturate(&mut self, target: Option<&[u8]>) {
        let bound = self.bound;
        let mut seen_raw: FxHashSet<Vec<u8>> = FxHashSet::default();
        if self.mode == Mode::Full {
            self.insert(&mut seen_raw, &[0, 0], Step::Unit, 0);
        }
        for (i, g) in self.generators.clone().iter().enumerate() {
            self.insert(&mut seen_raw, &word_of(g), Step::Generator { index: i }, 0);
        }
        let found = |c: &CategoryClosure| target.is_some_and(|t| c.index.contains_key(t));
        let mut lo = 0;
        let mut round = 0;
        while lo < self.orbits.len() && !found(self) {
            round += 1;
            let hi = self.orbits.len();
            let has_four = self.index.contains_key(&four_block_word());
            let orbits = &self.orbits;
            let seen = &seen_raw;
            let mode = self.mode;
            let batches: Vec<(u64, Vec<(Vec<u8>, Step)>)> = (lo..hi)
                .into_par_iter()
                .map(|x| {
                    let mut count = 0u64;
                    let mut local: FxHashSet<Vec<u8>> = FxHashSet::default();
                    let mut out = Vec::new();
                    let mut buf = Vec::with_capacity(bound);
                    let mut offer = |buf: &Vec<u8>, step: Step, out: &mut Vec<(Vec<u8>, Step)>| {
                        count += 1;
                        if !seen.contains(buf.as_slice()) && local.insert(buf.clone()) {
                            out.push((buf.clone(), step));
                        }
                    };
                    let u = &orbits[x].word;
                    let n = u.len();
                    let erasable = if n >= 2 { n } else { 0 };
                    for at in 0..erasable {
                        let e = moves::erase(u, at);
                        offer(&e, Step::Erase { of: x, at }, &mut out);
                    }
                    if mode == Mode::ErasureOnly && has_four {
                        for at in 0..n {
                            if u[at] != u[(at + 1) % n] {
                                let c = moves::connect(u, at);
                                offer(&c, Step::Connect { of: x, at }, &mut out);
                            }
                        }
                    }
                    if mode == Mode::Full {
                        for y in 0..=x {
                            let v = &orbits[y].word;
                            let (a, b) = (n, v.len());
                            let l = moves::min_overlap(a, b, bound);
                            if l > a.min(b) {
                                continue;
                            }
                            let reflections: &[bool] =
                                if b > 2 && orbits[y].chiral { &[false, true] } else { &[false] };
                            for &reflect in reflections {
                                for &s in &orbits[x].starts {
                                    for &t in &orbits[y].starts {
                                        moves::glue_into(u, v, s, t, reflect, l, &mut buf);
                                        offer(
                                            &buf,
                                            Step::Glue {
                                                left: x,
                                                right: y,
                                                s,
                                                t,
                                                reflect,
                                                l,
                                            },
                                            &mut out,
                                        );
                                    }
                                }
                            }
                        }
                    }
                    (count, out)
                })
                .collect();
            for (count, batch) in batches {
                self.stats.candidates += count;
                for (word, step) in batch {
                    if seen_raw.contains(&word) {
                        continue;
                    }
                    self.insert(&mut seen_raw, &word, step, round);
                }
            }
            lo = hi;
        }
        self.stats.rounds = round;
        self.refresh_stats();
    }

    fn refresh_stats(&mut self) {
        let mut orbits_by_size = BTreeMap::new();
        let mut one_row_by_size = BTreeMap::new();
        for o in &self.orbits {
            let n = o.word.len();
            *orbits_by_size.entry(n).or_insert(0) += 1;
            *one_row_by_size.entry(n).or_insert(0) += moves::variants(&o.word).len();
        }
        self.stats.orbits_by_size = orbits_by_size;
        self.stats.one_row_by_size = one_row_by_size;
        self.stats.frontier_at_bound = self
            .orbits
            .iter()
            .filter(|o| o.word.len() + 2 > self.bound)
            .count();
    }

    pub fn generators(&self) -> &[Partition] {
        &self.generators
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn stats(&self) -> &ClosureStats {
        &self.stats
    }

    /// Number of member orbits.
    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    /// Canonical one-row representatives, one per orbit, in discovery order.
    pub fn representatives(&self) -> Vec<Partition> {
        self.orbits.iter().map(|o| Partition::one_row(&o.word)).collect()
    }

    pub(crate) fn orbit_word(&self, i: usize) -> &[u8] {
        &self.orbits[i].word
    }

    pub(crate) fn orbit_step(&self, i: usize) -> Step {
        self.orbits[i].step
    }

    pub(crate) fn orbit_round(&self, i: usize) -> usize {
        self.orbits[i].round
    }

    /// Every member in `P(0, n)`, all `n`, sorted.
    pub fn one_row_members(&self) -> Vec<Partition> {
        let mut out: Vec<Partition> = self
            .orbits
            .iter()
            .flat_map(|o| moves::variants(&o.word))
            .map(|w| Partition::one_row(&w))
            .collect();
        out.sort();
        out
    }

    /// Every member in `P(k, l)`, sorted.
    pub fn members_in(&self, k: usize, l: usize) -> Vec<Partition> {
        let mut out: Vec<Partition> = self
            .orbits
            .iter()
            .filter(|o| o.word.len() == k + l)
            .flat_map(|o| moves::variants(&o.word))
            .map(|w| Partition::from_one_row(&Partition::one_row(&w), k).expect("arity fits"))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Index of the orbit containing `p`, if it is a member.
    pub fn orbit_of(&self, p: &Partition) -> Option<usize> {
        if p.size() > self.bound {
            return None;
        }
        self.index.get(&moves::canonical(&word_of(p))).copied()
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.orbit_of(p).is_some()
    }

    /// Three-valued membership: a replayable derivation, a certificate that
    /// rules `p` out of the untruncated category, or no verdict.
    pub fn member(&self, p: &Partition) -> MembershipAnswer {
        if let Some(i) = self.orbit_of(p) {
            return MembershipAnswer::InClosure {
                derivation: Derivation::of(self, i, p),
            };
        }
        if let Some(certificate) = find_certificate(&self.generators, p) {
            return MembershipAnswer::ExcludedByCertificate { certificate };
        }
        MembershipAnswer::NotFoundUpToBound { bound: self.bound }
    }

    /// Replays every stored derivation step with the two-row partition
    /// operations and checks that it lands in the recorded orbit.
    pub fn verify_derivations(&self) -> Result<()> {
        let mut cache: Vec<Option<Partition>> = vec![None; self.orbits.len()];
        for i in 0..self.orbits.len() {
            let p = derivation::replay_step(self, i, &mut cache)?;
            let canon = moves::canonical(&word_of(&p));
            if canon != self.orbits[i].word {
                return Err(Error::Inconsistent(format!(
                    "orbit {i}: replay gives {p}, stored {}",
                    Partition::one_row(&self.orbits[i].word)
                )));
            }
        }
        Ok(())
    }

    /// Checks that no move applied to members escapes the member set, trying
    /// every overlap rather than only the smallest one.
    pub fn verify_closed(&self) -> Result<()> {
        let has_four = self.index.contains_key(&four_block_word());
        for o in &self.orbits {
            let n = o.word.len();
            for at in 0..n {
                if n >= 2 && !self.index.contains_key(&moves::canonical(&moves::erase(&o.word, at))) {
                    return Err(Error::Inconsistent(format!("erasure escapes at {at}")));
                }
                if self.mode == Mode::ErasureOnly
                    && has_four
                    && !self.index.contains_key(&moves::canonical(&moves::connect(&o.word, at)))
                {
                    return Err(Error::Inconsistent(format!("connection escapes at {at}")));
                }
            }
            if self.mode == Mode::Full {
                for p in &self.orbits {
                    let (a, b) = (n, p.word.len());
                    let lmin = moves::min_overlap(a, b, self.bound);
                    for l in lmin..=a.min(b) {
                        for s in 0..a.max(1) {
                            for t in 0..b.max(1) {
                                for reflect in [false, true] {
                                    let g = moves::glue(&o.word, &p.word, s, t, reflect, l);
                                    if !self.index.contains_key(&moves::canonical(&g)) {
                                        return Err(Error::Inconsistent("glue escapes".into()));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}
