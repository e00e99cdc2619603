//! Named verification suites. Each suite runs a fixed list of checks with
//! fixed bounds and seeds and reports one line per check.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::classify::{classify, Class, ClassifyOptions};
use crate::engine::{leg_partition, named_category, normalize_generators, CategoryClosure, CategoryTag, ClosureOptions};
use crate::error::{Error, Result};
use crate::lab::{build_sigma_infty, build_sigma_k, check_primed, check_relations, verify_functoriality, Relation};
use crate::named::{pi, Named};
use crate::partition::Partition;
use crate::word::{doubling_check, wdepth, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// The generation chain four-block, fat crossing, pair positioner, `h_s`.
    Generation,
    /// Reductions inside hyperoctahedral categories.
    Reduction,
    Doubling,
    Wdepth,
    /// The classification of the hyperoctahedral categories.
    Classification,
    Sigma,
    Catalog,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Generation,
        Suite::Reduction,
        Suite::Doubling,
        Suite::Wdepth,
        Suite::Classification,
        Suite::Sigma,
        Suite::Catalog,
    ];

    /// The name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Suite::Generation => "lemma2.1",
            Suite::Reduction => "lemma3.x",
            Suite::Doubling => "doubling",
            Suite::Wdepth => "wdepth",
            Suite::Classification => "thmain",
            Suite::Sigma => "sigma",
            Suite::Catalog => "catalog",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "lemma2.1" | "generation" => Suite::Generation,
            "lemma3.x" | "reduction" => Suite::Reduction,
            "doubling" => Suite::Doubling,
            "wdepth" => Suite::Wdepth,
            "thmain" | "classification" => Suite::Classification,
            "sigma" => Suite::Sigma,
            "catalog" => Suite::Catalog,
            _ => return Err(Error::UnknownTag(s.to_string())),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// The statement being checked.
    pub claim: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serialisable report");
        s.push('\n');
        s
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{tag} {}: {}", c.name, c.detail)?;
            writeln!(f, "     \"{}\"", c.claim)?;
        }
        writeln!(f, "{}: {}/{} pass", self.suite, self.passed(), self.checks.len())
    }
}

type Outcome = std::result::Result<String, String>;

struct Runner {
    workers: Option<usize>,
    checks: Vec<Check>,
}

impl Runner {
    fn check(&mut self, name: &str, claim: &str, f: impl FnOnce(&Runner) -> Outcome) {
        let (passed, detail) = match f(self) {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.checks.push(Check {
            name: name.to_string(),
            claim: claim.to_string(),
            passed,
            detail,
        });
    }

    fn closure(&self, gens: &[Partition], bound: usize) -> std::result::Result<CategoryClosure, String> {
        CategoryClosure::build(gens, ClosureOptions::new(bound).workers(self.workers)).map_err(|e| e.to_string())
    }

    fn derive(&self, gens: &[Partition], bound: usize, target: &Partition) -> Outcome {
        let c = CategoryClosure::build_until(gens, ClosureOptions::new(bound).workers(self.workers), Some(target))
            .map_err(|e| e.to_string())?;
        match c.member(target) {
            crate::engine::MembershipAnswer::InClosure { derivation } => {
                derivation.replay(gens).map_err(|e| e.to_string())?;
                Ok(format!("{target} in {} derivation steps at bound {bound}", derivation.lines.len()))
            }
            other => Err(format!("{target}: {}", other.label())),
        }
    }
}

fn named(n: Named) -> Partition {
    n.partition().expect("catalog partition")
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

/// Runs one suite. `workers` limits the closure thread pool.
pub fn run_suite(suite: Suite, workers: Option<usize>) -> SuiteReport {
    let mut r = Runner {
        workers,
        checks: Vec::new(),
    };
    match suite {
        Suite::Generation => generation(&mut r),
        Suite::Reduction => reduction(&mut r),
        Suite::Doubling => doubling(&mut r),
        Suite::Wdepth => wdepth_suite(&mut r),
        Suite::Classification => classification(&mut r),
        Suite::Sigma => sigma(&mut r),
        Suite::Catalog => catalog(&mut r),
    }
    SuiteReport {
        suite,
        checks: r.checks,
    }
}

fn generation(r: &mut Runner) {
    let claim = "may be generated inside the following categories";
    r.check("four-block from fat crossing", claim, |r| {
        r.derive(&[named(Named::FatCrossing)], 8, &named(Named::FourBlock))
    });
    r.check("fat crossing from pair positioner", claim, |r| {
        r.derive(&[named(Named::PairPositioner)], 10, &named(Named::FatCrossing))
    });
    r.check("pair positioner from h3", claim, |r| {
        r.derive(&[named(Named::H(3))], 10, &named(Named::PairPositioner))
    });
}

fn reduction(r: &mut Runner) {
    r.check(
        "pi_k closures: even length, no singletons",
        "of even length and every block has size at least two",
        |r| {
            let mut n = 0;
            for k in 1..=3 {
                for p in r.closure(&[pi(k).unwrap()], 12)?.representatives() {
                    ensure!(p.size() % 2 == 0, "{p} has odd length");
                    ensure!(p.block_sizes().iter().all(|&s| s >= 2), "{p} has a singleton");
                    n += 1;
                }
            }
            Ok(format!("{n} orbits"))
        },
    );
    r.check(
        "single-double form stays inside",
        "the partition in single-double leg form is in the category",
        |r| {
            let mut n = 0;
            for (k, bound) in [(2, 10), (3, 12)] {
                let c = r.closure(&[pi(k).unwrap()], bound)?;
                for p in c.one_row_members() {
                    let sd = Word::from_partition(&p).unwrap().single_double_form();
                    ensure!(c.contains(&sd.to_partition()), "{p} reduces to {sd}, not a member");
                    n += 1;
                }
            }
            Ok(format!("{n} members"))
        },
    );
    r.check(
        "fat crossing from G with the four-block",
        "Then the fat crossing partition is in C",
        |r| {
            let mut steps = Vec::new();
            for g in [named(Named::H(3)), named(Named::PairPositioner), pi(3).unwrap()] {
                steps.push(r.derive(&[g, named(Named::FourBlock)], 12, &named(Named::FatCrossing))?);
            }
            Ok(steps.join("; "))
        },
    );
}

fn doubling(r: &mut Runner) {
    for (k, bound) in [(2, 10), (3, 12)] {
        r.check(
            &format!("pi{k} closure at bound {bound}"),
            "in a non group-theoretical hyperoctahedral category every gap a X a doubles",
            |r| {
                let c = r.closure(&[pi(k).unwrap()], bound)?;
                let mut bad = 0;
                let mut first = None;
                for p in c.one_row_members() {
                    let v = doubling_check(&Word::from_partition(&p).unwrap());
                    if !v.is_empty() && first.is_none() {
                        first = Some(p.clone());
                    }
                    bad += v.len();
                }
                match first {
                    None => Ok(format!("0 violations over {} orbits", c.orbit_count())),
                    Some(p) => Err(format!("{bad} violations, first in {p}")),
                }
            },
        );
    }
}

fn depth_of(w: &Word) -> std::result::Result<usize, String> {
    wdepth(w).map(|d| d.0).map_err(|e| e.to_string())
}

fn wdepth_suite(r: &mut Runner) {
    r.check("worked examples", "wdepth(p)=2 ... wdepth(q)=3", |_| {
        for (text, want) in [("abccddbaeffghhgeabba", 2), ("abccddbaaeebccbaijji", 3)] {
            let w = Word::parse(text).unwrap();
            let (d, wit) = wdepth(&w).map_err(|e| e.to_string())?;
            ensure!(d == want, "{text}: {d}");
            wit.ok_or("no witness")?.validate(&w)?;
        }
        Ok("2 and 3, witnesses valid".into())
    });
    r.check("pi_k has depth k", "wdepth(pi_k) = k", |_| {
        for k in 1..=4 {
            let d = depth_of(&Word::from_partition(&pi(k).unwrap()).unwrap())?;
            ensure!(d == k, "pi{k}: {d}");
        }
        Ok("k = 1..4".into())
    });
    r.check(
        "rotation invariance",
        "the maximal k such that a rotated version of p contains a W of depth k",
        |_| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
            for _ in 0..200 {
                let len = rng.gen_range(1..=16);
                let alphabet = rng.gen_range(1..=5u32);
                let letters: Vec<u32> = (0..len).map(|_| rng.gen_range(0..alphabet)).collect();
                let w = Word::new(&letters);
                let d = depth_of(&w)?;
                for s in 1..len {
                    ensure!(depth_of(&w.rotated(s))? == d, "{w} changes under rotation {s}");
                }
            }
            Ok("200 seeded words".into())
        },
    );
    r.check(
        "depth bounded in pi_k closures",
        "wdepth(p) <= k for all p in the category generated by pi_k",
        |r| {
            for (k, bound) in [(2, 10), (3, 12)] {
                for p in r.closure(&[pi(k).unwrap()], bound)?.representatives() {
                    let d = depth_of(&Word::from_partition(&p).unwrap())?;
                    ensure!(d <= k, "{p} has depth {d} > {k}");
                }
            }
            Ok("pi2 at 10, pi3 at 12".into())
        },
    );
}

/// The twenty generator pairs compared with their normalization.
pub fn single_generation_pairs() -> Vec<(Named, Named)> {
    use Named::*;
    vec![
        (Pair, FourBlock),
        (Identity, FourBlock),
        (Empty, FourBlock),
        (Pair, HalfLiberator),
        (Identity, HalfLiberator),
        (Empty, HalfLiberator),
        (Pair, DoubleSingleton),
        (Identity, DoubleSingleton),
        (Empty, DoubleSingleton),
        (Pair, Identity),
        (Empty, Pair),
        (Empty, Identity),
        (Crossing, Pair),
        (Crossing, Identity),
        (Crossing, HalfLiberator),
        (PairPositioner, Pair),
        (PairPositioner, FourBlock),
        (H(3), PairPositioner),
        (DoubleSingleton, HalfLiberator),
        (Empty, Crossing),
    ]
}

/// The classification cases with the bound each is run at.
pub fn classification_cases() -> Vec<(Vec<Partition>, usize, Class)> {
    vec![
        (vec![named(Named::FourBlock)], 12, Class::PiSeries(1)),
        (vec![named(Named::FatCrossing)], 12, Class::PiSeries(2)),
        (vec![pi(3).unwrap()], 12, Class::PiSeries(3)),
        (vec![named(Named::PairPositioner)], 10, Class::GroupTheoretical),
        (vec![named(Named::Crossing)], 8, Class::NonHyperoctahedral(CategoryTag::GroupOrthogonal)),
        (
            vec![named(Named::HalfLiberator)],
            12,
            Class::NonHyperoctahedral(CategoryTag::HalfLiberatedOrthogonal),
        ),
        (vec![named(Named::Singleton)], 8, Class::NonHyperoctahedral(CategoryTag::FreeBistochastic)),
    ]
}

fn classification(r: &mut Runner) {
    r.check("pi2 from pi3", "yields that pi_2 is in the category generated by pi_3", |r| {
        r.derive(&[pi(3).unwrap()], 12, &pi(2).unwrap())
    });
    r.check(
        "pi2 from the pair positioner",
        "shift pairs in between copies",
        |r| r.derive(&[named(Named::PairPositioner)], 12, &pi(2).unwrap()),
    );
    for (gens, bound, want) in classification_cases() {
        let label = gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ");
        r.check(
            &format!("classify {{{label}}}"),
            "C is the category generated by pi_l, l <= k, for some k, or group-theoretical, or not hyperoctahedral",
            |r| {
                let mut opts = ClassifyOptions::new(bound);
                opts.workers = r.workers;
                let rep = classify(&gens, opts).map_err(|e| e.to_string())?;
                ensure!(rep.class == want, "{} instead of {want}", rep.class);
                Ok(format!("{} ({:?}, bound {bound})", rep.class, rep.confidence))
            },
        );
    }
    r.check(
        "finitely generated means singly generated",
        "finitely generated if and only if it is singly generated",
        |r| {
            for (a, b) in single_generation_pairs() {
                let gens = [named(a), named(b)];
                let single = normalize_generators(&gens).map_err(|e| e.to_string())?;
                let slack = single.size().saturating_sub(12);
                let left: BTreeSet<Partition> = r.closure(&gens, 12)?.representatives().into_iter().collect();
                let right: BTreeSet<Partition> = r
                    .closure(&[single], 12 + slack)?
                    .representatives()
                    .into_iter()
                    .filter(|p| p.size() <= 12)
                    .collect();
                ensure!(left == right, "{a}, {b}: {} vs {} orbits", left.len(), right.len());
            }
            Ok("20 pairs, equal member sets at bound 12".into())
        },
    );
}

fn sigma(r: &mut Runner) {
    for k in 2..=4 {
        r.check(
            &format!("sigma_{k} ladder"),
            "are mutually different",
            |_| {
                let rep = build_sigma_k(k).map_err(|e| e.to_string())?;
                let ok = check_relations(&rep, k);
                ensure!(ok.holds(), "fails at depth {k}: {ok}");
                let bad = check_relations(&rep, k + 1);
                let v = bad.first_violation().ok_or(format!("holds at depth {}", k + 1))?;
                ensure!(v.relation == Relation::Commutation(k + 1), "unexpected {v:?}");
                ensure!(ok.partial_isometries, "entries are not partial isometries");
                Ok(format!("holds at {k}, violation at l={}", k + 1))
            },
        );
    }
    r.check("primed relations", "(ii) and (ii)' are equivalent", |_| {
        for k in 2..=3 {
            let rep = build_sigma_k(k).map_err(|e| e.to_string())?;
            for l in 1..=k {
                let p = check_primed(&rep, l, 400, 7 + l as u64);
                ensure!(p.failure.is_none(), "sigma_{k} fails the primed relation at depth {l}");
            }
        }
        Ok("sigma_2 and sigma_3, 400 samples per depth".into())
    });
    r.check("sigma_inf", "do not commute", |_| {
        let rep = build_sigma_infty();
        let rel = check_relations(&rep, 6);
        ensure!(rel.holds(), "{rel}");
        let u11 = rep.entry_matrix(0, 0);
        let sq = &u11 * &u11;
        ensure!(!sq.commutes_with(&rep.entry_matrix(2, 2)), "u11^2 and u33 commute");
        Ok("relations hold to depth 6; u11^2 and u33 do not commute".into())
    });
}

fn set_partitions(n: usize) -> Vec<Vec<u32>> {
    fn go(n: usize, cur: &mut Vec<u32>, max: u32, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in 0..=max {
            cur.push(x);
            go(n, cur, max.max(x + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), 0, &mut out);
    out
}

fn catalog(r: &mut Runner) {
    use CategoryTag::*;
    r.check(
        "thirteen categories are distinct",
        "there are exactly seven free easy quantum groups",
        |r| {
            let probes = [
                named(Named::FourBlock),
                named(Named::DoubleSingleton),
                named(Named::PairPositioner),
                named(Named::Crossing),
                named(Named::HalfLiberator),
                named(Named::Singleton),
                leg_partition(),
            ];
            let tags = [
                FreeOrthogonal,
                FreeBistochastic,
                FreeBistochasticPrime,
                FreeBistochasticSharp,
                FreeSymmetric,
                FreeSymmetricPrime,
                FreeHyperoctahedral,
                GroupOrthogonal,
                GroupBistochastic,
                GroupBistochasticPrime,
                GroupSymmetric,
                GroupSymmetricPrime,
                GroupHyperoctahedral,
            ];
            let mut seen = BTreeSet::new();
            for tag in tags {
                let c = r.closure(&named_category(tag).unwrap(), 8)?;
                let v: Vec<bool> = probes.iter().map(|p| c.contains(p)).collect();
                ensure!(seen.insert(v), "{tag} shares its probe answers");
            }
            Ok("13 probe vectors at bound 8".into())
        },
    );
    r.check("noncrossing pairings", "NC_2", |r| {
        let want = set_partitions(6)
            .into_iter()
            .map(|w| Partition::one_row(&w))
            .filter(|p| p.block_sizes().iter().all(|&s| s == 2) && p.is_noncrossing())
            .count();
        let got = r.closure(&[], 6)?.members_in(0, 6).len();
        ensure!(got == want && got == 5, "{got} members, {want} noncrossing pairings");
        Ok("5 on 6 points".into())
    });
    r.check("all pairings", "P_2", |r| {
        let got = r.closure(&[named(Named::Crossing)], 6)?.members_in(0, 6).len();
        ensure!(got == 15, "{got} members");
        Ok("15 on 6 points".into())
    });
    r.check("tensor functoriality", "T_qp = n^(-rl(p,q)) T_q T_p", |_| {
        let mut small = Vec::new();
        for k in 0..=2 {
            for l in 0..=2 {
                for w in set_partitions(k + l) {
                    small.push(Partition::from_labels(k, w).unwrap());
                }
            }
        }
        let mut n_checked = 0;
        for n in [2, 3] {
            for p in &small {
                for q in &small {
                    let rep = verify_functoriality(p, q, n).map_err(|e| e.to_string())?;
                    ensure!(rep.holds(), "{p}, {q}, n = {n}");
                    n_checked += 1;
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
        let mut random = |k: usize, l: usize| {
            let m = (k + l).max(1) as u32;
            let labels: Vec<u32> = (0..k + l).map(|_| rng.gen_range(0..m)).collect();
            (labels, k)
        };
        for i in 0..500 {
            let (a, b, c) = (i % 4, (i / 4) % 4, (i / 16) % 4);
            let (lp, kp) = random(a, b);
            let (lq, kq) = random(b, c);
            let p = Partition::from_labels(kp, lp).unwrap();
            let q = Partition::from_labels(kq, lq).unwrap();
            let rep = verify_functoriality(&p, &q, 2 + i % 2).map_err(|e| e.to_string())?;
            ensure!(rep.holds() && rep.composition == Some(true), "{p}, {q}");
            n_checked += 1;
        }
        Ok(format!("{n_checked} pairs"))
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("generation".parse::<Suite>().unwrap(), Suite::Generation);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn generation_suite_passes() {
        let r = run_suite(Suite::Generation, None);
        assert_eq!(r.passed(), 3, "{r}");
    }

    #[test]
    fn doubling_suite_passes() {
        assert!(run_suite(Suite::Doubling, None).all_passed());
    }
}
