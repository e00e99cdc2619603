//! Decides which of the three classes a generated category belongs to:
//! one of the thirteen non-hyperoctahedral categories, a group-theoretical
//! hyperoctahedral category, or `⟨π_k⟩` for some `k`.

pub mod certificate;

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::{leg_partition, CategoryClosure, CategoryTag, ClosureOptions, MembershipAnswer};
use crate::error::{Error, Result};
use crate::named::Named;
use crate::partition::Partition;
use crate::word::{wdepth_capped, WWitness, Word, DEFAULT_LENGTH_CAP};

pub use certificate::{find_certificate, parity_certificate, Certificate, CertificateKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "class", content = "case")]
pub enum Class {
    NonHyperoctahedral(CategoryTag),
    GroupTheoretical,
    PiSeries(usize),
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Class::NonHyperoctahedral(t) => write!(f, "NonHyperoctahedral({t})"),
            Class::GroupTheoretical => write!(f, "GroupTheoretical"),
            Class::PiSeries(k) => write!(f, "PiSeries({k})"),
        }
    }
}

/// `Proved` means every fact the verdict rests on is backed by a derivation
/// or a certificate. `BoundLimited` means at least one fact is only
/// "not found up to the bound".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Confidence {
    Proved,
    BoundLimited,
}

/// One membership question asked by the pipeline.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Probe {
    pub name: String,
    pub query: Partition,
    pub answer: MembershipAnswer,
}

impl Probe {
    pub fn decided(&self) -> bool {
        !matches!(self.answer, MembershipAnswer::NotFoundUpToBound { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthWitness {
    pub depth: usize,
    pub member: Partition,
    pub witness: Option<WWitness>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub generators: Vec<Partition>,
    pub bound: usize,
    pub class: Class,
    pub confidence: Confidence,
    pub probes: Vec<Probe>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_wdepth: Option<DepthWitness>,
    pub orbits: usize,
    pub notes: Vec<String>,
}

impl ClassificationReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serialisable report");
        s.push('\n');
        s
    }

    pub fn probe(&self, name: &str) -> Option<&Probe> {
        self.probes.iter().find(|p| p.name == name)
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "class: {}", self.class)?;
        if let Class::NonHyperoctahedral(t) = self.class {
            writeln!(f, "category: {}", t.symbol())?;
        }
        writeln!(f, "confidence: {:?}", self.confidence)?;
        writeln!(f, "bound: {} ({} orbits)", self.bound, self.orbits)?;
        for p in &self.probes {
            let extra = match &p.answer {
                MembershipAnswer::ExcludedByCertificate { certificate } => {
                    format!(" [{}]", certificate.kind.describe())
                }
                MembershipAnswer::InClosure { derivation } => {
                    format!(" [{} derivation steps]", derivation.lines.len())
                }
                MembershipAnswer::NotFoundUpToBound { .. } => String::new(),
            };
            writeln!(f, "  {:<16} {}{}", p.name, p.answer.label(), extra)?;
        }
        if let Some(w) = &self.max_wdepth {
            writeln!(f, "max wdepth: {} (witness {})", w.depth, w.member)?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub bound: usize,
    pub workers: Option<usize>,
}

impl ClassifyOptions {
    pub fn new(bound: usize) -> Self {
        ClassifyOptions { bound, workers: None }
    }
}

fn wdepth_both_ways(word: &Word, cap: usize) -> Result<(usize, Option<WWitness>)> {
    let a = wdepth_capped(word, cap)?;
    let b = wdepth_capped(&word.reversed(), cap)?;
    Ok(if b.0 > a.0 { (b.0, None) } else { a })
}

/// The largest W-depth of a member of the closure, with a member realising
/// it. Every orbit is scanned; no single-double reduction is applied.
pub fn max_wdepth(closure: &CategoryClosure) -> Result<Option<DepthWitness>> {
    let cap = DEFAULT_LENGTH_CAP.max(closure.bound());
    let reps = closure.representatives();
    let depths = reps
        .par_iter()
        .map(|p| {
            let w = Word::from_partition(p)?;
            wdepth_both_ways(&w, cap)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut best: Option<DepthWitness> = None;
    for (p, (d, wit)) in reps.into_iter().zip(depths) {
        if best.as_ref().is_none_or(|b| d > b.depth) {
            best = Some(DepthWitness {
                depth: d,
                member: p,
                witness: wit,
            });
        }
    }
    Ok(best)
}

fn named(t: Named) -> Partition {
    t.partition().expect("catalog partition")
}

/// Runs the pipeline: build the closure, probe the four-block, the double
/// singleton, then pair positioner, crossing, half-liberator, singleton and
/// the leg partition, and resolve the class from the answers.
pub fn classify(generators: &[Partition], options: ClassifyOptions) -> Result<ClassificationReport> {
    let closure = CategoryClosure::build(
        generators,
        ClosureOptions::new(options.bound).workers(options.workers),
    )?;
    classify_closure(&closure, options.workers)
}

/// Same as [`classify`] on an already built closure.
pub fn classify_closure(closure: &CategoryClosure, workers: Option<usize>) -> Result<ClassificationReport> {
    let generators = closure.generators();
    let bound = closure.bound();
    let mut probes: Vec<Probe> = Vec::new();
    let mut ask = |name: &str, q: Partition| -> bool {
        let answer = closure.member(&q);
        let yes = answer.is_member();
        probes.push(Probe {
            name: name.to_string(),
            query: q,
            answer,
        });
        yes
    };
    let four = ask("four-block", named(Named::FourBlock));
    let ds = ask("double-singleton", named(Named::DoubleSingleton));
    let pp = ask("pair-positioner", named(Named::PairPositioner));
    let cross = ask("crossing", named(Named::Crossing));
    let half = ask("half-liberator", named(Named::HalfLiberator));
    let single = ask("singleton", named(Named::Singleton));
    let leg = ask("leg-partition", leg_partition());

    let all_decided = |names: &[&str], probes: &[Probe]| {
        names
            .iter()
            .all(|n| probes.iter().find(|p| p.name == *n).is_some_and(Probe::decided))
    };
    let mut notes = Vec::new();
    let mut max_depth = None;

    let non_hyper = |tag: CategoryTag| Some(Class::NonHyperoctahedral(tag));
    use CategoryTag::*;
    let case = if cross {
        match (four, single, ds) {
            (false, true, _) => non_hyper(GroupBistochastic),
            (false, false, true) => non_hyper(GroupBistochasticPrime),
            (false, false, false) => non_hyper(GroupOrthogonal),
            (true, true, _) => non_hyper(GroupSymmetric),
            (true, false, true) => non_hyper(GroupSymmetricPrime),
            (true, false, false) => None,
        }
    } else if half {
        match (four, single, ds) {
            (_, true, _) => {
                return Err(Error::Inconsistent(
                    "half-liberator and singleton found without the crossing".into(),
                ))
            }
            (false, false, true) => non_hyper(HalfLiberatedBistochasticSharp),
            (false, false, false) => non_hyper(HalfLiberatedOrthogonal),
            (true, false, true) => {
                return Err(Error::Inconsistent(
                    "half-liberator, four-block and double singleton found without the crossing".into(),
                ))
            }
            (true, false, false) => None,
        }
    } else {
        match (four, single, leg, ds) {
            (false, true, _, _) => non_hyper(FreeBistochastic),
            (false, false, true, _) => non_hyper(FreeBistochasticPrime),
            (false, false, false, true) => non_hyper(FreeBistochasticSharp),
            (false, false, false, false) => non_hyper(FreeOrthogonal),
            (true, true, _, _) => non_hyper(FreeSymmetric),
            (true, false, _, true) => non_hyper(FreeSymmetricPrime),
            (true, false, _, false) => None,
        }
    };

    let (class, confidence) = match case {
        Some(class) => {
            let confident = probes.iter().all(Probe::decided);
            (class, confident)
        }
        None if pp => {
            let confident = all_decided(&["four-block", "double-singleton", "pair-positioner"], &probes);
            (Class::GroupTheoretical, confident)
        }
        None => {
            let best = max_wdepth(closure)?
                .ok_or_else(|| Error::Inconsistent("hyperoctahedral closure without members".into()))?;
            let k = best.depth;
            let pik = Named::Pi(k).partition()?;
            let answer = closure.member(&pik);
            if !answer.is_member() {
                return Err(Error::Inconsistent(format!(
                    "a member of W-depth {k} was found but pi{k} was not derived"
                )));
            }
            probes.push(Probe {
                name: format!("pi{k}"),
                query: pik.clone(),
                answer,
            });
            // C contains π_k; it equals ⟨π_k⟩ once every generator is shown
            // to lie in ⟨π_k⟩.
            let mut inside = true;
            for g in generators {
                let sub = CategoryClosure::build_until(
                    std::slice::from_ref(&pik),
                    ClosureOptions::new(bound.max(pik.size())).workers(workers),
                    Some(g),
                )?;
                if !sub.contains(g) {
                    inside = false;
                    notes.push(format!("generator {g} was not derived from pi{k} within the bound"));
                }
            }
            let confident =
                inside && all_decided(&["four-block", "double-singleton", "pair-positioner"], &probes);
            if !confident {
                notes.push(format!(
                    "k = {k} is the largest W-depth up to bound {bound}; deeper members may exist beyond it"
                ));
            }
            max_depth = Some(best);
            (Class::PiSeries(k), confident)
        }
    };
    if closure.stats().frontier_at_bound > 0 && confidence {
        notes.push("negative answers rest on certificates, not on the truncated search".into());
    }

    Ok(ClassificationReport {
        generators: generators.to_vec(),
        bound,
        class,
        confidence: if confidence {
            Confidence::Proved
        } else {
            Confidence::BoundLimited
        },
        probes,
        max_wdepth: max_depth,
        orbits: closure.orbit_count(),
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_orthogonal() {
        let r = classify(&[], ClassifyOptions::new(8)).unwrap();
        assert_eq!(r.class, Class::NonHyperoctahedral(CategoryTag::FreeOrthogonal));
        assert_eq!(r.confidence, Confidence::Proved);
    }

    #[test]
    fn four_block_is_pi_one() {
        let r = classify(&[named(Named::FourBlock)], ClassifyOptions::new(8)).unwrap();
        assert_eq!(r.class, Class::PiSeries(1));
        assert_eq!(r.confidence, Confidence::Proved);
        assert_eq!(r.max_wdepth.as_ref().unwrap().depth, 1);
    }
}
