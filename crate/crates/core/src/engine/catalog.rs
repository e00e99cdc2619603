//! Generator sets of the well-known categories.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::named::Named;
use crate::partition::Partition;

/// Named categories of partitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CategoryTag {
    /// `⟨⟩ = NC₂`
    FreeOrthogonal,
    /// `⟨↑⟩`
    FreeBistochastic,
    /// `⟨legpart⟩`, the pair enclosing a singleton next to another singleton
    FreeBistochasticPrime,
    /// `⟨↑ ⊗ ↑⟩`
    FreeBistochasticSharp,
    /// `⟨↑, four⟩ = NC`
    FreeSymmetric,
    /// `⟨↑ ⊗ ↑, four⟩`
    FreeSymmetricPrime,
    /// `⟨four⟩`
    FreeHyperoctahedral,
    /// `⟨cross⟩ = P₂`
    GroupOrthogonal,
    /// `⟨cross, ↑⟩`
    GroupBistochastic,
    /// `⟨cross, ↑ ⊗ ↑⟩`
    GroupBistochasticPrime,
    /// `⟨cross, ↑, four⟩ = P`
    GroupSymmetric,
    /// `⟨cross, ↑ ⊗ ↑, four⟩`
    GroupSymmetricPrime,
    /// `⟨cross, four⟩`
    GroupHyperoctahedral,
    /// `⟨halflib⟩`
    HalfLiberatedOrthogonal,
    /// `⟨halflib, ↑ ⊗ ↑⟩`
    HalfLiberatedBistochasticSharp,
    /// `⟨halflib, four⟩`
    HalfLiberatedHyperoctahedral,
    /// `⟨halflib, four, h_s⟩`, `s >= 3`
    HalfLiberatedSeries(usize),
    /// `⟨π_k⟩`
    PiSeries(usize),
    /// `⟨pair positioner⟩`
    PairPositioner,
}

/// The thirteen categories that are not hyperoctahedral, in a fixed order:
/// six free, five group and two half-liberated cases.
pub const NON_HYPEROCTAHEDRAL: [CategoryTag; 13] = [
    CategoryTag::FreeOrthogonal,
    CategoryTag::FreeBistochastic,
    CategoryTag::FreeBistochasticPrime,
    CategoryTag::FreeBistochasticSharp,
    CategoryTag::FreeSymmetric,
    CategoryTag::FreeSymmetricPrime,
    CategoryTag::GroupOrthogonal,
    CategoryTag::GroupBistochastic,
    CategoryTag::GroupBistochasticPrime,
    CategoryTag::GroupSymmetric,
    CategoryTag::GroupSymmetricPrime,
    CategoryTag::HalfLiberatedOrthogonal,
    CategoryTag::HalfLiberatedBistochasticSharp,
];

/// The partition whose category sits strictly between `⟨↑⟩` and `⟨↑ ⊗ ↑⟩`:
/// a pair around a singleton, followed by a second singleton.
pub fn leg_partition() -> Partition {
    Partition::parse(";abac").expect("literal")
}

fn n(tag: Named) -> Partition {
    tag.partition().expect("catalog partition")
}

/// The generator list of a named category.
pub fn named_category(tag: CategoryTag) -> Result<Vec<Partition>> {
    use CategoryTag::*;
    let ds = || n(Named::DoubleSingleton);
    let four = || n(Named::FourBlock);
    let cross = || n(Named::Crossing);
    let single = || n(Named::Singleton);
    let half = || n(Named::HalfLiberator);
    Ok(match tag {
        FreeOrthogonal => vec![],
        FreeBistochastic => vec![single()],
        FreeBistochasticPrime => vec![leg_partition()],
        FreeBistochasticSharp => vec![ds()],
        FreeSymmetric => vec![single(), four()],
        FreeSymmetricPrime => vec![ds(), four()],
        FreeHyperoctahedral => vec![four()],
        GroupOrthogonal => vec![cross()],
        GroupBistochastic => vec![cross(), single()],
        GroupBistochasticPrime => vec![cross(), ds()],
        GroupSymmetric => vec![cross(), single(), four()],
        GroupSymmetricPrime => vec![cross(), ds(), four()],
        GroupHyperoctahedral => vec![cross(), four()],
        HalfLiberatedOrthogonal => vec![half()],
        HalfLiberatedBistochasticSharp => vec![half(), ds()],
        HalfLiberatedHyperoctahedral => vec![half(), four()],
        HalfLiberatedSeries(s) => {
            if s < 3 {
                return Err(Error::ParameterOutOfRange(format!(
                    "half-liberated series needs s >= 3, got {s}"
                )));
            }
            vec![half(), four(), Named::H(s).partition()?]
        }
        PiSeries(k) => vec![Named::Pi(k).partition()?],
        PairPositioner => vec![n(Named::PairPositioner)],
    })
}

impl CategoryTag {
    pub fn tag(self) -> String {
        use CategoryTag::*;
        match self {
            FreeOrthogonal => "free-orthogonal".into(),
            FreeBistochastic => "free-bistochastic".into(),
            FreeBistochasticPrime => "free-bistochastic-prime".into(),
            FreeBistochasticSharp => "free-bistochastic-sharp".into(),
            FreeSymmetric => "free-symmetric".into(),
            FreeSymmetricPrime => "free-symmetric-prime".into(),
            FreeHyperoctahedral => "free-hyperoctahedral".into(),
            GroupOrthogonal => "group-orthogonal".into(),
            GroupBistochastic => "group-bistochastic".into(),
            GroupBistochasticPrime => "group-bistochastic-prime".into(),
            GroupSymmetric => "group-P".into(),
            GroupSymmetricPrime => "group-symmetric-prime".into(),
            GroupHyperoctahedral => "group-hyperoctahedral".into(),
            HalfLiberatedOrthogonal => "half-liberated-orthogonal".into(),
            HalfLiberatedBistochasticSharp => "half-liberated-bistochastic-sharp".into(),
            HalfLiberatedHyperoctahedral => "half-liberated-hyperoctahedral".into(),
            HalfLiberatedSeries(s) => format!("half-liberated-series({s})"),
            PiSeries(k) => format!("pi-series({k})"),
            PairPositioner => "pair-positioner".into(),
        }
    }

    /// The usual symbol for the category.
    pub fn symbol(self) -> String {
        use CategoryTag::*;
        match self {
            FreeOrthogonal => "<> = NC2".into(),
            FreeBistochastic => "<singleton>".into(),
            FreeBistochasticPrime => "<legpart>".into(),
            FreeBistochasticSharp => "<singleton x singleton>".into(),
            FreeSymmetric => "<singleton, four> = NC".into(),
            FreeSymmetricPrime => "<singleton x singleton, four>".into(),
            FreeHyperoctahedral => "<four>".into(),
            GroupOrthogonal => "<crossing> = P2".into(),
            GroupBistochastic => "<crossing, singleton>".into(),
            GroupBistochasticPrime => "<crossing, singleton x singleton>".into(),
            GroupSymmetric => "<crossing, singleton, four> = P".into(),
            GroupSymmetricPrime => "<crossing, singleton x singleton, four>".into(),
            GroupHyperoctahedral => "<crossing, four>".into(),
            HalfLiberatedOrthogonal => "<halflib>".into(),
            HalfLiberatedBistochasticSharp => "<halflib, singleton x singleton>".into(),
            HalfLiberatedHyperoctahedral => "<halflib, four>".into(),
            HalfLiberatedSeries(s) => format!("<halflib, four, h{s}>"),
            PiSeries(k) => format!("<pi{k}>"),
            PairPositioner => "<pairpositioner>".into(),
        }
    }
}

impl fmt::Display for CategoryTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

fn parameter(s: &str, prefix: &str) -> Option<usize> {
    s.strip_prefix(prefix)?
        .strip_prefix('(')?
        .strip_suffix(')')?
        .parse()
        .ok()
}

impl FromStr for CategoryTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use CategoryTag::*;
        let fixed = [
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
            HalfLiberatedOrthogonal,
            HalfLiberatedBistochasticSharp,
            HalfLiberatedHyperoctahedral,
            PairPositioner,
        ];
        if let Some(t) = fixed.iter().find(|t| t.tag() == s) {
            return Ok(*t);
        }
        if s == "group-symmetric" {
            return Ok(GroupSymmetric);
        }
        if let Some(v) = parameter(s, "half-liberated-series") {
            return Ok(HalfLiberatedSeries(v));
        }
        if let Some(v) = parameter(s, "pi-series") {
            return Ok(PiSeries(v));
        }
        Err(Error::UnknownTag(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(
            named_category(CategoryTag::FreeHyperoctahedral).unwrap(),
            vec![n(Named::FourBlock)]
        );
        let p = named_category("group-P".parse().unwrap()).unwrap();
        assert_eq!(p, vec![n(Named::Crossing), n(Named::Singleton), n(Named::FourBlock)]);
        let h = named_category(CategoryTag::HalfLiberatedSeries(4)).unwrap();
        assert_eq!(h[2].literal(), ";abababab");
        assert!(named_category(CategoryTag::HalfLiberatedSeries(2)).is_err());
        assert!("nope".parse::<CategoryTag>().is_err());
    }

    #[test]
    fn tags_round_trip() {
        for t in NON_HYPEROCTAHEDRAL {
            assert_eq!(t.tag().parse::<CategoryTag>().unwrap(), t);
        }
        assert_eq!(
            "pi-series(3)".parse::<CategoryTag>().unwrap(),
            CategoryTag::PiSeries(3)
        );
    }
}
