//! Proofs of non-membership that hold for the untruncated category.
//!
//! Each certificate names a property shared by the pair partition, the
//! identity and every generator, and preserved by the category operations.
//! The query lacks the property, so it cannot be in the generated category.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::lab::{build_sigma_infty, check_relations, intertwiner_check, DEFAULT_SIZE_BUDGET};
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    /// Every block has an even number of points.
    EvenBlocks,
    /// The total number of points is even.
    EvenLength,
    /// Every block has one or two points.
    BlocksAtMostTwo,
    Noncrossing,
    /// In the one-row form every block has as many points at odd positions
    /// as at even positions.
    Balanced,
    /// Noncrossing, even length, blocks of size at most two, and an even
    /// number of points strictly between the legs of every pair.
    PairsEncloseEven,
    /// `T_p` intertwines the orthogonal representation `σ_∞`.
    SigmaInfinity,
}

impl CertificateKind {
    pub const ALL: [CertificateKind; 7] = [
        CertificateKind::EvenBlocks,
        CertificateKind::EvenLength,
        CertificateKind::BlocksAtMostTwo,
        CertificateKind::Noncrossing,
        CertificateKind::Balanced,
        CertificateKind::PairsEncloseEven,
        CertificateKind::SigmaInfinity,
    ];

    pub fn describe(self) -> &'static str {
        match self {
            CertificateKind::EvenBlocks => "all blocks have even size",
            CertificateKind::EvenLength => "the number of points is even",
            CertificateKind::BlocksAtMostTwo => "all blocks have size one or two",
            CertificateKind::Noncrossing => "the partition is noncrossing",
            CertificateKind::Balanced => "every block meets odd and even positions equally often",
            CertificateKind::PairsEncloseEven => {
                "noncrossing, blocks of size at most two, even length, and every pair encloses an even number of points"
            }
            CertificateKind::SigmaInfinity => "T_p intertwines the representation sigma_infinity",
        }
    }

    /// Evaluates the property; `None` when it cannot be decided (size budget).
    pub fn holds(self, p: &Partition) -> Option<bool> {
        let word = p.to_one_row();
        let w = word.labels();
        Some(match self {
            CertificateKind::EvenBlocks => p.all_blocks_even(),
            CertificateKind::EvenLength => p.size().is_multiple_of(2),
            CertificateKind::BlocksAtMostTwo => p.block_sizes().iter().all(|&s| s <= 2),
            CertificateKind::Noncrossing => p.is_noncrossing(),
            CertificateKind::Balanced => balanced(w),
            CertificateKind::PairsEncloseEven => {
                p.size().is_multiple_of(2)
                    && p.is_noncrossing()
                    && word.blocks().iter().all(|b| match b.as_slice() {
                        [_] => true,
                        [x, y] => (y - x - 1) % 2 == 0,
                        _ => false,
                    })
            }
            CertificateKind::SigmaInfinity => {
                let rep = build_sigma_infty();
                let balanced = Partition::from_one_row(&word, word.size() / 2).ok()?;
                intertwiner_check(&balanced, &rep, DEFAULT_SIZE_BUDGET).ok()?
            }
        })
    }
}

fn balanced(w: &[u32]) -> bool {
    let blocks = w.iter().copied().max().map_or(0, |m| m as usize + 1);
    let mut diff = vec![0i64; blocks];
    for (i, &b) in w.iter().enumerate() {
        diff[b as usize] += if i % 2 == 0 { 1 } else { -1 };
    }
    diff.iter().all(|&d| d == 0)
}

/// A reason why a partition is not in the category generated by a given set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub query: Partition,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} for the pair and all generators, but not for {}",
            serde_json::to_value(self.kind)
                .ok()
                .and_then(|v| v.as_str().map(str::to_owned))
                .unwrap_or_default(),
            self.kind.describe(),
            self.query
        )
    }
}

/// Checks whether `kind` separates `p` from the category generated by
/// `generators`.
pub fn check_certificate(kind: CertificateKind, generators: &[Partition], p: &Partition) -> Option<Certificate> {
    if kind.holds(p)? {
        return None;
    }
    if kind == CertificateKind::SigmaInfinity {
        // the argument needs u to be orthogonal with self-adjoint entries
        let pair = Partition::parse(";aa").expect("literal");
        if !check_relations(&build_sigma_infty(), 2).holds() || kind.holds(&pair) != Some(true) {
            return None;
        }
    }
    for g in generators {
        if kind.holds(g) != Some(true) {
            return None;
        }
    }
    Some(Certificate {
        kind,
        query: p.clone(),
    })
}

/// The first certificate, in [`CertificateKind::ALL`] order, that rules `p`
/// out of the category generated by `generators`.
pub fn find_certificate(generators: &[Partition], p: &Partition) -> Option<Certificate> {
    CertificateKind::ALL
        .iter()
        .find_map(|&k| check_certificate(k, generators, p))
}

/// The odd-block certificate alone.
pub fn parity_certificate(generators: &[Partition], p: &Partition) -> Option<Certificate> {
    check_certificate(CertificateKind::EvenBlocks, generators, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::Named;

    fn n(t: Named) -> Partition {
        t.partition().unwrap()
    }

    #[test]
    fn parity_examples() {
        let pi2 = vec![n(Named::Pi(2))];
        assert!(parity_certificate(&pi2, &n(Named::DoubleSingleton)).is_some());
        assert!(parity_certificate(&pi2, &n(Named::Singleton)).is_some());
        let single = vec![n(Named::Singleton)];
        assert!(parity_certificate(&single, &n(Named::DoubleSingleton)).is_none());
    }

    #[test]
    fn properties() {
        use CertificateKind::*;
        assert_eq!(Balanced.holds(&n(Named::HalfLiberator)), Some(true));
        assert_eq!(Balanced.holds(&n(Named::Crossing)), Some(false));
        assert_eq!(Balanced.holds(&n(Named::Pair)), Some(true));
        assert_eq!(PairsEncloseEven.holds(&Partition::parse(";abac").unwrap()), Some(false));
        assert_eq!(PairsEncloseEven.holds(&Partition::parse(";abbc").unwrap()), Some(true));
        assert_eq!(PairsEncloseEven.holds(&n(Named::DoubleSingleton)), Some(true));
        assert_eq!(SigmaInfinity.holds(&n(Named::Pi(3))), Some(true));
        assert_eq!(SigmaInfinity.holds(&n(Named::PairPositioner)), Some(false));
        assert_eq!(SigmaInfinity.holds(&n(Named::FourBlock)), Some(true));
    }

    #[test]
    fn pair_positioner_excluded_from_pi_series() {
        let c = find_certificate(&[n(Named::Pi(3))], &n(Named::PairPositioner)).unwrap();
        assert_eq!(c.kind, CertificateKind::SigmaInfinity);
        assert!(find_certificate(&[n(Named::H(3))], &n(Named::PairPositioner)).is_none());
    }
}
