//! Versioned JSON export of a closure.

use serde::{Deserialize, Serialize};

use super::{CategoryClosure, ClosureOptions, ClosureStats, Mode, Step};
use crate::error::{Error, Result};
use crate::partition::Partition;

pub const DOCUMENT_VERSION: u32 = 1;

/// One stored orbit with the move that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRecord {
    pub id: usize,
    pub representative: Partition,
    pub round: usize,
    pub step: Step,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureDocument {
    pub version: u32,
    pub generators: Vec<Partition>,
    pub bound: usize,
    pub mode: Mode,
    /// Canonical one-row representatives, sorted by size then literal.
    pub members: Vec<Partition>,
    pub stats: ClosureStats,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derivations: Option<Vec<OrbitRecord>>,
}

impl ClosureDocument {
    pub fn new(closure: &CategoryClosure, with_derivations: bool) -> ClosureDocument {
        let mut members = closure.representatives();
        members.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.literal().cmp(&b.literal())));
        let derivations = with_derivations.then(|| {
            (0..closure.orbit_count())
                .map(|i| OrbitRecord {
                    id: i,
                    representative: Partition::one_row(closure.orbit_word(i)),
                    round: closure.orbit_round(i),
                    step: closure.orbit_step(i),
                })
                .collect()
        });
        ClosureDocument {
            version: DOCUMENT_VERSION,
            generators: closure.generators().to_vec(),
            bound: closure.bound(),
            mode: closure.mode(),
            members,
            stats: closure.stats().clone(),
            derivations,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serialisable document");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<ClosureDocument> {
        let doc: ClosureDocument =
            serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        if doc.version != DOCUMENT_VERSION {
            return Err(Error::Document(format!(
                "unsupported document version {} (expected {DOCUMENT_VERSION})",
                doc.version
            )));
        }
        Ok(doc)
    }

    /// Recomputes the closure from the stored generators and checks that it
    /// has exactly the stored members.
    pub fn rebuild(&self) -> Result<CategoryClosure> {
        let closure = CategoryClosure::build(
            &self.generators,
            ClosureOptions::new(self.bound).mode(self.mode),
        )?;
        let again = ClosureDocument::new(&closure, false);
        if again.members != self.members {
            return Err(Error::Document(format!(
                "document lists {} orbits, recomputation gives {}",
                self.members.len(),
                again.members.len()
            )));
        }
        Ok(closure)
    }
}

impl CategoryClosure {
    pub fn export(&self, with_derivations: bool) -> String {
        ClosureDocument::new(self, with_derivations).to_json()
    }
}
