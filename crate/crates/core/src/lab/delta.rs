//! The linear maps `T_p` and their behaviour under the category operations.

use std::collections::{BTreeMap, HashMap};

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Multi-index pair `(upper, lower)`, zero-based.
pub type Key = (Vec<usize>, Vec<usize>);

/// Sparse `T_p : (C^n)^{⊗k} → (C^n)^{⊗l}`. The coefficient at
/// `(i, j)` is 1 exactly when every block of `p` carries a single index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaTensor {
    partition: Partition,
    n: usize,
    entries: BTreeMap<Key, Rational64>,
}

/// Calls `f` with every assignment of values in `0..n` to `slots` positions.
fn for_each_assignment(slots: usize, n: usize, mut f: impl FnMut(&[usize])) {
    let mut v = vec![0usize; slots];
    loop {
        f(&v);
        let mut t = 0;
        loop {
            if t == slots {
                return;
            }
            v[t] += 1;
            if v[t] < n {
                break;
            }
            v[t] = 0;
            t += 1;
        }
    }
}

impl DeltaTensor {
    pub fn new(p: &Partition, n: usize) -> Result<DeltaTensor> {
        if n == 0 {
            return Err(Error::ParameterOutOfRange("dimension n must be at least 1".into()));
        }
        let k = p.upper_arity();
        let labels = p.labels();
        let mut entries = BTreeMap::new();
        for_each_assignment(p.num_blocks(), n, |values| {
            let upper = labels[..k].iter().map(|&b| values[b as usize]).collect();
            let lower = labels[k..].iter().map(|&b| values[b as usize]).collect();
            entries.insert((upper, lower), Rational64::one());
        });
        Ok(DeltaTensor {
            partition: p.clone(),
            n,
            entries,
        })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &BTreeMap<Key, Rational64> {
        &self.entries
    }

    pub fn coefficient(&self, upper: &[usize], lower: &[usize]) -> Rational64 {
        self.entries
            .get(&(upper.to_vec(), lower.to_vec()))
            .copied()
            .unwrap_or_else(Rational64::zero)
    }

    /// For each input multi-index, the output multi-indices with coefficient 1.
    pub fn columns(&self) -> HashMap<Vec<usize>, Vec<Vec<usize>>> {
        let mut m: HashMap<Vec<usize>, Vec<Vec<usize>>> = HashMap::new();
        for (upper, lower) in self.entries.keys() {
            m.entry(upper.clone()).or_default().push(lower.clone());
        }
        m
    }
}

/// A plain sparse map with the same keys, used for products of `T_p`'s.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SparseMap {
    pub entries: BTreeMap<Key, Rational64>,
}

impl SparseMap {
    fn insert_add(&mut self, key: Key, v: Rational64) {
        let e = self.entries.entry(key).or_insert_with(Rational64::zero);
        *e += v;
    }

    fn prune(mut self) -> Self {
        self.entries.retain(|_, v| !v.is_zero());
        self
    }

    pub fn scale(&self, c: Rational64) -> SparseMap {
        SparseMap {
            entries: self.entries.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
        .prune()
    }
}

impl From<&DeltaTensor> for SparseMap {
    fn from(t: &DeltaTensor) -> Self {
        SparseMap {
            entries: t.entries.clone(),
        }
    }
}

/// `A ⊗ B` on concatenated multi-indices.
pub fn kron(a: &SparseMap, b: &SparseMap) -> SparseMap {
    let mut out = SparseMap::default();
    for ((au, al), av) in &a.entries {
        for ((bu, bl), bv) in &b.entries {
            let upper = [au.as_slice(), bu.as_slice()].concat();
            let lower = [al.as_slice(), bl.as_slice()].concat();
            out.insert_add((upper, lower), av * bv);
        }
    }
    out.prune()
}

/// The product `B · A`: apply `A` first, then `B`.
pub fn product(b: &SparseMap, a: &SparseMap) -> SparseMap {
    let mut by_input: HashMap<&Vec<usize>, Vec<(&Vec<usize>, &Rational64)>> = HashMap::new();
    for ((bu, bl), bv) in &b.entries {
        by_input.entry(bu).or_default().push((bl, bv));
    }
    let mut out = SparseMap::default();
    for ((au, al), av) in &a.entries {
        if let Some(outs) = by_input.get(al) {
            for (bl, bv) in outs {
                out.insert_add((au.clone(), (*bl).clone()), av * *bv);
            }
        }
    }
    out.prune()
}

pub fn transpose(a: &SparseMap) -> SparseMap {
    SparseMap {
        entries: a
            .entries
            .iter()
            .map(|((u, l), v)| ((l.clone(), u.clone()), *v))
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FunctorialityReport {
    pub n: usize,
    /// `T_{p⊗q} = T_p ⊗ T_q`
    pub tensor: bool,
    /// `T_q T_p = n^{rl} T_{qp}`; `None` when the arities do not match.
    pub composition: Option<bool>,
    pub removed_loops: Option<usize>,
    /// `T_{p*} = T_p^t` and `T_{q*} = T_q^t`
    pub involution: bool,
}

impl FunctorialityReport {
    pub fn holds(&self) -> bool {
        self.tensor && self.involution && self.composition != Some(false)
    }
}

/// Checks the three functorial identities for `p` and `q` in dimension `n`.
pub fn verify_functoriality(p: &Partition, q: &Partition, n: usize) -> Result<FunctorialityReport> {
    let tp = SparseMap::from(&DeltaTensor::new(p, n)?);
    let tq = SparseMap::from(&DeltaTensor::new(q, n)?);
    let tpq = SparseMap::from(&DeltaTensor::new(&p.tensor(q), n)?);
    let tensor = tpq == kron(&tp, &tq);

    let (composition, removed_loops) = match q.compose(p) {
        Ok((qp, loops)) => {
            let lhs = product(&tq, &tp);
            let factor = Rational64::from_integer((n as i64).pow(loops as u32));
            let rhs = SparseMap::from(&DeltaTensor::new(&qp, n)?).scale(factor);
            (Some(lhs == rhs), Some(loops))
        }
        Err(_) => (None, None),
    };

    let involution = [(p, &tp), (q, &tq)].iter().all(|(x, tx)| {
        DeltaTensor::new(&x.involute(), n)
            .map(|t| SparseMap::from(&t) == transpose(tx))
            .unwrap_or(false)
    });

    Ok(FunctorialityReport {
        n,
        tensor,
        composition,
        removed_loops,
        involution,
    })
}

/// Gram matrix `⟨T_p, T_q⟩` of partitions sharing one pair of arities.
/// This is a diagnostic only; nothing depends on linear independence.
pub fn gram_matrix(parts: &[Partition], n: usize) -> Result<Vec<Vec<Rational64>>> {
    let tensors = parts
        .iter()
        .map(|p| DeltaTensor::new(p, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(tensors
        .iter()
        .map(|a| {
            tensors
                .iter()
                .map(|b| {
                    a.entries
                        .iter()
                        .filter_map(|(k, v)| b.entries.get(k).map(|w| v * w))
                        .sum()
                })
                .collect()
        })
        .collect())
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn rank(mut m: Vec<Vec<Rational64>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c] / m[r][c];
                for j in c..cols {
                    let x = m[r][j] * f;
                    m[i][j] -= x;
                }
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn small_tensors() {
        let id = DeltaTensor::new(&part("a;a"), 3).unwrap();
        assert_eq!(id.nnz(), 3);
        assert_eq!(id.coefficient(&[1], &[1]), Rational64::one());
        assert!(id.coefficient(&[1], &[2]).is_zero());

        let pair = DeltaTensor::new(&part(";aa"), 2).unwrap();
        let keys: Vec<_> = pair.entries().keys().cloned().collect();
        assert_eq!(keys, vec![(vec![], vec![0, 0]), (vec![], vec![1, 1])]);

        let four = DeltaTensor::new(&part(";aaaa"), 2).unwrap();
        assert_eq!(four.nnz(), 2);
        assert_eq!(four.coefficient(&[], &[1, 1, 1, 1]), Rational64::one());
    }

    #[test]
    fn cap_after_cup_is_a_loop() {
        let r = verify_functoriality(&part(";aa"), &part("aa;"), 3).unwrap();
        assert_eq!(r.removed_loops, Some(1));
        assert_eq!(r.composition, Some(true));
        assert!(r.holds());
        let tq = SparseMap::from(&DeltaTensor::new(&part("aa;"), 3).unwrap());
        let tp = SparseMap::from(&DeltaTensor::new(&part(";aa"), 3).unwrap());
        let v = product(&tq, &tp);
        assert_eq!(v.entries.get(&(vec![], vec![])), Some(&Rational64::from_integer(3)));
    }

    #[test]
    fn arity_mismatch_skips_composition() {
        let r = verify_functoriality(&part("a;a"), &part(";aa"), 2).unwrap();
        assert_eq!(r.composition, None);
        assert!(r.holds());
    }

    #[test]
    fn gram_of_pairings() {
        let ps = [part(";aabb"), part(";abba"), part(";abab")];
        let g = gram_matrix(&ps, 2).unwrap();
        assert_eq!(g[0][0], Rational64::from_integer(4));
        assert_eq!(g[0][1], Rational64::from_integer(2));
        assert_eq!(rank(g), 3);
    }
}
