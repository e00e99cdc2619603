use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::opmatrix::OpMatrix;
use crate::error::{Error, Result};

/// An `n × n` matrix whose entries are operators on a common
/// finite-dimensional space. Zero entries are stored as `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixRep {
    n: usize,
    dim: usize,
    entries: Vec<Option<OpMatrix>>,
    space: String,
}

impl MatrixRep {
    /// Builds a representation from a full `n × n` grid of entries.
    pub fn new(dim: usize, grid: Vec<Vec<OpMatrix>>, space: impl Into<String>) -> Result<Self> {
        let n = grid.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in grid {
            if row.len() != n {
                return Err(Error::Inconsistent("operator matrix must be square".into()));
            }
            for e in row {
                if e.dim() != dim {
                    return Err(Error::Inconsistent(format!(
                        "entry of dimension {} on a {dim}-dimensional space",
                        e.dim()
                    )));
                }
                entries.push(if e.is_zero() { None } else { Some(e) });
            }
        }
        Ok(MatrixRep {
            n,
            dim,
            entries,
            space: space.into(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension of the space the entries act on.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn space(&self) -> &str {
        &self.space
    }

    /// Entry `u_ij`, zero-based; `None` for a zero entry.
    pub fn entry(&self, i: usize, j: usize) -> Option<&OpMatrix> {
        self.entries[i * self.n + j].as_ref()
    }

    /// Entry `u_ij` as a matrix, materialising zeros.
    pub fn entry_matrix(&self, i: usize, j: usize) -> OpMatrix {
        self.entry(i, j)
            .cloned()
            .unwrap_or_else(|| OpMatrix::zero(self.dim))
    }

    /// Positions of the nonzero entries in row-major order.
    pub fn support(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| (0..self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.entry(i, j).is_some())
            .collect()
    }

    pub fn to_document(&self) -> RepDocument {
        RepDocument {
            n: self.n,
            dim: self.dim,
            space: self.space.clone(),
            entries: (0..self.n)
                .map(|i| (0..self.n).map(|j| self.entry_matrix(i, j).rows()).collect())
                .collect(),
        }
    }
}

/// Matrix-literal export: `entries[i][j]` is the list of rows of `u_ij`,
/// each a list of fractions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepDocument {
    pub n: usize,
    pub dim: usize,
    pub space: String,
    pub entries: Vec<Vec<Vec<Vec<String>>>>,
}

impl RepDocument {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serialisable document");
        s.push('\n');
        s
    }
}

fn unit_projection(k: usize, r: usize) -> OpMatrix {
    let mut m = OpMatrix::zero(k);
    m.set(r, r, Rational64::one());
    m
}

fn swap(k: usize, r: usize) -> OpMatrix {
    let mut m = OpMatrix::identity(k);
    m.set(r, r, Rational64::zero());
    m.set(r + 1, r + 1, Rational64::zero());
    m.set(r, r + 1, Rational64::one());
    m.set(r + 1, r, Rational64::one());
    m
}

/// The named operators of the `σ_k` construction on `C² ⊗ C^k`.
#[derive(Debug, Clone)]
pub struct SigmaParts {
    pub k: usize,
    /// `p̊ = diag(1, 0)` on `C²`.
    pub p_ring: OpMatrix,
    /// `q̊`, the projection onto `(1,1)/√2` on `C²`.
    pub q_ring: OpMatrix,
    /// `v_1, …, v_{k-1}` with `v_i = 1 ⊗ v̂_i`.
    pub v: Vec<OpMatrix>,
    /// `p = p̊ ⊗ p_1`
    pub p: OpMatrix,
    /// `q = q̊ ⊗ p_k`
    pub q: OpMatrix,
}

impl SigmaParts {
    pub fn new(k: usize) -> Result<SigmaParts> {
        if k < 2 {
            return Err(Error::ParameterOutOfRange(format!("sigma_k needs k >= 2, got {k}")));
        }
        let one2 = OpMatrix::identity(2);
        let p_ring = OpMatrix::from_rows(&[&[1, 0], &[0, 0]], 1);
        let q_ring = OpMatrix::from_rows(&[&[1, 1], &[1, 1]], 2);
        let v = (0..k - 1).map(|i| one2.kron(&swap(k, i))).collect();
        let p = p_ring.kron(&unit_projection(k, 0));
        let q = q_ring.kron(&unit_projection(k, k - 1));
        Ok(SigmaParts {
            k,
            p_ring,
            q_ring,
            v,
            p,
            q,
        })
    }
}

/// The representation `σ_k` of size `n = k + 3` on `C² ⊗ C^k`: a diagonal of
/// swaps `v_1, …, v_{k-1}` followed by the blocks `[p, 1-p; 1-p, p]` and
/// `[q, 1-q; 1-q, q]`.
pub fn build_sigma_k(k: usize) -> Result<MatrixRep> {
    let parts = SigmaParts::new(k)?;
    let dim = 2 * k;
    let n = k + 3;
    let one = OpMatrix::identity(dim);
    let mut grid = vec![vec![OpMatrix::zero(dim); n]; n];
    for (i, v) in parts.v.iter().enumerate() {
        grid[i][i] = v.clone();
    }
    for (base, x) in [(k - 1, &parts.p), (k + 1, &parts.q)] {
        let co = &one - x;
        grid[base][base] = x.clone();
        grid[base][base + 1] = co.clone();
        grid[base + 1][base] = co;
        grid[base + 1][base + 1] = x.clone();
    }
    MatrixRep::new(dim, grid, format!("C^2 (x) C^{k}"))
}

/// The representation `σ_∞` of size 3 on `C²`:
/// rows `[p, 1-p, 0]`, `[1-p, p, 0]`, `[0, 0, w]`.
pub fn build_sigma_infty() -> MatrixRep {
    let p = OpMatrix::from_rows(&[&[1, 0], &[0, 0]], 1);
    let co = &OpMatrix::identity(2) - &p;
    let w = OpMatrix::from_rows(&[&[0, 1], &[1, 0]], 1);
    let z = OpMatrix::zero(2);
    let grid = vec![
        vec![p.clone(), co.clone(), z.clone()],
        vec![co, p, z.clone()],
        vec![z.clone(), z, w],
    ];
    MatrixRep::new(2, grid, "C^2").expect("well-formed")
}

/// A signed permutation matrix with scalar entries: `u_{i, perm[i]} = signs[i]`.
pub fn signed_permutation(perm: &[usize], signs: &[i64]) -> Result<MatrixRep> {
    let n = perm.len();
    if signs.len() != n {
        return Err(Error::Inconsistent("one sign per row expected".into()));
    }
    let mut seen = vec![false; n];
    for &j in perm {
        if j >= n || std::mem::replace(&mut seen[j], true) {
            return Err(Error::Inconsistent(format!("{perm:?} is not a permutation")));
        }
    }
    let mut grid = vec![vec![OpMatrix::zero(1); n]; n];
    for i in 0..n {
        if signs[i].abs() != 1 {
            return Err(Error::Inconsistent(format!("sign {} is not +-1", signs[i])));
        }
        grid[i][perm[i]] = OpMatrix::from_rows(&[&[signs[i]]], 1);
    }
    MatrixRep::new(1, grid, "C")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_two_shape() {
        let r = build_sigma_k(2).unwrap();
        assert_eq!(r.n(), 5);
        assert_eq!(r.dim(), 4);
        // one swap on the diagonal and two 2 × 2 blocks
        assert_eq!(r.support().len(), 1 + 4 + 4);
        let parts = SigmaParts::new(2).unwrap();
        assert!(!parts.p_ring.commutes_with(&parts.q_ring));
        for v in &parts.v {
            assert_eq!(v * v, OpMatrix::identity(4));
        }
    }

    #[test]
    fn sigma_infty_noncommuting() {
        let r = build_sigma_infty();
        let u11 = r.entry_matrix(0, 0);
        let u33 = r.entry_matrix(2, 2);
        assert!(!(&u11 * &u11).commutes_with(&u33));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(build_sigma_k(1).is_err());
        assert!(signed_permutation(&[0, 0], &[1, 1]).is_err());
        assert!(signed_permutation(&[1, 0], &[1, 2]).is_err());
    }

    #[test]
    fn export_has_fractions() {
        let doc = build_sigma_k(2).unwrap().to_document();
        assert_eq!(doc.entries.len(), 5);
        assert_eq!(doc.entries[3][3].len(), 4);
        let json = doc.to_json();
        assert!(json.contains("\"1/2\""));
    }
}
