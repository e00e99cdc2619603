//! Exact checks of the relations defining the π-series quantum groups.

use std::collections::HashSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::opmatrix::OpMatrix;
use super::rep::MatrixRep;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Relation {
    /// (i) `u_ij* = u_ij`
    SelfAdjoint,
    /// (ii) at depth `l`: `(u_{i2j2} … u_{iljl}² … u_{i2j2})` commutes with `u_{i1j1}²`
    Commutation(usize),
    /// (iii) `u_ik u_jk = u_ki u_kj = 0` for `i ≠ j`
    Orthogonality,
    /// (iv) `Σ_k u_ik² = Σ_k u_ki² = 1`
    SquareSums,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::SelfAdjoint => write!(f, "(i) self-adjoint"),
            Relation::Commutation(l) => write!(f, "(ii) commutation at l={l}"),
            Relation::Orthogonality => write!(f, "(iii) orthogonality"),
            Relation::SquareSums => write!(f, "(iv) square sums"),
        }
    }
}

/// The first failure of a relation. Indices are one-based `(i, j)` pairs;
/// for commutation they are `(i1,j1), (i2,j2), …, (il,jl)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub relation: Relation,
    pub indices: Vec<(usize, usize)>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(|(i, j)| format!("u{i}{j}")).collect();
        write!(f, "violation of {} at [{}]: {}", self.relation, idx.join(", "), self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub depth: usize,
    /// Largest `l <= depth` such that (ii) holds for every depth up to `l`
    /// (1 when it already fails at depth 2).
    pub commutation_holds_to: usize,
    pub partial_isometries: bool,
    pub violations: Vec<Violation>,
}

impl RelationReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first_violation(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holds() {
            write!(f, "relations (i)-(iv) hold at depth {}", self.depth)
        } else {
            let v = &self.violations[0];
            match v.relation {
                Relation::Commutation(l) => write!(f, "violation at l={l}: {v}"),
                _ => write!(f, "{v}"),
            }
        }
    }
}

fn one_based(e: (usize, usize)) -> (usize, usize) {
    (e.0 + 1, e.1 + 1)
}

/// Checks relations (i), (iii), (iv) and (ii) for every `2 <= l <= depth`.
/// For each relation the lexicographically first violation is reported.
pub fn check_relations(rep: &MatrixRep, depth: usize) -> RelationReport {
    let n = rep.n();
    let dim = rep.dim();
    let mut violations = Vec::new();

    if let Some(&(i, j)) = rep
        .support()
        .iter()
        .find(|&&(i, j)| !rep.entry_matrix(i, j).is_self_adjoint())
    {
        violations.push(Violation {
            relation: Relation::SelfAdjoint,
            indices: vec![one_based((i, j))],
            detail: "entry is not self-adjoint".into(),
        });
    }

    'orth: for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            for k in 0..n {
                let col = (rep.entry(a, k), rep.entry(b, k));
                let row = (rep.entry(k, a), rep.entry(k, b));
                for (pair, idx) in [(col, [(a, k), (b, k)]), (row, [(k, a), (k, b)])] {
                    if let (Some(x), Some(y)) = pair {
                        if !(x * y).is_zero() {
                            violations.push(Violation {
                                relation: Relation::Orthogonality,
                                indices: idx.iter().copied().map(one_based).collect(),
                                detail: "product of orthogonal entries is nonzero".into(),
                            });
                            break 'orth;
                        }
                    }
                }
            }
        }
    }

    let one = OpMatrix::identity(dim);
    let square = |i: usize, j: usize| rep.entry(i, j).map(|x| x * x);
    'sums: for i in 0..n {
        let mut row = OpMatrix::zero(dim);
        let mut col = OpMatrix::zero(dim);
        for k in 0..n {
            if let Some(s) = square(i, k) {
                row = &row + &s;
            }
            if let Some(s) = square(k, i) {
                col = &col + &s;
            }
        }
        for (sum, what) in [(row, "row"), (col, "column")] {
            if sum != one {
                violations.push(Violation {
                    relation: Relation::SquareSums,
                    indices: vec![(i + 1, i + 1)],
                    detail: format!("{what} {} has square sum {sum}", i + 1),
                });
                break 'sums;
            }
        }
    }

    let partial_isometries = rep.support().iter().all(|&(i, j)| {
        let s = square(i, j).expect("support entry");
        &s * &s == s
    });

    let (commutation_holds_to, witness) = commutation(rep, depth);
    if let Some(v) = witness {
        violations.push(v);
    }
    violations.sort_by_key(|a| a.relation);

    RelationReport {
        depth,
        commutation_holds_to,
        partial_isometries,
        violations,
    }
}

/// Checks (ii) level by level. `S_2` holds the squares `u_e²`, and
/// `S_l = { u_e s u_e : s ∈ S_{l-1} }`. Every value keeps the
/// lexicographically least index sequence producing it, so the first
/// violation found is the least one overall.
fn commutation(rep: &MatrixRep, depth: usize) -> (usize, Option<Violation>) {
    let support = rep.support();
    let squares: Vec<((usize, usize), OpMatrix)> = support
        .iter()
        .map(|&(i, j)| {
            let x = rep.entry(i, j).expect("support entry");
            ((i, j), x * x)
        })
        .collect();
    let mut level: Vec<(Vec<(usize, usize)>, OpMatrix)> =
        squares.iter().map(|(e, s)| (vec![*e], s.clone())).collect();
    let mut holds_to = 1;
    for l in 2..=depth.max(1) {
        if l > 2 {
            let mut seen: HashSet<OpMatrix> = HashSet::new();
            let mut next = Vec::new();
            for &e in &support {
                let x = rep.entry(e.0, e.1).expect("support entry");
                for (seq, s) in &level {
                    let y = &(x * s) * x;
                    if y.is_zero() || seen.contains(&y) {
                        continue;
                    }
                    seen.insert(y.clone());
                    let mut seq2 = Vec::with_capacity(seq.len() + 1);
                    seq2.push(e);
                    seq2.extend_from_slice(seq);
                    next.push((seq2, y));
                }
            }
            next.sort_by(|a, b| a.0.cmp(&b.0));
            level = next;
        }
        for (e1, sq) in &squares {
            for (seq, x) in &level {
                if !sq.commutes_with(x) {
                    let mut indices = vec![one_based(*e1)];
                    indices.extend(seq.iter().copied().map(one_based));
                    return (
                        holds_to,
                        Some(Violation {
                            relation: Relation::Commutation(l),
                            indices,
                            detail: format!("{x} does not commute with {sq}"),
                        }),
                    );
                }
            }
        }
        holds_to = l;
    }
    (holds_to, None)
}

/// Result of sampling the primed form of relation (ii).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimedReport {
    pub depth: usize,
    pub samples: usize,
    /// Samples where at least one side was nonzero.
    pub nontrivial: usize,
    /// First failing multi-index `(i, j, α, β)`, one-based.
    pub failure: Option<[Vec<usize>; 4]>,
}

fn product(rep: &MatrixRep, factors: &[(usize, usize)]) -> OpMatrix {
    let mut acc = OpMatrix::identity(rep.dim());
    for &(a, b) in factors {
        match rep.entry(a, b) {
            Some(x) => acc = &acc * x,
            None => return OpMatrix::zero(rep.dim()),
        }
    }
    acc
}

/// Checks the primed form of (ii) at depth `l` on `samples` seeded random
/// multi-indices `i, j, α, β`:
///
/// `δ_ij (u_{α2i2}…u_{αlil} u_{βlil}…u_{β2i2})(u_{β1i1} u_{α1i1})
///  = δ_αβ (u_{α1j1} u_{α1i1})(u_{α2i2}…u_{αlil} u_{αljl}…u_{α2j2})`.
///
/// Half of the samples force `i = j` and half force `α = β` so that the
/// deltas do not make almost every sample trivial.
pub fn check_primed(rep: &MatrixRep, l: usize, samples: usize, seed: u64) -> PrimedReport {
    let n = rep.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut nontrivial = 0;
    for _ in 0..samples {
        let mut draw = || (0..l).map(|_| rng.gen_range(0..n)).collect::<Vec<_>>();
        let i = draw();
        let mut j = draw();
        let alpha = draw();
        let mut beta = draw();
        if rng.gen_bool(0.5) {
            j = i.clone();
        }
        if rng.gen_bool(0.5) {
            beta = alpha.clone();
        }
        let lhs = if i == j {
            let mut f: Vec<(usize, usize)> = (1..l).map(|t| (alpha[t], i[t])).collect();
            f.extend((1..l).rev().map(|t| (beta[t], i[t])));
            f.push((beta[0], i[0]));
            f.push((alpha[0], i[0]));
            product(rep, &f)
        } else {
            OpMatrix::zero(rep.dim())
        };
        let rhs = if alpha == beta {
            let mut f = vec![(alpha[0], j[0]), (alpha[0], i[0])];
            f.extend((1..l).map(|t| (alpha[t], i[t])));
            f.extend((1..l).rev().map(|t| (alpha[t], j[t])));
            product(rep, &f)
        } else {
            OpMatrix::zero(rep.dim())
        };
        if !lhs.is_zero() || !rhs.is_zero() {
            nontrivial += 1;
        }
        if lhs != rhs {
            let b = |v: &Vec<usize>| v.iter().map(|x| x + 1).collect();
            return PrimedReport {
                depth: l,
                samples,
                nontrivial,
                failure: Some([b(&i), b(&j), b(&alpha), b(&beta)]),
            };
        }
    }
    PrimedReport {
        depth: l,
        samples,
        nontrivial,
        failure: None,
    }
}

#[cfg(test)]
mod tests {
    use super::super::rep::{build_sigma_infty, build_sigma_k, signed_permutation};
    use super::*;

    #[test]
    fn sigma_two_ladder() {
        let r = build_sigma_k(2).unwrap();
        let ok = check_relations(&r, 2);
        assert!(ok.holds(), "{ok}");
        assert!(ok.partial_isometries);
        let bad = check_relations(&r, 3);
        let v = bad.first_violation().unwrap();
        assert_eq!(v.relation, Relation::Commutation(3));
        assert_eq!(v.indices.len(), 3);
        assert_eq!(bad.commutation_holds_to, 2);
    }

    #[test]
    fn sigma_infty_holds_deep() {
        let r = build_sigma_infty();
        let rep = check_relations(&r, 6);
        assert!(rep.holds(), "{rep}");
    }

    #[test]
    fn signed_permutations_hold() {
        let r = signed_permutation(&[2, 0, 1, 3], &[1, -1, 1, -1]).unwrap();
        assert!(check_relations(&r, 5).holds());
    }

    #[test]
    fn broken_rep_reports_each_relation() {
        let a = OpMatrix::from_rows(&[&[0, 1], &[0, 0]], 1);
        let one = OpMatrix::identity(2);
        let z = OpMatrix::zero(2);
        let r = MatrixRep::new(2, vec![vec![a, z.clone()], vec![z, one]], "C^2").unwrap();
        let rep = check_relations(&r, 2);
        let kinds: Vec<Relation> = rep.violations.iter().map(|v| v.relation).collect();
        assert!(kinds.contains(&Relation::SelfAdjoint));
        assert!(kinds.contains(&Relation::SquareSums));
    }

    #[test]
    fn primed_form_on_sigma_two() {
        let r = build_sigma_k(2).unwrap();
        let rep = check_primed(&r, 2, 3000, 7);
        assert_eq!(rep.failure, None);
        assert!(rep.nontrivial > 0);
    }
}
