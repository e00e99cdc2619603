use std::collections::BTreeMap;

use super::delta::DeltaTensor;
use super::opmatrix::OpMatrix;
use super::rep::MatrixRep;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Default cap on `n^{max(k,l)} · dim`.
pub const DEFAULT_SIZE_BUDGET: usize = 1 << 14;

type Vector = BTreeMap<Vec<usize>, OpMatrix>;

fn add_into(v: &mut Vector, key: Vec<usize>, x: &OpMatrix) {
    match v.get_mut(&key) {
        Some(y) => *y = &*y + x,
        None => {
            v.insert(key, x.clone());
        }
    }
}

fn prune(mut v: Vector) -> Vector {
    v.retain(|_, x| !x.is_zero());
    v
}

/// Calls `f(I, u_{I J})` for every row multi-index `I` with a nonzero
/// product `u_{i1 j1} ⋯ u_{im jm}`.
fn for_each_row(rep: &MatrixRep, cols: &[usize], f: &mut impl FnMut(&[usize], &OpMatrix)) {
    fn go(
        rep: &MatrixRep,
        cols: &[usize],
        rows: &mut Vec<usize>,
        acc: &OpMatrix,
        f: &mut impl FnMut(&[usize], &OpMatrix),
    ) {
        let t = rows.len();
        if t == cols.len() {
            f(rows, acc);
            return;
        }
        for i in 0..rep.n() {
            if let Some(x) = rep.entry(i, cols[t]) {
                let next = acc * x;
                if next.is_zero() {
                    continue;
                }
                rows.push(i);
                go(rep, cols, rows, &next, f);
                rows.pop();
            }
        }
    }
    go(rep, cols, &mut Vec::new(), &OpMatrix::identity(rep.dim()), f);
}

/// Exact test of `T_p u^{⊗k} = u^{⊗l} T_p` for `p ∈ P(k, l)`, with operator
/// entries `(u^{⊗m})_{IJ} = u_{i1 j1} ⋯ u_{im jm}`.
pub fn intertwiner_check(p: &Partition, rep: &MatrixRep, budget: usize) -> Result<bool> {
    let n = rep.n();
    let (k, l) = (p.upper_arity(), p.lower_arity());
    let rows = n
        .checked_pow(k.max(l) as u32)
        .and_then(|r| r.checked_mul(rep.dim()))
        .unwrap_or(usize::MAX);
    if rows > budget {
        return Err(Error::SizeBudget { rows, budget });
    }
    let t = DeltaTensor::new(p, n)?;
    let columns = t.columns();
    let none = Vec::new();
    let image = |input: &[usize]| columns.get(input).unwrap_or(&none);

    let mut j = vec![0usize; k];
    loop {
        // T_p u^{⊗k} applied to e_J
        let mut lhs = Vector::new();
        for_each_row(rep, &j, &mut |i, x| {
            for out in image(i) {
                add_into(&mut lhs, out.clone(), x);
            }
        });
        // u^{⊗l} T_p applied to e_J
        let mut rhs = Vector::new();
        for mid in image(&j) {
            for_each_row(rep, mid, &mut |i, x| add_into(&mut rhs, i.to_vec(), x));
        }
        if prune(lhs) != prune(rhs) {
            return Ok(false);
        }
        let mut pos = 0;
        loop {
            if pos == k {
                return Ok(true);
            }
            j[pos] += 1;
            if j[pos] < n {
                break;
            }
            j[pos] = 0;
            pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::rep::{build_sigma_infty, build_sigma_k, signed_permutation};
    use super::*;
    use crate::named::Named;

    fn part(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn trivial_cases() {
        let r = build_sigma_k(2).unwrap();
        assert!(intertwiner_check(&part("a;a"), &r, DEFAULT_SIZE_BUDGET).unwrap());
        let s = signed_permutation(&[1, 2, 0], &[1, -1, -1]).unwrap();
        assert!(intertwiner_check(&part(";aa"), &s, DEFAULT_SIZE_BUDGET).unwrap());
        assert!(intertwiner_check(&part("ab;ba"), &s, DEFAULT_SIZE_BUDGET).unwrap());
    }

    #[test]
    fn sigma_infty_separates() {
        let r = build_sigma_infty();
        let fat = Named::FatCrossing.partition().unwrap();
        assert!(intertwiner_check(&fat, &r, DEFAULT_SIZE_BUDGET).unwrap());
        assert!(intertwiner_check(&part("aa;aa"), &r, DEFAULT_SIZE_BUDGET).unwrap());
        // the crossing needs commuting entries
        assert!(!intertwiner_check(&part("ab;ba"), &r, DEFAULT_SIZE_BUDGET).unwrap());
        let pp = Named::PairPositioner.partition().unwrap().to_one_row();
        let balanced = Partition::from_one_row(&pp, pp.size() / 2).unwrap();
        assert!(!intertwiner_check(&balanced, &r, DEFAULT_SIZE_BUDGET).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let r = build_sigma_k(4).unwrap();
        let big = Partition::from_one_row(&Named::Pi(3).partition().unwrap(), 6).unwrap();
        assert!(matches!(
            intertwiner_check(&big, &r, DEFAULT_SIZE_BUDGET),
            Err(Error::SizeBudget { .. })
        ));
    }
}
