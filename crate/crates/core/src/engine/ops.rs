//! Single moves on one-row partitions, and the reduction of a finite
//! generator set to one generator.

use crate::error::{Error, Result};
use crate::partition::{identity_power, Partition};

fn check_position(p: &Partition, position: usize) -> Result<usize> {
    if p.upper_arity() != 0 {
        return Err(Error::UpperPointsPresent(p.upper_arity()));
    }
    let n = p.lower_arity();
    if position == 0 || position + 1 > n {
        return Err(Error::OutOfRange { position, len: n });
    }
    Ok(n)
}

/// Caps the points `position` and `position + 1` (one-based) with the pair
/// partition. The blocks through them are joined and the two points vanish.
pub fn erase_pair(p: &Partition, position: usize) -> Result<Partition> {
    let n = check_position(p, position)?;
    let cap = Partition::parse("aa;")?;
    let q = identity_power(position - 1)
        .tensor(&cap)
        .tensor(&identity_power(n - position - 1));
    Ok(q.compose(p)?.0)
}

/// Joins the blocks through points `position` and `position + 1`
/// (one-based) by composing with the four-block `aa;aa`.
pub fn connect_neighbouring_blocks(p: &Partition, position: usize) -> Result<Partition> {
    let n = check_position(p, position)?;
    let four = Partition::parse("aa;aa")?;
    let q = identity_power(position - 1)
        .tensor(&four)
        .tensor(&identity_power(n - position - 1));
    Ok(q.compose(p)?.0)
}

/// `p₁ ⊗ … ⊗ pₙ`, tensored with the singleton when some generator has odd
/// size but the product has even size. The result generates the same
/// category as the list.
pub fn normalize_generators(generators: &[Partition]) -> Result<Partition> {
    let (first, rest) = generators.split_first().ok_or(Error::EmptyGenerators)?;
    let mut out = rest.iter().fold(first.clone(), |acc, g| acc.tensor(g));
    let odd = generators.iter().any(|g| g.size() % 2 == 1);
    if odd && out.size() % 2 == 0 {
        out = out.tensor(&Partition::parse(";a")?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{pi, Named};

    fn lit(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    #[test]
    fn erasures() {
        let p3 = pi(3).unwrap();
        let p2 = erase_pair(&erase_pair(&p3, 9).unwrap(), 3).unwrap();
        assert_eq!(p2, pi(2).unwrap());
        assert_eq!(erase_pair(&lit(";aabb"), 1).unwrap(), lit(";aa"));
        assert_eq!(erase_pair(&lit(";abba"), 2).unwrap(), lit(";aa"));
        assert!(matches!(erase_pair(&lit(";aa"), 2), Err(Error::OutOfRange { .. })));
        assert!(matches!(erase_pair(&lit("a;a"), 1), Err(Error::UpperPointsPresent(1))));
    }

    #[test]
    fn connections() {
        assert_eq!(connect_neighbouring_blocks(&lit(";aabb"), 2).unwrap(), lit(";aaaa"));
        assert_eq!(connect_neighbouring_blocks(&lit(";abab"), 1).unwrap(), lit(";aaaa"));
        let mut p = pi(2).unwrap();
        while p.num_blocks() > 1 {
            let w = p.labels().to_vec();
            let at = (0..w.len() - 1).find(|&i| w[i] != w[i + 1]).unwrap();
            p = connect_neighbouring_blocks(&p, at + 1).unwrap();
        }
        assert_eq!(p, lit(";aaaaaaaa"));
    }

    #[test]
    fn normalization() {
        let four = Named::FourBlock.partition().unwrap();
        let pair = Named::Pair.partition().unwrap();
        assert_eq!(normalize_generators(&[four, pair]).unwrap(), lit(";aaaabb"));
        let s = Named::Singleton.partition().unwrap();
        assert_eq!(normalize_generators(std::slice::from_ref(&s)).unwrap(), lit(";a"));
        assert_eq!(normalize_generators(&[s.clone(), s]).unwrap(), lit(";abc"));
        assert_eq!(normalize_generators(&[]), Err(Error::EmptyGenerators));
    }
}
