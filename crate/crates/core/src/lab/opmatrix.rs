use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;
use num_traits::{One, Zero};

/// Formats a rational as `p` or `p/q`.
pub fn fraction(r: &Rational64) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A square matrix over exact rationals, used as an operator on a
/// finite-dimensional space.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpMatrix {
    dim: usize,
    data: Vec<Rational64>,
}

impl OpMatrix {
    pub fn zero(dim: usize) -> Self {
        OpMatrix {
            dim,
            data: vec![Rational64::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Rational64::one();
        }
        m
    }

    /// Builds a matrix from integer rows divided by `denominator`.
    pub fn from_rows(rows: &[&[i64]], denominator: i64) -> Self {
        let dim = rows.len();
        let mut m = Self::zero(dim);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim, "square matrix expected");
            for (j, &x) in row.iter().enumerate() {
                m.data[i * dim + j] = Rational64::new(x, denominator);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Rational64 {
        self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational64) {
        self.data[i * self.dim + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let d = self.dim;
        let mut m = Self::zero(d);
        for i in 0..d {
            for j in 0..d {
                m.data[j * d + i] = self.data[i * d + j];
            }
        }
        m
    }

    /// Self-adjoint over the rationals means symmetric.
    pub fn is_self_adjoint(&self) -> bool {
        *self == self.transpose()
    }

    pub fn scale(&self, c: Rational64) -> Self {
        OpMatrix {
            dim: self.dim,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &OpMatrix) -> Self {
        let (a, b) = (self.dim, other.dim);
        let d = a * b;
        let mut m = Self::zero(d);
        for i in 0..a {
            for j in 0..a {
                let x = self.get(i, j);
                if x.is_zero() {
                    continue;
                }
                for k in 0..b {
                    for l in 0..b {
                        m.data[(i * b + k) * d + j * b + l] = x * other.get(k, l);
                    }
                }
            }
        }
        m
    }

    pub fn commutes_with(&self, other: &OpMatrix) -> bool {
        self * other == other * self
    }

    pub fn rows(&self) -> Vec<Vec<String>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| fraction(&self.get(i, j))).collect())
            .collect()
    }
}

impl Mul for &OpMatrix {
    type Output = OpMatrix;

    fn mul(self, rhs: &OpMatrix) -> OpMatrix {
        let d = self.dim;
        assert_eq!(d, rhs.dim, "dimension mismatch");
        let mut m = OpMatrix::zero(d);
        for i in 0..d {
            for k in 0..d {
                let x = self.data[i * d + k];
                if x.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let y = rhs.data[k * d + j];
                    if !y.is_zero() {
                        m.data[i * d + j] += x * y;
                    }
                }
            }
        }
        m
    }
}

impl Add for &OpMatrix {
    type Output = OpMatrix;

    fn add(self, rhs: &OpMatrix) -> OpMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        OpMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &OpMatrix {
    type Output = OpMatrix;

    fn sub(self, rhs: &OpMatrix) -> OpMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        OpMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &OpMatrix {
    type Output = OpMatrix;

    fn neg(self) -> OpMatrix {
        self.scale(-Rational64::one())
    }
}

impl fmt::Debug for OpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for OpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows().iter().map(|r| r.join(" ")).collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = OpMatrix::from_rows(&[&[1, 0], &[0, 0]], 1);
        let q = OpMatrix::from_rows(&[&[1, 1], &[1, 1]], 2);
        assert_eq!(&p * &p, p);
        assert_eq!(&q * &q, q);
        assert!(!p.commutes_with(&q));
        let one = OpMatrix::identity(2);
        assert_eq!(&(&one - &p) + &p, one);
        assert_eq!(q.to_string(), "[1/2 1/2; 1/2 1/2]");
        let k = p.kron(&one);
        assert_eq!(k.dim(), 4);
        assert_eq!(k.get(1, 1), Rational64::one());
        assert!(k.get(2, 2).is_zero());
    }
}
