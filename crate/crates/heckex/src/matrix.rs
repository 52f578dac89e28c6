//! Dense matrices over exact rationals: Gauss-Jordan solving and the
//! Faddeev-LeVerrier characteristic polynomial. Dimensions here are tiny
//! (a handful of rows), so the simplest exact algorithms win.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Dense row-major matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::EntryCount { rows, cols, len: entries.len() });
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        RationalMatrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Rational::zero();
            for t in 0..self.cols {
                acc += self.get(i, t) * other.get(t, j);
            }
            acc
        })
    }

    pub fn add(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RationalMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn scale(&self, s: &Rational) -> RationalMatrix {
        RationalMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * s)
    }

    /// Solves `self * X = rhs` exactly by Gauss-Jordan elimination with
    /// first-nonzero pivoting. Returns `None` when `self` is singular.
    pub fn solve(&self, rhs: &RationalMatrix) -> Option<RationalMatrix> {
        assert!(self.is_square(), "coefficient matrix must be square");
        assert_eq!(self.rows, rhs.rows, "row counts must agree");
        let n = self.rows;
        let k = rhs.cols;
        let mut a = self.clone();
        let mut b = rhs.clone();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    let (x, y) = (a.get(pivot, j).clone(), a.get(col, j).clone());
                    *a.get_mut(pivot, j) = y;
                    *a.get_mut(col, j) = x;
                }
                for j in 0..k {
                    let (x, y) = (b.get(pivot, j).clone(), b.get(col, j).clone());
                    *b.get_mut(pivot, j) = y;
                    *b.get_mut(col, j) = x;
                }
            }
            let inv = Rational::one() / a.get(col, col).clone();
            for j in 0..n {
                let v = a.get(col, j) * &inv;
                *a.get_mut(col, j) = v;
            }
            for j in 0..k {
                let v = b.get(col, j) * &inv;
                *b.get_mut(col, j) = v;
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for j in 0..n {
                    let v = a.get(r, j) - &factor * a.get(col, j);
                    *a.get_mut(r, j) = v;
                }
                for j in 0..k {
                    let v = b.get(r, j) - &factor * b.get(col, j);
                    *b.get_mut(r, j) = v;
                }
            }
        }
        Some(b)
    }
}

/// Monic characteristic polynomial, coefficients ascending by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    coeffs: Vec<Rational>,
}

impl CharPoly {
    /// Coefficients ascending by degree; the last entry is always 1.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

/// Sum of the diagonal entries. The 0x0 matrix traces to 0.
pub fn trace(m: &RationalMatrix) -> Result<Rational> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let mut acc = Rational::zero();
    for i in 0..m.rows() {
        acc += m.get(i, i);
    }
    Ok(acc)
}

/// Coefficients of `det(x I - M)` by the Faddeev-LeVerrier recursion.
///
/// The recursion only ever divides by the step index, so everything stays
/// exact; it is also independent of the Gauss-Jordan solve path. The 0x0
/// matrix yields the constant polynomial 1.
pub fn char_poly(m: &RationalMatrix) -> Result<CharPoly> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut aux = RationalMatrix::identity(n);
    for k in 1..=n {
        let am = m.mul(&aux);
        let c = -trace(&am)? / Rational::from_integer(BigInt::from(k as u64));
        coeffs[n - k] = c.clone();
        aux = am.add(&RationalMatrix::identity(n).scale(&c));
    }
    Ok(CharPoly { coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    fn m2(a: i64, b: i64, c: i64, d: i64) -> RationalMatrix {
        RationalMatrix::new(2, 2, vec![rat(a), rat(b), rat(c), rat(d)]).unwrap()
    }

    #[test]
    fn solve_simple() {
        let a = m2(2, 1, 1, 3);
        let x = m2(1, 2, -1, 0);
        let b = a.mul(&x);
        assert_eq!(a.solve(&b).unwrap(), x);
    }

    #[test]
    fn solve_detects_singular() {
        let a = m2(1, 2, 2, 4);
        assert!(a.solve(&RationalMatrix::identity(2)).is_none());
    }

    #[test]
    fn solve_needs_row_swap() {
        let a = m2(0, 1, 1, 0);
        let b = RationalMatrix::identity(2);
        let x = a.solve(&b).unwrap();
        assert_eq!(x, m2(0, 1, 1, 0));
    }

    #[test]
    fn charpoly_1x1() {
        let m = RationalMatrix::new(1, 1, vec![rat(-24)]).unwrap();
        let p = char_poly(&m).unwrap();
        assert_eq!(p.coeffs(), &[rat(24), rat(1)]);
        assert!(p.is_integral());
    }

    #[test]
    fn charpoly_empty() {
        let m = RationalMatrix::zero(0, 0);
        assert_eq!(char_poly(&m).unwrap().coeffs(), &[rat(1)]);
        assert_eq!(trace(&m).unwrap(), rat(0));
    }

    #[test]
    fn charpoly_2x2_known() {
        // det(xI - [[1,2],[3,4]]) = x^2 - 5x - 2
        let p = char_poly(&m2(1, 2, 3, 4)).unwrap();
        assert_eq!(p.coeffs(), &[rat(-2), rat(-5), rat(1)]);
    }

    #[test]
    fn charpoly_rational_entries() {
        let m = RationalMatrix::new(2, 2, vec![ratio(1, 2), rat(0), rat(0), ratio(1, 3)]).unwrap();
        let p = char_poly(&m).unwrap();
        assert_eq!(p.coeffs(), &[ratio(1, 6), ratio(-5, 6), rat(1)]);
        assert!(!p.is_integral());
    }

    #[test]
    fn trace_matches_charpoly_coefficient() {
        let m = m2(7, -3, 2, 11);
        let p = char_poly(&m).unwrap();
        assert_eq!(trace(&m).unwrap(), -p.coeffs()[1].clone());
    }

    #[test]
    fn trace_rejects_rectangular() {
        let m = RationalMatrix::zero(2, 3);
        assert!(trace(&m).is_err());
        assert!(char_poly(&m).is_err());
    }
}
