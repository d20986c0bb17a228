use super::{Polynomial, Ring};
use crate::error::{Error, Result};

/// Largest size accepted by [`Matrix::determinant`]; the subset memo has `2^n` slots.
pub const MAX_DET_SIZE: usize = 12;

/// Dense row-major matrix over a [`Ring`].
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

pub type PolyMatrix = Matrix<Polynomial>;

impl<R: Ring> Matrix<R> {
    pub fn new(rows: usize, cols: usize, entries: Vec<R>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::usage("matrix dimensions must be positive"));
        }
        if entries.len() != rows * cols {
            return Err(Error::usage(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|x| !x.compatible(&entries[0])) {
            return Err(Error::usage("matrix entries live in different rings"));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix::new(rows, cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn checked_mul(&self, rhs: &Matrix<R>) -> Result<Matrix<R>> {
        if self.cols != rhs.rows {
            return Err(Error::usage("matrix product with mismatched inner dimension"));
        }
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(self.get(0, 0).zero_like(), |acc, k| {
                acc.plus(&self.get(i, k).times(rhs.get(k, j)))
            })
        })
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        *x == x.one_like()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// Division-free determinant by Laplace expansion along successive rows,
    /// memoising the minors on the leading rows indexed by their column set.
    /// Uses `O(2^n * n)` ring multiplications.
    pub fn determinant(&self) -> Result<R> {
        if !self.is_square() {
            return Err(Error::usage(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n > MAX_DET_SIZE {
            return Err(Error::usage(format!("determinant size {n} exceeds {MAX_DET_SIZE}")));
        }
        let zero = self.entries[0].zero_like();
        // minors[mask] = det of rows 0..popcount(mask) restricted to the columns in mask
        let mut minors: Vec<Option<R>> = vec![None; 1 << n];
        minors[0] = Some(self.entries[0].one_like());
        let mut layer: Vec<usize> = vec![0];
        for k in 1..=n {
            let row = k - 1;
            let mut next = Vec::new();
            for mask in 1usize..(1 << n) {
                if mask.count_ones() as usize != k {
                    continue;
                }
                let mut acc: Option<R> = None;
                for (pos, j) in (0..n).filter(|j| mask & (1 << j) != 0).enumerate() {
                    let entry = self.get(row, j);
                    if entry.is_zero() {
                        continue;
                    }
                    let Some(sub) = minors[mask & !(1 << j)].as_ref() else { continue };
                    let term = entry.times(sub);
                    let negative = (row + pos) % 2 == 1;
                    acc = Some(match (acc, negative) {
                        (None, false) => term,
                        (None, true) => term.negated(),
                        (Some(a), false) => a.plus(&term),
                        (Some(a), true) => a.minus(&term),
                    });
                }
                // Zero minors are stored as `None` so they are skipped above.
                if let Some(value) = acc.filter(|v| !v.is_zero()) {
                    minors[mask] = Some(value);
                    next.push(mask);
                }
            }
            for mask in layer.drain(..) {
                minors[mask] = None;
            }
            layer = next;
        }
        Ok(minors[(1 << n) - 1].take().unwrap_or(zero))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{Rational, SymbolTable};

    fn poly(text: &str) -> Polynomial {
        Polynomial::parse(text, &SymbolTable::indexed("e", 2)).unwrap()
    }

    #[test]
    fn unitriangular() {
        let m = Matrix::new(2, 2, vec![poly("1"), poly("0"), poly("e1"), poly("1")]).unwrap();
        assert_eq!(m.determinant().unwrap(), poly("1"));
    }

    #[test]
    fn schur_two_by_two() {
        let h1 = poly("e1");
        let h2 = poly("e1^2 - e2");
        let m = Matrix::new(2, 2, vec![h1.clone(), h2, poly("1"), h1]).unwrap();
        // h1^2 - h2 = e2
        assert_eq!(m.determinant().unwrap(), poly("e2"));
    }

    #[test]
    fn one_by_one() {
        let m = Matrix::new(1, 1, vec![poly("e1")]).unwrap();
        assert_eq!(m.determinant().unwrap(), poly("e1"));
    }

    #[test]
    fn non_square_is_usage_error() {
        let m = Matrix::new(1, 2, vec![poly("e1"), poly("e2")]).unwrap();
        assert!(matches!(m.determinant(), Err(Error::Usage(_))));
    }

    #[test]
    fn rational_three_by_three() {
        let q = |n: i64| Rational::from(n);
        let m = Matrix::new(3, 3, vec![q(2), q(0), q(1), q(1), q(3), q(2), q(1), q(1), q(1)]).unwrap();
        // 2*(3-2) - 0 + 1*(1-3) = 0
        assert_eq!(m.determinant().unwrap(), q(0));
        let m = Matrix::new(3, 3, vec![q(2), q(0), q(1), q(1), q(3), q(2), q(1), q(1), q(4)]).unwrap();
        assert_eq!(m.determinant().unwrap(), q(18));
    }

    #[test]
    fn mismatched_rings_rejected() {
        let a = Polynomial::one(&SymbolTable::indexed("a", 1));
        assert!(Matrix::new(1, 2, vec![poly("e1"), a]).is_err());
    }
}
