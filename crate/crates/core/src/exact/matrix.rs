use std::fmt;

use super::{Rational, UniPoly};
use crate::error::{Error, Result};

/// Commutative ring with exact division, enough for fraction-free
/// elimination.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / rhs` where the quotient is known to exist in the ring.
    fn exact_div(&self, rhs: &Self) -> Self;
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

impl Ring for UniPoly {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn one() -> Self {
        UniPoly::one()
    }
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        let (q, r) = self.div_rem(rhs).expect("Bareiss pivot is nonzero");
        debug_assert!(r.is_zero(), "inexact polynomial division in Bareiss step");
        q
    }
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

pub type RatMatrix = Matrix<Rational>;
pub type PolyMatrix = Matrix<UniPoly>;

impl<T> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
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

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[T]> {
        self.entries.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Submatrix on the given (0-based) rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix<T>
    where
        T: Clone,
    {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    pub fn transpose(&self) -> Matrix<T>
    where
        T: Clone,
    {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    fn to_rows(&self) -> Vec<Vec<T>>
    where
        T: Clone,
    {
        self.iter_rows().map(<[T]>::to_vec).collect()
    }
}

impl<T: Ring> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn mul(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != rhs.rows {
            return Err(Error::Shape {
                rows: rhs.rows,
                cols: rhs.cols,
                len: self.cols,
            });
        }
        Ok(Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(T::zero(), |acc, l| {
                acc.add(&self.get(i, l).mul(rhs.get(l, j)))
            })
        }))
    }

    /// Determinant by fraction-free (Bareiss) elimination with row pivoting.
    pub fn det(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut m = self.to_rows();
        let mut prev = T::one();
        let mut negate = false;
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(T::zero());
            };
            if p != k {
                m.swap(p, k);
                negate = !negate;
            }
            let (top, rest) = m.split_at_mut(k + 1);
            let pivot_row = &top[k];
            for row in rest.iter_mut() {
                for j in k + 1..n {
                    let v = pivot_row[k].mul(&row[j]).sub(&row[k].mul(&pivot_row[j]));
                    row[j] = v.exact_div(&prev);
                }
                row[k] = T::zero();
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if negate { d.neg() } else { d })
    }

    /// Rank by fraction-free elimination. Columns with no pivot are skipped;
    /// every surviving entry stays a minor of the input, so each division is
    /// exact.
    pub fn rank(&self) -> usize {
        let mut m = self.to_rows();
        let mut prev = T::one();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(p, r);
            let (top, rest) = m.split_at_mut(r + 1);
            let pivot_row = &top[r];
            for row in rest.iter_mut() {
                for j in c + 1..self.cols {
                    let v = pivot_row[c].mul(&row[j]).sub(&row[c].mul(&pivot_row[j]));
                    row[j] = v.exact_div(&prev);
                }
                row[c] = T::zero();
            }
            prev = m[r][c].clone();
            r += 1;
        }
        r
    }
}

impl RatMatrix {
    /// Integer matrix literal, mostly for tests.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let entries = rows
            .iter()
            .flat_map(|row| row.iter().map(|&x| Rational::from(x)))
            .collect();
        Matrix::from_vec(r, c, entries)
    }

    /// Reference rank by plain Gaussian elimination over the rationals.
    /// Slower than [`Matrix::rank`] because denominators grow; kept as the
    /// cross-check for the fraction-free routine.
    pub fn rank_naive(&self) -> usize {
        let mut m = self.to_rows();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(p, r);
            let (head, tail) = m.split_at_mut(r + 1);
            eliminate_below(&head[r], tail, c);
            r += 1;
        }
        r
    }

    /// Reference determinant by plain Gaussian elimination.
    pub fn det_naive(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.to_rows();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != c {
                m.swap(p, c);
                det = -det;
            }
            det *= &m[c][c];
            let (head, tail) = m.split_at_mut(c + 1);
            eliminate_below(&head[c], tail, c);
        }
        Ok(det)
    }

    /// Rows as `"p/q"` strings.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        self.iter_rows()
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect()
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(0);
        for i in 0..self.rows {
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("entries", &self.entries)
            .finish()
    }
}

/// Subtract multiples of `pivot` (nonzero at column `c`) to clear column `c`
/// in every row of `rows`.
fn eliminate_below(pivot: &[Rational], rows: &mut [Vec<Rational>], c: usize) {
    let inv = pivot[c].recip().expect("pivot is nonzero");
    for row in rows {
        if row[c].is_zero() {
            continue;
        }
        let factor = &row[c] * &inv;
        for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
            *x -= &(&factor * p);
        }
    }
}
