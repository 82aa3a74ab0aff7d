//! Dense matrices generic over an exact scalar.
//!
//! The whole crate works with two instantiations: `Matrix<BigInt>` for
//! weight-lattice actions and `Matrix<BigRational>` for group elements
//! in the realizations.  Determinants use Bareiss fraction-free
//! elimination, which stays exact over any integral domain; inversion
//! is only provided for field scalars.

use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Scalar requirements for the exact matrix kernel.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Signed
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + fmt::Display
        + Zero
        + One
        + Signed
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + Neg<Output = T>
{
}

/// Marker for scalars with exact division by any nonzero element.
/// Gauss-Jordan inversion is restricted to these.
pub trait FieldScalar: Scalar {}
impl FieldScalar for num_rational::BigRational {}
impl FieldScalar for f64 {}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
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

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(c, r)] = self[(r, c)].clone();
            }
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut m = Self::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let v = a.clone() * other[(k, c)].clone();
                    m[(r, c)] = m[(r, c)].clone() + v;
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = T::zero();
                for c in 0..self.cols {
                    if !self[(r, c)].is_zero() {
                        acc = acc + self[(r, c)].clone() * v[c].clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    if r == c {
                        self[(r, c)].is_one()
                    } else {
                        self[(r, c)].is_zero()
                    }
                })
            })
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|r| (0..self.cols).all(|c| r == c || self[(r, c)].is_zero()))
    }

    /// Submatrix on the given (sorted or not) row and column indices.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zero(rows.len(), cols.len());
        for (ri, &r) in rows.iter().enumerate() {
            for (ci, &c) in cols.iter().enumerate() {
                m[(ri, ci)] = self[(r, c)].clone();
            }
        }
        m
    }

    /// Determinant by Bareiss fraction-free elimination.  Every
    /// division performed is exact in the ambient integral domain.
    pub fn det(&self) -> T {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut a = self.data.clone();
        let at = |a: &Vec<T>, r: usize, c: usize| a[r * n + c].clone();
        let mut sign = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if at(&a, k, k).is_zero() {
                match (k + 1..n).find(|&r| !at(&a, r, k).is_zero()) {
                    Some(r) => {
                        for c in 0..n {
                            a.swap(k * n + c, r * n + c);
                        }
                        sign = !sign;
                    }
                    None => return T::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = at(&a, k, k) * at(&a, i, j) - at(&a, i, k) * at(&a, k, j);
                    a[i * n + j] = num / prev.clone();
                }
                a[i * n + k] = T::zero();
            }
            prev = at(&a, k, k);
        }
        let d = at(&a, n - 1, n - 1);
        if sign {
            -d
        } else {
            d
        }
    }

    /// Renders the matrix as a `\begin{pmatrix}...\end{pmatrix}` block.
    pub fn to_latex(&self) -> String {
        let body = (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" & ")
            })
            .collect::<Vec<_>>()
            .join(" \\\\ ");
        format!("\\begin{{pmatrix}} {body} \\end{{pmatrix}}")
    }
}

impl<T: FieldScalar> Matrix<T> {
    /// Gauss-Jordan inverse; panics if the matrix is singular.
    pub fn inverse(&self) -> Self {
        assert!(self.is_square(), "inverse of non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[(r, col)].is_zero())
                .expect("singular matrix");
            if pivot != col {
                for c in 0..n {
                    let tmp = a[(pivot, c)].clone();
                    a[(pivot, c)] = a[(col, c)].clone();
                    a[(col, c)] = tmp;
                    let tmp = inv[(pivot, c)].clone();
                    inv[(pivot, c)] = inv[(col, c)].clone();
                    inv[(col, c)] = tmp;
                }
            }
            let p = a[(col, col)].clone();
            for c in 0..n {
                a[(col, c)] = a[(col, c)].clone() / p.clone();
                inv[(col, c)] = inv[(col, c)].clone() / p.clone();
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for c in 0..n {
                    let av = a[(col, c)].clone() * f.clone();
                    a[(r, c)] = a[(r, c)].clone() - av;
                    let iv = inv[(col, c)].clone() * f.clone();
                    inv[(r, c)] = inv[(r, c)].clone() - iv;
                }
            }
        }
        inv
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|r| self.row(r).iter().map(ToString::to_string).collect())
            .collect();
        let width = cells
            .iter()
            .flat_map(|row| row.iter().map(String::len))
            .max()
            .unwrap_or(1);
        for row in &cells {
            writeln!(
                f,
                "[ {} ]",
                row.iter()
                    .map(|c| format!("{c:>width$}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            )?;
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use crate::{int, rat, IntMatrix, RatMatrix};

    #[test]
    fn det_int_matches_cofactor_expansion() {
        let m = IntMatrix::from_rows(vec![
            vec![int(2), int(-1), int(0)],
            vec![int(-1), int(2), int(-1)],
            vec![int(0), int(-1), int(2)],
        ]);
        assert_eq!(m.det(), int(4)); // Cartan matrix of A3
    }

    #[test]
    fn det_with_zero_pivot() {
        let m = IntMatrix::from_rows(vec![
            vec![int(0), int(1)],
            vec![int(1), int(0)],
        ]);
        assert_eq!(m.det(), int(-1));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = RatMatrix::from_rows(vec![
            vec![rat(1, 1), rat(2, 1), rat(0, 1)],
            vec![rat(0, 1), rat(1, 3), rat(1, 1)],
            vec![rat(5, 1), rat(0, 1), rat(1, 1)],
        ]);
        assert!(m.mul(&m.inverse()).is_identity());
    }

    #[test]
    fn submatrix_det() {
        let m = IntMatrix::from_rows(vec![
            vec![int(1), int(2), int(3)],
            vec![int(4), int(5), int(6)],
            vec![int(7), int(8), int(10)],
        ]);
        assert_eq!(m.submatrix(&[0, 2], &[1, 2]).det(), int(2 * 10 - 3 * 8));
    }
}
