use std::fmt::{Display, Write as _};
use std::ops::{Add, Mul};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::IntScalar;

/// Square matrix stored row-major. Indices are zero-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    n: usize,
    entries: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let entries = (0..n * n).map(|idx| f(idx / n, idx % n)).collect();
        Self { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::Dimension(format!(
                "row of length {} in a {n}x{n} matrix",
                bad.len()
            )));
        }
        Ok(Self {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        // chunks(0) panics, so route the empty matrix through a dummy size
        self.entries.chunks(self.n.max(1))
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    /// The submatrix with row `i` and column `j` removed.
    pub fn minor(&self, i: usize, j: usize) -> Self {
        let keep: Vec<usize> = (0..self.n).collect();
        let rows: Vec<usize> = keep.iter().copied().filter(|&r| r != i).collect();
        let cols: Vec<usize> = keep.into_iter().filter(|&c| c != j).collect();
        Self::from_fn(self.n - 1, |r, c| self.get(rows[r], cols[c]).clone())
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { T::one() } else { T::zero() })
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + Add<Output = T> + Mul<Output = T>,
{
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::Dimension(format!(
                "cannot multiply {0}x{0} by {1}x{1}",
                self.n, rhs.n
            )));
        }
        Ok(Self::from_fn(self.n, |i, j| {
            (0..self.n).fold(T::zero(), |acc, l| {
                acc + self.get(i, l).clone() * rhs.get(l, j).clone()
            })
        }))
    }
}

/// Serializable form: `{ "n": .., "entries": [["..", ..], ..] }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixDoc {
    pub n: usize,
    pub entries: Vec<Vec<String>>,
}

impl<T: Display> Matrix<T> {
    pub fn entry_strings(&self) -> Vec<Vec<String>> {
        self.rows()
            .take(self.n)
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect()
    }

    pub fn to_doc(&self) -> MatrixDoc {
        MatrixDoc {
            n: self.n,
            entries: self.entry_strings(),
        }
    }

    /// Text grid with right-aligned columns.
    pub fn to_grid(&self) -> String {
        let cells = self.entry_strings();
        let widths: Vec<usize> = (0..self.n)
            .map(|j| {
                cells
                    .iter()
                    .map(|r| r[j].chars().count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = String::new();
        for row in &cells {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:>w$}"))
                .collect();
            writeln!(out, "{}", line.join("  ")).unwrap();
        }
        out
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination. Every division
/// is exact; a zero pivot is replaced by a row swap, and a column with no
/// nonzero pivot candidate makes the determinant zero.
pub fn bareiss_det<T: IntScalar>(m: &Matrix<T>) -> T {
    let n = m.dim();
    if n == 0 {
        return T::one();
    }
    let mut a: Vec<Vec<T>> = m.rows().take(n).map(<[T]>::to_vec).collect();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = num / prev.clone();
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}
