use std::fmt;
use std::ops::Mul;

use crate::coeff::{pretty, Coeff, Rational};
use crate::combi::{partitions, Partition};
use crate::error::{Error, Result};

/// Dense matrix over Q(q) with partition labels. Entry `[a, b]` is the
/// coefficient of the column object `b` in the row object `a`.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: Vec<Partition>,
    cols: Vec<Partition>,
    entries: Vec<Coeff>,
}

impl QMatrix {
    pub fn new(
        rows: Vec<Partition>,
        cols: Vec<Partition>,
        entries: Vec<Vec<Coeff>>,
    ) -> Result<Self> {
        if entries.len() != rows.len() || entries.iter().any(|r| r.len() != cols.len()) {
            return Err(Error::InvalidArgument(
                "matrix shape does not match its labels".into(),
            ));
        }
        Ok(Self {
            rows,
            cols,
            entries: entries.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(
        rows: Vec<Partition>,
        cols: Vec<Partition>,
        mut f: impl FnMut(usize, usize) -> Coeff,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for i in 0..rows.len() {
            for j in 0..cols.len() {
                entries.push(f(i, j));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    /// Square matrix indexed by `partitions(n)` on both sides.
    pub fn square(n: usize, f: impl FnMut(usize, usize) -> Coeff) -> Self {
        let parts = partitions(n);
        Self::from_fn(parts.clone(), parts, f)
    }

    pub fn identity(n: usize) -> Self {
        Self::square(n, |i, j| if i == j { Coeff::one() } else { Coeff::zero() })
    }

    pub fn diagonal(n: usize, mut f: impl FnMut(&Partition) -> Coeff) -> Self {
        let parts = partitions(n);
        let diag: Vec<Coeff> = parts.iter().map(&mut f).collect();
        Self::square(n, |i, j| {
            if i == j {
                diag[i].clone()
            } else {
                Coeff::zero()
            }
        })
    }

    pub fn rows(&self) -> &[Partition] {
        &self.rows
    }

    pub fn cols(&self) -> &[Partition] {
        &self.cols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Coeff {
        &self.entries[i * self.cols.len() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Coeff) {
        let c = self.cols.len();
        self.entries[i * c + j] = v;
    }

    /// Entry by labels.
    pub fn at(&self, row: &Partition, col: &Partition) -> Option<&Coeff> {
        let i = self.rows.iter().position(|p| p == row)?;
        let j = self.cols.iter().position(|p| p == col)?;
        Some(self.get(i, j))
    }

    pub fn row(&self, i: usize) -> &[Coeff] {
        let c = self.cols.len();
        &self.entries[i * c..(i + 1) * c]
    }

    pub fn entries(&self) -> Vec<Vec<Coeff>> {
        (0..self.nrows()).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols.clone(), self.rows.clone(), |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn map(&self, mut f: impl FnMut(&Coeff) -> Coeff) -> Self {
        Self {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries: self.entries.iter().map(&mut f).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        self.map(|x| x * c)
    }

    pub fn try_mul(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.ncols() != other.nrows() {
            return Err(Error::InvalidArgument("inner dimensions differ".into()));
        }
        Ok(Self::from_fn(
            self.rows.clone(),
            other.cols.clone(),
            |i, j| {
                let mut acc = Coeff::zero();
                for k in 0..self.ncols() {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            },
        ))
    }

    /// Exact inverse by Gauss-Jordan elimination; labels are swapped.
    pub fn inverse(&self) -> Result<QMatrix> {
        let n = self.nrows();
        if n != self.ncols() {
            return Err(Error::InvalidArgument(
                "inverse of a non-square matrix".into(),
            ));
        }
        let mut a = self.entries();
        let mut inv: Vec<Vec<Coeff>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Coeff::one() } else { Coeff::zero() })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(Error::Singular)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].recip()?;
            if !p.is_one() {
                for x in a[col].iter_mut() {
                    *x = &*x * &p;
                }
                for x in inv[col].iter_mut() {
                    *x = &*x * &p;
                }
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for k in 0..n {
                    if !a[col][k].is_zero() {
                        let t = &f * &a[col][k];
                        a[r][k] -= &t;
                    }
                    if !inv[col][k].is_zero() {
                        let t = &f * &inv[col][k];
                        inv[r][k] -= &t;
                    }
                }
            }
        }
        Ok(QMatrix {
            rows: self.cols.clone(),
            cols: self.rows.clone(),
            entries: inv.into_iter().flatten().collect(),
        })
    }

    /// Exact specialization at `q = q0`, as a matrix of constants.
    pub fn evaluate(&self, q0: &Rational) -> Result<QMatrix> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for x in &self.entries {
            entries.push(Coeff::from_rational(x.evaluate(q0)?));
        }
        Ok(Self {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.nrows() == self.ncols()
            && (0..self.nrows()).all(|i| {
                (0..self.ncols()).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// First cell where the two matrices differ.
    pub fn first_difference(&self, other: &QMatrix) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((0, 0));
        }
        (0..self.nrows())
            .flat_map(|i| (0..self.ncols()).map(move |j| (i, j)))
            .find(|&(i, j)| self.get(i, j) != other.get(i, j))
    }

    /// Entries rendered as strings, canonical or pretty.
    pub fn strings(&self, pretty_form: bool) -> Vec<Vec<String>> {
        (0..self.nrows())
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| {
                        if pretty_form {
                            pretty(x)
                        } else {
                            x.to_string()
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

impl Mul for &QMatrix {
    type Output = QMatrix;
    /// Panics on mismatched shapes; see [`QMatrix::try_mul`].
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        self.try_mul(rhs).expect("matrix shapes")
    }
}

impl Mul for QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: QMatrix) -> QMatrix {
        &self * &rhs
    }
}

impl fmt::Display for QMatrix {
    /// Aligned text table with pretty entries.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells = self.strings(true);
        let label_w = self
            .rows
            .iter()
            .map(|p| p.to_string().len())
            .max()
            .unwrap_or(0);
        let mut widths: Vec<usize> = self.cols.iter().map(|p| p.to_string().len()).collect();
        for row in &cells {
            for (j, s) in row.iter().enumerate() {
                widths[j] = widths[j].max(s.len());
            }
        }
        write!(f, "{:label_w$}", "")?;
        for (j, c) in self.cols.iter().enumerate() {
            write!(f, "  {:>w$}", c.to_string(), w = widths[j])?;
        }
        writeln!(f)?;
        for (i, row) in cells.iter().enumerate() {
            write!(f, "{:label_w$}", self.rows[i].to_string())?;
            for (j, s) in row.iter().enumerate() {
                write!(f, "  {:>w$}", s, w = widths[j])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_q_matrix() {
        let m = QMatrix::square(2, |i, j| match (i, j) {
            (0, 0) => Coeff::big_q(),
            (0, 1) => Coeff::from_int(1),
            (1, 0) => Coeff::qint(2),
            _ => Coeff::q_pow(3),
        });
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert!((&inv * &m).is_identity());
        let singular = QMatrix::square(2, |_, _| Coeff::one());
        assert!(matches!(singular.inverse(), Err(Error::Singular)));
    }
}
