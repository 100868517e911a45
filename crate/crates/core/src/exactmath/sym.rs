//! Exact symmetric matrices with rational entries.

use std::fmt;

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::field::{format_rational, parse_rational, rational_from_i64, Field, Rational, Rationals};
use super::matrix::{random_symmetric, trace_pair, Matrix};
use crate::error::{Error, Result};

/// A symmetric `n x n` matrix over the rationals.
#[derive(Clone, PartialEq)]
pub struct SymMatrix {
    inner: Matrix<Rationals>,
}

impl fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymMatrix{:?}", self.to_strings())
    }
}

impl SymMatrix {
    pub fn new(inner: Matrix<Rationals>) -> Result<Self> {
        if !inner.is_symmetric() {
            return Err(Error::InvalidInput("matrix is not symmetric".into()));
        }
        Ok(Self { inner })
    }

    pub fn zero(n: usize) -> Self {
        Self { inner: Matrix::zeros(&Rationals, n, n) }
    }

    pub fn identity(n: usize) -> Self {
        Self { inner: Matrix::identity(&Rationals, n) }
    }

    /// `E_ii` when `i == j`, otherwise `E_ij + E_ji` (0-indexed).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Matrix::zeros(&Rationals, n, n);
        m.set(i, j, rational_from_i64(1));
        m.set(j, i, rational_from_i64(1));
        Self { inner: m }
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        let n = diag.len();
        let mut m = Matrix::zeros(&Rationals, n, n);
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        Self { inner: m }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        let rows = rows.iter().map(|r| r.iter().map(|&v| rational_from_i64(v)).collect()).collect();
        Self::new(Matrix::from_rows(&Rationals, rows)?)
    }

    pub fn from_string_rows(rows: &[Vec<String>]) -> Result<Self> {
        let n = rows.len();
        let parsed = rows
            .iter()
            .map(|r| {
                if r.len() != n {
                    return Err(Error::DimensionMismatch(format!("row of length {} in {n}x{n} matrix", r.len())));
                }
                r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(Matrix::from_rows(&Rationals, parsed)?)
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.n())
            .map(|r| (0..self.n()).map(|c| format_rational(self.get(r, c))).collect())
            .collect()
    }

    /// Random symmetric matrix with integer entries in `[-sample_box, sample_box]`.
    pub fn random(n: usize, seed: u64, sample_box: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self { inner: random_symmetric(&Rationals, n, &mut rng, sample_box) }
    }

    pub fn n(&self) -> usize {
        self.inner.rows()
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        self.inner.get(i, j)
    }

    pub fn as_matrix(&self) -> &Matrix<Rationals> {
        &self.inner
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    pub fn is_diagonal(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (0..n).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn rank(&self) -> usize {
        self.inner.rank()
    }

    pub fn det(&self) -> Rational {
        self.inner.det().expect("square")
    }

    pub fn trace_pair(&self, other: &SymMatrix) -> Result<Rational> {
        trace_pair(&self.inner, &other.inner)
    }

    pub fn add(&self, other: &SymMatrix) -> Result<SymMatrix> {
        Ok(Self { inner: self.inner.add(&other.inner)? })
    }

    pub fn scale(&self, s: &Rational) -> SymMatrix {
        Self { inner: self.inner.scale(s) }
    }

    /// `G^T * self * G`.
    pub fn congruence(&self, g: &Matrix<Rationals>) -> Result<SymMatrix> {
        let m = g.transpose().mul(&self.inner)?.mul(g)?;
        Self::new(m)
    }

    /// Image in another field; `None` if some denominator is not invertible.
    pub fn reduce<F: Field>(&self, field: &F) -> Option<Matrix<F>> {
        self.inner.try_map(field, |q| field.from_rational(q))
    }

    /// Coordinates `(m_11, ..., m_nn, m_12, m_13, ..., m_{n-1,n})`.
    pub fn coordinates(&self) -> Vec<Rational> {
        sym_index_pairs(self.n()).into_iter().map(|(i, j)| self.get(i, j).clone()).collect()
    }

    /// Inverse of [`SymMatrix::coordinates`].
    pub fn from_coordinates(n: usize, coords: &[Rational]) -> Self {
        let mut m = Matrix::zeros(&Rationals, n, n);
        for ((i, j), v) in sym_index_pairs(n).into_iter().zip(coords) {
            m.set(i, j, v.clone());
            m.set(j, i, v.clone());
        }
        Self { inner: m }
    }
}

/// Index pairs `(i, j)`, `i <= j`, in coordinate order: the diagonal first,
/// then the strict upper triangle row by row.
pub fn sym_index_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = (0..n).map(|i| (i, i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

/// `n(n+1)/2`.
pub fn sym_dim(n: usize) -> usize {
    n * (n + 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_and_coordinates_round_trip() {
        let e = SymMatrix::unit(3, 0, 2);
        assert_eq!(e.get(2, 0), &rational_from_i64(1));
        let back = SymMatrix::from_coordinates(3, &e.coordinates());
        assert_eq!(back, e);
        assert_eq!(sym_index_pairs(3).len(), sym_dim(3));
    }

    #[test]
    fn rejects_non_symmetric() {
        let m = Matrix::from_rows(&Rationals, vec![
            vec![rational_from_i64(1), rational_from_i64(2)],
            vec![rational_from_i64(3), rational_from_i64(4)],
        ])
        .unwrap();
        assert!(SymMatrix::new(m).is_err());
    }

    #[test]
    fn congruence_by_permutation() {
        let a = SymMatrix::from_i64_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]).unwrap();
        let swap = Matrix::from_rows(&Rationals, vec![
            vec![rational_from_i64(0), rational_from_i64(0), rational_from_i64(1)],
            vec![rational_from_i64(0), rational_from_i64(1), rational_from_i64(0)],
            vec![rational_from_i64(1), rational_from_i64(0), rational_from_i64(0)],
        ])
        .unwrap();
        let b = a.congruence(&swap).unwrap();
        assert_eq!(b, SymMatrix::from_i64_rows(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap());
    }
}
