//! Square matrices with polynomial entries: determinant and adjugate.

use super::poly::{same_ring, MultiPoly};
use super::ring::RingRef;
use crate::error::{Error, Result};
use crate::exactmath::{Field, Matrix};

/// Largest dimension accepted by the symbolic routines unless overridden.
pub const DEFAULT_SYMBOLIC_CAP: usize = 8;

#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix<F: Field> {
    ring: RingRef<F>,
    n: usize,
    entries: Vec<MultiPoly<F>>,
}

impl<F: Field> PolyMatrix<F> {
    pub fn new(ring: &RingRef<F>, rows: Vec<Vec<MultiPoly<F>>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch("polynomial matrix must be square".into()));
            }
            for p in row {
                if !same_ring(p.ring(), ring) {
                    return Err(Error::RingMismatch);
                }
                entries.push(p);
            }
        }
        Ok(Self { ring: ring.clone(), n, entries })
    }

    pub fn from_fn(ring: &RingRef<F>, n: usize, mut f: impl FnMut(usize, usize) -> MultiPoly<F>) -> Self {
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self { ring: ring.clone(), n, entries }
    }

    /// `base + sum_i x_i * coeffs[i]`, where `x_i` is ring variable `vars[i]`.
    pub fn affine(ring: &RingRef<F>, base: &Matrix<F>, coeffs: &[Matrix<F>], vars: &[usize]) -> Result<Self> {
        let n = base.rows();
        if coeffs.len() != vars.len() || coeffs.iter().any(|c| c.rows() != n || c.cols() != n) {
            return Err(Error::DimensionMismatch("affine matrix pencil".into()));
        }
        let mut out = Self::from_fn(ring, n, |i, j| MultiPoly::constant(ring, base.get(i, j).clone()));
        for (c, &v) in coeffs.iter().zip(vars) {
            let x = MultiPoly::var(ring, v);
            for i in 0..n {
                for j in 0..n {
                    let a = c.get(i, j);
                    if !ring.field().is_zero(a) {
                        let k = i * n + j;
                        out.entries[k] = &out.entries[k] + &x.scale(a);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly<F> {
        &self.entries[i * self.n + j]
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch("polynomial matrix product".into()));
        }
        let n = self.n;
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = MultiPoly::zero(&self.ring);
                for k in 0..n {
                    acc = &acc + &(self.get(i, k) * other.get(k, j));
                }
                out.push(acc);
            }
        }
        Ok(Self { ring: self.ring.clone(), n, entries: out })
    }

    /// Determinant by cofactor expansion, memoized over column subsets.
    pub fn det(&self) -> Result<MultiPoly<F>> {
        self.det_capped(DEFAULT_SYMBOLIC_CAP)
    }

    pub fn det_capped(&self, cap: usize) -> Result<MultiPoly<F>> {
        if self.n > cap {
            return Err(Error::CapExceeded { size: self.n, cap });
        }
        let idx: Vec<usize> = (0..self.n).collect();
        Ok(self.minor(&idx, &idx))
    }

    /// Adjugate (transposed cofactor matrix); `adj(M) * M = det(M) * I`.
    pub fn adjugate(&self) -> Result<Self> {
        self.adjugate_capped(DEFAULT_SYMBOLIC_CAP)
    }

    pub fn adjugate_capped(&self, cap: usize) -> Result<Self> {
        if self.n > cap {
            return Err(Error::CapExceeded { size: self.n, cap });
        }
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                // adj[i][j] = (-1)^(i+j) * det(M without row j and column i)
                let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
                let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
                let m = self.minor(&rows, &cols);
                entries.push(if (i + j) % 2 == 0 { m } else { m.neg() });
            }
        }
        Ok(Self { ring: self.ring.clone(), n, entries })
    }

    /// Determinant of the submatrix on the given rows and columns.
    fn minor(&self, rows: &[usize], cols: &[usize]) -> MultiPoly<F> {
        let k = rows.len();
        if k == 0 {
            return MultiPoly::one(&self.ring);
        }
        // table[T] = det of the first |T| selected rows against columns T
        let mut table: Vec<Option<MultiPoly<F>>> = vec![None; 1 << k];
        table[0] = Some(MultiPoly::one(&self.ring));
        let mut masks: Vec<usize> = (1..1usize << k).collect();
        masks.sort_by_key(|m| m.count_ones());
        for mask in masks {
            let row = rows[mask.count_ones() as usize - 1];
            let mut acc = MultiPoly::zero(&self.ring);
            for j in 0..k {
                if mask & (1 << j) == 0 {
                    continue;
                }
                let entry = self.get(row, cols[j]);
                if entry.is_zero() {
                    continue;
                }
                let rest = table[mask & !(1 << j)].as_ref().expect("computed earlier");
                if rest.is_zero() {
                    continue;
                }
                let term = entry * rest;
                let above = (mask >> (j + 1)).count_ones();
                acc = if above % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            table[mask] = Some(acc);
        }
        table.pop().flatten().expect("full mask")
    }

    /// `tr(C * self)` for a constant matrix `C`.
    pub fn trace_against(&self, c: &Matrix<F>) -> Result<MultiPoly<F>> {
        if c.rows() != self.n || c.cols() != self.n {
            return Err(Error::DimensionMismatch("trace pairing".into()));
        }
        let f = self.ring.field();
        let mut acc = MultiPoly::zero(&self.ring);
        for i in 0..self.n {
            for j in 0..self.n {
                let a = c.get(i, j);
                if !f.is_zero(a) {
                    acc = &acc + &self.get(j, i).scale(a);
                }
            }
        }
        Ok(acc)
    }
}

/// Symbolic determinant of a square matrix of polynomials.
pub fn det_symbolic<F: Field>(m: &PolyMatrix<F>) -> Result<MultiPoly<F>> {
    m.det()
}

/// Symbolic adjugate of a square matrix of polynomials.
pub fn adjugate_symbolic<F: Field>(m: &PolyMatrix<F>) -> Result<PolyMatrix<F>> {
    m.adjugate()
}
