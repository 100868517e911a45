//! Dense matrices over an exact field, with Gaussian elimination.

use std::fmt;

use rand::Rng;

use super::field::Field;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| self.field.render(self.get(r, c)))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Result of reducing a matrix to reduced row echelon form.
pub struct Echelon<F: Field> {
    pub matrix: Matrix<F>,
    /// Pivot column of each nonzero row, in row order.
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Self {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(field: &F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { field: field.clone(), rows, cols, data }
    }

    pub fn from_rows(field: &F, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Self {
            field: field.clone(),
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Uniformly random entries (see [`Field::sample`]).
    pub fn random<R: Rng + ?Sized>(field: &F, rows: usize, cols: usize, rng: &mut R, sample_box: u64) -> Self {
        Self::from_fn(field, rows, cols, |_, _| field.sample(rng, sample_box))
    }

    pub fn field(&self) -> &F {
        &self.field
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

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = f.mul(a, other.get(k, j));
                    let cur = f.add(out.get(i, j), &prod);
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |f, a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |f, a, b| f.sub(a, b))
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&F, &F::Elem, &F::Elem) -> F::Elem) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| op(&self.field, a, b))
            .collect();
        Ok(Self { field: self.field.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let data = self.data.iter().map(|a| self.field.mul(a, s)).collect();
        Self { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// Maps every entry into another field.
    pub fn try_map<G: Field>(&self, target: &G, f: impl Fn(&F::Elem) -> Option<G::Elem>) -> Option<Matrix<G>> {
        let data = self.data.iter().map(f).collect::<Option<Vec<_>>>()?;
        Some(Matrix { field: target.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn trace(&self) -> F::Elem {
        (0..self.rows.min(self.cols)).fold(self.field.zero(), |acc, i| self.field.add(&acc, self.get(i, i)))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form by exact Gauss-Jordan elimination.
    pub fn echelon(&self) -> Echelon<F> {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !f.is_zero(m.get(r, col))) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = f.inv(m.get(row, col));
            for c in col..m.cols {
                let v = f.mul(m.get(row, c), &inv);
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for c in col..m.cols {
                    let v = f.sub(m.get(r, c), &f.mul(&factor, m.get(row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of the right kernel `{x : self * x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let Echelon { matrix, pivots } = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![f.zero(); self.cols];
                v[fc] = f.one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(matrix.get(r, fc));
                }
                v
            })
            .collect()
    }

    /// Determinant by elimination with pivoting.
    pub fn det(&self) -> Result<F::Elem> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("determinant of non-square matrix".into()));
        }
        let f = &self.field;
        let mut m = self.clone();
        let n = m.rows;
        let mut det = f.one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !f.is_zero(m.get(r, col))) else {
                return Ok(f.zero());
            };
            if p != col {
                m.swap_rows(p, col);
                det = f.neg(&det);
            }
            let pivot = m.get(col, col).clone();
            det = f.mul(&det, &pivot);
            let inv = f.inv(&pivot);
            for r in col + 1..n {
                let factor = f.mul(m.get(r, col), &inv);
                if f.is_zero(&factor) {
                    continue;
                }
                for c in col..n {
                    let v = f.sub(m.get(r, c), &f.mul(&factor, m.get(col, c)));
                    m.set(r, c, v);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let f = &self.field;
        let aug = Self::from_fn(f, n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                f.one()
            } else {
                f.zero()
            }
        });
        let ech = aug.echelon();
        if ech.pivots.len() < n || ech.pivots[n - 1] != n - 1 {
            return Err(Error::SingularMatrix);
        }
        Ok(Self::from_fn(f, n, n, |r, c| ech.matrix.get(r, n + c).clone()))
    }

    /// Some solution of `self * x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch("right-hand side length".into()));
        }
        let f = &self.field;
        let aug = Self::from_fn(f, self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        let ech = aug.echelon();
        if ech.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![f.zero(); self.cols];
        for (r, &pc) in ech.pivots.iter().enumerate() {
            x[pc] = ech.matrix.get(r, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
            })
            .collect()
    }
}

/// `sum_{i,j} K[i][j] * S[i][j]`, which is `tr(K S)` for symmetric arguments.
pub fn trace_pair<F: Field>(k: &Matrix<F>, s: &Matrix<F>) -> Result<F::Elem> {
    if k.rows != s.rows || k.cols != s.cols || !k.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "trace pairing of {}x{} with {}x{}",
            k.rows, k.cols, s.rows, s.cols
        )));
    }
    let f = &k.field;
    Ok(k.data
        .iter()
        .zip(&s.data)
        .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b))))
}

/// Random symmetric matrix with independent uniform entries on and above
/// the diagonal.
pub fn random_symmetric<F: Field, R: Rng + ?Sized>(field: &F, n: usize, rng: &mut R, sample_box: u64) -> Matrix<F> {
    let mut m = Matrix::zeros(field, n, n);
    for i in 0..n {
        for j in i..n {
            let v = field.sample(rng, sample_box);
            m.set(i, j, v.clone());
            m.set(j, i, v);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::field::{rational_from_i64, PrimeField, Rationals};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(rows: &[&[i64]]) -> Matrix<Rationals> {
        Matrix::from_rows(
            &Rationals,
            rows.iter().map(|r| r.iter().map(|&v| rational_from_i64(v)).collect()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(&Rationals, 3).rank(), 3);
        assert_eq!(q(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]).rank(), 2);
        assert_eq!(Matrix::zeros(&Rationals, 2, 2).rank(), 0);
    }

    #[test]
    fn kernel_is_annihilated() {
        let m = q(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let ker = m.kernel();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(m.apply(v).iter().all(|x| *x == rational_from_i64(0)));
        }
    }

    #[test]
    fn det_and_inverse() {
        let m = q(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(m.det().unwrap(), rational_from_i64(18));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(&Rationals, 3));
        assert_eq!(q(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::SingularMatrix));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = q(&[&[1, 1], &[2, 2]]);
        let b = vec![rational_from_i64(3), rational_from_i64(6)];
        let x = m.solve(&b).unwrap().unwrap();
        assert_eq!(m.apply(&x), b);
        let bad = vec![rational_from_i64(3), rational_from_i64(7)];
        assert_eq!(m.solve(&bad).unwrap(), None);
    }

    #[test]
    fn trace_pair_examples() {
        let i3 = Matrix::identity(&Rationals, 3);
        assert_eq!(trace_pair(&i3, &i3).unwrap(), rational_from_i64(3));
        let e12 = q(&[&[0, 1], &[1, 0]]);
        assert_eq!(trace_pair(&e12, &e12).unwrap(), rational_from_i64(2));
        let a = q(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
        let b = q(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 0]]);
        assert_eq!(trace_pair(&a, &b).unwrap(), rational_from_i64(0));
        assert!(trace_pair(&a, &e12).is_err());
    }

    #[test]
    fn random_symmetric_is_reproducible() {
        let f = PrimeField::new(7).unwrap();
        let a = random_symmetric(&f, 2, &mut ChaCha8Rng::seed_from_u64(5), 0);
        let b = random_symmetric(&f, 2, &mut ChaCha8Rng::seed_from_u64(5), 0);
        assert_eq!(a, b);
        assert!(a.is_symmetric());
        let one = random_symmetric(&Rationals, 1, &mut ChaCha8Rng::seed_from_u64(9), 10_000);
        let v = one.get(0, 0);
        assert!(*v >= rational_from_i64(-10_000) && *v <= rational_from_i64(10_000));
    }

    #[test]
    fn schwartz_zippel_det_bound() {
        // det of a random 3x3 symmetric matrix is a nonzero cubic in the
        // entries, so it vanishes with probability at most 3/p.
        let f = PrimeField::new(1_000_003).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let trials = 2000;
        let zeros = (0..trials)
            .filter(|_| f.is_zero(&random_symmetric(&f, 3, &mut rng, 0).det().unwrap()))
            .count();
        let bound = 3.0 / 1_000_003.0;
        assert!((zeros as f64) / (trials as f64) <= bound + 0.002);
    }
}
