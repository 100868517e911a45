use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{rational_from_i64, sym_dim, sym_index_pairs, Field, Matrix, Rational, Rationals, SymMatrix};
use crate::sympoly::{PolyMatrix, PolyRing};

/// Whether a space is meant as a model (concentration matrices) or as the
/// annihilator of one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Model,
    Annihilator,
}

impl Role {
    pub fn dual(self) -> Self {
        match self {
            Role::Model => Role::Annihilator,
            Role::Annihilator => Role::Model,
        }
    }
}

/// Largest `n` for which the regularity check falls back to a symbolic
/// determinant after all random evaluations vanish.
pub const SYMBOLIC_REGULARITY_MAX_N: usize = 5;

/// Sample box for random rational combinations.
const COMBINATION_BOX: u64 = 1_000;

/// A linear subspace of `n x n` symmetric matrices with a linearly
/// independent basis. The zero space is allowed (it arises as the
/// annihilator of the full space).
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMatrixSpace {
    n: usize,
    basis: Vec<SymMatrix>,
    role: Role,
}

impl LinearMatrixSpace {
    pub fn new(n: usize, basis: Vec<SymMatrix>, role: Role) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("matrix size must be positive".into()));
        }
        if let Some(b) = basis.iter().find(|b| b.n() != n) {
            return Err(Error::DimensionMismatch(format!("basis matrix of size {} in S^{n}", b.n())));
        }
        let space = Self { n, basis, role };
        if space.coordinate_matrix().rank() != space.basis.len() {
            return Err(Error::InvalidInput("basis matrices are linearly dependent".into()));
        }
        Ok(space)
    }

    /// Span of arbitrary matrices; a basis is extracted by row reduction.
    pub fn span(n: usize, spanning: Vec<SymMatrix>, role: Role) -> Result<Self> {
        if let Some(b) = spanning.iter().find(|b| b.n() != n) {
            return Err(Error::DimensionMismatch(format!("matrix of size {} in S^{n}", b.n())));
        }
        let mut basis: Vec<SymMatrix> = Vec::new();
        for m in spanning {
            let mut trial = basis.clone();
            trial.push(m.clone());
            if coords_matrix(n, &trial).rank() == trial.len() {
                basis.push(m);
            }
        }
        Self::new(n, basis, role)
    }

    pub fn full(n: usize) -> Self {
        let basis = sym_index_pairs(n).into_iter().map(|(i, j)| SymMatrix::unit(n, i, j)).collect();
        Self { n, basis, role: Role::Model }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn codim(&self) -> usize {
        sym_dim(self.n) - self.dim()
    }

    pub fn basis(&self) -> &[SymMatrix] {
        &self.basis
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn with_role(&self, role: Role) -> Self {
        Self { role, ..self.clone() }
    }

    pub fn is_diagonal(&self) -> bool {
        self.basis.iter().all(|b| b.is_diagonal())
    }

    /// Rows are the coordinate vectors of the basis matrices.
    pub fn coordinate_matrix(&self) -> Matrix<Rationals> {
        coords_matrix(self.n, &self.basis)
    }

    pub fn contains(&self, m: &SymMatrix) -> bool {
        if m.n() != self.n {
            return false;
        }
        let mut all = self.basis.clone();
        all.push(m.clone());
        coords_matrix(self.n, &all).rank() == self.dim()
    }

    pub fn same_span(&self, other: &Self) -> bool {
        self.n == other.n && self.dim() == other.dim() && other.basis.iter().all(|b| self.contains(b))
    }

    /// `sum_k coeffs[k] * basis[k]`.
    pub fn member(&self, coeffs: &[Rational]) -> Result<SymMatrix> {
        if coeffs.len() != self.dim() {
            return Err(Error::DimensionMismatch("coefficient count differs from dimension".into()));
        }
        let mut acc = SymMatrix::zero(self.n);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                acc = acc.add(&b.scale(c))?;
            }
        }
        Ok(acc)
    }

    /// The annihilator under the trace pairing `<K, S> = tr(K S)`, with the
    /// dual role. Pairing in coordinates weighs off-diagonal slots by 2.
    pub fn annihilator(&self) -> Self {
        let n = self.n;
        let pairs = sym_index_pairs(n);
        let weighted = Matrix::from_fn(&Rationals, self.dim(), pairs.len(), |r, c| {
            let (i, j) = pairs[c];
            let v = self.basis[r].get(i, j).clone();
            if i == j {
                v
            } else {
                v * rational_from_i64(2)
            }
        });
        let basis = weighted
            .kernel()
            .into_iter()
            .map(|v| SymMatrix::from_coordinates(n, &clear_denominators(v)))
            .collect();
        Self { n, basis, role: self.role.dual() }
    }

    /// Congruence image `{G^T M G : M in L}`.
    pub fn congruence_transform(&self, g: &Matrix<Rationals>) -> Result<Self> {
        if g.rows() != self.n || g.cols() != self.n {
            return Err(Error::DimensionMismatch("congruence matrix size".into()));
        }
        if g.det()?.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let basis = self.basis.iter().map(|b| b.congruence(g)).collect::<Result<Vec<_>>>()?;
        Ok(Self { n: self.n, basis, role: self.role })
    }

    /// The same span under a random invertible change of basis.
    pub fn recombine(&self, seed: u64) -> Self {
        let d = self.dim();
        let t = random_invertible(d, seed, 5);
        let basis = (0..d)
            .map(|r| {
                let coeffs: Vec<Rational> = (0..d).map(|c| t.get(r, c).clone()).collect();
                self.member(&coeffs).expect("dimension matches")
            })
            .collect();
        Self { basis, ..self.clone() }
    }

    /// Basis matrices reduced into `field`; `None` if a denominator vanishes.
    pub fn basis_in<F: Field>(&self, field: &F) -> Option<Vec<Matrix<F>>> {
        self.basis.iter().map(|b| b.reduce(field)).collect()
    }

    /// True iff some member is invertible. Random rational combinations are
    /// tried first; if all are singular and `n` is small, the determinant of
    /// the generic member is expanded symbolically.
    pub fn is_regular(&self, trials: usize, seed: u64) -> bool {
        if self.dim() == 0 {
            return false;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..trials.max(1) {
            let coeffs: Vec<Rational> = (0..self.dim()).map(|_| Rationals.sample(&mut rng, COMBINATION_BOX)).collect();
            if !self.member(&coeffs).expect("dimension matches").det().is_zero() {
                return true;
            }
        }
        if self.n <= SYMBOLIC_REGULARITY_MAX_N {
            let ring = PolyRing::grevlex(Rationals, PolyRing::<Rationals>::indexed_names("t", self.dim()));
            let mats: Vec<Matrix<Rationals>> = self.basis.iter().map(|b| b.as_matrix().clone()).collect();
            let vars: Vec<usize> = (0..self.dim()).collect();
            let zero = Matrix::zeros(&Rationals, self.n, self.n);
            let generic = PolyMatrix::affine(&ring, &zero, &mats, &vars).expect("sizes agree");
            return !generic.det().expect("within cap").is_zero();
        }
        false
    }
}

fn coords_matrix(n: usize, mats: &[SymMatrix]) -> Matrix<Rationals> {
    let cols = sym_dim(n);
    let rows: Vec<Vec<Rational>> = mats.iter().map(|m| m.coordinates()).collect();
    Matrix::from_fn(&Rationals, rows.len(), cols, |r, c| rows[r][c].clone())
}

/// Scales a rational vector to a primitive integer vector.
fn clear_denominators(v: Vec<Rational>) -> Vec<Rational> {
    use num_integer::Integer;
    let lcm = v.iter().fold(num_bigint::BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let scaled: Vec<num_bigint::BigInt> = v.iter().map(|q| (q * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let gcd = scaled.iter().fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() {
        return v;
    }
    scaled.into_iter().map(|x| Rational::from_integer(x / &gcd)).collect()
}

/// Random invertible integer matrix with entries in `[-entry_box, entry_box]`.
pub fn random_invertible(n: usize, seed: u64, entry_box: i64) -> Matrix<Rationals> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let m = Matrix::from_fn(&Rationals, n, n, |_, _| rational_from_i64(rng.gen_range(-entry_box..=entry_box)));
        if !m.det().expect("square").is_zero() {
            return m;
        }
    }
}
