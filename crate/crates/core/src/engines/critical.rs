use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{random_symmetric, trace_pair, Matrix, PrimeField, SymMatrix};
use crate::groebner::{buchberger_with, saturate_rabinowitsch, GbConfig, Ideal, QuotientDim};
use crate::spaces::LinearMatrixSpace;
use crate::sympoly::{MonomialOrder, MultiPoly, PolyMatrix, PolyRing};

/// Coordinates in which the critical equations are written.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parametrization {
    /// Whichever of the two below has fewer unknowns (annihilator on ties).
    #[default]
    Auto,
    /// `Sigma = S + sum t_i A_i` over a basis of the annihilator; critical
    /// points of `det(Sigma)` with `det(Sigma) != 0`.
    Annihilator,
    /// `K = sum u_k B_k` over a basis of the model; the likelihood
    /// equations cleared of denominators, with `det(K) != 0`.
    Model,
}

impl Parametrization {
    pub fn resolve(self, space: &LinearMatrixSpace) -> Self {
        match self {
            Parametrization::Auto if space.dim() < space.codim() => Parametrization::Model,
            Parametrization::Auto => Parametrization::Annihilator,
            other => other,
        }
    }
}

/// Basis matrices reduced mod p; fails when a denominator vanishes or the
/// reduction loses rank.
pub(crate) fn reduce_basis(basis: &[SymMatrix], field: &PrimeField) -> Result<Vec<Matrix<PrimeField>>> {
    let reduced: Vec<Matrix<PrimeField>> = basis
        .iter()
        .map(|b| b.reduce(field))
        .collect::<Option<_>>()
        .ok_or(Error::BadReduction(field.modulus()))?;
    if !basis.is_empty() {
        let n = basis[0].n();
        let pairs = crate::exactmath::sym_index_pairs(n);
        let coords = Matrix::from_fn(field, reduced.len(), pairs.len(), |r, c| *reduced[r].get(pairs[c].0, pairs[c].1));
        if coords.rank() != basis.len() {
            return Err(Error::BadReduction(field.modulus()));
        }
    }
    Ok(reduced)
}

/// The saturated critical ideal over GF(prime) for random data drawn from
/// `seed`. Its last variable is the saturation variable.
pub fn critical_ideal(space: &LinearMatrixSpace, prime: u64, seed: u64, param: Parametrization) -> Result<Ideal<PrimeField>> {
    let field = PrimeField::new(prime)?;
    let n = space.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = random_symmetric(&field, n, &mut rng, 0);
    match param.resolve(space) {
        Parametrization::Annihilator | Parametrization::Auto => {
            let a = reduce_basis(space.annihilator().basis(), &field)?;
            let c = a.len();
            let ring = PolyRing::grevlex(field, PolyRing::<PrimeField>::indexed_names("t", c));
            let vars: Vec<usize> = (0..c).collect();
            let ell = PolyMatrix::affine(&ring, &s, &a, &vars)?.det()?;
            let eqs = (0..c).map(|i| ell.derivative(i)).collect::<Result<Vec<_>>>()?;
            saturate_rabinowitsch(&Ideal::new(&ring, eqs)?, &ell)
        }
        Parametrization::Model => {
            let b = reduce_basis(space.basis(), &field)?;
            let d = b.len();
            let ring = PolyRing::grevlex(field, PolyRing::<PrimeField>::indexed_names("u", d));
            let vars: Vec<usize> = (0..d).collect();
            let zero = Matrix::zeros(&field, n, n);
            let det = PolyMatrix::affine(&ring, &zero, &b, &vars)?.det()?;
            let eqs = (0..d)
                .map(|k| {
                    let sk = trace_pair(&b[k], &s)?;
                    Ok(&det.derivative(k)? - &det.scale(&sk))
                })
                .collect::<Result<Vec<MultiPoly<PrimeField>>>>()?;
            saturate_rabinowitsch(&Ideal::new(&ring, eqs)?, &det)
        }
    }
}

/// Number of critical points of the likelihood over GF(prime) for random
/// data from `seed`. Equals the ML degree for generic data.
pub fn ml_degree_critical(space: &LinearMatrixSpace, prime: u64, seed: u64) -> Result<QuotientDim> {
    ml_degree_critical_with(space, prime, seed, Parametrization::Auto, &GbConfig::default())
}

pub fn ml_degree_critical_with(
    space: &LinearMatrixSpace,
    prime: u64,
    seed: u64,
    param: Parametrization,
    gb: &GbConfig,
) -> Result<QuotientDim> {
    if space.codim() == 0 {
        return Ok(QuotientDim::Finite(1));
    }
    let ideal = critical_ideal(space, prime, seed, param)?;
    let basis = buchberger_with(&ideal, MonomialOrder::Grevlex, gb)?;
    Ok(basis.quotient_dimension())
}

/// ML degree of the hyperplane `{K : tr(A K) = 0}`: `rank(A) - 1`.
pub fn hyperplane_mld(a: &SymMatrix) -> Result<u64> {
    if a.is_zero() {
        return Err(Error::InvalidInput("the normal matrix of a hyperplane must be nonzero".into()));
    }
    Ok(a.rank() as u64 - 1)
}
