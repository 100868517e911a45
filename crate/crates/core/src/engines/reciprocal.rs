use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{random_symmetric, sym_index_pairs, Field, Matrix, PrimeField};
use crate::groebner::{
    buchberger_with, eliminate_with, hilbert, saturate_rabinowitsch, GbConfig, HilbertData, Ideal, QuotientDim,
};
use crate::spaces::LinearMatrixSpace;
use crate::sympoly::{MonomialOrder, MultiPoly, PolyMatrix, PolyRing, RingRef};

use super::critical::reduce_basis;

/// Which linear slice of the reciprocal variety is counted.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SliceSide {
    /// Whichever of the two below has fewer unknowns (concentration on ties).
    #[default]
    Auto,
    /// Coordinates `t` on the space: points `adj(M(t))` on a random
    /// codimension `dim - 1` linear space, one affine chart on `t`.
    Concentration,
    /// Coordinates `u` on a random affine space of covariance matrices of
    /// dimension `codim`: invertible `Sigma(u)` with `Sigma(u)^-1` in the space.
    Covariance,
}

impl SliceSide {
    pub fn resolve(self, space: &LinearMatrixSpace) -> Self {
        match self {
            SliceSide::Auto if space.codim() < space.dim() => SliceSide::Covariance,
            SliceSide::Auto => SliceSide::Concentration,
            other => other,
        }
    }
}

/// Degree of the reciprocal variety over GF(prime), counted on a random
/// linear slice drawn from `seed`.
pub fn reciprocal_degree_slice(space: &LinearMatrixSpace, prime: u64, seed: u64) -> Result<QuotientDim> {
    reciprocal_degree_slice_with(space, prime, seed, SliceSide::Auto, &GbConfig::default())
}

pub fn reciprocal_degree_slice_with(
    space: &LinearMatrixSpace,
    prime: u64,
    seed: u64,
    side: SliceSide,
    gb: &GbConfig,
) -> Result<QuotientDim> {
    if space.dim() == 0 {
        return Err(Error::NonRegular);
    }
    let field = PrimeField::new(prime)?;
    let n = space.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ideal = match side.resolve(space) {
        SliceSide::Concentration | SliceSide::Auto => {
            let b = reduce_basis(space.basis(), &field)?;
            let d = b.len();
            let ring = PolyRing::grevlex(field, PolyRing::<PrimeField>::indexed_names("t", d));
            let vars: Vec<usize> = (0..d).collect();
            let adj = PolyMatrix::affine(&ring, &Matrix::zeros(&field, n, n), &b, &vars)?.adjugate()?;
            let mut eqs = Vec::with_capacity(d);
            for _ in 0..d - 1 {
                eqs.push(adj.trace_against(&random_symmetric(&field, n, &mut rng, 0))?);
            }
            let chart = (0..d).fold(MultiPoly::constant(&ring, field.from_i64(-1)), |acc, k| {
                &acc + &MultiPoly::var(&ring, k).scale(&field.sample(&mut rng, 0))
            });
            eqs.push(chart);
            let guard = adj.trace_against(&random_symmetric(&field, n, &mut rng, 0))?;
            if guard.is_zero() {
                return Ok(QuotientDim::Finite(0));
            }
            saturate_rabinowitsch(&Ideal::new(&ring, eqs)?, &guard)?
        }
        SliceSide::Covariance => {
            let a = reduce_basis(space.annihilator().basis(), &field)?;
            let c = a.len();
            let ring = PolyRing::grevlex(field, PolyRing::<PrimeField>::indexed_names("u", c));
            let r0 = random_symmetric(&field, n, &mut rng, 0);
            let dirs: Vec<Matrix<PrimeField>> = (0..c).map(|_| random_symmetric(&field, n, &mut rng, 0)).collect();
            let vars: Vec<usize> = (0..c).collect();
            let sigma = PolyMatrix::affine(&ring, &r0, &dirs, &vars)?;
            let adj = sigma.adjugate()?;
            let eqs = a.iter().map(|ai| adj.trace_against(ai)).collect::<Result<Vec<_>>>()?;
            saturate_rabinowitsch(&Ideal::new(&ring, eqs)?, &sigma.det()?)?
        }
    };
    let basis = buchberger_with(&ideal, MonomialOrder::Grevlex, gb)?;
    Ok(basis.quotient_dimension())
}

/// Names `s11, s12, ...` of the coordinates of `S^n`, in coordinate order.
pub fn sigma_names(n: usize) -> Vec<String> {
    sym_index_pairs(n)
        .into_iter()
        .map(|(i, j)| if n < 10 { format!("s{}{}", i + 1, j + 1) } else { format!("s{}_{}", i + 1, j + 1) })
        .collect()
}

/// Ideal of the affine cone over the reciprocal variety, in the ring of
/// `S^n` coordinates (see [`sigma_names`]), by eliminating `t` from
/// `sigma - adj(M(t))`. With weight 1 on `t` and `n - 1` on `sigma` every
/// generator is weighted homogeneous, so the result is homogeneous.
pub fn reciprocal_ideal<F: Field>(space: &LinearMatrixSpace, field: &F, gb: &GbConfig) -> Result<Ideal<F>> {
    let n = space.n();
    let d = space.dim();
    let b: Vec<Matrix<F>> = space.basis_in(field).ok_or(Error::BadReduction(field.characteristic()))?;
    let pairs = sym_index_pairs(n);
    let m = pairs.len();
    let mut names = PolyRing::<F>::indexed_names("t", d);
    names.extend(sigma_names(n));
    let ring = PolyRing::grevlex(field.clone(), names);
    let vars: Vec<usize> = (0..d).collect();
    let adj = PolyMatrix::affine(&ring, &Matrix::zeros(field, n, n), &b, &vars)?.adjugate()?;
    let gens: Vec<MultiPoly<F>> =
        pairs.iter().enumerate().map(|(k, &(i, j))| &MultiPoly::var(&ring, d + k) - adj.get(i, j)).collect();
    let mut weights = vec![1u32; d];
    weights.extend(std::iter::repeat_n((n as u32 - 1).max(1), m));
    let elim = eliminate_with(&Ideal::new(&ring, gens)?, &vars, Some(weights), gb)?;
    let target = sigma_ring(field, n);
    let map: Vec<Option<usize>> = (0..m).map(|k| Some(d + k)).collect();
    let gens = elim.generators().iter().map(|g| g.remap(&target, &map)).collect::<Result<Vec<_>>>()?;
    Ideal::new(&target, gens)
}

pub fn sigma_ring<F: Field>(field: &F, n: usize) -> RingRef<F> {
    PolyRing::grevlex(field.clone(), sigma_names(n))
}

/// Degree of the reciprocal variety read off the Hilbert series of
/// [`reciprocal_ideal`].
pub fn reciprocal_degree_implicit<F: Field>(space: &LinearMatrixSpace, field: &F, gb: &GbConfig) -> Result<u64> {
    let ideal = reciprocal_ideal(space, field, gb)?;
    let basis = buchberger_with(&ideal, MonomialOrder::Grevlex, gb)?;
    Ok(hilbert(&basis.leading_monomials(), ideal.ring().nvars()).degree.max(0) as u64)
}

/// Hilbert data of the intersection of the reciprocal variety with the
/// annihilator, cut out by `tr(B_k Sigma) = 0` for a basis `B_k` of the space.
pub fn intersection_degree<F: Field>(space: &LinearMatrixSpace, field: &F, gb: &GbConfig) -> Result<HilbertData> {
    let n = space.n();
    let ideal = reciprocal_ideal(space, field, gb)?;
    let ring = ideal.ring().clone();
    let b: Vec<Matrix<F>> = space.basis_in(field).ok_or(Error::BadReduction(field.characteristic()))?;
    let two = field.from_i64(2);
    let linear: Vec<MultiPoly<F>> = b
        .iter()
        .map(|bk| {
            sym_index_pairs(n).into_iter().enumerate().fold(MultiPoly::zero(&ring), |acc, (k, (i, j))| {
                let w = if i == j { bk.get(i, j).clone() } else { field.mul(&two, bk.get(i, j)) };
                &acc + &MultiPoly::var(&ring, k).scale(&w)
            })
        })
        .collect();
    let full = ideal.add_generators(linear)?;
    let basis = buchberger_with(&full, MonomialOrder::Grevlex, gb)?;
    Ok(hilbert(&basis.leading_monomials(), ring.nvars()))
}
