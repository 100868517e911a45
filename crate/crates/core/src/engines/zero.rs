use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactmath::{Field, Matrix, PrimeField, Rational, Rationals, SymMatrix};
use crate::spaces::LinearMatrixSpace;
use crate::sympoly::{Monomial, PolyMatrix, PolyRing};

use super::critical::reduce_basis;
use super::report::ZeroTestReport;

/// Randomized test for ML degree zero. With `A_i` a basis of the annihilator
/// and `K` a random member of the space, the matrix
/// `M_ij = tr(A_i K A_j K)` is singular for every `K` exactly when the ML
/// degree vanishes. `det M` is evaluated at `trials` random points.
pub fn zero_test(space: &LinearMatrixSpace, prime: u64, trials: usize, seed: u64) -> Result<ZeroTestReport> {
    if !space.is_regular(8, seed) {
        return Err(Error::NonRegular);
    }
    let field = PrimeField::new(prime)?;
    let a = reduce_basis(space.annihilator().basis(), &field)?;
    let b = reduce_basis(space.basis(), &field)?;
    let n = space.n();
    let c = a.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut witnesses = Vec::new();
    let mut is_zero = true;
    for _ in 0..trials.max(1) {
        let s: Vec<u64> = (0..b.len()).map(|_| field.sample(&mut rng, 0)).collect();
        let mut k = Matrix::zeros(&field, n, n);
        for (sk, bk) in s.iter().zip(&b) {
            k = k.add(&bk.scale(sk))?;
        }
        let ak: Vec<Matrix<PrimeField>> = a.iter().map(|ai| ai.mul(&k)).collect::<Result<_>>()?;
        let m = Matrix::from_fn(&field, c, c, |i, j| ak[i].mul(&ak[j]).expect("square").trace());
        let det = if c == 0 { field.one() } else { m.det()? };
        witnesses.push(s);
        if !field.is_zero(&det) {
            is_zero = false;
            break;
        }
    }
    Ok(ZeroTestReport {
        is_zero,
        method: "det(M) Schwartz-Zippel".to_string(),
        witnesses,
        p: prime,
        failure_bound: format!("{}/{}", 2 * c, prime),
    })
}

/// Searches for `K` in the space with `det(P + tK) = det(P)` for every member
/// `P` and scalar `t`, i.e. a direction along which the determinant of the
/// generic member is constant. Such a `K` forces ML degree zero.
pub fn invisible_direction(space: &LinearMatrixSpace) -> Result<Option<SymMatrix>> {
    let d = space.dim();
    if d == 0 {
        return Ok(None);
    }
    let n = space.n();
    let ring = PolyRing::grevlex(Rationals, PolyRing::<Rationals>::indexed_names("t", d));
    let mats: Vec<Matrix<Rationals>> = space.basis().iter().map(|b| b.as_matrix().clone()).collect();
    let vars: Vec<usize> = (0..d).collect();
    let det = PolyMatrix::affine(&ring, &Matrix::zeros(&Rationals, n, n), &mats, &vars)?.det()?;
    let grads = (0..d).map(|k| det.derivative(k)).collect::<Result<Vec<_>>>()?;

    // rows: monomials of the gradient; columns: directions
    let mut monos: Vec<Monomial> = grads.iter().flat_map(|g| g.terms().iter().map(|(m, _)| m.clone())).collect();
    monos.sort_by(|x, y| x.exps().cmp(y.exps()));
    monos.dedup();
    if monos.is_empty() {
        return Ok(Some(space.basis()[0].clone()));
    }
    let coeffs = Matrix::from_fn(&Rationals, monos.len(), d, |r, k| grads[k].coeff(&monos[r]));
    let Some(v) = coeffs.kernel().into_iter().next() else {
        return Ok(None);
    };
    let k = space.member(&v)?;
    debug_assert!(!v.iter().all(Rational::is_zero));
    Ok(Some(k))
}
