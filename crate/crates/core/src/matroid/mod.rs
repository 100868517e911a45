//! Linear matroids of diagonal spaces: characteristic polynomial, Möbius
//! invariant, circuits and the reciprocal polynomials `f_C`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{Field, Matrix, Rational, Rationals};
use crate::spaces::LinearMatrixSpace;
use crate::sympoly::{Monomial, MultiPoly, PolyRing, RingRef};

/// Largest ground set handled by subset enumeration.
pub const MAX_GROUND_SET: usize = 20;

/// Matroid on the columns of a rational matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMatroid {
    matrix: Matrix<Rationals>,
}

/// Minimal support of a linear relation `sum_c a_c x_c = 0` on the row space.
#[derive(Clone, Debug, PartialEq)]
pub struct Circuit {
    /// 0-indexed ground set elements, increasing.
    pub support: Vec<usize>,
    pub coeffs: Vec<Rational>,
}

impl LinearMatroid {
    pub fn new(matrix: Matrix<Rationals>) -> Self {
        Self { matrix }
    }

    /// Rows are the diagonals of the basis matrices of a diagonal space.
    pub fn from_diagonal_space(space: &LinearMatrixSpace) -> Result<Self> {
        if !space.is_diagonal() {
            return Err(Error::InvalidInput("space is not diagonal".into()));
        }
        let n = space.n();
        let basis = space.basis();
        Ok(Self::new(Matrix::from_fn(&Rationals, basis.len(), n, |r, c| basis[r].get(c, c).clone())))
    }

    pub fn ground_set_size(&self) -> usize {
        self.matrix.cols()
    }

    pub fn matrix(&self) -> &Matrix<Rationals> {
        &self.matrix
    }

    /// Rank of the columns selected by the bitmask.
    pub fn rank_of(&self, mask: u64) -> usize {
        let cols: Vec<usize> = (0..self.ground_set_size()).filter(|&c| mask >> c & 1 == 1).collect();
        if cols.is_empty() {
            return 0;
        }
        Matrix::from_fn(&Rationals, self.matrix.rows(), cols.len(), |r, k| self.matrix.get(r, cols[k]).clone()).rank()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Coefficients, constant term first, of
    /// `chi(lambda) = sum_S (-1)^|S| lambda^(r(M) - r(S))`.
    pub fn characteristic_polynomial(&self) -> Result<Vec<i64>> {
        let n = self.ground_set_size();
        if n > MAX_GROUND_SET {
            return Err(Error::CapExceeded { size: n, cap: MAX_GROUND_SET });
        }
        let full = self.rank();
        let mut chi = vec![0i64; full + 1];
        for mask in 0..1u64 << n {
            let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            chi[full - self.rank_of(mask)] += sign;
        }
        Ok(chi)
    }

    /// `|chi(0)|`.
    pub fn mobius_invariant(&self) -> Result<u64> {
        Ok(self.characteristic_polynomial()?[0].unsigned_abs())
    }

    /// All circuits, by increasing size.
    pub fn circuits(&self) -> Result<Vec<Circuit>> {
        let n = self.ground_set_size();
        if n > MAX_GROUND_SET {
            return Err(Error::CapExceeded { size: n, cap: MAX_GROUND_SET });
        }
        let mut masks: Vec<u64> = (1..1u64 << n).collect();
        masks.sort_by_key(|m| (m.count_ones(), m.reverse_bits()));
        let mut found: Vec<u64> = Vec::new();
        let mut out = Vec::new();
        for mask in masks {
            if found.iter().any(|c| c & mask == *c) {
                continue;
            }
            if self.rank_of(mask) == mask.count_ones() as usize {
                continue;
            }
            // dependent with every proper subset independent
            let support: Vec<usize> = (0..n).filter(|&c| mask >> c & 1 == 1).collect();
            let sub = Matrix::from_fn(&Rationals, self.matrix.rows(), support.len(), |r, k| {
                self.matrix.get(r, support[k]).clone()
            });
            let kernel = sub.kernel();
            let coeffs = kernel.into_iter().next().expect("dependent columns have a relation");
            found.push(mask);
            out.push(Circuit { support, coeffs });
        }
        Ok(out)
    }
}

/// `|chi(0)|` of the matroid of a diagonal space.
pub fn mobius_ml_degree(space: &LinearMatrixSpace) -> Result<u64> {
    LinearMatroid::from_diagonal_space(space)?.mobius_invariant()
}

/// `f_C = sum_{c in C} a_c prod_{c' in C, c' != c} x_{c'}` for each circuit,
/// in `ring` (one variable per ground set element).
pub fn diagonal_reciprocal_gb<F: Field>(ring: &RingRef<F>, circuits: &[Circuit]) -> Result<Vec<MultiPoly<F>>> {
    let field = ring.field();
    let n = ring.nvars();
    circuits
        .iter()
        .map(|c| {
            if c.support.is_empty() {
                return Err(Error::InvalidInput("empty circuit".into()));
            }
            if c.support.iter().any(|&i| i >= n) || c.coeffs.len() != c.support.len() {
                return Err(Error::DimensionMismatch("circuit does not fit the ring".into()));
            }
            let terms = c
                .support
                .iter()
                .zip(&c.coeffs)
                .filter(|(_, a)| !a.is_zero())
                .map(|(&i, a)| {
                    let mut exps = vec![0u16; n];
                    for &j in &c.support {
                        if j != i {
                            exps[j] = 1;
                        }
                    }
                    let coeff = field
                        .from_rational(a)
                        .ok_or_else(|| Error::BadReduction(field.characteristic()))?;
                    Ok((Monomial::new(exps), coeff))
                })
                .collect::<Result<Vec<_>>>()?;
            MultiPoly::from_terms(ring, terms)
        })
        .collect()
}

/// Ring `x1..xn` over the rationals for [`diagonal_reciprocal_gb`].
pub fn diagonal_ring(n: usize) -> RingRef<Rationals> {
    PolyRing::grevlex(Rationals, PolyRing::<Rationals>::indexed_names("x", n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational_from_i64;
    use crate::groebner::{buchberger, hilbert, Ideal};
    use crate::spaces::diagonal_space;
    use crate::sympoly::MonomialOrder;
    use proptest::prelude::*;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rational_from_i64(x)).collect()
    }

    fn ones_then_zeros(r: usize, n: usize) -> Vec<Rational> {
        (0..n).map(|i| rational_from_i64((i < r) as i64)).collect()
    }

    #[test]
    fn free_matroid() {
        let m = LinearMatroid::from_diagonal_space(&diagonal_space(3, &[]).unwrap()).unwrap();
        assert_eq!(m.characteristic_polynomial().unwrap(), vec![-1, 3, -3, 1]);
        assert_eq!(m.mobius_invariant().unwrap(), 1);
        assert!(m.circuits().unwrap().is_empty());
    }

    #[test]
    fn uniform_rank_two_on_three() {
        let m = LinearMatroid::from_diagonal_space(&diagonal_space(3, &[q(&[1, 1, 1])]).unwrap()).unwrap();
        assert_eq!(m.characteristic_polynomial().unwrap(), vec![2, -3, 1]);
        let circuits = m.circuits().unwrap();
        assert_eq!(circuits.len(), 1);
        assert_eq!(circuits[0].support, vec![0, 1, 2]);
    }

    #[test]
    fn single_circuit_family() {
        for n in 2..7 {
            for r in 2..=n {
                let space = diagonal_space(n, &[ones_then_zeros(r, n)]).unwrap();
                assert_eq!(mobius_ml_degree(&space).unwrap(), (r - 1) as u64, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn reciprocal_polynomials() {
        let ring = diagonal_ring(3);
        let c = Circuit { support: vec![0, 1, 2], coeffs: q(&[1, 1, 1]) };
        let f = diagonal_reciprocal_gb(&ring, &[c]).unwrap();
        assert_eq!(f[0].to_string(), "x1*x2 + x1*x3 + x2*x3");
        let c = Circuit { support: vec![0, 1], coeffs: q(&[1, -1]) };
        assert_eq!(diagonal_reciprocal_gb(&ring, &[c]).unwrap()[0].to_string(), "-x1 + x2");
        let empty = Circuit { support: vec![], coeffs: vec![] };
        assert!(diagonal_reciprocal_gb(&ring, &[empty]).is_err());
    }

    #[test]
    fn non_diagonal_is_rejected() {
        let full = LinearMatrixSpace::full(2);
        assert!(mobius_ml_degree(&full).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn hilbert_degree_of_single_circuit(n in 2usize..7, r in 2usize..7, scale in proptest::collection::vec(1i64..9, 7)) {
            let r = r.min(n);
            let normal: Vec<Rational> = (0..n).map(|i| if i < r { rational_from_i64(scale[i]) } else { Rational::zero() }).collect();
            let space = diagonal_space(n, &[normal]).unwrap();
            let m = LinearMatroid::from_diagonal_space(&space).unwrap();
            let circuits = m.circuits().unwrap();
            prop_assert_eq!(circuits.len(), 1);
            let ring = diagonal_ring(n);
            let gens = diagonal_reciprocal_gb(&ring, &circuits).unwrap();
            let gb = buchberger(&Ideal::new(&ring, gens).unwrap(), MonomialOrder::Grevlex).unwrap();
            let h = hilbert(&gb.leading_monomials(), n);
            prop_assert_eq!(h.degree as u64, m.mobius_invariant().unwrap());
            prop_assert_eq!(h.degree as usize, r - 1);
        }

        #[test]
        fn coloops_do_not_change_the_invariant(n in 2usize..6, r in 2usize..6) {
            let r = r.min(n);
            let a = mobius_ml_degree(&diagonal_space(n, &[ones_then_zeros(r, n)]).unwrap()).unwrap();
            let b = mobius_ml_degree(&diagonal_space(n + 1, &[ones_then_zeros(r, n + 1)]).unwrap()).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}
