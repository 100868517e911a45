//! Sparse exact multivariate polynomials, monomial orders and symbolic
//! determinants of polynomial matrices.

pub mod matrix;
pub mod monomial;
pub mod order;
pub mod poly;
pub mod ring;

pub use matrix::{adjugate_symbolic, det_symbolic, PolyMatrix, DEFAULT_SYMBOLIC_CAP};
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use poly::MultiPoly;
pub use ring::{PolyRing, RingRef};
