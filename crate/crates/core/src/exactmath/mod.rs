//! Exact scalars and dense linear algebra over the rationals and GF(p).

pub mod field;
pub mod matrix;
pub mod prime;
pub mod sym;

pub use field::{format_rational, parse_rational, rational_from_i64, Field, PrimeField, Rational, Rationals, DEFAULT_SAMPLE_BOX};
pub use matrix::{random_symmetric, trace_pair, Matrix};
pub use prime::{is_prime, random_prime};
pub use sym::{sym_dim, sym_index_pairs, SymMatrix};
