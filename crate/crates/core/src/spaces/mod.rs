//! Linear spaces of symmetric matrices: annihilators, regularity,
//! congruence, graphical and diagonal constructors, pencils.

pub mod constructors;
pub mod linear;
pub mod pencil;

pub use constructors::{diagonal_space, graph_to_space};
pub use linear::{random_invertible, LinearMatrixSpace, Role, SYMBOLIC_REGULARITY_MAX_N};
pub use pencil::{segre_symbol, Pencil, SegreSymbol};

/// Free-function form of [`LinearMatrixSpace::annihilator`].
pub fn annihilator(space: &LinearMatrixSpace) -> LinearMatrixSpace {
    space.annihilator()
}

/// Free-function form of [`LinearMatrixSpace::is_regular`].
pub fn is_regular(space: &LinearMatrixSpace, trials: usize, seed: u64) -> bool {
    space.is_regular(trials, seed)
}

/// Free-function form of [`LinearMatrixSpace::congruence_transform`].
pub fn congruence_transform(
    space: &LinearMatrixSpace,
    g: &crate::exactmath::Matrix<crate::exactmath::Rationals>,
) -> crate::Result<LinearMatrixSpace> {
    space.congruence_transform(g)
}
