use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::exactmath::{Matrix, Rational, Rationals, SymMatrix};

use super::linear::{LinearMatrixSpace, Role};

/// Graphical model on vertices `1..=n`: all matrices vanishing at the
/// non-edges. Edges are 1-indexed and unordered.
pub fn graph_to_space(n: usize, edges: &[(usize, usize)]) -> Result<LinearMatrixSpace> {
    let mut set = BTreeSet::new();
    for &(a, b) in edges {
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::InvalidInput(format!("edge ({a},{b}) has a vertex outside 1..={n}")));
        }
        if a == b {
            return Err(Error::InvalidInput(format!("loop ({a},{b}) is not an edge")));
        }
        set.insert((a.min(b) - 1, a.max(b) - 1));
    }
    let mut basis: Vec<SymMatrix> = (0..n).map(|i| SymMatrix::unit(n, i, i)).collect();
    basis.extend(set.into_iter().map(|(i, j)| SymMatrix::unit(n, i, j)));
    LinearMatrixSpace::new(n, basis, Role::Model)
}

/// Diagonal matrices whose diagonal is orthogonal to every normal vector.
pub fn diagonal_space(n: usize, normals: &[Vec<Rational>]) -> Result<LinearMatrixSpace> {
    if let Some(v) = normals.iter().find(|v| v.len() != n) {
        return Err(Error::DimensionMismatch(format!("normal of length {} for n = {n}", v.len())));
    }
    let a = Matrix::from_fn(&Rationals, normals.len(), n, |r, c| normals[r][c].clone());
    if a.rank() != normals.len() {
        return Err(Error::InvalidInput("normals are linearly dependent".into()));
    }
    let basis: Vec<SymMatrix> = if normals.is_empty() {
        (0..n).map(|i| SymMatrix::unit(n, i, i)).collect()
    } else {
        a.kernel().into_iter().map(|v| SymMatrix::diagonal(&v)).collect()
    };
    LinearMatrixSpace::new(n, basis, Role::Model)
}
