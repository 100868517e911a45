use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{parse_rational, Rational, SymMatrix};
use crate::spaces::{diagonal_space, graph_to_space, LinearMatrixSpace, Role};

/// JSON description of a linear space of symmetric matrices. Rational entries
/// are strings such as `"3"` or `"-1/2"`; graph vertices are 1-indexed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub n: usize,
    pub space: SpaceSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SpaceSpec {
    /// Spanning matrices of the space itself.
    Basis { matrices: Vec<Vec<Vec<String>>> },
    /// Spanning matrices of the annihilator; the space is its polar.
    AnnihilatorBasis { matrices: Vec<Vec<Vec<String>>> },
    /// Concentration matrices with zeros at the non-edges.
    Graph { edges: Vec<(usize, usize)> },
    /// Diagonal matrices whose diagonals are orthogonal to every normal.
    Diagonal { normals: Vec<Vec<String>> },
}

impl ModelSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("model specs always serialize")
    }

    /// Builds the space; the result always carries the model role.
    pub fn to_space(&self) -> Result<LinearMatrixSpace> {
        let n = self.n;
        if n == 0 {
            return Err(Error::InvalidInput("n must be positive".into()));
        }
        match &self.space {
            SpaceSpec::Basis { matrices } => LinearMatrixSpace::span(n, parse_matrices(n, matrices)?, Role::Model),
            SpaceSpec::AnnihilatorBasis { matrices } => {
                Ok(LinearMatrixSpace::span(n, parse_matrices(n, matrices)?, Role::Annihilator)?.annihilator())
            }
            SpaceSpec::Graph { edges } => graph_to_space(n, edges),
            SpaceSpec::Diagonal { normals } => {
                let normals = normals
                    .iter()
                    .map(|v| v.iter().map(|s| parse_rational(s)).collect::<Result<Vec<Rational>>>())
                    .collect::<Result<Vec<_>>>()?;
                diagonal_space(n, &normals)
            }
        }
    }

    /// Basis-kind spec of an existing space.
    pub fn from_space(name: Option<String>, space: &LinearMatrixSpace) -> Self {
        let matrices = space.basis().iter().map(SymMatrix::to_strings).collect();
        Self { name, n: space.n(), space: SpaceSpec::Basis { matrices } }
    }

    /// Spec listing the given matrices as the annihilator.
    pub fn from_annihilator(name: Option<String>, n: usize, matrices: &[SymMatrix]) -> Self {
        let matrices = matrices.iter().map(SymMatrix::to_strings).collect();
        Self { name, n, space: SpaceSpec::AnnihilatorBasis { matrices } }
    }
}

fn parse_matrices(n: usize, matrices: &[Vec<Vec<String>>]) -> Result<Vec<SymMatrix>> {
    matrices
        .iter()
        .map(|rows| {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(Error::DimensionMismatch(format!("expected a {n}x{n} matrix")));
            }
            SymMatrix::from_string_rows(rows)
        })
        .collect()
}
