use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use crate::error::{Error, Result};

/// Monomial orders used by the Gröbner engine.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic order.
    Grevlex,
    /// Grevlex refined by a positive weight per variable: the weighted
    /// degree is compared first, ties are broken reverse lexicographically.
    WeightedGrevlex(Vec<u32>),
    /// Two (weighted) grevlex blocks: monomials are compared on the `block`
    /// variables first, then on the remaining ones. Any monomial involving a
    /// block variable is larger than every monomial free of them.
    Elimination { block: Vec<bool>, weights: Vec<u32> },
}

impl MonomialOrder {
    pub fn weighted(weights: Vec<u32>) -> Result<Self> {
        if weights.contains(&0) {
            return Err(Error::InvalidInput("monomial weights must be positive".into()));
        }
        Ok(Self::WeightedGrevlex(weights))
    }

    pub fn elimination(block: Vec<bool>) -> Self {
        let weights = vec![1; block.len()];
        Self::Elimination { block, weights }
    }

    pub fn weighted_elimination(block: Vec<bool>, weights: Vec<u32>) -> Result<Self> {
        if weights.len() != block.len() || weights.contains(&0) {
            return Err(Error::InvalidInput("elimination weights must be positive, one per variable".into()));
        }
        Ok(Self::Elimination { block, weights })
    }

    /// Checks that the order is defined on `nvars` variables.
    pub fn validate(&self, nvars: usize) -> Result<()> {
        let len = match self {
            Self::Grevlex => return Ok(()),
            Self::WeightedGrevlex(w) => w.len(),
            Self::Elimination { block, weights } => {
                if block.len() != weights.len() {
                    return Err(Error::InvalidInput("block mask and weights differ in length".into()));
                }
                block.len()
            }
        };
        if len != nvars {
            return Err(Error::DimensionMismatch(format!("order defined on {len} variables, ring has {nvars}")));
        }
        Ok(())
    }

    /// Weighted degree used for the sugar strategy.
    pub fn weighted_degree(&self, m: &Monomial) -> u32 {
        match self {
            Self::Grevlex => m.degree(),
            Self::WeightedGrevlex(w) | Self::Elimination { weights: w, .. } => {
                m.exps().iter().zip(w).map(|(&e, &w)| e as u32 * w).sum()
            }
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            Self::Grevlex => a.degree().cmp(&b.degree()).then_with(|| revlex(a.exps(), b.exps(), |_| true)),
            Self::WeightedGrevlex(w) => {
                let wa: u32 = a.exps().iter().zip(w).map(|(&e, &w)| e as u32 * w).sum();
                let wb: u32 = b.exps().iter().zip(w).map(|(&e, &w)| e as u32 * w).sum();
                wa.cmp(&wb).then_with(|| revlex(a.exps(), b.exps(), |_| true))
            }
            Self::Elimination { block, weights } => {
                let part = |m: &Monomial, inside: bool| -> u32 {
                    m.exps()
                        .iter()
                        .zip(weights)
                        .zip(block)
                        .filter(|(_, &b)| b == inside)
                        .map(|((&e, &w), _)| e as u32 * w)
                        .sum()
                };
                part(a, true)
                    .cmp(&part(b, true))
                    .then_with(|| revlex(a.exps(), b.exps(), |i| block[i]))
                    .then_with(|| part(a, false).cmp(&part(b, false)))
                    .then_with(|| revlex(a.exps(), b.exps(), |i| !block[i]))
            }
        }
    }
}

/// Reverse lexicographic tie-break restricted to the selected variables:
/// the monomial with the smaller exponent in the last differing slot wins.
#[inline]
fn revlex(a: &[u16], b: &[u16], select: impl Fn(usize) -> bool) -> Ordering {
    for i in (0..a.len()).rev() {
        if !select(i) {
            continue;
        }
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}
