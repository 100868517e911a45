use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{rational_from_i64, Matrix, Rational, Rationals, SymMatrix};
use crate::sympoly::{Monomial, PolyMatrix, PolyRing};

use super::linear::{LinearMatrixSpace, Role};

/// A two-dimensional space with a distinguished ordered basis `(A, B)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Pencil {
    a: SymMatrix,
    b: SymMatrix,
}

impl Pencil {
    pub fn new(a: SymMatrix, b: SymMatrix) -> Result<Self> {
        let n = a.n();
        LinearMatrixSpace::new(n, vec![a.clone(), b.clone()], Role::Model)?;
        Ok(Self { a, b })
    }

    pub fn from_space(space: &LinearMatrixSpace) -> Result<Self> {
        match space.basis() {
            [a, b] => Ok(Self { a: a.clone(), b: b.clone() }),
            _ => Err(Error::InvalidInput(format!("a pencil is two-dimensional, got dimension {}", space.dim()))),
        }
    }

    pub fn a(&self) -> &SymMatrix {
        &self.a
    }

    pub fn b(&self) -> &SymMatrix {
        &self.b
    }

    pub fn n(&self) -> usize {
        self.a.n()
    }

    pub fn to_space(&self, role: Role) -> LinearMatrixSpace {
        LinearMatrixSpace::new(self.n(), vec![self.a.clone(), self.b.clone()], role).expect("independent by construction")
    }

    /// Fixed pencils of 3x3 symmetric matrices, one per congruence class,
    /// keyed by Segre symbol. Regular classes use rational eigenvalues.
    pub fn representative(symbol: &str) -> Option<Self> {
        let m = |rows: [[i64; 3]; 3]| {
            let rows: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            SymMatrix::from_i64_rows(&rows).expect("symmetric literal")
        };
        let flip2_plus_one = m([[0, 1, 0], [1, 0, 0], [0, 0, 1]]);
        let (a, b) = match symbol {
            "[1 1 1]" => (SymMatrix::identity(3), m([[1, 0, 0], [0, 2, 0], [0, 0, 3]])),
            "[2 1]" => (flip2_plus_one, m([[0, 0, 0], [0, 1, 0], [0, 0, 1]])),
            "[(1 1) 1]" => (m([[1, 0, 0], [0, 1, 0], [0, 0, 0]]), m([[0, 0, 0], [0, 0, 0], [0, 0, 1]])),
            "[3]" => (m([[0, 0, 1], [0, 1, 0], [1, 0, 0]]), m([[0, 0, 0], [0, 0, 1], [0, 1, 0]])),
            "[(2 1)]" => (flip2_plus_one, m([[0, 0, 0], [0, 1, 0], [0, 0, 0]])),
            "[1 1;;1]" => (SymMatrix::unit(3, 0, 0), SymMatrix::unit(3, 1, 1)),
            "[2;;1]" => (SymMatrix::unit(3, 0, 1), SymMatrix::unit(3, 1, 1)),
            "[;1;]" => (SymMatrix::unit(3, 0, 1), SymMatrix::unit(3, 0, 2)),
            _ => return None,
        };
        Some(Self { a, b })
    }
}

/// Segre symbol of a regular pencil: one group of Jordan block sizes per
/// eigenvalue, each group sorted decreasingly, groups sorted decreasingly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SegreSymbol {
    groups: Vec<Vec<usize>>,
}

impl SegreSymbol {
    pub fn new(mut groups: Vec<Vec<usize>>) -> Self {
        for g in &mut groups {
            g.sort_unstable_by(|a, b| b.cmp(a));
        }
        groups.retain(|g| !g.is_empty());
        groups.sort_unstable_by(|a, b| b.cmp(a));
        Self { groups }
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    /// Sum of all block sizes.
    pub fn size(&self) -> usize {
        self.groups.iter().flatten().sum()
    }
}

impl fmt::Display for SegreSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .groups
            .iter()
            .map(|g| {
                let inner: Vec<String> = g.iter().map(|s| s.to_string()).collect();
                if g.len() == 1 {
                    inner[0].clone()
                } else {
                    format!("({})", inner.join(" "))
                }
            })
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Segre symbol of a regular pencil whose eigenvalues are rational.
pub fn segre_symbol(p: &Pencil) -> Result<SegreSymbol> {
    let n = p.n();
    // an invertible member B' and an independent member A'
    let mut chosen = None;
    if !p.b.det().is_zero() {
        chosen = Some((p.b.clone(), p.a.clone()));
    } else if !p.a.det().is_zero() {
        chosen = Some((p.a.clone(), p.b.clone()));
    } else {
        for k in 1..=(n as i64 + 1) {
            let m = p.a.add(&p.b.scale(&rational_from_i64(k)))?;
            if !m.det().is_zero() {
                chosen = Some((m, p.a.clone()));
                break;
            }
        }
    }
    // det(xA + yB) is a binary form of degree n; vanishing at n + 3 distinct
    // points forces it to vanish identically
    let (bp, other) = chosen.ok_or(Error::SingularPencil)?;
    let c = bp.as_matrix().inverse()?.mul(other.as_matrix())?;

    let roots = rational_roots(&char_poly(&c)?)?;
    if roots.iter().map(|(_, m)| m).sum::<usize>() != n {
        return Err(Error::IrrationalEigenvalue);
    }
    let id = Matrix::identity(&Rationals, n);
    let groups = roots
        .iter()
        .map(|(lambda, mult)| {
            let shifted = c.sub(&id.scale(lambda)).expect("square");
            // ranks[k] = rank((C - lambda I)^k); blocks of size >= k number
            // ranks[k-1] - ranks[k]
            let mut ranks = vec![n];
            let mut power = id.clone();
            while ranks.last() != Some(&(n - mult)) {
                power = power.mul(&shifted).expect("square");
                ranks.push(power.rank());
            }
            ranks.push(n - mult);
            let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
            let mut sizes = Vec::new();
            for k in 1..at_least.len() + 1 {
                let here = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
                sizes.extend(std::iter::repeat_n(k, here));
            }
            sizes
        })
        .collect();
    Ok(SegreSymbol::new(groups))
}

/// Coefficients (constant term first) of `det(lambda I - C)`.
fn char_poly(c: &Matrix<Rationals>) -> Result<Vec<Rational>> {
    let n = c.rows();
    let ring = PolyRing::grevlex(Rationals, vec!["lambda".to_string()]);
    let id = Matrix::identity(&Rationals, n);
    let neg_c = c.scale(&rational_from_i64(-1));
    let m = PolyMatrix::affine(&ring, &neg_c, &[id], &[0])?;
    let det = m.det_capped(n.max(1))?;
    Ok((0..=n).map(|d| det.coeff(&Monomial::var_pow(1, 0, d as u16))).collect())
}

/// Distinct rational roots with multiplicities.
fn rational_roots(coeffs: &[Rational]) -> Result<Vec<(Rational, usize)>> {
    let mut poly = integer_primitive(coeffs);
    let mut roots: Vec<(Rational, usize)> = Vec::new();
    let push = |r: Rational, roots: &mut Vec<(Rational, usize)>| match roots.iter_mut().find(|(x, _)| *x == r) {
        Some((_, m)) => *m += 1,
        None => roots.push((r, 1)),
    };
    while poly.len() > 1 && poly[0].is_zero() {
        poly.remove(0);
        push(Rational::zero(), &mut roots);
    }
    loop {
        if poly.len() <= 1 {
            break;
        }
        let lead = poly.last().unwrap().clone();
        let found = divisors(&poly[0])?
            .iter()
            .flat_map(|p| divisors(&lead).unwrap_or_default().into_iter().map(move |q| (p.clone(), q)))
            .flat_map(|(p, q)| [Rational::new(p.clone(), q.clone()), Rational::new(-p, q)])
            .find(|r| eval(&poly, r).is_zero());
        let Some(r) = found else { break };
        poly = deflate(&poly, &r);
        push(r, &mut roots);
    }
    Ok(roots)
}

fn integer_primitive(coeffs: &[Rational]) -> Vec<BigInt> {
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|q| (q * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let mut trimmed = ints;
    while trimmed.len() > 1 && trimmed.last().unwrap().is_zero() {
        trimmed.pop();
    }
    let g = trimmed.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return trimmed;
    }
    trimmed.into_iter().map(|x| x / &g).collect()
}

/// Positive divisors of a nonzero integer, by trial division.
fn divisors(v: &BigInt) -> Result<Vec<BigInt>> {
    let v = v.abs().to_u64().ok_or_else(|| Error::InvalidInput("coefficient too large for rational root search".into()))?;
    if v == 0 {
        return Ok(vec![]);
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= v {
        if v % d == 0 {
            small.push(BigInt::from(d));
            if d != v / d {
                large.push(BigInt::from(v / d));
            }
        }
        d += 1;
        if d > 10_000_000 {
            return Err(Error::InvalidInput("coefficient too large for rational root search".into()));
        }
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

fn eval(poly: &[BigInt], r: &Rational) -> Rational {
    poly.iter().rev().fold(Rational::zero(), |acc, c| acc * r + Rational::from_integer(c.clone()))
}

/// Divides by `(q x - p)` for the root `r = p/q` and re-normalizes.
fn deflate(poly: &[BigInt], r: &Rational) -> Vec<BigInt> {
    let qs: Vec<Rational> = poly.iter().map(|c| Rational::from_integer(c.clone())).collect();
    // synthetic division by (x - r)
    let mut out = vec![Rational::zero(); qs.len() - 1];
    let mut carry = Rational::zero();
    for i in (1..qs.len()).rev() {
        carry = &qs[i] + carry * r;
        out[i - 1] = carry.clone();
    }
    integer_primitive(&out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn representatives_have_their_symbols() {
        for s in ["[1 1 1]", "[2 1]", "[(1 1) 1]", "[3]", "[(2 1)]"] {
            let p = Pencil::representative(s).unwrap();
            assert_eq!(segre_symbol(&p).unwrap().to_string(), s);
        }
        for s in ["[1 1;;1]", "[2;;1]", "[;1;]"] {
            let p = Pencil::representative(s).unwrap();
            assert_eq!(segre_symbol(&p), Err(Error::SingularPencil), "{s}");
        }
    }

    #[test]
    fn irrational_eigenvalues_are_rejected() {
        let a = SymMatrix::from_i64_rows(&[&[1, 0], &[0, -2]]).unwrap();
        let p = Pencil::new(a, SymMatrix::identity(2)).unwrap();
        assert_eq!(segre_symbol(&p).unwrap().to_string(), "[1 1]");
        let a = SymMatrix::from_i64_rows(&[&[0, 1], &[1, 1]]).unwrap();
        let p = Pencil::new(a, SymMatrix::identity(2)).unwrap();
        assert_eq!(segre_symbol(&p), Err(Error::IrrationalEigenvalue));
    }

    #[test]
    fn rendering() {
        assert_eq!(SegreSymbol::new(vec![vec![1], vec![1, 1]]).to_string(), "[(1 1) 1]");
        assert_eq!(SegreSymbol::new(vec![vec![1, 2]]).to_string(), "[(2 1)]");
        assert_eq!(SegreSymbol::new(vec![vec![1], vec![2]]).to_string(), "[2 1]");
    }

    #[test]
    fn root_finding() {
        let c = |v: &[i64]| v.iter().map(|&x| rational_from_i64(x)).collect::<Vec<_>>();
        // (x - 1)^2 (2x + 3) = 2x^3 - x^2 - 4x + 3
        let roots = rational_roots(&c(&[3, -4, -1, 2])).unwrap();
        assert_eq!(roots, vec![(rational_from_i64(1), 2), (Rational::new(BigInt::from(-3), BigInt::from(2)), 1)]);
        assert_eq!(rational_roots(&c(&[0, 0, 1])).unwrap(), vec![(Rational::zero(), 2)]);
        assert!(rational_roots(&c(&[-2, 0, 1])).unwrap().is_empty());
    }
}
