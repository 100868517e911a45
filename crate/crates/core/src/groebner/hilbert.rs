use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::Field;
use crate::sympoly::{Monomial, MultiPoly};

/// Hilbert series data of `k[x_1..x_k] / I` for a monomial ideal `I`.
///
/// The series is `numerator / (1 - z)^k`. `dimension` is the Krull dimension
/// of the quotient (-1 for the unit ideal) and `degree` the multiplicity,
/// i.e. the numerator with all `(1 - z)` factors removed, evaluated at 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    pub numerator: Vec<i64>,
    pub nvars: usize,
    pub dimension: i64,
    pub degree: i64,
}

impl HilbertData {
    /// Dimension of the projective scheme cut out by a homogeneous ideal.
    pub fn projective_dimension(&self) -> i64 {
        self.dimension - 1
    }

    /// Degree of the projective scheme; 0 when it is empty.
    pub fn projective_degree(&self) -> i64 {
        if self.dimension <= 0 {
            0
        } else {
            self.degree
        }
    }

    /// Values of the Hilbert function in degrees `0..len`.
    pub fn hilbert_function(&self, len: usize) -> Vec<i64> {
        // multiply the numerator by 1/(1-z)^k term by term
        let mut series = vec![0i64; len];
        for (i, &c) in self.numerator.iter().enumerate().take(len) {
            series[i] = c;
        }
        for _ in 0..self.nvars {
            for i in 1..len {
                series[i] += series[i - 1];
            }
        }
        series
    }
}

/// Hilbert series of the quotient by the monomial ideal generated by `gens`.
pub fn hilbert(gens: &[Monomial], nvars: usize) -> HilbertData {
    let minimal = minimalize(gens.to_vec());
    let numerator = trim(numerator_of(minimal));
    let (mut q, mut a) = (numerator.clone(), 0usize);
    if q.iter().all(|&c| c == 0) {
        return HilbertData { numerator, nvars, dimension: -1, degree: 0 };
    }
    while q.iter().sum::<i64>() == 0 {
        q = divide_one_minus_z(&q);
        a += 1;
    }
    HilbertData { numerator, nvars, dimension: nvars as i64 - a as i64, degree: q.iter().sum() }
}

/// Hilbert data of the leading-term ideal of polynomial generators; errors
/// when some generator is not a monomial.
pub fn hilbert_of_polys<F: Field>(gens: &[MultiPoly<F>], nvars: usize) -> Result<HilbertData> {
    let monos = gens
        .iter()
        .map(|g| match g.terms() {
            [(m, _)] => Ok(m.clone()),
            _ => Err(Error::InvalidInput(format!("not a monomial: {g}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(hilbert(&monos, nvars))
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|o| o.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

fn sub_poly(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, &c) in b.iter().enumerate() {
        a[i + shift] -= c;
    }
}

/// Numerator of the Hilbert series for a minimal monomial generating set.
fn numerator_of(gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![0];
    }
    // pivot on a variable shared by two generators
    let nvars = gens[0].nvars();
    let mut pivot: Option<(usize, usize)> = None;
    for v in 0..nvars {
        let count = gens.iter().filter(|g| g.exps()[v] > 0).count();
        if count >= 2 && pivot.is_none_or(|(_, c)| count > c) {
            pivot = Some((v, count));
        }
    }
    let Some((v, _)) = pivot else {
        // pairwise coprime: the product of (1 - z^deg)
        let mut p = vec![1i64];
        for g in &gens {
            let d = g.degree() as usize;
            let mut next = p.clone();
            sub_poly(&mut next, &p, d);
            p = next;
        }
        return p;
    };
    let e = gens.iter().map(|g| g.exps()[v]).filter(|&e| e > 0).min().expect("pivot variable occurs");
    let power = Monomial::var_pow(nvars, v, e);

    // N(I) = N(I + <x^e>) + z^e N(I : x^e)
    let mut with_pivot: Vec<Monomial> = gens.iter().filter(|g| !power.divides(g)).cloned().collect();
    with_pivot.push(power.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut exps = g.exps().to_vec();
            exps[v] = exps[v].saturating_sub(e);
            Monomial::new(exps)
        })
        .collect();
    let mut out = numerator_of(minimalize(with_pivot));
    let rest = numerator_of(minimalize(colon));
    let neg: Vec<i64> = rest.iter().map(|c| -c).collect();
    sub_poly(&mut out, &neg, e as usize);
    out
}

fn divide_one_minus_z(p: &[i64]) -> Vec<i64> {
    // q with (1 - z) q = p: q_i = p_0 + ... + p_i
    let mut q = Vec::with_capacity(p.len().saturating_sub(1));
    let mut acc = 0;
    for &c in &p[..p.len() - 1] {
        acc += c;
        q.push(acc);
    }
    if q.is_empty() {
        q.push(0);
    }
    q
}
