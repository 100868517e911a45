use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::monomial::Monomial;
use super::ring::RingRef;
use crate::error::{Error, Result};
use crate::exactmath::Field;

/// Sparse multivariate polynomial. Terms are kept sorted in decreasing
/// order under the ring's monomial order and never store zero coefficients.
#[derive(Clone)]
pub struct MultiPoly<F: Field> {
    ring: RingRef<F>,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> PartialEq for MultiPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<F: Field> Eq for MultiPoly<F> {}

impl<F: Field> fmt::Debug for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub(crate) fn same_ring<F: Field>(a: &RingRef<F>, b: &RingRef<F>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(ring: &RingRef<F>) -> Self {
        Self { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &RingRef<F>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &RingRef<F>, c: F::Elem) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn monomial(ring: &RingRef<F>, m: Monomial, c: F::Elem) -> Self {
        if ring.field().is_zero(&c) {
            return Self::zero(ring);
        }
        Self { ring: ring.clone(), terms: vec![(m, c)] }
    }

    pub fn var(ring: &RingRef<F>, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), i), ring.field().one())
    }

    /// Builds a polynomial from arbitrary terms: like monomials are combined,
    /// zeros dropped and the result sorted.
    pub fn from_terms(ring: &RingRef<F>, terms: impl IntoIterator<Item = (Monomial, F::Elem)>) -> Result<Self> {
        let f = ring.field();
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        for (m, c) in terms {
            if m.nvars() != ring.nvars() {
                return Err(Error::DimensionMismatch(format!(
                    "monomial with {} slots in a ring of {} variables",
                    m.nvars(),
                    ring.nvars()
                )));
            }
            let e = acc.entry(m).or_insert_with(|| f.zero());
            *e = f.add(e, &c);
        }
        Ok(Self::from_map(ring, acc))
    }

    fn from_map(ring: &RingRef<F>, acc: HashMap<Monomial, F::Elem>) -> Self {
        let f = ring.field();
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Self { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, F::Elem)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    /// Coefficient of a given monomial (zero if absent).
    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map_or_else(|| self.field().zero(), |(_, c)| c.clone())
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.product(other))
    }

    fn merge(&self, other: &Self, subtract: bool) -> Self {
        let f = self.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match order.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), if subtract { f.neg(cb) } else { cb.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract { f.sub(ca, cb) } else { f.add(ca, cb) };
                    if !f.is_zero(&c) {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(
            other.terms[j..]
                .iter()
                .map(|(m, c)| (m.clone(), if subtract { f.neg(c) } else { c.clone() })),
        );
        Self { ring: self.ring.clone(), terms: out }
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        let f = self.field();
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = acc.entry(ma.mul(mb)).or_insert_with(|| f.zero());
                *e = f.add(e, &f.mul(ca, cb));
            }
        }
        Self::from_map(&self.ring, acc)
    }

    pub fn neg(&self) -> Self {
        let f = self.field();
        Self {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), f.neg(c))).collect(),
        }
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let f = self.field();
        if f.is_zero(s) {
            return Self::zero(&self.ring);
        }
        Self {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), f.mul(c, s))).collect(),
        }
    }

    /// `c * m * self`; multiplying by a monomial preserves the term order.
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        let f = self.field();
        if f.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Self {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, d)| (t.mul(m), f.mul(d, c))).collect(),
        }
    }

    /// `self - c * m * g` as a single merge pass.
    pub fn sub_mul_term(&self, c: &F::Elem, m: &Monomial, g: &Self) -> Self {
        let f = self.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        let shifted = |j: usize| -> (Monomial, F::Elem) {
            let (gm, gc) = &g.terms[j];
            (gm.mul(m), f.mul(gc, c))
        };
        let mut pending = if g.terms.is_empty() { None } else { Some(shifted(0)) };
        while i < self.terms.len() {
            let Some((mb, cb)) = pending.as_ref() else { break };
            let (ma, ca) = &self.terms[i];
            match order.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), f.neg(cb)));
                    j += 1;
                    pending = (j < g.terms.len()).then(|| shifted(j));
                }
                Ordering::Equal => {
                    let v = f.sub(ca, cb);
                    if !f.is_zero(&v) {
                        out.push((ma.clone(), v));
                    }
                    i += 1;
                    j += 1;
                    pending = (j < g.terms.len()).then(|| shifted(j));
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        if let Some((mb, cb)) = pending {
            out.push((mb, f.neg(&cb)));
            for k in j + 1..g.terms.len() {
                let (mb, cb) = shifted(k);
                out.push((mb, f.neg(&cb)));
            }
        }
        Self { ring: self.ring.clone(), terms: out }
    }

    /// Wraps terms already sorted under the ring order with nonzero coefficients.
    pub(crate) fn from_sorted_unchecked(ring: &RingRef<F>, terms: Vec<(Monomial, F::Elem)>) -> Self {
        Self { ring: ring.clone(), terms }
    }

    /// Everything but the leading term.
    pub(crate) fn tail(&self) -> Self {
        Self { ring: self.ring.clone(), terms: self.terms.get(1..).unwrap_or(&[]).to_vec() }
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if self.field().is_one(lc) => self.clone(),
            Some(lc) => self.scale(&self.field().inv(lc)),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = acc.product(self);
        }
        acc
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> Result<Self> {
        if var >= self.ring.nvars() {
            return Err(Error::InvalidInput(format!("no variable with index {var}")));
        }
        let f = self.field();
        let terms = self.terms.iter().filter(|(m, _)| m.exps()[var] > 0).map(|(m, c)| {
            let mut exps = m.exps().to_vec();
            let e = exps[var];
            exps[var] -= 1;
            (Monomial::new(exps), f.mul(c, &f.from_i64(e as i64)))
        });
        // differentiation can collapse terms only through zero coefficients
        // (characteristic p), never merge distinct monomials
        let terms: Vec<_> = terms.filter(|(_, c)| !f.is_zero(c)).collect();
        let mut out = Self { ring: self.ring.clone(), terms };
        let order = self.ring.order();
        out.terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Ok(out)
    }

    /// Substitutes field values for all variables.
    pub fn evaluate(&self, point: &[F::Elem]) -> Result<F::Elem> {
        if point.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch(format!(
                "point of length {} for {} variables",
                point.len(),
                self.ring.nvars()
            )));
        }
        let f = self.field();
        Ok(self.terms.iter().fold(f.zero(), |acc, (m, c)| {
            let v = m
                .exps()
                .iter()
                .zip(point)
                .filter(|(&e, _)| e > 0)
                .fold(c.clone(), |v, (&e, x)| f.mul(&v, &f.pow(x, e as u64)));
            f.add(&acc, &v)
        }))
    }

    /// Moves the polynomial into `target`: variable `k` of the target ring
    /// receives the exponent of variable `map[k]` of this ring. Every
    /// variable occurring in `self` must be mapped somewhere.
    pub fn remap(&self, target: &RingRef<F>, map: &[Option<usize>]) -> Result<Self> {
        if map.len() != target.nvars() {
            return Err(Error::DimensionMismatch("variable map length".into()));
        }
        let mut used = vec![false; self.ring.nvars()];
        for i in map.iter().flatten() {
            used[*i] = true;
        }
        for (m, _) in &self.terms {
            if m.exps().iter().enumerate().any(|(i, &e)| e > 0 && !used[i]) {
                return Err(Error::InvalidInput("polynomial uses a variable dropped by the map".into()));
            }
        }
        Self::from_terms(target, self.terms.iter().map(|(m, c)| (m.remap(map), c.clone())))
    }

    /// Same polynomial in a ring with identical variables but another order.
    pub fn reorder(&self, target: &RingRef<F>) -> Result<Self> {
        if target.nvars() != self.ring.nvars() || target.field() != self.field() {
            return Err(Error::RingMismatch);
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| target.order().cmp(&b.0, &a.0));
        Ok(Self { ring: target.clone(), terms })
    }

    /// Coefficient map into another field over a ring with the same variables.
    pub fn map_coeffs<G: Field>(&self, target: &RingRef<G>, f: impl Fn(&F::Elem) -> Option<G::Elem>) -> Option<MultiPoly<G>> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| f(c).map(|d| (m.clone(), d)))
            .collect::<Option<Vec<_>>>()?;
        MultiPoly::from_terms(target, terms).ok()
    }
}

impl<F: Field> fmt::Display for MultiPoly<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(out, "0");
        }
        let f = self.field();
        let vars = self.ring.vars();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mut coeff = f.render(c);
            let negative = coeff.starts_with('-');
            if negative {
                coeff.remove(0);
            }
            if k == 0 {
                if negative {
                    write!(out, "-")?;
                }
            } else {
                write!(out, " {} ", if negative { '-' } else { '+' })?;
            }
            let factors: Vec<String> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { vars[i].clone() } else { format!("{}^{}", vars[i], e) })
                .collect();
            if factors.is_empty() {
                write!(out, "{coeff}")?;
            } else if coeff == "1" {
                write!(out, "{}", factors.join("*"))?;
            } else {
                write!(out, "{}*{}", coeff, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<F: Field> std::ops::$trait<&MultiPoly<F>> for &MultiPoly<F> {
            type Output = MultiPoly<F>;
            /// Panics if the operands live in different rings; use the
            /// `try_` variant to get an error instead.
            fn $method(self, rhs: &MultiPoly<F>) -> MultiPoly<F> {
                self.$checked(rhs).expect("polynomial ring mismatch")
            }
        }
    };
}

impl_binop!(Add, add, try_add);
impl_binop!(Sub, sub, try_sub);
impl_binop!(Mul, mul, try_mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rational_from_i64, Rationals};
    use crate::sympoly::ring::PolyRing;

    fn ring(vars: &[&str]) -> RingRef<Rationals> {
        PolyRing::grevlex(Rationals, vars.iter().map(|s| s.to_string()).collect())
    }

    fn c(v: i64) -> crate::exactmath::Rational {
        rational_from_i64(v)
    }

    #[test]
    fn difference_of_squares() {
        let r = ring(&["x", "y"]);
        let x = MultiPoly::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        let p = &(&x + &y) * &(&x - &y);
        assert_eq!(p.to_string(), "x^2 - y^2");
    }

    #[test]
    fn derivative_example() {
        let r = ring(&["t1", "t2"]);
        let t1 = MultiPoly::var(&r, 0);
        let t2 = MultiPoly::var(&r, 1);
        let p = &(&(&t1 * &t2) + &t1.scale(&c(3))) + &MultiPoly::constant(&r, c(5));
        let d = p.derivative(0).unwrap();
        assert_eq!(d, &t2 + &MultiPoly::constant(&r, c(3)));
    }

    #[test]
    fn evaluate_example() {
        let r = ring(&["x", "y"]);
        let p = &MultiPoly::var(&r, 0).pow(2) + &MultiPoly::var(&r, 1);
        assert_eq!(p.evaluate(&[c(2), c(3)]).unwrap(), c(7));
        assert!(p.evaluate(&[c(2)]).is_err());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = MultiPoly::var(&ring(&["x"]), 0);
        let b = MultiPoly::var(&ring(&["y"]), 0);
        assert_eq!(a.try_add(&b), Err(Error::RingMismatch));
    }

    #[test]
    fn sub_mul_term_matches_naive() {
        let r = ring(&["x", "y", "z"]);
        let x = MultiPoly::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        let z = MultiPoly::var(&r, 2);
        let f = &(&x.pow(3) + &(&y * &z)) - &z.pow(2);
        let g = &(&x * &y) + &z;
        let m = Monomial::new(vec![1, 0, 1]);
        let fast = f.sub_mul_term(&c(4), &m, &g);
        let naive = &f - &g.mul_term(&m, &c(4));
        assert_eq!(fast, naive);
    }
}
