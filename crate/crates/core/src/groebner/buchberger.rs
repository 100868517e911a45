use crate::error::{Error, Result};
use crate::exactmath::Field;
use crate::sympoly::{Monomial, MonomialOrder, MultiPoly, RingRef};

use super::ideal::Ideal;

/// Default cap on the number of S-pairs reduced in one computation.
pub const DEFAULT_PAIR_BUDGET: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GbConfig {
    pub max_pairs: usize,
}

impl Default for GbConfig {
    fn default() -> Self {
        Self { max_pairs: DEFAULT_PAIR_BUDGET }
    }
}

/// Reduced Gröbner basis: monic, interreduced, sorted by increasing leading
/// monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    ring: RingRef<F>,
    elements: Vec<MultiPoly<F>>,
    reduced: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientDim {
    Finite(u64),
    Infinite,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[MultiPoly<F>] {
        &self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|g| g.is_unit())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().filter_map(|g| g.leading_monomial().cloned()).collect()
    }

    pub fn normal_form(&self, f: &MultiPoly<F>) -> Result<MultiPoly<F>> {
        let f = if f.ring().order() == self.ring.order() { f.clone() } else { f.reorder(&self.ring)? };
        let refs: Vec<&MultiPoly<F>> = self.elements.iter().collect();
        Ok(reduce_full(&f, &refs))
    }

    pub fn contains(&self, f: &MultiPoly<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn quotient_dimension(&self) -> QuotientDim {
        quotient_dimension_of(&self.leading_monomials(), self.ring.nvars())
    }

    /// Re-checks the Buchberger criterion: every S-polynomial of two basis
    /// elements reduces to zero.
    pub fn verify_s_pairs(&self) -> bool {
        let refs: Vec<&MultiPoly<F>> = self.elements.iter().collect();
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                let s = s_polynomial(&self.elements[i], &self.elements[j]);
                if !reduce_full(&s, &refs).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Number of standard monomials for the given leading monomials, or
/// `Infinite` when some variable has no pure power among them.
pub fn quotient_dimension_of(leading: &[Monomial], nvars: usize) -> QuotientDim {
    if leading.iter().any(|m| m.is_one()) {
        return QuotientDim::Finite(0);
    }
    let mut has_power = vec![false; nvars];
    for m in leading {
        if let Some(v) = m.pure_power_var() {
            has_power[v] = true;
        }
    }
    if has_power.iter().any(|&h| !h) {
        return QuotientDim::Infinite;
    }
    // each standard monomial is reached once: exponents are raised in
    // non-decreasing variable order, and standard monomials are closed
    // under division
    let mut count = 0u64;
    let mut stack = vec![(vec![0u16; nvars], 0usize)];
    while let Some((exps, from)) = stack.pop() {
        count += 1;
        for v in from..nvars {
            let mut next = exps.clone();
            next[v] += 1;
            let m = Monomial::new(next.clone());
            if !leading.iter().any(|l| l.divides(&m)) {
                stack.push((next, v));
            }
        }
    }
    QuotientDim::Finite(count)
}

pub fn s_polynomial<F: Field>(f: &MultiPoly<F>, g: &MultiPoly<F>) -> MultiPoly<F> {
    let field = f.field();
    let (lf, cf) = f.leading_term().expect("nonzero");
    let (lg, cg) = g.leading_term().expect("nonzero");
    let l = lf.lcm(lg);
    let uf = lf.quotient_of(&l).expect("lcm");
    let ug = lg.quotient_of(&l).expect("lcm");
    let a = f.mul_term(&uf, &field.inv(cf));
    a.sub_mul_term(&field.inv(cg), &ug, g)
}

/// Full reduction of `f` modulo `basis` (every term, not just the leading one).
fn reduce_full<F: Field>(f: &MultiPoly<F>, basis: &[&MultiPoly<F>]) -> MultiPoly<F> {
    let field = f.field().clone();
    let mut p = f.clone();
    let mut rem: Vec<(Monomial, F::Elem)> = Vec::new();
    while let Some((m, c)) = p.leading_term().cloned() {
        let reducer = basis.iter().find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(&m)));
        match reducer {
            Some(g) => {
                let (lm, lc) = g.leading_term().expect("nonzero");
                let q = lm.quotient_of(&m).expect("divides");
                p = p.sub_mul_term(&field.div(&c, lc), &q, g);
            }
            None => {
                rem.push((m, c));
                p = p.tail();
            }
        }
    }
    MultiPoly::from_sorted_unchecked(f.ring(), rem)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Entry<F: Field> {
    poly: MultiPoly<F>,
    sugar: u32,
    active: bool,
}

struct State<'a, F: Field> {
    order: &'a MonomialOrder,
    basis: Vec<Entry<F>>,
    pairs: Vec<Pair>,
}

impl<F: Field> State<'_, F> {
    fn lm(&self, i: usize) -> &Monomial {
        self.basis[i].poly.leading_monomial().expect("basis elements are nonzero")
    }

    fn active_refs(&self) -> Vec<&MultiPoly<F>> {
        self.basis.iter().filter(|e| e.active).map(|e| &e.poly).collect()
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u32 {
        let w = |m: &Monomial| self.order.weighted_degree(m);
        let wl = w(lcm);
        let si = self.basis[i].sugar + wl - w(self.lm(i));
        let sj = self.basis[j].sugar + wl - w(self.lm(j));
        si.max(sj)
    }

    /// Gebauer-Möller update for a new, fully reduced, monic element.
    fn insert(&mut self, poly: MultiPoly<F>, sugar: u32) {
        let h = self.basis.len();
        let lh = poly.leading_monomial().expect("nonzero").clone();
        self.basis.push(Entry { poly, sugar, active: true });

        let candidates: Vec<(usize, Monomial)> =
            (0..h).filter(|&g| self.basis[g].active).map(|g| (g, lh.lcm(self.lm(g)))).collect();

        // criterion M, keeping coprime pairs for the product criterion below
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (k, (g, l)) in candidates.iter().enumerate() {
            let coprime = lh.is_coprime(self.lm(*g));
            let dominated = candidates[k + 1..].iter().any(|(_, l2)| l2.divides(l))
                || kept.iter().any(|(_, l2)| l2.divides(l));
            if coprime || !dominated {
                kept.push((*g, l.clone()));
            }
        }
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !lh.is_coprime(self.lm(*g)))
            .map(|(g, lcm)| {
                let sugar = self.pair_sugar(g, h, &lcm);
                Pair { i: g, j: h, sugar, lcm }
            })
            .collect();

        // criterion B on old pairs
        let old = std::mem::take(&mut self.pairs);
        self.pairs = old
            .into_iter()
            .filter(|p| {
                !(lh.divides(&p.lcm)
                    && lh.lcm(self.lm(p.i)) != p.lcm
                    && lh.lcm(self.lm(p.j)) != p.lcm)
            })
            .collect();
        self.pairs.extend(new_pairs);

        for g in 0..h {
            if self.basis[g].active && lh.divides(self.lm(g)) {
                self.basis[g].active = false;
            }
        }
    }

    fn pop_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            pa.sugar
                .cmp(&pb.sugar)
                .then_with(|| order.cmp(&pa.lcm, &pb.lcm))
                .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
        })?;
        Some(self.pairs.swap_remove(best))
    }
}

fn sugar_of<F: Field>(order: &MonomialOrder, f: &MultiPoly<F>) -> u32 {
    f.terms().iter().map(|(m, _)| order.weighted_degree(m)).max().unwrap_or(0)
}

/// Buchberger's algorithm with the sugar selection strategy and the
/// Gebauer-Möller criteria. Returns the reduced basis, or
/// `Error::Inconclusive` when the pair budget is exhausted.
pub fn buchberger_with<F: Field>(ideal: &Ideal<F>, order: MonomialOrder, config: &GbConfig) -> Result<GroebnerBasis<F>> {
    let ideal = if ideal.ring().order() == &order { ideal.clone() } else { ideal.with_order(order)? };
    let ring = ideal.ring().clone();
    let order = ring.order();

    let mut inputs: Vec<MultiPoly<F>> = ideal.generators().iter().map(|g| g.monic()).collect();
    inputs.sort_by(|a, b| {
        sugar_of(order, a)
            .cmp(&sugar_of(order, b))
            .then_with(|| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()))
    });

    let mut state = State { order, basis: Vec::new(), pairs: Vec::new() };
    for f in inputs {
        let sugar = sugar_of(order, &f);
        let h = reduce_full(&f, &state.active_refs());
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return Ok(unit_basis(&ring));
        }
        state.insert(h.monic(), sugar);
    }

    let mut reductions = 0usize;
    while let Some(pair) = state.pop_pair() {
        reductions += 1;
        if reductions > config.max_pairs {
            return Err(Error::Inconclusive(format!(
                "Gröbner basis computation exceeded the budget of {} pair reductions",
                config.max_pairs
            )));
        }
        let s = s_polynomial(&state.basis[pair.i].poly, &state.basis[pair.j].poly);
        let h = reduce_full(&s, &state.active_refs());
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return Ok(unit_basis(&ring));
        }
        state.insert(h.monic(), pair.sugar);
    }

    // the active elements form a minimal basis; reduce their tails
    let minimal: Vec<MultiPoly<F>> = state.basis.into_iter().filter(|e| e.active).map(|e| e.poly).collect();
    let mut reduced: Vec<MultiPoly<F>> = (0..minimal.len())
        .map(|k| {
            let others: Vec<&MultiPoly<F>> =
                minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, g)| g).collect();
            let (lm, lc) = minimal[k].leading_term().expect("nonzero").clone();
            let tail = reduce_full(&minimal[k].tail(), &others);
            let mut terms = vec![(lm, lc)];
            terms.extend(tail.terms().iter().cloned());
            MultiPoly::from_sorted_unchecked(&ring, terms).monic()
        })
        .collect();
    reduced.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    Ok(GroebnerBasis { ring, elements: reduced, reduced: true })
}

fn unit_basis<F: Field>(ring: &RingRef<F>) -> GroebnerBasis<F> {
    GroebnerBasis { ring: ring.clone(), elements: vec![MultiPoly::one(ring)], reduced: true }
}

/// Normal form of `f` with respect to `gb`.
pub fn normal_form<F: Field>(f: &MultiPoly<F>, gb: &GroebnerBasis<F>) -> Result<MultiPoly<F>> {
    gb.normal_form(f)
}

/// Quotient-space dimension of the ideal with reduced basis `gb`.
pub fn quotient_dimension<F: Field>(gb: &GroebnerBasis<F>) -> QuotientDim {
    gb.quotient_dimension()
}
