use crate::error::{Error, Result};
use crate::exactmath::Field;
use crate::sympoly::{MonomialOrder, MultiPoly, PolyRing, RingRef};

use super::buchberger::{buchberger_with, GbConfig, GroebnerBasis};

/// Finitely generated ideal; zero generators are dropped on construction.
#[derive(Clone, Debug)]
pub struct Ideal<F: Field> {
    ring: RingRef<F>,
    generators: Vec<MultiPoly<F>>,
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &RingRef<F>, generators: Vec<MultiPoly<F>>) -> Result<Self> {
        for g in &generators {
            if g.ring().nvars() != ring.nvars() || g.field() != ring.field() {
                return Err(Error::RingMismatch);
            }
        }
        let generators = generators
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| if g.ring().order() == ring.order() { Ok(g) } else { g.reorder(ring) })
            .collect::<Result<_>>()?;
        Ok(Self { ring: ring.clone(), generators })
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn generators(&self) -> &[MultiPoly<F>] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    /// Same ideal with the generators expressed under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Self> {
        let ring = self.ring.with_order(order)?;
        let generators = self.generators.iter().map(|g| g.reorder(&ring)).collect::<Result<_>>()?;
        Ok(Self { ring, generators })
    }

    pub fn groebner_basis(&self, order: MonomialOrder) -> Result<GroebnerBasis<F>> {
        buchberger_with(self, order, &GbConfig::default())
    }

    pub fn add_generators(&self, extra: Vec<MultiPoly<F>>) -> Result<Self> {
        let mut gens = self.generators.clone();
        gens.extend(extra);
        Self::new(&self.ring, gens)
    }
}

/// Reduced Gröbner basis of `ideal` under `order` with the default budget.
pub fn buchberger<F: Field>(ideal: &Ideal<F>, order: MonomialOrder) -> Result<GroebnerBasis<F>> {
    buchberger_with(ideal, order, &GbConfig::default())
}

/// Name of the saturation variable, made unique against the ring's names.
fn fresh_name(ring: &PolyRing<impl Field>, base: &str) -> String {
    let mut name = base.to_string();
    while ring.var_index(&name).is_some() {
        name.push('_');
    }
    name
}

/// The order of `order` extended by one trailing variable of weight 1,
/// outside any elimination block.
fn extend_order(order: &MonomialOrder) -> MonomialOrder {
    match order {
        MonomialOrder::Grevlex => MonomialOrder::Grevlex,
        MonomialOrder::WeightedGrevlex(w) => {
            let mut w = w.clone();
            w.push(1);
            MonomialOrder::WeightedGrevlex(w)
        }
        MonomialOrder::Elimination { block, weights } => {
            let (mut block, mut weights) = (block.clone(), weights.clone());
            block.push(false);
            weights.push(1);
            MonomialOrder::Elimination { block, weights }
        }
    }
}

/// Adjoins a trailing variable `y` and the generator `y*f - 1`. Points of the
/// result project bijectively onto the points of `ideal` where `f != 0`.
pub fn saturate_rabinowitsch<F: Field>(ideal: &Ideal<F>, f: &MultiPoly<F>) -> Result<Ideal<F>> {
    if f.is_zero() {
        return Err(Error::InvalidInput("cannot saturate by the zero polynomial".into()));
    }
    let ring = ideal.ring();
    if f.ring().nvars() != ring.nvars() {
        return Err(Error::RingMismatch);
    }
    let n = ring.nvars();
    let mut vars = ring.vars().to_vec();
    vars.push(fresh_name(ring, "y"));
    let target = PolyRing::new(ring.field().clone(), vars, extend_order(ring.order()))?;
    let map: Vec<Option<usize>> = (0..=n).map(|k| (k < n).then_some(k)).collect();
    let mut gens = ideal
        .generators()
        .iter()
        .map(|g| g.remap(&target, &map))
        .collect::<Result<Vec<_>>>()?;
    let y = MultiPoly::var(&target, n);
    let lifted = f.remap(&target, &map)?;
    gens.push(&(&y * &lifted) - &MultiPoly::one(&target));
    Ideal::new(&target, gens)
}

/// The saturation `I : f^infinity` in the original ring, by eliminating the
/// Rabinowitsch variable.
pub fn saturation<F: Field>(ideal: &Ideal<F>, f: &MultiPoly<F>, config: &GbConfig) -> Result<Ideal<F>> {
    let ext = saturate_rabinowitsch(ideal, f)?;
    let n = ideal.ring().nvars();
    let elim = eliminate_with(&ext, &[n], None, config)?;
    let map: Vec<Option<usize>> = (0..n).map(Some).collect();
    let gens = elim
        .generators()
        .iter()
        .map(|g| g.remap(ideal.ring(), &map))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ideal.ring(), gens)
}

/// Elimination ideal `I ∩ k[vars not in block]`, expressed in the ring of `I`.
pub fn eliminate<F: Field>(ideal: &Ideal<F>, block: &[usize]) -> Result<Ideal<F>> {
    eliminate_with(ideal, block, None, &GbConfig::default())
}

/// As [`eliminate`], with optional per-variable weights for both blocks.
pub fn eliminate_with<F: Field>(
    ideal: &Ideal<F>,
    block: &[usize],
    weights: Option<Vec<u32>>,
    config: &GbConfig,
) -> Result<Ideal<F>> {
    let n = ideal.ring().nvars();
    let mut mask = vec![false; n];
    for &b in block {
        if b >= n {
            return Err(Error::InvalidInput(format!("variable index {b} out of range")));
        }
        mask[b] = true;
    }
    let order = MonomialOrder::weighted_elimination(mask.clone(), weights.unwrap_or_else(|| vec![1; n]))?;
    let gb = buchberger_with(ideal, order, config)?;
    let kept = gb
        .elements()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exps().iter().zip(&mask).all(|(&e, &b)| e == 0 || !b)))
        .map(|g| g.reorder(ideal.ring()))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ideal.ring(), kept)
}
