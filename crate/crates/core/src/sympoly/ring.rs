use std::sync::Arc;

use super::order::MonomialOrder;
use crate::error::Result;
use crate::exactmath::Field;

/// A polynomial ring: coefficient field, variable names and active order.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyRing<F: Field> {
    field: F,
    vars: Vec<String>,
    order: MonomialOrder,
}

pub type RingRef<F> = Arc<PolyRing<F>>;

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, vars: Vec<String>, order: MonomialOrder) -> Result<RingRef<F>> {
        order.validate(vars.len())?;
        Ok(Arc::new(Self { field, vars, order }))
    }

    /// Grevlex ring on the given variable names.
    pub fn grevlex(field: F, vars: Vec<String>) -> RingRef<F> {
        Arc::new(Self { field, vars, order: MonomialOrder::Grevlex })
    }

    /// Variables `prefix1, ..., prefix{count}`.
    pub fn indexed_names(prefix: &str, count: usize) -> Vec<String> {
        (1..=count).map(|i| format!("{prefix}{i}")).collect()
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same field and variables under a different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<RingRef<F>> {
        Self::new(self.field.clone(), self.vars.clone(), order)
    }
}
