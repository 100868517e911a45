//! ML-degree engines: modular critical-point counts with consensus, closed
//! forms for hyperplanes and diagonal spaces, the randomized zero test, and
//! degrees of reciprocal varieties.

pub mod critical;
pub mod dispatch;
pub mod reciprocal;
pub mod report;
pub mod zero;

pub use critical::{critical_ideal, hyperplane_mld, ml_degree_critical, ml_degree_critical_with, Parametrization};
pub use dispatch::{intersection, ml_degree, reciprocal_degree, EngineChoice, MlConfig, ReciprocalMethod, MAX_PRIME_ATTEMPTS};
pub use reciprocal::{
    intersection_degree, reciprocal_degree_implicit, reciprocal_degree_slice, reciprocal_degree_slice_with,
    reciprocal_ideal, sigma_names, sigma_ring, SliceSide,
};
pub use report::{MLReport, MlValue, TrialRecord, ZeroTestReport};
pub use zero::{invisible_direction, zero_test};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rational_from_i64, PrimeField, Rational, SymMatrix};
    use crate::groebner::{GbConfig, QuotientDim};
    use crate::spaces::{diagonal_space, graph_to_space, LinearMatrixSpace, Pencil, Role};

    const P: u64 = 1_000_003;

    fn sym(rows: &[&[i64]]) -> SymMatrix {
        SymMatrix::from_i64_rows(rows).unwrap()
    }

    fn space(n: usize, mats: Vec<SymMatrix>) -> LinearMatrixSpace {
        LinearMatrixSpace::new(n, mats, Role::Model).unwrap()
    }

    fn count(space: &LinearMatrixSpace, param: Parametrization) -> u64 {
        match ml_degree_critical_with(space, P, 11, param, &GbConfig::default()).unwrap() {
            QuotientDim::Finite(c) => c,
            QuotientDim::Infinite => panic!("positive-dimensional"),
        }
    }

    fn slice(space: &LinearMatrixSpace, side: SliceSide) -> u64 {
        match reciprocal_degree_slice_with(space, P, 5, side, &GbConfig::default()).unwrap() {
            QuotientDim::Finite(c) => c,
            QuotientDim::Infinite => panic!("positive-dimensional"),
        }
    }

    const PENCILS: [&str; 5] = ["[1 1 1]", "[2 1]", "[(1 1) 1]", "[3]", "[(2 1)]"];

    #[test]
    fn pencils_as_models() {
        let mld = [2, 1, 1, 0, 0];
        let deg = [2, 2, 1, 2, 1];
        for (k, sym) in PENCILS.iter().enumerate() {
            let l = Pencil::representative(sym).unwrap().to_space(Role::Model);
            assert_eq!(count(&l, Parametrization::Model), mld[k], "{sym}");
            assert_eq!(count(&l, Parametrization::Annihilator), mld[k], "{sym}");
            assert_eq!(slice(&l, SliceSide::Concentration), deg[k], "{sym}");
            assert_eq!(slice(&l, SliceSide::Covariance), deg[k], "{sym}");
        }
    }

    #[test]
    fn polars_of_pencils() {
        let symbols = ["[1 1 1]", "[2 1]", "[(1 1) 1]", "[3]", "[(2 1)]", "[;1;]", "[1 1;;1]", "[2;;1]"];
        let mld = [4, 3, 2, 2, 1, 1, 1, 0];
        let deg = [4, 4, 4, 4, 4, 1, 4, 1];
        for (k, sym) in symbols.iter().enumerate() {
            let l = Pencil::representative(sym).unwrap().to_space(Role::Annihilator).annihilator();
            assert_eq!(l.dim(), 4);
            assert_eq!(count(&l, Parametrization::Auto), mld[k], "{sym}");
            assert_eq!(slice(&l, SliceSide::Auto), deg[k], "{sym}");
        }
    }

    #[test]
    fn four_cycle() {
        let l = graph_to_space(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        assert_eq!(count(&l, Parametrization::Annihilator), 5);
        assert_eq!(slice(&l, SliceSide::Covariance), 9);
    }

    #[test]
    fn hyperplanes() {
        for r in 1..=3 {
            let diag: Vec<Rational> = (0..3).map(|i| rational_from_i64((i < r) as i64)).collect();
            let l = LinearMatrixSpace::new(3, vec![SymMatrix::diagonal(&diag)], Role::Annihilator).unwrap().annihilator();
            assert_eq!(hyperplane_mld(&SymMatrix::diagonal(&diag)).unwrap(), r as u64 - 1);
            assert_eq!(count(&l, Parametrization::Annihilator), r as u64 - 1);
            assert_eq!(slice(&l, SliceSide::Auto), 2);
        }
        assert!(hyperplane_mld(&SymMatrix::zero(3)).is_err());
    }

    #[test]
    fn zero_test_examples() {
        let f = space(3, vec![sym(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]), sym(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 0]]), sym(&[&[0, 0, 1], &[0, 0, 1], &[1, 1, 0]])]);
        assert!(zero_test(&f, P, 3, 1).unwrap().is_zero);
        let generic = Pencil::representative("[1 1 1]").unwrap().to_space(Role::Model);
        let report = zero_test(&generic, P, 3, 1).unwrap();
        assert!(!report.is_zero);
        assert_eq!(report.witnesses.len(), 1);
        let singular = space(2, vec![sym(&[&[1, 0], &[0, 0]])]);
        assert_eq!(zero_test(&singular, P, 3, 1), Err(crate::Error::NonRegular));
        let full = LinearMatrixSpace::full(2);
        assert!(!zero_test(&full, P, 1, 1).unwrap().is_zero);
    }

    #[test]
    fn invisible_directions() {
        let f = space(3, vec![sym(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]), sym(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 0]]), sym(&[&[0, 0, 1], &[0, 0, 1], &[1, 1, 0]])]);
        let k = invisible_direction(&f).unwrap().unwrap();
        assert!(f.contains(&k));
        assert!(k.is_diagonal());
        assert_eq!(k.get(2, 2), &rational_from_i64(0));
        assert_eq!(k.get(0, 0), &-k.get(1, 1).clone());
        let generic = Pencil::representative("[1 1 1]").unwrap().to_space(Role::Model);
        assert_eq!(invisible_direction(&generic).unwrap(), None);
    }

    #[test]
    fn dispatcher_engines() {
        let config = MlConfig::default();
        let f = space(3, vec![sym(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]), sym(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 0]]), sym(&[&[0, 0, 1], &[0, 0, 1], &[1, 1, 0]])]);
        let r = ml_degree(&f, &config).unwrap();
        assert_eq!((r.value, r.engine.as_str()), (MlValue::Count(0), "zero_test"));
        assert_eq!(ml_degree(&LinearMatrixSpace::full(3), &config).unwrap().engine, "trivial");
        let d = diagonal_space(3, &[vec![rational_from_i64(1), rational_from_i64(1), rational_from_i64(1)]]).unwrap();
        assert_eq!(ml_degree(&d, &config).unwrap().value, MlValue::Count(2));
        let cycle = graph_to_space(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let r = ml_degree(&cycle, &config).unwrap();
        assert_eq!(r.value, MlValue::Count(5));
        assert_eq!(r.engine, "critical");
        assert!(r.consensus >= 2);
        let mut primes: Vec<u64> = r.trials.iter().map(|t| t.prime).collect();
        primes.dedup();
        assert_eq!(primes.len(), r.trials.len());
        let singular = space(2, vec![sym(&[&[1, 0], &[0, 0]])]);
        assert_eq!(ml_degree(&singular, &config), Err(crate::Error::NonRegular));
    }

    #[test]
    fn consensus_is_reproducible() {
        let l = Pencil::representative("[2 1]").unwrap().to_space(Role::Model);
        let config = MlConfig { engine: EngineChoice::Critical, seed: 42, ..MlConfig::default() };
        assert_eq!(ml_degree(&l, &config).unwrap(), ml_degree(&l, &config).unwrap());
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let cycle = graph_to_space(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let config = MlConfig { engine: EngineChoice::Critical, gb: GbConfig { max_pairs: 1 }, ..MlConfig::default() };
        let r = ml_degree(&cycle, &config).unwrap();
        assert_eq!(r.value, MlValue::Inconclusive);
        assert_eq!(r.trials.len(), 5);
        assert!(r.trials.iter().all(|t| t.count.is_none()));
    }

    #[test]
    fn reciprocal_methods_agree() {
        let config = MlConfig::default();
        let l = Pencil::representative("[(1 1) 1]").unwrap().to_space(Role::Annihilator).annihilator();
        let a = reciprocal_degree(&l, ReciprocalMethod::Slice, &config).unwrap();
        let b = reciprocal_degree(&l, ReciprocalMethod::Implicitize, &config).unwrap();
        assert_eq!(a.value, MlValue::Count(4));
        assert_eq!(b.value, MlValue::Count(4));
        let d = diagonal_space(4, &[vec![1, 1, 1, 0].into_iter().map(rational_from_i64).collect()]).unwrap();
        let r = reciprocal_degree(&d, ReciprocalMethod::Slice, &config).unwrap();
        assert_eq!((r.value, r.engine.as_str()), (MlValue::Count(2), "diagonal"));
    }

    #[test]
    fn reciprocal_ideal_of_a_pencil() {
        let field = PrimeField::new(P).unwrap();
        let l = Pencil::representative("[1 1 1]").unwrap().to_space(Role::Model);
        let ideal = reciprocal_ideal(&l, &field, &GbConfig::default()).unwrap();
        assert_eq!(ideal.ring().vars(), sigma_names(3).as_slice());
        assert!(ideal.ring().vars().contains(&"s12".to_string()));
        assert!(ideal.generators().iter().all(|g| g.is_homogeneous()));
        assert_eq!(reciprocal_degree_implicit(&l, &field, &GbConfig::default()).unwrap(), 2);
    }

    #[test]
    fn intersections() {
        let field = PrimeField::new(P).unwrap();
        let l = Pencil::representative("[(1 1) 1]").unwrap().to_space(Role::Annihilator).annihilator();
        let h = intersection_degree(&l, &field, &GbConfig::default()).unwrap();
        assert_eq!((h.projective_dimension(), h.projective_degree()), (0, 1));
        let d = diagonal_space(3, &[vec![1, 1, 1].into_iter().map(rational_from_i64).collect()]).unwrap();
        let h = intersection_degree(&d, &field, &GbConfig::default()).unwrap();
        assert_eq!(h.projective_degree(), 0);
        assert!(h.projective_dimension() < 0);
    }
}
