//! Gröbner bases over a field: Buchberger's algorithm, normal forms,
//! quotient dimensions, Hilbert series of monomial ideals, saturation and
//! elimination.

pub mod buchberger;
pub mod hilbert;
pub mod ideal;

pub use buchberger::{
    buchberger_with, normal_form, quotient_dimension, quotient_dimension_of, s_polynomial, GbConfig, GroebnerBasis,
    QuotientDim, DEFAULT_PAIR_BUDGET,
};
pub use hilbert::{hilbert, hilbert_of_polys, HilbertData};
pub use ideal::{buchberger, eliminate, eliminate_with, saturate_rabinowitsch, saturation, Ideal};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{Field, PrimeField, Rationals};
    use crate::sympoly::{Monomial, MonomialOrder, MultiPoly, PolyRing, RingRef};
    use proptest::prelude::*;
    use rand::{seq::SliceRandom, Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn gf(p: u64, vars: &[&str]) -> RingRef<PrimeField> {
        PolyRing::grevlex(PrimeField::new(p).unwrap(), names(vars))
    }

    fn q(vars: &[&str]) -> RingRef<Rationals> {
        PolyRing::grevlex(Rationals, names(vars))
    }

    fn c<F: Field>(r: &RingRef<F>, v: i64) -> MultiPoly<F> {
        MultiPoly::constant(r, r.field().from_i64(v))
    }

    fn lms<F: Field>(gb: &GroebnerBasis<F>) -> Vec<Vec<u16>> {
        let mut v: Vec<_> = gb.leading_monomials().iter().map(|m| m.exps().to_vec()).collect();
        v.sort();
        v
    }

    #[test]
    fn already_a_basis() {
        let r = q(&["x", "y"]);
        let (x, y) = (MultiPoly::var(&r, 0), MultiPoly::var(&r, 1));
        let i = Ideal::new(&r, vec![&x - &y, &y * &y]).unwrap();
        let gb = buchberger(&i, MonomialOrder::Grevlex).unwrap();
        let shown: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, vec!["x - y", "y^2"]);
        assert_eq!(gb.quotient_dimension(), QuotientDim::Finite(2));
    }

    #[test]
    fn s_pair_produces_cube() {
        let r = gf(7, &["x", "y"]);
        let (x, y) = (MultiPoly::var(&r, 0), MultiPoly::var(&r, 1));
        let i = Ideal::new(&r, vec![&(&x * &x) + &(&y * &y), &x * &y]).unwrap();
        let gb = buchberger(&i, MonomialOrder::Grevlex).unwrap();
        assert_eq!(lms(&gb), vec![vec![0, 3], vec![1, 1], vec![2, 0]]);
        assert!(gb.verify_s_pairs());
    }

    #[test]
    fn unit_ideal() {
        let r = gf(101, &["x", "y"]);
        let x = MultiPoly::var(&r, 0);
        let i = Ideal::new(&r, vec![c(&r, 1), x]).unwrap();
        let gb = buchberger(&i, MonomialOrder::Grevlex).unwrap();
        assert_eq!(gb.elements().len(), 1);
        assert!(gb.is_unit());
        assert_eq!(gb.quotient_dimension(), QuotientDim::Finite(0));
    }

    #[test]
    fn staircase_counts() {
        let m = |e: &[u16]| Monomial::new(e.to_vec());
        assert_eq!(quotient_dimension_of(&[m(&[2, 0]), m(&[0, 3])], 2), QuotientDim::Finite(6));
        assert_eq!(quotient_dimension_of(&[m(&[0, 0])], 2), QuotientDim::Finite(0));
        assert_eq!(quotient_dimension_of(&[m(&[1, 1])], 2), QuotientDim::Infinite);
        assert_eq!(quotient_dimension_of(&[m(&[2, 0]), m(&[1, 1]), m(&[0, 3])], 2), QuotientDim::Finite(4));
    }

    #[test]
    fn hilbert_examples() {
        let m = |e: &[u16]| Monomial::new(e.to_vec());
        let plane = hilbert(&[m(&[1, 0, 0])], 3);
        assert_eq!((plane.dimension, plane.projective_dimension(), plane.degree), (2, 1, 1));
        let fat = hilbert(&[m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 2, 0])], 3);
        assert_eq!((fat.dimension, fat.projective_dimension(), fat.degree), (1, 0, 3));
        let zero = hilbert(&[], 4);
        assert_eq!((zero.numerator.clone(), zero.dimension, zero.degree), (vec![1], 4, 1));
        let unit = hilbert(&[m(&[0, 0])], 2);
        assert_eq!((unit.dimension, unit.projective_degree()), (-1, 0));
    }

    #[test]
    fn rabinowitsch_removes_roots() {
        let r = q(&["x"]);
        let x = MultiPoly::var(&r, 0);
        let i = Ideal::new(&r, vec![&(&x * &x) - &x]).unwrap();
        let sat = saturate_rabinowitsch(&i, &x).unwrap();
        assert_eq!(sat.ring().vars(), &["x".to_string(), "y".to_string()]);
        let gb = buchberger(&sat, MonomialOrder::Grevlex).unwrap();
        assert_eq!(gb.quotient_dimension(), QuotientDim::Finite(1));

        let j = Ideal::new(&r, vec![x.clone()]).unwrap();
        let gb = buchberger(&saturate_rabinowitsch(&j, &x).unwrap(), MonomialOrder::Grevlex).unwrap();
        assert!(gb.is_unit());
        assert_eq!(gb.quotient_dimension(), QuotientDim::Finite(0));
        assert!(saturate_rabinowitsch(&j, &MultiPoly::zero(&r)).is_err());
    }

    #[test]
    fn saturation_stays_in_ring() {
        let r = q(&["x", "y"]);
        let (x, y) = (MultiPoly::var(&r, 0), MultiPoly::var(&r, 1));
        // <x*y> : x^inf = <y>
        let i = Ideal::new(&r, vec![&x * &y]).unwrap();
        let s = saturation(&i, &x, &GbConfig::default()).unwrap();
        let shown: Vec<String> = s.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, vec!["y"]);
    }

    #[test]
    fn elimination_examples() {
        let r = q(&["t", "x", "y"]);
        let (t, x, y) = (MultiPoly::var(&r, 0), MultiPoly::var(&r, 1), MultiPoly::var(&r, 2));
        let par = Ideal::new(&r, vec![&x - &t, &y - &(&t * &t)]).unwrap();
        let e = eliminate(&par, &[0]).unwrap();
        let shown: Vec<String> = e.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, vec!["x^2 - y"]);

        let torus = Ideal::new(&r, vec![&(&t * &x) - &c(&r, 1)]).unwrap();
        assert!(eliminate(&torus, &[0]).unwrap().is_zero_ideal());

        let same = Ideal::new(&r, vec![&x - &(&t * &t), &y - &(&t * &t)]).unwrap();
        let e = eliminate(&same, &[0]).unwrap();
        let shown: Vec<String> = e.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, vec!["x - y"]);
    }

    #[test]
    fn budget_is_reported() {
        let r = gf(32003, &["x", "y", "z"]);
        let v = |i| MultiPoly::var(&r, i);
        let i = Ideal::new(&r, vec![&(&v(0) * &v(1)) - &v(2), &(&v(1) * &v(2)) - &v(0), &(&v(2) * &v(0)) - &v(1)]).unwrap();
        let tiny = GbConfig { max_pairs: 1 };
        assert!(matches!(buchberger_with(&i, MonomialOrder::Grevlex, &tiny), Err(crate::Error::Inconclusive(_))));
        assert!(buchberger_with(&i, MonomialOrder::Grevlex, &GbConfig::default()).is_ok());
    }

    const P: u64 = 32003;

    fn random_ideal(seed: u64, nvars: usize, ngens: usize) -> Ideal<PrimeField> {
        let r = PolyRing::grevlex(PrimeField::new(P).unwrap(), PolyRing::<PrimeField>::indexed_names("x", nvars));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = *r.field();
        let gens = (0..ngens)
            .map(|_| {
                let terms: Vec<_> = (0..rng.gen_range(2..5))
                    .map(|_| (Monomial::new((0..nvars).map(|_| rng.gen_range(0..3)).collect()), f.sample(&mut rng, 0)))
                    .collect();
                MultiPoly::from_terms(&r, terms).unwrap()
            })
            .collect();
        Ideal::new(&r, gens).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn reduced_basis_passes_criterion(seed in any::<u64>(), nvars in 2usize..4, ngens in 1usize..4) {
            let i = random_ideal(seed, nvars, ngens);
            let gb = buchberger(&i, MonomialOrder::Grevlex).unwrap();
            prop_assert!(gb.verify_s_pairs());
            for g in i.generators() {
                prop_assert!(gb.contains(g).unwrap());
            }
        }

        #[test]
        fn reduced_basis_is_unique(seed in any::<u64>(), nvars in 2usize..4, ngens in 2usize..4) {
            let i = random_ideal(seed, nvars, ngens);
            let gb = buchberger(&i, MonomialOrder::Grevlex).unwrap();
            let mut gens = i.generators().to_vec();
            gens.shuffle(&mut ChaCha8Rng::seed_from_u64(seed ^ 0x5eed));
            let j = Ideal::new(i.ring(), gens).unwrap();
            let gb2 = buchberger(&j, MonomialOrder::Grevlex).unwrap();
            prop_assert_eq!(gb.elements(), gb2.elements());
        }

        #[test]
        fn univariate_root_count(roots in proptest::collection::btree_set(0u64..P, 1..8)) {
            let r = gf(P, &["x"]);
            let x = MultiPoly::var(&r, 0);
            let f = roots.iter().fold(MultiPoly::one(&r), |acc, &a| &acc * &(&x - &MultiPoly::constant(&r, a)));
            let gb = buchberger(&Ideal::new(&r, vec![f]).unwrap(), MonomialOrder::Grevlex).unwrap();
            prop_assert_eq!(gb.quotient_dimension(), QuotientDim::Finite(roots.len() as u64));
        }

        #[test]
        fn hilbert_function_matches_brute_force(
            gens in proptest::collection::vec(proptest::collection::vec(0u16..4, 3), 1..5)
        ) {
            let monos: Vec<Monomial> = gens.into_iter().map(Monomial::new).collect();
            let h = hilbert(&monos, 3);
            let values = h.hilbert_function(14);
            for (d, &v) in values.iter().enumerate() {
                let mut count = 0;
                for a in 0..=d {
                    for b in 0..=d - a {
                        let m = Monomial::new(vec![a as u16, b as u16, (d - a - b) as u16]);
                        if !monos.iter().any(|g| g.divides(&m)) {
                            count += 1;
                        }
                    }
                }
                prop_assert_eq!(v, count);
            }
        }

        #[test]
        fn elimination_ideal_lies_in_ideal(seed in any::<u64>()) {
            let i = random_ideal(seed, 3, 2);
            let e = eliminate(&i, &[0]).unwrap();
            let gb = buchberger(&i, MonomialOrder::Grevlex).unwrap();
            for g in e.generators() {
                prop_assert!(gb.contains(g).unwrap());
                prop_assert_eq!(g.terms().iter().all(|(m, _)| m.exps()[0] == 0), true);
            }
        }
    }
}
