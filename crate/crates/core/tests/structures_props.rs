mod common;

use common::Table;
use homlie::exactnum::{int, Matrix};
use homlie::fixtures;
use homlie::sample::{transport_algebra, transport_rep, Sampler};
use homlie::structures::{
    adjoint_rep, coadjoint_rep, dual_rep, from_lie_with_morphism, semidirect_product, HOM_JACOBI,
    MULTIPLICATIVITY,
};
use proptest::prelude::*;
use rand::Rng;

#[test]
fn catalog_is_hom_lie_by_both_routes() {
    for (name, g) in fixtures::catalog() {
        let report = g.verify();
        assert!(report.is_hom_lie(), "{name}: {:?}", report.failures);
        assert!(Table::of(&g).is_hom_lie_all_triples(), "{name}");
    }
}

#[test]
fn every_single_mutation_agrees_with_oracle() {
    for (name, g) in fixtures::catalog() {
        let n = g.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    for delta in [int(1), int(-2)] {
                        let h = common::mutate(&g, i, j, k, &delta);
                        let report = h.verify();
                        let t = Table::of(&h);
                        let expected_pairs = t.multiplicativity_failures();
                        let expected_triples = t.jacobi_failures();
                        let got_pairs: Vec<_> = report
                            .failures
                            .iter()
                            .filter(|f| f.condition == MULTIPLICATIVITY)
                            .map(|f| f.indices.clone())
                            .collect();
                        let got_triples: Vec<_> = report
                            .failures
                            .iter()
                            .filter(|f| f.condition == HOM_JACOBI)
                            .map(|f| f.indices.clone())
                            .collect();
                        assert_eq!(got_pairs, expected_pairs, "{name} ({i},{j})_{k}");
                        assert_eq!(got_triples, expected_triples, "{name} ({i},{j})_{k}");
                        assert_eq!(report.is_hom_lie(), t.is_hom_lie_all_triples());
                    }
                }
            }
        }
    }
}

#[test]
fn standard_representations_pass_oracle() {
    for (name, g) in fixtures::catalog() {
        for s in 0..3 {
            let rep = adjoint_rep(&g, s);
            assert!(rep.verify().is_representation(), "{name} s={s}");
            assert!(common::is_representation(&rep), "{name} s={s}");
        }
        if g.is_regular() {
            let co = coadjoint_rep(&g).unwrap();
            assert!(co.verify().is_representation(), "{name}");
            assert!(common::is_representation(&co), "{name}");
            let d = dual_rep(&adjoint_rep(&g, 1)).unwrap();
            assert!(common::is_representation(&d), "{name}");
            assert!(semidirect_product(&co).verify().is_hom_lie(), "{name}");
        } else {
            assert!(coadjoint_rep(&g).is_err(), "{name}");
        }
    }
}

#[test]
fn double_dual_is_isomorphic_to_original() {
    for (name, g) in fixtures::catalog() {
        if !g.is_regular() {
            continue;
        }
        let rep = adjoint_rep(&g, 1);
        let dd = dual_rep(&dual_rep(&rep).unwrap()).unwrap();
        assert_eq!(dd.beta(), rep.beta(), "{name}");
        assert_eq!(dd.rho(), rep.rho(), "{name}");
    }
}

#[test]
fn composition_construction() {
    let sl2 = fixtures::a4();
    let phi = Matrix::from_i64(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 1]]);
    assert!(from_lie_with_morphism(&sl2, &phi).is_err());
    let mut twist = Matrix::identity(3);
    twist[(1, 1)] = int(3);
    twist[(2, 2)] = homlie::exactnum::frac(1, 3);
    let h = from_lie_with_morphism(&sl2, &twist).unwrap();
    assert!(h.verify().is_hom_lie());
    assert!(Table::of(&h).is_hom_lie_all_triples());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn semidirect_equivalence(seed in any::<u64>()) {
        let rep = Sampler::new(seed).candidate(3);
        let by_axioms = rep.verify().is_representation();
        prop_assert_eq!(by_axioms, common::is_representation(&rep));
        prop_assert_eq!(by_axioms, semidirect_product(&rep).verify().is_hom_lie());
    }

    #[test]
    fn transport_preserves_structures(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let g = s.algebra(4);
        let q = s.invertible(g.dim());
        let h = transport_algebra(&g, &q);
        prop_assert!(h.verify().is_hom_lie());
        let rep = transport_rep(&adjoint_rep(&h, 1), &s.invertible(h.dim()));
        prop_assert!(common::is_representation(&rep));
    }

    #[test]
    fn failures_reproduce(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let g = s.algebra(4);
        let n = g.dim();
        if n < 2 {
            return Ok(());
        }
        let i = s.rng().gen_range(0..n - 1);
        let j = s.rng().gen_range(i + 1..n);
        let k = s.rng().gen_range(0..n);
        let h = common::mutate(&g, i, j, k, &s.nonzero_scalar());
        let t = Table::of(&h);
        for f in h.verify().failures {
            if f.condition == HOM_JACOBI {
                prop_assert!(t.jacobiator(f.indices[0], f.indices[1], f.indices[2]) == f.lhs);
            } else {
                let (a, b) = (f.indices[0], f.indices[1]);
                let e = |x| homlie::exactnum::unit_vec(n, x);
                prop_assert!(t.twist(&t.br(&e(a), &e(b))) == f.lhs);
                prop_assert!(t.br(&t.twist(&e(a)), &t.twist(&e(b))) == f.rhs);
            }
        }
    }
}
