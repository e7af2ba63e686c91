mod common;

use homlie::cochain::Complex;
use homlie::exactnum::Matrix;
use homlie::fixtures;
use homlie::graded::{check_maurer_cartan, nr_bracket, DerivedBracket};
use homlie::ooperator::OOperatorContext;
use homlie::sample::Sampler;
use homlie::structures::{adjoint_rep, coadjoint_rep, semidirect_product};
use homlie::{Representation, Scalar};
use num_traits::One;
use proptest::prelude::*;

fn regular_reps() -> Vec<(&'static str, Representation)> {
    let mut out = Vec::new();
    for (name, g) in fixtures::catalog() {
        if !g.is_regular() || g.dim() > 3 {
            continue;
        }
        out.push((name, adjoint_rep(&g, 0)));
        out.push((name, adjoint_rep(&g, 1)));
        out.push((name, coadjoint_rep(&g).unwrap()));
    }
    out
}

/// Compatible cochains on the module side: the O-operator complex of `T = 0`
/// has exactly the cochains the derived bracket acts on.
fn module_complex(rep: &Representation) -> Complex {
    let zero = Matrix::zeros(rep.algebra().dim(), rep.dim());
    OOperatorContext::new(rep, &zero).unwrap().complex().clone()
}

#[test]
fn derived_bracket_matches_expanded_formula() {
    let mut s = Sampler::new(11);
    for (name, rep) in regular_reps() {
        let db = DerivedBracket::new(&rep);
        let complex = module_complex(&rep);
        for (a, b) in [(1, 1), (1, 2), (2, 1)] {
            for _ in 0..3 {
                let p = s.compatible_cochain(&complex, a);
                let q = s.compatible_cochain(&complex, b);
                let lhs = db.bracket(&p, &q).unwrap();
                let rhs = common::expanded_derived_bracket(&rep, &p, &q);
                assert_eq!(lhs, rhs, "{name} arities ({a},{b})");
            }
        }
    }
}

#[test]
fn square_of_operator_formula() {
    let mut s = Sampler::new(5);
    for (name, rep) in regular_reps() {
        let db = DerivedBracket::new(&rep);
        let complex = module_complex(&rep);
        for _ in 0..4 {
            let t = s.compatible_cochain(&complex, 1);
            let tm = t.to_matrix().unwrap();
            assert_eq!(
                db.bracket(&t, &t).unwrap(),
                common::square_of_operator(&rep, &tm),
                "{name}"
            );
        }
    }
}

#[test]
fn maurer_cartan_matches_axioms_on_candidates() {
    let mut s = Sampler::new(17);
    for _ in 0..60 {
        let rep = s.candidate(3);
        let mc = check_maurer_cartan(&rep).is_maurer_cartan();
        let axioms = rep.algebra().verify().is_hom_lie() && rep.verify().is_representation();
        assert_eq!(mc, axioms);
        assert_eq!(
            axioms,
            common::is_representation(&rep) && rep.algebra().verify().is_hom_lie()
        );
        assert_eq!(semidirect_product(&rep).verify().is_hom_lie(), axioms);
    }
}

fn sign(k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn nr_bracket_graded_antisymmetry_and_jacobi(seed in any::<u64>(), a in 1usize..=3, b in 1usize..=2, c in 1usize..=2, dim in 2usize..=3) {
        let mut s = Sampler::new(seed);
        let twist = if seed % 2 == 0 { Matrix::identity(dim) } else { s.invertible(dim) };
        let rep = Representation::new(homlie::HomLieAlgebra::abelian(twist.clone()), twist.clone(), vec![Matrix::zeros(dim, dim); dim]).unwrap();
        let complex = Complex::new(rep);
        let p = s.compatible_cochain(&complex, a);
        let q = s.compatible_cochain(&complex, b);
        let r = s.compatible_cochain(&complex, c);
        let (dp, dq) = (a - 1, b - 1);
        let pq = nr_bracket(&p, &q, &twist).unwrap();
        let qp = nr_bracket(&q, &p, &twist).unwrap();
        prop_assert_eq!(pq.clone(), qp.scale(&-sign(dp * dq)));
        let t1 = nr_bracket(&p, &nr_bracket(&q, &r, &twist).unwrap(), &twist).unwrap();
        let t2 = nr_bracket(&pq, &r, &twist).unwrap();
        let t3 = nr_bracket(&q, &nr_bracket(&p, &r, &twist).unwrap(), &twist).unwrap();
        prop_assert_eq!(t1, t2.add(&t3.scale(&sign(dp * dq))).unwrap());
    }

    #[test]
    fn derived_bracket_graded_antisymmetry_and_jacobi(seed in any::<u64>(), which in 0usize..4, a in 1usize..=3, b in 1usize..=2, c in 1usize..=2) {
        let reps = regular_reps();
        let (_, rep) = &reps[(seed as usize + which) % reps.len()];
        let mut s = Sampler::new(seed);
        let complex = module_complex(rep);
        let db = DerivedBracket::new(rep);
        let p = s.compatible_cochain(&complex, a);
        let q = s.compatible_cochain(&complex, b);
        let r = s.compatible_cochain(&complex, c);
        let pq = db.bracket(&p, &q).unwrap();
        prop_assert_eq!(pq.clone(), db.bracket(&q, &p).unwrap().scale(&-sign(a * b)));
        let t1 = db.bracket(&p, &db.bracket(&q, &r).unwrap()).unwrap();
        let t2 = db.bracket(&pq, &r).unwrap();
        let t3 = db.bracket(&q, &db.bracket(&p, &r).unwrap()).unwrap();
        prop_assert_eq!(t1, t2.add(&t3.scale(&sign(a * b))).unwrap());
    }
}
