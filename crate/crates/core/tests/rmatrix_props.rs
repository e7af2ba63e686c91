mod common;

use homlie::exactnum::{frac, int, Matrix};
use homlie::fixtures;
use homlie::rmatrix::{
    cybe_sum, graded_bracket_wedge, induced_dual_bracket, induced_dual_representation, is_r_matrix,
    linear_deformation_transfer, operator_to_tensor, subadjacent_dual, tensor_to_operator,
    weak_homomorphism_check, Multivector,
};
use homlie::sample::Sampler;
use homlie::structures::coadjoint_rep;
use homlie::{Exec, HomLieAlgebra};
use proptest::prelude::*;
use rand::Rng;

fn grid() -> Vec<homlie::Scalar> {
    vec![int(-1), int(0), frac(1, 2), int(1)]
}

fn r_matrix_algebras() -> Vec<(&'static str, HomLieAlgebra)> {
    vec![
        ("A2", fixtures::a2()),
        ("A4", fixtures::a4()),
        ("A5", fixtures::a5()),
        ("A5t", fixtures::a5_twisted()),
    ]
}

#[test]
fn routes_agree_on_grid() {
    let mut found = 0;
    for (name, g) in r_matrix_algebras() {
        let all = common::invariant_grid_tensors(&g, &grid());
        assert!(!all.is_empty());
        for r in all {
            let report = is_r_matrix(&g, &r).unwrap();
            assert!(report.routes_agree(), "{name} {r:?}");
            assert_eq!(
                report.o_operator,
                common::is_r_matrix_by_operator(&g, &r),
                "{name} {r:?}"
            );
            if report.is_r_matrix() {
                found += usize::from(!r.is_zero());
                let dual = induced_dual_bracket(&g, &r).unwrap();
                assert_eq!(
                    dual.upper_brackets(),
                    subadjacent_dual(&g, &r).unwrap().upper_brackets()
                );
                assert!(common::Table::of(&dual).is_hom_lie_all_triples());
                let rho = induced_dual_representation(&g, &r).unwrap();
                assert!(common::is_representation(&rho));
                let co = coadjoint_rep(&dual).unwrap();
                assert_eq!(rho.rho(), co.rho());
                assert_eq!(rho.beta(), co.beta());
            }
        }
    }
    assert!(found > 0);
}

#[test]
fn alternation_of_triple_sum_is_three_brackets() {
    for (name, g) in r_matrix_algebras() {
        for r in common::invariant_grid_tensors(&g, &grid()) {
            let total = cybe_sum(&g, &r).unwrap().total();
            let bracket = graded_bracket_wedge(&g, &r, &r).unwrap();
            assert_eq!(total.alternation(), bracket.scale(&int(3)), "{name} {r:?}");
        }
    }
}

#[test]
fn parallel_triple_sum_matches_sequential() {
    let g = fixtures::a4();
    for r in common::invariant_grid_tensors(&g, &grid())
        .into_iter()
        .take(20)
    {
        assert_eq!(
            homlie::rmatrix::cybe_sum_with(Exec::Sequential, &g, &r).unwrap(),
            homlie::rmatrix::cybe_sum_with(Exec::Parallel, &g, &r).unwrap()
        );
    }
}

#[test]
fn invariant_operators_twist_by_inverse_transpose() {
    for (_, g) in r_matrix_algebras() {
        let a_inv_t = g.alpha_inverse().unwrap().transpose();
        for r in common::invariant_grid_tensors(&g, &grid()) {
            let m = tensor_to_operator(&r).unwrap();
            assert_eq!(g.alpha().mul(&m).unwrap(), m.mul(&a_inv_t).unwrap());
        }
    }
}

#[test]
fn deformation_transfer_routes_agree_on_grid() {
    let g = fixtures::a5_twisted();
    let all = common::invariant_grid_tensors(&g, &grid());
    let rs: Vec<_> = all
        .iter()
        .filter(|r| is_r_matrix(&g, r).unwrap().is_r_matrix())
        .cloned()
        .collect();
    let mut valid = 0;
    for r in &rs {
        for tau in &all {
            let report = linear_deformation_transfer(&g, r, tau).unwrap();
            assert!(report.routes_agree());
            valid += usize::from(report.valid());
        }
    }
    assert!(valid > 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tensor_operator_round_trip(seed in any::<u64>(), n in 1usize..=5) {
        let mut s = Sampler::new(seed);
        let entries: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|p| (p, s.small_scalar())).collect();
        let r = Multivector::two(n, entries).unwrap();
        let m = tensor_to_operator(&r).unwrap();
        prop_assert_eq!(m.transpose(), m.scale(&int(-1)));
        prop_assert_eq!(operator_to_tensor(&m).unwrap(), r);
    }

    #[test]
    fn weak_homomorphism_routes_agree(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let algebras = r_matrix_algebras();
        let (_, g) = &algebras[seed as usize % algebras.len()];
        let n = g.dim();
        let pool = common::invariant_grid_tensors(g, &grid());
        let r1 = pool[s.rng().gen_range(0..pool.len())].clone();
        let r2 = pool[s.rng().gen_range(0..pool.len())].clone();
        let pick = |s: &mut Sampler| match s.rng().gen_range(0..3) {
            0 => Matrix::identity(n),
            1 => Matrix::identity(n).scale(&s.small_scalar()),
            _ => s.grid_matrix(n, n),
        };
        let phi = pick(&mut s);
        let psi = pick(&mut s);
        let report = weak_homomorphism_check(g, &phi, &psi, &r1, &r2).unwrap();
        prop_assert!(report.routes_agree() || !is_r_matrix(g, &r1).unwrap().is_r_matrix() || !is_r_matrix(g, &r2).unwrap().is_r_matrix());
    }
}
