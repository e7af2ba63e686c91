//! Small named hom-Lie algebras used throughout tests, benches and examples.

use crate::exactnum::{frac, int, Matrix};
use crate::structures::{adjoint_rep, semidirect_product, HomLieAlgebra};

/// Abelian, dimension 2, `α = Id`.
pub fn a1() -> HomLieAlgebra {
    HomLieAlgebra::abelian(Matrix::identity(2))
}

/// The affine algebra: `[e1,e2] = e2`, `α = Id`.
pub fn a2() -> HomLieAlgebra {
    HomLieAlgebra::with_default_labels(Matrix::identity(2), [((0, 1), vec![int(0), int(1)])])
        .unwrap()
}

/// Twisted affine algebra: `[e1,e2] = 2e2`, `α = diag(1,2)`.
pub fn a3() -> HomLieAlgebra {
    HomLieAlgebra::with_default_labels(
        Matrix::diag(&[int(1), int(2)]),
        [((0, 1), vec![int(0), int(2)])],
    )
    .unwrap()
}

/// `sl2` in the basis `h, e, f`.
pub fn a4() -> HomLieAlgebra {
    HomLieAlgebra::new(
        vec!["h".into(), "e".into(), "f".into()],
        Matrix::identity(3),
        [
            ((0, 1), vec![int(0), int(2), int(0)]),
            ((0, 2), vec![int(0), int(0), int(-2)]),
            ((1, 2), vec![int(1), int(0), int(0)]),
        ],
    )
    .unwrap()
}

/// Heisenberg: `[e1,e2] = e3`, `α = Id`.
pub fn a5() -> HomLieAlgebra {
    HomLieAlgebra::with_default_labels(
        Matrix::identity(3),
        [((0, 1), vec![int(0), int(0), int(1)])],
    )
    .unwrap()
}

/// Heisenberg twisted by the automorphism `diag(2, 1/2, 1)`.
pub fn a5_twisted() -> HomLieAlgebra {
    HomLieAlgebra::with_default_labels(
        Matrix::diag(&[int(2), frac(1, 2), int(1)]),
        [((0, 1), vec![int(0), int(0), int(1)])],
    )
    .unwrap()
}

/// `aff(1) ⋉ aff(1)` through the adjoint action, dimension 4.
pub fn a2_semidirect() -> HomLieAlgebra {
    semidirect_product(&adjoint_rep(&a2(), 0))
}

pub fn catalog() -> Vec<(&'static str, HomLieAlgebra)> {
    vec![
        ("A1", a1()),
        ("A2", a2()),
        ("A3", a3()),
        ("A4", a4()),
        ("A5", a5()),
        ("A5t", a5_twisted()),
        ("A2xA2", a2_semidirect()),
    ]
}

pub fn by_name(name: &str) -> Option<HomLieAlgebra> {
    catalog()
        .into_iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .map(|(_, g)| g)
}
