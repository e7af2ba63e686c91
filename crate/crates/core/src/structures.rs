//! Finite-dimensional hom-Lie algebras and their representations.

use num_traits::{One, Zero};

use crate::error::{dim_err, Error, Result};
use crate::exactnum::{
    add_vec, axpy, is_zero_vec, sub_vec, unit_vec, zero_vec, Matrix, Scalar, Vector,
};
use crate::report::{check_eq, Failure};

/// A hom-Lie algebra `(g, [·,·], α)` given by structure constants in a fixed
/// basis. Only `[e_i, e_j]` with `i < j` is supplied; the rest of the table is
/// filled in by antisymmetry, so antisymmetry never needs checking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomLieAlgebra {
    dim: usize,
    labels: Vec<String>,
    // consts[i * dim + j] = [e_i, e_j]
    consts: Vec<Vector>,
    alpha: Matrix,
}

impl HomLieAlgebra {
    pub fn new<I>(labels: Vec<String>, alpha: Matrix, brackets: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), Vector)>,
    {
        let dim = labels.len();
        if alpha.rows() != dim || alpha.cols() != dim {
            return Err(dim_err(format!(
                "alpha is {}x{} for a {dim}-dimensional algebra",
                alpha.rows(),
                alpha.cols()
            )));
        }
        let mut consts = vec![zero_vec(dim); dim * dim];
        for ((i, j), v) in brackets {
            if i >= j || j >= dim {
                return Err(Error::Invalid(format!(
                    "bracket key ({i},{j}) must satisfy i < j < {dim}"
                )));
            }
            if v.len() != dim {
                return Err(dim_err(format!(
                    "bracket [{i},{j}] has {} coordinates",
                    v.len()
                )));
            }
            consts[j * dim + i] = v.iter().map(|x| -x).collect();
            consts[i * dim + j] = v;
        }
        Ok(HomLieAlgebra {
            dim,
            labels,
            consts,
            alpha,
        })
    }

    /// Same as [`HomLieAlgebra::new`] with labels `e1, …, en`.
    pub fn with_default_labels<I>(alpha: Matrix, brackets: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), Vector)>,
    {
        let labels = (1..=alpha.rows()).map(|i| format!("e{i}")).collect();
        Self::new(labels, alpha, brackets)
    }

    pub fn abelian(alpha: Matrix) -> Self {
        Self::with_default_labels(alpha, []).expect("square twist")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    /// `[e_i, e_j]` in coordinates.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector {
        &self.consts[i * self.dim + j]
    }

    /// Nonzero brackets `[e_i, e_j]` with `i < j`.
    pub fn upper_brackets(&self) -> Vec<((usize, usize), Vector)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let b = self.bracket_basis(i, j);
                if !is_zero_vec(b) {
                    out.push(((i, j), b.clone()));
                }
            }
        }
        out
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                axpy(&mut out, &(xi * yj), self.bracket_basis(i, j));
            }
        }
        out
    }

    /// Matrix of `ad_x = [x, ·]`.
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim)
            .map(|j| self.bracket(x, &unit_vec(self.dim, j)))
            .collect();
        Matrix::from_columns(&cols, self.dim).expect("square")
    }

    pub fn is_abelian(&self) -> bool {
        self.consts.iter().all(|v| is_zero_vec(v))
    }

    pub fn alpha_inverse(&self) -> Option<Matrix> {
        self.alpha.inverse().expect("alpha is square")
    }

    pub fn is_regular(&self) -> bool {
        self.alpha_inverse().is_some()
    }

    pub(crate) fn alpha_inverse_or_err(&self) -> Result<Matrix> {
        self.alpha_inverse()
            .ok_or_else(|| Error::NonRegular("the algebra twist alpha is singular".into()))
    }

    /// Checks multiplicativity and the hom-Jacobi identity on every basis
    /// pair and triple.
    pub fn verify(&self) -> HomLieReport {
        verify_hom_lie(self)
    }

    /// Whether `phi` is a hom-Lie algebra endomorphism: it preserves the
    /// bracket and commutes with `α`.
    pub fn is_morphism(&self, phi: &Matrix) -> bool {
        if phi.rows() != self.dim || phi.cols() != self.dim {
            return false;
        }
        morphism_failures(self, phi, true).is_empty()
    }
}

fn morphism_failures(g: &HomLieAlgebra, phi: &Matrix, with_twist: bool) -> Vec<Failure> {
    let n = g.dim;
    let mut failures = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = phi.apply(g.bracket_basis(i, j));
            let rhs = g.bracket(&phi.column(i), &phi.column(j));
            check_eq(
                &mut failures,
                "phi[x,y] = [phi x, phi y]",
                &[i, j],
                lhs,
                rhs,
            );
        }
    }
    if with_twist {
        let a = phi.dot(&g.alpha);
        let b = g.alpha.dot(phi);
        for c in 0..n {
            check_eq(
                &mut failures,
                "phi alpha = alpha phi",
                &[c],
                a.column(c),
                b.column(c),
            );
        }
    }
    failures
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomLieReport {
    pub multiplicative: bool,
    pub hom_jacobi: bool,
    pub regular: bool,
    pub failures: Vec<Failure>,
}

impl HomLieReport {
    /// Multiplicative and hom-Jacobi; regularity is informational.
    pub fn is_hom_lie(&self) -> bool {
        self.multiplicative && self.hom_jacobi
    }
}

pub const MULTIPLICATIVITY: &str = "alpha[x,y] = [alpha x, alpha y]";
pub const HOM_JACOBI: &str = "[alpha x,[y,z]] + [alpha y,[z,x]] + [alpha z,[x,y]] = 0";

/// The hom-Jacobi sum is alternating in its three arguments, so strictly
/// increasing triples cover every case.
pub fn verify_hom_lie(g: &HomLieAlgebra) -> HomLieReport {
    let n = g.dim;
    let mut failures = Vec::new();
    let mut multiplicative = true;
    for i in 0..n {
        for j in i + 1..n {
            let lhs = g.alpha.apply(g.bracket_basis(i, j));
            let rhs = g.bracket(&g.alpha.column(i), &g.alpha.column(j));
            multiplicative &= check_eq(&mut failures, MULTIPLICATIVITY, &[i, j], lhs, rhs);
        }
    }
    let mut hom_jacobi = true;
    let ae: Vec<Vector> = (0..n).map(|i| g.alpha.column(i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut s = g.bracket(&ae[i], g.bracket_basis(j, k));
                s = add_vec(&s, &g.bracket(&ae[j], g.bracket_basis(k, i)));
                s = add_vec(&s, &g.bracket(&ae[k], g.bracket_basis(i, j)));
                hom_jacobi &= check_eq(&mut failures, HOM_JACOBI, &[i, j, k], s, zero_vec(n));
            }
        }
    }
    HomLieReport {
        multiplicative,
        hom_jacobi,
        regular: g.is_regular(),
        failures,
    }
}

/// Composition construction: from a Lie algebra (`α = Id`) and a Lie
/// algebra endomorphism `φ`, the hom-Lie algebra `(g, φ∘[·,·], φ)`.
pub fn from_lie_with_morphism(lie: &HomLieAlgebra, phi: &Matrix) -> Result<HomLieAlgebra> {
    let n = lie.dim;
    if lie.alpha != Matrix::identity(n) {
        return Err(Error::Precondition(
            "input must be a Lie algebra (alpha = Id)".into(),
        ));
    }
    if phi.rows() != n || phi.cols() != n {
        return Err(dim_err(format!("phi must be {n}x{n}")));
    }
    let failures = morphism_failures(lie, phi, false);
    if let Some(f) = failures.first() {
        return Err(Error::Precondition(format!(
            "phi is not a Lie algebra morphism (fails at basis pair {:?})",
            f.indices
        )));
    }
    let brackets = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| ((i, j), phi.apply(lie.bracket_basis(i, j))));
    HomLieAlgebra::new(lie.labels.clone(), phi.clone(), brackets)
}

/// A representation `(V, β, ρ)` of a hom-Lie algebra, with `rho[i] = ρ(e_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: HomLieAlgebra,
    beta: Matrix,
    rho: Vec<Matrix>,
}

impl Representation {
    pub fn new(algebra: HomLieAlgebra, beta: Matrix, rho: Vec<Matrix>) -> Result<Self> {
        let m = beta.rows();
        if !beta.is_square() {
            return Err(Error::NotSquare {
                rows: beta.rows(),
                cols: beta.cols(),
            });
        }
        if rho.len() != algebra.dim() {
            return Err(dim_err(format!(
                "{} action matrices for a {}-dimensional algebra",
                rho.len(),
                algebra.dim()
            )));
        }
        if let Some(bad) = rho.iter().position(|r| r.rows() != m || r.cols() != m) {
            return Err(dim_err(format!("rho[{bad}] is not {m}x{m}")));
        }
        Ok(Representation { algebra, beta, rho })
    }

    /// The zero action on `(k^m, β)`.
    pub fn trivial(algebra: HomLieAlgebra, beta: Matrix) -> Self {
        let m = beta.rows();
        let rho = vec![Matrix::zeros(m, m); algebra.dim()];
        Self::new(algebra, beta, rho).expect("consistent shapes")
    }

    pub fn algebra(&self) -> &HomLieAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.beta.rows()
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    pub fn rho(&self) -> &[Matrix] {
        &self.rho
    }

    /// `ρ(x)` for a coordinate vector `x`.
    pub fn action(&self, x: &[Scalar]) -> Matrix {
        let m = self.dim();
        let mut out = Matrix::zeros(m, m);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                out = out.add(&self.rho[i].scale(xi)).expect("same shape");
            }
        }
        out
    }

    /// `{x, v} = ρ(x)(v)`.
    pub fn act(&self, x: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.dim());
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                axpy(&mut out, xi, &self.rho[i].apply(v));
            }
        }
        out
    }

    pub fn beta_inverse(&self) -> Option<Matrix> {
        self.beta.inverse().expect("beta is square")
    }

    pub(crate) fn beta_inverse_or_err(&self) -> Result<Matrix> {
        self.beta_inverse()
            .ok_or_else(|| Error::NonRegular("the representation twist beta is singular".into()))
    }

    /// Whether both the algebra twist and `β` are invertible.
    pub fn is_regular(&self) -> bool {
        self.algebra.is_regular() && self.beta_inverse().is_some()
    }

    pub fn verify(&self) -> RepresentationReport {
        verify_representation(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationReport {
    pub twist_compatible: bool,
    pub module_equation: bool,
    pub failures: Vec<Failure>,
}

impl RepresentationReport {
    pub fn is_representation(&self) -> bool {
        self.twist_compatible && self.module_equation
    }
}

pub const REP_TWIST: &str = "rho(alpha x)(beta v) = beta(rho(x) v)";
pub const REP_MODULE: &str = "rho([x,y])(beta v) = rho(alpha x) rho(y) v - rho(alpha y) rho(x) v";

/// Checks both representation identities on every basis element of `g` and `V`.
pub fn verify_representation(rep: &Representation) -> RepresentationReport {
    let g = &rep.algebra;
    let n = g.dim();
    let m = rep.dim();
    let mut failures = Vec::new();
    let rho_alpha: Vec<Matrix> = (0..n).map(|i| rep.action(&g.alpha.column(i))).collect();

    let mut twist_compatible = true;
    for (i, rho_alpha_i) in rho_alpha.iter().enumerate() {
        let lhs = rho_alpha_i.dot(&rep.beta);
        let rhs = rep.beta.dot(&rep.rho[i]);
        for v in 0..m {
            twist_compatible &= check_eq(
                &mut failures,
                REP_TWIST,
                &[i, v],
                lhs.column(v),
                rhs.column(v),
            );
        }
    }

    let mut module_equation = true;
    for i in 0..n {
        for j in i + 1..n {
            let lhs = rep.action(g.bracket_basis(i, j)).dot(&rep.beta);
            let rhs = rho_alpha[i]
                .dot(&rep.rho[j])
                .sub(&rho_alpha[j].dot(&rep.rho[i]))
                .expect("same shape");
            for v in 0..m {
                module_equation &= check_eq(
                    &mut failures,
                    REP_MODULE,
                    &[i, j, v],
                    lhs.column(v),
                    rhs.column(v),
                );
            }
        }
    }
    RepresentationReport {
        twist_compatible,
        module_equation,
        failures,
    }
}

/// The `α^s`-adjoint representation `(g, α, ad^s)` with `ad^s_x(y) = [α^s x, y]`.
pub fn adjoint_rep(g: &HomLieAlgebra, s: u32) -> Representation {
    let a_s = g.alpha.pow(s).expect("square");
    let rho = (0..g.dim()).map(|i| g.ad(&a_s.column(i))).collect();
    Representation::new(g.clone(), g.alpha.clone(), rho).expect("consistent shapes")
}

/// The dual representation `(V*, (β^{-1})*, ρ⋆)` written in the dual basis
/// `⟨ε_i, e_j⟩ = δ_ij`:
///
/// `⟨ρ⋆(x)ξ, v⟩ = −⟨ξ, ρ(α^{-1}x)(β^{-2}v)⟩`.
pub fn dual_rep(rep: &Representation) -> Result<Representation> {
    let g = &rep.algebra;
    let a_inv = g.alpha_inverse_or_err()?;
    let b_inv = rep.beta_inverse_or_err()?;
    let b_inv2 = b_inv.dot(&b_inv);
    let minus_one = -Scalar::one();
    let rho = (0..g.dim())
        .map(|i| {
            rep.action(&a_inv.column(i))
                .dot(&b_inv2)
                .transpose()
                .scale(&minus_one)
        })
        .collect();
    Representation::new(g.clone(), b_inv.transpose(), rho)
}

/// The coadjoint representation `(g*, (α^{-1})*, ad⋆)`.
pub fn coadjoint_rep(g: &HomLieAlgebra) -> Result<Representation> {
    dual_rep(&adjoint_rep(g, 0))
}

/// The semidirect product `(g ⊕ V, [·,·]_ρ, α + β)` with
/// `[x + v, y + w]_ρ = [x, y] + ρ(x)w − ρ(y)v`. Built for any action; it is a
/// hom-Lie algebra exactly when `rep` is a representation.
pub fn semidirect_product(rep: &Representation) -> HomLieAlgebra {
    let g = &rep.algebra;
    let n = g.dim();
    let m = rep.dim();
    let d = n + m;
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = g.bracket_basis(i, j).clone();
            v.extend(zero_vec(m));
            brackets.push(((i, j), v));
        }
        for w in 0..m {
            // [e_i, v_w] = ρ(e_i) v_w
            let mut v = zero_vec(n);
            v.extend(rep.rho[i].column(w));
            brackets.push(((i, n + w), v));
        }
    }
    let mut labels = g.labels.clone();
    labels.extend((1..=m).map(|k| format!("v{k}")));
    let alpha = g.alpha.direct_sum(&rep.beta);
    debug_assert_eq!(alpha.rows(), d);
    HomLieAlgebra::new(labels, alpha, brackets).expect("consistent shapes")
}

/// `u - v` on coordinate vectors, re-exported for callers building identities.
pub fn difference(u: &[Scalar], v: &[Scalar]) -> Vector {
    sub_vec(u, v)
}
