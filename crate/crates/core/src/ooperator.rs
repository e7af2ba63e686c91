//! O-operators and Rota–Baxter operators, their characterizations, and the
//! structures an O-operator induces.

use num_traits::Zero;

use crate::cochain::{Cochain, CohomologyDims, Complex};
use crate::error::{dim_err, Error, Result};
use crate::exactnum::{add_vec, sub_vec, unit_vec, zero_vec, Matrix, Scalar, Vector};
use crate::graded::DerivedBracket;
use crate::report::{check_eq, Failure};
use crate::structures::{adjoint_rep, semidirect_product, HomLieAlgebra, Representation};

fn check_operator(rep: &Representation, t: &Matrix) -> Result<()> {
    let (n, m) = (rep.algebra().dim(), rep.dim());
    if t.rows() != n || t.cols() != m {
        return Err(dim_err(format!(
            "operator is {}x{}, expected {n}x{m}",
            t.rows(),
            t.cols()
        )));
    }
    Ok(())
}

fn check_endo(dim: usize, m: &Matrix, what: &str) -> Result<()> {
    if m.rows() != dim || m.cols() != dim {
        return Err(dim_err(format!(
            "{what} is {}x{}, expected {dim}x{dim}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

/// Outcome of a predicate made of one or more identities checked on basis
/// tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub holds: bool,
    pub failures: Vec<Failure>,
}

impl IdentityReport {
    fn from_failures(failures: Vec<Failure>) -> Self {
        IdentityReport {
            holds: failures.is_empty(),
            failures,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OOperatorReport {
    /// `T∘β = α∘T`.
    pub intertwining: bool,
    /// `[Tu,Tv] = T({Tu,v} − {Tv,u})`.
    pub o_identity: bool,
    pub failures: Vec<Failure>,
}

impl OOperatorReport {
    pub fn is_o_operator(&self) -> bool {
        self.intertwining && self.o_identity
    }
}

pub const INTERTWINING: &str = "T(beta v) = alpha(T v)";
pub const O_IDENTITY: &str = "[Tu,Tv] = T({Tu,v} - {Tv,u})";

/// Whether `T: V → g` is an O-operator with respect to `rep`.
pub fn is_o_operator(rep: &Representation, t: &Matrix) -> Result<OOperatorReport> {
    check_operator(rep, t)?;
    let g = rep.algebra();
    let m = rep.dim();
    let mut failures = Vec::new();
    let tb = t.dot(rep.beta());
    let at = g.alpha().dot(t);
    let mut intertwining = true;
    for v in 0..m {
        intertwining &= check_eq(
            &mut failures,
            INTERTWINING,
            &[v],
            tb.column(v),
            at.column(v),
        );
    }
    let images: Vec<Vector> = (0..m).map(|v| t.column(v)).collect();
    let mut o_identity = true;
    for u in 0..m {
        for v in u + 1..m {
            let lhs = g.bracket(&images[u], &images[v]);
            let inner = sub_vec(
                &rep.act(&images[u], &unit_vec(m, v)),
                &rep.act(&images[v], &unit_vec(m, u)),
            );
            let rhs = t.apply(&inner);
            o_identity &= check_eq(&mut failures, O_IDENTITY, &[u, v], lhs, rhs);
        }
    }
    Ok(OOperatorReport {
        intertwining,
        o_identity,
        failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotaBaxterReport {
    /// `R∘α = α∘R`.
    pub commutes: bool,
    /// `[Rx,Ry] = R([α^s Rx, y] + [x, α^s Ry] + λ[x,y])`.
    pub identity: bool,
    pub failures: Vec<Failure>,
}

impl RotaBaxterReport {
    pub fn is_rota_baxter(&self) -> bool {
        self.commutes && self.identity
    }
}

/// Whether `R` is an `s`-Rota–Baxter operator of weight `λ` on `g`.
pub fn is_rota_baxter(
    g: &HomLieAlgebra,
    r: &Matrix,
    s: u32,
    lambda: &Scalar,
) -> Result<RotaBaxterReport> {
    let n = g.dim();
    check_endo(n, r, "operator")?;
    let mut failures = Vec::new();
    let ra = r.dot(g.alpha());
    let ar = g.alpha().dot(r);
    let mut commutes = true;
    for c in 0..n {
        commutes &= check_eq(
            &mut failures,
            "R(alpha x) = alpha(R x)",
            &[c],
            ra.column(c),
            ar.column(c),
        );
    }
    let shifted = g.alpha().pow(s)?.dot(r);
    let mut identity = true;
    for i in 0..n {
        for j in i + 1..n {
            let (ei, ej) = (unit_vec(n, i), unit_vec(n, j));
            let lhs = g.bracket(&r.column(i), &r.column(j));
            let mut inner = add_vec(
                &g.bracket(&shifted.column(i), &ej),
                &g.bracket(&ei, &shifted.column(j)),
            );
            if !lambda.is_zero() {
                inner = add_vec(
                    &inner,
                    &crate::exactnum::scale_vec(lambda, g.bracket_basis(i, j)),
                );
            }
            let rhs = r.apply(&inner);
            identity &= check_eq(
                &mut failures,
                "[Rx,Ry] = R([a^s Rx,y] + [x,a^s Ry] + l[x,y])",
                &[i, j],
                lhs,
                rhs,
            );
        }
    }
    Ok(RotaBaxterReport {
        commutes,
        identity,
        failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphReport {
    /// `[(Tu,u), (Tv,v)]_ρ ∈ Gr(T)`.
    pub bracket_closed: bool,
    /// `(α+β)(Tv, v) ∈ Gr(T)`.
    pub twist_closed: bool,
    pub failures: Vec<Failure>,
}

impl GraphReport {
    pub fn is_subalgebra(&self) -> bool {
        self.bracket_closed && self.twist_closed
    }
}

/// Whether the graph `{(Tv, v)}` is a hom-Lie subalgebra of `g ⋉ V`. An
/// element `(x, w)` lies in the graph iff `x = Tw`; failures record `x` and `Tw`.
pub fn graph_check(rep: &Representation, t: &Matrix) -> Result<GraphReport> {
    check_operator(rep, t)?;
    let g = rep.algebra();
    let m = rep.dim();
    let images: Vec<Vector> = (0..m).map(|v| t.column(v)).collect();
    let mut failures = Vec::new();
    let mut bracket_closed = true;
    for u in 0..m {
        for v in u + 1..m {
            let x = g.bracket(&images[u], &images[v]);
            let w = sub_vec(
                &rep.act(&images[u], &unit_vec(m, v)),
                &rep.act(&images[v], &unit_vec(m, u)),
            );
            bracket_closed &= check_eq(
                &mut failures,
                "graph closed under bracket",
                &[u, v],
                x,
                t.apply(&w),
            );
        }
    }
    let mut twist_closed = true;
    for (v, image) in images.iter().enumerate() {
        let x = g.alpha().apply(image);
        let w = rep.beta().column(v);
        twist_closed &= check_eq(
            &mut failures,
            "graph closed under twist",
            &[v],
            x,
            t.apply(&w),
        );
    }
    Ok(GraphReport {
        bracket_closed,
        twist_closed,
        failures,
    })
}

/// `N∘α = α∘N` and `[Nx,Ny] = N([Nx,y] − [Ny,x] − N[x,y])` on every basis
/// pair.
pub fn nijenhuis_operator_check(h: &HomLieAlgebra, n_op: &Matrix) -> Result<IdentityReport> {
    let d = h.dim();
    check_endo(d, n_op, "operator")?;
    let mut failures = Vec::new();
    let na = n_op.dot(h.alpha());
    let an = h.alpha().dot(n_op);
    for c in 0..d {
        check_eq(
            &mut failures,
            "N alpha = alpha N",
            &[c],
            na.column(c),
            an.column(c),
        );
    }
    for i in 0..d {
        for j in i + 1..d {
            let (ni, nj) = (n_op.column(i), n_op.column(j));
            let lhs = h.bracket(&ni, &nj);
            let inner = sub_vec(
                &sub_vec(
                    &h.bracket(&ni, &unit_vec(d, j)),
                    &h.bracket(&nj, &unit_vec(d, i)),
                ),
                &n_op.apply(h.bracket_basis(i, j)),
            );
            check_eq(
                &mut failures,
                "[Nx,Ny] = N([Nx,y] - [Ny,x] - N[x,y])",
                &[i, j],
                lhs,
                n_op.apply(&inner),
            );
        }
    }
    Ok(IdentityReport::from_failures(failures))
}

/// The block operator `[[0, T], [0, 0]]` on `g ⊕ V`.
pub fn build_nt(rep: &Representation, t: &Matrix) -> Result<Matrix> {
    check_operator(rep, t)?;
    let (n, m) = (rep.algebra().dim(), rep.dim());
    let mut out = Matrix::zeros(n + m, n + m);
    for r in 0..n {
        for c in 0..m {
            out[(r, n + c)] = t[(r, c)].clone();
        }
    }
    Ok(out)
}

/// A hom-pre-Lie algebra `(V, ·, β)` with `product[i * dim + j] = v_i · v_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomPreLie {
    dim: usize,
    product: Vec<Vector>,
    twist: Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomPreLieReport {
    pub multiplicative: bool,
    pub pre_lie_identity: bool,
    pub failures: Vec<Failure>,
}

impl HomPreLieReport {
    pub fn is_hom_pre_lie(&self) -> bool {
        self.multiplicative && self.pre_lie_identity
    }
}

impl HomPreLie {
    pub fn new(twist: Matrix, product: Vec<Vector>) -> Result<Self> {
        let dim = twist.rows();
        check_endo(dim, &twist, "twist")?;
        if product.len() != dim * dim || product.iter().any(|v| v.len() != dim) {
            return Err(dim_err(format!(
                "product table must hold {} vectors of length {dim}",
                dim * dim
            )));
        }
        Ok(HomPreLie {
            dim,
            product,
            twist,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    pub fn product_basis(&self, i: usize, j: usize) -> &Vector {
        &self.product[i * self.dim + j]
    }

    pub fn product(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.dim);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if !vj.is_zero() {
                    crate::exactnum::axpy(&mut out, &(ui * vj), self.product_basis(i, j));
                }
            }
        }
        out
    }

    /// Checks `β(u·v) = βu·βv` and
    /// `(u·v)·βw − βu·(v·w) = (v·u)·βw − βv·(u·w)` on all basis tuples.
    pub fn verify(&self) -> HomPreLieReport {
        let d = self.dim;
        let tw: Vec<Vector> = (0..d).map(|i| self.twist.column(i)).collect();
        let mut failures = Vec::new();
        let mut multiplicative = true;
        for i in 0..d {
            for j in 0..d {
                let lhs = self.twist.apply(self.product_basis(i, j));
                let rhs = self.product(&tw[i], &tw[j]);
                multiplicative &= check_eq(
                    &mut failures,
                    "beta(u.v) = beta(u).beta(v)",
                    &[i, j],
                    lhs,
                    rhs,
                );
            }
        }
        let mut pre_lie_identity = true;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let side = |a: usize, b: usize| {
                        sub_vec(
                            &self.product(self.product_basis(a, b), &tw[k]),
                            &self.product(&tw[a], self.product_basis(b, k)),
                        )
                    };
                    pre_lie_identity &= check_eq(
                        &mut failures,
                        "(u.v).beta w - beta u.(v.w) = (v.u).beta w - beta v.(u.w)",
                        &[i, j, k],
                        side(i, j),
                        side(j, i),
                    );
                }
            }
        }
        HomPreLieReport {
            multiplicative,
            pre_lie_identity,
            failures,
        }
    }
}

fn require_o_operator(rep: &Representation, t: &Matrix) -> Result<()> {
    let report = is_o_operator(rep, t)?;
    match report.failures.first() {
        None => Ok(()),
        Some(f) => Err(Error::Precondition(format!(
            "not an O-operator: {} fails at {:?}",
            f.condition, f.indices
        ))),
    }
}

/// `v ·_T w = {Tv, w}`; requires `T` to be an O-operator.
pub fn induced_hom_pre_lie(rep: &Representation, t: &Matrix) -> Result<HomPreLie> {
    require_o_operator(rep, t)?;
    induced_hom_pre_lie_unchecked(rep, t)
}

/// The same product table without requiring the O-operator identities.
pub fn induced_hom_pre_lie_unchecked(rep: &Representation, t: &Matrix) -> Result<HomPreLie> {
    check_operator(rep, t)?;
    let m = rep.dim();
    let product = (0..m)
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .map(|(i, j)| rep.act(&t.column(i), &unit_vec(m, j)))
        .collect();
    HomPreLie::new(rep.beta().clone(), product)
}

/// `[v,w]^c = v·w − w·v`, with basis labels `v1, …, vm`.
pub fn subadjacent(pre: &HomPreLie) -> HomLieAlgebra {
    let d = pre.dim;
    let labels = (1..=d).map(|i| format!("v{i}")).collect();
    let brackets = (0..d)
        .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
        .map(|(i, j)| {
            (
                (i, j),
                sub_vec(pre.product_basis(i, j), pre.product_basis(j, i)),
            )
        });
    HomLieAlgebra::new(labels, pre.twist.clone(), brackets).expect("consistent shapes")
}

/// `ρ_T(v)(x) = [Tv, x] + T{x, v}` as a representation of the sub-adjacent
/// algebra on `(g, α)`; requires `T` to be an O-operator.
pub fn rho_t(rep: &Representation, t: &Matrix) -> Result<Representation> {
    require_o_operator(rep, t)?;
    rho_t_unchecked(rep, t)
}

/// `ρ_T` over the sub-adjacent algebra of the (possibly non-pre-Lie)
/// product `{Tv, w}`, for diagnosing operators that fail the O-identity.
pub fn rho_t_unchecked(rep: &Representation, t: &Matrix) -> Result<Representation> {
    let pre = induced_hom_pre_lie_unchecked(rep, t)?;
    let vc = subadjacent(&pre);
    let g = rep.algebra();
    let (n, m) = (g.dim(), rep.dim());
    let rho = (0..m)
        .map(|v| {
            let tv = t.column(v);
            let cols: Vec<Vector> = (0..n)
                .map(|x| {
                    let ex = unit_vec(n, x);
                    add_vec(
                        &g.bracket(&tv, &ex),
                        &t.apply(&rep.act(&ex, &unit_vec(m, v))),
                    )
                })
                .collect();
            Matrix::from_columns(&cols, n).expect("square")
        })
        .collect();
    Representation::new(vc, g.alpha().clone(), rho)
}

/// `[x,y]_R = [α^s Rx, y] + [x, α^s Ry]`.
pub fn rota_baxter_induced_bracket(g: &HomLieAlgebra, r: &Matrix, s: u32) -> Result<HomLieAlgebra> {
    let n = g.dim();
    check_endo(n, r, "operator")?;
    let shifted = g.alpha().pow(s)?.dot(r);
    let brackets: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| {
            let v = add_vec(
                &g.bracket(&shifted.column(i), &unit_vec(n, j)),
                &g.bracket(&unit_vec(n, i), &shifted.column(j)),
            );
            ((i, j), v)
        })
        .collect();
    HomLieAlgebra::new(g.labels().to_vec(), g.alpha().clone(), brackets)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OOperatorHomReport {
    /// `φ_g` is a hom-Lie algebra endomorphism.
    pub algebra_morphism: bool,
    /// `T'∘φ_V = φ_g∘T`.
    pub intertwines_operators: bool,
    /// `φ_V∘β = β∘φ_V`.
    pub commutes_with_twist: bool,
    /// `φ_V({x,v}) = {φ_g x, φ_V v}`.
    pub equivariant: bool,
    pub failures: Vec<Failure>,
}

impl OOperatorHomReport {
    pub fn is_homomorphism(&self) -> bool {
        self.algebra_morphism
            && self.intertwines_operators
            && self.commutes_with_twist
            && self.equivariant
    }
}

/// Whether `(φ_g, φ_V)` is a homomorphism of O-operators from `T` to `T'`.
pub fn o_operator_hom_check(
    rep: &Representation,
    t: &Matrix,
    t_prime: &Matrix,
    phi_g: &Matrix,
    phi_v: &Matrix,
) -> Result<OOperatorHomReport> {
    check_operator(rep, t)?;
    check_operator(rep, t_prime)?;
    let g = rep.algebra();
    let (n, m) = (g.dim(), rep.dim());
    check_endo(n, phi_g, "phi_g")?;
    check_endo(m, phi_v, "phi_V")?;
    let mut failures = Vec::new();

    let mut algebra_morphism = true;
    for i in 0..n {
        for j in i + 1..n {
            let lhs = phi_g.apply(g.bracket_basis(i, j));
            let rhs = g.bracket(&phi_g.column(i), &phi_g.column(j));
            algebra_morphism &= check_eq(
                &mut failures,
                "phi_g[x,y] = [phi_g x, phi_g y]",
                &[i, j],
                lhs,
                rhs,
            );
        }
    }
    let pa = phi_g.dot(g.alpha());
    let ap = g.alpha().dot(phi_g);
    for c in 0..n {
        algebra_morphism &= check_eq(
            &mut failures,
            "phi_g alpha = alpha phi_g",
            &[c],
            pa.column(c),
            ap.column(c),
        );
    }

    let lhs = t_prime.dot(phi_v);
    let rhs = phi_g.dot(t);
    let mut intertwines_operators = true;
    for v in 0..m {
        intertwines_operators &= check_eq(
            &mut failures,
            "T' phi_V = phi_g T",
            &[v],
            lhs.column(v),
            rhs.column(v),
        );
    }

    let pb = phi_v.dot(rep.beta());
    let bp = rep.beta().dot(phi_v);
    let mut commutes_with_twist = true;
    for v in 0..m {
        commutes_with_twist &= check_eq(
            &mut failures,
            "phi_V beta = beta phi_V",
            &[v],
            pb.column(v),
            bp.column(v),
        );
    }

    let mut equivariant = true;
    for x in 0..n {
        let lhs = phi_v.dot(&rep.rho()[x]);
        let rhs = rep.action(&phi_g.column(x)).dot(phi_v);
        for v in 0..m {
            equivariant &= check_eq(
                &mut failures,
                "phi_V{x,v} = {phi_g x, phi_V v}",
                &[x, v],
                lhs.column(v),
                rhs.column(v),
            );
        }
    }
    Ok(OOperatorHomReport {
        algebra_morphism,
        intertwines_operators,
        commutes_with_twist,
        equivariant,
        failures,
    })
}

/// Everything an O-operator `T` induces: the hom-pre-Lie product on `V`,
/// its sub-adjacent algebra, the representation `ρ_T` on `g`, and the
/// cochain complex `C^*(V, g)` computing the cohomology of `T`.
#[derive(Debug, Clone)]
pub struct OOperatorContext {
    rep: Representation,
    t: Matrix,
    pre_lie: HomPreLie,
    rho_t: Representation,
    complex: Complex,
}

impl OOperatorContext {
    pub fn new(rep: &Representation, t: &Matrix) -> Result<Self> {
        let pre_lie = induced_hom_pre_lie(rep, t)?;
        let rho_t = rho_t(rep, t)?;
        let complex = Complex::on_module(rho_t.clone());
        Ok(OOperatorContext {
            rep: rep.clone(),
            t: t.clone(),
            pre_lie,
            rho_t,
            complex,
        })
    }

    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    pub fn algebra(&self) -> &HomLieAlgebra {
        self.rep.algebra()
    }

    pub fn operator(&self) -> &Matrix {
        &self.t
    }

    pub fn operator_cochain(&self) -> Cochain {
        Cochain::from_matrix(&self.t)
    }

    pub fn pre_lie(&self) -> &HomPreLie {
        &self.pre_lie
    }

    pub fn subadjacent(&self) -> &HomLieAlgebra {
        self.rho_t.algebra()
    }

    pub fn rho_t(&self) -> &Representation {
        &self.rho_t
    }

    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    pub fn derived_bracket(&self) -> DerivedBracket {
        DerivedBracket::new(&self.rep)
    }

    /// `δ` of the sub-adjacent algebra with coefficients in `ρ_T`.
    pub fn coboundary(&self, p: &Cochain) -> Result<Cochain> {
        self.complex.coboundary(p)
    }

    /// `δ(x)(v) = ρ_T(β^{-1}v)(x) = [α^{-1}Tv, x] + T{x, β^{-1}v}` for `α x = x`.
    pub fn zero_coboundary(&self, x: &[Scalar]) -> Result<Cochain> {
        let f = Cochain::from_vector(self.rep.dim(), x.to_vec());
        self.complex.coboundary(&f)
    }

    pub fn cohomology_dim(&self, n: usize) -> CohomologyDims {
        self.complex.cohomology_dim(n)
    }
}

/// `T` as an O-operator for the `α^s`-adjoint representation.
pub fn rota_baxter_context(g: &HomLieAlgebra, r: &Matrix, s: u32) -> Result<OOperatorContext> {
    OOperatorContext::new(&adjoint_rep(g, s), r)
}

/// The semidirect product together with `N_T`, for the Nijenhuis route.
pub fn nijenhuis_route(rep: &Representation, t: &Matrix) -> Result<IdentityReport> {
    nijenhuis_operator_check(&semidirect_product(rep), &build_nt(rep, t)?)
}
