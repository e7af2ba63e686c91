//! Skew-symmetric r-matrices on regular hom-Lie algebras.
//!
//! An element `r = Σ_{i<j} r_ij e_i∧e_j` is stored by its `i<j` coordinates
//! and stands for the skew tensor `Σ r_ij (e_i⊗e_j − e_j⊗e_i)`. It is an
//! r-matrix when `(α⊗α)r = r` and `[r,r]_g = 0`, equivalently when the
//! operator `r♯: g* → g`, `⟨ξ, r♯η⟩ = ⟨ξ⊗η, r⟩`, is an O-operator for the
//! coadjoint representation.

use std::fmt;

use num_traits::{One, Zero};

use crate::combin::{combinations, rank, sort_with_sign};
use crate::deformation::{
    formal_deformation_check, linear_deformation_check, TruncatedDeformation,
};
use crate::error::{dim_err, Error, Result};
use crate::exactnum::{unit_vec, Matrix, Scalar, Vector};
use crate::ooperator::{
    induced_hom_pre_lie, is_o_operator, o_operator_hom_check, rho_t, subadjacent,
    OOperatorHomReport,
};
use crate::par::{self, Exec};
use crate::report::{check_eq, Failure};
use crate::structures::{coadjoint_rep, HomLieAlgebra, Representation};

/// An element of `∧^k g` in the increasing-tuple basis `e_{i1}∧…∧e_{ik}`.
#[derive(Clone, PartialEq, Eq)]
pub struct Multivector {
    dim: usize,
    degree: usize,
    coeffs: Vec<Scalar>,
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .entries()
            .into_iter()
            .map(|(t, c)| format!("{c}*{t:?}"))
            .collect();
        write!(
            f,
            "Multivector(dim {}, degree {}: {})",
            self.dim,
            self.degree,
            terms.join(" + ")
        )
    }
}

impl Multivector {
    pub fn zero(dim: usize, degree: usize) -> Self {
        Multivector {
            dim,
            degree,
            coeffs: vec![Scalar::zero(); combinations(dim, degree).len()],
        }
    }

    /// Accumulates `c·e_{t1}∧…∧e_{tk}` for each entry; tuples may be in any
    /// order and are sorted with the permutation sign.
    pub fn from_entries<I>(dim: usize, degree: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Scalar)>,
    {
        let mut out = Multivector::zero(dim, degree);
        for (mut tuple, c) in entries {
            if tuple.len() != degree || tuple.iter().any(|&i| i >= dim) {
                return Err(dim_err(format!(
                    "index tuple {tuple:?} out of range for degree {degree}, dimension {dim}"
                )));
            }
            let sign = sort_with_sign(&mut tuple).ok_or_else(|| {
                Error::Invalid(format!("repeated index in wedge monomial {tuple:?}"))
            })?;
            let slot = &mut out.coeffs[rank(dim, &tuple)];
            if sign > 0 {
                *slot += c;
            } else {
                *slot -= c;
            }
        }
        Ok(out)
    }

    /// `Σ c_ij e_i∧e_j`.
    pub fn two<I>(dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), Scalar)>,
    {
        Multivector::from_entries(
            dim,
            2,
            entries.into_iter().map(|((i, j), c)| (vec![i, j], c)),
        )
    }

    /// `v_1∧…∧v_k`.
    pub fn wedge(dim: usize, vectors: &[Vector]) -> Self {
        let mut partial: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), Scalar::one())];
        for v in vectors {
            let mut next = Vec::new();
            for (tuple, c) in &partial {
                for (i, a) in v.iter().enumerate() {
                    if !a.is_zero() && !tuple.contains(&i) {
                        let mut t = tuple.clone();
                        t.push(i);
                        next.push((t, c * a));
                    }
                }
            }
            partial = next;
        }
        Multivector::from_entries(dim, vectors.len(), partial).expect("distinct in-range indices")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coordinates in the order of [`combinations`].
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// The coefficient of `e_{t1}∧…∧e_{tk}`, for a tuple in any order.
    pub fn coeff(&self, tuple: &[usize]) -> Scalar {
        let mut t = tuple.to_vec();
        match sort_with_sign(&mut t) {
            None => Scalar::zero(),
            Some(s) => {
                let c = self.coeffs[rank(self.dim, &t)].clone();
                if s > 0 {
                    c
                } else {
                    -c
                }
            }
        }
    }

    /// Nonzero coordinates with their increasing tuples.
    pub fn entries(&self) -> Vec<(Vec<usize>, Scalar)> {
        combinations(self.dim, self.degree)
            .into_iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(t, c)| (t, c.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Multivector) -> Result<Multivector> {
        if (self.dim, self.degree) != (other.dim, other.degree) {
            return Err(dim_err("multivectors of different shapes"));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Multivector {
            coeffs,
            ..self.clone()
        })
    }

    pub fn scale(&self, c: &Scalar) -> Multivector {
        Multivector {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            ..self.clone()
        }
    }

    /// `x_1∧…∧x_k ↦ Ax_1∧…∧Ax_k`.
    pub fn transform(&self, a: &Matrix) -> Multivector {
        let mut out = Multivector::zero(self.dim, self.degree);
        for (tuple, c) in self.entries() {
            let cols: Vec<Vector> = tuple.iter().map(|&i| a.column(i)).collect();
            let w = Multivector::wedge(self.dim, &cols);
            for (o, x) in out.coeffs.iter_mut().zip(&w.coeffs) {
                *o += &c * x;
            }
        }
        out
    }

    /// `α̃(χ) = χ`.
    pub fn is_invariant(&self, alpha: &Matrix) -> bool {
        self.transform(alpha) == *self
    }
}

/// Dense coordinates over `g⊗g⊗g`, indexed `[a][b][c]`.
#[derive(Clone, PartialEq, Eq)]
pub struct TripleTensor {
    dim: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for TripleTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim;
        let terms: Vec<String> = (0..n * n * n)
            .filter(|&k| !self.data[k].is_zero())
            .map(|k| {
                format!(
                    "{}*({},{},{})",
                    self.data[k],
                    k / (n * n),
                    (k / n) % n,
                    k % n
                )
            })
            .collect();
        write!(f, "TripleTensor(dim {}: {})", n, terms.join(" + "))
    }
}

impl TripleTensor {
    pub fn zero(dim: usize) -> Self {
        TripleTensor {
            dim,
            data: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> &Scalar {
        &self.data[(a * self.dim + b) * self.dim + c]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &TripleTensor) -> TripleTensor {
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        TripleTensor {
            dim: self.dim,
            data,
        }
    }

    fn add_outer(&mut self, c: &Scalar, u: &[Scalar], v: &[Scalar], w: &[Scalar]) {
        let n = self.dim;
        for (a, ua) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            let cu = c * ua;
            for (b, vb) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let cuv = &cu * vb;
                for (k, wk) in w.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                    self.data[(a * n + b) * n + k] += &cuv * wk;
                }
            }
        }
    }

    /// The multivector `Σ T[a][b][c] e_a∧e_b∧e_c`.
    pub fn alternation(&self) -> Multivector {
        let n = self.dim;
        let entries = (0..n * n * n)
            .filter(|&k| !self.data[k].is_zero())
            .filter_map(|k| {
                let t = vec![k / (n * n), (k / n) % n, k % n];
                (t[0] != t[1] && t[1] != t[2] && t[0] != t[2]).then(|| (t, self.data[k].clone()))
            });
        Multivector::from_entries(n, 3, entries).expect("distinct indices")
    }
}

fn check_two(g: &HomLieAlgebra, r: &Multivector) -> Result<()> {
    if r.degree() != 2 || r.dim() != g.dim() {
        return Err(dim_err(format!(
            "expected an element of wedge^2 of a {}-dimensional algebra, got degree {} over dimension {}",
            g.dim(),
            r.degree(),
            r.dim()
        )));
    }
    Ok(())
}

/// The matrix of `r♯` in the dual and primal bases: `r♯(ε_b) = Σ_a R[a][b] e_a`
/// where `R` is the skew coordinate matrix of `r`.
pub fn tensor_to_operator(r: &Multivector) -> Result<Matrix> {
    if r.degree() != 2 {
        return Err(dim_err(format!("expected degree 2, got {}", r.degree())));
    }
    let n = r.dim();
    let mut m = Matrix::zeros(n, n);
    for (t, c) in r.entries() {
        m[(t[0], t[1])] = c.clone();
        m[(t[1], t[0])] = -c;
    }
    Ok(m)
}

/// Inverse of [`tensor_to_operator`]; the operator must be skew.
pub fn operator_to_tensor(m: &Matrix) -> Result<Multivector> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.add(&m.transpose())? != Matrix::zeros(m.rows(), m.cols()) {
        return Err(Error::Invalid("operator is not skew-symmetric".into()));
    }
    let n = m.rows();
    Multivector::two(
        n,
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| ((i, j), m[(i, j)].clone())),
    )
}

/// `[x_1∧…∧x_n, y_1∧…∧y_m]_g = Σ_{i,j} (−1)^{i+j} [x_i,y_j] ∧ α(x_1)∧…α(x_i)^…∧α(y_1)∧…α(y_j)^…`,
/// extended bilinearly over basis monomials.
pub fn graded_bracket_wedge(
    g: &HomLieAlgebra,
    u: &Multivector,
    v: &Multivector,
) -> Result<Multivector> {
    let dim = g.dim();
    if u.dim() != dim || v.dim() != dim {
        return Err(dim_err("multivector dimension differs from the algebra"));
    }
    if u.degree() == 0 || v.degree() == 0 {
        return Err(dim_err("the wedge bracket needs degrees at least 1"));
    }
    let alpha = g.alpha();
    let degree = u.degree() + v.degree() - 1;
    let mut out = Multivector::zero(dim, degree);
    if degree > dim {
        return Ok(out);
    }
    for (ut, uc) in u.entries() {
        for (vt, vc) in v.entries() {
            let coef = &uc * &vc;
            for (i, &xi) in ut.iter().enumerate() {
                for (j, &yj) in vt.iter().enumerate() {
                    let mut factors = vec![g.bracket_basis(xi, yj).clone()];
                    factors.extend(
                        ut.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != i)
                            .map(|(_, &x)| alpha.column(x)),
                    );
                    factors.extend(
                        vt.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, &y)| alpha.column(y)),
                    );
                    let w = Multivector::wedge(dim, &factors);
                    let c = if (i + j) % 2 == 0 {
                        coef.clone()
                    } else {
                        -coef.clone()
                    };
                    out = out.add(&w.scale(&c))?;
                }
            }
        }
    }
    Ok(out)
}

/// The three double sums whose total is the classical Yang–Baxter
/// expression, each named by its pair of tensor slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CybeSum {
    pub slots_12_13: TripleTensor,
    pub slots_12_23: TripleTensor,
    pub slots_13_23: TripleTensor,
}

impl CybeSum {
    pub fn total(&self) -> TripleTensor {
        self.slots_12_13
            .add(&self.slots_12_23)
            .add(&self.slots_13_23)
    }
}

pub fn cybe_sum(g: &HomLieAlgebra, r: &Multivector) -> Result<CybeSum> {
    cybe_sum_with(Exec::default(), g, r)
}

/// Evaluates the three sums with `r` decomposed as `Σ r_ab (x⊗y − y⊗x)`,
/// `(x, y) = (e_a, e_b)`, `a < b`, and `x̃ = α(x)`.
pub fn cybe_sum_with(exec: Exec, g: &HomLieAlgebra, r: &Multivector) -> Result<CybeSum> {
    check_two(g, r)?;
    let n = g.dim();
    let alpha = g.alpha();
    let terms: Vec<(Scalar, usize, usize)> = r
        .entries()
        .into_iter()
        .map(|(t, c)| (c, t[0], t[1]))
        .collect();
    let partial = par::map(exec, &terms, |(ci, xi, yi)| {
        let mut s1 = TripleTensor::zero(n);
        let mut s2 = TripleTensor::zero(n);
        let mut s3 = TripleTensor::zero(n);
        let (txi, tyi) = (alpha.column(*xi), alpha.column(*yi));
        for (cj, xj, yj) in &terms {
            let c = ci * cj;
            let m = -c.clone();
            let (txj, tyj) = (alpha.column(*xj), alpha.column(*yj));
            let br = |a: usize, b: usize| g.bracket_basis(a, b).clone();
            s1.add_outer(&c, &br(*xi, *xj), &tyi, &tyj);
            s1.add_outer(&m, &br(*xi, *yj), &tyi, &txj);
            s1.add_outer(&m, &br(*yi, *xj), &txi, &tyj);
            s1.add_outer(&c, &br(*yi, *yj), &txi, &txj);

            s2.add_outer(&c, &txi, &br(*yi, *xj), &tyj);
            s2.add_outer(&m, &txi, &br(*yi, *yj), &txj);
            s2.add_outer(&m, &tyi, &br(*xi, *xj), &tyj);
            s2.add_outer(&c, &tyi, &br(*xi, *yj), &txj);

            s3.add_outer(&c, &txi, &txj, &br(*yi, *yj));
            s3.add_outer(&m, &txi, &tyj, &br(*yi, *xj));
            s3.add_outer(&m, &tyi, &txj, &br(*xi, *yj));
            s3.add_outer(&c, &tyi, &tyj, &br(*xi, *xj));
        }
        (s1, s2, s3)
    });
    let mut out = CybeSum {
        slots_12_13: TripleTensor::zero(n),
        slots_12_23: TripleTensor::zero(n),
        slots_13_23: TripleTensor::zero(n),
    };
    for (s1, s2, s3) in partial {
        out.slots_12_13 = out.slots_12_13.add(&s1);
        out.slots_12_23 = out.slots_12_23.add(&s2);
        out.slots_13_23 = out.slots_13_23.add(&s3);
    }
    Ok(out)
}

fn require_invariant(g: &HomLieAlgebra, r: &Multivector, what: &str) -> Result<()> {
    check_two(g, r)?;
    g.alpha_inverse_or_err()?;
    if !r.is_invariant(g.alpha()) {
        return Err(Error::Precondition(format!(
            "{what} is not invariant under alpha (x) alpha"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMatrixReport {
    /// `[r,r]_g = 0`.
    pub wedge_bracket_zero: bool,
    /// The Yang–Baxter triple sum vanishes.
    pub cybe_zero: bool,
    /// `r♯` is an O-operator for the coadjoint representation.
    pub o_operator: bool,
    /// Failures of the O-operator route.
    pub failures: Vec<Failure>,
}

impl RMatrixReport {
    pub fn routes_agree(&self) -> bool {
        self.wedge_bracket_zero == self.cybe_zero && self.cybe_zero == self.o_operator
    }

    pub fn is_r_matrix(&self) -> bool {
        self.wedge_bracket_zero && self.cybe_zero && self.o_operator
    }
}

/// Decides whether an invariant `r` is an r-matrix by three independent
/// routes.
pub fn is_r_matrix(g: &HomLieAlgebra, r: &Multivector) -> Result<RMatrixReport> {
    require_invariant(g, r, "r")?;
    let wedge_bracket_zero = graded_bracket_wedge(g, r, r)?.is_zero();
    let cybe_zero = cybe_sum(g, r)?.total().is_zero();
    let report = is_o_operator(&coadjoint_rep(g)?, &tensor_to_operator(r)?)?;
    Ok(RMatrixReport {
        wedge_bracket_zero,
        cybe_zero,
        o_operator: report.is_o_operator(),
        failures: report.failures,
    })
}

fn require_r_matrix(g: &HomLieAlgebra, r: &Multivector) -> Result<()> {
    let report = is_r_matrix(g, r)?;
    if !report.is_r_matrix() {
        return Err(Error::Precondition("not an r-matrix".into()));
    }
    Ok(())
}

/// `(g*, [ξ,η]_r, (α^{-1})*)` with `[ξ,η]_r = {r♯ξ, η} − {r♯η, ξ}` and
/// `{·,·}` the coadjoint action; basis labels are the algebra's with `*`.
pub fn induced_dual_bracket(g: &HomLieAlgebra, r: &Multivector) -> Result<HomLieAlgebra> {
    require_r_matrix(g, r)?;
    let co = coadjoint_rep(g)?;
    let rs = tensor_to_operator(r)?;
    let n = g.dim();
    let brackets: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| {
            let a = co.act(&rs.column(i), &unit_vec(n, j));
            let b = co.act(&rs.column(j), &unit_vec(n, i));
            ((i, j), crate::exactnum::sub_vec(&a, &b))
        })
        .collect();
    let labels = g.labels().iter().map(|l| format!("{l}*")).collect();
    HomLieAlgebra::new(labels, co.beta().clone(), brackets)
}

/// `ρ_r(ξ)(x) = [r♯ξ, x] + r♯{x, ξ}`, a representation of the induced dual
/// algebra on `(g, α)`.
pub fn induced_dual_representation(g: &HomLieAlgebra, r: &Multivector) -> Result<Representation> {
    require_r_matrix(g, r)?;
    rho_t(&coadjoint_rep(g)?, &tensor_to_operator(r)?)
}

/// The sub-adjacent algebra of the hom-pre-Lie product induced by `r♯`.
pub fn subadjacent_dual(g: &HomLieAlgebra, r: &Multivector) -> Result<HomLieAlgebra> {
    require_r_matrix(g, r)?;
    Ok(subadjacent(&induced_hom_pre_lie(
        &coadjoint_rep(g)?,
        &tensor_to_operator(r)?,
    )?))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakHomReport {
    /// `φ` is a hom-Lie algebra endomorphism.
    pub algebra_morphism: bool,
    /// `ψ∘α = α∘ψ`.
    pub commutes: bool,
    /// `(Id⊗φ)(r1) = (ψ⊗Id)(r2)`.
    pub tensor_condition: bool,
    /// `ψ([φx, y]) = [x, ψy]`.
    pub bracket_condition: bool,
    /// `(φ, ψ*)` as a homomorphism of O-operators from `r1♯` to `r2♯`.
    pub operator_route: OOperatorHomReport,
    pub failures: Vec<Failure>,
}

impl WeakHomReport {
    pub fn is_weak_homomorphism(&self) -> bool {
        self.algebra_morphism && self.commutes && self.tensor_condition && self.bracket_condition
    }

    pub fn routes_agree(&self) -> bool {
        self.is_weak_homomorphism() == self.operator_route.is_homomorphism()
    }
}

pub fn weak_homomorphism_check(
    g: &HomLieAlgebra,
    phi: &Matrix,
    psi: &Matrix,
    r1: &Multivector,
    r2: &Multivector,
) -> Result<WeakHomReport> {
    check_two(g, r1)?;
    check_two(g, r2)?;
    let n = g.dim();
    for (m, name) in [(phi, "phi"), (psi, "psi")] {
        if m.rows() != n || m.cols() != n {
            return Err(dim_err(format!(
                "{name} is {}x{}, expected {n}x{n}",
                m.rows(),
                m.cols()
            )));
        }
    }
    let mut failures = Vec::new();
    let algebra_morphism = g.is_morphism(phi);
    if !algebra_morphism {
        failures.push(Failure::new(
            "phi is a hom-Lie algebra morphism",
            vec![],
            Vec::new(),
            Vec::new(),
        ));
    }
    let (pa, ap) = (psi.dot(g.alpha()), g.alpha().dot(psi));
    let mut commutes = true;
    for c in 0..n {
        commutes &= check_eq(
            &mut failures,
            "psi alpha = alpha psi",
            &[c],
            pa.column(c),
            ap.column(c),
        );
    }
    let (m1, m2) = (tensor_to_operator(r1)?, tensor_to_operator(r2)?);
    let lhs = m1.dot(&phi.transpose());
    let rhs = psi.dot(&m2);
    let mut tensor_condition = true;
    for c in 0..n {
        tensor_condition &= check_eq(
            &mut failures,
            "(Id (x) phi) r1 = (psi (x) Id) r2",
            &[c],
            lhs.column(c),
            rhs.column(c),
        );
    }
    let mut bracket_condition = true;
    for x in 0..n {
        for y in 0..n {
            let l = psi.apply(&g.bracket(&phi.column(x), &unit_vec(n, y)));
            let r = g.bracket(&unit_vec(n, x), &psi.column(y));
            bracket_condition &=
                check_eq(&mut failures, "psi[phi x, y] = [x, psi y]", &[x, y], l, r);
        }
    }
    let operator_route = o_operator_hom_check(&coadjoint_rep(g)?, &m1, &m2, phi, &psi.transpose())?;
    Ok(WeakHomReport {
        algebra_morphism,
        commutes,
        tensor_condition,
        bracket_condition,
        operator_route,
        failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationTransferReport {
    /// The deformation of `r♯` is valid in the O-operator sense.
    pub operator_route: bool,
    /// Whether each `t^k` coefficient of `[r_t, r_t]_g` vanishes.
    pub bracket_coefficients: Vec<bool>,
}

impl DeformationTransferReport {
    pub fn bracket_route(&self) -> bool {
        self.bracket_coefficients.iter().all(|&b| b)
    }

    pub fn routes_agree(&self) -> bool {
        self.operator_route == self.bracket_route()
    }

    pub fn valid(&self) -> bool {
        self.operator_route && self.bracket_route()
    }
}

fn bracket_coefficients(
    g: &HomLieAlgebra,
    series: &[&Multivector],
    up_to: usize,
) -> Result<Vec<bool>> {
    (0..=up_to)
        .map(|k| {
            let mut acc = Multivector::zero(g.dim(), 3);
            for i in 0..=k {
                if let (Some(a), Some(b)) = (series.get(i), series.get(k - i)) {
                    acc = acc.add(&graded_bracket_wedge(g, a, b)?)?;
                }
            }
            Ok(acc.is_zero())
        })
        .collect()
}

/// Whether `r + tτ` is an r-matrix for every `t`, by the O-operator route
/// and coefficientwise in `[r_t, r_t]_g`.
pub fn linear_deformation_transfer(
    g: &HomLieAlgebra,
    r: &Multivector,
    tau: &Multivector,
) -> Result<DeformationTransferReport> {
    require_r_matrix(g, r)?;
    require_invariant(g, tau, "generator")?;
    let co = coadjoint_rep(g)?;
    let operator_route =
        linear_deformation_check(&co, &tensor_to_operator(r)?, &tensor_to_operator(tau)?)?.valid();
    let bracket_coefficients = bracket_coefficients(g, &[r, tau], 2)?;
    Ok(DeformationTransferReport {
        operator_route,
        bracket_coefficients,
    })
}

/// Whether `r + Σ t^i r_i` is a formal deformation of `r` to order `N`.
pub fn formal_deformation_transfer(
    g: &HomLieAlgebra,
    r: &Multivector,
    terms: &[Multivector],
) -> Result<DeformationTransferReport> {
    require_r_matrix(g, r)?;
    for (i, t) in terms.iter().enumerate() {
        require_invariant(g, t, &format!("term {}", i + 1))?;
    }
    let co = coadjoint_rep(g)?;
    let ops = terms
        .iter()
        .map(tensor_to_operator)
        .collect::<Result<Vec<_>>>()?;
    let d = TruncatedDeformation::new(tensor_to_operator(r)?, ops);
    let operator_route = formal_deformation_check(&co, &d)?.valid();
    let series: Vec<&Multivector> = std::iter::once(r).chain(terms).collect();
    let bracket_coefficients = bracket_coefficients(g, &series, terms.len())?;
    Ok(DeformationTransferReport {
        operator_route,
        bracket_coefficients,
    })
}
