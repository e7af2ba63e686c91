//! Twisted cochain complexes, their coboundaries and cohomology dimensions.
//!
//! A [`Complex`] is the cochain complex of a hom-Lie algebra with
//! coefficients in a representation. The O-operator complex on
//! `Hom(∧^n V, g)` is the same construction applied to the sub-adjacent
//! algebra on `V` acting on `g`; see [`crate::ooperator::OOperatorContext`].

use num_traits::{One, Zero};

use crate::combin::{binomial, combinations, rank, sort_with_sign};
use crate::error::{dim_err, Error, Result};
use crate::exactnum::{
    add_vec, axpy, is_zero_vec, scale_vec, sub_vec, zero_vec, Matrix, Scalar, Vector,
};
use crate::par::{self, Exec};
use crate::structures::Representation;

/// An alternating multilinear map `∧^arity S → T` stored by its values on
/// strictly increasing basis tuples, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    arity: usize,
    source_dim: usize,
    target_dim: usize,
    coeffs: Vec<Vector>,
}

impl Cochain {
    pub fn zero(arity: usize, source_dim: usize, target_dim: usize) -> Self {
        let count = binomial(source_dim, arity);
        Cochain {
            arity,
            source_dim,
            target_dim,
            coeffs: vec![zero_vec(target_dim); count],
        }
    }

    /// Builds a cochain from its values on increasing basis tuples.
    pub fn from_fn<F>(arity: usize, source_dim: usize, target_dim: usize, mut f: F) -> Self
    where
        F: FnMut(&[usize]) -> Vector,
    {
        let coeffs = combinations(source_dim, arity)
            .iter()
            .map(|t| f(t))
            .collect();
        Cochain {
            arity,
            source_dim,
            target_dim,
            coeffs,
        }
    }

    /// `coeffs[r]` is the value on the `r`-th increasing tuple.
    pub fn from_coeffs(
        arity: usize,
        source_dim: usize,
        target_dim: usize,
        coeffs: Vec<Vector>,
    ) -> Result<Self> {
        let count = binomial(source_dim, arity);
        if coeffs.len() != count {
            return Err(dim_err(format!(
                "{} values for {count} basis tuples",
                coeffs.len()
            )));
        }
        if let Some(bad) = coeffs.iter().position(|v| v.len() != target_dim) {
            return Err(dim_err(format!(
                "value {bad} has length {}",
                coeffs[bad].len()
            )));
        }
        Ok(Cochain {
            arity,
            source_dim,
            target_dim,
            coeffs,
        })
    }

    /// Inverse of [`Cochain::flat`].
    pub fn from_flat(
        arity: usize,
        source_dim: usize,
        target_dim: usize,
        flat: &[Scalar],
    ) -> Result<Self> {
        let count = binomial(source_dim, arity);
        if flat.len() != count * target_dim {
            return Err(dim_err(format!(
                "{} flat coordinates, expected {}",
                flat.len(),
                count * target_dim
            )));
        }
        let coeffs = if target_dim == 0 {
            vec![Vec::new(); count]
        } else {
            flat.chunks(target_dim).map(<[Scalar]>::to_vec).collect()
        };
        Ok(Cochain {
            arity,
            source_dim,
            target_dim,
            coeffs,
        })
    }

    /// A linear map given by its matrix (columns are images of basis vectors).
    pub fn from_matrix(m: &Matrix) -> Self {
        Cochain {
            arity: 1,
            source_dim: m.cols(),
            target_dim: m.rows(),
            coeffs: (0..m.cols()).map(|c| m.column(c)).collect(),
        }
    }

    /// An arity-0 cochain, i.e. a vector of the target.
    pub fn from_vector(source_dim: usize, v: Vector) -> Self {
        Cochain {
            arity: 0,
            source_dim,
            target_dim: v.len(),
            coeffs: vec![v],
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn coeffs(&self) -> &[Vector] {
        &self.coeffs
    }

    /// Coordinates `rank * target_dim + k` in the full space `Hom(∧^n S, T)`.
    pub fn flat(&self) -> Vector {
        self.coeffs.iter().flatten().cloned().collect()
    }

    pub fn to_matrix(&self) -> Result<Matrix> {
        if self.arity != 1 {
            return Err(dim_err(format!(
                "arity {} cochain is not a linear map",
                self.arity
            )));
        }
        Matrix::from_columns(&self.coeffs, self.target_dim)
    }

    /// The vector carried by an arity-0 cochain.
    pub fn as_vector(&self) -> Result<&Vector> {
        if self.arity != 0 {
            return Err(dim_err(format!(
                "arity {} cochain is not a vector",
                self.arity
            )));
        }
        Ok(&self.coeffs[0])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|v| is_zero_vec(v))
    }

    /// Value on a basis tuple in any order; repeated indices give zero.
    pub fn value(&self, tuple: &[usize]) -> Vector {
        assert_eq!(tuple.len(), self.arity, "tuple length must equal the arity");
        let mut t = tuple.to_vec();
        match sort_with_sign(&mut t) {
            None => zero_vec(self.target_dim),
            Some(1) => self.coeffs[rank(self.source_dim, &t)].clone(),
            Some(_) => self.coeffs[rank(self.source_dim, &t)]
                .iter()
                .map(|x| -x)
                .collect(),
        }
    }

    /// Multilinear evaluation on coordinate vectors.
    pub fn eval(&self, args: &[Vector]) -> Vector {
        assert_eq!(
            args.len(),
            self.arity,
            "argument count must equal the arity"
        );
        let mut out = zero_vec(self.target_dim);
        let mut idx = Vec::with_capacity(self.arity);
        self.eval_rec(args, &mut idx, Scalar::one(), &mut out);
        out
    }

    fn eval_rec(&self, args: &[Vector], idx: &mut Vec<usize>, coef: Scalar, out: &mut Vector) {
        let p = idx.len();
        if p == self.arity {
            let mut t = idx.clone();
            if let Some(s) = sort_with_sign(&mut t) {
                let c = if s > 0 { coef } else { -coef };
                axpy(out, &c, &self.coeffs[rank(self.source_dim, &t)]);
            }
            return;
        }
        for (i, a) in args[p].iter().enumerate() {
            if a.is_zero() || idx.contains(&i) {
                continue;
            }
            idx.push(i);
            self.eval_rec(args, idx, &coef * a, out);
            idx.pop();
        }
    }

    fn same_space(&self, other: &Cochain) -> Result<()> {
        if (self.arity, self.source_dim, self.target_dim)
            != (other.arity, other.source_dim, other.target_dim)
        {
            return Err(dim_err(format!(
                "cochain spaces differ: arity {} {}->{} vs arity {} {}->{}",
                self.arity,
                self.source_dim,
                self.target_dim,
                other.arity,
                other.source_dim,
                other.target_dim
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.same_space(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| add_vec(a, b))
            .collect();
        Ok(self.with_coeffs(coeffs))
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.same_space(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| sub_vec(a, b))
            .collect();
        Ok(self.with_coeffs(coeffs))
    }

    pub fn scale(&self, c: &Scalar) -> Cochain {
        let coeffs = self.coeffs.iter().map(|v| scale_vec(c, v)).collect();
        self.with_coeffs(coeffs)
    }

    fn with_coeffs(&self, coeffs: Vec<Vector>) -> Cochain {
        Cochain {
            arity: self.arity,
            source_dim: self.source_dim,
            target_dim: self.target_dim,
            coeffs,
        }
    }

    /// `f(σx_1, …, σx_n) − τ f(x_1, …, x_n)` as a cochain.
    pub fn twist_defect(&self, sigma: &Matrix, tau: &Matrix) -> Cochain {
        let sigma_cols: Vec<Vector> = (0..self.source_dim).map(|i| sigma.column(i)).collect();
        Cochain::from_fn(self.arity, self.source_dim, self.target_dim, |t| {
            let args: Vec<Vector> = t.iter().map(|&i| sigma_cols[i].clone()).collect();
            let lhs = self.eval(&args);
            let rhs = tau.apply(&self.coeffs[rank(self.source_dim, t)]);
            sub_vec(&lhs, &rhs)
        })
    }
}

/// Which carrier a complex's cochains are defined on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Carrier {
    /// Cochains on the algebra with values in the module.
    Algebra,
    /// Cochains on the module with values in the algebra (O-operator complex).
    Module,
}

/// Dimensions of cocycles, coboundaries and cohomology in one degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CohomologyDims {
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_h: usize,
}

/// The cochain complex of a hom-Lie algebra `(S, [·,·], σ)` with values in a
/// representation `(T, τ, ρ)`: `C^n` is the subspace of `Hom(∧^n S, T)` of
/// maps with `f∘σ^{⊗n} = τ∘f`. When both twists are invertible the complex
/// is extended by `C^0 = {t : τ t = t}` with `δt(x) = ρ(σ^{-1}x) t`.
#[derive(Debug, Clone)]
pub struct Complex {
    rep: Representation,
    source: Carrier,
}

impl Complex {
    /// The hom-Lie algebra complex with coefficients in `rep`.
    pub fn new(rep: Representation) -> Self {
        Complex {
            rep,
            source: Carrier::Algebra,
        }
    }

    /// A complex whose cochains live on the module side of an O-operator.
    pub(crate) fn on_module(rep: Representation) -> Self {
        Complex {
            rep,
            source: Carrier::Module,
        }
    }

    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    pub fn source(&self) -> Carrier {
        self.source
    }

    pub fn source_dim(&self) -> usize {
        self.rep.algebra().dim()
    }

    pub fn target_dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn source_twist(&self) -> &Matrix {
        self.rep.algebra().alpha()
    }

    pub fn target_twist(&self) -> &Matrix {
        self.rep.beta()
    }

    /// Whether the extended complex with 0-cochains is available.
    pub fn is_regular(&self) -> bool {
        self.rep.is_regular()
    }

    fn check_cochain(&self, f: &Cochain) -> Result<()> {
        if f.source_dim != self.source_dim() || f.target_dim != self.target_dim() {
            return Err(dim_err(format!(
                "cochain {}->{} on a complex {}->{}",
                f.source_dim,
                f.target_dim,
                self.source_dim(),
                self.target_dim()
            )));
        }
        Ok(())
    }

    pub fn is_compatible(&self, f: &Cochain) -> bool {
        self.check_cochain(f).is_ok()
            && f.twist_defect(self.source_twist(), self.target_twist())
                .is_zero()
    }

    /// Wraps values on increasing tuples as a cochain of this complex,
    /// rejecting maps that are not twist-compatible.
    pub fn cochain(&self, arity: usize, coeffs: Vec<Vector>) -> Result<Cochain> {
        let f = Cochain::from_coeffs(arity, self.source_dim(), self.target_dim(), coeffs)?;
        if arity == 0 {
            let v = &f.coeffs[0];
            if &self.target_twist().apply(v) != v {
                return Err(Error::Invalid(
                    "0-cochain is not fixed by the target twist".into(),
                ));
            }
        } else if !self.is_compatible(&f) {
            return Err(Error::Invalid(format!(
                "arity {arity} map is not twist-compatible"
            )));
        }
        Ok(f)
    }

    pub fn compatible_subspace_basis(&self, n: usize) -> Vec<Cochain> {
        self.compatible_subspace_basis_with(Exec::default(), n)
    }

    /// Basis of `C^n` (`n ≥ 1`) as the kernel of `f ↦ f∘σ^{∧n} − τ∘f`.
    pub fn compatible_subspace_basis_with(&self, exec: Exec, n: usize) -> Vec<Cochain> {
        let (d, m) = (self.source_dim(), self.target_dim());
        let full = binomial(d, n) * m;
        if full == 0 {
            return Vec::new();
        }
        let cols = par::map_range(exec, full, |j| {
            let mut flat = zero_vec(full);
            flat[j] = Scalar::one();
            let e = Cochain::from_flat(n, d, m, &flat).expect("unit cochain");
            e.twist_defect(self.source_twist(), self.target_twist())
                .flat()
        });
        let defect = Matrix::from_columns(&cols, full).expect("consistent shapes");
        defect
            .kernel_basis()
            .iter()
            .map(|v| Cochain::from_flat(n, d, m, v).expect("kernel vector length"))
            .collect()
    }

    /// `C^0 = {t : τ t = t}`, available only for regular complexes.
    pub fn zero_cochain_basis(&self) -> Result<Vec<Cochain>> {
        self.require_regular()?;
        let m = self.target_dim();
        let fix = self
            .target_twist()
            .sub(&Matrix::identity(m))
            .expect("square");
        Ok(fix
            .kernel_basis()
            .into_iter()
            .map(|v| Cochain::from_vector(self.source_dim(), v))
            .collect())
    }

    fn require_regular(&self) -> Result<()> {
        if self.is_regular() {
            Ok(())
        } else {
            Err(Error::NonRegular(
                "0-cochains need invertible twists".into(),
            ))
        }
    }

    pub fn coboundary(&self, f: &Cochain) -> Result<Cochain> {
        self.check_cochain(f)?;
        if f.arity == 0 {
            self.require_regular()?;
            let t = &f.coeffs[0];
            if &self.target_twist().apply(t) != t {
                return Err(Error::Precondition(
                    "0-cochain is not fixed by the target twist".into(),
                ));
            }
        }
        Ok(Coboundary::new(self, f.arity)?.apply(f))
    }

    /// Matrix of `δ` on the full space `Hom(∧^n S, T)` in flat coordinates.
    pub fn coboundary_matrix(&self, n: usize) -> Result<Matrix> {
        self.coboundary_matrix_with(Exec::default(), n)
    }

    pub fn coboundary_matrix_with(&self, exec: Exec, n: usize) -> Result<Matrix> {
        let (d, m) = (self.source_dim(), self.target_dim());
        let full = binomial(d, n) * m;
        let units: Vec<Cochain> = (0..full)
            .map(|j| {
                let mut flat = zero_vec(full);
                flat[j] = Scalar::one();
                Cochain::from_flat(n, d, m, &flat).expect("unit cochain")
            })
            .collect();
        self.coboundary_on(exec, n, &units)
    }

    /// Columns are `δ(b)` in flat coordinates of `Hom(∧^{n+1} S, T)`.
    fn coboundary_on(&self, exec: Exec, n: usize, basis: &[Cochain]) -> Result<Matrix> {
        let op = Coboundary::new(self, n)?;
        let rows = binomial(self.source_dim(), n + 1) * self.target_dim();
        let cols = par::map(exec, basis, |b| op.apply(b).flat());
        Matrix::from_columns(&cols, rows)
    }

    /// Basis of `C^n` including the extended degree 0; empty where undefined.
    pub fn cochain_space_basis(&self, n: usize) -> Vec<Cochain> {
        match n {
            0 => self.zero_cochain_basis().unwrap_or_default(),
            _ => self.compatible_subspace_basis(n),
        }
    }

    pub fn cohomology_dim(&self, n: usize) -> CohomologyDims {
        self.cohomology_dim_with(Exec::default(), n)
    }

    /// `dim Z^n = dim C^n − rank δ_n`, `dim B^n = rank δ_{n−1}`. Degree 0 and
    /// the coboundaries in degree 1 only exist for regular complexes.
    pub fn cohomology_dim_with(&self, exec: Exec, n: usize) -> CohomologyDims {
        let basis = self.cochain_space_basis(n);
        let dim_z = basis.len() - self.coboundary_rank(exec, n, &basis);
        let dim_b = if n == 0 {
            0
        } else {
            self.coboundary_rank(exec, n - 1, &self.cochain_space_basis(n - 1))
        };
        CohomologyDims {
            dim_z,
            dim_b,
            dim_h: dim_z - dim_b,
        }
    }

    fn coboundary_rank(&self, exec: Exec, n: usize, basis: &[Cochain]) -> usize {
        if basis.is_empty() {
            return 0;
        }
        self.coboundary_on(exec, n, basis)
            .expect("compatible basis")
            .rank()
    }

    /// The same dimensions from explicit subspaces: `dim H = rank[Z | B] − rank B`,
    /// with `Z` the cocycles written in full coordinates and `B` the image of δ.
    pub fn cohomology_dim_by_quotient(&self, n: usize) -> CohomologyDims {
        let (d, m) = (self.source_dim(), self.target_dim());
        let full = binomial(d, n) * m;
        let basis = self.cochain_space_basis(n);
        let prev = if n == 0 {
            Vec::new()
        } else {
            self.cochain_space_basis(n - 1)
        };
        let b_cols: Vec<Vector> = if prev.is_empty() {
            Vec::new()
        } else {
            let op = Coboundary::new(self, n - 1).expect("defined degree");
            prev.iter().map(|b| op.apply(b).flat()).collect()
        };
        let delta = if basis.is_empty() {
            Matrix::zeros(binomial(d, n + 1) * m, 0)
        } else {
            self.coboundary_on(Exec::default(), n, &basis)
                .expect("compatible basis")
        };
        let z_cols: Vec<Vector> = delta
            .kernel_basis()
            .iter()
            .map(|c| {
                let mut v = zero_vec(full);
                for (ci, b) in c.iter().zip(&basis) {
                    if !ci.is_zero() {
                        axpy(&mut v, ci, &b.flat());
                    }
                }
                v
            })
            .collect();
        let rank_of = |cols: &[Vector]| {
            if cols.is_empty() {
                0
            } else {
                Matrix::from_columns(cols, full)
                    .expect("flat coordinates")
                    .rank()
            }
        };
        let dim_z = rank_of(&z_cols);
        let dim_b = rank_of(&b_cols);
        let both: Vec<Vector> = z_cols.iter().chain(&b_cols).cloned().collect();
        CohomologyDims {
            dim_z,
            dim_b,
            dim_h: rank_of(&both) - dim_b,
        }
    }
}

/// `δ` in a fixed degree with its twisted actions precomputed.
struct Coboundary<'a> {
    complex: &'a Complex,
    arity: usize,
    // ρ(σ^{n−1} e_i), or ρ(σ^{-1} e_i) in degree 0
    actions: Vec<Matrix>,
    twisted: Vec<Vector>,
}

impl<'a> Coboundary<'a> {
    fn new(complex: &'a Complex, arity: usize) -> Result<Self> {
        let sigma = complex.source_twist();
        let d = complex.source_dim();
        let shift = if arity == 0 {
            complex.require_regular()?;
            complex.rep.algebra().alpha_inverse_or_err()?
        } else {
            sigma.pow((arity - 1) as u32)?
        };
        let actions = (0..d)
            .map(|i| complex.rep.action(&shift.column(i)))
            .collect();
        let twisted = (0..d).map(|i| sigma.column(i)).collect();
        Ok(Coboundary {
            complex,
            arity,
            actions,
            twisted,
        })
    }

    fn apply(&self, f: &Cochain) -> Cochain {
        debug_assert_eq!(f.arity, self.arity);
        let n = self.arity;
        let g = self.complex.rep.algebra();
        let (d, m) = (self.complex.source_dim(), self.complex.target_dim());
        Cochain::from_fn(n + 1, d, m, |t| {
            let mut out = zero_vec(m);
            for p in 0..=n {
                let rest: Vec<usize> = t
                    .iter()
                    .enumerate()
                    .filter(|&(q, _)| q != p)
                    .map(|(_, &i)| i)
                    .collect();
                let val = &f.coeffs[rank(d, &rest)];
                let term = self.actions[t[p]].apply(val);
                let sign = if p % 2 == 0 {
                    Scalar::one()
                } else {
                    -Scalar::one()
                };
                axpy(&mut out, &sign, &term);
            }
            for p in 0..=n {
                for q in p + 1..=n {
                    let br = g.bracket_basis(t[p], t[q]);
                    if is_zero_vec(br) {
                        continue;
                    }
                    let mut args = Vec::with_capacity(n);
                    args.push(br.clone());
                    for (r, &i) in t.iter().enumerate() {
                        if r != p && r != q {
                            args.push(self.twisted[i].clone());
                        }
                    }
                    let sign = if (p + q) % 2 == 0 {
                        Scalar::one()
                    } else {
                        -Scalar::one()
                    };
                    axpy(&mut out, &sign, &f.eval(&args));
                }
            }
            out
        })
    }
}
