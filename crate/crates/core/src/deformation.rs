//! Linear and truncated formal deformations of O-operators on regular
//! hom-Lie algebras: generators, Nijenhuis elements, equivalences,
//! obstructions and order-by-order extension.

use num_traits::Zero;

use crate::cochain::Cochain;
use crate::error::{dim_err, Error, Result};
use crate::exactnum::{add_vec, frac, sub_vec, unit_vec, zero_vec, Matrix, Scalar, Vector};
use crate::graded::DerivedBracket;
use crate::ooperator::OOperatorContext;
use crate::report::{check_eq, Failure};
use crate::structures::Representation;

fn require_regular(rep: &Representation) -> Result<()> {
    rep.algebra().alpha_inverse_or_err()?;
    rep.beta_inverse_or_err()?;
    Ok(())
}

fn check_operator(rep: &Representation, t: &Matrix, what: &str) -> Result<()> {
    let (n, m) = (rep.algebra().dim(), rep.dim());
    if t.rows() != n || t.cols() != m {
        return Err(dim_err(format!(
            "{what} is {}x{}, expected {n}x{m}",
            t.rows(),
            t.cols()
        )));
    }
    Ok(())
}

/// `[Av, Bw]` and `A({Bv, w} − {Bw, v})` summed over the given pairs of
/// operators, evaluated at the basis pair `(v, w)`.
fn o_sides(
    rep: &Representation,
    pairs: &[(&Matrix, &Matrix)],
    v: usize,
    w: usize,
) -> (Vector, Vector) {
    let g = rep.algebra();
    let m = rep.dim();
    let mut lhs = zero_vec(g.dim());
    let mut rhs = zero_vec(g.dim());
    for (a, b) in pairs {
        lhs = add_vec(&lhs, &g.bracket(&a.column(v), &b.column(w)));
        let inner = sub_vec(
            &rep.act(&b.column(v), &unit_vec(m, w)),
            &rep.act(&b.column(w), &unit_vec(m, v)),
        );
        rhs = add_vec(&rhs, &a.apply(&inner));
    }
    (lhs, rhs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearDeformationReport {
    /// `𝔗∘β = α∘𝔗`.
    pub commuting: bool,
    /// `[Tv,𝔗w] + [𝔗v,Tw] = T({𝔗v,w} − {𝔗w,v}) + 𝔗({Tv,w} − {Tw,v})`.
    pub cocycle: bool,
    /// `[𝔗v,𝔗w] = 𝔗({𝔗v,w} − {𝔗w,v})`.
    pub generator_is_o_operator: bool,
    pub failures: Vec<Failure>,
}

impl LinearDeformationReport {
    pub fn valid(&self) -> bool {
        self.commuting && self.cocycle && self.generator_is_o_operator
    }
}

pub const COMMUTING: &str = "generator(beta v) = alpha(generator v)";
pub const LINEAR_COCYCLE: &str = "[Tv,Gw] + [Gv,Tw] = T({Gv,w} - {Gw,v}) + G({Tv,w} - {Tw,v})";
pub const GENERATOR_O: &str = "[Gv,Gw] = G({Gv,w} - {Gw,v})";

/// Whether `T + t𝔗` is an O-operator for every `t`.
pub fn linear_deformation_check(
    rep: &Representation,
    t: &Matrix,
    gen: &Matrix,
) -> Result<LinearDeformationReport> {
    require_regular(rep)?;
    check_operator(rep, t, "operator")?;
    check_operator(rep, gen, "generator")?;
    let g = rep.algebra();
    let m = rep.dim();
    let mut failures = Vec::new();
    let lhs = gen.dot(rep.beta());
    let rhs = g.alpha().dot(gen);
    let mut commuting = true;
    for v in 0..m {
        commuting &= check_eq(&mut failures, COMMUTING, &[v], lhs.column(v), rhs.column(v));
    }
    let mut cocycle = true;
    let mut generator_is_o_operator = true;
    for v in 0..m {
        for w in v + 1..m {
            let (l1, r1) = o_sides(rep, &[(t, gen), (gen, t)], v, w);
            cocycle &= check_eq(&mut failures, LINEAR_COCYCLE, &[v, w], l1, r1);
            let (l2, r2) = o_sides(rep, &[(gen, gen)], v, w);
            generator_is_o_operator &= check_eq(&mut failures, GENERATOR_O, &[v, w], l2, r2);
        }
    }
    Ok(LinearDeformationReport {
        commuting,
        cocycle,
        generator_is_o_operator,
        failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NijenhuisElementReport {
    /// `α(x) = x`.
    pub fixed: bool,
    /// `[[x,y],[x,z]] = 0`.
    pub brackets_commute: bool,
    /// `ρ([x,y])ρ(x)v = 0`.
    pub action_vanishes: bool,
    /// `[x, Tρ(x)v + [Tv, x]] = 0`.
    pub operator_condition: bool,
    pub failures: Vec<Failure>,
}

impl NijenhuisElementReport {
    pub fn is_nijenhuis(&self) -> bool {
        self.fixed && self.brackets_commute && self.action_vanishes && self.operator_condition
    }
}

/// Whether `x` is a Nijenhuis element for `T`.
pub fn nijenhuis_element_check(
    rep: &Representation,
    t: &Matrix,
    x: &[Scalar],
) -> Result<NijenhuisElementReport> {
    require_regular(rep)?;
    check_operator(rep, t, "operator")?;
    let g = rep.algebra();
    let (n, m) = (g.dim(), rep.dim());
    if x.len() != n {
        return Err(dim_err(format!(
            "element of length {} in a {n}-dimensional algebra",
            x.len()
        )));
    }
    let mut failures = Vec::new();
    let fixed = check_eq(
        &mut failures,
        "alpha(x) = x",
        &[],
        g.alpha().apply(x),
        x.to_vec(),
    );
    let ad: Vec<Vector> = (0..n).map(|y| g.bracket(x, &unit_vec(n, y))).collect();
    let mut brackets_commute = true;
    for y in 0..n {
        for z in y + 1..n {
            brackets_commute &= check_eq(
                &mut failures,
                "[[x,y],[x,z]] = 0",
                &[y, z],
                g.bracket(&ad[y], &ad[z]),
                zero_vec(n),
            );
        }
    }
    let rho_x = rep.action(x);
    let mut action_vanishes = true;
    for (y, ad_y) in ad.iter().enumerate() {
        let op = rep.action(ad_y).dot(&rho_x);
        for v in 0..m {
            action_vanishes &= check_eq(
                &mut failures,
                "rho([x,y]) rho(x) v = 0",
                &[y, v],
                op.column(v),
                zero_vec(m),
            );
        }
    }
    let mut operator_condition = true;
    for v in 0..m {
        let inner = add_vec(&t.apply(&rho_x.column(v)), &g.bracket(&t.column(v), x));
        operator_condition &= check_eq(
            &mut failures,
            "[x, T rho(x) v + [Tv, x]] = 0",
            &[v],
            g.bracket(x, &inner),
            zero_vec(n),
        );
    }
    Ok(NijenhuisElementReport {
        fixed,
        brackets_commute,
        action_vanishes,
        operator_condition,
        failures,
    })
}

/// `T_t = T + t T_1 + … + t^N T_N`, kept to order `N = terms.len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedDeformation {
    pub base: Matrix,
    pub terms: Vec<Matrix>,
}

impl TruncatedDeformation {
    pub fn new(base: Matrix, terms: Vec<Matrix>) -> Self {
        TruncatedDeformation { base, terms }
    }

    pub fn order(&self) -> usize {
        self.terms.len()
    }

    /// `T_k`, with `T_0` the base and zero beyond the order.
    pub fn term(&self, k: usize) -> Option<&Matrix> {
        match k {
            0 => Some(&self.base),
            _ => self.terms.get(k - 1),
        }
    }

    fn check(&self, rep: &Representation) -> Result<()> {
        check_operator(rep, &self.base, "base")?;
        for (i, t) in self.terms.iter().enumerate() {
            check_operator(rep, t, &format!("term {}", i + 1))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderCheck {
    pub k: usize,
    /// `Σ_{i+j=k} [T_i v, T_j w] = Σ_{i+j=k} T_i({T_j v, w} − {T_j w, v})`.
    pub holds: bool,
    /// `Σ_{i+j=k} {{T_i, T_j}} = 0`.
    pub bracket_sum_zero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalDeformationReport {
    /// Every `T_i` commutes with the twists.
    pub compatible: bool,
    pub orders: Vec<OrderCheck>,
    pub failures: Vec<Failure>,
}

impl FormalDeformationReport {
    pub fn valid(&self) -> bool {
        self.compatible && self.orders.iter().all(|o| o.holds)
    }

    pub fn first_failing_order(&self) -> Option<usize> {
        self.orders.iter().find(|o| !o.holds).map(|o| o.k)
    }
}

fn bracket_sum(
    db: &DerivedBracket,
    d: &TruncatedDeformation,
    k: usize,
    positive_only: bool,
) -> Result<Cochain> {
    let rep = db.representation();
    let mut acc = Cochain::zero(2, rep.dim(), rep.algebra().dim());
    let lo = usize::from(positive_only);
    for i in lo..=k - lo {
        let j = k - i;
        if let (Some(a), Some(b)) = (d.term(i), d.term(j)) {
            acc = acc.add(&db.bracket(&Cochain::from_matrix(a), &Cochain::from_matrix(b))?)?;
        }
    }
    Ok(acc)
}

/// Checks the order-`k` deformation equations for `k = 0..=N` on every basis
/// pair, and the equivalent bracket form `Σ {{T_i, T_j}} = 0`.
pub fn formal_deformation_check(
    rep: &Representation,
    d: &TruncatedDeformation,
) -> Result<FormalDeformationReport> {
    require_regular(rep)?;
    d.check(rep)?;
    let g = rep.algebra();
    let m = rep.dim();
    let mut failures = Vec::new();
    let mut compatible = true;
    for k in 0..=d.order() {
        let t = d.term(k).expect("within order");
        let lhs = t.dot(rep.beta());
        let rhs = g.alpha().dot(t);
        for v in 0..m {
            compatible &= check_eq(
                &mut failures,
                "T_k(beta v) = alpha(T_k v)",
                &[k, v],
                lhs.column(v),
                rhs.column(v),
            );
        }
    }
    let db = DerivedBracket::new(rep);
    let mut orders = Vec::new();
    for k in 0..=d.order() {
        let pairs: Vec<(&Matrix, &Matrix)> = (0..=k)
            .map(|i| {
                (
                    d.term(i).expect("within order"),
                    d.term(k - i).expect("within order"),
                )
            })
            .collect();
        let mut holds = true;
        for v in 0..m {
            for w in v + 1..m {
                let (l, r) = o_sides(rep, &pairs, v, w);
                holds &= check_eq(
                    &mut failures,
                    "order-k deformation equation",
                    &[k, v, w],
                    l,
                    r,
                );
            }
        }
        let bracket_sum_zero = bracket_sum(&db, d, k, false)?.is_zero();
        orders.push(OrderCheck {
            k,
            holds,
            bracket_sum_zero,
        });
    }
    Ok(FormalDeformationReport {
        compatible,
        orders,
        failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Infinitesimal {
    /// The index of the first nonzero term.
    pub index: usize,
    pub term: Matrix,
    /// `δ_T(T_index) = 0`.
    pub is_cocycle: bool,
}

/// The first nonzero term of a deformation and whether it is a 1-cocycle of
/// the O-operator complex.
pub fn infinitesimal_check(
    rep: &Representation,
    d: &TruncatedDeformation,
) -> Result<Infinitesimal> {
    require_regular(rep)?;
    d.check(rep)?;
    let (index, term) = d
        .terms
        .iter()
        .enumerate()
        .find(|(_, t)| !t.is_zero())
        .map(|(i, t)| (i + 1, t.clone()))
        .ok_or_else(|| Error::Invalid("trivial deformation, no infinitesimal".into()))?;
    let ctx = OOperatorContext::new(rep, &d.base)?;
    let is_cocycle = ctx.coboundary(&Cochain::from_matrix(&term))?.is_zero();
    Ok(Infinitesimal {
        index,
        term,
        is_cocycle,
    })
}

/// `Θ = −½ Σ_{i+j=N+1, i,j>0} {{T_i, T_j}}`.
pub fn obstruction(rep: &Representation, d: &TruncatedDeformation) -> Result<Cochain> {
    require_regular(rep)?;
    d.check(rep)?;
    let db = DerivedBracket::new(rep);
    Ok(bracket_sum(&db, d, d.order() + 1, true)?.scale(&frac(-1, 2)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extension {
    /// `T_{N+1}` with `{{T, T_{N+1}}} = Θ`, and the extended deformation.
    Extended {
        term: Matrix,
        deformation: TruncatedDeformation,
    },
    /// `Θ` is not in the image of `{{T, ·}}` on `C^1`: the augmented system
    /// has larger rank than the coefficient matrix.
    Obstructed {
        obstruction: Cochain,
        rank: usize,
        augmented_rank: usize,
    },
}

/// Solves `{{T, X}} = Θ` over the twist-compatible 1-cochains.
pub fn extend_order(rep: &Representation, d: &TruncatedDeformation) -> Result<Extension> {
    let theta = obstruction(rep, d)?;
    let ctx = OOperatorContext::new(rep, &d.base)?;
    let db = ctx.derived_bracket();
    let t = ctx.operator_cochain();
    let basis = ctx.complex().compatible_subspace_basis(1);
    let rows = theta.flat().len();
    let cols = basis
        .iter()
        .map(|b| db.bracket(&t, b).map(|c| c.flat()))
        .collect::<Result<Vec<_>>>()?;
    let system = Matrix::from_columns(&cols, rows)?;
    let target = theta.flat();
    match system.solve(&target)? {
        Some(coef) => {
            let mut x = Cochain::zero(1, rep.dim(), rep.algebra().dim());
            for (c, b) in coef.iter().zip(&basis) {
                if !c.is_zero() {
                    x = x.add(&b.scale(c))?;
                }
            }
            let term = x.to_matrix()?;
            let mut terms = d.terms.clone();
            terms.push(term.clone());
            Ok(Extension::Extended {
                term,
                deformation: TruncatedDeformation::new(d.base.clone(), terms),
            })
        }
        None => {
            let augmented = system.hcat(&Matrix::from_columns(&[target], rows)?)?;
            Ok(Extension::Obstructed {
                obstruction: theta,
                rank: system.rank(),
                augmented_rank: augmented.rank(),
            })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    /// `φ^g_t ∘ T_t = T̄_t ∘ φ^V_t`.
    pub intertwines: bool,
    /// `φ^g_t` preserves the bracket.
    pub algebra_morphism: bool,
    /// `ρ(φ^g_t y)(φ^V_t v) = φ^V_t(ρ(y)v)`.
    pub equivariant: bool,
    /// Both maps commute with the twists.
    pub commutes_with_twists: bool,
    /// `T_1 − T̄_1 = δ(x)`.
    pub infinitesimal_relation: bool,
    pub failures: Vec<Failure>,
}

impl EquivalenceReport {
    pub fn equivalent(&self) -> bool {
        self.intertwines && self.algebra_morphism && self.equivariant && self.commutes_with_twists
    }
}

fn coefficient(series: &[Matrix], k: usize, rows: usize, cols: usize) -> Matrix {
    series
        .get(k)
        .cloned()
        .unwrap_or_else(|| Matrix::zeros(rows, cols))
}

/// Checks that `φ^g_t = Id + t·ad†_x + Σ_{i≥2} t^i φ^g_i` and
/// `φ^V_t = Id + t·ρ(x)† + Σ_{i≥2} t^i φ^V_i` form a formal isomorphism
/// from `d1` to `d2`, coefficientwise in `t` up to `up_to`. Here
/// `ad†_x(y) = α^{-1}[x,y]` and `ρ(x)†(v) = β^{-1}ρ(x)v`.
pub fn equivalence_check(
    rep: &Representation,
    d1: &TruncatedDeformation,
    d2: &TruncatedDeformation,
    x: &[Scalar],
    phi_g_higher: &[Matrix],
    phi_v_higher: &[Matrix],
    up_to: usize,
) -> Result<EquivalenceReport> {
    require_regular(rep)?;
    d1.check(rep)?;
    d2.check(rep)?;
    let g = rep.algebra();
    let (n, m) = (g.dim(), rep.dim());
    if x.len() != n {
        return Err(dim_err(format!(
            "element of length {} in a {n}-dimensional algebra",
            x.len()
        )));
    }
    for p in phi_g_higher {
        if p.rows() != n || p.cols() != n {
            return Err(dim_err(
                "higher algebra maps must be square of the algebra dimension",
            ));
        }
    }
    for p in phi_v_higher {
        if p.rows() != m || p.cols() != m {
            return Err(dim_err(
                "higher module maps must be square of the module dimension",
            ));
        }
    }
    let a_inv = g.alpha_inverse_or_err()?;
    let b_inv = rep.beta_inverse_or_err()?;
    let mut failures = Vec::new();
    let fixed = check_eq(
        &mut failures,
        "alpha(x) = x",
        &[],
        g.alpha().apply(x),
        x.to_vec(),
    );

    let mut phi_g = vec![Matrix::identity(n), a_inv.dot(&g.ad(x))];
    phi_g.extend(phi_g_higher.iter().cloned());
    let mut phi_v = vec![Matrix::identity(m), b_inv.dot(&rep.action(x))];
    phi_v.extend(phi_v_higher.iter().cloned());
    let t1: Vec<Matrix> = (0..=d1.order())
        .map(|k| d1.term(k).unwrap().clone())
        .collect();
    let t2: Vec<Matrix> = (0..=d2.order())
        .map(|k| d2.term(k).unwrap().clone())
        .collect();

    let mut intertwines = true;
    let mut algebra_morphism = true;
    let mut equivariant = true;
    let mut commutes_with_twists = fixed;
    for k in 0..=up_to {
        let mut lhs = Matrix::zeros(n, m);
        let mut rhs = Matrix::zeros(n, m);
        for i in 0..=k {
            let j = k - i;
            lhs = lhs.add(&coefficient(&phi_g, i, n, n).dot(&coefficient(&t1, j, n, m)))?;
            rhs = rhs.add(&coefficient(&t2, i, n, m).dot(&coefficient(&phi_v, j, m, m)))?;
        }
        for v in 0..m {
            intertwines &= check_eq(
                &mut failures,
                "phi_g T_t = T'_t phi_V",
                &[k, v],
                lhs.column(v),
                rhs.column(v),
            );
        }

        let pg_k = coefficient(&phi_g, k, n, n);
        for y in 0..n {
            for z in y + 1..n {
                let l = pg_k.apply(g.bracket_basis(y, z));
                let mut r = zero_vec(n);
                for i in 0..=k {
                    let (pi, pj) = (
                        coefficient(&phi_g, i, n, n),
                        coefficient(&phi_g, k - i, n, n),
                    );
                    r = add_vec(&r, &g.bracket(&pi.column(y), &pj.column(z)));
                }
                algebra_morphism &= check_eq(
                    &mut failures,
                    "phi_g[y,z] = [phi_g y, phi_g z]",
                    &[k, y, z],
                    l,
                    r,
                );
            }
        }

        let pv_k = coefficient(&phi_v, k, m, m);
        for y in 0..n {
            let mut l = Matrix::zeros(m, m);
            for i in 0..=k {
                let pi = coefficient(&phi_g, i, n, n);
                l = l.add(
                    &rep.action(&pi.column(y))
                        .dot(&coefficient(&phi_v, k - i, m, m)),
                )?;
            }
            let r = pv_k.dot(&rep.rho()[y]);
            for v in 0..m {
                equivariant &= check_eq(
                    &mut failures,
                    "rho(phi_g y)(phi_V v) = phi_V(rho(y) v)",
                    &[k, y, v],
                    l.column(v),
                    r.column(v),
                );
            }
        }

        let (ga, ag) = (pg_k.dot(g.alpha()), g.alpha().dot(&pg_k));
        for c in 0..n {
            commutes_with_twists &= check_eq(
                &mut failures,
                "phi_g alpha = alpha phi_g",
                &[k, c],
                ga.column(c),
                ag.column(c),
            );
        }
        let (vb, bv) = (pv_k.dot(rep.beta()), rep.beta().dot(&pv_k));
        for c in 0..m {
            commutes_with_twists &= check_eq(
                &mut failures,
                "phi_V beta = beta phi_V",
                &[k, c],
                vb.column(c),
                bv.column(c),
            );
        }
    }

    let infinitesimal_relation = if fixed {
        let diff = coefficient(&t1, 1, n, m).sub(&coefficient(&t2, 1, n, m))?;
        let expected = zero_coboundary_matrix(rep, &d1.base, x)?;
        let mut ok = true;
        for v in 0..m {
            ok &= check_eq(
                &mut failures,
                "T_1 - T'_1 = delta(x)",
                &[v],
                diff.column(v),
                expected.column(v),
            );
        }
        ok
    } else {
        false
    };
    Ok(EquivalenceReport {
        intertwines,
        algebra_morphism,
        equivariant,
        commutes_with_twists,
        infinitesimal_relation,
        failures,
    })
}

/// `δ(x)(v) = [α^{-1}Tv, x] + T{x, β^{-1}v}` as a matrix, for any `T`.
pub fn zero_coboundary_matrix(rep: &Representation, t: &Matrix, x: &[Scalar]) -> Result<Matrix> {
    let g = rep.algebra();
    let a_inv = g.alpha_inverse_or_err()?;
    let b_inv = rep.beta_inverse_or_err()?;
    let rho_x = rep.action(x);
    let cols: Vec<Vector> = (0..rep.dim())
        .map(|v| {
            let first = g.bracket(&a_inv.apply(&t.column(v)), x);
            add_vec(&first, &t.apply(&rho_x.apply(&b_inv.column(v))))
        })
        .collect();
    Matrix::from_columns(&cols, g.dim())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivialDeformation {
    /// `𝔗 = δ(x)`.
    pub generator: Matrix,
    pub linear: LinearDeformationReport,
    /// `(Id + t·ad†_x, Id + t·ρ(x)†)` from `T + t𝔗` to `T`, checked to `t²`.
    pub equivalence: EquivalenceReport,
}

impl TrivialDeformation {
    pub fn certified(&self) -> bool {
        self.linear.valid() && self.equivalence.equivalent()
    }
}

/// The trivial linear deformation generated by a Nijenhuis element.
pub fn trivial_deformation_from_nijenhuis(
    rep: &Representation,
    t: &Matrix,
    x: &[Scalar],
) -> Result<TrivialDeformation> {
    let report = nijenhuis_element_check(rep, t, x)?;
    if let Some(f) = report.failures.first() {
        return Err(Error::Precondition(format!(
            "not a Nijenhuis element: {} fails at {:?}",
            f.condition, f.indices
        )));
    }
    let ctx = OOperatorContext::new(rep, t)?;
    let generator = ctx.zero_coboundary(x)?.to_matrix()?;
    let linear = linear_deformation_check(rep, t, &generator)?;
    let deformed = TruncatedDeformation::new(t.clone(), vec![generator.clone()]);
    let base = TruncatedDeformation::new(t.clone(), Vec::new());
    let equivalence = equivalence_check(rep, &deformed, &base, x, &[], &[], 2)?;
    Ok(TrivialDeformation {
        generator,
        linear,
        equivalence,
    })
}

/// `Σ_{i+j=k} {{T_i,T_j}}` for each `k ≤ N`.
pub fn bracket_sums(rep: &Representation, d: &TruncatedDeformation) -> Result<Vec<Cochain>> {
    require_regular(rep)?;
    d.check(rep)?;
    let db = DerivedBracket::new(rep);
    (0..=d.order())
        .map(|k| bracket_sum(&db, d, k, false))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;
    use crate::fixtures;
    use crate::structures::{adjoint_rep, Representation};

    fn a2_setup() -> (Representation, Matrix) {
        (
            adjoint_rep(&fixtures::a2(), 0),
            Matrix::from_i64(&[&[0, 1], &[0, 0]]),
        )
    }

    #[test]
    fn linear_examples() {
        let (rep, r) = a2_setup();
        assert!(linear_deformation_check(&rep, &r, &Matrix::zeros(2, 2))
            .unwrap()
            .valid());
        assert!(linear_deformation_check(&rep, &r, &r).unwrap().valid());
        let bad = linear_deformation_check(&rep, &r, &Matrix::identity(2)).unwrap();
        assert!(!bad.valid());
        assert!(!bad.failures.is_empty());
        let sing = Representation::trivial(
            crate::HomLieAlgebra::abelian(Matrix::zeros(2, 2)),
            Matrix::identity(1),
        );
        assert!(matches!(
            linear_deformation_check(&sing, &Matrix::zeros(2, 1), &Matrix::zeros(2, 1)),
            Err(Error::NonRegular(_))
        ));
    }

    #[test]
    fn nijenhuis_examples() {
        let (rep, r) = a2_setup();
        assert!(nijenhuis_element_check(&rep, &r, &[int(0), int(0)])
            .unwrap()
            .is_nijenhuis());
        assert!(nijenhuis_element_check(&rep, &r, &unit_vec(2, 0))
            .unwrap()
            .is_nijenhuis());
        assert!(!nijenhuis_element_check(&rep, &r, &unit_vec(2, 1))
            .unwrap()
            .is_nijenhuis());
        let triv = Representation::trivial(fixtures::a1(), Matrix::identity(2));
        let t = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        assert!(nijenhuis_element_check(&triv, &t, &[int(5), int(-1)])
            .unwrap()
            .is_nijenhuis());
    }

    #[test]
    fn trivial_deformations() {
        let (rep, r) = a2_setup();
        let td = trivial_deformation_from_nijenhuis(&rep, &r, &unit_vec(2, 0)).unwrap();
        assert_eq!(td.generator, r);
        assert!(td.certified());
        assert!(td.equivalence.infinitesimal_relation);
        let zero = trivial_deformation_from_nijenhuis(&rep, &r, &[int(0), int(0)]).unwrap();
        assert!(zero.generator.is_zero() && zero.certified());
        let triv = Representation::trivial(fixtures::a1(), Matrix::identity(2));
        let t = Matrix::zeros(2, 2);
        let td = trivial_deformation_from_nijenhuis(&triv, &t, &[int(2), int(3)]).unwrap();
        assert!(td.generator.is_zero());
        assert!(trivial_deformation_from_nijenhuis(&rep, &r, &unit_vec(2, 1)).is_err());
    }

    #[test]
    fn formal_examples() {
        let (rep, r) = a2_setup();
        let d0 = TruncatedDeformation::new(r.clone(), vec![]);
        assert!(formal_deformation_check(&rep, &d0).unwrap().valid());
        let dz = TruncatedDeformation::new(r.clone(), vec![Matrix::zeros(2, 2); 3]);
        assert!(formal_deformation_check(&rep, &dz).unwrap().valid());
        let bad = TruncatedDeformation::new(Matrix::identity(2), vec![]);
        let rep_bad = formal_deformation_check(&rep, &bad).unwrap();
        assert_eq!(rep_bad.first_failing_order(), Some(0));
        assert!(!rep_bad.orders[0].bracket_sum_zero);
        let d1 = TruncatedDeformation::new(r.clone(), vec![r.clone()]);
        let rep1 = formal_deformation_check(&rep, &d1).unwrap();
        assert!(rep1.valid());
        for o in &rep1.orders {
            assert_eq!(o.holds, o.bracket_sum_zero);
        }
    }

    #[test]
    fn infinitesimals_and_obstructions() {
        let (rep, r) = a2_setup();
        let d = TruncatedDeformation::new(r.clone(), vec![Matrix::zeros(2, 2), r.clone()]);
        let inf = infinitesimal_check(&rep, &d).unwrap();
        assert_eq!(inf.index, 2);
        assert!(inf.is_cocycle);
        let dz = TruncatedDeformation::new(r.clone(), vec![Matrix::zeros(2, 2)]);
        assert!(infinitesimal_check(&rep, &dz).is_err());
        assert!(obstruction(&rep, &dz).unwrap().is_zero());
        let d1 = TruncatedDeformation::new(r.clone(), vec![r.clone()]);
        assert!(obstruction(&rep, &d1).unwrap().is_zero());
    }

    #[test]
    fn extension_and_obstructed_instance() {
        let (rep, r) = a2_setup();
        let d1 = TruncatedDeformation::new(r.clone(), vec![r.clone()]);
        match extend_order(&rep, &d1).unwrap() {
            Extension::Extended { deformation, .. } => {
                assert!(formal_deformation_check(&rep, &deformation)
                    .unwrap()
                    .valid())
            }
            other => panic!("expected an extension, got {other:?}"),
        }
        let zero = Matrix::zeros(2, 2);
        let d = TruncatedDeformation::new(zero, vec![Matrix::identity(2)]);
        assert!(formal_deformation_check(&rep, &d).unwrap().valid());
        match extend_order(&rep, &d).unwrap() {
            Extension::Obstructed {
                rank,
                augmented_rank,
                obstruction,
            } => {
                assert!(augmented_rank > rank);
                assert!(!obstruction.is_zero());
            }
            other => panic!("expected an obstruction, got {other:?}"),
        }
    }
}
