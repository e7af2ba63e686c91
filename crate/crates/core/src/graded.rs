//! Circle product, the Nijenhuis–Richardson bracket and the derived bracket
//! on `Hom(∧^* V, g)`.
//!
//! Cochains on a single carrier `W` with twist `σ` form a graded Lie algebra
//! where an arity-`k` cochain has degree `k − 1`.

use num_traits::{One, Zero};

use crate::cochain::Cochain;
use crate::combin::{combinations, shuffles};
use crate::error::{dim_err, Error, Result};
use crate::exactnum::{axpy, zero_vec, Matrix, Scalar, Vector};
use crate::par::{self, Exec};
use crate::structures::{semidirect_product, HomLieAlgebra, Representation};

fn check_carrier(phi: &Cochain, psi: &Cochain, twist: &Matrix) -> Result<usize> {
    let d = twist.rows();
    if !twist.is_square() {
        return Err(Error::NotSquare {
            rows: twist.rows(),
            cols: twist.cols(),
        });
    }
    for c in [phi, psi] {
        if c.source_dim() != d || c.target_dim() != d {
            return Err(dim_err(format!(
                "cochain {}->{} on a carrier of dimension {d}",
                c.source_dim(),
                c.target_dim()
            )));
        }
    }
    if phi.arity() == 0 || psi.arity() == 0 {
        return Err(Error::Invalid(
            "graded cochains have arity at least 1".into(),
        ));
    }
    Ok(d)
}

pub fn circle_product(phi: &Cochain, psi: &Cochain, twist: &Matrix) -> Result<Cochain> {
    circle_product_with(Exec::default(), phi, psi, twist)
}

/// `(φ∘ψ)(x_1,…) = Σ_{(b, a−1)-shuffles} ± φ(ψ(x_τ(1),…,x_τ(b)), σ^{b−1}x_τ(b+1), …)`
/// for `φ` of arity `a` and `ψ` of arity `b`.
pub fn circle_product_with(
    exec: Exec,
    phi: &Cochain,
    psi: &Cochain,
    twist: &Matrix,
) -> Result<Cochain> {
    let d = check_carrier(phi, psi, twist)?;
    let (a, b) = (phi.arity(), psi.arity());
    let out_arity = a + b - 1;
    let shifted = twist.pow((b - 1) as u32)?;
    let shifted_cols: Vec<Vector> = (0..d).map(|i| shifted.column(i)).collect();
    let shuffle_list = shuffles(&[b, a - 1]);
    let tuples = combinations(d, out_arity);
    let coeffs = par::map(exec, &tuples, |t| {
        let mut out = zero_vec(d);
        for sh in &shuffle_list {
            let inner_idx: Vec<usize> = sh.blocks[0].iter().map(|&p| t[p]).collect();
            let inner = psi.value(&inner_idx);
            if inner.iter().all(Zero::is_zero) {
                continue;
            }
            let mut args = Vec::with_capacity(a);
            args.push(inner);
            args.extend(sh.blocks[1].iter().map(|&p| shifted_cols[t[p]].clone()));
            let val = phi.eval(&args);
            let sign = if sh.sign > 0 {
                Scalar::one()
            } else {
                -Scalar::one()
            };
            axpy(&mut out, &sign, &val);
        }
        out
    });
    Cochain::from_coeffs(out_arity, d, d, coeffs)
}

pub fn nr_bracket(phi: &Cochain, psi: &Cochain, twist: &Matrix) -> Result<Cochain> {
    nr_bracket_with(Exec::default(), phi, psi, twist)
}

/// `[φ,ψ] = (−1)^{pq} φ∘ψ − ψ∘φ` with `p = arity(φ) − 1`, `q = arity(ψ) − 1`.
pub fn nr_bracket_with(
    exec: Exec,
    phi: &Cochain,
    psi: &Cochain,
    twist: &Matrix,
) -> Result<Cochain> {
    let p = phi.arity() - 1;
    let q = psi.arity() - 1;
    let left = circle_product_with(exec, phi, psi, twist)?;
    let right = circle_product_with(exec, psi, phi, twist)?;
    let left = if (p * q).is_multiple_of(2) {
        left
    } else {
        left.scale(&-Scalar::one())
    };
    left.sub(&right)
}

/// The arity-2 cochain `(μ+ρ)(x+v, y+w) = [x,y] + ρ(x)w − ρ(y)v` on `g ⊕ V`.
pub fn semidirect_cochain(rep: &Representation) -> (Cochain, Matrix) {
    let s = semidirect_product(rep);
    let d = s.dim();
    let pi = Cochain::from_fn(2, d, d, |t| s.bracket_basis(t[0], t[1]).clone());
    (pi, s.alpha().clone())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaurerCartanReport {
    /// `μ+ρ` commutes with the twist `α+β`.
    pub in_g1: bool,
    /// `[μ+ρ, μ+ρ] = 0`.
    pub square_zero: bool,
}

impl MaurerCartanReport {
    pub fn is_maurer_cartan(&self) -> bool {
        self.in_g1 && self.square_zero
    }
}

/// Whether the candidate bracket and action form a Maurer–Cartan element
/// `μ+ρ` of the graded Lie algebra on `g ⊕ V`.
pub fn check_maurer_cartan(rep: &Representation) -> MaurerCartanReport {
    let (pi, twist) = semidirect_cochain(rep);
    let in_g1 = pi.twist_defect(&twist, &twist).is_zero();
    let square_zero = nr_bracket(&pi, &pi, &twist)
        .expect("coherent carrier")
        .is_zero();
    MaurerCartanReport { in_g1, square_zero }
}

/// `{{P,Q}} = (−1)^n [[μ+ρ, P̃], Q̃]` on `Hom(∧^* V, g)`, where `P̃` is the
/// horizontal lift of `P` to `g ⊕ V`: it reads only the `V` components of
/// its arguments and lands in `g`. The outer brackets use the sign rule
/// `φ∘ψ − (−1)^{pq} ψ∘φ`, which differs from [`nr_bracket`] by `(−1)^{pq}`.
#[derive(Debug, Clone)]
pub struct DerivedBracket {
    rep: Representation,
    pi: Cochain,
    twist: Matrix,
    exec: Exec,
}

impl DerivedBracket {
    pub fn new(rep: &Representation) -> Self {
        let (pi, twist) = semidirect_cochain(rep);
        DerivedBracket {
            rep: rep.clone(),
            pi,
            twist,
            exec: Exec::default(),
        }
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    fn algebra(&self) -> &HomLieAlgebra {
        self.rep.algebra()
    }

    fn check(&self, p: &Cochain) -> Result<()> {
        let (n, m) = (self.algebra().dim(), self.rep.dim());
        if p.source_dim() != m || p.target_dim() != n {
            return Err(dim_err(format!(
                "expected a cochain {m}->{n}, got {}->{}",
                p.source_dim(),
                p.target_dim()
            )));
        }
        Ok(())
    }

    pub fn lift(&self, p: &Cochain) -> Cochain {
        let (n, m) = (self.algebra().dim(), self.rep.dim());
        let d = n + m;
        Cochain::from_fn(p.arity(), d, d, |t| {
            if t.iter().any(|&i| i < n) {
                return zero_vec(d);
            }
            let s: Vec<usize> = t.iter().map(|&i| i - n).collect();
            let mut v = p.value(&s);
            v.extend(zero_vec(m));
            v
        })
    }

    /// Values on tuples of `V` basis vectors, projected to `g`.
    pub fn restrict(&self, c: &Cochain) -> Cochain {
        let (n, m) = (self.algebra().dim(), self.rep.dim());
        Cochain::from_fn(c.arity(), m, n, |s| {
            let t: Vec<usize> = s.iter().map(|&i| i + n).collect();
            let mut v = c.value(&t);
            v.truncate(n);
            v
        })
    }

    /// `{{P,Q}}` computed on `g ⊕ V` and returned with its full lift, which is
    /// horizontal whenever the inputs are.
    pub fn bracket_lifted(&self, p: &Cochain, q: &Cochain) -> Result<Cochain> {
        self.check(p)?;
        self.check(q)?;
        if p.arity() == 0 || q.arity() == 0 {
            return Err(Error::Invalid(
                "use bracket_zero for arity-0 arguments".into(),
            ));
        }
        let inner = nr_bracket_with(self.exec, &self.pi, &self.lift(p), &self.twist)?;
        let outer = nr_bracket_with(self.exec, &inner, &self.lift(q), &self.twist)?;
        let (n, m) = (p.arity(), q.arity());
        Ok(if (n + n * m + 1) % 2 == 0 {
            outer
        } else {
            outer.scale(&-Scalar::one())
        })
    }

    pub fn bracket(&self, p: &Cochain, q: &Cochain) -> Result<Cochain> {
        Ok(self.restrict(&self.bracket_lifted(p, q)?))
    }

    /// `{{P,x}}(v_1,…,v_n) = Σ_i (−1)^{i−1} P({x, β^{-1}v_i}, v_1,…,v̂_i,…,v_n)
    /// + [α^{-1}P(v_1,…,v_n), α^{n−1}x]` for `x` fixed by `α`.
    pub fn bracket_zero(&self, p: &Cochain, x: &[Scalar]) -> Result<Cochain> {
        self.check(p)?;
        let g = self.algebra();
        let n = g.dim();
        if x.len() != n {
            return Err(dim_err(format!(
                "element of length {} in a {n}-dimensional algebra",
                x.len()
            )));
        }
        let a_inv = g.alpha_inverse_or_err()?;
        let b_inv = self.rep.beta_inverse_or_err()?;
        if g.alpha().apply(x) != x {
            return Err(Error::Precondition("x is not fixed by alpha".into()));
        }
        let k = p.arity();
        if k == 0 {
            return Err(Error::Invalid(
                "use zero_zero for two arity-0 arguments".into(),
            ));
        }
        let rho_x_binv = self.rep.action(x).dot(&b_inv);
        let m = self.rep.dim();
        let moved: Vec<Vector> = (0..m).map(|i| rho_x_binv.column(i)).collect();
        Ok(Cochain::from_fn(k, m, n, |t| {
            let mut out = g.bracket(&a_inv.apply(&p.value(t)), x);
            for i in 0..k {
                let mut args = Vec::with_capacity(k);
                args.push(moved[t[i]].clone());
                args.extend(
                    t.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != i)
                        .map(|(_, &c)| crate::exactnum::unit_vec(m, c)),
                );
                let sign = if i % 2 == 0 {
                    Scalar::one()
                } else {
                    -Scalar::one()
                };
                axpy(&mut out, &sign, &p.eval(&args));
            }
            out
        }))
    }

    /// `{{x,y}} = [x,y]`.
    pub fn zero_zero(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.algebra().bracket(x, y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, unit_vec};
    use crate::fixtures;
    use crate::structures::adjoint_rep;

    fn bracket_cochain(g: &HomLieAlgebra) -> Cochain {
        Cochain::from_fn(2, g.dim(), g.dim(), |t| g.bracket_basis(t[0], t[1]).clone())
    }

    #[test]
    fn circle_product_examples() {
        let a = Matrix::from_i64(&[&[1, 2], &[0, 1]]);
        let b = Matrix::from_i64(&[&[0, 1], &[3, 4]]);
        let id = Matrix::identity(2);
        let c = circle_product(&Cochain::from_matrix(&a), &Cochain::from_matrix(&b), &id).unwrap();
        assert_eq!(c.to_matrix().unwrap(), a.dot(&b));

        let a2 = fixtures::a2();
        let br = bracket_cochain(&a2);
        let c = circle_product(&br, &Cochain::from_matrix(&id), &id).unwrap();
        assert_eq!(c, br.scale(&int(2)));
        assert!(circle_product(&br, &Cochain::zero(1, 2, 2), &id)
            .unwrap()
            .is_zero());
        assert!(circle_product(&Cochain::zero(2, 2, 2), &br, &id)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn nr_bracket_examples() {
        let id = Matrix::identity(2);
        let phi = Cochain::from_matrix(&Matrix::from_i64(&[&[1, 2], &[3, 4]]));
        assert!(nr_bracket(&phi, &phi, &id).unwrap().is_zero());
        let a2 = fixtures::a2();
        let mu = bracket_cochain(&a2);
        let sq = nr_bracket(&mu, &mu, &id).unwrap();
        assert_eq!(sq, circle_product(&mu, &mu, &id).unwrap().scale(&int(-2)));
        assert!(sq.is_zero());
        let psi = Cochain::from_matrix(&Matrix::from_i64(&[&[0, 1], &[1, 0]]));
        let l = nr_bracket(&mu, &psi, &id).unwrap();
        let r = nr_bracket(&psi, &mu, &id).unwrap();
        assert_eq!(l, r.scale(&int(-1)));
    }

    #[test]
    fn maurer_cartan_examples() {
        assert!(check_maurer_cartan(&adjoint_rep(&fixtures::a2(), 0)).is_maurer_cartan());
        let bad = Representation::new(
            fixtures::a2(),
            Matrix::identity(2),
            vec![Matrix::identity(2); 2],
        )
        .unwrap();
        let r = check_maurer_cartan(&bad);
        assert!(r.in_g1 && !r.square_zero);
        let zero = Representation::trivial(fixtures::a1(), Matrix::identity(1));
        assert!(check_maurer_cartan(&zero).is_maurer_cartan());
    }

    #[test]
    fn derived_bracket_of_operator() {
        let g = fixtures::a2();
        let rep = adjoint_rep(&g, 0);
        let db = DerivedBracket::new(&rep);
        let r = Cochain::from_matrix(&Matrix::from_i64(&[&[0, 1], &[0, 0]]));
        assert!(db.bracket(&r, &r).unwrap().is_zero());
        let id = Cochain::from_matrix(&Matrix::identity(2));
        let tt = db.bracket(&id, &id).unwrap();
        // 2(T{Tv1,v2} − T{Tv2,v1} − [Tv1,Tv2]) = 2([e1,e2] + [e1,e2] − [e1,e2]) = 2e2
        assert_eq!(tt.value(&[0, 1]), vec![int(0), int(2)]);
        let lifted = db.bracket_lifted(&id, &r).unwrap();
        assert_eq!(db.lift(&db.restrict(&lifted)), lifted);
        assert!(db.bracket(&Cochain::zero(1, 2, 2), &r).unwrap().is_zero());
    }

    #[test]
    fn derived_bracket_with_fixed_points() {
        let g = fixtures::a2();
        let db = DerivedBracket::new(&adjoint_rep(&g, 0));
        let r = Cochain::from_matrix(&Matrix::from_i64(&[&[0, 1], &[0, 0]]));
        let e1 = unit_vec(2, 0);
        assert_eq!(db.bracket_zero(&r, &e1).unwrap().value(&[1]), e1);
        assert!(db.bracket_zero(&r, &zero_vec(2)).unwrap().is_zero());
        assert_eq!(db.zero_zero(&e1, &unit_vec(2, 1)), unit_vec(2, 1));
        let db3 = DerivedBracket::new(&adjoint_rep(&fixtures::a3(), 0));
        let r3 = Cochain::zero(1, 2, 2);
        assert!(matches!(
            db3.bracket_zero(&r3, &unit_vec(2, 1)),
            Err(Error::Precondition(_))
        ));
    }
}
