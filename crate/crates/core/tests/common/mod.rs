//! Independent oracles shared by the integration tests and the acceptance
//! run. They work from raw coordinates with their own loops and only borrow
//! structure constants, twist matrices and cochain values from the kernel.

#![allow(dead_code)]

use homlie::cochain::Cochain;
use homlie::exactnum::{int, unit_vec, Matrix, Scalar, Vector};
use homlie::sample::Sampler;
use homlie::{HomLieAlgebra, Representation};
use num_traits::{One, Zero};
use rand::Rng;

/// `c[i][j][k]`: the `k`-th coordinate of `[e_i, e_j]`.
pub struct Table {
    pub dim: usize,
    pub c: Vec<Vec<Vec<Scalar>>>,
    pub alpha: Vec<Vec<Scalar>>,
}

impl Table {
    pub fn of(g: &HomLieAlgebra) -> Self {
        let n = g.dim();
        let c = (0..n)
            .map(|i| (0..n).map(|j| g.bracket_basis(i, j).clone()).collect())
            .collect();
        let alpha = (0..n)
            .map(|r| (0..n).map(|s| g.alpha()[(r, s)].clone()).collect())
            .collect();
        Table { dim: n, c, alpha }
    }

    pub fn br(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let n = self.dim;
        let mut out = vec![Scalar::zero(); n];
        for (ui, row) in u.iter().zip(&self.c) {
            if ui.is_zero() {
                continue;
            }
            for (vj, consts) in v.iter().zip(row) {
                if vj.is_zero() {
                    continue;
                }
                let w = ui * vj;
                for (o, c) in out.iter_mut().zip(consts) {
                    *o += &w * c;
                }
            }
        }
        out
    }

    pub fn twist(&self, u: &[Scalar]) -> Vector {
        (0..self.dim)
            .map(|r| (0..self.dim).map(|s| &self.alpha[r][s] * &u[s]).sum())
            .collect()
    }

    fn e(&self, i: usize) -> Vector {
        unit_vec(self.dim, i)
    }

    /// Basis pairs `i<j` where `α[e_i,e_j] ≠ [αe_i, αe_j]`.
    pub fn multiplicativity_failures(&self) -> Vec<Vec<usize>> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.twist(&self.br(&self.e(i), &self.e(j)));
                let rhs = self.br(&self.twist(&self.e(i)), &self.twist(&self.e(j)));
                if lhs != rhs {
                    out.push(vec![i, j]);
                }
            }
        }
        out
    }

    /// `[αx,[y,z]] + [αy,[z,x]] + [αz,[x,y]]` on basis vectors.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vector {
        let (x, y, z) = (self.e(i), self.e(j), self.e(k));
        let a = self.br(&self.twist(&x), &self.br(&y, &z));
        let b = self.br(&self.twist(&y), &self.br(&z, &x));
        let c = self.br(&self.twist(&z), &self.br(&x, &y));
        (0..self.dim).map(|t| &a[t] + &b[t] + &c[t]).collect()
    }

    /// Triples `i<j<k` with nonzero jacobiator.
    pub fn jacobi_failures(&self) -> Vec<Vec<usize>> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if self.jacobiator(i, j, k).iter().any(|x| !x.is_zero()) {
                        out.push(vec![i, j, k]);
                    }
                }
            }
        }
        out
    }

    /// Every ordered triple, as a cross-check that increasing triples suffice.
    pub fn is_hom_lie_all_triples(&self) -> bool {
        let n = self.dim;
        if !self.multiplicativity_failures().is_empty() {
            return false;
        }
        (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|k| self.jacobiator(i, j, k).iter().all(Zero::is_zero)))
        })
    }
}

fn mat_vec(m: &Matrix, v: &[Scalar]) -> Vector {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| &m[(r, c)] * &v[c]).sum())
        .collect()
}

fn mat_pow_vec(m: &Matrix, k: usize, v: &[Scalar]) -> Vector {
    let mut out = v.to_vec();
    for _ in 0..k {
        out = mat_vec(m, &out);
    }
    out
}

/// `ρ(x)v` from the action matrices.
pub fn act(rep: &Representation, x: &[Scalar], v: &[Scalar]) -> Vector {
    let mut out = vec![Scalar::zero(); rep.dim()];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        let w = mat_vec(&rep.rho()[i], v);
        for (o, wi) in out.iter_mut().zip(w) {
            *o += xi * wi;
        }
    }
    out
}

/// Both representation axioms on every basis pair and vector, from scratch.
pub fn is_representation(rep: &Representation) -> bool {
    let t = Table::of(rep.algebra());
    let (n, m) = (t.dim, rep.dim());
    for i in 0..n {
        let ai = t.twist(&unit_vec(n, i));
        for v in 0..m {
            let ev = unit_vec(m, v);
            let lhs = act(rep, &ai, &mat_vec(rep.beta(), &ev));
            let rhs = mat_vec(rep.beta(), &act(rep, &unit_vec(n, i), &ev));
            if lhs != rhs {
                return false;
            }
        }
        for j in 0..n {
            let aj = t.twist(&unit_vec(n, j));
            let bij = t.br(&unit_vec(n, i), &unit_vec(n, j));
            for v in 0..m {
                let ev = unit_vec(m, v);
                let lhs = act(rep, &bij, &mat_vec(rep.beta(), &ev));
                let a = act(rep, &ai, &act(rep, &unit_vec(n, j), &ev));
                let b = act(rep, &aj, &act(rep, &unit_vec(n, i), &ev));
                let rhs: Vector = a.iter().zip(&b).map(|(x, y)| x - y).collect();
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// `Tβ = αT` and `[Tu,Tv] = T({Tu,v} − {Tv,u})` on all basis pairs.
pub fn is_o_operator(rep: &Representation, t: &Matrix) -> bool {
    let g = Table::of(rep.algebra());
    let m = rep.dim();
    if t.mul(rep.beta()).unwrap() != rep.algebra().alpha().mul(t).unwrap() {
        return false;
    }
    for u in 0..m {
        for v in 0..m {
            let (tu, tv) = (t.column(u), t.column(v));
            let lhs = g.br(&tu, &tv);
            let a = act(rep, &tu, &unit_vec(m, v));
            let b = act(rep, &tv, &unit_vec(m, u));
            let inner: Vector = a.iter().zip(&b).map(|(x, y)| x - y).collect();
            if lhs != mat_vec(t, &inner) {
                return false;
            }
        }
    }
    true
}

fn parity(perm: &[usize]) -> bool {
    let mut odd = false;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                odd = !odd;
            }
        }
    }
    odd
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// Permutations increasing inside consecutive blocks of the given sizes,
/// with their signs.
pub fn block_shuffles(sizes: &[usize]) -> Vec<(Vec<usize>, Scalar)> {
    let total: usize = sizes.iter().sum();
    permutations(total)
        .into_iter()
        .filter(|p| {
            let mut start = 0;
            sizes.iter().all(|&s| {
                let ok = p[start..start + s].windows(2).all(|w| w[0] < w[1]);
                start += s;
                ok
            })
        })
        .map(|p| {
            let sign = if parity(&p) {
                -Scalar::one()
            } else {
                Scalar::one()
            };
            (p, sign)
        })
        .collect()
}

/// The expanded three-sum formula for `{{P,Q}}` on `Hom(∧^* V, g)`, with
/// the first sum's trailing arguments running over positions `m+2, …, m+n`.
pub fn expanded_derived_bracket(rep: &Representation, p: &Cochain, q: &Cochain) -> Cochain {
    let g = rep.algebra();
    let table = Table::of(g);
    let (n, m) = (p.arity(), q.arity());
    let (gd, vd) = (g.dim(), rep.dim());
    let beta = rep.beta();
    let alpha = g.alpha();
    let sign_mn = if (m * n) % 2 == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    };
    let first = block_shuffles(&[m, 1, n - 1]);
    let second = block_shuffles(&[n, m]);
    let third = block_shuffles(&[n, 1, m - 1]);
    Cochain::from_fn(n + m, vd, gd, |tuple| {
        let v: Vec<Vector> = tuple.iter().map(|&i| unit_vec(vd, i)).collect();
        let pick = |perm: &[usize], range: std::ops::Range<usize>| -> Vec<Vector> {
            range.map(|k| v[perm[k]].clone()).collect()
        };
        let mut out = vec![Scalar::zero(); gd];
        let mut add = |c: &Scalar, w: &[Scalar]| {
            for (o, x) in out.iter_mut().zip(w) {
                *o += c * x;
            }
        };
        for (perm, s) in &first {
            let qv = q.eval(&pick(perm, 0..m));
            let mut args = vec![act(rep, &qv, &mat_pow_vec(beta, m - 1, &v[perm[m]]))];
            args.extend(
                pick(perm, m + 1..m + n)
                    .iter()
                    .map(|w| mat_pow_vec(beta, m, w)),
            );
            add(s, &p.eval(&args));
        }
        for (perm, s) in &second {
            let pv = mat_pow_vec(alpha, m - 1, &p.eval(&pick(perm, 0..n)));
            let qv = mat_pow_vec(alpha, n - 1, &q.eval(&pick(perm, n..n + m)));
            add(&(s * &sign_mn), &table.br(&pv, &qv));
        }
        for (perm, s) in &third {
            let pv = p.eval(&pick(perm, 0..n));
            let mut args = vec![act(rep, &pv, &mat_pow_vec(beta, n - 1, &v[perm[n]]))];
            args.extend(
                pick(perm, n + 1..n + m)
                    .iter()
                    .map(|w| mat_pow_vec(beta, n, w)),
            );
            add(&(-(s * &sign_mn)), &q.eval(&args));
        }
        out
    })
}

/// `2(T{Tv1,v2} − T{Tv2,v1} − [Tv1,Tv2])`.
pub fn square_of_operator(rep: &Representation, t: &Matrix) -> Cochain {
    let table = Table::of(rep.algebra());
    let m = rep.dim();
    Cochain::from_fn(2, m, rep.algebra().dim(), |s| {
        let (t1, t2) = (t.column(s[0]), t.column(s[1]));
        let a = mat_vec(t, &act(rep, &t1, &unit_vec(m, s[1])));
        let b = mat_vec(t, &act(rep, &t2, &unit_vec(m, s[0])));
        let c = table.br(&t1, &t2);
        (0..a.len())
            .map(|k| int(2) * (&a[k] - &b[k] - &c[k]))
            .collect()
    })
}

/// A copy of `g` with the `k`-th coordinate of `[e_i, e_j]` shifted by `delta`.
pub fn mutate(g: &HomLieAlgebra, i: usize, j: usize, k: usize, delta: &Scalar) -> HomLieAlgebra {
    let brackets: Vec<_> = g
        .upper_brackets()
        .into_iter()
        .map(|((a, b), mut v)| {
            if (a, b) == (i, j) {
                v[k] += delta;
            }
            ((a, b), v)
        })
        .collect();
    HomLieAlgebra::new(g.labels().to_vec(), g.alpha().clone(), brackets).unwrap()
}

/// Both hom-pre-Lie axioms on all basis triples, from the product table.
pub fn is_hom_pre_lie(twist: &Matrix, product: &dyn Fn(&[Scalar], &[Scalar]) -> Vector) -> bool {
    let d = twist.rows();
    let e: Vec<Vector> = (0..d).map(|i| unit_vec(d, i)).collect();
    let a: Vec<Vector> = e.iter().map(|x| mat_vec(twist, x)).collect();
    for i in 0..d {
        for j in 0..d {
            if mat_vec(twist, &product(&e[i], &e[j])) != product(&a[i], &a[j]) {
                return false;
            }
            for k in 0..d {
                let lhs: Vector = product(&product(&e[i], &e[j]), &a[k])
                    .iter()
                    .zip(product(&a[i], &product(&e[j], &e[k])))
                    .map(|(x, y)| x - y)
                    .collect();
                let rhs: Vector = product(&product(&e[j], &e[i]), &a[k])
                    .iter()
                    .zip(product(&a[j], &product(&e[i], &e[k])))
                    .map(|(x, y)| x - y)
                    .collect();
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// A candidate operator `V → g`: a grid combination of twist-compatible
/// 1-cochains, a sparse grid matrix, or a dense small-rational matrix.
pub fn candidate_operator(
    s: &mut Sampler,
    compatible: &[Cochain],
    rows: usize,
    cols: usize,
    kind: usize,
) -> Matrix {
    match kind % 3 {
        0 => s
            .combination(compatible, 1, cols, rows)
            .to_matrix()
            .unwrap(),
        1 => {
            let mut m = Matrix::zeros(rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    if s.rng().gen_bool(0.4) {
                        m[(r, c)] = s.grid_scalar();
                    }
                }
            }
            m
        }
        _ => s.matrix(rows, cols, 0.6),
    }
}

/// Rank of `[A | b]` exceeds rank `A` exactly when `b ∉ im A`.
pub fn in_column_space(a: &Matrix, b: &[Scalar]) -> bool {
    let aug = a
        .hcat(&Matrix::from_columns(&[b.to_vec()], a.rows()).unwrap())
        .unwrap();
    aug.rank() == a.rank()
}

/// Twist-compatible 1-cochains `V → g` for `rep`.
pub fn operator_space(rep: &Representation) -> Vec<Cochain> {
    let zero = Matrix::zeros(rep.algebra().dim(), rep.dim());
    homlie::ooperator::OOperatorContext::new(rep, &zero)
        .unwrap()
        .complex()
        .compatible_subspace_basis(1)
}

/// Distinct O-operators among `tries` candidates, always including zero.
pub fn find_o_operators(rep: &Representation, s: &mut Sampler, tries: usize) -> Vec<Matrix> {
    let (n, m) = (rep.algebra().dim(), rep.dim());
    let basis = operator_space(rep);
    let mut out = vec![Matrix::zeros(n, m)];
    for k in 0..tries {
        let t = candidate_operator(s, &basis, n, m, k);
        if is_o_operator(rep, &t) && !out.contains(&t) {
            out.push(t);
        }
    }
    out
}

/// Basis of the 1-cocycles of the complex of the O-operator `ctx`.
pub fn one_cocycles(ctx: &homlie::ooperator::OOperatorContext) -> Vec<Cochain> {
    let basis = ctx.complex().compatible_subspace_basis(1);
    if basis.is_empty() {
        return basis;
    }
    let cols: Vec<Vector> = basis
        .iter()
        .map(|b| ctx.coboundary(b).unwrap().flat())
        .collect();
    let rows = cols[0].len();
    let d = Matrix::from_columns(&cols, rows).unwrap();
    d.kernel_basis()
        .into_iter()
        .map(|k| {
            let mut acc = Cochain::zero(1, ctx.representation().dim(), ctx.algebra().dim());
            for (c, b) in k.iter().zip(&basis) {
                acc = acc.add(&b.scale(c)).unwrap();
            }
            acc
        })
        .collect()
}

/// Matrix of `δ_T` on the twist-compatible 1-cochains, in flat coordinates.
pub fn operator_coboundary_matrix(ctx: &homlie::ooperator::OOperatorContext) -> Matrix {
    let basis = ctx.complex().compatible_subspace_basis(1);
    let rows = homlie::combin::binomial(ctx.representation().dim(), 2) * ctx.algebra().dim();
    let cols: Vec<Vector> = basis
        .iter()
        .map(|b| ctx.coboundary(b).unwrap().flat())
        .collect();
    Matrix::from_columns(&cols, rows).unwrap()
}

/// Every `α`-invariant skew 2-tensor with coordinates in `values`.
pub fn invariant_grid_tensors(
    g: &HomLieAlgebra,
    values: &[Scalar],
) -> Vec<homlie::rmatrix::Multivector> {
    let n = g.dim();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let total = values.len().pow(pairs.len() as u32);
    for mut code in 0..total {
        let mut entries = Vec::new();
        for &p in &pairs {
            entries.push((p, values[code % values.len()].clone()));
            code /= values.len();
        }
        let r = homlie::rmatrix::Multivector::two(n, entries).unwrap();
        if r.is_invariant(g.alpha()) {
            out.push(r);
        }
    }
    out
}

/// `(r1)^{ab}` as a plain matrix and the O-operator identity for `r♯` with
/// respect to the coadjoint action, evaluated on the dual basis.
pub fn is_r_matrix_by_operator(g: &HomLieAlgebra, r: &homlie::rmatrix::Multivector) -> bool {
    let co = homlie::structures::coadjoint_rep(g).unwrap();
    let n = g.dim();
    let mut m = Matrix::zeros(n, n);
    for (t, c) in r.entries() {
        m[(t[0], t[1])] = c.clone();
        m[(t[1], t[0])] = -c;
    }
    is_o_operator(&co, &m)
}
