//! Seeded generators of small rational test instances.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cochain::{Cochain, Complex};
use crate::exactnum::{frac, int, Matrix, Scalar};
use crate::fixtures;
use crate::structures::{adjoint_rep, coadjoint_rep, HomLieAlgebra, Representation};

/// Entries drawn by [`Sampler::grid_scalar`].
pub fn grid() -> Vec<Scalar> {
    vec![int(-1), int(0), int(1), int(2), frac(1, 2)]
}

/// Reproducible source of random scalars, matrices, cochains and
/// (algebra, representation) candidates.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn grid_scalar(&mut self) -> Scalar {
        grid().choose(&mut self.rng).expect("nonempty").clone()
    }

    /// `p/q` with `|p| ≤ 3`, `1 ≤ q ≤ 3`.
    pub fn small_scalar(&mut self) -> Scalar {
        frac(self.rng.gen_range(-3..=3), self.rng.gen_range(1..=3))
    }

    pub fn nonzero_scalar(&mut self) -> Scalar {
        loop {
            let c = self.small_scalar();
            if !c.is_zero() {
                return c;
            }
        }
    }

    /// Each entry is zero with probability `1 − density`, else a small scalar.
    pub fn matrix(&mut self, rows: usize, cols: usize, density: f64) -> Matrix {
        let mut m = Matrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if self.rng.gen_bool(density) {
                    m[(r, c)] = self.small_scalar();
                }
            }
        }
        m
    }

    pub fn grid_matrix(&mut self, rows: usize, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = self.grid_scalar();
            }
        }
        m
    }

    /// A product of unit triangular factors and a nonzero diagonal.
    pub fn invertible(&mut self, n: usize) -> Matrix {
        let mut lower = Matrix::identity(n);
        let mut upper = Matrix::identity(n);
        for i in 0..n {
            for j in 0..i {
                if self.rng.gen_bool(0.5) {
                    lower[(i, j)] = self.small_scalar();
                }
                if self.rng.gen_bool(0.5) {
                    upper[(j, i)] = self.small_scalar();
                }
            }
        }
        let diag: Vec<Scalar> = (0..n).map(|_| self.nonzero_scalar()).collect();
        lower.dot(&Matrix::diag(&diag)).dot(&upper)
    }

    /// Adds a random nonzero amount to one random entry.
    pub fn perturb(&mut self, m: &Matrix) -> Matrix {
        let mut out = m.clone();
        if m.rows() == 0 || m.cols() == 0 {
            return out;
        }
        let (r, c) = (
            self.rng.gen_range(0..m.rows()),
            self.rng.gen_range(0..m.cols()),
        );
        out[(r, c)] += self.nonzero_scalar();
        out
    }

    /// A random combination of `basis` with grid coefficients.
    pub fn combination(
        &mut self,
        basis: &[Cochain],
        arity: usize,
        source_dim: usize,
        target_dim: usize,
    ) -> Cochain {
        let mut acc = Cochain::zero(arity, source_dim, target_dim);
        for b in basis {
            let c = self.grid_scalar();
            if !c.is_zero() {
                acc = acc.add(&b.scale(&c)).expect("same shape");
            }
        }
        acc
    }

    /// A random twist-compatible cochain of the complex.
    pub fn compatible_cochain(&mut self, complex: &Complex, arity: usize) -> Cochain {
        let basis = complex.compatible_subspace_basis(arity);
        self.combination(&basis, arity, complex.source_dim(), complex.target_dim())
    }

    /// An arbitrary alternating cochain.
    pub fn cochain(
        &mut self,
        arity: usize,
        source_dim: usize,
        target_dim: usize,
        density: f64,
    ) -> Cochain {
        Cochain::from_fn(arity, source_dim, target_dim, |_| {
            (0..target_dim)
                .map(|_| {
                    if self.rng.gen_bool(density) {
                        self.small_scalar()
                    } else {
                        Scalar::zero()
                    }
                })
                .collect()
        })
    }

    /// A hom-Lie algebra from the catalog of dimension at most `max_dim`,
    /// transported along a random change of basis half of the time.
    pub fn algebra(&mut self, max_dim: usize) -> HomLieAlgebra {
        let pool: Vec<HomLieAlgebra> = fixtures::catalog()
            .into_iter()
            .map(|(_, g)| g)
            .filter(|g| g.dim() <= max_dim)
            .collect();
        let g = pool
            .choose(&mut self.rng)
            .expect("nonempty catalog")
            .clone();
        if self.rng.gen_bool(0.5) {
            let q = self.invertible(g.dim());
            transport_algebra(&g, &q)
        } else {
            g
        }
    }

    /// A (g, β, ρ) candidate: a known representation moved by a random
    /// change of basis, then with probability one half a single entry of
    /// `β` or of some `ρ(e_i)` perturbed, or an arbitrary sparse action.
    pub fn candidate(&mut self, max_dim: usize) -> Representation {
        let g = self.algebra(max_dim);
        let n = g.dim();
        let kind = self.rng.gen_range(0..5);
        let base = match kind {
            0 | 1 => adjoint_rep(&g, kind as u32),
            2 if g.is_regular() => coadjoint_rep(&g).expect("regular"),
            3 => {
                let m = self.rng.gen_range(1..=max_dim);
                let beta = self.invertible(m);
                Representation::trivial(g.clone(), beta)
            }
            _ => {
                let m = self.rng.gen_range(1..=max_dim);
                let beta = if self.rng.gen_bool(0.5) {
                    Matrix::identity(m)
                } else {
                    self.matrix(m, m, 0.4)
                };
                let rho = (0..n).map(|_| self.matrix(m, m, 0.3)).collect();
                return Representation::new(g, beta, rho).expect("consistent shapes");
            }
        };
        let p = self.invertible(base.dim());
        let moved = transport_rep(&base, &p);
        if !self.rng.gen_bool(0.5) {
            return moved;
        }
        let mut beta = moved.beta().clone();
        let mut rho = moved.rho().to_vec();
        if self.rng.gen_bool(0.3) {
            beta = self.perturb(&beta);
        } else {
            let i = self.rng.gen_range(0..n);
            rho[i] = self.perturb(&rho[i]);
        }
        Representation::new(moved.algebra().clone(), beta, rho).expect("consistent shapes")
    }
}

/// The algebra structure carried along `x ↦ Qx`:
/// `[x,y]' = Q[Q⁻¹x, Q⁻¹y]`, `α' = QαQ⁻¹`. `Q` must be invertible.
pub fn transport_algebra(g: &HomLieAlgebra, q: &Matrix) -> HomLieAlgebra {
    let q_inv = q
        .inverse()
        .expect("square")
        .expect("invertible change of basis");
    let n = g.dim();
    let brackets: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| {
            (
                (i, j),
                q.apply(&g.bracket(&q_inv.column(i), &q_inv.column(j))),
            )
        })
        .collect();
    let alpha = q.dot(g.alpha()).dot(&q_inv);
    HomLieAlgebra::new(g.labels().to_vec(), alpha, brackets).expect("consistent shapes")
}

/// The representation carried along `v ↦ Pv`: `β' = PβP⁻¹`,
/// `ρ'(x) = Pρ(x)P⁻¹`.
pub fn transport_rep(rep: &Representation, p: &Matrix) -> Representation {
    let p_inv = p
        .inverse()
        .expect("square")
        .expect("invertible change of basis");
    let beta = p.dot(rep.beta()).dot(&p_inv);
    let rho = rep.rho().iter().map(|r| p.dot(r).dot(&p_inv)).collect();
    Representation::new(rep.algebra().clone(), beta, rho).expect("consistent shapes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let a = Sampler::new(7).matrix(3, 3, 0.5);
        let b = Sampler::new(7).matrix(3, 3, 0.5);
        assert_eq!(a, b);
    }

    #[test]
    fn invertible_and_transport() {
        let mut s = Sampler::new(1);
        for _ in 0..20 {
            let q = s.invertible(3);
            assert_eq!(q.rank(), 3);
            let g = transport_algebra(&fixtures::a5_twisted(), &q);
            assert!(g.verify().is_hom_lie());
            let rep = transport_rep(&adjoint_rep(&g, 1), &s.invertible(3));
            assert!(rep.verify().is_representation());
        }
    }

    #[test]
    fn candidates_mix_outcomes() {
        let mut s = Sampler::new(3);
        let verdicts: Vec<bool> = (0..60)
            .map(|_| s.candidate(3).verify().is_representation())
            .collect();
        assert!(verdicts.iter().any(|&v| v));
        assert!(verdicts.iter().any(|&v| !v));
    }
}
