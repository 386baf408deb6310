//! Hard-coded coordinate realizations of the root systems A_n, B_n, C_n,
//! D_n and G₂.
//!
//! Two basis orderings are supported. `Bourbaki` is the classical chart
//! (type A rank n lives in ℝ^{n+1} orthogonal complement conventions, the
//! highest root points towards e₁). `Reversed` reverses the order of the
//! canonical basis, which is the chart used by the periodic-permutation
//! models: there the simple roots are α₁ = 2e₁, αᵢ = eᵢ − eᵢ₋₁ for C_n, and
//! so on, with θ pointing towards e_n.  A flag rather than arbitrary basis
//! permutations keeps the two conventions from drifting silently.

use num_traits::{One, Signed, Zero};

use crate::geometry::{rat, ratio, Lattice, Rat, Vector};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TypeTag {
    A,
    B,
    C,
    D,
    G,
}

impl TypeTag {
    pub fn letter(self) -> char {
        match self {
            TypeTag::A => 'A',
            TypeTag::B => 'B',
            TypeTag::C => 'C',
            TypeTag::D => 'D',
            TypeTag::G => 'G',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisOrder {
    Bourbaki,
    Reversed,
}

/// Root-system data in explicit ambient coordinates.
///
/// All fields are immutable after [`RootSystem::build`]; the struct is freely
/// shareable across threads.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub type_tag: TypeTag,
    pub rank: usize,
    pub order: BasisOrder,
    ambient_dim: usize,
    simple_roots: Vec<Vector>,
    positive_roots: Vec<Vector>,
    theta: Vector,
    rho: Vector,
    fundamental_weights: Vec<Vector>,
    /// Marks of θ^∨ on the simple coroots: θ* = Σ mᵢ αᵢ*.
    marks: Vec<i64>,
    /// Dual Coxeter number h^∨ = 1 + Σ mᵢ.
    dual_coxeter: i64,
    /// Normalization constant c = ⟨θ,θ⟩·h^∨ relating the standard inner
    /// product to the Killing-normalized one.
    norm_const: i64,
    /// Sign sequence ε = (−1,−1,+1) for G₂, where the finite Weyl group acts
    /// on ±e_i only modulo the sum-direction.
    epsilon: Option<[i64; 3]>,
}

impl RootSystem {
    /// Builds the root system of the given type and rank.
    ///
    /// Supported ranks: A_n for n ≥ 1, B_n and C_n for n ≥ 2, D_n for n ≥ 3,
    /// and G₂ (rank 2 only, realized in ℝ³; `Reversed` is not defined for it).
    pub fn build(type_tag: TypeTag, rank: usize, order: BasisOrder) -> Result<RootSystem, Error> {
        let min_rank = match type_tag {
            TypeTag::A => 1,
            TypeTag::B | TypeTag::C => 2,
            TypeTag::D => 3,
            TypeTag::G => 2,
        };
        if rank < min_rank || (type_tag == TypeTag::G && rank != 2) {
            return Err(Error::Unsupported(type_tag, rank));
        }
        if type_tag == TypeTag::G && order == BasisOrder::Reversed {
            return Err(Error::Unsupported(type_tag, rank));
        }
        let mut rs = Self::build_bourbaki(type_tag, rank);
        if order == BasisOrder::Reversed {
            rs = rs.into_reversed();
        }
        rs.check_tables();
        Ok(rs)
    }

    fn build_bourbaki(type_tag: TypeTag, rank: usize) -> RootSystem {
        let n = rank;
        let e = |i: usize, dim: usize| {
            let mut v = vec![Rat::zero(); dim];
            v[i - 1] = Rat::one();
            Vector::new(v)
        };
        match type_tag {
            TypeTag::A => {
                let dim = n + 1;
                let simple: Vec<Vector> = (1..=n).map(|i| &e(i, dim) - &e(i + 1, dim)).collect();
                let mut pos = Vec::new();
                for i in 1..=n {
                    for j in (i + 1)..=(n + 1) {
                        pos.push(&e(i, dim) - &e(j, dim));
                    }
                }
                let theta = &e(1, dim) - &e(n + 1, dim);
                let rho = Vector::new(
                    (1..=dim).map(|i| ratio(n as i64 - 2 * i as i64 + 2, 2)).collect(),
                );
                // ω_i = e₁+…+e_i − (i/(n+1))·(e₁+…+e_{n+1})
                let omegas: Vec<Vector> = (1..=n)
                    .map(|i| {
                        Vector::new(
                            (1..=dim)
                                .map(|j| {
                                    let ind = if j <= i { Rat::one() } else { Rat::zero() };
                                    ind - ratio(i as i64, n as i64 + 1)
                                })
                                .collect(),
                        )
                    })
                    .collect();
                let marks = vec![1; n];
                Self::assemble(type_tag, n, dim, simple, pos, theta, rho, omegas, marks, None)
            }
            TypeTag::B => {
                let dim = n;
                let mut simple: Vec<Vector> = (1..n).map(|i| &e(i, dim) - &e(i + 1, dim)).collect();
                simple.push(e(n, dim));
                let mut pos = Vec::new();
                for i in 1..=n {
                    for j in (i + 1)..=n {
                        pos.push(&e(i, dim) - &e(j, dim));
                        pos.push(&e(i, dim) + &e(j, dim));
                    }
                }
                for i in 1..=n {
                    pos.push(e(i, dim));
                }
                let theta = &e(1, dim) + &e(2, dim);
                let rho = Vector::new(
                    (1..=n).map(|i| ratio(2 * (n as i64 - i as i64) + 1, 2)).collect(),
                );
                let mut omegas: Vec<Vector> = (1..n)
                    .map(|i| Vector::new((1..=n).map(|j| if j <= i { rat(1) } else { rat(0) }).collect()))
                    .collect();
                omegas.push(Vector::new(vec![ratio(1, 2); n]));
                let marks: Vec<i64> = (1..=n).map(|i| if i == 1 || i == n { 1 } else { 2 }).collect();
                Self::assemble(type_tag, n, dim, simple, pos, theta, rho, omegas, marks, None)
            }
            TypeTag::C => {
                let dim = n;
                let mut simple: Vec<Vector> = (1..n).map(|i| &e(i, dim) - &e(i + 1, dim)).collect();
                simple.push(e(n, dim).scale_int(2));
                let mut pos = Vec::new();
                for i in 1..=n {
                    for j in (i + 1)..=n {
                        pos.push(&e(i, dim) - &e(j, dim));
                        pos.push(&e(i, dim) + &e(j, dim));
                    }
                }
                for i in 1..=n {
                    pos.push(e(i, dim).scale_int(2));
                }
                let theta = e(1, dim).scale_int(2);
                let rho = Vector::new((1..=n).map(|i| rat(n as i64 - i as i64 + 1)).collect());
                let omegas: Vec<Vector> = (1..=n)
                    .map(|i| Vector::new((1..=n).map(|j| if j <= i { rat(1) } else { rat(0) }).collect()))
                    .collect();
                let marks = vec![1; n];
                Self::assemble(type_tag, n, dim, simple, pos, theta, rho, omegas, marks, None)
            }
            TypeTag::D => {
                let dim = n;
                let mut simple: Vec<Vector> = (1..n).map(|i| &e(i, dim) - &e(i + 1, dim)).collect();
                simple.push(&e(n - 1, dim) + &e(n, dim));
                let mut pos = Vec::new();
                for i in 1..=n {
                    for j in (i + 1)..=n {
                        pos.push(&e(i, dim) - &e(j, dim));
                        pos.push(&e(i, dim) + &e(j, dim));
                    }
                }
                let theta = &e(1, dim) + &e(2, dim);
                let rho = Vector::new((1..=n).map(|i| rat(n as i64 - i as i64)).collect());
                let mut omegas: Vec<Vector> = (1..=n - 2)
                    .map(|i| Vector::new((1..=n).map(|j| if j <= i { rat(1) } else { rat(0) }).collect()))
                    .collect();
                omegas.push(Vector::new(
                    (1..=n).map(|j| if j < n { ratio(1, 2) } else { ratio(-1, 2) }).collect(),
                ));
                omegas.push(Vector::new(vec![ratio(1, 2); n]));
                let marks: Vec<i64> =
                    (1..=n).map(|i| if i == 1 || i >= n - 1 { 1 } else { 2 }).collect();
                Self::assemble(type_tag, n, dim, simple, pos, theta, rho, omegas, marks, None)
            }
            TypeTag::G => {
                let a1 = Vector::from_ints(&[1, -1, 0]);
                let a2 = Vector::from_ints(&[-2, 1, 1]);
                let simple = vec![a1.clone(), a2.clone()];
                let pos = vec![
                    a1.clone(),
                    a2.clone(),
                    &a1 + &a2,
                    &a1.scale_int(2) + &a2,
                    &a1.scale_int(3) + &a2,
                    &a1.scale_int(3) + &a2.scale_int(2),
                ];
                let theta = Vector::from_ints(&[-1, -1, 2]);
                let rho = Vector::from_ints(&[-1, -2, 3]);
                let omegas = vec![Vector::from_ints(&[0, -1, 1]), Vector::from_ints(&[-1, -1, 2])];
                let marks = vec![1, 2];
                Self::assemble(TypeTag::G, 2, 3, simple, pos, theta, rho, omegas, marks, Some([-1, -1, 1]))
            }
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn assemble(
        type_tag: TypeTag,
        rank: usize,
        ambient_dim: usize,
        simple_roots: Vec<Vector>,
        positive_roots: Vec<Vector>,
        theta: Vector,
        rho: Vector,
        fundamental_weights: Vec<Vector>,
        marks: Vec<i64>,
        epsilon: Option<[i64; 3]>,
    ) -> RootSystem {
        let dual_coxeter = 1 + marks.iter().sum::<i64>();
        let theta_norm = theta.dot(&theta);
        assert!(theta_norm.is_integer());
        let norm_const = i64::try_from(&(theta_norm * rat(dual_coxeter)).to_integer()).unwrap();
        RootSystem {
            type_tag,
            rank,
            order: BasisOrder::Bourbaki,
            ambient_dim,
            simple_roots,
            positive_roots,
            theta,
            rho,
            fundamental_weights,
            marks,
            dual_coxeter,
            norm_const,
            epsilon,
        }
    }

    /// Reverses the order of the canonical basis.  Simple roots, fundamental
    /// weights and marks are re-indexed by i ↦ n+1−i so that the lists match
    /// the reversed chart (α₁ = 2e₁ for C_n, θ = 2e_n, …).
    fn into_reversed(self) -> RootSystem {
        let n = self.rank;
        let flip = |vs: &[Vector]| -> Vec<Vector> {
            (0..vs.len()).map(|j| vs[n - 1 - j].reversed()).collect()
        };
        RootSystem {
            order: BasisOrder::Reversed,
            simple_roots: flip(&self.simple_roots),
            positive_roots: self.positive_roots.iter().map(Vector::reversed).collect(),
            theta: self.theta.reversed(),
            rho: self.rho.reversed(),
            fundamental_weights: flip(&self.fundamental_weights),
            marks: self.marks.iter().rev().copied().collect(),
            ..self
        }
    }

    /// Table consistency: ρ is both the half-sum of Δ⁺ and Σωᵢ, h^∨ = 1+Σmᵢ,
    /// θ* = Σmᵢαᵢ*, and θ is dominant.
    fn check_tables(&self) {
        let half_sum = self
            .positive_roots
            .iter()
            .fold(Vector::zero(self.ambient_dim), |acc, a| &acc + a)
            .scale(&ratio(1, 2));
        assert_eq!(half_sum, self.rho, "rho is not the half-sum of positive roots");
        let omega_sum = self
            .fundamental_weights
            .iter()
            .fold(Vector::zero(self.ambient_dim), |acc, w| &acc + w);
        assert_eq!(omega_sum, self.rho, "rho is not the sum of fundamental weights");
        let mark_combo = self
            .simple_roots
            .iter()
            .zip(&self.marks)
            .fold(Vector::zero(self.ambient_dim), |acc, (a, &m)| {
                &acc + &self.coroot(a).scale_int(m)
            });
        assert_eq!(mark_combo, self.coroot(&self.theta), "marks do not expand theta*");
        for a in &self.simple_roots {
            assert!(!self.pairing(&self.theta, a).is_negative(), "theta is not dominant");
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn simple_roots(&self) -> &[Vector] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Vector] {
        &self.positive_roots
    }

    pub fn theta(&self) -> &Vector {
        &self.theta
    }

    pub fn rho(&self) -> &Vector {
        &self.rho
    }

    pub fn fundamental_weights(&self) -> &[Vector] {
        &self.fundamental_weights
    }

    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn dual_coxeter(&self) -> i64 {
        self.dual_coxeter
    }

    /// c = ⟨θ,θ⟩·h^∨, with (x,y) = ⟨x,y⟩/c the Killing-normalized product.
    pub fn norm_const(&self) -> i64 {
        self.norm_const
    }

    pub fn epsilon(&self) -> Option<[i64; 3]> {
        self.epsilon
    }

    /// dim 𝔤 = rank + |Δ|.
    pub fn algebra_dim(&self) -> usize {
        self.rank + 2 * self.positive_roots.len()
    }

    /// Killing-normalized inner product, with (θ,θ) = 1/h^∨.
    pub fn dot_killing(&self, x: &Vector, y: &Vector) -> Rat {
        x.dot(y) / rat(self.norm_const)
    }

    /// Standard-normalized coroot β* = 2β/⟨β,β⟩.
    pub fn coroot(&self, beta: &Vector) -> Vector {
        let norm = beta.dot(beta);
        beta.scale(&(rat(2) / norm))
    }

    /// Integer pairing ⟨x, β^∨⟩ = 2⟨x,β⟩/⟨β,β⟩ (scale invariant).
    pub fn pairing(&self, x: &Vector, beta: &Vector) -> Rat {
        x.dot(&self.coroot(beta))
    }

    /// θ* = 2θ/⟨θ,θ⟩, the direction of the affine reflection's translation.
    pub fn theta_star(&self) -> Vector {
        self.coroot(&self.theta)
    }

    /// Membership test for the intensional lattice descriptions.
    ///
    /// Everything reduces to coordinate congruences: integrality, parity of
    /// the coordinate sum, zero coordinate sum for the sum-zero ambient
    /// charts, and the mod-3 congruence for the G₂ coroot lattice.
    pub fn lattice_contains(&self, lattice: Lattice, v: &Vector) -> bool {
        assert_eq!(v.dim(), self.ambient_dim, "lattice test dimension mismatch");
        let even_sum = |v: &Vector| {
            let s = v.coord_sum();
            s.is_integer() && (s.to_integer() % 2i32).is_zero()
        };
        match lattice {
            Lattice::Root => match self.type_tag {
                TypeTag::A | TypeTag::G => v.is_integral() && v.coord_sum().is_zero(),
                TypeTag::B => v.is_integral(),
                TypeTag::C | TypeTag::D => v.is_integral() && even_sum(v),
            },
            Lattice::Weight => match self.type_tag {
                TypeTag::A => {
                    // differences of coordinates integral, zero sum
                    v.coord_sum().is_zero()
                        && v.coords().iter().all(|c| (c - v.coord(self.ambient_dim)).is_integer())
                }
                TypeTag::B | TypeTag::D => {
                    // half-integral with numerators all even or all odd
                    let doubled = v.scale_int(2);
                    doubled.is_integral() && {
                        let parities: Vec<bool> = doubled
                            .coords()
                            .iter()
                            .map(|c| (c.to_integer() % 2i32).is_zero())
                            .collect();
                        parities.iter().all(|&p| p) || parities.iter().all(|&p| !p)
                    }
                }
                TypeTag::C => v.is_integral(),
                TypeTag::G => v.is_integral() && v.coord_sum().is_zero(),
            },
            Lattice::Coroot => match self.type_tag {
                TypeTag::A => v.is_integral() && v.coord_sum().is_zero(),
                TypeTag::B | TypeTag::D => v.is_integral() && even_sum(v),
                TypeTag::C => v.is_integral(),
                TypeTag::G => {
                    // Q* = ⅓{x integral | Σx = 0, x₁ ≡ x₂ ≡ x₃ mod 3}
                    let w = v.scale_int(3);
                    w.is_integral() && w.coord_sum().is_zero() && {
                        let c: Vec<_> = w.coords().iter().map(|x| x.to_integer()).collect();
                        ((&c[0] - &c[1]) % 3i32).is_zero() && ((&c[1] - &c[2]) % 3i32).is_zero()
                    }
                }
            },
            Lattice::ScaledCoroot(k) => {
                assert!(k > 0, "lattice scale must be positive");
                self.lattice_contains(Lattice::Coroot, &v.scale(&ratio(1, k)))
            }
        }
    }

    /// A ℤ-basis of the lattice, used for sampling in tests and for coset
    /// scans; membership itself never solves against this basis.
    pub fn lattice_basis(&self, lattice: Lattice) -> Vec<Vector> {
        match lattice {
            Lattice::Root => self.simple_roots.clone(),
            Lattice::Weight => self.fundamental_weights.clone(),
            Lattice::Coroot => self.simple_roots.iter().map(|a| self.coroot(a)).collect(),
            Lattice::ScaledCoroot(k) => self
                .simple_roots
                .iter()
                .map(|a| self.coroot(a).scale_int(k))
                .collect(),
        }
    }

    /// Type A chart change λ ↦ λ̄ = λ − ⟨λ,e_N⟩·(e₁+…+e_N): kills the last
    /// coordinate without changing any root pairing.
    pub fn bar_map_a(&self, v: &Vector) -> Result<Vector, Error> {
        if self.type_tag != TypeTag::A {
            return Err(Error::Unsupported(self.type_tag, self.rank));
        }
        assert_eq!(v.dim(), self.ambient_dim);
        let last = v.coord(self.ambient_dim).clone();
        Ok(Vector::new(v.coords().iter().map(|c| c - &last).collect()))
    }

    /// The half-open interval of scales q for which the base weight is the
    /// only weight in the fundamental alcove, in both the Killing scale and
    /// the standard-modulus scale (multiply by c).
    pub fn unique_weight_interval(&self) -> UniqueWeightInterval {
        let m = *self.marks.iter().min().expect("nonempty marks");
        let theta_norm_killing = ratio(1, self.dual_coxeter);
        let lower = &theta_norm_killing * ratio(self.dual_coxeter - 1, 2);
        let upper = &theta_norm_killing * ratio(self.dual_coxeter + m - 1, 2);
        let c = rat(self.norm_const);
        UniqueWeightInterval {
            killing: (lower.clone(), upper.clone()),
            standard: (lower * &c, upper * &c),
            min_mark: m,
        }
    }

    /// True iff λ is a dominant weight (λ ∈ P and ⟨λ,α^∨⟩ ≥ 0 on the simple
    /// roots).
    pub fn is_dominant(&self, lambda: &Vector) -> bool {
        self.lattice_contains(Lattice::Weight, lambda)
            && self.simple_roots.iter().all(|a| {
                let p = self.pairing(lambda, a);
                p.is_integer() && !p.is_negative()
            })
    }
}

/// Interval of scales with a unique weight in the fundamental alcove; the
/// interval is open on the left and closed on the right.
#[derive(Debug, Clone)]
pub struct UniqueWeightInterval {
    pub killing: (Rat, Rat),
    pub standard: (Rat, Rat),
    pub min_mark: i64,
}

impl UniqueWeightInterval {
    pub fn contains_killing(&self, q: &Rat) -> bool {
        *q > self.killing.0 && *q <= self.killing.1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{rat, ratio};

    fn all_systems(max_rank: usize) -> Vec<RootSystem> {
        let mut out = Vec::new();
        for order in [BasisOrder::Bourbaki, BasisOrder::Reversed] {
            for n in 1..=max_rank {
                out.push(RootSystem::build(TypeTag::A, n, order).unwrap());
            }
            for n in 2..=max_rank {
                out.push(RootSystem::build(TypeTag::B, n, order).unwrap());
                out.push(RootSystem::build(TypeTag::C, n, order).unwrap());
            }
            for n in 3..=max_rank {
                out.push(RootSystem::build(TypeTag::D, n, order).unwrap());
            }
        }
        out.push(RootSystem::build(TypeTag::G, 2, BasisOrder::Bourbaki).unwrap());
        out
    }

    #[test]
    fn build_examples() {
        let a2 = RootSystem::build(TypeTag::A, 2, BasisOrder::Bourbaki).unwrap();
        assert_eq!(a2.dual_coxeter(), 3);
        assert_eq!(a2.theta(), &Vector::from_ints(&[1, 0, -1]));

        let g2 = RootSystem::build(TypeTag::G, 2, BasisOrder::Bourbaki).unwrap();
        assert_eq!(g2.dual_coxeter(), 4);
        assert_eq!(g2.rho(), &Vector::from_ints(&[-1, -2, 3]));

        let c2 = RootSystem::build(TypeTag::C, 2, BasisOrder::Reversed).unwrap();
        assert_eq!(c2.theta(), &Vector::from_ints(&[0, 2]));
        assert_eq!(c2.simple_roots()[0], Vector::from_ints(&[2, 0]));
        assert_eq!(c2.simple_roots()[1], &Vector::from_ints(&[0, 1]) - &Vector::from_ints(&[1, 0]));
    }

    #[test]
    fn unsupported_ranks() {
        assert!(RootSystem::build(TypeTag::B, 1, BasisOrder::Bourbaki).is_err());
        assert!(RootSystem::build(TypeTag::D, 2, BasisOrder::Bourbaki).is_err());
        assert!(RootSystem::build(TypeTag::G, 3, BasisOrder::Bourbaki).is_err());
        assert!(RootSystem::build(TypeTag::G, 2, BasisOrder::Reversed).is_err());
    }

    #[test]
    fn positive_root_counts_and_killing_norm() {
        for rs in all_systems(8) {
            let n = rs.rank;
            let expected = match rs.type_tag {
                TypeTag::A => n * (n + 1) / 2,
                TypeTag::B | TypeTag::C => n * n,
                TypeTag::D => n * (n - 1),
                TypeTag::G => 6,
            };
            assert_eq!(rs.positive_roots().len(), expected, "{:?}", rs.type_tag);
            // (θ,θ) = 1/h^∨ in the Killing normalization
            assert_eq!(
                rs.dot_killing(rs.theta(), rs.theta()),
                ratio(1, rs.dual_coxeter()),
                "{:?} rank {}",
                rs.type_tag,
                n
            );
        }
    }

    #[test]
    fn positive_roots_closed_under_simple_reflections_up_to_sign() {
        for rs in all_systems(8) {
            for s in rs.simple_roots() {
                for a in rs.positive_roots() {
                    let refl = a - &s.scale(&rs.pairing(a, s));
                    let hit = rs.positive_roots().iter().any(|b| *b == refl || *b == -&refl);
                    assert!(hit, "{:?}: reflection left the root system", rs.type_tag);
                }
            }
        }
    }

    #[test]
    fn bar_map_examples() {
        let a2 = RootSystem::build(TypeTag::A, 2, BasisOrder::Bourbaki).unwrap();
        assert_eq!(
            a2.bar_map_a(a2.rho()).unwrap(),
            Vector::from_ints(&[2, 1, 0])
        );
        assert_eq!(
            a2.bar_map_a(&Vector::zero(3)).unwrap(),
            Vector::zero(3)
        );
        let lam = Vector::from_ints(&[2, -1, -1]);
        assert_eq!(a2.bar_map_a(&lam).unwrap(), Vector::from_ints(&[3, 0, 0]));
        // pairings with roots are unchanged
        for a in a2.positive_roots() {
            assert_eq!(a2.bar_map_a(&lam).unwrap().dot(a), lam.dot(a));
        }
    }

    #[test]
    fn unique_weight_interval_examples() {
        // all supported types have min mark 1, so ½ lies in the interval
        for rs in all_systems(5) {
            let iv = rs.unique_weight_interval();
            assert_eq!(iv.min_mark, 1);
            assert!(iv.contains_killing(&ratio(1, 2)), "{:?}", rs.type_tag);
        }
        // C_n: the standard-modulus interval is (2n, 2n+2]
        for n in 2..=5 {
            let c = RootSystem::build(TypeTag::C, n, BasisOrder::Bourbaki).unwrap();
            let iv = c.unique_weight_interval();
            assert_eq!(iv.standard.0, rat(2 * n as i64));
            assert_eq!(iv.standard.1, rat(2 * n as i64 + 2));
        }
        // A₂: Killing interval (1/3, 1/2]
        let a2 = RootSystem::build(TypeTag::A, 2, BasisOrder::Bourbaki).unwrap();
        assert_eq!(a2.unique_weight_interval().killing, (ratio(1, 3), ratio(1, 2)));
    }

    #[test]
    fn lattice_membership_examples() {
        let d4 = RootSystem::build(TypeTag::D, 4, BasisOrder::Bourbaki).unwrap();
        assert!(d4.lattice_contains(Lattice::Root, &Vector::from_ints(&[1, 1, 0, 0])));
        assert!(!d4.lattice_contains(Lattice::Root, &Vector::from_ints(&[1, 0, 0, 0])));
        assert!(d4.lattice_contains(Lattice::Root, &Vector::zero(4)));

        let g2 = RootSystem::build(TypeTag::G, 2, BasisOrder::Bourbaki).unwrap();
        // ½Q^∨ = 12·Q* contains 4(3,−3,0)
        assert!(g2.lattice_contains(Lattice::ScaledCoroot(12), &Vector::from_ints(&[12, -12, 0])));
        assert!(g2.lattice_contains(Lattice::ScaledCoroot(12), &Vector::from_ints(&[-4, -4, 8])));
        assert!(!g2.lattice_contains(Lattice::ScaledCoroot(12), &Vector::from_ints(&[4, -4, 0])));
    }

    #[test]
    fn lattices_are_subgroups_on_sampled_combinations() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for rs in all_systems(4) {
            for lat in [
                Lattice::Root,
                Lattice::Weight,
                Lattice::Coroot,
                Lattice::ScaledCoroot(rs.norm_const() / 2),
            ] {
                let basis = rs.lattice_basis(lat);
                for _ in 0..25 {
                    let combo = |rng: &mut rand_chacha::ChaCha8Rng| {
                        basis.iter().fold(Vector::zero(rs.ambient_dim()), |acc, b| {
                            &acc + &b.scale_int(rng.gen_range(-3..=3))
                        })
                    };
                    let x = combo(&mut rng);
                    let y = combo(&mut rng);
                    assert!(rs.lattice_contains(lat, &x));
                    assert!(rs.lattice_contains(lat, &(&x + &y)));
                    assert!(rs.lattice_contains(lat, &-&x));
                }
            }
        }
    }
}
