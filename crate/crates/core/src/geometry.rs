//! Exact rational vectors and the standard inner product of ℝ^N.
//!
//! Every scalar in this crate is a [`Rat`]: an arbitrary-precision rational,
//! always reduced, with positive denominator. No floating point anywhere;
//! all the conditions we ever test are congruences or strict inequalities
//! over ℚ, so exactness is non-negotiable.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Arbitrary-precision rational scalar.
pub type Rat = BigRational;

/// Shorthand for an integer-valued [`Rat`].
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exact ratio `n/d`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// A point of the ambient coordinate space ℝ^N with exact rational
/// coordinates.
///
/// The ambient dimension is `n+1` for type A rank `n`, `n` for types B/C/D,
/// and `3` for G₂ (realized inside the sum-zero hyperplane).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector(Vec<Rat>);

impl Vector {
    pub fn new(coords: Vec<Rat>) -> Self {
        Vector(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Vector(vec![Rat::zero(); dim])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    /// Coordinate with respect to the canonical basis vector `e_i` (1-based).
    pub fn coord(&self, i: usize) -> &Rat {
        &self.0[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rat::is_zero)
    }

    /// Standard inner product `⟨x,y⟩ = Σ xᵢyᵢ` of ℝ^N.
    ///
    /// Panics on dimension mismatch.
    pub fn dot(&self, other: &Vector) -> Rat {
        assert_eq!(self.dim(), other.dim(), "inner product dimension mismatch");
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a * b)
            .fold(Rat::zero(), |acc, t| acc + t)
    }

    pub fn scale(&self, c: &Rat) -> Vector {
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    pub fn scale_int(&self, c: i64) -> Vector {
        self.scale(&rat(c))
    }

    /// Sum of all coordinates (type A and G₂ vectors live in the sum-zero
    /// hyperplane).
    pub fn coord_sum(&self) -> Rat {
        self.0.iter().fold(Rat::zero(), |acc, c| acc + c)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(Rat::is_integer)
    }

    /// Reverses the order of the coordinates.
    pub fn reversed(&self) -> Vector {
        let mut v = self.0.clone();
        v.reverse();
        Vector(v)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Vector {
    // coordinates read better as fractions than as `Ratio { .. }` trees
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector sum dimension mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector difference dimension mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

/// Intensional description of the lattices attached to a root system.
///
/// Membership is decided by per-type coordinate congruences, not by solving
/// against a Gram matrix; see `RootSystem::lattice_contains`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lattice {
    /// Root lattice Q.
    Root,
    /// Weight lattice P.
    Weight,
    /// Standard-normalized coroot lattice Q* = Σ ℤ·2α/⟨α,α⟩.
    Coroot,
    /// k·Q* for a positive integer k.  `Coroot` is `ScaledCoroot(1)`.
    ScaledCoroot(i64),
}

/// Floor of an exact rational, as a `BigInt`.
pub fn rat_floor(x: &Rat) -> BigInt {
    x.floor().to_integer()
}

/// Balanced residue of `a` modulo `m > 0`, normalized into `(lo, lo + m]`.
pub fn residue_in(a: &BigInt, m: i64, lo: i64) -> i64 {
    let m_big = BigInt::from(m);
    let mut r = a % &m_big;
    if r.is_negative() {
        r += &m_big;
    }
    // r in [0, m)
    let mut r: i64 = i64::try_from(&r).expect("residue fits in i64");
    while r <= lo {
        r += m;
    }
    while r > lo + m {
        r -= m;
    }
    r
}
