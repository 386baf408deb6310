//! Affine Weyl groups as permutations of ℤ.
//!
//! A permutation is stored by its window: the values it takes on a fixed set
//! of residue representatives I, extended to all of ℤ by the rule
//! (i+kp)^f = i^f + kp.  Each family fixes I and the period p:
//!
//! | family | representatives   | period | base point        |
//! |--------|-------------------|--------|-------------------|
//! | A      | [1, n]            | n      | (1, …, n)         |
//! | B/C/D  | [−n, n]           | 2n+1   | (1, …, n)         |
//! | Calt   | [−(n+1), n+1]     | 2n+2   | (1, …, n)         |
//! | G      | [−3, 4]           | 8      | (−1, −2, 3)       |
//!
//! `Calt` is the alternative model of the C_n group living at the other
//! admissible modulus 2n+2; its windows fix ±(n+1) pointwise, and the stored
//! window keeps both redundant endpoints.  For the symmetric families the
//! negative half of the window is stored too and validated against
//! antisymmetry rather than derived from it.
//!
//! Composition order: `f.then(g)` applies f first, then g.  This mirrors the
//! exponent notation i^{fg} = (i^f)^g under which the star map is a
//! homomorphism; note that it is the opposite of the usual function
//! composition `g ∘ f`.

use std::fmt;
use std::str::FromStr;


use crate::affine::{AffineElement, Context};
use crate::geometry::{Lattice, Rat, Vector};
use crate::root_system::{BasisOrder, RootSystem, TypeTag};
use crate::Error;

/// Which permutation model a window belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    /// C_n at the alternative modulus 2n+2, with ±(n+1) fixed.
    CAlt,
    D,
    G,
}

impl Family {
    pub fn token(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::CAlt => "Calt",
            Family::D => "D",
            Family::G => "G",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Some(Family::A),
            "b" => Some(Family::B),
            "c" => Some(Family::C),
            "calt" | "c-alt" | "c_alt" => Some(Family::CAlt),
            "d" => Some(Family::D),
            "g" | "g2" => Some(Family::G),
            _ => None,
        }
    }

    pub fn period(self, n: usize) -> i64 {
        let n = n as i64;
        match self {
            Family::A => n,
            Family::B | Family::C | Family::D => 2 * n + 1,
            Family::CAlt => 2 * n + 2,
            Family::G => 8,
        }
    }

    /// The stored representative set, ascending.
    pub fn reps(self, n: usize) -> Vec<i64> {
        let n = n as i64;
        match self {
            Family::A => (1..=n).collect(),
            Family::B | Family::C | Family::D => (-n..=n).collect(),
            Family::CAlt => (-(n + 1)..=(n + 1)).collect(),
            Family::G => (-3..=4).collect(),
        }
    }

    /// A true set of p class representatives (for `Calt` the stored window
    /// carries one redundant endpoint).
    fn canonical_reps(self, n: usize) -> Vec<i64> {
        match self {
            Family::CAlt => (-(n as i64)..=(n as i64 + 1)).collect(),
            _ => self.reps(n),
        }
    }

    fn min_n(self) -> usize {
        match self {
            Family::D => 3,
            _ => 2,
        }
    }

    /// Reduce z to its representative, returning (representative, offset)
    /// with z = representative + offset and offset ∈ pℤ.
    fn reduce(self, n: usize, z: i64) -> (i64, i64) {
        let p = self.period(n);
        let lo = match self {
            Family::A => 1,
            Family::B | Family::C | Family::D => -(n as i64),
            Family::CAlt => -(n as i64),
            Family::G => -3,
        };
        let rep = (z - lo).rem_euclid(p) + lo;
        (rep, z - rep)
    }
}

/// A permutation of ℤ given by its window on the family's representative
/// set, periodic with period p.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZPerm {
    family: Family,
    n: usize,
    /// Values parallel to `family.reps(n)`.
    values: Vec<i64>,
}

impl ZPerm {
    pub fn identity(family: Family, n: usize) -> ZPerm {
        ZPerm {
            family,
            n,
            values: family.reps(n),
        }
    }

    /// Wraps a window given as values on `family.reps(n)`, in that order.
    /// Only the shape is validated here; everything about the values is the
    /// business of [`ZPerm::check_membership`].
    pub fn from_window(family: Family, n: usize, values: Vec<i64>) -> Result<ZPerm, Error> {
        if n < family.min_n() || (family == Family::G && n != 2) {
            return Err(Error::BadWindow(format!(
                "family {} does not support n = {}",
                family.token(),
                n
            )));
        }
        if values.len() != family.reps(n).len() {
            return Err(Error::BadWindow(format!(
                "expected {} window entries, got {}",
                family.reps(n).len(),
                values.len()
            )));
        }
        Ok(ZPerm { family, n, values })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn period(&self) -> i64 {
        self.family.period(self.n)
    }

    /// (representative, value) pairs in ascending representative order.
    pub fn window(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.family.reps(self.n).into_iter().zip(self.values.iter().copied())
    }

    fn rep_index(&self, rep: i64) -> usize {
        let reps = self.family.reps(self.n);
        (rep - reps[0]) as usize
    }

    /// Value on a representative of the window.
    pub fn value_at(&self, rep: i64) -> i64 {
        self.values[self.rep_index(rep)]
    }

    /// f(z): reduce z to its representative, map, restore the multiple of p.
    pub fn apply(&self, z: i64) -> i64 {
        let (rep, offset) = self.family.reduce(self.n, z);
        self.value_at(rep) + offset
    }

    pub fn is_identity(&self) -> bool {
        self.values == self.family.reps(self.n)
    }

    /// f then g, the order in which the star map is a homomorphism.
    pub fn then(&self, g: &ZPerm) -> ZPerm {
        assert_eq!((self.family, self.n), (g.family, g.n), "window model mismatch");
        ZPerm {
            family: self.family,
            n: self.n,
            values: self
                .family
                .reps(self.n)
                .into_iter()
                .map(|i| g.apply(self.apply(i)))
                .collect(),
        }
    }

    pub fn inverse(&self) -> ZPerm {
        let p = self.period();
        let values = self
            .family
            .reps(self.n)
            .into_iter()
            .map(|i| {
                let (source, value) = self
                    .window()
                    .find(|&(_, v)| (v - i).rem_euclid(p) == 0)
                    .expect("window is a bijection seed");
                source + (i - value)
            })
            .collect();
        ZPerm {
            family: self.family,
            n: self.n,
            values,
        }
    }

    fn is_antisymmetric(&self) -> bool {
        self.window().all(|(i, v)| {
            let mirror = -i;
            if self.family.reps(self.n).contains(&mirror) {
                self.value_at(mirror) == -v
            } else {
                true
            }
        })
    }

    /// Balanced residue of a value in the canonical representative range.
    fn value_residue(&self, v: i64) -> i64 {
        self.family.reduce(self.n, v).0
    }

    /// Decides whether the window extends to an element of the family's
    /// group, checking the published conditions in order and naming the
    /// first violated one.
    pub fn check_membership(&self) -> Result<(), Error> {
        // the window must be a bijection seed: its values must cover every
        // residue class exactly once
        let p = self.period();
        let mut seen = vec![false; p as usize];
        for rep in self.family.canonical_reps(self.n) {
            let class = self.value_at(rep).rem_euclid(p) as usize;
            if seen[class] {
                return Err(Error::BadWindow(
                    "window values are not distinct modulo the period".into(),
                ));
            }
            seen[class] = true;
        }

        let n = self.n as i64;
        let not_member = |msg: &str| Err(Error::NotMember(msg.into()));
        match self.family {
            Family::A => {
                let sum: i64 = (1..=n).map(|i| self.value_at(i)).sum();
                if sum != n * (n + 1) / 2 {
                    return not_member("window sum differs from the base window sum");
                }
            }
            Family::C => {
                if !self.is_antisymmetric() {
                    return not_member("window is not antisymmetric");
                }
            }
            Family::CAlt => {
                if !self.is_antisymmetric() {
                    return not_member("window is not antisymmetric");
                }
                if self.value_at(n + 1) != n + 1 || self.value_at(-(n + 1)) != -(n + 1) {
                    return not_member("window moves the fixed points ±(n+1)");
                }
            }
            Family::B => {
                if !self.is_antisymmetric() {
                    return not_member("window is not antisymmetric");
                }
                if !self.b_sum_parity_holds() {
                    return not_member("window sum has the wrong parity");
                }
            }
            Family::D => {
                if !self.is_antisymmetric() {
                    return not_member("window is not antisymmetric");
                }
                if !self.b_sum_parity_holds() {
                    return not_member("window sum has the wrong parity");
                }
                let negative_residues = (1..=n)
                    .filter(|&i| self.value_residue(self.value_at(i)) < 0)
                    .count();
                if negative_residues % 2 == 1 {
                    return not_member("odd number of negative residues on [n]");
                }
            }
            Family::G => {
                if !self.is_antisymmetric() {
                    return not_member("window is not antisymmetric");
                }
                if self.value_at(4) != 4 {
                    return not_member("window does not fix 4ℤ pointwise");
                }
                if -self.value_at(1) - self.value_at(2) + self.value_at(3) != 0 {
                    return not_member("twisted sum −1^f − 2^f + 3^f is nonzero");
                }
                let mut res = [
                    self.value_residue(self.value_at(-1)),
                    self.value_residue(self.value_at(-2)),
                    self.value_residue(self.value_at(3)),
                ];
                res.sort_unstable();
                if res != [-2, -1, 3] && res != [-3, 1, 2] {
                    return not_member("residue pattern is not ±{1,2,−3}");
                }
                let k = |i: i64| (self.value_at(i) - self.value_residue(self.value_at(i))) / 8;
                if (-k(1) - k(3)).rem_euclid(3) != 0 || (-k(2) - k(3)).rem_euclid(3) != 0 {
                    return not_member("translation residues are not congruent modulo 3");
                }
            }
        }
        Ok(())
    }

    /// Σ_{i∈[n]} i^f ≡ n(n+1)/2 mod 2: the sum-parity condition shared by
    /// the B and D characterizations.
    fn b_sum_parity_holds(&self) -> bool {
        let n = self.n as i64;
        let sum: i64 = (1..=n).map(|i| self.value_at(i)).sum();
        (sum - n * (n + 1) / 2) % 2 == 0
    }
}

/// The three equivalent renderings of the B_n parity condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BParityForm {
    /// (3): Σ i^f ≡ n(n+1)/2 mod 2.
    WindowSum,
    /// (3′): Σ (i^f − residue(i^f)) ∈ 2(2n+1)ℤ.
    TranslationSum,
    /// (3″): #{j ∈ ℤ, j ≤ n, j^f > n} is even.
    OvershootCount,
}

/// Evaluates one form of the B_n parity condition.  The window must already
/// satisfy antisymmetry and the bijection-seed property.
pub fn check_membership_b_alt(f: &ZPerm, form: BParityForm) -> bool {
    assert_eq!(f.family(), Family::B);
    let n = f.n() as i64;
    let p = f.period();
    match form {
        BParityForm::WindowSum => f.b_sum_parity_holds(),
        BParityForm::TranslationSum => {
            let total: i64 = (1..=n)
                .map(|i| f.value_at(i) - f.value_residue(f.value_at(i)))
                .sum();
            total % (2 * p) == 0
        }
        BParityForm::OvershootCount => {
            // f moves only finitely many j ≤ n above n; their count is
            // Σ |kᵢ| over the positive window, kᵢ the translation multiples
            let overshoots: i64 = (1..=n)
                .map(|i| ((f.value_at(i) - f.value_residue(f.value_at(i))) / p).abs())
                .sum();
            overshoots % 2 == 0
        }
    }
}

impl fmt::Display for ZPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.family.token(), self.n, self.period())?;
        for (rep, value) in self.window() {
            writeln!(f, "{} -> {}", rep, value)?;
        }
        Ok(())
    }
}

impl FromStr for ZPerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<ZPerm, Error> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::BadWindow("empty window".into()))?;
        let mut parts = header.split_whitespace();
        let family = parts
            .next()
            .and_then(Family::parse)
            .ok_or_else(|| Error::BadWindow(format!("bad header: {}", header)))?;
        let n: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::BadWindow(format!("bad header: {}", header)))?;
        let period: i64 = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::BadWindow(format!("bad header: {}", header)))?;
        if period != family.period(n) {
            return Err(Error::BadWindow(format!(
                "period {} does not match {} {}",
                period,
                family.token(),
                n
            )));
        }
        let reps = family.reps(n);
        let mut values: Vec<Option<i64>> = vec![None; reps.len()];
        for line in lines {
            let (lhs, rhs) = line
                .split_once("->")
                .ok_or_else(|| Error::BadWindow(format!("bad window line: {}", line)))?;
            let rep: i64 = lhs
                .trim()
                .parse()
                .map_err(|_| Error::BadWindow(format!("bad window line: {}", line)))?;
            let value: i64 = rhs
                .trim()
                .parse()
                .map_err(|_| Error::BadWindow(format!("bad window line: {}", line)))?;
            let idx = reps
                .iter()
                .position(|&r| r == rep)
                .ok_or_else(|| Error::BadWindow(format!("{} is not a representative", rep)))?;
            if values[idx].replace(value).is_some() {
                return Err(Error::BadWindow(format!("duplicate entry for {}", rep)));
            }
        }
        let values: Option<Vec<i64>> = values.into_iter().collect();
        let values = values.ok_or_else(|| Error::BadWindow("incomplete window".into()))?;
        ZPerm::from_window(family, n, values)
    }
}

/// A window family bound to its affine context: the reversed-chart root
/// system, the modulus, and the regular base point whose orbit coordinates
/// are the windows.
#[derive(Debug)]
pub struct ZContext {
    pub family: Family,
    pub n: usize,
    ctx: Context,
}

impl ZContext {
    pub fn new(family: Family, n: usize) -> Result<ZContext, Error> {
        if n < family.min_n() || (family == Family::G && n != 2) {
            return Err(Error::BadWindow(format!(
                "family {} does not support n = {}",
                family.token(),
                n
            )));
        }
        let ni = n as i64;
        let staircase = Vector::from_ints(&(1..=ni).collect::<Vec<_>>());
        let (rs, modulus, base, lattice) = match family {
            // window size n means the rank n−1 system in ℝ^n
            Family::A => (
                RootSystem::build(TypeTag::A, n - 1, BasisOrder::Reversed)?,
                ni,
                staircase,
                Some(Lattice::Root),
            ),
            Family::C => (
                RootSystem::build(TypeTag::C, n, BasisOrder::Reversed)?,
                2 * ni + 1,
                staircase,
                Some(Lattice::Weight),
            ),
            Family::CAlt => (
                RootSystem::build(TypeTag::C, n, BasisOrder::Reversed)?,
                2 * ni + 2,
                staircase,
                Some(Lattice::Weight),
            ),
            Family::B => (
                RootSystem::build(TypeTag::B, n, BasisOrder::Reversed)?,
                2 * ni + 1,
                staircase,
                Some(Lattice::Coroot),
            ),
            // the coset test alone does not cut out the D orbit (the alcove
            // holds other coset points); membership carries the extra
            // residue-parity condition instead
            Family::D => (
                RootSystem::build(TypeTag::D, n, BasisOrder::Reversed)?,
                2 * ni + 1,
                staircase,
                None,
            ),
            Family::G => (
                RootSystem::build(TypeTag::G, 2, BasisOrder::Bourbaki)?,
                24,
                Vector::from_ints(&[-1, -2, 3]),
                None,
            ),
        };
        let ctx = Context::new(rs, modulus, base, lattice)?;
        assert_eq!(ctx.period(), family.period(n), "window period mismatch");
        Ok(ZContext { family, n, ctx })
    }

    /// The underlying affine context (generators, composition, walks).
    pub fn ctx(&self) -> &Context {
        &self.ctx
    }

    /// The window of w: i ↦ ⟨w(base), e_i⟩ on the representatives (with the
    /// ε-twist for G₂ and the fixed points supplied for Calt).
    pub fn star(&self, w: &AffineElement) -> ZPerm {
        let point = self.ctx.act(w, self.ctx.base());
        let coord = |i: i64| -> i64 {
            let c: &Rat = point.coord(i as usize);
            assert!(c.is_integer(), "window coordinate is not an integer");
            i64::try_from(&c.to_integer()).expect("window coordinate fits in i64")
        };
        let n = self.n as i64;
        let values = self
            .family
            .reps(self.n)
            .into_iter()
            .map(|i| match self.family {
                Family::A => coord(i),
                Family::B | Family::C | Family::D => match i.signum() {
                    0 => 0,
                    1 => coord(i),
                    _ => -coord(-i),
                },
                Family::CAlt => {
                    if i.abs() == n + 1 {
                        i
                    } else {
                        match i.signum() {
                            0 => 0,
                            1 => coord(i),
                            _ => -coord(-i),
                        }
                    }
                }
                Family::G => {
                    let eps = |j: i64| if j.abs() == 3 { 1 } else { -1 };
                    match i {
                        0 => 0,
                        4 => 4,
                        _ if i > 0 => eps(i) * coord(i),
                        _ => -(eps(i) * coord(-i)),
                    }
                }
            })
            .collect();
        ZPerm {
            family: self.family,
            n: self.n,
            values,
        }
    }

    /// Window of the element given by a generator word.
    pub fn star_word(&self, word: &[usize]) -> ZPerm {
        self.star(&self.ctx.word_element(word))
    }

    /// Inverse of the star map: checks membership, rebuilds the ambient
    /// orbit point from the window, and walks it back to the base alcove.
    pub fn unstar(&self, f: &ZPerm) -> Result<AffineElement, Error> {
        assert_eq!((f.family, f.n), (self.family, self.n), "window model mismatch");
        f.check_membership()?;
        let point = self.ambient_point(f);
        if let Some(lattice) = self.ctx.orbit_lattice() {
            if !self.ctx.orbit_contains(lattice, &point) {
                return Err(Error::NotInOrbit);
            }
        }
        let (w, _) = self.ctx.element_from_point(&point)?;
        Ok(w)
    }

    /// The orbit point encoded by a window.
    pub fn ambient_point(&self, f: &ZPerm) -> Vector {
        let n = self.n as i64;
        match self.family {
            Family::G => Vector::from_ints(&[-f.value_at(1), -f.value_at(2), f.value_at(3)]),
            _ => Vector::from_ints(&(1..=n).map(|i| f.value_at(i)).collect::<Vec<_>>()),
        }
    }
}

/// Length of a type A element computed directly from its window:
/// Σ_{1≤i<j≤n} |⌊(j^f − i^f)/n⌋|.
pub fn length_from_zperm_a(f: &ZPerm) -> Result<u64, Error> {
    assert_eq!(f.family(), Family::A);
    f.check_membership()?;
    let n = f.n() as i64;
    let mut total = 0u64;
    for i in 1..=n {
        for j in (i + 1)..=n {
            total += (f.value_at(j) - f.value_at(i)).div_euclid(n).unsigned_abs();
        }
    }
    Ok(total)
}
