//! The affine Weyl group Ŵ_q acting on the ambient space.
//!
//! Everything is kept in standard coordinates with an integer modulus M:
//! the reflecting hyperplanes are ⟨x,α⟩ = kM for α ∈ Δ⁺, k ∈ ℤ, which is the
//! Killing-scale arrangement (x,α) = kq cleared of denominators (M = qc).
//! This keeps every regularity test and alcove coordinate a congruence over
//! ℤ.  The translation lattice is T = M·Q*, and the group is T ⋊ W.

use std::collections::{HashMap, VecDeque};

use num_traits::Signed;

use crate::geometry::{rat, Lattice, Rat, Vector};
use crate::root_system::{RootSystem, TypeTag};
use crate::Error;

/// An element of the finite Weyl group, stored as a signed index map:
/// `targets[i-1] = ±j` means v(e_i) = ±e_j.
///
/// For type A the signs are always positive.  For G₂ the table describes the
/// action modulo the fixed sum direction (1,1,1); it is faithful on the
/// sum-zero hyperplane where all G₂ points live.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteElement {
    targets: Vec<i64>,
}

impl FiniteElement {
    pub fn identity(dim: usize) -> Self {
        FiniteElement {
            targets: (1..=dim as i64).collect(),
        }
    }

    /// Builds an element from a signed target table, checking that the
    /// absolute values form a permutation of 1..=N.
    pub fn from_targets(targets: Vec<i64>) -> Result<Self, Error> {
        let n = targets.len();
        let mut seen = vec![false; n];
        for &t in &targets {
            let a = t.unsigned_abs() as usize;
            if t == 0 || a > n || seen[a - 1] {
                return Err(Error::BadFiniteElement(format!(
                    "targets {:?} are not a signed permutation",
                    targets
                )));
            }
            seen[a - 1] = true;
        }
        Ok(FiniteElement { targets })
    }

    pub fn dim(&self) -> usize {
        self.targets.len()
    }

    pub fn targets(&self) -> &[i64] {
        &self.targets
    }

    pub fn is_identity(&self) -> bool {
        self.targets.iter().enumerate().all(|(k, &t)| t == k as i64 + 1)
    }

    /// v(x), by scattering coordinates: the e_i component of x lands on
    /// e_{|tᵢ|} with the sign of tᵢ.
    pub fn apply(&self, x: &Vector) -> Vector {
        assert_eq!(x.dim(), self.dim(), "finite element dimension mismatch");
        let mut coords = vec![Rat::from_integer(0.into()); self.dim()];
        for (k, t) in self.targets.iter().enumerate() {
            let j = t.unsigned_abs() as usize - 1;
            let c = x.coords()[k].clone();
            coords[j] = if *t < 0 { -c } else { c };
        }
        Vector::new(coords)
    }

    /// v∘u (first u, then v).
    pub fn compose(&self, u: &FiniteElement) -> FiniteElement {
        assert_eq!(self.dim(), u.dim());
        let targets = u
            .targets
            .iter()
            .map(|&t| {
                let through = self.targets[t.unsigned_abs() as usize - 1];
                if t < 0 {
                    -through
                } else {
                    through
                }
            })
            .collect();
        FiniteElement { targets }
    }

    pub fn inverse(&self) -> FiniteElement {
        let mut targets = vec![0i64; self.dim()];
        for (k, &t) in self.targets.iter().enumerate() {
            let j = t.unsigned_abs() as usize - 1;
            let i = k as i64 + 1;
            targets[j] = if t < 0 { -i } else { i };
        }
        FiniteElement { targets }
    }

    /// Parity of the underlying permutation i ↦ |tᵢ| (inversion count).
    pub fn abs_perm_parity(&self) -> u8 {
        let abs: Vec<i64> = self.targets.iter().map(|t| t.abs()).collect();
        let mut inv = 0u64;
        for i in 0..abs.len() {
            for j in (i + 1)..abs.len() {
                if abs[i] > abs[j] {
                    inv += 1;
                }
            }
        }
        (inv % 2) as u8
    }

    pub fn sign_change_count(&self) -> usize {
        self.targets.iter().filter(|t| t.is_negative()).count()
    }
}

/// An element t_τ·v of the affine group: first the finite part, then the
/// translation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineElement {
    pub translation: Vector,
    pub finite: FiniteElement,
}

impl AffineElement {
    pub fn identity(dim: usize) -> Self {
        AffineElement {
            translation: Vector::zero(dim),
            finite: FiniteElement::identity(dim),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.translation.is_zero() && self.finite.is_identity()
    }
}

/// A root system together with a standard modulus M and a regular base
/// point in the fundamental alcove; fixes which group Ŵ_q is meant
/// (q = M/c in the Killing scale).
#[derive(Debug, Clone)]
pub struct Context {
    rs: RootSystem,
    modulus: i64,
    base: Vector,
    /// Generator of {⟨η,eᵢ⟩ | η ∈ T, i} as a subgroup of ℤ.  Coincides with
    /// M for the classical window models, but is 8 for G₂ where M = 24.
    period: i64,
    /// Lattice L with (base + L) ∩ C = {base}, when one is shipped; then the
    /// orbit is exactly the regular points of base + L.
    orbit_lattice: Option<Lattice>,
    generators: Vec<AffineElement>,
}

impl Context {
    /// Builds a context, checking that the base point is M-regular and lies
    /// inside the fundamental alcove.
    pub fn new(
        rs: RootSystem,
        modulus: i64,
        base: Vector,
        orbit_lattice: Option<Lattice>,
    ) -> Result<Context, Error> {
        assert!(modulus > 0);
        assert_eq!(base.dim(), rs.ambient_dim());
        for alpha in rs.positive_roots() {
            let v = base.dot(alpha);
            assert!(v.is_positive(), "base point is not in the fundamental alcove");
        }
        assert!(
            base.dot(rs.theta()) < rat(modulus),
            "base point is not in the fundamental alcove"
        );

        // window period: gcd of the coordinates of the translation basis M·α*
        let mut period: i64 = 0;
        for alpha in rs.simple_roots() {
            for c in rs.coroot(alpha).scale_int(modulus).coords() {
                assert!(c.is_integer(), "translation lattice is not integral");
                let c = i64::try_from(&c.to_integer()).unwrap();
                period = num_integer::gcd(period, c.abs());
            }
        }
        assert!(period > 0);

        let mut ctx = Context {
            rs,
            modulus,
            base,
            period,
            orbit_lattice,
            generators: Vec::new(),
        };
        let mut gens = vec![AffineElement {
            translation: ctx.rs.theta_star().scale_int(modulus),
            finite: ctx.reflection(ctx.rs.theta()),
        }];
        for alpha in ctx.rs.simple_roots() {
            gens.push(AffineElement {
                translation: Vector::zero(ctx.rs.ambient_dim()),
                finite: ctx.reflection(alpha),
            });
        }
        ctx.generators = gens;
        if !ctx.is_regular(&ctx.base) {
            return Err(Error::NotRegular(modulus));
        }
        Ok(ctx)
    }

    /// Context for the orbit analysis behind the Euler-product expansion:
    /// Bourbaki chart, base point ρ, modulus M = c/2 (the Killing scale
    /// q = ½), orbit lattice Q.
    pub fn kostant(type_tag: TypeTag, rank: usize) -> Result<Context, Error> {
        let rs = RootSystem::build(type_tag, rank, crate::BasisOrder::Bourbaki)?;
        let modulus = rs.norm_const() / 2;
        let base = rs.rho().clone();
        Context::new(rs, modulus, base, Some(Lattice::Root))
    }

    pub fn rs(&self) -> &RootSystem {
        &self.rs
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn base(&self) -> &Vector {
        &self.base
    }

    pub fn period(&self) -> i64 {
        self.period
    }

    pub fn orbit_lattice(&self) -> Option<Lattice> {
        self.orbit_lattice
    }

    /// Lattice of the translation part T = M·Q*.
    pub fn translation_lattice(&self) -> Lattice {
        Lattice::ScaledCoroot(self.modulus)
    }

    /// Generators s₀, s₁, …, s_n; index 0 is the affine reflection
    /// s₀ = t_{Mθ*}·s_θ.
    pub fn generators(&self) -> &[AffineElement] {
        &self.generators
    }

    fn reflection(&self, alpha: &Vector) -> FiniteElement {
        let dim = self.rs.ambient_dim();
        let mut targets = Vec::with_capacity(dim);
        for i in 0..dim {
            let mut coords = vec![Rat::from_integer(0.into()); dim];
            coords[i] = rat(1);
            let e_i = Vector::new(coords);
            let image = &e_i - &alpha.scale(&self.rs.pairing(&e_i, alpha));
            targets.push(resolve_signed_basis(&image, self.rs.type_tag));
        }
        FiniteElement { targets }
    }

    /// w(x) = τ + v(x).
    pub fn act(&self, w: &AffineElement, x: &Vector) -> Vector {
        &w.translation + &w.finite.apply(x)
    }

    /// w∘u = t_{η+w(τ)}·(vu).  Panics if the result leaves the translation
    /// lattice, which signals a corrupted element.
    pub fn compose(&self, w: &AffineElement, u: &AffineElement) -> AffineElement {
        let translation = &w.translation + &w.finite.apply(&u.translation);
        assert!(
            self.rs.lattice_contains(self.translation_lattice(), &translation),
            "composition left the translation lattice"
        );
        AffineElement {
            translation,
            finite: w.finite.compose(&u.finite),
        }
    }

    pub fn inverse(&self, w: &AffineElement) -> AffineElement {
        let vinv = w.finite.inverse();
        AffineElement {
            translation: -&vinv.apply(&w.translation),
            finite: vinv,
        }
    }

    /// Folds a word in the generators (indices 0..=n) into an element.
    pub fn word_element(&self, word: &[usize]) -> AffineElement {
        word.iter().fold(
            AffineElement::identity(self.rs.ambient_dim()),
            |acc, &j| self.compose(&acc, &self.generators[j]),
        )
    }

    /// True iff ⟨x,α⟩ ∉ Mℤ for every positive root α, i.e. x lies in some
    /// alcove.
    pub fn is_regular(&self, x: &Vector) -> bool {
        self.rs
            .positive_roots()
            .iter()
            .all(|alpha| !(x.dot(alpha) / rat(self.modulus)).is_integer())
    }

    /// Alcove form of the element mapping the base alcove to μ's alcove:
    /// α ↦ ⌊⟨μ,α⟩/M⌋, indexed like `rs().positive_roots()`.  All zero iff μ
    /// lies in the fundamental alcove.
    pub fn alcove_form(&self, mu: &Vector) -> Result<Vec<i64>, Error> {
        if !self.is_regular(mu) {
            return Err(Error::NotRegular(self.modulus));
        }
        Ok(self
            .rs
            .positive_roots()
            .iter()
            .map(|alpha| {
                let f = (mu.dot(alpha) / rat(self.modulus)).floor().to_integer();
                i64::try_from(&f).expect("alcove coordinate fits in i64")
            })
            .collect())
    }

    /// ℓ_q(w) = Σ_α |⌊⟨μ,α⟩/M⌋| for μ = w(base): the number of hyperplanes
    /// separating μ's alcove from the fundamental one.
    pub fn length_from_point(&self, mu: &Vector) -> Result<u64, Error> {
        Ok(self
            .alcove_form(mu)?
            .iter()
            .map(|k| k.unsigned_abs())
            .sum())
    }

    /// ℓ(v) mod 2 for the finite part of w = t_τ·v; equals ℓ_q(w) mod 2
    /// because pure translations have even length.
    pub fn parity(&self, w: &AffineElement) -> u8 {
        self.finite_parity(&w.finite)
    }

    pub fn finite_parity(&self, v: &FiniteElement) -> u8 {
        match self.rs.type_tag {
            TypeTag::A => v.abs_perm_parity(),
            TypeTag::B | TypeTag::C => {
                (v.abs_perm_parity() + (v.sign_change_count() % 2) as u8) % 2
            }
            // sign changes come in pairs for D; for G₂ the parity is the
            // sign of the index permutation on [3]
            TypeTag::D | TypeTag::G => v.abs_perm_parity(),
        }
    }

    /// Orbit test via the coset characterization: μ ∈ base + L and μ
    /// regular.  The caller asserts (base+L) ∩ C = {base}; that holds for
    /// every shipped preset carrying an `orbit_lattice`.
    pub fn orbit_contains(&self, lattice: Lattice, mu: &Vector) -> bool {
        self.rs.lattice_contains(lattice, &(mu - &self.base)) && self.is_regular(mu)
    }

    /// Recovers the unique w with w(base) = μ by a greedy descent walk
    /// towards the fundamental alcove, together with the reduced word the
    /// walk traverses.  Each step lowers the length by exactly one; ties are
    /// broken by the lowest generator index.
    pub fn element_from_point(&self, mu: &Vector) -> Result<(AffineElement, Vec<usize>), Error> {
        if !self.is_regular(mu) {
            return Err(Error::NotRegular(self.modulus));
        }
        let mut point = mu.clone();
        let mut word = Vec::new();
        let mut budget = self.length_from_point(mu)?;
        while point != self.base {
            let j = self.descent(&point).ok_or(Error::NotInOrbit)?;
            point = self.act(&self.generators[j], &point);
            word.push(j);
            if budget == 0 {
                return Err(Error::NotInOrbit);
            }
            budget -= 1;
        }
        let w = self.word_element(&word);
        debug_assert_eq!(self.act(&w, &self.base), *mu);
        Ok((w, word))
    }

    /// Lowest generator whose wall separates the point from the fundamental
    /// alcove, or None if the point already lies in it.
    fn descent(&self, point: &Vector) -> Option<usize> {
        if point.dot(self.rs.theta()) > rat(self.modulus) {
            return Some(0);
        }
        for (k, alpha) in self.rs.simple_roots().iter().enumerate() {
            if point.dot(alpha).is_negative() {
                return Some(k + 1);
            }
        }
        None
    }

    /// Exhaustive breadth-first enumeration of the orbit ball: all points
    /// reachable within `max_len` generator applications, each with its true
    /// Coxeter length (= BFS depth) and one reduced word.
    ///
    /// Deduplication is by exact point equality, valid because the base is
    /// regular so w ↦ w(base) is injective.
    pub fn bfs_enumerate(&self, max_len: u64) -> OrbitMap {
        let mut map: HashMap<Vector, OrbitEntry> = HashMap::new();
        let mut queue = VecDeque::new();
        map.insert(
            self.base.clone(),
            OrbitEntry {
                length: 0,
                word: Vec::new(),
            },
        );
        queue.push_back(self.base.clone());
        while let Some(point) = queue.pop_front() {
            let here = map[&point].clone();
            if here.length == max_len {
                continue;
            }
            for (j, g) in self.generators.iter().enumerate() {
                let next = self.act(g, &point);
                assert_ne!(next, point, "generator fixed a regular point");
                if let Some(seen) = map.get(&next) {
                    // neighboring alcoves differ in length by exactly one
                    assert_eq!(
                        (seen.length as i64 - here.length as i64).abs(),
                        1,
                        "BFS layer structure violated"
                    );
                    continue;
                }
                let mut word = Vec::with_capacity(here.word.len() + 1);
                word.push(j);
                word.extend_from_slice(&here.word);
                map.insert(
                    next.clone(),
                    OrbitEntry {
                        length: here.length + 1,
                        word,
                    },
                );
                queue.push_back(next);
            }
        }
        OrbitMap { points: map }
    }

    /// Consistency suite comparing the closed-form alcove machinery against
    /// the BFS oracle.  Returns counters plus a list of discrepancies; an
    /// empty list means every check agreed.
    pub fn oracle_report(&self, max_len: u64, coset_box_radius: i64) -> OracleReport {
        let mut report = OracleReport::default();
        let orbit = self.bfs_enumerate(max_len);
        report.points = orbit.points.len();

        for g in &self.generators {
            if !self.compose(g, g).is_identity() {
                report.note("a generator is not an involution");
            }
        }

        for (point, entry) in &orbit.points {
            report.checks += 1;
            match self.length_from_point(point) {
                Ok(len) if len == entry.length => {}
                _ => report.note(&format!("length formula disagrees with BFS depth at {}", point)),
            }

            // the alcove gallery of a reduced word visits the prefixes of
            // the word; each step crosses exactly one wall, and each family
            // of parallel hyperplanes is crossed |k(w,α)| times in total
            let mut crossings = vec![0u64; self.rs.positive_roots().len()];
            let mut prev = self.alcove_form(&self.base).expect("base is regular");
            let mut prefix = AffineElement::identity(self.rs.ambient_dim());
            for &j in &entry.word {
                prefix = self.compose(&prefix, &self.generators[j]);
                let q = self.act(&prefix, &self.base);
                let cur = self.alcove_form(&q).expect("orbit points are regular");
                let mut moved = 0u64;
                for (k, (a, b)) in prev.iter().zip(&cur).enumerate() {
                    let d = (b - a).unsigned_abs();
                    crossings[k] += d;
                    moved += d;
                }
                if moved != 1 {
                    report.note("a reduced-word step crossed more than one wall");
                }
                prev = cur;
            }
            let form = self.alcove_form(point).expect("orbit points are regular");
            if self.act(&prefix, &self.base) != *point {
                report.note("reduced word does not reach its point");
            }
            for (k, c) in crossings.iter().enumerate() {
                if *c != form[k].unsigned_abs() {
                    report.note(&format!(
                        "alcove coordinate != crossing count at {} (root #{})",
                        point, k
                    ));
                }
            }

            match self.element_from_point(point) {
                Ok((w, word)) => {
                    if word.len() as u64 != entry.length {
                        report.note("descent walk length differs from BFS depth");
                    }
                    if u64::from(self.parity(&w)) != entry.length % 2 {
                        report.note(&format!("finite-part parity disagrees at {}", point));
                    }
                }
                Err(_) => report.note("descent walk failed on an orbit point"),
            }

            if let Some(lat) = self.orbit_lattice {
                if !self.orbit_contains(lat, point) {
                    report.note(&format!("orbit test rejects the BFS point {}", point));
                }
            }
        }

        // coset scan: the orbit test must agree with BFS reachability inside
        // the ball
        if let Some(lat) = self.orbit_lattice {
            let basis = self.rs.lattice_basis(lat);
            let mut coeffs = vec![-coset_box_radius; basis.len()];
            'outer: loop {
                let mu = coeffs
                    .iter()
                    .zip(&basis)
                    .fold(self.base.clone(), |acc, (&c, b)| &acc + &b.scale_int(c));
                report.coset_points += 1;
                if self.orbit_contains(lat, &mu) {
                    let len = self.length_from_point(&mu).expect("regular by orbit test");
                    match orbit.points.get(&mu) {
                        Some(entry) if entry.length == len => {}
                        Some(_) => report.note("coset point found at the wrong depth"),
                        None if len <= max_len => {
                            report.note(&format!("reachable coset point missed by BFS: {}", mu))
                        }
                        None => {}
                    }
                } else if orbit.points.contains_key(&mu) {
                    report.note("orbit test rejects a reachable point");
                }
                for c in coeffs.iter_mut() {
                    if *c < coset_box_radius {
                        *c += 1;
                        continue 'outer;
                    }
                    *c = -coset_box_radius;
                }
                break;
            }
        }

        // the action is a group action on sample points
        let sample: Vec<&Vector> = orbit.points.keys().take(5).collect();
        for g in &self.generators {
            for h in &self.generators {
                let gh = self.compose(g, h);
                for x in &sample {
                    if self.act(&gh, x) != self.act(g, &self.act(h, x)) {
                        report.note("composition is not compatible with the action");
                    }
                }
            }
        }

        report
    }
}

/// Finds the signed basis vector ±e_j equal to `image` (classical types), or
/// equal to it modulo the sum direction (G₂).
fn resolve_signed_basis(image: &Vector, type_tag: TypeTag) -> i64 {
    let dim = image.dim();
    for j in 0..dim {
        for sign in [1i64, -1] {
            let mut coords: Vec<Rat> = image.coords().to_vec();
            coords[j] -= rat(sign);
            let first = coords[0].clone();
            if coords.iter().all(|c| *c == first) {
                let constant_ok = match type_tag {
                    TypeTag::G => true,
                    _ => first == rat(0),
                };
                if constant_ok {
                    return sign * (j as i64 + 1);
                }
            }
        }
    }
    panic!("reflection image is not a signed basis vector: {}", image);
}

#[derive(Debug, Clone)]
pub struct OrbitEntry {
    pub length: u64,
    /// One reduced word for the element sending the base to this point,
    /// leftmost letter applied last.
    pub word: Vec<usize>,
}

/// Result of [`Context::bfs_enumerate`].
#[derive(Debug)]
pub struct OrbitMap {
    pub points: HashMap<Vector, OrbitEntry>,
}

#[derive(Debug, Default)]
pub struct OracleReport {
    pub points: usize,
    pub coset_points: usize,
    pub checks: usize,
    pub discrepancies: Vec<String>,
}

impl OracleReport {
    fn note(&mut self, msg: &str) {
        self.discrepancies.push(msg.to_string());
    }

    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }
}
