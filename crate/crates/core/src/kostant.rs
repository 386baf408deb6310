//! The set of dominant weights contributing to the dim 𝔤-th power of the
//! Euler product, and coefficient-exact verification of the expansion
//!
//!   (∏_{m≥1} (1−xᵐ))^{dim 𝔤} = Σ_λ sign(λ)·dim V_λ·x^{(λ+2ρ,λ)}.
//!
//! A dominant weight λ contributes iff λ+ρ avoids every hyperplane
//! ⟨x,α⟩ ∈ (c/2)ℤ; we call that set `P_alc`.  For each member the per-type
//! Euclidean division algorithms split μ = λ+ρ into a translation τ ∈ ½Q^∨
//! plus v(ρ) with v in the finite Weyl group, and the sign is read off a
//! permutation built from the division remainders.  All of it is checked at
//! runtime against the generic hyperplane-count formula.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::affine::FiniteElement;
use crate::geometry::{rat, ratio, residue_in, Lattice, Rat, Vector};
use crate::root_system::{BasisOrder, RootSystem, TypeTag};
use crate::series::{euler_power, Series};
use crate::Error;

/// One contributing weight, fully decomposed.
#[derive(Debug, Clone)]
pub struct PalcRecord {
    pub lambda: Vector,
    /// μ = λ + ρ.
    pub mu: Vector,
    /// Translation part, in ½Q^∨.
    pub tau: Vector,
    /// Finite part v with μ = τ + v(ρ).
    pub finite: FiniteElement,
    /// (−1)^{ℓ(v)} ∈ {−1, +1}.
    pub sign: i32,
    /// (λ+2ρ,λ) in the Killing scale; always a nonnegative integer.
    pub exponent: u64,
    /// dim V_λ by the Weyl dimension formula.
    pub dim: BigInt,
}

/// Generic membership test: λ dominant and ⟨λ+ρ,α⟩ ∉ (c/2)ℤ for all
/// positive roots α.
pub fn is_in_palc(rs: &RootSystem, lambda: &Vector) -> Result<bool, Error> {
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant);
    }
    let mu = lambda + rs.rho();
    let half_c = rat(rs.norm_const() / 2);
    Ok(rs
        .positive_roots()
        .iter()
        .all(|alpha| !(mu.dot(alpha) / &half_c).is_integer()))
}

/// Per-type closed-form membership test, evaluating the published
/// congruences directly on coordinates.
pub fn is_in_palc_typed(rs: &RootSystem, lambda: &Vector) -> Result<bool, Error> {
    if rs.order != BasisOrder::Bourbaki {
        return Err(Error::Unsupported(rs.type_tag, rs.rank));
    }
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant);
    }
    let n = rs.rank as i64;
    let ints = |v: &Vector| -> Option<Vec<BigInt>> {
        v.is_integral()
            .then(|| v.coords().iter().map(|c| c.to_integer()).collect())
    };
    let distinct_mod = |vals: &[BigInt], m: i64| {
        let r: Vec<i64> = vals.iter().map(|v| residue_in(v, m, 0)).collect();
        (0..r.len()).all(|i| (i + 1..r.len()).all(|j| r[i] != r[j]))
    };
    Ok(match rs.type_tag {
        TypeTag::A => {
            let bar = rs.bar_map_a(lambda)?;
            let bar = ints(&bar).expect("bar coordinates of a weight are integral");
            // λᵢ + n − i + 1 pairwise distinct mod n+1, over i = 1..n+1
            let vals: Vec<BigInt> = bar
                .iter()
                .enumerate()
                .map(|(k, c)| c + BigInt::from(n - k as i64))
                .collect();
            let in_root_lattice = (bar.iter().sum::<BigInt>() % (n + 1)).is_zero();
            in_root_lattice && distinct_mod(&vals, n + 1)
        }
        TypeTag::C => {
            let c = ints(lambda).expect("type C weights are integral");
            let vals: Vec<BigInt> = c
                .iter()
                .enumerate()
                .map(|(k, x)| x + BigInt::from(n - k as i64))
                .collect();
            vals.iter().all(|v| !(v % (n + 1)).is_zero())
                && plus_minus_distinct(&vals, 2 * (n + 1))
        }
        TypeTag::B => match ints(lambda) {
            None => false, // λᵢ ∈ ℤ is part of the published condition
            Some(c) => {
                let vals: Vec<BigInt> = c
                    .iter()
                    .enumerate()
                    .map(|(k, x)| BigInt::from(2) * (x + BigInt::from(n - 1 - k as i64)) + 1)
                    .collect();
                plus_minus_distinct(&vals, 2 * (2 * n - 1))
            }
        },
        TypeTag::D => match ints(lambda) {
            None => false,
            Some(c) => {
                let even_sum = (c.iter().sum::<BigInt>() % 2i32).is_zero();
                let vals: Vec<BigInt> = c
                    .iter()
                    .enumerate()
                    .map(|(k, x)| x + BigInt::from(n - 1 - k as i64))
                    .collect();
                even_sum && plus_minus_distinct(&vals, 2 * n - 2)
            }
        },
        TypeTag::G => {
            let c = ints(lambda).expect("G₂ weights are integral");
            let eps = rs.epsilon().expect("G₂ carries the sign sequence");
            let mu: Vec<BigInt> = (0..3)
                .map(|k| &c[k] + BigInt::from(eps[k] * (k as i64 + 1)))
                .collect();
            let f1 = distinct_mod(&mu, 12);
            let f2 = (0..3).all(|i| {
                let (j, k) = ((i + 1) % 3, (i + 2) % 3);
                !((BigInt::from(2) * &mu[i] - &mu[j] - &mu[k]) % 12i32).is_zero()
            });
            f1 && f2
        }
    })
}

/// vᵢ ≢ ±vⱼ (mod m) for all i ≠ j.
fn plus_minus_distinct(vals: &[BigInt], m: i64) -> bool {
    let r: Vec<i64> = vals.iter().map(|v| residue_in(v, m, 0)).collect();
    (0..r.len()).all(|i| {
        (i + 1..r.len()).all(|j| r[i] != r[j] && (r[i] + r[j]) % m != 0)
    })
}

struct Decomposition {
    tau: Vector,
    finite: FiniteElement,
    typed_sign: i32,
}

/// Per-type Euclidean division of μ = λ+ρ into τ ∈ ½Q^∨ and v(ρ), v ∈ W.
///
/// Rejects any μ whose residue pattern violates the type's case analysis
/// (equivalently: μ is not in the ½-scale orbit of ρ).
pub fn decompose_mu(rs: &RootSystem, mu: &Vector) -> Result<(Vector, FiniteElement), Error> {
    let d = decompose_inner(rs, mu)?;
    Ok((d.tau, d.finite))
}

fn decompose_inner(rs: &RootSystem, mu: &Vector) -> Result<Decomposition, Error> {
    if rs.order != BasisOrder::Bourbaki {
        return Err(Error::Unsupported(rs.type_tag, rs.rank));
    }
    assert_eq!(mu.dim(), rs.ambient_dim());
    let d = match rs.type_tag {
        TypeTag::A => decompose_a(rs, mu)?,
        TypeTag::C => decompose_c(rs, mu)?,
        TypeTag::B => decompose_b(rs, mu)?,
        TypeTag::D => decompose_d(rs, mu)?,
        TypeTag::G => decompose_g(rs, mu)?,
    };
    // τ must land in ½Q^∨ = (c/2)·Q*; a failure here means μ was not an
    // orbit point after all
    if !rs.lattice_contains(Lattice::ScaledCoroot(rs.norm_const() / 2), &d.tau) {
        return Err(Error::NotInOrbit);
    }
    assert_eq!(
        &d.tau + &d.finite.apply(rs.rho()),
        *mu,
        "decomposition does not reassemble"
    );
    Ok(d)
}

/// Type A: divide λᵢ + (n−i+1) − (Σλⱼ)/(n+1) by n+1 with remainders n−rᵢ+1;
/// the rᵢ are a permutation of 1..n+1 and the sign is its parity.
fn decompose_a(rs: &RootSystem, mu: &Vector) -> Result<Decomposition, Error> {
    let dim = rs.ambient_dim();
    let np1 = dim as i64;
    let n = np1 - 1;
    let lambda_bar = rs.bar_map_a(&(mu - rs.rho()))?;
    if !lambda_bar.is_integral() {
        return Err(Error::NotInOrbit);
    }
    let lam: Vec<BigInt> = lambda_bar.coords().iter().map(|c| c.to_integer()).collect();
    let total: BigInt = lam.iter().sum();
    if !(&total % np1).is_zero() {
        return Err(Error::NotInOrbit);
    }
    let shift = &total / np1;
    let mut r = vec![0i64; dim];
    let mut q = vec![BigInt::zero(); dim];
    for i in 1..=dim {
        let m_i = &lam[i - 1] + BigInt::from(n - i as i64 + 1) - &shift;
        // n − rᵢ + 1 ≡ m_i, rᵢ ∈ {1, …, n+1}
        let r_i = residue_in(&(BigInt::from(n + 1) - &m_i), np1, 0);
        q[i - 1] = (m_i - BigInt::from(n - r_i + 1)) / np1;
        r[i - 1] = r_i;
    }
    let mut seen = vec![false; dim];
    for &r_i in &r {
        if seen[r_i as usize - 1] {
            return Err(Error::NotInOrbit);
        }
        seen[r_i as usize - 1] = true;
    }
    let tau = Vector::new(q.iter().map(|qi| Rat::from_integer(qi * BigInt::from(np1))).collect());
    // v(eᵢ) = e_{σ⁻¹(i)} for σ(i) = rᵢ
    let mut targets = vec![0i64; dim];
    for (j, &r_j) in r.iter().enumerate() {
        targets[r_j as usize - 1] = j as i64 + 1;
    }
    Ok(Decomposition {
        tau,
        finite: FiniteElement::from_targets(targets)?,
        typed_sign: parity_sign(&r),
    })
}

/// Type C: reduce each coordinate into {±1,…,±n} mod 2(n+1).
fn decompose_c(rs: &RootSystem, mu: &Vector) -> Result<Decomposition, Error> {
    let n = rs.rank as i64;
    if !mu.is_integral() {
        return Err(Error::NotInOrbit);
    }
    let coords: Vec<BigInt> = mu.coords().iter().map(|c| c.to_integer()).collect();
    let mut rem = Vec::with_capacity(coords.len());
    for c in &coords {
        let r = residue_in(c, 2 * (n + 1), -(n + 1));
        if r == 0 || r == n + 1 {
            return Err(Error::NotInOrbit);
        }
        rem.push(r);
    }
    signed_remainder_decomposition(rs, mu, rem, true)
}

/// Type B: numerators reduce into {±1,±3,…,±(2n−3)} ∪ {2n−1} mod 2(2n−1),
/// with the remainder 2n−1 flipped to −(2n−1) when the quotient sum is odd.
fn decompose_b(rs: &RootSystem, mu: &Vector) -> Result<Decomposition, Error> {
    let n = rs.rank as i64;
    let doubled = mu.scale_int(2);
    if !doubled.is_integral() {
        return Err(Error::NotInOrbit);
    }
    let nums: Vec<BigInt> = doubled.coords().iter().map(|c| c.to_integer()).collect();
    if nums.iter().any(|x| (x % 2i32).is_zero()) {
        return Err(Error::NotInOrbit);
    }
    let h = 2 * n - 1;
    let mut rem: Vec<i64> = nums.iter().map(|x| residue_in(x, 2 * h, -h)).collect();
    flip_top_remainder(&mut rem, &nums, 2 * h, h)?;
    signed_remainder_decomposition(rs, mu, rem, true)
}

/// Type D: coordinates reduce into {±1,…,±(n−2)} ∪ {0, n−1} mod 2n−2, with
/// the remainder n−1 flipped to −(n−1) when the quotient sum is odd.
fn decompose_d(rs: &RootSystem, mu: &Vector) -> Result<Decomposition, Error> {
    let n = rs.rank as i64;
    if !mu.is_integral() {
        return Err(Error::NotInOrbit);
    }
    let coords: Vec<BigInt> = mu.coords().iter().map(|c| c.to_integer()).collect();
    let h = n - 1;
    let mut rem: Vec<i64> = coords.iter().map(|x| residue_in(x, 2 * h, -h)).collect();
    flip_top_remainder(&mut rem, &coords, 2 * h, h)?;
    signed_remainder_decomposition(rs, mu, rem, false)
}

/// When Σ quotients is odd, replace the unique remainder equal to `top` by
/// its negative; this is what keeps τ inside ½Q^∨ for types B and D.
fn flip_top_remainder(rem: &mut [i64], nums: &[BigInt], modulus: i64, top: i64) -> Result<(), Error> {
    let mut quotient_sum = BigInt::zero();
    for (r, x) in rem.iter().zip(nums) {
        quotient_sum += (x - BigInt::from(*r)) / modulus;
    }
    if ((&quotient_sum) % 2i32).is_zero() {
        return Ok(());
    }
    let hits: Vec<usize> = rem
        .iter()
        .enumerate()
        .filter(|&(_, &r)| r == top)
        .map(|(i, _)| i)
        .collect();
    if hits.len() != 1 {
        return Err(Error::NotInOrbit);
    }
    rem[hits[0]] = -top;
    Ok(())
}

/// Shared tail for the signed-permutation types: μ̄ is the remainder vector
/// (halved for B, whose coordinates are half-odd-integers), v is read off
/// |μ̄| against the decreasing entries of ρ, and the sign is the parity of
/// the reversed absolute remainder sequence, times (−1)^{#negatives} for the
/// types whose Weyl group flips single signs.
fn signed_remainder_decomposition(
    rs: &RootSystem,
    mu: &Vector,
    rem: Vec<i64>,
    count_sign_changes: bool,
) -> Result<Decomposition, Error> {
    let n = rs.rank;
    let halved = rs.type_tag == TypeTag::B;
    let rho = rs.rho();
    let mut targets = vec![0i64; n];
    let mut filled = vec![false; n];
    let mut zero_column = None;
    for (i, &r) in rem.iter().enumerate() {
        let abs = if halved { ratio(r.abs(), 2) } else { rat(r.abs()) };
        let j = match (1..=n).find(|&j| *rho.coord(j) == abs) {
            Some(j) => j,
            None => return Err(Error::NotInOrbit),
        };
        if filled[j - 1] {
            return Err(Error::NotInOrbit);
        }
        filled[j - 1] = true;
        targets[j - 1] = if r < 0 { -(i as i64 + 1) } else { i as i64 + 1 };
        if r == 0 {
            zero_column = Some(j - 1);
        }
    }
    // D only: the zero coordinate of ρ hides one sign of v; pin it so that
    // the total number of sign changes is even
    if !count_sign_changes {
        let negatives = targets.iter().filter(|t| t.is_negative()).count();
        if negatives % 2 == 1 {
            let k = zero_column.ok_or(Error::NotInOrbit)?;
            targets[k] = -targets[k];
        }
    }
    let finite = FiniteElement::from_targets(targets)?;
    let rem_vec = Vector::new(
        rem.iter()
            .map(|&r| if halved { ratio(r, 2) } else { rat(r) })
            .collect(),
    );
    let tau = mu - &rem_vec;
    let reversed_abs: Vec<i64> = rem.iter().rev().map(|r| r.abs()).collect();
    let mut sign = parity_sign(&reversed_abs);
    if count_sign_changes && rem.iter().filter(|r| r.is_negative()).count() % 2 == 1 {
        sign = -sign;
    }
    Ok(Decomposition {
        tau,
        finite,
        typed_sign: sign,
    })
}

/// G₂: the coordinates of μ split by the Chinese remainder theorem into
/// residues mod 3 and mod 4; the mod-4 pattern must be {1,1,2} or {3,3,2},
/// and a four-row table picks division remainders (r₁,r₂,r₃) forming
/// ±{1,2,−3} so that the quotients all agree mod 3.
fn decompose_g(rs: &RootSystem, mu: &Vector) -> Result<Decomposition, Error> {
    if !mu.is_integral() || !mu.coord_sum().is_zero() {
        return Err(Error::NotInOrbit);
    }
    let coords: Vec<BigInt> = mu.coords().iter().map(|c| c.to_integer()).collect();
    // residues ([μᵢ]₃, [μᵢ]₄) via the Chinese remainder splitting of ℤ/12
    let mod4: Vec<i64> = coords.iter().map(|c| residue_in(c, 4, -1)).collect();
    let mod3: Vec<i64> = coords.iter().map(|c| residue_in(c, 3, -1)).collect();
    let twos: Vec<usize> = (0..3).filter(|&k| mod4[k] == 2).collect();
    if twos.len() != 1 {
        return Err(Error::NotInOrbit);
    }
    let k_star = twos[0];
    let pair: Vec<usize> = (0..3).filter(|&k| k != k_star).collect();
    let (i_star, j_star) = (pair[0], pair[1]);
    let x = match (mod4[i_star], mod4[j_star]) {
        (1, 1) => 1,
        (3, 3) => 2,
        _ => return Err(Error::NotInOrbit),
    };
    let (a, b) = (mod3[i_star], mod3[j_star]);
    if a == b {
        return Err(Error::NotInOrbit);
    }
    let diff = (a - b).rem_euclid(3);
    let (r_i, r_j, r_k) = match (x, diff) {
        (1, 1) => (1, -3, 2),
        (1, 2) => (-3, 1, 2),
        (2, 1) => (3, -1, -2),
        (2, 2) => (-1, 3, -2),
        _ => unreachable!(),
    };
    let mut rem = [0i64; 3];
    rem[i_star] = r_i;
    rem[j_star] = r_j;
    rem[k_star] = r_k;
    let rem_vec = Vector::from_ints(&rem);
    let tau = mu - &rem_vec;
    // v⁻¹(eᵢ) = ε_{|rᵢ|}·e_{rᵢ} modulo the sum direction
    let eps = rs.epsilon().expect("G₂ carries the sign sequence");
    let inv_targets: Vec<i64> = rem.iter().map(|&r| eps[r.unsigned_abs() as usize - 1] * r).collect();
    let finite = FiniteElement::from_targets(inv_targets)?.inverse();
    let abs: Vec<i64> = rem.iter().map(|r| r.abs()).collect();
    Ok(Decomposition {
        tau,
        finite,
        typed_sign: parity_sign(&abs),
    })
}

/// Sign of a sequence of distinct values as a permutation (inversion count).
fn parity_sign(seq: &[i64]) -> i32 {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in (i + 1)..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sign of λ's contribution via the type's remainder-permutation rule.
/// Checked on every call against the generic hyperplane-count formula.
pub fn kostant_sign(rs: &RootSystem, lambda: &Vector) -> Result<i32, Error> {
    if !is_in_palc(rs, lambda)? {
        return Err(Error::NotInOrbit);
    }
    let mu = lambda + rs.rho();
    let d = decompose_inner(rs, &mu)?;
    let generic = kostant_sign_generic(rs, lambda)?;
    assert_eq!(
        d.typed_sign, generic,
        "typed and generic sign rules disagree at λ = {}",
        lambda
    );
    Ok(d.typed_sign)
}

/// (−1)^{Σ_{α>0} ⌊⟨λ+ρ,α⟩·2/c⌋}: the separating-hyperplane count mod 2.
pub fn kostant_sign_generic(rs: &RootSystem, lambda: &Vector) -> Result<i32, Error> {
    if !is_in_palc(rs, lambda)? {
        return Err(Error::NotInOrbit);
    }
    let mu = lambda + rs.rho();
    let half_c = rat(rs.norm_const() / 2);
    let total: BigInt = rs
        .positive_roots()
        .iter()
        .map(|alpha| (mu.dot(alpha) / &half_c).floor().to_integer())
        .sum();
    Ok(if (total % 2i32).is_zero() { 1 } else { -1 })
}

/// dim V_λ = ∏_{α>0} ⟨λ+ρ,α⟩ / ⟨ρ,α⟩, exactly.
pub fn weyl_dim(rs: &RootSystem, lambda: &Vector) -> Result<BigInt, Error> {
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant);
    }
    let mu = lambda + rs.rho();
    let mut product = Rat::one();
    for alpha in rs.positive_roots() {
        product *= mu.dot(alpha) / rs.rho().dot(alpha);
    }
    assert!(product.is_integer() && product.is_positive(), "Weyl dimension must be a positive integer");
    Ok(product.to_integer())
}

/// Exponent (λ+2ρ,λ) in the Killing scale, as an integer.  Callers must
/// pass λ ∈ P_alc; a non-integral value aborts, since it would mean the
/// normalization constant is wrong.
pub fn exponent(rs: &RootSystem, lambda: &Vector) -> u64 {
    let x = exponent_rat(rs, lambda);
    assert!(
        x.is_integer() && !x.is_negative(),
        "exponent (λ+2ρ,λ) = {} is not a nonnegative integer — normalization bug",
        x
    );
    u64::try_from(&x.to_integer()).expect("exponent fits in u64")
}

fn exponent_rat(rs: &RootSystem, lambda: &Vector) -> Rat {
    let shifted = lambda + &rs.rho().scale_int(2);
    rs.dot_killing(&shifted, lambda)
}

/// All dominant weights with (λ+2ρ,λ) ≤ max_exponent, enumerated from a
/// rectangular box of fundamental-weight coefficients.  The box is valid
/// because (λ,λ) ≥ aᵢ²(ωᵢ,ωᵢ) when all aᵢ ≥ 0 and the fundamental weights
/// have pairwise nonnegative products.
pub fn enumerate_dominant(rs: &RootSystem, max_exponent: u64) -> Vec<Vector> {
    let omegas = rs.fundamental_weights();
    let norm_bound = rat(max_exponent as i64) * rat(rs.norm_const());
    let bounds: Vec<i64> = omegas
        .iter()
        .map(|w| {
            let norm = w.dot(w);
            let mut a = 0i64;
            while rat(a + 1) * rat(a + 1) * &norm <= norm_bound {
                a += 1;
            }
            a
        })
        .collect();
    let mut out = Vec::new();
    let mut coeffs = vec![0i64; omegas.len()];
    'outer: loop {
        let lambda = coeffs
            .iter()
            .zip(omegas)
            .fold(Vector::zero(rs.ambient_dim()), |acc, (&a, w)| {
                &acc + &w.scale_int(a)
            });
        if exponent_rat(rs, &lambda) <= rat(max_exponent as i64) {
            out.push(lambda);
        }
        for k in (0..coeffs.len()).rev() {
            if coeffs[k] < bounds[k] {
                coeffs[k] += 1;
                continue 'outer;
            }
            coeffs[k] = 0;
        }
        break;
    }
    out
}

/// Exactly the λ ∈ P_alc with exponent ≤ max_exponent, each with its full
/// decomposition, sorted by exponent.
pub fn enumerate_palc(rs: &RootSystem, max_exponent: u64) -> Vec<PalcRecord> {
    let mut records = Vec::new();
    for lambda in enumerate_dominant(rs, max_exponent) {
        if !is_in_palc(rs, &lambda).expect("enumerated weights are dominant") {
            continue;
        }
        // membership puts λ in the root lattice
        assert!(rs.lattice_contains(Lattice::Root, &lambda));
        let mu = &lambda + rs.rho();
        let d = decompose_inner(rs, &mu).expect("members decompose");
        let generic = kostant_sign_generic(rs, &lambda).expect("members have a sign");
        assert_eq!(d.typed_sign, generic, "sign rules disagree at λ = {}", lambda);
        let dim = weyl_dim(rs, &lambda).expect("members are dominant");
        records.push(PalcRecord {
            exponent: exponent(rs, &lambda),
            lambda,
            mu,
            tau: d.tau,
            finite: d.finite,
            sign: d.typed_sign,
            dim,
        });
    }
    records.sort_by_key(|r| (r.exponent, r.lambda.clone()));
    records
}

/// Σ sign·dim·x^{exponent} over P_alc, truncated at the given degree.
pub fn kostant_series(rs: &RootSystem, truncation_degree: usize) -> Series {
    let mut series = Series::zero(truncation_degree);
    for record in enumerate_palc(rs, truncation_degree as u64) {
        series.add_at(
            record.exponent as usize,
            &(BigInt::from(record.sign) * &record.dim),
        );
    }
    series
}

/// Outcome of comparing the two sides of the expansion coefficientwise.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub algebra_dim: usize,
    pub truncation_degree: usize,
    pub euler_side: Series,
    pub orbit_side: Series,
    pub first_mismatch: Option<(usize, BigInt, BigInt)>,
}

impl IdentityReport {
    pub fn is_equal(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Computes both sides independently — the Euler product by truncated
/// polynomial arithmetic, the expansion by orbit enumeration — and reports
/// the first mismatching coefficient, if any.
pub fn verify_identity(rs: &RootSystem, truncation_degree: usize) -> IdentityReport {
    let lhs = euler_power(rs.algebra_dim() as u64, truncation_degree);
    let rhs = kostant_series(rs, truncation_degree);
    IdentityReport {
        algebra_dim: rs.algebra_dim(),
        truncation_degree,
        first_mismatch: lhs.first_mismatch(&rhs),
        euler_side: lhs,
        orbit_side: rhs,
    }
}
