//! Report builders and machine-readable output records for the `alcove`
//! binary.  Coordinates are emitted as exact fraction strings ("3/2", "-1"),
//! never as decimals, and JSON output round-trips through these structs.

use serde::{Deserialize, Serialize};

use alcove::affine::Context;
use alcove::kostant::{self, enumerate_palc, verify_identity};
use alcove::zperm::Family;
use alcove::{Lattice, RootSystem, TypeTag, Vector};

pub fn parse_type(token: &str) -> Option<TypeTag> {
    match token.to_ascii_lowercase().as_str() {
        "a" => Some(TypeTag::A),
        "b" => Some(TypeTag::B),
        "c" => Some(TypeTag::C),
        "d" => Some(TypeTag::D),
        "g" | "g2" => Some(TypeTag::G),
        _ => None,
    }
}

pub fn parse_family(token: &str) -> Option<Family> {
    Family::parse(token)
}

fn fractions(v: &Vector) -> Vec<String> {
    v.coords().iter().map(|c| c.to_string()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientRow {
    pub degree: usize,
    pub euler: String,
    pub expansion: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerReport {
    pub r#type: String,
    pub rank: usize,
    pub algebra_dim: usize,
    pub degree: usize,
    pub equal: bool,
    pub first_mismatch: Option<CoefficientRow>,
    pub coefficients: Vec<CoefficientRow>,
}

pub fn euler_report(rs: &RootSystem, degree: usize) -> EulerReport {
    let outcome = verify_identity(rs, degree);
    let coefficients = (0..=degree)
        .map(|k| CoefficientRow {
            degree: k,
            euler: outcome.euler_side.coeff(k).to_string(),
            expansion: outcome.orbit_side.coeff(k).to_string(),
        })
        .collect();
    EulerReport {
        r#type: rs.type_tag.letter().to_string(),
        rank: rs.rank,
        algebra_dim: outcome.algebra_dim,
        degree,
        equal: outcome.is_equal(),
        first_mismatch: outcome.first_mismatch.map(|(k, lhs, rhs)| CoefficientRow {
            degree: k,
            euler: lhs.to_string(),
            expansion: rhs.to_string(),
        }),
        coefficients,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PalcRow {
    pub lambda: Vec<String>,
    pub exponent: u64,
    pub sign: i32,
    pub dim: String,
    pub tau: Vec<String>,
    /// Signed target table of the finite part: entry i is ±j for
    /// v(e_i) = ±e_j.
    pub finite: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PalcTable {
    pub r#type: String,
    pub rank: usize,
    pub max_exponent: u64,
    pub rows: Vec<PalcRow>,
}

pub fn palc_table(rs: &RootSystem, max_exponent: u64) -> PalcTable {
    let rows = enumerate_palc(rs, max_exponent)
        .into_iter()
        .map(|r| PalcRow {
            lambda: fractions(&r.lambda),
            exponent: r.exponent,
            sign: r.sign,
            dim: r.dim.to_string(),
            tau: fractions(&r.tau),
            finite: r.finite.targets().to_vec(),
        })
        .collect();
    PalcTable {
        r#type: rs.type_tag.letter().to_string(),
        rank: rs.rank,
        max_exponent,
        rows,
    }
}

/// Re-derives every row from scratch and checks it: membership under both
/// tests, the reassembly μ = τ + v(ρ), and the translation lattice.
/// Returns the number of rows checked.
pub fn palc_self_check(rs: &RootSystem, max_exponent: u64) -> Result<usize, String> {
    let records = enumerate_palc(rs, max_exponent);
    for r in &records {
        let generic = kostant::is_in_palc(rs, &r.lambda).map_err(|e| e.to_string())?;
        let typed = kostant::is_in_palc_typed(rs, &r.lambda).map_err(|e| e.to_string())?;
        if !generic || !typed {
            return Err(format!("membership self-check failed at λ = {}", r.lambda));
        }
        if &r.tau + &r.finite.apply(rs.rho()) != r.mu {
            return Err(format!("μ ≠ τ + v(ρ) at λ = {}", r.lambda));
        }
        if !rs.lattice_contains(Lattice::ScaledCoroot(rs.norm_const() / 2), &r.tau) {
            return Err(format!("τ outside ½Q^∨ at λ = {}", r.lambda));
        }
        let sign = kostant::kostant_sign(rs, &r.lambda).map_err(|e| e.to_string())?;
        if sign != r.sign {
            return Err(format!("sign self-check failed at λ = {}", r.lambda));
        }
    }
    Ok(records.len())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleOutcome {
    pub r#type: String,
    pub rank: usize,
    pub max_len: u64,
    pub orbit_points: usize,
    pub coset_points: usize,
    pub random_words: usize,
    pub discrepancies: Vec<String>,
}

/// Runs the BFS consistency suite plus seeded random-word parity checks.
pub fn oracle_outcome(
    ctx: &Context,
    max_len: u64,
    words: &[Vec<usize>],
) -> OracleOutcome {
    let report = ctx.oracle_report(max_len, 2);
    let mut discrepancies = report.discrepancies;
    for word in words {
        let w = ctx.word_element(word);
        let point = ctx.act(&w, ctx.base());
        let len = ctx
            .length_from_point(&point)
            .expect("orbit points are regular");
        if u64::from(ctx.parity(&w)) != len % 2 {
            discrepancies.push(format!("parity mismatch on word {:?}", word));
        }
    }
    OracleOutcome {
        r#type: ctx.rs().type_tag.letter().to_string(),
        rank: ctx.rs().rank,
        max_len,
        orbit_points: report.points,
        coset_points: report.coset_points,
        random_words: words.len(),
        discrepancies,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alcove::BasisOrder;

    #[test]
    fn json_roundtrip() {
        let rs = RootSystem::build(TypeTag::A, 2, BasisOrder::Bourbaki).unwrap();
        let report = euler_report(&rs, 4);
        let text = serde_json::to_string(&report).unwrap();
        let back: EulerReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);

        let table = palc_table(&rs, 6);
        let text = serde_json::to_string(&table).unwrap();
        let back: PalcTable = serde_json::from_str(&text).unwrap();
        assert_eq!(back, table);
    }

    #[test]
    fn self_check_counts_rows() {
        let rs = RootSystem::build(TypeTag::C, 2, BasisOrder::Bourbaki).unwrap();
        let n = palc_self_check(&rs, 5).unwrap();
        assert_eq!(n, palc_table(&rs, 5).rows.len());
    }
}
