//! Truncated integer power series with exact big-integer coefficients.
//!
//! Just enough polynomial arithmetic for the Euler-product identities:
//! schoolbook truncated convolution and powers by repeated squaring.
//! Exactness over speed; degrees stay in the hundreds at desk scale.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Coefficients of a power series truncated at a fixed degree:
/// `coeffs[k]` is the coefficient of x^k, for k = 0..=N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    pub fn one(truncation_degree: usize) -> Series {
        let mut coeffs = vec![BigInt::zero(); truncation_degree + 1];
        coeffs[0] = BigInt::one();
        Series { coeffs }
    }

    pub fn zero(truncation_degree: usize) -> Series {
        Series {
            coeffs: vec![BigInt::zero(); truncation_degree + 1],
        }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Series {
        assert!(!coeffs.is_empty());
        Series { coeffs }
    }

    pub fn truncation_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add_at(&mut self, k: usize, v: &BigInt) {
        self.coeffs[k] += v;
    }

    /// Truncated product; both factors must share the truncation degree.
    pub fn mul(&self, other: &Series) -> Series {
        assert_eq!(self.truncation_degree(), other.truncation_degree());
        let n = self.truncation_degree();
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Series { coeffs }
    }

    /// In-place multiplication by (1 − x^m).
    fn mul_one_minus_power(&mut self, m: usize) {
        let n = self.truncation_degree();
        if m > n {
            return;
        }
        for k in (m..=n).rev() {
            let lower = self.coeffs[k - m].clone();
            self.coeffs[k] -= lower;
        }
    }

    /// d-th power by repeated squaring on truncated polynomials.
    pub fn pow(&self, d: u64) -> Series {
        let mut result = Series::one(self.truncation_degree());
        let mut base = self.clone();
        let mut e = d;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Index and values of the first coefficient where the two series
    /// differ, if any.
    pub fn first_mismatch(&self, other: &Series) -> Option<(usize, BigInt, BigInt)> {
        assert_eq!(self.truncation_degree(), other.truncation_degree());
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
            .map(|k| (k, self.coeffs[k].clone(), other.coeffs[k].clone()))
    }
}

/// Exact coefficients of (∏_{m=1}^{N} (1 − x^m))^d up to degree N.  Factors
/// with m > N are omitted since they cannot affect degrees ≤ N.
pub fn euler_power(d: u64, truncation_degree: usize) -> Series {
    let mut euler = Series::one(truncation_degree);
    for m in 1..=truncation_degree {
        euler.mul_one_minus_power(m);
    }
    euler.pow(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn euler_power_examples() {
        assert_eq!(euler_power(0, 4).coeffs(), &ints(&[1, 0, 0, 0, 0])[..]);
        // cube of the Euler product: alternating odd numbers on triangular
        // exponents
        assert_eq!(
            euler_power(3, 10).coeffs(),
            &ints(&[1, -3, 0, 5, 0, 0, -7, 0, 0, 0, 9])[..]
        );
        // (1−x)⁸(1−x²)⁸ mod x³
        assert_eq!(euler_power(8, 2).coeffs(), &ints(&[1, -8, 20])[..]);
    }

    #[test]
    fn cube_matches_triangular_number_pattern() {
        let n = 200;
        let series = euler_power(3, n);
        let mut expected = Series::zero(n);
        let mut k = 0i64;
        loop {
            let t = k * (k + 1) / 2;
            if t > n as i64 {
                break;
            }
            let c = BigInt::from(if k % 2 == 0 { 2 * k + 1 } else { -(2 * k + 1) });
            expected.add_at(t as usize, &c);
            k += 1;
        }
        assert_eq!(series, expected);
    }

    proptest! {
        #[test]
        fn power_splits_multiplicatively(d in 1u64..8, n in 1usize..24) {
            let whole = euler_power(d, n);
            let split = euler_power(d - 1, n).mul(&euler_power(1, n));
            prop_assert_eq!(whole, split);
        }

        #[test]
        fn mul_is_commutative(a in proptest::collection::vec(-9i64..9, 6),
                              b in proptest::collection::vec(-9i64..9, 6)) {
            let x = Series::from_coeffs(ints(&a));
            let y = Series::from_coeffs(ints(&b));
            prop_assert_eq!(x.mul(&y), y.mul(&x));
        }
    }
}
