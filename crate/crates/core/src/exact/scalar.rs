use num_bigint::BigInt;
use num_rational::BigRational;

use super::ExactError;

/// Arbitrary-precision rational; num-rational keeps it gcd-reduced with a
/// positive denominator.
pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

/// Accepts `n`, `-n`, `p/q`.
pub fn parse_q(s: &str) -> Result<Q, ExactError> {
    let bad = || ExactError::BadRational(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}
