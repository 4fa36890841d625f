//! Arbitrary-precision rational scalars and their JSON form.
//!
//! All coefficients in the crate are [`Q`] values. Reports serialize
//! rationals as `{num, den}` decimal strings so no precision is lost and the
//! byte output is independent of the host.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub type Q = BigRational;

/// Rational from an integer.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Rational from numerator and denominator.
pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn is_zero(x: &Q) -> bool {
    x.is_zero()
}

/// Exact `{num, den}` string pair, the wire form of a rational.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QJson {
    pub num: String,
    pub den: String,
}

impl From<&Q> for QJson {
    fn from(x: &Q) -> Self {
        QJson {
            num: x.numer().to_string(),
            den: x.denom().to_string(),
        }
    }
}

impl QJson {
    pub fn to_q(&self) -> Option<Q> {
        let num: BigInt = self.num.parse().ok()?;
        let den: BigInt = self.den.parse().ok()?;
        if den.is_zero() {
            return None;
        }
        Some(Q::new(num, den))
    }
}

/// Renders a rational as `p` or `p/q` for human-readable output.
pub fn q_display(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Random rational point with integer entries in [-10, 10]. All sampling in
/// the crate goes through a caller-supplied seeded generator so reports are
/// reproducible.
pub fn random_point(rng: &mut impl rand::Rng, len: usize) -> Vec<Q> {
    (0..len).map(|_| qi(rng.gen_range(-10..=10))).collect()
}

/// Random point that is not the zero vector.
pub fn random_nonzero_point(rng: &mut impl rand::Rng, len: usize) -> Vec<Q> {
    loop {
        let v = random_point(rng, len);
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip() {
        let x = q(-22, 7);
        let j = QJson::from(&x);
        assert_eq!(j.num, "-22");
        assert_eq!(j.den, "7");
        assert_eq!(j.to_q().unwrap(), x);
    }

    #[test]
    fn display_integers_without_denominator() {
        assert_eq!(q_display(&qi(5)), "5");
        assert_eq!(q_display(&q(1, 3)), "1/3");
    }
}
