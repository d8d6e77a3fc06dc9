//! Coefficient fields: the rationals and prime fields `Z/p`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Default prime for modular computations.
pub const DEFAULT_PRIME: u64 = 32003;

/// Prime moduli must stay below this bound so products fit in a `u64`.
const MAX_PRIME: u64 = 1 << 31;

/// Which field the coefficients live in.
///
/// Textual form (CLI flag and JSON tag): `q` for the rationals, `zp:<p>` for
/// the prime field of order `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rationals,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if p >= MAX_PRIME {
            return Err(Error::InvalidField(format!("prime {p} is too large (limit 2^31)")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> FieldScalar {
        self.from_i64(0)
    }

    pub fn one(self) -> FieldScalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> FieldScalar {
        match self {
            Field::Rationals => FieldScalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => FieldScalar::Residue {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// `(-1)^k` in this field.
    pub fn sign(self, k: usize) -> FieldScalar {
        self.from_i64(if k.is_multiple_of(2) { 1 } else { -1 })
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => f.write_str("q"),
            Field::Prime(p) => write!(f, "zp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "q" | "Q" => Ok(Field::Rationals),
            _ => {
                let p = s
                    .strip_prefix("zp:")
                    .ok_or_else(|| Error::InvalidField(format!("`{s}` (expected `q` or `zp:<prime>`)")))?;
                let p: u64 = p
                    .parse()
                    .map_err(|_| Error::InvalidField(format!("`{s}`: bad prime")))?;
                Field::prime(p)
            }
        }
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element. Rationals are kept reduced with positive
/// denominator (guaranteed by `BigRational`); residues lie in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldScalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl FieldScalar {
    pub fn field(&self) -> Field {
        match self {
            FieldScalar::Rational(_) => Field::Rationals,
            FieldScalar::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldScalar::Rational(r) => r.is_zero(),
            FieldScalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldScalar::Rational(r) => r.is_one(),
            FieldScalar::Residue { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<FieldScalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            FieldScalar::Rational(r) => FieldScalar::Rational(r.recip()),
            FieldScalar::Residue { value, modulus } => FieldScalar::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn div(&self, other: &FieldScalar) -> Option<FieldScalar> {
        other.inv().map(|inv| self * &inv)
    }

    fn check_same(&self, other: &FieldScalar) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(
                self.field().to_string(),
                other.field().to_string(),
            ));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &FieldScalar) -> Result<FieldScalar> {
        self.check_same(other)?;
        Ok(self + other)
    }

    pub fn checked_mul(&self, other: &FieldScalar) -> Result<FieldScalar> {
        self.check_same(other)?;
        Ok(self * other)
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldScalar::Rational(r) => write!(f, "{r}"),
            FieldScalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

// Arithmetic operators panic on mixed fields; validated entry points
// (`checked_*`, `linalg::rank`) report `Error::FieldMismatch` instead.

impl Add for &FieldScalar {
    type Output = FieldScalar;

    fn add(self, rhs: &FieldScalar) -> FieldScalar {
        match (self, rhs) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => FieldScalar::Rational(a + b),
            (
                FieldScalar::Residue { value: a, modulus: p },
                FieldScalar::Residue { value: b, modulus: p2 },
            ) if p == p2 => FieldScalar::Residue {
                value: (a + b) % p,
                modulus: *p,
            },
            _ => panic!("field mismatch: {} + {}", self.field(), rhs.field()),
        }
    }
}

impl Sub for &FieldScalar {
    type Output = FieldScalar;

    fn sub(self, rhs: &FieldScalar) -> FieldScalar {
        self + &(-rhs)
    }
}

impl Mul for &FieldScalar {
    type Output = FieldScalar;

    fn mul(self, rhs: &FieldScalar) -> FieldScalar {
        match (self, rhs) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => FieldScalar::Rational(a * b),
            (
                FieldScalar::Residue { value: a, modulus: p },
                FieldScalar::Residue { value: b, modulus: p2 },
            ) if p == p2 => FieldScalar::Residue {
                value: a * b % p,
                modulus: *p,
            },
            _ => panic!("field mismatch: {} * {}", self.field(), rhs.field()),
        }
    }
}

impl Neg for &FieldScalar {
    type Output = FieldScalar;

    fn neg(self) -> FieldScalar {
        match self {
            FieldScalar::Rational(a) => FieldScalar::Rational(-a),
            FieldScalar::Residue { value, modulus } => FieldScalar::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl FieldScalar {
    /// Numerator and denominator of a rational; `None` for residues.
    pub fn as_fraction(&self) -> Option<(&BigInt, &BigInt)> {
        match self {
            FieldScalar::Rational(r) => Some((r.numer(), r.denom())),
            FieldScalar::Residue { .. } => None,
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, FieldScalar::Rational(r) if r.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_and_display() {
        assert_eq!("q".parse::<Field>().unwrap(), Field::Rationals);
        assert_eq!("zp:32003".parse::<Field>().unwrap(), Field::Prime(32003));
        assert_eq!("zp:2".parse::<Field>().unwrap(), Field::Prime(2));
        assert!("zp:32004".parse::<Field>().is_err());
        assert!("zp:1".parse::<Field>().is_err());
        assert!("zp:x".parse::<Field>().is_err());
        assert!("r".parse::<Field>().is_err());
        assert_eq!(Field::Prime(7).to_string(), "zp:7");
        assert_eq!(Field::Rationals.to_string(), "q");
        assert_eq!(serde_json::to_string(&Field::Prime(5)).unwrap(), "\"zp:5\"");
    }

    #[test]
    fn canonical_forms() {
        let f = Field::Prime(7);
        assert_eq!(f.from_i64(-1), FieldScalar::Residue { value: 6, modulus: 7 });
        assert_eq!(f.from_i64(15), FieldScalar::Residue { value: 1, modulus: 7 });
        let q = Field::Rationals;
        let half = q.one().div(&q.from_i64(-2)).unwrap();
        let (num, den) = half.as_fraction().unwrap();
        assert_eq!((num.clone(), den.clone()), (BigInt::from(-1), BigInt::from(2)));
        assert!(half.is_negative());
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let a = Field::Rationals.one();
        let b = Field::Prime(5).one();
        assert!(matches!(a.checked_add(&b), Err(Error::FieldMismatch(..))));
        assert!(matches!(a.checked_mul(&b), Err(Error::FieldMismatch(..))));
        assert!(Field::Prime(5).one().checked_mul(&Field::Prime(7).one()).is_err());
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(Field::Rationals.zero().inv().is_none());
        assert!(Field::Prime(3).zero().inv().is_none());
    }

    proptest! {
        #[test]
        fn residue_inverse(v in 1i64..32003) {
            let f = Field::Prime(DEFAULT_PRIME);
            let x = f.from_i64(v);
            prop_assert!((&x * &x.inv().unwrap()).is_one());
            prop_assert!((&x - &x).is_zero());
        }

        #[test]
        fn rational_inverse(a in -50i64..50, b in 1i64..50) {
            prop_assume!(a != 0);
            let f = Field::Rationals;
            let x = f.from_i64(a).div(&f.from_i64(b)).unwrap();
            prop_assert!((&x * &x.inv().unwrap()).is_one());
            prop_assert!((&x + &(-&x)).is_zero());
        }
    }
}
