//! Exact coefficient fields: the rationals and prime fields `Z/pZ`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest modulus accepted, so that products of residues fit in `u64`.
const MAX_PRIME: u64 = u32::MAX as u64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rationals,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p > MAX_PRIME {
            return Err(Error::InvalidField(format!("modulus {p} exceeds {MAX_PRIME}")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Residue { value: 0, modulus: p },
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Residue {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(self, n: &BigInt) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = ((n % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
                Scalar::Residue {
                    value: r.to_u64().expect("residue fits in u64"),
                    modulus: p,
                }
            }
        }
    }

    /// `num / den` in this field; fails when `den` is zero in the field.
    pub fn from_ratio(self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        let d = self.from_bigint(den);
        if d.is_zero() {
            return Err(Error::ScalarNotInField(format!("{num}/{den}")));
        }
        Ok(self.from_bigint(num).mul(&d.inverse().expect("nonzero")))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "q"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `q` or `fp:<p>`.
    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        if s == "q" || s == "Q" {
            return Ok(Field::Rationals);
        }
        if let Some(p) = s.strip_prefix("fp:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::InvalidField(format!("bad modulus `{p}`")))?;
            return Field::prime(p);
        }
        Err(Error::InvalidField(format!("expected `q` or `fp:<p>`, got `{s}`")))
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element. Operands of binary operations must share a field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Scalar::Residue {
                    value: (a + b) % p,
                    modulus: *p,
                }
            }
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus: p }, Scalar::Residue { value: b, modulus: q }) if p == q => {
                Scalar::Residue {
                    value: (a * b) % p,
                    modulus: *p,
                }
            }
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        match self {
            Scalar::Rational(a) => Some(Scalar::Rational(a.recip())),
            Scalar::Residue { value, modulus } => {
                // Fermat: a^(p-2)
                let mut result = 1u64;
                let mut base = *value;
                let mut exp = modulus - 2;
                while exp > 0 {
                    if exp & 1 == 1 {
                        result = result * base % modulus;
                    }
                    base = base * base % modulus;
                    exp >>= 1;
                }
                Some(Scalar::Residue {
                    value: result,
                    modulus: *modulus,
                })
            }
        }
    }

    /// True when the printed form carries a leading minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_negative(),
            Scalar::Residue { .. } => false,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_is_exact() {
        let f = Field::Rationals;
        let two_thirds = f.from_ratio(&BigInt::from(2), &BigInt::from(3)).unwrap();
        let r = two_thirds.sub(&f.one());
        assert_eq!(r.to_string(), "-1/3");
        assert!(r.is_negative());
        assert!(r.add(&r.neg()).is_zero());
    }

    #[test]
    fn prime_field_inverse() {
        let f = Field::prime(7).unwrap();
        for n in 1..7 {
            let x = f.from_i64(n);
            assert!(x.mul(&x.inverse().unwrap()).is_one());
        }
        assert_eq!(f.from_i64(-1).to_string(), "6");
    }

    #[test]
    fn rejects_bad_fields() {
        assert!(Field::prime(8).is_err());
        assert!(Field::prime(1).is_err());
        assert!("fp:x".parse::<Field>().is_err());
        assert_eq!("fp:5".parse::<Field>().unwrap(), Field::Prime(5));
        assert_eq!("q".parse::<Field>().unwrap(), Field::Rationals);
    }

    #[test]
    fn zero_denominator_mod_p() {
        let f = Field::prime(5).unwrap();
        assert!(f.from_ratio(&BigInt::from(1), &BigInt::from(10)).is_err());
        let q = Field::Rationals;
        assert!(q.from_ratio(&BigInt::from(1), &BigInt::from(0)).is_err());
    }
}
