//! Exact field scalars: GF(p) for prime p and arbitrary-precision rationals.
//!
//! No floating point anywhere. GF(p) values are kept as canonical
//! representatives in `[0, p)`; rationals are always reduced.

use crate::error::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Exact rational number with arbitrary-precision integers.
pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Trial division suffices for the supported moduli (p < 2^31).
pub fn is_prime_u64(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// The coefficient field of a presentation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Field {
    /// Exact rationals.
    Rational,
    /// GF(p), p prime.
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field, Error> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 31 {
            return Err(Error::ParamOutOfRange(format!("modulus {p} >= 2^31")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(&self) -> Scalar {
        match *self {
            Field::Rational => Scalar::Rat(Rat::zero()),
            Field::Prime(p) => Scalar::Fp { p, val: 0 },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            Field::Rational => Scalar::Rat(rat_int(n)),
            Field::Prime(p) => {
                let r = n.rem_euclid(p as i64) as u64;
                Scalar::Fp { p, val: r }
            }
        }
    }

    /// Maps an exact rational into the field. Over GF(p) the denominator
    /// must be invertible.
    pub fn from_rat(&self, r: &Rat) -> Result<Scalar, Error> {
        match *self {
            Field::Rational => Ok(Scalar::Rat(r.clone())),
            Field::Prime(p) => {
                let num = r.numer().mod_floor_u64(p);
                let den = r.denom().mod_floor_u64(p);
                if den == 0 {
                    return Err(Error::ParamOutOfRange(format!(
                        "denominator of {r} not invertible mod {p}"
                    )));
                }
                let val = mul_mod(num, inv_mod(den, p), p);
                Ok(Scalar::Fp { p, val })
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Prime(p) => write!(f, "gf {p}"),
        }
    }
}

trait ModFloor {
    fn mod_floor_u64(&self, p: u64) -> u64;
}

impl ModFloor for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        use num_integer::Integer;
        let m = self.mod_floor(&BigInt::from(p));
        let (_, digits) = m.to_u64_digits();
        *digits.first().unwrap_or(&0)
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "division by zero mod {p}");
    pow_mod(a, p - 2, p)
}

/// An element of the coefficient field.
///
/// Arithmetic between scalars of different fields is a programming error and
/// panics; the polynomial layer checks compatibility first and reports
/// [`Error::FieldMismatch`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Rat(Rat),
    Fp { p: u64, val: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Fp { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { val, .. } => *val == 1,
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { p, val: a }, Scalar::Fp { p: q, val: b }) => {
                assert_eq!(p, q, "field mismatch");
                Scalar::Fp {
                    p: *p,
                    val: (a + b) % p,
                }
            }
            _ => panic!("field mismatch"),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { p, val } => Scalar::Fp {
                p: *p,
                val: if *val == 0 { 0 } else { p - val },
            },
        }
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { p, val: a }, Scalar::Fp { p: q, val: b }) => {
                assert_eq!(p, q, "field mismatch");
                Scalar::Fp {
                    p: *p,
                    val: mul_mod(*a, *b, *p),
                }
            }
            _ => panic!("field mismatch"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => {
                assert!(!a.is_zero(), "division by zero");
                Scalar::Rat(a.recip())
            }
            Scalar::Fp { p, val } => Scalar::Fp {
                p: *p,
                val: inv_mod(*val, *p),
            },
        }
    }

    pub fn div(&self, rhs: &Scalar) -> Scalar {
        self.mul(&rhs.inv())
    }

    /// The scalar as an exact rational, when it lives over the rationals.
    pub fn as_rat(&self) -> Option<&Rat> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Fp { .. } => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { val, .. } => write!(f, "{val}"),
        }
    }
}

/// Parses "p", "-p", or "p/q" into an exact rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rat::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Rat::from_integer(n))
    }
}

/// Formats an exact rational as "p" or "p/q".
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Integer square root test: `Some(s)` iff `r = s^2` with `s` rational >= 0.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer().magnitude();
    let den = r.denom().magnitude();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(Rat::new(BigInt::from(sn), BigInt::from(sd)))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(7));
        assert!(is_prime_u64(2147483647));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(4));
        assert!(!is_prime_u64(91));
    }

    #[test]
    fn gf_arithmetic_is_canonical() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(-1);
        assert_eq!(a, Scalar::Fp { p: 7, val: 6 });
        assert!(a.add(&f.one()).is_zero());
        assert_eq!(a.mul(&a), f.one().add(&f.zero()).mul(&f.from_i64(36)));
        let inv3 = f.from_i64(3).inv();
        assert_eq!(f.from_i64(3).mul(&inv3), f.one());
    }

    #[test]
    fn non_prime_modulus_rejected() {
        assert!(matches!(Field::prime(6), Err(Error::NotPrime(6))));
    }

    #[test]
    fn rational_parse_and_format() {
        assert_eq!(parse_rat("3/4"), Some(rat(3, 4)));
        assert_eq!(parse_rat("-2"), Some(rat_int(-2)));
        assert_eq!(parse_rat("4/0"), None);
        assert_eq!(format_rat(&rat(6, 4)), "3/2");
        assert_eq!(format_rat(&rat_int(5)), "5");
    }

    #[test]
    fn rational_square_roots() {
        assert_eq!(rat_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rat_sqrt(&rat_int(0)), Some(rat_int(0)));
        assert_eq!(rat_sqrt(&rat_int(2)), None);
        assert_eq!(rat_sqrt(&rat_int(-4)), None);
    }

    #[test]
    fn rat_into_prime_field() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.from_rat(&rat(1, 2)).unwrap(), f.from_i64(3));
        assert!(f.from_rat(&rat(1, 5)).is_err());
    }
}
