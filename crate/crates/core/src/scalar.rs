//! Exact scalars: arbitrary precision rationals or residues modulo a prime.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Scalar mode of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    /// The rationals.
    Q,
    /// The prime field with the given characteristic.
    Fp(u64),
}

impl Field {
    /// Prime field, rejecting composites and primes that would overflow
    /// the 128-bit products used internally.
    pub fn prime(p: u64) -> Result<Field> {
        if !(2..(1u64 << 62)).contains(&p) || !is_prime(p) {
            return Err(Error::Field(format!("{p} is not a supported prime")));
        }
        Ok(Field::Fp(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Q => 0,
            Field::Fp(p) => *p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => write!(f, "q"),
            Field::Fp(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;
    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        if s == "q" || s == "Q" {
            return Ok(Field::Q);
        }
        if let Some(p) = s.strip_prefix("fp:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::Field(format!("bad prime in field `{s}`")))?;
            return Field::prime(p);
        }
        Err(Error::Field(format!("unknown field `{s}`")))
    }
}

fn is_prime(p: u64) -> bool {
    if p < 4 {
        return p >= 2;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact scalar. Arithmetic between different modes panics; cells
/// check modes before combining entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { v: u64, p: u64 },
}

impl Scalar {
    pub fn zero(field: Field) -> Scalar {
        match field {
            Field::Q => Scalar::Q(BigRational::zero()),
            Field::Fp(p) => Scalar::Fp { v: 0, p },
        }
    }

    pub fn one(field: Field) -> Scalar {
        Scalar::int(field, 1)
    }

    pub fn int(field: Field, n: i64) -> Scalar {
        match field {
            Field::Q => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Fp(p) => Scalar::Fp {
                v: (n as i128).rem_euclid(p as i128) as u64,
                p,
            },
        }
    }

    /// The scalar n/d; errors when d vanishes in the field.
    pub fn ratio(field: Field, n: i64, d: i64) -> Result<Scalar> {
        Scalar::from_bigs(field, BigInt::from(n), BigInt::from(d))
    }

    pub fn from_bigs(field: Field, n: BigInt, d: BigInt) -> Result<Scalar> {
        if d.is_zero() {
            return Err(Error::Field("zero denominator".into()));
        }
        match field {
            Field::Q => Ok(Scalar::Q(BigRational::new(n, d))),
            Field::Fp(p) => {
                let pb = BigInt::from(p);
                let reduce = |x: &BigInt| -> u64 {
                    let r = ((x % &pb) + &pb) % &pb;
                    r.to_u64().unwrap()
                };
                let dn = Scalar::Fp { v: reduce(&d), p };
                let inv = dn
                    .inv()
                    .ok_or_else(|| Error::Field(format!("denominator vanishes mod {p}")))?;
                Ok(&Scalar::Fp { v: reduce(&n), p } * &inv)
            }
        }
    }

    /// Parse `n`, `-n` or `p/q`.
    pub fn parse(field: Field, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::Field(format!("bad scalar literal `{s}`"));
        let (n, d) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        Scalar::from_bigs(field, n, d)
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Q,
            Scalar::Fp { p, .. } => Field::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    /// Multiplicative inverse, absent for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        match self {
            Scalar::Q(q) => Some(Scalar::Q(q.recip())),
            Scalar::Fp { v, p } => Some(Scalar::Fp {
                v: pow_mod(*v, p - 2, *p),
                p: *p,
            }),
        }
    }

    pub fn add_assign_ref(&mut self, rhs: &Scalar) {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => *a += b,
            (Scalar::Fp { v, p }, Scalar::Fp { v: w, p: q }) if p == q => {
                *v = ((*v as u128 + *w as u128) % *p as u128) as u64
            }
            _ => panic!("scalar field mismatch"),
        }
    }
}

fn pow_mod(b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u128;
    let mut bb = b as u128 % p as u128;
    while e > 0 {
        if e & 1 == 1 {
            r = r * bb % p as u128;
        }
        bb = bb * bb % p as u128;
        e >>= 1;
    }
    r as u64
}

impl<'a> Add for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl<'a> Mul for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { v, p }, Scalar::Fp { v: w, p: q }) if p == q => Scalar::Fp {
                v: ((*v as u128 * *w as u128) % *p as u128) as u64,
                p: *p,
            },
            _ => panic!("scalar field mismatch"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: if *v == 0 { 0 } else { p - v },
                p: *p,
            },
        }
    }
}

impl<'a> Sub for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_reduce() {
        let a = Scalar::ratio(Field::Q, 2, -4).unwrap();
        assert_eq!(a.to_string(), "-1/2");
        assert!(Scalar::ratio(Field::Q, 1, 0).is_err());
    }

    #[test]
    fn prime_field_inverse() {
        let f = Field::prime(7).unwrap();
        let a = Scalar::int(f, 3);
        assert!((&a * &a.inv().unwrap()).is_one());
        assert_eq!(Scalar::ratio(f, 1, 2).unwrap(), Scalar::int(f, 4));
        assert!(Field::prime(9).is_err());
        assert!(Scalar::ratio(f, 1, 7).is_err());
    }

    #[test]
    fn parse_literals() {
        assert_eq!(Scalar::parse(Field::Q, "-3/6").unwrap().to_string(), "-1/2");
        assert!(Scalar::parse(Field::Q, "1/0").is_err());
        assert!(Scalar::parse(Field::Q, "x").is_err());
    }
}
