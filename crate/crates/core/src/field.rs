//! Coefficient fields: the rationals and prime fields.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A field with elements passed around by value and all arithmetic going
/// through the field object.
pub trait Field: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Image of a rational number; `None` if the denominator vanishes.
    fn from_rational(&self, q: &BigRational) -> Option<Self::Elem>;
    fn to_string(&self, a: &Self::Elem) -> String;
    fn descriptor(&self) -> FieldDescriptor;
    /// Number of elements, `None` for infinite fields.
    fn order(&self) -> Option<u64>;
    /// The `k`-th element in a fixed enumeration (finite fields only).
    fn nth(&self, k: u64) -> Self::Elem;
    fn random<R: Rng>(&self, rng: &mut R) -> Self::Elem;

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_rational(&BigRational::from_integer(BigInt::from(n)))
            .expect("integers always map into a field")
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// `a += c * b`
    fn add_mul_assign(&self, a: &mut Self::Elem, c: &Self::Elem, b: &Self::Elem) {
        *a = self.add(a, &self.mul(c, b));
    }

    fn parse(&self, s: &str) -> Result<Self::Elem, Error> {
        let q = parse_rational(s)?;
        self.from_rational(&q).ok_or_else(|| {
            Error::Parse(format!(
                "`{s}` has a denominator that vanishes in {}",
                self.descriptor()
            ))
        })
    }
}

/// Parses `3`, `-2`, `1/3`, `-7/4`.
pub fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("`{s}` is not a rational number"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        )),
    }
}

pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldDescriptor {
    Rationals,
    Prime(u64),
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for FieldDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        if t == "Q" || t == "QQ" {
            return Ok(FieldDescriptor::Rationals);
        }
        let inner = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("unknown field `{t}` (expected Q or GF(p))")))?;
        let p: u64 = inner
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad characteristic in `{t}`")))?;
        if !is_prime(p) {
            return Err(Error::Parse(format!("{p} is not prime")));
        }
        if p >= 1 << 31 {
            return Err(Error::Parse(format!(
                "prime {p} too large (must be below 2^31)"
            )));
        }
        Ok(FieldDescriptor::Prime(p))
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

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn from_rational(&self, q: &BigRational) -> Option<BigRational> {
        Some(q.clone())
    }
    fn to_string(&self, a: &BigRational) -> String {
        format_rational(a)
    }
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Rationals
    }
    fn order(&self) -> Option<u64> {
        None
    }
    fn nth(&self, k: u64) -> BigRational {
        BigRational::from_integer(BigInt::from(k))
    }
    fn random<R: Rng>(&self, rng: &mut R) -> BigRational {
        BigRational::new(
            BigInt::from(rng.gen_range(-20i64..=20)),
            BigInt::from(rng.gen_range(1i64..=5)),
        )
    }
}

/// `GF(p)` for a prime `p < 2^31`, elements reduced into `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, Error> {
        match FieldDescriptor::from_str(&format!("GF({p})"))? {
            FieldDescriptor::Prime(p) => Ok(PrimeField { p }),
            FieldDescriptor::Rationals => unreachable!(),
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    fn reduce_big(&self, n: &BigInt) -> u64 {
        let r = n.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue fits")
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (a * b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn from_rational(&self, q: &BigRational) -> Option<u64> {
        let n = self.reduce_big(q.numer());
        let d = self.reduce_big(q.denom());
        self.inv(&d).map(|di| self.mul(&n, &di))
    }
    fn to_string(&self, a: &u64) -> String {
        a.to_string()
    }
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Prime(self.p)
    }
    fn order(&self) -> Option<u64> {
        Some(self.p)
    }
    fn nth(&self, k: u64) -> u64 {
        k % self.p
    }
    fn random<R: Rng>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
}
