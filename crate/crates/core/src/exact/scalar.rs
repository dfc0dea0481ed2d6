//! Exact scalars over the rationals or a prime field.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ground field: `Q` or `GF(p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum FieldSpec {
    Rational,
    Prime(u64),
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

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        // residues are multiplied in u128 but stored in u64
        if is_prime(p) && p < (1 << 32) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => Scalar::Residue {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_ratio(self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::BadScalar(format!("{num}/{den}")));
        }
        let d = self.from_i64(den);
        if d.is_zero() {
            return Err(Error::BadScalar(format!("{num}/{den} in {self}")));
        }
        Ok(self.from_i64(num) * d.inv())
    }

    /// Parses `"a"`, `"a/b"`, or `"r mod p"` (the modulus must match this field).
    pub fn parse_scalar(self, text: &str) -> Result<Scalar> {
        let bad = || Error::BadScalar(text.to_string());
        let t = text.trim();
        if let Some((r, p)) = t.split_once("mod") {
            let p: u64 = p.trim().parse().map_err(|_| bad())?;
            if FieldSpec::Prime(p) != self {
                return Err(Error::FieldMismatch(text.to_string(), self.to_string()));
            }
            let r: i64 = r.trim().parse().map_err(|_| bad())?;
            return Ok(self.from_i64(r));
        }
        match t.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                self.from_bigints(n, d).ok_or_else(bad)
            }
            None => {
                let n: BigInt = t.parse().map_err(|_| bad())?;
                self.from_bigints(n, BigInt::one()).ok_or_else(bad)
            }
        }
    }

    fn from_bigints(self, n: BigInt, d: BigInt) -> Option<Scalar> {
        match self {
            FieldSpec::Rational => Some(Scalar::Rational(BigRational::new(n, d))),
            FieldSpec::Prime(p) => {
                let pb = BigInt::from(p);
                let red = |x: BigInt| -> u64 {
                    let r = ((x % &pb) + &pb) % &pb;
                    r.to_u64().unwrap_or(0)
                };
                let den = self.from_i64(red(d) as i64);
                if den.is_zero() {
                    return None;
                }
                Some(self.from_i64(red(n) as i64) * den.inv())
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "Q" || t.eq_ignore_ascii_case("rational") {
            return Ok(FieldSpec::Rational);
        }
        let inner = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::BadScalar(s.to_string()))?;
        let p: u64 = inner.parse().map_err(|_| Error::BadScalar(s.to_string()))?;
        FieldSpec::prime(p)
    }
}

impl TryFrom<String> for FieldSpec {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<FieldSpec> for String {
    fn from(f: FieldSpec) -> String {
        f.to_string()
    }
}

/// A field element. Fractions are kept in lowest terms with positive
/// denominator, residues in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Residue { modulus, .. } => FieldSpec::Prime(*modulus),
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

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        }
    }

    pub fn neg_if(self, negate: bool) -> Scalar {
        if negate {
            -self
        } else {
            self
        }
    }

    fn check(&self, other: &Scalar) {
        if self.field() != other.field() {
            panic!(
                "{}",
                Error::FieldMismatch(self.to_string(), other.to_string())
            );
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u128;
    let mut b = base as u128 % m as u128;
    let m128 = m as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    base = acc as u64;
    base
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
            Scalar::Residue { value, modulus } => write!(f, "{value} mod {modulus}"),
        }
    }
}

impl Scalar {
    /// Compact form used inside linear combinations: the modulus is implied by
    /// the document's field.
    pub fn to_plain_string(&self) -> String {
        match self {
            Scalar::Rational(_) => self.to_string(),
            Scalar::Residue { value, .. } => value.to_string(),
        }
    }

    pub fn signum_i64(&self) -> i64 {
        match self {
            Scalar::Rational(q) => {
                if q.is_zero() {
                    0
                } else if q.is_positive() {
                    1
                } else {
                    -1
                }
            }
            Scalar::Residue { value, .. } => (*value != 0) as i64,
        }
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.check(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                Scalar::Residue {
                    value: ((*a as u128 + *b as u128) % *modulus as u128) as u64,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                Scalar::Residue {
                    value: ((*a as u128 * *b as u128) % *modulus as u128) as u64,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}
