//! Ground fields: the rationals with arbitrary-precision integers, or a prime field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[derive(Default)]
pub enum FieldConfig {
    #[default]
    Rational,
    Prime(u64),
}


fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2u64;
    while q.saturating_mul(q) <= p {
        if p.is_multiple_of(q) {
            return false;
        }
        q += 1;
    }
    true
}

impl FieldConfig {
    pub fn prime(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 {
            return Err(Error::InvalidField(format!("modulus {p} is too large")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(FieldConfig::Prime(p))
    }

    /// Parses `rational`, `prime:<p>` or `prime <p>`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t == "rational" || t == "Q" {
            return Ok(FieldConfig::Rational);
        }
        let rest = t
            .strip_prefix("prime:")
            .or_else(|| t.strip_prefix("prime "))
            .ok_or_else(|| Error::InvalidField(format!("unknown field '{t}'")))?;
        let p: u64 = rest
            .trim()
            .parse()
            .map_err(|_| Error::InvalidField(format!("bad modulus '{rest}'")))?;
        FieldConfig::prime(p)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldConfig::Rational => 0,
            FieldConfig::Prime(p) => *p,
        }
    }

    pub fn label(&self) -> String {
        match self {
            FieldConfig::Rational => "rational".to_string(),
            FieldConfig::Prime(p) => format!("prime:{p}"),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldConfig::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldConfig::Prime(p) => Scalar::Modular {
                value: v.rem_euclid(*p as i64) as u64,
                modulus: *p,
            },
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            FieldConfig::Rational => Scalar::Rational(BigRational::from_integer(v.clone())),
            FieldConfig::Prime(p) => {
                let m = BigInt::from(*p);
                let r = v.mod_floor(&m);
                Scalar::Modular {
                    value: r.to_u64().unwrap_or(0),
                    modulus: *p,
                }
            }
        }
    }

    /// Maps an exact rational into this field; fails when the denominator vanishes mod p.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        match self {
            FieldConfig::Rational => Ok(Scalar::Rational(q.clone())),
            FieldConfig::Prime(_) => {
                let num = self.from_bigint(q.numer());
                let den = self.from_bigint(q.denom());
                let inv = den.inv().ok_or_else(|| {
                    Error::Arithmetic(format!(
                        "denominator {} vanishes in {}",
                        q.denom(),
                        self.label()
                    ))
                })?;
                Ok(&num * &inv)
            }
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::Arithmetic("division by zero".into()));
        }
        self.from_rational(&BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `n` as a field element, or an error when the characteristic divides it.
    pub fn invertible_integer(&self, n: i64) -> Result<Scalar> {
        let s = self.from_i64(n);
        if s.is_zero() {
            return Err(Error::Arithmetic(format!(
                "{n} is zero in {}",
                self.label()
            )));
        }
        Ok(s)
    }
}

/// An exact field element. Fractions are kept in lowest terms with a positive denominator;
/// residues live in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % m as u128) as u64;
        }
        b = ((b as u128 * b as u128) % m as u128) as u64;
        e >>= 1;
    }
    acc
}

impl Scalar {
    pub fn field(&self) -> FieldConfig {
        match self {
            Scalar::Rational(_) => FieldConfig::Rational,
            Scalar::Modular { modulus, .. } => FieldConfig::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: mod_pow(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// The rational value, when this is a rational scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Modular { .. } => None,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_negative(),
            Scalar::Modular { .. } => false,
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
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("mixed fields in arithmetic: {:?} vs {:?}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (
                Scalar::Modular { value: a, modulus: p },
                Scalar::Modular { value: b, modulus: q },
            ) if p == q => Scalar::Modular {
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                modulus: *p,
            },
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (
                Scalar::Modular { value: a, modulus: p },
                Scalar::Modular { value: b, modulus: q },
            ) if p == q => Scalar::Modular {
                value: ((*a as u128 + (*p - *b) as u128) % *p as u128) as u64,
                modulus: *p,
            },
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (
                Scalar::Modular { value: a, modulus: p },
                Scalar::Modular { value: b, modulus: q },
            ) if p == q => Scalar::Modular {
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                modulus: *p,
            },
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, modulus } => Scalar::Modular {
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

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
