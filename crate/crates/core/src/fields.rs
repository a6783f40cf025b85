//! Exact scalars over the rationals, prime fields and quadratic extensions.
//!
//! A [`FieldSpec`] is a small `Copy` descriptor; every [`Scalar`] carries the
//! descriptor of the field it lives in so that mixing fields is caught at
//! the point of use instead of silently producing garbage.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Ratio;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalars from different fields: {0} and {1}")]
    MixedFields(FieldSpec, FieldSpec),
    #[error("{0} is infinite and cannot be enumerated")]
    InfiniteField(FieldSpec),
    #[error("{0} is not a prime below 256")]
    NotPrime(u32),
    #[error("x^2 + {m1}x + {m0} is reducible over GF({p})")]
    ReducibleModulus { p: u8, m0: u8, m1: u8 },
    #[error("unsupported field string `{0}` (expected Q, GF(2), GF(3), GF(4), GF(9) or GF(p))")]
    Parse(String),
    #[error("cannot parse `{text}` as an element of {field}")]
    ParseScalar { field: FieldSpec, text: String },
}

/// Description of a field: `Q`, `GF(p)` or `GF(p)[x]/(x^2 + m1 x + m0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rational,
    Prime(u8),
    /// `modulus = [m0, m1]` encodes `x^2 + m1 x + m0`.
    Quadratic { p: u8, modulus: [u8; 2] },
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

impl FieldSpec {
    pub const Q: FieldSpec = FieldSpec::Rational;
    pub const GF2: FieldSpec = FieldSpec::Prime(2);
    pub const GF3: FieldSpec = FieldSpec::Prime(3);
    /// GF(2)[x]/(x^2 + x + 1).
    pub const GF4: FieldSpec = FieldSpec::Quadratic { p: 2, modulus: [1, 1] };
    /// GF(3)[x]/(x^2 + 1).
    pub const GF9: FieldSpec = FieldSpec::Quadratic { p: 3, modulus: [1, 0] };

    pub fn prime(p: u32) -> Result<Self, FieldError> {
        if p < 256 && is_prime(p) {
            Ok(FieldSpec::Prime(p as u8))
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    /// Quadratic extension of GF(p) by `x^2 + m1 x + m0`; the polynomial is
    /// checked for irreducibility by trying every root.
    pub fn quadratic(p: u32, m0: u8, m1: u8) -> Result<Self, FieldError> {
        if !(p < 16 && is_prime(p)) {
            return Err(FieldError::NotPrime(p));
        }
        let p8 = p as u8;
        let (m0, m1) = (m0 % p8, m1 % p8);
        let has_root = (0..p).any(|t| (t * t + m1 as u32 * t + m0 as u32) % p == 0);
        if has_root {
            return Err(FieldError::ReducibleModulus { p: p8, m0, m1 });
        }
        Ok(FieldSpec::Quadratic { p: p8, modulus: [m0, m1] })
    }

    /// GF(q) with the fixed moduli used throughout the crate.
    pub fn gf(q: u32) -> Result<Self, FieldError> {
        match q {
            4 => Ok(Self::GF4),
            9 => Ok(Self::GF9),
            _ => Self::prime(q),
        }
    }

    pub fn characteristic(&self) -> u32 {
        match *self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) | FieldSpec::Quadratic { p, .. } => p as u32,
        }
    }

    /// Number of elements, `None` for `Q`.
    pub fn order(&self) -> Option<usize> {
        match *self {
            FieldSpec::Rational => None,
            FieldSpec::Prime(p) => Some(p as usize),
            FieldSpec::Quadratic { p, .. } => Some(p as usize * p as usize),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar { field: *self, value: Value::Rational(Ratio::from_integer(0)) },
            _ => Scalar { field: *self, value: Value::Finite([0, 0]) },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        match *self {
            FieldSpec::Rational => Scalar { field: *self, value: Value::Rational(Ratio::from_integer(n as i128)) },
            FieldSpec::Prime(p) | FieldSpec::Quadratic { p, .. } => {
                let r = n.rem_euclid(p as i64) as u8;
                Scalar { field: *self, value: Value::Finite([r, 0]) }
            }
        }
    }

    pub fn rational(&self, num: i64, den: i64) -> Result<Scalar, FieldError> {
        let n = self.from_int(num);
        let d = self.from_int(den);
        n.checked_div(&d)
    }

    /// Element with enumeration index `idx` (`c0 + p * c1`).
    pub fn from_index(&self, idx: usize) -> Scalar {
        match *self {
            FieldSpec::Rational => self.from_int(idx as i64),
            FieldSpec::Prime(p) => Scalar { field: *self, value: Value::Finite([(idx % p as usize) as u8, 0]) },
            FieldSpec::Quadratic { p, .. } => {
                let p = p as usize;
                Scalar { field: *self, value: Value::Finite([(idx % p) as u8, ((idx / p) % p) as u8]) }
            }
        }
    }

    /// The generator `x` of a quadratic extension.
    pub fn generator(&self) -> Option<Scalar> {
        match self {
            FieldSpec::Quadratic { .. } => Some(Scalar { field: *self, value: Value::Finite([0, 1]) }),
            _ => None,
        }
    }

    /// All elements in index order; errors for `Q`.
    pub fn elements(&self) -> Result<Vec<Scalar>, FieldError> {
        let q = self.order().ok_or(FieldError::InfiniteField(*self))?;
        Ok((0..q).map(|i| self.from_index(i)).collect())
    }

    /// First element (in index order) `w != 1` with `w^3 = 1`, if any.
    pub fn primitive_cube_root(&self) -> Option<Scalar> {
        let one = self.one();
        match self.elements() {
            Ok(els) => els.into_iter().find(|w| !w.is_zero() && *w != one && w.pow(3) == one),
            // Q has no primitive cube root of unity.
            Err(_) => None,
        }
    }

    pub fn parse_scalar(&self, text: &str) -> Result<Scalar, FieldError> {
        let bad = || FieldError::ParseScalar { field: *self, text: text.to_string() };
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(bad());
        }
        match *self {
            FieldSpec::Rational => {
                let (num, den) = match t.split_once('/') {
                    Some((a, b)) => (a.parse::<i128>().map_err(|_| bad())?, b.parse::<i128>().map_err(|_| bad())?),
                    None => (t.parse::<i128>().map_err(|_| bad())?, 1),
                };
                if den == 0 {
                    return Err(bad());
                }
                Ok(Scalar { field: *self, value: Value::Rational(Ratio::new(num, den)) })
            }
            FieldSpec::Prime(_) => t.parse::<i64>().map(|n| self.from_int(n)).map_err(|_| bad()),
            FieldSpec::Quadratic { .. } => {
                let x = self.generator().expect("quadratic field has a generator");
                let mut acc = self.zero();
                // terms separated by '+', each either `k`, `x`, `kx`
                let normalized = t.replace('-', "+-");
                for term in normalized.split('+').filter(|s| !s.is_empty()) {
                    if let Some(coef) = term.strip_suffix('x') {
                        let c = match coef {
                            "" => 1,
                            "-" => -1,
                            _ => coef.parse::<i64>().map_err(|_| bad())?,
                        };
                        acc += self.from_int(c) * x;
                    } else {
                        acc += self.from_int(term.parse::<i64>().map_err(|_| bad())?);
                    }
                }
                Ok(acc)
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
            FieldSpec::Quadratic { p, modulus } if modulus == Self::fixed_modulus(p) => {
                write!(f, "GF({})", p as u32 * p as u32)
            }
            FieldSpec::Quadratic { p, modulus: [m0, m1] } => write!(f, "GF({p})[x]/(x^2+{m1}x+{m0})"),
        }
    }
}

impl FieldSpec {
    fn fixed_modulus(p: u8) -> [u8; 2] {
        match p {
            2 => [1, 1],
            3 => [1, 0],
            _ => [u8::MAX, u8::MAX],
        }
    }
}

impl FromStr for FieldSpec {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "Q" {
            return Ok(FieldSpec::Rational);
        }
        let inner = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| FieldError::Parse(s.to_string()))?;
        let q: u32 = inner.parse().map_err(|_| FieldError::Parse(s.to_string()))?;
        FieldSpec::gf(q).map_err(|_| FieldError::Parse(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Value {
    Rational(Ratio<i128>),
    /// `c0 + c1 x`, coefficients in `[0, p)`.
    Finite([u8; 2]),
}

/// An exact field element together with its field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Scalar {
    field: FieldSpec,
    value: Value,
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        match self.value {
            Value::Rational(r) => r == Ratio::from_integer(0),
            Value::Finite(c) => c == [0, 0],
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.field.one()
    }

    /// Index of a finite-field element in enumeration order.
    pub fn index(&self) -> Option<usize> {
        match (self.value, self.field) {
            (Value::Finite([c0, _]), FieldSpec::Prime(_)) => Some(c0 as usize),
            (Value::Finite([c0, c1]), FieldSpec::Quadratic { p, .. }) => Some(c0 as usize + p as usize * c1 as usize),
            _ => None,
        }
    }

    fn check(&self, other: &Scalar) -> Result<(), FieldError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::MixedFields(self.field, other.field))
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.check(other)?;
        Ok(self.add_raw(other))
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.check(other)?;
        Ok(self.mul_raw(other))
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.check(other)?;
        Ok(self.add_raw(&other.neg_raw()))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.check(other)?;
        Ok(self.mul_raw(&other.inv()?))
    }

    pub fn inv(&self) -> Result<Scalar, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        match self.value {
            Value::Rational(r) => Ok(Scalar { field: self.field, value: Value::Rational(r.recip()) }),
            Value::Finite(_) => {
                let q = self.field.order().expect("finite field") as u64;
                Ok(self.pow(q - 2))
            }
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = *self;
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_raw(&base);
            }
            base = base.mul_raw(&base);
            e >>= 1;
        }
        acc
    }

    fn add_raw(&self, other: &Scalar) -> Scalar {
        let value = match (self.value, other.value) {
            (Value::Rational(a), Value::Rational(b)) => Value::Rational(a + b),
            (Value::Finite([a0, a1]), Value::Finite([b0, b1])) => {
                let p = self.field.characteristic() as u16;
                Value::Finite([((a0 as u16 + b0 as u16) % p) as u8, ((a1 as u16 + b1 as u16) % p) as u8])
            }
            _ => unreachable!("field descriptors agree but representations differ"),
        };
        Scalar { field: self.field, value }
    }

    fn neg_raw(&self) -> Scalar {
        let value = match self.value {
            Value::Rational(a) => Value::Rational(-a),
            Value::Finite([a0, a1]) => {
                let p = self.field.characteristic() as u8;
                Value::Finite([(p - a0) % p, (p - a1) % p])
            }
        };
        Scalar { field: self.field, value }
    }

    fn mul_raw(&self, other: &Scalar) -> Scalar {
        let value = match (self.value, other.value, self.field) {
            (Value::Rational(a), Value::Rational(b), _) => Value::Rational(a * b),
            (Value::Finite([a0, _]), Value::Finite([b0, _]), FieldSpec::Prime(p)) => {
                Value::Finite([((a0 as u16 * b0 as u16) % p as u16) as u8, 0])
            }
            (Value::Finite([a0, a1]), Value::Finite([b0, b1]), FieldSpec::Quadratic { p, modulus: [m0, m1] }) => {
                let p = p as u32;
                let (a0, a1, b0, b1, m0, m1) = (a0 as u32, a1 as u32, b0 as u32, b1 as u32, m0 as u32, m1 as u32);
                let hi = a1 * b1 % p;
                // x^2 = -m1 x - m0
                let c0 = (a0 * b0 + (p - m0) * hi) % p;
                let c1 = (a0 * b1 + a1 * b0 + (p - m1) * hi) % p;
                Value::Finite([c0 as u8, c1 as u8])
            }
            _ => unreachable!("field descriptors agree but representations differ"),
        };
        Scalar { field: self.field, value }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value {
            Value::Rational(r) => {
                if *r.denom() == 1 {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Value::Finite([c0, c1]) => match (c0, c1) {
                (c0, 0) => write!(f, "{c0}"),
                (0, 1) => write!(f, "x"),
                (0, c1) => write!(f, "{c1}x"),
                (c0, 1) => write!(f, "x+{c0}"),
                (c0, c1) => write!(f, "{c1}x+{c0}"),
            },
        }
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $raw:expr) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                assert_eq!(self.field, rhs.field, "scalars from different fields");
                $raw(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                assert_eq!(self.field, rhs.field, "scalars from different fields");
                $raw(&self, rhs)
            }
        }
    };
}

binop!(Add, add, Scalar::add_raw);
binop!(Mul, mul, Scalar::mul_raw);
binop!(Sub, sub, |a: &Scalar, b: &Scalar| a.add_raw(&b.neg_raw()));

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_raw()
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = *self + rhs;
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self = *self - rhs;
    }
}

impl MulAssign for Scalar {
    fn mul_assign(&mut self, rhs: Scalar) {
        *self = *self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FINITE: [FieldSpec; 6] = [
        FieldSpec::GF2,
        FieldSpec::GF3,
        FieldSpec::GF4,
        FieldSpec::Prime(5),
        FieldSpec::Prime(7),
        FieldSpec::GF9,
    ];

    #[test]
    fn small_examples() {
        let f3 = FieldSpec::GF3;
        assert_eq!(f3.from_int(2) + f3.from_int(2), f3.one());

        let x4 = FieldSpec::GF4.generator().unwrap();
        assert_eq!(x4 * x4, x4 + FieldSpec::GF4.one());

        // exhaustive search for the inverse of x in GF(9)
        let f9 = FieldSpec::GF9;
        let x9 = f9.generator().unwrap();
        let found: Vec<Scalar> = f9.elements().unwrap().into_iter().filter(|y| x9 * *y == f9.one()).collect();
        assert_eq!(found, vec![f9.from_int(2) * x9]);
        assert_eq!(x9.inv().unwrap(), f9.from_int(2) * x9);
    }

    #[test]
    fn errors() {
        assert_eq!(FieldSpec::GF3.zero().inv(), Err(FieldError::DivisionByZero));
        assert!(matches!(
            FieldSpec::GF3.one().checked_add(&FieldSpec::GF2.one()),
            Err(FieldError::MixedFields(_, _))
        ));
        assert!(matches!(FieldSpec::Q.elements(), Err(FieldError::InfiniteField(_))));
        assert!(FieldSpec::quadratic(2, 0, 1).is_err());
        assert!(FieldSpec::quadratic(3, 2, 0).is_err());
        assert!(FieldSpec::quadratic(3, 1, 0).is_ok());
        assert!(FieldSpec::prime(9).is_err());
    }

    #[test]
    fn cube_roots() {
        let w = FieldSpec::GF4.primitive_cube_root().unwrap();
        assert_eq!(w, FieldSpec::GF4.generator().unwrap());
        assert_eq!(FieldSpec::GF2.primitive_cube_root(), None);
        assert_eq!(FieldSpec::GF3.primitive_cube_root(), None);
        assert_eq!(FieldSpec::GF9.primitive_cube_root(), None);
        assert_eq!(FieldSpec::Q.primitive_cube_root(), None);
        assert_eq!(FieldSpec::Prime(7).primitive_cube_root(), Some(FieldSpec::Prime(7).from_int(2)));
        for f in FINITE {
            if let Some(w) = f.primitive_cube_root() {
                if f.characteristic() != 3 {
                    assert!((w * w + w + f.one()).is_zero());
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(FieldSpec::GF2.elements().unwrap(), vec![FieldSpec::GF2.zero(), FieldSpec::GF2.one()]);
        assert_eq!(FieldSpec::GF4.elements().unwrap().len(), 4);
        assert_eq!(FieldSpec::GF9.elements().unwrap().len(), 9);
        for f in FINITE {
            let els = f.elements().unwrap();
            for (i, a) in els.iter().enumerate() {
                assert_eq!(a.index(), Some(i));
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for f in FINITE {
            let els = f.elements().unwrap();
            for &a in &els {
                assert_eq!(a + f.zero(), a);
                assert_eq!(a * f.one(), a);
                assert!((a + (-a)).is_zero());
                if !a.is_zero() {
                    assert_eq!(a * a.inv().unwrap(), f.one());
                }
                for &b in &els {
                    assert_eq!(a + b, b + a);
                    assert_eq!(a * b, b * a);
                    if !a.is_zero() && !b.is_zero() {
                        assert!(!(a * b).is_zero(), "{f}: zero divisors {a} {b}");
                    }
                    for &c in &els {
                        assert_eq!((a + b) + c, a + (b + c));
                        assert_eq!((a * b) * c, a * (b * c));
                        assert_eq!(a * (b + c), a * b + a * c);
                    }
                }
            }
        }
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(FieldSpec::GF4.to_string(), "GF(4)");
        assert_eq!(FieldSpec::GF9.to_string(), "GF(9)");
        assert_eq!(FieldSpec::Q.to_string(), "Q");
        for s in ["Q", "GF(2)", "GF(3)", "GF(4)", "GF(9)"] {
            assert_eq!(s.parse::<FieldSpec>().unwrap().to_string(), s);
        }
        assert!("GF(8)".parse::<FieldSpec>().is_err());
        for f in [FieldSpec::GF4, FieldSpec::GF9, FieldSpec::GF3] {
            for a in f.elements().unwrap() {
                assert_eq!(f.parse_scalar(&a.to_string()).unwrap(), a);
            }
        }
        let q = FieldSpec::Q;
        assert_eq!(q.parse_scalar("-3/6").unwrap(), q.rational(-1, 2).unwrap());
        assert_eq!(q.rational(-1, 2).unwrap().to_string(), "-1/2");
    }

    #[test]
    fn rational_arithmetic() {
        let q = FieldSpec::Q;
        let a = q.rational(2, 3).unwrap();
        let b = q.rational(-5, 7).unwrap();
        assert_eq!(a * b, q.rational(-10, 21).unwrap());
        assert_eq!((a + b) - b, a);
        assert_eq!(a.inv().unwrap(), q.rational(3, 2).unwrap());
        assert_eq!(q.characteristic(), 0);
    }
}
