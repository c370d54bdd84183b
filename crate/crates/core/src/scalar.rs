//! Supertropical semifield over the max-plus rationals.
//!
//! A [`Scalar`] is either the adjoined zero `-inf`, a tangible element, or a
//! ghost element. Addition takes the operand with the larger ν-value and turns
//! ties into ghosts; multiplication adds the underlying rationals and is ghost
//! as soon as one factor is.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Mul, Neg};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Signed;

use crate::error::{Error, Result};

/// Exact rational used for ν-values and exponents.
pub type Rational = Ratio<i128>;

/// An element of the ordered group `(ℚ, +)` underlying the semifield.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GroupValue(pub Rational);

impl GroupValue {
    pub const ZERO: GroupValue = GroupValue(Ratio::new_raw(0, 1));

    pub fn from_int(n: i64) -> Self {
        GroupValue(Rational::from_integer(n as i128))
    }

    pub fn new(numer: i128, denom: i128) -> Result<Self> {
        if denom == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(GroupValue(Rational::new(numer, denom)))
    }

    pub fn rational(self) -> Rational {
        self.0
    }

    /// Midpoint of two group values (the group is divisible).
    pub fn midpoint(self, other: GroupValue) -> GroupValue {
        GroupValue((self.0 + other.0) / Rational::from_integer(2))
    }
}

impl Add for GroupValue {
    type Output = GroupValue;
    fn add(self, rhs: GroupValue) -> GroupValue {
        GroupValue(self.0 + rhs.0)
    }
}

impl std::ops::Sub for GroupValue {
    type Output = GroupValue;
    fn sub(self, rhs: GroupValue) -> GroupValue {
        GroupValue(self.0 - rhs.0)
    }
}

impl Neg for GroupValue {
    type Output = GroupValue;
    fn neg(self) -> GroupValue {
        GroupValue(-self.0)
    }
}

impl fmt::Display for GroupValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for GroupValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("invalid rational `{s}`: {why}"));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let parse_int = |t: &str, signed: bool| -> Result<i128> {
            let digits = if signed {
                t.strip_prefix(['+', '-']).unwrap_or(t)
            } else {
                t
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad("expected digits"));
            }
            t.parse::<i128>().map_err(|_| bad("out of range"))
        };
        let n = parse_int(num, true)?;
        match den {
            None => Ok(GroupValue(Rational::from_integer(n))),
            Some(d) => {
                let d = parse_int(d, false)?;
                if d == 0 {
                    return Err(bad("zero denominator"));
                }
                if d == 1 || n.gcd(&d) != 1 {
                    return Err(bad("not in lowest terms"));
                }
                Ok(GroupValue(Rational::new_raw(n, d)))
            }
        }
    }
}

/// Scalar of the supertropical semifield with zero adjoined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[derive(Default)]
pub enum Scalar {
    /// The adjoined zero `𝟘`, printed `-inf`.
    #[default]
    Zero,
    Tangible(GroupValue),
    Ghost(GroupValue),
}


impl Scalar {
    /// Multiplicative unit `𝟙` (tangible 0).
    pub const ONE: Scalar = Scalar::Tangible(GroupValue::ZERO);
    /// The ghost unit `e = 𝟙^ν`.
    pub const GHOST_ONE: Scalar = Scalar::Ghost(GroupValue::ZERO);

    pub fn tangible(n: i64) -> Scalar {
        Scalar::Tangible(GroupValue::from_int(n))
    }

    pub fn ghost(n: i64) -> Scalar {
        Scalar::Ghost(GroupValue::from_int(n))
    }

    /// The ν-value as an ordered key, with `Zero` below everything.
    pub fn nu_value(self) -> Option<GroupValue> {
        match self {
            Scalar::Zero => None,
            Scalar::Tangible(q) | Scalar::Ghost(q) => Some(q),
        }
    }

    pub fn is_zero(self) -> bool {
        matches!(self, Scalar::Zero)
    }

    pub fn is_tangible(self) -> bool {
        matches!(self, Scalar::Tangible(_))
    }

    pub fn is_ghost(self) -> bool {
        matches!(self, Scalar::Ghost(_))
    }

    /// Membership in `G₀ = G ∪ {𝟘}`.
    pub fn is_ghost_or_zero(self) -> bool {
        !self.is_tangible()
    }

    /// The ghost map ν.
    pub fn nu(self) -> Scalar {
        match self {
            Scalar::Zero => Scalar::Zero,
            Scalar::Tangible(q) | Scalar::Ghost(q) => Scalar::Ghost(q),
        }
    }

    pub fn inv(self) -> Result<Scalar> {
        match self {
            Scalar::Zero => Err(Error::DivisionByZero),
            Scalar::Tangible(q) => Ok(Scalar::Tangible(-q)),
            Scalar::Ghost(q) => Ok(Scalar::Ghost(-q)),
        }
    }

    /// `self / other`; fails when `other` is `𝟘`.
    pub fn checked_div(self, other: Scalar) -> Result<Scalar> {
        Ok(self * other.inv()?)
    }

    /// Rational power; the value is scaled by `r` and the layer is kept.
    pub fn pow(self, r: Rational) -> Result<Scalar> {
        match self {
            Scalar::Zero if r.is_positive() => Ok(Scalar::Zero),
            Scalar::Zero => Err(Error::Domain(format!(
                "zero raised to non-positive exponent {}",
                GroupValue(r)
            ))),
            Scalar::Tangible(q) => Ok(Scalar::Tangible(GroupValue(q.0 * r))),
            Scalar::Ghost(q) => Ok(Scalar::Ghost(GroupValue(q.0 * r))),
        }
    }

    /// Integer power; never fails for positive `m`.
    pub fn powi(self, m: i64) -> Result<Scalar> {
        self.pow(Rational::from_integer(m as i128))
    }

    /// The unique square root (`F² = F` over the rationals).
    pub fn sqrt(self) -> Scalar {
        match self {
            Scalar::Zero => Scalar::Zero,
            s => s.pow(Rational::new(1, 2)).expect("nonzero base"),
        }
    }

    pub fn square(self) -> Scalar {
        self.mul(self)
    }

    /// Compare ν-values; `Equal` means the operands are ν-matched.
    pub fn nu_cmp(self, other: Scalar) -> Ordering {
        self.nu_value().cmp(&other.nu_value())
    }

    /// The tangible element ν-matched to `self`.
    pub fn tangible_lift(self) -> Result<Scalar> {
        match self {
            Scalar::Zero => Err(Error::Domain("tangible lift of -inf".into())),
            Scalar::Tangible(q) | Scalar::Ghost(q) => Ok(Scalar::Tangible(q)),
        }
    }

    /// `self ⊨ other`: `self = other + c` for some `c ∈ G₀`.
    pub fn ghost_surpasses(self, other: Scalar) -> bool {
        self == other || (self.is_ghost() && self.nu_cmp(other) != Ordering::Less)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        match self.nu_cmp(rhs) {
            Ordering::Greater => self,
            Ordering::Less => rhs,
            Ordering::Equal => self.nu(),
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Zero, _) | (_, Scalar::Zero) => Scalar::Zero,
            (Scalar::Tangible(a), Scalar::Tangible(b)) => Scalar::Tangible(a + b),
            (a, b) => Scalar::Ghost(a.nu_value().unwrap() + b.nu_value().unwrap()),
        }
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::Zero, |a, b| a + b)
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::ONE, |a, b| a * b)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Zero => f.write_str("-inf"),
            Scalar::Tangible(q) => write!(f, "{q}"),
            Scalar::Ghost(q) => write!(f, "{q}g"),
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-inf" {
            return Ok(Scalar::Zero);
        }
        match s.strip_suffix('g') {
            Some(body) => Ok(Scalar::Ghost(body.parse()?)),
            None => Ok(Scalar::Tangible(s.parse()?)),
        }
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl serde::Serialize for GroupValue {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

/// Parse a scalar literal, panicking on malformed input. Test helper.
pub fn s(text: &str) -> Scalar {
    text.parse()
        .unwrap_or_else(|e| panic!("bad scalar literal `{text}`: {e}"))
}
