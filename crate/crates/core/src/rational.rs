//! Exact rational arithmetic helpers and a stable serialization form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Arbitrary-precision fraction, always in lowest terms with positive
/// denominator. Every curvature, mass, and distance ratio in this crate is
/// one of these.
pub type Rational = num_rational::BigRational;

/// Build a rational from two machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Build a whole-number rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Serialized form of a [`Rational`]: decimal strings, never floats.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalRepr {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for RationalRepr {
    fn from(r: &Rational) -> Self {
        RationalRepr {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

impl TryFrom<&RationalRepr> for Rational {
    type Error = crate::Error;

    fn try_from(repr: &RationalRepr) -> crate::Result<Rational> {
        let num: BigInt = repr
            .num
            .parse()
            .map_err(|_| crate::Error::Parse(format!("bad numerator {:?}", repr.num)))?;
        let den: BigInt = repr
            .den
            .parse()
            .map_err(|_| crate::Error::Parse(format!("bad denominator {:?}", repr.den)))?;
        if den.is_zero() {
            return Err(crate::Error::Parse("zero denominator".into()));
        }
        Ok(Rational::new(num, den))
    }
}

/// Serde adapter: annotate `Rational` fields with
/// `#[serde(with = "crate::rational::serde_repr")]`.
pub mod serde_repr {
    use super::{Rational, RationalRepr};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        RationalRepr::from(r).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let repr = RationalRepr::deserialize(d)?;
        Rational::try_from(&repr).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `Option<Rational>` fields.
pub mod serde_repr_opt {
    use super::{Rational, RationalRepr};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        r.as_ref().map(RationalRepr::from).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        let repr = Option::<RationalRepr>::deserialize(d)?;
        repr.map(|r| Rational::try_from(&r).map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// Compact `p/q` form used in CSV output and diagnostics.
pub fn display(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Least common multiple of the denominators of the given rationals;
/// 1 for an empty iterator.
pub fn denominator_lcm<'a>(vals: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    let mut l = BigInt::one();
    for v in vals {
        l = l.lcm(v.denom());
    }
    l
}

/// True when the rational is a (non-negative) integer.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Sign-checked conversion to a machine integer; panics only on genuine
/// logic errors (callers assert integrality first).
pub fn to_u64(r: &Rational) -> Option<u64> {
    if !is_integer(r) || r.is_negative() {
        return None;
    }
    use num_traits::ToPrimitive;
    r.numer().to_u64()
}
