//! Exact integer and rational helpers.
//!
//! Everything here is unbounded: integers are [`BigInt`], rationals are
//! [`BigRational`]. Rationals cross every I/O boundary as `"p/q"` strings.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

pub fn int(v: i64) -> Integer {
    BigInt::from(v)
}

pub fn ratio(p: i64, q: i64) -> Rational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn rational_from_int(v: &Integer) -> Rational {
    BigRational::from_integer(v.clone())
}

/// Largest integer not exceeding `q`.
pub fn floor(q: &Rational) -> Integer {
    q.floor().to_integer()
}

/// Smallest integer not below `q`.
pub fn ceil(q: &Rational) -> Integer {
    q.ceil().to_integer()
}

/// Parses `"p/q"` or `"p"`. Decimal notation is refused so that no value
/// ever passes through a binary floating-point approximation.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.contains(['.', 'e', 'E']) {
        return Err(Error::parse(format!("rationals must be p/q, got {s:?}")));
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let parse = |t: &str| -> Result<Integer> {
        t.parse::<BigInt>()
            .map_err(|_| Error::parse(format!("rationals must be p/q, got {s:?}")))
    };
    let (num, den) = (parse(num)?, parse(den)?);
    if den.is_zero() {
        return Err(Error::parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(num, den))
}

pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn dot(a: &[Integer], b: &[Integer]) -> Integer {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn gcd_of(v: &[Integer]) -> Integer {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Divides by the gcd of the absolute entries; zero stays zero.
pub(crate) fn make_primitive(v: &mut [Integer]) {
    let g = gcd_of(v);
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Least common multiple of the denominators.
pub(crate) fn common_denominator<'a>(qs: impl IntoIterator<Item = &'a Rational>) -> Integer {
    qs.into_iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()))
}

/// Serde adapter: a rational as a `"p/q"` string.
pub mod serde_rational {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

pub mod serde_rational_vec {
    use super::*;

    pub fn serialize<S: Serializer>(qs: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        let strs: Vec<String> = qs.iter().map(format_rational).collect();
        strs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<Rational>, D::Error> {
        let strs = Vec::<String>::deserialize(d)?;
        strs.iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Serde adapter for integers: a JSON number when it fits in `i64`,
/// otherwise a decimal string. Both forms are accepted on input.
pub mod serde_integer {
    use super::*;
    use num_traits::ToPrimitive;

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Num(i64),
        Str(String),
    }

    pub fn serialize<S: Serializer>(v: &Integer, s: S) -> std::result::Result<S::Ok, S::Error> {
        match v.to_i64() {
            Some(x) => s.serialize_i64(x),
            None => s.serialize_str(&v.to_string()),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Integer, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Num(x) => Ok(BigInt::from(x)),
            Repr::Str(s) => s.trim().parse::<BigInt>().map_err(serde::de::Error::custom),
        }
    }

    #[derive(Serialize, Deserialize)]
    #[serde(transparent)]
    pub(crate) struct Wrapped(#[serde(with = "self")] pub Integer);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("5/6").unwrap(), ratio(5, 6));
        assert_eq!(parse_rational("-3").unwrap(), ratio(-3, 1));
        assert_eq!(parse_rational("4/6").unwrap(), ratio(2, 3));
    }

    #[test]
    fn rejects_decimals() {
        let err = parse_rational("0.5").unwrap_err();
        assert!(err.to_string().contains("rationals must be p/q"));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn floors_negative_values_downward() {
        assert_eq!(floor(&ratio(-5, 2)), int(-3));
        assert_eq!(floor(&ratio(5, 2)), int(2));
        assert_eq!(ceil(&ratio(-5, 2)), int(-2));
    }

    #[test]
    fn formats_integers_without_denominator() {
        assert_eq!(format_rational(&ratio(2, 1)), "2");
        assert_eq!(format_rational(&ratio(11, 6)), "11/6");
    }
}
