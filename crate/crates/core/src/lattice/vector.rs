use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::num::{self, serde_integer, Integer, Rational};

/// An integer lattice point. Doubles as the exponent tuple of a monomial and
/// as a primitive ray or facet normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<Integer>);

impl ExponentVector {
    pub fn new(entries: Vec<Integer>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::domain("lattice vectors must have rank at least 1"));
        }
        Ok(ExponentVector(entries))
    }

    /// Convenience constructor for literals.
    ///
    /// Panics on an empty slice.
    pub fn from_i64(entries: &[i64]) -> Self {
        assert!(!entries.is_empty(), "lattice vectors must have rank at least 1");
        ExponentVector(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        assert!(rank >= 1);
        ExponentVector(vec![BigInt::zero(); rank])
    }

    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = Self::zero(rank);
        v.0[i] = BigInt::from(1);
        v
    }

    pub fn ones(rank: usize) -> Self {
        ExponentVector(vec![BigInt::from(1); rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Integer] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Integer> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    pub fn dot(&self, other: &ExponentVector) -> Integer {
        num::dot(&self.0, &other.0)
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| -a).collect())
    }

    /// Componentwise `self <= other`, i.e. the monomial `x^self` divides `x^other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Appends one coordinate (used for the t-degree of Rees models).
    pub fn extend(&self, last: Integer) -> ExponentVector {
        let mut v = self.0.clone();
        v.push(last);
        ExponentVector(v)
    }

    /// Drops the last coordinate and returns it separately.
    pub fn split_last(&self) -> (ExponentVector, Integer) {
        let (last, init) = self.0.split_last().expect("rank >= 1");
        (ExponentVector(init.to_vec()), last.clone())
    }

    pub fn primitive(&self) -> Result<ExponentVector> {
        primitive(self)
    }

    pub fn to_rational(&self) -> RationalVector {
        RationalVector(self.0.iter().map(num::rational_from_int).collect())
    }
}

/// Divides `v` by the gcd of its absolute entries, keeping its direction.
pub fn primitive(v: &ExponentVector) -> Result<ExponentVector> {
    if v.is_zero() {
        return Err(Error::domain("zero vector has no primitive form"));
    }
    let mut e = v.0.clone();
    num::make_primitive(&mut e);
    Ok(ExponentVector(e))
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for ExponentVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for x in &self.0 {
            seq.serialize_element(&serde_integer::Wrapped(x.clone()))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for ExponentVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<serde_integer::Wrapped>::deserialize(d)?;
        ExponentVector::new(raw.into_iter().map(|w| w.0).collect()).map_err(serde::de::Error::custom)
    }
}

/// A point with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalVector(Vec<Rational>);

impl RationalVector {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::domain("lattice vectors must have rank at least 1"));
        }
        Ok(RationalVector(entries))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn dot(&self, w: &ExponentVector) -> Rational {
        self.0
            .iter()
            .zip(w.entries())
            .map(|(x, a)| x * BigRational::from_integer(a.clone()))
            .sum()
    }

    pub fn scale(&self, lambda: &Rational) -> RationalVector {
        RationalVector(self.0.iter().map(|x| x * lambda).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }
}

impl Serialize for RationalVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        num::serde_rational_vec::serialize(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for RationalVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = num::serde_rational_vec::deserialize(d)?;
        RationalVector::new(v).map_err(serde::de::Error::custom)
    }
}

/// `⟨normal, x⟩ >= threshold` with a primitive integer normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HalfSpace {
    normal: ExponentVector,
    #[serde(with = "crate::num::serde_rational")]
    threshold: Rational,
}

impl HalfSpace {
    /// Normalizes an arbitrary nonzero integer normal to its primitive form,
    /// dividing the threshold by the same positive factor.
    pub fn new(normal: ExponentVector, threshold: Rational) -> Result<Self> {
        if normal.is_zero() {
            return Err(Error::domain("half-space normal must be nonzero"));
        }
        let g = num::gcd_of(normal.entries());
        let normal = primitive(&normal)?;
        let threshold = threshold / BigRational::from_integer(g);
        Ok(HalfSpace { normal, threshold })
    }

    pub fn homogeneous(normal: ExponentVector) -> Result<Self> {
        HalfSpace::new(normal, Rational::zero())
    }

    pub fn normal(&self) -> &ExponentVector {
        &self.normal
    }

    pub fn threshold(&self) -> &Rational {
        &self.threshold
    }

    pub fn contains(&self, x: &RationalVector) -> bool {
        x.dot(&self.normal) >= self.threshold
    }

    pub fn contains_strictly(&self, x: &RationalVector) -> bool {
        x.dot(&self.normal) > self.threshold
    }

    pub(crate) fn with_threshold(&self, threshold: Rational) -> HalfSpace {
        HalfSpace { normal: self.normal.clone(), threshold }
    }
}
