use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::polyhedron::Polyhedron;
use super::vector::{ExponentVector, HalfSpace};
use crate::error::{Error, Result};
use crate::num::{self, Integer};

/// One integer inequality `<normal, m> >= threshold`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Constraint {
    pub normal: ExponentVector,
    pub threshold: Integer,
}

/// A finite conjunction of integer-threshold inequalities over `Z^rank`.
///
/// Constraints are kept normalized: normals are primitive (a common factor
/// `g` turns the threshold `t` into `ceil(t / g)`, which has the same integer
/// solutions), parallel constraints are merged keeping the larger threshold,
/// and the list is sorted by normal. A zero normal either disappears
/// (`0 >= t` with `t <= 0`) or marks the system infeasible.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThresholdSystem {
    rank: usize,
    constraints: Vec<Constraint>,
    infeasible: bool,
}

impl ThresholdSystem {
    pub fn new(
        rank: usize,
        constraints: impl IntoIterator<Item = (ExponentVector, Integer)>,
    ) -> Result<ThresholdSystem> {
        if rank == 0 {
            return Err(Error::domain("threshold systems need positive rank"));
        }
        let mut merged: BTreeMap<ExponentVector, Integer> = BTreeMap::new();
        let mut infeasible = false;
        for (normal, threshold) in constraints {
            if normal.rank() != rank {
                return Err(Error::domain(format!(
                    "constraint normal {normal} does not have rank {rank}"
                )));
            }
            if normal.is_zero() {
                infeasible |= threshold.is_positive();
                continue;
            }
            let g = num::gcd_of(normal.entries());
            let normal = normal.primitive()?;
            let threshold = threshold.div_ceil(&g);
            merged
                .entry(normal)
                .and_modify(|t| {
                    if threshold > *t {
                        *t = threshold.clone();
                    }
                })
                .or_insert(threshold);
        }
        Ok(ThresholdSystem {
            rank,
            constraints: merged
                .into_iter()
                .map(|(normal, threshold)| Constraint { normal, threshold })
                .collect(),
            infeasible,
        })
    }

    /// No constraints: all of `Z^rank`.
    pub fn unconstrained(rank: usize) -> ThresholdSystem {
        ThresholdSystem { rank, constraints: Vec::new(), infeasible: false }
    }

    /// `m_i >= bound` for every coordinate.
    pub fn coordinate_bounds(rank: usize, bound: i64) -> ThresholdSystem {
        ThresholdSystem::new(
            rank,
            (0..rank).map(|i| (ExponentVector::unit(rank, i), BigInt::from(bound))),
        )
        .expect("unit normals are valid")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn is_infeasible(&self) -> bool {
        self.infeasible
    }

    /// `(normal, threshold)` pairs with thresholds as `i64`; for tests and
    /// small literal comparisons.
    pub fn constraint_pairs(&self) -> Vec<(ExponentVector, i64)> {
        use num_traits::ToPrimitive;
        self.constraints
            .iter()
            .map(|c| (c.normal.clone(), c.threshold.to_i64().expect("threshold fits in i64")))
            .collect()
    }

    pub fn threshold_for(&self, normal: &ExponentVector) -> Option<&Integer> {
        self.constraints
            .binary_search_by(|c| c.normal.cmp(normal))
            .ok()
            .map(|i| &self.constraints[i].threshold)
    }

    pub fn normals(&self) -> Vec<ExponentVector> {
        self.constraints.iter().map(|c| c.normal.clone()).collect()
    }

    pub fn contains(&self, m: &ExponentVector) -> bool {
        !self.infeasible && self.constraints.iter().all(|c| c.normal.dot(m) >= c.threshold)
    }

    /// Conjunction of both systems.
    pub fn intersect(&self, other: &ThresholdSystem) -> Result<ThresholdSystem> {
        if self.rank != other.rank {
            return Err(Error::domain("cannot intersect systems of different rank"));
        }
        let mut s = ThresholdSystem::new(
            self.rank,
            self.constraints
                .iter()
                .chain(&other.constraints)
                .map(|c| (c.normal.clone(), c.threshold.clone())),
        )?;
        s.infeasible = self.infeasible || other.infeasible;
        Ok(s)
    }

    /// The system satisfied by `m` exactly when `m + offset` satisfies `self`.
    pub fn shift(&self, offset: &ExponentVector) -> Result<ThresholdSystem> {
        let mut s = ThresholdSystem::new(
            self.rank,
            self.constraints
                .iter()
                .map(|c| (c.normal.clone(), &c.threshold - c.normal.dot(offset))),
        )?;
        s.infeasible = self.infeasible;
        Ok(s)
    }

    /// Fixes the last coordinate to `value`, giving a system in rank - 1.
    pub fn substitute_last(&self, value: &Integer) -> Result<ThresholdSystem> {
        if self.rank < 2 {
            return Err(Error::domain("cannot slice a rank-1 system"));
        }
        let mut s = ThresholdSystem::new(
            self.rank - 1,
            self.constraints.iter().map(|c| {
                let (w, coeff) = c.normal.split_last();
                (w, &c.threshold - coeff * value)
            }),
        )?;
        s.infeasible |= self.infeasible;
        Ok(s)
    }

    /// The rational polyhedron cut out by the same inequalities.
    pub fn to_polyhedron(&self) -> Result<Polyhedron> {
        Polyhedron::from_facets(
            self.rank,
            self.constraints
                .iter()
                .map(|c| HalfSpace::new(c.normal.clone(), BigRational::from_integer(c.threshold.clone())))
                .collect::<Result<_>>()?,
        )
    }

    /// Drops constraints implied over the rationals by the others. The integer
    /// solution set is unchanged.
    pub fn irredundant(&self) -> Result<ThresholdSystem> {
        if self.infeasible || self.constraints.is_empty() {
            return Ok(self.clone());
        }
        let p = self.to_polyhedron()?.irredundant_facets()?;
        ThresholdSystem::new(
            self.rank,
            p.facets()
                .iter()
                .map(|h| (h.normal().clone(), num::ceil(h.threshold()))),
        )
    }

    /// Same normal set, and every threshold of `self` at least the matching
    /// threshold of `other`: then `self`'s solutions lie in `other`'s.
    pub fn dominates(&self, other: &ThresholdSystem) -> bool {
        if self.infeasible {
            return true;
        }
        other.constraints.iter().all(|c| {
            self.threshold_for(&c.normal)
                .is_some_and(|t| *t >= c.threshold)
        })
    }
}

impl fmt::Display for ThresholdSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.infeasible {
            return write!(f, "{{infeasible}}");
        }
        write!(f, "{{")?;
        for (i, c) in self.constraints.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_inequality(&c.normal, &c.threshold))?;
        }
        write!(f, "}}")
    }
}

const VARIABLE_NAMES: [&str; 4] = ["X", "Y", "Z", "W"];

fn variable_name(i: usize, rank: usize) -> String {
    if rank <= VARIABLE_NAMES.len() {
        VARIABLE_NAMES[i].to_string()
    } else {
        format!("X{}", i + 1)
    }
}

/// Renders `<w, m> >= t` as e.g. `3X+2Y>=6`.
pub fn format_inequality(normal: &ExponentVector, threshold: &Integer) -> String {
    let rank = normal.rank();
    let mut s = String::new();
    for (i, w) in normal.entries().iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        let name = variable_name(i, rank);
        let abs = w.abs();
        if w.is_negative() {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        if abs != BigInt::from(1) {
            s.push_str(&abs.to_string());
        }
        s.push_str(&name);
    }
    format!("{s}>={threshold}")
}

#[derive(Serialize, Deserialize)]
struct FacetRepr {
    normal: ExponentVector,
    threshold: String,
}

#[derive(Serialize, Deserialize)]
struct SystemRepr {
    rank: usize,
    facets: Vec<FacetRepr>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    infeasible: bool,
}

impl Serialize for ThresholdSystem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SystemRepr {
            rank: self.rank,
            facets: self
                .constraints
                .iter()
                .map(|c| FacetRepr { normal: c.normal.clone(), threshold: c.threshold.to_string() })
                .collect(),
            infeasible: self.infeasible,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ThresholdSystem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = SystemRepr::deserialize(d)?;
        let mut constraints = Vec::with_capacity(repr.facets.len());
        for f in repr.facets {
            let q = num::parse_rational(&f.threshold).map_err(serde::de::Error::custom)?;
            // over the integers, <w,m> >= p/q is <w,m> >= ceil(p/q)
            constraints.push((f.normal, num::ceil(&q)));
        }
        let mut s = ThresholdSystem::new(repr.rank, constraints).map_err(serde::de::Error::custom)?;
        s.infeasible |= repr.infeasible;
        Ok(s)
    }
}
