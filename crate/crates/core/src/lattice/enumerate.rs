//! Bounded lattice-point enumeration.
//!
//! Boxes are split along the first coordinate and the slabs are scanned in
//! parallel; results are concatenated in slab order, so output is identical
//! to a sequential scan regardless of the thread count.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::system::ThresholdSystem;
use super::vector::ExponentVector;
use crate::error::{Error, Result};

/// Default cap on the number of points a single enumeration may visit.
pub const DEFAULT_MAX_POINTS: u128 = 100_000_000;

/// Environment variable overriding [`DEFAULT_MAX_POINTS`].
pub const MAX_POINTS_ENV: &str = "REESMULT_MAX_POINTS";

// box coordinates beyond this magnitude would risk i128 overflow in the fast path
const COORD_LIMIT: i64 = 1 << 31;

/// The enumeration guard currently in force.
pub fn max_points() -> u128 {
    static LIMIT: OnceLock<u128> = OnceLock::new();
    *LIMIT.get_or_init(|| {
        std::env::var(MAX_POINTS_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_POINTS)
    })
}

/// Per-coordinate inclusive integer bounds.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeBox {
    pub lower: Vec<i64>,
    pub upper: Vec<i64>,
}

impl LatticeBox {
    pub fn new(lower: Vec<i64>, upper: Vec<i64>) -> Result<LatticeBox> {
        if lower.len() != upper.len() || lower.is_empty() {
            return Err(Error::domain("box bounds must have equal positive length"));
        }
        if let Some(i) = (0..lower.len()).find(|&i| lower[i] > upper[i]) {
            return Err(Error::domain(format!(
                "box coordinate {i}: lower bound {} exceeds upper bound {}",
                lower[i], upper[i]
            )));
        }
        if lower.iter().chain(&upper).any(|x| x.abs() > COORD_LIMIT) {
            return Err(Error::Resource(format!("box coordinates are limited to +-{COORD_LIMIT}")));
        }
        Ok(LatticeBox { lower, upper })
    }

    /// `[lo, hi]^rank`.
    pub fn cube(rank: usize, lo: i64, hi: i64) -> Result<LatticeBox> {
        LatticeBox::new(vec![lo; rank], vec![hi; rank])
    }

    pub fn rank(&self) -> usize {
        self.lower.len()
    }

    pub fn volume(&self) -> u128 {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(l, u)| (u - l + 1) as u128)
            .fold(1u128, |acc, x| acc.saturating_mul(x))
    }

    pub fn contains(&self, m: &ExponentVector) -> bool {
        m.rank() == self.rank()
            && m.entries().iter().enumerate().all(|(i, x)| {
                x.to_i64().is_some_and(|x| self.lower[i] <= x && x <= self.upper[i])
            })
    }

    /// Appends one coordinate range (for t-degree boxes of Rees models).
    pub fn extend(&self, lo: i64, hi: i64) -> Result<LatticeBox> {
        let mut lower = self.lower.clone();
        let mut upper = self.upper.clone();
        lower.push(lo);
        upper.push(hi);
        LatticeBox::new(lower, upper)
    }

    fn check(&self, rank: usize) -> Result<()> {
        if self.rank() != rank {
            return Err(Error::domain(format!(
                "box has rank {}, system has rank {rank}",
                self.rank()
            )));
        }
        let limit = max_points();
        let vol = self.volume();
        if vol > limit {
            return Err(Error::Resource(format!(
                "box volume {vol} exceeds enumeration guard {limit} (set {MAX_POINTS_ENV} to raise it)"
            )));
        }
        Ok(())
    }
}

/// A system compiled to machine integers when every normal fits in `i64`.
enum Compiled<'a> {
    Fast { rows: Vec<(Vec<i64>, i128)>, infeasible: bool },
    Exact(&'a ThresholdSystem),
}

impl<'a> Compiled<'a> {
    fn new(s: &'a ThresholdSystem) -> Compiled<'a> {
        let mut rows = Vec::with_capacity(s.constraints().len());
        for c in s.constraints() {
            let w: Option<Vec<i64>> = c.normal.entries().iter().map(ToPrimitive::to_i64).collect();
            let Some(w) = w else {
                return Compiled::Exact(s);
            };
            // thresholds beyond i128 are unreachable from in-box points
            let t = c.threshold.to_i128().unwrap_or(if c.threshold > BigInt::from(0) {
                i128::MAX
            } else {
                i128::MIN
            });
            rows.push((w, t));
        }
        Compiled::Fast { rows, infeasible: s.is_infeasible() }
    }

    fn contains(&self, p: &[i64]) -> bool {
        match self {
            Compiled::Fast { rows, infeasible } => {
                !infeasible
                    && rows.iter().all(|(w, t)| {
                        let d: i128 = w.iter().zip(p).map(|(a, b)| (*a as i128) * (*b as i128)).sum();
                        d >= *t
                    })
            }
            Compiled::Exact(s) => s.contains(&to_vector(p)),
        }
    }
}

fn to_vector(p: &[i64]) -> ExponentVector {
    ExponentVector::from_i64(p)
}

/// Visits every point of the slab with first coordinate `first`, in
/// lexicographic order.
fn scan_slab(b: &LatticeBox, first: i64, mut visit: impl FnMut(&[i64])) {
    let rank = b.rank();
    let mut p = b.lower.clone();
    p[0] = first;
    if rank == 1 {
        visit(&p);
        return;
    }
    loop {
        visit(&p);
        let mut i = rank - 1;
        loop {
            if p[i] < b.upper[i] {
                p[i] += 1;
                break;
            }
            p[i] = b.lower[i];
            if i == 1 {
                return;
            }
            i -= 1;
        }
    }
}

fn slabs(b: &LatticeBox) -> Vec<i64> {
    (b.lower[0]..=b.upper[0]).collect()
}

/// Integer points of the box satisfying every constraint, sorted
/// lexicographically.
pub fn lattice_points(s: &ThresholdSystem, b: &LatticeBox) -> Result<Vec<ExponentVector>> {
    b.check(s.rank())?;
    let compiled = Compiled::new(s);
    let parts: Vec<Vec<ExponentVector>> = slabs(b)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            scan_slab(b, first, |p| {
                if compiled.contains(p) {
                    out.push(to_vector(p));
                }
            });
            out
        })
        .collect();
    Ok(parts.into_iter().flatten().collect())
}

/// Number of box points satisfying the system.
pub fn count_points(s: &ThresholdSystem, b: &LatticeBox) -> Result<u64> {
    b.check(s.rank())?;
    let compiled = Compiled::new(s);
    Ok(slabs(b)
        .into_par_iter()
        .map(|first| {
            let mut n = 0u64;
            scan_slab(b, first, |p| n += compiled.contains(p) as u64);
            n
        })
        .sum())
}

/// Side-by-side comparison of two systems over one box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxComparison {
    pub lhs_count: u64,
    pub rhs_count: u64,
    /// Lexicographically first point in exactly one of the two sets.
    pub first_mismatch: Option<ExponentVector>,
    /// Every rhs point in the box is also an lhs point.
    pub rhs_within_lhs: bool,
}

impl BoxComparison {
    pub fn equal(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

pub fn compare_in_box(lhs: &ThresholdSystem, rhs: &ThresholdSystem, b: &LatticeBox) -> Result<BoxComparison> {
    if lhs.rank() != rhs.rank() {
        return Err(Error::domain("compared systems have different ranks"));
    }
    b.check(lhs.rank())?;
    let (cl, cr) = (Compiled::new(lhs), Compiled::new(rhs));
    let parts: Vec<(u64, u64, Option<Vec<i64>>, bool)> = slabs(b)
        .into_par_iter()
        .map(|first| {
            let (mut nl, mut nr, mut mismatch, mut within) = (0u64, 0u64, None, true);
            scan_slab(b, first, |p| {
                let (l, r) = (cl.contains(p), cr.contains(p));
                nl += l as u64;
                nr += r as u64;
                if l != r && mismatch.is_none() {
                    mismatch = Some(p.to_vec());
                }
                if r && !l {
                    within = false;
                }
            });
            (nl, nr, mismatch, within)
        })
        .collect();
    let mut out = BoxComparison { lhs_count: 0, rhs_count: 0, first_mismatch: None, rhs_within_lhs: true };
    for (nl, nr, mismatch, within) in parts {
        out.lhs_count += nl;
        out.rhs_count += nr;
        out.rhs_within_lhs &= within;
        if out.first_mismatch.is_none() {
            out.first_mismatch = mismatch.map(|p| to_vector(&p));
        }
    }
    Ok(out)
}
