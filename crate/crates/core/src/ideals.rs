//! Monomial ideals in `k[x_1, ..., x_n]` and their multiplier ideals and
//! modules.
//!
//! A multiplier module `J(ω_R, a^λ)` is described by lattice points in the
//! interior of `λ·Newt(a)`; the multiplier ideal `J(a^λ)` is the same set
//! translated by `-(1, ..., 1)`. Both are represented as [`ThresholdSystem`]s,
//! so every λ-dependence reduces to the integers `floor(λ c_j)` attached to
//! the Newton facets `<w_j, m> >= c_j`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{
    compare_in_box, lattice_points, newton_from_points, ExponentVector, LatticeBox, Polyhedron,
    ThresholdSystem,
};
use crate::num::{self, ceil, floor, Rational};

/// A monomial ideal given by its minimal generators, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealRepr")]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<ExponentVector>,
}

#[derive(Deserialize)]
struct IdealRepr {
    nvars: usize,
    generators: Vec<ExponentVector>,
}

impl TryFrom<IdealRepr> for MonomialIdeal {
    type Error = Error;

    fn try_from(r: IdealRepr) -> Result<Self> {
        MonomialIdeal::new(r.nvars, r.generators)
    }
}

/// Drops every generator divisible by another one.
pub fn minimalize(gens: Vec<ExponentVector>) -> Result<MonomialIdeal> {
    let nvars = gens.first().map(ExponentVector::rank).ok_or_else(|| Error::domain("zero ideal"))?;
    MonomialIdeal::new(nvars, gens)
}

fn minimal_elements(mut points: Vec<ExponentVector>) -> Vec<ExponentVector> {
    points.sort_by_cached_key(|p| (p.entries().iter().sum::<BigInt>(), p.clone()));
    points.dedup();
    let mut kept: Vec<ExponentVector> = Vec::new();
    for p in points {
        if !kept.iter().any(|g| g.divides(&p)) {
            kept.push(p);
        }
    }
    kept.sort();
    kept
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<ExponentVector>) -> Result<MonomialIdeal> {
        if nvars == 0 {
            return Err(Error::domain("a monomial ideal needs at least one variable"));
        }
        if gens.is_empty() {
            return Err(Error::domain("zero ideal"));
        }
        for g in &gens {
            if g.rank() != nvars {
                return Err(Error::domain(format!("generator {g} does not have {nvars} entries")));
            }
            if !g.is_nonnegative() {
                return Err(Error::domain(format!("generator {g} has a negative exponent")));
            }
        }
        Ok(MonomialIdeal { nvars, generators: minimal_elements(gens) })
    }

    /// Builds an ideal from literal exponent rows.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<MonomialIdeal> {
        let gens: Vec<ExponentVector> = rows
            .iter()
            .map(|r| ExponentVector::new(r.as_ref().iter().map(|&x| BigInt::from(x)).collect()))
            .collect::<Result<_>>()?;
        minimalize(gens)
    }

    /// `(x_1, ..., x_n)`.
    pub fn maximal(nvars: usize) -> MonomialIdeal {
        let gens = (0..nvars).map(|i| ExponentVector::unit(nvars, i)).collect();
        MonomialIdeal::new(nvars, gens).expect("maximal ideal is valid")
    }

    pub fn unit(nvars: usize) -> MonomialIdeal {
        MonomialIdeal::new(nvars, vec![ExponentVector::zero(nvars)]).expect("unit ideal is valid")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(ExponentVector::is_zero)
    }

    /// Whether `x^m` lies in the ideal.
    pub fn contains(&self, m: &ExponentVector) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Largest exponent appearing in any generator.
    pub fn max_entry(&self) -> i64 {
        self.generators
            .iter()
            .flat_map(|g| g.entries().iter())
            .max()
            .and_then(ToPrimitive::to_i64)
            .unwrap_or(0)
    }

    pub fn newton(&self) -> Result<Polyhedron> {
        newton_from_points(&self.generators, self.nvars)
    }

    /// `a^k`, minimalized.
    pub fn power(&self, k: i64) -> Result<MonomialIdeal> {
        if k <= 0 {
            return Err(Error::domain(format!("power exponent must be positive, got {k}")));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            let sums = acc
                .generators
                .iter()
                .flat_map(|g| self.generators.iter().map(move |h| g.add(h)))
                .collect();
            acc = MonomialIdeal::new(self.nvars, sums)?;
        }
        Ok(acc)
    }

    /// Monomials whose exponents lie in `Newt(a)`.
    ///
    /// Minimal generators of the closure lie in the box `[0, M_i]` where `M_i`
    /// is the largest `i`-th exponent of a generator: lowering an over-large
    /// coordinate to `M_i` stays inside the Newton polyhedron.
    pub fn integral_closure(&self) -> Result<MonomialIdeal> {
        let newt = self.newton()?;
        let upper: Vec<i64> = (0..self.nvars)
            .map(|i| {
                self.generators
                    .iter()
                    .map(|g| g.entries()[i].to_i64().unwrap_or(i64::MAX))
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let b = LatticeBox::new(vec![0; self.nvars], upper)?;
        let system = ThresholdSystem::new(
            self.nvars,
            newt.facets().iter().map(|h| (h.normal().clone(), ceil(h.threshold()))),
        )?;
        MonomialIdeal::new(self.nvars, lattice_points(&system, &b)?)
    }

    pub fn is_integrally_closed(&self) -> Result<bool> {
        Ok(self.integral_closure()? == *self)
    }

    /// The first power `k <= bound` whose closure differs from it, if any.
    pub fn normality_defect(&self, bound: Option<u32>) -> Result<Option<u32>> {
        let bound = bound.unwrap_or_else(|| default_normality_bound(self.nvars));
        let mut power = self.clone();
        for k in 1..=bound {
            if k > 1 {
                power = power.multiply(self)?;
            }
            if !power.is_integrally_closed()? {
                return Ok(Some(k));
            }
        }
        Ok(None)
    }

    /// Whether `a^k` is integrally closed for `k = 1..bound` (default
    /// `max(nvars - 1, 1)`).
    pub fn is_normal(&self, bound: Option<u32>) -> Result<bool> {
        Ok(self.normality_defect(bound)?.is_none())
    }

    fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        let sums = self
            .generators
            .iter()
            .flat_map(|g| other.generators.iter().map(move |h| g.add(h)))
            .collect();
        MonomialIdeal::new(self.nvars, sums)
    }
}

/// Powers beyond `nvars - 1` need not be checked for monomial ideals.
pub fn default_normality_bound(nvars: usize) -> u32 {
    (nvars.saturating_sub(1)).max(1) as u32
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", monomial_name(g))?;
        }
        write!(f, ")")
    }
}

fn monomial_name(m: &ExponentVector) -> String {
    const NAMES: [&str; 4] = ["x", "y", "z", "w"];
    if m.is_zero() {
        return "1".to_string();
    }
    let n = m.rank();
    let mut s = String::new();
    for (i, e) in m.entries().iter().enumerate() {
        if e.is_zero() {
            continue;
        }
        let name = if n <= NAMES.len() { NAMES[i].to_string() } else { format!("x{}", i + 1) };
        s.push_str(&name);
        if *e != BigInt::from(1) {
            s.push_str(&format!("^{e}"));
        }
    }
    s
}

/// Default verification box `[0, U]^n` with
/// `U = (max generator entry) * (ceil(λ_max) + 2) + 2`.
pub fn default_box(a: &MonomialIdeal, lambda_max: &Rational) -> Result<LatticeBox> {
    let lam = ceil(lambda_max).to_i64().unwrap_or(0).max(0);
    let upper = a.max_entry() * (lam + 2) + 2;
    LatticeBox::cube(a.nvars, 0, upper)
}

/// Where a monomial set lives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ambient {
    /// Inside `ω_R`: all exponents at least 1.
    #[serde(rename = "OMEGA")]
    Omega,
    /// Inside `R`: all exponents at least 0.
    #[serde(rename = "RING")]
    Ring,
}

/// A monomial submodule of `ω_R` or ideal of `R`, as a threshold system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialModule {
    pub nvars: usize,
    #[serde(flatten)]
    pub system: ThresholdSystem,
    pub ambient: Ambient,
}

impl MonomialModule {
    /// `ω_R = {m : m_i >= 1}`.
    pub fn omega(nvars: usize) -> MonomialModule {
        MonomialModule {
            nvars,
            system: ThresholdSystem::coordinate_bounds(nvars, 1),
            ambient: Ambient::Omega,
        }
    }

    /// `R = {m : m_i >= 0}`.
    pub fn ring(nvars: usize) -> MonomialModule {
        MonomialModule {
            nvars,
            system: ThresholdSystem::coordinate_bounds(nvars, 0),
            ambient: Ambient::Ring,
        }
    }

    pub fn contains(&self, m: &ExponentVector) -> bool {
        self.system.contains(m)
    }

    pub fn points(&self, b: &LatticeBox) -> Result<Vec<ExponentVector>> {
        lattice_points(&self.system, b)
    }
}

fn check_lambda(lambda: &Rational) -> Result<()> {
    if lambda.is_negative() {
        return Err(Error::domain(format!(
            "lambda must be nonnegative, got {}",
            num::format_rational(lambda)
        )));
    }
    Ok(())
}

/// `J(ω_R, a^λ)`: lattice points in the interior of `λ·Newt(a)`.
pub fn multiplier_module(a: &MonomialIdeal, lambda: &Rational) -> Result<MonomialModule> {
    check_lambda(lambda)?;
    let interior = a.newton()?.scale(lambda)?.strict_interior_system()?;
    let system = interior.intersect(&ThresholdSystem::coordinate_bounds(a.nvars, 1))?;
    Ok(MonomialModule { nvars: a.nvars, system, ambient: Ambient::Omega })
}

/// `J(a^λ)`: `m` belongs exactly when `m + (1, ..., 1)` belongs to the
/// multiplier module.
pub fn multiplier_ideal(a: &MonomialIdeal, lambda: &Rational) -> Result<MonomialModule> {
    let module = multiplier_module(a, lambda)?;
    let system = module.system.shift(&ExponentVector::ones(a.nvars))?;
    Ok(MonomialModule { nvars: a.nvars, system, ambient: Ambient::Ring })
}

/// Outcome of [`module_contains`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Containment {
    pub contains: bool,
    /// Decided by threshold comparison, independent of any box.
    pub exact: bool,
    #[serde(rename = "box")]
    pub bounds: LatticeBox,
}

/// Whether `inner ⊆ outer`. Decided exactly when `inner`'s thresholds
/// dominate `outer`'s on a shared normal set, otherwise by enumeration
/// within `b`.
pub fn module_contains(outer: &MonomialModule, inner: &MonomialModule, b: &LatticeBox) -> Result<Containment> {
    if outer.nvars != inner.nvars {
        return Err(Error::domain("modules live in different numbers of variables"));
    }
    if outer.ambient != inner.ambient {
        return Err(Error::domain("modules have different ambients"));
    }
    if inner.system.dominates(&outer.system) {
        return Ok(Containment { contains: true, exact: true, bounds: b.clone() });
    }
    let cmp = compare_in_box(&outer.system, &inner.system, b)?;
    Ok(Containment { contains: cmp.rhs_within_lhs, exact: false, bounds: b.clone() })
}

/// Jumping numbers found by [`jumping_numbers`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct JumpReport {
    pub ideal: MonomialIdeal,
    #[serde(with = "crate::num::serde_rational")]
    pub lambda_max: Rational,
    #[serde(with = "crate::num::serde_rational_vec")]
    pub jumps: Vec<Rational>,
    #[serde(rename = "box")]
    pub bounds: LatticeBox,
    pub warnings: Vec<String>,
}

impl JumpReport {
    /// Jumps `λ` with `λ + 1 <= λ_max` for which `λ + 1` is not a jump.
    pub fn periodicity_failures(&self) -> Vec<Rational> {
        let one = BigRational::from_integer(BigInt::from(1));
        self.jumps
            .iter()
            .filter(|j| {
                let next = *j + &one;
                next <= self.lambda_max && self.jumps.binary_search(&next).is_err()
            })
            .cloned()
            .collect()
    }
}

/// Every `t / c_j <= λ_max` with `t >= 1` and `c_j > 0` a Newton facet
/// threshold, sorted and deduplicated. Between consecutive candidates every
/// `floor(λ c_j)` is constant, so the multiplier module is too.
pub fn jump_candidates(newt: &Polyhedron, lambda_max: &Rational) -> Vec<Rational> {
    let mut out = Vec::new();
    for h in newt.facets() {
        let c = h.threshold();
        if !c.is_positive() {
            continue;
        }
        let last = floor(&(lambda_max * c));
        let mut t = BigInt::from(1);
        while t <= last {
            out.push(BigRational::from_integer(t.clone()) / c);
            t += 1;
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Jumping numbers of `a` in `(0, λ_max]`: candidates `λ*` at which the
/// multiplier module, enumerated in the box, is strictly smaller than at
/// `λ* - ε`, with `ε` half the smallest gap between candidates (and 0).
pub fn jumping_numbers(a: &MonomialIdeal, lambda_max: &Rational, b: Option<LatticeBox>) -> Result<JumpReport> {
    if !lambda_max.is_positive() {
        return Err(Error::domain("lambda_max must be positive"));
    }
    let bounds = match b {
        Some(b) => b,
        None => default_box(a, lambda_max)?,
    };
    let newt = a.newton()?;
    let candidates = jump_candidates(&newt, lambda_max);
    let mut warnings = Vec::new();
    if a.is_unit() {
        warnings.push("unit ideal: Newton polyhedron is the orthant, no jumps".to_string());
    }
    let Some(eps) = half_min_gap(&candidates) else {
        return Ok(JumpReport { ideal: a.clone(), lambda_max: lambda_max.clone(), jumps: vec![], bounds, warnings });
    };
    let corner = ExponentVector::new(bounds.upper.iter().map(|&u| BigInt::from(u)).collect())?;
    let mut jumps = Vec::new();
    for lam in &candidates {
        let at = multiplier_module(a, lam)?;
        let before = multiplier_module(a, &(lam - &eps))?;
        let cmp = compare_in_box(&before.system, &at.system, &bounds)?;
        if !cmp.equal() {
            jumps.push(lam.clone());
            continue;
        }
        // a facet whose threshold moves here but whose level set misses the box
        let blind = newt.facets().iter().any(|h| {
            let level = lam * h.threshold();
            h.threshold().is_positive()
                && level.is_integer()
                && BigRational::from_integer(h.normal().dot(&corner)) < level
        });
        if blind {
            warnings.push(format!(
                "box too small to witness a possible jump at {}",
                num::format_rational(lam)
            ));
        }
    }
    Ok(JumpReport { ideal: a.clone(), lambda_max: lambda_max.clone(), jumps, bounds, warnings })
}

fn half_min_gap(candidates: &[Rational]) -> Option<Rational> {
    let first = candidates.first()?;
    let mut gap = first.clone();
    for w in candidates.windows(2) {
        let d = &w[1] - &w[0];
        if d < gap {
            gap = d;
        }
    }
    Some(gap / BigRational::from_integer(BigInt::from(2)))
}

/// Log canonical threshold: the least `λ` with `J(a^λ) != R`.
///
/// Computed as `min <(1,...,1), w_j> / c_j` over Newton facets with
/// `c_j > 0`, and cross-checked against a scan of the jump candidates for
/// the first `λ` at which `1` leaves the multiplier ideal.
pub fn lct(a: &MonomialIdeal) -> Result<Rational> {
    if a.is_unit() {
        return Err(Error::domain("lct undefined for unit ideal"));
    }
    let newt = a.newton()?;
    let ones = ExponentVector::ones(a.nvars);
    let by_facets = newt
        .facets()
        .iter()
        .filter(|h| h.threshold().is_positive())
        .map(|h| BigRational::from_integer(h.normal().dot(&ones)) / h.threshold())
        .min()
        .ok_or_else(|| Error::Invariant("proper ideal without a positive Newton facet".into()))?;

    let origin = ExponentVector::zero(a.nvars);
    let mut by_scan = None;
    for lam in jump_candidates(&newt, &by_facets) {
        if !multiplier_ideal(a, &lam)?.contains(&origin) {
            by_scan = Some(lam);
            break;
        }
    }
    match by_scan {
        Some(l) if l == by_facets => Ok(by_facets),
        other => Err(Error::Invariant(format!(
            "lct routes disagree: facet formula {}, candidate scan {}",
            num::format_rational(&by_facets),
            other.map_or("none".to_string(), |l| num::format_rational(&l))
        ))),
    }
}
