//! The local toric model `B = k[x, y, s_1..s_n] / (xy - s_1^{a_1} ... s_m^{a_m})`.
//!
//! `B` is the semigroup ring of the lattice points of a cone in rank
//! `n + 1`. Its torus-invariant prime divisors are `D_{x,i} = V(x, s_i)` and
//! `D_{y,i} = V(y, s_i)` for `i <= m`, and `D_i = V(s_i)` for `i > m`. Writing
//! monomials as `(a, b, c) ∈ Z^{n+2}` (exponents of `x`, `y`, `s`), the order
//! of vanishing along a divisor is the pairing with its valuation vector:
//!
//! ```text
//! D_{x,i} -> (a_i, 0, e_i)      D_{y,i} -> (0, a_i, e_i)      D_i -> (0, 0, e_i)
//! ```
//!
//! These all lie in the orthogonal complement of the relation vector
//! `(1, 1, -a_1, ..., -a_m, 0, ...)`, so rewriting `xy = s^a` never changes
//! an order.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::{lattice_points, ExponentVector, LatticeBox, ThresholdSystem};
use crate::num::{self, floor, Rational};
use crate::report::{DegreeEntry, ReportBox, VerificationReport, CONVENTION};

/// `xy = s_1^{a_1} ... s_m^{a_m}` with `n` variables `s_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ModelRepr")]
pub struct LocalHypersurfaceModel {
    n: usize,
    m: usize,
    exps: Vec<i64>,
}

#[derive(Deserialize)]
struct ModelRepr {
    n: usize,
    m: usize,
    exps: Vec<i64>,
}

impl TryFrom<ModelRepr> for LocalHypersurfaceModel {
    type Error = Error;

    fn try_from(r: ModelRepr) -> Result<Self> {
        LocalHypersurfaceModel::new(r.n, r.m, r.exps)
    }
}

impl LocalHypersurfaceModel {
    pub fn new(n: usize, m: usize, exps: Vec<i64>) -> Result<LocalHypersurfaceModel> {
        if m < 1 || m > n {
            return Err(Error::domain(format!("need 1 <= m <= n, got m={m}, n={n}")));
        }
        if exps.len() != m {
            return Err(Error::domain(format!("expected {m} exponents, got {}", exps.len())));
        }
        if let Some(e) = exps.iter().find(|&&e| e < 1) {
            return Err(Error::domain(format!("exponents must be positive, got {e}")));
        }
        Ok(LocalHypersurfaceModel { n, m, exps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn exps(&self) -> &[i64] {
        &self.exps
    }

    /// `a_i` for `i <= m`, 0 beyond.
    fn exp(&self, i: usize) -> i64 {
        self.exps.get(i).copied().unwrap_or(0)
    }

    /// `(1, 1, -a_1, ..., -a_m, 0, ..., 0)`: `x y s^{-a}` is the relation.
    pub fn relation_vector(&self) -> ExponentVector {
        let mut v = vec![1, 1];
        v.extend((0..self.n).map(|i| -self.exp(i)));
        ExponentVector::from_i64(&v)
    }
}

impl fmt::Display for LocalHypersurfaceModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "xy = ")?;
        for (i, a) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if *a == 1 {
                write!(f, "s{}", i + 1)?;
            } else {
                write!(f, "s{}^{a}", i + 1)?;
            }
        }
        write!(f, " in k[x,y,s1..s{}]", self.n)
    }
}

/// `x^a y^b s^c` with `min(a, b) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LocalMonomial {
    pub a: i64,
    pub b: i64,
    pub c: ExponentVector,
}

impl LocalMonomial {
    /// Rewrites `x^a y^b s^c` to normal form using `xy = s^a`.
    pub fn normal_form(model: &LocalHypersurfaceModel, a: i64, b: i64, c: ExponentVector) -> Result<LocalMonomial> {
        if a < 0 || b < 0 || !c.is_nonnegative() {
            return Err(Error::domain("monomial exponents must be nonnegative"));
        }
        if c.rank() != model.n {
            return Err(Error::domain(format!("s-exponent {c} does not have {} entries", model.n)));
        }
        let t = a.min(b);
        let shift: Vec<i64> = (0..model.n).map(|i| t * model.exp(i)).collect();
        Ok(LocalMonomial { a: a - t, b: b - t, c: c.add(&ExponentVector::from_i64(&shift)) })
    }

    /// `(a, b, c)` in `Z^{n+2}`.
    pub fn exponent(&self) -> ExponentVector {
        let mut e = vec![BigInt::from(self.a), BigInt::from(self.b)];
        e.extend(self.c.entries().iter().cloned());
        ExponentVector::new(e).expect("nonempty")
    }
}

/// A torus-invariant prime divisor of `Spec B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RayLabel {
    /// `V(x, s_i)`, `i <= m` (1-based).
    X(usize),
    /// `V(y, s_i)`, `i <= m`.
    Y(usize),
    /// `V(s_i)`, `i > m`.
    S(usize),
}

impl fmt::Display for RayLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RayLabel::X(i) => write!(f, "D_x{i}"),
            RayLabel::Y(i) => write!(f, "D_y{i}"),
            RayLabel::S(i) => write!(f, "D_{i}"),
        }
    }
}

impl Serialize for RayLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Divisor coefficients, one entry per ray in `rays` order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DivisorData {
    pub rays: Vec<RayLabel>,
    pub canonical: Vec<i64>,
    pub div_x: Vec<i64>,
    pub div_y: Vec<i64>,
}

/// Rays in the order `D_{x,1..m}`, `D_{y,1..m}`, `D_{m+1..n}`.
pub fn divisor_data(model: &LocalHypersurfaceModel) -> DivisorData {
    let m = model.m;
    let mut rays: Vec<RayLabel> = (1..=m).map(RayLabel::X).collect();
    rays.extend((1..=m).map(RayLabel::Y));
    rays.extend((m + 1..=model.n).map(RayLabel::S));
    let coeff = |want_x: bool| -> Vec<i64> {
        rays.iter()
            .map(|r| match (r, want_x) {
                (RayLabel::X(i), true) | (RayLabel::Y(i), false) => model.exp(i - 1),
                _ => 0,
            })
            .collect()
    };
    DivisorData { canonical: vec![-1; rays.len()], div_x: coeff(true), div_y: coeff(false), rays }
}

/// Valuation vectors in `Z^{n+2}` in [`divisor_data`] order.
pub fn ray_vectors(model: &LocalHypersurfaceModel) -> Vec<ExponentVector> {
    divisor_data(model)
        .rays
        .iter()
        .map(|r| {
            let mut v = vec![0i64; model.n + 2];
            let i = match *r {
                RayLabel::X(i) => {
                    v[0] = model.exp(i - 1);
                    i
                }
                RayLabel::Y(i) => {
                    v[1] = model.exp(i - 1);
                    i
                }
                RayLabel::S(i) => i,
            };
            v[i + 1] = 1;
            ExponentVector::from_i64(&v)
        })
        .collect()
}

fn check_monomial(model: &LocalHypersurfaceModel, mono: &LocalMonomial) -> Result<()> {
    if mono.c.rank() != model.n {
        return Err(Error::domain(format!("s-exponent {} does not have {} entries", mono.c, model.n)));
    }
    if mono.a < 0 || mono.b < 0 || !mono.c.is_nonnegative() {
        return Err(Error::domain("monomial exponents must be nonnegative"));
    }
    Ok(())
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

fn floor_times(q: &Rational, a: i64) -> i64 {
    floor(&(q * Rational::from_integer(BigInt::from(a))))
        .to_i64()
        .expect("threshold fits in i64")
}

fn entry(v: &ExponentVector, i: usize) -> i64 {
    v.entries()[i].to_i64().expect("exponent fits in i64")
}

/// Whether `x^a y^b s^c` is a section of `O(⌈K - λ div(y)⌉)`:
/// `a a_i + c_i >= 1` and `b a_i + c_i >= 1 + floor(λ a_i)` for `i <= m`,
/// and `c_i >= 1` for `i > m`.
pub fn is_section(model: &LocalHypersurfaceModel, mono: &LocalMonomial, lambda: &Rational) -> Result<bool> {
    check_monomial(model, mono)?;
    check_lambda(lambda)?;
    Ok((0..model.n).all(|i| {
        let c = entry(&mono.c, i);
        if i < model.m {
            let a_i = model.exp(i);
            mono.a * a_i + c >= 1 && mono.b * a_i + c > floor_times(lambda, a_i)
        } else {
            c >= 1
        }
    }))
}

/// The same condition read off the divisor data: the order along every ray
/// is at least minus the coefficient of `⌈K - λ div(y)⌉`.
pub fn is_section_by_divisors(model: &LocalHypersurfaceModel, mono: &LocalMonomial, lambda: &Rational) -> Result<bool> {
    check_monomial(model, mono)?;
    check_lambda(lambda)?;
    let data = divisor_data(model);
    let e = mono.exponent();
    Ok(ray_vectors(model).iter().enumerate().all(|(j, v)| {
        // ceil(-1 - λ d) = -(1 + floor(λ d))
        let required = -data.canonical[j] + floor_times(lambda, data.div_y[j]);
        e.dot(v) >= BigInt::from(required)
    }))
}

/// `x^a y^b s^c -> (c', a - b)` with `c'_i = c_i + a a_i` for `i <= m`.
pub fn regrade(model: &LocalHypersurfaceModel, mono: &LocalMonomial) -> Result<(ExponentVector, i64)> {
    check_monomial(model, mono)?;
    let shift: Vec<i64> = (0..model.n).map(|i| mono.a * model.exp(i)).collect();
    Ok((mono.c.add(&ExponentVector::from_i64(&shift)), mono.a - mono.b))
}

/// Inverse of [`regrade`] on normal forms.
pub fn unregrade(model: &LocalHypersurfaceModel, c_prime: &ExponentVector, k: i64) -> Result<LocalMonomial> {
    let a = k.max(0);
    let shift: Vec<i64> = (0..model.n).map(|i| a * model.exp(i)).collect();
    let c = c_prime.sub(&ExponentVector::from_i64(&shift));
    let mono = LocalMonomial { a, b: (-k).max(0), c };
    check_monomial(model, &mono)?;
    Ok(mono)
}

/// Membership of `s^{c'}` in `O(⌈K - μE⌉)` on the snc model:
/// `c'_i >= 1 + floor(μ a_i)` for `i <= m` and `c'_i >= 1` for `i > m` when
/// `μ > 0`; only `c' >= 1` when `μ <= 0`.
pub fn snc_multiplier_section(model: &LocalHypersurfaceModel, c_prime: &ExponentVector, mu: &Rational) -> bool {
    let positive = mu.is_positive();
    (0..model.n).all(|i| {
        let c = entry(c_prime, i);
        if positive && i < model.m {
            c > floor_times(mu, model.exp(i))
        } else {
            c >= 1
        }
    })
}

/// Enumeration bounds for the local model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalBox {
    /// Bound on the `x` and `y` exponents.
    pub deg: i64,
    /// Bound on each `s` exponent.
    pub c: i64,
}

impl Default for LocalBox {
    fn default() -> Self {
        LocalBox { deg: 6, c: 14 }
    }
}

/// Outcome for one `t`-degree.
enum Piece {
    Inconclusive,
    Compared(DegreeEntry),
}

fn compare_degree(model: &LocalHypersurfaceModel, lambda: &Rational, bounds: LocalBox, k: i64) -> Result<Piece> {
    if k.abs() > bounds.deg {
        return Ok(Piece::Inconclusive);
    }
    let n = model.n;
    let (a, b) = (k.max(0), (-k).max(0));
    let c_box = LatticeBox::cube(n, 0, bounds.c)?;
    let all = lattice_points(&ThresholdSystem::unconstrained(n), &c_box)?;

    let mut lhs = Vec::new();
    for c in &all {
        let mono = LocalMonomial { a, b, c: c.clone() };
        if is_section(model, &mono, lambda)? {
            lhs.push(regrade(model, &mono)?.0);
        }
    }
    // c' reachable from the box: c'_i in [a a_i, c + a a_i]
    let shift: Vec<i64> = (0..n).map(|i| a * model.exp(i)).collect();
    let upper: Vec<i64> = shift.iter().map(|s| s + bounds.c).collect();
    let reach = LatticeBox::new(shift, upper)?;
    let mu = lambda + Rational::from_integer(BigInt::from(k));
    let rhs: Vec<ExponentVector> = lattice_points(&ThresholdSystem::unconstrained(n), &reach)?
        .into_iter()
        .filter(|c| snc_multiplier_section(model, c, &mu))
        .collect();
    if lhs.is_empty() && rhs.is_empty() {
        return Ok(Piece::Inconclusive);
    }
    lhs.sort();
    let witness = first_difference(&lhs, &rhs);
    Ok(Piece::Compared(DegreeEntry {
        k,
        lhs_count: lhs.len() as u64,
        rhs_count: rhs.len() as u64,
        equal: witness.is_none(),
        witness,
    }))
}

/// First element of the symmetric difference of two sorted lists.
fn first_difference(l: &[ExponentVector], r: &[ExponentVector]) -> Option<ExponentVector> {
    let (mut i, mut j) = (0, 0);
    while i < l.len() && j < r.len() {
        match l[i].cmp(&r[j]) {
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
            std::cmp::Ordering::Less => return Some(l[i].clone()),
            std::cmp::Ordering::Greater => return Some(r[j].clone()),
        }
    }
    l.get(i).or_else(|| r.get(j)).cloned()
}

/// For each `t`-degree `k`, compares the regraded sections of
/// `O(⌈K - λ div(y)⌉)` in `x`-`y` degree `k` with the snc sections at
/// `μ = k + λ`, both restricted to the `c'` reachable from the box.
///
/// Degrees with no in-box preimage, or with both sides empty, are listed as
/// inconclusive and excluded from `overall`. The default range is
/// `[-deg, deg]`.
pub fn verify_local_decomposition(
    model: &LocalHypersurfaceModel,
    lambda: &Rational,
    bounds: LocalBox,
    k_range: Option<(i64, i64)>,
) -> Result<VerificationReport> {
    check_lambda(lambda)?;
    if bounds.deg < 0 || bounds.c < 0 {
        return Err(Error::domain("local box bounds must be nonnegative"));
    }
    let (lo, hi) = k_range.unwrap_or((-bounds.deg, bounds.deg));
    if lo > hi {
        return Err(Error::domain(format!("empty range {lo}..{hi}")));
    }
    let pieces = (lo..=hi)
        .into_par_iter()
        .map(|k| Ok((k, compare_degree(model, lambda, bounds, k)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut per_k = Vec::new();
    let mut inconclusive = Vec::new();
    for (k, p) in pieces {
        match p {
            Piece::Compared(e) => per_k.push(e),
            Piece::Inconclusive => inconclusive.push(k),
        }
    }
    let overall = per_k.iter().all(|e| e.equal);
    Ok(VerificationReport {
        theorem: "local".into(),
        ideal: None,
        model: Some(model.clone()),
        lambda: lambda.clone(),
        k_range: [lo, hi],
        bounds: ReportBox::Local { deg: bounds.deg, c: bounds.c },
        convention: CONVENTION.into(),
        per_k,
        inconclusive: Some(inconclusive),
        pairs: None,
        symbolic_identity: None,
        overall,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::ratio;

    fn ev(x: &[i64]) -> ExponentVector {
        ExponentVector::from_i64(x)
    }

    fn model(n: usize, m: usize, exps: &[i64]) -> LocalHypersurfaceModel {
        LocalHypersurfaceModel::new(n, m, exps.to_vec()).unwrap()
    }

    fn mono(a: i64, b: i64, c: &[i64]) -> LocalMonomial {
        LocalMonomial { a, b, c: ev(c) }
    }

    #[test]
    fn divisor_data_examples() {
        let d = divisor_data(&model(2, 2, &[2, 3]));
        assert_eq!(d.rays, vec![RayLabel::X(1), RayLabel::X(2), RayLabel::Y(1), RayLabel::Y(2)]);
        assert_eq!(d.canonical, vec![-1; 4]);
        assert_eq!(d.div_y, vec![0, 0, 2, 3]);
        assert_eq!(d.div_x, vec![2, 3, 0, 0]);
        assert_eq!(divisor_data(&model(1, 1, &[1])).rays.len(), 2);
        let d = divisor_data(&model(3, 2, &[1, 1]));
        assert_eq!(d.rays.len(), 5);
        assert_eq!(d.rays[4], RayLabel::S(3));
    }

    #[test]
    fn rays_are_orthogonal_to_the_relation() {
        let m = model(3, 2, &[1, 2]);
        let v = m.relation_vector();
        assert!(ray_vectors(&m).iter().all(|r| r.dot(&v) == BigInt::from(0)));
    }

    #[test]
    fn section_examples() {
        let m = model(1, 1, &[2]);
        assert!(is_section(&m, &mono(1, 0, &[1]), &ratio(0, 1)).unwrap());
        assert!(!is_section(&m, &mono(0, 1, &[0]), &ratio(0, 1)).unwrap());
        let m = model(2, 2, &[2, 3]);
        assert!(is_section(&m, &mono(0, 1, &[1, 1]), &ratio(1, 2)).unwrap());
        assert!(is_section_by_divisors(&m, &mono(0, 1, &[1, 1]), &ratio(1, 2)).unwrap());
    }

    #[test]
    fn regrade_examples() {
        assert_eq!(regrade(&model(1, 1, &[2]), &mono(1, 0, &[0])).unwrap(), (ev(&[2]), 1));
        let m = model(2, 2, &[2, 3]);
        assert_eq!(regrade(&m, &mono(0, 3, &[1, 1])).unwrap(), (ev(&[1, 1]), -3));
        assert_eq!(regrade(&m, &mono(2, 0, &[0, 1])).unwrap(), (ev(&[4, 7]), 2));
        assert_eq!(unregrade(&m, &ev(&[4, 7]), 2).unwrap(), mono(2, 0, &[0, 1]));
    }

    #[test]
    fn snc_examples() {
        let m = model(1, 1, &[2]);
        assert!(!snc_multiplier_section(&m, &ev(&[2]), &ratio(1, 1)));
        assert!(snc_multiplier_section(&m, &ev(&[3]), &ratio(1, 1)));
        let m = model(2, 2, &[2, 3]);
        assert!(snc_multiplier_section(&m, &ev(&[1, 1]), &ratio(-5, 2)));
    }

    #[test]
    fn normal_form_rewrites_xy() {
        let m = model(2, 2, &[2, 3]);
        let n = LocalMonomial::normal_form(&m, 2, 1, ev(&[0, 1])).unwrap();
        assert_eq!(n, mono(1, 0, &[2, 4]));
        let v = m.relation_vector();
        let raw = ExponentVector::from_i64(&[2, 1, 0, 1]);
        assert_eq!(raw.sub(&n.exponent()), v);
    }

    #[test]
    fn local_identity_small() {
        let r = verify_local_decomposition(&model(2, 2, &[2, 3]), &ratio(5, 6), LocalBox::default(), Some((-4, 4)))
            .unwrap();
        assert!(r.overall);
        assert_eq!(r.inconclusive, Some(vec![]));
        let r = verify_local_decomposition(&model(1, 1, &[1]), &ratio(0, 1), LocalBox { deg: 2, c: 5 }, Some((-3, 3)))
            .unwrap();
        assert_eq!(r.inconclusive, Some(vec![-3, 3]));
    }

    #[test]
    fn model_json() {
        let m: LocalHypersurfaceModel = serde_json::from_str(r#"{"n":2,"m":2,"exps":[2,3]}"#).unwrap();
        assert_eq!(m, model(2, 2, &[2, 3]));
        assert!(serde_json::from_str::<LocalHypersurfaceModel>(r#"{"n":1,"m":2,"exps":[2,3]}"#).is_err());
    }
}
