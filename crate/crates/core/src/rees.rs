//! Toric models of the Rees algebra `S = R[at]` and the extended Rees algebra
//! `T = R[at, 1/t]` of a normal monomial ideal.
//!
//! Both live in rank `n + 1`, the last coordinate being the `t`-degree `k`.
//! For normal `a` the monomials `x^m t^k` of `T` are exactly the lattice
//! points of
//!
//! ```text
//! σ∨ = { m_i >= 0,  <w_j, m> - c_j k >= 0 for every Newton facet with c_j > 0 }
//! ```
//!
//! and `S` adds `k >= 0`. The rays `v_i` of `σ` are the facet normals of `σ∨`.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals::{multiplier_module, Ambient, MonomialIdeal, MonomialModule};
use crate::lattice::{
    compare_in_box, dual_cone, lattice_points, Cone, ExponentVector, LatticeBox, Polyhedron,
    ThresholdSystem,
};
use crate::num::{self, ceil, floor, Rational};
use crate::report::{
    DegreeEntry, PairOutcome, PairRationality, ReportBox, VerificationReport, CONVENTION,
};

/// Default `t`-degree range for the extended Rees comparison.
pub const DEFAULT_K_RANGE: (i64, i64) = (-3, 6);
/// Default range of `n` for the Rees comparison (`t`-degrees `n + 1`).
pub const DEFAULT_N_RANGE: (i64, i64) = (0, 5);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AlgebraKind {
    #[serde(rename = "REES")]
    Rees,
    #[serde(rename = "EXTENDED_REES")]
    ExtendedRees,
}

impl AlgebraKind {
    fn letter(self) -> &'static str {
        match self {
            AlgebraKind::Rees => "S",
            AlgebraKind::ExtendedRees => "T",
        }
    }
}

/// A Rees-type algebra as a normal affine semigroup ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GradedToricAlgebra {
    pub nvars: usize,
    pub ambient_rank: usize,
    pub kind: AlgebraKind,
    /// Facets of `σ∨`, all with threshold 0.
    pub cone: ThresholdSystem,
    /// Primitive rays of `σ`, in the order of `cone`'s constraints.
    pub rays: Vec<ExponentVector>,
    pub source_ideal: MonomialIdeal,
    #[serde(skip)]
    dual: Cone,
}

impl GradedToricAlgebra {
    /// Generators of `σ∨` (lines appear as `r, -r`).
    pub fn dual_rays(&self) -> &[ExponentVector] {
        self.dual.rays()
    }

    /// `x^m t^k` belongs to the algebra.
    pub fn contains(&self, m: &ExponentVector) -> bool {
        self.cone.contains(m)
    }

    /// `t^{-1}` in ambient coordinates.
    pub fn t_inverse(&self) -> ExponentVector {
        let mut e = vec![BigInt::from(0); self.ambient_rank];
        e[self.nvars] = BigInt::from(-1);
        ExponentVector::new(e).expect("positive rank")
    }

    /// Generators of `a` placed in `t`-degree 0, generating `a·S`.
    pub fn ideal_generators(&self) -> Vec<ExponentVector> {
        self.source_ideal
            .generators()
            .iter()
            .map(|g| g.extend(BigInt::from(0)))
            .collect()
    }
}

/// A monomial module over a [`GradedToricAlgebra`], in rank `n + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GradedModuleSpec {
    pub ambient_rank: usize,
    pub tag: String,
    pub system: ThresholdSystem,
}

fn not_normal(k: u32) -> Error {
    Error::domain(format!(
        "extended Rees algebra is not toric: ideal not normal (closure differs at power {k})"
    ))
}

fn build(a: &MonomialIdeal, kind: AlgebraKind) -> Result<GradedToricAlgebra> {
    if let Some(k) = a.normality_defect(None)? {
        return Err(not_normal(k));
    }
    let n = a.nvars();
    let rank = n + 1;
    let mut normals: Vec<ExponentVector> = (0..n).map(|i| ExponentVector::unit(rank, i)).collect();
    for h in a.newton()?.facets() {
        let c = h.threshold();
        if c.is_positive() {
            normals.push(h.normal().extend(-c.to_integer()));
        }
    }
    if kind == AlgebraKind::Rees {
        normals.push(ExponentVector::unit(rank, n));
    }
    let dual = Cone::from_inequalities(rank, normals)?;
    let rays = dual_cone(&dual)?.rays().to_vec();
    let cone = ThresholdSystem::new(rank, rays.iter().map(|r| (r.clone(), BigInt::from(0))))?;
    let rays = cone.normals();
    let algebra = GradedToricAlgebra { nvars: n, ambient_rank: rank, kind, cone, rays, source_ideal: a.clone(), dual };
    validate_slices(&algebra)?;
    Ok(algebra)
}

/// Checks that level `k` of the cone holds exactly the exponents of `a^k`
/// (all of the orthant for `k <= 0`).
fn validate_slices(alg: &GradedToricAlgebra) -> Result<()> {
    let a = &alg.source_ideal;
    let n = alg.nvars;
    let levels = match alg.kind {
        AlgebraKind::Rees => 0..=3,
        AlgebraKind::ExtendedRees => -2..=3,
    };
    let b = LatticeBox::cube(n, 0, a.max_entry() * 5 + 2)?;
    let all = lattice_points(&ThresholdSystem::unconstrained(n), &b)?;
    for k in levels {
        let slice = alg.cone.substitute_last(&BigInt::from(k))?;
        let expected: Vec<&ExponentVector> = if k <= 0 {
            all.iter().filter(|m| m.is_nonnegative()).collect()
        } else {
            let power = a.power(k)?;
            all.iter().filter(|m| power.contains(m)).collect()
        };
        let got = lattice_points(&slice, &b)?;
        if got.iter().ne(expected.iter().copied()) {
            return Err(Error::Invariant(format!(
                "level {k} of the {} cone does not match the exponents of a^{k}",
                alg.kind.letter()
            )));
        }
    }
    Ok(())
}

/// Cone model of `T = R[at, 1/t]`. Requires `a` normal.
pub fn extended_rees_cone(a: &MonomialIdeal) -> Result<GradedToricAlgebra> {
    build(a, AlgebraKind::ExtendedRees)
}

/// Cone model of `S = R[at]`. Requires `a` normal.
pub fn rees_cone(a: &MonomialIdeal) -> Result<GradedToricAlgebra> {
    build(a, AlgebraKind::Rees)
}

/// `ω_A`: lattice points in the interior of `σ∨`.
pub fn canonical_module(alg: &GradedToricAlgebra) -> GradedModuleSpec {
    let system = ThresholdSystem::new(alg.ambient_rank, alg.rays.iter().map(|r| (r.clone(), BigInt::from(1))))
        .expect("rays have the ambient rank");
    GradedModuleSpec { ambient_rank: alg.ambient_rank, tag: format!("OMEGA_{}", alg.kind.letter()), system }
}

/// Coefficients `<u, v_i>` of `div(x^u)` on the torus-invariant divisors, in
/// ray order.
pub fn principal_divisor_pairings(alg: &GradedToricAlgebra, u: &ExponentVector) -> Result<Vec<BigInt>> {
    if u.rank() != alg.ambient_rank {
        return Err(Error::domain(format!("monomial {u} does not have rank {}", alg.ambient_rank)));
    }
    let pairings: Vec<BigInt> = alg.rays.iter().map(|v| u.dot(v)).collect();
    if pairings.iter().any(Signed::is_negative) {
        return Err(Error::domain(format!("{u} is not a monomial of the algebra")));
    }
    Ok(pairings)
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

/// `J(ω_A, (x^u)^λ)`: per ray, `<m, v_i> >= 1 + floor(λ <u, v_i>)`.
pub fn multiplier_module_principal(
    alg: &GradedToricAlgebra,
    u: &ExponentVector,
    lambda: &Rational,
) -> Result<GradedModuleSpec> {
    check_lambda(lambda)?;
    let pairings = principal_divisor_pairings(alg, u)?;
    let system = ThresholdSystem::new(
        alg.ambient_rank,
        alg.rays.iter().zip(&pairings).map(|(v, p)| {
            (v.clone(), floor(&(lambda * Rational::from_integer(p.clone()))) + 1)
        }),
    )?;
    Ok(GradedModuleSpec {
        ambient_rank: alg.ambient_rank,
        tag: format!("MULT_{}({})", alg.kind.letter(), num::format_rational(lambda)),
        system,
    })
}

/// `J(ω_A, b^λ)` for the monomial ideal `b` of `A`: lattice points in the
/// interior of `λ·(conv(b) + σ∨)`.
pub fn multiplier_module_general(
    alg: &GradedToricAlgebra,
    b: &[ExponentVector],
    lambda: &Rational,
) -> Result<GradedModuleSpec> {
    check_lambda(lambda)?;
    if let Some(g) = b.iter().find(|g| g.rank() != alg.ambient_rank || !alg.contains(g)) {
        return Err(Error::domain(format!("generator {g} lies outside the cone of the algebra")));
    }
    let newt = Polyhedron::from_generators(alg.ambient_rank, b, alg.dual_rays())?;
    let system = newt.scale(lambda)?.strict_interior_system()?;
    Ok(GradedModuleSpec {
        ambient_rank: alg.ambient_rank,
        tag: format!("MULT_{}({})", alg.kind.letter(), num::format_rational(lambda)),
        system,
    })
}

/// The `t`-degree `k` slice of a graded module, over the base ring.
pub fn graded_piece(m: &GradedModuleSpec, k: i64) -> Result<MonomialModule> {
    let system = m.system.substitute_last(&BigInt::from(k))?;
    Ok(MonomialModule { nvars: m.ambient_rank - 1, system, ambient: Ambient::Omega })
}

/// `J(ω_R, a^{k+λ})`, read as `ω_R` when `k + λ <= 0`.
pub fn decomposition_rhs_t(a: &MonomialIdeal, lambda: &Rational, k: i64) -> Result<MonomialModule> {
    check_lambda(lambda)?;
    let mu = lambda + Rational::from_integer(BigInt::from(k));
    if mu.is_positive() {
        multiplier_module(a, &mu)
    } else {
        Ok(MonomialModule::omega(a.nvars()))
    }
}

/// `J(ω_R, a^{n+1+λ})`, the piece in `t`-degree `n + 1`.
pub fn decomposition_rhs_s(a: &MonomialIdeal, lambda: &Rational, n: i64) -> Result<MonomialModule> {
    if n < 0 {
        return Err(Error::domain(format!("n must be nonnegative, got {n}: the decomposition starts in t-degree 1")));
    }
    check_lambda(lambda)?;
    multiplier_module(a, &(lambda + Rational::from_integer(BigInt::from(n + 1))))
}

/// `c k + floor(λ c) + 1 == floor((k + λ) c) + 1`.
pub fn threshold_identity_holds(c: &BigInt, k: i64, lambda: &Rational) -> bool {
    let cq = Rational::from_integer(c.clone());
    let kq = Rational::from_integer(BigInt::from(k));
    c * k + floor(&(lambda * &cq)) == floor(&((kq + lambda) * cq))
}

/// Box `[0, U]^n` with `U = (max generator entry) * (k_max + ceil(λ) + 2) + 2`.
pub fn default_graded_box(a: &MonomialIdeal, lambda: &Rational, k_max: i64) -> Result<LatticeBox> {
    let lam = ceil(lambda).to_i64().unwrap_or(0).max(0);
    LatticeBox::cube(a.nvars(), 0, a.max_entry() * (k_max.max(0) + lam + 2) + 2)
}

fn check_range(lo: i64, hi: i64) -> Result<()> {
    if lo > hi {
        return Err(Error::domain(format!("empty range {lo}..{hi}")));
    }
    Ok(())
}

fn base_box(a: &MonomialIdeal, b: &LatticeBox) -> Result<()> {
    if b.rank() != a.nvars() {
        return Err(Error::domain(format!("box has rank {}, ideal has {} variables", b.rank(), a.nvars())));
    }
    Ok(())
}

/// Compares the graded pieces of `J(ω_T, (1/t)^λ)` with `J(ω_R, a^{k+λ})`
/// for every `k` in range, and checks the threshold identity on every
/// Newton facet.
pub fn verify_theorem_b_t(
    a: &MonomialIdeal,
    lambda: &Rational,
    k_range: Option<(i64, i64)>,
    bounds: Option<LatticeBox>,
) -> Result<VerificationReport> {
    check_lambda(lambda)?;
    let (lo, hi) = k_range.unwrap_or(DEFAULT_K_RANGE);
    check_range(lo, hi)?;
    let bounds = match bounds {
        Some(b) => b,
        None => default_graded_box(a, lambda, hi)?,
    };
    base_box(a, &bounds)?;
    let t = extended_rees_cone(a)?;
    let u = t.t_inverse();
    let lhs = multiplier_module_principal(&t, &u, lambda)?;

    let per_k = (lo..=hi)
        .into_par_iter()
        .map(|k| {
            let left = graded_piece(&lhs, k)?;
            let right = decomposition_rhs_t(a, lambda, k)?;
            let cmp = compare_in_box(&left.system, &right.system, &bounds)?;
            Ok(DegreeEntry::from_comparison(k, &cmp))
        })
        .collect::<Result<Vec<_>>>()?;

    let symbolic = symbolic_identity(a, &t, lambda, lo, hi)?;
    let overall = per_k.iter().all(|e| e.equal);
    Ok(VerificationReport {
        theorem: "B.2".into(),
        ideal: Some(a.clone()),
        model: None,
        lambda: lambda.clone(),
        k_range: [lo, hi],
        bounds: ReportBox::Lattice(bounds),
        convention: CONVENTION.into(),
        per_k,
        inconclusive: None,
        pairs: None,
        symbolic_identity: Some(symbolic),
        overall,
    })
}

/// Every Newton facet `(w, c)` with `c > 0` must appear as a ray `(w, -c)` of
/// `σ`, pair with `1/t` to `c`, and satisfy the threshold identity for all
/// `k` in range.
fn symbolic_identity(a: &MonomialIdeal, t: &GradedToricAlgebra, lambda: &Rational, lo: i64, hi: i64) -> Result<bool> {
    let u = t.t_inverse();
    for h in a.newton()?.facets() {
        let c = h.threshold().to_integer();
        if !c.is_positive() {
            continue;
        }
        let ray = h.normal().extend(-c.clone());
        if !t.rays.contains(&ray) || u.dot(&ray) != c {
            return Ok(false);
        }
        if !(lo..=hi).all(|k| threshold_identity_holds(&c, k, lambda)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An empty system of the given rank.
fn empty_system(rank: usize) -> ThresholdSystem {
    ThresholdSystem::new(rank, [(ExponentVector::zero(rank), BigInt::from(1))]).expect("valid")
}

/// Compares the graded pieces of `J(ω_S, (a·S)^λ)` in `t`-degree `n + 1`
/// with `J(ω_R, a^{n+1+λ})`, and checks that the degree-0 piece is empty.
pub fn verify_theorem_b_s(
    a: &MonomialIdeal,
    lambda: &Rational,
    n_range: Option<(i64, i64)>,
    bounds: Option<LatticeBox>,
) -> Result<VerificationReport> {
    check_lambda(lambda)?;
    let (lo, hi) = n_range.unwrap_or(DEFAULT_N_RANGE);
    check_range(lo, hi)?;
    if lo < 0 {
        return Err(Error::domain(format!("n must be nonnegative, got {lo}: the decomposition starts in t-degree 1")));
    }
    let bounds = match bounds {
        Some(b) => b,
        None => default_graded_box(a, lambda, hi + 1)?,
    };
    base_box(a, &bounds)?;
    let s = rees_cone(a)?;
    let lhs = multiplier_module_general(&s, &s.ideal_generators(), lambda)?;
    let degrees: Vec<i64> = std::iter::once(0).chain(lo + 1..=hi + 1).collect();

    let per_k = degrees
        .into_par_iter()
        .map(|k| {
            let left = graded_piece(&lhs, k)?;
            let right = if k == 0 {
                empty_system(a.nvars())
            } else {
                decomposition_rhs_s(a, lambda, k - 1)?.system
            };
            let cmp = compare_in_box(&left.system, &right, &bounds)?;
            Ok(DegreeEntry::from_comparison(k, &cmp))
        })
        .collect::<Result<Vec<_>>>()?;

    let overall = per_k.iter().all(|e| e.equal);
    Ok(VerificationReport {
        theorem: "B.1".into(),
        ideal: Some(a.clone()),
        model: None,
        lambda: lambda.clone(),
        k_range: [0, hi + 1],
        bounds: ReportBox::Lattice(bounds),
        convention: CONVENTION.into(),
        per_k,
        inconclusive: None,
        pairs: None,
        symbolic_identity: None,
        overall,
    })
}

/// Equality of two module systems: thresholdwise when their irredundant
/// normal sets coincide, else by enumeration in `bounds`.
pub fn modules_equal(lhs: &ThresholdSystem, rhs: &ThresholdSystem, bounds: &LatticeBox) -> Result<PairOutcome> {
    let (l, r) = (lhs.irredundant()?, rhs.irredundant()?);
    if !l.is_infeasible() && !r.is_infeasible() && l.normals() == r.normals() {
        return Ok(PairOutcome { rational: l == r, exact: true });
    }
    let cmp = compare_in_box(lhs, rhs, bounds)?;
    Ok(PairOutcome { rational: cmp.equal(), exact: false })
}

/// Box in rank `n + 1`: the base box times `k` in `[-3, 6]`.
fn ambient_box(a: &MonomialIdeal, lambda: &Rational) -> Result<LatticeBox> {
    let (lo, hi) = DEFAULT_K_RANGE;
    default_graded_box(a, lambda, hi)?.extend(lo, hi)
}

/// Whether `J(ω_A, (x^u)^λ) = ω_A`.
pub fn is_pair_rational(alg: &GradedToricAlgebra, u: &ExponentVector, lambda: &Rational, bounds: &LatticeBox) -> Result<bool> {
    let m = multiplier_module_principal(alg, u, lambda)?;
    Ok(modules_equal(&m.system, &canonical_module(alg).system, bounds)?.rational)
}

/// Computes pair rationality of `(R, a^λ)`, `(S, (a·S)^λ)` and
/// `(T, (1/t)^λ)` and checks `T <=> (R and S)`.
///
/// `bounds` is a base box in rank `n`; the `S` and `T` fallbacks extend it
/// by `k` in `[-3, 6]`.
pub fn verify_theorem_a(a: &MonomialIdeal, lambda: &Rational, bounds: Option<LatticeBox>) -> Result<VerificationReport> {
    check_lambda(lambda)?;
    let (lo, hi) = DEFAULT_K_RANGE;
    let bounds = match bounds {
        Some(b) => b,
        None => default_graded_box(a, lambda, hi)?,
    };
    base_box(a, &bounds)?;
    let wide = if bounds == default_graded_box(a, lambda, hi)? {
        ambient_box(a, lambda)?
    } else {
        bounds.extend(lo, hi)?
    };

    let omega_r = MonomialModule::omega(a.nvars());
    let j_r = multiplier_module(a, lambda)?;
    let base = modules_equal(&j_r.system, &omega_r.system, &bounds)?;

    let s = rees_cone(a)?;
    let j_s = multiplier_module_general(&s, &s.ideal_generators(), lambda)?;
    let rees = modules_equal(&j_s.system, &canonical_module(&s).system, &wide)?;

    let t = extended_rees_cone(a)?;
    let j_t = multiplier_module_principal(&t, &t.t_inverse(), lambda)?;
    let extended = modules_equal(&j_t.system, &canonical_module(&t).system, &wide)?;

    let pairs = PairRationality { base, rees, extended };
    Ok(VerificationReport {
        theorem: "A".into(),
        ideal: Some(a.clone()),
        model: None,
        lambda: lambda.clone(),
        k_range: [lo, hi],
        bounds: ReportBox::Lattice(bounds),
        convention: CONVENTION.into(),
        per_k: Vec::new(),
        inconclusive: None,
        pairs: Some(pairs),
        symbolic_identity: None,
        overall: pairs.biconditional(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::ratio;

    fn ev(x: &[i64]) -> ExponentVector {
        ExponentVector::from_i64(x)
    }

    fn m2() -> MonomialIdeal {
        MonomialIdeal::maximal(2).power(2).unwrap()
    }

    #[test]
    fn extended_rees_cone_of_square() {
        let t = extended_rees_cone(&m2()).unwrap();
        assert_eq!(t.cone.constraint_pairs(), vec![(ev(&[0, 1, 0]), 0), (ev(&[1, 0, 0]), 0), (ev(&[1, 1, -2]), 0)]);
        assert_eq!(t.rays, vec![ev(&[0, 1, 0]), ev(&[1, 0, 0]), ev(&[1, 1, -2])]);
    }

    #[test]
    fn rees_cone_of_maximal() {
        let s = rees_cone(&MonomialIdeal::maximal(2)).unwrap();
        assert_eq!(
            s.cone.constraint_pairs(),
            vec![(ev(&[0, 0, 1]), 0), (ev(&[0, 1, 0]), 0), (ev(&[1, 0, 0]), 0), (ev(&[1, 1, -1]), 0)]
        );
        let unit = rees_cone(&MonomialIdeal::unit(2)).unwrap();
        assert_eq!(unit.cone.constraint_pairs(), vec![(ev(&[0, 0, 1]), 0), (ev(&[0, 1, 0]), 0), (ev(&[1, 0, 0]), 0)]);
    }

    #[test]
    fn non_normal_is_refused() {
        let a = MonomialIdeal::from_rows(&[[2, 0], [0, 3]]).unwrap();
        assert_eq!(
            extended_rees_cone(&a).unwrap_err().to_string(),
            "extended Rees algebra is not toric: ideal not normal (closure differs at power 1)"
        );
    }

    #[test]
    fn pairings_of_t_inverse() {
        let t = extended_rees_cone(&MonomialIdeal::maximal(2)).unwrap();
        let p = principal_divisor_pairings(&t, &t.t_inverse()).unwrap();
        assert_eq!(p, vec![BigInt::from(0), BigInt::from(0), BigInt::from(1)]);
        assert!(principal_divisor_pairings(&t, &ev(&[0, 0, 1])).is_err());
        let s = rees_cone(&MonomialIdeal::maximal(2)).unwrap();
        assert!(principal_divisor_pairings(&s, &ev(&[1, 0, 1])).unwrap().iter().all(|x| !x.is_negative()));
    }

    #[test]
    fn principal_module_thresholds() {
        let t = extended_rees_cone(&m2()).unwrap();
        let j = multiplier_module_principal(&t, &t.t_inverse(), &ratio(1, 2)).unwrap();
        assert_eq!(j.system.constraint_pairs(), vec![(ev(&[0, 1, 0]), 1), (ev(&[1, 0, 0]), 1), (ev(&[1, 1, -2]), 2)]);
        let j = multiplier_module_principal(&t, &t.t_inverse(), &ratio(1, 1)).unwrap();
        assert_eq!(j.system.threshold_for(&ev(&[1, 1, -2])), Some(&BigInt::from(3)));
        let j0 = multiplier_module_principal(&t, &t.t_inverse(), &ratio(0, 1)).unwrap();
        assert_eq!(j0.system, canonical_module(&t).system);
    }

    #[test]
    fn general_module_of_rees_algebra() {
        let s = rees_cone(&MonomialIdeal::maximal(2)).unwrap();
        let j = multiplier_module_general(&s, &s.ideal_generators(), &ratio(1, 1)).unwrap();
        assert_eq!(
            j.system.constraint_pairs(),
            vec![(ev(&[0, 0, 1]), 1), (ev(&[0, 1, 0]), 1), (ev(&[1, 0, 0]), 1), (ev(&[1, 1, -1]), 2)]
        );
        let unit = multiplier_module_general(&s, &[ev(&[0, 0, 0])], &ratio(7, 3)).unwrap();
        assert_eq!(unit.system, canonical_module(&s).system);
    }

    #[test]
    fn principal_and_general_agree() {
        let t = extended_rees_cone(&m2()).unwrap();
        for lam in [ratio(0, 1), ratio(1, 3), ratio(1, 2), ratio(3, 2)] {
            let p = multiplier_module_principal(&t, &t.t_inverse(), &lam).unwrap();
            let g = multiplier_module_general(&t, &[t.t_inverse()], &lam).unwrap();
            assert_eq!(p.system.irredundant().unwrap(), g.system.irredundant().unwrap());
        }
    }

    #[test]
    fn graded_pieces() {
        let t = extended_rees_cone(&m2()).unwrap();
        let j = multiplier_module_principal(&t, &t.t_inverse(), &ratio(1, 2)).unwrap();
        let g = graded_piece(&j, 0).unwrap();
        assert_eq!(g.system.constraint_pairs(), vec![(ev(&[0, 1]), 1), (ev(&[1, 0]), 1), (ev(&[1, 1]), 2)]);
    }

    #[test]
    fn decomposition_sides() {
        let a = m2();
        let r = decomposition_rhs_t(&a, &ratio(0, 1), 2).unwrap();
        assert_eq!(r.system.threshold_for(&ev(&[1, 1])), Some(&BigInt::from(5)));
        let r = decomposition_rhs_t(&a, &ratio(1, 2), 1).unwrap();
        assert_eq!(r.system.threshold_for(&ev(&[1, 1])), Some(&BigInt::from(4)));
        assert_eq!(decomposition_rhs_t(&a, &ratio(1, 2), -1).unwrap(), MonomialModule::omega(2));
        let r = decomposition_rhs_s(&a, &ratio(1, 2), 0).unwrap();
        assert_eq!(r.system.threshold_for(&ev(&[1, 1])), Some(&BigInt::from(4)));
        assert!(decomposition_rhs_s(&a, &ratio(0, 1), -1).is_err());
    }

    #[test]
    fn threshold_identity() {
        assert!(threshold_identity_holds(&BigInt::from(6), -3, &ratio(5, 6)));
        assert!(threshold_identity_holds(&BigInt::from(2), 4, &ratio(1, 3)));
    }

    #[test]
    fn theorem_b_small() {
        let r = verify_theorem_b_t(&MonomialIdeal::maximal(2), &ratio(1, 3), Some((-2, 5)), None).unwrap();
        assert!(r.overall);
        assert_eq!(r.symbolic_identity, Some(true));
        assert_eq!(r.per_k.len(), 8);
        let r = verify_theorem_b_s(&MonomialIdeal::maximal(2), &ratio(0, 1), None, None).unwrap();
        assert!(r.overall);
        assert_eq!(r.per_k[0].k, 0);
        assert_eq!(r.per_k[0].lhs_count, 0);
    }

    #[test]
    fn theorem_a_examples() {
        let r = verify_theorem_a(&m2(), &ratio(1, 2), None).unwrap();
        let p = r.pairs.unwrap();
        assert!(!p.extended.rational);
        assert!(p.base.rational);
        assert!(!p.rees.rational);
        assert!(r.overall);
        let r = verify_theorem_a(&MonomialIdeal::maximal(2), &ratio(1, 4), None).unwrap();
        let p = r.pairs.unwrap();
        assert!(p.base.rational && p.rees.rational && p.extended.rational);
    }
}
