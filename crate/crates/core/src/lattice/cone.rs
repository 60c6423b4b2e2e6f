use serde::{Deserialize, Serialize};

use super::dd::{self, Generators};
use super::vector::{ExponentVector, HalfSpace, RationalVector};
use crate::error::{Error, Result};
use crate::num::Integer;

/// Largest rank accepted by dualization.
pub const MAX_DUAL_RANK: usize = 12;

/// A rational polyhedral cone.
///
/// `rays` is a generating set of primitive vectors; a contained line shows up
/// as a pair `r, -r`. `facets`, when present, is the irredundant homogeneous
/// H-representation (implicit equalities likewise appear as `w, -w` pairs).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cone {
    rank: usize,
    rays: Vec<ExponentVector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    facets: Option<Vec<HalfSpace>>,
}

fn to_rows(vs: &[ExponentVector]) -> Vec<Vec<Integer>> {
    vs.iter().map(|v| v.entries().to_vec()).collect()
}

fn from_rows(rows: Vec<Vec<Integer>>) -> Vec<ExponentVector> {
    rows.into_iter()
        .map(|r| ExponentVector::new(r).expect("rank >= 1"))
        .collect()
}

fn check_rank(rank: usize, vs: &[ExponentVector]) -> Result<()> {
    if rank == 0 {
        return Err(Error::domain("cone rank must be positive"));
    }
    if let Some(v) = vs.iter().find(|v| v.rank() != rank) {
        return Err(Error::domain(format!("vector {v} does not have rank {rank}")));
    }
    Ok(())
}

impl Cone {
    /// The cone generated by `rays`. Zero vectors are dropped, the rest are
    /// made primitive, sorted and deduplicated; redundant generators are kept.
    pub fn from_rays(rank: usize, rays: Vec<ExponentVector>) -> Result<Cone> {
        check_rank(rank, &rays)?;
        let mut rays: Vec<ExponentVector> = rays
            .iter()
            .filter(|r| !r.is_zero())
            .map(|r| r.primitive())
            .collect::<Result<_>>()?;
        rays.sort();
        rays.dedup();
        Ok(Cone { rank, rays, facets: None })
    }

    /// The cone `{x : <n, x> >= 0 for every n in normals}` with both
    /// representations populated.
    pub fn from_inequalities(rank: usize, normals: Vec<ExponentVector>) -> Result<Cone> {
        check_rank(rank, &normals)?;
        guard_rank(rank)?;
        let gens = dd::cone_generators(rank, &to_rows(&normals));
        let rays = from_rows(gens.as_ray_list());
        let facets = facets_from_generators(rank, &gens);
        Ok(Cone { rank, rays, facets: Some(facets) })
    }

    pub fn orthant(rank: usize) -> Cone {
        let normals = (0..rank).map(|i| ExponentVector::unit(rank, i)).collect();
        Cone::from_inequalities(rank, normals).expect("orthant is well formed")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rays(&self) -> &[ExponentVector] {
        &self.rays
    }

    pub fn facets(&self) -> Option<&[HalfSpace]> {
        self.facets.as_deref()
    }

    /// Fills in the irredundant facet list if it is missing.
    pub fn with_facets(mut self) -> Result<Cone> {
        if self.facets.is_none() {
            guard_rank(self.rank)?;
            let dual = dd::cone_generators(self.rank, &to_rows(&self.rays));
            let canonical_rays = dd::cone_generators(self.rank, &dual.as_ray_list());
            self.facets = Some(halfspaces(dual.as_ray_list()));
            self.rays = from_rows(canonical_rays.as_ray_list());
        }
        Ok(self)
    }

    /// Canonical generators (extreme rays plus lineality), computed from
    /// whichever representation is available.
    pub(crate) fn generators(&self) -> Generators {
        let dual = dd::cone_generators(self.rank, &to_rows(&self.rays));
        dd::cone_generators(self.rank, &dual.as_ray_list())
    }

    pub fn contains(&self, x: &ExponentVector) -> bool {
        self.contains_rational(&x.to_rational())
    }

    /// Membership via the H-representation, computing it when absent.
    pub fn contains_rational(&self, x: &RationalVector) -> bool {
        match &self.facets {
            Some(f) => f.iter().all(|h| h.contains(x)),
            None => {
                let dual = dd::cone_generators(self.rank, &to_rows(&self.rays));
                halfspaces(dual.as_ray_list()).iter().all(|h| h.contains(x))
            }
        }
    }

    /// Contains no line.
    pub fn is_strongly_convex(&self) -> bool {
        self.generators().lineality.is_empty()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.generators().dim() == self.rank
    }
}

fn guard_rank(rank: usize) -> Result<()> {
    if rank > MAX_DUAL_RANK {
        return Err(Error::Resource(format!(
            "cone rank {rank} exceeds the dualization limit {MAX_DUAL_RANK}"
        )));
    }
    Ok(())
}

fn halfspaces(rows: Vec<Vec<Integer>>) -> Vec<HalfSpace> {
    let mut hs: Vec<HalfSpace> = from_rows(rows)
        .into_iter()
        .map(|n| HalfSpace::homogeneous(n).expect("generators are nonzero"))
        .collect();
    hs.sort();
    hs
}

/// Facets of the cone with generators `gens`: the generators of its dual.
fn facets_from_generators(rank: usize, gens: &Generators) -> Vec<HalfSpace> {
    let dual = dd::cone_generators(rank, &gens.as_ray_list());
    halfspaces(dual.as_ray_list())
}

/// The dual cone `{m : <m, n> >= 0 for all n in c}` with rays and
/// irredundant facets populated.
pub fn dual_cone(c: &Cone) -> Result<Cone> {
    guard_rank(c.rank)?;
    let dual_gens = dd::cone_generators(c.rank, &to_rows(&c.rays));
    let rays = from_rows(dual_gens.as_ray_list());
    let facets = facets_from_generators(c.rank, &dual_gens);
    Ok(Cone { rank: c.rank, rays, facets: Some(facets) })
}
