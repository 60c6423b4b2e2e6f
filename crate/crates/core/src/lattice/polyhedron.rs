use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::cone::Cone;
use super::dd;
use super::system::ThresholdSystem;
use super::vector::{ExponentVector, HalfSpace, RationalVector};
use crate::error::{Error, Result};
use crate::num::{self, floor, Integer, Rational};

/// A rational polyhedron `{x : <w, x> >= c for every facet}`.
///
/// `vertices` and `recession` are filled in by [`Polyhedron::irredundant_facets`]
/// (and by every constructor that calls it); when both are present the
/// polyhedron equals `conv(vertices) + recession`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polyhedron {
    rank: usize,
    facets: Vec<HalfSpace>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<RationalVector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    recession: Option<Cone>,
}

fn homogenize(h: &HalfSpace) -> Vec<Integer> {
    let t = h.threshold();
    let d = t.denom().clone();
    let mut row: Vec<Integer> = h.normal().entries().iter().map(|w| w * &d).collect();
    row.push(-t.numer().clone());
    row
}

fn last_is_one(rank: usize) -> Vec<Integer> {
    let mut v = vec![BigInt::zero(); rank + 1];
    v[rank] = BigInt::one();
    v
}

impl Polyhedron {
    /// Wraps a facet list as given; nothing is checked beyond ranks.
    pub fn from_facets(rank: usize, facets: Vec<HalfSpace>) -> Result<Polyhedron> {
        if rank == 0 {
            return Err(Error::domain("polyhedron rank must be positive"));
        }
        if let Some(h) = facets.iter().find(|h| h.normal().rank() != rank) {
            return Err(Error::domain(format!(
                "facet normal {} does not have rank {rank}",
                h.normal()
            )));
        }
        Ok(Polyhedron { rank, facets, vertices: None, recession: None })
    }

    /// `conv(points) + cone(rays)`, where a line in the recession cone is
    /// given as the pair `r, -r`. The result has irredundant facets.
    pub fn from_generators(
        rank: usize,
        points: &[ExponentVector],
        rays: &[ExponentVector],
    ) -> Result<Polyhedron> {
        if points.is_empty() {
            return Err(Error::domain("a polyhedron needs at least one point"));
        }
        if let Some(v) = points.iter().chain(rays).find(|v| v.rank() != rank) {
            return Err(Error::domain(format!("vector {v} does not have rank {rank}")));
        }
        // homogenizing cone C = cone{(p, 1), (r, 0)}; its dual's rays are the
        // facets (w, -c) of P plus the face at infinity (0, ..., 0, 1)
        let mut gens: Vec<Vec<Integer>> = points
            .iter()
            .map(|p| p.extend(BigInt::one()).into_entries())
            .collect();
        gens.extend(rays.iter().map(|r| r.extend(BigInt::zero()).into_entries()));
        let dual = dd::cone_generators(rank + 1, &gens);
        let mut facets = Vec::new();
        let mut push = |row: &[Integer]| -> Result<()> {
            let (w, last) = row.split_at(rank);
            if w.iter().all(Zero::is_zero) {
                return Ok(());
            }
            let normal = ExponentVector::new(w.to_vec())?;
            facets.push(HalfSpace::new(normal, BigRational::from_integer(-&last[0]))?);
            Ok(())
        };
        for r in &dual.rays {
            push(r)?;
        }
        for l in &dual.lineality {
            push(l)?;
            push(&l.iter().map(|x| -x).collect::<Vec<_>>())?;
        }
        Polyhedron::from_facets(rank, facets)?.irredundant_facets()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn facets(&self) -> &[HalfSpace] {
        &self.facets
    }

    pub fn vertices(&self) -> Option<&[RationalVector]> {
        self.vertices.as_deref()
    }

    pub fn recession(&self) -> Option<&Cone> {
        self.recession.as_ref()
    }

    pub fn contains(&self, x: &RationalVector) -> bool {
        self.facets.iter().all(|h| h.contains(x))
    }

    fn homogenized_generators(&self) -> dd::Generators {
        let mut rows: Vec<Vec<Integer>> = self.facets.iter().map(homogenize).collect();
        rows.push(last_is_one(self.rank));
        dd::cone_generators(self.rank + 1, &rows)
    }

    /// Whether the polyhedron has a rational interior point.
    pub fn is_full_dimensional(&self) -> bool {
        self.homogenized_generators().dim() == self.rank + 1
    }

    /// Minimal facet list for the same point set, with vertices and the
    /// recession cone populated. Facets are sorted by (normal, threshold).
    pub fn irredundant_facets(&self) -> Result<Polyhedron> {
        let gens = self.homogenized_generators();
        if gens.dim() != self.rank + 1 {
            return Err(Error::domain("interior undefined: not full-dimensional"));
        }
        let mut kept: Vec<HalfSpace> = Vec::new();
        for h in &self.facets {
            let row = homogenize(h);
            if dd::rank(&gens.tight_on(&row)) == self.rank && !kept.contains(h) {
                kept.push(h.clone());
            }
        }
        kept.sort();

        let mut vertices = Vec::new();
        let mut rec_rays = Vec::new();
        for r in &gens.rays {
            let s = &r[self.rank];
            if s.is_positive() {
                let q: Vec<Rational> = r[..self.rank]
                    .iter()
                    .map(|x| BigRational::new(x.clone(), s.clone()))
                    .collect();
                vertices.push(RationalVector::new(q)?);
            } else {
                rec_rays.push(ExponentVector::new(r[..self.rank].to_vec())?);
            }
        }
        for l in &gens.lineality {
            let v = ExponentVector::new(l[..self.rank].to_vec())?;
            rec_rays.push(v.neg());
            rec_rays.push(v);
        }
        vertices.sort();
        let recession = Cone::from_rays(self.rank, rec_rays)?;
        Ok(Polyhedron {
            rank: self.rank,
            facets: kept,
            vertices: Some(vertices),
            recession: Some(recession),
        })
    }

    /// `lambda * P`: thresholds and vertices are multiplied by `lambda`,
    /// normals and the recession cone are unchanged. `lambda = 0` yields the
    /// recession cone.
    pub fn scale(&self, lambda: &Rational) -> Result<Polyhedron> {
        if lambda.is_negative() {
            return Err(Error::domain(format!(
                "scaling factor must be nonnegative, got {}",
                num::format_rational(lambda)
            )));
        }
        let facets: Vec<HalfSpace> = self
            .facets
            .iter()
            .map(|h| h.with_threshold(h.threshold() * lambda))
            .collect();
        if lambda.is_zero() {
            let raw = Polyhedron::from_facets(self.rank, facets)?;
            return Ok(raw.irredundant_facets().unwrap_or(raw));
        }
        Ok(Polyhedron {
            rank: self.rank,
            facets,
            vertices: self
                .vertices
                .as_ref()
                .map(|vs| vs.iter().map(|v| v.scale(lambda)).collect()),
            recession: self.recession.clone(),
        })
    }

    /// Integer description of the lattice points in the topological interior:
    /// each irredundant facet `<w, x> >= c` becomes `<w, m> >= floor(c) + 1`.
    pub fn strict_interior_system(&self) -> Result<ThresholdSystem> {
        let p = self.irredundant_facets()?;
        ThresholdSystem::new(
            self.rank,
            p.facets
                .iter()
                .map(|h| (h.normal().clone(), floor(h.threshold()) + 1)),
        )
    }
}

/// `conv(points) + nonnegative orthant` with irredundant integer facets.
pub fn newton_from_points(points: &[ExponentVector], rank: usize) -> Result<Polyhedron> {
    if points.is_empty() {
        return Err(Error::domain("zero ideal has no Newton polyhedron"));
    }
    if let Some(p) = points.iter().find(|p| !p.is_nonnegative()) {
        return Err(Error::domain(format!("exponent vector {p} has a negative entry")));
    }
    let orthant: Vec<ExponentVector> = (0..rank).map(|i| ExponentVector::unit(rank, i)).collect();
    let p = Polyhedron::from_generators(rank, points, &orthant)?;
    debug_assert!(p.facets.iter().all(|h| h.threshold().is_integer()));
    Ok(p)
}
