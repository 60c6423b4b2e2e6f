//! Double description of homogeneous cones `{x : A x >= 0}`.
//!
//! The cone is built incrementally, one inequality at a time, starting from
//! the whole space. Generators are kept as a lineality basis plus the
//! extreme rays of the pointed quotient; each ray carries the set of
//! processed inequalities it makes tight, which drives the combinatorial
//! adjacency test. All arithmetic is over unbounded integers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::num::{dot, make_primitive, Integer};

/// Generators of a cone: `lineality` spans the largest contained subspace and
/// `rays` are the extreme rays modulo that subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Generators {
    pub lineality: Vec<Vec<Integer>>,
    pub rays: Vec<Vec<Integer>>,
}

impl Generators {
    pub fn dim(&self) -> usize {
        let all: Vec<Vec<Integer>> = self.lineality.iter().chain(&self.rays).cloned().collect();
        rank(&all)
    }

    /// Rays and both orientations of each lineality vector, sorted.
    pub fn as_ray_list(&self) -> Vec<Vec<Integer>> {
        let mut out = self.rays.clone();
        for l in &self.lineality {
            out.push(l.clone());
            out.push(l.iter().map(|x| -x).collect());
        }
        out.sort();
        out.dedup();
        out
    }

    /// Every generator, including lineality vectors, tight on `a`.
    pub fn tight_on(&self, a: &[Integer]) -> Vec<Vec<Integer>> {
        self.lineality
            .iter()
            .chain(&self.rays)
            .filter(|g| dot(a, g).is_zero())
            .cloned()
            .collect()
    }
}

#[derive(Clone)]
struct Ray {
    v: Vec<Integer>,
    // sorted indices of processed constraints with <a, v> = 0
    tight: Vec<usize>,
}

fn unit(dim: usize, i: usize) -> Vec<Integer> {
    let mut v = vec![BigInt::zero(); dim];
    v[i] = BigInt::one();
    v
}

fn combine(c1: &Integer, v1: &[Integer], c2: &Integer, v2: &[Integer]) -> Vec<Integer> {
    let mut out: Vec<Integer> = v1.iter().zip(v2).map(|(a, b)| c1 * a - c2 * b).collect();
    make_primitive(&mut out);
    out
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn is_subset_sorted(small: &[usize], big: &[usize]) -> bool {
    let mut j = 0;
    for x in small {
        while j < big.len() && big[j] < *x {
            j += 1;
        }
        if j == big.len() || big[j] != *x {
            return false;
        }
        j += 1;
    }
    true
}

/// Generators of `{x in Q^dim : <a, x> >= 0 for every a in constraints}`,
/// returned in canonical form (see [`canonicalize`]).
pub(crate) fn cone_generators(dim: usize, constraints: &[Vec<Integer>]) -> Generators {
    let mut lineality: Vec<Vec<Integer>> = (0..dim).map(|i| unit(dim, i)).collect();
    let mut rays: Vec<Ray> = Vec::new();
    let mut processed: Vec<usize> = Vec::new();

    for (idx, a) in constraints.iter().enumerate() {
        debug_assert_eq!(a.len(), dim);
        if a.iter().all(Zero::is_zero) {
            continue;
        }
        if let Some(pos) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l0 = lineality.swap_remove(pos);
            let mut d0 = dot(a, &l0);
            if d0.is_negative() {
                l0.iter_mut().for_each(|x| *x = -&*x);
                d0 = -d0;
            }
            for l in lineality.iter_mut() {
                let s = dot(a, l);
                if !s.is_zero() {
                    *l = combine(&d0, l, &s, &l0);
                }
            }
            for r in rays.iter_mut() {
                let s = dot(a, &r.v);
                if !s.is_zero() {
                    r.v = combine(&d0, &r.v, &s, &l0);
                }
                r.tight.push(idx);
            }
            rays.push(Ray { v: l0, tight: processed.clone() });
        } else {
            let values: Vec<Integer> = rays.iter().map(|r| dot(a, &r.v)).collect();
            let pointed_dim = dim - lineality.len();
            let mut next: Vec<Ray> = Vec::with_capacity(rays.len());
            for (r, s) in rays.iter().zip(&values) {
                if !s.is_negative() {
                    let mut r = r.clone();
                    if s.is_zero() {
                        r.tight.push(idx);
                    }
                    next.push(r);
                }
            }
            let positive: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
            let negative: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
            for &i in &positive {
                for &j in &negative {
                    let common = intersect_sorted(&rays[i].tight, &rays[j].tight);
                    if common.len() + 2 < pointed_dim {
                        continue;
                    }
                    let blocked = rays.iter().enumerate().any(|(r_idx, r)| {
                        r_idx != i && r_idx != j && is_subset_sorted(&common, &r.tight)
                    });
                    if blocked {
                        continue;
                    }
                    // values[i] > 0 > values[j]; the combination is tight on a
                    let v = combine(&values[i], &rays[j].v, &values[j], &rays[i].v);
                    let mut tight = common;
                    tight.push(idx);
                    next.push(Ray { v, tight });
                }
            }
            rays = next;
        }
        processed.push(idx);
    }

    canonicalize(Generators { lineality, rays: rays.into_iter().map(|r| r.v).collect() })
}

/// Puts generators in a unique form: the lineality basis becomes the
/// primitive integer rows of its reduced echelon form, every ray is reduced
/// modulo lineality so that it vanishes on the pivot columns, and both lists
/// are sorted.
pub(crate) fn canonicalize(g: Generators) -> Generators {
    let basis = reduced_echelon(&g.lineality);
    let mut rays: Vec<Vec<Integer>> = g
        .rays
        .into_iter()
        .filter_map(|r| {
            let mut q: Vec<BigRational> = r.iter().map(|x| BigRational::from_integer(x.clone())).collect();
            for (pivot, row) in &basis {
                let c = q[*pivot].clone();
                if !c.is_zero() {
                    for (x, y) in q.iter_mut().zip(row) {
                        *x -= &c * y;
                    }
                }
            }
            let v = clear_denominators(&q);
            (!v.iter().all(Zero::is_zero)).then_some(v)
        })
        .collect();
    rays.sort();
    rays.dedup();
    let mut lineality: Vec<Vec<Integer>> =
        basis.iter().map(|(_, row)| clear_denominators(row)).collect();
    lineality.sort();
    Generators { lineality, rays }
}

fn clear_denominators(q: &[BigRational]) -> Vec<Integer> {
    let l = crate::num::common_denominator(q.iter());
    let mut v: Vec<Integer> = q.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect();
    make_primitive(&mut v);
    v
}

/// Reduced row echelon form over the rationals; each row is paired with its
/// pivot column and normalized to have pivot entry 1.
fn reduced_echelon(rows: &[Vec<Integer>]) -> Vec<(usize, Vec<BigRational>)> {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots.into_iter().zip(m).collect()
}

/// Rank of a list of integer vectors.
pub(crate) fn rank(rows: &[Vec<Integer>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    // fraction-free elimination
    let mut m: Vec<Vec<Integer>> = rows.to_vec();
    let ncols = m[0].len();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot_row = m[r].clone();
        for row in m.iter_mut().skip(r + 1) {
            if !row[c].is_zero() {
                let f = row[c].clone();
                let mut new_row = combine(&pivot_row[c], row, &f, &pivot_row);
                std::mem::swap(row, &mut new_row);
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> Vec<Integer> {
        x.iter().map(|&a| BigInt::from(a)).collect()
    }

    #[test]
    fn whole_space_has_full_lineality() {
        let g = cone_generators(3, &[]);
        assert_eq!(g.lineality.len(), 3);
        assert!(g.rays.is_empty());
    }

    #[test]
    fn orthant_has_unit_rays() {
        let g = cone_generators(2, &[v(&[1, 0]), v(&[0, 1])]);
        assert!(g.lineality.is_empty());
        assert_eq!(g.rays, vec![v(&[0, 1]), v(&[1, 0])]);
    }

    #[test]
    fn half_plane_keeps_a_line() {
        let g = cone_generators(2, &[v(&[1, 0])]);
        assert_eq!(g.lineality, vec![v(&[0, 1])]);
        assert_eq!(g.rays, vec![v(&[1, 0])]);
        assert_eq!(g.as_ray_list(), vec![v(&[0, -1]), v(&[0, 1]), v(&[1, 0])]);
    }

    #[test]
    fn redundant_inequalities_do_not_add_rays() {
        let g = cone_generators(2, &[v(&[1, 0]), v(&[0, 1]), v(&[1, 1])]);
        assert_eq!(g.rays, vec![v(&[0, 1]), v(&[1, 0])]);
    }

    #[test]
    fn square_pyramid_rays() {
        // cone over the square with vertices (+-1, +-1, 1)
        let normals = [v(&[1, 0, 1]), v(&[-1, 0, 1]), v(&[0, 1, 1]), v(&[0, -1, 1])];
        let g = cone_generators(3, &normals);
        assert_eq!(
            g.rays,
            vec![v(&[-1, -1, 1]), v(&[-1, 1, 1]), v(&[1, -1, 1]), v(&[1, 1, 1])]
        );
    }

    #[test]
    fn infeasible_cone_is_origin() {
        let g = cone_generators(1, &[v(&[1]), v(&[-1])]);
        assert!(g.rays.is_empty() && g.lineality.is_empty());
        assert_eq!(g.dim(), 0);
    }

    #[test]
    fn rank_counts_independent_rows() {
        assert_eq!(rank(&[v(&[1, 2]), v(&[2, 4])]), 1);
        assert_eq!(rank(&[v(&[1, 2, 0]), v(&[0, 1, 1]), v(&[1, 3, 1])]), 2);
        assert_eq!(rank(&[v(&[0, 0])]), 0);
    }
}
