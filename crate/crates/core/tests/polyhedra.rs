mod common;

use common::{box_points, dominated, dominated_int, q, qi, random_generators, rng, Q};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;
use reesmult::lattice::{
    dual_cone, lattice_points, newton_from_points, Cone, ExponentVector, LatticeBox, Polyhedron, RationalVector,
};
use reesmult::num::ratio;

fn ev(x: &[i64]) -> ExponentVector {
    ExponentVector::from_i64(x)
}

fn evs(rows: &[Vec<i64>]) -> Vec<ExponentVector> {
    rows.iter().map(|r| ev(r)).collect()
}

fn canonical_rays(c: &Cone) -> Vec<ExponentVector> {
    Cone::from_rays(c.rank(), c.rays().to_vec()).unwrap().with_facets().unwrap().rays().to_vec()
}

#[test]
fn oracle_sanity() {
    let g = vec![vec![2, 0], vec![0, 3]];
    assert!(dominated_int(&g, &qi(1), &[1, 2], false));
    assert!(!dominated_int(&g, &qi(1), &[1, 1], false));
    assert!(!dominated_int(&g, &qi(1), &[2, 0], true));
    assert!(dominated_int(&g, &q(5, 6), &[1, 2], true));
    assert!(!dominated_int(&g, &q(5, 6), &[1, 1], true));
}

#[test]
fn newton_facets_of_examples() {
    let p = newton_from_points(&evs(&[vec![2, 0], vec![0, 3]]), 2).unwrap();
    let f: Vec<(ExponentVector, Q)> = p.facets().iter().map(|h| (h.normal().clone(), h.threshold().clone())).collect();
    assert_eq!(f, vec![(ev(&[0, 1]), qi(0)), (ev(&[1, 0]), qi(0)), (ev(&[3, 2]), qi(6))]);
    let p = newton_from_points(&evs(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]), 3).unwrap();
    assert!(p.facets().iter().any(|h| h.normal() == &ev(&[1, 1, 1]) && h.threshold() == &qi(2)));
}

#[test]
fn newton_membership_matches_convex_combinations() {
    let mut r = rng(11);
    for _ in 0..40 {
        let nvars = r.gen_range(2..=3);
        let count = r.gen_range(1..=4);
        let gens = random_generators(&mut r, nvars, count, 4);
        let p = newton_from_points(&evs(&gens), nvars).unwrap();
        for m in box_points(nvars, 0, 5) {
            let x: Vec<Q> = m.iter().map(|&v| qi(v)).collect();
            let inside = p.contains(&RationalVector::new(x.clone()).unwrap());
            assert_eq!(inside, dominated(&gens, &qi(1), &x, false), "gens {gens:?} point {m:?}");
        }
    }
}

#[test]
fn rational_points_of_newton_polyhedra() {
    let gens = vec![vec![2, 0], vec![0, 3]];
    let p = newton_from_points(&evs(&gens), 2).unwrap();
    for a in 0..=12 {
        for b in 0..=12 {
            let x = vec![q(a, 4), q(b, 4)];
            assert_eq!(p.contains(&RationalVector::new(x.clone()).unwrap()), dominated(&gens, &qi(1), &x, false));
        }
    }
}

/// Integer points of `int(lambda * Newt)` computed by the kernel against the
/// convex-combination oracle.
fn check_interior(gens: &[Vec<i64>], lambda: &Q, hi: i64) {
    let nvars = gens[0].len();
    let p = newton_from_points(&evs(gens), nvars).unwrap();
    let system = p.scale(lambda).unwrap().strict_interior_system().unwrap();
    let b = LatticeBox::cube(nvars, 0, hi).unwrap();
    let got: Vec<Vec<i64>> = lattice_points(&system, &b)
        .unwrap()
        .iter()
        .map(|v| v.entries().iter().map(|x| x.try_into().unwrap()).collect())
        .collect();
    let want: Vec<Vec<i64>> = box_points(nvars, 0, hi)
        .into_iter()
        .filter(|m| dominated_int(gens, lambda, m, true))
        .collect();
    assert_eq!(got, want, "gens {gens:?} lambda {lambda}");
}

#[test]
fn interior_matches_oracle_on_random_scaled_polyhedra() {
    let mut r = rng(7);
    for i in 0..100 {
        let nvars = if i % 4 == 3 { 3 } else { 2 };
        let count = r.gen_range(1..=4);
        let gens = random_generators(&mut r, nvars, count, 4);
        let lambda = q(r.gen_range(0..=12), r.gen_range(1..=6));
        check_interior(&gens, &lambda, if nvars == 2 { 9 } else { 6 });
    }
}

#[test]
fn duality_is_an_involution() {
    let mut r = rng(3);
    for _ in 0..200 {
        let rank = r.gen_range(1..=4);
        let count = r.gen_range(1..=5);
        let rays: Vec<ExponentVector> = (0..count)
            .map(|_| ExponentVector::from_i64(&(0..rank).map(|_| r.gen_range(-3..=3)).collect::<Vec<_>>()))
            .collect();
        let c = Cone::from_rays(rank, rays.clone()).unwrap();
        let d = dual_cone(&c).unwrap();
        let dd = dual_cone(&d).unwrap();
        assert_eq!(canonical_rays(&dd), canonical_rays(&c), "rays {rays:?}");
        // the dual is exactly the set of points pairing nonnegatively with every input ray
        for m in box_points(rank, -2, 2) {
            let m = ev(&m);
            let direct = rays.iter().all(|v| v.dot(&m) >= BigInt::from(0));
            assert_eq!(d.contains(&m), direct, "rays {rays:?} point {m}");
        }
    }
}

/// A point in the relative interior of each facet satisfies every other
/// facet strictly, so no facet can be dropped.
#[test]
fn every_facet_is_needed() {
    let mut r = rng(5);
    for _ in 0..60 {
        let nvars = r.gen_range(2..=3);
        let count = r.gen_range(1..=4);
        let gens = random_generators(&mut r, nvars, count, 5);
        let p = newton_from_points(&evs(&gens), nvars).unwrap();
        let vertices = p.vertices().unwrap();
        let rays = p.recession().unwrap().rays();
        for (i, h) in p.facets().iter().enumerate() {
            let tight_v: Vec<&RationalVector> = vertices.iter().filter(|v| v.dot(h.normal()) == *h.threshold()).collect();
            let tight_r: Vec<&ExponentVector> = rays.iter().filter(|v| v.dot(h.normal()) == BigInt::from(0)).collect();
            assert!(!tight_v.is_empty());
            let mut x: Vec<Q> = vec![qi(0); nvars];
            for v in &tight_v {
                for (j, e) in v.entries().iter().enumerate() {
                    x[j] += e / qi(tight_v.len() as i64);
                }
            }
            for v in &tight_r {
                for (j, e) in v.entries().iter().enumerate() {
                    x[j] += Q::from_integer(e.clone());
                }
            }
            let x = RationalVector::new(x).unwrap();
            assert_eq!(x.dot(h.normal()), *h.threshold());
            for (k, other) in p.facets().iter().enumerate() {
                if k != i {
                    assert!(other.contains_strictly(&x), "gens {gens:?}: facet {k} not strict at facet {i}");
                }
            }
        }
    }
}

#[test]
fn scaling_by_zero_gives_the_recession_cone() {
    let p = newton_from_points(&evs(&[vec![2, 0], vec![0, 3]]), 2).unwrap();
    let z = p.scale(&ratio(0, 1)).unwrap();
    assert!(z.facets().iter().all(|h| h.threshold() == &qi(0)));
    assert_eq!(z.facets().len(), 2);
    assert!(p.scale(&ratio(-1, 2)).is_err());
}

#[test]
fn lower_dimensional_interior_is_refused() {
    let p = Polyhedron::from_facets(
        2,
        vec![
            reesmult::lattice::HalfSpace::new(ev(&[1, 0]), qi(0)).unwrap(),
            reesmult::lattice::HalfSpace::new(ev(&[-1, 0]), qi(0)).unwrap(),
        ],
    )
    .unwrap();
    assert!(p.strict_interior_system().is_err());
}

proptest! {
    #[test]
    fn scaling_composes(g in prop::collection::vec(prop::collection::vec(0i64..5, 2), 1..4),
                        a in 1i64..7, b in 1i64..7, d in 1i64..5) {
        prop_assume!(g.iter().all(|r| r.iter().any(|&x| x > 0)));
        let p = newton_from_points(&evs(&g), 2).unwrap();
        let (la, lb) = (ratio(a, d), ratio(b, d));
        let twice = p.scale(&la).unwrap().scale(&lb).unwrap();
        let once = p.scale(&(&la * &lb)).unwrap();
        prop_assert_eq!(twice.facets(), once.facets());
    }

    #[test]
    fn interior_points_are_inside(g in prop::collection::vec(prop::collection::vec(0i64..5, 2), 1..4),
                                  n in 0i64..12, d in 1i64..6) {
        prop_assume!(g.iter().all(|r| r.iter().any(|&x| x > 0)));
        let lambda = ratio(n, d);
        let p = newton_from_points(&evs(&g), 2).unwrap().scale(&lambda).unwrap();
        let s = p.strict_interior_system().unwrap();
        for m in lattice_points(&s, &LatticeBox::cube(2, 0, 8).unwrap()).unwrap() {
            prop_assert!(p.facets().iter().all(|h| h.contains_strictly(&m.to_rational())));
        }
    }

    #[test]
    fn double_dual_is_identity(rays in prop::collection::vec(prop::collection::vec(-3i64..4, 3), 1..5)) {
        let c = Cone::from_rays(3, evs(&rays)).unwrap();
        let dd = dual_cone(&dual_cone(&c).unwrap()).unwrap();
        prop_assert_eq!(canonical_rays(&dd), canonical_rays(&c));
    }
}
