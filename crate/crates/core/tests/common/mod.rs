//! Oracles shared by the integration tests. None of them call into the
//! polyhedral kernel of the crate.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Q = BigRational;

pub fn q(p: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(p), BigInt::from(d))
}

pub fn qi(p: i64) -> Q {
    BigRational::from_integer(BigInt::from(p))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `sum a_i t_i <= b`, or `< b` when strict.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Row {
    a: Vec<Q>,
    b: Q,
    strict: bool,
}

/// Projects the system onto its first `keep` variables by Fourier-Motzkin
/// elimination.
fn eliminate(mut rows: Vec<Row>, nvars: usize, keep: usize) -> Vec<Row> {
    for j in (keep..nvars).rev() {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for r in rows {
            if r.a[j].is_positive() {
                pos.push(r);
            } else if r.a[j].is_negative() {
                neg.push(r);
            } else {
                rest.push(r);
            }
        }
        for p in &pos {
            for n in &neg {
                let (cp, cn) = (-n.a[j].clone(), p.a[j].clone());
                let a: Vec<Q> = p.a.iter().zip(&n.a).map(|(x, y)| x * &cp + y * &cn).collect();
                rest.push(Row { a, b: &p.b * &cp + &n.b * &cn, strict: p.strict || n.strict });
            }
        }
        for r in &mut rest {
            r.a.truncate(j);
            // scale so duplicates collapse
            if let Some(s) = r.a.iter().find(|x| !x.is_zero()).map(|x| x.abs()) {
                r.a.iter_mut().for_each(|x| *x /= &s);
                r.b /= &s;
            }
        }
        rest.sort();
        rest.dedup();
        rows = rest;
    }
    rows
}

fn feasible(rows: Vec<Row>, nvars: usize) -> bool {
    eliminate(rows, nvars, 0)
        .iter()
        .all(|r| if r.strict { r.b.is_positive() } else { !r.b.is_negative() })
}

/// `max { lambda : x in lambda * (conv(gens) + orthant) }`, or `None` when
/// unbounded (a zero generator).
///
/// Writing `s_i = lambda t_i`, this maximizes `sum s_i` subject to
/// `s >= 0` and `sum s_i g_i <= x`.
pub fn newton_level(gens: &[Vec<i64>], x: &[i64]) -> Option<Q> {
    let r = gens.len();
    let vars = r + 1;
    let mut rows = Vec::new();
    let unit = |i: usize, c: i64| {
        let mut a = vec![Q::zero(); vars];
        a[i] = qi(c);
        a
    };
    for i in 1..vars {
        rows.push(Row { a: unit(i, -1), b: Q::zero(), strict: false });
    }
    for (j, xj) in x.iter().enumerate() {
        let mut a = vec![Q::zero(); vars];
        for i in 0..r {
            a[i + 1] = qi(gens[i][j]);
        }
        rows.push(Row { a, b: qi(*xj), strict: false });
    }
    let mut up = vec![qi(-1); vars];
    up[0] = qi(1);
    rows.push(Row { a: up.clone(), b: Q::zero(), strict: false });
    rows.push(Row { a: up.iter().map(|v| -v).collect(), b: Q::zero(), strict: false });
    eliminate(rows, vars, 1)
        .iter()
        .filter(|row| row.a[0].is_positive())
        .map(|row| &row.b / &row.a[0])
        .min()
}

/// Whether some point `p` of `lambda * conv(gens)` satisfies `p <= x`
/// coordinatewise (`p < x` when `strict`). With `strict = false` this is
/// membership of `x` in `lambda * (conv(gens) + orthant)`; with
/// `strict = true` it is membership in the interior.
pub fn dominated(gens: &[Vec<i64>], lambda: &Q, x: &[Q], strict: bool) -> bool {
    let r = gens.len();
    let n = x.len();
    let last = &gens[r - 1];
    let vars = r - 1;
    let mut rows = Vec::new();
    for i in 0..vars {
        let mut a = vec![Q::zero(); vars];
        a[i] = qi(-1);
        rows.push(Row { a, b: Q::zero(), strict: false });
    }
    rows.push(Row { a: vec![qi(1); vars], b: qi(1), strict: false });
    for j in 0..n {
        let a: Vec<Q> = (0..vars).map(|i| lambda * qi(gens[i][j] - last[j])).collect();
        rows.push(Row { a, b: &x[j] - lambda * qi(last[j]), strict });
    }
    feasible(rows, vars)
}

/// Integer version of [`dominated`].
pub fn dominated_int(gens: &[Vec<i64>], lambda: &Q, m: &[i64], strict: bool) -> bool {
    let x: Vec<Q> = m.iter().map(|&v| qi(v)).collect();
    dominated(gens, lambda, &x, strict)
}

/// All points of `[lo, hi]^n` in lexicographic order.
pub fn box_points(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (lo..=hi).map(move |v| {
                    let mut p = p.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out
}

/// A random generator list with entries in `[0, max]`, at least one nonzero.
pub fn random_generators(rng: &mut impl Rng, nvars: usize, count: usize, max: i64) -> Vec<Vec<i64>> {
    loop {
        let gens: Vec<Vec<i64>> = (0..count)
            .map(|_| (0..nvars).map(|_| rng.gen_range(0..=max)).collect())
            .collect();
        if gens.iter().all(|g| g.iter().any(|&x| x > 0)) {
            return gens;
        }
    }
}
