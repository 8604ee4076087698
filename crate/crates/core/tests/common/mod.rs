//! Seeded generators and independent oracles shared by the integration and
//! acceptance tests.
#![allow(dead_code)]

use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use starfan::arith::{int, Rational};
use starfan::complexes::VertexSet;
use starfan::{FundamentalSet, Realization, SimplicialComplex, StudiableSystem, VectorConfiguration};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn int_vec(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

fn random_point(rng: &mut ChaCha8Rng, dim: usize, lo: i64, hi: i64) -> Vec<i64> {
    (0..dim).map(|_| rng.gen_range(lo..=hi)).collect()
}

/// `n` integer points in `Q^dim` that span, entries in `[lo, hi]`.
pub fn random_spanning_config(
    rng: &mut ChaCha8Rng,
    dim: usize,
    n: usize,
    lo: i64,
    hi: i64,
) -> VectorConfiguration {
    assert!(n >= dim);
    loop {
        let points = (0..n).map(|_| int_vec(&random_point(rng, dim, lo, hi))).collect();
        let x = VectorConfiguration::new(dim, points).unwrap();
        if x.rank() == dim {
            return x;
        }
    }
}

fn all_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// All `k`-subsets of `1..=n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<VertexSet> {
    all_subsets(n, k)
        .into_iter()
        .map(|s| s.into_iter().collect())
        .collect()
}

/// Exact angular order around the origin, starting from the positive x-axis.
fn angular_cmp(a: &[i64], b: &[i64]) -> Ordering {
    let half = |p: &[i64]| if p[1] > 0 || (p[1] == 0 && p[0] > 0) { 0 } else { 1 };
    half(a).cmp(&half(b)).then_with(|| {
        let cross = a[0] * b[1] - a[1] * b[0];
        0.cmp(&cross)
    })
}

fn cycle_facets(labels: &[usize]) -> Vec<Vec<usize>> {
    let k = labels.len();
    (0..k).map(|i| vec![labels[i], labels[(i + 1) % k]]).collect()
}

/// Points around a center `c`, angularly sorted about `c`, coordinates in
/// `[-4, 4]`.
fn star_polygon(rng: &mut ChaCha8Rng, k: usize) -> Vec<Vec<i64>> {
    let c = random_point(rng, 2, -1, 1);
    let mut offsets: Vec<Vec<i64>> = Vec::new();
    while offsets.len() < k {
        let v = random_point(rng, 2, -3, 3);
        if v.iter().any(|&x| x != 0) {
            offsets.push(v);
        }
    }
    offsets.sort_by(|a, b| angular_cmp(a, b));
    offsets
        .into_iter()
        .map(|v| vec![v[0] + c[0], v[1] + c[1]])
        .collect()
}

fn build(facets: Vec<Vec<usize>>, points: Vec<Vec<i64>>) -> Option<Realization> {
    let n = points.len();
    let complex = SimplicialComplex::closure(facets, n).ok()?;
    let d = complex.dimension();
    if d < 0 || !complex.is_pure() || points[0].len() != d as usize + 1 {
        return None;
    }
    let pts: Vec<Vec<Rational>> = points.iter().map(|p| int_vec(p)).collect();
    let r = Realization::new(complex, pts, None).ok()?;
    let config = VectorConfiguration::new(r.ambient_dim(), r.points().to_vec()).ok()?;
    (config.rank() == r.ambient_dim()).then_some(r)
}

/// Relabels vertices by a random permutation.
fn shuffled(rng: &mut ChaCha8Rng, facets: Vec<Vec<usize>>, points: Vec<Vec<i64>>) -> (Vec<Vec<usize>>, Vec<Vec<i64>>) {
    let n = points.len();
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(rng);
    let mut new_points = vec![Vec::new(); n];
    for (old, p) in points.into_iter().enumerate() {
        new_points[perm[old] - 1] = p;
    }
    let facets = facets
        .into_iter()
        .map(|f| f.into_iter().map(|v| perm[v - 1]).collect())
        .collect();
    (facets, new_points)
}

fn drop_facets(rng: &mut ChaCha8Rng, facets: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let keep: Vec<Vec<usize>> = facets.iter().filter(|_| rng.gen_bool(0.7)).cloned().collect();
    if keep.is_empty() {
        vec![facets[0].clone()]
    } else {
        keep
    }
}

/// A realization with `d <= 2`, `n <= 8`, integer coordinates in `[-4, 4]`
/// and spanning points. The mix covers arbitrary pure complexes, polygons
/// and bipyramids around a point near the origin, octahedron variants, and
/// facet subsets of these.
pub fn random_realization(rng: &mut ChaCha8Rng) -> Realization {
    loop {
        let kind = rng.gen_range(0..6);
        let (mut facets, points) = match kind {
            0 => {
                let d = rng.gen_range(1..=2usize);
                let n = rng.gen_range(d + 2..=8);
                let candidates = all_subsets(n, d + 1);
                let count = rng.gen_range(1..=candidates.len().min(10));
                let facets: Vec<Vec<usize>> =
                    candidates.choose_multiple(rng, count).cloned().collect();
                let points = (0..n).map(|_| random_point(rng, d + 1, -4, 4)).collect();
                (facets, points)
            }
            1 | 2 => {
                let k = rng.gen_range(3..=8usize);
                let points = star_polygon(rng, k);
                let labels: Vec<usize> = (1..=k).collect();
                (cycle_facets(&labels), points)
            }
            3 => {
                let k = rng.gen_range(3..=6usize);
                let mut points: Vec<Vec<i64>> =
                    star_polygon(rng, k).into_iter().map(|p| vec![p[0], p[1], 0]).collect();
                let tilt = |rng: &mut ChaCha8Rng, p: &mut Vec<i64>| {
                    p[2] += rng.gen_range(-1..=1);
                };
                for p in points.iter_mut() {
                    tilt(rng, p);
                }
                points.push(vec![rng.gen_range(-1..=1), rng.gen_range(-1..=1), rng.gen_range(1..=4)]);
                points.push(vec![rng.gen_range(-1..=1), rng.gen_range(-1..=1), -rng.gen_range(1..=4)]);
                let (top, bottom) = (k + 1, k + 2);
                let mut facets = Vec::new();
                for i in 1..=k {
                    let j = i % k + 1;
                    facets.push(vec![i, j, top]);
                    facets.push(vec![i, j, bottom]);
                }
                (facets, points)
            }
            4 => {
                let mut points = Vec::new();
                for sign in [1, -1] {
                    for axis in 0..3 {
                        let mut p: Vec<i64> = (0..3).map(|_| rng.gen_range(-1..=1)).collect();
                        p[axis] = sign * rng.gen_range(1..=4);
                        points.push(p);
                    }
                }
                let mut facets = Vec::new();
                for a in [1, 4] {
                    for b in [2, 5] {
                        for c in [3, 6] {
                            facets.push(vec![a, b, c]);
                        }
                    }
                }
                (facets, points)
            }
            _ => {
                let k = rng.gen_range(3..=7usize);
                let points = star_polygon(rng, k);
                let labels: Vec<usize> = (1..=k).collect();
                (drop_facets(rng, cycle_facets(&labels)), points)
            }
        };
        if kind != 5 && rng.gen_bool(0.15) {
            facets = drop_facets(rng, facets);
        }
        let (facets, points) = shuffled(rng, facets, points);
        if let Some(r) = build(facets, points) {
            return r;
        }
    }
}

/// A random pair `(ℰ, Λ)` with `M <= m_max`, `n <= n_max` and entries of
/// `Λ` in `[-bound, bound]`. (gen) is not guaranteed.
pub fn random_system(rng: &mut ChaCha8Rng, m_max: usize, n_max: usize, bound: i64) -> StudiableSystem {
    let m = rng.gen_range(1..=m_max);
    let n = rng.gen_range(m + 1..=n_max);
    let candidates = k_subsets(n, m);
    let count = rng.gen_range(1..=candidates.len().min(8));
    let members: Vec<VertexSet> = candidates.choose_multiple(rng, count).cloned().collect();
    let fs = FundamentalSet::new(m, n, members).unwrap();
    // Half the time, bias towards a common half-space so that (Imb) holds
    // often enough to matter.
    let biased = rng.gen_bool(0.5);
    let lambda = (0..n)
        .map(|_| {
            let mut v = random_point(rng, m, -bound, bound);
            if biased {
                v[0] = v[0].abs() + 1;
                v[0] = v[0].min(bound);
            }
            int_vec(&v)
        })
        .collect();
    StudiableSystem::new(fs, lambda).unwrap()
}

/// Like [`random_system`], resampled until (gen) holds.
pub fn random_gen_system(rng: &mut ChaCha8Rng, m_max: usize, n_max: usize, bound: i64) -> StudiableSystem {
    loop {
        let s = random_system(rng, m_max, n_max, bound);
        if starfan::bosio::check_gen(&s).unwrap().holds() {
            return s;
        }
    }
}

/// (SEU) read off the definition: for every member `P` and every index `k`
/// exactly one `k'` in `P` has `(P \ {k'}) ∪ {k}` in the family.
pub fn seu_by_definition(members: &[VertexSet], n: usize) -> bool {
    members.iter().all(|p| {
        (1..=n).all(|k| {
            p.iter()
                .filter(|&&kp| {
                    let mut q = p.clone();
                    q.remove(&kp);
                    q.insert(k);
                    members.contains(&q)
                })
                .count()
                == 1
        })
    })
}

/// SEU-minimality by definition: (SEU) holds and no proper nonempty
/// subfamily has (SEU).
pub fn seu_minimal_by_definition(fs: &FundamentalSet) -> bool {
    let members = fs.members();
    if !seu_by_definition(members, fs.n()) {
        return false;
    }
    let k = members.len();
    assert!(k < 20, "brute force limited to small families");
    let full = (1u32 << k) - 1;
    (1..full).all(|mask| {
        let sub: Vec<VertexSet> = (0..k)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| members[i].clone())
            .collect();
        !seu_by_definition(&sub, fs.n())
    })
}

/// One constraint `a . z > b` (strict) or `a . z >= b`.
#[derive(Clone, Debug)]
pub struct Ineq {
    pub a: Vec<Rational>,
    pub b: Rational,
    pub strict: bool,
}

/// Fourier–Motzkin elimination with strictness flags: decides exactly
/// whether the system has a rational solution.
pub fn fourier_motzkin_feasible(mut system: Vec<Ineq>, vars: usize) -> bool {
    for j in 0..vars {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for c in system {
            if c.a[j].is_positive() {
                pos.push(c);
            } else if c.a[j].is_negative() {
                neg.push(c);
            } else {
                rest.push(c);
            }
        }
        for p in &pos {
            for q in &neg {
                // Scale so the x_j coefficients cancel.
                let sp = -&q.a[j];
                let sq = p.a[j].clone();
                let a = p.a.iter().zip(&q.a).map(|(x, y)| x * &sp + y * &sq).collect();
                rest.push(Ineq {
                    a,
                    b: &p.b * &sp + &q.b * &sq,
                    strict: p.strict || q.strict,
                });
            }
        }
        system = rest;
    }
    system.iter().all(|c| {
        debug_assert!(c.a.iter().all(Zero::is_zero));
        if c.strict {
            Rational::zero() > c.b
        } else {
            Rational::zero() >= c.b
        }
    })
}

/// Equality `a . z = b` as two inequalities.
pub fn equality(a: Vec<Rational>, b: Rational) -> [Ineq; 2] {
    [
        Ineq { a: a.clone(), b: b.clone(), strict: false },
        Ineq { a: a.iter().map(|x| -x).collect(), b: -b, strict: false },
    ]
}
