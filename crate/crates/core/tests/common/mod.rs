//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use rand::Rng;
use supersinglet_core::ks::{Context, VectorSet};
use supersinglet_core::linalg::{ExactVector, Rational};

/// Winning condition written out directly: the `d - 1` answers are distinct
/// members of the context, and `b = 1` exactly when `y` is the member none
/// of them named.
pub fn naive_wins(context: &[usize], y: usize, a: &[usize], b: u8) -> bool {
    if !a.iter().all(|v| context.contains(v)) {
        return false;
    }
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if a[i] == a[j] {
                return false;
            }
        }
    }
    let y_named = a.contains(&y);
    if y_named {
        b == 0
    } else {
        b == 1
    }
}

/// Best average over every joint deterministic strategy: each of the first
/// `d - 1` parties maps each context to any vertex, the last party maps
/// each vertex to a bit. Exponential; only for toy games.
pub fn naive_classical_value(n: usize, d: usize, contexts: &[Vec<usize>]) -> Rational {
    let m = contexts.len();
    let per_context = n.pow((d - 1) as u32);
    let joint = per_context.pow(m as u32);
    let mut best = 0usize;
    for values in 0u32..(1 << n) {
        for choice in 0..joint {
            let mut rest = choice;
            let mut wins = 0;
            for c in contexts {
                let mut code = rest % per_context;
                rest /= per_context;
                let mut a = Vec::with_capacity(d - 1);
                for _ in 0..d - 1 {
                    a.push(code % n);
                    code /= n;
                }
                for &y in c {
                    let b = ((values >> y) & 1) as u8;
                    if naive_wins(c, y, &a, b) {
                        wins += 1;
                    }
                }
            }
            best = best.max(wins);
        }
    }
    Rational::new(best as i64, (m * d) as i64)
}

/// Three-dimensional toy: eight rays, two contexts sharing `e0`.
pub fn toy_set() -> (VectorSet, Vec<Vec<usize>>) {
    let rows = vec![
        vec![1, 0, 0],
        vec![0, 1, 0],
        vec![0, 0, 1],
        vec![0, 1, 1],
        vec![0, 1, -1],
        vec![1, 1, 0],
        vec![1, -1, 0],
        vec![1, 1, 1],
    ];
    let set = VectorSet::from_int_vectors(3, &rows, None).unwrap();
    (set, vec![vec![0, 1, 2], vec![0, 3, 4]])
}

/// A second toy whose contexts share no vertex.
pub fn toy_set_disjoint() -> (VectorSet, Vec<Vec<usize>>) {
    let (set, _) = toy_set();
    (set, vec![vec![2, 5, 6], vec![0, 3, 4]])
}

pub fn contexts_of(set: &VectorSet, lists: &[Vec<usize>]) -> Vec<Context> {
    lists
        .iter()
        .map(|m| Context::new(m.clone(), set).unwrap())
        .collect()
}

pub fn random_int_vector<R: Rng>(rng: &mut R, d: usize, bound: i64) -> ExactVector {
    loop {
        let v: Vec<i64> = (0..d).map(|_| rng.random_range(-bound..=bound)).collect();
        if v.iter().any(|&x| x != 0) {
            return ExactVector::from_ints(&v);
        }
    }
}

/// Random orthogonal basis by rational Gram-Schmidt on random integer
/// vectors, each result scaled to a primitive integer ray.
pub fn random_orthogonal_basis<R: Rng>(rng: &mut R, d: usize, bound: i64) -> Vec<ExactVector> {
    let mut basis: Vec<ExactVector> = Vec::with_capacity(d);
    while basis.len() < d {
        let mut w = random_int_vector(rng, d, bound);
        for u in &basis {
            let c = &w.inner_product(u).unwrap() / &u.norm_squared();
            w = w.sub_scaled(&c, u);
        }
        if let Some(ray) = w.canonical_ray() {
            basis.push(ray);
        }
    }
    basis
}

/// Sign of a permutation by counting inversions.
pub fn inversion_sign(p: &[usize]) -> i8 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}
