use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::constraints::{
    generate_rows, merge_rows, support_restriction_constraints, ConstraintRow,
};
use crate::error::{Error, Result};
use crate::ks::catalog::{embedded_peres_vector, merged_peres};
use crate::ks::{enumerate_contexts, Context, VectorSet};
use crate::linalg::{IntegerEchelon, Rational};
use crate::supersinglet::{levi_civita, Permutation};

/// Largest `d` accepted by the merged-set certification.
pub const MAX_SELFTEST_DIM: usize = 6;

/// `alpha` indexed by permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientVector {
    pub d: usize,
    pub entries: BTreeMap<Permutation, Rational>,
}

impl CoefficientVector {
    pub fn from_dense(d: usize, values: Vec<Rational>) -> Self {
        CoefficientVector {
            d,
            entries: Permutation::all(d).into_iter().zip(values).collect(),
        }
    }

    pub fn levi_civita(d: usize) -> Self {
        CoefficientVector {
            d,
            entries: Permutation::all(d)
                .into_iter()
                .map(|p| {
                    let s = levi_civita(&p);
                    (p, Rational::from(i64::from(s)))
                })
                .collect(),
        }
    }

    pub fn get(&self, p: &Permutation) -> Rational {
        self.entries.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    /// Multiply so that `alpha_identity = 1`; `None` if that entry is zero.
    pub fn normalized(&self) -> Option<CoefficientVector> {
        let id = self.get(&Permutation::identity(self.d));
        if id.is_zero() {
            return None;
        }
        let inv = id.recip();
        Some(CoefficientVector {
            d: self.d,
            entries: self
                .entries
                .iter()
                .map(|(p, x)| (p.clone(), x * &inv))
                .collect(),
        })
    }
}

impl Serialize for CoefficientVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_map(self.entries.iter().map(|(p, x)| (p.to_string(), x)))
    }
}

/// Rows from several contexts over the lexicographically ordered
/// permutations.
#[derive(Debug, Clone, Serialize)]
pub struct ConstraintSystem {
    pub d: usize,
    #[serde(skip)]
    pub variables: Vec<Permutation>,
    pub contexts: Vec<Context>,
    pub rows: Vec<ConstraintRow>,
}

impl ConstraintSystem {
    pub fn variable_count(&self) -> usize {
        self.variables.len()
    }

    /// `r . epsilon = 0` for every row.
    pub fn annihilates_supersinglet(&self) -> bool {
        let eps: Vec<i64> = self
            .variables
            .iter()
            .map(|p| i64::from(levi_civita(p)))
            .collect();
        self.rows.iter().all(|r| {
            r.coefficients
                .iter()
                .zip(&eps)
                .filter(|(x, _)| !x.is_zero())
                .map(|(x, &e)| x * e)
                .sum::<BigInt>()
                .is_zero()
        })
    }
}

pub fn assemble(set: &VectorSet, contexts: &[Context]) -> Result<ConstraintSystem> {
    support_restriction_constraints(set)?;
    let d = set.dim();
    let mut rows = Vec::new();
    let mut index = HashMap::new();
    for (x, c) in contexts.iter().enumerate() {
        let generated = generate_rows(set, c)?;
        merge_rows(&mut rows, &mut index, generated, x);
    }
    Ok(ConstraintSystem {
        d,
        variables: Permutation::all(d),
        contexts: contexts.to_vec(),
        rows,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RankMethod {
    /// Fraction-free elimination over the integers.
    ExactElimination,
    /// Every row annihilates `epsilon` and the rank modulo a prime is
    /// `d! - 1`; together these pin the rational rank to `d! - 1` and the
    /// null space to the span of `epsilon`.
    ModularCertificate,
}

#[derive(Debug, Clone, Serialize)]
pub struct Solution {
    pub variables: usize,
    pub rows: usize,
    pub rank: usize,
    pub nullity: usize,
    pub method: RankMethod,
    pub annihilates_supersinglet: bool,
    pub null_basis: Vec<CoefficientVector>,
}

/// Exact rank and primitive null-space basis.
pub fn solve(system: &ConstraintSystem) -> Solution {
    let d = system.d;
    let n = system.variable_count();
    let annihilates = system.annihilates_supersinglet();
    let mut echelon = IntegerEchelon::new(n);
    for r in &system.rows {
        // Once epsilon is known to lie in the kernel, rank n - 1 is final.
        if annihilates && echelon.rank() == n - 1 {
            break;
        }
        echelon.insert(r.coefficients.clone());
    }
    let null_basis = echelon
        .null_space()
        .into_iter()
        .map(|x| CoefficientVector::from_dense(d, x.into_iter().map(Rational::from).collect()))
        .collect::<Vec<_>>();
    Solution {
        variables: n,
        rows: system.rows.len(),
        rank: echelon.rank(),
        nullity: null_basis.len(),
        method: RankMethod::ExactElimination,
        annihilates_supersinglet: annihilates,
        null_basis,
    }
}

const PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(PRIME)) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

fn to_mod(x: &BigInt) -> u64 {
    let p = BigInt::from(PRIME);
    let r = ((x % &p) + &p) % &p;
    r.to_u64().expect("reduced modulo a 61-bit prime")
}

/// Independent check of the same conclusion: when every row annihilates
/// `epsilon` and the rank modulo a prime reaches `d! - 1`, the rational rank
/// is exactly `d! - 1`. Returns `None` when the certificate does not apply.
pub fn modular_certificate(system: &ConstraintSystem) -> Option<Solution> {
    let n = system.variable_count();
    if !system.annihilates_supersinglet() || modular_rank(system, n - 1) != n - 1 {
        return None;
    }
    Some(Solution {
        variables: n,
        rows: system.rows.len(),
        rank: n - 1,
        nullity: 1,
        method: RankMethod::ModularCertificate,
        annihilates_supersinglet: true,
        null_basis: vec![CoefficientVector::levi_civita(system.d)],
    })
}

/// Rank modulo `PRIME`, stopping early at `target`.
fn modular_rank(system: &ConstraintSystem, target: usize) -> usize {
    let n = system.variable_count();
    // basis rows normalized to pivot 1
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    for r in &system.rows {
        if basis.len() >= target {
            break;
        }
        let mut row: Vec<u64> = r.coefficients.iter().map(to_mod).collect();
        for (pivot, b) in &basis {
            let f = row[*pivot];
            if f == 0 {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(b) {
                if y != 0 {
                    *x = (*x + PRIME - mul_mod(f, y)) % PRIME;
                }
            }
        }
        if let Some(pivot) = row.iter().position(|&x| x != 0) {
            let inv = pow_mod(row[pivot], PRIME - 2);
            for x in row.iter_mut() {
                *x = mul_mod(*x, inv);
            }
            basis.push((pivot, row));
        }
    }
    debug_assert!(basis.len() <= n);
    basis.len()
}

#[derive(Debug, Clone, Serialize)]
pub struct Uniqueness {
    pub nullity: usize,
    /// Null-space generator scaled to `alpha_identity = 1`, when the null
    /// space is one-dimensional.
    pub witness: Option<CoefficientVector>,
    pub matches_levi_civita: bool,
    pub unique: bool,
}

/// The null space is spanned by a single vector proportional to the
/// Levi-Civita signs.
pub fn verify_unique_supersinglet(null_basis: &[CoefficientVector], d: usize) -> Uniqueness {
    let witness = match null_basis {
        [only] => only.normalized(),
        _ => None,
    };
    let matches = witness
        .as_ref()
        .is_some_and(|w| *w == CoefficientVector::levi_civita(d));
    Uniqueness {
        nullity: null_basis.len(),
        witness,
        matches_levi_civita: matches,
        unique: null_basis.len() == 1 && matches,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SelftestReport {
    pub d: usize,
    pub variables: usize,
    pub rows: usize,
    pub rank: usize,
    pub nullity: usize,
    pub method: RankMethod,
    pub annihilates_supersinglet: bool,
    pub unique: bool,
    pub witness: Option<CoefficientVector>,
    pub contexts: Vec<Context>,
}

pub fn assemble_and_solve(
    set: &VectorSet,
    contexts: &[Context],
) -> Result<(ConstraintSystem, Solution)> {
    let system = assemble(set, contexts)?;
    let solution = solve(&system);
    Ok((system, solution))
}

/// Assemble, solve and check uniqueness in one step.
pub fn selftest_contexts(set: &VectorSet, contexts: &[Context]) -> Result<SelftestReport> {
    let (system, solution) = assemble_and_solve(set, contexts)?;
    let uniq = verify_unique_supersinglet(&solution.null_basis, system.d);
    Ok(SelftestReport {
        d: system.d,
        variables: solution.variables,
        rows: solution.rows,
        rank: solution.rank,
        nullity: solution.nullity,
        method: solution.method,
        annihilates_supersinglet: solution.annihilates_supersinglet,
        unique: uniq.unique,
        witness: uniq.witness,
        contexts: system.contexts,
    })
}

/// The two bases used for window `k` of the merged set.
#[derive(Debug, Clone, Serialize)]
pub struct WindowBases {
    pub k: usize,
    pub first: Context,
    pub second: Context,
}

#[derive(Debug, Clone, Serialize)]
pub struct GeneralSelftestReport {
    pub set_size: usize,
    pub windows: Vec<WindowBases>,
    pub all_contexts: bool,
    #[serde(flatten)]
    pub report: SelftestReport,
}

/// Window `k` covers coordinates `k..k+4`; each basis is four embedded
/// vectors of the 24-ray set plus the canonical vectors outside the window.
pub fn window_bases(set: &VectorSet, d: usize, k: usize) -> Result<WindowBases> {
    let basis = |range: std::ops::Range<usize>| -> Result<Context> {
        let mut members = Vec::with_capacity(d);
        for i in range {
            let v = embedded_peres_vector(d, k, i);
            members.push(set.index_of_ray(&v).ok_or_else(|| {
                Error::InvalidVectorSet(format!("embedded vector {i} of window {k} missing"))
            })?);
        }
        for t in (0..d).filter(|t| !(k..k + 4).contains(t)) {
            let e = crate::linalg::ExactVector::unit(d, t);
            members.push(set.index_of_ray(&e).ok_or(Error::CanonicalBasisMissing)?);
        }
        Context::new(members, set)
    };
    Ok(WindowBases {
        k,
        first: basis(4..8)?,
        second: basis(8..12)?,
    })
}

/// Certify the supersinglet on the merged `d`-dimensional set from the two
/// bases of every window.
///
/// The hand argument walks adjacent transpositions window by window: each
/// window fixes the relative sign of the permutations differing by a swap of
/// two consecutive positions inside it, and adjacent swaps generate every
/// permutation. Here the same conclusion is read off the rank of the full
/// system.
pub fn general_d_selftest(d: usize, all_contexts: bool) -> Result<GeneralSelftestReport> {
    if !(4..=MAX_SELFTEST_DIM).contains(&d) {
        return Err(Error::BudgetExceeded {
            what: "self-test dimension",
            requested: d as u64,
            limit: MAX_SELFTEST_DIM as u64,
            advice: "the system has d! unknowns and d^d tuples per context; use 4 <= d <= 6",
        });
    }
    let set = merged_peres(d)?;
    let windows: Vec<WindowBases> = (0..=d - 4)
        .map(|k| window_bases(&set, d, k))
        .collect::<Result<_>>()?;
    let mut contexts: Vec<Context> = windows
        .iter()
        .flat_map(|w| [w.first.clone(), w.second.clone()])
        .collect();
    if all_contexts {
        for c in enumerate_contexts(&set) {
            if !contexts.contains(&c) {
                contexts.push(c);
            }
        }
    }
    let report = selftest_contexts(&set, &contexts)?;
    Ok(GeneralSelftestReport {
        set_size: set.len(),
        windows,
        all_contexts,
        report,
    })
}
