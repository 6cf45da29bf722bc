use rayon::prelude::*;
use serde::Serialize;

use super::spec::{winning_predicate, GameSpec, OutputTuple};
use crate::error::{Error, Result};
use crate::linalg::Rational;

/// Default cap on the number of vertices the exhaustive scan ranges over.
pub const DEFAULT_MAX_VERTICES: usize = 26;

/// Largest local dimension the per-context lookup table supports.
const MAX_TABLE_DIM: usize = 16;

/// The scan is split into `2^CHUNK_BITS` independent blocks.
const CHUNK_BITS: usize = 10;

/// One deterministic strategy: `outputs[x]` are the first `d - 1` parties'
/// answers on context `x`, `values[y]` is the last party's answer on `y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeterministicClassicalStrategy {
    pub outputs: Vec<Vec<usize>>,
    pub values: Vec<u8>,
}

impl DeterministicClassicalStrategy {
    /// Exact average winning probability under the uniform input
    /// distribution, evaluated directly with the winning predicate.
    pub fn success_probability(&self, spec: &GameSpec) -> Result<Rational> {
        if self.outputs.len() != spec.context_count() || self.values.len() != spec.set().len() {
            return Err(Error::InvalidArgument(
                "strategy does not match the game's contexts and vertices".into(),
            ));
        }
        let mut wins = 0i64;
        for (x, y) in spec.inputs() {
            let out = OutputTuple::new(self.outputs[x].clone(), self.values[y]);
            if winning_predicate(spec, x, y, &out)? {
                wins += 1;
            }
        }
        Ok(Rational::new(
            wins,
            (spec.context_count() * spec.d()) as i64,
        ))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassicalValue {
    pub value: Rational,
    pub witness_strategy: DeterministicClassicalStrategy,
    /// Vertices that occur in at least one context; only these are scanned.
    pub scanned_vertices: usize,
    pub assignments_scanned: u64,
    pub contexts: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct ClassicalOptions {
    pub max_vertices: usize,
}

impl Default for ClassicalOptions {
    fn default() -> Self {
        ClassicalOptions {
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

/// For each local value pattern (bit `j` = value of the `j`-th context
/// member), the best number of winning `y` and the member left out by the
/// first `d - 1` parties to achieve it.
fn local_table(spec: &GameSpec, x: usize) -> Result<Vec<(u8, u8)>> {
    let d = spec.d();
    let members = spec.context(x)?.members();
    let mut table = Vec::with_capacity(1 << d);
    for pattern in 0u32..(1 << d) {
        let mut best = (0u8, 0u8);
        for k in 0..d {
            let a: Vec<usize> = members
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, &v)| v)
                .collect();
            let mut wins = 0u8;
            for (j, &y) in members.iter().enumerate() {
                let b = ((pattern >> j) & 1) as u8;
                if winning_predicate(spec, x, y, &OutputTuple::new(a.clone(), b))? {
                    wins += 1;
                }
            }
            if wins > best.0 {
                best = (wins, k as u8);
            }
        }
        table.push(best);
    }
    Ok(table)
}

struct Scan<'a> {
    n: usize,
    tables: &'a [Vec<(u8, u8)>],
    /// Per context: scanned-vertex indices of its members, in member order.
    local: &'a [Vec<usize>],
    /// Per scanned vertex: (context, bit position) pairs.
    occurrences: &'a [Vec<(usize, u8)>],
}

impl Scan<'_> {
    fn score_of(&self, patterns: &[u32]) -> u32 {
        patterns
            .iter()
            .zip(self.tables)
            .map(|(&p, t)| u32::from(t[p as usize].0))
            .sum()
    }

    /// Best `(score, v)` over all assignments whose top `n - low` bits equal
    /// `prefix`; ties go to the lexicographically smallest `v` (vertex 0
    /// most significant).
    fn block(&self, prefix: u64, low: usize) -> (u32, u64) {
        let mut v = prefix << low;
        let mut patterns: Vec<u32> = self
            .local
            .iter()
            .map(|members| {
                members
                    .iter()
                    .enumerate()
                    .fold(0u32, |acc, (j, &u)| acc | ((((v >> u) & 1) as u32) << j))
            })
            .collect();
        let mut score = self.score_of(&patterns);
        let mut best = (score, v);
        for i in 1u64..(1u64 << low) {
            let bit = i.trailing_zeros() as usize;
            v ^= 1 << bit;
            for &(x, j) in &self.occurrences[bit] {
                let old = self.tables[x][patterns[x] as usize].0;
                patterns[x] ^= 1 << j;
                let new = self.tables[x][patterns[x] as usize].0;
                score = score + u32::from(new) - u32::from(old);
            }
            if score > best.0 || (score == best.0 && lex_key(v, self.n) < lex_key(best.1, self.n)) {
                best = (score, v);
            }
        }
        best
    }
}

/// Sort key putting assignments in lexicographic order of `(v_0, v_1, ...)`.
fn lex_key(v: u64, n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        v.reverse_bits() >> (64 - n)
    }
}

pub fn classical_value(spec: &GameSpec) -> Result<ClassicalValue> {
    classical_value_with(spec, ClassicalOptions::default())
}

/// Exact optimum over deterministic strategies.
///
/// For a fixed last-party assignment `v`, the other parties' answers on each
/// context are independent, so the value is the sum of per-context maxima.
/// The scan walks every `v` over the vertices that occur in some context in
/// Gray-code order, updating only the contexts touching the flipped vertex.
pub fn classical_value_with(spec: &GameSpec, options: ClassicalOptions) -> Result<ClassicalValue> {
    let d = spec.d();
    if d > MAX_TABLE_DIM {
        return Err(Error::BudgetExceeded {
            what: "classical value dimension",
            requested: d as u64,
            limit: MAX_TABLE_DIM as u64,
            advice: "the per-context table has 2^d entries",
        });
    }
    let n_total = spec.set().len();
    let mut index_of = vec![usize::MAX; n_total];
    let mut active = Vec::new();
    for c in spec.contexts() {
        for &v in c.members() {
            if index_of[v] == usize::MAX {
                index_of[v] = 0;
            }
        }
    }
    for (v, slot) in index_of.iter_mut().enumerate() {
        if *slot == 0 {
            *slot = active.len();
            active.push(v);
        }
    }
    // Scanned vertices keep ascending order, so bit u of v is the u-th active vertex.
    let n = active.len();
    if n > options.max_vertices || n > 63 {
        return Err(Error::BudgetExceeded {
            what: "classical value search vertices",
            requested: n as u64,
            limit: options.max_vertices.min(63) as u64,
            advice: "the scan visits 2^n assignments; raise KS_SEARCH_BUDGET to allow larger sets",
        });
    }

    let tables: Vec<Vec<(u8, u8)>> = (0..spec.context_count())
        .map(|x| local_table(spec, x))
        .collect::<Result<_>>()?;
    let local: Vec<Vec<usize>> = spec
        .contexts()
        .iter()
        .map(|c| c.members().iter().map(|&v| index_of[v]).collect())
        .collect();
    let mut occurrences = vec![Vec::new(); n];
    for (x, members) in local.iter().enumerate() {
        for (j, &u) in members.iter().enumerate() {
            occurrences[u].push((x, j as u8));
        }
    }
    let scan = Scan {
        n,
        tables: &tables,
        local: &local,
        occurrences: &occurrences,
    };

    let high = n.min(CHUNK_BITS);
    let low = n - high;
    let (score, best_v) = (0u64..(1u64 << high))
        .into_par_iter()
        .map(|prefix| scan.block(prefix, low))
        .reduce(
            || (0, u64::MAX),
            |a, b| {
                let a_wins = a.0 > b.0
                    || (a.0 == b.0
                        && (b.1 == u64::MAX
                            || (a.1 != u64::MAX && lex_key(a.1, n) <= lex_key(b.1, n))));
                if a_wins {
                    a
                } else {
                    b
                }
            },
        );

    let mut values = vec![0u8; n_total];
    for (u, &v) in active.iter().enumerate() {
        values[v] = ((best_v >> u) & 1) as u8;
    }
    let outputs = spec
        .contexts()
        .iter()
        .zip(&local)
        .zip(&tables)
        .map(|((c, members), table)| {
            let pattern = members.iter().enumerate().fold(0usize, |acc, (j, &u)| {
                acc | ((((best_v >> u) & 1) as usize) << j)
            });
            let k = table[pattern].1 as usize;
            c.members()
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, &v)| v)
                .collect()
        })
        .collect();

    Ok(ClassicalValue {
        value: Rational::new(i64::from(score), (spec.context_count() * d) as i64),
        witness_strategy: DeterministicClassicalStrategy { outputs, values },
        scanned_vertices: n,
        assignments_scanned: 1u64 << n,
        contexts: spec.context_count(),
    })
}
