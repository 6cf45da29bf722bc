use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::spec::{missing_member, GameSpec, OutputTuple};
use crate::error::Result;
use crate::linalg::{ExactVector, Rational};
use crate::supersinglet::{
    advance_tuple, amplitude, build_supersinglet, factorial, SupersingletState,
};

/// Shared state plus measurements: the first `d - 1` parties measure the
/// basis of their context, the last party measures `|v_y><v_y|`.
#[derive(Debug, Clone)]
pub struct QuantumReferenceStrategy {
    pub state: SupersingletState,
}

impl QuantumReferenceStrategy {
    pub fn new(spec: &GameSpec) -> Result<Self> {
        Ok(QuantumReferenceStrategy {
            state: build_supersinglet(spec.d())?,
        })
    }

    /// Use a different (possibly corrupted) state with the same measurements.
    pub fn with_state(state: SupersingletState) -> Self {
        QuantumReferenceStrategy { state }
    }

    /// Probabilities of all `d^d` full outcome tuples in context `x`, indexed
    /// by positions in the context, last party fastest.
    fn context_table(&self, spec: &GameSpec, x: usize) -> Result<Vec<Rational>> {
        let d = spec.d();
        let members = spec.context(x)?.members();
        let vectors: Vec<&ExactVector> = members.iter().map(|&v| spec.set().vector(v)).collect();
        let ints: Option<Vec<Vec<i64>>> = vectors.iter().map(|v| v.to_i64()).collect();
        let norms: Vec<Rational> = vectors.iter().map(|v| v.norm_squared()).collect();
        let d_fact = Rational::from(factorial(d) as i64);

        let total = d.pow(d as u32);
        let mut table = Vec::with_capacity(total);
        let mut tuple = vec![0usize; d];
        for _ in 0..total {
            let numerator = match &ints {
                Some(rows) => {
                    let refs: Vec<&[i64]> = tuple.iter().map(|&t| rows[t].as_slice()).collect();
                    self.state
                        .contract_int(&refs)
                        .ok()
                        .map(|c| Rational::from(BigInt::from(c)))
                }
                None => None,
            };
            let p = match numerator {
                Some(c) if c.is_zero() => Rational::zero(),
                Some(c) => {
                    let norm: Rational = tuple.iter().map(|&t| norms[t].clone()).product();
                    c.square() / (&d_fact * &norm)
                }
                None => {
                    let vs: Vec<&ExactVector> = tuple.iter().map(|&t| vectors[t]).collect();
                    amplitude(&self.state, &vs)?.probability()
                }
            };
            table.push(p);
            advance_tuple(&mut tuple, d);
        }
        Ok(table)
    }
}

/// Exact `p(a, b | x, y)`; absent tuples have probability zero.
#[derive(Debug, Clone, Serialize)]
pub struct JointDistribution {
    pub x: usize,
    pub y: usize,
    pub probabilities: BTreeMap<OutputTuple, Rational>,
}

impl JointDistribution {
    pub fn probability(&self, out: &OutputTuple) -> Rational {
        self.probabilities
            .get(out)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn total(&self) -> Rational {
        self.probabilities.values().cloned().sum()
    }

    /// Mass on outcomes satisfying the winning condition.
    pub fn win_probability(&self, spec: &GameSpec) -> Result<Rational> {
        let context = spec.context(self.x)?;
        Ok(self
            .probabilities
            .iter()
            .filter(|(out, _)| match missing_member(context, &out.a) {
                Some(k) => (k == self.y) == (out.b == 1),
                None => false,
            })
            .map(|(_, p)| p.clone())
            .sum())
    }
}

fn distribution_from_table(
    spec: &GameSpec,
    x: usize,
    y: usize,
    table: &[Rational],
) -> Result<JointDistribution> {
    let d = spec.d();
    let context = spec.context(x)?;
    let members = context.members();
    let y_pos = context.position(y).ok_or(crate::Error::NotInContext {
        vertex: y,
        context: x,
    })?;
    let mut probabilities = BTreeMap::new();
    for (prefix, chunk) in table.chunks(d).enumerate() {
        // p(a) over the last party's complete basis, then split off b = 1.
        let p_a: Rational = chunk.iter().cloned().sum();
        let p1 = chunk[y_pos].clone();
        let p0 = &p_a - &p1;
        if p1.is_zero() && p0.is_zero() {
            continue;
        }
        let mut a = vec![0usize; d - 1];
        let mut rest = prefix;
        for slot in a.iter_mut().rev() {
            *slot = members[rest % d];
            rest /= d;
        }
        if !p1.is_zero() {
            probabilities.insert(OutputTuple::new(a.clone(), 1), p1);
        }
        if !p0.is_zero() {
            probabilities.insert(OutputTuple::new(a, 0), p0);
        }
    }
    Ok(JointDistribution {
        x,
        y,
        probabilities,
    })
}

/// `p(a, b | x, y)` for the reference strategy.
pub fn quantum_joint_distribution(
    spec: &GameSpec,
    strategy: &QuantumReferenceStrategy,
    x: usize,
    y: usize,
) -> Result<JointDistribution> {
    let table = strategy.context_table(spec, x)?;
    distribution_from_table(spec, x, y, &table)
}

#[derive(Debug, Clone, Serialize)]
pub struct InputSuccess {
    pub x: usize,
    pub y: usize,
    pub p: Rational,
}

#[derive(Debug, Clone, Serialize)]
pub struct PerfectStrategyReport {
    pub per_input: Vec<InputSuccess>,
    pub min: Rational,
    /// Average over the input distribution.
    pub average: Rational,
    pub perfect: bool,
}

/// Exact success probability of the strategy on every input pair.
pub fn verify_perfect_strategy(
    spec: &GameSpec,
    strategy: &QuantumReferenceStrategy,
) -> Result<PerfectStrategyReport> {
    let per_context: Vec<Vec<InputSuccess>> = (0..spec.context_count())
        .into_par_iter()
        .map(|x| -> Result<Vec<InputSuccess>> {
            let table = strategy.context_table(spec, x)?;
            spec.context(x)?
                .members()
                .iter()
                .map(|&y| {
                    let dist = distribution_from_table(spec, x, y, &table)?;
                    Ok(InputSuccess {
                        x,
                        y,
                        p: dist.win_probability(spec)?,
                    })
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    let per_input: Vec<InputSuccess> = per_context.into_iter().flatten().collect();
    let min = per_input
        .iter()
        .map(|s| s.p.clone())
        .min()
        .unwrap_or_else(Rational::zero);
    let weight = Rational::new(1, (spec.context_count() * spec.d()) as i64);
    let average = per_input.iter().map(|s| &s.p * &weight).sum();
    Ok(PerfectStrategyReport {
        perfect: min.is_one(),
        per_input,
        min,
        average,
    })
}
