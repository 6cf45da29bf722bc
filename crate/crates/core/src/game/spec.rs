use serde::Serialize;

use crate::error::{Error, Result};
use crate::ks::{Context, VectorSet};

/// A `d`-party game built from a vector set and a list of contexts.
///
/// The first `d - 1` parties receive a context index `x`; the last party
/// receives a vertex `y` of that context. Inputs are drawn uniformly over `x`
/// and then uniformly over `y ∈ C_x`.
#[derive(Debug, Clone)]
pub struct GameSpec {
    set: VectorSet,
    contexts: Vec<Context>,
}

impl GameSpec {
    pub fn new(set: VectorSet, contexts: Vec<Context>) -> Result<Self> {
        if contexts.is_empty() {
            return Err(Error::EmptyContexts);
        }
        let d = set.dim();
        for c in &contexts {
            if c.len() != d {
                return Err(Error::InvalidContext {
                    context: c.members().to_vec(),
                    reason: format!("expected {d} members, found {}", c.len()),
                });
            }
            Context::new(c.members().to_vec(), &set).map_err(|e| Error::InvalidContext {
                context: c.members().to_vec(),
                reason: e.to_string(),
            })?;
        }
        Ok(GameSpec { set, contexts })
    }

    /// Number of parties, equal to the local dimension.
    pub fn d(&self) -> usize {
        self.set.dim()
    }

    pub fn set(&self) -> &VectorSet {
        &self.set
    }

    pub fn contexts(&self) -> &[Context] {
        &self.contexts
    }

    pub fn context(&self, x: usize) -> Result<&Context> {
        self.contexts.get(x).ok_or_else(|| {
            Error::InvalidArgument(format!(
                "context index {x} out of range (m = {})",
                self.contexts.len()
            ))
        })
    }

    /// Number of contexts `m`.
    pub fn context_count(&self) -> usize {
        self.contexts.len()
    }

    /// Every input pair `(x, y)` in order.
    pub fn inputs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.contexts
            .iter()
            .enumerate()
            .flat_map(|(x, c)| c.members().iter().map(move |&y| (x, y)))
    }
}

/// Outputs of one round: vertices `a` from the first `d - 1` parties and the
/// last party's bit `b`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct OutputTuple {
    pub a: Vec<usize>,
    pub b: u8,
}

impl OutputTuple {
    pub fn new(a: Vec<usize>, b: u8) -> Self {
        OutputTuple { a, b }
    }
}

/// The vertex of `context` missing from `a`, provided `a` lists the other
/// `d - 1` members without repetition.
pub(crate) fn missing_member(context: &Context, a: &[usize]) -> Option<usize> {
    if a.len() + 1 != context.len() {
        return None;
    }
    let mut seen = vec![false; context.len()];
    for &v in a {
        let pos = context.position(v)?;
        if std::mem::replace(&mut seen[pos], true) {
            return None;
        }
    }
    let pos = seen.iter().position(|&s| !s)?;
    Some(context.members()[pos])
}

/// Win iff `a` is `C_x` minus one vertex `k` (in any order, no repeats) and
/// `b = 1` exactly when `k = y`.
pub fn winning_predicate(spec: &GameSpec, x: usize, y: usize, out: &OutputTuple) -> Result<bool> {
    let context = spec.context(x)?;
    if !context.contains(y) {
        return Err(Error::NotInContext {
            vertex: y,
            context: x,
        });
    }
    if out.a.len() + 1 != spec.d() {
        return Err(Error::DimensionMismatch {
            expected: spec.d() - 1,
            found: out.a.len(),
        });
    }
    Ok(match missing_member(context, &out.a) {
        Some(k) => (k == y) == (out.b == 1),
        None => false,
    })
}
