use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{build_orthogonality_graph, VectorSet};
use crate::error::{Error, Result};
use crate::linalg::orthocomplement_basis;

/// Upper bound on the size of a completed set.
pub const MAX_COMPLETED_VECTORS: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletenessReport {
    pub complete: bool,
    /// Orthogonal pairs that lie in no `d`-clique, in lexicographic order.
    pub uncovered: Vec<(usize, usize)>,
}

/// Check that every orthogonal pair extends to a full context in the set.
pub fn check_completeness(set: &VectorSet) -> CompletenessReport {
    let graph = build_orthogonality_graph(set);
    let mut covered = HashSet::new();
    for clique in graph.cliques_of_size(set.dim()) {
        for (a, &i) in clique.iter().enumerate() {
            for &j in &clique[a + 1..] {
                covered.insert((i, j));
            }
        }
    }
    let uncovered: Vec<_> = graph
        .edges()
        .iter()
        .copied()
        .filter(|e| !covered.contains(e))
        .collect();
    CompletenessReport {
        complete: uncovered.is_empty(),
        uncovered,
    }
}

/// Extend `set` until every orthogonal pair lies in a context.
///
/// Repeatedly takes the first uncovered edge `(u, v)` and appends the
/// canonical orthogonal basis of `span{u, v}`'s complement, skipping rays
/// already present. The input vectors stay a prefix of the output.
pub fn complete_set(set: &VectorSet) -> Result<VectorSet> {
    let mut out = set.clone();
    loop {
        let report = check_completeness(&out);
        let Some(&(u, v)) = report.uncovered.first() else {
            return Ok(out);
        };
        let span = [out.vector(u).clone(), out.vector(v).clone()];
        for w in orthocomplement_basis(&span, out.dim())? {
            out.push_ray(w, |i| format!("c{i}"));
        }
        if out.len() > MAX_COMPLETED_VECTORS {
            return Err(Error::BudgetExceeded {
                what: "completed set size",
                requested: out.len() as u64,
                limit: MAX_COMPLETED_VECTORS as u64,
                advice: "the completion does not close up quickly for this set",
            });
        }
    }
}
