use serde::Serialize;

use crate::error::Result;
use crate::ks::VectorSet;
use crate::linalg::ExactMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum AlgebraFailure {
    /// `P_a P_b != 0` for two members of the same context.
    NonOrthogonalPair { context: usize, a: usize, b: usize },
    /// `sum_y P_y != 1` on a context.
    IncompleteSum { context: usize },
}

#[derive(Debug, Clone, Serialize)]
pub struct AlgebraReport {
    pub contexts_checked: usize,
    pub failures: Vec<AlgebraFailure>,
    pub passed: bool,
}

/// Check `P_a P_b = 0` within every context and `sum_{y in C} P_y = 1`, for
/// the rank-one projectors `P_y = |v_y><v_y| / <v_y|v_y>`.
///
/// Contexts are plain member lists so that invalid ones can be reported.
pub fn measurement_algebra_check(
    set: &VectorSet,
    contexts: &[Vec<usize>],
) -> Result<AlgebraReport> {
    let d = set.dim();
    let projectors: Vec<ExactMatrix> = set
        .vectors()
        .iter()
        .map(|v| ExactMatrix::outer(v, v, &v.norm_squared()))
        .collect();
    let identity = ExactMatrix::identity(d);
    let mut failures = Vec::new();
    for (x, members) in contexts.iter().enumerate() {
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                let prod = projectors
                    .get(a)
                    .zip(projectors.get(b))
                    .map(|(pa, pb)| pa.mul(pb))
                    .transpose()?;
                if !prod.is_some_and(|m| m.is_zero()) {
                    failures.push(AlgebraFailure::NonOrthogonalPair { context: x, a, b });
                }
            }
        }
        let mut sum = ExactMatrix::zeros(d, d);
        for &y in members {
            if let Some(p) = projectors.get(y) {
                sum = sum.add(p)?;
            }
        }
        if sum != identity {
            failures.push(AlgebraFailure::IncompleteSum { context: x });
        }
    }
    Ok(AlgebraReport {
        contexts_checked: contexts.len(),
        passed: failures.is_empty(),
        failures,
    })
}
