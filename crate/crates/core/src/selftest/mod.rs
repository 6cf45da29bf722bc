//! Linear constraints a perfect strategy imposes on the shared state, and
//! their solution.
//!
//! With the canonical basis among the contexts, the state is supported on
//! permutation tuples, leaving `d!` unknown coefficients `alpha_pi`. Every
//! other context contributes one linear equation per outcome tuple that the
//! game forbids. The supersinglet is certified when the solution space is the
//! line through the Levi-Civita signs.

mod constraints;
mod solve;

pub use constraints::{
    pqs_constraint_rows, replay_row, support_restriction_constraints, ConstraintRow, Provenance,
    SupportRestriction,
};
pub use solve::{
    assemble, assemble_and_solve, general_d_selftest, modular_certificate, selftest_contexts,
    solve, verify_unique_supersinglet, window_bases, CoefficientVector, ConstraintSystem,
    GeneralSelftestReport, RankMethod, SelftestReport, Solution, Uniqueness, WindowBases,
    MAX_SELFTEST_DIM,
};
