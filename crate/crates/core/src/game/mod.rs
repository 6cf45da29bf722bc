//! The `d`-party game built from a Kochen-Specker set: winning condition,
//! the supersinglet strategy, and the optimal classical value.

mod algebra;
mod classical;
mod quantum;
mod spec;

pub use algebra::{measurement_algebra_check, AlgebraFailure, AlgebraReport};
pub use classical::{
    classical_value, classical_value_with, ClassicalOptions, ClassicalValue,
    DeterministicClassicalStrategy, DEFAULT_MAX_VERTICES,
};
pub use quantum::{
    quantum_joint_distribution, verify_perfect_strategy, InputSuccess, JointDistribution,
    PerfectStrategyReport, QuantumReferenceStrategy,
};
pub use spec::{winning_predicate, GameSpec, OutputTuple};
