//! The `d`-party `d`-level supersinglet: construction, exact amplitudes,
//! basis re-expansion and `U^{⊗d}` covariance.

mod invariance;
mod permutation;
mod state;

pub use invariance::{
    check_exact_tensor_action, check_unitary_invariance, complex_determinant,
    random_special_unitary, seeded_special_unitary, signed_permutation_matrix, to_complex,
    unitarity_deviation, ComplexMatrix, ExactActionReport, InvarianceReport, DEFAULT_TOLERANCE,
    MAX_INVARIANCE_DIM,
};
pub use permutation::{factorial, levi_civita, Permutation};
pub(crate) use state::advance_tuple;
pub use state::{
    amplitude, build_supersinglet, reexpand_in_basis, Amplitude, ProductBasisExpansion,
    SupersingletState, MAX_STATE_DIM,
};
