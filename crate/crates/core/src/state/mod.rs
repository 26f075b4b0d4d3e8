//! Exact statevector mechanics: Pauli-sum action, expectation values,
//! Clifford application, Lanczos ground states, and Monte Carlo sampling of
//! the noisy measurement process.

mod lanczos;
mod sample;
mod tridiag;
mod vector;

pub use lanczos::{ground_state, LanczosOptions};
pub use sample::sample_noisy_measurement;
pub use tridiag::symmetric_tridiagonal_eigen;
pub use vector::{
    apply_clifford, apply_pauli_sum, expectation, expectation_of_square,
    expectation_of_square_pairwise, Statevector,
};
