//! Exact symbolic algebra of Pauli products and Hermitian Pauli sums.
//!
//! Products are stored in symplectic form: an X bit-mask, a Z bit-mask and an
//! integer phase exponent (a global factor of `i^phase_exp`). Qubit 0 is the
//! least significant bit of a computational-basis index.

mod product;
mod sum;

pub use product::{PauliProduct, SingleQubitPauli, MAX_QUBITS};
pub use sum::PauliSum;
