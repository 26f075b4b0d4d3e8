//! Clifford circuits: representation, Pauli conjugation, and synthesis of the
//! measurement rotations that bring a commuting fragment into Ising form.

mod circuit;
mod pmh;
mod synthesis;
mod tableau;

pub use circuit::{peephole_cleanup, CliffordCircuit, CliffordGate, GateKind};
pub use pmh::{apply_cnot_list, synthesize_linear, Gf2Matrix};
pub use synthesis::{conjugate_product, conjugate_sum, synthesize_fc, synthesize_qwc};
pub use tableau::Tableau;
