//! Molecular-integral ingestion and fermion-to-qubit encodings.
//!
//! FCIDUMP files carry MO-basis one- and two-electron integrals; they are
//! assembled into a second-quantized Hamiltonian over spin orbitals
//! (interleaved ordering: alpha on `2p`, beta on `2p + 1`) and mapped to
//! qubit operators with either the Jordan-Wigner or the Bravyi-Kitaev
//! (Fenwick-tree) transformation.

mod encoding;
mod fcidump;
mod operator;

pub use encoding::{bravyi_kitaev, jordan_wigner, FenwickTree};
pub use fcidump::parse_fcidump;
pub use operator::{build_second_quantized, FermionOperator, LadderOp, MolecularIntegrals};
