//! Measurement planning for variational quantum algorithms.
//!
//! Partitions a qubit Hamiltonian into commuting (FC) or qubit-wise commuting
//! (QWC) fragments, synthesizes the Clifford circuits that rotate each fragment
//! into Ising form, and estimates the total number of measurements required
//! under a depolarizing gate-fidelity model.
//!
//! Core numerics are generic over the scalar type through the [`Real`] trait;
//! concrete `f64` aliases are exported at the crate root.

pub mod clifford;
pub mod error;
pub mod fermion;
pub mod grouping;
pub mod metrics;
pub mod pauli;
pub mod scalar;
pub mod state;

pub use error::Error;
pub use scalar::Real;

pub use clifford::{CliffordCircuit, CliffordGate, Tableau};
pub use grouping::{FragmentSet, GroupingMode};
pub use metrics::{FragmentMetrics, MeasurementReport, NoiseParams};
pub use pauli::PauliProduct;

/// Convenience result type for this crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Double-precision Pauli sum.
pub type PauliSum = pauli::PauliSum<f64>;
/// Single-precision Pauli sum.
pub type PauliSum32 = pauli::PauliSum<f32>;
/// Double-precision statevector.
pub type Statevector = state::Statevector<f64>;
/// Single-precision statevector.
pub type Statevector32 = state::Statevector<f32>;
/// Double-precision molecular integrals.
pub type MolecularIntegrals = fermion::MolecularIntegrals<f64>;
/// Double-precision fermionic operator.
pub type FermionOperator = fermion::FermionOperator<f64>;
