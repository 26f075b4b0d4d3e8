//! Dense-matrix oracles shared by the integration tests.
//!
//! Everything here re-derives quantities from explicit `2^n × 2^n` matrices,
//! independently of the symplectic/tableau fast paths under test.

#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex;
use rand::Rng;

use shotplan_core::clifford::{CliffordCircuit, CliffordGate};
use shotplan_core::pauli::{PauliProduct, PauliSum};
use shotplan_core::state::Statevector;

pub type CMatrix = DMatrix<Complex<f64>>;

fn c(re: f64, im: f64) -> Complex<f64> {
    Complex::new(re, im)
}

/// Dense matrix of a single Pauli product, including its `i^phase_exp` prefix.
/// Qubit 0 is the least significant bit of the basis index.
pub fn pauli_matrix(p: &PauliProduct) -> CMatrix {
    let n = p.n_qubits();
    let dim = 1usize << n;
    let mut m = CMatrix::zeros(dim, dim);
    // The stored operator is i^phase_exp · ⨂ letters with Y a letter in its
    // own right; acting with X·Z literally loses an i per Y (X·Z = −i·Y),
    // so the overall prefix is i^(phase_exp + y_count).
    let phase = match (p.phase_exp() as u32 + p.y_count()) % 4 {
        0 => c(1.0, 0.0),
        1 => c(0.0, 1.0),
        2 => c(-1.0, 0.0),
        _ => c(0.0, -1.0),
    };
    for col in 0..dim as u64 {
        let row = col ^ p.x_mask();
        let sign = if (col & p.z_mask()).count_ones() % 2 == 0 { 1.0 } else { -1.0 };
        m[(row as usize, col as usize)] = phase * c(sign, 0.0);
    }
    m
}

/// Dense matrix of a Pauli sum.
pub fn sum_matrix(h: &PauliSum<f64>) -> CMatrix {
    let dim = 1usize << h.n_qubits();
    let mut m = CMatrix::zeros(dim, dim);
    for (coeff, p) in h.terms() {
        m += pauli_matrix(p) * c(*coeff, 0.0);
    }
    m
}

/// Dense unitary of a single gate on an `n`-qubit register.
pub fn gate_matrix(gate: &CliffordGate, n: usize) -> CMatrix {
    let dim = 1usize << n;
    let mut m = CMatrix::zeros(dim, dim);
    let s = std::f64::consts::FRAC_1_SQRT_2;
    for col in 0..dim {
        match *gate {
            CliffordGate::H(q) => {
                let bit = col >> q & 1;
                let sign = if bit == 1 { -1.0 } else { 1.0 };
                m[(col & !(1 << q), col)] += c(s, 0.0);
                m[(col | 1 << q, col)] += c(sign * s, 0.0);
            }
            CliffordGate::S(q) => {
                let v = if col >> q & 1 == 1 { c(0.0, 1.0) } else { c(1.0, 0.0) };
                m[(col, col)] = v;
            }
            CliffordGate::SDag(q) => {
                let v = if col >> q & 1 == 1 { c(0.0, -1.0) } else { c(1.0, 0.0) };
                m[(col, col)] = v;
            }
            CliffordGate::Cnot(ctrl, tgt) => {
                let row = if col >> ctrl & 1 == 1 { col ^ (1 << tgt) } else { col };
                m[(row, col)] = c(1.0, 0.0);
            }
        }
    }
    m
}

/// Dense unitary of a circuit. Gates apply in list order, so the first gate
/// is the rightmost factor.
pub fn circuit_matrix(circuit: &CliffordCircuit) -> CMatrix {
    let dim = 1usize << circuit.n_qubits();
    let mut u = CMatrix::identity(dim, dim);
    for gate in circuit.gates() {
        u = gate_matrix(gate, circuit.n_qubits()) * u;
    }
    u
}

/// Column vector of a statevector's amplitudes.
pub fn state_vector(v: &Statevector<f64>) -> DMatrix<Complex<f64>> {
    DMatrix::from_iterator(v.dim(), 1, v.amplitudes().iter().cloned())
}

/// Density matrix `|v⟩⟨v|`.
pub fn pure_density(v: &Statevector<f64>) -> CMatrix {
    let col = state_vector(v);
    &col * col.adjoint()
}

/// The depolarized preparation `F·UρU† + (1−F)·𝟙/d` for a pure input state.
pub fn depolarized_density(u: &CMatrix, rho: &CMatrix, fidelity: f64) -> CMatrix {
    let dim = rho.nrows();
    let rotated = u * rho * u.adjoint();
    rotated * c(fidelity, 0.0)
        + CMatrix::identity(dim, dim) * c((1.0 - fidelity) / dim as f64, 0.0)
}

/// `Tr[a·b]` as a real number (valid when the product is Hermitian-traced).
pub fn trace_product(a: &CMatrix, b: &CMatrix) -> f64 {
    (a * b).trace().re
}

pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Sorted real eigenvalues of a Hermitian matrix.
pub fn eigenvalues(m: &CMatrix) -> Vec<f64> {
    let mut vals: Vec<f64> = m
        .clone()
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .cloned()
        .collect();
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    vals
}

/// A uniformly random circuit from the H/S/S†/CNOT alphabet.
pub fn random_circuit<R: Rng>(rng: &mut R, n_qubits: usize, len: usize) -> CliffordCircuit {
    let mut circuit = CliffordCircuit::new(n_qubits);
    for _ in 0..len {
        let q = rng.gen_range(0..n_qubits);
        match rng.gen_range(0..4) {
            0 => circuit.push(CliffordGate::H(q)),
            1 => circuit.push(CliffordGate::S(q)),
            2 => circuit.push(CliffordGate::SDag(q)),
            _ => {
                if n_qubits < 2 {
                    circuit.push(CliffordGate::H(q));
                } else {
                    let mut t = rng.gen_range(0..n_qubits - 1);
                    if t >= q {
                        t += 1;
                    }
                    circuit.push(CliffordGate::Cnot(q, t));
                }
            }
        }
    }
    circuit
}

/// Circuit applying the inverse unitary: reversed gate order, S ↔ S†.
pub fn inverse_circuit(circuit: &CliffordCircuit) -> CliffordCircuit {
    let mut inv = CliffordCircuit::new(circuit.n_qubits());
    for gate in circuit.gates().iter().rev() {
        inv.push(match *gate {
            CliffordGate::H(q) => CliffordGate::H(q),
            CliffordGate::S(q) => CliffordGate::SDag(q),
            CliffordGate::SDag(q) => CliffordGate::S(q),
            CliffordGate::Cnot(ctrl, tgt) => CliffordGate::Cnot(ctrl, tgt),
        });
    }
    inv
}

/// A random Ising-form sum with `m` distinct non-identity Z-products.
pub fn random_ising_sum<R: Rng>(rng: &mut R, n_qubits: usize, m: usize) -> PauliSum<f64> {
    let dim = 1u64 << n_qubits;
    let mut masks = Vec::new();
    while masks.len() < m.min(dim as usize - 1) {
        let z = rng.gen_range(1..dim);
        if !masks.contains(&z) {
            masks.push(z);
        }
    }
    let terms = masks
        .into_iter()
        .map(|z| {
            let coeff = rng.gen_range(-1.0..1.0);
            (coeff, PauliProduct::from_masks(n_qubits, 0, z, 0).unwrap())
        })
        .collect();
    PauliSum::new(n_qubits, terms).unwrap()
}

/// A random mutually commuting fragment: a random Ising sum conjugated by a
/// random Clifford circuit. Returned with the circuit that re-diagonalizes it
/// (the inverse of the scrambling circuit).
pub fn random_fc_fragment<R: Rng>(
    rng: &mut R,
    n_qubits: usize,
    m: usize,
) -> (PauliSum<f64>, CliffordCircuit) {
    let ising = random_ising_sum(rng, n_qubits, m);
    let scramble = random_circuit(rng, n_qubits, 3 * n_qubits);
    let fragment = shotplan_core::clifford::conjugate_sum(&scramble, &ising).unwrap();
    (fragment, inverse_circuit(&scramble))
}

/// A random normalized statevector.
pub fn random_state<R: Rng>(rng: &mut R, n_qubits: usize) -> Statevector<f64> {
    let dim = 1usize << n_qubits;
    let amplitudes = (0..dim)
        .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    Statevector::from_unnormalized(n_qubits, amplitudes)
}

/// Path to a bundled fixture file.
pub fn fixture(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

/// Parses a bundled `.ham` fixture.
pub fn load_fixture(name: &str) -> PauliSum<f64> {
    let text = std::fs::read_to_string(fixture(name)).unwrap();
    PauliSum::parse(&text).unwrap()
}
