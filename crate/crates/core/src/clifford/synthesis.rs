use crate::clifford::circuit::{peephole_cleanup, CliffordCircuit, CliffordGate};
use crate::clifford::pmh::{apply_cnot_list, synthesize_linear};
use crate::clifford::tableau;
use crate::error::Error;
use crate::pauli::{PauliProduct, PauliSum, SingleQubitPauli};
use crate::scalar::Real;
use crate::Result;

/// Conjugates one product through a circuit: `P -> U P U†`.
pub fn conjugate_product(circuit: &CliffordCircuit, p: &PauliProduct) -> Result<PauliProduct> {
    if circuit.n_qubits() != p.n_qubits() {
        return Err(Error::QubitMismatch(circuit.n_qubits(), p.n_qubits()));
    }
    let mut q = *p;
    for gate in circuit.gates() {
        tableau::apply_gate(&mut q, gate);
    }
    Ok(q)
}

/// Conjugates a Pauli sum through a circuit term by term. Coefficient
/// magnitudes are preserved; accumulated signs fold into the coefficients.
pub fn conjugate_sum<T: Real>(circuit: &CliffordCircuit, h: &PauliSum<T>) -> Result<PauliSum<T>> {
    if circuit.n_qubits() != h.n_qubits() {
        return Err(Error::QubitMismatch(circuit.n_qubits(), h.n_qubits()));
    }
    let mut terms = Vec::with_capacity(h.len());
    for (coeff, product) in h.terms() {
        terms.push((*coeff, conjugate_product(circuit, product)?));
    }
    PauliSum::new(h.n_qubits(), terms)
}

/// Synthesizes the local measurement circuit for a qubit-wise commuting
/// fragment: per qubit, X-basis -> `[H]`, Y-basis -> `[SDG, H]`, Z or I ->
/// nothing. The result contains single-qubit gates only.
pub fn synthesize_qwc<T: Real>(fragment: &PauliSum<T>) -> Result<CliffordCircuit> {
    let n = fragment.n_qubits();
    let mut basis = vec![SingleQubitPauli::I; n];
    for (_, product) in fragment.terms() {
        for q in 0..n {
            let op = product.op_on(q);
            if op == SingleQubitPauli::I {
                continue;
            }
            match basis[q] {
                SingleQubitPauli::I => basis[q] = op,
                b if b == op => {}
                _ => {
                    return Err(Error::NotQubitWiseCommuting(
                        format!("qubit {q} carries {:?}", basis[q]),
                        format!("{:?} in {product}", op),
                    ))
                }
            }
        }
    }
    let mut circuit = CliffordCircuit::new(n);
    for (q, b) in basis.iter().enumerate() {
        match b {
            SingleQubitPauli::X => circuit.push(CliffordGate::H(q)),
            SingleQubitPauli::Y => {
                circuit.push(CliffordGate::SDag(q));
                circuit.push(CliffordGate::H(q));
            }
            _ => {}
        }
    }
    Ok(circuit)
}

/// Synthesizes a Clifford circuit diagonalizing a fully commuting fragment.
///
/// An independent generating subset of the fragment is extracted by GF(2)
/// elimination in term order; each generator is then mapped to a single-qubit
/// Z on a fresh pivot qubit (local H/S layer, CNOT fan, final H). Maximal
/// CNOT blocks of the resulting staged circuit are re-synthesized with
/// Patel-Markov-Hayes block elimination, then self-inverse pairs are removed.
pub fn synthesize_fc<T: Real>(fragment: &PauliSum<T>) -> Result<CliffordCircuit> {
    let n = fragment.n_qubits();
    let products: Vec<PauliProduct> = fragment.terms().iter().map(|(_, p)| *p).collect();
    for i in 0..products.len() {
        for j in (i + 1)..products.len() {
            if !products[i].commutes(&products[j])? {
                return Err(Error::NotCommuting(
                    products[i].to_string(),
                    products[j].to_string(),
                ));
            }
        }
    }
    if products.iter().all(|p| p.is_ising()) {
        return Ok(CliffordCircuit::new(n));
    }

    let generators = independent_subset(&products);
    let mut circuit = CliffordCircuit::new(n);
    let mut images = generators;
    let mut pivots: Vec<usize> = Vec::new();

    for i in 0..images.len() {
        let mut p = images[i];
        // Clear Z bits on earlier pivots: multiply by the earlier images,
        // which are single-qubit Z's there. This re-picks the generator but
        // leaves the generated group unchanged.
        for (j, &pivot) in pivots.iter().enumerate() {
            if p.z_mask() >> pivot & 1 == 1 {
                p = p.multiply(&images[j])?;
            }
        }
        debug_assert!(!p.is_identity(), "independent generator reduced to identity");

        let mut stage: Vec<CliffordGate> = Vec::new();
        if p.is_ising() {
            // reduce a multi-qubit Z product to a single Z with CNOTs only
            let support: Vec<usize> = (0..n).filter(|&q| p.z_mask() >> q & 1 == 1).collect();
            let pivot = support[0];
            for &q in &support[1..] {
                stage.push(CliffordGate::Cnot(q, pivot));
            }
            pivots.push(pivot);
        } else {
            // local layer: rotate every support qubit into the X basis
            for q in 0..n {
                match p.op_on(q) {
                    SingleQubitPauli::Y => stage.push(CliffordGate::S(q)),
                    SingleQubitPauli::Z => stage.push(CliffordGate::H(q)),
                    _ => {}
                }
            }
            let mut q0 = p;
            for g in &stage {
                tableau::apply_gate(&mut q0, g);
            }
            let support: Vec<usize> = (0..n).filter(|&q| q0.x_mask() >> q & 1 == 1).collect();
            let pivot = support[0];
            for &q in &support[1..] {
                stage.push(CliffordGate::Cnot(pivot, q));
            }
            stage.push(CliffordGate::H(pivot));
            pivots.push(pivot);
        }

        for g in &stage {
            circuit.push(*g);
            for img in images.iter_mut() {
                tableau::apply_gate(img, g);
            }
        }
        images[i] = {
            let mut q = p;
            for g in &stage {
                tableau::apply_gate(&mut q, g);
            }
            q
        };
        debug_assert!(images[i].weight() == 1 && images[i].is_ising());
    }

    let circuit = resynthesize_cnot_blocks(&circuit);
    let circuit = peephole_cleanup(&circuit);

    // integrity: the circuit must diagonalize the fragment
    for p in &products {
        let image = conjugate_product(&circuit, p)?;
        if !image.is_ising() {
            return Err(Error::Integrity(format!(
                "synthesized circuit fails to diagonalize {p}"
            )));
        }
    }
    Ok(circuit)
}

/// Picks a GF(2)-independent subset of the products (in input order) whose
/// span contains every product.
fn independent_subset(products: &[PauliProduct]) -> Vec<PauliProduct> {
    let mut basis: Vec<(u128, PauliProduct)> = Vec::new();
    for p in products {
        let mut vec = (p.x_mask() as u128) << 64 | p.z_mask() as u128;
        for (b, _) in &basis {
            let lead = 127 - b.leading_zeros();
            if vec >> lead & 1 == 1 {
                vec ^= b;
            }
        }
        if vec != 0 {
            let mut row = (p.x_mask() as u128) << 64 | p.z_mask() as u128;
            // reduce against existing rows to keep leading bits distinct
            for (b, _) in &basis {
                let lead = 127 - b.leading_zeros();
                if row >> lead & 1 == 1 {
                    row ^= b;
                }
            }
            basis.push((row, *p));
            basis.sort_by_key(|(b, _)| std::cmp::Reverse(*b));
        }
    }
    basis.into_iter().map(|(_, p)| p).collect()
}

/// Replaces each maximal run of CNOTs with a Patel-Markov-Hayes resynthesis
/// whenever that shortens it.
fn resynthesize_cnot_blocks(circuit: &CliffordCircuit) -> CliffordCircuit {
    let n = circuit.n_qubits();
    let mut out = CliffordCircuit::new(n);
    let gates = circuit.gates();
    let mut i = 0;
    while i < gates.len() {
        if matches!(gates[i], CliffordGate::Cnot(..)) {
            let start = i;
            while i < gates.len() && matches!(gates[i], CliffordGate::Cnot(..)) {
                i += 1;
            }
            let run = &gates[start..i];
            let map = apply_cnot_list(n, run);
            let resynth = synthesize_linear(&map);
            let chosen = if resynth.len() < run.len() { &resynth[..] } else { run };
            for g in chosen {
                out.push(*g);
            }
        } else {
            out.push(gates[i]);
            i += 1;
        }
    }
    out
}
