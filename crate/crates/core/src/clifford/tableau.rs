use crate::clifford::{CliffordCircuit, CliffordGate};
use crate::pauli::PauliProduct;

/// Conjugates a Pauli product by one gate: `P -> U P U†`, tracking the sign
/// in the product's phase exponent.
pub(crate) fn apply_gate(p: &mut PauliProduct, gate: &CliffordGate) {
    let mut x = p.x_mask();
    let mut z = p.z_mask();
    let flip;
    match *gate {
        CliffordGate::H(q) => {
            let bx = x >> q & 1;
            let bz = z >> q & 1;
            // X <-> Z, Y -> -Y
            flip = bx & bz == 1;
            x ^= (bx ^ bz) << q;
            z ^= (bx ^ bz) << q;
        }
        CliffordGate::S(q) => {
            let bx = x >> q & 1;
            let bz = z >> q & 1;
            // X -> Y, Y -> -X
            flip = bx & bz == 1;
            z ^= bx << q;
        }
        CliffordGate::SDag(q) => {
            let bx = x >> q & 1;
            let bz = z >> q & 1;
            // X -> -Y, Y -> X
            flip = bx == 1 && bz == 0;
            z ^= bx << q;
        }
        CliffordGate::Cnot(c, t) => {
            let xc = x >> c & 1;
            let zt = z >> t & 1;
            let xt = x >> t & 1;
            let zc = z >> c & 1;
            flip = xc & zt & (1 ^ xt ^ zc) == 1;
            x ^= xc << t;
            z ^= zt << c;
        }
    }
    let phase = if flip { (p.phase_exp() + 2) % 4 } else { p.phase_exp() };
    *p = PauliProduct::from_masks(p.n_qubits(), x, z, phase).expect("masks in range");
}

/// The conjugation action of a Clifford circuit: the images of every
/// single-qubit X and Z generator, i.e. a 2N x 2N symplectic bit-matrix over
/// GF(2) plus 2N sign bits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    n_qubits: usize,
    x_images: Vec<PauliProduct>,
    z_images: Vec<PauliProduct>,
}

impl Tableau {
    /// Identity tableau.
    pub fn identity(n_qubits: usize) -> Self {
        Self {
            n_qubits,
            x_images: (0..n_qubits).map(|q| PauliProduct::x(q, n_qubits)).collect(),
            z_images: (0..n_qubits).map(|q| PauliProduct::z(q, n_qubits)).collect(),
        }
    }

    /// Tableau of a whole circuit.
    pub fn from_circuit(circuit: &CliffordCircuit) -> Self {
        let mut t = Self::identity(circuit.n_qubits());
        for gate in circuit.gates() {
            t.apply_gate(gate);
        }
        t
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    /// Image of `X_q` under conjugation.
    pub fn x_image(&self, q: usize) -> &PauliProduct {
        &self.x_images[q]
    }

    /// Image of `Z_q` under conjugation.
    pub fn z_image(&self, q: usize) -> &PauliProduct {
        &self.z_images[q]
    }

    pub fn apply_gate(&mut self, gate: &CliffordGate) {
        for p in self.x_images.iter_mut().chain(self.z_images.iter_mut()) {
            apply_gate(p, gate);
        }
    }

    /// Checks the symplectic-group invariant: images preserve all commutation
    /// relations of the generator set (`M Λ Mᵀ = Λ` over GF(2)).
    pub fn is_symplectic(&self) -> bool {
        let n = self.n_qubits;
        let gen = |i: usize| if i < n { &self.x_images[i] } else { &self.z_images[i - n] };
        for i in 0..2 * n {
            for j in i..2 * n {
                let expect_commute = !(i + n == j);
                let commute = gen(i).commutes(gen(j)).expect("same width");
                if commute != expect_commute {
                    return false;
                }
            }
        }
        true
    }
}
