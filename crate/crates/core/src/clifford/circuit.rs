use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::Result;

/// Gate alphabet: Hadamard, phase, inverse phase, and CNOT.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GateKind {
    H,
    S,
    SDag,
    Cnot,
}

/// One gate with its qubit operands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CliffordGate {
    H(usize),
    S(usize),
    SDag(usize),
    /// `(control, target)`
    Cnot(usize, usize),
}

impl CliffordGate {
    pub fn kind(&self) -> GateKind {
        match self {
            CliffordGate::H(_) => GateKind::H,
            CliffordGate::S(_) => GateKind::S,
            CliffordGate::SDag(_) => GateKind::SDag,
            CliffordGate::Cnot(..) => GateKind::Cnot,
        }
    }

    pub fn max_qubit(&self) -> usize {
        match *self {
            CliffordGate::H(q) | CliffordGate::S(q) | CliffordGate::SDag(q) => q,
            CliffordGate::Cnot(c, t) => c.max(t),
        }
    }

    fn inverse_of(&self, other: &CliffordGate) -> bool {
        match (*self, *other) {
            (CliffordGate::H(a), CliffordGate::H(b)) => a == b,
            (CliffordGate::S(a), CliffordGate::SDag(b)) => a == b,
            (CliffordGate::SDag(a), CliffordGate::S(b)) => a == b,
            (CliffordGate::Cnot(c1, t1), CliffordGate::Cnot(c2, t2)) => c1 == c2 && t1 == t2,
            _ => false,
        }
    }
}

impl fmt::Display for CliffordGate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CliffordGate::H(q) => write!(f, "H {q}"),
            CliffordGate::S(q) => write!(f, "S {q}"),
            CliffordGate::SDag(q) => write!(f, "SDG {q}"),
            CliffordGate::Cnot(c, t) => write!(f, "CNOT {c} {t}"),
        }
    }
}

/// An ordered list of Clifford gates on a fixed-width register.
///
/// Gates are listed in application order: the first gate acts on the state
/// first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliffordCircuit {
    n_qubits: usize,
    gates: Vec<CliffordGate>,
}

impl CliffordCircuit {
    pub fn new(n_qubits: usize) -> Self {
        Self { n_qubits, gates: Vec::new() }
    }

    pub fn from_gates(n_qubits: usize, gates: Vec<CliffordGate>) -> Result<Self> {
        for g in &gates {
            if g.max_qubit() >= n_qubits {
                return Err(Error::QubitMismatch(g.max_qubit() + 1, n_qubits));
            }
            if let CliffordGate::Cnot(c, t) = g {
                if c == t {
                    return Err(Error::Integrity(format!("CNOT with control == target ({c})")));
                }
            }
        }
        Ok(Self { n_qubits, gates })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn gates(&self) -> &[CliffordGate] {
        &self.gates
    }

    pub fn push(&mut self, gate: CliffordGate) {
        debug_assert!(gate.max_qubit() < self.n_qubits);
        self.gates.push(gate);
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    /// `(G1, G2)`: counts of one-qubit (H/S/SDG) and two-qubit (CNOT) gates.
    pub fn gate_counts(&self) -> (usize, usize) {
        let g2 = self
            .gates
            .iter()
            .filter(|g| matches!(g, CliffordGate::Cnot(..)))
            .count();
        (self.gates.len() - g2, g2)
    }

    /// `(G1, G2)` under a configurable Y-rotation cost model.
    ///
    /// With `y_cost = 2` (the default model) every gate counts once. With
    /// `y_cost = 1`, an adjacent `SDG q; H q` pair — the Y-basis local
    /// rotation — counts as a single one-qubit gate, matching devices that
    /// compile it to one pulse.
    pub fn gate_counts_with_y_cost(&self, y_cost: u8) -> (usize, usize) {
        let (g1, g2) = self.gate_counts();
        if y_cost != 1 {
            return (g1, g2);
        }
        let mut pairs = 0;
        let mut i = 0;
        while i + 1 < self.gates.len() {
            if let (CliffordGate::SDag(a), CliffordGate::H(b)) =
                (self.gates[i], self.gates[i + 1])
            {
                if a == b {
                    pairs += 1;
                    i += 2;
                    continue;
                }
            }
            i += 1;
        }
        (g1 - pairs, g2)
    }

    /// Serializes one gate per line: `H q`, `S q`, `SDG q`, `CNOT c t`.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for g in &self.gates {
            out.push_str(&g.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses the one-gate-per-line format.
    pub fn parse(text: &str, n_qubits: usize) -> Result<Self> {
        let mut gates = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let parse_q = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("line {}: bad qubit '{s}'", lineno + 1)))
            };
            let gate = match toks.as_slice() {
                ["H", q] => CliffordGate::H(parse_q(q)?),
                ["S", q] => CliffordGate::S(parse_q(q)?),
                ["SDG", q] => CliffordGate::SDag(parse_q(q)?),
                ["CNOT", c, t] => CliffordGate::Cnot(parse_q(c)?, parse_q(t)?),
                _ => return Err(Error::Parse(format!("line {}: unknown gate '{line}'", lineno + 1))),
            };
            gates.push(gate);
        }
        Self::from_gates(n_qubits, gates)
    }
}

/// Removes adjacent self-inverse pairs (H·H, S·SDG, SDG·S, CNOT·CNOT),
/// cascading through newly exposed pairs. The conjugation action is unchanged.
pub fn peephole_cleanup(circuit: &CliffordCircuit) -> CliffordCircuit {
    let mut stack: Vec<CliffordGate> = Vec::with_capacity(circuit.len());
    for &gate in circuit.gates() {
        if stack.last().is_some_and(|top| top.inverse_of(&gate)) {
            stack.pop();
        } else {
            stack.push(gate);
        }
    }
    CliffordCircuit { n_qubits: circuit.n_qubits, gates: stack }
}
