use std::fmt;

use crate::error::Error;
use crate::Result;

/// Widest supported register; masks are stored in a single `u64` word.
pub const MAX_QUBITS: usize = 64;

/// The operator carried by one qubit of a [`PauliProduct`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingleQubitPauli {
    I,
    X,
    Y,
    Z,
}

impl SingleQubitPauli {
    fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Self::I,
            (true, false) => Self::X,
            (true, true) => Self::Y,
            (false, true) => Self::Z,
        }
    }

    fn letter(self) -> char {
        match self {
            Self::I => 'I',
            Self::X => 'X',
            Self::Y => 'Y',
            Self::Z => 'Z',
        }
    }
}

/// A tensor product of single-qubit Pauli operators with a global `i^phase_exp`.
///
/// Qubit `q` carries I, X, Y or Z according to the `(x, z)` bit pair at
/// position `q`, with Y = `(1, 1)` (the convention `Y = i·X·Z` fixes the
/// multiplication table).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PauliProduct {
    n_qubits: usize,
    x_mask: u64,
    z_mask: u64,
    phase_exp: u8,
}

impl PauliProduct {
    /// The identity on `n_qubits` qubits.
    pub fn identity(n_qubits: usize) -> Self {
        assert!(n_qubits <= MAX_QUBITS);
        Self { n_qubits, x_mask: 0, z_mask: 0, phase_exp: 0 }
    }

    /// Builds a product from raw symplectic masks.
    pub fn from_masks(n_qubits: usize, x_mask: u64, z_mask: u64, phase_exp: u8) -> Result<Self> {
        if n_qubits > MAX_QUBITS {
            return Err(Error::TooManyQubits(n_qubits));
        }
        let valid = if n_qubits == 64 { u64::MAX } else { (1u64 << n_qubits) - 1 };
        if x_mask & !valid != 0 || z_mask & !valid != 0 {
            return Err(Error::Parse(format!(
                "mask bits outside {n_qubits}-qubit register"
            )));
        }
        Ok(Self { n_qubits, x_mask, z_mask, phase_exp: phase_exp % 4 })
    }

    /// Single-qubit X on `qubit`.
    pub fn x(qubit: usize, n_qubits: usize) -> Self {
        assert!(qubit < n_qubits && n_qubits <= MAX_QUBITS);
        Self { n_qubits, x_mask: 1 << qubit, z_mask: 0, phase_exp: 0 }
    }

    /// Single-qubit Y on `qubit`.
    pub fn y(qubit: usize, n_qubits: usize) -> Self {
        assert!(qubit < n_qubits && n_qubits <= MAX_QUBITS);
        Self { n_qubits, x_mask: 1 << qubit, z_mask: 1 << qubit, phase_exp: 0 }
    }

    /// Single-qubit Z on `qubit`.
    pub fn z(qubit: usize, n_qubits: usize) -> Self {
        assert!(qubit < n_qubits && n_qubits <= MAX_QUBITS);
        Self { n_qubits, x_mask: 0, z_mask: 1 << qubit, phase_exp: 0 }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn x_mask(&self) -> u64 {
        self.x_mask
    }

    pub fn z_mask(&self) -> u64 {
        self.z_mask
    }

    pub fn phase_exp(&self) -> u8 {
        self.phase_exp
    }

    /// Strips the phase, leaving the bare tensor product.
    pub fn without_phase(mut self) -> Self {
        self.phase_exp = 0;
        self
    }

    /// Returns `self` multiplied by `i^k`.
    pub fn with_phase_mul(mut self, k: u8) -> Self {
        self.phase_exp = (self.phase_exp + k) % 4;
        self
    }

    /// The operator on a given qubit.
    pub fn op_on(&self, qubit: usize) -> SingleQubitPauli {
        SingleQubitPauli::from_bits(
            self.x_mask >> qubit & 1 == 1,
            self.z_mask >> qubit & 1 == 1,
        )
    }

    /// True when the product is the identity (any phase).
    pub fn is_identity(&self) -> bool {
        self.x_mask == 0 && self.z_mask == 0
    }

    /// True when only Z and identity factors appear (diagonal operator).
    pub fn is_ising(&self) -> bool {
        self.x_mask == 0
    }

    /// Number of qubits carrying a Y factor.
    pub fn y_count(&self) -> u32 {
        (self.x_mask & self.z_mask).count_ones()
    }

    /// Number of non-identity factors.
    pub fn weight(&self) -> u32 {
        (self.x_mask | self.z_mask).count_ones()
    }

    fn check_width(&self, other: &Self) -> Result<()> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::QubitMismatch(self.n_qubits, other.n_qubits));
        }
        Ok(())
    }

    /// Product `self · other` with exact phase tracking.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_width(other)?;
        let (a, b) = (self.x_mask, self.z_mask);
        let (c, d) = (other.x_mask, other.z_mask);
        // Per-qubit contribution to the i-exponent from the single-qubit table:
        // XY=iZ, YZ=iX, ZX=iY give +1; the reversed orders give +3 (= -1 mod 4).
        let plus = (a & !b & c & d) | (a & b & !c & d) | (!a & b & c & !d);
        let minus = (a & b & c & !d) | (!a & b & c & d) | (a & !b & !c & d);
        let phase = (self.phase_exp as u32
            + other.phase_exp as u32
            + plus.count_ones()
            + 3 * minus.count_ones())
            % 4;
        Ok(Self {
            n_qubits: self.n_qubits,
            x_mask: a ^ c,
            z_mask: b ^ d,
            phase_exp: phase as u8,
        })
    }

    /// Full (matrix) commutation test via the symplectic form.
    pub fn commutes(&self, other: &Self) -> Result<bool> {
        self.check_width(other)?;
        let sym = (self.x_mask & other.z_mask).count_ones()
            + (self.z_mask & other.x_mask).count_ones();
        Ok(sym % 2 == 0)
    }

    /// Qubit-wise commutation: on every qubit one factor is identity or both match.
    pub fn qubit_wise_commutes(&self, other: &Self) -> Result<bool> {
        self.check_width(other)?;
        let support1 = self.x_mask | self.z_mask;
        let support2 = other.x_mask | other.z_mask;
        let differ = (self.x_mask ^ other.x_mask) | (self.z_mask ^ other.z_mask);
        Ok(support1 & support2 & differ == 0)
    }

    /// Parses the text grammar `("X"|"Y"|"Z")<index>` tokens separated by
    /// whitespace, or the literal `"I"` for the identity.
    pub fn parse(text: &str, n_qubits: usize) -> Result<Self> {
        if n_qubits > MAX_QUBITS {
            return Err(Error::TooManyQubits(n_qubits));
        }
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty Pauli string".into()));
        }
        if text == "I" {
            return Ok(Self::identity(n_qubits));
        }
        let mut x_mask = 0u64;
        let mut z_mask = 0u64;
        let mut seen = 0u64;
        for token in text.split_whitespace() {
            let (letter, index) = token.split_at(1);
            let index: usize = index
                .parse()
                .map_err(|_| Error::Parse(format!("malformed token '{token}'")))?;
            if index >= n_qubits {
                return Err(Error::Parse(format!(
                    "qubit index {index} out of range (n_qubits = {n_qubits})"
                )));
            }
            if seen >> index & 1 == 1 {
                return Err(Error::Parse(format!("duplicate qubit index {index}")));
            }
            seen |= 1 << index;
            match letter {
                "X" => x_mask |= 1 << index,
                "Y" => {
                    x_mask |= 1 << index;
                    z_mask |= 1 << index;
                }
                "Z" => z_mask |= 1 << index,
                _ => return Err(Error::Parse(format!("malformed token '{token}'"))),
            }
        }
        Ok(Self { n_qubits, x_mask, z_mask, phase_exp: 0 })
    }
}

impl fmt::Display for PauliProduct {
    /// Formats as ascending-index tokens, e.g. `X0 Z3`; the identity as `I`.
    /// The phase prefix is printed only when non-trivial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.phase_exp {
            0 => {}
            1 => write!(f, "i*")?,
            2 => write!(f, "-")?,
            _ => write!(f, "-i*")?,
        }
        if self.is_identity() {
            return write!(f, "I");
        }
        let mut first = true;
        for q in 0..self.n_qubits {
            let op = self.op_on(q);
            if op == SingleQubitPauli::I {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}{}", op.letter(), q)?;
            first = false;
        }
        Ok(())
    }
}
