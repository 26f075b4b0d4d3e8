use crate::error::Error;
use crate::scalar::Real;
use crate::Result;

/// MO-basis molecular integrals in chemist notation, `(pq|rs)`, Hartree units.
#[derive(Debug, Clone)]
pub struct MolecularIntegrals<T: Real> {
    n_orbitals: usize,
    n_electrons: usize,
    e_nuc: T,
    h1: Vec<T>,
    h2: Vec<T>,
}

impl<T: Real> MolecularIntegrals<T> {
    pub fn new(n_orbitals: usize, n_electrons: usize, e_nuc: T) -> Self {
        Self {
            n_orbitals,
            n_electrons,
            e_nuc,
            h1: vec![T::zero(); n_orbitals * n_orbitals],
            h2: vec![T::zero(); n_orbitals.pow(4)],
        }
    }

    pub fn n_orbitals(&self) -> usize {
        self.n_orbitals
    }

    pub fn n_electrons(&self) -> usize {
        self.n_electrons
    }

    pub fn e_nuc(&self) -> T {
        self.e_nuc
    }

    pub fn set_e_nuc(&mut self, v: T) {
        self.e_nuc = v;
    }

    pub fn h1(&self, p: usize, q: usize) -> T {
        self.h1[p * self.n_orbitals + q]
    }

    /// Stores a one-electron integral, mirroring `h1[q][p]`.
    pub fn set_h1(&mut self, p: usize, q: usize, v: T) {
        let n = self.n_orbitals;
        self.h1[p * n + q] = v;
        self.h1[q * n + p] = v;
    }

    /// Chemist-notation two-electron integral `(pq|rs)`.
    pub fn h2(&self, p: usize, q: usize, r: usize, s: usize) -> T {
        let n = self.n_orbitals;
        self.h2[((p * n + q) * n + r) * n + s]
    }

    /// Stores `(pq|rs)` in all 8 symmetry-equivalent slots.
    pub fn set_h2(&mut self, p: usize, q: usize, r: usize, s: usize, v: T) {
        let n = self.n_orbitals;
        for (a, b, c, d) in [
            (p, q, r, s),
            (q, p, r, s),
            (p, q, s, r),
            (q, p, s, r),
            (r, s, p, q),
            (s, r, p, q),
            (r, s, q, p),
            (s, r, q, p),
        ] {
            self.h2[((a * n + b) * n + c) * n + d] = v;
        }
    }
}

/// One creation or annihilation operator acting on a spin orbital.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LadderOp {
    pub mode: usize,
    pub create: bool,
}

impl LadderOp {
    pub fn create(mode: usize) -> Self {
        Self { mode, create: true }
    }

    pub fn annihilate(mode: usize) -> Self {
        Self { mode, create: false }
    }
}

/// A real-weighted sum of ladder-operator strings.
#[derive(Debug, Clone, Default)]
pub struct FermionOperator<T: Real> {
    pub terms: Vec<(T, Vec<LadderOp>)>,
}

impl<T: Real> FermionOperator<T> {
    pub fn new() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn add_term(&mut self, coeff: T, ops: Vec<LadderOp>) {
        if coeff != T::zero() {
            self.terms.push((coeff, ops));
        }
    }

    /// Largest referenced mode index plus one.
    pub fn max_mode(&self) -> usize {
        self.terms
            .iter()
            .flat_map(|(_, ops)| ops.iter().map(|op| op.mode + 1))
            .max()
            .unwrap_or(0)
    }

    pub fn check_modes(&self, n_modes: usize) -> Result<()> {
        for (_, ops) in &self.terms {
            for op in ops {
                if op.mode >= n_modes {
                    return Err(Error::ModeOutOfRange(op.mode, n_modes));
                }
            }
        }
        Ok(())
    }
}

/// Assembles the electronic Hamiltonian in second quantization:
///
/// `H = e_nuc + Σ_pq,σ h1[p][q] a†_pσ a_qσ
///        + ½ Σ_pqrs,στ (pq|rs) a†_pσ a†_rτ a_sτ a_qσ`
///
/// with interleaved spin orbitals (alpha = `2p`, beta = `2p + 1`).
pub fn build_second_quantized<T: Real>(mi: &MolecularIntegrals<T>) -> FermionOperator<T> {
    let n = mi.n_orbitals();
    let mut op = FermionOperator::new();
    if mi.e_nuc() != T::zero() {
        op.add_term(mi.e_nuc(), vec![]);
    }
    let half = T::from_f64(0.5).unwrap();
    for p in 0..n {
        for q in 0..n {
            let h = mi.h1(p, q);
            if h == T::zero() {
                continue;
            }
            for sigma in 0..2 {
                op.add_term(
                    h,
                    vec![LadderOp::create(2 * p + sigma), LadderOp::annihilate(2 * q + sigma)],
                );
            }
        }
    }
    for p in 0..n {
        for q in 0..n {
            for r in 0..n {
                for s in 0..n {
                    let g = mi.h2(p, q, r, s);
                    if g == T::zero() {
                        continue;
                    }
                    for sigma in 0..2 {
                        for tau in 0..2 {
                            op.add_term(
                                half * g,
                                vec![
                                    LadderOp::create(2 * p + sigma),
                                    LadderOp::create(2 * r + tau),
                                    LadderOp::annihilate(2 * s + tau),
                                    LadderOp::annihilate(2 * q + sigma),
                                ],
                            );
                        }
                    }
                }
            }
        }
    }
    op
}
