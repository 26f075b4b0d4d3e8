use std::collections::BTreeMap;

use num_complex::Complex;

use crate::error::Error;
use crate::pauli::PauliProduct;
use crate::scalar::{real, Real};
use crate::Result;

/// Terms with |coeff| below this are dropped during canonicalization.
pub const DEDUP_TOL: f64 = 1e-12;

/// Residual imaginary coefficients above this are rejected as non-Hermitian.
pub const HERMITICITY_TOL: f64 = 1e-8;

/// A Hermitian observable: a real-weighted sum of Pauli products.
///
/// Always kept in canonical form: phases folded into the coefficients,
/// duplicate `(x_mask, z_mask)` pairs merged, near-zero terms dropped, and
/// terms sorted by ascending `(x_mask, z_mask)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliSum<T: Real> {
    n_qubits: usize,
    terms: Vec<(T, PauliProduct)>,
}

impl<T: Real> PauliSum<T> {
    /// Canonicalizes a list of weighted products into a Hermitian sum.
    ///
    /// Phases are folded into the coefficients; a term whose folded
    /// coefficient retains an imaginary part above [`HERMITICITY_TOL`]
    /// is rejected.
    pub fn new(n_qubits: usize, terms: Vec<(T, PauliProduct)>) -> Result<Self> {
        let complex = terms
            .into_iter()
            .map(|(c, p)| (Complex::new(c, T::zero()), p))
            .collect();
        Self::from_complex_terms(n_qubits, complex)
    }

    /// Canonicalizes complex-weighted products, checking Hermiticity.
    pub fn from_complex_terms(
        n_qubits: usize,
        terms: Vec<(Complex<T>, PauliProduct)>,
    ) -> Result<Self> {
        let mut merged: BTreeMap<(u64, u64), Complex<T>> = BTreeMap::new();
        for (coeff, product) in terms {
            if product.n_qubits() != n_qubits {
                return Err(Error::QubitMismatch(product.n_qubits(), n_qubits));
            }
            // fold i^phase_exp into the coefficient
            let folded = match product.phase_exp() {
                0 => coeff,
                1 => coeff * Complex::new(T::zero(), T::one()),
                2 => -coeff,
                _ => coeff * Complex::new(T::zero(), -T::one()),
            };
            *merged
                .entry((product.x_mask(), product.z_mask()))
                .or_insert_with(|| Complex::new(T::zero(), T::zero())) += folded;
        }
        let dedup = real::<T>(DEDUP_TOL);
        let herm = real::<T>(HERMITICITY_TOL);
        let mut out = Vec::with_capacity(merged.len());
        for ((x, z), coeff) in merged {
            if coeff.re.abs() < dedup && coeff.im.abs() < dedup {
                continue;
            }
            let product = PauliProduct::from_masks(n_qubits, x, z, 0)?;
            if coeff.im.abs() > herm {
                return Err(Error::NonHermitian {
                    term: product.to_string(),
                    imag: coeff.im.to_f64().unwrap_or(f64::NAN),
                });
            }
            if coeff.re.abs() >= dedup {
                out.push((coeff.re, product));
            }
        }
        Ok(Self { n_qubits, terms: out })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn terms(&self) -> &[(T, PauliProduct)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every term is diagonal (Z/I only).
    pub fn is_ising(&self) -> bool {
        self.terms.iter().all(|(_, p)| p.is_ising())
    }

    /// Coefficient of the identity term, if present.
    pub fn identity_coeff(&self) -> T {
        self.terms
            .iter()
            .find(|(_, p)| p.is_identity())
            .map(|(c, _)| *c)
            .unwrap_or_else(T::zero)
    }

    /// Splits off the identity term: `(constant, traceless remainder)`.
    pub fn split_identity(&self) -> (T, Self) {
        let constant = self.identity_coeff();
        let rest: Vec<_> = self
            .terms
            .iter()
            .filter(|(_, p)| !p.is_identity())
            .cloned()
            .collect();
        (
            constant,
            Self { n_qubits: self.n_qubits, terms: rest },
        )
    }

    /// Σ_j a_j²  — equals Tr[H²]/2^N for a canonical (traceless-orthogonal) sum.
    pub fn sum_square_coeffs(&self) -> T {
        self.terms.iter().map(|(c, _)| *c * *c).sum()
    }

    /// Sum of two observables over the same register.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::QubitMismatch(self.n_qubits, other.n_qubits));
        }
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self::new(self.n_qubits, terms)
    }

    /// Parses the Hamiltonian text format: a `qubits: N` header, an optional
    /// `constant: c` line, then `<coeff> <pauli-string>` lines. `#` starts a
    /// comment; blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n_qubits: Option<usize> = None;
        let mut terms: Vec<(T, PauliProduct)> = Vec::new();
        let mut constant = T::zero();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("qubits:") {
                n_qubits = Some(rest.trim().parse().map_err(|_| {
                    Error::Parse(format!("line {}: bad qubit count", lineno + 1))
                })?);
                continue;
            }
            if let Some(rest) = line.strip_prefix("constant:") {
                let v: f64 = rest.trim().parse().map_err(|_| {
                    Error::Parse(format!("line {}: bad constant", lineno + 1))
                })?;
                constant = constant + real::<T>(v);
                continue;
            }
            let n = n_qubits.ok_or_else(|| {
                Error::Parse(format!("line {}: term before 'qubits:' header", lineno + 1))
            })?;
            let mut parts = line.splitn(2, char::is_whitespace);
            let coeff: f64 = parts
                .next()
                .unwrap_or("")
                .parse()
                .map_err(|_| Error::Parse(format!("line {}: bad coefficient", lineno + 1)))?;
            let pauli_text = parts.next().unwrap_or("").trim();
            let product = PauliProduct::parse(pauli_text, n)
                .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
            terms.push((real::<T>(coeff), product));
        }
        let n = n_qubits.ok_or_else(|| Error::Parse("missing 'qubits:' header".into()))?;
        if constant != T::zero() {
            terms.push((constant, PauliProduct::identity(n)));
        }
        Self::new(n, terms)
    }

    /// Serializes to the Hamiltonian text format (see [`PauliSum::parse`]).
    pub fn serialize(&self) -> String {
        let mut out = format!("qubits: {}\n", self.n_qubits);
        let (constant, rest) = self.split_identity();
        if constant != T::zero() {
            out.push_str(&format!("constant: {:.16e}\n", constant));
        }
        for (coeff, product) in &rest.terms {
            out.push_str(&format!("{:.16e} {}\n", coeff, product));
        }
        out
    }
}
