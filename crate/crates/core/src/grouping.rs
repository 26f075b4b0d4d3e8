//! Partitioning a Pauli sum into measurable fragments with Sorted Insertion.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::pauli::{PauliProduct, PauliSum};
use crate::scalar::{real, Real};
use crate::Result;

/// Compatibility predicate used when forming fragments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupingMode {
    /// Full commutativity: symplectic inner product vanishes.
    Fc,
    /// Qubit-wise commutativity: single-qubit factors commute pairwise.
    Qwc,
}

impl GroupingMode {
    pub fn compatible(&self, a: &PauliProduct, b: &PauliProduct) -> Result<bool> {
        match self {
            GroupingMode::Fc => a.commutes(b),
            GroupingMode::Qwc => a.qubit_wise_commutes(b),
        }
    }
}

impl fmt::Display for GroupingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupingMode::Fc => write!(f, "fc"),
            GroupingMode::Qwc => write!(f, "qwc"),
        }
    }
}

/// A partition of a Pauli sum into pairwise-compatible fragments.
///
/// The identity term is held out as an exactly-measured constant; the
/// coefficient-weighted union of `fragments` plus the constant reconstructs
/// the source Hamiltonian.
#[derive(Debug, Clone)]
pub struct FragmentSet<T: Real> {
    pub mode: GroupingMode,
    pub fragments: Vec<PauliSum<T>>,
    pub constant: T,
    pub source_terms: usize,
}

impl<T: Real> FragmentSet<T> {
    pub fn n_fragments(&self) -> usize {
        self.fragments.len()
    }

    pub fn fragment_sizes(&self) -> Vec<usize> {
        self.fragments.iter().map(|f| f.len()).collect()
    }
}

/// Greedy Sorted Insertion grouping.
///
/// Terms are processed in order of decreasing |coefficient|; ties keep the
/// canonical (ascending symplectic-mask) term order, so the ordering is fully
/// deterministic. Each term joins the first existing fragment compatible with
/// all of its members, otherwise it opens a new fragment. The identity term,
/// if present, is extracted as a constant offset first.
pub fn sorted_insertion<T: Real>(h: &PauliSum<T>, mode: GroupingMode) -> Result<FragmentSet<T>> {
    let (constant, rest) = h.split_identity();
    let mut order: Vec<(T, PauliProduct)> = rest.terms().to_vec();
    // stable sort: equal-magnitude coefficients stay in canonical order
    order.sort_by(|a, b| {
        b.0.abs()
            .partial_cmp(&a.0.abs())
            .unwrap_or(std::cmp::Ordering::Equal)
    });

    let mut members: Vec<Vec<(T, PauliProduct)>> = Vec::new();
    'terms: for (coeff, product) in order {
        for fragment in members.iter_mut() {
            let mut ok = true;
            for (_, member) in fragment.iter() {
                if !mode.compatible(&product, member)? {
                    ok = false;
                    break;
                }
            }
            if ok {
                fragment.push((coeff, product));
                continue 'terms;
            }
        }
        members.push(vec![(coeff, product)]);
    }

    let fragments = members
        .into_iter()
        .map(|terms| PauliSum::new(h.n_qubits(), terms))
        .collect::<Result<Vec<_>>>()?;
    Ok(FragmentSet {
        mode,
        fragments,
        constant,
        source_terms: rest.len(),
    })
}

/// One violation found by [`validate_partition`].
#[derive(Debug, Clone, Serialize)]
pub enum PartitionViolation {
    /// Two members of the same fragment fail the compatibility predicate.
    Incompatible { fragment: usize, a: String, b: String },
    /// Reconstructed coefficient differs from the source Hamiltonian.
    CoefficientMismatch { term: String, expected: f64, actual: f64 },
    /// A fragment with no terms.
    EmptyFragment { fragment: usize },
}

/// Result of checking a [`FragmentSet`] against its source Hamiltonian.
#[derive(Debug, Clone, Serialize)]
pub struct PartitionReport {
    pub n_fragments: usize,
    pub fragment_sizes: Vec<usize>,
    pub violations: Vec<String>,
}

impl PartitionReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Confirms the fragment-set invariants: pairwise compatibility inside each
/// fragment and exact reconstruction of the source Hamiltonian.
pub fn validate_partition<T: Real>(
    fs: &FragmentSet<T>,
    h: &PauliSum<T>,
) -> Result<PartitionReport> {
    let mut violations = Vec::new();
    for (fi, fragment) in fs.fragments.iter().enumerate() {
        if fragment.is_empty() {
            violations.push(format!("fragment {fi} is empty"));
        }
        let terms = fragment.terms();
        for i in 0..terms.len() {
            for j in (i + 1)..terms.len() {
                if !fs.mode.compatible(&terms[i].1, &terms[j].1)? {
                    violations.push(format!(
                        "fragment {fi}: {} and {} are not {}-compatible",
                        terms[i].1, terms[j].1, fs.mode
                    ));
                }
            }
        }
    }

    // reconstruction: union of fragments + constant == h
    let mut union: Vec<(T, PauliProduct)> = vec![(
        fs.constant,
        PauliProduct::identity(h.n_qubits()),
    )];
    for fragment in &fs.fragments {
        union.extend(fragment.terms().iter().cloned());
    }
    let reconstructed = PauliSum::new(h.n_qubits(), union)?;
    let tol = real::<T>(1e-12);
    let mut expected: Vec<(T, PauliProduct)> = h.terms().to_vec();
    for (c, p) in reconstructed.terms() {
        match expected.iter().position(|(_, q)| q == p) {
            Some(i) => {
                if (expected[i].0 - *c).abs() > tol {
                    violations.push(format!(
                        "term {p}: coefficient {c} differs from source {}",
                        expected[i].0
                    ));
                }
                expected.remove(i);
            }
            None => violations.push(format!("term {p} absent from source")),
        }
    }
    for (c, p) in expected {
        violations.push(format!("source term {p} (coeff {c}) missing from partition"));
    }

    Ok(PartitionReport {
        n_fragments: fs.n_fragments(),
        fragment_sizes: fs.fragment_sizes(),
        violations,
    })
}

/// Fails with [`Error::EmptyOperator`] when the Hamiltonian has no
/// non-identity terms to group.
pub fn require_nonempty<T: Real>(h: &PauliSum<T>) -> Result<()> {
    let (_, rest) = h.split_identity();
    if rest.is_empty() {
        return Err(Error::EmptyOperator);
    }
    Ok(())
}
