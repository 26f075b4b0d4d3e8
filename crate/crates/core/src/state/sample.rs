use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::Error;
use crate::pauli::PauliSum;
use crate::scalar::Real;
use crate::state::vector::Statevector;
use crate::Result;

/// Monte Carlo sampling of the depolarized measurement of an Ising-form
/// fragment.
///
/// With probability `fidelity` a shot draws a bitstring from `|phi|²`;
/// otherwise it draws uniformly from all `2^n` bitstrings (fully mixed
/// outcome). Each shot's value is `Σ_j a_j (-1)^popcount(z_j & b)` for the
/// sampled bitstring `b`. Returns one value per shot, deterministically from
/// `seed`.
pub fn sample_noisy_measurement<T: Real>(
    fragment: &PauliSum<T>,
    phi: &Statevector<T>,
    fidelity: f64,
    shots: usize,
    seed: u64,
) -> Result<Vec<T>> {
    if fragment.n_qubits() != phi.n_qubits() {
        return Err(Error::QubitMismatch(fragment.n_qubits(), phi.n_qubits()));
    }
    if !(fidelity > 0.0 && fidelity <= 1.0) {
        return Err(Error::InvalidFidelity(fidelity));
    }
    for (_, p) in fragment.terms() {
        if !p.is_ising() {
            return Err(Error::NotIsing(p.to_string()));
        }
    }

    // cumulative distribution over basis states for the ideal branch
    let mut cdf: Vec<f64> = Vec::with_capacity(phi.dim());
    let mut acc = 0.0f64;
    for a in phi.amplitudes() {
        acc += a.norm_sqr().to_f64().unwrap_or(0.0);
        cdf.push(acc);
    }
    let total = acc;

    let dim = phi.dim();
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(shots);
    for _ in 0..shots {
        let bits: usize = if rng.gen_range(0.0..1.0) < fidelity {
            let u = rng.gen_range(0.0..total);
            cdf.partition_point(|&c| c <= u).min(dim - 1)
        } else {
            rng.gen_range(0..dim)
        };
        let mut value = T::zero();
        for (coeff, p) in fragment.terms() {
            let sign = if (p.z_mask() & bits as u64).count_ones() % 2 == 0 {
                T::one()
            } else {
                -T::one()
            };
            value = value + *coeff * sign;
        }
        out.push(value);
    }
    Ok(out)
}
