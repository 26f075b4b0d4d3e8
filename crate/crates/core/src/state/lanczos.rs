use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::Error;
use crate::pauli::PauliSum;
use crate::scalar::{real, Real};
use crate::state::tridiag::symmetric_tridiagonal_eigen;
use crate::state::vector::{apply_pauli_sum, Statevector};
use crate::Result;

/// Knobs for the Lanczos ground-state solver.
#[derive(Debug, Clone, Copy)]
pub struct LanczosOptions {
    /// Residual tolerance on `‖Hv - Ev‖`.
    pub tol: f64,
    /// Krylov dimension cap.
    pub max_iterations: usize,
    /// Refuse registers wider than this (memory guard).
    pub qubit_cap: usize,
    /// Seed for the deterministic start vector.
    pub seed: u64,
}

impl Default for LanczosOptions {
    fn default() -> Self {
        Self { tol: 1e-8, max_iterations: 200, qubit_cap: 20, seed: 0x5eed }
    }
}

/// Lowest eigenpair of a Hermitian Pauli sum via Lanczos with full
/// reorthogonalization and a deterministic seeded start vector.
pub fn ground_state<T: Real>(
    h: &PauliSum<T>,
    opts: &LanczosOptions,
) -> Result<(T, Statevector<T>)> {
    let n = h.n_qubits();
    if n > opts.qubit_cap {
        return Err(Error::WidthOverCap(n, opts.qubit_cap));
    }
    let dim = 1usize << n;
    let mut rng = ChaCha12Rng::seed_from_u64(opts.seed);
    let start: Vec<Complex<T>> = (0..dim)
        .map(|_| {
            Complex::new(
                real::<T>(rng.gen_range(-1.0..1.0)),
                real::<T>(rng.gen_range(-1.0..1.0)),
            )
        })
        .collect();
    let v0 = Statevector::from_unnormalized(n, start);

    let mut basis: Vec<Vec<Complex<T>>> = vec![v0.amplitudes().to_vec()];
    let mut alphas: Vec<T> = Vec::new();
    let mut betas: Vec<T> = Vec::new();
    let tol = real::<T>(opts.tol);

    for k in 0..opts.max_iterations {
        let vk = Statevector::from_amplitudes(n, basis[k].clone())
            .unwrap_or_else(|_| Statevector::from_unnormalized(n, basis[k].clone()));
        let mut w = apply_pauli_sum(h, &vk)?;
        let alpha = dot(&basis[k], &w).re;
        alphas.push(alpha);

        // full reorthogonalization against every basis vector (twice for
        // numerical safety)
        for _ in 0..2 {
            for b in &basis {
                let overlap = dot(b, &w);
                for (wi, bi) in w.iter_mut().zip(b.iter()) {
                    *wi -= overlap * bi;
                }
            }
        }
        let beta = norm(&w);

        let (values, vectors) = symmetric_tridiagonal_eigen(&alphas, &betas)?;
        let ground = values[0];
        let coeffs = &vectors[0];
        // residual bound for the Ritz pair: |beta * last coefficient|
        let bound = (beta * coeffs[k]).abs();
        if bound <= tol || beta <= real::<T>(1e-14) || k + 1 == opts.max_iterations {
            let mut amps = vec![Complex::new(T::zero(), T::zero()); dim];
            for (c, b) in coeffs.iter().zip(basis.iter()) {
                for (a, bi) in amps.iter_mut().zip(b.iter()) {
                    *a += *bi * *c;
                }
            }
            let state = Statevector::from_unnormalized(n, amps);
            let residual = residual_norm(h, &state, ground)?;
            if residual > tol {
                if k + 1 == opts.max_iterations {
                    return Err(Error::NonConvergence {
                        residual: residual.to_f64().unwrap_or(f64::NAN),
                        iterations: k + 1,
                    });
                }
            } else {
                return Ok((ground, state));
            }
        }

        betas.push(beta);
        let next: Vec<Complex<T>> = w.iter().map(|a| *a / beta).collect();
        basis.push(next);
    }
    Err(Error::NonConvergence { residual: f64::NAN, iterations: opts.max_iterations })
}

fn dot<T: Real>(a: &[Complex<T>], b: &[Complex<T>]) -> Complex<T> {
    let mut acc = Complex::new(T::zero(), T::zero());
    for (x, y) in a.iter().zip(b.iter()) {
        acc += x.conj() * y;
    }
    acc
}

fn norm<T: Real>(a: &[Complex<T>]) -> T {
    a.iter().map(|x| x.norm_sqr()).sum::<T>().sqrt()
}

fn residual_norm<T: Real>(h: &PauliSum<T>, v: &Statevector<T>, energy: T) -> Result<T> {
    let hv = apply_pauli_sum(h, v)?;
    let mut acc = T::zero();
    for (x, y) in hv.iter().zip(v.amplitudes().iter()) {
        acc = acc + (x - y * energy).norm_sqr();
    }
    Ok(acc.sqrt())
}
