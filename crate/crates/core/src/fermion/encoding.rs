use num_complex::Complex;

use crate::fermion::{FermionOperator, LadderOp};
use crate::pauli::{PauliProduct, PauliSum};
use crate::scalar::{real, Real};
use crate::Result;

/// One ladder operator encoded as a short complex-weighted Pauli expansion.
type Encoded = Vec<(Complex<f64>, PauliProduct)>;

/// Maps a fermionic operator to qubits with the Jordan-Wigner transformation:
/// `a†_j = (X_j - iY_j)/2 · Z_{j-1} ... Z_0`.
pub fn jordan_wigner<T: Real>(op: &FermionOperator<T>, n_modes: usize) -> Result<PauliSum<T>> {
    op.check_modes(n_modes)?;
    encode(op, n_modes, |ladder| jw_ladder(ladder, n_modes))
}

/// Maps a fermionic operator to qubits with the Bravyi-Kitaev transformation
/// built on the Fenwick-tree (binary partial-parity) structure.
pub fn bravyi_kitaev<T: Real>(op: &FermionOperator<T>, n_modes: usize) -> Result<PauliSum<T>> {
    op.check_modes(n_modes)?;
    let tree = FenwickTree::new(n_modes);
    encode(op, n_modes, |ladder| bk_ladder(ladder, &tree, n_modes))
}

fn encode<T: Real, F>(op: &FermionOperator<T>, n_modes: usize, ladder: F) -> Result<PauliSum<T>>
where
    F: Fn(LadderOp) -> Encoded,
{
    let mut accum: Vec<(Complex<T>, PauliProduct)> = Vec::new();
    for (coeff, ops) in &op.terms {
        let mut partial: Encoded = vec![(Complex::new(1.0, 0.0), PauliProduct::identity(n_modes))];
        for &l in ops {
            let enc = ladder(l);
            let mut next: Encoded = Vec::with_capacity(partial.len() * enc.len());
            for (c1, p1) in &partial {
                for (c2, p2) in &enc {
                    next.push((c1 * c2, p1.multiply(p2)?));
                }
            }
            partial = next;
        }
        let c = coeff.to_f64().unwrap();
        for (w, product) in partial {
            let w = w * c;
            accum.push((
                Complex::new(real::<T>(w.re), real::<T>(w.im)),
                product,
            ));
        }
    }
    PauliSum::from_complex_terms(n_modes, accum)
}

fn mask_of(indices: &[usize]) -> u64 {
    indices.iter().fold(0u64, |m, &i| m | (1 << i))
}

fn jw_ladder(l: LadderOp, n: usize) -> Encoded {
    let parity = if l.mode == 0 { 0 } else { (1u64 << l.mode) - 1 };
    let x = PauliProduct::from_masks(n, 1 << l.mode, parity, 0).unwrap();
    let y = PauliProduct::from_masks(n, 1 << l.mode, parity | (1 << l.mode), 0).unwrap();
    let half = Complex::new(0.5, 0.0);
    let im_half = Complex::new(0.0, 0.5);
    if l.create {
        // (X - iY)/2 with the Z string below
        vec![(half, x), (-im_half, y)]
    } else {
        vec![(half, x), (im_half, y)]
    }
}

fn bk_ladder(l: LadderOp, tree: &FenwickTree, n: usize) -> Encoded {
    let j = l.mode;
    let update = mask_of(&tree.update_set(j));
    let parity = mask_of(&tree.parity_set(j));
    let flip = mask_of(&tree.flip_set(j));
    let remainder = parity & !flip;
    // Majorana-style components: c_j = X_U X_j Z_P, d_j = X_U Y_j Z_R.
    let c = PauliProduct::from_masks(n, update | (1 << j), parity, 0).unwrap();
    let d = PauliProduct::from_masks(n, update | (1 << j), remainder | (1 << j), 0).unwrap();
    let half = Complex::new(0.5, 0.0);
    let im_half = Complex::new(0.0, 0.5);
    if l.create {
        vec![(half, c), (-im_half, d)]
    } else {
        vec![(half, c), (im_half, d)]
    }
}

/// Fenwick tree over `n` modes: the binary partial-parity structure behind
/// the Bravyi-Kitaev encoding. Node `i` stores the occupation parity of the
/// contiguous mode interval `[lo(i), i]`.
#[derive(Debug, Clone)]
pub struct FenwickTree {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    interval_lo: Vec<usize>,
}

impl FenwickTree {
    pub fn new(n: usize) -> Self {
        let mut tree = Self {
            parent: vec![None; n],
            children: vec![Vec::new(); n],
            interval_lo: (0..n).collect(),
        };
        if n > 0 {
            tree.interval_lo[n - 1] = 0;
            tree.build(0, n - 1, n - 1);
        }
        tree
    }

    fn build(&mut self, left: usize, right: usize, parent: usize) {
        if left >= right {
            return;
        }
        let pivot = (left + right) >> 1;
        self.parent[pivot] = Some(parent);
        self.children[parent].push(pivot);
        self.interval_lo[pivot] = left;
        self.build(left, pivot, pivot);
        self.build(pivot + 1, right, parent);
    }

    /// Ancestors of `j`: the qubits whose stored parity flips with mode `j`.
    pub fn update_set(&self, j: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut node = j;
        while let Some(p) = self.parent[node] {
            out.push(p);
            node = p;
        }
        out
    }

    /// Direct children of `j`: the qubits determining the parity stored in `j`
    /// beyond mode `j` itself.
    pub fn flip_set(&self, j: usize) -> Vec<usize> {
        self.children[j].clone()
    }

    /// Minimal node cover of the interval `[0, j-1]`: the qubits whose stored
    /// parities XOR to the occupation parity of all modes below `j`.
    pub fn parity_set(&self, j: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut t = j as isize - 1;
        while t >= 0 {
            out.push(t as usize);
            t = self.interval_lo[t as usize] as isize - 1;
        }
        out
    }
}
