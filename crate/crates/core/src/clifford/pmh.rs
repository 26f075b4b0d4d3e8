//! CNOT-block synthesis: Patel-Markov-Hayes block Gaussian elimination,
//! producing `O(n^2 / log n)` CNOTs for an invertible GF(2) linear map.

use crate::clifford::CliffordGate;

/// Square bit-matrix over GF(2); row `i` is a `u64` mask (n <= 64).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    pub n: usize,
    pub rows: Vec<u64>,
}

impl Gf2Matrix {
    pub fn identity(n: usize) -> Self {
        Self { n, rows: (0..n).map(|i| 1u64 << i).collect() }
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r] >> c & 1 == 1
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, &r)| r == 1u64 << i)
    }

    /// Composes one CNOT acting on basis-state bits (`x_t ^= x_c`) into the
    /// accumulated map: row `t` ^= row `c`.
    pub fn apply_cnot(&mut self, control: usize, target: usize) {
        self.rows[target] ^= self.rows[control];
    }
}

/// Linear map realized by a CNOT list applied in circuit order.
pub fn apply_cnot_list(n: usize, gates: &[CliffordGate]) -> Gf2Matrix {
    let mut m = Gf2Matrix::identity(n);
    for g in gates {
        if let CliffordGate::Cnot(c, t) = *g {
            m.apply_cnot(c, t);
        }
    }
    m
}

/// Synthesizes a CNOT circuit for an invertible GF(2) map using block
/// Gaussian elimination with block size `ceil(log2(n)/2)` (minimum 1).
///
/// The returned gates, applied in order, realize exactly the map `m`
/// (state bits transform as `x -> M x`).
pub fn synthesize_linear(m: &Gf2Matrix) -> Vec<CliffordGate> {
    let n = m.n;
    if n == 0 {
        return Vec::new();
    }
    let block = (((n as f64).log2() / 2.0).ceil() as usize).max(1);
    let mut work = m.clone();

    // Lower pass: row ops reduce to upper triangular.
    let row_ops = lower_eliminate(&mut work, block);
    // Upper pass: eliminate the remaining upper triangle via column ops,
    // realized as row ops on the transpose.
    let mut transposed = transpose(&work);
    let col_ops = lower_eliminate(&mut transposed, block);
    debug_assert!(transposed.is_identity());

    // M = R1...Rk · Cl...C1 (each op self-inverse), applied right-to-left:
    // circuit order is C1..Cl then Rk..R1. A row op (c, t) is CNOT(c, t);
    // a column op (c, t) is CNOT(t, c).
    let mut gates = Vec::with_capacity(row_ops.len() + col_ops.len());
    for &(c, t) in &col_ops {
        gates.push(CliffordGate::Cnot(t, c));
    }
    for &(c, t) in row_ops.iter().rev() {
        gates.push(CliffordGate::Cnot(c, t));
    }
    gates
}

fn transpose(m: &Gf2Matrix) -> Gf2Matrix {
    let n = m.n;
    let mut rows = vec![0u64; n];
    for (i, &row) in m.rows.iter().enumerate() {
        for j in 0..n {
            if row >> j & 1 == 1 {
                rows[j] |= 1 << i;
            }
        }
    }
    Gf2Matrix { n, rows }
}

/// Reduces `m` to upper triangular form with row ops `row_t ^= row_c`,
/// recording each as `(c, t)`. Duplicate sub-rows within a column block are
/// merged first (the Patel-Markov-Hayes trick).
fn lower_eliminate(m: &mut Gf2Matrix, block: usize) -> Vec<(usize, usize)> {
    let n = m.n;
    let mut ops = Vec::new();
    let mut sec_start = 0;
    while sec_start < n {
        let sec_end = (sec_start + block).min(n);
        let sec_mask: u64 = ((1u128 << sec_end) - (1u128 << sec_start)) as u64;

        // merge rows with identical patterns in this column section
        let mut seen: Vec<(u64, usize)> = Vec::new();
        for row in sec_start..n {
            let pat = m.rows[row] & sec_mask;
            if pat == 0 {
                continue;
            }
            if let Some(&(_, first)) = seen.iter().find(|&&(p, _)| p == pat) {
                if first != row {
                    m.rows[row] ^= m.rows[first];
                    ops.push((first, row));
                }
            } else {
                seen.push((pat, row));
            }
        }

        // plain elimination within the section
        for col in sec_start..sec_end {
            if !m.get(col, col) {
                let pivot = (col + 1..n).find(|&r| m.get(r, col));
                if let Some(r) = pivot {
                    m.rows[col] ^= m.rows[r];
                    ops.push((r, col));
                }
            }
            for row in col + 1..n {
                if m.get(row, col) {
                    m.rows[row] ^= m.rows[col];
                    ops.push((col, row));
                }
            }
        }
        sec_start = sec_end;
    }
    ops
}
