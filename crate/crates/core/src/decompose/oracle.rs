//! Brute-force reference: materialise `P_n` by Kronecker products of the 2x2
//! Pauli matrices and take the normalised trace of `P_n G` as a full double sum.
//!
//! Shares nothing with the Gray-code kernels beyond the string indexing
//! convention, which makes it usable as ground truth in tests.

use num_complex::Complex64;

use super::kernel::check_index;
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::pauli::{check_qubits, pauli_digit, PauliOp};

/// Largest qubit count the oracle accepts.
pub const ORACLE_MAX_QUBITS: u32 = 6;

pub fn pauli_matrix(op: PauliOp) -> [Complex64; 4] {
    let o = Complex64::new(0.0, 0.0);
    let l = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    match op {
        PauliOp::I => [l, o, o, l],
        PauliOp::X => [o, l, l, o],
        PauliOp::Y => [o, -i, i, o],
        PauliOp::Z => [l, o, o, -l],
    }
}

/// Kronecker product of two square row-major matrices.
pub fn kron(a: &[Complex64], a_dim: usize, b: &[Complex64], b_dim: usize) -> Vec<Complex64> {
    let dim = a_dim * b_dim;
    let mut out = vec![Complex64::new(0.0, 0.0); dim * dim];
    for ar in 0..a_dim {
        for ac in 0..a_dim {
            let s = a[ar * a_dim + ac];
            for br in 0..b_dim {
                for bc in 0..b_dim {
                    out[(ar * b_dim + br) * dim + ac * b_dim + bc] = s * b[br * b_dim + bc];
                }
            }
        }
    }
    out
}

/// Dense matrix of string `n`: `sigma_{N-1} (x) ... (x) sigma_0`.
pub fn pauli_string_matrix(n: u64, num_qubits: u32) -> Result<DenseMatrix> {
    check_qubits(num_qubits)?;
    if num_qubits > ORACLE_MAX_QUBITS {
        return Err(Error::OracleTooLarge {
            num_qubits,
            max: ORACLE_MAX_QUBITS,
        });
    }
    let mut acc = vec![Complex64::new(1.0, 0.0)];
    let mut dim = 1;
    for t in (0..num_qubits).rev() {
        acc = kron(&acc, dim, &pauli_matrix(pauli_digit(n, t)), 2);
        dim *= 2;
    }
    DenseMatrix::new(num_qubits, acc)
}

/// `2^-N Tr(P_n G)` evaluated as `sum_ij P[i][j] G[j][i]` over every entry.
pub fn oracle_coeff_kron(g: &DenseMatrix, n: u64) -> Result<Complex64> {
    check_index(g, n)?;
    let p = pauli_string_matrix(n, g.num_qubits())?;
    let dim = g.dim();
    let mut trace = Complex64::new(0.0, 0.0);
    for i in 0..dim {
        for j in 0..dim {
            trace += p.get(i, j) * g.get(j, i);
        }
    }
    Ok(trace / dim as f64)
}

/// Every coefficient via the oracle.
pub fn oracle_decompose(g: &DenseMatrix) -> Result<Vec<Complex64>> {
    (0..1u64 << (2 * g.num_qubits()))
        .map(|n| oracle_coeff_kron(g, n))
        .collect()
}
