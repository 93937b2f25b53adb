#![allow(dead_code)]

use dense_pauli::bench::random_matrix;
use dense_pauli::DenseMatrix;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn random(num_qubits: u32, seed: u64) -> DenseMatrix {
    random_matrix(num_qubits, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
}

pub fn random_hermitian(num_qubits: u32, seed: u64) -> DenseMatrix {
    let a = random(num_qubits, seed);
    DenseMatrix::from_fn(num_qubits, |r, c| (a.get(r, c) + a.get(c, r).conj()) * 0.5).unwrap()
}

pub fn random_real(num_qubits: u32, seed: u64) -> DenseMatrix {
    let a = random(num_qubits, seed);
    DenseMatrix::from_fn(num_qubits, |r, c| Complex64::new(a.get(r, c).re, 0.0)).unwrap()
}

/// Number of Y operators in string `n`.
pub fn y_count(n: u64, num_qubits: u32) -> u32 {
    (0..num_qubits).filter(|t| (n >> (2 * t)) & 3 == 2).count() as u32
}
