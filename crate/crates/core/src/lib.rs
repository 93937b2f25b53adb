//! Decomposition of dense complex `2^N x 2^N` matrices into the `4^N`
//! coefficients of the Pauli-string basis.
//!
//! Each coefficient is computed in `O(2^N)` time and constant extra memory by
//! walking the matrix in Gray-code order, so that the phase of the relevant
//! Pauli-string entry changes by one table lookup per step. Coefficients are
//! independent of each other and are computed in parallel.
//!
//! ```
//! use dense_pauli::{decompose_parallel, DenseMatrix};
//! use num_complex::Complex64;
//!
//! let g = DenseMatrix::new(1, vec![
//!     Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0),
//!     Complex64::new(3.0, 0.0), Complex64::new(4.0, 0.0),
//! ]).unwrap();
//! let d = decompose_parallel(&g, 1).unwrap();
//! assert_eq!(d.get(0), Complex64::new(2.5, 0.0));  // I
//! assert_eq!(d.get(2), Complex64::new(0.0, -0.5)); // Y
//! ```

pub mod bench;
pub mod bits;
pub mod cli;
pub mod decompose;
mod error;
pub mod io;
mod matrix;
pub mod pauli;
pub mod strategy;

pub use decompose::{
    coeff_fast, coeff_slow, decompose_parallel, decompose_serial_quaternary, oracle_coeff_kron,
    recompose,
};
pub use error::{Error, Result};
pub use matrix::{DenseMatrix, PauliDecomposition};
pub use pauli::{index_to_string, string_to_index, PauliOp, PauliString, Phase, MAX_QUBITS};
pub use strategy::{DecomposeOptions, Decomposer, Registry};
