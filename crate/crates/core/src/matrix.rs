use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pauli::{check_qubits, num_strings, PauliString};

/// Square `2^N x 2^N` complex matrix stored row-major.
///
/// Entry `(row, col)` lives at offset `row * 2^N + col`.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    num_qubits: u32,
    elements: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn new(num_qubits: u32, elements: Vec<Complex64>) -> Result<Self> {
        check_qubits(num_qubits)?;
        let expected = num_strings(num_qubits);
        if elements.len() as u128 != expected {
            return Err(Error::ElementCount {
                num_qubits,
                expected,
                actual: elements.len(),
            });
        }
        Ok(Self {
            num_qubits,
            elements,
        })
    }

    /// Builds a matrix from `f(row, col)`.
    pub fn from_fn(num_qubits: u32, mut f: impl FnMut(usize, usize) -> Complex64) -> Result<Self> {
        check_qubits(num_qubits)?;
        let dim = 1usize << num_qubits;
        let elements = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        Self::new(num_qubits, elements)
    }

    pub fn zeros(num_qubits: u32) -> Result<Self> {
        Self::from_fn(num_qubits, |_, _| Complex64::new(0.0, 0.0))
    }

    pub fn identity(num_qubits: u32) -> Result<Self> {
        Self::from_fn(num_qubits, |r, c| {
            Complex64::new((r == c) as u8 as f64, 0.0)
        })
    }

    pub fn num_qubits(&self) -> u32 {
        self.num_qubits
    }

    /// Side length `2^N`.
    pub fn dim(&self) -> usize {
        1 << self.num_qubits
    }

    pub fn elements(&self) -> &[Complex64] {
        &self.elements
    }

    pub fn elements_mut(&mut self) -> &mut [Complex64] {
        &mut self.elements
    }

    pub fn into_elements(self) -> Vec<Complex64> {
        self.elements
    }

    #[inline(always)]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.elements[row * self.dim() + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        let dim = self.dim();
        self.elements[row * dim + col] = value;
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &DenseMatrix) -> f64 {
        assert_eq!(self.num_qubits, other.num_qubits, "qubit counts differ");
        self.elements
            .iter()
            .zip(&other.elements)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn frobenius_norm_sqr(&self) -> f64 {
        self.elements.iter().map(Complex64::norm_sqr).sum()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        let dim = self.dim();
        (0..dim).all(|r| (r..dim).all(|c| (self.get(r, c) - self.get(c, r).conj()).norm() <= tol))
    }
}

/// The `4^N` coefficients of a matrix in the Pauli basis, indexed by string index.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliDecomposition {
    num_qubits: u32,
    coefficients: Vec<Complex64>,
}

impl PauliDecomposition {
    pub fn new(num_qubits: u32, coefficients: Vec<Complex64>) -> Result<Self> {
        check_qubits(num_qubits)?;
        let expected = num_strings(num_qubits);
        if coefficients.len() as u128 != expected {
            return Err(Error::ElementCount {
                num_qubits,
                expected,
                actual: coefficients.len(),
            });
        }
        Ok(Self {
            num_qubits,
            coefficients,
        })
    }

    pub fn zeros(num_qubits: u32) -> Result<Self> {
        Ok(Self {
            num_qubits,
            coefficients: zeroed_buffer(num_qubits)?,
        })
    }

    pub fn num_qubits(&self) -> u32 {
        self.num_qubits
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    pub fn coefficients_mut(&mut self) -> &mut [Complex64] {
        &mut self.coefficients
    }

    pub fn get(&self, n: u64) -> Complex64 {
        self.coefficients[n as usize]
    }

    /// `(string, coefficient)` pairs in index order.
    pub fn iter(&self) -> impl Iterator<Item = (PauliString, Complex64)> + '_ {
        self.coefficients.iter().enumerate().map(|(n, &c)| {
            (
                PauliString::new(n as u64, self.num_qubits).expect("index within range"),
                c,
            )
        })
    }

    /// Sum of `|c_n|^2`.
    pub fn norm_sqr(&self) -> f64 {
        self.coefficients.iter().map(Complex64::norm_sqr).sum()
    }
}

/// Zero-filled buffer of `4^N` entries, reporting allocation failure as an error.
pub(crate) fn zeroed_buffer(num_qubits: u32) -> Result<Vec<Complex64>> {
    check_qubits(num_qubits)?;
    let len = num_strings(num_qubits);
    let too_big = || Error::Allocation(len);
    let len_usize = usize::try_from(len).map_err(|_| too_big())?;
    let mut buf = Vec::new();
    buf.try_reserve_exact(len_usize).map_err(|_| too_big())?;
    buf.resize(len_usize, Complex64::new(0.0, 0.0));
    Ok(buf)
}
