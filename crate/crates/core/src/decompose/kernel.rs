//! Single-coefficient kernels.
//!
//! For string `n` with anti-diagonal mask `m`, the only nonzero entry of `P_n`
//! in row `i` sits in column `i ^ m` and equals a phase `lambda_i`, so
//!
//! ```text
//! c_n = 2^-N * sum_i lambda_i * G[i ^ m][i]
//! ```
//!
//! Both kernels visit `i` in Gray-code order and add identical summands in
//! identical order, so they agree bit for bit. The fast kernel updates
//! `lambda` with one table lookup per step; the slow one rebuilds it from all
//! `N` operator entries every step.

use num_complex::Complex64;

use crate::bits::flipped_bit_index;
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::pauli::{
    num_strings, pauli_digit, row_zero_phase, sign_flip_mask, xy_mask, BetaTable, Phase,
};

/// Sink for multiplication counts. `()` discards them at zero cost.
pub trait MulCounter {
    fn tally(&mut self, count: u64);
}

impl MulCounter for () {
    #[inline(always)]
    fn tally(&mut self, _count: u64) {}
}

/// Counts every phase or scalar multiplication a kernel performs.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct MulCount(pub u64);

impl MulCounter for MulCount {
    #[inline(always)]
    fn tally(&mut self, count: u64) {
        self.0 += count;
    }
}

/// Everything the Gray-code walk needs to know about one string.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StringState {
    /// Bit `t` set where qubit `t` is X or Y.
    pub xy_mask: u32,
    /// Bit `t` set where flipping row bit `t` negates the entry (Y or Z).
    pub sign_flip_mask: u32,
    /// Phase of the entry in row 0.
    pub row_zero_phase: Phase,
}

impl StringState {
    #[inline(always)]
    pub fn new(n: u64) -> Self {
        Self {
            xy_mask: xy_mask(n),
            sign_flip_mask: sign_flip_mask(n),
            row_zero_phase: row_zero_phase(n),
        }
    }
}

pub(crate) fn check_index(g: &DenseMatrix, n: u64) -> Result<()> {
    if (n as u128) < num_strings(g.num_qubits()) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange {
            index: n,
            num_qubits: g.num_qubits(),
        })
    }
}

/// Gray-code walk over rows for a string whose initial state is already known.
///
/// Reads each of the `2^N` relevant matrix entries exactly once and keeps only
/// scalar state.
#[inline]
pub fn walk<C: MulCounter>(g: &DenseMatrix, state: StringState, counter: &mut C) -> Complex64 {
    let dim = g.dim();
    let elems = g.elements();
    let mask = state.xy_mask as usize;
    let flips = state.sign_flip_mask;
    let mut phase = state.row_zero_phase;
    let mut i = 0usize;
    let mut acc = Complex64::new(0.0, 0.0);
    for step in 0..dim - 1 {
        acc += phase.apply(elems[(i ^ mask) * dim + i]);
        let t = flipped_bit_index(step as u64);
        i ^= 1 << t;
        phase *= Phase::from_exponent(((flips >> t) & 1) << 1);
        counter.tally(2);
    }
    acc += phase.apply(elems[(i ^ mask) * dim + i]);
    counter.tally(2);
    acc / dim as f64
}

/// Coefficient of string `n`, in `O(2^N)` time and constant memory.
pub fn coeff_fast(g: &DenseMatrix, n: u64) -> Result<Complex64> {
    coeff_fast_counted(g, n, &mut ())
}

pub fn coeff_fast_counted<C: MulCounter>(
    g: &DenseMatrix,
    n: u64,
    counter: &mut C,
) -> Result<Complex64> {
    check_index(g, n)?;
    Ok(fast_unchecked(g, n, counter))
}

#[inline(always)]
pub(crate) fn fast_unchecked<C: MulCounter>(g: &DenseMatrix, n: u64, counter: &mut C) -> Complex64 {
    // (-i)^(#Y) from a popcount
    counter.tally(1);
    walk(g, StringState::new(n), counter)
}

/// Coefficient of string `n`, recomputing every row phase from scratch: `O(N 2^N)`.
pub fn coeff_slow(g: &DenseMatrix, n: u64) -> Result<Complex64> {
    coeff_slow_counted(g, n, &mut ())
}

pub fn coeff_slow_counted<C: MulCounter>(
    g: &DenseMatrix,
    n: u64,
    counter: &mut C,
) -> Result<Complex64> {
    check_index(g, n)?;
    Ok(slow_unchecked(g, n, counter))
}

pub(crate) fn slow_unchecked<C: MulCounter>(g: &DenseMatrix, n: u64, counter: &mut C) -> Complex64 {
    let num_qubits = g.num_qubits();
    let dim = g.dim();
    let elems = g.elements();
    let mask = xy_mask(n) as usize;
    let mut acc = Complex64::new(0.0, 0.0);
    for step in 0..dim {
        let i = step ^ (step >> 1);
        let phase = (0..num_qubits).fold(Phase::ONE, |p, t| {
            p * BetaTable::beta(pauli_digit(n, t), (i >> t) as u32)
        });
        counter.tally(num_qubits as u64);
        acc += phase.apply(elems[(i ^ mask) * dim + i]);
        counter.tally(1);
    }
    counter.tally(1);
    acc / dim as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn one_qubit(entries: [Complex64; 4]) -> DenseMatrix {
        DenseMatrix::new(1, entries.to_vec()).unwrap()
    }

    #[test]
    fn identity_selects_identity_string() {
        for nq in 1..=4 {
            let g = DenseMatrix::identity(nq).unwrap();
            for n in 0..(1u64 << (2 * nq)) {
                let want = if n == 0 { 1.0 } else { 0.0 };
                assert_eq!(coeff_fast(&g, n).unwrap(), c(want, 0.0), "N={nq} n={n}");
            }
        }
    }

    #[test]
    fn two_by_two_by_hand() {
        // [[1,2],[3,4]] = 2.5 I + 2.5 X - 0.5i Y - 1.5 Z
        let g = one_qubit([c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0), c(4.0, 0.0)]);
        let want = [c(2.5, 0.0), c(2.5, 0.0), c(0.0, -0.5), c(-1.5, 0.0)];
        for (n, w) in want.into_iter().enumerate() {
            assert_eq!(coeff_fast(&g, n as u64).unwrap(), w);
            assert_eq!(coeff_slow(&g, n as u64).unwrap(), w);
        }
    }

    #[test]
    fn pauli_y_is_its_own_basis_vector() {
        let zero = c(0.0, 0.0);
        let g = one_qubit([zero, c(0.0, -1.0), c(0.0, 1.0), zero]);
        let got: Vec<_> = (0..4).map(|n| coeff_fast(&g, n).unwrap()).collect();
        assert_eq!(got, [zero, zero, c(1.0, 0.0), zero]);
    }

    #[test]
    fn out_of_range_index() {
        let g = DenseMatrix::identity(2).unwrap();
        assert!(matches!(
            coeff_fast(&g, 16),
            Err(Error::IndexOutOfRange { index: 16, .. })
        ));
        assert!(coeff_slow(&g, 16).is_err());
    }

    #[test]
    fn counts_are_exact() {
        let g = DenseMatrix::identity(5).unwrap();
        let (mut fast, mut slow) = (MulCount::default(), MulCount::default());
        coeff_fast_counted(&g, 123, &mut fast).unwrap();
        coeff_slow_counted(&g, 123, &mut slow).unwrap();
        assert_eq!(fast.0, 2 * 32 + 1);
        assert_eq!(slow.0, 6 * 32 + 1);
    }
}
