//! Full decompositions and recomposition.

mod kernel;
mod oracle;
mod quaternary;

use std::thread;

use num_complex::Complex64;

pub use kernel::{
    coeff_fast, coeff_fast_counted, coeff_slow, coeff_slow_counted, walk, MulCount, MulCounter,
    StringState,
};
pub use oracle::{
    kron, oracle_coeff_kron, oracle_decompose, pauli_matrix, pauli_string_matrix, ORACLE_MAX_QUBITS,
};
pub use quaternary::{quaternary_gray_code, DigitChange, QuaternaryGrayWalk};

use crate::error::{Error, Result};
use crate::matrix::{zeroed_buffer, DenseMatrix, PauliDecomposition};
use crate::pauli::{sign_flip_mask, Phase};

/// Fills all `4^N` coefficients by running `kernel` on contiguous index chunks,
/// one worker per chunk. Returns the summed counters.
fn fill_parallel<C, F>(
    g: &DenseMatrix,
    threads: usize,
    kernel: F,
) -> Result<(PauliDecomposition, u64)>
where
    C: MulCounter + Default + Into<u64> + Send,
    F: Fn(&DenseMatrix, u64, &mut C) -> Complex64 + Sync,
{
    if threads == 0 {
        return Err(Error::ZeroThreads);
    }
    let mut out = zeroed_buffer(g.num_qubits())?;
    let chunk = out.len().div_ceil(threads).max(1);
    let run = |base: usize, slots: &mut [Complex64]| {
        let mut counter = C::default();
        for (off, slot) in slots.iter_mut().enumerate() {
            *slot = kernel(g, (base + off) as u64, &mut counter);
        }
        counter.into()
    };
    let total = if threads == 1 {
        run(0, &mut out)
    } else {
        thread::scope(|s| {
            let handles: Vec<_> = out
                .chunks_mut(chunk)
                .enumerate()
                .map(|(k, slots)| {
                    let run = &run;
                    s.spawn(move || run(k * chunk, slots))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("decomposition worker panicked"))
                .sum()
        })
    };
    Ok((PauliDecomposition::new(g.num_qubits(), out)?, total))
}

/// Counter that discards everything; converts to zero.
#[derive(Default)]
struct Uncounted;

impl MulCounter for Uncounted {
    #[inline(always)]
    fn tally(&mut self, _count: u64) {}
}

impl From<Uncounted> for u64 {
    fn from(_: Uncounted) -> u64 {
        0
    }
}

impl From<MulCount> for u64 {
    fn from(c: MulCount) -> u64 {
        c.0
    }
}

/// All coefficients with the Gray-code kernel, split across `threads` workers.
///
/// Each coefficient is produced by exactly one worker with a fixed summation
/// order, so the output does not depend on the thread count.
pub fn decompose_parallel(g: &DenseMatrix, threads: usize) -> Result<PauliDecomposition> {
    fill_parallel::<Uncounted, _>(g, threads, kernel::fast_unchecked).map(|(d, _)| d)
}

pub fn decompose_parallel_counted(
    g: &DenseMatrix,
    threads: usize,
) -> Result<(PauliDecomposition, u64)> {
    fill_parallel::<MulCount, _>(g, threads, kernel::fast_unchecked)
}

/// All coefficients with the slow kernel.
pub fn decompose_slow(g: &DenseMatrix, threads: usize) -> Result<PauliDecomposition> {
    fill_parallel::<Uncounted, _>(g, threads, kernel::slow_unchecked).map(|(d, _)| d)
}

pub fn decompose_slow_counted(
    g: &DenseMatrix,
    threads: usize,
) -> Result<(PauliDecomposition, u64)> {
    fill_parallel::<MulCount, _>(g, threads, kernel::slow_unchecked)
}

/// All coefficients on one thread, visiting strings in quaternary Gray-code
/// order and carrying the anti-diagonal mask and row-0 phase from one string
/// to the next instead of recomputing them.
pub fn decompose_serial_quaternary(g: &DenseMatrix) -> Result<PauliDecomposition> {
    serial_quaternary(g, &mut ())
}

pub fn decompose_serial_quaternary_counted(g: &DenseMatrix) -> Result<(PauliDecomposition, u64)> {
    let mut count = MulCount::default();
    let d = serial_quaternary(g, &mut count)?;
    Ok((d, count.0))
}

fn serial_quaternary<C: MulCounter>(
    g: &DenseMatrix,
    counter: &mut C,
) -> Result<PauliDecomposition> {
    let mut out = zeroed_buffer(g.num_qubits())?;
    let mut walk_n = QuaternaryGrayWalk::new(g.num_qubits());
    let mut xy_mask = 0u32;
    let mut row_zero_phase = Phase::ONE;
    loop {
        let n = walk_n.code();
        let state = StringState {
            xy_mask,
            sign_flip_mask: sign_flip_mask(n),
            row_zero_phase,
        };
        out[n as usize] = walk(g, state, counter);
        let Some(change) = walk_n.advance() else {
            break;
        };
        xy_mask ^= (change.toggles_mask() as u32) << change.position;
        row_zero_phase *= change.row_zero_ratio();
        counter.tally(1);
    }
    PauliDecomposition::new(g.num_qubits(), out)
}

/// `sum_n c_n P_n`, accumulated entry by entry without materialising any `P_n`.
///
/// Coefficients that are exactly zero are skipped.
pub fn recompose(d: &PauliDecomposition) -> Result<DenseMatrix> {
    let num_qubits = d.num_qubits();
    let dim = 1usize << num_qubits;
    let mut out = zeroed_buffer(num_qubits)?;
    for (n, &c) in d.coefficients().iter().enumerate() {
        if c == Complex64::new(0.0, 0.0) {
            continue;
        }
        let state = StringState::new(n as u64);
        let mask = state.xy_mask as usize;
        let mut phase = state.row_zero_phase;
        let mut i = 0usize;
        for step in 0..dim {
            // row i of P_n holds its phase in column i ^ m
            out[i * dim + (i ^ mask)] += phase.apply(c);
            if step + 1 < dim {
                let t = crate::bits::flipped_bit_index(step as u64);
                i ^= 1 << t;
                phase *= Phase::from_exponent(((state.sign_flip_mask >> t) & 1) << 1);
            }
        }
    }
    DenseMatrix::new(num_qubits, out)
}
