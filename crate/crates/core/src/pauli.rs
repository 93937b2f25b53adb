//! Pauli operators, their nonzero-entry tables, exact phases and Pauli strings.
//!
//! A string over `N` qubits is addressed by an index `n` in `[0, 4^N)` whose
//! base-4 digit `t` (bits `2t+1..2t`) selects the operator on qubit `t`, with
//! `I = 0, X = 1, Y = 2, Z = 3`. Qubit 0 is the rightmost character of a label,
//! so index 1 is `"...IX"` and index 6 over two qubits is `"XY"`.

use std::fmt;
use std::ops::{Mul, MulAssign};

use num_complex::Complex64;

use crate::bits::digit_planes;
use crate::error::{Error, Result};

/// Largest supported qubit count: two bits per operator must fit in a `u64`.
pub const MAX_QUBITS: u32 = 32;

pub(crate) fn check_qubits(num_qubits: u32) -> Result<()> {
    if (1..=MAX_QUBITS).contains(&num_qubits) {
        Ok(())
    } else {
        Err(Error::QubitCount(num_qubits))
    }
}

/// Number of Pauli strings over `num_qubits` qubits, `4^N`, as a `u128` so that
/// `N = 32` does not overflow.
pub fn num_strings(num_qubits: u32) -> u128 {
    1u128 << (2 * num_qubits)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum PauliOp {
    I = 0,
    X = 1,
    Y = 2,
    Z = 3,
}

impl PauliOp {
    pub const ALL: [PauliOp; 4] = [PauliOp::I, PauliOp::X, PauliOp::Y, PauliOp::Z];

    /// Operator for the two low bits of `code`.
    #[inline(always)]
    pub fn from_code(code: u8) -> PauliOp {
        Self::ALL[(code & 3) as usize]
    }

    #[inline(always)]
    pub fn code(self) -> u8 {
        self as u8
    }

    /// X and Y are anti-diagonal; I and Z are diagonal.
    #[inline(always)]
    pub fn is_antidiagonal(self) -> bool {
        matches!(self, PauliOp::X | PauliOp::Y)
    }

    pub fn symbol(self) -> char {
        ['I', 'X', 'Y', 'Z'][self as usize]
    }

    pub fn from_symbol(c: char) -> Option<PauliOp> {
        match c {
            'I' => Some(PauliOp::I),
            'X' => Some(PauliOp::X),
            'Y' => Some(PauliOp::Y),
            'Z' => Some(PauliOp::Z),
            _ => None,
        }
    }
}

impl fmt::Display for PauliOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A fourth root of unity stored exactly as the exponent `e` of `i^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    #[inline(always)]
    pub const fn from_exponent(e: u32) -> Phase {
        Phase((e & 3) as u8)
    }

    #[inline(always)]
    pub const fn exponent(self) -> u8 {
        self.0
    }

    #[inline(always)]
    pub const fn inverse(self) -> Phase {
        Phase((4 - self.0) & 3)
    }

    pub fn to_complex(self) -> Complex64 {
        [
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(0.0, -1.0),
        ][self.0 as usize]
    }

    /// `i^e * z`, computed by swapping components and flipping sign bits.
    ///
    /// Exact and branch-free: no floating-point multiplication is performed.
    #[inline(always)]
    pub fn apply(self, z: Complex64) -> Complex64 {
        let e = self.0 as u64;
        let swap = e & 1;
        let neg = e >> 1;
        let parts = [z.re, z.im];
        let re = f64::from_bits(parts[swap as usize].to_bits() ^ ((swap ^ neg) << 63));
        let im = f64::from_bits(parts[(swap ^ 1) as usize].to_bits() ^ (neg << 63));
        Complex64::new(re, im)
    }
}

impl Mul for Phase {
    type Output = Phase;

    #[inline(always)]
    fn mul(self, rhs: Phase) -> Phase {
        Phase((self.0 + rhs.0) & 3)
    }
}

impl MulAssign for Phase {
    #[inline(always)]
    fn mul_assign(&mut self, rhs: Phase) {
        self.0 = (self.0 + rhs.0) & 3;
    }
}

/// The nonzero entries of each Pauli matrix.
///
/// `beta(op, a)` is the entry in row `a` of `op`, which sits in column `a` for
/// diagonal operators and column `1 - a` for anti-diagonal ones. `ratio(op)`
/// is `beta(op, 1 - a) / beta(op, a)`, which does not depend on `a`.
pub struct BetaTable;

impl BetaTable {
    const BETA: [[Phase; 2]; 4] = [
        [Phase::ONE, Phase::ONE],
        [Phase::ONE, Phase::ONE],
        [Phase::MINUS_I, Phase::I],
        [Phase::ONE, Phase::MINUS_ONE],
    ];

    const RATIO: [Phase; 4] = [Phase::ONE, Phase::ONE, Phase::MINUS_ONE, Phase::MINUS_ONE];

    #[inline(always)]
    pub fn beta(op: PauliOp, row_bit: u32) -> Phase {
        Self::BETA[op as usize][(row_bit & 1) as usize]
    }

    #[inline(always)]
    pub fn ratio(op: PauliOp) -> Phase {
        Self::RATIO[op as usize]
    }
}

/// Operator on qubit `t` of string `n`.
///
/// # Panics
///
/// If `t >= MAX_QUBITS`.
#[inline(always)]
pub fn pauli_digit(n: u64, t: u32) -> PauliOp {
    assert!(t < MAX_QUBITS, "qubit position {t} out of range");
    PauliOp::from_code((n >> (2 * t)) as u8)
}

/// Bit `t` is set iff qubit `t` of string `n` carries X or Y.
#[inline(always)]
pub fn xy_mask(n: u64) -> u32 {
    let (lo, hi) = digit_planes(n);
    lo ^ hi
}

/// Bit `t` is set iff qubit `t` carries Y or Z, i.e. where flipping the row bit negates the entry.
#[inline(always)]
pub fn sign_flip_mask(n: u64) -> u32 {
    digit_planes(n).1
}

/// Bit `t` is set iff qubit `t` carries Y.
#[inline(always)]
pub fn y_mask(n: u64) -> u32 {
    let (lo, hi) = digit_planes(n);
    hi & !lo
}

/// Phase of the entry of string `n` in row 0, i.e. `(-i)^(number of Y)`.
#[inline(always)]
pub fn row_zero_phase(n: u64) -> Phase {
    Phase::from_exponent(3 * y_mask(n).count_ones())
}

fn label_error(label: &str, reason: impl Into<String>) -> Error {
    Error::Label {
        label: label.to_owned(),
        reason: reason.into(),
    }
}

/// Parses an `IXYZ` label of exactly `num_qubits` characters; the rightmost is qubit 0.
pub fn string_to_index(label: &str, num_qubits: u32) -> Result<u64> {
    check_qubits(num_qubits)?;
    let len = label.chars().count();
    if len != num_qubits as usize {
        return Err(label_error(
            label,
            format!("expected {num_qubits} characters, found {len}"),
        ));
    }
    label.chars().try_fold(0u64, |acc, c| {
        let op = PauliOp::from_symbol(c)
            .ok_or_else(|| label_error(label, format!("unexpected character {c:?}")))?;
        Ok((acc << 2) | op.code() as u64)
    })
}

pub fn index_to_string(n: u64, num_qubits: u32) -> Result<String> {
    check_qubits(num_qubits)?;
    if (n as u128) >= num_strings(num_qubits) {
        return Err(Error::IndexOutOfRange {
            index: n,
            num_qubits,
        });
    }
    Ok((0..num_qubits)
        .rev()
        .map(|t| pauli_digit(n, t).symbol())
        .collect())
}

/// One Pauli string over a fixed number of qubits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PauliString {
    num_qubits: u32,
    index: u64,
    xy_mask: u32,
}

impl PauliString {
    pub fn new(index: u64, num_qubits: u32) -> Result<Self> {
        check_qubits(num_qubits)?;
        if (index as u128) >= num_strings(num_qubits) {
            return Err(Error::IndexOutOfRange { index, num_qubits });
        }
        Ok(Self {
            num_qubits,
            index,
            xy_mask: xy_mask(index),
        })
    }

    pub fn from_label(label: &str) -> Result<Self> {
        let num_qubits = label.chars().count() as u32;
        Self::new(string_to_index(label, num_qubits)?, num_qubits)
    }

    pub fn num_qubits(&self) -> u32 {
        self.num_qubits
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn xy_mask(&self) -> u32 {
        self.xy_mask
    }

    pub fn op(&self, t: u32) -> PauliOp {
        assert!(t < self.num_qubits, "qubit position {t} out of range");
        pauli_digit(self.index, t)
    }

    /// Operators ordered by qubit, qubit 0 first.
    pub fn ops(&self) -> impl Iterator<Item = PauliOp> + '_ {
        (0..self.num_qubits).map(move |t| pauli_digit(self.index, t))
    }

    pub fn label(&self) -> String {
        (0..self.num_qubits)
            .rev()
            .map(|t| pauli_digit(self.index, t).symbol())
            .collect()
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}
