//! Modular quaternary Gray code over Pauli-string indices.
//!
//! Successive codes differ in exactly one base-4 digit, which advances by one
//! modulo 4: `I -> X -> Y -> Z -> I`. Because of that, each transition either
//! crosses between diagonal and anti-diagonal operators (`I -> X`, `Y -> Z`)
//! and toggles one mask bit, or stays on the same side (`X -> Y`, `Z -> I`)
//! and leaves the mask alone.

use crate::bits::flipped_bit_index;
use crate::pauli::{pauli_digit, BetaTable, PauliOp, Phase};

/// Closed form: digit `t` of the code is `(d_t - d_{t+1}) mod 4` for the
/// base-4 digits `d` of `k`.
pub fn quaternary_gray_code(k: u64, num_digits: u32) -> u64 {
    (0..num_digits).fold(0u64, |code, t| {
        let d = (k >> (2 * t)) & 3;
        let next = if t + 1 < 32 {
            (k >> (2 * t + 2)) & 3
        } else {
            0
        };
        code | (((d + 4 - next) & 3) << (2 * t))
    })
}

/// One step of the walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DigitChange {
    pub position: u32,
    pub from: PauliOp,
    pub to: PauliOp,
}

impl DigitChange {
    /// Whether the change moves between {I, Z} and {X, Y}.
    pub fn toggles_mask(&self) -> bool {
        self.from.is_antidiagonal() != self.to.is_antidiagonal()
    }

    /// Factor relating the row-0 entries of the two strings.
    pub fn row_zero_ratio(&self) -> Phase {
        BetaTable::beta(self.to, 0) * BetaTable::beta(self.from, 0).inverse()
    }
}

/// Iterates string indices in modular quaternary Gray-code order.
#[derive(Debug, Clone)]
pub struct QuaternaryGrayWalk {
    step: u64,
    last: u64,
    code: u64,
}

impl QuaternaryGrayWalk {
    /// Walk over all `4^N` strings; requires `N < 32` so the count fits a `u64`.
    pub fn new(num_digits: u32) -> Self {
        assert!(num_digits < 32, "walk supports at most 31 digits");
        Self {
            step: 0,
            last: (1u64 << (2 * num_digits)) - 1,
            code: 0,
        }
    }

    pub fn code(&self) -> u64 {
        self.code
    }

    pub fn step(&self) -> u64 {
        self.step
    }

    /// Moves to the next code and reports which digit changed.
    pub fn advance(&mut self) -> Option<DigitChange> {
        if self.step >= self.last {
            return None;
        }
        let position = flipped_bit_index(self.step) / 2;
        let from = pauli_digit(self.code, position);
        let to = PauliOp::from_code(from.code() + 1);
        self.code ^= ((from.code() ^ to.code()) as u64) << (2 * position);
        self.step += 1;
        Some(DigitChange { position, from, to })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_digit_visits_in_cyclic_order() {
        let mut w = QuaternaryGrayWalk::new(1);
        let mut seq = vec![w.code()];
        while w.advance().is_some() {
            seq.push(w.code());
        }
        assert_eq!(seq, [0, 1, 2, 3]);
    }

    #[test]
    fn walk_matches_closed_form_and_covers_everything() {
        for digits in 1..=5 {
            let mut w = QuaternaryGrayWalk::new(digits);
            let mut seen = vec![false; 1 << (2 * digits)];
            loop {
                assert_eq!(w.code(), quaternary_gray_code(w.step(), digits));
                assert!(!seen[w.code() as usize]);
                seen[w.code() as usize] = true;
                let before = w.code();
                let Some(change) = w.advance() else { break };
                let diff: Vec<u32> = (0..digits)
                    .filter(|&t| pauli_digit(before, t) != pauli_digit(w.code(), t))
                    .collect();
                assert_eq!(diff, [change.position]);
                assert_eq!((change.from.code() + 1) & 3, change.to.code());
            }
            assert!(seen.into_iter().all(|s| s));
        }
    }

    #[test]
    fn mask_toggles_only_across_the_diagonal_boundary() {
        use PauliOp::*;
        let toggles = |from, to| {
            DigitChange {
                position: 0,
                from,
                to,
            }
            .toggles_mask()
        };
        assert!(toggles(I, X));
        assert!(!toggles(X, Y));
        assert!(toggles(Y, Z));
        assert!(!toggles(Z, I));
    }
}
