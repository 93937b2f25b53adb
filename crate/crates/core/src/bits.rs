//! Word-level bit utilities used by the coefficient kernels.
//!
//! Everything here is constant time for a fixed 64-bit word: no loop runs
//! over the number of qubits.

const EVEN_BITS: u64 = 0x5555_5555_5555_5555;

/// Binary reflected Gray code of `k`.
#[inline(always)]
pub fn gray_code(k: u64) -> u64 {
    k ^ (k >> 1)
}

/// Index of the single bit in which `gray_code(k)` and `gray_code(k + 1)` differ.
///
/// This is the number of trailing zeros of `k + 1`.
#[inline(always)]
pub fn flipped_bit_index(k: u64) -> u32 {
    k.wrapping_add(1).trailing_zeros()
}

/// Gathers the even-position bits of `x` (bits 0, 2, 4, ...) into the low 32 bits.
#[inline(always)]
pub fn compress_even_bits(x: u64) -> u32 {
    let mut x = x & EVEN_BITS;
    x = (x | (x >> 1)) & 0x3333_3333_3333_3333;
    x = (x | (x >> 2)) & 0x0f0f_0f0f_0f0f_0f0f;
    x = (x | (x >> 4)) & 0x00ff_00ff_00ff_00ff;
    x = (x | (x >> 8)) & 0x0000_ffff_0000_ffff;
    x = (x | (x >> 16)) & 0x0000_0000_ffff_ffff;
    x as u32
}

/// Per-position planes of a base-4 numeral: `(low, high)` where bit `t` of each
/// plane is the corresponding bit of digit `t`.
#[inline(always)]
pub fn digit_planes(n: u64) -> (u32, u32) {
    (compress_even_bits(n), compress_even_bits(n >> 1))
}

/// Walks `[0, 2^N)` in Gray-code order, reporting which bit flips next.
#[derive(Debug, Clone)]
pub struct GrayCodeWalker {
    step: u64,
    code: u64,
    len: u64,
}

impl GrayCodeWalker {
    pub fn new(num_bits: u32) -> Self {
        assert!(num_bits < 64, "walker supports at most 63 bits");
        Self {
            step: 0,
            code: 0,
            len: 1u64 << num_bits,
        }
    }

    pub fn step(&self) -> u64 {
        self.step
    }

    pub fn code(&self) -> u64 {
        self.code
    }

    /// Bit that differs between this code and the next one.
    pub fn flipped_bit(&self) -> u32 {
        flipped_bit_index(self.step)
    }

    /// Moves to the next code; returns `false` once the walk is exhausted.
    pub fn advance(&mut self) -> bool {
        if self.step + 1 >= self.len {
            return false;
        }
        self.code ^= 1 << self.flipped_bit();
        self.step += 1;
        true
    }
}

impl Iterator for GrayCodeWalker {
    /// `(step, code)`
    type Item = (u64, u64);

    fn next(&mut self) -> Option<Self::Item> {
        if self.step >= self.len {
            return None;
        }
        let item = (self.step, self.code);
        if !self.advance() {
            self.step = self.len;
        }
        Some(item)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_gray_codes() {
        assert_eq!(gray_code(0), 0);
        assert_eq!(gray_code(1), 1);
        assert_eq!(gray_code(2), 3);
        assert_eq!(gray_code(3), 2);
    }

    #[test]
    fn neighbours_differ_in_one_bit() {
        for k in 0..(1u64 << 10) {
            assert_eq!((gray_code(k) ^ gray_code(k + 1)).count_ones(), 1, "k = {k}");
        }
    }

    #[test]
    fn flipped_bit_matches_xor() {
        assert_eq!(flipped_bit_index(0), 0);
        assert_eq!(flipped_bit_index(1), 1);
        for k in 0..(1u64 << 12) {
            assert_eq!(
                1u64 << flipped_bit_index(k),
                gray_code(k) ^ gray_code(k + 1)
            );
        }
    }

    #[test]
    fn compress_matches_naive() {
        let naive = |x: u64| (0..32).fold(0u32, |acc, t| acc | (((x >> (2 * t)) & 1) as u32) << t);
        for x in [
            0,
            1,
            2,
            3,
            0xdead_beef_cafe_f00d,
            u64::MAX,
            EVEN_BITS,
            !EVEN_BITS,
        ] {
            assert_eq!(compress_even_bits(x), naive(x));
        }
    }

    #[test]
    fn walker_matches_closed_form() {
        let mut w = GrayCodeWalker::new(5);
        let mut seen = 0u64;
        loop {
            assert_eq!(w.code(), gray_code(w.step()));
            seen |= 1 << w.code();
            if !w.advance() {
                break;
            }
        }
        assert_eq!(w.step(), 31);
        assert_eq!(seen, u32::MAX as u64);
        let codes: Vec<_> = GrayCodeWalker::new(2).map(|(_, g)| g).collect();
        assert_eq!(codes, [0, 1, 3, 2]);
    }

    #[test]
    fn planes_of_six() {
        // 6 = base-4 "12"
        assert_eq!(digit_planes(6), (0b10, 0b01));
    }
}
