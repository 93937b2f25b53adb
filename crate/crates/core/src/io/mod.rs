//! File formats.
//!
//! Matrix files come in two encodings.
//!
//! Text: an optional header line `PAULIDECOMP-MAT v1 N=<N>` followed by one
//! matrix row per line, entries separated by whitespace and written as
//! `<re>+<im>j` or `<re>-<im>j`. Without a header the dimension is taken from
//! the number of rows.
//!
//! Binary (all little-endian): the 8 bytes `PAULIMAT`, a `u32` format
//! version (1), a `u32` qubit count `N`, then `2 * 4^N` `f64` values holding
//! the row-major entries as interleaved `re, im` pairs.
//!
//! Coefficient files are CSV: a `# N=<N>` line, the header `pauli,re,im`, and
//! one record per string in ascending index order. Floats are written in their
//! shortest round-trip form.
//!
//! A path of `-` means standard input or standard output.

mod coefficients;
mod matrix;

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::path::Path;

use num_complex::Complex64;

pub use coefficients::{
    read_coefficients, read_coefficients_from, write_coefficients, write_coefficients_to,
};
pub use matrix::{
    read_matrix, read_matrix_binary, read_matrix_text, write_matrix, write_matrix_binary,
    write_matrix_text, BINARY_MAGIC, BINARY_VERSION, TEXT_HEADER_PREFIX,
};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum MatrixFormat {
    #[default]
    Text,
    Binary,
}

pub(crate) fn open_input(path: &Path) -> Result<Box<dyn Read>> {
    if path.as_os_str() == "-" {
        Ok(Box::new(BufReader::new(io::stdin().lock())))
    } else {
        Ok(Box::new(BufReader::new(File::open(path)?)))
    }
}

pub(crate) fn open_output(path: &Path) -> Result<Box<dyn Write>> {
    if path.as_os_str() == "-" {
        Ok(Box::new(BufWriter::new(io::stdout().lock())))
    } else {
        Ok(Box::new(BufWriter::new(File::create(path)?)))
    }
}

/// Shortest representation that parses back to the same `f64`.
pub fn format_float(x: f64) -> String {
    format!("{x:?}")
}

/// `<re>+<im>j` / `<re>-<im>j`; the sign of a negative zero imaginary part is kept.
pub fn format_complex(z: Complex64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{:?}{sign}{:?}j", z.re, z.im.abs())
}

pub(crate) fn parse_float(token: &str, line: usize) -> Result<f64> {
    let x: f64 = token.trim().parse().map_err(|_| Error::Parse {
        line,
        msg: format!("cannot parse {token:?} as a number"),
    })?;
    if !x.is_finite() {
        return Err(Error::NonFinite {
            location: format!("line {line}"),
            token: token.to_owned(),
        });
    }
    Ok(x)
}

/// Parses `<re>±<im>j`, or a bare real number.
pub fn parse_complex(token: &str, line: usize) -> Result<Complex64> {
    let bad = |msg: &str| Error::Parse {
        line,
        msg: format!("{msg}: {token:?}"),
    };
    let finite = |x: f64| {
        if x.is_finite() {
            Ok(x)
        } else {
            Err(Error::NonFinite {
                location: format!("line {line}"),
                token: token.to_owned(),
            })
        }
    };
    let num = |s: &str| {
        s.parse::<f64>()
            .map_err(|_| bad("malformed complex number"))
    };
    let Some(body) = token.strip_suffix('j') else {
        return finite(num(token)?).map(|re| Complex64::new(re, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'))
        .ok_or_else(|| bad("missing sign between real and imaginary parts"))?;
    let re = finite(num(&body[..split])?)?;
    let im = finite(num(&body[split..])?)?;
    Ok(Complex64::new(re, im))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_tokens() {
        let c = |re, im| Complex64::new(re, im);
        assert_eq!(parse_complex("1+0j", 1).unwrap(), c(1.0, 0.0));
        assert_eq!(parse_complex("-2.5-0.5j", 1).unwrap(), c(-2.5, -0.5));
        assert_eq!(parse_complex("1e-3+2E+4j", 1).unwrap(), c(1e-3, 2e4));
        assert_eq!(parse_complex("-1e-3-1e-3j", 1).unwrap(), c(-1e-3, -1e-3));
        assert_eq!(parse_complex("7", 1).unwrap(), c(7.0, 0.0));
        assert!(matches!(
            parse_complex("1j", 3),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(parse_complex("1+xj", 3), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_complex("nan+0j", 2),
            Err(Error::NonFinite { .. })
        ));
        assert!(matches!(
            parse_complex("1+infj", 2),
            Err(Error::NonFinite { .. })
        ));
    }

    #[test]
    fn complex_formatting() {
        assert_eq!(format_complex(Complex64::new(1.0, 0.0)), "1.0+0.0j");
        assert_eq!(format_complex(Complex64::new(-0.25, -3.0)), "-0.25-3.0j");
        assert_eq!(format_complex(Complex64::new(1e-300, -0.0)), "1e-300-0.0j");
        for z in [
            Complex64::new(0.1, -1.0 / 3.0),
            Complex64::new(-0.0, 1e300),
            Complex64::new(f64::MIN_POSITIVE, -f64::MAX),
        ] {
            let back = parse_complex(&format_complex(z), 1).unwrap();
            assert_eq!(back.re.to_bits(), z.re.to_bits());
            assert_eq!(back.im.to_bits(), z.im.to_bits());
        }
    }
}
