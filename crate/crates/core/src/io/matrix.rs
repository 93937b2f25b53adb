use std::io::{BufRead, BufReader, ErrorKind, Read, Write};
use std::path::Path;

use num_complex::Complex64;

use super::{format_complex, open_input, open_output, parse_complex, MatrixFormat};
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::pauli::{num_strings, MAX_QUBITS};

pub const TEXT_HEADER_PREFIX: &str = "PAULIDECOMP-MAT";
pub const BINARY_MAGIC: &[u8; 8] = b"PAULIMAT";
pub const BINARY_VERSION: u32 = 1;

pub fn read_matrix(path: impl AsRef<Path>, format: MatrixFormat) -> Result<DenseMatrix> {
    let input = open_input(path.as_ref())?;
    match format {
        MatrixFormat::Text => read_matrix_text(input),
        MatrixFormat::Binary => read_matrix_binary(input),
    }
}

pub fn write_matrix(path: impl AsRef<Path>, format: MatrixFormat, m: &DenseMatrix) -> Result<()> {
    let mut out = open_output(path.as_ref())?;
    match format {
        MatrixFormat::Text => write_matrix_text(&mut out, m)?,
        MatrixFormat::Binary => write_matrix_binary(&mut out, m)?,
    }
    out.flush()?;
    Ok(())
}

fn check_header_qubits(num_qubits: u32) -> Result<()> {
    if (1..=MAX_QUBITS).contains(&num_qubits) {
        Ok(())
    } else {
        Err(Error::Dimension(format!(
            "N={num_qubits} is outside the supported range 1..={MAX_QUBITS}"
        )))
    }
}

fn parse_text_header(line: &str) -> Result<u32> {
    let bad = || {
        Error::Header(format!(
            "expected `{TEXT_HEADER_PREFIX} v1 N=<N>`, got {line:?}"
        ))
    };
    let mut parts = line.split_whitespace();
    if parts.next() != Some(TEXT_HEADER_PREFIX) {
        return Err(bad());
    }
    match parts.next() {
        Some("v1") => {}
        Some(v) if v.starts_with('v') => {
            return Err(Error::Header(format!("unsupported version {v}")))
        }
        _ => return Err(bad()),
    }
    let n = parts
        .next()
        .and_then(|p| p.strip_prefix("N="))
        .and_then(|p| p.parse::<u32>().ok())
        .ok_or_else(bad)?;
    if parts.next().is_some() {
        return Err(bad());
    }
    check_header_qubits(n)?;
    Ok(n)
}

/// Reads the text encoding. Blank lines are ignored.
pub fn read_matrix_text(input: impl Read) -> Result<DenseMatrix> {
    let mut declared: Option<u32> = None;
    let mut rows: Vec<Vec<Complex64>> = Vec::new();
    for (k, line) in BufReader::new(input).lines().enumerate() {
        let line = line?;
        let lineno = k + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if rows.is_empty() && declared.is_none() && trimmed.starts_with(TEXT_HEADER_PREFIX) {
            declared = Some(parse_text_header(trimmed)?);
            continue;
        }
        let row = trimmed
            .split_whitespace()
            .map(|tok| parse_complex(tok, lineno))
            .collect::<Result<Vec<_>>>()?;
        if let Some(n) = declared {
            let dim = 1usize << n;
            if row.len() > dim {
                return Err(Error::Dimension(format!(
                    "line {lineno} has {} entries, header declares {dim} columns",
                    row.len()
                )));
            }
            if rows.len() == dim {
                return Err(Error::Dimension(format!(
                    "more than the declared {dim} rows (line {lineno})"
                )));
            }
        }
        rows.push(row);
    }

    let num_qubits = match declared {
        Some(n) => {
            let dim = 1usize << n;
            let found: usize = rows.iter().map(Vec::len).sum();
            let short_row = rows
                .iter()
                .take(rows.len().saturating_sub(1))
                .any(|r| r.len() < dim);
            if short_row {
                return Err(Error::Dimension(
                    "rows have differing numbers of entries".to_owned(),
                ));
            }
            if (found as u128) < num_strings(n) {
                return Err(Error::Truncated {
                    expected: num_strings(n),
                    found: found as u128,
                });
            }
            n
        }
        None => {
            let dim = rows.len();
            if dim == 0 {
                return Err(Error::Dimension("empty matrix".to_owned()));
            }
            if let Some((k, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != dim) {
                return Err(Error::Dimension(format!(
                    "matrix is not square: {dim} rows but row {k} has {} entries",
                    r.len()
                )));
            }
            if dim < 2 || !dim.is_power_of_two() {
                return Err(Error::Dimension(format!(
                    "side length {dim} is not a power of two of at least 2"
                )));
            }
            dim.trailing_zeros()
        }
    };
    DenseMatrix::new(num_qubits, rows.into_iter().flatten().collect())
}

pub fn write_matrix_text(mut out: impl Write, m: &DenseMatrix) -> Result<()> {
    writeln!(out, "{TEXT_HEADER_PREFIX} v1 N={}", m.num_qubits())?;
    for row in m.elements().chunks(m.dim()) {
        let line: Vec<String> = row.iter().map(|&z| format_complex(z)).collect();
        writeln!(out, "{}", line.join(" "))?;
    }
    Ok(())
}

/// Fills `buf`, returning how many bytes were read before end of input.
fn read_full(input: &mut impl Read, buf: &mut [u8]) -> Result<usize> {
    let mut filled = 0;
    while filled < buf.len() {
        match input.read(&mut buf[filled..]) {
            Ok(0) => break,
            Ok(k) => filled += k,
            Err(e) if e.kind() == ErrorKind::Interrupted => {}
            Err(e) => return Err(e.into()),
        }
    }
    Ok(filled)
}

pub fn read_matrix_binary(input: impl Read) -> Result<DenseMatrix> {
    let mut input = BufReader::new(input);
    let mut header = [0u8; 16];
    let got = read_full(&mut input, &mut header)?;
    if got < header.len() {
        return Err(Error::Header(format!(
            "binary header is {got} bytes, expected 16"
        )));
    }
    if &header[..8] != BINARY_MAGIC {
        return Err(Error::Header(
            "bad magic, not a binary matrix file".to_owned(),
        ));
    }
    let version = u32::from_le_bytes(header[8..12].try_into().unwrap());
    if version != BINARY_VERSION {
        return Err(Error::Header(format!("unsupported version {version}")));
    }
    let num_qubits = u32::from_le_bytes(header[12..16].try_into().unwrap());
    check_header_qubits(num_qubits)?;

    let expected = 2 * num_strings(num_qubits);
    let mut values: Vec<f64> = Vec::new();
    let mut word = [0u8; 8];
    while (values.len() as u128) < expected {
        let got = read_full(&mut input, &mut word)?;
        if got < word.len() {
            return Err(Error::Truncated {
                expected,
                found: values.len() as u128,
            });
        }
        let x = f64::from_le_bytes(word);
        if !x.is_finite() {
            return Err(Error::NonFinite {
                location: format!("value {}", values.len()),
                token: format!("{x}"),
            });
        }
        values.push(x);
    }
    if read_full(&mut input, &mut word[..1])? != 0 {
        return Err(Error::Dimension("trailing data after payload".to_owned()));
    }
    let elements = values
        .chunks_exact(2)
        .map(|p| Complex64::new(p[0], p[1]))
        .collect();
    DenseMatrix::new(num_qubits, elements)
}

pub fn write_matrix_binary(mut out: impl Write, m: &DenseMatrix) -> Result<()> {
    out.write_all(BINARY_MAGIC)?;
    out.write_all(&BINARY_VERSION.to_le_bytes())?;
    out.write_all(&m.num_qubits().to_le_bytes())?;
    for z in m.elements() {
        out.write_all(&z.re.to_le_bytes())?;
        out.write_all(&z.im.to_le_bytes())?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> DenseMatrix {
        DenseMatrix::from_fn(2, |r, c| Complex64::new(r as f64 / 3.0, -(c as f64) * 1e-7)).unwrap()
    }

    #[test]
    fn headerless_two_by_two() {
        let m = read_matrix_text("1+0j 2+0j\n3+0j 4+0j\n".as_bytes()).unwrap();
        assert_eq!(m.num_qubits(), 1);
        assert_eq!(m.get(0, 1), Complex64::new(2.0, 0.0));
        assert_eq!(m.get(1, 0), Complex64::new(3.0, 0.0));
    }

    #[test]
    fn three_by_three_is_rejected() {
        let err = read_matrix_text("1 2 3\n4 5 6\n7 8 9\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Dimension(_)), "{err}");
    }

    #[test]
    fn text_errors_are_distinct() {
        type Case = (&'static str, fn(&Error) -> bool);
        let cases: [Case; 6] = [
            ("PAULIDECOMP-MAT v1 N=x\n1 0\n0 1\n", |e| {
                matches!(e, Error::Header(_))
            }),
            ("PAULIDECOMP-MAT v2 N=1\n1 0\n0 1\n", |e| {
                matches!(e, Error::Header(_))
            }),
            ("PAULIDECOMP-MAT v1 N=1\n1 0\n0\n", |e| {
                matches!(
                    e,
                    Error::Truncated {
                        expected: 4,
                        found: 3
                    }
                )
            }),
            ("PAULIDECOMP-MAT v1 N=1\n1 0 0\n0 1\n", |e| {
                matches!(e, Error::Dimension(_))
            }),
            ("1 0\n0 nan\n", |e| matches!(e, Error::NonFinite { .. })),
            ("1 0\n0 1 2\n", |e| matches!(e, Error::Dimension(_))),
        ];
        for (text, check) in cases {
            let err = read_matrix_text(text.as_bytes()).unwrap_err();
            assert!(check(&err), "{text:?} -> {err}");
        }
    }

    #[test]
    fn text_round_trip_is_exact() {
        let m = sample();
        let mut buf = Vec::new();
        write_matrix_text(&mut buf, &m).unwrap();
        assert!(String::from_utf8_lossy(&buf).starts_with("PAULIDECOMP-MAT v1 N=2\n"));
        assert_eq!(read_matrix_text(buf.as_slice()).unwrap(), m);
    }

    #[test]
    fn binary_round_trip_is_bit_identical() {
        let m = sample();
        let mut buf = Vec::new();
        write_matrix_binary(&mut buf, &m).unwrap();
        assert_eq!(buf.len(), 16 + 16 * 16);
        assert_eq!(&buf[..8], b"PAULIMAT");
        let back = read_matrix_binary(buf.as_slice()).unwrap();
        for (a, b) in back.elements().iter().zip(m.elements()) {
            assert_eq!(a.re.to_bits(), b.re.to_bits());
            assert_eq!(a.im.to_bits(), b.im.to_bits());
        }
    }

    #[test]
    fn binary_errors() {
        let mut buf = Vec::new();
        write_matrix_binary(&mut buf, &sample()).unwrap();
        assert!(matches!(
            read_matrix_binary(&buf[..buf.len() - 3]),
            Err(Error::Truncated {
                expected: 32,
                found: 31
            })
        ));
        assert!(matches!(
            read_matrix_binary(&buf[..10]),
            Err(Error::Header(_))
        ));
        let mut bad = buf.clone();
        bad[0] = b'X';
        assert!(matches!(
            read_matrix_binary(bad.as_slice()),
            Err(Error::Header(_))
        ));
        let mut big = buf.clone();
        big[12..16].copy_from_slice(&40u32.to_le_bytes());
        assert!(matches!(
            read_matrix_binary(big.as_slice()),
            Err(Error::Dimension(_))
        ));
        let mut nan = buf.clone();
        nan[16..24].copy_from_slice(&f64::NAN.to_le_bytes());
        assert!(matches!(
            read_matrix_binary(nan.as_slice()),
            Err(Error::NonFinite { .. })
        ));
        let mut long = buf;
        long.push(0);
        assert!(matches!(
            read_matrix_binary(long.as_slice()),
            Err(Error::Dimension(_))
        ));
    }
}
