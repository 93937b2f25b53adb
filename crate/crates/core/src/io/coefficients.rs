use std::collections::HashSet;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;

use num_complex::Complex64;

use super::{format_float, open_input, open_output, parse_float};
use crate::error::{Error, Result};
use crate::matrix::PauliDecomposition;
use crate::pauli::{check_qubits, string_to_index};

const CSV_HEADER: &str = "pauli,re,im";

fn check_threshold(eps: f64) -> Result<()> {
    if eps >= 0.0 && eps.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "threshold must be finite and >= 0, got {eps}"
        )))
    }
}

/// Writes every record with `|c_n| > eps` (all records when `eps == 0`) and
/// returns how many were written.
pub fn write_coefficients(
    d: &PauliDecomposition,
    path: impl AsRef<Path>,
    eps: f64,
) -> Result<usize> {
    check_threshold(eps)?;
    let mut out = open_output(path.as_ref())?;
    let count = write_coefficients_to(&mut out, d, eps)?;
    out.flush()?;
    Ok(count)
}

pub fn write_coefficients_to(
    mut out: impl Write,
    d: &PauliDecomposition,
    eps: f64,
) -> Result<usize> {
    check_threshold(eps)?;
    writeln!(out, "# N={}", d.num_qubits())?;
    writeln!(out, "{CSV_HEADER}")?;
    let mut count = 0;
    for (p, c) in d.iter() {
        if eps == 0.0 || c.norm() > eps {
            writeln!(out, "{},{},{}", p, format_float(c.re), format_float(c.im))?;
            count += 1;
        }
    }
    Ok(count)
}

pub fn read_coefficients(path: impl AsRef<Path>) -> Result<PauliDecomposition> {
    read_coefficients_from(open_input(path.as_ref())?)
}

/// Parses a coefficient file; strings without a record get a zero coefficient.
pub fn read_coefficients_from(input: impl Read) -> Result<PauliDecomposition> {
    let mut declared: Option<u32> = None;
    let mut seen_header = false;
    let mut records: Vec<(usize, String, Complex64)> = Vec::new();

    for (k, line) in BufReader::new(input).lines().enumerate() {
        let line = line?;
        let lineno = k + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(v) = comment.trim().strip_prefix("N=") {
                let n = v
                    .trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Header(format!("bad qubit declaration {line:?}")))?;
                check_qubits(n).map_err(|_| Error::Dimension(format!("N={n} out of range")))?;
                declared = Some(n);
            }
            continue;
        }
        if !seen_header {
            if line != CSV_HEADER {
                return Err(Error::Header(format!(
                    "expected {CSV_HEADER:?}, got {line:?}"
                )));
            }
            seen_header = true;
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        let [label, re, im] = fields[..] else {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("expected 3 fields, found {}", fields.len()),
            });
        };
        let value = Complex64::new(parse_float(re, lineno)?, parse_float(im, lineno)?);
        records.push((lineno, label.trim().to_owned(), value));
    }
    if !seen_header {
        return Err(Error::Header(format!("missing {CSV_HEADER:?} header")));
    }

    let num_qubits = match (declared, records.first()) {
        (Some(n), _) => n,
        (None, Some((_, label, _))) => label.chars().count() as u32,
        (None, None) => {
            return Err(Error::Header(
                "no records and no `# N=` declaration, cannot determine N".to_owned(),
            ))
        }
    };
    let mut d = PauliDecomposition::zeros(num_qubits)?;
    let mut seen = HashSet::new();
    for (lineno, label, value) in records {
        if label.chars().count() as u32 != num_qubits {
            return Err(Error::Dimension(format!(
                "line {lineno}: label {label:?} does not have {num_qubits} operators"
            )));
        }
        let n = string_to_index(&label, num_qubits)?;
        if !seen.insert(n) {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("duplicate record for {label}"),
            });
        }
        d.coefficients_mut()[n as usize] = value;
    }
    Ok(d)
}
