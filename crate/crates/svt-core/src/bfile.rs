//! OEIS b-file reading and writing.
//!
//! A b-file is plain ASCII, one "n a(n)" pair per line with n ascending and
//! consecutive. '#'-prefixed comment lines and blank lines are tolerated on
//! input and never produced on output.

use std::io::{BufRead, Write};

use num_bigint::BigInt;
use thiserror::Error;

use crate::holonomic::BigSequence;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BFileError {
    #[error("line {line}: expected \"n a(n)\", got {got:?}")]
    Malformed { line: usize, got: String },
    #[error("line {line}: index {found} is not consecutive after {previous}")]
    NonConsecutive {
        line: usize,
        previous: i64,
        found: i64,
    },
    #[error("no data lines")]
    Empty,
}

/// Parse a b-file from a reader.
pub fn read<R: BufRead>(reader: R) -> Result<BigSequence, BFileError> {
    let mut offset: Option<i64> = None;
    let mut next_index = 0i64;
    let mut terms: Vec<BigInt> = Vec::new();

    for (lineno, line) in reader.lines().enumerate() {
        let lineno = lineno + 1;
        let line = line.map_err(|e| BFileError::Malformed {
            line: lineno,
            got: format!("<io error: {e}>"),
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut parts = trimmed.split_whitespace();
        let (Some(n), Some(a), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(BFileError::Malformed {
                line: lineno,
                got: trimmed.to_string(),
            });
        };
        let n: i64 = n.parse().map_err(|_| BFileError::Malformed {
            line: lineno,
            got: trimmed.to_string(),
        })?;
        let a: BigInt = a.parse().map_err(|_| BFileError::Malformed {
            line: lineno,
            got: trimmed.to_string(),
        })?;
        match offset {
            None => {
                offset = Some(n);
                next_index = n + 1;
            }
            Some(_) => {
                if n != next_index {
                    return Err(BFileError::NonConsecutive {
                        line: lineno,
                        previous: next_index - 1,
                        found: n,
                    });
                }
                next_index += 1;
            }
        }
        terms.push(a);
    }

    match offset {
        Some(off) => Ok(BigSequence::new(off, terms)),
        None => Err(BFileError::Empty),
    }
}

/// Write a sequence in b-file form.
pub fn write<W: Write>(mut writer: W, seq: &BigSequence) -> std::io::Result<()> {
    for (n, a) in seq.iter_indexed() {
        writeln!(writer, "{n} {a}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let seq = BigSequence::from_i64s(1, &[1, 6, 37, 240]);
        let mut buf = Vec::new();
        write(&mut buf, &seq).unwrap();
        assert_eq!(String::from_utf8_lossy(&buf), "1 1\n2 6\n3 37\n4 240\n");
        assert_eq!(read(&buf[..]).unwrap(), seq);
    }

    #[test]
    fn comments_and_blanks_are_skipped() {
        let text = "# A271905 terms\n\n1 1\n2 6\n# interlude\n3 37\n";
        let seq = read(text.as_bytes()).unwrap();
        assert_eq!(seq, BigSequence::from_i64s(1, &[1, 6, 37]));
    }

    #[test]
    fn offsets_other_than_one() {
        let seq = read("0 5\n1 7\n".as_bytes()).unwrap();
        assert_eq!(seq.offset(), 0);
        assert_eq!(seq.len(), 2);
    }

    #[test]
    fn rejects_gaps() {
        assert_eq!(
            read("1 1\n3 37\n".as_bytes()),
            Err(BFileError::NonConsecutive {
                line: 2,
                previous: 1,
                found: 3
            })
        );
    }

    #[test]
    fn rejects_junk() {
        assert!(matches!(
            read("1 1\ntwo 6\n".as_bytes()),
            Err(BFileError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            read("1 1 1\n".as_bytes()),
            Err(BFileError::Malformed { line: 1, .. })
        ));
        assert_eq!(read("# only comments\n".as_bytes()), Err(BFileError::Empty));
    }
}
