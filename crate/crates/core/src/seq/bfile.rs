use std::fmt::Write;

use num_bigint::BigInt;

use super::{SeqError, Term};

/// Parses "index value" lines. Blank lines and lines starting with `#` are
/// skipped; indexes must be consecutive.
pub fn parse_bfile(text: &[u8]) -> Result<Vec<Term>, SeqError> {
    let text = String::from_utf8_lossy(text);
    let mut terms: Vec<Term> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |message: &str| SeqError::Parse { line: lineno + 1, message: message.to_string() };
        let mut fields = line.split_whitespace();
        let (Some(i), Some(v), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(bad("expected exactly two fields"));
        };
        let index: i64 = i.parse().map_err(|_| bad("index is not an integer"))?;
        let value: BigInt = v.parse().map_err(|_| bad("value is not an integer"))?;
        if let Some(last) = terms.last() {
            if index != last.index + 1 {
                return Err(SeqError::Gap { previous: last.index, found: index });
            }
        }
        terms.push(Term { index, value });
    }
    Ok(terms)
}

/// One "index value" line per term, newline-terminated, no trailing blank.
pub fn render_bfile(terms: &[Term]) -> String {
    let mut out = String::new();
    for t in terms {
        writeln!(out, "{} {}", t.index, t.value).unwrap();
    }
    out
}
