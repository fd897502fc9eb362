use std::path::Path;
use std::str::FromStr;

use super::submodule::HomogeneousElement;
use crate::error::{Error, Result};
use crate::exactalg::Rational;

/// Parses a homogeneous-generator file: one `degree: c1 c2 … cd` per line,
/// coordinates as integers or `p/q`. Blank lines and `#` comments are
/// skipped. `dim(degree)` gives the expected length, or `None` when the
/// degree is outside the module.
pub fn parse_generators(text: &str, dim: impl Fn(usize) -> Option<usize>) -> Result<Vec<HomogeneousElement>> {
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse { line, message };
        let (deg, rest) = content
            .split_once(':')
            .ok_or_else(|| err("expected `degree: coordinates`".into()))?;
        let degree: usize = deg
            .trim()
            .parse()
            .map_err(|_| err(format!("bad degree `{}`", deg.trim())))?;
        let coords = rest
            .split_whitespace()
            .map(|t| Rational::from_str(t).map_err(|e| err(format!("bad coordinate `{t}`: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        let expected = dim(degree).ok_or_else(|| err(format!("degree {degree} is beyond the truncation")))?;
        if coords.len() != expected {
            return Err(err(format!(
                "degree {degree} needs {expected} coordinates, found {}",
                coords.len()
            )));
        }
        out.push(HomogeneousElement { degree, coords });
    }
    Ok(out)
}

pub fn load_generators(path: &Path, dim: impl Fn(usize) -> Option<usize>) -> Result<Vec<HomogeneousElement>> {
    parse_generators(&std::fs::read_to_string(path)?, dim)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(d: usize) -> Option<usize> {
        [0, 1, 2, 3].get(d).copied()
    }

    #[test]
    fn parses_fractions_and_comments() {
        let text = "# sum-zero\n\n2: 1 -1\n3: 1/2 -1/2 0  # trailing\n";
        let gens = parse_generators(text, dims).unwrap();
        assert_eq!(gens.len(), 2);
        assert_eq!(gens[1].coords[0], Rational::new(1.into(), 2.into()));
    }

    #[test]
    fn errors_carry_line_numbers() {
        for (text, line) in [
            ("2: 1 -1\n2 1 -1\n", 2),
            ("\n\nx: 1\n", 3),
            ("2: 1 a\n", 1),
            ("2: 1 1/0\n", 1),
            ("2: 1\n", 1),
            ("7: 1\n", 1),
        ] {
            match parse_generators(text, dims) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }
}
