//! Plain-text group specs: a `degree N` line followed by one generator per
//! line in disjoint-cycle notation over 0-based points.
//!
//! ```text
//! # Klein four group
//! degree 4
//! (0 1)(2 3)
//! (0 2)(1 3)
//! ```
//!
//! Blank lines and `#` comments are ignored. `()` denotes the identity.

use crate::caps::Caps;
use crate::error::{GroupError, ParseError};
use crate::group::FiniteGroup;
use crate::perm::Permutation;

/// Parsed but not yet closed group spec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl GroupSpec {
    pub fn build(&self, caps: Caps) -> Result<FiniteGroup, GroupError> {
        FiniteGroup::generate_with_caps(self.degree, &self.generators, caps)
    }
}

pub fn parse_group_spec(text: &str) -> Result<GroupSpec, ParseError> {
    let mut degree: Option<usize> = None;
    let mut generators = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let indent = content.len() - content.trim_start().len();
        match degree {
            None => {
                let rest = trimmed
                    .strip_prefix("degree")
                    .ok_or_else(|| ParseError::new(line_no, indent + 1, "expected `degree N`"))?;
                let value = rest.trim();
                let col = indent + 1 + trimmed.len() - value.len();
                let n: usize = value
                    .parse()
                    .map_err(|_| ParseError::new(line_no, col, format!("bad degree `{value}`")))?;
                if n == 0 {
                    return Err(ParseError::new(line_no, col, "degree must be positive"));
                }
                degree = Some(n);
            }
            Some(n) => generators.push(parse_cycles(trimmed, n, line_no, indent + 1)?),
        }
    }
    let degree = degree.ok_or_else(|| ParseError::new(1, 1, "missing `degree N` line"))?;
    Ok(GroupSpec { degree, generators })
}

/// Parses `(0 1 2)(3 4)` on `degree` points; `col0` is the 1-based column of
/// the first character for error reporting.
pub fn parse_cycles(
    text: &str,
    degree: usize,
    line: usize,
    col0: usize,
) -> Result<Permutation, ParseError> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut current: Option<Vec<usize>> = None;
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let col = col0 + i;
        let ch = bytes[i];
        match ch {
            b'(' => {
                if current.is_some() {
                    return Err(ParseError::new(line, col, "nested `(`"));
                }
                current = Some(Vec::new());
                i += 1;
            }
            b')' => {
                let cycle = current
                    .take()
                    .ok_or_else(|| ParseError::new(line, col, "unmatched `)`"))?;
                if !cycle.is_empty() {
                    cycles.push(cycle);
                }
                i += 1;
            }
            b' ' | b'\t' | b',' => i += 1,
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let cycle = current
                    .as_mut()
                    .ok_or_else(|| ParseError::new(line, col, "point outside a cycle"))?;
                let point: usize = text[start..i]
                    .parse()
                    .map_err(|_| ParseError::new(line, col, "bad point"))?;
                if point >= degree {
                    return Err(ParseError::new(
                        line,
                        col,
                        format!("point {point} out of range for degree {degree}"),
                    ));
                }
                cycle.push(point);
            }
            _ => {
                return Err(ParseError::new(
                    line,
                    col,
                    format!("unexpected character `{}`", ch as char),
                ))
            }
        }
    }
    if current.is_some() {
        return Err(ParseError::new(
            line,
            col0 + bytes.len(),
            "unterminated cycle",
        ));
    }
    Permutation::from_cycles(degree, &cycles)
        .map_err(|e| ParseError::new(line, col0, e.to_string()))
}

/// Emits the spec text for a group's generators.
pub fn emit_group_spec(g: &FiniteGroup) -> String {
    let mut out = format!("degree {}\n", g.degree());
    for gen in g.generators() {
        out.push_str(&gen.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_klein() {
        let spec =
            parse_group_spec("# klein\n\ndegree 4\n(0 1)(2 3)\n(0 2)(1 3) # second\n").unwrap();
        assert_eq!(spec.degree, 4);
        assert_eq!(spec.generators.len(), 2);
        assert_eq!(spec.build(Caps::default()).unwrap().order(), 4);
    }

    #[test]
    fn reports_positions() {
        let err = parse_group_spec("degree 3\n(0 1 5)\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 6));
        let err = parse_group_spec("(0 1)\n").unwrap_err();
        assert_eq!((err.line, err.column), (1, 1));
        let err = parse_group_spec("degree x\n").unwrap_err();
        assert_eq!((err.line, err.column), (1, 8));
        let err = parse_group_spec("degree 3\n  (0 1)(1 2)\n").unwrap_err();
        assert_eq!(err.line, 2);
        let err = parse_group_spec("degree 3\n(0 1\n").unwrap_err();
        assert_eq!(err.line, 2);
    }

    #[test]
    fn round_trip() {
        let spec = parse_group_spec("degree 5\n(0 1 2 3 4)\n(1 4)(2 3)\n()\n").unwrap();
        let g = spec.build(Caps::default()).unwrap();
        let again = parse_group_spec(&emit_group_spec(&g)).unwrap();
        assert_eq!(
            again.build(Caps::default()).unwrap().elements(),
            g.elements()
        );
    }
}
