//! Galois covers of curves given numerically, and their genera.
//!
//! Text grammar, one directive per line, `#` starts a comment:
//!
//! ```text
//! group_order 8
//! base_genus 0
//! branch 8 p=2 : 8 8 2 2 2 2
//! branch 2
//! ```

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::filtration::{different_exponent, RamificationFiltration};
use crate::arith;
use crate::error::{ParseError, RamificationError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchPoint {
    pub inertia_order: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub filtration: Option<RamificationFiltration>,
}

impl BranchPoint {
    pub fn tame(e: u64) -> Self {
        BranchPoint {
            inertia_order: e,
            filtration: None,
        }
    }

    pub fn wild(f: RamificationFiltration) -> Self {
        BranchPoint {
            inertia_order: f.inertia_order(),
            filtration: Some(f),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverSpec {
    pub group_order: u64,
    pub base_genus: u64,
    pub branch: Vec<BranchPoint>,
}

fn inconsistent(msg: impl Into<String>) -> RamificationError {
    RamificationError::InconsistentCover(msg.into())
}

impl CoverSpec {
    pub fn new(
        group_order: u64,
        base_genus: u64,
        branch: Vec<BranchPoint>,
    ) -> Result<Self, RamificationError> {
        let c = CoverSpec {
            group_order,
            base_genus,
            branch,
        };
        c.validate()?;
        Ok(c)
    }

    /// A cover whose branch points are all tame with the given indices.
    pub fn tame(
        group_order: u64,
        base_genus: u64,
        indices: &[u64],
    ) -> Result<Self, RamificationError> {
        Self::new(
            group_order,
            base_genus,
            indices.iter().map(|&e| BranchPoint::tame(e)).collect(),
        )
    }

    pub fn validate(&self) -> Result<(), RamificationError> {
        if self.group_order == 0 {
            return Err(inconsistent("group order must be positive"));
        }
        let mut prime = None;
        for (k, b) in self.branch.iter().enumerate() {
            if b.inertia_order < 2 {
                return Err(inconsistent(format!(
                    "branch point {k}: inertia order must be at least 2"
                )));
            }
            if !self.group_order.is_multiple_of(b.inertia_order) {
                return Err(inconsistent(format!(
                    "branch point {k}: inertia order {} does not divide {}",
                    b.inertia_order, self.group_order
                )));
            }
            if let Some(f) = &b.filtration {
                if f.inertia_order() != b.inertia_order {
                    return Err(inconsistent(format!(
                        "branch point {k}: filtration starts at {}, inertia order is {}",
                        f.inertia_order(),
                        b.inertia_order
                    )));
                }
                if prime.is_some_and(|q| q != f.p()) {
                    return Err(inconsistent("filtrations disagree on the characteristic"));
                }
                prime = Some(f.p());
            }
        }
        Ok(())
    }

    /// The characteristic named by the filtrations, if any.
    pub fn characteristic(&self) -> Option<u64> {
        self.branch
            .iter()
            .find_map(|b| b.filtration.as_ref().map(|f| f.p()))
    }
}

/// Solves `2g - 2 = |G| (2 g_X - 2) + sum_points (|G| / e) d_point`.
fn solve_genus(c: &CoverSpec, differents: &[u64]) -> Result<u64, RamificationError> {
    let n = BigInt::from(c.group_order);
    let mut rhs: BigInt = &n * (BigInt::from(c.base_genus) * 2 - 2);
    for (b, &d) in c.branch.iter().zip(differents) {
        rhs += BigInt::from(c.group_order / b.inertia_order) * BigInt::from(d);
    }
    let two_g: BigInt = rhs + 2;
    if two_g.is_negative() {
        return Err(inconsistent(format!("Riemann-Hurwitz gives 2g = {two_g}")));
    }
    if two_g.is_odd() {
        return Err(inconsistent(format!(
            "Riemann-Hurwitz gives odd 2g = {two_g}"
        )));
    }
    (two_g / BigInt::from(2))
        .to_u64()
        .ok_or_else(|| inconsistent("genus out of range"))
}

/// Genus of a tamely ramified cover (characteristic 0, or prime to `p`).
pub fn tame_rh_genus(c: &CoverSpec) -> Result<u64, RamificationError> {
    c.validate()?;
    if let Some(b) = c
        .branch
        .iter()
        .find(|b| b.filtration.as_ref().is_some_and(|f| f.orders().len() > 1))
    {
        return Err(inconsistent(format!(
            "wild ramification of index {}; use the wild formula",
            b.inertia_order
        )));
    }
    let diffs: Vec<u64> = c.branch.iter().map(|b| b.inertia_order - 1).collect();
    solve_genus(c, &diffs)
}

/// Genus with wild ramification, from the different at each point.
pub fn wild_rh_genus(c: &CoverSpec) -> Result<u64, RamificationError> {
    c.validate()?;
    let p = c.characteristic();
    let mut diffs = Vec::with_capacity(c.branch.len());
    for b in &c.branch {
        match (&b.filtration, p) {
            (Some(f), _) => diffs.push(different_exponent(f)),
            (None, Some(p)) if b.inertia_order % p == 0 => {
                return Err(inconsistent(format!(
                    "inertia order {} is divisible by p = {p} but no filtration is given",
                    b.inertia_order
                )))
            }
            (None, _) => diffs.push(b.inertia_order - 1),
        }
    }
    solve_genus(c, &diffs)
}

/// Genus of `w^p - w = f(u)` with `deg f = m` prime to `p`.
pub fn artin_schreier_genus(p: u64, m: u64) -> Result<u64, RamificationError> {
    if !arith::is_prime(p) {
        return Err(RamificationError::BadParameters(format!(
            "{p} is not prime"
        )));
    }
    if m == 0 {
        return Err(RamificationError::BadParameters(
            "degree must be at least 1".into(),
        ));
    }
    if m.is_multiple_of(p) {
        return Err(RamificationError::BadDegree { p, m });
    }
    let g = BigInt::from(p - 1) * BigInt::from(m - 1);
    debug_assert!(g.is_even() || g.is_zero());
    (g / BigInt::from(2))
        .to_u64()
        .ok_or_else(|| RamificationError::BadParameters("genus out of range".into()))
}

impl fmt::Display for CoverSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group_order {}", self.group_order)?;
        writeln!(f, "base_genus {}", self.base_genus)?;
        for b in &self.branch {
            write!(f, "branch {}", b.inertia_order)?;
            if let Some(fl) = &b.filtration {
                write!(f, " p={} :", fl.p())?;
                for o in fl.orders() {
                    write!(f, " {o}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn parse_u64(tok: &str, line: usize, col: usize) -> Result<u64, ParseError> {
    tok.parse::<u64>().map_err(|_| {
        ParseError::new(
            line,
            col,
            format!("expected a non-negative integer, found `{tok}`"),
        )
    })
}

/// Splits a line into tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        let sep = ch.is_whitespace() || ch == ':';
        match (sep, start) {
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
        if ch == ':' {
            out.push((i + 1, ":"));
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

impl FromStr for CoverSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut group_order = None;
        let mut base_genus = None;
        let mut branch = Vec::new();
        let mut last_line = 1;
        for (idx, raw) in s.lines().enumerate() {
            let line_no = idx + 1;
            last_line = line_no;
            let line = raw.split('#').next().unwrap_or("");
            let toks = tokens(line);
            let Some(&(col, key)) = toks.first() else {
                continue;
            };
            let single = |name: &str| -> Result<u64, ParseError> {
                match toks.as_slice() {
                    [_, (c, v)] => parse_u64(v, line_no, *c),
                    _ => Err(ParseError::new(
                        line_no,
                        col,
                        format!("`{name}` takes one integer"),
                    )),
                }
            };
            match key {
                "group_order" => group_order = Some(single("group_order")?),
                "base_genus" => base_genus = Some(single("base_genus")?),
                "branch" => {
                    let Some(&(ecol, etok)) = toks.get(1) else {
                        return Err(ParseError::new(
                            line_no,
                            col,
                            "`branch` needs an inertia order",
                        ));
                    };
                    let e = parse_u64(etok, line_no, ecol)?;
                    let filtration = match toks.get(2) {
                        None => None,
                        Some(&(pcol, ptok)) => {
                            let p = ptok
                                .strip_prefix("p=")
                                .ok_or_else(|| {
                                    ParseError::new(line_no, pcol, "expected `p=<prime>`")
                                })
                                .and_then(|v| parse_u64(v, line_no, pcol + 2))?;
                            match toks.get(3) {
                                Some(&(_, ":")) => {}
                                Some(&(c, _)) => {
                                    return Err(ParseError::new(line_no, c, "expected `:`"))
                                }
                                None => {
                                    return Err(ParseError::new(
                                        line_no,
                                        line.len() + 1,
                                        "expected `:`",
                                    ))
                                }
                            }
                            let mut orders = Vec::new();
                            for &(c, t) in &toks[4..] {
                                orders.push(parse_u64(t, line_no, c)?);
                            }
                            if orders.is_empty() {
                                return Err(ParseError::new(
                                    line_no,
                                    line.len() + 1,
                                    "empty filtration",
                                ));
                            }
                            let f = RamificationFiltration::new(p, &orders)
                                .map_err(|err| ParseError::new(line_no, pcol, err.to_string()))?;
                            Some(f)
                        }
                    };
                    branch.push(BranchPoint {
                        inertia_order: e,
                        filtration,
                    });
                }
                other => {
                    return Err(ParseError::new(
                        line_no,
                        col,
                        format!("unknown directive `{other}`"),
                    ));
                }
            }
        }
        let group_order =
            group_order.ok_or_else(|| ParseError::new(last_line, 1, "missing `group_order`"))?;
        let base_genus = base_genus.unwrap_or(0);
        let spec = CoverSpec {
            group_order,
            base_genus,
            branch,
        };
        spec.validate()
            .map_err(|e| ParseError::new(last_line, 1, e.to_string()))?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn filt(p: u64, o: &[u64]) -> RamificationFiltration {
        RamificationFiltration::new(p, o).unwrap()
    }

    #[test]
    fn artin_schreier_examples() {
        assert_eq!(artin_schreier_genus(3, 4), Ok(3));
        assert_eq!(artin_schreier_genus(5, 1), Ok(0));
        assert_eq!(artin_schreier_genus(3, 5), Ok(4));
        assert_eq!(
            artin_schreier_genus(3, 6),
            Err(RamificationError::BadDegree { p: 3, m: 6 })
        );
    }

    #[test]
    fn tame_examples() {
        assert_eq!(
            tame_rh_genus(&CoverSpec::tame(2, 0, &[2, 2]).unwrap()),
            Ok(0)
        );
        assert_eq!(
            tame_rh_genus(&CoverSpec::tame(5, 0, &[5; 6]).unwrap()),
            Ok(8)
        );
        assert_eq!(
            tame_rh_genus(&CoverSpec::tame(4, 0, &[2, 2, 2]).unwrap()),
            Ok(0)
        );
        assert!(matches!(
            tame_rh_genus(&CoverSpec::tame(2, 0, &[2]).unwrap()),
            Err(RamificationError::InconsistentCover(_))
        ));
        assert!(CoverSpec::tame(6, 0, &[4]).is_err());
    }

    #[test]
    fn wild_examples() {
        let n_cover = CoverSpec::new(2, 0, vec![BranchPoint::wild(filt(2, &[2, 2]))]).unwrap();
        assert_eq!(wild_rh_genus(&n_cover), Ok(0));
        for p in [3, 5] {
            for m in [2, 4] {
                let f = filt(p, &vec![p; m as usize + 1]);
                let c = CoverSpec::new(p, 0, vec![BranchPoint::wild(f)]).unwrap();
                assert_eq!(
                    wild_rh_genus(&c).unwrap(),
                    artin_schreier_genus(p, m).unwrap()
                );
            }
        }
        let c =
            CoverSpec::new(8, 0, vec![BranchPoint::wild(filt(2, &[8, 8, 2, 2, 2, 2]))]).unwrap();
        assert_eq!(wild_rh_genus(&c), Ok(2));
        assert!(tame_rh_genus(&c).is_err());
    }

    #[test]
    fn missing_filtration_is_inconsistent() {
        let c = CoverSpec::new(
            6,
            0,
            vec![BranchPoint::wild(filt(3, &[3, 3])), BranchPoint::tame(3)],
        )
        .unwrap();
        assert!(matches!(
            wild_rh_genus(&c),
            Err(RamificationError::InconsistentCover(_))
        ));
    }

    #[test]
    fn text_round_trip() {
        let text = "group_order 8\nbase_genus 0\n# the one wild point\nbranch 8 p=2 : 8 8 2 2 2 2\nbranch 2\n";
        let c: CoverSpec = text.parse().unwrap();
        assert_eq!(c.branch.len(), 2);
        assert_eq!(c.to_string().parse::<CoverSpec>().unwrap(), c);
        let compact: CoverSpec = "group_order 4\nbranch 4 p=2: 4 4".parse().unwrap();
        assert_eq!(
            compact.branch[0].filtration.as_ref().unwrap().orders(),
            &[4, 4]
        );
    }

    #[test]
    fn parse_errors() {
        let e = "group_order x".parse::<CoverSpec>().unwrap_err();
        assert_eq!((e.line, e.column), (1, 13));
        let e = "group_order 4\nbranchy 2".parse::<CoverSpec>().unwrap_err();
        assert_eq!((e.line, e.column), (2, 1));
        let e = "group_order 4\nbranch 4 q=2 : 4 4"
            .parse::<CoverSpec>()
            .unwrap_err();
        assert_eq!((e.line, e.column), (2, 10));
        assert!("base_genus 1".parse::<CoverSpec>().is_err());
        assert!("group_order 6\nbranch 4".parse::<CoverSpec>().is_err());
    }
}
