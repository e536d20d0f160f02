//! Structural consequences of being an Oort group, used as cross-checks.

use std::fmt;

use serde::Serialize;

use crate::arith;
use crate::error::GroupError;
use crate::group::{FiniteGroup, Subgroup};
use crate::structure::{centralizer, normalizer, p_group_frattini, recognize, sylow};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "witness", rename_all = "kebab-case")]
pub enum CheckResult {
    Pass,
    Fail(String),
    NotApplicable,
}

impl CheckResult {
    pub fn is_fail(&self) -> bool {
        matches!(self, CheckResult::Fail(_))
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckResult::Pass => f.write_str("pass"),
            CheckResult::Fail(w) => write!(f, "fail ({w})"),
            CheckResult::NotApplicable => f.write_str("n/a"),
        }
    }
}

/// Results keyed by corollary: Sylow cyclic (odd p), normalizer action
/// (odd p), Sylow 2 cyclic or dihedral, odd-order normalizer action (p = 2).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryReport {
    pub sylow_cyclic: CheckResult,
    pub normalizer_inverts: CheckResult,
    pub sylow2_cyclic_or_dihedral: CheckResult,
    pub odd_normalizer_order3: CheckResult,
}

impl CorollaryReport {
    pub fn entries(&self) -> [(&'static str, &CheckResult); 4] {
        [
            ("sylow_cyclic", &self.sylow_cyclic),
            ("normalizer_inverts", &self.normalizer_inverts),
            ("sylow2_cyclic_or_dihedral", &self.sylow2_cyclic_or_dihedral),
            ("odd_normalizer_order3", &self.odd_normalizer_order3),
        ]
    }

    pub fn any_fail(&self) -> bool {
        self.entries().iter().any(|(_, r)| r.is_fail())
    }
}

fn describe(g: &FiniteGroup, x: usize) -> String {
    g.element(x).to_string()
}

fn p_subgroups(g: &FiniteGroup, p: u64) -> Result<Vec<Subgroup>, GroupError> {
    Ok(g.all_subgroups()?
        .into_iter()
        .filter(|h| !h.is_trivial() && arith::p_power_exponent(h.order() as u64, p).is_some())
        .collect())
}

fn sylow_conjugates(g: &FiniteGroup, p: u64) -> Vec<Subgroup> {
    let s = sylow(g, p);
    let mut out: Vec<Subgroup> = Vec::new();
    for x in 0..g.order() {
        let c = g.conjugate(&s, x);
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

fn check_3_7(g: &FiniteGroup, p: u64) -> Result<CheckResult, GroupError> {
    let sylows = sylow_conjugates(g, p);
    for pg in p_subgroups(g, p)? {
        let n = normalizer(g, &pg)?;
        let c = centralizer(g, &pg)?;
        for x in n.members().filter(|&x| !c.contains(x)) {
            let ord = g.order_of(x);
            if ord != 2 {
                return Ok(CheckResult::Fail(format!(
                    "{} of order {ord} normalizes a {p}-subgroup of order {} without centralizing it",
                    describe(g, x),
                    pg.order()
                )));
            }
            let inverts = |h: &Subgroup| h.members().all(|y| g.conj(x, y) == g.inv(y));
            if !inverts(&pg) {
                return Ok(CheckResult::Fail(format!(
                    "{} does not invert the {p}-subgroup of order {}",
                    describe(g, x),
                    pg.order()
                )));
            }
            if !inverts(&c) {
                return Ok(CheckResult::Fail(format!(
                    "{} does not invert the centralizer of order {}",
                    describe(g, x),
                    c.order()
                )));
            }
            for s in sylows.iter().filter(|s| pg.is_subgroup_of(s)) {
                let cs = centralizer(g, s)?;
                if cs != c {
                    return Ok(CheckResult::Fail(format!(
                        "centralizer of a Sylow {p}-subgroup has order {}, centralizer of the subgroup of order {} has order {}",
                        cs.order(),
                        pg.order(),
                        c.order()
                    )));
                }
            }
        }
    }
    Ok(CheckResult::Pass)
}

fn check_4_8(g: &FiniteGroup) -> Result<CheckResult, GroupError> {
    for pg in p_subgroups(g, 2)? {
        let n = normalizer(g, &pg)?;
        let c = centralizer(g, &pg)?;
        let odd: Vec<usize> = n
            .members()
            .filter(|&x| !c.contains(x) && g.order_of(x) % 2 == 1)
            .collect();
        if odd.is_empty() {
            continue;
        }
        let phi = p_group_frattini(g, &pg, 2);
        let frattini_index = pg.order() / phi.order();
        for x in odd {
            let ord = g.order_of(x);
            if ord != 3 {
                return Ok(CheckResult::Fail(format!(
                    "{} of order {ord} normalizes a 2-subgroup of order {} without centralizing it",
                    describe(g, x),
                    pg.order()
                )));
            }
            if frattini_index != 4 {
                return Ok(CheckResult::Fail(format!(
                    "2-subgroup of order {} normalized by an element of order 3 has P/Phi(P) of order {frattini_index}",
                    pg.order()
                )));
            }
            // x acts nontrivially on P/Phi(P).
            let moves_coset = pg.members().any(|y| {
                let moved = g.mul(g.conj(x, y), g.inv(y));
                !phi.contains(moved)
            });
            if !moves_coset {
                return Ok(CheckResult::Fail(format!(
                    "{} acts trivially on P/Phi(P) for P of order {}",
                    describe(g, x),
                    pg.order()
                )));
            }
        }
    }
    Ok(CheckResult::Pass)
}

pub fn corollary_checks(g: &FiniteGroup, p: u64) -> Result<CorollaryReport, GroupError> {
    if p == 2 {
        let s = sylow(g, 2);
        let shape = recognize(&s.to_group());
        let c47 = if shape.is_dihedral_2_group() || matches!(shape, crate::IsoType::Cyclic(_)) {
            CheckResult::Pass
        } else {
            CheckResult::Fail(format!("Sylow 2-subgroup is {shape}"))
        };
        Ok(CorollaryReport {
            sylow_cyclic: CheckResult::NotApplicable,
            normalizer_inverts: CheckResult::NotApplicable,
            sylow2_cyclic_or_dihedral: c47,
            odd_normalizer_order3: check_4_8(g)?,
        })
    } else {
        let s = sylow(g, p);
        let c36 = if s.is_cyclic() {
            CheckResult::Pass
        } else {
            CheckResult::Fail(format!(
                "Sylow {p}-subgroup of order {} is not cyclic",
                s.order()
            ))
        };
        Ok(CorollaryReport {
            sylow_cyclic: c36,
            normalizer_inverts: check_3_7(g, p)?,
            sylow2_cyclic_or_dihedral: CheckResult::NotApplicable,
            odd_normalizer_order3: CheckResult::NotApplicable,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build, FamilySpec};

    fn report(s: &str, p: u64) -> CorollaryReport {
        corollary_checks(&build(&s.parse::<FamilySpec>().unwrap()).unwrap(), p).unwrap()
    }

    #[test]
    fn dihedral_reflections_invert() {
        let r = report("D:18", 3);
        assert_eq!(r.sylow_cyclic, CheckResult::Pass);
        assert_eq!(r.normalizer_inverts, CheckResult::Pass);
        assert_eq!(r.sylow2_cyclic_or_dihedral, CheckResult::NotApplicable);
    }

    #[test]
    fn a4_in_characteristic_two() {
        let r = report("A4", 2);
        assert_eq!(r.sylow2_cyclic_or_dihedral, CheckResult::Pass);
        assert_eq!(r.odd_normalizer_order3, CheckResult::Pass);
    }

    #[test]
    fn sl23_sylow_is_quaternion() {
        let r = report("SL23", 2);
        assert!(r.sylow2_cyclic_or_dihedral.is_fail());
    }

    #[test]
    fn order_four_normalizer_fails() {
        // C3 . C4 with the generator inverting: an element of order 4
        // normalizes C3 without centralizing it.
        assert!(report("sd(C:3,4,inv)", 3).normalizer_inverts.is_fail());
        assert!(report("EA:3^2", 3).sylow_cyclic.is_fail());
    }

    #[test]
    fn c9_is_fine() {
        let r = report("C:9", 3);
        assert!(!r.any_fail());
    }
}
