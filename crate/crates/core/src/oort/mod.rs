//! Necessary conditions for (local) Oort groups: allowed shapes, the
//! forbidden-quotient sieve, the subgroup criterion and the structural
//! corollaries, gathered into a [`Verdict`].
//!
//! Only necessary conditions are decided. Whether being an Oort group depends
//! only on the characteristic of `k` (Pop's question) is out of scope.

mod corollaries;
mod forbidden;

pub use corollaries::{corollary_checks, CheckResult, CorollaryReport};
pub use forbidden::{
    detect_forbidden_type, forbidden_quotient_scan, matching_types, Detection, ForbiddenTypeHit,
    TypeDetails,
};

use serde::Serialize;

use crate::arith;
use crate::construct::Expectation;
use crate::error::GroupError;
use crate::group::{FiniteGroup, Subgroup};
use crate::structure::{is_cyclic_by_p, recognize, IsoType};

pub const QUATERNION_CAVEAT: &str = "necessary condition only; Q_{2^a} (a≥4) status open";
pub const SEMIDIHEDRAL_CAVEAT: &str =
    "semidihedral groups pass the shape test here but are known not to be local Oort groups";

/// Outcome of a shape classifier.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeCheck {
    pub pass: bool,
    pub shape: IsoType,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub caveat: Option<&'static str>,
}

fn is_dihedral_p_power(shape: IsoType, p: u64) -> bool {
    matches!(shape, IsoType::Dihedral(n) if n % 2 == 0
        && arith::p_power_exponent(n / 2, p).is_some_and(|k| k >= 1))
}

/// Shape test of the local classification, on an already recognized shape.
pub fn local_shape_allowed(shape: IsoType, p: u64) -> (bool, Option<&'static str>) {
    if matches!(shape, IsoType::Cyclic(_)) {
        return (true, None);
    }
    if p != 2 {
        return (is_dihedral_p_power(shape, p), None);
    }
    match shape {
        IsoType::A4 => (true, None),
        s if s.is_dihedral_2_group() => (true, None),
        IsoType::SemiDihedral(_) => (true, Some(SEMIDIHEDRAL_CAVEAT)),
        IsoType::GeneralizedQuaternion(n) if n >= 16 => (true, Some(QUATERNION_CAVEAT)),
        _ => (false, None),
    }
}

/// Shape test for cyclic-by-`p` Oort groups.
pub fn global_shape_allowed(shape: IsoType, p: u64) -> bool {
    if matches!(shape, IsoType::Cyclic(_)) {
        return true;
    }
    if p != 2 {
        return is_dihedral_p_power(shape, p);
    }
    shape == IsoType::A4 || shape.is_dihedral_2_group()
}

pub fn allowed_local_shape(g: &FiniteGroup, p: u64) -> Result<ShapeCheck, GroupError> {
    if !is_cyclic_by_p(g, p) {
        return Err(GroupError::NotCyclicByP(p));
    }
    let shape = recognize(g);
    let (pass, caveat) = local_shape_allowed(shape, p);
    Ok(ShapeCheck {
        pass,
        shape,
        caveat,
    })
}

pub fn allowed_global_shape_cyclic_by_p(g: &FiniteGroup, p: u64) -> Result<ShapeCheck, GroupError> {
    if !is_cyclic_by_p(g, p) {
        return Err(GroupError::NotCyclicByP(p));
    }
    let shape = recognize(g);
    Ok(ShapeCheck {
        pass: global_shape_allowed(shape, p),
        shape,
        caveat: None,
    })
}

/// A subgroup reported as evidence.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    #[serde(skip)]
    pub subgroup: Subgroup,
    pub order: usize,
    pub shape: IsoType,
    /// Generators in cycle notation.
    pub generators: Vec<String>,
}

impl Witness {
    fn new(subgroup: Subgroup, shape: IsoType) -> Self {
        let g = subgroup.parent();
        let generators = subgroup
            .generators()
            .iter()
            .map(|&x| g.element(x).to_string())
            .collect();
        Witness {
            order: subgroup.order(),
            shape,
            generators,
            subgroup,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CandidateResult {
    pub pass: bool,
    /// Number of cyclic-by-p subgroups examined.
    pub subgroups_checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// Every cyclic-by-`p` subgroup must have an allowed global shape; on failure
/// the smallest failing subgroup is returned.
pub fn oort_candidate(g: &FiniteGroup, p: u64) -> Result<CandidateResult, GroupError> {
    let subs = g.cyclic_by_p_subgroups(p)?;
    let count = subs.len();
    for h in subs {
        let shape = if h.is_whole() {
            recognize(g)
        } else if h.is_cyclic() {
            IsoType::Cyclic(h.order() as u64)
        } else {
            recognize(&h.to_group())
        };
        if !global_shape_allowed(shape, p) {
            return Ok(CandidateResult {
                pass: false,
                subgroups_checked: count,
                witness: Some(Witness::new(h, shape)),
            });
        }
    }
    Ok(CandidateResult {
        pass: true,
        subgroups_checked: count,
        witness: None,
    })
}

/// True for the finite subgroups of `PGL_2` in characteristic 0.
pub fn embeds_in_pgl2_char0(g: &FiniteGroup) -> bool {
    matches!(
        recognize(g),
        IsoType::Cyclic(_) | IsoType::Dihedral(_) | IsoType::A4 | IsoType::S4 | IsoType::A5
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "reason", rename_all = "kebab-case")]
pub enum LocalResult {
    Pass,
    Fail(String),
    NotApplicable,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub group: String,
    pub p: u64,
    pub order: usize,
    pub shape: IsoType,
    pub is_cyclic_by_p: bool,
    pub embeds_in_pgl2_char0: bool,
    pub local_oort_necessary: LocalResult,
    pub oort_necessary: CandidateResult,
    pub forbidden_quotients: Vec<ForbiddenTypeHit>,
    pub corollary_checks: CorollaryReport,
    pub caveats: Vec<String>,
}

impl Verdict {
    /// Both necessary conditions hold (the local one where it applies).
    pub fn passes(&self) -> bool {
        self.oort_necessary.pass && !matches!(self.local_oort_necessary, LocalResult::Fail(_))
    }

    /// Agreement with a corpus expectation on both sieves.
    pub fn matches(&self, e: &Expectation) -> bool {
        self.local_pass() == e.local && self.oort_necessary.pass == e.global
    }

    /// `Some(pass)` for cyclic-by-p groups, `None` otherwise.
    pub fn local_pass(&self) -> Option<bool> {
        match self.local_oort_necessary {
            LocalResult::Pass => Some(true),
            LocalResult::Fail(_) => Some(false),
            LocalResult::NotApplicable => None,
        }
    }
}

/// Runs every check on `g` at the prime `p`.
pub fn classify(g: &FiniteGroup, p: u64, group_id: &str) -> Result<Verdict, GroupError> {
    if !arith::is_prime(p) {
        return Err(GroupError::BadParameters(format!("{p} is not prime")));
    }
    let shape = recognize(g);
    let cyclic_by_p = is_cyclic_by_p(g, p);
    let forbidden = forbidden_quotient_scan(g, p)?;
    let candidate = oort_candidate(g, p)?;
    let corollaries = corollary_checks(g, p)?;
    let mut caveats = Vec::new();
    let local = if cyclic_by_p {
        let (allowed, caveat) = local_shape_allowed(shape, p);
        if let Some(c) = caveat {
            caveats.push(c.to_string());
        }
        if !allowed {
            LocalResult::Fail(format!(
                "shape {shape} is not an allowed local shape at p={p}"
            ))
        } else if let Some(hit) = forbidden.first() {
            LocalResult::Fail(format!(
                "quotient of type {} by a normal subgroup of order {}",
                hit.type_index, hit.kernel_order
            ))
        } else {
            LocalResult::Pass
        }
    } else {
        LocalResult::NotApplicable
    };
    if p == 2
        && matches!(shape, IsoType::GeneralizedQuaternion(n) if n >= 16)
        && !caveats.iter().any(|c| c == QUATERNION_CAVEAT)
    {
        caveats.push(QUATERNION_CAVEAT.to_string());
    }
    Ok(Verdict {
        group: group_id.to_string(),
        p,
        order: g.order(),
        shape,
        is_cyclic_by_p: cyclic_by_p,
        embeds_in_pgl2_char0: embeds_in_pgl2_char0(g),
        local_oort_necessary: local,
        oort_necessary: candidate,
        forbidden_quotients: forbidden,
        corollary_checks: corollaries,
        caveats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build, FamilySpec};

    fn b(s: &str) -> FiniteGroup {
        build(&s.parse::<FamilySpec>().unwrap()).unwrap()
    }

    #[test]
    fn local_shapes() {
        assert!(allowed_local_shape(&b("D:54"), 3).unwrap().pass);
        assert!(!allowed_local_shape(&b("EA:3^2"), 3).unwrap().pass);
        assert!(!allowed_local_shape(&b("Q:8"), 2).unwrap().pass);
        let sd = allowed_local_shape(&b("SD:16"), 2).unwrap();
        assert!(sd.pass && sd.caveat.is_some());
        assert_eq!(
            allowed_local_shape(&b("S4"), 2),
            Err(GroupError::NotCyclicByP(2))
        );
    }

    #[test]
    fn global_shapes() {
        assert!(
            !allowed_global_shape_cyclic_by_p(&b("Q:16"), 2)
                .unwrap()
                .pass
        );
        assert!(allowed_global_shape_cyclic_by_p(&b("A4"), 2).unwrap().pass);
        assert!(
            allowed_global_shape_cyclic_by_p(&b("C:12"), 3)
                .unwrap()
                .pass
        );
    }

    #[test]
    fn candidate_examples() {
        assert!(oort_candidate(&b("D:6"), 3).unwrap().pass);
        let w = oort_candidate(&b("EA:2^3"), 2).unwrap().witness.unwrap();
        assert_eq!(w.order, 8);
        let w = oort_candidate(&b("SL23"), 2).unwrap().witness.unwrap();
        assert_eq!(w.shape, IsoType::GeneralizedQuaternion(8));
    }

    #[test]
    fn pgl2_embedding() {
        assert!(embeds_in_pgl2_char0(&b("EA:2^2")));
        assert!(!embeds_in_pgl2_char0(&b("EA:2^3")));
        assert!(!embeds_in_pgl2_char0(&b("EA:3^2")));
        assert!(embeds_in_pgl2_char0(&b("A5")));
    }

    #[test]
    fn classify_examples() {
        let v = classify(&b("A4"), 2, "A4").unwrap();
        assert_eq!(v.shape, IsoType::A4);
        assert_eq!(v.local_oort_necessary, LocalResult::Pass);
        assert!(v.oort_necessary.pass && v.forbidden_quotients.is_empty());
        assert!(!v.corollary_checks.any_fail());

        let v = classify(&b("prod(C:4,C:2)"), 2, "C4xC2").unwrap();
        assert_eq!(v.forbidden_quotients[0].type_index, 7);
        assert_eq!(v.forbidden_quotients[0].kernel_order, 1);
        assert!(matches!(v.local_oort_necessary, LocalResult::Fail(_)));

        let v = classify(&b("C:9"), 3, "C9").unwrap();
        assert!(v.passes());
        assert_eq!(v.shape, IsoType::Cyclic(9));

        let v = classify(&b("Q:16"), 2, "Q16").unwrap();
        assert!(v.caveats.iter().any(|c| c == QUATERNION_CAVEAT));
    }
}
