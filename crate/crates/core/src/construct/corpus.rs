//! The labelled test corpus: family instances with known verdicts where the
//! classification pins them down.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{fixture_spec, FamilySpec};
use crate::arith;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    /// Orders up to 64, primes 2, 3, 5.
    Smoke,
    /// Orders up to 1024, primes 2, 3, 5, 7, extra parameters.
    Full,
}

impl Profile {
    pub fn order_bound(self) -> u64 {
        match self {
            Profile::Smoke => 64,
            Profile::Full => 1024,
        }
    }

    pub fn primes(self) -> &'static [u64] {
        match self {
            Profile::Smoke => &[2, 3, 5],
            Profile::Full => &[2, 3, 5, 7],
        }
    }
}

impl FromStr for Profile {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "smoke" => Ok(Profile::Smoke),
            "full" => Ok(Profile::Full),
            other => Err(format!(
                "unknown profile `{other}` (expected smoke or full)"
            )),
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Profile::Smoke => "smoke",
            Profile::Full => "full",
        })
    }
}

/// What is known about the group at `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Label {
    Oort,
    NotOort,
    NotLocalOort,
    /// Only the necessary conditions are checked; the status is not pinned down.
    NecessaryOnly,
}

impl Label {
    pub fn describe(self, p: u64) -> String {
        match self {
            Label::Oort => format!("Oort group, p={p}"),
            Label::NotOort => format!("not Oort, p={p}"),
            Label::NotLocalOort => format!("not local Oort, p={p}"),
            Label::NecessaryOnly => "necessary-conditions-only".into(),
        }
    }
}

/// Expected outcome of the two sieves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Expectation {
    pub label: Label,
    /// Local necessary condition; `None` when the group is not cyclic-by-p.
    pub local: Option<bool>,
    /// Subgroup-level Oort criterion.
    pub global: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub spec: FamilySpec,
    pub p: u64,
    pub expect: Expectation,
}

impl CorpusEntry {
    pub fn id(&self) -> String {
        format!("{} p={}", self.spec, self.p)
    }
}

fn exp(label: Label, local: Option<bool>, global: bool) -> Expectation {
    Expectation {
        label,
        local,
        global,
    }
}

fn cyclic(n: u64, p: u64) -> Expectation {
    let label = if arith::p_part(n, p) <= p * p {
        Label::Oort
    } else {
        Label::NecessaryOnly
    };
    exp(label, Some(true), true)
}

fn dihedral(order: u64, p: u64) -> Expectation {
    let n = order / 2;
    if p == 2 {
        let local = n.is_power_of_two().then_some(true);
        let label = if order == 4 {
            Label::Oort
        } else {
            Label::NecessaryOnly
        };
        return exp(label, local, true);
    }
    let local = (n > 1 && arith::p_power_exponent(n, p).is_some()).then_some(true);
    let label = if !n.is_multiple_of(p) || n == p {
        Label::Oort
    } else {
        Label::NecessaryOnly
    };
    exp(label, local, true)
}

/// `SD` and `Q` families.
fn quaternion_like(order: u64, p: u64, quaternion: bool) -> Expectation {
    if p != 2 {
        return exp(Label::Oort, None, true);
    }
    if quaternion && order == 8 {
        exp(Label::NotLocalOort, Some(false), false)
    } else {
        exp(Label::NotOort, Some(true), false)
    }
}

fn elementary_abelian(q: u64, rank: u32, p: u64) -> Expectation {
    if q != p {
        exp(Label::Oort, None, true)
    } else if p != 2 {
        exp(Label::NotLocalOort, Some(false), false)
    } else if rank == 2 {
        exp(Label::Oort, Some(true), true)
    } else {
        exp(Label::NotOort, Some(false), false)
    }
}

fn named(spec: &FamilySpec, p: u64) -> Expectation {
    let order = spec.order().expect("named groups have fixed orders");
    if !order.is_multiple_of(p) {
        return exp(Label::Oort, None, true);
    }
    match (spec, p) {
        (FamilySpec::A4, 2) => exp(Label::Oort, Some(true), true),
        (FamilySpec::SL23, 2) => exp(Label::NotLocalOort, Some(false), false),
        _ => exp(Label::NecessaryOnly, None, true),
    }
}

const NOT_LOCAL: Expectation = Expectation {
    label: Label::NotLocalOort,
    local: Some(false),
    global: false,
};
const OPEN: Expectation = Expectation {
    label: Label::NecessaryOnly,
    local: None,
    global: true,
};
const CYCLIC_OORT: Expectation = Expectation {
    label: Label::Oort,
    local: Some(true),
    global: true,
};
const LOCAL_PASS: Expectation = Expectation {
    label: Label::NecessaryOnly,
    local: Some(true),
    global: true,
};
const NOT_OORT_ONLY: Expectation = Expectation {
    label: Label::NotOort,
    local: None,
    global: false,
};

/// Hand-checked products and semidirect products.
const SMOKE_EXTRAS: &[(&str, u64, Expectation)] = &[
    ("prod(C:4,C:2)", 2, NOT_LOCAL),
    ("prod(C:4,C:4)", 2, NOT_LOCAL),
    ("prod(C:8,C:2)", 2, NOT_LOCAL),
    ("prod(D:8,C:2)", 2, NOT_LOCAL),
    ("prod(Q:8,C:3)", 2, NOT_LOCAL),
    ("prod(Q:8,C:3)", 3, OPEN),
    ("prod(D:8,C:3)", 2, NOT_LOCAL),
    ("prod(D:8,C:3)", 3, OPEN),
    ("prod(SD:16,C:3)", 2, NOT_LOCAL),
    ("prod(Q:16,C:3)", 2, NOT_LOCAL),
    ("prod(D:16,C:3)", 3, OPEN),
    ("prod(A4,C:3)", 2, NOT_OORT_ONLY),
    ("prod(A4,C:2)", 3, OPEN),
    ("prod(S4,C:2)", 3, OPEN),
    ("prod(EA:2^2,C:5)", 2, NOT_LOCAL),
    ("prod(EA:2^2,C:3)", 3, OPEN),
    ("prod(C:9,C:3)", 3, NOT_LOCAL),
    ("prod(EA:3^2,C:2)", 3, NOT_LOCAL),
    ("prod(D:6,C:2)", 2, OPEN),
    ("prod(D:6,C:2)", 3, OPEN),
    ("prod(D:6,C:3)", 3, NOT_LOCAL),
    ("prod(D:6,C:7)", 3, NOT_LOCAL),
    ("prod(D:18,C:3)", 3, NOT_LOCAL),
    ("prod(D:10,C:3)", 3, OPEN),
    ("prod(D:10,C:3)", 5, NOT_LOCAL),
    ("prod(D:10,C:2)", 5, OPEN),
    ("prod(C:3,C:4)", 3, CYCLIC_OORT),
    ("prod(C:5,C:4)", 5, CYCLIC_OORT),
    ("prod(C:9,C:2)", 3, CYCLIC_OORT),
    ("sd(C:9,4,inv)", 3, NOT_LOCAL),
    ("sd(C:3,8,inv)", 3, NOT_LOCAL),
    ("sd(C:3,6,inv)", 3, NOT_LOCAL),
    ("sd(C:5,8,inv)", 5, NOT_LOCAL),
    // D18 built as a semidirect product.
    ("sd(C:9,2,inv)", 3, LOCAL_PASS),
];

const FULL_EXTRAS: &[(&str, u64, Expectation)] = &[
    ("prod(D:18,C:5)", 3, NOT_LOCAL),
    ("prod(D:54,C:5)", 3, NOT_LOCAL),
    ("prod(D:18,C:7)", 3, NOT_LOCAL),
    ("prod(D:6,C:11)", 3, NOT_LOCAL),
    ("prod(D:6,C:13)", 3, NOT_LOCAL),
    ("prod(D:50,C:3)", 5, NOT_LOCAL),
    ("prod(D:10,C:7)", 5, NOT_LOCAL),
    ("prod(D:10,C:5)", 5, NOT_LOCAL),
    ("prod(C:27,C:3)", 3, NOT_LOCAL),
    ("prod(C:25,C:5)", 5, NOT_LOCAL),
    ("prod(C:9,C:9)", 3, NOT_LOCAL),
    ("prod(C:9,C:10)", 3, CYCLIC_OORT),
    ("prod(C:25,C:4)", 5, CYCLIC_OORT),
    ("prod(C:27,C:4)", 3, LOCAL_PASS),
    ("prod(C:125,C:2)", 5, LOCAL_PASS),
    ("prod(EA:5^2,C:3)", 5, NOT_LOCAL),
    ("prod(EA:3^2,C:4)", 3, NOT_LOCAL),
    ("sd(C:27,4,inv)", 3, NOT_LOCAL),
    ("sd(C:9,8,inv)", 3, NOT_LOCAL),
    ("sd(C:25,4,inv)", 5, NOT_LOCAL),
    ("sd(C:5,12,inv)", 5, NOT_LOCAL),
    ("sd(C:7,6,inv)", 7, NOT_LOCAL),
    ("prod(C:16,C:2)", 2, NOT_LOCAL),
    ("prod(C:8,C:4)", 2, NOT_LOCAL),
    ("prod(A4,C:4)", 2, NOT_LOCAL),
    ("prod(D:16,C:5)", 2, NOT_LOCAL),
    ("prod(Q:32,C:3)", 2, NOT_LOCAL),
    ("prod(SD:32,C:3)", 2, NOT_LOCAL),
    ("prod(Q:8,C:2)", 2, NOT_LOCAL),
    ("prod(D:8,C:7)", 7, OPEN),
    ("prod(SL23,C:5)", 2, NOT_LOCAL),
    ("prod(A5,C:2)", 5, OPEN),
];

/// Fixture parameters beyond the defaults, per prime.
fn fixture_params(p: u64, profile: Profile) -> Vec<(u8, Option<u64>)> {
    let mut out: Vec<(u8, Option<u64>)> = match p {
        2 => (1..=7).map(|t| (t, None)).chain([(4, Some(3))]).collect(),
        _ => (1..=5).map(|t| (t, None)).collect(),
    };
    if profile == Profile::Full {
        let extra: &[(u8, u64)] = match p {
            2 => &[
                (1, 5),
                (1, 9),
                (1, 15),
                (1, 31),
                (5, 5),
                (5, 7),
                (5, 11),
                (6, 3),
                (6, 7),
            ],
            3 => &[(2, 8), (2, 13), (4, 3), (4, 7), (4, 11), (4, 13)],
            5 => &[
                (2, 3),
                (2, 6),
                (2, 8),
                (2, 12),
                (2, 24),
                (4, 5),
                (4, 7),
                (4, 11),
                (4, 13),
            ],
            7 => &[(2, 6), (4, 3), (4, 7)],
            _ => &[],
        };
        out.extend(extra.iter().map(|&(t, x)| (t, Some(x))));
    }
    out
}

/// The deterministic labelled corpus for `profile`.
pub fn corpus(profile: Profile) -> Vec<CorpusEntry> {
    let bound = profile.order_bound();
    let primes = profile.primes();
    let mut entries = Vec::new();
    let mut seen: HashSet<(String, u64)> = HashSet::new();
    let mut push = |spec: FamilySpec, p: u64, expect: Expectation| {
        if spec.order().is_ok_and(|o| o <= bound) && seen.insert((spec.to_string(), p)) {
            entries.push(CorpusEntry { spec, p, expect });
        }
    };

    let (max_cyclic, max_dihedral, max_two_group) = match profile {
        Profile::Smoke => (64, 64, 64),
        Profile::Full => (64, 128, 64),
    };
    for &p in primes {
        for n in 1..=max_cyclic {
            push(FamilySpec::Cyclic(n), p, cyclic(n, p));
        }
        for order in (4..=max_dihedral).step_by(2) {
            push(FamilySpec::Dihedral(order), p, dihedral(order, p));
        }
        let mut a = 8;
        while a <= max_two_group {
            if a >= 16 {
                push(FamilySpec::SemiDihedral(a), p, quaternion_like(a, p, false));
            }
            push(
                FamilySpec::GeneralizedQuaternion(a),
                p,
                quaternion_like(a, p, true),
            );
            a *= 2;
        }
        let ea: &[(u64, u32)] = match profile {
            Profile::Smoke => &[
                (2, 2),
                (2, 3),
                (2, 4),
                (2, 5),
                (2, 6),
                (3, 2),
                (3, 3),
                (5, 2),
                (7, 2),
            ],
            Profile::Full => &[
                (2, 2),
                (2, 3),
                (2, 4),
                (2, 5),
                (2, 6),
                (3, 2),
                (3, 3),
                (3, 4),
                (5, 2),
                (5, 3),
                (7, 2),
                (11, 2),
            ],
        };
        for &(q, rank) in ea {
            push(
                FamilySpec::ElementaryAbelian { p: q, rank },
                p,
                elementary_abelian(q, rank, p),
            );
        }
        for spec in [
            FamilySpec::A4,
            FamilySpec::S4,
            FamilySpec::A5,
            FamilySpec::SL23,
        ] {
            let e = named(&spec, p);
            push(spec, p, e);
        }
        for (t, x) in fixture_params(p, profile) {
            if fixture_spec(p, t, x).is_ok() {
                push(
                    FamilySpec::ForbiddenFixture {
                        p,
                        type_index: t,
                        param: x,
                    },
                    p,
                    NOT_LOCAL,
                );
            }
        }
    }
    if profile == Profile::Full {
        // Dihedral groups D_{2p^n} beyond the general degree range.
        for (order, p) in [(162, 3), (250, 5), (486, 3), (98, 7), (686, 7)] {
            push(FamilySpec::Dihedral(order), p, dihedral(order, p));
        }
    }
    let extras: Vec<&(&str, u64, Expectation)> = match profile {
        Profile::Smoke => SMOKE_EXTRAS.iter().collect(),
        Profile::Full => SMOKE_EXTRAS.iter().chain(FULL_EXTRAS).collect(),
    };
    for &(text, p, e) in extras {
        let spec: FamilySpec = text.parse().expect("corpus specs parse");
        push(spec, p, e);
    }
    entries
}
