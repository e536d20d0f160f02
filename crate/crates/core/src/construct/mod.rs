//! Permutation realizations of the named group families, the forbidden-type
//! fixtures, and the labelled corpus.
//!
//! Family specs have a compact text form:
//!
//! | text | group |
//! |---|---|
//! | `C:n` | cyclic of order `n` |
//! | `D:2n` | dihedral of order `2n` (`D:4` is the Klein four group) |
//! | `SD:2^a`, `Q:2^a` | semidihedral / generalized quaternion (`SD:16` also accepted) |
//! | `EA:p^r` | elementary abelian of order `p^r` |
//! | `A4`, `S4`, `A5`, `SL23` | the named small groups |
//! | `prod(a,b)` | direct product |
//! | `sd(P,m,inv)` / `sd(P,m,[i,j,..])` | `P` extended by `C_m`, the generator acting by inversion or sending `P`'s generators to the listed element indices of `P` |
//! | `ff(p,t)` / `ff(p,t,x)` | forbidden-type fixture `t` for the prime `p` |

mod corpus;
mod field;
mod fixtures;
mod parse;

pub use corpus::{corpus, CorpusEntry, Expectation, Label, Profile};
pub use field::FiniteField;
pub use fixtures::{fixture_spec, forbidden_fixture};

use std::fmt;

use crate::arith;
use crate::caps::Caps;
use crate::error::GroupError;
use crate::group::FiniteGroup;
use crate::perm::Permutation;
use crate::structure::IsoType;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ActionSpec {
    Inversion,
    /// Images of the base group's generators, as indices into its element table.
    Images(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Cyclic(u64),
    /// Dihedral group of the given order.
    Dihedral(u64),
    SemiDihedral(u64),
    GeneralizedQuaternion(u64),
    ElementaryAbelian {
        p: u64,
        rank: u32,
    },
    DirectProduct(Box<FamilySpec>, Box<FamilySpec>),
    SemiDirect {
        base: Box<FamilySpec>,
        m: u64,
        action: ActionSpec,
    },
    A4,
    S4,
    A5,
    SL23,
    ForbiddenFixture {
        p: u64,
        type_index: u8,
        param: Option<u64>,
    },
}

impl FamilySpec {
    pub fn prod(a: FamilySpec, b: FamilySpec) -> Self {
        FamilySpec::DirectProduct(Box::new(a), Box::new(b))
    }

    pub fn semidirect(base: FamilySpec, m: u64, action: ActionSpec) -> Self {
        FamilySpec::SemiDirect {
            base: Box::new(base),
            m,
            action,
        }
    }

    /// Group order implied by the parameters.
    pub fn order(&self) -> Result<u64, GroupError> {
        Ok(match self {
            FamilySpec::Cyclic(n)
            | FamilySpec::Dihedral(n)
            | FamilySpec::SemiDihedral(n)
            | FamilySpec::GeneralizedQuaternion(n) => *n,
            FamilySpec::ElementaryAbelian { p, rank } => p.pow(*rank),
            FamilySpec::DirectProduct(a, b) => a.order()? * b.order()?,
            FamilySpec::SemiDirect { base, m, .. } => base.order()? * m,
            FamilySpec::A4 => 12,
            FamilySpec::S4 | FamilySpec::SL23 => 24,
            FamilySpec::A5 => 60,
            FamilySpec::ForbiddenFixture {
                p,
                type_index,
                param,
            } => fixture_spec(*p, *type_index, *param)?.order()?,
        })
    }

    /// The recognition tag this family must produce, where one exists.
    pub fn expected_tag(&self) -> Option<IsoType> {
        Some(match *self {
            FamilySpec::Cyclic(n) => IsoType::Cyclic(n),
            FamilySpec::Dihedral(2) => IsoType::Cyclic(2),
            FamilySpec::Dihedral(n) => IsoType::Dihedral(n),
            FamilySpec::SemiDihedral(n) => IsoType::SemiDihedral(n),
            FamilySpec::GeneralizedQuaternion(n) => IsoType::GeneralizedQuaternion(n),
            FamilySpec::ElementaryAbelian { p, rank: 1 } => IsoType::Cyclic(p),
            FamilySpec::ElementaryAbelian { p: 2, rank: 2 } => IsoType::Dihedral(4),
            FamilySpec::ElementaryAbelian { p, rank } => IsoType::ElementaryAbelian(p, rank),
            FamilySpec::A4 => IsoType::A4,
            FamilySpec::S4 => IsoType::S4,
            FamilySpec::A5 => IsoType::A5,
            FamilySpec::SL23 => IsoType::SL23,
            _ => return None,
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cyclic(n) => write!(f, "C:{n}"),
            FamilySpec::Dihedral(n) => write!(f, "D:{n}"),
            FamilySpec::SemiDihedral(n) => write!(f, "SD:{n}"),
            FamilySpec::GeneralizedQuaternion(n) => write!(f, "Q:{n}"),
            FamilySpec::ElementaryAbelian { p, rank } => write!(f, "EA:{p}^{rank}"),
            FamilySpec::DirectProduct(a, b) => write!(f, "prod({a},{b})"),
            FamilySpec::SemiDirect { base, m, action } => match action {
                ActionSpec::Inversion => write!(f, "sd({base},{m},inv)"),
                ActionSpec::Images(v) => {
                    let list: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                    write!(f, "sd({base},{m},[{}])", list.join(","))
                }
            },
            FamilySpec::A4 => f.write_str("A4"),
            FamilySpec::S4 => f.write_str("S4"),
            FamilySpec::A5 => f.write_str("A5"),
            FamilySpec::SL23 => f.write_str("SL23"),
            FamilySpec::ForbiddenFixture {
                p,
                type_index,
                param,
            } => match param {
                Some(x) => write!(f, "ff({p},{type_index},{x})"),
                None => write!(f, "ff({p},{type_index})"),
            },
        }
    }
}

fn bad(msg: impl Into<String>) -> GroupError {
    GroupError::BadParameters(msg.into())
}

fn cycle_perm(degree: usize, cycles: &[Vec<usize>]) -> Permutation {
    Permutation::from_cycles(degree, cycles).expect("constructed cycles are valid")
}

/// Builds the spec with default caps.
pub fn build(spec: &FamilySpec) -> Result<FiniteGroup, GroupError> {
    build_with_caps(spec, Caps::default())
}

pub fn build_with_caps(spec: &FamilySpec, caps: Caps) -> Result<FiniteGroup, GroupError> {
    let order = spec.order()?;
    if order > caps.order as u64 {
        return Err(GroupError::CapExceeded {
            what: "order",
            limit: caps.order,
            actual: order as usize,
        });
    }
    let (degree, gens) = realize(spec, caps)?;
    // Realizations may exceed the degree cap, which only guards user input.
    let g = FiniteGroup::build(degree, &gens, caps)?;
    debug_assert_eq!(g.order() as u64, order);
    Ok(g)
}

fn realize(spec: &FamilySpec, caps: Caps) -> Result<(usize, Vec<Permutation>), GroupError> {
    Ok(match spec {
        FamilySpec::Cyclic(n) => {
            let n = *n as usize;
            if n == 0 {
                return Err(bad("cyclic order must be positive"));
            }
            if n == 1 {
                (1, vec![Permutation::identity(1)])
            } else {
                (n, vec![cycle_perm(n, &[(0..n).collect()])])
            }
        }
        FamilySpec::Dihedral(order) => {
            if *order < 2 || order % 2 != 0 {
                return Err(bad(format!(
                    "dihedral order {order} must be even and at least 2"
                )));
            }
            match order / 2 {
                1 => (2, vec![cycle_perm(2, &[vec![0, 1]])]),
                2 => (
                    4,
                    vec![
                        cycle_perm(4, &[vec![0, 1], vec![2, 3]]),
                        cycle_perm(4, &[vec![0, 2], vec![1, 3]]),
                    ],
                ),
                n => {
                    let n = n as usize;
                    let rotation = cycle_perm(n, &[(0..n).collect()]);
                    let reflection =
                        Permutation::new((0..n).map(|i| (n - i) % n).collect()).expect("bijection");
                    (n, vec![rotation, reflection])
                }
            }
        }
        FamilySpec::SemiDihedral(order) => {
            if *order < 16 || !order.is_power_of_two() {
                return Err(bad(format!(
                    "semidihedral order {order} must be 2^a with a >= 4"
                )));
            }
            metacyclic_2group(*order, false)
        }
        FamilySpec::GeneralizedQuaternion(order) => {
            if *order < 8 || !order.is_power_of_two() {
                return Err(bad(format!(
                    "quaternion order {order} must be 2^a with a >= 3"
                )));
            }
            metacyclic_2group(*order, true)
        }
        FamilySpec::ElementaryAbelian { p, rank } => {
            if !arith::is_prime(*p) || *rank == 0 {
                return Err(bad(format!(
                    "EA:{p}^{rank} needs a prime and a positive rank"
                )));
            }
            let (p, r) = (*p as usize, *rank as usize);
            let degree = p * r;
            let gens = (0..r)
                .map(|i| cycle_perm(degree, &[(i * p..(i + 1) * p).collect()]))
                .collect();
            (degree, gens)
        }
        FamilySpec::DirectProduct(a, b) => {
            let (da, ga) = realize(a, caps)?;
            let (db, gb) = realize(b, caps)?;
            let degree = da + db;
            let mut gens: Vec<Permutation> = ga.iter().map(|g| g.embed(degree, 0)).collect();
            gens.extend(gb.iter().map(|g| g.embed(degree, da)));
            (degree, gens)
        }
        FamilySpec::SemiDirect { base, m, action } => semidirect(base, *m, action, caps)?,
        FamilySpec::A4 => (
            4,
            vec![
                cycle_perm(4, &[vec![0, 1, 2]]),
                cycle_perm(4, &[vec![0, 1], vec![2, 3]]),
            ],
        ),
        FamilySpec::S4 => (
            4,
            vec![
                cycle_perm(4, &[vec![0, 1, 2, 3]]),
                cycle_perm(4, &[vec![0, 1]]),
            ],
        ),
        FamilySpec::A5 => (
            5,
            vec![
                cycle_perm(5, &[vec![0, 1, 2, 3, 4]]),
                cycle_perm(5, &[vec![0, 1, 2]]),
            ],
        ),
        FamilySpec::SL23 => sl23(),
        FamilySpec::ForbiddenFixture {
            p,
            type_index,
            param,
        } => realize(&fixture_spec(*p, *type_index, *param)?, caps)?,
    })
}

/// Right regular representation of `<x, y | x^h, y x y^-1 = x^s, y^2 = x^e>`
/// with `h = order/2`; elements `x^i y^j` are numbered `i + j*h`.
fn metacyclic_2group(order: u64, quaternion: bool) -> (usize, Vec<Permutation>) {
    let n = order as usize;
    let h = n / 2;
    let (s, e) = if quaternion {
        (h - 1, h / 2)
    } else {
        (h / 2 - 1, 0)
    };
    let mul = |a: usize, b: usize| -> usize {
        let (i1, j1) = (a % h, a / h);
        let (i2, j2) = (b % h, b / h);
        let twisted = if j1 == 1 { i2 * s } else { i2 };
        let extra = if j1 + j2 == 2 { e } else { 0 };
        (i1 + twisted + extra) % h + ((j1 + j2) % 2) * h
    };
    let regular =
        |g: usize| Permutation::new((0..n).map(|x| mul(x, g)).collect()).expect("Latin row");
    (n, vec![regular(1), regular(h)])
}

/// `SL(2,3)` acting on the 8 nonzero row vectors of `F_3^2`.
fn sl23() -> (usize, Vec<Permutation>) {
    let vectors: Vec<(u64, u64)> = (0..3)
        .flat_map(|a| (0..3).map(move |b| (a, b)))
        .filter(|&v| v != (0, 0))
        .collect();
    let act = |m: [[u64; 2]; 2]| {
        let images = vectors
            .iter()
            .map(|&(a, b)| {
                let w = (
                    (a * m[0][0] + b * m[1][0]) % 3,
                    (a * m[0][1] + b * m[1][1]) % 3,
                );
                vectors.iter().position(|&v| v == w).expect("nonzero image")
            })
            .collect();
        Permutation::new(images).expect("invertible matrix")
    };
    (8, vec![act([[1, 1], [0, 1]]), act([[0, 2], [1, 0]])])
}

/// Extends an action given on generators to a map on all elements of `base`,
/// checking that it is a well-defined automorphism.
pub(crate) fn extend_automorphism(
    base: &FiniteGroup,
    images: &[usize],
) -> Result<Vec<usize>, GroupError> {
    let gens = base.generator_indices();
    if images.len() != gens.len() {
        return Err(bad(format!(
            "action lists {} images for {} generators",
            images.len(),
            gens.len()
        )));
    }
    if let Some(&bad_idx) = images.iter().find(|&&i| i >= base.order()) {
        return Err(bad(format!("image index {bad_idx} out of range")));
    }
    let n = base.order();
    let mut alpha = vec![usize::MAX; n];
    alpha[0] = 0;
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (k, &s) in gens.iter().enumerate() {
            let y = base.mul(x, s);
            let ay = base.mul(alpha[x], images[k]);
            if alpha[y] == usize::MAX {
                alpha[y] = ay;
                queue.push(y);
            } else if alpha[y] != ay {
                return Err(bad("generator images do not define a homomorphism"));
            }
        }
    }
    let mut seen = vec![false; n];
    for &a in &alpha {
        if std::mem::replace(&mut seen[a], true) {
            return Err(bad("action is not bijective"));
        }
    }
    Ok(alpha)
}

fn map_order(alpha: &[usize]) -> u64 {
    let mut current: Vec<usize> = alpha.to_vec();
    let mut k = 1;
    while current.iter().enumerate().any(|(i, &x)| i != x) {
        current = current.iter().map(|&x| alpha[x]).collect();
        k += 1;
    }
    k
}

// The base acts on its own elements by right translation and the extra
// generator acts through the automorphism, with an m-cycle on extra points
// appended when the automorphism's order is a proper divisor of m.
fn semidirect(
    base: &FamilySpec,
    m: u64,
    action: &ActionSpec,
    caps: Caps,
) -> Result<(usize, Vec<Permutation>), GroupError> {
    if m == 0 {
        return Err(bad("semidirect factor order must be positive"));
    }
    let pg = build_with_caps(base, caps)?;
    let images: Vec<usize> = match action {
        ActionSpec::Inversion => pg.generator_indices().iter().map(|&s| pg.inv(s)).collect(),
        ActionSpec::Images(v) => v.clone(),
    };
    let alpha = extend_automorphism(&pg, &images)?;
    let d = map_order(&alpha);
    if !m.is_multiple_of(d) {
        return Err(bad(format!(
            "action has order {d}, which does not divide m = {m}"
        )));
    }
    let n = pg.order();
    let extra = if d < m { m as usize } else { 0 };
    let degree = n + extra;
    let mut gens: Vec<Permutation> = pg
        .generator_indices()
        .iter()
        .map(|&s| {
            let mut images: Vec<usize> = (0..n).map(|x| pg.mul(x, s)).collect();
            images.extend(n..degree);
            Permutation::new(images).expect("right translation")
        })
        .collect();
    let mut c_images: Vec<usize> = alpha.clone();
    c_images.extend((0..extra).map(|i| n + (i + 1) % extra.max(1)));
    gens.push(Permutation::new(c_images).expect("automorphism plus cycle"));
    Ok((degree, gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{center, recognize};

    fn g(s: &str) -> FiniteGroup {
        build(&s.parse::<FamilySpec>().unwrap()).unwrap()
    }

    #[test]
    fn build_examples() {
        let q8 = g("Q:8");
        assert_eq!(q8.order(), 8);
        assert_eq!((0..8).filter(|&x| q8.order_of(x) == 2).count(), 1);
        assert_eq!(g("sd(EA:3^2,2,inv)").order(), 18);
        let t4 = g("prod(D:6,C:5)");
        assert_eq!(t4.order(), 30);
        assert_eq!(center(&t4).order(), 5);
    }

    #[test]
    fn recognize_round_trip() {
        let mut specs = vec![];
        for n in 1..=40 {
            specs.push(FamilySpec::Cyclic(n));
        }
        for n in (2..=128).step_by(2) {
            specs.push(FamilySpec::Dihedral(n));
        }
        for a in 4..=6 {
            specs.push(FamilySpec::SemiDihedral(1 << a));
        }
        for a in 3..=6 {
            specs.push(FamilySpec::GeneralizedQuaternion(1 << a));
        }
        for (p, r) in [
            (2, 1),
            (2, 2),
            (2, 3),
            (2, 4),
            (3, 2),
            (3, 3),
            (5, 2),
            (7, 2),
        ] {
            specs.push(FamilySpec::ElementaryAbelian { p, rank: r });
        }
        specs.extend([
            FamilySpec::A4,
            FamilySpec::S4,
            FamilySpec::A5,
            FamilySpec::SL23,
        ]);
        for spec in specs {
            let group = build(&spec).unwrap();
            assert_eq!(group.order() as u64, spec.order().unwrap(), "{spec}");
            assert_eq!(Some(recognize(&group)), spec.expected_tag(), "{spec}");
        }
    }

    #[test]
    fn deterministic() {
        assert_eq!(g("SD:32").elements(), g("SD:32").elements());
        assert_eq!(g("ff(2,6)").elements(), g("ff(2,6)").elements());
    }

    #[test]
    fn products_and_semidirects_have_expected_orders() {
        assert_eq!(g("prod(Q:8,S4)").order(), 192);
        assert_eq!(g("sd(C:9,4,inv)").order(), 36);
        assert_eq!(g("ff(7,2)").order(), 21);
        assert_eq!(g("ff(5,2)").order(), 20);
        assert_eq!(g("ff(2,6,7)").order(), 84);
    }

    #[test]
    fn rejects_bad_parameters() {
        for s in [
            "D:7",
            "SD:8",
            "Q:4",
            "EA:4^2",
            "C:0",
            "sd(C:5,3,inv)",
            "sd(C:4,2,[0])",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert!(
                matches!(build(&spec), Err(GroupError::BadParameters(_))),
                "{s}"
            );
        }
        let spec: FamilySpec = "C:5000".parse().unwrap();
        assert!(matches!(build(&spec), Err(GroupError::CapExceeded { .. })));
    }
}
