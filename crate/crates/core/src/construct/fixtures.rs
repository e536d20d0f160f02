//! One explicit group for each forbidden quotient type.
//!
//! Odd `p` (the optional parameter `x` is noted where it applies):
//!
//! | type | group |
//! |---|---|
//! | 1 | `C_p x C_p` |
//! | 2 | `C_p^r . C_m`, `C_m` acting as multiplication by an element of order `m` in `F_{p^r}`, `r` the order of `p` mod `m`; `x = m` |
//! | 3 | `C_p^2 . C_2` by inversion |
//! | 4 | `D_2p x C_l`; `x = l` |
//! | 5 | `C_p . C_4`, the generator inverting |
//!
//! `p = 2`:
//!
//! | type | group |
//! |---|---|
//! | 1 | `C_2^r . C_m`, `m` odd and at least 5, acting through `F_{2^r}`; `x = m` |
//! | 2 | `C_2^4 . C_3`, two copies of the `A4` action |
//! | 3 | `C_4^2 . C_3` with `a -> b -> a^-1 b^-1` |
//! | 4 | `C_2^3` (`x = 1`) or `A4 x C_2` (`x = 3`) |
//! | 5 | `C_2^2 x C_l`; `x = l` |
//! | 6 | `C_2^2 . C_3l` acting through its order 3 quotient; `x = l` |
//! | 7 | `C_4 x C_2` |

use super::field::{order_mod, FiniteField};
use super::{bad, build, ActionSpec, FamilySpec};
use crate::arith;
use crate::error::GroupError;
use crate::group::FiniteGroup;

/// Builds the fixture for `(p, type_index)`.
pub fn forbidden_fixture(
    p: u64,
    type_index: u8,
    param: Option<u64>,
) -> Result<FiniteGroup, GroupError> {
    build(&fixture_spec(p, type_index, param)?)
}

/// The explicit family spec behind a fixture.
pub fn fixture_spec(p: u64, type_index: u8, param: Option<u64>) -> Result<FamilySpec, GroupError> {
    if !arith::is_prime(p) {
        return Err(bad(format!("{p} is not prime")));
    }
    let no_param = |spec: FamilySpec| match param {
        None => Ok(spec),
        Some(_) => Err(bad(format!(
            "fixture ({p}, {type_index}) takes no parameter"
        ))),
    };
    let odd_prime = |l: u64, what: &str| {
        if l > 2 && arith::is_prime(l) {
            Ok(l)
        } else {
            Err(bad(format!("{what} = {l} must be an odd prime")))
        }
    };
    let ea = |p: u64, rank: u32| FamilySpec::ElementaryAbelian { p, rank };
    if p != 2 {
        return match type_index {
            1 => no_param(ea(p, 2)),
            2 => {
                let m = param
                    .unwrap_or_else(|| (3..p).find(|m| (p - 1).is_multiple_of(*m)).unwrap_or(4));
                if m < 3 || m.is_multiple_of(p) {
                    return Err(bad(format!("type 2 needs m >= 3 prime to p, got {m}")));
                }
                field_action(p, m)
            }
            3 => no_param(FamilySpec::semidirect(ea(p, 2), 2, ActionSpec::Inversion)),
            4 => {
                let l = param.unwrap_or(if p == 5 { 3 } else { 5 });
                let l = odd_prime(l, "l")?;
                Ok(FamilySpec::prod(
                    FamilySpec::Dihedral(2 * p),
                    FamilySpec::Cyclic(l),
                ))
            }
            5 => no_param(FamilySpec::semidirect(
                FamilySpec::Cyclic(p),
                4,
                ActionSpec::Inversion,
            )),
            _ => Err(bad(format!("odd p has types 1-5, got {type_index}"))),
        };
    }
    match type_index {
        1 => {
            let m = param.unwrap_or(7);
            if m < 5 || m.is_multiple_of(2) {
                return Err(bad(format!("type 1 needs odd m >= 5, got {m}")));
            }
            field_action(2, m)
        }
        2 => {
            // e1 -> e2 -> e1 e2 on each of two Klein blocks.
            let images = ea_vectors(
                2,
                4,
                &[
                    vec![0, 1, 0, 0],
                    vec![1, 1, 0, 0],
                    vec![0, 0, 0, 1],
                    vec![0, 0, 1, 1],
                ],
            )?;
            no_param(FamilySpec::semidirect(
                ea(2, 4),
                3,
                ActionSpec::Images(images),
            ))
        }
        3 => {
            let base = FamilySpec::prod(FamilySpec::Cyclic(4), FamilySpec::Cyclic(4));
            let bg = build(&base)?;
            let gens = bg.generator_indices();
            let (a, b) = (gens[0], gens[1]);
            let images = vec![b, bg.inv(bg.mul(a, b))];
            no_param(FamilySpec::semidirect(base, 3, ActionSpec::Images(images)))
        }
        4 => match param.unwrap_or(1) {
            1 => Ok(ea(2, 3)),
            3 => Ok(FamilySpec::prod(FamilySpec::A4, FamilySpec::Cyclic(2))),
            m => Err(bad(format!("type 4 needs m in {{1, 3}}, got {m}"))),
        },
        5 => {
            let l = odd_prime(param.unwrap_or(3), "l")?;
            Ok(FamilySpec::prod(ea(2, 2), FamilySpec::Cyclic(l)))
        }
        6 => {
            let l = odd_prime(param.unwrap_or(5), "l")?;
            let images = ea_vectors(2, 2, &[vec![0, 1], vec![1, 1]])?;
            Ok(FamilySpec::semidirect(
                ea(2, 2),
                3 * l,
                ActionSpec::Images(images),
            ))
        }
        7 => no_param(FamilySpec::prod(
            FamilySpec::Cyclic(4),
            FamilySpec::Cyclic(2),
        )),
        _ => Err(bad(format!("p = 2 has types 1-7, got {type_index}"))),
    }
}

/// `C_p^r . C_m` with the generator multiplying `F_{p^r}` by an element of
/// order `m`, where `r` is minimal.
fn field_action(p: u64, m: u64) -> Result<FamilySpec, GroupError> {
    let r = order_mod(p, m).ok_or_else(|| bad(format!("m = {m} is not prime to {p}")))?;
    if p.checked_pow(r).is_none_or(|q| q > 4096) {
        return Err(bad(format!("F_{p}^{r} is too large for m = {m}")));
    }
    let field = FiniteField::new(p, r)?;
    let zeta = field
        .element_of_order(m)
        .expect("order of p mod m divides the unit group order");
    let images = ea_vectors(p, r, &field.multiplication_images(&zeta))?;
    Ok(FamilySpec::semidirect(
        FamilySpec::ElementaryAbelian { p, rank: r },
        m,
        ActionSpec::Images(images),
    ))
}

/// Element indices in the built `EA:p^r` of the given coordinate vectors
/// over its generators.
fn ea_vectors(p: u64, r: u32, vectors: &[Vec<u64>]) -> Result<Vec<usize>, GroupError> {
    let g = build(&FamilySpec::ElementaryAbelian { p, rank: r })?;
    let gens = g.generator_indices().to_vec();
    Ok(vectors
        .iter()
        .map(|v| {
            v.iter()
                .zip(&gens)
                .fold(0, |acc, (&c, &s)| g.mul(acc, g.pow(s, c)))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_orders() {
        let cases = [
            (3, 1, None, 9),
            (3, 2, None, 36),
            (3, 3, None, 18),
            (3, 4, None, 30),
            (3, 5, None, 12),
            (5, 2, None, 20),
            (5, 2, Some(3), 75),
            (5, 4, None, 30),
            (7, 2, None, 21),
            (3, 4, Some(3), 18),
            (2, 1, None, 56),
            (2, 1, Some(5), 80),
            (2, 2, None, 48),
            (2, 3, None, 48),
            (2, 4, None, 8),
            (2, 4, Some(3), 24),
            (2, 5, None, 12),
            (2, 6, None, 60),
            (2, 7, None, 8),
        ];
        for (p, t, x, order) in cases {
            let g = forbidden_fixture(p, t, x).unwrap();
            assert_eq!(g.order(), order, "ff({p},{t},{x:?})");
        }
    }

    #[test]
    fn bad_fixture_parameters() {
        for (p, t, x) in [
            (4, 1, None),
            (3, 6, None),
            (2, 8, None),
            (3, 2, Some(2)),
            (3, 2, Some(6)),
            (3, 4, Some(4)),
            (2, 1, Some(3)),
            (2, 4, Some(2)),
            (2, 6, Some(9)),
            (3, 1, Some(2)),
        ] {
            assert!(fixture_spec(p, t, x).is_err(), "ff({p},{t},{x:?})");
        }
    }

    #[test]
    fn specs_are_explicit() {
        let spec = fixture_spec(2, 3, None).unwrap();
        assert_eq!(spec.to_string(), format!("{spec}"));
        assert!(!spec.to_string().contains("ff("));
    }
}
