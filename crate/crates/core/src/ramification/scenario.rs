//! End-to-end obstruction computations for the forbidden types, reporting
//! every intermediate quantity.

use std::fmt;

use serde::Serialize;

use super::cover::{artin_schreier_genus, tame_rh_genus, wild_rh_genus, BranchPoint, CoverSpec};
use super::filtration::{
    different_exponent, enumerate_filtrations, format_rational, hasse_arf_check,
    hasse_arf_counts_hold, lower_to_upper, upper_jumps_integral, RamificationFiltration,
};
use super::obstruction::{
    branch_pullback_count, char0_even_required, char0_parity_obstruction_a4ext,
    dihedral_lift_bound, odd_p_parity_equation,
};
use crate::arith;
use crate::construct::{build, FamilySpec};
use crate::error::RamificationError;

pub const SCENARIOS: [&str; 5] = [
    "odd_type4_lp",
    "odd_type45",
    "even_type34",
    "even_type56",
    "even_type7",
];

/// Optional scenario parameters; unset ones take per-scenario defaults.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ScenarioParams {
    pub p: Option<u64>,
    pub l: Option<u64>,
    pub n: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportEntry {
    pub key: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScenarioReport {
    pub name: String,
    pub params: Vec<ReportEntry>,
    /// Intermediate quantities in the order they were computed.
    pub values: Vec<ReportEntry>,
    pub obstruction: bool,
}

impl ScenarioReport {
    fn new(name: &str) -> Self {
        ScenarioReport {
            name: name.to_string(),
            params: Vec::new(),
            values: Vec::new(),
            obstruction: false,
        }
    }

    fn param(&mut self, key: &str, value: impl ToString) {
        self.params.push(ReportEntry {
            key: key.to_string(),
            value: value.to_string(),
        });
    }

    fn put(&mut self, key: &str, value: impl ToString) {
        self.values.push(ReportEntry {
            key: key.to_string(),
            value: value.to_string(),
        });
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values
            .iter()
            .chain(&self.params)
            .find(|e| e.key == key)
            .map(|e| e.value.as_str())
    }
}

impl fmt::Display for ScenarioReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "scenario {}", self.name)?;
        for e in &self.params {
            writeln!(f, "  param {} = {}", e.key, e.value)?;
        }
        for e in &self.values {
            writeln!(f, "  {} = {}", e.key, e.value)?;
        }
        write!(f, "  obstruction = {}", self.obstruction)
    }
}

fn bad(msg: impl Into<String>) -> RamificationError {
    RamificationError::BadParameters(msg.into())
}

fn parity(n: u64) -> &'static str {
    if n.is_multiple_of(2) {
        "even"
    } else {
        "odd"
    }
}

fn list<T: ToString>(xs: &[T]) -> String {
    let v: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("[{}]", v.join(","))
}

pub fn scenario(name: &str, params: &ScenarioParams) -> Result<ScenarioReport, RamificationError> {
    match name {
        "odd_type4_lp" => odd_type4_lp(params.p.unwrap_or(3)),
        "odd_type45" => odd_type45(params.p.unwrap_or(3), params.l.unwrap_or(5)),
        "even_type34" => even_type34(params.n.unwrap_or(2)),
        "even_type56" => even_type56(params.l.unwrap_or(5)),
        "even_type7" => even_type7(),
        other => Err(RamificationError::UnknownScenario(other.to_string())),
    }
}

/// `D_2p x C_p`: the curve `w^p - w = -2u^(p+1) + 2u^2` over the tame double
/// cover `t^2 = x`.
fn odd_type4_lp(p: u64) -> Result<ScenarioReport, RamificationError> {
    if p == 2 || !arith::is_prime(p) {
        return Err(bad(format!("p must be an odd prime, got {p}")));
    }
    let mut r = ScenarioReport::new("odd_type4_lp");
    r.param("p", p);
    let g_y = artin_schreier_genus(p, p + 1)?;
    r.put("char_p_genus", g_y);
    r.put("char_p_genus_formula", p * (p - 1) / 2);
    let g_t = tame_rh_genus(&CoverSpec::tame(2, 0, &[2, 2])?)?;
    r.put("t_genus", g_t);
    r.put("h_order", p * p);
    r.put(
        "equation",
        format!("2(p+1) = (n-1)p, i.e. {} = (n-1)*{p}", 2 * (p + 1)),
    );
    let symbolic = !(2 * (p + 1)).is_multiple_of(p);
    r.put("p_divides_lhs", !symbolic);
    let n_max = 64;
    let unsolvable = odd_p_parity_equation(p, n_max)?;
    r.put("n_searched_up_to", n_max);
    r.put("unsolvable", unsolvable);
    r.obstruction = g_y == p * (p - 1) / 2 && g_t == 0 && symbolic && unsolvable;
    Ok(r)
}

/// Type 4 with `l != p` (odd `l`) and type 5 (`l = 2`): the curve
/// `z^p - z = y^l` against the characteristic-0 bound.
fn odd_type45(p: u64, l: u64) -> Result<ScenarioReport, RamificationError> {
    if p == 2 || !arith::is_prime(p) {
        return Err(bad(format!("p must be an odd prime, got {p}")));
    }
    if l == p || !arith::is_prime(l) {
        return Err(bad(format!("l must be a prime different from p, got {l}")));
    }
    let mut r = ScenarioReport::new("odd_type45");
    r.param("p", p);
    r.param("l", l);
    r.put("type", if l == 2 { 5 } else { 4 });
    let g_w = artin_schreier_genus(p, l)?;
    r.put("g_w", g_w);
    let z_genus = tame_rh_genus(&CoverSpec::tame(2, 0, &[2, 2])?)?;
    r.put("g_z", z_genus);
    let bound = dihedral_lift_bound(p, l)?;
    r.put("char0_branch_points", 2 * p);
    r.put("char0_lower_bound", bound.char0_lower_bound);
    r.put("char0_bound_formula", (p - 1) * (l - 1));
    r.put("strict_inequality", bound.char0_lower_bound > g_w);
    r.obstruction = bound.contradiction && bound.char_p_genus == g_w;
    Ok(r)
}

/// Extensions of `A4` by `N` of order 2 or 4 over the tower `z^4 - z = x`,
/// `t = x^3`.
fn even_type34(n: u64) -> Result<ScenarioReport, RamificationError> {
    if n != 2 && n != 4 {
        return Err(bad(format!("|N| must be 2 or 4, got {n}")));
    }
    let mut r = ScenarioReport::new("even_type34");
    r.param("n", n);

    let klein = RamificationFiltration::new(2, &[4, 4])?;
    let jumps = lower_to_upper(&klein);
    r.put("p_h_filtration", &klein);
    r.put("p_h_different", different_exponent(&klein));
    r.put(
        "p_h_upper_jumps",
        list(
            &jumps
                .iter()
                .map(|j| format_rational(&j.upper))
                .collect::<Vec<_>>(),
        ),
    );
    let z = CoverSpec::new(
        12,
        0,
        vec![
            BranchPoint::wild(RamificationFiltration::new(2, &[12, 4])?),
            BranchPoint::tame(3),
        ],
    )?;
    let g_z = wild_rh_genus(&z)?;
    r.put("g_z", g_z);
    let trivial_above_1 = jumps
        .last()
        .is_some_and(|j| j.upper == super::rational(1, 1));

    // P = P_0 = P_1 of order 4|N|, N = P_2 = ... = P_{1+4a}.
    let p_order = 4 * n;
    let mut g_s_all_even = true;
    let mut hasse_arf_ok = true;
    let mut genera = Vec::new();
    for a in 0..=3u64 {
        let mut orders = vec![p_order, p_order];
        orders.extend(std::iter::repeat_n(n, 4 * a as usize));
        let pf = RamificationFiltration::new(2, &orders)?;
        hasse_arf_ok &= hasse_arf_check(&pf, n)?;
        // Quotient rule: past upper index 1 the group lies in N.
        hasse_arf_ok &= lower_to_upper(&pf)
            .iter()
            .all(|j| j.upper < super::rational(1, 1) || n.is_multiple_of(j.order_after));
        let nf = RamificationFiltration::new(2, &vec![n; 2 + 4 * a as usize])?;
        let s = CoverSpec::new(n, g_z, vec![BranchPoint::wild(nf)])?;
        let g_s = wild_rh_genus(&s)?;
        let two_g_minus_2 = 2 * g_s as i64 - 2;
        g_s_all_even &= g_s % 2 == 0 && two_g_minus_2.rem_euclid(4) == 2;
        genera.push(g_s);
    }
    // A count of 2 (mod 4) at N violates Hasse-Arf.
    let broken = {
        let mut orders = vec![p_order, p_order];
        orders.extend([n, n]);
        !hasse_arf_check(&RamificationFiltration::new(2, &orders)?, n)?
    };
    r.put("g_s_for_a_0_to_3", list(&genera));
    r.put("g_s_parity", if g_s_all_even { "even" } else { "mixed" });
    r.put("hasse_arf_pattern_holds", hasse_arf_ok && broken);

    let par = char0_parity_obstruction_a4ext(n)?;
    r.put("g_order", par.group_order);
    r.put("element_orders", list(&par.element_orders));
    r.put("quotients_divisible_by_4", par.all_quotients_divisible_by_4);
    r.put("branch_vectors_checked", par.branch_vectors_checked);
    r.put(
        "g_s0_parity",
        if par.char0_genus_odd {
            "odd"
        } else {
            "unknown"
        },
    );
    r.obstruction = g_z == 0
        && trivial_above_1
        && hasse_arf_ok
        && broken
        && g_s_all_even
        && par.char0_genus_odd;
    Ok(r)
}

/// Types 5 and 6: the `C_2^2 x C_l` subcover `V -> X`, with the branch set
/// of `V -> Z` pulled back along `z^4 - z = x`.
fn even_type56(l: u64) -> Result<ScenarioReport, RamificationError> {
    if l == 2 || !arith::is_prime(l) {
        return Err(bad(format!("l must be an odd prime, got {l}")));
    }
    let mut r = ScenarioReport::new("even_type56");
    r.param("l", l);
    // Over x = 0 the fiber z^4 = z is four distinct points; x = oo is
    // totally ramified.
    let fibers = [4, 1];
    let b = branch_pullback_count(4, &fibers)?;
    r.put("fibers", list(&fibers));
    r.put("branch_count", b);
    let klein = build(
        &"EA:2^2"
            .parse::<FamilySpec>()
            .map_err(|e| bad(e.to_string()))?,
    )?;
    let even_required = char0_even_required(&klein);
    r.put("char0_count_must_be_even", even_required);
    let g_v = tame_rh_genus(&CoverSpec::tame(l, 0, &vec![l; b as usize])?)?;
    r.put("g_v", g_v);
    r.put("g_v_formula", 3 * (l - 1) / 2);
    // Matching genera forces the characteristic-0 branch count.
    let forced: Vec<u64> = (0..=4 * b)
        .filter(|&k| {
            tame_rh_genus(&CoverSpec::tame(l, 0, &vec![l; k as usize]).unwrap()).ok() == Some(g_v)
        })
        .collect();
    r.put("char0_counts_matching_g_v", list(&forced));
    r.put("branch_count_parity", parity(b));
    r.obstruction = even_required && forced.iter().all(|&k| k % 2 == 1) && !forced.is_empty();
    Ok(r)
}

/// `C4 x C2` acting on a genus-2 curve with one totally ramified point.
fn even_type7() -> Result<ScenarioReport, RamificationError> {
    let mut r = ScenarioReport::new("even_type7");
    let order = 8u64;
    let genus = 2u64;
    r.put("group_order", order);
    r.put("genus", genus);
    r.put("quotient_genus", 0);
    // 2g - 2 = |G|(0 - 2) + d.
    let d = 2 * genus + 2 * order - 2;
    r.put("required_different", d);

    let candidates: Vec<RamificationFiltration> = enumerate_filtrations(2, order, d as usize + 1)
        .into_iter()
        .filter(|f| f.inertia_order() == order && different_exponent(f) == d)
        .collect();
    let valid: Vec<&RamificationFiltration> = candidates
        .iter()
        .filter(|f| hasse_arf_counts_hold(f) && upper_jumps_integral(f))
        .collect();
    r.put("filtrations_with_different", candidates.len());
    r.put("hasse_arf_valid_filtrations", list(&valid));
    for f in &valid {
        let c = CoverSpec::new(order, 0, vec![BranchPoint::wild((*f).clone())])?;
        if wild_rh_genus(&c)? != genus {
            return Err(bad(format!("filtration {f} does not give genus {genus}")));
        }
    }

    let g = build(
        &"prod(C:4,C:2)"
            .parse::<FamilySpec>()
            .map_err(|e| bad(e.to_string()))?,
    )?;
    let involutions: Vec<usize> = (0..g.order()).filter(|&x| g.order_of(x) == 2).collect();
    let v = g.subgroup_generated(&involutions);
    let index = g.order() / v.order();
    let order4_outside = (0..g.order())
        .filter(|&x| g.order_of(x) == 4)
        .all(|x| !v.contains(x));
    // The quotient by V is a C2 cover of the line, branched exactly at the
    // points with inertia of order 4; it has an even number of them.
    let b4_even = index == 2 && order4_outside;
    r.put("involution_subgroup_index", index);
    r.put("b4_even", b4_even);
    let mut all_odd = true;
    let mut checked = 0;
    for b2 in 0..=6usize {
        for b4 in (0..=6usize).step_by(2) {
            let mut idx = vec![2; b2];
            idx.extend(std::iter::repeat_n(4, b4));
            if let Ok(g0) = tame_rh_genus(&CoverSpec::tame(order, 0, &idx)?) {
                checked += 1;
                all_odd &= g0 % 2 == 1;
            }
        }
    }
    r.put("char0_branch_vectors_checked", checked);
    r.put("char0_genus_parity", if all_odd { "odd" } else { "mixed" });
    r.obstruction = b4_even && all_odd && genus.is_multiple_of(2) && !valid.is_empty();
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(name: &str, params: ScenarioParams) -> ScenarioReport {
        scenario(name, &params).unwrap()
    }

    #[test]
    fn every_scenario_obstructs() {
        for name in SCENARIOS {
            assert!(run(name, ScenarioParams::default()).obstruction, "{name}");
        }
    }

    #[test]
    fn odd_type4_values() {
        let r = run(
            "odd_type4_lp",
            ScenarioParams {
                p: Some(3),
                ..Default::default()
            },
        );
        assert_eq!(r.get("char_p_genus"), Some("3"));
        assert_eq!(r.get("unsolvable"), Some("true"));
        let r = run(
            "odd_type4_lp",
            ScenarioParams {
                p: Some(5),
                ..Default::default()
            },
        );
        assert_eq!(r.get("char_p_genus"), Some("10"));
    }

    #[test]
    fn odd_type45_values() {
        let r = run("odd_type45", ScenarioParams::default());
        assert_eq!(r.get("char0_lower_bound"), Some("8"));
        assert_eq!(r.get("g_w"), Some("4"));
        let r = run(
            "odd_type45",
            ScenarioParams {
                p: Some(5),
                l: Some(2),
                ..Default::default()
            },
        );
        assert_eq!(r.get("type"), Some("5"));
        assert!(r.obstruction);
    }

    #[test]
    fn even_type34_values() {
        for n in [2, 4] {
            let r = run(
                "even_type34",
                ScenarioParams {
                    n: Some(n),
                    ..Default::default()
                },
            );
            assert_eq!(r.get("g_s_parity"), Some("even"));
            assert_eq!(r.get("g_s0_parity"), Some("odd"));
            assert_eq!(r.get("p_h_upper_jumps"), Some("[1]"));
            assert_eq!(r.get("g_z"), Some("0"));
            assert!(r.obstruction);
        }
    }

    #[test]
    fn even_type56_values() {
        let r = run("even_type56", ScenarioParams::default());
        assert_eq!(r.get("branch_count"), Some("5"));
        assert_eq!(r.get("g_v"), Some("6"));
        assert_eq!(r.get("char0_counts_matching_g_v"), Some("[5]"));
    }

    #[test]
    fn even_type7_values() {
        let r = run("even_type7", ScenarioParams::default());
        assert_eq!(r.get("required_different"), Some("18"));
        assert_eq!(
            r.get("hasse_arf_valid_filtrations"),
            Some("[[8,8,2,2,2,2]]")
        );
        assert_eq!(r.get("char0_genus_parity"), Some("odd"));
    }

    #[test]
    fn unknown_and_bad_parameters() {
        assert_eq!(
            scenario("nope", &ScenarioParams::default()),
            Err(RamificationError::UnknownScenario("nope".into()))
        );
        assert!(scenario(
            "odd_type4_lp",
            &ScenarioParams {
                p: Some(2),
                ..Default::default()
            }
        )
        .is_err());
        assert!(scenario(
            "even_type34",
            &ScenarioParams {
                n: Some(8),
                ..Default::default()
            }
        )
        .is_err());
    }
}
