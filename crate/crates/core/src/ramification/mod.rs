//! Exact ramification arithmetic: lower filtrations, the Herbrand transform,
//! Hasse-Arf, Riemann-Hurwitz in tame and wild form, and the numeric
//! obstructions to lifting covers to characteristic 0.

mod cover;
mod filtration;
mod obstruction;
mod scenario;

pub use cover::{artin_schreier_genus, tame_rh_genus, wild_rh_genus, BranchPoint, CoverSpec};
pub use filtration::{
    different_exponent, enumerate_filtrations, format_rational, hasse_arf_check,
    hasse_arf_counts_hold, herbrand_phi, lower_to_upper, rational, upper_jumps_integral,
    upper_to_lower, RamificationFiltration, UpperJump,
};
pub use obstruction::{
    a4_extension, branch_pullback_count, char0_even_required, char0_parity_obstruction_a4ext,
    dihedral_lift_bound, odd_p_parity_equation, A4ExtensionParity, LiftBound,
};
pub use scenario::{scenario, ReportEntry, ScenarioParams, ScenarioReport, SCENARIOS};
