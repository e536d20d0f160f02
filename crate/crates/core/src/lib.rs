//! Finite-group analysis for deciding whether a group passes the known
//! necessary conditions for being an Oort group (or a local Oort group) in
//! characteristic `p`, together with the exact ramification arithmetic used to
//! rule out the forbidden shapes.
//!
//! Groups are fully enumerated permutation groups of bounded order. The crate
//! is organised bottom-up:
//!
//! * [`perm`] and [`group`]: permutations, closure, subgroups, normality.
//! * [`structure`]: characteristic subgroups, quotients, recognition.
//! * [`construct`]: the named group families and the labelled corpus.
//! * [`oort`]: shape classifiers, forbidden-quotient sieves, corollary checks.
//! * [`ramification`]: filtrations, Herbrand functions, Riemann–Hurwitz.
//! * [`format`]: the plain-text group-spec format.

pub mod arith;
pub mod caps;
pub mod construct;
pub mod error;
pub mod format;
pub mod group;
pub mod oort;
pub mod perm;
pub mod ramification;
pub mod structure;

pub use caps::Caps;
pub use error::{GroupError, ParseError, RamificationError};
pub use group::{FiniteGroup, Subgroup};
pub use perm::Permutation;
pub use structure::IsoType;
