//! Exact computations on the dominant regions of the Shi arrangement.
//!
//! For a finite crystallographic root system the dominant regions of the Shi
//! arrangement are in bijection with the antichains of the root poset
//! `(Φ+, ≤)`. This crate materializes:
//!
//! * the positive roots and their order ([`root_system`]),
//! * antichains, upper ideals and the inclusion order on them, with zeta and
//!   Möbius matrices ([`antichain`]),
//! * generalized Catalan numbers and their `q`-analogues ([`catalan`]),
//! * the ring `H` of locally constant integer functions on dominant regions,
//!   with its trivial basis `δ_p`, its Heaviside basis `h_p` and the
//!   filtration by products of Heaviside generators ([`heaviside`]),
//! * the ring `U` given by generators `u_α` and relations
//!   `u_α u_β = u_min(α,β)` for comparable roots, its graded ring, and the
//!   isomorphism `ρ: U → H` ([`presented`]),
//! * classification of exact rational points into regions and construction of
//!   witness points by exact linear programming ([`regions`], [`simplex`]).
//!
//! Everything is exact: integers for ring coordinates and arbitrary precision
//! rationals for geometry.

pub mod antichain;
pub mod catalan;
mod error;
pub mod export;
pub mod heaviside;
pub mod linalg;
pub mod presented;
pub mod regions;
pub mod root_system;
pub mod simplex;
pub mod verify;

pub use antichain::{Antichain, AntichainPoset, UpperIdeal};
pub use catalan::QPolynomial;
pub use error::{Error, Result};
pub use heaviside::{Basis, FiltrationReport, HeavisideRing, RingElement};
pub use presented::{PresentedRing, UElement, UMonomial};
pub use regions::{RationalPoint, Side, SignVector};
pub use root_system::{DynkinType, Family, Root, RootSystem};
