//! Sumset saturation workbench.
//!
//! Given finite sets `A, B` in an abelian group, the crate looks for small
//! subsets `A_(s) ⊆ A`, `B_(s) ⊆ B` whose sumsets with the full sets are large,
//! certifies the resulting bounds by walk counting, builds saturating covers of
//! `S + T`, and generates the extremal set families that limit what such
//! subsets can achieve.

pub mod arith;
pub mod bitmask;
pub mod constructions;
pub mod error;
pub mod group;
pub mod rng;
pub mod saturator;
pub mod set;
pub mod setfile;
pub mod table;
pub mod verifier;

pub use error::{Result, SumsetError};
pub use group::{Element, GroupCtx};
pub use set::{difference_set, doubling_kappa, iterated_sumset, kappa_ab, sumset, translate, GSet, Rational};
