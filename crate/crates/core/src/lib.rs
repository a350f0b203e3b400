//! Exact-arithmetic invariants of reduced plane curves.
//!
//! Given a reduced curve f = 0 in the projective plane, this crate computes
//! the graded data of its Jacobian ideal (the Hilbert function of the Milnor
//! algebra, the Jacobian module N(f), syzygies, graded Betti numbers) and
//! classifies the curve as smooth, free, nearly free, almost free, or
//! neither. Side modules cover total Milnor numbers through a Groebner chart
//! computation, local monodromy of cusps from Puiseux pairs, line
//! arrangements, and a catalog of reference curves with known invariants.
//!
//! All arithmetic is exact: rational numbers everywhere, with an optional
//! two-prime modular fast path for large rank computations.

pub mod arrangement;
pub mod betti;
pub mod catalog;
pub mod error;
pub mod field;
pub mod groebner;
pub mod jacobian;
pub mod matrix;
pub mod milnor;
pub mod monodromy;
pub mod poly;
pub mod report;

pub use error::{Error, Result};
pub use field::{QQ, Rat};
pub use jacobian::{Classification, Kind};
pub use matrix::{FieldMode, GuardConfig};
pub use poly::{Curve, HomPoly, parse_poly};
