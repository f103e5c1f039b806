//! Exact arithmetic for the (21)₅ configuration of 42 rational curves on the
//! supersingular K3 surface of Artin invariant 1 in characteristic 2.
//!
//! The surface is the minimal resolution of `(E × E)/⟨τ × τ⟩`, where
//! `E: y² + y = x³` and `τ` is translation by a 3-torsion point.

pub mod abelian;
pub mod ecurve;
pub mod error;
pub mod gf2k;
pub mod gkm;
pub mod models;
pub mod names;
pub mod nslattice;
pub mod quatorder;
pub mod reference;
pub mod render;
pub mod report;
pub mod suites;

pub use ecurve::{CurvePoint, EndoExpr};
pub use error::{Error, Result};
pub use gf2k::{Degree, Gf};
pub use names::{CurveKind, CurveName, Family};
pub use quatorder::{GeneratorSolution, Quat};
