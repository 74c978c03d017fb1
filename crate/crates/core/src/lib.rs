//! Skew polynomial rings over the finite chain ring `F_q + uF_q`, skew
//! constacyclic codes as left ideals of `R[x;Theta]/<x^n - lambda>`, and
//! their Euclidean and Hermitian duals.

pub mod chainring;
pub mod classify;
pub mod duality;
pub mod error;
pub mod gf;
pub mod parse;
pub mod quotcode;
pub mod reference;
pub mod skewpoly;

pub use chainring::{AutomorphismSpec, ChainRing, DualNumberRing, RingElement};
pub use classify::{CanonicalIdeal, IdealLattice, IdealType};
pub use duality::InnerProductKind;
pub use error::{Error, Result};
pub use gf::{FieldElement, FieldParams, GaloisField, ModulusTable};
pub use quotcode::{CodeContext, CodeSpan, Codeword, Matrix};
pub use skewpoly::{Poly, SkewPoly, SkewRing};
