//! Exact computations with the conformal Galilei algebras `g~(l)` (centrally
//! extended, `l` in `N - 1/2`) and `g(l)` (centerless, `l` in `N/2`).
//!
//! * [`algebra`]: bases, bracket tables, grading, structural checks.
//! * [`uea`]: PBW normal forms with localization at `z` and `f`, the
//!   oscillator homomorphism and the automorphisms `theta_x`.
//! * [`linalg`]: dense exact matrices.
//! * [`repr`]: truncated weight modules (Verma, tensor, oscillator lift,
//!   radicals, simplicity certificates) and theorem-level checks.
//! * [`fock`]: differential-operator realizations and their relation checker.
//! * [`oracle`]: partition-counting characters, independent of everything above.
//!
//! All scalars are [`Q`] (arbitrary precision rationals); nothing in the crate
//! uses floating point.

pub mod algebra;
pub mod character;
pub mod error;
pub mod fock;
pub mod linalg;
pub mod oracle;
pub mod rational;
pub mod report;
pub mod repr;
pub mod uea;

pub use algebra::{h_degree, Family, GeneratorId, HalfInteger, LieAlgebra, LieElement};
pub use character::CharacterTable;
pub use error::{Error, Result};
pub use rational::Q;
pub use report::{CheckResult, Report};
