//! Exact arithmetic over finite fields and the rationals, univariate
//! polynomial algebra, and the self-interaction dynamics of irreducible
//! polynomials under the wedge operator `f ▷ g` (the minimal polynomial of
//! `f(α)` for a root `α` of `g`).
//!
//! The crate is organized around the objects the dynamics acts on:
//!
//! * [`field`]: prime fields, small extension fields, exact rationals.
//! * [`poly`]: dense univariate polynomials, irreducibility, discriminants,
//!   resultants, enumeration, and the affine substitution action.
//! * [`wedge`]: the wedge operator via multiplication matrices and minimal
//!   polynomials, plus an independent Frobenius-orbit oracle.
//! * [`dynamics`]: iteration, dynatomic polynomials, wedge invariants and
//!   the classification of stable 2-sets.
//! * [`blocks`]: root-shift blocks, block maps, block graphs and centres.
//! * [`quadratic`]: the three-dimensional skew map driving quadratic 2-set
//!   dynamics, periodic-set construction and the counting formulas.
//! * [`search`]: self-images of polynomial sets, orbits, stable-set
//!   enumeration and polynomial graphs.
//! * [`harness`]: batch jobs: the stable-2-set table, the prime-by-prime
//!   period experiment, DOT/CSV exporters.
//!
//! The `wedgelab` binary exposes all of this as a command-line workbench.

pub mod blocks;
pub mod dynamics;
pub mod error;
pub mod field;
pub mod harness;
pub(crate) mod numth;
pub mod poly;
pub mod quadratic;
pub mod search;
pub mod text;
pub mod wedge;

pub use error::{Error, Result};
pub use field::{Fe, FieldCtx, FieldKind};
pub use poly::{IrrPoly, Poly};
pub use wedge::{wedge, WedgeResult};
