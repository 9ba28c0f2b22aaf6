//! Orthogonal idempotents of the 0-Hecke algebra `ℂH_0(S_N)`.
//!
//! Each signed Dynkin diagram `D` gives a demipotent [`diagram::demipotent`]
//! whose stable power is an idempotent `I_D`; the `2^{N-1}` idempotents are
//! pairwise orthogonal and sum to one. Everything is computed with exact
//! integer coefficients.
//!
//! ```
//! use zero_hecke::{diagram, HeckeAlgebra, Orientation};
//!
//! let alg = HeckeAlgebra::new(5)?;
//! let d = "+-++".parse()?;
//! let idem = diagram::idempotent(&alg, &d, Orientation::Standard)?;
//! assert_eq!(idem.degree, 2);
//! assert!(alg.is_idempotent(&idem.element)?);
//! # Ok::<(), zero_hecke::Error>(())
//! ```
//!
//! The modules, roughly bottom up:
//!
//! - [`perm`] and [`monoid`]: permutations, words, the monoid tables.
//! - [`algebra`]: elements, products, `Ψ`, `Φ±` and the characters `λ_J`.
//! - [`diagram`]: signed diagrams, demipotents and idempotents.
//! - [`repr`] and [`linalg`]: ranks, descent classes, the radical.
//! - [`ndpf`]: the parking function quotient.
//! - [`verify`], [`render`] and [`cli`]: the checks and the command line.

pub mod algebra;
pub mod cli;
mod dense;
pub mod diagram;
pub mod error;
pub mod linalg;
pub mod lincomb;
pub mod monoid;
pub mod ndpf;
pub mod perm;
pub mod render;
pub mod repr;
pub mod verify;

pub use algebra::{AlgebraElement, Factor, HeckeAlgebra};
pub use diagram::{DiagramIdempotent, Orientation, Sign, SignedDiagram};
pub use error::{Error, Result};
pub use monoid::HeckeMonoid;
pub use perm::{GeneratorSet, Permutation, Word};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/monoid.md")]
    mod monoid {}
    #[doc = include_str!("../../../book/src/algebra.md")]
    mod algebra {}
    #[doc = include_str!("../../../book/src/demipotents.md")]
    mod demipotents {}
    #[doc = include_str!("../../../book/src/idempotents.md")]
    mod idempotents {}
    #[doc = include_str!("../../../book/src/representations.md")]
    mod representations {}
    #[doc = include_str!("../../../book/src/ndpf.md")]
    mod ndpf {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
