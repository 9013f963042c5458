//! Exact-arithmetic engine for the normalized bar construction of a
//! graded-commutative differential Poisson algebra.
//!
//! The crate is `no_std` (it needs `alloc`). It provides:
//!
//! * [`field`]: scalars over ℚ and 𝔽ₚ together with deterministic sparse
//!   row reduction, subspaces and quotients.
//! * [`algebra`]: finitely generated graded-commutative algebras with a
//!   differential and a bracket extended from generator tables.
//! * [`bar`]: the bar bicomplex with its two differentials, the coproduct,
//!   the shuffle product and the bar-level bracket.
//! * [`sseq`]: the spectral sequence of the external-degree filtration,
//!   its pages, induced operations and total homology.
//! * [`verify`]: exhaustive axiom sweeps with replayable witnesses.
#![no_std]

extern crate alloc;

pub mod algebra;
pub mod bar;
mod error;
pub mod field;
pub mod sseq;
pub mod verify;

pub use error::{Error, Result};
