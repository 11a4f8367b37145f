//! Group codes over prime fields.
//!
//! A *G-code* is a right ideal of the group algebra `F_p G`, read as a linear
//! code of length `|G|` under the Hamming metric. This crate provides the
//! arithmetic, linear algebra and group machinery needed to build such codes,
//! compute their parameters and Schur products, and check the structural
//! results relating dimension, minimum distance and group order on concrete
//! instances.
//!
//! The crate is `no_std` (it needs `alloc`). IO, file formats, the CLI and
//! parallel sweeps live in the `gcodelab` companion crate.

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod algebra;
pub mod code;
pub mod constructions;
mod error;
pub mod field;
pub mod group;
pub mod linalg;
pub mod schur;
pub mod theorems;

pub use algebra::{AlgElem, GroupAlgebra};
pub use code::{GCode, ParamReport, DEFAULT_GUARD};
pub use error::{Error, Result};
pub use field::{FieldElem, Fp};
pub use group::{Group, Subgroup};
pub use linalg::{Matrix, RowBasis};
