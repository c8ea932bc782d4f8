//! Perfect crystals of the affine Lie algebra of type G2 (1) built from the
//! A2 crystal model, together with the level-one quantum module and its
//! fusion and R-matrix identities.

#![allow(clippy::needless_range_loop)]

pub mod a2;
pub mod affine;
pub mod cartan;
pub mod error;
pub mod g2;
pub mod perfect;
pub mod qlevel1;
pub mod signature;

pub use error::{Error, Result};
