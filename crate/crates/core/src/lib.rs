//! Exact finite-field tiling, Fourier, and circle packing tools over `F_p^d`.

pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod ffvec;
pub mod fourier;
pub mod manifest;
pub mod polyring;
pub mod packing;
pub mod tiling;

pub use error::{Error, Result};
