//! Exact computations for affine Hecke-Clifford superalgebras at a primitive
//! 4l-th root of unity, together with crystals of affine type D(2)_l.

pub mod error;
pub mod scalars;
pub mod cartan;
pub mod linalg;
pub mod algebra;
pub mod grothendieck;
pub mod supermodules;
pub mod crystal;
pub mod realizations;
