//! The affine Hecke-Clifford superalgebra H_n in PBW normal form.

pub mod auto;
pub mod coset;
pub mod element;
pub mod perm;

pub use auto::{sigma, tau};
pub use coset::coset_decompose;
pub use element::{Gen, HElement, Monomial};
