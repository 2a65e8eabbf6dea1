//! Exact scalars: integers, the cyclotomic field Q(ζ_{4l}) and quadratic towers over it.

pub mod census;
pub mod field;
pub mod identities;
pub mod int;
pub mod numeric;
pub mod poly;
pub mod tower;

pub use field::{q, q_of, sqrt_minus_one, xi, FieldCtx, FieldElem};
pub use int::Int;
pub use poly::cyclotomic_polynomial;
pub use tower::{tower_invert, with_lazy_split, Tower, TowerElem};
