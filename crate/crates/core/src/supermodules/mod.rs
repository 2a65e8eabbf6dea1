//! Z/2-graded matrix representations of H_μ over a tower field: explicit builders,
//! relation checks, tensor and ⊛ products, induction, types and formal characters.

pub mod builders;
pub mod character;
pub mod module;
pub mod ops;
pub mod suite;

pub use builders::*;
pub use character::{delta_im, epsilon_i, formal_character, max_jordan_block, word_dim};
pub use module::{MatrixSupermodule, SuperType};
pub use ops::{circled_star, induced, tensor};
pub use suite::{builder_suite, section_suite, star, Check, Status};

#[cfg(test)]
mod tests;
