//! Word sums as the character-level shadow of K(∞): shuffle, deconcatenation, the e_i
//! operators, the L(i^a j i^b) character library and the Serre relation check.

mod library;
mod ops;
mod wordsum;

pub use library::{
    apply_relation, block_characters, ch_standard, character_library, integrality_check, serre_degree,
    serre_relation, serre_verify, ses_check, standard_word, CharEntry, Origin, Relation, SerreCheck, SerreReport,
};
pub use ops::{deconcatenate, divided, e_drop, e_star_drop, e_word, shuffle};
pub use wordsum::{Word, WordSum};

#[cfg(test)]
mod tests;
