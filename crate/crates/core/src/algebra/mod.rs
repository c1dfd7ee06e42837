//! Symbol algebras for field monomials and Wick groups.
//!
//! `PlainWord` stands for a product of field derivatives at points,
//! `WickGroup`/`WickWord` for Wick-ordered products. General elements are
//! [`LinearCombination`]s over these bases.

mod coeffs;
mod combo;
mod maps;
mod word;

pub use coeffs::{binomial, d_coeff, d_coeff_closed_form, factorial};
pub use combo::LinearCombination;
pub use maps::{merge_groups, rescale, theta, wick_expand, Reflectable};
pub use word::{Insertion, PlainWord, WickGroup, WickWord, Word};

/// Plain combinations, the general elements over [`PlainWord`].
pub type PlainCombination = LinearCombination<PlainWord>;
/// Wick combinations, the general elements over [`WickWord`].
pub type WickCombination = LinearCombination<WickWord>;
