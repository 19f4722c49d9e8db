//! Combinatorics on words around the Fibonacci word.
//!
//! Fibonacci word generation, occurrence densities and their golden-ratio
//! limits, palindromic and scattered-palindromic complexity, square-free
//! words, Catalan-indexed Fibonacci quantities and fuzzy Fibonacci words.
//! Every counting routine has an independent brute-force counterpart in
//! [`oracle`].

pub mod catalan;
pub mod cli;
pub mod density;
pub mod eertree;
pub mod error;
pub mod exact;
pub mod fibonacci;
pub mod fuzzy;
pub mod integral;
pub mod oracle;
pub mod palindromes;
pub mod squarefree;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use words::{Alphabet, Morphism, Word};
