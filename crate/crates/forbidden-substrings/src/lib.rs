//! Exact counting of weighted strings that avoid forbidden substrings.
//!
//! Strings over a weighted alphabet are graded by weight (the sum of their
//! letter weights) rather than length; integer compositions of `n` are the
//! weight-`n` strings over the alphabet `{1, 2, 3, ...}` where letter `i`
//! weighs `i`. Given a reduced set of forbidden words, the counts of
//! weight-`n` strings avoiding all of them satisfy a small linear system
//! built from the pairwise weighted correlations of the forbidden words.
//! Solving it over the field of rational functions gives the counting
//! generating function exactly, and its series expansion gives the counts.
//!
//! ```
//! use forbidden_substrings::solver::count_avoiding;
//! use forbidden_substrings::words::{all_compositions, PatternSet, WeightedAlphabet};
//!
//! // Compositions of n with no consecutive parts summing to 3.
//! let alphabet = WeightedAlphabet::Compositions;
//! let set = PatternSet::new(alphabet.clone(), all_compositions(3)).unwrap();
//! let counts = count_avoiding(&alphabet, &set, 8).unwrap();
//! let expected: Vec<u32> = vec![1, 1, 2, 0, 2, 3, 9, 12, 20];
//! assert_eq!(counts, expected.into_iter().map(Into::into).collect::<Vec<_>>());
//! ```
//!
//! Modules:
//!
//! - [`words`]: weighted alphabets, words, pattern sets.
//! - [`correlation`]: overlap bitstrings and weighted correlation multisets.
//! - [`algebra`]: exact rationals, polynomials, rational functions, and
//!   linear solving over the rational-function field.
//! - [`solver`]: the avoidance systems and series extraction.
//! - [`oracle`]: brute-force enumeration for cross-checking.
//! - [`walks`]: hit probabilities of one-sided random walks.
//! - [`problem`]: the JSON problem format and CLI textual formats.
//!
//! The `avoid` binary exposes all of this on the command line; the
//! `examples/` directory has one runnable program per capability.

pub mod algebra;
pub mod correlation;
mod error;
pub mod oracle;
pub mod problem;
pub mod solver;
pub mod walks;
pub mod words;

pub use error::{Error, Result};
