//! The JSON problem format and the small textual formats used on the
//! command line.
//!
//! A problem file names an alphabet and a list of forbidden words:
//!
//! ```json
//! {
//!   "alphabet": { "kind": "compositions" },
//!   "forbidden": [["3"], ["2", "1"], ["1", "2"], ["1", "1", "1"]]
//! }
//! ```
//!
//! Finite alphabets list their letters explicitly:
//!
//! ```json
//! { "kind": "finite", "letters": [{ "symbol": "a", "weight": 1 }] }
//! ```
//!
//! Words are lists of symbols; over the composition alphabet the symbols are
//! decimal integer strings, so one format covers both kinds.

use serde::{Deserialize, Serialize};

use crate::algebra::parse_rational;
use crate::error::{Error, Result};
use crate::walks::StepDistribution;
use crate::words::{PatternSet, WeightedAlphabet, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LetterSpec {
    pub symbol: String,
    pub weight: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum AlphabetSpec {
    Compositions,
    Finite { letters: Vec<LetterSpec> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemSpec {
    pub alphabet: AlphabetSpec,
    pub forbidden: Vec<Vec<String>>,
}

impl ProblemSpec {
    /// Parse from JSON; serde's message carries line/column context.
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Canonical JSON rendering; re-parses to an identical value.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("problem specs always serialize")
    }

    /// Resolve into the checked domain types.
    pub fn build(&self) -> Result<(WeightedAlphabet, PatternSet)> {
        let alphabet = match &self.alphabet {
            AlphabetSpec::Compositions => WeightedAlphabet::Compositions,
            AlphabetSpec::Finite { letters } => WeightedAlphabet::finite(
                letters
                    .iter()
                    .map(|l| (l.symbol.clone(), l.weight))
                    .collect(),
            )?,
        };
        let words = self
            .forbidden
            .iter()
            .map(|symbols| alphabet.word_from_symbols(symbols))
            .collect::<Result<Vec<_>>>()?;
        let set = PatternSet::new(alphabet.clone(), words)?;
        Ok((alphabet, set))
    }

    /// The spec describing an existing alphabet and set (for `--echo`).
    pub fn describe(alphabet: &WeightedAlphabet, set: &PatternSet) -> Self {
        let alphabet_spec = match alphabet {
            WeightedAlphabet::Compositions => AlphabetSpec::Compositions,
            WeightedAlphabet::Finite(letters) => AlphabetSpec::Finite {
                letters: letters
                    .iter()
                    .map(|(symbol, weight)| LetterSpec {
                        symbol: symbol.clone(),
                        weight: *weight,
                    })
                    .collect(),
            },
        };
        let forbidden = set
            .words()
            .iter()
            .map(|w| {
                w.letters()
                    .iter()
                    .map(|&l| alphabet.symbol(l))
                    .collect::<Vec<_>>()
            })
            .collect();
        ProblemSpec {
            alphabet: alphabet_spec,
            forbidden,
        }
    }
}

/// Parse an alphabet flag: either one character per unit-weight letter
/// (`"ab"`) or comma-separated `symbol:weight` entries (`"a:1,b:2"`).
pub fn parse_alphabet_flag(text: &str) -> Result<WeightedAlphabet> {
    if text.is_empty() {
        return Err(Error::Parse("empty alphabet".into()));
    }
    if text.contains(':') {
        let letters = text
            .split(',')
            .map(|entry| {
                let (symbol, weight) = entry
                    .split_once(':')
                    .ok_or_else(|| Error::Parse(format!("expected symbol:weight in {entry:?}")))?;
                let weight: u64 = weight
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad weight in {entry:?}")))?;
                Ok((symbol.trim().to_string(), weight))
            })
            .collect::<Result<Vec<_>>>()?;
        WeightedAlphabet::finite(letters)
    } else {
        WeightedAlphabet::unit(text)
    }
}

/// Parse a word argument: comma-separated symbols if a comma is present,
/// one symbol per character otherwise.
pub fn parse_word_flag(alphabet: &WeightedAlphabet, text: &str) -> Result<Word> {
    let symbols: Vec<String> = if text.is_empty() {
        Vec::new()
    } else if text.contains(',') {
        text.split(',').map(|s| s.trim().to_string()).collect()
    } else {
        text.chars().map(|c| c.to_string()).collect()
    };
    alphabet.word_from_symbols(&symbols)
}

/// Parse a step distribution: the presets `die1` and `dice2`, or
/// comma-separated `step:probability` entries such as `1:1/2,2:1/2`.
pub fn parse_distribution(text: &str) -> Result<StepDistribution> {
    match text {
        "die1" => return Ok(StepDistribution::fair_die()),
        "dice2" => return Ok(StepDistribution::two_dice()),
        _ => {}
    }
    let entries = text
        .split(',')
        .map(|entry| {
            let (step, prob) = entry
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected step:probability in {entry:?}")))?;
            let step: u64 = step
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad step in {entry:?}")))?;
            Ok((step, parse_rational(prob)?))
        })
        .collect::<Result<Vec<_>>>()?;
    StepDistribution::new(entries)
}
