//! Weighted alphabets, words, and forbidden-pattern sets.
//!
//! Two alphabet flavors are supported. A [`WeightedAlphabet::Finite`]
//! alphabet is an explicit table of symbols with positive integer weights.
//! The [`WeightedAlphabet::Compositions`] alphabet is the positive integers
//! where letter `i` weighs `i`, so weight-`n` words are exactly the integer
//! compositions of `n`.

use std::fmt;

use crate::error::{Error, Result};

/// An alphabet-relative letter code.
///
/// For a finite alphabet this is the index into the letter table; for the
/// composition alphabet it is the part value itself (at least 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(pub u64);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightedAlphabet {
    /// Explicit `(symbol, weight)` table; symbols pairwise distinct,
    /// weights at least 1.
    Finite(Vec<(String, u64)>),
    /// The positive integers, letter `i` weighing `i`.
    Compositions,
}

impl WeightedAlphabet {
    /// A finite alphabet from a `(symbol, weight)` table.
    pub fn finite(letters: Vec<(String, u64)>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidArgument(
                "finite alphabet needs at least one letter".into(),
            ));
        }
        for (sym, weight) in &letters {
            if *weight == 0 {
                return Err(Error::InvalidArgument(format!(
                    "letter {sym:?} must have positive weight"
                )));
            }
        }
        for (i, (sym, _)) in letters.iter().enumerate() {
            if letters[..i].iter().any(|(other, _)| other == sym) {
                return Err(Error::InvalidArgument(format!(
                    "duplicate symbol {sym:?} in alphabet"
                )));
            }
        }
        Ok(WeightedAlphabet::Finite(letters))
    }

    /// A finite alphabet with one unit-weight letter per character of `symbols`.
    pub fn unit(symbols: &str) -> Result<Self> {
        WeightedAlphabet::finite(symbols.chars().map(|c| (c.to_string(), 1)).collect())
    }

    /// Number of letters, or `None` for the composition alphabet.
    pub fn letter_count(&self) -> Option<usize> {
        match self {
            WeightedAlphabet::Finite(letters) => Some(letters.len()),
            WeightedAlphabet::Compositions => None,
        }
    }

    /// The letter table of a finite alphabet as `(letter, weight)` pairs.
    pub fn finite_letters(&self) -> Option<Vec<(Letter, u64)>> {
        match self {
            WeightedAlphabet::Finite(letters) => Some(
                letters
                    .iter()
                    .enumerate()
                    .map(|(i, (_, w))| (Letter(i as u64), *w))
                    .collect(),
            ),
            WeightedAlphabet::Compositions => None,
        }
    }

    /// Weight of a single letter.
    pub fn letter_weight(&self, letter: Letter) -> Result<u64> {
        match self {
            WeightedAlphabet::Finite(letters) => letters
                .get(letter.0 as usize)
                .map(|(_, w)| *w)
                .ok_or_else(|| Error::UnknownLetter(format!("#{}", letter.0))),
            WeightedAlphabet::Compositions => {
                if letter.0 >= 1 {
                    Ok(letter.0)
                } else {
                    Err(Error::UnknownLetter("0".into()))
                }
            }
        }
    }

    /// Printable symbol of a letter.
    pub fn symbol(&self, letter: Letter) -> String {
        match self {
            WeightedAlphabet::Finite(letters) => letters
                .get(letter.0 as usize)
                .map(|(s, _)| s.clone())
                .unwrap_or_else(|| format!("#{}", letter.0)),
            WeightedAlphabet::Compositions => letter.0.to_string(),
        }
    }

    /// Resolve a symbol to its letter code.
    pub fn letter(&self, symbol: &str) -> Result<Letter> {
        match self {
            WeightedAlphabet::Finite(letters) => letters
                .iter()
                .position(|(s, _)| s == symbol)
                .map(|i| Letter(i as u64))
                .ok_or_else(|| Error::UnknownLetter(symbol.into())),
            WeightedAlphabet::Compositions => {
                let part: u64 = symbol
                    .parse()
                    .map_err(|_| Error::UnknownLetter(symbol.into()))?;
                if part >= 1 {
                    Ok(Letter(part))
                } else {
                    Err(Error::UnknownLetter(symbol.into()))
                }
            }
        }
    }

    /// Sum of letter weights; the empty word weighs 0. Also validates that
    /// every letter belongs to this alphabet.
    pub fn word_weight(&self, word: &Word) -> Result<u64> {
        let mut total = 0u64;
        for &l in word.letters() {
            total += self.letter_weight(l)?;
        }
        Ok(total)
    }

    /// Build a word from letter codes, caching its weight.
    pub fn word(&self, letters: Vec<Letter>) -> Result<Word> {
        let mut weight = 0u64;
        for &l in &letters {
            weight += self.letter_weight(l)?;
        }
        Ok(Word { letters, weight })
    }

    /// Build a word from symbols.
    pub fn word_from_symbols<S: AsRef<str>>(&self, symbols: &[S]) -> Result<Word> {
        let letters = symbols
            .iter()
            .map(|s| self.letter(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        self.word(letters)
    }

    /// Render a word: symbols joined directly when all are single
    /// characters, comma-separated otherwise.
    pub fn format_word(&self, word: &Word) -> String {
        let symbols: Vec<String> = word.letters().iter().map(|&l| self.symbol(l)).collect();
        if symbols.iter().all(|s| s.chars().count() == 1) {
            symbols.concat()
        } else {
            symbols.join(",")
        }
    }
}

/// A finite sequence of letters with its cached total weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
    weight: u64,
}

impl Word {
    pub fn empty() -> Self {
        Word {
            letters: Vec::new(),
            weight: 0,
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Whether `other` occurs in `self` as a contiguous substring.
    pub fn contains(&self, other: &Word) -> bool {
        if other.len() > self.len() {
            return false;
        }
        if other.is_empty() {
            return true;
        }
        self.letters
            .windows(other.len())
            .any(|w| w == other.letters())
    }
}

/// A set of forbidden words over a common alphabet, in caller order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternSet {
    alphabet: WeightedAlphabet,
    words: Vec<Word>,
}

impl PatternSet {
    /// Validate and build. Words must be nonempty, belong to the alphabet,
    /// and be pairwise distinct (equal words count as mutual containment,
    /// which would make the linear system singular).
    pub fn new(alphabet: WeightedAlphabet, words: Vec<Word>) -> Result<Self> {
        for word in &words {
            if word.is_empty() {
                return Err(Error::EmptyWord);
            }
            if alphabet.word_weight(word)? != word.weight() {
                return Err(Error::AlphabetMismatch);
            }
        }
        for (i, word) in words.iter().enumerate() {
            if words[..i].contains(word) {
                return Err(Error::DuplicateWord(alphabet.format_word(word)));
            }
        }
        Ok(PatternSet { alphabet, words })
    }

    pub fn alphabet(&self) -> &WeightedAlphabet {
        &self.alphabet
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// True when no member contains another as a contiguous substring.
    pub fn is_reduced(&self) -> bool {
        self.find_containment().is_none()
    }

    /// First `(container, contained)` index pair, if any.
    pub fn find_containment(&self) -> Option<(usize, usize)> {
        for (i, w) in self.words.iter().enumerate() {
            for (j, v) in self.words.iter().enumerate() {
                if i != j && w.contains(v) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Drop every word that contains another member as a substring.
    ///
    /// A string avoids the original set if and only if it avoids the reduced
    /// one, and the result is always reduced. Idempotent.
    pub fn reduce(&self) -> PatternSet {
        let kept: Vec<Word> = self
            .words
            .iter()
            .filter(|w| !self.words.iter().any(|v| v != *w && w.contains(v)))
            .cloned()
            .collect();
        PatternSet {
            alphabet: self.alphabet.clone(),
            words: kept,
        }
    }

    pub fn format_word(&self, word: &Word) -> String {
        self.alphabet.format_word(word)
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.alphabet.format_word(w))?;
        }
        write!(f, "}}")
    }
}

/// All `2^{m-1}` compositions of `m` as composition-alphabet words, in
/// lexicographic order by parts.
pub fn all_compositions(m: u64) -> Vec<Word> {
    assert!(m >= 1, "compositions are of a positive integer");
    let mut out = Vec::new();
    let mut parts: Vec<u64> = Vec::new();
    fn go(rem: u64, parts: &mut Vec<u64>, out: &mut Vec<Word>) {
        if rem == 0 {
            let letters: Vec<Letter> = parts.iter().map(|&p| Letter(p)).collect();
            let weight = parts.iter().sum();
            out.push(Word { letters, weight });
            return;
        }
        for p in 1..=rem {
            parts.push(p);
            go(rem - p, parts, out);
            parts.pop();
        }
    }
    go(m, &mut parts, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comps() -> WeightedAlphabet {
        WeightedAlphabet::Compositions
    }

    fn cword(parts: &[u64]) -> Word {
        comps()
            .word(parts.iter().map(|&p| Letter(p)).collect())
            .unwrap()
    }

    #[test]
    fn word_weights() {
        assert_eq!(cword(&[2, 4, 1, 1, 4]).weight(), 12);
        assert_eq!(cword(&[1, 1, 1]).weight(), 3);
        assert_eq!(Word::empty().weight(), 0);
        assert_eq!(comps().word_weight(&Word::empty()).unwrap(), 0);
    }

    #[test]
    fn unknown_letters_are_rejected() {
        assert!(comps().word(vec![Letter(0)]).is_err());
        let ab = WeightedAlphabet::unit("ab").unwrap();
        assert!(ab.word(vec![Letter(2)]).is_err());
        assert!(ab.word_from_symbols(&["a", "c"]).is_err());
    }

    #[test]
    fn finite_alphabet_validation() {
        assert!(WeightedAlphabet::finite(vec![]).is_err());
        assert!(WeightedAlphabet::finite(vec![("a".into(), 0)]).is_err());
        assert!(WeightedAlphabet::finite(vec![("a".into(), 1), ("a".into(), 2)]).is_err());
    }

    #[test]
    fn reducedness() {
        let m3 = PatternSet::new(
            comps(),
            vec![
                cword(&[3]),
                cword(&[2, 1]),
                cword(&[1, 2]),
                cword(&[1, 1, 1]),
            ],
        )
        .unwrap();
        assert!(m3.is_reduced());

        let bad = PatternSet::new(comps(), vec![cword(&[2, 1]), cword(&[1, 2, 1])]).unwrap();
        assert!(!bad.is_reduced());

        let empty = PatternSet::new(comps(), vec![]).unwrap();
        assert!(empty.is_reduced());
    }

    #[test]
    fn reduction() {
        let bad = PatternSet::new(comps(), vec![cword(&[2, 1]), cword(&[1, 2, 1])]).unwrap();
        assert_eq!(bad.reduce().words(), &[cword(&[2, 1])]);

        let m3 = PatternSet::new(
            comps(),
            vec![
                cword(&[3]),
                cword(&[2, 1]),
                cword(&[1, 2]),
                cword(&[1, 1, 1]),
            ],
        )
        .unwrap();
        assert_eq!(m3.reduce(), m3);

        let chain = PatternSet::new(
            comps(),
            vec![cword(&[1]), cword(&[1, 1]), cword(&[1, 1, 1])],
        )
        .unwrap();
        assert_eq!(chain.reduce().words(), &[cword(&[1])]);

        // Idempotence on a mixed set.
        let mixed = PatternSet::new(comps(), vec![cword(&[1, 2, 1]), cword(&[2, 1])]).unwrap();
        assert_eq!(mixed.reduce().reduce(), mixed.reduce());
        assert!(mixed.reduce().is_reduced());
    }

    #[test]
    fn pattern_set_rejects_bad_words() {
        assert!(matches!(
            PatternSet::new(comps(), vec![Word::empty()]),
            Err(Error::EmptyWord)
        ));
        assert!(matches!(
            PatternSet::new(comps(), vec![cword(&[1]), cword(&[1])]),
            Err(Error::DuplicateWord(_))
        ));
        // A word carrying a stale weight cache does not belong to this alphabet.
        let ab = WeightedAlphabet::finite(vec![("a".into(), 1), ("b".into(), 5)]).unwrap();
        let w = ab.word_from_symbols(&["b"]).unwrap();
        assert!(matches!(
            PatternSet::new(WeightedAlphabet::unit("xy").unwrap(), vec![w]),
            Err(Error::AlphabetMismatch)
        ));
    }

    #[test]
    fn compositions_of_small_m() {
        let c3 = all_compositions(3);
        assert_eq!(
            c3,
            vec![
                cword(&[1, 1, 1]),
                cword(&[1, 2]),
                cword(&[2, 1]),
                cword(&[3])
            ]
        );
        assert_eq!(all_compositions(1), vec![cword(&[1])]);
        assert_eq!(all_compositions(5).len(), 16);
    }

    #[test]
    fn compositions_counting_law() {
        for m in 1..=10u64 {
            let words = all_compositions(m);
            assert_eq!(words.len(), 1usize << (m - 1));
            assert!(words.iter().all(|w| w.weight() == m));
            // Pairwise distinct and reduced for every m.
            let set = PatternSet::new(comps(), words).unwrap();
            assert!(set.is_reduced());
        }
    }

    #[test]
    fn substring_containment() {
        let w = cword(&[2, 4, 1, 1, 4]);
        // Contains weight-6 windows 2+4, 4+1+1, 1+1+4 ...
        assert!(w.contains(&cword(&[2, 4])));
        assert!(w.contains(&cword(&[4, 1, 1])));
        assert!(w.contains(&cword(&[1, 1, 4])));
        // ... while avoiding every composition of 3 in consecutive positions.
        for c in all_compositions(3) {
            assert!(!w.contains(&c));
        }
        // 2+1 appears only in nonconsecutive positions.
        assert!(!w.contains(&cword(&[2, 1])));
    }

    #[test]
    fn word_formatting() {
        assert_eq!(comps().format_word(&cword(&[2, 1])), "21");
        assert_eq!(comps().format_word(&cword(&[12, 1])), "12,1");
        let ab = WeightedAlphabet::unit("ab").unwrap();
        let w = ab.word_from_symbols(&["a", "b", "a"]).unwrap();
        assert_eq!(ab.format_word(&w), "aba");
    }
}
