//! Correlations of words: classical overlap bitstrings and their weighted
//! multiset counterpart.
//!
//! The correlation of `G` and `H` records, for each shift `i` of `H` under
//! `G`, whether a prefix of `H` equals the suffix of `G` starting at
//! position `i`. Matching runs to the end of `G`, so an occurrence of `H`
//! strictly inside `G` does not set a bit; for reduced pattern sets the two
//! conventions agree. The weighted correlation keeps, instead of a bit, the
//! weight of each matching overlap, as a multiset.

use std::fmt;

use num_traits::One;

use crate::algebra::{BigRational, Polynomial};
use crate::error::{Error, Result};
use crate::words::{WeightedAlphabet, Word};

/// Overlap indicator bits, leftmost shift first; length equals `|G|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrelationBits {
    bits: Vec<bool>,
}

impl CorrelationBits {
    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }
}

impl fmt::Display for CorrelationBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// The multiset of overlap weights, kept sorted with repeats.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedCorrelation {
    weights: Vec<u64>,
}

impl WeightedCorrelation {
    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

impl fmt::Display for WeightedCorrelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, w) in self.weights.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "}}")
    }
}

/// The correlation of `g` and `h`: bit `i` (0-based shift) is set when the
/// length-`(|g|-i)` prefix of `h` equals the suffix of `g` starting at `i`.
pub fn correlate(g: &Word, h: &Word) -> Result<CorrelationBits> {
    if g.is_empty() || h.is_empty() {
        return Err(Error::EmptyWord);
    }
    let gl = g.letters();
    let hl = h.letters();
    let bits = (0..gl.len())
        .map(|i| {
            let overlap = gl.len() - i;
            overlap <= hl.len() && hl[..overlap] == gl[i..]
        })
        .collect();
    Ok(CorrelationBits { bits })
}

/// The correlation bitstring read as base-`z` digits: the bit at shift `i`
/// contributes `z^{|G|-1-i}`.
pub fn correlation_poly(bits: &CorrelationBits) -> Polynomial {
    let len = bits.len();
    let coeffs = (0..len)
        .map(|k| {
            // coefficient of z^k comes from the bit at shift len-1-k
            if bits.bits[len - 1 - k] {
                BigRational::one()
            } else {
                num_traits::Zero::zero()
            }
        })
        .collect();
    Polynomial::from_coeffs(coeffs)
}

/// The weighted correlation of `g` and `h`: for every matching shift, the
/// weight of the matched prefix of `h` joins the multiset.
pub fn weighted_correlate(
    g: &Word,
    h: &Word,
    alphabet: &WeightedAlphabet,
) -> Result<WeightedCorrelation> {
    if g.is_empty() || h.is_empty() {
        return Err(Error::EmptyWord);
    }
    let gl = g.letters();
    let hl = h.letters();
    // prefix_weight[j] = weight of h's first j letters
    let mut prefix_weight = Vec::with_capacity(hl.len() + 1);
    prefix_weight.push(0u64);
    for &l in hl {
        prefix_weight.push(prefix_weight.last().unwrap() + alphabet.letter_weight(l)?);
    }
    for &l in gl {
        alphabet.letter_weight(l)?;
    }

    let mut weights: Vec<u64> = (0..gl.len())
        .filter_map(|i| {
            let overlap = gl.len() - i;
            if overlap <= hl.len() && hl[..overlap] == gl[i..] {
                Some(prefix_weight[overlap])
            } else {
                None
            }
        })
        .collect();
    weights.sort_unstable();
    Ok(WeightedCorrelation { weights })
}

/// `sum of z^k` over the multiset, with multiplicity; empty gives the zero
/// polynomial.
pub fn weighted_correlation_poly(wc: &WeightedCorrelation) -> Polynomial {
    let mut acc = Polynomial::zero();
    for &k in &wc.weights {
        acc = &acc + &Polynomial::monomial(BigRational::one(), k as usize);
    }
    acc
}
