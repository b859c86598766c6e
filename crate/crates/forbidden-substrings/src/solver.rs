//! Build and solve the avoidance linear systems, and expand the resulting
//! generating functions into exact coefficient series.
//!
//! The unknowns are `F` (weight-`n` strings avoiding every member of the
//! set) and one `F_H` per forbidden word (strings whose only forbidden
//! occurrence is `H` at the very end), all as functions of `z` with series
//! in powers of `1/z`. The counting row uses the alphabet weight enumerator
//! `W(z) = sum of z^{-w_h}` in the form `(1 - W)F + sum F_H = 1`, which
//! specializes to `(z-q)F + z*sum F_H = z` for `q` unit-weight letters and
//! to the `(z-2)/(z-1)` coefficient for the composition alphabet. The row
//! for `H` is `F - sum_G w(GH)_z F_G = 0`.

use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};

use crate::algebra::{determinant, solve_linear, BigRational, Polynomial, RationalFunction};
use crate::correlation::{
    correlate, correlation_poly, weighted_correlate, weighted_correlation_poly,
};
use crate::error::{Error, Result};
use crate::words::{PatternSet, WeightedAlphabet};

/// The square linear system for a pattern set, with row 0 the counting row
/// and row `j >= 1` the equation for the `j`-th forbidden word.
#[derive(Clone, Debug)]
pub struct AvoidanceSystem {
    pub matrix: Vec<Vec<RationalFunction>>,
    pub rhs: Vec<RationalFunction>,
    /// Column labels: `F` followed by one `F[...]` per forbidden word.
    pub labels: Vec<String>,
}

impl AvoidanceSystem {
    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    /// Determinant of the coefficient matrix.
    pub fn determinant(&self) -> RationalFunction {
        determinant(&self.matrix)
    }
}

/// Solved generating functions, aligned with the pattern set's word order.
#[derive(Clone, Debug)]
pub struct GeneratingFunctionSet {
    /// `F(z)`: counts of strings avoiding the whole set.
    pub avoiding: RationalFunction,
    /// `F_H(z)` for each forbidden word `H`, in set order.
    pub ending_with: Vec<RationalFunction>,
}

/// `W(z) = sum over letters of z^{-weight}` as a rational function:
/// `q/z` for `q` unit-weight letters, `1/(z-1)` for the composition
/// alphabet.
pub fn alphabet_weight_enumerator(alphabet: &WeightedAlphabet) -> RationalFunction {
    match alphabet {
        WeightedAlphabet::Finite(letters) => {
            let max_w = letters.iter().map(|(_, w)| *w).max().unwrap_or(1) as usize;
            let mut num = Polynomial::zero();
            for (_, w) in letters {
                num = &num + &Polynomial::monomial(BigRational::one(), max_w - *w as usize);
            }
            let den = Polynomial::monomial(BigRational::one(), max_w);
            RationalFunction::new(num, den).expect("nonzero denominator")
        }
        WeightedAlphabet::Compositions => {
            // geometric series: z^{-1} + z^{-2} + ... = 1/(z-1)
            RationalFunction::new(Polynomial::one(), Polynomial::from_ints(&[-1, 1]))
                .expect("nonzero denominator")
        }
    }
}

fn check_input(alphabet: &WeightedAlphabet, set: &PatternSet) -> Result<()> {
    if alphabet != set.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    if let Some((i, j)) = set.find_containment() {
        return Err(Error::NotReduced {
            container: set.format_word(&set.words()[i]),
            contained: set.format_word(&set.words()[j]),
        });
    }
    Ok(())
}

fn labels_for(set: &PatternSet) -> Vec<String> {
    let mut labels = vec!["F".to_string()];
    labels.extend(
        set.words()
            .iter()
            .map(|w| format!("F[{}]", set.format_word(w))),
    );
    labels
}

/// Assemble the weighted avoidance system for a reduced set.
pub fn build_system(alphabet: &WeightedAlphabet, set: &PatternSet) -> Result<AvoidanceSystem> {
    check_input(alphabet, set)?;
    let t = set.len();
    let one = RationalFunction::one();

    let mut matrix = vec![vec![RationalFunction::zero(); t + 1]; t + 1];
    let mut rhs = vec![RationalFunction::zero(); t + 1];

    matrix[0][0] = &one - &alphabet_weight_enumerator(alphabet);
    for entry in matrix[0].iter_mut().skip(1) {
        *entry = one.clone();
    }
    rhs[0] = one.clone();

    for (hj, h) in set.words().iter().enumerate() {
        matrix[hj + 1][0] = one.clone();
        for (gj, g) in set.words().iter().enumerate() {
            let wc = weighted_correlate(g, h, alphabet)?;
            let poly = weighted_correlation_poly(&wc);
            matrix[hj + 1][gj + 1] = -&RationalFunction::from_poly(poly);
        }
    }

    Ok(AvoidanceSystem {
        matrix,
        rhs,
        labels: labels_for(set),
    })
}

/// Assemble the classical unit-weight system directly from correlation
/// bitstrings: `(z-q)F + z*sum F_H = z` and `F - sum_G z*(GH)_z F_G = 0`.
///
/// Only valid for finite alphabets in which every letter has weight 1; this
/// is an independent route used to cross-check [`build_system`].
pub fn build_classical_system(
    alphabet: &WeightedAlphabet,
    set: &PatternSet,
) -> Result<AvoidanceSystem> {
    let letters = match alphabet {
        WeightedAlphabet::Finite(letters) if letters.iter().all(|(_, w)| *w == 1) => letters,
        _ => {
            return Err(Error::InvalidArgument(
                "the classical system needs a finite alphabet with unit weights".into(),
            ))
        }
    };
    check_input(alphabet, set)?;
    let q = letters.len() as i64;
    let t = set.len();
    let z = Polynomial::variable();

    let mut matrix = vec![vec![RationalFunction::zero(); t + 1]; t + 1];
    let mut rhs = vec![RationalFunction::zero(); t + 1];

    matrix[0][0] = RationalFunction::from_poly(Polynomial::from_ints(&[-q, 1]));
    for entry in matrix[0].iter_mut().skip(1) {
        *entry = RationalFunction::from_poly(z.clone());
    }
    rhs[0] = RationalFunction::from_poly(z.clone());

    for (hj, h) in set.words().iter().enumerate() {
        matrix[hj + 1][0] = RationalFunction::one();
        for (gj, g) in set.words().iter().enumerate() {
            let bits = correlate(g, h)?;
            let poly = &z * &correlation_poly(&bits);
            matrix[hj + 1][gj + 1] = -&RationalFunction::from_poly(poly);
        }
    }

    Ok(AvoidanceSystem {
        matrix,
        rhs,
        labels: labels_for(set),
    })
}

/// Solve the system exactly.
pub fn solve(system: &AvoidanceSystem) -> Result<GeneratingFunctionSet> {
    let mut solution = solve_linear(&system.matrix, &system.rhs)?;
    let avoiding = solution.remove(0);
    Ok(GeneratingFunctionSet {
        avoiding,
        ending_with: solution,
    })
}

/// Coefficients `f(0)..=f(n_max)` of `f` as a series in `1/z`.
///
/// Requires `deg(num) <= deg(den)`; both polynomials are reversed into
/// `x = 1/z` and the quotient is expanded by the division recurrence.
pub fn series(f: &RationalFunction, n_max: usize) -> Result<Vec<BigRational>> {
    if f.is_zero() {
        return Ok(vec![BigRational::zero(); n_max + 1]);
    }
    let num_degree = f.num().degree().expect("nonzero numerator");
    let den_degree = f.den().degree().expect("nonzero denominator");
    if num_degree > den_degree {
        return Err(Error::SeriesOrder {
            num_degree,
            den_degree,
        });
    }
    let num_rev = f.num().reversed(den_degree);
    let den_rev = f.den().reversed(den_degree);
    // den_rev(0) is den's leading coefficient, hence nonzero.
    Ok(expand(&num_rev, &den_rev, n_max))
}

/// Coefficients of `f` as an ordinary power series in `z`; requires a
/// nonzero constant term in the denominator. This is the same recurrence as
/// [`series`] without the `1/z` reversal.
pub fn power_series(f: &RationalFunction, n_max: usize) -> Result<Vec<BigRational>> {
    if f.den().coeff(0).is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    Ok(expand(f.num(), f.den(), n_max))
}

// Quotient expansion: c[n] = (num[n] - sum_{k=1..n} den[k] c[n-k]) / den[0].
fn expand(num: &Polynomial, den: &Polynomial, n_max: usize) -> Vec<BigRational> {
    let d0 = den.coeff(0);
    debug_assert!(!d0.is_zero());
    let mut out: Vec<BigRational> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut acc = num.coeff(n);
        for k in 1..=n.min(den.degree().unwrap_or(0)) {
            let dk = den.coeff(k);
            if !dk.is_zero() {
                acc -= dk * &out[n - k];
            }
        }
        out.push(acc / &d0);
    }
    out
}

/// Build, solve, and expand in one step: the counts of weight-`n` strings
/// avoiding the set, for `n = 0..=n_max`. Every entry must come out a
/// nonnegative integer.
pub fn count_avoiding(
    alphabet: &WeightedAlphabet,
    set: &PatternSet,
    n_max: usize,
) -> Result<Vec<BigUint>> {
    let system = build_system(alphabet, set)?;
    let gfs = solve(&system)?;
    let coeffs = series(&gfs.avoiding, n_max)?;
    coeffs
        .into_iter()
        .enumerate()
        .map(|(n, c)| {
            if c.is_integer() && !c.is_negative() {
                Ok(c.to_integer().to_biguint().expect("nonnegative"))
            } else {
                Err(Error::NonIntegerCount {
                    n,
                    value: c.to_string(),
                })
            }
        })
        .collect()
}
