//! One-sided random walks: the exact probability that a monotone walk with a
//! given step distribution ever lands on square `m`.
//!
//! `P(0) = 1` and `P(m) = sum over steps i of p_i * P(m - i)` with `P` zero
//! on negative arguments. The generating function `g(z) = sum P(m) z^m`
//! equals `1/(1 - p(z))` where `p(z) = sum p_i z^i`, and `P(m)` tends to
//! `1/mu` with `mu` the mean step size.

use num_traits::{One, Signed, Zero};

use crate::algebra::{BigRational, Polynomial, RationalFunction};
use crate::error::{Error, Result};

/// A finitely supported step-size distribution on the positive integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepDistribution {
    // (step, probability) with probability > 0, sorted by step
    probs: Vec<(u64, BigRational)>,
}

impl StepDistribution {
    /// Validate and build: steps at least 1 and pairwise distinct,
    /// probabilities nonnegative and summing to exactly 1. Zero-probability
    /// entries are dropped.
    pub fn new(entries: Vec<(u64, BigRational)>) -> Result<Self> {
        let mut probs: Vec<(u64, BigRational)> = Vec::new();
        let mut sum = BigRational::zero();
        for (step, p) in entries {
            if step == 0 {
                return Err(Error::InvalidArgument("step sizes must be positive".into()));
            }
            if p.is_negative() {
                return Err(Error::InvalidArgument(format!(
                    "negative probability for step {step}"
                )));
            }
            if probs.iter().any(|(s, _)| *s == step) {
                return Err(Error::InvalidArgument(format!("duplicate step {step}")));
            }
            sum += &p;
            if !p.is_zero() {
                probs.push((step, p));
            }
        }
        if !sum.is_one() {
            return Err(Error::BadDistribution {
                sum: sum.to_string(),
            });
        }
        probs.sort_by_key(|(s, _)| *s);
        Ok(StepDistribution { probs })
    }

    /// One fair six-sided die.
    pub fn fair_die() -> Self {
        let sixth = BigRational::new(1.into(), 6.into());
        StepDistribution {
            probs: (1..=6).map(|i| (i, sixth.clone())).collect(),
        }
    }

    /// The sum of two fair six-sided dice: `p_i = (6 - |i - 7|)/36` for
    /// `i` in `2..=12`.
    pub fn two_dice() -> Self {
        let probs = (2..=12u64)
            .map(|i| {
                let ways = 6 - (i as i64 - 7).abs();
                (i, BigRational::new(ways.into(), 36.into()))
            })
            .collect();
        StepDistribution { probs }
    }

    /// A single deterministic step of size `step`.
    pub fn deterministic(step: u64) -> Result<Self> {
        StepDistribution::new(vec![(step, BigRational::one())])
    }

    pub fn probs(&self) -> &[(u64, BigRational)] {
        &self.probs
    }

    pub fn probability(&self, step: u64) -> BigRational {
        self.probs
            .iter()
            .find(|(s, _)| *s == step)
            .map(|(_, p)| p.clone())
            .unwrap_or_else(BigRational::zero)
    }

    /// Largest step with positive probability.
    pub fn max_step(&self) -> u64 {
        self.probs.last().map(|(s, _)| *s).unwrap_or(0)
    }

    /// Mean step size; at least 1 because steps are.
    pub fn mean(&self) -> BigRational {
        let mut mu = BigRational::zero();
        for (step, p) in &self.probs {
            mu += BigRational::from_integer((*step).into()) * p;
        }
        mu
    }

    /// `p(z) = sum p_i z^i`.
    pub fn step_poly(&self) -> Polynomial {
        let mut coeffs = vec![BigRational::zero(); self.max_step() as usize + 1];
        for (step, p) in &self.probs {
            coeffs[*step as usize] = p.clone();
        }
        Polynomial::from_coeffs(coeffs)
    }
}

/// The values `P(0) ..= P(max_m)`, computed once by the recurrence and then
/// immutable.
#[derive(Clone, Debug)]
pub struct HitSeries {
    values: Vec<BigRational>,
}

impl HitSeries {
    pub fn compute(dist: &StepDistribution, max_m: usize) -> Self {
        let mut values = Vec::with_capacity(max_m + 1);
        values.push(BigRational::one());
        for m in 1..=max_m {
            let mut acc = BigRational::zero();
            for (step, p) in dist.probs() {
                let step = *step as usize;
                if step <= m {
                    acc += p * &values[m - step];
                }
            }
            values.push(acc);
        }
        HitSeries { values }
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn value(&self, m: usize) -> &BigRational {
        &self.values[m]
    }
}

/// Exact probability that the walk hits square `m`.
pub fn p_hit(dist: &StepDistribution, m: usize) -> BigRational {
    HitSeries::compute(dist, m).values[m].clone()
}

/// `g(z) = sum P(m) z^m = 1/(1 - p(z))` as an exact rational function.
pub fn hit_gf(dist: &StepDistribution) -> RationalFunction {
    let den = &Polynomial::one() - &dist.step_poly();
    RationalFunction::new(Polynomial::one(), den).expect("1 - p(z) is nonzero")
}

/// Limiting hit probability `1/mu`; equivalently the value of `(1-z) g(z)`
/// at `z = 1`.
pub fn asymptotic_hit(dist: &StepDistribution) -> BigRational {
    dist.mean().recip()
}
