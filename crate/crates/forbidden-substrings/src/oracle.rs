//! Brute-force ground truth for the solver: enumerate strings directly and
//! count avoidance.
//!
//! Enumeration is depth-first in lexicographic letter order. A branch is
//! abandoned as soon as a forbidden word ends strictly inside the string
//! being built, because no extension of such a prefix can be counted: the
//! avoiding count wants no occurrence at all, and the per-pattern counts
//! want the single occurrence at the very end. The nominal number of
//! strings (before pruning) is checked against the budget up front.

use std::thread;

use crate::error::{Error, Result};
use crate::words::{Letter, PatternSet, WeightedAlphabet, Word};

/// Counts for one weight (or length) value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleCount {
    /// The weight or length that was enumerated.
    pub n: u64,
    /// Number of strings of that weight/length, forbidden or not.
    pub total: u64,
    /// Strings containing no member of the set.
    pub avoiding: u64,
    /// For each member `H` (in set order): strings whose unique forbidden
    /// occurrence is `H` at the very end.
    pub ending_with: Vec<u64>,
}

/// Enumeration limits and parallelism.
#[derive(Clone, Copy, Debug)]
pub struct EnumConfig {
    /// Maximum nominal string count; exceeding it is an error, not silence.
    pub budget: u64,
    /// Worker threads for the split over the first letter. Results are
    /// identical for any value.
    pub threads: usize,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            budget: 1 << 24,
            threads: 1,
        }
    }
}

impl EnumConfig {
    fn check(&self, required: u128) -> Result<()> {
        if required > self.budget as u128 {
            return Err(Error::BudgetExceeded {
                required,
                budget: self.budget,
            });
        }
        Ok(())
    }
}

// How the DFS decides when a string is complete.
#[derive(Clone, Copy)]
enum Goal {
    Length(usize),
    Weight(u64),
}

struct Partial {
    avoiding: u64,
    ending_with: Vec<u64>,
}

/// Number of patterns that are suffixes of `stack`. For a reduced set this
/// is at most 1, but the oracle stays honest on arbitrary sets.
fn suffix_hits(stack: &[Letter], patterns: &[Word], hit: &mut usize) -> usize {
    let mut count = 0;
    for (j, p) in patterns.iter().enumerate() {
        let pl = p.letters();
        if pl.len() <= stack.len() && &stack[stack.len() - pl.len()..] == pl {
            count += 1;
            *hit = j;
        }
    }
    count
}

fn dfs(
    stack: &mut Vec<Letter>,
    used_weight: u64,
    goal: Goal,
    choices: &[(Letter, u64)],
    patterns: &[Word],
    out: &mut Partial,
) {
    let complete = match goal {
        Goal::Length(len) => stack.len() == len,
        Goal::Weight(w) => used_weight == w,
    };
    if !stack.is_empty() {
        let mut hit = 0;
        let hits = suffix_hits(stack, patterns, &mut hit);
        if hits > 0 {
            // An occurrence ends here. Only a complete string with exactly
            // this one occurrence counts, toward the pattern it ends with.
            if complete && hits == 1 {
                out.ending_with[hit] += 1;
            }
            return;
        }
    }
    if complete {
        out.avoiding += 1;
        return;
    }
    for &(letter, weight) in choices {
        match goal {
            Goal::Length(_) => {}
            Goal::Weight(w) => {
                if used_weight + weight > w {
                    continue;
                }
            }
        }
        stack.push(letter);
        dfs(stack, used_weight + weight, goal, choices, patterns, out);
        stack.pop();
    }
}

fn run_enumeration(
    goal: Goal,
    choices: &[(Letter, u64)],
    set: &PatternSet,
    cfg: &EnumConfig,
) -> (u64, Vec<u64>) {
    let patterns = set.words();
    let empty_fits = match goal {
        Goal::Length(len) => len == 0,
        Goal::Weight(w) => w == 0,
    };
    if empty_fits {
        // Only the empty string; patterns are nonempty, so it avoids.
        return (1, vec![0; patterns.len()]);
    }

    // Independent subtrees per first letter, combined in letter order.
    let tasks: Vec<(Letter, u64)> = choices
        .iter()
        .copied()
        .filter(|&(_, w)| match goal {
            Goal::Length(_) => true,
            Goal::Weight(limit) => w <= limit,
        })
        .collect();

    let run_task = |&(letter, weight): &(Letter, u64)| {
        let mut out = Partial {
            avoiding: 0,
            ending_with: vec![0; patterns.len()],
        };
        let mut stack = vec![letter];
        dfs(&mut stack, weight, goal, choices, patterns, &mut out);
        out
    };

    let partials: Vec<Partial> = if cfg.threads <= 1 || tasks.len() <= 1 {
        tasks.iter().map(run_task).collect()
    } else {
        thread::scope(|scope| {
            let run_task = &run_task;
            let handles: Vec<_> = tasks
                .chunks(tasks.len().div_ceil(cfg.threads))
                .map(|chunk| scope.spawn(move || chunk.iter().map(run_task).collect::<Vec<_>>()))
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("enumeration worker panicked"))
                .collect()
        })
    };

    let mut avoiding = 0;
    let mut ending_with = vec![0u64; patterns.len()];
    for p in partials {
        avoiding += p.avoiding;
        for (acc, v) in ending_with.iter_mut().zip(&p.ending_with) {
            *acc += v;
        }
    }
    (avoiding, ending_with)
}

fn finite_choices(alphabet: &WeightedAlphabet) -> Result<Vec<(Letter, u64)>> {
    alphabet
        .finite_letters()
        .ok_or_else(|| Error::InvalidArgument("this oracle needs a finite alphabet".into()))
}

/// Enumerate all `q^n` length-`n` strings over a finite alphabet.
pub fn count_strings_avoiding(
    alphabet: &WeightedAlphabet,
    n: u64,
    set: &PatternSet,
    cfg: &EnumConfig,
) -> Result<OracleCount> {
    if alphabet != set.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let choices = finite_choices(alphabet)?;
    let q = choices.len() as u128;
    let total = q
        .checked_pow(u32::try_from(n).map_err(|_| Error::BudgetExceeded {
            required: u128::MAX,
            budget: cfg.budget,
        })?)
        .unwrap_or(u128::MAX);
    cfg.check(total)?;

    let (avoiding, ending_with) = run_enumeration(Goal::Length(n as usize), &choices, set, cfg);
    Ok(OracleCount {
        n,
        total: total as u64,
        avoiding,
        ending_with,
    })
}

/// Enumerate all weight-`n` strings over a finite weighted alphabet.
pub fn count_weight_avoiding(
    alphabet: &WeightedAlphabet,
    n: u64,
    set: &PatternSet,
    cfg: &EnumConfig,
) -> Result<OracleCount> {
    if alphabet == &WeightedAlphabet::Compositions {
        return count_compositions_avoiding(n, set, cfg);
    }
    if alphabet != set.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let choices = finite_choices(alphabet)?;

    // total(n) = sum over letters of total(n - w), computed before enumerating.
    let mut totals: Vec<u128> = vec![0; n as usize + 1];
    totals[0] = 1;
    for k in 1..=n as usize {
        for &(_, w) in &choices {
            if w as usize <= k {
                totals[k] = totals[k].saturating_add(totals[k - w as usize]);
            }
        }
    }
    cfg.check(totals[n as usize])?;

    let (avoiding, ending_with) = run_enumeration(Goal::Weight(n), &choices, set, cfg);
    Ok(OracleCount {
        n,
        total: totals[n as usize] as u64,
        avoiding,
        ending_with,
    })
}

/// Enumerate all `2^{n-1}` compositions of `n`.
pub fn count_compositions_avoiding(
    n: u64,
    set: &PatternSet,
    cfg: &EnumConfig,
) -> Result<OracleCount> {
    if set.alphabet() != &WeightedAlphabet::Compositions {
        return Err(Error::AlphabetMismatch);
    }
    let total: u128 = if n == 0 { 1 } else { 1u128 << (n - 1).min(127) };
    cfg.check(total)?;

    let choices: Vec<(Letter, u64)> = (1..=n).map(|p| (Letter(p), p)).collect();
    let (avoiding, ending_with) = run_enumeration(Goal::Weight(n), &choices, set, cfg);
    Ok(OracleCount {
        n,
        total: total as u64,
        avoiding,
        ending_with,
    })
}

/// Oracle counts for all weights `0..=n_max` (weight equals length on
/// unit-weight alphabets).
pub fn oracle_series(
    alphabet: &WeightedAlphabet,
    set: &PatternSet,
    n_max: u64,
    cfg: &EnumConfig,
) -> Result<Vec<OracleCount>> {
    (0..=n_max)
        .map(|n| count_weight_avoiding(alphabet, n, set, cfg))
        .collect()
}

/// Compositions of `n` with no consecutive run of parts summing to `m`.
///
/// This is a second, independent oracle: a composition is encoded by its set
/// of prefix sums (a bitmask with bits 0 and `n` always set), and a weight-`m`
/// window exists exactly when `mask & (mask >> m) != 0`. No pattern machinery
/// is involved.
pub fn count_avoiding_all_of_weight(m: u64, n: u64, cfg: &EnumConfig) -> Result<u64> {
    if m < 1 {
        return Err(Error::InvalidArgument(
            "window weight must be positive".into(),
        ));
    }
    if n == 0 {
        return Ok(1);
    }
    if n > 64 {
        return Err(Error::BudgetExceeded {
            required: u128::MAX,
            budget: cfg.budget,
        });
    }
    cfg.check(1u128 << (n - 1))?;

    let mut count = 0u64;
    for cuts in 0..(1u128 << (n - 1)) {
        let mask: u128 = 1 | (cuts << 1) | (1 << n);
        if mask & (mask >> m) == 0 {
            count += 1;
        }
    }
    Ok(count)
}

/// Compositions of `n` whose prefix sums never hit `m`; requires `m < n`.
pub fn count_avoiding_initial(m: u64, n: u64, cfg: &EnumConfig) -> Result<u64> {
    if m < 1 || m >= n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= m < n, got m={m}, n={n}"
        )));
    }
    if n > 64 {
        return Err(Error::BudgetExceeded {
            required: u128::MAX,
            budget: cfg.budget,
        });
    }
    cfg.check(1u128 << (n - 1))?;

    let mut count = 0u64;
    for cuts in 0..(1u128 << (n - 1)) {
        let mask: u128 = 1 | (cuts << 1) | (1 << n);
        if mask & (1 << m) == 0 {
            count += 1;
        }
    }
    Ok(count)
}
