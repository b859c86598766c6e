//! Count compositions of n that avoid every composition of m in consecutive
//! positions, end to end: build the linear system, solve it to a rational
//! generating function, and expand the series.
//!
//! Run with `cargo run --example compositions_avoiding`.

use forbidden_substrings::solver::{build_system, series, solve};
use forbidden_substrings::words::{all_compositions, PatternSet, WeightedAlphabet};

fn main() -> forbidden_substrings::Result<()> {
    let m = 3;
    let alphabet = WeightedAlphabet::Compositions;
    let set = PatternSet::new(alphabet.clone(), all_compositions(m))?;
    println!("forbidden set: {set}");

    let system = build_system(&alphabet, &set)?;
    println!(
        "system size: {} unknowns {:?}",
        system.size(),
        system.labels
    );

    let gfs = solve(&system)?;
    println!("F(z) as num/den, ascending coefficients:");
    println!("  num: {}", gfs.avoiding.num());
    println!("  den: {}", gfs.avoiding.den());

    println!("counts of compositions of n avoiding all compositions of {m}:");
    for (n, count) in series(&gfs.avoiding, 16)?.iter().enumerate() {
        println!("  {n:>2}  {count}");
    }

    // The per-pattern functions F_H count strings whose only forbidden
    // occurrence is H at the very end.
    for (word, f_h) in set.words().iter().zip(&gfs.ending_with) {
        println!(
            "F[{}]: num {} den {}",
            set.format_word(word),
            f_h.num(),
            f_h.den()
        );
    }
    Ok(())
}
