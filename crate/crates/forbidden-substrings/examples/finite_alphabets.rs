//! Avoidance counting over finite alphabets, unweighted and weighted.
//!
//! Run with `cargo run --example finite_alphabets`.

use forbidden_substrings::solver::{build_classical_system, build_system, series, solve};
use forbidden_substrings::words::{PatternSet, WeightedAlphabet};

fn main() -> forbidden_substrings::Result<()> {
    // Binary strings avoiding "aa": the counts are Fibonacci-like.
    let ab = WeightedAlphabet::unit("ab")?;
    let set = PatternSet::new(ab.clone(), vec![ab.word_from_symbols(&["a", "a"])?])?;

    let weighted = solve(&build_system(&ab, &set)?)?;
    println!("binary strings avoiding aa:");
    println!(
        "  F = {} / {}",
        weighted.avoiding.num(),
        weighted.avoiding.den()
    );
    println!(
        "  counts: {:?}",
        series(&weighted.avoiding, 10)?
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
    );

    // The same system can be assembled the classical way, from correlation
    // bitstrings; on unit-weight alphabets both routes agree.
    let classical = solve(&build_classical_system(&ab, &set)?)?;
    assert_eq!(weighted.avoiding, classical.avoiding);
    println!("  classical unit-weight route agrees");
    println!();

    // A genuinely weighted alphabet: a weighs 1, b weighs 2, forbid "ab".
    let mixed = WeightedAlphabet::finite(vec![("a".into(), 1), ("b".into(), 2)])?;
    let set = PatternSet::new(mixed.clone(), vec![mixed.word_from_symbols(&["a", "b"])?])?;
    let gfs = solve(&build_system(&mixed, &set)?)?;
    println!("strings over a:1, b:2 avoiding ab, by total weight:");
    for (n, count) in series(&gfs.avoiding, 12)?.iter().enumerate() {
        println!("  {n:>2}  {count}");
    }
    Ok(())
}
