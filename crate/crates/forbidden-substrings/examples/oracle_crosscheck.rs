//! Cross-check the solver against brute-force enumeration.
//!
//! Run with `cargo run --example oracle_crosscheck --release`.

use forbidden_substrings::oracle::{count_avoiding_all_of_weight, oracle_series, EnumConfig};
use forbidden_substrings::solver::count_avoiding;
use forbidden_substrings::words::{all_compositions, PatternSet, WeightedAlphabet};

fn main() -> forbidden_substrings::Result<()> {
    let cfg = EnumConfig::default();
    let alphabet = WeightedAlphabet::Compositions;
    let max_n = 16;

    for m in 2..=4 {
        let set = PatternSet::new(alphabet.clone(), all_compositions(m))?;
        let solver = count_avoiding(&alphabet, &set, max_n as usize)?;
        let oracle = oracle_series(&alphabet, &set, max_n, &cfg)?;

        print!("m = {m}:");
        for (n, count) in oracle.iter().enumerate() {
            assert_eq!(
                solver[n],
                count.avoiding.into(),
                "solver vs oracle at n={n}"
            );
            // A second oracle that never touches the pattern machinery:
            // prefix-sum bitmasks of compositions.
            let windows = count_avoiding_all_of_weight(m, n as u64, &cfg)?;
            assert_eq!(count.avoiding, windows, "two oracles at n={n}");
            print!(" {}", count.avoiding);
        }
        println!();
    }
    println!("solver, pattern oracle, and window oracle all agree for n <= {max_n}");
    Ok(())
}
