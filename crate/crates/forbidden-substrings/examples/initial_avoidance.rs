//! Exactly half of the compositions of n begin with a composition of m, for
//! every m < n: the count avoiding an initial composition of m is 2^{n-2},
//! independent of m. Verified here by brute force.
//!
//! Run with `cargo run --example initial_avoidance`.

use forbidden_substrings::oracle::{count_avoiding_initial, EnumConfig};

fn main() -> forbidden_substrings::Result<()> {
    let cfg = EnumConfig::default();
    for n in 2..=14u64 {
        print!("n = {n:>2}: ");
        for m in 1..n {
            let count = count_avoiding_initial(m, n, &cfg)?;
            assert_eq!(count, 1 << (n - 2), "m={m}, n={n}");
            print!("{count} ");
        }
        println!("  (= 2^{})", n - 2);
    }
    println!("the count never depends on m");
    Ok(())
}
