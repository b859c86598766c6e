//! Correlation bitstrings: slide one word under another and record at which
//! shifts a prefix of the second matches a suffix of the first.
//!
//! Run with `cargo run --example correlate`.

use forbidden_substrings::correlation::{correlate, correlation_poly};
use forbidden_substrings::problem::parse_word_flag;
use forbidden_substrings::words::WeightedAlphabet;

fn main() -> forbidden_substrings::Result<()> {
    let ab = WeightedAlphabet::unit("ab")?;
    let g = parse_word_flag(&ab, "ababba")?;
    let h = parse_word_flag(&ab, "abbab")?;

    let bits = correlate(&g, &h)?;
    println!("correlation of g = ababba with h = abbab: {bits}");
    println!(
        "as a polynomial (ascending coefficients): {}",
        correlation_poly(&bits)
    );
    println!();

    // The leftmost bit of an autocorrelation is always 1: a word overlaps
    // itself fully at shift zero.
    for text in ["ababba", "aaaa", "abab"] {
        let w = parse_word_flag(&ab, text)?;
        let auto = correlate(&w, &w)?;
        println!("autocorrelation of {text}: {auto}");
    }
    Ok(())
}
