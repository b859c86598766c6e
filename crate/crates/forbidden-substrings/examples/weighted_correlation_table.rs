//! The weighted correlation table of the four compositions of 3.
//!
//! Entry (row H, column G) is the polynomial of the multiset w(GH): for
//! every shift where a prefix of H matches a suffix of G, the weight of the
//! matched prefix contributes one power of z.
//!
//! Run with `cargo run --example weighted_correlation_table`.

use forbidden_substrings::correlation::{weighted_correlate, weighted_correlation_poly};
use forbidden_substrings::words::{all_compositions, WeightedAlphabet};

fn main() -> forbidden_substrings::Result<()> {
    let comps = WeightedAlphabet::Compositions;
    let words = all_compositions(3);

    let names: Vec<String> = words.iter().map(|w| comps.format_word(w)).collect();
    println!("multisets w(GH), row H, column G:");
    print!("{:>8}", "");
    for g in &names {
        print!("{g:>14}");
    }
    println!();
    for (hi, h) in words.iter().enumerate() {
        print!("{:>8}", names[hi]);
        for g in &words {
            let wc = weighted_correlate(g, h, &comps)?;
            print!("{:>14}", wc.to_string());
        }
        println!();
    }

    println!();
    println!("their polynomials, ascending coefficients:");
    for (hi, h) in words.iter().enumerate() {
        for (gi, g) in words.iter().enumerate() {
            let poly = weighted_correlation_poly(&weighted_correlate(g, h, &comps)?);
            if !poly.is_zero() {
                println!("w(G={}, H={})_z = {poly}", names[gi], names[hi]);
            }
        }
    }
    Ok(())
}
