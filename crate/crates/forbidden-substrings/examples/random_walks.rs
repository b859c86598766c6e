//! One-sided random walks: exact hit probabilities, their generating
//! function, and the limiting value 1/mean.
//!
//! Run with `cargo run --example random_walks`.

use forbidden_substrings::algebra::{decimal_string, Polynomial, RationalFunction};
use forbidden_substrings::solver::power_series;
use forbidden_substrings::walks::{asymptotic_hit, hit_gf, HitSeries, StepDistribution};

fn main() -> forbidden_substrings::Result<()> {
    let die = StepDistribution::fair_die();
    let hits = HitSeries::compute(&die, 60);

    println!("one fair die: probability of ever landing on square m");
    for m in [0, 1, 2, 3, 6, 12, 30, 60] {
        let p = hits.value(m);
        println!(
            "  P({m:>2}) = {:>14}  ~ {}",
            p.to_string(),
            decimal_string(p, 12)
        );
    }
    println!("  limit: {}", asymptotic_hit(&die));
    println!();

    // The generating function 1/(1 - p(z)) expands to the same values.
    let g = hit_gf(&die);
    println!("g(z) = num/den with num {} and den {}", g.num(), g.den());
    let coeffs = power_series(&g, 12)?;
    assert_eq!(&coeffs[..], &hits.values()[..13]);
    println!("series of g(z) reproduces the recurrence for m <= 12");

    // (1-z) g(z) evaluated at z=1 recovers the limit exactly.
    let one_minus_z = RationalFunction::from_poly(Polynomial::from_ints(&[1, -1]));
    let residue = (&one_minus_z * &g)
        .eval(&forbidden_substrings::algebra::rat(1))
        .unwrap();
    assert_eq!(residue, asymptotic_hit(&die));
    println!("(1-z) g(z) at z=1 = {residue}");
    println!();

    let dice = StepDistribution::two_dice();
    println!(
        "two dice: P(40) ~ {}",
        decimal_string(&forbidden_substrings::walks::p_hit(&dice, 40), 12)
    );
    println!("two dice limit: {}", asymptotic_hit(&dice));
    Ok(())
}
