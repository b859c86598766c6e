//! Acceptance suite: one test per criterion, each printing a PASS line
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Everything here is exact arithmetic; the only tolerances are the ones the
//! criteria state themselves (a 10^-6 bound compared with exact rationals,
//! and wall-clock ceilings).

use std::time::Instant;

use num_bigint::BigUint;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use forbidden_substrings::algebra::{rat, ratio, BigRational, Polynomial, RationalFunction};
use forbidden_substrings::correlation::{
    correlate, correlation_poly, weighted_correlate, weighted_correlation_poly,
};
use forbidden_substrings::oracle::{
    count_avoiding_initial, oracle_series, EnumConfig, OracleCount,
};
use forbidden_substrings::solver::{
    build_classical_system, build_system, count_avoiding, series, solve,
};
use forbidden_substrings::walks::{asymptotic_hit, hit_gf, HitSeries, StepDistribution};
use forbidden_substrings::words::{all_compositions, Letter, PatternSet, WeightedAlphabet, Word};

fn comps() -> WeightedAlphabet {
    WeightedAlphabet::Compositions
}

fn comps_of_three() -> PatternSet {
    PatternSet::new(comps(), all_compositions(3)).unwrap()
}

fn golden_f() -> RationalFunction {
    RationalFunction::new(
        Polynomial::from_ints(&[0, 0, 0, 1, 0, -2, 0, 0, 1]),
        Polynomial::from_ints(&[1, 1, -1, -1, -1, 1, -1, -1, 1]),
    )
    .unwrap()
}

fn pass(n: usize, title: &str, start: Instant) {
    println!(
        "acceptance {n} ({title}): PASS ({} ms)",
        start.elapsed().as_millis()
    );
}

#[test]
fn acceptance_1_golden_generating_function() {
    let start = Instant::now();
    let gfs = solve(&build_system(&comps(), &comps_of_three()).unwrap()).unwrap();
    assert_eq!(gfs.avoiding, golden_f());
    assert!(start.elapsed().as_secs_f64() < 1.0, "budget: < 1 s");
    pass(1, "golden generating function", start);
}

#[test]
fn acceptance_2_golden_series() {
    let start = Instant::now();
    let counts = count_avoiding(&comps(), &comps_of_three(), 8).unwrap();
    let expected: Vec<BigUint> = [1u32, 1, 2, 0, 2, 3, 9, 12, 20]
        .iter()
        .map(|&v| BigUint::from(v))
        .collect();
    assert_eq!(counts, expected);
    assert!(start.elapsed().as_secs_f64() < 1.0, "budget: < 1 s");
    pass(2, "golden series", start);
}

#[test]
fn acceptance_3_correlation_goldens() {
    let start = Instant::now();

    let ab = WeightedAlphabet::unit("ab").unwrap();
    let word = |s: &str| {
        ab.word_from_symbols(&s.chars().map(|c| c.to_string()).collect::<Vec<_>>())
            .unwrap()
    };
    let bits = correlate(&word("ababba"), &word("abbab")).unwrap();
    assert_eq!(bits.to_string(), "001001");
    assert_eq!(
        correlation_poly(&bits),
        Polynomial::from_ints(&[1, 0, 0, 1])
    );

    // Full 16-entry weighted table for {3, 21, 12, 111}; row H, column G.
    let cword = |parts: &[u64]| {
        comps()
            .word(parts.iter().map(|&p| Letter(p)).collect::<Vec<_>>())
            .unwrap()
    };
    let words = [
        cword(&[3]),
        cword(&[2, 1]),
        cword(&[1, 2]),
        cword(&[1, 1, 1]),
    ];
    let table: [[&[i64]; 4]; 4] = [
        [&[0, 0, 0, 1], &[], &[], &[]],
        [&[], &[0, 0, 0, 1], &[0, 0, 1], &[]],
        [&[], &[0, 1], &[0, 0, 0, 1], &[0, 1]],
        [&[], &[0, 1], &[], &[0, 1, 1, 1]],
    ];
    for (hi, h) in words.iter().enumerate() {
        for (gi, g) in words.iter().enumerate() {
            let got = weighted_correlation_poly(&weighted_correlate(g, h, &comps()).unwrap());
            assert_eq!(
                got,
                Polynomial::from_ints(table[hi][gi]),
                "table entry row {hi}, column {gi}"
            );
        }
    }
    // Spot-check the multiset itself for the all-ones word.
    assert_eq!(
        weighted_correlate(&words[3], &words[3], &comps())
            .unwrap()
            .weights(),
        &[1, 2, 3]
    );
    pass(3, "correlation goldens", start);
}

fn assert_solver_matches_oracle(
    alphabet: &WeightedAlphabet,
    set: &PatternSet,
    max_n: u64,
    cfg: &EnumConfig,
) -> Vec<OracleCount> {
    let solver = count_avoiding(alphabet, set, max_n as usize).unwrap();
    let oracle = oracle_series(alphabet, set, max_n, cfg).unwrap();
    for (n, count) in oracle.iter().enumerate() {
        assert_eq!(
            solver[n],
            BigUint::from(count.avoiding),
            "solver vs oracle for set {set} at n={n}"
        );
    }
    oracle
}

/// Deterministic random reduced pattern sets over a 3-letter weighted
/// alphabet, weights drawn from 1..=3.
fn random_weighted_cases(
    count: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<(WeightedAlphabet, PatternSet)> {
    let mut cases = Vec::new();
    while cases.len() < count {
        let alphabet = WeightedAlphabet::finite(
            ["a", "b", "c"]
                .iter()
                .map(|s| (s.to_string(), rng.gen_range(1..=3u64)))
                .collect(),
        )
        .unwrap();
        let n_words = rng.gen_range(2..=4);
        let words: Vec<Word> = (0..n_words)
            .map(|_| {
                let len = rng.gen_range(1..=3);
                let letters = (0..len).map(|_| Letter(rng.gen_range(0..3u64))).collect();
                alphabet.word(letters).unwrap()
            })
            .collect();
        match PatternSet::new(alphabet.clone(), words) {
            Ok(set) => {
                let reduced = set.reduce();
                assert!(reduced.is_reduced() && !reduced.is_empty());
                cases.push((alphabet, reduced));
            }
            Err(_) => continue, // duplicate draw; try again
        }
    }
    cases
}

#[test]
fn acceptance_4_oracle_equivalence_sweep() {
    let start = Instant::now();
    let cfg = EnumConfig::default();

    for m in 2..=5u64 {
        let set = PatternSet::new(comps(), all_compositions(m)).unwrap();
        assert_solver_matches_oracle(&comps(), &set, 18, &cfg);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for (alphabet, set) in random_weighted_cases(5, &mut rng) {
        assert_solver_matches_oracle(&alphabet, &set, 14, &cfg);
    }

    assert!(start.elapsed().as_secs_f64() < 60.0, "budget: < 60 s");
    pass(4, "oracle equivalence sweep", start);
}

#[test]
fn acceptance_5_classical_reduction() {
    let start = Instant::now();
    let ab = WeightedAlphabet::unit("ab").unwrap();
    let set =
        PatternSet::new(ab.clone(), vec![ab.word_from_symbols(&["a", "a"]).unwrap()]).unwrap();

    let weighted = solve(&build_system(&ab, &set).unwrap()).unwrap();
    let classical = solve(&build_classical_system(&ab, &set).unwrap()).unwrap();
    let weighted_series = series(&weighted.avoiding, 16).unwrap();
    assert_eq!(weighted_series, series(&classical.avoiding, 16).unwrap());

    let oracle = oracle_series(&ab, &set, 16, &EnumConfig::default()).unwrap();
    for (n, count) in oracle.iter().enumerate() {
        assert_eq!(weighted_series[n], rat(count.avoiding as i64), "n={n}");
    }
    // Fibonacci-like head of the sequence.
    let head: Vec<BigRational> = [1, 2, 3, 5, 8, 13, 21].iter().map(|&v| rat(v)).collect();
    assert_eq!(&weighted_series[..7], &head[..]);
    pass(5, "classical unit-weight reduction", start);
}

/// Letters of the alphabet usable at weight <= limit, as (letter, weight).
fn letters_up_to(alphabet: &WeightedAlphabet, limit: u64) -> Vec<(Letter, u64)> {
    match alphabet {
        WeightedAlphabet::Finite(_) => alphabet
            .finite_letters()
            .unwrap()
            .into_iter()
            .filter(|&(_, w)| w <= limit)
            .collect(),
        WeightedAlphabet::Compositions => (1..=limit).map(|p| (Letter(p), p)).collect(),
    }
}

#[test]
fn acceptance_6_proof_identities() {
    let start = Instant::now();
    let cfg = EnumConfig::default();

    let ab = WeightedAlphabet::unit("ab").unwrap();
    let mixed = WeightedAlphabet::finite(vec![("a".into(), 1), ("b".into(), 2)]).unwrap();
    let configs: Vec<(WeightedAlphabet, PatternSet)> = vec![
        (
            comps(),
            PatternSet::new(comps(), all_compositions(2)).unwrap(),
        ),
        (
            comps(),
            PatternSet::new(comps(), all_compositions(3)).unwrap(),
        ),
        (
            ab.clone(),
            PatternSet::new(ab.clone(), vec![ab.word_from_symbols(&["a", "a"]).unwrap()]).unwrap(),
        ),
        (
            mixed.clone(),
            PatternSet::new(
                mixed.clone(),
                vec![
                    mixed.word_from_symbols(&["a", "b"]).unwrap(),
                    mixed.word_from_symbols(&["b", "b"]).unwrap(),
                ],
            )
            .unwrap(),
        ),
    ];

    let max_n = 15u64;
    for (alphabet, set) in configs {
        let max_k = set.words().iter().map(Word::weight).max().unwrap();
        let counts = oracle_series(&alphabet, &set, max_n + max_k, &cfg).unwrap();

        // Counting recurrence:
        // f(n+1) + sum_H f_H(n+1) = sum over letters with weight <= n+1 of
        // f(n+1 - w_h).
        for n in 0..max_n {
            let lhs = counts[n as usize + 1].avoiding
                + counts[n as usize + 1].ending_with.iter().sum::<u64>();
            let rhs: u64 = letters_up_to(&alphabet, n + 1)
                .iter()
                .map(|&(_, w)| counts[(n + 1 - w) as usize].avoiding)
                .sum();
            assert_eq!(lhs, rhs, "counting recurrence for {set} at n={n}");
        }

        // Concatenation identity, one equation per H:
        // f(n) = sum_G sum_{k in w(GH)} f_G(n+k).
        for h in set.words() {
            for n in 0..=max_n {
                let mut rhs = 0u64;
                for (gj, g) in set.words().iter().enumerate() {
                    let wc = weighted_correlate(g, h, &alphabet).unwrap();
                    for &k in wc.weights() {
                        rhs += counts[(n + k) as usize].ending_with[gj];
                    }
                }
                assert_eq!(
                    counts[n as usize].avoiding,
                    rhs,
                    "concatenation identity for {set}, H={}, n={n}",
                    set.format_word(h)
                );
            }
        }
    }
    pass(6, "proof identities on oracle counts", start);
}

#[test]
fn acceptance_7_determinant_degree() {
    let start = Instant::now();
    for m in 2..=4u64 {
        let set = PatternSet::new(comps(), all_compositions(m)).unwrap();
        let weight_sum: u64 = set.words().iter().map(Word::weight).sum();
        let det = build_system(&comps(), &set).unwrap().determinant();
        let z_minus_1 = RationalFunction::from_poly(Polynomial::from_ints(&[-1, 1]));
        let cleared = &z_minus_1 * &det;
        assert_eq!(cleared.den(), &Polynomial::one(), "m={m}");
        assert_eq!(
            cleared.num().degree(),
            Some(1 + weight_sum as usize),
            "m={m}"
        );
    }
    pass(7, "determinant degree", start);
}

/// Deterministic random distributions with exact rational probabilities.
fn random_distributions(count: usize, rng: &mut ChaCha8Rng) -> Vec<StepDistribution> {
    (0..count)
        .map(|_| {
            let support = rng.gen_range(2..=4usize);
            let mut steps: Vec<u64> = Vec::new();
            while steps.len() < support {
                let s = rng.gen_range(1..=6u64);
                if !steps.contains(&s) {
                    steps.push(s);
                }
            }
            let weights: Vec<i64> = (0..support).map(|_| rng.gen_range(1..=9i64)).collect();
            let total: i64 = weights.iter().sum();
            StepDistribution::new(
                steps
                    .into_iter()
                    .zip(weights)
                    .map(|(s, w)| (s, ratio(w, total)))
                    .collect(),
            )
            .unwrap()
        })
        .collect()
}

#[test]
fn acceptance_8_walks() {
    let start = Instant::now();
    let die = StepDistribution::fair_die();
    let dice = StepDistribution::two_dice();
    assert_eq!(asymptotic_hit(&die), ratio(2, 7));
    assert_eq!(asymptotic_hit(&dice), ratio(1, 7));

    // |P(m) - 2/7| < 10^-6 for 60 <= m <= 200, exact rationals throughout.
    let hits = HitSeries::compute(&die, 200);
    let target = ratio(2, 7);
    let bound = BigRational::new(1.into(), 1_000_000.into());
    for m in 60..=200 {
        let dev = (hits.value(m) - &target).abs();
        assert!(dev < bound, "deviation at m={m} is {dev}");
    }

    // Residue identity (1-z) g(z) at z=1 equals 1/mean, on 7 distributions.
    let mut rng = ChaCha8Rng::seed_from_u64(0xd1ce);
    let mut dists = vec![die, dice];
    dists.extend(random_distributions(5, &mut rng));
    assert_eq!(dists.len(), 7);
    let one_minus_z = RationalFunction::from_poly(Polynomial::from_ints(&[1, -1]));
    for dist in &dists {
        let at_one = (&one_minus_z * &hit_gf(dist)).eval(&rat(1)).unwrap();
        assert_eq!(at_one, asymptotic_hit(dist), "residue for {dist:?}");
    }

    assert!(start.elapsed().as_secs_f64() < 5.0, "budget: < 5 s");
    pass(8, "one-sided walks", start);
}

#[test]
fn acceptance_9_initial_avoidance_closed_form() {
    let start = Instant::now();
    let cfg = EnumConfig::default();
    for n in 2..=16u64 {
        for m in 1..n {
            let count = count_avoiding_initial(m, n, &cfg).unwrap();
            assert_eq!(count, 1 << (n - 2), "m={m}, n={n}");
        }
    }
    pass(9, "initial-avoidance closed form", start);
}
