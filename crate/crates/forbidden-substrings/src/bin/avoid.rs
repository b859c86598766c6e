//! Command-line front end.
//!
//! Exit codes: 0 success, 1 check mismatch, 2 parse or argument error,
//! 3 non-reduced pattern set, 4 singular system, 5 enumeration budget
//! exceeded.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use forbidden_substrings::algebra::{decimal_string, Polynomial, RationalFunction};
use forbidden_substrings::oracle::{oracle_series, EnumConfig};
use forbidden_substrings::problem::{
    parse_alphabet_flag, parse_distribution, parse_word_flag, ProblemSpec,
};
use forbidden_substrings::solver::{build_system, series, solve};
use forbidden_substrings::walks::{asymptotic_hit, p_hit};
use forbidden_substrings::words::{all_compositions, PatternSet, WeightedAlphabet};
use forbidden_substrings::Error;

#[derive(Parser)]
#[command(
    name = "avoid",
    version,
    about = "Count weighted strings avoiding forbidden substrings, exactly"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct AlphabetArgs {
    /// Finite alphabet: one character per unit-weight letter ("ab") or
    /// symbol:weight pairs ("a:1,b:2")
    #[arg(long, conflicts_with = "compositions")]
    finite: Option<String>,
    /// The composition alphabet {1,2,3,...} with the weight of i equal to i
    #[arg(long)]
    compositions: bool,
}

impl AlphabetArgs {
    fn resolve(&self) -> Result<WeightedAlphabet, Error> {
        match (&self.finite, self.compositions) {
            (Some(letters), false) => parse_alphabet_flag(letters),
            (None, true) => Ok(WeightedAlphabet::Compositions),
            _ => Err(Error::Parse(
                "choose exactly one of --finite or --compositions".into(),
            )),
        }
    }
}

#[derive(Args)]
struct OracleArgs {
    /// Maximum nominal number of strings the oracle may enumerate
    #[arg(long, default_value_t = 1 << 24)]
    budget: u64,
    /// Worker threads for enumeration; results are identical for any value
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

impl OracleArgs {
    fn config(&self) -> EnumConfig {
        EnumConfig {
            budget: self.budget,
            threads: self.jobs,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the correlation bitstring of two words and its polynomial
    Correlate {
        #[command(flatten)]
        alphabet: AlphabetArgs,
        /// The word the bits are indexed by
        #[arg(long)]
        g: String,
        /// The word slid under it
        #[arg(long)]
        h: String,
    },
    /// Print the weighted correlation multiset of two words and its polynomial
    WeightedCorrelate {
        #[command(flatten)]
        alphabet: AlphabetArgs,
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
    },
    /// Solve a problem file to a generating function, optionally with series
    Solve {
        /// JSON problem file
        problem: PathBuf,
        /// Also print counts for n = 0..=N as "n<TAB>f(n)" lines
        #[arg(long, value_name = "N")]
        series: Option<usize>,
        /// Reduce the forbidden set before solving instead of rejecting it
        #[arg(long)]
        auto_reduce: bool,
        /// Print the parsed problem back as canonical JSON and exit
        #[arg(long)]
        echo: bool,
    },
    /// Counts of compositions of n avoiding all compositions of m
    Compositions {
        #[arg(long)]
        m: u64,
        /// Print counts for n = 0..=N
        #[arg(long, value_name = "N")]
        series: Option<usize>,
    },
    /// Expand a rational function in 1/z into counting coefficients
    Series {
        /// Numerator as an ascending coefficient list, e.g. "[0, 0, 0, 1]"
        #[arg(long)]
        num: String,
        /// Denominator as an ascending coefficient list
        #[arg(long)]
        den: String,
        /// Last coefficient index to print
        #[arg(short, long)]
        n: usize,
    },
    /// Brute-force counts for a problem file
    Oracle {
        problem: PathBuf,
        /// Count weights 0..=N
        #[arg(long, value_name = "N")]
        max_n: u64,
        #[command(flatten)]
        limits: OracleArgs,
        #[arg(long)]
        echo: bool,
    },
    /// Compare the solver series against brute force; exit 1 on mismatch
    Check {
        problem: PathBuf,
        /// Compare weights 0..=N
        #[arg(long, value_name = "N")]
        max_n: u64,
        #[command(flatten)]
        limits: OracleArgs,
        #[arg(long)]
        auto_reduce: bool,
        /// Perturb the solver series to exercise the mismatch path
        #[arg(long, hide = true)]
        inject_error: bool,
        #[arg(long)]
        echo: bool,
    },
    /// Hit probabilities of a one-sided random walk
    Walk {
        /// "die1", "dice2", or step:probability pairs like "1:1/2,2:1/2"
        #[arg(long)]
        dist: String,
        /// Print P(m) exactly and as a 12-significant-digit decimal
        #[arg(
            long,
            required_unless_present = "asymptote",
            conflicts_with = "asymptote"
        )]
        m: Option<usize>,
        /// Print the limiting hit probability 1/mean exactly
        #[arg(long)]
        asymptote: bool,
    },
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::NotReduced { .. } => 3,
        Error::Singular { .. } => 4,
        Error::BudgetExceeded { .. } => 5,
        _ => 2,
    }
}

fn load_problem(path: &Path) -> Result<ProblemSpec, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    ProblemSpec::from_json(&text)
}

fn print_generating_function(f: &RationalFunction) {
    println!("num: {}", f.num());
    println!("den: {}", f.den());
}

fn print_series_lines(f: &RationalFunction, n_max: usize) -> Result<(), Error> {
    for (n, c) in series(f, n_max)?.iter().enumerate() {
        println!("{n}\t{c}");
    }
    Ok(())
}

fn solve_and_print(
    alphabet: &WeightedAlphabet,
    set: &PatternSet,
    series_n: Option<usize>,
) -> Result<(), Error> {
    let gfs = solve(&build_system(alphabet, set)?)?;
    print_generating_function(&gfs.avoiding);
    if let Some(n_max) = series_n {
        print_series_lines(&gfs.avoiding, n_max)?;
    }
    Ok(())
}

fn run(cmd: Cmd) -> Result<u8, Error> {
    match cmd {
        Cmd::Correlate { alphabet, g, h } => {
            let alphabet = alphabet.resolve()?;
            let g = parse_word_flag(&alphabet, &g)?;
            let h = parse_word_flag(&alphabet, &h)?;
            let bits = forbidden_substrings::correlation::correlate(&g, &h)?;
            println!("{bits}");
            println!(
                "{}",
                forbidden_substrings::correlation::correlation_poly(&bits)
            );
        }
        Cmd::WeightedCorrelate { alphabet, g, h } => {
            let alphabet = alphabet.resolve()?;
            let g = parse_word_flag(&alphabet, &g)?;
            let h = parse_word_flag(&alphabet, &h)?;
            let wc = forbidden_substrings::correlation::weighted_correlate(&g, &h, &alphabet)?;
            println!("{wc}");
            println!(
                "{}",
                forbidden_substrings::correlation::weighted_correlation_poly(&wc)
            );
        }
        Cmd::Solve {
            problem,
            series,
            auto_reduce,
            echo,
        } => {
            let spec = load_problem(&problem)?;
            if echo {
                println!("{}", spec.to_json());
                return Ok(0);
            }
            let (alphabet, set) = spec.build()?;
            let set = if auto_reduce { set.reduce() } else { set };
            solve_and_print(&alphabet, &set, series)?;
        }
        Cmd::Compositions { m, series } => {
            if m < 1 {
                return Err(Error::InvalidArgument("m must be at least 1".into()));
            }
            let alphabet = WeightedAlphabet::Compositions;
            let set = PatternSet::new(alphabet.clone(), all_compositions(m))?;
            solve_and_print(&alphabet, &set, series)?;
        }
        Cmd::Series { num, den, n } => {
            let f = RationalFunction::new(Polynomial::parse(&num)?, Polynomial::parse(&den)?)?;
            print_series_lines(&f, n)?;
        }
        Cmd::Oracle {
            problem,
            max_n,
            limits,
            echo,
        } => {
            let spec = load_problem(&problem)?;
            if echo {
                println!("{}", spec.to_json());
                return Ok(0);
            }
            let (alphabet, set) = spec.build()?;
            for count in oracle_series(&alphabet, &set, max_n, &limits.config())? {
                println!("{}\t{}", count.n, count.avoiding);
            }
        }
        Cmd::Check {
            problem,
            max_n,
            limits,
            auto_reduce,
            inject_error,
            echo,
        } => {
            let spec = load_problem(&problem)?;
            if echo {
                println!("{}", spec.to_json());
                return Ok(0);
            }
            let (alphabet, set) = spec.build()?;
            let set = if auto_reduce { set.reduce() } else { set };
            let mut solver_counts =
                forbidden_substrings::solver::count_avoiding(&alphabet, &set, max_n as usize)?;
            if inject_error {
                let n = (max_n as usize).min(1);
                solver_counts[n] += 1u32;
            }
            let oracle_counts = oracle_series(&alphabet, &set, max_n, &limits.config())?;
            for (n, oracle) in oracle_counts.iter().enumerate() {
                let solver = &solver_counts[n];
                if *solver != oracle.avoiding.into() {
                    println!(
                        "mismatch at n={n}: solver={solver} oracle={}",
                        oracle.avoiding
                    );
                    return Ok(1);
                }
            }
            println!("ok: solver matches oracle for n <= {max_n}");
        }
        Cmd::Walk { dist, m, asymptote } => {
            let dist = parse_distribution(&dist)?;
            if asymptote {
                println!("{}", asymptotic_hit(&dist));
            } else {
                let m = m.expect("clap enforces --m without --asymptote");
                let p = p_hit(&dist, m);
                println!("{p}");
                println!("{}", decimal_string(&p, 12));
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
