//! Command-line front end: identity verification, orbit enumeration, and
//! window conversions, with scriptable exit codes (0 success, 1 verification
//! mismatch, 2 usage error).

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use alcove::affine::Context;
use alcove::zperm::{ZContext, ZPerm};
use alcove::{BasisOrder, RootSystem};
use alcove_cli::{
    euler_report, oracle_outcome, palc_self_check, palc_table, parse_family, parse_type,
};

#[derive(Parser)]
#[command(
    name = "alcove",
    version,
    about = "Exact-arithmetic affine Weyl group toolkit",
    after_help = "Exit codes: 0 success, 1 verification failure, 2 usage error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compare the two sides of the Euler-product expansion coefficientwise
    VerifyEuler {
        /// Root system type: A, B, C, D or G
        r#type: String,
        rank: usize,
        /// Truncation degree of both series
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// List the contributing dominant weights with signs, dimensions and
    /// translation parts
    Palc {
        r#type: String,
        rank: usize,
        #[arg(long)]
        max_exponent: u64,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
        /// Re-derive and re-verify every row before printing
        #[arg(long)]
        self_check: bool,
    },
    /// Print the window of a group element given as a generator word
    Perm {
        /// Window family: A, B, C, Calt, D or G
        family: String,
        n: usize,
        /// Comma-separated generator indices, 0 = affine reflection
        /// (empty for the identity)
        #[arg(long, default_value = "")]
        word: String,
    },
    /// Decide whether a window file describes a group element
    CheckPerm {
        family: String,
        n: usize,
        /// Window file in the dump format of `perm`; reads stdin if omitted
        #[arg(long)]
        file: Option<String>,
    },
    /// Cross-check the alcove formulas against breadth-first enumeration
    Oracle {
        r#type: String,
        rank: usize,
        #[arg(long, default_value_t = 6)]
        max_len: u64,
        /// Extra random words for the parity check
        #[arg(long, default_value_t = 1000)]
        random_words: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {}", msg);
    ExitCode::from(2)
}

fn main() -> ExitCode {
    // die quietly when a downstream pipe closes (e.g. `alcove ... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match Cli::parse().command {
        Command::VerifyEuler {
            r#type,
            rank,
            degree,
            format,
        } => {
            let Some(tag) = parse_type(&r#type) else {
                return usage(&format!("unknown type {:?}", r#type));
            };
            let rs = match RootSystem::build(tag, rank, BasisOrder::Bourbaki) {
                Ok(rs) => rs,
                Err(e) => return usage(&e.to_string()),
            };
            let report = euler_report(&rs, degree);
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
                Format::Tsv => {
                    println!("type\trank\tdim_g\tdegree\tstatus");
                    let status = match &report.first_mismatch {
                        None => "equal".to_string(),
                        Some(m) => format!("mismatch at {} ({} vs {})", m.degree, m.euler, m.expansion),
                    };
                    println!("{}\t{}\t{}\t{}\t{}", report.r#type, report.rank, report.algebra_dim, report.degree, status);
                    println!("degree\teuler\texpansion");
                    for row in &report.coefficients {
                        println!("{}\t{}\t{}", row.degree, row.euler, row.expansion);
                    }
                }
            }
            if report.equal {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Palc {
            r#type,
            rank,
            max_exponent,
            format,
            self_check,
        } => {
            let Some(tag) = parse_type(&r#type) else {
                return usage(&format!("unknown type {:?}", r#type));
            };
            let rs = match RootSystem::build(tag, rank, BasisOrder::Bourbaki) {
                Ok(rs) => rs,
                Err(e) => return usage(&e.to_string()),
            };
            if self_check {
                match palc_self_check(&rs, max_exponent) {
                    Ok(n) => eprintln!("self-check: {} rows ok", n),
                    Err(e) => {
                        eprintln!("self-check failed: {}", e);
                        return ExitCode::from(1);
                    }
                }
            }
            let table = palc_table(&rs, max_exponent);
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&table).unwrap()),
                Format::Tsv => {
                    println!("lambda\texponent\tsign\tdim\ttau\tfinite");
                    for row in &table.rows {
                        println!(
                            "({})\t{}\t{:+}\t{}\t({})\t{}",
                            row.lambda.join(", "),
                            row.exponent,
                            row.sign,
                            row.dim,
                            row.tau.join(", "),
                            row.finite
                                .iter()
                                .map(|t| t.to_string())
                                .collect::<Vec<_>>()
                                .join(" ")
                        );
                    }
                }
            }
            ExitCode::SUCCESS
        }
        Command::Perm { family, n, word } => {
            let Some(family) = parse_family(&family) else {
                return usage(&format!("unknown family {:?}", family));
            };
            let z = match ZContext::new(family, n) {
                Ok(z) => z,
                Err(e) => return usage(&e.to_string()),
            };
            let word = match parse_word(&word, z.ctx().generators().len()) {
                Ok(w) => w,
                Err(msg) => return usage(&msg),
            };
            print!("{}", z.star_word(&word));
            ExitCode::SUCCESS
        }
        Command::CheckPerm { family, n, file } => {
            let Some(family) = parse_family(&family) else {
                return usage(&format!("unknown family {:?}", family));
            };
            let z = match ZContext::new(family, n) {
                Ok(z) => z,
                Err(e) => return usage(&e.to_string()),
            };
            let text = match file {
                Some(path) => match fs::read_to_string(&path) {
                    Ok(t) => t,
                    Err(e) => return usage(&format!("cannot read {}: {}", path, e)),
                },
                None => {
                    let mut buf = String::new();
                    if std::io::stdin().read_to_string(&mut buf).is_err() {
                        return usage("cannot read stdin");
                    }
                    buf
                }
            };
            let f: ZPerm = match text.parse() {
                Ok(f) => f,
                Err(e) => return usage(&e.to_string()),
            };
            if (f.family(), f.n()) != (family, n) {
                return usage("window header does not match the requested family");
            }
            match f.check_membership() {
                Ok(()) => {
                    let point = z.ambient_point(&f);
                    match z.ctx().element_from_point(&point) {
                        Ok((_, word)) => {
                            println!(
                                "member: reduced word [{}] (length {})",
                                word.iter().map(|j| j.to_string()).collect::<Vec<_>>().join(" "),
                                word.len()
                            );
                            ExitCode::SUCCESS
                        }
                        Err(e) => {
                            println!("rejected: {}", e);
                            ExitCode::from(1)
                        }
                    }
                }
                Err(e) => {
                    println!("rejected: {}", e);
                    ExitCode::from(1)
                }
            }
        }
        Command::Oracle {
            r#type,
            rank,
            max_len,
            random_words,
            seed,
            format,
        } => {
            let Some(tag) = parse_type(&r#type) else {
                return usage(&format!("unknown type {:?}", r#type));
            };
            let ctx = match Context::kostant(tag, rank) {
                Ok(c) => c,
                Err(e) => return usage(&e.to_string()),
            };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n_gens = ctx.generators().len();
            let words: Vec<Vec<usize>> = (0..random_words)
                .map(|_| {
                    let len = rng.gen_range(0..=20);
                    (0..len).map(|_| rng.gen_range(0..n_gens)).collect()
                })
                .collect();
            let outcome = oracle_outcome(&ctx, max_len, &words);
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&outcome).unwrap()),
                Format::Tsv => {
                    println!(
                        "type\trank\tmax_len\torbit_points\tcoset_points\trandom_words\tdiscrepancies"
                    );
                    println!(
                        "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                        outcome.r#type,
                        outcome.rank,
                        outcome.max_len,
                        outcome.orbit_points,
                        outcome.coset_points,
                        outcome.random_words,
                        outcome.discrepancies.len()
                    );
                    for d in &outcome.discrepancies {
                        println!("discrepancy\t{}", d);
                    }
                }
            }
            if outcome.discrepancies.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn parse_word(text: &str, n_gens: usize) -> Result<Vec<usize>, String> {
    let mut word = Vec::new();
    for token in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let j: usize = token
            .parse()
            .map_err(|_| format!("bad generator index {:?}", token))?;
        if j >= n_gens {
            return Err(format!(
                "generator index {} out of range (0..={})",
                j,
                n_gens - 1
            ));
        }
        word.push(j);
    }
    Ok(word)
}
