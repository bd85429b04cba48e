//! `schubert`: command-line front end.

mod cache;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use schubert_core::bruhat::{self, IntervalKind, LabeledInterval};
use schubert_core::poly::{self, Coeff};
use schubert_core::tabx::{self, Partition, Word};
use schubert_core::{qorder, verify, Error, Permutation};

#[derive(Parser)]
#[command(name = "schubert", version, about = "Exact Schubert-polynomial calculus")]
struct Cli {
    /// Neither read nor write the on-disk cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Schubert polynomial of a permutation.
    Poly { w: Permutation },
    /// Print the Schur polynomial of a partition in k variables.
    Schur { lambda: Partition, k: u32 },
    /// Expand a product of two Schubert polynomials in the Schubert basis.
    Mult {
        u: Permutation,
        v: Permutation,
        #[arg(long)]
        json: bool,
    },
    /// A single structure constant c^w_{u,v}.
    Const {
        u: Permutation,
        v: Permutation,
        w: Permutation,
    },
    /// The skew coefficient of a permutation and a partition.
    Skewcoef { zeta: Permutation, lambda: Partition },
    /// An interval in the k-Bruhat order, or in the Bruhat order without --k.
    Interval {
        u: Permutation,
        w: Permutation,
        #[arg(long)]
        k: Option<u32>,
        #[command(flatten)]
        format: Format,
    },
    /// Count coloured chains f^w_u(I).
    Chains {
        u: Permutation,
        w: Permutation,
        /// Comma-separated colour set I.
        #[arg(long, value_delimiter = ',', required = true)]
        colors: Vec<u32>,
        /// Ambient symmetric group (default: the larger degree).
        #[arg(long)]
        n: Option<u32>,
    },
    /// The greedy k-Bruhat chain from w down to u.
    Greedy {
        u: Permutation,
        w: Permutation,
        #[arg(long)]
        k: u32,
    },
    /// Rank and lower interval in the graded order.
    Qorder {
        zeta: Permutation,
        #[arg(long)]
        interval: bool,
        #[arg(long)]
        rank: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Schensted insertion of a word.
    Rsk { word: Word },
    /// Run a checker; parameters are key=value pairs.
    Verify {
        checker: String,
        params: Vec<String>,
        /// Record wall-clock time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Inspect or clear the on-disk cache.
    Cache {
        #[arg(long)]
        clear: bool,
        #[arg(long)]
        stats: bool,
    },
}

#[derive(Args)]
struct Format {
    #[arg(long, conflicts_with = "json")]
    dot: bool,
    #[arg(long)]
    json: bool,
}

enum Failure {
    /// A check or precondition failed; exit code 1.
    Check(String),
    /// Bad input; exit code 2.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::Parse(_)
            | Error::NotBijective(_)
            | Error::BadTransposition(..)
            | Error::TooManyParts { .. }
            | Error::IndexSetTooShort { .. }
            | Error::SupportExceeds { .. }
            | Error::BadIndexSet(_)
            | Error::SkewShape
            | Error::BadTableau(_) => Failure::Usage(err.to_string()),
            _ => Failure::Check(err.to_string()),
        }
    }
}

fn render(iv: &LabeledInterval, format: &Format) -> String {
    if format.dot {
        return iv.to_dot();
    }
    if format.json {
        return serde_json::to_string_pretty(&iv.to_json()).expect("interval serializes");
    }
    let mut out = String::new();
    let top_rank = iv.ranks().last().copied().unwrap_or(0);
    for r in 0..=top_rank {
        let row: Vec<String> = iv
            .nodes()
            .iter()
            .zip(iv.ranks())
            .filter(|(_, &rank)| rank == r)
            .map(|(p, _)| p.one_line())
            .collect();
        out.push_str(&format!("rank {r}: {}\n", row.join(" ")));
    }
    for c in iv.covers() {
        let (lo, hi) = (&iv.nodes()[c.lower], &iv.nodes()[c.upper]);
        match c.label {
            Some(l) => out.push_str(&format!("{} -> {} [{l}]\n", lo.one_line(), hi.one_line())),
            None => out.push_str(&format!("{} -> {}\n", lo.one_line(), hi.one_line())),
        }
    }
    out.push_str(&format!("maximal chains: {}", iv.chain_count()));
    out
}

fn run(command: Command) -> Result<String, Failure> {
    Ok(match command {
        Command::Poly { w } => poly::schubert(&w).to_string(),
        Command::Schur { lambda, k } => poly::schur(&lambda, k)?.to_string(),
        Command::Mult { u, v, json } => {
            let e = poly::structure_constants(&u, &v)?;
            if json {
                serde_json::to_string_pretty(&e).expect("expansion serializes")
            } else {
                e.to_string()
            }
        }
        Command::Const { u, v, w } => poly::structure_constant(&u, &v, &w)?.to_string(),
        Command::Skewcoef { zeta, lambda } => poly::skew_coefficient(&zeta, &lambda)?.to_string(),
        Command::Interval { u, w, k, format } => {
            let kind = match k {
                Some(k) => IntervalKind::KBruhat(k),
                None => IntervalKind::Bruhat(u.degree().max(w.degree()).max(1)),
            };
            render(&bruhat::interval(&u, &w, kind)?, &format)
        }
        Command::Chains { u, w, colors, n } => {
            let n = n.unwrap_or(u.degree().max(w.degree()).max(1));
            if u.degree() > n || w.degree() > n {
                return Err(Failure::Usage(format!("--n {n} is smaller than the permutations")));
            }
            let count: Coeff = bruhat::count_i_chains(&u, &w, &colors, n);
            count.to_string()
        }
        Command::Greedy { u, w, k } => bruhat::greedy_chain(&u, &w, k)?
            .iter()
            .map(Permutation::one_line)
            .collect::<Vec<_>>()
            .join("\n"),
        Command::Qorder {
            zeta,
            interval,
            rank,
            format,
        } => {
            let mut parts = Vec::new();
            if rank || !interval {
                parts.push(format!("rank: {}", qorder::rank(&zeta)));
            }
            if !rank && !interval {
                let profile = qorder::UpDownProfile::of(&zeta);
                parts.push(format!("up: {:?}\ndown: {:?}", profile.up, profile.down));
                parts.push(format!("compressed: {}", qorder::compress(&zeta).one_line()));
            }
            if interval {
                parts.push(render(&qorder::q_interval(&zeta), &format));
            }
            parts.join("\n")
        }
        Command::Rsk { word } => {
            let (p, q) = tabx::schensted(&word);
            format!("P: {p}\nQ: {q}")
        }
        Command::Verify {
            checker,
            params,
            timing,
        } => {
            let mut map = BTreeMap::new();
            for kv in params {
                let (k, v) = kv
                    .split_once('=')
                    .ok_or_else(|| Failure::Usage(format!("expected key=value, got {kv:?}")))?;
                map.insert(k.to_string(), v.to_string());
            }
            let start = Instant::now();
            let mut report = verify::run_named(&checker, &map)?;
            if timing {
                report.elapsed = Some(start.elapsed().as_secs_f64());
            }
            let json = report.to_json();
            if !report.passed() {
                let first = &report.failures[0];
                return Err(Failure::Check(format!(
                    "{json}\n{}; first witness: {} ({})",
                    report.summary(),
                    first.witness,
                    first.reason
                )));
            }
            json
        }
        Command::Cache { .. } => unreachable!("handled before the cache is opened"),
    })
}

fn cache_command(clear: bool, stats: bool) -> Result<String, Failure> {
    let dir = cache::cache_dir();
    let mut out = Vec::new();
    if clear {
        match cache::clear(&dir) {
            Ok(true) => out.push(format!("cleared {}", dir.display())),
            Ok(false) => out.push(format!("no cache at {}", dir.display())),
            Err(err) => return Err(Failure::Check(format!("cannot clear {}: {err}", dir.display()))),
        }
    }
    if stats || !clear {
        let s = cache::file_stats(&dir);
        out.push(format!(
            "path: {}\npolynomials: {}\nproducts: {}\nskipped: {}",
            dir.display(),
            s.polynomials,
            s.products,
            s.skipped
        ));
    }
    Ok(out.join("\n"))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Cache { clear, stats } => cache_command(clear, stats),
        command if cli.no_cache => run(command),
        command => {
            let disk = cache::DiskCache::open(cache::cache_dir());
            let result = run(command);
            disk.save();
            result
        }
    };
    match result {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check(msg)) => {
            println!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
