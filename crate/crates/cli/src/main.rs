use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use synchro::{
    build_iterated_gadget_capped, eppstein_greedy, min_reset_word, parse_dfa_labeled, parse_dimacs,
    serialize_labeled, to_binary, Error, SearchBudget, SearchStatus, Word, DEFAULT_STATE_CAP,
};
use synchro_cli::bench::{run_bench, to_csv, BenchOptions};
use synchro_cli::exit;
use synchro_cli::verify::{verify, VerifyOptions};

#[derive(Parser)]
#[command(
    name = "synchro",
    version,
    about = "Synchronizing automata: hardness gadgets and reset words"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct BudgetArgs {
    /// Maximum number of distinct images the exact search may record.
    #[arg(long, default_value_t = SearchBudget::DEFAULT_MAX_VISITED)]
    budget_sets: u64,
    /// Stop the exact search after this word length.
    #[arg(long)]
    max_depth: Option<usize>,
}

impl BudgetArgs {
    fn budget(self) -> SearchBudget {
        SearchBudget {
            max_visited_sets: self.budget_sets,
            max_depth: self.max_depth,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a gadget automaton from a DIMACS CNF file.
    Gen {
        /// DIMACS CNF input.
        cnf: PathBuf,
        /// Iteration level; 2 is the base gadget.
        #[arg(long, default_value_t = 2)]
        r: usize,
        /// Encode over two letters.
        #[arg(long)]
        binary: bool,
        /// Output file; standard output when omitted.
        #[arg(short = 'o', long)]
        out: Option<PathBuf>,
        /// Refuse to build gadgets with more states than this.
        #[arg(long, default_value_t = DEFAULT_STATE_CAP)]
        state_cap: usize,
    },
    /// Compute a shortest reset word exactly.
    Exact {
        /// Automaton in DFA v1 text format.
        dfa: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Compute a reset word with the greedy pair-merging heuristic.
    Greedy {
        /// Automaton in DFA v1 text format.
        dfa: PathBuf,
    },
    /// Apply a word to every state and report the image.
    Check {
        /// Automaton in DFA v1 text format.
        dfa: PathBuf,
        /// Word over a..z; letter `a` is index 0.
        word: String,
    },
    /// Verify the length bounds and structural lemmas on one formula.
    Verify {
        /// DIMACS CNF input.
        cnf: PathBuf,
        /// Iteration level; 2 is the base gadget.
        #[arg(long, default_value_t = 2)]
        r: usize,
        /// Also check the two-letter encoding bounds.
        #[arg(long)]
        binary: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Benchmark greedy against exact on every CNF file in a directory.
    Bench {
        /// Directory scanned for `*.cnf` files.
        dir: PathBuf,
        /// Output CSV path.
        #[arg(long)]
        csv: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Record wall-clock time per row (makes the CSV non-reproducible).
        #[arg(long)]
        timing: bool,
    },
}

/// Failure carrying the exit code it maps to.
struct Failure {
    code: i32,
    error: anyhow::Error,
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        let error = e.into();
        let code = match error.downcast_ref::<Error>() {
            Some(Error::Capacity(_)) => exit::BUDGET,
            Some(Error::NotSynchronizing) => exit::CHECK_FAILED,
            _ => exit::USAGE,
        };
        Failure { code, error }
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn run(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Gen {
            cnf,
            r,
            binary,
            out,
            state_cap,
        } => {
            let formula = parse_dimacs(&read(&cnf)?).with_context(|| cnf.display().to_string())?;
            let mut gadget = build_iterated_gadget_capped(&formula, r, state_cap)?;
            if binary {
                gadget = to_binary(&gadget)?;
            }
            let meta = gadget.meta();
            let text = serialize_labeled(&gadget);
            let summary = format!(
                "states {} letters {} n={} m={} r={} binary={}",
                gadget.num_states(),
                gadget.dfa().num_letters(),
                meta.n,
                meta.m,
                meta.r,
                meta.is_binary
            );
            match out {
                Some(path) => {
                    fs::write(&path, text)
                        .with_context(|| format!("writing {}", path.display()))?;
                    println!("{summary}");
                }
                None => {
                    print!("{text}");
                    eprintln!("{summary}");
                }
            }
            Ok(exit::PASS)
        }
        Command::Exact { dfa, budget } => {
            let (dfa, labels) =
                parse_dfa_labeled(&read(&dfa)?).with_context(|| dfa.display().to_string())?;
            let res = min_reset_word(&dfa, budget.budget());
            let code = match (&res.status, &res.word) {
                (SearchStatus::Found, Some(w)) => {
                    let target = dfa.image_of_all(w)?.singleton().expect("reset word");
                    println!("status found");
                    println!("length {}", w.len());
                    println!("word {w}");
                    println!("target {}", label_of(&labels, target));
                    exit::PASS
                }
                (SearchStatus::NotSynchronizing, _) => {
                    println!("status not synchronizing");
                    exit::CHECK_FAILED
                }
                _ => {
                    println!("status budget exceeded at depth {}", res.depth_reached);
                    exit::BUDGET
                }
            };
            println!("visited {}", res.visited_sets);
            println!("peak-frontier {}", res.peak_frontier);
            Ok(code)
        }
        Command::Greedy { dfa } => {
            let (dfa, _) =
                parse_dfa_labeled(&read(&dfa)?).with_context(|| dfa.display().to_string())?;
            let w = eppstein_greedy(&dfa)?;
            println!("length {}", w.len());
            println!("word {w}");
            Ok(exit::PASS)
        }
        Command::Check { dfa, word } => {
            let (dfa, labels) =
                parse_dfa_labeled(&read(&dfa)?).with_context(|| dfa.display().to_string())?;
            let word: Word = word.parse()?;
            dfa.check_word(&word)?;
            let image = dfa.image_of_all(&word)?;
            let members: Vec<String> = image.iter().map(|q| label_of(&labels, q)).collect();
            println!("image size {}", image.len());
            println!("{{{}}}", members.join(", "));
            Ok(if image.len() == 1 {
                exit::PASS
            } else {
                exit::CHECK_FAILED
            })
        }
        Command::Verify {
            cnf,
            r,
            binary,
            budget,
        } => {
            let formula = parse_dimacs(&read(&cnf)?).with_context(|| cnf.display().to_string())?;
            let name = cnf
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            let opts = VerifyOptions {
                r,
                budget: budget.budget(),
                binary,
                ..VerifyOptions::default()
            };
            let report = verify(&name, &formula, opts)?;
            println!("{report}");
            Ok(report.exit_code())
        }
        Command::Bench {
            dir,
            csv,
            budget,
            timing,
        } => {
            let opts = BenchOptions {
                budget: budget.budget(),
                timing,
                ..BenchOptions::default()
            };
            let outcome =
                run_bench(&dir, &opts).with_context(|| format!("reading {}", dir.display()))?;
            for w in &outcome.warnings {
                eprintln!("warning: {w}");
            }
            if outcome.rows.is_empty() {
                eprintln!("error: no benchmark rows produced from {}", dir.display());
                return Ok(exit::USAGE);
            }
            fs::write(&csv, to_csv(&outcome.rows))
                .with_context(|| format!("writing {}", csv.display()))?;
            println!("{} rows written to {}", outcome.rows.len(), csv.display());
            let bad_ratio = outcome
                .rows
                .iter()
                .any(|r| r.ratio.is_some_and(|x| x < 1.into()));
            Ok(if bad_ratio {
                exit::CHECK_FAILED
            } else {
                exit::PASS
            })
        }
    }
}

fn label_of(labels: &std::collections::BTreeMap<usize, String>, q: usize) -> String {
    labels.get(&q).cloned().unwrap_or_else(|| q.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code as u8)
        }
    }
}
