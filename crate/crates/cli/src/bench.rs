//! Greedy-versus-exact benchmark over a directory of CNF files.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use synchro::{
    brute_force_sat, build_iterated_gadget_capped, eppstein_greedy, format_ratio, min_reset_word,
    parse_dimacs, performance_ratio, CnfFormula, Ratio, SearchBudget, DEFAULT_STATE_CAP,
};

pub const LEVELS: [usize; 2] = [2, 3];
pub const CSV_HEADER: &str = "instance,n,m,r,states,sat,exact_len,greedy_len,ratio,wall_millis";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub states: usize,
    pub sat: Option<bool>,
    /// `None` when the exact search ran out of budget.
    pub exact_len: Option<usize>,
    pub greedy_len: usize,
    pub ratio: Option<Ratio>,
    pub wall_millis: Option<u128>,
}

impl BenchRow {
    pub fn to_csv_line(&self) -> String {
        let sat = match self.sat {
            Some(true) => "true",
            Some(false) => "false",
            None => "",
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.instance,
            self.n,
            self.m,
            self.r,
            self.states,
            sat,
            self.exact_len
                .map_or("timeout".to_string(), |l| l.to_string()),
            self.greedy_len,
            self.ratio.as_ref().map(format_ratio).unwrap_or_default(),
            self.wall_millis.map(|t| t.to_string()).unwrap_or_default(),
        )
    }
}

#[derive(Clone, Copy, Debug)]
pub struct BenchOptions {
    pub budget: SearchBudget,
    /// Fill the `wall_millis` column. Off by default so output is reproducible.
    pub timing: bool,
    pub state_cap: usize,
}

impl Default for BenchOptions {
    fn default() -> Self {
        BenchOptions {
            budget: SearchBudget::default(),
            timing: false,
            state_cap: DEFAULT_STATE_CAP,
        }
    }
}

#[derive(Debug)]
pub struct BenchOutcome {
    pub rows: Vec<BenchRow>,
    pub warnings: Vec<String>,
}

pub fn bench_row(
    instance: &str,
    formula: &CnfFormula,
    r: usize,
    opts: &BenchOptions,
) -> synchro::Result<BenchRow> {
    let start = Instant::now();
    let gadget = build_iterated_gadget_capped(formula, r, opts.state_cap)?;
    let sat = brute_force_sat(formula).ok().map(|a| a.is_some());
    let exact = min_reset_word(gadget.dfa(), opts.budget);
    let greedy = eppstein_greedy(gadget.dfa())?;
    let ratio = exact
        .length()
        .map(|e| performance_ratio(greedy.len() as u64, e as u64))
        .transpose()?;
    Ok(BenchRow {
        instance: instance.to_string(),
        n: formula.num_vars(),
        m: formula.num_clauses(),
        r,
        states: gadget.num_states(),
        sat,
        exact_len: exact.length(),
        greedy_len: greedy.len(),
        ratio,
        wall_millis: opts.timing.then(|| start.elapsed().as_millis()),
    })
}

/// Benchmarks every `*.cnf` file in `dir` at each level in [`LEVELS`].
/// Unreadable or invalid files become warnings; rows are ordered by file
/// name, then level.
pub fn run_bench(dir: &Path, opts: &BenchOptions) -> std::io::Result<BenchOutcome> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "cnf"))
        .collect();
    files.sort();

    let mut warnings = Vec::new();
    let mut formulas = Vec::new();
    for path in &files {
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        match fs::read_to_string(path)
            .map_err(|e| e.to_string())
            .and_then(|t| parse_dimacs(&t).map_err(|e| e.to_string()))
        {
            Ok(f) => formulas.push((name, f)),
            Err(e) => warnings.push(format!("skipping {}: {e}", path.display())),
        }
    }

    let jobs: Vec<(usize, usize)> = (0..formulas.len())
        .flat_map(|i| LEVELS.iter().map(move |&r| (i, r)))
        .collect();
    let results: Vec<(usize, usize, synchro::Result<BenchRow>)> = jobs
        .par_iter()
        .map(|&(i, r)| (i, r, bench_row(&formulas[i].0, &formulas[i].1, r, opts)))
        .collect();

    let mut rows = Vec::new();
    for (i, r, res) in results {
        match res {
            Ok(row) => rows.push(row),
            Err(e) => warnings.push(format!("skipping {} at r={r}: {e}", formulas[i].0)),
        }
    }
    rows.sort_by(|a, b| (&a.instance, a.r).cmp(&(&b.instance, b.r)));
    Ok(BenchOutcome { rows, warnings })
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{CSV_HEADER}");
    for row in rows {
        let _ = writeln!(out, "{}", row.to_csv_line());
    }
    out
}
