//! End-to-end check of one formula: oracle, gadget, witness, exact minimum,
//! length bounds, structural lemmas and (optionally) the binary sandwich.

use std::collections::VecDeque;
use std::fmt;

use synchro::{
    brute_force_sat, build_iterated_gadget_capped, min_reset_word, shortest_path_length, to_binary,
    translate_word, witness_word, CnfFormula, LabeledDfa, ResetSearchResult, SearchBudget,
    SearchStatus, DEFAULT_STATE_CAP,
};

use crate::lemmas::{check_restart_occupied, check_row_survives, LemmaOutcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CheckKind {
    Synchronizing,
    Witness,
    EqualityNPlus2,
    Gap2n2,
    GapRnR,
    Lemma1,
    Lemma2,
    PathLength,
    Sandwich,
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckKind::Synchronizing => "synchronizing",
            CheckKind::Witness => "witness",
            CheckKind::EqualityNPlus2 => "equality-n-plus-2",
            CheckKind::Gap2n2 => "gap-2n-2",
            CheckKind::GapRnR => "gap-rn-r",
            CheckKind::Lemma1 => "lemma1",
            CheckKind::Lemma2 => "lemma2",
            CheckKind::PathLength => "path-length",
            CheckKind::Sandwich => "sandwich",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    /// Not decided, e.g. the exact search ran out of budget.
    Skipped,
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub kind: CheckKind,
    pub outcome: Outcome,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub satisfiable: bool,
    pub gadget_states: usize,
    pub exact: ResetSearchResult,
    pub witness_ok: Option<bool>,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.outcome != Outcome::Fail)
    }

    pub fn check(&self, kind: CheckKind) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.kind == kind)
    }

    /// 0 all passed, 1 a check failed, 3 something was left undecided.
    pub fn exit_code(&self) -> i32 {
        if !self.passed() {
            1
        } else if self.checks.iter().any(|c| c.outcome == Outcome::Skipped) {
            3
        } else {
            0
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "instance  {}", self.instance)?;
        writeln!(
            f,
            "n={} m={} r={} satisfiable={} states={}",
            self.n, self.m, self.r, self.satisfiable, self.gadget_states
        )?;
        match (&self.exact.status, &self.exact.word) {
            (SearchStatus::Found, Some(w)) => writeln!(
                f,
                "exact     length {} word {} (visited {})",
                w.len(),
                w,
                self.exact.visited_sets
            )?,
            (status, _) => writeln!(
                f,
                "exact     {status} after {} sets, depth {}",
                self.exact.visited_sets, self.exact.depth_reached
            )?,
        }
        for c in &self.checks {
            let tag = match c.outcome {
                Outcome::Pass => "PASS",
                Outcome::Fail => "FAIL",
                Outcome::Skipped => "SKIP",
            };
            writeln!(f, "{tag}  {:<18} {}", c.kind.to_string(), c.detail)?;
        }
        write!(
            f,
            "result    {}",
            if self.passed() { "pass" } else { "fail" }
        )
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub r: usize,
    pub budget: SearchBudget,
    /// Also build the two-letter encoding and check the sandwich bounds.
    pub binary: bool,
    pub state_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            r: 2,
            budget: SearchBudget::default(),
            binary: false,
            state_cap: DEFAULT_STATE_CAP,
        }
    }
}

fn pass(kind: CheckKind, detail: String) -> CheckResult {
    CheckResult {
        kind,
        outcome: Outcome::Pass,
        detail,
    }
}

fn judged(kind: CheckKind, ok: bool, detail: String) -> CheckResult {
    CheckResult {
        kind,
        outcome: if ok { Outcome::Pass } else { Outcome::Fail },
        detail,
    }
}

fn skipped(kind: CheckKind, detail: String) -> CheckResult {
    CheckResult {
        kind,
        outcome: Outcome::Skipped,
        detail,
    }
}

pub fn verify(
    name: &str,
    formula: &CnfFormula,
    opts: VerifyOptions,
) -> synchro::Result<VerificationReport> {
    let (n, m, r) = (formula.num_vars(), formula.num_clauses(), opts.r);
    let assignment = brute_force_sat(formula)?;
    let gadget = build_iterated_gadget_capped(formula, r, opts.state_cap)?;
    let dfa = gadget.dfa();
    let z0 = gadget.z0().expect("ternary gadgets have a sink");
    let mut checks = Vec::new();

    checks.push(judged(
        CheckKind::Synchronizing,
        sink_reachable_everywhere(&gadget),
        "z0 is a sink reachable from every state".into(),
    ));

    let witness_ok = match &assignment {
        Some(tau) => {
            let w = witness_word(tau, r)?;
            let image = dfa.image_of_all(&w)?;
            let ok = image.singleton() == Some(z0) && w.len() == n + r;
            checks.push(judged(
                CheckKind::Witness,
                ok,
                format!(
                    "{w} (length {}) maps Q to {} state(s)",
                    w.len(),
                    image.len()
                ),
            ));
            Some(ok)
        }
        None => None,
    };

    let exact = min_reset_word(dfa, opts.budget);
    let min = exact.length();
    match (&assignment, r, min) {
        (_, _, None) if exact.status == SearchStatus::NotSynchronizing => {
            checks.push(judged(
                CheckKind::Synchronizing,
                false,
                "exact search found no reset word".into(),
            ));
        }
        (Some(_), 2, Some(len)) => checks.push(judged(
            CheckKind::EqualityNPlus2,
            len == n + 2,
            format!("minimum {len}, n + 2 = {}", n + 2),
        )),
        (Some(_), 2, None) => checks.push(skipped(
            CheckKind::EqualityNPlus2,
            format!("exact search {}", exact.status),
        )),
        (None, 2, Some(len)) => checks.push(judged(
            CheckKind::Gap2n2,
            len > 2 * (n - 1),
            format!("minimum {len} > 2(n-1) = {}", 2 * (n - 1)),
        )),
        (None, 2, None) => checks.push(skipped(
            CheckKind::Gap2n2,
            format!("exact search {}", exact.status),
        )),
        (None, _, Some(len)) => checks.push(judged(
            CheckKind::GapRnR,
            len > r * (n - 1),
            format!("minimum {len} > r(n-1) = {}", r * (n - 1)),
        )),
        (None, _, None) => checks.push(skipped(
            CheckKind::GapRnR,
            format!(
                "exact search {} after {} sets",
                exact.status, exact.visited_sets
            ),
        )),
        // Satisfiable at r > 2: the witness already bounds the minimum.
        (Some(_), _, _) => {}
    }

    if assignment.is_none() {
        checks.push(lemma_check(CheckKind::Lemma1, check_row_survives(&gadget)));
        checks.push(lemma_check(
            CheckKind::Lemma2,
            check_restart_occupied(&gadget),
        ));
    }

    let restart = gadget.q(m + 1, 1).expect("restart state");
    let dist = shortest_path_length(dfa, restart, z0);
    checks.push(judged(
        CheckKind::PathLength,
        dist == Some(n + 1),
        format!("q_{}_1 -> z0 in {:?} steps, n + 1 = {}", m + 1, dist, n + 1),
    ));

    if opts.binary {
        checks.push(sandwich(&gadget, &exact, opts.budget)?);
    }

    Ok(VerificationReport {
        instance: name.to_string(),
        n,
        m,
        r,
        satisfiable: assignment.is_some(),
        gadget_states: gadget.num_states(),
        exact,
        witness_ok,
        checks,
    })
}

fn lemma_check(kind: CheckKind, outcome: LemmaOutcome) -> CheckResult {
    let scope = if outcome.exhaustive { "all" } else { "sampled" };
    match &outcome.counterexample {
        None => pass(kind, format!("{scope} {} words", outcome.words_checked)),
        Some(w) => judged(kind, false, format!("violated by {w}")),
    }
}

/// `min(A) <= min(B) <= 3 min(A)` for `B` the binary encoding, and the
/// translated optimal word resets `B`.
pub fn sandwich(
    gadget: &LabeledDfa,
    exact: &ResetSearchResult,
    budget: SearchBudget,
) -> synchro::Result<CheckResult> {
    let Some(word) = &exact.word else {
        return Ok(skipped(
            CheckKind::Sandwich,
            "no exact minimum for A".into(),
        ));
    };
    let binary = to_binary(gadget)?;
    let translated = translate_word(word)?;
    let translated_ok = binary.dfa().image_of_all(&translated)?.len() == 1;
    let b = min_reset_word(binary.dfa(), budget);
    let Some(min_b) = b.length() else {
        return Ok(judged(
            CheckKind::Sandwich,
            translated_ok,
            format!(
                "exact search on B {}; translation resets B: {translated_ok}",
                b.status
            ),
        ));
    };
    let min_a = word.len();
    let ok = translated_ok && min_a <= min_b && min_b <= 3 * min_a;
    Ok(judged(
        CheckKind::Sandwich,
        ok,
        format!(
            "{min_a} <= {min_b} <= {}; translation resets B: {translated_ok}",
            3 * min_a
        ),
    ))
}

/// `z0` is fixed by every letter and reachable from every state.
pub fn sink_reachable_everywhere(g: &LabeledDfa) -> bool {
    let dfa = g.dfa();
    let Some(z0) = g.z0() else { return false };
    if (0..dfa.num_letters()).any(|d| dfa.next(z0, d) != z0) {
        return false;
    }
    let mut preds = vec![Vec::new(); dfa.num_states()];
    for q in 0..dfa.num_states() {
        for t in dfa.row(q) {
            preds[t].push(q);
        }
    }
    let mut seen = vec![false; dfa.num_states()];
    seen[z0] = true;
    let mut queue = VecDeque::from([z0]);
    while let Some(q) = queue.pop_front() {
        for &p in &preds[q] {
            if !seen[p] {
                seen[p] = true;
                queue.push_back(p);
            }
        }
    }
    seen.into_iter().all(|s| s)
}
