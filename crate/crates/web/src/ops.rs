use serde::Serialize;
use synchro::{
    build_iterated_gadget_capped, eppstein_greedy, format_ratio, min_reset_word, parse_dimacs,
    performance_ratio, to_binary, Error, LabeledDfa, Result, SearchBudget, StateSet, Word,
};

/// Browser-side state limit; larger gadgets make the page unresponsive.
pub const STATE_CAP: usize = 50_000;

/// Labels listed in a trace only when the final image is at most this large.
const MAX_LISTED_LABELS: usize = 64;

#[derive(Serialize)]
struct Summary {
    states: usize,
    letters: usize,
    n: usize,
    m: usize,
    r: usize,
    binary: bool,
}

#[derive(Serialize)]
struct Solution {
    status: String,
    exact_len: Option<usize>,
    exact_word: Option<String>,
    visited_sets: u64,
    greedy_len: Option<usize>,
    greedy_word: Option<String>,
    ratio: Option<String>,
    error: Option<String>,
}

#[derive(Serialize)]
struct Trace {
    word: String,
    /// `sizes[k]` is `|Q.w[..k]|`; `sizes[0]` is the state count.
    sizes: Vec<usize>,
    synchronized: bool,
    final_labels: Option<Vec<String>>,
}

pub fn build(cnf: &str, r: usize, binary: bool) -> Result<LabeledDfa> {
    let formula = parse_dimacs(cnf)?;
    let gadget = build_iterated_gadget_capped(&formula, r, STATE_CAP)?;
    if !binary {
        return Ok(gadget);
    }
    let b = to_binary(&gadget)?;
    if b.num_states() > STATE_CAP {
        return Err(Error::Capacity(format!(
            "binary encoding has {} states, limit is {STATE_CAP}",
            b.num_states()
        )));
    }
    Ok(b)
}

pub fn summary(g: &LabeledDfa) -> String {
    let meta = g.meta();
    to_json(&Summary {
        states: g.num_states(),
        letters: g.dfa().num_letters(),
        n: meta.n,
        m: meta.m,
        r: meta.r,
        binary: meta.is_binary,
    })
}

pub fn solve(g: &LabeledDfa, max_visited_sets: u64) -> String {
    let exact = min_reset_word(g.dfa(), SearchBudget::with_max_visited(max_visited_sets));
    let (greedy, error) = match eppstein_greedy(g.dfa()) {
        Ok(w) => (Some(w), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let ratio = match (&greedy, exact.length()) {
        (Some(w), Some(e)) => performance_ratio(w.len() as u64, e as u64)
            .ok()
            .map(|r| format_ratio(&r)),
        _ => None,
    };
    to_json(&Solution {
        status: exact.status.to_string(),
        exact_len: exact.length(),
        exact_word: exact.word.as_ref().map(Word::to_string),
        visited_sets: exact.visited_sets,
        greedy_len: greedy.as_ref().map(Word::len),
        greedy_word: greedy.as_ref().map(Word::to_string),
        ratio,
        error,
    })
}

pub fn trace(g: &LabeledDfa, word: &str) -> Result<String> {
    let word: Word = word.trim().parse()?;
    let dfa = g.dfa();
    let mut set = StateSet::full(dfa.num_states());
    let mut sizes = vec![set.len()];
    for d in word.iter() {
        set = dfa.image(&set, &Word::new(vec![d]))?;
        sizes.push(set.len());
    }
    let final_labels = (set.len() <= MAX_LISTED_LABELS)
        .then(|| set.iter().map(|q| g.label(q).to_string()).collect());
    Ok(to_json(&Trace {
        word: word.to_string(),
        sizes,
        synchronized: set.len() == 1,
        final_labels,
    }))
}

fn to_json(value: &impl Serialize) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}
