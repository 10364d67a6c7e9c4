//! Greedy pairwise merging and performance ratios.

use num_rational::Ratio as GenericRatio;

use crate::dfa::{Dfa, StateSet, Word};
use crate::error::{Error, Result};
use crate::pairs::PairDistances;

pub type Ratio = GenericRatio<u64>;

/// Greedy reset word in the style of Eppstein's algorithm.
///
/// While the current image has two or more states, pick the pair in it with
/// the shortest merging word (ties go to the smallest `(min, max)` pair),
/// append the lexicographically least such word, and apply it.
pub fn eppstein_greedy(dfa: &Dfa) -> Result<Word> {
    let distances = PairDistances::compute(dfa);
    if !distances.all_mergeable() {
        return Err(Error::NotSynchronizing);
    }
    let n = dfa.num_states();
    let mut current = StateSet::full(n);
    let mut word = Word::empty();
    while current.len() > 1 {
        let members: Vec<usize> = current.iter().collect();
        let mut best: Option<(usize, usize, usize)> = None;
        for (x, &p) in members.iter().enumerate() {
            for &q in &members[x + 1..] {
                let d = distances.distance(p, q).expect("all pairs are mergeable");
                if best.is_none_or(|(bd, _, _)| d < bd) {
                    best = Some((d, p, q));
                }
            }
        }
        let (_, p, q) = best.expect("image has at least two states");
        let step = distances
            .merging_word(dfa, p, q)
            .expect("all pairs are mergeable");
        assert!(
            step.len() <= n * n,
            "merging word longer than the pair bound"
        );
        current = dfa.image(&current, &step)?;
        word.extend_from(&step);
    }
    Ok(word)
}

/// Exact ratio `approx / exact`; `0 / 0` counts as 1.
pub fn performance_ratio(approx_length: u64, exact_length: u64) -> Result<Ratio> {
    match (approx_length, exact_length) {
        (0, 0) => Ok(Ratio::from_integer(1)),
        (_, 0) => Err(Error::Domain(format!(
            "ratio {approx_length}/0 is undefined: a positive approximation against a zero minimum"
        ))),
        (a, e) => Ok(Ratio::new(a, e)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RatioRecord {
    pub approx_length: u64,
    pub exact_length: u64,
    pub ratio: Ratio,
}

impl RatioRecord {
    pub fn new(approx_length: u64, exact_length: u64) -> Result<Self> {
        Ok(RatioRecord {
            approx_length,
            exact_length,
            ratio: performance_ratio(approx_length, exact_length)?,
        })
    }
}

/// Renders a ratio as `p/q` (or `p` for integers).
pub fn format_ratio(r: &Ratio) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
