#![allow(dead_code)]

use std::collections::HashMap;

use rand::Rng;
use synchro::{CnfFormula, Dfa};

pub fn psi1() -> CnfFormula {
    CnfFormula::from_ints(3, &[&[1, 2, 3], &[-1, 2], &[-2, 3], &[-2, -3]]).unwrap()
}

pub fn psi2() -> CnfFormula {
    CnfFormula::from_ints(3, &[&[1, 2], &[-1, 2], &[-2, 3], &[-2, -3]]).unwrap()
}

pub fn cerny(n: usize) -> Dfa {
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|q| vec![(q + 1) % n, if q == n - 1 { 0 } else { q }])
        .collect();
    Dfa::from_rows(&rows).unwrap()
}

pub fn random_dfa(rng: &mut impl Rng, max_states: usize, max_letters: usize) -> Dfa {
    let n = rng.gen_range(1..=max_states);
    let k = rng.gen_range(1..=max_letters);
    let delta = (0..n * k).map(|_| rng.gen_range(0..n)).collect();
    Dfa::new(n, k, delta).unwrap()
}

/// Image of a set (as a sorted state list) under one letter, computed from
/// the public transition API only.
fn step(dfa: &Dfa, set: &[usize], letter: usize) -> Vec<usize> {
    let mut out: Vec<usize> = set
        .iter()
        .map(|&q| dfa.apply_letter(q, letter).unwrap())
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Synchronizability by a forward fixpoint on pairs: a pair is mergeable if
/// it is a singleton or some letter sends it to a mergeable pair.
pub fn pairs_mergeable(dfa: &Dfa) -> bool {
    let n = dfa.num_states();
    let mut ok = vec![vec![false; n]; n];
    for (p, row) in ok.iter_mut().enumerate() {
        row[p] = true;
    }
    loop {
        let mut changed = false;
        for p in 0..n {
            for q in 0..n {
                if ok[p][q] {
                    continue;
                }
                if (0..dfa.num_letters()).any(|d| ok[dfa.next(p, d)][dfa.next(q, d)]) {
                    ok[p][q] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    ok.iter().all(|row| row.iter().all(|&b| b))
}

/// Minimum reset length by iterative deepening depth-first search over
/// words. Gives up (returns `None`) past `max_len`.
pub fn iddfs_min_reset(dfa: &Dfa, max_len: usize) -> Option<usize> {
    let all: Vec<usize> = (0..dfa.num_states()).collect();
    for limit in 0..=max_len {
        let mut explored: HashMap<Vec<usize>, usize> = HashMap::new();
        if dfs(dfa, &all, limit, &mut explored) {
            return Some(limit);
        }
    }
    None
}

fn dfs(
    dfa: &Dfa,
    set: &[usize],
    remaining: usize,
    explored: &mut HashMap<Vec<usize>, usize>,
) -> bool {
    if set.len() == 1 {
        return true;
    }
    if remaining == 0 {
        return false;
    }
    if explored.get(set).is_some_and(|&r| r >= remaining) {
        return false;
    }
    explored.insert(set.to_vec(), remaining);
    (0..dfa.num_letters()).any(|d| dfs(dfa, &step(dfa, set, d), remaining - 1, explored))
}

/// Plain enumeration of every word of length exactly `len`; returns the
/// lexicographically first one that synchronizes.
pub fn enumerate_reset_words(dfa: &Dfa, len: usize) -> Option<Vec<usize>> {
    let k = dfa.num_letters();
    let total = k.checked_pow(len as u32)?;
    let all: Vec<usize> = (0..dfa.num_states()).collect();
    (0..total).find_map(|mut code| {
        let mut word = vec![0; len];
        for slot in word.iter_mut().rev() {
            *slot = code % k;
            code /= k;
        }
        let image = word.iter().fold(all.clone(), |s, &d| step(dfa, &s, d));
        (image.len() == 1).then_some(word)
    })
}
