use std::collections::VecDeque;

use crate::dfa::{Dfa, Word};

const UNREACHED: u32 = u32::MAX;

/// Shortest merging distances for every unordered pair of states, computed by
/// backward breadth-first search in the pair automaton from the diagonal.
#[derive(Clone, Debug)]
pub struct PairDistances {
    num_states: usize,
    dist: Vec<u32>,
}

impl PairDistances {
    pub fn compute(dfa: &Dfa) -> Self {
        let n = dfa.num_states();
        let mut dist = vec![UNREACHED; n * n.saturating_sub(1) / 2];
        let preds = dfa.predecessors();
        let mut queue = VecDeque::new();

        for target in 0..n {
            for by_letter in &preds {
                let ps = &by_letter[target];
                for (x, &p) in ps.iter().enumerate() {
                    for &q in &ps[x + 1..] {
                        let i = tri_index(n, p as usize, q as usize);
                        if dist[i] == UNREACHED {
                            dist[i] = 1;
                            queue.push_back((p, q));
                        }
                    }
                }
            }
        }

        while let Some((p, q)) = queue.pop_front() {
            let next = dist[tri_index(n, p as usize, q as usize)] + 1;
            for by_letter in &preds {
                for &pp in &by_letter[p as usize] {
                    for &qq in &by_letter[q as usize] {
                        if pp == qq {
                            continue;
                        }
                        let i = tri_index(n, pp as usize, qq as usize);
                        if dist[i] == UNREACHED {
                            dist[i] = next;
                            queue.push_back((pp, qq));
                        }
                    }
                }
            }
        }

        PairDistances {
            num_states: n,
            dist,
        }
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    /// Length of a shortest word merging `p` and `q`; `Some(0)` when equal.
    pub fn distance(&self, p: usize, q: usize) -> Option<usize> {
        if p == q {
            return Some(0);
        }
        match self.dist[tri_index(self.num_states, p, q)] {
            UNREACHED => None,
            d => Some(d as usize),
        }
    }

    pub fn all_mergeable(&self) -> bool {
        self.dist.iter().all(|&d| d != UNREACHED)
    }

    /// Lexicographically least among the shortest words merging `p` and `q`.
    pub fn merging_word(&self, dfa: &Dfa, mut p: usize, mut q: usize) -> Option<Word> {
        let mut remaining = self.distance(p, q)?;
        let mut word = Word::empty();
        while remaining > 0 {
            let d = (0..dfa.num_letters())
                .find(|&d| self.distance(dfa.next(p, d), dfa.next(q, d)) == Some(remaining - 1))
                .expect("distance table is consistent with the automaton");
            word.push(d);
            p = dfa.next(p, d);
            q = dfa.next(q, d);
            remaining -= 1;
        }
        Some(word)
    }
}

fn tri_index(n: usize, p: usize, q: usize) -> usize {
    let (p, q) = if p < q { (p, q) } else { (q, p) };
    p * (2 * n - p - 1) / 2 + (q - p - 1)
}
