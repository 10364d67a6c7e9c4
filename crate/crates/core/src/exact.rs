//! Exact shortest reset words.
//!
//! The search runs breadth-first over the distinct images `Q.w`, starting at
//! the full state set. Letters are tried in ascending order and each image
//! keeps the parent that discovered it first, so the word returned is the
//! lexicographically least among the shortest reset words.

use std::collections::VecDeque;

use rustc_hash::FxHashMap;

use crate::dfa::{blocks_for, Dfa, StateSet, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Stop once this many distinct images have been recorded.
    pub max_visited_sets: u64,
    /// Stop after exhausting this word length.
    pub max_depth: Option<usize>,
}

impl SearchBudget {
    pub const DEFAULT_MAX_VISITED: u64 = 1 << 26;

    pub fn with_max_visited(max_visited_sets: u64) -> Self {
        SearchBudget {
            max_visited_sets,
            ..Self::default()
        }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_visited_sets: Self::DEFAULT_MAX_VISITED,
            max_depth: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    Found,
    NotSynchronizing,
    BudgetExceeded,
}

impl std::fmt::Display for SearchStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SearchStatus::Found => "found",
            SearchStatus::NotSynchronizing => "not-synchronizing",
            SearchStatus::BudgetExceeded => "budget-exceeded",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResetSearchResult {
    pub status: SearchStatus,
    pub word: Option<Word>,
    pub visited_sets: u64,
    pub peak_frontier: u64,
    /// Deepest fully explored word length.
    pub depth_reached: usize,
}

impl ResetSearchResult {
    pub fn length(&self) -> Option<usize> {
        self.word.as_ref().map(Word::len)
    }

    pub fn is_found(&self) -> bool {
        self.status == SearchStatus::Found
    }
}

struct Node {
    parent: u32,
    letter: u8,
}

/// Shortest reset word by breadth-first search over reachable images.
pub fn min_reset_word(dfa: &Dfa, budget: SearchBudget) -> ResetSearchResult {
    let n = dfa.num_states();
    let k = dfa.num_letters();
    let width = blocks_for(n);

    if n == 1 {
        return ResetSearchResult {
            status: SearchStatus::Found,
            word: Some(Word::empty()),
            visited_sets: 1,
            peak_frontier: 1,
            depth_reached: 0,
        };
    }

    let full = StateSet::full(n);
    let mut seen: FxHashMap<Box<[u64]>, u32> = FxHashMap::default();
    let mut nodes = vec![Node {
        parent: u32::MAX,
        letter: 0,
    }];
    seen.insert(full.blocks().into(), 0);

    let mut frontier: VecDeque<(u32, Box<[u64]>)> = VecDeque::new();
    frontier.push_back((0, full.blocks().into()));
    let mut peak_frontier = 1u64;
    let mut depth = 0usize;
    let mut scratch = vec![0u64; width];

    let result = |status, word, nodes: &Vec<Node>, peak, depth| ResetSearchResult {
        status,
        word,
        visited_sets: nodes.len() as u64,
        peak_frontier: peak,
        depth_reached: depth,
    };

    while !frontier.is_empty() {
        if budget.max_depth.is_some_and(|cap| depth >= cap) {
            return result(
                SearchStatus::BudgetExceeded,
                None,
                &nodes,
                peak_frontier,
                depth,
            );
        }
        let layer = frontier.len();
        for _ in 0..layer {
            let (id, set) = frontier.pop_front().expect("layer size counted above");
            for d in 0..k {
                dfa.image_letter_into(&set, d, &mut scratch);
                if seen.contains_key(scratch.as_slice()) {
                    continue;
                }
                let child = nodes.len() as u32;
                nodes.push(Node {
                    parent: id,
                    letter: d as u8,
                });
                if scratch.iter().map(|b| b.count_ones()).sum::<u32>() == 1 {
                    let word = reconstruct(&nodes, child);
                    return result(
                        SearchStatus::Found,
                        Some(word),
                        &nodes,
                        peak_frontier,
                        depth + 1,
                    );
                }
                if nodes.len() as u64 > budget.max_visited_sets {
                    return result(
                        SearchStatus::BudgetExceeded,
                        None,
                        &nodes,
                        peak_frontier,
                        depth,
                    );
                }
                let key: Box<[u64]> = scratch.as_slice().into();
                seen.insert(key.clone(), child);
                frontier.push_back((child, key));
            }
        }
        depth += 1;
        peak_frontier = peak_frontier.max(frontier.len() as u64);
    }
    result(
        SearchStatus::NotSynchronizing,
        None,
        &nodes,
        peak_frontier,
        depth,
    )
}

fn reconstruct(nodes: &[Node], mut id: u32) -> Word {
    let mut letters = Vec::new();
    while nodes[id as usize].parent != u32::MAX {
        letters.push(nodes[id as usize].letter as usize);
        id = nodes[id as usize].parent;
    }
    letters.reverse();
    Word::new(letters)
}

/// Length of a shortest path from `source` to `target` in the transition
/// graph, or `None` when `target` is unreachable.
pub fn shortest_path_length(dfa: &Dfa, source: usize, target: usize) -> Option<usize> {
    let n = dfa.num_states();
    if source >= n || target >= n {
        return None;
    }
    let mut dist = vec![usize::MAX; n];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(q) = queue.pop_front() {
        if q == target {
            return Some(dist[q]);
        }
        for t in dfa.row(q) {
            if dist[t] == usize::MAX {
                dist[t] = dist[q] + 1;
                queue.push_back(t);
            }
        }
    }
    None
}
