//! Complete deterministic automata and their action on words and state sets.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::pairs::PairDistances;

/// Largest alphabet supported; letters render as `a`..`z`.
pub const MAX_LETTERS: usize = 26;

/// A complete deterministic automaton without initial or final states.
///
/// The transition table is stored row-major: entry `state * num_letters + letter`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dfa {
    num_states: usize,
    num_letters: usize,
    delta: Vec<u32>,
}

impl Dfa {
    /// Builds an automaton from a flat row-major table, checking totality.
    pub fn new(num_states: usize, num_letters: usize, delta: Vec<usize>) -> Result<Self> {
        if num_states == 0 {
            return Err(Error::InvalidDfa(
                "an automaton needs at least one state".into(),
            ));
        }
        if num_letters == 0 || num_letters > MAX_LETTERS {
            return Err(Error::InvalidDfa(format!(
                "letter count must be in 1..={MAX_LETTERS}, got {num_letters}"
            )));
        }
        if num_states > u32::MAX as usize {
            return Err(Error::Capacity(format!("{num_states} states")));
        }
        if delta.len() != num_states * num_letters {
            return Err(Error::InvalidDfa(format!(
                "table has {} entries, expected {} x {}",
                delta.len(),
                num_states,
                num_letters
            )));
        }
        if let Some((pos, &bad)) = delta.iter().enumerate().find(|(_, &t)| t >= num_states) {
            return Err(Error::InvalidDfa(format!(
                "transition of state {} under letter {} targets {bad}, beyond {} states",
                pos / num_letters,
                pos % num_letters,
                num_states
            )));
        }
        Ok(Dfa {
            num_states,
            num_letters,
            delta: delta.into_iter().map(|t| t as u32).collect(),
        })
    }

    /// Builds an automaton from one row of targets per state.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let num_letters = rows.first().map_or(0, Vec::len);
        if let Some((i, _)) = rows
            .iter()
            .enumerate()
            .find(|(_, r)| r.len() != num_letters)
        {
            return Err(Error::InvalidDfa(format!(
                "row {i} has a different width than row 0"
            )));
        }
        Dfa::new(rows.len(), num_letters, rows.concat())
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn num_letters(&self) -> usize {
        self.num_letters
    }

    /// Unchecked transition used on hot paths. Panics on out-of-range input.
    #[inline]
    pub fn next(&self, state: usize, letter: usize) -> usize {
        self.delta[state * self.num_letters + letter] as usize
    }

    pub fn row(&self, state: usize) -> impl Iterator<Item = usize> + '_ {
        self.delta[state * self.num_letters..(state + 1) * self.num_letters]
            .iter()
            .map(|&t| t as usize)
    }

    pub fn apply_letter(&self, state: usize, letter: usize) -> Result<usize> {
        self.check_state(state)?;
        self.check_letter(letter)?;
        Ok(self.next(state, letter))
    }

    pub fn apply_word(&self, state: usize, word: &Word) -> Result<usize> {
        self.check_state(state)?;
        self.check_word(word)?;
        Ok(word.iter().fold(state, |q, d| self.next(q, d)))
    }

    /// The image `S.w`.
    pub fn image(&self, set: &StateSet, word: &Word) -> Result<StateSet> {
        if set.capacity() != self.num_states {
            return Err(Error::Domain(format!(
                "state set has capacity {}, automaton has {} states",
                set.capacity(),
                self.num_states
            )));
        }
        self.check_word(word)?;
        let mut current = set.clone();
        let mut scratch = StateSet::empty(self.num_states);
        for d in word.iter() {
            self.image_letter_into(current.blocks(), d, scratch.blocks_mut());
            std::mem::swap(&mut current, &mut scratch);
        }
        Ok(current)
    }

    /// Image of the full state set under `word`.
    pub fn image_of_all(&self, word: &Word) -> Result<StateSet> {
        self.image(&StateSet::full(self.num_states), word)
    }

    pub(crate) fn image_letter_into(&self, src: &[u64], letter: usize, dst: &mut [u64]) {
        dst.fill(0);
        for (bi, &block) in src.iter().enumerate() {
            let mut b = block;
            while b != 0 {
                let q = bi * 64 + b.trailing_zeros() as usize;
                b &= b - 1;
                let t = self.next(q, letter);
                dst[t / 64] |= 1u64 << (t % 64);
            }
        }
    }

    /// Polynomial synchronizability test: every pair of states must be
    /// mergeable in the pair automaton.
    pub fn is_synchronizing(&self) -> bool {
        PairDistances::compute(self).all_mergeable()
    }

    /// Predecessor lists per letter: `preds[letter][state]`.
    pub(crate) fn predecessors(&self) -> Vec<Vec<Vec<u32>>> {
        let mut preds = vec![vec![Vec::new(); self.num_states]; self.num_letters];
        for q in 0..self.num_states {
            for (d, t) in self.row(q).enumerate() {
                preds[d][t].push(q as u32);
            }
        }
        preds
    }

    fn check_state(&self, state: usize) -> Result<()> {
        if state < self.num_states {
            Ok(())
        } else {
            Err(Error::StateOutOfRange {
                state,
                num_states: self.num_states,
            })
        }
    }

    fn check_letter(&self, letter: usize) -> Result<()> {
        if letter < self.num_letters {
            Ok(())
        } else {
            Err(Error::LetterOutOfRange {
                letter,
                num_letters: self.num_letters,
            })
        }
    }

    pub fn check_word(&self, word: &Word) -> Result<()> {
        word.iter().try_for_each(|d| self.check_letter(d))
    }
}

impl fmt::Debug for Dfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Dfa({} states, {} letters)",
            self.num_states, self.num_letters
        )
    }
}

/// A finite sequence of letter indices. Renders with `a` for letter 0.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn repeat(letter: usize, times: usize) -> Self {
        Word(vec![letter; times])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn push(&mut self, letter: usize) {
        self.0.push(letter);
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        w.extend_from(other);
        w
    }
}

impl From<Vec<usize>> for Word {
    fn from(letters: Vec<usize>) -> Self {
        Word(letters)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'a'..='z' => Ok(c as usize - 'a' as usize),
                _ => Err(Error::Domain(format!("'{c}' is not a letter in a..z"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.0 {
            let c = char::from_u32('a' as u32 + d as u32).unwrap_or('?');
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// A subset of `{0, .., capacity-1}` stored as a bit vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StateSet {
    blocks: Vec<u64>,
    capacity: usize,
}

impl StateSet {
    pub fn empty(capacity: usize) -> Self {
        StateSet {
            blocks: vec![0; blocks_for(capacity)],
            capacity,
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut s = Self::empty(capacity);
        for q in 0..capacity {
            s.insert(q);
        }
        s
    }

    pub fn from_states(capacity: usize, states: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(capacity);
        for q in states {
            s.insert(q);
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    /// Panics if `q >= capacity`.
    pub fn insert(&mut self, q: usize) -> bool {
        assert!(
            q < self.capacity,
            "state {q} beyond capacity {}",
            self.capacity
        );
        let mask = 1u64 << (q % 64);
        let fresh = self.blocks[q / 64] & mask == 0;
        self.blocks[q / 64] |= mask;
        fresh
    }

    pub fn contains(&self, q: usize) -> bool {
        q < self.capacity && self.blocks[q / 64] & (1u64 << (q % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn is_subset(&self, other: &StateSet) -> bool {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    /// The single member, if the set is a singleton.
    pub fn singleton(&self) -> Option<usize> {
        if self.len() == 1 {
            self.iter().next()
        } else {
            None
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(bi, &block)| {
            let mut b = block;
            std::iter::from_fn(move || {
                if b == 0 {
                    return None;
                }
                let q = bi * 64 + b.trailing_zeros() as usize;
                b &= b - 1;
                Some(q)
            })
        })
    }

    pub(crate) fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    pub(crate) fn blocks_mut(&mut self) -> &mut [u64] {
        &mut self.blocks
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub(crate) fn blocks_for(capacity: usize) -> usize {
    capacity.div_ceil(64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_sinks() -> Dfa {
        Dfa::from_rows(&[vec![0, 0], vec![1, 1]]).unwrap()
    }

    #[test]
    fn rejects_out_of_range_entries() {
        assert!(matches!(
            Dfa::from_rows(&[vec![0, 2], vec![1, 1]]),
            Err(Error::InvalidDfa(_))
        ));
        assert!(Dfa::from_rows(&[vec![0], vec![1, 1]]).is_err());
        assert!(Dfa::new(0, 1, vec![]).is_err());
    }

    #[test]
    fn apply_letter_checks_domain() {
        let d = two_sinks();
        assert_eq!(d.apply_letter(1, 0), Ok(1));
        assert_eq!(
            d.apply_letter(2, 0),
            Err(Error::StateOutOfRange {
                state: 2,
                num_states: 2
            })
        );
        assert_eq!(
            d.apply_letter(0, 5),
            Err(Error::LetterOutOfRange {
                letter: 5,
                num_letters: 2
            })
        );
    }

    #[test]
    fn empty_word_is_identity() {
        let d = two_sinks();
        assert_eq!(d.apply_word(1, &Word::empty()), Ok(1));
        let s = StateSet::from_states(2, [1]);
        assert_eq!(d.image(&s, &Word::empty()).unwrap(), s);
        let e = StateSet::empty(2);
        assert!(d.image(&e, &"ab".parse().unwrap()).unwrap().is_empty());
    }

    #[test]
    fn disjoint_sinks_are_not_synchronizing() {
        assert!(!two_sinks().is_synchronizing());
        let one = Dfa::from_rows(&[vec![0]]).unwrap();
        assert!(one.is_synchronizing());
    }

    #[test]
    fn word_text_round_trip() {
        let w: Word = "cbbac".parse().unwrap();
        assert_eq!(w.letters(), &[2, 1, 1, 0, 2]);
        assert_eq!(w.to_string(), "cbbac");
        assert!("aB".parse::<Word>().is_err());
    }

    #[test]
    fn state_set_basics() {
        let mut s = StateSet::empty(130);
        assert!(s.insert(129));
        assert!(!s.insert(129));
        s.insert(3);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![3, 129]);
        assert_eq!(s.len(), 2);
        assert!(!s.contains(200));
        assert_eq!(StateSet::from_states(130, [7]).singleton(), Some(7));
        assert!(StateSet::from_states(130, [3]).is_subset(&s));
    }
}
