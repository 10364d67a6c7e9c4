//! Automata built from CNF formulas.
//!
//! The base gadget over `{a, b, c}` has states `q_{i,j}`, `p_{i,j}`, `z1` and
//! the sink `z0`. Reading `a` (resp. `b`) at `q_{i,j}` jumps to `z0` exactly
//! when setting `x_j` to 1 (resp. 0) satisfies clause `i`; otherwise it moves
//! on to `q_{i,j+1}`. A satisfying assignment therefore yields a reset word
//! of length `n + 2`, while unsatisfiable formulas force reset words longer
//! than `2(n - 1)`.
//!
//! The iterated gadget nests the base gadget `r - 1` times, pushing the gap to
//! `n + r` versus more than `r(n - 1)`. The binary encoding simulates a
//! three-letter automaton with two letters at a threefold state cost.
//!
//! Canonical state order: `q_{i,j}` row-major (without `q_{m+1,n+1}`), then
//! `p_{i,j}` row-major, then `z1`, then `z0`. Iterated gadgets list the
//! previous level first, then pairs `(q', q'')` with `q'` ranging over the
//! base states other than `z0`.

use std::collections::HashMap;
use std::fmt;

use crate::cnf::{CnfFormula, Literal, TruthAssignment};
use crate::dfa::{Dfa, Word};
use crate::error::{Error, Result};

pub const LETTER_A: usize = 0;
pub const LETTER_B: usize = 1;
pub const LETTER_C: usize = 2;

/// Default bound on the state count of iterated gadgets.
pub const DEFAULT_STATE_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum StateLabel {
    /// `q_{i,j}`; `(m+1, n+1)` never occurs, `z1` takes its place.
    Q {
        i: usize,
        j: usize,
    },
    P {
        i: usize,
        j: usize,
    },
    Z1,
    Z0,
    /// `(q', q'')` with `q'` a base state other than `z0` and `q''` a state of
    /// the previous level.
    Product(Box<StateLabel>, Box<StateLabel>),
    /// `(q, a_k)` in the binary encoding, `k` in `1..=3`.
    Triple(Box<StateLabel>, u8),
}

impl fmt::Display for StateLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StateLabel::Q { i, j } => write!(f, "q_{i}_{j}"),
            StateLabel::P { i, j } => write!(f, "p_{i}_{j}"),
            StateLabel::Z1 => f.write_str("z1"),
            StateLabel::Z0 => f.write_str("z0"),
            StateLabel::Product(outer, inner) => write!(f, "{outer}|{inner}"),
            StateLabel::Triple(base, k) => write!(f, "{base}@{k}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GadgetMeta {
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub is_binary: bool,
}

/// An automaton with one structural label per state.
#[derive(Clone, Debug)]
pub struct LabeledDfa {
    dfa: Dfa,
    labels: Vec<StateLabel>,
    index: HashMap<StateLabel, usize>,
    meta: GadgetMeta,
}

impl LabeledDfa {
    fn new(dfa: Dfa, labels: Vec<StateLabel>, meta: GadgetMeta) -> Self {
        debug_assert_eq!(dfa.num_states(), labels.len());
        let index: HashMap<StateLabel, usize> = labels
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, l)| (l, i))
            .collect();
        debug_assert_eq!(index.len(), labels.len(), "labels are distinct");
        LabeledDfa {
            dfa,
            labels,
            index,
            meta,
        }
    }

    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    pub fn into_dfa(self) -> Dfa {
        self.dfa
    }

    pub fn labels(&self) -> &[StateLabel] {
        &self.labels
    }

    pub fn label(&self, state: usize) -> &StateLabel {
        &self.labels[state]
    }

    pub fn index_of(&self, label: &StateLabel) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn meta(&self) -> GadgetMeta {
        self.meta
    }

    pub fn num_states(&self) -> usize {
        self.dfa.num_states()
    }

    /// The sink `z0`; absent in binary encodings.
    pub fn z0(&self) -> Option<usize> {
        self.index_of(&StateLabel::Z0)
    }

    pub fn q(&self, i: usize, j: usize) -> Option<usize> {
        self.index_of(&StateLabel::Q { i, j })
    }
}

/// Where `q_{i,j}` goes under `a` (`d = 0`) or `b` (`d = 1`).
pub fn f_aux(d: usize, i: usize, j: usize, formula: &CnfFormula) -> Result<StateLabel> {
    let (n, m) = (formula.num_vars(), formula.num_clauses());
    if !(1..=m).contains(&i) || !(1..=n).contains(&j) {
        return Err(Error::Domain(format!(
            "f is defined for 1 <= i <= {m}, 1 <= j <= {n}; got ({i}, {j})"
        )));
    }
    let lit = match d {
        LETTER_A => Literal::pos(j),
        LETTER_B => Literal::neg(j),
        _ => {
            return Err(Error::Domain(format!(
                "f takes letter a or b, got index {d}"
            )))
        }
    };
    Ok(if formula.clause_contains(i, lit) {
        StateLabel::Z0
    } else {
        StateLabel::Q { i, j: j + 1 }
    })
}

/// Index arithmetic for the canonical base layout.
#[derive(Clone, Copy)]
struct BaseLayout {
    n: usize,
    m: usize,
}

impl BaseLayout {
    fn s1_len(self) -> usize {
        (self.m + 1) * (self.n + 1) - 1
    }

    fn len(self) -> usize {
        2 * (self.m + 1) * (self.n + 1) + 1
    }

    fn q(self, i: usize, j: usize) -> usize {
        if i == self.m + 1 && j == self.n + 1 {
            return self.z1();
        }
        (i - 1) * (self.n + 1) + (j - 1)
    }

    fn p(self, i: usize, j: usize) -> usize {
        self.s1_len() + (i - 1) * (self.n + 1) + (j - 1)
    }

    fn z1(self) -> usize {
        self.len() - 2
    }

    fn z0(self) -> usize {
        self.len() - 1
    }

    fn index(self, label: &StateLabel) -> usize {
        match *label {
            StateLabel::Q { i, j } => self.q(i, j),
            StateLabel::P { i, j } => self.p(i, j),
            StateLabel::Z1 => self.z1(),
            StateLabel::Z0 => self.z0(),
            _ => unreachable!("base layout holds only base labels"),
        }
    }

    fn labels(self) -> Vec<StateLabel> {
        let (n, m) = (self.n, self.m);
        let mut labels = Vec::with_capacity(self.len());
        for i in 1..=m + 1 {
            for j in 1..=n + 1 {
                if i != m + 1 || j != n + 1 {
                    labels.push(StateLabel::Q { i, j });
                }
            }
        }
        for i in 1..=m + 1 {
            for j in 1..=n + 1 {
                labels.push(StateLabel::P { i, j });
            }
        }
        labels.push(StateLabel::Z1);
        labels.push(StateLabel::Z0);
        labels
    }
}

fn check_shape(formula: &CnfFormula) -> Result<BaseLayout> {
    let (n, m) = (formula.num_vars(), formula.num_clauses());
    if n < 2 || m < 1 {
        return Err(Error::Domain(format!(
            "gadget construction needs n >= 2 and m >= 1, got n = {n}, m = {m}"
        )));
    }
    Ok(BaseLayout { n, m })
}

/// The three-letter gadget with `2(m+1)(n+1) + 1` states.
pub fn build_base_gadget(formula: &CnfFormula) -> Result<LabeledDfa> {
    let layout = check_shape(formula)?;
    let (n, m) = (layout.n, layout.m);
    let labels = layout.labels();
    let z0 = layout.z0();

    let mut delta = Vec::with_capacity(3 * layout.len());
    for label in &labels {
        let row: [usize; 3] = match *label {
            StateLabel::Q { i, j } if i <= m && j <= n => [
                layout.index(&f_aux(LETTER_A, i, j, formula)?),
                layout.index(&f_aux(LETTER_B, i, j, formula)?),
                layout.q(i, 1),
            ],
            // j + 1 = n + 1 lands on z1.
            StateLabel::Q { i, j } if i == m + 1 => {
                let next = layout.q(m + 1, j + 1);
                [next, next, layout.q(m + 1, 1)]
            }
            StateLabel::Q { .. } => [z0, z0, layout.q(m + 1, 1)],
            StateLabel::P { i, j } if j <= n => {
                let next = layout.p(i, j + 1);
                [next, next, next]
            }
            StateLabel::P { i, .. } => [z0, z0, layout.q(i, 1)],
            StateLabel::Z1 => {
                let first = layout.q(m + 1, 1);
                [first, first, z0]
            }
            StateLabel::Z0 => [z0, z0, z0],
            _ => unreachable!(),
        };
        delta.extend(row);
    }
    let dfa = Dfa::new(layout.len(), 3, delta)?;
    Ok(LabeledDfa::new(
        dfa,
        labels,
        GadgetMeta {
            n,
            m,
            r: 2,
            is_binary: false,
        },
    ))
}

/// `v(τ)`: `a` for true variables, `b` for false ones.
pub fn encode_assignment(assignment: &TruthAssignment) -> Word {
    Word::new(
        assignment
            .values()
            .iter()
            .map(|&v| if v { LETTER_A } else { LETTER_B })
            .collect(),
    )
}

/// `c^{r-1} v(τ) c`, of length `n + r`.
pub fn witness_word(assignment: &TruthAssignment, r: usize) -> Result<Word> {
    if r < 2 {
        return Err(Error::Domain(format!("witness words need r >= 2, got {r}")));
    }
    let mut w = Word::repeat(LETTER_C, r - 1);
    w.extend_from(&encode_assignment(assignment));
    w.push(LETTER_C);
    Ok(w)
}

pub fn build_iterated_gadget(formula: &CnfFormula, r: usize) -> Result<LabeledDfa> {
    build_iterated_gadget_capped(formula, r, DEFAULT_STATE_CAP)
}

/// The `r`-level gadget; level 2 is the base gadget. Fails when the state
/// count `|Q_2|^(r-1)` would exceed `state_cap`.
pub fn build_iterated_gadget_capped(
    formula: &CnfFormula,
    r: usize,
    state_cap: usize,
) -> Result<LabeledDfa> {
    if r < 2 {
        return Err(Error::Domain(format!(
            "iteration level must be >= 2, got {r}"
        )));
    }
    let layout = check_shape(formula)?;
    let size = u32::try_from(r - 1)
        .ok()
        .and_then(|e| (layout.len() as u128).checked_pow(e))
        .unwrap_or(u128::MAX);
    if size > state_cap as u128 {
        return Err(Error::Capacity(format!(
            "level {r} gadget would have {size} states, cap is {state_cap}"
        )));
    }

    let base = build_base_gadget(formula)?;
    let mut current = base.clone();
    for level in 3..=r {
        current = lift(&base, &current, layout, level);
    }
    Ok(current)
}

fn lift(base: &LabeledDfa, lower: &LabeledDfa, layout: BaseLayout, level: usize) -> LabeledDfa {
    let (n, m) = (layout.n, layout.m);
    let z0 = layout.z0();
    let restart = layout.q(m + 1, 1);
    let lower_len = lower.num_states();
    let outer_len = layout.len() - 1;
    let total = lower_len + outer_len * lower_len;

    // Outer states whose move to q_{m+1,1} drops the pair to its inner state.
    let drops = |q: usize| match base.label(q) {
        StateLabel::Q { i, j } => (*i <= m && *j == n + 1) || (*i == m + 1 && (2..=n).contains(j)),
        StateLabel::Z1 => true,
        _ => false,
    };

    let mut delta = Vec::with_capacity(3 * total);
    for q in 0..lower_len {
        delta.extend(lower.dfa().row(q));
    }
    for outer in 0..outer_len {
        let drop = drops(outer);
        for inner in 0..lower_len {
            for d in 0..3 {
                let t = base.dfa().next(outer, d);
                delta.push(if t == z0 {
                    z0
                } else if t == restart && drop {
                    inner
                } else {
                    lower_len + t * lower_len + inner
                });
            }
        }
    }

    let mut labels = lower.labels().to_vec();
    labels.reserve(outer_len * lower_len);
    for outer in 0..outer_len {
        for inner in lower.labels() {
            labels.push(StateLabel::Product(
                Box::new(base.label(outer).clone()),
                Box::new(inner.clone()),
            ));
        }
    }
    let dfa = Dfa::new(total, 3, delta).expect("lifted table is total");
    LabeledDfa::new(
        dfa,
        labels,
        GadgetMeta {
            n,
            m,
            r: level,
            is_binary: false,
        },
    )
}

/// Two-letter simulation of a three-letter automaton on `Q × {a1, a2, a3}`:
/// `a` advances the pending letter (saturating at `a3`), `b` applies it and
/// resets it to `a1`. State `(q, a_k)` has index `3q + k - 1`.
pub fn binary_encoding(dfa: &Dfa) -> Result<Dfa> {
    if dfa.num_letters() != 3 {
        return Err(Error::Domain(format!(
            "binary encoding needs exactly 3 letters, got {}",
            dfa.num_letters()
        )));
    }
    let mut delta = Vec::with_capacity(6 * dfa.num_states());
    for q in 0..dfa.num_states() {
        for pending in 0..3 {
            delta.push(3 * q + (pending + 1).min(2));
            delta.push(3 * dfa.next(q, pending));
        }
    }
    Dfa::new(3 * dfa.num_states(), 2, delta)
}

pub fn to_binary(gadget: &LabeledDfa) -> Result<LabeledDfa> {
    let dfa = binary_encoding(gadget.dfa())?;
    let labels = gadget
        .labels()
        .iter()
        .flat_map(|l| (1..=3).map(move |k| StateLabel::Triple(Box::new(l.clone()), k)))
        .collect();
    Ok(LabeledDfa::new(
        dfa,
        labels,
        GadgetMeta {
            is_binary: true,
            ..gadget.meta()
        },
    ))
}

/// Maps a word over `{a1, a2, a3}` to `b v_1 .. v_l` with `a1 -> b`,
/// `a2 -> ab`, `a3 -> aab`.
pub fn translate_word(word: &Word) -> Result<Word> {
    let mut out = Word::new(vec![LETTER_B]);
    for d in word.iter() {
        if d > 2 {
            return Err(Error::Domain(format!("letter index {d} is not in a1..a3")));
        }
        for _ in 0..d {
            out.push(LETTER_A);
        }
        out.push(LETTER_B);
    }
    Ok(out)
}
