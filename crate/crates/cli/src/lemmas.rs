//! Enumerable structural checks on gadgets built from unsatisfiable formulas.
//!
//! `T` is the first row `{q_{i,1}}` of the base gadget, or at level `r > 2`
//! the union of blocks `{q_{i,1}} × Q_{r-1}`. For every `v ∈ {a,b}^n`:
//!
//! * some row `i <= m` ends on `q_{i,n+1}` (its whole block at level `r > 2`)
//!   inside `T.v`;
//! * for every letter `d`, `T.vd` contains `q_{m+1,1}` (all of `Q_{r-1}` at
//!   level `r > 2`).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use synchro::{LabeledDfa, StateSet, Word, LETTER_A, LETTER_B};

/// Exhaustive enumeration up to this many variables.
pub const MAX_EXHAUSTIVE_VARS: usize = 12;
pub const SAMPLED_WORDS: usize = 10_000;
const SAMPLE_SEED: u64 = 0x1e_aa_a5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaOutcome {
    pub words_checked: usize,
    pub exhaustive: bool,
    /// First word violating the property, if any.
    pub counterexample: Option<Word>,
}

impl LemmaOutcome {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

struct Blocks {
    base_len: usize,
    /// Size of each block `{q'} × Q_{r-1}`; 1 at the base level.
    block: usize,
    offset: usize,
}

impl Blocks {
    fn of(g: &LabeledDfa) -> Self {
        let meta = g.meta();
        let base_len = 2 * (meta.m + 1) * (meta.n + 1) + 1;
        if meta.r == 2 {
            Blocks {
                base_len,
                block: 1,
                offset: 0,
            }
        } else {
            let lower = g.num_states() / base_len;
            Blocks {
                base_len,
                block: lower,
                offset: lower,
            }
        }
    }

    /// All states of the block whose outer component is base state `outer`.
    fn members(&self, outer: usize) -> impl Iterator<Item = usize> + '_ {
        debug_assert!(outer < self.base_len);
        let start = self.offset + outer * self.block;
        start..start + self.block
    }
}

fn first_row(g: &LabeledDfa, blocks: &Blocks) -> StateSet {
    let m = g.meta().m;
    let mut t = StateSet::empty(g.num_states());
    for i in 1..=m + 1 {
        let outer = g.q(i, 1).expect("first row exists");
        for q in blocks.members(outer) {
            t.insert(q);
        }
    }
    t
}

/// Words over `{a, b}` of length `n`: all of them when `n` is small, a
/// seeded sample otherwise.
fn words(n: usize) -> (Box<dyn Iterator<Item = Word>>, bool) {
    if n <= MAX_EXHAUSTIVE_VARS {
        let it = (0u32..1 << n).map(move |code| {
            Word::new(
                (0..n)
                    .map(|j| {
                        if code >> (n - 1 - j) & 1 == 0 {
                            LETTER_A
                        } else {
                            LETTER_B
                        }
                    })
                    .collect(),
            )
        });
        (Box::new(it), true)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        let it = (0..SAMPLED_WORDS)
            .map(move |_| Word::new((0..n).map(|_| rng.gen_range(LETTER_A..=LETTER_B)).collect()));
        (Box::new(it), false)
    }
}

/// Some row `i <= m` survives to column `n + 1` under every `v ∈ {a,b}^n`.
pub fn check_row_survives(g: &LabeledDfa) -> LemmaOutcome {
    let meta = g.meta();
    let blocks = Blocks::of(g);
    let t = first_row(g, &blocks);
    let ends: Vec<usize> = (1..=meta.m)
        .map(|i| g.q(i, meta.n + 1).expect("row end"))
        .collect();
    let (all, exhaustive) = words(meta.n);
    let mut checked = 0;
    for v in all {
        checked += 1;
        let image = g.dfa().image(&t, &v).expect("letters in range");
        let ok = ends
            .iter()
            .any(|&outer| blocks.members(outer).all(|q| image.contains(q)));
        if !ok {
            return LemmaOutcome {
                words_checked: checked,
                exhaustive,
                counterexample: Some(v),
            };
        }
    }
    LemmaOutcome {
        words_checked: checked,
        exhaustive,
        counterexample: None,
    }
}

/// `T.vd` always contains the restart state `q_{m+1,1}` (at level `r > 2`,
/// the whole lower copy `Q_{r-1}`).
pub fn check_restart_occupied(g: &LabeledDfa) -> LemmaOutcome {
    let meta = g.meta();
    let blocks = Blocks::of(g);
    let t = first_row(g, &blocks);
    let required: Vec<usize> = if meta.r == 2 {
        vec![g.q(meta.m + 1, 1).expect("restart state")]
    } else {
        (0..blocks.block).collect()
    };
    let (all, exhaustive) = words(meta.n);
    let mut checked = 0;
    for v in all {
        checked += 1;
        let tv = g.dfa().image(&t, &v).expect("letters in range");
        for d in 0..g.dfa().num_letters() {
            let image = g
                .dfa()
                .image(&tv, &Word::new(vec![d]))
                .expect("letter in range");
            if !required.iter().all(|&q| image.contains(q)) {
                let mut witness = v.clone();
                witness.push(d);
                return LemmaOutcome {
                    words_checked: checked,
                    exhaustive,
                    counterexample: Some(witness),
                };
            }
        }
    }
    LemmaOutcome {
        words_checked: checked,
        exhaustive,
        counterexample: None,
    }
}
