//! Formula fixtures and seeded generators for the verification sweep.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use synchro::{brute_force_sat, CnfFormula, Literal, TruthAssignment};

#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub formula: CnfFormula,
}

impl Instance {
    pub fn new(name: impl Into<String>, formula: CnfFormula) -> Self {
        Instance {
            name: name.into(),
            formula,
        }
    }
}

/// `x1 ∨ x2 ∨ x3, ¬x1 ∨ x2, ¬x2 ∨ x3, ¬x2 ∨ ¬x3`: satisfiable only by `(0, 0, 1)`.
pub fn psi1() -> CnfFormula {
    CnfFormula::from_ints(3, &[&[1, 2, 3], &[-1, 2], &[-2, 3], &[-2, -3]]).expect("fixture")
}

/// As [`psi1`] with `x3` dropped from the first clause: unsatisfiable.
pub fn psi2() -> CnfFormula {
    CnfFormula::from_ints(3, &[&[1, 2], &[-1, 2], &[-2, 3], &[-2, -3]]).expect("fixture")
}

/// A single empty clause over `n` variables.
pub fn empty_clause(n: usize) -> CnfFormula {
    CnfFormula::new(n, vec![vec![]]).expect("valid shape")
}

/// `x1 ∧ ¬x1` over `n` variables.
pub fn contradiction(n: usize) -> CnfFormula {
    CnfFormula::new(n, vec![vec![Literal::pos(1)], vec![Literal::neg(1)]]).expect("valid shape")
}

/// Three pigeons, one hole: each pigeon `x1..x3` sits in the hole and no two
/// share it. Variables beyond 3 are unused padding.
pub fn pigeonhole(n: usize) -> CnfFormula {
    assert!(n >= 3, "pigeonhole family needs three variables");
    CnfFormula::from_ints(n, &[&[1], &[2], &[3], &[-1, -2], &[-1, -3], &[-2, -3]])
        .expect("valid shape")
}

fn random_clause(rng: &mut impl Rng, n: usize, max_width: usize) -> Vec<Literal> {
    let width = rng.gen_range(1..=max_width.min(n));
    let mut vars: Vec<usize> = (1..=n).collect();
    vars.shuffle(rng);
    vars.truncate(width);
    vars.into_iter()
        .map(|var| Literal {
            var,
            positive: rng.gen_bool(0.5),
        })
        .collect()
}

/// Random clauses of width 1..=3, each made true by a hidden assignment.
pub fn planted_sat(rng: &mut impl Rng, n: usize, m: usize) -> (CnfFormula, TruthAssignment) {
    let planted = TruthAssignment::new((0..n).map(|_| rng.gen_bool(0.5)).collect());
    let clauses = (0..m)
        .map(|_| {
            let mut c = random_clause(rng, n, 3);
            if !c.iter().any(|l| planted.value(l.var) == l.positive) {
                let k = rng.gen_range(0..c.len());
                c[k].positive = !c[k].positive;
            }
            c
        })
        .collect();
    (CnfFormula::new(n, clauses).expect("valid shape"), planted)
}

/// Rejection-samples narrow random clauses until the oracle reports the
/// formula unsatisfiable. Clause count stays within `2..=max_m`.
pub fn random_unsat(rng: &mut impl Rng, n: usize, max_m: usize) -> CnfFormula {
    loop {
        let m = rng.gen_range(2..=max_m);
        let clauses = (0..m).map(|_| random_clause(rng, n, 2)).collect();
        let f = CnfFormula::new(n, clauses).expect("valid shape");
        if brute_force_sat(&f).expect("small n").is_none() {
            return f;
        }
    }
}

/// Seeded sweep of `count` satisfiable and `count` unsatisfiable formulas with
/// `n ∈ {3, 4, 5}` and at most 8 clauses. The unsatisfiable half opens with
/// the structured families (empty clause, contradiction, pigeonhole) for
/// each `n`.
pub fn sweep(seed: u64, count: usize) -> (Vec<Instance>, Vec<Instance>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sizes = [3usize, 4, 5];

    let sat = (0..count)
        .map(|k| {
            let n = sizes[k % 3];
            let m = rng.gen_range(1..=8);
            let (f, _) = planted_sat(&mut rng, n, m);
            Instance::new(format!("planted-{k:02}-n{n}-m{m}"), f)
        })
        .collect();

    let mut unsat = Vec::with_capacity(count);
    for &n in &sizes {
        unsat.push(Instance::new(format!("empty-n{n}"), empty_clause(n)));
        unsat.push(Instance::new(
            format!("contradiction-n{n}"),
            contradiction(n),
        ));
        unsat.push(Instance::new(format!("pigeonhole-n{n}"), pigeonhole(n)));
    }
    unsat.truncate(count);
    let mut k = 0;
    while unsat.len() < count {
        let n = sizes[k % 3];
        let f = random_unsat(&mut rng, n, 8);
        unsat.push(Instance::new(
            format!("unsat-{k:02}-n{n}-m{}", f.num_clauses()),
            f,
        ));
        k += 1;
    }
    (sat, unsat)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structured_families_are_unsat() {
        for n in 3..=5 {
            for f in [empty_clause(n), contradiction(n), pigeonhole(n)] {
                assert_eq!(brute_force_sat(&f).unwrap(), None);
            }
        }
    }

    #[test]
    fn sweep_is_seeded_and_split_by_oracle() {
        let (sat, unsat) = sweep(11, 12);
        assert_eq!(sat.len(), 12);
        assert_eq!(unsat.len(), 12);
        for inst in &sat {
            assert!(
                brute_force_sat(&inst.formula).unwrap().is_some(),
                "{}",
                inst.name
            );
            assert!(inst.formula.num_clauses() <= 8);
        }
        for inst in &unsat {
            assert!(
                brute_force_sat(&inst.formula).unwrap().is_none(),
                "{}",
                inst.name
            );
            assert!(inst.formula.num_clauses() <= 8);
        }
        let (again, _) = sweep(11, 12);
        assert_eq!(sat[5].formula, again[5].formula);
    }

    #[test]
    fn planted_assignment_satisfies() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let (f, tau) = planted_sat(&mut rng, 5, 8);
            assert!(f.evaluate(&tau));
        }
    }
}
