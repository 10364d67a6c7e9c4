mod common;

use common::{iddfs_min_reset, psi1, psi2};
use synchro::*;

fn image_labels(g: &LabeledDfa, word: &str) -> Vec<String> {
    let w: Word = word.parse().unwrap();
    g.dfa()
        .image_of_all(&w)
        .unwrap()
        .iter()
        .map(|q| g.label(q).to_string())
        .collect()
}

#[test]
fn sink_rows_of_psi1() {
    let g = build_base_gadget(&psi1()).unwrap();
    let z0 = g.z0().unwrap();
    let z1 = g.index_of(&StateLabel::Z1).unwrap();
    for d in 0..3 {
        assert_eq!(g.dfa().apply_letter(z0, d), Ok(z0));
    }
    assert_eq!(g.dfa().apply_letter(z1, LETTER_C), Ok(z0));
}

#[test]
fn psi1_is_reset_by_cbbac() {
    let g = build_base_gadget(&psi1()).unwrap();
    assert_eq!(g.num_states(), 41);
    assert!(g.dfa().is_synchronizing());
    assert_eq!(image_labels(&g, "cbbac"), vec!["z0"]);
}

// z1 lies on the a/b cycle of length n + 1 through q_{m+1,1}, so a word whose
// only c is the last letter cannot send both z1 and q_{m+1,1} to z0.
#[test]
fn psi2_needs_two_occurrences_of_c() {
    let g = build_base_gadget(&psi2()).unwrap();
    assert_eq!(image_labels(&g, "aaaaaaac"), vec!["q_5_1", "z0"]);
    assert_eq!(image_labels(&g, "caaaaaaac"), vec!["z0"]);
}

#[test]
fn psi1_and_psi2_differ_in_one_arrow() {
    let g1 = build_base_gadget(&psi1()).unwrap();
    let g2 = build_base_gadget(&psi2()).unwrap();
    let mut diffs = Vec::new();
    for q in 0..g1.num_states() {
        for d in 0..3 {
            if g1.dfa().next(q, d) != g2.dfa().next(q, d) {
                diffs.push((
                    g1.label(q).to_string(),
                    d,
                    g2.label(g2.dfa().next(q, d)).to_string(),
                ));
            }
        }
    }
    assert_eq!(
        diffs,
        vec![("q_1_3".to_string(), LETTER_A, "q_1_4".to_string())]
    );
}

#[test]
fn f_aux_on_the_worked_formulas() {
    assert_eq!(f_aux(LETTER_A, 1, 1, &psi1()).unwrap(), StateLabel::Z0);
    assert_eq!(
        f_aux(LETTER_B, 1, 1, &psi1()).unwrap(),
        StateLabel::Q { i: 1, j: 2 }
    );
    assert_eq!(
        f_aux(LETTER_A, 1, 3, &psi2()).unwrap(),
        StateLabel::Q { i: 1, j: 4 }
    );
}

#[test]
fn exact_minima_of_the_worked_formulas() {
    let g1 = build_base_gadget(&psi1()).unwrap();
    let r1 = min_reset_word(g1.dfa(), SearchBudget::default());
    assert_eq!(r1.length(), Some(5));

    let g2 = build_base_gadget(&psi2()).unwrap();
    let r2 = min_reset_word(g2.dfa(), SearchBudget::default());
    assert_eq!(r2.length(), iddfs_min_reset(g2.dfa(), 9));
    assert_eq!(r2.length(), Some(9));
    assert!(r2.length().unwrap() > 2 * (3 - 1));
    assert!(
        g2.dfa()
            .image_of_all(r2.word.as_ref().unwrap())
            .unwrap()
            .len()
            == 1
    );
}

#[test]
fn restart_distance_is_n_plus_one() {
    let g = build_base_gadget(&psi1()).unwrap();
    let from = g.q(g.meta().m + 1, 1).unwrap();
    assert_eq!(
        shortest_path_length(g.dfa(), from, g.z0().unwrap()),
        Some(4)
    );
}

#[test]
fn satisfying_assignment_and_witness() {
    let tau = brute_force_sat(&psi1()).unwrap().unwrap();
    assert_eq!(tau, TruthAssignment::from_bits(&[0, 0, 1]));
    assert!(brute_force_sat(&psi2()).unwrap().is_none());
    assert_eq!(witness_word(&tau, 2).unwrap().to_string(), "cbbac");

    let g3 = build_iterated_gadget(&psi1(), 3).unwrap();
    assert_eq!(g3.num_states(), 41 * 41);
    let w = witness_word(&tau, 3).unwrap();
    assert_eq!(w.len(), 6);
    assert_eq!(g3.dfa().image_of_all(&w).unwrap().singleton(), g3.z0());
}

#[test]
fn iterated_level_two_is_the_base_gadget() {
    let base = build_base_gadget(&psi1()).unwrap();
    let r2 = build_iterated_gadget(&psi1(), 2).unwrap();
    assert_eq!(base.dfa(), r2.dfa());
    assert_eq!(base.labels(), r2.labels());
}

#[test]
fn z1_pairs_drop_to_their_inner_state() {
    let g = build_iterated_gadget(&psi1(), 3).unwrap();
    let base = build_base_gadget(&psi1()).unwrap();
    for inner in base.labels() {
        let pair = StateLabel::Product(Box::new(StateLabel::Z1), Box::new(inner.clone()));
        let q = g.index_of(&pair).unwrap();
        let target = g.index_of(inner).unwrap();
        assert_eq!(g.dfa().next(q, LETTER_A), target);
        assert_eq!(g.dfa().next(q, LETTER_B), target);
    }
}

#[test]
fn lower_level_copy_is_preserved() {
    let g2 = build_base_gadget(&psi2()).unwrap();
    let g3 = build_iterated_gadget(&psi2(), 3).unwrap();
    for q in 0..g2.num_states() {
        for d in 0..3 {
            assert_eq!(g3.dfa().next(q, d), g2.dfa().next(q, d));
        }
        assert_eq!(g3.label(q), g2.label(q));
    }
}

#[test]
fn binary_translation_of_cbbac_resets() {
    let g = build_base_gadget(&psi1()).unwrap();
    let b = to_binary(&g).unwrap();
    let w = translate_word(&"cbbac".parse().unwrap()).unwrap();
    assert_eq!(w.to_string(), "baabababbaab");
    assert_eq!(b.dfa().image_of_all(&w).unwrap().len(), 1);
    assert!(b.dfa().is_synchronizing());
}

#[test]
fn labeled_serialization_round_trip() {
    let g = build_iterated_gadget(&psi1(), 3).unwrap();
    let text = serialize_labeled(&g);
    let (d, labels) = parse_dfa_labeled(&text).unwrap();
    assert_eq!(&d, g.dfa());
    assert_eq!(labels[&0], "q_1_1");
    assert_eq!(labels[&40], "z0");
    assert_eq!(labels[&41], "q_1_1|q_1_1");
    let b = to_binary(&build_base_gadget(&psi1()).unwrap()).unwrap();
    let (_, labels) = parse_dfa_labeled(&serialize_labeled(&b)).unwrap();
    assert_eq!(labels[&1], "q_1_1@2");
}

#[test]
fn greedy_on_the_worked_formulas() {
    for f in [psi1(), psi2()] {
        let g = build_base_gadget(&f).unwrap();
        let w = eppstein_greedy(g.dfa()).unwrap();
        assert_eq!(g.dfa().image_of_all(&w).unwrap().singleton(), g.z0());
        let exact = min_reset_word(g.dfa(), SearchBudget::default())
            .length()
            .unwrap();
        assert!(w.len() >= exact);
        assert!(performance_ratio(w.len() as u64, exact as u64).unwrap() >= Ratio::from_integer(1));
    }
}
