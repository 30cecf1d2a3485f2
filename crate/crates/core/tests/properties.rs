use proptest::prelude::*;

use raag_core::decomposition::quotient_word;
use raag_core::generators::{apply, enumerate_aut1_generators, realize_aut1};
use raag_core::word::{exponent_sums, inverse_word, multiply};
use raag_core::{build_flags_hypergraph, normal_form, Letter, SimpleGraph};

fn graphs() -> Vec<SimpleGraph> {
    vec![
        SimpleGraph::path(4),
        SimpleGraph::cycle(5),
        SimpleGraph::complete(3),
        SimpleGraph::from_label_edges([("a", "b"), ("b", "c"), ("b", "d"), ("c", "d"), ("d", "e")])
            .unwrap(),
    ]
}

fn word(n: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(
        (0..n, any::<bool>()).prop_map(|(vertex, inverse)| Letter { vertex, inverse }),
        0..12,
    )
}

fn graph_and_words() -> impl Strategy<Value = (SimpleGraph, Vec<Letter>, Vec<Letter>)> {
    (0..graphs().len()).prop_flat_map(|i| {
        let g = graphs().swap_remove(i);
        let n = g.len();
        (Just(g), word(n), word(n))
    })
}

proptest! {
    #[test]
    fn normal_form_is_idempotent((g, w, _) in graph_and_words()) {
        let nf = normal_form(&g, &w).unwrap();
        prop_assert_eq!(normal_form(&g, nf.letters()).unwrap(), nf);
    }

    #[test]
    fn exponent_sums_survive_reduction((g, w, _) in graph_and_words()) {
        let nf = normal_form(&g, &w).unwrap();
        prop_assert_eq!(exponent_sums(g.len(), nf.letters()), exponent_sums(g.len(), &w));
    }

    #[test]
    fn word_times_inverse_is_trivial((g, w, _) in graph_and_words()) {
        prop_assert!(multiply(&g, &w, &inverse_word(&w)).unwrap().is_empty());
    }

    #[test]
    fn automorphisms_are_multiplicative((g, w1, w2) in graph_and_words(), pick in any::<prop::sample::Index>()) {
        let fh = build_flags_hypergraph(&g).unwrap();
        let gens = enumerate_aut1_generators(&g, &fh);
        let a = realize_aut1(&g, &fh, &gens[pick.index(gens.len())]).unwrap();
        let joined: Vec<Letter> = w1.iter().chain(&w2).copied().collect();
        let lhs = apply(&g, &a, &joined).unwrap();
        let i1 = apply(&g, &a, &w1).unwrap();
        let i2 = apply(&g, &a, &w2).unwrap();
        prop_assert_eq!(lhs, multiply(&g, i1.letters(), i2.letters()).unwrap());
    }

    #[test]
    fn quotients_are_multiplicative((g, w1, w2) in graph_and_words(), pick in any::<prop::sample::Index>()) {
        let fh = build_flags_hypergraph(&g).unwrap();
        let e = &fh.hyperedges[pick.index(fh.hyperedges.len())];
        let killed = g.class_link(fh.top(e));
        let (sub, _) = g.induced(g.all_vertices().difference(killed));
        let joined: Vec<Letter> = w1.iter().chain(&w2).copied().collect();
        let q1 = quotient_word(&g, &fh, e, &w1).unwrap();
        let q2 = quotient_word(&g, &fh, e, &w2).unwrap();
        prop_assert_eq!(quotient_word(&g, &fh, e, &joined).unwrap(), multiply(&sub, q1.letters(), q2.letters()).unwrap());
    }
}
