mod common;

use balanced_biclique::ingest::{generate_random_bigraph, EdgeBudget, GeneratorParams};
use balanced_biclique::oracle::{count_all_bruteforce, count_balanced_bruteforce, Biclique, DEFAULT_SIZE_CAP};
use balanced_biclique::Sign;
use proptest::prelude::*;

/// Balanced butterflies by four nested loops over distinct vertex pairs.
fn butterflies_by_loops(g: &balanced_biclique::SignedBipartiteGraph) -> u128 {
    let (m, n) = (g.left_count() as u32, g.right_count() as u32);
    let mut total = 0;
    for a in 0..m {
        for b in a + 1..m {
            for c in 0..n {
                for d in c + 1..n {
                    let signs = [
                        g.edge_sign(a, c),
                        g.edge_sign(a, d),
                        g.edge_sign(b, c),
                        g.edge_sign(b, d),
                    ];
                    if signs.iter().all(Option::is_some) {
                        let negatives = signs.iter().filter(|s| **s == Some(Sign::Negative)).count();
                        total += (negatives % 2 == 0) as u128;
                    }
                }
            }
        }
    }
    total
}

#[test]
fn butterflies_match_direct_enumeration() {
    let g = generate_random_bigraph(GeneratorParams {
        left: 8,
        right: 8,
        edges: EdgeBudget::Density(0.6),
        p_pos: 0.5,
        seed: 11,
    })
    .unwrap();
    let expected = butterflies_by_loops(&g);
    assert!(expected > 0);
    assert_eq!(count_balanced_bruteforce(&g, 2, 2, DEFAULT_SIZE_CAP).unwrap(), expected);
}

#[test]
fn worked_example_has_no_33_bicliques() {
    let g = common::wedge_vs_pruning_example();
    assert_eq!(count_all_bruteforce(&g, 3, 3, DEFAULT_SIZE_CAP).unwrap(), 0);
    assert_eq!(count_balanced_bruteforce(&g, 3, 3, DEFAULT_SIZE_CAP).unwrap(), 0);
}

fn arb_matrix() -> impl Strategy<Value = (usize, usize, Vec<Sign>)> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(p, q)| {
        let cell = prop_oneof![Just(Sign::Positive), Just(Sign::Negative)];
        (Just(p), Just(q), proptest::collection::vec(cell, p * q))
    })
}

proptest! {
    #[test]
    fn balance_oracles_agree((p, q, signs) in arb_matrix()) {
        let b = Biclique::from_matrix(p, q, signs);
        prop_assert_eq!(b.is_balanced_pairwise(), b.is_balanced_rank1());
    }

    #[test]
    fn balanced_never_exceeds_all(g in common::arb_graph(7), p in 2usize..4, q in 2usize..4) {
        let all = count_all_bruteforce(&g, p, q, DEFAULT_SIZE_CAP).unwrap();
        let balanced = count_balanced_bruteforce(&g, p, q, DEFAULT_SIZE_CAP).unwrap();
        prop_assert!(balanced <= all);
        let positive = balanced_biclique::SignedBipartiteGraph::with_counts(
            g.left_count(),
            g.right_count(),
            &g.edges().map(|(u, v, _)| (u, v, Sign::Positive)).collect::<Vec<_>>(),
        )
        .unwrap();
        prop_assert_eq!(count_balanced_bruteforce(&positive, p, q, DEFAULT_SIZE_CAP).unwrap(), all);
    }

    #[test]
    fn flip_and_transpose_symmetry(g in common::arb_graph(7), p in 2usize..4, q in 2usize..4) {
        let c = count_balanced_bruteforce(&g, p, q, DEFAULT_SIZE_CAP).unwrap();
        prop_assert_eq!(count_balanced_bruteforce(&g.sign_flipped(), p, q, DEFAULT_SIZE_CAP).unwrap(), c);
        prop_assert_eq!(count_balanced_bruteforce(&g.transposed(), q, p, DEFAULT_SIZE_CAP).unwrap(), c);
    }

    #[test]
    fn flip_preserves_biclique_verdicts((p, q, signs) in arb_matrix()) {
        let flipped: Vec<Sign> = signs.iter().map(|s| s.flipped()).collect();
        let a = Biclique::from_matrix(p, q, signs);
        let b = Biclique::from_matrix(p, q, flipped);
        prop_assert_eq!(a.is_balanced_pairwise(), b.is_balanced_pairwise());
        prop_assert_eq!(a.is_balanced_rank1(), b.is_balanced_rank1());
    }
}
