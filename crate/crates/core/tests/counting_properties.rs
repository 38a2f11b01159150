mod common;

use balanced_biclique::bbvp::{build_anchor_context, AnchorContext};
use balanced_biclique::bbwc::{self, WedgeBuckets};
use balanced_biclique::combinatorics::{for_each_combination, BinomialColumn};
use balanced_biclique::count::AnchorPlan;
use balanced_biclique::oracle::{self, count_all_bruteforce, Biclique, DEFAULT_SIZE_CAP};
use balanced_biclique::{
    count_balanced, Algorithm, AnchorSide, CandidateDirection, CountOptions, Side, Sign, SignedBipartiteGraph,
};
use proptest::prelude::*;

fn run(g: &SignedBipartiteGraph, algo: Algorithm, p: usize, q: usize, opts: &CountOptions) -> u128 {
    count_balanced(g, algo, p, q, opts).unwrap().count
}

#[test]
fn complete_graphs() {
    let k33 = common::complete(3, 3, Sign::Positive);
    let k44 = common::complete(4, 4, Sign::Positive);
    for algo in Algorithm::ALL {
        assert_eq!(run(&k33, algo, 3, 3, &CountOptions::default()), 1, "{algo:?}");
        assert_eq!(run(&k44, algo, 3, 3, &CountOptions::default()), 16, "{algo:?}");
    }
    let r = count_balanced(&k44, Algorithm::Baseline, 3, 3, &CountOptions::default()).unwrap();
    assert_eq!(r.work.bicliques_rejected, 0);
}

#[test]
fn worked_example_baseline_materializes_nothing() {
    let g = common::wedge_vs_pruning_example();
    let r = count_balanced(&g, Algorithm::Baseline, 3, 3, &CountOptions::default()).unwrap();
    assert_eq!((r.count, r.work.bicliques_materialized), (0, 0));
}

#[test]
fn worked_example_candidate_context() {
    let g = common::wedge_vs_pruning_example();
    let plan = AnchorPlan::resolve(&g, 3, 3, AnchorSide::Auto);
    let mut ctx = AnchorContext::new(g.left_count());
    assert!(build_anchor_context(
        &g,
        plan,
        CandidateDirection::BelowAnchor,
        0,
        &mut ctx
    ));
    let mut c = ctx.candidates().to_vec();
    c.sort_unstable();
    assert_eq!(c, vec![1, 2, 3]);
    for w in 1..4 {
        assert_eq!(ctx.shared_count(w), 3);
    }
    for (a, b) in [(1, 2), (1, 3), (2, 3)] {
        let la = ctx.common_neighbors(a).unwrap();
        let lb = ctx.common_neighbors(b).unwrap();
        assert_eq!(la.iter().filter(|v| lb.contains(v)).count(), 2);
    }
    let r = count_balanced(&g, Algorithm::Bbvp, 3, 3, &CountOptions::default()).unwrap();
    assert_eq!(r.count, 0);
}

#[test]
fn drug_target_example_all_algorithms_agree() {
    let g = common::drug_target_example();
    for (p, q) in common::PQ_GRID {
        let expected = oracle::count_balanced_bruteforce(&g, p, q, DEFAULT_SIZE_CAP).unwrap();
        for algo in Algorithm::ALL {
            assert_eq!(
                run(&g, algo, p, q, &CountOptions::default()),
                expected,
                "{algo:?} ({p},{q})"
            );
        }
    }
}

/// Anchor u0 shares two neighbors with each of five lower vertices, but no
/// neighbor of u0 has three lower neighbors.
#[test]
fn subset_counter_is_not_bounded_by_wedges() {
    let mut edges: Vec<(u32, u32, Sign)> = (0..8).map(|v| (0, v, Sign::Positive)).collect();
    for (u, vs) in [(1, [0, 1]), (2, [0, 1]), (3, [2, 3]), (4, [4, 5]), (5, [6, 7])] {
        edges.extend(vs.iter().map(|&v| (u, v, Sign::Positive)));
    }
    let g = SignedBipartiteGraph::from_edges(&edges).unwrap();
    let opts = CountOptions {
        anchor_side: AnchorSide::Left,
        ..Default::default()
    };
    let bbvp = count_balanced(&g, Algorithm::Bbvp, 4, 2, &opts).unwrap();
    let bbwc = count_balanced(&g, Algorithm::Bbwc, 4, 2, &opts).unwrap();
    assert_eq!((bbvp.count, bbwc.count), (0, 0));
    assert_eq!(bbvp.work.subsets, 10);
    assert_eq!(bbwc.work.wedges, 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn algorithms_match_oracle(g in common::arb_graph(8), p in 2usize..5, q in 2usize..5) {
        let expected = oracle::count_balanced_bruteforce(&g, p, q, DEFAULT_SIZE_CAP).unwrap();
        for algo in [Algorithm::Baseline, Algorithm::Bbwc, Algorithm::Bbvp] {
            prop_assert_eq!(run(&g, algo, p, q, &CountOptions::default()), expected);
        }
    }

    #[test]
    fn counts_ignore_execution_choices(g in common::arb_graph(8), p in 2usize..5, q in 2usize..5) {
        let reference = run(&g, Algorithm::Bbvp, p, q, &CountOptions::default());
        for algo in [Algorithm::Baseline, Algorithm::Bbwc, Algorithm::Bbvp] {
            for anchor_side in [AnchorSide::Left, AnchorSide::Right] {
                for threads in [1, 3] {
                    for candidate_direction in [CandidateDirection::BelowAnchor, CandidateDirection::AboveAnchor] {
                        let opts = CountOptions { anchor_side, threads, candidate_direction, check_every: 2, ..Default::default() };
                        prop_assert_eq!(run(&g, algo, p, q, &opts), reference);
                    }
                }
            }
        }
    }

    #[test]
    fn baseline_materializes_every_biclique(g in common::arb_graph(8), p in 2usize..5, q in 2usize..5) {
        for anchor_side in [AnchorSide::Left, AnchorSide::Right] {
            let opts = CountOptions { anchor_side, ..Default::default() };
            let r = count_balanced(&g, Algorithm::Baseline, p, q, &opts).unwrap();
            prop_assert_eq!(r.work.bicliques_materialized as u128, count_all_bruteforce(&g, p, q, DEFAULT_SIZE_CAP).unwrap());
            prop_assert_eq!(r.work.bicliques_materialized - r.work.bicliques_rejected, r.count as u64);
        }
    }

    #[test]
    fn pruning_keeps_every_biclique(g in common::arb_graph(8), p in 2usize..5, q in 2usize..5) {
        let plan = AnchorPlan::resolve(&g, p, q, AnchorSide::Left);
        let mut ctx = AnchorContext::new(g.left_count());
        oracle::for_each_biclique(&g, p, q, DEFAULT_SIZE_CAP, |b| {
            let u = *b.left.iter().max_by_key(|&&x| g.rank(Side::Left, x)).unwrap();
            assert!(build_anchor_context(&g, plan, CandidateDirection::BelowAnchor, u, &mut ctx));
            for &w in b.left.iter().filter(|&&w| w != u) {
                assert!(ctx.candidates().contains(&w));
                let common = ctx.common_neighbors(w).unwrap();
                assert!(b.right.iter().all(|v| common.contains(v)));
            }
        })
        .unwrap();
    }

    #[test]
    fn same_pattern_completions_are_balanced(g in common::arb_graph(8), p in 2usize..5, q in 2usize..4) {
        let plan = AnchorPlan::resolve(&g, p, q, AnchorSide::Left);
        let binom = BinomialColumn::new(q);
        let mut buckets = WedgeBuckets::default();
        for u in 0..g.left_count() as u32 {
            let out = bbwc::scan_anchor(&g, plan, u, &mut buckets, &binom).unwrap();
            prop_assert_eq!(buckets.total(), out.work.wedges);
            for (code, tail, tally) in buckets.iter() {
                let centers: Vec<u32> = (0..g.right_count() as u32)
                    .filter(|&v| bbwc::wedge_type(&g, Side::Left, u, v, tail).ok() == Some(code))
                    .collect();
                prop_assert_eq!(centers.len(), tally as usize);
                let mut left = vec![u];
                left.extend_from_slice(tail);
                let mut ok = true;
                for_each_combination(centers.len(), q, |idx| {
                    let right: Vec<u32> = idx.iter().map(|&i| centers[i]).collect();
                    ok &= Biclique::from_graph(&g, &left, &right).is_some_and(|b| b.is_balanced_pairwise());
                    ok
                });
                prop_assert!(ok);
            }
        }
    }
}
