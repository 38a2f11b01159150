#![allow(dead_code)]

use balanced_biclique::ingest::{generate_random_bigraph, EdgeBudget, GeneratorParams};
use balanced_biclique::{Sign, SignedBipartiteGraph};

use Sign::{Negative as N, Positive as P};

/// Four-by-four example: u1 -> {v1..v4}, u2 -> {v1,v2,v3}, u3 -> {v1,v2,v4},
/// u4 -> {v1,v3,v4}. Index i stands for u_{i+1} / v_{i+1}.
pub fn wedge_vs_pruning_example() -> SignedBipartiteGraph {
    let adj: [&[u32]; 4] = [&[0, 1, 2, 3], &[0, 1, 2], &[0, 1, 3], &[0, 2, 3]];
    let edges: Vec<_> = adj
        .iter()
        .enumerate()
        .flat_map(|(u, vs)| vs.iter().map(move |&v| (u as u32, v, P)))
        .collect();
    SignedBipartiteGraph::from_edges(&edges).unwrap()
}

/// Complete 4x4 drug-target example with negative edges (u1,v4), (u3,v1),
/// (u4,v1), (u4,v2).
pub fn drug_target_example() -> SignedBipartiteGraph {
    let negative = [(0, 3), (2, 0), (3, 0), (3, 1)];
    let edges: Vec<_> = (0..4u32)
        .flat_map(|u| (0..4u32).map(move |v| (u, v)))
        .map(|(u, v)| (u, v, if negative.contains(&(u, v)) { N } else { P }))
        .collect();
    SignedBipartiteGraph::from_edges(&edges).unwrap()
}

pub fn complete(m: u32, n: u32, sign: Sign) -> SignedBipartiteGraph {
    let edges: Vec<_> = (0..m).flat_map(|u| (0..n).map(move |v| (u, v, sign))).collect();
    SignedBipartiteGraph::from_edges(&edges).unwrap()
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub graph: SignedBipartiteGraph,
}

pub const DENSITIES: [f64; 4] = [0.2, 0.4, 0.6, 0.8];
pub const POSITIVE_FRACTIONS: [f64; 4] = [0.3, 0.5, 0.7, 1.0];

/// 208 seeded random graphs: 13 per (density, p_pos) pair, side sizes in 4..=12.
pub fn corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for (di, &density) in DENSITIES.iter().enumerate() {
        for (pi, &p_pos) in POSITIVE_FRACTIONS.iter().enumerate() {
            for rep in 0..13u64 {
                let seed = 1000 * di as u64 + 100 * pi as u64 + rep;
                let left = 4 + (seed * 7 % 9) as usize;
                let right = 4 + (seed * 5 % 9) as usize;
                let graph = generate_random_bigraph(GeneratorParams {
                    left,
                    right,
                    edges: EdgeBudget::Density(density),
                    p_pos,
                    seed,
                })
                .unwrap();
                out.push(CorpusEntry {
                    name: format!("d{density}-pp{p_pos}-s{seed}-{left}x{right}"),
                    graph,
                });
            }
        }
    }
    out
}

pub const PQ_GRID: [(usize, usize); 9] = [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4), (4, 2), (4, 3), (4, 4)];

/// Arbitrary small signed bipartite graphs, isolated vertices included.
pub fn arb_graph(max_side: usize) -> impl proptest::strategy::Strategy<Value = SignedBipartiteGraph> {
    use proptest::prelude::*;
    (1..=max_side, 1..=max_side)
        .prop_flat_map(|(m, n)| (Just(m), Just(n), proptest::collection::vec(0u8..3, m * n)))
        .prop_map(|(m, n, cells)| {
            let edges: Vec<_> = cells
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| ((i / n) as u32, (i % n) as u32, if c == 1 { P } else { N }))
                .collect();
            SignedBipartiteGraph::with_counts(m, n, &edges).unwrap()
        })
}
