//! Brute-force ground truth.
//!
//! Every (p,q)-biclique is enumerated explicitly over lexicographic subsets of
//! the left side, and balance is decided two independent ways: by checking
//! the parity of every butterfly, and by searching for a per-vertex sign
//! factorization `sign(u,v) = σ(u)·σ(v)`.

use std::time::Instant;

use crate::combinatorics::{binomial, for_each_combination};
use crate::count::{validate_pq, Algorithm, CountError, CountOptions, CountReport, MemoryMethod, WorkCounters};
use crate::graph::{even_negatives, Side, Sign, SignedBipartiteGraph};

/// Default cap on `m * n` for brute-force runs.
pub const DEFAULT_SIZE_CAP: usize = 400;

/// A 4-cycle `(u_i, u_j, v_i, v_j)` with its four edge signs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Butterfly {
    pub left: [u32; 2],
    pub right: [u32; 2],
    /// `signs[a][b]` is the sign of `(left[a], right[b])`.
    pub signs: [[Sign; 2]; 2],
}

impl Butterfly {
    pub fn from_graph(g: &SignedBipartiteGraph, left: [u32; 2], right: [u32; 2]) -> Option<Butterfly> {
        let mut signs = [[Sign::Positive; 2]; 2];
        for a in 0..2 {
            for b in 0..2 {
                signs[a][b] = g.edge_sign(left[a], right[b])?;
            }
        }
        Some(Butterfly { left, right, signs })
    }

    /// Balanced iff the number of negative edges is even.
    pub fn is_balanced(&self) -> bool {
        even_negatives(self.signs.iter().flatten().copied())
    }
}

/// An explicit (p,q)-biclique with its sign submatrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Biclique {
    pub left: Vec<u32>,
    pub right: Vec<u32>,
    /// Row-major `left.len() x right.len()` sign matrix.
    pub signs: Vec<Sign>,
}

impl Biclique {
    /// Materializes `(left, right)` from `g`; `None` unless every pair is an edge.
    pub fn from_graph(g: &SignedBipartiteGraph, left: &[u32], right: &[u32]) -> Option<Biclique> {
        let mut left = left.to_vec();
        let mut right = right.to_vec();
        left.sort_unstable();
        right.sort_unstable();
        let mut signs = Vec::with_capacity(left.len() * right.len());
        for &u in &left {
            for &v in &right {
                signs.push(g.edge_sign(u, v)?);
            }
        }
        Some(Biclique { left, right, signs })
    }

    /// A standalone biclique over `0..p` x `0..q` with the given row-major signs.
    pub fn from_matrix(p: usize, q: usize, signs: Vec<Sign>) -> Biclique {
        assert_eq!(signs.len(), p * q, "sign matrix must be p x q");
        Biclique {
            left: (0..p as u32).collect(),
            right: (0..q as u32).collect(),
            signs,
        }
    }

    pub fn p(&self) -> usize {
        self.left.len()
    }

    pub fn q(&self) -> usize {
        self.right.len()
    }

    pub fn sign(&self, row: usize, col: usize) -> Sign {
        self.signs[row * self.right.len() + col]
    }

    pub fn butterflies(&self) -> impl Iterator<Item = Butterfly> + '_ {
        let (p, q) = (self.p(), self.q());
        (0..p).flat_map(move |a| {
            (a + 1..p).flat_map(move |b| {
                (0..q).flat_map(move |c| {
                    (c + 1..q).map(move |d| Butterfly {
                        left: [self.left[a], self.left[b]],
                        right: [self.right[c], self.right[d]],
                        signs: [[self.sign(a, c), self.sign(a, d)], [self.sign(b, c), self.sign(b, d)]],
                    })
                })
            })
        })
    }

    /// Balanced iff none of its `C(p,2)·C(q,2)` butterflies is unbalanced.
    pub fn is_balanced_pairwise(&self) -> bool {
        self.butterflies().all(|b| b.is_balanced())
    }

    /// Balanced iff the sign matrix factors as `σ(row)·σ(col)`.
    ///
    /// Fixes `σ(row 0) = +`, which determines every column sign from row 0;
    /// each remaining row sign then follows from column 0, and every other
    /// entry must agree.
    pub fn is_balanced_rank1(&self) -> bool {
        let (p, q) = (self.p(), self.q());
        if p == 0 || q == 0 {
            return true;
        }
        let cols: Vec<Sign> = (0..q).map(|c| self.sign(0, c)).collect();
        (1..p).all(|r| {
            let row = self.sign(r, 0).times(cols[0]);
            (1..q).all(|c| self.sign(r, c) == row.times(cols[c]))
        })
    }
}

fn check_cap(g: &SignedBipartiteGraph, cap: usize) -> Result<(), CountError> {
    let (m, n) = (g.left_count(), g.right_count());
    if m.saturating_mul(n) > cap {
        return Err(CountError::SizeGuardExceeded { m, n, cap });
    }
    Ok(())
}

/// Right vertices adjacent to every vertex of `left`, found by scanning all of them.
fn common_right(g: &SignedBipartiteGraph, left: &[u32]) -> Vec<u32> {
    (0..g.right_count() as u32)
        .filter(|&v| left.iter().all(|&u| g.edge_sign(u, v).is_some()))
        .collect()
}

/// Calls `visit` with every (p,q)-biclique of `g`, left subsets in
/// lexicographic order and right subsets lexicographic within each.
pub fn for_each_biclique<F>(
    g: &SignedBipartiteGraph,
    p: usize,
    q: usize,
    cap: usize,
    mut visit: F,
) -> Result<(), CountError>
where
    F: FnMut(&Biclique),
{
    validate_pq(p, q)?;
    check_cap(g, cap)?;
    let mut left = vec![0u32; p];
    let mut right = vec![0u32; q];
    for_each_combination(g.left_count(), p, |ls| {
        for (slot, &i) in left.iter_mut().zip(ls) {
            *slot = i as u32;
        }
        let common = common_right(g, &left);
        for_each_combination(common.len(), q, |rs| {
            for (slot, &i) in right.iter_mut().zip(rs) {
                *slot = common[i];
            }
            let b = Biclique::from_graph(g, &left, &right).expect("common neighbors form a biclique");
            visit(&b);
            true
        });
        true
    });
    Ok(())
}

/// Number of (p,q)-bicliques, balanced or not.
pub fn count_all_bruteforce(g: &SignedBipartiteGraph, p: usize, q: usize, cap: usize) -> Result<u128, CountError> {
    validate_pq(p, q)?;
    check_cap(g, cap)?;
    let mut total: u128 = 0;
    let mut overflow = false;
    let mut left = vec![0u32; p];
    for_each_combination(g.left_count(), p, |ls| {
        for (slot, &i) in left.iter_mut().zip(ls) {
            *slot = i as u32;
        }
        let t = common_right(g, &left).len();
        match binomial(t as u64, q as u64).and_then(|c| total.checked_add(c)) {
            Some(next) => {
                total = next;
                true
            }
            None => {
                overflow = true;
                false
            }
        }
    });
    if overflow {
        return Err(CountError::Overflow);
    }
    Ok(total)
}

/// Number of balanced (p,q)-bicliques, judged by butterfly parity.
pub fn count_balanced_bruteforce(g: &SignedBipartiteGraph, p: usize, q: usize, cap: usize) -> Result<u128, CountError> {
    let mut total: u128 = 0;
    for_each_biclique(g, p, q, cap, |b| {
        if b.is_balanced_pairwise() {
            total += 1;
        }
    })?;
    Ok(total)
}

/// Oracle count wrapped in a [`CountReport`].
pub fn count_report(
    g: &SignedBipartiteGraph,
    p: usize,
    q: usize,
    opts: &CountOptions,
) -> Result<CountReport, CountError> {
    let started = Instant::now();
    let mut count: u128 = 0;
    let mut work = WorkCounters::default();
    for_each_biclique(g, p, q, opts.oracle_cap, |b| {
        work.bicliques_materialized += 1;
        if b.is_balanced_pairwise() {
            count += 1;
        } else {
            work.bicliques_rejected += 1;
        }
    })?;
    Ok(CountReport {
        algorithm: Algorithm::Oracle,
        p,
        q,
        anchor_side: Side::Left,
        count,
        work,
        wall: started.elapsed(),
        peak_mem_bytes: g.approx_bytes() as u64,
        mem_method: MemoryMethod::Internal,
    })
}
