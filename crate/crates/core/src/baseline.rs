//! Enumerate-then-filter counter.
//!
//! Every (p,q)-biclique is listed by a depth-first extension of an
//! anchor-side vertex set in descending priority order, carrying the common
//! opposite-side neighborhood along; each complete biclique is materialized
//! and kept only if its sign matrix passes the rank-1 balance test.

use std::time::Instant;

use crate::combinatorics::for_each_combination;
use crate::count::{
    drive, validate_pq, Algorithm, AnchorOutcome, AnchorPlan, CountError, CountOptions, CountReport, MemoryMethod,
    Scratch,
};
use crate::graph::{Neighbor, Side, SignedBipartiteGraph};
use crate::oracle::Biclique;

/// Per-lane search state. `chosen` and `commons[..chosen.len()]` together form
/// the current search frame: `commons[d]` is the common neighborhood of the
/// first `d + 1` chosen vertices, ascending by index.
struct BaselineScratch {
    seen: Vec<u32>,
    stamp: u32,
    candidates: Vec<u32>,
    chosen: Vec<u32>,
    commons: Vec<Vec<u32>>,
    picked: Vec<u32>,
}

impl Scratch for BaselineScratch {
    fn bytes(&self) -> usize {
        4 * (self.seen.capacity()
            + self.candidates.capacity()
            + self.chosen.capacity()
            + self.picked.capacity()
            + self.commons.iter().map(Vec::capacity).sum::<usize>())
    }
}

fn intersect_into(a: &[u32], b: &[Neighbor], out: &mut Vec<u32>) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j].vertex) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
}

struct Search<'a> {
    g: &'a SignedBipartiteGraph,
    plan: AnchorPlan,
}

impl Search<'_> {
    fn anchor(&self, s: &mut BaselineScratch, u: u32) -> AnchorOutcome {
        let g = self.g;
        let side = self.plan.side;
        let mut out = AnchorOutcome::default();
        if g.degree(side, u) < self.plan.other_size {
            return out;
        }

        s.stamp += 1;
        let stamp = s.stamp;
        let rank_u = g.rank(side, u);
        s.candidates.clear();
        for v in g.neighbors(side, u) {
            for w in g.neighbors(side.opposite(), v.vertex) {
                if g.rank(side, w.vertex) >= rank_u {
                    continue;
                }
                let slot = &mut s.seen[w.vertex as usize];
                if *slot != stamp {
                    *slot = stamp;
                    s.candidates.push(w.vertex);
                }
            }
        }
        s.candidates
            .sort_unstable_by_key(|&w| std::cmp::Reverse(g.rank(side, w)));

        s.chosen.clear();
        s.chosen.push(u);
        let root = &mut s.commons[0];
        root.clear();
        root.extend(g.neighbors_by_index(side, u).iter().map(|n| n.vertex));

        let candidates = std::mem::take(&mut s.candidates);
        out.work.candidate_sets += 1;
        self.extend(s, &candidates, &mut out);
        s.candidates = candidates;
        out
    }

    fn extend(&self, s: &mut BaselineScratch, candidates: &[u32], out: &mut AnchorOutcome) {
        let depth = s.chosen.len();
        if depth == self.plan.anchor_size {
            self.materialize(s, out);
            return;
        }
        let mut next = std::mem::take(&mut s.commons[depth]);
        for (i, &w) in candidates.iter().enumerate() {
            if depth + (candidates.len() - i) < self.plan.anchor_size {
                break;
            }
            intersect_into(
                &s.commons[depth - 1],
                self.g.neighbors_by_index(self.plan.side, w),
                &mut next,
            );
            out.work.intersections += 1;
            if next.len() < self.plan.other_size {
                continue;
            }
            out.work.candidate_sets += 1;
            s.chosen.push(w);
            std::mem::swap(&mut s.commons[depth], &mut next);
            self.extend(s, &candidates[i + 1..], out);
            std::mem::swap(&mut s.commons[depth], &mut next);
            s.chosen.pop();
        }
        s.commons[depth] = next;
    }

    fn materialize(&self, s: &mut BaselineScratch, out: &mut AnchorOutcome) {
        let common = &s.commons[s.chosen.len() - 1];
        let chosen = &s.chosen;
        let picked = &mut s.picked;
        let (g, side) = (self.g, self.plan.side);
        for_each_combination(common.len(), self.plan.other_size, |idx| {
            picked.clear();
            picked.extend(idx.iter().map(|&i| common[i]));
            let (left, right) = match side {
                Side::Left => (chosen.as_slice(), picked.as_slice()),
                Side::Right => (picked.as_slice(), chosen.as_slice()),
            };
            let b = Biclique::from_graph(g, left, right).expect("search only reaches complete bicliques");
            out.work.bicliques_materialized += 1;
            if b.is_balanced_rank1() {
                out.count += 1;
            } else {
                out.work.bicliques_rejected += 1;
            }
            true
        });
    }
}

pub fn count_balanced_baseline(
    g: &SignedBipartiteGraph,
    p: usize,
    q: usize,
    opts: &CountOptions,
) -> Result<CountReport, CountError> {
    validate_pq(p, q)?;
    let started = Instant::now();
    let plan = AnchorPlan::resolve(g, p, q, opts.anchor_side);
    let search = Search { g, plan };
    let anchors = g.count(plan.side);
    let result = drive(
        anchors,
        opts,
        || BaselineScratch {
            seen: vec![0; anchors],
            stamp: 0,
            candidates: Vec::new(),
            chosen: Vec::with_capacity(plan.anchor_size),
            commons: vec![Vec::new(); plan.anchor_size],
            picked: Vec::with_capacity(plan.other_size),
        },
        |s, u| Ok(search.anchor(s, u)),
    )?;
    Ok(CountReport {
        algorithm: Algorithm::Baseline,
        p,
        q,
        anchor_side: plan.side,
        count: result.count,
        work: result.work,
        wall: started.elapsed(),
        peak_mem_bytes: (g.approx_bytes() + result.scratch_peak) as u64,
        mem_method: MemoryMethod::Internal,
    })
}
