//! Vertex-based pruning.
//!
//! Per anchor `u`, a 2-hop walk tallies how many neighbors each same-side
//! vertex shares with `u`; only vertices sharing at least `q` survive as
//! candidates. Each (p-1)-subset of candidates is then intersected over the
//! per-candidate common-neighbor lists, and the surviving centers are grouped
//! by wedge sign pattern, contributing `Σ C(group size, q)`.

use std::time::Instant;

use crate::bbwc::WedgeTypeCode;
use crate::combinatorics::{for_each_combination, BinomialColumn};
use crate::count::{
    drive, validate_pq, Algorithm, AnchorOutcome, AnchorPlan, CandidateDirection, CountError, CountOptions,
    CountReport, MemoryMethod, Scratch,
};
use crate::graph::{Neighbor, Sign, SignedBipartiteGraph};

const NO_SLOT: u32 = u32::MAX;

/// Entry of a common-neighbor list: position of the center within the
/// anchor's adjacency, and the sign of the candidate's edge to it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Shared {
    pos: u32,
    sign: Sign,
}

/// Per-anchor candidate state, reused across anchors without reallocating.
#[derive(Clone, Debug, Default)]
pub struct AnchorContext {
    /// `shared[w]` = number of neighbors `w` shares with the anchor.
    shared: Vec<u32>,
    touched: Vec<u32>,
    /// Candidates in descending priority.
    candidates: Vec<u32>,
    /// `slot[w]` = index of `w` in `candidates`, or `NO_SLOT`.
    slot: Vec<u32>,
    /// `lists[i]` = common neighbors of the anchor and `candidates[i]`,
    /// ascending by position in the anchor's adjacency.
    lists: Vec<Vec<Shared>>,
    lists_built: bool,
    anchor_adj: Vec<Neighbor>,
}

impl AnchorContext {
    pub fn new(anchor_side_size: usize) -> Self {
        AnchorContext {
            shared: vec![0; anchor_side_size],
            slot: vec![NO_SLOT; anchor_side_size],
            ..Default::default()
        }
    }

    pub fn candidates(&self) -> &[u32] {
        &self.candidates
    }

    /// Neighbors shared with the anchor, for vertices reached by the 2-hop walk.
    pub fn shared_count(&self, w: u32) -> u32 {
        self.shared[w as usize]
    }

    /// Whether the common-neighbor lists were built (the anchor passed the gate).
    pub fn lists_built(&self) -> bool {
        self.lists_built
    }

    /// Common neighbors of the anchor and candidate `w`, by vertex index.
    pub fn common_neighbors(&self, w: u32) -> Option<Vec<u32>> {
        let slot = *self.slot.get(w as usize)?;
        if !self.lists_built || slot == NO_SLOT {
            return None;
        }
        let mut out: Vec<u32> = self.lists[slot as usize]
            .iter()
            .map(|s| self.anchor_adj[s.pos as usize].vertex)
            .collect();
        out.sort_unstable();
        Some(out)
    }

    fn reset(&mut self) {
        for &w in &self.touched {
            self.shared[w as usize] = 0;
        }
        for &w in &self.candidates {
            self.slot[w as usize] = NO_SLOT;
        }
        self.touched.clear();
        self.candidates.clear();
        for l in &mut self.lists {
            l.clear();
        }
        self.lists_built = false;
        self.anchor_adj.clear();
    }

    fn bytes(&self) -> usize {
        4 * (self.shared.capacity() + self.touched.capacity() + self.candidates.capacity() + self.slot.capacity())
            + self
                .lists
                .iter()
                .map(|l| l.capacity() * std::mem::size_of::<Shared>())
                .sum::<usize>()
            + self.anchor_adj.capacity() * std::mem::size_of::<Neighbor>()
    }
}

/// The part of `around` (descending priority) on the admitted side of `rank_u`.
fn admitted<'a>(
    g: &SignedBipartiteGraph,
    plan: AnchorPlan,
    direction: CandidateDirection,
    rank_u: u32,
    around: &'a [Neighbor],
) -> &'a [Neighbor] {
    match direction {
        CandidateDirection::BelowAnchor => &around[around.partition_point(|w| g.rank(plan.side, w.vertex) >= rank_u)..],
        CandidateDirection::AboveAnchor => &around[..around.partition_point(|w| g.rank(plan.side, w.vertex) > rank_u)],
    }
}

/// Builds the candidate set of anchor `u`. The common-neighbor lists are only
/// built when at least `p - 1` candidates survive. Returns whether they were.
pub fn build_anchor_context(
    g: &SignedBipartiteGraph,
    plan: AnchorPlan,
    direction: CandidateDirection,
    u: u32,
    ctx: &mut AnchorContext,
) -> bool {
    ctx.reset();
    let side = plan.side;
    let rank_u = g.rank(side, u);
    let anchor_adj = g.neighbors(side, u);

    for v in anchor_adj {
        for w in admitted(g, plan, direction, rank_u, g.neighbors(side.opposite(), v.vertex)) {
            let c = &mut ctx.shared[w.vertex as usize];
            if *c == 0 {
                ctx.touched.push(w.vertex);
            }
            *c += 1;
        }
    }

    let threshold = plan.other_size as u32;
    ctx.candidates.extend(
        ctx.touched
            .iter()
            .copied()
            .filter(|&w| ctx.shared[w as usize] >= threshold),
    );
    ctx.candidates
        .sort_unstable_by_key(|&w| std::cmp::Reverse(g.rank(side, w)));
    if ctx.candidates.len() < plan.anchor_size - 1 {
        return false;
    }

    for (i, &w) in ctx.candidates.iter().enumerate() {
        ctx.slot[w as usize] = i as u32;
    }
    if ctx.lists.len() < ctx.candidates.len() {
        ctx.lists.resize_with(ctx.candidates.len(), Vec::new);
    }
    ctx.anchor_adj.extend_from_slice(anchor_adj);
    for (pos, v) in anchor_adj.iter().enumerate() {
        for w in admitted(g, plan, direction, rank_u, g.neighbors(side.opposite(), v.vertex)) {
            let slot = ctx.slot[w.vertex as usize];
            if slot != NO_SLOT {
                ctx.lists[slot as usize].push(Shared {
                    pos: pos as u32,
                    sign: w.sign,
                });
            }
        }
    }
    ctx.lists_built = true;
    true
}

/// Count of completions per wedge sign pattern for one subset.
#[derive(Clone, Debug, Default)]
pub struct TypeTally {
    entries: Vec<(WedgeTypeCode, u32)>,
}

impl TypeTally {
    pub fn clear(&mut self) {
        self.entries.clear();
    }

    pub fn record(&mut self, code: WedgeTypeCode) {
        match self.entries.iter_mut().find(|(c, _)| *c == code) {
            Some((_, n)) => *n += 1,
            None => self.entries.push((code, 1)),
        }
    }

    pub fn get(&self, code: WedgeTypeCode) -> u32 {
        self.entries.iter().find(|(c, _)| *c == code).map_or(0, |(_, n)| *n)
    }

    pub fn iter(&self) -> impl Iterator<Item = (WedgeTypeCode, u32)> + '_ {
        self.entries.iter().copied()
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().map(|(_, n)| *n as u64).sum()
    }
}

/// Intersection buffer entry: center position plus the pattern bits gathered so far.
#[derive(Clone, Copy, Debug)]
struct Partial {
    pos: u32,
    bits: u64,
}

#[derive(Clone, Debug, Default)]
pub struct SubsetScratch {
    order: Vec<usize>,
    current: Vec<Partial>,
    next: Vec<Partial>,
    pub tally: TypeTally,
}

impl SubsetScratch {
    fn bytes(&self) -> usize {
        8 * self.order.capacity()
            + 16 * (self.current.capacity() + self.next.capacity())
            + 16 * self.tally.entries.capacity()
    }
}

/// Runs the subset phase for an anchor whose context has been built.
fn count_subsets(
    plan: AnchorPlan,
    ctx: &AnchorContext,
    scratch: &mut SubsetScratch,
    binom: &BinomialColumn,
    out: &mut AnchorOutcome,
) -> Result<(), CountError> {
    let q = plan.other_size;
    let mut failed = None;
    for_each_combination(ctx.candidates.len(), plan.anchor_size - 1, |subset| {
        out.work.subsets += 1;
        // Intersect smallest-first; bit i records whether w_i disagrees with u at v.
        scratch.order.clear();
        scratch.order.extend(0..subset.len());
        scratch.order.sort_unstable_by_key(|&i| ctx.lists[subset[i]].len());

        let first = scratch.order[0];
        if ctx.lists[subset[first]].len() < q {
            return true;
        }
        scratch.current.clear();
        scratch.current.extend(ctx.lists[subset[first]].iter().map(|s| Partial {
            pos: s.pos,
            bits: ((s.sign != ctx.anchor_adj[s.pos as usize].sign) as u64) << first,
        }));
        for k in 1..scratch.order.len() {
            let i = scratch.order[k];
            let list = &ctx.lists[subset[i]];
            out.work.intersections += 1;
            scratch.next.clear();
            let (mut a, mut b) = (0, 0);
            let cur = &scratch.current;
            while a < cur.len() && b < list.len() {
                // stop once too few entries remain to reach q
                if scratch.next.len() + (cur.len() - a).min(list.len() - b) < q {
                    break;
                }
                match cur[a].pos.cmp(&list[b].pos) {
                    std::cmp::Ordering::Less => a += 1,
                    std::cmp::Ordering::Greater => b += 1,
                    std::cmp::Ordering::Equal => {
                        let disagree = list[b].sign != ctx.anchor_adj[cur[a].pos as usize].sign;
                        scratch.next.push(Partial {
                            pos: cur[a].pos,
                            bits: cur[a].bits | (disagree as u64) << i,
                        });
                        a += 1;
                        b += 1;
                    }
                }
            }
            if scratch.next.len() < q {
                return true;
            }
            std::mem::swap(&mut scratch.current, &mut scratch.next);
        }

        scratch.tally.clear();
        for e in &scratch.current {
            scratch.tally.record(WedgeTypeCode(e.bits));
        }
        for (_, n) in scratch.tally.iter() {
            match binom.lookup(n as usize).and_then(|c| out.count.checked_add(c)) {
                Some(total) => out.count = total,
                None => {
                    failed = Some(CountError::Overflow);
                    return false;
                }
            }
        }
        true
    });
    failed.map_or(Ok(()), Err)
}

/// Processes a single anchor: context construction, gate, subset phase.
pub fn scan_anchor(
    g: &SignedBipartiteGraph,
    plan: AnchorPlan,
    direction: CandidateDirection,
    u: u32,
    ctx: &mut AnchorContext,
    scratch: &mut SubsetScratch,
    binom: &BinomialColumn,
) -> Result<AnchorOutcome, CountError> {
    let mut out = AnchorOutcome::default();
    if !build_anchor_context(g, plan, direction, u, ctx) {
        return Ok(out);
    }
    out.work.candidate_sets += 1;
    count_subsets(plan, ctx, scratch, binom, &mut out)?;
    Ok(out)
}

struct BbvpScratch {
    ctx: AnchorContext,
    subset: SubsetScratch,
}

impl Scratch for BbvpScratch {
    fn bytes(&self) -> usize {
        self.ctx.bytes() + self.subset.bytes()
    }
}

pub fn count_balanced_bbvp(
    g: &SignedBipartiteGraph,
    p: usize,
    q: usize,
    opts: &CountOptions,
) -> Result<CountReport, CountError> {
    validate_pq(p, q)?;
    let started = Instant::now();
    let plan = AnchorPlan::resolve(g, p, q, opts.anchor_side);
    let binom = BinomialColumn::with_capacity(plan.other_size, g.max_degree());
    let anchors = g.count(plan.side);
    let direction = opts.candidate_direction;
    let result = drive(
        anchors,
        opts,
        || BbvpScratch {
            ctx: AnchorContext::new(anchors),
            subset: SubsetScratch::default(),
        },
        |s, u| scan_anchor(g, plan, direction, u, &mut s.ctx, &mut s.subset, &binom),
    )?;
    Ok(CountReport {
        algorithm: Algorithm::Bbvp,
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
