//! Wedge-centric counting.
//!
//! For each anchor `u`, every signed p-wedge `⟨u, w_1, …, w_{p-1}, v⟩` with
//! `ρ(u) > ρ(w_1) > … > ρ(w_{p-1})` is enumerated and tallied under its tail
//! `(w_1, …, w_{p-1})` and sign pattern κ. All wedges of one balanced biclique
//! share a pattern, and any `q` centers completing the same (tail, κ) form a
//! balanced biclique, so the anchor contributes `Σ C(tally, q)`.

use std::fmt;
use std::time::Instant;

use rustc_hash::FxHashMap;
use smallvec::SmallVec;
use thiserror::Error;

use crate::combinatorics::{for_each_combination, BinomialColumn};
use crate::count::{
    drive, validate_pq, Algorithm, AnchorOutcome, AnchorPlan, CountError, CountOptions, CountReport, MemoryMethod,
    Scratch,
};
use crate::graph::{Side, Sign, SignedBipartiteGraph};

/// Sign pattern of a signed p-wedge: bit `i-1` is set when `sign(u,v)`
/// differs from `sign(v,w_i)` (`d`), clear when they agree (`s`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WedgeTypeCode(pub u64);

impl WedgeTypeCode {
    pub fn from_signs<I: IntoIterator<Item = Sign>>(anchor_sign: Sign, tail_signs: I) -> Self {
        let mut bits = 0u64;
        for (i, s) in tail_signs.into_iter().enumerate() {
            if s != anchor_sign {
                bits |= 1 << i;
            }
        }
        WedgeTypeCode(bits)
    }

    /// Renders the pattern as `c_1 c_2 … c_len`, e.g. `"ds"`.
    pub fn label(self, len: usize) -> String {
        (0..len).map(|i| if self.0 >> i & 1 == 1 { 'd' } else { 's' }).collect()
    }
}

impl fmt::Display for WedgeTypeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "κ{:b}", self.0)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("missing edge between {side} vertex {from} and vertex {to}")]
pub struct MissingEdge {
    pub side: Side,
    pub from: u32,
    pub to: u32,
}

/// Type of the wedge centered at `v` (opposite side) with anchor `u` and the
/// given tail, all of `u` and the tail on `side`.
pub fn wedge_type(
    g: &SignedBipartiteGraph,
    side: Side,
    u: u32,
    v: u32,
    tail: &[u32],
) -> Result<WedgeTypeCode, MissingEdge> {
    let lookup = |a: u32| g.sign_from(side, a, v).ok_or(MissingEdge { side, from: a, to: v });
    let anchor = lookup(u)?;
    let signs = tail.iter().map(|&w| lookup(w)).collect::<Result<Vec<_>, _>>()?;
    Ok(WedgeTypeCode::from_signs(anchor, signs))
}

pub type Tail = SmallVec<[u32; 7]>;

/// Per-anchor tallies keyed by (κ, tail); one map stands in for the
/// `2^(p-1)` buckets.
#[derive(Clone, Debug, Default)]
pub struct WedgeBuckets {
    map: FxHashMap<(WedgeTypeCode, Tail), u32>,
}

impl WedgeBuckets {
    pub fn clear(&mut self) {
        self.map.clear();
    }

    pub fn get(&self, code: WedgeTypeCode, tail: &[u32]) -> u32 {
        self.map.get(&(code, Tail::from_slice(tail))).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (WedgeTypeCode, &[u32], u32)> + '_ {
        self.map.iter().map(|((code, tail), &n)| (*code, tail.as_slice(), n))
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Sum of all tallies, equal to the number of wedges recorded.
    pub fn total(&self) -> u64 {
        self.map.values().map(|&n| n as u64).sum()
    }

    fn bytes(&self) -> usize {
        self.map.capacity() * (std::mem::size_of::<(WedgeTypeCode, Tail)>() + 4 + 1)
    }
}

/// Enumerates and tallies every wedge rooted at `u`, then combines the
/// tallies. `buckets` is cleared first and left populated for inspection.
pub fn scan_anchor(
    g: &SignedBipartiteGraph,
    plan: AnchorPlan,
    u: u32,
    buckets: &mut WedgeBuckets,
    binom: &BinomialColumn,
) -> Result<AnchorOutcome, CountError> {
    buckets.clear();
    let side = plan.side;
    let tail_len = plan.anchor_size - 1;
    let rank_u = g.rank(side, u);
    let mut out = AnchorOutcome::default();
    let mut tail = Tail::new();

    for v in g.neighbors(side, u) {
        let around = g.neighbors(side.opposite(), v.vertex);
        // `around` is sorted by descending priority; keep the part below `u`.
        let start = around.partition_point(|w| g.rank(side, w.vertex) >= rank_u);
        let lower = &around[start..];
        for_each_combination(lower.len(), tail_len, |idx| {
            tail.clear();
            tail.extend(idx.iter().map(|&i| lower[i].vertex));
            let code = WedgeTypeCode::from_signs(v.sign, idx.iter().map(|&i| lower[i].sign));
            *buckets.map.entry((code, tail.clone())).or_insert(0) += 1;
            out.work.wedges += 1;
            true
        });
    }

    for &n in buckets.map.values() {
        let c = binom.lookup(n as usize).ok_or(CountError::Overflow)?;
        out.count = out.count.checked_add(c).ok_or(CountError::Overflow)?;
    }
    Ok(out)
}

struct BbwcScratch {
    buckets: WedgeBuckets,
}

impl Scratch for BbwcScratch {
    fn bytes(&self) -> usize {
        self.buckets.bytes()
    }
}

pub fn count_balanced_bbwc(
    g: &SignedBipartiteGraph,
    p: usize,
    q: usize,
    opts: &CountOptions,
) -> Result<CountReport, CountError> {
    validate_pq(p, q)?;
    let started = Instant::now();
    let plan = AnchorPlan::resolve(g, p, q, opts.anchor_side);
    let binom = BinomialColumn::with_capacity(plan.other_size, g.max_degree());
    let result = drive(
        g.count(plan.side),
        opts,
        || BbwcScratch {
            buckets: WedgeBuckets::default(),
        },
        |s, u| scan_anchor(g, plan, u, &mut s.buckets, &binom),
    )?;
    Ok(CountReport {
        algorithm: Algorithm::Bbwc,
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
