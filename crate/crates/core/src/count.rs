//! Shared counting machinery: parameters, reports, and the anchor-loop driver.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Side, SignedBipartiteGraph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CountError {
    #[error(
        "p and q must both be at least 2 (got p={p}, q={q}); with p = 1 or q = 1 the pattern degenerates into a star"
    )]
    InvalidParameters { p: usize, q: usize },
    #[error("balanced biclique count overflowed 128 bits")]
    Overflow,
    #[error("time limit of {0:?} exceeded")]
    TimeLimitExceeded(Duration),
    #[error("instance {m}x{n} exceeds the brute-force size cap of {cap} vertex pairs")]
    SizeGuardExceeded { m: usize, n: usize, cap: usize },
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Oracle,
    Baseline,
    Bbwc,
    Bbvp,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [Algorithm::Oracle, Algorithm::Baseline, Algorithm::Bbwc, Algorithm::Bbvp];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Oracle => "oracle",
            Algorithm::Baseline => "baseline",
            Algorithm::Bbwc => "bbwc",
            Algorithm::Bbvp => "bbvp",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown algorithm `{s}` (expected oracle, baseline, bbwc or bbvp)"))
    }
}

/// Which partition supplies the anchor (p-side) vertices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AnchorSide {
    /// The smaller partition; ties go to the left side.
    #[default]
    Auto,
    Left,
    Right,
}

impl FromStr for AnchorSide {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "auto" => Ok(AnchorSide::Auto),
            "left" => Ok(AnchorSide::Left),
            "right" => Ok(AnchorSide::Right),
            _ => Err(format!("unknown anchor side `{s}` (expected auto, left or right)")),
        }
    }
}

/// Which 2-hop vertices BBVP admits into an anchor's candidate set.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CandidateDirection {
    /// Candidates have lower priority than the anchor, so each biclique is
    /// rooted at its highest-priority anchor-side vertex.
    #[default]
    BelowAnchor,
    /// Candidates have higher priority than the anchor, so each biclique is
    /// rooted at its lowest-priority anchor-side vertex.
    AboveAnchor,
}

impl FromStr for CandidateDirection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "below" | "below-anchor" => Ok(CandidateDirection::BelowAnchor),
            "above" | "above-anchor" => Ok(CandidateDirection::AboveAnchor),
            _ => Err(format!("unknown candidate direction `{s}` (expected below or above)")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CountOptions {
    pub anchor_side: AnchorSide,
    /// Worker threads for the anchor loop; `0` or `1` runs sequentially.
    pub threads: usize,
    pub time_limit: Option<Duration>,
    /// Anchors processed between deadline checks.
    pub check_every: usize,
    pub candidate_direction: CandidateDirection,
    /// Brute-force oracle refuses instances with `m * n` above this.
    pub oracle_cap: usize,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions {
            anchor_side: AnchorSide::Auto,
            threads: 1,
            time_limit: None,
            check_every: 64,
            candidate_direction: CandidateDirection::BelowAnchor,
            oracle_cap: crate::oracle::DEFAULT_SIZE_CAP,
        }
    }
}

/// Resolved orientation: which side anchors, and how p/q map onto it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnchorPlan {
    pub side: Side,
    /// Number of vertices taken from the anchor side.
    pub anchor_size: usize,
    /// Number of vertices taken from the opposite side.
    pub other_size: usize,
}

impl AnchorPlan {
    /// `p` always counts left vertices and `q` right vertices; anchoring on the
    /// right swaps their roles.
    pub fn resolve(g: &SignedBipartiteGraph, p: usize, q: usize, choice: AnchorSide) -> Self {
        let side = match choice {
            AnchorSide::Left => Side::Left,
            AnchorSide::Right => Side::Right,
            AnchorSide::Auto if g.right_count() < g.left_count() => Side::Right,
            AnchorSide::Auto => Side::Left,
        };
        match side {
            Side::Left => AnchorPlan {
                side,
                anchor_size: p,
                other_size: q,
            },
            Side::Right => AnchorPlan {
                side,
                anchor_size: q,
                other_size: p,
            },
        }
    }
}

pub fn validate_pq(p: usize, q: usize) -> Result<(), CountError> {
    if p < 2 || q < 2 {
        return Err(CountError::InvalidParameters { p, q });
    }
    Ok(())
}

/// Work counters accumulated across anchors. Unused counters stay zero.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct WorkCounters {
    /// Signed p-wedges enumerated (BBWC).
    pub wedges: u64,
    /// Anchor-side (p-1)-subsets enumerated (BBVP).
    pub subsets: u64,
    /// Pairwise list intersections performed.
    pub intersections: u64,
    /// Candidate sets formed (BBVP anchors past the gate, baseline frames).
    pub candidate_sets: u64,
    /// Complete (p,q)-bicliques built explicitly (baseline, oracle).
    pub bicliques_materialized: u64,
    /// Materialized bicliques that failed the balance test.
    pub bicliques_rejected: u64,
}

impl WorkCounters {
    pub fn add(&mut self, other: &WorkCounters) {
        self.wedges += other.wedges;
        self.subsets += other.subsets;
        self.intersections += other.intersections;
        self.candidate_sets += other.candidate_sets;
        self.bicliques_materialized += other.bicliques_materialized;
        self.bicliques_rejected += other.bicliques_rejected;
    }
}

/// Result of processing a single anchor vertex.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AnchorOutcome {
    pub count: u128,
    pub work: WorkCounters,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MemoryMethod {
    /// High-water mark of the algorithm's working structures plus the graph.
    Internal,
    /// Process peak resident set (`VmHWM` from `/proc/self/status`).
    Vmhwm,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub algorithm: Algorithm,
    pub p: usize,
    pub q: usize,
    pub anchor_side: Side,
    #[serde(serialize_with = "serialize_u128")]
    pub count: u128,
    pub work: WorkCounters,
    pub wall: Duration,
    pub peak_mem_bytes: u64,
    pub mem_method: MemoryMethod,
}

fn serialize_u128<S: serde::Serializer>(v: &u128, s: S) -> Result<S::Ok, S::Error> {
    // JSON consumers often parse numbers as f64; a string keeps every digit.
    s.serialize_str(&v.to_string())
}

/// Per-lane scratch state that can report its heap footprint.
pub(crate) trait Scratch {
    fn bytes(&self) -> usize;
}

pub(crate) struct DriveResult {
    pub count: u128,
    pub work: WorkCounters,
    pub scratch_peak: usize,
}

struct Lane<S> {
    scratch: S,
    count: u128,
    work: WorkCounters,
    peak: usize,
    since_check: usize,
}

/// Runs `step` over every anchor in `0..anchors`, optionally in parallel,
/// combining results by exact addition. Totals do not depend on scheduling.
pub(crate) fn drive<S, I, F>(anchors: usize, opts: &CountOptions, init: I, step: F) -> Result<DriveResult, CountError>
where
    S: Scratch + Send,
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, u32) -> Result<AnchorOutcome, CountError> + Sync + Send,
{
    let started = Instant::now();
    let stop = AtomicBool::new(false);
    let check_every = opts.check_every.max(1);

    let visit = |lane: &mut Lane<S>, u: u32| -> Result<(), CountError> {
        if let Some(limit) = opts.time_limit {
            lane.since_check += 1;
            if lane.since_check >= check_every {
                lane.since_check = 0;
                if stop.load(Ordering::Relaxed) || started.elapsed() > limit {
                    stop.store(true, Ordering::Relaxed);
                    return Err(CountError::TimeLimitExceeded(limit));
                }
            }
        }
        let outcome = step(&mut lane.scratch, u)?;
        lane.count = lane.count.checked_add(outcome.count).ok_or(CountError::Overflow)?;
        lane.work.add(&outcome.work);
        lane.peak = lane.peak.max(lane.scratch.bytes());
        Ok(())
    };
    let new_lane = || Lane {
        scratch: init(),
        count: 0,
        work: WorkCounters::default(),
        peak: 0,
        since_check: 0,
    };

    let finish = |lane: Lane<S>| DriveResult {
        count: lane.count,
        work: lane.work,
        scratch_peak: lane.peak,
    };

    let result = if opts.threads <= 1 {
        let mut lane = new_lane();
        for u in 0..anchors as u32 {
            visit(&mut lane, u)?;
        }
        finish(lane)
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| CountError::ThreadPool(e.to_string()))?;
        pool.install(|| {
            (0..anchors as u32)
                .into_par_iter()
                .try_fold(new_lane, |mut lane, u| visit(&mut lane, u).map(|_| lane))
                .map(|r| r.map(finish))
                .try_reduce(
                    || DriveResult {
                        count: 0,
                        work: WorkCounters::default(),
                        scratch_peak: 0,
                    },
                    |mut a, b| {
                        a.count = a.count.checked_add(b.count).ok_or(CountError::Overflow)?;
                        a.work.add(&b.work);
                        // lanes run concurrently, so their footprints coexist
                        a.scratch_peak += b.scratch_peak;
                        Ok(a)
                    },
                )
        })?
    };

    if let Some(limit) = opts.time_limit {
        if started.elapsed() > limit {
            return Err(CountError::TimeLimitExceeded(limit));
        }
    }
    Ok(result)
}

/// Peak resident set size of this process, where the platform exposes it.
pub fn process_peak_rss() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    let kb: u64 = line.split_whitespace().nth(1)?.parse().ok()?;
    Some(kb * 1024)
}

/// Dispatches to the named algorithm.
pub fn count_balanced(
    g: &SignedBipartiteGraph,
    algorithm: Algorithm,
    p: usize,
    q: usize,
    opts: &CountOptions,
) -> Result<CountReport, CountError> {
    match algorithm {
        Algorithm::Oracle => crate::oracle::count_report(g, p, q, opts),
        Algorithm::Baseline => crate::baseline::count_balanced_baseline(g, p, q, opts),
        Algorithm::Bbwc => crate::bbwc::count_balanced_bbwc(g, p, q, opts),
        Algorithm::Bbvp => crate::bbvp::count_balanced_bbvp(g, p, q, opts),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign;

    struct Nothing;
    impl Scratch for Nothing {
        fn bytes(&self) -> usize {
            8
        }
    }

    #[test]
    fn auto_anchor_prefers_smaller_side() {
        let g = SignedBipartiteGraph::with_counts(5, 3, &[(0, 0, Sign::Positive)]).unwrap();
        let plan = AnchorPlan::resolve(&g, 2, 4, AnchorSide::Auto);
        assert_eq!(
            plan,
            AnchorPlan {
                side: Side::Right,
                anchor_size: 4,
                other_size: 2
            }
        );
        let g = SignedBipartiteGraph::with_counts(3, 3, &[]).unwrap();
        assert_eq!(AnchorPlan::resolve(&g, 2, 4, AnchorSide::Auto).side, Side::Left);
        assert_eq!(AnchorPlan::resolve(&g, 2, 4, AnchorSide::Right).anchor_size, 4);
    }

    #[test]
    fn parameters_below_two_rejected() {
        assert_eq!(validate_pq(1, 3), Err(CountError::InvalidParameters { p: 1, q: 3 }));
        assert!(validate_pq(3, 1).is_err());
        assert!(validate_pq(2, 2).is_ok());
    }

    #[test]
    fn drive_sums_are_schedule_independent() {
        let step = |_: &mut Nothing, u: u32| {
            Ok(AnchorOutcome {
                count: u as u128 * 3,
                work: WorkCounters {
                    wedges: u as u64,
                    ..Default::default()
                },
            })
        };
        let seq = drive(1000, &CountOptions::default(), || Nothing, step).unwrap();
        let par = drive(
            1000,
            &CountOptions {
                threads: 4,
                ..Default::default()
            },
            || Nothing,
            step,
        )
        .unwrap();
        assert_eq!(seq.count, 3 * 999 * 1000 / 2);
        assert_eq!(seq.count, par.count);
        assert_eq!(seq.work, par.work);
    }

    #[test]
    fn drive_detects_overflow() {
        let step = |_: &mut Nothing, _| {
            Ok(AnchorOutcome {
                count: u128::MAX / 2 + 1,
                work: Default::default(),
            })
        };
        assert_eq!(
            drive(2, &CountOptions::default(), || Nothing, step).err(),
            Some(CountError::Overflow)
        );
        let opts = CountOptions {
            threads: 2,
            ..Default::default()
        };
        assert_eq!(drive(64, &opts, || Nothing, step).err(), Some(CountError::Overflow));
    }

    #[test]
    fn drive_honours_time_limit() {
        let step = |_: &mut Nothing, _| {
            std::thread::sleep(Duration::from_millis(1));
            Ok(AnchorOutcome::default())
        };
        let opts = CountOptions {
            time_limit: Some(Duration::from_millis(5)),
            check_every: 1,
            ..Default::default()
        };
        assert!(matches!(
            drive(200, &opts, || Nothing, step),
            Err(CountError::TimeLimitExceeded(_))
        ));
    }

    #[test]
    fn algorithm_names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
        }
        assert!("bclist".parse::<Algorithm>().is_err());
    }
}
