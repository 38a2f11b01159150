//! Exact counting of balanced (p,q)-bicliques in signed bipartite graphs.
//!
//! A (p,q)-biclique takes `p` vertices from the left side and `q` from the
//! right, all `p·q` pairs joined; it is balanced when every 4-cycle inside it
//! carries an even number of negative edges. Four counters are provided:
//!
//! * [`oracle`]: brute-force enumeration, for small instances and testing;
//! * [`baseline`]: enumerate every biclique, then discard unbalanced ones;
//! * [`bbwc`]: tally signed wedges by sign pattern and combine the tallies;
//! * [`bbvp`]: prune anchor-side candidates by shared-neighbor count first.
//!
//! All of them agree exactly; [`count_balanced`] dispatches by name.

pub mod baseline;
pub mod bbvp;
pub mod bbwc;
pub mod combinatorics;
pub mod count;
pub mod graph;
pub mod ingest;
pub mod oracle;

pub use count::{
    count_balanced, Algorithm, AnchorSide, CandidateDirection, CountError, CountOptions, CountReport, MemoryMethod,
    WorkCounters,
};
pub use graph::{GraphError, GraphStats, Side, Sign, SignedBipartiteGraph, VertexRef};
