//! Substring complexity `delta = max_k |Substr(k)| / k` of a string given
//! by its run-length encoding, in time and space governed by the number of
//! runs `r` rather than the length `n`.
//!
//! The pipeline is:
//!
//! 1. [`rstree`]: the r-suffix tree of the run-boundary suffixes,
//! 2. [`lca`]: constant-time LCP queries between boundary suffixes,
//! 3. [`dmn`]: the boundary depths `|b(l)|`, DMN-roots and explicit `D` nodes,
//! 4. [`sweep`]: second-difference events and the exact maximization.
//!
//! [`oracle`] computes the same quantities from the decompressed text and
//! serves as ground truth.

pub mod dmn;
pub mod error;
pub mod generate;
pub mod intsort;
pub mod lca;
pub mod oracle;
pub mod rle;
pub mod rstree;
pub mod sais;
pub mod sweep;

pub use error::{Error, InvariantViolation, Result, RleError};
pub use intsort::SortStrategy;
pub use lca::RmqKind;
pub use rle::{encode, parse_rle, RleString, Run};
pub use sweep::{DeltaResult, Rational};

use dmn::{DNodeAttr, LeafRecord};
use lca::LcaOracle;
use rstree::RSuffixTree;
use sweep::{Event, SweepProfile};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EngineOptions {
    pub sort: SortStrategy,
    pub rmq: RmqKind,
}

/// Every intermediate product of the compressed pipeline.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub tree: RSuffixTree,
    pub leaves: Vec<LeafRecord>,
    pub roots: Vec<DNodeAttr>,
    pub explicit: Vec<DNodeAttr>,
    pub events: Vec<Event>,
    pub profile: SweepProfile,
    pub result: DeltaResult,
}

/// Runs the whole compressed pipeline and keeps the intermediate results.
pub fn analyze(rle: &RleString, opts: EngineOptions) -> Result<Analysis, InvariantViolation> {
    let tree = RSuffixTree::build(rle, opts.sort)?;
    let oracle = LcaOracle::build(&tree, opts.rmq);
    let lists = dmn::build_rem_lists(&tree, rle);
    let leaves = dmn::compute_b_depths(&tree, rle, &oracle, &lists, opts.sort);
    let roots = dmn::collect_dmn_roots(&tree, rle, &leaves);
    let explicit = dmn::collect_explicit_d_nodes(&tree, rle, &leaves);
    let events = sweep::build_events(&roots, &explicit);
    let (profile, points) = sweep::compute_delta(&events, rle.n(), opts.sort)?;
    let result = DeltaResult::from_points(points, rle.r(), rle.n(), rle.sigma());
    Ok(Analysis { tree, leaves, roots, explicit, events, profile, result })
}

/// `delta` of a run-length encoded string; the empty string gives `0/1`.
pub fn delta_from_rle(rle: &RleString) -> Result<DeltaResult, InvariantViolation> {
    delta_from_rle_with(rle, EngineOptions::default())
}

pub fn delta_from_rle_with(rle: &RleString, opts: EngineOptions) -> Result<DeltaResult, InvariantViolation> {
    analyze(rle, opts).map(|a| a.result)
}
