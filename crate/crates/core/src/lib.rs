//! Decides whether square roots (and single higher-order roots) of
//! univariate rational functions over Q can be simultaneously rationalized
//! by one rational change of variable, via the genus of the compositum
//! cover of the projective line.

pub mod arith;
pub mod cli;
pub mod decision;
pub mod error;
pub mod genus;
pub mod lattice;
pub mod parse;
pub mod rationalize;
pub mod report;

pub use arith::{Rat, RatFunc, UPoly, ZPoly};
pub use decision::{
    conjecture_scan, decide_set, decide_single_root, decide_single_sqrt, subset_criterion,
    ScanParams, ScanReport, Status, Verdict,
};
pub use error::{Error, Result};
pub use genus::{
    cyclic_cover_genus, hyperelliptic_genus, multiquadratic_genus, superelliptic_genus_paper,
    CoverSpec,
};
pub use lattice::{build_branch_table, BranchTable};
pub use parse::{parse_expr, parse_radicand_file, RadicandSpec};
pub use rationalize::{
    greedy_rationalize, minpoly_multiquadratic, verify_witness, MinPoly, Substitution, Witness,
};
