//! Cube tiling codes over Z_4 and the Lucas-cube binomial identities.
//!
//! This crate builds the Lagarias-Shor cube tiling code from the circulant
//! matrix A(n) = circ(1,2,0,...,0), certifies that it tiles the torus Z_4^n
//! by two independent criteria, materializes the box partition the tiling
//! induces on the base cube [0,2)^n, and uses exact big-integer arithmetic
//! to verify three binomial identities tied to the Lucas cube through three
//! independent evaluation paths (closed form, odd-case partition census,
//! even-case sub-family). A star-code substitution turns the same structure
//! into a discrete partition of {0,1}^n for which the Lucas cube vertex set
//! is a selector.
//!
//! Start with the `examples/` directory for runnable walkthroughs of each
//! capability, or the `lucastile` binary for the command-line front end.

pub mod circulant;
pub mod cli;
pub mod error;
pub mod identities;
pub mod lucas;
pub mod partition;
pub mod report;
pub mod residue;
pub mod selector;
pub mod tiling;

pub use circulant::{
    circulant_rows, filter_even_threes, filter_odd_zeros, independent_sets, lagarias_shor_code,
    non_adjacent_row_sums, subset_row_sums, CirculantMatrix, CodeLabel, CodeSet,
};
pub use error::{Error, Result};
pub use identities::{
    identity_lhs, identity_rhs, termwise_decomposition_check, verify_by_even_family,
    verify_by_odd_partition, verify_closed_form, EvalPath, Identity, IdentityReport,
};
pub use lucas::{
    binomial, closed_forms_match_enumeration, is_lucas_mask, lucas_number, lucas_vertices,
    substitution_matches_vertices, weight_count, weight_count_one_at, weight_count_zero_at,
    LucasVertex,
};
pub use partition::{
    base_cube_partition, even_case_family, intersect_with_base, interior_row_sums,
    reduce_interior_sum, verify_dimension_reduction, BijectionCheck, BoxFamily, Factor,
    FactorSelect, FamilyLabel, PartBox,
};
pub use report::{
    serialize, CensusRow, NamedCheck, OutputFormat, ReportData, RunReport, StepTiming, Verdict,
};
pub use residue::ResidueVector;
pub use selector::{
    boxes_partition_discrete_cube, canonical_vertex, selector_boxes, star_code, verify_discrete_partition,
    verify_selector, verify_selector_exhaustive, DiscreteBox, StarSymbol, StarWord,
};
pub use tiling::{
    disjoint_from_base, twin_pair_check, voxel_cover_check, CheckMethod, TilingVerdict, Witness,
    DEFAULT_VOXEL_BUDGET,
};
