//! Exact computation of sumsets of multisets over Z_p^m, lower-bound
//! certificates, extremal constructions, and exhaustive symmetry-reduced
//! verification of the sumset lower-bound conjecture at desk scale.

pub mod bounds;
pub mod constructions;
pub mod dense;
pub mod error;
pub mod group;
pub mod literal;
pub mod multiset;
pub mod search;
pub mod sumset;

pub use bounds::{
    best_bound, cd_bound, conjecture_floor, conjecture_floor_certificate, harmonic,
    kneser_union_bound, line_bound, pair_budget, pair_replacement_bound, p_min_large_p_theorem,
    sweep_bound, thresholds, BoundCertificate, BoundParams, BoundRule, ThresholdReport,
};
pub use dense::DenseSet;
pub use error::{Error, Result};
pub use group::{
    complement, complement_basis, enumerate_lines, enumerate_subgroups, gaussian_binomial,
    is_prime, line_through, Decomposition, GroupElement, GroupParams, Side, Subgroup,
    DENSE_SET_CAP,
};
pub use literal::{parse_element, parse_multiset};
pub use multiset::{check_validity, is_valid, Multiset, ValidityReport, Violation};
pub use search::canon::{
    canonical_form, is_canonical_vector, orbit_size, orbit_tag_hash, Automorphisms, CanonicalForm,
};
pub use search::checkpoint::{checkpoint_resume, checkpoint_save, Checkpoint, CheckpointConfig};
pub use search::report::{
    merge_reports, NRecord, PrunedCounts, RemarkReport, SearchReport, Verdict, VerifyConfigEcho,
    ARTIFACT_VERSION,
};
pub use search::{
    enumerate_valid, remark_p11, verify_conjecture, verify_peng, visit_valid, ScanStats,
    VerifyOptions, DEFAULT_BUDGET,
};
pub use sumset::{brute_force_sumset, project_set, sumset, sumset_card, BRUTE_FORCE_CAP};
