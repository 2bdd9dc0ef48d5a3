//! Block decompositions, Brauer pairs, and Hochschild cohomology of group
//! algebras of small finite groups over finite splitting fields.
//!
//! The library is organized bottom-up:
//!
//! * [`field`] — arithmetic in GF(p^m) with a deterministic choice of modulus,
//! * [`matrix`] — dense linear algebra and canonical subspaces over such fields,
//! * [`group`] — finite groups as multiplication tables, subgroup machinery,
//! * [`catalog`] — the bundled JSON catalog of small groups,
//! * [`algebra`] — group algebras, Jacobson radicals, block idempotents,
//! * [`blocks`] — defect groups and Brauer pairs of a block,
//! * [`resolution`] — minimal free resolutions of cyclic modules,
//! * [`cohomology`] — group/Hochschild cohomology dimensions and transfer maps,
//! * [`bounds`] — the recursive bound `f(n, d)` and its catalog-derived inputs,
//! * [`campaign`] — the verification harness behind `blockhh verify`.

pub mod algebra;
pub mod blocks;
pub mod bounds;
pub mod campaign;
pub mod catalog;
pub mod cohomology;
pub mod field;
pub mod group;
pub mod lemmas;
pub mod matrix;
pub mod resolution;

pub use algebra::{block_idempotents, splitting_degree, Algebra, BlockIdempotent, GroupAlgebra};
pub use blocks::{
    block_decomposition, brauer_hom, brauer_pair_module, brauer_pairs, defect_group, Block,
    BrauerPair,
};
pub use bounds::{brauer_feit_term, c_max_subgroups, BoundTable, CSource};
pub use campaign::{
    report_to_csv, report_to_json, run_verify, BlockRecord, CampaignConfig, LemmaRecord, Report,
};
pub use field::{FiniteField, Scalar};
pub use lemmas::{CheckStatus, DegreeOutcome, LemmaCheck};
pub use group::{FiniteGroup, Subgroup};
pub use matrix::{Mat, Subspace};

use thiserror::Error;

/// Errors surfaced by the library. Every variant names the condition that
/// failed rather than the call site, so CLI users see actionable messages.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("field extension degree must be at least 1")]
    DegreeZero,

    #[error("field size p^m = {p}^{m} exceeds the supported limit of 2^31")]
    FieldTooLarge { p: u64, m: u32 },

    #[error("group closure exceeded the cap of {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("invalid permutation: {0}")]
    BadPermutation(String),

    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),

    #[error("subgroup is not normal in the parent group")]
    NotNormal,

    #[error(
        "field too small: GF({p}^{m}) does not split the algebra; \
         retry with a field of degree divisible by the splitting degree"
    )]
    FieldTooSmall { p: u64, m: u32 },

    #[error("element is not fixed by conjugation by the given p-subgroup")]
    NotSubgroupFixed,

    #[error(
        "resolution cap exceeded in degree {degree}: rank {rank} over an algebra \
         of dimension {dim} needs {need} > {cap} matrix entries"
    )]
    ResolutionTooLarge {
        degree: usize,
        rank: usize,
        dim: usize,
        need: usize,
        cap: usize,
    },

    #[error("computation cap exceeded: {0}")]
    CapExceeded(String),

    #[error(
        "defect group ambiguity: found two maximal classes of p-subgroups with \
         nonvanishing Brauer image that are not conjugate"
    )]
    DefectAmbiguous,

    #[error("c({d}) is unavailable for p = {p}: no complete catalog manifest covers order {p}^{d}")]
    CUnavailable { p: u64, d: u32 },

    #[error("catalog entry {file}: {reason}")]
    Catalog { file: String, reason: String },

    #[error("group {0} not found in the catalog")]
    GroupNotFound(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
