//! Symmetric Boolean functions with provable algebraic immunity.
//!
//! The crate has four layers:
//!
//! - [`boolfun`]: function representations (simplified value vectors, SANF
//!   vectors, dense truth tables, ANF) and the exact combinatorial
//!   transforms between them;
//! - [`gf2`]: bit-packed GF(2) elimination — streaming rank with early exit
//!   and nullspace extraction;
//! - [`ai`]: exact annihilator search, algebraic-immunity computation with
//!   witnesses, and a scalable weight-restricted lower-bound certificate;
//! - [`construction`]: the family of symmetric functions on 2k variables
//!   with AI >= d for any binary suffix d of k, plus its enumeration and
//!   counting.
//!
//! All types are immutable values after construction and all operations are
//! pure, so everything is safe to share across threads. Internal
//! parallelism (used by the rank engine) is capped by the `AIFORGE_THREADS`
//! environment variable.

pub mod ai;
pub mod boolfun;
pub mod construction;
pub mod error;
pub mod gf2;

pub use ai::{certify_ai_lower_bound, compute_ai_exact, has_annihilator_of_degree_at_most};
pub use ai::{AiReport, CertificateReport, MonomialIndex, Side};
pub use boolfun::{AnfVector, SanfVector, SymmetricFunction, TruthTable, MAX_TT_VARS};
pub use construction::{
    check_theorem_condition, class_index, construct_function, count_formula,
    enumerate_constructions, enumerate_params, suffix_of, validate_pair, ConstructionParams,
};
pub use error::Error;
pub use gf2::{nullspace_vector, rank_streaming, BitRow, RankAccumulator};
