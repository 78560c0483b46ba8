//! Exhaustive checks over enumerated universes, each producing a
//! [`VerificationReport`](report::VerificationReport).

pub mod checks;
pub mod report;
pub mod universe;

use thiserror::Error;

use crate::catalog::CatalogError;
use crate::enumerate::EnumerateError;
use crate::iso::IsoError;

pub use checks::{
    available_checks, run_check, verify_colourable, verify_critical_and_edge_critical_order10,
    verify_f32_lower_bound, verify_lovasz_bound, verify_monotonicity, verify_order10_characterization,
    verify_order9_classification, verify_small_orders_colorable, verify_structural_lemma, CheckOptions,
    DEFAULT_CHECKS, LEMMA_IDS,
};
pub use report::{Certificate, Counterexample, Outcome, UniverseDescription, VerificationReport};
pub use universe::{Universe, Universes};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("unknown lemma id {0}; expected 4..=13")]
    UnknownLemma(usize),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Iso(#[from] IsoError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("{0}: {1}")]
    Io(String, String),
}
