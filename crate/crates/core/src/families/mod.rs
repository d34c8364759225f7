//! Named families and cross-checks between the lattice and DPD sides.

mod bertin;
mod classify;
mod construction;
mod singular;

pub use bertin::{bertin_report, bertin_to_dpd, BertinParams, BertinReport};
pub use classify::{
    classification_table, classify, zhp_note, CaseLabel, ClassificationEntry, Descriptor, Kbar,
};
pub use construction::{
    build_construction, cross_fiber_word, crosscheck, crosscheck_fixture, fixtures, inner,
    ConstructionFixture, ConstructionSurface, CrossCheck, InnerStep, FIBER_CROSS, FIBER_MULTIPLE,
};
pub use singular::{
    curve_polynomial, singular_line, weighted_degrees, Monomial, PlaneCurveSingularity,
};

use thiserror::Error;

use crate::comb::CombError;
use crate::dpd::DpdError;
use crate::surface::SurfaceError;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("inconsistent pair (kbar(X), kbar(X \\ Γ)) = ({kbar_x}, {kbar_complement}): {reason}")]
    InconsistentKbar {
        kbar_x: Kbar,
        kbar_complement: Kbar,
        reason: String,
    },
    #[error("fiber over {fiber} has {count} (-1)-curves, expected exactly one")]
    NoUniqueMinusOneCurve { fiber: String, count: usize },
    #[error("construction: {0}")]
    Construction(String),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Comb(#[from] CombError),
    #[error(transparent)]
    Dpd(#[from] DpdError),
    #[error(transparent)]
    Lattice(#[from] crate::lattice::LatticeError),
}
