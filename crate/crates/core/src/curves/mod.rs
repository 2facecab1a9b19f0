//! Concrete geometry of the explicit curve models: enumeration over prime
//! fields, involutions and quotient maps, Weil-window sanity checks, and
//! bounded-height rational-point searches.

use thiserror::Error;

pub mod enumerate;
pub mod field;
pub mod maps;
pub mod models;
pub mod point;
pub mod search;

pub use enumerate::{
    count_points, enumerate_affine, enumerate_points, in_weil_window, smoothness_probe,
    weil_window, PRIME_LIMIT,
};
pub use field::Fp;
pub use maps::{iota1, quotient_to_x064, quotient_to_x064_z, x9_cover_map, x9_t_transform};
pub use models::CurveModel;
pub use point::{FpPoint, ZPoint};
pub use search::{
    rational_point_search, squarefree_twists, twist_partition_experiment, TwistPartitionReport,
    TwistScanRow,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CurveError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("p = {p} is a prime of bad reduction for {model}")]
    BadReductionPrime { model: String, p: u64 },
    #[error("p = {0} exceeds the enumeration bound {PRIME_LIMIT}")]
    PrimeTooLarge(u64),
    #[error("point {0} does not satisfy the model equations")]
    PointNotOnCurve(String),
    #[error("the quotient image degenerates to the zero tuple")]
    DegenerateImage,
    #[error("{0} is not a nonzero squarefree twist parameter")]
    NotSquarefree(i64),
    #[error("the height search does not cover model {0}")]
    SearchUnsupported(String),
}
