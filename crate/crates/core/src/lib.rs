//! Exact analysis of Riordan arrays: construction from A/Z sequences,
//! total positivity by minor enumeration, Pólya frequency and
//! log-concavity/log-convexity predicates, and closed-form criteria for
//! recursive (Catalan-like) matrices.
//!
//! ```
//! use riordan_tp::{build_triangle, is_tp_r, NamedTriangle, TpOptions, TpOrder};
//!
//! # fn main() -> Result<(), Box<dyn std::error::Error>> {
//! let spec = NamedTriangle::Catalan.spec();
//! let triangle = build_triangle(&spec, 8)?;
//! let report = is_tp_r(&triangle.to_matrix(), TpOrder::Order(3), &TpOptions::default())?;
//! assert!(report.holds);
//! # Ok(())
//! # }
//! ```

pub mod checks;
pub mod exact;
pub mod riordan;
pub mod sequences;
pub mod totalpos;

pub use checks::{CheckError, CheckOutcome, CheckRegistry, CheckRequest, PropertyCheck, Witness};
pub use exact::{
    count_distinct_real_roots, determinant, minor, ExactError, Matrix, Polynomial, Scalar,
};
pub use riordan::{
    build_recursive_matrix, build_triangle, catalan_like_numbers, coefficient_matrix, extract_az,
    named_triangle, triangle_from_gf, AzPrefixes, NamedTriangle, RecursiveMatrixParams,
    RiordanError, RiordanSpec, SeriesPair, Triangle,
};
pub use sequences::{
    is_log_concave, is_log_convex, is_pf_finite, is_pf_r_window, PfVerdict, PfWitness,
    SequenceError, SequenceSpec, Tail,
};
pub use totalpos::{
    aigner_decomposition_check, big_d_sequence, classify_recursive_matrix, column0_logconvex_check,
    d_sequence, hankel_window, is_tp_r, jacobi_tp2_criterion, jacobi_tp_criterion,
    rows_logconcave_check, triangle_tp_check, HankelWindow, JacobiParams, MinorWitness,
    TotalPosError, TpOptions, TpOrder, TpReport,
};
