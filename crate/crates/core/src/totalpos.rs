//! Total positivity of order `r` by exact minor enumeration, and the
//! closed-form criteria for tridiagonal (Jacobi) coefficient matrices.
//!
//! Infinite matrices are always examined through a leading principal window;
//! every report records the window it covers.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact::{self, ExactError, IntegerImage, Matrix, Scalar};
use crate::riordan::{
    self, build_recursive_matrix, build_triangle, coefficient_matrix, RecursiveMatrixParams,
    RiordanError, RiordanSpec, Triangle,
};
use crate::sequences::{self, SequenceError};

/// Largest window `is_tp_r` will enumerate with [`TpOrder::All`] unless forced.
pub const DEFAULT_SIZE_CAP: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TotalPosError {
    #[error(
        "{rows}x{cols} matrix exceeds the all-orders size cap of {cap}; pass force to override"
    )]
    TooLarge {
        rows: usize,
        cols: usize,
        cap: usize,
    },
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("invalid order {0:?} (expected a positive integer or \"all\")")]
    BadOrder(String),
    #[error("parameter {name} is negative")]
    NegativeParameter { name: &'static str },
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Riordan(#[from] RiordanError),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}

/// Which minors to inspect.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TpOrder {
    /// All minors of order `<= r`.
    Order(usize),
    /// Every order up to `min(rows, cols)`.
    All,
}

impl TpOrder {
    fn effective(self, m: &Matrix) -> usize {
        let full = m.rows().min(m.cols());
        match self {
            TpOrder::Order(r) => r.min(full),
            TpOrder::All => full,
        }
    }
}

impl fmt::Display for TpOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TpOrder::Order(r) => write!(f, "{r}"),
            TpOrder::All => f.write_str("all"),
        }
    }
}

impl FromStr for TpOrder {
    type Err = TotalPosError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("all") {
            return Ok(TpOrder::All);
        }
        match s.parse::<usize>() {
            Ok(0) => Err(TotalPosError::ZeroOrder),
            Ok(r) => Ok(TpOrder::Order(r)),
            Err(_) => Err(TotalPosError::BadOrder(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TpOptions {
    pub size_cap: usize,
    pub force: bool,
}

impl Default for TpOptions {
    fn default() -> Self {
        TpOptions {
            size_cap: DEFAULT_SIZE_CAP,
            force: false,
        }
    }
}

impl TpOptions {
    pub fn forced() -> Self {
        TpOptions {
            force: true,
            ..Self::default()
        }
    }
}

/// A minor with its exact value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TpReport {
    pub holds: bool,
    pub order_tested: TpOrder,
    /// `(rows, cols)` of the examined matrix.
    pub window: (usize, usize),
    pub minors_checked: u64,
    /// Lexicographically first negative minor of the smallest failing order.
    pub witness: Option<MinorWitness>,
}

/// Advances `idx` to the next `k`-subset of `0..n` in lexicographic order.
fn next_subset(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Checks every square minor of order `<= r` (increasing order, then
/// lexicographic rows, then lexicographic columns) and stops at the first
/// negative one.
pub fn is_tp_r(m: &Matrix, order: TpOrder, opts: &TpOptions) -> Result<TpReport, TotalPosError> {
    if order == TpOrder::Order(0) {
        return Err(TotalPosError::ZeroOrder);
    }
    if order == TpOrder::All && !opts.force && m.rows().max(m.cols()) > opts.size_cap {
        return Err(TotalPosError::TooLarge {
            rows: m.rows(),
            cols: m.cols(),
            cap: opts.size_cap,
        });
    }
    let image = IntegerImage::of(m);
    let mut checked = 0u64;
    for k in 1..=order.effective(m) {
        let mut rows: Vec<usize> = (0..k).collect();
        loop {
            let mut cols: Vec<usize> = (0..k).collect();
            loop {
                checked += 1;
                if image.minor(&rows, &cols).is_negative() {
                    let value = exact::minor(m, &rows, &cols)?;
                    return Ok(TpReport {
                        holds: false,
                        order_tested: order,
                        window: (m.rows(), m.cols()),
                        minors_checked: checked,
                        witness: Some(MinorWitness { rows, cols, value }),
                    });
                }
                if !next_subset(&mut cols, m.cols()) {
                    break;
                }
            }
            if !next_subset(&mut rows, m.rows()) {
                break;
            }
        }
    }
    Ok(TpReport {
        holds: true,
        order_tested: order,
        window: (m.rows(), m.cols()),
        minors_checked: checked,
        witness: None,
    })
}

/// Verdicts for a Riordan window and its coefficient-matrix window of the
/// same size. Positivity of the latter implies positivity of the former.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleTpReport {
    pub triangle: TpReport,
    pub coefficient: TpReport,
}

pub fn triangle_tp_check(
    spec: &RiordanSpec,
    order: TpOrder,
    n_rows: usize,
    opts: &TpOptions,
) -> Result<TriangleTpReport, TotalPosError> {
    let triangle = build_triangle(spec, n_rows)?;
    Ok(TriangleTpReport {
        triangle: is_tp_r(&triangle.to_matrix(), order, opts)?,
        coefficient: is_tp_r(&coefficient_matrix(spec, n_rows), order, opts)?,
    })
}

/// The five nonnegative numbers of the tridiagonal matrix with first column
/// `(a, b, 0, ...)`, diagonal `s`, superdiagonal `r` and subdiagonal `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiParams {
    pub a: Scalar,
    pub b: Scalar,
    pub r: Scalar,
    pub s: Scalar,
    pub t: Scalar,
}

impl JacobiParams {
    pub fn new(
        a: Scalar,
        b: Scalar,
        r: Scalar,
        s: Scalar,
        t: Scalar,
    ) -> Result<Self, TotalPosError> {
        for (name, v) in [("a", &a), ("b", &b), ("r", &r), ("s", &s), ("t", &t)] {
            if v.is_negative() {
                return Err(TotalPosError::NegativeParameter { name });
            }
        }
        Ok(JacobiParams { a, b, r, s, t })
    }

    pub fn from_integers(a: i64, b: i64, r: i64, s: i64, t: i64) -> Result<Self, TotalPosError> {
        Self::new(
            exact::int(a),
            exact::int(b),
            exact::int(r),
            exact::int(s),
            exact::int(t),
        )
    }

    /// The coefficient matrix of `R(a,b;s,t)` corresponds to `r = 1`.
    pub fn from_recursive(p: &RecursiveMatrixParams) -> Self {
        JacobiParams {
            a: p.a.clone(),
            b: p.b.clone(),
            r: Scalar::one(),
            s: p.s.clone(),
            t: p.t.clone(),
        }
    }

    /// Leading `n`x`n` window.
    pub fn matrix(&self, n: usize) -> Matrix {
        Matrix::from_fn(n, n, |i, j| match (i, j) {
            (0, 0) => self.a.clone(),
            (1, 0) => self.b.clone(),
            _ if j == i + 1 => self.r.clone(),
            _ if i == j => self.s.clone(),
            _ if i == j + 1 && j >= 1 => self.t.clone(),
            _ => Scalar::zero(),
        })
    }
}

impl fmt::Display for JacobiParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "a={} b={} r={} s={} t={}",
            exact::render(&self.a),
            exact::render(&self.b),
            exact::render(&self.r),
            exact::render(&self.s),
            exact::render(&self.t)
        )
    }
}

/// TP_2 iff `as >= br` and `s^2 >= rt`.
pub fn jacobi_tp2_criterion(p: &JacobiParams) -> bool {
    &p.a * &p.s >= &p.b * &p.r && &p.s * &p.s >= &p.r * &p.t
}

/// TP iff `s^2 >= 4rt` and `a (s + sqrt(s^2 - 4rt)) / 2 >= br`, decided
/// without square roots: the second condition reads
/// `a sqrt(disc) >= 2br - as`, which holds outright when the right side is
/// nonpositive and otherwise iff `a^2 disc >= (2br - as)^2`.
pub fn jacobi_tp_criterion(p: &JacobiParams) -> bool {
    let disc = &p.s * &p.s - exact::int(4) * &p.r * &p.t;
    if disc.is_negative() {
        return false;
    }
    let gap = exact::int(2) * &p.b * &p.r - &p.a * &p.s;
    if !gap.is_positive() {
        return true;
    }
    &p.a * &p.a * disc >= &gap * &gap
}

/// `d_0..d_{count-1}` with `d_n = s d_{n-1} - rt d_{n-2}`, `d_0 = 1`, `d_1 = s`:
/// the contiguous principal minors of the tridiagonal Toeplitz part.
pub fn d_sequence(r: &Scalar, s: &Scalar, t: &Scalar, count: usize) -> Vec<Scalar> {
    let rt = r * t;
    let mut d: Vec<Scalar> = Vec::with_capacity(count);
    for n in 0..count {
        let next = match n {
            0 => Scalar::one(),
            1 => s.clone(),
            _ => s * &d[n - 1] - &rt * &d[n - 2],
        };
        d.push(next);
    }
    d
}

/// `D_0 = a`, `D_n = a d_n - br d_{n-1}`: the leading principal minors of the
/// full Jacobi window, `D_n` being of size `n + 1`.
pub fn big_d_sequence(p: &JacobiParams, count: usize) -> Vec<Scalar> {
    let d = d_sequence(&p.r, &p.s, &p.t, count);
    let br = &p.b * &p.r;
    (0..count)
        .map(|n| match n {
            0 => p.a.clone(),
            _ => &p.a * &d[n] - &br * &d[n - 1],
        })
        .collect()
}

/// Square window of the Hankel matrix `[c_{i+j}]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelWindow {
    matrix: Matrix,
}

impl HankelWindow {
    pub fn size(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }
}

/// The largest Hankel window fully determined by `col0`: size
/// `ceil(len / 2)`.
pub fn hankel_window(col0: &[Scalar]) -> HankelWindow {
    let n = col0.len().div_ceil(2);
    HankelWindow {
        matrix: Matrix::from_fn(n, n, |i, j| col0[i + j].clone()),
    }
}

/// First entry where two matrices differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryMismatch {
    pub row: usize,
    pub col: usize,
    pub expected: Scalar,
    pub actual: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AignerReport {
    pub holds: bool,
    pub size: usize,
    /// `H_n` (expected) against `R_n T_n R_n'` (actual).
    pub mismatch: Option<EntryMismatch>,
    pub hankel_determinant: Scalar,
}

/// `diag(1, t, t^2, ..., t^{n-1})`.
pub fn power_weights(t: &Scalar, n: usize) -> Vec<Scalar> {
    let mut w = Vec::with_capacity(n);
    let mut acc = Scalar::one();
    for _ in 0..n {
        w.push(acc.clone());
        acc *= t;
    }
    w
}

/// `diag(1, b, bt, bt^2, ...)`: the weights that reproduce the Hankel
/// matrix of `R(a,b;s,t)` for every parameter choice. They agree with
/// [`power_weights`] when `b = t`.
pub fn aigner_weights(p: &RecursiveMatrixParams, n: usize) -> Vec<Scalar> {
    let mut w = Vec::with_capacity(n);
    let mut acc = Scalar::one();
    for k in 0..n {
        w.push(acc.clone());
        acc *= if k == 0 { &p.b } else { &p.t };
    }
    w
}

/// Compares `H_n = [r_{i+j,0}]` against `R_n T_n R_n'` with
/// `T_n = diag(1, t, ..., t^{n-1})`.
pub fn aigner_decomposition_check(
    p: &RecursiveMatrixParams,
    n: usize,
) -> Result<AignerReport, TotalPosError> {
    aigner_decomposition_check_weighted(p, n, &power_weights(&p.t, n))
}

/// As [`aigner_decomposition_check`] with caller-supplied diagonal weights.
pub fn aigner_decomposition_check_weighted(
    p: &RecursiveMatrixParams,
    n: usize,
    weights: &[Scalar],
) -> Result<AignerReport, TotalPosError> {
    if n == 0 {
        return Err(RiordanError::NoRows.into());
    }
    if weights.len() != n {
        return Err(
            ExactError::Dimension(format!("{} weights for size {n}", weights.len())).into(),
        );
    }
    let r = build_recursive_matrix(p, 2 * n - 1)?;
    let hankel = hankel_window(&r.column(0)).into_matrix();
    let r_n = r.to_matrix().leading(n);
    let t_n = Matrix::from_fn(n, n, |i, j| {
        if i == j {
            weights[i].clone()
        } else {
            Scalar::zero()
        }
    });
    let product = r_n.mul(&t_n)?.mul(&r_n.transpose())?;
    let mismatch = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| hankel[(i, j)] != product[(i, j)])
        .map(|(row, col)| EntryMismatch {
            row,
            col,
            expected: hankel[(row, col)].clone(),
            actual: product[(row, col)].clone(),
        });
    Ok(AignerReport {
        holds: mismatch.is_none(),
        size: n,
        mismatch,
        hankel_determinant: exact::determinant(&hankel)?,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RecursiveClassification {
    /// `as >= b` and `s^2 >= t`: column 0 is log-convex.
    pub logconvex_guaranteed: bool,
    /// `s^2 >= 4t` and `a (s + sqrt(s^2 - 4t)) / 2 >= b`: the matrix is TP.
    pub tp_guaranteed: bool,
}

/// Sufficient conditions for `R(a,b;s,t)`, i.e. the Jacobi criteria with `r = 1`.
pub fn classify_recursive_matrix(p: &RecursiveMatrixParams) -> RecursiveClassification {
    let j = JacobiParams::from_recursive(p);
    RecursiveClassification {
        logconvex_guaranteed: jacobi_tp2_criterion(&j),
        tp_guaranteed: jacobi_tp_criterion(&j),
    }
}

/// Builds the triangle and tests column 0 for log-convexity.
pub fn column0_logconvex_check(spec: &RiordanSpec, n_rows: usize) -> Result<bool, TotalPosError> {
    Ok(column0_logconvexity_violation(spec, n_rows)?.is_none())
}

/// First `(i, j)` where column 0 fails `c_i c_{j+1} >= c_{i+1} c_j`.
pub fn column0_logconvexity_violation(
    spec: &RiordanSpec,
    n_rows: usize,
) -> Result<Option<(usize, usize)>, TotalPosError> {
    let triangle = build_triangle(spec, n_rows)?;
    Ok(sequences::log_convexity_violation(&triangle.column(0))?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowsReport {
    pub holds: bool,
    /// Row index and the offending `(i, j)` pair inside that row.
    pub first_failure: Option<(usize, (usize, usize))>,
}

pub fn rows_logconcave_check(
    spec: &RiordanSpec,
    n_rows: usize,
) -> Result<RowsReport, TotalPosError> {
    rows_logconcave(&build_triangle(spec, n_rows)?)
}

pub fn rows_logconcave(triangle: &Triangle) -> Result<RowsReport, TotalPosError> {
    for (n, row) in triangle.rows().iter().enumerate() {
        if let Some(pair) = sequences::log_concavity_violation(row)? {
            return Ok(RowsReport {
                holds: false,
                first_failure: Some((n, pair)),
            });
        }
    }
    Ok(RowsReport {
        holds: true,
        first_failure: None,
    })
}

/// `t^{n(n-1)/2}`, the value of `det H_n` whenever the decomposition holds.
pub fn expected_hankel_determinant(t: &Scalar, n: usize) -> Scalar {
    let e = n * n.saturating_sub(1) / 2;
    (0..e).fold(Scalar::one(), |acc, _| acc * t)
}

/// Column 0 of `R(a,b;s,t)` long enough to fill an `n`x`n` Hankel window.
pub fn hankel_of_recursive(
    p: &RecursiveMatrixParams,
    n: usize,
) -> Result<HankelWindow, TotalPosError> {
    let col = riordan::catalan_like_numbers(p, 2 * n - 1)?;
    Ok(hankel_window(&col))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ints};
    use crate::riordan::NamedTriangle;
    use crate::sequences::{SequenceSpec, Tail};

    fn forced() -> TpOptions {
        TpOptions::forced()
    }

    #[test]
    fn subsets_in_lexicographic_order() {
        let mut idx = vec![0, 1];
        let mut seen = vec![idx.clone()];
        while next_subset(&mut idx, 4) {
            seen.push(idx.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn pascal_window_is_tp() {
        let t = build_triangle(&NamedTriangle::Pascal.spec(), 6).unwrap();
        let rep = is_tp_r(&t.to_matrix(), TpOrder::All, &TpOptions::default()).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.window, (6, 6));
        assert_eq!(rep.minors_checked, 923); // C(12, 6) - 1
    }

    #[test]
    fn two_by_two_failure() {
        let m = Matrix::from_integers(&[[1, 1], [2, 1]]);
        let rep = is_tp_r(&m, TpOrder::Order(2), &TpOptions::default()).unwrap();
        assert!(!rep.holds);
        assert_eq!(
            rep.witness,
            Some(MinorWitness {
                rows: vec![0, 1],
                cols: vec![0, 1],
                value: int(-1)
            })
        );
    }

    #[test]
    fn identity_and_empty() {
        assert!(
            is_tp_r(&Matrix::identity(4), TpOrder::All, &TpOptions::default())
                .unwrap()
                .holds
        );
        let rep = is_tp_r(&Matrix::zeros(0, 0), TpOrder::All, &TpOptions::default()).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.minors_checked, 0);
    }

    #[test]
    fn smallest_order_reported_first() {
        // a negative entry beats any negative 2x2 minor
        let m = Matrix::from_integers(&[[1, 5], [1, -1]]);
        let rep = is_tp_r(&m, TpOrder::All, &TpOptions::default()).unwrap();
        assert_eq!(rep.witness.unwrap().rows, vec![1]);
    }

    #[test]
    fn rational_entries() {
        let m = Matrix::from_rows(vec![
            vec![Scalar::new(1.into(), 2.into()), int(1)],
            vec![int(1), Scalar::new(3.into(), 2.into())],
        ])
        .unwrap();
        let rep = is_tp_r(&m, TpOrder::All, &TpOptions::default()).unwrap();
        assert!(!rep.holds);
        assert_eq!(
            rep.witness.unwrap().value,
            Scalar::new((-1).into(), 4.into())
        );
    }

    #[test]
    fn size_cap() {
        let m = Matrix::identity(13);
        assert_eq!(
            is_tp_r(&m, TpOrder::All, &TpOptions::default()),
            Err(TotalPosError::TooLarge {
                rows: 13,
                cols: 13,
                cap: 12
            })
        );
        assert!(
            is_tp_r(&m, TpOrder::Order(2), &TpOptions::default())
                .unwrap()
                .holds
        );
        assert_eq!(
            is_tp_r(&m, TpOrder::Order(0), &forced()),
            Err(TotalPosError::ZeroOrder)
        );
    }

    #[test]
    fn order_parsing() {
        assert_eq!("ALL".parse::<TpOrder>().unwrap(), TpOrder::All);
        assert_eq!("3".parse::<TpOrder>().unwrap(), TpOrder::Order(3));
        assert!("0".parse::<TpOrder>().is_err());
        assert!("x".parse::<TpOrder>().is_err());
    }

    #[test]
    fn catalan_triangle_tp3() {
        let rep = triangle_tp_check(
            &NamedTriangle::Catalan.spec(),
            TpOrder::Order(3),
            8,
            &TpOptions::default(),
        )
        .unwrap();
        assert!(rep.triangle.holds);
        assert!(rep.coefficient.holds);
    }

    #[test]
    fn gapped_a_sequence_fails_in_coefficient_matrix() {
        let spec = RiordanSpec::new(
            SequenceSpec::from_integers(&[1, 0, 1], Tail::Zero).unwrap(),
            SequenceSpec::from_integers(&[3], Tail::Zero).unwrap(),
        )
        .unwrap();
        let rep = triangle_tp_check(&spec, TpOrder::Order(2), 6, &TpOptions::default()).unwrap();
        assert!(!rep.coefficient.holds);
        let w = rep.coefficient.witness.unwrap();
        assert_eq!(w.value, int(-1));
        let j = coefficient_matrix(&spec, 6);
        assert_eq!(exact::minor(&j, &w.rows, &w.cols).unwrap(), int(-1));
    }

    #[test]
    fn tp2_criterion_examples() {
        assert!(jacobi_tp2_criterion(
            &JacobiParams::from_integers(1, 1, 1, 1, 1).unwrap()
        ));
        assert!(!jacobi_tp2_criterion(
            &JacobiParams::from_integers(1, 2, 1, 1, 1).unwrap()
        ));
        assert!(jacobi_tp2_criterion(
            &JacobiParams::from_integers(0, 0, 1, 1, 0).unwrap()
        ));
    }

    #[test]
    fn tp_criterion_examples() {
        assert!(jacobi_tp_criterion(
            &JacobiParams::from_integers(2, 1, 1, 2, 1).unwrap()
        ));
        assert!(!jacobi_tp_criterion(
            &JacobiParams::from_integers(1, 2, 1, 2, 1).unwrap()
        ));
        assert!(!jacobi_tp_criterion(
            &JacobiParams::from_integers(1, 1, 1, 1, 1).unwrap()
        ));
    }

    #[test]
    fn tp_criterion_boundary_is_exact() {
        // s^2 = 4rt, lambda = 1, a*lambda = br exactly
        assert!(jacobi_tp_criterion(
            &JacobiParams::from_integers(1, 1, 1, 2, 1).unwrap()
        ));
        // lambda = (3 + sqrt 5)/2 ~ 2.618; br/a = 21/8 = 2.625 just above
        assert!(!jacobi_tp_criterion(
            &JacobiParams::from_integers(8, 21, 1, 3, 1).unwrap()
        ));
        // 34/13 ~ 2.6154 just below
        assert!(jacobi_tp_criterion(
            &JacobiParams::from_integers(13, 34, 1, 3, 1).unwrap()
        ));
    }

    #[test]
    fn negative_jacobi_params_rejected() {
        assert_eq!(
            JacobiParams::from_integers(1, 1, -1, 1, 1),
            Err(TotalPosError::NegativeParameter { name: "r" })
        );
    }

    #[test]
    fn d_sequences() {
        assert_eq!(
            d_sequence(&int(1), &int(2), &int(1), 6),
            ints(&[1, 2, 3, 4, 5, 6])
        );
        assert_eq!(
            d_sequence(&int(1), &int(1), &int(1), 6),
            ints(&[1, 1, 0, -1, -1, 0])
        );
        assert_eq!(
            d_sequence(&int(1), &int(3), &int(2), 4),
            ints(&[1, 3, 7, 15])
        );
    }

    #[test]
    fn big_d_sequences() {
        let p = JacobiParams::from_integers(2, 1, 1, 2, 1).unwrap();
        assert_eq!(big_d_sequence(&p, 4), ints(&[2, 3, 4, 5]));
        let p = JacobiParams::from_integers(1, 2, 1, 2, 1).unwrap();
        assert_eq!(big_d_sequence(&p, 3), ints(&[1, 0, -1]));
        let p = JacobiParams::from_integers(3, 0, 1, 3, 2).unwrap();
        let d = d_sequence(&p.r, &p.s, &p.t, 5);
        let scaled: Vec<Scalar> = d.iter().map(|x| x * int(3)).collect();
        assert_eq!(big_d_sequence(&p, 5), scaled);
    }

    #[test]
    fn jacobi_window_shape() {
        let p = JacobiParams::from_integers(5, 7, 1, 2, 3).unwrap();
        assert_eq!(
            p.matrix(4),
            Matrix::from_integers(&[[5, 1, 0, 0], [7, 2, 1, 0], [0, 3, 2, 1], [0, 0, 3, 2]])
        );
    }

    #[test]
    fn hankel_windows() {
        let h = hankel_window(&ints(&[1, 1, 2, 5, 14]));
        assert_eq!(
            h.matrix(),
            &Matrix::from_integers(&[[1, 1, 2], [1, 2, 5], [2, 5, 14]])
        );
        assert_eq!(
            hankel_window(&ints(&[1])).matrix(),
            &Matrix::from_integers(&[[1]])
        );
        let h = hankel_window(&ints(&[1, 2, 6, 22, 90]));
        assert_eq!(h.size(), 3);
        assert_eq!(h.matrix()[(2, 2)], int(90));
        let even = hankel_window(&ints(&[1, 2, 3, 4]));
        assert_eq!(even.size(), 2);
    }

    #[test]
    fn aigner_examples() {
        let p = RecursiveMatrixParams::from_integers(2, 1, 2, 1).unwrap();
        let rep = aigner_decomposition_check(&p, 4).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.hankel_determinant, int(1));
        let p = RecursiveMatrixParams::from_integers(1, 1, 1, 1).unwrap();
        assert!(aigner_decomposition_check(&p, 4).unwrap().holds);
        let p = RecursiveMatrixParams::from_integers(2, 2, 3, 2).unwrap();
        let rep = aigner_decomposition_check(&p, 3).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.hankel_determinant, int(8));
    }

    #[test]
    fn aigner_power_weights_need_b_equal_t() {
        let p = RecursiveMatrixParams::from_integers(1, 1, 1, 0).unwrap();
        let rep = aigner_decomposition_check(&p, 3).unwrap();
        assert!(!rep.holds);
        assert_eq!(
            rep.mismatch,
            Some(EntryMismatch {
                row: 1,
                col: 1,
                expected: int(2),
                actual: int(1)
            })
        );
        let general = aigner_weights(&p, 3);
        assert!(
            aigner_decomposition_check_weighted(&p, 3, &general)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn classifier_examples() {
        let c =
            classify_recursive_matrix(&RecursiveMatrixParams::from_integers(2, 1, 2, 1).unwrap());
        assert_eq!((c.logconvex_guaranteed, c.tp_guaranteed), (true, true));
        let c =
            classify_recursive_matrix(&RecursiveMatrixParams::from_integers(1, 1, 1, 1).unwrap());
        assert_eq!((c.logconvex_guaranteed, c.tp_guaranteed), (true, false));
        let c =
            classify_recursive_matrix(&RecursiveMatrixParams::from_integers(0, 1, 1, 0).unwrap());
        assert_eq!((c.logconvex_guaranteed, c.tp_guaranteed), (false, false));
    }

    #[test]
    fn column0_examples() {
        for t in [
            NamedTriangle::Motzkin,
            NamedTriangle::SchroderLittle,
            NamedTriangle::Pascal,
        ] {
            assert!(column0_logconvex_check(&t.spec(), 10).unwrap(), "{t}");
        }
    }

    #[test]
    fn rows_examples() {
        for t in [
            NamedTriangle::Ballot,
            NamedTriangle::Pascal,
            NamedTriangle::SchroderLarge,
        ] {
            let rep = rows_logconcave_check(&t.spec(), 10).unwrap();
            assert!(rep.holds, "{t}");
            assert_eq!(rep.first_failure, None);
        }
    }

    #[test]
    fn rows_failure_is_located() {
        let t = Triangle::from_integers(&[&[1][..], &[1, 1], &[1, 0, 1]]).unwrap();
        let rep = rows_logconcave(&t).unwrap();
        assert_eq!(rep.first_failure, Some((2, (0, 1))));
    }

    #[test]
    fn hankel_determinant_formula() {
        assert_eq!(expected_hankel_determinant(&int(2), 3), int(8));
        assert_eq!(expected_hankel_determinant(&int(0), 1), int(1));
        assert_eq!(expected_hankel_determinant(&int(0), 2), int(0));
    }
}
