//! Finite descriptions of infinite nonnegative sequences, and the
//! log-concavity, log-convexity and Pólya frequency predicates on them.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exact::{self, ExactError, Matrix, Polynomial, Scalar};
use crate::totalpos::{self, MinorWitness, TotalPosError, TpOptions, TpOrder};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SequenceError {
    #[error("sequence entry {index} is negative ({value})")]
    Negative { index: usize, value: String },
    #[error("a repeat-last tail needs a nonempty prefix")]
    EmptyRepeat,
    #[error("sequence is identically zero")]
    AllZero,
    #[error("order must be at least 1 and the window at least the order (order {order}, window {window})")]
    Window { order: usize, window: usize },
    #[error("unknown tail rule {0:?} (expected zero or repeat)")]
    UnknownTail(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    TotalPos(#[from] Box<TotalPosError>),
}

/// How a finite prefix continues to infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tail {
    /// Pad with zeros.
    Zero,
    /// Repeat the final prefix entry forever.
    RepeatLast,
}

impl Tail {
    pub fn as_str(self) -> &'static str {
        match self {
            Tail::Zero => "zero",
            Tail::RepeatLast => "repeat",
        }
    }
}

impl FromStr for Tail {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "zero" => Ok(Tail::Zero),
            "repeat" | "repeat-last" => Ok(Tail::RepeatLast),
            other => Err(SequenceError::UnknownTail(other.to_string())),
        }
    }
}

/// A nonnegative infinite sequence given by a prefix and a tail rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceSpec {
    prefix: Vec<Scalar>,
    tail: Tail,
}

impl SequenceSpec {
    pub fn new(prefix: Vec<Scalar>, tail: Tail) -> Result<Self, SequenceError> {
        check_nonnegative(&prefix)?;
        if tail == Tail::RepeatLast && prefix.is_empty() {
            return Err(SequenceError::EmptyRepeat);
        }
        Ok(SequenceSpec { prefix, tail })
    }

    pub fn from_integers(prefix: &[i64], tail: Tail) -> Result<Self, SequenceError> {
        Self::new(exact::ints(prefix), tail)
    }

    pub fn prefix(&self) -> &[Scalar] {
        &self.prefix
    }

    pub fn tail(&self) -> Tail {
        self.tail
    }

    pub fn term(&self, n: usize) -> Scalar {
        match self.prefix.get(n) {
            Some(v) => v.clone(),
            None => match self.tail {
                Tail::Zero => Scalar::zero(),
                Tail::RepeatLast => self.prefix.last().cloned().unwrap_or_else(Scalar::zero),
            },
        }
    }

    pub fn terms(&self, count: usize) -> Vec<Scalar> {
        (0..count).map(|n| self.term(n)).collect()
    }

    /// The sequence with its first term dropped, `(s_1, s_2, ...)`.
    pub fn shifted(&self) -> SequenceSpec {
        let prefix = match (self.prefix.len(), self.tail) {
            (1, Tail::RepeatLast) => self.prefix.clone(),
            (0, _) => Vec::new(),
            _ => self.prefix[1..].to_vec(),
        };
        SequenceSpec {
            prefix,
            tail: self.tail,
        }
    }

    /// Leading `n`x`n` block of the Toeplitz matrix `[s_{i-j}]`.
    pub fn toeplitz_window(&self, n: usize) -> Matrix {
        Matrix::from_fn(n, n, |i, j| {
            if i >= j {
                self.term(i - j)
            } else {
                Scalar::zero()
            }
        })
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix: Vec<String> = self.prefix.iter().map(exact::render).collect();
        write!(f, "({};{})", prefix.join(","), self.tail.as_str())
    }
}

fn check_nonnegative(seq: &[Scalar]) -> Result<(), SequenceError> {
    match seq.iter().position(Signed::is_negative) {
        Some(index) => Err(SequenceError::Negative {
            index,
            value: exact::render(&seq[index]),
        }),
        None => Ok(()),
    }
}

/// First pair `i < j` with `a_i a_{j+1} > a_{i+1} a_j`, if any.
pub fn log_concavity_violation(seq: &[Scalar]) -> Result<Option<(usize, usize)>, SequenceError> {
    check_nonnegative(seq)?;
    Ok(first_pair(seq, |lhs, rhs| lhs > rhs))
}

/// First pair `i < j` with `a_i a_{j+1} < a_{i+1} a_j`, if any.
pub fn log_convexity_violation(seq: &[Scalar]) -> Result<Option<(usize, usize)>, SequenceError> {
    check_nonnegative(seq)?;
    Ok(first_pair(seq, |lhs, rhs| lhs < rhs))
}

fn first_pair(seq: &[Scalar], bad: impl Fn(&Scalar, &Scalar) -> bool) -> Option<(usize, usize)> {
    let n = seq.len();
    for i in 0..n.saturating_sub(1) {
        for j in i + 1..n - 1 {
            let lhs = &seq[i] * &seq[j + 1];
            let rhs = &seq[i + 1] * &seq[j];
            if bad(&lhs, &rhs) {
                return Some((i, j));
            }
        }
    }
    None
}

/// `a_i a_{j+1} <= a_{i+1} a_j` for all `i < j`. Internal zeros are handled by
/// the pairwise condition, not by adjacent triples.
pub fn is_log_concave(seq: &[Scalar]) -> Result<bool, SequenceError> {
    Ok(log_concavity_violation(seq)?.is_none())
}

/// `a_i a_{j+1} >= a_{i+1} a_j` for all `i < j`.
pub fn is_log_convex(seq: &[Scalar]) -> Result<bool, SequenceError> {
    Ok(log_convexity_violation(seq)?.is_none())
}

/// Why a Pólya frequency check failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PfWitness {
    /// A negative minor of the Toeplitz window.
    Minor(MinorWitness),
    /// The squarefree generating polynomial (with the root at zero removed)
    /// has fewer distinct real roots than its degree.
    RootCount { degree: usize, real_roots: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PfVerdict {
    pub holds: bool,
    /// `Some(n)` when the verdict only covers the leading `n`x`n` Toeplitz
    /// block.
    pub window: Option<usize>,
    pub witness: Option<PfWitness>,
}

/// Exact PF test for a finite sequence: its generating polynomial must have
/// only real zeros.
pub fn is_pf_finite(seq: &[Scalar]) -> Result<PfVerdict, SequenceError> {
    check_nonnegative(seq)?;
    if seq.iter().all(Zero::is_zero) {
        return Err(SequenceError::AllZero);
    }
    let reduced = Polynomial::new(seq.to_vec())
        .without_root_at_zero()
        .squarefree_part();
    let degree = reduced.degree().expect("sequence has a nonzero entry");
    let real_roots = exact::count_distinct_real_roots(&reduced)?;
    let holds = real_roots == degree;
    Ok(PfVerdict {
        holds,
        window: None,
        witness: (!holds).then_some(PfWitness::RootCount { degree, real_roots }),
    })
}

/// PF_r certificate up to a finite window: every minor of order `<= r` of the
/// leading `window`x`window` Toeplitz block is nonnegative. For sequences
/// that never vanish this is a necessary condition only.
pub fn is_pf_r_window(
    spec: &SequenceSpec,
    r: usize,
    window: usize,
) -> Result<PfVerdict, SequenceError> {
    if r == 0 || window < r {
        return Err(SequenceError::Window { order: r, window });
    }
    let report = totalpos::is_tp_r(
        &spec.toeplitz_window(window),
        TpOrder::Order(r),
        &TpOptions::default(),
    )
    .map_err(Box::new)?;
    Ok(PfVerdict {
        holds: report.holds,
        window: Some(window),
        witness: report.witness.map(PfWitness::Minor),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ints};

    #[test]
    fn terms_follow_tail_rule() {
        let z = SequenceSpec::from_integers(&[1, 2], Tail::Zero).unwrap();
        let r = SequenceSpec::from_integers(&[1, 2], Tail::RepeatLast).unwrap();
        assert_eq!(z.term(5), int(0));
        assert_eq!(r.term(5), int(2));
        let z3 = SequenceSpec::from_integers(&[1, 2, 1], Tail::Zero).unwrap();
        assert_eq!(z3.term(1), int(2));
    }

    #[test]
    fn spec_validation() {
        assert_eq!(
            SequenceSpec::from_integers(&[], Tail::RepeatLast),
            Err(SequenceError::EmptyRepeat)
        );
        assert!(matches!(
            SequenceSpec::from_integers(&[1, -1], Tail::Zero),
            Err(SequenceError::Negative { index: 1, .. })
        ));
        assert!(SequenceSpec::from_integers(&[], Tail::Zero).is_ok());
    }

    #[test]
    fn toeplitz_windows() {
        let s = SequenceSpec::from_integers(&[1, 2, 1], Tail::Zero).unwrap();
        assert_eq!(
            s.toeplitz_window(3),
            Matrix::from_integers(&[[1, 0, 0], [2, 1, 0], [1, 2, 1]])
        );
        let ones = SequenceSpec::from_integers(&[1], Tail::RepeatLast).unwrap();
        assert_eq!(
            ones.toeplitz_window(2),
            Matrix::from_integers(&[[1, 0], [1, 1]])
        );
        let zero = SequenceSpec::from_integers(&[0], Tail::Zero).unwrap();
        assert_eq!(zero.toeplitz_window(2), Matrix::zeros(2, 2));
    }

    #[test]
    fn shifting() {
        let a = SequenceSpec::from_integers(&[1, 2, 1], Tail::Zero).unwrap();
        assert_eq!(a.shifted().prefix(), &ints(&[2, 1])[..]);
        let b = SequenceSpec::from_integers(&[3], Tail::RepeatLast).unwrap();
        assert_eq!(b.shifted(), b);
        let c = SequenceSpec::from_integers(&[1], Tail::Zero).unwrap();
        assert_eq!(c.shifted().term(0), int(0));
    }

    #[test]
    fn log_concavity_examples() {
        assert!(is_log_concave(&ints(&[1, 3, 3, 1])).unwrap());
        assert!(is_log_concave(&ints(&[1, 4, 6, 4, 1])).unwrap());
        assert!(!is_log_concave(&ints(&[1, 1, 2])).unwrap());
    }

    #[test]
    fn internal_zero_breaks_log_concavity() {
        // adjacent triples all pass, the pairwise definition does not
        let seq = ints(&[1, 0, 0, 1]);
        assert_eq!(log_concavity_violation(&seq).unwrap(), Some((0, 2)));
    }

    #[test]
    fn log_convexity_examples() {
        assert!(is_log_convex(&ints(&[1, 1, 2, 5, 14, 42])).unwrap());
        assert!(is_log_convex(&ints(&[1, 2, 4, 8])).unwrap());
        assert!(!is_log_convex(&ints(&[1, 2, 3])).unwrap());
    }

    #[test]
    fn negative_entries_are_domain_errors() {
        assert!(is_log_concave(&ints(&[1, -1])).is_err());
        assert!(is_log_convex(&ints(&[-1])).is_err());
        assert!(is_pf_finite(&ints(&[1, -2, 1])).is_err());
    }

    #[test]
    fn pf_finite_examples() {
        assert!(is_pf_finite(&ints(&[1, 2, 1])).unwrap().holds);
        let v = is_pf_finite(&ints(&[1, 1, 1])).unwrap();
        assert!(!v.holds);
        assert_eq!(
            v.witness,
            Some(PfWitness::RootCount {
                degree: 2,
                real_roots: 0
            })
        );
        assert!(is_pf_finite(&ints(&[1, 3, 3, 1])).unwrap().holds);
        assert!(is_pf_finite(&ints(&[0, 0, 5])).unwrap().holds);
        assert_eq!(is_pf_finite(&ints(&[0, 0])), Err(SequenceError::AllZero));
    }

    #[test]
    fn pf_window_examples() {
        let ones = SequenceSpec::from_integers(&[1], Tail::RepeatLast).unwrap();
        assert!(is_pf_r_window(&ones, 3, 6).unwrap().holds);
        let one_two = SequenceSpec::from_integers(&[1, 2], Tail::RepeatLast).unwrap();
        assert!(is_pf_r_window(&one_two, 2, 8).unwrap().holds);
        let s = SequenceSpec::from_integers(&[1, 1, 1], Tail::Zero).unwrap();
        let v = is_pf_r_window(&s, 3, 6).unwrap();
        assert!(!v.holds);
        assert_eq!(v.window, Some(6));
        match v.witness {
            Some(PfWitness::Minor(w)) => {
                assert_eq!(w.rows.len(), 3);
                assert!(w.value < int(0));
                let m = s.toeplitz_window(6);
                assert_eq!(exact::minor(&m, &w.rows, &w.cols).unwrap(), w.value);
            }
            other => panic!("expected a minor witness, got {other:?}"),
        }
    }

    #[test]
    fn window_smaller_than_order() {
        let s = SequenceSpec::from_integers(&[1], Tail::Zero).unwrap();
        assert_eq!(
            is_pf_r_window(&s, 3, 2),
            Err(SequenceError::Window {
                order: 3,
                window: 2
            })
        );
    }
}
