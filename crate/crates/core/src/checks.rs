//! Named property checks behind a common trait, looked up at runtime.
//!
//! Each [`PropertyCheck`] reads the inputs it needs from a [`CheckRequest`]
//! and returns a uniform [`CheckOutcome`]. [`CheckRegistry::builtin`] holds
//! every check shipped with the crate; callers may register their own.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::exact::{self, Scalar};
use crate::riordan::{self, build_triangle, RecursiveMatrixParams, RiordanError, RiordanSpec};
use crate::sequences::{self, PfWitness, SequenceError, SequenceSpec, Tail};
use crate::totalpos::{
    self, EntryMismatch, JacobiParams, MinorWitness, TotalPosError, TpOptions, TpOrder,
};

/// Window size used when the caller does not pick one.
pub const DEFAULT_WINDOW: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CheckError {
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("check {check} needs {what}")]
    MissingInput {
        check: &'static str,
        what: &'static str,
    },
    #[error("{0}")]
    InvalidInput(String),
    #[error(transparent)]
    TotalPos(#[from] TotalPosError),
    #[error(transparent)]
    Riordan(#[from] RiordanError),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}

/// Everything a check might consume. Unused fields are ignored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRequest {
    pub spec: Option<RiordanSpec>,
    pub recursive: Option<RecursiveMatrixParams>,
    pub jacobi: Option<JacobiParams>,
    pub sequence: Option<Vec<Scalar>>,
    pub order: Option<TpOrder>,
    pub window: usize,
    pub options: TpOptions,
}

impl Default for CheckRequest {
    fn default() -> Self {
        CheckRequest {
            spec: None,
            recursive: None,
            jacobi: None,
            sequence: None,
            order: None,
            window: DEFAULT_WINDOW,
            options: TpOptions::default(),
        }
    }
}

impl CheckRequest {
    /// The Riordan array under test: an explicit spec, else the recursive
    /// matrix parameters.
    fn riordan(&self, check: &'static str) -> Result<RiordanSpec, CheckError> {
        match (&self.spec, &self.recursive) {
            (Some(spec), _) => Ok(spec.clone()),
            (None, Some(p)) => Ok(p.to_spec()),
            (None, None) => Err(CheckError::MissingInput {
                check,
                what: "a triangle (name, A/Z sequences or recursive parameters)",
            }),
        }
    }

    fn jacobi(&self, check: &'static str) -> Result<JacobiParams, CheckError> {
        match (&self.jacobi, &self.recursive) {
            (Some(j), _) => Ok(j.clone()),
            (None, Some(p)) => Ok(JacobiParams::from_recursive(p)),
            (None, None) => Err(CheckError::MissingInput {
                check,
                what: "Jacobi parameters a,b[,r],s,t",
            }),
        }
    }
}

/// Evidence that a property fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A negative minor of the named matrix window.
    Minor {
        matrix: &'static str,
        minor: MinorWitness,
    },
    /// A pair `i < j` breaking the log-concavity/convexity inequality, with
    /// the row it lives in when the sequence is a triangle row.
    Pair {
        row: Option<usize>,
        i: usize,
        j: usize,
    },
    /// Distinct real roots fall short of the degree.
    RootCount { degree: usize, real_roots: usize },
    /// Two matrices that should agree differ here.
    Entry(EntryMismatch),
    /// The closed form fails but no negative minor exists in the window.
    NotInWindow { window: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub holds: bool,
    /// Human-readable key/value facts, in a stable order.
    pub details: Vec<(String, String)>,
    pub witness: Option<Witness>,
}

impl CheckOutcome {
    fn new(holds: bool) -> Self {
        CheckOutcome {
            holds,
            details: Vec::new(),
            witness: None,
        }
    }

    fn detail(mut self, key: &str, value: impl ToString) -> Self {
        self.details.push((key.to_string(), value.to_string()));
        self
    }

    fn witness(mut self, witness: Option<Witness>) -> Self {
        self.witness = witness;
        self
    }
}

/// A property that can be decided for a [`CheckRequest`].
pub trait PropertyCheck: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn run(&self, request: &CheckRequest) -> Result<CheckOutcome, CheckError>;
}

/// Checks keyed by name.
#[derive(Default)]
pub struct CheckRegistry {
    checks: BTreeMap<&'static str, Box<dyn PropertyCheck>>,
}

impl CheckRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn builtin() -> Self {
        let mut registry = Self::new();
        registry.register(Box::new(TriangleTp {
            name: "tp",
            fixed_order: None,
        }));
        registry.register(Box::new(TriangleTp {
            name: "tp2",
            fixed_order: Some(2),
        }));
        registry.register(Box::new(JacobiCriterion {
            name: "jacobi-tp",
            full: true,
        }));
        registry.register(Box::new(JacobiCriterion {
            name: "jacobi-tp2",
            full: false,
        }));
        registry.register(Box::new(Column0LogConvex));
        registry.register(Box::new(RowsLogConcave));
        registry.register(Box::new(PolyaFrequency));
        registry.register(Box::new(Hankel));
        registry
    }

    /// Adds a check, replacing any previous one with the same name.
    pub fn register(&mut self, check: Box<dyn PropertyCheck>) {
        self.checks.insert(check.name(), check);
    }

    pub fn get(&self, name: &str) -> Option<&dyn PropertyCheck> {
        self.checks.get(name).map(|c| c.as_ref())
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.checks.keys().copied()
    }

    pub fn run(&self, name: &str, request: &CheckRequest) -> Result<CheckOutcome, CheckError> {
        self.get(name)
            .ok_or_else(|| CheckError::UnknownCheck(name.to_string()))?
            .run(request)
    }
}

struct TriangleTp {
    name: &'static str,
    fixed_order: Option<usize>,
}

impl PropertyCheck for TriangleTp {
    fn name(&self) -> &'static str {
        self.name
    }

    fn description(&self) -> &'static str {
        "minors of the triangle window (and its coefficient matrix) are nonnegative"
    }

    fn run(&self, request: &CheckRequest) -> Result<CheckOutcome, CheckError> {
        let spec = request.riordan(self.name)?;
        let order = match self.fixed_order {
            Some(r) => TpOrder::Order(r),
            None => request.order.unwrap_or(TpOrder::All),
        };
        let report = totalpos::triangle_tp_check(&spec, order, request.window, &request.options)?;
        Ok(CheckOutcome::new(report.triangle.holds)
            .detail("spec", &spec)
            .detail("order", order)
            .detail("window", request.window)
            .detail("coefficient_matrix_holds", report.coefficient.holds)
            .detail("minors_checked", report.triangle.minors_checked)
            .witness(report.triangle.witness.map(|minor| Witness::Minor {
                matrix: "triangle",
                minor,
            })))
    }
}

struct JacobiCriterion {
    name: &'static str,
    full: bool,
}

impl PropertyCheck for JacobiCriterion {
    fn name(&self) -> &'static str {
        self.name
    }

    fn description(&self) -> &'static str {
        if self.full {
            "closed-form total positivity of the tridiagonal coefficient matrix"
        } else {
            "closed-form TP2 of the tridiagonal coefficient matrix"
        }
    }

    fn run(&self, request: &CheckRequest) -> Result<CheckOutcome, CheckError> {
        let p = request.jacobi(self.name)?;
        let holds = if self.full {
            totalpos::jacobi_tp_criterion(&p)
        } else {
            totalpos::jacobi_tp2_criterion(&p)
        };
        let mut outcome = CheckOutcome::new(holds).detail("params", &p);
        if !holds {
            let order = if self.full {
                TpOrder::All
            } else {
                TpOrder::Order(2)
            };
            let report = totalpos::is_tp_r(&p.matrix(request.window), order, &request.options)?;
            outcome =
                outcome
                    .detail("window", request.window)
                    .witness(Some(match report.witness {
                        Some(minor) => Witness::Minor {
                            matrix: "jacobi",
                            minor,
                        },
                        None => Witness::NotInWindow {
                            window: request.window,
                        },
                    }));
        }
        Ok(outcome)
    }
}

struct Column0LogConvex;

impl PropertyCheck for Column0LogConvex {
    fn name(&self) -> &'static str {
        "logconvex-col0"
    }

    fn description(&self) -> &'static str {
        "column 0 of the triangle window is log-convex"
    }

    fn run(&self, request: &CheckRequest) -> Result<CheckOutcome, CheckError> {
        let spec = request.riordan(self.name())?;
        let violation = totalpos::column0_logconvexity_violation(&spec, request.window)?;
        let column = build_triangle(&spec, request.window)?.column(0);
        Ok(CheckOutcome::new(violation.is_none())
            .detail("spec", &spec)
            .detail("window", request.window)
            .detail("column0", join(&column))
            .witness(violation.map(|(i, j)| Witness::Pair { row: None, i, j })))
    }
}

struct RowsLogConcave;

impl PropertyCheck for RowsLogConcave {
    fn name(&self) -> &'static str {
        "logconcave-rows"
    }

    fn description(&self) -> &'static str {
        "every row of the triangle window is log-concave"
    }

    fn run(&self, request: &CheckRequest) -> Result<CheckOutcome, CheckError> {
        let spec = request.riordan(self.name())?;
        let report = totalpos::rows_logconcave_check(&spec, request.window)?;
        Ok(CheckOutcome::new(report.holds)
            .detail("spec", &spec)
            .detail("window", request.window)
            .witness(report.first_failure.map(|(row, (i, j))| Witness::Pair {
                row: Some(row),
                i,
                j,
            })))
    }
}

struct PolyaFrequency;

impl PropertyCheck for PolyaFrequency {
    fn name(&self) -> &'static str {
        "pf"
    }

    fn description(&self) -> &'static str {
        "finite sequence is PF (real-rooted), or PF_r up to a Toeplitz window"
    }

    fn run(&self, request: &CheckRequest) -> Result<CheckOutcome, CheckError> {
        let seq = request.sequence.as_ref().ok_or(CheckError::MissingInput {
            check: "pf",
            what: "a sequence",
        })?;
        let (verdict, mode) = match request.order {
            None | Some(TpOrder::All) => (sequences::is_pf_finite(seq)?, "real-rooted".to_string()),
            Some(TpOrder::Order(r)) => {
                let spec = SequenceSpec::new(seq.clone(), Tail::Zero)?;
                (
                    sequences::is_pf_r_window(&spec, r, request.window)?,
                    format!("toeplitz order {r}"),
                )
            }
        };
        let mut outcome = CheckOutcome::new(verdict.holds)
            .detail("seq", join(seq))
            .detail("method", mode);
        if let Some(w) = verdict.window {
            outcome = outcome.detail("window", w);
        }
        Ok(outcome.witness(verdict.witness.map(|w| match w {
            PfWitness::Minor(minor) => Witness::Minor {
                matrix: "toeplitz",
                minor,
            },
            PfWitness::RootCount { degree, real_roots } => {
                Witness::RootCount { degree, real_roots }
            }
        })))
    }
}

struct Hankel;

impl PropertyCheck for Hankel {
    fn name(&self) -> &'static str {
        "hankel"
    }

    fn description(&self) -> &'static str {
        "Hankel window of column 0 (or a sequence) is TP_r; recursive matrices also verify H = RTR'"
    }

    fn run(&self, request: &CheckRequest) -> Result<CheckOutcome, CheckError> {
        let n = request.window.max(1);
        let values = match (&request.sequence, &request.recursive, &request.spec) {
            (Some(seq), _, _) => seq.clone(),
            (None, Some(p), _) => riordan::catalan_like_numbers(p, 2 * n - 1)?,
            (None, None, Some(spec)) => build_triangle(spec, 2 * n - 1)?.column(0),
            (None, None, None) => {
                return Err(CheckError::MissingInput {
                    check: "hankel",
                    what: "a sequence, recursive parameters or a triangle",
                })
            }
        };
        if values.is_empty() {
            return Err(CheckError::InvalidInput("empty sequence".to_string()));
        }
        let hankel = totalpos::hankel_window(&values);
        let order = request.order.unwrap_or(TpOrder::All);
        let report = totalpos::is_tp_r(hankel.matrix(), order, &request.options)?;
        let determinant = exact::determinant(hankel.matrix()).map_err(TotalPosError::from)?;
        let mut outcome = CheckOutcome::new(report.holds)
            .detail("window", hankel.size())
            .detail("order", order)
            .detail("determinant", exact::render(&determinant));
        if let Some(p) = &request.recursive {
            let aigner = totalpos::aigner_decomposition_check(p, hankel.size())?;
            outcome = outcome.detail("aigner_decomposition_holds", aigner.holds);
        }
        Ok(outcome.witness(report.witness.map(|minor| Witness::Minor {
            matrix: "hankel",
            minor,
        })))
    }
}

fn join(values: &[Scalar]) -> String {
    values
        .iter()
        .map(exact::render)
        .collect::<Vec<_>>()
        .join(",")
}
