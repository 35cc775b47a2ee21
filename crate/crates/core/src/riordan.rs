//! Riordan arrays: construction from A- and Z-sequences, from truncated
//! `(g, f)` series, and as Aigner recursive matrices `R(a,b;s,t)`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact::{self, Matrix, Scalar};
use crate::sequences::{SequenceError, SequenceSpec, Tail};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RiordanError {
    #[error("improper array: a_0 must be nonzero")]
    Improper,
    #[error("improper series pair: {0}")]
    ImproperSeries(&'static str),
    #[error("at least one row is required")]
    NoRows,
    #[error("row {row} has {len} entries, expected {expected}")]
    Shape {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("r_(0,0) must be 1")]
    NotNormalized,
    #[error("series has {len} coefficients but {needed} rows were requested")]
    SeriesTooShort { len: usize, needed: usize },
    #[error("need at least 3 rows to extract A and Z, got {0}")]
    TooFewRows(usize),
    #[error("diagonal entry r_({0},{0}) is zero")]
    Singular(usize),
    #[error("not a Riordan array: entry ({n},{k}) contradicts the recurrence")]
    NotRiordan { n: usize, k: usize },
    #[error("parameter {name} is negative")]
    NegativeParameter { name: &'static str },
    #[error("unknown triangle {0:?}")]
    UnknownName(String),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}

/// Finite lower-triangular window `[r_{n,k}]`, `0 <= k <= n < n_rows`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    rows: Vec<Vec<Scalar>>,
}

impl Triangle {
    /// Row `n` must hold exactly `n + 1` entries and `r_{0,0} = 1`.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, RiordanError> {
        if rows.is_empty() {
            return Err(RiordanError::NoRows);
        }
        for (row, r) in rows.iter().enumerate() {
            if r.len() != row + 1 {
                return Err(RiordanError::Shape {
                    row,
                    len: r.len(),
                    expected: row + 1,
                });
            }
        }
        if !rows[0][0].is_one() {
            return Err(RiordanError::NotNormalized);
        }
        Ok(Triangle { rows })
    }

    pub fn from_integers<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, RiordanError> {
        Self::from_rows(rows.iter().map(|r| exact::ints(r.as_ref())).collect())
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[Scalar] {
        &self.rows[n]
    }

    /// `r_{n,k}`, zero outside the triangle.
    pub fn get(&self, n: usize, k: usize) -> Scalar {
        self.rows
            .get(n)
            .and_then(|r| r.get(k))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn column(&self, k: usize) -> Vec<Scalar> {
        (k..self.n_rows())
            .map(|n| self.rows[n][k].clone())
            .collect()
    }

    /// The square lower-triangular matrix of the window.
    pub fn to_matrix(&self) -> Matrix {
        let n = self.n_rows();
        Matrix::from_fn(n, n, |i, j| self.get(i, j))
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let line: Vec<String> = r.iter().map(exact::render).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// A proper Riordan array given by its A- and Z-sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RiordanSpec {
    a: SequenceSpec,
    z: SequenceSpec,
}

impl RiordanSpec {
    pub fn new(a: SequenceSpec, z: SequenceSpec) -> Result<Self, RiordanError> {
        if a.term(0).is_zero() {
            return Err(RiordanError::Improper);
        }
        Ok(RiordanSpec { a, z })
    }

    /// Convenience constructor: `A = (a; tail)`, `Z = (z; tail)`.
    pub fn from_integers(a: &[i64], z: &[i64], tail: Tail) -> Result<Self, RiordanError> {
        Self::new(
            SequenceSpec::from_integers(a, tail)?,
            SequenceSpec::from_integers(z, tail)?,
        )
    }

    /// `A = Z`.
    pub fn consistent(a: SequenceSpec) -> Result<Self, RiordanError> {
        Self::new(a.clone(), a)
    }

    /// `Z = (a_1, a_2, ...)`.
    pub fn quasi_consistent(a: SequenceSpec) -> Result<Self, RiordanError> {
        let z = a.shifted();
        Self::new(a, z)
    }

    pub fn a_seq(&self) -> &SequenceSpec {
        &self.a
    }

    pub fn z_seq(&self) -> &SequenceSpec {
        &self.z
    }
}

impl fmt::Display for RiordanSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z={} A={}", self.z, self.a)
    }
}

/// Rows `0..n_rows` of the array by
/// `r_{n+1,0} = sum_j z_j r_{n,j}` and `r_{n+1,k+1} = sum_j a_j r_{n,k+j}`.
/// The sums stop at the edge of the triangle.
pub fn build_triangle(spec: &RiordanSpec, n_rows: usize) -> Result<Triangle, RiordanError> {
    if n_rows == 0 {
        return Err(RiordanError::NoRows);
    }
    let a = spec.a.terms(n_rows);
    let z = spec.z.terms(n_rows);
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(n_rows);
    rows.push(vec![Scalar::one()]);
    for n in 0..n_rows - 1 {
        let prev = &rows[n];
        let mut next = Vec::with_capacity(n + 2);
        next.push(dot(&z, prev));
        for k in 0..=n {
            next.push(dot(&a, &prev[k..]));
        }
        rows.push(next);
    }
    Ok(Triangle { rows })
}

fn dot(coeffs: &[Scalar], values: &[Scalar]) -> Scalar {
    coeffs
        .iter()
        .zip(values)
        .filter(|(c, v)| !c.is_zero() && !v.is_zero())
        .fold(Scalar::zero(), |acc, (c, v)| acc + c * v)
}

/// `n`x`n` window of the coefficient matrix: column 0 holds `z_i`, the
/// remaining columns the Toeplitz matrix of the A-sequence shifted right.
pub fn coefficient_matrix(spec: &RiordanSpec, n: usize) -> Matrix {
    Matrix::from_fn(n, n, |i, j| match j {
        0 => spec.z.term(i),
        _ if i + 1 >= j => spec.a.term(i + 1 - j),
        _ => Scalar::zero(),
    })
}

/// The four nonnegative numbers of Aigner's recursive matrix `R(a,b;s,t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecursiveMatrixParams {
    pub a: Scalar,
    pub b: Scalar,
    pub s: Scalar,
    pub t: Scalar,
}

impl RecursiveMatrixParams {
    pub fn new(a: Scalar, b: Scalar, s: Scalar, t: Scalar) -> Result<Self, RiordanError> {
        for (name, v) in [("a", &a), ("b", &b), ("s", &s), ("t", &t)] {
            if v.is_negative() {
                return Err(RiordanError::NegativeParameter { name });
            }
        }
        Ok(RecursiveMatrixParams { a, b, s, t })
    }

    pub fn from_integers(a: i64, b: i64, s: i64, t: i64) -> Result<Self, RiordanError> {
        Self::new(exact::int(a), exact::int(b), exact::int(s), exact::int(t))
    }

    /// `Z = (a, b, 0, ...)`, `A = (1, s, t, 0, ...)`.
    pub fn to_spec(&self) -> RiordanSpec {
        let z = SequenceSpec::new(vec![self.a.clone(), self.b.clone()], Tail::Zero)
            .expect("parameters are nonnegative");
        let a = SequenceSpec::new(
            vec![Scalar::one(), self.s.clone(), self.t.clone()],
            Tail::Zero,
        )
        .expect("parameters are nonnegative");
        RiordanSpec::new(a, z).expect("a_0 = 1")
    }
}

impl fmt::Display for RecursiveMatrixParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "R({},{};{},{})",
            exact::render(&self.a),
            exact::render(&self.b),
            exact::render(&self.s),
            exact::render(&self.t)
        )
    }
}

/// `R(a,b;s,t)` by its own three-term recurrence
/// `r_{n+1,0} = a r_{n,0} + b r_{n,1}`,
/// `r_{n+1,k} = r_{n,k-1} + s r_{n,k} + t r_{n,k+1}`.
pub fn build_recursive_matrix(
    p: &RecursiveMatrixParams,
    n_rows: usize,
) -> Result<Triangle, RiordanError> {
    if n_rows == 0 {
        return Err(RiordanError::NoRows);
    }
    let mut rows: Vec<Vec<Scalar>> = vec![vec![Scalar::one()]];
    for n in 0..n_rows - 1 {
        let prev = &rows[n];
        let at = |k: usize| prev.get(k).cloned().unwrap_or_else(Scalar::zero);
        let mut next = Vec::with_capacity(n + 2);
        next.push(&p.a * at(0) + &p.b * at(1));
        for k in 1..=n + 1 {
            next.push(at(k - 1) + &p.s * at(k) + &p.t * at(k + 1));
        }
        rows.push(next);
    }
    Ok(Triangle { rows })
}

/// `C_0, ..., C_{count-1}` of `(a,b;s,t)`: column 0 of the recursive matrix.
pub fn catalan_like_numbers(
    p: &RecursiveMatrixParams,
    count: usize,
) -> Result<Vec<Scalar>, RiordanError> {
    Ok(build_recursive_matrix(p, count)?.column(0))
}

/// Truncated `(g(x), f(x))` with `g(0) = 1` and `f(0) != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesPair {
    g: Vec<Scalar>,
    f: Vec<Scalar>,
}

impl SeriesPair {
    pub fn new(g: Vec<Scalar>, f: Vec<Scalar>) -> Result<Self, RiordanError> {
        if !g.first().is_some_and(One::is_one) {
            return Err(RiordanError::ImproperSeries("g(0) must be 1"));
        }
        if f.first().is_none_or(Zero::is_zero) {
            return Err(RiordanError::ImproperSeries("f(0) must be nonzero"));
        }
        Ok(SeriesPair { g, f })
    }

    pub fn from_integers(g: &[i64], f: &[i64]) -> Result<Self, RiordanError> {
        Self::new(exact::ints(g), exact::ints(f))
    }

    /// Number of trusted coefficients.
    pub fn order(&self) -> usize {
        self.g.len().min(self.f.len())
    }
}

fn truncated_product(x: &[Scalar], y: &[Scalar], len: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); len];
    for (i, a) in x.iter().enumerate().take(len) {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.iter().enumerate().take(len - i) {
            out[i + j] += a * b;
        }
    }
    out
}

/// Entry `(n,k)` is the coefficient of `x^n` in `x^k f(x)^k g(x)`.
pub fn triangle_from_gf(sp: &SeriesPair, n_rows: usize) -> Result<Triangle, RiordanError> {
    if n_rows == 0 {
        return Err(RiordanError::NoRows);
    }
    if sp.order() < n_rows {
        return Err(RiordanError::SeriesTooShort {
            len: sp.order(),
            needed: n_rows,
        });
    }
    let mut rows: Vec<Vec<Scalar>> = (0..n_rows).map(|n| Vec::with_capacity(n + 1)).collect();
    // column generating function divided by x^k
    let mut column = sp.g[..n_rows].to_vec();
    for k in 0..n_rows {
        for n in k..n_rows {
            rows[n].push(column[n - k].clone());
        }
        let remaining = n_rows - k - 1;
        column = truncated_product(&column, &sp.f, remaining);
    }
    Triangle::from_rows(rows)
}

/// Leading terms of the Z- and A-sequences recovered from a finite triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AzPrefixes {
    pub z: Vec<Scalar>,
    pub a: Vec<Scalar>,
}

/// Solves the triangular systems of the A/Z recurrence for
/// `z_0..z_m` and `a_0..a_m`, `m = n_rows - 2`, then checks every entry of
/// the triangle against the recovered prefixes.
pub fn extract_az(t: &Triangle) -> Result<AzPrefixes, RiordanError> {
    let n_rows = t.n_rows();
    if n_rows < 3 {
        return Err(RiordanError::TooFewRows(n_rows));
    }
    if let Some(n) = (0..n_rows).find(|&n| t.rows[n][n].is_zero()) {
        return Err(RiordanError::Singular(n));
    }
    let m = n_rows - 2;
    let mut z: Vec<Scalar> = Vec::with_capacity(m + 1);
    let mut a: Vec<Scalar> = Vec::with_capacity(m + 1);
    for j in 0..=m {
        let row = &t.rows[j];
        let z_known = dot(&z, row);
        let a_known = dot(&a, row);
        z.push((&t.rows[j + 1][0] - z_known) / &row[j]);
        a.push((&t.rows[j + 1][1] - a_known) / &row[j]);
    }
    for n in 0..n_rows - 1 {
        let prev = &t.rows[n];
        if dot(&z, prev) != t.rows[n + 1][0] {
            return Err(RiordanError::NotRiordan { n: n + 1, k: 0 });
        }
        for k in 0..=n {
            if dot(&a, &prev[k..]) != t.rows[n + 1][k + 1] {
                return Err(RiordanError::NotRiordan { n: n + 1, k: k + 1 });
            }
        }
    }
    Ok(AzPrefixes { z, a })
}

/// The classical triangles with simple A- and Z-sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedTriangle {
    Pascal,
    Catalan,
    Motzkin,
    Ballot,
    SchroderLarge,
    SchroderLittle,
}

impl NamedTriangle {
    pub const ALL: [NamedTriangle; 6] = [
        NamedTriangle::Pascal,
        NamedTriangle::Catalan,
        NamedTriangle::Motzkin,
        NamedTriangle::Ballot,
        NamedTriangle::SchroderLarge,
        NamedTriangle::SchroderLittle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedTriangle::Pascal => "pascal",
            NamedTriangle::Catalan => "catalan",
            NamedTriangle::Motzkin => "motzkin",
            NamedTriangle::Ballot => "ballot",
            NamedTriangle::SchroderLarge => "schroder-large",
            NamedTriangle::SchroderLittle => "schroder-little",
        }
    }

    pub fn spec(self) -> RiordanSpec {
        use Tail::{RepeatLast, Zero};
        let (z, z_tail, a, a_tail): (&[i64], Tail, &[i64], Tail) = match self {
            NamedTriangle::Pascal => (&[1], Zero, &[1, 1], Zero),
            NamedTriangle::Catalan => (&[2, 1], Zero, &[1, 2, 1], Zero),
            NamedTriangle::Motzkin => (&[1, 1], Zero, &[1, 1, 1], Zero),
            NamedTriangle::Ballot => (&[1], RepeatLast, &[1], RepeatLast),
            NamedTriangle::SchroderLarge => (&[2], RepeatLast, &[1, 2], RepeatLast),
            NamedTriangle::SchroderLittle => (&[1, 2], RepeatLast, &[1, 2], RepeatLast),
        };
        RiordanSpec::new(
            SequenceSpec::from_integers(a, a_tail).expect("nonnegative"),
            SequenceSpec::from_integers(z, z_tail).expect("nonnegative"),
        )
        .expect("a_0 = 1")
    }
}

impl FromStr for NamedTriangle {
    type Err = RiordanError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace(['_', ' '], "-");
        let found = match key.as_str() {
            "pascal" => NamedTriangle::Pascal,
            "catalan" => NamedTriangle::Catalan,
            "motzkin" => NamedTriangle::Motzkin,
            "ballot" => NamedTriangle::Ballot,
            "schroder-large" | "large-schroder" => NamedTriangle::SchroderLarge,
            "schroder-little" | "little-schroder" => NamedTriangle::SchroderLittle,
            _ => return Err(RiordanError::UnknownName(s.to_string())),
        };
        Ok(found)
    }
}

impl fmt::Display for NamedTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A/Z specification of a named triangle.
pub fn named_triangle(name: &str) -> Result<RiordanSpec, RiordanError> {
    Ok(name.parse::<NamedTriangle>()?.spec())
}
