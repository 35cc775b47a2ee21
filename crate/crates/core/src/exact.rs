//! Exact rational scalars, dense matrices, fraction-free determinants and
//! Sturm-chain real-root counting.
//!
//! Everything in this crate is computed over `Q` with arbitrary precision;
//! there is no floating point anywhere on the decision paths.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Scalar = BigRational;

/// Shorthand for an integral [`Scalar`].
pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

/// Converts a slice of machine integers into scalars.
pub fn ints(vs: &[i64]) -> Vec<Scalar> {
    vs.iter().copied().map(int).collect()
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_scalar(text: &str) -> Result<Scalar, ExactError> {
    let text = text.trim();
    let value: Scalar = text
        .parse()
        .map_err(|_| ExactError::Parse(text.to_string()))?;
    Ok(value)
}

/// Renders a scalar as an integer when integral, `p/q` otherwise.
pub fn render(value: &Scalar) -> String {
    value.to_string()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("rows have unequal lengths")]
    Ragged,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid minor selection: {0}")]
    Selection(String),
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("cannot parse {0:?} as a rational number")]
    Parse(String),
}

/// Dense row-major matrix over [`Scalar`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, ExactError> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n_cols) {
            return Err(ExactError::Ragged);
        }
        Ok(Matrix {
            rows: n_rows,
            cols: n_cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix from integer rows; panics on ragged input.
    pub fn from_integers<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        Self::from_rows(rows.iter().map(|r| ints(r.as_ref())).collect())
            .expect("integer rows must be rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, ExactError> {
        if self.cols != other.rows {
            return Err(ExactError::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols)
                .filter(|&k| !self.get(i, k).is_zero())
                .map(|k| self.get(i, k) * other.get(k, j))
                .fold(Scalar::zero(), |acc, x| acc + x)
        }))
    }

    /// Leading principal `n`x`n` block (clamped to the matrix size).
    pub fn leading(&self, n: usize) -> Matrix {
        let r = n.min(self.rows);
        let c = n.min(self.cols);
        Matrix::from_fn(r, c, |i, j| self.get(i, j).clone())
    }

    fn select(&self, rowset: &[usize], colset: &[usize]) -> Matrix {
        Matrix::from_fn(rowset.len(), colset.len(), |i, j| {
            self.get(rowset[i], colset[j]).clone()
        })
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        self.get(i, j)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(render).collect();
            writeln!(f, "[{}]", line.join(", "))?;
        }
        Ok(())
    }
}

/// Integer image of a rational matrix: row `i` multiplied by the lcm of its
/// denominators. Every minor of the result is a positive multiple of the
/// corresponding minor of the input, so signs are preserved.
#[derive(Clone, Debug)]
pub(crate) struct IntegerImage {
    pub grid: Vec<Vec<BigInt>>,
    pub row_scale: Vec<BigInt>,
    small: Option<Vec<Vec<i64>>>,
}

impl IntegerImage {
    pub fn of(m: &Matrix) -> Self {
        let mut grid: Vec<Vec<BigInt>> = Vec::with_capacity(m.rows);
        let mut row_scale = Vec::with_capacity(m.rows);
        for i in 0..m.rows {
            let l = m
                .row(i)
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            grid.push(
                m.row(i)
                    .iter()
                    .map(|x| x.numer() * (&l / x.denom()))
                    .collect(),
            );
            row_scale.push(l);
        }
        let small = grid
            .iter()
            .map(|r| {
                r.iter()
                    .map(ToPrimitive::to_i64)
                    .collect::<Option<Vec<_>>>()
            })
            .collect();
        IntegerImage {
            grid,
            row_scale,
            small,
        }
    }

    /// Determinant of the submatrix selected by `rowset` x `colset`.
    pub fn minor(&self, rowset: &[usize], colset: &[usize]) -> BigInt {
        if let Some(small) = &self.small {
            let sub: Vec<Vec<i128>> = rowset
                .iter()
                .map(|&i| colset.iter().map(|&j| i128::from(small[i][j])).collect())
                .collect();
            if sub.is_empty() {
                return BigInt::one();
            }
            if let Some(d) = bareiss_i128(sub) {
                return BigInt::from(d);
            }
        }
        let sub: Vec<Vec<BigInt>> = rowset
            .iter()
            .map(|&i| colset.iter().map(|&j| self.grid[i][j].clone()).collect())
            .collect();
        integer_determinant(sub)
    }
}

/// Exact determinant via fraction-free (Bareiss) elimination after clearing
/// row denominators.
pub fn determinant(m: &Matrix) -> Result<Scalar, ExactError> {
    if !m.is_square() {
        return Err(ExactError::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let image = IntegerImage::of(m);
    let scale = image.row_scale.iter().fold(BigInt::one(), |acc, l| acc * l);
    Ok(Scalar::new(integer_determinant(image.grid), scale))
}

/// Determinant of the submatrix with the given (strictly increasing) row and
/// column index sets.
pub fn minor(m: &Matrix, rowset: &[usize], colset: &[usize]) -> Result<Scalar, ExactError> {
    validate_selection(rowset, m.rows, "row")?;
    validate_selection(colset, m.cols, "column")?;
    if rowset.len() != colset.len() {
        return Err(ExactError::Selection(format!(
            "{} rows but {} columns",
            rowset.len(),
            colset.len()
        )));
    }
    determinant(&m.select(rowset, colset))
}

fn validate_selection(set: &[usize], bound: usize, what: &str) -> Result<(), ExactError> {
    if let Some(&bad) = set.iter().find(|&&i| i >= bound) {
        return Err(ExactError::Selection(format!(
            "{what} index {bad} out of range (size {bound})"
        )));
    }
    if set.windows(2).any(|w| w[0] >= w[1]) {
        return Err(ExactError::Selection(format!(
            "{what} indices must be strictly increasing"
        )));
    }
    Ok(())
}

/// Bareiss elimination over `Z`. Tries a checked `i128` pass first and falls
/// back to big integers on overflow.
pub(crate) fn integer_determinant(grid: Vec<Vec<BigInt>>) -> BigInt {
    let n = grid.len();
    if n == 0 {
        return BigInt::one();
    }
    let small: Option<Vec<Vec<i128>>> = grid
        .iter()
        .map(|r| r.iter().map(|x| x.to_i64().map(i128::from)).collect())
        .collect();
    if let Some(small) = small {
        if let Some(d) = bareiss_i128(small) {
            return BigInt::from(d);
        }
    }
    bareiss_big(grid)
}

fn bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<i128> {
    let n = a.len();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return Some(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let lhs = a[i][j].checked_mul(a[k][k])?;
                let rhs = a[i][k].checked_mul(a[k][j])?;
                a[i][j] = lhs.checked_sub(rhs)? / prev;
            }
        }
        prev = a[k][k];
    }
    sign.checked_mul(a[n - 1][n - 1])
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Dense univariate polynomial; `coeffs[i]` multiplies `x^i`. Trailing zeros
/// are always trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(ints(coeffs))
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial), ExactError> {
        let d_deg = divisor.degree().ok_or(ExactError::ZeroPolynomial)?;
        let lead = &divisor.coeffs[d_deg];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Scalar::zero(); self.coeffs.len().saturating_sub(d_deg)];
        while rem.len() > d_deg && !rem.is_empty() {
            let shift = rem.len() - 1 - d_deg;
            let factor = rem[rem.len() - 1].clone() / lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &factor * c;
            }
            quot[shift] = factor;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Monic greatest common divisor. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("divisor is nonzero");
            a = b;
            b = r.primitive();
        }
        a.monic()
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            Some(l) => {
                let l = l.clone();
                Polynomial::new(self.coeffs.iter().map(|c| c / &l).collect())
            }
            None => Polynomial::zero(),
        }
    }

    /// Positive rational multiple with coprime integer coefficients.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let denom_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let numers: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        let content = numers.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
        Polynomial::new(
            numers
                .into_iter()
                .map(|n| Scalar::from_integer(n / &content))
                .collect(),
        )
    }

    /// `p / gcd(p, p')`: same roots, each with multiplicity one.
    pub fn squarefree_part(&self) -> Polynomial {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        let (q, _) = self
            .div_rem(&g)
            .expect("gcd of a nonzero polynomial is nonzero");
        q.primitive()
    }

    /// Number of leading zero coefficients, i.e. the multiplicity of the root 0.
    pub fn low_order_zeros(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides out `x^m` where `m` is [`Self::low_order_zeros`].
    pub fn without_root_at_zero(&self) -> Polynomial {
        Polynomial::new(self.coeffs[self.low_order_zeros()..].to_vec())
    }

    /// Sturm chain `p, p', -rem(p, p'), ...`, each term scaled to a primitive
    /// integer polynomial by a positive factor.
    pub fn sturm_chain(&self) -> Vec<Polynomial> {
        let mut chain = vec![self.primitive()];
        let d = self.derivative().primitive();
        if d.is_zero() {
            return chain;
        }
        chain.push(d);
        loop {
            let n = chain.len();
            let (_, r) = chain[n - 2]
                .div_rem(&chain[n - 1])
                .expect("chain terms are nonzero");
            if r.is_zero() {
                break;
            }
            let neg = Polynomial::new(r.coeffs.iter().map(|c| -c).collect());
            chain.push(neg.primitive());
        }
        chain
    }
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn signum(x: &Scalar) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Counts the distinct real roots of a nonzero polynomial with a Sturm chain
/// on its squarefree part, evaluated at `-inf` and `+inf`.
pub fn count_distinct_real_roots(p: &Polynomial) -> Result<usize, ExactError> {
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    let chain = p.squarefree_part().sturm_chain();
    let at_pos_inf = chain.iter().map(|q| signum(q.leading().expect("nonzero")));
    let at_neg_inf = chain.iter().map(|q| {
        let s = signum(q.leading().expect("nonzero"));
        if q.degree().expect("nonzero") % 2 == 1 {
            -s
        } else {
            s
        }
    });
    Ok(sign_changes(at_neg_inf) - sign_changes(at_pos_inf))
}

/// True when every complex root of `p` is real (multiplicities ignored).
pub fn is_real_rooted(p: &Polynomial) -> Result<bool, ExactError> {
    let sq = p.squarefree_part();
    let degree = sq.degree().ok_or(ExactError::ZeroPolynomial)?;
    Ok(count_distinct_real_roots(&sq)? == degree)
}
