//! Exact rational scalars, vectors and dense matrices.
//!
//! Everything in the crate that touches cone geometry or dominance goes
//! through these types; there is no floating point path.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Shorthand for a small rational `num / den`. Panics on `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses a plain decimal literal (`"0.4"`, `"-1.25"`, `"3"`, `".5"`) exactly.
pub fn rat_from_decimal(text: &str) -> Result<Rational> {
    let err = || Error::Parse(text.to_string());
    let s = text.trim();
    let (negative, body) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    };
    let (whole, frac) = match body.split_once('.') {
        Some((w, f)) => (w, f),
        None => (body, ""),
    };
    if whole.is_empty() && frac.is_empty() {
        return Err(err());
    }
    if !whole.bytes().all(|b| b.is_ascii_digit()) || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err());
    }
    let digits = format!("{whole}{frac}");
    let numer: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().map_err(|_| err())?
    };
    let denom = num_traits::pow(BigInt::from(10u32), frac.len());
    let value = Rational::new(numer, denom);
    Ok(if negative { -value } else { value })
}

/// Accepts a decimal literal or a fraction `p/q`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| Error::Parse(text.to_string()))?;
            let q: BigInt = q.trim().parse().map_err(|_| Error::Parse(text.to_string()))?;
            if q.is_zero() {
                return Err(Error::Parse(text.to_string()));
            }
            Ok(Rational::new(p, q))
        }
        None => rat_from_decimal(s),
    }
}

/// Renders a rational as a finite decimal when its denominator has only the
/// prime factors 2 and 5, otherwise as `p/q`.
pub fn to_decimal_string(value: &Rational) -> String {
    let mut den = value.denom().clone();
    let two = BigInt::from(2u32);
    let five = BigInt::from(5u32);
    let (mut twos, mut fives) = (0usize, 0usize);
    while den.is_even() {
        den /= &two;
        twos += 1;
    }
    while (&den % &five).is_zero() {
        den /= &five;
        fives += 1;
    }
    if !den.is_one() {
        return format!("{}/{}", value.numer(), value.denom());
    }
    let places = twos.max(fives);
    if places == 0 {
        return value.numer().to_string();
    }
    let scaled = value * Rational::from_integer(num_traits::pow(BigInt::from(10u32), places));
    let digits = scaled.to_integer().abs().to_string();
    let digits = format!("{:0>width$}", digits, width = places + 1);
    let (whole, frac) = digits.split_at(digits.len() - places);
    let sign = if value.is_negative() { "-" } else { "" };
    format!("{sign}{whole}.{frac}")
}

/// Dense rational vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RatVector(Vec<Rational>);

impl RatVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        RatVector(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        RatVector(vec![Rational::zero(); dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = Rational::one();
        v
    }

    pub fn from_ints(values: &[i64]) -> Self {
        RatVector(values.iter().map(|&x| int(x)).collect())
    }

    pub fn parse(parts: &[&str]) -> Result<Self> {
        parts.iter().map(|p| parse_rational(p)).collect::<Result<Vec<_>>>().map(RatVector)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    fn check_dim(&self, other: &RatVector) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(())
    }

    pub fn dot(&self, other: &RatVector) -> Result<Rational> {
        self.check_dim(other)?;
        Ok(self.0.iter().zip(&other.0).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
    }

    pub fn checked_add(&self, other: &RatVector) -> Result<RatVector> {
        self.check_dim(other)?;
        Ok(RatVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn checked_sub(&self, other: &RatVector) -> Result<RatVector> {
        self.check_dim(other)?;
        Ok(RatVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn scale(&self, factor: &Rational) -> RatVector {
        RatVector(self.0.iter().map(|a| a * factor).collect())
    }

    /// `self + factor * other`, dimensions assumed equal.
    pub fn add_scaled(&self, factor: &Rational, other: &RatVector) -> RatVector {
        debug_assert_eq!(self.dim(), other.dim());
        RatVector(self.0.iter().zip(&other.0).map(|(a, b)| a + factor * b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    /// Componentwise `self <= other`.
    pub fn le_componentwise(&self, other: &RatVector) -> bool {
        self.dim() == other.dim() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Canonical representative of the ray through `self`: scaled by a
    /// positive factor so the first nonzero entry is `1` or `-1`.
    pub fn normalize_ray(&self) -> Result<RatVector> {
        let lead = self.0.iter().find(|x| !x.is_zero()).ok_or(Error::ZeroVector)?;
        Ok(self.scale(&lead.abs().recip()))
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(to_decimal_string).collect()
    }
}

impl Index<usize> for RatVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl From<Vec<Rational>> for RatVector {
    fn from(v: Vec<Rational>) -> Self {
        RatVector(v)
    }
}

impl FromIterator<Rational> for RatVector {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        RatVector(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a RatVector {
    type Item = &'a Rational;
    type IntoIter = std::slice::Iter<'a, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl Add for &RatVector {
    type Output = RatVector;
    fn add(self, rhs: &RatVector) -> RatVector {
        self.checked_add(rhs).expect("vector dimensions differ")
    }
}

impl Sub for &RatVector {
    type Output = RatVector;
    fn sub(self, rhs: &RatVector) -> RatVector {
        self.checked_sub(rhs).expect("vector dimensions differ")
    }
}

impl Neg for &RatVector {
    type Output = RatVector;
    fn neg(self) -> RatVector {
        RatVector(self.0.iter().map(|x| -x).collect())
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Dense row-major rational matrix. A matrix with zero rows still records
/// its column count.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: Vec<RatVector>,
    cols: usize,
}

impl RatMatrix {
    pub fn from_rows(rows: Vec<RatVector>) -> Result<Self> {
        let cols = rows.first().map_or(0, RatVector::dim);
        if rows.iter().any(|r| r.dim() != cols) {
            return Err(Error::RaggedRows);
        }
        Ok(RatMatrix { rows, cols })
    }

    pub fn with_cols(rows: Vec<RatVector>, cols: usize) -> Result<Self> {
        if rows.iter().any(|r| r.dim() != cols) {
            return Err(Error::RaggedRows);
        }
        Ok(RatMatrix { rows, cols })
    }

    /// Builds a `dim x columns.len()` matrix from column vectors.
    pub fn from_columns(dim: usize, columns: &[RatVector]) -> Result<Self> {
        if columns.iter().any(|c| c.dim() != dim) {
            return Err(Error::RaggedRows);
        }
        let rows = (0..dim).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect();
        Ok(RatMatrix { rows, cols: columns.len() })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| RatVector::from_ints(r)).collect())
    }

    pub fn identity(n: usize) -> Self {
        RatMatrix { rows: (0..n).map(|i| RatVector::unit(n, i)).collect(), cols: n }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[RatVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &RatVector {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn column(&self, j: usize) -> RatVector {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn columns(&self) -> Vec<RatVector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> RatMatrix {
        RatMatrix { rows: self.columns(), cols: self.rows.len() }
    }

    pub fn mat_vec(&self, v: &RatVector) -> Result<RatVector> {
        if v.dim() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.dim() });
        }
        self.rows.iter().map(|r| r.dot(v)).collect::<Result<Vec<_>>>().map(RatVector)
    }

    pub fn mat_mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if other.nrows() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.nrows() });
        }
        let cols = other.columns();
        let rows = self
            .rows
            .iter()
            .map(|r| cols.iter().map(|c| r.dot(c).expect("checked")).collect())
            .collect();
        Ok(RatMatrix { rows, cols: other.ncols() })
    }

    /// Rank by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        row_echelon(self.rows.iter().map(|r| r.entries().to_vec()).collect(), self.cols).len()
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Reduces `rows` to echelon form and returns the pivot column of each
/// nonzero row.
pub(crate) fn row_echelon(mut rows: Vec<Vec<Rational>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = &rows[i][c] * &inv;
            for j in c..cols {
                let delta = &f * &rows[r][j];
                rows[i][j] -= delta;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Solves the square system `m x = b` exactly; `None` when `m` is singular.
pub fn solve_square(m: &RatMatrix, b: &RatVector) -> Option<RatVector> {
    let n = m.nrows();
    if m.ncols() != n || b.dim() != n {
        return None;
    }
    let mut aug: Vec<Vec<Rational>> = m
        .rows()
        .iter()
        .zip(b.iter())
        .map(|(r, bi)| {
            let mut row = r.entries().to_vec();
            row.push(bi.clone());
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !aug[i][c].is_zero())?;
        aug.swap(c, p);
        let inv = aug[c][c].recip();
        for j in c..=n {
            aug[c][j] = &aug[c][j] * &inv;
        }
        for i in 0..n {
            if i == c || aug[i][c].is_zero() {
                continue;
            }
            let f = aug[i][c].clone();
            for j in c..=n {
                let delta = &f * &aug[c][j];
                aug[i][j] -= delta;
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n].clone()).collect())
}
