//! Exact decision of `v in vcone(B)` by Fourier-Motzkin elimination.
//!
//! Every derived inequality carries the multipliers `y` of the equality rows
//! `B lambda = v` it came from. A contradiction `0 <= b < 0` then yields a
//! separating vector `y` with `B^T y >= 0` and `y . v < 0`; a consistent
//! system is solved by back substitution.

use std::collections::HashSet;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{RatMatrix, RatVector, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MembershipCertificate {
    /// `v = B lambda` with `lambda >= 0`.
    Feasible { coefficients: RatVector },
    /// `n . b_j >= 0` for every column and `n . v < 0`.
    Infeasible { witness: RatVector },
}

impl MembershipCertificate {
    pub fn is_feasible(&self) -> bool {
        matches!(self, MembershipCertificate::Feasible { .. })
    }

    /// Checks the certificate by direct substitution.
    pub fn verify(&self, rays: &RatMatrix, v: &RatVector) -> bool {
        match self {
            MembershipCertificate::Feasible { coefficients } => {
                coefficients.is_nonnegative()
                    && rays.mat_vec(coefficients).map(|bv| &bv == v).unwrap_or(false)
            }
            MembershipCertificate::Infeasible { witness } => {
                rays.transpose().mat_vec(witness).map(|r| r.is_nonnegative()).unwrap_or(false)
                    && witness.dot(v).map(|d| d.is_negative()).unwrap_or(false)
            }
        }
    }
}

/// `coeffs . lambda <= rhs`, obtained from the equality rows with multipliers `mult`.
#[derive(Clone, Debug)]
struct Row {
    coeffs: Vec<Rational>,
    rhs: Rational,
    mult: Vec<Rational>,
}

impl Row {
    fn combine(&self, a: &Rational, other: &Row, b: &Rational) -> Row {
        let mix = |x: &[Rational], y: &[Rational]| x.iter().zip(y).map(|(p, q)| a * p + b * q).collect();
        Row {
            coeffs: mix(&self.coeffs, &other.coeffs),
            rhs: a * &self.rhs + b * &other.rhs,
            mult: mix(&self.mult, &other.mult),
        }
    }

    fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Key identifying the inequality up to positive scaling.
    fn key(&self) -> Vec<Rational> {
        let mut all = self.coeffs.clone();
        all.push(self.rhs.clone());
        match all.iter().find(|x| !x.is_zero()) {
            Some(lead) => {
                let s = lead.abs().recip();
                all.iter().map(|x| x * &s).collect()
            }
            None => all,
        }
    }
}

/// Decides whether `v` is a nonnegative combination of the columns of `rays`.
pub fn ray_membership(rays: &RatMatrix, v: &RatVector) -> Result<MembershipCertificate> {
    let dim = rays.nrows();
    let m = rays.ncols();
    if v.dim() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: v.dim() });
    }
    let zero_mult = vec![Rational::zero(); dim];

    let mut equalities: Vec<Row> = (0..dim)
        .map(|k| Row {
            coeffs: rays.row(k).entries().to_vec(),
            rhs: v[k].clone(),
            mult: RatVector::unit(dim, k).into_entries(),
        })
        .collect();
    // -lambda_j <= 0
    let mut inequalities: Vec<Row> = (0..m)
        .map(|j| Row {
            coeffs: RatVector::unit(m, j).scale(&Rational::from_integer((-1).into())).into_entries(),
            rhs: Rational::zero(),
            mult: zero_mult.clone(),
        })
        .collect();

    // Gaussian elimination on the equalities.
    let mut pivots: Vec<(usize, Row)> = Vec::new();
    while let Some(eq) = equalities.pop() {
        let Some(p) = eq.coeffs.iter().position(|c| !c.is_zero()) else {
            if eq.rhs.is_zero() {
                continue;
            }
            let witness: RatVector = if eq.rhs.is_negative() {
                eq.mult.into()
            } else {
                eq.mult.iter().map(|x| -x).collect()
            };
            return Ok(MembershipCertificate::Infeasible { witness });
        };
        let inv = eq.coeffs[p].recip();
        let one = Rational::from_integer(1.into());
        let eq = eq.combine(&inv, &eq, &Rational::zero());
        let substitute = |row: &Row| {
            if row.coeffs[p].is_zero() {
                row.clone()
            } else {
                row.combine(&one, &eq, &-row.coeffs[p].clone())
            }
        };
        equalities = equalities.iter().map(substitute).collect();
        inequalities = inequalities.iter().map(substitute).collect();
        pivots.push((p, eq));
    }

    let pivot_vars: HashSet<usize> = pivots.iter().map(|(p, _)| *p).collect();
    let free: Vec<usize> = (0..m).filter(|j| !pivot_vars.contains(j)).collect();

    // Fourier-Motzkin over the free variables; keep each stage for back substitution.
    let mut stages: Vec<Vec<Row>> = Vec::with_capacity(free.len());
    let mut current = prune(inequalities);
    if let Some(w) = contradiction(&current) {
        return Ok(MembershipCertificate::Infeasible { witness: w });
    }
    for &x in &free {
        let (mut lower, mut upper, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for row in &current {
            if row.coeffs[x].is_positive() {
                upper.push(row);
            } else if row.coeffs[x].is_negative() {
                lower.push(row);
            } else {
                rest.push(row.clone());
            }
        }
        for up in &upper {
            for lo in &lower {
                let a = up.coeffs[x].recip();
                let b = (-lo.coeffs[x].clone()).recip();
                rest.push(up.combine(&a, lo, &b));
            }
        }
        stages.push(current);
        current = prune(rest);
        if let Some(w) = contradiction(&current) {
            return Ok(MembershipCertificate::Infeasible { witness: w });
        }
    }

    // Back substitution: free variables in reverse, then pivots in reverse.
    let mut lambda = vec![Rational::zero(); m];
    for (stage, &x) in stages.iter().zip(&free).rev() {
        let mut value: Option<Rational> = None;
        let mut upper: Option<Rational> = None;
        for row in stage {
            let c = &row.coeffs[x];
            if c.is_zero() {
                continue;
            }
            let rest = row
                .coeffs
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != x)
                .fold(row.rhs.clone(), |acc, (j, a)| acc - a * &lambda[j]);
            let bound = rest / c;
            if c.is_negative() {
                value = Some(value.map_or(bound.clone(), |v| v.max(bound)));
            } else {
                upper = Some(upper.map_or(bound.clone(), |u| u.min(bound)));
            }
        }
        lambda[x] = value.or(upper).unwrap_or_else(Rational::zero);
    }
    for (p, eq) in pivots.iter().rev() {
        let rest = eq
            .coeffs
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != *p)
            .fold(eq.rhs.clone(), |acc, (j, a)| acc - a * &lambda[j]);
        lambda[*p] = rest;
    }
    let cert = MembershipCertificate::Feasible { coefficients: lambda.into() };
    debug_assert!(cert.verify(rays, v));
    Ok(cert)
}

fn prune(rows: Vec<Row>) -> Vec<Row> {
    let mut seen = HashSet::new();
    rows.into_iter()
        .filter(|r| !(r.is_trivial() && !r.rhs.is_negative()))
        .filter(|r| seen.insert(r.key()))
        .collect()
}

fn contradiction(rows: &[Row]) -> Option<RatVector> {
    rows.iter().find(|r| r.is_trivial() && r.rhs.is_negative()).map(|r| r.mult.clone().into())
}

/// Convenience wrapper: `true` iff `v` lies in the cone spanned by the columns.
pub fn in_cone(rays: &RatMatrix, v: &RatVector) -> Result<bool> {
    Ok(ray_membership(rays, v)?.is_feasible())
}
