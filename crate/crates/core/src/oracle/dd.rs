//! Incremental double description: facets of `vcone(B)` as the extreme
//! rays of `{ n : B^T n >= 0 }`.

use std::collections::{BTreeSet, HashSet};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{solve_square, RatMatrix, RatVector};

struct DdRay {
    dir: RatVector,
    /// Indices of inserted constraints that are tight at `dir`.
    tight: BTreeSet<usize>,
}

/// Canonical facet normals of the cone spanned by the columns of `rays`.
/// Columns are inserted as constraints in stored order.
pub fn double_description(rays: &RatMatrix) -> Result<BTreeSet<RatVector>> {
    let dim = rays.nrows();
    let cols = rays.columns();

    let mut canon = HashSet::new();
    for c in &cols {
        let Ok(n) = c.normalize_ray() else { continue };
        if canon.contains(&-&n) {
            return Err(Error::NonPointedInput(format!("opposite rays {n} and {}", -&n)));
        }
        canon.insert(n);
    }

    // First `dim` independent columns, in column order, seed the cone.
    let mut basis: Vec<usize> = Vec::new();
    for (j, c) in cols.iter().enumerate() {
        let mut trial: Vec<RatVector> = basis.iter().map(|&b| cols[b].clone()).collect();
        trial.push(c.clone());
        if RatMatrix::from_rows(trial).map(|m| m.rank()).unwrap_or(0) == basis.len() + 1 {
            basis.push(j);
            if basis.len() == dim {
                break;
            }
        }
    }
    if basis.len() < dim {
        return Err(Error::NonPointedInput(format!(
            "rays span only {} of {dim} dimensions",
            basis.len()
        )));
    }

    let h = RatMatrix::from_rows(basis.iter().map(|&b| cols[b].clone()).collect())?;
    let mut current: Vec<DdRay> = (0..dim)
        .map(|i| {
            let dir = solve_square(&h, &RatVector::unit(dim, i)).expect("basis is independent");
            let tight = basis.iter().enumerate().filter(|&(r, _)| r != i).map(|(_, &b)| b).collect();
            DdRay { dir: dir.normalize_ray().expect("nonzero"), tight }
        })
        .collect();

    for (j, h) in cols.iter().enumerate() {
        if basis.contains(&j) {
            continue;
        }
        let values: Vec<_> = current.iter().map(|r| h.dot(&r.dir).expect("same dim")).collect();
        let mut next: Vec<DdRay> = Vec::new();
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for (idx, s) in values.iter().enumerate() {
            if s.is_negative() {
                neg.push(idx);
            } else if s.is_positive() {
                pos.push(idx);
            }
        }
        for &p in &pos {
            for &q in &neg {
                let common: BTreeSet<usize> =
                    current[p].tight.intersection(&current[q].tight).copied().collect();
                if common.len() + 2 < dim || !adjacent(&cols, &common, dim) {
                    continue;
                }
                let sp = &values[p];
                let sq = &values[q];
                let dir = current[q].dir.scale(sp).add_scaled(&-sq.clone(), &current[p].dir);
                let mut tight = common;
                tight.insert(j);
                next.push(DdRay { dir: dir.normalize_ray().expect("adjacent rays are independent"), tight });
            }
        }
        for (idx, r) in current.into_iter().enumerate() {
            let s = &values[idx];
            if s.is_zero() {
                let mut tight = r.tight;
                tight.insert(j);
                next.push(DdRay { dir: r.dir, tight });
            } else if s.is_positive() {
                next.push(r);
            }
        }
        current = next;
    }
    Ok(current.into_iter().map(|r| r.dir).collect())
}

/// Two rays are adjacent when the constraints tight at both have rank `dim - 2`.
fn adjacent(cols: &[RatVector], common: &BTreeSet<usize>, dim: usize) -> bool {
    if dim < 2 {
        return false;
    }
    if common.is_empty() {
        return dim == 2;
    }
    let m = RatMatrix::from_rows(common.iter().map(|&c| cols[c].clone()).collect()).expect("same dim");
    m.rank() == dim - 2
}
