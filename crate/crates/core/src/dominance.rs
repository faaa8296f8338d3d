//! Cone dominance between outcome vectors and non-dominated filtering.
//!
//! `y1` weakly dominates `y2` when `y2 - y1` lies in the cone, i.e.
//! `A (y2 - y1) >= 0` for the facet matrix `A`.

use rayon::prelude::*;

use crate::cone::ConeHRep;
use crate::error::{Error, Result};
use crate::exactnum::RatVector;

/// Finite outcome set with a stable id per point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<RatVector>,
    ids: Vec<usize>,
}

impl PointSet {
    /// Points get ids `0..n` in input order.
    pub fn new(points: Vec<RatVector>) -> Result<PointSet> {
        let ids = (0..points.len()).collect();
        Self::with_ids(points, ids)
    }

    pub fn with_ids(points: Vec<RatVector>, ids: Vec<usize>) -> Result<PointSet> {
        if ids.len() != points.len() {
            return Err(Error::DimensionMismatch { expected: points.len(), found: ids.len() });
        }
        if let Some(first) = points.first() {
            if let Some(bad) = points.iter().find(|p| p.dim() != first.dim()) {
                return Err(Error::DimensionMismatch { expected: first.dim(), found: bad.dim() });
            }
        }
        Ok(PointSet { points, ids })
    }

    pub fn points(&self) -> &[RatVector] {
        &self.points
    }

    pub fn ids(&self) -> &[usize] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> Option<usize> {
        self.points.first().map(RatVector::dim)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &RatVector)> {
        self.ids.iter().copied().zip(&self.points)
    }

    /// Points sorted, for multiset comparisons.
    pub fn sorted_points(&self) -> Vec<RatVector> {
        let mut p = self.points.clone();
        p.sort();
        p
    }
}

fn check_dims(cone: &ConeHRep, y: &RatVector) -> Result<()> {
    if y.dim() != cone.dim() {
        return Err(Error::DimensionMismatch { expected: cone.dim(), found: y.dim() });
    }
    Ok(())
}

pub fn weakly_dominates(cone: &ConeHRep, y1: &RatVector, y2: &RatVector) -> Result<bool> {
    check_dims(cone, y1)?;
    check_dims(cone, y2)?;
    cone.contains(&(y2 - y1))
}

/// Strict dominance; on a pointed cone this is weak dominance plus `y1 != y2`.
pub fn dominates(cone: &ConeHRep, y1: &RatVector, y2: &RatVector) -> Result<bool> {
    if !cone.is_pointed() {
        return Err(Error::NotPointed(Vec::new()));
    }
    Ok(y1 != y2 && weakly_dominates(cone, y1, y2)?)
}

/// Points not strictly dominated by any other point. Equal copies never
/// dominate each other, so duplicates survive together.
pub fn filter_nondominated(cone: &ConeHRep, set: &PointSet) -> Result<PointSet> {
    if set.is_empty() {
        return Err(Error::EmptyInput);
    }
    if !cone.is_pointed() {
        return Err(Error::NotPointed(Vec::new()));
    }
    check_dims(cone, &set.points[0])?;
    // A y2 - A y1 >= 0 is checked on precomputed images.
    let images: Vec<RatVector> =
        set.points.par_iter().map(|p| cone.matrix().mat_vec(p)).collect::<Result<_>>()?;
    let keep: Vec<bool> = (0..set.len())
        .into_par_iter()
        .map(|i| {
            !(0..set.len()).any(|j| {
                j != i && set.points[j] != set.points[i] && images[j].le_componentwise(&images[i])
            })
        })
        .collect();
    let (points, ids) = set
        .points
        .iter()
        .zip(&set.ids)
        .zip(&keep)
        .filter(|(_, &k)| k)
        .map(|((p, id), _)| (p.clone(), *id))
        .unzip();
    Ok(PointSet { points, ids })
}

/// Maps every point through the facet matrix; ids are preserved.
pub fn pareto_transform(cone: &ConeHRep, set: &PointSet) -> Result<PointSet> {
    let rank = cone.matrix().rank();
    if rank != cone.dim() {
        return Err(Error::RankDeficient { rank, expected: cone.dim() });
    }
    let points = set.points.iter().map(|p| cone.matrix().mat_vec(p)).collect::<Result<Vec<_>>>()?;
    Ok(PointSet { points, ids: set.ids.clone() })
}
