//! Construction of the weighted ordinal ordering cone.
//!
//! For weights `(omega, gamma)` the cone is generated by the columns
//! `u^i = -omega_i e_i + e_{i+1}` and `g^i = e_i - gamma_i e_{i+1}`, and its
//! facets are indexed by selections `r^i in {u^i, g^i}`. The normal of the
//! facet through a selection has the product form computed by
//! [`facet_normal`].

use std::collections::HashSet;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{RatMatrix, RatVector, Rational};
use crate::oracle::membership::ray_membership;

/// Marginal preference weights for `K` ordered categories.
///
/// Always lies in the closed feasible set (`omega, gamma >= 0`,
/// `omega_i * gamma_i <= 1`); use [`Weights::class`] to see whether the cone
/// is pointed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weights {
    omega: RatVector,
    gamma: RatVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightClass {
    /// `omega_i * gamma_i < 1` for every `i`.
    Pointed,
    /// Indices (1-based) with `omega_i * gamma_i = 1`.
    Degenerate(Vec<usize>),
}

/// Validates weights for `k` categories. `omega` and `gamma` must have
/// `k - 1` entries.
pub fn classify_weights(k: usize, omega: RatVector, gamma: RatVector) -> Result<Weights> {
    if k == 0 {
        return Err(Error::NoCategories);
    }
    for v in [&omega, &gamma] {
        if v.dim() != k - 1 {
            return Err(Error::DimensionMismatch { expected: k - 1, found: v.dim() });
        }
    }
    for i in 0..k - 1 {
        if omega[i].is_negative() || gamma[i].is_negative() {
            return Err(Error::NegativeWeight(i + 1));
        }
        if &omega[i] * &gamma[i] > Rational::one() {
            return Err(Error::ProductExceedsOne(i + 1));
        }
    }
    Ok(Weights { omega, gamma })
}

impl Weights {
    /// Same `omega` and `gamma` for every consecutive pair.
    pub fn uniform(k: usize, omega: Rational, gamma: Rational) -> Result<Weights> {
        let n = k.saturating_sub(1);
        classify_weights(k, RatVector::new(vec![omega; n]), RatVector::new(vec![gamma; n]))
    }

    pub fn standard_ordinal(k: usize) -> Weights {
        Self::uniform(k, Rational::one(), Rational::zero()).expect("standard ordinal weights are valid")
    }

    pub fn pareto(k: usize) -> Weights {
        Self::uniform(k, Rational::zero(), Rational::zero()).expect("zero weights are valid")
    }

    pub fn k(&self) -> usize {
        self.omega.dim() + 1
    }

    pub fn omega(&self) -> &RatVector {
        &self.omega
    }

    pub fn gamma(&self) -> &RatVector {
        &self.gamma
    }

    pub fn degenerate_indices(&self) -> Vec<usize> {
        (0..self.k() - 1)
            .filter(|&i| (&self.omega[i] * &self.gamma[i]).is_one())
            .map(|i| i + 1)
            .collect()
    }

    pub fn class(&self) -> WeightClass {
        let d = self.degenerate_indices();
        if d.is_empty() {
            WeightClass::Pointed
        } else {
            WeightClass::Degenerate(d)
        }
    }

    pub fn is_pointed(&self) -> bool {
        self.class() == WeightClass::Pointed
    }

    pub(crate) fn require_pointed(&self) -> Result<()> {
        match self.class() {
            WeightClass::Pointed => Ok(()),
            WeightClass::Degenerate(d) => Err(Error::NotPointed(d)),
        }
    }

    /// Spanning vector `u^i` (1-based `i`).
    pub fn u_ray(&self, i: usize) -> RatVector {
        let mut v = RatVector::zeros(self.k()).into_entries();
        v[i - 1] = -self.omega[i - 1].clone();
        v[i] = Rational::one();
        RatVector::new(v)
    }

    /// Spanning vector `g^i` (1-based `i`).
    pub fn g_ray(&self, i: usize) -> RatVector {
        let mut v = RatVector::zeros(self.k()).into_entries();
        v[i - 1] = Rational::one();
        v[i] = -self.gamma[i - 1].clone();
        RatVector::new(v)
    }
}

impl fmt::Display for Weights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K={} omega={} gamma={}", self.k(), self.omega, self.gamma)
    }
}

/// Which of the two spanning vectors of a consecutive pair is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Generator {
    U,
    G,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::U => "u",
            Generator::G => "g",
        })
    }
}

/// Spanning-ray description: columns `u^1..u^{K-1}, g^1..g^{K-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeVRep {
    rays: RatMatrix,
    extreme: Vec<bool>,
}

impl ConeVRep {
    /// `K x 2(K-1)` matrix whose columns are the spanning vectors.
    pub fn rays(&self) -> &RatMatrix {
        &self.rays
    }

    pub fn extreme_mask(&self) -> &[bool] {
        &self.extreme
    }

    pub fn dim(&self) -> usize {
        self.rays.nrows()
    }

    pub fn num_rays(&self) -> usize {
        self.rays.ncols()
    }

    /// Generator kind and 1-based index of column `j`.
    pub fn label(&self, j: usize) -> (Generator, usize) {
        let half = self.num_rays() / 2;
        if j < half {
            (Generator::U, j + 1)
        } else {
            (Generator::G, j - half + 1)
        }
    }

    /// Matrix of the columns currently marked extreme.
    pub fn extreme_rays(&self) -> RatMatrix {
        let cols: Vec<RatVector> = self
            .rays
            .columns()
            .into_iter()
            .zip(&self.extreme)
            .filter(|(_, &e)| e)
            .map(|(c, _)| c)
            .collect();
        RatMatrix::from_columns(self.dim(), &cols).expect("columns share the row count")
    }
}

pub fn spanning_rays(w: &Weights) -> ConeVRep {
    let k = w.k();
    let mut cols: Vec<RatVector> = (1..k).map(|i| w.u_ray(i)).collect();
    cols.extend((1..k).map(|i| w.g_ray(i)));
    let rays = RatMatrix::from_columns(k, &cols).expect("columns share the row count");
    let extreme = vec![true; cols.len()];
    mark_extreme_rays(ConeVRep { rays, extreme })
}

/// Unmarks, in column order, every column that is a nonnegative combination
/// of the other columns still marked. Earlier columns win among duplicates.
pub fn mark_extreme_rays(v: ConeVRep) -> ConeVRep {
    let ConeVRep { rays, mut extreme } = v;
    let cols = rays.columns();
    let mut seen = HashSet::new();
    for (j, c) in cols.iter().enumerate() {
        if !c.normalize_ray().is_ok_and(|key| seen.insert(key)) {
            extreme[j] = false;
        }
    }
    for j in 0..cols.len() {
        if !extreme[j] {
            continue;
        }
        let others: Vec<RatVector> = (0..cols.len())
            .filter(|&i| i != j && extreme[i])
            .map(|i| cols[i].clone())
            .collect();
        let basis = RatMatrix::from_columns(rays.nrows(), &others).expect("same dimension");
        let cert = ray_membership(&basis, &cols[j]).expect("same dimension");
        if cert.is_feasible() {
            extreme[j] = false;
        }
    }
    ConeVRep { rays, extreme }
}

/// Closed-form normal of the hyperplane through the selected rays.
///
/// `n_k = prod_i d^i_k` with `d^i_k = omega_i` (`u`, `k > i`),
/// `gamma_i` (`g`, `k <= i`) and `1` otherwise.
pub fn facet_normal(selection: &[Generator], w: &Weights) -> Result<RatVector> {
    let k = w.k();
    if selection.len() != k - 1 {
        return Err(Error::DimensionMismatch { expected: k - 1, found: selection.len() });
    }
    let normal = (1..=k)
        .map(|pos| {
            selection.iter().enumerate().fold(Rational::one(), |acc, (idx, gen)| {
                let i = idx + 1;
                match gen {
                    Generator::U if pos > i => acc * &w.omega()[idx],
                    Generator::G if pos <= i => acc * &w.gamma()[idx],
                    _ => acc,
                }
            })
        })
        .collect();
    Ok(normal)
}

/// Facet description `C = { y : A y >= 0 }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeHRep {
    facets: RatMatrix,
    selection: Vec<Vec<Generator>>,
    pointed: bool,
}

impl ConeHRep {
    /// Wraps an arbitrary inequality matrix (e.g. the identity for Pareto
    /// dominance). Rows carry no selector.
    pub fn from_matrix(facets: RatMatrix) -> ConeHRep {
        let pointed = facets.rank() == facets.ncols();
        ConeHRep { facets, selection: Vec::new(), pointed }
    }

    pub fn pareto(dim: usize) -> ConeHRep {
        Self::from_matrix(RatMatrix::identity(dim))
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.facets
    }

    /// Selector that generated each row; empty for matrices built with
    /// [`ConeHRep::from_matrix`].
    pub fn selection(&self) -> &[Vec<Generator>] {
        &self.selection
    }

    pub fn dim(&self) -> usize {
        self.facets.ncols()
    }

    pub fn num_facets(&self) -> usize {
        self.facets.nrows()
    }

    pub fn is_pointed(&self) -> bool {
        self.pointed
    }

    pub fn contains(&self, y: &RatVector) -> Result<bool> {
        Ok(self.facets.mat_vec(y)?.is_nonnegative())
    }
}

/// Enumerates all `2^{K-1}` selections in binary order (bit `i-1` set means
/// `g^i`), keeping the first row of every distinct ray and dropping zero
/// normals.
pub fn facet_matrix(w: &Weights) -> Result<ConeHRep> {
    w.require_pointed()?;
    let k = w.k();
    let mut seen = HashSet::new();
    let mut rows = Vec::new();
    let mut selection = Vec::new();
    for mask in 0u64..(1u64 << (k - 1)) {
        let sel: Vec<Generator> = (0..k - 1)
            .map(|i| if mask >> i & 1 == 1 { Generator::G } else { Generator::U })
            .collect();
        let n = facet_normal(&sel, w)?;
        let Ok(key) = n.normalize_ray() else { continue };
        if seen.insert(key) {
            rows.push(n);
            selection.push(sel);
        }
    }
    let facets = RatMatrix::with_cols(rows, k)?;
    let pointed = facets.rank() == k;
    Ok(ConeHRep { facets, selection, pointed })
}

/// Closed-form facet count `2^{K-1-l} + sum_k 2^{K-1-j_k-(l-k)}` where
/// `j_1 < .. < j_l` are the indices with `gamma_j = 0`.
pub fn facet_count(w: &Weights) -> Result<usize> {
    w.require_pointed()?;
    if let Some(i) = w.omega().iter().position(Zero::is_zero) {
        return Err(Error::FormulaInapplicable(i + 1));
    }
    let k = w.k();
    let zeros: Vec<usize> =
        w.gamma().iter().enumerate().filter(|(_, g)| g.is_zero()).map(|(i, _)| i + 1).collect();
    let l = zeros.len();
    let mut count = 1usize << (k - 1 - l);
    for (pos, &j) in zeros.iter().enumerate() {
        let kk = pos + 1;
        count += 1usize << (k - 1 - j - (l - kk));
    }
    Ok(count)
}

/// Cases with a closed-form `K x K` (or halfspace) facet matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpecialKind {
    Pareto,
    StandardOrdinal,
    GammaZero,
    OmegaZero,
    K2,
    WeightedSum,
}

impl SpecialKind {
    pub const ALL: [SpecialKind; 6] = [
        SpecialKind::Pareto,
        SpecialKind::StandardOrdinal,
        SpecialKind::GammaZero,
        SpecialKind::OmegaZero,
        SpecialKind::K2,
        SpecialKind::WeightedSum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SpecialKind::Pareto => "pareto",
            SpecialKind::StandardOrdinal => "standard_ordinal",
            SpecialKind::GammaZero => "gamma_zero",
            SpecialKind::OmegaZero => "omega_zero",
            SpecialKind::K2 => "k2",
            SpecialKind::WeightedSum => "weighted_sum",
        }
    }

    fn applies(self, w: &Weights) -> std::result::Result<(), String> {
        let all = |v: &RatVector, f: &dyn Fn(&Rational) -> bool| v.iter().all(f);
        let ok = match self {
            SpecialKind::Pareto => all(w.omega(), &Zero::is_zero) && all(w.gamma(), &Zero::is_zero),
            SpecialKind::StandardOrdinal => all(w.omega(), &One::is_one) && all(w.gamma(), &Zero::is_zero),
            SpecialKind::GammaZero => all(w.gamma(), &Zero::is_zero),
            SpecialKind::OmegaZero => all(w.omega(), &Zero::is_zero),
            SpecialKind::K2 => w.k() == 2,
            SpecialKind::WeightedSum => (0..w.k() - 1).all(|i| (&w.omega()[i] * &w.gamma()[i]).is_one()),
        };
        if ok {
            Ok(())
        } else {
            Err(format!("weights {w} do not satisfy the {} pattern", self.name()))
        }
    }
}

impl fmt::Display for SpecialKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// First special case (in [`SpecialKind::ALL`] order) that applies.
pub fn detect_special(w: &Weights) -> Option<SpecialKind> {
    SpecialKind::ALL.into_iter().find(|kind| kind.applies(w).is_ok())
}

fn omega_product(w: &Weights, from: usize, to: usize) -> Rational {
    (from..to).fold(Rational::one(), |acc, l| acc * &w.omega()[l])
}

fn gamma_product(w: &Weights, from: usize, to: usize) -> Rational {
    (from..to).fold(Rational::one(), |acc, l| acc * &w.gamma()[l])
}

pub fn special_matrix(kind: SpecialKind, w: &Weights) -> Result<RatMatrix> {
    kind.applies(w).map_err(|reason| Error::KindMismatch { kind: kind.name(), reason })?;
    let k = w.k();
    let square = |entry: &dyn Fn(usize, usize) -> Rational| {
        RatMatrix::from_rows((0..k).map(|i| (0..k).map(|j| entry(i, j)).collect()).collect())
    };
    match kind {
        SpecialKind::Pareto => Ok(RatMatrix::identity(k)),
        SpecialKind::StandardOrdinal | SpecialKind::GammaZero => square(&|i, j| {
            if i <= j {
                omega_product(w, i, j)
            } else {
                Rational::zero()
            }
        }),
        SpecialKind::OmegaZero => square(&|i, j| {
            if i >= j {
                gamma_product(w, j, i)
            } else {
                Rational::zero()
            }
        }),
        SpecialKind::K2 => RatMatrix::from_rows(vec![
            RatVector::new(vec![Rational::one(), w.omega()[0].clone()]),
            RatVector::new(vec![w.gamma()[0].clone(), Rational::one()]),
        ]),
        SpecialKind::WeightedSum => {
            RatMatrix::from_rows(vec![(0..k).map(|j| omega_product(w, 0, j)).collect()])
        }
    }
}

/// `m_ij = prod_{l=i}^{j-1} omega_l` above the diagonal, `1` on it and
/// `prod_{l=j}^{i-1} gamma_l` below. Every row is a numerical representation.
pub fn representation_matrix(w: &Weights) -> RatMatrix {
    let k = w.k();
    let rows = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| match i.cmp(&j) {
                    std::cmp::Ordering::Less => omega_product(w, i, j),
                    std::cmp::Ordering::Equal => Rational::one(),
                    std::cmp::Ordering::Greater => gamma_product(w, j, i),
                })
                .collect()
        })
        .collect();
    RatMatrix::from_rows(rows).expect("square")
}

/// Membership of `nu` in the set of numerical representations, which is
/// the dual cone: `nu >= 0`, `omega_i nu_i <= nu_{i+1}`, `nu_i >= gamma_i nu_{i+1}`.
pub fn dual_contains(w: &Weights, nu: &RatVector) -> bool {
    nu.dim() == w.k()
        && nu.is_nonnegative()
        && (0..w.k() - 1).all(|i| {
            &w.omega()[i] * &nu[i] <= nu[i + 1] && nu[i] >= &w.gamma()[i] * &nu[i + 1]
        })
}

/// Result of collapsing categories tied by `omega_i * gamma_i = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergedWeights {
    pub weights: Weights,
    /// `K' x K` map taking original counting vectors to merged ones.
    pub lift: RatMatrix,
    /// Original categories (1-based) that make up each merged category.
    pub groups: Vec<Vec<usize>>,
}

impl MergedWeights {
    pub fn lift_vector(&self, c: &RatVector) -> Result<RatVector> {
        self.lift.mat_vec(c)
    }
}

/// Merges every degenerate pair. A tie `nu_{i+1} = omega_i nu_i` folds
/// category `i + 1` into `i` with factor `omega_i`; the weights towards the
/// next category become `omega_i omega_{i+1}` and `gamma_{i+1} / omega_i`.
pub fn merge_degenerate(w: &Weights) -> Result<MergedWeights> {
    if w.degenerate_indices().is_empty() {
        return Err(Error::NothingToMerge);
    }
    let k = w.k();
    let mut omega = w.omega().entries().to_vec();
    let mut gamma = w.gamma().entries().to_vec();
    let mut lift: Vec<RatVector> = RatMatrix::identity(k).rows().to_vec();
    let mut groups: Vec<Vec<usize>> = (1..=k).map(|c| vec![c]).collect();
    while let Some(i) = (0..omega.len()).find(|&i| (&omega[i] * &gamma[i]).is_one()) {
        let factor = omega[i].clone();
        let folded = lift.remove(i + 1);
        lift[i] = lift[i].add_scaled(&factor, &folded);
        let tail = groups.remove(i + 1);
        groups[i].extend(tail);
        if i + 1 < omega.len() {
            omega[i + 1] = &factor * &omega[i + 1];
            gamma[i + 1] = &gamma[i + 1] / &factor;
        }
        omega.remove(i);
        gamma.remove(i);
    }
    let weights = classify_weights(lift.len(), RatVector::new(omega), RatVector::new(gamma))?;
    let lift = RatMatrix::with_cols(lift, k)?;
    Ok(MergedWeights { weights, lift, groups })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    fn weights(omega: &[Rational], gamma: &[Rational]) -> Weights {
        classify_weights(omega.len() + 1, omega.to_vec().into(), gamma.to_vec().into()).unwrap()
    }

    fn row_set(m: &RatMatrix) -> HashSet<RatVector> {
        m.rows().iter().map(|r| r.normalize_ray().unwrap()).collect()
    }

    #[test]
    fn classify_examples() {
        let w = weights(&[int(1), int(1)], &[int(0), int(0)]);
        assert_eq!(w.class(), WeightClass::Pointed);
        let w = weights(&[int(2)], &[rat(1, 2)]);
        assert_eq!(w.class(), WeightClass::Degenerate(vec![1]));
        let e = classify_weights(2, vec![int(2)].into(), vec![rat(3, 4)].into());
        assert_eq!(e, Err(Error::ProductExceedsOne(1)));
        let e = classify_weights(3, vec![int(1), int(-1)].into(), vec![int(0), int(0)].into());
        assert_eq!(e, Err(Error::NegativeWeight(2)));
        let e = classify_weights(3, vec![int(1)].into(), vec![int(0), int(0)].into());
        assert!(matches!(e, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn spanning_ray_examples() {
        let v = spanning_rays(&Weights::standard_ordinal(2));
        assert_eq!(v.rays().columns(), vec![RatVector::from_ints(&[-1, 1]), RatVector::from_ints(&[1, 0])]);
        assert_eq!(v.extreme_mask(), &[true, true]);

        let v = spanning_rays(&Weights::pareto(2));
        assert_eq!(v.rays().columns(), vec![RatVector::from_ints(&[0, 1]), RatVector::from_ints(&[1, 0])]);

        let w = weights(&[rat(6, 5), int(1)], &[rat(1, 2), int(0)]);
        let v = spanning_rays(&w);
        let cols = v.rays().columns();
        assert_eq!(cols[0], RatVector::new(vec![rat(-6, 5), int(1), int(0)]));
        assert_eq!(cols[2], RatVector::new(vec![int(1), rat(-1, 2), int(0)]));
        assert_eq!(cols[3], RatVector::from_ints(&[0, 1, 0]));
        assert_eq!(v.label(3), (Generator::G, 2));
    }

    #[test]
    fn extreme_rays_with_zero_gamma() {
        // g^2 = 5/2 u^1 + 3 g^1, a nonnegative combination, so it is redundant
        let w = weights(&[rat(6, 5), int(1)], &[rat(1, 2), int(0)]);
        let v = spanning_rays(&w);
        let cols = v.rays().columns();
        let combo = cols[0].scale(&rat(5, 2)).add_scaled(&int(3), &cols[2]);
        assert_eq!(combo, cols[3]);
        assert_eq!(v.extreme_mask(), &[true, true, true, false]);

        let v = spanning_rays(&Weights::standard_ordinal(3));
        // g^2 = u^1 + g^1
        assert_eq!(v.extreme_mask(), &[true, true, true, false]);
        assert_eq!(v.extreme_rays().ncols(), 3);
    }

    #[test]
    fn duplicated_rays_keep_one_copy() {
        // omega_1 = 0 and gamma_2 = 0 make u^1 = g^2 = e_2
        let w = weights(&[int(0), int(1)], &[rat(1, 2), int(0)]);
        let v = spanning_rays(&w);
        assert_eq!(v.rays().column(0), v.rays().column(3));
        assert_eq!(v.extreme_mask(), &[true, true, true, false]);
    }

    #[test]
    fn facet_normal_examples() {
        let (g1, g3, w2, w4) = (rat(1, 3), rat(1, 5), int(2), int(7));
        let w = weights(&[int(3), w2.clone(), int(5), w4.clone()], &[g1.clone(), rat(1, 7), g3.clone(), rat(1, 11)]);
        use Generator::*;
        let n = facet_normal(&[G, U, G, U], &w).unwrap();
        let expected = RatVector::new(vec![&g1 * &g3, g3.clone(), &w2 * &g3, w2.clone(), &w2 * &w4]);
        assert_eq!(n, expected);

        let w = weights(&[int(3)], &[rat(1, 4)]);
        assert_eq!(facet_normal(&[U], &w).unwrap(), RatVector::from_ints(&[1, 3]));
        assert_eq!(facet_normal(&[G], &w).unwrap(), RatVector::new(vec![rat(1, 4), int(1)]));
        assert!(facet_normal(&[U, U], &w).is_err());
    }

    #[test]
    fn normals_are_orthogonal_to_selected_rays() {
        let w = weights(&[int(2), rat(3, 2), int(4)], &[rat(1, 3), rat(1, 2), rat(1, 5)]);
        for mask in 0..8u32 {
            let sel: Vec<Generator> =
                (0..3).map(|i| if mask >> i & 1 == 1 { Generator::G } else { Generator::U }).collect();
            let n = facet_normal(&sel, &w).unwrap();
            for (idx, gen) in sel.iter().enumerate() {
                let r = match gen {
                    Generator::U => w.u_ray(idx + 1),
                    Generator::G => w.g_ray(idx + 1),
                };
                assert!(n.dot(&r).unwrap().is_zero());
                let other = match gen {
                    Generator::U => w.g_ray(idx + 1),
                    Generator::G => w.u_ray(idx + 1),
                };
                assert!(n.dot(&other).unwrap().is_positive());
            }
        }
    }

    #[test]
    fn facet_matrix_standard_ordinal() {
        let h = facet_matrix(&Weights::standard_ordinal(3)).unwrap();
        let expected = RatMatrix::from_ints(&[&[1, 1, 1], &[0, 1, 1], &[0, 0, 1]]).unwrap();
        assert_eq!(row_set(h.matrix()), row_set(&expected));
        assert_eq!(h.num_facets(), 3);
        assert!(h.is_pointed());
        assert_eq!(h.selection().len(), 3);
        assert_eq!(h.selection()[0], vec![Generator::U, Generator::U]);
    }

    #[test]
    fn facet_matrix_rejects_degenerate() {
        let w = weights(&[int(2)], &[rat(1, 2)]);
        assert_eq!(facet_matrix(&w), Err(Error::NotPointed(vec![1])));
    }

    #[test]
    fn facet_count_examples() {
        let w = weights(&[int(2), int(3), int(2), int(5)], &[int(0), rat(1, 4), int(0), rat(1, 9)]);
        assert_eq!(facet_count(&w).unwrap(), 10);
        assert_eq!(facet_matrix(&w).unwrap().num_facets(), 10);
        for k in 2..7 {
            let w = Weights::uniform(k, rat(3, 2), int(0)).unwrap();
            assert_eq!(facet_count(&w).unwrap(), k);
            let w = Weights::uniform(k, rat(3, 2), rat(1, 3)).unwrap();
            assert_eq!(facet_count(&w).unwrap(), 1 << (k - 1));
        }
        let w = weights(&[int(0), int(1)], &[int(0), int(0)]);
        assert_eq!(facet_count(&w), Err(Error::FormulaInapplicable(1)));
    }

    #[test]
    fn special_matrix_examples() {
        assert_eq!(special_matrix(SpecialKind::Pareto, &Weights::pareto(3)).unwrap(), RatMatrix::identity(3));
        let w = weights(&[int(2), int(3)], &[int(0), int(0)]);
        assert_eq!(
            special_matrix(SpecialKind::GammaZero, &w).unwrap(),
            RatMatrix::from_ints(&[&[1, 2, 6], &[0, 1, 3], &[0, 0, 1]]).unwrap()
        );
        let w = weights(&[int(0), int(0)], &[rat(1, 2), rat(1, 4)]);
        let expected = RatMatrix::from_rows(vec![
            RatVector::from_ints(&[1, 0, 0]),
            RatVector::new(vec![rat(1, 2), int(1), int(0)]),
            RatVector::new(vec![rat(1, 8), rat(1, 4), int(1)]),
        ])
        .unwrap();
        assert_eq!(special_matrix(SpecialKind::OmegaZero, &w).unwrap(), expected);
        assert!(matches!(special_matrix(SpecialKind::GammaZero, &w), Err(Error::KindMismatch { .. })));

        let w = weights(&[int(2), int(4)], &[rat(1, 2), rat(1, 4)]);
        assert_eq!(
            special_matrix(SpecialKind::WeightedSum, &w).unwrap(),
            RatMatrix::from_ints(&[&[1, 2, 8]]).unwrap()
        );
        assert_eq!(detect_special(&w), Some(SpecialKind::WeightedSum));
        assert_eq!(detect_special(&Weights::standard_ordinal(4)), Some(SpecialKind::StandardOrdinal));
    }

    #[test]
    fn representation_matrix_examples() {
        let w = weights(&[int(2)], &[rat(1, 4)]);
        let m = representation_matrix(&w);
        let expected = RatMatrix::from_rows(vec![
            RatVector::from_ints(&[1, 2]),
            RatVector::new(vec![rat(1, 4), int(1)]),
        ])
        .unwrap();
        assert_eq!(m, expected);
        let m = representation_matrix(&Weights::standard_ordinal(3));
        assert_eq!(m, RatMatrix::from_ints(&[&[1, 1, 1], &[0, 1, 1], &[0, 0, 1]]).unwrap());

        let w = weights(&[int(2), rat(3, 2), int(4)], &[rat(1, 3), rat(1, 2), rat(1, 5)]);
        let m = representation_matrix(&w);
        assert_eq!(m.rank(), 4);
        assert!(m.rows().iter().all(|r| dual_contains(&w, r)));
    }

    #[test]
    fn dual_contains_examples() {
        let w = Weights::standard_ordinal(2);
        assert!(dual_contains(&w, &RatVector::from_ints(&[1, 2])));
        assert!(!dual_contains(&w, &RatVector::from_ints(&[2, 1])));
        assert!(!dual_contains(&w, &RatVector::from_ints(&[1, 2, 3])));
    }

    #[test]
    fn merge_examples() {
        let w = weights(&[int(2)], &[rat(1, 2)]);
        let m = merge_degenerate(&w).unwrap();
        assert_eq!(m.weights.k(), 1);
        assert_eq!(m.lift_vector(&RatVector::from_ints(&[3, 1])).unwrap(), RatVector::from_ints(&[5]));
        assert_eq!(m.groups, vec![vec![1, 2]]);

        let w = weights(&[int(2), int(3)], &[rat(1, 2), int(0)]);
        let m = merge_degenerate(&w).unwrap();
        assert_eq!(m.weights.k(), 2);
        assert_eq!(m.weights.omega(), &RatVector::from_ints(&[6]));
        assert_eq!(m.weights.gamma(), &RatVector::from_ints(&[0]));
        assert!(m.weights.is_pointed());

        assert_eq!(merge_degenerate(&Weights::standard_ordinal(3)), Err(Error::NothingToMerge));
    }

    #[test]
    fn chained_merge_collapses_to_one_category() {
        let w = weights(&[int(2), int(3)], &[rat(1, 2), rat(1, 3)]);
        let m = merge_degenerate(&w).unwrap();
        assert_eq!(m.weights.k(), 1);
        // nu = (1, 2, 6): c1 + 2 c2 + 6 c3
        assert_eq!(m.lift, RatMatrix::from_ints(&[&[1, 2, 6]]).unwrap());
        let h = facet_matrix(&m.weights).unwrap();
        assert_eq!(h.matrix(), &RatMatrix::identity(1));
    }
}
