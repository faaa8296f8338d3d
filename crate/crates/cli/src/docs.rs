//! Serialized documents: cone reports, route results and sweep rows.
//! All rationals are written as decimal strings (or `p/q`).

use ordcone::exactnum::{to_decimal_string, RatVector, Rational};
use serde::{Deserialize, Serialize};

pub fn decimals(v: &RatVector) -> Vec<String> {
    v.iter().map(to_decimal_string).collect()
}

pub fn decimal_list(v: &[Rational]) -> Vec<String> {
    v.iter().map(to_decimal_string).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightsDoc {
    #[serde(rename = "K")]
    pub k: usize,
    pub omega: Vec<String>,
    pub gamma: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MergeDoc {
    pub weights: WeightsDoc,
    /// Original categories forming each merged category.
    pub groups: Vec<Vec<usize>>,
    pub lift: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RayDoc {
    pub label: String,
    pub vector: Vec<String>,
    pub extreme: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FacetDoc {
    pub selection: String,
    pub normal: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConeDoc {
    pub weights: WeightsDoc,
    pub class: String,
    pub degenerate_indices: Vec<usize>,
    pub rays: Vec<RayDoc>,
    /// Facets of the cone itself, or of the merged cone for degenerate weights.
    pub facets: Vec<FacetDoc>,
    pub facet_count: usize,
    /// Closed-form count; absent when some omega_i is zero.
    pub formula_count: Option<usize>,
    pub special_case: Option<String>,
    pub merge: Option<MergeDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DominanceDoc {
    pub y1: Vec<String>,
    pub y2: Vec<String>,
    pub weakly: bool,
    pub strictly: bool,
    pub reverse_weakly: bool,
    pub merged: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointDoc {
    pub id: usize,
    pub point: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FilterDoc {
    pub total: usize,
    pub nondominated: Vec<PointDoc>,
    pub merged: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PathDoc {
    pub nodes: Vec<String>,
    pub edges: Vec<usize>,
    pub counts: Vec<String>,
    pub transformed: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryDoc {
    pub paths: usize,
    pub vectors: usize,
}

/// Output of `route`; input of `export-geojson`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultDoc {
    pub source: String,
    pub target: String,
    pub mode: String,
    pub weights: WeightsDoc,
    pub merge: Option<MergeDoc>,
    /// Number of rows of the transformation, i.e. objectives of the Pareto search.
    pub objectives: usize,
    pub paths: Vec<PathDoc>,
    pub summary: SummaryDoc,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRowDoc {
    pub omega: String,
    pub gamma: String,
    pub efficient_vectors: Option<usize>,
    pub efficient_paths: Option<usize>,
    pub runtime_ms: Option<String>,
    pub status: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub name: String,
    pub status: String,
    pub detail: String,
}
