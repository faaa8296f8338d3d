#![allow(dead_code)]

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use ordcone::exactnum::{rat, RatVector, Rational};
use ordcone::graph_io::parse_graph;
use ordcone::pathsolve::{CategoryGraph, EfficientPath};
use ordcone::{classify_weights, ConeHRep, Weights};
use rand::Rng;

pub fn nine_green_vs_one_red() -> CategoryGraph {
    parse_graph(include_str!("../../../../data/nine_green_vs_one_red.json")).unwrap()
}

pub fn six_green_vs_four_red() -> CategoryGraph {
    parse_graph(include_str!("../../../../data/six_green_vs_four_red.json")).unwrap()
}

pub fn weights(omega: &[Rational], gamma: &[Rational]) -> Weights {
    classify_weights(omega.len() + 1, omega.to_vec().into(), gamma.to_vec().into()).unwrap()
}

pub fn row_set(a: &ConeHRep) -> BTreeSet<RatVector> {
    a.matrix().rows().iter().map(|r| r.normalize_ray().unwrap()).collect()
}

pub fn vector_set(paths: &[EfficientPath]) -> BTreeSet<RatVector> {
    paths.iter().map(|p| p.counts.clone()).collect()
}

/// Componentwise larger pointed weights: each entry moves a random
/// fraction of the way towards the boundary `omega gamma = 1`.
pub fn increase<R: Rng + ?Sized>(rng: &mut R, w: &Weights) -> Weights {
    let mut omega = Vec::new();
    let mut gamma = Vec::new();
    for (o, g) in w.omega().iter().zip(w.gamma().iter()) {
        let o2 = if g.is_zero() {
            o + rat(rng.gen_range(0..=4), 2)
        } else {
            o + (g.recip() - o) * rat(rng.gen_range(0..=2), 4)
        };
        let g2 = if o2.is_zero() {
            g + rat(rng.gen_range(0..=4), 4)
        } else {
            g + (o2.recip() - g) * rat(rng.gen_range(0..=2), 4)
        };
        omega.push(o2);
        gamma.push(g2);
    }
    let w2 = weights(&omega, &gamma);
    assert!(w2.is_pointed());
    w2
}

/// Lexicographic minimum giving priority to the last (worst) category.
pub fn lex_min(vectors: &[RatVector]) -> RatVector {
    vectors
        .iter()
        .min_by(|a, b| a.entries().iter().rev().cmp(b.entries().iter().rev()))
        .unwrap()
        .clone()
}

pub fn one() -> Rational {
    Rational::one()
}
