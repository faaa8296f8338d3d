//! Seeded random instances for property tests and the `verify` command.

use rand::Rng;

use crate::cone::{classify_weights, Weights};
use crate::exactnum::{rat, RatVector, Rational};
use crate::pathsolve::{CategoryGraph, Edge, Node};

/// Uniform `a / b` with `0 <= a <= max_num`, `1 <= b <= max_den`.
pub fn small_rational<R: Rng + ?Sized>(rng: &mut R, max_num: i64, max_den: i64) -> Rational {
    rat(rng.gen_range(0..=max_num), rng.gen_range(1..=max_den))
}

fn positive_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    rat(rng.gen_range(1..=8), rng.gen_range(1..=4))
}

/// Pointed weights; each `omega_i` / `gamma_i` is zero with the given probability.
pub fn pointed_weights<R: Rng + ?Sized>(rng: &mut R, k: usize, zero_omega: f64, zero_gamma: f64) -> Weights {
    let mut omega = Vec::with_capacity(k - 1);
    let mut gamma = Vec::with_capacity(k - 1);
    for _ in 1..k {
        let o = if rng.gen_bool(zero_omega) { Rational::from_integer(0.into()) } else { positive_rational(rng) };
        let g = if rng.gen_bool(zero_gamma) {
            Rational::from_integer(0.into())
        } else if o == Rational::from_integer(0.into()) {
            positive_rational(rng)
        } else {
            // gamma = t / omega with 0 < t < 1
            let d = rng.gen_range(2..=6);
            rat(rng.gen_range(1..d), d) / &o
        };
        omega.push(o);
        gamma.push(g);
    }
    classify_weights(k, omega.into(), gamma.into()).expect("pointed by construction")
}

/// Weights with at least one index where `omega_i gamma_i = 1`. `k >= 2`.
pub fn degenerate_weights<R: Rng + ?Sized>(rng: &mut R, k: usize) -> Weights {
    let base = pointed_weights(rng, k, 0.0, 0.3);
    let forced = rng.gen_range(0..k - 1);
    let omega = base.omega().entries().to_vec();
    let mut gamma = base.gamma().entries().to_vec();
    for i in 0..k - 1 {
        if i == forced || rng.gen_bool(0.3) {
            gamma[i] = omega[i].recip();
        }
    }
    classify_weights(k, omega.into(), gamma.into()).expect("in the closed set")
}

/// Nonnegative vectors with entries `a / b`, `a <= max_num`, `b <= 3`.
pub fn random_points<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize, max_num: i64) -> Vec<RatVector> {
    (0..n).map(|_| (0..k).map(|_| small_rational(rng, max_num, 3)).collect()).collect()
}

/// Random directed graph on nodes `v0..v{n-1}` without self loops; parallel
/// edges may occur. Lengths are multiples of 1/2 or 1/4.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize, k: usize) -> CategoryGraph {
    let nodes = (0..n).map(|i| Node::new(format!("v{i}"))).collect();
    let edges = (0..m)
        .map(|_| {
            let from = rng.gen_range(0..n);
            let mut to = rng.gen_range(0..n - 1);
            if to >= from {
                to += 1;
            }
            let length = rat(rng.gen_range(1..=12), [1, 2, 4][rng.gen_range(0..3)]);
            Edge { from, to, category: rng.gen_range(1..=k), length }
        })
        .collect();
    CategoryGraph::new(k, nodes, edges).expect("valid by construction")
}
