//! Dominance refutation through the dual cone.
//!
//! `y1` weakly dominates `y2` iff `nu . y1 <= nu . y2` for every numerical
//! representation `nu`. Checking the rows of the representation matrix and
//! random nonnegative combinations of them can refute dominance but never
//! prove it.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cone::{representation_matrix, Weights};
use crate::exactnum::{rat, RatVector};

pub fn sampled_dual_check(w: &Weights, y1: &RatVector, y2: &RatVector, samples: usize, seed: u64) -> bool {
    if y1.dim() != w.k() || y2.dim() != w.k() {
        return false;
    }
    let m = representation_matrix(w);
    let holds = |nu: &RatVector| nu.dot(y1).expect("dim") <= nu.dot(y2).expect("dim");
    if !m.rows().iter().all(holds) {
        return false;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let mut nu = RatVector::zeros(w.k());
        for row in m.rows() {
            nu = nu.add_scaled(&rat(rng.gen_range(0..=12), rng.gen_range(1..=6)), row);
        }
        if nu.iter().all(Zero::is_zero) {
            continue;
        }
        if !holds(&nu) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    #[test]
    fn refutes_the_reverse_direction() {
        let w = Weights::standard_ordinal(2);
        let a = RatVector::from_ints(&[1, 1]);
        let b = RatVector::from_ints(&[0, 2]);
        assert!(sampled_dual_check(&w, &a, &b, 50, 7));
        // nu = (0, 1) separates
        assert!(!sampled_dual_check(&w, &b, &a, 50, 7));
        let w = Weights::uniform(2, int(10), int(0)).unwrap();
        assert!(sampled_dual_check(&w, &RatVector::from_ints(&[10, 0]), &RatVector::from_ints(&[0, 1]), 20, 1));
        assert!(!sampled_dual_check(&w, &RatVector::from_ints(&[11, 0]), &RatVector::from_ints(&[0, 1]), 20, 1));
    }
}
