mod common;

use std::collections::BTreeMap;

use num_traits::Zero;
use ordcone::exactnum::{rat, RatVector};
use ordcone::graph_io::{graph_to_json, parse_graph};
use ordcone::oracle::random::{degenerate_weights, pointed_weights, random_graph, random_points};
use ordcone::oracle::{brute_force_efficient, double_description, in_cone, ray_membership, sampled_dual_check};
use ordcone::pathsolve::{distinct_vectors, efficient_paths, SearchMode};
use ordcone::{
    counting_vector, dominates, dual_contains, facet_count, facet_matrix, facet_normal, filter_nondominated,
    merge_degenerate, representation_matrix, spanning_rays, weakly_dominates, Generator, PointSet, Weights,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn all_selections(k: usize) -> impl Iterator<Item = Vec<Generator>> {
    (0u32..1 << (k - 1)).map(move |mask| {
        (0..k - 1).map(|i| if mask >> i & 1 == 1 { Generator::G } else { Generator::U }).collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normals_vanish_on_selected_rays_and_are_positive_elsewhere(seed in any::<u64>(), k in 2usize..=6) {
        let mut r = seeded(seed);
        let w = pointed_weights(&mut r, k, 0.0, 0.0);
        for sel in all_selections(k) {
            let n = facet_normal(&sel, &w).unwrap();
            for (i, g) in sel.iter().enumerate() {
                let (on, off) = match g {
                    Generator::U => (w.u_ray(i + 1), w.g_ray(i + 1)),
                    Generator::G => (w.g_ray(i + 1), w.u_ray(i + 1)),
                };
                prop_assert!(n.dot(&on).unwrap().is_zero());
                prop_assert!(n.dot(&off).unwrap() > rat(0, 1));
            }
        }
    }

    #[test]
    fn normals_vanish_on_selected_rays_with_zero_weights(seed in any::<u64>(), k in 2usize..=6) {
        let mut r = seeded(seed);
        let w = pointed_weights(&mut r, k, 0.4, 0.4);
        for sel in all_selections(k) {
            let n = facet_normal(&sel, &w).unwrap();
            for (i, g) in sel.iter().enumerate() {
                let ray = if *g == Generator::U { w.u_ray(i + 1) } else { w.g_ray(i + 1) };
                prop_assert!(n.dot(&ray).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn count_law_and_full_rank(seed in any::<u64>(), k in 2usize..=7) {
        let mut r = seeded(seed);
        let w = pointed_weights(&mut r, k, 0.0, 0.5);
        let a = facet_matrix(&w).unwrap();
        prop_assert_eq!(a.num_facets(), facet_count(&w).unwrap());
        prop_assert_eq!(a.matrix().rank(), k);
        prop_assert!(a.matrix().rows().iter().all(|row| row.is_nonnegative() && !row.is_zero()));
    }

    #[test]
    fn facets_match_double_description(seed in any::<u64>(), k in 2usize..=5) {
        let mut r = seeded(seed);
        let w = pointed_weights(&mut r, k, 0.3, 0.3);
        prop_assert_eq!(double_description(spanning_rays(&w).rays()).unwrap(), row_set(&facet_matrix(&w).unwrap()));
    }

    #[test]
    fn dual_cone_is_the_set_of_representations(seed in any::<u64>(), k in 2usize..=6) {
        let mut r = seeded(seed);
        let w = pointed_weights(&mut r, k, 0.3, 0.3);
        let b = spanning_rays(&w);
        let m = representation_matrix(&w);
        for row in m.rows() {
            prop_assert!(dual_contains(&w, row));
        }
        for _ in 0..20 {
            let nu: RatVector = (0..k).map(|_| rat(r.gen_range(-2..=12), r.gen_range(1..=4))).collect();
            let by_rays = b.rays().columns().iter().all(|c| nu.dot(c).unwrap() >= rat(0, 1));
            prop_assert_eq!(dual_contains(&w, &nu), by_rays);
        }
    }

    #[test]
    fn dominance_is_a_partial_order(seed in any::<u64>(), k in 2usize..=5) {
        let mut r = seeded(seed);
        let w = pointed_weights(&mut r, k, 0.3, 0.3);
        let a = facet_matrix(&w).unwrap();
        let y = random_points(&mut r, 3, k, 4);
        prop_assert!(weakly_dominates(&a, &y[0], &y[0]).unwrap());
        if weakly_dominates(&a, &y[0], &y[1]).unwrap() && weakly_dominates(&a, &y[1], &y[0]).unwrap() {
            prop_assert_eq!(&y[0], &y[1]);
        }
        if weakly_dominates(&a, &y[0], &y[1]).unwrap() && weakly_dominates(&a, &y[1], &y[2]).unwrap() {
            prop_assert!(weakly_dominates(&a, &y[0], &y[2]).unwrap());
        }
    }

    #[test]
    fn dominance_is_translation_and_scaling_invariant(seed in any::<u64>(), k in 2usize..=5) {
        let mut r = seeded(seed);
        let w = pointed_weights(&mut r, k, 0.3, 0.3);
        let a = facet_matrix(&w).unwrap();
        let y = random_points(&mut r, 3, k, 5);
        let lambda = rat(r.gen_range(1..=9), r.gen_range(1..=4));
        let base = dominates(&a, &y[0], &y[1]).unwrap();
        prop_assert_eq!(base, dominates(&a, &(&y[0] + &y[2]), &(&y[1] + &y[2])).unwrap());
        prop_assert_eq!(base, dominates(&a, &y[0].scale(&lambda), &y[1].scale(&lambda)).unwrap());
    }

    #[test]
    fn dominance_is_sound_against_dual_samples(seed in any::<u64>(), k in 2usize..=5) {
        let mut r = seeded(seed);
        let w = pointed_weights(&mut r, k, 0.3, 0.3);
        let a = facet_matrix(&w).unwrap();
        let b = spanning_rays(&w);
        let y1 = random_points(&mut r, 1, k, 5).remove(0);
        let mut y2 = y1.clone();
        for col in b.rays().columns() {
            y2 = y2.add_scaled(&rat(r.gen_range(0..=2), r.gen_range(1..=3)), &col);
        }
        prop_assert!(weakly_dominates(&a, &y1, &y2).unwrap());
        prop_assert!(sampled_dual_check(&w, &y1, &y2, 30, seed));
        prop_assert!(sampled_dual_check(&w, &y1, &y1, 5, seed));
    }

    #[test]
    fn larger_weights_give_larger_cones(seed in any::<u64>(), k in 2usize..=5) {
        let mut r = seeded(seed);
        let w = pointed_weights(&mut r, k, 0.3, 0.3);
        let w2 = increase(&mut r, &w);
        let new_rays = spanning_rays(&w2).rays().clone();
        for col in spanning_rays(&w).rays().columns() {
            prop_assert!(in_cone(&new_rays, &col).unwrap());
        }
        let y = PointSet::new(random_points(&mut r, 30, k, 6)).unwrap();
        let small = filter_nondominated(&facet_matrix(&w2).unwrap(), &y).unwrap();
        let large = filter_nondominated(&facet_matrix(&w).unwrap(), &y).unwrap();
        prop_assert!(small.ids().iter().all(|id| large.ids().contains(id)));
    }

    #[test]
    fn filtering_is_idempotent(seed in any::<u64>(), k in 2usize..=4) {
        let mut r = seeded(seed);
        let w = pointed_weights(&mut r, k, 0.3, 0.3);
        let a = facet_matrix(&w).unwrap();
        let y = PointSet::new(random_points(&mut r, 40, k, 6)).unwrap();
        let once = filter_nondominated(&a, &y).unwrap();
        prop_assert_eq!(filter_nondominated(&a, &once).unwrap(), once);
    }

    #[test]
    fn membership_certificates_are_sound(seed in any::<u64>(), k in 2usize..=6) {
        let mut r = seeded(seed);
        let w = pointed_weights(&mut r, k, 0.3, 0.3);
        let b = spanning_rays(&w).rays().clone();
        let v: RatVector = (0..k).map(|_| rat(r.gen_range(-6..=6), r.gen_range(1..=3))).collect();
        prop_assert!(ray_membership(&b, &v).unwrap().verify(&b, &v));
    }

    #[test]
    fn merged_cones_are_pointed_and_lift_representations(seed in any::<u64>(), k in 2usize..=6) {
        let mut r = seeded(seed);
        let w = degenerate_weights(&mut r, k);
        let m = merge_degenerate(&w).unwrap();
        prop_assert!(m.weights.is_pointed());
        prop_assert_eq!(m.groups.iter().map(Vec::len).sum::<usize>(), k);
        let pulled = facet_matrix(&m.weights).unwrap().matrix().mat_mul(&m.lift).unwrap();
        for row in pulled.rows() {
            prop_assert!(dual_contains(&w, row));
        }
    }

    #[test]
    fn transformed_edge_costs_are_nonnegative(seed in any::<u64>(), k in 1usize..=4) {
        let mut r = seeded(seed);
        let g = random_graph(&mut r, 6, 12, k);
        let w = pointed_weights(&mut r, k, 0.3, 0.3);
        let a = facet_matrix(&w).unwrap();
        for e in 0..g.edges().len() {
            let cost = a.matrix().mat_vec(&g.edge_counts(e)).unwrap();
            prop_assert!(cost.is_nonnegative() && !cost.is_zero());
        }
    }

    #[test]
    fn all_paths_mode_matches_enumeration(seed in any::<u64>(), k in 1usize..=4) {
        let mut r = seeded(seed);
        let nodes = r.gen_range(2..=9);
        let g = random_graph(&mut r, nodes, 2 * nodes + 3, k);
        let w = pointed_weights(&mut r, k, 0.4, 0.4);
        let t = format!("v{}", nodes - 1);
        let found = efficient_paths(&g, "v0", &t, &w, SearchMode::AllPaths, 100_000).unwrap();
        let brute = brute_force_efficient(&g, "v0", &t, &facet_matrix(&w).unwrap(), 100_000).unwrap();
        let mut a: Vec<Vec<usize>> = found.iter().map(|p| p.edges.clone()).collect();
        let mut b: Vec<Vec<usize>> = brute.into_iter().map(|(p, _)| p).collect();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);

        let one = efficient_paths(&g, "v0", &t, &w, SearchMode::OnePerVector, 100_000).unwrap();
        prop_assert_eq!(one.len(), distinct_vectors(&found));
        prop_assert_eq!(vector_set(&one), vector_set(&found));
        for p in &found {
            prop_assert_eq!(&counting_vector(&p.edges, &g).unwrap(), &p.counts);
            prop_assert_eq!(p.nodes.len(), p.edges.len() + 1);
        }
        let mut sorted = found.clone();
        sorted.sort_by(|x, y| x.transformed.cmp(&y.transformed).then_with(|| x.nodes.cmp(&y.nodes)));
        prop_assert_eq!(sorted, found);
    }

    #[test]
    fn graph_files_round_trip(seed in any::<u64>()) {
        let mut r = seeded(seed);
        let g = random_graph(&mut r, 5, 9, 3);
        let again = parse_graph(&graph_to_json(&g)).unwrap();
        prop_assert_eq!(again.edges(), g.edges());
    }
}

#[test]
fn intro_instances_through_every_mode() {
    let g = nine_green_vs_one_red();
    let w = Weights::standard_ordinal(2);
    let p = efficient_paths(&g, "s", "t", &w, SearchMode::AllPaths, 100).unwrap();
    // (0,1) sorts before (9,0) in transformed cost
    assert_eq!(p[0].counts, RatVector::from_ints(&[0, 1]));
    assert_eq!(p[1].edges.len(), 9);
    let counts: BTreeMap<usize, usize> = p.iter().map(|x| (x.edges.len(), 1)).collect();
    assert_eq!(counts.len(), 2);
}
