//! Exhaustive simple-path enumeration.

use crate::cone::ConeHRep;
use crate::dominance::{filter_nondominated, PointSet};
use crate::error::{Error, Result};
use crate::exactnum::RatVector;
use crate::pathsolve::{counting_vector, CategoryGraph};

/// Every simple s-t path as a list of edge indices, in depth-first order
/// (neighbours by target id, then edge index). `s == t` yields the empty path.
pub fn enumerate_simple_paths(g: &CategoryGraph, s: &str, t: &str, cap: usize) -> Result<Vec<Vec<usize>>> {
    let s = g.node_index(s)?;
    let t = g.node_index(t)?;
    let mut found = Vec::new();
    let mut visited = vec![false; g.nodes().len()];
    let mut stack = Vec::new();
    visited[s] = true;
    dfs(g, s, t, cap, &mut visited, &mut stack, &mut found)?;
    Ok(found)
}

fn dfs(
    g: &CategoryGraph,
    v: usize,
    t: usize,
    cap: usize,
    visited: &mut [bool],
    stack: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) -> Result<()> {
    if v == t {
        if found.len() == cap {
            return Err(Error::PathCapExceeded(cap));
        }
        found.push(stack.clone());
        return Ok(());
    }
    for &e in g.out_edges(v) {
        let w = g.edges()[e].to;
        if visited[w] {
            continue;
        }
        visited[w] = true;
        stack.push(e);
        dfs(g, w, t, cap, visited, stack, found)?;
        stack.pop();
        visited[w] = false;
    }
    Ok(())
}

/// Efficient simple paths by enumeration plus filtering of their counting
/// vectors. Returns `(edges, counts)` pairs for every path whose vector is
/// not dominated, ties included.
pub fn brute_force_efficient(
    g: &CategoryGraph,
    s: &str,
    t: &str,
    cone: &ConeHRep,
    cap: usize,
) -> Result<Vec<(Vec<usize>, RatVector)>> {
    let paths = enumerate_simple_paths(g, s, t, cap)?;
    if paths.is_empty() {
        return Ok(Vec::new());
    }
    let counts = paths.iter().map(|p| counting_vector(p, g)).collect::<Result<Vec<_>>>()?;
    let kept = filter_nondominated(cone, &PointSet::new(counts)?)?;
    Ok(kept.iter().map(|(id, c)| (paths[id].clone(), c.clone())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::{facet_matrix, Weights};
    use crate::exactnum::int;

    #[test]
    fn diamond_with_back_edge() {
        let g = CategoryGraph::from_edge_list(
            2,
            &[
                ("s", "a", 1, int(1)),
                ("s", "b", 2, int(1)),
                ("a", "t", 1, int(1)),
                ("b", "t", 2, int(1)),
                ("a", "b", 1, int(1)),
                ("b", "s", 1, int(1)),
            ],
        )
        .unwrap();
        let p = enumerate_simple_paths(&g, "s", "t", 100).unwrap();
        assert_eq!(p, vec![vec![0, 4, 3], vec![0, 2], vec![1, 3]]);
        assert_eq!(enumerate_simple_paths(&g, "s", "s", 100).unwrap(), vec![Vec::<usize>::new()]);
        assert_eq!(enumerate_simple_paths(&g, "s", "t", 2), Err(Error::PathCapExceeded(2)));

        let cone = facet_matrix(&Weights::standard_ordinal(2)).unwrap();
        let eff = brute_force_efficient(&g, "s", "t", &cone, 100).unwrap();
        let vectors: Vec<RatVector> = eff.into_iter().map(|(_, c)| c).collect();
        // (2,1) and (0,2) both lose to (2,0)
        assert_eq!(vectors, vec![RatVector::from_ints(&[2, 0])]);
    }
}
