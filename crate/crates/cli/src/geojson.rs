use std::collections::BTreeSet;

use ordcone::exactnum::to_decimal_string;
use ordcone::pathsolve::CategoryGraph;
use serde_json::{json, Value};

use crate::docs::ResultDoc;
use crate::Failure;

fn position(g: &CategoryGraph, node: usize) -> Option<Value> {
    let n = &g.nodes()[node];
    Some(json!([n.lon?, n.lat?]))
}

fn positions(g: &CategoryGraph, nodes: &[usize]) -> Result<Vec<Value>, Failure> {
    let missing: BTreeSet<&str> =
        nodes.iter().filter(|&&n| position(g, n).is_none()).map(|&n| g.nodes()[n].id.as_str()).collect();
    if !missing.is_empty() {
        let names: Vec<&str> = missing.into_iter().collect();
        return Err(Failure::Usage(format!("nodes without coordinates: {}", names.join(", "))));
    }
    Ok(nodes.iter().map(|&n| position(g, n).expect("checked above")).collect())
}

fn geometry(coords: Vec<Value>) -> Value {
    if coords.len() == 1 {
        json!({"type": "Point", "coordinates": coords[0]})
    } else {
        json!({"type": "LineString", "coordinates": coords})
    }
}

pub fn feature_collection(doc: &ResultDoc, g: &CategoryGraph, with_edges: bool) -> Result<Value, Failure> {
    let mut features = Vec::new();
    let mut needed = Vec::new();
    let mut node_lists = Vec::new();
    for (i, p) in doc.paths.iter().enumerate() {
        let nodes = p.nodes.iter().map(|id| g.node_index(id)).collect::<Result<Vec<_>, _>>()?;
        for &e in &p.edges {
            if e >= g.edges().len() {
                return Err(Failure::Usage(format!("path {i} uses edge {e}, which the graph does not have")));
            }
        }
        needed.extend(nodes.iter().copied());
        node_lists.push(nodes);
    }
    if with_edges {
        needed.extend(g.edges().iter().flat_map(|e| [e.from, e.to]));
    }
    positions(g, &needed)?;

    for (i, (p, nodes)) in doc.paths.iter().zip(&node_lists).enumerate() {
        let breakdown: Vec<Value> = (1..=g.k())
            .filter_map(|c| {
                let edges: Vec<_> = p.edges.iter().map(|&e| &g.edges()[e]).filter(|e| e.category == c).collect();
                if edges.is_empty() {
                    return None;
                }
                let length = edges.iter().map(|e| e.length.clone()).sum();
                Some(json!({"category": c, "length": to_decimal_string(&length), "edges": edges.len()}))
            })
            .collect();
        features.push(json!({
            "type": "Feature",
            "geometry": geometry(positions(g, nodes)?),
            "properties": {
                "layer": "paths",
                "path_index": i,
                "count_vector": p.counts,
                "category_breakdown": breakdown,
            },
        }));
    }
    if with_edges {
        for e in g.edges() {
            features.push(json!({
                "type": "Feature",
                "geometry": geometry(positions(g, &[e.from, e.to])?),
                "properties": {
                    "layer": "edges",
                    "category": e.category,
                    "length": to_decimal_string(&e.length),
                    "from": g.nodes()[e.from].id,
                    "to": g.nodes()[e.to].id,
                },
            }));
        }
    }
    Ok(json!({"type": "FeatureCollection", "features": features}))
}
