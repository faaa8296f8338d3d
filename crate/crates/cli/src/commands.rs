use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::Path;

use ordcone::cone::detect_special;
use ordcone::exactnum::{parse_rational, RatMatrix, RatVector, Rational};
use ordcone::graph_io::parse_graph;
use ordcone::oracle::{double_description, enumerate_simple_paths, in_cone, sampled_dual_check};
use ordcone::pathsolve::{
    distinct_vectors, efficient_paths, efficient_paths_merged, search, weight_sweep, CategoryGraph, EfficientPath,
    SearchMode,
};
use ordcone::{
    classify_weights, dual_contains, facet_count, facet_matrix, filter_nondominated, merge_degenerate,
    spanning_rays, weakly_dominates, ConeHRep, Error, Generator, MergedWeights, PointSet, Weights,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::args::{
    Cli, Command, ConeArgs, DominatesArgs, ExportArgs, FilterArgs, GraphArgs, RouteArgs, SweepArgs, VerifyArgs,
    WeightArgs,
};
use crate::docs::*;
use crate::geojson;
use crate::Failure;

type Outcome<T = ()> = Result<T, Failure>;

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Cone(a) => cone(cli, a, out, err),
        Command::Dominates(a) => dominates(cli, a, out, err),
        Command::Filter(a) => filter(cli, a, out, err),
        Command::Route(a) => route(cli, a, out, err),
        Command::Sweep(a) => sweep(cli, a, out, err),
        Command::Verify(a) => verify(cli, a, out, err),
        Command::ExportGeojson(a) => export(a, out),
    }
}

fn read(path: &Path) -> Outcome<String> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Outcome<CategoryGraph> {
    parse_graph(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("documents serialize")
}

pub(crate) fn parse_list(text: &str) -> Outcome<Vec<Rational>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|p| parse_rational(p).map_err(Failure::from)).collect()
}

fn weight_error(e: Error) -> Failure {
    match e {
        Error::DimensionMismatch { expected, found } => {
            Failure::Usage(format!("expected {expected} weights per vector, found {found}"))
        }
        other => other.into(),
    }
}

/// Resolves K and both weight vectors. K comes from the graph when there is
/// one, otherwise from `--k` or the length of a per-index vector.
pub(crate) fn resolve_weights(a: &WeightArgs, graph_k: Option<usize>) -> Outcome<Weights> {
    let omega_vec = a.omega_vec.as_deref().map(parse_list).transpose()?;
    let gamma_vec = a.gamma_vec.as_deref().map(parse_list).transpose()?;
    let inferred = omega_vec.as_ref().or(gamma_vec.as_ref()).map(|v| v.len() + 1);
    let k = match (graph_k, a.k) {
        (Some(g), Some(k)) if g != k => return Err(Failure::Usage(format!("--k {k} but the graph has K = {g}"))),
        (Some(g), _) => g,
        (None, Some(k)) => k,
        (None, None) => inferred.ok_or_else(|| Failure::Usage("--k is required without a graph".into()))?,
    };
    if k == 0 {
        return Err(Failure::Usage("K must be at least 1".into()));
    }
    let broadcast = |scalar: &Option<String>, default: i64| -> Outcome<Vec<Rational>> {
        let value = match scalar {
            Some(s) => parse_rational(s)?,
            None => Rational::from_integer(default.into()),
        };
        Ok(vec![value; k - 1])
    };
    let omega = match omega_vec {
        Some(v) => v,
        None => broadcast(&a.omega, 1)?,
    };
    let gamma = match gamma_vec {
        Some(v) => v,
        None => broadcast(&a.gamma, 0)?,
    };
    classify_weights(k, omega.into(), gamma.into()).map_err(weight_error)
}

fn weights_doc(w: &Weights) -> WeightsDoc {
    WeightsDoc { k: w.k(), omega: decimals(w.omega()), gamma: decimals(w.gamma()) }
}

fn merge_doc(m: &MergedWeights) -> MergeDoc {
    MergeDoc {
        weights: weights_doc(&m.weights),
        groups: m.groups.clone(),
        lift: m.lift.rows().iter().map(decimals).collect(),
    }
}

/// Merges degenerate weights unless `--strict`.
fn prepare(cli: &Cli, w: &Weights, err: &mut dyn Write) -> Outcome<Option<MergedWeights>> {
    let degenerate = w.degenerate_indices();
    if degenerate.is_empty() {
        return Ok(None);
    }
    if cli.strict {
        return Err(Failure::Weights(format!(
            "omega_i * gamma_i = 1 at indices {degenerate:?}; the cone is not pointed (merging disabled by --strict)"
        )));
    }
    let m = merge_degenerate(w)?;
    writeln!(
        err,
        "notice: omega_i * gamma_i = 1 at indices {degenerate:?}; merged categories {:?} into weights {}",
        m.groups, m.weights
    )?;
    Ok(Some(m))
}

fn selection_label(sel: &[Generator]) -> String {
    sel.iter().map(|g| g.to_string()).collect()
}

fn facets_doc(a: &ConeHRep) -> Vec<FacetDoc> {
    a.matrix()
        .rows()
        .iter()
        .zip(a.selection())
        .map(|(row, sel)| FacetDoc { selection: selection_label(sel), normal: decimals(row) })
        .collect()
}

fn cone(cli: &Cli, a: &ConeArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let w = resolve_weights(&a.weights, None)?;
    let merged = prepare(cli, &w, err)?;
    let v = spanning_rays(&w);
    let rays = (0..v.num_rays())
        .map(|j| {
            let (g, i) = v.label(j);
            RayDoc { label: format!("{g}{i}"), vector: decimals(&v.rays().column(j)), extreme: v.extreme_mask()[j] }
        })
        .collect();
    let pointed_weights = merged.as_ref().map_or(&w, |m| &m.weights);
    let a_mat = facet_matrix(pointed_weights)?;
    let degenerate = w.degenerate_indices();
    let doc = ConeDoc {
        weights: weights_doc(&w),
        class: if degenerate.is_empty() { "pointed".into() } else { "degenerate".into() },
        degenerate_indices: degenerate,
        rays,
        facets: facets_doc(&a_mat),
        facet_count: a_mat.num_facets(),
        formula_count: facet_count(pointed_weights).ok(),
        special_case: detect_special(&w).map(|k| k.name().to_string()),
        merge: merged.as_ref().map(merge_doc),
    };
    if cli.json {
        writeln!(out, "{}", to_json(&doc))?;
        return Ok(());
    }
    writeln!(out, "K = {}", doc.weights.k)?;
    writeln!(out, "omega = ({})", doc.weights.omega.join(", "))?;
    writeln!(out, "gamma = ({})", doc.weights.gamma.join(", "))?;
    match doc.class.as_str() {
        "pointed" => writeln!(out, "class: pointed")?,
        _ => writeln!(out, "class: degenerate at indices {:?}", doc.degenerate_indices)?,
    }
    writeln!(out, "spanning rays:")?;
    for r in &doc.rays {
        let mark = if r.extreme { "extreme" } else { "redundant" };
        writeln!(out, "  {:<4} ({})  {mark}", r.label, r.vector.join(", "))?;
    }
    if let Some(m) = &doc.merge {
        writeln!(out, "merge: categories {:?} -> K' = {}", m.groups, m.weights.k)?;
        writeln!(out, "  omega' = ({})", m.weights.omega.join(", "))?;
        writeln!(out, "  gamma' = ({})", m.weights.gamma.join(", "))?;
        writeln!(out, "facets of the merged cone:")?;
    } else {
        writeln!(out, "facets:")?;
    }
    for f in &doc.facets {
        writeln!(out, "  [{}]  ({})", f.selection, f.normal.join(", "))?;
    }
    match doc.formula_count {
        Some(c) => writeln!(out, "facet count: {} (closed form {c})", doc.facet_count)?,
        None => writeln!(out, "facet count: {} (closed form not applicable: some omega_i = 0)", doc.facet_count)?,
    }
    writeln!(out, "special case: {}", doc.special_case.as_deref().unwrap_or("none"))?;
    Ok(())
}

fn parse_point(text: &str, k: usize) -> Outcome<RatVector> {
    let v: RatVector = parse_list(text)?.into();
    if v.dim() != k {
        return Err(Failure::Usage(format!("vector {text:?} has {} entries, K = {k}", v.dim())));
    }
    Ok(v)
}

/// Cone and lift used to compare vectors of the original space.
fn comparison_cone(w: &Weights, merged: &Option<MergedWeights>) -> Outcome<(ConeHRep, RatMatrix)> {
    match merged {
        Some(m) => Ok((facet_matrix(&m.weights)?, m.lift.clone())),
        None => Ok((facet_matrix(w)?, RatMatrix::identity(w.k()))),
    }
}

fn dominates(cli: &Cli, a: &DominatesArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let inferred_k = a.y1.split(',').count();
    let mut wa = a.weights.clone();
    if wa.k.is_none() && wa.omega_vec.is_none() && wa.gamma_vec.is_none() {
        wa.k = Some(inferred_k);
    }
    let w = resolve_weights(&wa, None)?;
    let y1 = parse_point(&a.y1, w.k())?;
    let y2 = parse_point(&a.y2, w.k())?;
    let merged = prepare(cli, &w, err)?;
    let (cone, lift) = comparison_cone(&w, &merged)?;
    let (l1, l2) = (lift.mat_vec(&y1)?, lift.mat_vec(&y2)?);
    let weakly = weakly_dominates(&cone, &l1, &l2)?;
    let reverse_weakly = weakly_dominates(&cone, &l2, &l1)?;
    let doc = DominanceDoc {
        y1: decimals(&y1),
        y2: decimals(&y2),
        weakly,
        strictly: weakly && !reverse_weakly,
        reverse_weakly,
        merged: merged.is_some(),
    };
    if cli.json {
        writeln!(out, "{}", to_json(&doc))?;
    } else {
        let yes = |b: bool| if b { "yes" } else { "no" };
        writeln!(out, "y1 weakly dominates y2: {}", yes(doc.weakly))?;
        writeln!(out, "y1 strictly dominates y2: {}", yes(doc.strictly))?;
        writeln!(out, "y2 weakly dominates y1: {}", yes(doc.reverse_weakly))?;
    }
    Ok(())
}

fn json_rational(v: &serde_json::Value) -> Outcome<Rational> {
    match v {
        serde_json::Value::String(s) => Ok(parse_rational(s)?),
        serde_json::Value::Number(n) => Ok(parse_rational(&n.to_string())?),
        other => Err(Failure::Usage(format!("expected a number or decimal string, found {other}"))),
    }
}

fn read_points(path: &Path) -> Outcome<Vec<RatVector>> {
    let value: serde_json::Value =
        serde_json::from_str(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let list = match &value {
        serde_json::Value::Array(a) => a,
        serde_json::Value::Object(o) => match o.get("points") {
            Some(serde_json::Value::Array(a)) => a,
            _ => return Err(Failure::Usage("point file needs a \"points\" array".into())),
        },
        _ => return Err(Failure::Usage("point file must hold an array of points".into())),
    };
    list.iter()
        .map(|p| match p {
            serde_json::Value::Array(xs) => xs.iter().map(json_rational).collect::<Outcome<RatVector>>(),
            other => Err(Failure::Usage(format!("point must be an array, found {other}"))),
        })
        .collect()
}

fn filter(cli: &Cli, a: &FilterArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let points = read_points(&a.points)?;
    let first_dim = points.first().map(RatVector::dim);
    let mut wa = a.weights.clone();
    if wa.k.is_none() && wa.omega_vec.is_none() && wa.gamma_vec.is_none() {
        wa.k = first_dim;
    }
    let w = resolve_weights(&wa, None)?;
    let merged = prepare(cli, &w, err)?;
    let (cone, lift) = comparison_cone(&w, &merged)?;
    let set = PointSet::new(points.clone())?;
    if set.dim().is_some_and(|d| d != w.k()) {
        return Err(Failure::Usage(format!("points have dimension {}, K = {}", set.dim().unwrap(), w.k())));
    }
    let lifted = PointSet::new(points.iter().map(|p| lift.mat_vec(p)).collect::<Result<_, _>>()?)?;
    let kept = filter_nondominated(&cone, &lifted)?;
    let doc = FilterDoc {
        total: points.len(),
        nondominated: kept.ids().iter().map(|&id| PointDoc { id, point: decimals(&points[id]) }).collect(),
        merged: merged.is_some(),
    };
    if cli.json {
        writeln!(out, "{}", to_json(&doc))?;
    } else {
        writeln!(out, "{} of {} points are non-dominated", doc.nondominated.len(), doc.total)?;
        for p in &doc.nondominated {
            writeln!(out, "  #{:<4} ({})", p.id, p.point.join(", "))?;
        }
    }
    Ok(())
}

fn mode_name(mode: SearchMode) -> &'static str {
    match mode {
        SearchMode::AllPaths => "all_paths",
        SearchMode::OnePerVector => "one_per_vector",
    }
}

/// Runs the search and packs the result document.
pub(crate) fn route_document(
    g: &CategoryGraph,
    ga: &GraphArgs,
    w: &Weights,
    merged: &Option<MergedWeights>,
    cap: usize,
) -> Outcome<ResultDoc> {
    let mode: SearchMode = ga.mode.into();
    let (paths, objectives) = match merged {
        Some(m) => (
            efficient_paths_merged(g, &ga.source, &ga.target, m, mode, cap)?,
            facet_matrix(&m.weights)?.num_facets(),
        ),
        None => (efficient_paths(g, &ga.source, &ga.target, w, mode, cap)?, facet_matrix(w)?.num_facets()),
    };
    let summary = SummaryDoc { paths: paths.len(), vectors: distinct_vectors(&paths) };
    Ok(ResultDoc {
        source: ga.source.clone(),
        target: ga.target.clone(),
        mode: mode_name(mode).into(),
        weights: weights_doc(w),
        merge: merged.as_ref().map(merge_doc),
        objectives,
        paths: paths.iter().map(|p| path_doc(g, p)).collect(),
        summary,
    })
}

fn path_doc(g: &CategoryGraph, p: &EfficientPath) -> PathDoc {
    PathDoc {
        nodes: p.nodes.iter().map(|&n| g.nodes()[n].id.clone()).collect(),
        edges: p.edges.clone(),
        counts: decimals(&p.counts),
        transformed: decimals(&p.transformed),
    }
}

fn route(cli: &Cli, a: &RouteArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let g = load_graph(&a.graph.graph)?;
    let w = resolve_weights(&a.weights, Some(g.k()))?;
    let merged = prepare(cli, &w, err)?;
    let doc = route_document(&g, &a.graph, &w, &merged, cli.cap)?;
    let text = to_json(&doc);
    if let Some(path) = &a.out {
        write_file(path, &format!("{text}\n"))?;
    }
    if cli.json {
        writeln!(out, "{text}")?;
        return Ok(());
    }
    writeln!(
        out,
        "{} efficient path(s), {} distinct count vector(s) from {} to {}",
        doc.summary.paths, doc.summary.vectors, doc.source, doc.target
    )?;
    for (i, p) in doc.paths.iter().enumerate() {
        writeln!(out, "  #{i:<3} counts ({})  {}", p.counts.join(", "), p.nodes.join(" -> "))?;
    }
    Ok(())
}

struct GridPoint {
    omega: String,
    gamma: String,
    weights: Result<Weights, Failure>,
}

fn sweep_grid(a: &SweepArgs, k: usize) -> Outcome<Vec<GridPoint>> {
    let wa = |omega: Option<String>, gamma: Option<String>, omega_vec, gamma_vec| WeightArgs {
        k: Some(k),
        omega,
        gamma,
        omega_vec,
        gamma_vec,
    };
    let mut grid = Vec::new();
    match (&a.omega_grid, &a.gamma_grid) {
        (Some(og), Some(gg)) => {
            for o in og.split(',').map(str::trim) {
                for g in gg.split(',').map(str::trim) {
                    let weights = resolve_weights(&wa(Some(o.into()), Some(g.into()), None, None), Some(k));
                    grid.push(GridPoint { omega: o.into(), gamma: g.into(), weights });
                }
            }
        }
        _ if !a.points.is_empty() => {
            for p in &a.points {
                let (o, g) = p
                    .split_once(':')
                    .ok_or_else(|| Failure::Usage(format!("grid point {p:?} must look like OMEGA_VEC:GAMMA_VEC")))?;
                let weights = resolve_weights(&wa(None, None, Some(o.into()), Some(g.into())), Some(k));
                grid.push(GridPoint { omega: o.replace(',', ";"), gamma: g.replace(',', ";"), weights });
            }
        }
        _ => return Err(Failure::Usage("give --omega-grid and --gamma-grid, or at least one --point".into())),
    }
    Ok(grid)
}

fn sweep(cli: &Cli, a: &SweepArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let g = load_graph(&a.graph.graph)?;
    g.node_index(&a.graph.source)?;
    g.node_index(&a.graph.target)?;
    let grid = sweep_grid(a, g.k())?;
    let valid: Vec<Weights> = grid.iter().filter_map(|p| p.weights.as_ref().ok().cloned()).collect();
    let mode: SearchMode = a.graph.mode.into();
    let mut results =
        weight_sweep(&g, &a.graph.source, &a.graph.target, &valid, mode, cli.cap, !cli.strict).into_iter();
    let mut rows = Vec::new();
    for p in &grid {
        let mut row = SweepRowDoc {
            omega: p.omega.clone(),
            gamma: p.gamma.clone(),
            efficient_vectors: None,
            efficient_paths: None,
            runtime_ms: None,
            status: String::new(),
        };
        match &p.weights {
            Err(f) => row.status = format!("error: {f}"),
            Ok(_) => {
                let r = results.next().expect("one result per valid grid point");
                if !a.no_runtime {
                    row.runtime_ms = Some(format!("{:.3}", r.elapsed.as_secs_f64() * 1000.0));
                }
                match &r.outcome {
                    Ok(paths) => {
                        row.efficient_vectors = Some(distinct_vectors(paths));
                        row.efficient_paths = Some(paths.len());
                        row.status = if r.merged { "merged".into() } else { "ok".into() };
                    }
                    Err(e) => row.status = format!("error: {e}"),
                }
            }
        }
        if row.status.starts_with("error") {
            writeln!(err, "notice: omega={} gamma={}: {}", row.omega, row.gamma, row.status)?;
        }
        rows.push(row);
    }
    let text = if cli.json {
        format!("{}\n", to_json(&rows))
    } else {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &rows {
            w.serialize(row).map_err(|e| Failure::Usage(e.to_string()))?;
        }
        String::from_utf8(w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?).expect("csv is utf-8")
    };
    match &a.out {
        Some(path) => write_file(path, &text),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

struct Check {
    name: &'static str,
    status: &'static str,
    detail: String,
}

impl Check {
    fn pass(name: &'static str, detail: String) -> Check {
        Check { name, status: "PASS", detail }
    }
    fn fail(name: &'static str, detail: String) -> Check {
        Check { name, status: "FAIL", detail }
    }
    fn skip(name: &'static str, detail: String) -> Check {
        Check { name, status: "SKIP", detail }
    }
}

fn verify(cli: &Cli, a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let graph = a.graph.as_deref().map(load_graph).transpose()?;
    let w = resolve_weights(&a.weights, graph.as_ref().map(CategoryGraph::k))?;
    let merged = prepare(cli, &w, err)?;
    let cone_weights = merged.as_ref().map_or(&w, |m| &m.weights);
    let k = cone_weights.k();

    let mut a_mat = facet_matrix(cone_weights)?.matrix().clone();
    if let Some(row) = a.corrupt_facet {
        if row >= a_mat.nrows() {
            return Err(Failure::Usage(format!("--corrupt-facet {row}: only {} facet rows", a_mat.nrows())));
        }
        let mut rows = a_mat.rows().to_vec();
        rows[row] = rows[row].add_scaled(&Rational::from_integer(1.into()), &RatVector::unit(k, k - 1));
        a_mat = RatMatrix::with_cols(rows, k)?;
        writeln!(err, "notice: facet row {row} perturbed")?;
    }
    let a_cone = ConeHRep::from_matrix(a_mat.clone());
    let rays = spanning_rays(cone_weights).rays().clone();

    let mut checks = Vec::new();
    let dd = double_description(&rays)?;
    let rows: Vec<RatVector> = a_mat.rows().iter().map(|r| r.normalize_ray()).collect::<Result<_, _>>()?;
    let extra: Vec<usize> = (0..rows.len()).filter(|&i| !dd.contains(&rows[i])).collect();
    let ours: BTreeSet<&RatVector> = rows.iter().collect();
    let missing = dd.iter().filter(|f| !ours.contains(f)).count();
    checks.push(if extra.is_empty() && missing == 0 {
        Check::pass("facets", format!("{} facet rows match the double description", rows.len()))
    } else {
        let offending: Vec<String> =
            extra.iter().map(|&i| format!("row {i} ({})", decimals(a_mat.row(i)).join(", "))).collect();
        Check::fail(
            "facets",
            format!("not facets of the cone: [{}]; {missing} facet(s) missing", offending.join("; ")),
        )
    });

    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let mut bad = None;
    for _ in 0..a.samples {
        let y1: RatVector = (0..k).map(|_| small(&mut rng)).collect();
        let y2 = if rng.gen_bool(0.5) {
            let mut d = y1.clone();
            for col in rays.columns() {
                d = d.add_scaled(&small(&mut rng), &col);
            }
            d
        } else {
            (0..k).map(|_| small(&mut rng)).collect()
        };
        let by_facets = weakly_dominates(&a_cone, &y1, &y2)?;
        let by_rays = in_cone(&rays, &(&y2 - &y1))?;
        let sampled = sampled_dual_check(cone_weights, &y1, &y2, 10, rng.gen());
        if by_facets != by_rays || (by_rays && !sampled) {
            bad = Some(format!("y1 = ({y1}), y2 = ({y2}): facets {by_facets}, rays {by_rays}, dual samples {sampled}"));
            break;
        }
    }
    checks.push(match bad {
        None => Check::pass("dominance", format!("{} random pairs agree with ray membership", a.samples)),
        Some(d) => Check::fail("dominance", d),
    });

    if let Some(m) = &merged {
        let pulled = a_mat.mat_mul(&m.lift)?;
        let outside: Vec<usize> = (0..pulled.nrows()).filter(|&i| !dual_contains(&w, pulled.row(i))).collect();
        checks.push(if outside.is_empty() {
            Check::pass("merge", "every merged facet lifts to a representation of the original weights".into())
        } else {
            Check::fail("merge", format!("lifted rows {outside:?} violate the original weight constraints"))
        });
    }

    if let (Some(g), Some(s), Some(t)) = (&graph, &a.source, &a.target) {
        checks.push(verify_paths(g, s, t, &a_mat, merged.as_ref().map(|m| &m.lift), cli.cap)?);
    }

    let failed = checks.iter().any(|c| c.status == "FAIL");
    if cli.json {
        let docs: Vec<CheckDoc> = checks
            .iter()
            .map(|c| CheckDoc { name: c.name.into(), status: c.status.into(), detail: c.detail.clone() })
            .collect();
        writeln!(out, "{}", to_json(&docs))?;
    } else {
        for c in &checks {
            writeln!(out, "{} {}: {}", c.status, c.name, c.detail)?;
        }
    }
    if failed {
        return Err(Failure::Mismatch("verification failed".into()));
    }
    Ok(())
}

fn small(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(0..=8).into(), rng.gen_range(1..=3).into())
}

fn verify_paths(
    g: &CategoryGraph,
    s: &str,
    t: &str,
    a_mat: &RatMatrix,
    lift: Option<&RatMatrix>,
    cap: usize,
) -> Outcome<Check> {
    let all = match enumerate_simple_paths(g, s, t, cap) {
        Ok(p) => p,
        Err(Error::PathCapExceeded(c)) => {
            return Ok(Check::skip("paths", format!("more than {c} simple paths; enumeration skipped")))
        }
        Err(e) => return Err(e.into()),
    };
    let transform = match lift {
        Some(l) => a_mat.mat_mul(l)?,
        None => a_mat.clone(),
    };
    let solver = search(g, s, t, &transform, SearchMode::AllPaths, cap)?;
    let images: Vec<RatVector> = all
        .iter()
        .map(|p| transform.mat_vec(&ordcone::counting_vector(p, g)?))
        .collect::<Result<_, _>>()?;
    let brute: BTreeSet<Vec<usize>> = if all.is_empty() {
        BTreeSet::new()
    } else {
        let kept = filter_nondominated(&ConeHRep::pareto(transform.nrows()), &PointSet::new(images)?)?;
        kept.ids().iter().map(|&i| all[i].clone()).collect()
    };
    let found: BTreeSet<Vec<usize>> = solver.iter().map(|p| p.edges.clone()).collect();
    if found == brute && found.len() == solver.len() {
        Ok(Check::pass("paths", format!("{} efficient paths match enumeration of {} simple paths", found.len(), all.len())))
    } else {
        let only_solver = found.difference(&brute).count();
        let only_brute = brute.difference(&found).count();
        Ok(Check::fail(
            "paths",
            format!("{only_solver} path(s) only from the search, {only_brute} only from enumeration"),
        ))
    }
}

fn export(a: &ExportArgs, out: &mut dyn Write) -> Outcome {
    let doc: ResultDoc = serde_json::from_str(&read(&a.result)?)
        .map_err(|e| Failure::Usage(format!("{}: {e}", a.result.display())))?;
    let g = load_graph(&a.graph)?;
    let collection = geojson::feature_collection(&doc, &g, a.edges)?;
    let text = format!("{}\n", to_json(&collection));
    match &a.out {
        Some(path) => write_file(path, &text),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}
