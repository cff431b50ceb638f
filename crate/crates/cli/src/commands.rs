use std::path::Path;

use avoidable::avoid::{
    avoidable_edges, avoidable_vertices, induced_paths, is_avoidable_path, is_pseudo_avoidable_edge,
};
use avoidable::clique::{brute_force_max_weight_clique, max_weight_clique, max_weight_clique_with_ordering};
use avoidable::graph::encode_graph6;
use avoidable::lab::generators::{all_labeled_graphs, random_graph, LABELED_BOUND};
use avoidable::lab::scan::graph6_lines;
use avoidable::lab::{check_conjecture, load_fixture, scan, verify_fixture, verify_transitive_corollaries, ScanReport, FIXTURE_NAMES};
use avoidable::orient::{check_hole_cyclic, hole_cyclic_orientation, is_one_perfect, recognize_one_perfectly_orientable};
use avoidable::search::{diametral_avoidable_pair, lbfs, lbfs_all_end_vertices, mcs, mcs_all_end_vertices, VertexOrdering};
use avoidable::triangulation::{
    elimination_fill, enumerate_minimal_triangulations, is_chordal, is_minimal_triangulation,
    minimal_triangulation_below,
};
use avoidable::{EdgeId, Graph, InducedPath, WeightedGraph};
use serde_json::{json, Value};

use crate::dot::{render, Highlight};
use crate::error::CliError;
use crate::input::{load_graph, load_orientation, load_ordering, load_weights, read_text, GraphArgs};
use crate::{
    Algorithm, AvoidableArgs, CliqueArgs, ConjectureCommand, FixtureArgs, Object, OrientArgs, Outcome,
    SearchArgs, TriangulateArgs,
};

fn outcome(payload: Value, diagnostics: Vec<String>) -> Result<Outcome, CliError> {
    Ok(Outcome { payload, diagnostics })
}

fn describe(loaded_from: &str, g: &Graph) -> String {
    format!("input: {loaded_from}, n={} m={}", g.n(), g.m())
}

pub fn avoidable(a: &AvoidableArgs) -> Result<Outcome, CliError> {
    let loaded = load_graph(&a.graph)?;
    let g = &loaded.graph;
    let diag = vec![describe(&loaded.description, g)];
    let single = matches!(a.object, Object::Vertex | Object::Edge | Object::Path);
    if single == a.ids.is_empty() {
        return Err(CliError::usage(if single {
            "--ids is required for a single vertex, edge or path"
        } else {
            "--ids only applies to --object vertex, edge or path"
        }));
    }
    let mut highlight = Highlight::default();
    let payload = match a.object {
        Object::Vertices => {
            let av = avoidable_vertices(g);
            highlight.marked = av.clone();
            json!({ "object": "vertices", "n": g.n(), "avoidable": av })
        }
        Object::Edges | Object::PseudoEdges => {
            let edges: Vec<EdgeId> = if a.object == Object::Edges {
                avoidable_edges(g)
            } else {
                g.edges()
                    .map(|e| is_pseudo_avoidable_edge(g, e).map(|ok| (e, ok)))
                    .collect::<Result<Vec<_>, _>>()?
                    .into_iter()
                    .filter_map(|(e, ok)| ok.then_some(e))
                    .collect()
            };
            let name = if a.object == Object::Edges { "edges" } else { "pseudo-edges" };
            json!({ "object": name, "m": g.m(), "avoidable": edges })
        }
        Object::Vertex | Object::Edge | Object::Path => {
            let expected = match a.object {
                Object::Vertex => Some(1),
                Object::Edge => Some(2),
                _ => None,
            };
            if expected.is_some_and(|k| k != a.ids.len()) {
                return Err(CliError::usage(format!("expected {} ids", expected.unwrap())));
            }
            let p = InducedPath::new(g, a.ids.clone())?;
            let (ok, cert) = is_avoidable_path(g, &p)?;
            highlight.marked = a.ids.clone();
            highlight.cycle = cert.cycle.clone();
            highlight.failure = cert.failure_witness.as_ref().map(|w| w.vertices().to_vec());
            let object = match a.object {
                Object::Vertex => "vertex",
                Object::Edge => "edge",
                _ => "path",
            };
            json!({
                "object": object,
                "ids": a.ids,
                "avoidable": ok,
                "witness": {
                    "extensions_checked": cert.extensions_checked,
                    "extension": cert.extension,
                    "cycle": cert.cycle,
                    "unclosable_extension": cert.failure_witness,
                },
            })
        }
        Object::Paths => {
            let k = a.k.ok_or_else(|| CliError::usage("--object paths needs --k"))?;
            let mut rows = Vec::new();
            let mut any = false;
            for p in induced_paths(g, k) {
                let ok = is_avoidable_path(g, &p)?.0;
                any |= ok;
                rows.push(json!({ "ids": p, "avoidable": ok }));
            }
            json!({ "object": "paths", "k": k, "count": rows.len(), "any_avoidable": any, "paths": rows })
        }
    };
    if let Some(path) = &a.dot {
        std::fs::write(path, render(g, &highlight))
            .map_err(|e| CliError::io(format!("{}: {e}", path.display())))?;
    }
    outcome(payload, diag)
}

pub fn clique(a: &CliqueArgs) -> Result<Outcome, CliError> {
    let loaded = load_graph(&a.graph)?;
    let mut diag = vec![describe(&loaded.description, &loaded.graph)];
    let n = loaded.graph.n();
    let weights = match (&a.weights, loaded.weights) {
        (Some(path), _) => {
            diag.push(format!("weights: {}", path.display()));
            load_weights(path, n)?
        }
        (None, Some(w)) => {
            diag.push("weights: from input".into());
            w
        }
        (None, None) => {
            diag.push("weights: uniform 1".into());
            vec![1; n]
        }
    };
    let wg = WeightedGraph::new(loaded.graph, weights)?;
    if a.brute {
        let r = brute_force_max_weight_clique(&wg)?;
        return outcome(json!({ "weight": r.weight, "vertices": r.vertices, "ordering": null }), diag);
    }
    let result = match &a.ordering {
        Some(path) => max_weight_clique_with_ordering(&wg, &load_ordering(path)?)?,
        None => max_weight_clique(&wg)?,
    };
    let mut payload = json!({
        "weight": result.weight,
        "vertices": result.vertices,
        "ordering": result.ordering_used,
    });
    if a.steps {
        payload["steps"] = json!(result.steps);
    }
    if a.oracle {
        let best = brute_force_max_weight_clique(&wg)?;
        let agrees = best.weight == result.weight;
        payload["oracle"] = json!({ "weight": best.weight, "vertices": best.vertices, "agrees": agrees });
        if !agrees {
            return Err(CliError::domain(format!(
                "solver weight {} differs from exhaustive optimum {}",
                result.weight, best.weight
            ))
            .with_payload(payload));
        }
    }
    outcome(payload, diag)
}

fn elimination_ordering(g: &Graph, spec: &str) -> Result<VertexOrdering, CliError> {
    Ok(match spec {
        "auto" => match is_chordal(g) {
            (true, Some(peo)) => peo,
            _ => lbfs(g, None)?.reversed(),
        },
        "lbfs" => lbfs(g, None)?.reversed(),
        "mcs" => mcs(g, None)?.reversed(),
        "identity" => VertexOrdering::identity(g.n()),
        path => load_ordering(Path::new(path))?,
    })
}

pub fn triangulate(a: &TriangulateArgs) -> Result<Outcome, CliError> {
    let loaded = load_graph(&a.graph)?;
    let g = &loaded.graph;
    let diag = vec![describe(&loaded.description, g)];
    let chordal = is_chordal(g).0;
    if a.enumerate {
        let all = enumerate_minimal_triangulations(g)?;
        let fills: Vec<Value> = all.iter().map(|t| json!(t.fill())).collect();
        return outcome(json!({ "chordal": chordal, "count": fills.len(), "minimal_fills": fills }), diag);
    }
    let sigma = elimination_ordering(g, &a.ordering)?;
    let mut t = elimination_fill(g, &sigma)?;
    let mut payload = json!({ "chordal": chordal, "ordering": sigma });
    if a.minimal {
        let before = t.fill().len();
        t = minimal_triangulation_below(g, &t.graph())?;
        payload["reduced_from"] = json!(before);
    }
    payload["fill"] = json!(t.fill());
    payload["fill_size"] = json!(t.fill().len());
    if a.check_minimal || a.minimal {
        payload["minimal"] = json!(is_minimal_triangulation(g, &t)?);
    }
    outcome(payload, diag)
}

pub fn orient(a: &OrientArgs) -> Result<Outcome, CliError> {
    let loaded = load_graph(&a.graph)?;
    let g = &loaded.graph;
    let diag = vec![describe(&loaded.description, g)];
    let payload = if a.recognize_1po {
        let o = recognize_one_perfectly_orientable(g);
        json!({ "one_perfectly_orientable": o.is_some(), "orientation": o })
    } else if a.hole_cyclic {
        let o = hole_cyclic_orientation(g)?;
        json!({ "hole_cyclically_orientable": o.is_some(), "orientation": o })
    } else {
        let path = a.verify.as_ref().expect("clap requires one mode");
        let o = load_orientation(path, g)?;
        let report = check_hole_cyclic(&o, a.max_hole_len)?;
        json!({ "orientation": o, "one_perfect": is_one_perfect(&o), "hole_cyclic": report })
    };
    outcome(payload, diag)
}

pub fn search(a: &SearchArgs) -> Result<Outcome, CliError> {
    let loaded = load_graph(&a.graph)?;
    let g = &loaded.graph;
    let diag = vec![describe(&loaded.description, g)];
    let (name, sigma) = match a.algorithm {
        Algorithm::Lbfs => ("lbfs", lbfs(g, a.start)?),
        Algorithm::Mcs => ("mcs", mcs(g, a.start)?),
    };
    let last = sigma.last();
    let mut payload = json!({
        "algorithm": name,
        "start": a.start,
        "ordering": sigma,
        "end_vertex": last,
        "end_vertex_avoidable": avoidable::avoid::is_avoidable_vertex(g, last),
    });
    if a.ends {
        let ends = match a.algorithm {
            Algorithm::Lbfs => lbfs_all_end_vertices(g)?,
            Algorithm::Mcs => mcs_all_end_vertices(g)?,
        };
        payload["end_vertices"] = json!(ends);
    }
    if a.diametral {
        payload["diametral_pair"] = json!(diametral_avoidable_pair(g)?);
    }
    outcome(payload, diag)
}

/// `3`, `1..3`, `1..=3` or `1,2,4`.
fn parse_k_range(text: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::usage(format!("--k {text:?}: expected N, A..B or a comma list"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let ks: Vec<usize> = if let Some((lo, hi)) = text.split_once("..") {
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        (num(lo)?..=num(hi)?).collect()
    } else {
        text.split(',').map(num).collect::<Result<_, _>>()?
    };
    if ks.is_empty() || ks.contains(&0) {
        return Err(bad());
    }
    Ok(ks)
}

fn report_payload(report: &ScanReport) -> Value {
    let mut v = json!(report);
    v["holds"] = json!(report.holds());
    v
}

pub fn conjecture(c: &ConjectureCommand) -> Result<Outcome, CliError> {
    match c {
        ConjectureCommand::Scan { k, n, stream, jobs, allow_n7 } => {
            let ks = parse_k_range(k)?;
            let (report, source) = match (n, stream) {
                (_, Some(path)) => {
                    let text = read_text(path)?;
                    (scan(text.lines(), &ks, *jobs), format!("stream {}", path.display()))
                }
                (Some(n), None) => {
                    let cap = if *allow_n7 { LABELED_BOUND } else { 6 };
                    if *n > cap {
                        return Err(avoidable::Error::BoundExceeded {
                            what: "vertices for labeled enumeration (7 needs --allow-n7)",
                            bound: cap,
                            actual: *n,
                        }
                        .into());
                    }
                    let mut lines = Vec::new();
                    for size in 1..=*n {
                        lines.extend(graph6_lines(all_labeled_graphs(size)?));
                    }
                    (scan(&lines, &ks, *jobs), format!("all labeled graphs on 1..={n} vertices"))
                }
                (None, None) => return Err(CliError::usage("conjecture scan needs --n or --stream")),
            };
            let diag = vec![format!("source: {source}"), format!("jobs: {jobs}")];
            outcome(report_payload(&report), diag)
        }
        ConjectureCommand::Check { graph, k } => {
            let loaded = load_graph(graph)?;
            let g = &loaded.graph;
            let failure = check_conjecture(g, *k);
            let payload = json!({
                "k": k,
                "induced_paths": induced_paths(g, *k).len(),
                "holds": failure.is_none(),
                "counterexample_paths": failure,
            });
            outcome(payload, vec![describe(&loaded.description, g)])
        }
        ConjectureCommand::Sample { n, p, count, seed, k, jobs } => {
            let ks = parse_k_range(k)?;
            let graphs = (0..*count as u64)
                .map(|i| random_graph(*n, *p, seed.wrapping_add(i)))
                .collect::<Result<Vec<_>, _>>()?;
            let report = scan(graph6_lines(graphs), &ks, *jobs);
            let diag = vec![format!("source: {count} random graphs G({n}, {p}), seeds {seed}..")];
            outcome(report_payload(&report), diag)
        }
    }
}

pub fn transitivity(graph: &GraphArgs) -> Result<Outcome, CliError> {
    let loaded = load_graph(graph)?;
    let report = verify_transitive_corollaries(&loaded.graph)?;
    let mut payload = json!(report);
    payload["holds"] = json!(report.holds());
    outcome(payload, vec![describe(&loaded.description, &loaded.graph)])
}

pub fn fixture(a: &FixtureArgs) -> Result<Outcome, CliError> {
    if a.list {
        return outcome(json!({ "fixtures": FIXTURE_NAMES }), vec![]);
    }
    let name = a.name.as_deref().expect("clap requires a name without --list");
    let f = load_fixture(name)?;
    let mut payload = json!(f);
    payload["graph6"] = json!(encode_graph6(&f.graph));
    if a.verify {
        let checks = verify_fixture(&f)?;
        let passed = checks.iter().all(|c| c.passed);
        payload["checks"] = json!(checks);
        payload["verified"] = json!(passed);
        if !passed {
            return Err(CliError::domain(format!("fixture {name}: a claim failed")).with_payload(payload));
        }
    }
    outcome(payload, vec![])
}
