use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use rooted_minors::connectivity::{is_k_connected, kappa_x, min_x_separator};
use rooted_minors::generators::{
    gen_fl, gen_gt, gen_hl, gen_random_planar, random_planar_instance,
};
use rooted_minors::graph::{complete_bipartite, complete_graph, cycle_graph};
use rooted_minors::io::{write_graph, GraphFile, Names};
use rooted_minors::lifting::{lift_cycle, lift_path, lift_tree, GeneralizedStructure};
use rooted_minors::minor::{
    four_connected_x_minor, topological_x_minor, Certificate, ContractionTrace, TopologicalOrder,
};
use rooted_minors::oracles::{
    exists_x_spanning_cycle, exists_x_spanning_path, exists_x_spanning_tree, find_tutte_path_brute,
    has_minor_brute, is_tutte_path, tutte_paths_brute,
};
use rooted_minors::pipeline::{self, Artifact, Options, Outcome as StepOutcome, Run, Variant};
use rooted_minors::{Edge, Graph, RootedGraph, VertexId, VertexSet};

use crate::args::{Command, FamilyArg, Global, OracleFlags, OracleKind, Theorem, VerifyKind};
use crate::failure::{usage, violation, Failure, Outcome};
use crate::formats::{
    join, parse_structure, read, read_graph, resolve, resolve_all, resolve_pair, write_structure,
    CertificateJson, Structure,
};

pub const REPORT_SCHEMA: &str = "rminor.pipeline.v1";

fn emit(out: Option<&Path>, text: &str) -> Outcome {
    match out {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn rooted(file: &GraphFile) -> Outcome<RootedGraph> {
    Ok(RootedGraph::new(file.graph.clone(), file.roots.clone())?)
}

fn first_two_roots(rg: &RootedGraph) -> Outcome<(VertexId, VertexId)> {
    let mut it = rg.roots().iter().copied();
    match (it.next(), it.next()) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => usage("at least two roots are needed"),
    }
}

fn ends(
    names: &Names,
    rg: &RootedGraph,
    from: &Option<String>,
    to: &Option<String>,
) -> Outcome<(VertexId, VertexId)> {
    match (from, to) {
        (Some(a), Some(b)) => Ok((resolve(names, a)?, resolve(names, b)?)),
        (None, None) => first_two_roots(rg),
        _ => usage("--from and --to go together"),
    }
}

pub fn run(command: Command, global: &Global) -> Outcome {
    match command {
        Command::Generate { family, out } => generate(family, global, out.as_deref()),
        Command::Kappa { file } => kappa(&file, global),
        Command::Separator { file } => separator(&file, global),
        Command::Minor {
            file,
            k,
            topological,
            out,
        } => minor(&file, k as usize, topological, out.as_deref()),
        Command::LiftTree {
            graph,
            cert,
            bound,
            tree,
            out,
        } => lift_tree_cmd(&graph, &cert, bound, tree.as_deref(), out.as_deref()),
        Command::LiftPath {
            graph,
            cert,
            path,
            from,
            to,
            out,
        } => lift_walk(
            &graph,
            &cert,
            false,
            path.as_deref(),
            (&from, &to),
            out.as_deref(),
        ),
        Command::LiftCycle {
            graph,
            cert,
            cycle,
            out,
        } => lift_walk(
            &graph,
            &cert,
            true,
            cycle.as_deref(),
            (&None, &None),
            out.as_deref(),
        ),
        Command::Oracle { kind, file, flags } => oracle(kind, &file, &flags, global),
        Command::Pipeline {
            theorem,
            file,
            variant,
            bound,
            from,
            to,
            force,
            avoid,
            out,
        } => {
            let flags = PipelineFlags {
                bound,
                from,
                to,
                force,
                avoid,
                out,
            };
            pipeline_cmd(theorem, &file, &variant, &flags, global)
        }
        Command::Verify { graph, file, kind } => verify(&graph, &file, kind, global),
    }
}

fn generate(family: FamilyArg, global: &Global, out: Option<&Path>) -> Outcome {
    let inst = match family {
        FamilyArg::Gt { t } => gen_gt(t)?,
        FamilyArg::Fl { l, whites } => gen_fl(l, whites.unwrap_or(l + 1))?,
        FamilyArg::Hl { l } => gen_hl(l)?,
        FamilyArg::Planar { n, seed, roots } => {
            let seed = seed.or(global.seed).unwrap_or(0);
            match roots {
                Some(k) => random_planar_instance(n, k, seed)?,
                None => {
                    let g = gen_random_planar(n, seed)?;
                    let names = Names::numeric(&g);
                    return emit(out, &write_graph(&g, &g.vertex_set(), &names));
                }
            }
        }
    };
    emit(
        out,
        &write_graph(inst.rooted.graph(), inst.rooted.roots(), &inst.names),
    )
}

fn kappa(file: &Path, global: &Global) -> Outcome {
    let f = read_graph(file)?;
    let rg = rooted(&f)?;
    let k = kappa_x(&rg);
    if global.json {
        let v = json!({"kappa": k, "n": f.graph.vertex_count(), "m": f.graph.edge_count(), "roots": f.roots.len()});
        println!("{v}");
    } else {
        println!("{k}");
    }
    Ok(())
}

fn separator(file: &Path, global: &Global) -> Outcome {
    let f = read_graph(file)?;
    let rg = rooted(&f)?;
    let n = &f.names;
    let s = min_x_separator(&rg);
    if global.json {
        let v = match &s {
            Some(s) => json!({
                "separator": s.vertices.iter().map(|&v| n.name(v)).collect::<Vec<_>>(),
                "witnesses": [n.name(s.witnesses.0), n.name(s.witnesses.1)],
            }),
            None => json!({"separator": null, "witnesses": null}),
        };
        println!("{v}");
    } else {
        match s {
            Some(s) => {
                println!("S {}", join(n, s.vertices.iter().copied()));
                println!(
                    "WITNESSES {} {}",
                    n.name(s.witnesses.0),
                    n.name(s.witnesses.1)
                );
            }
            None => println!("none"),
        }
    }
    Ok(())
}

fn minor(file: &Path, k: usize, topological: bool, out: Option<&Path>) -> Outcome {
    let f = read_graph(file)?;
    let rg = rooted(&f)?;
    let json = if k == 4 {
        if topological {
            return usage("--topological is only valid for k <= 3");
        }
        let (cert, trace) = four_connected_x_minor(&rg)?;
        certified(&cert)?;
        CertificateJson::new(&cert, &trace, None, &f.names)
    } else {
        let (_, emb) = topological_x_minor(&rg, TopologicalOrder::try_from(k)?)?;
        let cert = emb.to_certificate(rg.graph(), rg.roots());
        certified(&cert)?;
        let trace = cert.derive_trace()?;
        CertificateJson::new(&cert, &trace, topological.then_some(&emb), &f.names)
    };
    emit(out, &json.to_json())
}

/// Certificate check with the violated clause as the message.
fn certified(c: &Certificate) -> Outcome {
    c.verify().map_err(|v| Failure::Violation(v.to_string()))
}

fn load_certificate(graph: &Path, cert: &Path) -> Outcome<(GraphFile, Certificate, Vec<Edge>)> {
    let f = read_graph(graph)?;
    let (c, trace) = CertificateJson::parse(&read(cert)?)?.resolve(&f)?;
    certified(&c)?;
    Ok((f, c, trace))
}

fn minor_rooted(c: &Certificate) -> Outcome<RootedGraph> {
    Ok(RootedGraph::new(c.minor.clone(), c.roots.clone())?)
}

fn lift_tree_cmd(
    graph: &Path,
    cert: &Path,
    bound: usize,
    tree: Option<&Path>,
    out: Option<&Path>,
) -> Outcome {
    let (f, c, _) = load_certificate(graph, cert)?;
    let t = match tree {
        Some(p) => match parse_structure(&read(p)?, &f.names)? {
            Structure::Tree(t) => t.tree,
            _ => return usage("the tree file must hold a TREE"),
        },
        None => {
            match exists_x_spanning_tree(&RootedGraph::spanning(c.minor.clone())?, bound, None)? {
                Some(t) => t.tree,
                None => {
                    return violation(format!(
                        "the minor has no spanning tree of maximum degree {bound}"
                    ))
                }
            }
        }
    };
    let lifted = lift_tree(&c, &t, bound)?;
    emit(out, &write_structure(&Structure::Tree(lifted), &f.names))
}

fn lift_walk(
    graph: &Path,
    cert: &Path,
    closed: bool,
    walk: Option<&Path>,
    (from, to): (&Option<String>, &Option<String>),
    out: Option<&Path>,
) -> Outcome {
    let (f, c, _) = load_certificate(graph, cert)?;
    let spine = match walk {
        Some(p) => match parse_structure(&read(p)?, &f.names)? {
            Structure::Walk { walk, .. } if walk.closed == closed => walk.spine,
            _ => {
                return usage(format!(
                    "the file must hold a {}",
                    if closed { "CYCLE" } else { "PATH" }
                ))
            }
        },
        None => {
            let m = minor_rooted(&c)?;
            let found = if closed {
                exists_x_spanning_cycle(&m, &VertexSet::new())?
            } else {
                let (a, b) = ends(&f.names, &m, from, to)?;
                exists_x_spanning_path(&m, a, b, &[])?
            };
            match found {
                Some(s) => s,
                None => return violation("the minor has no X-spanning structure of this kind"),
            }
        }
    };
    let lifted = if closed {
        lift_cycle(&c, &spine)?
    } else {
        lift_path(&c, &spine)?
    };
    let s = Structure::Walk {
        walk: lifted,
        avoid: VertexSet::new(),
        force: None,
    };
    emit(out, &write_structure(&s, &f.names))
}

fn pattern(text: &str) -> Outcome<Graph> {
    let lower = text.to_ascii_lowercase();
    let num = |s: &str| s.parse::<usize>().ok();
    if let Some(rest) = lower.strip_prefix('k') {
        match rest.split(',').collect::<Vec<_>>()[..] {
            [n] if num(n).is_some() => return Ok(complete_graph(num(n).unwrap())),
            [a, b] if num(a).is_some() && num(b).is_some() => {
                return Ok(complete_bipartite(num(a).unwrap(), num(b).unwrap()))
            }
            _ => {}
        }
    }
    if let Some(n) = lower.strip_prefix('c').and_then(num) {
        if n >= 3 {
            return Ok(cycle_graph(n));
        }
    }
    Ok(read_graph(Path::new(text))?.graph)
}

fn print_found(found: Option<String>, global: &Global) -> Outcome {
    match (found, global.json) {
        (Some(s), false) => print!("{s}"),
        (None, false) => println!("none"),
        (s, true) => println!("{}", json!({"found": s.is_some(), "structure": s})),
    }
    Ok(())
}

fn oracle(kind: OracleKind, file: &Path, flags: &OracleFlags, global: &Global) -> Outcome {
    let f = read_graph(file)?;
    let n = &f.names;
    let g = &f.graph;
    let rg = || rooted(&f);
    let force = flags
        .force
        .as_deref()
        .map(|s| resolve_pair(n, s))
        .transpose()?;
    let found = match kind {
        OracleKind::Tree => {
            let Some(t) = flags.maxdeg else {
                return usage("oracle tree needs --maxdeg");
            };
            let leaves = flags
                .leaves
                .as_deref()
                .map(|s| resolve_pair(n, s))
                .transpose()?;
            exists_x_spanning_tree(&rg()?, t, leaves)?.map(Structure::Tree)
        }
        OracleKind::Path => {
            let rg = rg()?;
            let (a, b) = ends(n, &rg, &flags.from, &flags.to)?;
            let forced: Vec<Edge> = force.map(|(a, b)| Edge { a, b }).into_iter().collect();
            exists_x_spanning_path(&rg, a, b, &forced)?.map(|spine| Structure::Walk {
                walk: GeneralizedStructure {
                    spine,
                    closed: false,
                    attachments: vec![],
                },
                avoid: VertexSet::new(),
                force: forced.first().copied(),
            })
        }
        OracleKind::Cycle => {
            let avoid: VertexSet = resolve_all(n, flags.avoid.iter().map(String::as_str))?
                .into_iter()
                .collect();
            exists_x_spanning_cycle(&rg()?, &avoid)?.map(|spine| Structure::Walk {
                walk: GeneralizedStructure {
                    spine,
                    closed: true,
                    attachments: vec![],
                },
                avoid,
                force: None,
            })
        }
        OracleKind::Minor => {
            let Some(text) = &flags.pattern else {
                return usage("oracle minor needs --pattern");
            };
            let has = has_minor_brute(g, &pattern(text)?)?;
            if global.json {
                println!("{}", json!({"pattern": text, "minor": has}));
            } else {
                println!("{}", if has { "yes" } else { "no" });
            }
            return Ok(());
        }
        OracleKind::Tutte => {
            let (Some(y), Some(z)) = (&flags.from, &flags.to) else {
                return usage("oracle tutte needs --from and --to");
            };
            let (y, z) = (resolve(n, y)?, resolve(n, z)?);
            let anchor_ids = resolve_all(n, flags.anchor.iter().map(String::as_str))?;
            let anchor = if anchor_ids.is_empty() {
                None
            } else if g.is_cycle(&anchor_ids) {
                Some(Graph::path_subgraph(&anchor_ids, true)?)
            } else {
                return usage("--anchor must list a cycle of the graph");
            };
            let path = match force {
                Some((a, b)) => find_tutte_path_brute(g, y, z, Edge { a, b }, anchor.as_ref())?,
                None => tutte_paths_brute(g, y, z, anchor.as_ref(), 1)?.pop(),
            };
            path.map(|path| Structure::Tutte {
                path,
                anchor: (!anchor_ids.is_empty()).then_some(anchor_ids),
            })
        }
    };
    print_found(found.map(|s| write_structure(&s, n)), global)
}

pub struct PipelineFlags {
    pub bound: Option<usize>,
    pub from: Option<String>,
    pub to: Option<String>,
    pub force: Option<String>,
    pub avoid: Vec<String>,
    pub out: Option<PathBuf>,
}

fn artifact_structure(a: &Artifact, opts: &Options) -> Structure {
    let walk = |spine: &[VertexId], closed| GeneralizedStructure {
        spine: spine.to_vec(),
        closed,
        attachments: vec![],
    };
    match a {
        Artifact::Tree(t) => Structure::Tree(t.clone()),
        Artifact::Subgraph(g) => Structure::Subgraph {
            graph: g.clone(),
            maxdeg: Some(g.max_degree()),
        },
        Artifact::Path(p) => Structure::Walk {
            walk: walk(p, false),
            avoid: VertexSet::new(),
            force: opts.force,
        },
        Artifact::Cycle(c) => Structure::Walk {
            walk: walk(c, true),
            avoid: opts.avoid.clone(),
            force: None,
        },
    }
}

pub fn report(
    theorem: Theorem,
    variant: &str,
    run: &Run,
    artifacts: &[String],
    timing: bool,
) -> Value {
    let steps: Vec<Value> = run
        .steps
        .iter()
        .map(|s| {
            let mut v = json!({"name": s.name, "outcome": s.outcome.as_str(), "detail": s.detail});
            if timing {
                v["elapsed_ms"] = json!(s.elapsed.as_secs_f64() * 1e3);
            }
            v
        })
        .collect();
    json!({
        "schema": REPORT_SCHEMA,
        "theorem": match theorem { Theorem::Thm1 => "thm1", Theorem::Thm3 => "thm3" },
        "variant": variant,
        "input": {"n": run.vertices, "m": run.edges, "roots": run.roots, "kappa": run.kappa},
        "steps": steps,
        "verdict": if run.passed() { "pass" } else { "fail" },
        "artifacts": artifacts,
    })
}

fn pipeline_cmd(
    theorem: Theorem,
    file: &Path,
    variant_text: &str,
    flags: &PipelineFlags,
    global: &Global,
) -> Outcome {
    let f = read_graph(file)?;
    let rg = rooted(&f)?;
    let n = &f.names;
    let variant: Variant = variant_text.parse()?;
    let opts = Options {
        bound: flags.bound,
        ends: match (&flags.from, &flags.to) {
            (None, None) => None,
            (from, to) => Some(ends(n, &rg, from, to)?),
        },
        force: flags
            .force
            .as_deref()
            .map(|s| resolve_pair(n, s))
            .transpose()?
            .map(|(a, b)| Edge { a, b }),
        avoid: resolve_all(n, flags.avoid.iter().map(String::as_str))?
            .into_iter()
            .collect(),
    };
    let run = match theorem {
        Theorem::Thm1 => pipeline::kappa_three(&rg, variant, &opts),
        Theorem::Thm3 => pipeline::kappa_four(&rg, variant, &opts),
    };
    let mut artifacts = Vec::new();
    if let (Some(path), Some(a), true) = (&flags.out, &run.artifact, run.passed()) {
        emit(
            Some(path),
            &write_structure(&artifact_structure(a, &opts), n),
        )?;
        artifacts.push(path.display().to_string());
    }
    let canonical = match variant {
        Variant::I => "i",
        Variant::II => "ii",
        Variant::III => "iii",
    };
    let r = report(theorem, canonical, &run, &artifacts, !global.no_timing);
    println!(
        "{}",
        serde_json::to_string_pretty(&r).expect("reports serialize")
    );
    if run.passed() {
        return Ok(());
    }
    let worst = |o| run.steps.iter().find(|s| s.outcome == o);
    if let Some(s) = worst(StepOutcome::ResourceLimit) {
        Err(Failure::Resource(format!("{}: {}", s.name, s.detail)))
    } else if let Some(s) = worst(StepOutcome::Precondition) {
        usage(format!("{}: {}", s.name, s.detail))
    } else {
        let s = run.steps.iter().find(|s| s.outcome == StepOutcome::Fail);
        violation(s.map_or("no structure produced".into(), |s| {
            format!("{}: {}", s.name, s.detail)
        }))
    }
}

fn defect<T>(r: Result<T, impl std::fmt::Display>) -> Outcome<T> {
    r.map_err(|d| Failure::Violation(d.to_string()))
}

fn check(ok: bool, clause: &str, detail: impl std::fmt::Display) -> Outcome {
    if ok {
        Ok(())
    } else {
        violation(format!("{clause}: {detail}"))
    }
}

fn verify_certificate(f: &GraphFile, file: &Path) -> Outcome {
    let json = CertificateJson::parse(&read(file)?)?;
    let (c, steps) = json.resolve(f)?;
    certified(&c)?;
    if !steps.is_empty() {
        let covered: VertexSet = c.bags.values().flatten().copied().collect();
        let trace = ContractionTrace {
            initial: f.graph.induced_subgraph(&covered)?,
            steps,
            final_graph: c.minor.clone(),
        };
        let replayed = defect(trace.replay(&c.roots))?;
        check(
            replayed.vertex_set() == c.minor.vertex_set() && c.minor.is_subgraph_of(&replayed),
            "trace replay",
            "contractions do not reproduce the minor",
        )?;
        check(
            trace.bags() == c.bags,
            "trace bags",
            "contractions induce different bags",
        )?;
    }
    if let Some(edges) = &json.embedding {
        let n = &f.names;
        let mut path_map = std::collections::BTreeMap::new();
        for e in edges {
            let (a, b) = (resolve(n, &e.edge[0])?, resolve(n, &e.edge[1])?);
            path_map.insert(
                Edge::new(a, b)?.normalized(),
                resolve_all(n, e.path.iter().map(String::as_str))?,
            );
        }
        let emb = rooted_minors::minor::SubdivisionEmbedding {
            minor: c.minor.clone(),
            path_map,
        };
        defect(emb.verify(&f.graph).map_err(|m| format!("embedding: {m}")))?;
    }
    Ok(())
}

fn verify_structure(f: &GraphFile, s: &Structure) -> Outcome {
    let g = &f.graph;
    match s {
        Structure::Tree(t) => defect(t.verify(g, &f.roots)),
        Structure::Subgraph { graph, maxdeg } => {
            check(
                graph.is_subgraph_of(g),
                "subgraph",
                "not a subgraph of the graph",
            )?;
            check(
                is_k_connected(graph, 2),
                "2-connectivity",
                "the subgraph is not 2-connected",
            )?;
            if let Some(d) = maxdeg {
                check(
                    graph.max_degree() <= *d,
                    "degree bound",
                    format!("maximum degree exceeds {d}"),
                )?;
            }
            let missing = f.roots.iter().find(|x| !graph.has_vertex(**x));
            check(
                missing.is_none(),
                "root coverage",
                format!(
                    "root {} is missing",
                    missing.map_or(String::new(), |&x| f.names.name(x))
                ),
            )
        }
        Structure::Walk { walk, avoid, force } => {
            let roots: VertexSet = f.roots.difference(avoid).copied().collect();
            defect(walk.verify(g, &roots))?;
            let image = walk.image();
            check(
                avoid.iter().all(|y| !image.has_vertex(*y)),
                "avoidance",
                "the structure meets an avoided vertex",
            )?;
            if let Some(e) = force {
                let on_spine = Graph::path_subgraph(&walk.spine, walk.closed)?.has_edge(e.a, e.b);
                check(
                    on_spine,
                    "forced edge",
                    "the spine does not use the forced edge",
                )?;
            }
            Ok(())
        }
        Structure::Tutte { path, anchor } => {
            check(g.is_path(path), "path", "not a path of the graph")?;
            let anchor = match anchor {
                Some(c) if g.is_cycle(c) => Some(Graph::path_subgraph(c, true)?),
                Some(_) => return violation("anchor: not a cycle of the graph"),
                None => None,
            };
            check(
                is_tutte_path(g, path, anchor.as_ref())?,
                "tutte condition",
                "a bridge has too many attachments",
            )
        }
    }
}

fn verify(graph: &Path, file: &Path, kind: VerifyKind, global: &Global) -> Outcome {
    let f = read_graph(graph)?;
    let result = match kind {
        VerifyKind::Certificate => verify_certificate(&f, file),
        _ => {
            let s = parse_structure(&read(file)?, &f.names)?;
            match (kind, &s) {
                (VerifyKind::Tree, Structure::Tree(_))
                | (VerifyKind::TuttePath, Structure::Tutte { .. })
                | (VerifyKind::Structure, _) => verify_structure(&f, &s),
                _ => usage(format!(
                    "{} does not hold a structure of kind {kind:?}",
                    file.display()
                )),
            }
        }
    };
    if global.json {
        let v = match &result {
            Ok(()) => json!({"valid": true}),
            Err(Failure::Violation(m)) => json!({"valid": false, "violation": m}),
            Err(_) => Value::Null,
        };
        if !v.is_null() {
            println!("{v}");
        }
    } else if result.is_ok() {
        println!("ok");
    }
    result
}
