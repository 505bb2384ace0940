//! File formats beyond the rooted graph text format.
//!
//! Structures are line based: a header line (`TREE <bound>`, `SUBGRAPH
//! [maxdeg]`, `PATH`, `CYCLE` or `TUTTE`) followed by keyword lines
//! (`VERTICES`, `SPINE`, `ATTACH`, `AVOID`, `FORCE`, `ANCHOR`) and, for trees
//! and subgraphs, edge lines `u v`. Certificates are JSON.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use rooted_minors::io::{parse_graph, GraphFile, Names};
use rooted_minors::lifting::{Attachment, DegreeBoundedTree, GeneralizedStructure};
use rooted_minors::minor::{Certificate, ContractionTrace, SubdivisionEmbedding};
use rooted_minors::{Edge, Graph, VertexId, VertexSet};

use crate::failure::{usage, Failure, Outcome};

pub fn read(path: &Path) -> Outcome<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

pub fn read_graph(path: &Path) -> Outcome<GraphFile> {
    parse_graph(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

pub fn resolve(names: &Names, name: &str) -> Outcome<VertexId> {
    names.resolve(name).map_err(Failure::from)
}

pub fn resolve_all<'a>(
    names: &Names,
    list: impl IntoIterator<Item = &'a str>,
) -> Outcome<Vec<VertexId>> {
    list.into_iter().map(|n| resolve(names, n)).collect()
}

/// Parses `u,v` into an edge between named vertices.
pub fn resolve_pair(names: &Names, text: &str) -> Outcome<(VertexId, VertexId)> {
    match text.split(',').collect::<Vec<_>>()[..] {
        [a, b] => Ok((resolve(names, a)?, resolve(names, b)?)),
        _ => usage(format!("expected a pair 'u,v', got '{text}'")),
    }
}

pub fn join(names: &Names, vs: impl IntoIterator<Item = VertexId>) -> String {
    vs.into_iter()
        .map(|v| names.name(v))
        .collect::<Vec<_>>()
        .join(" ")
}

/// A structure file's contents, in host vertex ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Tree(DegreeBoundedTree),
    Subgraph {
        graph: Graph,
        maxdeg: Option<usize>,
    },
    Walk {
        walk: GeneralizedStructure,
        avoid: VertexSet,
        force: Option<Edge>,
    },
    Tutte {
        path: Vec<VertexId>,
        anchor: Option<Vec<VertexId>>,
    },
}

fn write_edges(out: &mut String, g: &Graph, names: &Names) {
    writeln!(out, "VERTICES {}", join(names, g.vertices())).unwrap();
    for e in g.edges() {
        writeln!(out, "{} {}", names.name(e.a), names.name(e.b)).unwrap();
    }
}

pub fn write_structure(s: &Structure, names: &Names) -> String {
    let mut out = String::new();
    match s {
        Structure::Tree(t) => {
            writeln!(out, "TREE {}", t.bound).unwrap();
            write_edges(&mut out, &t.tree, names);
        }
        Structure::Subgraph { graph, maxdeg } => {
            match maxdeg {
                Some(d) => writeln!(out, "SUBGRAPH {d}").unwrap(),
                None => writeln!(out, "SUBGRAPH").unwrap(),
            }
            write_edges(&mut out, graph, names);
        }
        Structure::Walk { walk, avoid, force } => {
            writeln!(out, "{}", if walk.closed { "CYCLE" } else { "PATH" }).unwrap();
            writeln!(out, "SPINE {}", join(names, walk.spine.iter().copied())).unwrap();
            for a in &walk.attachments {
                writeln!(out, "ATTACH {}", join(names, a.path.iter().copied())).unwrap();
            }
            if !avoid.is_empty() {
                writeln!(out, "AVOID {}", join(names, avoid.iter().copied())).unwrap();
            }
            if let Some(e) = force {
                writeln!(out, "FORCE {} {}", names.name(e.a), names.name(e.b)).unwrap();
            }
        }
        Structure::Tutte { path, anchor } => {
            writeln!(out, "TUTTE").unwrap();
            writeln!(out, "SPINE {}", join(names, path.iter().copied())).unwrap();
            if let Some(c) = anchor {
                writeln!(out, "ANCHOR {}", join(names, c.iter().copied())).unwrap();
            }
        }
    }
    out
}

fn structure_error<T>(line: usize, msg: impl std::fmt::Display) -> Outcome<T> {
    usage(format!("structure line {line}: {msg}"))
}

pub fn parse_structure(text: &str, names: &Names) -> Outcome<Structure> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| {
            (
                i + 1,
                l.split('#')
                    .next()
                    .unwrap_or("")
                    .split_whitespace()
                    .collect::<Vec<_>>(),
            )
        })
        .filter(|(_, t)| !t.is_empty());
    let Some((line, header)) = lines.next() else {
        return usage("empty structure file");
    };
    let number = |t: Option<&&str>| -> Outcome<Option<usize>> {
        t.map(|s| {
            s.parse()
                .map_err(|_| Failure::Usage(format!("structure line {line}: bad number '{s}'")))
        })
        .transpose()
    };
    let kind = header[0];
    let param = number(header.get(1))?;
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut spine = None;
    let mut attachments = Vec::new();
    let mut avoid = VertexSet::new();
    let mut force = None;
    let mut anchor = None;
    for (line, tokens) in lines {
        let ids = |rest: &[&str]| resolve_all(names, rest.iter().copied());
        match (kind, tokens[0]) {
            ("TREE" | "SUBGRAPH", "VERTICES") => vertices.extend(ids(&tokens[1..])?),
            ("TREE" | "SUBGRAPH", _) if tokens.len() == 2 => {
                let (a, b) = (resolve(names, tokens[0])?, resolve(names, tokens[1])?);
                match Edge::new(a, b) {
                    Ok(e) => edges.push(e),
                    Err(e) => return structure_error(line, e),
                }
            }
            ("PATH" | "CYCLE" | "TUTTE", "SPINE") => spine = Some(ids(&tokens[1..])?),
            ("PATH" | "CYCLE", "ATTACH") if tokens.len() >= 2 => {
                let path = ids(&tokens[1..])?;
                attachments.push(Attachment {
                    root: path[0],
                    path,
                });
            }
            ("PATH" | "CYCLE", "AVOID") => avoid.extend(ids(&tokens[1..])?),
            ("PATH" | "CYCLE", "FORCE") if tokens.len() == 3 => {
                let e = ids(&tokens[1..])?;
                force = Some(Edge { a: e[0], b: e[1] });
            }
            ("TUTTE", "ANCHOR") => anchor = Some(ids(&tokens[1..])?),
            _ => {
                return structure_error(
                    line,
                    format!("unexpected '{}' in a {kind} file", tokens.join(" ")),
                )
            }
        }
    }
    let graph = || {
        Graph::from_parts(vertices.iter().copied(), edges.iter().copied())
            .map_err(|e| Failure::Usage(format!("structure: {e}")))
    };
    let spine = || {
        spine
            .clone()
            .ok_or_else(|| Failure::Usage(format!("{kind} file without SPINE line")))
    };
    Ok(match kind {
        "TREE" => Structure::Tree(DegreeBoundedTree {
            tree: graph()?,
            bound: param.ok_or_else(|| Failure::Usage("TREE header needs a bound".into()))?,
        }),
        "SUBGRAPH" => Structure::Subgraph {
            graph: graph()?,
            maxdeg: param,
        },
        "PATH" | "CYCLE" => Structure::Walk {
            walk: GeneralizedStructure {
                spine: spine()?,
                closed: kind == "CYCLE",
                attachments,
            },
            avoid,
            force,
        },
        "TUTTE" => Structure::Tutte {
            path: spine()?,
            anchor,
        },
        _ => return structure_error(line, format!("unknown structure kind '{kind}'")),
    })
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct EmbeddedEdge {
    pub edge: [String; 2],
    pub path: Vec<String>,
}

/// JSON form of a certificate, keyed by vertex names.
#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CertificateJson {
    pub minor: Vec<[String; 2]>,
    pub bags: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub trace: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub embedding: Option<Vec<EmbeddedEdge>>,
}

fn named_edge(names: &Names, e: Edge) -> [String; 2] {
    [names.name(e.a), names.name(e.b)]
}

impl CertificateJson {
    pub fn new(
        c: &Certificate,
        trace: &ContractionTrace,
        embedding: Option<&SubdivisionEmbedding>,
        names: &Names,
    ) -> Self {
        CertificateJson {
            minor: c.minor.edges().map(|e| named_edge(names, e)).collect(),
            bags: c
                .bags
                .iter()
                .map(|(&v, bag)| (names.name(v), bag.iter().map(|&w| names.name(w)).collect()))
                .collect(),
            trace: trace.steps.iter().map(|&e| named_edge(names, e)).collect(),
            embedding: embedding.map(|emb| {
                emb.path_map
                    .iter()
                    .map(|(&e, p)| EmbeddedEdge {
                        edge: named_edge(names, e),
                        path: p.iter().map(|&v| names.name(v)).collect(),
                    })
                    .collect()
            }),
        }
    }

    pub fn parse(text: &str) -> Outcome<Self> {
        serde_json::from_str(text).map_err(|e| Failure::Usage(format!("certificate: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificates serialize") + "\n"
    }

    /// Certificate over the host of `file`, plus the trace steps.
    pub fn resolve(&self, file: &GraphFile) -> Outcome<(Certificate, Vec<Edge>)> {
        let n = &file.names;
        let pair = |p: &[String; 2]| -> Outcome<Edge> {
            Ok(Edge {
                a: resolve(n, &p[0])?,
                b: resolve(n, &p[1])?,
            })
        };
        let mut bags = BTreeMap::new();
        for (v, bag) in &self.bags {
            let members: VertexSet = resolve_all(n, bag.iter().map(String::as_str))?
                .into_iter()
                .collect();
            bags.insert(resolve(n, v)?, members);
        }
        let edges: Vec<Edge> = self.minor.iter().map(pair).collect::<Outcome<_>>()?;
        let minor = Graph::from_parts(bags.keys().copied(), edges)
            .map_err(|e| Failure::Usage(format!("certificate minor: {e}")))?;
        let trace = self.trace.iter().map(pair).collect::<Outcome<_>>()?;
        let cert = Certificate {
            host: file.graph.clone(),
            roots: file.roots.clone(),
            minor,
            bags,
        };
        Ok((cert, trace))
    }
}
