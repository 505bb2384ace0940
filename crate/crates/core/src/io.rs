//! Text format for rooted graphs.
//!
//! ```text
//! # comment
//! n m k
//! x1 x2 ... xk
//! u v
//! ...            (m edge lines)
//! ```
//!
//! Vertex names are whitespace-free ASCII tokens. Loops and duplicate edges
//! are rejected. Vertices that never appear by name are isolated and receive
//! generated names `_0`, `_1`, ...

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};

/// Bidirectional map between vertex ids and their textual names.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Names {
    by_id: BTreeMap<VertexId, String>,
    by_name: HashMap<String, VertexId>,
}

impl Names {
    pub fn new() -> Self {
        Self::default()
    }

    /// Names every vertex of `g` by its numeric id.
    pub fn numeric(g: &Graph) -> Self {
        let mut n = Names::new();
        for v in g.vertices() {
            n.insert(v, v.0.to_string());
        }
        n
    }

    pub fn insert(&mut self, v: VertexId, name: String) {
        self.by_name.insert(name.clone(), v);
        self.by_id.insert(v, name);
    }

    /// Name of `v`, falling back to its numeric id.
    pub fn name(&self, v: VertexId) -> String {
        self.by_id
            .get(&v)
            .cloned()
            .unwrap_or_else(|| v.0.to_string())
    }

    pub fn lookup(&self, name: &str) -> Option<VertexId> {
        self.by_name.get(name).copied()
    }

    pub fn resolve(&self, name: &str) -> Result<VertexId> {
        self.lookup(name)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown vertex name '{name}'")))
    }
}

/// Contents of one rooted graph file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    pub roots: VertexSet,
    pub names: Names,
}

struct Tokens<'a> {
    items: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Tokens<'a> {
    fn new(text: &'a str) -> Self {
        let items = text
            .lines()
            .enumerate()
            .flat_map(|(i, line)| {
                let body = line.split('#').next().unwrap_or("");
                body.split_whitespace().map(move |t| (i + 1, t))
            })
            .collect();
        Tokens { items, pos: 0 }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let line = self.items.last().map_or(1, |t| t.0);
        let t = self.items.get(self.pos).copied().ok_or(Error::Parse {
            line,
            msg: format!("unexpected end of input, expected {what}"),
        })?;
        self.pos += 1;
        Ok(t)
    }

    fn count(&mut self, what: &str) -> Result<usize> {
        let (line, t) = self.next(what)?;
        t.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("expected {what}, found '{t}'"),
        })
    }
}

pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let mut tokens = Tokens::new(text);
    let n = tokens.count("vertex count")?;
    let m = tokens.count("edge count")?;
    let k = tokens.count("root count")?;

    let mut graph = Graph::new();
    let mut names = Names::new();
    let intern = |line: usize, name: &str, graph: &mut Graph, names: &mut Names| {
        if let Some(v) = names.lookup(name) {
            return Ok(v);
        }
        if graph.vertex_count() == n {
            return Err(Error::Parse {
                line,
                msg: format!("more than {n} distinct vertex names"),
            });
        }
        let v = graph.add_vertex();
        names.insert(v, name.to_string());
        Ok(v)
    };

    let mut roots = VertexSet::new();
    for _ in 0..k {
        let (line, name) = tokens.next("root name")?;
        let v = intern(line, name, &mut graph, &mut names)?;
        if !roots.insert(v) {
            return Err(Error::Parse {
                line,
                msg: format!("root '{name}' listed twice"),
            });
        }
    }
    for _ in 0..m {
        let (line, a) = tokens.next("edge endpoint")?;
        let (_, b) = tokens.next("edge endpoint")?;
        let va = intern(line, a, &mut graph, &mut names)?;
        let vb = intern(line, b, &mut graph, &mut names)?;
        graph.add_edge(va, vb).map_err(|e| Error::Parse {
            line,
            msg: e.to_string(),
        })?;
    }
    if let Ok((line, t)) = tokens.next("") {
        return Err(Error::Parse {
            line,
            msg: format!("trailing token '{t}'"),
        });
    }
    let mut fill = 0;
    while graph.vertex_count() < n {
        let v = graph.add_vertex();
        while names.lookup(&format!("_{fill}")).is_some() {
            fill += 1;
        }
        names.insert(v, format!("_{fill}"));
    }
    Ok(GraphFile {
        graph,
        roots,
        names,
    })
}

pub fn write_graph(g: &Graph, roots: &VertexSet, names: &Names) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{} {} {}",
        g.vertex_count(),
        g.edge_count(),
        roots.len()
    )
    .unwrap();
    let line: Vec<String> = roots.iter().map(|&r| names.name(r)).collect();
    writeln!(out, "{}", line.join(" ")).unwrap();
    for e in g.edges() {
        writeln!(out, "{} {}", names.name(e.a), names.name(e.b)).unwrap();
    }
    out
}
