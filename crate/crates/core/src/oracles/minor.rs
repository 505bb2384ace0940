use super::{guard, PATH_LIMIT, PATTERN_LIMIT};
use crate::error::Result;
use crate::graph::{Graph, VertexId, VertexSet};

const DELETED: u8 = u8::MAX;

/// Whether `pattern` is an (unrooted) minor of `g`.
///
/// Vertices of `g` are distributed over `|V(pattern)|` blocks by restricted
/// growth strings; a distribution succeeds when every block is connected and
/// the quotient graph contains the pattern. For a connected pattern each
/// component of `g` is searched on its own and no vertex needs deleting.
pub fn has_minor_brute(g: &Graph, pattern: &Graph) -> Result<bool> {
    guard(g.vertex_count(), PATH_LIMIT, "graph")?;
    guard(pattern.vertex_count(), PATTERN_LIMIT, "pattern")?;
    let p = pattern.vertex_count();
    if p > g.vertex_count() || pattern.edge_count() > g.edge_count() {
        return Ok(false);
    }
    if pattern.edge_count() == 0 {
        return Ok(true);
    }
    let pat = masks(pattern, &pattern.vertex_set());
    if pattern.is_connected() {
        for comp in g.components() {
            if comp.len() >= p && search(g, &comp, &pat, false) {
                return Ok(true);
            }
        }
        Ok(false)
    } else {
        Ok(search(g, &g.vertex_set(), &pat, true))
    }
}

/// Adjacency bitmasks of `g[s]` with vertices indexed in breadth-first
/// order from the least vertex of each component.
fn masks(g: &Graph, s: &VertexSet) -> Vec<u16> {
    let order = bfs_order(g, s);
    let index = |v: VertexId| order.iter().position(|&w| w == v);
    order
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .filter_map(index)
                .fold(0u16, |m, j| m | (1 << j))
        })
        .collect()
}

fn bfs_order(g: &Graph, s: &VertexSet) -> Vec<VertexId> {
    let mut order: Vec<VertexId> = Vec::with_capacity(s.len());
    let mut seen = VertexSet::new();
    for &root in s {
        if !seen.insert(root) {
            continue;
        }
        let mut head = order.len();
        order.push(root);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for w in g.neighbors(v) {
                if s.contains(&w) && seen.insert(w) {
                    order.push(w);
                }
            }
        }
    }
    order
}

fn search(g: &Graph, s: &VertexSet, pat: &[u16], allow_delete: bool) -> bool {
    let adj = masks(g, s);
    let mut st = Partition {
        adj: &adj,
        pat,
        allow_delete,
        labels: vec![0; adj.len()],
    };
    st.assign(0, 0)
}

struct Partition<'a> {
    adj: &'a [u16],
    pat: &'a [u16],
    allow_delete: bool,
    labels: Vec<u8>,
}

impl Partition<'_> {
    fn assign(&mut self, i: usize, used: usize) -> bool {
        let (n, p) = (self.adj.len(), self.pat.len());
        if i == n {
            return used == p && self.check();
        }
        if used + (n - i) < p {
            return false;
        }
        for l in 0..=used.min(p - 1) {
            self.labels[i] = l as u8;
            if self.assign(i + 1, used + usize::from(l == used)) {
                return true;
            }
        }
        if self.allow_delete {
            self.labels[i] = DELETED;
            if self.assign(i + 1, used) {
                return true;
            }
        }
        false
    }

    fn check(&self) -> bool {
        let p = self.pat.len();
        let mut blocks = vec![0u16; p];
        for (i, &l) in self.labels.iter().enumerate() {
            if l != DELETED {
                blocks[l as usize] |= 1 << i;
            }
        }
        if !blocks.iter().all(|&b| connected(self.adj, b)) {
            return false;
        }
        let mut quotient = vec![0u16; p];
        for (i, &li) in self.labels.iter().enumerate() {
            if li == DELETED {
                continue;
            }
            for (b, &mask) in blocks.iter().enumerate() {
                if b != li as usize && self.adj[i] & mask != 0 {
                    quotient[li as usize] |= 1 << b;
                }
            }
        }
        embeds(self.pat, &quotient, &mut vec![usize::MAX; p], 0)
    }
}

fn connected(adj: &[u16], set: u16) -> bool {
    if set == 0 {
        return false;
    }
    let mut reached = set & set.wrapping_neg();
    loop {
        let mut next = reached;
        let mut rest = reached;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            next |= adj[i] & set;
        }
        if next == reached {
            return reached == set;
        }
        reached = next;
    }
}

/// Injective map of pattern vertices onto quotient vertices preserving
/// adjacency, built vertex by vertex.
fn embeds(pat: &[u16], q: &[u16], image: &mut Vec<usize>, k: usize) -> bool {
    if k == pat.len() {
        return true;
    }
    let need = pat[k].count_ones();
    for target in 0..q.len() {
        if image[..k].contains(&target) || q[target].count_ones() < need {
            continue;
        }
        let ok = (0..k).all(|j| pat[k] & (1 << j) == 0 || q[target] & (1 << image[j]) != 0);
        if ok {
            image[k] = target;
            if embeds(pat, q, image, k + 1) {
                return true;
            }
        }
    }
    image[k] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, complete_graph, cycle_graph, path_graph};
    use crate::Error;

    #[test]
    fn basic_minors() {
        assert!(has_minor_brute(&complete_graph(5), &complete_graph(4)).unwrap());
        assert!(!has_minor_brute(&path_graph(6), &complete_graph(3)).unwrap());
        assert!(!has_minor_brute(&cycle_graph(6), &complete_graph(4)).unwrap());
        assert!(has_minor_brute(&cycle_graph(6), &complete_graph(3)).unwrap());
    }

    #[test]
    fn petersen_like_contractions() {
        // K_{3,3} is a minor of itself and of its subdivisions, but K5 is not
        let k33 = complete_bipartite(3, 3);
        assert!(has_minor_brute(&k33, &k33).unwrap());
        assert!(!has_minor_brute(&k33, &complete_graph(5)).unwrap());
        // the 3-prism has K4 but no K_{3,3}
        let prism = Graph::from_edges(
            6,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert!(has_minor_brute(&prism, &complete_graph(4)).unwrap());
        assert!(!has_minor_brute(&prism, &k33).unwrap());
    }

    #[test]
    fn disconnected_patterns() {
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(has_minor_brute(&path_graph(4), &two_edges).unwrap());
        assert!(!has_minor_brute(&path_graph(3), &two_edges).unwrap());
    }

    #[test]
    fn guards() {
        assert!(matches!(
            has_minor_brute(&cycle_graph(13), &complete_graph(3)),
            Err(Error::ResourceLimit(_))
        ));
        assert!(matches!(
            has_minor_brute(&cycle_graph(8), &complete_graph(7)),
            Err(Error::ResourceLimit(_))
        ));
    }
}
