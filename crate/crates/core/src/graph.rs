//! Simple graphs, the two five-vertex target patterns, and subgraph
//! embedding search.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::seq::DegreeSequence;

/// A finite simple graph on vertices `0..n`, stored as a dense adjacency
/// matrix. Realizations in this crate stay small, so the quadratic storage
/// is never the bottleneck.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<bool>,
    degree: Vec<u32>,
    edges: usize,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            adj: vec![false; n * n],
            degree: vec![0; n],
            edges: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_unchecked(u, v);
            }
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.degree[v]
    }

    /// Per-vertex degrees in vertex order.
    pub fn degrees(&self) -> Vec<u32> {
        self.degree.clone()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.n + v]
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u == v || u >= self.n || v >= self.n {
            return Err(Error::InvalidEdge { u, v, n: self.n });
        }
        Ok(())
    }

    pub(crate) fn insert_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && !self.has_edge(u, v));
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
        self.degree[u] += 1;
        self.degree[v] += 1;
        self.edges += 1;
    }

    pub(crate) fn delete_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(self.has_edge(u, v));
        self.adj[u * self.n + v] = false;
        self.adj[v * self.n + u] = false;
        self.degree[u] -= 1;
        self.degree[v] -= 1;
        self.edges -= 1;
    }

    /// Adds `{u, v}`; loops, out-of-range endpoints and duplicates are errors.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge {
                u: u.min(v),
                v: u.max(v),
            });
        }
        self.insert_unchecked(u, v);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge {
                u: u.min(v),
                v: u.max(v),
            });
        }
        self.delete_unchecked(u, v);
        Ok(())
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n)
                .filter(move |&v| self.adj[u * self.n + v])
                .map(move |v| (u, v))
        })
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.adj[v * self.n + u])
    }

    /// Sorted degree multiset. Fails if any vertex is isolated, since degree
    /// sequences here carry no zero terms.
    pub fn degree_sequence(&self) -> Result<DegreeSequence> {
        let isolated: Vec<usize> = (0..self.n).filter(|&v| self.degree[v] == 0).collect();
        if !isolated.is_empty() {
            return Err(Error::IsolatedVertices(isolated));
        }
        DegreeSequence::new(self.degree.clone())
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Edge-list text: `n <count>` on the first line, then one `u v` line per
/// edge with `u < v`, sorted.
impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n)?;
        for (u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

impl FromStr for SimpleGraph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = |line: usize, reason: &str| Error::GraphFormat {
            line,
            reason: reason.to_string(),
        };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (first_no, header) = lines.next().ok_or_else(|| bad(1, "missing header"))?;
        let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
            ["n", count] => count
                .parse::<usize>()
                .map_err(|_| bad(first_no, "vertex count is not an integer"))?,
            _ => return Err(bad(first_no, "expected `n <vertex_count>`")),
        };
        let mut graph = SimpleGraph::new(n);
        let mut last: Option<(usize, usize)> = None;
        for (no, line) in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [u, v] = parts[..] else {
                return Err(bad(no, "expected `u v`"));
            };
            let u: usize = u
                .parse()
                .map_err(|_| bad(no, "endpoint is not an integer"))?;
            let v: usize = v
                .parse()
                .map_err(|_| bad(no, "endpoint is not an integer"))?;
            if u >= v {
                return Err(bad(no, "edges must be written with u < v"));
            }
            if last.is_some_and(|prev| prev >= (u, v)) {
                return Err(bad(no, "edges must be sorted and distinct"));
            }
            last = Some((u, v));
            graph.add_edge(u, v)?;
        }
        Ok(graph)
    }
}

/// Sorted degree multiset of `graph`.
pub fn degree_sequence_of(graph: &SimpleGraph) -> Result<DegreeSequence> {
    graph.degree_sequence()
}

/// Number of vertices every target pattern has.
pub const PATTERN_ORDER: usize = 5;

/// A fixed pattern on vertices `0..5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TargetPattern {
    pub name: &'static str,
    pub edges: &'static [(usize, usize)],
}

/// K5 with the edges of the path 0-1-2-3-4 removed.
pub const K5_MINUS_P4: TargetPattern = TargetPattern {
    name: "k5-p4",
    edges: &[(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4)],
};

/// K5 with the edges of the tree {01, 12, 13, 34} removed (center 1, leaves
/// 0, 2 and 4).
pub const K5_MINUS_Y4: TargetPattern = TargetPattern {
    name: "k5-y4",
    edges: &[(0, 2), (0, 3), (0, 4), (1, 4), (2, 3), (2, 4)],
};

impl TargetPattern {
    /// Every shipped pattern.
    pub const ALL: [TargetPattern; 2] = [K5_MINUS_P4, K5_MINUS_Y4];

    pub fn by_name(name: &str) -> Result<TargetPattern> {
        Self::ALL
            .into_iter()
            .find(|p| p.name == name)
            .ok_or_else(|| Error::UnknownPattern(name.to_string()))
    }

    /// Degree of each pattern vertex.
    pub fn degrees(&self) -> [u32; PATTERN_ORDER] {
        let mut deg = [0; PATTERN_ORDER];
        for &(u, v) in self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Non-increasing degree multiset.
    pub fn degree_profile(&self) -> [u32; PATTERN_ORDER] {
        let mut deg = self.degrees();
        deg.sort_unstable_by(|a, b| b.cmp(a));
        deg
    }

    pub fn as_graph(&self) -> SimpleGraph {
        SimpleGraph::from_edges(PATTERN_ORDER, self.edges).expect("pattern edges are valid")
    }
}

impl fmt::Display for TargetPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name)
    }
}

/// Injective map from pattern vertices into host vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Embedding {
    pub map: [usize; PATTERN_ORDER],
}

impl Embedding {
    /// Whether the map is injective and every pattern edge lands on a host
    /// edge.
    pub fn is_valid(&self, host: &SimpleGraph, pattern: &TargetPattern) -> bool {
        let injective =
            (0..PATTERN_ORDER).all(|a| (a + 1..PATTERN_ORDER).all(|b| self.map[a] != self.map[b]));
        injective
            && pattern
                .edges
                .iter()
                .all(|&(a, b)| host.has_edge(self.map[a], self.map[b]))
    }

    /// Host vertex pairs covered by pattern edges.
    pub fn mapped_edges<'a>(
        &'a self,
        pattern: &'a TargetPattern,
    ) -> impl Iterator<Item = (usize, usize)> + 'a {
        pattern.edges.iter().map(move |&(a, b)| {
            let (u, v) = (self.map[a], self.map[b]);
            (u.min(v), u.max(v))
        })
    }
}

impl fmt::Display for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.map.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Searches for a (not necessarily induced) copy of `pattern` in `host`.
///
/// Host vertices are tried in `prefer` order, or by non-increasing host
/// degree (lowest index on ties) when `prefer` is `None`; vertices missing
/// from `prefer` are appended in that default order. Pattern vertices are
/// placed highest pattern degree first.
pub fn find_embedding(
    host: &SimpleGraph,
    pattern: &TargetPattern,
    prefer: Option<&[usize]>,
) -> Option<Embedding> {
    let n = host.vertex_count();
    if n < PATTERN_ORDER || host.edge_count() < pattern.edges.len() {
        return None;
    }
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by(|&a, &b| host.degree(b).cmp(&host.degree(a)).then(a.cmp(&b)));
    let candidates: Vec<usize> = match prefer {
        None => by_degree,
        Some(prefer) => {
            let mut seen = vec![false; n];
            let mut order = Vec::with_capacity(n);
            for &v in prefer.iter().chain(by_degree.iter()) {
                if v < n && !seen[v] {
                    seen[v] = true;
                    order.push(v);
                }
            }
            order
        }
    };

    let pdeg = pattern.degrees();
    let mut order: Vec<usize> = (0..PATTERN_ORDER).collect();
    order.sort_by(|&a, &b| pdeg[b].cmp(&pdeg[a]).then(a.cmp(&b)));
    let pattern_graph = pattern.as_graph();

    let mut search = EmbeddingSearch {
        host,
        pattern: &pattern_graph,
        pdeg,
        order,
        candidates,
        map: [usize::MAX; PATTERN_ORDER],
        used: vec![false; n],
    };
    search.extend(0).then_some(Embedding { map: search.map })
}

struct EmbeddingSearch<'a> {
    host: &'a SimpleGraph,
    pattern: &'a SimpleGraph,
    pdeg: [u32; PATTERN_ORDER],
    order: Vec<usize>,
    candidates: Vec<usize>,
    map: [usize; PATTERN_ORDER],
    used: Vec<bool>,
}

impl EmbeddingSearch<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == PATTERN_ORDER {
            return true;
        }
        let p = self.order[depth];
        for idx in 0..self.candidates.len() {
            let h = self.candidates[idx];
            if self.used[h] || self.host.degree(h) < self.pdeg[p] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&q| !self.pattern.has_edge(p, q) || self.host.has_edge(h, self.map[q]));
            if !consistent {
                continue;
            }
            self.map[p] = h;
            self.used[h] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[h] = false;
            self.map[p] = usize::MAX;
        }
        false
    }
}

/// `host` minus the edges of the embedded pattern copy.
pub fn remove_pattern(
    host: &SimpleGraph,
    embedding: &Embedding,
    pattern: &TargetPattern,
) -> Result<SimpleGraph> {
    let mut out = host.clone();
    for (u, v) in embedding.mapped_edges(pattern) {
        out.remove_edge(u, v)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> SimpleGraph {
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        SimpleGraph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn pattern_sanity() {
        assert_eq!(K5_MINUS_P4.edges.len(), 6);
        assert_eq!(K5_MINUS_P4.degree_profile(), [3, 3, 2, 2, 2]);
        assert_eq!(K5_MINUS_Y4.edges.len(), 6);
        assert_eq!(K5_MINUS_Y4.degree_profile(), [3, 3, 3, 2, 1]);
        for p in TargetPattern::ALL {
            assert!(p.edges.iter().all(|&(u, v)| u < v && v < PATTERN_ORDER));
        }
    }

    #[test]
    fn patterns_are_complements_of_their_trees() {
        let complement = |p: &TargetPattern| -> Vec<(usize, usize)> {
            SimpleGraph::complete(5)
                .edges()
                .filter(|e| !p.edges.contains(e))
                .collect()
        };
        assert_eq!(
            complement(&K5_MINUS_P4),
            vec![(0, 1), (1, 2), (2, 3), (3, 4)]
        );
        assert_eq!(
            complement(&K5_MINUS_Y4),
            vec![(0, 1), (1, 2), (1, 3), (3, 4)]
        );
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(degree_sequence_of(&cycle(3)).unwrap().terms(), &[2, 2, 2]);
        assert_eq!(
            degree_sequence_of(&SimpleGraph::complete(5))
                .unwrap()
                .terms(),
            &[4, 4, 4, 4, 4]
        );
        assert_eq!(
            degree_sequence_of(&K5_MINUS_Y4.as_graph()).unwrap().terms(),
            &[3, 3, 3, 2, 1]
        );
        let g = SimpleGraph::from_edges(4, &[(0, 2)]).unwrap();
        assert_eq!(
            degree_sequence_of(&g),
            Err(Error::IsolatedVertices(vec![1, 3]))
        );
    }

    #[test]
    fn rejects_bad_edges() {
        let mut g = SimpleGraph::new(3);
        assert!(matches!(g.add_edge(1, 1), Err(Error::InvalidEdge { .. })));
        assert!(matches!(g.add_edge(0, 3), Err(Error::InvalidEdge { .. })));
        g.add_edge(2, 0).unwrap();
        assert_eq!(g.add_edge(0, 2), Err(Error::DuplicateEdge { u: 0, v: 2 }));
    }

    #[test]
    fn embedding_examples() {
        let k5 = SimpleGraph::complete(5);
        let e = find_embedding(&k5, &K5_MINUS_P4, None).unwrap();
        assert!(e.is_valid(&k5, &K5_MINUS_P4));
        assert_eq!(find_embedding(&cycle(5), &K5_MINUS_P4, None), None);

        let mut host = K5_MINUS_Y4.as_graph();
        host.add_edge(1, 3).unwrap();
        let e = find_embedding(&host, &K5_MINUS_Y4, None).unwrap();
        assert!(e.is_valid(&host, &K5_MINUS_Y4));
    }

    #[test]
    fn embedding_honors_preference() {
        let k6 = SimpleGraph::complete(6);
        let e = find_embedding(&k6, &K5_MINUS_P4, Some(&[5, 4, 3, 2, 1])).unwrap();
        let mut used = e.map.to_vec();
        used.sort_unstable();
        assert_eq!(used, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn removal() {
        let k5 = SimpleGraph::complete(5);
        let identity = Embedding {
            map: [0, 1, 2, 3, 4],
        };
        let rest = remove_pattern(&k5, &identity, &K5_MINUS_P4).unwrap();
        assert_eq!(
            rest.edges().collect::<Vec<_>>(),
            vec![(0, 1), (1, 2), (2, 3), (3, 4)]
        );

        let own = remove_pattern(&K5_MINUS_Y4.as_graph(), &identity, &K5_MINUS_Y4).unwrap();
        assert_eq!(own.edge_count(), 0);
        assert_eq!(own.vertex_count(), 5);

        let drop: Vec<u32> = k5
            .degrees()
            .iter()
            .zip(rest.degrees())
            .map(|(a, b)| a - b)
            .collect();
        assert_eq!(drop, K5_MINUS_P4.degrees().to_vec());

        assert!(matches!(
            remove_pattern(&cycle(5), &identity, &K5_MINUS_P4),
            Err(Error::MissingEdge { .. })
        ));
    }

    #[test]
    fn edge_list_text() {
        let g = SimpleGraph::from_edges(4, &[(2, 3), (0, 1), (1, 2)]).unwrap();
        let text = g.to_string();
        assert_eq!(text, "n 4\n0 1\n1 2\n2 3\n");
        assert_eq!(text.parse::<SimpleGraph>().unwrap(), g);
        assert!("n 3\n1 0\n".parse::<SimpleGraph>().is_err());
        assert!("n 3\n1 2\n0 1\n".parse::<SimpleGraph>().is_err());
        assert!("3\n".parse::<SimpleGraph>().is_err());
    }
}
