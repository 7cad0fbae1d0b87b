//! Finite simple graphs on at most 64 vertices and their vertex sets.
//!
//! Adjacency is stored as one `u64` row per vertex, so every neighborhood
//! operation is a handful of word operations. Graphs and vertex sets are
//! immutable once built.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use crate::bits::{self, bit, iter_bits, low_mask, popcount};
use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

static NEXT_GRAPH_ID: AtomicU64 = AtomicU64::new(1);

/// Identity of a constructed graph. Clones share the identity; every
/// construction (including induced subgraphs) gets a fresh one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphId(u64);

impl GraphId {
    fn fresh() -> Self {
        GraphId(NEXT_GRAPH_ID.fetch_add(1, AtomicOrdering::Relaxed))
    }
}

#[derive(Clone, Debug)]
pub struct Graph {
    id: GraphId,
    n: usize,
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    /// Structural equality; identities are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj && self.labels == other.labels
    }
}

impl Eq for Graph {}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            id: GraphId::fresh(),
            n,
            adj: vec![0; n],
            labels: None,
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        let all = low_mask(n);
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        Ok(g)
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { index: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u.to_string()));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, validating symmetry,
    /// irreflexivity and range.
    pub fn from_adjacency(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let all = low_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !all != 0 {
                let index = (row & !all).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { index, n });
            }
            if row & bit(v) != 0 {
                return Err(Error::SelfLoop(v.to_string()));
            }
            for u in iter_bits(row) {
                if rows[u] & bit(v) == 0 {
                    return Err(Error::InternalContradiction(format!(
                        "adjacency is not symmetric at ({v},{u})"
                    )));
                }
            }
        }
        Ok(Graph {
            id: GraphId::fresh(),
            n,
            adj: rows,
            labels: None,
        })
    }

    /// Attaches external vertex names. Names must be distinct and there must
    /// be exactly one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::VertexOutOfRange {
                index: labels.len(),
                n: self.n,
            });
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn id(&self) -> GraphId {
        self.id
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| popcount(*r)).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Neighbor mask of `v`.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// All adjacency rows.
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        popcount(self.adj[v])
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| iter_bits(self.adj[u] & bits::above(u)).map(move |v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// External name of `v`: its label when present, otherwise its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Resolves an external vertex name: a label when the graph is labeled,
    /// otherwise a decimal index.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        match &self.labels {
            Some(l) => l.iter().position(|x| x == name),
            None => name.parse::<usize>().ok().filter(|&v| v < self.n),
        }
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.id, 0)
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::new(self.id, low_mask(self.n))
    }

    /// Vertex set from indices.
    pub fn vertex_set<I>(&self, vertices: I) -> Result<VertexSet>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut mask = 0;
        for v in vertices {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    index: v,
                    n: self.n,
                });
            }
            mask |= bit(v);
        }
        Ok(VertexSet::new(self.id, mask))
    }

    pub fn set_from_mask(&self, mask: u64) -> Result<VertexSet> {
        let outside = mask & !low_mask(self.n);
        if outside != 0 {
            return Err(Error::VertexOutOfRange {
                index: outside.trailing_zeros() as usize,
                n: self.n,
            });
        }
        Ok(VertexSet::new(self.id, mask))
    }

    /// Parses a comma-separated list of vertex names. Blank input, `{}` and
    /// `-` all denote the empty set.
    pub fn parse_vertex_set(&self, text: &str) -> Result<VertexSet> {
        let text = text.trim().trim_start_matches('{').trim_end_matches('}');
        if text.trim().is_empty() || text.trim() == "-" {
            return Ok(self.empty_set());
        }
        let mut mask = 0;
        for name in text.split(',').map(str::trim) {
            let v = self
                .index_of(name)
                .ok_or_else(|| Error::UnknownVertex(name.to_string()))?;
            mask |= bit(v);
        }
        Ok(VertexSet::new(self.id, mask))
    }

    /// Renders a set as `{a,b,c}` using vertex names.
    pub fn format_set(&self, set: &VertexSet) -> String {
        let names: Vec<String> = set.iter().map(|v| self.label(v)).collect();
        format!("{{{}}}", names.join(","))
    }

    pub(crate) fn check_owned(&self, set: &VertexSet) -> Result<()> {
        if set.graph != self.id {
            return Err(Error::ForeignSet);
        }
        Ok(())
    }

    /// N(X): vertices adjacent to some member of X. Members of X appear when
    /// X is not independent.
    pub fn open_neighborhood(&self, x: &VertexSet) -> Result<VertexSet> {
        self.check_owned(x)?;
        Ok(VertexSet::new(self.id, bits::open_nbhd(&self.adj, x.bits)))
    }

    /// N[X] = X ∪ N(X).
    pub fn closed_neighborhood(&self, x: &VertexSet) -> Result<VertexSet> {
        self.check_owned(x)?;
        Ok(VertexSet::new(
            self.id,
            bits::closed_nbhd(&self.adj, x.bits),
        ))
    }

    pub fn induced_subgraph(&self, x: &VertexSet) -> Result<InducedSubgraph> {
        self.check_owned(x)?;
        Ok(self.induce_mask(x.bits))
    }

    /// G − N[S].
    pub fn delete_closed_neighborhood(&self, s: &VertexSet) -> Result<InducedSubgraph> {
        let closed = self.closed_neighborhood(s)?;
        Ok(self.induce_mask(low_mask(self.n) & !closed.bits))
    }

    pub(crate) fn induce_mask(&self, mask: u64) -> InducedSubgraph {
        let vertex_map: Vec<usize> = iter_bits(mask).collect();
        let mut position = [usize::MAX; MAX_VERTICES];
        for (i, &v) in vertex_map.iter().enumerate() {
            position[v] = i;
        }
        let adj = vertex_map
            .iter()
            .map(|&v| iter_bits(self.adj[v] & mask).fold(0, |acc, u| acc | bit(position[u])))
            .collect();
        let labels = vertex_map.iter().map(|&v| self.label(v)).collect();
        InducedSubgraph {
            parent: self.id,
            graph: Graph {
                id: GraphId::fresh(),
                n: vertex_map.len(),
                adj,
                labels: Some(labels),
            },
            vertex_map,
        }
    }

    /// Two-colorability test by breadth-first search.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for u in iter_bits(self.adj[v]) {
                    if color[u] == u8::MAX {
                        color[u] = 1 - color[v];
                        queue.push_back(u);
                    } else if color[u] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

// ============================================================================
// VertexSet
// ============================================================================

/// A subset of one graph's vertices.
///
/// Equality is extensional within a graph; sets of different graphs never
/// compare equal. The ordering is the canonical family order: cardinality
/// first, then lexicographic on ascending member lists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet {
    graph: GraphId,
    bits: u64,
}

impl VertexSet {
    pub(crate) fn new(graph: GraphId, bits: u64) -> Self {
        VertexSet { graph, bits }
    }

    pub fn graph_id(&self) -> GraphId {
        self.graph
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        popcount(self.bits)
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && self.bits & bit(v) != 0
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl ExactSizeIterator<Item = usize> {
        iter_bits(self.bits)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.same_graph(other);
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.same_graph(other);
        self.bits & other.bits == 0
    }

    pub(crate) fn with_bits(&self, bits: u64) -> VertexSet {
        VertexSet::new(self.graph, bits)
    }

    fn same_graph(&self, other: &VertexSet) {
        assert_eq!(
            self.graph, other.graph,
            "set algebra across different graphs"
        );
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        bits::canonical_cmp(self.bits, other.bits).then(self.graph.cmp(&other.graph))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        self.same_graph(&rhs);
        self.with_bits(self.bits | rhs.bits)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        self.same_graph(&rhs);
        self.with_bits(self.bits & rhs.bits)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        self.same_graph(&rhs);
        self.with_bits(self.bits & !rhs.bits)
    }
}

impl fmt::Display for VertexSet {
    /// Index form, e.g. `{0,3,4}`. Use [`Graph::format_set`] for labels.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

// ============================================================================
// InducedSubgraph
// ============================================================================

/// G[X] together with the order-preserving map from its vertex indices back
/// to the parent graph. The subgraph is always labeled with the parent's
/// vertex names.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    parent: GraphId,
    graph: Graph,
    vertex_map: Vec<usize>,
}

impl InducedSubgraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn parent_id(&self) -> GraphId {
        self.parent
    }

    /// `vertex_map()[i]` is the parent index of subgraph vertex `i`.
    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    /// The parent vertices covered by the subgraph.
    pub fn support_mask(&self) -> u64 {
        self.vertex_map.iter().fold(0, |acc, &v| acc | bit(v))
    }

    /// Maps a set of the subgraph into the parent's index space.
    pub fn lift(&self, set: &VertexSet) -> Result<VertexSet> {
        self.graph.check_owned(set)?;
        Ok(VertexSet::new(self.parent, self.lift_mask(set.bits)))
    }

    pub(crate) fn lift_mask(&self, mask: u64) -> u64 {
        iter_bits(mask).fold(0, |acc, i| acc | bit(self.vertex_map[i]))
    }

    /// Maps a parent set into the subgraph; fails unless the set lies inside
    /// the subgraph's vertex set.
    pub fn restrict(&self, set: &VertexSet) -> Result<VertexSet> {
        if set.graph != self.parent {
            return Err(Error::ForeignSet);
        }
        let support = self.support_mask();
        if set.bits & !support != 0 {
            let index = (set.bits & !support).trailing_zeros() as usize;
            return Err(Error::VertexOutOfRange {
                index,
                n: self.vertex_map.len(),
            });
        }
        let mask = self
            .vertex_map
            .iter()
            .enumerate()
            .filter(|(_, &v)| set.bits & bit(v) != 0)
            .fold(0, |acc, (i, _)| acc | bit(i));
        Ok(VertexSet::new(self.graph.id, mask))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_edge_list;

    fn star() -> Graph {
        parse_edge_list("x a\nx b\nx c").unwrap()
    }

    fn triangle_pendant() -> Graph {
        parse_edge_list("a b\nb c\nc a\nb d").unwrap()
    }

    fn spider() -> Graph {
        parse_edge_list("b a\na c\nc d\nc e\nc f").unwrap()
    }

    fn set(g: &Graph, s: &str) -> VertexSet {
        g.parse_vertex_set(s).unwrap()
    }

    #[test]
    fn open_neighborhood_examples() {
        let g = star();
        assert_eq!(
            g.open_neighborhood(&set(&g, "x")).unwrap(),
            set(&g, "a,b,c")
        );
        let g = spider();
        assert_eq!(
            g.open_neighborhood(&set(&g, "b,d,f")).unwrap(),
            set(&g, "a,c")
        );
        assert!(g.open_neighborhood(&g.empty_set()).unwrap().is_empty());
    }

    #[test]
    fn open_neighborhood_of_dependent_set_contains_members() {
        let g = triangle_pendant();
        let ab = set(&g, "a,b");
        assert!(ab.is_subset(&g.open_neighborhood(&ab).unwrap()));
    }

    #[test]
    fn closed_neighborhood_examples() {
        let g = spider();
        assert_eq!(
            g.closed_neighborhood(&set(&g, "a,d,e")).unwrap(),
            set(&g, "a,b,c,d,e")
        );
        assert_eq!(g.closed_neighborhood(&g.full_set()).unwrap(), g.full_set());
        let g = triangle_pendant();
        assert_eq!(
            g.closed_neighborhood(&set(&g, "a")).unwrap(),
            set(&g, "a,b,c")
        );
    }

    #[test]
    fn induced_subgraph_examples() {
        let g = triangle_pendant();
        let h = g.induced_subgraph(&set(&g, "a,b,c")).unwrap();
        assert_eq!(h.graph().n(), 3);
        assert_eq!(h.graph().edge_count(), 3);

        let h = g.induced_subgraph(&g.empty_set()).unwrap();
        assert_eq!(h.graph().n(), 0);

        let g = spider();
        let h = g.induced_subgraph(&set(&g, "a,b,c,d,f")).unwrap();
        let names: Vec<(String, String)> = h
            .graph()
            .edges()
            .map(|(u, v)| {
                let (mut x, mut y) = (h.graph().label(u), h.graph().label(v));
                if x > y {
                    std::mem::swap(&mut x, &mut y);
                }
                (x, y)
            })
            .collect();
        let mut names = names;
        names.sort();
        let expected: Vec<(String, String)> = [("a", "b"), ("a", "c"), ("c", "d"), ("c", "f")]
            .iter()
            .map(|(x, y)| (x.to_string(), y.to_string()))
            .collect();
        assert_eq!(names, expected);
        assert!(h.vertex_map().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn delete_closed_neighborhood_examples() {
        let g = spider();
        let h = g.delete_closed_neighborhood(&set(&g, "a,d,e")).unwrap();
        assert_eq!(h.graph().n(), 1);
        assert_eq!(h.graph().label(0), "f");

        let h = g.delete_closed_neighborhood(&g.empty_set()).unwrap();
        assert_eq!(h.graph().adjacency(), g.adjacency());
        assert_eq!(h.vertex_map(), &[0, 1, 2, 3, 4, 5]);

        let g = star();
        let h = g.delete_closed_neighborhood(&set(&g, "a,b,c")).unwrap();
        assert_eq!(h.graph().n(), 0);
    }

    #[test]
    fn foreign_sets_are_rejected() {
        let g = star();
        let other = star();
        let x = set(&other, "x");
        assert_eq!(g.open_neighborhood(&x), Err(Error::ForeignSet));
        assert_eq!(g.closed_neighborhood(&x), Err(Error::ForeignSet));
        assert!(matches!(g.induced_subgraph(&x), Err(Error::ForeignSet)));
        assert!(matches!(
            g.delete_closed_neighborhood(&x),
            Err(Error::ForeignSet)
        ));
    }

    #[test]
    fn lift_and_restrict_are_inverse() {
        let g = spider();
        let h = g.delete_closed_neighborhood(&set(&g, "a")).unwrap();
        let inner = h.graph().full_set();
        let lifted = h.lift(&inner).unwrap();
        assert_eq!(lifted, set(&g, "d,e,f"));
        assert_eq!(h.restrict(&lifted).unwrap(), inner);
        assert!(h.restrict(&set(&g, "a")).is_err());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Graph::from_edges(3, [(1, 1)]).unwrap_err(),
            Error::SelfLoop("1".into())
        );
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { index: 3, n: 3 })
        ));
        assert_eq!(Graph::empty(65).unwrap_err(), Error::TooManyVertices(65));
        assert!(Graph::from_adjacency(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_adjacency(vec![0b10, 0b01]).is_ok());
    }

    #[test]
    fn bipartite_detection() {
        assert!(star().is_bipartite());
        assert!(!triangle_pendant().is_bipartite());
        assert!(Graph::empty(0).unwrap().is_bipartite());
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(c4.is_bipartite());
    }

    #[test]
    fn complete_graph_on_64_vertices() {
        let g = Graph::complete(64).unwrap();
        assert_eq!(g.edge_count(), 64 * 63 / 2);
        assert_eq!(g.full_set().len(), 64);
    }
}
