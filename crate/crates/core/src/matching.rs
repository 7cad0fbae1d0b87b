//! Maximum matchings and Hall-type certificates.
//!
//! Bipartite problems (`left`/`right` sides inside one graph, only edges
//! across the sides count) use Hopcroft–Karp phases. General graphs use
//! Edmonds' blossom algorithm. Both scan vertices and neighbors in ascending
//! index order, so the returned matchings are deterministic.

use std::collections::VecDeque;

use serde::Serialize;

use crate::bits::{bit, iter_bits, popcount};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphId, VertexSet};
use crate::independence::{local_max_error, LocalAlpha};

const UNMATCHED: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges of one graph. Pairs are stored
/// as `(u, v)` with `u < v`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Matching {
    #[serde(skip)]
    graph: GraphId,
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub(crate) fn from_mates(graph: GraphId, mate: &[usize]) -> Self {
        let pairs = mate
            .iter()
            .enumerate()
            .filter(|&(v, &m)| m != UNMATCHED && v < m)
            .map(|(v, &m)| (v, m))
            .collect();
        Matching { graph, pairs }
    }

    pub fn graph_id(&self) -> GraphId {
        self.graph
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.pairs.iter().find_map(|&(a, b)| match v {
            _ if v == a => Some(b),
            _ if v == b => Some(a),
            _ => None,
        })
    }

    /// Mask of matched vertices.
    pub fn covered_mask(&self) -> u64 {
        self.pairs
            .iter()
            .fold(0, |acc, &(a, b)| acc | bit(a) | bit(b))
    }

    /// Checks the matching invariants against `g`: every pair is an edge and
    /// no vertex is used twice.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut used = 0u64;
        for &(a, b) in &self.pairs {
            if !g.has_edge(a, b) || used & (bit(a) | bit(b)) != 0 {
                return false;
            }
            used |= bit(a) | bit(b);
        }
        self.graph == g.id()
    }

    /// Renders as `{a-b, c-d}` with vertex names.
    pub fn format(&self, g: &Graph) -> String {
        let items: Vec<String> = self
            .pairs
            .iter()
            .map(|&(a, b)| format!("{}-{}", g.label(a), g.label(b)))
            .collect();
        format!("{{{}}}", items.join(", "))
    }
}

/// Outcome of trying to saturate `source` into `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SaturationResult {
    /// Every source vertex is matched into the target.
    Saturating(Matching),
    /// A Hall violator: `X ⊆ source` with `|N(X) ∩ target| < |X|`.
    Violator(VertexSet),
}

impl SaturationResult {
    pub fn is_saturating(&self) -> bool {
        matches!(self, SaturationResult::Saturating(_))
    }
}

// ============================================================================
// Bipartite engine
// ============================================================================

/// Hopcroft–Karp on the bipartite subgraph between two disjoint masks.
/// Returns a mate array over all vertices of the graph.
pub(crate) fn bipartite_mates(adj: &[u64], left: u64, right: u64) -> Vec<usize> {
    let mut mate = vec![UNMATCHED; adj.len()];
    let mut dist = vec![u32::MAX; adj.len()];
    loop {
        // Layering from the free left vertices.
        let mut queue = VecDeque::new();
        for u in iter_bits(left) {
            if mate[u] == UNMATCHED {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = u32::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for w in iter_bits(adj[u] & right) {
                let m = mate[w];
                if m == UNMATCHED {
                    found = true;
                } else if dist[m] == u32::MAX {
                    dist[m] = dist[u] + 1;
                    queue.push_back(m);
                }
            }
        }
        if !found {
            return mate;
        }
        for u in iter_bits(left) {
            if mate[u] == UNMATCHED {
                augment(adj, right, u, &mut mate, &mut dist);
            }
        }
    }
}

fn augment(adj: &[u64], right: u64, u: usize, mate: &mut [usize], dist: &mut [u32]) -> bool {
    for w in iter_bits(adj[u] & right) {
        let m = mate[w];
        let ok = m == UNMATCHED
            || (dist[m] == dist[u].wrapping_add(1) && augment(adj, right, m, mate, dist));
        if ok {
            mate[u] = w;
            mate[w] = u;
            return true;
        }
    }
    dist[u] = u32::MAX;
    false
}

/// Size of a maximum matching between the masks; `true` when it saturates
/// `source`.
pub(crate) fn saturates(adj: &[u64], source: u64, target: u64) -> bool {
    if popcount(source) > popcount(target) {
        return false;
    }
    let mate = bipartite_mates(adj, source, target);
    iter_bits(source).all(|v| mate[v] != UNMATCHED)
}

/// Source vertices reachable by alternating paths (any edge from source to
/// target, matching edge back) from the unmatched source vertices.
fn hall_violator(adj: &[u64], source: u64, target: u64, mate: &[usize]) -> u64 {
    let mut reached = 0u64;
    let mut queue: VecDeque<usize> = iter_bits(source)
        .filter(|&v| mate[v] == UNMATCHED)
        .collect();
    for &v in &queue {
        reached |= bit(v);
    }
    let mut seen_target = 0u64;
    while let Some(u) = queue.pop_front() {
        for w in iter_bits(adj[u] & target & !seen_target) {
            seen_target |= bit(w);
            let m = mate[w];
            debug_assert_ne!(m, UNMATCHED, "augmenting path left after maximum matching");
            if reached & bit(m) == 0 {
                reached |= bit(m);
                queue.push_back(m);
            }
        }
    }
    reached
}

fn check_sides(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<()> {
    if a.graph_id() != g.id() || b.graph_id() != g.id() {
        return Err(Error::ForeignSet);
    }
    if a.bits() & b.bits() != 0 {
        return Err(Error::OverlappingSides);
    }
    Ok(())
}

/// Maximum matching of the bipartite subgraph formed by the edges between
/// `left` and `right`.
pub fn max_bipartite_matching(g: &Graph, left: &VertexSet, right: &VertexSet) -> Result<Matching> {
    check_sides(g, left, right)?;
    let mate = bipartite_mates(g.adjacency(), left.bits(), right.bits());
    Ok(Matching::from_mates(g.id(), &mate))
}

/// Either a matching saturating `source` into `target`, or a Hall violator
/// inside `source`.
pub fn saturating_matching(
    g: &Graph,
    source: &VertexSet,
    target: &VertexSet,
) -> Result<SaturationResult> {
    check_sides(g, source, target)?;
    let adj = g.adjacency();
    let mate = bipartite_mates(adj, source.bits(), target.bits());
    if iter_bits(source.bits()).all(|v| mate[v] != UNMATCHED) {
        return Ok(SaturationResult::Saturating(Matching::from_mates(
            g.id(),
            &mate,
        )));
    }
    let x = hall_violator(adj, source.bits(), target.bits(), &mate);
    Ok(SaturationResult::Violator(source.with_bits(x)))
}

// ============================================================================
// General matching (Edmonds)
// ============================================================================

struct Blossom<'a> {
    adj: &'a [u64],
    n: usize,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [u64]) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            n,
            mate: vec![UNMATCHED; n],
            parent: vec![UNMATCHED; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; self.n];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if self.mate[a] == UNMATCHED {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn contract(&mut self, v: usize, u: usize) {
        let cur = self.lca(v, u);
        self.in_blossom.iter_mut().for_each(|x| *x = false);
        self.mark_path(v, cur, u);
        self.mark_path(u, cur, v);
        for i in 0..self.n {
            if self.in_blossom[self.base[i]] {
                self.base[i] = cur;
                if !self.used[i] {
                    self.used[i] = true;
                    self.queue.push_back(i);
                }
            }
        }
    }

    /// Searches an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = UNMATCHED);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for u in iter_bits(self.adj[v]) {
                if self.base[v] == self.base[u] || self.mate[v] == u {
                    continue;
                }
                if u == root
                    || (self.mate[u] != UNMATCHED && self.parent[self.mate[u]] != UNMATCHED)
                {
                    self.contract(v, u);
                } else if self.parent[u] == UNMATCHED {
                    self.parent[u] = v;
                    if self.mate[u] == UNMATCHED {
                        return Some(u);
                    }
                    let w = self.mate[u];
                    self.used[w] = true;
                    self.queue.push_back(w);
                }
            }
        }
        None
    }

    fn run(mut self) -> Vec<usize> {
        for root in 0..self.n {
            if self.mate[root] != UNMATCHED {
                continue;
            }
            if let Some(mut v) = self.find_path(root) {
                while v != UNMATCHED {
                    let pv = self.parent[v];
                    let ppv = self.mate[pv];
                    self.mate[v] = pv;
                    self.mate[pv] = v;
                    v = ppv;
                }
            }
        }
        self.mate
    }
}

pub(crate) fn max_matching_mates(adj: &[u64]) -> Vec<usize> {
    Blossom::new(adj).run()
}

/// Maximum matching of a general graph; `μ(G)` is its length.
pub fn max_matching(g: &Graph) -> Matching {
    Matching::from_mates(g.id(), &max_matching_mates(g.adjacency()))
}

/// μ(G[mask]).
pub(crate) fn matching_number_within(adj: &[u64], mask: u64) -> usize {
    let restricted: Vec<u64> = adj
        .iter()
        .enumerate()
        .map(|(v, row)| if mask & bit(v) != 0 { row & mask } else { 0 })
        .collect();
    max_matching_mates(&restricted)
        .iter()
        .filter(|&&m| m != UNMATCHED)
        .count()
        / 2
}

// ============================================================================
// Cross matching between two local maximum independent sets
// ============================================================================

/// A perfect matching between `S ∩ N(T)` and `T ∩ N(S)` for `S, T ∈ Ψ(G)`.
///
/// `T ∩ N(S)` is matched into `S ∖ T`; every image vertex lies in `S ∩ N(T)`.
/// The symmetric run must saturate `S ∩ N(T)` as well, which forces equal
/// sizes and makes the first matching perfect.
pub fn cross_matching(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<Matching> {
    g.check_owned(s)?;
    g.check_owned(t)?;
    let mut local = LocalAlpha::new(g.adjacency());
    for x in [s, t] {
        if !local.is_local_max(x.bits()) {
            return Err(local_max_error(g, x, &mut local));
        }
    }
    cross_matching_masks(g.adjacency(), s.bits(), t.bits())
        .map(|mate| Matching::from_mates(g.id(), &mate))
        .map_err(Error::InternalContradiction)
}

pub(crate) fn cross_matching_masks(
    adj: &[u64],
    s: u64,
    t: u64,
) -> std::result::Result<Vec<usize>, String> {
    let ns = crate::bits::open_nbhd(adj, s);
    let nt = crate::bits::open_nbhd(adj, t);
    let s_side = s & nt;
    let t_side = t & ns;

    let mate = bipartite_mates(adj, t_side, s & !t);
    if let Some(v) = iter_bits(t_side).find(|&v| mate[v] == UNMATCHED) {
        return Err(format!("vertex {v} of T∩N(S) cannot be matched into S∖T"));
    }
    if let Some(v) = iter_bits(t_side).find(|&v| s_side & bit(mate[v]) == 0) {
        return Err(format!("vertex {v} of T∩N(S) is matched outside S∩N(T)"));
    }
    if !saturates(adj, s_side, t & !s) {
        return Err("S∩N(T) cannot be matched into T∖S".into());
    }
    if popcount(s_side) != popcount(t_side) {
        return Err(format!(
            "|S∩N(T)| = {} differs from |T∩N(S)| = {}",
            popcount(s_side),
            popcount(t_side)
        ));
    }
    Ok(mate)
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

    /// Exhaustive maximum over all edge subsets; only for tiny graphs.
    fn brute_force_over_edge_subsets(g: &Graph, allowed: impl Fn(usize, usize) -> bool) -> usize {
        let edges: Vec<(usize, usize)> = g.edges().filter(|&(u, v)| allowed(u, v)).collect();
        let mut best = 0;
        for pick in 0u32..(1 << edges.len()) {
            let mut used = 0u64;
            let mut ok = true;
            for (i, &(u, v)) in edges.iter().enumerate() {
                if pick & (1 << i) != 0 {
                    if used & (bit(u) | bit(v)) != 0 {
                        ok = false;
                        break;
                    }
                    used |= bit(u) | bit(v);
                }
            }
            if ok {
                best = best.max(pick.count_ones() as usize);
            }
        }
        best
    }

    #[test]
    fn bipartite_examples() {
        let g = star();
        let m = max_bipartite_matching(&g, &set(&g, "x"), &set(&g, "a,b,c")).unwrap();
        assert_eq!(m.len(), 1);
        assert!(m.is_valid_in(&g));

        let g = spider();
        let (left, right) = (set(&g, "b,c"), set(&g, "a,d,e,f"));
        let m = max_bipartite_matching(&g, &left, &right).unwrap();
        let lb = left.bits();
        let rb = right.bits();
        let oracle = brute_force_over_edge_subsets(&g, |u, v| {
            (lb & bit(u) != 0 && rb & bit(v) != 0) || (lb & bit(v) != 0 && rb & bit(u) != 0)
        });
        assert_eq!(oracle, 2);
        assert_eq!(m.len(), 2);
        assert!(m.is_valid_in(&g));

        let m = max_bipartite_matching(&g, &g.empty_set(), &right).unwrap();
        assert!(m.is_empty());
    }

    #[test]
    fn bipartite_side_errors() {
        let g = spider();
        assert_eq!(
            max_bipartite_matching(&g, &set(&g, "a,b"), &set(&g, "b,c")),
            Err(Error::OverlappingSides)
        );
        let other = spider();
        assert_eq!(
            max_bipartite_matching(&g, &set(&other, "a"), &set(&g, "b")),
            Err(Error::ForeignSet)
        );
        assert_eq!(
            saturating_matching(&g, &set(&g, "a"), &set(&g, "a")),
            Err(Error::OverlappingSides)
        );
    }

    #[test]
    fn saturation_examples() {
        let g = triangle_pendant();
        let source = g.open_neighborhood(&set(&g, "a")).unwrap();
        assert_eq!(source, set(&g, "b,c"));
        match saturating_matching(&g, &source, &set(&g, "a")).unwrap() {
            SaturationResult::Violator(x) => {
                assert_eq!(x, set(&g, "b,c"));
                let nx = g.open_neighborhood(&x).unwrap() & set(&g, "a");
                assert!(nx.len() < x.len());
            }
            other => panic!("expected violator, got {other:?}"),
        }

        let g = star();
        let leaves = set(&g, "a,b,c");
        let source = g.open_neighborhood(&leaves).unwrap();
        match saturating_matching(&g, &source, &leaves).unwrap() {
            SaturationResult::Saturating(m) => {
                assert_eq!(m.len(), 1);
                assert!(leaves.contains(m.mate(0).unwrap()));
            }
            other => panic!("expected matching, got {other:?}"),
        }

        let r = saturating_matching(&g, &g.empty_set(), &leaves).unwrap();
        assert_eq!(
            r,
            SaturationResult::Saturating(Matching {
                graph: g.id(),
                pairs: vec![]
            })
        );
    }

    #[test]
    fn general_matching_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(max_matching(&k3).len(), 1);

        let g = triangle_pendant();
        assert_eq!(brute_force_over_edge_subsets(&g, |_, _| true), 2);
        let m = max_matching(&g);
        assert_eq!(m.len(), 2);
        assert!(m.is_valid_in(&g));

        assert_eq!(max_matching(&star()).len(), 1);
        assert_eq!(max_matching(&Graph::empty(0).unwrap()).len(), 0);
    }

    #[test]
    fn blossom_needs_contraction() {
        // Two triangles joined by a path: 0-1-2-0, 2-3, 3-4, 4-5-6-4. μ = 3.
        let g = Graph::from_edges(
            7,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 4),
            ],
        )
        .unwrap();
        assert_eq!(max_matching(&g).len(), 3);
        // Petersen graph has a perfect matching.
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let petersen = Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        let m = max_matching(&petersen);
        assert_eq!(m.len(), 5);
        assert!(m.is_valid_in(&petersen));
    }

    #[test]
    fn cross_matching_examples() {
        let g = spider();
        let (s, t) = (set(&g, "a,d,e"), set(&g, "b,d,f"));
        let m = cross_matching(&g, &s, &t).unwrap();
        assert_eq!(m.format(&g), "{b-a}");
        assert_eq!(m.len(), 1);

        let m = cross_matching(&g, &s, &s).unwrap();
        assert!(m.is_empty());

        // Disjoint members of Ψ with independent union.
        let g = star();
        let m = cross_matching(&g, &set(&g, "a"), &set(&g, "b,c")).unwrap();
        assert!(m.is_empty());
    }

    #[test]
    fn cross_matching_rejects_non_members() {
        let g = spider();
        let err = cross_matching(&g, &set(&g, "a"), &set(&g, "b,d,f")).unwrap_err();
        assert!(
            matches!(
                err,
                Error::NotLocalMax {
                    size: 1,
                    local_alpha: Some(2),
                    ..
                }
            ),
            "{err:?}"
        );
        let err = cross_matching(&g, &set(&g, "a,b"), &set(&g, "b,d,f")).unwrap_err();
        assert!(matches!(
            err,
            Error::NotLocalMax {
                local_alpha: None,
                ..
            }
        ));
    }
}
