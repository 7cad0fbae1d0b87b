//! Brute-force reference implementations, written straight from the
//! definitions and sharing no code with the library.

#![allow(dead_code)]

use lmis::Graph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Adjacency matrix copy of a graph.
pub struct Oracle {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
}

impl Oracle {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let adj = (0..n)
            .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
            .collect();
        Oracle { n, adj }
    }

    pub fn members(&self, set: u64) -> Vec<usize> {
        (0..self.n).filter(|&v| set >> v & 1 == 1).collect()
    }

    pub fn independent(&self, set: u64) -> bool {
        let m = self.members(set);
        m.iter().all(|&u| m.iter().all(|&v| !self.adj[u][v]))
    }

    pub fn open(&self, set: u64) -> u64 {
        let mut out = 0u64;
        for u in self.members(set) {
            for v in 0..self.n {
                if self.adj[u][v] {
                    out |= 1 << v;
                }
            }
        }
        out & !set
    }

    pub fn closed(&self, set: u64) -> u64 {
        self.open(set) | set
    }

    pub fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Every subset of `universe`.
    pub fn subsets(universe: u64) -> impl Iterator<Item = u64> {
        let mut sub = universe;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let cur = sub;
            if sub == 0 {
                done = true;
            } else {
                sub = (sub - 1) & universe;
            }
            Some(cur)
        })
    }

    /// α of the subgraph induced on `universe`, by trying every subset.
    pub fn alpha_within(&self, universe: u64) -> usize {
        Self::subsets(universe)
            .filter(|&s| self.independent(s))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn alpha(&self) -> usize {
        self.alpha_within(self.full())
    }

    pub fn independent_sets(&self) -> Vec<u64> {
        let mut v: Vec<u64> = Self::subsets(self.full())
            .filter(|&s| self.independent(s))
            .collect();
        v.sort_unstable();
        v
    }

    pub fn psi(&self) -> Vec<u64> {
        self.independent_sets()
            .into_iter()
            .filter(|&s| s.count_ones() as usize == self.alpha_within(self.closed(s)))
            .collect()
    }

    pub fn omega(&self) -> Vec<u64> {
        let a = self.alpha();
        self.independent_sets()
            .into_iter()
            .filter(|&s| s.count_ones() as usize == a)
            .collect()
    }

    pub fn diff(&self, set: u64) -> i64 {
        set.count_ones() as i64 - self.open(set).count_ones() as i64
    }

    pub fn crit(&self) -> Vec<u64> {
        let sets = self.independent_sets();
        let d = sets.iter().map(|&s| self.diff(s)).max().unwrap_or(0);
        sets.into_iter().filter(|&s| self.diff(s) == d).collect()
    }

    pub fn d(&self) -> i64 {
        self.independent_sets()
            .iter()
            .map(|&s| self.diff(s))
            .max()
            .unwrap_or(0)
    }

    /// Whether every vertex of `from` can be matched to a distinct vertex of
    /// `into` along an edge, by exhaustive assignment.
    pub fn saturates(&self, from: &[usize], into: u64) -> bool {
        match from.split_first() {
            None => true,
            Some((&u, rest)) => (0..self.n)
                .filter(|&v| into >> v & 1 == 1 && self.adj[u][v])
                .any(|v| self.saturates(rest, into & !(1 << v))),
        }
    }

    pub fn crown(&self) -> Vec<u64> {
        self.independent_sets()
            .into_iter()
            .filter(|&s| self.saturates(&self.members(self.open(s)), s))
            .collect()
    }

    /// Maximum matching size by branching on the lowest vertex that still has
    /// an available neighbor.
    pub fn matching_number(&self) -> usize {
        self.matching_within(self.full())
    }

    fn matching_within(&self, avail: u64) -> usize {
        let Some(u) = (0..self.n).find(|&u| avail >> u & 1 == 1) else {
            return 0;
        };
        let rest = avail & !(1 << u);
        let mut best = self.matching_within(rest);
        for v in 0..self.n {
            if rest >> v & 1 == 1 && self.adj[u][v] {
                best = best.max(1 + self.matching_within(rest & !(1 << v)));
            }
        }
        best
    }

    /// Maximum matching between `left` and `right` by branching on left
    /// vertices.
    pub fn bipartite_matching_number(&self, left: &[usize], right: u64) -> usize {
        match left.split_first() {
            None => 0,
            Some((&u, rest)) => {
                let mut best = self.bipartite_matching_number(rest, right);
                for v in 0..self.n {
                    if right >> v & 1 == 1 && self.adj[u][v] {
                        best =
                            best.max(1 + self.bipartite_matching_number(rest, right & !(1 << v)));
                    }
                }
                best
            }
        }
    }
}

/// Sorted masks of a library family.
pub fn masks_of(f: &lmis::independence::SetFamily) -> Vec<u64> {
    let mut v: Vec<u64> = f.iter().map(|s| s.bits()).collect();
    v.sort_unstable();
    v
}

/// G(n, p) with every pair drawn independently.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid random graph")
}

/// Edge densities used by the randomized suites.
pub const DENSITIES: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];
