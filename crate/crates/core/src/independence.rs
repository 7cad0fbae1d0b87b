//! Independence numbers and the families Ω(G), Ψ(G), Crown(G), CritIndep(G).
//!
//! α is computed exactly by branch and bound over bitsets. Families are
//! obtained by enumerating every independent set (backtracking over
//! ascending vertex indices) and filtering through the family predicate.
//! Ψ membership of `S` only depends on `N[S]`, so α(G[N[S]]) is memoized by
//! that mask within one enumeration.

use std::collections::HashMap;

use serde::Serialize;

use crate::bits::{self, above, bit, iter_bits, popcount};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphId, VertexSet};
use crate::matching;

// ============================================================================
// Exact maximum independent set
// ============================================================================

/// A maximum independent set of `G[cand]`, as a mask.
pub(crate) fn max_independent_within(adj: &[u64], cand: u64) -> u64 {
    let mut best = 0u64;
    branch(adj, cand, 0, &mut best);
    best
}

/// α(G[cand]).
pub(crate) fn alpha_within(adj: &[u64], cand: u64) -> usize {
    popcount(max_independent_within(adj, cand))
}

fn branch(adj: &[u64], mut cand: u64, mut chosen: u64, best: &mut u64) {
    // Vertices of degree at most one inside `cand` belong to some maximum
    // independent set of G[cand].
    loop {
        let forced = iter_bits(cand).find(|&v| popcount(adj[v] & cand) <= 1);
        match forced {
            Some(v) => {
                chosen |= bit(v);
                cand &= !(bit(v) | adj[v]);
            }
            None => break,
        }
    }
    if cand == 0 {
        if popcount(chosen) > popcount(*best) {
            *best = chosen;
        }
        return;
    }
    if popcount(chosen) + clique_cover_bound(adj, cand) <= popcount(*best) {
        return;
    }
    let pivot = iter_bits(cand)
        .max_by_key(|&v| (popcount(adj[v] & cand), std::cmp::Reverse(v)))
        .expect("cand is nonempty");
    branch(
        adj,
        cand & !(bit(pivot) | adj[pivot]),
        chosen | bit(pivot),
        best,
    );
    branch(adj, cand & !bit(pivot), chosen, best);
}

/// Number of cliques in a greedy clique cover of `G[cand]`; an upper bound
/// on α(G[cand]).
fn clique_cover_bound(adj: &[u64], mut cand: u64) -> usize {
    let mut cliques = 0;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= !bit(v);
        let mut extend = adj[v] & cand;
        while extend != 0 {
            let w = extend.trailing_zeros() as usize;
            cand &= !bit(w);
            extend &= adj[w] & !bit(w);
        }
        cliques += 1;
    }
    cliques
}

/// Calls `f` on every independent set inside `universe`, in backtracking
/// order (each set before its extensions by larger indices).
pub(crate) fn for_each_independent(adj: &[u64], universe: u64, f: &mut impl FnMut(u64)) {
    fn rec(adj: &[u64], current: u64, allowed: u64, f: &mut impl FnMut(u64)) {
        f(current);
        for v in iter_bits(allowed) {
            rec(adj, current | bit(v), allowed & !adj[v] & above(v), f);
        }
    }
    rec(adj, 0, universe, f);
}

pub(crate) fn independent_masks(adj: &[u64], universe: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for_each_independent(adj, universe, &mut |s| out.push(s));
    out
}

/// Memoized α(G[N[S]]) for Ψ membership tests on one graph.
pub(crate) struct LocalAlpha<'a> {
    adj: &'a [u64],
    cache: HashMap<u64, usize>,
}

impl<'a> LocalAlpha<'a> {
    pub(crate) fn new(adj: &'a [u64]) -> Self {
        LocalAlpha {
            adj,
            cache: HashMap::new(),
        }
    }

    pub(crate) fn alpha_of(&mut self, mask: u64) -> usize {
        let adj = self.adj;
        *self
            .cache
            .entry(mask)
            .or_insert_with(|| alpha_within(adj, mask))
    }

    /// α(G[N[S]]); only meaningful for independent `s`.
    pub(crate) fn local_alpha(&mut self, s: u64) -> usize {
        self.alpha_of(bits::closed_nbhd(self.adj, s))
    }

    pub(crate) fn is_local_max(&mut self, s: u64) -> bool {
        bits::is_independent(self.adj, s) && popcount(s) == self.local_alpha(s)
    }
}

pub(crate) fn local_max_error(g: &Graph, s: &VertexSet, local: &mut LocalAlpha<'_>) -> Error {
    let independent = bits::is_independent(g.adjacency(), s.bits());
    Error::NotLocalMax {
        set: g.format_set(s),
        size: s.len(),
        local_alpha: independent.then(|| local.local_alpha(s.bits())),
    }
}

pub(crate) fn ensure_local_max(g: &Graph, s: &VertexSet) -> Result<()> {
    g.check_owned(s)?;
    let mut local = LocalAlpha::new(g.adjacency());
    if local.is_local_max(s.bits()) {
        Ok(())
    } else {
        Err(local_max_error(g, s, &mut local))
    }
}

// ============================================================================
// Families
// ============================================================================

/// The four families defined for every graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BaseFamily {
    Omega,
    Psi,
    Crown,
    CritIndep,
}

impl BaseFamily {
    pub const ALL: [BaseFamily; 4] = [
        BaseFamily::CritIndep,
        BaseFamily::Crown,
        BaseFamily::Psi,
        BaseFamily::Omega,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BaseFamily::Omega => "Omega",
            BaseFamily::Psi => "Psi",
            BaseFamily::Crown => "Crown",
            BaseFamily::CritIndep => "CritIndep",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Base(BaseFamily),
    /// Ψ_S(G): members of Ψ(G) containing S.
    PsiExtensions(VertexSet),
    /// Ω_S(G): members of Ω(G) containing S.
    OmegaExtensions(VertexSet),
    /// An arbitrary family supplied by the caller.
    Custom,
}

/// A family of vertex sets of one graph, deduplicated and kept in canonical
/// order (cardinality, then lexicographic).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    kind: FamilyKind,
    graph: GraphId,
    members: Vec<VertexSet>,
}

impl SetFamily {
    pub(crate) fn from_masks(
        kind: FamilyKind,
        graph: GraphId,
        masks: impl IntoIterator<Item = u64>,
    ) -> Self {
        let mut masks: Vec<u64> = masks.into_iter().collect();
        masks.sort_by(|a, b| bits::canonical_cmp(*a, *b));
        masks.dedup();
        SetFamily {
            kind,
            graph,
            members: masks
                .into_iter()
                .map(|m| VertexSet::new(graph, m))
                .collect(),
        }
    }

    /// A caller-defined family over `g`. Members need not be independent.
    pub fn custom(g: &Graph, members: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        let mut masks = Vec::new();
        for m in members {
            g.check_owned(&m)?;
            masks.push(m.bits());
        }
        Ok(Self::from_masks(FamilyKind::Custom, g.id(), masks))
    }

    pub fn kind(&self) -> &FamilyKind {
        &self.kind
    }

    pub fn graph_id(&self) -> GraphId {
        self.graph
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexSet> {
        self.members.iter()
    }

    pub fn masks(&self) -> impl Iterator<Item = u64> + '_ {
        self.members.iter().map(|s| s.bits())
    }

    pub fn contains(&self, set: &VertexSet) -> bool {
        self.members.binary_search(set).is_ok()
    }

    pub fn contains_mask(&self, mask: u64) -> bool {
        self.members
            .binary_search_by(|m| bits::canonical_cmp(m.bits(), mask))
            .is_ok()
    }

    /// Membership as sets, ignoring the kind.
    pub fn same_members(&self, other: &SetFamily) -> bool {
        self.graph == other.graph && self.members == other.members
    }

    pub fn is_subfamily_of(&self, other: &SetFamily) -> bool {
        self.graph == other.graph && self.members.iter().all(|m| other.contains(m))
    }

    /// Intersection of all members; the empty family yields the empty set.
    pub fn intersection_mask(&self) -> u64 {
        let mut it = self.masks();
        match it.next() {
            Some(first) => it.fold(first, |acc, m| acc & m),
            None => 0,
        }
    }

    pub fn union_mask(&self) -> u64 {
        self.masks().fold(0, |acc, m| acc | m)
    }

    /// Renders as `{{}, {a}, {a,b}}` with vertex names.
    pub fn format(&self, g: &Graph) -> String {
        let items: Vec<String> = self.members.iter().map(|s| g.format_set(s)).collect();
        format!("{{{}}}", items.join(", "))
    }
}

/// d(G) with a witness attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalProfile {
    pub d_of_g: i64,
    pub witness: VertexSet,
}

// ============================================================================
// Single-graph predicates and numbers
// ============================================================================

pub fn is_independent(g: &Graph, s: &VertexSet) -> Result<bool> {
    g.check_owned(s)?;
    Ok(bits::is_independent(g.adjacency(), s.bits()))
}

pub fn alpha(g: &Graph) -> usize {
    alpha_within(g.adjacency(), g.full_set().bits())
}

pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    g.full_set()
        .with_bits(max_independent_within(g.adjacency(), g.full_set().bits()))
}

/// Every independent set of `g`, in canonical order.
pub fn independent_sets(g: &Graph) -> Vec<VertexSet> {
    let mut masks = independent_masks(g.adjacency(), g.full_set().bits());
    masks.sort_by(|a, b| bits::canonical_cmp(*a, *b));
    masks
        .into_iter()
        .map(|m| g.full_set().with_bits(m))
        .collect()
}

/// d(X) = |X| − |N(X)|, defined for every vertex set.
pub fn diff(g: &Graph, x: &VertexSet) -> Result<i64> {
    let n = g.open_neighborhood(x)?;
    Ok(x.len() as i64 - n.len() as i64)
}

pub(crate) fn diff_mask(adj: &[u64], x: u64) -> i64 {
    popcount(x) as i64 - popcount(bits::open_nbhd(adj, x)) as i64
}

pub fn critical_difference(g: &Graph) -> CriticalProfile {
    let adj = g.adjacency();
    let mut best: Option<(i64, u64)> = None;
    for_each_independent(adj, g.full_set().bits(), &mut |s| {
        let d = diff_mask(adj, s);
        let better = match best {
            None => true,
            Some((bd, bs)) => {
                d > bd || (d == bd && bits::canonical_cmp(s, bs) == std::cmp::Ordering::Greater)
            }
        };
        if better {
            best = Some((d, s));
        }
    });
    let (d_of_g, witness) = best.expect("the empty set is independent");
    CriticalProfile {
        d_of_g,
        witness: g.full_set().with_bits(witness),
    }
}

/// S ∈ Ψ(G): S is independent and a maximum independent set of G[N[S]].
pub fn is_local_max_independent(g: &Graph, s: &VertexSet) -> Result<bool> {
    g.check_owned(s)?;
    Ok(LocalAlpha::new(g.adjacency()).is_local_max(s.bits()))
}

/// S ∈ Crown(G): S is independent and N(S) can be matched into S.
pub fn is_crown(g: &Graph, s: &VertexSet) -> Result<bool> {
    g.check_owned(s)?;
    Ok(is_crown_mask(g.adjacency(), s.bits()))
}

pub(crate) fn is_crown_mask(adj: &[u64], s: u64) -> bool {
    bits::is_independent(adj, s) && matching::saturates(adj, bits::open_nbhd(adj, s), s)
}

pub fn is_critical(g: &Graph, s: &VertexSet) -> Result<bool> {
    g.check_owned(s)?;
    if !bits::is_independent(g.adjacency(), s.bits()) {
        return Ok(false);
    }
    Ok(diff_mask(g.adjacency(), s.bits()) == critical_difference(g).d_of_g)
}

pub fn is_konig_egervary(g: &Graph) -> bool {
    alpha(g) + matching::max_matching(g).len() == g.n()
}

/// α(G[mask]) + μ(G[mask]) = |mask|.
pub(crate) fn is_konig_egervary_within(adj: &[u64], mask: u64) -> bool {
    alpha_within(adj, mask) + matching::matching_number_within(adj, mask) == popcount(mask)
}

pub fn enumerate_omega(g: &Graph) -> SetFamily {
    enumerate_family(g, BaseFamily::Omega)
}

/// (core(G), corona(G)): intersection and union of Ω(G).
pub fn core_and_corona(g: &Graph) -> (VertexSet, VertexSet) {
    let omega = enumerate_omega(g);
    (
        g.full_set().with_bits(omega.intersection_mask()),
        g.full_set().with_bits(omega.union_mask()),
    )
}

pub fn enumerate_family(g: &Graph, kind: BaseFamily) -> SetFamily {
    let survey = FamilySurvey::compute(g);
    match kind {
        BaseFamily::Omega => survey.omega,
        BaseFamily::Psi => survey.psi,
        BaseFamily::Crown => survey.crown,
        BaseFamily::CritIndep => survey.crit,
    }
}

/// All four families, α and d(G) from a single pass over the independent
/// sets of `g`.
#[derive(Clone, Debug)]
pub struct FamilySurvey {
    pub alpha: usize,
    pub critical: CriticalProfile,
    pub omega: SetFamily,
    pub psi: SetFamily,
    pub crown: SetFamily,
    pub crit: SetFamily,
}

impl FamilySurvey {
    pub fn compute(g: &Graph) -> Self {
        let adj = g.adjacency();
        let sets = independent_masks(adj, g.full_set().bits());
        let diffs: Vec<i64> = sets.iter().map(|&s| diff_mask(adj, s)).collect();
        let alpha = sets.iter().map(|&s| popcount(s)).max().unwrap_or(0);
        let d_of_g = diffs.iter().copied().max().unwrap_or(0);

        let mut local = LocalAlpha::new(adj);
        let psi: Vec<u64> = sets
            .iter()
            .copied()
            .filter(|&s| popcount(s) == local.local_alpha(s))
            .collect();
        let crown: Vec<u64> = sets
            .iter()
            .copied()
            .filter(|&s| is_crown_mask(adj, s))
            .collect();
        let crit: Vec<u64> = sets
            .iter()
            .zip(&diffs)
            .filter(|(_, &d)| d == d_of_g)
            .map(|(&s, _)| s)
            .collect();
        let omega: Vec<u64> = sets
            .iter()
            .copied()
            .filter(|&s| popcount(s) == alpha)
            .collect();

        let id = g.id();
        let crit = SetFamily::from_masks(FamilyKind::Base(BaseFamily::CritIndep), id, crit);
        let witness = *crit
            .members()
            .last()
            .expect("d(G) is attained by some independent set");
        FamilySurvey {
            alpha,
            critical: CriticalProfile { d_of_g, witness },
            omega: SetFamily::from_masks(FamilyKind::Base(BaseFamily::Omega), id, omega),
            psi: SetFamily::from_masks(FamilyKind::Base(BaseFamily::Psi), id, psi),
            crown: SetFamily::from_masks(FamilyKind::Base(BaseFamily::Crown), id, crown),
            crit,
        }
    }

    pub fn family(&self, kind: BaseFamily) -> &SetFamily {
        match kind {
            BaseFamily::Omega => &self.omega,
            BaseFamily::Psi => &self.psi,
            BaseFamily::Crown => &self.crown,
            BaseFamily::CritIndep => &self.crit,
        }
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

    fn family(g: &Graph, sets: &[&str]) -> SetFamily {
        SetFamily::custom(g, sets.iter().map(|s| set(g, s))).unwrap()
    }

    /// α by scanning every subset.
    fn brute_alpha(g: &Graph) -> usize {
        (0u64..1 << g.n())
            .filter(|&s| bits::is_independent(g.adjacency(), s))
            .map(popcount)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn independence_examples() {
        let g = spider();
        assert!(is_independent(&g, &set(&g, "a,d,e")).unwrap());
        let g = triangle_pendant();
        assert!(!is_independent(&g, &set(&g, "a,c")).unwrap());
        assert!(is_independent(&g, &g.empty_set()).unwrap());
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(&star()), 3);
        assert_eq!(alpha(&spider()), 4);
        assert_eq!(brute_alpha(&triangle_pendant()), 2);
        assert_eq!(alpha(&triangle_pendant()), 2);
        assert_eq!(alpha(&Graph::empty(0).unwrap()), 0);
        assert_eq!(alpha(&Graph::complete(64).unwrap()), 1);
        assert_eq!(alpha(&Graph::empty(64).unwrap()), 64);
    }

    #[test]
    fn omega_examples() {
        let g = star();
        assert!(enumerate_omega(&g).same_members(&family(&g, &["a,b,c"])));
        let g = spider();
        assert!(enumerate_omega(&g).same_members(&family(&g, &["a,d,e,f", "b,d,e,f"])));
        let k3 = Graph::complete(3).unwrap();
        assert!(enumerate_omega(&k3).same_members(&family(&k3, &["0", "1", "2"])));
    }

    #[test]
    fn core_corona_examples() {
        let g = star();
        assert_eq!(core_and_corona(&g), (set(&g, "a,b,c"), set(&g, "a,b,c")));
        let g = spider();
        assert_eq!(
            core_and_corona(&g),
            (set(&g, "d,e,f"), set(&g, "a,b,d,e,f"))
        );
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(core_and_corona(&k3), (k3.empty_set(), k3.full_set()));
    }

    #[test]
    fn diff_examples() {
        let g = star();
        assert_eq!(diff(&g, &set(&g, "a,b,c")).unwrap(), 2);
        assert_eq!(diff(&g, &g.empty_set()).unwrap(), 0);
        let g = triangle_pendant();
        assert_eq!(diff(&g, &set(&g, "a")).unwrap(), -1);
    }

    #[test]
    fn critical_difference_examples() {
        let g = star();
        let p = critical_difference(&g);
        assert_eq!(p.d_of_g, 2);
        assert_eq!(p.witness, set(&g, "a,b,c"));

        assert_eq!(critical_difference(&triangle_pendant()).d_of_g, 0);

        let e5 = Graph::empty(5).unwrap();
        let p = critical_difference(&e5);
        assert_eq!(p.d_of_g, 5);
        assert_eq!(p.witness, e5.full_set());

        let survey = FamilySurvey::compute(&g);
        assert_eq!(survey.critical, critical_difference(&g));
    }

    #[test]
    fn local_max_examples() {
        let g = triangle_pendant();
        assert!(is_local_max_independent(&g, &set(&g, "a")).unwrap());
        let g = spider();
        assert!(is_local_max_independent(&g, &set(&g, "b,d,f")).unwrap());
        assert!(!is_local_max_independent(&g, &set(&g, "a")).unwrap());
        assert!(!is_local_max_independent(&g, &set(&g, "a,b")).unwrap());
    }

    #[test]
    fn crown_examples() {
        let g = triangle_pendant();
        assert!(!is_crown(&g, &set(&g, "a")).unwrap());
        let g = star();
        assert!(is_crown(&g, &set(&g, "a,b")).unwrap());
        assert!(is_crown(&g, &g.empty_set()).unwrap());
    }

    #[test]
    fn critical_examples() {
        let g = star();
        assert!(is_critical(&g, &set(&g, "a,b,c")).unwrap());
        assert!(!is_critical(&g, &set(&g, "a,b")).unwrap());
        let g = triangle_pendant();
        assert!(is_critical(&g, &set(&g, "d")).unwrap());
        assert!(!is_critical(&g, &set(&g, "a")).unwrap());
    }

    #[test]
    fn family_examples() {
        let g = triangle_pendant();
        let expected = family(&g, &["", "d", "a,d", "c,d"]);
        assert!(enumerate_family(&g, BaseFamily::Crown).same_members(&expected));
        assert!(enumerate_family(&g, BaseFamily::CritIndep).same_members(&expected));

        let g = star();
        let psi = enumerate_family(&g, BaseFamily::Psi);
        assert_eq!(psi.len(), 8);
        assert!(psi.iter().all(|s| s.is_subset(&set(&g, "a,b,c"))));
    }

    #[test]
    fn canonical_family_order() {
        let g = star();
        let psi = enumerate_family(&g, BaseFamily::Psi);
        let rendered = psi.format(&g);
        assert_eq!(
            rendered,
            "{{}, {a}, {b}, {c}, {a,b}, {a,c}, {b,c}, {a,b,c}}"
        );
    }

    #[test]
    fn konig_egervary_examples() {
        assert!(is_konig_egervary(&star()));
        assert!(!is_konig_egervary(&Graph::complete(3).unwrap()));
        assert!(is_konig_egervary(&triangle_pendant()));
        assert!(is_konig_egervary(&Graph::empty(0).unwrap()));
    }

    #[test]
    fn empty_graph_families() {
        let g = Graph::empty(0).unwrap();
        let s = FamilySurvey::compute(&g);
        for kind in BaseFamily::ALL {
            assert_eq!(s.family(kind).len(), 1);
            assert!(s.family(kind).members()[0].is_empty());
        }
        assert_eq!(s.alpha, 0);
        assert_eq!(s.critical.d_of_g, 0);
    }

    #[test]
    fn foreign_sets_are_rejected() {
        let g = star();
        let other = star();
        let x = set(&other, "a");
        assert_eq!(is_independent(&g, &x), Err(Error::ForeignSet));
        assert_eq!(diff(&g, &x), Err(Error::ForeignSet));
        assert_eq!(is_local_max_independent(&g, &x), Err(Error::ForeignSet));
        assert_eq!(is_crown(&g, &x), Err(Error::ForeignSet));
        assert_eq!(is_critical(&g, &x), Err(Error::ForeignSet));
    }

    #[test]
    fn critical_excludes_empty_set_when_d_positive() {
        let g = star();
        let crit = enumerate_family(&g, BaseFamily::CritIndep);
        assert!(!crit.contains(&g.empty_set()));
        assert!(crit.same_members(&family(&g, &["a,b,c"])));
    }
}
