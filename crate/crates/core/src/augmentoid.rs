//! The canonical augmentation on Ψ(G) and augmentoid checkers.
//!
//! For `S, T ∈ Ψ(G)` the augmentation uses `A = S ∖ N[T]` and
//! `B = T ∖ N[S]`; then `S ∪ B` and `T ∪ A` are both in Ψ(G) and have the
//! same size. Every result is re-validated before it is returned, so a
//! failure here always means a bug, never a property of the input.

use serde::Serialize;
use serde_json::{json, Value};

use crate::bits::{self, popcount};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::independence::{local_max_error, FamilySurvey, LocalAlpha, SetFamily};
use crate::matching::{cross_matching_masks, Matching};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentationResult {
    /// `S ∖ N[T]`
    pub a: VertexSet,
    /// `T ∖ N[S]`
    pub b: VertexSet,
    /// `S ∪ B`
    pub s_plus: VertexSet,
    /// `T ∪ A`
    pub t_plus: VertexSet,
    pub common_size: usize,
}

/// A failing ordered pair with a human-readable diagnosis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub x: VertexSet,
    pub y: VertexSet,
    pub diagnosis: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentoidVerdict {
    pub holds: bool,
    pub pairs_checked: usize,
    pub counterexample: Option<Counterexample>,
}

impl AugmentoidVerdict {
    fn pass(pairs_checked: usize) -> Self {
        AugmentoidVerdict {
            holds: true,
            pairs_checked,
            counterexample: None,
        }
    }

    fn fail(pairs_checked: usize, x: VertexSet, y: VertexSet, diagnosis: String) -> Self {
        AugmentoidVerdict {
            holds: false,
            pairs_checked,
            counterexample: Some(Counterexample { x, y, diagnosis }),
        }
    }
}

/// Mask-level canonical augmentation with full post-checks.
pub(crate) fn augment_masks(
    adj: &[u64],
    local: &mut LocalAlpha<'_>,
    s: u64,
    t: u64,
) -> std::result::Result<[u64; 4], String> {
    let a = s & !bits::closed_nbhd(adj, t);
    let b = t & !bits::closed_nbhd(adj, s);
    let s_plus = s | b;
    let t_plus = t | a;
    if a & t != 0 || b & s != 0 {
        return Err("augmenting sets are not inside S∖T and T∖S".into());
    }
    for (name, x) in [("S+", s_plus), ("T+", t_plus)] {
        if !bits::is_independent(adj, x) {
            return Err(format!("{name} is not independent"));
        }
        if !local.is_local_max(x) {
            return Err(format!(
                "{name} is not in Psi(G): |{name}| = {} < alpha(G[N[{name}]]) = {}",
                popcount(x),
                local.local_alpha(x)
            ));
        }
    }
    if popcount(s_plus) != popcount(t_plus) {
        return Err(format!(
            "|S+| = {} differs from |T+| = {}",
            popcount(s_plus),
            popcount(t_plus)
        ));
    }
    Ok([a, b, s_plus, t_plus])
}

/// Canonical augmentation of a Ψ-pair.
pub fn canonical_augment(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<AugmentationResult> {
    g.check_owned(s)?;
    g.check_owned(t)?;
    let adj = g.adjacency();
    let mut local = LocalAlpha::new(adj);
    for x in [s, t] {
        if !local.is_local_max(x.bits()) {
            return Err(local_max_error(g, x, &mut local));
        }
    }
    let [a, b, s_plus, t_plus] =
        augment_masks(adj, &mut local, s.bits(), t.bits()).map_err(Error::InternalContradiction)?;
    Ok(AugmentationResult {
        a: s.with_bits(a),
        b: s.with_bits(b),
        s_plus: s.with_bits(s_plus),
        t_plus: s.with_bits(t_plus),
        common_size: popcount(s_plus),
    })
}

/// Runs the canonical augmentation on every ordered pair of Ψ(G).
pub fn check_canonical_augmentoid(g: &Graph) -> AugmentoidVerdict {
    let survey = FamilySurvey::compute(g);
    check_canonical_augmentoid_on(g, &survey.psi)
}

pub(crate) fn check_canonical_augmentoid_on(g: &Graph, psi: &SetFamily) -> AugmentoidVerdict {
    let adj = g.adjacency();
    let mut local = LocalAlpha::new(adj);
    let mut pairs = 0;
    for s in psi.iter() {
        for t in psi.iter() {
            pairs += 1;
            if let Err(why) = augment_masks(adj, &mut local, s.bits(), t.bits()) {
                return AugmentoidVerdict::fail(pairs, *s, *t, why);
            }
        }
    }
    AugmentoidVerdict::pass(pairs)
}

/// Checks the augmentoid axiom on an arbitrary family by search: for every
/// ordered pair `(X, Y)` there must be `A ⊆ X ∖ Y`, `B ⊆ Y ∖ X` with
/// `Y ∪ A` and `X ∪ B` in the family and of equal size.
pub fn check_generic_augmentoid(family: &SetFamily) -> Result<AugmentoidVerdict> {
    if family.is_empty() {
        return Err(Error::FamilyEmpty);
    }
    let masks: Vec<u64> = family.masks().collect();
    let mut pairs = 0;
    for (i, &x) in masks.iter().enumerate() {
        for &y in &masks {
            pairs += 1;
            // Sizes |Y ∪ A| reachable with A ⊆ X ∖ Y: the members U with
            // Y ⊆ U ⊆ X ∪ Y. Symmetrically for X ∪ B.
            let sizes_from_y = reachable_sizes(&masks, y, x | y);
            let sizes_from_x = reachable_sizes(&masks, x, x | y);
            if sizes_from_y & sizes_from_x == 0 {
                return Ok(AugmentoidVerdict::fail(
                    pairs,
                    family.members()[i],
                    family.members()[masks.iter().position(|&m| m == y).unwrap()],
                    "no augmenting pair (A, B) of matching size".into(),
                ));
            }
        }
    }
    Ok(AugmentoidVerdict::pass(pairs))
}

/// Bitmask of cardinalities `|U|` over members `U` with `base ⊆ U ⊆ cap`.
fn reachable_sizes(masks: &[u64], base: u64, cap: u64) -> u128 {
    masks
        .iter()
        .filter(|&&u| u & base == base && u & !cap == 0)
        .fold(0u128, |acc, &u| acc | (1u128 << popcount(u)))
}

// ============================================================================
// Per-pair lemma verification
// ============================================================================

/// One verified statement about a Ψ-pair.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaCheck {
    pub name: &'static str,
    pub pass: bool,
    pub evidence: Value,
}

/// The four lemma checks for an ordered pair `(S, T)` of Ψ(G).
#[derive(Clone, Debug, PartialEq)]
pub struct LemmaReport {
    pub checks: Vec<LemmaCheck>,
    /// Perfect matching between `S ∩ N(T)` and `T ∩ N(S)`, when found.
    pub cross_matching: Option<Matching>,
}

impl LemmaReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LemmaCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

pub const LEMMA_CROSS: &str = "cross_matching";
pub const LEMMA_OUTSIDE: &str = "outside_local_max";
pub const LEMMA_PLUS: &str = "augmented_local_max";
pub const LEMMA_SAME_SIZE: &str = "same_size";

/// Checks, for `S, T ∈ Ψ(G)`:
///
/// - a perfect matching exists between `S ∩ N(T)` and `T ∩ N(S)`;
/// - `T ∖ N[S] ∈ Ψ(G − N[S])` and `S ∖ N[T] ∈ Ψ(G − N[T])`;
/// - `S ∪ (T ∖ N[S])` and `T ∪ (S ∖ N[T])` are in Ψ(G);
/// - the two augmented sets have equal size, via the disjoint splits
///   `S = (S ∖ N[T]) ∪ (S ∩ N(T)) ∪ (S ∩ T)` and its mirror.
pub fn verify_lemmas(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<LemmaReport> {
    g.check_owned(s)?;
    g.check_owned(t)?;
    let adj = g.adjacency();
    let mut local = LocalAlpha::new(adj);
    for x in [s, t] {
        if !local.is_local_max(x.bits()) {
            return Err(local_max_error(g, x, &mut local));
        }
    }
    Ok(verify_lemmas_masks(g, &mut local, s.bits(), t.bits()))
}

pub(crate) fn verify_lemmas_masks(
    g: &Graph,
    local: &mut LocalAlpha<'_>,
    s: u64,
    t: u64,
) -> LemmaReport {
    let adj = g.adjacency();
    let name = |m: u64| g.format_set(&g.full_set().with_bits(m));
    let ns = bits::open_nbhd(adj, s);
    let nt = bits::open_nbhd(adj, t);
    let s_cross = s & nt;
    let t_cross = t & ns;
    let s0 = s & !(t | nt);
    let t0 = t & !(s | ns);
    let common = s & t;
    let mut checks = Vec::with_capacity(4);

    // Cross matching, re-counted independently of the matching routine.
    let (cross, cross_ok) = match cross_matching_masks(adj, s, t) {
        Ok(mate) => {
            let m = Matching::from_mates(g.id(), &mate);
            let ok = m.is_valid_in(g)
                && m.len() == popcount(s_cross)
                && m.len() == popcount(t_cross)
                && m.pairs().iter().all(|&(u, v)| {
                    let pair = bits::bit(u) | bits::bit(v);
                    pair & s_cross != 0 && pair & t_cross != 0
                });
            (Some(m), ok)
        }
        Err(_) => (None, false),
    };
    checks.push(LemmaCheck {
        name: LEMMA_CROSS,
        pass: cross_ok,
        evidence: json!({
            "s_cap_nt": name(s_cross),
            "t_cap_ns": name(t_cross),
            "matching": cross.as_ref().map(|m| m.format(g)),
        }),
    });

    // Outside sets are local maxima of the graphs with the opposite closed
    // neighborhood deleted, evaluated inside the induced subgraphs.
    let outside = |own: u64, other: u64| -> (bool, usize) {
        let h = g.induce_mask(!bits::closed_nbhd(adj, other) & g.full_set().bits());
        let restricted = h
            .restrict(&g.full_set().with_bits(own))
            .expect("outside set avoids the deleted neighborhood");
        let mut inner = LocalAlpha::new(h.graph().adjacency());
        let alpha = inner.local_alpha(restricted.bits());
        (inner.is_local_max(restricted.bits()), alpha)
    };
    let (t0_ok, t0_alpha) = outside(t0, s);
    let (s0_ok, s0_alpha) = outside(s0, t);
    checks.push(LemmaCheck {
        name: LEMMA_OUTSIDE,
        pass: t0_ok && s0_ok,
        evidence: json!({
            "t0": name(t0), "t0_local_alpha_in_g_minus_ns": t0_alpha,
            "s0": name(s0), "s0_local_alpha_in_g_minus_nt": s0_alpha,
        }),
    });

    let s_plus = s | t0;
    let t_plus = t | s0;
    let s_plus_alpha = local.local_alpha(s_plus);
    let t_plus_alpha = local.local_alpha(t_plus);
    checks.push(LemmaCheck {
        name: LEMMA_PLUS,
        pass: local.is_local_max(s_plus) && local.is_local_max(t_plus),
        evidence: json!({
            "s_plus": name(s_plus), "s_plus_local_alpha": s_plus_alpha,
            "t_plus": name(t_plus), "t_plus_local_alpha": t_plus_alpha,
        }),
    });

    let s_split_ok = s0 & s_cross == 0
        && s0 & common == 0
        && s_cross & common == 0
        && (s0 | s_cross | common) == s;
    let t_split_ok = t0 & t_cross == 0
        && t0 & common == 0
        && t_cross & common == 0
        && (t0 | t_cross | common) == t;
    let lhs = popcount(s0) + popcount(s_cross) + popcount(common) + popcount(t0);
    let rhs = popcount(t0) + popcount(t_cross) + popcount(common) + popcount(s0);
    checks.push(LemmaCheck {
        name: LEMMA_SAME_SIZE,
        pass: s_split_ok
            && t_split_ok
            && popcount(s_plus) == lhs
            && popcount(t_plus) == rhs
            && popcount(s_cross) == popcount(t_cross)
            && popcount(s_plus) == popcount(t_plus),
        evidence: json!({
            "s_plus_size": popcount(s_plus),
            "t_plus_size": popcount(t_plus),
            "s_split": [popcount(s0), popcount(s_cross), popcount(common)],
            "t_split": [popcount(t0), popcount(t_cross), popcount(common)],
        }),
    });

    LemmaReport {
        checks,
        cross_matching: cross,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_edge_list;
    use crate::independence::{enumerate_family, BaseFamily};

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
    fn canonical_augment_on_spider_pair() {
        let g = spider();
        let r = canonical_augment(&g, &set(&g, "a,d,e"), &set(&g, "b,d,f")).unwrap();
        assert_eq!(r.a, set(&g, "e"));
        assert_eq!(r.b, set(&g, "f"));
        assert_eq!(r.s_plus, set(&g, "a,d,e,f"));
        assert_eq!(r.t_plus, set(&g, "b,d,e,f"));
        assert_eq!(r.common_size, 4);
    }

    #[test]
    fn canonical_augment_identity_and_disjoint_union() {
        let g = spider();
        let s = set(&g, "b,d,f");
        let r = canonical_augment(&g, &s, &s).unwrap();
        assert!(r.a.is_empty() && r.b.is_empty());
        assert_eq!((r.s_plus, r.t_plus), (s, s));

        let g = star();
        let (s, t) = (set(&g, "a"), set(&g, "b,c"));
        let r = canonical_augment(&g, &s, &t).unwrap();
        assert_eq!((r.a, r.b), (s, t));
        assert_eq!(r.s_plus, set(&g, "a,b,c"));
        assert_eq!(r.t_plus, set(&g, "a,b,c"));
    }

    #[test]
    fn canonical_augment_rejects_non_members() {
        let g = spider();
        let err = canonical_augment(&g, &set(&g, "a"), &set(&g, "b,d,f")).unwrap_err();
        assert!(matches!(err, Error::NotLocalMax { ref set, .. } if set == "{a}"));
    }

    #[test]
    fn canonical_checker_examples() {
        for g in [star(), triangle_pendant(), spider()] {
            let v = check_canonical_augmentoid(&g);
            assert!(v.holds, "{:?}", v.counterexample);
            assert!(v.counterexample.is_none());
        }
        assert_eq!(check_canonical_augmentoid(&star()).pairs_checked, 64);
    }

    #[test]
    fn generic_checker_examples() {
        let g = triangle_pendant();
        let crit = enumerate_family(&g, BaseFamily::CritIndep);
        assert!(check_generic_augmentoid(&crit).unwrap().holds);

        let g = star();
        let crown = enumerate_family(&g, BaseFamily::Crown);
        assert_eq!(crown.len(), 8);
        assert!(check_generic_augmentoid(&crown).unwrap().holds);

        let k1 = Graph::empty(1).unwrap();
        let fam = SetFamily::custom(&k1, [k1.empty_set(), k1.full_set()]).unwrap();
        assert!(check_generic_augmentoid(&fam).unwrap().holds);
    }

    #[test]
    fn generic_checker_finds_violations() {
        let g = Graph::empty(3).unwrap();
        let empty = SetFamily::custom(&g, []).unwrap();
        assert_eq!(check_generic_augmentoid(&empty), Err(Error::FamilyEmpty));

        // X = {0}, Y = {1,2}: Y ∪ A can only be {1,2} and X ∪ B only {0}.
        let fam = SetFamily::custom(&g, [set(&g, "0"), set(&g, "1,2")]).unwrap();
        let v = check_generic_augmentoid(&fam).unwrap();
        assert!(!v.holds);
        let cx = v.counterexample.unwrap();
        assert_eq!((cx.x, cx.y), (set(&g, "0"), set(&g, "1,2")));

        // Adding {0,1,2} repairs it.
        let fam = SetFamily::custom(&g, [set(&g, "0"), set(&g, "1,2"), set(&g, "0,1,2")]).unwrap();
        assert!(check_generic_augmentoid(&fam).unwrap().holds);
    }

    #[test]
    fn lemma_report_on_spider_pair() {
        let g = spider();
        let r = verify_lemmas(&g, &set(&g, "a,d,e"), &set(&g, "b,d,f")).unwrap();
        assert!(r.all_pass(), "{:?}", r.checks);
        assert_eq!(r.checks.len(), 4);
        assert_eq!(r.cross_matching.as_ref().unwrap().format(&g), "{b-a}");
        let outside = &r.checks[1];
        assert_eq!(outside.evidence["t0"], "{f}");
    }

    #[test]
    fn lemma_report_degenerate_and_star() {
        let g = spider();
        let s = set(&g, "a,d,e");
        assert!(verify_lemmas(&g, &s, &s).unwrap().all_pass());

        let g = star();
        let r = verify_lemmas(&g, &set(&g, "a"), &set(&g, "b,c")).unwrap();
        assert!(r.all_pass());
        assert!(r.cross_matching.unwrap().is_empty());
        assert_eq!(r.checks[2].evidence["s_plus"], "{a,b,c}");
        assert_eq!(r.checks[2].evidence["t_plus"], "{a,b,c}");
    }
}
