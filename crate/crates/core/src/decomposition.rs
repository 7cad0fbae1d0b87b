//! Closed-neighborhood decomposition around a member of Ψ(G).
//!
//! For `S ∈ Ψ(G)` and `H = G − N[S]`:
//!
//! 1. `α(G) = |S| + α(H)`;
//! 2. `T ↦ S ∪ T` is a bijection from Ψ(H) onto `Ψ_S(G) = {U ∈ Ψ(G) : S ⊆ U}`;
//! 3. `Ω_S(G) = {S ∪ Q : Q ∈ Ω(H)}`;
//! 4. `∩Ω_S(G) = S ∪ core(H)` and `∪Ω_S(G) = S ∪ corona(H)`.
//!
//! Each part is computed twice, once through `H` and once directly on `G`,
//! and the report carries both sides.

use crate::bits::popcount;
use crate::error::{Error, Result};
use crate::graph::{Graph, InducedSubgraph, VertexSet};
use crate::independence::{ensure_local_max, FamilyKind, FamilySurvey, SetFamily};

/// Pass/fail of each part of the decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartChecks {
    pub alpha_identity: bool,
    pub bijection: bool,
    pub omega_identity: bool,
    pub core_corona: bool,
}

impl PartChecks {
    pub fn all_hold(&self) -> bool {
        self.alpha_identity && self.bijection && self.omega_identity && self.core_corona
    }
}

#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub s: VertexSet,
    /// `G − N[S]`.
    pub h: InducedSubgraph,
    pub alpha_g: usize,
    pub alpha_h: usize,
    pub psi_h: SetFamily,
    pub omega_h: SetFamily,
    /// Ψ_S(G) computed as `{S ∪ T : T ∈ Ψ(H)}`.
    pub psi_extensions: SetFamily,
    /// Ψ_S(G) computed by filtering Ψ(G).
    pub psi_extensions_direct: SetFamily,
    /// Ω_S(G) computed as `{S ∪ Q : Q ∈ Ω(H)}`.
    pub omega_extensions: SetFamily,
    /// Ω_S(G) computed by filtering Ω(G).
    pub omega_extensions_direct: SetFamily,
    /// `∩Ω_S(G)` from the direct family.
    pub core_s: VertexSet,
    /// `∪Ω_S(G)` from the direct family.
    pub corona_s: VertexSet,
    /// `S ∪ core(H)`.
    pub core_via_h: VertexSet,
    /// `S ∪ corona(H)`.
    pub corona_via_h: VertexSet,
    /// `Φ_S` maps Ψ(H) injectively onto the direct Ψ_S(G), and `U ↦ U ∖ S`
    /// inverts it.
    pub bijection_ok: bool,
    pub parts: PartChecks,
}

/// Decomposes around `S`, which must belong to Ψ(G).
pub fn decompose(g: &Graph, s: &VertexSet) -> Result<DecompositionReport> {
    ensure_local_max(g, s)?;
    Ok(decompose_unchecked(g, s))
}

/// Same computation without the Ψ(G) precondition. For sets outside Ψ(G)
/// some parts may fail; tests use this as a negative control.
pub fn decompose_unchecked(g: &Graph, s: &VertexSet) -> DecompositionReport {
    let survey_g = FamilySurvey::compute(g);
    decompose_with(g, &survey_g, s)
}

/// Decomposition reusing an already computed survey of `g`.
pub(crate) fn decompose_with(
    g: &Graph,
    survey_g: &FamilySurvey,
    s: &VertexSet,
) -> DecompositionReport {
    let h = g
        .delete_closed_neighborhood(s)
        .expect("set belongs to the graph");
    let survey_h = FamilySurvey::compute(h.graph());
    let sb = s.bits();

    let lift_union = |family: &SetFamily, kind: FamilyKind| {
        SetFamily::from_masks(kind, g.id(), family.masks().map(|m| sb | h.lift_mask(m)))
    };
    let psi_extensions = lift_union(&survey_h.psi, FamilyKind::PsiExtensions(*s));
    let omega_extensions = lift_union(&survey_h.omega, FamilyKind::OmegaExtensions(*s));
    let psi_extensions_direct = SetFamily::from_masks(
        FamilyKind::PsiExtensions(*s),
        g.id(),
        survey_g.psi.masks().filter(|&u| u & sb == sb),
    );
    let omega_extensions_direct = SetFamily::from_masks(
        FamilyKind::OmegaExtensions(*s),
        g.id(),
        survey_g.omega.masks().filter(|&m| m & sb == sb),
    );

    // Φ_S must be injective (distinct images), land in Ψ_S(G), cover it, and
    // U ↦ U ∖ S must send every member back into Ψ(H).
    let support = h.support_mask();
    let injective = psi_extensions.len() == survey_h.psi.len();
    let onto = psi_extensions.same_members(&psi_extensions_direct);
    let inverse_ok = psi_extensions_direct.masks().all(|u| {
        let rest = u & !sb;
        rest & !support == 0
            && h.restrict(&s.with_bits(rest))
                .map(|r| survey_h.psi.contains(&r))
                .unwrap_or(false)
    });
    let bijection_ok = injective && onto && inverse_ok;

    let core_s = s.with_bits(omega_extensions_direct.intersection_mask());
    let corona_s = s.with_bits(omega_extensions_direct.union_mask());
    let core_via_h = s.with_bits(sb | h.lift_mask(survey_h.omega.intersection_mask()));
    let corona_via_h = s.with_bits(sb | h.lift_mask(survey_h.omega.union_mask()));

    let parts = PartChecks {
        alpha_identity: survey_g.alpha == popcount(sb) + survey_h.alpha,
        bijection: bijection_ok,
        omega_identity: omega_extensions.same_members(&omega_extensions_direct)
            && omega_extensions.len() == survey_h.omega.len(),
        core_corona: !omega_extensions_direct.is_empty()
            && core_s == core_via_h
            && corona_s == corona_via_h,
    };

    DecompositionReport {
        s: *s,
        alpha_g: survey_g.alpha,
        alpha_h: survey_h.alpha,
        psi_h: survey_h.psi,
        omega_h: survey_h.omega,
        psi_extensions,
        psi_extensions_direct,
        omega_extensions,
        omega_extensions_direct,
        core_s,
        corona_s,
        core_via_h,
        corona_via_h,
        bijection_ok,
        parts,
        h,
    }
}

/// Ψ_S(G) via `Ψ(G − N[S])`, cross-validated against filtering Ψ(G).
pub fn psi_extensions(g: &Graph, s: &VertexSet) -> Result<SetFamily> {
    let report = decompose(g, s)?;
    if !report
        .psi_extensions
        .same_members(&report.psi_extensions_direct)
    {
        return Err(Error::InternalContradiction(format!(
            "Psi extensions of {} disagree: {} via G-N[S], {} directly",
            g.format_set(s),
            report.psi_extensions.len(),
            report.psi_extensions_direct.len()
        )));
    }
    Ok(report.psi_extensions)
}

/// Ω_S(G) via `Ω(G − N[S])`, cross-validated against filtering Ω(G).
pub fn omega_extensions(g: &Graph, s: &VertexSet) -> Result<SetFamily> {
    let report = decompose(g, s)?;
    if !report
        .omega_extensions
        .same_members(&report.omega_extensions_direct)
    {
        return Err(Error::InternalContradiction(format!(
            "Omega extensions of {} disagree: {} via G-N[S], {} directly",
            g.format_set(s),
            report.omega_extensions.len(),
            report.omega_extensions_direct.len()
        )));
    }
    Ok(report.omega_extensions)
}

/// `(|Ψ_S(G)|, |Ω_S(G)|)`, counted on `G − N[S]` and checked against direct
/// enumeration on `G`.
pub fn count_extensions(g: &Graph, s: &VertexSet) -> Result<(usize, usize)> {
    let report = decompose(g, s)?;
    let via_h = (report.psi_h.len(), report.omega_h.len());
    let direct = (
        report.psi_extensions_direct.len(),
        report.omega_extensions_direct.len(),
    );
    if via_h != direct {
        return Err(Error::InternalContradiction(format!(
            "extension counts of {} disagree: {via_h:?} via G-N[S], {direct:?} directly",
            g.format_set(s)
        )));
    }
    Ok(via_h)
}
