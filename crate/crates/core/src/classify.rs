//! Structural decisions for connected `C4`-free mixed graphs: is `ρ(D) ≤ 2`,
//! and is `ρ(D) = 2`, read off the underlying graph and the cycle signs.
//!
//! A positive answer carries a certificate: the template family, an injective
//! vertex map into its generated graph, and the cycle sign condition that the
//! family imposes. Within a fixed underlying graph the spectrum depends only
//! on the cycle signs, so that pair determines the answer.

use std::fmt;

use num_rational::BigRational;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::families::{smith_templates, FamilySpec};
use crate::graph::MixedGraph;
use crate::spectra::{compare_radius, two, RadiusComparison};
use crate::structure::{classify_cycle, enumerate_cycles, is_c4_free, Cycle, SignClass};

/// Which clause of the classification a graph matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    // ρ ≤ 2
    SmithUnderlying,
    C3TwoStarHat,
    C6OneZeroOneZeroOneMinusHat,
    C6TwoZeroZeroTwoMinusHat,
    C8OneZeroZeroZeroOneMinusHat,
    Theta355TwoNegativeHexagons,
    // ρ = 2
    SmithTree,
    CyclePlus,
    CycleMinusOdd,
    C3TwoStar,
    C6OneZeroOneMinus,
    C6OneZeroOneZeroOneMinus,
    C6TwoMinus,
    C6TwoZeroZeroOneMinus,
    C6TwoZeroZeroTwoMinus,
    C8OneMinus,
    C8OneZeroZeroZeroOneMinus,
    Theta355,
}

impl FamilyTag {
    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::SmithUnderlying => "SmithUnderlying",
            FamilyTag::C3TwoStarHat => "C3_2_star_hat",
            FamilyTag::C6OneZeroOneZeroOneMinusHat => "C6_10101_minus_hat",
            FamilyTag::C6TwoZeroZeroTwoMinusHat => "C6_2002_minus_hat",
            FamilyTag::C8OneZeroZeroZeroOneMinusHat => "C8_10001_minus_hat",
            FamilyTag::Theta355TwoNegativeHexagons => "Theta355_twoNegC6",
            FamilyTag::SmithTree => "SmithTree",
            FamilyTag::CyclePlus => "Cn_plus",
            FamilyTag::CycleMinusOdd => "Cn_minus_odd",
            FamilyTag::C3TwoStar => "C3_2_star",
            FamilyTag::C6OneZeroOneMinus => "C6_101_minus",
            FamilyTag::C6OneZeroOneZeroOneMinus => "C6_10101_minus",
            FamilyTag::C6TwoMinus => "C6_2_minus",
            FamilyTag::C6TwoZeroZeroOneMinus => "C6_2001_minus",
            FamilyTag::C6TwoZeroZeroTwoMinus => "C6_2002_minus",
            FamilyTag::C8OneMinus => "C8_1_minus",
            FamilyTag::C8OneZeroZeroZeroOneMinus => "C8_10001_minus",
            FamilyTag::Theta355 => "Theta355",
        }
    }

    /// Tags produced by [`classify_le2`] (closed under induced subgraphs).
    pub fn is_hat(self) -> bool {
        self < FamilyTag::SmithTree
    }

    /// The sign that cycles of the given length must carry, or `None` when
    /// that length is unconstrained.
    pub fn required_sign(self, cycle_len: usize) -> Option<SignClass> {
        use FamilyTag::*;
        match self {
            SmithUnderlying | SmithTree => None,
            CyclePlus => Some(SignClass::Positive),
            C3TwoStarHat | C3TwoStar => Some(SignClass::Imaginary),
            // the octagon is forced positive once both hexagons are negative,
            // and on its own it is a Smith cycle
            Theta355TwoNegativeHexagons | Theta355 => {
                (cycle_len == 6).then_some(SignClass::Negative)
            }
            _ => Some(SignClass::Negative),
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for FamilyTag {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// The clause-(ii)/(iii) templates of the `ρ ≤ 2` theorem.
fn hat_templates() -> Vec<(FamilyTag, FamilySpec)> {
    vec![
        (
            FamilyTag::C3TwoStarHat,
            FamilySpec::CycleWithPaths(3, vec![2]),
        ),
        (
            FamilyTag::C6OneZeroOneZeroOneMinusHat,
            FamilySpec::CycleWithPaths(6, vec![1, 0, 1, 0, 1]),
        ),
        (
            FamilyTag::C6TwoZeroZeroTwoMinusHat,
            FamilySpec::CycleWithPaths(6, vec![2, 0, 0, 2]),
        ),
        (
            FamilyTag::C8OneZeroZeroZeroOneMinusHat,
            FamilySpec::CycleWithPaths(8, vec![1, 0, 0, 0, 1]),
        ),
        (
            FamilyTag::Theta355TwoNegativeHexagons,
            FamilySpec::Theta(3, 5, 5),
        ),
    ]
}

/// The exact templates of the `ρ = 2` corollary other than trees and cycles.
fn exact_templates() -> Vec<(FamilyTag, FamilySpec)> {
    vec![
        (FamilyTag::C3TwoStar, FamilySpec::CycleWithPaths(3, vec![2])),
        (
            FamilyTag::C6OneZeroOneMinus,
            FamilySpec::CycleWithPaths(6, vec![1, 0, 1]),
        ),
        (
            FamilyTag::C6OneZeroOneZeroOneMinus,
            FamilySpec::CycleWithPaths(6, vec![1, 0, 1, 0, 1]),
        ),
        (
            FamilyTag::C6TwoMinus,
            FamilySpec::CycleWithPaths(6, vec![2]),
        ),
        (
            FamilyTag::C6TwoZeroZeroOneMinus,
            FamilySpec::CycleWithPaths(6, vec![2, 0, 0, 1]),
        ),
        (
            FamilyTag::C6TwoZeroZeroTwoMinus,
            FamilySpec::CycleWithPaths(6, vec![2, 0, 0, 2]),
        ),
        (
            FamilyTag::C8OneMinus,
            FamilySpec::CycleWithPaths(8, vec![1]),
        ),
        (
            FamilyTag::C8OneZeroZeroZeroOneMinus,
            FamilySpec::CycleWithPaths(8, vec![1, 0, 0, 0, 1]),
        ),
        (FamilyTag::Theta355, FamilySpec::Theta(3, 5, 5)),
    ]
}

/// Proof that a graph lies in a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub tag: FamilyTag,
    pub template: FamilySpec,
    /// Template vertex for each input vertex.
    pub embedding: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    InList(Certificate),
    NotInList { reason: String },
    OutOfScope { reason: String },
}

impl Outcome {
    pub fn is_in_list(&self) -> bool {
        matches!(self, Outcome::InList(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Outcome::InList(_) => "InList",
            Outcome::NotInList { .. } => "NotInList",
            Outcome::OutOfScope { .. } => "OutOfScope",
        }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Outcome::InList(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub crosscheck: Option<RadiusComparison>,
}

impl Serialize for Verdict {
    /// `{outcome, family_tag, template, embedding, crosscheck, reason}`;
    /// fields that do not apply are `null`.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let cert = self.outcome.certificate();
        let reason = match &self.outcome {
            Outcome::InList(_) => None,
            Outcome::NotInList { reason } | Outcome::OutOfScope { reason } => Some(reason),
        };
        let mut st = s.serialize_struct("Verdict", 6)?;
        st.serialize_field("outcome", self.outcome.label())?;
        st.serialize_field("family_tag", &cert.map(|c| c.tag))?;
        st.serialize_field("template", &cert.map(|c| c.template.to_string()))?;
        st.serialize_field("embedding", &cert.map(|c| &c.embedding))?;
        st.serialize_field("crosscheck", &self.crosscheck)?;
        st.serialize_field("reason", &reason)?;
        st.end()
    }
}

/// Injective map `f` from the vertices of `h` into those of `g` such that
/// `uv` is an edge of `h` exactly when `f(u)f(v)` is an edge of `g`.
/// Directions are ignored. Vertices of `h` are placed in index order and each
/// tries images in increasing order, so the result is the lexicographically
/// least embedding.
pub fn embed_induced(h: &MixedGraph, g: &MixedGraph) -> Option<Vec<usize>> {
    if h.n() > g.n() || h.edge_count() > g.edge_count() || h.max_degree() > g.max_degree() {
        return None;
    }
    let mut map = Vec::with_capacity(h.n());
    let mut used = vec![false; g.n()];
    extend_embedding(h, g, &mut map, &mut used).then_some(map)
}

fn extend_embedding(
    h: &MixedGraph,
    g: &MixedGraph,
    map: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let v = map.len();
    if v == h.n() {
        return true;
    }
    for x in 0..g.n() {
        if used[x] || g.degree(x) < h.degree(v) {
            continue;
        }
        let consistent = (0..v).all(|u| h.has_edge(u, v) == g.has_edge(map[u], x));
        if !consistent {
            continue;
        }
        used[x] = true;
        map.push(x);
        if extend_embedding(h, g, map, used) {
            return true;
        }
        map.pop();
        used[x] = false;
    }
    false
}

/// Isomorphism of underlying graphs, as a map from `h` onto `g`.
pub fn isomorphism(h: &MixedGraph, g: &MixedGraph) -> Option<Vec<usize>> {
    if h.n() != g.n() || h.edge_count() != g.edge_count() {
        return None;
    }
    embed_induced(h, g)
}

/// Whether an undirected connected graph is an induced subgraph of one of
/// Smith's graphs. Templates with `|V(G)|` and `|V(G)| + 1` vertices suffice
/// (at least 3, the smallest cycle): a proper connected induced subgraph of a
/// Smith graph is a path, a `Y(2, s, 1)` or an `S(1, 2, k)` with `k ≤ 4`, and
/// each of those sits inside a template one vertex larger.
pub fn smith_membership(g: &MixedGraph) -> Option<(FamilySpec, Vec<usize>)> {
    let n = g.n();
    for m in n.max(3)..=(n + 1).max(3) {
        for spec in smith_templates(m) {
            let template = spec.generate().expect("Smith templates are valid");
            if let Some(map) = embed_induced(g, &template) {
                return Some((spec, map));
            }
        }
    }
    None
}

/// The first cycle of `d` whose sign violates the tag's requirement.
fn sign_violation(
    d: &MixedGraph,
    cycles: &[Cycle],
    tag: FamilyTag,
) -> Option<(Cycle, SignClass, SignClass)> {
    cycles.iter().find_map(|c| {
        let want = tag.required_sign(c.len())?;
        let got = classify_cycle(d, c)
            .expect("enumerated cycles are cycles")
            .class();
        (got != want).then(|| (c.clone(), want, got))
    })
}

fn scope_check(d: &MixedGraph) -> Option<Outcome> {
    if !d.is_connected() {
        return Some(Outcome::OutOfScope {
            reason: "graph is disconnected".into(),
        });
    }
    if !is_c4_free(d) {
        return Some(Outcome::OutOfScope {
            reason: "graph contains a 4-cycle".into(),
        });
    }
    None
}

/// Structural decision of `ρ(D) ≤ 2` without the exact cross-check.
pub fn le2_outcome(d: &MixedGraph) -> Outcome {
    if let Some(out) = scope_check(d) {
        return out;
    }
    let u = d.underlying();
    if let Some((template, embedding)) = smith_membership(&u) {
        return Outcome::InList(Certificate {
            tag: FamilyTag::SmithUnderlying,
            template,
            embedding,
        });
    }
    let cycles = enumerate_cycles(d);
    let mut closest: Option<String> = None;
    for (tag, template) in hat_templates() {
        let Some(embedding) = embed_induced(&u, &template.generate().expect("valid template"))
        else {
            continue;
        };
        match sign_violation(d, &cycles, tag) {
            None => {
                return Outcome::InList(Certificate {
                    tag,
                    template,
                    embedding,
                })
            }
            Some((c, want, got)) => {
                closest.get_or_insert_with(|| {
                    format!("embeds in {template} but cycle {c} is {got:?}, not {want:?}")
                });
            }
        }
    }
    let reason = closest.unwrap_or_else(|| {
        "underlying graph is not an induced subgraph of any listed template".into()
    });
    Outcome::NotInList { reason }
}

/// Structural decision of `ρ(D) = 2` without the exact cross-check.
pub fn eq2_outcome(d: &MixedGraph) -> Outcome {
    if let Some(out) = scope_check(d) {
        return out;
    }
    let u = d.underlying();
    let n = u.n();
    let cycles = enumerate_cycles(d);
    let mut candidates: Vec<(FamilyTag, FamilySpec)> = Vec::new();
    if u.is_tree() {
        for spec in smith_templates(n) {
            if !matches!(spec, FamilySpec::Cycle(_)) {
                candidates.push((FamilyTag::SmithTree, spec));
            }
        }
    } else if u.is_cycle_graph() {
        candidates.push((FamilyTag::CyclePlus, FamilySpec::Cycle(n)));
        if n % 2 == 1 {
            candidates.push((FamilyTag::CycleMinusOdd, FamilySpec::Cycle(n)));
        }
    } else {
        candidates.extend(
            exact_templates()
                .into_iter()
                .filter(|(_, s)| s.vertex_count() == n),
        );
    }
    let mut closest: Option<String> = None;
    for (tag, template) in candidates {
        let Some(embedding) = isomorphism(&u, &template.generate().expect("valid template")) else {
            continue;
        };
        match sign_violation(d, &cycles, tag) {
            None => {
                return Outcome::InList(Certificate {
                    tag,
                    template,
                    embedding,
                })
            }
            Some((c, want, got)) => {
                closest.get_or_insert_with(|| {
                    format!("isomorphic to {template} but cycle {c} is {got:?}, not {want:?}")
                });
            }
        }
    }
    let reason = closest
        .unwrap_or_else(|| "underlying graph is not isomorphic to any listed template".into());
    Outcome::NotInList { reason }
}

/// Decides membership in the families with `ρ(D) ≤ 2`, with the exact
/// comparison of `ρ(D)` against 2 attached.
pub fn classify_le2(d: &MixedGraph) -> Verdict {
    classify_with_bound(d, false, &two())
}

/// Decides membership in the families with `ρ(D) = 2`, with the exact
/// comparison attached.
pub fn classify_eq2(d: &MixedGraph) -> Verdict {
    classify_with_bound(d, true, &two())
}

/// Either decision, cross-checked against an arbitrary positive bound.
pub fn classify_with_bound(d: &MixedGraph, exact: bool, bound: &BigRational) -> Verdict {
    let outcome = if exact {
        eq2_outcome(d)
    } else {
        le2_outcome(d)
    };
    Verdict {
        outcome,
        crosscheck: Some(compare_radius(d, bound)),
    }
}

/// Verdicts for each connected component, with vertex lists in the input's
/// numbering.
#[derive(Debug, Clone, Serialize)]
pub struct ComponentVerdicts {
    pub components: Vec<ComponentVerdict>,
    /// Every component is in the list.
    pub all_in_list: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentVerdict {
    pub vertices: Vec<usize>,
    pub verdict: Verdict,
}

/// Classifies each component separately. For `ρ ≤ 2` the conjunction decides
/// the whole graph. For `ρ = 2` it does not: the whole graph has `ρ = 2` when
/// every component has `ρ ≤ 2` and at least one has `ρ = 2`.
pub fn classify_components(d: &MixedGraph, exact: bool, bound: &BigRational) -> ComponentVerdicts {
    let components: Vec<ComponentVerdict> = d
        .components()
        .into_iter()
        .map(|vertices| {
            let (sub, _) = d
                .induced_subgraph(&vertices)
                .expect("component vertices are valid");
            ComponentVerdict {
                vertices,
                verdict: classify_with_bound(&sub, exact, bound),
            }
        })
        .collect();
    let all_in_list = components.iter().all(|c| c.verdict.outcome.is_in_list());
    ComponentVerdicts {
        components,
        all_in_list,
    }
}

/// Re-checks a certificate from scratch: the template regenerates, the map is
/// injective and preserves adjacency and non-adjacency (and is onto for the
/// exact tags), and every cycle of `d` has the sign the tag requires.
pub fn verify_certificate(d: &MixedGraph, cert: &Certificate) -> Result<(), String> {
    let template = cert.template.generate().map_err(|e| e.to_string())?;
    let n = d.n();
    if cert.embedding.len() != n {
        return Err(format!(
            "embedding has {} entries for {n} vertices",
            cert.embedding.len()
        ));
    }
    let mut seen = vec![false; template.n()];
    for &x in &cert.embedding {
        if x >= template.n() || std::mem::replace(&mut seen[x], true) {
            return Err(format!("embedding is not injective into {}", cert.template));
        }
    }
    if !cert.tag.is_hat() && n != template.n() {
        return Err("exact tag needs a bijection".into());
    }
    for u in 0..n {
        for v in u + 1..n {
            if d.has_edge(u, v) != template.has_edge(cert.embedding[u], cert.embedding[v]) {
                return Err(format!("pair {u},{v} is not preserved"));
            }
        }
    }
    let tag_ok = match (cert.tag, &cert.template) {
        (FamilyTag::SmithUnderlying, spec) => smith_templates(spec.vertex_count()).contains(spec),
        (FamilyTag::SmithTree, spec) => smith_templates(n).contains(spec) && template.is_tree(),
        (FamilyTag::CyclePlus, FamilySpec::Cycle(_)) => true,
        (FamilyTag::CycleMinusOdd, FamilySpec::Cycle(m)) => m % 2 == 1,
        (tag, spec) => hat_templates()
            .iter()
            .chain(exact_templates().iter())
            .any(|(t, s)| *t == tag && s == spec),
    };
    if !tag_ok {
        return Err(format!(
            "{} is not a template for {}",
            cert.template, cert.tag
        ));
    }
    match sign_violation(d, &enumerate_cycles(d), cert.tag) {
        Some((c, want, got)) => Err(format!("cycle {c} is {got:?}, {} needs {want:?}", cert.tag)),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{family_representative, MemberSigns};
    use crate::graph::EdgeKind;
    use crate::spectra::RadiusRelation;

    fn spec(text: &str) -> MixedGraph {
        text.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    #[test]
    fn embeddings() {
        assert!(embed_induced(&spec("P3"), &spec("C5")).is_some());
        assert_eq!(embed_induced(&spec("K1,4"), &spec("Y(2,3,2)")), None);
        assert_eq!(embed_induced(&spec("C4"), &spec("theta(3,5,5)")), None);
        assert_eq!(embed_induced(&spec("P3"), &spec("C3")), None);
        assert_eq!(embed_induced(&spec("P3"), &spec("P3")), Some(vec![0, 1, 2]));
    }

    #[test]
    fn smith_membership_examples() {
        assert!(smith_membership(&spec("S(1,3,4)")).is_none());
        assert!(smith_membership(&spec("Y(3,0,3)")).is_none());
        assert!(smith_membership(&spec("S(1,3,3)")).is_some());
        assert!(smith_membership(&spec("S(1,2,4)")).is_some());
        assert!(smith_membership(&spec("P1")).is_some());
    }

    #[test]
    fn le2_examples() {
        let v = classify_le2(&spec("P10"));
        assert_eq!(
            v.outcome.certificate().unwrap().tag,
            FamilyTag::SmithUnderlying
        );
        let star = family_representative(&"C3(2)".parse().unwrap(), MemberSigns::Star).unwrap();
        let v = classify_le2(&star);
        assert_eq!(
            v.outcome.certificate().unwrap().tag,
            FamilyTag::C3TwoStarHat
        );
        assert_eq!(v.crosscheck.unwrap().relation, RadiusRelation::Exactly);
        let v = classify_le2(&spec("C3(1)"));
        assert!(matches!(v.outcome, Outcome::NotInList { .. }));
        assert_eq!(v.crosscheck.unwrap().relation, RadiusRelation::Above);
    }

    #[test]
    fn eq2_examples() {
        assert_eq!(
            eq2_outcome(&spec("C9")).certificate().unwrap().tag,
            FamilyTag::CyclePlus
        );
        let neg5 = family_representative(&"C5".parse().unwrap(), MemberSigns::Minus).unwrap();
        assert_eq!(
            eq2_outcome(&neg5).certificate().unwrap().tag,
            FamilyTag::CycleMinusOdd
        );
        let neg4 = family_representative(&"C4".parse().unwrap(), MemberSigns::Minus).unwrap();
        assert!(matches!(eq2_outcome(&neg4), Outcome::OutOfScope { .. }));
    }

    #[test]
    fn out_of_scope() {
        let two_edges = MixedGraph::undirected(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            le2_outcome(&two_edges),
            Outcome::OutOfScope { .. }
        ));
        let d1: MixedGraph = "v 4\n0 -- 1\n0 -- 3\n1 -- 3\n1 -> 2\n2 -> 3"
            .parse()
            .unwrap();
        assert!(matches!(le2_outcome(&d1), Outcome::OutOfScope { .. }));
    }

    #[test]
    fn certificates_recheck() {
        let star = family_representative(&"C3(2)".parse().unwrap(), MemberSigns::Star).unwrap();
        let cert = le2_outcome(&star).certificate().unwrap().clone();
        assert_eq!(verify_certificate(&star, &cert), Ok(()));
        // flipping to an undirected triangle breaks the sign condition
        let plain = star.underlying();
        assert!(verify_certificate(&plain, &cert).is_err());
        let mut bad = cert.clone();
        bad.embedding[0] = bad.embedding[1];
        assert!(verify_certificate(&star, &bad).is_err());
    }

    #[test]
    fn per_component() {
        let g = MixedGraph::new(
            5,
            [
                (0, 1, EdgeKind::Forward),
                (2, 3, EdgeKind::Undirected),
                (3, 4, EdgeKind::Undirected),
            ],
        )
        .unwrap();
        let r = classify_components(&g, false, &two());
        assert_eq!(r.components.len(), 2);
        assert!(r.all_in_list);
        assert_eq!(r.components[1].vertices, vec![2, 3, 4]);
    }

    #[test]
    fn verdict_json_shape() {
        let json = serde_json::to_value(classify_le2(&spec("P3"))).unwrap();
        assert_eq!(json["outcome"], "InList");
        assert_eq!(json["family_tag"], "SmithUnderlying");
        assert_eq!(json["template"], "C4");
        assert_eq!(json["crosscheck"]["relation"], "Below");
        assert!(json["reason"].is_null());
    }
}
