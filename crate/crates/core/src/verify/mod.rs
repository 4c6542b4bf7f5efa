//! Exhaustive enumeration and property checks.
//!
//! Underlying graphs come from [`canon`]; each is then oriented in every way
//! ([`OrientationMode::All`]) or once per cycle-sign vector
//! ([`OrientationMode::OnePerSignVector`]). Results are collected in a
//! [`Report`]: one aggregated [`CheckRecord`] per underlying graph and check,
//! holding the number of cases, the number of failures and a few failure
//! descriptions.
//!
//! Cost grows like the number of underlying graphs times `3^|E|` in `All`
//! mode. The sign-vector mode replaces `3^|E|` by at most `4^c`, `c` the
//! cyclomatic number, and is justified by the sign-vector determinism check.

pub mod canon;

use std::collections::HashMap;
use std::time::Instant;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::{eq2_outcome, le2_outcome, verify_certificate, Outcome};
use crate::graph::{EdgeKind, MixedGraph};
use crate::spectra::{
    charpoly_leverrier, compare_radius_poly, compare_spectral_radii, eigenvalues,
    extremal_vertex_weights, two, ElementaryCatalog, IntPolynomial, RadiusRelation,
    SubgraphCharpolys,
};
use crate::structure::{enumerate_cycles, is_c4_free, Cycle, CycleSteps, SignClass};

/// No enumeration goes beyond this many vertices.
pub const HARD_MAX_N: usize = 10;
/// `All` mode refuses graphs with more edges.
pub const MAX_ALL_EDGES: usize = 14;
/// Sign-vector mode refuses graphs with a larger cyclomatic number.
pub const MAX_SIGN_CYCLOMATIC: usize = 16;
/// Failure descriptions kept per aggregated record.
const FAILURE_EXAMPLES: usize = 10;
/// Strict inequalities are accepted numerically above this gap and decided
/// exactly below it.
pub const NUMERIC_MARGIN: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("max_n = {max_n} is outside 1..={limit}")]
    ScopeTooLarge { max_n: usize, limit: usize },
    #[error("{edges} edges exceeds the limit of {limit} for exhaustive orientation")]
    TooManyEdges { edges: usize, limit: usize },
    #[error("cyclomatic number {cyclomatic} exceeds the limit of {limit}")]
    TooManyCycles { cyclomatic: usize, limit: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrientationMode {
    All,
    OnePerSignVector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationScope {
    pub max_n: usize,
    pub c4free_only: bool,
    pub connected_only: bool,
    pub orientation_mode: OrientationMode,
}

impl EnumerationScope {
    /// Connected graphs on up to `max_n` vertices, all orientations.
    pub fn new(max_n: usize) -> Self {
        EnumerationScope {
            max_n,
            c4free_only: false,
            connected_only: true,
            orientation_mode: OrientationMode::All,
        }
    }

    pub fn check(&self, limit: usize) -> Result<(), VerifyError> {
        if self.max_n == 0 || self.max_n > limit.min(HARD_MAX_N) {
            return Err(VerifyError::ScopeTooLarge {
                max_n: self.max_n,
                limit: limit.min(HARD_MAX_N),
            });
        }
        Ok(())
    }
}

/// All undirected graphs in scope, one per isomorphism class, by vertex
/// count and then canonical code.
pub fn enumerate_underlying(scope: &EnumerationScope) -> Result<Vec<MixedGraph>, VerifyError> {
    scope.check(HARD_MAX_N)?;
    let levels = canon::generate_levels(scope.max_n, scope.connected_only, scope.c4free_only);
    Ok(levels
        .iter()
        .enumerate()
        .flat_map(|(k, codes)| {
            codes
                .iter()
                .map(move |&c| canon::Adjacency::from_code(k + 1, c).to_graph())
        })
        .collect())
}

/// Every kind vector of `edge_count` edges, in lexicographic order.
pub struct AllKinds {
    digits: Vec<u8>,
    done: bool,
}

impl AllKinds {
    pub fn new(edge_count: usize) -> Self {
        AllKinds {
            digits: vec![0; edge_count],
            done: false,
        }
    }
}

impl Iterator for AllKinds {
    type Item = Vec<EdgeKind>;

    fn next(&mut self) -> Option<Vec<EdgeKind>> {
        if self.done {
            return None;
        }
        let out = self
            .digits
            .iter()
            .map(|&d| EdgeKind::ALL[d as usize])
            .collect();
        // increment, last edge fastest
        let mut i = self.digits.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.digits[i] < 2 {
                self.digits[i] += 1;
                break;
            }
            self.digits[i] = 0;
        }
        Some(out)
    }
}

/// Fundamental cycles of a spanning forest (breadth-first from each
/// component's least vertex). The exponents of these cycles determine the
/// exponent of every cycle.
pub fn fundamental_cycles(g: &MixedGraph) -> Vec<CycleSteps> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut seen = vec![false; n];
    let mut tree_edge = vec![false; g.edge_count()];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = x;
                    depth[y] = depth[x] + 1;
                    tree_edge[g.edge_index(x, y).expect("neighbor edge")] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    let mut out = Vec::new();
    for (i, e) in g.edges().iter().enumerate() {
        if tree_edge[i] {
            continue;
        }
        // tree path from e.u up to the common ancestor and down to e.v
        let (mut a, mut b) = (e.u, e.v);
        let mut left = vec![a];
        let mut right = vec![b];
        while a != b {
            if depth[a] >= depth[b] {
                a = parent[a];
                left.push(a);
            } else {
                b = parent[b];
                right.push(b);
            }
        }
        right.pop();
        left.extend(right.into_iter().rev());
        let cycle = Cycle::new(left);
        out.push(CycleSteps::new(g, &cycle).expect("fundamental cycle is a cycle"));
    }
    out
}

fn cyclomatic_number(g: &MixedGraph) -> usize {
    g.edge_count() + g.components().len() - g.n()
}

fn kind_digit(kind: EdgeKind) -> u64 {
    match kind {
        EdgeKind::Undirected => 0,
        EdgeKind::Forward => 1,
        EdgeKind::Backward => 2,
    }
}

/// Kind vector from a base-3 code with the first edge most significant.
fn decode_kinds(mut code: u64, edge_count: usize) -> Vec<EdgeKind> {
    let mut kinds = vec![EdgeKind::Undirected; edge_count];
    for slot in kinds.iter_mut().rev() {
        *slot = EdgeKind::ALL[(code % 3) as usize];
        code /= 3;
    }
    kinds
}

fn encode_kinds(kinds: &[EdgeKind]) -> u64 {
    kinds.iter().fold(0u64, |acc, &k| acc * 3 + kind_digit(k))
}

/// Packed exponents (two bits per fundamental cycle) of an orientation.
fn sign_state(fundamental: &[CycleSteps], kinds: &[EdgeKind]) -> u64 {
    fundamental.iter().enumerate().fold(0u64, |acc, (j, c)| {
        acc | u64::from(c.exponent(kinds)) << (2 * j)
    })
}

/// For each reachable vector of fundamental-cycle exponents, the
/// lexicographically least kind vector realizing it, keyed by the packed
/// exponent vector. Dynamic programming over the edges: two prefixes reaching
/// the same partial exponents have the same completions, so only the least
/// prefix needs keeping.
pub fn sign_vector_representatives(
    g: &MixedGraph,
) -> Result<HashMap<u64, Vec<EdgeKind>>, VerifyError> {
    let fundamental = fundamental_cycles(g);
    if fundamental.len() > MAX_SIGN_CYCLOMATIC {
        return Err(VerifyError::TooManyCycles {
            cyclomatic: fundamental.len(),
            limit: MAX_SIGN_CYCLOMATIC,
        });
    }
    let m = g.edge_count();
    if m > 40 {
        return Err(VerifyError::TooManyEdges {
            edges: m,
            limit: 40,
        });
    }
    let mut through: Vec<Vec<(usize, bool)>> = vec![Vec::new(); m];
    for (j, c) in fundamental.iter().enumerate() {
        for &(e, back) in &c.steps {
            through[e].push((j, back));
        }
    }
    let mut layer: HashMap<u64, u64> = HashMap::from([(0, 0)]);
    for cycles_here in &through {
        let mut next: HashMap<u64, u64> = HashMap::with_capacity(layer.len() * 3);
        for (&state, &code) in &layer {
            for kind in EdgeKind::ALL {
                let k = kind.exponent();
                let mut s = state;
                for &(j, back) in cycles_here {
                    let add = u64::from(if back { (4 - k) % 4 } else { k });
                    let field = ((s >> (2 * j) & 3) + add) & 3;
                    s = s & !(3 << (2 * j)) | field << (2 * j);
                }
                let c = code * 3 + kind_digit(kind);
                next.entry(s)
                    .and_modify(|best| *best = (*best).min(c))
                    .or_insert(c);
            }
        }
        layer = next;
    }
    Ok(layer
        .into_iter()
        .map(|(s, code)| (s, decode_kinds(code, m)))
        .collect())
}

/// Kind vectors of the orientations of `g` in the given mode, in
/// lexicographic order.
pub fn orientation_kinds(
    g: &MixedGraph,
    mode: OrientationMode,
) -> Result<Box<dyn Iterator<Item = Vec<EdgeKind>> + Send>, VerifyError> {
    match mode {
        OrientationMode::All => {
            if g.edge_count() > MAX_ALL_EDGES {
                return Err(VerifyError::TooManyEdges {
                    edges: g.edge_count(),
                    limit: MAX_ALL_EDGES,
                });
            }
            Ok(Box::new(AllKinds::new(g.edge_count())))
        }
        OrientationMode::OnePerSignVector => {
            let mut reps: Vec<Vec<EdgeKind>> =
                sign_vector_representatives(g)?.into_values().collect();
            reps.sort_by_key(|k| encode_kinds(k));
            Ok(Box::new(reps.into_iter()))
        }
    }
}

/// Orientations of the undirected graph `g` (any existing directions are
/// ignored).
pub fn enumerate_orientations(
    g: &MixedGraph,
    mode: OrientationMode,
) -> Result<impl Iterator<Item = MixedGraph> + Send, VerifyError> {
    let base = g.underlying();
    Ok(orientation_kinds(g, mode)?.map(move |kinds| base.with_kinds(&kinds)))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub instance: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
    /// Number of individual cases this record stands for.
    pub cases: usize,
    pub failed_cases: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub scope: Option<EnumerationScope>,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
    pub elapsed_seconds: f64,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.summary.total += record.cases;
        self.summary.failed += record.failed_cases;
        self.summary.passed += record.cases - record.failed_cases;
        self.checks.push(record);
    }

    pub fn merge(&mut self, other: Report) {
        for r in other.checks {
            self.push(r);
        }
        self.elapsed_seconds += other.elapsed_seconds;
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0 && self.checks.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|r| !r.pass)
    }

    /// Cases of records whose check name starts with `prefix`.
    pub fn count(&self, prefix: &str) -> Summary {
        let mut s = Summary::default();
        for r in self.checks.iter().filter(|r| r.check.starts_with(prefix)) {
            s.total += r.cases;
            s.failed += r.failed_cases;
        }
        s.passed = s.total - s.failed;
        s
    }
}

/// Accumulates many cases of one check into a single record.
#[derive(Debug, Clone)]
pub struct Tally {
    check: String,
    instance: String,
    expected: String,
    cases: usize,
    failed: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    pub fn new(check: &str, instance: impl Into<String>, expected: impl Into<String>) -> Self {
        Tally {
            check: check.to_string(),
            instance: instance.into(),
            expected: expected.into(),
            cases: 0,
            failed: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn record(&mut self, pass: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !pass {
            self.failed += 1;
            if self.failures.len() < FAILURE_EXAMPLES {
                self.failures.push(describe());
            }
        }
    }

    pub fn note(&mut self, text: String) {
        self.notes.push(text);
    }

    pub fn finish(self) -> CheckRecord {
        let mut observed = format!("{} of {} cases hold", self.cases - self.failed, self.cases);
        for n in &self.notes {
            observed.push_str("; ");
            observed.push_str(n);
        }
        CheckRecord {
            check: self.check,
            instance: self.instance,
            expected: self.expected,
            observed,
            pass: self.failed == 0,
            cases: self.cases,
            failed_cases: self.failed,
            failures: self.failures,
        }
    }
}

fn full_mask(n: usize) -> u64 {
    (1u64 << n) - 1
}

fn mask_of(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

/// Real value `±1` of a cycle exponent, `None` when imaginary.
fn real_value(exp: u8) -> Option<i128> {
    match exp {
        0 => Some(1),
        2 => Some(-1),
        _ => None,
    }
}

/// Source of the subgraph polynomials on the right-hand sides of the
/// deletion identities, as descending coefficient rows.
trait DeletionTerms {
    /// `Φ(D[S])`, `|S| + 1` entries.
    fn induced(&self, mask: u64) -> &[i128];
    /// `Φ(D − e_i)`, `n + 1` entries.
    fn edge_deleted(&self, i: usize) -> &[i128];
}

impl DeletionTerms for SubgraphCharpolys {
    fn induced(&self, mask: u64) -> &[i128] {
        self.induced_desc(mask)
    }

    fn edge_deleted(&self, i: usize) -> &[i128] {
        self.edge_deleted_desc(i)
    }
}

/// Every term computed directly by the trace recursion.
struct DirectTerms {
    induced: Vec<Vec<i128>>,
    edges: Vec<Vec<i128>>,
}

impl DirectTerms {
    fn new(d: &MixedGraph) -> Self {
        let induced = (0..1u64 << d.n())
            .map(|mask| {
                let keep: Vec<usize> = (0..d.n()).filter(|&v| mask >> v & 1 == 1).collect();
                charpoly_leverrier(&d.induced_subgraph(&keep).expect("mask within range").0)
                    .descending()
            })
            .collect();
        let edges = d
            .edges()
            .iter()
            .map(|e| {
                charpoly_leverrier(&d.delete_edge(e.u, e.v).expect("edge exists")).descending()
            })
            .collect();
        DirectTerms { induced, edges }
    }
}

impl DeletionTerms for DirectTerms {
    fn induced(&self, mask: u64) -> &[i128] {
        &self.induced[mask as usize]
    }

    fn edge_deleted(&self, i: usize) -> &[i128] {
        &self.edges[i]
    }
}

/// Cycle incidences of one underlying graph, for the deletion identities.
struct CycleIncidence {
    masks: Vec<u64>,
    through_edge: Vec<Vec<usize>>,
    through_vertex: Vec<Vec<usize>>,
}

impl CycleIncidence {
    fn new(g: &MixedGraph, cycles: &[Cycle]) -> Self {
        let mut through_edge = vec![Vec::new(); g.edge_count()];
        let mut through_vertex = vec![Vec::new(); g.n()];
        for (j, c) in cycles.iter().enumerate() {
            for (a, b) in c.steps() {
                through_edge[g.edge_index(a, b).expect("cycle step")].push(j);
                through_vertex[a].push(j);
            }
        }
        let masks: Vec<u64> = cycles.iter().map(|c| mask_of(c.vertices())).collect();
        // cycles on the same vertex set share a term, so keep them adjacent
        for list in through_edge.iter_mut().chain(through_vertex.iter_mut()) {
            list.sort_by_key(|&j| masks[j]);
        }
        CycleIncidence {
            masks,
            through_edge,
            through_vertex,
        }
    }
}

/// Receives a lazily built label and the right-hand side, ascending.
type IdentityVisitor<'a> = dyn FnMut(&dyn Fn() -> String, &[i128]) + 'a;

/// `acc += factor · λ^shift · p` for `p` given by descending coefficients.
fn add_scaled(acc: &mut [i128], desc: &[i128], factor: i128, shift: usize) {
    let k = desc.len() - 1;
    for (i, &c) in desc.iter().enumerate() {
        acc[k - i + shift] += factor * c;
    }
}

/// Evaluates the right-hand side of every edge- and vertex-deletion identity
/// as ascending coefficients and hands each to `visit` with its label.
fn for_each_deletion_identity(
    d: &MixedGraph,
    inc: &CycleIncidence,
    exps: &[u8],
    terms: &dyn DeletionTerms,
    visit: &mut IdentityVisitor,
) {
    let n = d.n();
    let full = full_mask(n);
    let mut acc = vec![0i128; n + 2];
    let cycle_terms = |acc: &mut [i128], through: &[usize]| {
        for group in through.chunk_by(|&a, &b| inc.masks[a] == inc.masks[b]) {
            let h: i128 = group.iter().filter_map(|&j| real_value(exps[j])).sum();
            if h != 0 {
                add_scaled(acc, terms.induced(full & !inc.masks[group[0]]), -2 * h, 0);
            }
        }
    };
    for (i, e) in d.edges().iter().enumerate() {
        acc.iter_mut().for_each(|x| *x = 0);
        add_scaled(&mut acc, terms.edge_deleted(i), 1, 0);
        add_scaled(
            &mut acc,
            terms.induced(full & !(1 << e.u) & !(1 << e.v)),
            -1,
            0,
        );
        cycle_terms(&mut acc, &inc.through_edge[i]);
        visit(&|| format!("edge {}-{}", e.u, e.v), &acc);
    }
    for v in 0..n {
        acc.iter_mut().for_each(|x| *x = 0);
        add_scaled(&mut acc, terms.induced(full & !(1 << v)), 1, 1);
        for &u in d.neighbors(v) {
            add_scaled(&mut acc, terms.induced(full & !(1 << v) & !(1 << u)), -1, 0);
        }
        cycle_terms(&mut acc, &inc.through_vertex[v]);
        visit(&|| format!("vertex {v}"), &acc);
    }
}

fn matches_poly(asc: &[i128], p: &IntPolynomial) -> bool {
    asc.iter().enumerate().all(|(k, &c)| c == p.coeff(k))
}

/// Edge and vertex deletion identities for `D`, every polynomial computed
/// directly by the trace recursion. One record per edge and per vertex.
pub fn check_deletion_identities(d: &MixedGraph) -> Report {
    let cycles = enumerate_cycles(d);
    let kinds = d.kinds();
    let exps: Vec<u8> = cycles
        .iter()
        .map(|c| CycleSteps::new(d, c).expect("cycle").exponent(&kinds))
        .collect();
    let phi = charpoly_leverrier(d);
    let inc = CycleIncidence::new(d, &cycles);
    let terms = DirectTerms::new(d);
    let mut report = Report::new();
    for_each_deletion_identity(d, &inc, &exps, &terms, &mut |label, rhs| {
        let pass = matches_poly(rhs, &phi);
        report.push(CheckRecord {
            check: "deletion_identity".into(),
            instance: format!("{} {}", d.compact(), label()),
            expected: phi.to_string(),
            observed: IntPolynomial::from_ascending(rhs.to_vec()).to_string(),
            pass,
            cases: 1,
            failed_cases: usize::from(!pass),
            failures: Vec::new(),
        });
    });
    report
}

/// `ρ(a) > ρ(b)`, numerically when the gap is clear, otherwise exactly.
fn strictly_larger(rho_a: f64, rho_b: f64, pa: &IntPolynomial, pb: &IntPolynomial) -> bool {
    let gap = rho_a - rho_b;
    if gap > NUMERIC_MARGIN {
        return true;
    }
    if gap < -NUMERIC_MARGIN {
        return false;
    }
    compare_spectral_radii(pa, pb) == std::cmp::Ordering::Greater
}

fn radius_of(d: &MixedGraph) -> f64 {
    eigenvalues(d).iter().fold(0.0f64, |a, x| a.max(x.abs()))
}

/// At least one edge, and every real cycle positive and of even length.
fn monotonicity_hypothesis(d: &MixedGraph, cycles: &[Cycle], exps: &[u8]) -> bool {
    d.edge_count() > 0
        && cycles.iter().zip(exps).all(|(c, &k)| match k {
            0 => c.len() % 2 == 0,
            2 => false,
            _ => true,
        })
}

/// Deleting a vertex or an edge strictly lowers `ρ(D)` when every real cycle
/// of the connected graph `D` is positive and even. When the hypothesis
/// fails the deletions are only reported.
pub fn check_monotonicity(d: &MixedGraph) -> Report {
    let cycles = enumerate_cycles(d);
    let kinds = d.kinds();
    let exps: Vec<u8> = cycles
        .iter()
        .map(|c| CycleSteps::new(d, c).expect("cycle").exponent(&kinds))
        .collect();
    let holds = monotonicity_hypothesis(d, &cycles, &exps);
    let rho = radius_of(d);
    let phi = charpoly_leverrier(d);
    let mut report = Report::new();
    let mut deletions: Vec<(String, MixedGraph)> = Vec::new();
    for v in 0..d.n() {
        deletions.push((
            format!("vertex {v}"),
            d.delete_vertex(v).expect("vertex exists").0,
        ));
    }
    for e in d.edges() {
        deletions.push((
            format!("edge {}-{}", e.u, e.v),
            d.delete_edge(e.u, e.v).expect("edge exists"),
        ));
    }
    for (label, smaller) in deletions {
        let r = radius_of(&smaller);
        let observed = format!("ρ(D) = {rho:.6}, ρ(D − {label}) = {r:.6}");
        if holds {
            let pass = strictly_larger(rho, r, &phi, &charpoly_leverrier(&smaller));
            report.push(CheckRecord {
                check: "monotonicity".into(),
                instance: format!("{} minus {label}", d.compact()),
                expected: "ρ(D) > ρ(D − x)".into(),
                observed,
                pass,
                cases: 1,
                failed_cases: usize::from(!pass),
                failures: Vec::new(),
            });
        } else {
            report.push(CheckRecord {
                check: "monotonicity".into(),
                instance: format!("{} minus {label}", d.compact()),
                expected: "not asserted: no edges, or some real cycle is negative or odd".into(),
                observed,
                pass: true,
                cases: 0,
                failed_cases: 0,
                failures: Vec::new(),
            });
        }
    }
    report
}

/// Which property checks a bulk run performs for every orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Suite {
    /// Trace recursion and elementary-subgraph sum agree.
    pub charpoly_agreement: bool,
    /// Edge and vertex deletion identities.
    pub deletion_identities: bool,
    /// Spectral symmetry, positive-cycle equivalence, trace and Frobenius
    /// identities, eigenvalue residuals, numeric versus exact radius.
    pub spectral_properties: bool,
    /// Classifier verdicts against exact radius decisions, with certificate
    /// re-checks.
    pub classification: bool,
    pub monotonicity: bool,
    /// All orientations grouped by sign-class vector share a charpoly. Needs
    /// `All` mode; graphs with more than 11 edges are skipped.
    pub sign_determinism: bool,
}

impl Suite {
    pub const EVERYTHING: Suite = Suite {
        charpoly_agreement: true,
        deletion_identities: true,
        spectral_properties: true,
        classification: true,
        monotonicity: true,
        sign_determinism: true,
    };

    pub const NOTHING: Suite = Suite {
        charpoly_agreement: false,
        deletion_identities: false,
        spectral_properties: false,
        classification: false,
        monotonicity: false,
        sign_determinism: false,
    };
}

/// Shared data for all orientations of one underlying graph.
struct Underlying {
    g: MixedGraph,
    name: String,
    cycles: Vec<Cycle>,
    steps: Vec<CycleSteps>,
    catalog: ElementaryCatalog,
    incidence: CycleIncidence,
    plain_charpoly: IntPolynomial,
    c4_free: bool,
    connected: bool,
}

impl Underlying {
    fn new(g: &MixedGraph) -> Self {
        let g = g.underlying();
        let cycles = enumerate_cycles(&g);
        let steps = cycles
            .iter()
            .map(|c| CycleSteps::new(&g, c).expect("cycle"))
            .collect();
        Underlying {
            name: format!("underlying {}", g.compact()),
            catalog: ElementaryCatalog::new(&g),
            plain_charpoly: charpoly_leverrier(&g),
            c4_free: is_c4_free(&g),
            connected: g.is_connected(),
            incidence: CycleIncidence::new(&g, &cycles),
            cycles,
            steps,
            g,
        }
    }
}

struct Tallies {
    agreement: Tally,
    deletion: Tally,
    symmetry: Tally,
    positive: Tally,
    trace: Tally,
    residual: Tally,
    radius: Tally,
    le2: Tally,
    eq2: Tally,
    certificates: Tally,
    scope: Tally,
    monotone: Tally,
    census: HashMap<String, usize>,
    outside_hypothesis: usize,
    non_decreasing: usize,
}

impl Tallies {
    fn new(name: &str) -> Self {
        let t = |check: &str, expected: &str| Tally::new(check, name, expected);
        Tallies {
            agreement: t(
                "charpoly_agreement",
                "trace recursion = elementary-subgraph sum",
            ),
            deletion: t(
                "deletion_identity",
                "edge and vertex deletion identities hold exactly",
            ),
            symmetry: t(
                "spectral_symmetry",
                "no real odd cycle ⇒ odd coefficients vanish",
            ),
            positive: t(
                "positive_cycle_equivalence",
                "all cycles positive ⇒ Φ(D) = Φ(G(D))",
            ),
            trace: t("trace_frobenius", "Σλ = 0 (1e-9), Σλ² = 2|E| (1e-8)"),
            residual: t("eigen_residual", "|Φ(λ_i)| ≤ 1e-6 · max|c_i|"),
            radius: t(
                "radius_consistency",
                "exact decision agrees with ρ when |ρ − 2| > 1e-6",
            ),
            le2: t("cross_check_le2", "le2 in list ⇔ ρ ≤ 2"),
            eq2: t("cross_check_eq2", "eq2 in list ⇔ ρ = 2"),
            certificates: t("certificate", "every certificate re-verifies"),
            scope: t("out_of_scope", "graphs with a 4-cycle are never classified"),
            monotone: t(
                "monotonicity",
                "positive even real cycles ⇒ deletions lower ρ",
            ),
            census: HashMap::new(),
            outside_hypothesis: 0,
            non_decreasing: 0,
        }
    }

    fn finish(mut self, suite: &Suite, report: &mut Report) {
        if !self.census.is_empty() {
            let mut tags: Vec<_> = self.census.iter().collect();
            tags.sort();
            let text = tags
                .iter()
                .map(|(t, n)| format!("{t}: {n}"))
                .collect::<Vec<_>>()
                .join(", ");
            self.le2.note(format!("tags {text}"));
        }
        if self.outside_hypothesis > 0 {
            self.monotone.note(format!(
                "{} orientations outside the hypothesis, {} with a deletion that does not lower ρ",
                self.outside_hypothesis, self.non_decreasing
            ));
        }
        let keep = |t: &Tally| t.cases > 0 || !t.notes.is_empty();
        let mut push = |enabled: bool, t: Tally| {
            if enabled && keep(&t) {
                report.push(t.finish());
            }
        };
        push(suite.charpoly_agreement, self.agreement);
        push(suite.deletion_identities, self.deletion);
        push(suite.spectral_properties, self.symmetry);
        push(suite.spectral_properties, self.positive);
        push(suite.spectral_properties, self.trace);
        push(suite.spectral_properties, self.residual);
        push(suite.spectral_properties, self.radius);
        push(suite.classification, self.le2);
        push(suite.classification, self.eq2);
        push(suite.classification, self.certificates);
        push(suite.classification, self.scope);
        push(suite.monotonicity, self.monotone);
    }
}

/// Exact radius relation to 2, memoized by characteristic polynomial.
#[derive(Default)]
pub struct RadiusCache {
    map: HashMap<IntPolynomial, RadiusRelation>,
}

impl RadiusCache {
    pub fn relation(&mut self, p: &IntPolynomial) -> RadiusRelation {
        if let Some(r) = self.map.get(p) {
            return *r;
        }
        let r = compare_radius_poly(p, &two()).relation;
        self.map.insert(p.clone(), r);
        r
    }
}

fn check_orientation(
    u: &Underlying,
    kinds: &[EdgeKind],
    suite: &Suite,
    t: &mut Tallies,
    cache: &mut RadiusCache,
) {
    let d = u.g.with_kinds(kinds);
    let label = || d.compact();
    let exps: Vec<u8> = u.steps.iter().map(|s| s.exponent(kinds)).collect();
    let phi = charpoly_leverrier(&d);

    if suite.charpoly_agreement {
        let sachs = u.catalog.charpoly(&d);
        t.agreement.record(sachs == phi, || {
            format!("{}: trace {phi}, sachs {sachs}", label())
        });
    }

    if suite.deletion_identities {
        let table = u.catalog.subgraph_charpolys(&d);
        for_each_deletion_identity(&d, &u.incidence, &exps, &table, &mut |what, rhs| {
            t.deletion.record(matches_poly(rhs, &phi), || {
                format!(
                    "{} {}: Φ = {phi}, rhs = {}",
                    label(),
                    what(),
                    IntPolynomial::from_ascending(rhs.to_vec())
                )
            });
        });
    }

    let need_eigen = suite.spectral_properties;
    let ev = if need_eigen {
        eigenvalues(&d)
    } else {
        Vec::new()
    };
    if suite.spectral_properties {
        let real_odd = u
            .cycles
            .iter()
            .zip(&exps)
            .any(|(c, &k)| c.len() % 2 == 1 && real_value(k).is_some());
        if !real_odd {
            t.symmetry.record(phi.is_spectrally_symmetric(), || {
                format!("{}: {phi}", label())
            });
        }
        if exps.iter().all(|&k| k == 0) {
            t.positive.record(phi == u.plain_charpoly, || {
                format!("{}: {phi} vs {}", label(), u.plain_charpoly)
            });
        }
        let sum: f64 = ev.iter().sum();
        let squares: f64 = ev.iter().map(|x| x * x).sum();
        let frob = 2.0 * d.edge_count() as f64;
        t.trace
            .record(sum.abs() <= 1e-9 && (squares - frob).abs() <= 1e-8, || {
                format!("{}: Σλ = {sum:e}, Σλ² = {squares} vs {frob}", label())
            });
        let scale = phi.max_abs_coeff() as f64;
        let worst = ev
            .iter()
            .map(|&x| phi.eval_f64(x).abs())
            .fold(0.0f64, f64::max);
        t.residual.record(worst <= 1e-6 * scale, || {
            format!("{}: residual {worst:e}", label())
        });
        let rho = ev.iter().fold(0.0f64, |a, x| a.max(x.abs()));
        if (rho - 2.0).abs() > 1e-6 {
            let rel = cache.relation(&phi);
            let expect = if rho < 2.0 {
                RadiusRelation::Below
            } else {
                RadiusRelation::Above
            };
            t.radius.record(rel == expect, || {
                format!("{}: ρ = {rho}, exact {rel}", label())
            });
        }
    }

    if suite.classification && u.connected {
        let le2 = le2_outcome(&d);
        let eq2 = eq2_outcome(&d);
        if u.c4_free {
            let rel = cache.relation(&phi);
            t.le2
                .record(le2.is_in_list() == (rel != RadiusRelation::Above), || {
                    format!("{}: le2 {}, exact {rel}", label(), le2.label())
                });
            t.eq2
                .record(eq2.is_in_list() == (rel == RadiusRelation::Exactly), || {
                    format!("{}: eq2 {}, exact {rel}", label(), eq2.label())
                });
            for out in [&le2, &eq2] {
                if let Some(cert) = out.certificate() {
                    *t.census.entry(cert.tag.to_string()).or_default() += 1;
                    let checked = verify_certificate(&d, cert);
                    t.certificates.record(checked.is_ok(), || {
                        format!("{}: {}", label(), checked.unwrap_err())
                    });
                }
            }
        } else {
            let ok = matches!(le2, Outcome::OutOfScope { .. })
                && matches!(eq2, Outcome::OutOfScope { .. });
            t.scope.record(ok, || {
                format!("{}: le2 {}, eq2 {}", label(), le2.label(), eq2.label())
            });
        }
    }

    if suite.monotonicity && u.connected {
        let holds = monotonicity_hypothesis(&d, &u.cycles, &exps);
        let rho = radius_of(&d);
        let mut any_not_lower = false;
        let mut smaller: Vec<(String, MixedGraph)> = (0..d.n())
            .map(|v| (format!("vertex {v}"), d.delete_vertex(v).expect("vertex").0))
            .collect();
        smaller.extend(d.edges().iter().map(|e| {
            (
                format!("edge {}-{}", e.u, e.v),
                d.delete_edge(e.u, e.v).expect("edge"),
            )
        }));
        for (what, s) in smaller {
            let r = radius_of(&s);
            let lower = strictly_larger(rho, r, &phi, &charpoly_leverrier(&s));
            if holds {
                t.monotone
                    .record(lower, || format!("{} minus {what}: {rho} vs {r}", label()));
            }
            any_not_lower |= !lower;
        }
        if !holds {
            t.outside_hypothesis += 1;
            t.non_decreasing += usize::from(any_not_lower);
        }
    }
}

/// Sign-class vector of every cycle.
fn class_vector(steps: &[CycleSteps], kinds: &[EdgeKind]) -> Vec<SignClass> {
    steps.iter().map(|s| s.sign(kinds).class()).collect()
}

/// All orientations of `g` grouped by the sign class (positive, negative,
/// imaginary) of every cycle: each group must share one exact
/// characteristic polynomial.
pub fn check_sign_vector_determinism(g: &MixedGraph) -> Result<CheckRecord, VerifyError> {
    let u = g.underlying();
    if u.edge_count() > MAX_ALL_EDGES {
        return Err(VerifyError::TooManyEdges {
            edges: u.edge_count(),
            limit: MAX_ALL_EDGES,
        });
    }
    let steps: Vec<CycleSteps> = enumerate_cycles(&u)
        .iter()
        .map(|c| CycleSteps::new(&u, c).expect("cycle"))
        .collect();
    let mut seen: HashMap<Vec<SignClass>, IntPolynomial> = HashMap::new();
    let mut tally = Tally::new(
        "sign_vector_determinism",
        format!("underlying {}", u.compact()),
        "orientations with equal sign-class vectors share Φ",
    );
    for kinds in AllKinds::new(u.edge_count()) {
        let phi = charpoly_leverrier(&u.with_kinds(&kinds));
        let key = class_vector(&steps, &kinds);
        match seen.get(&key) {
            Some(p) => tally.record(*p == phi, || {
                format!("{}: {phi} vs {p}", u.with_kinds(&kinds).compact())
            }),
            None => {
                tally.record(true, String::new);
                seen.insert(key, phi);
            }
        }
    }
    tally.note(format!("{} sign-class vectors", seen.len()));
    Ok(tally.finish())
}

/// Random orientations of `g` compared with the sign-vector representative
/// of the same fundamental-cycle exponents: same exponent on every cycle and
/// the same characteristic polynomial.
pub fn check_representatives_sampled(
    g: &MixedGraph,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Result<CheckRecord, VerifyError> {
    let u = g.underlying();
    let reps = sign_vector_representatives(&u)?;
    let fundamental = fundamental_cycles(&u);
    let steps: Vec<CycleSteps> = enumerate_cycles(&u)
        .iter()
        .map(|c| CycleSteps::new(&u, c).expect("cycle"))
        .collect();
    let mut tally = Tally::new(
        "sign_representatives",
        format!("underlying {}", u.compact()),
        "a random orientation matches its representative's cycle signs and Φ",
    );
    for _ in 0..samples {
        let kinds: Vec<EdgeKind> = (0..u.edge_count())
            .map(|_| EdgeKind::ALL[rng.gen_range(0..3)])
            .collect();
        let state = sign_state(&fundamental, &kinds);
        let Some(rep) = reps.get(&state) else {
            tally.record(false, || {
                format!("{}: no representative", u.with_kinds(&kinds).compact())
            });
            continue;
        };
        let same_signs = steps.iter().all(|s| s.exponent(&kinds) == s.exponent(rep));
        let same_phi =
            charpoly_leverrier(&u.with_kinds(&kinds)) == charpoly_leverrier(&u.with_kinds(rep));
        tally.record(same_signs && same_phi, || {
            format!(
                "{} vs {}",
                u.with_kinds(&kinds).compact(),
                u.with_kinds(rep).compact()
            )
        });
    }
    tally.note(format!("{} representatives", reps.len()));
    Ok(tally.finish())
}

/// Runs the selected checks over every orientation (in the scope's mode) of
/// every graph in scope, in parallel over underlying graphs.
pub fn run_suite(scope: &EnumerationScope, suite: &Suite) -> Result<Report, VerifyError> {
    let start = Instant::now();
    let graphs = enumerate_underlying(scope)?;
    for g in &graphs {
        match scope.orientation_mode {
            OrientationMode::All if g.edge_count() > MAX_ALL_EDGES => {
                return Err(VerifyError::TooManyEdges {
                    edges: g.edge_count(),
                    limit: MAX_ALL_EDGES,
                })
            }
            OrientationMode::OnePerSignVector if cyclomatic_number(g) > MAX_SIGN_CYCLOMATIC => {
                return Err(VerifyError::TooManyCycles {
                    cyclomatic: cyclomatic_number(g),
                    limit: MAX_SIGN_CYCLOMATIC,
                })
            }
            _ => {}
        }
    }
    let parts: Vec<Result<Report, VerifyError>> = graphs
        .par_iter()
        .map(|g| run_on_underlying(g, scope.orientation_mode, suite))
        .collect();
    let mut report = Report::new();
    for part in parts {
        report.merge(part?);
    }
    report.scope = Some(scope.clone());
    report.elapsed_seconds = start.elapsed().as_secs_f64();
    Ok(report)
}

/// The selected checks over all orientations of one underlying graph.
pub fn run_on_underlying(
    g: &MixedGraph,
    mode: OrientationMode,
    suite: &Suite,
) -> Result<Report, VerifyError> {
    let u = Underlying::new(g);
    let mut tallies = Tallies::new(&u.name);
    let mut cache = RadiusCache::default();
    for kinds in orientation_kinds(&u.g, mode)? {
        check_orientation(&u, &kinds, suite, &mut tallies, &mut cache);
    }
    let mut report = Report::new();
    tallies.finish(suite, &mut report);
    if suite.sign_determinism && mode == OrientationMode::All && u.g.edge_count() <= 11 {
        report.push(check_sign_vector_determinism(&u.g)?);
    }
    Ok(report)
}

/// Classifier verdicts against exact radius decisions over the scope.
pub fn run_cross_check(scope: &EnumerationScope) -> Result<Report, VerifyError> {
    run_suite(
        scope,
        &Suite {
            classification: true,
            ..Suite::NOTHING
        },
    )
}

/// Pendant lemma and unicyclic lemma over the scope.
///
/// Pendant: for each connected orientation `N` (at most `per_graph` per
/// underlying graph) and each vertex `u` on which some eigenvector for `±ρ(N)`
/// is nonzero, attaching a pendant vertex at `u` raises the radius.
/// Unicyclic: every unicyclic orientation other than a bare cycle whose cycle
/// alone has `ρ = 2` has `ρ > 2`.
pub fn check_pendant_and_unicyclic(
    scope: &EnumerationScope,
    per_graph: usize,
) -> Result<Report, VerifyError> {
    let start = Instant::now();
    let graphs = enumerate_underlying(scope)?;
    let parts: Vec<Result<Report, VerifyError>> = graphs
        .par_iter()
        .map(|g| {
            let mut report = Report::new();
            if !g.is_connected() {
                return Ok(report);
            }
            let name = format!("underlying {}", g.compact());
            let mut pendant = Tally::new(
                "pendant_lemma",
                name.clone(),
                "ρ(N + pendant at u) > ρ(N) when x_u ≠ 0",
            );
            let mut unicyclic =
                Tally::new("unicyclic_lemma", name, "ρ(C) = 2 and D ≠ C ⇒ ρ(D) > 2");
            let all: Vec<Vec<EdgeKind>> = orientation_kinds(g, scope.orientation_mode)?.collect();
            let stride = (all.len() / per_graph.max(1)).max(1);
            for kinds in all.iter().step_by(stride).take(per_graph.max(1)) {
                let d = g.with_kinds(kinds);
                let (rho, weights) = extremal_vertex_weights(&d, 1e-9);
                let phi = charpoly_leverrier(&d);
                for (u, w) in weights.iter().enumerate() {
                    if w.sqrt() <= 1e-6 {
                        continue;
                    }
                    for kind in EdgeKind::ALL {
                        let m = d.with_pendant(u).expect("vertex exists");
                        let mut mk = m.kinds();
                        let last = m.edge_index(u, d.n()).expect("pendant edge");
                        mk[last] = kind;
                        let m = m.with_kinds(&mk);
                        let r = radius_of(&m);
                        let pass = strictly_larger(r, rho, &charpoly_leverrier(&m), &phi);
                        pendant.record(pass, || format!("{} at {u}: {rho} vs {r}", d.compact()));
                    }
                }
            }
            if g.edge_count() == g.n() && !g.is_cycle_graph() {
                let cycle = enumerate_cycles(g).remove(0);
                for kinds in AllKinds::new(g.edge_count()).take(
                    if scope.orientation_mode == OrientationMode::All {
                        usize::MAX
                    } else {
                        per_graph.max(1)
                    },
                ) {
                    let d = g.with_kinds(&kinds);
                    let (c, _) = d
                        .induced_subgraph(cycle.vertices())
                        .expect("cycle vertices");
                    let mut cache = RadiusCache::default();
                    if cache.relation(&charpoly_leverrier(&c)) == RadiusRelation::Exactly {
                        let rel = cache.relation(&charpoly_leverrier(&d));
                        unicyclic.record(rel == RadiusRelation::Above, || {
                            format!("{}: {rel}", d.compact())
                        });
                    }
                }
            }
            for t in [pendant, unicyclic] {
                if t.cases > 0 {
                    report.push(t.finish());
                }
            }
            Ok(report)
        })
        .collect();
    let mut report = Report::new();
    for part in parts {
        report.merge(part?);
    }
    report.scope = Some(scope.clone());
    report.elapsed_seconds = start.elapsed().as_secs_f64();
    Ok(report)
}

/// Over all `3^n` orientations of `C_n`, the radius is exactly 2 precisely
/// for positive cycles and for negative cycles of odd length.
pub fn check_cycle_characterization(n: usize) -> CheckRecord {
    let g = MixedGraph::undirected(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle");
    let steps = CycleSteps::new(&g, &enumerate_cycles(&g)[0]).expect("cycle");
    let mut cache = RadiusCache::default();
    let mut tally = Tally::new(
        "cycle_characterization",
        format!("C{n}"),
        "ρ = 2 ⇔ positive, or negative with n odd",
    );
    for kinds in AllKinds::new(n) {
        let d = g.with_kinds(&kinds);
        let class = steps.sign(&kinds).class();
        let want = class == SignClass::Positive || (class == SignClass::Negative && n % 2 == 1);
        let rel = cache.relation(&charpoly_leverrier(&d));
        tally.record((rel == RadiusRelation::Exactly) == want, || {
            format!("{}: {class:?} {rel}", d.compact())
        });
    }
    tally.finish()
}

/// Everything: the full suite over the scope, the pendant and unicyclic
/// lemmas, and the cycle characterization up to `max(max_n, 3)`.
pub fn run_verification(scope: &EnumerationScope) -> Result<Report, VerifyError> {
    let start = Instant::now();
    let mut report = run_suite(scope, &Suite::EVERYTHING)?;
    report.merge(check_pendant_and_unicyclic(scope, 64)?);
    for n in 3..=scope.max_n.max(3) {
        report.push(check_cycle_characterization(n));
    }
    report.scope = Some(scope.clone());
    report.elapsed_seconds = start.elapsed().as_secs_f64();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn scope(max_n: usize) -> EnumerationScope {
        EnumerationScope::new(max_n)
    }

    #[test]
    fn underlying_counts() {
        assert_eq!(enumerate_underlying(&scope(1)).unwrap().len(), 1);
        let three: Vec<MixedGraph> = enumerate_underlying(&scope(3))
            .unwrap()
            .into_iter()
            .filter(|g| g.n() == 3)
            .collect();
        assert_eq!(three.len(), 2);
        let mut s = scope(4);
        s.c4free_only = true;
        let four: Vec<MixedGraph> = enumerate_underlying(&s)
            .unwrap()
            .into_iter()
            .filter(|g| g.n() == 4)
            .collect();
        // P4, K_{1,3}, the paw
        assert_eq!(four.len(), 3);
        assert!(enumerate_underlying(&scope(11)).is_err());
        assert!(enumerate_underlying(&scope(0)).is_err());
    }

    #[test]
    fn orientation_counts() {
        let k2 = MixedGraph::undirected(2, [(0, 1)]).unwrap();
        assert_eq!(
            enumerate_orientations(&k2, OrientationMode::All)
                .unwrap()
                .count(),
            3
        );
        let k3 = MixedGraph::undirected(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(
            enumerate_orientations(&k3, OrientationMode::All)
                .unwrap()
                .count(),
            27
        );
        // triangle exponents: every value mod 4 is reachable
        assert_eq!(
            enumerate_orientations(&k3, OrientationMode::OnePerSignVector)
                .unwrap()
                .count(),
            4
        );
        let p3 = MixedGraph::undirected(3, [(0, 1), (1, 2)]).unwrap();
        let polys: Vec<IntPolynomial> = enumerate_orientations(&p3, OrientationMode::All)
            .unwrap()
            .map(|d| charpoly_leverrier(&d))
            .collect();
        assert_eq!(polys.len(), 9);
        assert!(polys.iter().all(|p| *p == polys[0]));
        assert_eq!(
            enumerate_orientations(&p3, OrientationMode::OnePerSignVector)
                .unwrap()
                .count(),
            1
        );
    }

    #[test]
    fn representatives_are_least_and_complete() {
        let k4 =
            MixedGraph::undirected(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let reps = sign_vector_representatives(&k4).unwrap();
        let fundamental = fundamental_cycles(&k4);
        let mut least: HashMap<u64, Vec<EdgeKind>> = HashMap::new();
        for kinds in AllKinds::new(6) {
            least
                .entry(sign_state(&fundamental, &kinds))
                .or_insert(kinds);
        }
        assert_eq!(reps, least);
        assert_eq!(reps.len(), 64);
    }

    #[test]
    fn fixture_deletion_identities() {
        let d1: MixedGraph = "v 4\n0 -- 1\n0 -- 3\n1 -- 3\n1 -> 2\n2 -> 3"
            .parse()
            .unwrap();
        let r = check_deletion_identities(&d1);
        assert_eq!(r.summary.total, 9);
        assert!(r.passed());
    }

    #[test]
    fn monotonicity_examples() {
        let p5 = MixedGraph::undirected(5, (0..4).map(|i| (i, i + 1))).unwrap();
        let r = check_monotonicity(&p5);
        assert_eq!(r.summary.total, 9);
        assert!(r.passed());
        let d2: MixedGraph = "v 4\n3 -> 0\n0 -- 1\n2 -> 3\n0 -> 2\n2 -- 1\n3 -- 1"
            .parse()
            .unwrap();
        let r = check_monotonicity(&d2);
        assert_eq!(r.summary.total, 0);
        assert!(r
            .checks
            .iter()
            .any(|c| c.instance.ends_with("edge 0-2") && c.observed.contains("= 2.000000")));
    }

    #[test]
    fn small_full_run_passes() {
        let r = run_verification(&scope(4)).unwrap();
        assert!(r.passed(), "{:#?}", r.failures().collect::<Vec<_>>());
        assert!(r.summary.total > 0);
    }

    #[test]
    fn sampled_representatives() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let k4 =
            MixedGraph::undirected(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let rec = check_representatives_sampled(&k4, 200, &mut rng).unwrap();
        assert!(rec.pass && rec.cases == 200);
    }

    #[test]
    fn report_merge_and_json() {
        let mut a = Report::new();
        let mut t = Tally::new("x", "i", "e");
        t.record(true, String::new);
        t.record(false, || "bad".into());
        a.push(t.finish());
        assert_eq!(
            a.summary,
            Summary {
                total: 2,
                passed: 1,
                failed: 1
            }
        );
        assert!(!a.passed());
        let mut b = Report::new();
        b.merge(a.clone());
        assert_eq!(b.summary.failed, 1);
        let json = serde_json::to_value(&b).unwrap();
        assert_eq!(json["summary"]["total"], 2);
        assert_eq!(json["checks"][0]["failures"][0], "bad");
    }
}
