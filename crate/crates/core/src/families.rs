//! Named graph families and orientations with prescribed cycle signs.
//!
//! Vertex numbering is fixed per family so that fixtures stay stable:
//!
//! - `P_n`: the path `0 - 1 - … - n-1`.
//! - `C_n`: the cycle `0 - 1 - … - n-1 - 0`.
//! - `K_{1,m}`: center `0`, leaves `1..=m`.
//! - `S(n_1, …, n_k)`: center `0`, then each arm of `n_i` vertices in turn,
//!   numbered outward from the center.
//! - `Y(r, s, t)`: the path `P_{r+s+t-1}` on `0..L`, then a pendant at index
//!   `r-1` (vertex `L`) and one at index `r+s-1` (vertex `L+1`).
//! - `D(r, s, t)`: `C_r` on `0..r`, `C_s` on `r..r+s`, and a path with `t`
//!   vertices from vertex `0` to vertex `r` whose internal vertices follow.
//! - `θ(r, s, t)`: end vertices `0` and `r-1` joined by paths with `r`, `s`
//!   and `t` vertices. The first path is `0..r`; the internal vertices of the
//!   second run from `r-1` back towards `0`, those of the third from `0`
//!   towards `r-1`.
//! - `C_n(k_1, …, k_n)`: `C_n` on `0..n`, then for each `i` in order a path of
//!   `k_i` new vertices hanging from cycle vertex `i-1`, numbered outward.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{EdgeKind, MixedGraph};
use crate::structure::{enumerate_cycles, Cycle, CycleSteps, SignClass};

/// Orientation search refuses graphs with more edges than this.
pub const MAX_ORIENTATION_EDGES: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid family parameters: {0}")]
    Invalid(String),
    #[error("cannot parse family {text:?}: {message}")]
    Parse { text: String, message: String },
    #[error(
        "no orientation realizes the requested signs; cycle {cycle} cannot be made {target:?}"
    )]
    Unrealizable { cycle: Cycle, target: SignClass },
    #[error("sign assignment does not match the cycles of the graph")]
    CycleMismatch,
    #[error("graph must be undirected")]
    NotUndirected,
    #[error("{edges} edges exceeds the orientation limit of {limit}")]
    TooManyEdges { edges: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    StarLike(Vec<usize>),
    Y(usize, usize, usize),
    Dumbbell(usize, usize, usize),
    Theta(usize, usize, usize),
    CycleWithPaths(usize, Vec<usize>),
    Star(usize),
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), FamilyError> {
        let bad = |m: String| Err(FamilyError::Invalid(m));
        match self {
            FamilySpec::Path(n) if *n == 0 => bad("P_n needs n >= 1".into()),
            FamilySpec::Cycle(n) if *n < 3 => bad(format!("C_{n} needs n >= 3")),
            FamilySpec::StarLike(arms) if arms.is_empty() || arms.contains(&0) => {
                bad("S(n_1, ..., n_k) needs k >= 1 and every n_i >= 1".into())
            }
            FamilySpec::Y(r, _, t) if *r < 2 || *t < 2 => {
                bad("Y(r, s, t) needs r >= 2 and t >= 2".into())
            }
            FamilySpec::Dumbbell(r, s, t) if *r < 3 || *s < 3 || *t < 2 => {
                bad("D(r, s, t) needs r, s >= 3 and t >= 2".into())
            }
            FamilySpec::Theta(r, s, t) => {
                let twos = [r, s, t].iter().filter(|&&&x| x == 2).count();
                if [r, s, t].iter().any(|&&x| x < 2) || twos > 1 {
                    bad("theta(r, s, t) needs r, s, t >= 2 with at most one equal to 2".into())
                } else {
                    Ok(())
                }
            }
            FamilySpec::CycleWithPaths(n, ks) if *n < 3 || ks.len() > *n => {
                bad("C_n(k_1, ..., k_m) needs n >= 3 and m <= n".into())
            }
            FamilySpec::Star(m) if *m == 0 => bad("K_{1,m} needs m >= 1".into()),
            _ => Ok(()),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) => *n,
            FamilySpec::StarLike(arms) => 1 + arms.iter().sum::<usize>(),
            FamilySpec::Y(r, s, t) => r + s + t + 1,
            FamilySpec::Dumbbell(r, s, t) => r + s + t - 2,
            FamilySpec::Theta(r, s, t) => r + s + t - 4,
            FamilySpec::CycleWithPaths(n, ks) => n + ks.iter().sum::<usize>(),
            FamilySpec::Star(m) => m + 1,
        }
    }

    /// The all-undirected member with the documented numbering.
    pub fn generate(&self) -> Result<MixedGraph, FamilyError> {
        self.validate()?;
        let n = self.vertex_count();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        let path = |pairs: &mut Vec<(usize, usize)>, vs: &[usize]| {
            pairs.extend(vs.windows(2).map(|w| (w[0], w[1])));
        };
        match self {
            FamilySpec::Path(n) => path(&mut pairs, &(0..*n).collect::<Vec<_>>()),
            FamilySpec::Cycle(n) => {
                path(&mut pairs, &(0..*n).collect::<Vec<_>>());
                pairs.push((n - 1, 0));
            }
            FamilySpec::StarLike(arms) => {
                let mut next = 1;
                for &len in arms {
                    let mut arm = vec![0];
                    arm.extend(next..next + len);
                    path(&mut pairs, &arm);
                    next += len;
                }
            }
            FamilySpec::Y(r, s, _) => {
                let len = n - 2;
                path(&mut pairs, &(0..len).collect::<Vec<_>>());
                pairs.push((r - 1, len));
                pairs.push((r + s - 1, len + 1));
            }
            FamilySpec::Dumbbell(r, s, t) => {
                path(&mut pairs, &(0..*r).collect::<Vec<_>>());
                pairs.push((r - 1, 0));
                path(&mut pairs, &(*r..r + s).collect::<Vec<_>>());
                pairs.push((r + s - 1, *r));
                let mut bridge = vec![0];
                bridge.extend(r + s..r + s + t - 2);
                bridge.push(*r);
                path(&mut pairs, &bridge);
            }
            FamilySpec::Theta(r, s, t) => {
                let b = r - 1;
                path(&mut pairs, &(0..*r).collect::<Vec<_>>());
                let mut second = vec![b];
                second.extend(*r..r + s - 2);
                second.push(0);
                path(&mut pairs, &second);
                let mut third = vec![0];
                third.extend(r + s - 2..r + s + t - 4);
                third.push(b);
                path(&mut pairs, &third);
            }
            FamilySpec::CycleWithPaths(c, ks) => {
                path(&mut pairs, &(0..*c).collect::<Vec<_>>());
                pairs.push((c - 1, 0));
                let mut next = *c;
                for (i, &k) in ks.iter().enumerate() {
                    let mut hanging = vec![i];
                    hanging.extend(next..next + k);
                    path(&mut pairs, &hanging);
                    next += k;
                }
            }
            FamilySpec::Star(m) => pairs.extend((1..=*m).map(|v| (0, v))),
        }
        MixedGraph::undirected(n, pairs).map_err(|e| FamilyError::Invalid(e.to_string()))
    }
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "P{n}"),
            FamilySpec::Cycle(n) => write!(f, "C{n}"),
            FamilySpec::StarLike(arms) => write!(f, "S({})", join(arms)),
            FamilySpec::Y(r, s, t) => write!(f, "Y({r},{s},{t})"),
            FamilySpec::Dumbbell(r, s, t) => write!(f, "D({r},{s},{t})"),
            FamilySpec::Theta(r, s, t) => write!(f, "theta({r},{s},{t})"),
            FamilySpec::CycleWithPaths(n, ks) => write!(f, "C{n}({})", join(ks)),
            FamilySpec::Star(m) => write!(f, "K1,{m}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    /// Accepts `P7`, `C5`, `C6(1,0,1,0,1)`, `S(1,3,3)`, `Y(2,4,2)`,
    /// `D(3,4,2)`, `theta(3,5,5)` (or `θ(3,5,5)`) and `K1,4`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let fail = |message: &str| FamilyError::Parse {
            text: text.to_string(),
            message: message.to_string(),
        };
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let number = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| fail(&format!("expected a number, found {s:?}")))
        };
        let list = |s: &str| -> Result<Vec<usize>, FamilyError> {
            let inner = s
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| fail("expected a parenthesised parameter list"))?;
            if inner.is_empty() {
                return Ok(Vec::new());
            }
            inner.split(',').map(number).collect()
        };
        let triple = |s: &str| -> Result<(usize, usize, usize), FamilyError> {
            match list(s)?.as_slice() {
                &[a, b, c] => Ok((a, b, c)),
                _ => Err(fail("expected three parameters")),
            }
        };

        let spec = if let Some(rest) = compact.strip_prefix("K1,") {
            FamilySpec::Star(number(rest)?)
        } else if let Some(rest) = compact
            .strip_prefix("theta")
            .or_else(|| compact.strip_prefix('θ'))
        {
            let (r, s, t) = triple(rest)?;
            FamilySpec::Theta(r, s, t)
        } else if let Some(rest) = compact.strip_prefix('S') {
            FamilySpec::StarLike(list(rest)?)
        } else if let Some(rest) = compact.strip_prefix('Y') {
            let (r, s, t) = triple(rest)?;
            FamilySpec::Y(r, s, t)
        } else if let Some(rest) = compact.strip_prefix('D') {
            let (r, s, t) = triple(rest)?;
            FamilySpec::Dumbbell(r, s, t)
        } else if let Some(rest) = compact.strip_prefix('P') {
            FamilySpec::Path(number(rest)?)
        } else if let Some(rest) = compact.strip_prefix('C') {
            match rest.find('(') {
                Some(open) => {
                    FamilySpec::CycleWithPaths(number(&rest[..open])?, list(&rest[open..])?)
                }
                None => FamilySpec::Cycle(number(rest)?),
            }
        } else {
            return Err(fail("unknown family"));
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Target sign class for every cycle of a graph, keyed by canonical cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignAssignment {
    targets: Vec<(Cycle, SignClass)>,
}

impl SignAssignment {
    /// Checks that the keys are exactly the cycles of `g`.
    pub fn new(g: &MixedGraph, mut targets: Vec<(Cycle, SignClass)>) -> Result<Self, FamilyError> {
        let cycles = enumerate_cycles(g);
        targets.sort_by(|a, b| (a.0.len(), a.0.vertices()).cmp(&(b.0.len(), b.0.vertices())));
        if targets.len() != cycles.len() || targets.iter().zip(&cycles).any(|((c, _), d)| c != d) {
            return Err(FamilyError::CycleMismatch);
        }
        Ok(SignAssignment { targets })
    }

    /// Every cycle of `g` gets `class`.
    pub fn uniform(g: &MixedGraph, class: SignClass) -> Self {
        SignAssignment {
            targets: enumerate_cycles(g)
                .into_iter()
                .map(|c| (c, class))
                .collect(),
        }
    }

    /// Every cycle of `g` gets `choose(cycle)`.
    pub fn from_fn(g: &MixedGraph, mut choose: impl FnMut(&Cycle) -> SignClass) -> Self {
        SignAssignment {
            targets: enumerate_cycles(g)
                .into_iter()
                .map(|c| {
                    let class = choose(&c);
                    (c, class)
                })
                .collect(),
        }
    }

    pub fn targets(&self) -> &[(Cycle, SignClass)] {
        &self.targets
    }

    pub fn target(&self, c: &Cycle) -> Option<SignClass> {
        self.targets.iter().find(|(d, _)| d == c).map(|(_, s)| *s)
    }
}

/// Depth-first search over kind vectors in lexicographic order, checking each
/// cycle as soon as its last edge is fixed.
struct OrientationSearch<'a> {
    edge_count: usize,
    // constraints grouped by the last edge index they depend on
    by_last_edge: Vec<Vec<(&'a CycleSteps, SignClass)>>,
}

impl<'a> OrientationSearch<'a> {
    fn new(edge_count: usize, constraints: &'a [(CycleSteps, SignClass)]) -> Self {
        let mut by_last_edge = vec![Vec::new(); edge_count];
        for (steps, class) in constraints {
            by_last_edge[steps.last_edge()].push((steps, *class));
        }
        OrientationSearch {
            edge_count,
            by_last_edge,
        }
    }

    /// Calls `visit` on every satisfying kind vector, in lexicographic order,
    /// until it returns `false`.
    fn run(&self, visit: &mut dyn FnMut(&[EdgeKind]) -> bool) {
        let mut kinds = vec![EdgeKind::Undirected; self.edge_count];
        self.extend(0, &mut kinds, visit);
    }

    fn extend(
        &self,
        e: usize,
        kinds: &mut Vec<EdgeKind>,
        visit: &mut dyn FnMut(&[EdgeKind]) -> bool,
    ) -> bool {
        if e == self.edge_count {
            return visit(kinds);
        }
        for kind in EdgeKind::ALL {
            kinds[e] = kind;
            let ok = self.by_last_edge[e]
                .iter()
                .all(|(steps, class)| steps.sign(kinds).class() == *class);
            if ok && !self.extend(e + 1, kinds, visit) {
                return false;
            }
        }
        true
    }
}

fn check_orientable(g: &MixedGraph) -> Result<(), FamilyError> {
    if !g.is_undirected() {
        return Err(FamilyError::NotUndirected);
    }
    if g.edge_count() > MAX_ORIENTATION_EDGES {
        return Err(FamilyError::TooManyEdges {
            edges: g.edge_count(),
            limit: MAX_ORIENTATION_EDGES,
        });
    }
    Ok(())
}

fn constraints(g: &MixedGraph, targets: &[(Cycle, SignClass)]) -> Vec<(CycleSteps, SignClass)> {
    targets
        .iter()
        .map(|(c, class)| {
            (
                CycleSteps::new(g, c).expect("assignment keys are cycles of the graph"),
                *class,
            )
        })
        .collect()
}

fn first_realization(g: &MixedGraph, targets: &[(Cycle, SignClass)]) -> Option<MixedGraph> {
    let cs = constraints(g, targets);
    let mut found = None;
    OrientationSearch::new(g.edge_count(), &cs).run(&mut |kinds| {
        found = Some(g.with_kinds(kinds));
        false
    });
    found
}

/// The lexicographically least orientation of `g` (kinds compared edge by
/// edge, undirected < forward < backward) in which every cycle has its target
/// class. When none exists, reports the first cycle (in canonical cycle
/// order) whose constraint, together with those before it, cannot be met.
pub fn orient_with_signs(
    g: &MixedGraph,
    target: &SignAssignment,
) -> Result<MixedGraph, FamilyError> {
    check_orientable(g)?;
    if enumerate_cycles(g).len() != target.targets.len() {
        return Err(FamilyError::CycleMismatch);
    }
    if let Some(found) = first_realization(g, &target.targets) {
        return Ok(found);
    }
    for k in 1..=target.targets.len() {
        if first_realization(g, &target.targets[..k]).is_none() {
            let (cycle, class) = target.targets[k - 1].clone();
            return Err(FamilyError::Unrealizable {
                cycle,
                target: class,
            });
        }
    }
    unreachable!("the full assignment failed, so some prefix fails")
}

/// Every orientation of `g` realizing `target`, in lexicographic order.
pub fn enumerate_realizations(
    g: &MixedGraph,
    target: &SignAssignment,
) -> Result<Vec<MixedGraph>, FamilyError> {
    check_orientable(g)?;
    if enumerate_cycles(g).len() != target.targets.len() {
        return Err(FamilyError::CycleMismatch);
    }
    let cs = constraints(g, &target.targets);
    let mut out = Vec::new();
    OrientationSearch::new(g.edge_count(), &cs).run(&mut |kinds| {
        out.push(g.with_kinds(kinds));
        true
    });
    Ok(out)
}

/// `G⁺`, `G⁻` or `G*`: every cycle positive, negative or imaginary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MemberSigns {
    Plus,
    Minus,
    Star,
}

impl MemberSigns {
    pub fn class(self) -> SignClass {
        match self {
            MemberSigns::Plus => SignClass::Positive,
            MemberSigns::Minus => SignClass::Negative,
            MemberSigns::Star => SignClass::Imaginary,
        }
    }
}

impl FromStr for MemberSigns {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plus" | "+" => Ok(MemberSigns::Plus),
            "minus" | "-" => Ok(MemberSigns::Minus),
            "star" | "*" => Ok(MemberSigns::Star),
            _ => Err(FamilyError::Parse {
                text: s.to_string(),
                message: "expected plus, minus or star".into(),
            }),
        }
    }
}

/// All orientations of the family template whose cycles all lie in the
/// requested class. Empty when the class is not realizable.
pub fn enumerate_family_members(
    spec: &FamilySpec,
    signs: MemberSigns,
) -> Result<Vec<MixedGraph>, FamilyError> {
    let g = spec.generate()?;
    enumerate_realizations(&g, &SignAssignment::uniform(&g, signs.class()))
}

/// Lexicographically least member of the family with the given signs.
pub fn family_representative(
    spec: &FamilySpec,
    signs: MemberSigns,
) -> Result<MixedGraph, FamilyError> {
    let g = spec.generate()?;
    orient_with_signs(&g, &SignAssignment::uniform(&g, signs.class()))
}

/// Smith's undirected graphs of spectral radius exactly 2 on `n` vertices:
/// `C_n`, `Y(2, n-5, 2)` (with `Y(2,0,2) = K_{1,4}`), `S(2,2,2)`, `S(1,3,3)`
/// and `S(1,2,5)`.
pub fn smith_templates(n: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    if n >= 3 {
        out.push(FamilySpec::Cycle(n));
    }
    if n >= 5 {
        out.push(FamilySpec::Y(2, n - 5, 2));
    }
    match n {
        7 => out.push(FamilySpec::StarLike(vec![2, 2, 2])),
        8 => out.push(FamilySpec::StarLike(vec![1, 3, 3])),
        9 => out.push(FamilySpec::StarLike(vec![1, 2, 5])),
        _ => {}
    }
    out
}

pub fn smith_graphs(n: usize) -> Vec<MixedGraph> {
    smith_templates(n)
        .iter()
        .map(|s| s.generate().expect("Smith templates are valid"))
        .collect()
}
