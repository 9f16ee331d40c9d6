//! The graph families behind the antichain results — K_{2,r}, D_r, stars,
//! antiholes, W_{p,q} and the two I classes — together with the exact
//! comparability laws the lemmas mandate for them, the down-set explorer,
//! and the desk-scale verification of the premises of the
//! canonical-antichain obstruction.

use crate::graph::Graph;
use crate::iso::{canon_key, canon_key_colored, is_isomorphic, CanonKey};
use crate::search::{find_model_with, is_induced_minor, SearchConfig, SearchError};
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// One member of a named family. Parameter ranges follow the definitions:
/// K_{2,r} needs r >= 2, antiholes start at 6 vertices, W at p, q >= 3,
/// the I classes at i >= 3 and q >= 0, and D_r / K_{1,r} allow r >= 0
/// (D_0 = K_2, K_{1,0} = K_1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilySpec {
    K2r { r: usize },
    Dr { r: usize },
    Star { r: usize },
    Antihole { i: usize },
    W { p: usize, q: usize },
    I0 { i: usize, q: usize },
    I1 { i: usize, q: usize },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), FamilyError> {
        let ok = match *self {
            FamilySpec::K2r { r } => r >= 2,
            FamilySpec::Dr { .. } | FamilySpec::Star { .. } => true,
            FamilySpec::Antihole { i } => i >= 6,
            FamilySpec::W { p, q } => p >= 3 && q >= 3,
            FamilySpec::I0 { i, .. } | FamilySpec::I1 { i, .. } => i >= 3,
        };
        if ok {
            Ok(())
        } else {
            Err(FamilyError::ParamOutOfRange { spec: *self })
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            FamilySpec::K2r { r } => r + 2,
            FamilySpec::Dr { r } => r + 2,
            FamilySpec::Star { r } => r + 1,
            FamilySpec::Antihole { i } => i,
            FamilySpec::W { p, q } => p + q + 4,
            FamilySpec::I0 { i, q } => i + q + 4,
            FamilySpec::I1 { i, q } => i + q + 3,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::K2r { r } => write!(f, "K2R:{r}"),
            FamilySpec::Dr { r } => write!(f, "DR:{r}"),
            FamilySpec::Star { r } => write!(f, "STAR:{r}"),
            FamilySpec::Antihole { i } => write!(f, "ANTIHOLE:{i}"),
            FamilySpec::W { p, q } => write!(f, "W:{p},{q}"),
            FamilySpec::I0 { i, q } => write!(f, "I0:{i},{q}"),
            FamilySpec::I1 { i, q } => write!(f, "I1:{i},{q}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    /// Accepts the CLI syntax: `K2R:4`, `W:3,5`, `ANTIHOLE:7`, `I0:3,2`.
    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let bad = || FamilyError::Unparseable { input: String::from(s) };
        let (name, params) = s.split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> =
            params.split(',').map(|p| p.trim().parse::<usize>()).collect::<Result<_, _>>().map_err(|_| bad())?;
        let one = || if nums.len() == 1 { Ok(nums[0]) } else { Err(bad()) };
        let two = || if nums.len() == 2 { Ok((nums[0], nums[1])) } else { Err(bad()) };
        let spec = match name.to_ascii_uppercase().as_str() {
            "K2R" => FamilySpec::K2r { r: one()? },
            "DR" => FamilySpec::Dr { r: one()? },
            "STAR" => FamilySpec::Star { r: one()? },
            "ANTIHOLE" => FamilySpec::Antihole { i: one()? },
            "W" => {
                let (p, q) = two()?;
                FamilySpec::W { p, q }
            }
            "I0" => {
                let (i, q) = two()?;
                FamilySpec::I0 { i, q }
            }
            "I1" => {
                let (i, q) = two()?;
                FamilySpec::I1 { i, q }
            }
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Vertex roles carried by generated family members, so tests and the
/// inner-edge closure can target exactly the edges the lemmas quantify
/// over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    Pole,
    Semipole,
    Inner,
    Other,
}

impl Role {
    fn as_color(self) -> u32 {
        match self {
            Role::Pole => 0,
            Role::Semipole => 1,
            Role::Inner => 2,
            Role::Other => 3,
        }
    }
}

/// A generated family member with its role annotations.
#[derive(Clone, Debug)]
pub struct FamilyGraph {
    pub spec: FamilySpec,
    pub graph: Graph,
    pub roles: Vec<Role>,
}

impl FamilyGraph {
    pub fn poles(&self) -> Vec<usize> {
        self.role_vertices(Role::Pole)
    }

    pub fn semipoles(&self) -> Vec<usize> {
        self.role_vertices(Role::Semipole)
    }

    pub fn inner_vertices(&self) -> Vec<usize> {
        self.role_vertices(Role::Inner)
    }

    fn role_vertices(&self, role: Role) -> Vec<usize> {
        (0..self.roles.len()).filter(|&v| self.roles[v] == role).collect()
    }

    /// Edges not incident with a pole.
    pub fn inner_edges(&self) -> Vec<(usize, usize)> {
        self.graph
            .edges()
            .into_iter()
            .filter(|&(u, v)| self.roles[u] != Role::Pole && self.roles[v] != Role::Pole)
            .collect()
    }
}

/// Builds the member named by `spec`, with deterministic labels.
pub fn make(spec: FamilySpec) -> Result<FamilyGraph, FamilyError> {
    spec.validate()?;
    let (graph, roles) = match spec {
        FamilySpec::K2r { r } => {
            let mut roles = vec![Role::Pole, Role::Pole];
            roles.extend(core::iter::repeat(Role::Other).take(r));
            (Graph::complete_bipartite(2, r), roles)
        }
        FamilySpec::Dr { r } => {
            let mut roles = vec![Role::Semipole, Role::Semipole];
            roles.extend(core::iter::repeat(Role::Other).take(r));
            (Graph::d_r(r), roles)
        }
        FamilySpec::Star { r } => {
            let mut roles = vec![Role::Semipole];
            roles.extend(core::iter::repeat(Role::Other).take(r));
            (Graph::star(r), roles)
        }
        FamilySpec::Antihole { i } => (Graph::cycle(i).complement(), vec![Role::Other; i]),
        FamilySpec::W { p, q } => {
            // poles 0, 1; the edgeless p part 2..p+2; semipoles p+2, p+3;
            // the q side of K_{2,q} after that
            let n = p + q + 4;
            let mut g = Graph::new(n);
            let mut roles = vec![Role::Other; n];
            roles[0] = Role::Pole;
            roles[1] = Role::Pole;
            roles[p + 2] = Role::Semipole;
            roles[p + 3] = Role::Semipole;
            for v in p + 4..n {
                roles[v] = Role::Inner;
            }
            for pole in [0, 1] {
                for v in 2..n {
                    g.add_edge(pole, v);
                }
            }
            for s in [p + 2, p + 3] {
                for z in p + 4..n {
                    g.add_edge(s, z);
                }
            }
            (g, roles)
        }
        FamilySpec::I0 { i, q } => {
            // like W but the middle is D_q: adjacent semipoles
            let n = i + q + 4;
            let mut g = Graph::new(n);
            let mut roles = vec![Role::Other; n];
            roles[0] = Role::Pole;
            roles[1] = Role::Pole;
            roles[i + 2] = Role::Semipole;
            roles[i + 3] = Role::Semipole;
            for v in i + 4..n {
                roles[v] = Role::Inner;
            }
            for pole in [0, 1] {
                for v in 2..n {
                    g.add_edge(pole, v);
                }
            }
            g.add_edge(i + 2, i + 3);
            for s in [i + 2, i + 3] {
                for z in i + 4..n {
                    g.add_edge(s, z);
                }
            }
            (g, roles)
        }
        FamilySpec::I1 { i, q } => {
            // the middle is the star K_{1,q}: one semipole center
            let n = i + q + 3;
            let mut g = Graph::new(n);
            let mut roles = vec![Role::Other; n];
            roles[0] = Role::Pole;
            roles[1] = Role::Pole;
            roles[i + 2] = Role::Semipole;
            for v in i + 3..n {
                roles[v] = Role::Inner;
            }
            for pole in [0, 1] {
                for v in 2..n {
                    g.add_edge(pole, v);
                }
            }
            for z in i + 3..n {
                g.add_edge(i + 2, z);
            }
            (g, roles)
        }
    };
    Ok(FamilyGraph { spec, graph, roles })
}

/// What a lemma says about an ordered pair of family members.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// A is a proper contraction of B.
    AContractionOfB,
    BContractionOfA,
    Equal,
    Incomparable,
    /// The pair is not decided by any of the implemented lemmas.
    Unknown,
}

impl Relation {
    fn flip(self) -> Relation {
        match self {
            Relation::AContractionOfB => Relation::BContractionOfA,
            Relation::BContractionOfA => Relation::AContractionOfB,
            other => other,
        }
    }
}

/// The lemma-mandated comparability of two family members, `Unknown` for
/// pairs no implemented lemma decides. Covered: both antichain laws
/// (K_{2,r} pairs and antihole pairs), the W identity law, the
/// K_{2,r}-into-W law (r = p + 1, stated for r >= 3), and the relations
/// inside and out of the D/star down-set of K_{2,r}.
pub fn predicted_relation(a: FamilySpec, b: FamilySpec) -> Relation {
    use FamilySpec::*;
    match (a, b) {
        (K2r { r }, K2r { r: r2 }) => {
            if r == r2 {
                Relation::Equal
            } else {
                Relation::Incomparable
            }
        }
        (Antihole { i }, Antihole { i: i2 }) => {
            if i == i2 {
                Relation::Equal
            } else {
                Relation::Incomparable
            }
        }
        (W { p, q }, W { p: p2, q: q2 }) => {
            if (p, q) == (p2, q2) {
                Relation::Equal
            } else {
                Relation::Incomparable
            }
        }
        (K2r { r }, W { p, .. }) => {
            if r < 3 {
                Relation::Unknown
            } else if r == p + 1 {
                Relation::AContractionOfB
            } else {
                Relation::Incomparable
            }
        }
        (Dr { r }, Dr { r: r2 }) => chain(r, r2),
        (Star { r }, Star { r: r2 }) => chain(r, r2),
        (Dr { r }, Star { r: s }) => {
            // D_0 = K_2 = K_{1,1}; stars descend from D_r via K_{1,r}; a
            // D_r with r >= 1 contains a triangle, so it never sits below
            // a star.
            if r == 0 && s == 1 {
                Relation::Equal
            } else if s <= r {
                Relation::BContractionOfA
            } else if r == 0 {
                Relation::AContractionOfB
            } else {
                Relation::Incomparable
            }
        }
        (Dr { r }, K2r { r: r2 }) => {
            if r < r2 {
                Relation::AContractionOfB
            } else {
                Relation::Incomparable
            }
        }
        (Star { r: s }, K2r { r: r2 }) => {
            // every proper contraction of K_{2,r} is D_{r-1} or below
            if s + 1 <= r2 {
                Relation::AContractionOfB
            } else {
                Relation::Incomparable
            }
        }
        (W { .. }, K2r { .. }) | (K2r { .. }, Dr { .. } | Star { .. }) | (Star { .. }, Dr { .. }) => {
            predicted_relation(b, a).flip()
        }
        _ => Relation::Unknown,
    }
}

fn chain(r: usize, r2: usize) -> Relation {
    match r.cmp(&r2) {
        core::cmp::Ordering::Equal => Relation::Equal,
        core::cmp::Ordering::Less => Relation::AContractionOfB,
        core::cmp::Ordering::Greater => Relation::BContractionOfA,
    }
}

/// One entry of a computed comparability matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparability {
    Equal,
    /// Row graph is a proper contraction of the column graph.
    Below,
    Above,
    Incomparable,
    /// At least one direction ran out of budget.
    Exhausted,
}

impl Comparability {
    pub fn agrees_with(self, predicted: Relation) -> bool {
        match predicted {
            Relation::AContractionOfB => self == Comparability::Below,
            Relation::BContractionOfA => self == Comparability::Above,
            Relation::Equal => self == Comparability::Equal,
            Relation::Incomparable => self == Comparability::Incomparable,
            Relation::Unknown => true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ComparabilityMatrix {
    pub entries: Vec<Vec<Comparability>>,
}

impl ComparabilityMatrix {
    /// Off-diagonal comparable or undecided entries; empty exactly when
    /// the graphs form an antichain (verified, not assumed).
    pub fn non_antichain_entries(&self) -> Vec<(usize, usize, Comparability)> {
        let mut out = Vec::new();
        for (i, row) in self.entries.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                if i < j && e != Comparability::Incomparable {
                    out.push((i, j, e));
                }
            }
        }
        out
    }
}

/// Pairwise comparability by search, both directions per unordered pair.
/// Entry (i, j) and entry (j, i) are always transpose-duals.
pub fn comparability_matrix(
    gs: &[Graph],
    cfg: &SearchConfig,
) -> Result<ComparabilityMatrix, SearchError> {
    let k = gs.len();
    let mut entries = vec![vec![Comparability::Equal; k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let entry = compare_pair(&gs[i], &gs[j], cfg)?;
            entries[i][j] = entry;
            entries[j][i] = match entry {
                Comparability::Below => Comparability::Above,
                Comparability::Above => Comparability::Below,
                other => other,
            };
        }
    }
    Ok(ComparabilityMatrix { entries })
}

/// Comparability of an ordered pair of connected graphs.
pub fn compare_pair(a: &Graph, b: &Graph, cfg: &SearchConfig) -> Result<Comparability, SearchError> {
    let fwd = find_model_with(a, b, cfg)?.outcome;
    let bwd = find_model_with(b, a, cfg)?.outcome;
    Ok(match (fwd.decided(), bwd.decided()) {
        (Some(true), Some(true)) => Comparability::Equal,
        (Some(true), Some(false)) => Comparability::Below,
        (Some(false), Some(true)) => Comparability::Above,
        (Some(false), Some(false)) => Comparability::Incomparable,
        _ => Comparability::Exhausted,
    })
}

/// Whether the gem embeds as induced minor; the forbidden pattern behind
/// the fundamental-antichain arguments.
pub fn contains_gem_induced_minor(g: &Graph) -> bool {
    is_induced_minor(&Graph::gem(), g)
}

/// Membership of `g` in the I classes over the fixed edgeless part size
/// `i`: isomorphic to I0(i, q) or I1(i, q) for some q. The only overlap,
/// I0(i, 0) = I1(i, 1), reports as I0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IClass {
    InI0 { q: usize },
    InI1 { q: usize },
    Neither,
}

pub fn classify_i(g: &Graph, i: usize) -> IClass {
    assert!(i >= 3, "the I classes are defined for i >= 3");
    let n = g.n();
    if n >= i + 4 {
        let q = n - i - 4;
        let candidate = make(FamilySpec::I0 { i, q }).expect("validated above");
        if is_isomorphic(g, &candidate.graph) {
            return IClass::InI0 { q };
        }
    }
    if n >= i + 3 {
        let q = n - i - 3;
        let candidate = make(FamilySpec::I1 { i, q }).expect("validated above");
        if is_isomorphic(g, &candidate.graph) {
            return IClass::InI1 { q };
        }
    }
    IClass::Neither
}

/// All proper contractions of `g` reachable within `max_steps` edge
/// contractions, one per isomorphism class, breadth-first and ordered by
/// canonical form within each level. `max_steps >= |E(g)|` yields the
/// entire down-set of `g`.
pub fn downset_members(g: &Graph, max_steps: usize) -> Vec<Graph> {
    let mut seen: BTreeSet<CanonKey> = BTreeSet::new();
    seen.insert(canon_key(g));
    let mut frontier: Vec<Graph> = vec![g.clone()];
    let mut out = Vec::new();
    for _ in 0..max_steps {
        if frontier.is_empty() {
            break;
        }
        let mut next: BTreeMap<CanonKey, Graph> = BTreeMap::new();
        for h in &frontier {
            for c in crate::search::one_step_contractions(h) {
                let key = canon_key(&c);
                if !seen.contains(&key) {
                    next.entry(key).or_insert(c);
                }
            }
        }
        frontier = Vec::new();
        for (key, h) in next {
            seen.insert(key);
            out.push(h.clone());
            frontier.push(h);
        }
    }
    out
}

/// Contraction of a role-labeled graph; the merged vertex keeps the
/// stronger role (inner edges always touch a semipole after the first
/// step, and never a pole by definition).
fn contract_labeled(g: &Graph, roles: &[Role], u: usize, v: usize) -> (Graph, Vec<Role>) {
    let contracted = g.contract_edge(u, v).expect("inner edge");
    let lo = u.min(v);
    let hi = u.max(v);
    let merged = if roles[u] == Role::Semipole || roles[v] == Role::Semipole {
        Role::Semipole
    } else {
        roles[lo]
    };
    let mut new_roles = Vec::with_capacity(roles.len() - 1);
    for (x, &r) in roles.iter().enumerate() {
        if x == hi {
            continue;
        }
        new_roles.push(if x == lo { merged } else { r });
    }
    (contracted, new_roles)
}

/// Closure of W(i, q) under inner-edge contractions: every reachable
/// state, with `true` iff it classified into I0 or I1.
pub fn inner_contraction_closure(i: usize, q: usize) -> Result<Vec<(Graph, IClass)>, FamilyError> {
    let start = make(FamilySpec::W { p: i, q })?;
    // colored canon key plus the color multiset, so states with the same
    // shape but different role counts stay distinct
    let state_key = |g: &Graph, roles: &[Role]| {
        let colors: Vec<u32> = roles.iter().map(|r| r.as_color()).collect();
        let key = canon_key_colored(g, &colors);
        let mut sorted = colors;
        sorted.sort_unstable();
        (key, sorted)
    };
    let mut seen = BTreeSet::new();
    seen.insert(state_key(&start.graph, &start.roles));
    let mut stack = vec![(start.graph, start.roles)];
    let mut out = Vec::new();
    while let Some((g, roles)) = stack.pop() {
        let inner: Vec<(usize, usize)> = g
            .edges()
            .into_iter()
            .filter(|&(u, v)| roles[u] != Role::Pole && roles[v] != Role::Pole)
            .collect();
        for (u, v) in inner {
            let (cg, croles) = contract_labeled(&g, &roles, u, v);
            let key = state_key(&cg, &croles);
            if !seen.insert(key) {
                continue;
            }
            out.push((cg.clone(), classify_i(&cg, i)));
            stack.push((cg, croles));
        }
    }
    Ok(out)
}

/// Inputs for the canonical-antichain premise check: `A_i = K_{2,i+1}`
/// against the rows `W_i = { W(i, q) }`.
#[derive(Clone, Debug)]
pub struct DingConfig {
    pub search: SearchConfig,
    /// Contraction depth for the down-set evidence; `None` explores the
    /// full down-set of every member.
    pub downset_steps: Option<usize>,
}

impl Default for DingConfig {
    fn default() -> Self {
        DingConfig { search: SearchConfig::default(), downset_steps: None }
    }
}

#[derive(Clone, Debug)]
pub struct DingPair {
    pub a: FamilySpec,
    pub b: FamilySpec,
    pub expected: Relation,
    pub computed: Comparability,
    pub ok: bool,
}

#[derive(Clone, Debug)]
pub struct DownsetGemCheck {
    pub member: FamilySpec,
    pub steps: usize,
    pub downset_size: usize,
    pub all_gem_free: bool,
}

#[derive(Clone, Debug)]
pub struct InnerClosureCheck {
    pub spec: FamilySpec,
    pub reachable: usize,
    pub all_classified: bool,
}

#[derive(Clone, Debug)]
pub struct DingReport {
    pub i_values: Vec<usize>,
    pub q_values: Vec<usize>,
    /// Premise (iii): all ordered-free pairs among {A_i} ∪ ⋃ W_i, decided
    /// by search. Expected: A_i below W(i, q), everything else
    /// incomparable.
    pub pairs: Vec<DingPair>,
    pub exhausted_pairs: usize,
    pub premise_iii_ok: bool,
    /// Bounded evidence for premises (i)/(ii): no down-set member
    /// contains the gem as induced minor.
    pub downset_checks: Vec<DownsetGemCheck>,
    /// Bounded evidence for (ii): inner-edge contractions of each W(i, q)
    /// stay inside I0 ∪ I1.
    pub inner_closure_checks: Vec<InnerClosureCheck>,
    pub ok: bool,
}

/// Verifies, at the given parameter ranges, what the canonical-antichain
/// obstruction needs from the families: the exact comparability pattern
/// among the K_{2,i+1} and the W(i, q), plus bounded evidence that the
/// down-sets are gem-free and the inner contractions stay in I0 ∪ I1.
/// Fundamentality itself (a statement about infinite down-sets) is not
/// decided here.
pub fn check_ding_premises(
    i_values: &[usize],
    q_values: &[usize],
    cfg: &DingConfig,
) -> Result<DingReport, FamilyError> {
    let mut members: Vec<(FamilySpec, Graph)> = Vec::new();
    for &i in i_values {
        let spec = FamilySpec::K2r { r: i + 1 };
        members.push((spec, make(spec)?.graph));
    }
    for &i in i_values {
        for &q in q_values {
            let spec = FamilySpec::W { p: i, q };
            members.push((spec, make(spec)?.graph));
        }
    }

    let mut pairs = Vec::new();
    let mut exhausted_pairs = 0usize;
    let mut premise_iii_ok = true;
    for x in 0..members.len() {
        for y in x + 1..members.len() {
            let (sa, ga) = &members[x];
            let (sb, gb) = &members[y];
            let expected = expected_ding_relation(*sa, *sb);
            let computed =
                compare_pair(ga, gb, &cfg.search).expect("family members are connected");
            let ok = computed.agrees_with(expected);
            if computed == Comparability::Exhausted {
                exhausted_pairs += 1;
            } else if !ok {
                premise_iii_ok = false;
            }
            pairs.push(DingPair { a: *sa, b: *sb, expected, computed, ok });
        }
    }

    let mut downset_checks = Vec::new();
    for (spec, g) in &members {
        let steps = cfg.downset_steps.unwrap_or_else(|| g.edge_count());
        let downset = downset_members(g, steps);
        let all_gem_free = !contains_gem_induced_minor(g)
            && downset.iter().all(|h| !contains_gem_induced_minor(h));
        downset_checks.push(DownsetGemCheck {
            member: *spec,
            steps,
            downset_size: downset.len(),
            all_gem_free,
        });
    }

    let mut inner_closure_checks = Vec::new();
    for &i in i_values {
        for &q in q_values {
            let closure = inner_contraction_closure(i, q)?;
            let all_classified = closure.iter().all(|(_, c)| *c != IClass::Neither);
            inner_closure_checks.push(InnerClosureCheck {
                spec: FamilySpec::W { p: i, q },
                reachable: closure.len(),
                all_classified,
            });
        }
    }

    let ok = premise_iii_ok
        && exhausted_pairs == 0
        && downset_checks.iter().all(|c| c.all_gem_free)
        && inner_closure_checks.iter().all(|c| c.all_classified);
    Ok(DingReport {
        i_values: i_values.to_vec(),
        q_values: q_values.to_vec(),
        pairs,
        exhausted_pairs,
        premise_iii_ok,
        downset_checks,
        inner_closure_checks,
        ok,
    })
}

fn expected_ding_relation(a: FamilySpec, b: FamilySpec) -> Relation {
    use FamilySpec::*;
    match (a, b) {
        (K2r { r }, W { p, .. }) if r == p + 1 => Relation::AContractionOfB,
        (W { p, .. }, K2r { r }) if r == p + 1 => Relation::BContractionOfA,
        _ => Relation::Incomparable,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyError {
    ParamOutOfRange { spec: FamilySpec },
    Unparseable { input: String },
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::ParamOutOfRange { spec } => {
                write!(f, "parameters of {spec} are out of range")
            }
            FamilyError::Unparseable { input } => {
                write!(f, "cannot parse family spec {input:?} (expected e.g. K2R:4, W:3,5, I0:3,2)")
            }
        }
    }
}
