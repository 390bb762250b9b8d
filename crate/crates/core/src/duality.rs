//! Partial duals, partial Petrials and the per-edge S₃ action they generate.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{guard, Error, Result};
use crate::ribbon::{EdgeId, End, RibbonGraph, Side, Slot};

/// Generator of the ribbon group acting on one edge set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Operator {
    /// Partial dual, δ.
    Dual,
    /// Partial Petrial (half-twist), τ.
    Petrial,
}

/// Word `w₁w₂⋯wₙ` over {δ, τ}; `G^{w(A)}` applies `wₙ` first.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct OperatorWord(pub Vec<Operator>);

/// The six elements of S₃ = ⟨δ, τ | δ², τ², (δτ)³⟩.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum TwistOp {
    Identity,
    Delta,
    Tau,
    TauDelta,
    DeltaTau,
    TauDeltaTau,
}

impl TwistOp {
    pub const ALL: [TwistOp; 6] =
        [TwistOp::Identity, TwistOp::Delta, TwistOp::Tau, TwistOp::TauDelta, TwistOp::DeltaTau, TwistOp::TauDeltaTau];

    pub fn word(self) -> OperatorWord {
        use Operator::*;
        OperatorWord(match self {
            TwistOp::Identity => vec![],
            TwistOp::Delta => vec![Dual],
            TwistOp::Tau => vec![Petrial],
            TwistOp::TauDelta => vec![Petrial, Dual],
            TwistOp::DeltaTau => vec![Dual, Petrial],
            TwistOp::TauDeltaTau => vec![Petrial, Dual, Petrial],
        })
    }

    /// Faithful permutation model on {0,1,2}: δ ↦ (0 1), τ ↦ (1 2).
    fn permutation(self) -> [u8; 3] {
        let mut p = [0, 1, 2];
        for op in self.word().0 {
            p = compose(p, generator(op));
        }
        p
    }

    fn from_permutation(p: [u8; 3]) -> TwistOp {
        *TwistOp::ALL.iter().find(|t| t.permutation() == p).expect("S3 has six elements")
    }

    /// Group product, `self` applied after `rhs`.
    pub fn compose(self, rhs: TwistOp) -> TwistOp {
        TwistOp::from_permutation(compose(self.permutation(), rhs.permutation()))
    }
}

fn generator(op: Operator) -> [u8; 3] {
    match op {
        Operator::Dual => [1, 0, 2],
        Operator::Petrial => [0, 2, 1],
    }
}

/// `(a ∘ b)(i) = a(b(i))`.
fn compose(a: [u8; 3], b: [u8; 3]) -> [u8; 3] {
    [a[b[0] as usize], a[b[1] as usize], a[b[2] as usize]]
}

impl fmt::Display for TwistOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwistOp::Identity => f.write_str("1"),
            other => write!(f, "{}", other.word()),
        }
    }
}

impl FromStr for TwistOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(s.parse::<OperatorWord>()?.reduce())
    }
}

impl OperatorWord {
    /// The group element this word denotes.
    pub fn reduce(&self) -> TwistOp {
        let mut p = [0, 1, 2];
        for op in &self.0 {
            p = compose(p, generator(*op));
        }
        TwistOp::from_permutation(p)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromStr for OperatorWord {
    type Err = Error;

    /// Letters `d`/`δ` and `t`/`τ`; `1` or the empty string is the identity.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(OperatorWord::default());
        }
        s.chars()
            .map(|c| match c {
                'd' | 'D' | 'δ' => Ok(Operator::Dual),
                't' | 'T' | 'τ' => Ok(Operator::Petrial),
                _ => Err(Error::InvalidOperator(s.to_owned())),
            })
            .collect::<Result<Vec<_>>>()
            .map(OperatorWord)
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for op in &self.0 {
            f.write_str(match op {
                Operator::Dual => "d",
                Operator::Petrial => "t",
            })?;
        }
        Ok(())
    }
}

/// A group element per edge.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TwistedAssignment(pub BTreeMap<EdgeId, TwistOp>);

impl TwistedAssignment {
    pub fn uniform(g: &RibbonGraph, op: TwistOp) -> Self {
        TwistedAssignment(g.labels().iter().map(|l| (l.clone(), op)).collect())
    }

    pub fn get(&self, label: &EdgeId) -> Option<TwistOp> {
        self.0.get(label).copied()
    }
}

impl FromStr for TwistedAssignment {
    type Err = Error;

    /// Comma-separated `label=op` pairs, op one of `1|d|t|td|dt|tdt`.
    fn from_str(s: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for pair in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (l, op) = pair.split_once('=').ok_or_else(|| Error::InvalidOperator(pair.to_owned()))?;
            let op = match op.trim() {
                "1" => TwistOp::Identity,
                "d" => TwistOp::Delta,
                "t" => TwistOp::Tau,
                "td" => TwistOp::TauDelta,
                "dt" => TwistOp::DeltaTau,
                "tdt" => TwistOp::TauDeltaTau,
                other => return Err(Error::InvalidOperator(other.to_owned())),
            };
            map.insert(EdgeId::from(l.trim()), op);
        }
        Ok(TwistedAssignment(map))
    }
}

impl fmt::Display for TwistedAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(l, op)| format!("{l}={op}")).collect();
        f.write_str(&parts.join(","))
    }
}

/// Cyclic subgroups (and the whole group) whose orbits define the vertex
/// polynomials.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Subgroup {
    /// ⟨δ⟩
    Delta,
    /// ⟨τ⟩
    Tau,
    /// ⟨τδτ⟩
    Wilson,
    /// ⟨δτ⟩ = ⟨τδ⟩
    Triality,
    /// ⟨δ, τ⟩
    Full,
}

impl Subgroup {
    pub const ALL: [Subgroup; 5] =
        [Subgroup::Delta, Subgroup::Tau, Subgroup::Wilson, Subgroup::Triality, Subgroup::Full];

    /// Per-edge choices in one orbit entry.
    pub fn choices(self) -> &'static [TwistOp] {
        use TwistOp::*;
        match self {
            Subgroup::Delta => &[Identity, Delta],
            Subgroup::Tau => &[Identity, Tau],
            Subgroup::Wilson => &[Identity, TauDeltaTau],
            Subgroup::Triality => &[Identity, TauDelta, DeltaTau],
            Subgroup::Full => &TwistOp::ALL,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Subgroup::Delta => "delta",
            Subgroup::Tau => "tau",
            Subgroup::Wilson => "wilson",
            Subgroup::Triality => "triality",
            Subgroup::Full => "full",
        }
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Subgroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Subgroup::ALL.into_iter().find(|g| g.name() == s).ok_or_else(|| Error::InvalidOperator(s.to_owned()))
    }
}

/// `G^{τ(A)}`.
pub fn partial_petrial<I, T>(g: &RibbonGraph, edges: I) -> Result<RibbonGraph>
where
    I: IntoIterator<Item = T>,
    T: Into<EdgeId>,
{
    Ok(g.toggle_twists(&g.edge_mask(edges)?))
}

/// Petrie dual `G^×`.
pub fn petrie_dual(g: &RibbonGraph) -> RibbonGraph {
    g.toggle_twists(&vec![true; g.num_edges()])
}

/// Builds `G^{δ(A)}` from the boundary cycles of `(V(G), A)`.
///
/// Each cycle is traversed along corner arcs of the original vertices and
/// along the sides of `A`-edges; it becomes a new vertex whose rotation lists
/// the non-`A` ends met on the corner arcs and one new end per side of an
/// `A`-edge. The new vertex is oriented by the traversal direction, so a
/// non-`A` end met against its old rotation has its local orientation
/// reversed. An `A`-edge comes out untwisted exactly when its two sides
/// are traversed in opposite directions.
fn dual_by_trace(g: &RibbonGraph, in_a: &[bool]) -> RibbonGraph {
    let loc = g.end_locations();
    let rotations = g.rotations();
    let mut visited = vec![false; 4 * g.num_edges()];
    let mut reversed_end = vec![false; 2 * g.num_edges()];
    // side_dir[e][s]: side `s` of A-edge `e` was walked from end 0 to end 1
    let mut side_dir = vec![[false; 2]; g.num_edges()];
    let mut new_rotations: Vec<Vec<End>> = Vec::new();

    for rot in rotations {
        if !rot.iter().any(|end| in_a[end.edge]) {
            new_rotations.push(rot.clone());
            continue;
        }
        for &a in rot.iter().filter(|end| in_a[end.edge]) {
            for side in [Side::After, Side::Before] {
                let start = Slot { end: a, side };
                if visited[start.id()] {
                    continue;
                }
                let mut cycle = Vec::new();
                let mut cur = start;
                loop {
                    visited[cur.id()] = true;
                    let (v, i) = loc[cur.end.id()];
                    let r = &rotations[v];
                    let k = r.len();
                    let forward = cur.side == Side::After;
                    let mut j = i;
                    let arrival = loop {
                        j = if forward { (j + 1) % k } else { (j + k - 1) % k };
                        let end = r[j];
                        if in_a[end.edge] {
                            let side = if forward { Side::Before } else { Side::After };
                            break Slot { end, side };
                        }
                        reversed_end[end.id()] = !forward;
                        cycle.push(end);
                    };
                    visited[arrival.id()] = true;
                    let e = arrival.end.edge;
                    let next = arrival.across(g.is_twisted(e));
                    let zero_side = if arrival.end.index == 0 { arrival.side } else { next.side };
                    let s = (zero_side == Side::After) as usize;
                    side_dir[e][s] = arrival.end.index == 0;
                    cycle.push(End::new(e, s as u8));
                    cur = next;
                    if cur == start {
                        break;
                    }
                }
                new_rotations.push(cycle);
            }
        }
    }

    let twisted = (0..g.num_edges())
        .map(|e| {
            if in_a[e] {
                side_dir[e][0] == side_dir[e][1]
            } else {
                g.is_twisted(e) ^ reversed_end[2 * e] ^ reversed_end[2 * e + 1]
            }
        })
        .collect();
    RibbonGraph::from_raw(g.labels().to_vec(), new_rotations, twisted)
}

fn partial_dual_mask(g: &RibbonGraph, mask: &[bool]) -> RibbonGraph {
    let mut out = g.clone();
    let mut single = vec![false; g.num_edges()];
    for e in (0..g.num_edges()).filter(|&e| mask[e]) {
        single[e] = true;
        out = dual_by_trace(&out, &single);
        single[e] = false;
    }
    out
}

/// `G^{δ(A)}`, computed one edge at a time in label order.
pub fn partial_dual<I, T>(g: &RibbonGraph, edges: I) -> Result<RibbonGraph>
where
    I: IntoIterator<Item = T>,
    T: Into<EdgeId>,
{
    Ok(partial_dual_mask(g, &g.edge_mask(edges)?))
}

/// `G^{δ(A)}` from a single trace over all of `A` at once.
pub fn partial_dual_global<I, T>(g: &RibbonGraph, edges: I) -> Result<RibbonGraph>
where
    I: IntoIterator<Item = T>,
    T: Into<EdgeId>,
{
    Ok(dual_by_trace(g, &g.edge_mask(edges)?))
}

/// Geometric dual `G* = G^{δ(E)}`.
pub fn geometric_dual(g: &RibbonGraph) -> RibbonGraph {
    partial_dual_mask(g, &vec![true; g.num_edges()])
}

fn single_edge(g: &RibbonGraph, e: &EdgeId) -> Result<(usize, Vec<bool>)> {
    let i = g.edge_index(e)?;
    let mut mask = vec![false; g.num_edges()];
    mask[i] = true;
    Ok((i, mask))
}

/// `G/e = G^{δ(e)} ∖ e`.
pub fn contract(g: &RibbonGraph, e: &EdgeId) -> Result<RibbonGraph> {
    let (i, mask) = single_edge(g, e)?;
    Ok(dual_by_trace(g, &mask).retain_edges(|x| x != i))
}

/// `G^{τ(e)}/e`.
pub fn twisted_contract(g: &RibbonGraph, e: &EdgeId) -> Result<RibbonGraph> {
    let (i, mask) = single_edge(g, e)?;
    Ok(dual_by_trace(&g.toggle_twists(&mask), &mask).retain_edges(|x| x != i))
}

fn apply_op(g: &RibbonGraph, op: Operator, mask: &[bool]) -> RibbonGraph {
    match op {
        Operator::Dual => partial_dual_mask(g, mask),
        Operator::Petrial => g.toggle_twists(mask),
    }
}

/// `G^{w(A)}`: the last letter of `w` acts first.
pub fn apply_word<I, T>(g: &RibbonGraph, word: &OperatorWord, edges: I) -> Result<RibbonGraph>
where
    I: IntoIterator<Item = T>,
    T: Into<EdgeId>,
{
    let mask = g.edge_mask(edges)?;
    Ok(word.0.iter().rev().fold(g.clone(), |h, op| apply_op(&h, *op, &mask)))
}

fn check_total(g: &RibbonGraph, t: &TwistedAssignment) -> Result<Vec<TwistOp>> {
    for l in t.0.keys() {
        g.edge_index(l)?;
    }
    g.labels().iter().map(|l| t.get(l).ok_or_else(|| Error::PartialAssignment(l.to_string()))).collect()
}

/// Normal form `G^{τ(B₁)δ(B₂)τ(B₃)}`, operations applied in the order
/// τ(B₁), δ(B₂), τ(B₃).
pub(crate) fn apply_ops(g: &RibbonGraph, ops: &[TwistOp]) -> RibbonGraph {
    use TwistOp::*;
    let b1: Vec<bool> = ops.iter().map(|o| matches!(o, Tau | DeltaTau | TauDeltaTau)).collect();
    let b2: Vec<bool> = ops.iter().map(|o| matches!(o, Delta | TauDelta | DeltaTau | TauDeltaTau)).collect();
    let b3: Vec<bool> = ops.iter().map(|o| matches!(o, TauDelta | TauDeltaTau)).collect();
    let h = g.toggle_twists(&b1);
    let h = partial_dual_mask(&h, &b2);
    h.toggle_twists(&b3)
}

/// Applies one group element per edge.
pub fn apply_twisted(g: &RibbonGraph, t: &TwistedAssignment) -> Result<RibbonGraph> {
    Ok(apply_ops(g, &check_total(g, t)?))
}

#[derive(Clone, Debug)]
pub struct OrbitEntry {
    pub label: TwistedAssignment,
    pub graph: RibbonGraph,
}

/// Iterates all assignments of `choices` to `n` edges, edge 0 most
/// significant.
pub(crate) fn for_each_assignment<F: FnMut(&[usize])>(n: usize, base: usize, mut f: F) {
    let mut digits = vec![0usize; n];
    loop {
        f(&digits);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < base {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// Every orbit element indexed by subset or ordered partition of `E(G)`,
/// in lexicographic order over sorted edge labels. Entries are not
/// deduplicated.
pub fn orbit(g: &RibbonGraph, subgroup: Subgroup) -> Result<Vec<OrbitEntry>> {
    let choices = subgroup.choices();
    guard("orbit enumeration", choices.len() as u128, g.num_edges())?;
    let mut out = Vec::new();
    for_each_assignment(g.num_edges(), choices.len(), |digits| {
        let ops: Vec<TwistOp> = digits.iter().map(|&d| choices[d]).collect();
        let label = TwistedAssignment(g.labels().iter().cloned().zip(ops.iter().copied()).collect());
        out.push(OrbitEntry { label, graph: apply_ops(g, &ops) });
    });
    Ok(out)
}
