use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::ribbon::{EdgeId, RibbonGraph};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Simple graph with a sign on every vertex.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SignedGraph {
    signs: BTreeMap<EdgeId, Sign>,
    adj: BTreeMap<EdgeId, BTreeSet<EdgeId>>,
}

impl SignedGraph {
    pub fn new(signs: BTreeMap<EdgeId, Sign>) -> Self {
        let adj = signs.keys().map(|k| (k.clone(), BTreeSet::new())).collect();
        SignedGraph { signs, adj }
    }

    /// Adds the edge `a b`; self-loops and unknown vertices are rejected.
    pub fn connect(&mut self, a: &EdgeId, b: &EdgeId) -> Result<()> {
        if a == b {
            return Err(Error::InvalidSetSystem(format!("self-adjacency at `{a}`")));
        }
        for v in [a, b] {
            if !self.signs.contains_key(v) {
                return Err(Error::UnknownEdge(v.to_string()));
            }
        }
        self.adj.get_mut(a).unwrap().insert(b.clone());
        self.adj.get_mut(b).unwrap().insert(a.clone());
        Ok(())
    }

    pub fn num_vertices(&self) -> usize {
        self.signs.len()
    }

    pub fn sign(&self, v: &EdgeId) -> Option<Sign> {
        self.signs.get(v).copied()
    }

    pub fn adjacent(&self, a: &EdgeId, b: &EdgeId) -> bool {
        self.adj.get(a).is_some_and(|n| n.contains(b))
    }

    pub fn neighbors(&self, v: &EdgeId) -> impl Iterator<Item = &EdgeId> {
        self.adj.get(v).into_iter().flatten()
    }

    pub fn vertices(&self) -> impl Iterator<Item = (&EdgeId, Sign)> {
        self.signs.iter().map(|(k, s)| (k, *s))
    }
}

/// One line per vertex, `label sign: neighbor,neighbor`.
impl fmt::Display for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, s) in &self.signs {
            let n: Vec<String> = self.adj[v].iter().map(ToString::to_string).collect();
            writeln!(f, "{v} {s}: {}", n.join(","))?;
        }
        Ok(())
    }
}

/// Signed intersection graph of a bouquet: a vertex per loop, `+` for
/// untwisted loops, adjacent when the loops' ends alternate.
pub fn si_graph(b: &RibbonGraph) -> Result<SignedGraph> {
    if !b.is_bouquet() {
        return Err(Error::NotBouquet(b.num_vertices()));
    }
    let signs = b
        .labels()
        .iter()
        .enumerate()
        .map(|(e, l)| (l.clone(), if b.is_twisted(e) { Sign::Minus } else { Sign::Plus }))
        .collect();
    let mut s = SignedGraph::new(signs);
    let mut pos = vec![[0usize; 2]; b.num_edges()];
    for (i, end) in b.rotations()[0].iter().enumerate() {
        pos[end.edge][end.index as usize] = i;
    }
    for p in &mut pos {
        p.sort_unstable();
    }
    for e in 0..b.num_edges() {
        for f in e + 1..b.num_edges() {
            let inside = |x: usize| pos[e][0] < x && x < pos[e][1];
            if inside(pos[f][0]) != inside(pos[f][1]) {
                s.connect(b.label(e), b.label(f))?;
            }
        }
    }
    Ok(s)
}

fn extend(
    s: &SignedGraph,
    t: &SignedGraph,
    order: &[&EdgeId],
    image: &mut Vec<EdgeId>,
    used: &mut BTreeSet<EdgeId>,
) -> bool {
    let k = image.len();
    if k == order.len() {
        return true;
    }
    let v = order[k];
    let candidates: Vec<EdgeId> = t
        .vertices()
        .filter(|(w, sign)| *sign == s.signs[v] && !used.contains(*w) && t.adj[*w].len() == s.adj[v].len())
        .map(|(w, _)| w.clone())
        .collect();
    for w in candidates {
        let consistent = order[..k].iter().zip(image.iter()).all(|(u, iu)| s.adjacent(v, u) == t.adjacent(&w, iu));
        if !consistent {
            continue;
        }
        used.insert(w.clone());
        image.push(w.clone());
        if extend(s, t, order, image, used) {
            return true;
        }
        image.pop();
        used.remove(&w);
    }
    false
}

/// Whether a sign- and adjacency-preserving bijection exists.
pub fn signed_graph_isomorphic(s: &SignedGraph, t: &SignedGraph) -> bool {
    if s.num_vertices() != t.num_vertices() {
        return false;
    }
    let profile = |g: &SignedGraph| {
        let mut p: Vec<(Sign, usize)> = g.signs.iter().map(|(v, sg)| (*sg, g.adj[v].len())).collect();
        p.sort_unstable();
        p
    };
    if profile(s) != profile(t) {
        return false;
    }
    // Highest degree first prunes earliest.
    let mut order: Vec<&EdgeId> = s.signs.keys().collect();
    order.sort_by_key(|v| std::cmp::Reverse(s.adj[*v].len()));
    extend(s, t, &order, &mut Vec::new(), &mut BTreeSet::new())
}
