//! Ribbon graphs as signed rotation systems.
//!
//! A vertex is a cyclic sequence of edge ends; every edge has two ends
//! (index 0 and 1) and a twist flag. Each end owns two *slots*, the points of
//! the vertex boundary immediately before and after it in rotation order.
//! Boundary components are the cycles formed by corner arcs (between
//! consecutive ends of a vertex) and edge sides (joining slots of the two
//! ends of one edge).

mod format;
mod iso;
mod label;

use std::collections::BTreeSet;

pub use iso::is_isomorphic;
pub use label::EdgeId;

use crate::error::{Error, Result};

/// One of the two ends of an edge. `edge` indexes [`RibbonGraph::labels`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct End {
    pub edge: usize,
    pub index: u8,
}

impl End {
    pub fn new(edge: usize, index: u8) -> Self {
        End { edge, index }
    }

    pub fn other(self) -> End {
        End { edge: self.edge, index: 1 - self.index }
    }

    pub(crate) fn id(self) -> usize {
        2 * self.edge + self.index as usize
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Side {
    Before,
    After,
}

/// A point on a vertex boundary adjacent to an end.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Slot {
    pub end: End,
    pub side: Side,
}

impl Slot {
    pub(crate) fn id(self) -> usize {
        2 * self.end.id() + (self.side == Side::After) as usize
    }

    /// The slot joined to this one by a side of its edge.
    pub fn across(self, twisted: bool) -> Slot {
        let side = match (twisted, self.side) {
            (true, s) => s,
            (false, Side::Before) => Side::After,
            (false, Side::After) => Side::Before,
        };
        Slot { end: self.end.other(), side }
    }
}

/// A ribbon graph. Edges are kept sorted by label so that edge index order is
/// label order.
#[derive(Clone, Debug)]
pub struct RibbonGraph {
    labels: Vec<EdgeId>,
    rotations: Vec<Vec<End>>,
    twisted: Vec<bool>,
}

pub(crate) struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

impl RibbonGraph {
    /// `n` isolated vertices.
    pub fn edgeless(n: usize) -> Self {
        RibbonGraph { labels: Vec::new(), rotations: vec![Vec::new(); n], twisted: Vec::new() }
    }

    /// Builds a graph from labelled rotations. Every label must appear with
    /// end index 0 exactly once and end index 1 exactly once.
    pub fn from_rotations<I>(rotations: Vec<Vec<(EdgeId, u8)>>, twisted: I) -> Result<Self>
    where
        I: IntoIterator<Item = EdgeId>,
    {
        let labels: BTreeSet<EdgeId> = rotations.iter().flatten().map(|(l, _)| l.clone()).collect();
        let labels: Vec<EdgeId> = labels.into_iter().collect();
        let index_of = |l: &EdgeId| labels.binary_search(l).expect("collected above");
        let mut seen = vec![[0usize; 2]; labels.len()];
        let mut rot = Vec::with_capacity(rotations.len());
        for (v, r) in rotations.iter().enumerate() {
            let mut out = Vec::with_capacity(r.len());
            for (l, i) in r {
                if *i > 1 {
                    return Err(Error::parse(v + 1, format!("edge `{l}` has end index {i}")));
                }
                let e = index_of(l);
                seen[e][*i as usize] += 1;
                out.push(End::new(e, *i));
            }
            rot.push(out);
        }
        for (e, s) in seen.iter().enumerate() {
            if s != &[1, 1] {
                return Err(Error::parse(0, format!("edge `{}` must have exactly one end of each index", labels[e])));
            }
        }
        let mut tw = vec![false; labels.len()];
        for l in twisted {
            let e = labels.binary_search(&l).map_err(|_| Error::UnknownEdge(l.to_string()))?;
            tw[e] = true;
        }
        Ok(RibbonGraph { labels, rotations: rot, twisted: tw })
    }

    /// Assembles a graph whose labels may be unsorted; edges are renumbered
    /// into label order.
    pub(crate) fn from_raw(labels: Vec<EdgeId>, rotations: Vec<Vec<End>>, twisted: Vec<bool>) -> Self {
        let mut order: Vec<usize> = (0..labels.len()).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        if order.iter().enumerate().all(|(i, &o)| i == o) {
            return RibbonGraph { labels, rotations, twisted };
        }
        let mut new_index = vec![0; labels.len()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let rotations = rotations
            .into_iter()
            .map(|r| r.into_iter().map(|e| End::new(new_index[e.edge], e.index)).collect())
            .collect();
        RibbonGraph {
            labels: order.iter().map(|&o| labels[o].clone()).collect(),
            twisted: order.iter().map(|&o| twisted[o]).collect(),
            rotations,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.rotations.len()
    }

    pub fn num_edges(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[EdgeId] {
        &self.labels
    }

    pub fn label(&self, edge: usize) -> &EdgeId {
        &self.labels[edge]
    }

    pub fn edge_index(&self, label: &EdgeId) -> Result<usize> {
        self.labels.binary_search(label).map_err(|_| Error::UnknownEdge(label.to_string()))
    }

    pub fn rotations(&self) -> &[Vec<End>] {
        &self.rotations
    }

    pub fn rotation(&self, v: usize) -> Result<&[End]> {
        self.rotations.get(v).map(Vec::as_slice).ok_or(Error::InvalidVertex(v))
    }

    pub fn is_twisted(&self, edge: usize) -> bool {
        self.twisted[edge]
    }

    pub fn twisted_labels(&self) -> impl Iterator<Item = &EdgeId> {
        self.labels.iter().zip(&self.twisted).filter(|(_, t)| **t).map(|(l, _)| l)
    }

    pub fn is_bouquet(&self) -> bool {
        self.rotations.len() == 1
    }

    /// Converts a set of labels into a per-edge membership mask.
    pub fn edge_mask<I, T>(&self, edges: I) -> Result<Vec<bool>>
    where
        I: IntoIterator<Item = T>,
        T: Into<EdgeId>,
    {
        let mut mask = vec![false; self.num_edges()];
        for l in edges {
            mask[self.edge_index(&l.into())?] = true;
        }
        Ok(mask)
    }

    /// Vertex and rotation position of every end, indexed by end id.
    pub(crate) fn end_locations(&self) -> Vec<(usize, usize)> {
        let mut loc = vec![(usize::MAX, usize::MAX); 2 * self.num_edges()];
        for (v, r) in self.rotations.iter().enumerate() {
            for (i, end) in r.iter().enumerate() {
                loc[end.id()] = (v, i);
            }
        }
        loc
    }

    /// Vertices at the two ends of `edge`.
    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        let loc = self.end_locations();
        (loc[2 * edge].0, loc[2 * edge + 1].0)
    }

    /// Counts boundary components of the spanning subgraph on the edges for
    /// which `keep` holds, after toggling the twist of edges where `flip`
    /// holds.
    pub(crate) fn face_count_with(&self, keep: impl Fn(usize) -> bool, flip: impl Fn(usize) -> bool) -> usize {
        let mut sets = DisjointSets::new(4 * self.num_edges());
        let mut slots = 0;
        let mut joins = 0;
        let mut bare = 0;
        for r in &self.rotations {
            let kept: Vec<End> = r.iter().copied().filter(|e| keep(e.edge)).collect();
            if kept.is_empty() {
                bare += 1;
                continue;
            }
            for (i, &a) in kept.iter().enumerate() {
                let b = kept[(i + 1) % kept.len()];
                let after = Slot { end: a, side: Side::After };
                let before = Slot { end: b, side: Side::Before };
                joins += sets.union(after.id(), before.id()) as usize;
            }
            slots += 2 * kept.len();
        }
        for e in (0..self.num_edges()).filter(|&e| keep(e)) {
            let tw = self.twisted[e] ^ flip(e);
            for side in [Side::Before, Side::After] {
                let s = Slot { end: End::new(e, 0), side };
                joins += sets.union(s.id(), s.across(tw).id()) as usize;
            }
        }
        slots - joins + bare
    }

    /// Number of boundary components `f(G)`.
    pub fn boundary_count(&self) -> usize {
        self.face_count_with(|_| true, |_| false)
    }

    /// Connected components of the underlying graph, isolated vertices
    /// included.
    pub fn num_components(&self) -> usize {
        self.component_of_vertices().1
    }

    pub fn is_connected(&self) -> bool {
        self.num_components() <= 1
    }

    fn component_of_vertices(&self) -> (Vec<usize>, usize) {
        let mut sets = DisjointSets::new(self.num_vertices());
        let loc = self.end_locations();
        for e in 0..self.num_edges() {
            sets.union(loc[2 * e].0, loc[2 * e + 1].0);
        }
        let mut ids = vec![usize::MAX; self.num_vertices()];
        let mut next = 0;
        let mut out = Vec::with_capacity(self.num_vertices());
        for v in 0..self.num_vertices() {
            let root = sets.find(v);
            if ids[root] == usize::MAX {
                ids[root] = next;
                next += 1;
            }
            out.push(ids[root]);
        }
        (out, next)
    }

    /// Euler genus `2c − v + e − f`.
    pub fn euler_genus(&self) -> usize {
        let chi = self.num_vertices() as isize - self.num_edges() as isize + self.boundary_count() as isize;
        let g = 2 * self.num_components() as isize - chi;
        debug_assert!(g >= 0);
        g as usize
    }

    /// Whether vertex flips can untwist every edge.
    pub fn is_orientable(&self) -> bool {
        let loc = self.end_locations();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.num_vertices()];
        for e in 0..self.num_edges() {
            let (u, w) = (loc[2 * e].0, loc[2 * e + 1].0);
            if u == w {
                if self.twisted[e] {
                    return false;
                }
                continue;
            }
            incident[u].push(e);
            incident[w].push(e);
        }
        let mut flip: Vec<Option<bool>> = vec![None; self.num_vertices()];
        for start in 0..self.num_vertices() {
            if flip[start].is_some() {
                continue;
            }
            flip[start] = Some(false);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                let fu = flip[u].unwrap();
                for &e in &incident[u] {
                    let (a, b) = (loc[2 * e].0, loc[2 * e + 1].0);
                    let w = if a == u { b } else { a };
                    let want = fu ^ self.twisted[e];
                    match flip[w] {
                        None => {
                            flip[w] = Some(want);
                            stack.push(w);
                        }
                        Some(fw) if fw != want => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Reverses the local orientation at `v`: its rotation is reversed and
    /// every non-loop edge at `v` changes twist.
    pub fn vertex_flip(&self, v: usize) -> Result<RibbonGraph> {
        if v >= self.num_vertices() {
            return Err(Error::InvalidVertex(v));
        }
        let mut g = self.clone();
        g.rotations[v].reverse();
        let mut count = vec![0u8; self.num_edges()];
        for end in &self.rotations[v] {
            count[end.edge] += 1;
        }
        for (e, c) in count.iter().enumerate() {
            if *c == 1 {
                g.twisted[e] = !g.twisted[e];
            }
        }
        Ok(g)
    }

    /// Keeps only edges where `keep` holds; all vertices survive.
    pub(crate) fn retain_edges(&self, keep: impl Fn(usize) -> bool) -> RibbonGraph {
        let mut new_index = vec![usize::MAX; self.num_edges()];
        let mut labels = Vec::new();
        let mut twisted = Vec::new();
        for (e, slot) in new_index.iter_mut().enumerate() {
            if keep(e) {
                *slot = labels.len();
                labels.push(self.labels[e].clone());
                twisted.push(self.twisted[e]);
            }
        }
        let rotations = self
            .rotations
            .iter()
            .map(|r| {
                r.iter().filter(|end| keep(end.edge)).map(|end| End::new(new_index[end.edge], end.index)).collect()
            })
            .collect();
        RibbonGraph { labels, rotations, twisted }
    }

    /// `G ∖ A`.
    pub fn delete_edges<I, T>(&self, edges: I) -> Result<RibbonGraph>
    where
        I: IntoIterator<Item = T>,
        T: Into<EdgeId>,
    {
        let mask = self.edge_mask(edges)?;
        Ok(self.retain_edges(|e| !mask[e]))
    }

    /// `(V(G), A) = G ∖ Aᶜ`.
    pub fn spanning_subgraph<I, T>(&self, edges: I) -> Result<RibbonGraph>
    where
        I: IntoIterator<Item = T>,
        T: Into<EdgeId>,
    {
        let mask = self.edge_mask(edges)?;
        Ok(self.retain_edges(|e| mask[e]))
    }

    /// Toggles the twist of every edge in the mask.
    pub(crate) fn toggle_twists(&self, mask: &[bool]) -> RibbonGraph {
        let mut g = self.clone();
        for (t, m) in g.twisted.iter_mut().zip(mask) {
            *t ^= *m;
        }
        g
    }

    /// Renames edges of `other` that clash with labels of `self` by prefixing
    /// `~` to all of its labels, repeatedly, until the label sets are disjoint.
    fn disjoint_labels(&self, other: &RibbonGraph) -> Vec<EdgeId> {
        let mut labels = other.labels.clone();
        while labels.iter().any(|l| self.labels.binary_search(l).is_ok()) {
            labels = labels.iter().map(|l| EdgeId::new(format!("~{l}"))).collect();
        }
        labels
    }

    fn merged_parts(&self, other: &RibbonGraph) -> (Vec<EdgeId>, Vec<Vec<End>>, Vec<bool>) {
        let offset = self.num_edges();
        let mut labels = self.labels.clone();
        labels.extend(self.disjoint_labels(other));
        let mut twisted = self.twisted.clone();
        twisted.extend(&other.twisted);
        let mut rotations = self.rotations.clone();
        rotations
            .extend(other.rotations.iter().map(|r| r.iter().map(|e| End::new(e.edge + offset, e.index)).collect()));
        (labels, rotations, twisted)
    }

    /// `G ∪ H`. Labels of `other` are prefixed with `~` if they clash.
    pub fn disjoint_union(&self, other: &RibbonGraph) -> RibbonGraph {
        let (labels, rotations, twisted) = self.merged_parts(other);
        RibbonGraph::from_raw(labels, rotations, twisted)
    }

    /// One-vertex join `G ∨ H`: vertex `v` of `self` and vertex `w` of `other`
    /// are merged by cutting each rotation at the given gap (gap `k` lies
    /// just before the `k`-th end) and concatenating.
    pub fn join(&self, v: usize, gap_v: usize, other: &RibbonGraph, w: usize, gap_w: usize) -> Result<RibbonGraph> {
        let rv = self.rotation(v)?;
        let rw = other.rotation(w)?;
        if gap_v > rv.len() {
            return Err(Error::InvalidGap { gap: gap_v, degree: rv.len() });
        }
        if gap_w > rw.len() {
            return Err(Error::InvalidGap { gap: gap_w, degree: rw.len() });
        }
        let (labels, mut rotations, twisted) = self.merged_parts(other);
        let wi = self.num_vertices() + w;
        let moved = rotations.remove(wi);
        let mut merged: Vec<End> = rv[gap_v..].iter().chain(&rv[..gap_v]).copied().collect();
        merged.extend(moved[gap_w..].iter().chain(&moved[..gap_w]));
        rotations[v] = merged;
        Ok(RibbonGraph::from_raw(labels, rotations, twisted))
    }

    /// Splits into connected components, ordered by their first vertex.
    pub fn components(&self) -> Vec<RibbonGraph> {
        let (comp, n) = self.component_of_vertices();
        let loc = self.end_locations();
        (0..n)
            .map(|c| {
                let verts: Vec<usize> = (0..self.num_vertices()).filter(|&v| comp[v] == c).collect();
                let sub = self.retain_edges(|e| comp[loc[2 * e].0] == c);
                let rotations = verts.iter().map(|&v| sub.rotations[v].clone()).collect();
                RibbonGraph { labels: sub.labels, rotations, twisted: sub.twisted }
            })
            .collect()
    }

    /// Structural equality with each rotation compared up to cyclic shift.
    /// Which end of an edge carries index 0 is irrelevant.
    pub fn same_up_to_shift(&self, other: &RibbonGraph) -> bool {
        let edges = |r: &[End]| r.iter().map(|x| x.edge).collect::<Vec<_>>();
        self.labels == other.labels
            && self.twisted == other.twisted
            && self.rotations.len() == other.rotations.len()
            && self.rotations.iter().zip(&other.rotations).all(|(a, b)| cyclic_eq(&edges(a), &edges(b)))
    }
}

fn cyclic_eq<T: PartialEq>(a: &[T], b: &[T]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..a.len()).any(|s| (0..a.len()).all(|i| a[(i + s) % a.len()] == b[i]))
}

impl PartialEq for RibbonGraph {
    fn eq(&self, other: &Self) -> bool {
        self.same_up_to_shift(other)
    }
}

impl Eq for RibbonGraph {}

impl From<&EdgeId> for EdgeId {
    fn from(l: &EdgeId) -> Self {
        l.clone()
    }
}
