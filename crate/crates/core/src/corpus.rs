//! Deterministic graph generators and named fixtures.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ribbon::{EdgeId, End, RibbonGraph};

pub type Seeded = ChaCha8Rng;

pub fn rng(seed: u64) -> Seeded {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Bouquets used as regression fixtures.
pub const B1: &str = "(1, 2, -1, 2)";
pub const B2: &str = "(1, 2, -1, -2)";
pub const B3: &str = "(1, 2, 1, 2)";
pub const B4: &str = "(1, 2, 3, 1, 2, 3)";
pub const B5: &str = "(1, 2, 3, 1, 2, -3)";

pub fn fixture(text: &str) -> RibbonGraph {
    RibbonGraph::parse_bouquet(text).expect("fixture parses")
}

fn assemble(vertex_of_end: &[usize], v: usize, rng: &mut impl Rng) -> RibbonGraph {
    let e = vertex_of_end.len() / 2;
    let mut ends: Vec<usize> = (0..2 * e).collect();
    ends.shuffle(rng);
    let mut rotations = vec![Vec::new(); v];
    for id in ends {
        rotations[vertex_of_end[id]].push(End::new(id / 2, (id % 2) as u8));
    }
    let labels = (1..=e).map(EdgeId::from).collect();
    let twisted = (0..e).map(|_| rng.gen_bool(0.5)).collect();
    RibbonGraph::from_raw(labels, rotations, twisted)
}

/// `v` vertices, `e` edges labelled `1..=e`; every end lands on a uniform
/// vertex, rotations are uniform orders and twists are fair coins.
pub fn random_graph(v: usize, e: usize, rng: &mut impl Rng) -> RibbonGraph {
    assert!(v > 0 || e == 0, "edges need a vertex");
    let vertex_of_end: Vec<usize> = (0..2 * e).map(|_| rng.gen_range(0..v)).collect();
    assemble(&vertex_of_end, v, rng)
}

/// Like [`random_graph`] but connected: the first `v − 1` edges form a
/// random recursive tree. Requires `e + 1 >= v`.
pub fn random_connected(v: usize, e: usize, rng: &mut impl Rng) -> RibbonGraph {
    assert!(v >= 1 && e + 1 >= v, "a connected graph on {v} vertices needs {} edges", v.saturating_sub(1));
    let mut vertex_of_end = Vec::with_capacity(2 * e);
    for i in 0..e {
        if i + 1 < v {
            vertex_of_end.push(i + 1);
            vertex_of_end.push(rng.gen_range(0..=i));
        } else {
            vertex_of_end.push(rng.gen_range(0..v));
            vertex_of_end.push(rng.gen_range(0..v));
        }
    }
    assemble(&vertex_of_end, v, rng)
}

/// A random connected graph with at most `max_edges` edges and at least one
/// vertex.
pub fn random_small_connected(max_edges: usize, rng: &mut impl Rng) -> RibbonGraph {
    let e = rng.gen_range(0..=max_edges);
    let v = rng.gen_range(1..=e + 1).min(4);
    random_connected(v, e, rng)
}

/// Every bouquet with `e` loops: each chord diagram on `2e` points (loops
/// labelled `1..=e` in order of first appearance) with each twist pattern.
pub fn all_bouquets(e: usize) -> Vec<RibbonGraph> {
    let mut diagrams = Vec::new();
    let mut slots = vec![usize::MAX; 2 * e];
    chord_diagrams(&mut slots, 0, &mut diagrams);
    let mut out = Vec::with_capacity(diagrams.len() << e);
    for d in &diagrams {
        for mask in 0..1usize << e {
            let mut seen = vec![false; e];
            let rotation = d
                .iter()
                .map(|&edge| {
                    let index = std::mem::replace(&mut seen[edge], true) as u8;
                    End::new(edge, index)
                })
                .collect();
            let labels = (1..=e).map(EdgeId::from).collect();
            let twisted = (0..e).map(|i| mask >> i & 1 == 1).collect();
            out.push(RibbonGraph::from_raw(labels, vec![rotation], twisted));
        }
    }
    out
}

fn chord_diagrams(slots: &mut Vec<usize>, next: usize, out: &mut Vec<Vec<usize>>) {
    let Some(first) = slots.iter().position(|&s| s == usize::MAX) else {
        out.push(slots.clone());
        return;
    };
    slots[first] = next;
    for j in first + 1..slots.len() {
        if slots[j] == usize::MAX {
            slots[j] = next;
            chord_diagrams(slots, next + 1, out);
            slots[j] = usize::MAX;
        }
    }
    slots[first] = usize::MAX;
}

/// Connected graphs used by `verify`: the fixtures plus `count` random
/// connected graphs with at most `max_edges` edges.
pub fn standard_corpus(seed: u64, count: usize, max_edges: usize) -> Vec<RibbonGraph> {
    let mut r = rng(seed);
    let mut out: Vec<RibbonGraph> = [B1, B2, B3, B4, B5].iter().map(|s| fixture(s)).collect();
    out.extend((0..count).map(|_| random_small_connected(max_edges, &mut r)));
    out
}
