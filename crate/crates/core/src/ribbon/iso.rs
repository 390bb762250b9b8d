use super::{End, RibbonGraph};

#[derive(Clone, Copy)]
struct Placement {
    target: usize,
    offset: usize,
    reversed: bool,
}

impl Placement {
    fn image(&self, pos: usize, degree: usize) -> usize {
        if self.reversed {
            (self.offset + degree - pos) % degree
        } else {
            (self.offset + pos) % degree
        }
    }

    /// Placement sending position `pos` to `img`.
    fn sending(target: usize, pos: usize, img: usize, degree: usize, reversed: bool) -> Self {
        let offset = if reversed { (img + pos) % degree } else { (img + degree - pos) % degree };
        Placement { target, offset, reversed }
    }
}

/// Tries to extend the placement of `start` to an isomorphism of the
/// connected graphs `g` and `h`. Every other choice is forced.
fn extend(
    g: &RibbonGraph,
    h: &RibbonGraph,
    gloc: &[(usize, usize)],
    hloc: &[(usize, usize)],
    start: usize,
    first: Placement,
) -> bool {
    let mut vmap: Vec<Option<Placement>> = vec![None; g.num_vertices()];
    let mut hused = vec![false; h.num_vertices()];
    let mut emap: Vec<Option<(usize, bool)>> = vec![None; g.num_edges()];
    let mut eused = vec![false; h.num_edges()];
    vmap[start] = Some(first);
    hused[first.target] = true;
    let mut queue = vec![start];
    while let Some(v) = queue.pop() {
        let pv = vmap[v].unwrap();
        let rot = &g.rotations[v];
        let k = rot.len();
        let hrot = &h.rotations[pv.target];
        for (i, &a) in rot.iter().enumerate() {
            let b: End = hrot[pv.image(i, k)];
            let swap = a.index != b.index;
            match emap[a.edge] {
                Some((e, s)) => {
                    if e != b.edge || s != swap {
                        return false;
                    }
                }
                None => {
                    if eused[b.edge] {
                        return false;
                    }
                    eused[b.edge] = true;
                    emap[a.edge] = Some((b.edge, swap));
                }
            }
            let (v2, i2) = gloc[a.other().id()];
            let (w2, j2) = hloc[b.other().id()];
            let rev = pv.reversed ^ g.twisted[a.edge] ^ h.twisted[b.edge];
            let k2 = g.rotations[v2].len();
            match vmap[v2] {
                Some(p2) => {
                    if p2.target != w2 || p2.reversed != rev || p2.image(i2, k2) != j2 {
                        return false;
                    }
                }
                None => {
                    if hused[w2] || h.rotations[w2].len() != k2 {
                        return false;
                    }
                    hused[w2] = true;
                    vmap[v2] = Some(Placement::sending(w2, i2, j2, k2, rev));
                    queue.push(v2);
                }
            }
        }
    }
    vmap.iter().all(Option::is_some)
}

fn connected_isomorphic(g: &RibbonGraph, h: &RibbonGraph) -> bool {
    if g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges() {
        return false;
    }
    if g.num_edges() == 0 {
        return true;
    }
    let gloc = g.end_locations();
    let hloc = h.end_locations();
    let start = (0..g.num_vertices()).max_by_key(|&v| g.rotations[v].len()).unwrap();
    let k = g.rotations[start].len();
    for w in (0..h.num_vertices()).filter(|&w| h.rotations[w].len() == k) {
        for img in 0..k {
            for reversed in [false, true] {
                let first = Placement::sending(w, 0, img, k, reversed);
                if extend(g, h, &gloc, &hloc, start, first) {
                    return true;
                }
            }
        }
    }
    false
}

fn degree_profile(g: &RibbonGraph) -> Vec<usize> {
    let mut d: Vec<usize> = g.rotations.iter().map(Vec::len).collect();
    d.sort_unstable();
    d
}

/// Decides whether two ribbon graphs are equivalent under relabelling of
/// vertices and edges, cyclic shifts of rotations and vertex flips.
pub fn is_isomorphic(g: &RibbonGraph, h: &RibbonGraph) -> bool {
    if g.num_vertices() != h.num_vertices()
        || g.num_edges() != h.num_edges()
        || degree_profile(g) != degree_profile(h)
        || g.boundary_count() != h.boundary_count()
        || g.is_orientable() != h.is_orientable()
    {
        return false;
    }
    let gc = g.components();
    let hc = h.components();
    if gc.len() != hc.len() {
        return false;
    }
    let mut taken = vec![false; hc.len()];
    'outer: for c in &gc {
        for (j, d) in hc.iter().enumerate() {
            if !taken[j] && connected_isomorphic(c, d) {
                taken[j] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}
