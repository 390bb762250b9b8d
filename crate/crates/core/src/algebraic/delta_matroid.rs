use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;

use crate::duality::for_each_assignment;
use crate::error::{guard, Error, Result};
use crate::poly::Polynomial;
use crate::ribbon::{EdgeId, RibbonGraph};

/// A proper set system over at most 64 elements. Subsets are bitmasks over
/// the sorted ground set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeltaMatroid {
    ground: Vec<EdgeId>,
    feasible: BTreeSet<u64>,
}

impl DeltaMatroid {
    pub fn new<I>(ground: impl IntoIterator<Item = EdgeId>, feasible: I) -> Result<Self>
    where
        I: IntoIterator<Item = BTreeSet<EdgeId>>,
    {
        let ground: Vec<EdgeId> = ground.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if ground.len() > 64 {
            return Err(Error::InvalidSetSystem("ground set larger than 64".into()));
        }
        let mut dm = DeltaMatroid { ground, feasible: BTreeSet::new() };
        for f in feasible {
            let m = dm.mask(&f)?;
            dm.feasible.insert(m);
        }
        if dm.feasible.is_empty() {
            return Err(Error::InvalidSetSystem("no feasible sets".into()));
        }
        Ok(dm)
    }

    pub fn ground(&self) -> &[EdgeId] {
        &self.ground
    }

    pub fn feasible_sets(&self) -> Vec<BTreeSet<EdgeId>> {
        self.feasible.iter().map(|&m| self.unmask(m)).collect()
    }

    pub fn is_feasible(&self, set: &BTreeSet<EdgeId>) -> Result<bool> {
        Ok(self.feasible.contains(&self.mask(set)?))
    }

    fn mask(&self, set: &BTreeSet<EdgeId>) -> Result<u64> {
        set.iter().try_fold(0u64, |m, l| {
            let i = self
                .ground
                .binary_search(l)
                .map_err(|_| Error::InvalidSetSystem(format!("`{l}` is not in the ground set")))?;
            Ok(m | (1 << i))
        })
    }

    fn unmask(&self, m: u64) -> BTreeSet<EdgeId> {
        (0..self.ground.len()).filter(|i| m >> i & 1 == 1).map(|i| self.ground[i].clone()).collect()
    }

    /// Symmetric exchange: for feasible `X`, `Y` and `u ∈ X Δ Y` some
    /// `v ∈ X Δ Y` makes `X Δ {u, v}` feasible.
    pub fn validate(&self) -> bool {
        for &x in &self.feasible {
            for &y in &self.feasible {
                let d = x ^ y;
                for u in bits(d) {
                    if !bits(d).any(|v| self.feasible.contains(&(x ^ (1 << u | 1 << v)))) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub(crate) fn distance_mask(&self, x: u64) -> usize {
        self.feasible.iter().map(|f| (f ^ x).count_ones() as usize).min().expect("proper")
    }

    /// `d_D(X) = min_F |X Δ F|`.
    pub fn distance(&self, x: &BTreeSet<EdgeId>) -> Result<usize> {
        Ok(self.distance_mask(self.mask(x)?))
    }
}

fn bits(m: u64) -> impl Iterator<Item = u32> + Clone {
    (0..64).filter(move |i| m >> i & 1 == 1)
}

/// `D(G)`: feasible sets are the `F` whose spanning subgraph has a single
/// boundary component.
pub fn ribbon_delta_matroid(g: &RibbonGraph) -> Result<DeltaMatroid> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    guard("delta-matroid subsets", 2, g.num_edges())?;
    let mut feasible = BTreeSet::new();
    for_each_assignment(g.num_edges(), 2, |keep| {
        if g.face_count_with(|e| keep[e] == 1, |_| false) == 1 {
            let m = keep.iter().enumerate().fold(0u64, |m, (i, k)| m | ((*k as u64) << i));
            feasible.insert(m);
        }
    });
    Ok(DeltaMatroid { ground: g.labels().to_vec(), feasible })
}

/// `L(D, x) = Σ_{X ⊆ E} x^{d_D(X)}`, with distances found by breadth-first
/// search over the cube from the feasible sets.
pub fn interlace_poly(d: &DeltaMatroid) -> Result<Polynomial> {
    let n = d.ground.len();
    guard("interlace subsets", 2, n)?;
    let size = 1usize << n;
    let mut dist = vec![usize::MAX; size];
    let mut queue = VecDeque::new();
    for &f in &d.feasible {
        dist[f as usize] = 0;
        queue.push_back(f as usize);
    }
    while let Some(x) = queue.pop_front() {
        for i in 0..n {
            let y = x ^ (1 << i);
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    let mut counts = vec![0u64; n + 1];
    for k in dist {
        counts[k] += 1;
    }
    Ok(Polynomial::from_terms(counts.into_iter().enumerate().map(|(k, c)| (k as u32, BigInt::from(c)))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> RibbonGraph {
        RibbonGraph::parse_bouquet(s).unwrap()
    }

    fn set(xs: &[&str]) -> BTreeSet<EdgeId> {
        xs.iter().map(|&s| s.into()).collect()
    }

    fn p(terms: &[(u32, i64)]) -> Polynomial {
        Polynomial::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn ribbon_matroids() {
        let d = ribbon_delta_matroid(&b("(1, 1)")).unwrap();
        assert_eq!(d.feasible_sets(), vec![set(&[])]);
        let d = ribbon_delta_matroid(&b("(1, -1)")).unwrap();
        assert_eq!(d.feasible_sets(), vec![set(&[]), set(&["1"])]);
        let d = ribbon_delta_matroid(&RibbonGraph::edgeless(1)).unwrap();
        assert_eq!(d.feasible_sets(), vec![set(&[])]);
        let two = RibbonGraph::edgeless(2);
        assert_eq!(ribbon_delta_matroid(&two), Err(Error::Disconnected));
    }

    #[test]
    fn exchange_axiom() {
        let d = DeltaMatroid::new(set(&["a"]), [set(&[])]).unwrap();
        assert!(d.validate());
        let d = DeltaMatroid::new(set(&["a", "b"]), [set(&[]), set(&["a", "b"])]).unwrap();
        assert!(d.validate());
        // X = ∅, Y = {a,b,c}, u = a: no {a}, {a,b} or {a,c} is feasible.
        let bad = DeltaMatroid::new(set(&["a", "b", "c"]), [set(&[]), set(&["a", "b", "c"])]).unwrap();
        assert!(!bad.validate());
        assert!(ribbon_delta_matroid(&b("(1, 2, -1, 3, 2, 3)")).unwrap().validate());
        assert!(DeltaMatroid::new(set(&["a"]), Vec::<BTreeSet<EdgeId>>::new()).is_err());
        assert!(DeltaMatroid::new(set(&["a"]), [set(&["z"])]).is_err());
    }

    #[test]
    fn distances() {
        let d = ribbon_delta_matroid(&b("(1, 1)")).unwrap();
        assert_eq!(d.distance(&set(&[])).unwrap(), 0);
        assert_eq!(d.distance(&set(&["1"])).unwrap(), 1);
        assert!(d.distance(&set(&["2"])).is_err());
    }

    #[test]
    fn interlace() {
        let d = ribbon_delta_matroid(&b("(1, 1)")).unwrap();
        assert_eq!(interlace_poly(&d).unwrap(), p(&[(0, 1), (1, 1)]));
        let d = ribbon_delta_matroid(&b("(1, -1)")).unwrap();
        assert_eq!(interlace_poly(&d).unwrap(), p(&[(0, 2)]));
        let d = DeltaMatroid::new(Vec::new(), [BTreeSet::new()]).unwrap();
        assert_eq!(interlace_poly(&d).unwrap(), p(&[(0, 1)]));
    }
}
