//! Vertex polynomials `P_•(G, x) = Σ_{H ∈ Orb_•(G)} x^{v(H)}`.
//!
//! Two independent engines: boundary-count state sums over edge subsets or
//! ordered partitions, and deletion/contraction/twisted-contraction
//! recursions.

use num_bigint::BigInt;
use num_traits::pow;

pub use crate::duality::Subgroup as SubgroupTag;
use crate::duality::{contract, for_each_assignment, petrie_dual, twisted_contract};
use crate::error::{guard, Error, Result};
use crate::poly::Polynomial;
use crate::ribbon::RibbonGraph;

/// Largest edge count the recursive engine accepts.
pub const RECURSION_EDGE_LIMIT: usize = 14;

fn x_pow(k: usize) -> Polynomial {
    Polynomial::x_pow(k as u32)
}

fn two_pow(k: usize) -> BigInt {
    pow(BigInt::from(2), k)
}

/// `Σ_{A ⊆ E} x^{f(G ∖ Aᶜ)}`.
fn delta_sum(g: &RibbonGraph) -> Result<Polynomial> {
    let m = g.num_edges();
    guard("subset state sum", 2, m)?;
    let mut counts = vec![0u64; g.num_vertices() + m + 1];
    for_each_assignment(m, 2, |keep| {
        counts[g.face_count_with(|e| keep[e] == 1, |_| false)] += 1;
    });
    Ok(from_counts(&counts))
}

fn from_counts(counts: &[u64]) -> Polynomial {
    Polynomial::from_terms(
        counts.iter().enumerate().filter(|(_, c)| **c > 0).map(|(k, c)| (k as u32, BigInt::from(*c))),
    )
}

/// State sums over boundary counts.
///
/// * `Delta`: `Σ_{A⊆E} x^{f(G∖Aᶜ)}`
/// * `Wilson`: `Σ_{A⊆E} x^{f(G^×∖Aᶜ)}`
/// * `Triality`: `Σ_{(A₁,A₂,A₃)} x^{f(G^{τ(A₃)}∖A₁)}`
/// * `Full`: `Σ_{(A₁,…,A₆)} x^{f(G^{τ(A₅∪A₆)}∖(A₁∪A₃))}`
/// * `Tau`: `2^e x^v`
pub fn vp_brute(g: &RibbonGraph, tag: SubgroupTag) -> Result<Polynomial> {
    let m = g.num_edges();
    let size = g.num_vertices() + m + 1;
    match tag {
        SubgroupTag::Tau => Ok(x_pow(g.num_vertices()).scale(&two_pow(m))),
        SubgroupTag::Delta => delta_sum(g),
        SubgroupTag::Wilson => delta_sum(&petrie_dual(g)),
        SubgroupTag::Triality => {
            guard("ordered 3-partition state sum", 3, m)?;
            let mut counts = vec![0u64; size];
            for_each_assignment(m, 3, |part| {
                counts[g.face_count_with(|e| part[e] != 0, |e| part[e] == 2)] += 1;
            });
            Ok(from_counts(&counts))
        }
        SubgroupTag::Full => {
            guard("ordered 6-partition state sum", 6, m)?;
            let mut counts = vec![0u64; size];
            // part[e] = i − 1 for e ∈ Aᵢ
            for_each_assignment(m, 6, |part| {
                let f = g.face_count_with(|e| part[e] != 0 && part[e] != 2, |e| part[e] >= 4);
                counts[f] += 1;
            });
            Ok(from_counts(&counts))
        }
    }
}

/// Chooses the pivot edge for one recursion step.
pub type PivotRule<'a> = &'a dyn Fn(&RibbonGraph) -> usize;

/// Deletion–contraction recursion, pivoting on the smallest edge label.
pub fn vp_recursive(g: &RibbonGraph, tag: SubgroupTag) -> Result<Polynomial> {
    vp_recursive_with(g, tag, &|_| 0)
}

/// Deletion–contraction recursion with a caller-chosen pivot.
pub fn vp_recursive_with(g: &RibbonGraph, tag: SubgroupTag, pivot: PivotRule<'_>) -> Result<Polynomial> {
    if tag == SubgroupTag::Tau {
        return vp_brute(g, tag);
    }
    if g.num_edges() > RECURSION_EDGE_LIMIT {
        return Err(Error::GuardExceeded {
            what: "deletion-contraction recursion",
            count: g.num_edges() as u128,
            limit: RECURSION_EDGE_LIMIT as u128,
        });
    }
    Ok(recurse(g, tag, pivot))
}

fn recurse(g: &RibbonGraph, tag: SubgroupTag, pivot: PivotRule<'_>) -> Polynomial {
    if g.num_edges() == 0 {
        return x_pow(g.num_vertices());
    }
    let e = g.label(pivot(g)).clone();
    let deleted = || recurse(&g.delete_edges([&e]).expect("pivot exists"), tag, pivot);
    let contracted = || recurse(&contract(g, &e).expect("pivot exists"), tag, pivot);
    let twisted = || recurse(&twisted_contract(g, &e).expect("pivot exists"), tag, pivot);
    match tag {
        SubgroupTag::Delta => deleted() + contracted(),
        SubgroupTag::Wilson => deleted() + twisted(),
        SubgroupTag::Triality => deleted() + contracted() + twisted(),
        SubgroupTag::Full => (deleted() + contracted() + twisted()).scale(&BigInt::from(2)),
        SubgroupTag::Tau => unreachable!("closed form"),
    }
}

/// `P_{⟨τδτ⟩}(G) = P_{⟨δ⟩}(G^×)`.
pub fn vp_wilson_via_petrial(g: &RibbonGraph) -> Result<Polynomial> {
    vp_brute(&petrie_dual(g), SubgroupTag::Delta)
}

/// `P_{⟨δ,τ⟩}(G) = 2^e · P_{⟨δτ⟩}(G)`.
pub fn vp_full_via_factor(g: &RibbonGraph) -> Result<Polynomial> {
    Ok(vp_brute(g, SubgroupTag::Triality)?.scale(&two_pow(g.num_edges())))
}

/// Computation engine for [`vertex_polynomial`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    Brute,
    Recursive,
}

/// Default entry point: multiplies per-component polynomials; the full
/// group uses the `2^e` factor over the triality sum.
pub fn vertex_polynomial(g: &RibbonGraph, tag: SubgroupTag, method: Method) -> Result<Polynomial> {
    let mut acc = Polynomial::one();
    for c in g.components() {
        let p = match (method, tag) {
            (Method::Brute, SubgroupTag::Full) => vp_full_via_factor(&c)?,
            (Method::Brute, t) => vp_brute(&c, t)?,
            (Method::Recursive, t) => vp_recursive(&c, t)?,
        };
        acc = &acc * &p;
    }
    Ok(acc)
}
