use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::duality::{contract, twisted_contract};
use crate::error::{Error, Result};
use crate::poly::{Rational, RationalPolynomial};
use crate::ribbon::{EdgeId, RibbonGraph};
use crate::vertex_poly::{PivotRule, RECURSION_EDGE_LIMIT};

/// `(α_e, β_e, γ_e)`: weights of the contraction, deletion and twisted
/// contraction branches of one edge.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Weights {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
}

impl Weights {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational) -> Self {
        Weights { alpha, beta, gamma }
    }

    pub fn from_ints(alpha: i64, beta: i64, gamma: i64) -> Self {
        let r = |n: i64| Rational::from_integer(n.into());
        Weights::new(r(alpha), r(beta), r(gamma))
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WeightSystem(pub BTreeMap<EdgeId, Weights>);

impl WeightSystem {
    /// The same weights on every edge of `g`.
    pub fn constant(g: &RibbonGraph, w: Weights) -> Self {
        WeightSystem(g.labels().iter().map(|l| (l.clone(), w.clone())).collect())
    }
}

/// Topological transition polynomial `Q(G; (α, β, γ), x)`:
/// `α_e Q(G/e) + β_e Q(G∖e) + γ_e Q(G^{τ(e)}/e)`, and `x^{v(G)}` on edgeless
/// graphs. Pivots on the smallest label.
pub fn transition_poly(g: &RibbonGraph, w: &WeightSystem) -> Result<RationalPolynomial> {
    transition_poly_with(g, w, &|_| 0)
}

pub fn transition_poly_with(g: &RibbonGraph, w: &WeightSystem, pivot: PivotRule<'_>) -> Result<RationalPolynomial> {
    if g.num_edges() > RECURSION_EDGE_LIMIT {
        return Err(Error::GuardExceeded {
            what: "transition recursion",
            count: g.num_edges() as u128,
            limit: RECURSION_EDGE_LIMIT as u128,
        });
    }
    for l in g.labels() {
        if !w.0.contains_key(l) {
            return Err(Error::PartialAssignment(l.to_string()));
        }
    }
    Ok(recurse(g, w, pivot))
}

fn recurse(g: &RibbonGraph, w: &WeightSystem, pivot: PivotRule<'_>) -> RationalPolynomial {
    if g.num_edges() == 0 {
        return RationalPolynomial::x_pow(g.num_vertices() as u32);
    }
    let e = g.label(pivot(g)).clone();
    let Weights { alpha, beta, gamma } = &w.0[&e];
    let mut acc = RationalPolynomial::zero();
    let mut branch = |weight: &Rational, h: RibbonGraph| {
        if weight.is_zero() {
            return;
        }
        let q = recurse(&h, w, pivot);
        acc += &if weight.is_one() { q } else { q.scale(weight) };
    };
    branch(alpha, contract(g, &e).expect("pivot exists"));
    branch(beta, g.delete_edges([&e]).expect("pivot exists"));
    branch(gamma, twisted_contract(g, &e).expect("pivot exists"));
    acc
}
