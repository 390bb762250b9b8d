//! Self-checks run by `ribbonpoly verify`. Each suite compares two
//! independent computations and stops at the first counterexample.

use std::fmt;

use num_bigint::BigInt;
use num_traits::pow;

use crate::algebraic::{
    interlace_poly, ribbon_delta_matroid, si_graph, signed_graph_isomorphic, transition_poly, WeightSystem, Weights,
};
use crate::corpus::{self, fixture, B1, B2, B3, B4, B5};
use crate::duality::{apply_word, orbit, partial_dual, partial_petrial, petrie_dual, OperatorWord, Subgroup};
use crate::error::Result;
use crate::poly::{Polynomial, Rational};
use crate::ribbon::{is_isomorphic, EdgeId, RibbonGraph};
use crate::vertex_poly::{vp_brute, vp_full_via_factor, vp_recursive, vp_wilson_via_petrial, SubgroupTag};

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: usize,
    pub failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {} ({} checks)", self.name, self.checks),
            Some(why) => write!(f, "FAIL {} after {} checks\n{}", self.name, self.checks, why),
        }
    }
}

type Check<'a> = Box<dyn FnMut(&RibbonGraph) -> std::result::Result<usize, String> + 'a>;

fn run(name: &'static str, graphs: &[RibbonGraph], mut check: Check<'_>) -> SuiteReport {
    let mut checks = 0;
    for g in graphs {
        match check(g) {
            Ok(n) => checks += n,
            Err(why) => {
                let failure = format!("graph:\n{g}{why}");
                return SuiteReport { name, checks, failure: Some(failure) };
            }
        }
    }
    SuiteReport { name, checks, failure: None }
}

fn subsets(g: &RibbonGraph) -> Vec<Vec<EdgeId>> {
    (0u64..1 << g.num_edges())
        .map(|m| (0..g.num_edges()).filter(|e| m >> e & 1 == 1).map(|e| g.label(e).clone()).collect())
        .collect()
}

fn err<E: fmt::Display>(e: E) -> String {
    e.to_string()
}

fn show(a: &[EdgeId]) -> String {
    let v: Vec<&str> = a.iter().map(EdgeId::as_str).collect();
    format!("{{{}}}", v.join(","))
}

fn dual_involution(g: &RibbonGraph) -> std::result::Result<usize, String> {
    let all = subsets(g);
    for a in &all {
        let d = partial_dual(g, a).map_err(err)?;
        let dd = partial_dual(&d, a).map_err(err)?;
        if !is_isomorphic(&dd, g) {
            return Err(format!("A = {}: applying δ(A) twice changed the graph to\n{dd}", show(a)));
        }
    }
    Ok(all.len())
}

fn dual_vertex_count(g: &RibbonGraph) -> std::result::Result<usize, String> {
    let all = subsets(g);
    for a in &all {
        let v = partial_dual(g, a).map_err(err)?.num_vertices();
        let f = g.spanning_subgraph(a).map_err(err)?.boundary_count();
        if v != f {
            return Err(format!("A = {}: v(G^δ(A)) = {v} but f(G∖Aᶜ) = {f}", show(a)));
        }
    }
    Ok(all.len())
}

fn order_three(g: &RibbonGraph) -> std::result::Result<usize, String> {
    let word: OperatorWord = "dtdtdt".parse().expect("valid word");
    for e in g.labels() {
        let h = apply_word(g, &word, [e]).map_err(err)?;
        if !is_isomorphic(&h, g) {
            return Err(format!("e = {e}: (δτ)³ changed the graph to\n{h}"));
        }
        let t = partial_petrial(&partial_petrial(g, [e]).map_err(err)?, [e]).map_err(err)?;
        if !is_isomorphic(&t, g) {
            return Err(format!("e = {e}: τ applied twice changed the graph"));
        }
    }
    Ok(g.num_edges())
}

fn engines_agree(g: &RibbonGraph) -> std::result::Result<usize, String> {
    for tag in SubgroupTag::ALL {
        let a = vp_brute(g, tag).map_err(err)?;
        let b = vp_recursive(g, tag).map_err(err)?;
        if a != b {
            return Err(format!("{tag}: state sum {a} but recursion {b}"));
        }
    }
    Ok(SubgroupTag::ALL.len())
}

fn sum(g: &RibbonGraph, tag: SubgroupTag) -> std::result::Result<Polynomial, String> {
    match tag {
        SubgroupTag::Full => vp_full_via_factor(g),
        t => vp_brute(g, t),
    }
    .map_err(err)
}

fn expect_poly(what: &str, got: &Polynomial, want: &Polynomial) -> std::result::Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn poly(terms: &[(u32, i64)]) -> Polynomial {
    Polynomial::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
}

/// Named bouquets with known polynomials plus the structural suites on them.
pub fn fixture_suites() -> Vec<SuiteReport> {
    let fixtures: Vec<RibbonGraph> = [B1, B2, B3, B4, B5].iter().map(|s| fixture(s)).collect();
    let mut out = Vec::new();

    let expected: Vec<(&str, SubgroupTag, Polynomial)> = vec![
        (B1, SubgroupTag::Delta, poly(&[(1, 3), (2, 1)])),
        (B2, SubgroupTag::Delta, poly(&[(1, 3), (2, 1)])),
        (B1, SubgroupTag::Wilson, poly(&[(1, 3), (2, 1)])),
        (B3, SubgroupTag::Wilson, poly(&[(1, 3), (2, 1)])),
        (B4, SubgroupTag::Triality, poly(&[(1, 16), (2, 10), (3, 1)])),
        (B5, SubgroupTag::Triality, poly(&[(1, 16), (2, 10), (3, 1)])),
        (B4, SubgroupTag::Full, poly(&[(1, 128), (2, 80), (3, 8)])),
        (B5, SubgroupTag::Full, poly(&[(1, 128), (2, 80), (3, 8)])),
    ];
    let mut checks = 0;
    let mut failure = None;
    for (src, tag, want) in &expected {
        let g = fixture(src);
        let res = (|| -> std::result::Result<(), String> {
            expect_poly(&format!("{src} {tag} state sum"), &vp_brute(&g, *tag).map_err(err)?, want)?;
            expect_poly(&format!("{src} {tag} recursion"), &vp_recursive(&g, *tag).map_err(err)?, want)
        })();
        checks += 1;
        if let Err(why) = res {
            failure = Some(why);
            break;
        }
    }
    out.push(SuiteReport { name: "fixture polynomials", checks, failure });

    let pairs = [(B1, B2), (B1, B3), (B4, B5)];
    let mut failure = None;
    for (a, b) in pairs {
        let (sa, sb) = (si_graph(&fixture(a)).expect("bouquet"), si_graph(&fixture(b)).expect("bouquet"));
        if signed_graph_isomorphic(&sa, &sb) {
            failure = Some(format!("{a} and {b} unexpectedly have isomorphic signed intersection graphs"));
        }
    }
    out.push(SuiteReport { name: "fixture intersection graphs differ", checks: pairs.len(), failure });

    out.push(run("partial dual is an involution", &fixtures, Box::new(dual_involution)));
    out.push(run("partial dual vertex count", &fixtures, Box::new(dual_vertex_count)));
    out.push(run("single-edge group relations", &fixtures, Box::new(order_three)));
    out
}

/// Invariant suites over `count` random connected graphs.
pub fn random_suites(seed: u64, count: usize, max_edges: usize) -> Result<Vec<SuiteReport>> {
    crate::error::guard("random corpus", 6, max_edges)?;
    let graphs = corpus::standard_corpus(seed, count, max_edges);
    let mut out = Vec::new();

    out.push(run(
        "boundary invariants",
        &graphs,
        Box::new(|g| {
            let bare = g.retain_edges(|_| false).boundary_count();
            if bare != g.num_vertices() {
                return Err(format!("f(G ∖ E) = {bare} ≠ v(G)"));
            }
            let f = g.boundary_count();
            for v in 0..g.num_vertices() {
                if g.vertex_flip(v).map_err(err)?.boundary_count() != f {
                    return Err(format!("flipping vertex {v} changed f"));
                }
            }
            let chi = g.num_vertices() as i64 - g.num_edges() as i64 + f as i64;
            if 2 * g.num_components() as i64 - chi < 0 {
                return Err("negative Euler genus".into());
            }
            Ok(1 + g.num_vertices())
        }),
    ));
    out.push(run("partial dual is an involution", &graphs, Box::new(dual_involution)));
    out.push(run("partial dual vertex count", &graphs, Box::new(dual_vertex_count)));
    out.push(run("single-edge group relations", &graphs, Box::new(order_three)));
    out.push(run("state sums agree with recursions", &graphs, Box::new(engines_agree)));
    out.push(run(
        "evaluations at one",
        &graphs,
        Box::new(|g| {
            let one = Rational::from_integer(1.into());
            let e = g.num_edges();
            let want = |b: u64| Rational::from_integer(pow(BigInt::from(b), e));
            for (tag, base) in
                [(SubgroupTag::Delta, 2), (SubgroupTag::Wilson, 2), (SubgroupTag::Triality, 3), (SubgroupTag::Full, 6)]
            {
                let got = crate::vertex_polynomial(g, tag, crate::Method::Brute).map_err(err)?.eval(&one);
                if got != want(base) {
                    return Err(format!("{tag} at x = 1 is {got}, expected {base}^{e}"));
                }
            }
            Ok(4)
        }),
    ));
    out.push(run(
        "subgroup relations",
        &graphs,
        Box::new(|g| {
            let wilson = vp_brute(g, SubgroupTag::Wilson).map_err(err)?;
            expect_poly("Wilson via Petrial", &vp_wilson_via_petrial(g).map_err(err)?, &wilson)?;
            let full = vp_full_via_factor(g).map_err(err)?;
            if g.num_edges() <= 5 {
                expect_poly("direct 6-partition sum", &vp_brute(g, SubgroupTag::Full).map_err(err)?, &full)?;
            }
            Ok(2)
        }),
    ));
    out.push(run(
        "interlace polynomial and distances",
        &graphs,
        Box::new(|g| {
            let d = ribbon_delta_matroid(g).map_err(err)?;
            if !d.validate() {
                return Err("D(G) violates symmetric exchange".into());
            }
            let lhs = vp_brute(g, SubgroupTag::Delta).map_err(err)?;
            expect_poly("x·L(D(G))", &interlace_poly(&d).map_err(err)?.shift(1), &lhs)?;
            let dx = ribbon_delta_matroid(&petrie_dual(g)).map_err(err)?;
            let wilson = vp_brute(g, SubgroupTag::Wilson).map_err(err)?;
            expect_poly("x·L(D(G^×))", &interlace_poly(&dx).map_err(err)?.shift(1), &wilson)?;
            for a in subsets(g) {
                let dist = d.distance(&a.iter().cloned().collect()).map_err(err)?;
                let f = g.spanning_subgraph(&a).map_err(err)?.boundary_count();
                if dist + 1 != f {
                    return Err(format!("A = {}: d = {dist} but f(G∖Aᶜ) = {f}", show(&a)));
                }
            }
            Ok(3)
        }),
    ));
    out.push(run(
        "transition specialisations",
        &graphs,
        Box::new(|g| {
            let q = |a, b, c| -> std::result::Result<Polynomial, String> {
                let w = WeightSystem::constant(g, Weights::from_ints(a, b, c));
                transition_poly(g, &w).map_err(err)?.to_integer().ok_or_else(|| "non-integral".to_string())
            };
            expect_poly("Q(1,1,0)", &q(1, 1, 0)?, &vp_brute(g, SubgroupTag::Delta).map_err(err)?)?;
            expect_poly("Q(0,1,1)", &q(0, 1, 1)?, &vp_brute(g, SubgroupTag::Wilson).map_err(err)?)?;
            let tri = q(1, 1, 1)?;
            expect_poly("Q(1,1,1)", &tri, &vp_brute(g, SubgroupTag::Triality).map_err(err)?)?;
            let scaled = tri.scale(&pow(BigInt::from(2), g.num_edges()));
            expect_poly("2^e·Q(1,1,1)", &scaled, &vp_full_via_factor(g).map_err(err)?)?;
            Ok(4)
        }),
    ));
    out.push(run(
        "union and join multiply",
        &graphs
            .windows(2)
            .filter(|w| w[0].num_edges() + w[1].num_edges() <= 10)
            .map(|w| w[0].disjoint_union(&w[1]))
            .collect::<Vec<_>>(),
        Box::new(|u| {
            let parts = u.components();
            let (g, h) = (&parts[0], &parts[1]);
            let joined = g.join(0, 0, h, 0, h.rotations()[0].len()).map_err(err)?;
            for tag in [SubgroupTag::Delta, SubgroupTag::Wilson, SubgroupTag::Triality, SubgroupTag::Full] {
                let pu = sum(u, tag)?;
                let prod = &sum(g, tag)? * &sum(h, tag)?;
                expect_poly(&format!("{tag} of union vs product"), &pu, &prod)?;
                let pj = sum(&joined, tag)?.shift(1);
                expect_poly(&format!("{tag} of union vs x·join"), &pu, &pj)?;
            }
            Ok(8)
        }),
    ));
    out.push(run(
        "orbit invariance and interpolation",
        &graphs,
        Box::new(|g| {
            let mut n = 0;
            for tag in [Subgroup::Delta, Subgroup::Wilson, Subgroup::Triality, Subgroup::Full] {
                let p = vp_brute(g, tag).map_err(err)?;
                if g.num_edges() > 0 && !p.is_interpolating_min_degree_one().map_err(err)? {
                    return Err(format!("{tag} polynomial {p} is not interpolating from degree one"));
                }
                if g.num_edges() > 4 {
                    continue;
                }
                for entry in orbit(g, tag).map_err(err)?.iter().step_by(7) {
                    let q = vp_brute(&entry.graph, tag).map_err(err)?;
                    if q != p {
                        return Err(format!("{tag} orbit element {} has {q}, expected {p}", entry.label));
                    }
                    n += 1;
                }
            }
            Ok(n)
        }),
    ));
    Ok(out)
}
