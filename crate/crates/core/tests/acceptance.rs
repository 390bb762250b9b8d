//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{pow, One};
use rand::seq::SliceRandom;
use rand::Rng;

use ribbonpoly::algebraic::{
    interlace_poly, ribbon_delta_matroid, si_graph, signed_graph_isomorphic, transition_poly_with, SignedGraph,
    WeightSystem, Weights,
};
use ribbonpoly::corpus::{self, fixture, Seeded, B1, B2, B3, B4, B5};
use ribbonpoly::duality::{apply_twisted, apply_word, partial_dual, OperatorWord, Subgroup, TwistedAssignment};
use ribbonpoly::vertex_poly::{vp_brute, vp_full_via_factor, vp_recursive, vp_recursive_with, vp_wilson_via_petrial};
use ribbonpoly::{is_isomorphic, vertex_polynomial, EdgeId, Method, Polynomial, Rational, RibbonGraph};

const SEED: u64 = 0x5eed;
const TAGS: [Subgroup; 4] = [Subgroup::Delta, Subgroup::Wilson, Subgroup::Triality, Subgroup::Full];

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn poly(terms: &[(u32, i64)]) -> Polynomial {
    Polynomial::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
}

fn sym(tag: Subgroup) -> &'static str {
    match tag {
        Subgroup::Delta => "P⟨δ⟩",
        Subgroup::Tau => "P⟨τ⟩",
        Subgroup::Wilson => "P⟨τδτ⟩",
        Subgroup::Triality => "P⟨δτ⟩",
        Subgroup::Full => "P⟨δ,τ⟩",
    }
}

fn two_pow(e: usize) -> BigInt {
    pow(BigInt::from(2), e)
}

/// The shared corpus: fixtures plus 200 random connected graphs, e ≤ 8.
fn the_corpus() -> Vec<RibbonGraph> {
    corpus::standard_corpus(SEED, 200, 8)
}

fn random_graphs(n: usize, max_edges: usize, rng: &mut Seeded) -> Vec<RibbonGraph> {
    (0..n)
        .map(|_| {
            let v = rng.gen_range(1..=4);
            let e = rng.gen_range(0..=max_edges);
            corpus::random_graph(v, e, rng)
        })
        .collect()
}

fn subsets(g: &RibbonGraph) -> impl Iterator<Item = Vec<EdgeId>> + '_ {
    (0u64..1 << g.num_edges())
        .map(move |m| (0..g.num_edges()).filter(|e| m >> e & 1 == 1).map(|e| g.label(e).clone()).collect())
}

fn brute(g: &RibbonGraph, tag: Subgroup) -> Polynomial {
    vertex_polynomial(g, tag, Method::Brute).expect("within guard")
}

fn criterion_1() -> Outcome {
    let cases = [
        (B1, Subgroup::Delta, poly(&[(1, 3), (2, 1)])),
        (B2, Subgroup::Delta, poly(&[(1, 3), (2, 1)])),
        (B1, Subgroup::Wilson, poly(&[(1, 3), (2, 1)])),
        (B3, Subgroup::Wilson, poly(&[(1, 3), (2, 1)])),
        (B4, Subgroup::Triality, poly(&[(3, 1), (2, 10), (1, 16)])),
        (B5, Subgroup::Triality, poly(&[(3, 1), (2, 10), (1, 16)])),
        (B4, Subgroup::Full, poly(&[(3, 8), (2, 80), (1, 128)])),
        (B5, Subgroup::Full, poly(&[(3, 8), (2, 80), (1, 128)])),
    ];
    for (src, tag, want) in &cases {
        let g = fixture(src);
        let a = vp_brute(&g, *tag).map_err(|e| e.to_string())?;
        let b = vp_recursive(&g, *tag).map_err(|e| e.to_string())?;
        if &a != want || &b != want {
            return Err(format!("{src} {tag}: state sum {a}, recursion {b}, expected {want}"));
        }
    }
    Ok(format!("{} fixture values, both engines", cases.len()))
}

fn criterion_2() -> Outcome {
    let mut r = corpus::rng(SEED ^ 2);
    let one = Rational::one();
    for _ in 0..200 {
        let g = corpus::random_small_connected(8, &mut r);
        let e = g.num_edges();
        for (tag, base) in [(Subgroup::Delta, 2), (Subgroup::Wilson, 2), (Subgroup::Triality, 3), (Subgroup::Full, 6)] {
            let got = brute(&g, tag).eval(&one);
            let want = Rational::from_integer(pow(BigInt::from(base), e));
            if got != want {
                return Err(format!("{tag} at x=1 is {got}, expected {want}\n{g}"));
            }
        }
    }
    Ok("200 random connected graphs, e ≤ 8".into())
}

fn criterion_3() -> Outcome {
    let mut r = corpus::rng(SEED ^ 3);
    let graphs = random_graphs(200, 8, &mut r);
    let mut checks = 0;
    for g in &graphs {
        for a in subsets(g) {
            let v = partial_dual(g, &a).map_err(|e| e.to_string())?.num_vertices();
            let f = g.spanning_subgraph(&a).map_err(|e| e.to_string())?.boundary_count();
            if v != f {
                return Err(format!("A = {a:?}: v = {v}, f(G∖Aᶜ) = {f}\n{g}"));
            }
            checks += 1;
        }
    }
    Ok(format!("{} graphs, {checks} subsets", graphs.len()))
}

fn criterion_4() -> Outcome {
    let mut r = corpus::rng(SEED ^ 4);
    let graphs = random_graphs(100, 7, &mut r);
    let words: Vec<OperatorWord> = ["dd", "tt", "dtdtdt"].iter().map(|w| w.parse().unwrap()).collect();
    let mut checks = 0;
    for g in &graphs {
        for e in g.labels() {
            for w in &words {
                let h = apply_word(g, w, [e]).map_err(|e| e.to_string())?;
                if !is_isomorphic(&h, g) {
                    return Err(format!("word {w} on edge {e} changed\n{g}into\n{h}"));
                }
                checks += 1;
            }
        }
    }
    Ok(format!("{} graphs, {checks} relation checks", graphs.len()))
}

/// `Σ_{H ∈ Orb(G)} x^{v(H)}` by applying every group element.
fn orbit_definition(g: &RibbonGraph, tag: Subgroup) -> Polynomial {
    let choices = tag.choices();
    let n = g.num_edges();
    let mut acc = Polynomial::zero();
    let total = choices.len().pow(n as u32);
    for mut code in 0..total {
        let mut map = BTreeMap::new();
        for label in g.labels() {
            map.insert(label.clone(), choices[code % choices.len()]);
            code /= choices.len();
        }
        let h = apply_twisted(g, &TwistedAssignment(map)).expect("total assignment");
        acc.add_term(h.num_vertices() as u32, &BigInt::one());
    }
    acc
}

fn criterion_5(corpus: &[RibbonGraph]) -> Outcome {
    let mut direct = 0;
    for g in corpus {
        let wilson = orbit_definition(g, Subgroup::Wilson);
        let via = vp_wilson_via_petrial(g).map_err(|e| e.to_string())?;
        if wilson != via {
            return Err(format!("P⟨τδτ⟩ = {wilson} but P⟨δ⟩(G^×) = {via}\n{g}"));
        }
        let factor = vp_full_via_factor(g).map_err(|e| e.to_string())?;
        let rec = vp_recursive(g, Subgroup::Full).map_err(|e| e.to_string())?;
        if factor != rec {
            return Err(format!("2^e·P⟨δτ⟩ = {factor} but P⟨δ,τ⟩ = {rec}\n{g}"));
        }
        if g.num_edges() <= 5 {
            let sum = vp_brute(g, Subgroup::Full).map_err(|e| e.to_string())?;
            if sum != factor {
                return Err(format!("direct 6^e sum {sum} but 2^e·P⟨δτ⟩ = {factor}\n{g}"));
            }
            direct += 1;
        }
    }
    Ok(format!("{} graphs, {direct} direct 6^e sums", corpus.len()))
}

fn criterion_6(corpus: &[RibbonGraph]) -> Outcome {
    for g in corpus {
        let d = ribbon_delta_matroid(g).map_err(|e| e.to_string())?;
        let lhs = brute(g, Subgroup::Delta);
        let rhs = interlace_poly(&d).map_err(|e| e.to_string())?.shift(1);
        if lhs != rhs {
            return Err(format!("P⟨δ⟩ = {lhs} but x·L = {rhs}\n{g}"));
        }
        for a in subsets(g) {
            let set: BTreeSet<EdgeId> = a.iter().cloned().collect();
            let dist = d.distance(&set).map_err(|e| e.to_string())?;
            let f = g.spanning_subgraph(&a).map_err(|e| e.to_string())?.boundary_count();
            if dist + 1 != f {
                return Err(format!("A = {a:?}: d = {dist}, f − 1 = {}\n{g}", f - 1));
            }
        }
    }
    Ok(format!("{} graphs, all subsets", corpus.len()))
}

fn random_pivot(g: &RibbonGraph, rng: &mut Seeded) -> HashMap<EdgeId, usize> {
    let mut order: Vec<EdgeId> = g.labels().to_vec();
    order.shuffle(rng);
    order.into_iter().enumerate().map(|(i, l)| (l, i)).collect()
}

fn criterion_7(corpus: &[RibbonGraph]) -> Outcome {
    let mut r = corpus::rng(SEED ^ 7);
    let specs = [((1, 1, 0), Subgroup::Delta), ((1, 0, 1), Subgroup::Wilson), ((1, 1, 1), Subgroup::Triality)];
    let mut failures: Vec<String> = Vec::new();
    let mut failing_graphs = 0;
    for g in corpus {
        let orders: Vec<HashMap<EdgeId, usize>> = (0..3).map(|_| random_pivot(g, &mut r)).collect();
        let mut bad = false;
        for ((a, b, c), tag) in specs {
            let w = WeightSystem::constant(g, Weights::from_ints(a, b, c));
            let q = transition_poly_with(g, &w, &|_| 0).map_err(|e| e.to_string())?;
            for order in &orders {
                let pivot = |h: &RibbonGraph| (0..h.num_edges()).min_by_key(|&i| order[h.label(i)]).expect("edge");
                let other = transition_poly_with(g, &w, &pivot).map_err(|e| e.to_string())?;
                if other != q {
                    return Err(format!("Q({a},{b},{c}) depends on pivot order: {q} vs {other}\n{g}"));
                }
            }
            let want = brute(g, tag).to_rational();
            if q != want {
                bad = true;
                if failures.len() < 3 {
                    failures.push(format!("Q({a},{b},{c}) = {q} but {} = {want} on\n{g}", sym(tag)));
                }
            }
            if tag == Subgroup::Triality {
                let full = vp_recursive(g, Subgroup::Full).map_err(|e| e.to_string())?.to_rational();
                let scaled = q.scale(&Rational::from_integer(two_pow(g.num_edges())));
                if scaled != full {
                    return Err(format!("2^e·Q(1,1,1) = {scaled} but P⟨δ,τ⟩ = {full}\n{g}"));
                }
            }
        }
        failing_graphs += bad as usize;
    }
    if failures.is_empty() {
        Ok(format!("{} graphs, 3 random pivot orders each", corpus.len()))
    } else {
        Err(format!("{failing_graphs} of {} graphs disagree; first cases:\n{}", corpus.len(), failures.join("\n")))
    }
}

fn join_positions(g: &RibbonGraph, h: &RibbonGraph) -> Vec<(usize, usize, usize, usize)> {
    let gaps = |k: &RibbonGraph| -> Vec<(usize, usize)> {
        (0..k.num_vertices()).flat_map(|v| (0..k.rotations()[v].len().max(1)).map(move |gap| (v, gap))).collect()
    };
    let (a, b) = (gaps(g), gaps(h));
    a.iter().flat_map(|&(v, i)| b.iter().map(move |&(w, j)| (v, i, w, j))).collect()
}

fn criterion_8() -> Outcome {
    let mut r = corpus::rng(SEED ^ 8);
    let mut pairs = 0;
    while pairs < 100 {
        let e = r.gen_range(1..=3);
        let g = corpus::random_connected(r.gen_range(1..=e + 1).min(3), e, &mut r);
        let h = corpus::random_small_connected(3, &mut r);
        let mut positions = join_positions(&g, &h);
        positions.shuffle(&mut r);
        positions.truncate(2);
        let u = g.disjoint_union(&h);
        for tag in TAGS {
            let pu = vp_brute(&u, tag).map_err(|e| e.to_string())?;
            let prod =
                &vp_brute(&g, tag).map_err(|e| e.to_string())? * &vp_brute(&h, tag).map_err(|e| e.to_string())?;
            if pu != prod {
                return Err(format!("{tag}: vp(G∪H) = {pu} but vp(G)·vp(H) = {prod}\n{u}"));
            }
            for &(v, i, w, j) in &positions {
                let joined = g.join(v, i, &h, w, j).map_err(|e| e.to_string())?;
                let pj = vp_brute(&joined, tag).map_err(|e| e.to_string())?.shift(1);
                if pj != pu {
                    return Err(format!("{tag}: x·vp(G∨H) = {pj} but vp(G∪H) = {pu}\n{joined}"));
                }
            }
        }
        pairs += 1;
    }
    Ok(format!("{pairs} pairs, two join positions each"))
}

fn all_small_bouquets() -> Vec<RibbonGraph> {
    (0..=4).flat_map(corpus::all_bouquets).collect()
}

fn is_trivial(b: &RibbonGraph) -> bool {
    let s = si_graph(b).expect("bouquet");
    let isolated = s.vertices().all(|(v, _)| s.neighbors(v).next().is_none());
    isolated
}

fn criterion_9(bouquets: &[RibbonGraph]) -> Outcome {
    for b in bouquets {
        let e = b.num_edges();
        let trivial = is_trivial(b);
        let all_twisted = b.twisted_labels().count() == e;
        let none_twisted = b.twisted_labels().count() == 0;
        let delta = brute(b, Subgroup::Delta);
        if delta.is_monomial() != (trivial && all_twisted) {
            return Err(format!("P⟨δ⟩ = {delta}, trivial = {trivial}, all non-orientable = {all_twisted}\n{b}"));
        }
        if delta.is_monomial() && delta != Polynomial::monomial(two_pow(e), 1) {
            return Err(format!("monomial P⟨δ⟩ = {delta} is not 2^e·x\n{b}"));
        }
        let wilson = brute(b, Subgroup::Wilson);
        if wilson.is_monomial() != (trivial && none_twisted) {
            return Err(format!("P⟨τδτ⟩ = {wilson}, trivial = {trivial}, all orientable = {none_twisted}\n{b}"));
        }
        if e >= 1 {
            for tag in [Subgroup::Triality, Subgroup::Full] {
                let p = vp_brute(b, tag).map_err(|e| e.to_string())?;
                if p.is_monomial() {
                    return Err(format!("{} = {p} is a monomial\n{b}", sym(tag)));
                }
            }
        }
    }
    Ok(format!("{} bouquets with e ≤ 4", bouquets.len()))
}

fn profile(s: &SignedGraph) -> Vec<(bool, usize)> {
    let mut p: Vec<(bool, usize)> =
        s.vertices().map(|(v, sign)| (sign.to_string() == "-", s.neighbors(v).count())).collect();
    p.sort();
    p
}

fn criterion_10(bouquets: &[RibbonGraph]) -> Outcome {
    struct Entry<'a> {
        graph: &'a RibbonGraph,
        si: SignedGraph,
        f: usize,
        polys: Vec<Polynomial>,
    }
    let mut buckets: BTreeMap<Vec<(bool, usize)>, Vec<Entry>> = BTreeMap::new();
    for b in bouquets {
        let si = si_graph(b).map_err(|e| e.to_string())?;
        let polys = TAGS.iter().map(|&t| vp_brute(b, t).expect("small")).collect();
        buckets.entry(profile(&si)).or_default().push(Entry { graph: b, f: b.boundary_count(), si, polys });
    }
    let mut iso_pairs = 0usize;
    for entries in buckets.values() {
        for (i, x) in entries.iter().enumerate() {
            for y in &entries[i + 1..] {
                if !signed_graph_isomorphic(&x.si, &y.si) {
                    continue;
                }
                iso_pairs += 1;
                if x.f != y.f || x.polys != y.polys {
                    return Err(format!("isomorphic SI-graphs but different invariants:\n{}{}", x.graph, y.graph));
                }
            }
        }
    }
    let converse =
        [(B1, B2, Subgroup::Delta), (B1, B3, Subgroup::Wilson), (B4, B5, Subgroup::Triality), (B4, B5, Subgroup::Full)];
    for (a, b, tag) in converse {
        let (ga, gb) = (fixture(a), fixture(b));
        let (sa, sb) = (si_graph(&ga).unwrap(), si_graph(&gb).unwrap());
        if signed_graph_isomorphic(&sa, &sb) {
            return Err(format!("{a} and {b} have isomorphic SI-graphs"));
        }
        if brute(&ga, tag) != brute(&gb, tag) {
            return Err(format!("{a} and {b} differ on {}", sym(tag)));
        }
    }
    Ok(format!("{iso_pairs} SI-isomorphic pairs, 4 converse pairs"))
}

fn criterion_11(corpus: &[RibbonGraph]) -> Outcome {
    let mut r = corpus::rng(SEED ^ 11);
    let mut checks = 0;
    for g in corpus {
        for tag in TAGS {
            let p = brute(g, tag);
            if g.num_edges() > 0 && !p.is_interpolating_min_degree_one().map_err(|e| e.to_string())? {
                return Err(format!("{} = {p} is not interpolating\n{g}", sym(tag)));
            }
            for _ in 0..20 {
                let map = g.labels().iter().map(|l| (l.clone(), *tag.choices().choose(&mut r).unwrap())).collect();
                let assignment = TwistedAssignment(map);
                let h = apply_twisted(g, &assignment).map_err(|e| e.to_string())?;
                let q = brute(&h, tag);
                if q != p {
                    return Err(format!("{} of orbit element {assignment} is {q}, expected {p}\n{g}", sym(tag)));
                }
                checks += 1;
            }
        }
    }
    Ok(format!("{} graphs, {checks} orbit elements", corpus.len()))
}

/// The Wilson specialisation that the deletion/twisted-contraction
/// recursion actually satisfies.
fn wilson_recursion_weights(corpus: &[RibbonGraph]) -> Outcome {
    for g in corpus {
        let w = WeightSystem::constant(g, Weights::from_ints(0, 1, 1));
        let q = transition_poly_with(g, &w, &|_| 0).map_err(|e| e.to_string())?;
        let want = brute(g, Subgroup::Wilson).to_rational();
        let rec = vp_recursive_with(g, Subgroup::Wilson, &|h| h.num_edges() - 1).map_err(|e| e.to_string())?;
        if q != want || rec.to_rational() != want {
            return Err(format!("Q(0,1,1) = {q}, recursion {rec}, P⟨τδτ⟩ = {want}\n{g}"));
        }
    }
    Ok(format!("Q(0,1,1) = P⟨τδτ⟩ on {} graphs", corpus.len()))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let corpus = the_corpus();
    let bouquets = all_small_bouquets();
    let criteria: Vec<Criterion> = vec![
        ("criterion 1 fixture polynomials", Box::new(criterion_1)),
        ("criterion 2 evaluations at one", Box::new(criterion_2)),
        ("criterion 3 partial dual vertex count", Box::new(criterion_3)),
        ("criterion 4 group relations", Box::new(criterion_4)),
        ("criterion 5 subgroup relations", Box::new(|| criterion_5(&corpus))),
        ("criterion 6 interlace polynomial and distances", Box::new(|| criterion_6(&corpus))),
        ("criterion 7 transition specialisations", Box::new(|| criterion_7(&corpus))),
        ("criterion 8 union and join", Box::new(criterion_8)),
        ("criterion 9 monomial characterisation", Box::new(|| criterion_9(&bouquets))),
        ("criterion 10 signed intersection graphs", Box::new(|| criterion_10(&bouquets))),
        ("criterion 11 orbit invariance and interpolation", Box::new(|| criterion_11(&corpus))),
        ("supplementary Wilson weights (0,1,1)", Box::new(|| wilson_recursion_weights(&corpus))),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let t = Instant::now();
        match run() {
            Ok(summary) => println!("PASS {name}: {summary} [{:.1?}]", t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {name} [{:.1?}]\n{}", t.elapsed(), why.trim_end());
            }
        }
    }
    println!("{} of {} passed in {:.1?}", criteria.len() - failed, criteria.len(), start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
