use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use ribbonpoly::algebraic::{
    interlace_poly, ribbon_delta_matroid, si_graph, transition_poly_with, WeightSystem, Weights,
};
use ribbonpoly::corpus;
use ribbonpoly::duality::{
    apply_twisted, apply_word, contract, orbit, partial_dual, partial_petrial, OperatorWord, Subgroup,
    TwistedAssignment,
};
use ribbonpoly::verify;
use ribbonpoly::{vertex_polynomial, EdgeId, Error, Method, Polynomial, Rational, RibbonGraph};

#[derive(Parser)]
#[command(name = "ribbonpoly", version, about = "Ribbon graphs, twisted duality and vertex polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a polynomial of a graph.
    Compute(ComputeArgs),
    /// Partial dual with respect to an edge set.
    Dual(EdgeOpArgs),
    /// Partial Petrial with respect to an edge set.
    Petrial(EdgeOpArgs),
    /// Contract edges one at a time.
    Contract(EdgeOpArgs),
    /// Apply an operator word to an edge set, or a per-edge assignment.
    Apply(ApplyArgs),
    /// List the orbit of a graph under a ribbon subgroup.
    Orbit(OrbitArgs),
    /// Signed intersection graph of a bouquet.
    Sigraph(SigraphArgs),
    /// Run the built-in verification suites.
    Verify(VerifyArgs),
    /// Generate a random graph.
    Random(RandomArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyKind {
    Delta,
    Tau,
    Wilson,
    Triality,
    Full,
    Interlace,
    Transition,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Brute,
    Recursive,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Ribbon,
    Bouquet,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SubgroupArg {
    Delta,
    Tau,
    Wilson,
    Triality,
    Full,
}

impl From<SubgroupArg> for Subgroup {
    fn from(s: SubgroupArg) -> Self {
        match s {
            SubgroupArg::Delta => Subgroup::Delta,
            SubgroupArg::Tau => Subgroup::Tau,
            SubgroupArg::Wilson => Subgroup::Wilson,
            SubgroupArg::Triality => Subgroup::Triality,
            SubgroupArg::Full => Subgroup::Full,
        }
    }
}

/// File path, inline bouquet such as "(1,2,-1,2)", or "-" for stdin.
#[derive(Args)]
struct Source {
    input: String,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, value_enum)]
    poly: PolyKind,
    #[arg(long, value_enum, default_value = "both")]
    method: MethodArg,
    #[arg(long)]
    json: bool,
    #[arg(long, default_value = "1", value_parser = parse_rational)]
    alpha: Rational,
    #[arg(long, default_value = "1", value_parser = parse_rational)]
    beta: Rational,
    #[arg(long, default_value = "1", value_parser = parse_rational)]
    gamma: Rational,
}

#[derive(Args)]
struct EdgeOpArgs {
    #[command(flatten)]
    source: Source,
    /// Comma-separated edge labels; empty for none.
    #[arg(long, allow_hyphen_values = true)]
    edges: String,
    #[arg(long, value_enum, default_value = "ribbon")]
    format: GraphFormat,
}

#[derive(Args)]
struct ApplyArgs {
    #[command(flatten)]
    source: Source,
    /// Word over {d, t}; the last letter acts first.
    #[arg(long, conflicts_with = "assign", requires = "edges")]
    word: Option<String>,
    #[arg(long)]
    edges: Option<String>,
    /// Per-edge elements, e.g. "1=d,2=tdt"; every edge must be listed.
    #[arg(long, required_unless_present = "word")]
    assign: Option<String>,
    #[arg(long, value_enum, default_value = "ribbon")]
    format: GraphFormat,
}

#[derive(Args)]
struct OrbitArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, value_enum)]
    subgroup: SubgroupArg,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SigraphArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Named fixture bouquets and structural checks on them.
    #[arg(long)]
    fixtures: bool,
    /// Invariant suites over a seeded random corpus.
    #[arg(long)]
    random: bool,
    #[arg(long, default_value_t = 6)]
    max_edges: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 40)]
    count: usize,
}

#[derive(Args)]
struct RandomArgs {
    #[arg(long, default_value_t = 1)]
    vertices: usize,
    #[arg(long)]
    edges: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    connected: bool,
    #[arg(long, value_enum, default_value = "ribbon")]
    format: GraphFormat,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim().parse::<Rational>().map_err(|e| format!("`{s}` is not a rational: {e}"))
}

enum Failure {
    Lib(Error),
    Io(String),
    Mismatch(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verify => 1,
            Failure::Lib(Error::GuardExceeded { .. }) => 3,
            Failure::Mismatch(_) => 4,
            Failure::Lib(_) | Failure::Io(_) => 2,
        }
    }
}

fn load(source: &Source) -> Result<RibbonGraph, Failure> {
    let text = match source.input.as_str() {
        "-" => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).map_err(|e| Failure::Io(format!("stdin: {e}")))?;
            buf
        }
        s if s.trim_start().starts_with('(') => s.to_owned(),
        path => std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{path}: {e}")))?,
    };
    if text.trim_start().starts_with('{') {
        Ok(RibbonGraph::from_json(&text)?)
    } else {
        Ok(RibbonGraph::parse_any(&text)?)
    }
}

fn edge_list(s: &str) -> Vec<EdgeId> {
    s.split(',').map(str::trim).filter(|l| !l.is_empty()).map(EdgeId::from).collect()
}

fn render_graph(g: &RibbonGraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Ribbon => g.to_ribbon_string(),
        GraphFormat::Json => format!("{}\n", g.to_json()),
        GraphFormat::Bouquet => match g.to_bouquet_string() {
            Some(b) => format!("{b}\n"),
            None => g.to_ribbon_string(),
        },
    }
}

fn agree<F>(method: MethodArg, mut run: F) -> Result<Polynomial, Failure>
where
    F: FnMut(Method) -> Result<Polynomial, Error>,
{
    match method {
        MethodArg::Brute => Ok(run(Method::Brute)?),
        MethodArg::Recursive => Ok(run(Method::Recursive)?),
        MethodArg::Both => {
            let a = run(Method::Brute)?;
            let b = run(Method::Recursive)?;
            if a != b {
                return Err(Failure::Mismatch(format!("brute gives {a}, recursive gives {b}")));
            }
            Ok(a)
        }
    }
}

fn interlace(g: &RibbonGraph) -> Result<Polynomial, Error> {
    let mut acc = Polynomial::one();
    for c in g.components() {
        acc = &acc * &interlace_poly(&ribbon_delta_matroid(&c)?)?;
    }
    Ok(acc)
}

fn compute(args: &ComputeArgs) -> Result<String, Failure> {
    let g = load(&args.source)?;
    let tagged = |tag: Subgroup| agree(args.method, |m| vertex_polynomial(&g, tag, m));
    let text_json = |p: &dyn std::fmt::Display, j: String| if args.json { j } else { p.to_string() };
    let out = match args.poly {
        PolyKind::Delta => tagged(Subgroup::Delta)?,
        PolyKind::Tau => tagged(Subgroup::Tau)?,
        PolyKind::Wilson => tagged(Subgroup::Wilson)?,
        PolyKind::Triality => tagged(Subgroup::Triality)?,
        PolyKind::Full => tagged(Subgroup::Full)?,
        PolyKind::Interlace => agree(args.method, |m| match m {
            Method::Brute => interlace(&g),
            // x·L = P⟨δ⟩ on every component
            Method::Recursive => {
                let p = vertex_polynomial(&g, Subgroup::Delta, Method::Recursive)?;
                let k = g.num_components() as u32;
                Ok(Polynomial::from_terms(p.terms().map(|(e, c)| (e - k, c.clone()))))
            }
        })?,
        PolyKind::Transition => {
            let w = WeightSystem::constant(&g, Weights::new(args.alpha.clone(), args.beta.clone(), args.gamma.clone()));
            let first = transition_poly_with(&g, &w, &|_| 0)?;
            if args.method == MethodArg::Both {
                let last = transition_poly_with(&g, &w, &|h| h.num_edges() - 1)?;
                if first != last {
                    return Err(Failure::Mismatch(format!("pivot orders disagree: {first} versus {last}")));
                }
            }
            return Ok(text_json(&first, first.to_json()));
        }
    };
    Ok(text_json(&out, out.to_json()))
}

fn edge_op(cmd: &Command, args: &EdgeOpArgs) -> Result<String, Failure> {
    let g = load(&args.source)?;
    let edges = edge_list(&args.edges);
    let h = match cmd {
        Command::Dual(_) => partial_dual(&g, &edges)?,
        Command::Petrial(_) => partial_petrial(&g, &edges)?,
        _ => {
            g.edge_mask(&edges)?;
            let mut h = g;
            for e in &edges {
                h = contract(&h, e)?;
            }
            h
        }
    };
    Ok(render_graph(&h, args.format))
}

fn apply(args: &ApplyArgs) -> Result<String, Failure> {
    let g = load(&args.source)?;
    let h = match (&args.word, &args.assign) {
        (Some(w), _) => {
            let word: OperatorWord = w.parse()?;
            apply_word(&g, &word, edge_list(args.edges.as_deref().unwrap_or("")))?
        }
        (None, Some(a)) => apply_twisted(&g, &a.parse::<TwistedAssignment>()?)?,
        (None, None) => unreachable!("clap requires one of --word and --assign"),
    };
    Ok(render_graph(&h, args.format))
}

fn orbit_cmd(args: &OrbitArgs) -> Result<String, Failure> {
    let g = load(&args.source)?;
    let entries = orbit(&g, args.subgroup.into())?;
    if args.json {
        let items: Vec<serde_json::Value> = entries
            .iter()
            .map(|e| {
                let graph: serde_json::Value = serde_json::from_str(&e.graph.to_json()).expect("valid json");
                json!({ "assignment": e.label.to_string(), "graph": graph })
            })
            .collect();
        return Ok(json!({ "orbit": items }).to_string());
    }
    let mut out = String::new();
    for e in &entries {
        out.push_str(&format!("# {}\n", e.label));
        out.push_str(&render_graph(&e.graph, GraphFormat::Bouquet));
    }
    Ok(out.trim_end().to_owned())
}

fn sigraph(args: &SigraphArgs) -> Result<String, Failure> {
    let s = si_graph(&load(&args.source)?)?;
    if args.json {
        let vertices: Vec<serde_json::Value> = s
            .vertices()
            .map(|(v, sign)| {
                let nbrs: Vec<&str> = s.neighbors(v).map(EdgeId::as_str).collect();
                json!({ "label": v.as_str(), "sign": sign.to_string(), "neighbors": nbrs })
            })
            .collect();
        return Ok(json!({ "vertices": vertices }).to_string());
    }
    Ok(s.to_string().trim_end().to_owned())
}

fn verify_cmd(args: &VerifyArgs) -> Result<String, Failure> {
    let both = !args.fixtures && !args.random;
    let mut reports = Vec::new();
    if args.fixtures || both {
        reports.extend(verify::fixture_suites());
    }
    if args.random || both {
        reports.extend(verify::random_suites(args.seed, args.count, args.max_edges)?);
    }
    for r in &reports {
        println!("{r}");
    }
    if reports.iter().all(verify::SuiteReport::passed) {
        Ok(format!("all {} suites passed", reports.len()))
    } else {
        Err(Failure::Verify)
    }
}

fn random(args: &RandomArgs) -> Result<String, Failure> {
    if args.vertices == 0 && args.edges > 0 {
        return Err(Failure::Io("edges need at least one vertex".into()));
    }
    if args.connected && args.edges + 1 < args.vertices {
        return Err(Failure::Io(format!("a connected graph on {} vertices needs more edges", args.vertices)));
    }
    let mut rng = corpus::rng(args.seed);
    let g = if args.connected {
        corpus::random_connected(args.vertices, args.edges, &mut rng)
    } else {
        corpus::random_graph(args.vertices, args.edges, &mut rng)
    };
    Ok(render_graph(&g, args.format).trim_end().to_owned())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute(a) => compute(a),
        c @ (Command::Dual(a) | Command::Petrial(a) | Command::Contract(a)) => {
            edge_op(c, a).map(|s| s.trim_end().to_owned())
        }
        Command::Apply(a) => apply(a).map(|s| s.trim_end().to_owned()),
        Command::Orbit(a) => orbit_cmd(a),
        Command::Sigraph(a) => sigraph(a),
        Command::Verify(a) => verify_cmd(a),
        Command::Random(a) => random(a),
    };
    match result {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            match &f {
                Failure::Lib(e) => eprintln!("error: {e}"),
                Failure::Io(m) => eprintln!("error: {m}"),
                Failure::Mismatch(m) => eprintln!("error: method mismatch: {m}"),
                Failure::Verify => eprintln!("verification failed"),
            }
            ExitCode::from(f.code())
        }
    }
}
