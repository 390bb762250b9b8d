use std::io::Write;
use std::process::{Command, Output, Stdio};

use ribbonpoly::{Polynomial, RibbonGraph};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ribbonpoly")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_owned()
}

#[test]
fn compute_examples() {
    assert_eq!(stdout(&["compute", "--poly", "delta", "(1,2,-1,2)"]), "3x + x^2");
    assert_eq!(stdout(&["compute", "--poly", "full", "(1,2,3,1,2,3)"]), "128x + 80x^2 + 8x^3");
    assert_eq!(stdout(&["compute", "--poly", "delta", "()"]), "x");
    assert_eq!(
        stdout(&["compute", "--poly", "triality", "--method", "recursive", "(1,2,3,1,2,-3)"]),
        "16x + 10x^2 + x^3"
    );
    assert_eq!(stdout(&["compute", "--poly", "interlace", "(1,2,-1,2)"]), "3 + x");
    assert_eq!(stdout(&["compute", "--poly", "transition", "--alpha", "0", "(1,1)"]), "2x");
    assert_eq!(stdout(&["compute", "--poly", "transition", "--gamma", "1/2", "(1,1)"]), "(3/2)x + x^2");
}

#[test]
fn json_agrees_with_text() {
    for (poly, src) in [("delta", "(1,2,-1,2)"), ("wilson", "(1,2,1,2)"), ("full", "(1,2,3,1,2,-3)"), ("tau", "(1,1)")]
    {
        let text = stdout(&["compute", "--poly", poly, src]);
        let json = stdout(&["compute", "--poly", poly, "--json", src]);
        assert!(!json.contains('\n'));
        assert_eq!(Polynomial::from_json(&json).unwrap().to_string(), text);
    }
}

#[test]
fn graph_operations() {
    let dual = RibbonGraph::parse(&stdout(&["dual", "--edges", "1", "(1,1)"])).unwrap();
    assert_eq!((dual.num_vertices(), dual.num_edges()), (2, 1));
    assert_eq!(stdout(&["petrial", "--edges", "1", "--format", "bouquet", "(1,1)"]), "(1, -1)");
    assert_eq!(stdout(&["dual", "--edges", "", "--format", "bouquet", "(1,2,-1,2)"]), "(1, 2, -1, 2)");
    let contracted = RibbonGraph::parse(&stdout(&["contract", "--edges", "1,2", "(1,2,1,2)"])).unwrap();
    assert_eq!((contracted.num_vertices(), contracted.num_edges()), (1, 0));
    assert_eq!(
        stdout(&["apply", "--word", "tt", "--edges", "1", "--format", "bouquet", "(1,2,-1,2)"]),
        "(1, 2, -1, 2)"
    );
    let json = stdout(&["apply", "--assign", "1=d,2=tdt", "--format", "json", "(1,2,-1,2)"]);
    RibbonGraph::from_json(&json).unwrap();
}

#[test]
fn orbit_and_sigraph() {
    let orbit = stdout(&["orbit", "--subgroup", "triality", "(1,1)"]);
    assert_eq!(orbit.lines().filter(|l| l.starts_with('#')).count(), 3);
    let json = stdout(&["orbit", "--subgroup", "delta", "--json", "(1,2,-1,2)"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["orbit"].as_array().unwrap().len(), 4);
    assert_eq!(stdout(&["sigraph", "(1,2,-1,2)"]), "1 -: 2\n2 +: 1");
}

#[test]
fn input_sources() {
    let path = std::env::temp_dir().join(format!("ribbonpoly-cli-{}.txt", std::process::id()));
    std::fs::write(&path, "# torus\nvertex: 1 2 1 2\n").unwrap();
    assert_eq!(stdout(&["compute", "--poly", "delta", path.to_str().unwrap()]), "2x + 2x^2");
    std::fs::remove_file(&path).unwrap();

    let mut child = Command::new(env!("CARGO_BIN_EXE_ribbonpoly"))
        .args(["compute", "--poly", "wilson", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"(1, 2, -1, 2)").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "3x + x^2");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["compute", "--poly", "delta", "(1,2"]).status.code(), Some(2));
    assert_eq!(run(&["dual", "--edges", "7", "(1,1)"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "--poly", "delta", "/nonexistent/graph"]).status.code(), Some(2));
    let big: Vec<String> = (1..=15).flat_map(|i| [i, i]).map(|i| i.to_string()).collect();
    let big = format!("({})", big.join(","));
    assert_eq!(run(&["compute", "--poly", "triality", &big]).status.code(), Some(3));
    assert_eq!(run(&["verify", "--random", "--max-edges", "9"]).status.code(), Some(3));
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--random", "--max-edges", "4", "--seed", "42", "--count", "10"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let fixtures = run(&["verify", "--fixtures"]);
    assert_eq!(fixtures.status.code(), Some(0));
    assert!(String::from_utf8(fixtures.stdout).unwrap().contains("PASS fixture polynomials"));
}

#[test]
fn random_is_seeded() {
    let args = ["random", "--vertices", "3", "--edges", "5", "--seed", "9", "--connected"];
    let g = RibbonGraph::parse(&stdout(&args)).unwrap();
    assert!(g.is_connected());
    assert_eq!(stdout(&args), stdout(&args));
}
