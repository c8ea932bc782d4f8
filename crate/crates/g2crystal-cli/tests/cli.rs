use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2crystal")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

#[test]
fn dims_table() {
    let o = run(&["dims", "--max-level", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<(u32, u64)> = text
        .lines()
        .skip(1)
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            assert_eq!(f.last(), Some(&"yes"));
            (f[0].parse().unwrap(), f[2].parse().unwrap())
        })
        .collect();
    assert_eq!(rows, vec![(0, 1), (1, 15), (2, 92), (3, 365), (4, 1113)]);
}

#[test]
fn level_one_dot_graph() {
    let o = run(&["graph", "--level", "1", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("digraph B1 {"));
    let nodes = text.lines().filter(|l| l.trim_end().ends_with("\";") && !l.contains("->")).count();
    assert_eq!(nodes, 15);
    assert!(text.contains("\"[]\" -> \"[1]\" [label=\"0\"];"));
    assert!(text.contains("\"[-6]\" -> \"[2]\" [label=\"0\"];"));
}

#[test]
fn json_graph_edges_have_inverse_certificates() {
    let o = run(&["graph", "--level", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 92);
    let edges = v["edges"].as_array().unwrap();
    assert!(!edges.is_empty());
    assert!(edges.iter().all(|e| e["inverse"] == true));
}

#[test]
fn verify_level_two_passes() {
    let o = run(&["verify", "--level", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["enumerate"]).status.code(), Some(2));
    assert_eq!(run(&["minimal", "--level", "x"]).status.code(), Some(2));
    assert_eq!(run(&["dims", "--format", "dot"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let a = run(&["phi", "--level", "2", "--format", "json"]);
    let b = run(&["phi", "--level", "2", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["enumerate", "--level", "2"]);
    let b = run(&["enumerate", "--level", "2"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().next(), Some("[]  wt=(0,0,0)  eps=(2,0,0)  phi=(2,0,0)"));
}

#[test]
fn minimal_and_connectivity() {
    let o = run(&["minimal", "--level", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("matches the listed minimal elements: yes"));
    let o = run(&["connectivity", "--level", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["square_size"], 8464);
    assert_eq!(v["square_components"], 1);
}

#[test]
fn qcheck_passes_and_dumps() {
    let dir = std::env::temp_dir().join(format!("g2crystal-qcheck-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = run(&["qcheck", "--dump", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS") || l.starts_with("info")));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["fusion"].as_array().unwrap().len(), 15);
    assert_eq!(v["zero_coefficient"], "(q^4)/(q^8+q^6+q^2+1)");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn out_flag_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("g2crystal-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("b1.dot");
    let o = run(&["graph", "--level", "1", "--format", "dot", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("digraph"));
    std::fs::remove_dir_all(&dir).unwrap();
}
