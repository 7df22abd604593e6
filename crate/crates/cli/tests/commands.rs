use std::io::Write;
use std::process::Command;

use matchpoly_cli::*;

const K3: &str = "1 2\n2 3\n3 1\n";
const C4: &str = "1 2\n2 3\n3 4\n4 1\n";
const P3: &str = "a b\nb c\n";

fn config(text: &str) -> CliConfig {
    CliConfig::new(Input::Text(text.into()))
}

fn json(text: &str, output: OutputFormat) -> CliConfig {
    CliConfig {
        output_format: output,
        ..config(text)
    }
}

fn value(o: &Outcome) -> serde_json::Value {
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    serde_json::from_str(&o.stdout).unwrap()
}

#[test]
fn analyze_triangle() {
    let o = cmd_analyze(&config(K3));
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("matchings: 4\n"));
    assert!(o.stdout.contains("skeleton vertices: 4\n"));
    assert!(o.stdout.contains("regular: yes\n"));
    assert!(o.stdout.contains("bonds: 1-2, 1-3, 2-3\n"));

    let v = value(&cmd_analyze(&json(K3, OutputFormat::Json)));
    assert_eq!(v["matching_count"], "4");
    assert_eq!(v["skeleton"]["regular"], true);
    assert_eq!(v["stars_and_triangles"], true);
}

#[test]
fn analyze_four_cycle_degrees() {
    let v = value(&cmd_analyze(&json(C4, OutputFormat::Json)));
    assert_eq!(v["skeleton"]["min_degree"], 4);
    assert_eq!(v["skeleton"]["max_degree"], 5);
    assert_eq!(v["bonds"].as_array().unwrap().len(), 0);
}

#[test]
fn analyze_beyond_cap_still_reports() {
    let cfg = CliConfig {
        max_vertices: 2,
        ..config(C4)
    };
    let o = cmd_analyze(&cfg);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("skeleton not built: 7 matchings"));
}

#[test]
fn bad_input_is_a_parse_error() {
    let o = cmd_analyze(&config("1 2 3\n"));
    assert_eq!(o.code, EXIT_PARSE);
    assert!(o.stderr.contains("line 1"));
    let o = cmd_analyze(&config("1 1\n"));
    assert_eq!(o.code, EXIT_PARSE);
    let missing = CliConfig::new(Input::Path("/nonexistent/graph.txt".into()));
    assert_eq!(cmd_skeleton(&missing).code, EXIT_PARSE);
}

#[test]
fn zero_cap_is_rejected() {
    let cfg = CliConfig {
        max_vertices: 0,
        ..config(K3)
    };
    assert_eq!(cmd_analyze(&cfg).code, EXIT_PARSE);
}

#[test]
fn degree_of_empty_matching_is_edge_count() {
    for text in [K3, C4, P3] {
        let v = value(&cmd_degree(&json(text, OutputFormat::Json), ""));
        let m = text.lines().count();
        assert_eq!(v["breakdown"]["total"], m);
        assert_eq!(v["closed_form"]["total"], m);
        assert_eq!(v["closed_form"]["k"], m);
    }
}

#[test]
fn degree_with_and_without_closed_form() {
    let star_and_triangle = "1 2\n2 3\n1 3\n4 5\n";
    let v = value(&cmd_degree(&json(star_and_triangle, OutputFormat::Json), "4-5,1-2"));
    assert_eq!(v["breakdown"]["total"], 4);
    assert_eq!(v["closed_form"]["k"], 0);

    let v = value(&cmd_degree(&json(C4, OutputFormat::Json), "1-2,3-4"));
    assert_eq!(v["breakdown"]["total"], 5);
    assert!(v.get("closed_form").is_none());
    assert_eq!(v["structures"].as_array().unwrap().len(), 5);

    let o = cmd_degree(&config(C4), "e1");
    assert!(o.stdout.contains("degree: 5\n"), "{}", o.stdout);
}

#[test]
fn invalid_matchings_exit_three() {
    for spec in ["1-2,2-3", "1-3", "e9", "1-2,e3", "1-2,1-2"] {
        assert_eq!(cmd_degree(&config(C4), spec).code, EXIT_INVALID_MATCHING, "{spec}");
    }
}

#[test]
fn skeleton_exports() {
    let dot = cmd_skeleton(&json(K3, OutputFormat::Dot));
    assert_eq!(dot.code, 0);
    assert_eq!(dot.stdout.matches("[label=").count(), 4);
    assert_eq!(dot.stdout, cmd_skeleton(&config(K3)).stdout);

    let v = value(&cmd_skeleton(&json(C4, OutputFormat::Json)));
    assert_eq!(v["skeleton"]["vertices"], 7);
    assert_eq!(v["skeleton"]["matchings"].as_array().unwrap().len(), 7);
    assert_eq!(v["skeleton"]["matchings"][0]["name"], "∅");
    assert_eq!(v["skeleton"]["matchings"][0]["degree"], 4);
}

#[test]
fn skeleton_over_cap_exits_four() {
    let k6: String = (1..=6)
        .flat_map(|i| (i + 1..=6).map(move |j| format!("{i} {j}\n")))
        .collect();
    let cfg = CliConfig {
        max_vertices: 50,
        ..config(&k6)
    };
    let o = cmd_skeleton(&cfg);
    assert_eq!(o.code, EXIT_CAP);
    assert!(o.stderr.contains("76"));
    assert_eq!(cmd_verify(&cfg).code, EXIT_CAP);
}

#[test]
fn verify_graphs_and_batches() {
    for text in [K3, C4, P3, "Dhc\n"] {
        let o = cmd_verify(&config(text));
        assert_eq!(o.code, 0, "{}", o.stdout);
        assert!(!o.stdout.contains("FAIL"));
    }
    let v = value(&cmd_verify(&json(K3, OutputFormat::Json)));
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));

    let batch = CliConfig {
        seed: 11,
        ..CliConfig::new(Input::Random { count: 12 })
    };
    let a = cmd_verify(&batch);
    assert_eq!(a.code, 0, "{}", a.stdout);
    assert!(a.stdout.ends_with("skipped, 0 failed\n"));
    assert_eq!(a, cmd_verify(&batch));
}

#[test]
fn min_degree_examples() {
    let names = |text: &str| -> Vec<Vec<String>> {
        let v = value(&cmd_min_degree(&json(text, OutputFormat::Json)));
        assert_eq!(v["cross_checked"], true);
        serde_json::from_value(v["matchings"].clone()).unwrap()
    };
    assert_eq!(names(C4), vec![Vec::<String>::new()]);
    assert_eq!(names(K3).len(), 4);
    assert_eq!(names(P3), vec![vec![], vec!["a-b".to_string()], vec!["b-c".to_string()]]);
}

#[test]
fn min_degree_without_cross_check() {
    let cfg = CliConfig {
        max_vertices: 1,
        ..config(P3)
    };
    let o = cmd_min_degree(&cfg);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("not cross-checked"));
}

#[test]
fn dot_is_only_for_skeletons() {
    assert_eq!(cmd_analyze(&json(K3, OutputFormat::Dot)).code, EXIT_PARSE);
}

#[test]
fn binary_reads_stdin_and_reports_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_matchpoly");
    let mut child = Command::new(bin)
        .args(["skeleton", "-", "--output", "json"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(K3.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["skeleton"]["edges"], 6);

    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(C4.as_bytes()).unwrap();
    let status = Command::new(bin)
        .args(["degree", "--matching", "1-2,2-3"])
        .arg(file.path())
        .output()
        .unwrap()
        .status;
    assert_eq!(status.code(), Some(EXIT_INVALID_MATCHING));

    let out = Command::new(bin).args(["analyze", "--max-vertices", "0", "x"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let help = Command::new(bin).args(["verify", "--help"]).output().unwrap();
    let text = String::from_utf8(help.stdout).unwrap();
    for flag in ["--format", "--output", "--max-vertices", "--seed", "--random"] {
        assert!(text.contains(flag), "{flag}");
    }
    let help = Command::new(bin).args(["degree", "--help"]).output().unwrap();
    assert!(String::from_utf8(help.stdout).unwrap().contains("--matching"));
}
