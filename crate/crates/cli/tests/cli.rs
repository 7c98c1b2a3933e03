use std::io::Write;
use std::process::Command;

use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut argv = vec!["disting"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = disting_cli::run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn last_json(text: &str) -> Value {
    serde_json::from_str(text.lines().last().expect("output")).unwrap()
}

#[test]
fn k2_index_is_undefined() {
    let (code, _, err) = run(&["index"], "A_\n");
    assert_eq!(code, 2);
    assert!(err.contains("D' undefined for K_2"), "{err}");
}

#[test]
fn windmill_formula() {
    let (code, out, _) = run(
        &[
            "formula",
            "--family",
            "windmill-dprime",
            "--n",
            "2",
            "--k",
            "3",
        ],
        "",
    );
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "2");
    let (_, out, _) = run(
        &["formula", "--family", "windmill-d", "--n", "3", "--k", "3"],
        "",
    );
    assert_eq!(out.trim(), "3");
}

#[test]
fn kpq_and_known_formulas() {
    let (code, out, _) = run(
        &[
            "formula", "--family", "kpq", "--p", "3", "--q", "3", "--json",
        ],
        "",
    );
    assert_eq!(code, 0);
    let v = last_json(&out);
    assert_eq!(v["value"], 3);
    assert_eq!(v["detail"]["method"], "exact-search");
    let (_, out, _) = run(
        &["formula", "--family", "known", "--of", "cycle", "--n", "5"],
        "",
    );
    assert_eq!(out.trim(), "3");
    let (code, _, err) = run(&["formula", "--family", "known"], "");
    assert_eq!(code, 2);
    assert!(err.contains("--of"));
}

#[test]
fn survey_sqrt_plus_one() {
    let args = [
        "survey",
        "--order-max",
        "5",
        "--min-degree",
        "2",
        "--bound",
        "sqrt-plus-one",
        "--json",
    ];
    let (code, out, _) = run(&args, "");
    assert_eq!(code, 0);
    let summary = last_json(&out);
    assert_eq!(summary["summary"]["violated"], 0);
    let reports = out.lines().count() - 1;
    assert_eq!(summary["summary"]["total"], reports);
    let first: Value = serde_json::from_str(out.lines().next().unwrap()).unwrap();
    for key in [
        "graph",
        "n",
        "m",
        "delta",
        "Delta",
        "d_prime",
        "bound",
        "bound_kind",
        "holds",
        "elapsed_ms",
    ] {
        assert!(first.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn survey_conjecture_and_human_output() {
    let (code, out, _) = run(
        &[
            "survey",
            "--order-max",
            "5",
            "--min-degree",
            "3",
            "--bound",
            "conjecture",
            "--dedup",
        ],
        "",
    );
    assert_eq!(code, 0);
    assert!(out.contains("conjecture-plus-one: total"));
    assert!(out.contains("conjecture-minimally: total"));
    assert!(out.contains("violated 0"));
}

#[test]
fn survey_from_stdin_reports_filtered_graphs() {
    // C_6 meets δ ≥ 2; the path P_3 does not.
    let (code, out, _) = run(
        &["survey", "--bound", "sqrt-plus-one", "--json"],
        "EhEG\nBg\n",
    );
    assert_eq!(code, 0);
    let s = last_json(&out);
    assert_eq!(s["summary"]["total"], 1);
    assert_eq!(s["summary"]["filtered"], 1);
}

#[test]
fn input_skips_comments_and_reports_line_numbers() {
    let (code, out, _) = run(&["index"], "# header\n\nCw\nD~{\n");
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2);
    let (code, _, err) = run(&["index"], "Cw\nC!!\n");
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn index_and_number_values() {
    let (_, out, _) = run(&["index"], "Bw\n");
    assert_eq!(out.trim(), "Bw\t3");
    let (_, out, _) = run(&["number", "--json"], "Bw\n");
    assert_eq!(last_json(&out)["d"], 3);
    // K_3 with at most two labels: none exists.
    let (code, _, err) = run(&["index", "--max-labels", "2"], "Bw\n");
    assert_eq!(code, 1);
    assert!(err.contains("at most 2"), "{err}");
}

#[test]
fn label_methods() {
    let (code, out, _) = run(
        &["label", "--method", "windmill", "--n", "2", "--k", "3"],
        "",
    );
    assert_eq!(code, 0);
    let v = last_json(&out);
    assert_eq!(v["labeling"]["labels_used"], 2);
    assert_eq!(v["labeling"]["method"], "windmill");

    for (method, accepted) in [
        ("exact", &["exact"][..]),
        ("layered", &["layered", "exact-fallback"][..]),
        ("two-minimally", &["two-minimally", "exact-fallback"][..]),
    ] {
        // C_7.
        let (code, out, err) = run(&["label", "--method", method], "FhCKG\n");
        assert_eq!(code, 0, "{method}: {err}");
        let v = last_json(&out);
        let m = v["labeling"]["method"].as_str().unwrap();
        assert!(accepted.contains(&m), "{method} reported {m}");
        assert_eq!(v["labeling"]["edges"].as_array().unwrap().len(), 7);
    }

    // K_{2,4} is excluded from the two-minimally construction.
    let (code, _, err) = run(&["label", "--method", "two-minimally"], "E]r?\n");
    assert_eq!(code, 2, "{err}");
    assert!(err.contains("r = 2"), "{err}");
}

#[test]
fn gen_families() {
    let (_, out, _) = run(&["gen", "--family", "cycle", "--n", "7", "--graph6"], "");
    assert_eq!(out.trim(), "FhCKG");
    let (_, out, _) = run(
        &["gen", "--family", "wind", "--blades", "1x3,1x4", "--graph6"],
        "",
    );
    let g = disting::parse_graph6(out.trim()).unwrap();
    assert_eq!((g.order(), g.size()), (6, 7));
    let (_, out, _) = run(&["gen", "--family", "kpq", "--p", "2", "--q", "3"], "");
    assert!(out.starts_with("n=5 m=6"));
    let (_, out, _) = run(
        &[
            "gen",
            "--family",
            "connected",
            "--n",
            "4",
            "--dedup",
            "--graph6",
        ],
        "",
    );
    assert_eq!(out.lines().count(), 6);
    let (code, _, _) = run(&["gen", "--family", "cycle", "--n", "2"], "");
    assert_eq!(code, 2);
}

#[test]
fn bad_arguments_exit_two() {
    assert_eq!(run(&["bogus"], "").0, 2);
    assert_eq!(
        run(&["survey", "--bound", "nope", "--order-max", "3"], "").0,
        2
    );
    assert_eq!(run(&["label", "--method", "windmill"], "").0, 2);
    let (code, out, _) = run(&["--help"], "");
    assert_eq!(code, 0);
    assert!(out.contains("survey"));
}

#[test]
fn file_input_and_json_path() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("graphs.g6");
    let mut f = std::fs::File::create(&input).unwrap();
    writeln!(f, "# three graphs\nCw\nD~{{\nEs\\o").unwrap();
    drop(f);
    let (code, out, _) = run(&["index", "--file", input.to_str().unwrap()], "");
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 3);

    let report = dir.path().join("out.jsonl");
    let args = [
        "survey",
        "--bound",
        "sqrt-plus-one",
        "--file",
        input.to_str().unwrap(),
        "--json",
        report.to_str().unwrap(),
    ];
    let (code, out, _) = run(&args, "");
    assert_eq!(code, 0);
    // The star K_{1,3} (Cw) is filtered out by δ ≥ 2.
    assert_eq!(last_json(&out)["summary"]["total"], 2);
    let written = std::fs::read_to_string(&report).unwrap();
    assert_eq!(written.lines().count(), 3);
}

#[test]
fn budget_from_environment() {
    let bin = env!("CARGO_BIN_EXE_disting");
    let out = Command::new(bin)
        .args([
            "survey",
            "--order-max",
            "5",
            "--min-degree",
            "4",
            "--bound",
            "sqrt-plus-one",
            "--json",
        ])
        .env("DISTING_BUDGET", "group=10")
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let v = last_json(&text);
    // K_5 has 120 automorphisms, beyond the group budget.
    assert!(v["summary"]["budget_errors"].as_u64().unwrap() >= 1);

    let out = Command::new(bin)
        .args(["index"])
        .env("DISTING_BUDGET", "nonsense=1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
