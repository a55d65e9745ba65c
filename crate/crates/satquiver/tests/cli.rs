//! End-to-end tests of the satquiver binary: output shapes, exit codes,
//! cache behavior and byte-level determinism.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_satquiver"))
}

fn run(args: &[&str], dir: &Path) -> Output {
    bin()
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn decompose_matches_reference_lines() {
    let dir = tempfile::tempdir().unwrap();
    for group in ["B3", "C3", "D3"] {
        let out = run(&["decompose", group, "1,0,0", "1,0,0"], dir.path());
        assert!(out.status.success());
        assert_eq!(stdout(&out), "(2):1\n(1,1):1\n(0):1\n", "{group}");
    }
    let out = run(&["decompose", "D3", "2,0,0", "2,0,0"], dir.path());
    assert_eq!(
        stdout(&out),
        "(4):1\n(3,1):1\n(2,2):1\n(2):1\n(1,1):1\n(0):1\n"
    );
    let trivial = run(&["decompose", "C2", "0,0", "0,0"], dir.path());
    assert_eq!(stdout(&trivial), "(0):1\n");
}

#[test]
fn invariant_values_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let zero = run(
        &["--no-cache", "invariant", "B2", "1,0", "1,0", "1,0"],
        dir.path(),
    );
    assert!(zero.status.success());
    assert_eq!(stdout(&zero).trim(), "0");

    let pos = run(
        &["--no-cache", "invariant", "B2", "2,0", "2,0", "2,0"],
        dir.path(),
    );
    assert_eq!(stdout(&pos).trim(), "1");

    let selfdual = run(&["--no-cache", "invariant", "C2", "1,1", "1,1"], dir.path());
    assert_eq!(stdout(&selfdual).trim(), "1");

    // usage errors exit 2
    let bad = run(&["invariant", "E8", "1,0"], dir.path());
    assert_eq!(bad.status.code(), Some(2));
    let bad2 = run(&["decompose", "B2", "1,2", "1,0"], dir.path());
    assert_eq!(bad2.status.code(), Some(2));
    // half-integral weights need a Spin tag
    let bad3 = run(&["invariant", "B2", "3/2,1/2", "3/2,1/2"], dir.path());
    assert_eq!(bad3.status.code(), Some(2));
    let ok = run(
        &["--no-cache", "invariant", "SpinB2", "3/2,1/2", "3/2,1/2"],
        dir.path(),
    );
    assert!(ok.status.success());
    assert_eq!(stdout(&ok).trim(), "1");
}

#[test]
fn saturate_exit_zero_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "--no-cache",
        "--format",
        "csv",
        "saturate",
        "B2",
        "--max-part",
        "2",
        "--arms",
        "3",
        "--nmax",
        "2",
    ];
    let first = run(&args, dir.path());
    assert!(first.status.success());
    let second = run(&args, dir.path());
    assert_eq!(stdout(&first), stdout(&second), "byte-identical reruns");
    assert!(stdout(&first).starts_with("weights,m1,m2,m_factor\n"));
    // the (1)^3 row shows the factor-2 jump
    assert!(stdout(&first).contains("1,0;1,0;1,0,0,"));
}

#[test]
fn factor_one_is_refuted_with_exit_1() {
    // the saturation factor cannot be 1: scanning against factor 1 must
    // surface the (1)^3 counterexample and exit 1
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        &[
            "--no-cache",
            "saturate",
            "B2",
            "--max-part",
            "1",
            "--arms",
            "3",
            "--nmax",
            "2",
            "--factor",
            "1",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("counterexample 1,0;1,0;1,0"), "{text}");
}

#[test]
fn cache_hit_matches_cold_value() {
    let dir = tempfile::tempdir().unwrap();
    let cached = [
        "--cache",
        "inv.jsonl",
        "invariant",
        "B2",
        "2,0",
        "2,0",
        "2,0",
    ];
    let cold = run(&cached, dir.path());
    assert!(cold.status.success());
    assert!(dir.path().join("inv.jsonl").exists());
    let warm = run(&cached, dir.path());
    assert_eq!(stdout(&cold), stdout(&warm));
    let nocache = run(
        &["--no-cache", "invariant", "B2", "2,0", "2,0", "2,0"],
        dir.path(),
    );
    assert_eq!(stdout(&warm), stdout(&nocache));
    // the warm run actually hit the cache
    assert!(String::from_utf8_lossy(&warm.stderr).contains("cache hit"));
}

#[test]
fn saturate_cache_reuse_is_consistent() {
    let dir = tempfile::tempdir().unwrap();
    let base = [
        "--format",
        "csv",
        "--cache",
        "scan.jsonl",
        "saturate",
        "C2",
        "--max-part",
        "2",
        "--arms",
        "3",
        "--nmax",
        "2",
    ];
    let cold = run(&base, dir.path());
    assert!(cold.status.success());
    let warm = run(&base, dir.path());
    assert_eq!(stdout(&cold), stdout(&warm));
    let mut nocache: Vec<&str> = base.to_vec();
    nocache[2] = "--no-cache";
    nocache.remove(3);
    let fresh = run(&nocache, dir.path());
    assert_eq!(stdout(&fresh), stdout(&warm));
}

#[test]
fn flagq_alpha_and_translate() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        &[
            "--format", "json", "flagq", "alpha", "--n", "2", "--r", "3", "--delta", "0",
            "--weights", "2;2;4",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["alpha"]["alpha_u"], 4);
    assert_eq!(v["alpha"]["values"]["u"], 4);
    assert_eq!(v["alpha"]["values"]["tx3_1"], 0);
    assert_eq!(v["feasibility"], "solved");

    let nod = run(
        &["--format", "json", "flagq", "translate", "--weights", "1;1;2"],
        dir.path(),
    );
    let v: serde_json::Value = serde_json::from_str(stdout(&nod).trim()).unwrap();
    assert_eq!(v["feasibility"], "no-determinantal");
    assert!(v["sigma_lift"].is_null());
}

#[test]
fn flagq_grassdim() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        &["flagq", "grassdim", "--n", "2", "--delta", "1", "--gamma", "1,2,1"],
        dir.path(),
    );
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "4");
}

#[test]
fn flagq_build_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        &["flagq", "build", "--r", "1", "--n", "1", "--delta", "1", "--sign", "+"],
        dir.path(),
    );
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("vertex u"));
    assert!(text.contains("relation 1*ta1_1.a1_1"));
    // the emitted text parses back
    let (q, rels, sym) = satquiver::quiver::parse_quiver_file(&text).unwrap();
    assert_eq!(q.vertex_count(), 3);
    assert_eq!(rels.len(), 1);
    assert!(sym.is_some());
}

#[test]
fn ext_subcommand_matches_worked_example() {
    let dir = tempfile::tempdir().unwrap();
    // the extension quiver of 1→2→3 with ba = 0, drawn with level-0 row
    // carrying the submodule
    std::fs::write(
        dir.path().join("qe.quiver"),
        "\
vertex 0:1\nvertex 0:2\nvertex 0:3\nvertex 1:1\nvertex 1:2\nvertex 1:3\n\
arrow a0 0:1 0:2\narrow ad 1:1 0:2\narrow a1 1:1 1:2\n\
arrow b0 0:2 0:3\narrow bd 1:2 0:3\narrow b1 1:2 1:3\n\
relation 1*b0.a0\nrelation 1*b0.ad + 1*bd.a1\nrelation 1*b1.a1\n",
    )
    .unwrap();
    std::fs::write(
        dir.path().join("m1.rep"),
        "field 32003\ndim 0:3 1\ndim 1:1 1\n",
    )
    .unwrap();
    std::fs::write(
        dir.path().join("m2.rep"),
        "field 32003\ndim 0:1 1\ndim 1:3 1\n",
    )
    .unwrap();
    let out = run(&["ext", "qe.quiver", "m1.rep"], dir.path());
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "2 0 1");
    let out2 = run(&["ext", "qe.quiver", "m2.rep"], dir.path());
    assert_eq!(stdout(&out2).trim(), "2 0 0");
    // projective source rep: no higher ext
    std::fs::write(
        dir.path().join("p.rep"),
        "field 32003\ndim 1:1 1\ndim 1:2 1\nmap a1 1\n",
    )
    .unwrap();
    let out3 = run(&["ext", "qe.quiver", "p.rep"], dir.path());
    let text = stdout(&out3);
    let fields: Vec<&str> = text.trim().split(' ').collect();
    assert_eq!(fields[1], "0");
    assert_eq!(fields[2], "0");
}

#[test]
fn budget_exhaustion_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        &[
            "--budget", "2", "flagq", "horn", "--n", "1", "--delta", "0", "--weights", "2;2",
            "--filtered", "--samples", "2",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn filtered_horn_small_case() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        &[
            "--format", "json", "flagq", "horn", "--n", "1", "--delta", "0", "--weights",
            "2;2", "--filtered", "--samples", "8",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    // ((2),(2)) in C1 has an invariant, so the filtered Horn check holds
    assert_eq!(v["horn"], true);
    assert_eq!(v["generic_ext1_estimate"], 0);
}

#[test]
fn json_outputs_carry_schema() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["--format", "json", "decompose", "B2", "1,0", "1,0"],
        vec!["--format", "json", "--no-cache", "invariant", "B2", "1,0", "1,0"],
        vec![
            "--format", "json", "flagq", "grassdim", "--n", "1", "--delta", "0", "--gamma",
            "0,1,0",
        ],
    ] {
        let out = run(&args, dir.path());
        assert!(out.status.success(), "{args:?}");
        let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
        assert_eq!(v["schema"], "satquiver/1", "{args:?}");
    }
}
