use std::process::{Command, Output};

fn vqnet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vqnet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn generate_edge_lists() {
    let o = vqnet(&["generate", "vq", "3", "edgelist"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 12);
    assert!(stdout(&o).contains("011 110\n"));
    assert_eq!(stderr(&o), "VQ3: 8 vertices, 12 edges\n");

    let o = vqnet(&["generate", "q", "2", "--format", "edgelist"]);
    assert_eq!(stdout(&o), "00 01\n00 10\n01 11\n10 11\n");
}

#[test]
fn generate_dot_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("vq10.dot");
    let o = vqnet(&[
        "generate",
        "vq",
        "10",
        "dot",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("VQ10: 1024 vertices, 5120 edges\n"));
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("graph VQ10 {"));
    assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 5120);
}

#[test]
fn generate_respects_the_cap() {
    let o = vqnet(&["generate", "vq", "12", "--cap", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("exceeds cap 10"));
    assert!(o.stdout.is_empty());
}

#[test]
fn circulant_needs_a_connection_set() {
    assert_eq!(
        vqnet(&["generate", "circulant", "8"]).status.code(),
        Some(2)
    );
    assert_eq!(
        vqnet(&["generate", "circulant", "8", "--connection", "1,4"])
            .status
            .code(),
        Some(2)
    );
    let o = vqnet(&["generate", "circulant", "8", "--connection", "1,4,7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 12);
}

#[test]
fn neighbors_and_adjacency() {
    let o = vqnet(&["neighbors", "011"]);
    assert_eq!(stdout(&o), "1 010 normal\n2 001 normal\n3 110 crossing\n");

    let o = vqnet(&["adjacent", "111", "010"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "111 010: adjacent, dimension 3, crossing\n");

    let o = vqnet(&["adjacent", "011", "111"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not adjacent"));

    assert_eq!(vqnet(&["adjacent", "011", "11"]).status.code(), Some(2));
    assert_eq!(vqnet(&["neighbors", "01x"]).status.code(), Some(2));
}

#[test]
fn transport_examples() {
    let o = vqnet(&["transport", "1", "0", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("automorphism: sigma1(1)\n"), "{text}");
    assert!(text.contains("verified"));

    for (n, x, y) in [("4", "0101", "1101"), ("6", "000000", "110101")] {
        let o = vqnet(&["transport", n, x, y]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains(&format!("image: {x} -> {y} ok")));
        assert!(stdout(&o).contains(&format!("verified: automorphism of VQ{n}")));
    }
}

#[test]
fn transport_above_the_cap_skips_verification() {
    let x = "0".repeat(40);
    let y = "1".repeat(40);
    let o = vqnet(&["transport", "40", &x, &y]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verification skipped: n = 40 exceeds size cap 20"));
    assert!(stdout(&o).contains(&format!("image: {x} -> {y} ok")));
}

#[test]
fn transport_rejects_malformed_labels() {
    assert_eq!(
        vqnet(&["transport", "3", "010", "0102"]).status.code(),
        Some(2)
    );
    assert_eq!(
        vqnet(&["transport", "3", "01", "010"]).status.code(),
        Some(2)
    );
    assert_eq!(vqnet(&["transport", "3"]).status.code(), Some(2));
}

#[test]
fn transport_report_is_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let o = vqnet(&[
        "transport",
        "4",
        "0101",
        "1101",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["verdict"], "verified");
    assert_eq!(v["image"], "1101");
}

#[test]
fn verify_modes() {
    let o = vqnet(&["verify", "4", "--mode", "full"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "VQ4: 16/16 targets verified\n");

    let o = vqnet(&["verify", "12", "--mode", "sampled", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "VQ12: 100/100 pairs verified\n");

    let o = vqnet(&["verify", "10", "--mode", "full"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("resource limit"));
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("caps.toml");
    std::fs::write(&cfg, "exhaustive_cap = 10\nsample_count = 7\n").unwrap();
    let cfg = cfg.to_str().unwrap();

    let o = vqnet(&["verify", "10", "--config", cfg]);
    assert_eq!(stdout(&o), "VQ10: 1024/1024 targets verified\n");
    let o = vqnet(&["verify", "10", "--mode", "sampled", "--config", cfg]);
    assert_eq!(stdout(&o), "VQ10: 7/7 pairs verified\n");
    // --cap below the file's exhaustive_cap is a usage error.
    assert_eq!(
        vqnet(&["verify", "10", "--config", cfg, "--cap", "9"])
            .status
            .code(),
        Some(2)
    );

    std::fs::write(dir.path().join("bad.toml"), "sizecap = 3\n").unwrap();
    let bad = dir.path().join("bad.toml");
    let o = vqnet(&["verify", "3", "--config", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("invalid config"));
}

#[test]
fn seeds_change_sampled_reports() {
    let dir = tempfile::tempdir().unwrap();
    let read = |seed: &str| {
        let path = dir.path().join(format!("r{seed}.json"));
        let o = vqnet(&[
            "verify",
            "9",
            "--mode",
            "sampled",
            "--seed",
            seed,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        std::fs::read_to_string(path).unwrap()
    };
    assert_eq!(read("1"), read("1"));
    let v: serde_json::Value = serde_json::from_str(&read("5")).unwrap();
    assert_eq!(v["mode"]["seed"], 5);
    assert_eq!(v["verified"], 100);
}

#[test]
fn metrics_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    let o = vqnet(&["metrics", "vq", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("VQ3: diameter 2, average distance 11/7 (1.571429)"));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["average_distance_num"], 11);
    assert_eq!(v["average_distance_den"], 7);
    assert_eq!(v["mode"], "single-source-via-transitivity");

    let o = vqnet(&["metrics", "q", "3", "--mode", "all-sources"]);
    assert!(stdout(&o).starts_with("Q3: diameter 3, average distance 12/7"));
    assert_eq!(
        vqnet(&["metrics", "vq", "3", "--format", "dot"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn refutation_and_cayley() {
    let o = vqnet(&["refute-edge-transitivity", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(
        text.contains("witness: edge 0101-0001 lies on 4 cycles of length 5, edge 0101-1101 on 0")
    );
    assert_eq!(stdout(&vqnet(&["refute-edge-transitivity"])), text);

    // VQ2 is the 4-cycle, which is edge-transitive.
    let o = vqnet(&["refute-edge-transitivity", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("no witness"));

    let o = vqnet(&["cayley-check"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("VQ3 ≅ C(Z8,{1,4,7}): mapping found\n"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(vqnet(&[]).status.code(), Some(2));
    assert_eq!(vqnet(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        vqnet(&["verify", "4", "--mode", "partial"]).status.code(),
        Some(2)
    );
    assert_eq!(
        vqnet(&["generate", "vq", "3", "--cap", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(vqnet(&["--help"]).status.code(), Some(0));
}
