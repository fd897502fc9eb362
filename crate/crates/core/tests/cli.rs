use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn einl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_einl"))
        .args(args)
        .env_remove("EINL_GUARD")
        .output()
        .unwrap()
}

fn report(args: &[&str]) -> Value {
    let out = einl(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn section<'a>(r: &'a Value, name: &str) -> &'a Value {
    r["sections"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["name"] == name)
        .unwrap_or_else(|| panic!("no section {name}"))
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn orbits_match_golden_report() {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/orbits_fi_j4.json");
    let out = einl(&["orbits", "--max-object", "4", "--i", "0,1,2"]);
    assert!(out.status.success());
    if std::env::var_os("EINL_BLESS").is_some() {
        std::fs::write(&golden, &out.stdout).unwrap();
    }
    assert_eq!(String::from_utf8(out.stdout).unwrap(), std::fs::read_to_string(golden).unwrap());
}

#[test]
fn orbit_table_values() {
    let r = report(&["orbits", "--max-object", "4", "--i", "2"]);
    let rows = section(&r, "orbits i=2")["data"].as_array().unwrap();
    let counts: Vec<u64> = rows.iter().map(|row| row["orbit_count"].as_u64().unwrap()).collect();
    assert_eq!(counts, vec![6, 7]);
    let r = report(&["orbits", "--gamma", "cyclic:2", "--max-object", "2"]);
    assert_eq!(section(&r, "orbits i=1")["data"][0]["orbit_count"], 3);
}

#[test]
fn sections_carry_anchors_and_schema() {
    let r = report(&["check-conditions", "--max-object", "5"]);
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["tool"]["name"], "einl");
    for s in r["sections"].as_array().unwrap() {
        assert!(!s["anchor"].as_str().unwrap().is_empty());
        assert!(s.get("elapsed_ms").is_none());
    }
    assert_eq!(section(&r, "onsets")["data"][0]["onset"], 2);
    let timed = report(&["check-conditions", "--max-object", "3", "--timings"]);
    assert!(timed["sections"][0]["elapsed_ms"].is_u64());
}

#[test]
fn verdicts_do_not_fail_the_run() {
    // μ_{1,2} is not bijective for VIC; that is a finding, not an error
    let r = report(&["check-conditions", "--category", "vic", "--max-object", "4"]);
    let b = section(&r, "bijectivity i=1");
    assert_eq!(b["data"]["cells"][0]["mu_bijective"], false);
    assert_eq!(b["data"]["mu_prime_surjective_onset"], 3);
    let r = report(&["check-conditions", "--category", "vi", "--q", "3", "--max-object", "3"]);
    assert_eq!(section(&r, "onsets")["data"][0]["onset"], 2);
}

#[test]
fn flags_override_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.conf");
    std::fs::write(&cfg, "# FI_BC\ncategory = fi_gamma\ngamma = cyclic:2\nmax_object = 2\ni = 1\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    let r = report(&["orbits", "--config", cfg]);
    assert_eq!(r["config"]["max_object"], 2);
    assert_eq!(r["config"]["gamma"]["value"], 2);
    let r = report(&["orbits", "--config", cfg, "--max-object", "3"]);
    assert_eq!(r["config"]["max_object"], 3);

    std::fs::write(dir.path().join("bad.conf"), "max_object = 3\ncolour = blue\n").unwrap();
    let out = einl(&["orbits", "--config", dir.path().join("bad.conf").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 2"));
}

#[test]
fn guard_from_environment_and_flag() {
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_einl"));
        cmd.args(["orbits", "--max-object", "4"]).args(extra);
        match env {
            Some(v) => cmd.env("EINL_GUARD", v),
            None => cmd.env_remove("EINL_GUARD"),
        };
        cmd.output().unwrap()
    };
    let out = run(Some("10"), &[]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("C(1,4)") || stderr(&out).contains("C(4,4)"), "{}", stderr(&out));
    assert!(run(Some("10"), &["--guard", "1000"]).status.success());
    assert!(run(None, &[]).status.success());
}

#[test]
fn generator_files() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("sum_zero.gen");
    std::fs::write(&good, "# e_0 - e_1 in degree 2\n2: 1 -1\n").unwrap();
    let from_file = report(&["stabilize", "--max-object", "5", "--generators", good.to_str().unwrap()]);
    let builtin = report(&["stabilize", "--max-object", "5", "--module", "sum-zero"]);
    assert_eq!(section(&from_file, "chain")["data"], section(&builtin, "chain")["data"]);

    let bad = dir.path().join("bad.gen");
    std::fs::write(&bad, "2: 1 -1\n3: 1 2/0 1\n").unwrap();
    let out = einl(&["stabilize", "--max-object", "5", "--generators", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));

    std::fs::write(&bad, "2: 1 -1 0\n").unwrap();
    let out = einl(&["fg-torsion", "--generators", bad.to_str().unwrap()]);
    assert!(stderr(&out).contains("line 1") && stderr(&out).contains("2 coordinates"));
}

#[test]
fn trivial_chains() {
    let r = report(&["stabilize", "--max-object", "4", "--module", "free"]);
    let chain = &section(&r, "chain")["data"];
    for d in chain["degrees"].as_array().unwrap() {
        assert_eq!(d["dim_f_x"], d["dim_f_free"]);
    }
    assert!(chain["steps"].as_array().unwrap().iter().all(|s| s["top_injective"] == true));
    let r = report(&["stabilize", "--max-object", "4", "--module", "zero"]);
    let chain = &section(&r, "chain")["data"];
    assert!(chain["degrees"].as_array().unwrap().iter().all(|d| d["dim_f_x"] == 0));
    let out = einl(&["stabilize", "--module", "atom"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn fg_torsion_examples() {
    let r = report(&["fg-torsion", "--max-object", "5"]);
    let fg = &section(&r, "finite-generation")["data"];
    assert_eq!(fg["generator_degrees"], serde_json::json!([1]));
    assert_eq!(fg["window_start"], 1);
    assert!(section(&r, "torsion")["data"]["torsion_dims"].as_array().unwrap().iter().all(|d| d == 0));
    let r = report(&["fg-torsion", "--module", "atom"]);
    assert_eq!(section(&r, "torsion")["data"]["equals_module"], true);
    let r = report(&["fg-torsion", "--module", "sum-zero"]);
    assert_eq!(section(&r, "finite-generation")["data"]["generator_degrees"], serde_json::json!([2]));
    let r = report(&["fg-torsion", "--module", "diagonal"]);
    assert!(section(&r, "projection")["data"]["degrees"].is_array());
}

#[test]
fn output_file_and_table_format() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = einl(&["orbits", "--out", path.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written["command"], "orbits");
    let out = einl(&["orbits", "--format", "table"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("einl ") && text.contains("== orbits i=1"));
}

#[test]
fn usage_errors() {
    assert_eq!(einl(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(einl(&["orbits", "--max-object", "many"]).status.code(), Some(2));
    let out = einl(&["orbits", "--category", "vi", "--q", "6"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("6 is not a prime"));
    assert_eq!(einl(&["orbits", "--i", "4", "--max-object", "4"]).status.code(), Some(1));
}
