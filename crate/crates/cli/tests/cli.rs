use std::process::{Command, Output};

fn ordspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordspec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_temp(name: &str, text: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("ordspec-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn spectrum_summary() {
    let o = ordspec(&["spectrum", "16,23,24,28,29,30,31,35,37,40,42,43,44,66"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "maximal: 16,23,24,28,29,30,31,35,37,40,42,43,44,66\nmembers: 31\npi: 2,3,5,7,11,23,29,31,37,43\nsigma: 3\n"
    );
    assert_eq!(stdout(&ordspec(&["spectrum", "J4"])), stdout(&o));
}

#[test]
fn trivial_and_invalid_spectra() {
    let o = ordspec(&["spectrum", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "maximal: 1\nmembers: 1\npi: \nsigma: 0\n");
    for bad in ["0", "3,x", "", "L2(6)"] {
        let o = ordspec(&["spectrum", bad]);
        assert_eq!(o.status.code(), Some(2), "{bad:?}");
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn products() {
    let sq = stdout(&ordspec(&["product", "J4", "J4"]));
    assert_eq!(sq, stdout(&ordspec(&["spectrum", "J4xJ4"])));
    assert!(sq.contains("members: 208\n"));
    assert!(sq.contains("sigma: 5\n"));
    let wr = stdout(&ordspec(&["wreath2", "J4"]));
    assert_ne!(wr, sq);
    assert!(wr.contains(",32,") || wr.starts_with("maximal: 32,"));
    let o = ordspec(&["product", "18446744073709551615", "18446744073709551614"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn prime_graph_output() {
    let dot = stdout(&ordspec(&["gk", "--group", "J4", "--dot"]));
    assert!(dot.starts_with("graph gk {\n"));
    assert!(dot.ends_with("}\n"));
    assert!(dot.contains("  2 -- 11;\n"));
    assert!(!dot.contains("29 -- 31"));
    let plain = stdout(&ordspec(&["gk"]));
    assert!(plain.starts_with("vertices: 2,3,5,7,11,23,29,31,37,43\n"));
    assert!(plain.contains("2 -- 11\n"));
    let square = stdout(&ordspec(&["gk", "--group", "J4xJ4"]));
    assert_eq!(square.lines().count(), 1 + 45);
}

#[test]
fn cocliques() {
    let o = ordspec(&["coclique", "--group", "J4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "independence number: 7");
    assert!(lines.contains(&"5,11,23,29,31,37,43"));
    assert!(lines.contains(&"7,11,23,29,31,37,43"));
    let remark = stdout(&ordspec(&["coclique", "--group", "remark"]));
    assert_eq!(remark, "independence number: 1\n3\n5\n17\n");
}

#[test]
fn database_queries() {
    let o = ordspec(&["db", "query", "--lemma", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "J4: 11,23,29,31,37,43\nL2(23): 11,23\nL2(32): 11,31\nL2(43): 11,43\nM23: 11,23\nM24: 11,23\nU3(11): 11,37\n"
    );
    let o = ordspec(&["db", "query", "--lemma", "9"]);
    assert_eq!(
        stdout(&o),
        "J4: 5,23,29,37,43\nL2(29): 5,29\nM23: 5,23\nM24: 5,23\nU3(11): 5,37\n"
    );
    assert_eq!(ordspec(&["db", "query", "--lemma", "7"]).status.code(), Some(2));
    assert_eq!(ordspec(&["db", "query"]).status.code(), Some(2));
}

#[test]
fn database_file_override() {
    let path = write_temp("partial.txt", "group M23\norder 2^7 3^2 5 7 11 23\npi 2,3,5,7,11,23\nflag has25 false\n");
    let o = ordspec(&["db", "query", "--lemma", "8", "--db", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("insufficient data"));

    let path = write_temp("one.txt", "group M23\npi 2,3,5,7,11,23\nflag has9 false\nflag has25 false\n");
    let o = ordspec(&["db", "query", "--lemma", "8", "--db", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "M23: 11,23\n");

    let o = ordspec(&["db", "query", "--lemma", "8", "--db", "/nonexistent/records.txt"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn database_check() {
    let o = ordspec(&["db", "check"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("L2(23): verified"));
    assert!(out.contains("J4: consistent; cited data, not independently verified"));
    assert!(out.contains("L2(43^2): consistent"));
}

#[test]
fn verify_passes_and_is_deterministic() {
    let a = ordspec(&["verify", "paper"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    let b = ordspec(&["verify", "paper"]);
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    assert!(out.ends_with("overall: pass\n"));
    assert!(!out.contains("FAIL"));
    assert!(!out.contains("timestamp"));
}

#[test]
fn verify_json() {
    let o = ordspec(&["verify", "paper", "--only", "remark", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let checks = v.as_array().unwrap();
    assert_eq!(checks.len(), 1);
    assert_eq!(checks[0]["id"], "remark");
    assert_eq!(checks[0]["status"], "pass");
    for key in ["id", "citation", "status", "detail"] {
        assert!(checks[0].get(key).is_some());
    }

    let o = ordspec(&["verify", "paper", "--only", "db", "--json", "--timestamp"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["timestamp"].as_u64().unwrap() > 0);
    assert_eq!(v["checks"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_reports_corrupt_records() {
    let path = write_temp("bad.txt", "group X\nmu 9\npi 3\nflag has9 false\n");
    let o = ordspec(&["verify", "paper", "--only", "db", "--db", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.starts_with("FAIL    db-load"));
    assert!(out.ends_with("overall: fail\n"));
}

#[test]
fn usage_errors() {
    assert_eq!(ordspec(&[]).status.code(), Some(2));
    assert_eq!(ordspec(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(ordspec(&["verify", "paper", "--only", "nothing"]).status.code(), Some(2));
    assert_eq!(ordspec(&["--help"]).status.code(), Some(0));
}
