use std::process::Command;

use wronski::schurring::SchurExpansion;
use wronski::{DividedSeries, Polynomial};
use wronski_cli::{run, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE};

fn invoke(args: &str) -> wronski_cli::Outcome {
    run(std::iter::once("wronski").chain(args.split_whitespace()))
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_wronski");
    let ok = Command::new(bin).args(["degree", "--rank", "1", "--dim", "3"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "2\n");

    let bad = Command::new(bin).args(["frobnicate"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8(bad.stderr).unwrap().contains("Usage"));

    let fault = Command::new(bin)
        .args(["check", "euler", "--rank", "1", "--order", "6", "--inject-fault"])
        .output()
        .unwrap();
    assert_eq!(fault.status.code(), Some(3));
}

#[test]
fn usage_errors() {
    for args in [
        "hseq --rank 9",
        "hseq --order 65",
        "hseq --bogus",
        "solve --rank 1 --spec 3",
        "solve --rank 1 --inits 1,2,3",
        "solve --rank 1 --spec 1/0,2",
        "wronskian --rank 1 --partition 1,1,1",
        "wronskian --rank 1 --partition x",
        "degree --rank 3 --dim 3",
        "product --rank 1 --dim 3 --left 3 --right 1",
        "schur --rank 1 --poly h1^",
        "solve-nonhom --rank 1 --rhs /nonexistent/rhs.json",
        "check derivative --rank 2 --max-weight 6 --order 6",
    ] {
        let out = invoke(args);
        assert_eq!(out.code, EXIT_USAGE, "{args}");
        assert!(out.stdout.is_empty(), "{args}");
        assert!(!out.stderr.is_empty(), "{args}");
    }
}

#[test]
fn help_goes_to_stdout() {
    let out = invoke("--help");
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("hseq"));
}

#[test]
fn every_check_detects_an_injected_fault() {
    for kind in ["giambelli", "pieri", "derivative", "euler", "nonhom"] {
        let clean = invoke(&format!("check {kind} --rank 1 --max-weight 2 --order 7 --cases 4"));
        assert_eq!(clean.code, EXIT_OK, "{kind}: {}", clean.stdout);
        let faulty = invoke(&format!("check {kind} --rank 1 --max-weight 2 --order 7 --cases 4 --inject-fault"));
        assert_eq!(faulty.code, EXIT_CHECK_FAILED, "{kind}");
        assert!(faulty.stdout.contains("FAIL"), "{kind}");
        assert!(faulty.stdout.contains("1 failed"), "{kind}");
    }
}

#[test]
fn json_outputs_parse_back() {
    let out = invoke("wronskian --rank 2 --partition 2,1 --order 4 --format json");
    let w: DividedSeries<Polynomial> = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(w.order(), 4);
    assert_eq!(format!("{}\n", serde_json::to_string(&w).unwrap()), out.stdout);

    let out = invoke("solve --rank 1 --spec 3,2 --order 2 --format json");
    assert_eq!(out.stdout, "{\"solutions\":[{\"order\":2,\"coeffs\":[\"1\",\"3\",\"7\"]},{\"order\":2,\"coeffs\":[\"0\",\"1\",\"3\"]}]}\n");

    let out = invoke("schur --rank 3 --k 5 --format json");
    let e: SchurExpansion = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(format!("{}\n", serde_json::to_string(&e).unwrap()), out.stdout);

    let out = invoke("product --rank 1 --dim 3 --left 2 --right 1,1 --format json");
    assert_eq!(out.stdout, "{\"terms\":[]}\n");
}

#[test]
fn nonhomogeneous_from_file() {
    let dir = std::env::temp_dir().join(format!("wronski-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("rhs.json");
    std::fs::write(&path, r#"{"order":4,"symbols":["e1","e2"],"coeffs":["e1","0","0","0","0"]}"#).unwrap();
    let out = invoke(&format!("solve-nonhom --rank 1 --order 6 --inits 1,0 --spec 3,2 --rhs {}", path.display()));
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    // y'' - 3y' + 2y = 3 (t^0 term only), y(0) = 1, y'(0) = 0
    assert_eq!(out.stdout, "y = [1, 0, 1, 3, 7, 15, 31]\n");

    std::fs::write(&path, r#"{"order":2,"coeffs":["1","1","1"]}"#).unwrap();
    let out = invoke(&format!("solve-nonhom --rank 1 --order 6 --rhs {}", path.display()));
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("truncation"));
    std::fs::remove_dir_all(&dir).ok();
}
