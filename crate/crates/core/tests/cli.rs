use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::{json, Value};
use tempfile::TempDir;

struct Dir(TempDir);

impl Dir {
    fn new() -> Self {
        Dir(tempfile::tempdir().unwrap())
    }

    fn write(&self, name: &str, v: &Value) -> PathBuf {
        let path = self.0.path().join(name);
        fs::write(&path, v.to_string()).unwrap();
        path
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.path().join(name)
    }
}

fn q(entries: Value) -> Value {
    let dim = entries.as_array().unwrap().len();
    json!({"backend": "Q", "dim": dim, "entries": entries})
}

/// Run the binary; returns (exit code, stdout, stderr).
fn wcinv(args: &[&dyn AsRef<std::ffi::OsStr>]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_wcinv"))
        .args(args.iter().map(|a| a.as_ref()))
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

fn p(path: &Path) -> &std::ffi::OsStr {
    path.as_os_str()
}

#[test]
fn compute_ecore_and_verify() {
    let d = Dir::new();
    let a = d.write("a.json", &q(json!([["1", "1"], ["0", "0"]])));
    let (code, out, _) = wcinv(&[&"compute", &"--kind", &"ecore", &"--a", &p(&a)]);
    assert_eq!(code, 0);
    let cert = parse(&out);
    assert_eq!(cert["value"], q(json!([["1", "0"], ["0", "0"]])));
    assert_eq!(cert["verified"], json!(true));

    let c = d.write("cert.json", &cert);
    let (code, out, _) = wcinv(&[&"verify", &"--a", &p(&a), &"--cert", &p(&c)]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(parse(&out)["holds"], json!(true));

    let mut tampered = cert.clone();
    tampered["value"]["entries"][0][0] = json!("2");
    let t = d.write("tampered.json", &tampered);
    let (code, out, _) = wcinv(&[&"verify", &"--a", &p(&a), &"--cert", &p(&t)]);
    assert_eq!(code, 1);
    let report = parse(&out);
    assert_eq!(report["holds"], json!(false));
    assert!(report["failed"].as_array().unwrap().contains(&json!("(1)")));
}

#[test]
fn negative_results_exit_zero() {
    let d = Dir::new();
    let a = d.write("nil.json", &q(json!([["0", "1"], ["0", "0"]])));
    let (code, out, _) = wcinv(&[&"compute", &"--kind", &"group", &"--a", &p(&a)]);
    assert_eq!(code, 0);
    assert_eq!(
        parse(&out),
        json!({"invertible": false, "kind": "group", "reason": "a ∉ a²R"})
    );
}

#[test]
fn invalid_input_exits_two() {
    let d = Dir::new();
    let a = d.write("a.json", &q(json!([["1", "1"], ["0", "0"]])));
    let e = d.write("e.json", &q(json!([["1", "1"], ["0", "1"]])));
    let (code, _, err) = wcinv(&[
        &"compute",
        &"--kind",
        &"ecore",
        &"--a",
        &p(&a),
        &"--e",
        &p(&e),
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("Hermitian"), "{err}");

    let junk = d.path("junk.json");
    fs::write(&junk, "{not json").unwrap();
    let (code, _, _) = wcinv(&[&"compute", &"--kind", &"ecore", &"--a", &p(&junk)]);
    assert_eq!(code, 2);

    let e3 = d.write(
        "e3.json",
        &q(json!([["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]])),
    );
    let (code, _, _) = wcinv(&[
        &"compute",
        &"--kind",
        &"ecore",
        &"--a",
        &p(&a),
        &"--e",
        &p(&e3),
    ]);
    assert_eq!(code, 2);

    let (code, _, _) = wcinv(&[
        &"compute",
        &"--kind",
        &"ecore",
        &"--a",
        &p(&a),
        &"--n",
        &"9",
    ]);
    assert_eq!(code, 2);

    let (code, _, _) = wcinv(&[&"verify", &"--a", &p(&a), &"--cert", &p(&junk)]);
    assert_eq!(code, 2);
}

#[test]
fn omitted_weight_gives_classical_core_inverse() {
    let d = Dir::new();
    let a = d.write("a.json", &q(json!([["2", "1"], ["0", "0"]])));
    let i = d.write("i.json", &q(json!([["1", "0"], ["0", "1"]])));
    let (_, without, _) = wcinv(&[&"compute", &"--kind", &"ecore", &"--a", &p(&a)]);
    let (_, with, _) = wcinv(&[
        &"compute",
        &"--kind",
        &"ecore",
        &"--a",
        &p(&a),
        &"--e",
        &p(&i),
    ]);
    assert_eq!(without, with);
    // Core inverse of [[2,1],[0,0]]: a#·aa† = a#·diag(1,0).
    assert_eq!(
        parse(&without)["value"],
        q(json!([["1/2", "0"], ["0", "0"]]))
    );
}

#[test]
fn decomposition_round_trip() {
    let d = Dir::new();
    let a = d.write(
        "a.json",
        &q(json!([["1", "2", "0"], ["0", "0", "0"], ["1", "0", "1"]])),
    );
    let e = d.write(
        "e.json",
        &q(json!([["2", "0", "1"], ["0", "1", "0"], ["1", "0", "1"]])),
    );
    for (kind, flavor, n) in [
        ("ecore", "p", "1"),
        ("ecore", "t", "2"),
        ("fdualcore", "s", "3"),
        ("fdualcore", "q", "2"),
    ] {
        let (code, out, _) = wcinv(&[
            &"compute",
            &"--kind",
            &kind,
            &"--a",
            &p(&a),
            &"--e",
            &p(&e),
            &"--f",
            &p(&e),
            &"--decompose",
            &flavor,
            &"--n",
            &n,
            &"--seed",
            &"5",
        ]);
        assert_eq!(code, 0);
        let dec = parse(&out);
        assert_eq!(dec["flavor"], json!(flavor));
        let path = d.write("dec.json", &dec);
        let (code, out, _) = wcinv(&[
            &"verify",
            &"--a",
            &p(&a),
            &"--e",
            &p(&e),
            &"--f",
            &p(&e),
            &"--cert",
            &p(&path),
        ]);
        assert_eq!(code, 0, "{out}");
        assert_eq!(parse(&out)["matches_direct"], json!(true));

        let mut bad = dec.clone();
        bad["unit"]["entries"][0][0] = json!("7");
        let path = d.write("bad.json", &bad);
        let (code, _, _) = wcinv(&[
            &"verify",
            &"--a",
            &p(&a),
            &"--e",
            &p(&e),
            &"--f",
            &p(&e),
            &"--cert",
            &p(&path),
        ]);
        assert_eq!(code, 1);
    }
}

#[test]
fn ep_verdicts() {
    let d = Dir::new();
    let a = d.write("a.json", &q(json!([["2", "0"], ["0", "0"]])));
    let e = d.write("e.json", &q(json!([["1", "0"], ["0", "3"]])));
    let f = d.write("f.json", &q(json!([["2", "0"], ["0", "1"]])));
    let (code, out, _) = wcinv(&[&"ep", &"--a", &p(&a), &"--e", &p(&e), &"--f", &p(&f)]);
    assert_eq!(code, 0);
    let v = parse(&out);
    assert_eq!(v["weighted_ep"], json!(true));
    assert_eq!(v["p"], q(json!([["0", "0"], ["0", "1"]])));

    let b = d.write("b.json", &q(json!([["1", "1"], ["0", "0"]])));
    let (_, out, _) = wcinv(&[&"ep", &"--a", &p(&b)]);
    let v = parse(&out);
    assert_eq!(v["weighted_ep"], json!(false));
    assert_eq!(v["p"], Value::Null);
    assert_ne!(v["e_core"], v["f_dual_core"]);

    let inv = d.write("inv.json", &q(json!([["1", "1"], ["0", "1"]])));
    let (_, out, _) = wcinv(&[&"ep", &"--a", &p(&inv)]);
    assert_eq!(parse(&out)["weighted_ep"], json!(true));
}

#[test]
fn other_backends() {
    let d = Dir::new();
    let a = d.write(
        "a.json",
        &json!({"backend": "Qi", "dim": 2, "entries": [[["1", "1"], ["0", "0"]], [["0", "0"], ["0", "0"]]]}),
    );
    let (code, out, _) = wcinv(&[&"compute", &"--kind", &"wmp", &"--a", &p(&a)]);
    assert_eq!(code, 0);
    // (1+i)⁻¹ = (1−i)/2 in the corner.
    assert_eq!(
        parse(&out)["value"]["entries"][0][0],
        json!(["1/2", "-1/2"])
    );

    let a = d.write(
        "f.json",
        &json!({"backend": "Fp", "p": 3, "dim": 2, "entries": [["1", "2"], ["0", "0"]]}),
    );
    let (code, out, _) = wcinv(&[&"compute", &"--kind", &"group", &"--a", &p(&a)]);
    assert_eq!(code, 0);
    assert_eq!(parse(&out)["value"]["backend"], json!("Fp"));

    let e = d.write("e.json", &q(json!([["1", "0"], ["0", "1"]])));
    let (code, _, err) = wcinv(&[
        &"compute",
        &"--kind",
        &"ecore",
        &"--a",
        &p(&a),
        &"--e",
        &p(&e),
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("backend"), "{err}");
}

#[test]
fn oracle_exit_codes() {
    let (code, out, _) = wcinv(&[&"oracle", &"--p", &"2", &"--dim", &"2"]);
    assert_eq!(code, 0);
    let r = parse(&out);
    assert_eq!(r["mismatches"], json!([]));
    assert_eq!(r["space"]["exhaustive"], json!(true));

    let (code, _, err) = wcinv(&[&"oracle", &"--p", &"5", &"--dim", &"3"]);
    assert_eq!(code, 2);
    assert!(err.contains("exceeds"), "{err}");
    let (code, _, _) = wcinv(&[&"oracle", &"--p", &"5", &"--dim", &"3", &"--sample", &"2"]);
    assert_eq!(code, 2);
    let (code, _, _) = wcinv(&[&"oracle", &"--p", &"7", &"--dim", &"2"]);
    assert_eq!(code, 2);
}

#[test]
fn output_is_byte_stable() {
    let d = Dir::new();
    let a = d.write(
        "a.json",
        &q(json!([["1", "2", "0"], ["0", "0", "0"], ["1", "0", "1"]])),
    );
    let args: [&dyn AsRef<std::ffi::OsStr>; 9] = [
        &"compute",
        &"--kind",
        &"ecore",
        &"--a",
        &p(&a),
        &"--decompose",
        &"s",
        &"--seed",
        &"42",
    ];
    let first = wcinv(&args);
    assert_eq!(first, wcinv(&args));
    let sampled = [
        &"oracle" as &dyn AsRef<std::ffi::OsStr>,
        &"--p",
        &"5",
        &"--dim",
        &"3",
        &"--sample",
        &"2",
        &"--seed",
        &"8",
    ];
    assert_eq!(wcinv(&sampled), wcinv(&sampled));

    let out = d.path("out.json");
    let (code, stdout, _) = wcinv(&[
        &"compute",
        &"--kind",
        &"ecore",
        &"--a",
        &p(&a),
        &"--out",
        &p(&out),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let (_, direct, _) = wcinv(&[&"compute", &"--kind", &"ecore", &"--a", &p(&a)]);
    assert_eq!(fs::read_to_string(&out).unwrap(), direct);
}

#[test]
fn in_process_runner() {
    let d = Dir::new();
    let a = d.write("a.json", &q(json!([["1", "0"], ["0", "0"]])));
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = wcinv::cli::run(
        [
            "wcinv",
            "compute",
            "--kind",
            "fdualcore",
            "--a",
            a.to_str().unwrap(),
        ],
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0);
    assert_eq!(
        parse(std::str::from_utf8(&out).unwrap())["kind"],
        json!("fdualcore")
    );
}
