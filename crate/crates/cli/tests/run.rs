use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn script(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("scripts").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rees-quot")).args(args).env_remove("REES_QUOT_CAP").output().unwrap()
}

fn run_text(text: &str, extra: &[&str]) -> Output {
    let dir = std::env::temp_dir().join(format!("rees-quot-{}-{}", std::process::id(), text.len()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(format!("{:x}.rq", text.bytes().fold(0u64, |h, b| h.wrapping_mul(131).wrapping_add(b as u64))));
    std::fs::write(&path, text).unwrap();
    let mut args = vec!["run", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap_or_else(|e| panic!("{l}: {e}")))
        .collect()
}

fn find<'a>(lines: &'a [Value], cmd: &str) -> &'a Value {
    lines.iter().find(|l| l["cmd"] == cmd).unwrap_or_else(|| panic!("no line for {cmd}"))
}

#[test]
fn xy_char2_both_ideals() {
    let out = run(&["run", "--json-only", script("xy_char2.rq").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stderr.is_empty());
    let ls = lines(&out);

    let red_a = find(&ls, "query is_reduced A;");
    assert_eq!(red_a["result"]["value"], "no");
    assert_eq!(red_a["witness"], "y^2 + (y)t");
    let rec_a = find(&ls, "query recognize A;");
    assert_eq!(rec_a["result"]["idealization"]["value"], "yes");
    assert_eq!(rec_a["result"]["duplication"]["value"], "no");

    let red_b = find(&ls, "query is_reduced B;");
    assert_eq!(red_b["result"]["value"], "yes");
    let rec_b = find(&ls, "query recognize B;");
    assert_eq!(rec_b["result"]["duplication"]["value"], "yes");
    assert_eq!(rec_b["result"]["idealization"]["value"], "no");
    assert!(rec_b["result"]["duplication_map"].as_str().unwrap().contains("(x)i"));

    assert_eq!(find(&ls, "query minimal_primes B;")["result"]["count"], 3);
}

#[test]
fn xy_char3_fibers() {
    let out = run(&["run", "--json-only", script("xy_char3.rq").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let ls = lines(&out);
    assert_eq!(find(&ls, "query is_reduced C;")["result"]["value"], "no");
    let rec = &find(&ls, "query recognize C;")["result"];
    assert_eq!((rec["idealization"]["value"].as_str(), rec["duplication"]["value"].as_str()), (Some("no"), Some("no")));
    let fx = &find(&ls, "query fiber C over prime=[x];")["result"];
    assert_eq!((fx["merged"].as_bool(), fx["primes"].as_array().unwrap().len()), (Some(false), 2));
    let fy = &find(&ls, "query fiber C over prime=[y];")["result"];
    assert_eq!((fy["merged"].as_bool(), fy["primes"].as_array().unwrap().len()), (Some(true), 1));
    assert_eq!(find(&ls, "query minimal_primes C;")["result"]["count"], 3);
    assert_eq!(find(&ls, "query is_domain S;")["result"]["value"], "no");
}

#[test]
fn oracle_check_line() {
    let out = run(&["run", "--json-only", script("finite.rq").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let ls = lines(&out);
    let check = &find(&ls, "check oracle D;")["result"];
    assert_eq!(check["agree"], true);
    assert_eq!(check["size"], 128);
    assert!(check["checks"].as_array().unwrap().iter().all(|c| c["performed"] == true));
    let search = &find(&ls, "search locq n=4..12, pairs=all;")["result"];
    assert_eq!(search["verdict"], "no counterexample");
}

#[test]
fn schema_is_stable() {
    for name in ["xy_char2.rq", "xy_char3.rq", "finite.rq"] {
        let out = run(&["run", "--json-only", script(name).to_str().unwrap()]);
        for l in lines(&out) {
            let mut keys: Vec<&str> = l.as_object().unwrap().keys().map(String::as_str).collect();
            keys.sort();
            assert_eq!(keys, ["cmd", "result", "status", "witness"]);
            assert!(["ok", "unknown", "error"].contains(&l["status"].as_str().unwrap()));
        }
    }
}

#[test]
fn empty_script() {
    let out = run_text("", &[]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty() && out.stderr.is_empty());
}

#[test]
fn parse_failure_exit_code() {
    let out = run_text("ring R = quotient(GF(2) vars=[x, y], mod=[x*y]);\n", &["--json-only"]);
    assert_eq!(out.status.code(), Some(2));
    let ls = lines(&out);
    assert_eq!(ls.len(), 1);
    assert_eq!(ls[0]["status"], "error");
    assert_eq!((ls[0]["result"]["line"].as_u64(), ls[0]["result"]["col"].as_u64()), (Some(1), Some(25)));
}

#[test]
fn errors_set_exit_one() {
    let out = run_text("ring Z = zmod(6);\nquery fiber W over prime=[2];\nring Z = zmod(7);\nquery is_reduced Z;\n", &["--json-only"]);
    assert_eq!(out.status.code(), Some(1));
    let ls = lines(&out);
    assert_eq!(ls.len(), 4);
    assert_eq!(ls[1]["result"]["error"], "NameError");
    assert_eq!(ls[2]["result"]["error"], "NameError");
    assert_eq!(ls[3]["status"], "ok");
    assert_eq!(ls[3]["result"]["value"], "yes");
}

#[test]
fn unknown_is_not_an_error() {
    let text = "ring Z = zmod(16);\nideal T = span(Z, [2]);\nrab D = rab(Z, T, a=4, b=0);\nroots D with alpha=0, beta=-4;\nquery recognize D;\n";
    let out = run_text(text, &["--json-only"]);
    assert_eq!(out.status.code(), Some(0));
    let ls = lines(&out);
    assert_eq!(ls[4]["status"], "unknown");
    assert!(!ls[4]["result"]["duplication"]["reason"].as_str().unwrap().is_empty());
}

#[test]
fn cap_refuses_large_search() {
    let out = run_text("search locq n=40..40, pairs=all;\n", &["--json-only", "--cap", "100"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(lines(&out)[0]["result"]["error"], "TooLarge");
    let env = Command::new(env!("CARGO_BIN_EXE_rees-quot"))
        .args(["run", "--json-only", script("finite.rq").to_str().unwrap()])
        .env("REES_QUOT_CAP", "50")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(1));
}

#[test]
fn deterministic_output() {
    let text = "search locq n=6..10, pairs=5;\nset seed=9;\nsearch locq n=6..10, pairs=5;\n";
    let a = run_text(text, &["--json-only", "--seed", "4"]);
    let b = run_text(text, &["--json-only", "--seed", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let full = run(&["run", "--json-only", script("xy_char2.rq").to_str().unwrap()]);
    assert_eq!(full.stdout, run(&["run", "--json-only", script("xy_char2.rq").to_str().unwrap()]).stdout);
}

#[test]
fn text_goes_to_stderr() {
    let out = run(&["run", script("xy_char2.rq").to_str().unwrap()]);
    let text = String::from_utf8(out.stderr.clone()).unwrap();
    assert!(text.contains("idealization: yes; duplication: no"), "{text}");
    assert_eq!(lines(&out).len(), 14);
}
