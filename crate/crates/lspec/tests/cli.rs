use serde_json::Value;

use lspec::cli::run_to_string;

fn run(args: &[&str]) -> (i32, String) {
    run_to_string(std::iter::once("lspec").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out) = run(args);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}")))
}

#[test]
fn rational_expansion() {
    let (code, v) = json(&["--q", "3", "cf", "rational", "Y^2+1", "Y"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["text"], "[Y; Y]");
    assert_eq!(v["header"]["config"]["q"], 3);
    assert_eq!(v["header"]["lspec_version"], lspec::cli::VERSION);
}

#[test]
fn golden_fixed_point() {
    let (code, v) = json(&["cf", "eval", "[per: Y]"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["quadratic"]["minpoly"], serde_json::json!(["1", "2*Y", "2"]));
}

#[test]
fn quadratic_expansion_inverts_eval() {
    let (_, v) = json(&["cf", "quadratic", "--minpoly", "1,2*Y,2", "--approx", "Y"]);
    assert_eq!(v["result"]["text"], "[per: Y]", "{v}");
}

#[test]
fn constants() {
    let (code, v) = json(&["constant", "--alpha", "golden", "--x", "f1", "--q", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["value_exp"], -4);
    assert_eq!(v["result"]["certificate"]["kind"], "exact");
    let (code, v) = json(&["constant", "--alpha", "golden", "--x", "golden-shifted"]);
    assert_eq!(code, 4);
    assert_eq!(v["error"]["kind"], "orbit-equivalent");
}

#[test]
fn streamed_target_reports_interval_when_short() {
    let (code, v) = json(&["--horizon", "60", "constant", "--alpha", "golden", "--x", "[0; per: Y^2, Y, Y+1]", "--stream"]);
    assert_eq!(code, 0, "{v}");
    let (code, v) = json(&["--horizon", "10", "constant", "--alpha", "golden", "--x", "[0; per: Y^2, Y, Y+1]", "--stream"]);
    assert_eq!(code, 3, "{v}");
    assert!(v["result"].is_object());
}

#[test]
fn invalid_inputs() {
    assert_eq!(run(&["cf", "rational", "1", "0"]).0, 2);
    assert_eq!(run(&["--q", "6", "cf", "rational", "1", "Y"]).0, 2);
    assert_eq!(run(&["cf", "eval", "[per: 1]"]).0, 2);
    assert_eq!(run(&["--q", "3", "--p", "3", "cf", "rational", "1", "Y"]).0, 2);
}

#[test]
fn extension_field() {
    let (code, v) = json(&["--p", "2", "--ext-degree", "2", "cf", "rational", "Y^2", "Y+1"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["header"]["config"]["q"], 4);
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "csv", "verify", "oracles", "--q", "2", "--trials", "50", "--seed", "7"];
    let (code, a) = run(&args);
    assert_eq!(code, 0, "{a}");
    assert_eq!(a, run(&args).1);
    let mut lines = a.lines();
    assert!(lines.next().unwrap().starts_with("# {"));
    assert_eq!(lines.next().unwrap(), "alpha_id,x_id,exponent,certificate_kind,expected,ok");
}

#[test]
fn verify_suites() {
    assert_eq!(run(&["verify", "golden", "--q", "3", "--mmax", "2"]).0, 0);
    assert_eq!(run(&["verify", "gaps", "--q", "2", "--k", "2"]).0, 0);
}

#[test]
fn cache_round_trip() {
    let dir = std::env::temp_dir().join(format!("lspec-cache-test-{}", std::process::id()));
    std::env::set_var("LSPEC_CACHE_DIR", &dir);
    let args = ["constant", "--alpha", "golden", "--x", "[0; per: Y^2, Y, Y]"];
    let first = run(&args);
    // other tests may run while the variable is set
    assert!(std::fs::read_dir(&dir).unwrap().count() >= 1);
    assert_eq!(run(&args), first);
    std::env::remove_var("LSPEC_CACHE_DIR");
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(first.0, 0);
}
