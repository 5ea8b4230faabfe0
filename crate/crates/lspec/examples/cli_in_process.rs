//! Running the command line in process and reading its JSON.

fn main() {
    let (code, out) = lspec::cli::run_to_string(["lspec", "--q", "2", "constant", "--alpha", "golden", "--x", "f1"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    println!("exit {code}, exponent {}, certificate {}", v["result"]["value_exp"], v["result"]["certificate"]["kind"]);
}
