use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nonschur"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_of(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid json")
}

const ROOT_131: &[&str] = &[
    "analyze", "--quiver", "2,1,2", "--a1", "0,1,0", "--d1", "1", "--a2", "1,2,0", "--d2", "1",
    "--a3", "0,0,1", "--d3", "1",
];

const ROOT_252: &[&str] = &[
    "analyze", "--quiver", "2,1,1", "--a1", "0,1,0", "--d1", "1", "--a2", "1,2,0", "--d2", "2",
    "--a3", "0,0,1", "--d3", "2",
];

const SPLIT_19_31_2: &[&str] = &[
    "glue", "--quiver", "2,1,2", "--a1", "1,2,0", "--d1", "5", "--a2", "2,3,0", "--d2", "7",
    "--a3", "0,0,1", "--d3", "2",
];

fn with(base: &[&str], extra: &[&str]) -> Vec<String> {
    base.iter().chain(extra).map(|s| s.to_string()).collect()
}

fn run_owned(args: &[String]) -> Output {
    let refs: Vec<&str> = args.iter().map(String::as_str).collect();
    run(&refs)
}

#[test]
fn analyze_json_intersection_class() {
    let o = run_owned(&with(ROOT_131, &["--format", "json"]));
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(
        v["intersection_class"],
        json!([{"partition": [12, 11, 11, 11], "coeff": 2}])
    );
    assert_eq!(v["schema_version"], json!(1));
    assert_eq!(v["input"]["seed"], json!(0));
    for key in [
        "input",
        "parameters",
        "special_case",
        "dimensions",
        "pushforward_class",
        "intersection_class",
        "gcd",
        "witness",
        "warnings",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn analyze_252_coefficients() {
    let v = json_of(&run_owned(&with(ROOT_252, &["--format", "json"])));
    assert_eq!(
        v["intersection_class"],
        json!([
            {"partition": [15, 15, 15, 14], "coeff": 8},
            {"partition": [16, 15, 14, 14], "coeff": 16}
        ])
    );
}

#[test]
fn analyze_output_is_deterministic() {
    let args = with(ROOT_252, &["--format", "json", "--seed", "7"]);
    assert_eq!(run_owned(&args).stdout, run_owned(&args).stdout);
    let args = with(ROOT_252, &[]);
    assert_eq!(run_owned(&args).stdout, run_owned(&args).stdout);
}

fn numbers(v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Number(n) => out.push(n.to_string()),
        Value::Array(xs) => xs.iter().for_each(|x| numbers(x, out)),
        Value::Object(m) => m.values().for_each(|x| numbers(x, out)),
        _ => {}
    }
}

#[test]
fn text_contains_every_json_number() {
    for base in [ROOT_252, ROOT_131, SPLIT_19_31_2] {
        let v = json_of(&run_owned(&with(base, &["--format", "json"])));
        let text = stdout(&run_owned(&with(base, &["--format", "text"])));
        let tokens: Vec<&str> = text
            .split(|c: char| !c.is_ascii_digit() && c != '-')
            .filter(|t| !t.is_empty())
            .collect();
        let mut nums = Vec::new();
        numbers(&v, &mut nums);
        for n in nums {
            assert!(tokens.contains(&n.as_str()), "{n} missing from text output");
        }
    }
}

#[test]
fn swapped_exceptionals_exit_2() {
    let args = [
        "analyze", "--quiver", "2,1,2", "--a1", "0,1,0", "--d1", "1", "--a2", "0,0,1", "--d2", "1",
        "--a3", "1,2,0", "--d3", "1", "--format", "json",
    ];
    let o = run(&args);
    assert_eq!(o.status.code(), Some(2));
    let v = json_of(&o);
    assert!(v["errors"]
        .as_array()
        .unwrap()
        .contains(&json!("ext(alpha2,alpha3) != 0")));
    let o = run(&args[..args.len() - 2]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("error: ext(alpha2,alpha3) != 0"));
}

#[test]
fn expectation_warning() {
    let args = [
        "analyze", "--quiver", "2,1,2", "--a1", "0,2,1", "--d1", "3", "--a2", "0,1,0", "--d2", "6",
        "--a3", "1,2,5", "--d3", "1", "--expect", "w=5", "--format", "json",
    ];
    let v = json_of(&run(&args));
    assert_eq!(
        v["warnings"],
        json!(["expected w = 5, derived w = n*d3 = 8"])
    );
    assert_eq!(
        v["intersection_class"],
        json!([{"partition": [8, 8], "coeff": 32}])
    );
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(
        run(&["analyze", "--quiver", "2,1,2"]).status.code(),
        Some(64)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(
        run_owned(&with(ROOT_131, &["--prime", "100"]))
            .status
            .code(),
        Some(64)
    );
    assert_eq!(
        run_owned(&with(ROOT_131, &["--prime", "1001"]))
            .status
            .code(),
        Some(64)
    );
    assert_eq!(
        run(&["analyze", "--quiver", "2,1,2", "--a1", "x"])
            .status
            .code(),
        Some(64)
    );
    assert_eq!(
        run(&["chow", "--box", "2", "--term", "1"]).status.code(),
        Some(64)
    );
    assert_eq!(
        run(&["chow", "--box", "2,3", "--term", "1,2"])
            .status
            .code(),
        Some(64)
    );
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn kostka_command() {
    let k =
        |shape: &str, weight: &str| stdout(&run(&["kostka", "--shape", shape, "--weight", weight]));
    assert_eq!(k("2,2,2,2,2,2", "2,2,2,2,1,1,1,1"), "2\n");
    assert_eq!(k("2,1", "1,1,1"), "2\n");
    assert_eq!(k("3,2,1", "3,2,1"), "1\n");
    // weights are sorted before use
    assert_eq!(k("3,2,1", "1,2,3"), "1\n");
    assert_eq!(
        run(&["kostka", "--shape", "2,1", "--weight", "2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn chow_command() {
    let o = run(&[
        "chow",
        "--box",
        "4,16",
        "--term",
        "3",
        "--op",
        "rectangle",
        "--j",
        "14",
    ]);
    assert_eq!(stdout(&o), "0\n");
    let o = run(&["chow", "--box", "2,8", "--term", "32*8,8", "--op", "degree"]);
    assert_eq!(stdout(&o), "32\n");
    let o = run(&[
        "chow", "--box", "2,3", "--term", "2*2,1", "--term", "-1*1", "--op", "identity",
        "--format", "json",
    ]);
    assert_eq!(
        json_of(&o)["terms"],
        json!([{"partition": [1], "coeff": -1}, {"partition": [2, 1], "coeff": 2}])
    );
    let o = run(&[
        "chow", "--box", "2,2", "--term", "1", "--op", "product", "--with", "1", "--format", "json",
    ]);
    assert_eq!(
        json_of(&o)["terms"],
        json!([{"partition": [1, 1], "coeff": 1}, {"partition": [2], "coeff": 1}])
    );
}

#[test]
fn decompose_command() {
    let o = run(&["decompose", "--n", "3", "--root", "2,5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(2,5) = (1,3) + 1*(1,2)\n");
    let v = json_of(&run(&[
        "decompose",
        "--n",
        "3",
        "--root",
        "2,5",
        "--format",
        "json",
    ]));
    assert_eq!(
        (v["first"].clone(), v["second"].clone(), v["k"].clone()),
        (json!([1, 3]), json!([1, 2]), json!(1))
    );
    let o = run(&["decompose", "--n", "3", "--root", "1,0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("simple root"));
}

#[test]
fn glue_command() {
    let v = json_of(&run_owned(&with(
        SPLIT_19_31_2,
        &["--beta", "3,3,1", "--format", "json"],
    )));
    let split = &v["splits"][0];
    assert_eq!(split["parameter_total"], json!(15));
    assert_eq!(split["kac_parameter_count"], json!(15));
    assert_eq!(split["beta"], json!([9, 15, 1]));
    let v = json_of(&run_owned(&with(SPLIT_19_31_2, &["--format", "json"])));
    assert!(!v["splits"].as_array().unwrap().is_empty());
    let o = run_owned(&with(SPLIT_19_31_2, &["--beta", "0,0,0"]));
    assert_eq!(o.status.code(), Some(2));
}
