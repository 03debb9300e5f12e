#[path = "support/corpus.rs"]
mod corpus;

use corpus::{corpus, data, run, schema_path, with};
use jsonschema::JSONSchema;
use serde_json::Value;
use std::collections::BTreeMap;
use std::fs;

fn schemas() -> BTreeMap<&'static str, JSONSchema> {
    let mut out = BTreeMap::new();
    for case in corpus() {
        out.entry(case.schema).or_insert_with(|| {
            let doc: Value = serde_json::from_str(&fs::read_to_string(schema_path(case.schema)).unwrap()).unwrap();
            JSONSchema::compile(&doc).unwrap_or_else(|e| panic!("{}: {e}", case.schema))
        });
    }
    out
}

fn args(line: &str) -> Vec<String> {
    line.split_whitespace().map(|w| w.strip_prefix('@').map_or_else(|| w.to_string(), data)).collect()
}

#[test]
fn reports_match_schemas_and_exit_codes() {
    let schemas = schemas();
    for case in corpus() {
        let r = run(&case.args);
        assert_eq!(r.code, case.exit, "{:?}\n{}", case.args, r.stdout);
        let value: Value = serde_json::from_str(&r.stdout).unwrap_or_else(|e| panic!("{:?}: {e}", case.args));
        let schema = &schemas[case.schema];
        let msgs: Vec<String> = match schema.validate(&value) {
            Ok(()) => Vec::new(),
            Err(errors) => errors.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
        };
        assert!(msgs.is_empty(), "{:?} violates {}: {msgs:#?}", case.args, case.schema);
    }
}

#[test]
fn documented_examples() {
    let r = run(&args("hodge hypersurface --fan @p3.json --poly @fermat4.txt --index 1"));
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!((r.code, v["dimension"].as_u64()), (0, Some(19)));
    assert_eq!(v["index_pair"], serde_json::json!([1, 1]));

    let r = run(&args("quasismooth --fan @p3.json --poly @cone4.txt"));
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(r.code, 2);
    assert_eq!(v["certificate"]["status"], "refuted");
    assert_eq!(v["certificate"]["witness"], serde_json::json!(["0", "0", "0", "1"]));

    let r = run(&args("fan check --fan @broken.json"));
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!((r.code, v["error"]["kind"].as_str()), (1, Some("IncompleteFan")));
}

/// Independent flattening of a JSON document into `(path, leaf)` pairs.
fn leaves(v: &Value, path: &str, out: &mut Vec<(String, String)>) {
    let child = |k: String| if path.is_empty() { k } else { format!("{path}.{k}") };
    match v {
        Value::Object(m) if !m.is_empty() => m.iter().for_each(|(k, x)| leaves(x, &child(k.clone()), out)),
        Value::Array(a) if !a.is_empty() => a.iter().enumerate().for_each(|(i, x)| leaves(x, &child(i.to_string()), out)),
        Value::String(s) => out.push((path.to_string(), s.clone())),
        other => out.push((path.to_string(), other.to_string())),
    }
}

fn numbers(pairs: &[(String, String)]) -> Vec<String> {
    pairs
        .iter()
        .map(|(_, v)| v)
        .filter(|v| v.chars().next().is_some_and(|c| c.is_ascii_digit() || c == '-'))
        .cloned()
        .collect()
}

#[test]
fn table_and_json_carry_the_same_content() {
    for case in corpus() {
        let json = run(&case.args);
        let table = run(&with(&case.args, &["--format", "table"]));
        let mut expected = Vec::new();
        leaves(&serde_json::from_str(&json.stdout).unwrap(), "", &mut expected);
        if case.args[0] == "no-such-command" {
            // Usage errors are reported before the format is known.
            continue;
        }
        let got: Vec<(String, String)> = table
            .stdout
            .lines()
            .map(|l| {
                let (k, v) = l.split_once('\t').expect("tab-separated");
                (k.to_string(), v.to_string())
            })
            .collect();
        assert_eq!(table.code, json.code);
        if !expected.iter().any(|(_, v)| v.contains('\n')) {
            assert_eq!(got, expected, "{:?}", case.args);
        }
        assert_eq!(numbers(&got), numbers(&expected), "{:?}", case.args);
    }
}

#[test]
fn output_is_deterministic_across_runs_and_jobs() {
    for case in corpus() {
        let a = run(&case.args);
        let b = run(&case.args);
        let c = run(&with(&case.args, &["--jobs", "1"]));
        let d = run(&with(&case.args, &["--jobs", "4"]));
        assert_eq!(a.stdout, b.stdout, "{:?}", case.args);
        if case.args[0] != "no-such-command" {
            assert_eq!(a.stdout, c.stdout, "{:?}", case.args);
            assert_eq!(a.stdout, d.stdout, "{:?}", case.args);
        }
    }
}

#[test]
fn trace_goes_to_stderr_only() {
    for line in [
        "basis --fan @p2.json --degree 2",
        "hodge hypersurface --fan @p2.json --poly @cubic.txt --index 1",
        "gorenstein --fan @p2.json --ideal @squares_p2.json --socle 3",
        "quasismooth --fan @p3.json --poly @cone4.txt",
    ] {
        let plain = run(&args(line));
        let traced = run(&with(&args(line), &["--trace"]));
        assert_eq!(plain.stdout, traced.stdout);
        assert!(plain.stderr.is_empty());
        assert!(traced.stderr.contains("trace:"), "{line}");
    }
    let traced = run(&args("hodge hypersurface --fan @p2.json --poly @cubic.txt --index 1 --trace"));
    assert!(traced.stderr.contains("pivot columns"));
}

#[test]
fn inputs_are_validated() {
    let bad = [
        ("basis --fan @p2.json --degree 1,2", "MalformedClass"),
        ("basis --fan @p2.json --degree x", "MalformedClass"),
        ("step1 --b 1 --k 1 --m-max 0", "Usage"),
        ("hodge hypersurface --fan @p3.json --poly @quadrics_p3.txt --index 1", "InvalidArgument"),
        ("hodge hypersurface --fan @p3.json --poly @fermat4.txt --index 3", "IndexOutOfRange"),
        ("quasismooth --fan @p2.json --poly @fermat4.txt", "Parse"),
        ("quasismooth --fan @p3.json --poly @missing.txt", "Io"),
        ("nl --fan @p3.json --beta 4 --eta 1 --k 0", "InvalidArgument"),
        ("classgroup --fan @cubic.txt", "InvalidFanFile"),
    ];
    for (line, kind) in bad {
        let r = run(&args(line));
        let v: Value = serde_json::from_str(&r.stdout).unwrap();
        assert_eq!((r.code, v["error"]["kind"].as_str()), (1, Some(kind)), "{line}: {}", r.stdout);
    }
    let r = run(&args("classgroup --fan @p2.json --class {\"free\":[2],\"torsion\":[]}"));
    assert_eq!(r.code, 0);
}

#[test]
fn generic_polynomials_follow_the_seed() {
    let base = args("generic --fan @p3.json --degree 2 --degree 2");
    let a = run(&base);
    let b = run(&with(&base, &["--seed", "0"]));
    let c = run(&with(&base, &["--seed", "1"]));
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
    let v: Value = serde_json::from_str(&a.stdout).unwrap();
    let expected: Vec<String> =
        fs::read_to_string(data("quadrics_p3.txt")).unwrap().lines().filter(|l| !l.is_empty()).map(str::to_string).collect();
    assert_eq!(v["polynomials"], serde_json::json!(expected));
}

#[test]
fn help_and_version_succeed() {
    for flag in ["--help", "--version"] {
        let r = run(&[flag.to_string()]);
        assert_eq!(r.code, 0);
        assert!(!r.stdout.is_empty());
    }
}
