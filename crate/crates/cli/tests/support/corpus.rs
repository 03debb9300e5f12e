//! Regression invocations of the `coxhodge` binary: arguments, the schema
//! the output must satisfy, and the expected exit code.

#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

pub struct Case {
    pub args: Vec<String>,
    pub schema: &'static str,
    pub exit: i32,
}

pub fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

pub fn schema_path(name: &str) -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "..", "..", "schemas", &format!("{name}.schema.json")].iter().collect()
}

/// Words of `line`, with `@file` replaced by the path of a test fixture.
fn args(line: &str) -> Vec<String> {
    line.split_whitespace().map(|w| w.strip_prefix('@').map_or_else(|| w.to_string(), data)).collect()
}

pub fn corpus() -> Vec<Case> {
    let table: &[(&str, &str, i32)] = &[
        ("fan check --fan @p3.json", "fan_check", 0),
        ("fan check --fan @broken.json", "error", 1),
        ("classgroup --fan @p121.json --class 1 --class 2", "classgroup", 0),
        ("classgroup --fan @p2.json --class -1", "classgroup", 0),
        ("basis --fan @p121.json --degree 3", "basis", 0),
        ("oda --fan @p3.json --pair 1 1 --pair 2 1", "oda", 0),
        ("oda --fan @p121.json --pair 1 1 --unchecked", "oda", 2),
        ("oda --fan @p121.json --pair 1 1", "error", 1),
        ("quasismooth --fan @p3.json --poly @fermat4.txt", "quasismooth", 0),
        ("quasismooth --fan @p3.json --poly @cone4.txt", "quasismooth", 2),
        ("quasismooth --fan @p3.json --poly @split.txt --m-max 6", "quasismooth", 3),
        ("quasismooth --fan @p3.json --poly @quadrics_p3.txt --m-max 6", "quasismooth", 0),
        ("nondegenerate --fan @p3.json --poly @fermat4.txt", "nondegenerate", 0),
        ("nondegenerate --fan @p3.json --poly @cone4.txt --point 0,0,0,1", "nondegenerate", 2),
        ("hodge hypersurface --fan @p3.json --poly @fermat4.txt --index 1", "hodge", 0),
        ("hodge hypersurface --fan @p2.json --poly @cubic.txt --index 1", "hodge", 0),
        ("hodge hypersurface --fan @p3.json --poly @cone4.txt --index 1", "hodge", 0),
        ("hodge intersection --fan @p3.json --poly @quadrics_p3.txt --index 3 --m-max 6", "hodge", 0),
        ("hodge intersection --fan @p3.json --poly @quadrics_p3.txt --index 2", "error", 1),
        ("hodge intersection --fan @p5.json --poly @cubics_p5.txt --index 4 --no-certify", "hodge", 0),
        ("gorenstein --fan @p2.json --ideal @squares_p2.json --socle 3", "gorenstein", 0),
        ("gorenstein --fan @p3.json --ideal @squares_p3.json --socle 3", "gorenstein", 2),
        ("gorenstein --fan @p3.json --toric-jacobian @fermat4.txt --socle 12", "gorenstein", 0),
        ("nl --fan @p3.json --beta 5 --eta 1 --k 1 --pair 1 1 --deg-v 1 --delta 1/16 --r 4", "nl", 0),
        ("nl --fan @p3.json --beta 4 --eta 2 --k 1", "nl", 0),
        ("step1 --a 1,2,3 --b -2 --k 3", "step1", 0),
        ("bounds --r 4 --k 1 --d 2 --m-beta 4", "bounds", 0),
        ("bounds --r 2 --k 1", "error", 1),
        ("generic --fan @p2.json --degree 3 --degree 2 --seed 5", "generic", 0),
        ("no-such-command", "error", 1),
    ];
    table.iter().map(|&(line, schema, exit)| Case { args: args(line), schema, exit }).collect()
}

pub struct Run {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run(args: &[String]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_coxhodge")).args(args).output().expect("binary runs");
    Run {
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
        code: out.status.code().unwrap_or(-1),
    }
}

pub fn with(args: &[String], extra: &[&str]) -> Vec<String> {
    let mut v = args.to_vec();
    v.extend(extra.iter().map(|s| s.to_string()));
    v
}
