//! Runs the built binary and validates its JSON against the shipped schemas.
#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value as Json;

pub fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

pub fn fixture(name: &str) -> String {
    root().join("fixtures").join(format!("{name}.hgf")).display().to_string()
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_homtool")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

/// Runs with `--json`, checks the document against `schema` and returns it.
pub fn run_json(schema: &str, args: &[&str]) -> (i32, Json) {
    let mut all = args.to_vec();
    all.push("--json");
    let r = run(&all);
    let doc: Json = serde_json::from_str(&r.stdout).unwrap_or_else(|e| panic!("{e}: {}", r.stdout));
    let schema = if doc.get("error").is_some() { "error" } else { schema };
    validate(schema, &doc);
    (r.code, doc)
}

fn load_schema(name: &str) -> Json {
    let path = root().join("schemas").join(format!("{name}.schema.json"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

pub fn validate(name: &str, doc: &Json) {
    let mut opts = jsonschema::options();
    for shared in ["vertexmap", "plan"] {
        let resource = jsonschema::Resource::from_contents(load_schema(shared)).unwrap();
        opts = opts.with_resource(format!("urn:homtool:schema:{shared}"), resource);
    }
    let validator = opts.build(&load_schema(name)).unwrap();
    let errors: Vec<String> = validator.iter_errors(doc).map(|e| format!("{} at {}", e, e.instance_path)).collect();
    assert!(errors.is_empty(), "{name} schema: {errors:?}\n{doc:#}");
}

/// First line of text output, `name = value`, as its value.
pub fn text_value(stdout: &str) -> String {
    let line = stdout.lines().next().unwrap_or_default();
    line.rsplit(" = ").next().unwrap_or_default().to_string()
}
