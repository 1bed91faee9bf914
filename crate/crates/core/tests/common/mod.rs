#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};
use std::io::Write;

pub fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_dualq")
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Golden inputs, named `<command>_<case>.dq` with the command in snake case.
pub fn golden_cases() -> Vec<(String, &'static str)> {
    let commands = ["check_orthonormal", "check_unit", "magnitude", "norms"];
    let mut cases: Vec<(String, &'static str)> = std::fs::read_dir(golden_dir())
        .expect("golden directory")
        .filter_map(|e| {
            let name = e.ok()?.file_name().into_string().ok()?;
            let stem = name.strip_suffix(".dq")?.to_string();
            let cmd = commands.iter().find(|c| stem.starts_with(&format!("{c}_")))?;
            Some((stem, *cmd))
        })
        .collect();
    cases.sort();
    cases
}

pub fn command_arg(snake: &str) -> String {
    snake.replace('_', "-")
}

pub fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("spawn dualq")
}

pub fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(bin())
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn dualq");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().expect("wait for dualq")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

/// Runs one golden case in `format` and returns (output, exit code).
pub fn run_golden(stem: &str, cmd: &str, format: &str) -> (String, i32) {
    let input = golden_dir().join(format!("{stem}.dq"));
    let o = run(&[&command_arg(cmd), "--format", format, input.to_str().unwrap()]);
    (stdout(&o), o.status.code().expect("exit code"))
}

pub fn expected_path(stem: &str, format: &str) -> PathBuf {
    let ext = if format == "json" { "json" } else { "txt" };
    golden_dir().join(format!("{stem}.{ext}"))
}
