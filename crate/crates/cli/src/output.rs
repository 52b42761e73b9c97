use std::fmt::Write as _;
use std::process::ExitCode;

use serde_json::{json, Value};
use skewloci::VERSION;

use crate::commands::{Failure, Outcome};
use crate::Format;

pub const EXIT_INPUT: u8 = 2;
pub const EXIT_PRECONDITION: u8 = 3;
pub const EXIT_FALSIFIED: u8 = 4;

fn envelope(command: &str, seed: u64, inputs: Value) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("command".into(), command.into());
    m.insert("version".into(), VERSION.into());
    m.insert("seed".into(), seed.into());
    m.insert("inputs".into(), inputs);
    m
}

pub fn emit(seed: u64, format: Format, outcome: Outcome) -> ExitCode {
    let mut doc = envelope(&outcome.command, seed, outcome.inputs);
    let code = match outcome.report {
        Ok(report) => {
            doc.insert("result".into(), report.result);
            match report.falsified {
                None => 0,
                Some(msg) => {
                    eprintln!("falsified: {msg}");
                    doc.insert("falsified".into(), msg.into());
                    EXIT_FALSIFIED
                }
            }
        }
        Err(failure) => {
            let (code, kind, message, details) = match failure {
                Failure::Input(m) => (EXIT_INPUT, "input", m, None),
                Failure::Precondition { message, details } => (EXIT_PRECONDITION, "precondition", message, details),
            };
            eprintln!("error: {message}");
            let mut err = json!({"kind": kind, "message": message, "exit_code": code});
            if let Some(d) = details {
                err["details"] = d;
            }
            doc.insert("error".into(), err);
            code
        }
    };
    print(format, &Value::Object(doc));
    ExitCode::from(code)
}

/// Usage errors from argument parsing, reported in the same envelope.
pub fn emit_usage_error(seed: u64, format: Format, message: &str) -> ExitCode {
    eprintln!("{message}");
    let mut doc = envelope("usage", seed, Value::Null);
    let first = message
        .lines()
        .next()
        .unwrap_or_default()
        .trim_start_matches("error: ")
        .to_string();
    doc.insert(
        "error".into(),
        json!({"kind": "input", "message": first, "exit_code": EXIT_INPUT}),
    );
    print(format, &Value::Object(doc));
    ExitCode::from(EXIT_INPUT)
}

fn print(format: Format, doc: &Value) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(doc).expect("serialisable")),
        Format::Text => {
            let mut out = String::new();
            render(&mut out, "", doc);
            print!("{out}");
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => Some(format!(
            "[{}]",
            a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")
        )),
        _ => None,
    }
}

/// One `path: value` line per leaf.
fn render(out: &mut String, prefix: &str, v: &Value) {
    if let Some(s) = scalar(v) {
        let _ = writeln!(out, "{prefix}: {s}");
        return;
    }
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, x)| render(out, &join(k), x)),
        Value::Array(a) => a
            .iter()
            .enumerate()
            .for_each(|(i, x)| render(out, &join(&i.to_string()), x)),
        _ => unreachable!(),
    }
}
