//! Front end shared by the `grossone` binary: single expressions, scripts,
//! paradox reports and the REPL.
//!
//! Every entry point writes to the given streams and returns the process
//! exit status:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success (for a paradox: the report is resolved) |
//! | 1 | paradox report computed but not resolved |
//! | 2 | lex or parse error, bad command-line value |
//! | 3 | evaluation error |
//! | 4 | I/O error |
//! | 5 | unknown paradox |

use std::io::{BufRead, Write};
use std::path::Path;

use serde_json::json;

use crate::error::Error;
use crate::exprlang::{eval_str, print_value, LangError, Value};
use crate::grossnum::GrossNumber;
use crate::paradoxes::{
    default_width, galileo_report, hilbert_accommodate, multiplication_report, thomson_lamp,
    torricelli, LampState, ParadoxReport, PARADOX_NAMES,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNRESOLVED: i32 = 1;
pub const EXIT_SYNTAX: i32 = 2;
pub const EXIT_EVAL: i32 = 3;
pub const EXIT_IO: i32 = 4;
pub const EXIT_UNKNOWN_PARADOX: i32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Output {
    #[default]
    Text,
    Json,
}

pub fn exit_code(e: &LangError) -> i32 {
    match e {
        _ if e.is_syntax() => EXIT_SYNTAX,
        LangError::Eval(Error::UnknownParadox(_)) => EXIT_UNKNOWN_PARADOX,
        _ => EXIT_EVAL,
    }
}

fn error_json(e: &LangError) -> serde_json::Value {
    json!({ "kind": e.kind(), "message": e.to_string() })
}

fn value_json(input: &str, v: &Value) -> serde_json::Value {
    json!({ "input": input, "result": v.to_json() })
}

// Output to a closed pipe is not worth a distinct failure mode here.
fn emit(out: &mut dyn Write, line: &str) {
    let _ = writeln!(out, "{line}");
}

/// Evaluate one expression and print its value.
pub fn run_eval(expr: &str, mode: Output, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match eval_str(expr) {
        Ok(v) => {
            match mode {
                Output::Text => emit(out, &print_value(&v)),
                Output::Json => emit(out, &value_json(expr, &v).to_string()),
            }
            EXIT_OK
        }
        Err(e) => {
            if mode == Output::Json {
                emit(out, &json!({ "input": expr, "error": error_json(&e) }).to_string());
            }
            emit(err, &e.to_string());
            exit_code(&e)
        }
    }
}

/// Run a script file: one expression per line.
pub fn run_script(path: &Path, mode: Output, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match std::fs::read_to_string(path) {
        Ok(src) => run_script_source(&src, mode, out, err),
        Err(e) => {
            emit(err, &format!("IoError: {}: {e}", path.display()));
            EXIT_IO
        }
    }
}

/// Same as [`run_script`] on already loaded text. Blank lines and lines
/// starting with `#` are skipped; the first error stops the run.
pub fn run_script_source(src: &str, mode: Output, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    for (idx, raw) in src.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match eval_str(line) {
            Ok(v) => match mode {
                Output::Text => emit(out, &format!("{line} => {}", print_value(&v))),
                Output::Json => {
                    let mut obj = value_json(line, &v);
                    obj["line"] = json!(line_no);
                    emit(out, &obj.to_string());
                }
            },
            Err(e) => {
                if mode == Output::Json {
                    let obj = json!({ "line": line_no, "input": line, "error": error_json(&e) });
                    emit(out, &obj.to_string());
                }
                emit(err, &format!("line {line_no}: {e}"));
                return exit_code(&e);
            }
        }
    }
    EXIT_OK
}

/// Optional scenario parameters, as given on the command line.
#[derive(Debug, Clone, Default)]
pub struct ParadoxParams {
    pub m: Option<String>,
    pub switches: Option<String>,
    pub initial: Option<LampState>,
    pub h: Option<String>,
}

fn number_param(src: Option<&str>, default: GrossNumber) -> Result<GrossNumber, LangError> {
    match src {
        Some(s) => s.parse(),
        None => Ok(default),
    }
}

/// Compute a named report.
pub fn paradox_report(name: &str, params: &ParadoxParams) -> Result<ParadoxReport, LangError> {
    let report = match name {
        "galileo" => galileo_report(),
        "multiplication" => multiplication_report(),
        "hilbert" => {
            let m = number_param(params.m.as_deref(), GrossNumber::one())?;
            hilbert_accommodate(&m)?
        }
        "thomson" => {
            let k = number_param(params.switches.as_deref(), GrossNumber::grossone())?;
            thomson_lamp(params.initial.unwrap_or(LampState::On), &k)?
        }
        "torricelli" => {
            let h = number_param(params.h.as_deref(), default_width())?;
            torricelli(&h)?
        }
        other => return Err(Error::UnknownParadox(other.into()).into()),
    };
    Ok(report)
}

/// Print a named report; exit 0 only when every claim checks out.
pub fn run_paradox(
    name: &str,
    params: &ParadoxParams,
    mode: Output,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    match paradox_report(name, params) {
        Ok(r) => {
            match mode {
                Output::Text => emit(out, &r.to_string()),
                Output::Json => emit(out, &r.to_json().to_string()),
            }
            if r.resolved() {
                EXIT_OK
            } else {
                EXIT_UNRESOLVED
            }
        }
        Err(e) => {
            emit(err, &e.to_string());
            if matches!(e, LangError::Eval(Error::UnknownParadox(_))) {
                emit(err, &format!("known paradoxes: {}", PARADOX_NAMES.join(", ")));
            }
            exit_code(&e)
        }
    }
}

/// Interactive loop. `:json` toggles the output mode, `:quit` or end of
/// input leaves. Errors are reported and the loop goes on.
pub fn run_repl(input: &mut dyn BufRead, mode: Output, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut mode = mode;
    let mut line = String::new();
    loop {
        let _ = write!(out, "g> ");
        let _ = out.flush();
        line.clear();
        match input.read_line(&mut line) {
            Ok(0) => return EXIT_OK,
            Ok(_) => {}
            Err(e) => {
                emit(err, &format!("IoError: {e}"));
                return EXIT_IO;
            }
        }
        let cmd = line.trim();
        match cmd {
            "" => continue,
            ":quit" | ":q" => return EXIT_OK,
            ":json" => {
                mode = match mode {
                    Output::Text => Output::Json,
                    Output::Json => Output::Text,
                };
                let name = if mode == Output::Json { "json" } else { "text" };
                emit(out, &format!("output: {name}"));
            }
            _ => {
                run_eval(cmd, mode, out, err);
            }
        }
    }
}
