//! Experiment runner and script front end.

pub mod experiments;
pub mod golden;
pub mod report;

use std::path::Path;

use chowlab_core::dsl::{parse, Session};

/// Process exit codes.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const CHECK_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const PARSE: i32 = 3;
    pub const EVAL: i32 = 4;
}

/// Outcome of running a script file.
#[derive(Debug)]
pub struct ScriptRun {
    pub code: i32,
    pub transcript: String,
    pub error: Option<String>,
}

pub fn run_script(path: &Path) -> ScriptRun {
    let fail = |code, transcript, msg: String| ScriptRun {
        code,
        transcript,
        error: Some(format!("{}: {msg}", path.display())),
    };
    let src = match std::fs::read_to_string(path) {
        Ok(s) => s,
        Err(e) => return fail(exit::USAGE, String::new(), e.to_string()),
    };
    let script = match parse(&src) {
        Ok(s) => s,
        Err(e) => return fail(exit::PARSE, String::new(), e.to_string()),
    };
    let mut session = Session::new();
    match session.run(&script) {
        Ok(()) => ScriptRun {
            code: exit::PASS,
            transcript: session.into_transcript(),
            error: None,
        },
        Err(e) => fail(exit::EVAL, session.into_transcript(), e.to_string()),
    }
}
