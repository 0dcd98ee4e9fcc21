//! Command implementations behind the `abc-spectra` binary. Each command
//! renders its whole output into a string; [`run`] writes it out.

pub mod args;
mod commands;

use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::Context;

pub use args::{Cli, Command};
pub use commands::{
    cmd_eigenlines, cmd_extremes, cmd_graph, cmd_spectrum, cmd_transition_curve, cmd_verify,
};

/// Current version of the JSON layouts.
pub const SCHEMA_VERSION: u32 = 1;

/// Bad flag combination, reported with exit status 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// Rendered command output. `success` is false when a check ran and failed.
#[derive(Debug, Clone, PartialEq)]
pub struct Rendered {
    pub text: String,
    pub success: bool,
}

impl Rendered {
    pub fn ok(text: String) -> Self {
        Self {
            text,
            success: true,
        }
    }
}

pub fn usage<T>(msg: impl Into<String>) -> anyhow::Result<T> {
    Err(UsageError(msg.into()).into())
}

pub fn run(cli: &Cli) -> anyhow::Result<bool> {
    let (rendered, out) = match &cli.command {
        Command::Spectrum(a) => (cmd_spectrum(a)?, &a.out.out),
        Command::Eigenlines(a) => (cmd_eigenlines(a)?, &a.out.out),
        Command::TransitionCurve(a) => (cmd_transition_curve(a)?, &a.out.out),
        Command::Extremes(a) => (cmd_extremes(a)?, &a.out.out),
        Command::Verify(a) => (cmd_verify(a)?, &a.out.out),
        Command::Graph(a) => (cmd_graph(a)?, &a.out.out),
    };
    emit(out.as_deref(), &rendered.text)?;
    Ok(rendered.success)
}

fn emit(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => match std::io::stdout().lock().write_all(text.as_bytes()) {
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
            r => r.context("writing stdout"),
        },
    }
}
