//! Command-line driver. Every command produces a [`Report`]: JSON with
//! sorted keys and canonical ordering, so equal configurations give equal
//! bytes regardless of `--jobs`.

mod args;
mod commands;
mod config;
mod report;

use std::ffi::OsString;

use clap::Parser;

pub use args::{Cli, Command, CommonArgs};
pub use config::{parse_config, GammaSource, Format, RunConfig, GUARD_ENV};
pub use report::{Report, SCHEMA_VERSION};

use crate::error::{Error, Result};

pub const COMMANDS: &[&str] = &["check-conditions", "orbits", "stabilize", "fg-torsion"];

/// Runs one command on a resolved configuration and returns the rendered report.
pub fn run(command: &str, cfg: &RunConfig) -> Result<String> {
    let mut report = Report::new(command, cfg)?;
    let work = |report: &mut Report| match command {
        "check-conditions" => commands::check_conditions(cfg, report),
        "orbits" => commands::orbits_cmd(cfg, report),
        "stabilize" => commands::stabilize(cfg, report),
        "fg-torsion" => commands::fg_torsion(cfg, report),
        other => Err(Error::Precondition(format!(
            "unknown command `{other}` ({})",
            COMMANDS.join(", ")
        ))),
    };
    match cfg.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?
            .install(|| work(&mut report))?,
        None => work(&mut report)?,
    }
    Ok(match cfg.format {
        Format::Json => report.to_json(),
        Format::Table => report.to_table(),
    })
}

/// Config given entirely as `key = value` text, with `EINL_GUARD` honoured.
pub fn run_with_config_text(command: &str, text: &str) -> Result<String> {
    let file = parse_config(text)?;
    let env = std::env::var(GUARD_ENV).ok();
    let cfg = RunConfig::resolve_layers(&CommonArgs::default(), &file, env.as_deref())?;
    run(command, &cfg)
}

/// Process entry point: 0 on success, 1 when a check or input fails, 2 on
/// usage errors.
pub fn main_entry<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let result = RunConfig::resolve(cli.command.args()).and_then(|cfg| {
        let text = run(cli.command.name(), &cfg)?;
        match &cfg.out {
            Some(path) => std::fs::write(path, text)?,
            None => print!("{text}"),
        }
        Ok(())
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
