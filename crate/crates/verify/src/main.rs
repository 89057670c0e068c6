use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use cubic_core::exactnum::FieldHandle;
use cubic_verify::input::{check_input, parse_input_doc};
use cubic_verify::report::{Report, ScenarioResult};
use cubic_verify::scenarios::registry;

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Check group actions, twists and line orbits on cubic surfaces.
#[derive(Parser)]
#[command(name = "verify", version)]
struct Cli {
    /// Scenario id, or "all".
    #[arg(long, default_value = "all")]
    scenario: String,
    /// Restrict field-dependent scenarios to this field.
    #[arg(long)]
    field: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Check a JSON input document instead of the registered scenarios.
    #[arg(long)]
    input: Option<PathBuf>,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("verify: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let results: Vec<ScenarioResult> = if let Some(path) = &cli.input {
        let doc = match parse_input_doc(path) {
            Ok(d) => d,
            Err(e) => return usage(e),
        };
        match check_input(&doc) {
            Ok(r) => vec![r],
            Err(e) => vec![ScenarioResult::tool_failure("input", e.to_string())],
        }
    } else {
        let field = match cli.field.as_deref().map(FieldHandle::by_name).transpose() {
            Ok(f) => f,
            Err(e) => return usage(e),
        };
        let reg = registry(field.as_ref());
        let chosen: Vec<_> = reg.iter().filter(|s| cli.scenario == "all" || s.id == cli.scenario).collect();
        if chosen.is_empty() {
            return usage(format!("unknown scenario `{}`", cli.scenario));
        }
        std::thread::scope(|s| {
            let handles: Vec<_> = chosen.iter().map(|sc| (sc, s.spawn(move || sc.run()))).collect();
            handles
                .into_iter()
                .map(|(sc, h)| h.join().unwrap_or_else(|_| ScenarioResult::tool_failure(&sc.id, "panicked".into())))
                .collect()
        })
    };
    let report = Report::new(results);
    match cli.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    ExitCode::from(report.exit_code() as u8)
}
