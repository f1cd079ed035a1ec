mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let outcome = match commands::run(&cli.command, &cli.common) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let config = serde_json::json!({ "command": &cli.command, "options": &cli.common });
    let text = output::render(&outcome.table, cli.common.format, &config);
    if let Err(e) = output::write(&text, cli.common.out.as_deref()) {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    if outcome.tolerance_exceeded {
        return ExitCode::from(4);
    }
    ExitCode::SUCCESS
}
