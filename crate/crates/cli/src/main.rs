use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use invar_cli::cache::CACHE_ENV;
use invar_cli::suite::run_suite;
use invar_cli::{run, Cache, CliError, Command, Context, Format, RunConfig};

#[derive(Debug, Parser)]
#[command(name = "invar", version, about = "Modular invariant theory over F2: config-driven verification runs")]
struct Cli {
    /// Degree bound (default from config; `detect` defaults to 60).
    #[arg(long, global = true)]
    bound: Option<u32>,
    /// Output format (default from config).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Cache directory; also read from INVAR_CACHE_DIR.
    #[arg(long, global = true, env = CACHE_ENV)]
    cache: Option<PathBuf>,
    /// Run configuration replacing the bundled one.
    #[arg(long, global = true, env = "INVAR_CONFIG")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Top,
}

#[derive(Debug, Subcommand)]
enum Top {
    #[command(flatten)]
    Run(Command),
    /// Every acceptance criterion, one line each.
    Suite {
        /// Also print each sub-check.
        #[arg(long)]
        verbose: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match real_main(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("invar: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn real_main(cli: Cli) -> Result<u8, CliError> {
    let config = match &cli.config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::bundled(),
    };
    let ctx = Context::new(config)?;
    let format = cli.format.unwrap_or(ctx.config.defaults.format);
    let cache_dir = cli.cache.clone().or_else(|| ctx.config.defaults.cache_dir.clone());
    let cache = cache_dir.map(Cache::new);
    let mut out = std::io::stdout().lock();
    match &cli.command {
        Top::Run(cmd) => {
            let report = run(&ctx, cmd, cli.bound, cache.as_ref())?;
            let _ = out.write_all(report.render(format).as_bytes());
            Ok(if report.ok { 0 } else { 1 })
        }
        Top::Suite { verbose } => {
            let outcomes = run_suite(&ctx, cache.as_ref(), |o| {
                if format == Format::Text {
                    let _ = writeln!(out, "{}", o.line());
                    if *verbose || !o.passed {
                        for d in &o.details {
                            let _ = writeln!(out, "    {d}");
                        }
                    }
                    let _ = out.flush();
                }
            });
            if format == Format::Json {
                let s = serde_json::to_string_pretty(&outcomes).expect("outcomes serialize");
                let _ = writeln!(out, "{s}");
            } else {
                let passed = outcomes.iter().filter(|o| o.passed).count();
                let _ = writeln!(out, "{passed}/{} criteria pass", outcomes.len());
            }
            Ok(if outcomes.iter().all(|o| o.passed) { 0 } else { 1 })
        }
    }
}
