mod check;
mod config;
mod embed;
mod obstruct;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::{Format, RunConfig};

#[derive(Parser)]
#[command(name = "semitop", version, about = "Finite topological semigroup workbench")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Print more detail; repeat for more.
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the bundled counterexample families.
    Catalog {
        /// Show one family only.
        id: Option<String>,
        /// Shorthand for --format json.
        #[arg(long)]
        json: bool,
    },
    /// Run the forcing engine on a catalog id or an instance file.
    Obstruct {
        instance: String,
        #[arg(long, default_value_t = semitop::obstruct::catalog::DEFAULT_WINDOW)]
        window: usize,
        /// Defaults to window - 2.
        #[arg(long)]
        guard: Option<usize>,
        /// Right simple semigroup for right_simple_zero: Z2, R2 or S3.
        #[arg(long, default_value = "Z2")]
        group: String,
        /// Where to write the verdict JSON; `-` for none.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one property checker on a file.
    Check {
        #[arg(value_enum)]
        kind: check::CheckKind,
        file: PathBuf,
    },
    /// Build and verify an embedding.
    Embed {
        #[arg(value_enum)]
        kind: embed::EmbedKind,
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// For `adjoin`: which element to adjoin.
        #[arg(long, value_enum, default_value_t = embed::AdjoinWhat::Zero)]
        with: embed::AdjoinWhat,
        /// Where to write the map file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Completed commands either confirm the property asked about or refute it.
pub enum Outcome {
    Holds,
    Fails,
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    let cfg = RunConfig {
        format: cli.format,
        verbosity: cli.verbose,
        ..RunConfig::default()
    };
    match cli.command {
        Command::Catalog { id, json } => {
            let cfg = RunConfig {
                format: if json { Format::Json } else { cfg.format },
                ..cfg
            };
            obstruct::cmd_catalog(&cfg, id.as_deref())
        }
        Command::Obstruct {
            instance,
            window,
            guard,
            group,
            out,
        } => {
            let cfg = RunConfig {
                window,
                guard: guard.unwrap_or(window.saturating_sub(2)),
                ..cfg
            };
            cfg.validate()?;
            obstruct::cmd_obstruct(&cfg, &instance, &group, out.as_deref())
        }
        Command::Check { kind, file } => check::cmd_check(&cfg, kind, &file),
        Command::Embed { kind, files, with, out } => embed::cmd_embed(&cfg, kind, &files, with, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(Outcome::Holds) => ExitCode::SUCCESS,
        Ok(Outcome::Fails) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
