use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use weil_cli::commands::{self, FlatOptions, Outcome, Source, EXIT_USAGE};
use weil_cli::CliError;
use weil_core::flat::Context;
use weil_core::identities::SuiteConfig;

/// Exact computation in covariant Weil algebras.
#[derive(Parser)]
#[command(name = "weil", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a definition: antisymmetry, Jacobi, form invariance, reps.
    Validate {
        /// Definition file (same as --file).
        path: Option<String>,
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Run the identity suite for one algebra, rep and context.
    Check {
        #[command(flatten)]
        session: SessionArgs,
        /// Random samples per identity.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Largest degree of the random samples.
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Evaluate an expression and print its normal form.
    Eval {
        #[command(flatten)]
        session: SessionArgs,
        expr: String,
    },
    /// Basic and flat subspaces up to a degree.
    Flat {
        #[command(flatten)]
        session: SessionArgs,
        #[command(flatten)]
        flat: FlatArgs,
    },
    /// Validation, identity suites and flat tables over the builtin catalog.
    Report {
        #[arg(long, required = true)]
        all_builtins: bool,
        /// Random samples per identity.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Truncation degree of the flat tables.
        #[arg(long, default_value_t = 1)]
        max_degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct SourceArgs {
    /// Builtin algebra: abelian(n), heisenberg3, so3, sl2.
    #[arg(long, conflicts_with = "file")]
    builtin: Option<String>,
    /// JSON definition file.
    #[arg(long)]
    file: Option<String>,
}

impl SourceArgs {
    fn source(&self, path: Option<&String>) -> Result<Source, CliError> {
        match (&self.builtin, &self.file, path) {
            (Some(b), None, None) => Ok(Source::Builtin(b.clone())),
            (None, Some(f), None) | (None, None, Some(f)) => Ok(Source::File(f.clone())),
            (None, None, None) => Err(CliError::Usage("give --builtin NAME or --file PATH".into())),
            _ => Err(CliError::Usage("give exactly one algebra source".into())),
        }
    }
}

#[derive(Args)]
struct SessionArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, default_value = "adjoint")]
    rep: String,
    /// Work in the classical algebra (default).
    #[arg(long, conflicts_with = "quantum")]
    classical: bool,
    /// Work in the quantum algebra; needs an orthonormal form.
    #[arg(long)]
    quantum: bool,
}

impl SessionArgs {
    fn context(&self) -> Context {
        if self.quantum {
            Context::Quantum
        } else {
            Context::Classical
        }
    }
}

#[derive(Args)]
struct FlatArgs {
    #[arg(long, default_value_t = 2)]
    max_degree: usize,
    /// Emit the versioned JSON report.
    #[arg(long)]
    json: bool,
    /// Random samples for the closure check.
    #[arg(long, default_value_t = 50)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Validate { path, source } => commands::validate(&source.source(path.as_ref())?),
        Command::Check {
            session,
            samples,
            max_degree,
            seed,
        } => {
            let cfg = SuiteConfig {
                samples,
                max_degree,
                seed,
            };
            let source = session.source.source(None)?;
            commands::check(&source, &session.rep, session.context(), &cfg)
        }
        Command::Eval { session, expr } => {
            let source = session.source.source(None)?;
            commands::eval(&source, &session.rep, session.context(), &expr)
        }
        Command::Flat { session, flat } => {
            let source = session.source.source(None)?;
            let opts = FlatOptions {
                max_degree: flat.max_degree,
                samples: flat.samples,
                seed: flat.seed,
                json: flat.json,
            };
            commands::flat(&source, &session.rep, session.context(), &opts)
        }
        Command::Report {
            all_builtins: _,
            samples,
            max_degree,
            seed,
        } => {
            let cfg = SuiteConfig {
                samples,
                seed,
                ..SuiteConfig::default()
            };
            let opts = FlatOptions {
                max_degree,
                samples: 20,
                seed,
                json: false,
            };
            commands::report_all(&cfg, &opts)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
