use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use cayley_klein::cli::{self, CommandOutput, Suite};
use clap::{Parser, Subcommand};

/// Exact checks of diametral-quadrangle theorems in Cayley-Klein planes.
#[derive(Parser)]
#[command(name = "ck", version)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a curated deterministic example suite.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
    },
    /// Check randomly sampled configurations.
    Fuzz {
        /// euclidean, hyperbolic, elliptic, simplex or a shadow kind such as hexagon-II.
        #[arg(long)]
        kind: String,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        /// Overridden by the CK_SEED environment variable.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Dimension for simplex fuzzing.
        #[arg(long, default_value_t = 3)]
        dim: usize,
    },
    /// Render a built-in figure as SVG.
    Figure {
        #[arg(long)]
        name: String,
        /// Scene file replacing the built-in default scene.
        #[arg(long)]
        scene: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Parse a scene file and print it in canonical form.
    SceneCheck { path: PathBuf },
}

fn main() -> ExitCode {
    let out = match Args::parse().command {
        Command::Verify { suite } => cli::run_verify(suite),
        Command::Fuzz { kind, trials, seed, dim } => {
            match cli::effective_seed(seed, std::env::var("CK_SEED").ok().as_deref()) {
                Ok(seed) => cli::run_fuzz(&kind, dim, trials, seed),
                Err(e) => CommandOutput { stdout: String::new(), stderr: format!("{e}\n"), code: cli::EXIT_USAGE },
            }
        }
        Command::Figure { name, scene, out } => cli::run_figure(&name, scene.as_deref(), &out),
        Command::SceneCheck { path } => cli::run_scene_check(&path),
    };
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code)
}
