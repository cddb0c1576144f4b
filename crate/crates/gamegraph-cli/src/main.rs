//! `gamegraph` command-line driver.

mod commands;
mod error;
mod play;
mod select;

use clap::{Args, Parser, Subcommand};
use error::CliError;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "gamegraph", version, about = "On-line coloring games, game graphs and geometric models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Which game to play and with which parameters.
#[derive(Args, Clone, Debug)]
pub struct GameArgs {
    /// int, iov, iov3, abs, coco, ifil or plain; inferred from the
    /// presenter when omitted.
    #[arg(long)]
    pub game: Option<String>,
    /// Clique bound of the game.
    #[arg(long)]
    pub k: Option<usize>,
    /// Block bound; for abs and iov it switches to the block-bounded game.
    #[arg(long)]
    pub b: Option<usize>,
}

#[derive(Args, Clone, Debug)]
pub struct StrategyArgs {
    /// figure2, figure5, present, random or empty.
    #[arg(long)]
    pub presenter: Option<String>,
    /// Parameter `m` of the present strategy.
    #[arg(long)]
    pub m: Option<usize>,
    /// Round limit for the random presenter.
    #[arg(long, default_value_t = 20)]
    pub rounds: usize,
    /// first_fit, random, minimax, abs_online, iov_online, iov3_online,
    /// coco_online or ifil_online.
    #[arg(long, default_value = "first_fit")]
    pub algorithm: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Copy of the game's block bound.
    #[arg(skip)]
    pub b: Option<usize>,
}

#[derive(Args, Clone, Debug)]
pub struct Output {
    /// Write the JSON result here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Add wall-clock time to reports (makes output non-reproducible).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Play a presenter against an algorithm and report the result.
    Force {
        #[command(flatten)]
        game: GameArgs,
        #[command(flatten)]
        strategy: StrategyArgs,
        /// Repeat with seeds seed, seed+1, ...
        #[arg(long, default_value_t = 1)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Include the full scenario in the report.
        #[arg(long)]
        transcript: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Enumerate a presenter's strategy tree and emit its game graph.
    Extract {
        #[command(flatten)]
        game: GameArgs,
        #[command(flatten)]
        strategy: StrategyArgs,
        /// Cap on the colors Algorithm may use while enumerating.
        #[arg(long, default_value_t = 64)]
        color_bound: usize,
        #[arg(long, default_value_t = gamegraph::engine::DEFAULT_TREE_BUDGET)]
        budget: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Exact minimax value of a game cut off after some rounds.
    Value {
        #[command(flatten)]
        game: GameArgs,
        #[arg(long)]
        rounds: usize,
        #[arg(long)]
        max_colors: usize,
        #[arg(long, default_value_t = 5_000_000)]
        budget: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Exact clique number and chromatic number of a graph JSON file.
    Chromatic {
        file: PathBuf,
        /// Compute the K_k-free chromatic number instead.
        #[arg(long)]
        kfree: Option<usize>,
        #[arg(long, default_value_t = gamegraph::graph::DEFAULT_BUDGET)]
        budget: u64,
        #[command(flatten)]
        output: Output,
    },
    /// k-clique breadth-first search levels of a model's overlap graph.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Off-line coloring of a model or an abs game graph, with a bound.
    ColorOffline {
        file: PathBuf,
        /// exact or filament coloring of heavy paths (game graphs only).
        #[arg(long, default_value = "filament")]
        offline: String,
        #[command(flatten)]
        output: Output,
    },
    /// Geometric model of an int, abs or coco game graph.
    Synthesize {
        file: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Compare a model's graph with an expected graph and check cleanness.
    Verify {
        file: PathBuf,
        #[arg(long)]
        expected: Option<PathBuf>,
        /// intersection or overlap; defaults to intersection for filaments
        /// and overlap otherwise.
        #[arg(long)]
        mode: Option<String>,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Color a presenter's vertices by hand, one line per round.
    Play {
        #[command(flatten)]
        game: GameArgs,
        #[command(flatten)]
        strategy: StrategyArgs,
    },
}

fn run(cli: Cli) -> Result<bool, CliError> {
    use commands::*;
    match cli.command {
        Command::Force {
            game,
            strategy,
            trials,
            jobs,
            transcript,
            output,
        } => force(&game, &strategy, trials, jobs, transcript, &output),
        Command::Extract {
            game,
            strategy,
            color_bound,
            budget,
            output,
        } => extract(&game, &strategy, color_bound, budget, &output),
        Command::Value {
            game,
            rounds,
            max_colors,
            budget,
            output,
        } => value(&game, rounds, max_colors, budget, &output),
        Command::Chromatic {
            file,
            kfree,
            budget,
            output,
        } => chromatic(&file, kfree, budget, &output),
        Command::Decompose { file, k, output } => decompose(&file, k, &output),
        Command::ColorOffline { file, offline, output } => color_offline(&file, &offline, &output),
        Command::Synthesize { file, svg, output } => synthesize(&file, svg.as_deref(), &output),
        Command::Verify {
            file,
            expected,
            mode,
            svg,
            output,
        } => verify(&file, expected.as_deref(), mode.as_deref(), svg.as_deref(), &output),
        Command::Play { game, strategy } => play::play(&game, &strategy).map(|()| true),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            CliError::usage(e.to_string().trim().to_string()).report();
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            e.report();
            ExitCode::from(2)
        }
    }
}
