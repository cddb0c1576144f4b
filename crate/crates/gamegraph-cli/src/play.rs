//! Terminal mode: the user colors each presented vertex.

use crate::error::CliError;
use crate::select::{build_presenter, CliGame, GameSpec};
use crate::{with_game, GameArgs, StrategyArgs};
use gamegraph::engine::{color_admissible, Scenario};
use gamegraph::graph::palette_size;
use std::io::{BufRead, Write};

pub fn play(game: &GameArgs, strategy: &StrategyArgs) -> Result<(), CliError> {
    let spec = GameSpec::resolve(game, strategy.presenter.as_deref())?;
    let presenter = strategy
        .presenter
        .clone()
        .unwrap_or_else(|| spec.default_presenter().to_string());
    let args = StrategyArgs {
        b: game.b,
        presenter: Some(presenter.clone()),
        ..strategy.clone()
    };
    let stdin = std::io::stdin();
    let mut input = stdin.lock();
    let mut out = std::io::stdout();
    with_game!(spec, g => repl(&g, &presenter, &args, &mut input, &mut out))
}

fn repl<G: CliGame>(
    game: &G,
    presenter: &str,
    args: &StrategyArgs,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let p = build_presenter(game, presenter, args)?;
    let forbid = game.forbidden_class_clique();
    let mut s = Scenario::new();
    let mut colors: Vec<usize> = Vec::new();
    writeln!(out, "{} vs you in {}; type a color number, or q to stop", p.name(), game.name())?;
    while let Some(m) = p.next_move(&s, &colors)? {
        let edges = game
            .check_move(&s, &m)
            .map_err(|reason| CliError::new("engine", reason))?;
        s.push(m.clone(), edges.clone()).map_err(|e| CliError::new("engine", e))?;
        writeln!(
            out,
            "vertex {}: {} adjacent to {:?}",
            s.len() - 1,
            serde_json::to_string(&m)?,
            edges
        )?;
        loop {
            write!(out, "color> ")?;
            out.flush()?;
            let mut line = String::new();
            if input.read_line(&mut line)? == 0 || line.trim() == "q" {
                writeln!(out)?;
                return summary(out, &colors);
            }
            match line.trim().parse::<usize>() {
                Ok(c) if color_admissible(&s, &colors, c, forbid) => {
                    colors.push(c);
                    break;
                }
                Ok(c) => writeln!(out, "color {c} clashes with a neighbor")?,
                Err(_) => writeln!(out, "not a color")?,
            }
        }
    }
    summary(out, &colors)
}

fn summary(out: &mut dyn Write, colors: &[usize]) -> Result<(), CliError> {
    writeln!(
        out,
        "{}",
        serde_json::json!({ "rounds": colors.len(), "colors_used": palette_size(colors), "coloring": colors })
    )?;
    Ok(())
}
