//! Game, presenter and algorithm selection by name.

use crate::error::CliError;
use crate::{GameArgs, StrategyArgs};
use gamegraph::engine::{Algorithm, EmptyPresenter, Game, MinimaxAlgorithm, Presenter, Scenario};
use gamegraph::games::{AbsGame, CocoGame, IfilGame, IntGame, IovGame, PlainGame, WithBlocks};
use gamegraph::strategies::{
    AbsOnline, CocoOnline, Figure2Presenter, Figure5Presenter, FirstFit, IfilOnline, IovOnline, PresentPresenter,
    RandomAlgorithm, RandomPresenter,
};
use serde::Serialize;
use std::sync::Arc;

/// Block bound used by the on-line algorithms when none is given. It only
/// enters the reported palette bound.
pub const UNBOUNDED_BLOCKS: usize = 1 << 20;

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Assertion {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Assertion {
    pub fn new(name: impl Into<String>, passed: bool, detail: Option<String>) -> Self {
        Assertion {
            name: name.into(),
            passed,
            detail,
        }
    }
}

/// A game with the strategies that only make sense for it.
pub trait CliGame: Game + Clone + 'static {
    fn presenter(&self, _name: &str, _args: &StrategyArgs) -> Option<Arc<dyn Presenter<Self::Move>>> {
        None
    }

    fn algorithm(&self, _name: &str, _args: &StrategyArgs) -> Option<Box<dyn Algorithm<Self::Move>>> {
        None
    }

    /// Extra checks on a finished run.
    fn assertions(&self, _args: &StrategyArgs, _s: &Scenario<Self::Move>, _colors: &[usize]) -> Vec<Assertion> {
        Vec::new()
    }
}

impl CliGame for IntGame {
    fn presenter(&self, name: &str, _: &StrategyArgs) -> Option<Arc<dyn Presenter<Self::Move>>> {
        (name == "figure2").then(|| Arc::new(Figure2Presenter) as Arc<dyn Presenter<_>>)
    }
}

impl CliGame for IovGame {
    fn algorithm(&self, name: &str, args: &StrategyArgs) -> Option<Box<dyn Algorithm<Self::Move>>> {
        iov_algorithm(self.k, name, args)
    }
}

fn iov_algorithm(k: usize, name: &str, args: &StrategyArgs) -> Option<Box<dyn Algorithm<gamegraph::geometry::Interval>>> {
    match name {
        "iov_online" => Some(Box::new(IovOnline::new(k, args.b.unwrap_or(UNBOUNDED_BLOCKS)))),
        "iov3_online" => Some(Box::new(IovOnline::triangle_free(k))),
        _ => None,
    }
}

impl CliGame for WithBlocks<IovGame> {
    fn algorithm(&self, name: &str, args: &StrategyArgs) -> Option<Box<dyn Algorithm<Self::Move>>> {
        iov_algorithm(self.inner.k, name, &StrategyArgs { b: Some(self.b), ..args.clone() })
    }
}

fn present(k: usize, args: &StrategyArgs) -> PresentPresenter {
    PresentPresenter::new(k, args.m.unwrap_or(2))
}

fn present_assertions(k: usize, args: &StrategyArgs, s: &Scenario<gamegraph::games::AbsRow>, colors: &[usize]) -> Vec<Assertion> {
    if args.presenter.as_deref() != Some("present") {
        return Vec::new();
    }
    let p = present(k, args);
    let colors_used = gamegraph::graph::palette_size(colors);
    let mut out = vec![Assertion::new(
        "forced_colors",
        colors_used >= p.forced_colors(),
        Some(format!("{colors_used} >= {}", p.forced_colors())),
    )];
    match p.audit(s, colors) {
        Ok(a) => {
            out.push(Assertion::new(
                "vertex_bound",
                a.vertices as u128 <= a.vertex_bound,
                Some(format!("{} <= {}", a.vertices, a.vertex_bound)),
            ));
            out.push(Assertion::new(
                "test_bound",
                a.tests as u128 <= a.test_bound,
                Some(format!("{} <= {}", a.tests, a.test_bound)),
            ));
            out.push(Assertion::new(
                "returns_checked",
                true,
                Some(a.returns_checked.to_string()),
            ));
        }
        Err(e) => out.push(Assertion::new("audit", false, Some(e.to_string()))),
    }
    out
}

impl CliGame for AbsGame {
    fn presenter(&self, name: &str, args: &StrategyArgs) -> Option<Arc<dyn Presenter<Self::Move>>> {
        (name == "present").then(|| Arc::new(present(self.k, args)) as Arc<dyn Presenter<_>>)
    }

    fn algorithm(&self, name: &str, args: &StrategyArgs) -> Option<Box<dyn Algorithm<Self::Move>>> {
        (name == "abs_online").then(|| Box::new(AbsOnline::new(self.k, args.b.unwrap_or(UNBOUNDED_BLOCKS))) as _)
    }

    fn assertions(&self, args: &StrategyArgs, s: &Scenario<Self::Move>, colors: &[usize]) -> Vec<Assertion> {
        present_assertions(self.k, args, s, colors)
    }
}

impl CliGame for WithBlocks<AbsGame> {
    fn presenter(&self, name: &str, args: &StrategyArgs) -> Option<Arc<dyn Presenter<Self::Move>>> {
        self.inner.presenter(name, args)
    }

    fn algorithm(&self, name: &str, _: &StrategyArgs) -> Option<Box<dyn Algorithm<Self::Move>>> {
        (name == "abs_online").then(|| Box::new(AbsOnline::new(self.inner.k, self.b)) as _)
    }

    fn assertions(&self, args: &StrategyArgs, s: &Scenario<Self::Move>, colors: &[usize]) -> Vec<Assertion> {
        present_assertions(self.inner.k, args, s, colors)
    }
}

impl CliGame for CocoGame {
    fn presenter(&self, name: &str, _: &StrategyArgs) -> Option<Arc<dyn Presenter<Self::Move>>> {
        (name == "figure5").then(|| Arc::new(Figure5Presenter) as Arc<dyn Presenter<_>>)
    }

    fn algorithm(&self, name: &str, _: &StrategyArgs) -> Option<Box<dyn Algorithm<Self::Move>>> {
        (name == "coco_online").then(|| Box::new(CocoOnline::new(self.k)) as _)
    }
}

impl CliGame for IfilGame {
    fn algorithm(&self, name: &str, _: &StrategyArgs) -> Option<Box<dyn Algorithm<Self::Move>>> {
        (name == "ifil_online").then(|| Box::new(IfilOnline::new(self.k, self.b)) as _)
    }
}

impl CliGame for PlainGame {}

/// Resolved game choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GameSpec {
    Int(usize),
    Iov(usize),
    Iov3(usize),
    IovBlocks(usize, usize),
    Abs(usize),
    AbsBlocks(usize, usize),
    Coco(usize),
    Ifil(usize, usize),
    Plain(usize),
}

/// The game a presenter belongs to when `--game` is omitted.
fn game_for_presenter(p: Option<&str>) -> Option<&'static str> {
    match p? {
        "figure2" => Some("int"),
        "figure5" => Some("coco"),
        "present" => Some("abs"),
        _ => None,
    }
}

impl GameSpec {
    pub fn resolve(g: &GameArgs, presenter: Option<&str>) -> Result<GameSpec, CliError> {
        let name = match g.game.as_deref() {
            Some(n) => n,
            None => game_for_presenter(presenter)
                .ok_or_else(|| CliError::usage("--game is required for this presenter"))?,
        };
        let k = g.k.unwrap_or(2);
        if k == 0 {
            return Err(CliError::usage("--k must be at least 1"));
        }
        Ok(match (name, g.b) {
            ("int", None) => GameSpec::Int(k),
            ("iov", None) => GameSpec::Iov(k),
            ("iov", Some(b)) => GameSpec::IovBlocks(k, b),
            ("iov3", None) => GameSpec::Iov3(k),
            ("abs", None) => GameSpec::Abs(k),
            ("abs", Some(b)) => GameSpec::AbsBlocks(k, b),
            ("coco", None) => GameSpec::Coco(k),
            ("ifil", b) => GameSpec::Ifil(k, b.unwrap_or(4)),
            ("plain", None) => GameSpec::Plain(k),
            ("int" | "iov3" | "coco" | "plain", Some(_)) => {
                return Err(CliError::usage(format!("--b is not supported by game {name}")))
            }
            _ => return Err(CliError::usage(format!("unknown game {name:?}"))),
        })
    }

    /// Parses a game id such as `abs(3)` or `ifil(2,4)`.
    pub fn parse_id(id: &str) -> Result<GameSpec, CliError> {
        let bad = || CliError::usage(format!("unrecognized game id {id:?}"));
        let (name, rest) = id.split_once('(').ok_or_else(bad)?;
        let nums: Vec<usize> = rest
            .strip_suffix(')')
            .ok_or_else(bad)?
            .split(',')
            .map(|t| t.trim().parse().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        let args = GameArgs {
            game: Some(name.to_string()),
            k: nums.first().copied(),
            b: nums.get(1).copied(),
        };
        if nums.len() > 2 {
            return Err(bad());
        }
        GameSpec::resolve(&args, None)
    }

    pub fn default_presenter(&self) -> &'static str {
        match self {
            GameSpec::Int(_) => "figure2",
            GameSpec::Coco(_) => "figure5",
            GameSpec::Abs(_) | GameSpec::AbsBlocks(..) => "present",
            _ => "random",
        }
    }
}

/// Runs `$body` with `$g` bound to the concrete game of a [`GameSpec`].
#[macro_export]
macro_rules! with_game {
    ($spec:expr, $g:ident => $body:expr) => {{
        use gamegraph::games::*;
        match $spec {
            $crate::select::GameSpec::Int(k) => {
                let $g = IntGame::new(k);
                $body
            }
            $crate::select::GameSpec::Iov(k) => {
                let $g = IovGame::new(k);
                $body
            }
            $crate::select::GameSpec::Iov3(k) => {
                let $g = IovGame::triangle_free(k);
                $body
            }
            $crate::select::GameSpec::IovBlocks(k, b) => {
                let $g = WithBlocks::new(IovGame::new(k), b);
                $body
            }
            $crate::select::GameSpec::Abs(k) => {
                let $g = AbsGame::new(k);
                $body
            }
            $crate::select::GameSpec::AbsBlocks(k, b) => {
                let $g = WithBlocks::new(AbsGame::new(k), b);
                $body
            }
            $crate::select::GameSpec::Coco(k) => {
                let $g = CocoGame::new(k);
                $body
            }
            $crate::select::GameSpec::Ifil(k, b) => {
                let $g = IfilGame::new(k, b);
                $body
            }
            $crate::select::GameSpec::Plain(k) => {
                let $g = PlainGame::new(k);
                $body
            }
        }
    }};
}

pub fn build_presenter<G: CliGame>(game: &G, name: &str, args: &StrategyArgs) -> Result<Arc<dyn Presenter<G::Move>>, CliError> {
    if let Some(p) = game.presenter(name, args) {
        return Ok(p);
    }
    match name {
        "random" => Ok(Arc::new(RandomPresenter::new(Arc::new(game.clone()), args.seed, args.rounds))),
        "empty" => Ok(Arc::new(EmptyPresenter)),
        _ => Err(CliError::usage(format!("presenter {name:?} is not available for {}", game.name()))),
    }
}

pub fn build_algorithm<G: CliGame>(
    game: &G,
    name: &str,
    args: &StrategyArgs,
    seed: u64,
    presenter: &Arc<dyn Presenter<G::Move>>,
) -> Result<Box<dyn Algorithm<G::Move>>, CliError> {
    if let Some(a) = game.algorithm(name, args) {
        return Ok(a);
    }
    match name {
        "first_fit" => Ok(Box::new(FirstFit)),
        "random" => Ok(Box::new(RandomAlgorithm::new(seed, game.forbidden_class_clique()))),
        "minimax" => Ok(Box::new(MinimaxAlgorithm::new(Arc::new(game.clone()), presenter.clone()))),
        _ => Err(CliError::usage(format!("algorithm {name:?} is not available for {}", game.name()))),
    }
}
