use crate::error::CliError;
use crate::select::{build_algorithm, build_presenter, Assertion, CliGame, GameSpec};
use crate::{with_game, GameArgs, Output, StrategyArgs};
use gamegraph::engine::{extract_game_graph, game_value_bounded_with_budget, run_game, GameGraph, Scenario};
use gamegraph::games::{AbsRow, DownSet};
use gamegraph::geometry::{
    filaments_from_coco_game_graph, is_clean, model_graph, rectangles_from_int_game_graph, subtrees_from_abs_game_graph,
    svg_export, Interval, Mode, Model,
};
use gamegraph::graph::{
    chromatic_number_with_budget, clique_number, clique_number_with_budget, is_valid_coloring,
    kfree_chromatic_number_with_budget, palette_size, Graph,
};
use gamegraph::pipeline::{
    check_levels, clean_reduction_color, color_abs_game_graph, exact_clean_colorer, filament_color, kclique_bfs,
    overlap_model_order, Offline,
};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use std::path::Path;
use std::time::Instant;

fn emit(value: &impl Serialize, output: &Output, start: Instant) -> Result<(), CliError> {
    let mut v = serde_json::to_value(value)?;
    if output.timing {
        if let Value::Object(map) = &mut v {
            map.insert("wall_ms".into(), json!(start.elapsed().as_millis() as u64));
        }
    }
    let text = serde_json::to_string_pretty(&v)? + "\n";
    match &output.out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::new("io", format!("{}: {e}", path.display())))?;
    Ok(serde_json::from_str(&text)?)
}

/// What a JSON input file holds.
enum Input {
    Graph(Graph),
    Model(Model),
    GameGraph(Value, GameSpec),
}

fn classify(v: Value) -> Result<Input, CliError> {
    if v.get("kind").is_some() {
        let m: Model = serde_json::from_value(v)?;
        m.validate()?;
        Ok(Input::Model(m))
    } else if v.get("parent").is_some() {
        let id = v
            .get("game")
            .and_then(Value::as_str)
            .ok_or_else(|| CliError::new("json", "game graph without a game id"))?;
        let spec = GameSpec::parse_id(id)?;
        Ok(Input::GameGraph(v, spec))
    } else {
        Ok(Input::Graph(serde_json::from_value(v)?))
    }
}

fn graph_of(input: Input) -> Result<Graph, CliError> {
    match input {
        Input::Graph(g) => Ok(g),
        Input::GameGraph(v, _) => Ok(serde_json::from_value(v["graph"].clone())?),
        Input::Model(m) => Ok(model_graph(&m, default_mode(&m))?),
    }
}

fn default_mode(m: &Model) -> Mode {
    match m {
        Model::Filaments(_) => Mode::Intersection,
        _ => Mode::Overlap,
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Digest chain over the rounds: each entry hashes the previous digest,
/// the round and its color.
fn round_digests<M: Serialize + Clone>(s: &Scenario<M>, colors: &[usize]) -> Result<Vec<String>, CliError> {
    let mut prev = String::new();
    let mut out = Vec::with_capacity(s.len());
    for (r, c) in s.rounds().iter().zip(colors) {
        let mut h = Sha256::new();
        h.update(prev.as_bytes());
        h.update(serde_json::to_string(r)?.as_bytes());
        h.update(c.to_string().as_bytes());
        prev = hex(&h.finalize());
        out.push(prev.clone());
    }
    Ok(out)
}

#[derive(Serialize)]
struct RunReport {
    game: String,
    presenter: String,
    algorithm: String,
    seed: u64,
    rounds: usize,
    colors_used: usize,
    coloring: Vec<usize>,
    digest: String,
    round_digests: Vec<String>,
    assertions: Vec<Assertion>,
    #[serde(skip_serializing_if = "Option::is_none")]
    transcript: Option<Value>,
}

fn play_once<G: CliGame>(
    game: &G,
    presenter_name: &str,
    args: &StrategyArgs,
    transcript: bool,
) -> Result<RunReport, CliError> {
    let presenter = build_presenter(game, presenter_name, args)?;
    let mut algorithm = build_algorithm(game, &args.algorithm, args, args.seed, &presenter)?;
    let t = run_game(game, presenter.as_ref(), algorithm.as_mut())?;
    let colors = &t.coloring.colors;
    let g = t.scenario.graph();
    let mut assertions = vec![
        Assertion::new(
            "proper",
            is_valid_coloring(&g, colors, game.forbidden_class_clique()),
            None,
        ),
        Assertion::new("colors_used_is_palette", t.colors_used == palette_size(colors), None),
    ];
    assertions.extend(game.assertions(args, &t.scenario, colors));
    let digests = round_digests(&t.scenario, colors)?;
    let mut h = Sha256::new();
    h.update(serde_json::to_string(&t)?.as_bytes());
    Ok(RunReport {
        game: game.name(),
        presenter: presenter.name(),
        algorithm: algorithm.name(),
        seed: args.seed,
        rounds: t.rounds(),
        colors_used: t.colors_used,
        coloring: colors.clone(),
        digest: hex(&h.finalize()),
        round_digests: digests,
        assertions,
        transcript: if transcript {
            Some(serde_json::to_value(&t.scenario)?)
        } else {
            None
        },
    })
}

fn resolve(game: &GameArgs, strategy: &StrategyArgs) -> Result<(GameSpec, String, StrategyArgs), CliError> {
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
    Ok((spec, presenter, args))
}

fn force_trials<G: CliGame>(
    game: &G,
    presenter: &str,
    args: &StrategyArgs,
    trials: u64,
    jobs: usize,
    transcript: bool,
) -> Result<Vec<RunReport>, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::new("io", e.to_string()))?;
    pool.install(|| {
        (0..trials)
            .into_par_iter()
            .map(|i| {
                let a = StrategyArgs {
                    seed: args.seed.wrapping_add(i),
                    ..args.clone()
                };
                play_once(game, presenter, &a, transcript)
            })
            .collect()
    })
}

pub fn force(
    game: &GameArgs,
    strategy: &StrategyArgs,
    trials: u64,
    jobs: usize,
    transcript: bool,
    output: &Output,
) -> Result<bool, CliError> {
    let start = Instant::now();
    if trials == 0 {
        return Err(CliError::usage("--trials must be at least 1"));
    }
    let (spec, presenter, args) = resolve(game, strategy)?;
    let reports = with_game!(spec, g => force_trials(&g, &presenter, &args, trials, jobs, transcript))?;
    let ok = reports.iter().all(|r| r.assertions.iter().all(|a| a.passed));
    if reports.len() == 1 {
        emit(&reports[0], output, start)?;
    } else {
        let colors: Vec<usize> = reports.iter().map(|r| r.colors_used).collect();
        emit(
            &json!({
                "trials": reports.len(),
                "min_colors": colors.iter().min(),
                "max_colors": colors.iter().max(),
                "all_assertions_passed": ok,
                "runs": reports,
            }),
            output,
            start,
        )?;
    }
    Ok(ok)
}

fn extract_with<G: CliGame>(
    game: &G,
    presenter: &str,
    args: &StrategyArgs,
    color_bound: usize,
    budget: usize,
) -> Result<Value, CliError> {
    let p = build_presenter(game, presenter, args)?;
    let gg = extract_game_graph(game, p.as_ref(), color_bound, budget)?;
    Ok(serde_json::to_value(&gg)?)
}

pub fn extract(
    game: &GameArgs,
    strategy: &StrategyArgs,
    color_bound: usize,
    budget: usize,
    output: &Output,
) -> Result<bool, CliError> {
    let start = Instant::now();
    let (spec, presenter, args) = resolve(game, strategy)?;
    let v = with_game!(spec, g => extract_with(&g, &presenter, &args, color_bound, budget))?;
    emit(&v, output, start)?;
    Ok(true)
}

pub fn value(game: &GameArgs, rounds: usize, max_colors: usize, budget: usize, output: &Output) -> Result<bool, CliError> {
    let start = Instant::now();
    let spec = GameSpec::resolve(game, None)?;
    let (name, v) = with_game!(spec, g => (
        gamegraph::engine::Game::name(&g),
        game_value_bounded_with_budget(&g, rounds, max_colors, budget)
    ));
    let v = v?;
    emit(
        &json!({
            "game": name,
            "rounds": rounds,
            "max_colors": max_colors,
            "value": v,
            "exceeds_cap": v > max_colors,
        }),
        output,
        start,
    )?;
    Ok(true)
}

pub fn chromatic(file: &Path, kfree: Option<usize>, budget: u64, output: &Output) -> Result<bool, CliError> {
    let start = Instant::now();
    let g = graph_of(classify(read_json(file)?)?)?;
    let omega = clique_number_with_budget(&g, budget)?;
    let v = match kfree {
        None => json!({
            "n": g.n(),
            "omega": omega,
            "chromatic": chromatic_number_with_budget(&g, budget)?,
        }),
        Some(k) => {
            if k < 2 {
                return Err(CliError::usage("--kfree must be at least 2"));
            }
            json!({
                "n": g.n(),
                "omega": omega,
                "k": k,
                "kfree_chromatic": kfree_chromatic_number_with_budget(&g, k, budget)?,
            })
        }
    };
    emit(&v, output, start)?;
    Ok(true)
}

fn load_model(file: &Path) -> Result<Model, CliError> {
    match classify(read_json(file)?)? {
        Input::Model(m) => Ok(m),
        _ => Err(CliError::usage(format!("{} is not a model", file.display()))),
    }
}

pub fn decompose(file: &Path, k: Option<usize>, output: &Output) -> Result<bool, CliError> {
    let start = Instant::now();
    let model = load_model(file)?;
    let g = model_graph(&model, Mode::Overlap)?;
    let order = overlap_model_order(&model)?;
    let k = match k {
        Some(k) => k,
        None => clique_number(&g)?.max(1),
    };
    let dec = kclique_bfs(&g, &order, k);
    let check = check_levels(&model, &g, &dec, k);
    emit(
        &json!({
            "k": k,
            "order": order,
            "levels": dec.levels,
            "from_if": dec.from_if,
            "levels_ok": check.is_ok(),
            "failure": check.as_ref().err(),
        }),
        output,
        start,
    )?;
    Ok(check.is_ok())
}

fn binom2(n: usize) -> u128 {
    (n as u128) * (n as u128).saturating_sub(1) / 2
}

pub fn color_offline(file: &Path, offline: &str, output: &Output) -> Result<bool, CliError> {
    let start = Instant::now();
    let offline: Offline = serde_json::from_value(json!(offline))
        .map_err(|_| CliError::usage(format!("--offline must be exact or filament, not {offline:?}")))?;
    let (g, forbid, coloring, omega, bound_formula, bound, detail) = match classify(read_json(file)?)? {
        Input::Graph(_) => return Err(CliError::usage("color-offline needs a model or an abs game graph")),
        Input::Model(Model::Filaments(m)) => {
            let g = model_graph(&Model::Filaments(m.clone()), Mode::Intersection)?;
            let c = filament_color(&m)?;
            let bound: u128 = c.class_omega.iter().map(|&w| binom2(w + 1)).sum();
            let omega = clique_number(&g)?;
            let detail = json!({ "classes": c.classes, "class_omega": c.class_omega });
            (
                g,
                2,
                c.coloring,
                omega,
                "sum over domain classes of binom(omega_c + 1, 2)",
                bound,
                detail,
            )
        }
        Input::Model(m) => {
            let g = model_graph(&m, Mode::Overlap)?;
            let c = clean_reduction_color(&m, &exact_clean_colorer)?;
            let detail = json!({ "alpha": c.alpha });
            (
                g,
                2,
                c.coloring,
                c.omega,
                "product over j = 2..omega of 2 * alpha_j",
                c.bound,
                detail,
            )
        }
        Input::GameGraph(v, spec) => {
            let k = match spec {
                GameSpec::Abs(k) | GameSpec::AbsBlocks(k, _) => k,
                _ => return Err(CliError::usage("color-offline supports abs game graphs only")),
            };
            let gg: GameGraph<AbsRow> = serde_json::from_value(v)?;
            let c = color_abs_game_graph(&gg, k, offline)?;
            let omega = clique_number(&gg.graph)?;
            let bound = c.offline_palette as u128 * c.online_bound as u128;
            let detail = json!({
                "b": c.b,
                "heavy_paths": c.heavy_paths,
                "offline_palette": c.offline_palette,
                "class_palettes": c.class_palettes,
                "online_bound": c.online_bound,
            });
            (
                gg.graph,
                2,
                c.coloring,
                omega,
                "offline_palette * online_bound(k, floor(log2 n) + 1)",
                bound,
                detail,
            )
        }
    };
    if !is_valid_coloring(&g, &coloring.colors, forbid) {
        return Err(CliError::new("assertion", "computed coloring is not proper"));
    }
    let palette = coloring.palette_size();
    emit(
        &json!({
            "coloring": coloring,
            "certificate": {
                "omega": omega,
                "palette": palette,
                "bound_formula": bound_formula,
                "bound": bound.to_string(),
                "detail": detail,
            },
        }),
        output,
        start,
    )?;
    Ok(palette as u128 <= bound)
}

pub fn synthesize(file: &Path, svg: Option<&Path>, output: &Output) -> Result<bool, CliError> {
    let start = Instant::now();
    let Input::GameGraph(v, spec) = classify(read_json(file)?)? else {
        return Err(CliError::usage(format!("{} is not a game graph", file.display())));
    };
    let model = match spec {
        GameSpec::Int(k) => {
            let gg: GameGraph<Interval> = serde_json::from_value(v)?;
            Model::Rectangles(rectangles_from_int_game_graph(&gg, k)?)
        }
        GameSpec::Abs(k) | GameSpec::AbsBlocks(k, _) => {
            let gg: GameGraph<AbsRow> = serde_json::from_value(v)?;
            Model::Subtrees(subtrees_from_abs_game_graph(&gg, k)?)
        }
        GameSpec::Coco(k) => {
            let gg: GameGraph<DownSet> = serde_json::from_value(v)?;
            Model::Filaments(filaments_from_coco_game_graph(&gg, k)?)
        }
        other => return Err(CliError::usage(format!("no synthesis for {other:?} game graphs"))),
    };
    if let Some(p) = svg {
        std::fs::write(p, svg_export(&model))?;
    }
    emit(&model, output, start)?;
    Ok(true)
}

pub fn verify(
    file: &Path,
    expected: Option<&Path>,
    mode: Option<&str>,
    svg: Option<&Path>,
    output: &Output,
) -> Result<bool, CliError> {
    let start = Instant::now();
    let model = load_model(file)?;
    let mode = match mode {
        Some(m) => m.parse::<Mode>().map_err(|e| CliError::usage(e.to_string()))?,
        None => default_mode(&model),
    };
    let g = model_graph(&model, mode)?;
    let matches = match expected {
        Some(p) => {
            let e = graph_of(classify(read_json(p)?)?)?;
            Some(e.n() == g.n() && e.edges() == g.edges())
        }
        None => None,
    };
    let clean = match &model {
        Model::Filaments(_) => None,
        m => Some(is_clean(m)?),
    };
    if let Some(p) = svg {
        std::fs::write(p, svg_export(&model))?;
    }
    emit(
        &json!({
            "kind": model.kind(),
            "n": g.n(),
            "mode": mode,
            "edges": g.edges(),
            "matches": matches,
            "clean": clean,
        }),
        output,
        start,
    )?;
    Ok(matches != Some(false))
}
