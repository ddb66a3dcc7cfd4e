use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use topo2x2::families::family_census;
use topo2x2::io::{
    export_atlas_json, export_chart_svg, export_dot, export_ui_data, ChartOptions, DotFilter,
    GameIdentifier, GameRecord,
};
use topo2x2::normalize::sample_census;
use topo2x2::ordinal::canonicalize;
use topo2x2::ties::{canonical_games, enumerate_ties_census, half_swap_path, tie_lattice};
use topo2x2::{
    build_atlas, normalize_game, Distribution, OrdinalGame, PreferenceClass, RealGame,
    StrictGameId, SwapKind, TopologyAtlas,
};

/// Explore the topology of 2x2 ordinal games.
#[derive(Parser)]
#[command(name = "topo2x2", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the 144 strict games (or all 1413 with --ties).
    Enumerate {
        #[arg(long)]
        ties: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Full report for one game: id, payoff string, equilibria, family.
    Analyze { game: String },
    /// Games one swap (or half-swap) away.
    Neighbors {
        game: String,
        /// Comma-separated subset of low,mid,high,half.
        #[arg(long, value_delimiter = ',', default_values = ["low", "mid", "high"])]
        kinds: Vec<Kind>,
    },
    /// Shortest swap path between two strict games.
    Path {
        from: String,
        to: String,
        #[arg(long, value_delimiter = ',', default_values = ["low", "mid", "high"])]
        kinds: Vec<Kind>,
    },
    /// Shortest half-swap path between any two games.
    Tiepath { from: String, to: String },
    /// Game counts by family, or by preference-class pair with --ties.
    Census {
        #[arg(long)]
        ties: bool,
        #[arg(long, value_enum)]
        by: Option<By>,
    },
    /// Write the atlas as JSON, Graphviz, SVG chart or explorer data.
    Export {
        #[arg(long, value_enum)]
        what: What,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Torus scroll `dr,dc` for chart and ui-data.
        #[arg(long, value_parser = parse_scroll)]
        scroll: Option<(u8, u8)>,
        /// Draw order graphs in the chart cells.
        #[arg(long)]
        order_graphs: bool,
        /// Restrict DOT output to one layer.
        #[arg(long, conflicts_with = "tile")]
        layer: Option<u8>,
        /// Restrict DOT output to the tile holding this strict game.
        #[arg(long)]
        tile: Option<String>,
    },
    /// Sample random real games and count where they land.
    Sample {
        #[arg(long, default_value_t = 144_000)]
        n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Dist::Uniform)]
        dist: Dist,
    },
    /// Map a real-valued game onto the atlas.
    Normalize {
        /// Eight values: rUL cUL rUR cUR rDL cDL rDR cDR (commas or spaces).
        #[arg(long, allow_hyphen_values = true)]
        payoffs: String,
        #[arg(long, default_value_t = 0.0)]
        tol: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Low,
    Mid,
    High,
    Half,
}

#[derive(Clone, Copy, ValueEnum)]
enum By {
    Family,
    Class,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Atlas,
    AtlasTies,
    Dot,
    Chart,
    UiData,
}

#[derive(Clone, Copy, ValueEnum)]
enum Dist {
    Uniform,
    Gaussian,
}

fn parse_scroll(s: &str) -> Result<(u8, u8), String> {
    let (a, b) = s.split_once(',').ok_or("expected dr,dc")?;
    let parse = |t: &str| t.trim().parse::<u8>().map_err(|e| e.to_string());
    Ok((parse(a)? % 6, parse(b)? % 6))
}

fn swap_kinds(kinds: &[Kind]) -> Vec<SwapKind> {
    let mut out = Vec::new();
    for (k, s) in [(Kind::Low, SwapKind::Low), (Kind::Mid, SwapKind::Mid), (Kind::High, SwapKind::High)] {
        if kinds.contains(&k) {
            out.push(s);
        }
    }
    out
}

fn resolve(text: &str) -> topo2x2::Result<(OrdinalGame, GameRecord)> {
    let ident = GameIdentifier::parse(text)?;
    let canon = match ident {
        GameIdentifier::Payoff(g) => canonicalize(&g),
        _ => canonicalize(&ident.game()),
    };
    let mut record = GameRecord::new(&canon.game);
    record.quadrant = canon.quadrant;
    Ok((canon.game, record))
}

fn strict_id(atlas: &TopologyAtlas, text: &str) -> anyhow::Result<StrictGameId> {
    let (game, _) = resolve(text)?;
    Ok(atlas.locate(&game)?)
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn enumerate(ties: bool, format: Format) -> String {
    let games = if ties {
        canonical_games()
    } else {
        build_atlas().expect("atlas").games().map(|(_, g)| g).collect()
    };
    let records: Vec<GameRecord> = games.iter().map(GameRecord::new).collect();
    match format {
        Format::Json => pretty(&records),
        Format::Csv => {
            let mut s = String::from("id,payoff_string,row_class,col_class,family,subfamily,nash\n");
            for r in &records {
                let nash: Vec<String> =
                    r.analysis.nash_payoffs.iter().map(|(a, b)| format!("({a},{b})")).collect();
                let (fam, sub) = match r.family {
                    Some(f) => (format!("{:?}", f.family), f.subfamily.map(|s| format!("{s:?}")).unwrap_or_default()),
                    None => (String::new(), String::new()),
                };
                s.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    r.id,
                    csv_field(&r.payoff_string),
                    r.class_pair[0],
                    r.class_pair[1],
                    fam,
                    sub,
                    nash.join(" ")
                ));
            }
            s
        }
    }
}

fn neighbors(text: &str, kinds: &[Kind]) -> anyhow::Result<String> {
    let (game, record) = resolve(text)?;
    let mut out = Vec::new();
    let strict = swap_kinds(kinds);
    if !strict.is_empty() && game.is_strict() {
        let atlas = build_atlas()?;
        let id = atlas.locate(&game)?;
        for (swap, to) in atlas.neighbors(id) {
            if strict.contains(&swap.kind) {
                out.push(json!({
                    "move": format!("{:?}-{:?}", swap.player, swap.kind),
                    "id": to,
                    "payoff_string": topo2x2::io::encode_game_string(&atlas.resolve(to)),
                }));
            }
        }
    } else if !strict.is_empty() && !kinds.contains(&Kind::Half) {
        bail!(topo2x2::Error::NotStrict);
    }
    if kinds.contains(&Kind::Half) {
        for (op, to) in tie_lattice().neighbors(&game) {
            let r = GameRecord::new(&to);
            out.push(json!({ "move": op.to_string(), "id": r.id, "payoff_string": r.payoff_string }));
        }
    }
    Ok(pretty(&json!({ "game": record.id, "neighbors": out })))
}

fn census(ties: bool, by: Option<By>) -> anyhow::Result<String> {
    let by = by.unwrap_or(if ties { By::Class } else { By::Family });
    Ok(match by {
        By::Family => {
            if ties {
                bail!("families are defined for strict games only; use --by class with --ties");
            }
            pretty(&family_census(&build_atlas()?))
        }
        By::Class => {
            let census = if ties {
                enumerate_ties_census()
            } else {
                // strict games all sit in the H x H block
                let mut c = enumerate_ties_census();
                c.matrix = [[0; 8]; 8];
                c.matrix[7][7] = 144;
                c.total = 144;
                c.player_swap_total = 78;
                c
            };
            let axis: Vec<&str> = PreferenceClass::ALL.iter().map(|c| c.label()).collect();
            pretty(&json!({
                "axis": axis,
                "matrix": census.matrix,
                "total": census.total,
                "player_swap_total": census.player_swap_total,
            }))
        }
    })
}

fn export(
    what: What,
    scroll: Option<(u8, u8)>,
    order_graphs: bool,
    layer: Option<u8>,
    tile: Option<String>,
) -> anyhow::Result<String> {
    let atlas = build_atlas()?;
    let mut opts = ChartOptions { order_graphs, ..ChartOptions::default() };
    if let Some(s) = scroll {
        opts.scroll = s;
    }
    Ok(match what {
        What::Atlas => export_atlas_json(&atlas, false),
        What::AtlasTies => export_atlas_json(&atlas, true),
        What::Dot => {
            let filter = match (layer, tile) {
                (Some(l), _) if (1..=4).contains(&l) => DotFilter::Layer(l),
                (Some(l), _) => bail!(topo2x2::Error::InvalidId(format!("layer {l}"))),
                (None, Some(t)) => DotFilter::TileOf(strict_id(&atlas, &t)?),
                (None, None) => DotFilter::All,
            };
            export_dot(&atlas, filter)
        }
        What::Chart => export_chart_svg(&atlas, &opts),
        What::UiData => export_ui_data(&atlas, &opts),
    })
}

fn sample(n: u64, seed: u64, dist: Dist) -> anyhow::Result<String> {
    let dist = match dist {
        Dist::Uniform => Distribution::Uniform,
        Dist::Gaussian => Distribution::Gaussian,
    };
    let census = sample_census(n, seed, dist)?;
    let counts: serde_json::Map<String, Value> =
        census.counts.iter().map(|(id, n)| (id.to_string(), json!(n))).collect();
    let (min, max) = StrictGameId::all()
        .map(|id| census.count(id))
        .fold((u64::MAX, 0), |(lo, hi), c| (lo.min(c), hi.max(c)));
    Ok(pretty(&json!({
        "n": census.n,
        "seed": census.seed,
        "distribution": census.distribution,
        "ties": census.ties,
        "min_count": min,
        "max_count": max,
        "counts": counts,
    })))
}

fn normalize(payoffs: &str, tol: f64) -> anyhow::Result<String> {
    let values: Vec<f64> = payoffs
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<f64>().map_err(|e| topo2x2::Error::InvalidRealGame(format!("{t:?}: {e}"))))
        .collect::<Result<_, _>>()?;
    let values: [f64; 8] = values
        .try_into()
        .map_err(|v: Vec<f64>| topo2x2::Error::InvalidRealGame(format!("expected 8 values, got {}", v.len())))?;
    let norm = normalize_game(&RealGame::from_flat(values, tol)?);
    let mut record = GameRecord::new(&norm.ordinal);
    record.quadrant = norm.quadrant;
    Ok(pretty(&json!({ "game": record, "unit_payoffs": norm.unit_payoffs })))
}

fn run(cli: Cli) -> anyhow::Result<(String, Option<PathBuf>)> {
    let text = match cli.command {
        Command::Enumerate { ties, format } => enumerate(ties, format),
        Command::Analyze { game } => pretty(&resolve(&game)?.1),
        Command::Neighbors { game, kinds } => neighbors(&game, &kinds)?,
        Command::Path { from, to, kinds } => {
            let atlas = build_atlas()?;
            let (a, b) = (strict_id(&atlas, &from)?, strict_id(&atlas, &to)?);
            let kinds = swap_kinds(&kinds);
            if kinds.is_empty() {
                bail!("--kinds must name at least one of low, mid, high");
            }
            let steps = atlas.shortest_path(a, b, &kinds)?;
            pretty(&json!({ "from": a, "to": b, "length": steps.len(), "steps": steps }))
        }
        Command::Tiepath { from, to } => {
            let (a, ra) = resolve(&from)?;
            let (b, rb) = resolve(&to)?;
            let steps: Vec<Value> = half_swap_path(&a, &b)
                .iter()
                .map(|s| {
                    json!({
                        "op": s.op.to_string(),
                        "from": GameRecord::new(&s.from).id,
                        "to": GameRecord::new(&s.to).id,
                    })
                })
                .collect();
            pretty(&json!({ "from": ra.id, "to": rb.id, "length": steps.len(), "steps": steps }))
        }
        Command::Census { ties, by } => census(ties, by)?,
        Command::Export { what, out, scroll, order_graphs, layer, tile } => {
            return Ok((export(what, scroll, order_graphs, layer, tile)?, out));
        }
        Command::Sample { n, seed, dist } => sample(n, seed, dist)?,
        Command::Normalize { payoffs, tol } => normalize(&payoffs, tol)?,
    };
    Ok((text, None))
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<topo2x2::Error>() {
        Some(topo2x2::Error::ConstructionInvariantViolation(_)) => 3,
        Some(_) => 2,
        None => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = run(cli).and_then(|(text, out)| match out {
        Some(path) => fs::write(&path, text).with_context(|| format!("writing {}", path.display())),
        None => std::io::stdout().write_all(text.as_bytes()).context("writing output"),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
