use serde::Serialize;

use crate::atlas::{StrictGameId, TopologyAtlas};
use crate::families::{classify_family, PayoffFamily};
use crate::ordinal::{analyze_game, AnalysisReport, OrdinalGame, Quadrant};
use crate::ties::{class_pair, tie_lattice, NaturalOrderCoordinate};

use super::svg::{cell_origin, family_color, ChartOptions};
use super::{encode_game_string, encode_tie_coordinate};

pub const SCHEMA_VERSION: &str = "topo2x2-atlas/1";

#[derive(Debug, Clone, Serialize)]
pub struct GameRecord {
    /// Strict id for strict games, tie coordinate otherwise.
    pub id: String,
    pub strict_id: Option<StrictGameId>,
    pub tie_coordinate: String,
    pub payoff_string: String,
    pub row_ranks: [u8; 4],
    pub col_ranks: [u8; 4],
    pub analysis: AnalysisReport,
    pub family: Option<PayoffFamily>,
    pub class_pair: [&'static str; 2],
    pub natural_order: NaturalOrderCoordinate,
    pub quadrant: Quadrant,
}

impl GameRecord {
    pub fn new(game: &OrdinalGame) -> Self {
        let strict_id = crate::atlas::strict_game_id(game).ok();
        let tie_coordinate = encode_tie_coordinate(game);
        let (r, c) = class_pair(game);
        GameRecord {
            id: strict_id.map_or_else(|| tie_coordinate.clone(), |id| id.to_string()),
            strict_id,
            tie_coordinate,
            payoff_string: encode_game_string(game),
            row_ranks: game.row().as_array(),
            col_ranks: game.col().as_array(),
            analysis: analyze_game(game),
            family: classify_family(game).ok(),
            class_pair: [r.token(), c.token()],
            natural_order: tie_lattice().natural_order_coordinate(game),
            quadrant: Quadrant::NE,
        }
    }
}

#[derive(Serialize)]
struct EdgeRecord {
    a: StrictGameId,
    b: StrictGameId,
    player: crate::ordinal::Player,
    kind: crate::atlas::SwapKind,
}

#[derive(Serialize)]
struct HalfSwapRecord {
    a: String,
    b: String,
    op: String,
}

#[derive(Serialize)]
struct TieSection {
    edges: Vec<HalfSwapRecord>,
}

#[derive(Serialize)]
struct UiCell {
    id: StrictGameId,
    x: usize,
    y: usize,
    color: &'static str,
}

#[derive(Serialize)]
struct UiSection {
    default_scroll: (u8, u8),
    grid_size: usize,
    cells: Vec<UiCell>,
}

#[derive(Serialize)]
struct AtlasDocument {
    version: &'static str,
    games: Vec<GameRecord>,
    edges: Vec<EdgeRecord>,
    hotspots: Vec<[String; 2]>,
    pipes: Vec<[String; 4]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tie_lattice: Option<TieSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ui: Option<UiSection>,
}

fn document(atlas: &TopologyAtlas, with_ties: bool) -> AtlasDocument {
    let mut games: Vec<GameRecord> = atlas.games().map(|(_, g)| GameRecord::new(&g)).collect();
    let mut tie_section = None;
    if with_ties {
        let lattice = tie_lattice();
        games.extend(lattice.games().iter().filter(|g| !g.is_strict()).map(GameRecord::new));
        let name = |g: &OrdinalGame| match crate::atlas::strict_game_id(g) {
            Ok(id) => id.to_string(),
            Err(_) => encode_tie_coordinate(g),
        };
        let edges = lattice
            .edges()
            .map(|(a, b, op)| HalfSwapRecord { a: name(&a), b: name(&b), op: op.to_string() })
            .collect();
        tie_section = Some(TieSection { edges });
    }
    AtlasDocument {
        version: SCHEMA_VERSION,
        games,
        edges: atlas
            .edges()
            .iter()
            .map(|e| EdgeRecord { a: e.a, b: e.b, player: e.swap.player, kind: e.swap.kind })
            .collect(),
        hotspots: atlas.hotspots().iter().map(|h| h.tiles.map(|t| t.to_string())).collect(),
        pipes: atlas.pipes().iter().map(|p| p.tiles.map(|t| t.to_string())).collect(),
        tie_lattice: tie_section,
        ui: None,
    }
}

fn render(doc: &AtlasDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("atlas document serializes");
    s.push('\n');
    s
}

/// The versioned atlas document: strict games (plus all games with ties and
/// the half-swap lattice when `with_ties`), swap edges, hotspots and pipes.
pub fn export_atlas_json(atlas: &TopologyAtlas, with_ties: bool) -> String {
    render(&document(atlas, with_ties))
}

/// The atlas document with the chart layout the explorer draws from.
pub fn export_ui_data(atlas: &TopologyAtlas, options: &ChartOptions) -> String {
    let mut doc = document(atlas, false);
    let cells = atlas
        .games()
        .map(|(id, g)| {
            let (x, y) = cell_origin(id, options);
            let family = classify_family(&g).expect("strict");
            UiCell { id, x, y, color: family_color(family.family) }
        })
        .collect();
    doc.ui = Some(UiSection { default_scroll: options.scroll, grid_size: 12, cells });
    render(&doc)
}
