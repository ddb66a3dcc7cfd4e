use std::collections::{BTreeMap, BTreeSet};

use topo2x2::io::{
    cell_origin, export_atlas_json, export_chart_svg, export_dot, export_ui_data, ChartOptions,
    DotFilter, SCHEMA_VERSION,
};
use topo2x2::ordinal::is_symmetric;
use topo2x2::{build_atlas, StrictGameId};

fn parse(s: &str) -> serde_json::Value {
    serde_json::from_str(s).expect("valid JSON")
}

#[test]
fn atlas_json_shape() {
    let atlas = build_atlas().unwrap();
    let doc = parse(&export_atlas_json(&atlas, false));
    assert_eq!(doc["version"], SCHEMA_VERSION);
    assert_eq!(doc["games"].as_array().unwrap().len(), 144);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 432);
    assert_eq!(doc["hotspots"].as_array().unwrap().len(), 6);
    assert_eq!(doc["pipes"].as_array().unwrap().len(), 6);
    let pd = &doc["games"][0];
    assert_eq!(pd["strict_id"], "111");
    assert_eq!(pd["payoff_string"], "game(1,4;3,3/2,2;4,1)");

    let with_ties = parse(&export_atlas_json(&atlas, true));
    assert_eq!(with_ties["games"].as_array().unwrap().len(), 1413);
    let strict = with_ties["games"].as_array().unwrap().iter().filter(|g| !g["strict_id"].is_null()).count();
    assert_eq!(strict, 144);
}

#[test]
fn atlas_json_is_byte_stable() {
    let a = export_atlas_json(&build_atlas().unwrap(), true);
    let b = export_atlas_json(&build_atlas().unwrap(), true);
    assert_eq!(a, b);
}

fn dot_counts(dot: &str) -> (usize, usize) {
    let edges = dot.lines().filter(|l| l.contains(" -- ")).count();
    let nodes = dot.lines().filter(|l| l.contains("[label=") && !l.contains(" -- ")).count();
    (nodes, edges)
}

#[test]
fn dot_views() {
    let atlas = build_atlas().unwrap();
    assert_eq!(dot_counts(&export_dot(&atlas, DotFilter::All)), (144, 432));
    for layer in 1..=4 {
        let dot = export_dot(&atlas, DotFilter::Layer(layer));
        let (nodes, edges) = dot_counts(&dot);
        assert_eq!((nodes, edges), (36, 72), "layer {layer}");
    }
    let dot = export_dot(&atlas, DotFilter::TileOf(StrictGameId::PRISONERS_DILEMMA));
    assert_eq!(dot_counts(&dot), (4, 4));
    assert!(dot.lines().filter(|l| l.contains(" -- ")).all(|l| l.contains("Low")));
}

#[test]
fn chart_layout() {
    let atlas = build_atlas().unwrap();
    let opts = ChartOptions::default();
    let mut seen = BTreeSet::new();
    for (id, _) in atlas.games() {
        let (x, y) = cell_origin(id, &opts);
        assert!(x < 12 && y < 12);
        assert!(seen.insert((x, y)), "two games at {x},{y}");
    }
    // the twelve symmetric games run along one diagonal
    let diag: BTreeSet<_> = atlas
        .games()
        .filter(|(_, g)| is_symmetric(g))
        .map(|(id, _)| {
            let (x, y) = cell_origin(id, &opts);
            x + y
        })
        .collect();
    assert_eq!(diag, BTreeSet::from([11]));
    // Prisoner's Dilemma tile touches the chart center
    let pd_tile: Vec<_> = StrictGameId::PRISONERS_DILEMMA
        .tile()
        .games()
        .iter()
        .map(|&id| cell_origin(id, &opts))
        .collect();
    assert!(pd_tile.iter().any(|&(x, y)| (x == 5 || x == 6) && (y == 5 || y == 6)), "{pd_tile:?}");

    let svg = export_chart_svg(&atlas, &opts);
    assert_eq!(svg.matches("class=\"game\"").count(), 144);
    assert_eq!(svg.matches("data-family=").count(), 144);
    assert!(svg.matches("class=\"nash\"").count() > 0);
    let with_graphs = export_chart_svg(&atlas, &ChartOptions { order_graphs: true, ..opts });
    assert_eq!(with_graphs.matches("class=\"order\"").count(), 4 * 144);
}

#[test]
fn ui_data_matches_chart() {
    let atlas = build_atlas().unwrap();
    let opts = ChartOptions { scroll: (0, 0), ..Default::default() };
    let doc = parse(&export_ui_data(&atlas, &opts));
    assert_eq!(doc["ui"]["grid_size"], 12);
    let cells = doc["ui"]["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 144);
    let mut colors = BTreeMap::new();
    for c in cells {
        let id: StrictGameId = c["id"].as_str().unwrap().parse().unwrap();
        let (x, y) = cell_origin(id, &opts);
        assert_eq!((c["x"].as_u64().unwrap() as usize, c["y"].as_u64().unwrap() as usize), (x, y));
        *colors.entry(c["color"].as_str().unwrap().to_string()).or_insert(0) += 1;
    }
    assert_eq!(colors.len(), 6);
}
