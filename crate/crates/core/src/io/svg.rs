use std::fmt::Write;

use crate::atlas::{StrictGameId, TopologyAtlas};
use crate::families::{classify_family, Family};
use crate::normalize::{normalize_ordinal, order_graph_points};
use crate::ordinal::{analyze_game, Cell};

const CELL: usize = 64;
const MARGIN: usize = 24;
const LEGEND_HEIGHT: usize = 150;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChartOptions {
    /// Torus scroll applied to rows and columns of every layer.
    pub scroll: (u8, u8),
    /// Draw a small order graph in each cell.
    pub order_graphs: bool,
}

impl Default for ChartOptions {
    /// Scroll so the Prisoner's Dilemma tile (rows and columns 6 and 1) sits
    /// against the chart center.
    fn default() -> Self {
        ChartOptions { scroll: (5, 5), order_graphs: false }
    }
}

pub fn family_color(family: Family) -> &'static str {
    match family {
        Family::WinWin => "#8fd18f",
        Family::Biased => "#a9cdef",
        Family::SecondBest => "#f3e08a",
        Family::Unfair => "#f4b183",
        Family::PdFamily => "#e58a8a",
        Family::Cyclic => "#c9b3e6",
    }
}

/// Grid position `(x, y)` of a game on the 12×12 chart, `y` counted from the
/// top. Layers sit SW (1), NW (2), NE (3), SE (4); within a layer row 1 is
/// drawn southmost and column 1 westmost before scrolling.
pub fn cell_origin(id: StrictGameId, options: &ChartOptions) -> (usize, usize) {
    let (dr, dc) = options.scroll;
    let row_pos = (id.row as usize - 1 + dr as usize) % 6;
    let col_pos = (id.col as usize - 1 + dc as usize) % 6;
    let (west, south) = match id.layer {
        1 => (0, 0),
        2 => (0, 6),
        3 => (6, 6),
        _ => (6, 0),
    };
    (west + col_pos, 11 - (south + row_pos))
}

pub fn export_chart_svg(atlas: &TopologyAtlas, options: &ChartOptions) -> String {
    let grid = 12 * CELL;
    let width = grid + 2 * MARGIN;
    let height = grid + 2 * MARGIN + LEGEND_HEIGHT;
    let mut s = String::new();
    writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\" font-family=\"sans-serif\">"
    )
    .unwrap();
    writeln!(s, "<rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>").unwrap();

    for (id, game) in atlas.games() {
        let (gx, gy) = cell_origin(id, options);
        let x = MARGIN + gx * CELL;
        let y = MARGIN + gy * CELL;
        let family = classify_family(&game).expect("strict").family;
        let report = analyze_game(&game);
        writeln!(
            s,
            "<g class=\"game\" id=\"g{id}\" data-family=\"{family:?}\">\
             <rect x=\"{x}\" y=\"{y}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"{}\" stroke=\"#666\" stroke-width=\"0.5\"/>",
            family_color(family)
        )
        .unwrap();
        writeln!(
            s,
            "<text x=\"{}\" y=\"{}\" font-size=\"8\" fill=\"#333\">{id}</text>",
            x + 2,
            y + 9
        )
        .unwrap();
        for cell in Cell::ALL {
            let cx = x + 18 + (cell.index() % 2) * 26;
            let cy = y + 28 + (cell.index() / 2) * 20;
            let (r, c) = game.payoff(cell);
            if report.nash_profiles.contains(&cell) {
                writeln!(
                    s,
                    "<ellipse class=\"nash\" cx=\"{cx}\" cy=\"{}\" rx=\"12\" ry=\"8\" fill=\"none\" stroke=\"black\"/>",
                    cy - 4
                )
                .unwrap();
            }
            let weight = if report.pareto_optimal.contains(&cell) { "bold" } else { "normal" };
            writeln!(
                s,
                "<text x=\"{cx}\" y=\"{cy}\" font-size=\"10\" font-weight=\"{weight}\" text-anchor=\"middle\">{r},{c}</text>"
            )
            .unwrap();
        }
        if options.order_graphs {
            let pts = order_graph_points(&normalize_ordinal(&game));
            let (ox, oy, size) = (x + CELL - 16, y + 2, 13.0);
            writeln!(
                s,
                "<rect x=\"{ox}\" y=\"{oy}\" width=\"14\" height=\"14\" fill=\"white\" stroke=\"#999\" stroke-width=\"0.3\"/>"
            )
            .unwrap();
            for (_, px, py) in pts {
                writeln!(
                    s,
                    "<circle class=\"order\" cx=\"{:.2}\" cy=\"{:.2}\" r=\"1\"/>",
                    ox as f64 + 0.5 + px * size,
                    oy as f64 + 0.5 + (1.0 - py) * size
                )
                .unwrap();
            }
        }
        s.push_str("</g>\n");
    }

    // layer and tile gridlines
    for k in (0..=12).step_by(2) {
        let p = MARGIN + k * CELL;
        let w = if k % 6 == 0 { 3 } else { 1 };
        writeln!(
            s,
            "<line x1=\"{p}\" y1=\"{MARGIN}\" x2=\"{p}\" y2=\"{}\" stroke=\"black\" stroke-width=\"{w}\"/>",
            MARGIN + grid
        )
        .unwrap();
        writeln!(
            s,
            "<line x1=\"{MARGIN}\" y1=\"{p}\" x2=\"{}\" y2=\"{p}\" stroke=\"black\" stroke-width=\"{w}\"/>",
            MARGIN + grid
        )
        .unwrap();
    }

    let ly = MARGIN + grid + 24;
    writeln!(s, "<g class=\"legend\">").unwrap();
    for (i, family) in Family::ALL.into_iter().enumerate() {
        let lx = MARGIN + (i % 3) * 250;
        let y = ly + (i / 3) * 24;
        writeln!(
            s,
            "<rect x=\"{lx}\" y=\"{y}\" width=\"16\" height=\"16\" fill=\"{}\" stroke=\"#666\"/>\
             <text x=\"{}\" y=\"{}\" font-size=\"13\">{}</text>",
            family_color(family),
            lx + 22,
            y + 13,
            family.label()
        )
        .unwrap();
    }
    writeln!(
        s,
        "<text x=\"{MARGIN}\" y=\"{}\" font-size=\"12\">Ellipse = Nash equilibrium; bold = Pareto optimal. \
         Layers: 1 SW, 2 NW, 3 NE, 4 SE. Scroll ({}, {}).</text>",
        ly + 68,
        options.scroll.0,
        options.scroll.1
    )
    .unwrap();
    s.push_str("</g>\n</svg>\n");
    s
}
