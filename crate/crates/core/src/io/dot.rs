use std::collections::BTreeSet;
use std::fmt::Write;

use crate::atlas::{StrictGameId, TopologyAtlas};
use crate::families::classify_family;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DotFilter {
    All,
    Layer(u8),
    /// The tile containing this game.
    TileOf(StrictGameId),
}

impl DotFilter {
    fn admits(self, id: StrictGameId) -> bool {
        match self {
            DotFilter::All => true,
            DotFilter::Layer(l) => id.layer == l,
            DotFilter::TileOf(g) => id.tile() == g.tile(),
        }
    }
}

/// Graphviz description of the swap graph restricted to `filter`.
pub fn export_dot(atlas: &TopologyAtlas, filter: DotFilter) -> String {
    let nodes: BTreeSet<StrictGameId> =
        atlas.games().map(|(id, _)| id).filter(|&id| filter.admits(id)).collect();
    let mut out = String::from("graph topology {\n  node [shape=box, style=filled];\n");
    for (id, game) in atlas.games().filter(|(id, _)| nodes.contains(id)) {
        let family = classify_family(&game).expect("strict").family;
        writeln!(
            out,
            "  \"{id}\" [label=\"{id}\\n{game}\", class=\"{family:?}\", fillcolor=\"{}\"];",
            super::family_color(family)
        )
        .unwrap();
    }
    for e in atlas.edges() {
        if nodes.contains(&e.a) && nodes.contains(&e.b) {
            writeln!(
                out,
                "  \"{}\" -- \"{}\" [label=\"{:?}\", player=\"{:?}\"];",
                e.a, e.b, e.swap.kind, e.swap.player
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    out
}
