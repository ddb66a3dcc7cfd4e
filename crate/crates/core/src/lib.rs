//! Topology of 2×2 ordinal games.
//!
//! * [`ordinal`]: games, canonical orientation and per-game solution concepts
//! * [`atlas`]: the 144 strict games, their coordinates and the swap graph
//! * [`families`]: payoff families from equilibrium outcomes
//! * [`ties`]: games with ties, half-swaps and the natural order
//! * [`normalize`]: real-valued games mapped into the atlas
//! * [`io`]: identifiers, JSON/DOT/SVG exports

pub mod atlas;
pub mod error;
pub mod families;
pub mod io;
pub mod normalize;
pub mod ordinal;
pub mod ties;

pub use atlas::{
    apply_swap, build_atlas, PathStep, StrictGameId, SwapEdge, SwapKind, TileId, TopologyAtlas,
};
pub use error::{Error, Result};
pub use families::{classify_family, Family, PayoffFamily, Subfamily};
pub use normalize::{normalize_game, rank_with_ties, Distribution, NormalizedGame, RealGame};
pub use ordinal::{analyze_game, make_game, AnalysisReport, Cell, OrdinalGame, Player, RankVector};
pub use ties::{PreferenceClass, TieLattice};
